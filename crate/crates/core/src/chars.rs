//! Characters of `S_n` by the Murnaghan–Nakayama rule, the `A_n` character
//! table (restriction plus the split values on the diagonal-hook class), and
//! idempotents from the character formula `e = (χ(1)/|G|) Σ χ(g⁻¹) g`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{inv_mod, mul_mod, reduce, sqrt_mod_p};
use crate::galg::{Algebra, Element};
use crate::perm::{ClassLabel, Group, GroupKind, Split};
use crate::tableaux::{factorial, partitions_of, Partition};

/// `χ_λ(μ)` for `λ, μ ⊢ n`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(lambda.n(), mu.n(), "character and class must be partitions of the same n");
    let mut memo = HashMap::new();
    mn_rec(lambda.parts(), mu.parts(), &mut memo)
}

/// Removes rim hooks of length `mu[0]` via beta-numbers: moving a bead from
/// `b` to `b - k` strips a hook whose height is the number of beads jumped.
fn mn_rec(shape: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), mu.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &l)| l + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let next: Vec<usize> = moved.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).filter(|&l| l > 0).collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// A value `(rational2 + sqrt2·√radicand) / 2` in `Q(√radicand)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactValue {
    pub rational2: i64,
    pub sqrt2: i64,
    pub radicand: i64,
}

impl ExactValue {
    pub fn integer(v: i64) -> Self {
        ExactValue { rational2: 2 * v, sqrt2: 0, radicand: 1 }
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt2 == 0
    }

    /// Complex conjugate; `√r` is imaginary when `r < 0`.
    pub fn conj(&self) -> Self {
        if self.radicand < 0 {
            ExactValue { sqrt2: -self.sqrt2, ..*self }
        } else {
            *self
        }
    }

    /// The value in `F_p`, taking the canonical (smaller) root of the
    /// radicand; `None` when the radicand is a non-residue.
    pub fn reduce(&self, p: u64) -> Option<u64> {
        let root = if self.is_rational() { 0 } else { sqrt_mod_p(reduce(self.radicand, p), p).ok()? };
        let twice = (reduce(self.rational2, p) + mul_mod(reduce(self.sqrt2, p), root, p)) % p;
        Some(mul_mod(twice, inv_mod(2, p).ok()?, p))
    }

    pub fn to_f64(&self) -> Option<f64> {
        (self.radicand >= 0 || self.is_rational())
            .then(|| (self.rational2 as f64 + self.sqrt2 as f64 * (self.radicand as f64).sqrt()) / 2.0)
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.rational2 % 2 == 0 {
                write!(f, "{}", self.rational2 / 2)
            } else {
                write!(f, "{}/2", self.rational2)
            }
        } else {
            let sign = if self.sqrt2 < 0 { "-" } else { "+" };
            let coeff = if self.sqrt2.abs() == 1 { String::new() } else { self.sqrt2.abs().to_string() };
            write!(f, "({}{sign}{coeff}√{})/2", self.rational2, self.radicand)
        }
    }
}

/// Sum of products `Σ c·x·conj(y)` in exact arithmetic, scaled by 4.
#[derive(Default)]
struct ExactAccumulator {
    rational4: i128,
    irrational4: BTreeMap<i64, i128>,
}

impl ExactAccumulator {
    fn add_product(&mut self, weight: i128, x: &ExactValue, y: &ExactValue) {
        let y = y.conj();
        let (a1, b1, a2, b2) = (x.rational2 as i128, x.sqrt2 as i128, y.rational2 as i128, y.sqrt2 as i128);
        self.rational4 += weight * a1 * a2;
        if b1 != 0 && b2 != 0 {
            assert_eq!(x.radicand, y.radicand, "products across different radicands do not occur");
            self.rational4 += weight * b1 * b2 * x.radicand as i128;
        }
        if b1 != 0 {
            *self.irrational4.entry(x.radicand).or_default() += weight * b1 * a2;
        }
        if b2 != 0 {
            *self.irrational4.entry(y.radicand).or_default() += weight * a1 * b2;
        }
    }

    /// Whether the total is the integer `target`.
    fn equals(&self, target: i128) -> bool {
        self.rational4 == 4 * target && self.irrational4.values().all(|&v| v == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `χ_{λ±}` on the `A_n` class `class`, for self-conjugate `λ`.
///
/// Off the diagonal-hook type `h(λ)` this is `χ_λ^{S_n}/2`. On it, the `+`
/// character takes `(s + √p_λ)/2` on the `+` class and `(s - √p_λ)/2` on the
/// `-` class, with `s = (-1)^((n-r)/2)`.
pub fn an_character_value(lambda: &Partition, sign: Sign, class: &ClassLabel) -> Result<ExactValue> {
    let data = lambda.self_conj_data().ok_or_else(|| Error::Usage(format!("{lambda} is not self-conjugate")))?;
    if class.cycle_type != data.hook_type() {
        let full = mn_character(lambda, &class.cycle_type);
        assert_eq!(full % 2, 0, "χ_{lambda} on {} must be even", class.cycle_type);
        return Ok(ExactValue::integer(full / 2));
    }
    let same = matches!((sign, class.split), (Sign::Plus, Split::Plus) | (Sign::Minus, Split::Minus));
    if class.split == Split::None {
        return Err(Error::Usage(format!("class {class} of type h(λ) must carry a split label")));
    }
    Ok(ExactValue { rational2: data.sign(), sqrt2: if same { 1 } else { -1 }, radicand: data.p_lambda })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowLabel {
    /// `χ_λ = χ_λ^{S_n}|_{A_n}` for `λ ≠ λ'`; `lambda` precedes its conjugate in partition order.
    Paired {
        lambda: Partition,
        conjugate: Partition,
    },
    Split {
        lambda: Partition,
        sign: Sign,
    },
}

impl RowLabel {
    pub fn lambda(&self) -> &Partition {
        match self {
            RowLabel::Paired { lambda, .. } | RowLabel::Split { lambda, .. } => lambda,
        }
    }
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Paired { lambda, conjugate } => write!(f, "{{{lambda},{conjugate}}}"),
            RowLabel::Split { lambda, sign } => write!(f, "{lambda}{sign}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub label: ClassLabel,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub label: RowLabel,
    pub values: Vec<ExactValue>,
}

/// Irreducible characters of `A_n` over `C`, columns in the group's class order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnCharacterTable {
    pub n: usize,
    pub classes: Vec<ClassInfo>,
    pub rows: Vec<CharacterRow>,
}

impl AnCharacterTable {
    pub fn new(group: &Group) -> Result<Self> {
        if group.kind() != GroupKind::An {
            return Err(Error::Usage("the A_n character table needs the alternating group".into()));
        }
        let n = group.degree();
        let classes: Vec<ClassInfo> =
            group.classes().iter().map(|c| ClassInfo { label: c.label.clone(), size: c.size() }).collect();
        let mut rows = Vec::new();
        for lambda in partitions_of(n) {
            let conjugate = lambda.conjugate();
            if lambda == conjugate {
                for sign in [Sign::Plus, Sign::Minus] {
                    let values =
                        classes.iter().map(|c| an_character_value(&lambda, sign, &c.label)).collect::<Result<_>>()?;
                    rows.push(CharacterRow { label: RowLabel::Split { lambda: lambda.clone(), sign }, values });
                }
            } else if lambda > conjugate {
                let values =
                    classes.iter().map(|c| ExactValue::integer(mn_character(&lambda, &c.label.cycle_type))).collect();
                rows.push(CharacterRow { label: RowLabel::Paired { lambda, conjugate }, values });
            }
        }
        Ok(AnCharacterTable { n, classes, rows })
    }

    pub fn group_order(&self) -> usize {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn row_index(&self, label: &RowLabel) -> Option<usize> {
        self.rows.iter().position(|r| &r.label == label)
    }

    /// `Σ_C |C| χ_i(C) conj(χ_j(C)) = |G| δ_ij`, exactly.
    pub fn rows_orthonormal(&self) -> bool {
        let order = self.group_order() as i128;
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let mut acc = ExactAccumulator::default();
                for ((x, y), c) in a.values.iter().zip(&b.values).zip(&self.classes) {
                    acc.add_product(c.size as i128, x, y);
                }
                acc.equals(if i == j { order } else { 0 })
            })
        })
    }

    /// `Σ_χ χ(C) conj(χ(C')) = δ |G|/|C|`, exactly.
    pub fn columns_orthogonal(&self) -> bool {
        let order = self.group_order() as i128;
        (0..self.classes.len()).all(|c| {
            (0..self.classes.len()).all(|d| {
                let mut acc = ExactAccumulator::default();
                for row in &self.rows {
                    acc.add_product(1, &row.values[c], &row.values[d]);
                }
                acc.equals(if c == d { order / self.classes[c].size as i128 } else { 0 })
            })
        })
    }
}

/// `e = (χ(1)/|A_n|) Σ_g χ(g⁻¹) g` for row `row` of `table`.
pub fn idempotent_from_character(an: &Algebra, table: &AnCharacterTable, row: usize) -> Result<Element> {
    if an.kind() != GroupKind::An || an.degree() != table.n {
        return Err(Error::AmbientMismatch);
    }
    let p = an.p();
    let label = &table.rows[row].label;
    let reduced: Vec<u64> = table.rows[row]
        .values
        .iter()
        .map(|v| v.reduce(p).ok_or_else(|| Error::OutsidePrimeField(label.to_string())))
        .collect::<Result<_>>()?;
    let group = an.group();
    let degree = reduced[group.class_of(0)];
    let scalar = mul_mod(degree, inv_mod((group.order() as u64) % p, p)?, p);
    let coeffs = (0..group.order()).map(|g| mul_mod(scalar, reduced[group.class_of(group.inverse(g))], p)).collect();
    Ok(an.from_coeffs(coeffs))
}

/// `e_λ = (d_λ/n!) Σ_g χ_λ(g) g` in `F_p S_n`.
pub fn sn_idempotent_from_character(sn: &Algebra, lambda: &Partition) -> Result<Element> {
    if sn.kind() != GroupKind::Sn || sn.degree() != lambda.n() {
        return Err(Error::AmbientMismatch);
    }
    let p = sn.p();
    let group = sn.group();
    let per_class: Vec<i64> = group.classes().iter().map(|c| mn_character(lambda, &c.label.cycle_type)).collect();
    let nfact = (factorial(lambda.n()) % p as u128) as u64;
    let scalar = mul_mod((lambda.dimension() % p as u128) as u64, inv_mod(nfact, p)?, p);
    let coeffs = (0..group.order()).map(|g| mul_mod(scalar, reduce(per_class[group.class_of(g)], p), p)).collect();
    Ok(sn.from_coeffs(coeffs))
}
