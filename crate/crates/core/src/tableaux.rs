//! Partitions, hook lengths, standard Young tableaux and the classification of
//! self-conjugate shapes that governs how blocks of `F_q S_n` restrict to `A_n`.
//!
//! Cells are addressed 1-based as `(i, j)` = (row, column).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{is_square, reduce, FieldSpec};
use crate::perm::Permutation;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i`, 1-based; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.parts.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|j| self.parts.iter().filter(|&&l| l >= j).count()).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.row(i)
    }

    pub fn hook_number(&self, i: usize, j: usize) -> Result<usize> {
        if !self.contains_cell(i, j) {
            return Err(Error::CellOutsideDiagram { i, j, shape: self.to_string() });
        }
        let conj = self.conjugate();
        Ok(self.row(i) + conj.row(j) + 1 - (i + j))
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn hook_product(&self) -> u128 {
        let conj = self.conjugate();
        self.cells().map(|(i, j)| (self.row(i) + conj.row(j) + 1 - (i + j)) as u128).product()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let fact = factorial(self.n());
        let hooks = self.hook_product();
        assert_eq!(fact % hooks, 0, "hook formula must divide n! exactly");
        fact / hooks
    }

    /// Whether this cycle type splits into two `A_n` classes: all parts odd and distinct.
    pub fn splits_in_an(&self) -> bool {
        self.parts.iter().all(|l| l % 2 == 1) && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Whether permutations of this cycle type are even.
    pub fn is_even_type(&self) -> bool {
        self.parts.iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }

    /// Number of permutations of this cycle type in `S_n`.
    pub fn class_size(&self) -> u128 {
        let mut centralizer: u128 = 1;
        for (len, group) in &self.parts.iter().chunk_by(|&&l| l) {
            let m = group.count();
            centralizer *= (len as u128).pow(m as u32) * factorial(m);
        }
        factorial(self.n()) / centralizer
    }

    /// Diagonal hook data for self-conjugate shapes.
    pub fn self_conj_data(&self) -> Option<SelfConjData> {
        if !self.is_self_conjugate() {
            return None;
        }
        let r = (1..=self.len()).take_while(|&i| self.row(i) >= i).count();
        let hooks: Vec<usize> = (1..=r).map(|i| self.hook_number(i, i).unwrap()).collect();
        let n = self.n();
        debug_assert_eq!((n - r) % 2, 0);
        let sign = if ((n - r) / 2).is_multiple_of(2) { 1 } else { -1 };
        let p_lambda = sign * hooks.iter().map(|&h| h as i64).product::<i64>();
        Some(SelfConjData { lambda: self.clone(), r, hooks, p_lambda })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,1`, `(3,1)` or `3 1`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.is_empty() {
            return Err(Error::Parse(format!("empty partition {s:?}")));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `h(λ)`, `r` and `p_λ = (-1)^((n-r)/2) ∏ h_ii` for a self-conjugate `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfConjData {
    pub lambda: Partition,
    pub r: usize,
    pub hooks: Vec<usize>,
    pub p_lambda: i64,
}

impl SelfConjData {
    /// The diagonal hooks read as a cycle type; the class on which the two
    /// split characters differ.
    pub fn hook_type(&self) -> Partition {
        Partition { parts: self.hooks.clone() }
    }

    /// `(-1)^((n-r)/2)`.
    pub fn sign(&self) -> i64 {
        if ((self.lambda.n() - self.r) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// `λ ≠ λ'`; carries the conjugate.
    GammaPair(Partition),
    /// `λ = λ'` with `√p_λ ∉ F_q`.
    SelfConjNonDelta,
    /// `λ = λ'` with `√p_λ ∈ F_q`.
    SelfConjDelta,
}

pub fn classify(lambda: &Partition, spec: &FieldSpec) -> Classification {
    match lambda.self_conj_data() {
        None => Classification::GammaPair(lambda.conjugate()),
        Some(data) => {
            if is_square(reduce(data.p_lambda, spec.p()), spec) {
                Classification::SelfConjDelta
            } else {
                Classification::SelfConjNonDelta
            }
        }
    }
}

/// A filling of a Young diagram with `1..=n`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n + 1];
        for &v in rows.iter().flatten() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPartition(format!("filling {rows:?} is not a bijection onto 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(YoungTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry `a_ij`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Option<usize> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.row(1);
        (0..width).map(|j| self.rows.iter().take_while(|row| row.len() > j).map(|row| row[j]).collect()).collect()
    }

    pub fn transpose(&self) -> YoungTableau {
        YoungTableau { shape: self.shape.conjugate(), rows: self.columns() }
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|col| col.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn row_stabilizer(&self) -> Vec<Permutation> {
        set_stabilizer(self.shape.n(), &self.rows)
    }

    pub fn column_stabilizer(&self) -> Vec<Permutation> {
        set_stabilizer(self.shape.n(), &self.columns())
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows.iter().map(|r| r.iter().join(" ")).join(" / ");
        write!(f, "[{rows}]")
    }
}

/// The direct product of the symmetric groups on each block.
fn set_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(n)];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let mut next = Vec::with_capacity(out.len() * factorial(block.len()) as usize);
        for arrangement in block.iter().permutations(block.len()) {
            let mut images: Vec<usize> = (1..=n).collect();
            for (&from, &&to) in block.iter().zip(&arrangement) {
                images[from - 1] = to;
            }
            let local = Permutation::from_images(&images).expect("block arrangement is a bijection");
            next.extend(out.iter().map(|g| local.compose(g)));
        }
        out = next;
    }
    out
}

/// All standard tableaux of `lambda`. Values `1..=n` are inserted in turn,
/// trying corner cells in row-major order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<YoungTableau> {
    fn go(shape: &Partition, filled: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<YoungTableau>) {
        let n = shape.n();
        if next > n {
            out.push(YoungTableau { shape: shape.clone(), rows: filled.clone() });
            return;
        }
        for i in 0..shape.len() {
            let j = filled[i].len();
            let fits_row = j < shape.parts()[i];
            let above_ok = i == 0 || filled[i - 1].len() > j;
            if fits_row && above_ok {
                filled[i].push(next);
                go(shape, filled, next + 1, out);
                filled[i].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![Vec::new(); lambda.len()];
    go(lambda, &mut filled, 1, &mut out);
    out
}
