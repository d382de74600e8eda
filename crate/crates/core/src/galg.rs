//! Group algebras `F_p G` for `G = S_n, A_n` and the idempotent constructions
//! built on them: Young symmetrizers, centrally primitive idempotents of
//! `F_p S_n`, their `A_n` counterparts, subgroup averages and essentiality.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::ffield::{add_mod, inv_mod, mul_mod, reduce, sub_mod, FieldSpec};
use crate::matrix;
use crate::perm::{Group, GroupKind, Permutation, Subgroup};
use crate::tableaux::{classify, factorial, standard_tableaux, Classification, Partition, YoungTableau};

/// A dense element `Σ a_g g`, coefficients indexed by the canonical group order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    kind: GroupKind,
    n: usize,
    p: u64,
    coeffs: Vec<u64>,
}

impl Element {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, index: usize) -> u64 {
        self.coeffs[index]
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|&(_, c)| c != 0)
    }

    pub fn weight(&self) -> usize {
        self.support().count()
    }
}

/// `F_p G` together with its group tables.
#[derive(Debug, Clone)]
pub struct Algebra {
    group: Group,
    field: FieldSpec,
}

impl Algebra {
    /// Fails unless `p > n`.
    pub fn new(kind: GroupKind, n: usize, field: FieldSpec) -> Result<Self> {
        field.require_above(n)?;
        Ok(Algebra { group: Group::new(kind, n)?, field })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn kind(&self) -> GroupKind {
        self.group.kind()
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> Element {
        self.from_coeffs(vec![0; self.order()])
    }

    pub fn one(&self) -> Element {
        self.basis(0)
    }

    pub fn basis(&self, index: usize) -> Element {
        let mut e = self.zero();
        e.coeffs[index] = 1;
        e
    }

    /// Wraps raw coefficients; they are reduced mod p.
    pub fn from_coeffs(&self, coeffs: Vec<u64>) -> Element {
        assert_eq!(coeffs.len(), self.order(), "coefficient vector has wrong length");
        let p = self.p();
        Element { kind: self.kind(), n: self.degree(), p, coeffs: coeffs.into_iter().map(|c| c % p).collect() }
    }

    /// Builds `Σ c_i g_i`; repeated permutations accumulate.
    pub fn from_terms(&self, terms: &[(Permutation, i64)]) -> Result<Element> {
        let mut e = self.zero();
        for (g, c) in terms {
            let i = self
                .group
                .index_of(g)
                .ok_or_else(|| Error::Usage(format!("{g} is not an element of {}{}", self.kind(), self.degree())))?;
            e.coeffs[i] = add_mod(e.coeffs[i], reduce(*c, self.p()), self.p());
        }
        Ok(e)
    }

    fn check(&self, e: &Element) -> Result<()> {
        if e.kind == self.kind() && e.n == self.degree() && e.p == self.p() {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p();
        Ok(self.from_coeffs(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| add_mod(x, y, p)).collect()))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p();
        Ok(self.from_coeffs(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| sub_mod(x, y, p)).collect()))
    }

    pub fn scale(&self, a: &Element, c: u64) -> Element {
        let p = self.p();
        self.from_coeffs(a.coeffs.iter().map(|&x| mul_mod(x, c % p, p)).collect())
    }

    /// Convolution: the coefficient of `u` is `Σ_{gh = u} a_g b_h`.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        let p = self.p();
        let rhs: Vec<(usize, u64)> = b.support().collect();
        let mut out = vec![0u64; self.order()];
        for (i, x) in a.support() {
            for &(j, y) in &rhs {
                let k = self.group.mul(i, j);
                out[k] = (out[k] + x * y) % p;
            }
        }
        Ok(self.from_coeffs(out))
    }

    /// `g·a` for the group element at `index`; a coordinate permutation.
    pub fn left_translate(&self, index: usize, a: &Element) -> Element {
        let mut out = vec![0u64; self.order()];
        for (h, &c) in a.coeffs.iter().enumerate() {
            out[self.group.mul(index, h)] = c;
        }
        self.from_coeffs(out)
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        self.mul(e, e).is_ok_and(|sq| sq == *e)
    }

    /// Generators: `(1,2)` and `(1,…,n)` for `S_n`; the 3-cycles `(1,2,k)` for `A_n`.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.degree();
        let perms: Vec<Permutation> = match self.kind() {
            GroupKind::Sn => {
                let full: Vec<usize> = (1..=n).collect();
                vec![Permutation::from_cycles(n, &[&[1, 2]]).unwrap(), Permutation::from_cycles(n, &[&full]).unwrap()]
            }
            GroupKind::An => (3..=n).map(|k| Permutation::from_cycles(n, &[&[1, 2, k]]).unwrap()).collect(),
        };
        perms.iter().map(|g| self.group.index_of(g).unwrap()).collect()
    }

    /// `g·e = e·g` for every generator `g`.
    pub fn is_central(&self, e: &Element) -> bool {
        self.generators().into_iter().all(|g| {
            let b = self.basis(g);
            self.mul(&b, e).ok() == self.mul(e, &b).ok()
        })
    }

    /// Coefficients constant on conjugacy classes.
    pub fn is_class_function(&self, e: &Element) -> bool {
        self.group.classes().iter().all(|c| c.members.iter().all(|&m| e.coeffs[m] == e.coeffs[c.members[0]]))
    }

    /// Rows `g·e` for every `g`, in canonical order.
    pub fn ideal_rows(&self, e: &Element) -> Vec<Vec<u64>> {
        (0..self.order()).map(|g| self.left_translate(g, e).coeffs).collect()
    }

    /// `dim_{F_p} F_p G e`.
    pub fn ideal_dimension(&self, e: &Element) -> usize {
        matrix::rank(&self.ideal_rows(e), self.p())
    }

    /// Paper-style rendering, e.g. `4() + 3(1,2,3) + 3(1,3,2)`.
    pub fn format(&self, e: &Element) -> String {
        let mut out = String::new();
        for (i, c) in e.support() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if c != 1 {
                write!(out, "{c}").unwrap();
            }
            write!(out, "{}", self.group.element(i)).unwrap();
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    fn require_sn(&self) -> Result<()> {
        match self.kind() {
            GroupKind::Sn => Ok(()),
            GroupKind::An => Err(Error::Usage("operation needs the symmetric group algebra".into())),
        }
    }

    /// `d_λ / n!` in `F_p`.
    fn symmetrizer_scalar(&self, lambda: &Partition) -> u64 {
        let p = self.p();
        let d = (lambda.dimension() % p as u128) as u64;
        let nfact = (factorial(lambda.n()) % p as u128) as u64;
        mul_mod(d, inv_mod(nfact, p).expect("p > n makes n! invertible"), p)
    }

    fn symmetrizer(&self, t: &YoungTableau, column_first: bool) -> Result<Element> {
        self.require_sn()?;
        if t.shape().n() != self.degree() {
            return Err(Error::DegreeMismatch(t.shape().n(), self.degree()));
        }
        let p = self.p();
        let scalar = self.symmetrizer_scalar(t.shape());
        let rows = t.row_stabilizer();
        let cols = t.column_stabilizer();
        let mut coeffs = vec![0u64; self.order()];
        for q in &cols {
            let c = if q.sign() == 1 { scalar } else { p - scalar };
            for r in &rows {
                let g = if column_first { q.compose(r) } else { r.compose(q) };
                let i = self.group.index_of(&g).expect("S_n contains every permutation");
                coeffs[i] = add_mod(coeffs[i], c, p);
            }
        }
        Ok(self.from_coeffs(coeffs))
    }

    /// `e_T = (d_λ/n!) Σ_{p∈R_T} Σ_{q∈C_T} sgn(q) q p`.
    pub fn young_symmetrizer(&self, t: &YoungTableau) -> Result<Element> {
        self.symmetrizer(t, true)
    }

    /// `ē_T = (d_λ/n!) Σ_{p∈R_T} Σ_{q∈C_T} sgn(q) p q`.
    pub fn young_symmetrizer_bar(&self, t: &YoungTableau) -> Result<Element> {
        self.symmetrizer(t, false)
    }

    /// Standard tableaux `T_1, …, T_d` of `λ` ordered so that for `i > j`
    /// both `e_{T_i} e_{T_j}` and `ē_{T_i'} ē_{T_j'}` vanish. Among valid
    /// orders the lexicographically least in generation order is returned.
    pub fn order_tableaux(&self, lambda: &Partition) -> Result<Vec<YoungTableau>> {
        Ok(self.ordered_symmetrizers(lambda)?.into_iter().map(|s| s.tableau).collect())
    }

    fn ordered_symmetrizers(&self, lambda: &Partition) -> Result<Vec<OrderedSymmetrizer>> {
        self.require_sn()?;
        let mut items = Vec::new();
        for tableau in standard_tableaux(lambda) {
            let e = self.young_symmetrizer(&tableau)?;
            let e_bar_conj = self.young_symmetrizer_bar(&tableau.transpose())?;
            items.push(OrderedSymmetrizer { tableau, e, e_bar_conj });
        }
        let d = items.len();
        // before[i][j]: T_i has to precede T_j
        let mut before = vec![vec![false; d]; d];
        for i in 0..d {
            for j in 0..d {
                if i != j
                    && !shares_row_and_column(&items[i].tableau, &items[j].tableau)
                    && (!self.mul(&items[i].e, &items[j].e)?.is_zero()
                        || !self.mul(&items[i].e_bar_conj, &items[j].e_bar_conj)?.is_zero())
                {
                    before[i][j] = true;
                }
            }
        }
        let mut indegree: Vec<usize> = (0..d).map(|j| (0..d).filter(|&i| before[i][j]).count()).collect();
        let mut ready: BTreeSet<usize> = (0..d).filter(|&j| indegree[j] == 0).collect();
        let mut order = Vec::with_capacity(d);
        while let Some(i) = ready.pop_first() {
            order.push(i);
            for j in 0..d {
                if before[i][j] {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.insert(j);
                    }
                }
            }
        }
        if order.len() != d {
            return Err(Error::Structural(format!(
                "no order of the standard tableaux of {lambda} has the vanishing property"
            )));
        }
        let mut slots: Vec<Option<OrderedSymmetrizer>> = items.into_iter().map(Some).collect();
        Ok(order.into_iter().map(|i| slots[i].take().unwrap()).collect())
    }

    /// `1 - ∏ (1 - x_i)` with the product taken left to right.
    fn complement_product<'a>(&self, factors: impl Iterator<Item = &'a Element>) -> Result<Element> {
        let one = self.one();
        let mut prod = one.clone();
        for x in factors {
            prod = self.mul(&prod, &self.sub(&one, x)?)?;
        }
        self.sub(&one, &prod)
    }

    /// `e_λ = 1 - ∏_{i=1}^{d_λ} (1 - e_{T_i})` over the ordered standard tableaux of `λ`.
    pub fn central_idempotent(&self, lambda: &Partition) -> Result<Element> {
        let items = self.ordered_symmetrizers(lambda)?;
        self.complement_product(items.iter().map(|s| &s.e))
    }

    /// `e_{λ'} = 1 - ∏_{i=1}^{d_λ} (1 - ē_{T_i'})`, built from the tableaux of `λ`.
    pub fn central_idempotent_conjugate(&self, lambda: &Partition) -> Result<Element> {
        let items = self.ordered_symmetrizers(lambda)?;
        self.complement_product(items.iter().map(|s| &s.e_bar_conj))
    }

    /// One block per `λ ⊢ n`, in [`crate::tableaux::partitions_of`] order.
    pub fn sn_idempotent_set(&self) -> Result<Vec<SnBlockReport>> {
        self.require_sn()?;
        crate::tableaux::partitions_of(self.degree())
            .into_iter()
            .map(|lambda| {
                let generator = self.central_idempotent(&lambda)?;
                let d = lambda.dimension() as usize;
                Ok(SnBlockReport { lambda, d, generator })
            })
            .collect()
    }

    /// Re-indexes an element of `F_p S_n` supported on even permutations as an element of `F_p A_n`.
    pub fn restrict_to_an(&self, a: &Element, an: &Algebra) -> Result<Element> {
        self.require_sn()?;
        self.check(a)?;
        if an.kind() != GroupKind::An || an.degree() != self.degree() || an.p() != self.p() {
            return Err(Error::AmbientMismatch);
        }
        let mut out = an.zero();
        for (i, c) in a.support() {
            let g = self.group.element(i);
            let j = an.group.index_of(g).ok_or_else(|| Error::NotInAlternatingSubalgebra(g.to_string()))?;
            out.coeffs[j] = c;
        }
        Ok(out)
    }

    /// `e_λ^{S_n} + e_{λ'}^{S_n}` before restriction; supported on `A_n`.
    pub fn pair_sum(&self, lambda: &Partition) -> Result<Element> {
        if lambda.is_self_conjugate() {
            return Err(Error::Usage(format!("{lambda} is self-conjugate; the pair construction needs λ ≠ λ'")));
        }
        self.add(&self.central_idempotent(lambda)?, &self.central_idempotent_conjugate(lambda)?)
    }

    /// The centrally primitive idempotent of `F_q A_n` for the pair `{λ, λ'}`.
    pub fn an_pair_idempotent(&self, lambda: &Partition, an: &Algebra) -> Result<Element> {
        self.restrict_to_an(&self.pair_sum(lambda)?, an)
    }

    /// For self-conjugate `λ` outside `Δ`: `e_λ^{S_n}` restricted to `A_n`,
    /// certified by its ideal having `F_q`-dimension `d_λ²/2`.
    pub fn an_selfconj_idempotent(&self, lambda: &Partition, an: &Algebra) -> Result<Element> {
        if classify(lambda, &self.field) != Classification::SelfConjNonDelta {
            return Err(Error::Usage(format!(
                "{lambda} is not a self-conjugate partition outside Δ over {}",
                self.field
            )));
        }
        let e = self.restrict_to_an(&self.central_idempotent(lambda)?, an)?;
        let d = lambda.dimension() as usize;
        let dim = an.ideal_dimension(&e);
        if dim != d * d / 2 {
            return Err(Error::Structural(format!("ideal of {lambda} has dimension {dim}, expected {}", d * d / 2)));
        }
        Ok(e)
    }

    /// `Ĥ = |H|⁻¹ Σ_{h∈H} h`.
    pub fn subgroup_average(&self, h: &Subgroup) -> Result<Element> {
        let p = self.p();
        let order = h.order() as u64;
        if order.is_multiple_of(p) {
            return Err(Error::UnsupportedCharacteristic { p, n: h.order() });
        }
        let inv = inv_mod(order, p)?;
        let mut e = self.zero();
        for &m in h.members() {
            e.coeffs[m] = inv;
        }
        Ok(e)
    }

    /// `e·Ĉ = 0` for every cyclic subgroup `C` of prime order. Every
    /// nontrivial `H` contains such a `C`, and `Ĉ Ĥ = Ĥ`, so this decides
    /// `e·Ĥ = 0` for all `H ≠ {1}`.
    pub fn is_essential(&self, e: &Element) -> Result<Essentiality> {
        self.essential_over(e, self.group.prime_order_subgroups())
    }

    /// The same test run over the whole subgroup lattice (order ≤ 120).
    pub fn is_essential_all_subgroups(&self, e: &Element) -> Result<Essentiality> {
        let subgroups = self.group.all_subgroups()?.into_iter().filter(|h| h.order() > 1).collect();
        self.essential_over(e, subgroups)
    }

    /// Elements `g` with `g·e = e`: the kernel of `g ↦ g·e`, a normal subgroup.
    pub fn translation_kernel(&self, e: &Element) -> Subgroup {
        let members = (0..self.order()).filter(|&g| self.left_translate(g, e) == *e).collect();
        Subgroup::from_members(members)
    }

    /// Whether `g ↦ g·e` is injective on `G`, i.e. the block's
    /// representation is faithful.
    pub fn is_faithful(&self, e: &Element) -> bool {
        self.translation_kernel(e).order() == 1
    }

    fn essential_over(&self, e: &Element, subgroups: Vec<Subgroup>) -> Result<Essentiality> {
        for h in subgroups {
            if !self.mul(e, &self.subgroup_average(&h)?)?.is_zero() {
                return Ok(Essentiality { essential: false, witness: Some(h) });
            }
        }
        Ok(Essentiality { essential: true, witness: None })
    }
}

/// Whether two entries lie in one row of `a` and one column of `b`. Then
/// the transposition `t` of those entries gives `R_a t = R_a`, `t C_b = -C_b`,
/// so `R_a C_b = 0` and with it both `e_a e_b` and `ē_{a'} ē_{b'}` vanish.
fn shares_row_and_column(a: &YoungTableau, b: &YoungTableau) -> bool {
    let n = a.shape().n();
    let mut column_of = vec![0; n + 1];
    for (c, col) in b.columns().iter().enumerate() {
        for &x in col {
            column_of[x] = c;
        }
    }
    a.rows().iter().any(|row| row.iter().map(|&x| column_of[x]).duplicates().next().is_some())
}

struct OrderedSymmetrizer {
    tableau: YoungTableau,
    e: Element,
    /// `ē` of the transposed tableau.
    e_bar_conj: Element,
}

#[derive(Debug, Clone)]
pub struct SnBlockReport {
    pub lambda: Partition,
    pub d: usize,
    pub generator: Element,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Essentiality {
    pub essential: bool,
    /// A subgroup `H ≠ {1}` with `e·Ĥ ≠ 0`.
    pub witness: Option<Subgroup>,
}
