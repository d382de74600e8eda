//! Permutations of `{1..n}`, the groups `S_n` and `A_n` in their canonical
//! (lexicographic) element order, conjugacy classes with the `A_n` splitting,
//! and subgroup enumeration.
//!
//! Composition is left action: `a.compose(b)` maps `i` to `a(b(i))`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::{factorial, Partition};

pub const MIN_DEGREE: usize = 3;
pub const MAX_DEGREE: usize = 7;

/// Largest group order for which a full multiplication table is stored.
const TABLE_LIMIT: usize = 720;

/// Largest group order accepted by [`Group::all_subgroups`].
pub const SUBGROUP_LIMIT: usize = 120;

/// A bijection of `{1..n}`; images are stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// From one-line notation with 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| (v - 1) as u8).collect() })
    }

    /// From disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut acc = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            if cycle.iter().any(|&v| v == 0 || v > n) || cycle.iter().duplicates().next().is_some() {
                return Err(Error::InvalidPermutation(format!("cycle {cycle:?} in degree {n}")));
            }
            let mut images: Vec<usize> = (1..=n).collect();
            for (k, &from) in cycle.iter().enumerate() {
                images[from - 1] = cycle[(k + 1) % cycle.len()];
            }
            acc = Permutation::from_images(&images)?.compose(&acc);
        }
        Ok(acc)
    }

    /// Parses cycle notation such as `(1,2)(3,4)`, `(1 2 3)` or `()`.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for chunk in s.split(')') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let body =
                chunk.strip_prefix('(').ok_or_else(|| Error::Parse(format!("malformed cycle notation {s:?}")))?;
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `i`, both 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line notation, 1-based.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`. Panics on a degree mismatch; see [`Permutation::try_compose`].
    pub fn compose(&self, other: &Permutation) -> Permutation {
        self.try_compose(other).expect("composing permutations of different degree")
    }

    pub fn try_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation { images: other.images.iter().map(|&i| self.images[i as usize]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Permutation { images }
    }

    /// `h ∘ self ∘ h⁻¹`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.compose(self).compose(&h.inverse())
    }

    /// All cycles including fixed points, each starting at its smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect()).expect("cycle lengths form a partition")
    }

    /// `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i8 {
        if (self.degree() - self.cycles().len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().map(Vec::len).fold(1, num_lcm)
    }

    /// Position in the lexicographic listing of `S_n` (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for i in 0..n {
            let smaller = self.images[i + 1..].iter().filter(|&&v| v < self.images[i]).count();
            rank += smaller * factorial(n - 1 - i) as usize;
        }
        rank
    }

    pub fn from_lex_rank(n: usize, mut rank: usize) -> Permutation {
        let mut pool: Vec<u8> = (0..n as u8).collect();
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let block = factorial(n - 1 - i) as usize;
            images.push(pool.remove(rank / block));
            rank %= block;
        }
        Permutation { images }
    }
}

/// `lex_rank(a ∘ b)` without allocating.
fn compose_rank(a: &[u8], b: &[u8]) -> usize {
    const FACT: [usize; 8] = [1, 1, 2, 6, 24, 120, 720, 5040];
    let n = a.len();
    let mut c = [0u8; MAX_DEGREE];
    for i in 0..n {
        c[i] = a[b[i] as usize];
    }
    let mut rank = 0;
    for i in 0..n {
        let smaller = c[i + 1..n].iter().filter(|&&v| v < c[i]).count();
        rank += smaller * FACT[n - 1 - i];
    }
    rank
}

fn num_lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Cycle notation as printed in the literature: `(1,2,3)(4,5)`, identity `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "({})", c.iter().join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sn,
    An,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Sn => write!(f, "S"),
            GroupKind::An => write!(f, "A"),
        }
    }
}

pub fn check_degree(n: usize) -> Result<()> {
    if (MIN_DEGREE..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(Error::DegreeOutOfRange { n, min: MIN_DEGREE, max: MAX_DEGREE })
    }
}

/// `S_n` in lexicographic order of one-line notation; `A_n` as the even
/// subsequence of that list.
pub fn enumerate(kind: GroupKind, n: usize) -> Result<Vec<Permutation>> {
    check_degree(n)?;
    let all = (0..factorial(n) as usize).map(|r| Permutation::from_lex_rank(n, r));
    Ok(match kind {
        GroupKind::Sn => all.collect(),
        GroupKind::An => all.filter(Permutation::is_even).collect(),
    })
}

/// `(1,…,λ_1)(λ_1+1,…,λ_1+λ_2)…`, the representative of the `+` class.
pub fn positive_representative(lambda: &Partition) -> Result<Permutation> {
    if !lambda.splits_in_an() {
        return Err(Error::NonSplitting(lambda.to_string()));
    }
    let n = lambda.n();
    let mut images = Vec::with_capacity(n);
    let mut start = 1;
    for &len in lambda.parts() {
        images.extend((start + 1..start + len).chain(std::iter::once(start)));
        start += len;
    }
    Permutation::from_images(&images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    None,
    Plus,
    Minus,
}

/// A conjugacy class label: the `S_n` cycle type and, for classes that split
/// in `A_n`, which half.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassLabel {
    pub cycle_type: Partition,
    pub split: Split,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let suffix = match self.split {
            Split::None => "",
            Split::Plus => "+",
            Split::Minus => "-",
        };
        write!(f, "{}{}", self.cycle_type, suffix)
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub label: ClassLabel,
    /// Element indices, ascending.
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup as a sorted list of element indices of its ambient [`Group`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Wraps a list of element indices already known to form a subgroup.
    pub fn from_members(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subgroup { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    fn from_mask(mask: u128) -> Self {
        Subgroup { members: (0..128).filter(|&i| mask >> i & 1 == 1).collect() }
    }

    fn mask(&self) -> u128 {
        self.members.iter().fold(0, |m, &i| m | 1 << i)
    }
}

/// `S_n` or `A_n` with its elements in canonical order. Element `0` is the identity.
#[derive(Debug, Clone)]
pub struct Group {
    kind: GroupKind,
    n: usize,
    elements: Vec<Permutation>,
    /// Indexed by `S_n` lex rank; `usize::MAX` for elements outside the group.
    rank_to_index: Vec<usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl Group {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self> {
        let elements = enumerate(kind, n)?;
        let mut rank_to_index = vec![usize::MAX; factorial(n) as usize];
        for (i, g) in elements.iter().enumerate() {
            rank_to_index[g.lex_rank()] = i;
        }
        let mut group = Group {
            kind,
            n,
            elements,
            rank_to_index,
            table: None,
            inverses: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        let order = group.order();
        if order <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(order * order);
            for a in &group.elements {
                for b in &group.elements {
                    table.push(group.rank_to_index[a.compose(b).lex_rank()] as u32);
                }
            }
            group.table = Some(table);
        }
        group.inverses = group.elements.iter().map(|g| group.index_of(&g.inverse()).unwrap()).collect();
        group.classes = group.compute_classes();
        group.class_of = vec![0; order];
        for (c, class) in group.classes.iter().enumerate() {
            for &m in &class.members {
                group.class_of[m] = c;
            }
        }
        Ok(group)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.n {
            return None;
        }
        match self.rank_to_index[g.lex_rank()] {
            usize::MAX => None,
            i => Some(i),
        }
    }

    /// Index of `elements[a] ∘ elements[b]`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.rank_to_index[compose_rank(&self.elements[a].images, &self.elements[b].images)],
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Classes ordered by their first member in the canonical listing.
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, index: usize) -> usize {
        self.class_of[index]
    }

    pub fn class_index(&self, label: &ClassLabel) -> Option<usize> {
        self.classes.iter().position(|c| &c.label == label)
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        let mut by_type: Vec<(Partition, Vec<usize>)> = Vec::new();
        for (i, g) in self.elements.iter().enumerate() {
            let ct = g.cycle_type();
            match by_type.iter_mut().find(|(t, _)| *t == ct) {
                Some((_, members)) => members.push(i),
                None => by_type.push((ct, vec![i])),
            }
        }
        let mut classes = Vec::new();
        for (cycle_type, members) in by_type {
            if self.kind == GroupKind::An && cycle_type.splits_in_an() {
                let rep = positive_representative(&cycle_type).expect("splitting type");
                let orbit: BTreeSet<usize> =
                    self.elements.iter().map(|h| self.index_of(&rep.conjugate_by(h)).unwrap()).collect();
                let minus: Vec<usize> = members.iter().copied().filter(|m| !orbit.contains(m)).collect();
                let plus: Vec<usize> = orbit.into_iter().collect();
                let mut halves = [
                    ConjugacyClass {
                        label: ClassLabel { cycle_type: cycle_type.clone(), split: Split::Plus },
                        members: plus,
                    },
                    ConjugacyClass { label: ClassLabel { cycle_type, split: Split::Minus }, members: minus },
                ];
                halves.sort_by_key(|c| c.members[0]);
                classes.extend(halves);
            } else {
                classes.push(ConjugacyClass { label: ClassLabel { cycle_type, split: Split::None }, members });
            }
        }
        classes.sort_by_key(|c| c.members[0]);
        classes
    }

    fn cyclic_mask(&self, g: usize) -> u128 {
        let mut mask = 1u128;
        let mut x = g;
        while x != 0 {
            mask |= 1 << x;
            x = self.mul(x, g);
        }
        mask
    }

    fn cyclic_members(&self, g: usize) -> Vec<usize> {
        let mut members = vec![0];
        let mut x = g;
        while x != 0 {
            members.push(x);
            x = self.mul(x, g);
        }
        members.sort_unstable();
        members
    }

    /// Cyclic subgroups of prime order, each once, ordered by size then members.
    pub fn prime_order_subgroups(&self) -> Vec<Subgroup> {
        let set: BTreeSet<(usize, Vec<usize>)> = (1..self.order())
            .filter(|&g| crate::ffield::is_prime(self.elements[g].order() as u64))
            .map(|g| {
                let m = self.cyclic_members(g);
                (m.len(), m)
            })
            .collect();
        set.into_iter().map(|(_, members)| Subgroup { members }).collect()
    }

    /// Every subgroup, found as joins of cyclic subgroups, ordered by size then members.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>> {
        if self.order() > SUBGROUP_LIMIT {
            return Err(Error::GroupTooLarge(self.order()));
        }
        let mut cyclic: Vec<(usize, u128)> = Vec::new();
        let mut seen_cyclic = HashSet::new();
        for g in 1..self.order() {
            let mask = self.cyclic_mask(g);
            if seen_cyclic.insert(mask) {
                cyclic.push((g, mask));
            }
        }
        let mut found: HashSet<u128> = HashSet::from([1u128]);
        let mut queue: VecDeque<(u128, Vec<usize>)> = VecDeque::from([(1u128, Vec::new())]);
        while let Some((mask, gens)) = queue.pop_front() {
            for &(g, cmask) in &cyclic {
                if mask & cmask == cmask {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(g);
                let joined = self.closure(&next_gens);
                if found.insert(joined) {
                    queue.push_back((joined, next_gens));
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_iter().map(Subgroup::from_mask).collect();
        out.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        Ok(out)
    }

    /// The subgroup generated by `gens`, as a bitmask (requires order ≤ 128).
    fn closure(&self, gens: &[usize]) -> u128 {
        let mut mask = 1u128;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    queue.push_back(y);
                }
            }
        }
        mask
    }

    /// Intersection of two subgroups of this group.
    pub fn intersect(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        Subgroup::from_mask(a.mask() & b.mask())
    }
}
