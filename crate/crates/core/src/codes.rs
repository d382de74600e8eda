//! Ideals `F_p G e` as linear codes of length `|G|`, with exhaustive
//! minimum-distance certification and weight distributions.
//!
//! The exhaustive scan walks messages in modular q-ary Gray order, so each
//! step adds a single generator row to the running codeword and updates its
//! weight on that row's support only. The message space is split by the
//! value of the last message digit into independent tasks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffield::{add_mod, mul_mod};
use crate::galg::{Algebra, Element};
use crate::matrix;

/// Default budget on exhaustively enumerated codewords.
pub const DEFAULT_THRESHOLD: u64 = 100_000_000;

/// A linear code over `F_p` with its generator matrix in reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    p: u64,
    length: usize,
    gen: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// Row-reduces an arbitrary spanning set.
    pub fn from_generators(mut rows: Vec<Vec<u64>>, length: usize, p: u64) -> Result<Self> {
        if rows.iter().any(|r| r.len() != length) {
            return Err(Error::Usage(format!("every generator row must have length {length}")));
        }
        for row in rows.iter_mut() {
            row.iter_mut().for_each(|v| *v %= p);
        }
        let pivots = matrix::rref(&mut rows, p);
        Ok(LinearCode { p, length, gen: rows, pivots })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.gen.len()
    }

    pub fn generator(&self) -> &[Vec<u64>] {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Number of codewords, `p^k`, saturating.
    pub fn size(&self) -> u128 {
        (self.p as u128).saturating_pow(self.dimension() as u32)
    }

    pub fn contains(&self, word: &[u64]) -> bool {
        word.len() == self.length && matrix::in_row_space(&self.gen, &self.pivots, word, self.p)
    }

    pub fn encode(&self, message: &[u64]) -> Vec<u64> {
        let mut word = vec![0u64; self.length];
        for (row, &m) in self.gen.iter().zip(message) {
            for (w, &g) in word.iter_mut().zip(row) {
                *w = add_mod(*w, mul_mod(m % self.p, g, self.p), self.p);
            }
        }
        word
    }

    /// Rows as space-separated digits, one per line.
    pub fn to_text(&self) -> String {
        format_matrix(&self.gen)
    }

    /// Parses the text matrix format and row-reduces it.
    pub fn from_text(text: &str, p: u64) -> Result<Self> {
        let rows = parse_matrix(text)?;
        let length = rows.first().map_or(0, Vec::len);
        Self::from_generators(rows, length, p)
    }
}

pub fn format_matrix(rows: &[Vec<u64>]) -> String {
    rows.iter().map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n")
}

pub fn parse_matrix(text: &str) -> Result<Vec<Vec<u64>>> {
    let rows: Vec<Vec<u64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    if rows.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(Error::Parse("matrix rows differ in length".into()));
    }
    Ok(rows)
}

/// The code `F_p G e` read off the rows `g·e` in canonical coordinate order.
pub fn ideal_to_code(alg: &Algebra, e: &Element) -> Result<LinearCode> {
    if !alg.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    LinearCode::from_generators(alg.ideal_rows(e), alg.order(), alg.p())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceConfig {
    /// Exhaustive search runs when `q^k` is at most this.
    pub threshold: u64,
    /// Random messages drawn when the search is not exhaustive.
    pub samples: usize,
    pub seed: u64,
}

impl Default for DistanceConfig {
    fn default() -> Self {
        DistanceConfig { threshold: DEFAULT_THRESHOLD, samples: 200_000, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Distance {
    /// Exhaustive: `witness` has weight `d` and no nonzero codeword is lighter.
    Certified { d: usize, witness: Vec<u64> },
    /// Sampled: `lower ≤ d ≤ upper`, `witness` attains `upper`.
    Bounds { lower: usize, upper: usize, witness: Vec<u64> },
    /// `k = 0`.
    ZeroCode,
}

impl Distance {
    pub fn certified(&self) -> Option<usize> {
        match self {
            Distance::Certified { d, .. } => Some(*d),
            _ => None,
        }
    }

    pub fn upper(&self) -> Option<usize> {
        match self {
            Distance::Certified { d, .. } => Some(*d),
            Distance::Bounds { upper, .. } => Some(*upper),
            Distance::ZeroCode => None,
        }
    }
}

struct ScanRow {
    support: Vec<(usize, u64)>,
}

/// Visits every codeword whose last message digit equals `top`, in Gray
/// order, calling `visit(word, weight)`; the zero word is skipped.
fn scan_slice(code: &LinearCode, rows: &[ScanRow], top: u64, mut visit: impl FnMut(&[u64], usize)) {
    let p = code.p;
    let k = code.dimension();
    let free = k - 1;
    let mut word = vec![0u64; code.length];
    let mut weight = 0usize;
    let add_row = |word: &mut Vec<u64>, weight: &mut usize, row: &ScanRow, times: u64| {
        for &(col, g) in &row.support {
            let old = word[col];
            let new = add_mod(old, mul_mod(g, times, p), p);
            word[col] = new;
            *weight = *weight + usize::from(new != 0) - usize::from(old != 0);
        }
    };
    if top != 0 {
        add_row(&mut word, &mut weight, &rows[free], top);
        visit(&word, weight);
    }
    let mut digits = vec![0u64; free];
    loop {
        // next Gray step: bump the lowest digit that does not wrap
        let mut j = 0;
        while j < free && digits[j] == p - 1 {
            digits[j] = 0;
            j += 1;
        }
        if j == free {
            break;
        }
        digits[j] += 1;
        add_row(&mut word, &mut weight, &rows[j], 1);
        visit(&word, weight);
    }
}

fn scan_rows(code: &LinearCode) -> Vec<ScanRow> {
    code.gen
        .iter()
        .map(|r| ScanRow { support: r.iter().copied().enumerate().filter(|&(_, g)| g != 0).collect() })
        .collect()
}

/// Minimum distance, exhaustive when `q^k ≤ threshold`, otherwise bounded by sampling.
pub fn min_distance(code: &LinearCode, cfg: &DistanceConfig) -> Distance {
    if code.dimension() == 0 {
        return Distance::ZeroCode;
    }
    if code.size() <= cfg.threshold as u128 {
        let rows = scan_rows(code);
        let best = (0..code.p)
            .into_par_iter()
            .filter_map(|top| {
                let mut best: Option<(usize, Vec<u64>)> = None;
                scan_slice(code, &rows, top, |word, weight| {
                    if best.as_ref().is_none_or(|(b, _)| weight < *b) {
                        best = Some((weight, word.to_vec()));
                    }
                });
                best
            })
            .min_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
            .expect("a code of positive dimension has a nonzero codeword");
        return Distance::Certified { d: best.0, witness: best.1 };
    }
    sampled_distance(code, cfg)
}

fn sampled_distance(code: &LinearCode, cfg: &DistanceConfig) -> Distance {
    let k = code.dimension();
    let p = code.p;
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut consider = |word: Vec<u64>| {
        let w = word.iter().filter(|&&x| x != 0).count();
        if w > 0 && best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, word));
        }
    };
    for row in &code.gen {
        consider(row.clone());
    }
    for i in 0..k {
        for j in i + 1..k {
            for c in 1..p {
                let mut msg = vec![0u64; k];
                msg[i] = 1;
                msg[j] = c;
                consider(code.encode(&msg));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let msg: Vec<u64> = (0..k).map(|_| rng.random_range(0..p)).collect();
        consider(code.encode(&msg));
    }
    let (upper, witness) = best.expect("rows of a nonzero code are nonzero");
    Distance::Bounds { lower: 1, upper, witness }
}

/// `A_w` for `w = 0..=n`.
pub fn weight_distribution(code: &LinearCode, threshold: u64) -> Result<Vec<u64>> {
    let size = code.size();
    if size > threshold as u128 {
        return Err(Error::BudgetExceeded { needed: size, threshold });
    }
    let mut counts = vec![0u64; code.length + 1];
    counts[0] = 1;
    if code.dimension() == 0 {
        return Ok(counts);
    }
    let rows = scan_rows(code);
    let partial: Vec<Vec<u64>> = (0..code.p)
        .into_par_iter()
        .map(|top| {
            let mut local = vec![0u64; code.length + 1];
            scan_slice(code, &rows, top, |_, w| local[w] += 1);
            local
        })
        .collect();
    for local in partial {
        for (c, l) in counts.iter_mut().zip(local) {
            *c += l;
        }
    }
    Ok(counts)
}

/// Best known minimum distances quoted alongside the worked examples, keyed by `(n, k, q)`.
const BEST_KNOWN: &[((usize, usize, u64), usize)] =
    &[((3, 2, 5), 2), ((12, 9, 5), 3), ((12, 2, 5), 10), ((12, 9, 7), 3)];

pub fn best_known_lookup(n: usize, k: usize, q: u64) -> Option<usize> {
    BEST_KNOWN.iter().find(|(key, _)| *key == (n, k, q)).map(|&(_, d)| d)
}

/// Interchange form: `{"n", "k", "d", "certified", "gen"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeJson {
    pub n: usize,
    pub k: usize,
    /// The certified distance, or the sampled upper bound when `certified` is false.
    pub d: Option<usize>,
    pub certified: bool,
    pub gen: Vec<Vec<u64>>,
}

impl CodeJson {
    pub fn new(code: &LinearCode, distance: &Distance) -> Self {
        CodeJson {
            n: code.length(),
            k: code.dimension(),
            d: distance.upper(),
            certified: distance.certified().is_some(),
            gen: code.generator().to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&[u64]], p: u64) -> LinearCode {
        LinearCode::from_generators(rows.iter().map(|r| r.to_vec()).collect(), rows[0].len(), p).unwrap()
    }

    #[test]
    fn repetition_code() {
        let c = code(&[&[1, 1, 1]], 5);
        assert_eq!(min_distance(&c, &DistanceConfig::default()).certified(), Some(3));
        assert_eq!(weight_distribution(&c, 1000).unwrap(), vec![1, 0, 0, 4]);
    }

    #[test]
    fn sum_zero_code() {
        let c = code(&[&[1, 0, 4], &[0, 1, 4]], 5);
        assert_eq!(min_distance(&c, &DistanceConfig::default()).certified(), Some(2));
        assert_eq!(weight_distribution(&c, 1000).unwrap(), vec![1, 0, 12, 12]);
        assert_eq!(best_known_lookup(3, 2, 5), Some(2));
        assert_eq!(best_known_lookup(12, 2, 5), Some(10));
        assert_eq!(best_known_lookup(4, 1, 7), None);
    }

    #[test]
    fn full_space_and_zero_code() {
        let c = code(&[&[2, 0], &[3, 3]], 5);
        assert_eq!(c.generator(), &[vec![1, 0], vec![0, 1]]);
        assert_eq!(min_distance(&c, &DistanceConfig::default()).certified(), Some(1));
        let z = LinearCode::from_generators(vec![vec![0, 0, 0]], 3, 5).unwrap();
        assert_eq!(z.dimension(), 0);
        assert_eq!(min_distance(&z, &DistanceConfig::default()), Distance::ZeroCode);
        assert_eq!(weight_distribution(&z, 1).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn budget_and_sampling() {
        let c = code(&[&[1, 0, 0, 1, 1], &[0, 1, 0, 1, 2], &[0, 0, 1, 1, 3]], 7);
        assert!(matches!(weight_distribution(&c, 100), Err(Error::BudgetExceeded { .. })));
        let cfg = DistanceConfig { threshold: 10, samples: 500, seed: 3 };
        match min_distance(&c, &cfg) {
            Distance::Bounds { lower, upper, witness } => {
                assert_eq!(lower, 1);
                assert_eq!(witness.iter().filter(|&&x| x != 0).count(), upper);
                assert!(c.contains(&witness));
                let exact = min_distance(&c, &DistanceConfig::default()).certified().unwrap();
                assert!(upper >= exact);
            }
            other => panic!("expected bounds, got {other:?}"),
        }
        assert_eq!(min_distance(&c, &cfg), min_distance(&c, &cfg));
    }

    #[test]
    fn witness_is_a_codeword() {
        let c = code(&[&[1, 1, 1, 1, 0, 0], &[0, 0, 1, 2, 3, 4]], 5);
        let Distance::Certified { d, witness } = min_distance(&c, &DistanceConfig::default()) else {
            panic!("small code must be certified");
        };
        assert!(c.contains(&witness));
        assert_eq!(witness.iter().filter(|&&x| x != 0).count(), d);
    }

    #[test]
    fn text_format() {
        let c = code(&[&[1, 0, 4], &[0, 1, 4]], 5);
        assert_eq!(c.to_text(), "1 0 4\n0 1 4");
        assert_eq!(LinearCode::from_text(&c.to_text(), 5).unwrap(), c);
        assert!(parse_matrix("1 2\n3").is_err());
        assert!(parse_matrix("1 x").is_err());
    }
}
