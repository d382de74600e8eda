//! Serializable reports for each command of the `wedderburn` binary, plus
//! their plain-text renderings.
//!
//! Every report carries `schema_version`; JSON produced by one version
//! parses back into an identical value.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocks::{Block, BlockLabel, BlockSelector, Decomposition};
use crate::chars::{mn_character, AnCharacterTable, ExactValue};
use crate::codes::{
    best_known_lookup, ideal_to_code, min_distance, weight_distribution, CodeJson, Distance, DistanceConfig,
};
use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::galg::{Algebra, Element};
use crate::perm::{check_degree, Group, GroupKind, Subgroup};
use crate::tableaux::partitions_of;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable holding the default distance-scan threshold.
pub const THRESHOLD_ENV: &str = "WEDDERBURN_THRESHOLD";

/// Largest group order for which the ideal `F_q G·e` is row-reduced to
/// confirm its dimension; beyond this the theoretical value is reported alone.
const IDEAL_CHECK_LIMIT: usize = 360;

/// Largest group order for which `--verbose` cross-checks essentiality
/// against the full subgroup lattice.
const LATTICE_CHECK_LIMIT: usize = 120;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub group: GroupKind,
    pub n: usize,
    pub field: FieldSpec,
    pub lambda: Option<BlockSelector>,
    pub threshold: u64,
    pub seed: u64,
    pub verbose: bool,
}

impl RunConfig {
    /// Validates `n`, `p`, `f` before any computation.
    pub fn new(group: GroupKind, n: usize, p: u64, f: u32) -> Result<Self> {
        check_degree(n)?;
        let field = FieldSpec::new(p, f)?;
        field.require_above(n)?;
        Ok(RunConfig {
            group,
            n,
            field,
            lambda: None,
            threshold: crate::codes::DEFAULT_THRESHOLD,
            seed: 0,
            verbose: false,
        })
    }

    pub fn with_lambda(mut self, lambda: &str) -> Result<Self> {
        self.lambda = Some(lambda.parse()?);
        Ok(self)
    }

    fn require_prime_field(&self, what: &str) -> Result<()> {
        if self.field.f() == 1 {
            Ok(())
        } else {
            Err(Error::Usage(format!("{what} works over prime fields only (got f = {})", self.field.f())))
        }
    }

    fn selected<'a>(&self, dec: &'a Decomposition) -> Result<Vec<&'a Block>> {
        match &self.lambda {
            Some(sel) => Ok(vec![dec.select(sel)?]),
            None => Ok(dec.blocks().iter().collect()),
        }
    }
}

/// Process exit status for a failed command: 2 for bad input, 1 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_)
        | Error::InvalidField(_)
        | Error::UnsupportedCharacteristic { .. }
        | Error::DegreeOutOfRange { .. }
        | Error::InvalidPartition(_)
        | Error::Parse(_) => 2,
        _ => 1,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema_version: u32,
    pub group: GroupKind,
    pub n: usize,
    pub p: u64,
    pub f: u32,
    pub order: usize,
}

impl Header {
    fn new(cfg: &RunConfig, alg: &Algebra) -> Self {
        Header {
            schema_version: SCHEMA_VERSION,
            group: cfg.group,
            n: cfg.n,
            p: cfg.field.p(),
            f: cfg.field.f(),
            order: alg.order(),
        }
    }

    fn group_name(&self) -> String {
        let group = match self.group {
            GroupKind::Sn => "S",
            GroupKind::An => "A",
        };
        format!("{group}_{}", self.n)
    }

    fn title(&self) -> String {
        let field = FieldSpec::new(self.p, self.f).map(|f| f.to_string()).unwrap_or_default();
        format!("{field}{}", self.group_name())
    }
}

// ---------------------------------------------------------------- decompose

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCoefficient {
    pub class: String,
    pub size: usize,
    pub coeff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementCoefficient {
    pub element: String,
    pub coeff: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "layout", content = "entries", rename_all = "snake_case")]
pub enum Coefficients {
    ByClass(Vec<ClassCoefficient>),
    PerElement(Vec<ElementCoefficient>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdempotentInfo {
    pub coefficients: Coefficients,
    /// Rank of `F_q G·e`, computed for small groups.
    pub ideal_dimension: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockInfo {
    pub name: String,
    pub label: BlockLabel,
    pub algebra: String,
    pub matrix_size: usize,
    pub field_degree: u32,
    pub fq_dimension: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<IdempotentInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    #[serde(flatten)]
    pub header: Header,
    pub summary: String,
    pub blocks: Vec<BlockInfo>,
}

/// `decompose` (`with_idempotents = false`) and `idempotents`.
pub fn decompose(cfg: &RunConfig, with_idempotents: bool) -> Result<DecompositionReport> {
    let dec = Decomposition::compute(cfg.group, cfg.n, cfg.field)?;
    let alg = dec.algebra();
    let selected = if with_idempotents { cfg.selected(&dec)? } else { dec.blocks().iter().collect() };
    let blocks = selected
        .into_iter()
        .map(|b| {
            let mut info = BlockInfo {
                name: b.label.to_string(),
                label: b.label.clone(),
                algebra: b.render(&cfg.field),
                matrix_size: b.matrix_size,
                field_degree: b.field_degree,
                fq_dimension: b.fq_dimension,
                idempotent: None,
                note: None,
            };
            if with_idempotents {
                match &b.generator {
                    Some(e) => info.idempotent = Some(idempotent_info(alg, e, cfg.verbose)),
                    None => {
                        info.note = Some(format!(
                            "the idempotent needs a square root outside F_{}; it lies in {} but not in the prime field",
                            cfg.field.p(),
                            cfg.field
                        ))
                    }
                }
            }
            info
        })
        .collect();
    Ok(DecompositionReport { header: Header::new(cfg, alg), summary: dec.summary(), blocks })
}

fn idempotent_info(alg: &Algebra, e: &Element, per_element: bool) -> IdempotentInfo {
    let group = alg.group();
    let coefficients = if per_element {
        Coefficients::PerElement(
            group
                .elements()
                .iter()
                .zip(e.coeffs())
                .map(|(g, &coeff)| ElementCoefficient { element: g.to_string(), coeff })
                .collect(),
        )
    } else {
        debug_assert!(alg.is_class_function(e));
        Coefficients::ByClass(
            group
                .classes()
                .iter()
                .map(|c| ClassCoefficient { class: c.label.to_string(), size: c.size(), coeff: e.coeff(c.members[0]) })
                .collect(),
        )
    };
    let ideal_dimension = (alg.order() <= IDEAL_CHECK_LIMIT).then(|| alg.ideal_dimension(e));
    IdempotentInfo { coefficients, ideal_dimension }
}

impl DecompositionReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} = {}\n", self.header.title(), self.summary);
        for b in &self.blocks {
            let _ = writeln!(out, "  {:<16} {:<12} dim {}", b.name, b.algebra, b.fq_dimension);
            if let Some(id) = &b.idempotent {
                match &id.coefficients {
                    Coefficients::ByClass(cs) => {
                        for c in cs {
                            let _ = writeln!(out, "      class {:<12} size {:<5} coeff {}", c.class, c.size, c.coeff);
                        }
                    }
                    Coefficients::PerElement(es) => {
                        let terms: Vec<String> =
                            es.iter().filter(|e| e.coeff != 0).map(|e| format!("{}{}", e.coeff, e.element)).collect();
                        let _ = writeln!(
                            out,
                            "      e = {}",
                            if terms.is_empty() { "0".into() } else { terms.join(" + ") }
                        );
                    }
                }
                if let Some(d) = id.ideal_dimension {
                    let _ = writeln!(out, "      ideal dimension {d}");
                }
            }
            if let Some(note) = &b.note {
                let _ = writeln!(out, "      note: {note}");
            }
        }
        out
    }
}

// ---------------------------------------------------------------- distance

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStatus {
    Certified,
    Bounds,
    ZeroCode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceInfo {
    pub status: DistanceStatus,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub witness: Vec<u64>,
    /// `q^k`, the number of codewords an exhaustive scan visits.
    pub codewords: u128,
    pub threshold: u64,
}

impl DistanceInfo {
    fn new(distance: &Distance, codewords: u128, threshold: u64) -> Self {
        let (status, lower, upper, witness) = match distance {
            Distance::Certified { d, witness } => (DistanceStatus::Certified, Some(*d), Some(*d), witness.clone()),
            Distance::Bounds { lower, upper, witness } => {
                (DistanceStatus::Bounds, Some(*lower), Some(*upper), witness.clone())
            }
            Distance::ZeroCode => (DistanceStatus::ZeroCode, None, None, Vec::new()),
        };
        DistanceInfo { status, lower, upper, witness, codewords, threshold }
    }

    fn describe(&self) -> String {
        match self.status {
            DistanceStatus::Certified => format!("d = {} (certified)", self.upper.unwrap_or(0)),
            DistanceStatus::Bounds => format!(
                "{} ≤ d ≤ {} (uncertified: {} codewords exceed the threshold {})",
                self.lower.unwrap_or(1),
                self.upper.unwrap_or(0),
                self.codewords,
                self.threshold
            ),
            DistanceStatus::ZeroCode => "zero code".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDistance {
    pub block: String,
    pub n: usize,
    pub k: usize,
    pub distance: DistanceInfo,
    pub weight_distribution: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceReport {
    #[serde(flatten)]
    pub header: Header,
    pub codes: Vec<BlockDistance>,
}

impl DistanceReport {
    pub fn certified(&self) -> bool {
        self.codes.iter().all(|c| c.distance.status != DistanceStatus::Bounds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} block codes\n", self.header.title());
        for c in &self.codes {
            let _ = writeln!(out, "  {:<16} [{},{}]  {}", c.block, c.n, c.k, c.distance.describe());
            if let Some(wd) = &c.weight_distribution {
                let nonzero: Vec<String> =
                    wd.iter().enumerate().filter(|(_, &a)| a != 0).map(|(w, a)| format!("A_{w}={a}")).collect();
                let _ = writeln!(out, "      weights {}", nonzero.join(" "));
            }
        }
        out
    }
}

fn distance_config(cfg: &RunConfig) -> DistanceConfig {
    DistanceConfig { threshold: cfg.threshold, seed: cfg.seed, ..DistanceConfig::default() }
}

fn block_generator(block: &Block) -> Result<&Element> {
    block.generator.as_ref().ok_or_else(|| Error::OutsidePrimeField(block.label.to_string()))
}

pub fn distance(cfg: &RunConfig) -> Result<DistanceReport> {
    cfg.require_prime_field("distance")?;
    let dec = Decomposition::compute(cfg.group, cfg.n, cfg.field)?;
    let alg = dec.algebra();
    let codes = cfg
        .selected(&dec)?
        .into_iter()
        .map(|b| {
            let code = ideal_to_code(alg, block_generator(b)?)?;
            let d = min_distance(&code, &distance_config(cfg));
            Ok(BlockDistance {
                block: b.label.to_string(),
                n: code.length(),
                k: code.dimension(),
                distance: DistanceInfo::new(&d, code.size(), cfg.threshold),
                weight_distribution: weight_distribution(&code, cfg.threshold).ok(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(DistanceReport { header: Header::new(cfg, alg), codes })
}

// ---------------------------------------------------------------- essential

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupInfo {
    pub order: usize,
    pub elements: Vec<String>,
}

impl SubgroupInfo {
    fn new(group: &Group, h: &Subgroup) -> Self {
        SubgroupInfo { order: h.order(), elements: h.members().iter().map(|&i| group.element(i).to_string()).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialVerdict {
    pub block: String,
    pub essential: bool,
    /// A subgroup `H ≠ {1}` with `e·Ĥ ≠ 0`.
    pub witness: Option<SubgroupInfo>,
    /// Verdict over every nontrivial subgroup (verbose runs on small groups only).
    pub lattice_agrees: Option<bool>,
    /// Order of `{g : g·e = e}`; 1 exactly when `g ↦ g·e` is injective.
    pub kernel_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialReport {
    #[serde(flatten)]
    pub header: Header,
    pub verdicts: Vec<EssentialVerdict>,
}

fn essential_verdict(alg: &Algebra, block: &Block, lattice: bool) -> Result<EssentialVerdict> {
    let e = block_generator(block)?;
    let verdict = alg.is_essential(e)?;
    let lattice_agrees = if lattice && alg.order() <= LATTICE_CHECK_LIMIT {
        Some(alg.is_essential_all_subgroups(e)?.essential == verdict.essential)
    } else {
        None
    };
    Ok(EssentialVerdict {
        block: block.label.to_string(),
        essential: verdict.essential,
        witness: verdict.witness.map(|h| SubgroupInfo::new(alg.group(), &h)),
        lattice_agrees,
        kernel_order: alg.translation_kernel(e).order(),
    })
}

pub fn essential(cfg: &RunConfig) -> Result<EssentialReport> {
    cfg.require_prime_field("essential")?;
    let dec = Decomposition::compute(cfg.group, cfg.n, cfg.field)?;
    let alg = dec.algebra();
    let verdicts =
        cfg.selected(&dec)?.into_iter().map(|b| essential_verdict(alg, b, cfg.verbose)).collect::<Result<_>>()?;
    Ok(EssentialReport { header: Header::new(cfg, alg), verdicts })
}

fn describe_essential(v: &EssentialVerdict) -> String {
    let mut s = if v.essential { "essential".to_string() } else { "not essential".to_string() };
    if let Some(w) = &v.witness {
        let _ = write!(s, " (witness H of order {}: {})", w.order, w.elements.join(" "));
    }
    match v.lattice_agrees {
        Some(true) => s.push_str("; confirmed over all subgroups"),
        Some(false) => s.push_str("; DISAGREES with the full subgroup lattice"),
        None => {}
    }
    if v.kernel_order == 1 {
        s.push_str("; g ↦ g·e injective");
    } else {
        let _ = write!(s, "; g ↦ g·e has kernel of order {}", v.kernel_order);
    }
    s
}

impl EssentialReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} essentiality\n", self.header.title());
        for v in &self.verdicts {
            let _ = writeln!(out, "  {:<16} {}", v.block, describe_essential(v));
        }
        out
    }
}

// ---------------------------------------------------------------- code

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCode {
    pub block: String,
    pub code: CodeJson,
    pub distance: DistanceInfo,
    pub essential: EssentialVerdict,
    pub best_known: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    #[serde(flatten)]
    pub header: Header,
    /// Coordinates are the group elements in this order.
    pub coordinates: Vec<String>,
    pub codes: Vec<BlockCode>,
}

pub fn code(cfg: &RunConfig) -> Result<CodeReport> {
    cfg.require_prime_field("code")?;
    let dec = Decomposition::compute(cfg.group, cfg.n, cfg.field)?;
    let alg = dec.algebra();
    let codes = cfg
        .selected(&dec)?
        .into_iter()
        .map(|b| {
            let code = ideal_to_code(alg, block_generator(b)?)?;
            let d = min_distance(&code, &distance_config(cfg));
            Ok(BlockCode {
                block: b.label.to_string(),
                code: CodeJson::new(&code, &d),
                distance: DistanceInfo::new(&d, code.size(), cfg.threshold),
                essential: essential_verdict(alg, b, cfg.verbose)?,
                best_known: best_known_lookup(code.length(), code.dimension(), cfg.field.p()),
            })
        })
        .collect::<Result<_>>()?;
    let coordinates = alg.group().elements().iter().map(|g| g.to_string()).collect();
    Ok(CodeReport { header: Header::new(cfg, alg), coordinates, codes })
}

impl CodeReport {
    pub fn certified(&self) -> bool {
        self.codes.iter().all(|c| c.distance.status != DistanceStatus::Bounds)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} minimal codes\n", self.header.title());
        let _ = writeln!(out, "coordinates: {}", self.coordinates.join(" "));
        for c in &self.codes {
            let d = c.code.d.map_or("?".to_string(), |d| d.to_string());
            let _ = writeln!(out, "\n{}  [{},{},{}]  {}", c.block, c.code.n, c.code.k, d, c.distance.describe());
            let _ = writeln!(out, "  {}", describe_essential(&c.essential));
            if let Some(b) = c.best_known {
                let _ = writeln!(out, "  best known d for [{},{}]: {b}", c.code.n, c.code.k);
            }
            for row in &c.code.gen {
                let digits: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  {}", digits.join(" "));
            }
        }
        out
    }
}

// ---------------------------------------------------------------- chartable

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassColumn {
    pub label: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterLine {
    pub label: String,
    pub values: Vec<ExactValue>,
    /// The values reduced into `F_p`, where they lie there.
    pub mod_p: Vec<Option<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartableReport {
    #[serde(flatten)]
    pub header: Header,
    pub classes: Vec<ClassColumn>,
    pub rows: Vec<CharacterLine>,
    pub rows_orthonormal: bool,
    pub columns_orthogonal: bool,
}

pub fn chartable(cfg: &RunConfig) -> Result<ChartableReport> {
    let group = Group::new(cfg.group, cfg.n)?;
    let p = cfg.field.p();
    let line = |label: String, values: Vec<ExactValue>| CharacterLine {
        label,
        mod_p: values.iter().map(|v| v.reduce(p)).collect(),
        values,
    };
    let classes: Vec<ClassColumn> =
        group.classes().iter().map(|c| ClassColumn { label: c.label.to_string(), size: c.size() }).collect();
    let header = Header {
        schema_version: SCHEMA_VERSION,
        group: cfg.group,
        n: cfg.n,
        p,
        f: cfg.field.f(),
        order: group.order(),
    };
    match cfg.group {
        GroupKind::An => {
            let table = AnCharacterTable::new(&group)?;
            let rows = table.rows.iter().map(|r| line(r.label.to_string(), r.values.clone())).collect();
            Ok(ChartableReport {
                header,
                classes,
                rows,
                rows_orthonormal: table.rows_orthonormal(),
                columns_orthogonal: table.columns_orthogonal(),
            })
        }
        GroupKind::Sn => {
            let ints: Vec<(String, Vec<i64>)> = partitions_of(cfg.n)
                .into_iter()
                .map(|l| {
                    let vals = group.classes().iter().map(|c| mn_character(&l, &c.label.cycle_type)).collect();
                    (l.to_string(), vals)
                })
                .collect();
            let sizes: Vec<i128> = classes.iter().map(|c| c.size as i128).collect();
            let order = group.order() as i128;
            let rows_orthonormal = ints.iter().enumerate().all(|(i, (_, a))| {
                ints.iter().enumerate().all(|(j, (_, b))| {
                    let s: i128 = a.iter().zip(b).zip(&sizes).map(|((&x, &y), &c)| c * x as i128 * y as i128).sum();
                    s == if i == j { order } else { 0 }
                })
            });
            let columns_orthogonal = (0..sizes.len()).all(|c| {
                (0..sizes.len()).all(|d| {
                    let s: i128 = ints.iter().map(|(_, r)| r[c] as i128 * r[d] as i128).sum();
                    s == if c == d { order / sizes[c] } else { 0 }
                })
            });
            let rows = ints
                .into_iter()
                .map(|(label, vals)| line(label, vals.into_iter().map(ExactValue::integer).collect()))
                .collect();
            Ok(ChartableReport { header, classes, rows, rows_orthonormal, columns_orthogonal })
        }
    }
}

impl ChartableReport {
    pub fn to_text(&self) -> String {
        let header = self.classes.iter().map(|c| c.label.as_str());
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| std::iter::once(r.label.clone()).chain(r.values.iter().map(|v| v.to_string())).collect())
            .collect();
        let first: Vec<String> = std::iter::once("χ \\ class".to_string()).chain(header.map(String::from)).collect();
        let sizes: Vec<String> =
            std::iter::once("size".to_string()).chain(self.classes.iter().map(|c| c.size.to_string())).collect();
        let lines: Vec<&Vec<String>> = std::iter::once(&first).chain(std::iter::once(&sizes)).chain(&body).collect();
        let cols = first.len();
        let widths: Vec<usize> =
            (0..cols).map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0)).collect();
        let mut out = format!("character table of {}\n", self.header.group_name());
        for l in lines {
            let cells: Vec<String> = l.iter().zip(&widths).map(|(s, &w)| format!("{s:>w$}")).collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        let _ = writeln!(out, "row orthogonality: {}", verdict(self.rows_orthonormal));
        let _ = writeln!(out, "column orthogonality: {}", verdict(self.columns_orthogonal));
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "verified"
    } else {
        "FAILED"
    }
}
