//! Wedderburn block lists of `F_q S_n` and `F_q A_n` with their generating
//! idempotents.
//!
//! `S_n`: one block `M_{d_λ}(F_q)` per `λ ⊢ n`. `A_n`: one block
//! `M_{d_λ}(F_q)` per conjugate pair, one `M_{d_λ/2}(F_{q²})` per
//! self-conjugate `λ ∉ Δ`, and two blocks `M_{d_λ/2}(F_q)` per `λ ∈ Δ`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::chars::{idempotent_from_character, AnCharacterTable, RowLabel, Sign};
use crate::error::{Error, Result};
use crate::ffield::FieldSpec;
use crate::galg::{Algebra, Element};
use crate::perm::GroupKind;
use crate::tableaux::{classify, partitions_of, Classification, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BlockLabel {
    /// A block of `F_q S_n`.
    Partition { lambda: Partition },
    /// `{λ, λ'}` with `λ ≠ λ'`.
    Gamma { lambda: Partition, conjugate: Partition },
    /// `λ = λ' ∉ Δ`.
    SelfConj { lambda: Partition },
    /// `λ = λ' ∈ Δ`, one of the two halves.
    SelfConjSplit { lambda: Partition, sign: Sign },
}

impl BlockLabel {
    pub fn lambda(&self) -> &Partition {
        match self {
            BlockLabel::Partition { lambda }
            | BlockLabel::Gamma { lambda, .. }
            | BlockLabel::SelfConj { lambda }
            | BlockLabel::SelfConjSplit { lambda, .. } => lambda,
        }
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::Partition { lambda } | BlockLabel::SelfConj { lambda } => write!(f, "{lambda}"),
            BlockLabel::Gamma { lambda, conjugate } => write!(f, "{{{lambda},{conjugate}}}"),
            BlockLabel::SelfConjSplit { lambda, sign } => write!(f, "{lambda}{sign}"),
        }
    }
}

/// Selects a block by partition, e.g. `3,1`, `2,2+`, `(2,1)-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSelector {
    pub lambda: Partition,
    pub sign: Option<Sign>,
}

impl FromStr for BlockSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, sign) = if let Some(b) = s.strip_suffix('+') {
            (b, Some(Sign::Plus))
        } else if let Some(b) = s.strip_suffix('-').or_else(|| s.strip_suffix('−')) {
            (b, Some(Sign::Minus))
        } else {
            (s, None)
        };
        Ok(BlockSelector { lambda: body.parse()?, sign })
    }
}

impl BlockSelector {
    pub fn matches(&self, label: &BlockLabel) -> bool {
        match (label, self.sign) {
            (BlockLabel::Partition { lambda }, None) | (BlockLabel::SelfConj { lambda }, None) => {
                *lambda == self.lambda
            }
            (BlockLabel::Gamma { lambda, conjugate }, None) => *lambda == self.lambda || *conjugate == self.lambda,
            (BlockLabel::SelfConjSplit { lambda, sign }, Some(s)) => *lambda == self.lambda && *sign == s,
            _ => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Block {
    pub label: BlockLabel,
    pub matrix_size: usize,
    /// Degree of the block's center over `F_q`: 1 or 2.
    pub field_degree: u32,
    /// `matrix_size² · field_degree`.
    pub fq_dimension: usize,
    /// `None` only when the split idempotents need `√p_λ ∉ F_p` (even `f`).
    pub generator: Option<Element>,
}

impl Block {
    /// `M_k(F_q)` or `F_q` when `k = 1`.
    pub fn render(&self, field: &FieldSpec) -> String {
        let f = field.f() * self.field_degree;
        let base = if f == 1 { format!("F_{}", field.p()) } else { field_name(field.p(), f) };
        if self.matrix_size == 1 {
            base
        } else {
            format!("M_{}({base})", self.matrix_size)
        }
    }
}

/// `F_{p^f}` written as `F_25` when the order is small, else `F_{5^4}`.
fn field_name(p: u64, f: u32) -> String {
    match p.checked_pow(f) {
        Some(q) if q < 100_000 => format!("F_{q}"),
        _ => format!("F_{{{p}^{f}}}"),
    }
}

/// A group algebra with its full list of Wedderburn blocks.
#[derive(Debug, Clone)]
pub struct Decomposition {
    sn: Algebra,
    an: Option<Algebra>,
    blocks: Vec<Block>,
}

impl Decomposition {
    pub fn compute(kind: GroupKind, n: usize, field: FieldSpec) -> Result<Self> {
        let sn = Algebra::new(GroupKind::Sn, n, field)?;
        match kind {
            GroupKind::Sn => {
                let blocks = sn
                    .sn_idempotent_set()?
                    .into_iter()
                    .map(|b| Block {
                        label: BlockLabel::Partition { lambda: b.lambda },
                        matrix_size: b.d,
                        field_degree: 1,
                        fq_dimension: b.d * b.d,
                        generator: Some(b.generator),
                    })
                    .collect();
                Ok(Decomposition { sn, an: None, blocks })
            }
            GroupKind::An => {
                let an = Algebra::new(GroupKind::An, n, field)?;
                let blocks = an_blocks(&sn, &an)?;
                Ok(Decomposition { sn, an: Some(an), blocks })
            }
        }
    }

    /// The algebra whose blocks these are.
    pub fn algebra(&self) -> &Algebra {
        self.an.as_ref().unwrap_or(&self.sn)
    }

    pub fn symmetric_algebra(&self) -> &Algebra {
        &self.sn
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn field(&self) -> &FieldSpec {
        self.sn.field()
    }

    /// e.g. `F_7 ⊕ M_3(F_7) ⊕ F_7 ⊕ F_7`.
    pub fn summary(&self) -> String {
        self.blocks.iter().map(|b| b.render(self.field())).join(" ⊕ ")
    }

    pub fn select(&self, selector: &BlockSelector) -> Result<&Block> {
        self.blocks.iter().find(|b| selector.matches(&b.label)).ok_or_else(|| {
            let known = self.blocks.iter().map(|b| b.label.to_string()).join(", ");
            Error::Usage(format!("no block matches {}; blocks are {known}", selector.lambda))
        })
    }
}

fn an_blocks(sn: &Algebra, an: &Algebra) -> Result<Vec<Block>> {
    let field = *sn.field();
    let mut table: Option<AnCharacterTable> = None;
    let mut blocks = Vec::new();
    for lambda in partitions_of(sn.degree()) {
        let d = lambda.dimension() as usize;
        match classify(&lambda, &field) {
            Classification::GammaPair(conjugate) => {
                if lambda < conjugate {
                    continue;
                }
                let generator = sn.an_pair_idempotent(&lambda, an)?;
                blocks.push(Block {
                    label: BlockLabel::Gamma { lambda, conjugate },
                    matrix_size: d,
                    field_degree: 1,
                    fq_dimension: d * d,
                    generator: Some(generator),
                });
            }
            Classification::SelfConjNonDelta => {
                let generator = sn.an_selfconj_idempotent(&lambda, an)?;
                blocks.push(Block {
                    label: BlockLabel::SelfConj { lambda },
                    matrix_size: d / 2,
                    field_degree: 2,
                    fq_dimension: d * d / 2,
                    generator: Some(generator),
                });
            }
            Classification::SelfConjDelta => {
                let table = match &mut table {
                    Some(t) => t,
                    slot => slot.insert(AnCharacterTable::new(an.group())?),
                };
                for sign in [Sign::Plus, Sign::Minus] {
                    let row = table
                        .row_index(&RowLabel::Split { lambda: lambda.clone(), sign })
                        .expect("every self-conjugate partition has two split rows");
                    let generator = match idempotent_from_character(an, table, row) {
                        Ok(e) => Some(e),
                        Err(Error::OutsidePrimeField(_)) => None,
                        Err(e) => return Err(e),
                    };
                    blocks.push(Block {
                        label: BlockLabel::SelfConjSplit { lambda: lambda.clone(), sign },
                        matrix_size: d / 2,
                        field_degree: 1,
                        fq_dimension: d * d / 4,
                        generator,
                    });
                }
            }
        }
    }
    Ok(blocks)
}
