//! The JSON file format for algebras.
//!
//! Presentation files carry `field`, `quiver`, `relations` and
//! `truncate_radical`; scalars are strings in the exact-field grammar.
//! Constructed algebras round-trip through the same schema in structure
//! constant form: a `table` object with the retained `basis_labels`.

use serde::{Deserialize, Serialize};

use qalg_core::algebra::SparseVec;
use qalg_core::{
    build_algebra, Algebra, Arrow, BasisLabel, FieldDescriptor, Presentation, Quiver, Relation,
    Scalar,
};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FieldSpec {
    Rationals,
    Cyclotomic { n: u64 },
    Prime { p: u64 },
}

impl FieldSpec {
    pub fn descriptor(&self) -> Result<FieldDescriptor, CliError> {
        match self {
            FieldSpec::Rationals => Ok(FieldDescriptor::Rationals),
            FieldSpec::Cyclotomic { n } => {
                FieldDescriptor::cyclotomic(*n).map_err(CliError::parse)
            }
            FieldSpec::Prime { p } => FieldDescriptor::prime(*p).map_err(CliError::parse),
        }
    }

    pub fn of(fd: FieldDescriptor) -> FieldSpec {
        match fd {
            FieldDescriptor::Rationals => FieldSpec::Rationals,
            FieldDescriptor::CyclotomicRationals(n) => FieldSpec::Cyclotomic { n },
            FieldDescriptor::PrimeField(p) => FieldSpec::Prime { p },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntrySpec {
    pub basis: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<EntrySpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableSpec {
    pub products: Vec<ProductSpec>,
    pub unit_idempotents: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<RelationSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncate_radical: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<BasisLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSpec>,
}

impl AlgebraFile {
    pub fn from_presentation_parts(
        field: FieldDescriptor,
        quiver: &Quiver,
        relations: &[Relation],
        truncate: usize,
    ) -> AlgebraFile {
        AlgebraFile {
            field: FieldSpec::of(field),
            quiver: Some(QuiverSpec {
                vertices: quiver.vertices.clone(),
                arrows: quiver
                    .arrows
                    .iter()
                    .map(|a| ArrowSpec {
                        name: a.name.clone(),
                        source: a.source.clone(),
                        target: a.target.clone(),
                    })
                    .collect(),
            }),
            relations: relations
                .iter()
                .map(|r| RelationSpec {
                    terms: r
                        .terms
                        .iter()
                        .map(|(c, p)| TermSpec { coeff: c.to_string(), path: p.clone() })
                        .collect(),
                })
                .collect(),
            truncate_radical: Some(truncate),
            basis_labels: None,
            table: None,
        }
    }

    /// Serialize a constructed algebra in structure-constant form,
    /// retaining the basis labels.
    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        let mut products = vec![];
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let entry = a.table_entry(i, j);
                if entry.is_empty() {
                    continue;
                }
                products.push(ProductSpec {
                    left: i,
                    right: j,
                    terms: entry
                        .iter()
                        .map(|(k, c)| EntrySpec { basis: *k, coeff: c.to_string() })
                        .collect(),
                });
            }
        }
        AlgebraFile {
            field: FieldSpec::of(a.field()),
            quiver: None,
            relations: vec![],
            truncate_radical: None,
            basis_labels: Some(a.basis().to_vec()),
            table: Some(TableSpec {
                products,
                unit_idempotents: a.unit_idempotents().to_vec(),
                grading: a.grading().map(|g| g.to_vec()),
            }),
        }
    }

    /// Build the algebra this file describes. Structure-constant form is
    /// validated through the full axiom check; presentation form goes
    /// through the quiver presentation pipeline.
    pub fn to_algebra(&self) -> Result<Algebra, CliError> {
        let field = self.field.descriptor()?;
        if let Some(table) = &self.table {
            let labels = self
                .basis_labels
                .clone()
                .ok_or_else(|| CliError::Parse("table form requires basis_labels".into()))?;
            let dim = labels.len();
            let mut t = vec![vec![SparseVec::new(); dim]; dim];
            for p in &table.products {
                if p.left >= dim || p.right >= dim {
                    return Err(CliError::Parse("product indices out of range".into()));
                }
                let mut entry = SparseVec::new();
                for e in &p.terms {
                    if e.basis >= dim {
                        return Err(CliError::Parse("basis index out of range".into()));
                    }
                    let c = Scalar::parse(&e.coeff, field).map_err(CliError::parse)?;
                    if !c.is_zero() {
                        entry.push((e.basis, c));
                    }
                }
                entry.sort_by_key(|(k, _)| *k);
                t[p.left][p.right] = entry;
            }
            for &u in &table.unit_idempotents {
                if u >= dim {
                    return Err(CliError::Parse("unit idempotent index out of range".into()));
                }
            }
            if let Some(g) = &table.grading {
                if g.len() != dim {
                    return Err(CliError::Parse("grading length mismatch".into()));
                }
            }
            let algebra = Algebra::new(
                field,
                labels,
                t,
                table.unit_idempotents.clone(),
                table.grading.clone(),
            );
            let violations = algebra.check();
            if !violations.is_empty() {
                return Err(CliError::Parse(format!(
                    "structure constants violate the algebra axioms: {}",
                    violations[0]
                )));
            }
            return Ok(algebra);
        }
        let quiver_spec = self
            .quiver
            .as_ref()
            .ok_or_else(|| CliError::Parse("file needs either a quiver or a table".into()))?;
        let quiver = Quiver::new(
            quiver_spec.vertices.clone(),
            quiver_spec
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.source.clone(),
                    target: a.target.clone(),
                })
                .collect(),
        )
        .map_err(CliError::parse)?;
        let mut relations = vec![];
        for r in &self.relations {
            let mut terms = vec![];
            for t in &r.terms {
                let c = Scalar::parse(&t.coeff, field).map_err(CliError::parse)?;
                terms.push((c, t.path.clone()));
            }
            relations.push(Relation { terms });
        }
        let presentation = Presentation {
            field,
            quiver,
            relations,
            truncate_radical: self.truncate_radical.unwrap_or(3),
        };
        build_algebra(&presentation).map_err(CliError::parse)
    }
}

pub fn load_file(path: &std::path::Path) -> Result<(AlgebraFile, Vec<u8>), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file: AlgebraFile = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::Parse(format!("invalid JSON in {}: {e}", path.display())))?;
    Ok((file, bytes))
}
