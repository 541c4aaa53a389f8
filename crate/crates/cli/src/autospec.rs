//! Automorphism specifications passed on the command line: either an
//! arrow-level map (completed multiplicatively along paths) or a full
//! matrix over the basis.

use std::collections::BTreeMap;

use serde::Deserialize;

use qalg_core::{Algebra, AlgebraMorphism, BasisLabel, Scalar};

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowImage {
    pub coeff: String,
    pub arrow: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutoSpec {
    /// Vertex permutation by name; unlisted vertices stay fixed.
    #[serde(default)]
    pub vertices: BTreeMap<String, String>,
    /// Arrow images; unlisted arrows stay fixed.
    #[serde(default)]
    pub arrows: BTreeMap<String, ArrowImage>,
    /// Full matrix over the basis: `matrix[i][j]` is the coefficient of
    /// basis vector `i` in the image of basis vector `j`.
    #[serde(default)]
    pub matrix: Option<Vec<Vec<String>>>,
}

pub fn parse_spec(text: &str) -> Result<AutoSpec, CliError> {
    serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("invalid automorphism spec: {e}")))
}

/// Build and verify the automorphism described by a spec.
pub fn build_morphism(a: &Algebra, spec: &AutoSpec) -> Result<AlgebraMorphism, CliError> {
    let field = a.field();
    let morphism = if let Some(rows) = &spec.matrix {
        let n = a.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Parse(format!(
                "matrix must be {n} x {n} for this algebra"
            )));
        }
        let mut columns = vec![vec![Scalar::zero(field); n]; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                columns[j][i] = Scalar::parse(cell, field).map_err(CliError::parse)?;
            }
        }
        AlgebraMorphism { columns }
    } else {
        // arrow-level: complete multiplicatively over the path basis
        let vertex_image = |v: &str| -> String {
            spec.vertices.get(v).cloned().unwrap_or_else(|| v.to_string())
        };
        let arrow_image = |name: &str| -> Result<(Scalar, String), CliError> {
            match spec.arrows.get(name) {
                Some(img) => Ok((
                    Scalar::parse(&img.coeff, field).map_err(CliError::parse)?,
                    img.arrow.clone(),
                )),
                None => Ok((Scalar::one(field), name.to_string())),
            }
        };
        let mut columns = vec![];
        for j in 0..a.dim() {
            let image = match a.label(j) {
                BasisLabel::Vertex(v) => {
                    let target = BasisLabel::Vertex(vertex_image(v));
                    let idx = a.label_index(&target).ok_or_else(|| {
                        CliError::Parse(format!("vertex image `{target}` is not a basis vector"))
                    })?;
                    a.basis_element(idx)
                }
                BasisLabel::Path(names) => {
                    let mut acc: Option<qalg_core::Element> = None;
                    let mut scale = Scalar::one(field);
                    for name in names {
                        let (c, target) = arrow_image(name)?;
                        scale = scale.mul(&c);
                        let idx = a
                            .label_index(&BasisLabel::Path(vec![target.clone()]))
                            .ok_or_else(|| {
                                CliError::Parse(format!(
                                    "arrow image `{target}` is not a basis vector"
                                ))
                            })?;
                        let step = a.basis_element(idx);
                        acc = Some(match acc {
                            None => step,
                            Some(prev) => a.mul_unchecked(&prev, &step),
                        });
                    }
                    let v = acc.ok_or_else(|| CliError::Parse("empty path label".into()))?;
                    a.scale(&scale, &v)
                }
                other => {
                    return Err(CliError::Parse(format!(
                        "arrow-level specs apply to presentation-built algebras; \
                         basis label `{other}` needs a matrix spec"
                    )))
                }
            };
            columns.push(image.coeffs);
        }
        AlgebraMorphism { columns }
    };
    morphism.verify_automorphism(a).map_err(CliError::compute)?;
    Ok(morphism)
}
