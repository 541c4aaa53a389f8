//! Construction of finite dimensional algebras from quiver presentations.
//!
//! The algebra of a presentation is the path algebra modulo the given
//! relations together with all paths of length `truncate_radical`. Relations
//! must be homogeneous of path length at least 2, so the result is graded by
//! path length.

use crate::algebra::{Algebra, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::quiver::{BasisLabel, Quiver};
use crate::radical;
use crate::scalar::{FieldDescriptor, Scalar};

/// One relation: a linear combination of parallel paths set to zero.
/// Terms are `(coefficient, arrow name sequence)`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: FieldDescriptor,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub truncate_radical: usize,
}

impl Presentation {
    pub fn validate(&self) -> Result<()> {
        self.quiver.validate()?;
        if !(2..=3).contains(&self.truncate_radical) {
            return Err(Error::InvalidTruncation(self.truncate_radical));
        }
        for rel in &self.relations {
            if rel.terms.is_empty() {
                return Err(Error::DegenerateRelation);
            }
            let mut sig: Option<(String, String, usize)> = None;
            for (coeff, path) in &rel.terms {
                if coeff.is_zero() {
                    return Err(Error::DegenerateRelation);
                }
                if coeff.field() != self.field {
                    return Err(Error::FieldMismatch);
                }
                if path.len() < 2 {
                    return Err(Error::NonHomogeneousRelation(format!(
                        "term of length {}",
                        path.len()
                    )));
                }
                let mut prev_target: Option<String> = None;
                for name in path {
                    let arrow = self
                        .quiver
                        .arrow(name)
                        .ok_or_else(|| Error::UnknownArrow(name.clone()))?;
                    if let Some(t) = &prev_target {
                        if *t != arrow.source {
                            return Err(Error::BrokenPath(path.join("*")));
                        }
                    }
                    prev_target = Some(arrow.target.clone());
                }
                let first = self.quiver.arrow(&path[0]).unwrap();
                let last = self.quiver.arrow(path.last().unwrap()).unwrap();
                let this_sig = (first.source.clone(), last.target.clone(), path.len());
                match &sig {
                    None => sig = Some(this_sig),
                    Some(s) => {
                        if s.2 != this_sig.2 {
                            return Err(Error::NonHomogeneousRelation(format!(
                                "lengths {} and {}",
                                s.2, this_sig.2
                            )));
                        }
                        if s.0 != this_sig.0 || s.1 != this_sig.1 {
                            return Err(Error::NonParallelRelation(format!(
                                "({} -> {}) vs ({} -> {})",
                                s.0, s.1, this_sig.0, this_sig.1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Build the algebra of a presentation.
///
/// The basis consists of the vertices, the arrows, and an echelon basis of
/// the length-2 paths modulo the relation span; the echelon step eliminates
/// later paths in enumeration order, keeping earlier ones as
/// representatives. Products of length `>= truncate_radical` vanish.
pub fn build_algebra(p: &Presentation) -> Result<Algebra> {
    p.validate()?;
    let field = p.field;
    let q = &p.quiver;
    let nv = q.vertices.len();
    let na = q.arrows.len();

    // Enumerate composable arrow pairs in (first, second) order.
    let mut paths2: Vec<(usize, usize)> = vec![];
    for (i, a) in q.arrows.iter().enumerate() {
        for (j, b) in q.arrows.iter().enumerate() {
            if a.target == b.source {
                paths2.push((i, j));
            }
        }
    }
    let np = paths2.len();

    // Relation rows in reversed path coordinates, so that echelonization
    // eliminates the later path of each relation.
    let mut kept: Vec<usize> = (0..np).collect();
    let mut reduce2: Vec<SparseVec> = (0..np).map(|i| vec![(i, Scalar::one(field))]).collect();
    if p.truncate_radical > 2 && !p.relations.is_empty() {
        let mut rows: Vec<Vec<Scalar>> = vec![];
        for rel in &p.relations {
            if rel.terms[0].1.len() != 2 {
                // relations of length >= truncate_radical are vacuous
                continue;
            }
            let mut row = vec![Scalar::zero(field); np];
            for (coeff, path) in &rel.terms {
                let ai = q.arrows.iter().position(|a| a.name == path[0]).unwrap();
                let bi = q.arrows.iter().position(|a| a.name == path[1]).unwrap();
                let pi = paths2
                    .iter()
                    .position(|&(x, y)| (x, y) == (ai, bi))
                    .expect("validated path is composable");
                // reversed coordinate
                row[np - 1 - pi] = row[np - 1 - pi].add(coeff);
            }
            rows.push(row);
        }
        if !rows.is_empty() {
            let mut m = Mat::from_rows(field, rows);
            let pivots = m.rref();
            let eliminated: Vec<usize> = pivots.iter().map(|&c| np - 1 - c).collect();
            kept = (0..np).filter(|i| !eliminated.contains(i)).collect();
            for (r, &c) in pivots.iter().enumerate() {
                let orig = np - 1 - c;
                let mut expr: SparseVec = vec![];
                for c2 in 0..np {
                    if c2 == c {
                        continue;
                    }
                    let v = m.get(r, c2);
                    if !v.is_zero() {
                        expr.push((np - 1 - c2, v.neg()));
                    }
                }
                expr.sort_by_key(|(i, _)| *i);
                reduce2[orig] = expr;
            }
        }
    } else if p.truncate_radical == 2 {
        kept.clear();
    }

    let dim = nv + na + kept.len();
    let mut basis: Vec<BasisLabel> = vec![];
    for v in &q.vertices {
        basis.push(BasisLabel::Vertex(v.clone()));
    }
    for a in &q.arrows {
        basis.push(BasisLabel::Path(vec![a.name.clone()]));
    }
    for &pi in &kept {
        let (a, b) = paths2[pi];
        basis.push(BasisLabel::Path(vec![
            q.arrows[a].name.clone(),
            q.arrows[b].name.clone(),
        ]));
    }
    let path_pos: std::collections::HashMap<usize, usize> = kept
        .iter()
        .enumerate()
        .map(|(slot, &pi)| (pi, nv + na + slot))
        .collect();

    // expression of a raw length-2 path in the chosen basis
    let path_expr = |pi: usize| -> SparseVec {
        reduce2[pi]
            .iter()
            .filter_map(|(k, c)| path_pos.get(k).map(|&pos| (pos, c.clone())))
            .collect()
    };

    let one = Scalar::one(field);
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    let src_of_arrow: Vec<usize> = q
        .arrows
        .iter()
        .map(|a| q.vertex_index(&a.source).unwrap())
        .collect();
    let tgt_of_arrow: Vec<usize> = q
        .arrows
        .iter()
        .map(|a| q.vertex_index(&a.target).unwrap())
        .collect();

    // source/target vertex of every basis index
    let mut src = vec![0usize; dim];
    let mut tgt = vec![0usize; dim];
    for v in 0..nv {
        src[v] = v;
        tgt[v] = v;
    }
    src[nv..nv + na].copy_from_slice(&src_of_arrow);
    tgt[nv..nv + na].copy_from_slice(&tgt_of_arrow);
    for (slot, &pi) in kept.iter().enumerate() {
        let (a, b) = paths2[pi];
        src[nv + na + slot] = src_of_arrow[a];
        tgt[nv + na + slot] = tgt_of_arrow[b];
    }

    for i in 0..dim {
        for j in 0..dim {
            let entry: SparseVec = if i < nv && j < nv {
                if i == j {
                    vec![(i, one.clone())]
                } else {
                    vec![]
                }
            } else if i < nv {
                // vertex * (arrow or path)
                if src[j] == i {
                    vec![(j, one.clone())]
                } else {
                    vec![]
                }
            } else if j < nv {
                if tgt[i] == j {
                    vec![(i, one.clone())]
                } else {
                    vec![]
                }
            } else if i < nv + na && j < nv + na {
                // arrow * arrow
                let ai = i - nv;
                let bj = j - nv;
                if tgt_of_arrow[ai] != src_of_arrow[bj] || p.truncate_radical == 2 {
                    vec![]
                } else {
                    let pi = paths2
                        .iter()
                        .position(|&(x, y)| (x, y) == (ai, bj))
                        .unwrap();
                    path_expr(pi)
                }
            } else {
                // anything of total length >= 3 vanishes
                vec![]
            };
            table[i][j] = entry;
        }
    }

    let mut grading = vec![0usize; dim];
    for g in grading.iter_mut().take(nv + na).skip(nv) {
        *g = 1;
    }
    for g in grading.iter_mut().skip(nv + na) {
        *g = 2;
    }

    let algebra = Algebra::new(
        field,
        basis,
        table,
        (0..nv).collect(),
        Some(grading.clone()),
    );
    align_socle_with_basis(algebra, &grading)
}

/// Ensure the socle is spanned by basis vectors, re-choosing the basis
/// degree by degree when necessary so that the trace functional below is
/// well defined on labels.
fn align_socle_with_basis(a: Algebra, grading: &[usize]) -> Result<Algebra> {
    let soc = radical::socle(&a)?;
    let aligned = (0..a.dim())
        .filter(|&i| soc.span.contains(&a.basis_element(i).coeffs))
        .count();
    if aligned == soc.span.dim() {
        return Ok(a);
    }
    let field = a.field();
    let dim = a.dim();
    let top = *grading.iter().max().unwrap_or(&0);
    let mut columns: Vec<Vec<Scalar>> = vec![];
    let mut labels: Vec<BasisLabel> = vec![];
    let mut synthetic = 0usize;
    for d in 0..=top {
        let degree_indices: Vec<usize> = (0..dim).filter(|&i| grading[i] == d).collect();
        // socle vectors supported in this degree
        let mut chosen = crate::linalg::Span::new(field, dim);
        let mut local: Vec<(Vec<Scalar>, BasisLabel)> = vec![];
        for v in soc.span.basis() {
            let in_degree = v
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || grading[i] == d);
            if !in_degree || !chosen.insert(v.clone()) {
                continue;
            }
            // reuse the label when the vector is a basis vector
            let label = match degree_indices
                .iter()
                .find(|&&i| a.basis_element(i).coeffs == *v)
            {
                Some(&i) => a.label(i).clone(),
                None => {
                    synthetic += 1;
                    BasisLabel::Indexed("soc".into(), synthetic)
                }
            };
            local.push((v.clone(), label));
        }
        for &i in &degree_indices {
            let v = a.basis_element(i).coeffs;
            if chosen.insert(v.clone()) {
                local.push((v, a.label(i).clone()));
            }
        }
        for (v, l) in local {
            columns.push(v);
            labels.push(l);
        }
    }
    let rebased = a.change_basis(&columns, labels)?;
    // every new basis vector is homogeneous, so the grading carries over
    let new_grading: Vec<usize> = columns
        .iter()
        .map(|col| {
            let i = col.iter().position(|c| !c.is_zero()).unwrap();
            grading[i]
        })
        .collect();
    Ok(rebased.with_grading(Some(new_grading)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_integer(k, q())
    }

    pub(crate) fn one_loop_presentation(truncate: usize) -> Presentation {
        Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["v".into()],
                vec![Arrow { name: "x".into(), source: "v".into(), target: "v".into() }],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: truncate,
        }
    }

    /// The quantum exterior square: loops x, y with x^2, y^2, xy + q yx.
    pub(crate) fn quantum_plane(field: FieldDescriptor, qval: Scalar) -> Presentation {
        Presentation {
            field,
            quiver: Quiver::new(
                vec!["v".into()],
                vec![
                    Arrow { name: "x".into(), source: "v".into(), target: "v".into() },
                    Arrow { name: "y".into(), source: "v".into(), target: "v".into() },
                ],
            )
            .unwrap(),
            relations: vec![
                Relation { terms: vec![(Scalar::one(field), vec!["x".into(), "x".into()])] },
                Relation { terms: vec![(Scalar::one(field), vec!["y".into(), "y".into()])] },
                Relation {
                    terms: vec![
                        (Scalar::one(field), vec!["x".into(), "y".into()]),
                        (qval, vec!["y".into(), "x".into()]),
                    ],
                },
            ],
            truncate_radical: 3,
        }
    }

    pub(crate) fn kronecker() -> Presentation {
        Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["1".into(), "2".into()],
                vec![
                    Arrow { name: "a".into(), source: "1".into(), target: "2".into() },
                    Arrow { name: "b".into(), source: "1".into(), target: "2".into() },
                ],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: 2,
        }
    }

    #[test]
    fn truncated_polynomial_ring() {
        let a = build_algebra(&one_loop_presentation(3)).unwrap();
        assert_eq!(a.dim(), 3);
        assert!(a.check().is_empty());
        let labels: Vec<String> = a.basis().iter().map(|l| l.to_string()).collect();
        assert_eq!(labels, vec!["e(v)", "x", "x*x"]);
    }

    #[test]
    fn quantum_plane_structure() {
        let a = build_algebra(&quantum_plane(q(), s(2))).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.check().is_empty());
        // kept length-2 path is xy; y*x = -(1/2) xy
        let xi = a.label_index(&BasisLabel::Path(vec!["x".into()])).unwrap();
        let yi = a.label_index(&BasisLabel::Path(vec!["y".into()])).unwrap();
        let xyi = a
            .label_index(&BasisLabel::Path(vec!["x".into(), "y".into()]))
            .unwrap();
        let yx = a
            .multiply(&a.basis_element(yi), &a.basis_element(xi))
            .unwrap();
        let mut expected = a.zero_element();
        expected.coeffs[xyi] = Scalar::from_rational(
            num_bigint::BigInt::from(-1),
            num_bigint::BigInt::from(2),
            q(),
        )
        .unwrap();
        assert_eq!(yx, expected);
        // x^2 = 0
        assert!(a
            .multiply(&a.basis_element(xi), &a.basis_element(xi))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn kronecker_is_radical_square_zero() {
        let a = build_algebra(&kronecker()).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.check().is_empty());
        // all arrow products vanish under truncation at 2
        for i in 2..4 {
            for j in 2..4 {
                assert!(a
                    .multiply(&a.basis_element(i), &a.basis_element(j))
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn relation_validation_errors() {
        let mut p = quantum_plane(q(), s(2));
        p.relations.push(Relation {
            terms: vec![(s(1), vec!["x".into()])],
        });
        assert!(matches!(
            build_algebra(&p),
            Err(Error::NonHomogeneousRelation(_))
        ));

        let mut p2 = kronecker();
        p2.truncate_radical = 3;
        p2.relations.push(Relation {
            terms: vec![(s(1), vec!["a".into(), "b".into()])],
        });
        assert!(matches!(build_algebra(&p2), Err(Error::BrokenPath(_))));

        let p3 = Presentation {
            field: q(),
            quiver: Quiver::new(vec![], vec![]).unwrap_or(Quiver {
                vertices: vec![],
                arrows: vec![],
            }),
            relations: vec![],
            truncate_radical: 3,
        };
        assert_eq!(build_algebra(&p3).unwrap_err(), Error::EmptyQuiver);

        let mut p4 = one_loop_presentation(3);
        p4.truncate_radical = 5;
        assert_eq!(build_algebra(&p4).unwrap_err(), Error::InvalidTruncation(5));
    }

    #[test]
    fn non_parallel_relation_rejected() {
        // two vertices with arrows in both directions; a*c and c*a are
        // loops at different vertices, so their sum is not parallel
        let p = Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["1".into(), "2".into()],
                vec![
                    Arrow { name: "a".into(), source: "1".into(), target: "2".into() },
                    Arrow { name: "c".into(), source: "2".into(), target: "1".into() },
                ],
            )
            .unwrap(),
            relations: vec![Relation {
                terms: vec![
                    (s(1), vec!["a".into(), "c".into()]),
                    (s(1), vec!["c".into(), "a".into()]),
                ],
            }],
            truncate_radical: 3,
        };
        assert!(matches!(
            build_algebra(&p),
            Err(Error::NonParallelRelation(_))
        ));
    }
}
