//! The type of a self-injective algebra and the finite-generation verdict.
//!
//! The type is the underlying graph of the separated quiver of the
//! quotient by the socle. The verdict follows the classification: Dynkin
//! and extended Dynkin types (other than the extended A family) are
//! finitely generated, types beyond extended Dynkin are not, and the
//! extended A family is decided by whether the Nakayama automorphism has
//! finite outer order, which the cycle products of its arrow action
//! detect exactly.

use crate::algebra::Algebra;
use crate::cycles::{cycle_invariants, outer_order, OuterOrder};
use crate::error::{Error, Result};
use crate::frobenius::{
    find_frobenius_form, is_inner, nakayama_from_form, FrobeniusOutcome, SearchOptions,
};
use crate::graphs::{recognize_graph, GraphType, Recognition, UndirectedGraph};
use crate::idempotents::{
    basic_idempotent, separated_quiver, truncate_by_orthogonal_idempotents, verify_basic_split,
};
use crate::radical::{self, SocleQuotient};

#[derive(Debug, Clone, Copy)]
pub struct FgOptions {
    pub bound: u64,
    pub seed: u64,
    pub attempts: u32,
}

impl Default for FgOptions {
    fn default() -> Self {
        FgOptions { bound: 64, seed: 0, attempts: 64 }
    }
}

impl FgOptions {
    fn search(&self) -> SearchOptions {
        SearchOptions { seed: self.seed, attempts: self.attempts }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FgAnswer {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for FgAnswer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FgAnswer::Yes => write!(f, "yes"),
            FgAnswer::No => write!(f, "no"),
            FgAnswer::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReasonStep {
    pub check: String,
    pub rule: String,
    pub outcome: String,
}

#[derive(Debug, Clone)]
pub struct FgVerdict {
    pub answer: FgAnswer,
    pub reasons: Vec<ReasonStep>,
    pub hypothesis_failures: Vec<String>,
    /// Per-component verdicts for disconnected input.
    pub blocks: Vec<FgVerdict>,
}

impl FgVerdict {
    fn push(&mut self, check: &str, rule: &str, outcome: impl Into<String>) {
        self.reasons.push(ReasonStep {
            check: check.into(),
            rule: rule.into(),
            outcome: outcome.into(),
        });
    }

    fn new() -> Self {
        FgVerdict {
            answer: FgAnswer::Unknown,
            reasons: vec![],
            hypothesis_failures: vec![],
            blocks: vec![],
        }
    }
}

pub struct AlgebraTypeReport {
    pub label: GraphType,
    pub recognition: Recognition,
    pub separated: crate::quiver::Quiver,
}

/// The type of a basic split connected Frobenius algebra with cube-zero
/// radical: the underlying graph of the separated quiver of the quotient
/// by the socle, with all components required to share one label.
pub fn algebra_type(a: &Algebra, opts: FgOptions) -> Result<AlgebraTypeReport> {
    verify_basic_split(a)?;
    if !radical::is_connected(a) {
        return Err(Error::Disconnected);
    }
    match find_frobenius_form(a, opts.search()) {
        FrobeniusOutcome::Found(_) => {}
        FrobeniusOutcome::NotFrobenius { .. } => {
            return Err(Error::NotSelfInjective("no nondegenerate form".into()));
        }
    }
    let layers = radical::radical_layers(a)?;
    if layers.len() > 3 {
        return Err(Error::OutOfScope("radical cube is nonzero".into()));
    }
    let quotient = match radical::quotient_by_socle(a)? {
        SocleQuotient::Proper(q) => q,
        SocleQuotient::Zero => {
            return Err(Error::OutOfScope(
                "semisimple algebra has no separated type".into(),
            ))
        }
    };
    let separated = separated_quiver(&quotient)?;
    let graph = UndirectedGraph::from_quiver(&separated)?;
    let recognition = recognize_graph(&graph)?;
    let label = recognition.uniform_label()?;
    Ok(AlgebraTypeReport { label, recognition, separated })
}

/// Decide the finite-generation property through the classification:
/// basify, split into blocks, check the Frobenius and characteristic
/// hypotheses, recognize the type, and in the extended A case decide by
/// the outer order of the Nakayama automorphism.
pub fn decide_fg(a: &Algebra, opts: FgOptions) -> Result<FgVerdict> {
    let mut verdict = FgVerdict::new();
    // (0) basify when needed
    let algebra = match verify_basic_split(a) {
        Ok(()) => a.clone(),
        Err(Error::NotBasic(_)) => {
            let bi = basic_idempotent(a, opts.seed)?;
            let basic = truncate_by_orthogonal_idempotents(a, &bi.parts)?;
            verdict.push(
                "basic version",
                "the property is invariant under Morita equivalence",
                format!("replaced dimension {} by {}", a.dim(), basic.dim()),
            );
            basic
        }
        Err(e) => return Err(e),
    };
    let components = radical::connected_components(&algebra);
    if components.len() > 1 {
        verdict.push(
            "connectedness",
            "disconnected algebras are products; the property holds exactly when it holds for every block",
            format!("{} blocks", components.len()),
        );
        let mut answer = FgAnswer::Yes;
        for comp in components {
            let parts: Vec<_> = comp
                .iter()
                .map(|&s| algebra.basis_element(algebra.unit_idempotents()[s]))
                .collect();
            let block = truncate_by_orthogonal_idempotents(&algebra, &parts)?;
            let sub = decide_fg(&block, opts)?;
            match sub.answer {
                FgAnswer::No => answer = FgAnswer::No,
                FgAnswer::Unknown => {
                    if answer == FgAnswer::Yes {
                        answer = FgAnswer::Unknown;
                    }
                }
                FgAnswer::Yes => {}
            }
            verdict.blocks.push(sub);
        }
        verdict.answer = answer;
        verdict.push(
            "conjunction",
            "all blocks must satisfy the property",
            answer.to_string(),
        );
        return Ok(verdict);
    }
    decide_fg_connected(&algebra, opts, verdict)
}

fn decide_fg_connected(a: &Algebra, opts: FgOptions, mut verdict: FgVerdict) -> Result<FgVerdict> {
    // (1) self-injectivity through a Frobenius form
    let form = match find_frobenius_form(a, opts.search()) {
        FrobeniusOutcome::Found(f) => {
            verdict.push("frobenius form", "self-injectivity witness", "nondegenerate form found");
            f
        }
        FrobeniusOutcome::NotFrobenius { exhaustive, .. } => {
            return Err(Error::NotSelfInjective(if exhaustive {
                "no nondegenerate associative form exists".into()
            } else {
                "no nondegenerate associative form found".into()
            }));
        }
    };
    // (2) radical square zero: representation-finite Nakayama algebra
    let layers = radical::radical_layers(a)?;
    if layers.len() <= 2 {
        verdict.push(
            "radical length",
            "self-injective with radical square zero: a Nakayama algebra of finite representation type",
            "radical square is zero",
        );
        verdict.answer = FgAnswer::Yes;
        return Ok(verdict);
    }
    // (3) scope: radical cube zero
    if layers.len() > 3 {
        return Err(Error::OutOfScope(
            "radical cube is nonzero; the classification covers cube-zero algebras".into(),
        ));
    }
    verdict.push("radical length", "cube zero, square nonzero", "within scope");
    // (4) characteristic hypotheses
    let nu = nakayama_from_form(a, &form)?;
    let p = a.field().characteristic();
    if p == 2 {
        verdict
            .hypothesis_failures
            .push("2 is not invertible in the field".into());
        verdict.push(
            "characteristic hypothesis",
            "2 must be invertible",
            "failed: characteristic 2",
        );
        verdict.answer = FgAnswer::Unknown;
        return Ok(verdict);
    }
    let nu_order = nu.order(a, opts.bound as usize);
    match (p, nu_order) {
        (0, Some(n)) => {
            verdict.push(
                "characteristic hypothesis",
                "the order of the Nakayama automorphism must be invertible",
                format!("characteristic zero, order {n}"),
            );
        }
        (0, None) => {
            verdict.push(
                "characteristic hypothesis",
                "the order of the Nakayama automorphism must be invertible",
                "characteristic zero: holds vacuously",
            );
        }
        (p, Some(n)) if n as u64 % p != 0 => {
            verdict.push(
                "characteristic hypothesis",
                "the order of the Nakayama automorphism must be invertible",
                format!("order {n} is prime to {p}"),
            );
        }
        (p, Some(n)) => {
            verdict
                .hypothesis_failures
                .push(format!("characteristic {p} divides the Nakayama order {n}"));
            verdict.push(
                "characteristic hypothesis",
                "the order of the Nakayama automorphism must be invertible",
                "failed",
            );
            verdict.answer = FgAnswer::Unknown;
            return Ok(verdict);
        }
        (p, None) => {
            verdict.hypothesis_failures.push(format!(
                "Nakayama order exceeds the bound {} in characteristic {p}",
                opts.bound
            ));
            verdict.push(
                "characteristic hypothesis",
                "the order of the Nakayama automorphism must be invertible",
                "undetermined: order exceeds the bound",
            );
            verdict.answer = FgAnswer::Unknown;
            return Ok(verdict);
        }
    }
    // (5) type recognition
    let type_report = algebra_type(a, opts)?;
    let label = type_report.label;
    verdict.push("type recognition", "underlying graph of the separated quiver", label.to_string());
    if label.is_dynkin() {
        verdict.push(
            "classification",
            "Dynkin type: finite representation type",
            "yes",
        );
        verdict.answer = FgAnswer::Yes;
        return Ok(verdict);
    }
    if label == GraphType::Other {
        verdict.push(
            "classification",
            "type beyond extended Dynkin: the complexity is infinite",
            "no",
        );
        verdict.answer = FgAnswer::No;
        return Ok(verdict);
    }
    if label.is_extended() && !label.is_extended_a() {
        verdict.push(
            "classification",
            "extended Dynkin type other than the extended A family",
            "yes",
        );
        verdict.answer = FgAnswer::Yes;
        return Ok(verdict);
    }
    // (6) extended A: outer order of the Nakayama automorphism
    let outer = outer_order(a, &nu, opts.bound, opts.search())?;
    // consistency guard: symmetric algebras must have outer order one
    let symmetric = is_inner(a, &nu, opts.search())?.is_witness();
    let outer_is_one = outer == OuterOrder::Finite(1);
    if symmetric != outer_is_one {
        return Err(Error::InternalInconsistency(
            "symmetry and outer order disagree on an extended A type algebra".into(),
        ));
    }
    match outer {
        OuterOrder::Finite(n) => {
            verdict.push(
                "outer order",
                "extended A type: the Nakayama automorphism must have finite order as an outer automorphism",
                format!("finite outer order {n}"),
            );
            verdict.answer = FgAnswer::Yes;
        }
        OuterOrder::Infinite => {
            let detail = match cycle_invariants(a, &nu) {
                Ok(report) => {
                    let bad: Vec<String> = report
                        .cycles
                        .iter()
                        .filter(|c| c.order.is_none())
                        .map(|c| c.product.to_string())
                        .collect();
                    format!("cycle product {} is not a root of unity", bad.join(", "))
                }
                Err(_) => "a cycle product is not a root of unity".into(),
            };
            verdict.push(
                "outer order",
                "extended A type: the Nakayama automorphism must have finite order as an outer automorphism",
                detail,
            );
            verdict.answer = FgAnswer::No;
        }
        OuterOrder::ExceedsBound | OuterOrder::Undecided => {
            verdict
                .hypothesis_failures
                .push("outer order search exhausted".into());
            verdict.push(
                "outer order",
                "extended A type: the Nakayama automorphism must have finite order as an outer automorphism",
                "undetermined",
            );
            verdict.answer = FgAnswer::Unknown;
        }
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_algebra, Presentation, Relation};
    use crate::quiver::{Arrow, Quiver};
    use crate::scalar::{FieldDescriptor, Scalar};

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn lambda_q(field: FieldDescriptor, qval: i64) -> Algebra {
        build_algebra(&Presentation {
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
                Relation {
                    terms: vec![(Scalar::one(field), vec!["x".into(), "x".into()])],
                },
                Relation {
                    terms: vec![(Scalar::one(field), vec!["y".into(), "y".into()])],
                },
                Relation {
                    terms: vec![
                        (Scalar::one(field), vec!["x".into(), "y".into()]),
                        (Scalar::from_integer(qval, field), vec!["y".into(), "x".into()]),
                    ],
                },
            ],
            truncate_radical: 3,
        })
        .unwrap()
    }

    fn kx3() -> Algebra {
        build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["v".into()],
                vec![Arrow { name: "x".into(), source: "v".into(), target: "v".into() }],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: 3,
        })
        .unwrap()
    }

    #[test]
    fn types_of_reference_algebras() {
        let opts = FgOptions::default();
        let t = algebra_type(&kx3(), opts).unwrap();
        assert_eq!(t.label, GraphType::DynkinA(2));
        let t2 = algebra_type(&lambda_q(q(), 2), opts).unwrap();
        assert_eq!(t2.label, GraphType::ExtendedA(1));
    }

    #[test]
    fn trivial_extension_of_kronecker_has_uniform_type() {
        let kron = build_algebra(&Presentation {
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
        })
        .unwrap();
        let ext = crate::constructions::trivial_extension(&kron).unwrap();
        let t = algebra_type(&ext.algebra, FgOptions::default()).unwrap();
        // two double-edge components
        assert_eq!(t.label, GraphType::ExtendedA(1));
        assert_eq!(t.recognition.components.len(), 2);
    }

    #[test]
    fn verdicts_for_quantum_planes() {
        let opts = FgOptions::default();
        let no = decide_fg(&lambda_q(q(), 2), opts).unwrap();
        assert_eq!(no.answer, FgAnswer::No);
        assert!(no
            .reasons
            .last()
            .unwrap()
            .outcome
            .contains("not a root of unity"));

        let yes1 = decide_fg(&lambda_q(q(), 1), opts).unwrap();
        assert_eq!(yes1.answer, FgAnswer::Yes);

        let yesm1 = decide_fg(&lambda_q(q(), -1), opts).unwrap();
        assert_eq!(yesm1.answer, FgAnswer::Yes);

        let f5 = FieldDescriptor::prime(5).unwrap();
        let yes5 = decide_fg(&lambda_q(f5, 2), opts).unwrap();
        assert_eq!(yes5.answer, FgAnswer::Yes);
        assert!(yes5
            .reasons
            .iter()
            .any(|r| r.outcome.contains("finite outer order 4")));
    }

    #[test]
    fn dynkin_case() {
        let v = decide_fg(&kx3(), FgOptions::default()).unwrap();
        assert_eq!(v.answer, FgAnswer::Yes);
        assert!(v.reasons.iter().any(|r| r.outcome == "A2"));
    }

    #[test]
    fn radical_square_zero_case() {
        let kx2 = build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["v".into()],
                vec![Arrow { name: "x".into(), source: "v".into(), target: "v".into() }],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: 2,
        })
        .unwrap();
        let v = decide_fg(&kx2, FgOptions::default()).unwrap();
        assert_eq!(v.answer, FgAnswer::Yes);
        assert!(v.reasons.iter().any(|r| r.outcome == "radical square is zero"));
    }

    #[test]
    fn non_self_injective_rejected() {
        let ka2 = build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["1".into(), "2".into()],
                vec![Arrow { name: "a".into(), source: "1".into(), target: "2".into() }],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: 2,
        })
        .unwrap();
        assert!(matches!(
            decide_fg(&ka2, FgOptions::default()),
            Err(Error::NotSelfInjective(_))
        ));
    }

    #[test]
    fn disconnected_verdicts_are_conjunctions() {
        // k[x]/(x^3) x k[y]/(y^3): two Dynkin blocks
        let a = build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(
                vec!["1".into(), "2".into()],
                vec![
                    Arrow { name: "x".into(), source: "1".into(), target: "1".into() },
                    Arrow { name: "y".into(), source: "2".into(), target: "2".into() },
                ],
            )
            .unwrap(),
            relations: vec![],
            truncate_radical: 3,
        })
        .unwrap();
        let v = decide_fg(&a, FgOptions::default()).unwrap();
        assert_eq!(v.answer, FgAnswer::Yes);
        assert_eq!(v.blocks.len(), 2);
    }
}
