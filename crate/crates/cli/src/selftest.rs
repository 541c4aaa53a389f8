//! The invariant corpus behind `qalg selftest`: one named check per
//! structural property the toolkit relies on, each exact.

use serde_json::json;

use qalg_core::algebra::SparseVec;
use qalg_core::constructions::{
    beilinson, double_construction_checked, quasi_veronese2, restrict_morphism,
    skew_group_algebra, skew_group_form, skew_group_symmetric_check, smash_z2,
    trivial_extension, twisted_trivial_extension, veronese_smash_iso,
};
use qalg_core::cycles::{outer_order, OuterOrder};
use qalg_core::frobenius::{
    find_frobenius_form, is_inner, nakayama_from_form, trace_form, FrobeniusOutcome, InnerResult,
    SearchOptions,
};
use qalg_core::graphs::{
    complete_graph, cycle_graph, d_graph, d_tilde_graph, e_graph, e_tilde_graph, path_graph,
    recognize_graph, GraphType, UndirectedGraph,
};
use qalg_core::group::GroupAction;
use qalg_core::idempotents::quiver_of;
use qalg_core::radical;
use qalg_core::scalar::RootOfUnity;
use qalg_core::{
    build_algebra, decide_fg, Algebra, AlgebraMorphism, Arrow, BasisLabel, FgAnswer, FgOptions,
    FieldDescriptor, Presentation, Quiver, Relation, Scalar,
};

use crate::report::Report;
use crate::RunOptions;

// ---------------------------------------------------------------------------
// corpus
// ---------------------------------------------------------------------------

fn q() -> FieldDescriptor {
    FieldDescriptor::Rationals
}

fn f5() -> FieldDescriptor {
    FieldDescriptor::prime(5).unwrap()
}

fn loop_quiver(names: &[&str]) -> Quiver {
    Quiver::new(
        vec!["v".into()],
        names
            .iter()
            .map(|n| Arrow { name: (*n).into(), source: "v".into(), target: "v".into() })
            .collect(),
    )
    .unwrap()
}

pub fn point(field: FieldDescriptor) -> Algebra {
    build_algebra(&Presentation {
        field,
        quiver: Quiver::new(vec!["v".into()], vec![]).unwrap(),
        relations: vec![],
        truncate_radical: 2,
    })
    .unwrap()
}

pub fn two_points() -> Algebra {
    build_algebra(&Presentation {
        field: q(),
        quiver: Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap(),
        relations: vec![],
        truncate_radical: 2,
    })
    .unwrap()
}

pub fn truncated_polynomials(truncate: usize) -> Algebra {
    build_algebra(&Presentation {
        field: q(),
        quiver: loop_quiver(&["x"]),
        relations: vec![],
        truncate_radical: truncate,
    })
    .unwrap()
}

pub fn quantum_plane(field: FieldDescriptor, qval: i64) -> Algebra {
    build_algebra(&quantum_plane_presentation(field, qval)).unwrap()
}

pub fn quantum_plane_presentation(field: FieldDescriptor, qval: i64) -> Presentation {
    Presentation {
        field,
        quiver: loop_quiver(&["x", "y"]),
        relations: vec![
            Relation { terms: vec![(Scalar::one(field), vec!["x".into(), "x".into()])] },
            Relation { terms: vec![(Scalar::one(field), vec!["y".into(), "y".into()])] },
            Relation {
                terms: vec![
                    (Scalar::one(field), vec!["x".into(), "y".into()]),
                    (Scalar::from_integer(qval, field), vec!["y".into(), "x".into()]),
                ],
            },
        ],
        truncate_radical: 3,
    }
}

pub fn kronecker() -> Algebra {
    build_algebra(&kronecker_presentation()).unwrap()
}

pub fn kronecker_presentation() -> Presentation {
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

pub fn path_a2() -> Algebra {
    build_algebra(&Presentation {
        field: q(),
        quiver: Quiver::new(
            vec!["1".into(), "2".into()],
            vec![Arrow { name: "a".into(), source: "1".into(), target: "2".into() }],
        )
        .unwrap(),
        relations: vec![],
        truncate_radical: 2,
    })
    .unwrap()
}

type Check = (&'static str, fn() -> Result<(), String>);

fn ok(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

fn check_inverse_law() -> Result<(), String> {
    for field in [q(), f5(), FieldDescriptor::cyclotomic(3).unwrap()] {
        for k in -10i64..10 {
            let s = Scalar::from_integer(k, field);
            if s.is_zero() {
                continue;
            }
            let inv = s.inverse().map_err(|e| e.to_string())?;
            ok(s.mul(&inv).is_one(), "s * s^-1 != 1")?;
        }
    }
    Ok(())
}

fn check_root_of_unity_minimality() -> Result<(), String> {
    let z = Scalar::zeta(FieldDescriptor::cyclotomic(3).unwrap()).unwrap();
    let candidates = vec![
        Scalar::one(q()),
        Scalar::one(q()).neg(),
        z.clone(),
        z.neg(),
        Scalar::from_integer(3, FieldDescriptor::prime(7).unwrap()),
    ];
    for s in candidates {
        if let RootOfUnity::Finite(n) = s.root_of_unity_order().map_err(|e| e.to_string())? {
            ok(s.pow(n).is_one(), "order does not annihilate")?;
            for m in 1..n {
                ok(!s.pow(m).is_one(), "order is not minimal")?;
            }
        }
    }
    // over F_p the answer is never `No`
    for a in 1..5 {
        let s = Scalar::from_integer(a, f5());
        ok(
            matches!(s.root_of_unity_order().map_err(|e| e.to_string())?, RootOfUnity::Finite(_)),
            "prime field scalar reported as non-torsion",
        )?;
    }
    Ok(())
}

fn corpus() -> Vec<(String, Algebra)> {
    vec![
        ("k".into(), point(q())),
        ("k x k".into(), two_points()),
        ("k[x]/(x^2)".into(), truncated_polynomials(2)),
        ("k[x]/(x^3)".into(), truncated_polynomials(3)),
        ("kA2".into(), path_a2()),
        ("kronecker".into(), kronecker()),
        ("quantum q=1".into(), quantum_plane(q(), 1)),
        ("quantum q=2".into(), quantum_plane(q(), 2)),
        ("quantum q=-1".into(), quantum_plane(q(), -1)),
        ("quantum q=2 over F5".into(), quantum_plane(f5(), 2)),
    ]
}

fn check_corpus_axioms() -> Result<(), String> {
    for (name, a) in corpus() {
        let v = a.check();
        ok(v.is_empty(), &format!("{name}: {:?}", v.first()))?;
    }
    Ok(())
}

fn check_corrupted_table_detected() -> Result<(), String> {
    // k[x]/(x^3) with x * x wrongly set to e
    let field = q();
    let labels = vec![
        BasisLabel::Vertex("v".into()),
        BasisLabel::Path(vec!["x".into()]),
        BasisLabel::Path(vec!["x".into(), "x".into()]),
    ];
    let mut table = vec![vec![SparseVec::new(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 3 {
                table[i][j] = vec![(i + j, Scalar::one(field))];
            }
        }
    }
    table[1][1] = vec![(0, Scalar::one(field))];
    let corrupted = Algebra::new(field, labels, table, vec![0], None);
    ok(!corrupted.check().is_empty(), "corrupted table not flagged")
}

fn check_radical_layers() -> Result<(), String> {
    for (name, a) in corpus() {
        let layers = radical::radical_layers(&a).map_err(|e| format!("{name}: {e}"))?;
        ok(layers[0].dim() == a.dim(), &format!("{name}: top layer is not the algebra"))?;
        for w in layers.windows(2) {
            ok(w[0].dim() > w[1].dim(), &format!("{name}: layers do not strictly descend"))?;
        }
    }
    Ok(())
}

fn check_quiver_round_trip() -> Result<(), String> {
    for p in [quantum_plane_presentation(q(), 2), kronecker_presentation()] {
        let a = build_algebra(&p).map_err(|e| e.to_string())?;
        let g = quiver_of(&a).map_err(|e| e.to_string())?;
        ok(g.quiver.is_isomorphic_to(&p.quiver), "gabriel quiver differs from the presentation")?;
    }
    Ok(())
}

fn check_socle_quotient_square_zero() -> Result<(), String> {
    for (name, a) in [
        ("k[x]/(x^3)".to_string(), truncated_polynomials(3)),
        ("quantum q=2".to_string(), quantum_plane(q(), 2)),
    ] {
        match radical::quotient_by_socle(&a).map_err(|e| format!("{name}: {e}"))? {
            radical::SocleQuotient::Proper(quotient) => {
                let layers =
                    radical::radical_layers(&quotient).map_err(|e| format!("{name}: {e}"))?;
                ok(layers.len() <= 2, &format!("{name}: quotient radical square is nonzero"))?;
            }
            radical::SocleQuotient::Zero => return Err(format!("{name}: zero quotient")),
        }
    }
    Ok(())
}

fn check_gram_relation() -> Result<(), String> {
    for (name, a) in corpus() {
        let form = match find_frobenius_form(&a, opts()) {
            FrobeniusOutcome::Found(f) => f,
            FrobeniusOutcome::NotFrobenius { .. } => continue,
        };
        let nu = nakayama_from_form(&a, &form).map_err(|e| format!("{name}: {e}"))?;
        for i in 0..a.dim() {
            let nui = nu.apply(&a.basis_element(i));
            for j in 0..a.dim() {
                let lhs = form.evaluate(&a.basis_element(i), &a.basis_element(j));
                let rhs = form.evaluate(&a.basis_element(j), &nui);
                ok(lhs == rhs, &format!("{name}: gram relation fails at ({i},{j})"))?;
            }
        }
    }
    Ok(())
}

fn check_nakayama_preserves_grading() -> Result<(), String> {
    for (name, a) in corpus() {
        let Some(grading) = a.grading().map(|g| g.to_vec()) else { continue };
        let form = match find_frobenius_form(&a, opts()) {
            FrobeniusOutcome::Found(f) => f,
            FrobeniusOutcome::NotFrobenius { .. } => continue,
        };
        if form.functional.is_none() {
            continue;
        }
        let nu = nakayama_from_form(&a, &form).map_err(|e| format!("{name}: {e}"))?;
        for i in 0..a.dim() {
            let img = nu.apply(&a.basis_element(i));
            for (k, c) in img.coeffs.iter().enumerate() {
                ok(
                    c.is_zero() || grading[k] == grading[i],
                    &format!("{name}: nakayama moves degree at basis {i}"),
                )?;
            }
        }
    }
    Ok(())
}

fn sign_action(a: &Algebra) -> Option<GroupAction> {
    // negate every degree-1 basis vector; valid for quadratic monomial-ish
    // relations and an exact order-2 action
    let g = a.grading()?;
    let field = a.field();
    let mut columns = vec![];
    for i in 0..a.dim() {
        let mut col = vec![Scalar::zero(field); a.dim()];
        col[i] = if g[i] % 2 == 1 {
            Scalar::one(field).neg()
        } else {
            Scalar::one(field)
        };
        columns.push(col);
    }
    let sigma = AlgebraMorphism { columns };
    sigma.verify_automorphism(a).ok()?;
    GroupAction::cyclic(a, &sigma, 2).ok()
}

fn check_construction_dimensions() -> Result<(), String> {
    let graded: Vec<(String, Algebra)> = vec![
        ("k".into(), point(q())),
        ("k[x]/(x^3)".into(), truncated_polynomials(3)),
        ("quantum q=1".into(), quantum_plane(q(), 1)),
        ("quantum q=2".into(), quantum_plane(q(), 2)),
        (
            "trivext(kronecker)".into(),
            trivial_extension(&kronecker()).map_err(|e| e.to_string())?.algebra,
        ),
        (
            "trivext(kA2)".into(),
            trivial_extension(&path_a2()).map_err(|e| e.to_string())?.algebra,
        ),
    ];
    for (name, a) in &graded {
        let (smash, _) = smash_z2(a).map_err(|e| format!("{name}: {e}"))?;
        ok(smash.dim() == 2 * a.dim(), &format!("{name}: smash dimension"))?;
        let v = quasi_veronese2(a).map_err(|e| format!("{name}: {e}"))?;
        ok(v.dim() == 2 * a.dim(), &format!("{name}: veronese dimension"))?;
        let ext = trivial_extension(a).map_err(|e| format!("{name}: {e}"))?;
        ok(ext.algebra.dim() == 2 * a.dim(), &format!("{name}: trivext dimension"))?;
        if let Some(action) = sign_action(a) {
            let skew = skew_group_algebra(a, &action).map_err(|e| format!("{name}: {e}"))?;
            ok(
                skew.dim() == action.order() * a.dim(),
                &format!("{name}: skew dimension"),
            )?;
        }
    }
    Ok(())
}

fn check_veronese_smash_iso() -> Result<(), String> {
    let graded: Vec<(String, Algebra)> = vec![
        ("k".into(), point(q())),
        ("k[x]/(x^3)".into(), truncated_polynomials(3)),
        ("quantum q=1".into(), quantum_plane(q(), 1)),
        ("quantum q=2".into(), quantum_plane(q(), 2)),
        (
            "trivext(kronecker)".into(),
            trivial_extension(&kronecker()).map_err(|e| e.to_string())?.algebra,
        ),
        (
            "trivext(kA2)".into(),
            trivial_extension(&path_a2()).map_err(|e| e.to_string())?.algebra,
        ),
    ];
    for (name, a) in &graded {
        veronese_smash_iso(a).map_err(|e| format!("{name}: {e}"))?;
    }
    Ok(())
}

fn check_skew_form() -> Result<(), String> {
    let a = quantum_plane(q(), 1);
    let form = trace_form(&a).map_err(|e| e.to_string())?;
    let nu = nakayama_from_form(&a, &form).map_err(|e| e.to_string())?;
    let action = GroupAction::cyclic(&a, &nu, 2).map_err(|e| e.to_string())?;
    let skew = skew_group_algebra(&a, &action).map_err(|e| e.to_string())?;
    // construction verifies associativity and nondegeneracy
    skew_group_form(&a, &form, &action, &skew).map_err(|e| e.to_string())?;
    Ok(())
}

fn check_skew_symmetry_certificate() -> Result<(), String> {
    let a = quantum_plane(q(), 1);
    let form = trace_form(&a).map_err(|e| e.to_string())?;
    let nu = nakayama_from_form(&a, &form).map_err(|e| e.to_string())?;
    let report = skew_group_symmetric_check(&a, &form, &nu, 64).map_err(|e| e.to_string())?;
    ok(report.group_order == 2, "group order should be 2")?;
    ok(report.skew.dim() == 8, "skew dimension should be 8")
}

fn check_twisted_extension_nakayama() -> Result<(), String> {
    let a = kronecker();
    // arrow swap
    let mut cols = AlgebraMorphism::identity(&a).columns;
    let ai = a.label_index(&BasisLabel::Path(vec!["a".into()])).unwrap();
    let bi = a.label_index(&BasisLabel::Path(vec!["b".into()])).unwrap();
    cols.swap(ai, bi);
    let swap = AlgebraMorphism { columns: cols };
    let ext = twisted_trivial_extension(&a, &swap).map_err(|e| e.to_string())?;
    let nu = nakayama_from_form(&ext.algebra, &ext.form).map_err(|e| e.to_string())?;
    ok(nu == ext.nakayama, "form Nakayama differs from the twisted representative")?;
    // composing with the extension of sigma gives an inner automorphism
    let sigma_hat = ext.nakayama.inverse(q()).map_err(|e| e.to_string())?;
    let composite = nu.compose(&sigma_hat);
    ok(
        is_inner(&ext.algebra, &composite, opts()).map_err(|e| e.to_string())?.is_witness(),
        "nu composed with the sigma extension is not inner",
    )
}

fn check_trivial_extensions_symmetric() -> Result<(), String> {
    for (name, a) in [
        ("k".to_string(), point(q())),
        ("kA2".to_string(), path_a2()),
        ("kronecker".to_string(), kronecker()),
        ("k[x]/(x^3)".to_string(), truncated_polynomials(3)),
    ] {
        let ext = trivial_extension(&a).map_err(|e| format!("{name}: {e}"))?;
        let rep = qalg_core::frobenius::is_symmetric(&ext.algebra, opts())
            .map_err(|e| format!("{name}: {e}"))?;
        ok(rep.symmetric, &format!("{name}: trivial extension not symmetric"))?;
    }
    Ok(())
}

fn check_quantum_family_innerness() -> Result<(), String> {
    // nu is inner exactly when both arrow scalars -q and -q^-1 are 1
    for (qval, expect_inner) in [(1i64, false), (2, false), (-1, true)] {
        let a = quantum_plane(q(), qval);
        let form = trace_form(&a).map_err(|e| e.to_string())?;
        let nu = nakayama_from_form(&a, &form).map_err(|e| e.to_string())?;
        let inner = is_inner(&a, &nu, opts()).map_err(|e| e.to_string())?;
        ok(
            inner.is_witness() == expect_inner,
            &format!("q={qval}: innerness should be {expect_inner}"),
        )?;
    }
    Ok(())
}

fn check_quantum_family_verdicts() -> Result<(), String> {
    let fgo = FgOptions::default();
    let cases = [
        (quantum_plane(q(), 2), FgAnswer::No),
        (quantum_plane(q(), 1), FgAnswer::Yes),
        (quantum_plane(q(), -1), FgAnswer::Yes),
        (quantum_plane(f5(), 2), FgAnswer::Yes),
    ];
    for (a, expected) in cases {
        let v = decide_fg(&a, fgo).map_err(|e| e.to_string())?;
        ok(v.answer == expected, &format!("expected {expected}, got {}", v.answer))?;
    }
    Ok(())
}

fn check_prime_field_never_no() -> Result<(), String> {
    for qval in [1i64, 2, 3, 4] {
        let a = quantum_plane(f5(), qval);
        let v = decide_fg(&a, FgOptions::default()).map_err(|e| e.to_string())?;
        ok(
            v.answer != FgAnswer::No,
            &format!("q={qval} over F5 answered no"),
        )?;
    }
    Ok(())
}

fn check_trivext_verdicts() -> Result<(), String> {
    let fgo = FgOptions::default();
    // extended Dynkin territory: symmetric, answer yes
    let dk = trivial_extension(&kronecker()).map_err(|e| e.to_string())?.algebra;
    let v = decide_fg(&dk, fgo).map_err(|e| e.to_string())?;
    ok(v.answer == FgAnswer::Yes, "trivext(kronecker) should satisfy the property")?;
    // Dynkin territory: the outer-order step must not be reached
    let da2 = trivial_extension(&path_a2()).map_err(|e| e.to_string())?.algebra;
    let v2 = decide_fg(&da2, fgo).map_err(|e| e.to_string())?;
    ok(v2.answer == FgAnswer::Yes, "trivext(kA2) should satisfy the property")?;
    ok(
        !v2.reasons.iter().any(|r| r.check == "outer order"),
        "trivext(kA2) reached the outer-order step",
    )
}

fn check_double_morita() -> Result<(), String> {
    for (name, a) in [
        ("k[x]/(x^3)".to_string(), truncated_polynomials(3)),
        ("quantum q=1".to_string(), quantum_plane(q(), 1)),
    ] {
        let checked = double_construction_checked(&a, 0).map_err(|e| format!("{name}: {e}"))?;
        ok(
            checked.double.dim() == 4 * a.dim(),
            &format!("{name}: double dimension"),
        )?;
        ok(
            checked.basic.dim() == a.dim(),
            &format!("{name}: basic double dimension"),
        )?;
    }
    Ok(())
}

fn check_outer_order_divisors() -> Result<(), String> {
    let a = quantum_plane(f5(), 2);
    let form = trace_form(&a).map_err(|e| e.to_string())?;
    let nu = nakayama_from_form(&a, &form).map_err(|e| e.to_string())?;
    let outer = outer_order(&a, &nu, 64, opts()).map_err(|e| e.to_string())?;
    ok(outer == OuterOrder::Finite(4), "outer order over F5 should be 4")?;
    for d in [1usize, 2] {
        let inner = is_inner(&a, &nu.pow(d, &a), opts()).map_err(|e| e.to_string())?;
        ok(
            matches!(inner, InnerResult::NotInner),
            &format!("proper divisor {d} should not be inner"),
        )?;
    }
    Ok(())
}

fn dynkin_family() -> Vec<(UndirectedGraph, GraphType)> {
    let mut out = vec![];
    for n in 1..=9 {
        out.push((path_graph(n), GraphType::DynkinA(n)));
    }
    for n in 4..=9 {
        out.push((d_graph(n), GraphType::DynkinD(n)));
    }
    for n in 6..=8 {
        out.push((e_graph(n), GraphType::DynkinE(n)));
    }
    out
}

fn extended_family() -> Vec<(UndirectedGraph, GraphType)> {
    let mut out = vec![];
    for n in 1..=8usize {
        // n + 1 vertices
        out.push((cycle_graph(n + 1), GraphType::ExtendedA(n)));
    }
    for n in 4..=8usize {
        out.push((d_tilde_graph(n), GraphType::ExtendedD(n)));
    }
    for n in 6..=8 {
        out.push((e_tilde_graph(n), GraphType::ExtendedE(n)));
    }
    out
}

fn check_graph_sweep() -> Result<(), String> {
    for (g, expected) in dynkin_family().into_iter().chain(extended_family()) {
        let rec = recognize_graph(&g).map_err(|e| e.to_string())?;
        let label = rec.single().map_err(|e| e.to_string())?.label;
        ok(label == expected, &format!("expected {expected}, got {label}"))?;
    }
    // every single-edge augmentation of an extended Dynkin graph is Other
    for (g, _) in extended_family() {
        let n = g.vertices.len();
        for i in 0..n {
            for j in i + 1..n {
                let mut aug = g.clone();
                aug.mult[i][j] += 1;
                aug.mult[j][i] += 1;
                let rec = recognize_graph(&aug).map_err(|e| e.to_string())?;
                let label = rec.single().map_err(|e| e.to_string())?.label;
                ok(
                    label == GraphType::Other,
                    &format!("augmented graph classified {label}"),
                )?;
            }
        }
    }
    ok(
        recognize_graph(&complete_graph(4))
            .map_err(|e| e.to_string())?
            .single()
            .map_err(|e| e.to_string())?
            .label
            == GraphType::Other,
        "complete graph must be Other",
    )
}

fn check_relabel_invariance() -> Result<(), String> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12345);
    for (g, expected) in dynkin_family().into_iter().chain(extended_family()) {
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..g.vertices.len()).collect();
            perm.shuffle(&mut rng);
            let rec = recognize_graph(&g.relabeled(&perm)).map_err(|e| e.to_string())?;
            let label = rec.single().map_err(|e| e.to_string())?.label;
            ok(label == expected, &format!("relabeled {expected} became {label}"))?;
        }
    }
    Ok(())
}

fn check_seed_independence() -> Result<(), String> {
    for (name, a) in [
        ("quantum q=2".to_string(), quantum_plane(q(), 2)),
        ("quantum q=1".to_string(), quantum_plane(q(), 1)),
    ] {
        let v0 = decide_fg(&a, FgOptions { seed: 0, ..Default::default() })
            .map_err(|e| format!("{name}: {e}"))?;
        let v1 = decide_fg(&a, FgOptions { seed: 1, ..Default::default() })
            .map_err(|e| format!("{name}: {e}"))?;
        ok(v0.answer == v1.answer, &format!("{name}: verdicts differ across seeds"))?;
    }
    Ok(())
}

fn check_inner_twist_isomorphism() -> Result<(), String> {
    // D(A)_{sigma . pi} and D(A)_pi are isomorphic when sigma is inner:
    // the map (a, f) -> (a, f . L_u) is an algebra isomorphism
    let a = kronecker();
    let field = a.field();
    // pi = arrow swap
    let mut cols = AlgebraMorphism::identity(&a).columns;
    let ai = a.label_index(&BasisLabel::Path(vec!["a".into()])).unwrap();
    let bi = a.label_index(&BasisLabel::Path(vec!["b".into()])).unwrap();
    cols.swap(ai, bi);
    let pi = AlgebraMorphism { columns: cols };
    // sigma = conjugation by u = e1 + 2 e2
    let mut u = a.zero_element();
    u.coeffs[0] = Scalar::one(field);
    u.coeffs[1] = Scalar::from_integer(2, field);
    let uinv = a.invert_element(&u).map_err(|e| e.to_string())?;
    let sigma = AlgebraMorphism {
        columns: (0..a.dim())
            .map(|i| a.mul_unchecked(&a.mul_unchecked(&u, &a.basis_element(i)), &uinv).coeffs)
            .collect(),
    };
    let sigma_pi = sigma.compose(&pi);
    let left = twisted_trivial_extension(&a, &sigma_pi).map_err(|e| e.to_string())?;
    let right = twisted_trivial_extension(&a, &pi).map_err(|e| e.to_string())?;
    let n = a.dim();
    let lu = a.left_mult_matrix(&u);
    let mut columns = vec![];
    for i in 0..n {
        let mut col = vec![Scalar::zero(field); 2 * n];
        col[i] = Scalar::one(field);
        columns.push(col);
    }
    for j in 0..n {
        let mut col = vec![Scalar::zero(field); 2 * n];
        for k in 0..n {
            col[n + k] = lu.get(j, k).clone();
        }
        columns.push(col);
    }
    let phi = AlgebraMorphism { columns };
    phi.verify_morphism(&left.algebra, &right.algebra)
        .map_err(|e| format!("twist comparison map is not multiplicative: {e}"))?;
    ok(
        !phi.matrix(field).determinant().is_zero(),
        "twist comparison map is not bijective",
    )
}

fn check_veronese_is_twisted_extension() -> Result<(), String> {
    // For graded Frobenius algebras with socle in degree 2 the
    // quasi-Veronese is the twisted trivial extension of the Beilinson
    // algebra by the degree-zero part of the inverse Nakayama automorphism.
    for (name, a) in [
        ("k[x]/(x^3)".to_string(), truncated_polynomials(3)),
        ("quantum q=1".to_string(), quantum_plane(q(), 1)),
        ("quantum q=2".to_string(), quantum_plane(q(), 2)),
    ] {
        let v = quasi_veronese2(&a).map_err(|e| format!("{name}: {e}"))?;
        let bei = beilinson(&a).map_err(|e| format!("{name}: {e}"))?;
        let vform = trace_form(&v).map_err(|e| format!("{name}: {e}"))?;
        let nu_v = nakayama_from_form(&v, &vform).map_err(|e| format!("{name}: {e}"))?;
        let nu_v_inv = nu_v.inverse(a.field()).map_err(|e| format!("{name}: {e}"))?;
        let grading = v.grading().unwrap().to_vec();
        let block_a: Vec<usize> = (0..v.dim()).filter(|&i| grading[i] == 0).collect();
        let block_b: Vec<usize> = (0..v.dim()).filter(|&i| grading[i] == 1).collect();
        // the degree-zero part carries the labels of the Beilinson algebra
        for (pos, &i) in block_a.iter().enumerate() {
            ok(
                v.label(i) == bei.label(pos),
                &format!("{name}: block labels diverge"),
            )?;
        }
        let sigma = restrict_morphism(&v, &block_a, &nu_v_inv)
            .map_err(|e| format!("{name}: {e}"))?;
        sigma
            .verify_automorphism(&bei)
            .map_err(|e| format!("{name}: restricted map: {e}"))?;
        let ext = twisted_trivial_extension(&bei, &sigma).map_err(|e| format!("{name}: {e}"))?;
        // psi: identity on the degree-zero block, pairing against the
        // socle functional on the degree-one block
        let nb = bei.dim();
        let functional = vform
            .functional
            .clone()
            .ok_or_else(|| format!("{name}: trace form carries no functional"))?;
        let trace_of = |x: &qalg_core::Element| {
            let mut t = Scalar::zero(a.field());
            for (k, c) in x.coeffs.iter().enumerate() {
                t = t.add(&c.mul(&functional[k]));
            }
            t
        };
        let mut columns = vec![vec![]; v.dim()];
        for (pos, &i) in block_a.iter().enumerate() {
            let mut col = vec![Scalar::zero(a.field()); 2 * nb];
            col[pos] = Scalar::one(a.field());
            columns[i] = col;
        }
        for &m in &block_b {
            let mut col = vec![Scalar::zero(a.field()); 2 * nb];
            for (pos, &j) in block_a.iter().enumerate() {
                let prod = v.mul_unchecked(&v.basis_element(j), &v.basis_element(m));
                col[nb + pos] = trace_of(&prod);
            }
            columns[m] = col;
        }
        let psi = AlgebraMorphism { columns };
        psi.verify_morphism(&v, &ext.algebra)
            .map_err(|e| format!("{name}: identification map: {e}"))?;
        ok(
            !psi.matrix(a.field()).determinant().is_zero(),
            &format!("{name}: identification map is not bijective"),
        )?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// runner
// ---------------------------------------------------------------------------

pub struct SelfTestOutcome {
    pub report: Report,
    pub all_passed: bool,
    pub lines: Vec<String>,
}

pub fn run_selftest(opts: RunOptions) -> SelfTestOutcome {
    let checks: Vec<Check> = vec![
        ("scalar print-parse round trip", check_scalar_round_trip_real),
        ("scalar inverse law", check_inverse_law),
        ("root of unity orders are minimal", check_root_of_unity_minimality),
        ("corpus algebras satisfy the axioms", check_corpus_axioms),
        ("corrupted table is flagged", check_corrupted_table_detected),
        ("radical layers descend strictly", check_radical_layers),
        ("gabriel quiver round trip", check_quiver_round_trip),
        ("socle quotient has square-zero radical", check_socle_quotient_square_zero),
        ("gram relation for computed Nakayama maps", check_gram_relation),
        ("Nakayama maps preserve the grading", check_nakayama_preserves_grading),
        ("construction dimension identities", check_construction_dimensions),
        ("veronese-smash isomorphism", check_veronese_smash_iso),
        ("skew group form is associative and nondegenerate", check_skew_form),
        ("skew double symmetry certificate", check_skew_symmetry_certificate),
        ("twisted extension Nakayama representative", check_twisted_extension_nakayama),
        ("trivial extensions are symmetric", check_trivial_extensions_symmetric),
        ("innerness in the quantum family", check_quantum_family_innerness),
        ("quantum family verdicts", check_quantum_family_verdicts),
        ("prime fields never answer no on the extended A family", check_prime_field_never_no),
        ("trivial extension verdicts", check_trivext_verdicts),
        ("double construction is Morita-trivial at quiver level", check_double_morita),
        ("outer order minimality", check_outer_order_divisors),
        ("graph recognizer sweep", check_graph_sweep),
        ("recognition is relabeling invariant", check_relabel_invariance),
        ("verdicts are seed independent", check_seed_independence),
        ("inner twists give isomorphic twisted extensions", check_inner_twist_isomorphism),
        ("veronese as twisted extension of the Beilinson algebra", check_veronese_is_twisted_extension),
    ];
    let mut lines = vec![];
    let mut results = vec![];
    let mut all_passed = true;
    for (name, check) in checks {
        match check() {
            Ok(()) => {
                lines.push(format!("PASS {name}"));
                results.push(json!({"name": name, "passed": true}));
            }
            Err(msg) => {
                all_passed = false;
                lines.push(format!("FAIL {name}: {msg}"));
                results.push(json!({"name": name, "passed": false, "detail": msg}));
            }
        }
    }
    let mut report = Report::new("selftest", opts.seed);
    report.results = json!({
        "checks": results,
        "all_passed": all_passed,
    });
    SelfTestOutcome { report, all_passed, lines }
}

fn check_scalar_round_trip_real() -> Result<(), String> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(424242);
    let fields = [q(), f5(), FieldDescriptor::cyclotomic(5).unwrap()];
    for field in fields {
        for _ in 0..1000 {
            let s = match field {
                FieldDescriptor::Rationals => Scalar::from_rational(
                    rng.gen_range(-500i64..500).into(),
                    rng.gen_range(1i64..50).into(),
                    field,
                )
                .unwrap(),
                FieldDescriptor::PrimeField(p) => {
                    Scalar::from_integer(rng.gen_range(0..p as i64), field)
                }
                FieldDescriptor::CyclotomicRationals(_) => {
                    let z = Scalar::zeta(field).unwrap();
                    let mut acc = Scalar::zero(field);
                    for e in 0..4u64 {
                        let c = Scalar::from_integer(rng.gen_range(-9i64..9), field);
                        acc = acc.add(&c.mul(&z.pow(e)));
                    }
                    acc
                }
            };
            let printed = s.to_string();
            let back = Scalar::parse(&printed, field)
                .map_err(|e| format!("parse `{printed}`: {e}"))?;
            if back != s {
                return Err(format!("round trip failed for `{printed}`"));
            }
        }
    }
    Ok(())
}
