//! Arrow-level cycle invariants of monomial automorphisms and outer
//! automorphism orders.
//!
//! A graded automorphism that permutes the vertex idempotents and sends
//! each arrow to a scalar multiple of a single arrow acts monomially. Its
//! permutation part has finite order `n0`, and `sigma^{n0}` rescales every
//! arrow by a weight. Conjugation by a vertex-diagonal unit rescales the
//! weight of an arrow `a: i -> j` by `c_i / c_j`, so the products of the
//! weights around the cycles of the underlying graph are invariants of the
//! outer class: the automorphism has finite outer order exactly when every
//! cycle product is a root of unity, and then an explicit diagonal witness
//! conjugates the corresponding power to the identity.

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::frobenius::{is_inner, InnerResult, SearchOptions};
use crate::scalar::{RootOfUnity, Scalar};

#[derive(Debug, Clone)]
pub struct CycleData {
    /// Edges as (arrow position in the arrow list, traversed forward).
    pub edges: Vec<(usize, bool)>,
    pub product: Scalar,
    /// Root-of-unity order of the product, when finite.
    pub order: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct CycleInvariantReport {
    /// Permutation of unit idempotents induced by the automorphism.
    pub vertex_perm: Vec<usize>,
    /// Permutation of the degree-one basis (arrows).
    pub arrow_perm: Vec<usize>,
    /// Scalar carried by each arrow: `sigma(a) = w(a) * perm(a)`.
    pub weights: Vec<Scalar>,
    /// Order of the combined permutation part.
    pub perm_order: usize,
    /// Weights of `sigma^{perm_order}` (a diagonal rescaling).
    pub stable_weights: Vec<Scalar>,
    /// Fundamental cycles of the underlying graph with weight products.
    pub cycles: Vec<CycleData>,
    /// Endpoint data of each arrow: (source vertex slot, target slot).
    pub arrow_endpoints: Vec<(usize, usize)>,
}

struct ArrowData {
    indices: Vec<usize>,
    endpoints: Vec<(usize, usize)>,
    vertex_slots: Vec<usize>,
}

fn graded_arrow_data(a: &Algebra) -> Result<ArrowData> {
    let grading = a.grading().ok_or(Error::NotGraded)?;
    let units: Vec<usize> = a.unit_idempotents().to_vec();
    let degree0: Vec<usize> = (0..a.dim()).filter(|&i| grading[i] == 0).collect();
    if degree0.len() != units.len() || !degree0.iter().all(|i| units.contains(i)) {
        return Err(Error::MonomialActionRequired(
            "degree-zero part is not spanned by the vertex idempotents".into(),
        ));
    }
    let arrows: Vec<usize> = (0..a.dim()).filter(|&i| grading[i] == 1).collect();
    // generation in degrees <= 1
    let top = a.top_degree().unwrap_or(0);
    for d in 2..=top {
        let lower: Vec<usize> = (0..a.dim()).filter(|&i| grading[i] == d - 1).collect();
        let mut span = crate::linalg::Span::new(a.field(), a.dim());
        for &x in &arrows {
            for &y in &lower {
                span.insert(a.basis_product(y, x).coeffs);
                span.insert(a.basis_product(x, y).coeffs);
            }
        }
        for i in (0..a.dim()).filter(|&i| grading[i] == d) {
            if !span.contains(&a.basis_element(i).coeffs) {
                return Err(Error::MonomialActionRequired(
                    "algebra is not generated in degrees at most one".into(),
                ));
            }
        }
    }
    let mut endpoints = vec![];
    for &ai in &arrows {
        let mut src = None;
        let mut tgt = None;
        for (slot, &u) in units.iter().enumerate() {
            if !a.basis_product(u, ai).is_zero() {
                src = Some(slot);
            }
            if !a.basis_product(ai, u).is_zero() {
                tgt = Some(slot);
            }
        }
        match (src, tgt) {
            (Some(s), Some(t)) => endpoints.push((s, t)),
            _ => {
                return Err(Error::MonomialActionRequired(
                    "an arrow has no vertex support".into(),
                ))
            }
        }
    }
    Ok(ArrowData { indices: arrows, endpoints, vertex_slots: units })
}

/// The monomial data of an automorphism: vertex permutation, arrow
/// permutation with weights.
fn monomial_action(
    a: &Algebra,
    sigma: &AlgebraMorphism,
    data: &ArrowData,
) -> Result<(Vec<usize>, Vec<usize>, Vec<Scalar>)> {
    let units = &data.vertex_slots;
    let mut vperm = vec![usize::MAX; units.len()];
    for (s, &u) in units.iter().enumerate() {
        let image = sigma.apply(&a.basis_element(u));
        let support: Vec<usize> = image
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        if support.len() != 1 || !image.coeffs[support[0]].is_one() {
            return Err(Error::MonomialActionRequired(format!(
                "image of vertex idempotent {s} is not a vertex idempotent"
            )));
        }
        let t = units
            .iter()
            .position(|&u2| u2 == support[0])
            .ok_or_else(|| {
                Error::MonomialActionRequired("vertex image is not a vertex".into())
            })?;
        vperm[s] = t;
    }
    let mut aperm = vec![usize::MAX; data.indices.len()];
    let mut weights = vec![];
    for (k, &ai) in data.indices.iter().enumerate() {
        let image = sigma.apply(&a.basis_element(ai));
        let support: Vec<usize> = image
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect();
        if support.len() != 1 {
            return Err(Error::MonomialActionRequired(format!(
                "image of arrow {k} is not a scalar multiple of a single arrow"
            )));
        }
        let pos = data
            .indices
            .iter()
            .position(|&aj| aj == support[0])
            .ok_or_else(|| {
                Error::MonomialActionRequired("arrow image leaves the arrow space".into())
            })?;
        aperm[k] = pos;
        weights.push(image.coeffs[support[0]].clone());
    }
    let mut seen = vec![false; aperm.len()];
    for &p in &aperm {
        if seen[p] {
            return Err(Error::NotAutomorphism("arrow map is not a bijection".into()));
        }
        seen[p] = true;
    }
    Ok((vperm, aperm, weights))
}

fn permutation_order(perm: &[usize]) -> usize {
    let mut order = 1usize;
    let mut seen = vec![false; perm.len()];
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        loop {
            seen[i] = true;
            len += 1;
            i = perm[i];
            if i == start {
                break;
            }
        }
        order = num_integer::lcm(order, len);
    }
    order
}

/// Cycle invariants of a monomially acting automorphism of a graded basic
/// algebra generated in degrees at most one.
pub fn cycle_invariants(a: &Algebra, sigma: &AlgebraMorphism) -> Result<CycleInvariantReport> {
    sigma.verify_automorphism(a)?;
    let data = graded_arrow_data(a)?;
    let (vperm, aperm, weights) = monomial_action(a, sigma, &data)?;
    let n0 = num_integer::lcm(permutation_order(&vperm), permutation_order(&aperm));
    let tau = sigma.pow(n0, a);
    // tau is diagonal on arrows by construction; read the weights
    let mut stable = vec![];
    for &ai in &data.indices {
        let image = tau.apply(&a.basis_element(ai));
        let w = image.coeffs[ai].clone();
        debug_assert!({
            let mut expected = a.zero_element();
            expected.coeffs[ai] = w.clone();
            expected == image
        });
        stable.push(w);
    }
    // spanning forest over the underlying undirected graph
    let nv = data.vertex_slots.len();
    let field = a.field();
    let mut potential: Vec<Option<Scalar>> = vec![None; nv];
    let mut tree_edges = vec![false; data.indices.len()];
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![vec![]; nv];
    for (k, &(s, t)) in data.endpoints.iter().enumerate() {
        adjacency[s].push((k, t));
        if s != t {
            adjacency[t].push((k, s));
        }
    }
    for root in 0..nv {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Scalar::one(field));
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let pv = potential[v].clone().unwrap();
            for &(k, other) in &adjacency[v] {
                if potential[other].is_some() {
                    continue;
                }
                let (s, _t) = data.endpoints[k];
                // traverse along the arrow direction when v is its source
                let w = if s == v {
                    pv.mul(&stable[k])
                } else {
                    pv.mul(&stable[k].inverse().expect("weights are nonzero"))
                };
                potential[other] = Some(w);
                tree_edges[k] = true;
                queue.push_back(other);
            }
        }
    }
    let mut cycles = vec![];
    for (k, &(s, t)) in data.endpoints.iter().enumerate() {
        if tree_edges[k] {
            continue;
        }
        let ps = potential[s].clone().unwrap();
        let pt = potential[t].clone().unwrap();
        let product = ps.mul(&stable[k]).mul(&pt.inverse().expect("nonzero potential"));
        let order = match product.root_of_unity_order()? {
            RootOfUnity::Finite(n) => Some(n),
            RootOfUnity::No => None,
        };
        cycles.push(CycleData { edges: vec![(k, true)], product, order });
    }
    Ok(CycleInvariantReport {
        vertex_perm: vperm,
        arrow_perm: aperm,
        weights,
        perm_order: n0,
        stable_weights: stable,
        cycles,
        arrow_endpoints: data.endpoints,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OuterOrder {
    Finite(u64),
    Infinite,
    ExceedsBound,
    Undecided,
}

/// Least `n` with `sigma^n` inner.
///
/// The primary path uses cycle invariants: any cycle product that is not a
/// root of unity certifies infinite outer order, and otherwise the power
/// `perm_order * lcm(cycle orders)` is conjugation by an explicit
/// vertex-diagonal unit, after which the order is minimized over divisors.
/// When the action is not monomial the search falls back to testing powers
/// up to `bound`.
pub fn outer_order(
    a: &Algebra,
    sigma: &AlgebraMorphism,
    bound: u64,
    opts: SearchOptions,
) -> Result<OuterOrder> {
    match cycle_invariants(a, sigma) {
        Ok(report) => {
            if report.cycles.iter().any(|c| c.order.is_none()) {
                return Ok(OuterOrder::Infinite);
            }
            let mut l = 1u64;
            for c in &report.cycles {
                l = num_integer::lcm(l, c.order.unwrap_or(1));
            }
            let n = report.perm_order as u64 * l;
            // explicit witness check for sigma^n
            let tau = sigma.pow(n as usize, a);
            match is_inner(a, &tau, opts)? {
                InnerResult::Witness(_) => {}
                _ => {
                    return Err(Error::InternalInconsistency(
                        "power with trivial cycle products failed the inner test".into(),
                    ))
                }
            }
            let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            divisors.sort_unstable();
            for d in divisors {
                match is_inner(a, &sigma.pow(d as usize, a), opts)? {
                    InnerResult::Witness(_) => return Ok(OuterOrder::Finite(d)),
                    InnerResult::NotInner => continue,
                    InnerResult::Undecided => return Ok(OuterOrder::Undecided),
                }
            }
            Err(Error::InternalInconsistency(
                "no divisor of a certified inner power is inner".into(),
            ))
        }
        Err(Error::MonomialActionRequired(_)) | Err(Error::NotGraded) => {
            let mut undecided = false;
            for m in 1..=bound {
                match is_inner(a, &sigma.pow(m as usize, a), opts)? {
                    InnerResult::Witness(_) => return Ok(OuterOrder::Finite(m)),
                    InnerResult::NotInner => continue,
                    InnerResult::Undecided => undecided = true,
                }
            }
            Ok(if undecided {
                OuterOrder::Undecided
            } else {
                OuterOrder::ExceedsBound
            })
        }
        Err(e) => Err(e),
    }
}
