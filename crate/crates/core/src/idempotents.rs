//! Gabriel quivers, idempotent truncations, and basic versions.
//!
//! The primitive idempotent search works inside the semisimple quotient:
//! the center is split into primitive central idempotents through root
//! kernels of minimal polynomials, one primitive idempotent is extracted
//! per block by corner recursion, and the result is lifted through the
//! radical (idempotent refinement `e <- 3e^2 - 2e^3`).

use crate::algebra::{Algebra, AlgebraMorphism, Element};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Span};
use crate::quiver::{Arrow, BasisLabel, Quiver};
use crate::radical::{self, quotient_by_subspace};
use crate::scalar::{FieldDescriptor, Scalar};

// ---------------------------------------------------------------------------
// polynomial helpers over an exact field (monic, low degree first)
// ---------------------------------------------------------------------------

fn poly_trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_eval_in_algebra(a: &Algebra, p: &[Scalar], x: &Element, unit: &Element) -> Element {
    let mut acc = a.zero_element();
    for c in p.iter().rev() {
        acc = a.mul_unchecked(&acc, x);
        acc = a.add(&acc, &a.scale(c, unit));
    }
    acc
}

fn poly_eval(p: &[Scalar], t: &Scalar, field: FieldDescriptor) -> Scalar {
    let mut acc = Scalar::zero(field);
    for c in p.iter().rev() {
        acc = acc.mul(t).add(c);
    }
    acc
}

fn poly_divmod(num: &[Scalar], den: &[Scalar], field: FieldDescriptor) -> (Vec<Scalar>, Vec<Scalar>) {
    let den = poly_trim(den.to_vec());
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead_inv = den[dd].inverse().expect("nonzero leading coefficient");
    if rem.len() <= dd {
        return (vec![], poly_trim(rem));
    }
    let mut quot = vec![Scalar::zero(field); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i].mul(&lead_inv);
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            rem[i - dd + j] = rem[i - dd + j].sub(&c.mul(dc));
        }
    }
    (poly_trim(quot), poly_trim(rem))
}

fn poly_mul(a: &[Scalar], b: &[Scalar], field: FieldDescriptor) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Scalar::zero(field); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &[Scalar], b: &[Scalar], field: FieldDescriptor) -> Vec<Scalar> {
    let len = a.len().max(b.len());
    let mut out = vec![Scalar::zero(field); len];
    for (i, x) in a.iter().enumerate() {
        out[i] = out[i].add(x);
    }
    for (i, y) in b.iter().enumerate() {
        out[i] = out[i].sub(y);
    }
    poly_trim(out)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g.
fn poly_ext_gcd(
    a: &[Scalar],
    b: &[Scalar],
    field: FieldDescriptor,
) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    let mut r0 = poly_trim(a.to_vec());
    let mut r1 = poly_trim(b.to_vec());
    let one = vec![Scalar::one(field)];
    let mut s0 = one.clone();
    let mut s1: Vec<Scalar> = vec![];
    let mut t0: Vec<Scalar> = vec![];
    let mut t1 = one;
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1, field);
        let s = poly_sub(&s0, &poly_mul(&q, &s1, field), field);
        let t = poly_sub(&t0, &poly_mul(&q, &t1, field), field);
        r0 = r1;
        s0 = s1;
        t0 = t1;
        r1 = r;
        s1 = s;
        t1 = t;
    }
    (r0, s0, t0)
}

/// Roots of a polynomial in the coefficient field, verified by evaluation.
///
/// Complete over `Q` (rational root theorem) and over `F_p` with desk-sized
/// `p` (exhaustive). Over cyclotomic fields the search tries rational
/// candidates and torsion multiples of them, which covers the group-like
/// elements that arise here.
fn polynomial_roots(p: &[Scalar], field: FieldDescriptor) -> Vec<Scalar> {
    let p = poly_trim(p.to_vec());
    if p.len() <= 1 {
        return vec![];
    }
    let mut candidates: Vec<Scalar> = vec![Scalar::zero(field), Scalar::one(field)];
    match field {
        FieldDescriptor::PrimeField(q) => {
            if q <= 1 << 20 {
                candidates.extend((0..q).map(|k| Scalar::from_integer(k as i64, field)));
            }
        }
        FieldDescriptor::Rationals => {
            candidates.extend(rational_root_candidates(&p, field));
        }
        FieldDescriptor::CyclotomicRationals(n) => {
            let mut base: Vec<Scalar> = vec![Scalar::one(field)];
            if let Some(rc) = all_rational_coeffs(&p, field) {
                base.extend(rational_root_candidates(&rc, FieldDescriptor::Rationals)
                    .into_iter()
                    .filter_map(|c| lift_rational(&c, field)));
            }
            let z = Scalar::zeta(field).expect("cyclotomic field");
            for c in base {
                for k in 0..n {
                    candidates.push(c.mul(&z.pow(k)));
                    candidates.push(c.mul(&z.pow(k)).neg());
                }
            }
        }
    }
    let mut roots: Vec<Scalar> = vec![];
    for cand in candidates {
        if roots.contains(&cand) {
            continue;
        }
        if poly_eval(&p, &cand, field).is_zero() {
            roots.push(cand);
        }
    }
    roots
}

fn all_rational_coeffs(p: &[Scalar], _field: FieldDescriptor) -> Option<Vec<Scalar>> {
    let q = FieldDescriptor::Rationals;
    let mut out = vec![];
    for c in p {
        let printed = c.to_string();
        match Scalar::parse(&printed, q) {
            Ok(r) => out.push(r),
            Err(_) => return None,
        }
    }
    Some(out)
}

fn lift_rational(c: &Scalar, field: FieldDescriptor) -> Option<Scalar> {
    Scalar::parse(&c.to_string(), field).ok()
}

fn rational_root_candidates(p: &[Scalar], field: FieldDescriptor) -> Vec<Scalar> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive, Zero};
    // clear denominators
    let mut scale = BigInt::from(1);
    for c in p {
        if let Some(r) = c.as_rational() {
            let d = r.denom();
            scale = &scale / scale.clone().gcd(d) * d;
        }
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| {
            let r = c.as_rational().expect("rational coefficients");
            (r * num_rational::BigRational::from_integer(scale.clone()))
                .to_integer()
        })
        .collect();
    let a0 = ints.iter().find(|c| !c.is_zero()).cloned().unwrap_or_default();
    let alead = ints.last().cloned().unwrap_or_default();
    let (Some(a0u), Some(aleadu)) = (a0.abs().to_u64(), alead.abs().to_u64()) else {
        return vec![];
    };
    let num_divs = small_divisors(a0u);
    let den_divs = small_divisors(aleadu);
    let mut out = vec![];
    for nu in &num_divs {
        for de in &den_divs {
            for sign in [1i64, -1] {
                if let Ok(c) = Scalar::from_rational(
                    BigInt::from(sign) * BigInt::from(*nu),
                    BigInt::from(*de),
                    field,
                ) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn small_divisors(n: u64) -> Vec<u64> {
    if n == 0 {
        return vec![1];
    }
    let mut out = vec![];
    let mut d = 1;
    while d * d <= n && d < 1 << 16 {
        if n % d == 0 {
            out.push(d);
            out.push(n / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// subalgebras of a fixed ambient algebra
// ---------------------------------------------------------------------------

/// A unital subalgebra presented by a basis inside an ambient algebra.
#[derive(Debug, Clone)]
struct SubAlg {
    basis: Vec<Element>,
    unit: Element,
}

impl SubAlg {
    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Minimal polynomial of `x` with respect to this subalgebra's unit.
    fn minimal_polynomial(&self, a: &Algebra, x: &Element) -> Vec<Scalar> {
        let field = a.field();
        let mut powers: Vec<Element> = vec![self.unit.clone()];
        let mut span = Span::new(field, a.dim());
        span.insert(self.unit.coeffs.clone());
        loop {
            let next = a.mul_unchecked(powers.last().unwrap(), x);
            if !span.insert(next.coeffs.clone()) {
                // solve for the dependence
                let cols: Vec<Vec<Scalar>> = powers.iter().map(|p| p.coeffs.clone()).collect();
                let m = Mat::from_cols(field, &cols);
                let sol = m.solve(&next.coeffs).expect("dependent power");
                let mut p: Vec<Scalar> = sol.iter().map(|c| c.neg()).collect();
                p.push(Scalar::one(field));
                return poly_trim(p);
            }
            powers.push(next);
        }
    }

    fn corner(&self, a: &Algebra, e: &Element) -> SubAlg {
        let mut span = Span::new(a.field(), a.dim());
        let mut basis = vec![];
        for b in &self.basis {
            let v = a.mul_unchecked(&a.mul_unchecked(e, b), e);
            if span.insert(v.coeffs.clone()) {
                basis.push(v);
            }
        }
        SubAlg { basis, unit: e.clone() }
    }
}

/// Deterministic candidate stream followed by seeded random combinations.
fn candidate_stream(a: &Algebra, sub: &SubAlg, seed: u64, budget: usize) -> Vec<Element> {
    use rand::Rng;
    use rand::SeedableRng;
    let mut out: Vec<Element> = vec![];
    out.extend(sub.basis.iter().cloned());
    for (i, x) in sub.basis.iter().enumerate() {
        for y in sub.basis.iter().skip(i + 1) {
            out.push(a.add(x, y));
            out.push(a.sub(x, y));
        }
    }
    for x in &sub.basis {
        for y in &sub.basis {
            out.push(a.mul_unchecked(x, y));
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    while out.len() < budget {
        let mut v = a.zero_element();
        for x in &sub.basis {
            let c = Scalar::from_integer(rng.gen_range(-3i64..=3), a.field());
            v = a.add(&v, &a.scale(&c, x));
        }
        out.push(v);
    }
    out.truncate(budget);
    out
}

/// A nontrivial idempotent in a unital subalgebra, or None when no
/// candidate splits (which certifies nothing beyond the search budget).
fn splitting_idempotent(a: &Algebra, sub: &SubAlg, seed: u64) -> Option<Element> {
    let field = a.field();
    let budget = 64 + 4 * sub.dim() * sub.dim();
    for y in candidate_stream(a, sub, seed, budget) {
        if y.is_zero() {
            continue;
        }
        let m = sub.minimal_polynomial(a, &y);
        if m.len() <= 2 {
            continue; // scalar multiple of the unit
        }
        for root in polynomial_roots(&m, field) {
            // split off the full (t - root)^k factor
            let lin = vec![root.neg(), Scalar::one(field)];
            let mut m1 = vec![Scalar::one(field)];
            let mut rest = m.clone();
            loop {
                let (q, r) = poly_divmod(&rest, &lin, field);
                if !r.is_empty() {
                    break;
                }
                m1 = poly_mul(&m1, &lin, field);
                rest = q;
            }
            if rest.len() <= 1 {
                continue; // the whole minimal polynomial is (t - root)^k
            }
            let (g, s, _) = poly_ext_gcd(&m1, &rest, field);
            if g.len() != 1 {
                continue;
            }
            let ginv = g[0].inverse().expect("nonzero gcd");
            // e = s*m1/g evaluated at y kills the root component; use its
            // complement so that e projects onto it
            let proj = poly_mul(&s.iter().map(|c| c.mul(&ginv)).collect::<Vec<_>>(), &m1, field);
            let e = poly_eval_in_algebra(a, &proj, &y, &sub.unit);
            let e = a.sub(&sub.unit, &e);
            if e.is_zero() || e == sub.unit {
                continue;
            }
            if a.mul_unchecked(&e, &e) == e {
                return Some(e);
            }
        }
    }
    None
}

/// One primitive idempotent of a unital subalgebra of a semisimple
/// algebra, by corner recursion.
fn primitive_idempotent_in(a: &Algebra, sub: &SubAlg, seed: u64) -> Result<Element> {
    if sub.dim() == 0 {
        return Err(Error::InternalInconsistency("empty corner".into()));
    }
    if sub.dim() == 1 {
        return Ok(sub.unit.clone());
    }
    match splitting_idempotent(a, sub, seed) {
        Some(e) => {
            let corner = sub.corner(a, &e);
            primitive_idempotent_in(a, &corner, seed.wrapping_add(1))
        }
        None => Err(Error::NotSplit(format!(
            "no splitting idempotent found in a corner of dimension {}",
            sub.dim()
        ))),
    }
}

/// The center `{z : zb = bz for all b}` as a subalgebra.
fn center(a: &Algebra) -> SubAlg {
    let n = a.dim();
    let field = a.field();
    let mut rows: Vec<Vec<Scalar>> = vec![];
    for i in 0..n {
        let b = a.basis_element(i);
        let l = a.left_mult_matrix(&b);
        let r = a.right_mult_matrix(&b);
        for k in 0..n {
            let mut row = vec![Scalar::zero(field); n];
            for j in 0..n {
                row[j] = l.get(k, j).sub(r.get(k, j));
            }
            rows.push(row);
        }
    }
    let kernel = Mat::from_rows(field, rows).kernel_basis();
    SubAlg {
        basis: kernel.into_iter().map(|coeffs| Element { coeffs }).collect(),
        unit: a.unit(),
    }
}

/// Decomposition of a semisimple algebra into its simple blocks: a list of
/// primitive central idempotents. Errors with NotSplit when some block's
/// center is a proper field extension.
fn central_primitive_idempotents(b: &Algebra, seed: u64) -> Result<Vec<Element>> {
    let z = center(b);
    let mut blocks: Vec<Element> = vec![b.unit()];
    loop {
        let mut refined = false;
        let mut next: Vec<Element> = vec![];
        for c in &blocks {
            // center of the block c*Z (Z is commutative, so corners are ideals)
            let zc = SubAlg {
                basis: z
                    .basis
                    .iter()
                    .map(|v| b.mul_unchecked(c, v))
                    .collect::<Vec<_>>()
                    .into_iter()
                    .fold((Span::new(b.field(), b.dim()), vec![]), |(mut sp, mut bs), v| {
                        if sp.insert(v.coeffs.clone()) {
                            bs.push(v);
                        }
                        (sp, bs)
                    })
                    .1,
                unit: c.clone(),
            };
            if zc.dim() <= 1 {
                next.push(c.clone());
                continue;
            }
            match splitting_idempotent(b, &zc, seed) {
                Some(e) => {
                    next.push(e.clone());
                    next.push(b.sub(c, &e));
                    refined = true;
                }
                None => {
                    return Err(Error::NotSplit(format!(
                        "block center has dimension {} over the field",
                        zc.dim()
                    )));
                }
            }
        }
        blocks = next;
        if !refined {
            break;
        }
    }
    Ok(blocks)
}

/// Idempotent refinement `e <- 3e^2 - 2e^3` until exactly idempotent.
fn lift_idempotent(a: &Algebra, start: &Element) -> Result<Element> {
    let mut e = start.clone();
    let three = Scalar::from_integer(3, a.field());
    let two = Scalar::from_integer(2, a.field());
    for _ in 0..64 {
        if a.is_idempotent(&e) {
            return Ok(e);
        }
        let e2 = a.mul_unchecked(&e, &e);
        let e3 = a.mul_unchecked(&e2, &e);
        e = a.sub(&a.scale(&three, &e2), &a.scale(&two, &e3));
    }
    Err(Error::LiftDivergence)
}

/// Data produced by [`basic_idempotent`]: the idempotent together with an
/// orthogonal decomposition into lifted primitive idempotents, one per
/// block of the semisimple quotient.
pub struct BasicIdempotent {
    pub eta: Element,
    pub parts: Vec<Element>,
}

/// An idempotent `eta` with `eta A eta` basic and `A eta A = A`.
pub fn basic_idempotent(a: &Algebra, seed: u64) -> Result<BasicIdempotent> {
    let rad = radical::radical_subspace(a)?;
    let (b, chosen) = quotient_by_subspace(a, &rad, "r")?;
    let section = |x: &Element| -> Element {
        let mut out = a.zero_element();
        for (k, &i) in chosen.iter().enumerate() {
            out.coeffs[i] = x.coeffs[k].clone();
        }
        out
    };
    let blocks = central_primitive_idempotents(&b, seed)?;
    // one primitive idempotent per block, in the quotient
    let mut primitives: Vec<Element> = vec![];
    for (t, c) in blocks.iter().enumerate() {
        let block_basis: Vec<Element> = {
            let mut sp = Span::new(b.field(), b.dim());
            let mut bs = vec![];
            for i in 0..b.dim() {
                let v = b.mul_unchecked(&b.mul_unchecked(c, &b.basis_element(i)), c);
                if sp.insert(v.coeffs.clone()) {
                    bs.push(v);
                }
            }
            bs
        };
        let sub = SubAlg { basis: block_basis, unit: c.clone() };
        primitives.push(primitive_idempotent_in(&b, &sub, seed.wrapping_add(t as u64))?);
    }
    // lift sequentially, keeping orthogonality through corner projection
    let mut parts: Vec<Element> = vec![];
    let unit = a.unit();
    for p in &primitives {
        let mut x = section(p);
        if !parts.is_empty() {
            let mut sum = a.zero_element();
            for q in &parts {
                sum = a.add(&sum, q);
            }
            let proj = a.sub(&unit, &sum);
            x = a.mul_unchecked(&a.mul_unchecked(&proj, &x), &proj);
        }
        let e = lift_idempotent(a, &x)?;
        if e.is_zero() {
            return Err(Error::InternalInconsistency("lifted idempotent vanished".into()));
        }
        parts.push(e);
    }
    let mut eta = a.zero_element();
    for p in &parts {
        eta = a.add(&eta, p);
    }
    // sanity: eta is idempotent and A eta A = A
    if !a.is_idempotent(&eta) {
        return Err(Error::InternalInconsistency("eta is not idempotent".into()));
    }
    let mut span = Span::new(a.field(), a.dim());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let v = a.mul_unchecked(
                &a.mul_unchecked(&a.basis_element(i), &eta),
                &a.basis_element(j),
            );
            span.insert(v.coeffs);
        }
    }
    if span.dim() != a.dim() {
        return Err(Error::InternalInconsistency(
            "eta does not meet every block".into(),
        ));
    }
    Ok(BasicIdempotent { eta, parts })
}

/// Express an idempotent as a sum of unit idempotents, when possible.
pub fn decompose_along_units(a: &Algebra, eta: &Element) -> Option<Vec<Element>> {
    let mut parts = vec![];
    let mut sum = a.zero_element();
    for &u in a.unit_idempotents() {
        let e = a.basis_element(u);
        if a.mul_unchecked(&a.mul_unchecked(&e, eta), &e) == e {
            sum = a.add(&sum, &e);
            parts.push(e);
        }
    }
    if sum == *eta {
        Some(parts)
    } else {
        None
    }
}

/// The corner algebra `eta A eta` with unit `eta`.
pub fn idempotent_truncation(a: &Algebra, eta: &Element) -> Result<Algebra> {
    if !a.is_idempotent(eta) {
        return Err(Error::NotIdempotent);
    }
    let parts = decompose_along_units(a, eta).unwrap_or_else(|| vec![eta.clone()]);
    truncate_by_orthogonal_idempotents(a, &parts)
}

/// The corner algebra for `eta = sum(parts)` with the given orthogonal
/// idempotent decomposition installed as the unit idempotents.
pub fn truncate_by_orthogonal_idempotents(a: &Algebra, parts: &[Element]) -> Result<Algebra> {
    let field = a.field();
    for (i, p) in parts.iter().enumerate() {
        if !a.is_idempotent(p) || p.is_zero() {
            return Err(Error::NotIdempotent);
        }
        for q in parts.iter().skip(i + 1) {
            if !a.mul_unchecked(p, q).is_zero() || !a.mul_unchecked(q, p).is_zero() {
                return Err(Error::NotIdempotent);
            }
        }
    }
    let mut eta = a.zero_element();
    for p in parts {
        eta = a.add(&eta, p);
    }
    let mut span = Span::new(field, a.dim());
    let mut columns: Vec<Vec<Scalar>> = vec![];
    let mut labels: Vec<BasisLabel> = vec![];
    let mut synthetic = 0usize;
    for (t, p) in parts.iter().enumerate() {
        if !span.insert(p.coeffs.clone()) {
            return Err(Error::NotIdempotent);
        }
        columns.push(p.coeffs.clone());
        labels.push(match (0..a.dim()).find(|&i| a.basis_element(i) == *p) {
            Some(i) => a.label(i).clone(),
            None => BasisLabel::Indexed("eta".into(), t),
        });
    }
    for i in 0..a.dim() {
        let b = a.basis_element(i);
        let v = a.mul_unchecked(&a.mul_unchecked(&eta, &b), &eta);
        if v.is_zero() || !span.insert(v.coeffs.clone()) {
            continue;
        }
        columns.push(v.coeffs.clone());
        labels.push(if v == b {
            a.label(i).clone()
        } else {
            synthetic += 1;
            BasisLabel::Indexed("t".into(), synthetic)
        });
    }
    let dim = columns.len();
    let m = Mat::from_cols(field, &columns);
    let mut table = vec![vec![vec![]; dim]; dim];
    for i in 0..dim {
        let xi = Element { coeffs: columns[i].clone() };
        for j in 0..dim {
            let xj = Element { coeffs: columns[j].clone() };
            let prod = a.mul_unchecked(&xi, &xj);
            let coords = m.solve(&prod.coeffs).ok_or_else(|| {
                Error::InternalInconsistency("corner is not multiplicatively closed".into())
            })?;
            table[i][j] = coords
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect();
        }
    }
    let grading = a.grading().and_then(|g| {
        let mut out = vec![];
        for col in &columns {
            let degrees: std::collections::BTreeSet<usize> = col
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, _)| g[i])
                .collect();
            if degrees.len() == 1 {
                out.push(*degrees.iter().next().unwrap());
            } else {
                return None;
            }
        }
        Some(out)
    });
    Ok(Algebra::new(
        field,
        labels,
        table,
        (0..parts.len()).collect(),
        grading,
    ))
}

/// Verify that the algebra is basic and split: the semisimple quotient is a
/// product of copies of the field indexed by the unit idempotents.
pub fn verify_basic_split(a: &Algebra) -> Result<()> {
    let rad = radical::radical_subspace(a)?;
    let (b, _) = quotient_by_subspace(a, &rad, "r")?;
    let r = a.unit_idempotents().len();
    if b.dim() == r {
        return Ok(());
    }
    // distinguish the failure: a split non-basic algebra has a block of
    // dimension > 1 with scalar center
    match central_primitive_idempotents(&b, 0) {
        Ok(blocks) => Err(Error::NotBasic(format!(
            "semisimple quotient has dimension {} over {} blocks",
            b.dim(),
            blocks.len()
        ))),
        Err(e) => Err(e),
    }
}

/// Gabriel quiver with chosen arrow representatives in the algebra.
pub struct GabrielQuiver {
    pub quiver: Quiver,
    /// One representative element per arrow, spanning rad/rad^2 Peirce-wise.
    pub arrow_reps: Vec<Element>,
}

/// The quiver of a basic split algebra: vertices are the unit idempotents
/// and the number of arrows `i -> j` is `dim e_i (rad/rad^2) e_j`, matching
/// the left-to-right path composition used everywhere in this crate.
pub fn quiver_of(a: &Algebra) -> Result<GabrielQuiver> {
    verify_basic_split(a)?;
    let rad = radical::radical_subspace(a)?;
    let rad2 = {
        let mut out = Span::new(a.field(), a.dim());
        for x in rad.basis() {
            let xe = Element { coeffs: x.clone() };
            for y in rad.basis() {
                let ye = Element { coeffs: y.clone() };
                out.insert(a.mul_unchecked(&xe, &ye).coeffs);
            }
        }
        out
    };
    let units = a.unit_idempotents();
    let mut vertex_names: Vec<String> = vec![];
    for (k, &u) in units.iter().enumerate() {
        match a.label(u) {
            BasisLabel::Vertex(name) => vertex_names.push(name.clone()),
            _ => vertex_names.push(format!("v{k}")),
        }
    }
    {
        let mut seen = std::collections::HashSet::new();
        if !vertex_names.iter().all(|n| seen.insert(n.clone())) {
            vertex_names = (0..units.len()).map(|k| format!("v{k}")).collect();
        }
    }
    let mut arrows = vec![];
    let mut reps = vec![];
    let mut counter = 0usize;
    for (i, &ei) in units.iter().enumerate() {
        for (j, &ej) in units.iter().enumerate() {
            let mut ext = rad2.clone();
            for w in rad.basis() {
                let we = Element { coeffs: w.clone() };
                let v = a.mul_unchecked(
                    &a.mul_unchecked(&a.basis_element(ei), &we),
                    &a.basis_element(ej),
                );
                if ext.insert(v.coeffs.clone()) {
                    arrows.push(Arrow {
                        name: format!("a{counter}"),
                        source: vertex_names[i].clone(),
                        target: vertex_names[j].clone(),
                    });
                    reps.push(v);
                    counter += 1;
                }
            }
        }
    }
    let quiver = Quiver::new(vertex_names, arrows)?;
    Ok(GabrielQuiver { quiver, arrow_reps: reps })
}

/// The separated quiver of a radical-square-zero algebra: primed and
/// unprimed vertex copies with all arrows running from unprimed to primed.
pub fn separated_quiver(a: &Algebra) -> Result<Quiver> {
    let layers = radical::radical_layers(a)?;
    if layers.len() > 2 {
        return Err(Error::RadicalSquareNotZero);
    }
    let g = quiver_of(a)?;
    let mut vertices: Vec<String> = g.quiver.vertices.clone();
    vertices.extend(g.quiver.vertices.iter().map(|v| format!("{v}'")));
    let arrows = g
        .quiver
        .arrows
        .iter()
        .map(|arr| Arrow {
            name: arr.name.clone(),
            source: arr.source.clone(),
            target: format!("{}'", arr.target),
        })
        .collect();
    Quiver::new(vertices, arrows)
}

/// The induced permutation of unit idempotents under an automorphism,
/// read off in the semisimple quotient.
pub fn vertex_permutation(a: &Algebra, sigma: &AlgebraMorphism) -> Result<Vec<usize>> {
    let rad = radical::radical_subspace(a)?;
    let units = a.unit_idempotents();
    let mut perm = vec![usize::MAX; units.len()];
    for (s, &es) in units.iter().enumerate() {
        let image = sigma.apply(&a.basis_element(es));
        let mut found = None;
        for (t, &et) in units.iter().enumerate() {
            // image == e_t mod rad?
            let mut diff = a.sub(&image, &a.basis_element(et));
            let reduced = rad.reduce(std::mem::take(&mut diff.coeffs));
            if reduced.iter().all(|c| c.is_zero()) {
                found = Some(t);
                break;
            }
        }
        perm[s] = found.ok_or_else(|| {
            Error::NotAutomorphism("does not permute the vertex idempotents".into())
        })?;
    }
    // must be a bijection
    let mut seen = vec![false; perm.len()];
    for &p in &perm {
        if seen[p] {
            return Err(Error::NotAutomorphism("vertex map is not a bijection".into()));
        }
        seen[p] = true;
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_algebra, Presentation, Relation};
    use crate::quiver::Quiver;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_integer(k, q())
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

    fn lambda_q(qval: i64) -> Algebra {
        let field = q();
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
                Relation { terms: vec![(s(1), vec!["x".into(), "x".into()])] },
                Relation { terms: vec![(s(1), vec!["y".into(), "y".into()])] },
                Relation {
                    terms: vec![
                        (s(1), vec!["x".into(), "y".into()]),
                        (s(qval), vec!["y".into(), "x".into()]),
                    ],
                },
            ],
            truncate_radical: 3,
        })
        .unwrap()
    }

    fn two_points() -> Algebra {
        build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap(),
            relations: vec![],
            truncate_radical: 2,
        })
        .unwrap()
    }

    /// 2x2 matrix algebra over Q by structure constants on matrix units.
    fn mat2() -> Algebra {
        let field = q();
        let labels: Vec<BasisLabel> = (0..4)
            .map(|k| BasisLabel::Indexed("E".into(), k))
            .collect();
        // index = 2*row + col
        let mut table = vec![vec![vec![]; 4]; 4];
        for r in 0..2 {
            for c in 0..2 {
                for r2 in 0..2 {
                    for c2 in 0..2 {
                        if c == r2 {
                            table[2 * r + c][2 * r2 + c2] =
                                vec![(2 * r + c2, Scalar::one(field))];
                        }
                    }
                }
            }
        }
        // unit = E00 + E11
        Algebra::new(field, labels, table, vec![0, 3], None)
    }

    #[test]
    fn quiver_round_trip() {
        let a = lambda_q(2);
        let g = quiver_of(&a).unwrap();
        assert_eq!(g.quiver.vertices.len(), 1);
        assert_eq!(g.quiver.arrows.len(), 2);
        let b = kx3();
        let gb = quiver_of(&b).unwrap();
        assert_eq!(gb.quiver.vertices.len(), 1);
        assert_eq!(gb.quiver.arrows.len(), 1);
    }

    #[test]
    fn separated_quiver_shapes() {
        // k[x]/(x^2): one arrow v -> v'
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
        let sq = separated_quiver(&kx2).unwrap();
        assert_eq!(sq.vertices.len(), 2);
        assert_eq!(sq.arrows.len(), 1);
        assert!(separated_quiver(&kx3()).is_err());
        // semisimple: no arrows
        let sq2 = separated_quiver(&two_points()).unwrap();
        assert_eq!(sq2.arrows.len(), 0);
        assert_eq!(sq2.vertices.len(), 4);
    }

    #[test]
    fn truncation_by_unit_gives_same_algebra() {
        let a = lambda_q(1);
        let t = idempotent_truncation(&a, &a.unit()).unwrap();
        assert_eq!(t, a);
    }

    #[test]
    fn truncation_by_one_vertex() {
        let a = two_points();
        let e1 = a.basis_element(0);
        let t = idempotent_truncation(&a, &e1).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.check().is_empty());
        assert!(idempotent_truncation(&a, &a.basis_element(1).clone())
            .is_ok());
        let not_idem = Element { coeffs: vec![s(1), s(1)] };
        assert!(idempotent_truncation(&a, &a.add(&not_idem, &e1)).is_err());
    }

    #[test]
    fn basic_idempotent_on_basic_algebra_is_unit() {
        let a = lambda_q(2);
        let bi = basic_idempotent(&a, 0).unwrap();
        assert_eq!(bi.eta, a.unit());
    }

    #[test]
    fn basic_idempotent_on_matrix_algebra() {
        let a = mat2();
        assert!(a.check().is_empty());
        let bi = basic_idempotent(&a, 0).unwrap();
        let t = truncate_by_orthogonal_idempotents(&a, &bi.parts).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(matches!(
            verify_basic_split(&a),
            Err(Error::NotBasic(_))
        ));
    }

    #[test]
    fn vertex_permutations() {
        let a = two_points();
        let id = AlgebraMorphism::identity(&a);
        assert_eq!(vertex_permutation(&a, &id).unwrap(), vec![0, 1]);
        let swap = AlgebraMorphism {
            columns: vec![vec![s(0), s(1)], vec![s(1), s(0)]],
        };
        swap.verify_automorphism(&a).unwrap();
        assert_eq!(vertex_permutation(&a, &swap).unwrap(), vec![1, 0]);
    }

    #[test]
    fn minimal_polynomial_and_roots() {
        let a = mat2();
        let sub = SubAlg {
            basis: (0..4).map(|i| a.basis_element(i)).collect(),
            unit: a.unit(),
        };
        // E01 + E10 has minimal polynomial t^2 - 1
        let x = a.add(&a.basis_element(1), &a.basis_element(2));
        let m = sub.minimal_polynomial(&a, &x);
        assert_eq!(m, vec![s(-1), s(0), s(1)]);
        let roots = polynomial_roots(&m, q());
        assert!(roots.contains(&s(1)) && roots.contains(&s(-1)));
        // E01 is nilpotent: t^2
        let m2 = sub.minimal_polynomial(&a, &a.basis_element(1));
        assert_eq!(m2, vec![s(0), s(0), s(1)]);
    }
}
