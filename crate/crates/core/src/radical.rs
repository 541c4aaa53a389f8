//! Radical and socle computations, quotients, and connectivity.
//!
//! The radical is computed from the kernel of the regular trace form
//! `(x, y) -> tr(L_{xy})`, which contains the radical over any field; the
//! kernel is certified as the radical by checking that it is a nilpotent
//! two-sided ideal. Over the rationals and their cyclotomic extensions the
//! kernel always passes. In positive characteristic a failing certificate
//! falls back to the graded or idempotent-complement candidate, certified
//! through the nondegeneracy of the quotient's trace form.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Span};
use crate::quiver::BasisLabel;
use crate::scalar::Scalar;

/// Kernel of the bilinear form `(x, y) -> tr(L_{xy})`.
fn trace_form_kernel(a: &Algebra) -> Span {
    let n = a.dim();
    let traces: Vec<Scalar> = (0..n).map(|k| a.left_trace_of_basis(k)).collect();
    let mut t = Mat::zero(a.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut v = Scalar::zero(a.field());
            for (k, c) in a.table_entry(i, j) {
                v = v.add(&c.mul(&traces[*k]));
            }
            t.set(i, j, v);
        }
    }
    Span::from_vectors(a.field(), n, &t.kernel_basis())
}

fn is_two_sided_ideal(a: &Algebra, s: &Span) -> bool {
    for v in s.basis() {
        let x = Element { coeffs: v.clone() };
        for i in 0..a.dim() {
            let b = a.basis_element(i);
            if !s.contains(&a.mul_unchecked(&b, &x).coeffs)
                || !s.contains(&a.mul_unchecked(&x, &b).coeffs)
            {
                return false;
            }
        }
    }
    true
}

/// Spans of products x*y for x in `left`, y in `right`.
fn product_span(a: &Algebra, left: &Span, right: &Span) -> Span {
    let mut out = Span::new(a.field(), a.dim());
    for x in left.basis() {
        let xe = Element { coeffs: x.clone() };
        for y in right.basis() {
            let ye = Element { coeffs: y.clone() };
            out.insert(a.mul_unchecked(&xe, &ye).coeffs);
        }
    }
    out
}

fn is_nilpotent(a: &Algebra, s: &Span) -> bool {
    let mut power = s.clone();
    for _ in 0..a.dim() {
        if power.is_zero_space() {
            return true;
        }
        power = product_span(a, &power, s);
    }
    power.is_zero_space()
}

/// The Jacobson radical as a subspace, with a certificate.
pub fn radical_subspace(a: &Algebra) -> Result<Span> {
    let k = trace_form_kernel(a);
    if is_two_sided_ideal(a, &k) && is_nilpotent(a, &k) {
        return Ok(k);
    }
    if a.field().characteristic() == 0 {
        return Err(Error::InternalInconsistency(
            "trace-form kernel failed certification in characteristic zero".into(),
        ));
    }
    // fallback candidates for positive characteristic
    let mut candidates: Vec<Span> = vec![];
    if let Some(g) = a.grading() {
        let positive: Vec<Vec<Scalar>> = (0..a.dim())
            .filter(|&i| g[i] > 0)
            .map(|i| a.basis_element(i).coeffs)
            .collect();
        candidates.push(Span::from_vectors(a.field(), a.dim(), &positive));
    }
    let complement: Vec<Vec<Scalar>> = (0..a.dim())
        .filter(|i| !a.unit_idempotents().contains(i))
        .map(|i| a.basis_element(i).coeffs)
        .collect();
    candidates.push(Span::from_vectors(a.field(), a.dim(), &complement));
    for j in candidates {
        if !is_two_sided_ideal(a, &j) || !is_nilpotent(a, &j) {
            continue;
        }
        // certify semisimplicity of A/J through its trace form
        let (quotient, _) = quotient_by_subspace(a, &j, "q")?;
        if quotient.dim() == 0 {
            continue;
        }
        if !trace_form_kernel(&quotient).is_zero_space() {
            continue;
        }
        return Ok(j);
    }
    Err(Error::NotNilpotentComplement(
        "no certified radical candidate".into(),
    ))
}

/// Descending chain `A = L_0, rad, rad^2, ...` down to the last nonzero
/// power. The radical is certified nilpotent, so the chain reaches zero.
pub fn radical_layers(a: &Algebra) -> Result<Vec<Span>> {
    let rad = radical_subspace(a)?;
    let whole = Span::from_vectors(
        a.field(),
        a.dim(),
        &(0..a.dim()).map(|i| a.basis_element(i).coeffs).collect::<Vec<_>>(),
    );
    let mut layers = vec![whole];
    let mut power = rad.clone();
    while !power.is_zero_space() {
        layers.push(power.clone());
        power = product_span(a, &power, &rad);
    }
    Ok(layers)
}

pub struct SocleReport {
    /// Two-sided socle.
    pub span: Span,
    /// Whether the left and right socles agree (they do for the
    /// self-injective algebras in scope).
    pub left_equals_right: bool,
}

/// Two-sided socle `{x : rad * x = 0 = x * rad}`.
pub fn socle(a: &Algebra) -> Result<SocleReport> {
    let rad = radical_subspace(a)?;
    let n = a.dim();
    if rad.is_zero_space() {
        let whole = Span::from_vectors(
            a.field(),
            n,
            &(0..n).map(|i| a.basis_element(i).coeffs).collect::<Vec<_>>(),
        );
        return Ok(SocleReport { span: whole, left_equals_right: true });
    }
    let mut left_rows: Vec<Vec<Scalar>> = vec![];
    let mut right_rows: Vec<Vec<Scalar>> = vec![];
    for r in rad.basis() {
        let re = Element { coeffs: r.clone() };
        let l = a.left_mult_matrix(&re);
        let rm = a.right_mult_matrix(&re);
        for i in 0..n {
            left_rows.push(l.row(i).to_vec());
            right_rows.push(rm.row(i).to_vec());
        }
    }
    let left = Span::from_vectors(
        a.field(),
        n,
        &Mat::from_rows(a.field(), left_rows.clone()).kernel_basis(),
    );
    let right = Span::from_vectors(
        a.field(),
        n,
        &Mat::from_rows(a.field(), right_rows.clone()).kernel_basis(),
    );
    let mut both = left_rows;
    both.extend(right_rows);
    let two_sided = Span::from_vectors(
        a.field(),
        n,
        &Mat::from_rows(a.field(), both).kernel_basis(),
    );
    let left_equals_right = left.dim() == right.dim()
        && left.basis().iter().all(|v| right.contains(v));
    Ok(SocleReport { span: two_sided, left_equals_right })
}

/// Quotient of `a` by a two-sided ideal given as a subspace. Returns the
/// quotient and the indices of the original basis vectors chosen as
/// complement representatives (labels are preserved for those).
pub fn quotient_by_subspace(
    a: &Algebra,
    ideal: &Span,
    _tag: &str,
) -> Result<(Algebra, Vec<usize>)> {
    let n = a.dim();
    let field = a.field();
    let mut chosen: Vec<usize> = vec![];
    let mut span = ideal.clone();
    // prefer unit idempotents, then everything else, as representatives
    let order: Vec<usize> = a
        .unit_idempotents()
        .iter()
        .copied()
        .chain((0..n).filter(|i| !a.unit_idempotents().contains(i)))
        .collect();
    for i in order {
        if span.insert(a.basis_element(i).coeffs) {
            chosen.push(i);
        }
    }
    chosen.sort_unstable();
    let qdim = chosen.len();
    if qdim == 0 {
        return Ok((
            Algebra::new(field, vec![], vec![], vec![], None),
            vec![],
        ));
    }
    // full change-of-basis matrix [representatives | ideal basis]
    let mut columns: Vec<Vec<Scalar>> = chosen
        .iter()
        .map(|&i| a.basis_element(i).coeffs)
        .collect();
    for v in ideal.basis() {
        columns.push(v.clone());
    }
    let b = Mat::from_cols(field, &columns);
    let binv = b.inverse().map_err(|_| {
        Error::InternalInconsistency("complement plus ideal is not a basis".into())
    })?;
    let mut table = vec![vec![vec![]; qdim]; qdim];
    for (i2, &i) in chosen.iter().enumerate() {
        for (j2, &j) in chosen.iter().enumerate() {
            let prod = a.basis_product(i, j);
            let coords = binv.apply(&prod.coeffs);
            table[i2][j2] = coords[..qdim]
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, c.clone()))
                .collect();
        }
    }
    let labels: Vec<BasisLabel> = chosen.iter().map(|&i| a.label(i).clone()).collect();
    let units: Vec<usize> = chosen
        .iter()
        .enumerate()
        .filter(|(_, &i)| a.unit_idempotents().contains(&i))
        .map(|(k, _)| k)
        .collect();
    let grading = match (a.grading(), homogeneous_basis(a, ideal)) {
        (Some(g), Some(_)) => Some(chosen.iter().map(|&i| g[i]).collect()),
        _ => None,
    };
    Ok((
        Algebra::new(field, labels, table, units, grading),
        chosen,
    ))
}

/// A homogeneous basis of a subspace of a graded algebra, when the
/// subspace is graded.
pub fn homogeneous_basis(a: &Algebra, s: &Span) -> Option<Vec<Vec<Scalar>>> {
    let g = a.grading()?;
    let top = *g.iter().max()?;
    let mut parts: Vec<Vec<Scalar>> = vec![];
    let mut check = Span::new(a.field(), a.dim());
    for v in s.basis() {
        for d in 0..=top {
            let comp: Vec<Scalar> = v
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if g[i] == d {
                        c.clone()
                    } else {
                        Scalar::zero(a.field())
                    }
                })
                .collect();
            if comp.iter().any(|c| !c.is_zero()) && check.insert(comp.clone()) {
                parts.push(comp);
            }
        }
    }
    if check.dim() == s.dim() {
        Some(parts)
    } else {
        None
    }
}

pub enum SocleQuotient {
    Proper(Algebra),
    /// The socle is the whole algebra (semisimple input).
    Zero,
}

pub fn quotient_by_socle(a: &Algebra) -> Result<SocleQuotient> {
    let soc = socle(a)?;
    if soc.span.dim() == a.dim() {
        return Ok(SocleQuotient::Zero);
    }
    let (q, _) = quotient_by_subspace(a, &soc.span, "s")?;
    Ok(SocleQuotient::Proper(q))
}

/// Groups of unit idempotents linked through nonzero Peirce components.
pub fn connected_components(a: &Algebra) -> Vec<Vec<usize>> {
    let units = a.unit_idempotents();
    let r = units.len();
    let mut parent: Vec<usize> = (0..r).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for k in 0..a.dim() {
        let bk = a.basis_element(k);
        for (s, &es) in units.iter().enumerate() {
            let left = a.mul_unchecked(&a.basis_element(es), &bk);
            if left.is_zero() {
                continue;
            }
            for (t, &et) in units.iter().enumerate() {
                let piece = a.mul_unchecked(&left, &a.basis_element(et));
                if !piece.is_zero() {
                    let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
                    if rs != rt {
                        parent[rs] = rt;
                    }
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for s in 0..r {
        let root = find(&mut parent, s);
        groups.entry(root).or_default().push(s);
    }
    groups.into_values().collect()
}

pub fn is_connected(a: &Algebra) -> bool {
    connected_components(a).len() <= 1
}
