//! Algebra constructions: skew group algebras, smash products with the
//! dual of Z_2, the 2-quasi-Veronese, trivial and twisted trivial
//! extensions, the Beilinson upper-triangular algebra, and the smash-skew
//! double.

use crate::algebra::{sparse_from_dense, Algebra, AlgebraMorphism, Element, SparseVec};
use crate::error::{Error, Result};
use crate::frobenius::BilinearForm;
use crate::group::GroupAction;
use crate::idempotents::{basic_idempotent, truncate_by_orthogonal_idempotents};
use crate::linalg::Mat;
use crate::quiver::BasisLabel;
use crate::scalar::Scalar;

/// The skew group algebra on basis `b (x) g` with
/// `(b (x) g)(b' (x) h) = b g(b') (x) gh`. Basis index `g*dim + i`.
pub fn skew_group_algebra(a: &Algebra, action: &GroupAction) -> Result<Algebra> {
    action.verify(a)?;
    let n = a.dim();
    let ng = action.order();
    let dim = n * ng;
    let field = a.field();
    let mut basis = Vec::with_capacity(dim);
    for g in 0..ng {
        for i in 0..n {
            basis.push(BasisLabel::GroupTensor(Box::new(a.label(i).clone()), g));
        }
    }
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for g in 0..ng {
        for i in 0..n {
            let row = g * n + i;
            for h in 0..ng {
                let gh = action.table[g][h];
                for j in 0..n {
                    let gj = action.autos[g].apply(&a.basis_element(j));
                    let prod = a.mul_unchecked(&a.basis_element(i), &gj);
                    table[row][h * n + j] = prod
                        .coeffs
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (gh * n + k, c.clone()))
                        .collect();
                }
            }
        }
    }
    let units: Vec<usize> = a.unit_idempotents().to_vec();
    let grading = if action.is_graded(a) {
        a.grading().map(|g| {
            let mut out = Vec::with_capacity(dim);
            for _ in 0..ng {
                out.extend_from_slice(g);
            }
            out
        })
    } else {
        None
    };
    Ok(Algebra::new(field, basis, table, units, grading))
}

/// The form `<b (x) g, b' (x) h> = <b, g(b')> [gh = e]` on the skew group
/// algebra, verified associative and nondegenerate.
pub fn skew_group_form(
    a: &Algebra,
    form: &BilinearForm,
    action: &GroupAction,
    skew: &Algebra,
) -> Result<BilinearForm> {
    if !form.nondegenerate {
        return Err(Error::DegenerateInput);
    }
    let p = a.field().characteristic();
    if p != 0 && (action.order() as u64) % p == 0 {
        return Err(Error::CharDividesOrder(p));
    }
    let n = a.dim();
    let ng = action.order();
    let dim = n * ng;
    if skew.dim() != dim {
        return Err(Error::ShapeMismatch);
    }
    let mut gram = Mat::zero(a.field(), dim, dim);
    for g in 0..ng {
        let h = action.inverse_index(g);
        for i in 0..n {
            for j in 0..n {
                let gj = action.autos[g].apply(&a.basis_element(j));
                let v = form.evaluate(&a.basis_element(i), &gj);
                gram.set(g * n + i, h * n + j, v);
            }
        }
    }
    let nondegenerate = !gram.determinant().is_zero();
    let out = BilinearForm { gram, nondegenerate, functional: None };
    if !out.nondegenerate {
        return Err(Error::VerificationFailed(
            "skew group form is degenerate".into(),
        ));
    }
    if !out.is_associative(skew) {
        return Err(Error::VerificationFailed(
            "skew group form is not associative".into(),
        ));
    }
    Ok(out)
}

/// Index of `b p_g` in the smash product basis.
pub fn smash_index(dim: usize, p: usize, i: usize) -> usize {
    p * dim + i
}

/// The smash product of a graded algebra (top degree at most 2) with the
/// dual of Z_2, using the Z_2-grading that puts even degrees in 0 and odd
/// degrees in 1: `b p_g * b' p_h = b b'_{g-h} p_h`. Returns the algebra
/// together with the swap action `(b p_h)^g = b p_{h+g}`.
pub fn smash_z2(a: &Algebra) -> Result<(Algebra, GroupAction)> {
    let grading = a.grading().ok_or(Error::NotGraded)?.to_vec();
    let top = grading.iter().copied().max().unwrap_or(0);
    if top > 2 {
        return Err(Error::TopDegreeTooHigh(top));
    }
    let n = a.dim();
    let dim = 2 * n;
    let field = a.field();
    let mut basis = Vec::with_capacity(dim);
    for p in 0..2usize {
        for i in 0..n {
            basis.push(BasisLabel::SmashTensor(Box::new(a.label(i).clone()), p));
        }
    }
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for p in 0..2usize {
        for i in 0..n {
            for h in 0..2usize {
                for j in 0..n {
                    // b_j must be in Z_2-degree p - h
                    if grading[j] % 2 != (2 + p - h) % 2 {
                        continue;
                    }
                    table[p * n + i][h * n + j] = a
                        .table_entry(i, j)
                        .iter()
                        .map(|(k, c)| (h * n + k, c.clone()))
                        .collect();
                }
            }
        }
    }
    let units: Vec<usize> = (0..2)
        .flat_map(|p| a.unit_idempotents().iter().map(move |&u| p * n + u))
        .collect();
    let mut smash_grading = Vec::with_capacity(dim);
    for _ in 0..2 {
        smash_grading.extend_from_slice(&grading);
    }
    let smash = Algebra::new(field, basis, table, units, Some(smash_grading));
    // the induced Z_2 action swaps the two dual-basis columns
    let mut columns = vec![];
    for p in 0..2usize {
        for i in 0..n {
            let mut col = vec![Scalar::zero(field); dim];
            col[(1 - p) * n + i] = Scalar::one(field);
            columns.push(col);
        }
    }
    let swap = AlgebraMorphism { columns };
    let action = GroupAction {
        element_names: vec!["e".into(), "s".into()],
        table: vec![vec![0, 1], vec![1, 0]],
        autos: vec![AlgebraMorphism::identity(&smash), swap],
    };
    action
        .verify(&smash)
        .map_err(|e| Error::VerificationFailed(format!("induced swap action: {e}")))?;
    Ok((smash, action))
}

fn veronese_slot(degree: usize, r: usize, c: usize) -> Option<usize> {
    let num = degree as isize + r as isize - c as isize;
    if num < 0 || num % 2 != 0 {
        return None;
    }
    let m = (num / 2) as usize;
    if m <= 1 {
        Some(m)
    } else {
        None
    }
}

/// The 2-quasi-Veronese: block-matrix regrading collapsing degrees in
/// pairs, with basis labels `MatrixEntry(row, col, b)` and block degree
/// `(deg b + row - col) / 2`.
pub fn quasi_veronese2(a: &Algebra) -> Result<Algebra> {
    let grading = a.grading().ok_or(Error::NotGraded)?.to_vec();
    let top = grading.iter().copied().max().unwrap_or(0);
    if top > 2 {
        return Err(Error::TopDegreeTooHigh(top));
    }
    let n = a.dim();
    let field = a.field();
    let mut basis = vec![];
    let mut slots: Vec<(usize, usize, usize, usize)> = vec![]; // (r, c, i, m)
    for r in 0..2usize {
        for c in 0..2usize {
            for i in 0..n {
                if let Some(m) = veronese_slot(grading[i], r, c) {
                    basis.push(BasisLabel::MatrixEntry(r as u8, c as u8, Box::new(a.label(i).clone())));
                    slots.push((r, c, i, m));
                }
            }
        }
    }
    let dim = slots.len();
    let index_of = |r: usize, c: usize, i: usize| -> Option<usize> {
        slots.iter().position(|&(r2, c2, i2, _)| (r2, c2, i2) == (r, c, i))
    };
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for (row, &(r, c, i, _)) in slots.iter().enumerate() {
        for (col, &(r2, c2, j, _)) in slots.iter().enumerate() {
            if c != r2 {
                continue;
            }
            let mut entry = SparseVec::new();
            for (k, coeff) in a.table_entry(i, j) {
                match index_of(r, c2, *k) {
                    Some(target) => entry.push((target, coeff.clone())),
                    None => {
                        return Err(Error::InternalInconsistency(
                            "veronese product left the block pattern".into(),
                        ))
                    }
                }
            }
            table[row][col] = entry;
        }
    }
    let units: Vec<usize> = slots
        .iter()
        .enumerate()
        .filter(|(_, &(r, c, i, _))| r == c && a.unit_idempotents().contains(&i) )
        .map(|(row, _)| row)
        .collect();
    let vgrading: Vec<usize> = slots.iter().map(|&(_, _, _, m)| m).collect();
    Ok(Algebra::new(field, basis, table, units, Some(vgrading)))
}

pub struct VeroneseSmashIso {
    pub veronese: Algebra,
    pub smash: Algebra,
    /// Verified isomorphism from the quasi-Veronese to the smash product,
    /// sending the entry at column `c` to the `p_c` component.
    pub iso: AlgebraMorphism,
}

/// The canonical label bijection `MatrixEntry(r, c, b) -> b p_c`, verified
/// unital, multiplicative and invertible.
pub fn veronese_smash_iso(a: &Algebra) -> Result<VeroneseSmashIso> {
    let veronese = quasi_veronese2(a)?;
    let (smash, _) = smash_z2(a)?;
    let n = a.dim();
    let field = a.field();
    let mut columns = vec![];
    for label in veronese.basis() {
        let BasisLabel::MatrixEntry(_, c, inner) = label else {
            return Err(Error::InternalInconsistency("unexpected veronese label".into()));
        };
        let i = a
            .label_index(inner)
            .ok_or_else(|| Error::InternalInconsistency("unknown inner label".into()))?;
        let mut col = vec![Scalar::zero(field); smash.dim()];
        col[smash_index(n, *c as usize, i)] = Scalar::one(field);
        columns.push(col);
    }
    let iso = AlgebraMorphism { columns };
    iso.verify_morphism(&veronese, &smash)
        .map_err(|e| Error::VerificationFailed(format!("veronese-smash map: {e}")))?;
    if iso.matrix(field).determinant().is_zero() {
        return Err(Error::VerificationFailed(
            "veronese-smash map is not bijective".into(),
        ));
    }
    Ok(VeroneseSmashIso { veronese, smash, iso })
}

pub struct TrivialExtension {
    pub algebra: Algebra,
    pub form: BilinearForm,
    /// The Nakayama representative determined by the attached form: acts
    /// as `sigma^{-1}` on the algebra part and as `f -> f . sigma` on
    /// functionals (the identity for the untwisted extension).
    pub nakayama: AlgebraMorphism,
}

/// The trivial extension `A + D(A)` with `(a, f)(b, g) = (ab, ag + fb)`.
pub fn trivial_extension(a: &Algebra) -> Result<TrivialExtension> {
    twisted_trivial_extension(a, &AlgebraMorphism::identity(a))
}

/// The twisted trivial extension: the right action of `A` on `D(A)` is
/// twisted through `sigma`, i.e. `(f . b)(x) = f(sigma(b) x)`; the left
/// action is `(a . f)(x) = f(x a)`.
pub fn twisted_trivial_extension(a: &Algebra, sigma: &AlgebraMorphism) -> Result<TrivialExtension> {
    sigma.verify_automorphism(a)?;
    let n = a.dim();
    let dim = 2 * n;
    let field = a.field();
    let mut basis: Vec<BasisLabel> = a.basis().to_vec();
    for l in a.basis() {
        basis.push(BasisLabel::DualFunctional(Box::new(l.clone())));
    }
    // iterated extensions already carry dual labels; fall back to indexed
    // names when wrapping would collide
    {
        let mut seen = std::collections::HashSet::new();
        if !basis.iter().all(|l| seen.insert(l.clone())) {
            basis.truncate(n);
            for i in 0..n {
                basis.push(BasisLabel::Indexed("d".into(), i));
            }
        }
    }
    let smat = sigma.matrix(field);
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for i in 0..n {
        for j in 0..n {
            // algebra part
            table[i][j] = a.table_entry(i, j).clone();
            // left action: b_i . f_j = sum_k c[k][i][j] f_k
            let mut left = SparseVec::new();
            for k in 0..n {
                for (m, c) in a.table_entry(k, i) {
                    if *m == j {
                        left.push((n + k, c.clone()));
                    }
                }
            }
            table[i][n + j] = left;
            // right action twisted by sigma: f_j . b_i = sum_k (sum_m S[m][i] c[m][k][j]) f_k
            let mut right = SparseVec::new();
            for k in 0..n {
                let mut v = Scalar::zero(field);
                for m in 0..n {
                    let s = smat.get(m, i);
                    if s.is_zero() {
                        continue;
                    }
                    for (t, c) in a.table_entry(m, k) {
                        if *t == j {
                            v = v.add(&s.mul(c));
                        }
                    }
                }
                if !v.is_zero() {
                    right.push((n + k, v));
                }
            }
            table[n + j][i] = right;
        }
    }
    let units: Vec<usize> = a.unit_idempotents().to_vec();
    let sigma_graded = a.grading().is_some_and(|g| {
        (0..n).all(|i| {
            sigma
                .apply(&a.basis_element(i))
                .coeffs
                .iter()
                .enumerate()
                .all(|(k, c)| c.is_zero() || g[k] == g[i])
        })
    });
    let grading = if sigma_graded {
        a.grading().map(|g| {
            let top = g.iter().copied().max().unwrap_or(0);
            let mut out = g.to_vec();
            out.extend(g.iter().map(|&d| top + 1 - d));
            out
        })
    } else {
        None
    };
    let algebra = Algebra::new(field, basis, table, units, grading);
    // form: <b_i, f_j> = delta, <f_j, b_i> = coeff_j(sigma(b_i))
    let mut gram = Mat::zero(field, dim, dim);
    for i in 0..n {
        gram.set(i, n + i, Scalar::one(field));
        for j in 0..n {
            gram.set(n + j, i, smat.get(j, i).clone());
        }
    }
    let form = BilinearForm {
        nondegenerate: !gram.determinant().is_zero(),
        gram,
        functional: None,
    };
    if !form.nondegenerate {
        return Err(Error::VerificationFailed(
            "trivial extension form is degenerate".into(),
        ));
    }
    if !form.is_associative(&algebra) {
        return Err(Error::VerificationFailed(
            "trivial extension form is not associative".into(),
        ));
    }
    // Nakayama representative: sigma^{-1} on A, f -> f . sigma on D(A)
    let sigma_inv = sigma.inverse(field)?;
    let mut columns = vec![];
    for i in 0..n {
        let mut col = vec![Scalar::zero(field); dim];
        for (k, c) in sigma_inv.columns[i].iter().enumerate() {
            col[k] = c.clone();
        }
        columns.push(col);
    }
    for j in 0..n {
        let mut col = vec![Scalar::zero(field); dim];
        for k in 0..n {
            // f_j . sigma = sum_k S[k][j]... coefficient of f_k is S[k -> j]
            col[n + k] = smat.get(k, j).clone();
        }
        columns.push(col);
    }
    let nakayama = AlgebraMorphism { columns };
    nakayama
        .verify_automorphism(&algebra)
        .map_err(|e| Error::VerificationFailed(format!("twisted extension Nakayama: {e}")))?;
    // gram relation <u, v> = <v, nu(u)> on all basis pairs
    for i in 0..dim {
        let nui = nakayama.apply(&algebra.basis_element(i));
        for j in 0..dim {
            let lhs = form.evaluate(&algebra.basis_element(i), &algebra.basis_element(j));
            let rhs = form.evaluate(&algebra.basis_element(j), &nui);
            if lhs != rhs {
                return Err(Error::VerificationFailed(
                    "twisted extension Nakayama fails the gram relation".into(),
                ));
            }
        }
    }
    Ok(TrivialExtension { algebra, form, nakayama })
}

/// The Beilinson algebra `[[A_0, A_1], [0, A_0]]` of a graded algebra.
pub fn beilinson(a: &Algebra) -> Result<Algebra> {
    let grading = a.grading().ok_or(Error::NotGraded)?.to_vec();
    let top = grading.iter().copied().max().unwrap_or(0);
    if top > 2 {
        return Err(Error::TopDegreeTooHigh(top));
    }
    let n = a.dim();
    let field = a.field();
    let mut slots: Vec<(usize, usize, usize)> = vec![];
    let mut basis = vec![];
    for r in 0..2usize {
        for c in 0..2usize {
            for i in 0..n {
                let ok = (r == c && grading[i] == 0) || (r == 0 && c == 1 && grading[i] == 1);
                if ok {
                    slots.push((r, c, i));
                    basis.push(BasisLabel::MatrixEntry(
                        r as u8,
                        c as u8,
                        Box::new(a.label(i).clone()),
                    ));
                }
            }
        }
    }
    let dim = slots.len();
    let index_of = |r: usize, c: usize, i: usize| {
        slots.iter().position(|&(r2, c2, i2)| (r2, c2, i2) == (r, c, i))
    };
    let mut table = vec![vec![SparseVec::new(); dim]; dim];
    for (row, &(r, c, i)) in slots.iter().enumerate() {
        for (col, &(r2, c2, j)) in slots.iter().enumerate() {
            if c != r2 {
                continue;
            }
            let mut entry = SparseVec::new();
            for (k, coeff) in a.table_entry(i, j) {
                if let Some(target) = index_of(r, c2, *k) {
                    entry.push((target, coeff.clone()));
                }
                // products of two degree-one entries would land in degree 2,
                // outside the triangular pattern; the index condition c != r2
                // already rules them out
            }
            table[row][col] = entry;
        }
    }
    let units = slots
        .iter()
        .enumerate()
        .filter(|(_, &(r, c, i))| r == c && a.unit_idempotents().contains(&i))
        .map(|(row, _)| row)
        .collect();
    let bgrading = slots.iter().map(|&(r, c, _)| c - r).collect();
    Ok(Algebra::new(field, basis, table, units, Some(bgrading)))
}

pub struct DoubleConstruction {
    pub double: Algebra,
    pub smash: Algebra,
}

/// The skew group algebra of the smash product by the induced swap action.
pub fn double_construction(a: &Algebra) -> Result<DoubleConstruction> {
    if a.field().characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    let (smash, action) = smash_z2(a)?;
    let double = skew_group_algebra(&smash, &action)?;
    Ok(DoubleConstruction { double, smash })
}

pub struct CheckedDouble {
    pub double: Algebra,
    pub basic: Algebra,
}

/// The double together with its basic version, verified to have the same
/// Gabriel quiver and dimension as the input.
pub fn double_construction_checked(a: &Algebra, seed: u64) -> Result<CheckedDouble> {
    let DoubleConstruction { double, .. } = double_construction(a)?;
    let bi = basic_idempotent(&double, seed)?;
    let basic = truncate_by_orthogonal_idempotents(&double, &bi.parts)?;
    let qa = crate::idempotents::quiver_of(a)?.quiver;
    let qb = crate::idempotents::quiver_of(&basic)?.quiver;
    if !qa.is_isomorphic_to(&qb) {
        return Err(Error::InternalInconsistency(
            "basic double has a different quiver".into(),
        ));
    }
    if basic.dim() != a.dim() {
        return Err(Error::InternalInconsistency(
            "basic double has a different dimension".into(),
        ));
    }
    Ok(CheckedDouble { double, basic })
}

/// The skew group algebra taken over the cyclic group generated by a
/// finite-order Nakayama automorphism, with the symmetry certificate: its
/// Nakayama automorphism agrees with the displayed formula and is inner
/// with witness `1 (x) nu`.
pub struct SkewSymmetryReport {
    pub group_order: usize,
    pub skew: Algebra,
    pub form: BilinearForm,
    pub nakayama: AlgebraMorphism,
    pub witness: Element,
}

pub fn skew_group_symmetric_check(
    a: &Algebra,
    form: &BilinearForm,
    nu: &AlgebraMorphism,
    bound: usize,
) -> Result<SkewSymmetryReport> {
    let order = nu.order(a, bound).ok_or(Error::InfiniteOrder)?;
    let p = a.field().characteristic();
    if p != 0 && (order as u64) % p == 0 {
        return Err(Error::CharDividesOrder(p));
    }
    let action = GroupAction::cyclic(a, nu, order)?;
    let skew = skew_group_algebra(a, &action)?;
    let skew_form = skew_group_form(a, form, &action, &skew)?;
    let nakayama = crate::frobenius::nakayama_from_form(&skew, &skew_form)?;
    // expected: b (x) nu^i -> nu(b) (x) nu^i
    let n = a.dim();
    let mut expected_columns = vec![];
    for g in 0..order {
        for i in 0..n {
            let img = nu.apply(&a.basis_element(i));
            let mut col = vec![Scalar::zero(a.field()); skew.dim()];
            for (k, c) in img.coeffs.iter().enumerate() {
                col[g * n + k] = c.clone();
            }
            expected_columns.push(col);
        }
    }
    // column order of the skew basis is g*n + i
    let mut reordered = vec![vec![]; skew.dim()];
    for g in 0..order {
        for i in 0..n {
            reordered[g * n + i] = expected_columns[g * n + i].clone();
        }
    }
    let expected = AlgebraMorphism { columns: reordered };
    if nakayama != expected {
        return Err(Error::InternalInconsistency(
            "skew Nakayama does not match the tensor formula".into(),
        ));
    }
    // witness 1 (x) nu conjugates to the Nakayama automorphism
    let mut witness = skew.zero_element();
    let nu_block = if order == 1 { 0 } else { 1 };
    for &u in a.unit_idempotents() {
        witness.coeffs[nu_block * n + u] = Scalar::one(a.field());
    }
    let winv = skew.invert_element(&witness)?;
    for i in 0..skew.dim() {
        let conj = skew.mul_unchecked(&skew.mul_unchecked(&witness, &skew.basis_element(i)), &winv);
        if conj != nakayama.apply(&skew.basis_element(i)) {
            return Err(Error::VerificationFailed(
                "1 (x) nu does not witness the skew Nakayama automorphism".into(),
            ));
        }
    }
    Ok(SkewSymmetryReport { group_order: order, skew, form: skew_form, nakayama, witness })
}

/// Restriction of a morphism to a subset of basis indices that it
/// stabilizes, as a morphism of the subalgebra spanned by them.
pub fn restrict_morphism(
    a: &Algebra,
    indices: &[usize],
    phi: &AlgebraMorphism,
) -> Result<AlgebraMorphism> {
    let mut columns = vec![];
    for &i in indices {
        let img = phi.apply(&a.basis_element(i));
        let mut col = vec![Scalar::zero(a.field()); indices.len()];
        for (k, c) in img.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match indices.iter().position(|&m| m == k) {
                Some(pos) => col[pos] = c.clone(),
                None => return Err(Error::ShapeMismatch),
            }
        }
        columns.push(col);
    }
    Ok(AlgebraMorphism { columns })
}

pub fn sparse_of(e: &Element) -> SparseVec {
    sparse_from_dense(&e.coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build::{build_algebra, Presentation, Relation};
    use crate::frobenius::{nakayama_from_form, trace_form};
    use crate::quiver::{Arrow, Quiver};
    use crate::scalar::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_integer(k, q())
    }

    fn point() -> Algebra {
        build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(vec!["v".into()], vec![]).unwrap(),
            relations: vec![],
            truncate_radical: 2,
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

    fn lambda_q(qval: i64) -> Algebra {
        build_algebra(&Presentation {
            field: q(),
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

    fn kronecker() -> Algebra {
        build_algebra(&Presentation {
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
        .unwrap()
    }

    #[test]
    fn skew_of_point_by_z2_is_group_algebra() {
        let a = point();
        let action = GroupAction::cyclic(&a, &AlgebraMorphism::identity(&a), 2).unwrap();
        let skew = skew_group_algebra(&a, &action).unwrap();
        assert_eq!(skew.dim(), 2);
        assert!(skew.check().is_empty());
        // g * g = e
        let g = skew.basis_element(1);
        assert_eq!(skew.mul_unchecked(&g, &g), skew.basis_element(0));
    }

    #[test]
    fn skew_of_kx3_by_sign_action() {
        let a = kx3();
        let sign = AlgebraMorphism {
            columns: vec![
                vec![s(1), s(0), s(0)],
                vec![s(0), s(-1), s(0)],
                vec![s(0), s(0), s(1)],
            ],
        };
        let action = GroupAction::cyclic(&a, &sign, 2).unwrap();
        let skew = skew_group_algebra(&a, &action).unwrap();
        assert_eq!(skew.dim(), 6);
        assert!(skew.check().is_empty());
        // (1 +/- g)/2 are idempotents
        let mut e = skew.zero_element();
        e.coeffs[0] = Scalar::from_rational(1.into(), 2.into(), q()).unwrap();
        e.coeffs[3] = Scalar::from_rational(1.into(), 2.into(), q()).unwrap();
        assert!(skew.is_idempotent(&e));
    }

    #[test]
    fn group_algebra_form_matches_displayed_formula() {
        let a = point();
        let action = GroupAction::cyclic(&a, &AlgebraMorphism::identity(&a), 2).unwrap();
        let skew = skew_group_algebra(&a, &action).unwrap();
        let base_form = trace_form(&a).unwrap();
        let f = skew_group_form(&a, &base_form, &action, &skew).unwrap();
        // <g, h> = 1 iff gh = e
        assert_eq!(*f.gram.get(0, 0), s(1));
        assert_eq!(*f.gram.get(1, 1), s(1));
        assert_eq!(*f.gram.get(0, 1), s(0));
        assert_eq!(*f.gram.get(1, 0), s(0));
    }

    #[test]
    fn degenerate_input_rejected() {
        let a = kx3();
        let action = GroupAction::cyclic(&a, &AlgebraMorphism::identity(&a), 1).unwrap();
        let skew = skew_group_algebra(&a, &action).unwrap();
        let mut degenerate = trace_form(&a).unwrap();
        degenerate.nondegenerate = false;
        assert!(matches!(
            skew_group_form(&a, &degenerate, &action, &skew),
            Err(Error::DegenerateInput)
        ));
    }

    #[test]
    fn smash_products() {
        let a = point();
        let (sm, _) = smash_z2(&a).unwrap();
        assert_eq!(sm.dim(), 2);
        assert!(sm.check().is_empty());
        // two orthogonal idempotents: k x k
        assert_eq!(sm.unit_idempotents().len(), 2);

        let b = kx3();
        let (smb, actb) = smash_z2(&b).unwrap();
        assert_eq!(smb.dim(), 6);
        assert!(smb.check().is_empty());
        assert_eq!(smb.unit_idempotents().len(), 2);
        actb.verify(&smb).unwrap();

        let c = lambda_q(2);
        let (smc, _) = smash_z2(&c).unwrap();
        assert_eq!(smc.dim(), 8);
        assert!(smc.check().is_empty());
    }

    #[test]
    fn veronese_dimensions_and_iso() {
        for alg in [point(), kx3(), lambda_q(1), lambda_q(2)] {
            let v = quasi_veronese2(&alg).unwrap();
            assert_eq!(v.dim(), 2 * alg.dim());
            assert!(v.check().is_empty());
            let iso = veronese_smash_iso(&alg).unwrap();
            assert_eq!(iso.veronese.dim(), iso.smash.dim());
        }
    }

    #[test]
    fn trivial_extension_of_point() {
        let a = point();
        let ext = trivial_extension(&a).unwrap();
        assert_eq!(ext.algebra.dim(), 2);
        assert!(ext.algebra.check().is_empty());
        // t^2 = 0 for the dual generator
        let t = ext.algebra.basis_element(1);
        assert!(ext.algebra.mul_unchecked(&t, &t).is_zero());
        assert!(ext.nakayama.is_identity(&ext.algebra));
    }

    #[test]
    fn trivial_extension_of_path_algebra() {
        // A = kA2 (dim 3): the extension has dimension 6 and cube-zero radical
        let a = build_algebra(&Presentation {
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
        let ext = trivial_extension(&a).unwrap();
        assert_eq!(ext.algebra.dim(), 6);
        assert!(ext.algebra.check().is_empty());
        let layers = crate::radical::radical_layers(&ext.algebra).unwrap();
        assert_eq!(layers.len(), 3); // A, rad, rad^2 with rad^3 = 0
    }

    #[test]
    fn trivial_extension_of_kronecker() {
        let a = kronecker();
        let ext = trivial_extension(&a).unwrap();
        assert_eq!(ext.algebra.dim(), 8);
        assert!(ext.algebra.check().is_empty());
        let g = crate::idempotents::quiver_of(&ext.algebra).unwrap();
        assert_eq!(g.quiver.vertices.len(), 2);
        assert_eq!(g.quiver.arrows.len(), 4);
        // two arrows each way
        let m = g.quiver.arrow_count_matrix();
        assert_eq!(m[0][1], 2);
        assert_eq!(m[1][0], 2);
        let nu = nakayama_from_form(&ext.algebra, &ext.form).unwrap();
        assert!(nu.is_identity(&ext.algebra));
    }

    #[test]
    fn twisted_extension_by_factor_swap() {
        // A = k x k, sigma = swap: nu permutes the two vertices
        let a = build_algebra(&Presentation {
            field: q(),
            quiver: Quiver::new(vec!["1".into(), "2".into()], vec![]).unwrap(),
            relations: vec![],
            truncate_radical: 2,
        })
        .unwrap();
        let swap = AlgebraMorphism {
            columns: vec![vec![s(0), s(1)], vec![s(1), s(0)]],
        };
        let ext = twisted_trivial_extension(&a, &swap).unwrap();
        assert_eq!(ext.algebra.dim(), 4);
        assert!(ext.algebra.check().is_empty());
        let nu = nakayama_from_form(&ext.algebra, &ext.form).unwrap();
        assert_eq!(nu, ext.nakayama);
        let perm = crate::idempotents::vertex_permutation(&ext.algebra, &nu).unwrap();
        assert_eq!(perm, vec![1, 0]);
        assert!(!crate::frobenius::is_weakly_symmetric(&ext.algebra, &nu).unwrap());
    }

    #[test]
    fn twisted_extension_with_identity_is_trivial_extension() {
        let a = kronecker();
        let id = AlgebraMorphism::identity(&a);
        let t1 = trivial_extension(&a).unwrap();
        let t2 = twisted_trivial_extension(&a, &id).unwrap();
        assert_eq!(t1.algebra, t2.algebra);
    }

    #[test]
    fn beilinson_algebras() {
        let a = kx3();
        let b = beilinson(&a).unwrap();
        assert_eq!(b.dim(), 3);
        assert!(b.check().is_empty());
        let g = crate::idempotents::quiver_of(&b).unwrap();
        assert_eq!(g.quiver.vertices.len(), 2);
        assert_eq!(g.quiver.arrows.len(), 1);
        let layers = crate::radical::radical_layers(&b).unwrap();
        assert_eq!(layers.len(), 2); // rad^2 = 0

        let c = lambda_q(2);
        let bc = beilinson(&c).unwrap();
        assert_eq!(bc.dim(), 4);
        let gc = crate::idempotents::quiver_of(&bc).unwrap();
        assert!(gc.quiver.is_isomorphic_to(&kronecker_quiver()));
    }

    fn kronecker_quiver() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![
                Arrow { name: "a".into(), source: "1".into(), target: "2".into() },
                Arrow { name: "b".into(), source: "1".into(), target: "2".into() },
            ],
        )
        .unwrap()
    }

    #[test]
    fn double_construction_dimensions() {
        let a = kx3();
        let d = double_construction(&a).unwrap();
        assert_eq!(d.double.dim(), 12);
        assert!(d.double.check().is_empty());
        let point_double = double_construction(&point()).unwrap();
        assert_eq!(point_double.double.dim(), 4);
    }

    #[test]
    fn double_is_morita_trivial_at_quiver_level() {
        let a = kx3();
        let checked = double_construction_checked(&a, 7).unwrap();
        assert_eq!(checked.basic.dim(), 3);
        let qa = crate::idempotents::quiver_of(&a).unwrap().quiver;
        let qb = crate::idempotents::quiver_of(&checked.basic).unwrap().quiver;
        assert!(qa.is_isomorphic_to(&qb));
    }

    #[test]
    fn skew_symmetry_certificate() {
        let a = lambda_q(1);
        let form = trace_form(&a).unwrap();
        let nu = nakayama_from_form(&a, &form).unwrap();
        let report = skew_group_symmetric_check(&a, &form, &nu, 64).unwrap();
        assert_eq!(report.group_order, 2);
        assert_eq!(report.skew.dim(), 8);
        assert!(report.form.nondegenerate);
        // kx3 has identity Nakayama: trivial group, trivially symmetric
        let b = kx3();
        let fb = trace_form(&b).unwrap();
        let nub = nakayama_from_form(&b, &fb).unwrap();
        let rb = skew_group_symmetric_check(&b, &fb, &nub, 8).unwrap();
        assert_eq!(rb.group_order, 1);
        // infinite order is rejected
        let c = lambda_q(2);
        let fc = trace_form(&c).unwrap();
        let nuc = nakayama_from_form(&c, &fc).unwrap();
        assert!(matches!(
            skew_group_symmetric_check(&c, &fc, &nuc, 16),
            Err(Error::InfiniteOrder)
        ));
    }
}
