//! Finite dimensional associative algebras given by exact structure
//! constants on a labeled basis, plus elements and algebra morphisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Mat, Span};
use crate::quiver::BasisLabel;
use crate::scalar::{FieldDescriptor, Scalar};

/// Sparse vector in basis coordinates: sorted `(index, coefficient)` pairs
/// with nonzero coefficients.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, dim: usize, field: FieldDescriptor) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); dim];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// A basis-indexed structure-constant table with a chosen orthogonal
/// decomposition of the unit and an optional N-grading.
///
/// Immutable after construction; all operations are pure.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    field: FieldDescriptor,
    basis: Vec<BasisLabel>,
    /// `table[i][j]` holds the coordinates of `b_i * b_j`.
    table: Vec<Vec<SparseVec>>,
    unit_idempotents: Vec<usize>,
    grading: Option<Vec<usize>>,
}

/// An element in basis coordinates of one algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub coeffs: Vec<Scalar>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl Algebra {
    pub fn new(
        field: FieldDescriptor,
        basis: Vec<BasisLabel>,
        table: Vec<Vec<SparseVec>>,
        unit_idempotents: Vec<usize>,
        grading: Option<Vec<usize>>,
    ) -> Self {
        let dim = basis.len();
        assert_eq!(table.len(), dim);
        assert!(table.iter().all(|row| row.len() == dim));
        if let Some(g) = &grading {
            assert_eq!(g.len(), dim);
        }
        let mut labels = std::collections::HashSet::new();
        for l in &basis {
            assert!(labels.insert(l.clone()), "duplicate basis label {l}");
        }
        Algebra { field, basis, table, unit_idempotents, grading }
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.basis[i]
    }

    pub fn label_index(&self, l: &BasisLabel) -> Option<usize> {
        self.basis.iter().position(|x| x == l)
    }

    pub fn unit_idempotents(&self) -> &[usize] {
        &self.unit_idempotents
    }

    pub fn grading(&self) -> Option<&[usize]> {
        self.grading.as_deref()
    }

    pub fn degree(&self, i: usize) -> Option<usize> {
        self.grading.as_ref().map(|g| g[i])
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.grading.as_ref().map(|g| g.iter().copied().max().unwrap_or(0))
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i][j]
    }

    pub fn zero_element(&self) -> Element {
        Element { coeffs: vec![Scalar::zero(self.field); self.dim()] }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut e = self.zero_element();
        e.coeffs[i] = Scalar::one(self.field);
        e
    }

    pub fn unit(&self) -> Element {
        let mut u = self.zero_element();
        for &i in &self.unit_idempotents {
            u.coeffs[i] = Scalar::one(self.field);
        }
        u
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        Element {
            coeffs: x
                .coeffs
                .iter()
                .zip(&y.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar, x: &Element) -> Element {
        Element { coeffs: x.coeffs.iter().map(|a| c.mul(a)).collect() }
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        if x.coeffs.len() != self.dim() || y.coeffs.len() != self.dim() {
            return Err(Error::ShapeMismatch);
        }
        for c in x.coeffs.iter().chain(&y.coeffs) {
            if c.field() != self.field {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    pub fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.zero_element();
        for (i, a) in x.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.mul(b);
                for (k, c) in &self.table[i][j] {
                    out.coeffs[*k] = out.coeffs[*k].add(&ab.mul(c));
                }
            }
        }
        out
    }

    /// Product of two basis vectors as a dense element.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        Element {
            coeffs: dense_from_sparse(&self.table[i][j], self.dim(), self.field),
        }
    }

    /// Matrix of left multiplication by `x` on the regular module.
    pub fn left_mult_matrix(&self, x: &Element) -> Mat {
        let mut m = Mat::zero(self.field, self.dim(), self.dim());
        for j in 0..self.dim() {
            for (i, a) in x.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, c) in &self.table[i][j] {
                    let v = m.get(*k, j).add(&a.mul(c));
                    m.set(*k, j, v);
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `x`.
    pub fn right_mult_matrix(&self, x: &Element) -> Mat {
        let mut m = Mat::zero(self.field, self.dim(), self.dim());
        for i in 0..self.dim() {
            for (j, a) in x.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (k, c) in &self.table[i][j] {
                    let v = m.get(*k, i).add(&a.mul(c));
                    m.set(*k, i, v);
                }
            }
        }
        m
    }

    /// Trace of left multiplication by basis vector `i`.
    pub fn left_trace_of_basis(&self, i: usize) -> Scalar {
        let mut t = Scalar::zero(self.field);
        for j in 0..self.dim() {
            for (k, c) in &self.table[i][j] {
                if *k == j {
                    t = t.add(c);
                }
            }
        }
        t
    }

    pub fn is_idempotent(&self, x: &Element) -> bool {
        self.mul_unchecked(x, x) == *x
    }

    /// Multiplicative inverse of `x`, when it exists.
    pub fn invert_element(&self, x: &Element) -> Result<Element> {
        let l = self.left_mult_matrix(x);
        let u = self.unit();
        match l.solve(&u.coeffs) {
            Some(inv) => {
                let inv = Element { coeffs: inv };
                // left inverse equals right inverse in finite dimension,
                // verified anyway
                if self.mul_unchecked(x, &inv) != u || self.mul_unchecked(&inv, x) != u {
                    return Err(Error::NotInvertible);
                }
                Ok(inv)
            }
            None => Err(Error::NotInvertible),
        }
    }

    pub fn is_invertible(&self, x: &Element) -> bool {
        !self.left_mult_matrix(x).determinant().is_zero()
    }

    /// Rebuild the table on a new basis given by columns over the old one.
    pub fn change_basis(&self, columns: &[Vec<Scalar>], labels: Vec<BasisLabel>) -> Result<Algebra> {
        let n = columns.len();
        assert_eq!(labels.len(), n);
        assert_eq!(n, self.dim(), "change of basis must preserve dimension");
        let b = Mat::from_cols(self.field, columns);
        let binv = b.inverse()?;
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for i in 0..n {
            let xi = Element { coeffs: columns[i].clone() };
            for j in 0..n {
                let xj = Element { coeffs: columns[j].clone() };
                let prod = self.mul_unchecked(&xi, &xj);
                let coords = binv.apply(&prod.coeffs);
                table[i][j] = sparse_from_dense(&coords);
            }
        }
        // unit idempotents carry over only when each old unit idempotent is
        // one of the new basis vectors
        let mut units = vec![];
        for &u in &self.unit_idempotents {
            let target = self.basis_element(u);
            match columns.iter().position(|c| *c == target.coeffs) {
                Some(k) => units.push(k),
                None => return Err(Error::InternalInconsistency(
                    "change_basis dropped a unit idempotent".into(),
                )),
            }
        }
        Ok(Algebra::new(self.field, labels, table, units, None))
    }

    /// Replace the grading; callers guarantee compatibility (checked by
    /// [`Algebra::check`]).
    pub fn with_grading(mut self, grading: Option<Vec<usize>>) -> Algebra {
        if let Some(g) = &grading {
            assert_eq!(g.len(), self.dim());
        }
        self.grading = grading;
        self
    }

    /// Express an element as a readable linear combination of basis labels.
    pub fn format_element(&self, x: &Element) -> String {
        let mut parts = vec![];
        for (i, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_one() {
                parts.push(format!("{}", self.basis[i]));
            } else {
                parts.push(format!("({})*{}", c, self.basis[i]));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Verify the algebra axioms on the whole table. Violations are data,
    /// not errors; an empty report is a pass.
    pub fn check(&self) -> Vec<Violation> {
        let mut violations = vec![];
        let n = self.dim();
        // associativity on all basis triples
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    let left = self.mul_unchecked(&ij, &self.basis_element(k));
                    let right = self.mul_unchecked(&self.basis_element(i), &jk);
                    if left != right {
                        violations.push(Violation {
                            kind: ViolationKind::Associativity,
                            detail: format!(
                                "(b{i} b{j}) b{k} != b{i} (b{j} b{k})"
                            ),
                        });
                    }
                }
            }
        }
        // unit laws
        let u = self.unit();
        for i in 0..n {
            let bi = self.basis_element(i);
            if self.mul_unchecked(&u, &bi) != bi || self.mul_unchecked(&bi, &u) != bi {
                violations.push(Violation {
                    kind: ViolationKind::Unit,
                    detail: format!("unit law fails on b{i}"),
                });
            }
        }
        // idempotent orthogonality
        for (s, &es) in self.unit_idempotents.iter().enumerate() {
            for (t, &et) in self.unit_idempotents.iter().enumerate() {
                let prod = self.basis_product(es, et);
                let expected = if s == t {
                    self.basis_element(es)
                } else {
                    self.zero_element()
                };
                if prod != expected {
                    violations.push(Violation {
                        kind: ViolationKind::Idempotents,
                        detail: format!("e{s} e{t} is not {}", if s == t { "e" } else { "0" }),
                    });
                }
            }
        }
        // grading compatibility
        if let Some(g) = &self.grading {
            for i in 0..n {
                for j in 0..n {
                    for (k, c) in &self.table[i][j] {
                        if !c.is_zero() && g[*k] != g[i] + g[j] {
                            violations.push(Violation {
                                kind: ViolationKind::Grading,
                                detail: format!(
                                    "deg(b{i} b{j}) component b{k} has degree {} != {} + {}",
                                    g[*k], g[i], g[j]
                                ),
                            });
                        }
                    }
                }
            }
            for &e in &self.unit_idempotents {
                if g[e] != 0 {
                    violations.push(Violation {
                        kind: ViolationKind::Grading,
                        detail: format!("unit idempotent b{e} has nonzero degree"),
                    });
                }
            }
        }
        violations
    }

    /// Span of a list of elements as a subspace.
    pub fn span_of(&self, elements: &[Element]) -> Span {
        let mut s = Span::new(self.field, self.dim());
        for e in elements {
            s.insert(e.coeffs.clone());
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    Associativity,
    Unit,
    Idempotents,
    Grading,
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

/// A linear map between algebras, stored as one target-coordinate column
/// per source basis vector. Validity (unital, multiplicative) is checked
/// against explicitly supplied source and target algebras.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMorphism {
    pub columns: Vec<Vec<Scalar>>,
}

impl AlgebraMorphism {
    pub fn identity(a: &Algebra) -> Self {
        let n = a.dim();
        let mut columns = vec![vec![Scalar::zero(a.field()); n]; n];
        for (i, col) in columns.iter_mut().enumerate() {
            col[i] = Scalar::one(a.field());
        }
        AlgebraMorphism { columns }
    }

    pub fn source_dim(&self) -> usize {
        self.columns.len()
    }

    pub fn target_dim(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len())
    }

    pub fn apply(&self, x: &Element) -> Element {
        assert_eq!(x.coeffs.len(), self.source_dim());
        let field = self.columns[0][0].field();
        let mut out = vec![Scalar::zero(field); self.target_dim()];
        for (j, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, v) in self.columns[j].iter().enumerate() {
                if !v.is_zero() {
                    out[i] = out[i].add(&c.mul(v));
                }
            }
        }
        Element { coeffs: out }
    }

    /// `self` after `inner` (i.e. `self . inner`).
    pub fn compose(&self, inner: &AlgebraMorphism) -> AlgebraMorphism {
        let columns = inner
            .columns
            .iter()
            .map(|col| self.apply(&Element { coeffs: col.clone() }).coeffs)
            .collect();
        AlgebraMorphism { columns }
    }

    pub fn matrix(&self, field: FieldDescriptor) -> Mat {
        Mat::from_cols(field, &self.columns)
    }

    pub fn inverse(&self, field: FieldDescriptor) -> Result<AlgebraMorphism> {
        let m = self.matrix(field).inverse().map_err(|_| Error::NotInvertible)?;
        let columns = (0..m.cols).map(|j| m.col(j)).collect();
        Ok(AlgebraMorphism { columns })
    }

    pub fn pow(&self, n: usize, a: &Algebra) -> AlgebraMorphism {
        let mut acc = AlgebraMorphism::identity(a);
        for _ in 0..n {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self, a: &Algebra) -> bool {
        *self == AlgebraMorphism::identity(a)
    }

    /// Check the morphism laws: maps 1 to 1 and respects products on all
    /// basis pairs.
    pub fn verify_morphism(&self, src: &Algebra, tgt: &Algebra) -> Result<()> {
        if self.source_dim() != src.dim() || self.target_dim() != tgt.dim() {
            return Err(Error::ShapeMismatch);
        }
        if src.field() != tgt.field() {
            return Err(Error::FieldMismatch);
        }
        if self.apply(&src.unit()) != tgt.unit() {
            return Err(Error::NotMultiplicative("does not preserve the unit".into()));
        }
        for i in 0..src.dim() {
            let fi = self.apply(&src.basis_element(i));
            for j in 0..src.dim() {
                let fj = self.apply(&src.basis_element(j));
                let lhs = self.apply(&src.basis_product(i, j));
                let rhs = tgt.mul_unchecked(&fi, &fj);
                if lhs != rhs {
                    return Err(Error::NotMultiplicative(format!(
                        "fails on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn verify_automorphism(&self, a: &Algebra) -> Result<()> {
        self.verify_morphism(a, a)
            .map_err(|e| Error::NotAutomorphism(e.to_string()))?;
        if self.matrix(a.field()).determinant().is_zero() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        Ok(())
    }

    /// Least `n <= bound` with `self^n = id`.
    pub fn order(&self, a: &Algebra, bound: usize) -> Option<usize> {
        let id = AlgebraMorphism::identity(a);
        let mut acc = self.clone();
        for n in 1..=bound {
            if acc == id {
                return Some(n);
            }
            acc = self.compose(&acc);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::FieldDescriptor;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_integer(k, q())
    }

    /// k[x]/(x^3) by hand: basis e, x, x^2.
    pub(crate) fn kx3() -> Algebra {
        let field = q();
        let basis = vec![
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
        Algebra::new(field, basis, table, vec![0], Some(vec![0, 1, 2]))
    }

    #[test]
    fn multiplication_and_truncation() {
        let a = kx3();
        let x = a.basis_element(1);
        let x2 = a.basis_element(2);
        // x * x^2 = 0 by truncation
        assert!(a.multiply(&x, &x2).unwrap().is_zero());
        assert_eq!(a.multiply(&x, &x).unwrap(), x2);
        assert!(a.check().is_empty());
    }

    #[test]
    fn unit_law_random() {
        use rand::Rng;
        use rand::SeedableRng;
        let a = kx3();
        let u = a.unit();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let v = Element {
                coeffs: (0..3).map(|_| s(rng.gen_range(-9i64..9))).collect(),
            };
            assert_eq!(a.multiply(&u, &v).unwrap(), v);
            assert_eq!(a.multiply(&v, &u).unwrap(), v);
        }
    }

    #[test]
    fn corrupted_table_reported() {
        let mut a = kx3();
        // corrupt x * x to be e instead of x^2
        a.table[1][1] = vec![(0, Scalar::one(q()))];
        let violations = a.check();
        assert!(!violations.is_empty());
        assert!(violations
            .iter()
            .any(|v| v.kind == ViolationKind::Associativity || v.kind == ViolationKind::Grading));
    }

    #[test]
    fn element_inverse() {
        let a = kx3();
        // 1 + x is invertible with inverse 1 - x + x^2
        let one_plus_x = Element { coeffs: vec![s(1), s(1), s(0)] };
        let inv = a.invert_element(&one_plus_x).unwrap();
        assert_eq!(inv.coeffs, vec![s(1), s(-1), s(1)]);
        // x is not invertible
        assert!(a.invert_element(&a.basis_element(1)).is_err());
    }

    #[test]
    fn morphism_verification() {
        let a = kx3();
        // x -> -x, extended multiplicatively: x^2 -> x^2
        let sigma = AlgebraMorphism {
            columns: vec![
                vec![s(1), s(0), s(0)],
                vec![s(0), s(-1), s(0)],
                vec![s(0), s(0), s(1)],
            ],
        };
        sigma.verify_automorphism(&a).unwrap();
        assert_eq!(sigma.order(&a, 10), Some(2));
        // x -> x + 1 is not multiplicative
        let bad = AlgebraMorphism {
            columns: vec![
                vec![s(1), s(0), s(0)],
                vec![s(1), s(1), s(0)],
                vec![s(0), s(0), s(1)],
            ],
        };
        assert!(bad.verify_automorphism(&a).is_err());
    }
}
