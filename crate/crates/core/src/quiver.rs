//! Quivers (directed multigraphs) and the labels that index algebra bases.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let q = Quiver { vertices, arrows };
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::EmptyQuiver);
        }
        let mut seen = std::collections::HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        for a in &self.arrows {
            if !seen.insert(a.name.clone()) {
                return Err(Error::DuplicateName(a.name.clone()));
            }
            if !self.vertices.contains(&a.source) {
                return Err(Error::UnknownVertex(a.source.clone()));
            }
            if !self.vertices.contains(&a.target) {
                return Err(Error::UnknownVertex(a.target.clone()));
            }
        }
        Ok(())
    }

    pub fn vertex_index(&self, v: &str) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn arrow(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.name == name)
    }

    /// Count of arrows i -> j, indexed by vertex positions.
    pub fn arrow_count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0usize; n]; n];
        for a in &self.arrows {
            let i = self.vertex_index(&a.source).unwrap();
            let j = self.vertex_index(&a.target).unwrap();
            m[i][j] += 1;
        }
        m
    }

    /// Quiver isomorphism by exhaustive vertex matching on the arrow-count
    /// matrix. Vertex counts here are tiny.
    pub fn is_isomorphic_to(&self, other: &Quiver) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let a = self.arrow_count_matrix();
        let b = other.arrow_count_matrix();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            (0..n).all(|i| (0..n).all(|j| a[i][j] == b[p[i]][p[j]]))
        })
    }
}

fn permutations(perm: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return check(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        if permutations(perm, k + 1, check) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}

/// Provenance-preserving name of a basis vector.
///
/// `Path` entries compose left to right: `Path([a, b])` traverses `a` and
/// then `b`, which requires `target(a) = source(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisLabel {
    Vertex(String),
    Path(Vec<String>),
    /// `inner (x) g`, with the index of the group element.
    GroupTensor(Box<BasisLabel>, usize),
    /// `inner p_g`, with the index of the dual basis element.
    SmashTensor(Box<BasisLabel>, usize),
    /// Dual-basis functional of an algebra basis vector.
    DualFunctional(Box<BasisLabel>),
    /// Entry of a block-matrix algebra: (row block, column block, inner).
    MatrixEntry(u8, u8, Box<BasisLabel>),
    /// Synthetic label for derived bases (quotients, truncations).
    Indexed(String, usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Vertex(v) => write!(f, "e({v})"),
            BasisLabel::Path(p) => write!(f, "{}", p.join("*")),
            BasisLabel::GroupTensor(inner, g) => write!(f, "({inner})(x)g{g}"),
            BasisLabel::SmashTensor(inner, g) => write!(f, "({inner})p{g}"),
            BasisLabel::DualFunctional(inner) => write!(f, "D({inner})"),
            BasisLabel::MatrixEntry(r, c, inner) => write!(f, "[{r}{c}]({inner})"),
            BasisLabel::Indexed(tag, i) => write!(f, "{tag}{i}"),
        }
    }
}
