//! Undirected multigraphs, the symmetrized Tits form, and Dynkin /
//! extended Dynkin recognition.
//!
//! Recognition is definiteness-first: exact symmetric elimination of
//! `2I - M` over the rationals yields the inertia. Positive definite
//! components are Dynkin, positive semidefinite components with a
//! one-dimensional kernel are extended Dynkin, anything else is `Other`.
//! The specific name is then read off the degree data and cross-checked
//! against the definiteness class.

use crate::error::{Error, Result};
use crate::linalg::{symmetric_inertia, Mat};
use crate::quiver::Quiver;
use crate::scalar::{FieldDescriptor, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    pub vertices: Vec<String>,
    /// Symmetric edge multiplicities with zero diagonal.
    pub mult: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    pub fn new(vertices: Vec<String>, mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = vertices.len();
        if mult.len() != n || mult.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch);
        }
        for i in 0..n {
            if mult[i][i] != 0 {
                return Err(Error::LoopPresent(vertices[i].clone()));
            }
            for j in 0..n {
                if mult[i][j] != mult[j][i] {
                    return Err(Error::ShapeMismatch);
                }
            }
        }
        Ok(UndirectedGraph { vertices, mult })
    }

    /// The underlying graph of a quiver; arrows become undirected edges.
    pub fn from_quiver(q: &Quiver) -> Result<Self> {
        let n = q.vertices.len();
        let mut mult = vec![vec![0usize; n]; n];
        for a in &q.arrows {
            let i = q.vertex_index(&a.source).unwrap();
            let j = q.vertex_index(&a.target).unwrap();
            if i == j {
                return Err(Error::LoopPresent(a.source.clone()));
            }
            mult[i][j] += 1;
            mult[j][i] += 1;
        }
        UndirectedGraph::new(q.vertices.clone(), mult)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.mult[i].iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        let mut total = 0;
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                total += self.mult[i][j];
            }
        }
        total
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = vec![];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![];
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in 0..n {
                    if !seen[w] && self.mult[v][w] > 0 {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn subgraph(&self, verts: &[usize]) -> UndirectedGraph {
        let vertices = verts.iter().map(|&i| self.vertices[i].clone()).collect();
        let mult = verts
            .iter()
            .map(|&i| verts.iter().map(|&j| self.mult[i][j]).collect())
            .collect();
        UndirectedGraph { vertices, mult }
    }

    pub fn relabeled(&self, perm: &[usize]) -> UndirectedGraph {
        // vertex i moves to position perm[i]
        let n = self.vertices.len();
        let mut vertices = vec![String::new(); n];
        let mut mult = vec![vec![0usize; n]; n];
        for i in 0..n {
            vertices[perm[i]] = self.vertices[i].clone();
            for j in 0..n {
                mult[perm[i]][perm[j]] = self.mult[i][j];
            }
        }
        UndirectedGraph { vertices, mult }
    }
}

/// The symmetrized Tits matrix `2I - M` over the rationals.
pub fn tits_matrix(g: &UndirectedGraph) -> Result<Mat> {
    let field = FieldDescriptor::Rationals;
    let n = g.vertices.len();
    for i in 0..n {
        if g.mult[i][i] != 0 {
            return Err(Error::LoopPresent(g.vertices[i].clone()));
        }
    }
    let mut m = Mat::zero(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let v = if i == j {
                Scalar::from_integer(2, field)
            } else {
                Scalar::from_integer(-(g.mult[i][j] as i64), field)
            };
            m.set(i, j, v);
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphType {
    DynkinA(usize),
    DynkinD(usize),
    DynkinE(usize),
    ExtendedA(usize),
    ExtendedD(usize),
    ExtendedE(usize),
    Other,
}

impl GraphType {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, GraphType::DynkinA(_) | GraphType::DynkinD(_) | GraphType::DynkinE(_))
    }

    pub fn is_extended(&self) -> bool {
        matches!(
            self,
            GraphType::ExtendedA(_) | GraphType::ExtendedD(_) | GraphType::ExtendedE(_)
        )
    }

    pub fn is_extended_a(&self) -> bool {
        matches!(self, GraphType::ExtendedA(_))
    }
}

impl std::fmt::Display for GraphType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphType::DynkinA(n) => write!(f, "A{n}"),
            GraphType::DynkinD(n) => write!(f, "D{n}"),
            GraphType::DynkinE(n) => write!(f, "E{n}"),
            GraphType::ExtendedA(n) => write!(f, "~A{n}"),
            GraphType::ExtendedD(n) => write!(f, "~D{n}"),
            GraphType::ExtendedE(n) => write!(f, "~E{n}"),
            GraphType::Other => write!(f, "other"),
        }
    }
}

/// Exact definiteness certificate of one component.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub pivots: Vec<String>,
    /// Strictly positive kernel vector, present in the semidefinite case.
    pub kernel_vector: Option<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct ComponentType {
    pub vertices: Vec<usize>,
    pub label: GraphType,
    pub certificate: Certificate,
}

#[derive(Debug, Clone)]
pub struct Recognition {
    pub components: Vec<ComponentType>,
}

impl Recognition {
    /// The unique component, or Disconnected.
    pub fn single(&self) -> Result<&ComponentType> {
        if self.components.len() == 1 {
            Ok(&self.components[0])
        } else {
            Err(Error::Disconnected)
        }
    }

    /// The common label of all components, or TypeInconsistent.
    pub fn uniform_label(&self) -> Result<GraphType> {
        let mut labels: Vec<GraphType> = self.components.iter().map(|c| c.label).collect();
        labels.dedup();
        match labels.len() {
            0 => Err(Error::TypeInconsistent("no components".into())),
            1 => Ok(labels[0]),
            _ => Err(Error::TypeInconsistent(
                labels
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            )),
        }
    }
}

/// Classify every connected component.
pub fn recognize_graph(g: &UndirectedGraph) -> Result<Recognition> {
    let mut components = vec![];
    for comp in g.components() {
        let sub = g.subgraph(&comp);
        let (label, certificate) = recognize_component(&sub)?;
        components.push(ComponentType { vertices: comp, label, certificate });
    }
    Ok(Recognition { components })
}

fn recognize_component(g: &UndirectedGraph) -> Result<(GraphType, Certificate)> {
    let tits = tits_matrix(g)?;
    let inertia = symmetric_inertia(&tits, |x| x.rational_sign().expect("rational pivot"));
    let kernel_vector = if inertia.zero >= 1 && inertia.negative == 0 {
        let kb = tits.kernel_basis();
        kb.first().map(|v| normalize_kernel(v))
    } else {
        None
    };
    let certificate = Certificate {
        positive: inertia.positive,
        negative: inertia.negative,
        zero: inertia.zero,
        pivots: inertia.pivots.iter().map(|p| p.to_string()).collect(),
        kernel_vector: kernel_vector
            .as_ref()
            .map(|v| v.iter().map(|c| c.to_string()).collect()),
    };
    if inertia.negative > 0 || inertia.zero > 1 {
        return Ok((GraphType::Other, certificate));
    }
    let definite = inertia.zero == 0;
    let label = if definite {
        identify_dynkin(g)?
    } else {
        // semidefinite with one-dimensional kernel: the kernel vector of an
        // extended Dynkin diagram is strictly positive
        match &kernel_vector {
            Some(v) if v.iter().all(|c| c.rational_sign() == Some(1)) => {}
            _ => {
                return Err(Error::InternalInconsistency(
                    "semidefinite component without positive kernel vector".into(),
                ))
            }
        }
        identify_extended(g)?
    };
    Ok((label, certificate))
}

fn normalize_kernel(v: &[Scalar]) -> Vec<Scalar> {
    let negs = v.iter().filter(|c| c.rational_sign() == Some(-1)).count();
    let nonzero = v.iter().filter(|c| !c.is_zero()).count();
    if negs == nonzero && negs > 0 {
        v.iter().map(|c| c.neg()).collect()
    } else {
        v.to_vec()
    }
}

/// Branch lengths from a node of degree >= 3 in a tree whose other nodes
/// have degree at most 2.
fn branch_lengths(g: &UndirectedGraph, center: usize) -> Vec<usize> {
    let n = g.vertices.len();
    let mut lengths = vec![];
    for first in 0..n {
        for _ in 0..g.mult[center][first] {
            // walk away from the center
            let mut prev = center;
            let mut cur = first;
            let mut len = 1;
            loop {
                let next = (0..n).find(|&w| w != prev && g.mult[cur][w] > 0);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break,
                }
            }
            lengths.push(len);
        }
    }
    lengths.sort_unstable();
    lengths
}

fn identify_dynkin(g: &UndirectedGraph) -> Result<GraphType> {
    let n = g.vertices.len();
    let degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let max_deg = degrees.iter().copied().max().unwrap_or(0);
    let simple = (0..n).all(|i| (0..n).all(|j| g.mult[i][j] <= 1));
    if !simple {
        return Err(Error::InternalInconsistency(
            "positive definite component with a multiple edge".into(),
        ));
    }
    if max_deg <= 2 {
        // connected, definite, degrees <= 2: a path
        if g.edge_count() == n - 1 {
            return Ok(GraphType::DynkinA(n));
        }
        return Err(Error::InternalInconsistency("definite cycle".into()));
    }
    let trivalent: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 3).collect();
    if trivalent.len() != 1 || degrees[trivalent[0]] != 3 {
        return Err(Error::InternalInconsistency(
            "definite component with unexpected branching".into(),
        ));
    }
    let branches = branch_lengths(g, trivalent[0]);
    match branches.as_slice() {
        [1, 1, _] => Ok(GraphType::DynkinD(n)),
        [1, 2, 2] => Ok(GraphType::DynkinE(6)),
        [1, 2, 3] => Ok(GraphType::DynkinE(7)),
        [1, 2, 4] => Ok(GraphType::DynkinE(8)),
        _ => Err(Error::InternalInconsistency(
            "definite component with unknown branch pattern".into(),
        )),
    }
}

fn identify_extended(g: &UndirectedGraph) -> Result<GraphType> {
    let n = g.vertices.len();
    let degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let simple = (0..n).all(|i| (0..n).all(|j| g.mult[i][j] <= 1));
    if !simple {
        // the only semidefinite multigraph without loops is the double edge
        if n == 2 && g.mult[0][1] == 2 {
            return Ok(GraphType::ExtendedA(1));
        }
        return Err(Error::InternalInconsistency(
            "semidefinite component with unexpected multiplicities".into(),
        ));
    }
    if degrees.iter().all(|&d| d == 2) {
        // a simple cycle on n vertices
        return Ok(GraphType::ExtendedA(n - 1));
    }
    let deg4: Vec<usize> = (0..n).filter(|&i| degrees[i] == 4).collect();
    let deg3: Vec<usize> = (0..n).filter(|&i| degrees[i] == 3).collect();
    if deg4.len() == 1 && n == 5 && deg3.is_empty() {
        return Ok(GraphType::ExtendedD(4));
    }
    if deg4.is_empty() && deg3.len() == 2 {
        return Ok(GraphType::ExtendedD(n - 1));
    }
    if deg4.is_empty() && deg3.len() == 1 {
        let branches = branch_lengths(g, deg3[0]);
        return match branches.as_slice() {
            [2, 2, 2] => Ok(GraphType::ExtendedE(6)),
            [1, 3, 3] => Ok(GraphType::ExtendedE(7)),
            [1, 2, 5] => Ok(GraphType::ExtendedE(8)),
            _ => Err(Error::InternalInconsistency(
                "semidefinite component with unknown branch pattern".into(),
            )),
        };
    }
    Err(Error::InternalInconsistency(
        "semidefinite component with unexpected degrees".into(),
    ))
}

// ---------------------------------------------------------------------------
// reference graph builders (used by tests and the self test)
// ---------------------------------------------------------------------------

pub fn path_graph(n: usize) -> UndirectedGraph {
    let vertices = (0..n).map(|i| format!("{i}")).collect();
    let mut mult = vec![vec![0usize; n]; n];
    for i in 0..n.saturating_sub(1) {
        mult[i][i + 1] = 1;
        mult[i + 1][i] = 1;
    }
    UndirectedGraph { vertices, mult }
}

pub fn cycle_graph(n: usize) -> UndirectedGraph {
    let mut g = path_graph(n);
    if n == 2 {
        g.mult[0][1] = 2;
        g.mult[1][0] = 2;
    } else if n > 2 {
        g.mult[0][n - 1] = 1;
        g.mult[n - 1][0] = 1;
    }
    g
}

/// A tree given by three branch lengths from a central node.
pub fn star_graph(branches: &[usize]) -> UndirectedGraph {
    let n = 1 + branches.iter().sum::<usize>();
    let vertices = (0..n).map(|i| format!("{i}")).collect();
    let mut mult = vec![vec![0usize; n]; n];
    let mut next = 1;
    for &len in branches {
        let mut prev = 0;
        for _ in 0..len {
            mult[prev][next] = 1;
            mult[next][prev] = 1;
            prev = next;
            next += 1;
        }
    }
    UndirectedGraph { vertices, mult }
}

/// The double-edge graph (the smallest extended A type).
pub fn double_edge() -> UndirectedGraph {
    cycle_graph(2)
}

/// D-type Dynkin graph on n vertices (n >= 4).
pub fn d_graph(n: usize) -> UndirectedGraph {
    star_graph(&[1, 1, n - 3])
}

/// Extended D-type graph on n+1 vertices (n >= 4): a path with a fork at
/// both ends.
pub fn d_tilde_graph(n: usize) -> UndirectedGraph {
    let total = n + 1;
    let vertices: Vec<String> = (0..total).map(|i| format!("{i}")).collect();
    let mut mult = vec![vec![0usize; total]; total];
    let mut add = |i: usize, j: usize| {
        mult[i][j] = 1;
        mult[j][i] = 1;
    };
    if n == 4 {
        for leaf in 1..5 {
            add(0, leaf);
        }
    } else {
        // spine 2 .. total-3, forks {0,1} at the left and {total-2, total-1}
        let spine: Vec<usize> = (2..total - 2).collect();
        add(0, spine[0]);
        add(1, spine[0]);
        for w in spine.windows(2) {
            add(w[0], w[1]);
        }
        add(*spine.last().unwrap(), total - 2);
        add(*spine.last().unwrap(), total - 1);
    }
    UndirectedGraph { vertices, mult }
}

pub fn e_graph(n: usize) -> UndirectedGraph {
    match n {
        6 => star_graph(&[1, 2, 2]),
        7 => star_graph(&[1, 2, 3]),
        8 => star_graph(&[1, 2, 4]),
        _ => panic!("E type is defined for 6, 7, 8"),
    }
}

pub fn e_tilde_graph(n: usize) -> UndirectedGraph {
    match n {
        6 => star_graph(&[2, 2, 2]),
        7 => star_graph(&[1, 3, 3]),
        8 => star_graph(&[1, 2, 5]),
        _ => panic!("extended E type is defined for 6, 7, 8"),
    }
}

pub fn complete_graph(n: usize) -> UndirectedGraph {
    let vertices = (0..n).map(|i| format!("{i}")).collect();
    let mut mult = vec![vec![1usize; n]; n];
    for (i, row) in mult.iter_mut().enumerate() {
        row[i] = 0;
    }
    UndirectedGraph { vertices, mult }
}
