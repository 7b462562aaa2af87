//! Graph data model with an explicit vertex boundary.
//!
//! A `Graph` is a finite interior vertex set together with its vertex
//! boundary: every boundary vertex is adjacent to at least one interior
//! vertex, and boundary-boundary edges are rejected (the assembled operators
//! have a zero boundary-boundary block, so such edges would be invisible to
//! every solve). Internal indexing places the interior first (`0..n`) and the
//! boundary after it (`n..n+k`); family constructors attach a label map so
//! callers can keep addressing vertices by their conventional positions.

use std::collections::{HashMap, HashSet, VecDeque};

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected graph with distinguished interior and boundary vertex sets.
#[derive(Debug, Clone)]
pub struct Graph {
    interior: Vec<u64>,
    boundary: Vec<u64>,
    edges: Vec<(u64, u64)>,
    /// Adjacency by internal index, interior first then boundary.
    adj: Vec<Vec<usize>>,
    index: HashMap<u64, usize>,
    /// Family-specific labels (path position, ladder position, ...).
    labels: HashMap<i64, usize>,
}

/// JSON interchange form: `{"interior": [...], "boundary": [...], "edges": [[a,b],...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub interior: Vec<u64>,
    pub boundary: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
}

impl Graph {
    /// Build and validate a graph from vertex id lists and an edge list.
    pub fn new(interior: Vec<u64>, boundary: Vec<u64>, edges: Vec<(u64, u64)>) -> Result<Graph> {
        let mut index = HashMap::new();
        for (i, &v) in interior.iter().chain(boundary.iter()).enumerate() {
            if index.insert(v, i).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let n = interior.len();
        let total = n + boundary.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
        let mut seen = HashSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let ia = *index.get(&a).ok_or(Error::UnknownVertex(a))?;
            let ib = *index.get(&b).ok_or(Error::UnknownVertex(b))?;
            if !seen.insert((ia.min(ib), ia.max(ib))) {
                return Err(Error::DuplicateEdge(a, b));
            }
            if ia >= n && ib >= n {
                return Err(Error::BoundaryBoundaryEdge(a, b));
            }
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        for v in adj.iter_mut() {
            v.sort_unstable();
        }
        for (k, &v) in boundary.iter().enumerate() {
            if adj[n + k].is_empty() {
                return Err(Error::IsolatedBoundary(v));
            }
        }
        Ok(Graph {
            interior,
            boundary,
            edges,
            adj,
            index,
            labels: HashMap::new(),
        })
    }

    /// Attach a label map (family position -> internal index).
    pub fn with_labels(mut self, labels: HashMap<i64, usize>) -> Graph {
        self.labels = labels;
        self
    }

    pub fn n_interior(&self) -> usize {
        self.interior.len()
    }

    pub fn n_boundary(&self) -> usize {
        self.boundary.len()
    }

    /// Total number of vertices, interior plus boundary.
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn interior_ids(&self) -> &[u64] {
        &self.interior
    }

    pub fn boundary_ids(&self) -> &[u64] {
        &self.boundary
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    /// Degree of the vertex at internal index `i` (counts every incident edge).
    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn is_interior_index(&self, i: usize) -> bool {
        i < self.interior.len()
    }

    /// Internal index of an external vertex id.
    pub fn index_of(&self, id: u64) -> Option<usize> {
        self.index.get(&id).copied()
    }

    /// Internal index of a family label, if a label map is attached.
    pub fn label_index(&self, label: i64) -> Option<usize> {
        self.labels.get(&label).copied()
    }

    /// True if the whole vertex set (interior and boundary) is connected.
    pub fn is_connected(&self) -> bool {
        let total = self.len();
        if total == 0 {
            return true;
        }
        let mut seen = vec![false; total];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == total
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph> {
        Graph::new(
            json.interior.clone(),
            json.boundary.clone(),
            json.edges.iter().map(|e| (e[0], e[1])).collect(),
        )
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            interior: self.interior.clone(),
            boundary: self.boundary.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Combinatorial Laplacian over all vertices: `d_x` on the diagonal, `-1` at
/// neighbors. Interior rows restricted to interior columns plus boundary
/// columns reproduce the rectangular operator block used in assembly; every
/// row sums to zero.
pub fn build_laplacian(g: &Graph) -> DMatrix<f64> {
    let total = g.len();
    let mut l = DMatrix::zeros(total, total);
    for i in 0..total {
        l[(i, i)] = g.degree(i) as f64;
        for &j in g.neighbors(i) {
            l[(i, j)] = -1.0;
        }
    }
    l
}

/// Normalized Laplacian `T^{-1/2} L T^{-1/2}`, with the convention that
/// `T^{-1}(x,x) = 0` when `d_x = 0` (isolated vertices give zero rows).
pub fn build_normalized_laplacian(g: &Graph) -> DMatrix<f64> {
    let total = g.len();
    let inv_sqrt: Vec<f64> = (0..total)
        .map(|i| {
            let d = g.degree(i) as f64;
            if d > 0.0 {
                1.0 / d.sqrt()
            } else {
                0.0
            }
        })
        .collect();
    let mut l = DMatrix::zeros(total, total);
    for i in 0..total {
        if g.degree(i) > 0 {
            l[(i, i)] = 1.0;
        }
        for &j in g.neighbors(i) {
            l[(i, j)] = -inv_sqrt[i] * inv_sqrt[j];
        }
    }
    l
}

/// Discrete normal derivative at a boundary vertex `y`:
/// sum over interior neighbors `x` of `u(y) - u(x)`.
///
/// `u` is indexed internally (interior first, boundary after).
pub fn normal_derivative(g: &Graph, u: &DVector<f64>, y: u64) -> Result<f64> {
    let iy = g.index_of(y).ok_or(Error::UnknownVertex(y))?;
    if g.is_interior_index(iy) {
        return Err(Error::NotBoundary(y));
    }
    // Boundary-boundary edges are rejected at construction, so every neighbor
    // of a boundary vertex is interior.
    Ok(g.neighbors(iy).iter().map(|&x| u[iy] - u[x]).sum())
}

/// Leading coefficient of the smallest Neumann eigenvalue for small
/// absorption: `|V| / (|V| + |dV|)`. Requires a connected graph.
pub fn neumann_small_alpha_slope(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n_interior() as f64;
    let k = g.n_boundary() as f64;
    Ok(n / (n + k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path1() -> Graph {
        // vertices 0,1,2 with interior {1}
        let g = Graph::new(vec![1], vec![0, 2], vec![(0, 1), (1, 2)]).unwrap();
        g.with_labels(HashMap::from([(0, 1), (1, 0), (2, 2)]))
    }

    #[test]
    fn laplacian_path_interior_row() {
        let g = path1();
        let l = build_laplacian(&g);
        let row = g.label_index(1).unwrap();
        let (c0, c1, c2) = (
            g.label_index(0).unwrap(),
            g.label_index(1).unwrap(),
            g.label_index(2).unwrap(),
        );
        assert_eq!(l[(row, c0)], -1.0);
        assert_eq!(l[(row, c1)], 2.0);
        assert_eq!(l[(row, c2)], -1.0);
        assert_eq!(l.row(row).sum(), 0.0);
    }

    #[test]
    fn laplacian_isolated_vertex() {
        let g = Graph::new(vec![7], vec![], vec![]).unwrap();
        let l = build_laplacian(&g);
        assert_eq!(l[(0, 0)], 0.0);
    }

    #[test]
    fn laplacian_loop_six() {
        let ids: Vec<u64> = (0..6).collect();
        let edges: Vec<(u64, u64)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let g = Graph::new(ids, vec![], edges).unwrap();
        let l = build_laplacian(&g);
        for i in 0..6 {
            assert_eq!(l[(i, i)], 2.0);
            let negs = (0..6).filter(|&j| l[(i, j)] == -1.0).count();
            assert_eq!(negs, 2);
            assert_eq!(l.row(i).sum(), 0.0);
        }
    }

    #[test]
    fn normalized_laplacian_loop_four() {
        let ids: Vec<u64> = (0..4).collect();
        let edges: Vec<(u64, u64)> = (0..4).map(|i| (i, (i + 1) % 4)).collect();
        let g = Graph::new(ids, vec![], edges).unwrap();
        let l = build_normalized_laplacian(&g);
        assert!((l[(0, 1)] + 0.5).abs() < 1e-15);
        assert_eq!(l[(0, 0)], 1.0);
    }

    #[test]
    fn normalized_laplacian_isolated_row_is_zero() {
        let g = Graph::new(vec![0, 1, 2], vec![], vec![(1, 2)]).unwrap();
        let l = build_normalized_laplacian(&g);
        assert!(l.row(0).iter().all(|&x| x == 0.0));
    }

    #[test]
    fn normalized_laplacian_complete_three() {
        let g = Graph::new(vec![0, 1, 2], vec![], vec![(0, 1), (0, 2), (1, 2)]).unwrap();
        let l = build_normalized_laplacian(&g);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!((l[(i, j)] + 0.5).abs() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn rejects_boundary_boundary_edges() {
        let err = Graph::new(vec![1], vec![0, 2], vec![(0, 1), (1, 2), (0, 2)]).unwrap_err();
        assert_eq!(err, Error::BoundaryBoundaryEdge(0, 2));
    }

    #[test]
    fn rejects_isolated_boundary() {
        let err = Graph::new(vec![1], vec![0, 2], vec![(0, 1)]).unwrap_err();
        assert_eq!(err, Error::IsolatedBoundary(2));
    }

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert_eq!(
            Graph::new(vec![0, 1], vec![], vec![(0, 0)]).unwrap_err(),
            Error::SelfLoop(0)
        );
        assert_eq!(
            Graph::new(vec![0, 1], vec![], vec![(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge(1, 0)
        );
        assert_eq!(
            Graph::new(vec![0, 1], vec![1], vec![(0, 1)]).unwrap_err(),
            Error::DuplicateVertex(1)
        );
    }

    #[test]
    fn normal_derivative_constant_vanishes() {
        let g = path1();
        let u = DVector::from_element(3, 3.5);
        assert_eq!(normal_derivative(&g, &u, 0).unwrap(), 0.0);
        assert_eq!(normal_derivative(&g, &u, 2).unwrap(), 0.0);
    }

    #[test]
    fn normal_derivative_single_neighbor() {
        let g = path1();
        // u = (0,1,0) in label order; internal order is (interior 1, boundary 0, boundary 2)
        let mut u = DVector::zeros(3);
        u[g.label_index(1).unwrap()] = 1.0;
        assert_eq!(normal_derivative(&g, &u, 0).unwrap(), -1.0);
    }

    #[test]
    fn normal_derivative_rejects_interior() {
        let g = path1();
        let u = DVector::zeros(3);
        assert_eq!(normal_derivative(&g, &u, 1).unwrap_err(), Error::NotBoundary(1));
    }

    #[test]
    fn neumann_slope_values() {
        // no boundary -> 1
        let g = Graph::new(vec![0, 1], vec![], vec![(0, 1)]).unwrap();
        assert_eq!(neumann_small_alpha_slope(&g).unwrap(), 1.0);

        // disconnected -> error
        let g = Graph::new(vec![0, 1, 2, 3], vec![], vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(neumann_small_alpha_slope(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn json_round_trip() {
        let g = path1();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        let back = Graph::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.n_interior(), 1);
        assert_eq!(back.n_boundary(), 2);
        assert_eq!(back.edges().len(), 2);
    }
}
