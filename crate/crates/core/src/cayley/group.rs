//! Finite groups with enumerated elements: products of cyclic groups and
//! small symmetric groups.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// JSON form: `{"kind":"cyclic_product","orders":[...]}` or
/// `{"kind":"symmetric","n":4}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    CyclicProduct { orders: Vec<u32> },
    Symmetric { n: usize },
}

/// Group element: a residue tuple or a permutation in one-line notation
/// (`perm[i]` is the image of point `i`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Tuple(Vec<u32>),
    Perm(Vec<u8>),
}

/// A finite group with its elements enumerated, identity first.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    spec: GroupSpec,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
}

pub const MAX_SYMMETRIC_DEGREE: usize = 6;

impl FiniteGroup {
    /// `Z/n1 x ... x Z/nm` enumerated in mixed-radix order.
    pub fn cyclic_product(orders: &[u32]) -> Result<FiniteGroup> {
        if orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidParameter("cyclic order 0".into()));
        }
        let mut elements = vec![vec![0u32; orders.len()]];
        'outer: loop {
            let mut next = elements.last().unwrap().clone();
            for (i, &n) in orders.iter().enumerate().rev() {
                next[i] += 1;
                if next[i] < n {
                    elements.push(next);
                    continue 'outer;
                }
                next[i] = 0;
            }
            break;
        }
        let elements: Vec<Element> = elements.into_iter().map(Element::Tuple).collect();
        Ok(FiniteGroup::from_elements(
            GroupSpec::CyclicProduct {
                orders: orders.to_vec(),
            },
            elements,
        ))
    }

    /// Symmetric group on `n` points, permutations in lexicographic order so
    /// the identity comes first.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > MAX_SYMMETRIC_DEGREE {
            return Err(Error::UnsupportedSymmetricDegree(n));
        }
        let mut elements = Vec::new();
        let mut perm: Vec<u8> = (0..n as u8).collect();
        loop {
            elements.push(Element::Perm(perm.clone()));
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Ok(FiniteGroup::from_elements(
            GroupSpec::Symmetric { n },
            elements,
        ))
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<FiniteGroup> {
        match spec {
            GroupSpec::CyclicProduct { orders } => FiniteGroup::cyclic_product(orders),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
        }
    }

    fn from_elements(spec: GroupSpec, elements: Vec<Element>) -> FiniteGroup {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        FiniteGroup {
            spec,
            elements,
            index,
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        match &self.spec {
            GroupSpec::CyclicProduct { .. } => true,
            GroupSpec::Symmetric { n } => *n <= 2,
        }
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Index of `a * b`, where permutations compose as `(a*b)(x) = a(b(x))`.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = match (&self.elements[a], &self.elements[b]) {
            (Element::Tuple(x), Element::Tuple(y)) => {
                let orders = match &self.spec {
                    GroupSpec::CyclicProduct { orders } => orders,
                    _ => unreachable!("tuple elements only occur in cyclic products"),
                };
                Element::Tuple(
                    x.iter()
                        .zip(y.iter())
                        .zip(orders.iter())
                        .map(|((&xi, &yi), &n)| (xi + yi) % n)
                        .collect(),
                )
            }
            (Element::Perm(p), Element::Perm(q)) => {
                Element::Perm(q.iter().map(|&x| p[x as usize]).collect())
            }
            _ => unreachable!("mixed element kinds"),
        };
        self.index[&prod]
    }

    pub fn invert(&self, a: usize) -> usize {
        let inv = match &self.elements[a] {
            Element::Tuple(x) => {
                let orders = match &self.spec {
                    GroupSpec::CyclicProduct { orders } => orders,
                    _ => unreachable!(),
                };
                Element::Tuple(
                    x.iter()
                        .zip(orders.iter())
                        .map(|(&xi, &n)| (n - xi) % n)
                        .collect(),
                )
            }
            Element::Perm(p) => {
                let mut inv = vec![0u8; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u8;
                }
                Element::Perm(inv)
            }
        };
        self.index[&inv]
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Symmetric generator set, stored as sorted element indices.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    indices: Vec<usize>,
}

impl GeneratorSet {
    pub fn new(group: &FiniteGroup, indices: impl IntoIterator<Item = usize>) -> Result<GeneratorSet> {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        for &s in &set {
            if s >= group.order() {
                return Err(Error::GeneratorOutOfRange(s, group.order()));
            }
            if s == 0 {
                return Err(Error::IdentityGenerator);
            }
            if !set.contains(&group.invert(s)) {
                return Err(Error::NonSymmetricGenerators(s));
            }
        }
        Ok(GeneratorSet {
            indices: set.into_iter().collect(),
        })
    }

    /// Generators from explicit elements.
    pub fn from_elements(group: &FiniteGroup, elems: &[Element]) -> Result<GeneratorSet> {
        let mut idx = Vec::with_capacity(elems.len());
        for e in elems {
            idx.push(
                group
                    .index_of(e)
                    .ok_or_else(|| Error::InvalidParameter("generator not in group".into()))?,
            );
        }
        GeneratorSet::new(group, idx)
    }

    /// Adjacent transpositions `(i, i+1)` of a symmetric group.
    pub fn adjacent_transpositions(group: &FiniteGroup) -> Result<GeneratorSet> {
        let n = match group.spec() {
            GroupSpec::Symmetric { n } => *n,
            _ => {
                return Err(Error::InvalidParameter(
                    "adjacent transpositions need a symmetric group".into(),
                ))
            }
        };
        let mut elems = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut p: Vec<u8> = (0..n as u8).collect();
            p.swap(i, i + 1);
            elems.push(Element::Perm(p));
        }
        GeneratorSet::from_elements(group, &elems)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Cayley graph `X(G, S)`: one vertex per group element, an edge `{g, h}`
/// whenever `g h^{-1}` lies in `S`. The result is `|S|`-regular with no
/// boundary; vertex ids follow the group enumeration.
pub fn cayley_graph(group: &FiniteGroup, s: &GeneratorSet) -> Result<Graph> {
    let n = group.order();
    let mut edges = HashSet::new();
    for g in 0..n {
        for &gen in s.indices() {
            let h = group.multiply(gen, g);
            edges.insert((g.min(h) as u64, g.max(h) as u64));
        }
    }
    let mut edges: Vec<(u64, u64)> = edges.into_iter().collect();
    edges.sort_unstable();
    let labels = (0..n).map(|i| (i as i64, i)).collect();
    Ok(Graph::new((0..n as u64).collect(), vec![], edges)?.with_labels(labels))
}
