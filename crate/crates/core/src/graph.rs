//! Multigraphs and their cycle matroids.

use serde::{Deserialize, Serialize};

use crate::error::{MatxError, Result};
use crate::matroid::Matroid;
use crate::set::{k_subsets, MAX_ELEMENTS};

/// An edge `(u, v, label)`; `u == v` is a self-loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge(pub String, pub String, pub String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    ends: Vec<(usize, usize)>,
    labels: Vec<String>,
}

impl Graph {
    pub fn new(edges: &[Edge]) -> Result<Self> {
        if edges.len() > MAX_ELEMENTS {
            return Err(MatxError::TooLarge(edges.len()));
        }
        let mut vertices: Vec<String> = Vec::new();
        let mut ends = Vec::with_capacity(edges.len());
        let mut labels = Vec::with_capacity(edges.len());
        let vertex = |name: &str, vs: &mut Vec<String>| match vs.iter().position(|v| v == name) {
            Some(i) => i,
            None => {
                vs.push(name.to_string());
                vs.len() - 1
            }
        };
        for Edge(u, v, label) in edges {
            if labels.contains(label) {
                return Err(MatxError::DuplicateLabel(label.clone()));
            }
            let a = vertex(u, &mut vertices);
            let b = vertex(v, &mut vertices);
            ends.push((a, b));
            labels.push(label.clone());
        }
        Ok(Self { vertices, ends, labels })
    }

    /// Convenience for tests and catalogs: edges named `e1, e2, ..` between numbered vertices.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<Edge> = pairs
            .iter()
            .enumerate()
            .map(|(i, (u, v))| Edge(format!("v{u}"), format!("v{v}"), format!("e{}", i + 1)))
            .collect();
        Self::new(&edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.ends.len()
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.ends
            .iter()
            .zip(&self.labels)
            .map(|(&(a, b), l)| Edge(self.vertices[a].clone(), self.vertices[b].clone(), l.clone()))
            .collect()
    }

    fn forest(&self, mask: u32) -> Option<usize> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut merges = 0;
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return None;
            }
            parent[ra] = rb;
            merges += 1;
        }
        Some(merges)
    }

    pub fn num_components(&self) -> usize {
        let all = if self.ends.is_empty() { 0 } else { u32::MAX >> (32 - self.ends.len()) };
        self.vertices.len() - self.spanning_rank(all)
    }

    fn spanning_rank(&self, mask: u32) -> usize {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut rank = 0;
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                    rank += 1;
                }
            }
        }
        rank
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// Cycle matroid: bases are the maximal spanning forests, rank `|V| - #components`.
    pub fn cycle_matroid(&self) -> Matroid {
        let m = self.ends.len();
        let rank = self.vertices.len() - self.num_components();
        let masks: Vec<u32> = k_subsets(m, rank).filter(|&s| self.forest(s).is_some()).collect();
        Matroid::from_masks_unchecked(self.labels.clone(), masks)
    }
}

pub fn cycle_matroid(edges: &[Edge]) -> Result<Matroid> {
    Ok(Graph::new(edges)?.cycle_matroid())
}

/// Theta graph: two poles joined by `paths` internally disjoint paths of `length` edges.
pub fn theta_graph(paths: usize, length: usize) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut next = 2;
    for _ in 0..paths {
        let mut prev = 0;
        for step in 0..length {
            let to = if step + 1 == length {
                1
            } else {
                next += 1;
                next - 1
            };
            pairs.push((prev, to));
            prev = to;
        }
    }
    Graph::from_pairs(&pairs)
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_pairs(&pairs)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Graph::from_pairs(&pairs)
}

/// Wheel with `spokes` rim vertices around a hub.
pub fn wheel_graph(spokes: usize) -> Result<Graph> {
    let mut pairs: Vec<(usize, usize)> = (1..=spokes).map(|i| (i, i % spokes + 1)).collect();
    pairs.extend((1..=spokes).map(|i| (0, i)));
    Graph::from_pairs(&pairs)
}
