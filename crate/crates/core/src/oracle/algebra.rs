use std::collections::HashMap;

use crate::presentation::BoundPresentation;
use crate::quiver::{ArrowId, VertexId};

/// Basis of kQ/I by relation-free paths, with their products.
#[derive(Debug, Clone)]
pub struct AlgebraTable {
    paths: Vec<(VertexId, Vec<ArrowId>)>,
    targets: Vec<VertexId>,
    index: HashMap<(VertexId, Vec<ArrowId>), usize>,
}

impl AlgebraTable {
    /// Breadth-first over relation-free paths; finite because the ideal is
    /// admissible. Trivial paths come first, one per vertex.
    pub fn new(pres: &BoundPresentation) -> Self {
        let q = pres.quiver();
        let mut paths: Vec<(VertexId, Vec<ArrowId>)> = (0..q.vertex_count()).map(|v| (v, Vec::new())).collect();
        let mut targets: Vec<VertexId> = (0..q.vertex_count()).collect();
        let mut frontier: Vec<usize> = (0..q.vertex_count()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for i in frontier {
                let (src, arrows) = paths[i].clone();
                for a in q.out_arrows(targets[i]) {
                    let mut p = arrows.clone();
                    p.push(a);
                    if !pres.path_in_ideal(&p) {
                        paths.push((src, p));
                        targets.push(q.target(a));
                        next.push(paths.len() - 1);
                    }
                }
            }
            frontier = next;
        }
        let index = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        AlgebraTable { paths, targets, index }
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn source(&self, i: usize) -> VertexId {
        self.paths[i].0
    }

    pub fn target(&self, i: usize) -> VertexId {
        self.targets[i]
    }

    pub fn arrows(&self, i: usize) -> &[ArrowId] {
        &self.paths[i].1
    }

    pub fn trivial(&self, v: VertexId) -> usize {
        v
    }

    /// Product of two basis paths, None when it vanishes.
    pub fn mul(&self, i: usize, j: usize) -> Option<usize> {
        if self.targets[i] != self.source(j) {
            return None;
        }
        let mut p = self.paths[i].1.clone();
        p.extend_from_slice(&self.paths[j].1);
        self.index.get(&(self.paths[i].0, p)).copied()
    }

    pub fn arrow(&self, a: ArrowId, source: VertexId) -> Option<usize> {
        self.index.get(&(source, vec![a])).copied()
    }

    /// Basis paths from `u` to `w`, in table order.
    pub fn paths_between(&self, u: VertexId, w: VertexId) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&i| self.paths[i].0 == u && self.targets[i] == w)
            .collect()
    }
}
