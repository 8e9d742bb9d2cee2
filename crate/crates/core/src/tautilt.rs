//! Support tau-tilting pairs: tau-rigidity, compatibility graphs, clique
//! enumeration, and the geometric count through maximal collections of
//! arcs whose crossings are all good.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::quiver::VertexId;
use crate::strings::StringAlgebra;
use crate::surface::{crossings_m, ArcKind, ArcRealization, TiledSurface};
use crate::word::StringWord;

/// A node of a compatibility graph: a string module or the shifted
/// projective at a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Shadow(VertexId),
    Module(StringWord),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportPair {
    pub projective_vertices: Vec<VertexId>,
    pub module_strings: Vec<StringWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SupportPairDoc {
    pub projective_vertices: Vec<String>,
    pub module_strings: Vec<String>,
}

impl SupportPair {
    fn from_nodes(nodes: &[Node]) -> SupportPair {
        let mut p = SupportPair {
            projective_vertices: Vec::new(),
            module_strings: Vec::new(),
        };
        for n in nodes {
            match n {
                Node::Shadow(v) => p.projective_vertices.push(*v),
                Node::Module(w) => p.module_strings.push(w.clone()),
            }
        }
        p.projective_vertices.sort();
        p.module_strings.sort();
        p
    }

    pub fn len(&self) -> usize {
        self.projective_vertices.len() + self.module_strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_doc(&self, alg: &StringAlgebra) -> SupportPairDoc {
        let q = alg.quiver();
        SupportPairDoc {
            projective_vertices: self
                .projective_vertices
                .iter()
                .map(|&v| q.vertex_name(v).to_string())
                .collect(),
            module_strings: self.module_strings.iter().map(|w| w.display(q)).collect(),
        }
    }
}

/// Whether the enumeration provably saw every tau-rigid string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Completeness {
    /// No bands and no strings beyond the length bound.
    Exact,
    /// Bands exist or strings continue past the bound.
    WithinBound,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub pairs: Vec<SupportPair>,
    pub completeness: Completeness,
    pub candidates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GeometricReport {
    pub algebraic: usize,
    pub geometric: usize,
    pub agree: bool,
    /// Collections found on one side only.
    pub only_algebraic: Vec<SupportPairDoc>,
    pub only_geometric: Vec<SupportPairDoc>,
}

pub fn is_tau_rigid(alg: &StringAlgebra, w: &StringWord) -> bool {
    let t = alg.tau(w);
    t.is_zero() || alg.hom_dim(w, &t) == 0
}

pub fn pair_compatible(alg: &StringAlgebra, x: &Node, y: &Node) -> bool {
    match (x, y) {
        (Node::Shadow(_), Node::Shadow(_)) => true,
        (Node::Shadow(v), Node::Module(m)) | (Node::Module(m), Node::Shadow(v)) => {
            alg.hom_dim(&alg.projective_string(*v), m) == 0
        }
        (Node::Module(a), Node::Module(b)) => {
            let (ta, tb) = (alg.tau(a), alg.tau(b));
            (tb.is_zero() || alg.hom_dim(a, &tb) == 0) && (ta.is_zero() || alg.hom_dim(b, &ta) == 0)
        }
    }
}

/// Decides completeness: no band up to `band_bound` and no string longer
/// than `max_len`.
pub fn completeness(alg: &StringAlgebra, max_len: usize, band_bound: usize) -> Completeness {
    let longer = alg.enumerate_strings(max_len + 1).len() > alg.enumerate_strings(max_len).len();
    if longer || !alg.enumerate_bands(band_bound).is_empty() {
        Completeness::WithinBound
    } else {
        Completeness::Exact
    }
}

/// Maximal cliques by Bron-Kerbosch with pivoting.
pub fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn go(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
            .unwrap_or(0);
        let mut p_rest = p.clone();
        for v in p.iter().copied().filter(|&v| !adj[pivot][v]) {
            r.push(v);
            let np = p_rest.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            go(adj, r, np, nx, out);
            r.pop();
            p_rest.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    let p = (0..adj.len()).collect();
    go(adj, &mut Vec::new(), p, Vec::new(), &mut out);
    out
}

/// The tau-rigid candidate strings up to `max_len`.
pub fn candidates(alg: &StringAlgebra, max_len: usize) -> Vec<StringWord> {
    alg.enumerate_strings(max_len)
        .into_iter()
        .filter(|w| is_tau_rigid(alg, w))
        .collect()
}

fn nodes_for(n: usize, strings: Vec<StringWord>) -> Vec<Node> {
    (0..n)
        .map(Node::Shadow)
        .chain(strings.into_iter().map(Node::Module))
        .collect()
}

fn cliques_to_pairs(nodes: &[Node], adj: &[Vec<bool>], size: usize) -> Vec<SupportPair> {
    let mut pairs: BTreeSet<SupportPair> = BTreeSet::new();
    for c in maximal_cliques(adj) {
        if c.len() == size {
            let chosen: Vec<Node> = c.iter().map(|&i| nodes[i].clone()).collect();
            pairs.insert(SupportPair::from_nodes(&chosen));
        }
    }
    pairs.into_iter().collect()
}

/// Shifted projectives and tau-rigid strings up to `max_len`, with the
/// compatibility relation between distinct nodes.
pub fn compatibility_graph(alg: &StringAlgebra, max_len: usize) -> (Vec<Node>, Vec<Vec<bool>>) {
    let n = alg.quiver().vertex_count();
    let nodes = nodes_for(n, candidates(alg, max_len));
    let adj = nodes
        .iter()
        .enumerate()
        .map(|(i, x)| {
            nodes
                .iter()
                .enumerate()
                .map(|(j, y)| i != j && pair_compatible(alg, x, y))
                .collect()
        })
        .collect();
    (nodes, adj)
}

/// Every support tau-tilting pair built from strings of length at most
/// `max_len`.
pub fn enumerate_support_tau_tilting(alg: &StringAlgebra, max_len: usize, band_bound: usize) -> Enumeration {
    let n = alg.quiver().vertex_count();
    let (nodes, adj) = compatibility_graph(alg, max_len);
    Enumeration {
        pairs: cliques_to_pairs(&nodes, &adj, n),
        completeness: completeness(alg, max_len, band_bound),
        candidates: nodes.len() - n,
    }
}

/// Maximal collections of arcs of P and clockwise-most M-arcs in which
/// every crossing is good, read back as support pairs.
pub fn geometric_collections(ts: &TiledSurface, alg: &StringAlgebra, max_len: usize) -> Vec<SupportPair> {
    let n = alg.quiver().vertex_count();
    let arcs: Vec<(StringWord, ArcRealization)> = alg
        .enumerate_strings(max_len)
        .into_iter()
        .map(|w| {
            let a = ts
                .realize_arc(alg, &w, ArcKind::ClockwiseM)
                .expect("strings realize as arcs");
            (w, a)
        })
        .filter(|(_, a)| {
            let r = crossings_m(ts, alg, a, a);
            r.c_forward == r.good_forward
        })
        .collect();
    let strings: Vec<StringWord> = arcs.iter().map(|(w, _)| w.clone()).collect();
    let nodes = nodes_for(n, strings);
    let m = nodes.len();
    let mut adj = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let ok = match (i < n, j < n) {
                (true, true) => true,
                (true, false) => arcs[j - n].1.crossings.iter().all(|c| c.arc != i),
                _ => {
                    let r = crossings_m(ts, alg, &arcs[i - n].1, &arcs[j - n].1);
                    r.c_forward == r.good_forward && r.c_backward == r.good_backward
                }
            };
            adj[i][j] = ok;
            adj[j][i] = ok;
        }
    }
    let mut pairs: BTreeSet<SupportPair> = BTreeSet::new();
    for c in maximal_cliques(&adj) {
        let chosen: Vec<Node> = c.iter().map(|&i| nodes[i].clone()).collect();
        pairs.insert(SupportPair::from_nodes(&chosen));
    }
    pairs.into_iter().collect()
}

/// Compares the algebraic enumeration with the geometric one.
pub fn verify_geometric(ts: &TiledSurface, alg: &StringAlgebra, max_len: usize, band_bound: usize) -> GeometricReport {
    let algebraic: BTreeSet<SupportPair> = enumerate_support_tau_tilting(alg, max_len, band_bound)
        .pairs
        .into_iter()
        .collect();
    let geometric: BTreeSet<SupportPair> = geometric_collections(ts, alg, max_len).into_iter().collect();
    let only_algebraic: Vec<SupportPairDoc> = algebraic.difference(&geometric).map(|p| p.to_doc(alg)).collect();
    let only_geometric: Vec<SupportPairDoc> = geometric.difference(&algebraic).map(|p| p.to_doc(alg)).collect();
    GeometricReport {
        algebraic: algebraic.len(),
        geometric: geometric.len(),
        agree: only_algebraic.is_empty() && only_geometric.is_empty(),
        only_algebraic,
        only_geometric,
    }
}
