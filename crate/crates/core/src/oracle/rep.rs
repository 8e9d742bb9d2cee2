use num_traits::{One, Zero};

use super::linalg::{Matrix, Q};
use crate::presentation::BoundPresentation;
use crate::quiver::Quiver;
use crate::word::{Letter, StringWord};

/// A representation in the row-vector convention: arrow `a` acts by a
/// `dims[s(a)] x dims[t(a)]` matrix, so paths act on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub dims: Vec<usize>,
    pub action: Vec<Matrix>,
}

impl MatrixRep {
    pub fn zero(q: &Quiver) -> Self {
        MatrixRep {
            dims: vec![0; q.vertex_count()],
            action: q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Every generator of the ideal acts as zero.
    pub fn satisfies_relations(&self, pres: &BoundPresentation) -> bool {
        let q = pres.quiver();
        pres.relations().iter().all(|r| {
            let mut m = Matrix::identity(self.dims[q.source(r.0[0])]);
            for &a in &r.0 {
                m = m.mul(&self.action[a]);
            }
            m.is_zero()
        })
    }

    pub fn direct_sum(&self, other: &MatrixRep, q: &Quiver) -> MatrixRep {
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let action = (0..q.arrow_count())
            .map(|a| {
                let (s, t) = (q.source(a), q.target(a));
                let mut m = Matrix::zeros(dims[s], dims[t]);
                for i in 0..self.dims[s] {
                    for j in 0..self.dims[t] {
                        m.set(i, j, self.action[a].get(i, j));
                    }
                }
                for i in 0..other.dims[s] {
                    for j in 0..other.dims[t] {
                        m.set(self.dims[s] + i, self.dims[t] + j, other.action[a].get(i, j));
                    }
                }
                m
            })
            .collect();
        MatrixRep { dims, action }
    }
}

/// Places walk positions in per-vertex bases: position k gets the next free
/// index at its vertex.
fn positions(q: &Quiver, verts: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut dims = vec![0; q.vertex_count()];
    let idx = verts
        .iter()
        .map(|&v| {
            dims[v] += 1;
            dims[v] - 1
        })
        .collect();
    (dims, idx)
}

fn fill(q: &Quiver, dims: &[usize]) -> Vec<Matrix> {
    (0..q.arrow_count())
        .map(|a| Matrix::zeros(dims[q.source(a)], dims[q.target(a)]))
        .collect()
}

fn link(action: &mut [Matrix], idx: &[usize], x: Letter, from: usize, to: usize, value: Q) {
    if x.inverse {
        action[x.arrow].set(idx[to], idx[from], value);
    } else {
        action[x.arrow].set(idx[from], idx[to], value);
    }
}

/// The string module M(w): one basis vector per position of the walk.
pub fn string_module_rep(q: &Quiver, w: &StringWord) -> MatrixRep {
    if w.is_zero() {
        return MatrixRep::zero(q);
    }
    let verts = w.vertices(q);
    let (dims, idx) = positions(q, &verts);
    let mut action = fill(q, &dims);
    for (k, &x) in w.letters().iter().enumerate() {
        link(&mut action, &idx, x, k, k + 1, Q::one());
    }
    MatrixRep { dims, action }
}

/// The band module M(b, 1, lambda): the walk is closed up and the first
/// letter carries lambda.
pub fn band_module_rep(q: &Quiver, band: &[Letter], lambda: Q) -> MatrixRep {
    let n = band.len();
    let verts: Vec<usize> = band.iter().map(|x| x.source(q)).collect();
    let (dims, idx) = positions(q, &verts);
    let mut action = fill(q, &dims);
    for (k, &x) in band.iter().enumerate() {
        let value = if k == 0 { lambda } else { Q::one() };
        link(&mut action, &idx, x, k, (k + 1) % n, value);
    }
    MatrixRep { dims, action }
}

/// dim Hom(M, N): solutions of M(a) f_t(a) = f_s(a) N(a) for every arrow.
pub fn hom_dim_oracle(q: &Quiver, m: &MatrixRep, n: &MatrixRep) -> usize {
    let nv = q.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + m.dims[v] * n.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return 0;
    }
    // variable for (f_v)_{ij} sits at offset[v] + i * n.dims[v] + j
    let var = |v: usize, i: usize, j: usize| offset[v] + i * n.dims[v] + j;
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for a in 0..q.arrow_count() {
        let (s, t) = (q.source(a), q.target(a));
        let (ma, na) = (&m.action[a], &n.action[a]);
        for i in 0..m.dims[s] {
            for j in 0..n.dims[t] {
                let mut row = vec![Q::zero(); unknowns];
                // (M(a) f_t)_{ij} = sum_k M(a)_{ik} (f_t)_{kj}
                for k in 0..m.dims[t] {
                    let x = ma.get(i, k);
                    if !x.is_zero() {
                        row[var(t, k, j)] += x;
                    }
                }
                // (f_s N(a))_{ij} = sum_k (f_s)_{ik} N(a)_{kj}
                for k in 0..n.dims[s] {
                    let y = na.get(k, j);
                    if !y.is_zero() {
                        row[var(s, i, k)] -= y;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return unknowns;
    }
    unknowns - Matrix::from_rows(rows, unknowns).rank()
}
