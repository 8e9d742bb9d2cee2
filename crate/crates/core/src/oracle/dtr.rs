//! Minimal projective presentations and the transpose-dual D Tr.

use num_traits::{One, Zero};

use super::algebra::AlgebraTable;
use super::linalg::{Matrix, Q};
use super::rep::MatrixRep;
use crate::quiver::{Quiver, VertexId};

/// An element of e_u A e_w: basis path indices with coefficients.
pub type PathCombination = Vec<(usize, Q)>;

/// P1 -> P0 with P0 = sum of P(p0[i]) and P1 = sum of P(p1[j]); the
/// generator of the j-th summand of P1 maps to sum_i lambda[i][j].
#[derive(Debug, Clone)]
pub struct ProjectivePresentation {
    pub p0: Vec<VertexId>,
    pub p1: Vec<VertexId>,
    pub lambda: Vec<Vec<PathCombination>>,
}

/// Vectors whose classes form a basis of the top M / rad M.
fn top_generators(q: &Quiver, m: &MatrixRep) -> Vec<(VertexId, Vec<Q>)> {
    let mut out = Vec::new();
    for u in 0..q.vertex_count() {
        let d = m.dims[u];
        if d == 0 {
            continue;
        }
        let mut span = Matrix::zeros(0, d);
        for a in q.in_arrows(u) {
            span = span.vstack(&m.action[a]);
        }
        let mut rank = span.rank();
        for k in 0..d {
            let mut e = Matrix::zeros(1, d);
            e.set(0, k, Q::one());
            let grown = span.vstack(&e);
            let r = grown.rank();
            if r > rank {
                span = grown;
                rank = r;
                out.push((u, e.row(0).to_vec()));
            }
        }
    }
    out
}

/// Coordinates of the projective sum_i P(u_i) at vertex w: pairs
/// (summand, path from u_i to w).
fn projective_basis(table: &AlgebraTable, tops: &[VertexId], w: VertexId) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in tops.iter().enumerate() {
        for p in table.paths_between(u, w) {
            out.push((i, p));
        }
    }
    out
}

fn path_matrix(m: &MatrixRep, table: &AlgebraTable, p: usize) -> Matrix {
    let mut out = Matrix::identity(m.dims[table.source(p)]);
    for &a in table.arrows(p) {
        out = out.mul(&m.action[a]);
    }
    out
}

pub fn min_projective_presentation(q: &Quiver, table: &AlgebraTable, m: &MatrixRep) -> ProjectivePresentation {
    let nv = q.vertex_count();
    let gens = top_generators(q, m);
    let p0: Vec<VertexId> = gens.iter().map(|g| g.0).collect();
    let bases: Vec<Vec<(usize, usize)>> = (0..nv).map(|w| projective_basis(table, &p0, w)).collect();

    // kernel of P0 -> M, vertex by vertex, as rows in P0 coordinates
    let kernel: Vec<Matrix> = (0..nv)
        .map(|w| {
            let mut pi = Matrix::zeros(bases[w].len(), m.dims[w]);
            for (r, &(i, p)) in bases[w].iter().enumerate() {
                let g = Matrix::from_rows(vec![gens[i].1.clone()], m.dims[gens[i].0]);
                let img = g.mul(&path_matrix(m, table, p));
                for c in 0..m.dims[w] {
                    pi.set(r, c, img.get(0, c));
                }
            }
            if m.dims[w] == 0 {
                Matrix::identity(bases[w].len())
            } else {
                pi.left_nullspace()
            }
        })
        .collect();

    // the kernel as a representation
    let kdims: Vec<usize> = kernel.iter().map(|k| k.rows).collect();
    let kaction: Vec<Matrix> = (0..q.arrow_count())
        .map(|a| {
            let (s, t) = (q.source(a), q.target(a));
            let mut act = Matrix::zeros(bases[s].len(), bases[t].len());
            for (r, &(i, p)) in bases[s].iter().enumerate() {
                if let Some(pa) = table.arrow(a, s).and_then(|x| table.mul(p, x)) {
                    let c = bases[t].iter().position(|&b| b == (i, pa)).expect("basis path");
                    act.set(r, c, Q::one());
                }
            }
            if kdims[s] == 0 || kdims[t] == 0 {
                return Matrix::zeros(kdims[s], kdims[t]);
            }
            let image = kernel[s].mul(&act);
            kernel[t]
                .transpose()
                .solve(&image.transpose())
                .expect("kernel is a submodule")
                .transpose()
        })
        .collect();
    let krep = MatrixRep {
        dims: kdims,
        action: kaction,
    };

    let kgens = top_generators(q, &krep);
    let p1: Vec<VertexId> = kgens.iter().map(|g| g.0).collect();
    let mut lambda = vec![vec![Vec::new(); p1.len()]; p0.len()];
    for (j, (w, coeffs)) in kgens.iter().enumerate() {
        let c = Matrix::from_rows(vec![coeffs.clone()], krep.dims[*w]);
        let row = c.mul(&kernel[*w]);
        for (col, &(i, p)) in bases[*w].iter().enumerate() {
            let x = row.get(0, col);
            if !x.is_zero() {
                lambda[i][j].push((p, x));
            }
        }
    }
    ProjectivePresentation { p0, p1, lambda }
}

/// D Tr M computed from the minimal projective presentation.
pub fn tau_oracle(q: &Quiver, table: &AlgebraTable, m: &MatrixRep) -> MatrixRep {
    let nv = q.vertex_count();
    let pres = min_projective_presentation(q, table, m);
    if pres.p1.is_empty() {
        return MatrixRep::zero(q);
    }
    // W_x = sum_j e_x A e_{p1[j]}, basis (j, path x -> p1[j])
    let wbasis: Vec<Vec<(usize, usize)>> = (0..nv)
        .map(|x| {
            let mut b = Vec::new();
            for (j, &w) in pres.p1.iter().enumerate() {
                for p in table.paths_between(x, w) {
                    b.push((j, p));
                }
            }
            b
        })
        .collect();
    // annihilator of the image of sum_i A e_{p0[i]} at each vertex
    let qx: Vec<Matrix> = (0..nv)
        .map(|x| {
            let dim = wbasis[x].len();
            let mut rows = Vec::new();
            for (i, &u) in pres.p0.iter().enumerate() {
                for rho in table.paths_between(x, u) {
                    let mut row = vec![Q::zero(); dim];
                    for j in 0..pres.p1.len() {
                        for &(tau, c) in &pres.lambda[i][j] {
                            if let Some(prod) = table.mul(rho, tau) {
                                let k = wbasis[x].iter().position(|&b| b == (j, prod)).expect("basis path");
                                row[k] += c;
                            }
                        }
                    }
                    rows.push(row);
                }
            }
            if rows.is_empty() {
                Matrix::identity(dim)
            } else {
                Matrix::from_rows(rows, dim).nullspace()
            }
        })
        .collect();
    let dims: Vec<usize> = qx.iter().map(|m| m.cols).collect();
    let action = (0..q.arrow_count())
        .map(|a| {
            let (x, y) = (q.source(a), q.target(a));
            if dims[x] == 0 || dims[y] == 0 {
                return Matrix::zeros(dims[x], dims[y]);
            }
            // left multiplication by a, W_y -> W_x, in the row convention
            let mut la = Matrix::zeros(wbasis[y].len(), wbasis[x].len());
            let arrow = table.arrow(a, x).expect("arrow is a basis path");
            for (r, &(j, sigma)) in wbasis[y].iter().enumerate() {
                if let Some(prod) = table.mul(arrow, sigma) {
                    let c = wbasis[x].iter().position(|&b| b == (j, prod)).expect("basis path");
                    la.set(r, c, Q::one());
                }
            }
            let g = qx[y].solve(&la.mul(&qx[x])).expect("dual action is well defined");
            g.transpose()
        })
        .collect();
    MatrixRep { dims, action }
}
