//! Independent ground truth: explicit representations over the rationals,
//! Hom dimensions by solving intertwiner equations, and tau as D Tr.

pub mod algebra;
pub mod dtr;
pub mod linalg;
pub mod rep;

pub use algebra::AlgebraTable;
pub use dtr::{min_projective_presentation, tau_oracle, ProjectivePresentation};
pub use linalg::{Matrix, Q};
pub use rep::{band_module_rep, hom_dim_oracle, string_module_rep, MatrixRep};

use crate::presentation::BoundPresentation;
use crate::quiver::Quiver;
use crate::strings::StringAlgebra;
use crate::word::StringWord;

/// Algebra tables for A and its opposite, built once and shared.
#[derive(Debug, Clone)]
pub struct Oracle {
    pres: BoundPresentation,
    op: BoundPresentation,
    table: AlgebraTable,
    op_table: AlgebraTable,
}

/// The k-dual of a representation, viewed over the opposite quiver.
pub fn dual(m: &MatrixRep) -> MatrixRep {
    MatrixRep {
        dims: m.dims.clone(),
        action: m.action.iter().map(|a| a.transpose()).collect(),
    }
}

impl Oracle {
    pub fn new(pres: &BoundPresentation) -> Self {
        let op = pres.opposite();
        Oracle {
            table: AlgebraTable::new(pres),
            op_table: AlgebraTable::new(&op),
            pres: pres.clone(),
            op,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        self.pres.quiver()
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.table
    }

    pub fn string_rep(&self, w: &StringWord) -> MatrixRep {
        string_module_rep(self.quiver(), w)
    }

    pub fn hom(&self, m: &MatrixRep, n: &MatrixRep) -> usize {
        hom_dim_oracle(self.quiver(), m, n)
    }

    pub fn tau(&self, m: &MatrixRep) -> MatrixRep {
        tau_oracle(self.quiver(), &self.table, m)
    }

    /// tau^-1 M = D tau_{A^op} D M.
    pub fn tau_inverse(&self, m: &MatrixRep) -> MatrixRep {
        dual(&tau_oracle(self.op.quiver(), &self.op_table, &dual(m)))
    }

    pub fn is_projective(&self, m: &MatrixRep) -> bool {
        min_projective_presentation(self.quiver(), &self.table, m).p1.is_empty()
    }

    pub fn is_injective(&self, m: &MatrixRep) -> bool {
        min_projective_presentation(self.op.quiver(), &self.op_table, &dual(m))
            .p1
            .is_empty()
    }

    /// Hom-probe comparison against every string of length at most
    /// `probe_len`.
    pub fn same_module(&self, alg: &StringAlgebra, m: &MatrixRep, n: &MatrixRep, probe_len: usize) -> bool {
        if m.dims != n.dims {
            return false;
        }
        alg.enumerate_strings(probe_len).iter().all(|x| {
            let r = self.string_rep(x);
            self.hom(&r, m) == self.hom(&r, n)
        })
    }
}
