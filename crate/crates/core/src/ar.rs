//! Hooks, cohooks, the operations f_s and f_t, and the Auslander-Reiten
//! translate on strings.

use crate::quiver::{ArrowId, VertexId};
use crate::strings::StringAlgebra;
use crate::word::{Letter, StringWord};

fn word(l: Vec<Letter>) -> StringWord {
    StringWord::Word(l)
}

fn inverse_letters(l: &[Letter]) -> Vec<Letter> {
    l.iter().rev().map(|x| x.flipped()).collect()
}

impl StringAlgebra {
    /// p_a: the right-maximal direct string from s(a) not starting with `a`,
    /// empty when s(a) has no other outgoing arrow.
    pub fn hook_path(&self, a: ArrowId) -> Vec<Letter> {
        let q = self.quiver();
        match q.out_arrows(q.source(a)).into_iter().find(|&b| b != a) {
            Some(b) => self.maximal_direct_from_arrow(b),
            None => Vec::new(),
        }
    }

    /// q_a: the left-maximal direct string into t(a) not ending with `a`.
    pub fn cohook_path(&self, a: ArrowId) -> Vec<Letter> {
        let q = self.quiver();
        match q.in_arrows(q.target(a)).into_iter().find(|&c| c != a) {
            Some(c) => self.maximal_direct_into_arrow(c),
            None => Vec::new(),
        }
    }

    /// a^-1 p_a
    pub fn hook(&self, a: ArrowId) -> StringWord {
        let mut l = vec![Letter::inv(a)];
        l.extend(self.hook_path(a));
        word(l)
    }

    /// a q_a^-1
    pub fn cohook(&self, a: ArrowId) -> StringWord {
        let mut l = vec![Letter::direct(a)];
        l.extend(inverse_letters(&self.cohook_path(a)));
        word(l)
    }

    /// Adds a hook at the end of `w` if possible, else removes a cohook,
    /// else returns zero.
    pub fn f_s(&self, w: &StringWord) -> StringWord {
        let q = self.quiver();
        let t = match w.target(q) {
            Some(t) => t,
            None => return StringWord::Zero,
        };
        for a in q.in_arrows(t) {
            if let Some(StringWord::Word(mut l)) = self.concat(w, &word(vec![Letter::inv(a)])) {
                l.extend(self.hook_path(a));
                return word(l);
            }
        }
        if let StringWord::Word(l) = w {
            if let Some(k) = l.iter().rposition(|x| !x.inverse) {
                if k == 0 {
                    let a = l[0].arrow;
                    return StringWord::trivial(q.source(a), -self.signs().sigma(a));
                }
                return word(l[..k].to_vec());
            }
        }
        StringWord::Zero
    }

    /// The dual of f_s: f_t(w) = f_s(w^-1)^-1.
    pub fn f_t(&self, w: &StringWord) -> StringWord {
        self.f_s(&w.inverse()).inverse()
    }

    /// p1^-1 p2 over the maximal direct strings leaving `v`.
    pub fn projective_string(&self, v: VertexId) -> StringWord {
        let q = self.quiver();
        let outs = q.out_arrows(v);
        let paths: Vec<Vec<Letter>> = outs.iter().map(|&a| self.maximal_direct_from_arrow(a)).collect();
        match paths.len() {
            0 => StringWord::trivial(v, 1),
            1 => word(paths[0].clone()),
            _ => {
                let mut l = inverse_letters(&paths[0]);
                l.extend_from_slice(&paths[1]);
                word(l)
            }
        }
    }

    /// q1 q2^-1 over the maximal direct strings entering `v`.
    pub fn injective_string(&self, v: VertexId) -> StringWord {
        let q = self.quiver();
        let ins = q.in_arrows(v);
        let paths: Vec<Vec<Letter>> = ins.iter().map(|&a| self.maximal_direct_into_arrow(a)).collect();
        match paths.len() {
            0 => StringWord::trivial(v, 1),
            1 => word(paths[0].clone()),
            _ => {
                let mut l = paths[0].clone();
                l.extend(inverse_letters(&paths[1]));
                word(l)
            }
        }
    }

    pub fn projective_vertex(&self, w: &StringWord) -> Option<VertexId> {
        (0..self.quiver().vertex_count()).find(|&v| self.same_string(w, &self.projective_string(v)))
    }

    pub fn injective_vertex(&self, w: &StringWord) -> Option<VertexId> {
        (0..self.quiver().vertex_count()).find(|&v| self.same_string(w, &self.injective_string(v)))
    }

    pub fn is_projective(&self, w: &StringWord) -> bool {
        self.projective_vertex(w).is_some()
    }

    pub fn is_injective(&self, w: &StringWord) -> bool {
        self.injective_vertex(w).is_some()
    }

    /// Inverse Auslander-Reiten translate.
    pub fn tau_inverse(&self, w: &StringWord) -> StringWord {
        if w.is_zero() || self.is_injective(w) {
            return StringWord::Zero;
        }
        let fs = self.f_s(w);
        if !fs.is_zero() {
            self.f_t(&fs)
        } else {
            self.f_s(&self.f_t(w))
        }
    }

    /// Auslander-Reiten translate, computed as tau^-1 over the opposite
    /// algebra.
    pub fn tau(&self, w: &StringWord) -> StringWord {
        if w.is_zero() {
            return StringWord::Zero;
        }
        flip(&self.opposite().tau_inverse(&flip(w)))
    }
}

/// Reads a string of A as a string of the opposite algebra: every letter
/// changes direction, trivial signs are unchanged.
pub fn flip(w: &StringWord) -> StringWord {
    match w {
        StringWord::Word(l) => word(l.iter().map(|x| x.flipped()).collect()),
        _ => w.clone(),
    }
}
