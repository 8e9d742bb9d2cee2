//! Factor and substring decompositions and the admissible-pair formula for
//! Hom dimensions between string modules.

use crate::quiver::Quiver;
use crate::strings::StringAlgebra;
use crate::word::{Letter, StringWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionKind {
    Factor,
    Substring,
}

/// A cut `w = left middle right`, recorded by the letter range of the middle.
/// An empty range is the trivial string at the vertex in position `start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub start: usize,
    pub end: usize,
    pub kind: DecompositionKind,
}

impl Decomposition {
    pub fn middle<'a>(&self, w: &'a StringWord) -> &'a [Letter] {
        &w.letters()[self.start..self.end]
    }

    pub fn left<'a>(&self, w: &'a StringWord) -> &'a [Letter] {
        &w.letters()[..self.start]
    }

    pub fn right<'a>(&self, w: &'a StringWord) -> &'a [Letter] {
        &w.letters()[self.end..]
    }
}

fn decompositions(w: &StringWord, kind: DecompositionKind) -> Vec<Decomposition> {
    if w.is_zero() {
        return Vec::new();
    }
    let l = w.letters();
    let n = l.len();
    let mut out = Vec::new();
    for start in 0..=n {
        for end in start..=n {
            let left_ok = start == 0
                || match kind {
                    DecompositionKind::Factor => l[start - 1].inverse,
                    DecompositionKind::Substring => !l[start - 1].inverse,
                };
            let right_ok = end == n
                || match kind {
                    DecompositionKind::Factor => !l[end].inverse,
                    DecompositionKind::Substring => l[end].inverse,
                };
            if left_ok && right_ok {
                out.push(Decomposition { start, end, kind });
            }
        }
    }
    out
}

pub fn fac_decompositions(w: &StringWord) -> Vec<Decomposition> {
    decompositions(w, DecompositionKind::Factor)
}

pub fn sub_decompositions(w: &StringWord) -> Vec<Decomposition> {
    decompositions(w, DecompositionKind::Substring)
}

fn vertex_at(q: &Quiver, w: &StringWord, pos: usize) -> usize {
    w.vertices(q)[pos]
}

fn middles_match(q: &Quiver, v: &StringWord, f: &Decomposition, w: &StringWord, s: &Decomposition) -> bool {
    let (a, b) = (f.middle(v), s.middle(w));
    if a.is_empty() && b.is_empty() {
        return vertex_at(q, v, f.start) == vertex_at(q, w, s.start);
    }
    if a.len() != b.len() {
        return false;
    }
    a == b || a.iter().zip(b.iter().rev()).all(|(x, y)| *x == y.flipped())
}

impl StringAlgebra {
    /// Number of admissible pairs in Fac(v) x Sub(w): the dimension of
    /// Hom(M(v), M(w)). A pair whose middles agree both ways counts once.
    pub fn hom_dim(&self, v: &StringWord, w: &StringWord) -> usize {
        if v.is_zero() || w.is_zero() {
            return 0;
        }
        let q = self.quiver();
        let fac = fac_decompositions(v);
        let sub = sub_decompositions(w);
        let mut count = 0;
        for f in &fac {
            for s in &sub {
                if middles_match(q, v, f, w, s) {
                    count += 1;
                }
            }
        }
        count
    }
}
