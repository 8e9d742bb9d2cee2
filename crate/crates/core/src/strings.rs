use std::collections::BTreeSet;

use crate::error::Result;
use crate::presentation::BoundPresentation;
use crate::quiver::{ArrowId, Quiver, VertexId};
use crate::signs::{compute_sign_functions, SignAssignment};
use crate::word::{Band, Letter, StringWord};

/// A string algebra together with a chosen pair of sign functions; the
/// context for every string-level operation.
#[derive(Debug, Clone)]
pub struct StringAlgebra {
    pres: BoundPresentation,
    signs: SignAssignment,
}

impl StringAlgebra {
    pub fn new(pres: BoundPresentation, signs: SignAssignment) -> Result<Self> {
        pres.require_string()?;
        signs.check(&pres)?;
        Ok(StringAlgebra { pres, signs })
    }

    /// Uses the default sign functions.
    pub fn with_default_signs(pres: BoundPresentation) -> Result<Self> {
        pres.require_string()?;
        let signs = compute_sign_functions(&pres)?;
        Self::new(pres, signs)
    }

    pub fn pres(&self) -> &BoundPresentation {
        &self.pres
    }

    pub fn signs(&self) -> &SignAssignment {
        &self.signs
    }

    pub fn quiver(&self) -> &Quiver {
        self.pres.quiver()
    }

    /// The opposite algebra with swapped sign functions.
    pub fn opposite(&self) -> StringAlgebra {
        StringAlgebra {
            pres: self.pres.opposite(),
            signs: self.signs.opposite(),
        }
    }

    pub fn letter_sigma(&self, x: Letter) -> i8 {
        if x.inverse {
            self.signs.epsilon(x.arrow)
        } else {
            self.signs.sigma(x.arrow)
        }
    }

    pub fn letter_epsilon(&self, x: Letter) -> i8 {
        if x.inverse {
            self.signs.sigma(x.arrow)
        } else {
            self.signs.epsilon(x.arrow)
        }
    }

    /// sigma of a string: of its first letter, or -sign for a trivial one.
    pub fn sigma(&self, w: &StringWord) -> Option<i8> {
        match w {
            StringWord::Zero => None,
            StringWord::Trivial { sign, .. } => Some(-sign),
            StringWord::Word(l) => Some(self.letter_sigma(l[0])),
        }
    }

    /// epsilon of a string: of its last letter, or sign for a trivial one.
    pub fn epsilon(&self, w: &StringWord) -> Option<i8> {
        match w {
            StringWord::Zero => None,
            StringWord::Trivial { sign, .. } => Some(*sign),
            StringWord::Word(l) => Some(self.letter_epsilon(l[l.len() - 1])),
        }
    }

    /// Reduced, composable, and no direct or inverse run lies in the ideal.
    pub fn letters_form_string(&self, letters: &[Letter]) -> bool {
        let q = self.quiver();
        if letters.is_empty() {
            return false;
        }
        for w in letters.windows(2) {
            if w[0].target(q) != w[1].source(q) {
                return false;
            }
            if w[0].arrow == w[1].arrow && w[0].inverse != w[1].inverse {
                return false;
            }
        }
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j + 1 < letters.len() && letters[j + 1].inverse == letters[i].inverse {
                j += 1;
            }
            let mut path: Vec<ArrowId> = letters[i..=j].iter().map(|x| x.arrow).collect();
            if letters[i].inverse {
                path.reverse();
            }
            if self.pres.path_in_ideal(&path) {
                return false;
            }
            i = j + 1;
        }
        true
    }

    pub fn is_string(&self, w: &StringWord) -> bool {
        match w {
            StringWord::Zero => false,
            StringWord::Trivial { vertex, sign } => *vertex < self.quiver().vertex_count() && sign.abs() == 1,
            StringWord::Word(l) => self.letters_form_string(l),
        }
    }

    /// Concatenation with the sign rule for trivial strings. `None` means
    /// undefined; zero absorbs.
    pub fn concat(&self, u: &StringWord, v: &StringWord) -> Option<StringWord> {
        let q = self.quiver();
        match (u, v) {
            (StringWord::Zero, _) | (_, StringWord::Zero) => Some(StringWord::Zero),
            (StringWord::Trivial { vertex: x, sign: g }, StringWord::Trivial { vertex: y, sign: d }) => {
                (x == y && g == d).then(|| u.clone())
            }
            (StringWord::Trivial { vertex, sign }, StringWord::Word(_)) => {
                (v.source(q) == Some(*vertex) && self.sigma(v) == Some(-sign)).then(|| v.clone())
            }
            (StringWord::Word(_), StringWord::Trivial { vertex, sign }) => {
                (u.target(q) == Some(*vertex) && self.epsilon(u) == Some(*sign)).then(|| u.clone())
            }
            (StringWord::Word(a), StringWord::Word(b)) => {
                let mut l = a.clone();
                l.extend_from_slice(b);
                self.letters_form_string(&l).then_some(StringWord::Word(l))
            }
        }
    }

    /// min(w, w^-1); trivial strings keep their sign.
    pub fn canonical(&self, w: &StringWord) -> StringWord {
        match w {
            StringWord::Word(_) => {
                let inv = w.inverse();
                if inv < *w {
                    inv
                } else {
                    w.clone()
                }
            }
            _ => w.clone(),
        }
    }

    /// Same string up to inversion, treating the two trivial strings at a
    /// vertex as equal.
    pub fn same_string(&self, u: &StringWord, v: &StringWord) -> bool {
        match (u, v) {
            (StringWord::Trivial { vertex: x, .. }, StringWord::Trivial { vertex: y, .. }) => x == y,
            _ => u == v || *u == v.inverse(),
        }
    }

    /// Module-class key: trivial strings get the + sign.
    pub fn module_key(&self, w: &StringWord) -> StringWord {
        match w {
            StringWord::Trivial { vertex, .. } => StringWord::trivial(*vertex, 1),
            _ => self.canonical(w),
        }
    }

    /// Letters that can follow `w` on the right.
    pub fn right_extensions(&self, letters: &[Letter]) -> Vec<Letter> {
        let q = self.quiver();
        let last = letters[letters.len() - 1];
        let v = last.target(q);
        let mut cands: Vec<Letter> = q.out_arrows(v).into_iter().map(Letter::direct).collect();
        cands.extend(q.in_arrows(v).into_iter().map(Letter::inv));
        cands
            .into_iter()
            .filter(|&x| {
                let mut l = letters.to_vec();
                l.push(x);
                self.letters_form_string(&l)
            })
            .collect()
    }

    /// Letters leaving vertex `v` in either direction.
    pub fn letters_from(&self, v: VertexId) -> Vec<Letter> {
        let q = self.quiver();
        let mut out: Vec<Letter> = q.out_arrows(v).into_iter().map(Letter::direct).collect();
        out.extend(q.in_arrows(v).into_iter().map(Letter::inv));
        out
    }

    /// Canonical strings with at most `max_len` letters, one trivial string
    /// (sign +) per vertex, sorted. Zero is excluded.
    pub fn enumerate_strings(&self, max_len: usize) -> Vec<StringWord> {
        let q = self.quiver();
        let mut set = BTreeSet::new();
        for v in 0..q.vertex_count() {
            set.insert(StringWord::trivial(v, 1));
        }
        if max_len > 0 {
            let mut stack: Vec<Vec<Letter>> = (0..q.arrow_count())
                .flat_map(|a| [vec![Letter::direct(a)], vec![Letter::inv(a)]])
                .filter(|l| self.letters_form_string(l))
                .collect();
            while let Some(l) = stack.pop() {
                if l.len() < max_len {
                    for x in self.right_extensions(&l) {
                        let mut m = l.clone();
                        m.push(x);
                        stack.push(m);
                    }
                }
                set.insert(self.canonical(&StringWord::Word(l)));
            }
        }
        set.into_iter().collect()
    }

    /// Whether `letters`, read cyclically, is a band.
    pub fn is_band(&self, letters: &[Letter]) -> bool {
        let n = letters.len();
        if n == 0 {
            return false;
        }
        let q = self.quiver();
        if letters[n - 1].target(q) != letters[0].source(q) {
            return false;
        }
        // primitive: not a proper power
        for d in 1..n {
            if n.is_multiple_of(d) && (0..n).all(|i| letters[i] == letters[i % d]) {
                return false;
            }
        }
        let l = self.pres.max_relation_len().max(1);
        let m = 2 + l.div_ceil(n);
        let power: Vec<Letter> = letters.iter().copied().cycle().take(n * m).collect();
        self.letters_form_string(&power)
    }

    /// Bands with at most `max_len` letters, canonicalized; complete up to
    /// the bound only.
    pub fn enumerate_bands(&self, max_len: usize) -> Vec<Band> {
        let q = self.quiver();
        let mut set = BTreeSet::new();
        // Each band has a canonical rotation starting with its least letter,
        // so only walks whose letters are all >= the first one are grown.
        for a in 0..q.arrow_count() {
            for first in [Letter::direct(a), Letter::inv(a)] {
                let mut stack = vec![vec![first]];
                while let Some(l) = stack.pop() {
                    if (l.len() > 1 || l[0].target(q) == l[0].source(q)) && self.is_band(&l) {
                        set.insert(Band::canonical(&l));
                    }
                    if l.len() < max_len {
                        for x in self.right_extensions(&l) {
                            if x >= first {
                                let mut m = l.clone();
                                m.push(x);
                                stack.push(m);
                            }
                        }
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn default_band_bound(&self) -> usize {
        4 * self.quiver().arrow_count()
    }

    /// Longest direct string starting at `v` whose first arrow is `a`.
    pub fn maximal_direct_from_arrow(&self, a: ArrowId) -> Vec<Letter> {
        let q = self.quiver();
        let mut l = vec![Letter::direct(a)];
        loop {
            let v = l[l.len() - 1].target(q);
            let next = q.out_arrows(v).into_iter().find(|&b| {
                let mut m = l.clone();
                m.push(Letter::direct(b));
                self.letters_form_string(&m)
            });
            match next {
                Some(b) => l.push(Letter::direct(b)),
                None => return l,
            }
        }
    }

    /// Longest direct string ending with the arrow `a`, as letters.
    pub fn maximal_direct_into_arrow(&self, a: ArrowId) -> Vec<Letter> {
        let q = self.quiver();
        let mut l = vec![Letter::direct(a)];
        loop {
            let v = l[0].source(q);
            let prev = q.in_arrows(v).into_iter().find(|&c| {
                let mut m = vec![Letter::direct(c)];
                m.extend_from_slice(&l);
                self.letters_form_string(&m)
            });
            match prev {
                Some(c) => l.insert(0, Letter::direct(c)),
                None => return l,
            }
        }
    }
}
