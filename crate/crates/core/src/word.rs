use std::fmt::Write;

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, VertexId};

/// An arrow or its formal inverse. Direct letters sort before inverse ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn inv(arrow: ArrowId) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn flipped(self) -> Self {
        Letter {
            arrow: self.arrow,
            inverse: !self.inverse,
        }
    }

    pub fn source(self, q: &Quiver) -> VertexId {
        if self.inverse {
            q.target(self.arrow)
        } else {
            q.source(self.arrow)
        }
    }

    pub fn target(self, q: &Quiver) -> VertexId {
        if self.inverse {
            q.source(self.arrow)
        } else {
            q.target(self.arrow)
        }
    }
}

/// Zero, a signed trivial string, or a nonempty letter sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StringWord {
    Zero,
    Trivial { vertex: VertexId, sign: i8 },
    Word(Vec<Letter>),
}

impl StringWord {
    pub fn trivial(vertex: VertexId, sign: i8) -> Self {
        StringWord::Trivial { vertex, sign }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, StringWord::Zero)
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, StringWord::Trivial { .. })
    }

    pub fn letters(&self) -> &[Letter] {
        match self {
            StringWord::Word(l) => l,
            _ => &[],
        }
    }

    pub fn len(&self) -> usize {
        self.letters().len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters().is_empty()
    }

    /// Builds a word, turning an empty sequence into nothing useful: callers
    /// must handle the trivial case themselves.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        assert!(!letters.is_empty(), "empty letter sequence");
        StringWord::Word(letters)
    }

    /// Formal inverse; inverting a trivial string flips its sign.
    pub fn inverse(&self) -> StringWord {
        match self {
            StringWord::Zero => StringWord::Zero,
            StringWord::Trivial { vertex, sign } => StringWord::trivial(*vertex, -sign),
            StringWord::Word(l) => StringWord::Word(l.iter().rev().map(|x| x.flipped()).collect()),
        }
    }

    pub fn source(&self, q: &Quiver) -> Option<VertexId> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { vertex, .. } => Some(*vertex),
            StringWord::Word(l) => Some(l[0].source(q)),
        }
    }

    pub fn target(&self, q: &Quiver) -> Option<VertexId> {
        match self {
            StringWord::Zero => None,
            StringWord::Trivial { vertex, .. } => Some(*vertex),
            StringWord::Word(l) => Some(l[l.len() - 1].target(q)),
        }
    }

    /// Vertices visited, in order; a trivial string visits its vertex once.
    pub fn vertices(&self, q: &Quiver) -> Vec<VertexId> {
        match self {
            StringWord::Zero => Vec::new(),
            StringWord::Trivial { vertex, .. } => vec![*vertex],
            StringWord::Word(l) => {
                let mut v = vec![l[0].source(q)];
                v.extend(l.iter().map(|x| x.target(q)));
                v
            }
        }
    }

    /// Occurrence count of each vertex.
    pub fn dimension_vector(&self, q: &Quiver) -> Vec<usize> {
        let mut d = vec![0; q.vertex_count()];
        for v in self.vertices(q) {
            d[v] += 1;
        }
        d
    }

    pub fn is_direct(&self) -> bool {
        matches!(self, StringWord::Word(l) if l.iter().all(|x| !x.inverse))
    }

    pub fn is_inverse(&self) -> bool {
        matches!(self, StringWord::Word(l) if l.iter().all(|x| x.inverse))
    }

    pub fn display(&self, q: &Quiver) -> String {
        match self {
            StringWord::Zero => "0".to_string(),
            StringWord::Trivial { vertex, sign } => {
                format!("e({}){}", q.vertex_name(*vertex), if *sign > 0 { '+' } else { '-' })
            }
            StringWord::Word(l) => letters_display(q, l),
        }
    }
}

pub fn letters_display(q: &Quiver, letters: &[Letter]) -> String {
    let mut out = String::new();
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&q.arrow(x.arrow).name);
        if x.inverse {
            out.push_str("^-1");
        }
    }
    out
}

fn bad(text: &str, message: &str) -> Error {
    Error::BadString {
        text: text.to_string(),
        message: message.to_string(),
    }
}

fn parse_letters(q: &Quiver, text: &str, body: &str) -> Result<Vec<Letter>> {
    body.split_whitespace()
        .map(|tok| {
            let (name, inverse) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let arrow = q
                .arrow_id(name)
                .map_err(|_| bad(text, &format!("unknown arrow `{}`", name)))?;
            Ok(Letter { arrow, inverse })
        })
        .collect()
}

/// Parses the printed form of a string: `a7^-1 a8`, `e(3)+`, `e(3)-` or `0`.
/// Only syntax and composability are checked here.
pub fn parse_string(q: &Quiver, text: &str) -> Result<StringWord> {
    let t = text.trim();
    if t == "0" {
        return Ok(StringWord::Zero);
    }
    if let Some(rest) = t.strip_prefix("e(") {
        let (v, sign) = rest
            .rsplit_once(')')
            .ok_or_else(|| bad(text, "expected `e(v)+` or `e(v)-`"))?;
        let sign = match sign {
            "+" => 1,
            "-" => -1,
            _ => return Err(bad(text, "trivial string needs a sign")),
        };
        let vertex = q.vertex(v).map_err(|_| bad(text, "unknown vertex"))?;
        return Ok(StringWord::trivial(vertex, sign));
    }
    let letters = parse_letters(q, text, t)?;
    if letters.is_empty() {
        return Err(bad(text, "empty string"));
    }
    if letters.windows(2).any(|w| w[0].target(q) != w[1].source(q)) {
        return Err(bad(text, "letters do not compose"));
    }
    Ok(StringWord::Word(letters))
}

/// A primitive cyclic string, stored as its least rotation over both
/// orientations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Band(pub Vec<Letter>);

impl Band {
    pub fn canonical(letters: &[Letter]) -> Band {
        let inv: Vec<Letter> = letters.iter().rev().map(|x| x.flipped()).collect();
        let mut best: Option<Vec<Letter>> = None;
        for seq in [letters.to_vec(), inv] {
            for r in 0..seq.len() {
                let mut rot = seq[r..].to_vec();
                rot.extend_from_slice(&seq[..r]);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        Band(best.unwrap_or_default())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        let mut out = String::from("band[ ");
        let _ = write!(out, "{}", letters_display(q, &self.0));
        out.push_str(" ]");
        out
    }

    pub fn parse(q: &Quiver, text: &str) -> Result<Band> {
        let t = text.trim();
        let body = t
            .strip_prefix("band[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad(text, "expected `band[ ... ]`"))?;
        let letters = parse_letters(q, text, body)?;
        if letters.is_empty() {
            return Err(bad(text, "empty band"));
        }
        Ok(Band(letters))
    }
}
