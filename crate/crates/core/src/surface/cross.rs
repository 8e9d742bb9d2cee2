//! Crossings between realized arcs in minimal position.
//!
//! Two arcs running through the same arcs of P form a common stretch; they
//! cross inside it exactly when they leave it on opposite sides. The side is
//! read in the tile where they diverge from the anticlockwise position of
//! where each goes next. Segments of M-arcs that share no side inside a tile
//! are compared by interleaving on the tile boundary.

use serde::Serialize;

use crate::quiver::VertexId;
use crate::strings::StringAlgebra;
use crate::word::{Letter, StringWord};

use super::arcs::{ArcEnd, ArcKind, ArcRealization};
use super::{TileItem, TiledSurface};

/// Oriented counts between two arcs: `*_forward` counts from the first arc
/// to the second, `*_backward` the other way.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CrossingReport {
    pub c_forward: usize,
    pub c_backward: usize,
    pub i_forward: usize,
    pub i_backward: usize,
    pub good_forward: usize,
    pub good_backward: usize,
    /// Good crossings whose label condition holds for two labels.
    pub ambiguous_good: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rel {
    Right,
    Left,
    Tie,
}

impl Rel {
    fn flip(self) -> Rel {
        match self {
            Rel::Right => Rel::Left,
            Rel::Left => Rel::Right,
            Rel::Tie => Rel::Tie,
        }
    }
}

/// Where a strand goes after entering a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dest {
    /// Cuts the angle at `corner`, anticlockwise when `forward`.
    Chord {
        corner: usize,
        forward: bool,
    },
    End(ArcEnd),
}

/// Which end of the second arc a crossing sits next to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Near {
    Start,
    End,
}

struct Found {
    from_first: bool,
    /// Ends of the first and of the second arc the crossing sits next to.
    near: [Vec<Near>; 2],
}

impl TiledSurface {
    /// Anticlockwise distance from the entry side, in quarter steps.
    fn dest_key(&self, tile: usize, entry: usize, d: Dest) -> Option<i64> {
        let len = self.tiles[tile].len() as i64;
        let dist = |m: usize| ((m as i64 - entry as i64) % len + len) % len;
        match d {
            Dest::Chord { corner, forward: true } => {
                let m = dist((corner + 1) % len as usize);
                Some(if m == 0 { 4 * len - 1 } else { 4 * m - 1 })
            }
            Dest::Chord { corner, forward: false } => {
                let m = dist((corner + len as usize - 1) % len as usize);
                Some(if m == 0 { 1 } else { 4 * m + 1 })
            }
            Dest::End(ArcEnd::Point(s)) => Some(4 * dist(s.index)),
            Dest::End(ArcEnd::Puncture(_)) => None,
        }
    }

    /// Side of strand `b` relative to strand `a`, both entering `tile`
    /// through the side at `entry`, seen by a traveller entering the tile.
    fn relative(&self, tile: usize, entry: usize, a: Dest, b: Dest) -> Rel {
        if a == b {
            return Rel::Tie;
        }
        match (self.dest_key(tile, entry, a), self.dest_key(tile, entry, b)) {
            (Some(ka), Some(kb)) => {
                if kb < ka {
                    Rel::Right
                } else {
                    Rel::Left
                }
            }
            // A spoke to the puncture passes outside the region an angle cuts off.
            (None, Some(_)) => match b {
                Dest::Chord { forward: true, .. } => Rel::Right,
                _ => Rel::Left,
            },
            (Some(_), None) => match a {
                Dest::Chord { forward: true, .. } => Rel::Left,
                _ => Rel::Right,
            },
            (None, None) => Rel::Tie,
        }
    }
}

fn forward_dest(arc: &ArcRealization, i: usize) -> Dest {
    if i + 1 < arc.crossings.len() {
        let s = arc.segments[i];
        Dest::Chord {
            corner: s.corner.index,
            forward: s.forward,
        }
    } else {
        Dest::End(arc.end)
    }
}

fn backward_dest(arc: &ArcRealization, i: usize) -> Dest {
    if i > 0 {
        let s = arc.segments[i - 1];
        Dest::Chord {
            corner: s.corner.index,
            forward: !s.forward,
        }
    } else {
        Dest::End(arc.start)
    }
}

fn is_red(ts: &TiledSurface, e: ArcEnd) -> bool {
    match e {
        ArcEnd::Puncture(_) => true,
        ArcEnd::Point(s) => ts.item(s) == TileItem::Red,
    }
}

/// An element of an arc inside a tile, for the interleaving test.
#[derive(Debug, Clone, Copy)]
enum Piece {
    /// End segment from a side to a point.
    End { side: usize, point: usize, near: Near },
    /// Segment hugging a corner.
    Hug { corner: usize },
}

fn pieces(ts: &TiledSurface, arc: &ArcRealization) -> Vec<(usize, Piece)> {
    let mut out = Vec::new();
    let c0 = arc.crossings[0];
    let cn = arc.crossings[arc.crossings.len() - 1];
    let s0 = ts.side(c0.arc, c0.from_end);
    let sn = ts.side(cn.arc, 1 - cn.from_end);
    if let ArcEnd::Point(p) = arc.start {
        out.push((
            s0.tile,
            Piece::End {
                side: s0.index,
                point: p.index,
                near: Near::Start,
            },
        ));
    }
    if let ArcEnd::Point(p) = arc.end {
        out.push((
            sn.tile,
            Piece::End {
                side: sn.index,
                point: p.index,
                near: Near::End,
            },
        ));
    }
    for s in &arc.segments {
        out.push((s.corner.tile, Piece::Hug { corner: s.corner.index }));
    }
    out
}

fn hug_sides(len: usize, corner: usize) -> [usize; 2] {
    [(corner + len - 1) % len, (corner + 1) % len]
}

/// True when `x` lies strictly inside the anticlockwise run from `a` to `b`.
fn between(len: usize, a: usize, b: usize, x: usize) -> bool {
    let d = |p: usize| (p + len - a) % len;
    d(x) > 0 && d(x) < d(b)
}

/// Crossings of two pieces sharing no side, with the direction flag
/// "from the first piece to the second".
fn piece_crossing(len: usize, p: Piece, r: Piece) -> Option<bool> {
    match (p, r) {
        (Piece::End { side, point, .. }, Piece::Hug { corner }) => {
            (point == corner && !hug_sides(len, corner).contains(&side)).then_some(true)
        }
        (Piece::Hug { corner }, Piece::End { side, point, .. }) => {
            (point == corner && !hug_sides(len, corner).contains(&side)).then_some(false)
        }
        (
            Piece::End {
                side: s1, point: p1, ..
            },
            Piece::End {
                side: s2, point: p2, ..
            },
        ) => {
            if s1 == s2 || p1 == p2 {
                return None;
            }
            let in1 = between(len, s1, p1, s2);
            let in2 = between(len, s1, p1, p2);
            (in1 != in2).then_some(in1)
        }
        (Piece::Hug { .. }, Piece::Hug { .. }) => None,
    }
}

fn shares_side(len: usize, p: Piece, r: Piece) -> bool {
    let sides = |x: Piece| -> Vec<usize> {
        match x {
            Piece::End { side, .. } => vec![side],
            Piece::Hug { corner } => hug_sides(len, corner).to_vec(),
        }
    };
    let a = sides(p);
    sides(r).iter().any(|s| a.contains(s))
}

/// Counts crossings and shared-endpoint intersections between `a` and `b`.
fn engine(ts: &TiledSurface, a: &ArcRealization, b: &ArcRealization) -> (CrossingReport, Vec<Found>) {
    let mut rep = CrossingReport::default();
    let mut found = Vec::new();
    let b_rev = b.reversed();
    let na = a.crossings.len();
    let nb = b.crossings.len();
    for i in 0..na {
        for j in 0..nb {
            let ca = a.crossings[i];
            let cb = b.crossings[j];
            if ca.arc != cb.arc {
                continue;
            }
            let (bb, jj, reversed) = if ca.from_end == cb.from_end {
                (b, j, false)
            } else {
                (&b_rev, nb - 1 - j, true)
            };
            if i > 0 && jj > 0 && a.segments[i - 1] == bb.segments[jj - 1] {
                continue;
            }
            let mut k = 0;
            while i + k + 1 < na && jj + k + 1 < nb && a.segments[i + k] == bb.segments[jj + k] {
                k += 1;
            }
            let back_side = ts.side(ca.arc, ca.from_end);
            let last = a.crossings[i + k];
            let fwd_side = ts.side(last.arc, 1 - last.from_end);
            let s_fwd = ts.relative(
                fwd_side.tile,
                fwd_side.index,
                forward_dest(a, i + k),
                forward_dest(bb, jj + k),
            );
            let s_bwd = ts
                .relative(
                    back_side.tile,
                    back_side.index,
                    backward_dest(a, i),
                    backward_dest(bb, jj),
                )
                .flip();
            // Ends of b (in its own orientation) the stretch runs into.
            let mut near = Vec::new();
            if jj + k + 1 == nb {
                near.push(if reversed { Near::Start } else { Near::End });
            }
            if jj == 0 {
                near.push(if reversed { Near::End } else { Near::Start });
            }
            let mut near_a = Vec::new();
            if i + k + 1 == na {
                near_a.push(Near::End);
            }
            if i == 0 {
                near_a.push(Near::Start);
            }
            match (s_fwd, s_bwd) {
                (Rel::Tie, Rel::Tie) => {
                    if is_red(ts, a.start) {
                        rep.i_forward += 2;
                        rep.i_backward += 2;
                    }
                }
                (Rel::Tie, s) | (s, Rel::Tie) => {
                    let toward = if s_fwd == Rel::Tie { s } else { s.flip() };
                    let point = if s_fwd == Rel::Tie { a.end } else { a.start };
                    if is_red(ts, point) {
                        if toward == Rel::Right {
                            rep.i_forward += 1;
                        } else {
                            rep.i_backward += 1;
                        }
                    }
                }
                (f, g) if f != g => {
                    let from_first = f == Rel::Left;
                    if from_first {
                        rep.c_forward += 1;
                    } else {
                        rep.c_backward += 1;
                    }
                    found.push(Found {
                        from_first,
                        near: [near_a, near],
                    });
                }
                _ => {}
            }
        }
    }
    if a.kind != ArcKind::R {
        let pa = pieces(ts, a);
        let pb = pieces(ts, b);
        for &(ta, x) in &pa {
            for &(tb, y) in &pb {
                if ta != tb {
                    continue;
                }
                let len = ts.tiles[ta].len();
                if shares_side(len, x, y) {
                    continue;
                }
                if let Some(dir) = piece_crossing(len, x, y) {
                    let from_first = dir != NON_STRETCH_FLIP;
                    if from_first {
                        rep.c_forward += 1;
                    } else {
                        rep.c_backward += 1;
                    }
                    let near_of = |p: Piece| match p {
                        Piece::End { near, .. } => vec![near],
                        Piece::Hug { .. } => Vec::new(),
                    };
                    found.push(Found {
                        from_first,
                        near: [near_of(x), near_of(y)],
                    });
                }
            }
        }
    }
    (rep, found)
}

/// Orientation convention for crossings outside common stretches.
const NON_STRETCH_FLIP: bool = true;

/// Crossings and traversed intersections of two R-arcs.
pub fn crossings_r(ts: &TiledSurface, a: &ArcRealization, b: &ArcRealization) -> CrossingReport {
    engine(ts, a, b).0
}

/// Crossings of two clockwise-most M-arcs, with good crossings classified.
pub fn crossings_m(ts: &TiledSurface, alg: &StringAlgebra, a: &ArcRealization, b: &ArcRealization) -> CrossingReport {
    let (mut rep, found) = engine(ts, a, b);
    for f in &found {
        let (m, n, near) = if f.from_first {
            (a, b, &f.near[1])
        } else {
            (b, a, &f.near[0])
        };
        let count = good_labels(ts, alg, m, n, near);
        if count > 0 {
            if f.from_first {
                rep.good_forward += 1;
            } else {
                rep.good_backward += 1;
            }
            if count > 1 {
                rep.ambiguous_good += 1;
            }
        }
    }
    rep
}

/// Number of labels making a crossing from `m` to `n` good, reading `n`
/// toward each end the crossing sits next to.
fn good_labels(ts: &TiledSurface, alg: &StringAlgebra, m: &ArcRealization, n: &ArcRealization, near: &[Near]) -> usize {
    let crossed: Vec<VertexId> = m.crossings.iter().map(|c| c.arc).collect();
    near.iter()
        .map(|e| {
            let word = match e {
                Near::End => n.word.clone(),
                Near::Start => n.word.inverse(),
            };
            label_completions(ts, alg, &word, &crossed)
        })
        .sum()
}

/// Labels `a_1 .. a_r` such that `w` ends with `a_1 .. a_{r-1}` and `t(a_r)`
/// is among `crossed`.
fn label_completions(ts: &TiledSurface, alg: &StringAlgebra, w: &StringWord, crossed: &[VertexId]) -> usize {
    let letters: &[Letter] = match w {
        StringWord::Word(l) => l,
        _ => return 0,
    };
    let q = alg.quiver();
    let mut count = 0;
    for label in &ts.labels {
        let r = label.path.len();
        if r < 2 || r - 1 > letters.len() {
            continue;
        }
        let tail = &letters[letters.len() - (r - 1)..];
        let matches = tail
            .iter()
            .zip(&label.path[..r - 1])
            .all(|(l, &x)| !l.inverse && l.arrow == x);
        if matches && crossed.contains(&q.target(label.path[r - 1])) {
            count += 1;
        }
    }
    count
}
