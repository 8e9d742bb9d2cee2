use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::VertexId;
use crate::strings::StringAlgebra;
use crate::word::{Band, Letter, StringWord};

use super::{Port, Slot, TileItem, TileKind, TiledSurface};

/// Which representative of an equivalence class of permissible arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ArcKind {
    /// Both ends at red points.
    R,
    /// Clockwise-most M-arc.
    ClockwiseM,
    /// Anticlockwise-most M-arc.
    AnticlockwiseM,
}

/// Where an arc ends: a point on a tile boundary (a corner or a boundary red
/// point) or the red puncture inside a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcEnd {
    Point(Slot),
    Puncture(usize),
}

impl ArcEnd {
    pub fn tile(self) -> usize {
        match self {
            ArcEnd::Point(s) => s.tile,
            ArcEnd::Puncture(t) => t,
        }
    }
}

/// Crossing of an arc of P, entering from the side traversed from `from_end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub arc: VertexId,
    pub from_end: u8,
}

/// A segment inside one tile between two consecutive crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    /// Corner of the angle that is cut.
    pub corner: Slot,
    /// True when the angle is cut anticlockwise around the tile, from the
    /// side before the corner to the side after it.
    pub forward: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcRealization {
    pub word: StringWord,
    pub kind: ArcKind,
    pub crossings: Vec<Crossing>,
    pub segments: Vec<Segment>,
    pub start: ArcEnd,
    pub end: ArcEnd,
}

/// A permissible arc, an arc of P, or a boundary segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcValue {
    Arc(ArcRealization),
    PArc(VertexId),
    BoundarySegment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedCurve {
    pub band: Band,
    pub crossings: Vec<Crossing>,
    pub segments: Vec<Segment>,
}

impl ArcRealization {
    pub fn reversed(&self) -> ArcRealization {
        ArcRealization {
            word: self.word.inverse(),
            kind: self.kind,
            crossings: self
                .crossings
                .iter()
                .rev()
                .map(|c| Crossing {
                    arc: c.arc,
                    from_end: 1 - c.from_end,
                })
                .collect(),
            segments: self
                .segments
                .iter()
                .rev()
                .map(|s| Segment {
                    corner: s.corner,
                    forward: !s.forward,
                })
                .collect(),
            start: self.end,
            end: self.start,
        }
    }

    /// Number of crossings with each arc of P.
    pub fn intersection_vector(&self, arcs: usize) -> Vec<usize> {
        let mut v = vec![0; arcs];
        for c in &self.crossings {
            v[c.arc] += 1;
        }
        v
    }
}

impl TiledSurface {
    /// Side of the first vertex of a letter in the tile of its angle.
    pub(crate) fn letter_exit(&self, alg: &StringAlgebra, l: Letter) -> Port {
        let q = alg.quiver();
        let a = l.arrow;
        if l.inverse {
            self.head_port(a, q.target(a))
        } else {
            self.tail_port(a, q.source(a)).other()
        }
    }

    /// Side of the last vertex of a letter in the tile of its angle.
    pub(crate) fn letter_entry(&self, alg: &StringAlgebra, l: Letter) -> Port {
        let q = alg.quiver();
        let a = l.arrow;
        if l.inverse {
            self.tail_port(a, q.source(a)).other()
        } else {
            self.head_port(a, q.target(a))
        }
    }

    fn segment_of(&self, l: Letter) -> Segment {
        Segment {
            corner: self.arrow_corner(l.arrow),
            forward: !l.inverse,
        }
    }

    /// The end of a trivial arc of sign `sign` at `v` it enters from.
    fn trivial_from_end(&self, alg: &StringAlgebra, v: VertexId, sign: i8) -> u8 {
        let q = alg.quiver();
        let mut starting: Vec<Letter> = q.out_arrows(v).into_iter().map(Letter::direct).collect();
        starting.extend(q.in_arrows(v).into_iter().map(Letter::inv));
        if let Some(l) = starting.iter().find(|&&l| alg.letter_sigma(l) == -sign) {
            return 1 - self.letter_exit(alg, *l).end;
        }
        if let Some(l) = starting.iter().find(|&&l| alg.letter_sigma(l) == sign) {
            return self.letter_exit(alg, *l).end;
        }
        if sign > 0 {
            0
        } else {
            1
        }
    }

    /// Endpoint of an end segment leaving the tile through `side`.
    pub(crate) fn end_point(&self, side: Slot, kind: ArcKind) -> ArcEnd {
        let tile = &self.tiles[side.tile];
        match kind {
            ArcKind::R => match tile.kind {
                TileKind::Boundary => ArcEnd::Point(Slot {
                    tile: side.tile,
                    index: tile.red_index().unwrap_or(0),
                }),
                TileKind::Punctured => ArcEnd::Puncture(side.tile),
            },
            ArcKind::ClockwiseM => self.m_end(side, 1),
            ArcKind::AnticlockwiseM => self.m_end(side, -1),
        }
    }

    /// The marked point three steps from `side`, reading the boundary arc
    /// through the red point as a single side. When that point is adjacent
    /// to `side` in a boundary tile, the arc ends at the red point instead.
    fn m_end(&self, side: Slot, dir: i64) -> ArcEnd {
        let tile = &self.tiles[side.tile];
        let len = tile.len() as i64;
        let at = |k: i64| tile.item((((side.index as i64 + k) % len + len) % len) as usize);
        let mut k = 0i64;
        let mut steps = 0;
        while steps < 3 {
            k += dir;
            if at(k) == TileItem::Boundary {
                k += 2 * dir;
            }
            steps += 1;
        }
        let index = (((side.index as i64 + k) % len + len) % len) as usize;
        let adjacent = (((side.index as i64 - dir) % len + len) % len) as usize;
        if tile.kind == TileKind::Boundary && index == adjacent {
            let red = tile.red_index().unwrap_or(0);
            return ArcEnd::Point(Slot {
                tile: side.tile,
                index: red,
            });
        }
        ArcEnd::Point(Slot { tile: side.tile, index })
    }

    /// Realizes a non-zero string as a permissible arc of the given kind.
    pub fn realize_arc(&self, alg: &StringAlgebra, w: &StringWord, kind: ArcKind) -> Result<ArcRealization> {
        let (crossings, segments) = match w {
            StringWord::Zero => {
                return Err(Error::BadString {
                    text: "0".into(),
                    message: "the zero string is an arc of P, not a permissible arc".into(),
                })
            }
            StringWord::Trivial { vertex, sign } => (
                vec![Crossing {
                    arc: *vertex,
                    from_end: self.trivial_from_end(alg, *vertex, *sign),
                }],
                Vec::new(),
            ),
            StringWord::Word(letters) => {
                let mut crossings = Vec::with_capacity(letters.len() + 1);
                let first = self.letter_exit(alg, letters[0]);
                crossings.push(Crossing {
                    arc: first.arc,
                    from_end: 1 - first.end,
                });
                for &l in letters {
                    let p = self.letter_entry(alg, l);
                    crossings.push(Crossing {
                        arc: p.arc,
                        from_end: p.end,
                    });
                }
                (crossings, letters.iter().map(|&l| self.segment_of(l)).collect())
            }
        };
        let c0 = crossings[0];
        let cn = crossings[crossings.len() - 1];
        let start = self.end_point(self.side(c0.arc, c0.from_end), kind);
        let end = self.end_point(self.side(cn.arc, 1 - cn.from_end), kind);
        Ok(ArcRealization {
            word: w.clone(),
            kind,
            crossings,
            segments,
            start,
            end,
        })
    }

    /// Reads the string back from the angles an arc cuts.
    pub fn string_of(&self, alg: &StringAlgebra, arc: &ArcRealization) -> StringWord {
        if arc.segments.is_empty() {
            let c = arc.crossings[0];
            let sign = if self.trivial_from_end(alg, c.arc, 1) == c.from_end {
                1
            } else {
                -1
            };
            return StringWord::trivial(c.arc, sign);
        }
        StringWord::Word(arc.segments.iter().map(|s| self.letter_of(*s)).collect())
    }

    fn letter_of(&self, s: Segment) -> Letter {
        let a = match self.item(s.corner) {
            TileItem::Corner { arrow: Some(a), .. } => a,
            _ => unreachable!("segments cut angles"),
        };
        if s.forward {
            Letter::direct(a)
        } else {
            Letter::inv(a)
        }
    }

    /// Realizes a band as a closed curve.
    pub fn realize_closed_curve(&self, alg: &StringAlgebra, b: &Band) -> ClosedCurve {
        let crossings =
            b.0.iter()
                .map(|&l| {
                    let p = self.letter_entry(alg, l);
                    Crossing {
                        arc: p.arc,
                        from_end: p.end,
                    }
                })
                .collect();
        ClosedCurve {
            band: b.clone(),
            crossings,
            segments: b.0.iter().map(|&l| self.segment_of(l)).collect(),
        }
    }

    /// Reads the band back from a closed curve.
    pub fn band_of(&self, c: &ClosedCurve) -> Band {
        let letters: Vec<Letter> = c.segments.iter().map(|s| self.letter_of(*s)).collect();
        Band::canonical(&letters)
    }
}
