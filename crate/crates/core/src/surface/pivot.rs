//! Pivot elementary moves and the inverse translate on arcs.
//!
//! A pivot at the start of an arc either swings the start segment around the
//! neighbouring marked points, cutting one more angle forward and then as
//! many angles backward as the labels and tiles allow, or, when no angle is
//! available, retracts the start past the first backward cut.

use crate::quiver::ArrowId;
use crate::strings::StringAlgebra;

use super::arcs::{ArcRealization, ArcValue, Crossing, Segment};
use super::{Slot, TileItem, TileKind, TiledSurface};

impl TiledSurface {
    /// True when the direct path avoids every tile relation and label.
    pub fn path_allowed(&self, path: &[ArrowId]) -> bool {
        for t in &self.tiles {
            let m = t.thread.len();
            let pairs = match t.kind {
                TileKind::Boundary => m.saturating_sub(1),
                TileKind::Punctured => m,
            };
            for i in 0..pairs {
                let (x, y) = (t.thread[i], t.thread[(i + 1) % m]);
                if path.windows(2).any(|w| w[0] == x && w[1] == y) {
                    return false;
                }
            }
        }
        !self
            .labels
            .iter()
            .any(|l| path.windows(l.path.len()).any(|w| w == l.path.as_slice()))
    }

    fn corner_arrow(&self, s: Slot) -> Option<ArrowId> {
        match self.item(s) {
            TileItem::Corner { arrow, .. } => arrow,
            _ => None,
        }
    }

    fn offset(&self, s: Slot, k: i64) -> Slot {
        let len = self.tiles[s.tile].len() as i64;
        Slot {
            tile: s.tile,
            index: (((s.index as i64 + k) % len + len) % len) as usize,
        }
    }

    /// Crossing of the arc whose side sits at `s`, arriving at that side.
    fn crossing_into(&self, s: Slot) -> Crossing {
        match self.item(s) {
            TileItem::Side { port } => Crossing {
                arc: port.arc,
                from_end: 1 - port.end,
            },
            _ => unreachable!("cuts run between sides"),
        }
    }

    /// Pivot elementary move at the start of the arc.
    pub fn pivot_ft(&self, alg: &StringAlgebra, arc: &ArcRealization) -> ArcValue {
        let entry = self.side(arc.crossings[0].arc, arc.crossings[0].from_end);
        let direct_prefix = |segs: &[Segment]| -> Vec<ArrowId> {
            segs.iter()
                .take_while(|s| s.forward)
                .filter_map(|s| self.corner_arrow(s.corner))
                .collect()
        };
        let corner = self.offset(entry, -1);
        if let Some(a) = self.corner_arrow(corner) {
            let mut run = vec![a];
            run.extend(direct_prefix(&arc.segments));
            if self.path_allowed(&run) {
                // Add the angle forward, then swing backward as far as possible.
                let mut crossings = vec![self.crossing_into(self.offset(entry, -2))];
                let mut segments = vec![Segment { corner, forward: true }];
                let mut hook: Vec<ArrowId> = Vec::new();
                loop {
                    let c = crossings[0];
                    let before = self.side(c.arc, c.from_end);
                    let next = self.offset(before, 1);
                    let b = match self.corner_arrow(next) {
                        Some(b) => b,
                        None => break,
                    };
                    let mut path = hook.clone();
                    path.push(b);
                    if !self.path_allowed(&path) || (hook.is_empty() && b == a) {
                        break;
                    }
                    hook = path;
                    crossings.insert(0, self.crossing_into(self.offset(before, 2)));
                    segments.insert(
                        0,
                        Segment {
                            corner: next,
                            forward: false,
                        },
                    );
                }
                crossings.extend(arc.crossings.iter().copied());
                segments.extend(arc.segments.iter().copied());
                return ArcValue::Arc(self.finish(alg, arc, crossings, segments));
            }
        }
        // Retract past the first backward cut.
        match arc.segments.iter().position(|s| !s.forward) {
            Some(j) => {
                let crossings = arc.crossings[j + 1..].to_vec();
                let segments = arc.segments[j + 1..].to_vec();
                ArcValue::Arc(self.finish(alg, arc, crossings, segments))
            }
            None => ArcValue::BoundarySegment,
        }
    }

    /// Pivot elementary move at the end of the arc.
    pub fn pivot_fs(&self, alg: &StringAlgebra, arc: &ArcRealization) -> ArcValue {
        match self.pivot_ft(alg, &arc.reversed()) {
            ArcValue::Arc(r) => ArcValue::Arc(r.reversed()),
            other => other,
        }
    }

    /// The arc of the inverse translate: both pivots, or the arc of P at
    /// `v` when the module is the injective at `v`.
    pub fn tau_inverse_arc(&self, alg: &StringAlgebra, arc: &ArcRealization) -> ArcValue {
        if let Some(v) = alg.injective_vertex(&arc.word) {
            return ArcValue::PArc(v);
        }
        match self.pivot_fs(alg, arc) {
            ArcValue::Arc(fs) => self.pivot_ft(alg, &fs),
            _ => match self.pivot_ft(alg, arc) {
                ArcValue::Arc(ft) => self.pivot_fs(alg, &ft),
                other => other,
            },
        }
    }

    fn finish(
        &self,
        alg: &StringAlgebra,
        arc: &ArcRealization,
        crossings: Vec<Crossing>,
        segments: Vec<Segment>,
    ) -> ArcRealization {
        let c0 = crossings[0];
        let cn = crossings[crossings.len() - 1];
        let mut out = ArcRealization {
            word: arc.word.clone(),
            kind: arc.kind,
            start: self.end_point(self.side(c0.arc, c0.from_end), arc.kind),
            end: self.end_point(self.side(cn.arc, 1 - cn.from_end), arc.kind),
            crossings,
            segments,
        };
        out.word = self.string_of(alg, &out);
        out
    }
}
