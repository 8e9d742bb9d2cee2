//! The labelled tiled surface of a string algebra, built combinatorially as a
//! ribbon graph: arcs of the dissection are the vertices of the quiver, fans
//! are maximal permitted threads, tiles are maximal forbidden threads.

mod arcs;
mod build;
mod cross;
mod export;
mod pivot;

pub use arcs::{ArcEnd, ArcKind, ArcRealization, ArcValue, ClosedCurve, Crossing, Segment};
pub use build::build_surface;
pub use cross::{crossings_m, crossings_r, CrossingReport};
pub use export::{ArcDoc, CrossingDoc, FanDoc, LabelDoc, SurfaceDoc, TileDoc};

use serde::{Deserialize, Serialize};

use crate::quiver::{ArrowId, VertexId};

/// An arc end: `end` is 0 or 1, both ends of a loop are distinct ports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Port {
    pub arc: VertexId,
    pub end: u8,
}

impl Port {
    pub fn other(self) -> Port {
        Port {
            arc: self.arc,
            end: 1 - self.end,
        }
    }
}

/// The arc ends around a marked point of M in clockwise order. `arrows[i]`
/// is the angle from `ports[i]` to the next port; a cyclic fan is a puncture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    pub ports: Vec<Port>,
    pub arrows: Vec<ArrowId>,
    pub cyclic: bool,
}

/// One item of a tile boundary, read anticlockwise. Points and sides
/// alternate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileItem {
    /// A corner at the marked point `fan`; `arrow` is the angle, or `None`
    /// where a fan meets the boundary.
    Corner { fan: usize, arrow: Option<ArrowId> },
    /// The side of an arc reached through `port`, traversed from that end.
    Side { port: Port },
    /// A boundary segment between an M-point and the red point.
    Boundary,
    /// The red point on the boundary of a boundary tile.
    Red,
}

impl TileItem {
    pub fn is_point(self) -> bool {
        matches!(self, TileItem::Corner { .. } | TileItem::Red)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TileKind {
    /// Two consecutive boundary segments carrying a red marked point.
    Boundary,
    /// No boundary; the red point is an interior puncture.
    Punctured,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub kind: TileKind,
    pub items: Vec<TileItem>,
    /// The forbidden thread read along the tile.
    pub thread: Vec<ArrowId>,
}

impl Tile {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn item(&self, i: usize) -> TileItem {
        self.items[i % self.items.len()]
    }

    pub fn side_count(&self) -> usize {
        self.items
            .iter()
            .filter(|it| matches!(it, TileItem::Side { .. }))
            .count()
    }

    pub fn red_index(&self) -> Option<usize> {
        self.items.iter().position(|it| *it == TileItem::Red)
    }
}

/// A label: `len` consecutive ports of fan `fan` starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub fan: usize,
    pub start: usize,
    pub len: usize,
    pub path: Vec<ArrowId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceInvariants {
    pub arc_count: usize,
    pub boundary_tiles: usize,
    pub punctured_tiles: usize,
    pub m_punctures: usize,
    pub r_punctures: usize,
    pub boundary_m_points: usize,
    pub boundary_r_points: usize,
    pub boundary_components: usize,
    pub euler_characteristic: i64,
    pub genus: i64,
}

/// Position of an item inside a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slot {
    pub tile: usize,
    pub index: usize,
}

#[derive(Debug, Clone)]
pub struct TiledSurface {
    pub fans: Vec<Fan>,
    pub tiles: Vec<Tile>,
    pub labels: Vec<Label>,
    arrow_fan: Vec<(usize, usize)>,
    arrow_corner: Vec<Slot>,
    side_slot: Vec<[Slot; 2]>,
    port_fan: Vec<[(usize, usize); 2]>,
    head_end: Vec<u8>,
    tail_end: Vec<u8>,
}

impl TiledSurface {
    pub fn arc_count(&self) -> usize {
        self.side_slot.len()
    }

    /// Fan and position of the angle of an arrow.
    pub fn arrow_fan(&self, a: ArrowId) -> (usize, usize) {
        self.arrow_fan[a]
    }

    /// Tile slot of the corner of an arrow.
    pub fn arrow_corner(&self, a: ArrowId) -> Slot {
        self.arrow_corner[a]
    }

    /// Tile slot of the side of `arc` traversed from `end`.
    pub fn side(&self, arc: VertexId, end: u8) -> Slot {
        self.side_slot[arc][end as usize]
    }

    /// Fan and position of an arc end.
    pub fn port_fan(&self, p: Port) -> (usize, usize) {
        self.port_fan[p.arc][p.end as usize]
    }

    /// The arc end carrying the head of an arrow.
    pub fn head_port(&self, a: ArrowId, target: VertexId) -> Port {
        Port {
            arc: target,
            end: self.head_end[a],
        }
    }

    /// The arc end carrying the tail of an arrow.
    pub fn tail_port(&self, a: ArrowId, source: VertexId) -> Port {
        Port {
            arc: source,
            end: self.tail_end[a],
        }
    }

    pub fn item(&self, s: Slot) -> TileItem {
        self.tiles[s.tile].item(s.index)
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        let boundary_tiles = self.tiles.iter().filter(|t| t.kind == TileKind::Boundary).count();
        let punctured_tiles = self.tiles.len() - boundary_tiles;
        let m_punctures = self.fans.iter().filter(|f| f.cyclic).count();
        let boundary_m_points = self.fans.len() - m_punctures;
        let arcs = self.arc_count() as i64;
        let m = self.fans.len() as i64;
        let r_bd = boundary_tiles as i64;
        let euler = m + r_bd - arcs - 2 * r_bd + self.tiles.len() as i64;
        let b = self.boundary_components();
        let genus = (2 - b as i64 - euler) / 2;
        SurfaceInvariants {
            arc_count: self.arc_count(),
            boundary_tiles,
            punctured_tiles,
            m_punctures,
            r_punctures: punctured_tiles,
            boundary_m_points,
            boundary_r_points: boundary_tiles,
            boundary_components: b,
            euler_characteristic: euler,
            genus,
        }
    }

    /// Boundary components, traced through the boundary tiles: each links
    /// the fan it leaves from to the fan it returns to.
    pub fn boundary_components(&self) -> usize {
        let n = self.fans.len();
        let mut next = vec![usize::MAX; n];
        for t in &self.tiles {
            if t.kind != TileKind::Boundary {
                continue;
            }
            let first = match t.items[0] {
                TileItem::Corner { fan, .. } => fan,
                _ => continue,
            };
            let last = t
                .items
                .iter()
                .rev()
                .find_map(|it| match it {
                    TileItem::Corner { fan, .. } => Some(*fan),
                    _ => None,
                })
                .unwrap_or(first);
            next[last] = first;
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] || next[start] == usize::MAX {
                continue;
            }
            count += 1;
            let mut f = start;
            while !seen[f] {
                seen[f] = true;
                f = next[f];
                if f == usize::MAX {
                    break;
                }
            }
        }
        count
    }
}
