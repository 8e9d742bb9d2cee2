//! Canonical JSON and DOT renderings of a tiled surface.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::quiver::Quiver;

use super::arcs::{ArcEnd, ArcRealization};
use super::{SurfaceInvariants, TileItem, TileKind, TiledSurface};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FanDoc {
    /// Arc ends in clockwise order, as `vertex:end`.
    pub ports: Vec<String>,
    pub arrows: Vec<String>,
    pub puncture: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TileDoc {
    pub kind: TileKind,
    /// Boundary items read anticlockwise.
    pub items: Vec<String>,
    pub thread: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelDoc {
    pub fan: usize,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceDoc {
    pub invariants: SurfaceInvariants,
    pub fans: Vec<FanDoc>,
    pub tiles: Vec<TileDoc>,
    pub labels: Vec<LabelDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CrossingDoc {
    pub arc: String,
    pub from_end: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ArcDoc {
    pub string: String,
    pub kind: String,
    /// Arcs of P crossed, in order.
    pub crossings: Vec<CrossingDoc>,
    /// Angles cut between consecutive crossings, as letters.
    pub angles: Vec<String>,
    pub start: String,
    pub end: String,
}

impl TiledSurface {
    fn end_text(&self, q: &Quiver, e: ArcEnd) -> String {
        match e {
            ArcEnd::Point(s) => format!("tile {} {}", s.tile, self.item_text(q, self.item(s))),
            ArcEnd::Puncture(t) => format!("tile {t} puncture"),
        }
    }

    pub fn arc_doc(&self, q: &Quiver, arc: &ArcRealization) -> ArcDoc {
        ArcDoc {
            string: arc.word.display(q),
            kind: format!("{:?}", arc.kind),
            crossings: arc
                .crossings
                .iter()
                .map(|c| CrossingDoc {
                    arc: q.vertex_name(c.arc).to_string(),
                    from_end: c.from_end,
                })
                .collect(),
            angles: arc
                .word
                .letters()
                .iter()
                .map(|l| {
                    let name = &q.arrow(l.arrow).name;
                    if l.inverse {
                        format!("{name}^-1")
                    } else {
                        name.clone()
                    }
                })
                .collect(),
            start: self.end_text(q, arc.start),
            end: self.end_text(q, arc.end),
        }
    }

    fn item_text(&self, q: &Quiver, it: TileItem) -> String {
        match it {
            TileItem::Corner { fan, arrow: Some(a) } => format!("corner {fan} {}", q.arrow(a).name),
            TileItem::Corner { fan, arrow: None } => format!("corner {fan}"),
            TileItem::Side { port } => format!("side {}:{}", q.vertex_name(port.arc), port.end),
            TileItem::Boundary => "boundary".into(),
            TileItem::Red => "red".into(),
        }
    }

    pub fn to_doc(&self, q: &Quiver) -> SurfaceDoc {
        SurfaceDoc {
            invariants: self.invariants(),
            fans: self
                .fans
                .iter()
                .map(|f| FanDoc {
                    ports: f
                        .ports
                        .iter()
                        .map(|p| format!("{}:{}", q.vertex_name(p.arc), p.end))
                        .collect(),
                    arrows: f.arrows.iter().map(|&a| q.arrow(a).name.to_string()).collect(),
                    puncture: f.cyclic,
                })
                .collect(),
            tiles: self
                .tiles
                .iter()
                .map(|t| TileDoc {
                    kind: t.kind,
                    items: t.items.iter().map(|&it| self.item_text(q, it)).collect(),
                    thread: t.thread.iter().map(|&a| q.arrow(a).name.to_string()).collect(),
                })
                .collect(),
            labels: self
                .labels
                .iter()
                .map(|l| LabelDoc {
                    fan: l.fan,
                    path: l.path.iter().map(|&a| q.arrow(a).name.to_string()).collect(),
                })
                .collect(),
        }
    }

    /// Ribbon graph sketch: marked points as nodes, arcs of P as edges.
    pub fn to_dot(&self, q: &Quiver) -> String {
        let mut out = String::from("graph surface {\n");
        for (i, f) in self.fans.iter().enumerate() {
            let shape = if f.cyclic { "doublecircle" } else { "circle" };
            let _ = writeln!(out, "  m{i} [shape={shape}];");
        }
        for (t, tile) in self.tiles.iter().enumerate() {
            let shape = if tile.kind == TileKind::Punctured {
                "doublecircle"
            } else {
                "point"
            };
            let _ = writeln!(out, "  r{t} [shape={shape}, color=red];");
        }
        for v in 0..self.arc_count() {
            let a = self.port_fan(super::Port { arc: v, end: 0 }).0;
            let b = self.port_fan(super::Port { arc: v, end: 1 }).0;
            let _ = writeln!(out, "  m{a} -- m{b} [label=\"{}\"];", q.vertex_name(v));
        }
        out.push_str("}\n");
        out
    }
}
