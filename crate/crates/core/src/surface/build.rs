use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::presentation::BoundPresentation;
use crate::quiver::{ArrowId, PathWord};
use crate::split::GentleSplit;

use super::{Fan, Label, Port, Slot, Tile, TileItem, TileKind, TiledSurface};

/// Builds the tiled surface of a gentle split and checks that it gives back
/// the presentation.
pub fn build_surface(pres: &BoundPresentation, split: &GentleSplit) -> Result<TiledSurface> {
    let q = pres.quiver();
    let n = q.vertex_count();
    let forbidden = |a: ArrowId, b: ArrowId| split.is_gentle_relation(a, b);

    // Arc ends: an incoming and an outgoing arrow share an end exactly when
    // their composition is permitted.
    let mut head_end = vec![0u8; q.arrow_count()];
    let mut tail_end = vec![0u8; q.arrow_count()];
    for v in 0..n {
        let ins = q.in_arrows(v);
        let outs = q.out_arrows(v);
        let mut groups: Vec<(Option<ArrowId>, Option<ArrowId>)> = Vec::new();
        let mut used_out = BTreeSet::new();
        for &a in &ins {
            let partner = outs
                .iter()
                .copied()
                .find(|&b| !forbidden(a, b) && !used_out.contains(&b));
            if let Some(b) = partner {
                used_out.insert(b);
            }
            groups.push((Some(a), partner));
        }
        for &b in &outs {
            if !used_out.contains(&b) {
                groups.push((None, Some(b)));
            }
        }
        if groups.len() > 2 {
            return Err(Error::Internal(format!(
                "vertex {} needs more than two arc ends",
                q.vertex_name(v)
            )));
        }
        for (e, (a, b)) in groups.iter().enumerate() {
            if let Some(a) = a {
                head_end[*a] = e as u8;
            }
            if let Some(b) = b {
                tail_end[*b] = e as u8;
            }
        }
    }

    let mut out_at: BTreeMap<Port, ArrowId> = BTreeMap::new();
    let mut in_at: BTreeMap<Port, ArrowId> = BTreeMap::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        let tail = Port {
            arc: arrow.source,
            end: tail_end[a],
        };
        let head = Port {
            arc: arrow.target,
            end: head_end[a],
        };
        if out_at.insert(tail, a).is_some() || in_at.insert(head, a).is_some() {
            return Err(Error::Internal("two angles share an arc end".into()));
        }
    }
    let next_port = |p: Port| -> Option<(ArrowId, Port)> {
        out_at.get(&p).map(|&a| {
            (
                a,
                Port {
                    arc: q.target(a),
                    end: head_end[a],
                },
            )
        })
    };

    // Fans: maximal permitted threads, open ones first.
    let all_ports: Vec<Port> = (0..n)
        .flat_map(|v| (0..2u8).map(move |e| Port { arc: v, end: e }))
        .collect();
    let mut fans: Vec<Fan> = Vec::new();
    let mut port_fan = vec![[(usize::MAX, 0usize); 2]; n];
    let mut seen: BTreeSet<Port> = BTreeSet::new();
    for &p in &all_ports {
        if in_at.contains_key(&p) {
            continue;
        }
        let mut ports = vec![p];
        let mut arrows = Vec::new();
        let mut cur = p;
        while let Some((a, nxt)) = next_port(cur) {
            arrows.push(a);
            ports.push(nxt);
            cur = nxt;
        }
        seen.extend(ports.iter().copied());
        fans.push(Fan {
            ports,
            arrows,
            cyclic: false,
        });
    }
    for &p in &all_ports {
        if seen.contains(&p) {
            continue;
        }
        let mut ports = vec![p];
        let mut arrows = Vec::new();
        let mut cur = p;
        loop {
            let (a, nxt) = next_port(cur).ok_or_else(|| Error::Internal("broken fan".into()))?;
            arrows.push(a);
            if nxt == p {
                break;
            }
            ports.push(nxt);
            cur = nxt;
        }
        seen.extend(ports.iter().copied());
        fans.push(Fan {
            ports,
            arrows,
            cyclic: true,
        });
    }
    let mut arrow_fan = vec![(usize::MAX, 0); q.arrow_count()];
    for (f, fan) in fans.iter().enumerate() {
        for (i, p) in fan.ports.iter().enumerate() {
            port_fan[p.arc][p.end as usize] = (f, i);
        }
        for (i, &a) in fan.arrows.iter().enumerate() {
            arrow_fan[a] = (f, i);
        }
    }

    // Tiles: walk corners, crossing each arc to its other end.
    let mut tiles: Vec<Tile> = Vec::new();
    let mut corner_done = vec![false; q.arrow_count()];
    for (f, fan) in fans.iter().enumerate() {
        if fan.cyclic {
            continue;
        }
        let mut items = vec![TileItem::Corner { fan: f, arrow: None }];
        let mut thread = Vec::new();
        let mut entry = fan.ports[0];
        loop {
            items.push(TileItem::Side { port: entry });
            let arrive = entry.other();
            let (af, _) = port_fan[arrive.arc][arrive.end as usize];
            match next_port(arrive) {
                Some((a, nxt)) => {
                    corner_done[a] = true;
                    thread.push(a);
                    items.push(TileItem::Corner {
                        fan: af,
                        arrow: Some(a),
                    });
                    entry = nxt;
                }
                None => {
                    items.push(TileItem::Corner { fan: af, arrow: None });
                    break;
                }
            }
        }
        items.extend([TileItem::Boundary, TileItem::Red, TileItem::Boundary]);
        tiles.push(Tile {
            kind: TileKind::Boundary,
            items,
            thread,
        });
    }
    for a0 in 0..q.arrow_count() {
        if corner_done[a0] {
            continue;
        }
        let mut items = Vec::new();
        let mut thread = Vec::new();
        let mut a = a0;
        loop {
            corner_done[a] = true;
            thread.push(a);
            let (af, _) = arrow_fan[a];
            items.push(TileItem::Corner {
                fan: af,
                arrow: Some(a),
            });
            let entry = Port {
                arc: q.target(a),
                end: head_end[a],
            };
            items.push(TileItem::Side { port: entry });
            match next_port(entry.other()) {
                Some((b, _)) if b == a0 => break,
                Some((b, _)) => a = b,
                None => return Err(Error::Internal("open thread left over".into())),
            }
        }
        // Start the cycle at a side so that points sit at odd positions.
        items.rotate_left(1);
        thread.rotate_left(1);
        tiles.push(Tile {
            kind: TileKind::Punctured,
            items,
            thread,
        });
    }

    let mut side_slot = vec![
        [Slot {
            tile: usize::MAX,
            index: 0
        }; 2];
        n
    ];
    let mut arrow_corner = vec![
        Slot {
            tile: usize::MAX,
            index: 0
        };
        q.arrow_count()
    ];
    for (t, tile) in tiles.iter().enumerate() {
        for (i, it) in tile.items.iter().enumerate() {
            match *it {
                TileItem::Side { port } => side_slot[port.arc][port.end as usize] = Slot { tile: t, index: i },
                TileItem::Corner { arrow: Some(a), .. } => arrow_corner[a] = Slot { tile: t, index: i },
                _ => {}
            }
        }
    }
    if side_slot.iter().flatten().any(|s| s.tile == usize::MAX) {
        return Err(Error::Internal("an arc side lies in no tile".into()));
    }

    let mut labels = Vec::new();
    for rel in &split.label_relations {
        let (f, start) = arrow_fan[rel.0[0]];
        let fan = &fans[f];
        let k = fan.arrows.len();
        for (i, &a) in rel.0.iter().enumerate() {
            let pos = if fan.cyclic { (start + i) % k } else { start + i };
            if pos >= k || fan.arrows[pos] != a {
                return Err(Error::Internal(format!(
                    "label {} is not a fan segment",
                    rel.display(q)
                )));
            }
        }
        labels.push(Label {
            fan: f,
            start,
            len: rel.len() + 1,
            path: rel.0.clone(),
        });
    }

    let ts = TiledSurface {
        fans,
        tiles,
        labels,
        arrow_fan,
        arrow_corner,
        side_slot,
        port_fan,
        head_end,
        tail_end,
    };
    ts.check_round_trip(pres)?;
    Ok(ts)
}

/// Arrows as (source arc, target arc, arrow), and relations as arrow paths.
pub type InducedPresentation = (Vec<(usize, usize, ArrowId)>, Vec<Vec<ArrowId>>);

impl TiledSurface {
    /// Arrows from fan adjacencies and relations from tiles plus labels.
    pub fn induced_presentation(&self) -> InducedPresentation {
        let mut arrows = Vec::new();
        for fan in &self.fans {
            let k = fan.ports.len();
            for (i, &a) in fan.arrows.iter().enumerate() {
                arrows.push((fan.ports[i].arc, fan.ports[(i + 1) % k].arc, a));
            }
        }
        arrows.sort_by_key(|x| x.2);
        let mut rels: Vec<Vec<ArrowId>> = Vec::new();
        for t in &self.tiles {
            let m = t.thread.len();
            let pairs = match t.kind {
                TileKind::Boundary => m.saturating_sub(1),
                TileKind::Punctured => m,
            };
            for i in 0..pairs {
                rels.push(vec![t.thread[i], t.thread[(i + 1) % m]]);
            }
        }
        for l in &self.labels {
            rels.push(l.path.clone());
        }
        rels.sort();
        (arrows, rels)
    }

    fn check_round_trip(&self, pres: &BoundPresentation) -> Result<()> {
        let q = pres.quiver();
        let (arrows, rels) = self.induced_presentation();
        let want_arrows: Vec<(usize, usize, ArrowId)> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| (a.source, a.target, i))
            .collect();
        let mut want_rels: Vec<Vec<ArrowId>> = pres.relations().iter().map(|r: &PathWord| r.0.clone()).collect();
        want_rels.sort();
        if arrows != want_arrows || rels != want_rels {
            return Err(Error::Internal("surface does not reproduce the presentation".into()));
        }
        Ok(())
    }
}
