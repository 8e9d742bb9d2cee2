use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, PathWord, Quiver, VertexId};

/// The axiom that a presentation fails first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    S1,
    S2,
    S3,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Classification {
    Gentle,
    StringNotGentle,
    NotString { axiom: Axiom, witness: String },
}

impl Classification {
    pub fn is_string(&self) -> bool {
        !matches!(self, Classification::NotString { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Gentle => write!(f, "gentle"),
            Classification::StringNotGentle => write!(f, "string (not gentle)"),
            Classification::NotString { axiom, witness } => {
                write!(f, "not a string algebra: {:?} fails at {}", axiom, witness)
            }
        }
    }
}

/// A quiver with a monomial ideal given by a minimal set of path generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPresentation {
    quiver: Quiver,
    relations: Vec<PathWord>,
    classification: Classification,
}

impl BoundPresentation {
    /// Checks the relations, drops redundant generators, tests admissibility
    /// and classifies.
    pub fn new(quiver: Quiver, relations: Vec<PathWord>) -> Result<Self> {
        for r in &relations {
            if !r.is_composable(&quiver) || r.is_empty() {
                return Err(Error::NotComposable(r.display(&quiver).to_string()));
            }
            if r.len() < 2 {
                return Err(Error::ShortRelation(r.display(&quiver).to_string()));
            }
        }
        let relations = minimize(&quiver, relations);
        check_admissible(&quiver, &relations)?;
        let classification = classify(&quiver, &relations);
        Ok(BoundPresentation {
            quiver,
            relations,
            classification,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[PathWord] {
        &self.relations
    }

    pub fn classification(&self) -> &Classification {
        &self.classification
    }

    /// Longest generator length, 0 without relations.
    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    /// Monomial ideal membership: some generator is a contiguous subpath.
    pub fn path_in_ideal(&self, path: &[ArrowId]) -> bool {
        self.relations.iter().any(|r| r.is_subpath_of(path))
    }

    /// Whether the length-2 path `ab` is a generator.
    pub fn is_relation2(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.iter().any(|r| r.0 == [a, b])
    }

    /// The opposite presentation: arrows and relations reversed.
    pub fn opposite(&self) -> BoundPresentation {
        let quiver = self.quiver.opposite();
        let relations = self
            .relations
            .iter()
            .map(|r| PathWord(r.0.iter().rev().copied().collect()))
            .collect::<Vec<_>>();
        let classification = classify(&quiver, &relations);
        BoundPresentation {
            quiver,
            relations,
            classification,
        }
    }

    /// The quiver in DOT, relations listed as a graph label.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write as _;
        let q = &self.quiver;
        let mut out = String::from("digraph quiver {\n");
        for v in q.vertex_names() {
            let _ = writeln!(out, "  \"{v}\";");
        }
        for a in q.arrows() {
            let (s, t) = (q.vertex_name(a.source), q.vertex_name(a.target));
            let _ = writeln!(out, "  \"{s}\" -> \"{t}\" [label=\"{}\"];", a.name);
        }
        let rels: Vec<String> = self.relations.iter().map(|r| r.display(q).to_string()).collect();
        let _ = writeln!(out, "  label=\"relations: {}\";", rels.join(", "));
        out.push_str("}\n");
        out
    }

    pub fn require_string(&self) -> Result<()> {
        match &self.classification {
            Classification::NotString { .. } => Err(Error::NotStringAlgebra(self.classification.to_string())),
            _ => Ok(()),
        }
    }
}

fn minimize(quiver: &Quiver, relations: Vec<PathWord>) -> Vec<PathWord> {
    let mut seen = HashSet::new();
    let unique: Vec<PathWord> = relations.into_iter().filter(|r| seen.insert(r.clone())).collect();
    let mut kept = Vec::new();
    for (i, r) in unique.iter().enumerate() {
        let redundant = unique
            .iter()
            .enumerate()
            .any(|(j, s)| j != i && s.len() < r.len() && s.is_subpath_of(&r.0));
        if redundant {
            log::warn!("dropping redundant relation `{}`", r.display(quiver));
        } else {
            kept.push(r.clone());
        }
    }
    kept
}

/// Searches the automaton whose states are the last (L-1) arrows of a
/// relation-free path; a reachable cycle is an infinite relation-free path.
fn check_admissible(quiver: &Quiver, relations: &[PathWord]) -> Result<()> {
    let keep = relations.iter().map(|r| r.len()).max().unwrap_or(2).max(2) - 1;
    let ends_in_relation = |p: &[ArrowId]| relations.iter().any(|r| p.ends_with(&r.0));
    let step = |state: &[ArrowId], a: ArrowId| -> Option<Vec<ArrowId>> {
        if let Some(&last) = state.last() {
            if quiver.target(last) != quiver.source(a) {
                return None;
            }
        }
        let mut p = state.to_vec();
        p.push(a);
        if ends_in_relation(&p) {
            return None;
        }
        let cut = p.len().saturating_sub(keep);
        Some(p[cut..].to_vec())
    };

    // 0 = unvisited, 1 = on stack, 2 = done
    let mut color: HashMap<Vec<ArrowId>, u8> = HashMap::new();
    let n = quiver.arrow_count();
    for a in 0..n {
        let start = match step(&[], a) {
            Some(s) => s,
            None => continue,
        };
        if color.get(&start).copied().unwrap_or(0) != 0 {
            continue;
        }
        let mut stack: Vec<(Vec<ArrowId>, usize)> = vec![(start.clone(), 0)];
        color.insert(start, 1);
        while let Some((state, next)) = stack.pop() {
            if next >= n {
                color.insert(state, 2);
                continue;
            }
            stack.push((state.clone(), next + 1));
            if let Some(succ) = step(&state, next) {
                match color.get(&succ).copied().unwrap_or(0) {
                    0 => {
                        color.insert(succ.clone(), 1);
                        stack.push((succ, 0));
                    }
                    1 => {
                        let names: Vec<&str> = succ.iter().map(|&b| quiver.arrow(b).name.as_str()).collect();
                        return Err(Error::NotAdmissible(names.join(" ")));
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn classify(quiver: &Quiver, relations: &[PathWord]) -> Classification {
    let in_ideal = |p: &[ArrowId]| relations.iter().any(|r| r.is_subpath_of(p));
    let name = |a: ArrowId| quiver.arrow(a).name.clone();
    for v in 0..quiver.vertex_count() {
        if quiver.out_arrows(v).len() > 2 || quiver.in_arrows(v).len() > 2 {
            return Classification::NotString {
                axiom: Axiom::S1,
                witness: format!("vertex {}", quiver.vertex_name(v)),
            };
        }
    }
    for a in 0..quiver.arrow_count() {
        let after: Vec<ArrowId> = quiver
            .out_arrows(quiver.target(a))
            .into_iter()
            .filter(|&b| !in_ideal(&[a, b]))
            .collect();
        if after.len() > 1 {
            return Classification::NotString {
                axiom: Axiom::S2,
                witness: format!("{} followed by {} and {}", name(a), name(after[0]), name(after[1])),
            };
        }
        let before: Vec<ArrowId> = quiver
            .in_arrows(quiver.source(a))
            .into_iter()
            .filter(|&c| !in_ideal(&[c, a]))
            .collect();
        if before.len() > 1 {
            return Classification::NotString {
                axiom: Axiom::S2,
                witness: format!("{} preceded by {} and {}", name(a), name(before[0]), name(before[1])),
            };
        }
    }
    let g2 = relations.iter().all(|r| r.len() == 2);
    let g1 = (0..quiver.arrow_count()).all(|a| {
        let after = quiver
            .out_arrows(quiver.target(a))
            .into_iter()
            .filter(|&b| in_ideal(&[a, b]))
            .count();
        let before = quiver
            .in_arrows(quiver.source(a))
            .into_iter()
            .filter(|&c| in_ideal(&[c, a]))
            .count();
        after <= 1 && before <= 1
    });
    if g1 && g2 {
        Classification::Gentle
    } else {
        Classification::StringNotGentle
    }
}

/// Vertex-by-vertex gentle check for kQ/J with J given by 2-relations.
pub fn is_locally_gentle(quiver: &Quiver, j: &[PathWord]) -> bool {
    if j.iter().any(|r| r.len() != 2) {
        return false;
    }
    let rel: HashSet<(ArrowId, ArrowId)> = j.iter().map(|r| (r.0[0], r.0[1])).collect();
    (0..quiver.vertex_count()).all(|v: VertexId| {
        let ins = quiver.in_arrows(v);
        let outs = quiver.out_arrows(v);
        if ins.len() > 2 || outs.len() > 2 {
            return false;
        }
        let ok_in = ins.iter().all(|&c| {
            let bad = outs.iter().filter(|&&b| rel.contains(&(c, b))).count();
            bad <= 1 && outs.len() - bad <= 1
        });
        let ok_out = outs.iter().all(|&b| {
            let bad = ins.iter().filter(|&&c| rel.contains(&(c, b))).count();
            bad <= 1 && ins.len() - bad <= 1
        });
        ok_in && ok_out
    })
}
