use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver. Vertices and arrows keep their declaration order, which
/// is used for every tie-break in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
}

impl Quiver {
    pub fn new() -> Self {
        Quiver {
            vertices: Vec::new(),
            arrows: Vec::new(),
            vertex_index: HashMap::new(),
            arrow_index: HashMap::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId> {
        if self.vertex_index.contains_key(name) {
            return Err(Error::Duplicate {
                kind: "vertex",
                name: name.to_string(),
            });
        }
        let id = self.vertices.len();
        self.vertices.push(name.to_string());
        self.vertex_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<ArrowId> {
        if self.arrow_index.contains_key(name) {
            return Err(Error::Duplicate {
                kind: "arrow",
                name: name.to_string(),
            });
        }
        let s = self.vertex(source)?;
        let t = self.vertex(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source: s,
            target: t,
        });
        self.arrow_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_id(&self, name: &str) -> Result<ArrowId> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn source(&self, a: ArrowId) -> VertexId {
        self.arrows[a].source
    }

    pub fn target(&self, a: ArrowId) -> VertexId {
        self.arrows[a].target
    }

    /// Arrows starting at `v`, in declaration order.
    pub fn out_arrows(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    /// Arrows ending at `v`, in declaration order.
    pub fn in_arrows(&self, v: VertexId) -> Vec<ArrowId> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }

    /// The quiver with every arrow reversed; names are kept.
    pub fn opposite(&self) -> Quiver {
        let mut q = self.clone();
        for a in &mut q.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        q
    }
}

impl Default for Quiver {
    fn default() -> Self {
        Self::new()
    }
}

/// A nonempty path, read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathWord(pub Vec<ArrowId>);

impl PathWord {
    pub fn new(quiver: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let p = PathWord(arrows);
        if p.0.is_empty() || !p.is_composable(quiver) {
            return Err(Error::NotComposable(p.display(quiver).to_string()));
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_composable(&self, quiver: &Quiver) -> bool {
        self.0.windows(2).all(|w| quiver.target(w[0]) == quiver.source(w[1]))
    }

    /// True when `self` occurs as a contiguous block inside `other`.
    pub fn is_subpath_of(&self, other: &[ArrowId]) -> bool {
        other.len() >= self.0.len() && other.windows(self.0.len()).any(|w| w == self.0.as_slice())
    }

    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }
}

pub struct PathDisplay<'a> {
    path: &'a PathWord,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .path
            .0
            .iter()
            .map(|&a| self.quiver.arrow(a).name.as_str())
            .collect();
        write!(f, "{}", names.join(" "))
    }
}
