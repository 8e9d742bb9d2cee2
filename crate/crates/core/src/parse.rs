use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{BoundPresentation, Classification};
use crate::quiver::{PathWord, Quiver};

/// Serialized form of a presentation, shared by JSON input and output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub relations: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the line-based grammar:
///
/// ```text
/// vertices 1 2 3
/// arrow a: 1 -> 2
/// relation a b
/// ```
pub fn parse_presentation(text: &str) -> Result<BoundPresentation> {
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let mut parts = trimmed.splitn(2, char::is_whitespace);
        let keyword = parts.next().unwrap_or("");
        let rest = parts.next().unwrap_or("");
        let rest_col = indent + keyword.len() + 2;
        match keyword {
            "vertices" => {
                for v in rest.split_whitespace() {
                    quiver.add_vertex(v)?;
                }
            }
            "arrow" => {
                let (name, ends) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax(line_no, rest_col, "expected `name: source -> target`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(syntax(line_no, rest_col, "bad arrow name"));
                }
                let (s, t) = ends
                    .split_once("->")
                    .ok_or_else(|| syntax(line_no, rest_col + name.len() + 1, "expected `->`"))?;
                let (s, t) = (s.trim(), t.trim());
                if s.is_empty() || t.is_empty() {
                    return Err(syntax(line_no, rest_col, "missing endpoint"));
                }
                quiver.add_arrow(name, s, t)?;
            }
            "relation" => {
                let ids = rest
                    .split_whitespace()
                    .map(|n| quiver.arrow_id(n))
                    .collect::<Result<Vec<_>>>()?;
                if ids.is_empty() {
                    return Err(syntax(line_no, rest_col, "empty relation"));
                }
                relations.push(PathWord(ids));
            }
            other => return Err(syntax(line_no, indent + 1, format!("unknown keyword `{}`", other))),
        }
    }
    BoundPresentation::new(quiver, relations)
}

pub fn parse_presentation_json(text: &str) -> Result<BoundPresentation> {
    let doc: PresentationDoc = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    from_doc(&doc)
}

pub fn from_doc(doc: &PresentationDoc) -> Result<BoundPresentation> {
    let mut quiver = Quiver::new();
    for v in &doc.vertices {
        quiver.add_vertex(v)?;
    }
    for a in &doc.arrows {
        quiver.add_arrow(&a.name, &a.source, &a.target)?;
    }
    let relations = doc
        .relations
        .iter()
        .map(|r| {
            Ok(PathWord(
                r.iter().map(|n| quiver.arrow_id(n)).collect::<Result<Vec<_>>>()?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    BoundPresentation::new(quiver, relations)
}

pub fn to_doc(pres: &BoundPresentation) -> PresentationDoc {
    let q = pres.quiver();
    PresentationDoc {
        vertices: q.vertex_names().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowDoc {
                name: a.name.clone(),
                source: q.vertex_name(a.source).to_string(),
                target: q.vertex_name(a.target).to_string(),
            })
            .collect(),
        relations: pres
            .relations()
            .iter()
            .map(|r| r.0.iter().map(|&a| q.arrow(a).name.clone()).collect())
            .collect(),
        classification: Some(pres.classification().clone()),
    }
}

/// Prints a presentation back in the line grammar.
pub fn to_text(pres: &BoundPresentation) -> String {
    let q = pres.quiver();
    let mut out = format!("vertices {}\n", q.vertex_names().join(" "));
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {}: {} -> {}\n",
            a.name,
            q.vertex_name(a.source),
            q.vertex_name(a.target)
        ));
    }
    for r in pres.relations() {
        out.push_str(&format!("relation {}\n", r.display(q)));
    }
    out
}
