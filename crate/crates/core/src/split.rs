use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{is_locally_gentle, BoundPresentation};
use crate::quiver::PathWord;
use crate::signs::SignAssignment;

/// Partition of the generators into locally gentle relations and labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleSplit {
    pub gentle_relations: Vec<PathWord>,
    pub label_relations: Vec<PathWord>,
    pub signs: SignAssignment,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitDoc {
    pub gentle_relations: Vec<String>,
    pub label_relations: Vec<String>,
}

/// Keeps a 2-relation `ab` in J exactly when sigma(b) = epsilon(a).
pub fn gentle_split(pres: &BoundPresentation, signs: &SignAssignment) -> Result<GentleSplit> {
    pres.require_string()?;
    signs.check(pres)?;
    let (gentle, labels): (Vec<PathWord>, Vec<PathWord>) = pres
        .relations()
        .iter()
        .cloned()
        .partition(|r| r.len() == 2 && signs.sigma(r.0[1]) == signs.epsilon(r.0[0]));
    if !is_locally_gentle(pres.quiver(), &gentle) {
        return Err(Error::Internal("gentle quotient fails the vertex check".into()));
    }
    Ok(GentleSplit {
        gentle_relations: gentle,
        label_relations: labels,
        signs: signs.clone(),
    })
}

impl GentleSplit {
    pub fn to_doc(&self, pres: &BoundPresentation) -> SplitDoc {
        let q = pres.quiver();
        SplitDoc {
            gentle_relations: self.gentle_relations.iter().map(|r| r.display(q).to_string()).collect(),
            label_relations: self.label_relations.iter().map(|r| r.display(q).to_string()).collect(),
        }
    }

    pub fn is_gentle_relation(&self, a: usize, b: usize) -> bool {
        self.gentle_relations.iter().any(|r| r.0 == [a, b])
    }
}
