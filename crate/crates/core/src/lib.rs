//! String algebras: presentations, sign functions, strings and bands,
//! Auslander-Reiten theory, a linear-algebra oracle, the labelled tiled
//! surface model and support tau-tilting enumeration.

pub mod ar;
pub mod check;
pub mod error;
pub mod fixtures;
pub mod hom;
pub mod oracle;
pub mod parse;
pub mod presentation;
pub mod quiver;
pub mod signs;
pub mod split;
pub mod strings;
pub mod surface;
pub mod tautilt;
pub mod word;

pub use error::{Error, Result};
pub use fixtures::load_fixture;
pub use parse::{parse_presentation, parse_presentation_json};
pub use presentation::{Axiom, BoundPresentation, Classification};
pub use quiver::{Arrow, ArrowId, PathWord, Quiver, VertexId};
pub use signs::{compute_sign_functions, SignAssignment};
pub use split::{gentle_split, GentleSplit};
pub use strings::StringAlgebra;
pub use surface::{build_surface, ArcKind, ArcRealization, TiledSurface};
pub use word::{parse_string, Band, Letter, StringWord};
