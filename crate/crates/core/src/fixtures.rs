//! Built-in presentations.

use crate::error::{Error, Result};
use crate::parse::parse_presentation;
use crate::presentation::BoundPresentation;

/// Name, description, source text.
pub const FIXTURES: &[(&str, &str, &str)] = &[
    (
        "ex-string-gentle",
        "five vertices, relations de, da, abc: string but not gentle",
        "vertices 1 2 3 4 5
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
arrow d: 4 -> 1
arrow e: 1 -> 5
relation d e
relation d a
relation a b c
",
    ),
    (
        "ex-string-gentle-da",
        "the same quiver with the single relation da (gentle)",
        "vertices 1 2 3 4 5
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
arrow d: 4 -> 1
arrow e: 1 -> 5
relation d a
",
    ),
    (
        "ex-labeled",
        "five vertices, eight arrows, three labels; a disk with four punctures",
        // Arrow ends read off the tiling picture; pinned by the band, Hom and
        // support tau-tilting checks in the test suite.
        "vertices 1 2 3 4 5
arrow a1: 1 -> 2
arrow a2: 2 -> 1
arrow a3: 2 -> 3
arrow a4: 3 -> 4
arrow a5: 4 -> 1
arrow a6: 4 -> 5
arrow a7: 5 -> 3
arrow a8: 5 -> 5
relation a1 a3
relation a3 a4
relation a4 a5
relation a5 a1
relation a6 a8
relation a8 a7
relation a2 a1
relation a6 a7
relation a8 a8
",
    ),
    (
        "not-commutative",
        "1 -> 2 -> 3 -> 4 <- 5 <- 6 <- 7 with relations abc, fed",
        "vertices 1 2 3 4 5 6 7
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
arrow d: 5 -> 4
arrow e: 6 -> 5
arrow f: 7 -> 6
relation a b c
relation f e d
",
    ),
    (
        "g1",
        "1 -> 2 -> 3 with relation ab",
        "vertices 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 3
relation a b
",
    ),
    (
        "g2",
        "1 -> 2 -> 3 -> 4 with relation abc",
        "vertices 1 2 3 4
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
relation a b c
",
    ),
    (
        "abd-bc",
        "1 -> 2 -> 3 with c: 3 -> 4, d: 3 -> 5 and relations abd, bc",
        "vertices 1 2 3 4 5
arrow a: 1 -> 2
arrow b: 2 -> 3
arrow c: 3 -> 4
arrow d: 3 -> 5
relation a b d
relation b c
",
    ),
    (
        "a2",
        "linear A2 path algebra",
        "vertices 1 2
arrow a1: 1 -> 2
",
    ),
    (
        "simple",
        "one vertex, no arrows",
        "vertices 1
",
    ),
];

pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.0).collect()
}

pub fn fixture_source(name: &str) -> Result<String> {
    match FIXTURES.iter().find(|f| f.0 == name) {
        Some(f) => Ok(f.2.to_string()),
        None => linear_an(name),
    }
}

/// Linear orientation `1 -> 2 -> ... -> n`, no relations. Accepts `a<n>`.
fn linear_an(name: &str) -> Result<String> {
    let n: usize = name
        .strip_prefix('a')
        .and_then(|s| s.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    Ok(linear_an_source(n))
}

pub fn linear_an_source(n: usize) -> String {
    let vs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut s = format!("vertices {}\n", vs.join(" "));
    for i in 1..n {
        s.push_str(&format!("arrow a{}: {} -> {}\n", i, i, i + 1));
    }
    s
}

pub fn load_fixture(name: &str) -> Result<BoundPresentation> {
    parse_presentation(&fixture_source(name)?)
}
