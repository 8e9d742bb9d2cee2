//! Command-line front end for string algebras and their tiled surfaces.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stringalg::check::{run_checks, CheckOptions};
use stringalg::signs::SignEntry;
use stringalg::surface::{crossings_m, crossings_r, ArcValue};
use stringalg::tautilt::{compatibility_graph, enumerate_support_tau_tilting, Node};
use stringalg::*;

#[derive(Parser)]
#[command(
    name = "stringalg",
    version,
    about = "String algebras, tiled surfaces and support tau-tilting pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Presentation file.
    #[arg(short = 'i', long = "input", required_unless_present = "fixture")]
    path: Option<PathBuf>,
    /// Input grammar; defaults to JSON for `.json` files and text otherwise.
    #[arg(long, value_enum, requires = "path")]
    format: Option<Format>,
    /// Use a built-in presentation instead of a file.
    #[arg(long, conflicts_with = "path")]
    fixture: Option<String>,
    /// Sign assignment file (JSON list of {arrow, sigma, epsilon}).
    #[arg(long)]
    signs: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    R,
    Cw,
    Acw,
}

impl From<Kind> for ArcKind {
    fn from(k: Kind) -> ArcKind {
        match k {
            Kind::R => ArcKind::R,
            Kind::Cw => ArcKind::ClockwiseM,
            Kind::Acw => ArcKind::AnticlockwiseM,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify the presentation (gentle, string, or the failing axiom).
    Validate {
        #[command(flatten)]
        input: Input,
        /// `dot` draws the quiver instead of printing the classification.
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Print the sign functions.
    Signs(Input),
    /// Print the gentle relations and labels.
    Split(Input),
    /// Print the labelled tiled surface.
    Surface {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// List strings up to a length.
    Strings {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_string_length: u64,
    },
    /// List bands up to a length.
    Bands {
        #[command(flatten)]
        input: Input,
        /// Defaults to the band bound factor times the number of arrows.
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        band_bound_factor: u64,
    },
    /// Dimension of Hom(M(v), M(w)).
    Hom {
        #[command(flatten)]
        input: Input,
        v: String,
        w: String,
    },
    /// f_s, f_t, tau and tau^-1 of a string.
    Ar {
        #[command(flatten)]
        input: Input,
        w: String,
    },
    /// The arc of a string as a trace through the tiles.
    Arcs {
        #[command(flatten)]
        input: Input,
        w: String,
        #[arg(long, value_enum, default_value = "cw")]
        kind: Kind,
    },
    /// Oriented crossings between the arcs of two strings.
    Cross {
        #[command(flatten)]
        input: Input,
        v: String,
        w: String,
        /// r counts crossings and intersections of R-arcs; cw adds good
        /// crossings of clockwise-most M-arcs.
        #[arg(long, value_enum, default_value = "r")]
        kind: Kind,
    },
    /// Support tau-tilting pairs.
    Sttilt {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
        max_string_length: u64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        band_bound: u64,
        /// Also enumerate maximal collections of arcs and compare.
        #[arg(long)]
        verify_geometric: bool,
        #[arg(long, value_enum, default_value = "json")]
        emit: Emit,
    },
    /// Cross-validate everything against the linear-algebra oracle.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        sweep_length: u64,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        max_string_length: u64,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
}

/// Exit statuses: 0 success, 1 validation failure, 2 identity failure,
/// 3 I/O, 4 parse.
enum Failure {
    Core(Error),
    Io(anyhow::Error),
    /// Document for stdout and a one-line summary for stderr.
    Invalid(String, String),
    Identity(String, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 3,
            Failure::Invalid(..) => 1,
            Failure::Identity(..) => 2,
            Failure::Core(e) => match e {
                Error::Syntax { .. }
                | Error::UnknownVertex(_)
                | Error::UnknownArrow(_)
                | Error::Duplicate { .. }
                | Error::NotComposable(_)
                | Error::ShortRelation(_)
                | Error::BadString { .. }
                | Error::Json(_) => 4,
                Error::Internal(_) => 2,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Io(e) => format!("{e:#}"),
            Failure::Invalid(_, m) | Failure::Identity(_, m) => m.clone(),
        }
    }
}

type Out = std::result::Result<String, Failure>;

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize") + "\n"
}

fn load(input: &Input) -> std::result::Result<BoundPresentation, Failure> {
    match (&input.fixture, &input.path) {
        (Some(name), _) => Ok(load_fixture(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Io)?;
            let detected = if path.extension().is_some_and(|e| e == "json") {
                Format::Json
            } else {
                Format::Text
            };
            if input.format.unwrap_or(detected) == Format::Json {
                Ok(parse_presentation_json(&text)?)
            } else {
                Ok(parse_presentation(&text)?)
            }
        }
        (None, None) => Err(Failure::Invalid(String::new(), "no input given".into())),
    }
}

fn algebra(input: &Input) -> std::result::Result<StringAlgebra, Failure> {
    let pres = load(input)?;
    pres.require_string()?;
    let signs = match &input.signs {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Io)?;
            let entries: Vec<SignEntry> = serde_json::from_str(&text).map_err(|e| Error::Json(e.to_string()))?;
            SignAssignment::from_entries(&pres, &entries)?
        }
        None => compute_sign_functions(&pres)?,
    };
    Ok(StringAlgebra::new(pres, signs)?)
}

fn surface(alg: &StringAlgebra) -> std::result::Result<TiledSurface, Failure> {
    let split = gentle_split(alg.pres(), alg.signs())?;
    Ok(build_surface(alg.pres(), &split)?)
}

fn word(alg: &StringAlgebra, text: &str) -> std::result::Result<StringWord, Failure> {
    let w = parse_string(alg.quiver(), text)?;
    if !alg.is_string(&w) {
        return Err(Error::BadString {
            text: text.to_string(),
            message: "not a string of this algebra".into(),
        }
        .into());
    }
    Ok(w)
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ArDoc {
    string: String,
    f_s: String,
    f_t: String,
    tau: String,
    tau_inverse: String,
    projective: bool,
    injective: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SttiltDoc {
    completeness: stringalg::tautilt::Completeness,
    candidates: usize,
    pairs: Vec<stringalg::tautilt::SupportPairDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    geometric: Option<stringalg::tautilt::GeometricReport>,
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Validate { input, emit } => {
            let pres = load(&input)?;
            let c = pres.classification().clone();
            let text = match emit {
                Emit::Dot => pres.to_dot(),
                Emit::Json | Emit::Text => json(&c),
            };
            if c.is_string() {
                Ok(text)
            } else {
                Err(Failure::Invalid(text, c.to_string()))
            }
        }
        Command::Signs(input) => {
            let alg = algebra(&input)?;
            Ok(json(&alg.signs().to_entries(alg.pres())))
        }
        Command::Split(input) => {
            let alg = algebra(&input)?;
            let split = gentle_split(alg.pres(), alg.signs())?;
            Ok(json(&split.to_doc(alg.pres())))
        }
        Command::Surface { input, emit } => {
            let alg = algebra(&input)?;
            let ts = surface(&alg)?;
            Ok(match emit {
                Emit::Dot => ts.to_dot(alg.quiver()),
                Emit::Json | Emit::Text => json(&ts.to_doc(alg.quiver())),
            })
        }
        Command::Strings {
            input,
            max_string_length,
        } => {
            let alg = algebra(&input)?;
            let mut out = String::new();
            for w in alg.enumerate_strings(max_string_length as usize) {
                let _ = writeln!(out, "{}", w.display(alg.quiver()));
            }
            Ok(out)
        }
        Command::Bands {
            input,
            max_length,
            band_bound_factor,
        } => {
            let alg = algebra(&input)?;
            let bound = max_length.unwrap_or(band_bound_factor as usize * alg.quiver().arrow_count().max(1));
            let mut out = String::new();
            for b in alg.enumerate_bands(bound) {
                let _ = writeln!(out, "{}", b.display(alg.quiver()));
            }
            Ok(out)
        }
        Command::Hom { input, v, w } => {
            let alg = algebra(&input)?;
            let (v, w) = (word(&alg, &v)?, word(&alg, &w)?);
            Ok(format!("{}\n", alg.hom_dim(&v, &w)))
        }
        Command::Ar { input, w } => {
            let alg = algebra(&input)?;
            let w = word(&alg, &w)?;
            let q = alg.quiver();
            Ok(json(&ArDoc {
                string: w.display(q),
                f_s: alg.f_s(&w).display(q),
                f_t: alg.f_t(&w).display(q),
                tau: alg.tau(&w).display(q),
                tau_inverse: alg.tau_inverse(&w).display(q),
                projective: alg.is_projective(&w),
                injective: alg.is_injective(&w),
            }))
        }
        Command::Arcs { input, w, kind } => {
            let alg = algebra(&input)?;
            let ts = surface(&alg)?;
            let w = word(&alg, &w)?;
            let arc = ts.realize_arc(&alg, &w, kind.into())?;
            let back = ts.string_of(&alg, &arc);
            if back != w {
                let m = format!("arc reads back as {}", back.display(alg.quiver()));
                return Err(Failure::Identity(String::new(), m));
            }
            let mut doc = serde_json::to_value(ts.arc_doc(alg.quiver(), &arc)).expect("serializes");
            let pivot = |v: ArcValue| match v {
                ArcValue::Arc(r) => r.word.display(alg.quiver()),
                ArcValue::PArc(v) => format!("arc of P at {}", alg.quiver().vertex_name(v)),
                ArcValue::BoundarySegment => "boundary segment".into(),
            };
            let acw = ts.realize_arc(&alg, &w, ArcKind::AnticlockwiseM)?;
            doc["pivotFs"] = pivot(ts.pivot_fs(&alg, &acw)).into();
            doc["pivotFt"] = pivot(ts.pivot_ft(&alg, &acw)).into();
            doc["tauInverse"] = pivot(ts.tau_inverse_arc(&alg, &acw)).into();
            Ok(json(&doc))
        }
        Command::Cross { input, v, w, kind } => {
            let alg = algebra(&input)?;
            let ts = surface(&alg)?;
            let (v, w) = (word(&alg, &v)?, word(&alg, &w)?);
            let a = ts.realize_arc(&alg, &v, kind.into())?;
            let b = ts.realize_arc(&alg, &w, kind.into())?;
            let report = match kind {
                Kind::R => crossings_r(&ts, &a, &b),
                _ => crossings_m(&ts, &alg, &a, &b),
            };
            Ok(json(&report))
        }
        Command::Sttilt {
            input,
            max_string_length,
            band_bound,
            verify_geometric,
            emit,
        } => {
            let alg = algebra(&input)?;
            let len = max_string_length as usize;
            let band_bound = band_bound as usize;
            if let Emit::Dot = emit {
                return Ok(compatibility_dot(&alg, len));
            }
            let e = enumerate_support_tau_tilting(&alg, len, band_bound);
            if e.completeness != stringalg::tautilt::Completeness::Exact {
                log::warn!(
                    "tau-rigid strings may exist beyond length {len}; the list is complete only within that bound"
                );
            }
            let geometric = if verify_geometric {
                Some(stringalg::tautilt::verify_geometric(
                    &surface(&alg)?,
                    &alg,
                    len,
                    band_bound,
                ))
            } else {
                None
            };
            let failed = geometric.as_ref().is_some_and(|g| !g.agree);
            let doc = SttiltDoc {
                completeness: e.completeness,
                candidates: e.candidates,
                pairs: e.pairs.iter().map(|p| p.to_doc(&alg)).collect(),
                geometric,
            };
            if failed {
                Err(Failure::Identity(
                    json(&doc),
                    "algebraic and geometric enumerations differ".into(),
                ))
            } else {
                Ok(json(&doc))
            }
        }
        Command::Check {
            input,
            sweep_length,
            max_string_length,
            emit,
        } => {
            let alg = algebra(&input)?;
            let ts = surface(&alg)?;
            let mut opts = CheckOptions {
                sweep_len: sweep_length as usize,
                tilt_len: max_string_length as usize,
                ..CheckOptions::default()
            };
            if input.fixture.as_deref() == Some("ex-labeled") {
                let w = word(&alg, "a7^-1 a8")?;
                let v = word(&alg, "a8 a6^-1")?;
                opts.hom_examples = vec![(w.clone(), v.clone(), Some(2)), (v, w, Some(1))];
            }
            let report = run_checks(&alg, &ts, &opts);
            let out = match emit {
                Emit::Json => json(&report),
                Emit::Text | Emit::Dot => {
                    let mut out = String::new();
                    for l in &report.lines {
                        let _ = writeln!(out, "{} {}: {}", if l.ok { "ok  " } else { "FAIL" }, l.name, l.detail);
                    }
                    out
                }
            };
            let failed = report.lines.iter().filter(|l| !l.ok).count();
            if failed == 0 {
                Ok(out)
            } else {
                Err(Failure::Identity(
                    out,
                    format!("{failed} of {} checks fail", report.lines.len()),
                ))
            }
        }
    }
}

fn compatibility_dot(alg: &StringAlgebra, max_len: usize) -> String {
    let q = alg.quiver();
    let (nodes, adj) = compatibility_graph(alg, max_len);
    let mut out = String::from("graph compatibility {\n");
    for (i, n) in nodes.iter().enumerate() {
        let label = match n {
            Node::Shadow(v) => format!("P{}[1]", q.vertex_name(*v)),
            Node::Module(w) => w.display(q),
        };
        let _ = writeln!(out, "  n{i} [label=\"{label}\"];");
    }
    for (i, row) in adj.iter().enumerate() {
        for (j, _) in row.iter().enumerate().skip(i + 1).filter(|(_, &e)| e) {
            let _ = writeln!(out, "  n{i} -- n{j};");
        }
    }
    out.push_str("}\n");
    out
}

fn main() -> ExitCode {
    env_logger::Builder::new().filter_level(log::LevelFilter::Warn).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version go to stdout and succeed; usage errors are
            // command-line parse errors.
            return if e.use_stderr() {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            let code = f.code();
            if let Failure::Invalid(m, _) | Failure::Identity(m, _) = &f {
                print!("{m}");
            }
            eprintln!("error: {}", f.message().lines().next().unwrap_or(""));
            ExitCode::from(code)
        }
    }
}
