//! The `nervelat` command line. Every verb reads one input file and writes
//! deterministic text, DOT or JSON.
//!
//! Exit codes: 0 success, 1 domain/parse/IO error, 2 usage error, 3 a size
//! limit was exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bitset::{format_one_based, BitSet};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::fca::{self, FormalContext, Side};
use crate::homology::{self, Field};
use crate::neural::{self, NeuralCode, SampledCover};
use crate::poset::{Poset, PosetJson};
use crate::Limits;

#[derive(Parser, Debug)]
#[command(name = "nervelat", version, about = "Weeding, cores, concept lattices and nerves, checked by homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weeding of a complex (intersections of maximal simplices).
    Weed {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        format: Format,
        /// Compute by Stong reduction of the face poset instead.
        #[arg(long)]
        stong: bool,
    },
    /// Core of a poset (JSON) or of the face poset of a complex.
    Core {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        format: Format,
    },
    /// Concept lattice of a `.cxt` context or a code file.
    Lattice {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        format: Format,
    },
    /// Nerve of a code file or a cover file, in `.cplx` format.
    Nerve {
        #[command(flatten)]
        io: Io,
    },
    /// Betti numbers of a complex or a poset (JSON).
    Betti {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        hom: Hom,
        #[arg(long)]
        json: bool,
    },
    /// Checks that the weeding of the maximal-cover nerve is the opposite weeding.
    Dual {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        format: Format,
    },
    /// Alternating transpose and dominated-row deletion.
    Reduce {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        json: bool,
    },
    /// Homology class of the link of every face.
    Links {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_parser = parse_field, default_value = "2")]
        field: Field,
    },
    /// Decides whether the members of PREMISE force TARGET (`target ∈ premise''`).
    Implications {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        side: SideArg,
        /// Comma-separated 1-based indices; empty for the empty set.
        #[arg(long, value_parser = parse_index_set, allow_hyphen_values = true)]
        premise: BitSet,
        /// 1-based index.
        #[arg(long, value_parser = parse_index)]
        target: usize,
    },
    /// Neural code of a cover file.
    Code {
        #[command(flatten)]
        io: Io,
    },
    /// Nerve and concept lattice of a cover file or code, compared.
    Report {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_parser = parse_field, default_value = "2")]
        field: Field,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct Io {
    input: PathBuf,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Format {
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Hom {
    #[arg(long, value_parser = parse_field, default_value = "2")]
    field: Field,
    #[arg(long)]
    reduced: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SideArg {
    Objects,
    Attributes,
}

fn parse_field(s: &str) -> std::result::Result<Field, String> {
    let p: u32 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    Field::new(p).map_err(|e| e.to_string())
}

fn parse_index(s: &str) -> std::result::Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(format!("`{s}` is not a 1-based index")),
    }
}

fn parse_index_set(s: &str) -> std::result::Result<BitSet, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_index)
        .collect()
}

/// Runs the command line, writing to the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = Limits::from_env().and_then(|limits| execute(cli.command, &limits));
    match result {
        Ok((text, None)) => match out.write_all(text.as_bytes()) {
            Ok(()) => 0,
            Err(e) => report(err, &Error::Io(e)),
        },
        Ok((text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => 0,
            Err(e) => report(err, &Error::Io(e)),
        },
        Err(e) => report(err, &e),
    }
}

fn report(err: &mut dyn Write, e: &Error) -> i32 {
    let _ = writeln!(err, "error: {e}");
    e.exit_code()
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn first_content_line(text: &str) -> &str {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("")
}

fn read_poset_or_faces(text: &str, limits: &Limits) -> Result<Poset> {
    if is_json(text) {
        let json: PosetJson = serde_json::from_str(text)?;
        Poset::from_json(&json)
    } else {
        let k = SimplicialComplex::parse_text(text)?;
        Poset::from_labels_by_inclusion(k.faces_with_cap(limits.face_cap)?)
    }
}

fn read_context(text: &str) -> Result<FormalContext> {
    if is_json(text) || first_content_line(text).starts_with("m=") {
        Ok(read_code(text)?.context())
    } else {
        FormalContext::parse_cxt(text)
    }
}

fn read_code(text: &str) -> Result<NeuralCode> {
    if is_json(text) {
        Ok(neural::code_from_cover(&SampledCover::from_json(text)?))
    } else {
        NeuralCode::parse_text(text)
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn render_poset(p: &Poset, format: &Format, name: &str) -> Result<String> {
    if format.json {
        json(&p.to_json())
    } else {
        Ok(p.to_dot(name))
    }
}

fn counts(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn execute(command: Command, limits: &Limits) -> Result<(String, Option<PathBuf>)> {
    let (text, output) = match command {
        Command::Weed { io, format, stong } => {
            let k = SimplicialComplex::parse_text(&read(&io.input)?)?;
            let w = if stong {
                fca::weeding_via_stong_trace(&k, limits.face_cap)?.0
            } else {
                fca::weeding(&k)?
            };
            (render_poset(&w, &format, "weeding")?, io.output)
        }
        Command::Core { io, format } => {
            let p = read_poset_or_faces(&read(&io.input)?, limits)?;
            (render_poset(&p.core(), &format, "core")?, io.output)
        }
        Command::Lattice { io, format } => {
            let lattice = fca::concepts_with_cap(&read_context(&read(&io.input)?)?, limits.concept_object_cap)?;
            let text = if format.json {
                json(&lattice.to_json())?
            } else {
                lattice.to_dot("lattice")
            };
            (text, io.output)
        }
        Command::Nerve { io } => {
            let code = read_code(&read(&io.input)?)?;
            (neural::nerve_from_code(&code)?.to_text(), io.output)
        }
        Command::Betti { io, hom, json: as_json } => {
            let text = read(&io.input)?;
            let b = if is_json(&text) {
                let json: PosetJson = serde_json::from_str(&text)?;
                homology::betti_poset_with_cap(&Poset::from_json(&json)?, hom.field, hom.reduced, limits.face_cap)?
            } else {
                let k = SimplicialComplex::parse_text(&text)?;
                homology::betti_with_cap(&k, hom.field, hom.reduced, limits.face_cap)?
            };
            let text = if as_json { json(&b)? } else { format!("{b}\n") };
            (text, io.output)
        }
        Command::Dual { io, format } => {
            let k = SimplicialComplex::parse_text(&read(&io.input)?)?;
            let d = fca::duality(&k, limits)?;
            let text = if format.json {
                json(&serde_json::json!({
                    "isomorphic": d.isomorphic,
                    "obstructions": d.obstructions.iter().map(|v| v + 1).collect::<Vec<_>>(),
                    "intent_isomorphic": d.intent_isomorphic,
                    "weeding": d.weeding.to_json(),
                    "nerve_weeding": d.nerve_weeding.to_json(),
                }))?
            } else if format.dot {
                format!(
                    "{}{}",
                    d.weeding.to_dot("weeding"),
                    d.nerve_weeding.to_dot("nerve_weeding")
                )
            } else {
                format!(
                    "isomorphic: {}\nweeding: {} elements, heights {}\nnerve weeding: {} elements, heights {}\n\
                     obstructions: {}\nintent poset anti-isomorphic: {}\n",
                    d.isomorphic,
                    d.weeding.len(),
                    counts(&d.weeding.height_counts()),
                    d.nerve_weeding.len(),
                    counts(&d.nerve_weeding.height_counts()),
                    format_one_based(&d.obstructions.iter().copied().collect()),
                    d.intent_isomorphic,
                )
            };
            (text, io.output)
        }
        Command::Reduce { io, json: as_json } => {
            let k = SimplicialComplex::parse_text(&read(&io.input)?)?;
            let r = fca::bpp_reduce(&k)?;
            let text = if as_json {
                let steps: Vec<_> = r
                    .steps
                    .iter()
                    .map(|s| serde_json::json!({"rows": s.rows, "cols": s.cols, "deleted": s.deleted}))
                    .collect();
                json(&serde_json::json!({
                    "initial": {"rows": r.initial.nrows(), "cols": r.initial.ncols},
                    "steps": steps,
                    "deletions": r.deletions(),
                    "transposed": r.transposed(),
                    "reduced": r.reduced.to_text(),
                }))?
            } else {
                let mut s = format!("initial: {}x{}\n", r.initial.nrows(), r.initial.ncols);
                for (i, step) in r.steps.iter().enumerate() {
                    s += &format!("step {}: {}x{}, deleted {}\n", i + 1, step.rows, step.cols, step.deleted);
                }
                s += &format!("stable after {} steps, {} deletions\n", r.steps.len(), r.deletions());
                s += &r.reduced.to_text();
                s
            };
            (text, io.output)
        }
        Command::Links { io, field } => {
            let k = SimplicialComplex::parse_text(&read(&io.input)?)?;
            let lw = homology::weeding_via_links_with_cap(&k, field, limits.face_cap)?;
            let mut s = String::from("face\tlink\tweeding\n");
            for face in k.faces_with_cap(limits.face_cap)? {
                let class = homology::classify(&homology::betti_with_cap(&k.link(&face)?, field, true, limits.face_cap)?);
                s += &format!("{}\t{}\t{}\n", format_one_based(&face), class, lw.weeding.contains(&face));
            }
            s += &format!("matches weeding: {}\n", lw.matches());
            (s, io.output)
        }
        Command::Implications { io, side, premise, target } => {
            let ctx = read_context(&read(&io.input)?)?;
            let side = match side {
                SideArg::Objects => Side::Objects,
                SideArg::Attributes => Side::Attributes,
            };
            let bound = match side {
                Side::Objects => ctx.nv(),
                Side::Attributes => ctx.nw(),
            };
            if target >= bound || premise.bound() > bound {
                return Err(Error::domain(format!("indices must lie in 1..={bound}")));
            }
            let closure = ctx.closure_on(side, &premise);
            let holds = closure.contains(target);
            (format!("closure: {}\nholds: {holds}\n", format_one_based(&closure)), io.output)
        }
        Command::Code { io } => {
            let cover = SampledCover::from_json(&read(&io.input)?)?;
            (neural::code_from_cover(&cover).to_text(), io.output)
        }
        Command::Report { io, field, json: as_json } => {
            let code = read_code(&read(&io.input)?)?;
            let r = neural::lattice_vs_nerve_report(&code, field)?;
            let text = if as_json { json(&r)? } else { r.to_string() };
            (text, io.output)
        }
    };
    Ok((text, output))
}
