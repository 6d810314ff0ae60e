//! `pursuit` — command-line surface for the exact cops-and-robbers toolkit.
//!
//! Subcommands build the graph constructions, solve the pursuit game by
//! retrograde analysis, pit scripted strategies against table-optimal
//! opponents, run the claim-verification suites, and export graphs as JSON
//! or DOT. Graphs stream between subcommands as JSON documents on stdin and
//! stdout, so calls compose into pipelines.
//!
//! Exit codes: 0 success (and any verified claim holds), 1 a claim was
//! violated (evidence printed), 2 usage or input error, 3 resource budget
//! exceeded.

mod doc;

use clap::{Parser, Subcommand};
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use doc::GraphDocument;
use pursuit_core::construct::{
    dodecahedron, kite_instance, one_planarize, petersen, petersen_two_planar_drawing,
    quadrangulate, subdivide_uniform, triangulate_pentagons, KiteInstance,
};
use pursuit_core::embed::{edge_key, VertexTag};
use pursuit_core::outer::{find_chordless_cycle, robber_policy_outer};
use pursuit_core::solver::{cop_number, solve, CopNumber, GameTable, SolveBudget, SolveError};
use pursuit_core::strategy::{
    simulate, CopPlacement, CopPolicy, GreedyCop, OptimalCops, OptimalRobber, Outcome,
    RobberEscapePolicy, RobberPolicy, SimError, StationaryRobber, ThreeCopPolicy, Transcript,
};
use pursuit_core::verify;

#[derive(Parser)]
#[command(
    name = "pursuit",
    version,
    about = "Exact cops-and-robbers toolkit: build constructions, solve the game, run strategies, verify claims, export graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a construction as a JSON graph document (or transform a piped one)
    Build {
        /// One of: dodecahedron, triangulation (alias T), quadrangulation
        /// (alias Q), kite-graph (alias Qprime), petersen, petersen-drawing,
        /// subdivide, one-planarize
        target: String,
        /// Interior vertices inserted per edge (subdivide only)
        #[arg(long)]
        parts: Option<usize>,
        /// Input document; stdin when omitted (subdivide / one-planarize)
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Solve the k-cop game exactly on a piped graph document
    Solve {
        /// Number of cops
        #[arg(long)]
        cops: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Smallest winning cop count, searched from 1 up to --max
    Copnumber {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Play a cop policy against a robber policy and print the transcript
    Simulate {
        /// Cop policy: optimal, seeded, three-cop, greedy
        #[arg(long)]
        cops: String,
        /// Robber policy: optimal, escape, outer, stationary
        #[arg(long)]
        robber: String,
        /// Maximum number of full rounds
        #[arg(long)]
        rounds: usize,
        /// Placement seed (required by the seeded cop policy)
        #[arg(long)]
        seed: Option<u64>,
        /// Number of cops for the optimal/seeded policies
        #[arg(long)]
        cop_count: Option<usize>,
        /// Start vertex for the stationary robber
        #[arg(long)]
        start: Option<usize>,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write the transcript here instead of stdout
        #[arg(long)]
        transcript_out: Option<PathBuf>,
    },
    /// Run a named verification suite and print VERDICT lines
    Verify {
        /// One of the named checks, or "all"
        check: String,
        /// Seed for the randomized sweeps
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Re-emit a document as canonical JSON, DOT, or a replayed transcript
    Export {
        /// json, dot, or transcript
        #[arg(long)]
        format: String,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Transcript file to replay (format=transcript)
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
}

enum AppError {
    /// Bad arguments or malformed input: exit 2.
    Usage(String),
    /// A checked claim failed, with evidence: exit 1.
    Claim(String),
    /// State or memory budget exceeded: exit 3.
    Budget(String),
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

fn solve_error(e: SolveError) -> AppError {
    match e {
        SolveError::BudgetExceeded { .. } | SolveError::MemoryExceeded { .. } => {
            AppError::Budget(e.to_string())
        }
        other => AppError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Claim(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Budget(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn read_text(input: &Option<PathBuf>) -> Result<String, AppError> {
    match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn read_document(input: &Option<PathBuf>) -> Result<GraphDocument, AppError> {
    GraphDocument::from_json(&read_text(input)?).map_err(usage)
}

fn dispatch(cmd: Cmd) -> Result<(), AppError> {
    match cmd {
        Cmd::Build {
            target,
            parts,
            input,
        } => build(&target, parts, &input),
        Cmd::Solve { cops, input } => solve_cmd(cops, &input),
        Cmd::Copnumber { max, input } => copnumber_cmd(max, &input),
        Cmd::Simulate {
            cops,
            robber,
            rounds,
            seed,
            cop_count,
            start,
            input,
            transcript_out,
        } => simulate_cmd(
            &cops,
            &robber,
            rounds,
            seed,
            cop_count,
            start,
            &input,
            &transcript_out,
        ),
        Cmd::Verify { check, seed } => verify_cmd(&check, seed),
        Cmd::Export {
            format,
            input,
            transcript,
        } => export_cmd(&format, &input, &transcript),
    }
}

/// The dodecahedron-seeded pipeline instance behind the kite-graph target.
fn dodecahedral_kite_instance() -> KiteInstance {
    kite_instance("dodecahedron", &dodecahedron()).expect("the fixed pipeline succeeds")
}

fn build(target: &str, parts: Option<usize>, input: &Option<PathBuf>) -> Result<(), AppError> {
    let doc = match target {
        "dodecahedron" => GraphDocument::from_embedded(&dodecahedron()),
        "triangulation" | "T" | "t" => GraphDocument::from_embedded(
            &triangulate_pentagons(&dodecahedron()).expect("dodecahedron faces are pentagons"),
        ),
        "quadrangulation" | "Q" | "q" => GraphDocument::from_embedded(
            &quadrangulate(&triangulate_pentagons(&dodecahedron()).expect("pentagons"))
                .expect("triangulations quadrangulate"),
        ),
        "kite-graph" | "Qprime" | "qprime" => {
            GraphDocument::from_kite_instance(&dodecahedral_kite_instance())
        }
        "petersen" => GraphDocument::from_graph(&petersen()),
        "petersen-drawing" => {
            GraphDocument::from_crossing_drawing(&petersen_two_planar_drawing())
        }
        "subdivide" => {
            let s = parts.ok_or_else(|| usage("subdivide requires --parts"))?;
            let g = read_document(input)?.to_graph().map_err(usage)?;
            GraphDocument::from_graph(&subdivide_uniform(&g, s))
        }
        "one-planarize" => {
            let drawing = read_document(input)?.to_crossing_drawing().map_err(usage)?;
            let op = one_planarize(&drawing).map_err(|e| usage(e.to_string()))?;
            eprintln!(
                "one-planarize: n={} sub-edges-per-edge={} crossings={} max-per-sub-edge={}",
                op.graph.n(),
                op.subdivisions_per_edge + 1,
                op.crossings.len(),
                op.max_crossings_per_sub_edge()
            );
            if !op.is_one_plane() {
                return Err(AppError::Claim(format!(
                    "CLAIM_VIOLATION a sub-edge carries {} crossings",
                    op.max_crossings_per_sub_edge()
                )));
            }
            let records = op
                .crossings
                .iter()
                .map(|&(e, f)| doc::CrossingRecord {
                    pair: [e, f],
                    steps: [0, 0],
                })
                .collect();
            GraphDocument {
                crossings: Some(records),
                ..GraphDocument::from_graph(&op.graph)
            }
        }
        other => {
            return Err(usage(format!(
                "unknown build target {other:?}; see `pursuit build --help`"
            )))
        }
    };
    print!("{}", doc.to_json());
    Ok(())
}

fn solve_cmd(cops: usize, input: &Option<PathBuf>) -> Result<(), AppError> {
    let doc = read_document(input)?;
    let g = doc.to_graph().map_err(usage)?;
    let table = solve(&g, cops, &SolveBudget::default()).map_err(solve_error)?;
    println!("n={} m={} cops={}", g.n(), g.m(), cops);
    println!("states={}", table.state_count());
    println!("cop_win={}", table.is_cop_win());
    if table.is_cop_win() {
        println!("placement={:?}", table.optimal_cop_placement());
        println!("max_capture_half_moves={}", table.max_capture_time());
    }
    Ok(())
}

fn copnumber_cmd(max: usize, input: &Option<PathBuf>) -> Result<(), AppError> {
    let doc = read_document(input)?;
    let g = doc.to_graph().map_err(usage)?;
    match cop_number(&g, max, &SolveBudget::default()).map_err(solve_error)? {
        CopNumber::Exact(k) => println!("cop_number={k}"),
        CopNumber::ExceedsMax(m) => println!("cop_number=exceeds {m}"),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn simulate_cmd(
    cops: &str,
    robber: &str,
    rounds: usize,
    seed: Option<u64>,
    cop_count: Option<usize>,
    start: Option<usize>,
    input: &Option<PathBuf>,
    transcript_out: &Option<PathBuf>,
) -> Result<(), AppError> {
    let doc = read_document(input)?;
    let g = doc.to_graph().map_err(usage)?;

    let cop_k = match cops {
        "optimal" | "seeded" => cop_count
            .ok_or_else(|| usage(format!("--cop-count is required for the {cops} cop policy")))?,
        "three-cop" => 3,
        "greedy" => 1,
        other => return Err(usage(format!("unknown cop policy {other:?}"))),
    };
    let needs_table = matches!(cops, "optimal" | "seeded") || robber == "optimal";
    let table: Option<GameTable> = if needs_table {
        Some(solve(&g, cop_k, &SolveBudget::default()).map_err(solve_error)?)
    } else {
        None
    };

    let mut cop_policy: Box<dyn CopPolicy> = match cops {
        "optimal" => Box::new(OptimalCops::new(
            table.as_ref().expect("solved above"),
            CopPlacement::Optimal,
        )),
        "seeded" => {
            let seed =
                seed.ok_or_else(|| usage("--seed is required for the seeded cop policy"))?;
            Box::new(OptimalCops::new(
                table.as_ref().expect("solved above"),
                CopPlacement::Seeded(seed),
            ))
        }
        "three-cop" => {
            let kites = doc.to_kite_map(&g).map_err(usage)?;
            Box::new(ThreeCopPolicy::new(&kites))
        }
        "greedy" => Box::new(GreedyCop),
        _ => unreachable!("validated above"),
    };

    let mut robber_policy: Box<dyn RobberPolicy> = match robber {
        "optimal" => Box::new(OptimalRobber::new(table.as_ref().expect("solved above"))),
        "escape" => {
            let quad = doc.to_quad_embedding().map_err(usage)?;
            Box::new(RobberEscapePolicy::new(&quad).map_err(|e| usage(e.to_string()))?)
        }
        "outer" => {
            if doc.outer != Some(true) {
                return Err(usage(
                    "the outer robber policy needs a document with \"outer\": true",
                ));
            }
            let witness = find_chordless_cycle(&g).ok_or_else(|| {
                usage("the graph is chordal; the outer evasion policy needs a chordless cycle")
            })?;
            let d = pursuit_core::outer::OuterDrawing::new(g.clone(), 1)
                .map_err(|e| usage(e.to_string()))?;
            Box::new(robber_policy_outer(&d, &witness).map_err(|e| usage(e.to_string()))?)
        }
        "stationary" => {
            let start =
                start.ok_or_else(|| usage("--start is required for the stationary robber"))?;
            Box::new(StationaryRobber { start })
        }
        other => return Err(usage(format!("unknown robber policy {other:?}"))),
    };

    match simulate(&g, cop_policy.as_mut(), robber_policy.as_mut(), rounds) {
        Ok(t) => {
            emit_transcript(&t, transcript_out)?;
            match t.outcome {
                Outcome::Captured { round } => println!("outcome=CAPTURED round={round}"),
                Outcome::Survived { rounds } => println!("outcome=SURVIVED rounds={rounds}"),
            }
            Ok(())
        }
        Err(SimError::ClaimViolation {
            side,
            round,
            detail,
            transcript,
        }) => {
            emit_transcript(&transcript, transcript_out)?;
            Err(AppError::Claim(format!(
                "CLAIM_VIOLATION side={side:?} round={round} detail={detail}"
            )))
        }
        Err(e) => Err(AppError::Claim(format!("ILLEGAL {e}"))),
    }
}

fn emit_transcript(t: &Transcript, out: &Option<PathBuf>) -> Result<(), AppError> {
    let text = t.to_lines();
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify_cmd(check: &str, seed: u64) -> Result<(), AppError> {
    let verdicts = if check == "all" {
        let mut all = Vec::new();
        for name in verify::CHECK_NAMES {
            all.extend(verify::run_check(name, seed).expect("known check name"));
        }
        all
    } else {
        verify::run_check(check, seed).ok_or_else(|| {
            usage(format!(
                "unknown check {check:?}; available: {} or all",
                verify::CHECK_NAMES.join(", ")
            ))
        })?
    };
    for v in &verdicts {
        println!("{v}");
    }
    let failed = verdicts.iter().filter(|v| !v.pass).count();
    if failed > 0 {
        return Err(AppError::Claim(format!(
            "{failed} of {} verdicts failed",
            verdicts.len()
        )));
    }
    Ok(())
}

fn export_cmd(
    format: &str,
    input: &Option<PathBuf>,
    transcript: &Option<PathBuf>,
) -> Result<(), AppError> {
    match format {
        "json" => {
            let doc = read_document(input)?;
            print!("{}", doc.to_json());
            Ok(())
        }
        "dot" => {
            let doc = read_document(input)?;
            print!("{}", to_dot(&doc)?);
            Ok(())
        }
        "transcript" => {
            let doc = read_document(input)?;
            let g = doc.to_graph().map_err(usage)?;
            let path = transcript
                .as_ref()
                .ok_or_else(|| usage("--transcript is required for format=transcript"))?;
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
            let t = Transcript::from_lines(&text).map_err(usage)?;
            t.validate_against(&g).map_err(usage)?;
            print!("{}", t.to_lines());
            match t.outcome {
                Outcome::Captured { round } => println!("outcome=CAPTURED round={round}"),
                Outcome::Survived { rounds } => println!("outcome=SURVIVED rounds={rounds}"),
            }
            Ok(())
        }
        other => Err(usage(format!("unknown export format {other:?}"))),
    }
}

/// Fill colors per vertex role; crossing-pair edges render dashed.
fn tag_style(tag: VertexTag) -> &'static str {
    match tag {
        VertexTag::DVertex => "#4e79a7",
        VertexTag::TApex => "#59a14f",
        VertexTag::EdgeMid => "#f28e2b",
        VertexTag::FaceVertex => "#e15759",
    }
}

fn to_dot(doc: &GraphDocument) -> Result<String, AppError> {
    let tags = doc.parsed_tags().map_err(usage)?;
    let crossing_edges: std::collections::HashSet<(usize, usize)> = doc
        .crossings
        .iter()
        .flatten()
        .flat_map(|r| r.pair.iter().map(|&(u, v)| edge_key(u, v)))
        .collect();
    let mut out = String::from("graph pursuit {\n");
    out.push_str("  node [shape=circle, style=filled, fillcolor=\"#ffffff\"];\n");
    for v in 0..doc.n {
        match &tags {
            Some(tags) => out.push_str(&format!(
                "  {v} [class=\"{}\", fillcolor=\"{}\"];\n",
                tags[v].as_str(),
                tag_style(tags[v])
            )),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    let mut edges: Vec<(usize, usize)> = doc.edges.iter().map(|&(u, v)| edge_key(u, v)).collect();
    edges.sort_unstable();
    for (u, v) in edges {
        if crossing_edges.contains(&(u, v)) {
            out.push_str(&format!("  {u} -- {v} [style=dashed];\n"));
        } else {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
