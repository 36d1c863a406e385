//! Command-line front end: enumerate families, map objects along the
//! bijection pipeline, run the verification suite, and render diagrams.
//!
//! Exit codes: 0 success (and all verifications passed), 1 a verification
//! found a counterexample, 2 usage/IO/validation errors.

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use forestweb::catalan::{
    enumerate_tableaux, matching_to_tableau, path_to_tableau, tableau_to_matching,
    tableau_to_path, Tableau2Col,
};
use forestweb::io::{from_json, to_json, to_json_compact, CoreObject};
use forestweb::perm::enumerate_avoiders;
use forestweb::render::{
    export_dot, export_graph_tikz, export_matching_tikz, export_path_tikz, export_web_dot,
    export_web_tikz,
};
use forestweb::verify::{
    verify_corollary_decomposition, verify_counts, verify_lemmas, verify_theorem,
    VerificationReport,
};
use forestweb::webs::{enumerate_forest_webs, omega, realize_forest_web, to_graph};
use forestweb::{phi_inverse, pi, pi_inverse, Error, PatternSet};

#[derive(Parser)]
#[command(name = "forestweb", version, about = "Forest degree-two webs and pattern-avoiding permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List or count a combinatorial family at a given size
    Enumerate(EnumerateArgs),
    /// Convert one object into another along the bijection pipeline
    Map(MapArgs),
    /// Run the exhaustive verification suite
    Verify(VerifyArgs),
    /// Export a diagram as DOT or TikZ
    Render(RenderArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, value_enum)]
    family: Family,
    /// Print only the cardinality
    #[arg(long)]
    count_only: bool,
    /// One JSON envelope per line
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// One display line per object (default)
    #[arg(long)]
    table: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tableaux,
    Matchings,
    ForestWebs,
    Av132,
    /// Av(132, 4321, 3214)
    AvClass,
    /// Av(321, 2143, 3124)
    AvCummings,
}

#[derive(Args)]
struct MapArgs {
    #[arg(long, value_enum)]
    from: Object,
    #[arg(long, value_enum)]
    to: Object,
    /// JSON envelope file; `-` reads stdin
    #[arg(long)]
    input: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Object {
    Web,
    Tableau,
    Matching,
    Path,
    Perm,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    r_max: usize,
    #[arg(long, value_enum, default_value = "all")]
    claim: Claim,
    /// Emit reports as JSON envelopes instead of a table
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    Theorem,
    Counts,
    Lemmas,
    Decomposition,
    All,
}

#[derive(Args)]
struct RenderArgs {
    /// JSON envelope file; `-` reads stdin
    #[arg(long)]
    input: String,
    #[arg(long, value_enum)]
    format: Format,
    /// Output file; `-` writes stdout
    #[arg(long)]
    out: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Tikz,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Map(args) => map(args),
        Command::Verify(args) => verify(args),
        Command::Render(args) => render(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let r = args.r;
    let objects: Vec<CoreObject> = match args.family {
        Family::Tableaux => enumerate_tableaux(r)?.into_iter().map(CoreObject::Tableau).collect(),
        Family::Matchings => enumerate_tableaux(r)?
            .iter()
            .map(|t| CoreObject::Matching(tableau_to_matching(t)))
            .collect(),
        Family::ForestWebs => enumerate_forest_webs(r)?.into_iter().map(CoreObject::Web).collect(),
        Family::Av132 => perms(r, &PatternSet::av_132())?,
        Family::AvClass => perms(r, &PatternSet::forest_image_class())?,
        Family::AvCummings => perms(r, &PatternSet::cummings_class())?,
    };
    if args.count_only {
        println!("{}", objects.len());
    } else {
        for obj in &objects {
            if args.json {
                println!("{}", to_json_compact(obj));
            } else {
                println!("{}", display_line(obj));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn perms(r: usize, set: &PatternSet) -> Result<Vec<CoreObject>, Error> {
    Ok(enumerate_avoiders(r, set)?.into_iter().map(CoreObject::Permutation).collect())
}

fn display_line(obj: &CoreObject) -> String {
    match obj {
        CoreObject::Permutation(p) => p.to_string(),
        CoreObject::Tableau(t) => t.to_string(),
        CoreObject::Path(p) => p.to_string(),
        CoreObject::Matching(m) => m.to_string(),
        CoreObject::Web(w) => w.to_string(),
        CoreObject::Graph(g) => format!("web graph (r = {})", g.r),
        CoreObject::Report(rep) => report_line(rep),
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {path}: {e}")))
    }
}

fn map(args: MapArgs) -> Result<ExitCode, Error> {
    let obj = from_json(&read_input(&args.input)?)?;
    let kind_matches = matches!(
        (&obj, args.from),
        (CoreObject::Web(_), Object::Web)
            | (CoreObject::Tableau(_), Object::Tableau)
            | (CoreObject::Matching(_), Object::Matching)
            | (CoreObject::Path(_), Object::Path)
            | (CoreObject::Permutation(_), Object::Perm)
    );
    if !kind_matches {
        return Err(Error::Parse(format!(
            "input kind does not match --from: got {}",
            display_line(&obj)
        )));
    }
    // the permutation-to-web composite keeps its sharper diagnostic
    if let (CoreObject::Permutation(p), Object::Web) = (&obj, args.to) {
        let web = phi_inverse(p)?;
        println!("{}", to_json(&CoreObject::Web(web)));
        return Ok(ExitCode::SUCCESS);
    }
    let tableau: Tableau2Col = match &obj {
        CoreObject::Web(w) => omega(w),
        CoreObject::Tableau(t) => t.clone(),
        CoreObject::Matching(m) => matching_to_tableau(m),
        CoreObject::Path(p) => path_to_tableau(p),
        CoreObject::Permutation(p) => pi_inverse(p)?,
        _ => unreachable!("kind checked above"),
    };
    let out = match args.to {
        Object::Web => CoreObject::Web(realize_forest_web(&tableau_to_matching(&tableau))?),
        Object::Tableau => CoreObject::Tableau(tableau),
        Object::Matching => CoreObject::Matching(tableau_to_matching(&tableau)),
        Object::Path => CoreObject::Path(tableau_to_path(&tableau)),
        Object::Perm => CoreObject::Permutation(pi(&tableau)),
    };
    println!("{}", to_json(&out));
    Ok(ExitCode::SUCCESS)
}

fn report_line(rep: &VerificationReport) -> String {
    let mut line = format!(
        "{:<14} r = 1..={:<3} {:>10} instances {:>8} ms  {}",
        rep.claim,
        rep.r_max,
        rep.instances_checked,
        rep.elapsed_ms,
        if rep.passed() { "pass" } else { "FAIL" }
    );
    for f in &rep.failures {
        let _ = write!(line, "\n  counterexample: {f}");
    }
    line
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let mut reports = Vec::new();
    let r = args.r_max;
    match args.claim {
        Claim::Theorem => reports.push(verify_theorem(r)?),
        Claim::Counts => reports.push(verify_counts(r)?),
        Claim::Lemmas => reports.push(verify_lemmas(r)?),
        Claim::Decomposition => reports.push(verify_corollary_decomposition(r)?),
        Claim::All => {
            reports.push(verify_theorem(r)?);
            reports.push(verify_counts(r)?);
            reports.push(verify_lemmas(r)?);
            reports.push(verify_corollary_decomposition(r)?);
        }
    }
    let mut all_passed = true;
    for rep in &reports {
        if args.json {
            println!("{}", to_json_compact(&CoreObject::Report(rep.clone())));
        } else {
            println!("{}", report_line(rep));
        }
        all_passed &= rep.passed();
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn render(args: RenderArgs) -> Result<ExitCode, Error> {
    let obj = from_json(&read_input(&args.input)?)?;
    let text = match (args.format, &obj) {
        (Format::Dot, CoreObject::Web(w)) => export_web_dot(w),
        (Format::Dot, CoreObject::Graph(g)) => export_dot(g),
        (Format::Tikz, CoreObject::Web(w)) => export_web_tikz(w),
        (Format::Tikz, CoreObject::Graph(g)) => export_graph_tikz(g),
        (Format::Tikz, CoreObject::Matching(m)) => export_matching_tikz(m),
        (Format::Tikz, CoreObject::Path(p)) => export_path_tikz(p),
        (Format::Dot, CoreObject::Matching(_) | CoreObject::Path(_)) => {
            return Err(Error::Parse(
                "matchings and paths render as tikz only; use --format tikz".into(),
            ))
        }
        _ => {
            return Err(Error::Parse(format!(
                "cannot render {}; expected a web, web graph, matching or path",
                display_line(&obj)
            )))
        }
    };
    if args.out == "-" {
        print!("{text}");
    } else {
        fs::write(&args.out, &text).map_err(|e| Error::Parse(format!("writing {}: {e}", args.out)))?;
    }
    // a rendered web graph should also be structurally sound; warn loudly
    if let CoreObject::Web(w) = &obj {
        debug_assert!(forestweb::webs::validate_web_graph(&to_graph(w)).all_passed());
    }
    Ok(ExitCode::SUCCESS)
}
