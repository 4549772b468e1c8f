//! Subcommand dispatch for the `outfn` binary. Every subcommand returns a
//! [`CommandOutcome`] carrying human-readable text, a JSON payload and an
//! exit code: 0 when every check passed, 1 when a check failed, 2 for usage
//! or input errors.

use std::collections::HashMap;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use outfn::freegrp::{FreeAutomorphism, GeneratorWord};
use outfn::gersten::{
    gersten_presentation, verify_homomorphism, verify_identities, IntegerMatrixGroup, MatrixGroup,
    OuterGroup, VerificationReport,
};
use outfn::graphact::{
    case_table_csv, case_table_json, enumerate_case_table, is_admissible,
    is_admissible_brute_force, FiniteGraph, GroupActionOnGraph, BRUTE_FORCE_EDGE_LIMIT,
};
use outfn::repdecomp::{
    epsilon_decomposition, level_dimensions, minimal_diagram, sym_decompose, RepError,
    Representation, SymmetricSubgroup,
};
use outfn::torelli::irreducibility_probe;
use outfn::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutcome {
    pub code: i32,
    pub text: String,
    pub json: Option<Value>,
}

impl CommandOutcome {
    fn checked(passed: bool, text: String, json: Value) -> Self {
        CommandOutcome {
            code: if passed { 0 } else { 1 },
            text,
            json: Some(json),
        }
    }

    fn usage(text: String) -> Self {
        CommandOutcome {
            code: 2,
            text,
            json: None,
        }
    }

    /// What the binary prints: the JSON payload when asked for and present.
    pub fn render(&self, as_json: bool) -> String {
        match (&self.json, as_json) {
            (Some(v), true) => serde_json::to_string_pretty(v).expect("JSON values serialize"),
            _ => self.text.clone(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "outfn",
    about = "Verification suites for Out(F_3): presentations, representations, graphs"
)]
pub struct Cli {
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Target {
    Outer,
    Abelianization,
    File,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Group {
    S3,
    S4,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Valence profiles of edge-transitive quotient graphs.
    CaseTable {
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value_t = 5)]
        rank_bound: u32,
        #[arg(long, default_value_t = 48)]
        group_order: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check every relator of Gersten's presentation under an assignment.
    VerifyGersten {
        #[arg(long, value_enum)]
        target: Target,
        /// Representation JSON, for `--target file`.
        #[arg(long)]
        file: Option<String>,
        #[arg(long, default_value_t = 3)]
        rank: usize,
    },
    /// Eigenspaces, levels and symmetric-group content of a representation.
    Decompose {
        /// Built-in name such as `standard+det`, or a JSON file.
        #[arg(long)]
        rep: String,
        #[arg(long, value_enum)]
        group: Option<Group>,
    },
    /// Minimal diagram of a group element on a representation.
    Diagram {
        #[arg(long)]
        rep: String,
        /// A word such as `r21` or `s23^-1 l21 s23`.
        #[arg(long)]
        element: String,
    },
    /// Cyclic submodules of Sym² of the dual under the congruence generators.
    Torelli {
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Admissibility of a graph under a finite group action.
    Admissible {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        action: String,
    },
    /// Check the curated outer-automorphism identities.
    Identities {
        #[arg(long, default_value_t = 3)]
        rank: usize,
    },
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn execute<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            CommandOutcome {
                code,
                text: e.to_string(),
                json: None,
            }
        }
    }
}

fn run(command: Command) -> CommandOutcome {
    let result = match command {
        Command::CaseTable {
            reduced,
            rank_bound,
            group_order,
            format,
        } => case_table(reduced, rank_bound, group_order, format),
        Command::VerifyGersten { target, file, rank } => {
            verify_gersten(target, file.as_deref(), rank)
        }
        Command::Decompose { rep, group } => decompose(&rep, group),
        Command::Diagram { rep, element } => diagram(&rep, &element),
        Command::Torelli { samples, seed } => torelli(samples, seed),
        Command::Admissible { graph, action } => admissible(&graph, &action),
        Command::Identities { rank } => identities(rank),
    };
    result.unwrap_or_else(CommandOutcome::usage)
}

type Outcome = Result<CommandOutcome, String>;

fn case_table(reduced: bool, rank_bound: u32, group_order: u32, format: Format) -> Outcome {
    if group_order == 0 {
        return Err("group order must be positive".into());
    }
    let rows = enumerate_case_table(rank_bound, group_order, reduced).map_err(|e| e.to_string())?;
    let json = case_table_json(&rows);
    let text = match format {
        Format::Csv => case_table_csv(&rows, rank_bound),
        Format::Json => serde_json::to_string_pretty(&json).expect("JSON values serialize"),
    };
    Ok(CommandOutcome::checked(true, text, json))
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
}

/// Input problems are `Err`; a file whose matrices violate a relator is
/// `Ok(Err(failing relators))`, a check failure rather than a usage error.
fn load_rep(
    source: &str,
    rank: usize,
    checked: bool,
) -> Result<Result<Representation, Vec<String>>, String> {
    let loaded = if Path::new(source).is_file() {
        let value: Value =
            serde_json::from_str(&read_file(source)?).map_err(|e| format!("{source}: {e}"))?;
        Representation::from_json(source, &value, checked)
    } else {
        Representation::builtin(source, rank)
    };
    match loaded {
        Ok(rep) => Ok(Ok(rep)),
        Err(RepError::NotAHomomorphism(failed)) => Ok(Err(failed)),
        Err(e) => Err(e.to_string()),
    }
}

fn rejected(source: &str, failed: Vec<String>) -> CommandOutcome {
    let mut text = format!("{source} is not a representation; failing relators:\n");
    for r in &failed {
        text += &format!("FAIL {r}\n");
    }
    CommandOutcome::checked(
        false,
        text,
        json!({ "rep": source, "failing_relators": failed }),
    )
}

fn report_text(report: &VerificationReport, what: &str) -> String {
    let mut text = format!(
        "{what}: {} relators passed, {} failed\n",
        report.pass_count(),
        report.fail_count()
    );
    for o in report.failures() {
        text += &format!("FAIL [{}] {}\n", o.family, o.relator);
    }
    text
}

fn verify_gersten(target: Target, file: Option<&str>, rank: usize) -> Outcome {
    let p = gersten_presentation(rank).map_err(|e| e.to_string())?;
    let report = match target {
        Target::Outer => {
            let assignment: HashMap<_, _> = p
                .generators
                .iter()
                .map(|&g| {
                    (
                        g,
                        FreeAutomorphism::generator(g, rank).expect("valid generator"),
                    )
                })
                .collect();
            verify_homomorphism(&p, &assignment, &OuterGroup::new(rank))
        }
        Target::Abelianization => {
            let assignment: HashMap<_, _> = p
                .generators
                .iter()
                .map(|&g| {
                    (
                        g,
                        FreeAutomorphism::generator(g, rank)
                            .expect("valid generator")
                            .abelianization(),
                    )
                })
                .collect();
            verify_homomorphism(&p, &assignment, &IntegerMatrixGroup::new(rank))
        }
        Target::File => {
            let path = file.ok_or("--target file needs --file <path>")?;
            let rep = load_rep(path, rank, false)?.expect("unchecked loading never rejects");
            if rep.rank() != rank {
                return Err(format!("{path} has rank {}, expected {rank}", rep.rank()));
            }
            let assignment: HashMap<_, _> = rep
                .gersten_images()
                .iter()
                .map(|(&g, m)| (g, m.clone()))
                .collect();
            verify_homomorphism(&p, &assignment, &MatrixGroup::<Rational>::new(rep.dim()))
        }
    }
    .map_err(|e| e.to_string())?;
    let what = format!("{target:?}").to_lowercase();
    Ok(CommandOutcome::checked(
        report.all_passed(),
        report_text(&report, &what),
        report.to_json(),
    ))
}

fn decompose(source: &str, group: Option<Group>) -> Outcome {
    let rep = match load_rep(source, 3, true)? {
        Ok(rep) => rep,
        Err(failed) => return Ok(rejected(source, failed)),
    };
    let dec = epsilon_decomposition(&rep).map_err(|e| e.to_string())?;
    let levels = level_dimensions(&dec).map_err(|e| e.to_string())?;
    let mut text = format!("{} (dimension {})\n", rep.name(), rep.dim());
    let mut spaces = serde_json::Map::new();
    for set in dec.support() {
        let d = dec.space(set).dim();
        text += &format!("  E{set}: {d}\n");
        spaces.insert(set.to_string(), json!(d));
    }
    text += &format!("  levels V0..V{}: {:?}\n", levels.len() - 1, levels);
    let groups = match group {
        Some(Group::S3) => vec![SymmetricSubgroup::S3],
        Some(Group::S4) => vec![SymmetricSubgroup::S4],
        None if rep.rank() == 3 => vec![SymmetricSubgroup::S3, SymmetricSubgroup::S4],
        None => vec![SymmetricSubgroup::S3],
    };
    let mut content = serde_json::Map::new();
    for g in groups {
        let m = sym_decompose(&rep, g).map_err(|e| e.to_string())?;
        text += &format!("  as {g:?}-module: {m}\n");
        content.insert(format!("{g:?}").to_lowercase(), m.to_json());
    }
    let json = json!({ "rep": rep.name(), "dim": rep.dim(), "levels": levels, "spaces": spaces, "symmetric": content });
    Ok(CommandOutcome::checked(true, text, json))
}

fn diagram(source: &str, element: &str) -> Outcome {
    let rep = match load_rep(source, 3, true)? {
        Ok(rep) => rep,
        Err(failed) => return Ok(rejected(source, failed)),
    };
    let word = GeneratorWord::parse(element).map_err(|e| e.to_string())?;
    let d = minimal_diagram(&rep, &word).map_err(|e| e.to_string())?;
    let text = format!(
        "minimal diagram of {element} on {}\n{}",
        rep.name(),
        d.render_text()
    );
    Ok(CommandOutcome::checked(
        true,
        text,
        json!({ "rep": rep.name(), "element": element, "diagram": d.to_json() }),
    ))
}

fn torelli(samples: usize, seed: u64) -> Outcome {
    let report = irreducibility_probe(samples, seed).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for (prefix, label) in [
        ("basis", "basis vectors"),
        ("pair", "two-monomial combinations"),
        ("random", "random vectors"),
    ] {
        let (full, total) = report.count_with_prefix(prefix);
        text += &format!("{label}: {full}/{total} generate the full space\n");
    }
    for f in report.failures() {
        text += &format!(
            "FAIL {} [{}] spans only {}\n",
            f.label,
            f.vector.join(", "),
            f.closure_dim
        );
    }
    Ok(CommandOutcome::checked(
        report.all_full(),
        text,
        report.to_json(),
    ))
}

fn admissible(graph_path: &str, action_path: &str) -> Outcome {
    let g =
        FiniteGraph::parse(&read_file(graph_path)?).map_err(|e| format!("{graph_path}: {e}"))?;
    let act = GroupActionOnGraph::parse(&g, &read_file(action_path)?)
        .map_err(|e| format!("{action_path}: {e}"))?;
    let verdict = is_admissible(&act).map_err(|e| e.to_string())?;
    let orbit_sets = act.edge_orbits();
    let orbits: Vec<Vec<&str>> = orbit_sets
        .iter()
        .map(|o| o.iter().map(|&e| g.edge(e).name.as_str()).collect())
        .collect();
    let mut text = format!(
        "group order {}, {} edge orbits\n",
        act.order(),
        orbits.len()
    );
    for (set, names) in orbit_sets.iter().zip(&orbits) {
        let forest = if g.is_forest(set) { " (forest)" } else { "" };
        text += &format!("  orbit {{{}}}{forest}\n", names.join(", "));
    }
    text += &format!("admissible: {verdict}\n");
    let cross = if g.edge_count() <= BRUTE_FORCE_EDGE_LIMIT {
        let exhaustive = is_admissible_brute_force(&act).map_err(|e| e.to_string())?;
        text += &format!("exhaustive check over unions of orbits: {exhaustive}\n");
        Some(exhaustive)
    } else {
        None
    };
    let consistent = cross.is_none_or(|c| c == verdict);
    let json = json!({ "order": act.order(), "orbits": orbits, "admissible": verdict, "exhaustive": cross });
    Ok(CommandOutcome::checked(consistent, text, json))
}

fn identities(rank: usize) -> Outcome {
    let outcomes = verify_identities(rank).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for o in &outcomes {
        text += &format!("{} {}\n", if o.holds { "PASS" } else { "FAIL" }, o.label);
    }
    let passed = outcomes.iter().all(|o| o.holds);
    Ok(CommandOutcome::checked(
        passed,
        text,
        json!({ "identities": outcomes }),
    ))
}
