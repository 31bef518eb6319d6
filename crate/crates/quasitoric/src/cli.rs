//! Command-line surface: document parsing, dispatch to the library, and
//! canonical printing.
//!
//! Exit codes: 0 = success/affirmative, 1 = negative answer, 2 = input
//! error, 3 = field or applicability limitation, 4 = budget exceeded.
//! The environment variable QT_BUDGET overrides the candidate cap of
//! `search`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::correspond::{
    curve_fiber, curve_point, point_to_relation, transport_from_reduced,
    transport_to_reduced, CorrespondError,
};
use crate::document::{
    read_point, read_problem, read_relation, write_point, write_relation,
    write_relation_list, DocumentError,
};
use crate::families::{
    family_exists, family_sample, FamilyCase, FamilyError, FamilyStatus,
};
use crate::poly::{format_form, parse_form, Form, Mono, Scalar};
use crate::relation::{
    equivalent, validate_problem, verify_relation, ProblemInstance, Relation,
    RelationError,
};
use crate::search::{
    brute_force, complete_relation, SearchError, SearchSpec, DEFAULT_SEARCH_CAP,
};
use crate::types::TypeTriple;

/// What a command produced: an exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl std::fmt::Display) -> Failure {
    Failure {
        code,
        message: message.to_string(),
    }
}

#[derive(Parser)]
#[command(
    name = "qtr",
    version,
    about = "Verify, transform, classify, and enumerate quasi-toric relations \
             among homogeneous trivariate forms over cyclotomic fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplicative decomposition of a type triple.
    Decompose { p0: u64, p1: u64, p2: u64 },
    /// Print the reduced type of a type triple.
    #[command(name = "reduce-type")]
    ReduceType { p0: u64, p1: u64, p2: u64 },
    /// Check a relation document against a problem document.
    Verify { problem: PathBuf, relation: PathBuf },
    /// Decide equivalence of two relations, printing the witness.
    Equiv {
        problem: PathBuf,
        rel1: PathBuf,
        rel2: PathBuf,
    },
    /// Move a relation between a type and its reduced type.
    Transport {
        /// Push the relation down to the reduced type.
        #[arg(long = "to-reduced", conflicts_with = "from_target")]
        to_reduced: bool,
        /// Lift the relation up to this target type (comma-separated).
        #[arg(long = "from-target", value_name = "TYPE")]
        from_target: Option<String>,
        problem: PathBuf,
        relation: PathBuf,
    },
    /// Print the curve point under a relation of reduced type.
    #[command(name = "curve-point")]
    CurvePoint { problem: PathBuf, relation: PathBuf },
    /// List all relations over the curve point of the given relation.
    Fiber { problem: PathBuf, relation: PathBuf },
    /// Reconstruct the relation over a curve point (s01 = 1 only).
    #[command(name = "point-to-relation")]
    PointToRelation { problem: PathBuf, point: PathBuf },
    /// Family existence and sampling.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Enumerate relations over a finite coefficient grid.
    Search {
        problem: PathBuf,
        /// Component degrees, comma-separated: d0,d1,d2.
        #[arg(long = "deg", value_name = "D0,D1,D2")]
        deg: String,
        /// Coefficient grid, comma-separated constants.
        #[arg(long = "coeffs", value_name = "LIST", allow_hyphen_values = true)]
        coeffs: String,
        /// Collapse equivalent relations, keeping the first found.
        #[arg(long)]
        dedupe: bool,
    },
    /// Complete the determined component of a (1, p, p) relation.
    Complete {
        problem: PathBuf,
        #[arg(allow_hyphen_values = true)]
        h1: String,
        #[arg(allow_hyphen_values = true)]
        h2: String,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Decide whether the reduced type carries a relation family.
    Exists {
        problem: PathBuf,
        /// Relation document certifying the conic case.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Degree shifts to try when searching for a witness.
        #[arg(long, default_value_t = 0)]
        budget: u64,
    },
    /// Emit family members from the deterministic parameter ladder.
    Sample {
        problem: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Number of members to emit.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        budget: u64,
    },
}

/// Parses and runs one command line (including the program name) and
/// returns its outputs instead of touching the process.
pub fn dispatch<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => CommandResult {
                    exit_code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    let mut warnings: Vec<String> = Vec::new();
    match run(cli.command, &mut warnings) {
        Ok(mut result) => {
            if !warnings.is_empty() {
                let mut w = warnings.join("\n");
                w.push('\n');
                result.stderr.insert_str(0, &w);
            }
            result
        }
        Err(Failure { code, message }) => {
            let mut stderr = warnings.join("\n");
            if !stderr.is_empty() {
                stderr.push('\n');
            }
            let _ = writeln!(stderr, "error: {message}");
            CommandResult {
                exit_code: code,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn ok(stdout: String) -> Result<CommandResult, Failure> {
    Ok(CommandResult {
        exit_code: 0,
        stdout,
        stderr: String::new(),
    })
}

fn negative(stdout: String) -> Result<CommandResult, Failure> {
    Ok(CommandResult {
        exit_code: 1,
        stdout,
        stderr: String::new(),
    })
}

fn run(command: Command, warnings: &mut Vec<String>) -> Result<CommandResult, Failure> {
    match command {
        Command::Decompose { p0, p1, p2 } => {
            let t = new_type([p0, p1, p2])?;
            let d = t.decompose();
            let mut out = String::new();
            let _ = writeln!(out, "r = {}", d.r);
            let _ = writeln!(out, "d = {}", d.d);
            let _ = writeln!(out, "s01 = {}", d.s01);
            let _ = writeln!(out, "s02 = {}", d.s02);
            let _ = writeln!(out, "s12 = {}", d.s12);
            let _ = writeln!(out, "t = [{}, {}, {}]", d.t[0], d.t[1], d.t[2]);
            let _ = writeln!(out, "w = [{}, {}, {}]", d.w[0], d.w[1], d.w[2]);
            ok(out)
        }
        Command::ReduceType { p0, p1, p2 } => {
            let t = new_type([p0, p1, p2])?;
            let q = t.reduce().entries();
            ok(format!("{} {} {}\n", q[0], q[1], q[2]))
        }
        Command::Verify { problem, relation } => {
            let p = load_problem(&problem, warnings)?;
            let r = load_relation(&relation, &p, warnings)?;
            match verify_relation(&p, &r) {
                Ok(true) => ok("valid relation\n".to_string()),
                Ok(false) => negative("not a relation\n".to_string()),
                Err(e) => Err(relation_failure(e)),
            }
        }
        Command::Equiv {
            problem,
            rel1,
            rel2,
        } => {
            let p = load_problem(&problem, warnings)?;
            let r1 = load_relation(&rel1, &p, warnings)?;
            let r2 = load_relation(&rel2, &p, warnings)?;
            match equivalent(p.ptype, &r1, &r2) {
                Ok(Some(w)) => ok(format!(
                    "u = \"{}\"\nv = \"{}\"\n",
                    format_form(&w.u),
                    format_form(&w.v)
                )),
                Ok(None) => negative("not equivalent\n".to_string()),
                Err(e) => Err(relation_failure(e)),
            }
        }
        Command::Transport {
            to_reduced,
            from_target,
            problem,
            relation,
        } => {
            let p = load_problem(&problem, warnings)?;
            let r = load_relation(&relation, &p, warnings)?;
            require_verifying(&p, &r)?;
            match (to_reduced, from_target) {
                (true, None) => {
                    let (moved, q) =
                        transport_to_reduced(p.ptype, &r).map_err(correspond_failure)?;
                    ok(write_relation(p.order(), Some(q), &moved))
                }
                (false, Some(text)) => {
                    let target = parse_type_list(&text)?;
                    if target.reduce() != p.ptype {
                        return Err(fail(
                            2,
                            format!(
                                "the problem must carry the reduced type of the \
                                 target; reduce({}) != {}",
                                type_text(target),
                                type_text(p.ptype)
                            ),
                        ));
                    }
                    let moved =
                        transport_from_reduced(target, &r).map_err(correspond_failure)?;
                    ok(write_relation(p.order(), Some(target), &moved))
                }
                _ => Err(fail(
                    2,
                    "exactly one of --to-reduced or --from-target is required",
                )),
            }
        }
        Command::CurvePoint { problem, relation } => {
            let p = load_problem(&problem, warnings)?;
            let r = load_relation(&relation, &p, warnings)?;
            require_verifying(&p, &r)?;
            let pt = curve_point(p.ptype, &r).map_err(correspond_failure)?;
            ok(write_point(p.order(), &pt))
        }
        Command::Fiber { problem, relation } => {
            let p = load_problem(&problem, warnings)?;
            let r = load_relation(&relation, &p, warnings)?;
            require_verifying(&p, &r)?;
            let pt = curve_point(p.ptype, &r).map_err(correspond_failure)?;
            let fiber = curve_fiber(p.ptype, &pt, &r).map_err(correspond_failure)?;
            ok(write_relation_list(
                p.order(),
                Some(p.ptype),
                &fiber,
                None,
                None,
                None,
            ))
        }
        Command::PointToRelation { problem, point } => {
            let p = load_problem(&problem, warnings)?;
            let pt = load_point(&point, &p, warnings)?;
            match point_to_relation(&p.coeffs, p.ptype, &pt) {
                Ok(r) => ok(write_relation(p.order(), Some(p.ptype), &r)),
                Err(e) => Err(correspond_failure(e)),
            }
        }
        Command::Family { command } => match command {
            FamilyCommand::Exists {
                problem,
                witness,
                budget,
            } => {
                let p = load_problem(&problem, warnings)?;
                let w = witness
                    .map(|path| load_relation(&path, &p, warnings))
                    .transpose()?;
                let verdict =
                    family_exists(&p, w.as_ref(), budget).map_err(family_failure)?;
                let mut out = String::new();
                let _ = writeln!(out, "status = \"{}\"", status_text(verdict.status));
                let _ = writeln!(out, "case = \"{}\"", case_text(verdict.case));
                let _ = writeln!(
                    out,
                    "permutation = [{}, {}, {}]",
                    verdict.permutation[0], verdict.permutation[1], verdict.permutation[2]
                );
                let _ = writeln!(out, "detail = \"{}\"", verdict.detail);
                let code = match verdict.status {
                    FamilyStatus::Yes => 0,
                    FamilyStatus::No => 1,
                    FamilyStatus::Unknown => 4,
                };
                Ok(CommandResult {
                    exit_code: code,
                    stdout: out,
                    stderr: String::new(),
                })
            }
            FamilyCommand::Sample {
                problem,
                witness,
                count,
                budget,
            } => {
                if count == 0 {
                    return Err(fail(2, "--count must be positive"));
                }
                let p = load_problem(&problem, warnings)?;
                let w = witness
                    .map(|path| load_relation(&path, &p, warnings))
                    .transpose()?;
                let sample = family_sample(&p, w.as_ref(), count, budget)
                    .map_err(family_failure)?;
                let relations: Vec<Relation> = sample
                    .members
                    .iter()
                    .map(|m| m.relation.clone())
                    .collect();
                let parameters: Vec<String> = sample
                    .members
                    .iter()
                    .map(|m| m.parameters.to_string())
                    .collect();
                ok(write_relation_list(
                    p.order(),
                    Some(sample.reduced_type),
                    &relations,
                    None,
                    Some(&parameters),
                    Some(&sample.equivalent_pairs),
                ))
            }
        },
        Command::Search {
            problem,
            deg,
            coeffs,
            dedupe,
        } => {
            let p = load_problem(&problem, warnings)?;
            let degree_bounds = parse_degrees(&deg)?;
            let coefficient_set = parse_grid(&coeffs, p.order())?;
            let spec = SearchSpec {
                degree_bounds,
                coefficient_set,
                dedupe,
            };
            let cap = search_cap()?;
            let outcome = brute_force(&p, &spec, cap).map_err(search_failure)?;
            let found = !outcome.relations.is_empty();
            let stdout = write_relation_list(
                p.order(),
                Some(p.ptype),
                &outcome.relations,
                outcome.note.as_deref(),
                None,
                None,
            );
            if found {
                ok(stdout)
            } else {
                Ok(CommandResult {
                    exit_code: 1,
                    stdout,
                    stderr: String::new(),
                })
            }
        }
        Command::Complete { problem, h1, h2 } => {
            let p = load_problem(&problem, warnings)?;
            let h1 = parse_cli_form(&h1, p.order(), "h1")?;
            let h2 = parse_cli_form(&h2, p.order(), "h2")?;
            match complete_relation(&p, &h1, &h2) {
                Ok(Some(r)) => ok(write_relation(p.order(), Some(p.ptype), &r)),
                Ok(None) => negative("none\n".to_string()),
                Err(e) => Err(search_failure(e)),
            }
        }
    }
}

fn new_type(p: [u64; 3]) -> Result<TypeTriple, Failure> {
    TypeTriple::new(p).map_err(|e| fail(2, e))
}

fn type_text(t: TypeTriple) -> String {
    let e = t.entries();
    format!("{},{},{}", e[0], e[1], e[2])
}

fn status_text(s: FamilyStatus) -> &'static str {
    match s {
        FamilyStatus::Yes => "Yes",
        FamilyStatus::No => "No",
        FamilyStatus::Unknown => "Unknown",
    }
}

fn case_text(c: Option<FamilyCase>) -> &'static str {
    match c {
        Some(FamilyCase::Conic222) => "Conic222",
        Some(FamilyCase::LinearP0Equals1) => "LinearP0Equals1",
        None => "none",
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))
}

fn zeta_warning(order: u32, mentions_zeta: bool, warnings: &mut Vec<String>) {
    if order == 1 && mentions_zeta {
        let note = "note: the symbol z reduces to 1 when cyclotomic_order = 1";
        if !warnings.iter().any(|w| w == note) {
            warnings.push(note.to_string());
        }
    }
}

fn load_problem(path: &Path, warnings: &mut Vec<String>) -> Result<ProblemInstance, Failure> {
    let text = read_file(path)?;
    let doc = read_problem(&text).map_err(document_failure)?;
    zeta_warning(doc.problem.order(), doc.mentions_zeta, warnings);
    let violations = validate_problem(&doc.problem);
    if !violations.is_empty() {
        let joined: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        return Err(fail(2, format!("invalid problem: {}", joined.join("; "))));
    }
    Ok(doc.problem)
}

fn load_relation(
    path: &Path,
    p: &ProblemInstance,
    warnings: &mut Vec<String>,
) -> Result<Relation, Failure> {
    let text = read_file(path)?;
    let doc = read_relation(&text, p.order()).map_err(document_failure)?;
    zeta_warning(p.order(), doc.mentions_zeta, warnings);
    Ok(doc.relation)
}

fn load_point(
    path: &Path,
    p: &ProblemInstance,
    warnings: &mut Vec<String>,
) -> Result<crate::correspond::CurvePoint, Failure> {
    let text = read_file(path)?;
    let doc = read_point(&text, p.order()).map_err(document_failure)?;
    zeta_warning(p.order(), doc.mentions_zeta, warnings);
    Ok(doc.point)
}

fn require_verifying(p: &ProblemInstance, r: &Relation) -> Result<(), Failure> {
    match verify_relation(p, r) {
        Ok(true) => Ok(()),
        Ok(false) => Err(fail(2, "the relation does not verify under the problem")),
        Err(e) => Err(relation_failure(e)),
    }
}

fn parse_type_list(text: &str) -> Result<TypeTriple, Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(fail(2, format!("expected p0,p1,p2, got {text}")));
    }
    let mut entries = [0u64; 3];
    for (i, part) in parts.iter().enumerate() {
        entries[i] = part
            .trim()
            .parse::<u64>()
            .map_err(|e| fail(2, format!("bad type entry {part}: {e}")))?;
    }
    new_type(entries)
}

fn parse_degrees(text: &str) -> Result<[u32; 3], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(fail(2, format!("expected d0,d1,d2, got {text}")));
    }
    let mut out = [0u32; 3];
    for (i, part) in parts.iter().enumerate() {
        out[i] = part
            .trim()
            .parse::<u32>()
            .map_err(|e| fail(2, format!("bad degree {part}: {e}")))?;
    }
    Ok(out)
}

fn parse_grid(text: &str, order: u32) -> Result<Vec<Scalar>, Failure> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let f = parse_cli_form(item.trim(), order, "coefficient")?;
        out.push(constant_scalar(&f).ok_or_else(|| {
            fail(2, format!("coefficient {item} is not a constant"))
        })?);
    }
    Ok(out)
}

fn constant_scalar(f: &Form) -> Option<Scalar> {
    if f.is_zero() {
        return Some(Scalar::zero(f.order()));
    }
    if !f.is_constant() {
        return None;
    }
    f.coefficient(&Mono([0, 0, 0])).cloned()
}

fn parse_cli_form(text: &str, order: u32, what: &str) -> Result<Form, Failure> {
    parse_form(text, order).map_err(|e| fail(2, format!("{what}: {e}")))
}

fn search_cap() -> Result<u64, Failure> {
    match std::env::var("QT_BUDGET") {
        Ok(text) => text
            .trim()
            .parse::<u64>()
            .map_err(|e| fail(2, format!("QT_BUDGET must be an integer: {e}"))),
        Err(_) => Ok(DEFAULT_SEARCH_CAP),
    }
}

fn document_failure(e: DocumentError) -> Failure {
    fail(2, e)
}

fn relation_failure(e: RelationError) -> Failure {
    fail(2, e)
}

fn correspond_failure(e: CorrespondError) -> Failure {
    let code = match e {
        CorrespondError::FieldTooSmall { .. } | CorrespondError::NotApplicable => 3,
        CorrespondError::NotOnCurve => 1,
        _ => 2,
    };
    fail(code, e)
}

fn family_failure(e: FamilyError) -> Failure {
    let code = match e {
        FamilyError::NoFamily => 1,
        FamilyError::WitnessNotFound | FamilyError::InsufficientParameters => 4,
        _ => 2,
    };
    fail(code, e)
}

fn search_failure(e: SearchError) -> Failure {
    let code = match e {
        SearchError::BudgetExceeded { .. } => 4,
        SearchError::NotApplicable => 3,
        _ => 2,
    };
    fail(code, e)
}
