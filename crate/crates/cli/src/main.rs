use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hermite_pw::exactpoly::rat_to_string;
use hermite_pw::golden::golden_suite;
use hermite_pw::hermite::{pseudo_wronskian, verify_equivalence, HermiteCache};
use hermite_pw::minorder::{corner_report, durfee_symbol, min_order_after_insert, xhermite_min_origin};
use hermite_pw::painleve::{catalog, min_order_gh, min_order_o, piv_solution, verify_piv, PivClass};
use hermite_pw::xhermite::{eigen_check, exceptional_hermite, min_order_form, XHermiteFamily};
use hermite_pw::{Error, MayaDiagram, Partition};

const CACHE_ENV: &str = "HERMITE_PW_CACHE_DIR";
const CACHE_FILE: &str = "hermite_table.json";

#[derive(Parser)]
#[command(name = "hermite-pw", version, about = "Exact Hermite pseudo-Wronskians and rational Painlevé IV solutions")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a Maya diagram
    Maya(DiagramArgs),
    /// Expand the pseudo-Wronskian of a diagram
    Pw(DiagramArgs),
    /// Check the constant relating H_M and H_(M-k)
    Equiv {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Minimal girth, origins and the lowest-order pseudo-Wronskian
    Minorder {
        #[command(flatten)]
        diagram: DiagramArgs,
        /// Report the effect of inserting this element
        #[arg(long, allow_hyphen_values = true)]
        insert: Option<i64>,
    },
    /// Exceptional Hermite polynomial of a partition
    Xhermite {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        n: i64,
        /// Print the equivalent determinant of lowest order
        #[arg(long)]
        min_order: bool,
        /// Check the eigenvalue equation exactly
        #[arg(long)]
        verify_ode: bool,
    },
    /// Rational solutions of Painlevé IV
    Piv(PivArgs),
    /// Run the embedded reference suite
    Selftest,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DiagramArgs {
    /// Frobenius symbol `s1,s2,...|t1,t2,...`
    #[arg(long, allow_hyphen_values = true)]
    frobenius: Option<String>,
    /// Partition `l1,l2,...`, taken as its standard diagram
    #[arg(long)]
    partition: Option<String>,
}

impl DiagramArgs {
    fn diagram(&self) -> Result<MayaDiagram, Error> {
        match (&self.frobenius, &self.partition) {
            (Some(f), _) => f.parse(),
            (None, Some(p)) => Ok(MayaDiagram::from_partition(&p.parse()?)),
            (None, None) => Err(Error::InvalidParameters("a diagram is required".into())),
        }
    }
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct PivArgs {
    #[command(subcommand)]
    catalog: Option<PivCommand>,
    #[arg(long, value_enum)]
    class: Option<ClassArg>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long)]
    l1: Option<u32>,
    #[arg(long)]
    l2: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    branch: Option<u8>,
    /// Check the equation exactly
    #[arg(long)]
    verify: bool,
    /// Print the minimal-order determinant of the diagram instead
    #[arg(long)]
    min_order: bool,
}

#[derive(Subcommand)]
enum PivCommand {
    /// Every verified solution with parameters up to a bound
    Catalog {
        #[arg(long, default_value_t = 4)]
        max: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Gh,
    O,
}

/// A finished command: the payload, its text rendering, and whether every
/// check it ran passed.
struct Outcome {
    json: Value,
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Outcome { json, text, ok: true }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidParameters(_) | Error::Precondition(_) | Error::Inadmissible { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn matrix_rows(m: &MayaDiagram) -> Vec<String> {
    let n = m.girth();
    let mut rows: Vec<String> = m
        .s_list()
        .iter()
        .map(|&s| (s..s + n as i64).map(|j| format!("ĥ{j}")).collect::<Vec<_>>().join(" "))
        .collect();
    rows.extend(m.t_list().iter().rev().map(|&t| {
        (0..n).map(|d| format!("H{t}{}", "'".repeat(d))).collect::<Vec<_>>().join(" ")
    }));
    rows
}

fn run_maya(m: &MayaDiagram) -> Outcome {
    let (standard, shift) = m.standardize();
    let report = corner_report(m);
    let durfee = durfee_symbol(m).ok().map(|d| d.to_string());
    let json = json!({
        "frobenius": m,
        "girth": m.girth(),
        "partition": m.partition().parts(),
        "standard_shift": shift,
        "standard": standard,
        "corners": report,
        "durfee": durfee,
    });
    let mut text = format!(
        "diagram {m}\ngirth {}\npartition {}\nstandard form {standard} at shift {shift}\nminimal girth {} at origins {:?}\n",
        m.girth(),
        m.partition(),
        report.minimal_girth,
        report.origins
    );
    if let Some(d) = durfee {
        text.push_str(&format!("durfee symbol {d}\n"));
    }
    Outcome::ok(json, text)
}

fn run_pw(m: &MayaDiagram) -> Outcome {
    let p = pseudo_wronskian(m);
    let rows = matrix_rows(m);
    let json = json!({
        "frobenius": m,
        "order": m.girth(),
        "rows": rows,
        "degree": p.degree(),
        "polynomial": p.to_json("x"),
    });
    let text = format!("H_M for M = {m}\ndet[{}]\n= {}\n", rows.join("; "), p.pretty("x"));
    Outcome::ok(json, text)
}

fn run_equiv(m: &MayaDiagram, k: i64) -> Result<Outcome, Failure> {
    let r = verify_equivalence(m, k);
    let json = serde_json::to_value(r.to_json()).map_err(|e| Failure::Compute(e.to_string()))?;
    let text = format!(
        "H_M = {} * H_(M-{k}) for M = {m}\nmatch {}\n",
        rat_to_string(&r.constant),
        r.matched
    );
    Ok(Outcome { json, text, ok: r.matched })
}

fn run_minorder(m: &MayaDiagram, insert: Option<i64>) -> Result<Outcome, Failure> {
    if let Some(e) = insert {
        let r = min_order_after_insert(m, e)?;
        let json = serde_json::to_value(&r).map_err(|e| Failure::Compute(e.to_string()))?;
        let text = format!(
            "inserting {e} into {m}: case {:?}, minimal girth {} at origins {:?}\n",
            r.case, r.minimal_girth, r.origins
        );
        return Ok(Outcome::ok(json, text));
    }
    let report = corner_report(m);
    let k = report.largest_origin();
    let shifted = m.shift(-k);
    let r = verify_equivalence(m, k);
    let json = json!({
        "frobenius": m,
        "minimal_girth": report.minimal_girth,
        "origins": report.origins,
        "origin": k,
        "minimal": shifted,
        "rows": matrix_rows(&shifted),
        "constant": rat_to_string(&r.constant),
        "match": r.matched,
        "polynomial": r.rhs.to_json("x"),
    });
    let text = format!(
        "minimal girth {} at origins {:?}\nH_M = {} * H_(M-{k}), M-{k} = {shifted}\ndet[{}]\n= {}\nmatch {}\n",
        report.minimal_girth,
        report.origins,
        rat_to_string(&r.constant),
        matrix_rows(&shifted).join("; "),
        r.rhs.pretty("x"),
        r.matched
    );
    Ok(Outcome { json, text, ok: r.matched })
}

fn run_xhermite(partition: &str, n: i64, min_order: bool, verify_ode: bool) -> Result<Outcome, Failure> {
    let lambda: Partition = partition.parse()?;
    let family = XHermiteFamily::new(&lambda);
    let mut json = json!({ "partition": lambda.parts(), "n": n });
    let mut text = String::new();
    let mut ok = true;
    if min_order {
        let form = min_order_form(&lambda, n)?;
        let origin = xhermite_min_origin(&lambda, n)?;
        json["min_order"] = form.to_json();
        text.push_str(&format!(
            "H_{n} = {} * H_(M-{}), M-{} = {} of order {} ({:?})\ndet[{}]\n= {}\n",
            rat_to_string(&form.constant),
            form.origin,
            form.origin,
            form.diagram,
            form.order,
            origin.rule,
            matrix_rows(&form.diagram).join("; "),
            form.polynomial.pretty("x"),
        ));
    } else {
        let p = exceptional_hermite(&lambda, n)?;
        json["polynomial"] = serde_json::to_value(p.to_json("x")).map_err(|e| Failure::Compute(e.to_string()))?;
        json["degree"] = json!(p.degree());
        text.push_str(&format!("H_{n}^({lambda}) = {}\n", p.pretty("x")));
    }
    if verify_ode {
        let r = eigen_check(&lambda, n)?;
        ok = r.holds();
        json["ode"] = r.to_json();
        text.push_str(&format!(
            "T[y] = {} y: {}\n",
            rat_to_string(&r.eigenvalue),
            if ok { "verified" } else { "FAILED" }
        ));
    }
    json["excluded_degrees"] = json!(family.excluded_degrees());
    Ok(Outcome { json, text, ok })
}

fn piv_class(args: &PivArgs) -> Result<PivClass, Failure> {
    let need = |v: Option<u32>, name: &str| v.ok_or_else(|| Failure::Usage(format!("--{name} is required")));
    match args.class {
        Some(ClassArg::Gh) => Ok(PivClass::Gh { m: need(args.m, "m")?, ell: need(args.ell, "ell")? }),
        Some(ClassArg::O) => Ok(PivClass::O { l1: need(args.l1, "l1")?, l2: need(args.l2, "l2")? }),
        None => Err(Failure::Usage("--class is required".into())),
    }
}

fn run_piv(args: &PivArgs) -> Result<Outcome, Failure> {
    if let Some(PivCommand::Catalog { max }) = args.catalog {
        let mut entries = Vec::new();
        let mut text = String::new();
        let mut ok = true;
        for sol in catalog(max) {
            let check = verify_piv(&sol)?;
            ok &= check.verified;
            let mut v = sol.to_json();
            v["verified"] = json!(check.verified);
            entries.push(v);
            text.push_str(&format!(
                "{} branch {}: (a,b) = ({}, {}) {}\n",
                sol.class,
                sol.branch,
                rat_to_string(&sol.a),
                rat_to_string(&sol.b),
                if check.verified { "verified" } else { "FAILED" }
            ));
        }
        return Ok(Outcome { json: Value::Array(entries), text, ok });
    }
    let class = piv_class(args)?;
    if args.min_order {
        let form = match class {
            PivClass::Gh { m, ell } => min_order_gh(m, ell)?,
            PivClass::O { l1, l2 } => min_order_o(l1, l2)?,
        };
        let text = format!(
            "{class}: order {} at origin {}, M-{} = {}\ndet[{}]\n= {}\nH_M = {} * H_(M-{})\n",
            form.order,
            form.origin,
            form.origin,
            form.diagram,
            matrix_rows(&form.diagram).join("; "),
            form.polynomial.pretty("x"),
            rat_to_string(&form.constant),
            form.origin,
        );
        return Ok(Outcome::ok(form.to_json(), text));
    }
    let branch = args.branch.ok_or_else(|| Failure::Usage("--branch is required".into()))?;
    let sol = piv_solution(class, branch)?;
    let mut json = sol.to_json();
    let mut text = format!(
        "{class} branch {branch}\ny(t) = {}\n(a,b) = ({}, {})\n",
        sol.y.pretty("t"),
        rat_to_string(&sol.a),
        rat_to_string(&sol.b)
    );
    let mut ok = true;
    if args.verify {
        let check = verify_piv(&sol)?;
        ok = check.verified;
        json["verified"] = json!(ok);
        if !ok {
            json["residual"] = serde_json::to_value(check.residual.to_json("t")).map_err(|e| Failure::Compute(e.to_string()))?;
        }
        text.push_str(if ok { "verified\n" } else { "FAILED\n" });
    }
    Ok(Outcome { json, text, ok })
}

fn run_selftest() -> Outcome {
    let checks = golden_suite();
    let ok = checks.iter().all(|c| c.passed);
    let mut text = String::new();
    for c in &checks {
        text.push_str(&format!("{} {} ({})\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    text.push_str(&format!("{passed}/{} passed\n", checks.len()));
    let json = json!({
        "passed": ok,
        "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
    });
    Outcome { json, text, ok }
}

fn dispatch(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Maya(d) => Ok(run_maya(&d.diagram()?)),
        Command::Pw(d) => Ok(run_pw(&d.diagram()?)),
        Command::Equiv { diagram, k } => run_equiv(&diagram.diagram()?, *k),
        Command::Minorder { diagram, insert } => run_minorder(&diagram.diagram()?, *insert),
        Command::Xhermite { partition, n, min_order, verify_ode } => {
            run_xhermite(partition, *n, *min_order, *verify_ode)
        }
        Command::Piv(args) => run_piv(args),
        Command::Selftest => Ok(run_selftest()),
    }
}

fn cache_path() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(|d| PathBuf::from(d).join(CACHE_FILE))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache_path();
    if let Some(path) = cache.as_ref().filter(|p| p.exists()) {
        if let Err(e) = HermiteCache::global().load_json(path) {
            eprintln!("warning: ignoring Hermite cache: {e}");
        }
    }
    let result = dispatch(&cli.command);
    if let Some(path) = &cache {
        if let Err(e) = HermiteCache::global().save_json(path) {
            eprintln!("warning: could not write Hermite cache: {e}");
        }
    }
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let written = match cli.format {
                Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).unwrap_or_default()),
                Format::Text => write!(stdout, "{}", out.text),
            };
            if written.is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `hermite-pw --help` for usage.");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
