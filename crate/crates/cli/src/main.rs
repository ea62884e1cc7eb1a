use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use frobquartic::algebra::{Gf, RatFunc, Ring};
use frobquartic::curves::{delta_blowup, delta_semigroup};
use frobquartic::quartic::{isomorphism_decide, verify_witness, IsoDecision, QuarticFibre, QuarticParams};
use frobquartic::series::{expand_tate13, expand_y_at_infinity, LaurentSeries};
use frobquartic::suites::{run_suite, CheckResult, Report, Suite, SuiteConfig};
use frobquartic::surface::FibreGraph;
use frobquartic::{algebra::MPoly, algebra::VarCtx, elliptic::WeierstrassCoeffs, Error};

const LITERALS: &str = "\
Field-element literals are expressions in the generator `w` of GF(2^k)
(and, for `iso`, the indeterminate `t` of GF(2^k)(t)):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' integer)?
    atom   := integer | w | t | '(' expr ')'

Integers are read mod 2 and minus is plus, e.g. `w^2*t + 1` or `(w + t)/t^3`.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage or
data errors.";

#[derive(Parser, Debug)]
#[command(name = "frobquartic", version, about = "Verify and explore quartic fibrations in characteristic two", after_help = LITERALS)]
struct Cli {
    /// Degree of the base field GF(2^k), at most 16.
    #[arg(long, global = true, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=16))]
    k: u8,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Series precision (exclusive upper order).
    #[arg(long, global = true, default_value_t = 12)]
    prec: i64,
    /// Emit the JSON report (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a plain-text report.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
    },
    /// Count the points of a fibre and of its cubic over GF(2^k).
    Count(FibreArgs),
    /// Singularities and δ-invariants of a fibre.
    Delta(FibreArgs),
    /// Intersection theory on a fibre graph file.
    Fibre {
        file: PathBuf,
        #[command(subcommand)]
        action: FibreAction,
    },
    /// Decide isomorphism of two quartics over GF(2^k)(t).
    Iso {
        /// a b c e of the first quartic
        #[arg(num_args = 4, value_names = ["A", "B", "C", "E"])]
        left: Vec<String>,
        /// a b c e of the second quartic
        #[arg(long, num_args = 4, value_names = ["A", "B", "C", "E"], required = true)]
        to: Vec<String>,
    },
    /// Expansion of y at infinity of a Weierstrass cubic, with symbolic coefficients.
    Series {
        /// a1 a2 a3 a4 a6 as polynomials in a, a1..a6, b, c, d, e, A, B, C, E, H
        #[arg(num_args = 5, value_names = ["A1", "A2", "A3", "A4", "A6"])]
        coeffs: Option<Vec<String>>,
    },
}

#[derive(Args, Debug)]
struct FibreArgs {
    a: String,
    b: String,
    c: String,
    e: String,
}

#[derive(Subcommand, Debug)]
enum FibreAction {
    /// Fill in self-intersections from F·C = 0.
    Solve,
    /// Arithmetic genus of each reduced fibre.
    Genus,
    /// Blow down a rational (-1)-curve.
    Contract { name: String },
    /// Extended Dynkin type of each fibre.
    Classify,
    /// Whether no fibre contains a (-1)-curve.
    Minimal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Symbolic,
    Series,
    Torsion,
    Delta,
    Intersection,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Symbolic => Suite::Symbolic,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Torsion => Suite::Torsion,
            SuiteArg::Delta => Suite::Delta,
            SuiteArg::Intersection => Suite::Intersection,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = SuiteConfig { k: cli.k, seed: cli.seed, prec: cli.prec };
    match run(&cli.command, &cfg) {
        Ok(report) => {
            if cli.text {
                print!("{}", report.to_text());
            } else {
                println!("{}", report.to_json());
            }
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Command, cfg: &SuiteConfig) -> Result<Report, Error> {
    match cmd {
        Command::Verify { suite } => run_suite((*suite).into(), cfg),
        Command::Count(p) => count(&fibre(p, cfg.k)?, cfg),
        Command::Delta(p) => delta(&fibre(p, cfg.k)?, cfg),
        Command::Fibre { file, action } => fibre_action(file, action, cfg),
        Command::Iso { left, to } => iso(left, to, cfg),
        Command::Series { coeffs } => series(coeffs.as_deref(), cfg),
    }
}

fn fibre(p: &FibreArgs, k: u8) -> Result<QuarticFibre, Error> {
    let g = |s: &str| Gf::parse(k, s);
    QuarticFibre::new(QuarticParams::new(g(&p.a)?, g(&p.b)?, g(&p.c)?, g(&p.e)?))
}

fn params_json(f: &QuarticFibre) -> Value {
    let p = f.params();
    json!({ "a": p.a, "b": p.b, "c": p.c, "e": p.e })
}

fn count(f: &QuarticFibre, cfg: &SuiteConfig) -> Result<Report, Error> {
    let k = cfg.k;
    let nq = f.points(k).len();
    let ne = f.target_points(k).len();
    let tax = f.taxonomy()?;
    let check = if f.params().c.is_zero() {
        CheckResult::skip("count.equal", "phi needs c != 0")
    } else {
        CheckResult::new("count.equal", nq == ne, format!("#Q = {nq}, #E = {ne}"))
    };
    let data = json!({
        "params": params_json(f),
        "q_points": nq,
        "e_points": ne,
        "equal": nq == ne,
        "label": tax.label,
        "genus": tax.genus,
    });
    Ok(Report::new("count", cfg, vec![check]).with_data(data))
}

fn delta(f: &QuarticFibre, cfg: &SuiteConfig) -> Result<Report, Error> {
    let tax = f.taxonomy()?;
    let mut checks = Vec::new();
    let mut data = json!({ "params": params_json(f), "taxonomy": tax });
    if f.is_genus_one() {
        let prec = cfg.prec.max(16);
        let sing = f.singular_point();
        let blow = delta_blowup(f.form(), &sing)?;
        let [x, _, z] = f.branch_parametrization(prec);
        let semi = delta_semigroup(&x, &(z + LaurentSeries::constant(f.roots().b, prec)))?;
        data["singular_point"] = json!(sing.to_string());
        data["delta_blowup"] = json!(blow);
        data["delta_semigroup"] = json!(semi);
        checks.push(CheckResult::new(
            "delta.singular-point",
            blow == 2 && semi == 2,
            format!("blowup {blow}, semigroup {semi} at {sing}"),
        ));
    } else {
        checks.push(CheckResult::skip("delta.singular-point", "fibre is not of genus one"));
    }
    Ok(Report::new("delta", cfg, checks).with_data(data))
}

fn fibre_action(file: &PathBuf, action: &FibreAction, cfg: &SuiteConfig) -> Result<Report, Error> {
    let src = std::fs::read_to_string(file).map_err(|e| Error::Graph(format!("{}: {e}", file.display())))?;
    let g = FibreGraph::from_json(&src)?;
    let solved = || if g.is_solved() { Ok(g.clone()) } else { g.solve_self_intersections() };
    let ok = |id: &str, detail: String| vec![CheckResult::new(id, true, detail)];
    let (name, checks, data) = match action {
        FibreAction::Solve => {
            let s = solved()?;
            let bad = s.fibre_relation_violations();
            let check = CheckResult::new("fibre.relations", bad.is_empty(), bad.join(", "));
            ("fibre solve", vec![check], serde_json::from_str(&s.to_json()).expect("json"))
        }
        FibreAction::Genus => {
            let mut rows = Vec::new();
            for f in g.fibres() {
                let names: Vec<&str> = f.iter().map(String::as_str).collect();
                rows.push(json!({ "fibre": f, "arithmetic_genus": g.arithmetic_genus_reduced(&names)? }));
            }
            ("fibre genus", ok("fibre.genus", format!("{} fibres", rows.len())), Value::from(rows))
        }
        FibreAction::Contract { name } => {
            let c = solved()?.contract_curve(name)?;
            let data = json!({
                "graph": serde_json::from_str::<Value>(&c.to_json()).expect("json"),
                "minimal": c.check_minimal(),
                "exceptional": c.exceptional_curves(),
            });
            ("fibre contract", ok("fibre.contract", format!("{name} contracted")), data)
        }
        FibreAction::Classify => {
            let types: Vec<String> = solved()?.classify_fibres().iter().map(|t| t.to_string()).collect();
            ("fibre classify", ok("fibre.classify", types.join(", ")), json!(types))
        }
        FibreAction::Minimal => {
            let s = solved()?;
            let data = json!({ "minimal": s.check_minimal(), "exceptional": s.exceptional_curves() });
            ("fibre minimal", ok("fibre.minimal", format!("minimal: {}", s.check_minimal())), data)
        }
    };
    Ok(Report::new(name, cfg, checks).with_data(data))
}

fn ratfunc_params(v: &[String], k: u8) -> Result<QuarticParams<RatFunc>, Error> {
    let r = |i: usize| RatFunc::parse(k, &v[i]);
    Ok(QuarticParams::new(r(0)?, r(1)?, r(2)?, r(3)?))
}

fn iso(left: &[String], right: &[String], cfg: &SuiteConfig) -> Result<Report, Error> {
    let q1 = ratfunc_params(left, cfg.k)?;
    let q2 = ratfunc_params(right, cfg.k)?;
    let (check, data) = match isomorphism_decide(&q1, &q2) {
        Ok(IsoDecision::Isomorphic { witness }) => {
            let verified = verify_witness(&q1, &q2, &witness);
            (
                CheckResult::new("iso.witness", verified, "witness re-verified by substitution"),
                json!({ "result": "isomorphic", "witness": witness }),
            )
        }
        Ok(IsoDecision::NotIsomorphic { reason }) => {
            let text = serde_json::to_value(reason).expect("json");
            let shown = format!("not isomorphic ({})", text.as_str().unwrap_or_default());
            (CheckResult::new("iso.decision", true, shown.clone()), json!({ "result": shown, "reason": text }))
        }
        Err(Error::Unsupported(msg)) => (
            CheckResult::skip("iso.decision", msg),
            json!({ "result": "undecided: unsupported fragment" }),
        ),
        Err(e) => return Err(e),
    };
    Ok(Report::new("iso", cfg, vec![check]).with_data(data))
}

fn series(coeffs: Option<&[String]>, cfg: &SuiteConfig) -> Result<Report, Error> {
    let ctx = VarCtx::new(&["a", "a1", "a2", "a3", "a4", "a6", "b", "c", "d", "e", "A", "B", "C", "E", "H"]);
    let default = ["a1", "a2", "a3", "a4", "a6"].map(String::from);
    let c = coeffs.unwrap_or(&default);
    let p = |i: usize| MPoly::parse(&ctx, &c[i]);
    let w = WeierstrassCoeffs::new(p(0)?, p(1)?, p(2)?, p(3)?, p(4)?);
    let shown = |s: &LaurentSeries<MPoly>| -> Value {
        let terms: Vec<Value> =
            s.terms().map(|(n, c)| json!({ "order": n, "coeff": c.to_string() })).collect();
        json!({ "precision": s.precision(), "terms": terms })
    };
    let prec = cfg.prec.max(-3);
    let y = expand_y_at_infinity(&w, prec);
    let tate = expand_tate13(&MPoly::var(&ctx, "A"), &MPoly::var(&ctx, "H"), prec.max(8));
    let data = json!({
        "cubic": w.to_string(),
        "y_at_infinity": shown(&y),
        "tate13": shown(&tate),
    });
    let report = run_suite(Suite::Series, cfg)?;
    Ok(Report::new("series", cfg, report.checks).with_data(data))
}
