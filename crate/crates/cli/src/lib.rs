//! The `ordcal` command line: argument parsing, dispatch and rendering.
//!
//! Every command produces both a canonical text form and a JSON value;
//! `--json` selects the latter. Exit codes are [`EXIT_OK`],
//! [`EXIT_VERIFY_FAILED`], [`EXIT_INPUT`] and [`EXIT_INDETERMINATE`].

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ordcal::chain::{chain_rule_in_ideal, TaggedAlphabet};
use ordcal::free::{lie_span_contains, log_series, FreeSeries, OrderedAlphabet, Var};
use ordcal::hahn::{parse_series, HahnSeries};
use ordcal::order::{Sign, TreeOrder};
use ordcal::product::verify_axioms;
use ordcal::rational::parse_rational;
use ordcal::tgroup::{
    compose, decompose_with_cap, growth_order, invert, iterate, recompose, Decomposition, GrowthOrder, Scale,
    SignStream, TElement, DEFAULT_ITERATION_CAP,
};
use ordcal::verify::{chain_suite, growth_suite, roundtrip_suite};
use ordcal::{Error, Rational};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INDETERMINATE: u8 = 3;

/// Environment variable overriding the decomposition iteration cap.
pub const ITER_CAP_VAR: &str = "ORDCAL_ITER_CAP";

#[derive(Debug, Parser)]
#[command(name = "ordcal", version, about = "Exact ordered products in groups of formal series")]
struct Cli {
    /// Emit JSON instead of canonical text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Series with rational exponents: arithmetic, composition, iteration.
    #[command(subcommand)]
    Hahn(HahnCmd),
    /// Split an element x + o(x) into scale factors.
    Decompose(DecomposeArgs),
    /// Rebuild an element from a decomposition JSON file.
    Recompose(RecomposeArgs),
    /// Truncated series in non-commuting variables.
    #[command(subcommand)]
    Free(FreeCmd),
    /// Tree-like orderings given by sign sequences.
    #[command(subcommand)]
    Order(OrderCmd),
    /// Seeded randomized verification suites.
    Verify(VerifyArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).ok_or_else(|| format!("not a rational number: {s:?}"))
}

/// A series argument; may start with a minus sign.
#[derive(Debug, Args)]
struct Expr {
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

/// Optional truncation applied to the inputs of exact operations.
#[derive(Debug, Args)]
struct Truncation {
    /// Treat inputs as known only strictly above this exponent.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    floor: Option<Rational>,
}

/// Working floor for operations given by infinite sums.
#[derive(Debug, Args)]
struct WorkFloor {
    /// Results are exact strictly above this exponent.
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "-5")]
    floor: Rational,
}

#[derive(Debug, Subcommand)]
enum HahnCmd {
    /// Print the canonical form.
    Eval {
        #[command(flatten)]
        a: Expr,
        #[command(flatten)]
        t: Truncation,
    },
    /// a + b
    Add {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        t: Truncation,
    },
    /// a·b
    Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        t: Truncation,
    },
    /// The derivative.
    Deriv {
        #[command(flatten)]
        a: Expr,
        #[command(flatten)]
        t: Truncation,
    },
    /// a^e for a rational e.
    Pow {
        #[command(flatten)]
        a: Expr,
        #[arg(short = 'e', long = "exp", value_parser = rational, allow_hyphen_values = true)]
        e: Rational,
        #[command(flatten)]
        w: WorkFloor,
    },
    /// a ∘ b, with b of the form x + o(x).
    Compose {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        w: WorkFloor,
    },
    /// The compositional inverse.
    Invert {
        #[command(flatten)]
        a: Expr,
        #[command(flatten)]
        w: WorkFloor,
    },
    /// The fractional iterate a^[e].
    Iterate {
        #[command(flatten)]
        a: Expr,
        #[arg(short = 'e', long = "exp", value_parser = rational, allow_hyphen_values = true)]
        e: Rational,
        #[command(flatten)]
        w: WorkFloor,
    },
    /// The growth order: leading term of a - x.
    Go {
        #[command(flatten)]
        a: Expr,
        #[command(flatten)]
        t: Truncation,
    },
}

#[derive(Debug, Args)]
struct DecomposeArgs {
    #[arg(long, value_parser = |s: &str| s.parse::<Scale>())]
    scale: Scale,
    /// `left`, `right`, `alt`, or a comma-separated list of 1/-1 used
    /// cyclically.
    #[arg(long, allow_hyphen_values = true, default_value = "left")]
    signs: String,
    #[command(flatten)]
    w: WorkFloor,
    #[command(flatten)]
    a: Expr,
}

#[derive(Debug, Args)]
struct RecomposeArgs {
    file: PathBuf,
    /// Defaults to the floor recorded in the file.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    floor: Option<Rational>,
}

#[derive(Debug, Args)]
struct AlphabetArgs {
    /// Comma-separated variable indices, in increasing order of the alphabet.
    #[arg(long, default_value = "0,1,2")]
    order: String,
    #[arg(long, default_value_t = 3)]
    cap: usize,
}

#[derive(Debug, Args)]
struct VarsArgs {
    #[arg(long, default_value_t = 1)]
    vars: usize,
    #[arg(long, default_value_t = 4)]
    cap: usize,
}

#[derive(Debug, Subcommand)]
enum FreeCmd {
    /// The formal ordered product over the given alphabet.
    Op(AlphabetArgs),
    /// Its logarithm.
    LogOp(AlphabetArgs),
    /// Whether log of the ordered product lies in the Lie algebra generated
    /// by the log(1 + X_i).
    #[command(name = "check-lemma47")]
    CheckLemma47(VarsArgs),
    /// Whether the chain-rule defect lies in the truncated relation ideal.
    #[command(name = "check-lemma51")]
    CheckLemma51(VarsArgs),
}

#[derive(Debug, Subcommand)]
enum OrderCmd {
    /// Linearize the order and optionally print the segments around [a, m).
    Tree {
        /// Comma-separated signs 1/-1; the ordinal has one more element.
        #[arg(long, allow_hyphen_values = true)]
        signs: String,
        /// `a,m`
        #[arg(long)]
        segments: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Suite {
    Mg,
    Growth,
    Roundtrip,
    Chain,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    iters: usize,
    #[arg(long, default_value_t = 4)]
    cap: usize,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "-3")]
    floor: Rational,
}

/// A failed command, with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e == Error::Indeterminate { EXIT_INDETERMINATE } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

/// A command result in both renderings.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn new(text: impl ToString, json: impl Serialize) -> Output {
        Output { text: text.to_string(), json: serde_json::to_value(json).expect("serializable"), passed: true }
    }

    fn verdict(mut self, passed: bool) -> Output {
        self.passed = passed;
        self
    }
}

type Outcome = Result<Output, Failure>;

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(&cli.command) {
        Ok(output) => {
            let body =
                if cli.json { serde_json::to_string_pretty(&output.json).expect("valid JSON") } else { output.text };
            let _ = writeln!(out, "{body}");
            if output.passed {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Hahn(cmd) => hahn(cmd),
        Command::Decompose(args) => decompose_cmd(args),
        Command::Recompose(args) => recompose_cmd(args),
        Command::Free(cmd) => free(cmd),
        Command::Order(OrderCmd::Tree { signs, segments }) => order_tree(signs, segments.as_deref()),
        Command::Verify(args) => verify(args),
    }
}

fn series(text: &str, t: Option<&Truncation>) -> Result<HahnSeries, Failure> {
    let s = parse_series(text)?;
    Ok(match t.and_then(|t| t.floor.as_ref()) {
        Some(f) => s.with_floor(f),
        None => s,
    })
}

fn element(text: &str) -> Result<TElement, Failure> {
    Ok(TElement::new(parse_series(text)?)?)
}

fn show(s: &HahnSeries) -> Output {
    Output::new(s, s)
}

fn hahn(cmd: &HahnCmd) -> Outcome {
    Ok(match cmd {
        HahnCmd::Eval { a, t } => show(&series(&a.expr, Some(t))?),
        HahnCmd::Add { a, b, t } => show(&(&series(a, Some(t))? + &series(b, Some(t))?)),
        HahnCmd::Mul { a, b, t } => show(&(&series(a, Some(t))? * &series(b, Some(t))?)),
        HahnCmd::Deriv { a, t } => show(&series(&a.expr, Some(t))?.derivative()),
        HahnCmd::Pow { a, e, w } => show(&series(&a.expr, None)?.power(e, &w.floor)?),
        HahnCmd::Compose { a, b, w } => show(&compose(&series(a, None)?, &element(b)?, &w.floor)),
        HahnCmd::Invert { a, w } => show(invert(&element(&a.expr)?, &w.floor)?.series()),
        HahnCmd::Iterate { a, e, w } => show(iterate(&element(&a.expr)?, e, &w.floor)?.series()),
        HahnCmd::Go { a, t } => {
            let go = growth_order(&TElement::new(series(&a.expr, Some(t))?)?)?;
            let json = match &go {
                GrowthOrder::Zero => json!({"coef": "0", "exp": null}),
                GrowthOrder::Term { coef, exp } => json!({"coef": coef.to_string(), "exp": exp.to_string()}),
            };
            Output::new(go, json)
        }
    })
}

fn parse_signs(text: &str) -> Result<Vec<Sign>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            let n: i64 = part.trim().parse().map_err(|_| input(format!("bad sign {part:?}")))?;
            Ok(Sign::try_from(n)?)
        })
        .collect()
}

fn sign_stream(text: &str) -> Result<SignStream, Failure> {
    Ok(match text {
        "left" => SignStream::Left,
        "right" => SignStream::Right,
        "alt" => SignStream::Alternating,
        csv => SignStream::Explicit(parse_signs(csv)?),
    })
}

fn iteration_cap() -> Result<usize, Failure> {
    match std::env::var(ITER_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| input(format!("{ITER_CAP_VAR} must be a natural number, got {v:?}"))),
        Err(_) => Ok(DEFAULT_ITERATION_CAP),
    }
}

fn decomposition_text(d: &Decomposition) -> String {
    let signs = d.signs.signs().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    let mut lines = vec![format!("scale: {}", d.scale), format!("floor: {}", d.floor), format!("signs: {signs}")];
    lines.extend(d.steps.iter().enumerate().map(|(i, (e, c))| format!("{i}: {}({e}, {c})", d.scale)));
    lines.join("\n")
}

fn decompose_cmd(args: &DecomposeArgs) -> Outcome {
    let a = element(&args.a.expr)?;
    let stream = sign_stream(&args.signs)?;
    let d = decompose_with_cap(&a, args.scale, &stream, &args.w.floor, iteration_cap()?)?;
    Ok(Output::new(decomposition_text(&d), &d))
}

fn recompose_cmd(args: &RecomposeArgs) -> Outcome {
    let text =
        std::fs::read_to_string(&args.file).map_err(|e| input(format!("cannot read {}: {e}", args.file.display())))?;
    let d: Decomposition = serde_json::from_str(&text).map_err(|e| input(format!("bad decomposition: {e}")))?;
    let floor = args.floor.clone().unwrap_or_else(|| d.floor.clone());
    Ok(show(recompose(&d, &floor)?.series()))
}

fn alphabet(order: &str) -> Result<OrderedAlphabet, Failure> {
    let vars = order
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u32>().map(Var::Plain).map_err(|_| input(format!("bad variable index {p:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrderedAlphabet::new(vars)?)
}

fn free_series(s: FreeSeries) -> Output {
    Output::new(&s, &s)
}

fn free(cmd: &FreeCmd) -> Outcome {
    match cmd {
        FreeCmd::Op(a) => Ok(free_series(alphabet(&a.order)?.op_series(a.cap))),
        FreeCmd::LogOp(a) => Ok(free_series(log_series(&alphabet(&a.order)?.op_series(a.cap))?)),
        FreeCmd::CheckLemma47(v) => {
            let i = OrderedAlphabet::range(v.vars);
            let gens = i
                .vars()
                .iter()
                .map(|&x| log_series(&FreeSeries::one_plus_var(x, v.cap)))
                .collect::<Result<Vec<_>, _>>()?;
            let member = lie_span_contains(&log_series(&i.op_series(v.cap))?, &gens, v.cap)?;
            Ok(Output::new(format!("membership: {member}"), json!({"membership": member})).verdict(member))
        }
        FreeCmd::CheckLemma51(v) => {
            let report = chain_rule_in_ideal(&TaggedAlphabet::range(v.vars), v.cap)?;
            let text = format!("membership: {}\nideal dimension: {}", report.member, report.ideal_dim);
            Ok(Output::new(text, report).verdict(report.member))
        }
    }
}

fn order_tree(signs: &str, segments: Option<&str>) -> Outcome {
    let order = TreeOrder::new(parse_signs(signs)?);
    let line = order.linearize();
    let mut text = order.to_string();
    let mut json = json!({"linearization": line});
    if let Some(seg) = segments {
        let bounds: Vec<usize> = seg
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| input(format!("bad segment bound {p:?}"))))
            .collect::<Result<_, _>>()?;
        let [alpha, mu] = bounds[..] else {
            return Err(input("--segments takes two bounds a,m"));
        };
        let (l, r) = order.segments(alpha, mu)?;
        let set = |v: &[usize]| format!("{{{}}}", v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", "));
        text = format!("{text}\nL = {}\nR = {}", set(&l), set(&r));
        json["L"] = json!(l);
        json["R"] = json!(r);
    }
    Ok(Output { text, json, passed: true })
}

fn verify(args: &VerifyArgs) -> Outcome {
    let (name, passed, text, report) = match args.suite {
        Suite::Mg => {
            let r = verify_axioms(args.seed, args.iters, args.cap, 4);
            ("mg", r.all_pass(), r.to_string(), serde_json::to_value(&r))
        }
        suite => {
            let r = match suite {
                Suite::Growth => growth_suite(args.seed, args.iters, &args.floor),
                Suite::Roundtrip => roundtrip_suite(args.seed, args.iters, &args.floor),
                _ => {
                    let depth: i64 =
                        args.floor.floor().to_integer().try_into().map_err(|_| input("floor out of range"))?;
                    chain_suite(args.seed, args.iters, depth)
                }
            };
            let name = match suite {
                Suite::Growth => "growth",
                Suite::Roundtrip => "roundtrip",
                _ => "chain",
            };
            (name, r.all_pass(), r.to_string(), serde_json::to_value(&r))
        }
    };
    let verdict = if passed { "pass" } else { "fail" };
    let json = json!({"suite": name, "passed": passed, "report": report.expect("serializable")});
    Ok(Output { text: format!("{}result: {verdict}", text), json, passed })
}
