use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use octoroot::catalog::{CatalogEntry, DEFAULT_SEED};
use octoroot::error::Error;
use octoroot::ktheory::{parse_braid_word, KCollection};
use octoroot::quiver::{BoundQuiver, LambdaTuple, Weights};
use octoroot::scalar::format_ratio;
use octoroot::suites::{run_suite, Suite, SuiteParams, SuiteReport, ORDER_PROBE};
use octoroot::weyl::{self, Order};
use octoroot::{Int, Lattice};

const TOOL: &str = "octoroot";
const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "octoroot", version, about = "Root systems, Weyl groups and braid actions for star and octopus quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quiver, Euler and Cartan matrices, χ_A and the radical.
    Describe(Common),
    /// Real roots up to a breadth-first depth.
    Roots(Common),
    /// Coxeter element and a bounded order probe.
    Coxeter(Common),
    /// Run verification suites.
    Verify(Common),
    /// Apply a braid word to the simples collection.
    Mutate(Common),
}

#[derive(Args)]
struct Common {
    /// Weight tuple, e.g. 2,3,7.
    #[arg(long)]
    weights: String,
    /// Points λ_1..λ_r of the projective line, e.g. inf,0,1,-1.
    #[arg(long)]
    lambda: Option<String>,
    /// Suite name or comma list; all suites when omitted.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long, default_value_t = 8)]
    depth: usize,
    #[arg(long, default_value_t = 200_000)]
    cap: usize,
    #[arg(long = "n-bound", default_value_t = 3)]
    n_bound: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum, default_value_t = LatticeKind::Star)]
    lattice: LatticeKind,
    /// Braid word for `mutate`, e.g. "b1 b2^-1 e3".
    #[arg(long, default_value = "")]
    word: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeKind {
    Star,
    Octopus,
}

/// Errors caused by bad input rather than a failed check.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidWeights(_)
            | Error::InvalidLambda(_)
            | Error::InvalidQuiver(_)
            | Error::Parse(_)
            | Error::UnknownGenerator(_)
            | Error::IndexOutOfRange { .. }
    )
}

fn variant(e: &Error) -> String {
    let d = format!("{e:?}");
    d.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}

struct Ctx {
    entry: CatalogEntry,
    lambda: Option<LambdaTuple>,
    params: SuiteParams,
}

impl Ctx {
    fn new(c: &Common) -> Result<Self, Error> {
        let weights: Weights = c.weights.parse()?;
        let given = c.lambda.as_deref().map(str::parse::<LambdaTuple>).transpose()?;
        let params = SuiteParams { depth: c.depth, cap: c.cap, n_bound: c.n_bound, seed: c.seed, samples: c.samples };
        // normalized Λ actually used for the octopus
        let lambda = BoundQuiver::build_octopus(&weights, given.clone())?.lambda().cloned();
        Ok(Ctx { entry: CatalogEntry::new(weights, given), lambda, params })
    }

    fn lattice(&self, kind: LatticeKind) -> Result<Lattice, Error> {
        match kind {
            LatticeKind::Star => Ok(Lattice::star(&self.entry.weights)),
            LatticeKind::Octopus => Lattice::octopus(&self.entry.weights, self.entry.lambda.clone()),
        }
    }

    fn header(&self) -> Value {
        json!({
            "tool": TOOL,
            "version": VERSION,
            "weights": self.entry.weights,
            "lambda": self.lambda.as_ref().map(LambdaTuple::to_strings),
            "seed": self.params.seed,
            "bounds": {
                "depth": self.params.depth,
                "cap": self.params.cap,
                "n_bound": self.params.n_bound,
                "samples": self.params.samples,
            },
        })
    }
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn order_text(o: Order) -> String {
    match o {
        Order::Finite(n) => n.to_string(),
        Order::Truncated => "not found within cap".to_string(),
    }
}

fn describe(c: &Common, ctx: &Ctx) -> Result<bool, Error> {
    let w = &ctx.entry.weights;
    let chi = format_ratio(&w.chi());
    let star = Lattice::star(w);
    let oct = ctx.lattice(LatticeKind::Octopus)?;
    let quiver = BoundQuiver::build_octopus(w, ctx.entry.lambda.clone())?;
    if c.format == Format::Json {
        let rel: Vec<Value> = quiver
            .relations()
            .iter()
            .map(|((a, b), n)| json!({"from": a, "to": b, "count": n}))
            .collect();
        print_json(&merge(
            ctx.header(),
            json!({
                "chi": chi,
                "vertices": oct.labels(),
                "arrows": quiver.arrows(),
                "relations": rel,
                "star": {"euler": star.euler(), "cartan": star.cartan(), "radical": radical_json(&star)},
                "octopus": {"euler": oct.euler(), "cartan": oct.cartan(), "radical": radical_json(&oct)},
                "pass": true,
            }),
        ));
        return Ok(true);
    }
    println!("weights {w}");
    if let Some(l) = &ctx.lambda {
        println!("lambda {l}");
    }
    let names: Vec<String> = oct.labels().iter().map(ToString::to_string).collect();
    println!("vertices {}", names.join(" "));
    let arrows: Vec<String> = quiver.arrows().iter().map(|(a, b)| format!("{a}->{b}")).collect();
    println!("arrows {}", arrows.join(" "));
    for ((a, b), n) in quiver.relations() {
        println!("relations {a}->{b}: {n}");
    }
    println!("χ_A = {chi}");
    for (name, l) in [("star", &star), ("octopus", &oct)] {
        println!("{name} Euler matrix\n{}", l.euler());
        println!("{name} Cartan matrix\n{}", l.cartan());
        let rad = l.radical_basis();
        println!("{name} radical rank {}", rad.len());
        for v in rad {
            println!("  {}", fmt_vec(&v));
        }
    }
    Ok(true)
}

fn radical_json(l: &Lattice) -> Value {
    let rad = l.radical_basis();
    json!({"rank": rad.len(), "basis": rad.iter().map(|v| v.iter().map(Int::to_string).collect::<Vec<_>>()).collect::<Vec<_>>()})
}

fn fmt_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn roots(c: &Common, ctx: &Ctx) -> Result<bool, Error> {
    let l = ctx.lattice(c.lattice)?;
    let layers = weyl::orbit_layers(&l, &l.basis(), c.depth, c.cap)?;
    let exhaustive = layers.len() <= c.depth;
    let all: Vec<_> = layers.iter().flatten().collect();
    let split = |x: &[Int]| l.to_split(x).ok().map(|(_, n)| n);
    if c.format == Format::Json {
        let list: Vec<Value> = layers
            .iter()
            .enumerate()
            .flat_map(|(d, layer)| layer.iter().map(move |r| (d, r)))
            .map(|(d, r)| {
                let mut v = json!({"root": r, "depth": d});
                if let Some(n) = split(&r.0) {
                    v["delta"] = json!(n.to_string());
                }
                v
            })
            .collect();
        print_json(&merge(
            ctx.header(),
            json!({"lattice": lattice_name(c.lattice), "count": all.len(), "exhaustive": exhaustive, "roots": list, "pass": true}),
        ));
        return Ok(true);
    }
    for (d, layer) in layers.iter().enumerate() {
        for r in layer {
            match split(&r.0) {
                Some(n) => println!("{d} {r} δ={n}"),
                None => println!("{d} {r}"),
            }
        }
    }
    let state = if exhaustive { "closed" } else { "truncated at depth" };
    println!("{} roots ({state} {})", all.len(), c.depth);
    Ok(true)
}

fn lattice_name(k: LatticeKind) -> &'static str {
    match k {
        LatticeKind::Star => "star",
        LatticeKind::Octopus => "octopus",
    }
}

fn coxeter(c: &Common, ctx: &Ctx) -> Result<bool, Error> {
    let l = ctx.lattice(c.lattice)?;
    let cox = weyl::coxeter_element(&l);
    let probe = c.cap.min(ORDER_PROBE);
    let order = weyl::order_of(&cox, probe);
    if c.format == Format::Json {
        print_json(&merge(
            ctx.header(),
            json!({"lattice": lattice_name(c.lattice), "coxeter": cox.matrix(), "order": order, "order_probe": probe, "pass": true}),
        ));
    } else {
        println!("{} Coxeter element\n{}", lattice_name(c.lattice), cox.matrix());
        println!("order {} (probe up to {probe})", order_text(order));
    }
    Ok(true)
}

fn suites(c: &Common) -> Result<Vec<Suite>, Error> {
    match c.suite.as_deref() {
        None | Some("all") => Ok(Suite::ALL.to_vec()),
        Some(s) => s.split(',').map(str::parse).collect(),
    }
}

fn verify(c: &Common, ctx: &Ctx) -> Result<bool, Error> {
    let reports = suites(c)?
        .into_iter()
        .map(|s| run_suite(s, &ctx.entry, &ctx.params))
        .collect::<Result<Vec<SuiteReport>, Error>>()?;
    let pass = reports.iter().all(|r| r.pass);
    if c.format == Format::Json {
        print_json(&merge(ctx.header(), json!({"suites": reports, "pass": pass})));
    } else {
        println!("weights {} seed {}", ctx.entry.weights, ctx.params.seed);
        for r in &reports {
            println!("[{}] {}", verdict(r.pass), r.name);
            for d in &r.details {
                match &d.note {
                    Some(n) => println!("  [{}] {} ({n})", verdict(d.pass), d.check),
                    None => println!("  [{}] {}", verdict(d.pass), d.check),
                }
            }
        }
        println!("{}", verdict(pass));
    }
    Ok(pass)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn mutate(c: &Common, ctx: &Ctx) -> Result<bool, Error> {
    let l = ctx.lattice(c.lattice)?;
    let word = parse_braid_word(&c.word)?;
    let start = KCollection::simples(&l);
    let end = start.act_word(&word)?;
    let exceptional = end.is_numerically_exceptional()?;
    let full = end.is_full();
    let pass = exceptional && full;
    if c.format == Format::Json {
        let w: Vec<String> = word.iter().map(ToString::to_string).collect();
        print_json(&merge(
            ctx.header(),
            json!({
                "word": w,
                "collection": end,
                "witness": end.exceptional_witness()?,
                "exceptional": exceptional,
                "full": full,
                "pass": pass,
            }),
        ));
    } else {
        for (k, x) in end.classes().iter().enumerate() {
            println!("E_{} = {}", k + 1, fmt_vec(x));
        }
        println!("numerically exceptional {exceptional}");
        println!("full {full}");
    }
    Ok(pass)
}

type Handler = fn(&Common, &Ctx) -> Result<bool, Error>;

fn run(cli: Cli) -> Result<bool, Error> {
    let (c, f): (&Common, Handler) = match &cli.command {
        Command::Describe(c) => (c, describe),
        Command::Roots(c) => (c, roots),
        Command::Coxeter(c) => (c, coxeter),
        Command::Verify(c) => (c, verify),
        Command::Mutate(c) => (c, mutate),
    };
    let ctx = Ctx::new(c)?;
    suites(c)?;
    f(c, &ctx)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}: {e}", variant(&e));
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}
