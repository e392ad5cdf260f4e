use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pappus_core::boxes::{self, PappusParams};
use pappus_core::duality;
use pappus_core::error::Error;
use pappus_core::export;
use pappus_core::lemmas::{self, LemmaConfig};
use pappus_core::morph::{self, FullParams};
use pappus_core::scalar::{self, Scalar};

#[derive(Parser, Debug)]
#[command(name = "pappus", version, about = "Marked boxes, morphed Pappus representations and their certificates")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Default)]
struct GlobalArgs {
    /// TOML file with defaults for the flags below.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Root isolation width, as a rational such as 1/1099511627776.
    #[arg(long, global = true, value_parser = parse_scalar)]
    tol: Option<Scalar>,
    /// Orbit depth (at most 7).
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Grid density for sampled checks and region plots.
    #[arg(long, global = true)]
    grid: Option<usize>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output formats, comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    format: Option<Vec<Format>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the certificate suite.
    Verify {
        /// Restrict to these lemma ids.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Trace the duality curve for fixed (c, d).
    Curve {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        c: Scalar,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        d: Scalar,
        #[arg(long, default_value = "4", value_parser = parse_scalar)]
        b_max: Scalar,
        #[arg(long, default_value_t = 60)]
        steps: usize,
    },
    /// Generate a morphed orbit and check nesting.
    Orbit {
        #[command(flatten)]
        p: ParamArgs,
    },
    /// Print trace invariants and the duality data at one parameter.
    Invariants {
        #[command(flatten)]
        p: ParamArgs,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Plot the good region.
    Region,
}

#[derive(Args, Debug)]
struct ParamArgs {
    #[arg(long, value_parser = parse_scalar)]
    a: Scalar,
    #[arg(long, value_parser = parse_scalar)]
    b: Scalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    c: Scalar,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
    d: Scalar,
}

impl ParamArgs {
    fn full(&self) -> Result<FullParams, Error> {
        FullParams::new(self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    tol: Option<String>,
    depth: Option<usize>,
    grid: Option<usize>,
    out: Option<PathBuf>,
    format: Option<Vec<Format>>,
    samples: Option<usize>,
    seed: Option<u64>,
}

#[derive(Debug)]
struct RunConfig {
    tol: Scalar,
    depth: usize,
    grid: usize,
    out: PathBuf,
    formats: Vec<Format>,
    samples: Option<usize>,
    seed: Option<u64>,
}

enum Failure {
    Usage(String),
    Cert(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ParamOutOfRange(_) | Error::NotInTheta(_) | Error::DepthLimit(..) | Error::Parse(_) => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Cert(other.to_string()),
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Cert(format!("i/o: {e}"))
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    scalar::parse(s).map_err(|e| e.to_string())
}

impl RunConfig {
    fn resolve(g: &GlobalArgs) -> Result<Self, Failure> {
        let file = match &g.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
            }
            None => FileConfig::default(),
        };
        let file_tol = file.tol.as_deref().map(scalar::parse).transpose()?;
        let cfg = RunConfig {
            tol: g.tol.clone().or(file_tol).unwrap_or_else(duality::default_tolerance),
            depth: g.depth.or(file.depth).unwrap_or(5),
            grid: g.grid.or(file.grid).unwrap_or(100),
            out: g.out.clone().or(file.out).unwrap_or_else(|| PathBuf::from("out")),
            formats: g.format.clone().or(file.format).unwrap_or_else(|| vec![Format::Json, Format::Csv, Format::Svg]),
            samples: file.samples,
            seed: file.seed,
        };
        if cfg.tol <= Scalar::from_integer(0.into()) {
            return Err(Failure::Usage("tolerance must be positive".into()));
        }
        if cfg.depth > morph::DEFAULT_MAX_DEPTH {
            return Err(Failure::Usage(format!("depth {} exceeds the cap {}", cfg.depth, morph::DEFAULT_MAX_DEPTH)));
        }
        if cfg.grid == 0 {
            return Err(Failure::Usage("grid must be positive".into()));
        }
        Ok(cfg)
    }

    fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }

    fn write(&self, name: &str, contents: &str) -> Result<PathBuf, Failure> {
        fs::create_dir_all(&self.out).map_err(io)?;
        let path = self.out.join(name);
        fs::write(&path, contents).map_err(io)?;
        Ok(path)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let result = RunConfig::resolve(&cli.global).and_then(|cfg| run(cli.cmd, &cfg));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Cert(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, cfg: &RunConfig) -> Result<(), Failure> {
    match cmd {
        Command::Verify { only, samples, seed } => cmd_verify(cfg, &only, samples.or(cfg.samples), seed.or(cfg.seed)),
        Command::Curve { c, d, b_max, steps } => cmd_curve(cfg, &c, &d, &b_max, steps),
        Command::Orbit { p } => cmd_orbit(cfg, &p.full()?),
        Command::Invariants { p, json } => cmd_invariants(&p.full()?, json, &cfg.tol),
        Command::Region => {
            let path = cfg.write("region.svg", &export::region_svg(cfg.grid))?;
            println!("wrote {}", path.display());
            Ok(())
        }
    }
}

fn cmd_verify(cfg: &RunConfig, only: &[String], samples: Option<usize>, seed: Option<u64>) -> Result<(), Failure> {
    let registry = lemmas::registry();
    for id in only {
        if !registry.iter().any(|(k, _)| k == id) {
            return Err(Failure::Usage(format!("unknown lemma id {id:?}; known ids: {}", lemmas::lemma_ids().join(", "))));
        }
    }
    let selected: Vec<_> = registry.into_iter().filter(|(k, _)| only.is_empty() || only.iter().any(|o| o == k)).collect();
    let mut lc = LemmaConfig { tol: cfg.tol.clone(), grid: cfg.grid, orbit_depth: cfg.depth, ..Default::default() };
    if let Some(s) = samples {
        lc.samples = s;
    }
    if let Some(s) = seed {
        lc.seed = s;
    }
    let certs = lemmas::run_registry(&selected, &lc);
    print!("{}", lemmas::summary_table(&certs));
    for c in &certs {
        for o in c.failures() {
            println!("  {} / {}: {}", c.id, o.name, o.detail);
        }
        for d in &c.discrepancies {
            println!("  {} note: {}: displayed {} , computed {}", c.id, d.item, d.displayed, d.computed);
        }
    }
    let bundle = serde_json::to_string_pretty(&certs).map_err(|e| Failure::Cert(e.to_string()))?;
    let path = cfg.write("certificates.json", &bundle)?;
    println!("wrote {} ({} certificates)", path.display(), certs.len());
    if certs.iter().all(|c| c.passed) {
        Ok(())
    } else {
        Err(Failure::Cert(format!("{} certificate(s) failed", certs.iter().filter(|c| !c.passed).count())))
    }
}

fn cmd_curve(cfg: &RunConfig, c: &Scalar, d: &Scalar, b_max: &Scalar, steps: usize) -> Result<(), Failure> {
    let one = Scalar::from_integer(1.into());
    if b_max <= &one || steps == 0 {
        return Err(Failure::Usage("need b_max > 1 and steps > 0".into()));
    }
    PappusParams::new(c.clone(), d.clone())?;
    let grid: Vec<Scalar> = (0..=steps)
        .map(|k| &one + (b_max - &one) * Scalar::new((k as i64).into(), (steps as i64).into()))
        .collect();
    let pts = duality::trace_curve(c, d, &grid, &cfg.tol)?;
    let (lo, hi) = pts.iter().fold((f64::MAX, f64::MIN), |(l, h), p| (l.min(p.a), h.max(p.a)));
    println!("gamma_({}, {}): {} points, a in [{lo:.9}, {hi:.9}]", scalar::fmt(c), scalar::fmt(d), pts.len());
    if cfg.wants(Format::Csv) {
        println!("wrote {}", cfg.write("curve.csv", &export::curve_csv(&pts)?)?.display());
    }
    if cfg.wants(Format::Json) {
        let j = serde_json::to_string_pretty(&pts).map_err(|e| Failure::Cert(e.to_string()))?;
        println!("wrote {}", cfg.write("curve.json", &j)?.display());
    }
    if cfg.wants(Format::Svg) {
        let label = format!("c = {}, d = {}", scalar::fmt(c), scalar::fmt(d));
        let svg = export::curve_svg(&[(label, pts)], scalar::to_f64(b_max));
        println!("wrote {}", cfg.write("curve.svg", &svg)?.display());
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitOutput<'a> {
    params: [(char, String); 4],
    depth: usize,
    nesting: &'a morph::NestingReport,
    certificate: bool,
    nodes: &'a [morph::OrbitNode],
}

fn cmd_orbit(cfg: &RunConfig, p: &FullParams) -> Result<(), Failure> {
    let nodes = morph::generate_orbit(p, cfg.depth, morph::DEFAULT_MAX_DEPTH)?;
    let report = morph::nesting_report(&nodes)?;
    let classical = p.morph.is_identity();
    println!(
        "{} boxes, {} pairs: {} disjoint, {} strictly nested, {} weakly nested, {} overlapping",
        report.boxes, report.pairs, report.disjoint, report.strictly_nested, report.weakly_nested, report.overlapping
    );
    println!("nesting certificate: {}", report.passes());
    if classical && !report.passes() {
        println!("(a, b) = (1, 1) is the classical Pappus orbit; boxes may share edges");
    }
    if cfg.wants(Format::Json) {
        let out = OrbitOutput {
            params: p.vals().map(|(v, x)| (v, scalar::fmt(&x))),
            depth: cfg.depth,
            nesting: &report,
            certificate: report.passes(),
            nodes: &nodes,
        };
        let j = serde_json::to_string_pretty(&out).map_err(|e| Failure::Cert(e.to_string()))?;
        println!("wrote {}", cfg.write("orbit.json", &j)?.display());
    }
    if cfg.wants(Format::Svg) {
        println!("wrote {}", cfg.write("orbit.svg", &export::orbit_svg(&nodes)?)?.display());
    }
    if report.passes() || (classical && report.overlapping == 0) {
        Ok(())
    } else {
        Err(Failure::Cert(format!("nesting fails at {:?}", report.first_failure)))
    }
}

#[derive(Serialize)]
struct InvariantReport {
    a: String,
    b: String,
    c: String,
    d: String,
    tau_r1_r2sq: Option<String>,
    tau_r1sq_r2: Option<String>,
    comm_difference: Option<String>,
    trace_r1_r2: Option<String>,
    trace_r1_r2m: String,
    psi: String,
    in_theta: bool,
    det_r1r2m_minus_i: String,
    duality_bracket: Option<(String, String)>,
    polarity_residual: Option<f64>,
}

fn cmd_invariants(p: &FullParams, json: bool, tol: &Scalar) -> Result<(), Failure> {
    let tr = boxes::trace_identities(&p.pappus).ok();
    let (r1, r2m) = morph::morphed_generators(p)?;
    let one = Scalar::from_integer(1.into());
    let bracket = if p.morph.b > one { duality::solve_duality_a(&p.morph.b, &p.pappus.c, &p.pappus.d, tol).ok() } else { None };
    let rep = InvariantReport {
        a: scalar::fmt(&p.morph.a),
        b: scalar::fmt(&p.morph.b),
        c: scalar::fmt(&p.pappus.c),
        d: scalar::fmt(&p.pappus.d),
        tau_r1_r2sq: tr.as_ref().map(|t| scalar::fmt(&t.tau_r1_r2sq)),
        tau_r1sq_r2: tr.as_ref().map(|t| scalar::fmt(&t.tau_r1sq_r2)),
        comm_difference: tr.as_ref().map(|t| scalar::fmt(&t.comm_difference)),
        trace_r1_r2: tr.as_ref().map(|t| scalar::fmt(&t.trace_r1_r2)),
        trace_r1_r2m: scalar::fmt(&(&r1 * &r2m).trace()),
        psi: scalar::fmt(&duality::psi_at(p)),
        in_theta: morph::theta_contains(&p.morph),
        det_r1r2m_minus_i: scalar::fmt(&duality::det_minus_identity(p)?),
        duality_bracket: bracket.map(|b| (scalar::fmt(&b.lo), scalar::fmt(&b.hi))),
        polarity_residual: duality::solve_polarity(&r1, &r2m, 1e-10).ok().map(|x| x.residual),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&rep).map_err(|e| Failure::Cert(e.to_string()))?);
        return Ok(());
    }
    let opt = |x: &Option<String>| x.clone().unwrap_or_else(|| "undefined".into());
    println!("parameters        (a, b, c, d) = ({}, {}, {}, {})", rep.a, rep.b, rep.c, rep.d);
    println!("tau(r1 r2^2)      {}", opt(&rep.tau_r1_r2sq));
    println!("tau(r1^2 r2)      {}", opt(&rep.tau_r1sq_r2));
    println!("tr[r2,r1]-tr[r1,r2] {}", opt(&rep.comm_difference));
    println!("tr(r1 r2)         {}", opt(&rep.trace_r1_r2));
    println!("tr(r1 r2m)        {}", rep.trace_r1_r2m);
    println!("psi               {}", rep.psi);
    println!("in theta          {}", rep.in_theta);
    println!("det(r1 r2m - I)   {}", rep.det_r1r2m_minus_i);
    match &rep.duality_bracket {
        Some((lo, hi)) if lo == hi => println!("duality root a     {lo}"),
        Some((lo, hi)) => println!("duality root a in [{lo}, {hi}]"),
        None => println!("duality root a     n/a"),
    }
    match rep.polarity_residual {
        Some(r) => println!("polarity residual {r:e}"),
        None => println!("polarity          none"),
    }
    Ok(())
}
