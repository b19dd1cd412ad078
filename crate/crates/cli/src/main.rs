use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qheis_core::exprio::{parse, print};
use qheis_core::identities::{
    eps_residual_shape, oracle_check, suite_grid, verify, verify_suite, IdentityError, IdentityId, Outcome, Params,
    VerificationResult,
};
use qheis_core::ncalg::{AlgebraSpec, Deformation};
use qheis_core::report::{SuiteConfig, SuiteReport};

#[derive(Parser)]
#[command(name = "qheis", version, about = "Normal ordering and identity checks in Heisenberg-type algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order an expression and print its canonical form
    Order(OrderArgs),
    /// Verify one identity instance
    Verify {
        /// Identity tag, e.g. E10 or F3BASIC
        tag: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Verify every identity over a parameter grid
    Suite(SuiteArgs),
    /// Same as `verify E2EPS`
    ProbeEpsilon {
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraName {
    Classical,
    Q,
    Qplane,
    #[value(name = "borelA")]
    BorelA,
    #[value(name = "borelB")]
    BorelB,
}

#[derive(Args)]
struct OrderArgs {
    expr: String,
    #[arg(long, value_enum)]
    algebra: AlgebraName,
    /// Number of pairs (classical only)
    #[arg(long)]
    p: Option<u8>,
    /// Use a symbolic central element c in [a_i, b_i] = c (classical only)
    #[arg(long)]
    central: bool,
    /// Set q = 1 in AB - qBA = A (borelA only)
    #[arg(long)]
    unit_q: bool,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    /// Relation index for tags bundling several relations (all if omitted)
    #[arg(long)]
    r: Option<u32>,
    /// Also check the identity on its concrete realization
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 4)]
    max_n: u32,
    #[arg(long, default_value_t = 2)]
    max_p: u32,
    #[arg(long, default_value_t = 3)]
    max_m: u32,
    /// Write the report as JSON to this path
    #[arg(long)]
    json: Option<std::path::PathBuf>,
}

const USAGE_ERROR: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_ERROR)
}

fn algebra_for(args: &OrderArgs) -> Result<AlgebraSpec, String> {
    let classical_only = |flag: &str| format!("--{flag} is only valid with --algebra classical");
    if !matches!(args.algebra, AlgebraName::Classical) {
        if args.p.is_some() {
            return Err(classical_only("p"));
        }
        if args.central {
            return Err(classical_only("central"));
        }
    }
    if args.unit_q && !matches!(args.algebra, AlgebraName::BorelA) {
        return Err("--unit-q is only valid with --algebra borelA".into());
    }
    let spec = match args.algebra {
        AlgebraName::Classical => {
            let p = args.p.unwrap_or(1);
            if args.central { AlgebraSpec::classical_central(p) } else { AlgebraSpec::classical(p) }
                .map_err(|e| e.to_string())?
        }
        AlgebraName::Q => AlgebraSpec::q_deformed(),
        AlgebraName::Qplane => AlgebraSpec::quantum_plane(),
        AlgebraName::BorelA => {
            AlgebraSpec::borel_a(if args.unit_q { Deformation::Unit } else { Deformation::Symbolic })
        }
        AlgebraName::BorelB => AlgebraSpec::borel_b(),
    };
    Ok(spec)
}

fn cmd_order(args: OrderArgs) -> ExitCode {
    let alg = match algebra_for(&args) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    match parse(&args.expr, &alg) {
        Ok(p) => {
            println!("{}", print(&p));
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn result_line(res: &VerificationResult) -> String {
    let head = format!("{} {}", res.id, res.params);
    match res.outcome() {
        Outcome::Pass => format!("{head}: pass"),
        Outcome::ExpectedFail => {
            let terms = eps_residual_shape(&res.residual, res.params.n.unwrap_or(0)).unwrap_or(0);
            format!("{head}: expected-fail: residual has {terms} epsilon-terms")
        }
        Outcome::Fail => format!("{head}: fail: residual {}", print(&res.residual)),
    }
}

fn run_one(id: IdentityId, params: &Params, oracle: bool) -> Result<bool, IdentityError> {
    let res = verify(id, params)?;
    println!("{}", result_line(&res));
    let mut ok = res.outcome() != Outcome::Fail;
    if oracle {
        match oracle_check(id, params)? {
            Some(v) => {
                let verdict = if v.agree { "pass" } else { "fail" };
                println!(
                    "  oracle {verdict} ({}, {} basis monomials, exponents <= {})",
                    v.realization, v.basis_size, v.max_exponent
                );
                // the oracle must agree with the symbolic verdict
                ok &= v.agree == res.residual.is_zero();
            }
            None => println!("  oracle: no realization for {id}"),
        }
    }
    Ok(ok)
}

fn cmd_verify(tag: &str, args: ParamArgs) -> ExitCode {
    let id: IdentityId = match tag.parse() {
        Ok(id) => id,
        Err(e) => return usage_error(e),
    };
    let base = Params { p: args.p, l: args.l, m: args.m, n: args.n, r: args.r };
    let relations = id.signature().relations;
    let instances: Vec<Params> =
        if relations > 1 && args.r.is_none() { (1..=relations).map(|r| base.with_r(r)).collect() } else { vec![base] };
    if let Some(e) = instances.iter().find_map(|p| p.validate(id).err()) {
        return usage_error(e);
    }
    let mut all_ok = true;
    for params in &instances {
        match run_one(id, params, args.oracle) {
            Ok(ok) => all_ok &= ok,
            Err(e) => return usage_error(e),
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_suite(args: SuiteArgs) -> ExitCode {
    let grid = suite_grid(args.max_n, args.max_p, args.max_m);
    let start = Instant::now();
    let results = verify_suite(&grid);
    let report =
        SuiteReport::new(SuiteConfig::new(args.max_n, args.max_p, args.max_m), &grid, &results, start.elapsed());
    print!("{}", report.to_text());
    if let Some(path) = &args.json {
        if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
            return usage_error(format!("cannot write {}: {e}", path.display()));
        }
    }
    if report.has_unexpected_failures() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Order(args) => cmd_order(args),
        Command::Verify { tag, params } => cmd_verify(&tag, params),
        Command::Suite(args) => cmd_suite(args),
        Command::ProbeEpsilon { params } => cmd_verify("E2EPS", params),
    }
}
