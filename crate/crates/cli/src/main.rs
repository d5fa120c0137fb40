use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use mzero::decomp::{
    algebraic_zero_count, bezout_bound, zero_decomp_multi, BoundSpec, ComponentKind,
    DecompositionResult, StrategyFlags,
};
use mzero::charset::wu_char_set;
use mzero::dual::multiplicity;
use mzero::parse::{parse_point, parse_system};
use mzero::poly::Polynomial;
use mzero::report::{build_report, ComponentZeros};
use mzero::solve::rational_zeros;
use mzero::vars::VarOrder;

#[derive(Parser)]
#[command(
    name = "mzero",
    about = "Exact multiplicity-preserving decomposition of zero-dimensional polynomial systems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(clap::Args)]
struct DecomposeOpts {
    /// Multiplicity exponent: `bezout` or a fixed positive integer
    #[arg(long, default_value = "bezout")]
    bound: String,
    /// Disable the reductum retry on vanishing pseudo-remainders
    #[arg(long)]
    no_prop3: bool,
    /// Split branches along coprime factors of the initials
    #[arg(long)]
    factor_initials: bool,
    /// Shrink the exponent as components are certified (forces sequential order)
    #[arg(long)]
    update_bound: bool,
    /// Split triangular components at univariate factors of their heads
    #[arg(long)]
    split_components: bool,
    /// Process independent branches on a thread pool
    #[arg(long)]
    parallel: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a characteristic set of the system
    Charset {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose the system into components that partition its zeros
    Decompose {
        file: PathBuf,
        #[command(flatten)]
        opts: DecomposeOpts,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Local multiplicity of the system at a rational point
    Multiplicity {
        file: PathBuf,
        /// Comma-separated rational coordinates, e.g. 1,0,-1/2
        #[arg(long)]
        point: String,
        /// Stabilization cap on the dual order (default: the degree bound)
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decompose, then certify every rational zero against the input system
    Verify {
        file: PathBuf,
        #[command(flatten)]
        opts: DecomposeOpts,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum Failure {
    Input(String),
    Algorithm(String),
}

impl From<mzero::Error> for Failure {
    fn from(e: mzero::Error) -> Self {
        match e {
            mzero::Error::Parse { .. } | mzero::Error::DegenerateInput(_) => {
                Failure::Input(e.to_string())
            }
            other => Failure::Algorithm(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            // a closed pipe on the reading side is not our error
            use std::io::Write as _;
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Algorithm(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_system(path: &PathBuf) -> Result<(std::sync::Arc<VarOrder>, Vec<Polynomial>), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_system(&text)?)
}

fn parse_bound(s: &str) -> Result<BoundSpec, Failure> {
    if s.eq_ignore_ascii_case("bezout") {
        return Ok(BoundSpec::Bezout);
    }
    match s.parse::<u32>() {
        Ok(n) if n > 0 => Ok(BoundSpec::Fixed(n)),
        _ => Err(Failure::Input(format!(
            "--bound takes `bezout` or a positive integer, got `{s}`"
        ))),
    }
}

fn flags_of(o: &DecomposeOpts) -> StrategyFlags {
    StrategyFlags {
        prop3: !o.no_prop3,
        factor_initials: o.factor_initials,
        update_bound: o.update_bound,
        split_components: o.split_components,
        parallel: o.parallel,
    }
}

fn run(cmd: Cmd) -> Result<String, Failure> {
    match cmd {
        Cmd::Charset { file, format } => {
            let (order, polys) = read_system(&file)?;
            let out = wu_char_set(&polys)?;
            if format == Format::Json {
                let doc = serde_json::json!({
                    "vars": order.names(),
                    "charset": out.charset.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "initials": out.initials.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "initialProducts": out.initial_products.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "inconsistent": out.inconsistent,
                });
                return Ok(json_doc(&doc));
            }
            let mut s = String::new();
            let _ = writeln!(s, "characteristic set ({} elements):", out.charset.len());
            for p in out.charset.polys() {
                let _ = writeln!(s, "  {p}");
            }
            let _ = writeln!(s, "initials:");
            for p in &out.initials {
                let _ = writeln!(s, "  {p}");
            }
            let _ = writeln!(
                s,
                "status: {}",
                if out.inconsistent {
                    "inconsistent"
                } else {
                    "consistent"
                }
            );
            Ok(s)
        }
        Cmd::Decompose { file, opts, format } => {
            let (_, polys) = read_system(&file)?;
            let res = zero_decomp_multi(&polys, parse_bound(&opts.bound)?, flags_of(&opts))?;
            let per = enumerate_components(&res, None)?;
            if format == Format::Json {
                let rep = build_report(&res, &per);
                return Ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rep).unwrap()
                ));
            }
            Ok(render_decomposition(&res, &per))
        }
        Cmd::Multiplicity {
            file,
            point,
            cap,
            format,
        } => {
            let (order, polys) = read_system(&file)?;
            let pt = parse_point(&point, order.len())?;
            let cap = match cap {
                Some(c) => c,
                None => bezout_bound(&polys)?,
            };
            let res = multiplicity(&polys, &pt, cap)?;
            if format == Format::Json {
                let doc = serde_json::json!({
                    "point": pt.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "multiplicity": res.multiplicity,
                    "stabilizationOrder": res.sigma,
                    "dims": res.dims,
                });
                return Ok(json_doc(&doc));
            }
            let mut s = String::new();
            let _ = writeln!(s, "multiplicity: {}", res.multiplicity);
            let _ = writeln!(s, "stabilization order: {}", res.sigma);
            let dims: Vec<String> = res.dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "dual dimensions by order: {}", dims.join(", "));
            Ok(s)
        }
        Cmd::Verify { file, opts, format } => {
            let (_, polys) = read_system(&file)?;
            let res = zero_decomp_multi(&polys, parse_bound(&opts.bound)?, flags_of(&opts))?;
            let per = enumerate_components(&res, Some(&polys))?;
            if format == Format::Json {
                let rep = build_report(&res, &per);
                return Ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&rep).unwrap()
                ));
            }
            let mut s = render_decomposition(&res, &per);
            s.push_str(&render_conservation(&res, &per));
            Ok(s)
        }
    }
}

fn json_doc(doc: &serde_json::Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(doc).unwrap())
}

/// Rational zeros of every triangular component. With the original system
/// present, each zero is certified: the claimed multiplicity must match the
/// dual-space count against both the component and the input.
fn enumerate_components(
    res: &DecompositionResult,
    original: Option<&[Polynomial]>,
) -> Result<Vec<ComponentZeros>, Failure> {
    let cap = res.bound.max(2);
    let mut out = Vec::with_capacity(res.components.len());
    for comp in &res.components {
        if comp.kind == ComponentKind::Unresolved {
            out.push(ComponentZeros {
                zeros: Vec::new(),
                complete: false,
            });
            continue;
        }
        let e = rational_zeros(comp)?;
        let mut zeros = Vec::with_capacity(e.zeros.len());
        for z in e.zeros {
            let certified = match original {
                None => false,
                Some(sys) => {
                    let against_comp = multiplicity(&comp.polys, &z.point, cap)?;
                    let against_input = multiplicity(sys, &z.point, cap)?;
                    against_comp.multiplicity == z.multiplicity
                        && against_input.multiplicity == z.multiplicity
                }
            };
            zeros.push((z.point, z.multiplicity, certified));
        }
        out.push(ComponentZeros {
            zeros,
            complete: e.complete,
        });
    }
    Ok(out)
}

fn point_str(pt: &[BigRational]) -> String {
    let coords: Vec<String> = pt.iter().map(|c| c.to_string()).collect();
    format!("({})", coords.join(", "))
}

fn render_decomposition(res: &DecompositionResult, per: &[ComponentZeros]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "degree bound: {}", res.bound);
    if res.final_bound != res.bound {
        let _ = writeln!(s, "final bound after updates: {}", res.final_bound);
    }
    let _ = writeln!(s, "components: {}", res.components.len());
    for (i, (comp, z)) in res.components.iter().zip(per).enumerate() {
        let kind = match comp.kind {
            ComponentKind::Triangular => "triangular",
            ComponentKind::Unresolved => "unresolved",
        };
        let _ = writeln!(s, "[{}] {kind}", i + 1);
        for p in &comp.polys {
            let _ = writeln!(s, "    {p}");
        }
        if !comp.saturation.is_empty() {
            let _ = writeln!(s, "  nonvanishing: {}", comp.saturation_product());
        }
        for line in &comp.provenance {
            let _ = writeln!(s, "  note: {line}");
        }
        match comp.kind {
            ComponentKind::Unresolved => {
                let _ = writeln!(s, "  zeros not enumerated (component is not triangular)");
            }
            ComponentKind::Triangular => {
                for (pt, mult, _) in &z.zeros {
                    let _ = writeln!(
                        s,
                        "  rational zero {} with multiplicity {mult}",
                        point_str(pt)
                    );
                }
                if z.zeros.is_empty() && z.complete {
                    let _ = writeln!(s, "  no zeros (empty component)");
                }
                if !z.complete {
                    let _ = writeln!(s, "  has irrational zeros (not enumerated)");
                }
            }
        }
    }
    s
}

/// Accounting table for `verify`: certified rational mass plus degree counts
/// of fully certified components without rational zeros.
fn render_conservation(res: &DecompositionResult, per: &[ComponentZeros]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "certification:");
    let mut rational_mass: u64 = 0;
    let mut degree_mass: u64 = 0;
    let mut gaps = 0usize;
    for (i, (comp, z)) in res.components.iter().zip(per).enumerate() {
        for (pt, mult, certified) in &z.zeros {
            let verdict = if *certified { "certified" } else { "MISMATCH" };
            let _ = writeln!(
                s,
                "  [{}] {} multiplicity {mult}: {verdict}",
                i + 1,
                point_str(pt)
            );
            if *certified {
                rational_mass += u64::from(*mult);
            } else {
                gaps += 1;
            }
        }
        if comp.kind == ComponentKind::Triangular && !z.complete {
            if z.zeros.is_empty() {
                match algebraic_zero_count(comp) {
                    Some(n) => {
                        let _ = writeln!(s, "  [{}] {} zeros by degree count", i + 1, n);
                        degree_mass += n;
                    }
                    None => gaps += 1,
                }
            } else {
                gaps += 1;
            }
        }
        if comp.kind == ComponentKind::Unresolved {
            gaps += 1;
        }
    }
    let _ = writeln!(
        s,
        "accounted zeros with multiplicity: {} rational + {} by degree = {}",
        rational_mass,
        degree_mass,
        rational_mass + degree_mass
    );
    if gaps == 0 {
        let _ = writeln!(s, "conservation: complete");
    } else {
        let _ = writeln!(
            s,
            "conservation: partial ({gaps} component(s) not fully accounted)"
        );
    }
    s
}
