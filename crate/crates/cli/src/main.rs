use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use mheight::capability::{self, CapabilityReport};
use mheight::closed::{closed_height, closed_profile};
use mheight::lp::{exact_mheight, exact_profile};
use mheight::search::{self, domain_for, FundamentalDomain};
use mheight::suites::{run_suite, Suite};
use mheight::{CapabilitySpec, Error, Family, Height, Result};

#[derive(Parser)]
#[command(
    name = "mheight",
    version,
    about = "m-heights of geometric analog codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generator matrix.
    Gen(FamilyArgs),
    /// Compute one m-height.
    Height {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        method: Method,
        /// Grid size for --method search (arc points or points per triangle edge).
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Compute h_1 … h_{n-1}.
    Profile {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        method: ProfileMethod,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite; exits 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Outlier-handling capability from the closed-form profile.
    Capability {
        #[command(flatten)]
        family: FamilyArgs,
        /// List every feasible (tau, sigma) at this Delta/delta.
        #[arg(long, conflicts_with_all = ["tau", "sigma", "delta", "big_delta"])]
        ratio: Option<f64>,
        #[arg(long, requires_all = ["sigma", "delta", "big_delta"])]
        tau: Option<usize>,
        #[arg(long, requires_all = ["tau", "delta", "big_delta"])]
        sigma: Option<usize>,
        /// Noise bound.
        #[arg(long, value_name = "BOUND", requires_all = ["tau", "sigma", "big_delta"])]
        delta: Option<f64>,
        /// Outlier threshold.
        #[arg(long = "Delta", id = "big_delta", value_name = "THRESHOLD", requires_all = ["tau", "sigma", "delta"])]
        big_delta: Option<f64>,
    },
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Code length, required for dual-polygonal.
    #[arg(long)]
    n: Option<usize>,
}

impl FamilyArgs {
    fn resolve(&self) -> Result<Family> {
        let name = self
            .family
            .to_possible_value()
            .expect("no skipped variants");
        Family::parse(name.get_name(), self.n)
    }
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)]
enum FamilyArg {
    DualPolygonal,
    DualIcosahedral,
    DualDodecahedral,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Lp,
    Search,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileMethod {
    Closed,
    Lp,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    PolygonalOrder,
    IcosChain,
    DodeRanks,
    Monotonicity,
    Candidates,
    CrossCheck,
}

#[derive(Serialize)]
struct SpecReport {
    spec: CapabilitySpec,
    ratio: f64,
    required_ratio: Height,
    feasible: bool,
}

enum Outcome {
    Success(String),
    Failure(String),
}

fn run(cli: Cli) -> Result<Outcome> {
    let text = match cli.command {
        Command::Gen(family) => {
            let g = family.resolve()?.generator()?;
            mheight::json::to_string(&g)
        }
        Command::Height {
            family,
            m,
            method,
            resolution,
        } => {
            let family = family.resolve()?;
            let h = match method {
                Method::Closed => closed_height(family, m)?,
                Method::Lp => exact_mheight(&family.generator()?, m)?,
                Method::Search => {
                    let domain = domain_for(family)?;
                    let r = resolution.unwrap_or(match domain {
                        FundamentalDomain::Arc { .. } => search::DEFAULT_ARC_RESOLUTION,
                        FundamentalDomain::Triangle(_) => search::DEFAULT_TRIANGLE_RESOLUTION,
                    });
                    search::domain_search(&family.generator()?, m, &domain, r)?
                }
            };
            mheight::json::to_string(&h)
        }
        Command::Profile {
            family,
            method,
            format,
        } => {
            let family = family.resolve()?;
            let p = match method {
                ProfileMethod::Closed => closed_profile(family)?,
                ProfileMethod::Lp => exact_profile(&family.generator()?)?,
            };
            if format == Format::Csv {
                return Ok(Outcome::Success(p.to_csv().trim_end().to_string()));
            }
            mheight::json::to_string(&p)
        }
        Command::Verify {
            suite,
            samples,
            seed,
        } => {
            let name = suite.to_possible_value().expect("no skipped variants");
            let suite: Suite = name.get_name().parse()?;
            let report = run_suite(suite, samples, seed)?;
            let text = mheight::json::to_string(&report);
            if !report.passed {
                return Ok(Outcome::Failure(text));
            }
            text
        }
        Command::Capability {
            family,
            ratio,
            tau,
            sigma,
            delta,
            big_delta,
        } => {
            let profile = closed_profile(family.resolve()?)?;
            match (ratio, tau, sigma, delta, big_delta) {
                (Some(r), ..) => {
                    if !r.is_finite() {
                        return Err(Error::InvalidParameter(format!(
                            "ratio = {r} must be finite"
                        )));
                    }
                    mheight::json::to_string(&CapabilityReport::new(&profile, r))
                }
                (None, Some(tau), Some(sigma), Some(delta), Some(big_delta)) => {
                    let spec = CapabilitySpec::new(tau, sigma, delta, big_delta)?;
                    let feasible = capability::check_spec(&profile, &spec)?;
                    mheight::json::to_string(&SpecReport {
                        spec,
                        ratio: spec.ratio(),
                        required_ratio: match capability::required_ratio(
                            profile.get(spec.order())?.value,
                        ) {
                            Ok(r) => Height::Finite(r),
                            Err(_) => Height::Infinite,
                        },
                        feasible,
                    })
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "capability needs --ratio or all of --tau --sigma --delta --Delta".into(),
                    ))
                }
            }
        }
    };
    Ok(Outcome::Success(text))
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(Outcome::Success(text)) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failure(text)) => {
            println!("{text}");
            ExitCode::from(1)
        }
        Err(e) => {
            let doc = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            println!("{}", mheight::json::to_string(&doc));
            ExitCode::from(1)
        }
    }
}
