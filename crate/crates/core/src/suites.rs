//! Named verification suites with pass/fail reports.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::closed::{self, closed_profile};
use crate::codes::{Family, GeneratorMatrix};
use crate::error::{invalid, Error, Result};
use crate::lp::exact_profile;
use crate::search::{
    self, dodecahedral_rank_check, icosahedral_chain_check, polygonal_order_indices,
};

/// Failures listed per check; the count is always complete.
const MAX_LISTED: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PolygonalOrder,
    IcosChain,
    DodeRanks,
    Monotonicity,
    Candidates,
    CrossCheck,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::PolygonalOrder,
        Suite::IcosChain,
        Suite::DodeRanks,
        Suite::Monotonicity,
        Suite::Candidates,
        Suite::CrossCheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PolygonalOrder => "polygonal-order",
            Suite::IcosChain => "icos-chain",
            Suite::DodeRanks => "dode-ranks",
            Suite::Monotonicity => "monotonicity",
            Suite::Candidates => "candidates",
            Suite::CrossCheck => "cross-check",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| invalid(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub evaluated: usize,
    pub failure_count: usize,
    pub failures: Vec<String>,
}

impl Check {
    fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            evaluated: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.evaluated += 1;
        if !ok {
            self.passed = false;
            self.failure_count += 1;
            if self.failures.len() < MAX_LISTED {
                self.failures.push(describe());
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Uniform point of `{u, v ≥ 0, u + v ≤ 1}`.
pub fn random_barycentric(rng: &mut impl Rng) -> (f64, f64) {
    let (u, v): (f64, f64) = (rng.random(), rng.random());
    if u + v > 1.0 {
        (1.0 - u, 1.0 - v)
    } else {
        (u, v)
    }
}

/// Runs one suite.
///
/// `samples` is the number of random points for the lemma suites and the
/// number of random sphere directions per `(family, m)` added to
/// `cross-check`; `monotonicity` and `candidates` are deterministic and
/// ignore it.
pub fn run_suite(suite: Suite, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = match suite {
        Suite::PolygonalOrder => (3..=12)
            .map(|n| {
                let mut c = Check::new(format!("n={n}"));
                let end = PI / (2 * n) as f64;
                for _ in 0..samples {
                    let a = rng.random::<f64>() * end;
                    let r = polygonal_order_indices(n, a)?;
                    c.record(r.ok(), || format!("alpha={a}: {:?}", r.violations));
                }
                Ok(c)
            })
            .collect::<Result<Vec<_>>>()?,
        Suite::IcosChain | Suite::DodeRanks => {
            let (name, check): (_, fn(f64, f64) -> Result<search::RankReport>) =
                if suite == Suite::IcosChain {
                    ("chain", icosahedral_chain_check)
                } else {
                    ("ranks", dodecahedral_rank_check)
                };
            let mut c = Check::new(name);
            for _ in 0..samples {
                let (u, v) = random_barycentric(&mut rng);
                let r = check(u, v)?;
                c.record(r.ok(), || format!("(u,v)=({u},{v}): {:?}", r.violations));
            }
            vec![c]
        }
        Suite::Monotonicity => monotonicity_checks()?,
        Suite::Candidates => vec![candidate_check()?],
        Suite::CrossCheck => cross_checks(samples, seed)?,
    };
    Ok(SuiteReport {
        suite: suite.name(),
        samples,
        seed,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

fn monotonicity_checks() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 3..=12 {
        for m in 1..=n - 2 {
            out.push(monotonicity_entry(Family::DualPolygonal(n), m, 200)?);
        }
    }
    for family in [Family::DualIcosahedral, Family::DualDodecahedral] {
        for j in search::valid_ratios(family)? {
            out.push(monotonicity_entry(family, j, 50)?);
        }
    }
    Ok(out)
}

fn monotonicity_entry(family: Family, j: usize, resolution: usize) -> Result<Check> {
    let r = search::monotonicity_check(family, j, resolution)?;
    let mut c = Check::new(format!("{} f{j}", label(family)));
    c.evaluated = r.asserted;
    c.failure_count = r.violations.len();
    c.passed = r.ok();
    c.failures = r
        .violations
        .iter()
        .take(MAX_LISTED)
        .map(|v| {
            format!(
                "{:?} d/d{}={} expected {:?}",
                v.point, v.variable, v.derivative, v.expected
            )
        })
        .collect();
    Ok(c)
}

fn candidate_check() -> Result<Check> {
    let g = GeneratorMatrix::dual_dodecahedral();
    let tri = search::dodecahedral_triangle();
    let mut c = Check::new("dodecahedral m=3..7");
    for m in 3..=7 {
        let (best, _) = closed::best_candidate(&g, &tri, m);
        let want = closed::dodecahedral_height(m)?.value.value();
        c.record((best - want).abs() <= 1e-9 * want, || {
            format!("m={m}: {best} vs {want}")
        });
    }
    Ok(c)
}

fn label(family: Family) -> String {
    match family {
        Family::DualPolygonal(n) => format!("{family} n={n}"),
        _ => family.to_string(),
    }
}

fn builtin_families() -> Vec<Family> {
    (3..=12)
        .map(Family::DualPolygonal)
        .chain([Family::DualIcosahedral, Family::DualDodecahedral])
        .collect()
}

fn cross_checks(samples: usize, seed: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for family in builtin_families() {
        let g = family.generator()?;
        let closed = closed_profile(family)?;
        let exact = exact_profile(&g)?;
        let mut c = Check::new(format!("{} closed vs lp", label(family)));
        for m in 1..g.n() {
            let (a, b) = (closed.get(m)?.value, exact.get(m)?.value);
            c.record(a.approx_eq(b, 1e-6), || format!("m={m}: {a:?} vs {b:?}"));
        }
        out.push(c);
        if samples == 0 {
            continue;
        }
        let mut s = Check::new(format!("{} sphere <= lp", label(family)));
        for m in 1..g.n() {
            let bound = exact.get(m)?.value.value();
            let found = search::sphere_search(&g, m, samples, seed)?.value.value();
            s.record(found <= bound + 1e-9, || {
                format!("m={m}: {found} > {bound}")
            });
        }
        out.push(s);
    }
    Ok(out)
}
