//! Fundamental domains, checks of the ordering and monotonicity facts behind
//! the closed forms, and direct numeric search for m-heights.
//!
//! Polyhedral axes are labelled 1-based (`g_1 … g_n`) in every report of
//! this module; the polygonal arc uses 0-based column indices.

use std::f64::consts::PI;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::codes::{Family, GeneratorMatrix};
use crate::error::{invalid, Error, Result};
use crate::height::ExtendedHeight;
use crate::linalg::{self, dot};
use crate::par::{map_reduce, Exec};
use crate::{PHI, SQRT_5};

/// Default arc grid size for [`domain_search`].
pub const DEFAULT_ARC_RESOLUTION: usize = 10_000;
/// Default points per triangle edge for [`domain_search`].
pub const DEFAULT_TRIANGLE_RESOLUTION: usize = 300;
/// Golden-section iterations per line search.
pub const REFINE_ITERATIONS: usize = 64;
/// Finite-difference step for [`monotonicity_check`].
pub const FD_STEP: f64 = 1e-6;
/// Partials smaller than this are not sign-checked.
pub const FD_THRESHOLD: f64 = 1e-8;

const DOMAIN_SLACK: f64 = 1e-12;

/// Two magnitudes closer than `1e-12 · max(1, a, b)` count as equal.
pub fn tied(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-12 * 1f64.max(a.abs()).max(b.abs())
}

fn at_least(a: f64, b: f64) -> bool {
    a >= b || tied(a, b)
}

/// The triangle `conv{v₁, v₂, v₃}` with barycentric map
/// `x(u, v) = u·v₁ + v·v₂ + (1 − u − v)·v₃` over `u, v ≥ 0, u + v ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub vertices: [[f64; 3]; 3],
}

impl Triangle {
    pub fn new(v1: [f64; 3], v2: [f64; 3], v3: [f64; 3]) -> Result<Self> {
        let e1: Vec<f64> = v2.iter().zip(&v1).map(|(a, b)| a - b).collect();
        let e2: Vec<f64> = v3.iter().zip(&v1).map(|(a, b)| a - b).collect();
        let area = linalg::norm(&linalg::cross(&e1, &e2));
        if area.is_nan() || area <= 1e-12 {
            return Err(invalid("triangle vertices are affinely dependent"));
        }
        Ok(Triangle {
            vertices: [v1, v2, v3],
        })
    }

    pub fn point(&self, u: f64, v: f64) -> Vec<f64> {
        let w = 1.0 - u - v;
        let [a, b, c] = &self.vertices;
        (0..3).map(|i| u * a[i] + v * b[i] + w * c[i]).collect()
    }

    fn check(u: f64, v: f64) -> Result<()> {
        if u >= -DOMAIN_SLACK && v >= -DOMAIN_SLACK && u + v <= 1.0 + DOMAIN_SLACK {
            Ok(())
        } else {
            Err(invalid(format!(
                "(u, v) = ({u}, {v}) outside the parameter triangle"
            )))
        }
    }
}

/// A parameter set that reaches every codeword up to coordinate
/// permutations and sign changes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FundamentalDomain {
    /// Angles `α ∈ [0, π/2n]`, direction `(cos α, sin α)`.
    Arc {
        n: usize,
    },
    Triangle(Triangle),
}

impl FundamentalDomain {
    /// Dimension of the information vectors the domain produces.
    pub fn k(&self) -> usize {
        match self {
            FundamentalDomain::Arc { .. } => 2,
            FundamentalDomain::Triangle(_) => 3,
        }
    }
}

fn axes(g: &GeneratorMatrix, labels: &[usize]) -> Vec<[f64; 3]> {
    labels
        .iter()
        .map(|&l| {
            let c = g.column(l - 1);
            [c[0], c[1], c[2]]
        })
        .collect()
}

fn mean(vs: &[[f64; 3]]) -> [f64; 3] {
    let n = vs.len() as f64;
    let mut out = [0.0; 3];
    for v in vs {
        for i in 0..3 {
            out[i] += v[i] / n;
        }
    }
    out
}

pub fn polygonal_domain(n: usize) -> Result<FundamentalDomain> {
    if n < 2 {
        return Err(invalid(format!("arc domain needs n >= 2, got {n}")));
    }
    Ok(FundamentalDomain::Arc { n })
}

/// `v₁ = g₁`, `v₂ = (g₁ + g₃)/2`, `v₃ = (g₁ + g₃ + g₅)/3`.
pub fn icosahedral_triangle() -> Triangle {
    let g = axes(&GeneratorMatrix::dual_icosahedral(), &[1, 3, 5]);
    Triangle::new(g[0], mean(&g[..2]), mean(&g)).expect("nondegenerate")
}

pub fn icosahedral_domain() -> FundamentalDomain {
    FundamentalDomain::Triangle(icosahedral_triangle())
}

/// `x_A = g₁`, `x_B = (g₁ + g₅)/2`, `x_C = (g₁ + g₂ + g₅ + g₆ + g₉)/5`.
pub fn dodecahedral_triangle() -> Triangle {
    let dod = GeneratorMatrix::dual_dodecahedral();
    let ab = axes(&dod, &[1, 5]);
    let c = axes(&dod, &[1, 2, 5, 6, 9]);
    Triangle::new(ab[0], mean(&ab), mean(&c)).expect("nondegenerate")
}

pub fn dodecahedral_domain() -> FundamentalDomain {
    FundamentalDomain::Triangle(dodecahedral_triangle())
}

/// The fundamental domain of a built-in family.
pub fn domain_for(family: Family) -> Result<FundamentalDomain> {
    match family {
        Family::DualPolygonal(n) => polygonal_domain(n),
        Family::DualIcosahedral => Ok(icosahedral_domain()),
        Family::DualDodecahedral => Ok(dodecahedral_domain()),
        Family::Custom => Err(Error::UnsupportedFamily(
            "custom matrices have no known fundamental domain".into(),
        )),
    }
}

/// The only points of the dodecahedral triangle where the m-height can peak for `3 ≤ m ≤ 7`.
pub fn dodecahedral_candidates() -> [(f64, f64); 6] {
    [
        (1.0, 0.0),
        (0.0, 0.0),
        (0.0, 1.0),
        (0.0, (1.0 + 3.0 * SQRT_5) / 11.0),
        (PHI / 3.0, 0.0),
        (0.0, 2.0 * SQRT_5 - 4.0),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainPoint {
    Alpha(f64),
    Barycentric { u: f64, v: f64 },
}

/// An ordering assertion `lhs ≥ rhs` that failed beyond the tie tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub relation: String,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub point: DomainPoint,
    /// Indices by descending magnitude, ties by ascending index.
    pub perm: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl RankReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sorted_desc(mags: &[f64]) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..mags.len()).collect();
    perm.sort_by(|&i, &j| mags[j].total_cmp(&mags[i]).then(i.cmp(&j)));
    perm
}

/// Column index holding rank `k` on the polygonal arc: `0, 1, n−1, 2, n−2, …`.
pub fn polygonal_rank_index(n: usize, k: usize) -> usize {
    match k {
        0 => 0,
        k if k % 2 == 1 => k.div_ceil(2),
        k => n - k / 2,
    }
}

/// Sorts `|cos(πj/n − α)|` and compares with the interleaved index order.
pub fn polygonal_order_indices(n: usize, alpha: f64) -> Result<RankReport> {
    if n < 2 {
        return Err(invalid(format!("n = {n} must be >= 2")));
    }
    let end = PI / (2 * n) as f64;
    if !(0.0..=end).contains(&alpha) {
        return Err(invalid(format!("alpha = {alpha} outside [0, {end}]")));
    }
    let mags: Vec<f64> = (0..n)
        .map(|j| (PI * j as f64 / n as f64 - alpha).cos().abs())
        .collect();
    let perm = sorted_desc(&mags);
    let violations = (0..n)
        .filter_map(|k| {
            let want = polygonal_rank_index(n, k);
            let got = perm[k];
            (got != want && !tied(mags[got], mags[want])).then(|| Violation {
                relation: format!("rank {k}: expected column {want}, found {got}"),
                lhs: mags[want],
                rhs: mags[got],
            })
        })
        .collect();
    Ok(RankReport {
        point: DomainPoint::Alpha(alpha),
        perm,
        violations,
    })
}

/// `β_j = |x(u,v)·g_j|` for every axis, 0-based storage.
fn betas(g: &GeneratorMatrix, tri: &Triangle, u: f64, v: f64) -> Vec<f64> {
    let x = tri.point(u, v);
    g.columns().iter().map(|c| dot(&x, c).abs()).collect()
}

fn chain_violations(beta: &[f64], pairs: &[(usize, usize)]) -> Vec<Violation> {
    pairs
        .iter()
        .filter(|&&(i, j)| !at_least(beta[i - 1], beta[j - 1]))
        .map(|&(i, j)| Violation {
            relation: format!("beta{i} >= beta{j}"),
            lhs: beta[i - 1],
            rhs: beta[j - 1],
        })
        .collect()
}

fn one_based(perm: Vec<usize>) -> Vec<usize> {
    perm.into_iter().map(|j| j + 1).collect()
}

/// Checks `β₁ ≥ β₃ ≥ β₅ ≥ β₄ ≥ β₂ ≥ β₆` on the icosahedral triangle.
pub fn icosahedral_chain_check(u: f64, v: f64) -> Result<RankReport> {
    Triangle::check(u, v)?;
    let beta = betas(
        &GeneratorMatrix::dual_icosahedral(),
        &icosahedral_triangle(),
        u,
        v,
    );
    let violations = chain_violations(&beta, &[(1, 3), (3, 5), (5, 4), (4, 2), (2, 6)]);
    Ok(RankReport {
        point: DomainPoint::Barycentric { u, v },
        perm: one_based(sorted_desc(&beta)),
        violations,
    })
}

/// Axes allowed at each rank (1-based) on the dodecahedral triangle.
pub const DODECAHEDRAL_RANK_SETS: [&[usize]; 10] = [
    &[1],
    &[5],
    &[9],
    &[6, 7],
    &[2, 6, 7],
    &[2, 4, 7],
    &[2, 4],
    &[8, 10],
    &[3, 8, 10],
    &[3, 8],
];

const DODECAHEDRAL_INEQUALITIES: [(usize, usize); 14] = [
    (1, 5),
    (5, 9),
    (9, 6),
    (9, 7),
    (6, 2),
    (6, 4),
    (7, 4),
    (4, 3),
    (4, 8),
    (4, 10),
    (2, 3),
    (2, 8),
    (2, 10),
    (10, 3),
];

/// Checks the rank supports and the pairwise inequalities on the dodecahedral triangle.
///
/// A rank attained by an axis outside its allowed set is excused when that
/// axis ties an allowed one.
pub fn dodecahedral_rank_check(u: f64, v: f64) -> Result<RankReport> {
    Triangle::check(u, v)?;
    let beta = betas(
        &GeneratorMatrix::dual_dodecahedral(),
        &dodecahedral_triangle(),
        u,
        v,
    );
    let perm = one_based(sorted_desc(&beta));
    let mut violations = chain_violations(&beta, &DODECAHEDRAL_INEQUALITIES);
    for (k, allowed) in DODECAHEDRAL_RANK_SETS.iter().enumerate() {
        let axis = perm[k];
        let b = beta[axis - 1];
        if !allowed.contains(&axis) && !allowed.iter().any(|&a| tied(b, beta[a - 1])) {
            let best_allowed = allowed
                .iter()
                .map(|&a| beta[a - 1])
                .fold(f64::NEG_INFINITY, f64::max);
            violations.push(Violation {
                relation: format!(
                    "rank {} attained by axis {axis}, allowed {allowed:?}",
                    k + 1
                ),
                lhs: best_allowed,
                rhs: b,
            });
        }
    }
    Ok(RankReport {
        point: DomainPoint::Barycentric { u, v },
        perm,
        violations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn holds(self, d: f64) -> bool {
        d.abs() <= FD_THRESHOLD
            || match self {
                Sign::Positive => d > 0.0,
                Sign::Negative => d < 0.0,
            }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SignViolation {
    pub point: DomainPoint,
    pub variable: &'static str,
    pub derivative: f64,
    pub expected: Sign,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityReport {
    pub family: String,
    pub ratio: usize,
    pub points: usize,
    /// Partials whose magnitude exceeded the threshold and were sign-checked.
    pub asserted: usize,
    pub violations: Vec<SignViolation>,
}

impl MonotonicityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Ratio functions with their proven sign patterns on the domain.
///
/// Polygonal: `j = m ∈ [1, n−2]`, `h_m(α) = |c_0| / |c_{j_m}|` with `sign h' = (−1)^m`.
/// Icosahedral: `j ∈ {1,2,3}`, denominators `x·g₃`, `x·g₅`, `−x·g₄`.
/// Dodecahedral: `j ∈ {2,4,5,6,7,8,9,10}`, `f_j = x·g₁ / |x·g_j|`; `f₈` is
/// checked on the part of the triangle where `|x·g₈| ≥ |x·g₁₀|`.
pub fn valid_ratios(family: Family) -> Result<Vec<usize>> {
    match family {
        Family::DualPolygonal(n) if n >= 3 => Ok((1..=n - 2).collect()),
        Family::DualPolygonal(n) => Err(invalid(format!("no finite ratios for n = {n}"))),
        Family::DualIcosahedral => Ok(vec![1, 2, 3]),
        Family::DualDodecahedral => Ok(vec![2, 4, 5, 6, 7, 8, 9, 10]),
        Family::Custom => Err(Error::UnsupportedFamily("custom".into())),
    }
}

/// Finite-difference sign check of one ratio function over an interior grid.
pub fn monotonicity_check(
    family: Family,
    j: usize,
    grid_resolution: usize,
) -> Result<MonotonicityReport> {
    if grid_resolution < 3 {
        return Err(invalid("grid resolution must be >= 3"));
    }
    if !valid_ratios(family)?.contains(&j) {
        return Err(invalid(format!("ratio index {j} not defined for {family}")));
    }
    let h = FD_STEP;
    let mut points = 0;
    let mut asserted = 0;
    let mut violations = Vec::new();
    let mut record = |point: DomainPoint, variable: &'static str, d: f64, expected: Sign| {
        if d.abs() > FD_THRESHOLD {
            asserted += 1;
        }
        if !expected.holds(d) {
            violations.push(SignViolation {
                point,
                variable,
                derivative: d,
                expected,
            });
        }
    };

    if let Family::DualPolygonal(n) = family {
        let end = PI / (2 * n) as f64;
        let den = polygonal_rank_index(n, j);
        let f = |a: f64| {
            let c0 = a.cos().abs();
            let cm = (PI * den as f64 / n as f64 - a).cos().abs();
            c0 / cm
        };
        let expected = if j.is_multiple_of(2) {
            Sign::Positive
        } else {
            Sign::Negative
        };
        for i in 1..=grid_resolution {
            let a = end * i as f64 / (grid_resolution + 1) as f64;
            points += 1;
            record(
                DomainPoint::Alpha(a),
                "alpha",
                (f(a + h) - f(a - h)) / (2.0 * h),
                expected,
            );
        }
    } else {
        let (g, tri) = match family {
            Family::DualIcosahedral => {
                (GeneratorMatrix::dual_icosahedral(), icosahedral_triangle())
            }
            _ => (
                GeneratorMatrix::dual_dodecahedral(),
                dodecahedral_triangle(),
            ),
        };
        let (du, dv): (Option<Sign>, Option<Sign>) = match (family, j) {
            (Family::DualIcosahedral, 1) => (Some(Sign::Positive), Some(Sign::Negative)),
            (Family::DualIcosahedral, 2) => (Some(Sign::Positive), Some(Sign::Positive)),
            (Family::DualIcosahedral, _) => (Some(Sign::Negative), Some(Sign::Negative)),
            (_, 2) | (_, 6) | (_, 9) => (Some(Sign::Positive), Some(Sign::Positive)),
            (_, 4) => (None, Some(Sign::Negative)),
            (_, 5) => (Some(Sign::Positive), Some(Sign::Negative)),
            (_, 7) | (_, 8) => (Some(Sign::Negative), Some(Sign::Negative)),
            _ => (Some(Sign::Negative), Some(Sign::Positive)),
        };
        let den_axis = match (family, j) {
            (Family::DualIcosahedral, 1) => 3,
            (Family::DualIcosahedral, 2) => 5,
            (Family::DualIcosahedral, _) => 4,
            (_, j) => j,
        };
        let g1 = g.column(0).to_vec();
        let gd = g.column(den_axis - 1).to_vec();
        let f = |u: f64, v: f64| {
            let x = tri.point(u, v);
            dot(&x, &g1) / dot(&x, &gd).abs()
        };
        let in_region = |u: f64, v: f64| {
            family != Family::DualDodecahedral
                || j != 8
                || v - (2.0 * SQRT_5 - 4.0) * (1.0 - u) > 2.0 * h
        };
        let r = grid_resolution;
        for i in 1..r {
            for k in 1..r - i {
                let (u, v) = (i as f64 / r as f64, k as f64 / r as f64);
                if !in_region(u, v) {
                    continue;
                }
                points += 1;
                let p = DomainPoint::Barycentric { u, v };
                if let Some(s) = du {
                    record(p, "u", (f(u + h, v) - f(u - h, v)) / (2.0 * h), s);
                }
                if let Some(s) = dv {
                    record(p, "v", (f(u, v + h) - f(u, v - h)) / (2.0 * h), s);
                }
            }
        }
    }
    Ok(MonotonicityReport {
        family: family.name().to_string(),
        ratio: j,
        points,
        asserted,
        violations,
    })
}

fn golden_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    let r = (SQRT_5 - 1.0) / 2.0;
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[derive(Clone)]
struct Sample {
    ratio: f64,
    index: usize,
}

fn better(a: Sample, b: Sample) -> Sample {
    // NaN loses to everything; ties go to the lower grid index.
    match (a.ratio.is_nan(), b.ratio.is_nan()) {
        (true, _) => b,
        (_, true) => a,
        _ if a.ratio > b.ratio || (a.ratio == b.ratio && a.index <= b.index) => a,
        _ => b,
    }
}

/// Grid search plus one local refinement over a fundamental domain.
///
/// Returns a lower bound on `h_m` with its witness direction. The result is
/// infinite only if some sample has `c_(m)` exactly zero.
pub fn domain_search(
    g: &GeneratorMatrix,
    m: usize,
    domain: &FundamentalDomain,
    resolution: usize,
) -> Result<ExtendedHeight> {
    domain_search_with(g, m, domain, resolution, Exec::default())
}

pub fn domain_search_with(
    g: &GeneratorMatrix,
    m: usize,
    domain: &FundamentalDomain,
    resolution: usize,
    exec: Exec,
) -> Result<ExtendedHeight> {
    if resolution < 2 {
        return Err(invalid("resolution must be >= 2"));
    }
    if m == 0 || m >= g.n() {
        return Err(invalid(format!("m = {m} outside [1, {}]", g.n() - 1)));
    }
    if domain.k() != g.k() {
        return Err(invalid(format!(
            "domain produces {}-vectors, matrix has k = {}",
            domain.k(),
            g.k()
        )));
    }
    let ratio = |x: &[f64]| g.encode(x).expect("dimension checked").height(m);
    let identity = Sample {
        ratio: f64::NAN,
        index: usize::MAX,
    };

    match *domain {
        FundamentalDomain::Arc { n } => {
            let end = PI / (2 * n) as f64;
            let step = end / (resolution - 1) as f64;
            let dir = |a: f64| [a.cos(), a.sin()];
            let at = |i: usize| {
                if i == resolution - 1 {
                    end
                } else {
                    step * i as f64
                }
            };
            let best = map_reduce(
                exec,
                resolution,
                identity,
                |i| Sample {
                    ratio: ratio(&dir(at(i))),
                    index: i,
                },
                better,
            );
            let a0 = at(best.index);
            if best.ratio.is_infinite() {
                return Ok(ExtendedHeight::infinite(Some(dir(a0).to_vec())));
            }
            let lo = (a0 - step).max(0.0);
            let hi = (a0 + step).min(end);
            let (a1, r1) = golden_max(|a| ratio(&dir(a)), lo, hi, REFINE_ITERATIONS);
            let (a, r) = if r1 > best.ratio {
                (a1, r1)
            } else {
                (a0, best.ratio)
            };
            Ok(ExtendedHeight::finite(r, Some(dir(a).to_vec())))
        }
        FundamentalDomain::Triangle(tri) => {
            let last = resolution - 1;
            let step = 1.0 / last as f64;
            let uv = |idx: usize| (idx / resolution, idx % resolution);
            let best = map_reduce(
                exec,
                resolution * resolution,
                identity,
                |idx| {
                    let (i, j) = uv(idx);
                    if i + j > last {
                        return Sample {
                            ratio: f64::NAN,
                            index: idx,
                        };
                    }
                    Sample {
                        ratio: ratio(&tri.point(i as f64 * step, j as f64 * step)),
                        index: idx,
                    }
                },
                better,
            );
            let (i, j) = uv(best.index);
            let (mut u, mut v) = (i as f64 * step, j as f64 * step);
            if best.ratio.is_infinite() {
                return Ok(ExtendedHeight::infinite(Some(tri.point(u, v))));
            }
            let mut r = best.ratio;
            let f = |u: f64, v: f64| ratio(&tri.point(u, v));
            for _ in 0..8 {
                let (lo, hi) = ((u - step).max(0.0), (u + step).min(1.0 - v));
                let (nu, nr) = golden_max(|s| f(s, v), lo, hi, REFINE_ITERATIONS);
                if nr > r {
                    u = nu;
                    r = nr;
                }
                let (lo, hi) = ((v - step).max(0.0), (v + step).min(1.0 - u));
                let (nv, nr) = golden_max(|s| f(u, s), lo, hi, REFINE_ITERATIONS);
                if nr > r {
                    v = nv;
                    r = nr;
                }
            }
            Ok(ExtendedHeight::finite(r, Some(tri.point(u, v))))
        }
    }
}

/// Largest ratio over `samples` Gaussian-random directions in `ℝ^k`.
pub fn sphere_search(
    g: &GeneratorMatrix,
    m: usize,
    samples: usize,
    seed: u64,
) -> Result<ExtendedHeight> {
    if m == 0 || m >= g.n() {
        return Err(invalid(format!("m = {m} outside [1, {}]", g.n() - 1)));
    }
    if samples == 0 {
        return Err(invalid("sphere search needs at least one sample"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for _ in 0..samples {
        let mut x: Vec<f64> = (0..g.k())
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let n = linalg::norm(&x);
        if n == 0.0 {
            continue;
        }
        x.iter_mut().for_each(|xi| *xi /= n);
        let r = g.encode(&x)?.height(m);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, x));
        }
    }
    let (r, x) = best.ok_or_else(|| invalid("all samples degenerate"))?;
    Ok(if r.is_infinite() {
        ExtendedHeight::infinite(Some(x))
    } else {
        ExtendedHeight::finite(r, Some(x))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_vertices() {
        let t = icosahedral_triangle();
        let want = [0.5, (1.0 + PHI) / 2.0, PHI / 2.0];
        for (got, want) in t.vertices[1].iter().zip(want) {
            assert!((got - want).abs() < 1e-15);
        }
        let d = dodecahedral_triangle();
        let want = [0.5, (1.0 + PHI) / 2.0, (1.0 + 1.0 / PHI) / 2.0];
        for (got, want) in d.vertices[1].iter().zip(want) {
            assert!((got - want).abs() < 1e-15);
        }
        assert_eq!(
            polygonal_domain(3).unwrap(),
            FundamentalDomain::Arc { n: 3 }
        );
        assert!(polygonal_domain(1).is_err());
        assert!(Triangle::new([0.0; 3], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn polygonal_order_examples() {
        let r = polygonal_order_indices(5, 0.1).unwrap();
        assert_eq!(r.perm, vec![0, 1, 4, 2, 3]);
        assert!(r.ok());

        // |cos π/4| = |cos 3π/4|: a tie, never a violation.
        let r = polygonal_order_indices(4, 0.0).unwrap();
        assert!(r.ok(), "{:?}", r.violations);

        for n in 2..10 {
            let r = polygonal_order_indices(n, PI / (2 * n) as f64).unwrap();
            assert!(r.ok(), "n={n}: {:?}", r.violations);
        }
        assert!(polygonal_order_indices(5, -0.01).is_err());
        assert!(polygonal_order_indices(5, 0.4).is_err());
    }

    #[test]
    fn icosahedral_chain_examples() {
        let r = icosahedral_chain_check(1.0, 0.0).unwrap();
        assert!(r.ok());
        assert_eq!(r.perm[0], 1);
        let x = icosahedral_triangle().point(1.0, 0.0);
        let b1 = dot(&x, GeneratorMatrix::dual_icosahedral().column(0));
        assert!((b1 - (2.0 + PHI)).abs() < 1e-14);

        let r = icosahedral_chain_check(0.0, 0.0).unwrap();
        assert!(r.ok());
        let beta = betas(
            &GeneratorMatrix::dual_icosahedral(),
            &icosahedral_triangle(),
            0.0,
            0.0,
        );
        assert!(tied(beta[0], beta[2]) && tied(beta[2], beta[4]));

        assert!(icosahedral_chain_check(0.2, 0.3).unwrap().ok());
        assert!(icosahedral_chain_check(0.8, 0.3).is_err());
        assert!(icosahedral_chain_check(-0.1, 0.3).is_err());
    }

    #[test]
    fn dodecahedral_rank_examples() {
        let r = dodecahedral_rank_check(1.0, 0.0).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert_eq!(r.perm[0], 1);
        let beta = betas(
            &GeneratorMatrix::dual_dodecahedral(),
            &dodecahedral_triangle(),
            1.0,
            0.0,
        );
        assert!((beta[0] - 3.0).abs() < 1e-14);

        let r = dodecahedral_rank_check(0.0, 1.0).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        let beta = betas(
            &GeneratorMatrix::dual_dodecahedral(),
            &dodecahedral_triangle(),
            0.0,
            1.0,
        );
        assert!(tied(beta[0], beta[4]));

        assert!(dodecahedral_rank_check(0.25, 0.25).unwrap().ok());
        assert!(dodecahedral_rank_check(0.7, 0.7).is_err());
    }

    #[test]
    fn rank_check_flags_a_wrong_order() {
        // Outside the triangle the supports no longer hold; the checker must notice.
        let g = GeneratorMatrix::dual_dodecahedral();
        let x = g.column(4).to_vec();
        let beta: Vec<f64> = g.columns().iter().map(|c| dot(&x, c).abs()).collect();
        assert!(!chain_violations(&beta, &DODECAHEDRAL_INEQUALITIES).is_empty());
    }

    #[test]
    fn candidates() {
        let c = dodecahedral_candidates();
        assert!(c.contains(&(0.0, 0.0)));
        assert!((c[3].1 - 0.700_745_812_045_397_2).abs() < 1e-12);
        assert!((c[4].0 - 0.539_344_662_916_631_6).abs() < 1e-12);
        for (u, v) in c {
            assert!(Triangle::check(u, v).is_ok());
        }
    }

    #[test]
    fn monotonicity_examples() {
        let r = monotonicity_check(Family::DualDodecahedral, 7, 50).unwrap();
        assert!(r.ok() && r.asserted > 0);
        let r = monotonicity_check(Family::DualDodecahedral, 5, 50).unwrap();
        assert!(r.ok() && r.asserted > 0);
        let r = monotonicity_check(Family::DualPolygonal(6), 2, 200).unwrap();
        assert!(r.ok() && r.asserted == 200);
        assert!(monotonicity_check(Family::DualDodecahedral, 3, 50).is_err());
        assert!(monotonicity_check(Family::DualIcosahedral, 4, 50).is_err());
        assert!(monotonicity_check(Family::Custom, 1, 50).is_err());
    }

    #[test]
    fn wrong_sign_is_reported() {
        assert!(!Sign::Positive.holds(-1e-3));
        assert!(Sign::Positive.holds(-1e-9));
        assert!(Sign::Negative.holds(-1.0));
    }

    #[test]
    fn golden_section_finds_peak() {
        let (x, fx) = golden_max(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 64);
        assert!((x - 0.3).abs() < 1e-8 && fx <= 0.0);
    }

    #[test]
    fn search_examples() {
        let g = GeneratorMatrix::dual_polygonal(8).unwrap();
        let h = domain_search(&g, 1, &polygonal_domain(8).unwrap(), 10_000).unwrap();
        let want = crate::closed::polygonal_height(8, 1).unwrap().value.value();
        assert!((h.value.value() - want).abs() < 1e-6);

        let ico = GeneratorMatrix::dual_icosahedral();
        let h = domain_search(&ico, 3, &icosahedral_domain(), 500).unwrap();
        assert!((h.value.value() - (2.0 + SQRT_5)).abs() < 1e-4);

        let h = domain_search(&ico, 2, &icosahedral_domain(), 2).unwrap();
        assert!(h.value.value() <= SQRT_5 + 1e-9);

        assert!(domain_search(&ico, 2, &polygonal_domain(3).unwrap(), 10).is_err());
        assert!(domain_search(&ico, 2, &icosahedral_domain(), 1).is_err());
    }

    #[test]
    fn sequential_and_parallel_search_agree() {
        let dod = GeneratorMatrix::dual_dodecahedral();
        let dom = dodecahedral_domain();
        let a = domain_search_with(&dod, 5, &dom, 120, Exec::Sequential).unwrap();
        let b = domain_search_with(&dod, 5, &dom, 120, Exec::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
