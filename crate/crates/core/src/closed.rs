//! Closed-form m-heights and attaining directions for the built-in families.

use std::f64::consts::PI;

use crate::codes::{Family, GeneratorMatrix};
use crate::error::{invalid, Error, Result};
use crate::height::{ExtendedHeight, MHeightProfile};
use crate::linalg;
use crate::search::{self, Triangle};
use crate::{PHI, SQRT_5};

/// `h_m` of the dual polygonal code of length `n`.
///
/// For `m ≤ n − 2` the maximum over the arc `[0, π/2n]` sits at `α = π/2n`
/// when `m` is even and at `α = 0` when `m` is odd; `h_{n−1}` is infinite
/// since a direction orthogonal to one column zeroes a coordinate.
pub fn polygonal_height(n: usize, m: usize) -> Result<ExtendedHeight> {
    if n < 2 {
        return Err(invalid(format!("n = {n} must be >= 2")));
    }
    if m == 0 || m >= n {
        return Err(invalid(format!("m = {m} outside [1, {}]", n - 1)));
    }
    if m == n - 1 {
        // Orthogonal to g_0.
        return Ok(ExtendedHeight::infinite(Some(vec![0.0, 1.0])));
    }
    let step = PI / (2 * n) as f64;
    let den = ((m + 1) as f64 * step).cos();
    let (value, alpha) = if m.is_multiple_of(2) {
        (step.cos() / den, step)
    } else {
        (1.0 / den, 0.0)
    };
    Ok(ExtendedHeight::finite(
        value,
        Some(vec![alpha.cos(), alpha.sin()]),
    ))
}

/// `h_m` of the dual icosahedral code, `1 ≤ m ≤ 5`.
pub fn icosahedral_height(m: usize) -> Result<ExtendedHeight> {
    let g = GeneratorMatrix::dual_icosahedral();
    match m {
        1 | 2 => Ok(ExtendedHeight::finite(SQRT_5, Some(g.column(0).to_vec()))),
        3 => {
            let v3 = search::icosahedral_triangle().point(0.0, 0.0);
            Ok(ExtendedHeight::finite(2.0 + SQRT_5, Some(v3)))
        }
        4 | 5 => Ok(ExtendedHeight::infinite(Some(two_zero_direction(&g)))),
        _ => Err(invalid(format!("m = {m} outside [1, 5]"))),
    }
}

/// `h_m` of the dual dodecahedral code, `1 ≤ m ≤ 9`.
///
/// `m = 1, 2` are attained at `g_1` and `x_B`. For `3 ≤ m ≤ 7` the witness is
/// the best of the six candidate points of the fundamental triangle, scored
/// by the true ratio `c_(0)/c_(m)` there. `m = 8, 9` are infinite: `k = 3`
/// lets a nonzero codeword vanish on two coordinates.
pub fn dodecahedral_height(m: usize) -> Result<ExtendedHeight> {
    let g = GeneratorMatrix::dual_dodecahedral();
    let tri = search::dodecahedral_triangle();
    let value = match m {
        1 => {
            return Ok(ExtendedHeight::finite(
                3.0 / SQRT_5,
                Some(g.column(0).to_vec()),
            ))
        }
        2 => return Ok(ExtendedHeight::finite(PHI, Some(tri.point(0.0, 1.0)))),
        3 => 4.0 - SQRT_5,
        4 => 3.0,
        5 | 6 => 2.0 + SQRT_5,
        7 => 5.0 + 2.0 * SQRT_5,
        8 | 9 => return Ok(ExtendedHeight::infinite(Some(two_zero_direction(&g)))),
        _ => return Err(invalid(format!("m = {m} outside [1, 9]"))),
    };
    let (_, witness) = best_candidate(&g, &tri, m);
    Ok(ExtendedHeight::finite(value, Some(witness)))
}

/// Largest `c_(0)/c_(m)` over the candidate set, first candidate on ties.
pub fn best_candidate(g: &GeneratorMatrix, tri: &Triangle, m: usize) -> (f64, Vec<f64>) {
    let mut best: Option<(f64, Vec<f64>)> = None;
    for (u, v) in search::dodecahedral_candidates() {
        let x = tri.point(u, v);
        let r = g.encode(&x).expect("k = 3").height(m);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, x));
        }
    }
    best.expect("six candidates")
}

/// `g_1 × g_2`: a nonzero direction whose codeword vanishes on the first two coordinates.
fn two_zero_direction(g: &GeneratorMatrix) -> Vec<f64> {
    let c = linalg::cross(g.column(0), g.column(1));
    let n = linalg::norm(&c);
    c.iter().map(|x| x / n).collect()
}

/// Assembles `h_1 … h_{n−1}` for a built-in family.
pub fn closed_profile(family: Family) -> Result<MHeightProfile> {
    let heights = match family {
        Family::DualPolygonal(n) => {
            if n < 2 {
                return Err(invalid(format!("n = {n} must be >= 2")));
            }
            (1..n)
                .map(|m| polygonal_height(n, m))
                .collect::<Result<Vec<_>>>()?
        }
        Family::DualIcosahedral => (1..=5)
            .map(icosahedral_height)
            .collect::<Result<Vec<_>>>()?,
        Family::DualDodecahedral => (1..=9)
            .map(dodecahedral_height)
            .collect::<Result<Vec<_>>>()?,
        Family::Custom => {
            return Err(Error::UnsupportedFamily(
                "no closed form for custom matrices; use the LP engine".into(),
            ))
        }
    };
    Ok(MHeightProfile::new(family, heights))
}

/// Closed-form `h_m` for a built-in family.
pub fn closed_height(family: Family, m: usize) -> Result<ExtendedHeight> {
    match family {
        Family::DualPolygonal(n) => polygonal_height(n, m),
        Family::DualIcosahedral => icosahedral_height(m),
        Family::DualDodecahedral => dodecahedral_height(m),
        Family::Custom => Err(Error::UnsupportedFamily(
            "no closed form for custom matrices; use the LP engine".into(),
        )),
    }
}
