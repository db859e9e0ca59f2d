//! Exact m-heights for arbitrary generator matrices via a finite family of
//! small linear programs.
//!
//! For a configuration `(X, a, b, s)` with `|X| = m`, `a ∈ X`, `b ∉ X` and
//! signs `s_j` on `X`, the program is
//!
//! ```text
//! maximize   s_a ⟨u, g_a⟩
//! subject to ⟨u, g_b⟩ = 1
//!            s_j ⟨u, g_j⟩ ≥ 1        j ∈ X
//!            −1 ≤ ⟨u, g_j⟩ ≤ 1       j ∉ X ∪ {b}
//! ```
//!
//! Any feasible `u` has `c_(m) = 1`, so the objective is a lower bound on the
//! m-height; conversely every codeword normalizes into one of these programs.
//! `h_m` is the maximum over all configurations, and `+∞` as soon as one
//! program is unbounded. The sign of `c_b` is fixed to `+1` by the symmetry
//! `c ↦ −c`.
//!
//! The solver enumerates basic solutions instead of pivoting: with `k ≤ 8`
//! and a few dozen rows the candidate count stays small, and degeneracy needs
//! no special handling.

use itertools::Itertools;
use serde::Serialize;

use crate::codes::GeneratorMatrix;
use crate::error::{invalid, Error, Result};
use crate::height::{ExtendedHeight, MHeightProfile};
use crate::linalg::{self, dot};
use crate::par::{map_reduce, Exec};

/// Largest variable count accepted by [`solve_lp`].
pub const MAX_DIM: usize = 8;
/// Largest constraint count accepted by [`solve_lp`].
pub const MAX_CONSTRAINTS: usize = 10_000;
/// Feasibility slack after each row is scaled to unit norm.
pub const FEAS_TOL: f64 = 1e-9;

const PIVOT_TOL: f64 = 1e-12;

/// `maximize ⟨objective, u⟩` subject to `⟨a, u⟩ = r` (eq) and `⟨a, u⟩ ≥ r` (ineq).
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    pub dim: usize,
    pub objective: Vec<f64>,
    pub eq_constraints: Vec<(Vec<f64>, f64)>,
    pub ineq_constraints: Vec<(Vec<f64>, f64)>,
}

impl LpProblem {
    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(invalid("LP dimension must be >= 1"));
        }
        if self.dim > MAX_DIM {
            return Err(Error::Capacity(format!(
                "LP dimension {} exceeds {MAX_DIM}",
                self.dim
            )));
        }
        let rows = self.eq_constraints.len() + self.ineq_constraints.len();
        if rows > MAX_CONSTRAINTS {
            return Err(Error::Capacity(format!(
                "{rows} constraints exceed {MAX_CONSTRAINTS}"
            )));
        }
        if self.objective.len() != self.dim {
            return Err(invalid("objective length differs from dim"));
        }
        let all = self.eq_constraints.iter().chain(&self.ineq_constraints);
        for (a, r) in all {
            if a.len() != self.dim {
                return Err(invalid("constraint length differs from dim"));
            }
            if !r.is_finite() || a.iter().any(|x| !x.is_finite()) {
                return Err(invalid("constraint coefficients must be finite"));
            }
        }
        if self.objective.iter().any(|x| !x.is_finite()) {
            return Err(invalid("objective coefficients must be finite"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpResult {
    Optimal {
        value: f64,
        point: Vec<f64>,
    },
    /// `ray` is a unit recession direction along which the objective grows.
    Unbounded {
        ray: Vec<f64>,
    },
    Infeasible,
}

/// Solves a small dense LP exactly by basic-solution enumeration.
///
/// Deterministic: identical input gives identical output, including which of
/// several tied optima is reported.
pub fn solve_lp(p: &LpProblem) -> Result<LpResult> {
    p.validate()?;
    let sk = Skeleton::enumerate(p.dim, &p.eq_constraints, &p.ineq_constraints);
    Ok(sk.maximize(&p.objective))
}

/// Vertices, extreme rays and lineality of a polyhedron, in original coordinates.
///
/// An empty vertex list means the polyhedron is empty. When lineality is
/// present the vertices are those of the section orthogonal to it.
#[derive(Debug, Clone, Default)]
pub(crate) struct Skeleton {
    vertices: Vec<Vec<f64>>,
    rays: Vec<Vec<f64>>,
    lineality: Vec<Vec<f64>>,
}

impl Skeleton {
    pub(crate) fn enumerate(dim: usize, eq: &[(Vec<f64>, f64)], ineq: &[(Vec<f64>, f64)]) -> Self {
        let empty = Skeleton::default();

        let mut eq_rows = Vec::with_capacity(eq.len());
        for (a, r) in eq {
            match normalized(a, *r) {
                Some(row) => eq_rows.push(row),
                None if r.abs() <= FEAS_TOL => {}
                None => return empty,
            }
        }
        let mut in_rows = Vec::with_capacity(ineq.len());
        for (a, r) in ineq {
            match normalized(a, *r) {
                Some(row) => in_rows.push(row),
                None if *r <= FEAS_TOL => {}
                None => return empty,
            }
        }

        // Affine hull of the equalities: u = p + N y.
        let (p, null) = match affine_solution(dim, &eq_rows) {
            Some(v) => v,
            None => return empty,
        };
        let reduced: Vec<Vec<f64>> = in_rows
            .iter()
            .map(|(a, _)| null.iter().map(|nv| dot(a, nv)).collect())
            .collect();

        // Split y-space into the row space of the reduced inequalities (Q) and
        // its complement (lineality).
        let mut q = reduced.clone();
        linalg::gram_schmidt(&mut q);
        let lineality: Vec<Vec<f64>> = linalg::null_space(&reduced, null.len(), PIVOT_TOL)
            .iter()
            .map(|l| combine(&null, l, dim))
            .collect();
        let basis: Vec<Vec<f64>> = q.iter().map(|qv| combine(&null, qv, dim)).collect();
        let d = basis.len();

        let coeffs: Vec<[f64; MAX_DIM]> = in_rows
            .iter()
            .map(|(a, _)| {
                let mut c = [0.0; MAX_DIM];
                for (ci, b) in c.iter_mut().zip(&basis) {
                    *ci = dot(a, b);
                }
                c
            })
            .collect();
        let rhs: Vec<f64> = in_rows.iter().map(|(a, r)| r - dot(a, &p)).collect();

        let feasible = |z: &[f64]| {
            coeffs
                .iter()
                .zip(&rhs)
                .all(|(c, &r)| dot(&c[..d], z) >= r - FEAS_TOL)
        };
        let lift = |z: &[f64]| {
            let mut u = p.clone();
            for (zi, b) in z.iter().zip(&basis) {
                for (ui, bi) in u.iter_mut().zip(b) {
                    *ui += zi * bi;
                }
            }
            u
        };

        let mut vertices = Vec::new();
        if d == 0 {
            if feasible(&[]) {
                vertices.push(p.clone());
            }
        } else {
            for_each_subset(coeffs.len(), d, |subset| {
                let mut a = [[0.0; MAX_DIM]; MAX_DIM];
                let mut b = [0.0; MAX_DIM];
                for (i, &row) in subset.iter().enumerate() {
                    a[i][..d].copy_from_slice(&coeffs[row][..d]);
                    b[i] = rhs[row];
                }
                if linalg::solve(&mut a[..d], &mut b[..d], PIVOT_TOL) && feasible(&b[..d]) {
                    vertices.push(lift(&b[..d]));
                }
            });
        }
        if vertices.is_empty() {
            return empty;
        }

        let recedes = |dir: &[f64]| coeffs.iter().all(|c| dot(&c[..d], dir) >= -FEAS_TOL);
        let lift_dir = |z: &[f64]| {
            let mut u = vec![0.0; dim];
            for (zi, b) in z.iter().zip(&basis) {
                for (ui, bi) in u.iter_mut().zip(b) {
                    *ui += zi * bi;
                }
            }
            u
        };
        let mut rays = Vec::new();
        if d >= 1 {
            for_each_subset(coeffs.len(), d - 1, |subset| {
                let rows: Vec<Vec<f64>> = subset.iter().map(|&i| coeffs[i][..d].to_vec()).collect();
                let ns = linalg::null_space(&rows, d, PIVOT_TOL);
                if ns.len() != 1 {
                    return;
                }
                let dir = &ns[0];
                let neg: Vec<f64> = dir.iter().map(|x| -x).collect();
                for cand in [dir.as_slice(), neg.as_slice()] {
                    if recedes(cand) {
                        rays.push(lift_dir(cand));
                    }
                }
            });
        }

        Skeleton {
            vertices,
            rays,
            lineality,
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub(crate) fn maximize(&self, c: &[f64]) -> LpResult {
        if self.vertices.is_empty() {
            return LpResult::Infeasible;
        }
        let scale = linalg::norm(c);
        for l in &self.lineality {
            let s = dot(c, l);
            if s.abs() > FEAS_TOL * scale {
                let ray = l.iter().map(|x| x * s.signum()).collect();
                return LpResult::Unbounded { ray };
            }
        }
        if let Some(r) = self.rays.iter().find(|r| dot(c, r) > FEAS_TOL * scale) {
            return LpResult::Unbounded { ray: r.clone() };
        }
        let mut best: Option<(f64, &Vec<f64>)> = None;
        for v in &self.vertices {
            let val = dot(c, v);
            if best.is_none_or(|(b, _)| val > b) {
                best = Some((val, v));
            }
        }
        let (value, point) = best.expect("nonempty vertex list");
        LpResult::Optimal {
            value,
            point: point.clone(),
        }
    }
}

fn normalized(a: &[f64], r: f64) -> Option<(Vec<f64>, f64)> {
    let n = linalg::norm(a);
    (n > 0.0).then(|| (a.iter().map(|x| x / n).collect(), r / n))
}

/// Minimum-norm point and orthonormal null-space basis of the equality system;
/// `None` when inconsistent.
fn affine_solution(dim: usize, eq: &[(Vec<f64>, f64)]) -> Option<(Vec<f64>, Vec<Vec<f64>>)> {
    if eq.is_empty() {
        let basis = (0..dim)
            .map(|i| {
                let mut e = vec![0.0; dim];
                e[i] = 1.0;
                e
            })
            .collect();
        return Some((vec![0.0; dim], basis));
    }
    let mut aug: Vec<Vec<f64>> = eq
        .iter()
        .map(|(a, r)| {
            let mut row = a.clone();
            row.push(*r);
            row
        })
        .collect();
    let pivots = linalg::rref(&mut aug, dim, PIVOT_TOL);
    for row in aug.iter().skip(pivots.len()) {
        if row[dim].abs() > FEAS_TOL {
            return None;
        }
    }
    let mut p = vec![0.0; dim];
    for (r, &c) in pivots.iter().enumerate() {
        p[c] = aug[r][dim];
    }
    let coeffs: Vec<Vec<f64>> = eq.iter().map(|(a, _)| a.clone()).collect();
    let null = linalg::null_space(&coeffs, dim, PIVOT_TOL);
    for nv in &null {
        let s = dot(&p, nv);
        for (pi, ni) in p.iter_mut().zip(nv) {
            *pi -= s * ni;
        }
    }
    Some((p, null))
}

fn combine(basis: &[Vec<f64>], coeffs: &[f64], dim: usize) -> Vec<f64> {
    let mut out = vec![0.0; dim];
    for (c, b) in coeffs.iter().zip(basis) {
        for (o, bi) in out.iter_mut().zip(b) {
            *o += c * bi;
        }
    }
    out
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order, without allocating.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx = [0usize; MAX_DIM];
    for (i, x) in idx.iter_mut().enumerate().take(k) {
        *x = i;
    }
    loop {
        f(&idx[..k]);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

type Row = [f64; MAX_DIM];

/// The equality `⟨u, g_b⟩ = 1` eliminated once per `b`: `u = p + N y` with
/// orthonormal `N`, and every column expressed in `y` coordinates.
struct Frame {
    p: Vec<f64>,
    null: Vec<Vec<f64>>,
    /// Per column `j`: `Nᵀĝ_j`, `⟨ĝ_j, p⟩` and `1/|g_j|`; `None` for a zero column.
    cols: Vec<Option<(Row, f64, f64)>>,
}

impl Frame {
    fn new(g: &GeneratorMatrix, b: usize) -> Option<Frame> {
        let (row, r) = normalized(g.column(b), 1.0)?;
        let (p, null) = affine_solution(g.k(), &[(row, r)])?;
        let cols = g
            .columns()
            .iter()
            .map(|c| {
                let len = linalg::norm(c);
                (len > 0.0).then(|| {
                    let mut red = [0.0; MAX_DIM];
                    for (ri, nv) in red.iter_mut().zip(&null) {
                        *ri = dot(c, nv) / len;
                    }
                    (red, dot(c, &p) / len, 1.0 / len)
                })
            })
            .collect();
        Some(Frame { p, null, cols })
    }

    /// Fills `out` with the inequalities of `(X, signs, b)` in `y`
    /// coordinates; `false` if a zero column sits in `X`.
    fn constrain(
        &self,
        x: &[usize],
        sign: impl Fn(usize) -> f64,
        in_x: &[bool],
        b: usize,
        out: &mut Vec<(Row, f64)>,
    ) -> bool {
        out.clear();
        for (pos, &j) in x.iter().enumerate() {
            let s = sign(pos);
            let Some((red, off, inv)) = &self.cols[j] else {
                return false;
            };
            out.push((red.map(|v| s * v), inv - s * off));
        }
        for (j, col) in self.cols.iter().enumerate() {
            if in_x[j] || j == b {
                continue;
            }
            if let Some((red, off, inv)) = col {
                out.push((red.map(|v| -v), off - inv));
                out.push((*red, -inv - off));
            }
        }
        true
    }

    fn lift(&self, y: &[f64]) -> Vec<f64> {
        let mut u = self.p.clone();
        for (yi, nv) in y.iter().zip(&self.null) {
            for (ui, ni) in u.iter_mut().zip(nv) {
                *ui += yi * ni;
            }
        }
        u
    }
}

/// `{y ∈ ℝ^d : ⟨a_i, y⟩ ≥ r_i}` with rows spanning `ℝ^d`, hence no lineality.
struct Pointed {
    d: usize,
    vertices: Vec<Row>,
    rays: Vec<Row>,
}

impl Pointed {
    /// `None` when the rows do not span `ℝ^d`.
    fn enumerate(d: usize, rows: &[(Row, f64)]) -> Option<Pointed> {
        if !spans(d, rows) {
            return None;
        }
        let feasible = |z: &[f64]| rows.iter().all(|(a, r)| dot(&a[..d], z) >= r - FEAS_TOL);
        let mut vertices = Vec::new();
        if d == 0 {
            if feasible(&[]) {
                vertices.push([0.0; MAX_DIM]);
            }
        } else {
            for_each_subset(rows.len(), d, |subset| {
                let mut a = [[0.0; MAX_DIM]; MAX_DIM];
                let mut b = [0.0; MAX_DIM];
                for (i, &row) in subset.iter().enumerate() {
                    a[i][..d].copy_from_slice(&rows[row].0[..d]);
                    b[i] = rows[row].1;
                }
                if linalg::solve(&mut a[..d], &mut b[..d], PIVOT_TOL) && feasible(&b[..d]) {
                    vertices.push(b);
                }
            });
        }
        let mut rays = Vec::new();
        if !vertices.is_empty() && d >= 1 {
            let recedes = |z: &Row| rows.iter().all(|(a, _)| dot(&a[..d], &z[..d]) >= -FEAS_TOL);
            for_each_subset(rows.len(), d - 1, |subset| {
                if let Some(dir) = line_direction(d, subset.iter().map(|&i| &rows[i].0)) {
                    for cand in [dir, dir.map(|v| -v)] {
                        if recedes(&cand) {
                            rays.push(cand);
                        }
                    }
                }
            });
        }
        Some(Pointed { d, vertices, rays })
    }
}

fn spans(d: usize, rows: &[(Row, f64)]) -> bool {
    let mut basis = [[0.0; MAX_DIM]; MAX_DIM];
    let mut count = 0;
    for (a, _) in rows {
        if count == d {
            break;
        }
        let mut w = *a;
        for _ in 0..2 {
            for q in &basis[..count] {
                let p = dot(&w[..d], &q[..d]);
                for i in 0..d {
                    w[i] -= p * q[i];
                }
            }
        }
        let len = linalg::norm(&w[..d]);
        if len > PIVOT_TOL {
            for wi in &mut w[..d] {
                *wi /= len;
            }
            basis[count] = w;
            count += 1;
        }
    }
    count == d
}

/// Unit generator of the common null space of `d − 1` rows, if it is a line.
fn line_direction<'a>(d: usize, mut rows: impl Iterator<Item = &'a Row>) -> Option<Row> {
    let mut dir = [0.0; MAX_DIM];
    match d {
        1 => dir[0] = 1.0,
        2 => {
            let a = rows.next()?;
            let len = a[0].hypot(a[1]);
            if len <= PIVOT_TOL {
                return None;
            }
            dir[0] = -a[1] / len;
            dir[1] = a[0] / len;
        }
        _ => {
            let rows: Vec<Vec<f64>> = rows.map(|a| a[..d].to_vec()).collect();
            let ns = linalg::null_space(&rows, d, PIVOT_TOL);
            if ns.len() != 1 {
                return None;
            }
            dir[..d].copy_from_slice(&ns[0]);
        }
    }
    Some(dir)
}

enum Region<'a> {
    Pointed(&'a Frame, Pointed),
    General(Skeleton),
}

impl Region<'_> {
    fn is_empty(&self) -> bool {
        match self {
            Region::Pointed(_, p) => p.vertices.is_empty(),
            Region::General(sk) => sk.is_empty(),
        }
    }

    fn maximize(&self, c: &[f64]) -> LpResult {
        let (frame, poly) = match self {
            Region::General(sk) => return sk.maximize(c),
            Region::Pointed(frame, poly) => (frame, poly),
        };
        let d = poly.d;
        let scale = linalg::norm(c);
        let mut cy = [0.0; MAX_DIM];
        for (ci, nv) in cy.iter_mut().zip(&frame.null) {
            *ci = dot(c, nv);
        }
        if let Some(r) = poly
            .rays
            .iter()
            .find(|r| dot(&cy[..d], &r[..d]) > FEAS_TOL * scale)
        {
            return LpResult::Unbounded {
                ray: combine(&frame.null, &r[..d], frame.p.len()),
            };
        }
        let base = dot(c, &frame.p);
        let mut best: Option<(f64, &Row)> = None;
        for v in &poly.vertices {
            let val = base + dot(&cy[..d], &v[..d]);
            if best.is_none_or(|(b, _)| val > b) {
                best = Some((val, v));
            }
        }
        match best {
            Some((value, v)) => LpResult::Optimal {
                value,
                point: frame.lift(&v[..d]),
            },
            None => LpResult::Infeasible,
        }
    }
}

/// The same region built in `u` coordinates, for rows that leave lineality.
fn general_skeleton(
    g: &GeneratorMatrix,
    x: &[usize],
    sign: impl Fn(usize) -> f64,
    in_x: &[bool],
    b: usize,
) -> Skeleton {
    let cols = g.columns();
    let eq = vec![(cols[b].clone(), 1.0)];
    let mut ineq = Vec::new();
    for (pos, &j) in x.iter().enumerate() {
        let s = sign(pos);
        ineq.push((cols[j].iter().map(|v| s * v).collect(), 1.0));
    }
    for j in (0..g.n()).filter(|&j| !in_x[j] && j != b) {
        ineq.push((cols[j].iter().map(|v| -v).collect(), -1.0));
        ineq.push((cols[j].clone(), -1.0));
    }
    Skeleton::enumerate(g.k(), &eq, &ineq)
}

/// Bookkeeping for one [`exact_mheight_report`] call.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LpStats {
    /// `(X, a, signs)` triples: `C(n,m) · m · 2^m`.
    pub families: u64,
    /// Programs solved, one per `(X, a, signs, b)`: `families · (n − m)`.
    pub lp_solves: u64,
    /// Distinct feasible regions enumerated, one per `(X, signs, b)`; all
    /// `m` choices of `a` share one.
    pub polyhedra: u64,
}

/// An exact m-height with the accounting of how it was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightReport {
    pub height: ExtendedHeight,
    pub stats: LpStats,
}

#[derive(Debug, Clone)]
enum Best {
    None,
    Finite {
        value: f64,
        index: u64,
        point: Vec<f64>,
    },
    Unbounded {
        index: u64,
        ray: Vec<f64>,
    },
}

impl Best {
    /// Unbounded beats finite beats none; ties go to the lower configuration index.
    fn better(self, other: Best) -> Best {
        use Best::*;
        match (&self, &other) {
            (None, _) => other,
            (_, None) => self,
            (Unbounded { index: i, .. }, Unbounded { index: j, .. }) => {
                if i <= j {
                    self
                } else {
                    other
                }
            }
            (Unbounded { .. }, Finite { .. }) => self,
            (Finite { .. }, Unbounded { .. }) => other,
            (
                Finite {
                    value: v, index: i, ..
                },
                Finite {
                    value: w, index: j, ..
                },
            ) => match v.total_cmp(w) {
                std::cmp::Ordering::Greater => self,
                std::cmp::Ordering::Less => other,
                std::cmp::Ordering::Equal => {
                    if i <= j {
                        self
                    } else {
                        other
                    }
                }
            },
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// Number of `(X, a, signs)` triples for length `n` and order `m`.
pub fn family_count(n: usize, m: usize) -> u64 {
    binomial(n, m) * m as u64 * (1u64 << m)
}

/// Exact `h_m` of the code generated by `g`.
pub fn exact_mheight(g: &GeneratorMatrix, m: usize) -> Result<ExtendedHeight> {
    exact_mheight_report(g, m, Exec::default()).map(|r| r.height)
}

/// [`exact_mheight`] with an explicit executor and configuration counts.
pub fn exact_mheight_report(g: &GeneratorMatrix, m: usize, exec: Exec) -> Result<HeightReport> {
    let (k, n) = (g.k(), g.n());
    if m == 0 || m >= n {
        return Err(invalid(format!("m = {m} outside [1, {}]", n - 1)));
    }
    if k > MAX_DIM {
        return Err(Error::Capacity(format!("k = {k} exceeds {MAX_DIM}")));
    }
    let rows = 1 + m + 2 * (n - m - 1);
    if rows > MAX_CONSTRAINTS {
        return Err(Error::Capacity(format!(
            "{rows} constraints exceed {MAX_CONSTRAINTS}"
        )));
    }
    if m >= 63 {
        return Err(Error::Capacity(format!("2^{m} sign patterns")));
    }

    let cols = g.columns();
    let subsets: Vec<Vec<usize>> = (0..n).combinations(m).collect();
    let patterns = 1usize << m;
    let units = subsets.len() * patterns;
    let frames: Vec<Option<Frame>> = (0..n).map(|b| Frame::new(g, b)).collect();

    let best = map_reduce(
        exec,
        units,
        Best::None,
        |unit| {
            let x = &subsets[unit / patterns];
            let mask = unit % patterns;
            let sign = |pos: usize| if mask >> pos & 1 == 1 { -1.0 } else { 1.0 };
            let mut in_x = vec![false; n];
            for &j in x {
                in_x[j] = true;
            }
            let mut best = Best::None;
            let mut reduced: Vec<(Row, f64)> = Vec::with_capacity(rows);
            for b in (0..n).filter(|&b| !in_x[b]) {
                // A zero g_b cannot satisfy ⟨u, g_b⟩ = 1.
                let Some(frame) = &frames[b] else { continue };
                if !frame.constrain(x, sign, &in_x, b, &mut reduced) {
                    continue;
                }
                let region = match Pointed::enumerate(frame.null.len(), &reduced) {
                    Some(p) => Region::Pointed(frame, p),
                    None => Region::General(general_skeleton(g, x, sign, &in_x, b)),
                };
                if region.is_empty() {
                    continue;
                }
                for (pos, &a) in x.iter().enumerate() {
                    let s = sign(pos);
                    let objective: Vec<f64> = cols[a].iter().map(|v| s * v).collect();
                    let index = ((unit * n + b) * m + pos) as u64;
                    let cand = match region.maximize(&objective) {
                        LpResult::Optimal { value, point } => Best::Finite {
                            value,
                            index,
                            point,
                        },
                        LpResult::Unbounded { ray } => Best::Unbounded { index, ray },
                        LpResult::Infeasible => Best::None,
                    };
                    best = best.better(cand);
                }
            }
            best
        },
        Best::better,
    );

    let families = family_count(n, m);
    let stats = LpStats {
        families,
        lp_solves: families * (n - m) as u64,
        polyhedra: units as u64 * (n - m) as u64,
    };
    let height = match best {
        Best::Unbounded { ray, .. } => ExtendedHeight::infinite(Some(ray)),
        Best::Finite { value, point, .. } => ExtendedHeight::finite(value, Some(point)),
        // Only reachable when every column is zero.
        Best::None => return Err(invalid("no nonzero codeword: all generator columns vanish")),
    };
    Ok(HeightReport { height, stats })
}

/// `h_1 … h_{n−1}` via [`exact_mheight`].
pub fn exact_profile(g: &GeneratorMatrix) -> Result<MHeightProfile> {
    exact_profile_with(g, Exec::default())
}

pub fn exact_profile_with(g: &GeneratorMatrix, exec: Exec) -> Result<MHeightProfile> {
    let heights = (1..g.n())
        .map(|m| exact_mheight_report(g, m, exec).map(|r| r.height))
        .collect::<Result<Vec<_>>>()?;
    Ok(MHeightProfile::new(g.family(), heights))
}
