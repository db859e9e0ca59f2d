//! Tiny dense helpers for k ≤ 8. Row-major `Vec<Vec<f64>>` inputs.

#![allow(clippy::needless_range_loop)]

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn cross(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Determinant by Gaussian elimination with partial pivoting.
pub(crate) fn det(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    det
}

/// Reduced row echelon form in place; returns pivot columns.
/// Entries with magnitude ≤ `tol` are treated as zero.
pub(crate) fn rref(a: &mut [Vec<f64>], cols: usize, tol: f64) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let p = (r..rows)
            .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
            .unwrap();
        if a[p][c].abs() <= tol {
            continue;
        }
        a.swap(p, r);
        let inv = 1.0 / a[r][c];
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r {
                let f = a[i][c];
                if f != 0.0 {
                    for j in 0..a[i].len() {
                        a[i][j] -= f * a[r][j];
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Orthonormal basis of the null space of `rows` (each of length `dim`).
pub(crate) fn null_space(rows: &[Vec<f64>], dim: usize, tol: f64) -> Vec<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = rows.to_vec();
    let pivots = rref(&mut a, dim, tol);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<f64>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![0.0; dim];
            v[f] = 1.0;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f];
            }
            v
        })
        .collect();
    gram_schmidt(&mut basis);
    basis
}

pub(crate) fn gram_schmidt(vs: &mut Vec<Vec<f64>>) {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(vs.len());
    for v in vs.drain(..) {
        let mut w = v;
        // Two passes keep the basis orthogonal to working precision.
        for _ in 0..2 {
            for q in &out {
                let p = dot(&w, q);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= p * qi;
                }
            }
        }
        let n = norm(&w);
        if n > 1e-12 {
            w.iter_mut().for_each(|x| *x /= n);
            out.push(w);
        }
    }
    *vs = out;
}

/// Solves the square system `a x = b` in place; `None` if a pivot falls below `tol`.
pub(crate) fn solve<const N: usize>(a: &mut [[f64; N]], b: &mut [f64], tol: f64) -> bool {
    let n = b.len();
    for col in 0..n {
        let mut p = col;
        let mut best = a[col][col].abs();
        for r in col + 1..n {
            let v = a[r][col].abs();
            if v > best {
                best = v;
                p = r;
            }
        }
        if best <= tol {
            return false;
        }
        if p != col {
            a.swap(p, col);
            b.swap(p, col);
        }
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for c in col..n {
                    a[r][c] -= f * a[col][c];
                }
                b[r] -= f * b[col];
            }
        }
    }
    for col in (0..n).rev() {
        let mut s = b[col];
        for c in col + 1..n {
            s -= a[col][c] * b[c];
        }
        b[col] = s / a[col][col];
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_of_known_matrices() {
        assert_eq!(det(&[vec![2.0, 0.0], vec![0.0, 3.0]]), 6.0);
        assert_eq!(det(&[vec![1.0, 2.0], vec![2.0, 4.0]]), 0.0);
        let d = det(&[
            vec![0.0, 1.0, 2.0],
            vec![1.0, 0.0, 3.0],
            vec![4.0, -3.0, 8.0],
        ]);
        assert!((d - (-2.0)).abs() < 1e-12);
    }

    #[test]
    fn null_space_is_orthonormal_and_annihilated() {
        let rows = vec![vec![1.0, 1.0, 1.0]];
        let ns = null_space(&rows, 3, 1e-12);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((norm(v) - 1.0).abs() < 1e-12);
            assert!(dot(v, &rows[0]).abs() < 1e-12);
        }
        assert!(dot(&ns[0], &ns[1]).abs() < 1e-12);
    }

    #[test]
    fn solve_small_system() {
        let mut a = [[2.0, 1.0], [1.0, 3.0]];
        let mut b = [3.0, 5.0];
        assert!(solve(&mut a, &mut b, 1e-12));
        assert!((b[0] - 0.8).abs() < 1e-12 && (b[1] - 1.4).abs() < 1e-12);

        let mut s = [[1.0, 2.0], [2.0, 4.0]];
        let mut r = [1.0, 1.0];
        assert!(!solve(&mut s, &mut r, 1e-12));
    }
}
