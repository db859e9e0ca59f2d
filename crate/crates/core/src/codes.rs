//! Generator matrices for the geometric code families, encoding, and the MDS check.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::{PHI, SQRT_5};

/// Which construction produced a generator matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `k = 2`, columns at angles `πj/n` on the upper half circle.
    DualPolygonal(usize),
    /// `k = 3`, the six vertex axes of the icosahedron.
    DualIcosahedral,
    /// `k = 3`, the ten vertex axes of the dodecahedron.
    DualDodecahedral,
    Custom,
}

impl Family {
    /// Name used on the command line and in JSON documents.
    pub fn name(self) -> &'static str {
        match self {
            Family::DualPolygonal(_) => "dual-polygonal",
            Family::DualIcosahedral => "dual-icosahedral",
            Family::DualDodecahedral => "dual-dodecahedral",
            Family::Custom => "custom",
        }
    }

    /// Parses a family name; `n` is required for (and only used by) the polygonal family.
    pub fn parse(name: &str, n: Option<usize>) -> Result<Family> {
        match name {
            "dual-polygonal" => {
                let n = n.ok_or_else(|| invalid("dual-polygonal requires n"))?;
                Ok(Family::DualPolygonal(n))
            }
            "dual-icosahedral" => Ok(Family::DualIcosahedral),
            "dual-dodecahedral" => Ok(Family::DualDodecahedral),
            "custom" => Ok(Family::Custom),
            other => Err(invalid(format!("unknown family '{other}'"))),
        }
    }

    /// Builds the generator matrix of a built-in family.
    pub fn generator(self) -> Result<GeneratorMatrix> {
        match self {
            Family::DualPolygonal(n) => GeneratorMatrix::dual_polygonal(n),
            Family::DualIcosahedral => Ok(GeneratorMatrix::dual_icosahedral()),
            Family::DualDodecahedral => Ok(GeneratorMatrix::dual_dodecahedral()),
            Family::Custom => Err(Error::UnsupportedFamily(
                "custom matrices have no built-in generator".into(),
            )),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::parse(s, None)
    }
}

/// A real `k × n` generator matrix stored by columns.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMatrix {
    k: usize,
    columns: Vec<Vec<f64>>,
    family: Family,
}

impl GeneratorMatrix {
    /// Dual polygonal code of length `n`: column `j` is `(cos πj/n, sin πj/n)`.
    pub fn dual_polygonal(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!(
                "dual polygonal code needs n >= 2, got {n}"
            )));
        }
        let columns = (0..n)
            .map(|j| {
                let theta = std::f64::consts::PI * j as f64 / n as f64;
                vec![theta.cos(), theta.sin()]
            })
            .collect();
        Ok(GeneratorMatrix {
            k: 2,
            columns,
            family: Family::DualPolygonal(n),
        })
    }

    /// The 3 × 6 icosahedral axis matrix; every column has squared norm `2 + φ`.
    pub fn dual_icosahedral() -> Self {
        let p = PHI;
        let columns = vec![
            vec![0.0, 1.0, p],
            vec![0.0, 1.0, -p],
            vec![1.0, p, 0.0],
            vec![1.0, -p, 0.0],
            vec![p, 0.0, 1.0],
            vec![p, 0.0, -1.0],
        ];
        GeneratorMatrix {
            k: 3,
            columns,
            family: Family::DualIcosahedral,
        }
    }

    /// The 3 × 10 dodecahedral axis matrix; every column has squared norm 3.
    pub fn dual_dodecahedral() -> Self {
        let p = PHI;
        // φ⁻¹ = φ − 1 exactly in the reals; computed from √5 directly.
        let q = (SQRT_5 - 1.0) / 2.0;
        let columns = vec![
            vec![1.0, 1.0, 1.0],
            vec![1.0, 1.0, -1.0],
            vec![1.0, -1.0, 1.0],
            vec![1.0, -1.0, -1.0],
            vec![0.0, p, q],
            vec![0.0, p, -q],
            vec![q, 0.0, p],
            vec![q, 0.0, -p],
            vec![p, q, 0.0],
            vec![p, -q, 0.0],
        ];
        GeneratorMatrix {
            k: 3,
            columns,
            family: Family::DualDodecahedral,
        }
    }

    /// A `Custom` matrix from explicit columns.
    ///
    /// Columns must be non-empty, share one dimension, be finite, and number
    /// at least `k`. Linear dependence is allowed here; see [`Self::is_mds`].
    pub fn from_columns(columns: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_family(columns, Family::Custom)
    }

    pub(crate) fn with_family(columns: Vec<Vec<f64>>, family: Family) -> Result<Self> {
        let k = columns
            .first()
            .map(Vec::len)
            .ok_or_else(|| invalid("generator matrix needs at least one column"))?;
        if k == 0 {
            return Err(invalid("columns must have dimension >= 1"));
        }
        if let Some(j) = columns.iter().position(|c| c.len() != k) {
            return Err(invalid(format!(
                "ragged columns: column {j} has length {}, expected {k}",
                columns[j].len()
            )));
        }
        if columns.iter().flatten().any(|x| !x.is_finite()) {
            return Err(invalid("column entries must be finite"));
        }
        if columns.len() < k {
            return Err(invalid(format!(
                "need n >= k, got n = {} and k = {k}",
                columns.len()
            )));
        }
        Ok(GeneratorMatrix { k, columns, family })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[f64] {
        &self.columns[j]
    }

    /// Encodes the information vector `u` into the codeword `uG`.
    pub fn encode(&self, u: &[f64]) -> Result<Codeword> {
        if u.len() != self.k {
            return Err(invalid(format!(
                "information vector has length {}, expected k = {}",
                u.len(),
                self.k
            )));
        }
        Ok(Codeword::new(
            self.columns.iter().map(|g| linalg::dot(u, g)).collect(),
        ))
    }

    /// True iff every `k` columns are linearly independent.
    ///
    /// A `k`-subset counts as independent when `|det| > 1e-9 · Π‖g_j‖`.
    pub fn is_mds(&self) -> bool {
        let norms: Vec<f64> = self.columns.iter().map(|c| linalg::norm(c)).collect();
        (0..self.n()).combinations(self.k).all(|subset| {
            let scale: f64 = subset.iter().map(|&j| norms[j]).product();
            if scale == 0.0 {
                return false;
            }
            let rows: Vec<Vec<f64>> = subset.iter().map(|&j| self.columns[j].clone()).collect();
            linalg::det(&rows).abs() > 1e-9 * scale
        })
    }

    /// Returns a copy with columns reordered by `perm` and column `j` multiplied by `signs[j]`.
    ///
    /// Column `j` of the result is `signs[j] · g_{perm[j]}`. The family tag becomes `Custom`.
    pub fn permuted_signed(&self, perm: &[usize], signs: &[f64]) -> Result<Self> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || signs.len() != n {
            return Err(invalid("permutation and signs must have length n"));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("not a permutation"));
            }
        }
        let columns = perm
            .iter()
            .zip(signs)
            .map(|(&p, &s)| self.columns[p].iter().map(|x| s * x).collect())
            .collect();
        Self::with_family(columns, Family::Custom)
    }

    /// Multiplies every entry by `factor`; the family tag becomes `Custom`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|x| factor * x).collect())
            .collect();
        Self::with_family(columns, Family::Custom)
    }
}

/// JSON view: `{"k":…, "n":…, "family":…, "columns":[[…],…]}`.
#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    k: usize,
    n: usize,
    family: String,
    columns: Vec<Vec<f64>>,
}

impl Serialize for GeneratorMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixDoc {
            k: self.k,
            n: self.n(),
            family: self.family.name().to_string(),
            columns: self.columns.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = MatrixDoc::deserialize(d)?;
        let family = Family::parse(&doc.family, Some(doc.n)).map_err(D::Error::custom)?;
        let g = GeneratorMatrix::with_family(doc.columns, family).map_err(D::Error::custom)?;
        if g.k != doc.k || g.n() != doc.n {
            return Err(D::Error::custom("k/n do not match the columns"));
        }
        Ok(g)
    }
}

/// A codeword with its order statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct Codeword {
    entries: Vec<f64>,
    order_stats: Vec<f64>,
    order_perm: Vec<usize>,
}

impl Codeword {
    /// Wraps raw entries; magnitudes are sorted nonincreasing, ties by ascending index.
    pub fn new(entries: Vec<f64>) -> Self {
        let mut order_perm: Vec<usize> = (0..entries.len()).collect();
        order_perm.sort_by(|&i, &j| {
            entries[j]
                .abs()
                .total_cmp(&entries[i].abs())
                .then(i.cmp(&j))
        });
        let order_stats = order_perm.iter().map(|&j| entries[j].abs()).collect();
        Codeword {
            entries,
            order_stats,
            order_perm,
        }
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// `c_(0) ≥ c_(1) ≥ … ≥ c_(n−1)`.
    pub fn order_stats(&self) -> &[f64] {
        &self.order_stats
    }

    /// `order_stats[i] == |entries[order_perm[i]]|`.
    pub fn order_perm(&self) -> &[usize] {
        &self.order_perm
    }

    /// The codeword's m-height `c_(0) / c_(m)`; infinite when `c_(m) = 0 < c_(0)`.
    ///
    /// The zero codeword has no defined ratio and yields `NaN`.
    pub fn height(&self, m: usize) -> f64 {
        let top = self.order_stats[0];
        let den = self.order_stats[m];
        match (top.partial_cmp(&0.0), den == 0.0) {
            (Some(Ordering::Greater), true) => f64::INFINITY,
            (Some(Ordering::Equal), _) => f64::NAN,
            _ => top / den,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn dual_polygonal_small_cases() {
        let g = GeneratorMatrix::dual_polygonal(2).unwrap();
        assert!(close(g.column(0), &[1.0, 0.0], 1e-15));
        assert!(close(g.column(1), &[0.0, 1.0], 1e-15));

        let g = GeneratorMatrix::dual_polygonal(3).unwrap();
        let h = 3f64.sqrt() / 2.0;
        assert!(close(g.column(0), &[1.0, 0.0], 1e-15));
        assert!(close(g.column(1), &[0.5, h], 1e-15));
        assert!(close(g.column(2), &[-0.5, h], 1e-15));

        let g = GeneratorMatrix::dual_polygonal(4).unwrap();
        let r = 2f64.sqrt() / 2.0;
        assert!(close(g.column(3), &[-r, r], 1e-15));
        assert_eq!(g.family(), Family::DualPolygonal(4));
    }

    #[test]
    fn dual_polygonal_rejects_short_lengths() {
        assert!(matches!(
            GeneratorMatrix::dual_polygonal(1),
            Err(Error::InvalidParameter(_))
        ));
        assert!(GeneratorMatrix::dual_polygonal(0).is_err());
    }

    #[test]
    fn icosahedral_columns_as_printed() {
        let g = GeneratorMatrix::dual_icosahedral();
        assert_eq!((g.k(), g.n()), (3, 6));
        assert_eq!(g.column(0), &[0.0, 1.0, PHI]);
        assert_eq!(g.column(5), &[PHI, 0.0, -1.0]);
        for c in g.columns() {
            assert!((linalg::dot(c, c) - (2.0 + PHI)).abs() < 1e-14);
        }
    }

    #[test]
    fn dodecahedral_columns_as_printed() {
        let g = GeneratorMatrix::dual_dodecahedral();
        assert_eq!((g.k(), g.n()), (3, 10));
        assert_eq!(g.column(0), &[1.0, 1.0, 1.0]);
        assert!(close(g.column(8), &[PHI, 1.0 / PHI, 0.0], 1e-15));
        for c in g.columns() {
            assert!((linalg::dot(c, c) - 3.0).abs() < 1e-14);
        }
    }

    #[test]
    fn from_columns_validation() {
        let id = GeneratorMatrix::from_columns(vec![vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert_eq!((id.k(), id.n(), id.family()), (2, 2, Family::Custom));

        let ico = GeneratorMatrix::dual_icosahedral();
        let back = GeneratorMatrix::from_columns(ico.columns().to_vec()).unwrap();
        assert_eq!(back.columns(), ico.columns());

        assert!(GeneratorMatrix::from_columns(vec![vec![1.0, 0.0], vec![1.0, 0.0]]).is_ok());
        assert!(GeneratorMatrix::from_columns(vec![]).is_err());
        assert!(GeneratorMatrix::from_columns(vec![vec![1.0, 0.0], vec![1.0]]).is_err());
        assert!(GeneratorMatrix::from_columns(vec![vec![f64::NAN, 0.0], vec![0.0, 1.0]]).is_err());
        assert!(GeneratorMatrix::from_columns(vec![vec![1.0, 0.0, 0.0]]).is_err());
    }

    #[test]
    fn encode_examples() {
        let g = GeneratorMatrix::dual_polygonal(3).unwrap();
        let c = g.encode(&[1.0, 0.0]).unwrap();
        assert!(close(c.entries(), &[1.0, 0.5, -0.5], 1e-15));
        // |0.5| and |-0.5| tie; lower index first.
        assert_eq!(c.order_perm(), &[0, 1, 2]);

        let z = g.encode(&[0.0, 0.0]).unwrap();
        assert!(z.order_stats().iter().all(|&x| x == 0.0));

        let ico = GeneratorMatrix::dual_icosahedral();
        let c = ico.encode(ico.column(0)).unwrap();
        assert!((c.entries()[0] - (2.0 + PHI)).abs() < 1e-14);

        assert!(g.encode(&[1.0]).is_err());
    }

    #[test]
    fn polygonal_codeword_is_shifted_cosine() {
        for n in 2..12 {
            let g = GeneratorMatrix::dual_polygonal(n).unwrap();
            for step in 0..20 {
                let alpha = 0.37 * step as f64;
                let c = g.encode(&[alpha.cos(), alpha.sin()]).unwrap();
                for (j, &cj) in c.entries().iter().enumerate() {
                    assert!((cj - (PI * j as f64 / n as f64 - alpha).cos()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn mds_examples() {
        assert!(GeneratorMatrix::dual_polygonal(5).unwrap().is_mds());
        for n in 2..=16 {
            assert!(
                GeneratorMatrix::dual_polygonal(n).unwrap().is_mds(),
                "n = {n}"
            );
        }
        assert!(GeneratorMatrix::dual_icosahedral().is_mds());
        assert!(GeneratorMatrix::dual_dodecahedral().is_mds());
        let bad =
            GeneratorMatrix::from_columns(vec![vec![1.0, 0.0], vec![2.0, 0.0], vec![0.0, 1.0]])
                .unwrap();
        assert!(!bad.is_mds());
        let zero = GeneratorMatrix::from_columns(vec![vec![0.0, 0.0], vec![0.0, 1.0]]).unwrap();
        assert!(!zero.is_mds());
    }

    #[test]
    fn column_norms_uniform() {
        let fams = [
            GeneratorMatrix::dual_polygonal(7).unwrap(),
            GeneratorMatrix::dual_icosahedral(),
            GeneratorMatrix::dual_dodecahedral(),
        ];
        for g in &fams {
            let norms: Vec<f64> = g.columns().iter().map(|c| linalg::norm(c)).collect();
            let max = norms.iter().cloned().fold(f64::MIN, f64::max);
            let min = norms.iter().cloned().fold(f64::MAX, f64::min);
            assert!((max / min - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn json_round_trip_keeps_family() {
        let g = GeneratorMatrix::dual_polygonal(5).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.starts_with(r#"{"k":2,"n":5,"family":"dual-polygonal","columns":"#));
        let back: GeneratorMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);

        let bad = r#"{"k":3,"n":2,"family":"custom","columns":[[1,0],[0,1]]}"#;
        assert!(serde_json::from_str::<GeneratorMatrix>(bad).is_err());
    }

    #[test]
    fn permuted_signed_checks_permutation() {
        let g = GeneratorMatrix::dual_icosahedral();
        let p = g
            .permuted_signed(&[5, 4, 3, 2, 1, 0], &[1.0, -1.0, 1.0, 1.0, 1.0, 1.0])
            .unwrap();
        assert_eq!(p.column(0), g.column(5));
        assert_eq!(p.column(1)[0], -g.column(4)[0]);
        assert!(g.permuted_signed(&[0, 0, 1, 2, 3, 4], &[1.0; 6]).is_err());
    }
}
