//! Extended-real heights and per-code profiles.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::codes::{Family, GeneratorMatrix};
use crate::error::{invalid, Result};

/// A nonnegative real or `+∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Height {
    Finite(f64),
    Infinite,
}

impl Height {
    /// `f64::INFINITY` for `Infinite`.
    pub fn value(self) -> f64 {
        match self {
            Height::Finite(v) => v,
            Height::Infinite => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Height::Infinite)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Height::Finite(v) => Some(v),
            Height::Infinite => None,
        }
    }

    /// Converts a ratio that may be `f64::INFINITY`.
    pub fn from_ratio(v: f64) -> Height {
        if v.is_infinite() {
            Height::Infinite
        } else {
            Height::Finite(v)
        }
    }

    /// Both infinite, or both finite within `rel` relative error.
    pub fn approx_eq(self, other: Height, rel: f64) -> bool {
        match (self, other) {
            (Height::Infinite, Height::Infinite) => true,
            (Height::Finite(a), Height::Finite(b)) => (a - b).abs() <= rel * a.abs().max(b.abs()),
            _ => false,
        }
    }
}

impl Serialize for Height {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Height::Finite(v) => s.serialize_f64(*v),
            Height::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Height {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Height::Finite(v)),
            Raw::Str(s) if s == "inf" => Ok(Height::Infinite),
            Raw::Str(s) => Err(D::Error::custom(format!(
                "expected number or \"inf\", got {s:?}"
            ))),
        }
    }
}

/// A height together with an information vector that attains it.
///
/// For infinite heights the witness is a direction whose codeword has
/// `c_(m) = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtendedHeight {
    pub value: Height,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<f64>>,
}

impl ExtendedHeight {
    pub fn finite(v: f64, witness: Option<Vec<f64>>) -> Self {
        ExtendedHeight {
            value: Height::Finite(v),
            witness,
        }
    }

    pub fn infinite(witness: Option<Vec<f64>>) -> Self {
        ExtendedHeight {
            value: Height::Infinite,
            witness,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    /// Encodes the witness and returns its ratio `c_(0) / c_(m)`.
    pub fn witness_ratio(&self, g: &GeneratorMatrix, m: usize) -> Option<f64> {
        let w = self.witness.as_ref()?;
        Some(g.encode(w).ok()?.height(m))
    }
}

/// Heights `h_1 … h_{n−1}` of one code.
#[derive(Debug, Clone, PartialEq)]
pub struct MHeightProfile {
    family: Family,
    heights: Vec<ExtendedHeight>,
}

impl MHeightProfile {
    /// `heights[i]` is `h_{i+1}`.
    pub fn new(family: Family, heights: Vec<ExtendedHeight>) -> Self {
        MHeightProfile { family, heights }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Code length `n` (profiles cover `m = 1 … n−1`).
    pub fn n(&self) -> usize {
        self.heights.len() + 1
    }

    pub fn heights(&self) -> &[ExtendedHeight] {
        &self.heights
    }

    pub fn get(&self, m: usize) -> Result<&ExtendedHeight> {
        if m == 0 || m > self.heights.len() {
            return Err(invalid(format!(
                "m = {m} outside profile range [1, {}]",
                self.heights.len()
            )));
        }
        Ok(&self.heights[m - 1])
    }

    /// Nondecreasing in `m`, with `∞` absorbing.
    pub fn is_monotone(&self) -> bool {
        self.heights
            .windows(2)
            .all(|w| w[1].value.value() >= w[0].value.value())
    }

    pub fn approx_eq(&self, other: &MHeightProfile, rel: f64) -> bool {
        self.heights.len() == other.heights.len()
            && self
                .heights
                .iter()
                .zip(&other.heights)
                .all(|(a, b)| a.value.approx_eq(b.value, rel))
    }

    /// `m,value` lines with header; `inf` for infinite entries.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,value\n");
        for (i, h) in self.heights.iter().enumerate() {
            let v = match h.value {
                Height::Finite(v) => crate::json::format_f64(v),
                Height::Infinite => "inf".to_string(),
            };
            out.push_str(&format!("{},{}\n", i + 1, v));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileEntry {
    m: usize,
    value: Height,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct ProfileDoc {
    family: String,
    heights: Vec<ProfileEntry>,
}

impl Serialize for MHeightProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProfileDoc {
            family: self.family.name().to_string(),
            heights: self
                .heights
                .iter()
                .enumerate()
                .map(|(i, h)| ProfileEntry {
                    m: i + 1,
                    value: h.value,
                    witness: h.witness.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MHeightProfile {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = ProfileDoc::deserialize(d)?;
        let n = doc.heights.len() + 1;
        let family = Family::parse(&doc.family, Some(n)).map_err(D::Error::custom)?;
        let mut heights = Vec::with_capacity(doc.heights.len());
        for (i, e) in doc.heights.into_iter().enumerate() {
            if e.m != i + 1 {
                return Err(D::Error::custom(
                    "profile entries must list m = 1, 2, … in order",
                ));
            }
            heights.push(ExtendedHeight {
                value: e.value,
                witness: e.witness,
            });
        }
        Ok(MHeightProfile { family, heights })
    }
}
