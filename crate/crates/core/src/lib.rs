//! Geometric analog error-correcting codes and their m-height profiles.
//!
//! The crate builds the dual polygonal, dual icosahedral and dual
//! dodecahedral codes, and computes their m-heights three ways:
//!
//! - [`closed`]: closed-form values with attaining directions,
//! - [`lp`]: exact enumeration over a finite family of small linear programs,
//!   valid for any real generator matrix,
//! - [`search`]: direct numeric search over a fundamental domain, together
//!   with checks of the ordering and monotonicity facts the closed forms rest on.
//!
//! [`capability`] turns a profile into the outlier counts a code can locate
//! and detect for a given noise ratio.
//!
//! With the default `parallel` feature the configuration and grid loops run
//! on rayon; every reduction is ordered so results are identical to the
//! sequential path.

#![forbid(unsafe_code)]

pub mod capability;
pub mod closed;
pub mod codes;
mod error;
pub mod height;
pub mod json;
mod linalg;
pub mod lp;
mod par;
pub mod search;
pub mod suites;

pub use capability::CapabilitySpec;
pub use codes::{Codeword, Family, GeneratorMatrix};
pub use error::{Error, Result};
pub use height::{ExtendedHeight, Height, MHeightProfile};
pub use par::Exec;

/// The golden ratio `(1 + √5) / 2`.
pub const PHI: f64 = 1.618_033_988_749_895;

/// `√5` at full double precision.
pub const SQRT_5: f64 = 2.236_067_977_499_79;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_match_runtime_values() {
        assert_eq!(SQRT_5, 5f64.sqrt());
        assert_eq!(PHI, (1.0 + 5f64.sqrt()) / 2.0);
        assert!((PHI * PHI - (PHI + 1.0)).abs() < 1e-15);
    }
}
