//! Deterministic JSON output: serde field order, floats at 17 significant digits.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

/// Formats like C's `%.17g`: enough digits to round-trip any `f64`.
pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".into()
        } else if v > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa.to_string()),
            sign,
            exp.abs()
        )
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

struct Precise;

impl Formatter for Precise {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_f64(value).as_bytes())
    }
}

/// Compact JSON with `%.17g` floats.
pub fn to_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Precise);
    value
        .serialize(&mut ser)
        .expect("serializing to memory cannot fail");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_formats() {
        assert_eq!(format_f64(2.0), "2");
        assert_eq!(format_f64(0.1), "0.10000000000000001");
        assert_eq!(format_f64(5f64.sqrt()), "2.2360679774997898");
        assert_eq!(format_f64(-1.5), "-1.5");
        assert_eq!(format_f64(1e20), "1e+20");
        assert_eq!(format_f64(1.25e-7), "1.2499999999999999e-07");
        assert_eq!(format_f64(0.0), "0");
    }

    #[test]
    fn serializes_with_precise_floats() {
        let s = to_string(&serde_json::json!({"a": 0.1, "b": [1.0, 2]}));
        assert_eq!(s, r#"{"a":0.10000000000000001,"b":[1,2]}"#);
    }

    proptest! {
        #[test]
        fn round_trips_every_finite_double(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            let s = format_f64(v);
            prop_assert_eq!(s.parse::<f64>().unwrap(), v);
            prop_assert_eq!(serde_json::from_str::<f64>(&s).unwrap(), v);
        }
    }
}
