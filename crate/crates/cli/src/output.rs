//! Number formatting for CSV output.

use linepursuit::kinematics::scalar::to_f64;
use linepursuit::Scalar;

/// Decimal rendering rounded to 15 significant digits, printed as the
/// shortest string that reads back to the rounded value.
pub fn sig15(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let rounded: f64 = format!("{x:.14e}").parse().expect("float round trip");
    format!("{rounded}")
}

pub fn q15(x: &Scalar) -> String {
    sig15(to_f64(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(5.0), "5");
        assert_eq!(sig15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(sig15(2.0 / 3.0), "0.666666666666667");
        assert_eq!(sig15(1e-9), "0.000000001");
        assert_eq!(sig15(f64::INFINITY), "inf");
    }
}
