//! Nonnegative weights that track an exact rational value alongside the
//! floating-point one whenever the inputs allow it.
//!
//! Rule weights and property weights are usually given as fractions; keeping
//! the fraction lets estimation results and normalizers be reported exactly,
//! while all iterative numerics run on the `f64` side.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A nonnegative scalar with an optional exact rational representation.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight {
    value: f64,
    exact: Option<BigRational>,
}

impl Weight {
    pub fn from_f64(value: f64) -> Self {
        assert!(
            value.is_finite() && value >= 0.0,
            "weight must be finite and nonnegative, got {value}"
        );
        Weight { value, exact: None }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "weight denominator must be nonzero");
        let exact = BigRational::new(BigInt::from(numer), BigInt::from(denom));
        assert!(!exact.is_negative(), "weight must be nonnegative");
        Weight {
            value: ratio_to_f64(&exact),
            exact: Some(exact),
        }
    }

    pub fn from_exact(exact: BigRational) -> Self {
        assert!(!exact.is_negative(), "weight must be nonnegative");
        Weight {
            value: ratio_to_f64(&exact),
            exact: Some(exact),
        }
    }

    pub fn one() -> Self {
        Weight::from_ratio(1, 1)
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn ln(&self) -> f64 {
        self.value.ln()
    }

    pub fn exact(&self) -> Option<&BigRational> {
        self.exact.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn mul(&self, other: &Weight) -> Weight {
        Weight {
            value: self.value * other.value,
            exact: match (&self.exact, &other.exact) {
                (Some(a), Some(b)) => Some(a * b),
                _ => None,
            },
        }
    }

    pub fn pow(&self, exp: u64) -> Weight {
        Weight {
            value: self.value.powi(exp.min(i32::MAX as u64) as i32),
            exact: self.exact.as_ref().map(|q| pow_ratio(q, exp)),
        }
    }

    /// Parses either a fraction `n/d` or a decimal literal.
    pub fn parse(text: &str) -> Result<Weight, String> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: i64 = n
                .trim()
                .parse()
                .map_err(|_| format!("bad fraction numerator in `{text}`"))?;
            let d: i64 = d
                .trim()
                .parse()
                .map_err(|_| format!("bad fraction denominator in `{text}`"))?;
            if d == 0 {
                return Err(format!("zero denominator in `{text}`"));
            }
            let w = BigRational::new(BigInt::from(n), BigInt::from(d));
            if w.is_negative() {
                return Err(format!("negative weight `{text}`"));
            }
            Ok(Weight::from_exact(w))
        } else {
            let v: f64 = text
                .parse()
                .map_err(|_| format!("bad weight literal `{text}`"))?;
            if !v.is_finite() || v < 0.0 {
                return Err(format!(
                    "weight must be finite and nonnegative, got `{text}`"
                ));
            }
            // Decimal literals with a short exact form keep it (e.g. `0.5`).
            match exact_from_decimal(text) {
                Some(q) => Ok(Weight::from_exact(q)),
                None => Ok(Weight::from_f64(v)),
            }
        }
    }
}

impl fmt::Display for Weight {
    /// Fractions with denominator up to 10^6 print exactly, everything else
    /// as a 12-significant-digit decimal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = &self.exact {
            if q.denom() <= &BigInt::from(1_000_000u64) {
                if q.denom().is_one() {
                    return write!(f, "{}", q.numer());
                }
                return write!(f, "{}/{}", q.numer(), q.denom());
            }
        }
        write!(f, "{:.11e}", self.value)
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Weight::parse(s)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match &self.exact {
            Some(q) => serializer.serialize_str(&format!("{}/{}", q.numer(), q.denom())),
            None => serializer.serialize_f64(self.value),
        }
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => {
                if !v.is_finite() || v < 0.0 {
                    return Err(D::Error::custom(format!(
                        "weight must be finite and nonnegative, got {v}"
                    )));
                }
                Ok(Weight::from_f64(v))
            }
            Raw::Text(t) => Weight::parse(&t).map_err(D::Error::custom),
        }
    }
}

fn pow_ratio(q: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = q.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        let sq = &base * &base;
        base = sq;
        e >>= 1;
    }
    acc
}

pub(crate) fn ratio_to_f64(q: &BigRational) -> f64 {
    q.to_f64()
        .unwrap_or_else(|| q.numer().to_f64().unwrap() / q.denom().to_f64().unwrap())
}

/// Exact rational for a plain decimal literal like `0.25` (no exponent).
fn exact_from_decimal(text: &str) -> Option<BigRational> {
    if text.contains(['e', 'E']) {
        return None;
    }
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if frac_part.len() > 12 {
        return None;
    }
    let digits: String = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    Some(BigRational::new(numer, denom))
}

/// Sums `ln`-domain terms into a stable linear-domain total.
pub fn log_sum_exp(lns: &[f64]) -> f64 {
    let m = lns.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    m + lns.iter().map(|&x| (x - m).exp()).sum::<f64>().ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_display_and_parse() {
        let w = Weight::from_ratio(2, 3);
        assert_eq!(w.to_string(), "2/3");
        let back = Weight::parse("2/3").unwrap();
        assert_eq!(back.exact(), w.exact());
        assert!((w.value() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn decimal_parse_keeps_short_fractions() {
        let w = Weight::parse("0.5").unwrap();
        assert_eq!(
            w.exact().unwrap(),
            Weight::from_ratio(1, 2).exact().unwrap()
        );
    }

    #[test]
    fn irrational_displays_decimal() {
        let w = Weight::from_f64(std::f64::consts::SQRT_2);
        assert!(w.to_string().starts_with("1.4142135623"));
    }

    #[test]
    fn products_and_powers_stay_exact() {
        let w = Weight::from_ratio(1, 2).mul(&Weight::from_ratio(2, 3).pow(2));
        assert_eq!(
            w.exact().unwrap(),
            Weight::from_ratio(2, 9).exact().unwrap()
        );
    }

    #[test]
    fn serde_round_trip() {
        let w = Weight::from_ratio(7, 9);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "\"7/9\"");
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back.exact(), w.exact());
        let approx: Weight = serde_json::from_str("1.5").unwrap();
        assert!((approx.value() - 1.5).abs() < 1e-15);
    }
}
