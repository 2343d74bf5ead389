//! Extended real line: finite values plus signed infinities.
//!
//! Cross-ratios are projectively valued, so a vanishing denominator with a
//! nonzero numerator is a legitimate result, not an error. A 0/0 ratio is
//! indeterminate and is reported as `None` by [`ExtendedReal::ratio`].

use std::fmt;

/// A finite real or a signed infinity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    PosInf,
    NegInf,
}

impl ExtendedReal {
    /// `num / den` with projective semantics: a zero denominator yields the
    /// signed infinity matching the numerator's sign, and 0/0 yields `None`.
    pub fn ratio(num: f64, den: f64) -> Option<ExtendedReal> {
        if den != 0.0 {
            Some(ExtendedReal::Finite(num / den))
        } else if num > 0.0 {
            Some(ExtendedReal::PosInf)
        } else if num < 0.0 {
            Some(ExtendedReal::NegInf)
        } else {
            None
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(*v),
            _ => None,
        }
    }

    /// Relative comparison: finite values within `tol * max(1, |other|)`,
    /// infinities only equal to the same infinity.
    pub fn approx_eq(&self, other: &ExtendedReal, tol: f64) -> bool {
        match (self, other) {
            (ExtendedReal::Finite(a), ExtendedReal::Finite(b)) => {
                (a - b).abs() <= tol * b.abs().max(1.0)
            }
            (ExtendedReal::PosInf, ExtendedReal::PosInf) => true,
            (ExtendedReal::NegInf, ExtendedReal::NegInf) => true,
            _ => false,
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(v: f64) -> Self {
        ExtendedReal::Finite(v)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::Finite(v) => write!(f, "{v}"),
            ExtendedReal::PosInf => write!(f, "+inf"),
            ExtendedReal::NegInf => write!(f, "-inf"),
        }
    }
}
