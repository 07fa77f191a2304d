//! The extended positive axis `[0, inf]`, the weight coordinate on a
//! dual-complex edge. `0` and `inf` are first-class points: they are the
//! component vertices at the two ends of an edge.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{ExactError, QuadVal, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtPos {
    Zero,
    /// Strictly positive finite value.
    Finite(QuadVal),
    Infinity,
}

impl ExtPos {
    /// Wraps a finite value, rejecting nonpositive input.
    pub fn finite(v: QuadVal) -> Result<Self, ExactError> {
        if v.is_positive() {
            Ok(ExtPos::Finite(v))
        } else {
            Err(ExactError::NotPositive(v.to_string()))
        }
    }

    pub fn from_rat(r: Rat) -> Result<Self, ExactError> {
        Self::finite(QuadVal::from_rat(r))
    }

    pub fn one() -> Self {
        ExtPos::Finite(QuadVal::from_int(1))
    }

    pub fn as_finite(&self) -> Option<&QuadVal> {
        match self {
            ExtPos::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `t -> 1/t`; swaps the two ends of the axis.
    pub fn recip(&self) -> Self {
        match self {
            ExtPos::Zero => ExtPos::Infinity,
            ExtPos::Infinity => ExtPos::Zero,
            // Finite values are nonzero by the invariant.
            ExtPos::Finite(v) => ExtPos::Finite(v.recip().expect("finite values are nonzero")),
        }
    }

    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, ExactError> {
        use ExtPos::*;
        Ok(match (self, other) {
            (Zero, Zero) | (Infinity, Infinity) => Ordering::Equal,
            (Zero, _) | (_, Infinity) => Ordering::Less,
            (_, Zero) | (Infinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp_exact(b)?,
        })
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtPos::Zero => 0.0,
            ExtPos::Finite(v) => v.to_f64(),
            ExtPos::Infinity => f64::INFINITY,
        }
    }
}

/// Exact membership of `x` in the interval from `lo` to `hi`, with
/// per-endpoint openness flags `(open_lo, open_hi)`. Requires `lo <= hi`.
pub fn interval_contains(
    lo: &ExtPos,
    hi: &ExtPos,
    open: (bool, bool),
    x: &ExtPos,
) -> Result<bool, ExactError> {
    let at_lo = x.cmp_exact(lo)?;
    let at_hi = x.cmp_exact(hi)?;
    let above = if open.0 {
        at_lo == Ordering::Greater
    } else {
        at_lo != Ordering::Less
    };
    let below = if open.1 {
        at_hi == Ordering::Less
    } else {
        at_hi != Ordering::Greater
    };
    Ok(above && below)
}

impl fmt::Display for ExtPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPos::Zero => write!(f, "0"),
            ExtPos::Finite(v) => write!(f, "{v}"),
            ExtPos::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtPos {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(ExtPos::Infinity),
            t => {
                let v: QuadVal = t.parse()?;
                if v.is_zero() {
                    Ok(ExtPos::Zero)
                } else {
                    ExtPos::finite(v)
                }
            }
        }
    }
}
