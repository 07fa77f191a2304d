//! Real quadratic numbers `a + b*sqrt(D)` with `D` square-free.
//!
//! The radicand is kept square-free so that equality is plain coefficient
//! equality. Comparisons never approximate: the sign of `a + b*sqrt(D)` is
//! decided by comparing `a^2` against `b^2 D` with the appropriate case
//! analysis.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::{format_rat, parse_rat, rat_to_f64, ExactError, Rat};

/// `a + b*sqrt(d)`. Invariants: `d` square-free; `d == 0` iff `b == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadVal {
    a: Rat,
    b: Rat,
    d: u64,
}

/// Splits `n` as `s^2 * f` with `f` square-free, returning `(s, f)`.
fn squarefree_split(n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0u32;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    (square, free * rest)
}

impl QuadVal {
    /// `a + b*sqrt(d)`, normalized so the stored radicand is square-free.
    pub fn new(a: Rat, b: Rat, d: u64) -> Self {
        if b.is_zero() || d == 0 {
            return Self {
                a,
                b: Rat::zero(),
                d: 0,
            };
        }
        let (s, f) = squarefree_split(d);
        let b = b * Rat::from_integer(s.into());
        if f == 1 {
            Self {
                a: a + b,
                b: Rat::zero(),
                d: 0,
            }
        } else {
            Self { a, b, d: f }
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        Self {
            a,
            b: Rat::zero(),
            d: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rint(n))
    }

    /// `sqrt(n)` for a nonnegative integer `n`.
    pub fn sqrt_int(n: u64) -> Self {
        Self::new(Rat::zero(), Rat::one(), n)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rat {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    /// The value as a rational, when it is one.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.d == 0 {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.a.is_zero()
    }

    fn common_radicand(&self, other: &Self) -> Result<u64, ExactError> {
        match (self.d, other.d) {
            (0, d) | (d, 0) => Ok(d),
            (d1, d2) if d1 == d2 => Ok(d1),
            (d1, d2) => Err(ExactError::RadicandMismatch(d1, d2)),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        Ok(Self::new(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let d = self.common_radicand(other)?;
        let rad = Rat::from_integer(d.into());
        let a = &self.a * &other.a + &self.b * &other.b * rad;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::new(a, b, d))
    }

    /// `1 / self`; exact via the conjugate.
    pub fn recip(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let rad = Rat::from_integer(self.d.into());
        // Norm a^2 - b^2 d is nonzero for a nonzero element of the field.
        let norm = &self.a * &self.a - &self.b * &self.b * rad;
        Ok(Self::new(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_mul(&other.recip()?)
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            d: self.d,
        }
    }

    pub fn add_rat(&self, r: &Rat) -> Self {
        Self {
            a: &self.a + r,
            b: self.b.clone(),
            d: self.d,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::from_rat(Rat::zero());
        }
        Self {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d,
        }
    }

    /// Exact sign of the value: `Less`/`Equal`/`Greater` versus zero.
    pub fn sign(&self) -> Ordering {
        if self.b.is_zero() {
            return sign_of(&self.a);
        }
        if self.a.is_zero() {
            return sign_of(&self.b);
        }
        match (self.a.is_positive(), self.b.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            (true, false) => {
                // a > 0 > b: sign of a^2 - b^2 d.
                let rad = Rat::from_integer(self.d.into());
                sign_of(&(&self.a * &self.a - &self.b * &self.b * rad))
            }
            (false, true) => {
                // a < 0 < b: sign of b^2 d - a^2.
                let rad = Rat::from_integer(self.d.into());
                sign_of(&(&self.b * &self.b * rad - &self.a * &self.a))
            }
        }
    }

    /// Exact total-order comparison. Errors when the radicands are
    /// incompatible (both irrational over distinct square-free `D`).
    pub fn cmp_exact(&self, other: &Self) -> Result<Ordering, ExactError> {
        Ok(self.try_sub(other)?.sign())
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    /// Approximate value, for rendering only.
    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

fn sign_of(r: &Rat) -> Ordering {
    if r.is_positive() {
        Ordering::Greater
    } else if r.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

impl From<Rat> for QuadVal {
    fn from(r: Rat) -> Self {
        Self::from_rat(r)
    }
}

impl fmt::Display for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", format_rat(&self.a));
        }
        let coeff = |b: &Rat| {
            if b.is_one() {
                format!("sqrt({})", self.d)
            } else {
                format!("{}*sqrt({})", format_rat(b), self.d)
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                return write!(f, "-{}", coeff(&-&self.b));
            }
            return write!(f, "{}", coeff(&self.b));
        }
        if self.b.is_negative() {
            write!(f, "{} - {}", format_rat(&self.a), coeff(&-&self.b))
        } else {
            write!(f, "{} + {}", format_rat(&self.a), coeff(&self.b))
        }
    }
}

impl FromStr for QuadVal {
    type Err = ExactError;

    /// Parses the canonical text form: `"1/6"`, `"sqrt(5)"`, `"3 - 2*sqrt(2)"`,
    /// `"-1/3*sqrt(5)"`, `"1/2 + sqrt(3)"`.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        let bad = || ExactError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        // Split into at most two signed terms at a '+'/'-' that is not leading.
        let mut split_at = None;
        for (i, c) in t.char_indices().skip(1) {
            if (c == '+' || c == '-') && !t[..i].ends_with('/') && !t[..i].ends_with('*') {
                split_at = Some(i);
                break;
            }
        }
        let (first, second) = match split_at {
            Some(i) => (&t[..i], Some(&t[i..])),
            None => (&t[..], None),
        };
        let first = parse_term(first).ok_or_else(bad)?;
        let second = match second {
            Some(x) => Some(parse_term(x).ok_or_else(bad)?),
            None => None,
        };
        let v = match second {
            None => first,
            Some(sec) => first.try_add(&sec).map_err(|_| bad())?,
        };
        Ok(v)
    }
}

/// One signed term: a rational, `[rat*]sqrt(D)`, optionally negated.
fn parse_term(t: &str) -> Option<QuadVal> {
    let (neg, t) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let v = if let Some(idx) = t.find("sqrt(") {
        let inner = t[idx + 5..].strip_suffix(')')?;
        let d: u64 = inner.parse().ok()?;
        let coeff = match &t[..idx] {
            "" => Rat::one(),
            c => parse_rat(c.strip_suffix('*').unwrap_or(c)).ok()?,
        };
        QuadVal::new(Rat::zero(), coeff, d)
    } else {
        QuadVal::from_rat(parse_rat(t).ok()?)
    };
    Some(if neg { v.neg() } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rint};

    fn qv(a: Rat, b: Rat, d: u64) -> QuadVal {
        QuadVal::new(a, b, d)
    }

    #[test]
    fn normalizes_square_part() {
        // sqrt(8) = 2*sqrt(2)
        let x = QuadVal::sqrt_int(8);
        assert_eq!(x.radicand(), 2);
        assert_eq!(*x.radical_coeff(), rint(2));
        // sqrt(9) = 3
        let y = QuadVal::sqrt_int(9);
        assert!(y.is_rational());
        assert_eq!(*y.as_rat().unwrap(), rint(3));
        // sqrt(45) = 3*sqrt(5)
        let z = QuadVal::sqrt_int(45);
        assert_eq!(z.radicand(), 5);
        assert_eq!(*z.radical_coeff(), rint(3));
    }

    #[test]
    fn cmp_known_values() {
        // 3 - 2*sqrt(2) vs 1/6: both positive, squares 289/36 vs 288/36.
        let x = qv(rint(3), rint(-2), 2);
        let y = QuadVal::from_rat(rat(1, 6));
        assert_eq!(x.cmp_exact(&y).unwrap(), Ordering::Greater);
        // 2*sqrt(2) vs 3: 8 < 9.
        let x = qv(rint(0), rint(2), 2);
        let y = QuadVal::from_int(3);
        assert_eq!(x.cmp_exact(&y).unwrap(), Ordering::Less);
        // Reflexivity.
        let x = qv(rat(5, 3), rat(-7, 2), 13);
        assert_eq!(x.cmp_exact(&x).unwrap(), Ordering::Equal);
    }

    #[test]
    fn mixed_radicands_reject() {
        let x = QuadVal::sqrt_int(2);
        let y = QuadVal::sqrt_int(3);
        assert!(matches!(
            x.cmp_exact(&y),
            Err(ExactError::RadicandMismatch(2, 3))
        ));
        // A rational side is always compatible.
        assert_eq!(
            x.cmp_exact(&QuadVal::from_int(1)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn field_ops() {
        let x = qv(rint(3), rint(-2), 2); // 3 - 2*sqrt(2)
        let inv = x.recip().unwrap(); // 3 + 2*sqrt(2)
        assert_eq!(inv, qv(rint(3), rint(2), 2));
        assert_eq!(x.try_mul(&inv).unwrap(), QuadVal::from_int(1));
        let s = x.try_add(&inv).unwrap();
        assert_eq!(s, QuadVal::from_int(6));
    }

    #[test]
    fn display_parse_round_trip() {
        for s in [
            "3 - 2*sqrt(2)",
            "1/6",
            "-5/2",
            "sqrt(5)",
            "-sqrt(5)",
            "5/2 + 1/3*sqrt(5)",
            "0",
            "-2*sqrt(7)",
        ] {
            let v: QuadVal = s.parse().unwrap();
            assert_eq!(v.to_string(), s, "canonical form of {s}");
            let back: QuadVal = v.to_string().parse().unwrap();
            assert_eq!(back, v);
        }
        // Non-canonical inputs normalize.
        let v: QuadVal = "1 + sqrt(8)".parse().unwrap();
        assert_eq!(v.to_string(), "1 + 2*sqrt(2)");
        assert!("sqrt(2".parse::<QuadVal>().is_err());
        assert!("".parse::<QuadVal>().is_err());
    }
}
