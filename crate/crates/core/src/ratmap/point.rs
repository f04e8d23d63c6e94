use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::numeric::{Polynomial, Rational};

/// A point of the projective line over Q, or a Galois orbit of algebraic
/// points given by its monic irreducible minimal polynomial (degree >= 2).
///
/// Ordering: finite rationals ascending, then algebraic classes by minimal
/// polynomial, then infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ProjectivePoint {
    Finite(Rational),
    Algebraic(Polynomial),
    Infinity,
}

impl ProjectivePoint {
    pub fn finite(n: i64) -> Self {
        ProjectivePoint::Finite(crate::numeric::rat(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        ProjectivePoint::Finite(crate::numeric::frac(n, d))
    }

    /// The point class of a monic irreducible factor.
    pub fn from_factor(g: &Polynomial) -> Self {
        debug_assert!(g.deg() >= 1 && g.lc().is_one());
        if g.deg() == 1 {
            ProjectivePoint::Finite(-g.coeff(0))
        } else {
            ProjectivePoint::Algebraic(g.clone())
        }
    }

    /// Algebraic class from an arbitrary irreducible polynomial of degree
    /// at least 2 (made monic).
    pub fn algebraic(m: &Polynomial) -> crate::Result<Self> {
        if m.deg() < 2 || !m.is_irreducible() {
            return Err(crate::Error::InvalidInput(format!(
                "{m} is not irreducible of degree >= 2"
            )));
        }
        Ok(ProjectivePoint::Algebraic(m.monic()))
    }

    /// Number of geometric points the class stands for.
    pub fn class_degree(&self) -> usize {
        match self {
            ProjectivePoint::Algebraic(m) => m.deg(),
            _ => 1,
        }
    }

    pub fn is_rational(&self) -> bool {
        !matches!(self, ProjectivePoint::Algebraic(_))
    }

    /// Minimal polynomial for finite points.
    pub fn min_poly(&self) -> Option<Polynomial> {
        match self {
            ProjectivePoint::Finite(a) => Some(Polynomial::linear_root(a)),
            ProjectivePoint::Algebraic(m) => Some(m.clone()),
            ProjectivePoint::Infinity => None,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            ProjectivePoint::Finite(a) => Some(a),
            _ => None,
        }
    }

    fn rank(&self) -> u8 {
        match self {
            ProjectivePoint::Finite(_) => 0,
            ProjectivePoint::Algebraic(_) => 1,
            ProjectivePoint::Infinity => 2,
        }
    }

    /// Text form: `1/4`, `inf`, `root(z^2 + 1)`.
    pub fn text(&self) -> String {
        self.to_string()
    }
}

impl Ord for ProjectivePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ProjectivePoint::Finite(a), ProjectivePoint::Finite(b)) => a.cmp(b),
            (ProjectivePoint::Algebraic(a), ProjectivePoint::Algebraic(b)) => a.cmp_canonical(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for ProjectivePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjectivePoint::Finite(a) => write!(f, "{a}"),
            ProjectivePoint::Infinity => f.write_str("inf"),
            ProjectivePoint::Algebraic(m) => write!(f, "root({m})"),
        }
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for ProjectivePoint {
    fn from(a: Rational) -> Self {
        ProjectivePoint::Finite(a)
    }
}

/// Parses `inf`, integers and fractions like `-1/8`.
impl std::str::FromStr for ProjectivePoint {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(ProjectivePoint::Infinity);
        }
        let bad = || crate::Error::InvalidInput(format!("bad point {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(ProjectivePoint::Finite(Rational::new(n, d)))
    }
}
