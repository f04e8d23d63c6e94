use std::fmt;

use num_traits::{One, Zero};

use super::{ProjectivePoint, RatMap};
use crate::numeric::{Polynomial, Rational};
use crate::{Error, Result};

/// `z -> (a z + b)/(c z + d)` with `ad - bc != 0`, scaled so that the first
/// nonzero entry of `(a, b, c, d)` is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

fn homog(p: &ProjectivePoint) -> Option<(Rational, Rational)> {
    match p {
        ProjectivePoint::Finite(x) => Some((x.clone(), Rational::one())),
        ProjectivePoint::Infinity => Some((Rational::one(), Rational::zero())),
        ProjectivePoint::Algebraic(_) => None,
    }
}

impl MobiusMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::InvalidInput("singular Mobius matrix".into()));
        }
        let first = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .unwrap()
            .recip();
        Ok(MobiusMap {
            a: &a * &first,
            b: &b * &first,
            c: &c * &first,
            d: &d * &first,
        })
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let r = crate::numeric::rat;
        Self::new(r(a), r(b), r(c), r(d))
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1).unwrap()
    }

    /// `z -> z + t`.
    pub fn translation(t: Rational) -> Self {
        Self::new(Rational::one(), t, Rational::zero(), Rational::one()).unwrap()
    }

    /// `z -> s z`, `s != 0`.
    pub fn scaling(s: Rational) -> Self {
        Self::new(s, Rational::zero(), Rational::zero(), Rational::one()).unwrap()
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn to_ratmap(&self) -> RatMap {
        RatMap::new(
            Polynomial::new(vec![self.b.clone(), self.a.clone()]),
            Polynomial::new(vec![self.d.clone(), self.c.clone()]),
        )
        .unwrap()
    }

    /// The Möbius map represented by a degree-one rational map.
    pub fn from_ratmap(f: &RatMap) -> Option<Self> {
        if f.degree() != 1 {
            return None;
        }
        let n = f.num();
        let d = f.den();
        Self::new(n.coeff(1), n.coeff(0), d.coeff(1), d.coeff(0)).ok()
    }

    /// `self o other`.
    pub fn compose(&self, o: &MobiusMap) -> MobiusMap {
        MobiusMap::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
        .unwrap()
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
        .unwrap()
    }

    /// Image of a point; algebraic classes map to the class of the images.
    pub fn apply(&self, p: &ProjectivePoint) -> ProjectivePoint {
        match p {
            ProjectivePoint::Algebraic(m) => {
                let inv = self.inverse();
                let num = Polynomial::new(vec![inv.b.clone(), inv.a.clone()]);
                let den = Polynomial::new(vec![inv.d.clone(), inv.c.clone()]);
                let img = m.homogenize_compose(&num, &den, m.deg());
                ProjectivePoint::Algebraic(img.monic())
            }
            _ => {
                let (x, y) = homog(p).unwrap();
                let nx = &self.a * &x + &self.b * &y;
                let ny = &self.c * &x + &self.d * &y;
                if ny.is_zero() {
                    ProjectivePoint::Infinity
                } else {
                    ProjectivePoint::Finite(nx / ny)
                }
            }
        }
    }

    /// The map sending rational points `p1, p2, p3` to `0, inf, 1`.
    fn normalizer(p: [&ProjectivePoint; 3]) -> Option<MobiusMap> {
        let (x1, y1) = homog(p[0])?;
        let (x2, y2) = homog(p[1])?;
        let (x3, y3) = homog(p[2])?;
        let k1 = &y2 * &x3 - &x2 * &y3;
        let k2 = &y1 * &x3 - &x1 * &y3;
        MobiusMap::new(&k1 * &y1, -(&k1 * &x1), &k2 * &y2, -(&k2 * &x2)).ok()
    }

    /// The unique map with `src[i] -> dst[i]`; `None` when points repeat or
    /// are not rational.
    pub fn from_three_points(
        src: [&ProjectivePoint; 3],
        dst: [&ProjectivePoint; 3],
    ) -> Option<Self> {
        let s = Self::normalizer(src)?;
        let d = Self::normalizer(dst)?;
        Some(d.inverse().compose(&s))
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_ratmap())
    }
}

impl fmt::Debug for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mobius({self})")
    }
}
