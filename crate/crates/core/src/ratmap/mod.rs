//! Rational maps of the projective line.

mod divide;
mod mobius;
mod mu;
mod point;

pub use divide::right_divide;
pub use mobius::MobiusMap;
pub use mu::{classify_mu_equivalence, MuClass, MuEquivalence};
pub use point::ProjectivePoint;

use std::fmt;

use num_traits::{One, Zero};

use crate::numeric::{Polynomial, Rational};
use crate::{Error, Result};

/// A rational function `num/den` in lowest terms with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMap {
    num: Polynomial,
    den: Polynomial,
}

impl RatMap {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::constant(Rational::zero()));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        let l = den.lc().recip();
        Ok(RatMap {
            num: num.scale(&l),
            den: den.scale(&l),
        })
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one()).unwrap()
    }

    pub fn from_i64(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(Polynomial::from_i64(num), Polynomial::from_i64(den))
    }

    pub fn constant(c: Rational) -> Self {
        RatMap {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn identity() -> Self {
        Self::from_poly(Polynomial::x())
    }

    /// `z^n` for `n >= 0`, `1/z^|n|` for negative `n`.
    pub fn power(n: i32) -> Self {
        let m = Polynomial::monomial(Rational::one(), n.unsigned_abs() as usize);
        if n >= 0 {
            Self::from_poly(m)
        } else {
            Self::new(Polynomial::one(), m).unwrap()
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_identity(&self) -> bool {
        self.den.is_one() && self.num == Polynomial::x()
    }

    /// `self o g`.
    pub fn compose(&self, g: &RatMap) -> RatMap {
        let k = self.degree();
        let n = self.num.homogenize_compose(&g.num, &g.den, k);
        let d = self.den.homogenize_compose(&g.num, &g.den, k);
        RatMap::new(n, d).unwrap()
    }

    /// `k`-fold composition; `iterate(0)` is the identity.
    pub fn iterate(&self, k: u32) -> RatMap {
        let mut r = RatMap::identity();
        for _ in 0..k {
            r = self.compose(&r);
        }
        r
    }

    /// `m o self o m^{-1}`.
    pub fn conjugate(&self, m: &MobiusMap) -> RatMap {
        m.to_ratmap()
            .compose(self)
            .compose(&m.inverse().to_ratmap())
    }

    pub fn eval(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        match p {
            ProjectivePoint::Finite(a) => {
                let d = self.den.eval(a);
                if d.is_zero() {
                    Ok(ProjectivePoint::Infinity)
                } else {
                    Ok(ProjectivePoint::Finite(self.num.eval(a) / d))
                }
            }
            ProjectivePoint::Infinity => Ok(self.value_at_infinity()),
            ProjectivePoint::Algebraic(_) => Err(Error::UnsupportedPoint(format!(
                "eval at algebraic class {p}"
            ))),
        }
    }

    fn value_at_infinity(&self) -> ProjectivePoint {
        let (dn, dd) = (self.num.degree(), self.den.deg());
        match dn {
            None => ProjectivePoint::Finite(Rational::zero()),
            Some(dn) if dn > dd => ProjectivePoint::Infinity,
            Some(dn) if dn == dd => ProjectivePoint::Finite(self.num.lc() / self.den.lc()),
            _ => ProjectivePoint::Finite(Rational::zero()),
        }
    }

    /// `P'Q - PQ'`: its roots off the poles are the finite critical points.
    pub fn wronskian(&self) -> Polynomial {
        &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative())
    }

    /// Local degree at a point (or at each point of an algebraic class).
    pub fn local_degree(&self, p: &ProjectivePoint) -> Result<u32> {
        if self.is_constant() {
            return Err(Error::InvalidInput("local degree of a constant map".into()));
        }
        let n = self.degree();
        match p {
            ProjectivePoint::Infinity => Ok(match self.value_at_infinity() {
                ProjectivePoint::Infinity => (n - self.den.deg()) as u32,
                ProjectivePoint::Finite(v) => {
                    let g = &self.num - &self.den.scale(&v);
                    (n - g.deg()) as u32
                }
                ProjectivePoint::Algebraic(_) => unreachable!(),
            }),
            _ => {
                let m = p.min_poly().unwrap();
                let in_den = self.den.multiplicity(&m);
                if in_den > 0 {
                    Ok(in_den)
                } else {
                    let w = self.wronskian();
                    Ok(1 + if w.is_zero() { 0 } else { w.multiplicity(&m) })
                }
            }
        }
    }

    /// Field operations in Q(z).
    pub fn add(&self, o: &RatMap) -> RatMap {
        RatMap::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn sub(&self, o: &RatMap) -> RatMap {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatMap {
        RatMap {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &RatMap) -> RatMap {
        RatMap::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RatMap) -> Result<RatMap> {
        if o.num.is_zero() {
            return Err(Error::InvalidInput("division by the zero function".into()));
        }
        RatMap::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn scale(&self, c: &Rational) -> RatMap {
        RatMap::new(self.num.scale(c), self.den.clone()).unwrap()
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, k: i64) -> Result<RatMap> {
        let e = k.unsigned_abs() as u32;
        let r = RatMap::new(self.num.pow(e), self.den.pow(e)).unwrap();
        if k < 0 {
            RatMap::constant(Rational::one()).div(&r)
        } else {
            Ok(r)
        }
    }

    /// Grammar form, e.g. `(27*z)/(64*z^3 - 48*z^2 + 12*z - 1)`.
    pub fn text(&self) -> String {
        if self.den.is_one() {
            self.num.to_string()
        } else {
            format!("({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Display for RatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

impl fmt::Debug for RatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMap({self})")
    }
}

/// `f o g`.
pub fn compose(f: &RatMap, g: &RatMap) -> RatMap {
    f.compose(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    fn delta() -> RatMap {
        // 27z/(4z-1)^3
        RatMap::new(
            Polynomial::from_i64(&[0, 27]),
            Polynomial::from_i64(&[-1, 4]).pow(3),
        )
        .unwrap()
    }

    #[test]
    fn canonical_form() {
        let f = RatMap::from_i64(&[0, 2], &[0, 0, 4]).unwrap();
        assert_eq!(f, RatMap::from_i64(&[1, 0], &[0, 2]).unwrap());
        assert_eq!(f.den(), &Polynomial::from_i64(&[0, 1]));
    }

    #[test]
    fn compose_iterate_conjugate() {
        assert_eq!(
            RatMap::power(2).compose(&RatMap::power(3)),
            RatMap::power(6)
        );
        assert_eq!(RatMap::power(2).iterate(3), RatMap::power(8));
        assert!(delta().iterate(0).is_identity());
        let m = MobiusMap::translation(crate::numeric::rat(1));
        assert_eq!(
            RatMap::power(2).conjugate(&m),
            RatMap::from_i64(&[2, -2, 1], &[1]).unwrap()
        );
    }

    #[test]
    fn eval_and_local_degree() {
        let inv = RatMap::power(-1);
        assert_eq!(
            inv.eval(&ProjectivePoint::finite(0)).unwrap(),
            ProjectivePoint::Infinity
        );
        let q = ProjectivePoint::frac(1, 4);
        assert_eq!(delta().eval(&q).unwrap(), ProjectivePoint::Infinity);
        assert_eq!(
            delta().eval(&ProjectivePoint::finite(0)).unwrap(),
            ProjectivePoint::finite(0)
        );
        assert_eq!(delta().local_degree(&q).unwrap(), 3);
        assert_eq!(delta().local_degree(&ProjectivePoint::Infinity).unwrap(), 2);
        assert_eq!(
            RatMap::power(3)
                .local_degree(&ProjectivePoint::finite(0))
                .unwrap(),
            3
        );
        let t3 = RatMap::from_i64(&[0, -3, 0, 4], &[1]).unwrap();
        assert_eq!(t3.local_degree(&ProjectivePoint::frac(-1, 2)).unwrap(), 2);
        assert_eq!(t3.local_degree(&ProjectivePoint::Infinity).unwrap(), 3);
        assert_eq!(
            delta().eval(&ProjectivePoint::Infinity).unwrap(),
            ProjectivePoint::Finite(frac(0, 1))
        );
    }
}
