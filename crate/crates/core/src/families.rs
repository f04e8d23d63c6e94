//! Explicit maps: powers, Chebyshev polynomials, `Z_n`, Δ, Γ, Ω, the three
//! maps with signature {2,3,3}, and the self-maps `z^r R^n` and their
//! `T`-symmetric relatives.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::numeric::{frac, rat, Polynomial, Rational};
use crate::ratmap::{right_divide, RatMap};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lattes233 {
    Deg12,
    Deg4,
    Deg6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyTag {
    Power(u32),
    Chebyshev(u32),
    Zhukovsky(u32),
    Delta,
    GammaMap,
    Omega,
    Lattes233(Lattes233),
    ThetaCyclic(u32),
    ThetaDihedral(u32),
}

/// `T_n` by the three-term recurrence.
pub fn chebyshev(n: u32) -> Polynomial {
    let two_z = Polynomial::from_i64(&[0, 2]);
    let mut a = Polynomial::one();
    let mut b = Polynomial::x();
    if n == 0 {
        return a;
    }
    for _ in 1..n {
        let c = &(&two_z * &b) - &a;
        a = b;
        b = c;
    }
    b
}

/// `T_n = (n/2) sum_k (-1)^k (n-k-1)!/(k!(n-2k)!) (2z)^(n-2k)` for `n >= 1`.
pub fn chebyshev_closed_sum(n: u32) -> Polynomial {
    assert!(n >= 1);
    let fact = |m: u32| -> BigInt { (1..=m).fold(BigInt::one(), |acc, i| acc * i) };
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    for k in 0..=n / 2 {
        let c = Rational::new(fact(n - k - 1), fact(k) * fact(n - 2 * k))
            * Rational::from_integer(BigInt::from(2).pow(n - 2 * k))
            * Rational::new(BigInt::from(n), BigInt::from(2));
        coeffs[(n - 2 * k) as usize] = if k % 2 == 1 { -c } else { c };
    }
    Polynomial::new(coeffs)
}

/// `Z_n = (z^n + z^-n)/2`.
pub fn zhukovsky(n: u32) -> RatMap {
    let n = n as usize;
    let mut num = vec![Rational::zero(); 2 * n + 1];
    num[0] = Rational::one();
    num[2 * n] = Rational::one();
    RatMap::new(Polynomial::new(num), Polynomial::monomial(rat(2), n)).unwrap()
}

fn delta() -> RatMap {
    RatMap::new(
        Polynomial::from_i64(&[0, 27]),
        Polynomial::from_i64(&[-1, 4]).pow(3),
    )
    .unwrap()
}

fn gamma() -> RatMap {
    // -64 z (z-1)^3 / (8z+1)^3
    RatMap::new(
        &Polynomial::from_i64(&[0, -64]) * &Polynomial::from_i64(&[-1, 1]).pow(3),
        Polynomial::from_i64(&[1, 8]).pow(3),
    )
    .unwrap()
}

/// Ω as printed in closed form; `make(Omega)` is the composition Γ∘Δ.
pub fn omega_printed() -> RatMap {
    let p = Polynomial::from_i64;
    let num = (&(&p(&[-1, 1]).pow(3) * &p(&[1, 8]).pow(6)) * &p(&[0, 1])).scale(&rat(1728));
    let den = &p(&[-1, 228, -48, 64]).pow(3) * &p(&[-1, 4]).pow(3);
    RatMap::new(num, den).unwrap()
}

fn lattes233(v: Lattes233) -> RatMap {
    let p = Polynomial::from_i64;
    let c = frac(-1, 64);
    match v {
        Lattes233::Deg12 => RatMap::new(
            (&p(&[0, 0, 0, 1]) * &p(&[-8, 0, 0, 1]).pow(3)).scale(&c),
            p(&[1, 0, 0, 1]).pow(3),
        ),
        Lattes233::Deg4 => RatMap::new(
            (&p(&[0, 1]) * &p(&[-8, 1]).pow(3)).scale(&c),
            p(&[1, 1]).pow(3),
        ),
        Lattes233::Deg6 => RatMap::new(p(&[-4, 0, 1]).pow(3).scale(&c), p(&[-1, 1]).pow(3)),
    }
    .unwrap()
}

pub fn make(tag: FamilyTag) -> Result<RatMap> {
    let need = |n: u32| {
        if n == 0 {
            Err(Error::InvalidInput(format!("{tag}: index must be >= 1")))
        } else {
            Ok(n)
        }
    };
    Ok(match tag {
        FamilyTag::Power(n) | FamilyTag::ThetaCyclic(n) => RatMap::power(need(n)? as i32),
        FamilyTag::Chebyshev(n) => RatMap::from_poly(chebyshev(need(n)?)),
        FamilyTag::Zhukovsky(n) | FamilyTag::ThetaDihedral(n) => zhukovsky(need(n)?),
        FamilyTag::Delta => delta(),
        FamilyTag::GammaMap => gamma(),
        FamilyTag::Omega => gamma().compose(&delta()),
        FamilyTag::Lattes233(v) => lattes233(v),
    })
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Power(n) => write!(f, "pow({n})"),
            FamilyTag::Chebyshev(n) => write!(f, "T({n})"),
            FamilyTag::Zhukovsky(n) => write!(f, "Z({n})"),
            FamilyTag::Delta => f.write_str("Delta"),
            FamilyTag::GammaMap => f.write_str("Gamma"),
            FamilyTag::Omega => f.write_str("Omega"),
            FamilyTag::Lattes233(Lattes233::Deg12) => f.write_str("lattes233_12"),
            FamilyTag::Lattes233(Lattes233::Deg4) => f.write_str("lattes233_4"),
            FamilyTag::Lattes233(Lattes233::Deg6) => f.write_str("lattes233_6"),
            FamilyTag::ThetaCyclic(n) => write!(f, "theta_cyclic({n})"),
            FamilyTag::ThetaDihedral(n) => write!(f, "theta_dihedral({n})"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let indexed = |name: &str| -> Option<u32> {
            s.strip_prefix(name)?
                .strip_prefix('(')?
                .strip_suffix(')')?
                .trim()
                .parse()
                .ok()
        };
        let tag = match s {
            "Delta" => FamilyTag::Delta,
            "Gamma" => FamilyTag::GammaMap,
            "Omega" => FamilyTag::Omega,
            "lattes233_12" => FamilyTag::Lattes233(Lattes233::Deg12),
            "lattes233_4" => FamilyTag::Lattes233(Lattes233::Deg4),
            "lattes233_6" => FamilyTag::Lattes233(Lattes233::Deg6),
            _ => {
                if let Some(n) = indexed("T") {
                    FamilyTag::Chebyshev(n)
                } else if let Some(n) = indexed("Z") {
                    FamilyTag::Zhukovsky(n)
                } else if let Some(n) = indexed("pow") {
                    FamilyTag::Power(n)
                } else if let Some(n) = indexed("theta_cyclic") {
                    FamilyTag::ThetaCyclic(n)
                } else if let Some(n) = indexed("theta_dihedral") {
                    FamilyTag::ThetaDihedral(n)
                } else {
                    return Err(Error::InvalidInput(format!("unknown family {s:?}")));
                }
            }
        };
        Ok(tag)
    }
}

/// Recognizes a map as a family member, for printing by name.
pub fn recognize(f: &RatMap) -> Option<FamilyTag> {
    let d = f.degree() as u32;
    if d < 2 {
        return None;
    }
    let mut cands = vec![FamilyTag::Power(d), FamilyTag::Chebyshev(d)];
    if d.is_multiple_of(2) {
        cands.push(FamilyTag::Zhukovsky(d / 2));
    }
    cands.extend([FamilyTag::Delta, FamilyTag::GammaMap, FamilyTag::Omega]);
    cands.extend([Lattes233::Deg12, Lattes233::Deg4, Lattes233::Deg6].map(FamilyTag::Lattes233));
    cands.into_iter().find(|t| make(*t).is_ok_and(|m| m == *f))
}

/// Whether `G(1/z) = 1/G(z)`.
pub fn in_frak_t(g: &RatMap) -> bool {
    if g.num().is_zero() {
        return false;
    }
    let lhs = g.compose(&RatMap::power(-1));
    RatMap::constant(Rational::one())
        .div(g)
        .is_ok_and(|rhs| rhs == lhs)
}

fn check_rn(r: u32, n: u32) -> Result<()> {
    if r == 0 || n < 2 || r > n - 1 || r.gcd(&n) != 1 {
        return Err(Error::InvalidInput(format!(
            "need 1 <= r <= n-1 with gcd(r, n) = 1, got r = {r}, n = {n}"
        )));
    }
    Ok(())
}

/// `z^r R(z)^n`, a minimal holomorphic self-map of `{n@0, n@inf}`.
pub fn cyclic_self_map(r: u32, big_r: &RatMap, n: u32) -> Result<RatMap> {
    check_rn(r, n)?;
    Ok(RatMap::power(r as i32).mul(&big_r.pow(n as i64)?))
}

/// The map `A` with `A∘Z_1 = Z_1∘(s z^r S(z)^n)` for `S` in the `T`-symmetric
/// set, `s = ±1`; a minimal holomorphic self-map of `{2@-1, 2@1, n@inf}`.
/// Both signs always have rational solutions (`A_- = -A_+`).
pub fn dihedral_self_map(r: u32, s: &RatMap, n: u32, sign: i8) -> Result<RatMap> {
    check_rn(r, n)?;
    if !in_frak_t(s) {
        return Err(Error::InvalidInput(format!(
            "{s} does not satisfy G(1/z) = 1/G(z)"
        )));
    }
    let g = RatMap::power(r as i32).mul(&s.pow(n as i64)?);
    let g = if sign < 0 { g.neg() } else { g };
    let z1 = zhukovsky(1);
    right_divide(&z1.compose(&g), &z1)
        .ok_or_else(|| Error::Unresolved("no rational solution of A∘Z_1 = Z_1∘G".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chebyshev_matches_closed_sum() {
        for n in 1..=15 {
            assert_eq!(chebyshev(n), chebyshev_closed_sum(n), "n = {n}");
        }
        assert_eq!(chebyshev(3), Polynomial::from_i64(&[0, -3, 0, 4]));
    }

    #[test]
    fn omega_identities() {
        let o = make(FamilyTag::Omega).unwrap();
        assert_eq!(o, omega_printed());
        assert_eq!(o, delta().compose(&gamma()));
    }

    #[test]
    fn frak_t() {
        assert!(in_frak_t(&RatMap::identity()));
        assert!(in_frak_t(&RatMap::from_i64(&[-2, 1], &[-1, 2]).unwrap()));
        assert!(!in_frak_t(&RatMap::from_i64(&[1, 1], &[1]).unwrap()));
    }

    #[test]
    fn cyclic_examples() {
        let zp1 = RatMap::from_i64(&[1, 1], &[1]).unwrap();
        assert_eq!(
            cyclic_self_map(1, &zp1, 2).unwrap(),
            RatMap::from_i64(&[0, 1, 2, 1], &[1]).unwrap()
        );
        assert!(cyclic_self_map(2, &zp1, 4).is_err());
        let one = RatMap::constant(rat(1));
        assert!(cyclic_self_map(1, &one, 3).unwrap().is_identity());
    }

    #[test]
    fn dihedral_chebyshev_degenerations() {
        let z = RatMap::identity();
        assert_eq!(
            dihedral_self_map(1, &z, 2, 1).unwrap(),
            make(FamilyTag::Chebyshev(3)).unwrap()
        );
        assert_eq!(
            dihedral_self_map(1, &z, 2, -1).unwrap(),
            make(FamilyTag::Chebyshev(3)).unwrap().neg()
        );
        let one = RatMap::constant(rat(1));
        assert!(dihedral_self_map(1, &one, 3, 1).unwrap().is_identity());
    }

    #[test]
    fn tags_round_trip() {
        for s in [
            "T(3)",
            "Z(2)",
            "pow(5)",
            "Delta",
            "Gamma",
            "Omega",
            "lattes233_4",
        ] {
            assert_eq!(s.parse::<FamilyTag>().unwrap().to_string(), s);
        }
    }
}
