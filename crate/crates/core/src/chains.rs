//! Chains of elementary transformations `U_i∘V_i = V_{i+1}∘U_{i+1}` and
//! the length bounds attached to them.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::equations::{is_good_solution, SolutionSquare};
use crate::numeric::Rational;
use crate::orbifold::{orbifolds_of_map, Orbifold};
use crate::ratmap::RatMap;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    steps: Vec<(RatMap, RatMap)>,
    relaxed: bool,
}

impl Chain {
    /// A chain with all `deg U_i, deg V_i >= 2`. Linking is not checked
    /// here; see [`validate_chain`].
    pub fn new(steps: Vec<(RatMap, RatMap)>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::InvalidInput(
                "a chain needs at least one step".into(),
            ));
        }
        if steps.iter().any(|(u, v)| u.degree() < 2 || v.degree() < 2) {
            return Err(Error::InvalidInput(
                "chain maps must have degree >= 2".into(),
            ));
        }
        Ok(Chain {
            steps,
            relaxed: false,
        })
    }

    /// A chain that may contain degree-one maps, as recorded by the
    /// decomposition engine. May be empty.
    pub fn relaxed(steps: Vec<(RatMap, RatMap)>) -> Self {
        let relaxed = steps.iter().any(|(u, v)| u.degree() < 2 || v.degree() < 2);
        Chain { steps, relaxed }
    }

    pub fn steps(&self) -> &[(RatMap, RatMap)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    /// `V_1∘U_1`.
    pub fn basis(&self) -> Option<RatMap> {
        self.steps.first().map(|(u, v)| v.compose(u))
    }

    /// `deg U_i` and `deg V_i` of the first step.
    pub fn degrees(&self) -> Option<(usize, usize)> {
        self.steps.first().map(|(u, v)| (u.degree(), v.degree()))
    }
}

pub fn validate_chain(c: &Chain) -> bool {
    c.steps
        .windows(2)
        .all(|w| w[0].0.compose(&w[0].1) == w[1].1.compose(&w[1].0))
}

/// `V∘U` from `F = U∘V`.
pub fn elementary_transform(f: &RatMap, u: &RatMap, v: &RatMap) -> Result<RatMap> {
    if &u.compose(v) != f {
        return Err(Error::InvalidDecomposition(format!(
            "({u})∘({v}) differs from {f}"
        )));
    }
    Ok(v.compose(u))
}

/// `U'_i = V_{s+1-i}`, `V'_i = U_{s+1-i}`.
pub fn dual_chain(c: &Chain) -> Chain {
    Chain {
        steps: c
            .steps
            .iter()
            .rev()
            .map(|(u, v)| (v.clone(), u.clone()))
            .collect(),
        relaxed: c.relaxed,
    }
}

/// Steps `i1..=i2`, 1-based.
pub fn subchain(c: &Chain, i1: usize, i2: usize) -> Result<Chain> {
    if i1 < 1 || i1 > i2 || i2 > c.len() {
        return Err(Error::InvalidInput(format!(
            "subchain range {i1}..{i2} outside 1..{}",
            c.len()
        )));
    }
    Ok(Chain::relaxed(c.steps[i1 - 1..i2].to_vec()))
}

/// A chain with `U_i = a`, `V_i = b` for commuting `a`, `b`.
pub fn constant_chain(a: &RatMap, b: &RatMap, s: usize) -> Result<Chain> {
    Chain::new(vec![(a.clone(), b.clone()); s])
}

/// Glues squares `A∘C = D∘B` into the chain `(A, C), (B, D), ...`; each
/// square's `(B, D)` must be the next square's `(A, C)`.
pub fn chain_from_squares(squares: &[SolutionSquare]) -> Result<Chain> {
    let Some(first) = squares.first() else {
        return Err(Error::InvalidInput("no squares".into()));
    };
    let mut steps = vec![(first.a.clone(), first.c.clone())];
    for (i, s) in squares.iter().enumerate() {
        if let Some(next) = squares.get(i + 1) {
            if next.a != s.b || next.c != s.d {
                return Err(Error::InvalidDecomposition(format!(
                    "square {} does not continue square {}",
                    i + 2,
                    i + 1
                )));
            }
        }
        steps.push((s.b.clone(), s.d.clone()));
    }
    Chain::new(steps)
}

fn link(c: &Chain, i: usize) -> Option<SolutionSquare> {
    let (a, cc) = c.steps[i].clone();
    let (b, d) = c.steps[i + 1].clone();
    SolutionSquare::new(a, cc, d, b).ok()
}

/// Every link `U_i∘V_i = V_{i+1}∘U_{i+1}` is a good solution.
pub fn is_good_chain(c: &Chain) -> bool {
    !c.relaxed
        && (0..c.len().saturating_sub(1))
            .all(|i| link(c, i).is_some_and(|s| is_good_solution(&s).verdict))
}

fn second_orbifolds(c: &Chain) -> Result<(Vec<Orbifold>, Vec<Orbifold>)> {
    if c.relaxed {
        return Err(Error::Undefined("chain has maps of degree < 2".into()));
    }
    let mut us = Vec::new();
    let mut vs = Vec::new();
    for (u, v) in &c.steps {
        us.push(orbifolds_of_map(u)?.1);
        vs.push(orbifolds_of_map(v)?.1);
    }
    Ok((us, vs))
}

/// A good chain with `χ(O_2^{U_i}) >= 0` and `χ(O_2^{V_i}) >= 0` for all `i`.
pub fn is_nonnegative(c: &Chain) -> bool {
    is_good_chain(c)
        && second_orbifolds(c)
            .is_ok_and(|(us, vs)| us.iter().chain(&vs).all(|o| !o.euler_char().is_negative()))
}

/// A good chain where the signatures of the `O_2^{U_i}` agree, and so do
/// those of the `O_2^{V_i}`.
pub fn is_stable(c: &Chain) -> bool {
    is_good_chain(c)
        && second_orbifolds(c).is_ok_and(|(us, vs)| {
            let same = |v: &[Orbifold]| v.windows(2).all(|w| w[0].signature() == w[1].signature());
            same(&us) && same(&vs)
        })
}

fn stable_chi(c: &Chain, first: bool) -> Result<Rational> {
    if !is_stable(c) {
        return Err(Error::Undefined(
            "χ is defined for stable chains only".into(),
        ));
    }
    let (u, v) = &c.steps[0];
    let m = if first { u } else { v };
    Ok(orbifolds_of_map(m)?.1.euler_char())
}

/// `χ(O_2^{U_1})` of a stable chain.
pub fn chi1(c: &Chain) -> Result<Rational> {
    stable_chi(c, true)
}

/// `χ(O_2^{V_1})` of a stable chain.
pub fn chi2(c: &Chain) -> Result<Rational> {
    stable_chi(c, false)
}

/// `coeff·log2(arg) + offset`, compared against integers exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogBound {
    coeff: Rational,
    arg: BigUint,
    offset: Rational,
}

impl LogBound {
    pub fn new(coeff: Rational, arg: BigUint, offset: Rational) -> Result<Self> {
        if coeff.is_negative() || arg.is_zero() {
            return Err(Error::InvalidInput("need coeff >= 0 and arg >= 1".into()));
        }
        // Fold exact powers of two into the offset.
        let (coeff, arg, offset) = if arg.count_ones() == 1 {
            let k = Rational::from_integer(BigInt::from(arg.bits() - 1));
            (Rational::zero(), BigUint::one(), offset + coeff * k)
        } else {
            (coeff, arg, offset)
        };
        Ok(LogBound { coeff, arg, offset })
    }

    pub fn constant(c: Rational) -> Self {
        LogBound {
            coeff: Rational::zero(),
            arg: BigUint::one(),
            offset: c,
        }
    }

    /// The value, when it is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeff.is_zero().then_some(&self.offset)
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn arg(&self) -> &BigUint {
        &self.arg
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// Orders the rational `x` against the bound.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if self.coeff.is_zero() {
            return x.cmp(&self.offset);
        }
        // x vs c·log2(a) + o  <=>  (x - o)/c = p/q vs log2(a)  <=>  2^p vs a^q
        let r = (x - &self.offset) / &self.coeff;
        if !r.is_positive() {
            // log2(a) > 0 here since a is not a power of two.
            return Ordering::Less;
        }
        let p = r.numer().to_u32().expect("exponent too large");
        let q = r.denom().to_u32().expect("exponent too large");
        (BigUint::one() << p).cmp(&self.arg.pow(q))
    }

    pub fn cmp_int(&self, n: i64) -> Ordering {
        self.cmp_rational(&Rational::from_integer(n.into()))
    }

    /// `n <= bound`.
    pub fn admits(&self, n: i64) -> bool {
        self.cmp_int(n) != Ordering::Greater
    }

    pub fn floor(&self) -> BigInt {
        let log_floor = Rational::from_integer(BigInt::from(self.arg.bits() - 1));
        let lo = (&self.coeff * &log_floor + &self.offset)
            .floor()
            .to_integer();
        let mut n = lo;
        while self.cmp_rational(&Rational::from_integer(&n + 1)) != Ordering::Greater {
            n += 1;
        }
        n
    }

    pub fn ceil(&self) -> BigInt {
        let f = self.floor();
        if self.cmp_rational(&Rational::from_integer(f.clone())) == Ordering::Equal {
            f
        } else {
            f + 1
        }
    }

    fn scaled(&self, k: &Rational, add: &Rational) -> LogBound {
        LogBound {
            coeff: &self.coeff * k,
            arg: self.arg.clone(),
            offset: &self.offset * k + add,
        }
    }
}

impl fmt::Display for LogBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() {
            return write!(f, "{}", self.offset);
        }
        if !self.coeff.is_one() {
            write!(f, "{}*", self.coeff)?;
        }
        write!(f, "log2({})", self.arg)?;
        if self.offset.is_positive() {
            write!(f, " + {}", self.offset)?;
        } else if self.offset.is_negative() {
            write!(f, " - {}", -self.offset.clone())?;
        }
        Ok(())
    }
}

impl Serialize for LogBound {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn need_d4(d: u64) -> Result<()> {
    if d < 4 {
        return Err(Error::InvalidInput(format!(
            "bound defined for d >= 4, got {d}"
        )));
    }
    Ok(())
}

/// `θ(4) = 1`, `θ(d) = log2(84(d-4))` for `d > 4`.
pub fn theta_bound(d: u64) -> Result<LogBound> {
    need_d4(d)?;
    if d == 4 {
        return Ok(LogBound::constant(Rational::one()));
    }
    LogBound::new(
        Rational::one(),
        BigUint::from(84 * (d - 4)),
        Rational::zero(),
    )
}

/// `2θ(d) + 26`: longest possible good chain with non-special basis.
pub fn good_chain_length_bound(d: u64) -> Result<LogBound> {
    Ok(theta_bound(d)?.scaled(
        &Rational::from_integer(2.into()),
        &Rational::from_integer(26.into()),
    ))
}

/// `(2θ(d) + 26)(d/2 - 1)`: bound on the number of Lüroth steps.
pub fn luroth_step_bound(d: u64) -> Result<LogBound> {
    let k = Rational::new(BigInt::from(d) - 2, 2.into());
    Ok(good_chain_length_bound(d)?.scaled(&k, &Rational::zero()))
}

/// `2θ(d) + k - 2`: a good chain at least this long has a non-negative
/// subchain of length `k`.
pub fn nonneg_subchain_bound(d: u64, k: u64) -> Result<LogBound> {
    Ok(theta_bound(d)?.scaled(
        &Rational::from_integer(2.into()),
        &(Rational::from_integer(BigInt::from(k)) - Rational::from_integer(2.into())),
    ))
}

/// `⌈s/7⌉`: guaranteed length of a stable subchain of a non-negative chain
/// of length `s`.
pub fn stable_subchain_bound(s: u64) -> u64 {
    s.div_ceil(7)
}

/// `max(60, 2d - 1)`: degree bound for primitive solutions.
pub fn primitive_degree_bound(d: u64) -> u64 {
    60.max(2 * d - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::{good_solution_family, GFamily};
    use crate::families::{make, FamilyTag};

    fn t(n: u32) -> RatMap {
        make(FamilyTag::Chebyshev(n)).unwrap()
    }

    #[test]
    fn constant_chebyshev_chain() {
        let c = constant_chain(&t(2), &t(3), 4).unwrap();
        assert!(validate_chain(&c));
        assert!(is_good_chain(&c) && is_stable(&c) && is_nonnegative(&c));
        assert_eq!(chi1(&c).unwrap(), Rational::one());
        assert_eq!(chi2(&c).unwrap(), Rational::new(1.into(), 3.into()));
        assert_eq!(c.basis().unwrap(), t(6));
        let d = dual_chain(&c);
        assert_eq!(d, constant_chain(&t(3), &t(2), 4).unwrap());
        assert_eq!(dual_chain(&d), c);
    }

    #[test]
    fn validation() {
        let z = RatMap::power;
        let c = Chain::new(vec![(z(2), z(3)), (z(3), z(2))]).unwrap();
        assert!(validate_chain(&c));
        let shifted = RatMap::from_i64(&[1, 0, 1], &[1]).unwrap();
        let c = Chain::new(vec![(z(2), z(3)), (shifted, z(3))]).unwrap();
        assert!(!validate_chain(&c));
        let c = constant_chain(&z(2), &z(2), 3).unwrap();
        assert!(validate_chain(&c) && !is_good_chain(&c));
    }

    #[test]
    fn transforms() {
        let z = RatMap::power;
        assert_eq!(elementary_transform(&z(6), &z(2), &z(3)).unwrap(), z(6));
        let g = make(FamilyTag::GammaMap).unwrap();
        let d = make(FamilyTag::Delta).unwrap();
        let o = make(FamilyTag::Omega).unwrap();
        assert_eq!(elementary_transform(&o, &g, &d).unwrap(), o);
        let v = RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap();
        let f = z(2).compose(&v);
        assert_eq!(
            elementary_transform(&f, &z(2), &v).unwrap(),
            RatMap::from_i64(&[0, 0, 1, 0, 0, 0, 1], &[1]).unwrap()
        );
        assert!(elementary_transform(&z(5), &z(2), &z(3)).is_err());
    }

    #[test]
    fn subchains_and_squares() {
        let c = constant_chain(&t(2), &t(3), 4).unwrap();
        assert_eq!(subchain(&c, 1, 4).unwrap().steps(), c.steps());
        assert_eq!(subchain(&c, 1, 2).unwrap().len(), 2);
        let inner = subchain(&subchain(&c, 2, 4).unwrap(), 1, 2).unwrap();
        assert_eq!(inner.steps(), subchain(&c, 2, 3).unwrap().steps());
        assert!(subchain(&c, 3, 2).is_err() && subchain(&c, 0, 1).is_err());

        let sq = good_solution_family(GFamily::III, 0, 0).unwrap();
        let c = chain_from_squares(&[sq]).unwrap();
        assert!(validate_chain(&c) && validate_chain(&dual_chain(&c)));
        assert!(is_good_chain(&c));
    }

    #[test]
    fn unstable_chi_is_undefined() {
        let z = RatMap::power;
        let c = Chain::new(vec![(z(2), z(3)), (z(3), z(2))]).unwrap();
        assert!(!is_stable(&c));
        assert!(matches!(chi1(&c), Err(Error::Undefined(_))));
    }

    #[test]
    fn bounds() {
        assert_eq!(
            theta_bound(4).unwrap().as_rational(),
            Some(&Rational::one())
        );
        let t5 = theta_bound(5).unwrap();
        assert_eq!(t5.cmp_int(6), Ordering::Less);
        assert_eq!(t5.cmp_int(7), Ordering::Greater);
        let t88 = theta_bound(88).unwrap();
        assert!(t88.cmp_int(12) == Ordering::Less && t88.cmp_int(13) == Ordering::Greater);
        assert_eq!(good_chain_length_bound(4).unwrap().to_string(), "28");
        assert_eq!(luroth_step_bound(4).unwrap().to_string(), "28");
        assert_eq!(good_chain_length_bound(5).unwrap().floor(), 38.into());
        assert!(theta_bound(3).is_err());
        assert_eq!(stable_subchain_bound(29), 5);
        assert_eq!(stable_subchain_bound(7), 1);
        assert_eq!(stable_subchain_bound(14), 2);
        assert_eq!(primitive_degree_bound(4), 60);
        assert_eq!(primitive_degree_bound(40), 79);
        assert_eq!(t5.to_string(), "log2(84)");
        assert_eq!(nonneg_subchain_bound(4, 5).unwrap().to_string(), "5");
    }
}
