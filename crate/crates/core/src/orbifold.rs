//! Orbifolds on the sphere and maps between them.
//!
//! An orbifold is a ramification function `ν`, equal to 1 off a finite set.
//! Support points may be algebraic classes; such a class stands for all of
//! its conjugates, each with the same index.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::families::{FamilyTag, Lattes233 as L233};
use crate::numeric::Rational;
use crate::ramification::{critical_points, critical_values, fiber, image_class};
use crate::ratmap::{ProjectivePoint, RatMap};
use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbifold {
    nu: BTreeMap<ProjectivePoint, u64>,
}

/// Sorted multiset of ramification indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature(pub Vec<u64>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SignatureClass {
    Unramified,
    PositiveSphere(u64),
    PositiveDihedral(u64),
    Tetra,
    Octa,
    Icosa,
    Zero2222,
    Zero333,
    Zero244,
    Zero236,
    Negative,
    NonOrbifoldException,
}

impl Signature {
    pub fn new(mut v: Vec<u64>) -> Self {
        v.retain(|&x| x > 1);
        v.sort_unstable();
        Signature(v)
    }

    pub fn euler_char(&self) -> Rational {
        let mut chi = Rational::from_integer(2.into());
        for &n in &self.0 {
            chi += Rational::new(BigInt::one(), BigInt::from(n)) - Rational::one();
        }
        chi
    }

    pub fn classify(&self) -> SignatureClass {
        use SignatureClass::*;
        match self.0.as_slice() {
            [] => Unramified,
            [_] => NonOrbifoldException,
            [a, b] if a == b => PositiveSphere(*a),
            [_, _] => NonOrbifoldException,
            [2, 2, n] => PositiveDihedral(*n),
            [2, 3, 3] => Tetra,
            [2, 3, 4] => Octa,
            [2, 3, 5] => Icosa,
            [2, 2, 2, 2] => Zero2222,
            [3, 3, 3] => Zero333,
            [2, 4, 4] => Zero244,
            [2, 3, 6] => Zero236,
            _ => Negative,
        }
    }

    /// Every index divides some index of `other`.
    pub fn nu_leq(&self, other: &Signature) -> bool {
        self.0.iter().all(|a| other.0.iter().any(|b| b % a == 0))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Signature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '{'])
            .trim_end_matches([')', '}']);
        let mut v = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let n: u64 = part
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad index {part:?}")))?;
            if n < 2 {
                return Err(Error::InvalidInput(format!("index {n} < 2")));
            }
            v.push(n);
        }
        Ok(Signature::new(v))
    }
}

impl Orbifold {
    pub fn unramified() -> Self {
        Self::default()
    }

    /// Indices equal to 1 are dropped; 0 is rejected.
    pub fn new<I: IntoIterator<Item = (ProjectivePoint, u64)>>(entries: I) -> Result<Self> {
        let mut nu = BTreeMap::new();
        for (p, n) in entries {
            if n == 0 {
                return Err(Error::InvalidInput(format!("index 0 at {p}")));
            }
            if n > 1 && nu.insert(p.clone(), n).is_some() {
                return Err(Error::InvalidInput(format!("point {p} listed twice")));
            }
        }
        Ok(Orbifold { nu })
    }

    pub fn nu(&self, p: &ProjectivePoint) -> u64 {
        self.nu.get(p).copied().unwrap_or(1)
    }

    pub fn support(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.nu.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ProjectivePoint, u64)> {
        self.nu.iter().map(|(p, n)| (p, *n))
    }

    pub fn is_unramified(&self) -> bool {
        self.nu.is_empty()
    }

    pub fn signature(&self) -> Signature {
        let mut v = Vec::new();
        for (p, &n) in &self.nu {
            v.extend(std::iter::repeat_n(n, p.class_degree()));
        }
        Signature::new(v)
    }

    pub fn euler_char(&self) -> Rational {
        self.signature().euler_char()
    }

    pub fn classify(&self) -> SignatureClass {
        self.signature().classify()
    }

    fn set(&mut self, p: ProjectivePoint, n: u64) {
        if n > 1 {
            self.nu.insert(p, n);
        } else {
            self.nu.remove(&p);
        }
    }
}

impl fmt::Display for Orbifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nu.iter().map(|(p, n)| format!("{n}@{p}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl FromStr for Orbifold {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidInput(format!("orbifold must be braced: {s:?}")))?;
        let mut entries = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (n, p) = part.split_once('@').ok_or_else(|| {
                Error::InvalidInput(format!("expected index@point, got {part:?}"))
            })?;
            let n: u64 = n
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad index {n:?}")))?;
            entries.push((p.trim().parse()?, n));
        }
        Orbifold::new(entries)
    }
}

impl Serialize for Orbifold {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn euler_char(o: &Orbifold) -> Rational {
    o.euler_char()
}

pub fn classify_signature(o: &Orbifold) -> SignatureClass {
    o.classify()
}

/// `(O_1^f, O_2^f)`: `ν_2` is the lcm of local degrees over each point and
/// `ν_1(z) = ν_2(f(z)) / deg_z f`.
pub fn orbifolds_of_map(f: &RatMap) -> Result<(Orbifold, Orbifold)> {
    if f.degree() < 2 {
        return Err(Error::InvalidInput(
            "orbifolds of a map need degree >= 2".into(),
        ));
    }
    let mut o1 = Orbifold::unramified();
    let mut o2 = Orbifold::unramified();
    for v in critical_values(f) {
        let fib = fiber(f, &v);
        let l = fib.iter().fold(1u64, |acc, (_, e)| acc.lcm(&(*e as u64)));
        o2.set(v, l);
        for (c, e) in fib {
            o1.set(c, l / e as u64);
        }
    }
    Ok((o1, o2))
}

/// `f^*O`: `ν_1(z) = ν(f(z)) / gcd(deg_z f, ν(f(z)))`.
pub fn pullback(f: &RatMap, o: &Orbifold) -> Result<Orbifold> {
    if f.degree() < 1 {
        return Err(Error::InvalidInput("pullback along a constant map".into()));
    }
    let mut out = Orbifold::unramified();
    for (y, n) in o.entries() {
        for (c, e) in fiber(f, y) {
            out.set(c, n / n.gcd(&(e as u64)));
        }
    }
    Ok(out)
}

/// `(ν_1(z), deg_z f, ν_2(f(z)))` over the points where any of them can
/// exceed 1; at every other point all three are 1.
fn local_data(f: &RatMap, o1: &Orbifold, o2: &Orbifold) -> Result<Vec<(u64, u64, u64)>> {
    if f.degree() < 1 {
        return Err(Error::InvalidInput(
            "map between orbifolds must be nonconstant".into(),
        ));
    }
    let mut pts: BTreeSet<ProjectivePoint> = o1.support().cloned().collect();
    pts.extend(critical_points(f).into_iter().map(|(p, _)| p));
    for y in o2.support() {
        pts.extend(fiber(f, y).into_iter().map(|(p, _)| p));
    }
    Ok(pts
        .into_iter()
        .map(|p| {
            let e = f.local_degree(&p).unwrap() as u64;
            (o1.nu(&p), e, o2.nu(&image_class(f, &p)))
        })
        .collect())
}

pub fn is_covering_map(f: &RatMap, o1: &Orbifold, o2: &Orbifold) -> bool {
    local_data(f, o1, o2).is_ok_and(|d| d.iter().all(|&(n1, e, n2)| n2 == n1 * e))
}

pub fn is_holomorphic_map(f: &RatMap, o1: &Orbifold, o2: &Orbifold) -> bool {
    local_data(f, o1, o2).is_ok_and(|d| d.iter().all(|&(n1, e, n2)| (n1 * e) % n2 == 0))
}

pub fn is_minimal_holomorphic(f: &RatMap, o1: &Orbifold, o2: &Orbifold) -> bool {
    local_data(f, o1, o2).is_ok_and(|d| d.iter().all(|&(n1, e, n2)| n2 == n1 * e.gcd(&n2)))
}

/// `ν(D(z)) = ν(z)` on the support, the conclusion for minimal holomorphic
/// self-maps of orbifolds with positive Euler characteristic.
pub fn preserves_indices(d: &RatMap, o: &Orbifold) -> bool {
    o.entries().all(|(p, n)| o.nu(&image_class(d, p)) == n)
}

/// `O ⪯ O'`: `ν(z) | ν'(z)` everywhere.
pub fn precedes(o: &Orbifold, other: &Orbifold) -> bool {
    o.entries().all(|(p, n)| other.nu(p).is_multiple_of(n))
}

pub fn nu_leq(o: &Orbifold, other: &Orbifold) -> bool {
    o.signature().nu_leq(&other.signature())
}

pub fn lcm_orbifolds(list: &[Orbifold]) -> Orbifold {
    let mut out = Orbifold::unramified();
    for o in list {
        for (p, n) in o.entries() {
            let cur = out.nu(p);
            out.set(p.clone(), cur.lcm(&n));
        }
    }
    out
}

/// One row of the list of covering maps `A: O_1 -> O_2` between orbifolds of
/// zero Euler characteristic with `χ(O_2^A) > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionRecord {
    /// Row in the full list of 17.
    pub case: u8,
    /// Row in the list of 7 with `ν(O_1) = ν(O_2)`.
    pub equal_signature_case: Option<u8>,
    pub signature_a: Signature,
    pub mu_type: FamilyTag,
    pub signature_1: Signature,
    pub signature_2: Signature,
}

// (case, ν(O_2^A), degree, μ-type, ν(O_1), ν(O_2))
type ExceptionRow = (
    u8,
    &'static [u64],
    usize,
    FamilyTag,
    &'static [u64],
    &'static [u64],
);

const EXCEPTIONS: [ExceptionRow; 17] = {
    use FamilyTag::*;
    const Q: &[u64] = &[2, 2, 2, 2];
    const T333: &[u64] = &[3, 3, 3];
    const T244: &[u64] = &[2, 4, 4];
    const T236: &[u64] = &[2, 3, 6];
    [
        (1, &[2, 2], 2, Power(2), Q, Q),
        (2, &[2, 2], 2, Power(2), T244, T244),
        (3, &[2, 2], 2, Power(2), Q, T244),
        (4, &[2, 2], 2, Power(2), T333, T236),
        (5, &[3, 3], 3, Power(3), T333, T333),
        (6, &[3, 3], 3, Power(3), Q, T236),
        (7, &[4, 4], 4, Power(4), Q, T244),
        (8, &[2, 2, 2], 4, Zhukovsky(2), Q, Q),
        (9, &[2, 2, 2], 4, Zhukovsky(2), Q, T244),
        (10, &[2, 2, 3], 6, Zhukovsky(3), T333, T236),
        (11, &[2, 2, 3], 3, Chebyshev(3), T236, T236),
        (12, &[2, 2, 4], 8, Zhukovsky(4), Q, T244),
        (13, &[2, 2, 4], 4, Chebyshev(4), Q, T244),
        (14, &[2, 2, 4], 4, Chebyshev(4), T244, T244),
        (15, &[2, 3, 3], 4, Lattes233(L233::Deg4), T236, T236),
        (16, &[2, 3, 3], 6, Lattes233(L233::Deg6), Q, T236),
        (17, &[2, 3, 3], 12, Lattes233(L233::Deg12), Q, T236),
    ]
};

const EQUAL_SIGNATURE_CASES: [u8; 7] = [1, 2, 5, 8, 11, 14, 15];

/// For a covering `f: O_1 -> O_2` with `χ(O_1) = χ(O_2) = 0`, the listed
/// exception that applies, or `None` when `O_2 = O_2^f` and `O_1 = O_1^f`.
pub fn exceptional_self_cover_lookup(
    f: &RatMap,
    o1: &Orbifold,
    o2: &Orbifold,
) -> Result<Option<ExceptionRecord>> {
    if f.degree() < 2
        || !is_covering_map(f, o1, o2)
        || !o1.euler_char().is_zero()
        || !o2.euler_char().is_zero()
    {
        return Err(Error::InvalidInput(
            "expected a covering map between orbifolds of Euler characteristic 0".into(),
        ));
    }
    let (_, o2f) = orbifolds_of_map(f)?;
    if o2f.euler_char().is_zero() {
        return Ok(None);
    }
    let (sa, s1, s2) = (o2f.signature(), o1.signature(), o2.signature());
    let row = EXCEPTIONS.iter().find(|r| {
        r.1 == sa.0.as_slice()
            && r.2 == f.degree()
            && r.4 == s1.0.as_slice()
            && r.5 == s2.0.as_slice()
    });
    match row {
        Some(&(case, _, _, mu_type, _, _)) => Ok(Some(ExceptionRecord {
            case,
            equal_signature_case: EQUAL_SIGNATURE_CASES
                .iter()
                .position(|&c| c == case)
                .map(|i| i as u8 + 1),
            signature_a: sa,
            mu_type,
            signature_1: s1,
            signature_2: s2,
        })),
        None => Err(Error::Unresolved(format!(
            "covering with ν(O_2^f) = {sa}, ν(O_1) = {s1}, ν(O_2) = {s2} matches no listed case"
        ))),
    }
}
