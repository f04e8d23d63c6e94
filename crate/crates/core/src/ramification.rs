//! Critical values, fibers and ramification portraits.
//!
//! Fibers are read from factorizations over Q: an irreducible factor of
//! degree `k` and multiplicity `m` is a class of `k` preimages, each of local
//! degree `m`. Over an algebraic class of values the fiber covers every
//! conjugate at once; per-conjugate multisets divide the class counts by
//! the degree of the value class.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::numeric::resultant_pencil;
use crate::ratmap::{ProjectivePoint, RatMap};
use crate::{Error, Result};

/// Preimages (with local degrees) of a value, or of a whole value class.
pub fn fiber(f: &RatMap, y: &ProjectivePoint) -> Vec<(ProjectivePoint, u32)> {
    let n = f.degree();
    let (p, q) = (f.num(), f.den());
    let poly = match y {
        ProjectivePoint::Finite(v) => p - &q.scale(v),
        ProjectivePoint::Infinity => q.clone(),
        ProjectivePoint::Algebraic(m) => m.homogenize_compose(p, q, m.deg()),
    };
    let mut out: Vec<(ProjectivePoint, u32)> = poly
        .factor()
        .into_iter()
        .map(|(g, e)| (ProjectivePoint::from_factor(&g), e))
        .collect();
    if y.is_rational() && poly.deg() < n {
        out.push((ProjectivePoint::Infinity, (n - poly.deg()) as u32));
    }
    out.sort();
    out
}

/// Local degrees over one value (one conjugate, for an algebraic class),
/// ascending.
pub fn fiber_portrait(f: &RatMap, y: &ProjectivePoint) -> Vec<u32> {
    let s = y.class_degree();
    let mut v = Vec::new();
    for (c, e) in fiber(f, y) {
        for _ in 0..c.class_degree() / s {
            v.push(e);
        }
    }
    v.sort_unstable();
    v
}

/// Point classes where the local degree exceeds 1.
pub fn critical_points(f: &RatMap) -> Vec<(ProjectivePoint, u32)> {
    let mut out = Vec::new();
    if f.degree() < 2 {
        return out;
    }
    let w = f.wronskian();
    for (g, m) in w.factor() {
        if !g.divides(f.den()) {
            out.push((ProjectivePoint::from_factor(&g), m + 1));
        }
    }
    for (g, m) in f.den().factor() {
        if m >= 2 {
            out.push((ProjectivePoint::from_factor(&g), m));
        }
    }
    let e = f.local_degree(&ProjectivePoint::Infinity).unwrap();
    if e >= 2 {
        out.push((ProjectivePoint::Infinity, e));
    }
    out.sort();
    out
}

/// Image of a point class.
pub fn image_class(f: &RatMap, p: &ProjectivePoint) -> ProjectivePoint {
    match p {
        ProjectivePoint::Algebraic(g) => {
            if g.divides(f.den()) {
                return ProjectivePoint::Infinity;
            }
            let r = resultant_pencil(f.num(), f.den(), g);
            let fac = r.factor();
            debug_assert_eq!(fac.len(), 1, "image of a class is a single class");
            ProjectivePoint::from_factor(&fac[0].0)
        }
        _ => f.eval(p).unwrap(),
    }
}

/// Critical values, ascending in the point order.
pub fn critical_values(f: &RatMap) -> Vec<ProjectivePoint> {
    let set: BTreeSet<ProjectivePoint> = critical_points(f)
        .iter()
        .map(|(p, _)| image_class(f, p))
        .collect();
    set.into_iter().collect()
}

/// The local degrees over one critical value (per conjugate).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberPortrait {
    #[serde(serialize_with = "ser_point")]
    pub value: ProjectivePoint,
    pub local_degrees: Vec<u32>,
}

/// Branching data `R(f)`: one fiber portrait per critical value class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Portrait {
    pub degree: usize,
    pub fibers: Vec<FiberPortrait>,
}

fn ser_point<S: serde::Serializer>(
    p: &ProjectivePoint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

pub fn portrait(f: &RatMap) -> Result<Portrait> {
    if f.degree() < 2 {
        return Err(Error::InvalidInput("portrait needs degree >= 2".into()));
    }
    let fibers = critical_values(f)
        .into_iter()
        .map(|v| FiberPortrait {
            local_degrees: fiber_portrait(f, &v),
            value: v,
        })
        .collect();
    Ok(Portrait {
        degree: f.degree(),
        fibers,
    })
}

impl Portrait {
    /// The fiber over `v`, if `v` is a critical value.
    pub fn over(&self, v: &ProjectivePoint) -> Option<&[u32]> {
        self.fibers
            .iter()
            .find(|fp| &fp.value == v)
            .map(|fp| fp.local_degrees.as_slice())
    }

    /// Multiset of fiber multisets, forgetting base points. Algebraic value
    /// classes are repeated once per conjugate.
    pub fn shape(&self) -> Vec<Vec<u32>> {
        let mut v = Vec::new();
        for fp in &self.fibers {
            for _ in 0..fp.value.class_degree() {
                v.push(fp.local_degrees.clone());
            }
        }
        v.sort();
        v
    }
}

impl fmt::Display for Portrait {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .fibers
            .iter()
            .map(|fp| {
                let ds: Vec<String> = fp.local_degrees.iter().map(|d| d.to_string()).collect();
                format!("{{{}}}@{}", ds.join(","), fp.value)
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Riemann-Hurwitz: the ramification of `f` totals `2 deg f - 2`.
pub fn check_riemann_hurwitz(f: &RatMap) -> bool {
    let n = f.degree();
    if n == 0 {
        return false;
    }
    let total: usize = critical_points(f)
        .iter()
        .map(|(p, e)| p.class_degree() * (*e as usize - 1))
        .sum();
    total == 2 * n - 2
}

/// Number of geometric points in `f^{-1}(S)` for a set of value classes.
pub fn preimage_count(f: &RatMap, s: &[ProjectivePoint]) -> usize {
    s.iter()
        .flat_map(|y| fiber(f, y))
        .map(|(c, _)| c.class_degree())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::Polynomial;

    fn delta() -> RatMap {
        RatMap::new(
            Polynomial::from_i64(&[0, 27]),
            Polynomial::from_i64(&[-1, 4]).pow(3),
        )
        .unwrap()
    }

    #[test]
    fn delta_portrait() {
        let p = portrait(&delta()).unwrap();
        assert_eq!(p.to_string(), "({1,2}@0, {1,2}@1, {3}@inf)");
        assert_eq!(
            fiber(&delta(), &ProjectivePoint::finite(1)),
            vec![
                (ProjectivePoint::frac(-1, 8), 2),
                (ProjectivePoint::finite(1), 1)
            ]
        );
        assert!(check_riemann_hurwitz(&delta()));
    }

    #[test]
    fn irrational_critical_values() {
        // z^3 + z: critical points are a conjugate pair, values too.
        let f = RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap();
        let cv = critical_values(&f);
        assert_eq!(cv.len(), 2);
        assert_eq!(cv[0].class_degree(), 2);
        assert_eq!(fiber_portrait(&f, &cv[0]), vec![1, 2]);
        assert!(check_riemann_hurwitz(&f));
    }
}
