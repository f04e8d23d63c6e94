use serde::Serialize;

use crate::numeric::{function_field_gcd, FunctionFieldPolynomial, Rational};
use crate::ratmap::{MobiusMap, ProjectivePoint, RatMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LurothGenerator {
    #[serde(serialize_with = "ser_map")]
    pub u: RatMap,
    /// Degree of `u`, the index of `C(X, B)` in `C(z)`.
    pub degree_index: usize,
    /// Whether the canonical left normalization was applied.
    pub canonical: bool,
}

fn ser_map<S: serde::Serializer>(m: &RatMap, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&m.to_string())
}

/// `inf, 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, -1/3, 3/2, ...`: every
/// rational point, by height.
fn enumeration() -> impl Iterator<Item = ProjectivePoint> {
    let first = [ProjectivePoint::Infinity, ProjectivePoint::finite(0)];
    let rest = (1i64..).flat_map(|h| {
        let mut v = Vec::new();
        for q in (1..=h).filter(|&q| num_integer::gcd(h, q) == 1) {
            for (num, den) in [(h, q), (q, h)] {
                let r = ProjectivePoint::Finite(Rational::new(num.into(), den.into()));
                if !v.contains(&r) {
                    v.push(r.clone());
                    v.push(ProjectivePoint::Finite(-r.as_rational().unwrap().clone()));
                }
            }
        }
        v
    });
    first.into_iter().chain(rest)
}

/// Post-composes `u` with the Möbius map sending its values at the first
/// three enumerated points with distinct images to `inf, 0, 1`.
pub(crate) fn normalize_left(u: &RatMap) -> Option<RatMap> {
    if u.is_constant() {
        return None;
    }
    let mut pts: Vec<ProjectivePoint> = Vec::new();
    for p in enumeration().take(10_000) {
        let v = u.eval(&p).ok()?;
        if !pts.contains(&v) {
            pts.push(v);
            if pts.len() == 3 {
                break;
            }
        }
    }
    if pts.len() < 3 {
        return None;
    }
    let inf = ProjectivePoint::Infinity;
    let zero = ProjectivePoint::finite(0);
    let one = ProjectivePoint::finite(1);
    let m = MobiusMap::from_three_points([&pts[0], &pts[1], &pts[2]], [&inf, &zero, &one])?;
    Some(m.to_ratmap().compose(u))
}

/// A generator `U` of `C(X, B)`: the greatest common right factor of `X`
/// and `B`, read off the gcd over `Q(z)` of `X(t) - X(z)` and `B(t) - B(z)`.
pub fn luroth_generator(x: &RatMap, b: &RatMap) -> LurothGenerator {
    let fx = FunctionFieldPolynomial::pencil(x.num(), x.den(), x.num(), x.den());
    let fb = FunctionFieldPolynomial::pencil(b.num(), b.den(), b.num(), b.den());
    let g = function_field_gcd(&fx, &fb);
    let degree_index = g.degree().unwrap_or(0);
    let u = g
        .coeffs()
        .iter()
        .map(|(n, d)| RatMap::new(n.clone(), d.clone()).unwrap())
        .find(|c| !c.is_constant())
        .unwrap_or_else(RatMap::identity);
    debug_assert_eq!(u.degree(), degree_index.max(1));
    match normalize_left(&u) {
        Some(n) => LurothGenerator {
            u: n,
            degree_index,
            canonical: true,
        },
        None => LurothGenerator {
            u,
            degree_index,
            canonical: false,
        },
    }
}

/// `C(X, B) = C(z)`.
pub fn is_primitive(x: &RatMap, b: &RatMap) -> bool {
    luroth_generator(x, b).degree_index == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilyTag};
    use crate::ratmap::right_divide;

    #[test]
    fn enumeration_prefix() {
        let v: Vec<String> = enumeration().take(10).map(|p| p.to_string()).collect();
        assert_eq!(
            v,
            ["inf", "0", "1", "-1", "2", "-2", "1/2", "-1/2", "3", "-3"]
        );
    }

    #[test]
    fn examples() {
        let l = luroth_generator(&RatMap::power(4), &RatMap::power(6));
        assert_eq!(l.degree_index, 2);
        assert!(right_divide(&RatMap::power(4), &l.u).is_some());
        assert!(right_divide(&RatMap::power(6), &l.u).is_some());

        let t = |n| make(FamilyTag::Chebyshev(n)).unwrap();
        let l = luroth_generator(&t(4), &t(6));
        assert_eq!(l.degree_index, 2);
        assert!(right_divide(&t(4), &l.u).is_some() && right_divide(&t(6), &l.u).is_some());

        let b = RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap();
        assert!(is_primitive(&RatMap::power(2), &b));
        assert!(luroth_generator(&RatMap::power(2), &b).u.is_identity());
    }

    #[test]
    fn normalization_is_left_invariant() {
        let m = MobiusMap::from_i64(2, 1, 1, 1).unwrap().to_ratmap();
        let u = RatMap::power(3);
        assert_eq!(normalize_left(&u), normalize_left(&m.compose(&u)));
    }
}
