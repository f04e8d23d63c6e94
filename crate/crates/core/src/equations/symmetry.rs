use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::numeric::{Polynomial, Rational};
use crate::ramification::{critical_values, fiber, fiber_portrait, portrait};
use crate::ratmap::{right_divide, MobiusMap, ProjectivePoint, RatMap};
use crate::{Error, Result};

/// Points over the critical values, keyed by what any symmetry must
/// preserve: local degree, class degree, and the fiber over the image.
type Label = (u32, usize, Vec<u32>);

fn labelled_points(b: &RatMap) -> Vec<(ProjectivePoint, Label)> {
    let mut out = Vec::new();
    for v in critical_values(b) {
        let over = fiber_portrait(b, &v);
        for (p, e) in fiber(b, &v) {
            let k = p.class_degree();
            out.push((p, (e, k, over.clone())));
        }
    }
    out
}

fn is_symmetry(b: &RatMap, mu: &MobiusMap) -> bool {
    right_divide(&b.compose(&mu.to_ratmap()), b).is_some_and(|nu| nu.degree() == 1)
}

/// Rational `k`-th roots of `q`.
pub(crate) fn rational_roots(q: &Rational, k: u32) -> Vec<Rational> {
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.nth_root(k);
        (r.pow(k) == *n).then_some(r)
    };
    if q.is_zero() {
        return vec![];
    }
    let (Some(n), Some(d)) = (root(&q.numer().abs()), root(q.denom())) else {
        return vec![];
    };
    let r = Rational::new(n, d);
    match (q.numer().sign() == Sign::Minus, k.is_multiple_of(2)) {
        (true, true) => vec![],
        (true, false) => vec![-r],
        (false, true) => vec![r.clone(), -r],
        (false, false) => vec![r],
    }
}

/// Candidates `a` with `z -> a z` (or `a / z` when `swap`) carrying the
/// class of `g` onto the class of `h`; both monic of equal degree with
/// nonzero roots.
fn scaling_candidates(g: &Polynomial, h: &Polynomial, swap: bool) -> Vec<Rational> {
    let r = g.deg() as u32;
    let q = if swap {
        g.coeff(0) * h.coeff(0)
    } else {
        h.coeff(0) / g.coeff(0)
    };
    rational_roots(&q, r)
}

/// The rational Möbius maps `μ` with `B∘μ = ν∘B` for some Möbius `ν`.
///
/// Symmetries permute the labelled points over the critical values. With
/// three rational such points, candidates come from ordered triples; with
/// two, after moving them to `0, inf`, from scalings `a z` and `a / z`; with
/// one, the centroid of a Galois-stable label class is a second fixed point.
pub fn mobius_symmetry_group(b: &RatMap) -> Result<Vec<MobiusMap>> {
    let d = b.degree();
    if d < 2 {
        return Err(Error::InvalidInput(
            "symmetry group needs degree >= 2".into(),
        ));
    }
    if portrait(b)?.shape() == vec![vec![d as u32]; 2] {
        return Err(Error::InfiniteGroup);
    }
    let pts = labelled_points(b);
    let rational: Vec<&(ProjectivePoint, Label)> =
        pts.iter().filter(|(p, _)| p.is_rational()).collect();

    let mut group = Vec::new();
    let mut push = |mu: MobiusMap| {
        if !group.contains(&mu) && is_symmetry(b, &mu) {
            group.push(mu);
        }
    };

    if rational.len() >= 3 {
        let src = &rational[..3];
        let options: Vec<Vec<&ProjectivePoint>> = src
            .iter()
            .map(|(_, l)| {
                rational
                    .iter()
                    .filter(|(_, m)| m == l)
                    .map(|(p, _)| p)
                    .collect()
            })
            .collect();
        for choice in options.iter().multi_cartesian_product() {
            if choice.iter().all_unique() {
                if let Some(mu) = MobiusMap::from_three_points(
                    [&src[0].0, &src[1].0, &src[2].0],
                    [choice[0], choice[1], choice[2]],
                ) {
                    push(mu);
                }
            }
        }
    } else {
        // Normalizer m sending the anchors to 0 and inf.
        let (m, may_swap) = match rational.as_slice() {
            [p, q] => {
                let third = (0i64..)
                    .map(ProjectivePoint::finite)
                    .find(|x| x != &p.0 && x != &q.0)
                    .unwrap();
                let m = MobiusMap::from_three_points(
                    [&p.0, &q.0, &third],
                    [
                        &ProjectivePoint::finite(0),
                        &ProjectivePoint::Infinity,
                        &ProjectivePoint::finite(1),
                    ],
                )
                .unwrap();
                (m, p.1 == q.1)
            }
            [p] => {
                let to_inf = MobiusMap::from_three_points(
                    [
                        &p.0,
                        &ProjectivePoint::finite(0),
                        &ProjectivePoint::finite(1),
                    ],
                    [
                        &ProjectivePoint::Infinity,
                        &ProjectivePoint::finite(0),
                        &ProjectivePoint::finite(1),
                    ],
                )
                .or_else(|| {
                    MobiusMap::from_three_points(
                        [
                            &p.0,
                            &ProjectivePoint::finite(1),
                            &ProjectivePoint::finite(2),
                        ],
                        [
                            &ProjectivePoint::Infinity,
                            &ProjectivePoint::finite(1),
                            &ProjectivePoint::finite(2),
                        ],
                    )
                })
                .unwrap();
                let c = centroid(&pts, &to_inf).ok_or_else(|| {
                    Error::Unresolved("no Galois-stable class to anchor the search".into())
                })?;
                (MobiusMap::translation(-c).compose(&to_inf), false)
            }
            _ => {
                return Err(Error::Unresolved(
                    "no rational point over the critical values".into(),
                ))
            }
        };
        let moved: Vec<(ProjectivePoint, &Label)> =
            pts.iter().map(|(p, l)| (m.apply(p), l)).collect();
        let zero = ProjectivePoint::finite(0);
        let Some((g, gl)) = moved
            .iter()
            .filter(|(p, _)| *p != zero && *p != ProjectivePoint::Infinity)
            .min_by_key(|(p, _)| p.class_degree())
        else {
            return Err(Error::InfiniteGroup);
        };
        let g = g.min_poly().unwrap();
        let minv = m.inverse();
        for (h, hl) in &moved {
            if hl != gl || *h == zero || *h == ProjectivePoint::Infinity {
                continue;
            }
            let h = h.min_poly().unwrap();
            for swap in [false, true] {
                if swap && !may_swap {
                    continue;
                }
                for a in scaling_candidates(&g, &h, swap) {
                    let s = if swap {
                        MobiusMap::new(
                            Rational::zero(),
                            a,
                            Rational::from_integer(1.into()),
                            Rational::zero(),
                        )
                    } else {
                        Ok(MobiusMap::scaling(a))
                    };
                    push(minv.compose(&s.unwrap()).compose(&m));
                }
            }
        }
    }
    group.sort_by_key(|m| m.to_string());
    Ok(group)
}

/// Centroid of the finite points sharing the label of the smallest class,
/// after applying `m`; rational because the set is Galois-stable.
fn centroid(pts: &[(ProjectivePoint, Label)], m: &MobiusMap) -> Option<Rational> {
    let mut by_label: BTreeMap<&Label, (Rational, usize)> = BTreeMap::new();
    for (p, l) in pts {
        let q = m.apply(p);
        if q == ProjectivePoint::Infinity {
            continue;
        }
        let g = q.min_poly().unwrap();
        // Sum of the roots of a monic g is minus its second coefficient.
        let k = g.deg();
        let e = by_label.entry(l).or_insert((Rational::zero(), 0));
        e.0 -= g.coeff(k - 1);
        e.1 += k;
    }
    by_label
        .into_values()
        .next()
        .map(|(s, n)| s / Rational::from_integer((n as i64).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilyTag};

    fn names(g: &[MobiusMap]) -> Vec<String> {
        g.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn examples() {
        let t3 = make(FamilyTag::Chebyshev(3)).unwrap();
        assert_eq!(names(&mobius_symmetry_group(&t3).unwrap()), ["-z", "z"]);
        let b = RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap();
        assert_eq!(names(&mobius_symmetry_group(&b).unwrap()), ["-z", "z"]);
        let b = RatMap::from_i64(&[1, 0, 1], &[1]).unwrap();
        assert_eq!(mobius_symmetry_group(&b), Err(Error::InfiniteGroup));
    }

    #[test]
    fn roots() {
        assert_eq!(
            rational_roots(&Rational::new(4.into(), 9.into()), 2).len(),
            2
        );
        assert_eq!(
            rational_roots(&Rational::new((-8).into(), 27.into()), 3),
            vec![Rational::new((-2).into(), 3.into())]
        );
        assert!(rational_roots(&Rational::from_integer(2.into()), 2).is_empty());
    }
}
