//! Deciding `f = μ1 ∘ g ∘ μ2` for `g` a power, a Chebyshev polynomial,
//! `Z_n` or one of the {2,3,3} maps, with rational Möbius witnesses.

use itertools::Itertools;
use serde::Serialize;

use super::{MobiusMap, ProjectivePoint, RatMap};
use crate::families::{self, FamilyTag, Lattes233};
use crate::numeric::Rational;
use crate::ramification::{critical_points, critical_values, fiber, portrait};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MuClass {
    Power(u32),
    Chebyshev(u32),
    Zhukovsky(u32),
    Lattes233(Lattes233),
    /// No listed family fits. `portrait_matches` is set when some family has
    /// the same branching shape but no rational witnesses were found.
    None {
        portrait_matches: bool,
    },
}

/// A classification with witnesses `f = mu1 ∘ g ∘ mu2`, `g` the family map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuEquivalence {
    pub class: MuClass,
    pub witnesses: Option<(MobiusMap, MobiusMap)>,
}

impl MuClass {
    pub fn family(&self) -> Option<FamilyTag> {
        Some(match self {
            MuClass::Power(n) => FamilyTag::Power(*n),
            MuClass::Chebyshev(n) => FamilyTag::Chebyshev(*n),
            MuClass::Zhukovsky(n) => FamilyTag::Zhukovsky(*n),
            MuClass::Lattes233(v) => FamilyTag::Lattes233(*v),
            MuClass::None { .. } => return None,
        })
    }
}

fn found(class: MuClass, mu1: MobiusMap, mu2: MobiusMap) -> MuEquivalence {
    MuEquivalence {
        class,
        witnesses: Some((mu1, mu2)),
    }
}

fn none(portrait_matches: bool) -> MuEquivalence {
    MuEquivalence {
        class: MuClass::None { portrait_matches },
        witnesses: None,
    }
}

pub fn classify_mu_equivalence(f: &RatMap) -> MuEquivalence {
    let n = f.degree();
    if n < 2 {
        return none(false);
    }
    let id = MobiusMap::identity;
    if *f == RatMap::power(n as i32) {
        return found(MuClass::Power(n as u32), id(), id());
    }
    let t = families::make(FamilyTag::Chebyshev(n as u32)).unwrap();
    if *f == t {
        return found(MuClass::Chebyshev(n as u32), id(), id());
    }
    if *f == t.neg() {
        let neg = MobiusMap::scaling(-Rational::from_integer(1.into()));
        return found(MuClass::Chebyshev(n as u32), neg, id());
    }

    let shape = portrait(f).unwrap().shape();
    if shape == vec![vec![n as u32]; 2] {
        return match power_witness(f) {
            Some((m1, m2)) => found(MuClass::Power(n as u32), m1, m2),
            None => none(true),
        };
    }

    let mut cands = vec![MuClass::Chebyshev(n as u32)];
    if n.is_multiple_of(2) {
        cands.push(MuClass::Zhukovsky(n as u32 / 2));
    }
    match n {
        4 => cands.push(MuClass::Lattes233(Lattes233::Deg4)),
        6 => cands.push(MuClass::Lattes233(Lattes233::Deg6)),
        12 => cands.push(MuClass::Lattes233(Lattes233::Deg12)),
        _ => {}
    }
    let mut matched = false;
    for c in cands {
        let g = families::make(c.family().unwrap()).unwrap();
        if portrait(&g).unwrap().shape() != shape {
            continue;
        }
        matched = true;
        if let Some((m1, m2)) = solve_mu(f, &g) {
            return found(c, m1, m2);
        }
    }
    none(matched)
}

/// `f` with two totally ramified critical values: move the critical points
/// and values to `0, inf` and absorb the leftover scalar.
fn power_witness(f: &RatMap) -> Option<(MobiusMap, MobiusMap)> {
    let cv = critical_values(f);
    let cp: Vec<ProjectivePoint> = critical_points(f).into_iter().map(|(p, _)| p).collect();
    if cv.len() != 2 || cp.len() != 2 || !cv.iter().chain(&cp).all(|p| p.is_rational()) {
        return None;
    }
    // Order critical points to match their values.
    let (c0, c1) = if f.eval(&cp[0]).ok()? == cv[0] {
        (&cp[0], &cp[1])
    } else {
        (&cp[1], &cp[0])
    };
    let zero = ProjectivePoint::finite(0);
    let one = ProjectivePoint::finite(1);
    let inf = ProjectivePoint::Infinity;
    let third = [0i64, 1, -1, 2, -2, 3]
        .into_iter()
        .map(ProjectivePoint::finite)
        .find(|p| p != c0 && p != c1)?;
    let m2 = MobiusMap::from_three_points([c0, c1, &third], [&zero, &inf, &one])?;
    let w = f.eval(&third).ok()?;
    let m1inv = MobiusMap::from_three_points([&cv[0], &cv[1], &w], [&zero, &inf, &one])?;
    let g = m1inv
        .to_ratmap()
        .compose(f)
        .compose(&m2.inverse().to_ratmap());
    // g = a z^n with a = 1 by the choice of the third point.
    if g != RatMap::power(f.degree() as i32) {
        return None;
    }
    Some((m1inv.inverse(), m2))
}

/// Rational points over the critical values of `g` (seen through `h`),
/// labelled by (value index, local degree).
fn marked(h: &RatMap, values: &[ProjectivePoint]) -> Vec<(ProjectivePoint, usize, u32)> {
    let mut out = Vec::new();
    for (i, v) in values.iter().enumerate() {
        for (p, e) in fiber(h, v) {
            if p.is_rational() {
                out.push((p, i, e));
            }
        }
    }
    out
}

/// Searches rational `mu1, mu2` with `f = mu1 ∘ g ∘ mu2`, for `g` with
/// three rational critical values.
fn solve_mu(f: &RatMap, g: &RatMap) -> Option<(MobiusMap, MobiusMap)> {
    let gv = critical_values(g);
    let fv = critical_values(f);
    if gv.len() != 3 || fv.len() != 3 || !fv.iter().all(|v| v.is_rational()) {
        return None;
    }
    let gfib: Vec<Vec<u32>> = gv
        .iter()
        .map(|v| crate::ramification::fiber_portrait(g, v))
        .collect();
    let ffib: Vec<Vec<u32>> = fv
        .iter()
        .map(|v| crate::ramification::fiber_portrait(f, v))
        .collect();
    let gmarks = marked(g, &gv);
    for perm in (0..3).permutations(3) {
        if (0..3).any(|i| gfib[i] != ffib[perm[i]]) {
            continue;
        }
        let mu1 = MobiusMap::from_three_points(
            [&gv[0], &gv[1], &gv[2]],
            [&fv[perm[0]], &fv[perm[1]], &fv[perm[2]]],
        )?;
        let h = mu1.inverse().to_ratmap().compose(f);
        let mut hmarks = marked(&h, &gv);
        let count = |i: usize, e: u32| gmarks.iter().filter(|m| m.1 == i && m.2 == e).count();
        hmarks.sort_by_key(|m| count(m.1, m.2));
        if hmarks.len() < 3 {
            continue;
        }
        let src = &hmarks[..3];
        let options: Vec<Vec<&ProjectivePoint>> = src
            .iter()
            .map(|s| {
                gmarks
                    .iter()
                    .filter(|m| m.1 == s.1 && m.2 == s.2)
                    .map(|m| &m.0)
                    .collect()
            })
            .collect();
        for choice in options.iter().multi_cartesian_product() {
            if choice[0] == choice[1] || choice[0] == choice[2] || choice[1] == choice[2] {
                continue;
            }
            let Some(mu2) = MobiusMap::from_three_points(
                [&src[0].0, &src[1].0, &src[2].0],
                [choice[0], choice[1], choice[2]],
            ) else {
                continue;
            };
            if g.compose(&mu2.to_ratmap()) == h {
                return Some((mu1, mu2));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(f: &RatMap, class: MuClass) {
        let r = classify_mu_equivalence(f);
        assert_eq!(r.class, class, "{f}");
        let (m1, m2) = r.witnesses.expect("witnesses");
        let g = families::make(class.family().unwrap()).unwrap();
        assert_eq!(m1.to_ratmap().compose(&g).compose(&m2.to_ratmap()), *f);
    }

    #[test]
    fn examples() {
        check(
            &RatMap::from_i64(&[-1, 0, 2], &[1]).unwrap(),
            MuClass::Chebyshev(2),
        );
        check(&families::zhukovsky(1), MuClass::Power(2));
        check(
            &families::make(FamilyTag::Delta).unwrap(),
            MuClass::Chebyshev(3),
        );
        check(
            &families::make(FamilyTag::Chebyshev(5)).unwrap().neg(),
            MuClass::Chebyshev(5),
        );
        check(&families::zhukovsky(3), MuClass::Zhukovsky(3));
    }

    #[test]
    fn invariant_under_mobius() {
        let a = MobiusMap::from_i64(2, 1, 1, 3).unwrap().to_ratmap();
        let b = MobiusMap::from_i64(1, -1, 2, 5).unwrap().to_ratmap();
        for tag in [
            FamilyTag::Chebyshev(4),
            FamilyTag::Zhukovsky(2),
            FamilyTag::Power(3),
            FamilyTag::Lattes233(Lattes233::Deg4),
            FamilyTag::Lattes233(Lattes233::Deg6),
        ] {
            let f = a.compose(&families::make(tag).unwrap()).compose(&b);
            let r = classify_mu_equivalence(&f);
            assert_eq!(r.class.family(), Some(tag));
        }
    }

    #[test]
    fn non_members() {
        let f = RatMap::from_i64(&[0, 1, 0, 2, 0, 1], &[1, 0, 0, 1]).unwrap();
        assert_eq!(
            classify_mu_equivalence(&f).class,
            MuClass::None {
                portrait_matches: false
            }
        );
        // z^3 + z has the branching of T_3 over a conjugate pair of values.
        let f = RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap();
        assert_eq!(
            classify_mu_equivalence(&f).class,
            MuClass::None {
                portrait_matches: true
            }
        );
        // 2z^3 - 3z is T_3 rescaled by sqrt(2): same shape, irrational witness.
        let f = RatMap::from_i64(&[0, -3, 0, 2], &[1]).unwrap();
        assert_eq!(
            classify_mu_equivalence(&f).class,
            MuClass::None {
                portrait_matches: true
            }
        );
    }
}
