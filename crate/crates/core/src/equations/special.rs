use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::symmetry::rational_roots;
use crate::families::{make, FamilyTag};
use crate::orbifold::{is_covering_map, orbifolds_of_map, pullback, Orbifold};
use crate::ramification::{critical_points, critical_values, fiber, image_class, portrait};
use crate::ratmap::{MobiusMap, ProjectivePoint, RatMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LattesEvidence {
    /// `B: O -> O` is a covering, `O` supported on the postcritical set.
    PostcriticalCovering(Orbifold),
    /// `B: B^*O -> O` is a covering between orbifolds of Euler
    /// characteristic 0 with `O ⪰ O_2^B` on the same support.
    ExceptionalPattern { source: Orbifold, target: Orbifold },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialClass {
    /// Conjugate to `z^n`, or to `z^-n` when `inverse`.
    PowerConjugate {
        n: usize,
        inverse: bool,
    },
    /// Conjugate to `T_n` or `-T_n`.
    ChebyshevConjugate {
        n: usize,
    },
    LattesCandidate(LattesEvidence),
    NonSpecial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialVerdict {
    pub class: SpecialClass,
    /// `μ` with `μ∘B∘μ^-1` equal to the model map, when one is rational.
    pub witness: Option<MobiusMap>,
}

impl SpecialVerdict {
    pub fn is_special(&self) -> bool {
        self.class != SpecialClass::NonSpecial
    }
}

fn class_set(v: impl IntoIterator<Item = ProjectivePoint>) -> BTreeSet<ProjectivePoint> {
    v.into_iter().collect()
}

/// Whether every point of the class is fixed.
fn fixes(f: &RatMap, c: &ProjectivePoint) -> bool {
    match c {
        ProjectivePoint::Algebraic(g) => {
            let fixed = f.num() - &(f.den() * &crate::numeric::Polynomial::x());
            fixed.is_zero() || g.divides(&fixed)
        }
        _ => f.eval(c).is_ok_and(|v| &v == c),
    }
}

fn power_test(f: &RatMap) -> Option<(SpecialClass, Option<MobiusMap>)> {
    let n = f.degree();
    let cp: Vec<ProjectivePoint> = critical_points(f).into_iter().map(|(p, _)| p).collect();
    let cv = critical_values(f);
    let total = |v: &[ProjectivePoint]| v.iter().map(|p| p.class_degree()).sum::<usize>();
    if total(&cp) != 2 || total(&cv) != 2 || class_set(cp.clone()) != class_set(cv) {
        return None;
    }
    let inverse = !cp.iter().all(|c| fixes(f, c));
    let class = SpecialClass::PowerConjugate { n, inverse };
    let witness = (|| {
        let [c1, c2] = cp.as_slice() else { return None };
        let t = (0i64..)
            .map(ProjectivePoint::finite)
            .find(|x| x != c1 && x != c2)?;
        let m = MobiusMap::from_three_points(
            [c1, c2, &t],
            [
                &ProjectivePoint::finite(0),
                &ProjectivePoint::Infinity,
                &ProjectivePoint::finite(1),
            ],
        )?;
        let g = f.conjugate(&m);
        // g = a z^n or a z^-n; rescale z -> s z to make a = 1.
        let a = if inverse {
            g.den().lc().recip() * g.num().lc()
        } else {
            g.num().lc()
        };
        let (q, k) = if inverse {
            (a.recip(), n + 1)
        } else {
            (a, n - 1)
        };
        for s in rational_roots(&q, k as u32) {
            let mu = MobiusMap::scaling(s).compose(&m);
            let model = RatMap::power(if inverse { -(n as i32) } else { n as i32 });
            if f.conjugate(&mu) == model {
                return Some(mu);
            }
        }
        None
    })();
    Some((class, witness))
}

fn chebyshev_witness(
    f: &RatMap,
    p: &ProjectivePoint,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
) -> Option<MobiusMap> {
    let t = make(FamilyTag::Chebyshev(f.degree() as u32)).ok()?;
    let one = ProjectivePoint::finite(1);
    let minus = ProjectivePoint::finite(-1);
    for model in [t.clone(), t.neg()] {
        for (x, y) in [(a, b), (b, a)] {
            let mu =
                MobiusMap::from_three_points([p, x, y], [&ProjectivePoint::Infinity, &one, &minus]);
            if let Some(mu) = mu.filter(|mu| f.conjugate(mu) == model) {
                return Some(mu);
            }
        }
    }
    None
}

fn chebyshev_test(f: &RatMap) -> Option<(SpecialClass, Option<MobiusMap>)> {
    let n = f.degree();
    let class = SpecialClass::ChebyshevConjugate { n };
    let cv = critical_values(f);
    // Totally ramified fixed points.
    let tr_fixed: Vec<ProjectivePoint> = cv
        .iter()
        .filter(|v| v.is_rational())
        .filter(|v| fiber(f, v) == vec![((*v).clone(), n as u32)])
        .cloned()
        .collect();
    if n == 2 {
        for p in &tr_fixed {
            let c = critical_points(f)
                .into_iter()
                .map(|(q, _)| q)
                .find(|q| q != p)?;
            let fc = f.eval(&c).ok()?;
            let ffc = f.eval(&fc).ok()?;
            if fixes(f, &ffc) && &ffc != p && fc != ffc {
                return Some((class, chebyshev_witness(f, p, &fc, &ffc)));
            }
        }
        return None;
    }
    let t = make(FamilyTag::Chebyshev(n as u32)).ok()?;
    if portrait(f).ok()?.shape() != portrait(&t).ok()?.shape() {
        return None;
    }
    let [p] = tr_fixed.as_slice() else {
        return None;
    };
    let others: Vec<ProjectivePoint> = cv.iter().filter(|v| *v != p).cloned().collect();
    let simple_over = |v: &ProjectivePoint| -> Vec<ProjectivePoint> {
        fiber(f, v)
            .into_iter()
            .filter(|(_, e)| *e == 1)
            .map(|(c, _)| c)
            .collect()
    };
    let ok = if n % 2 == 1 {
        let simple = class_set(others.iter().flat_map(&simple_over));
        simple == class_set(others.clone())
    } else {
        // The value whose fiber has simple points carries exactly the two
        // other critical values there.
        others.len() == 2
            && others
                .iter()
                .any(|a| class_set(simple_over(a)) == class_set(others.clone()))
    };
    if !ok {
        return None;
    }
    let witness = match others.as_slice() {
        [a, b] => chebyshev_witness(f, p, a, b),
        _ => None,
    };
    Some((class, witness))
}

/// Euler-characteristic-zero index assignments on the given classes.
fn zero_char_orbifolds(support: &[ProjectivePoint], divisible_by: &[u64]) -> Vec<Orbifold> {
    let choices: Vec<Vec<u64>> = divisible_by
        .iter()
        .map(|m| [2u64, 3, 4, 6].into_iter().filter(|x| x % m == 0).collect())
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return vec![];
    }
    choices
        .iter()
        .multi_cartesian_product()
        .filter_map(|idx| Orbifold::new(support.iter().cloned().zip(idx.into_iter().copied())).ok())
        .filter(|o| o.euler_char().is_zero())
        .collect()
}

fn postcritical_covering(f: &RatMap) -> Option<Orbifold> {
    let mut post: BTreeSet<ProjectivePoint> = class_set(critical_values(f));
    let count = |s: &BTreeSet<ProjectivePoint>| s.iter().map(|p| p.class_degree()).sum::<usize>();
    loop {
        if count(&post) > 4 {
            return None;
        }
        let next: BTreeSet<ProjectivePoint> = post
            .iter()
            .map(|p| image_class(f, p))
            .chain(post.iter().cloned())
            .collect();
        if next == post {
            break;
        }
        post = next;
    }
    let support: Vec<ProjectivePoint> = post.into_iter().collect();
    let ones = vec![1u64; support.len()];
    zero_char_orbifolds(&support, &ones)
        .into_iter()
        .find(|o| is_covering_map(f, o, o))
}

/// A covering `B: B^*O -> O` with `χ(B^*O) = χ(O) = 0` and `O ⪰ O_2^B` on
/// the support of `O_2^B`. When `χ(O_2^B) = 0` this forces `O = O_2^B`, and
/// only the self-covering `O_1^B = O_2^B` counts.
fn exceptional_pattern(f: &RatMap) -> Option<(Orbifold, Orbifold)> {
    let (_, o2f) = orbifolds_of_map(f).ok()?;
    if o2f.signature().0.len() > 4 {
        return None;
    }
    let positive = o2f.euler_char().is_positive();
    let support: Vec<ProjectivePoint> = o2f.support().cloned().collect();
    let nus: Vec<u64> = support.iter().map(|p| o2f.nu(p)).collect();
    zero_char_orbifolds(&support, &nus)
        .into_iter()
        .find_map(|o2| {
            let o1 = pullback(f, &o2).ok()?;
            let ok = o1.euler_char().is_zero() && (positive || o1 == o2);
            (ok && is_covering_map(f, &o1, &o2)).then_some((o1, o2))
        })
}

/// Decides whether `B` is special: conjugate to `z^±n`, to `±T_n`, or a
/// Lattès candidate. Conjugacy is decided over the complex numbers from
/// critical data; a rational conjugating map is reported when one exists.
pub fn classify_special(b: &RatMap) -> SpecialVerdict {
    if b.degree() < 2 {
        return SpecialVerdict {
            class: SpecialClass::NonSpecial,
            witness: None,
        };
    }
    if let Some((class, witness)) = power_test(b).or_else(|| chebyshev_test(b)) {
        return SpecialVerdict { class, witness };
    }
    let evidence = postcritical_covering(b)
        .map(LattesEvidence::PostcriticalCovering)
        .or_else(|| {
            exceptional_pattern(b)
                .map(|(source, target)| LattesEvidence::ExceptionalPattern { source, target })
        });
    SpecialVerdict {
        class: evidence.map_or(SpecialClass::NonSpecial, SpecialClass::LattesCandidate),
        witness: None,
    }
}
