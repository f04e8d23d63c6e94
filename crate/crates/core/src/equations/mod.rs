//! Functional equations `A∘X = X∘B` and `A∘C = D∘B`: verification,
//! goodness, Lüroth generators, symmetry groups, special maps and the
//! decomposition `X = X̃∘U∘B^k`.

mod decompose;
mod luroth;
mod special;
mod symmetry;

pub use decompose::{decompose_eb, recover_a, BoundCheck, Decomposition};
pub use luroth::{is_primitive, luroth_generator, LurothGenerator};
pub use special::{classify_special, LattesEvidence, SpecialClass, SpecialVerdict};
pub use symmetry::mobius_symmetry_group;

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::Serialize;

use crate::families::{make, zhukovsky, FamilyTag};
use crate::orbifold::{is_minimal_holomorphic, orbifolds_of_map};
use crate::ramification::critical_points;
use crate::ratmap::{ProjectivePoint, RatMap};
use crate::{Error, Result};

pub fn verify_semiconjugacy(a: &RatMap, x: &RatMap, b: &RatMap) -> bool {
    a.compose(x) == x.compose(b)
}

/// `gcd(deg_z C, deg_z B) = 1` at every point.
pub fn coprime_local_degrees(c: &RatMap, b: &RatMap) -> bool {
    if c.is_constant() || b.is_constant() {
        return false;
    }
    let pts: BTreeSet<ProjectivePoint> = critical_points(c)
        .into_iter()
        .chain(critical_points(b))
        .map(|(p, _)| p)
        .collect();
    pts.iter().all(|p| {
        let e1 = c.local_degree(p).unwrap();
        let e2 = b.local_degree(p).unwrap();
        e1.gcd(&e2) == 1
    })
}

/// `A∘C = D∘B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSquare {
    pub a: RatMap,
    pub c: RatMap,
    pub d: RatMap,
    pub b: RatMap,
}

impl SolutionSquare {
    pub fn new(a: RatMap, c: RatMap, d: RatMap, b: RatMap) -> Result<Self> {
        if a.compose(&c) != d.compose(&b) {
            return Err(Error::InvalidDecomposition(format!(
                "({a})∘({c}) differs from ({d})∘({b})"
            )));
        }
        Ok(SolutionSquare { a, c, d, b })
    }

    /// The diagram `B: O_1^C -> O_1^D`, `A: O_2^C -> O_2^D` of minimal
    /// holomorphic maps attached to a good solution.
    pub fn diagram_is_minimal_holomorphic(&self) -> Result<bool> {
        let (c1, c2) = orbifolds_of_map(&self.c)?;
        let (d1, d2) = orbifolds_of_map(&self.d)?;
        Ok(is_minimal_holomorphic(&self.a, &c2, &d2) && is_minimal_holomorphic(&self.b, &c1, &d1))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriState {
    True,
    False,
    NotChecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodnessReport {
    pub fiber_product_irreducible: TriState,
    pub no_common_right_factor: bool,
    pub degrees_match: bool,
    pub verdict: bool,
}

/// Goodness from two of the three sufficient conditions: equal degrees and
/// coprime local degrees of `C` and `B`. Irreducibility of the fiber product
/// is not computed, so a square failing either checked condition gets
/// `verdict = false` with the irreducibility flag left open.
pub fn is_good_solution(s: &SolutionSquare) -> GoodnessReport {
    let degrees_match = s.a.degree() == s.b.degree() && s.c.degree() == s.d.degree();
    let no_common_right_factor = coprime_local_degrees(&s.c, &s.b);
    GoodnessReport {
        fiber_product_irreducible: TriState::NotChecked,
        no_common_right_factor,
        degrees_match,
        verdict: degrees_match && no_common_right_factor,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GFamily {
    I,
    II,
    III,
    IV,
}

/// The good solutions with `χ(O_2^A) > 0`, all Möbius factors trivial.
/// Kind IV reads `m2` as the odd exponent `m` and ignores `m1`.
pub fn good_solution_family(kind: GFamily, m1: u32, m2: u32) -> Result<SolutionSquare> {
    let coprime_pair = || {
        if m1 < 2 || m2 < 2 || m1.gcd(&m2) != 1 {
            Err(Error::InvalidInput(format!(
                "need m1, m2 >= 2 coprime, got {m1}, {m2}"
            )))
        } else {
            Ok(())
        }
    };
    match kind {
        GFamily::I => {
            coprime_pair()?;
            let (p1, p2) = (RatMap::power(m1 as i32), RatMap::power(m2 as i32));
            SolutionSquare::new(p1.clone(), p2.clone(), p2, p1)
        }
        GFamily::II => {
            coprime_pair()?;
            let t1 = make(FamilyTag::Chebyshev(m1))?;
            let t2 = make(FamilyTag::Chebyshev(m2))?;
            SolutionSquare::new(t1.clone(), t2.clone(), t2, t1)
        }
        GFamily::III => {
            let g = make(FamilyTag::GammaMap)?;
            let d = make(FamilyTag::Delta)?;
            SolutionSquare::new(g.clone(), d.clone(), d, g)
        }
        GFamily::IV => {
            if m2.is_multiple_of(2) || m2 < 1 {
                return Err(Error::InvalidInput(format!("need odd m, got {m2}")));
            }
            let z = zhukovsky(m2);
            SolutionSquare::new(
                make(FamilyTag::Chebyshev(2))?,
                z.clone(),
                z,
                RatMap::power(2),
            )
        }
    }
}
