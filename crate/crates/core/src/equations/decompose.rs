use num_traits::Signed;
use serde::Serialize;

use super::luroth::luroth_generator;
use super::special::{classify_special, SpecialVerdict};
use crate::chains::{luroth_step_bound, primitive_degree_bound, Chain};
use crate::orbifold::orbifolds_of_map;
use crate::ratmap::{right_divide, RatMap};
use crate::{Error, Result};

/// The unique `A` with `A∘X = X∘B`.
pub fn recover_a(x: &RatMap, b: &RatMap) -> Result<RatMap> {
    if x.is_constant() || b.is_constant() {
        return Err(Error::InvalidInput("X and B must be nonconstant".into()));
    }
    right_divide(&x.compose(b), x).ok_or(Error::NotSemiconjugate)
}

/// The inequalities that hold when `B` is not special.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    /// `χ(O_2^X̃) > 0` (a Möbius `X̃` counts as positive).
    pub chi_positive: bool,
    /// `deg X̃ <= max(60, 2d - 1)`.
    pub degree_ok: bool,
    pub degree_bound: u64,
    /// Number of Lüroth steps within `(2θ(d) + 26)(d/2 - 1)`; only for `d >= 4`.
    pub chain_length_ok: Option<bool>,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.chi_positive && self.degree_ok && self.chain_length_ok != Some(false)
    }
}

/// `X = X̃∘U∘B^k` together with the Lüroth steps producing `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: RatMap,
    pub x_tilde: RatMap,
    pub u: RatMap,
    pub k: u32,
    /// Steps `(U_i, V_i)` with `B = V_1∘U_1`; may contain degree-one maps.
    pub chain: Chain,
    pub special: SpecialVerdict,
    /// `None` when `B` is special.
    pub bounds: Option<BoundCheck>,
}

impl Decomposition {
    /// `X̃∘U∘B^k`.
    pub fn recompose(&self, b: &RatMap) -> RatMap {
        self.x_tilde.compose(&self.u).compose(&b.iterate(self.k))
    }
}

/// Decomposes a semiconjugacy `A∘X = X∘B`: strips the largest iterate of
/// `B`, then peels greatest common right factors with the current elementary
/// transformation of `B` until the pair is primitive.
pub fn decompose_eb(x: &RatMap, b: &RatMap) -> Result<Decomposition> {
    let a = recover_a(x, b)?;
    let mut k = 0;
    let mut xi = x.clone();
    while xi.degree() >= b.degree() {
        match right_divide(&xi, b) {
            Some(w) => {
                xi = w;
                k += 1;
            }
            None => break,
        }
    }

    let mut f = b.clone();
    let mut u = RatMap::identity();
    let mut steps = Vec::new();
    while xi.degree() > 1 {
        let gen = luroth_generator(&xi, &f);
        if gen.degree_index <= 1 {
            break;
        }
        let ui = gen.u;
        let (Some(next), Some(vi)) = (right_divide(&xi, &ui), right_divide(&f, &ui)) else {
            return Err(Error::Unresolved(
                "common right factor does not divide".into(),
            ));
        };
        xi = next;
        f = ui.compose(&vi);
        u = ui.compose(&u);
        steps.push((ui, vi));
    }
    let chain = Chain::relaxed(steps);

    let special = classify_special(b);
    let bounds = if special.is_special() {
        None
    } else {
        let d = b.degree() as u64;
        let chi_positive = xi.degree() <= 1 || orbifolds_of_map(&xi)?.1.euler_char().is_positive();
        let degree_bound = primitive_degree_bound(d);
        let chain_length_ok = if d >= 4 {
            Some(luroth_step_bound(d)?.admits(chain.len() as i64))
        } else {
            None
        };
        Some(BoundCheck {
            chi_positive,
            degree_ok: xi.degree() as u64 <= degree_bound,
            degree_bound,
            chain_length_ok,
        })
    };
    Ok(Decomposition {
        a,
        x_tilde: xi,
        u,
        k,
        chain,
        special,
        bounds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> RatMap {
        RatMap::from_i64(&[0, 1, 0, 1], &[1]).unwrap()
    }

    #[test]
    fn primitive_example() {
        let d = decompose_eb(&RatMap::power(2), &b()).unwrap();
        assert_eq!(d.a, RatMap::from_i64(&[0, 1, 2, 1], &[1]).unwrap());
        assert_eq!(d.x_tilde, RatMap::power(2));
        assert!(d.u.is_identity() && d.k == 0 && d.chain.is_empty());
        assert!(d.bounds.unwrap().holds());
    }

    #[test]
    fn strips_iterates() {
        let x = RatMap::power(2).compose(&b());
        let d = decompose_eb(&x, &b()).unwrap();
        assert_eq!((d.k, d.x_tilde.clone()), (1, RatMap::power(2)));
        assert!(d.u.is_identity());
        assert_eq!(d.recompose(&b()), x);
    }

    #[test]
    fn special_basis_skips_bounds() {
        let d = decompose_eb(&RatMap::power(4), &RatMap::power(6)).unwrap();
        assert!(d.bounds.is_none());
        assert_eq!(d.recompose(&RatMap::power(6)), RatMap::power(4));
        assert!(!d.chain.is_empty());
    }

    #[test]
    fn not_semiconjugate() {
        let x = RatMap::from_i64(&[1, 1, 0, 1], &[1]).unwrap();
        assert_eq!(
            decompose_eb(&x, &RatMap::power(2)),
            Err(Error::NotSemiconjugate)
        );
    }
}
