use super::RatMap;
use crate::numeric::linalg::nullspace;
use crate::numeric::{Polynomial, Rational};

/// Solves `F = U o V` for `U`, by linear algebra on the coefficients of
/// `U = A/B` with `deg A, deg B <= deg F / deg V`.
pub fn right_divide(f: &RatMap, v: &RatMap) -> Option<RatMap> {
    let (df, dv) = (f.degree(), v.degree());
    if dv == 0 || df % dv != 0 {
        return None;
    }
    let k = df / dv;
    if df == 0 {
        return Some(f.clone());
    }
    // Basis terms Vn^i Vd^(k-i).
    let mut vd_pow = vec![Polynomial::one()];
    for i in 1..=k {
        let next = &vd_pow[i - 1] * v.den();
        vd_pow.push(next);
    }
    let mut terms = Vec::with_capacity(k + 1);
    let mut vn_pow = Polynomial::one();
    for i in 0..=k {
        terms.push(&vn_pow * &vd_pow[k - i]);
        if i < k {
            vn_pow = &vn_pow * v.num();
        }
    }
    // Unknowns: a_0..a_k then b_0..b_k; Fn * B(V) - Fd * A(V) = 0.
    let cols: Vec<Polynomial> = terms
        .iter()
        .map(|t| -(f.den() * t))
        .chain(terms.iter().map(|t| f.num() * t))
        .collect();
    let nrows = cols.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    let ncols = cols.len();
    let rows: Vec<Vec<Rational>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c.coeff(r)).collect())
        .collect();
    for sol in nullspace(&rows, ncols) {
        let a = Polynomial::new(sol[..=k].to_vec());
        let b = Polynomial::new(sol[k + 1..].to_vec());
        if b.is_zero() {
            continue;
        }
        let Ok(u) = RatMap::new(a, b) else { continue };
        if u.degree() == k && u.compose(v) == *f {
            return Some(u);
        }
    }
    None
}
