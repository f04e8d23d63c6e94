//! Resultants via the norm recursion `N(g; f) = prod_{g(b)=0} f(b)`.

use num_traits::{One, Zero};

use super::{Polynomial, Rational};

/// Product of `f` over the roots of `g` (with multiplicity).
fn norm(g: &Polynomial, f: &Polynomial) -> Rational {
    let m = g.deg();
    if m == 0 {
        return Rational::one();
    }
    let r = f.rem(g);
    if r.is_zero() {
        return Rational::zero();
    }
    let k = r.deg();
    if k == 0 {
        return pow(&r.lc(), m);
    }
    let sign = if (m * k) % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    pow(&r.lc(), m) * sign * norm(&r, g) / pow(&g.lc(), k)
}

fn pow(x: &Rational, k: usize) -> Rational {
    num_traits::pow(x.clone(), k)
}

/// Sylvester resultant `Res(p, q)` of nonzero polynomials (actual degrees).
pub fn resultant(p: &Polynomial, q: &Polynomial) -> Rational {
    if p.is_zero() || q.is_zero() {
        return Rational::zero();
    }
    pow(&p.lc(), q.deg()) * norm(p, q)
}

/// `Res_z(P - t Q, W)` as a polynomial in `t`, with `P - tQ` taken at formal
/// degree `max(deg P, deg Q)`.
pub fn resultant_pencil(p: &Polynomial, q: &Polynomial, w: &Polynomial) -> Polynomial {
    assert!(!w.is_zero(), "resultant against the zero polynomial");
    let n = p.deg().max(q.deg());
    let m = w.deg();
    let sign = if (n * m) % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    let scale = sign * pow(&w.lc(), n);
    // The result has degree <= m in t: sample m + 1 points, interpolate.
    let xs: Vec<Rational> = (0..=m as i64)
        .map(|i| Rational::from_integer(i.into()))
        .collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|t| &scale * norm(w, &(p - &q.scale(t))))
        .collect();
    interpolate(&xs, &ys)
}

/// Newton interpolation through `(xs[i], ys[i])`.
pub(crate) fn interpolate(xs: &[Rational], ys: &[Rational]) -> Polynomial {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = Polynomial::zero();
    for i in (0..n).rev() {
        acc = &(&acc * &Polynomial::linear_root(&xs[i])) + &Polynomial::constant(coef[i].clone());
    }
    acc
}
