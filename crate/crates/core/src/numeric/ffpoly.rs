//! Polynomials in `t` with coefficients in Q(z).

use std::fmt;

use num_traits::Zero;

use super::{Polynomial, Rational};

/// `sum_i (n_i(z)/d_i(z)) t^i`, each coefficient reduced with monic
/// denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct FunctionFieldPolynomial {
    coeffs: Vec<(Polynomial, Polynomial)>,
}

fn reduce_pair(n: Polynomial, d: Polynomial) -> (Polynomial, Polynomial) {
    assert!(!d.is_zero(), "zero denominator");
    if n.is_zero() {
        return (Polynomial::zero(), Polynomial::one());
    }
    let g = n.gcd(&d);
    let n = n.exact_div(&g).unwrap();
    let d = d.exact_div(&g).unwrap();
    let l = d.lc().recip();
    (n.scale(&l), d.scale(&l))
}

impl FunctionFieldPolynomial {
    pub fn new(pairs: Vec<(Polynomial, Polynomial)>) -> Self {
        let mut coeffs: Vec<_> = pairs.into_iter().map(|(n, d)| reduce_pair(n, d)).collect();
        while coeffs.last().is_some_and(|c| c.0.is_zero()) {
            coeffs.pop();
        }
        FunctionFieldPolynomial { coeffs }
    }

    /// Coefficients that are polynomials in `z`.
    pub fn from_polys(c: Vec<Polynomial>) -> Self {
        Self::new(c.into_iter().map(|n| (n, Polynomial::one())).collect())
    }

    /// `n(t) - (xn(z)/xd(z)) d(t)`: the pencil whose roots in `t` are the
    /// points with the same image as `z` under `n/d`, when `xn/xd = n/d`.
    pub fn pencil(n: &Polynomial, d: &Polynomial, xn: &Polynomial, xd: &Polynomial) -> Self {
        let len = n.coeffs().len().max(d.coeffs().len());
        Self::new(
            (0..len)
                .map(|i| {
                    let a = xd.scale(&n.coeff(i));
                    let b = xn.scale(&d.coeff(i));
                    (&a - &b, xd.clone())
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[(Polynomial, Polynomial)] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Clears denominators: coefficients in Q[z].
    fn to_bivariate(&self) -> Vec<Polynomial> {
        let mut l = Polynomial::one();
        for (_, d) in &self.coeffs {
            let g = l.gcd(d);
            l = &l * &d.exact_div(&g).unwrap();
        }
        self.coeffs
            .iter()
            .map(|(n, d)| n * &l.exact_div(d).unwrap())
            .collect()
    }
}

fn primitive_part(mut v: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut g = Polynomial::zero();
    for c in &v {
        if !c.is_zero() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
    }
    if !g.is_one() && !g.is_zero() {
        v = v.into_iter().map(|c| c.exact_div(&g).unwrap()).collect();
    }
    // Normalize the rational content across all coefficients.
    let mut den = num_bigint::BigInt::from(1);
    let mut num = num_bigint::BigInt::from(0);
    for c in &v {
        for x in c.coeffs() {
            den = num_integer::Integer::lcm(&den, x.denom());
        }
    }
    for c in &v {
        for x in c.coeffs() {
            let y = x.numer() * (&den / x.denom());
            num = num_integer::Integer::gcd(&num, &y);
        }
    }
    if !num.is_zero() {
        let s = Rational::new(den, num);
        v = v.into_iter().map(|c| c.scale(&s)).collect();
    }
    v
}

fn trim(v: &mut Vec<Polynomial>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder in Q[z][t].
fn prem(f: &[Polynomial], g: &[Polynomial]) -> Vec<Polynomial> {
    let dg = g.len() - 1;
    let lg = &g[dg];
    let mut r = f.to_vec();
    trim(&mut r);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (j, gc) in g.iter().enumerate() {
            let t = &lr * gc;
            r[j + shift] = &r[j + shift] - &t;
        }
        trim(&mut r);
    }
    r
}

/// Monic gcd in `t` over Q(z), by primitive pseudo-remainder sequences.
pub fn function_field_gcd(
    f: &FunctionFieldPolynomial,
    g: &FunctionFieldPolynomial,
) -> FunctionFieldPolynomial {
    let mut a = primitive_part(f.to_bivariate());
    let mut b = primitive_part(g.to_bivariate());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return monic_in_t(&a);
    }
    loop {
        let r = prem(&a, &b);
        if r.is_empty() {
            return monic_in_t(&b);
        }
        if r.len() == 1 {
            return FunctionFieldPolynomial::from_polys(vec![Polynomial::one()]);
        }
        a = b;
        b = primitive_part(r);
    }
}

fn monic_in_t(v: &[Polynomial]) -> FunctionFieldPolynomial {
    let l = v.last().unwrap().clone();
    FunctionFieldPolynomial::new(v.iter().map(|c| (c.clone(), l.clone())).collect())
}

impl fmt::Display for FunctionFieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (i, (n, d)) in self.coeffs.iter().enumerate().rev() {
            if n.is_zero() {
                continue;
            }
            let c = if d.is_one() {
                format!("({n})")
            } else {
                format!("({n})/({d})")
            };
            parts.push(match i {
                0 => c,
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            });
        }
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for FunctionFieldPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FunctionFieldPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zpow(k: usize) -> Polynomial {
        Polynomial::monomial(crate::numeric::rat(1), k)
    }

    fn t_minus_zk(deg: usize) -> FunctionFieldPolynomial {
        // t^deg - z^deg
        let mut c = vec![Polynomial::zero(); deg + 1];
        c[0] = -zpow(deg);
        c[deg] = Polynomial::one();
        FunctionFieldPolynomial::from_polys(c)
    }

    #[test]
    fn gcd_examples() {
        let g = function_field_gcd(&t_minus_zk(4), &t_minus_zk(6));
        assert_eq!(g, t_minus_zk(2));
        let g = function_field_gcd(&t_minus_zk(1), &t_minus_zk(2));
        assert_eq!(g, t_minus_zk(1));
        let mut c = vec![
            -zpow(2) - Polynomial::one(),
            Polynomial::zero(),
            Polynomial::one(),
        ];
        let h = FunctionFieldPolynomial::from_polys(c.clone());
        c[0] = -zpow(2);
        let g = function_field_gcd(&FunctionFieldPolynomial::from_polys(c), &h);
        assert_eq!(g.degree(), Some(0));
    }
}
