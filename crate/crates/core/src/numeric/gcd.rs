//! Modular gcd in Z[z], lifted to a monic gcd over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::Polynomial;

pub(super) fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    let (_, ai) = a.to_primitive_int();
    let (_, bi) = b.to_primitive_int();
    Polynomial::from_ints(&gcd_int(&ai, &bi)).monic()
}

/// Exact division test in Z[z]; returns the quotient when `d | a`.
pub(crate) fn div_int(a: &[BigInt], d: &[BigInt]) -> Option<Vec<BigInt>> {
    if d.is_empty() {
        return None;
    }
    if a.len() < d.len() {
        return a.iter().all(|c| c.is_zero()).then(Vec::new);
    }
    let dd = d.len() - 1;
    let lead = &d[dd];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for i in (0..q.len()).rev() {
        let (c, m) = r[i + dd].div_rem(lead);
        if !m.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, dc) in d.iter().enumerate() {
                r[i + j] -= &c * dc;
            }
        }
        q[i] = c;
    }
    r[..dd].iter().all(|c| c.is_zero()).then_some(q)
}

fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v;
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Gcd of primitive nonconstant integer polynomials (primitive, lc > 0).
pub(crate) fn gcd_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let la = a.last().unwrap();
    let lb = b.last().unwrap();
    let g = la.gcd(lb);
    let mut best: Option<usize> = None;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last_candidate: Option<Vec<BigInt>> = None;
    for p in modp::large_primes() {
        let pb = BigInt::from(p);
        if (la % &pb).is_zero() || (lb % &pb).is_zero() {
            continue;
        }
        let gp = modp::gcd(&modp::reduce(a, p), &modp::reduce(b, p), p);
        let d = modp::deg(&gp);
        if d == 0 {
            return vec![BigInt::one()];
        }
        let scaled = modp::scale(&gp, modp::reduce(std::slice::from_ref(&g), p)[0], p);
        let scaled: Vec<BigInt> = (0..=d)
            .map(|i| BigInt::from(scaled.get(i).copied().unwrap_or(0)))
            .collect();
        match best {
            Some(bd) if d > bd => continue,
            Some(bd) if d == bd => {
                // CRT: acc mod modulus, scaled mod p.
                let inv = BigInt::from(modp::invm((&modulus % &pb).try_into().unwrap(), p));
                for (x, y) in acc.iter_mut().zip(scaled.iter()) {
                    let t = ((y - &*x) * &inv).mod_floor(&pb);
                    *x += &modulus * t;
                }
                modulus *= &pb;
            }
            _ => {
                best = Some(d);
                acc = scaled;
                modulus = pb;
                last_candidate = None;
                continue;
            }
        }
        let cand: Vec<BigInt> = acc.iter().map(|x| symmetric(x, &modulus)).collect();
        if last_candidate.as_ref() == Some(&cand) {
            let pp = primitive(cand.clone());
            if div_int(a, &pp).is_some() && div_int(b, &pp).is_some() {
                return pp;
            }
        }
        last_candidate = Some(cand);
    }
    unreachable!("prime supply exhausted")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn int_gcd() {
        // (2z+1)^2 (z-1) and 12 z^2 - 3 share 2z+1.
        let g = gcd_int(&ints(&[-1, -3, 0, 4]), &ints(&[-1, 0, 4]));
        assert_eq!(g, ints(&[1, 2]));
    }

    #[test]
    fn big_coefficients() {
        let a = Polynomial::from_i64(&[123456789, 987654321, 1]);
        let b = Polynomial::from_i64(&[-3, 7, 11]);
        let c = Polynomial::from_i64(&[5, 0, 0, 1000003]);
        let g = gcd(&(&a * &c), &(&b * &c));
        assert_eq!(g, c.monic());
    }
}
