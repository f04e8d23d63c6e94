//! Factorization of squarefree polynomials over Q (Zassenhaus).

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::gcd::div_int;
use super::modp::{self, Fp};
use super::poly::mul_int;
use super::Polynomial;

/// Monic irreducible factors of a squarefree nonconstant polynomial.
pub(super) fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let (_, fi) = f.to_primitive_int();
    // Pull out z factors cheaply.
    let mut out = Vec::new();
    let mut fi = fi;
    if fi[0].is_zero() {
        out.push(Polynomial::x());
        fi.remove(0);
    }
    if fi.len() >= 2 {
        for g in factor_int(&fi) {
            out.push(Polynomial::from_ints(&g).monic());
        }
    }
    out
}

fn sym(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_sym(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.iter().map(|x| sym(x, m)).collect();
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn to_big(v: &Fp) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sub_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn add_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(x);
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Factors a primitive squarefree integer polynomial with nonzero constant
/// term and degree >= 1.
fn factor_int(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    // Choose a prime giving few modular factors.
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for p in modp::small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::reduce(f, p);
        if modp::deg(&fp) != n || !modp::is_squarefree(&fp, p) {
            continue;
        }
        let fm = modp::monic(&fp, p);
        let parts = modp::ddf(&fm, p);
        let count: usize = parts.iter().map(|(g, d)| modp::deg(g) / d).sum();
        if count == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, fs)| count < fs.len()) {
            let mut facs = Vec::new();
            for (g, d) in parts {
                facs.extend(modp::edf(&g, d, p, &mut rng));
            }
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (p, facs) = best.unwrap();
    // Mignotte-style bound on factor coefficients.
    let norm2: BigInt = f.iter().map(|c| c * c).sum::<BigInt>().sqrt() + 1;
    let bound = BigInt::from(2u32).pow(n as u32) * norm2 * lc.abs() * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = multi_lift(f, &facs, p, k);
    recombine(f, lifted, &pk)
}

/// Lifts monic modular factors of `f` to monic factors modulo `p^k`.
fn multi_lift(f: &[BigInt], facs: &[Fp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let pk = BigInt::from(p).pow(k);
    if facs.len() == 1 {
        let lc = f.last().unwrap();
        let inv = lc.modinv(&pk).expect("leading coefficient invertible");
        let g: Vec<BigInt> = f.iter().map(|c| c * &inv).collect();
        return vec![reduce_sym(&g, &pk)];
    }
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let g = left.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let lcp = modp::reduce(&[f.last().unwrap().clone()], p)[0];
    let h = modp::scale(
        &right
            .iter()
            .fold(vec![1u64], |acc, x| modp::mul(&acc, x, p)),
        lcp,
        p,
    );
    let (gl, hl) = hensel(f, &g, &h, p, k);
    let mut out = multi_lift(&gl, left, p, k);
    out.extend(multi_lift(&hl, right, p, k));
    out
}

/// Linear Hensel lifting of `f = g h (mod p)`, `g` monic, to modulus `p^k`.
fn hensel(f: &[BigInt], g: &Fp, h: &Fp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = modp::ext_gcd(g, h, p);
    debug_assert_eq!(one, vec![1]);
    let pb = BigInt::from(p);
    let mut gl = to_big(g);
    let mut hl = to_big(h);
    let mut q = pb.clone();
    for _ in 1..k {
        let diff = sub_int(f, &mul_int(&gl, &hl));
        let e: Vec<BigInt> = diff.iter().map(|c| c / &q).collect();
        let ep = modp::reduce(&e, p);
        let (c, sigma) = modp::div_rem(&modp::mul(&ep, &t, p), g, p);
        let tau = modp::add(&modp::mul(&ep, &s, p), &modp::mul(&c, h, p), p);
        let sig: Vec<BigInt> = to_big(&sigma).into_iter().map(|x| x * &q).collect();
        let ta: Vec<BigInt> = to_big(&tau).into_iter().map(|x| x * &q).collect();
        q *= &pb;
        gl = reduce_sym(&add_int(&gl, &sig), &q);
        hl = reduce_sym(&add_int(&hl, &ta), &q);
    }
    (gl, hl)
}

fn recombine(f: &[BigInt], lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let lc = f.last().unwrap().clone();
        for subset in (0..remaining.len()).combinations(s) {
            // Cheap constant-term test first.
            let mut c0 = lc.clone();
            for &i in &subset {
                c0 = sym(&(c0 * &remaining[i][0]), pk);
            }
            if c0.is_zero() || !(&lc * &f[0]).is_multiple_of(&c0) {
                continue;
            }
            let mut prod = vec![lc.clone()];
            for &i in &subset {
                prod = reduce_sym(&mul_int(&prod, &remaining[i]), pk);
            }
            let cand = primitive(prod);
            if let Some(q) = div_int(&f, &cand) {
                out.push(cand);
                f = q;
                let keep: Vec<Vec<BigInt>> = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        s += 1;
    }
    if f.len() > 1 {
        out.push(primitive(f));
    }
    out
}
