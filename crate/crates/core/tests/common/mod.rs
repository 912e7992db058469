#![allow(dead_code)]

use mq_core::arith::{Field, PrimeField, PrimeFieldElem};
use mq_core::poly::Form;

pub fn binary(fp: PrimeField, coeffs: &[u64]) -> Form<PrimeField> {
    let d = coeffs.len() as u32 - 1;
    Form::from_terms(fp, 2, coeffs.iter().enumerate().map(|(k, &c)| (vec![d - k as u32, k as u32], fp.elem(c)))).unwrap()
}

// Univariate polynomials over F_p, lowest degree first.
pub fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let lead_inv = mod_pow(*b.last().unwrap(), p - 2, p);
    while a.len() >= b.len() {
        let q = a.last().unwrap() * lead_inv % p;
        let shift = a.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            a[shift + i] = (a[shift + i] + p - q * c % p) % p;
        }
        a = trim(a);
        if a.is_empty() {
            break;
        }
    }
    a
}

pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn gcd_degree(a: Vec<u64>, b: Vec<u64>, p: u64) -> usize {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

// coeffs[k] multiplies x0^(d-k) x1^k. Setting x0 = t, x1 = 1 gives the
// coefficient of t^(d-k); the point at infinity [1:0] is a root iff coeffs[0] = 0.
pub fn share_root_oracle(r: &[u64], s: &[u64], p: u64) -> bool {
    if r[0] == 0 && s[0] == 0 {
        return true;
    }
    let dehom = |c: &[u64]| c.iter().rev().copied().collect::<Vec<_>>();
    gcd_degree(dehom(r), dehom(s), p) >= 1
}

pub fn rational_common_root(r: &Form<PrimeField>, s: &Form<PrimeField>, fp: &PrimeField) -> bool {
    let p = fp.modulus();
    let mut pts: Vec<[PrimeFieldElem; 2]> = (0..p).map(|t| [fp.elem(t), fp.one()]).collect();
    pts.push([fp.one(), fp.zero()]);
    pts.iter().any(|pt| fp.is_zero(&r.evaluate(pt).unwrap()) && fp.is_zero(&s.evaluate(pt).unwrap()))
}

pub fn mul_binary(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

pub fn laplace(m: &[Vec<i64>]) -> i64 {
    if m.len() == 1 {
        return m[0][0];
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect()).collect();
            (if j % 2 == 0 { 1 } else { -1 }) * m[0][j] * laplace(&minor)
        })
        .sum()
}

