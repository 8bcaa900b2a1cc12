//! Polynomials over the prime field, just enough to pick and validate the
//! ambient modulus.

use super::int::{factorize, pow_mod};

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(f.to_vec());
    let dg = g.len() - 1;
    let lead_inv = inv_mod(g[dg], p);
    while r.len() > dg {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        let shift = top - dg;
        for (i, &gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * gi % p) % p;
        }
        r = trim(r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    rem(&out, f, p)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// `x^(p^k) mod f`.
fn frobenius_power_of_x(k: usize, f: &[u64], p: u64) -> Vec<u64> {
    let mut cur = rem(&[0, 1], f, p);
    for _ in 0..k {
        // raise to the p-th power by square-and-multiply
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, f, p);
            }
            base = mul_mod(&base, &base, f, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

fn sub_x(g: &[u64], p: u64) -> Vec<u64> {
    let mut g = g.to_vec();
    if g.len() < 2 {
        g.resize(2, 0);
    }
    g[1] = (g[1] + p - 1) % p;
    trim(g)
}

/// Rabin's irreducibility test for a monic `f` of degree `d` over GF(p).
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let full = sub_x(&frobenius_power_of_x(d, &f, p), p);
    if !full.is_empty() {
        return false;
    }
    for (l, _) in factorize(d as u64) {
        let g = sub_x(&frobenius_power_of_x(d / l as usize, &f, p), p);
        if gcd(&f, &g, p).len() != 1 {
            return false;
        }
    }
    true
}

/// The monic irreducible polynomial of degree `d` over GF(p) with the
/// smallest integer encoding `sum c_i p^i`, coefficients constant term first.
pub fn smallest_irreducible(d: usize, p: u64) -> Vec<u64> {
    let span = p.pow(d as u32);
    for tail in 0..span {
        let mut f = Vec::with_capacity(d + 1);
        let mut t = tail;
        for _ in 0..d {
            f.push(t % p);
            t /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
