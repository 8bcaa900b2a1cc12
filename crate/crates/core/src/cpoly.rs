//! Conventional polynomials over GF(q^m): Euclidean arithmetic, the Frobenius
//! ring automorphism, conjugate gcd/lcm closures, reciprocal duals, orders,
//! root sets and the factorization of x^n - 1.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{int, Element, FieldTower};

/// Default search bound for [`CPoly::order_a`].
pub const DEFAULT_ORDER_CAP: u64 = 1 << 20;

/// Dense polynomial, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    coeffs: Vec<Element>,
}

/// `ord_a(f)`, which is infinite exactly when `f(0) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u64),
    Infinite,
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Order::Finite(v) => write!(f, "{v}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Order {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(e) => s.serialize_u64(*e),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(e) => Ok(Order::Finite(e)),
            Raw::Str(s) if s == "inf" => Ok(Order::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad order {s:?}"))),
        }
    }
}

impl Order {
    pub fn finite(self) -> Option<u64> {
        match self {
            Order::Finite(e) => Some(e),
            Order::Infinite => None,
        }
    }
}

impl CPoly {
    pub fn new(mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        CPoly { coeffs }
    }

    pub fn zero() -> Self {
        CPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        CPoly::constant(Element::ONE)
    }

    pub fn constant(c: Element) -> Self {
        CPoly::new(vec![c])
    }

    /// `c x^d`.
    pub fn monomial(c: Element, d: usize) -> Self {
        let mut v = vec![Element::ZERO; d + 1];
        v[d] = c;
        CPoly::new(v)
    }

    pub fn x() -> Self {
        CPoly::monomial(Element::ONE, 1)
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(tw: &FieldTower, n: usize) -> Self {
        let mut v = vec![Element::ZERO; n + 1];
        v[0] = tw.neg(Element::ONE);
        v[n] = tw.add(v[n], Element::ONE);
        CPoly::new(v)
    }

    /// `x^e - c`.
    pub fn binomial(tw: &FieldTower, e: usize, c: Element) -> Self {
        let mut v = vec![Element::ZERO; e + 1];
        v[0] = tw.neg(c);
        v[e] = tw.add(v[e], Element::ONE);
        CPoly::new(v)
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Element {
        self.coeffs.get(i).copied().unwrap_or(Element::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Element {
        self.coeffs.last().copied().unwrap_or(Element::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Element::ONE
    }

    /// Coefficient vector of length `n`, zero padded; `None` if the degree is `>= n`.
    pub fn to_vector(&self, n: usize) -> Option<Vec<Element>> {
        if self.coeffs.len() > n {
            return None;
        }
        let mut v = self.coeffs.clone();
        v.resize(n, Element::ZERO);
        Some(v)
    }

    pub fn add(&self, other: &CPoly, tw: &FieldTower) -> CPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        CPoly::new(
            (0..len)
                .map(|i| tw.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &CPoly, tw: &FieldTower) -> CPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        CPoly::new(
            (0..len)
                .map(|i| tw.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: Element, tw: &FieldTower) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|&a| tw.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &CPoly, tw: &FieldTower) -> CPoly {
        if self.is_zero() || other.is_zero() {
            return CPoly::zero();
        }
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = tw.add(out[i + j], tw.mul(a, b));
            }
        }
        CPoly::new(out)
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self, tw: &FieldTower) -> CPoly {
        match tw.inv(self.leading()) {
            Some(inv) => self.scale(inv, tw),
            None => CPoly::zero(),
        }
    }

    pub fn eval(&self, x: Element, tw: &FieldTower) -> Element {
        self.coeffs
            .iter()
            .rev()
            .fold(Element::ZERO, |acc, &c| tw.add(tw.mul(acc, x), c))
    }

    /// `f(c x)`.
    pub fn compose_scaled(&self, c: Element, tw: &FieldTower) -> CPoly {
        let mut pw = Element::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(tw.mul(a, pw));
            pw = tw.mul(pw, c);
        }
        CPoly::new(out)
    }

    /// Euclidean division `self = q g + r`, `deg r < deg g`.
    pub fn divmod(&self, g: &CPoly, tw: &FieldTower) -> Result<(CPoly, CPoly)> {
        let dg = g.degree().ok_or(Error::DivisionByZeroPoly)?;
        let inv = tw.inv(g.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dg {
            return Ok((CPoly::zero(), self.clone()));
        }
        let mut q = vec![Element::ZERO; r.len() - dg];
        for top in (dg..r.len()).rev() {
            let c = tw.mul(r[top], inv);
            if c.is_zero() {
                continue;
            }
            q[top - dg] = c;
            for (i, &gi) in g.coeffs.iter().enumerate() {
                let idx = top - dg + i;
                r[idx] = tw.sub(r[idx], tw.mul(c, gi));
            }
        }
        Ok((CPoly::new(q), CPoly::new(r)))
    }

    pub fn rem(&self, g: &CPoly, tw: &FieldTower) -> Result<CPoly> {
        Ok(self.divmod(g, tw)?.1)
    }

    /// Exact quotient; `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &CPoly, tw: &FieldTower) -> Option<CPoly> {
        let (q, r) = self.divmod(g, tw).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &CPoly, tw: &FieldTower) -> bool {
        !self.is_zero() && f.rem(self, tw).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd and monic lcm.
    pub fn gcd_lcm(&self, g: &CPoly, tw: &FieldTower) -> Result<(CPoly, CPoly)> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let d = self.gcd(g, tw);
        let l = if self.is_zero() || g.is_zero() {
            CPoly::zero()
        } else {
            let (q, _) = self.mul(g, tw).divmod(&d, tw)?;
            q.monic(tw)
        };
        Ok((d, l))
    }

    fn gcd(&self, g: &CPoly, tw: &FieldTower) -> CPoly {
        let mut a = self.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = a.rem(&b, tw).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(tw)
    }

    /// `(d, s, t)` with `d = s f + t g` monic.
    pub fn ext_gcd(&self, g: &CPoly, tw: &FieldTower) -> Result<(CPoly, CPoly, CPoly)> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), g.clone());
        let (mut s0, mut s1) = (CPoly::one(), CPoly::zero());
        let (mut t0, mut t1) = (CPoly::zero(), CPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1, tw)?;
            let s = s0.sub(&q.mul(&s1, tw), tw);
            let t = t0.sub(&q.mul(&t1, tw), tw);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = tw.inv(r0.leading()).expect("gcd is nonzero");
        Ok((r0.scale(inv, tw), s0.scale(inv, tw), t0.scale(inv, tw)))
    }

    /// Coefficient-wise `q^s` power.
    pub fn apply_frobenius(&self, s: usize, tw: &FieldTower) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|&c| tw.frobenius(c, s)).collect())
    }

    /// `(f*, f0)`: gcd and lcm of the conjugates `f, theta_1 f, ..., theta_(m-1) f`.
    pub fn conjugate_closures(&self, tw: &FieldTower) -> Result<(CPoly, CPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        let mut star = self.monic(tw);
        let mut zero = star.clone();
        for i in 1..tw.m() {
            let c = self.apply_frobenius(i, tw);
            star = star.gcd_lcm(&c, tw)?.0;
            zero = zero.gcd_lcm(&c, tw)?.1;
        }
        debug_assert!(star.has_coeffs_in(1, tw) && zero.has_coeffs_in(1, tw));
        Ok((star, zero))
    }

    /// True when every coefficient lies in GF(q^d).
    pub fn has_coeffs_in(&self, d: usize, tw: &FieldTower) -> bool {
        self.coeffs.iter().all(|&c| tw.in_subfield(c, d))
    }

    /// `x^deg f * f(1/x) / f(0)`.
    pub fn reciprocal_dual(&self, tw: &FieldTower) -> Result<CPoly> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(if self.is_zero() {
                Error::ZeroPoly
            } else {
                Error::ZeroConstantTerm
            });
        }
        let inv = tw.inv(c0).expect("nonzero");
        Ok(CPoly::new(
            self.coeffs.iter().rev().map(|&c| tw.mul(c, inv)).collect(),
        ))
    }

    /// `self^e mod f`.
    pub fn pow_mod(&self, mut e: u64, f: &CPoly, tw: &FieldTower) -> Result<CPoly> {
        let mut acc = CPoly::one().rem(f, tw)?;
        let mut base = self.rem(f, tw)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, tw).rem(f, tw)?;
            }
            base = base.mul(&base, tw).rem(f, tw)?;
            e >>= 1;
        }
        Ok(acc)
    }

    fn check_base_unit(a: Element, tw: &FieldTower) -> Result<()> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !tw.in_base_field(a) {
            return Err(Error::NotInBaseField(tw.display(a)));
        }
        Ok(())
    }

    /// `ord_a(f)`: least `e >= 1` with `f | x^e - a^e`, by stepping `x^e mod f`.
    pub fn order_a(&self, a: Element, tw: &FieldTower) -> Result<Order> {
        self.order_a_capped(a, DEFAULT_ORDER_CAP, tw)
    }

    pub fn order_a_capped(&self, a: Element, cap: u64, tw: &FieldTower) -> Result<Order> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        Self::check_base_unit(a, tw)?;
        if self.coeff(0).is_zero() {
            return Ok(Order::Infinite);
        }
        let f = self.monic(tw);
        let x = CPoly::x().rem(&f, tw)?;
        let mut cur = x.clone();
        let mut ae = a;
        for e in 1..=cap {
            if cur == CPoly::constant(ae).rem(&f, tw)? {
                return Ok(Order::Finite(e));
            }
            cur = cur.mul(&x, tw).rem(&f, tw)?;
            ae = tw.mul(ae, a);
        }
        Err(Error::OrderCapExceeded(cap))
    }

    /// `ord_a(f)` for `f | x^n - 1`: the order divides `n * ord(a^n)`, so only
    /// those divisors are tested, in increasing order.
    pub fn order_a_dividing(&self, a: Element, n: usize, tw: &FieldTower) -> Result<Order> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        Self::check_base_unit(a, tw)?;
        let f = self.monic(tw);
        if !f.divides(&CPoly::xn_minus_1(tw, n), tw) {
            return Err(Error::NotADivisor(n));
        }
        let an = tw.pow(a, n as u64);
        let mut ord_an = 1u64;
        let mut y = an;
        while y != Element::ONE {
            y = tw.mul(y, an);
            ord_an += 1;
        }
        for e in int::divisors(n as u64 * ord_an) {
            let lhs = CPoly::x().pow_mod(e, &f, tw)?;
            if lhs == CPoly::constant(tw.pow(a, e)).rem(&f, tw)? {
                return Ok(Order::Finite(e));
            }
        }
        unreachable!("x^(n ord(a^n)) = a^(n ord(a^n)) modulo any divisor of x^n - 1")
    }

    /// Exponent set `S` with `f = prod_{s in S} (x - zeta^s)` (monic associate).
    pub fn root_set(&self, n: usize, tw: &FieldTower) -> Result<RootSet> {
        let zeta = zeta(n, tw)?;
        let f = self.monic(tw);
        if f.is_zero() || !f.divides(&CPoly::xn_minus_1(tw, n), tw) {
            return Err(Error::NotADivisor(n));
        }
        let mut exps = BTreeSet::new();
        let mut z = Element::ONE;
        for s in 0..n {
            if f.eval(z, tw).is_zero() {
                exps.insert(s);
            }
            z = tw.mul(z, zeta);
        }
        debug_assert_eq!(Some(exps.len()), f.degree());
        Ok(RootSet {
            n,
            exponents: exps,
            zeta_degree: int::mult_order(tw.q() % n as u64, n as u64) as usize,
        })
    }

    /// `(mu_q(g), eta_q)`: the lcm of the conjugates of `g`, cross-checked
    /// against the product of the GF(q)-minimal polynomials of its roots.
    pub fn mu_eta(&self, n: usize, tw: &FieldTower) -> Result<(CPoly, usize)> {
        let roots = self.root_set(n, tw)?;
        let via_closure = self.conjugate_closures(tw)?.1;
        let via_minpolys = roots.minimal_polynomial_product(tw)?;
        if via_closure != via_minpolys {
            return Err(Error::PathDisagreement {
                quantity: "mu_q".into(),
                detail: format!(
                    "lcm of conjugates has degree {:?}, minimal-polynomial product {:?}",
                    via_closure.degree(),
                    via_minpolys.degree()
                ),
            });
        }
        let deg = via_closure.degree().unwrap_or(0);
        Ok((via_closure, deg))
    }
}

/// Fixed primitive `n`-th root of unity `gamma^((p^N - 1) / n)`.
pub fn zeta(n: usize, tw: &FieldTower) -> Result<Element> {
    if int::gcd(tw.q(), n as u64) != 1 {
        return Err(Error::NotCoprime(n));
    }
    let order = tw.size() - 1;
    if !order.is_multiple_of(n as u64) {
        return Err(Error::DeskScaleExceeded(format!(
            "no primitive {n}-th root of unity in the ambient field"
        )));
    }
    Ok(tw.pow(tw.generator(), order / n as u64))
}

/// Root set of a divisor of `x^n - 1` as exponents of the fixed `zeta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSet {
    pub n: usize,
    pub exponents: BTreeSet<usize>,
    #[serde(skip)]
    pub zeta_degree: usize,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    /// All of `Z_n`.
    pub fn full(n: usize, zeta_degree: usize) -> Self {
        RootSet {
            n,
            exponents: (0..n).collect(),
            zeta_degree,
        }
    }

    /// `t * S mod n`.
    pub fn scaled(&self, t: u64) -> RootSet {
        RootSet {
            n: self.n,
            exponents: self
                .exponents
                .iter()
                .map(|&s| (s as u64 * t % self.n as u64) as usize)
                .collect(),
            zeta_degree: self.zeta_degree,
        }
    }

    /// The image under `theta_i`: `q^i * S`.
    pub fn frobenius(&self, i: usize, tw: &FieldTower) -> RootSet {
        self.scaled(int::pow_mod(tw.q(), i as u64, self.n as u64))
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet {
            exponents: self.exponents.union(&other.exponents).copied().collect(),
            ..self.clone()
        }
    }

    pub fn intersection(&self, other: &RootSet) -> RootSet {
        RootSet {
            exponents: self
                .exponents
                .intersection(&other.exponents)
                .copied()
                .collect(),
            ..self.clone()
        }
    }

    /// Union and intersection of `q^i S` over `i = 0..m`.
    pub fn conjugate_union_intersection(&self, tw: &FieldTower) -> (RootSet, RootSet) {
        let mut u = self.clone();
        let mut c = self.clone();
        for i in 1..tw.m() {
            let img = self.frobenius(i, tw);
            u = u.union(&img);
            c = c.intersection(&img);
        }
        (u, c)
    }

    /// Whether `S` is closed under multiplication by `t` mod `n`.
    pub fn closed_under(&self, t: u64) -> bool {
        self.scaled(t) == *self
    }

    /// `prod_{s in S} (x - zeta^s)`.
    pub fn polynomial(&self, tw: &FieldTower) -> Result<CPoly> {
        let z = zeta(self.n, tw)?;
        Ok(self.exponents.iter().fold(CPoly::one(), |acc, &s| {
            let root = tw.pow(z, s as u64);
            acc.mul(&CPoly::new(vec![tw.neg(root), Element::ONE]), tw)
        }))
    }

    /// Product of the GF(q)-minimal polynomials of the roots, one per
    /// q-cyclotomic coset met by `S`.
    pub fn minimal_polynomial_product(&self, tw: &FieldTower) -> Result<CPoly> {
        let n = self.n as u64;
        let mut covered = BTreeSet::new();
        for &s in &self.exponents {
            let mut t = s as u64;
            loop {
                if !covered.insert(t as usize) {
                    break;
                }
                t = t * tw.q() % n;
            }
        }
        RootSet {
            exponents: covered,
            ..self.clone()
        }
        .polynomial(tw)
    }
}

/// Irreducible factors of `x^n - 1` over GF(q^d), with multiplicities,
/// ordered by least cyclotomic-coset representative.
pub fn factor_xn_minus_1_over(n: usize, d: usize, tw: &FieldTower) -> Result<Vec<(CPoly, u32)>> {
    if !tw.is_declared_subfield(d) {
        return Err(Error::UndeclaredSubfield(d));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (n_free, t) = int::strip_prime(n as u64, tw.p());
    let mult = tw.p().pow(t) as u32;
    let order = tw.size() - 1;
    if !order.is_multiple_of(n_free) {
        return Err(Error::DeskScaleExceeded(format!(
            "x^{n_free} - 1 does not split in the ambient field"
        )));
    }
    let z = tw.pow(tw.generator(), order / n_free);
    let big_q = tw.q().pow(d as u32) % n_free.max(1);
    let mut seen = vec![false; n_free as usize];
    let mut out = Vec::new();
    for s in 0..n_free {
        if seen[s as usize] {
            continue;
        }
        let mut f = CPoly::one();
        let mut c = s;
        while !seen[c as usize] {
            seen[c as usize] = true;
            let root = tw.pow(z, c);
            f = f.mul(&CPoly::new(vec![tw.neg(root), Element::ONE]), tw);
            c = c * big_q % n_free;
        }
        debug_assert!(f.has_coeffs_in(d, tw));
        out.push((f, mult));
    }
    Ok(out)
}

/// Irreducible factors of `x^n - 1` over GF(q^m).
pub fn factor_xn_minus_1(n: usize, tw: &FieldTower) -> Result<Vec<(CPoly, u32)>> {
    factor_xn_minus_1_over(n, tw.m(), tw)
}

/// Every monic divisor of `x^n - 1` over GF(q^m), ordered by factor exponents.
pub fn divisors_of_xn_minus_1(n: usize, tw: &FieldTower) -> Result<Vec<CPoly>> {
    let factors = factor_xn_minus_1(n, tw)?;
    let mut out = vec![CPoly::one()];
    for (f, mult) in &factors {
        let mut next = Vec::with_capacity(out.len() * (*mult as usize + 1));
        for g in &out {
            let mut cur = g.clone();
            next.push(cur.clone());
            for _ in 0..*mult {
                cur = cur.mul(f, tw);
                next.push(cur.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_tower;

    fn gf4() -> FieldTower {
        make_tower(2, 1, 2, 0, 3).unwrap()
    }

    fn p(tw: &FieldTower, c: &[Element]) -> CPoly {
        let _ = tw;
        CPoly::new(c.to_vec())
    }

    #[test]
    fn divmod_examples() {
        let t = gf4();
        let (o, z) = (Element::ONE, Element::ZERO);
        let a = t.alpha();
        let a2 = t.mul(a, a);
        assert_eq!(a2, t.add(a, o));
        let f = CPoly::xn_minus_1(&t, 3);
        let (q, r) = f.divmod(&p(&t, &[o, o]), &t).unwrap();
        assert_eq!(q, p(&t, &[o, o, o]));
        assert!(r.is_zero());
        let (q, r) = f.divmod(&f, &t).unwrap();
        assert_eq!((q, r), (CPoly::one(), CPoly::zero()));
        // (x^3 + 1) / (x + a) = x^2 + a x + a^2
        let (q, r) = f.divmod(&p(&t, &[a, o]), &t).unwrap();
        assert_eq!(q, p(&t, &[a2, a, o]));
        assert!(r.is_zero());
        assert_eq!(q.mul(&p(&t, &[a, o]), &t), f);
        assert_eq!(f.divmod(&CPoly::zero(), &t), Err(Error::DivisionByZeroPoly));
        let _ = z;
    }

    #[test]
    fn gcd_lcm_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        let a2 = t.mul(a, a);
        let f = p(&t, &[a, o]);
        assert_eq!(f.gcd_lcm(&CPoly::zero(), &t).unwrap().0, f);
        let (g, l) = f.gcd_lcm(&p(&t, &[a2, o]), &t).unwrap();
        assert_eq!(g, CPoly::one());
        assert_eq!(l, p(&t, &[o, o, o]));
        assert_eq!(
            CPoly::zero().gcd_lcm(&CPoly::zero(), &t),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn frobenius_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        assert_eq!(
            p(&t, &[a, o]).apply_frobenius(1, &t),
            p(&t, &[t.mul(a, a), o])
        );
        let rational = p(&t, &[o, o, Element::ZERO, o]);
        assert_eq!(rational.apply_frobenius(1, &t), rational);
    }

    #[test]
    fn closure_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        let a2 = t.mul(a, a);
        let (s, z) = p(&t, &[a, o]).conjugate_closures(&t).unwrap();
        assert_eq!(s, CPoly::one());
        assert_eq!(z, p(&t, &[o, o, o]));
        // x^2 + a x + a^2 = (x + 1)(x + a^2); its conjugate is (x + 1)(x + a)
        let f = p(&t, &[a2, a, o]);
        assert_eq!(f, p(&t, &[o, o]).mul(&p(&t, &[a2, o]), &t));
        let (s, z) = f.conjugate_closures(&t).unwrap();
        assert_eq!(z, CPoly::xn_minus_1(&t, 3));
        assert_eq!(s, p(&t, &[o, o]));
        let rational = p(&t, &[o, o, o]);
        assert_eq!(
            rational.conjugate_closures(&t).unwrap(),
            (rational.clone(), rational)
        );
        assert_eq!(CPoly::zero().conjugate_closures(&t), Err(Error::ZeroPoly));
    }

    #[test]
    fn reciprocal_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        let a2 = t.mul(a, a);
        let xm1 = p(&t, &[o, o]);
        assert_eq!(xm1.reciprocal_dual(&t).unwrap(), xm1);
        let f = p(&t, &[a2, a, o]);
        let d = f.reciprocal_dual(&t).unwrap();
        // reverse [a^2, a, 1] -> [1, a, a^2], scaled by a^-2
        let inv = t.inv(a2).unwrap();
        assert_eq!(d, p(&t, &[inv, t.mul(a, inv), o]));
        assert_eq!(d.reciprocal_dual(&t).unwrap(), f.monic(&t));
        assert_eq!(CPoly::x().reciprocal_dual(&t), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn order_examples() {
        let t = gf4();
        let o = Element::ONE;
        assert_eq!(p(&t, &[o, o]).order_a(o, &t).unwrap(), Order::Finite(1));
        assert_eq!(CPoly::x().order_a(o, &t).unwrap(), Order::Infinite);
        let t3 = make_tower(3, 1, 2, 0, 4).unwrap();
        let one = Element::ONE;
        // x + 1 over GF(3): (-1)^e = 1 forces e even
        let f = p(&t3, &[one, one]);
        assert_eq!(f.order_a(one, &t3).unwrap(), Order::Finite(2));
        assert!(!f.divides(&CPoly::binomial(&t3, 1, one), &t3));
        assert!(f.divides(&CPoly::binomial(&t3, 2, one), &t3));
        // ord_a(x - a) = 1
        let two = t3.from_int(2);
        let g = CPoly::binomial(&t3, 1, two);
        assert_eq!(g.order_a(two, &t3).unwrap(), Order::Finite(1));
        assert_eq!(
            g.order_a(t3.alpha(), &t3),
            Err(Error::NotInBaseField("a".into()))
        );
    }

    #[test]
    fn root_set_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        let full = CPoly::xn_minus_1(&t, 3).root_set(3, &t).unwrap();
        assert_eq!(full.exponents, (0..3).collect());
        let z = zeta(3, &t).unwrap();
        let s = (0..3).find(|&s| t.pow(z, s) == a).unwrap() as usize;
        let rs = p(&t, &[a, o]).root_set(3, &t).unwrap();
        assert_eq!(rs.exponents, [s].into_iter().collect());
        assert_eq!(rs.polynomial(&t).unwrap(), p(&t, &[a, o]));
        assert_eq!(
            p(&t, &[o, o, o, o]).root_set(3, &t),
            Err(Error::NotADivisor(3))
        );
        let t6 = make_tower(2, 1, 2, 0, 6).unwrap();
        assert_eq!(CPoly::one().root_set(6, &t6), Err(Error::NotCoprime(6)));
    }

    #[test]
    fn mu_eta_examples() {
        let t = gf4();
        let (o, a) = (Element::ONE, t.alpha());
        let (mu, eta) = p(&t, &[a, o]).mu_eta(3, &t).unwrap();
        assert_eq!(mu, p(&t, &[o, o, o]));
        assert_eq!(eta, 2);
        let (_, eta) = CPoly::xn_minus_1(&t, 3).mu_eta(3, &t).unwrap();
        assert_eq!(eta, 3);
        let g = p(&t, &[o, o]);
        assert_eq!(g.mu_eta(3, &t).unwrap(), (g.clone(), 1));
    }

    #[test]
    fn factorization_examples() {
        let t = gf4();
        let over_gf2 = factor_xn_minus_1_over(3, 1, &t).unwrap();
        let o = Element::ONE;
        assert_eq!(over_gf2, vec![(p(&t, &[o, o]), 1), (p(&t, &[o, o, o]), 1)]);
        let over_gf4 = factor_xn_minus_1(3, &t).unwrap();
        assert_eq!(over_gf4.len(), 3);
        assert!(over_gf4
            .iter()
            .all(|(f, k)| f.degree() == Some(1) && *k == 1));
        let t4 = make_tower(2, 1, 1, 0, 4).unwrap();
        assert_eq!(
            factor_xn_minus_1(4, &t4).unwrap(),
            vec![(p(&t4, &[o, o]), 4)]
        );
        for (n, m) in [(6, 2), (7, 3), (5, 2), (4, 3)] {
            let tw = make_tower(2, 1, m, 0, n).unwrap();
            let prod = factor_xn_minus_1(n, &tw)
                .unwrap()
                .iter()
                .fold(CPoly::one(), |acc, (f, k)| {
                    (0..*k).fold(acc, |a, _| a.mul(f, &tw))
                });
            assert_eq!(prod, CPoly::xn_minus_1(&tw, n));
        }
        assert_eq!(divisors_of_xn_minus_1(3, &t).unwrap().len(), 8);
        assert_eq!(
            divisors_of_xn_minus_1(7, &make_tower(2, 1, 3, 0, 7).unwrap())
                .unwrap()
                .len(),
            128
        );
    }
}
