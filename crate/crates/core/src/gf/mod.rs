//! Exact arithmetic in a single ambient field GF(p^N) that contains every
//! field the codes need: GF(q), GF(q^m), GF(q^(rn)) and the splitting field
//! of x^n - 1.
//!
//! Subfields are never represented separately. An element lies in GF(q^d)
//! exactly when it is fixed by x -> x^(q^d).

mod fpoly;
pub mod int;
mod matrix;
mod subfield;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use matrix::Matrix;
pub use subfield::SubfieldCoords;

/// Default bound on the number of ambient elements.
pub const DEFAULT_AMBIENT_CAP: u64 = 1 << 24;

/// Log/antilog tables are built only below this size.
const TABLE_LIMIT: u64 = 1 << 16;

/// An ambient field element, packed as the integer `sum c_i p^i` of its
/// coordinates over GF(p) in the polynomial basis of the modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element(pub(crate) u32);

impl Element {
    pub const ZERO: Element = Element(0);
    pub const ONE: Element = Element(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed index, in `0..p^N`.
    pub fn index(self) -> u32 {
        self.0
    }
}

/// The parameters a tower is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TowerParams {
    pub p: u64,
    pub e: usize,
    pub m: usize,
    /// Skew order; 0 for purely cyclic work.
    pub r: usize,
    pub n: usize,
}

/// Field spec serialization: the parameters plus the ambient modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub e: usize,
    pub m: usize,
    pub r: usize,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub struct FieldTower {
    params: TowerParams,
    q: u64,
    degree: usize,
    size: u64,
    modulus: Vec<u64>,
    generator: Element,
    tables: Option<LogTables>,
    coords: Mutex<HashMap<(usize, usize), Arc<SubfieldCoords>>>,
}

impl fmt::Debug for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTower")
            .field("params", &self.params)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Ambient degree over GF(p) needed for the given parameters.
pub fn ambient_degree(params: &TowerParams) -> u64 {
    let q = params.p.pow(params.e as u32);
    let (n_free, _) = int::strip_prime(params.n as u64, params.p);
    let split = int::mult_order(q % n_free.max(1), n_free.max(1));
    let mut d = int::lcm(params.m as u64, split);
    if params.r >= 1 {
        d = int::lcm(d, (params.r * params.n) as u64);
    }
    d * params.e as u64
}

/// Builds a tower with the default ambient cap.
pub fn make_tower(p: u64, e: usize, m: usize, r: usize, n: usize) -> Result<FieldTower> {
    FieldTower::new(TowerParams { p, e, m, r, n }, DEFAULT_AMBIENT_CAP)
}

impl FieldTower {
    pub fn new(params: TowerParams, cap: u64) -> Result<Self> {
        Self::build(params, cap, None)
    }

    /// Rebuilds a tower from its serialized spec, validating a supplied modulus.
    pub fn from_spec(spec: &FieldSpec, cap: u64) -> Result<Self> {
        let params = TowerParams {
            p: spec.p,
            e: spec.e,
            m: spec.m,
            r: spec.r,
            n: spec.n,
        };
        Self::build(params, cap, spec.modulus.clone())
    }

    fn build(params: TowerParams, cap: u64, modulus: Option<Vec<u64>>) -> Result<Self> {
        let TowerParams { p, e, m, r, n } = params;
        if !int::is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if e == 0 || m == 0 || n == 0 {
            return Err(Error::InvalidParameter(
                "e, m and n must be at least 1".into(),
            ));
        }
        if r >= 1 && (r * n) % m != 0 {
            return Err(Error::SkewDivisibilityViolated { m, r, rn: r * n });
        }
        let degree = ambient_degree(&params) as usize;
        let too_large = Error::AmbientTooLarge { p, degree, cap };
        let size = (p as u128)
            .checked_pow(degree as u32)
            .filter(|&s| s <= cap as u128 && s <= u32::MAX as u128)
            .ok_or(too_large)? as u64;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != degree + 1 || f[degree] != 1 || f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidParameter(format!(
                        "modulus must be a monic polynomial of degree {degree} over GF({p})"
                    )));
                }
                if !fpoly::is_irreducible(&f, p) {
                    return Err(Error::InvalidParameter("modulus is not irreducible".into()));
                }
                f
            }
            None => fpoly::smallest_irreducible(degree, p),
        };
        let mut tower = FieldTower {
            params,
            q: p.pow(e as u32),
            degree,
            size,
            modulus,
            generator: Element::ONE,
            tables: None,
            coords: Mutex::new(HashMap::new()),
        };
        tower.generator = tower.find_primitive();
        if size <= TABLE_LIMIT {
            tower.tables = Some(tower.build_tables());
        }
        Ok(tower)
    }

    fn find_primitive(&self) -> Element {
        let order = self.size - 1;
        let primes: Vec<u64> = int::factorize(order).into_iter().map(|(l, _)| l).collect();
        (1..self.size as u32)
            .map(Element)
            .find(|&x| {
                primes
                    .iter()
                    .all(|&l| self.pow_direct(x, order / l) != Element::ONE)
            })
            .expect("the multiplicative group is cyclic")
    }

    fn build_tables(&self) -> LogTables {
        let order = (self.size - 1) as usize;
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; self.size as usize];
        let mut x = Element::ONE;
        for i in 0..order {
            exp[i] = x.0;
            exp[i + order] = x.0;
            log[x.0 as usize] = i as u32;
            x = self.mul_direct(x, self.generator);
        }
        LogTables { exp, log }
    }

    pub fn params(&self) -> TowerParams {
        self.params
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.params.p,
            e: self.params.e,
            m: self.params.m,
            r: self.params.r,
            n: self.params.n,
            modulus: Some(self.modulus.clone()),
        }
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn e(&self) -> usize {
        self.params.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> usize {
        self.params.m
    }

    pub fn r(&self) -> usize {
        self.params.r
    }

    pub fn n(&self) -> usize {
        self.params.n
    }

    /// Ambient degree N over GF(p).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Ambient degree over GF(q).
    pub fn q_degree(&self) -> usize {
        self.degree / self.params.e
    }

    /// Number of ambient elements, p^N.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The fixed primitive element of the ambient field.
    pub fn generator(&self) -> Element {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    // ---- coordinates -------------------------------------------------

    /// Coordinates over GF(p), constant term first, length N.
    pub fn digits(&self, x: Element) -> Vec<u64> {
        let p = self.params.p;
        let mut v = x.0 as u64;
        (0..self.degree)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u64]) -> Result<Element> {
        if digits.len() > self.degree || digits.iter().any(|&d| d >= self.params.p) {
            return Err(Error::ParseError(format!(
                "element encoding must have at most {} digits below {}",
                self.degree, self.params.p
            )));
        }
        Ok(self.pack(digits))
    }

    fn pack(&self, digits: &[u64]) -> Element {
        let p = self.params.p;
        let v = digits.iter().rev().fold(0u64, |acc, &d| acc * p + d);
        Element(v as u32)
    }

    /// The image of an integer in GF(p).
    pub fn from_int(&self, k: i64) -> Element {
        let p = self.params.p as i64;
        Element(k.rem_euclid(p) as u32)
    }

    /// Element encoding for serialization.
    pub fn encode(&self, x: Element) -> Vec<u64> {
        self.digits(x)
    }

    // ---- arithmetic --------------------------------------------------

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.params.p == 2 {
            return Element(a.0 ^ b.0);
        }
        let p = self.params.p as u32;
        let (mut x, mut y) = (a.0, b.0);
        let (mut acc, mut pw) = (0u32, 1u32);
        while x != 0 || y != 0 {
            acc += ((x % p + y % p) % p) * pw;
            x /= p;
            y /= p;
            pw = pw.wrapping_mul(p);
        }
        Element(acc)
    }

    pub fn neg(&self, a: Element) -> Element {
        if self.params.p == 2 {
            return a;
        }
        let p = self.params.p as u32;
        let mut x = a.0;
        let (mut acc, mut pw) = (0u32, 1u32);
        while x != 0 {
            acc += ((p - x % p) % p) * pw;
            x /= p;
            pw = pw.wrapping_mul(p);
        }
        Element(acc)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a.0 == 0 || b.0 == 0 {
            return Element::ZERO;
        }
        match &self.tables {
            Some(t) => Element(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => self.mul_direct(a, b),
        }
    }

    /// Multiplication by polynomial reduction, without tables.
    pub(crate) fn mul_direct(&self, a: Element, b: Element) -> Element {
        let n = self.degree;
        if self.params.p == 2 {
            let mut prod: u64 = 0;
            let (x, mut y) = (a.0 as u64, b.0 as u64);
            let mut shift = 0;
            while y != 0 {
                if y & 1 == 1 {
                    prod ^= x << shift;
                }
                y >>= 1;
                shift += 1;
            }
            let red: u64 = self
                .modulus
                .iter()
                .enumerate()
                .fold(0, |acc, (i, &c)| acc | (c << i));
            for bit in (n..2 * n).rev() {
                if prod >> bit & 1 == 1 {
                    prod ^= red << (bit - n);
                }
            }
            return Element(prod as u32);
        }
        let p = self.params.p;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * n];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (n..2 * n).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &f) in self.modulus.iter().enumerate() {
                let idx = top - n + i;
                prod[idx] = (prod[idx] + p - c * f % p) % p;
            }
        }
        self.pack(&prod[..n])
    }

    fn pow_direct(&self, a: Element, mut exp: u64) -> Element {
        let mut acc = Element::ONE;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Element, exp: u64) -> Element {
        if exp == 0 {
            return Element::ONE;
        }
        if a.is_zero() {
            return Element::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let order = self.size - 1;
                let l = t.log[a.0 as usize] as u128 * (exp % order) as u128 % order as u128;
                Element(t.exp[l as usize])
            }
            None => self.pow_direct(a, exp % (self.size - 1)),
        }
    }

    /// Signed powers; `a` must be nonzero when `exp < 0`.
    pub fn pow_i(&self, a: Element, exp: i64) -> Element {
        let order = (self.size - 1) as i64;
        self.pow(a, exp.rem_euclid(order) as u64)
    }

    pub fn inv(&self, a: Element) -> Option<Element> {
        if a.is_zero() {
            None
        } else {
            Some(self.pow(a, self.size - 2))
        }
    }

    /// `a / b`; panics on division by zero, which callers rule out.
    pub fn div(&self, a: Element, b: Element) -> Element {
        self.mul(a, self.inv(b).expect("division by zero element"))
    }

    /// `x^(q^s)`.
    pub fn frobenius(&self, x: Element, s: usize) -> Element {
        let s = s % self.q_degree();
        if s == 0 || x.is_zero() {
            return x;
        }
        self.pow(x, self.q.pow(s as u32))
    }

    /// Discrete logarithm to the ambient generator.
    pub fn log(&self, x: Element) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        match &self.tables {
            Some(t) => Some(t.log[x.0 as usize] as u64),
            None => {
                let mut y = Element::ONE;
                for i in 0..self.size - 1 {
                    if y == x {
                        return Some(i);
                    }
                    y = self.mul(y, self.generator);
                }
                None
            }
        }
    }

    // ---- subfields ---------------------------------------------------

    /// Whether GF(q^d) embeds in the ambient field.
    pub fn is_declared_subfield(&self, d: usize) -> bool {
        d >= 1 && self.q_degree().is_multiple_of(d)
    }

    fn check_subfield(&self, d: usize) -> Result<()> {
        if self.is_declared_subfield(d) {
            Ok(())
        } else {
            Err(Error::UndeclaredSubfield(d))
        }
    }

    /// True iff `x` lies in GF(q^d).
    pub fn subfield_membership(&self, x: Element, d: usize) -> Result<bool> {
        self.check_subfield(d)?;
        Ok(self.frobenius(x, d) == x)
    }

    pub(crate) fn in_subfield(&self, x: Element, d: usize) -> bool {
        self.frobenius(x, d) == x
    }

    pub fn in_base_field(&self, x: Element) -> bool {
        self.in_subfield(x, 1)
    }

    /// The fixed primitive element of GF(q^d).
    pub fn subfield_primitive(&self, d: usize) -> Result<Element> {
        self.check_subfield(d)?;
        let order = self.size - 1;
        let sub_order = self.q.pow(d as u32) - 1;
        Ok(self.pow(self.generator, order / sub_order))
    }

    /// Primitive element of GF(q^m), written `a` in polynomial text.
    pub fn alpha(&self) -> Element {
        self.subfield_primitive(self.params.m)
            .expect("GF(q^m) is always declared")
    }

    /// All elements of GF(q^d): zero followed by the powers of its primitive element.
    pub fn subfield_elements(&self, d: usize) -> Result<Vec<Element>> {
        let w = self.subfield_primitive(d)?;
        let count = self.q.pow(d as u32) - 1;
        let mut out = Vec::with_capacity(count as usize + 1);
        out.push(Element::ZERO);
        let mut x = Element::ONE;
        for _ in 0..count {
            out.push(x);
            x = self.mul(x, w);
        }
        Ok(out)
    }

    /// Nonzero elements of GF(q).
    pub fn base_units(&self) -> Vec<Element> {
        let mut v = self.subfield_elements(1).expect("GF(q) is declared");
        v.remove(0);
        v
    }

    /// Coordinates of GF(q^big) over GF(q^small), cached per pair.
    pub fn coords(&self, big: usize, small: usize) -> Result<Arc<SubfieldCoords>> {
        self.check_subfield(big)?;
        self.check_subfield(small)?;
        if !big.is_multiple_of(small) {
            return Err(Error::UndeclaredSubfield(small));
        }
        let mut cache = self.coords.lock().expect("coordinate cache poisoned");
        if let Some(c) = cache.get(&(big, small)) {
            return Ok(Arc::clone(c));
        }
        let c = Arc::new(SubfieldCoords::new(self, big, small));
        cache.insert((big, small), Arc::clone(&c));
        Ok(c)
    }

    /// Some `beta` in GF(q^m)* with `beta^(q^r) = b * beta`, the first in the
    /// enumeration by powers of `a`; `None` if there is none.
    pub fn solve_beta(&self, b: Element, r: usize) -> Result<Option<Element>> {
        if b.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !self.in_base_field(b) {
            return Err(Error::NotInBaseField(self.display(b)));
        }
        let a = self.alpha();
        let count = self.q.pow(self.params.m as u32) - 1;
        let mut beta = Element::ONE;
        for _ in 0..count {
            if self.frobenius(beta, r) == self.mul(b, beta) {
                return Ok(Some(beta));
            }
            beta = self.mul(beta, a);
        }
        Ok(None)
    }

    /// A GF(q^d)-basis of `{v in GF(q^d)^cols : M v = 0}`. Entries of `M` may
    /// be arbitrary ambient elements; each is expanded into GF(q^d)
    /// coordinates before elimination.
    pub fn kernel_over_subfield(&self, m: &Matrix, d: usize) -> Result<Vec<Vec<Element>>> {
        let c = self.coords(self.q_degree(), d)?;
        let t = c.dimension();
        let mut expanded = Matrix::zeros(m.rows() * t, m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                for (s, v) in c.coords(self, m.get(i, j)).into_iter().enumerate() {
                    expanded.set(i * t + s, j, v);
                }
            }
        }
        Ok(expanded.kernel(self))
    }

    /// The matrix over GF(q^small) of the GF(q^small)-linear map `v -> M v`
    /// on GF(q^big)^cols, in the fixed coordinate basis.
    pub fn restrict_scalars(&self, m: &Matrix, big: usize, small: usize) -> Result<Matrix> {
        let c = self.coords(big, small)?;
        let t = c.dimension();
        let mut out = Matrix::zeros(m.rows() * t, m.cols() * t);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                for (col, &b) in c.basis().iter().enumerate() {
                    let image = self.mul(m.get(i, j), b);
                    for (s, v) in c.coords(self, image).into_iter().enumerate() {
                        out.set(i * t + s, j * t + col, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Human-readable form: integers for GF(p), `a^k` inside GF(q^m),
    /// `g^k` for other ambient elements.
    pub fn display(&self, x: Element) -> String {
        if (x.0 as u64) < self.params.p {
            return x.0.to_string();
        }
        if self.in_subfield(x, self.params.m) {
            let a = self.alpha();
            let mut y = Element::ONE;
            let mut k = 0u64;
            while y != x {
                y = self.mul(y, a);
                k += 1;
            }
            return if k == 1 { "a".into() } else { format!("a^{k}") };
        }
        format!("g^{}", self.log(x).unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_skew_tower() {
        // GF(q^m) = GF(q^(rn)) = GF(4) already holds everything
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        assert_eq!(t.degree(), 2);
        assert_eq!(t.q(), 2);
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        assert_eq!(t.degree(), 4);
        assert_eq!(t.size(), 16);
        assert_eq!(t.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn cyclic_tower_over_gf4() {
        let t = make_tower(2, 1, 2, 0, 3).unwrap();
        assert_eq!(t.m(), 2);
        assert!(t.is_declared_subfield(2));
        // x^3 - 1 splits over GF(4)
        assert_eq!(t.degree(), 2);
    }

    #[test]
    fn precondition_checks() {
        let t = make_tower(3, 1, 2, 1, 4).unwrap();
        assert_eq!(t.q(), 3);
        assert_eq!(t.degree(), 4);
        assert_eq!(
            make_tower(2, 1, 4, 1, 3).unwrap_err(),
            Error::SkewDivisibilityViolated { m: 4, r: 1, rn: 3 }
        );
        assert_eq!(
            make_tower(4, 1, 2, 0, 3).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
        assert!(matches!(
            make_tower(2, 1, 5, 1, 25),
            Err(Error::AmbientTooLarge { .. })
        ));
    }

    #[test]
    fn generator_is_primitive() {
        for (p, e, m, r, n) in [
            (2, 1, 2, 1, 2),
            (3, 1, 2, 0, 4),
            (2, 2, 2, 0, 3),
            (5, 1, 1, 0, 4),
        ] {
            let t = make_tower(p, e, m, r, n).unwrap();
            let order = t.size() - 1;
            for (l, _) in int::factorize(order) {
                assert_ne!(t.pow(t.generator(), order / l), Element::ONE);
            }
        }
    }

    #[test]
    fn tables_agree_with_direct_multiplication() {
        let t = make_tower(2, 1, 3, 0, 5).unwrap();
        assert!(t.has_tables());
        for a in (0..t.size() as u32).step_by(7) {
            for b in (0..t.size() as u32).step_by(13) {
                assert_eq!(
                    t.mul(Element(a), Element(b)),
                    t.mul_direct(Element(a), Element(b))
                );
            }
        }
        let t3 = make_tower(3, 1, 2, 0, 4).unwrap();
        for a in 0..t3.size() as u32 {
            for b in 0..t3.size() as u32 {
                assert_eq!(
                    t3.mul(Element(a), Element(b)),
                    t3.mul_direct(Element(a), Element(b))
                );
            }
        }
    }

    #[test]
    fn table_free_tower() {
        // GF(2^18): no tables, exercise the direct paths
        let t = make_tower(2, 1, 2, 1, 18).unwrap();
        assert!(!t.has_tables());
        let g = t.generator();
        let x = t.pow(g, 12345);
        let inv = t.inv(x).unwrap();
        assert_eq!(t.mul(x, inv), Element::ONE);
        assert_eq!(t.frobenius(x, t.q_degree()), x);
    }

    #[test]
    fn inverse_and_field_laws_exhaustive() {
        let t = make_tower(3, 1, 2, 0, 4).unwrap();
        for a in 1..t.size() as u32 {
            let a = Element(a);
            let i = t.inv(a).unwrap();
            assert_eq!(t.mul(a, i), Element::ONE);
            assert_eq!(t.inv(i).unwrap(), a);
            assert_eq!(t.add(a, t.neg(a)), Element::ZERO);
        }
    }

    #[test]
    fn frobenius_fixes_base_field_and_cycles() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        for x in 0..t.size() as u32 {
            let x = Element(x);
            assert_eq!(t.frobenius(x, 0), x);
            assert_eq!(t.frobenius(x, t.q_degree()), x);
        }
        for x in t.subfield_elements(1).unwrap() {
            for s in 0..5 {
                assert_eq!(t.frobenius(x, s), x);
            }
        }
    }

    #[test]
    fn subfield_counts() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let count = (0..16u32)
            .filter(|&x| t.subfield_membership(Element(x), 2).unwrap())
            .count();
        assert_eq!(count, 4);
        assert!(t.subfield_membership(Element::ZERO, 1).unwrap());
        assert!(t.subfield_membership(Element::ONE, 1).unwrap());
        assert!(!t.subfield_membership(t.alpha(), 1).unwrap());
        assert_eq!(
            t.subfield_membership(Element::ONE, 3),
            Err(Error::UndeclaredSubfield(3))
        );
    }

    #[test]
    fn solve_beta_examples() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        assert_eq!(t.solve_beta(Element::ONE, 1).unwrap(), Some(Element::ONE));
        assert_eq!(t.solve_beta(Element::ZERO, 1), Err(Error::ZeroInput));
        // exhaustive oracle over GF(4)*: only beta = 1 solves beta^2 = beta
        let sols: Vec<_> = t
            .subfield_elements(2)
            .unwrap()
            .into_iter()
            .filter(|&b| !b.is_zero() && t.frobenius(b, 1) == b)
            .collect();
        assert_eq!(sols, vec![Element::ONE]);

        let t3 = make_tower(3, 1, 2, 0, 4).unwrap();
        let two = t3.from_int(2);
        let beta = t3
            .solve_beta(two, 1)
            .unwrap()
            .expect("x^2 = 2 is solvable in GF(9)");
        assert_eq!(t3.frobenius(beta, 1), t3.mul(two, beta));
    }

    #[test]
    fn kernel_over_subfield_examples() {
        let t = make_tower(2, 1, 2, 0, 1).unwrap();
        assert_eq!(t.degree(), 2);
        let id = Matrix::identity(3);
        assert!(t.kernel_over_subfield(&id, 1).unwrap().is_empty());
        assert_eq!(
            t.kernel_over_subfield(&Matrix::zeros(3, 3), 2)
                .unwrap()
                .len(),
            3
        );
        // rank-1 matrix over GF(4); as a GF(2)-linear map on GF(4)^2 it has a
        // 2-dimensional kernel
        let a = t.alpha();
        let m = Matrix::from_rows(vec![vec![Element::ONE, a], vec![a, t.mul(a, a)]]);
        assert_eq!(m.rank(&t), 1);
        let over_gf2 = t.restrict_scalars(&m, 2, 1).unwrap();
        let ker = t.kernel_over_subfield(&over_gf2, 1).unwrap();
        assert_eq!(ker.len(), 2);
        // brute-force count of GF(2)^4 vectors in the kernel
        let count = (0..16u32)
            .filter(|bits| {
                let v: Vec<Element> = (0..4).map(|i| Element(bits >> i & 1)).collect();
                over_gf2.mul_vec(&t, &v).iter().all(|x| x.is_zero())
            })
            .count();
        assert_eq!(count, 4);
    }

    #[test]
    fn field_spec_round_trip() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let json = serde_json::to_string(&t.spec()).unwrap();
        assert_eq!(
            json,
            r#"{"p":2,"e":1,"m":2,"r":1,"n":4,"modulus":[1,1,0,0,1]}"#
        );
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        let t2 = FieldTower::from_spec(&back, DEFAULT_AMBIENT_CAP).unwrap();
        assert_eq!(t2.generator(), t.generator());
        let bad = FieldSpec {
            modulus: Some(vec![1, 0, 0, 0, 1]),
            ..back
        };
        assert!(FieldTower::from_spec(&bad, DEFAULT_AMBIENT_CAP).is_err());
    }
}
