//! Linear codes over GF(q^m) kept as canonical row-reduced generator
//! matrices, with the rank metric, duality, Galois closures, cyclic and skew
//! cyclic structure, and conversions to and from generator polynomials.

use std::fmt;
use std::sync::Arc;

use crate::cpoly::{self, CPoly, RootSet};
use crate::error::{Error, Result};
use crate::gf::{int, Element, FieldTower, Matrix};
use crate::lpoly::LPoly;

/// Default bound on `q^(m k)` for exhaustive codeword enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 16;

pub type Codeword = Vec<Element>;

/// `s_n`: `(c_0, ..., c_(n-1)) -> (c_(n-1), c_0, ..., c_(n-2))`.
pub fn shift(c: &[Element]) -> Codeword {
    let mut v = c.to_vec();
    v.rotate_right(1);
    v
}

/// `theta_s` applied to every component.
pub fn frobenius_word(c: &[Element], s: usize, tw: &FieldTower) -> Codeword {
    c.iter().map(|&x| tw.frobenius(x, s)).collect()
}

/// `sigma_(s,n) = theta_s . s_n`.
pub fn sigma(c: &[Element], s: usize, tw: &FieldTower) -> Codeword {
    frobenius_word(&shift(c), s, tw)
}

pub fn scale_word(c: &[Element], b: Element, tw: &FieldTower) -> Codeword {
    c.iter().map(|&x| tw.mul(b, x)).collect()
}

/// `sum c_i x^i`.
pub fn word_to_cpoly(c: &[Element]) -> CPoly {
    CPoly::new(c.to_vec())
}

/// `sum c_i x^[r i]`.
pub fn word_to_lpoly(c: &[Element], r: usize) -> LPoly {
    LPoly::new(r, c.to_vec())
}

/// Rank weight: the dimension over GF(q) of the span of the components.
///
/// Computed as the GF(p)-dimension of the span of `k_j c_i` over a GF(p)-basis
/// `k_j` of GF(q), divided by `e`.
pub fn rank_weight(c: &[Element], tw: &FieldTower) -> usize {
    let e = tw.e();
    let units: Vec<Element> = if e == 1 {
        vec![Element::ONE]
    } else {
        let w = tw.subfield_primitive(1).expect("GF(q) is declared");
        (0..e).map(|j| tw.pow(w, j as u64)).collect()
    };
    let spanning = c
        .iter()
        .filter(|x| !x.is_zero())
        .flat_map(|&x| units.iter().map(move |&k| (x, k)));
    if tw.p() == 2 {
        let mut basis: Vec<u32> = Vec::new();
        for (x, k) in spanning {
            let mut v = tw.mul(x, k).index();
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v != 0 {
                basis.push(v);
                basis.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        return basis.len() / e;
    }
    let p = tw.p();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (x, k) in spanning {
        let mut v = tw.digits(tw.mul(x, k));
        for row in &rows {
            let lead = row
                .iter()
                .position(|&d| d != 0)
                .expect("stored rows are nonzero");
            let f = v[lead];
            if f != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a = (*a + p * p - f * b % p) % p;
                }
            }
        }
        if let Some(lead) = v.iter().position(|&d| d != 0) {
            let inv = int::pow_mod(v[lead], p - 2, p);
            for a in v.iter_mut() {
                *a = *a * inv % p;
            }
            for row in rows.iter_mut() {
                let f = row[lead];
                if f != 0 {
                    for (a, &b) in row.iter_mut().zip(&v) {
                        *a = (*a + p * p - f * b % p) % p;
                    }
                }
            }
            rows.push(v);
        }
    }
    rows.len() / e
}

/// A linear code of length `n` over GF(q^m).
#[derive(Clone)]
pub struct LinearCode {
    tw: Arc<FieldTower>,
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
    galois_closed: bool,
    skew: Vec<bool>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.gen == other.gen
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .gen
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|&x| self.tw.display(x)).collect())
            .collect();
        f.debug_struct("LinearCode")
            .field("n", &self.n)
            .field("k", &self.k())
            .field("generator", &rows)
            .finish()
    }
}

impl LinearCode {
    /// Row space of `rows`, each of length `n`, entries in GF(q^m).
    pub fn from_rows(tw: &Arc<FieldTower>, n: usize, rows: Vec<Codeword>) -> Result<Self> {
        for r in &rows {
            if r.len() != n {
                return Err(Error::LengthMismatch(n, r.len()));
            }
            if let Some(&x) = r.iter().find(|&&x| !tw.in_subfield(x, tw.m())) {
                return Err(Error::InvalidParameter(format!(
                    "entry {} is not in GF(q^m)",
                    tw.display(x)
                )));
            }
        }
        let (gen, pivots) = Matrix::from_rows_with_cols(rows, n).rref(tw);
        let mut code = LinearCode {
            tw: Arc::clone(tw),
            n,
            gen,
            pivots,
            galois_closed: false,
            skew: Vec::new(),
        };
        code.galois_closed = code.gen.entries().all(|x| tw.in_base_field(x));
        code.skew = (0..tw.m())
            .map(|s| code.invariant_under(|c| sigma(c, s, tw)))
            .collect();
        Ok(code)
    }

    pub fn zero(tw: &Arc<FieldTower>, n: usize) -> Self {
        LinearCode::from_rows(tw, n, Vec::new()).expect("empty generator")
    }

    pub fn full(tw: &Arc<FieldTower>, n: usize) -> Self {
        LinearCode::from_rows(tw, n, Matrix::identity(n).row_vecs()).expect("identity generator")
    }

    /// The cyclic code generated by `g | x^n - 1`.
    pub fn from_gpoly(tw: &Arc<FieldTower>, g: &CPoly, n: usize) -> Result<Self> {
        let g = g.monic(tw);
        if g.is_zero() || !g.divides(&CPoly::xn_minus_1(tw, n), tw) {
            return Err(Error::NotADivisor(n));
        }
        let deg = g.degree().expect("nonzero");
        let rows = (0..n - deg)
            .map(|i| {
                let mut v = vec![Element::ZERO; i];
                v.extend_from_slice(g.coeffs());
                v.resize(n, Element::ZERO);
                v
            })
            .collect();
        LinearCode::from_rows(tw, n, rows)
    }

    /// The cyclic code whose generator has roots `zeta^s`, `s` in `roots`.
    pub fn from_root_exponents(tw: &Arc<FieldTower>, roots: &RootSet) -> Result<Self> {
        let qm = tw.q().pow(tw.m() as u32);
        if int::gcd(tw.q(), roots.n as u64) != 1 {
            return Err(Error::NotCoprime(roots.n));
        }
        if roots.exponents.iter().any(|&s| s >= roots.n) || !roots.closed_under(qm % roots.n as u64)
        {
            return Err(Error::NotCosetClosed);
        }
        LinearCode::from_gpoly(tw, &roots.polynomial(tw)?, roots.n)
    }

    /// The q^r-cyclic code generated by `G`, which must right-divide `x^[r n] - x`.
    pub fn from_glpoly(tw: &Arc<FieldTower>, g: &LPoly, n: usize) -> Result<Self> {
        let r = g.r();
        check_skew_divisibility(tw, r, n)?;
        let g = g.monic(tw);
        if g.is_zero() || !g.right_divides(&LPoly::modulus(r, n, tw), tw) {
            return Err(Error::NotARightDivisor);
        }
        let deg = g.qdeg().expect("nonzero");
        let rows = (0..n - deg)
            .map(|i| {
                LPoly::monomial(r, Element::ONE, i)
                    .symbolic_product(&g, tw)
                    .expect("same r")
                    .reduce(n, tw)
                    .coeffs()
                    .iter()
                    .copied()
                    .chain(std::iter::repeat(Element::ZERO))
                    .take(n)
                    .collect()
            })
            .collect();
        LinearCode::from_rows(tw, n, rows)
    }

    pub fn tower(&self) -> &Arc<FieldTower> {
        &self.tw
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical RREF generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn rows(&self) -> Vec<Codeword> {
        self.gen.row_vecs()
    }

    pub fn is_zero(&self) -> bool {
        self.k() == 0
    }

    pub fn is_full(&self) -> bool {
        self.k() == self.n
    }

    pub fn is_galois_closed(&self) -> bool {
        self.galois_closed
    }

    /// `sigma_(s,n)(C) ⊆ C`; `s` is taken modulo `m`.
    pub fn is_qr_cyclic(&self, s: usize) -> bool {
        self.skew[s % self.tw.m()]
    }

    pub fn is_cyclic(&self) -> bool {
        self.skew[0]
    }

    /// Orders `s` in `0..m` for which the code is q^s-cyclic.
    pub fn skew_orders(&self) -> Vec<usize> {
        (0..self.tw.m()).filter(|&s| self.skew[s]).collect()
    }

    fn residual(&self, v: &[Element]) -> Codeword {
        let tw = &self.tw;
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = v[pc];
            if f.is_zero() {
                continue;
            }
            for (a, &b) in v.iter_mut().zip(self.gen.row(i)) {
                *a = tw.sub(*a, tw.mul(f, b));
            }
        }
        v
    }

    pub fn contains(&self, v: &[Element]) -> bool {
        v.len() == self.n && self.residual(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates `a` with `v = a G`, if `v` is a codeword.
    pub fn coordinates(&self, v: &[Element]) -> Option<Vec<Element>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    fn invariant_under(&self, f: impl Fn(&[Element]) -> Codeword) -> bool {
        (0..self.k()).all(|i| self.contains(&f(self.gen.row(i))))
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && (0..self.k()).all(|i| other.contains(self.gen.row(i)))
    }

    fn same_length(&self, other: &LinearCode) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch(self.n, other.n))
        }
    }

    pub fn dual(&self) -> LinearCode {
        let rows = self.gen.kernel(&self.tw);
        LinearCode::from_rows(&self.tw, self.n, rows).expect("kernel of a GF(q^m) matrix")
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.same_length(other)?;
        LinearCode::from_rows(&self.tw, self.n, [self.rows(), other.rows()].concat())
    }

    /// Intersection from the solutions of `a G_1 = b G_2`.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.same_length(other)?;
        let tw = &self.tw;
        let (k1, k2) = (self.k(), other.k());
        let mut sys = Matrix::zeros(self.n, k1 + k2);
        for j in 0..self.n {
            for i in 0..k1 {
                sys.set(j, i, self.gen.get(i, j));
            }
            for i in 0..k2 {
                sys.set(j, k1 + i, tw.neg(other.gen.get(i, j)));
            }
        }
        let rows = sys
            .kernel(tw)
            .iter()
            .map(|sol| self.gen.vec_mul(tw, &sol[..k1]))
            .collect();
        LinearCode::from_rows(tw, self.n, rows)
    }

    /// `theta_i(C)`.
    pub fn frobenius(&self, i: usize) -> LinearCode {
        let rows = self
            .rows()
            .iter()
            .map(|r| frobenius_word(r, i, &self.tw))
            .collect();
        LinearCode::from_rows(&self.tw, self.n, rows).expect("conjugate rows stay in GF(q^m)")
    }

    /// `C* = sum_i theta_i(C)`.
    pub fn galois_closure(&self) -> LinearCode {
        let rows = (0..self.tw.m())
            .flat_map(|i| self.rows().into_iter().map(move |r| (i, r)))
            .map(|(i, r)| frobenius_word(&r, i, &self.tw))
            .collect();
        LinearCode::from_rows(&self.tw, self.n, rows).expect("conjugate rows stay in GF(q^m)")
    }

    /// `C0 = cap_i theta_i(C)`.
    pub fn galois_interior(&self) -> LinearCode {
        (1..self.tw.m()).fold(self.clone(), |acc, i| {
            acc.intersect(&self.frobenius(i)).expect("same length")
        })
    }

    /// Monic codeword polynomial of least degree, over `x^i` (`r = None`)
    /// or over `x^[r i]`.
    fn least_degree_word(&self) -> Option<Codeword> {
        if self.is_zero() {
            return None;
        }
        let rev: Vec<Codeword> = self
            .rows()
            .into_iter()
            .map(|mut r| {
                r.reverse();
                r
            })
            .collect();
        let (m, _) = Matrix::from_rows_with_cols(rev, self.n).rref(&self.tw);
        let mut last = m.row(m.rows() - 1).to_vec();
        last.reverse();
        Some(last)
    }

    /// `(g, h)` with `g h = x^n - 1`.
    pub fn generator_check_poly(&self) -> Result<(CPoly, CPoly)> {
        if !self.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let tw = &self.tw;
        let full = CPoly::xn_minus_1(tw, self.n);
        let g = match self.least_degree_word() {
            Some(w) => word_to_cpoly(&w),
            None => full.clone(),
        };
        let h = full.exact_div(&g, tw).ok_or_else(|| {
            Error::VerificationFailed("extracted generator does not divide x^n - 1".into())
        })?;
        Ok((g, h))
    }

    /// `(G, H)` with `x^[r n] - x = H (x) G = G (x) H`.
    pub fn generator_check_lpoly(&self, r: usize) -> Result<(LPoly, LPoly)> {
        check_skew_divisibility(&self.tw, r, self.n)?;
        if !self.is_qr_cyclic(r) {
            return Err(Error::NotSkewCyclic(r));
        }
        let tw = &self.tw;
        let full = LPoly::modulus(r, self.n, tw);
        let g = match self.least_degree_word() {
            Some(w) => word_to_lpoly(&w, r),
            None => full.clone(),
        };
        let h = full.right_quotient(&g, tw).map_err(|_| {
            Error::VerificationFailed("extracted generator is not a right divisor".into())
        })?;
        if h.symbolic_product(&g, tw)? != full || g.symbolic_product(&h, tw)? != full {
            return Err(Error::VerificationFailed(
                "generator and check polynomial do not factor x^[rn] - x both ways".into(),
            ));
        }
        Ok((g, h))
    }

    /// Idempotent generator `e = a g mod x^n - 1` from `a g + b h = 1`.
    pub fn idempotent_generator(&self) -> Result<CPoly> {
        let tw = &self.tw;
        let (g, h) = self.generator_check_poly()?;
        let (d, a, _) = g.ext_gcd(&h, tw)?;
        if d != CPoly::one() {
            return Err(Error::NotCoprimeGH);
        }
        a.mul(&g, tw).rem(&CPoly::xn_minus_1(tw, self.n), tw)
    }

    /// The cyclic code generated by `h`, a complement of `C` when `gcd(g, h) = 1`.
    pub fn cyclic_complement(&self) -> Result<LinearCode> {
        let (g, h) = self.generator_check_poly()?;
        if g.gcd_lcm(&h, &self.tw)?.0 != CPoly::one() {
            return Err(Error::NotCoprimeGH);
        }
        LinearCode::from_gpoly(&self.tw, &h, self.n)
    }

    fn enumeration_size(&self, cap: u64) -> Result<u64> {
        let qm = (self.tw.q() as u128).pow(self.tw.m() as u32);
        let size = (0..self.k()).try_fold(1u128, |acc, _| acc.checked_mul(qm));
        match size {
            Some(s) if s <= cap as u128 => Ok(s as u64),
            other => Err(Error::EnumerationCapExceeded {
                size: other.unwrap_or(u128::MAX),
                cap,
            }),
        }
    }

    /// Calls `f` on every codeword (zero first), stepping one generator
    /// multiple at a time.
    pub fn for_each_codeword(&self, cap: u64, mut f: impl FnMut(&[Element])) -> Result<()> {
        self.enumeration_size(cap)?;
        let tw = &self.tw;
        let elems = tw.subfield_elements(tw.m())?;
        let k = self.k();
        let mut digits = vec![0usize; k];
        let mut word = vec![Element::ZERO; self.n];
        loop {
            f(&word);
            let mut j = 0;
            loop {
                if j == k {
                    return Ok(());
                }
                let old = elems[digits[j]];
                digits[j] = (digits[j] + 1) % elems.len();
                let delta = tw.sub(elems[digits[j]], old);
                for (w, &g) in word.iter_mut().zip(self.gen.row(j)) {
                    *w = tw.add(*w, tw.mul(delta, g));
                }
                if digits[j] != 0 {
                    break;
                }
                j += 1;
            }
        }
    }

    /// Number of codewords of each rank weight `0..=min(m, n)`.
    pub fn rank_weight_distribution(&self, cap: u64) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.tw.m().min(self.n) + 1];
        self.for_each_codeword(cap, |c| dist[rank_weight(c, &self.tw)] += 1)?;
        Ok(dist)
    }

    /// Least rank weight of a nonzero codeword; `None` for the zero code.
    pub fn min_rank_distance(&self, cap: u64) -> Result<Option<usize>> {
        let dist = self.rank_weight_distribution(cap)?;
        Ok(dist.iter().skip(1).position(|&c| c > 0).map(|i| i + 1))
    }
}

/// Skew cyclic structure of length `n` and order `r` is only studied when `m | r n`.
pub fn check_skew_divisibility(tw: &FieldTower, r: usize, n: usize) -> Result<()> {
    if !(r * n).is_multiple_of(tw.m()) {
        return Err(Error::SkewDivisibilityViolated {
            m: tw.m(),
            r,
            rn: r * n,
        });
    }
    Ok(())
}

/// All cyclic codes of length `n` over GF(q^m), one per monic divisor of `x^n - 1`.
pub fn all_cyclic_codes(tw: &Arc<FieldTower>, n: usize) -> Result<Vec<LinearCode>> {
    cpoly::divisors_of_xn_minus_1(n, tw)?
        .iter()
        .map(|g| LinearCode::from_gpoly(tw, g, n))
        .collect()
}
