//! q^r-linearized polynomials over GF(q^m) under symbolic composition:
//! right division, right gcd and left lcm, the two duals, conjugate closures,
//! the `L` lift, root spaces and the center test.

use rand::Rng;

use crate::cpoly::CPoly;
use crate::error::{Error, Result};
use crate::gf::{int, Element, FieldTower, Matrix};

/// `F_0 x + F_1 x^[r] + ... + F_d x^[dr]`, coefficients trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LPoly {
    r: usize,
    coeffs: Vec<Element>,
}

impl LPoly {
    pub fn new(r: usize, mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LPoly { r, coeffs }
    }

    pub fn zero(r: usize) -> Self {
        LPoly {
            r,
            coeffs: Vec::new(),
        }
    }

    /// The identity map `x`.
    pub fn x(r: usize) -> Self {
        LPoly::monomial(r, Element::ONE, 0)
    }

    /// `c x^[r d]`.
    pub fn monomial(r: usize, c: Element, d: usize) -> Self {
        let mut v = vec![Element::ZERO; d + 1];
        v[d] = c;
        LPoly::new(r, v)
    }

    /// `x^[r n] - x`.
    pub fn modulus(r: usize, n: usize, tw: &FieldTower) -> Self {
        LPoly::lift(&CPoly::xn_minus_1(tw, n), r)
    }

    /// `L(f)`: `f_i x^i` becomes `f_i x^[r i]`.
    pub fn lift(f: &CPoly, r: usize) -> Self {
        LPoly::new(r, f.coeffs().to_vec())
    }

    /// Inverse of [`LPoly::lift`].
    pub fn to_cpoly(&self) -> CPoly {
        CPoly::new(self.coeffs.clone())
    }

    pub fn r(&self) -> usize {
        self.r
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

    /// q^r-degree; `None` for zero.
    pub fn qdeg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Element {
        self.coeffs.last().copied().unwrap_or(Element::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Element::ONE
    }

    fn same_r(&self, other: &LPoly) -> Result<()> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(Error::MixedSkewOrder(self.r, other.r))
        }
    }

    pub fn add(&self, other: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        self.same_r(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(LPoly::new(
            self.r,
            (0..len)
                .map(|i| tw.add(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    pub fn sub(&self, other: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        self.same_r(other)?;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(LPoly::new(
            self.r,
            (0..len)
                .map(|i| tw.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        ))
    }

    /// Left scalar multiple `c F`.
    pub fn scale(&self, c: Element, tw: &FieldTower) -> LPoly {
        LPoly::new(self.r, self.coeffs.iter().map(|&a| tw.mul(c, a)).collect())
    }

    pub fn monic(&self, tw: &FieldTower) -> LPoly {
        match tw.inv(self.leading()) {
            Some(inv) => self.scale(inv, tw),
            None => self.clone(),
        }
    }

    /// `F(v) = sum F_i v^(q^(r i))`.
    pub fn eval(&self, v: Element, tw: &FieldTower) -> Element {
        let mut acc = Element::ZERO;
        let mut pw = v;
        for &c in &self.coeffs {
            acc = tw.add(acc, tw.mul(c, pw));
            pw = tw.frobenius(pw, self.r);
        }
        acc
    }

    /// Symbolic product `F (x) G`, i.e. the composition `F(G(x))`.
    pub fn symbolic_product(&self, other: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        self.same_r(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LPoly::zero(self.r));
        }
        let mut out = vec![Element::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let twisted = tw.frobenius(b, self.r * i);
                out[i + j] = tw.add(out[i + j], tw.mul(a, twisted));
            }
        }
        Ok(LPoly::new(self.r, out))
    }

    /// Canonical representative modulo `x^[r n] - x` (q^r-degree below `n`).
    pub fn reduce(&self, n: usize, tw: &FieldTower) -> LPoly {
        let mut out = vec![Element::ZERO; n.min(self.coeffs.len())];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = tw.add(out[i % n], c);
        }
        LPoly::new(self.r, out)
    }

    /// `F = Q (x) G + R` with `qdeg R < qdeg G`.
    pub fn right_divmod(&self, g: &LPoly, tw: &FieldTower) -> Result<(LPoly, LPoly)> {
        self.same_r(g)?;
        let dg = g.qdeg().ok_or(Error::DivisionByZeroPoly)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((LPoly::zero(self.r), self.clone()));
        }
        let mut q = vec![Element::ZERO; rem.len() - dg];
        for top in (dg..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let shift = top - dg;
            let lead = tw.frobenius(g.leading(), self.r * shift);
            let c = tw.div(rem[top], lead);
            q[shift] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let term = tw.mul(c, tw.frobenius(gj, self.r * shift));
                rem[shift + j] = tw.sub(rem[shift + j], term);
            }
        }
        Ok((LPoly::new(self.r, q), LPoly::new(self.r, rem)))
    }

    /// Whether `self` right-divides `f`.
    pub fn right_divides(&self, f: &LPoly, tw: &FieldTower) -> bool {
        !self.is_zero() && f.right_divmod(self, tw).is_ok_and(|(_, r)| r.is_zero())
    }

    /// `F = G (x) Q + R` with `qdeg R < qdeg G`; coefficients must lie in GF(q^m).
    pub fn left_divmod(&self, g: &LPoly, tw: &FieldTower) -> Result<(LPoly, LPoly)> {
        self.same_r(g)?;
        let dg = g.qdeg().ok_or(Error::DivisionByZeroPoly)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dg {
            return Ok((LPoly::zero(self.r), self.clone()));
        }
        let m = tw.m();
        let undo = (m - (self.r * dg) % m) % m;
        let mut q = vec![Element::ZERO; rem.len() - dg];
        for top in (dg..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let shift = top - dg;
            let c = tw.frobenius(tw.div(rem[top], g.leading()), undo);
            q[shift] = c;
            for (i, &gi) in g.coeffs.iter().enumerate() {
                let term = tw.mul(gi, tw.frobenius(c, self.r * i));
                rem[shift + i] = tw.sub(rem[shift + i], term);
            }
        }
        Ok((LPoly::new(self.r, q), LPoly::new(self.r, rem)))
    }

    /// Whether `self` left-divides `f`, i.e. `f = self (x) Q`.
    pub fn left_divides(&self, f: &LPoly, tw: &FieldTower) -> bool {
        !self.is_zero() && f.left_divmod(self, tw).is_ok_and(|(_, r)| r.is_zero())
    }

    /// Exact right quotient `Q` with `self = Q (x) g`.
    pub fn right_quotient(&self, g: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        let (q, r) = self.right_divmod(g, tw)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotARightDivisor)
        }
    }

    /// Monic right gcd and monic left lcm.
    pub fn rgcd_llcm(&self, g: &LPoly, tw: &FieldTower) -> Result<(LPoly, LPoly)> {
        self.same_r(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = a.right_divmod(&b, tw)?.1;
            a = b;
            b = r;
        }
        let gcd = a.monic(tw);
        if self.is_zero() || g.is_zero() {
            return Ok((gcd, LPoly::zero(self.r)));
        }
        let lcm = self.llcm_known_gcd(g, gcd.qdeg().unwrap_or(0), tw)?;
        Ok((gcd, lcm))
    }

    pub fn rgcd(&self, g: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        Ok(self.rgcd_llcm(g, tw)?.0)
    }

    pub fn llcm(&self, g: &LPoly, tw: &FieldTower) -> Result<LPoly> {
        Ok(self.rgcd_llcm(g, tw)?.1)
    }

    /// Solves `A (x) F = B (x) G` for the least degree admitting a solution
    /// with `A` of full degree, starting at the Ore degree identity.
    fn llcm_known_gcd(&self, g: &LPoly, gcd_deg: usize, tw: &FieldTower) -> Result<LPoly> {
        let df = self.qdeg().expect("nonzero");
        let dg = g.qdeg().expect("nonzero");
        for total in (df + dg - gcd_deg)..=(df + dg) {
            let (a_len, b_len) = (total - df + 1, total - dg + 1);
            let mut sys = Matrix::zeros(total + 1, a_len + b_len);
            for i in 0..a_len {
                for (j, &fj) in self.coeffs.iter().enumerate() {
                    let v = tw.add(sys.get(i + j, i), tw.frobenius(fj, self.r * i));
                    sys.set(i + j, i, v);
                }
            }
            for i in 0..b_len {
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    let col = a_len + i;
                    let v = tw.sub(sys.get(i + j, col), tw.frobenius(gj, self.r * i));
                    sys.set(i + j, col, v);
                }
            }
            if let Some(sol) = sys.kernel(tw).into_iter().find(|v| !v[a_len - 1].is_zero()) {
                let a = LPoly::new(self.r, sol[..a_len].to_vec());
                let m = a.symbolic_product(self, tw)?;
                return Ok(m.monic(tw));
            }
        }
        Err(Error::VerificationFailed(
            "no common left multiple up to the product degree".into(),
        ))
    }

    /// Coefficient-wise `theta_i`.
    pub fn apply_frobenius(&self, i: usize, tw: &FieldTower) -> LPoly {
        LPoly::new(
            self.r,
            self.coeffs.iter().map(|&c| tw.frobenius(c, i)).collect(),
        )
    }

    fn low_and_degree(&self) -> Result<(Element, usize)> {
        let d = self.qdeg().ok_or(Error::ZeroPoly)?;
        let f0 = self.coeff(0);
        if f0.is_zero() {
            return Err(Error::ZeroLowestCoefficient);
        }
        Ok((f0, d))
    }

    /// `F^perp`: coefficient `i` is `F_(d-i)^[i r] / F_0^[d r]`.
    pub fn perp(&self, tw: &FieldTower) -> Result<LPoly> {
        let (f0, d) = self.low_and_degree()?;
        let denom = tw.frobenius(f0, d * self.r);
        Ok(LPoly::new(
            self.r,
            (0..=d)
                .map(|i| tw.div(tw.frobenius(self.coeffs[d - i], i * self.r), denom))
                .collect(),
        ))
    }

    /// `F^top`: coefficient `i` is `(F_(d-i) / F_0)^[(n-d+i) r]`.
    pub fn top(&self, n: usize, tw: &FieldTower) -> Result<LPoly> {
        let (f0, d) = self.low_and_degree()?;
        if d > n {
            return Err(Error::InvalidParameter(format!(
                "q^r-degree {d} exceeds the length {n}"
            )));
        }
        Ok(LPoly::new(
            self.r,
            (0..=d)
                .map(|i| tw.frobenius(tw.div(self.coeffs[d - i], f0), (n - d + i) * self.r))
                .collect(),
        ))
    }

    /// `(F*, F0, F_*, F_0)`: right gcd and left lcm of the conjugates, and the
    /// same closures taken on the perp side and brought back with top.
    pub fn conjugate_closures_l(&self, n: usize, tw: &FieldTower) -> Result<Closures> {
        if self.is_zero() {
            return Err(Error::ZeroPoly);
        }
        let conj: Vec<LPoly> = (0..tw.m()).map(|i| self.apply_frobenius(i, tw)).collect();
        let (star, zero) = fold_gcd_lcm(&conj, tw)?;
        let perps = conj
            .iter()
            .map(|c| c.perp(tw))
            .collect::<Result<Vec<_>>>()?;
        let (pstar, pzero) = fold_gcd_lcm(&perps, tw)?;
        let out = Closures {
            star,
            zero,
            lower_star: pstar.top(n, tw)?,
            lower_zero: pzero.top(n, tw)?,
        };
        for f in [&out.star, &out.zero, &out.lower_star, &out.lower_zero] {
            if !f.has_coeffs_in(1, tw) {
                return Err(Error::VerificationFailed(
                    "conjugate closure has coefficients outside GF(q)".into(),
                ));
            }
        }
        Ok(out)
    }

    pub fn has_coeffs_in(&self, d: usize, tw: &FieldTower) -> bool {
        self.coeffs.iter().all(|&c| tw.in_subfield(c, d))
    }

    /// Membership in the center of the ring of q^r-polynomials over GF(q^m).
    pub fn is_central(&self, tw: &FieldTower) -> bool {
        let m = tw.m();
        let (d, l) = (
            int::gcd(m as u64, self.r as u64) as usize,
            int::lcm(m as u64, self.r as u64) as usize,
        );
        let step = l.checked_div(self.r).unwrap_or(1);
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c.is_zero() || (tw.in_subfield(c, d) && i % step == 0))
    }

    /// Zeros of `F` in GF(q^(r n)) as a GF(q^r)-subspace.
    pub fn root_space(&self, n: usize, tw: &FieldTower) -> Result<RootSpace> {
        let c = space_coords(self.r, n, tw)?;
        let cols: Vec<Vec<Element>> = c
            .basis()
            .iter()
            .map(|&b| c.coords(tw, self.eval(b, tw)))
            .collect();
        let m = Matrix::from_rows(cols).transpose();
        let basis = m
            .kernel(tw)
            .into_iter()
            .map(|v| c.from_coords(tw, &v))
            .collect();
        RootSpace::new(self.r, n, basis, tw)
    }
}

/// The four closures of a linearized polynomial, all monic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closures {
    pub star: LPoly,
    pub zero: LPoly,
    pub lower_star: LPoly,
    pub lower_zero: LPoly,
}

fn fold_gcd_lcm(polys: &[LPoly], tw: &FieldTower) -> Result<(LPoly, LPoly)> {
    let mut gcd = polys[0].monic(tw);
    let mut lcm = gcd.clone();
    for f in &polys[1..] {
        gcd = gcd.rgcd(f, tw)?;
        lcm = lcm.llcm(f, tw)?;
    }
    Ok((gcd, lcm))
}

fn space_coords(
    r: usize,
    n: usize,
    tw: &FieldTower,
) -> Result<std::sync::Arc<crate::gf::SubfieldCoords>> {
    if r == 0 {
        return Err(Error::InvalidParameter("root spaces need r >= 1".into()));
    }
    tw.coords(r * n, r)
}

/// A GF(q^r)-subspace of GF(q^(r n)), kept as a row-reduced coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSpace {
    r: usize,
    n: usize,
    echelon: Matrix,
    basis: Vec<Element>,
}

impl RootSpace {
    /// Span of `vectors` over GF(q^r); dependent inputs are allowed.
    pub fn new(r: usize, n: usize, vectors: Vec<Element>, tw: &FieldTower) -> Result<Self> {
        let c = space_coords(r, n, tw)?;
        let rows: Vec<Vec<Element>> = vectors.iter().map(|&v| c.coords(tw, v)).collect();
        let (echelon, _) = Matrix::from_rows_with_cols(rows, n).rref(tw);
        let basis = echelon
            .row_vecs()
            .iter()
            .map(|row| c.from_coords(tw, row))
            .collect();
        Ok(RootSpace {
            r,
            n,
            echelon,
            basis,
        })
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: Element, tw: &FieldTower) -> bool {
        let with = RootSpace::new(self.r, self.n, [self.basis.clone(), vec![v]].concat(), tw);
        with.is_ok_and(|s| s.dim() == self.dim())
    }

    pub fn sum(&self, other: &RootSpace, tw: &FieldTower) -> RootSpace {
        RootSpace::new(
            self.r,
            self.n,
            [self.basis.clone(), other.basis.clone()].concat(),
            tw,
        )
        .expect("same ambient space")
    }

    /// `U cap W = (U^o + W^o)^o` for the coordinate dot product.
    pub fn intersection(&self, other: &RootSpace, tw: &FieldTower) -> RootSpace {
        let annihilator = |s: &RootSpace| Matrix::from_rows_with_cols(s.echelon.kernel(tw), self.n);
        let both = annihilator(self).stack(&annihilator(other));
        let c = space_coords(self.r, self.n, tw).expect("same ambient space");
        let vectors = both
            .kernel(tw)
            .iter()
            .map(|v| c.from_coords(tw, v))
            .collect();
        RootSpace::new(self.r, self.n, vectors, tw).expect("same ambient space")
    }

    /// Image under `v -> v^(q^i)`.
    pub fn frobenius(&self, i: usize, tw: &FieldTower) -> RootSpace {
        let imgs = self.basis.iter().map(|&v| tw.frobenius(v, i)).collect();
        RootSpace::new(self.r, self.n, imgs, tw).expect("same ambient space")
    }

    /// The monic annihilator `prod_(w in W) (x - w)` in linearized form.
    pub fn annihilator(&self, tw: &FieldTower) -> LPoly {
        let r = self.r;
        let mut p = LPoly::x(r);
        for &w in &self.basis {
            let c = p.eval(w, tw);
            let qr = tw.q().pow(r as u32);
            let factor = LPoly::new(r, vec![tw.neg(tw.pow(c, qr - 1)), Element::ONE]);
            p = factor.symbolic_product(&p, tw).expect("same r");
        }
        p
    }
}

/// A random monic right divisor of `x^[r n] - x` with coefficients in
/// GF(q^m): the annihilator of the GF(q^r)-span of q^m-Frobenius orbits of
/// up to `generators` random elements of GF(q^(r n)).
pub fn sample_right_divisor<R: Rng>(
    r: usize,
    n: usize,
    generators: usize,
    tw: &FieldTower,
    rng: &mut R,
) -> Result<LPoly> {
    let scalars = tw.coords(r * n, 1)?;
    let base = tw.subfield_elements(1)?;
    let m = tw.m();
    let orbit_len = (r * n) / int::gcd((r * n) as u64, m as u64) as usize;
    let mut vectors = Vec::new();
    for _ in 0..generators {
        let v = scalars.basis().iter().fold(Element::ZERO, |acc, &b| {
            tw.add(acc, tw.mul(b, base[rng.gen_range(0..base.len())]))
        });
        let mut y = v;
        for _ in 0..orbit_len {
            vectors.push(y);
            y = tw.frobenius(y, m);
        }
    }
    let space = RootSpace::new(r, n, vectors, tw)?;
    let f = space.annihilator(tw);
    debug_assert!(f.has_coeffs_in(m, tw));
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_tower;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn all_elements(tw: &FieldTower, d: usize) -> Vec<Element> {
        tw.subfield_elements(d).unwrap()
    }

    #[test]
    fn product_is_noncommutative_composition() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        let a = t.alpha();
        let xq = LPoly::monomial(1, Element::ONE, 1);
        let ax = LPoly::monomial(1, a, 0);
        assert_eq!(
            xq.symbolic_product(&xq, &t).unwrap(),
            LPoly::monomial(1, Element::ONE, 2)
        );
        assert_eq!(
            xq.symbolic_product(&ax, &t).unwrap(),
            LPoly::monomial(1, t.mul(a, a), 1)
        );
        assert_eq!(
            ax.symbolic_product(&xq, &t).unwrap(),
            LPoly::monomial(1, a, 1)
        );
        let f = LPoly::new(1, vec![a, Element::ONE, t.mul(a, a)]);
        let g = LPoly::new(1, vec![Element::ONE, a]);
        let fg = f.symbolic_product(&g, &t).unwrap();
        for v in all_elements(&t, 2) {
            assert_eq!(fg.eval(v, &t), f.eval(g.eval(v, &t), &t));
        }
        assert_eq!(
            f.symbolic_product(&LPoly::x(2), &t),
            Err(Error::MixedSkewOrder(1, 2))
        );
    }

    #[test]
    fn reduction_is_the_map_on_the_big_field() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let a = t.alpha();
        let f = LPoly::new(1, vec![a, Element::ZERO, Element::ONE, a, a, Element::ONE]);
        let red = f.reduce(4, &t);
        assert!(red.qdeg().unwrap() < 4);
        for v in all_elements(&t, 4) {
            assert_eq!(red.eval(v, &t), f.eval(v, &t));
        }
        let rem = f.sub(&red, &t).unwrap();
        assert!(LPoly::modulus(1, 4, &t).right_divides(&rem, &t));
    }

    #[test]
    fn division_and_gcd_examples() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        let (o, a) = (Element::ONE, t.alpha());
        let f = LPoly::new(1, vec![a, o]);
        assert_eq!(
            f.right_divmod(&f, &t).unwrap(),
            (LPoly::x(1), LPoly::zero(1))
        );
        assert_eq!(f.rgcd_llcm(&LPoly::zero(1), &t).unwrap().0, f);
        assert_eq!(f.llcm(&LPoly::x(1), &t).unwrap(), f);
        let g = LPoly::new(1, vec![o, o]);
        let (gcd, lcm) = g.rgcd_llcm(&f, &t).unwrap();
        assert_eq!(gcd, LPoly::x(1));
        assert_eq!(lcm.qdeg(), Some(2));
        assert!(g.right_divides(&lcm, &t) && f.right_divides(&lcm, &t));
        assert_eq!(
            LPoly::zero(1).rgcd_llcm(&LPoly::zero(1), &t),
            Err(Error::BothZero)
        );
        assert_eq!(
            f.right_divmod(&LPoly::zero(1), &t),
            Err(Error::DivisionByZeroPoly)
        );
    }

    #[test]
    fn divmod_round_trip_random() {
        let t = make_tower(2, 1, 2, 2, 3).unwrap();
        let elems = all_elements(&t, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut pick = |len: usize| {
                LPoly::new(
                    2,
                    (0..len)
                        .map(|_| elems[rng.gen_range(0..elems.len())])
                        .collect(),
                )
            };
            let f = pick(6);
            let mut g = pick(3);
            if g.is_zero() {
                g = LPoly::x(2);
            }
            let (q, r) = f.right_divmod(&g, &t).unwrap();
            assert!(r.qdeg() < g.qdeg());
            assert_eq!(q.symbolic_product(&g, &t).unwrap().add(&r, &t).unwrap(), f);
        }
    }

    #[test]
    fn left_division_reconstructs() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let elems = t.subfield_elements(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut pick = |len: usize| {
                LPoly::new(
                    1,
                    (0..len)
                        .map(|_| elems[rng.gen_range(0..elems.len())])
                        .collect(),
                )
            };
            let f = pick(6);
            let g = pick(3);
            if g.is_zero() {
                continue;
            }
            let (q, r) = f.left_divmod(&g, &t).unwrap();
            assert!(r.qdeg().is_none_or(|d| Some(d) < g.qdeg()));
            assert_eq!(g.symbolic_product(&q, &t).unwrap().add(&r, &t).unwrap(), f);
        }
    }

    #[test]
    fn perp_and_top_examples() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        let o = Element::ONE;
        let x = LPoly::x(1);
        assert_eq!(x.perp(&t).unwrap(), x);
        assert_eq!(x.top(2, &t).unwrap(), x);
        let f = LPoly::new(1, vec![o, o]);
        assert_eq!(f.perp(&t).unwrap(), f);
        assert_eq!(f.top(2, &t).unwrap(), f);
        assert_eq!(
            LPoly::monomial(1, o, 1).perp(&t),
            Err(Error::ZeroLowestCoefficient)
        );
    }

    #[test]
    fn perp_top_round_trips_on_divisors() {
        for (r, n) in [(1, 2), (1, 4), (2, 2), (2, 3)] {
            let t = make_tower(2, 1, 2, r, n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(r as u64 * 10 + n as u64);
            let units = &all_elements(&t, 2)[1..];
            for _ in 0..10 {
                let f = sample_right_divisor(r, n, 1 + rng.gen_range(0..2), &t, &mut rng).unwrap();
                assert!(f.is_monic());
                assert_eq!(f.perp(&t).unwrap().top(n, &t).unwrap(), f);
                assert_eq!(f.top(n, &t).unwrap().perp(&t).unwrap(), f);
                // top-then-perp normalizes any scaling; perp-then-top only for
                // a leading coefficient fixed by the twists
                let c = units[rng.gen_range(0..units.len())];
                let g = f.scale(c, &t);
                assert_eq!(g.top(n, &t).unwrap().perp(&t).unwrap(), f);
            }
        }
    }

    #[test]
    fn closures_examples() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        let (o, a) = (Element::ONE, t.alpha());
        let f = LPoly::new(1, vec![a, o]);
        let cl = f.conjugate_closures_l(2, &t).unwrap();
        assert_eq!(cl.star, LPoly::x(1));
        assert_eq!(cl.zero.qdeg(), Some(2));
        assert_eq!(cl.zero, LPoly::modulus(1, 2, &t));
        let rational = LPoly::new(1, vec![o, o]);
        let cl = rational.conjugate_closures_l(2, &t).unwrap();
        assert_eq!(cl.star, rational);
        assert_eq!(cl.zero, rational);
        assert_eq!(cl.lower_star, rational);
        assert_eq!(cl.lower_zero, rational);
    }

    #[test]
    fn lift_examples() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let o = Element::ONE;
        assert_eq!(LPoly::lift(&CPoly::one(), 1), LPoly::x(1));
        assert_eq!(
            LPoly::lift(&CPoly::new(vec![o, o, o]), 1),
            LPoly::new(1, vec![o, o, o])
        );
        let f = CPoly::new(vec![o, o]);
        let g = CPoly::new(vec![o, o, Element::ZERO, o]);
        assert_eq!(
            LPoly::lift(&f.mul(&g, &t), 1),
            LPoly::lift(&f, 1)
                .symbolic_product(&LPoly::lift(&g, 1), &t)
                .unwrap()
        );
    }

    #[test]
    fn root_space_examples() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        assert_eq!(LPoly::x(1).root_space(4, &t).unwrap().dim(), 0);
        let f = LPoly::new(1, vec![Element::ONE, Element::ONE]);
        let z = f.root_space(4, &t).unwrap();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(Element::ONE, &t));
        assert_eq!(LPoly::modulus(1, 4, &t).root_space(4, &t).unwrap().dim(), 4);
    }

    #[test]
    fn root_spaces_of_rgcd_and_llcm() {
        let t = make_tower(2, 1, 2, 1, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let f = sample_right_divisor(1, 4, 1, &t, &mut rng).unwrap();
            let g = sample_right_divisor(1, 4, 1, &t, &mut rng).unwrap();
            assert!(f.right_divides(&LPoly::modulus(1, 4, &t), &t));
            let (zf, zg) = (f.root_space(4, &t).unwrap(), g.root_space(4, &t).unwrap());
            assert_eq!(zf.dim(), f.qdeg().unwrap());
            let (gcd, lcm) = f.rgcd_llcm(&g, &t).unwrap();
            assert_eq!(gcd.root_space(4, &t).unwrap(), zf.intersection(&zg, &t));
            assert_eq!(lcm.root_space(4, &t).unwrap(), zf.sum(&zg, &t));
            assert_eq!(
                gcd.qdeg().unwrap() + lcm.qdeg().unwrap(),
                f.qdeg().unwrap() + g.qdeg().unwrap()
            );
        }
    }

    #[test]
    fn center_matches_commutator_test() {
        let t = make_tower(2, 1, 2, 1, 2).unwrap();
        let a = t.alpha();
        let spanning = [
            LPoly::monomial(1, a, 0),
            LPoly::monomial(1, Element::ONE, 1),
        ];
        let commutes = |f: &LPoly| {
            spanning
                .iter()
                .all(|s| f.symbolic_product(s, &t).unwrap() == s.symbolic_product(f, &t).unwrap())
        };
        let elems = all_elements(&t, 2);
        for c0 in &elems {
            for c1 in &elems {
                for c2 in &elems {
                    let f = LPoly::new(1, vec![*c0, *c1, *c2]);
                    assert_eq!(f.is_central(&t), commutes(&f), "{f:?}");
                }
            }
        }
        assert!(!LPoly::monomial(1, Element::ONE, 1).is_central(&t));
        assert!(LPoly::modulus(1, 2, &t).is_central(&t));
    }
}
