//! Rank, period, shift and skew lengths of skew cyclic codes, the degeneracy
//! criteria, rank equivalences and the pseudo-cyclic shortenings.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::code::{
    check_skew_divisibility, rank_weight, shift, sigma, word_to_cpoly, word_to_lpoly, Codeword,
    LinearCode,
};
use crate::cpoly::{factor_xn_minus_1_over, CPoly, Order};
use crate::error::{Error, Result};
use crate::gf::{int, Element, FieldTower, Matrix};
use crate::lpoly::{LPoly, RootSpace};

/// Upper bound on codewords compared when checking that a map preserves rank weight.
pub const WEIGHT_SAMPLE: usize = 4096;

/// One route to a length, with the value it produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathValue {
    pub path: String,
    pub value: u64,
}

fn pv(path: impl Into<String>, value: usize) -> PathValue {
    PathValue {
        path: path.into(),
        value: value as u64,
    }
}

fn agree(quantity: &str, paths: &[PathValue]) -> Result<u64> {
    let first = paths[0].value;
    if paths.iter().any(|p| p.value != first) {
        let detail = paths
            .iter()
            .map(|p| format!("{}={}", p.path, p.value))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(Error::PathDisagreement {
            quantity: quantity.into(),
            detail,
        });
    }
    Ok(first)
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

fn require_skew(c: &LinearCode) -> Result<()> {
    if c.skew_orders().is_empty() {
        Err(Error::NotSkewCyclicAnyOrder)
    } else {
        Ok(())
    }
}

/// Skew orders `r` in `1..m` with `C` q^r-cyclic and `m | r n`.
fn proper_skew_orders(c: &LinearCode) -> Vec<usize> {
    let tw = c.tower();
    (1..tw.m())
        .filter(|&r| c.is_qr_cyclic(r) && check_skew_divisibility(tw, r, c.n()).is_ok())
        .collect()
}

/// Monic check polynomial `h0` of the Galois closure `C*`, read off the
/// generator matrix of `C*`.
pub fn closure_check_poly(c: &LinearCode) -> Result<CPoly> {
    require_skew(c)?;
    let star = c.galois_closure();
    let (_, h0) = star.generator_check_poly()?;
    Ok(h0.monic(c.tower()))
}

fn llcm_all(polys: &[LPoly], tw: &FieldTower) -> Result<LPoly> {
    let mut acc = polys[0].monic(tw);
    for f in &polys[1..] {
        acc = acc.llcm(f, tw)?;
    }
    Ok(acc)
}

fn conjugates_l(f: &LPoly, tw: &FieldTower) -> Vec<LPoly> {
    (0..tw.m()).map(|i| f.apply_frobenius(i, tw)).collect()
}

fn root_space_meet_join(
    g: &LPoly,
    hp: &LPoly,
    n: usize,
    tw: &FieldTower,
) -> Result<(RootSpace, RootSpace)> {
    let zg = g.root_space(n, tw)?;
    let zh = hp.root_space(n, tw)?;
    let mut meet = zg.clone();
    let mut join = zh.clone();
    for i in 1..tw.m() {
        meet = meet.intersection(&zg.frobenius(i, tw), tw);
        join = join.sum(&zh.frobenius(i, tw), tw);
    }
    Ok((meet, join))
}

/// Every available route to `l_R(C) = dim C*`.
pub fn rank_length_paths(c: &LinearCode) -> Result<Vec<PathValue>> {
    let tw = c.tower();
    let n = c.n();
    let star = c.galois_closure();
    let mut paths = vec![pv("dim C*", star.k())];
    if star.is_cyclic() {
        let (_, h0) = star.generator_check_poly()?;
        paths.push(pv("deg check(C*)", h0.degree().unwrap_or(0)));
    }
    if c.is_cyclic() {
        let (g, h) = c.generator_check_poly()?;
        let (gstar, _) = g.conjugate_closures(tw)?;
        let (_, h0) = h.conjugate_closures(tw)?;
        paths.push(pv("n - deg g*", n - gstar.degree().unwrap_or(0)));
        paths.push(pv("deg h0", h0.degree().unwrap_or(0)));
        if int::gcd(tw.q(), n as u64) == 1 {
            let (_, meet) = g.root_set(n, tw)?.conjugate_union_intersection(tw);
            let (join, _) = h.root_set(n, tw)?.conjugate_union_intersection(tw);
            paths.push(pv("n - |cap Z(g)^[i]|", n - meet.len()));
            paths.push(pv("|cup Z(h)^[i]|", join.len()));
            let (gd, _) = c.dual().generator_check_poly()?;
            paths.push(pv("eta_q(dual)", gd.mu_eta(n, tw)?.1));
        }
    }
    for r in proper_skew_orders(c) {
        let (g, h) = c.generator_check_lpoly(r)?;
        let closures = g.conjugate_closures_l(n, tw)?;
        paths.push(pv(
            format!("n - qdeg G* (r={r})"),
            n - closures.star.qdeg().unwrap_or(0),
        ));
        let hp = h.perp(tw)?;
        let lcm = llcm_all(&conjugates_l(&hp, tw), tw)?;
        paths.push(pv(
            format!("qdeg llcm H^perp (r={r})"),
            lcm.qdeg().unwrap_or(0),
        ));
        if tw.is_declared_subfield(r * n) {
            let (meet, join) = root_space_meet_join(&g, &hp, n, tw)?;
            paths.push(pv(format!("n - dim cap Z(G)^[i] (r={r})"), n - meet.dim()));
            paths.push(pv(format!("dim sum Z(H^perp)^[i] (r={r})"), join.dim()));
        }
    }
    Ok(paths)
}

/// `l_R(C)`, failing with `PathDisagreement` if any two routes differ.
pub fn rank_length(c: &LinearCode) -> Result<usize> {
    Ok(agree("l_R", &rank_length_paths(c)?)? as usize)
}

/// Whether `c_(i+p) = a c_i` for every codeword, indices mod `n`.
pub fn a_period_check(c: &LinearCode, p: usize, a: Element) -> bool {
    let tw = c.tower();
    let n = c.n();
    if n == 0 {
        return true;
    }
    c.rows()
        .iter()
        .all(|w| (0..n).all(|i| w[(i + p) % n] == tw.mul(a, w[i])))
}

/// Routes to `l_P(C)`: a scan of the divisors of `n`, and `ord(h0)` by two
/// order algorithms when `C` is skew cyclic.
pub fn period_length_paths(c: &LinearCode) -> Result<Vec<PathValue>> {
    let tw = c.tower();
    let n = c.n();
    let scan = int::divisors(n.max(1) as u64)
        .into_iter()
        .find(|&p| a_period_check(c, p as usize, Element::ONE))
        .unwrap_or(n as u64);
    let mut paths = vec![pv("codeword scan", scan as usize)];
    if !c.skew_orders().is_empty() {
        let h0 = closure_check_poly(c)?;
        for (name, ord) in [
            (
                "ord(h0) by divisors",
                h0.order_a_dividing(Element::ONE, n, tw)?,
            ),
            ("ord(h0) by stepping", h0.order_a(Element::ONE, tw)?),
        ] {
            let e = ord.finite().ok_or_else(|| {
                Error::VerificationFailed("a divisor of x^n - 1 has infinite order".into())
            })?;
            paths.push(pv(name, e as usize));
        }
    }
    Ok(paths)
}

pub fn period_length(c: &LinearCode) -> Result<usize> {
    Ok(agree("l_P", &period_length_paths(c)?)? as usize)
}

/// `l_(Sh,a,r)(C)`: the least `ord_(ab)(h0)` over `b` in GF(q)* for which
/// some `beta` has `beta^[r] = b beta`.
pub fn shift_length(c: &LinearCode, a: Element, r: usize) -> Result<Order> {
    let tw = c.tower();
    check_base_unit(a, tw)?;
    let h0 = closure_check_poly(c)?;
    let n = c.n();
    let mut best: Option<Order> = None;
    let mut feasible = Vec::new();
    for b in tw.base_units() {
        if tw.solve_beta(b, r)?.is_none() {
            continue;
        }
        feasible.push(b);
        let o = h0.order_a_dividing(tw.mul(a, b), n, tw)?;
        best = Some(best.map_or(o, |cur| cur.min(o)));
    }
    let best = best.expect("b = 1 is always feasible");
    if r.is_multiple_of(tw.m()) {
        if feasible != [Element::ONE] {
            return Err(Error::VerificationFailed(
                "beta^[0] = b beta solvable for b != 1".into(),
            ));
        }
        let stepped = h0.order_a(a, tw)?;
        if stepped != best {
            return Err(Error::PathDisagreement {
                quantity: "ord_a(h0)".into(),
                detail: format!("divisors={best:?}, stepping={stepped:?}"),
            });
        }
        if let Order::Finite(e) = best {
            let factor = tw.pow_i(a, -(e as i64));
            if !a_period_check(c, e as usize, factor) {
                return Err(Error::VerificationFailed(format!(
                    "ord_a(h0) = {e} is not an a^-{e}-period"
                )));
            }
        }
    }
    Ok(best)
}

/// One entry of the shift-length table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftEntry {
    pub a: String,
    pub r: usize,
    pub value: Order,
}

pub fn shift_length_table(c: &LinearCode) -> Result<Vec<ShiftEntry>> {
    let tw = c.tower();
    let mut out = Vec::new();
    for a in tw.base_units() {
        for r in 0..tw.m() {
            out.push(ShiftEntry {
                a: tw.display(a),
                r,
                value: shift_length(c, a, r)?,
            });
        }
    }
    Ok(out)
}

/// Bounds on the skew length of order `s`; `attained` is `None` when the
/// bounds leave it open.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewBounds {
    pub lower: u64,
    pub upper: u64,
    pub attained: Option<bool>,
    #[serde(skip)]
    pub witness: Option<LinearCode>,
}

/// If `h0 = x^e - a^e` for some `a` in GF(q)*, returns `(e, a)`.
pub fn binomial_root(h0: &CPoly, tw: &FieldTower) -> Option<(usize, Element)> {
    let e = h0.degree()?;
    if e == 0 || !h0.is_monic() || (1..e).any(|i| !h0.coeff(i).is_zero()) {
        return None;
    }
    let c = tw.neg(h0.coeff(0));
    tw.base_units()
        .into_iter()
        .find(|&a| tw.pow(a, e as u64) == c)
        .map(|a| (e, a))
}

pub fn skew_length_bounds(c: &LinearCode, s: usize) -> Result<SkewBounds> {
    let tw = c.tower();
    if !c.is_qr_cyclic(s) {
        return Err(Error::NotSkewCyclic(s));
    }
    let lower = rank_length(c)? as u64;
    let upper = shift_length_table(c)?
        .iter()
        .filter_map(|e| e.value.finite())
        .min()
        .expect("shift lengths of a divisor of x^n - 1 are finite");
    let h0 = closure_check_poly(c)?;
    if lower == 0 {
        return Ok(SkewBounds {
            lower,
            upper,
            attained: Some(true),
            witness: Some(LinearCode::zero(tw, 0)),
        });
    }
    let Some((e, a)) = binomial_root(&h0, tw) else {
        return Ok(SkewBounds {
            lower,
            upper,
            attained: if upper == lower { Some(true) } else { None },
            witness: None,
        });
    };
    let star = c.galois_closure();
    let eq = build_equivalence(&star, &LinearCode::full(tw, e), a, 0, Element::ONE)?;
    let witness = eq.image(c)?;
    if witness.n() as u64 != lower || !witness.is_qr_cyclic(s) {
        return Err(Error::VerificationFailed(
            "binomial witness is not a skew cyclic code of length l_R".into(),
        ));
    }
    Ok(SkewBounds {
        lower,
        upper,
        attained: Some(true),
        witness: Some(witness),
    })
}

/// A degeneracy criterion; `value` is `None` when its hypotheses fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criterion {
    pub id: String,
    pub value: Option<bool>,
}

fn crit(id: impl Into<String>, value: Option<bool>) -> Criterion {
    Criterion {
        id: id.into(),
        value,
    }
}

fn cyclic_criteria(c: &LinearCode, l_r: usize) -> Result<Vec<Criterion>> {
    let tw = c.tower();
    let n = c.n();
    let xn1 = CPoly::xn_minus_1(tw, n);
    let (g, h) = c.generator_check_poly()?;
    let (gstar, _) = g.conjugate_closures(tw)?;
    let (_, h0) = h.conjugate_closures(tw)?;
    let coprime = int::gcd(tw.q(), n as u64) == 1;
    let mut out = vec![
        crit("cyclic.1", Some(l_r < n)),
        crit("cyclic.2", Some(gstar.degree() != Some(0))),
        crit("cyclic.3", Some(h0 != xn1.monic(tw))),
    ];
    let item4 = if g.gcd_lcm(&h, tw)?.0 == CPoly::one() {
        let e = c.idempotent_generator()?;
        let mut prod = CPoly::one();
        for i in 0..tw.m() {
            let term = CPoly::one().sub(&e.apply_frobenius(i, tw), tw);
            prod = prod.mul(&term, tw).rem(&xn1, tw)?;
        }
        Some(!prod.is_zero())
    } else {
        None
    };
    out.push(crit("cyclic.4", item4));
    if coprime {
        let (gd, _) = c.dual().generator_check_poly()?;
        let (_, meet) = g.root_set(n, tw)?.conjugate_union_intersection(tw);
        let (join, _) = h.root_set(n, tw)?.conjugate_union_intersection(tw);
        out.push(crit("cyclic.5", Some(gd.mu_eta(n, tw)?.1 < n)));
        out.push(crit("cyclic.6", Some(!meet.is_empty())));
        out.push(crit("cyclic.7", Some(join.len() < n)));
    } else {
        for id in ["cyclic.5", "cyclic.6", "cyclic.7"] {
            out.push(crit(id, None));
        }
    }
    let factors: Vec<CPoly> = factor_xn_minus_1_over(n, 1, tw)?
        .into_iter()
        .map(|(f, _)| f)
        .collect();
    out.push(crit(
        "cyclic.8",
        Some(factors.iter().any(|f| f.divides(&g, tw))),
    ));
    let item9 = factors
        .iter()
        .any(|f| xn1.exact_div(f, tw).is_some_and(|cof| h.divides(&cof, tw)));
    out.push(crit("cyclic.9", Some(item9)));
    Ok(out)
}

fn skew_criteria(c: &LinearCode, r: usize, l_r: usize) -> Result<Vec<Criterion>> {
    let tw = c.tower();
    let n = c.n();
    let (g, h) = c.generator_check_lpoly(r)?;
    let hp = h.perp(tw)?;
    let star = g.conjugate_closures_l(n, tw)?.star;
    let lcm = llcm_all(&conjugates_l(&hp, tw), tw)?;
    let id = |k: usize| format!("skew.r{r}.{k}");
    let mut out = vec![
        crit(id(1), Some(l_r < n)),
        crit(id(2), Some(star.qdeg() != Some(0))),
        crit(id(3), Some(lcm.qdeg() != Some(n))),
    ];
    if tw.is_declared_subfield(r * n) {
        let (meet, join) = root_space_meet_join(&g, &hp, n, tw)?;
        out.push(crit(id(4), Some(meet.dim() > 0)));
        out.push(crit(id(5), Some(join.dim() < n)));
    } else {
        out.push(crit(id(4), None));
        out.push(crit(id(5), None));
    }
    let xn1 = CPoly::xn_minus_1(tw, n);
    let factors: Vec<CPoly> = factor_xn_minus_1_over(n, 1, tw)?
        .into_iter()
        .map(|(f, _)| f)
        .collect();
    out.push(crit(
        id(6),
        Some(
            factors
                .iter()
                .any(|f| LPoly::lift(f, r).right_divides(&g, tw)),
        ),
    ));
    let item7 = factors.iter().any(|f| {
        xn1.exact_div(f, tw)
            .is_some_and(|cof| h.left_divides(&LPoly::lift(&cof, r), tw))
    });
    out.push(crit(id(7), Some(item7)));
    Ok(out)
}

/// All applicable degeneracy criteria, which must agree with each other.
pub fn degeneracy_criteria(c: &LinearCode) -> Result<Vec<Criterion>> {
    require_skew(c)?;
    let l_r = rank_length(c)?;
    let mut out = Vec::new();
    if c.is_cyclic() {
        out.extend(cyclic_criteria(c, l_r)?);
    }
    for r in proper_skew_orders(c) {
        out.extend(skew_criteria(c, r, l_r)?);
    }
    let expected = l_r < c.n();
    let dissent: Vec<&str> = out
        .iter()
        .filter(|k| k.value.is_some_and(|v| v != expected))
        .map(|k| k.id.as_str())
        .collect();
    if !dissent.is_empty() {
        return Err(Error::CriterionDisagreement(format!(
            "l_R < n is {expected} but {} say otherwise",
            dissent.join(", ")
        )));
    }
    Ok(out)
}

/// `phi(c) = beta c A` from a Galois closed cyclic code onto another.
#[derive(Clone, Debug)]
pub struct RankEquivalence {
    pub a: Element,
    pub b: Element,
    pub r: usize,
    pub beta: Element,
    pub matrix: Matrix,
    domain: LinearCode,
    codomain: LinearCode,
}

/// Serializable form of a rank equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub n_prime: usize,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    pub r: usize,
    pub beta: Vec<u64>,
    pub matrix: Vec<Vec<Vec<u64>>>,
}

impl RankEquivalence {
    pub fn apply(&self, c: &[Element]) -> Codeword {
        let tw = self.domain.tower();
        let v = self.matrix.vec_mul(tw, c);
        v.into_iter().map(|x| tw.mul(self.beta, x)).collect()
    }

    pub fn domain(&self) -> &LinearCode {
        &self.domain
    }

    pub fn codomain(&self) -> &LinearCode {
        &self.codomain
    }

    /// Image of a subcode of the domain.
    pub fn image(&self, sub: &LinearCode) -> Result<LinearCode> {
        if !sub.is_subcode_of(&self.domain) {
            return Err(Error::InvalidParameter(
                "code is not a subcode of the domain".into(),
            ));
        }
        let rows = sub.rows().iter().map(|w| self.apply(w)).collect();
        LinearCode::from_rows(self.domain.tower(), self.codomain.n(), rows)
    }

    pub fn report(&self) -> EquivalenceReport {
        let tw = self.domain.tower();
        EquivalenceReport {
            n: self.domain.n(),
            n_prime: self.codomain.n(),
            a: tw.encode(self.a),
            b: tw.encode(self.b),
            r: self.r,
            beta: tw.encode(self.beta),
            matrix: self
                .matrix
                .row_vecs()
                .iter()
                .map(|row| row.iter().map(|&x| tw.encode(x)).collect())
                .collect(),
        }
    }

    fn verify(&self) -> Result<()> {
        let tw = self.domain.tower();
        let img = self.image(&self.domain)?;
        if img.k() != self.domain.k() || !img.is_subcode_of(&self.codomain) {
            return Err(Error::VerificationFailed(
                "equivalence is not a bijection onto V'".into(),
            ));
        }
        for w in sample_codewords(&self.domain, WEIGHT_SAMPLE, 0)? {
            if rank_weight(&w, tw) != rank_weight(&self.apply(&w), tw) {
                return Err(Error::VerificationFailed(
                    "equivalence changes a rank weight".into(),
                ));
            }
        }
        let shifted_a = Matrix::from_rows_with_cols(
            self.matrix
                .row_vecs()
                .iter()
                .map(|row| shift(row))
                .collect(),
            self.codomain.n(),
        );
        let factor = tw.mul(self.a, self.b);
        for row in self.domain.rows() {
            let lhs = self.matrix.vec_mul(tw, &sigma(&row, self.r, tw));
            let theta: Codeword = row.iter().map(|&x| tw.frobenius(x, self.r)).collect();
            let rhs: Codeword = shifted_a
                .vec_mul(tw, &theta)
                .into_iter()
                .map(|x| tw.mul(factor, x))
                .collect();
            if lhs != rhs {
                return Err(Error::VerificationFailed(
                    "commutation identity fails".into(),
                ));
            }
        }
        for sub in self.sample_subcodes()? {
            let image = self.image(&sub)?;
            for s in sub.skew_orders() {
                if !image.is_qr_cyclic(s) {
                    return Err(Error::VerificationFailed(format!(
                        "image of a q^{s}-cyclic subcode is not q^{s}-cyclic"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The domain and the cyclic subcodes `(g f)` for irreducible `f | h`.
    fn sample_subcodes(&self) -> Result<Vec<LinearCode>> {
        let tw = self.domain.tower();
        let n = self.domain.n();
        let mut out = vec![self.domain.clone()];
        if n == 0 {
            return Ok(out);
        }
        let (g, h) = self.domain.generator_check_poly()?;
        for (f, _) in factor_xn_minus_1_over(n, tw.m(), tw)?.into_iter().take(8) {
            if f.divides(&h, tw) {
                out.push(LinearCode::from_gpoly(tw, &g.mul(&f, tw), n)?);
            }
        }
        Ok(out)
    }
}

/// Up to `limit` codewords: all of them when the code is small enough,
/// otherwise random combinations drawn with a seeded generator.
pub fn sample_codewords(c: &LinearCode, limit: usize, seed: u64) -> Result<Vec<Codeword>> {
    let mut all = Vec::new();
    if c.for_each_codeword(limit as u64, |w| all.push(w.to_vec()))
        .is_ok()
    {
        return Ok(all);
    }
    let tw = c.tower();
    let elems = tw.subfield_elements(tw.m())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = c.rows();
    Ok((0..limit)
        .map(|_| {
            let mut w = vec![Element::ZERO; c.n()];
            for row in &rows {
                let k = elems[rng.gen_range(0..elems.len())];
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = tw.add(*x, tw.mul(k, y));
                }
            }
            w
        })
        .collect())
}

/// The rank equivalence `phi(sigma^i(g)) = (ab)^i beta sigma^i(g')` between
/// Galois closed cyclic codes `V` and `V'` with `(ab)^k h'(x) = h(abx)`,
/// where `b = beta^[r] / beta`.
pub fn build_equivalence(
    v: &LinearCode,
    vp: &LinearCode,
    a: Element,
    r: usize,
    beta: Element,
) -> Result<RankEquivalence> {
    let tw: &Arc<FieldTower> = v.tower();
    for code in [v, vp] {
        if !code.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        if !code.is_galois_closed() {
            return Err(Error::InvalidParameter(
                "equivalence needs Galois closed codes".into(),
            ));
        }
    }
    if v.k() != vp.k() {
        return Err(Error::InvalidParameter(format!(
            "dimensions {} and {} differ",
            v.k(),
            vp.k()
        )));
    }
    check_base_unit(a, tw)?;
    if beta.is_zero() || !tw.subfield_membership(beta, tw.m())? {
        return Err(Error::InvalidParameter(
            "beta must be a nonzero element of GF(q^m)".into(),
        ));
    }
    let b = tw.div(tw.frobenius(beta, r), beta);
    if !tw.in_base_field(b) {
        return Err(Error::NoBetaForB);
    }
    let (g, h) = v.generator_check_poly()?;
    let (gp, hp) = vp.generator_check_poly()?;
    let ab = tw.mul(a, b);
    let k = v.k();
    if hp.scale(tw.pow(ab, k as u64), tw) != h.compose_scaled(ab, tw) {
        return Err(Error::CheckPolyMismatch);
    }
    let (n, np) = (v.n(), vp.n());
    let mut src = Vec::with_capacity(k);
    let mut dst = Vec::with_capacity(k);
    let mut gw = g.to_vector(n).expect("deg g < n");
    let mut gpw = gp.to_vector(np).expect("deg g' < n'");
    let mut scale = Element::ONE;
    for _ in 0..k {
        src.push(gw.clone());
        dst.push(gpw.iter().map(|&x| tw.mul(scale, x)).collect::<Vec<_>>());
        gw = shift(&gw);
        gpw = shift(&gpw);
        scale = tw.mul(scale, ab);
    }
    let s = Matrix::from_rows_with_cols(src, n);
    let t = Matrix::from_rows_with_cols(dst, np);
    let matrix = s
        .solve(tw, &t)
        .ok_or_else(|| Error::VerificationFailed("no matrix carries g to g'".into()))?;
    if !matrix.entries().all(|x| tw.in_base_field(x) || x.is_zero()) {
        return Err(Error::VerificationFailed(
            "equivalence matrix leaves GF(q)".into(),
        ));
    }
    let eq = RankEquivalence {
        a,
        b,
        r,
        beta,
        matrix,
        domain: v.clone(),
        codomain: vp.clone(),
    };
    eq.verify()?;
    Ok(eq)
}

/// A shortened code together with the weight distributions compared.
#[derive(Clone, Debug)]
pub struct Shortened {
    pub code: LinearCode,
    pub modulus: ShortenedModulus,
    pub distribution: Vec<u64>,
    /// Whether the result is cyclic, checked when the modulus is `x^e - 1`.
    pub cyclic: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShortenedModulus {
    Conventional(CPoly),
    Linearized(LPoly),
}

/// Serializable form of a shortening.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortenedReport {
    pub length: usize,
    pub k: usize,
    pub modulus: Vec<Vec<u64>>,
    pub generator: Vec<Vec<Vec<u64>>>,
    pub distribution: Vec<u64>,
    pub cyclic: Option<bool>,
}

impl Shortened {
    pub fn report(&self) -> ShortenedReport {
        let tw = self.code.tower();
        let coeffs = match &self.modulus {
            ShortenedModulus::Conventional(f) => f.coeffs().to_vec(),
            ShortenedModulus::Linearized(f) => f.coeffs().to_vec(),
        };
        ShortenedReport {
            length: self.code.n(),
            k: self.code.k(),
            modulus: coeffs.iter().map(|&x| tw.encode(x)).collect(),
            generator: self
                .code
                .rows()
                .iter()
                .map(|row| row.iter().map(|&x| tw.encode(x)).collect())
                .collect(),
            distribution: self.distribution.clone(),
            cyclic: self.cyclic,
        }
    }
}

fn compare_distributions(c: &LinearCode, short: &LinearCode, cap: u64) -> Result<Vec<u64>> {
    let before = c.rank_weight_distribution(cap)?;
    let after = short.rank_weight_distribution(cap)?;
    let trimmed = |d: &[u64]| {
        let end = d.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1);
        d[..end].to_vec()
    };
    if trimmed(&before) != trimmed(&after) {
        return Err(Error::VerificationFailed(format!(
            "rank weight distributions differ: {before:?} vs {after:?}"
        )));
    }
    Ok(after)
}

/// Shortens a cyclic code to length `l_R` through `f -> f g*`, a
/// rank-isometric isomorphism `GF(q^m)[x]/(h0) -> (g*)/(x^n - 1)`.
pub fn shorten_pseudo_cyclic(c: &LinearCode, cap: u64) -> Result<Shortened> {
    if !c.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    let tw = c.tower();
    let n = c.n();
    let (g, h) = c.generator_check_poly()?;
    let (gstar, _) = g.conjugate_closures(tw)?;
    let (_, h0) = h.conjugate_closures(tw)?;
    if gstar.mul(&h0, tw) != CPoly::xn_minus_1(tw, n) {
        return Err(Error::VerificationFailed("g* h0 != x^n - 1".into()));
    }
    let e = h0.degree().unwrap_or(0);
    let rows = c
        .rows()
        .iter()
        .map(|w| {
            word_to_cpoly(w)
                .exact_div(&gstar, tw)
                .and_then(|f| f.to_vector(e))
                .ok_or_else(|| Error::VerificationFailed("codeword outside (g*)".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let short = LinearCode::from_rows(tw, e, rows)?;
    for row in short.rows() {
        let xf = CPoly::x().mul(&word_to_cpoly(&row), tw).rem(&h0, tw)?;
        let v = xf.to_vector(e).expect("reduced mod h0");
        if !short.contains(&v) {
            return Err(Error::VerificationFailed(
                "shortened code is not an ideal mod h0".into(),
            ));
        }
    }
    let distribution = compare_distributions(c, &short, cap)?;
    let cyclic = (e > 0 && h0 == CPoly::xn_minus_1(tw, e)).then(|| short.is_cyclic());
    if cyclic == Some(false) {
        return Err(Error::VerificationFailed(
            "shortening by x^e - 1 is not cyclic".into(),
        ));
    }
    Ok(Shortened {
        code: short,
        modulus: ShortenedModulus::Conventional(h0),
        distribution,
        cyclic,
    })
}

/// Shortens a q^r-cyclic code through `F -> F (x) G*`, defined when the check
/// polynomial `H_0` of `C*` is central.
pub fn shorten_pseudo_skew(c: &LinearCode, r: usize, cap: u64) -> Result<Shortened> {
    let tw = c.tower();
    let n = c.n();
    check_skew_divisibility(tw, r, n)?;
    if !c.is_qr_cyclic(r) {
        return Err(Error::NotSkewCyclic(r));
    }
    let (g, h) = c.generator_check_lpoly(r)?;
    let gstar = g.conjugate_closures_l(n, tw)?.star;
    let (gs, h_zero) = c.galois_closure().generator_check_lpoly(r)?;
    let via_perp = llcm_all(&conjugates_l(&h.perp(tw)?, tw), tw)?.top(n, tw)?;
    if gs.monic(tw) != gstar || via_perp.monic(tw) != h_zero.monic(tw) {
        return Err(Error::VerificationFailed(
            "closure of the generator or check polynomial disagrees with C*".into(),
        ));
    }
    if !h_zero.is_central(tw) {
        return Err(Error::H0NotCentral);
    }
    let e = h_zero.qdeg().unwrap_or(0);
    let to_word = |f: &LPoly| -> Codeword { (0..e).map(|i| f.coeff(i)).collect() };
    let rows = c
        .rows()
        .iter()
        .map(|w| {
            word_to_lpoly(w, r)
                .right_quotient(&gstar, tw)
                .map(|f| to_word(&f))
        })
        .collect::<Result<Vec<_>>>()?;
    let short = LinearCode::from_rows(tw, e, rows)?;
    let xr = LPoly::monomial(r, Element::ONE, 1);
    for row in short.rows() {
        let prod = xr.symbolic_product(&word_to_lpoly(&row, r), tw)?;
        let (_, rem) = prod.right_divmod(&h_zero, tw)?;
        if !short.contains(&to_word(&rem)) {
            return Err(Error::VerificationFailed(
                "shortened code is not a left ideal mod H_0".into(),
            ));
        }
    }
    let distribution = compare_distributions(c, &short, cap)?;
    Ok(Shortened {
        code: short,
        modulus: ShortenedModulus::Linearized(h_zero),
        distribution,
        cyclic: None,
    })
}

/// `(eta_q(C), l_R(C^perp))` for a cyclic code with `gcd(q, n) = 1`; the two
/// must coincide.
pub fn eta_duality(c: &LinearCode) -> Result<(usize, usize)> {
    let tw = c.tower();
    let n = c.n();
    if int::gcd(tw.q(), n as u64) != 1 {
        return Err(Error::NotCoprime(n));
    }
    let (g, _) = c.generator_check_poly()?;
    let eta = g.mu_eta(n, tw)?.1;
    let dual_len = c.dual().galois_closure().k();
    if eta != dual_len {
        return Err(Error::PathDisagreement {
            quantity: "eta_q(C) = l_R(C^perp)".into(),
            detail: format!("eta={eta}, l_R(dual)={dual_len}"),
        });
    }
    Ok((eta, dual_len))
}

/// One Singleton-type bound `d_R <= l - k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonCheck {
    pub length: String,
    pub value: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingletonAudit {
    pub d_r: Option<usize>,
    pub k: usize,
    pub checks: Vec<SingletonCheck>,
}

impl SingletonAudit {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

pub fn singleton_audit(c: &LinearCode, report: &LengthReport, cap: u64) -> Result<SingletonAudit> {
    let d_r = c.min_rank_distance(cap)?;
    let k = c.k() as u64;
    let mut lengths = vec![
        ("l_R".to_string(), report.l_r),
        ("l_P".to_string(), report.l_p),
        ("skew upper".to_string(), report.skew_bounds.upper),
        ("n".to_string(), c.n() as u64),
    ];
    for e in &report.shift_lengths {
        if let Some(v) = e.value.finite() {
            lengths.push((format!("l_Sh(a={},r={})", e.a, e.r), v));
        }
    }
    let checks = lengths
        .into_iter()
        .map(|(length, value)| SingletonCheck {
            holds: d_r.is_none_or(|d| d as u64 + k <= value + 1),
            length,
            value,
        })
        .collect();
    Ok(SingletonAudit {
        d_r,
        k: c.k(),
        checks,
    })
}

/// Everything the analyzer reports about one code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "l_R")]
    pub l_r: u64,
    #[serde(rename = "l_P")]
    pub l_p: u64,
    pub shift_lengths: Vec<ShiftEntry>,
    pub skew_bounds: SkewBounds,
    pub degenerate: bool,
    pub criteria: Vec<Criterion>,
    pub skew_orders: Vec<usize>,
    pub rank_paths: Vec<PathValue>,
    pub period_paths: Vec<PathValue>,
}

pub fn analyze(c: &LinearCode) -> Result<LengthReport> {
    require_skew(c)?;
    let n = c.n();
    let rank_paths = rank_length_paths(c)?;
    let l_r = agree("l_R", &rank_paths)?;
    let period_paths = period_length_paths(c)?;
    let l_p = agree("l_P", &period_paths)?;
    let orders = c.skew_orders();
    let skew_bounds = skew_length_bounds(c, orders[0])?;
    let shift_lengths = shift_length_table(c)?;
    let criteria = degeneracy_criteria(c)?;
    let min_shift = shift_lengths
        .iter()
        .filter_map(|e| e.value.finite())
        .min()
        .unwrap_or(1);
    let nn = n as u64;
    let chain_ok = (l_r == 0 || l_r <= skew_bounds.upper)
        && skew_bounds.lower == l_r
        && skew_bounds.upper == min_shift
        && min_shift <= l_p
        && l_p <= nn.max(1)
        && (nn == 0 || nn.is_multiple_of(l_p));
    if !chain_ok {
        return Err(Error::VerificationFailed(format!(
            "length chain broken: l_R={l_r}, upper={}, min shift={min_shift}, l_P={l_p}, n={n}",
            skew_bounds.upper
        )));
    }
    Ok(LengthReport {
        n,
        k: c.k(),
        l_r,
        l_p,
        shift_lengths,
        skew_bounds,
        degenerate: (l_r as usize) < n,
        criteria,
        skew_orders: orders,
        rank_paths,
        period_paths,
    })
}

/// Whether `x^e f = a^e f` modulo `x^n - 1` for every codeword polynomial,
/// read directly from codeword coefficients.
pub fn annihilates_shift(c: &LinearCode, e: usize, a: Element) -> bool {
    let tw = c.tower();
    let ae = tw.pow(a, e as u64);
    let n = c.n();
    c.rows().iter().all(|w| {
        let f = word_to_cpoly(w);
        let lhs = CPoly::monomial(Element::ONE, e)
            .mul(&f, tw)
            .rem(&CPoly::xn_minus_1(tw, n), tw)
            .expect("n > 0");
        lhs == f.scale(ae, tw)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUM_CAP;
    use crate::gf::make_tower;

    fn gf4(n: usize) -> Arc<FieldTower> {
        Arc::new(make_tower(2, 1, 2, if n.is_multiple_of(2) { 1 } else { 2 }, n).unwrap())
    }

    fn poly(tw: &FieldTower, cs: &[Element]) -> CPoly {
        let _ = tw;
        CPoly::new(cs.to_vec())
    }

    #[test]
    fn x_plus_alpha_is_nondegenerate() {
        let tw = gf4(3);
        let a = tw.alpha();
        let c = LinearCode::from_gpoly(&tw, &poly(&tw, &[a, Element::ONE]), 3).unwrap();
        let rep = analyze(&c).unwrap();
        assert_eq!((rep.l_r, rep.l_p), (3, 3));
        assert!(!rep.degenerate);
        assert_eq!(rep.skew_bounds.lower, 3);
        assert!(rep.criteria.iter().all(|k| k.value != Some(true)));
        // eta(x + a) counts the conjugate roots a and a^2
        assert_eq!(eta_duality(&c).unwrap(), (2, 2));
    }

    #[test]
    fn repetition_code_shortens_to_length_one() {
        let tw = gf4(3);
        let one = Element::ONE;
        let c = LinearCode::from_gpoly(&tw, &poly(&tw, &[one, one, one]), 3).unwrap();
        let rep = analyze(&c).unwrap();
        assert_eq!((rep.l_r, rep.l_p), (1, 1));
        assert!(rep.degenerate);
        assert_eq!(rep.skew_bounds.attained, Some(true));
        let s = shorten_pseudo_cyclic(&c, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.code.n(), 1);
        assert_eq!(s.distribution, vec![1, 3]);
        assert_eq!(s.cyclic, Some(true));
    }

    #[test]
    fn zero_and_full_codes() {
        let tw = gf4(3);
        let z = analyze(&LinearCode::zero(&tw, 3)).unwrap();
        assert_eq!((z.l_r, z.l_p, z.degenerate), (0, 1, true));
        assert!(z.shift_lengths.iter().all(|e| e.value == Order::Finite(1)));
        let s = shorten_pseudo_cyclic(&LinearCode::zero(&tw, 3), DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.code.n(), 0);
        let f = analyze(&LinearCode::full(&tw, 3)).unwrap();
        assert_eq!((f.l_r, f.l_p, f.degenerate), (3, 3, false));
    }

    #[test]
    fn period_relation_uses_inverse_scalar() {
        // h0 = x - w over GF(4) with w of order 3: codewords w^(2-i)
        let tw = gf4(3);
        let w = tw.alpha();
        let g = CPoly::xn_minus_1(&tw, 3)
            .exact_div(&CPoly::binomial(&tw, 1, w), &tw)
            .unwrap();
        let star = LinearCode::from_gpoly(&tw, &g, 3).unwrap();
        // not Galois closed, so use the code directly as a cyclic code
        assert!(annihilates_shift(&star, 1, w));
        assert!(a_period_check(&star, 1, tw.inv(w).unwrap()));
        assert!(!a_period_check(&star, 1, w));
    }

    #[test]
    fn every_cyclic_code_over_gf4_is_consistent() {
        for n in [2, 3, 4, 5] {
            let tw = gf4(n);
            for c in crate::code::all_cyclic_codes(&tw, n).unwrap() {
                let rep = analyze(&c).unwrap();
                let star = c.galois_closure();
                assert_eq!(rep.l_r as usize, star.k());
                assert_eq!(rank_length(&star).unwrap() as u64, rep.l_r);
                assert_eq!(period_length(&star).unwrap() as u64, rep.l_p);
                let s = shorten_pseudo_cyclic(&c, DEFAULT_ENUM_CAP).unwrap();
                assert_eq!(s.code.n() as u64, rep.l_r);
            }
        }
    }

    #[test]
    fn binomial_witness_matches_rank_length() {
        let tw = gf4(4);
        let one = Element::ONE;
        // (x^4 - 1) / (x^2 - 1) = x^2 + 1, so h0 = x^2 - 1
        let c = LinearCode::from_gpoly(&tw, &poly(&tw, &[one, Element::ZERO, one]), 4).unwrap();
        let b = skew_length_bounds(&c, 0).unwrap();
        assert_eq!((b.lower, b.upper, b.attained), (2, 2, Some(true)));
        let w = b.witness.unwrap();
        assert_eq!(w.n(), 2);
        assert_eq!(
            w.rank_weight_distribution(DEFAULT_ENUM_CAP).unwrap()[..],
            c.rank_weight_distribution(DEFAULT_ENUM_CAP).unwrap()[..3]
        );
    }

    #[test]
    fn skew_shortening_on_central_check() {
        let tw = Arc::new(make_tower(2, 1, 2, 1, 4).unwrap());
        let one = Element::ONE;
        // G = x^[2] + x, so H_0 = x^[2] + x is central for m = 2
        let g = LPoly::new(1, vec![one, Element::ZERO, one]);
        let c = LinearCode::from_glpoly(&tw, &g, 4).unwrap();
        let s = shorten_pseudo_skew(&c, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(s.code.n(), rank_length(&c).unwrap());
        assert_eq!(s.code.n(), 2);
        let bad = LinearCode::from_glpoly(&tw, &LPoly::new(1, vec![one, one]), 4).unwrap();
        assert_eq!(
            shorten_pseudo_skew(&bad, 1, DEFAULT_ENUM_CAP).unwrap_err(),
            Error::H0NotCentral
        );
    }

    #[test]
    fn skew_item_seven_needs_left_division() {
        use crate::lpoly::sample_right_divisor;
        use rand::SeedableRng;
        let tw = Arc::new(make_tower(2, 1, 2, 1, 4).unwrap());
        let n = 4;
        let factors: Vec<CPoly> = factor_xn_minus_1_over(n, 1, &tw)
            .unwrap()
            .into_iter()
            .map(|(f, _)| f)
            .collect();
        let xn1 = CPoly::xn_minus_1(&tw, n);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let mut literal_wrong = 0;
        for _ in 0..64 {
            let g = sample_right_divisor(1, n, 1 + rng.gen_range(0..2), &tw, &mut rng).unwrap();
            let c = LinearCode::from_glpoly(&tw, &g, n).unwrap();
            let (_, h) = c.generator_check_lpoly(1).unwrap();
            let degenerate = rank_length(&c).unwrap() < n;
            let cofactors: Vec<LPoly> = factors
                .iter()
                .map(|f| LPoly::lift(&xn1.exact_div(f, &tw).unwrap(), 1))
                .collect();
            let left = cofactors.iter().any(|f| h.left_divides(f, &tw));
            let right = cofactors.iter().any(|f| h.right_divides(f, &tw));
            assert_eq!(left, degenerate);
            if right != degenerate {
                literal_wrong += 1;
            }
        }
        assert!(literal_wrong > 0);
    }

    #[test]
    fn report_json_shape() {
        let tw = gf4(3);
        let a = tw.alpha();
        let c = LinearCode::from_gpoly(&tw, &poly(&tw, &[a, Element::ONE]), 3).unwrap();
        let json = serde_json::to_value(analyze(&c).unwrap()).unwrap();
        assert_eq!(json["l_R"], 3);
        assert_eq!(json["skew_bounds"]["lower"], 3);
        assert_eq!(json["shift_lengths"][0]["a"], "1");
    }
}
