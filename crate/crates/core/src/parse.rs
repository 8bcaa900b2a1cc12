//! Job specifications and the text grammar for elements and polynomials.
//!
//! Elements are written as sums of terms like `3`, `a`, `2*a^5` or `(a+1)`,
//! where `a` (or `α`) is the fixed primitive element of GF(q^m).
//! Conventional polynomials use `x` and `x^k`; linearized ones use `x^[i]`
//! for the `q^(r i)`-power term, with `x` standing for `x^[0]`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, DEFAULT_ENUM_CAP};
use crate::cpoly::{CPoly, RootSet};
use crate::error::{Error, Result};
use crate::gf::{int, Element, FieldSpec, FieldTower, DEFAULT_AMBIENT_CAP};
use crate::lpoly::LPoly;

/// An element given as an integer, a GF(p) coefficient list or text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemInput {
    Int(i64),
    Digits(Vec<u64>),
    Text(String),
}

/// Coefficients as a list (constant term first) or as a text polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffsInput {
    List(Vec<ElemInput>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LPolyInput {
    pub r: usize,
    pub coeffs: CoeffsInput,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "data", rename_all = "snake_case")]
pub enum GeneratorInput {
    ConvPoly(CoeffsInput),
    LinPoly(LPolyInput),
    Matrix(Vec<Vec<ElemInput>>),
    RootExponents(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpec {
    pub n: usize,
    pub generator: GeneratorInput,
}

/// Field parameters; `q` may replace `p` and `e`, and `n` defaults to the
/// code length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<usize>,
    pub m: usize,
    #[serde(default)]
    pub r: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Analysis {
    Lengths,
    Degeneracy,
    Shorten,
    Equivalence,
    VerifySweep,
}

impl std::str::FromStr for Analysis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.trim().to_string()))
            .map_err(|_| Error::ParseError(format!("unknown analysis {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    #[serde(default = "default_ambient")]
    pub ambient: u64,
    #[serde(default = "default_enum", rename = "enum")]
    pub enumeration: u64,
}

fn default_ambient() -> u64 {
    DEFAULT_AMBIENT_CAP
}

fn default_enum() -> u64 {
    DEFAULT_ENUM_CAP
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            ambient: DEFAULT_AMBIENT_CAP,
            enumeration: DEFAULT_ENUM_CAP,
        }
    }
}

/// Target and parameters of a rank equivalence request.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceInput {
    pub target: CodeSpec,
    pub a: ElemInput,
    #[serde(default)]
    pub r: usize,
    pub beta: ElemInput,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    pub field: FieldInput,
    pub code: CodeSpec,
    #[serde(default)]
    pub analyses: Vec<Analysis>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub caps: Caps,
    /// Skew order used by `shorten` for codes that are not cyclic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shorten_r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceInput>,
}

impl JobSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::ParseError(e.to_string()))
    }

    pub fn tower(&self) -> Result<Arc<FieldTower>> {
        self.field.tower(self.code.n, self.caps.ambient)
    }
}

impl FieldInput {
    pub fn field_spec(&self, default_n: usize) -> Result<FieldSpec> {
        let (p, e) = match (self.q, self.p) {
            (Some(q), None) => int::prime_power(q)
                .ok_or_else(|| Error::ParseError(format!("q = {q} is not a prime power")))?,
            (None, Some(p)) => (p, self.e.unwrap_or(1)),
            (Some(q), Some(p)) => {
                let (pp, e) = int::prime_power(q)
                    .ok_or_else(|| Error::ParseError(format!("q = {q} is not a prime power")))?;
                if pp != p || self.e.is_some_and(|x| x != e) {
                    return Err(Error::ParseError(format!("q = {q} does not match p = {p}")));
                }
                (p, e)
            }
            (None, None) => return Err(Error::ParseError("field needs q or p".into())),
        };
        Ok(FieldSpec {
            p,
            e,
            m: self.m,
            r: self.r,
            n: self.n.unwrap_or(default_n),
            modulus: self.modulus.clone(),
        })
    }

    pub fn tower(&self, default_n: usize, cap: u64) -> Result<Arc<FieldTower>> {
        Ok(Arc::new(FieldTower::from_spec(
            &self.field_spec(default_n)?,
            cap,
        )?))
    }
}

// ---- text grammar ---------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Num(u64),
    A,
    X,
    Caret,
    LBracket,
    RBracket,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| Error::ParseError("integer too large".into()))?;
                    chars.next();
                }
                out.push(Tok::Num(v));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'a' | 'α' => Tok::A,
                    'x' => Tok::X,
                    '^' => Tok::Caret,
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => {
                        return Err(Error::ParseError(format!("unexpected character {other:?}")))
                    }
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Element,
    Conventional,
    Linearized,
}

struct Parser<'t> {
    toks: Vec<Tok>,
    pos: usize,
    tw: &'t FieldTower,
    mode: Mode,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(u) if u == t => Ok(()),
            other => Err(Error::ParseError(format!(
                "expected {t:?}, found {other:?}"
            ))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        match self.bump() {
            Some(Tok::Num(v)) => Ok(v),
            other => Err(Error::ParseError(format!(
                "expected a number, found {other:?}"
            ))),
        }
    }

    /// `sum := ['-'] term (('+' | '-') term)*`
    fn sum(&mut self) -> Result<BTreeMap<usize, Element>> {
        let tw = self.tw;
        let mut out: BTreeMap<usize, Element> = BTreeMap::new();
        let mut negate = false;
        if self.peek() == Some(Tok::Minus) {
            self.bump();
            negate = true;
        } else if self.peek() == Some(Tok::Plus) {
            self.bump();
        }
        loop {
            let (deg, mut c) = self.term()?;
            if negate {
                c = tw.neg(c);
            }
            let slot = out.entry(deg).or_insert(Element::ZERO);
            *slot = tw.add(*slot, c);
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negate = true;
                }
                _ => return Ok(out),
            }
        }
    }

    /// `term := factor (['*'] factor)*`, at most one factor involving `x`.
    fn term(&mut self) -> Result<(usize, Element)> {
        let tw = self.tw;
        let mut coeff = Element::ONE;
        let mut degree: Option<usize> = None;
        let mut first = true;
        loop {
            match self.peek() {
                Some(Tok::Star) if !first => {
                    self.bump();
                }
                Some(Tok::Num(_) | Tok::A | Tok::X | Tok::LParen) => {}
                _ if first => {
                    return Err(Error::ParseError(format!(
                        "expected a term, found {:?}",
                        self.peek()
                    )))
                }
                _ => break,
            }
            first = false;
            match self.bump() {
                Some(Tok::Num(v)) => coeff = tw.mul(coeff, tw.from_int((v % tw.p()) as i64)),
                Some(Tok::A) => {
                    let k = self.optional_exponent()?;
                    coeff = tw.mul(coeff, tw.pow(tw.alpha(), k));
                }
                Some(Tok::LParen) => {
                    let saved = self.mode;
                    self.mode = Mode::Element;
                    let v = self.sum()?;
                    self.mode = saved;
                    self.expect(Tok::RParen)?;
                    coeff = tw.mul(coeff, v.get(&0).copied().unwrap_or(Element::ZERO));
                }
                Some(Tok::X) => {
                    if degree.is_some() {
                        return Err(Error::ParseError("repeated x in a term".into()));
                    }
                    degree = Some(self.x_exponent()?);
                }
                _ => unreachable!("peeked a factor"),
            }
        }
        Ok((degree.unwrap_or(0), coeff))
    }

    fn optional_exponent(&mut self) -> Result<u64> {
        if self.peek() == Some(Tok::Caret) {
            self.bump();
            self.number()
        } else {
            Ok(1)
        }
    }

    fn x_exponent(&mut self) -> Result<usize> {
        match self.mode {
            Mode::Element => Err(Error::ParseError("x is not allowed in an element".into())),
            Mode::Conventional => Ok(self.optional_exponent()? as usize),
            Mode::Linearized => {
                if self.peek() != Some(Tok::Caret) {
                    return Ok(0);
                }
                self.bump();
                self.expect(Tok::LBracket)?;
                let i = self.number()? as usize;
                self.expect(Tok::RBracket)?;
                Ok(i)
            }
        }
    }
}

fn parse_terms(s: &str, tw: &FieldTower, mode: Mode) -> Result<BTreeMap<usize, Element>> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        tw,
        mode,
    };
    if p.toks.is_empty() {
        return Err(Error::ParseError("empty expression".into()));
    }
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::ParseError(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

fn dense(terms: BTreeMap<usize, Element>) -> Vec<Element> {
    let len = terms.keys().next_back().map_or(0, |&d| d + 1);
    let mut v = vec![Element::ZERO; len];
    for (d, c) in terms {
        v[d] = c;
    }
    v
}

pub fn parse_element(s: &str, tw: &FieldTower) -> Result<Element> {
    Ok(parse_terms(s, tw, Mode::Element)?
        .get(&0)
        .copied()
        .unwrap_or(Element::ZERO))
}

pub fn parse_cpoly(s: &str, tw: &FieldTower) -> Result<CPoly> {
    Ok(CPoly::new(dense(parse_terms(s, tw, Mode::Conventional)?)))
}

pub fn parse_lpoly(s: &str, r: usize, tw: &FieldTower) -> Result<LPoly> {
    Ok(LPoly::new(r, dense(parse_terms(s, tw, Mode::Linearized)?)))
}

// ---- JSON inputs to library values ------------------------------------------

impl ElemInput {
    pub fn resolve(&self, tw: &FieldTower) -> Result<Element> {
        match self {
            ElemInput::Int(k) => Ok(tw.from_int(*k)),
            ElemInput::Digits(d) => tw.from_digits(d),
            ElemInput::Text(s) => parse_element(s, tw),
        }
    }
}

fn check_in_code_field(x: Element, tw: &FieldTower) -> Result<Element> {
    if tw.subfield_membership(x, tw.m())? {
        Ok(x)
    } else {
        Err(Error::ParseError(format!(
            "coefficient {} is not in GF(q^m)",
            tw.display(x)
        )))
    }
}

impl CoeffsInput {
    fn resolve(&self, tw: &FieldTower, mode: Mode) -> Result<Vec<Element>> {
        let v = match self {
            CoeffsInput::List(l) => l
                .iter()
                .map(|e| e.resolve(tw))
                .collect::<Result<Vec<_>>>()?,
            CoeffsInput::Text(s) => dense(parse_terms(s, tw, mode)?),
        };
        v.into_iter().map(|x| check_in_code_field(x, tw)).collect()
    }

    pub fn cpoly(&self, tw: &FieldTower) -> Result<CPoly> {
        Ok(CPoly::new(self.resolve(tw, Mode::Conventional)?))
    }

    pub fn lpoly(&self, r: usize, tw: &FieldTower) -> Result<LPoly> {
        Ok(LPoly::new(r, self.resolve(tw, Mode::Linearized)?))
    }
}

impl CodeSpec {
    pub fn build(&self, tw: &Arc<FieldTower>) -> Result<LinearCode> {
        let n = self.n;
        if n == 0 {
            return Err(Error::ParseError("code length must be positive".into()));
        }
        match &self.generator {
            GeneratorInput::ConvPoly(c) => LinearCode::from_gpoly(tw, &c.cpoly(tw)?, n),
            GeneratorInput::LinPoly(l) => LinearCode::from_glpoly(tw, &l.coeffs.lpoly(l.r, tw)?, n),
            GeneratorInput::Matrix(rows) => {
                let rows = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| e.resolve(tw).and_then(|x| check_in_code_field(x, tw)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                LinearCode::from_rows(tw, n, rows)
            }
            GeneratorInput::RootExponents(s) => {
                let roots = RootSet {
                    n,
                    exponents: s.iter().copied().collect::<BTreeSet<_>>(),
                    zeta_degree: int::mult_order(tw.q() % n as u64, n as u64) as usize,
                };
                LinearCode::from_root_exponents(tw, &roots)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_tower;
    use proptest::prelude::*;

    fn gf4() -> FieldTower {
        make_tower(2, 1, 2, 2, 3).unwrap()
    }

    #[test]
    fn element_text() {
        let tw = gf4();
        let a = tw.alpha();
        assert_eq!(parse_element("a", &tw).unwrap(), a);
        assert_eq!(parse_element("α^2", &tw).unwrap(), tw.mul(a, a));
        assert_eq!(
            parse_element("a + 1", &tw).unwrap(),
            tw.add(a, Element::ONE)
        );
        assert_eq!(parse_element("3", &tw).unwrap(), Element::ONE);
        assert_eq!(parse_element("2*(a+1)", &tw).unwrap(), Element::ZERO);
        assert!(parse_element("x", &tw).is_err());
        assert!(parse_element("a +", &tw).is_err());
    }

    #[test]
    fn polynomial_text() {
        let tw = gf4();
        let a = tw.alpha();
        let g = parse_cpoly("x + α", &tw).unwrap();
        assert_eq!(g, CPoly::new(vec![a, Element::ONE]));
        let g = parse_cpoly("x^2 + x + 1", &tw).unwrap();
        assert_eq!(g.degree(), Some(2));
        let f = parse_lpoly("x^[2] + a x^[1] + x", 1, &tw).unwrap();
        assert_eq!(f.coeffs(), &[Element::ONE, a, Element::ONE]);
        assert!(parse_lpoly("x^2", 1, &tw).is_err());
    }

    #[test]
    fn job_spec_round_trip() {
        let s = r#"{"field":{"q":2,"m":2,"r":2},"code":{"n":3,"generator":{"type":"conv_poly","data":"x+a"}},"analyses":["lengths","verify-sweep"]}"#;
        let job = JobSpec::from_json(s).unwrap();
        assert_eq!(job.analyses, vec![Analysis::Lengths, Analysis::VerifySweep]);
        let tw = job.tower().unwrap();
        let c = job.code.build(&tw).unwrap();
        assert_eq!(c.k(), 2);
        let again = JobSpec::from_json(&serde_json::to_string(&job).unwrap()).unwrap();
        assert_eq!(again, job);
    }

    #[test]
    fn generator_kinds_agree() {
        let tw = Arc::new(gf4());
        let one = ElemInput::Int(1);
        let from_list = CodeSpec {
            n: 3,
            generator: GeneratorInput::ConvPoly(CoeffsInput::List(vec![
                one.clone(),
                one.clone(),
                one.clone(),
            ])),
        };
        let from_matrix = CodeSpec {
            n: 3,
            generator: GeneratorInput::Matrix(vec![vec![one.clone(), one.clone(), one]]),
        };
        let from_roots = CodeSpec {
            n: 3,
            generator: GeneratorInput::RootExponents(vec![1, 2]),
        };
        let c = from_list.build(&tw).unwrap();
        assert_eq!(c, from_matrix.build(&tw).unwrap());
        assert_eq!(c, from_roots.build(&tw).unwrap());
    }

    proptest! {
        #[test]
        fn printed_powers_parse_back(k in 0u64..15) {
            let tw = gf4();
            let x = tw.pow(tw.alpha(), k);
            prop_assert_eq!(parse_element(&tw.display(x), &tw).unwrap(), x);
        }
    }
}
