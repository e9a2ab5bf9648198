//! Sums of products of powers: `sum_i a_i prod_j f_j^(alpha_{i,j})`.
//!
//! Instance files are line oriented, `#` starts a comment:
//!
//! ```text
//! bases 2
//! f1: 1*x^0 + 1*x^1
//! f2: 1*x^0 + 2*x^1 + 1*x^2
//! terms 2
//! 1 : f1^2
//! -1 : f2^1
//! ```
//!
//! Omitted bases in a term have exponent 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{pow_biguint, Coefficient, SparsePoly};
use crate::wronskian::PowerProduct;

/// Size limits for full expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionBudget {
    pub max_degree: u64,
    pub max_sparsity: usize,
}

impl Default for ExpansionBudget {
    fn default() -> Self {
        ExpansionBudget {
            max_degree: 10_000,
            max_sparsity: 100_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpsInstance {
    bases: Vec<SparsePoly>,
    coeffs: Vec<Coefficient>,
    rows: Vec<PowerProduct>,
}

impl SpsInstance {
    /// Validates dimensions and rejects a zero base raised to a positive
    /// power. A zero base with exponent 0 everywhere is allowed.
    pub fn new(bases: Vec<SparsePoly>, coeffs: Vec<Coefficient>, rows: Vec<PowerProduct>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::InvalidArgument("an instance needs at least one base".into()));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("an instance needs at least one term".into()));
        }
        if coeffs.len() != rows.len() {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for {} exponent rows",
                coeffs.len(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.exponents.len() != bases.len() {
                return Err(Error::InvalidArgument(format!(
                    "exponent row {} has {} entries, expected {}",
                    i + 1,
                    row.exponents.len(),
                    bases.len()
                )));
            }
            for (j, e) in row.exponents.iter().enumerate() {
                if bases[j].is_zero() && !e.is_zero() {
                    return Err(Error::DegenerateBase { index: j + 1 });
                }
            }
        }
        Ok(SpsInstance { bases, coeffs, rows })
    }

    /// Builds an instance from small integer data.
    pub fn from_i64(bases: Vec<SparsePoly>, terms: &[(i64, &[u64])]) -> Result<Self> {
        let coeffs = terms.iter().map(|(a, _)| Coefficient::from_integer(BigInt::from(*a))).collect();
        let rows = terms.iter().map(|(_, r)| PowerProduct::from_u64(r)).collect();
        SpsInstance::new(bases, coeffs, rows)
    }

    pub fn bases(&self) -> &[SparsePoly] {
        &self.bases
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn rows(&self) -> &[PowerProduct] {
        &self.rows
    }

    /// Number of terms.
    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    /// Number of bases.
    pub fn m(&self) -> usize {
        self.bases.len()
    }

    /// Largest sparsity among the bases.
    pub fn t(&self) -> usize {
        self.bases.iter().map(SparsePoly::sparsity).max().unwrap_or(0)
    }

    /// Largest degree among the bases (0 for constant or zero bases).
    pub fn d(&self) -> BigUint {
        self.bases
            .iter()
            .filter_map(|f| f.degree_biguint().cloned())
            .max()
            .unwrap_or_default()
    }

    pub fn alpha_max(&self) -> BigUint {
        self.rows
            .iter()
            .flat_map(|r| r.exponents.iter().cloned())
            .max()
            .unwrap_or_default()
    }

    /// Copy with coefficient `i` replaced.
    pub fn with_coeff(&self, i: usize, c: Coefficient) -> SpsInstance {
        let mut out = self.clone();
        out.coeffs[i] = c;
        out
    }

    /// Degree of the expanded term `i`, without expanding it.
    pub fn term_degree(&self, i: usize) -> BigUint {
        self.rows[i]
            .exponents
            .iter()
            .zip(&self.bases)
            .filter(|(e, _)| !e.is_zero())
            .map(|(e, f)| e * f.degree_biguint().cloned().unwrap_or_default())
            .sum()
    }

    /// Expands `prod_j f_j^(alpha_{i,j})` for term `i`.
    pub fn expand_term(&self, i: usize, budget: &ExpansionBudget) -> Result<SparsePoly> {
        let deg = self.term_degree(i);
        if deg > BigUint::from(budget.max_degree) {
            return Err(Error::ExpansionTooLarge(format!(
                "term {} has degree {deg}, budget is {}",
                i + 1,
                budget.max_degree
            )));
        }
        let mut acc = SparsePoly::one();
        for (f, e) in self.bases.iter().zip(&self.rows[i].exponents) {
            if e.is_zero() {
                continue;
            }
            // bounded by the degree check unless f is constant
            let e = e.to_u64().ok_or_else(|| Error::ExponentTooLarge(e.to_string()))?;
            acc = &acc * &f.pow(e);
            check_sparsity(&acc, budget)?;
        }
        Ok(acc)
    }

    /// The family `g_i = prod_j f_j^(alpha_{i,j})`, expanded.
    pub fn expand_family(&self, budget: &ExpansionBudget) -> Result<Vec<SparsePoly>> {
        (0..self.k()).map(|i| self.expand_term(i, budget)).collect()
    }

    /// Fully expanded `sum_i a_i g_i`.
    pub fn expand(&self, budget: &ExpansionBudget) -> Result<SparsePoly> {
        let mut acc = SparsePoly::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc = &acc + &self.expand_term(i, budget)?.scale(a);
            check_sparsity(&acc, budget)?;
        }
        Ok(acc)
    }

    /// Value at an integer point, computed from the base values without
    /// expanding anything.
    pub fn eval_at_integer(&self, x: &BigInt) -> Result<Coefficient> {
        let values: Vec<Coefficient> = self.bases.iter().map(|f| f.eval_at_integer(x)).collect();
        let mut acc = Coefficient::zero();
        for (a, row) in self.coeffs.iter().zip(&self.rows) {
            if a.is_zero() {
                continue;
            }
            let mut term = a.clone();
            for (v, e) in values.iter().zip(&row.exponents) {
                term *= checked_pow(v, e)?;
                if term.is_zero() {
                    break;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Instance file text. Bases in index order, terms in stored order.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).instance()
    }
}

fn check_sparsity(p: &SparsePoly, budget: &ExpansionBudget) -> Result<()> {
    if p.sparsity() > budget.max_sparsity {
        return Err(Error::ExpansionTooLarge(format!(
            "intermediate sparsity {} exceeds budget {}",
            p.sparsity(),
            budget.max_sparsity
        )));
    }
    Ok(())
}

fn checked_pow(v: &Coefficient, e: &BigUint) -> Result<Coefficient> {
    let trivial = v.is_zero() || v.abs().is_one();
    if !trivial && e.to_u32().is_none() {
        return Err(Error::ExponentTooLarge(e.to_string()));
    }
    Ok(pow_biguint(v, e))
}

impl fmt::Display for SpsInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bases {}", self.m())?;
        for (j, b) in self.bases.iter().enumerate() {
            writeln!(f, "f{}: {b}", j + 1)?;
        }
        writeln!(f, "terms {}", self.k())?;
        for (a, row) in self.coeffs.iter().zip(&self.rows) {
            write!(f, "{a} :")?;
            for (j, e) in row.exponents.iter().enumerate() {
                if !e.is_zero() {
                    write!(f, " f{}^{e}", j + 1)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for SpsInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpsInstance::parse(s)
    }
}

/// One significant line with its 1-based number.
struct Line<'a> {
    number: usize,
    text: &'a str,
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line: &Line<'a>) -> Self {
        Cursor {
            line: line.number,
            text: line.text,
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, msg)
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::parse(self.line, pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(word) {
            self.pos += word.len();
            Ok(())
        } else {
            Err(self.err(format!("expected '{word}'")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.text[start..self.pos])
    }

    fn natural(&mut self, what: &str) -> Result<BigUint> {
        self.skip_ws();
        if self.peek() == Some('-') {
            return Err(self.err(format!("negative {what}")));
        }
        let d = self
            .digits()
            .ok_or_else(|| self.err(format!("expected {what}")))?;
        // digits only, so this parse cannot fail
        Ok(d.parse().unwrap())
    }

    fn small(&mut self, what: &str) -> Result<usize> {
        let start = self.pos;
        let n = self.natural(what)?;
        n.to_usize()
            .filter(|&n| n <= 1 << 24)
            .ok_or_else(|| self.err_at(start, format!("{what} {n} is too large")))
    }

    /// Unsigned rational `p` or `p/q`.
    fn unsigned_rational(&mut self) -> Result<BigRational> {
        self.skip_ws();
        let numer: BigInt = self
            .digits()
            .ok_or_else(|| self.err("expected a number"))?
            .parse()
            .unwrap();
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let denom: BigInt = self
                .digits()
                .ok_or_else(|| self.err("expected a denominator"))?
                .parse()
                .unwrap();
            if denom.is_zero() {
                return Err(self.err_at(at, "zero denominator"));
            }
            return Ok(BigRational::new(numer, denom));
        }
        Ok(BigRational::from_integer(numer))
    }

    fn signed_rational(&mut self) -> Result<BigRational> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let r = self.unsigned_rational()?;
        Ok(if neg { -r } else { r })
    }

    fn base_index(&mut self, m: usize) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        self.keyword("f")?;
        let j = self.small("base index")?;
        if j == 0 || j > m {
            return Err(self.err_at(start, format!("base index f{j} outside f1..f{m}")));
        }
        Ok(j - 1)
    }

    /// Monomial body after its sign: `[c][*]x[^e]` or `c`.
    fn monomial(&mut self) -> Result<(BigUint, Coefficient)> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.unsigned_rational()?;
            if !self.eat('*') {
                self.skip_ws();
                if self.peek() != Some('x') {
                    return Ok((BigUint::zero(), c));
                }
            }
            c
        } else {
            Coefficient::one()
        };
        self.keyword("x")?;
        let exp = if self.eat('^') {
            self.natural("exponent")?
        } else {
            BigUint::one()
        };
        Ok((exp, coeff))
    }

    fn polynomial(&mut self) -> Result<SparsePoly> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            if self.at_end() {
                if first {
                    return Err(self.err("expected a polynomial"));
                }
                break;
            }
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(self.err("expected '+' or '-'"));
            };
            let (e, c) = self.monomial()?;
            terms.push((e, if neg { -c } else { c }));
            first = false;
        }
        // from_terms adds coefficients of repeated exponents
        Ok(SparsePoly::from_terms(terms))
    }
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    next: usize,
    last_line: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                last_line = i + 1;
                let body = raw.split('#').next().unwrap_or("");
                (!body.trim().is_empty()).then_some(Line {
                    number: i + 1,
                    text: body,
                })
            })
            .collect();
        Parser {
            lines,
            next: 0,
            last_line,
        }
    }

    fn line(&mut self, what: &str) -> Result<Cursor<'a>> {
        let Some(line) = self.lines.get(self.next) else {
            return Err(Error::parse(self.last_line + 1, 1, format!("unexpected end of input, expected {what}")));
        };
        self.next += 1;
        Ok(Cursor::new(line))
    }

    fn header(&mut self, word: &str) -> Result<usize> {
        let mut c = self.line(&format!("'{word} <count>'"))?;
        c.keyword(word)?;
        let n = c.small("count")?;
        if !c.at_end() {
            return Err(c.err("trailing input"));
        }
        if n == 0 {
            return Err(c.err(format!("{word} count must be positive")));
        }
        Ok(n)
    }

    fn instance(mut self) -> Result<SpsInstance> {
        let m = self.header("bases")?;
        let mut bases: Vec<Option<SparsePoly>> = vec![None; m];
        for _ in 0..m {
            let mut c = self.line("a base line 'f<j>: <polynomial>'")?;
            let start = c.pos;
            let j = c.base_index(m)?;
            if bases[j].is_some() {
                return Err(c.err_at(start, format!("base f{} defined twice", j + 1)));
            }
            c.expect(':')?;
            bases[j] = Some(c.polynomial()?);
        }
        // m distinct indices in 1..=m were read, so every slot is filled
        let bases: Vec<SparsePoly> = bases.into_iter().map(Option::unwrap).collect();

        let k = self.header("terms")?;
        let mut coeffs = Vec::with_capacity(k);
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let mut c = self.line("a term line '<a> : f<j>^<e> ...'")?;
            coeffs.push(c.signed_rational()?);
            c.expect(':')?;
            let mut row = vec![None; m];
            while !c.at_end() {
                let start = c.pos;
                let j = c.base_index(m)?;
                let e = if c.eat('^') { c.natural("exponent")? } else { BigUint::one() };
                if row[j].is_some() {
                    return Err(c.err_at(start, format!("base f{} repeated in a term", j + 1)));
                }
                if bases[j].is_zero() && !e.is_zero() {
                    return Err(c.err_at(start, format!("zero base f{} raised to a positive power", j + 1)));
                }
                row[j] = Some(e);
            }
            rows.push(PowerProduct::new(row.into_iter().map(Option::unwrap_or_default).collect()));
        }
        if let Some(extra) = self.lines.get(self.next) {
            return Err(Error::parse(extra.number, 1, format!("more than {k} term lines")));
        }
        SpsInstance::new(bases, coeffs, rows)
    }
}

/// How [`random_instance`] makes an identically zero instance.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ForcedZero {
    #[default]
    Off,
    /// Terms come in groups that cancel syntactically: a term and its
    /// negated copy, or `a g + b g - (a + b) g`.
    NegatedDuplicate,
    /// The last base is the sum of the first two (on a shared support), and
    /// terms come in triples `a R f_1 + a R f_2 - a R f_m` with a common
    /// power product `R`, padded with negated duplicates. The cancellation
    /// is only visible after expansion.
    HiddenRelation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    pub k: usize,
    pub m: usize,
    /// Largest base sparsity.
    pub t: usize,
    /// Largest base degree.
    pub d: u64,
    pub alpha_max: u64,
    /// Coefficients are drawn from `[-coeff_max, coeff_max] \ {0}`.
    pub coeff_max: u64,
    pub seed: u64,
    pub forced_zero: ForcedZero,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams {
            k: 2,
            m: 1,
            t: 2,
            d: 2,
            alpha_max: 3,
            coeff_max: 5,
            seed: 0,
            forced_zero: ForcedZero::Off,
        }
    }
}

fn nonzero_int(rng: &mut ChaCha8Rng, max: u64) -> Coefficient {
    let max = max.max(1) as i64;
    let mag = rng.gen_range(1..=max);
    let v = if rng.gen_bool(0.5) { mag } else { -mag };
    Coefficient::from_integer(BigInt::from(v))
}

fn random_support(rng: &mut ChaCha8Rng, t: usize, d: u64) -> Vec<u64> {
    let cap = usize::try_from(d.saturating_add(1)).unwrap_or(usize::MAX);
    let size = rng.gen_range(1..=t.max(1).min(cap));
    let mut support: Vec<u64> = Vec::with_capacity(size);
    while support.len() < size {
        let e = rng.gen_range(0..=d);
        if !support.contains(&e) {
            support.push(e);
        }
    }
    support
}

fn poly_on(rng: &mut ChaCha8Rng, support: &[u64], coeff_max: u64) -> SparsePoly {
    SparsePoly::from_terms(
        support
            .iter()
            .map(|&e| (BigUint::from(e), nonzero_int(rng, coeff_max))),
    )
}

fn random_row(rng: &mut ChaCha8Rng, m: usize, alpha_max: u64) -> Vec<u64> {
    (0..m).map(|_| rng.gen_range(0..=alpha_max)).collect()
}

/// Deterministic random instance. Forced-zero modes need `k >= 2` (and
/// `m >= 3` for [`ForcedZero::HiddenRelation`]); smaller values are raised.
pub fn random_instance(params: &InstanceParams) -> SpsInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut k = params.k.max(1);
    let mut m = params.m.max(1);
    match params.forced_zero {
        ForcedZero::Off => {}
        ForcedZero::NegatedDuplicate => k = k.max(2),
        ForcedZero::HiddenRelation => {
            k = k.max(2);
            m = m.max(3);
        }
    }

    let mut bases: Vec<SparsePoly> = (0..m)
        .map(|_| {
            let support = random_support(&mut rng, params.t, params.d);
            poly_on(&mut rng, &support, params.coeff_max)
        })
        .collect();
    if params.forced_zero == ForcedZero::HiddenRelation {
        let support = random_support(&mut rng, params.t, params.d);
        loop {
            let f1 = poly_on(&mut rng, &support, params.coeff_max);
            let f2 = poly_on(&mut rng, &support, params.coeff_max);
            let sum = &f1 + &f2;
            if !sum.is_zero() {
                bases[0] = f1;
                bases[1] = f2;
                bases[m - 1] = sum;
                break;
            }
        }
    }

    let mut terms: Vec<(Coefficient, Vec<u64>)> = Vec::with_capacity(k);
    match params.forced_zero {
        ForcedZero::Off => {
            for _ in 0..k {
                let a = nonzero_int(&mut rng, params.coeff_max);
                terms.push((a, random_row(&mut rng, m, params.alpha_max)));
            }
        }
        mode => {
            let mut left = k;
            while left > 0 {
                let triple = left == 3 || left >= 5;
                let a = nonzero_int(&mut rng, params.coeff_max);
                let row = random_row(&mut rng, m, params.alpha_max);
                if !triple {
                    terms.push((a.clone(), row.clone()));
                    terms.push((-a, row));
                    left -= 2;
                    continue;
                }
                if mode == ForcedZero::HiddenRelation {
                    let common = random_row(&mut rng, m, params.alpha_max.max(1) - 1);
                    for (j, sign) in [(0, 1), (1, 1), (m - 1, -1)] {
                        let mut r = common.clone();
                        r[j] += 1;
                        terms.push((&a * Coefficient::from_integer(BigInt::from(sign)), r));
                    }
                } else {
                    let mut b = nonzero_int(&mut rng, params.coeff_max);
                    if (&a + &b).is_zero() {
                        b = &b + &b;
                    }
                    let c = -(&a + &b);
                    for coeff in [a, b, c] {
                        terms.push((coeff, row.clone()));
                    }
                }
                left -= 3;
            }
            terms.shuffle(&mut rng);
        }
    }

    let (coeffs, rows): (Vec<_>, Vec<_>) = terms
        .into_iter()
        .map(|(a, r)| (a, PowerProduct::from_u64(&r)))
        .unzip();
    // generated bases are nonzero and dimensions agree
    SpsInstance::new(bases, coeffs, rows).unwrap()
}

/// The tight family `g = h(f)` with
/// `h = x prod_{i<k} (x^2 - i^2)` and `f = k prod_{i<=n} (x - 2i)`,
/// `n = 1 + ceil((p+1)/2)`, together with its predicted root statistics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalInstance {
    pub instance: SpsInstance,
    pub k: usize,
    pub p: usize,
    /// `n`, the number of roots of `f`.
    pub base_roots: usize,
    /// Distinct real roots of `g`: `(2k-1) n`.
    pub predicted_roots: usize,
    /// Size of the set where some prefix Wronskian vanishes: `2n - 1`.
    pub predicted_upsilon: usize,
}

/// `x prod_{i=1}^{k-1} (x^2 - i^2)`, expanded.
pub fn odd_outer_polynomial(k: usize) -> SparsePoly {
    let x = SparsePoly::x();
    let mut h = x.clone();
    for i in 1..k {
        let sq = (i * i) as i64;
        h = &h * &SparsePoly::from_i64(&[(-sq, 0), (1, 2)]);
    }
    h
}

pub fn optimal_instance(k: usize, p: usize) -> Result<OptimalInstance> {
    if k < 2 || p < 1 {
        return Err(Error::InvalidArgument(format!(
            "optimal instance needs k >= 2 and p >= 1, got k = {k}, p = {p}"
        )));
    }
    let n = 1 + (p + 2) / 2;
    let mut f = SparsePoly::constant(Coefficient::from_integer(BigInt::from(k)));
    for i in 1..=n {
        f = &f * &SparsePoly::from_i64(&[(-2 * i as i64, 0), (1, 1)]);
    }
    let h = odd_outer_polynomial(k);
    let (coeffs, rows): (Vec<_>, Vec<_>) = h
        .terms()
        .map(|(e, c)| (c.clone(), PowerProduct::new(vec![e.clone()])))
        .unzip();
    let instance = SpsInstance::new(vec![f], coeffs, rows)?;
    Ok(OptimalInstance {
        instance,
        k,
        p,
        base_roots: n,
        predicted_roots: (2 * k - 1) * n,
        predicted_upsilon: 2 * n - 1,
    })
}

/// `sum_i a_i x^(alpha_i)` written over the single base `x`.
pub fn descartes_instance(terms: &[(Coefficient, BigUint)]) -> Result<SpsInstance> {
    let (coeffs, rows): (Vec<_>, Vec<_>) = terms
        .iter()
        .map(|(a, e)| (a.clone(), PowerProduct::new(vec![e.clone()])))
        .unzip();
    SpsInstance::new(vec![SparsePoly::x()], coeffs, rows)
}

/// Random `k`-sparse polynomial as a single-base instance with distinct
/// exponents in `0..=max_exp` and nonzero coefficients.
pub fn random_descartes(k: usize, max_exp: u64, coeff_max: u64, seed: u64) -> SpsInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let support = random_support(&mut rng, k.max(1), max_exp);
    let terms: Vec<(Coefficient, BigUint)> = support
        .iter()
        .map(|&e| (nonzero_int(&mut rng, coeff_max), BigUint::from(e)))
        .collect();
    // one base, rows of length one
    descartes_instance(&terms).unwrap()
}
