//! Exact sparse univariate polynomials over the rationals.
//!
//! A [`SparsePoly`] is a finite map from exponent to nonzero coefficient,
//! kept in increasing exponent order. Exponents are arbitrary precision so
//! that powers like `f^(2^40)` can be *described*; the algorithms in this
//! crate never expand such powers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dense::DensePoly;
use crate::error::{Error, Result};

/// Exact coefficient. `BigRational` keeps itself reduced with a positive
/// denominator, so equality is structural.
pub type Coefficient = BigRational;

/// Degree of a polynomial; the zero polynomial has degree `MinusInfinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(BigUint),
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    terms: BTreeMap<BigUint, Coefficient>,
}

pub(crate) fn int(v: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(v))
}

/// `base^exp` for an arbitrary-precision exponent.
///
/// Panics if the exponent does not fit in `usize` and the base is not
/// 0 or +-1: such a value could not be stored anyway.
pub fn pow_biguint(base: &Coefficient, exp: &BigUint) -> Coefficient {
    if exp.is_zero() {
        return Coefficient::one();
    }
    if base.is_zero() || base.is_one() {
        return base.clone();
    }
    if *base == -Coefficient::one() {
        return if exp.bit(0) { base.clone() } else { Coefficient::one() };
    }
    let e = exp
        .to_usize()
        .unwrap_or_else(|| panic!("exponent {exp} too large to materialize"));
    num_traits::pow(base.clone(), e)
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(Coefficient::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        SparsePoly::monomial(Coefficient::one(), BigUint::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        SparsePoly::monomial(c, BigUint::zero())
    }

    pub fn monomial(c: Coefficient, e: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        SparsePoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and zero results dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (BigUint, Coefficient)>) -> Self {
        let mut map: BTreeMap<BigUint, Coefficient> = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut map, e, c);
        }
        SparsePoly { terms: map }
    }

    /// Convenience constructor from small `(coefficient, exponent)` pairs.
    pub fn from_i64(terms: &[(i64, u64)]) -> Self {
        SparsePoly::from_terms(terms.iter().map(|&(c, e)| (BigUint::from(e), int(c))))
    }

    /// Dense constructor: `coeffs[i]` multiplies `x^i`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        SparsePoly::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (BigUint::from(i), int(c))),
        )
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BigUint, &Coefficient)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &BigUint) -> Coefficient {
        self.terms.get(e).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&BigUint::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn sparsity(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            Some(e) => Degree::Finite(e.clone()),
            None => Degree::MinusInfinity,
        }
    }

    pub(crate) fn degree_biguint(&self) -> Option<&BigUint> {
        self.terms.keys().next_back()
    }

    /// Degree as `u64`, `None` for the zero polynomial. Panics on
    /// exponents beyond `u64`.
    pub fn degree_u64(&self) -> Option<u64> {
        self.degree_biguint()
            .map(|d| d.to_u64().expect("degree exceeds u64"))
    }

    pub fn leading_coefficient(&self) -> Option<&Coefficient> {
        self.terms.values().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    pub fn scale(&self, c: &Coefficient) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &BigUint) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e + shift, v.clone()))
                .collect(),
        }
    }

    fn mul_ref(&self, other: &SparsePoly) -> SparsePoly {
        if self.is_zero() || other.is_zero() {
            return SparsePoly::zero();
        }
        let mut map = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                accumulate(&mut map, ea + eb, ca * cb);
            }
        }
        SparsePoly { terms: map }
    }

    /// Fully expanded product of a sequence of polynomials.
    pub fn product<'a>(ps: impl IntoIterator<Item = &'a SparsePoly>) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for p in ps {
            if p.is_zero() {
                return SparsePoly::zero();
            }
            acc = acc.mul_ref(p);
        }
        acc
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u64) -> SparsePoly {
        let mut result = SparsePoly::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_ref(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_ref(&base);
            }
        }
        result
    }

    /// Formal derivative of the given order.
    pub fn derivative(&self, order: u64) -> SparsePoly {
        if order == 0 {
            return self.clone();
        }
        let order_big = BigUint::from(order);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if *e < order_big {
                continue;
            }
            let mut factor = BigUint::one();
            let mut k = e.clone();
            for _ in 0..order {
                factor *= &k;
                k -= 1u32;
            }
            terms.insert(k, c * BigRational::from_integer(BigInt::from(factor)));
        }
        SparsePoly { terms }
    }

    pub fn eval(&self, x: &Coefficient) -> Coefficient {
        // Horner over the sparse support, highest exponent first.
        let mut acc = Coefficient::zero();
        let mut prev: Option<&BigUint> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= pow_biguint(x, &(p - e));
            }
            acc += c;
            prev = Some(e);
        }
        if let Some(p) = prev {
            acc *= pow_biguint(x, p);
        }
        acc
    }

    pub fn eval_at_integer(&self, n: &BigInt) -> Coefficient {
        self.eval(&BigRational::from_integer(n.clone()))
    }

    /// Number of sign changes in the coefficient sequence ordered by
    /// increasing exponent. Bounds the number of positive roots.
    pub fn descartes_positive_bound(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let changes = self
            .terms
            .values()
            .map(|c| c.is_positive())
            .collect::<Vec<_>>()
            .windows(2)
            .filter(|w| w[0] != w[1])
            .count();
        Ok(changes)
    }

    /// Same as [`descartes_positive_bound`](Self::descartes_positive_bound)
    /// applied to `p(-x)`.
    pub fn descartes_negative_bound(&self) -> Result<usize> {
        let reflected = SparsePoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), if e.bit(0) { -c } else { c.clone() }))
                .collect(),
        };
        reflected.descartes_positive_bound()
    }

    /// `p / gcd(p, p')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<SparsePoly> {
        if self.is_zero() {
            return Err(Error::UndefinedRadical);
        }
        let (_, dense) = DensePoly::from_sparse(self)?;
        Ok(dense_squarefree(&dense).to_sparse())
    }

    /// Primitive integer associate with positive leading coefficient.
    pub fn primitive_part(&self) -> Result<SparsePoly> {
        let (_, dense) = DensePoly::from_sparse(self)?;
        Ok(dense.primitive_positive().to_sparse())
    }

    /// Monic-free gcd: primitive integer polynomial with positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &SparsePoly) -> Result<SparsePoly> {
        let (_, a) = DensePoly::from_sparse(self)?;
        let (_, b) = DensePoly::from_sparse(other)?;
        Ok(DensePoly::gcd(&a, &b).to_sparse())
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &SparsePoly) -> Result<(SparsePoly, SparsePoly)> {
        let (dd, dc) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .ok_or(Error::DivisionByZero)?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re < dd {
                break;
            }
            let qe = &re - &dd;
            let qc = &rc / &dc;
            for (e, c) in &divisor.terms {
                accumulate(&mut rem, e + &qe, -(c * &qc));
            }
            quot.insert(qe, qc);
        }
        Ok((SparsePoly { terms: quot }, SparsePoly { terms: rem }))
    }

    /// Exact quotient; `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &SparsePoly) -> Result<Option<SparsePoly>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }
}

pub(crate) fn dense_squarefree(p: &DensePoly) -> DensePoly {
    let g = DensePoly::gcd(p, &p.derivative());
    let prim = p.primitive_positive();
    match g.degree() {
        Some(0) | None => prim,
        // g | p over Q and g is primitive, so the quotient is integral
        _ => prim
            .exact_div(&g)
            .expect("gcd divides its argument")
            .primitive_positive(),
    }
}

fn accumulate(map: &mut BTreeMap<BigUint, Coefficient>, e: BigUint, c: Coefficient) {
    if c.is_zero() {
        return;
    }
    match map.entry(e) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        SparsePoly { terms }
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;

    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        for (e, c) in rhs.terms {
            accumulate(&mut self.terms, e, c);
        }
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut terms, e.clone(), -c);
        }
        SparsePoly { terms }
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: SparsePoly) -> SparsePoly {
        &self - &rhs
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_ref(rhs)
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        self.mul_ref(&rhs)
    }
}

/// Writes the instance-file monomial syntax, e.g. `1*x^0 - 3*x^2`.
impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, _) => write!(f, "{c}*x^{e}")?,
                (_, true) => write!(f, " - {}*x^{e}", -c)?,
                (_, false) => write!(f, " + {c}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> SparsePoly {
        SparsePoly::from_coeffs(c)
    }

    #[test]
    fn add_cancels_and_drops_zero_terms() {
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(&p(&[3, 0, 1]) + &SparsePoly::zero(), p(&[3, 0, 1]));
        assert_eq!(&p(&[1, 0, 1]) + &p(&[0, 0, -1]), p(&[1]));
        assert_eq!((&p(&[1, 0, 1]) + &p(&[0, 0, -1])).sparsity(), 1);
    }

    #[test]
    fn products() {
        assert_eq!(SparsePoly::product([&p(&[1, 1]), &p(&[-1, 1])]), p(&[-1, 0, 1]));
        assert_eq!(SparsePoly::product([&p(&[1, 1]), &p(&[2, 1])]), p(&[2, 3, 1]));
        let three = [p(&[1, 1]), p(&[-2, 0, 0, 1]), p(&[5, 0, 7])];
        assert!(SparsePoly::product(&three).sparsity() <= 8);
        assert_eq!(SparsePoly::product(std::iter::empty()), SparsePoly::one());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p(&[0, 2, 0, 1]).derivative(1), p(&[2, 0, 3]));
        assert_eq!(p(&[7]).derivative(1), SparsePoly::zero());
        assert_eq!(p(&[0, 0, 0, 0, 1]).derivative(2), p(&[0, 0, 12]));
        assert_eq!(p(&[1, 1]).derivative(5), SparsePoly::zero());
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        assert_eq!(p(&[2, -3, 0, 1]).squarefree_part().unwrap(), p(&[-2, 1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).squarefree_part().unwrap(), p(&[0, 1]));
        assert_eq!(p(&[-2, 0, 2]).squarefree_part().unwrap(), p(&[-1, 0, 1]));
        assert_eq!(
            SparsePoly::zero().squarefree_part(),
            Err(Error::UndefinedRadical)
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[-1, 0, 1]).eval_at_integer(&BigInt::from(3)), int(8));
        assert_eq!(p(&[5, 3, 9]).eval_at_integer(&BigInt::zero()), int(5));
        assert_eq!(p(&[1, 1]).pow(5).eval_at_integer(&BigInt::one()), int(32));
        let sparse = SparsePoly::from_i64(&[(1, 0), (-1, 40)]);
        assert_eq!(sparse.eval_at_integer(&BigInt::from(2)), int(1 - (1i64 << 40)));
    }

    #[test]
    fn descartes_sign_changes() {
        assert_eq!(p(&[0, -1, 0, 1]).descartes_positive_bound().unwrap(), 1);
        assert_eq!(p(&[1, 0, 1]).descartes_positive_bound().unwrap(), 0);
        let alternating = SparsePoly::from_i64(&[(1, 0), (-2, 3), (5, 4), (-1, 9), (3, 11)]);
        assert_eq!(alternating.descartes_positive_bound().unwrap(), 4);
        assert_eq!(SparsePoly::zero().descartes_positive_bound(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn degree_markers() {
        assert_eq!(SparsePoly::zero().degree(), Degree::MinusInfinity);
        assert!(Degree::MinusInfinity < Degree::Finite(BigUint::zero()));
        assert_eq!(p(&[0, 0, 3]).degree(), Degree::Finite(BigUint::from(2u32)));
    }

    #[test]
    fn division() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 2])).unwrap();
        assert_eq!(&(&q * &p(&[1, 2])) + &r, p(&[1, 0, 1]));
        assert!(r.is_constant());
        assert_eq!(p(&[1]).div_rem(&SparsePoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_uses_instance_syntax() {
        assert_eq!(p(&[1, 0, -3]).to_string(), "1*x^0 - 3*x^2");
        assert_eq!(SparsePoly::zero().to_string(), "0");
    }
}
