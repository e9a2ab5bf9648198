//! Dense integer polynomials used internally for Euclidean algorithms and
//! sign evaluation. Index `i` of the coefficient vector holds the
//! coefficient of `x^i`; trailing zeros are never stored.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// Largest degree converted to dense form.
pub const DENSE_DEGREE_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DensePoly {
    coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Splits a rational polynomial into `content * primitive`, where the
    /// primitive part has coprime integer coefficients and the content is
    /// a positive rational.
    pub fn from_sparse(p: &SparsePoly) -> Result<(BigRational, DensePoly)> {
        let Some(deg) = p.degree_biguint() else {
            return Ok((BigRational::one(), DensePoly::default()));
        };
        let deg = deg
            .to_usize()
            .filter(|d| *d <= DENSE_DEGREE_LIMIT)
            .ok_or_else(|| Error::DegreeTooLarge(deg.clone()))?;
        let mut denom_lcm = BigInt::one();
        for (_, c) in p.terms() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in p.terms() {
            // exponents are bounded by `deg`, checked above
            let i = e.to_usize().unwrap();
            coeffs[i] = c.numer() * (&denom_lcm / c.denom());
        }
        let dense = DensePoly::new(coeffs);
        let content = dense.content();
        let prim = dense.div_scalar(&content);
        Ok((BigRational::new(content, denom_lcm), prim))
    }

    pub fn to_sparse(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (BigUint::from(i), BigRational::from_integer(c.clone()))),
        )
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_scalar(&self, d: &BigInt) -> DensePoly {
        if d.is_zero() || d.is_one() {
            return self.clone();
        }
        DensePoly::new(self.coeffs.iter().map(|c| c / d).collect())
    }

    pub fn neg(&self) -> DensePoly {
        DensePoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> DensePoly {
        let p = self.div_scalar(&self.content());
        match p.lc() {
            Some(lc) if lc.is_negative() => p.neg(),
            _ => p,
        }
    }

    pub fn derivative(&self) -> DensePoly {
        DensePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &DensePoly) -> Result<DensePoly> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lb = b.lc().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else {
            return Ok(DensePoly::default());
        };
        if da < db {
            return Ok(self.clone());
        }
        let mut steps = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = top - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            steps -= 1;
        }
        if steps > 0 {
            let f = num_traits::pow(lb, steps);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        Ok(DensePoly::new(r))
    }

    /// Remainder of `a` by `b` up to a positive factor, so signs are kept.
    pub fn sign_preserving_rem(&self, b: &DensePoly) -> Result<DensePoly> {
        let r = self.pseudo_rem(b)?;
        let da = self.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        let flips = b.lc().is_some_and(|l| l.is_negative()) && da >= db && (da - db + 1) % 2 == 1;
        let r = if flips { r.neg() } else { r };
        Ok(r.div_scalar(&r.content()))
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(a: &DensePoly, b: &DensePoly) -> DensePoly {
        let mut x = a.primitive_positive();
        let mut y = b.primitive_positive();
        if x.degree() < y.degree() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            // y nonzero, so the pseudo-remainder is defined
            let r = x.pseudo_rem(&y).unwrap();
            x = y;
            y = r.primitive_positive();
        }
        x.primitive_positive()
    }

    /// Exact quotient over the integers, `None` if `b` does not divide `a`.
    pub fn exact_div(&self, b: &DensePoly) -> Option<DensePoly> {
        let db = b.degree()?;
        let lb = b.lc().unwrap();
        let Some(da) = self.degree() else {
            return Some(DensePoly::default());
        };
        if da < db {
            return None;
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &qc * bc;
            }
            q[k] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(DensePoly::new(q))
    }

    /// Sign of the polynomial at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        // Homogenized Horner: den^deg * p(num/den), den > 0.
        let num = x.numer();
        let den = x.denom();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            acc = acc * num + c * &den_pow;
            if i > 0 {
                den_pow *= den;
            }
        }
        acc.sign_ordering()
    }

    /// Sign as `x -> +inf` (`positive = true`) or `x -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match (self.lc(), self.degree()) {
            (Some(lc), Some(d)) => {
                let s = lc.sign_ordering();
                if !positive && d % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
            _ => Ordering::Equal,
        }
    }

    /// Cauchy bound: every real root lies strictly inside `(-B, B)`.
    pub fn cauchy_bound(&self) -> BigRational {
        let Some(lc) = self.lc() else {
            return BigRational::one();
        };
        let lc = lc.abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        // 1 + max|a_i / a_n| bounds |root|; one more keeps roots strictly inside
        BigRational::from_integer(BigInt::from(2)) + BigRational::new(max, lc)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(c: &[i64]) -> DensePoly {
        DensePoly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = d(&[-2, 1, 1]);
        let b = d(&[3, -4, 1]);
        assert_eq!(DensePoly::gcd(&a, &b), d(&[-1, 1]));
    }

    #[test]
    fn exact_div_detects_remainder() {
        let a = d(&[-1, 0, 1]);
        assert_eq!(a.exact_div(&d(&[1, 1])), Some(d(&[-1, 1])));
        assert_eq!(a.exact_div(&d(&[2, 1])), None);
    }

    #[test]
    fn sign_at_rational_point() {
        let p = d(&[-2, 0, 1]);
        assert_eq!(p.sign_at(&BigRational::new(3.into(), 2.into())), Ordering::Greater);
        assert_eq!(p.sign_at(&BigRational::new(1.into(), 1.into())), Ordering::Less);
        assert_eq!(p.sign_at_infinity(false), Ordering::Greater);
        assert_eq!(d(&[0, -1]).sign_at_infinity(false), Ordering::Greater);
    }

    #[test]
    fn sign_preserving_rem_keeps_sign() {
        // x^2 + 1 rem (-2x + 1): exact remainder is 5/4 > 0
        let r = d(&[1, 0, 1]).sign_preserving_rem(&d(&[1, -2])).unwrap();
        assert_eq!(r, d(&[1]));
    }
}
