//! Exact distinct-real-root counting and isolation with Sturm sequences.
//!
//! Every query first replaces the input by its squarefree part, so counts
//! are of *distinct* roots.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::poly::{dense_squarefree, SparsePoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    Finite(BigRational),
    PosInfinity,
}

impl Endpoint {
    fn cmp_to(&self, other: &Endpoint) -> Ordering {
        use Endpoint::*;
        match (self, other) {
            (NegInfinity, NegInfinity) | (PosInfinity, PosInfinity) => Ordering::Equal,
            (NegInfinity, _) | (_, PosInfinity) => Ordering::Less,
            (_, NegInfinity) | (PosInfinity, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Endpoint::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => write!(f, "-inf"),
            Endpoint::PosInfinity => write!(f, "+inf"),
            Endpoint::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// Interval with rational or infinite endpoints. Infinite endpoints are
/// always treated as open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl RationalInterval {
    pub fn open(lo: Endpoint, hi: Endpoint) -> Self {
        RationalInterval {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn open_finite(lo: BigRational, hi: BigRational) -> Self {
        RationalInterval::open(Endpoint::Finite(lo), Endpoint::Finite(hi))
    }

    pub fn closed(lo: BigRational, hi: BigRational) -> Self {
        RationalInterval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::Finite(hi),
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval::closed(x.clone(), x)
    }

    pub fn real_line() -> Self {
        RationalInterval::open(Endpoint::NegInfinity, Endpoint::PosInfinity)
    }

    /// `(0, +inf)`.
    pub fn positive_axis() -> Self {
        RationalInterval::open(Endpoint::Finite(BigRational::zero()), Endpoint::PosInfinity)
    }

    /// `(-inf, 0)`.
    pub fn negative_axis() -> Self {
        RationalInterval::open(Endpoint::NegInfinity, Endpoint::Finite(BigRational::zero()))
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lo, &self.hi), (Endpoint::Finite(a), Endpoint::Finite(b)) if a == b)
    }

    /// Midpoint of a bounded interval.
    pub fn midpoint(&self) -> Option<BigRational> {
        match (&self.lo, &self.hi) {
            (Endpoint::Finite(a), Endpoint::Finite(b)) => {
                Some((a + b) / BigRational::from_integer(BigInt::from(2)))
            }
            _ => None,
        }
    }

    /// Whether `x` lies in the interval.
    pub fn contains(&self, x: &BigRational) -> bool {
        let p = Endpoint::Finite(x.clone());
        let lo_ok = match self.lo.cmp_to(&p) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let hi_ok = match p.cmp_to(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo);
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// Sturm sequence of a squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    seq: Vec<DensePoly>,
}

impl SturmSequence {
    /// Builds the sequence of the squarefree part of `p`.
    pub fn new(p: &SparsePoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InfinitelyManyRoots);
        }
        let (_, dense) = DensePoly::from_sparse(p)?;
        Ok(SturmSequence::from_squarefree(dense_squarefree(&dense)))
    }

    fn from_squarefree(p: DensePoly) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            // divisor is nonzero, checked above
            let r = seq[n - 2].sign_preserving_rem(&seq[n - 1]).unwrap();
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        SturmSequence { seq }
    }

    pub fn squarefree(&self) -> &DensePoly {
        &self.seq[0]
    }

    fn variations(&self, x: &Endpoint) -> usize {
        let signs = self.seq.iter().map(|q| match x {
            Endpoint::NegInfinity => q.sign_at_infinity(false),
            Endpoint::PosInfinity => q.sign_at_infinity(true),
            Endpoint::Finite(r) => q.sign_at(r),
        });
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn is_root(&self, x: &Endpoint) -> bool {
        x.finite()
            .is_some_and(|r| self.seq[0].sign_at(r) == Ordering::Equal)
    }

    /// Distinct roots in the interval, respecting the endpoint flags.
    pub fn count_in(&self, iv: &RationalInterval) -> usize {
        match iv.lo.cmp_to(&iv.hi) {
            Ordering::Greater => return 0,
            Ordering::Equal => {
                return usize::from(iv.lo_closed && iv.hi_closed && self.is_root(&iv.lo));
            }
            Ordering::Less => {}
        }
        // V(a) - V(b) counts the roots in (a, b]
        let half_open = self.variations(&iv.lo) - self.variations(&iv.hi);
        let mut count = half_open;
        if !iv.hi_closed && self.is_root(&iv.hi) {
            count -= 1;
        }
        if iv.lo_closed && self.is_root(&iv.lo) {
            count += 1;
        }
        count
    }

    pub fn count_all(&self) -> usize {
        self.count_in(&RationalInterval::real_line())
    }

    /// Isolating intervals in increasing order: open intervals with
    /// rational endpoints that are not roots, or exact points.
    pub fn isolate(&self) -> Vec<RationalInterval> {
        let bound = self.seq[0].cauchy_bound();
        let mut out = Vec::new();
        let mut stack = vec![RationalInterval::open_finite(-bound.clone(), bound)];
        while let Some(iv) = stack.pop() {
            match self.count_in(&iv) {
                0 => {}
                1 => out.push(iv),
                _ => {
                    // bounded by construction
                    let mid = iv.midpoint().unwrap();
                    let left = RationalInterval::open_finite(iv.lo.finite().unwrap().clone(), mid.clone());
                    let right = RationalInterval::open_finite(mid.clone(), iv.hi.finite().unwrap().clone());
                    // push right first so the left half is processed first
                    stack.push(right);
                    if self.is_root(&Endpoint::Finite(mid.clone())) {
                        stack.push(RationalInterval::point(mid));
                    }
                    stack.push(left);
                }
            }
        }
        out
    }

    /// Splits an isolating interval in half and returns the half holding
    /// the root (an exact point if the midpoint is the root).
    pub fn refine(&self, iv: &RationalInterval) -> RationalInterval {
        let Some(mid) = iv.midpoint().filter(|_| !iv.is_point()) else {
            return iv.clone();
        };
        if self.is_root(&Endpoint::Finite(mid.clone())) {
            return RationalInterval::point(mid);
        }
        let left = RationalInterval {
            hi: Endpoint::Finite(mid.clone()),
            hi_closed: false,
            ..iv.clone()
        };
        if self.count_in(&left) > 0 {
            left
        } else {
            RationalInterval {
                lo: Endpoint::Finite(mid),
                lo_closed: false,
                ..iv.clone()
            }
        }
    }
}

/// Number of distinct real roots.
pub fn count_real_roots(p: &SparsePoly) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count_all())
}

/// Number of distinct real roots in `iv`.
pub fn count_roots_in(p: &SparsePoly, iv: &RationalInterval) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count_in(iv))
}

/// One isolating interval per distinct real root, in increasing order.
pub fn isolate_roots(p: &SparsePoly) -> Result<Vec<RationalInterval>> {
    Ok(SturmSequence::new(p)?.isolate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn one_rat() -> BigRational {
        BigRational::one()
    }

    fn p(c: &[i64]) -> SparsePoly {
        SparsePoly::from_coeffs(c)
    }

    #[test]
    fn global_counts() {
        assert_eq!(count_real_roots(&p(&[-2, 0, 1])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        // x (x^2 - 1)(x^2 - 4) = x^5 - 5x^3 + 4x
        assert_eq!(count_real_roots(&p(&[0, 4, 0, -5, 0, 1])).unwrap(), 5);
        assert_eq!(count_real_roots(&p(&[1, -2, 1])).unwrap(), 1);
        assert_eq!(count_real_roots(&p(&[7])).unwrap(), 0);
        assert_eq!(count_real_roots(&SparsePoly::zero()), Err(Error::InfinitelyManyRoots));
    }

    #[test]
    fn interval_counts() {
        let q = p(&[-2, 0, 1]);
        assert_eq!(count_roots_in(&q, &RationalInterval::positive_axis()).unwrap(), 1);
        let cubic = p(&[0, -1, 0, 1]);
        let iv = RationalInterval::open_finite(rat(-1, 2), rat(1, 2));
        assert_eq!(count_roots_in(&cubic, &iv).unwrap(), 1);
        let far = RationalInterval::open(Endpoint::Finite(rat(10, 1)), Endpoint::PosInfinity);
        assert_eq!(count_roots_in(&cubic, &far).unwrap(), 0);
        // endpoints that are roots
        let open = RationalInterval::open_finite(rat(-1, 1), rat(1, 1));
        assert_eq!(count_roots_in(&cubic, &open).unwrap(), 1);
        let closed = RationalInterval::closed(rat(-1, 1), rat(1, 1));
        assert_eq!(count_roots_in(&cubic, &closed).unwrap(), 3);
        assert_eq!(count_roots_in(&cubic, &RationalInterval::point(rat(1, 1))).unwrap(), 1);
        assert_eq!(count_roots_in(&cubic, &RationalInterval::point(rat(2, 1))).unwrap(), 0);
    }

    #[test]
    fn isolation() {
        let ivs = isolate_roots(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&rat(-7, 5)) || ivs[0].hi.finite().unwrap() < &rat(0, 1));
        let ivs = isolate_roots(&p(&[1, -2, 1])).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&one_rat()));
        let ivs = isolate_roots(&p(&[0, 4, 0, -5, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 5);
        assert!(ivs.iter().any(|iv| iv.contains(&rat(0, 1))));
    }

    #[test]
    fn refinement_keeps_the_root() {
        let q = p(&[-2, 0, 1]);
        let s = SturmSequence::new(&q).unwrap();
        for iv in s.isolate() {
            let mut cur = iv;
            for _ in 0..10 {
                cur = s.refine(&cur);
                assert_eq!(s.count_in(&cur), 1);
            }
        }
    }
}
