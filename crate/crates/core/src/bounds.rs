//! Real-root bounds for sums of products of powers.
//!
//! The a-priori bounds depend only on the shape `(k, m, t)` or `(k, m, d)`.
//! The certified bounds are computed per instance from the exact prefix
//! Wronskians of an independent subfamily.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::pit::{reduce_to_basis, Reduction};
use crate::poly::{Coefficient, SparsePoly};
use crate::realroots::{count_real_roots, RationalInterval, SturmSequence};
use crate::sps::SpsInstance;
use crate::wronskian::{exact_wronskian, ExactWronskian, PowerProduct};

/// Numerator of the rational upper approximation of e, over `10^16`.
pub const EULER_UPPER_NUMERATOR: u64 = 27_182_818_284_590_453;
pub const EULER_UPPER_DENOMINATOR: u64 = 10_000_000_000_000_000;

/// Largest `m k^2` accepted by [`bound_sparse`].
pub const SPARSE_EXPONENT_LIMIT: u64 = 100_000;

/// `27182818284590453 / 10^16`, slightly above e.
pub fn euler_upper() -> BigRational {
    BigRational::new(
        BigInt::from(EULER_UPPER_NUMERATOR),
        BigInt::from(EULER_UPPER_DENOMINATOR),
    )
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    (a + b - 1u32) / b
}

/// Smallest integer `n` with `n^2 >= a / b`.
fn ceil_sqrt_ratio(a: &BigUint, b: &BigUint) -> BigUint {
    let c = ceil_div(a, b);
    let r = c.sqrt();
    if &r * &r < c {
        r + 1u32
    } else {
        r
    }
}

/// `4ktm + ceil(4 (e (1 + t))^(m k^2 / 2))` with e replaced by
/// [`euler_upper`], so the result is at least the real-valued bound.
pub fn bound_sparse(k: u64, m: u64, t: u64) -> Result<BigUint> {
    let n = m
        .checked_mul(k)
        .and_then(|v| v.checked_mul(k))
        .filter(|&n| n <= SPARSE_EXPONENT_LIMIT)
        .ok_or_else(|| Error::ExponentTooLarge(format!("m k^2 for k = {k}, m = {m}")))?;
    let linear = BigUint::from(4u32) * k * t * m;
    // base = num / den = e_up (1 + t)
    let num = BigUint::from(EULER_UPPER_NUMERATOR) * (BigUint::from(t) + 1u32);
    let den = BigUint::from(EULER_UPPER_DENOMINATOR);
    // n fits in u32 after the limit check
    let half = (n / 2) as u32;
    let power = if n % 2 == 0 {
        ceil_div(&(num.pow(half) * 4u32), &den.pow(half))
    } else {
        // 4 x^(n/2) = sqrt(16 x^n)
        let n = n as u32;
        ceil_sqrt_ratio(&(num.pow(n) * 16u32), &den.pow(n))
    };
    Ok(linear + power)
}

/// `ceil(k^3 m d / 3 + 2kmd + k)`.
pub fn bound_dense(k: u64, m: u64, d: &BigUint) -> BigUint {
    let k = BigUint::from(k);
    let md = BigUint::from(m) * d;
    let numer = &k * &k * &k * &md + BigUint::from(6u32) * &k * &md + BigUint::from(3u32) * &k;
    ceil_div(&numer, &BigUint::from(3u32))
}

/// Points where some prefix Wronskian of the independent family vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonSet {
    /// Squarefree part of the product of the prefix Wronskians.
    pub radical: SparsePoly,
    pub size: usize,
    pub points: Vec<RationalInterval>,
}

/// Prefix Wronskian `W(h_1, .., h_s)` of the independent family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixWronskian {
    pub order: usize,
    pub wronskian: ExactWronskian,
    /// Squarefree polynomial with the same real roots.
    pub radical: SparsePoly,
    /// Exact number of distinct real roots.
    pub zero_count: usize,
    /// `sum_j Z(f_j) + Z(det T)`, an upper estimate of `zero_count`.
    pub estimate: usize,
}

/// Independent subfamily of an instance with its prefix Wronskians.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAnalysis {
    pub reduction: Reduction,
    /// `h_1, .., h_k'`, each with a nonzero coefficient.
    pub family: Vec<PowerProduct>,
    pub coeffs: Vec<Coefficient>,
    pub prefixes: Vec<PrefixWronskian>,
    pub upsilon: UpsilonSet,
}

impl FamilyAnalysis {
    pub fn family_size(&self) -> usize {
        self.family.len()
    }

    /// `(1 + |Upsilon|) k' - 1`.
    pub fn upsilon_bound(&self) -> usize {
        (1 + self.upsilon.size) * self.family_size() - 1
    }

    /// `k' - 1 + Z(W_k') + Z(W_{k'-1}) + 2 sum_{j <= k'-2} Z(W_j)`.
    pub fn main3_bound(&self) -> usize {
        let k = self.family_size();
        let z = |s: usize| if s == 0 { 0 } else { self.prefixes[s - 1].zero_count };
        let inner: usize = (1..k.saturating_sub(1)).map(z).sum();
        k - 1 + z(k) + z(k - 1) + 2 * inner
    }

    /// `k' - 1 + sum_s Z(W_s)`.
    pub fn gap_rhs(&self) -> usize {
        self.family_size() - 1 + self.prefixes.iter().map(|p| p.zero_count).sum::<usize>()
    }
}

fn prefix_wronskian(bases: &[SparsePoly], family: &[PowerProduct], base_roots: usize) -> Result<PrefixWronskian> {
    let order = family.len();
    let wronskian = exact_wronskian(bases, family)?;
    if wronskian.quotient.is_zero() {
        return Err(Error::DependentPrefix { len: order });
    }
    let mut radical = wronskian.quotient.squarefree_part()?;
    for (f, e) in bases.iter().zip(&wronskian.exponents) {
        if !e.is_zero() {
            radical = (&radical * &f.squarefree_part()?).squarefree_part()?;
        }
    }
    let zero_count = count_real_roots(&radical)?;
    let estimate = base_roots + count_real_roots(&wronskian.det_t)?;
    Ok(PrefixWronskian {
        order,
        wronskian,
        radical,
        zero_count,
        estimate,
    })
}

/// Reduces the instance to an independent family with nonzero
/// coefficients and computes its prefix Wronskians and `Upsilon`. `None`
/// when the instance is identically zero.
pub fn analyze_family(inst: &SpsInstance, limits: &Limits) -> Result<Option<FamilyAnalysis>> {
    let reduction = reduce_to_basis(inst, limits.basis_cap)?;
    let (family, coeffs) = reduction.active_family();
    if family.is_empty() {
        return Ok(None);
    }
    let bases = inst.bases();
    let mut base_roots = 0;
    for f in bases {
        base_roots += count_real_roots(f)?;
    }
    let prefixes = (1..=family.len())
        .map(|s| prefix_wronskian(bases, &family[..s], base_roots))
        .collect::<Result<Vec<_>>>()?;
    let mut radical = SparsePoly::one();
    for p in &prefixes {
        radical = (&radical * &p.radical).squarefree_part()?;
    }
    let sturm = SturmSequence::new(&radical)?;
    let points = sturm.isolate();
    let upsilon = UpsilonSet {
        radical,
        size: points.len(),
        points,
    };
    Ok(Some(FamilyAnalysis {
        reduction,
        family,
        coeffs,
        prefixes,
        upsilon,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonBound {
    pub bound: usize,
    pub family_size: usize,
    pub upsilon: UpsilonSet,
}

/// `(1 + |Upsilon|) k' - 1` for the independent family; `None` for an
/// identically zero instance.
pub fn certified_bound_upsilon(inst: &SpsInstance, limits: &Limits) -> Result<Option<UpsilonBound>> {
    Ok(analyze_family(inst, limits)?.map(|a| UpsilonBound {
        bound: a.upsilon_bound(),
        family_size: a.family_size(),
        upsilon: a.upsilon,
    }))
}

pub fn certified_bound_main3(inst: &SpsInstance, limits: &Limits) -> Result<Option<usize>> {
    Ok(analyze_family(inst, limits)?.map(|a| a.main3_bound()))
}

/// Root counts of the expanded instance on the open intervals cut out by
/// the points of `Upsilon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeartOutcome {
    /// `k' - 1`.
    pub limit: usize,
    /// Isolating intervals of the `Upsilon` points, disjoint from those of
    /// the remaining roots of the instance.
    pub upsilon_points: Vec<RationalInterval>,
    /// One count per complementary interval, left to right.
    pub counts: Vec<usize>,
}

impl HeartOutcome {
    pub fn holds(&self) -> bool {
        self.counts.iter().all(|&c| c <= self.limit)
    }
}

fn heart_from(analysis: &FamilyAnalysis, expanded: &SparsePoly) -> Result<HeartOutcome> {
    let upsilon = &analysis.upsilon.radical;
    let joint = (expanded * upsilon).squarefree_part()?;
    let upsilon_sturm = SturmSequence::new(upsilon)?;
    let mut counts = vec![0];
    let mut upsilon_points = Vec::new();
    for iv in SturmSequence::new(&joint)?.isolate() {
        // each interval holds one root of `joint`, and Upsilon's roots are among them
        if upsilon_sturm.count_in(&iv) > 0 {
            upsilon_points.push(iv);
            counts.push(0);
        } else {
            *counts.last_mut().unwrap() += 1;
        }
    }
    Ok(HeartOutcome {
        limit: analysis.family_size() - 1,
        upsilon_points,
        counts,
    })
}

/// Checks that each open interval between consecutive points of `Upsilon`
/// carries at most `k' - 1` distinct roots. `None` for a zero instance.
pub fn interval_bound_heart(inst: &SpsInstance, limits: &Limits) -> Result<Option<HeartOutcome>> {
    let expanded = inst.expand(&limits.budget)?;
    if expanded.is_zero() {
        return Ok(None);
    }
    let analysis = analyze_family(inst, limits)?.expect("a nonzero expansion has a nonempty family");
    heart_from(&analysis, &expanded).map(Some)
}

/// `lhs = Z(f)` against `rhs = k' - 1 + sum_s Z(W_s)`. Reported, never
/// asserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub lhs: usize,
    pub rhs: usize,
}

impl GapReport {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

pub fn open_problem_gap(inst: &SpsInstance, limits: &Limits) -> Result<Option<GapReport>> {
    let expanded = inst.expand(&limits.budget)?;
    if expanded.is_zero() {
        return Ok(None);
    }
    let analysis = analyze_family(inst, limits)?.expect("a nonzero expansion has a nonempty family");
    Ok(Some(GapReport {
        lhs: count_real_roots(&expanded)?,
        rhs: analysis.gap_rhs(),
    }))
}

/// Every per-instance quantity at once, sharing one reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedSummary {
    pub analysis: FamilyAnalysis,
    pub heart: HeartOutcome,
    pub gap: GapReport,
    pub exact_count: usize,
}

/// `None` for a zero instance.
pub fn certified_summary(inst: &SpsInstance, limits: &Limits) -> Result<Option<CertifiedSummary>> {
    let expanded = inst.expand(&limits.budget)?;
    if expanded.is_zero() {
        return Ok(None);
    }
    let analysis = analyze_family(inst, limits)?.expect("a nonzero expansion has a nonempty family");
    let exact_count = count_real_roots(&expanded)?;
    let heart = heart_from(&analysis, &expanded)?;
    let gap = GapReport {
        lhs: exact_count,
        rhs: analysis.gap_rhs(),
    };
    Ok(Some(CertifiedSummary {
        analysis,
        heart,
        gap,
        exact_count,
    }))
}
