//! Closed form for the `p`-th derivative of `f^alpha`:
//!
//! ```text
//! (f^a)^(p) = sum over s in S_p of  beta(a, s) * f^(a - |s|) * prod_k (f^(k))^(s_k)
//! ```
//!
//! where `S_p` is the set of sequences with `sum_i i * s_i = p` (integer
//! partitions of `p` written as multiplicity vectors) and `|s| = sum_i s_i`.
//! The integer constants `beta(a, s)` come from a recurrence over `p`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// A finitely supported sequence `(s_1, s_2, ...)`, stored without
/// trailing zeros. Index 0 of the vector is `s_1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VanishingSeq(Vec<usize>);

impl VanishingSeq {
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        VanishingSeq(parts)
    }

    /// `s_i` for `i >= 1`.
    pub fn get(&self, i: usize) -> usize {
        assert!(i >= 1, "sequences are indexed from 1");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// The stored entries `s_1, s_2, ...` up to the last nonzero one.
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Total order of differentiation, `sum_i i * s_i`.
    pub fn order(&self) -> usize {
        self.0.iter().enumerate().map(|(i, s)| (i + 1) * s).sum()
    }

    /// `|s| = sum_i s_i`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    fn with_delta(&self, add: usize, sub: usize) -> Self {
        let len = self.0.len().max(add).max(sub);
        let mut v = self.0.clone();
        v.resize(len, 0);
        v[add - 1] += 1;
        v[sub - 1] -= 1;
        VanishingSeq::new(v)
    }

    fn without(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i - 1] -= 1;
        VanishingSeq::new(v)
    }
}

/// All sequences with `sum_i i * s_i = p`. `S_0` holds the empty sequence.
pub fn enumerate_s(p: usize) -> Vec<VanishingSeq> {
    fn rec(remaining: usize, max_part: usize, counts: &mut Vec<usize>, out: &mut Vec<VanishingSeq>) {
        if remaining == 0 {
            out.push(VanishingSeq::new(counts.clone()));
            return;
        }
        if max_part == 0 {
            return;
        }
        for mult in (0..=remaining / max_part).rev() {
            counts[max_part - 1] = mult;
            rec(remaining - mult * max_part, max_part - 1, counts, out);
        }
        counts[max_part - 1] = 0;
    }
    let mut out = Vec::new();
    let mut counts = vec![0; p];
    rec(p, p, &mut counts, &mut out);
    out
}

/// The constants `beta(alpha, s)` for every `s` in `S_q`, `q <= max_order`.
#[derive(Clone, Debug)]
pub struct BetaTable {
    alpha: BigUint,
    max_order: usize,
    levels: Vec<Vec<VanishingSeq>>,
    entries: BTreeMap<VanishingSeq, BigUint>,
}

impl BetaTable {
    pub fn alpha(&self) -> &BigUint {
        &self.alpha
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    /// The sequences of `S_q`, in enumeration order.
    pub fn level(&self, q: usize) -> &[VanishingSeq] {
        &self.levels[q]
    }

    pub fn get(&self, s: &VanishingSeq) -> Option<&BigUint> {
        self.entries.get(s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VanishingSeq, &BigUint)> {
        self.entries.iter()
    }
}

/// Builds the table level by level from
///
/// ```text
/// beta(a, s) = [s_1 != 0] (a - |s| + 1) beta(a, s - e_1)
///            + sum_{j >= 2, s_j != 0} (s_{j-1} + 1) beta(a, s + e_{j-1} - e_j)
/// ```
///
/// with `beta(a, ()) = 1`. Both predecessor sequences lie in `S_{q-1}`.
pub fn beta_table(alpha: &BigUint, max_order: usize) -> Result<BetaTable> {
    if *alpha < BigUint::from(max_order) {
        return Err(Error::AlphaBelowOrder {
            alpha: alpha.clone(),
            order: max_order,
        });
    }
    let mut entries = BTreeMap::new();
    let mut levels = Vec::with_capacity(max_order + 1);
    entries.insert(VanishingSeq::default(), BigUint::one());
    levels.push(vec![VanishingSeq::default()]);
    for q in 1..=max_order {
        let level = enumerate_s(q);
        for s in &level {
            let mut beta = BigUint::zero();
            if s.get(1) != 0 {
                // |s| <= q <= alpha, so the factor is at least 1
                let factor = alpha + 1u32 - BigUint::from(s.size());
                beta += factor * &entries[&s.without(1)];
            }
            for j in 2..=s.entries().len() {
                if s.get(j) != 0 {
                    let prev = s.with_delta(j - 1, j);
                    beta += BigUint::from(s.get(j - 1) + 1) * &entries[&prev];
                }
            }
            entries.insert(s.clone(), beta);
        }
        levels.push(level);
    }
    Ok(BetaTable {
        alpha: alpha.clone(),
        max_order,
        levels,
        entries,
    })
}

/// Caches the derivatives and powers of one polynomial `f` so that the
/// sums `sum_{s in S_r} beta(a, s) f^(keep - |s|) prod_k (f^(k))^(s_k)`
/// can be evaluated repeatedly.
#[derive(Clone, Debug)]
pub struct PowerDerivativeExpander {
    derivatives: Vec<SparsePoly>,
    powers: HashMap<(usize, usize), SparsePoly>,
}

impl PowerDerivativeExpander {
    pub fn new(f: &SparsePoly, max_order: usize) -> Self {
        let mut derivatives = Vec::with_capacity(max_order + 1);
        derivatives.push(f.clone());
        for k in 1..=max_order {
            let next = derivatives[k - 1].derivative(1);
            derivatives.push(next);
        }
        PowerDerivativeExpander {
            derivatives,
            powers: HashMap::new(),
        }
    }

    pub fn derivative(&self, k: usize) -> &SparsePoly {
        &self.derivatives[k]
    }

    fn power(&mut self, k: usize, e: usize) -> &SparsePoly {
        let derivs = &self.derivatives;
        self.powers
            .entry((k, e))
            .or_insert_with(|| derivs[k].pow(e as u64))
    }

    /// `sum_{s in S_r} beta(a, s) f^(keep - |s|) prod_k (f^(k))^(s_k)`,
    /// requiring `keep >= r`. With `keep = a` this is `(f^a)^(r)`.
    pub fn cofactor(&mut self, table: &BetaTable, r: usize, keep: usize) -> SparsePoly {
        assert!(keep >= r, "cofactor needs keep >= r");
        assert!(r <= table.max_order() && r < self.derivatives.len());
        let mut acc = SparsePoly::zero();
        for s in table.level(r) {
            let beta = &table.entries[s];
            if beta.is_zero() {
                continue;
            }
            let mut factors = vec![self.power(0, keep - s.size()).clone()];
            for (i, &mult) in s.entries().iter().enumerate() {
                if mult > 0 {
                    factors.push(self.power(i + 1, mult).clone());
                }
            }
            let term = SparsePoly::product(&factors)
                .scale(&BigRational::from_integer(BigInt::from(beta.clone())));
            acc = acc + term;
        }
        acc
    }
}

/// `(f^alpha)^(p)` through the beta formula, without expanding `f^alpha`
/// and differentiating. Requires `alpha >= p`.
pub fn power_derivative(f: &SparsePoly, alpha: u64, p: usize) -> Result<SparsePoly> {
    let table = beta_table(&BigUint::from(alpha), p)?;
    let keep = alpha
        .to_usize()
        .ok_or_else(|| Error::ExponentTooLarge(alpha.to_string()))?;
    let mut expander = PowerDerivativeExpander::new(f, p);
    Ok(expander.cofactor(&table, p, keep))
}
