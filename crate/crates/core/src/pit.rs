//! Deterministic identity testing for sums of products of powers.
//!
//! The blackbox test evaluates at `1, 2, .., B + 1` where `B` bounds the
//! number of real roots of any nonzero instance with the same shape. The
//! whitebox test grows a linearly independent subfamily of the power
//! products, writes every other product in that basis with Cramer's rule
//! on Wronskian leading coefficients, and checks that the accumulated
//! coefficients vanish.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::bounds::{bound_dense, bound_sparse};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Coefficient, SparsePoly};
use crate::sps::{ExpansionBudget, SpsInstance};
use crate::wronskian::{leading_factors, PowerProduct};

/// Which a-priori root bound sizes the hitting set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// Bound in terms of the base sparsity.
    Sparse,
    /// Bound in terms of the base degree.
    Dense,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Sparse => "sparse",
            Model::Dense => "dense",
        })
    }
}

/// `rows[row] = sum_i combination[i] * rows[basis[i]]` as polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dependency {
    pub row: usize,
    pub combination: Vec<Coefficient>,
}

/// Result of the whitebox reduction; doubles as the zero certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Distinct exponent rows with nonzero merged coefficient, in order of
    /// first appearance.
    pub rows: Vec<PowerProduct>,
    pub row_coeffs: Vec<Coefficient>,
    /// Indices into `rows`, increasing.
    pub basis: Vec<usize>,
    pub dependencies: Vec<Dependency>,
    /// Coefficient of each basis member once every dependency is folded in.
    pub basis_coeffs: Vec<Coefficient>,
}

impl Reduction {
    pub fn is_zero(&self) -> bool {
        self.basis_coeffs.iter().all(Zero::is_zero)
    }

    /// The basis members that keep a nonzero coefficient, with those
    /// coefficients. The instance equals `sum c_i h_i` over this family,
    /// which is linearly independent.
    pub fn active_family(&self) -> (Vec<PowerProduct>, Vec<Coefficient>) {
        self.basis
            .iter()
            .zip(&self.basis_coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&b, c)| (self.rows[b].clone(), c.clone()))
            .unzip()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitVerdict {
    pub is_zero: bool,
    /// Blackbox: a point where the instance does not vanish.
    pub witness: Option<BigInt>,
    /// Blackbox: evaluations performed.
    pub queries: u64,
    /// Blackbox: the root bound `B` behind the hitting set.
    pub bound: Option<BigUint>,
    /// Whitebox: the reduction, whose dependencies certify the verdict.
    pub certificate: Option<Reduction>,
}

/// Drops zero coefficients and merges identical exponent rows.
pub fn merge_terms(inst: &SpsInstance) -> (Vec<PowerProduct>, Vec<Coefficient>) {
    let mut index: HashMap<&PowerProduct, usize> = HashMap::new();
    let mut rows: Vec<PowerProduct> = Vec::new();
    let mut coeffs: Vec<Coefficient> = Vec::new();
    for (a, row) in inst.coeffs().iter().zip(inst.rows()) {
        if a.is_zero() {
            continue;
        }
        match index.get(row) {
            Some(&i) => coeffs[i] += a,
            None => {
                index.insert(row, rows.len());
                rows.push(row.clone());
                coeffs.push(a.clone());
            }
        }
    }
    rows.into_iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .unzip()
}

fn check_nonzero_bases(inst: &SpsInstance) -> Result<()> {
    match inst.bases().iter().position(SparsePoly::is_zero) {
        Some(j) => Err(Error::DegenerateBase { index: j + 1 }),
        None => Ok(()),
    }
}

/// Incremental basis construction in input order.
pub fn reduce_to_basis(inst: &SpsInstance, basis_cap: usize) -> Result<Reduction> {
    check_nonzero_bases(inst)?;
    let bases = inst.bases();
    let (rows, row_coeffs) = merge_terms(inst);
    let mut basis: Vec<usize> = Vec::new();
    let mut basis_rows: Vec<PowerProduct> = Vec::new();
    let mut basis_coeffs: Vec<Coefficient> = Vec::new();
    let mut basis_factors = leading_factors(bases, &[])?;
    let mut dependencies = Vec::new();

    for (r, row) in rows.iter().enumerate() {
        let needed = basis_rows.len() + 1;
        if needed > basis_cap {
            return Err(Error::BasisCapExceeded {
                needed,
                cap: basis_cap,
            });
        }
        let mut candidate = basis_rows.clone();
        candidate.push(row.clone());
        let factors = leading_factors(bases, &candidate)?;
        if factors.is_independent() {
            basis.push(r);
            basis_rows = candidate;
            basis_coeffs.push(row_coeffs[r].clone());
            basis_factors = factors;
            continue;
        }
        let mut combination = Vec::with_capacity(basis_rows.len());
        for j in 0..basis_rows.len() {
            let mut swapped = basis_rows.clone();
            swapped[j] = row.clone();
            let ratio = leading_factors(bases, &swapped)?
                .ratio(&basis_factors, bases)?
                .expect("the basis Wronskian is nonzero");
            basis_coeffs[j] += &row_coeffs[r] * &ratio;
            combination.push(ratio);
        }
        dependencies.push(Dependency { row: r, combination });
    }
    Ok(Reduction {
        rows,
        row_coeffs,
        basis,
        dependencies,
        basis_coeffs,
    })
}

pub fn pit_whitebox(inst: &SpsInstance, limits: &Limits) -> Result<PitVerdict> {
    let reduction = reduce_to_basis(inst, limits.basis_cap)?;
    Ok(PitVerdict {
        is_zero: reduction.is_zero(),
        witness: None,
        queries: 0,
        bound: None,
        certificate: Some(reduction),
    })
}

/// Root bound used to size the hitting set for this instance's shape.
pub fn hitting_set_bound(inst: &SpsInstance, model: Model) -> Result<BigUint> {
    let k = inst.k() as u64;
    let m = inst.m() as u64;
    match model {
        Model::Sparse => bound_sparse(k, m, inst.t().max(1) as u64),
        Model::Dense => Ok(bound_dense(k, m, &inst.d())),
    }
}

/// Evaluates at `1, .., B + 1`, stopping at the first nonzero value. Fails
/// with a query-budget error only if `limits.max_queries` evaluations all
/// vanish before the hitting set is exhausted.
pub fn pit_blackbox(inst: &SpsInstance, model: Model, limits: &Limits) -> Result<PitVerdict> {
    let bound = hitting_set_bound(inst, model)?;
    let points = &bound + 1u32;
    let mut queries = 0u64;
    let mut n = BigUint::one();
    while n <= points {
        if queries >= limits.max_queries {
            return Err(Error::QueryBudget {
                needed: points,
                cap: limits.max_queries,
            });
        }
        let x = BigInt::from(n.clone());
        queries += 1;
        if !inst.eval_at_integer(&x)?.is_zero() {
            return Ok(PitVerdict {
                is_zero: false,
                witness: Some(x),
                queries,
                bound: Some(bound),
                certificate: None,
            });
        }
        n += 1u32;
    }
    Ok(PitVerdict {
        is_zero: true,
        witness: None,
        queries,
        bound: Some(bound),
        certificate: None,
    })
}

/// Largest degree handled by the pointwise fallback of [`certificate_check`].
const POINTWISE_DEGREE_LIMIT: u64 = 1 << 16;

fn row_degree(bases: &[SparsePoly], row: &PowerProduct) -> BigUint {
    bases
        .iter()
        .zip(&row.exponents)
        .map(|(f, e)| e * f.degree_biguint().cloned().unwrap_or_default())
        .sum()
}

/// Whether `lhs = sum_i c_i rhs_i` holds as polynomials.
fn identity_holds(
    bases: &[SparsePoly],
    lhs: &PowerProduct,
    rhs: &[(&PowerProduct, &Coefficient)],
    budget: &ExpansionBudget,
) -> Result<bool> {
    let degree = rhs
        .iter()
        .map(|(r, _)| row_degree(bases, r))
        .chain([row_degree(bases, lhs)])
        .max()
        .unwrap_or_default();
    if degree <= BigUint::from(budget.max_degree) {
        let mut acc = lhs.expand(bases, 0)?;
        for (row, c) in rhs {
            acc = &acc - &row.expand(bases, 0)?.scale(c);
        }
        return Ok(acc.is_zero());
    }
    // A nonzero difference has degree <= `degree`, so it cannot vanish on
    // `degree + 1` distinct points.
    let degree = degree
        .to_u64()
        .filter(|&d| d <= POINTWISE_DEGREE_LIMIT)
        .ok_or_else(|| Error::ExpansionTooLarge(format!("certificate identity of degree {degree}")))?;
    let probe = |row: &PowerProduct, coeffs: Coefficient| -> Result<SpsInstance> {
        SpsInstance::new(bases.to_vec(), vec![coeffs], vec![row.clone()])
    };
    let mut terms = vec![probe(lhs, Coefficient::one())?];
    for (row, c) in rhs {
        terms.push(probe(row, -(*c).clone())?);
    }
    for n in 1..=degree + 1 {
        let x = BigInt::from(n);
        let mut acc = Coefficient::zero();
        for t in &terms {
            acc += t.eval_at_integer(&x)?;
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-derives a whitebox verdict from scratch: merged terms, basis
/// independence, every dependency identity, the folded coefficients and
/// the final answer. `Ok(false)` means the certificate is wrong.
pub fn certificate_check(inst: &SpsInstance, verdict: &PitVerdict, budget: &ExpansionBudget) -> Result<bool> {
    let Some(cert) = &verdict.certificate else {
        return Err(Error::InvalidArgument("verdict carries no certificate".into()));
    };
    check_nonzero_bases(inst)?;
    let bases = inst.bases();
    let (rows, row_coeffs) = merge_terms(inst);
    if rows != cert.rows || row_coeffs != cert.row_coeffs {
        return Ok(false);
    }
    if !cert.basis.windows(2).all(|w| w[0] < w[1]) || cert.basis.iter().any(|&b| b >= rows.len()) {
        return Ok(false);
    }
    let mut covered = vec![false; rows.len()];
    for &b in &cert.basis {
        covered[b] = true;
    }
    for dep in &cert.dependencies {
        if dep.row >= rows.len() || covered[dep.row] || dep.combination.len() > cert.basis.len() {
            return Ok(false);
        }
        covered[dep.row] = true;
    }
    if covered.iter().any(|c| !c) {
        return Ok(false);
    }
    let basis_rows: Vec<PowerProduct> = cert.basis.iter().map(|&b| rows[b].clone()).collect();
    if !leading_factors(bases, &basis_rows)?.is_independent() {
        return Ok(false);
    }
    let mut folded: Vec<Coefficient> = cert.basis.iter().map(|&b| row_coeffs[b].clone()).collect();
    for dep in &cert.dependencies {
        let rhs: Vec<(&PowerProduct, &Coefficient)> = basis_rows.iter().zip(&dep.combination).collect();
        if !identity_holds(bases, &rows[dep.row], &rhs, budget)? {
            return Ok(false);
        }
        for (acc, c) in folded.iter_mut().zip(&dep.combination) {
            *acc += &row_coeffs[dep.row] * c;
        }
    }
    let zero = folded.iter().all(Zero::is_zero);
    Ok(folded == cert.basis_coeffs && zero == verdict.is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> SparsePoly {
        SparsePoly::from_coeffs(c)
    }

    fn int(v: i64) -> Coefficient {
        Coefficient::from_integer(BigInt::from(v))
    }

    #[test]
    fn blackbox_small_cases() {
        let limits = Limits::default();
        let zero = SpsInstance::from_i64(vec![p(&[1, 1]), p(&[1, 2, 1])], &[(1, &[2, 0]), (-1, &[0, 1])]).unwrap();
        for model in [Model::Sparse, Model::Dense] {
            let v = pit_blackbox(&zero, model, &Limits { max_queries: 1 << 30, ..limits }).unwrap();
            assert!(v.is_zero);
            assert_eq!(BigUint::from(v.queries), v.bound.unwrap() + 1u32);
        }
        // x^2 - (x + 1)
        let nz = SpsInstance::from_i64(vec![p(&[0, 1]), p(&[1, 1])], &[(1, &[2, 0]), (-1, &[0, 1])]).unwrap();
        let v = pit_blackbox(&nz, Model::Sparse, &limits).unwrap();
        assert!(!v.is_zero);
        let w = v.witness.unwrap();
        assert!(!nz.eval_at_integer(&w).unwrap().is_zero());
        assert_eq!(v.queries, 1);
    }

    #[test]
    fn blackbox_query_cap() {
        let zero = SpsInstance::from_i64(vec![p(&[1, 1])], &[(1, &[1]), (-1, &[1])]).unwrap();
        let limits = Limits {
            max_queries: 3,
            ..Limits::default()
        };
        assert!(matches!(pit_blackbox(&zero, Model::Dense, &limits), Err(Error::QueryBudget { cap: 3, .. })));
    }

    #[test]
    fn whitebox_sum_of_bases() {
        // f, g, f + g with coefficients 1, 1, -1
        let f = p(&[1, 0, 3]);
        let g = p(&[0, 2, 0, 1]);
        let sum = &f + &g;
        let inst = SpsInstance::from_i64(vec![f, g, sum], &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (-1, &[0, 0, 1])]).unwrap();
        let limits = Limits::default();
        let v = pit_whitebox(&inst, &limits).unwrap();
        assert!(v.is_zero);
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.basis, vec![0, 1]);
        assert_eq!(cert.dependencies, vec![Dependency { row: 2, combination: vec![int(1), int(1)] }]);
        assert!(certificate_check(&inst, &v, &limits.budget).unwrap());

        let mut bad = v.clone();
        bad.certificate.as_mut().unwrap().dependencies[0].combination[1] = int(2);
        assert!(!certificate_check(&inst, &bad, &limits.budget).unwrap());
    }

    #[test]
    fn whitebox_merges_duplicates() {
        let inst = SpsInstance::from_i64(vec![p(&[1, 1])], &[(3, &[2]), (0, &[5]), (-3, &[2])]).unwrap();
        let v = pit_whitebox(&inst, &Limits::default()).unwrap();
        assert!(v.is_zero);
        assert!(v.certificate.as_ref().unwrap().rows.is_empty());
    }

    #[test]
    fn whitebox_nonzero_and_cap() {
        let inst = SpsInstance::from_i64(vec![p(&[0, 1])], &[(1, &[0]), (1, &[1]), (1, &[2])]).unwrap();
        let v = pit_whitebox(&inst, &Limits::default()).unwrap();
        assert!(!v.is_zero);
        assert!(certificate_check(&inst, &v, &ExpansionBudget::default()).unwrap());
        let capped = Limits {
            basis_cap: 2,
            ..Limits::default()
        };
        assert_eq!(
            pit_whitebox(&inst, &capped),
            Err(Error::BasisCapExceeded { needed: 3, cap: 2 })
        );
    }

    #[test]
    fn whitebox_scalar_alias() {
        // f2 = 2 f1, so f1^3 = f2^3 / 8
        let f1 = p(&[1, -1, 1]);
        let f2 = f1.scale(&int(2));
        let inst = SpsInstance::from_i64(vec![f1, f2], &[(8, &[3, 0]), (-1, &[0, 3]), (5, &[1, 0])]).unwrap();
        let v = pit_whitebox(&inst, &Limits::default()).unwrap();
        assert!(!v.is_zero);
        let cert = v.certificate.as_ref().unwrap();
        assert_eq!(cert.dependencies[0].combination, vec![int(8)]);
        assert_eq!(cert.basis_coeffs, vec![int(0), int(5)]);
        assert!(certificate_check(&inst, &v, &ExpansionBudget::default()).unwrap());
    }

    #[test]
    fn certificate_pointwise_fallback() {
        let f = p(&[1, 1]);
        let g = p(&[2, 1]);
        let sum = &f + &g;
        let inst = SpsInstance::from_i64(vec![f, g, sum], &[(1, &[1, 0, 0]), (1, &[0, 1, 0]), (-1, &[0, 0, 1])]).unwrap();
        let v = pit_whitebox(&inst, &Limits::default()).unwrap();
        let tiny = ExpansionBudget {
            max_degree: 0,
            max_sparsity: 1,
        };
        assert!(certificate_check(&inst, &v, &tiny).unwrap());
    }
}
