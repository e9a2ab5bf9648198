//! Wronskian determinants of polynomial families.
//!
//! For power products `g_u = prod_j f_j^(alpha_{u,j} + l)` the Wronskian
//! factors as
//!
//! ```text
//! W(g_1..g_s) = prod_j f_j^(sum_u alpha_{u,j} + s(s+1)/2) * det(T)
//! ```
//!
//! where the cells of `T` have low degree: row `v` of column `u` is
//! `g_u^(v-1)` with `prod_j f_j^(alpha_{u,j})` pulled out of the column and
//! `prod_j f_j^(l - v + 1)` pulled out of the row. The cells are built from
//! the beta constants of [`crate::diffpower`], so the high powers are never
//! expanded.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diffpower::{beta_table, BetaTable, PowerDerivativeExpander};
use crate::error::{Error, Result};
use crate::poly::{pow_biguint, Coefficient, SparsePoly};

/// Largest order for which determinants use permutation expansion.
pub const PERMUTATION_EXPANSION_MAX: usize = 5;

/// Exponent row `(alpha_1, .., alpha_m)` of `prod_j f_j^(alpha_j)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PowerProduct {
    pub exponents: Vec<BigUint>,
}

impl PowerProduct {
    pub fn new(exponents: Vec<BigUint>) -> Self {
        PowerProduct { exponents }
    }

    pub fn from_u64(exponents: &[u64]) -> Self {
        PowerProduct::new(exponents.iter().map(|&e| BigUint::from(e)).collect())
    }

    /// Expands `prod_j bases[j]^(exponents[j] + shift)`. Desk scale only.
    pub fn expand(&self, bases: &[SparsePoly], shift: u64) -> Result<SparsePoly> {
        let mut factors = Vec::with_capacity(bases.len());
        for (f, e) in bases.iter().zip(&self.exponents) {
            let e = e
                .to_u64()
                .and_then(|e| e.checked_add(shift))
                .ok_or_else(|| Error::ExponentTooLarge(e.to_string()))?;
            if e > 0 {
                factors.push(f.pow(e));
            }
        }
        Ok(SparsePoly::product(&factors))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredWronskian {
    /// Exponent of each base pulled out of the determinant.
    pub power_exponents: Vec<BigUint>,
    /// `det(T)`, expanded in `x`.
    pub det_t: SparsePoly,
    /// The shift `l` added to every exponent of the family.
    pub shift: usize,
}

impl FactoredWronskian {
    /// `prod_j f_j^(power_exponents[j]) * det(T)`, expanded.
    pub fn reconstruct(&self, bases: &[SparsePoly]) -> Result<SparsePoly> {
        let power = PowerProduct::new(self.power_exponents.clone()).expand(bases, 0)?;
        Ok(&power * &self.det_t)
    }
}

/// Determinant of a square polynomial matrix. Permutation expansion up to
/// order [`PERMUTATION_EXPANSION_MAX`], fraction-free elimination above.
pub fn determinant(matrix: &[Vec<SparsePoly>]) -> SparsePoly {
    if matrix.len() <= PERMUTATION_EXPANSION_MAX {
        determinant_by_permutations(matrix)
    } else {
        determinant_bareiss(matrix)
    }
}

/// Sum over all permutations of signed products of cells.
pub fn determinant_by_permutations(matrix: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = matrix.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = SparsePoly::zero();
    let mut add_term = |perm: &[usize], sign: bool| {
        let mut cells = Vec::with_capacity(n);
        for (row, &col) in perm.iter().enumerate() {
            let cell = &matrix[row][col];
            if cell.is_zero() {
                return;
            }
            cells.push(cell);
        }
        let term = SparsePoly::product(cells);
        total = if sign {
            &total + &term
        } else {
            &total - &term
        };
    };
    // Heap's algorithm; every step is a single transposition.
    let mut counters = vec![0usize; n];
    let mut sign = true;
    add_term(&perm, sign);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            sign = !sign;
            add_term(&perm, sign);
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

/// Bareiss fraction-free elimination with exact polynomial division.
pub fn determinant_bareiss(matrix: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = matrix.len();
    if n == 0 {
        return SparsePoly::one();
    }
    let mut m: Vec<Vec<SparsePoly>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = SparsePoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return SparsePoly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("prev pivot is nonzero")
                    .expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `det((f_j^(i-1)))`, computed directly from the expanded derivatives.
/// The empty family has Wronskian 1.
pub fn wronskian_direct(fs: &[SparsePoly]) -> SparsePoly {
    let k = fs.len();
    let matrix: Vec<Vec<SparsePoly>> = (0..k)
        .map(|i| fs.iter().map(|f| f.derivative(i as u64)).collect())
        .collect();
    determinant(&matrix)
}

fn check_bases(bases: &[SparsePoly]) -> Result<()> {
    match bases.iter().position(SparsePoly::is_zero) {
        Some(j) => Err(Error::DegenerateBase { index: j + 1 }),
        None => Ok(()),
    }
}

fn check_products(bases: &[SparsePoly], products: &[PowerProduct]) -> Result<()> {
    if let Some(p) = products.iter().find(|p| p.exponents.len() != bases.len()) {
        return Err(Error::InvalidArgument(format!(
            "power product has {} exponents for {} bases",
            p.exponents.len(),
            bases.len()
        )));
    }
    Ok(())
}

/// Calls `visit` on every composition of `total` into `parts` nonnegative parts.
fn for_each_composition(total: usize, parts: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(rem: usize, idx: usize, buf: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        if idx + 1 == buf.len() {
            buf[idx] = rem;
            visit(buf);
            return;
        }
        for r in 0..=rem {
            buf[idx] = r;
            rec(rem - r, idx + 1, buf, visit);
        }
    }
    if parts == 0 {
        if total == 0 {
            visit(&[]);
        }
        return;
    }
    let mut buf = vec![0; parts];
    rec(total, 0, &mut buf, visit);
}

fn multinomial(n: usize, parts: &[usize]) -> Coefficient {
    let fact = |k: usize| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let denom = parts.iter().fold(BigInt::one(), |acc, &r| acc * fact(r));
    Coefficient::from_integer(fact(n) / denom)
}

/// The matrix `T` for the first `s` products with shift `l = s`. Entry
/// `[v-1][u-1]` is `T_{u,v}`.
pub fn t_matrix(
    bases: &[SparsePoly],
    products: &[PowerProduct],
    s: usize,
) -> Result<Vec<Vec<SparsePoly>>> {
    check_bases(bases)?;
    check_products(bases, products)?;
    if s == 0 || s > products.len() {
        return Err(Error::InvalidArgument(format!(
            "prefix length {s} outside 1..={}",
            products.len()
        )));
    }
    let m = bases.len();
    let shift = BigUint::from(s);
    let mut expanders: Vec<PowerDerivativeExpander> = bases
        .iter()
        .map(|f| PowerDerivativeExpander::new(f, s - 1))
        .collect();
    let tables: Vec<Vec<BetaTable>> = products[..s]
        .iter()
        .map(|p| {
            p.exponents
                .iter()
                .map(|a| beta_table(&(a + &shift), s - 1))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut t = vec![vec![SparsePoly::zero(); s]; s];
    for (u, col_tables) in tables.iter().enumerate() {
        for v in 1..=s {
            let order = v - 1;
            // cof[j][r] = sum_{S_r} beta f_j^(v-1-|s|) prod (f_j^(k))^(s_k)
            let cof: Vec<Vec<SparsePoly>> = (0..m)
                .map(|j| {
                    (0..=order)
                        .map(|r| expanders[j].cofactor(&col_tables[j], r, order))
                        .collect()
                })
                .collect();
            // Leibniz: (prod_j F_j)^(n) = sum_r multinomial(n; r) prod_j F_j^(r_j)
            let mut cell = SparsePoly::zero();
            for_each_composition(order, m, &mut |rs| {
                let factors: Vec<&SparsePoly> =
                    rs.iter().enumerate().map(|(j, &r)| &cof[j][r]).collect();
                let term = SparsePoly::product(factors).scale(&multinomial(order, rs));
                cell = &cell + &term;
            });
            t[v - 1][u] = cell;
        }
    }
    Ok(t)
}

/// Factored Wronskian of `g_i = prod_j f_j^(alpha_{i,j} + s)`, `i <= s`.
pub fn factored_wronskian(
    bases: &[SparsePoly],
    products: &[PowerProduct],
    s: usize,
) -> Result<FactoredWronskian> {
    let t = t_matrix(bases, products, s)?;
    let det_t = determinant(&t);
    let triangle = BigUint::from(s * (s + 1) / 2);
    let power_exponents = (0..bases.len())
        .map(|j| {
            products[..s]
                .iter()
                .map(|p| &p.exponents[j])
                .sum::<BigUint>()
                + &triangle
        })
        .collect();
    Ok(FactoredWronskian {
        power_exponents,
        det_t,
        shift: s,
    })
}

/// Checks `W(g f_1, .., g f_k) = g^k W(f_1, .., f_k)` on the given inputs.
pub fn scaling_check(g: &SparsePoly, fs: &[SparsePoly]) -> bool {
    let scaled: Vec<SparsePoly> = fs.iter().map(|f| g * f).collect();
    let lhs = wronskian_direct(&scaled);
    let rhs = &g.pow(fs.len() as u64) * &wronskian_direct(fs);
    lhs == rhs
}

fn lc_power(f: &SparsePoly, e: &BigInt) -> Result<Coefficient> {
    // bases are nonzero here
    let lc = f.leading_coefficient().unwrap();
    if e.magnitude().to_u32().is_none() && !lc.abs().is_one() {
        return Err(Error::ExponentTooLarge(e.to_string()));
    }
    let mag = pow_biguint(lc, e.magnitude());
    Ok(if e.is_negative() { mag.recip() } else { mag })
}

/// `lc(det T)` and the exponents `sum_i alpha_{i,j} - l(l-1)/2` such that
/// `lc(W(h_1, .., h_l)) = lc(det T) * prod_j lc(f_j)^(exponent_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingFactors {
    /// `None` when the family is linearly dependent.
    pub det_lc: Option<Coefficient>,
    pub exponents: Vec<BigInt>,
}

impl LeadingFactors {
    pub fn is_independent(&self) -> bool {
        self.det_lc.is_some()
    }

    /// `lc(W(self)) / lc(W(other))`, or `None` if `other` is dependent.
    pub fn ratio(&self, other: &LeadingFactors, bases: &[SparsePoly]) -> Result<Option<Coefficient>> {
        let Some(den) = &other.det_lc else {
            return Ok(None);
        };
        let Some(num) = &self.det_lc else {
            return Ok(Some(Coefficient::zero()));
        };
        let mut r = num / den;
        for ((f, a), b) in bases.iter().zip(&self.exponents).zip(&other.exponents) {
            let e = a - b;
            if !e.is_zero() {
                r *= lc_power(f, &e)?;
            }
        }
        Ok(Some(r))
    }
}

pub fn leading_factors(bases: &[SparsePoly], products: &[PowerProduct]) -> Result<LeadingFactors> {
    check_bases(bases)?;
    check_products(bases, products)?;
    let l = products.len();
    let pair_count = BigInt::from(l * l.saturating_sub(1) / 2);
    let exponents = (0..bases.len())
        .map(|j| {
            let total: BigUint = products.iter().map(|p| &p.exponents[j]).sum();
            BigInt::from(total) - &pair_count
        })
        .collect();
    let det_lc = if l == 0 {
        Some(Coefficient::one())
    } else {
        factored_wronskian(bases, products, l)?
            .det_t
            .leading_coefficient()
            .cloned()
    };
    Ok(LeadingFactors { det_lc, exponents })
}

/// Leading coefficient of `W(h_1, .., h_l)` for `h_i = prod_j f_j^(alpha_{i,j})`,
/// or zero when the family is linearly dependent.
///
/// Uses `W(h) = det(T) * prod_j f_j^(sum_i alpha_{i,j} - l(l-1)/2)` (the
/// exponent may be negative, in which case `det(T)` is divisible by the
/// power), so `lc(W(h)) = lc(det T) * prod_j lc(f_j)^(...)`.
pub fn wronskian_leading_coefficient(
    bases: &[SparsePoly],
    products: &[PowerProduct],
) -> Result<Coefficient> {
    let parts = leading_factors(bases, products)?;
    let Some(mut lc) = parts.det_lc else {
        return Ok(Coefficient::zero());
    };
    for (f, e) in bases.iter().zip(&parts.exponents) {
        lc *= lc_power(f, e)?;
    }
    Ok(lc)
}

/// `W(h_1, .., h_l)` as `quotient * prod_j f_j^(exponents[j])` with every
/// exponent nonnegative: negative powers are divided out of `det(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactWronskian {
    pub quotient: SparsePoly,
    pub exponents: Vec<BigUint>,
    /// `det(T)` before the division.
    pub det_t: SparsePoly,
}

pub fn exact_wronskian(bases: &[SparsePoly], products: &[PowerProduct]) -> Result<ExactWronskian> {
    check_bases(bases)?;
    check_products(bases, products)?;
    let l = products.len();
    let m = bases.len();
    if l == 0 {
        return Ok(ExactWronskian {
            quotient: SparsePoly::one(),
            exponents: vec![BigUint::zero(); m],
            det_t: SparsePoly::one(),
        });
    }
    let pair_count = BigUint::from(l * (l - 1) / 2);
    let det_t = factored_wronskian(bases, products, l)?.det_t;
    let mut quotient = det_t.clone();
    let mut exponents = Vec::with_capacity(m);
    for (j, f) in bases.iter().enumerate() {
        let total: BigUint = products.iter().map(|p| &p.exponents[j]).sum();
        if total >= pair_count {
            exponents.push(total - &pair_count);
            continue;
        }
        exponents.push(BigUint::zero());
        if quotient.is_zero() {
            continue;
        }
        // small: at most l(l-1)/2
        let deficit = (&pair_count - total).to_u64().unwrap();
        quotient = quotient
            .exact_div(&f.pow(deficit))?
            .expect("the Wronskian is a polynomial, so det(T) is divisible");
    }
    Ok(ExactWronskian {
        quotient,
        exponents,
        det_t,
    })
}

/// Reduced quotient of two polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: SparsePoly,
    pub den: SparsePoly,
}

impl RationalFunction {
    pub fn new(num: SparsePoly, den: SparsePoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num,
                den: SparsePoly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g)?.expect("gcd divides numerator"),
                den.exact_div(&g)?.expect("gcd divides denominator"),
            )
        };
        // normalize to a monic denominator
        let lc = den.leading_coefficient().unwrap().recip();
        Ok(RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn derivative(&self) -> Result<Self> {
        let num = &(&self.num.derivative(1) * &self.den) - &(&self.num * &self.den.derivative(1));
        RationalFunction::new(num, &self.den * &self.den)
    }

    pub fn mul_poly_ratio(&self, num: &SparsePoly, den: &SparsePoly) -> Result<Self> {
        RationalFunction::new(&self.num * num, &self.den * den)
    }

    /// Exact equality with a polynomial.
    pub fn equals_poly(&self, p: &SparsePoly) -> bool {
        self.num == p * &self.den
    }
}

/// Runs `R_0 = f_1 + .. + f_k`,
/// `R_{i+1} = W_{i+1}^2 / W_i * (R_i / W_{i+1})'` in exact rational-function
/// arithmetic and reports whether `R_{k-1} = W_k`.
pub fn frobenius_check(fs: &[SparsePoly]) -> Result<bool> {
    let k = fs.len();
    if k == 0 {
        return Err(Error::InvalidArgument("empty family".into()));
    }
    let prefix: Vec<SparsePoly> = (0..=k).map(|i| wronskian_direct(&fs[..i])).collect();
    if let Some(i) = prefix.iter().position(SparsePoly::is_zero) {
        return Err(Error::DependentPrefix { len: i });
    }
    let sum = fs.iter().fold(SparsePoly::zero(), |acc, f| &acc + f);
    let mut r = RationalFunction::new(sum, SparsePoly::one())?;
    for i in 0..k - 1 {
        let w_next = &prefix[i + 1];
        let quotient = r.mul_poly_ratio(&SparsePoly::one(), w_next)?;
        r = quotient
            .derivative()?
            .mul_poly_ratio(&(w_next * w_next), &prefix[i])?;
    }
    Ok(r.equals_poly(&prefix[k]))
}
