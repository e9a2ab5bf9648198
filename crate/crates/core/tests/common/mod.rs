//! Independent oracles and random inputs shared by the integration tests.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use wronsk_core::{Coefficient, SparsePoly};

pub fn int(v: i64) -> Coefficient {
    Coefficient::from_integer(BigInt::from(v))
}

/// Random polynomial with at most `max_terms` terms and degree at most
/// `max_deg`; never zero.
pub fn random_poly(rng: &mut ChaCha8Rng, max_terms: usize, max_deg: u64, coeff_max: i64) -> SparsePoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms: Vec<(BigUint, Coefficient)> = (0..n)
            .map(|_| {
                let mut c = rng.gen_range(-coeff_max..=coeff_max);
                if c == 0 {
                    c = 1;
                }
                (BigUint::from(rng.gen_range(0..=max_deg)), int(c))
            })
            .collect();
        let p = SparsePoly::from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Closed form of the power-derivative constant for a multiplicity vector
/// `s` (index 0 holds `s_1`):
/// `alpha (alpha-1) .. (alpha-|s|+1) * p! / prod_k (s_k! (k!)^(s_k))`.
pub fn closed_form_beta(alpha: u64, s: &[usize]) -> BigUint {
    let size: usize = s.iter().sum();
    let order: usize = s.iter().enumerate().map(|(i, c)| (i + 1) * c).sum();
    let mut falling = BigUint::one();
    for i in 0..size as u64 {
        falling *= alpha - i;
    }
    let mut denom = BigUint::one();
    for (i, &c) in s.iter().enumerate() {
        denom *= factorial(c) * factorial(i + 1).pow(c as u32);
    }
    falling * factorial(order) / denom
}

fn laplace_det(m: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = m.len();
    if n == 0 {
        return SparsePoly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = SparsePoly::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * &laplace_det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Wronskian by first-row cofactor expansion of the derivative matrix.
pub fn laplace_wronskian(fs: &[SparsePoly]) -> SparsePoly {
    let n = fs.len();
    let matrix: Vec<Vec<SparsePoly>> = (0..n)
        .map(|i| fs.iter().map(|f| f.derivative(i as u64)).collect())
        .collect();
    laplace_det(&matrix)
}

/// Sign changes of the coefficient sequence, zero coefficients skipped.
pub fn sign_changes(p: &SparsePoly) -> usize {
    let signs: Vec<bool> = p
        .terms()
        .filter(|(_, c)| !c.is_zero())
        .map(|(_, c)| *c > Coefficient::zero())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct real roots counted by dense bisection on sign changes of the
/// squarefree part at rational grid points, refined until stable. Only
/// for polynomials whose roots are well separated on the grid.
pub fn grid_sign_changes(p: &SparsePoly, lo: i64, hi: i64, steps_per_unit: i64) -> usize {
    let sq = p.squarefree_part().expect("nonzero");
    let mut count = 0;
    let mut prev: Option<std::cmp::Ordering> = None;
    for i in lo * steps_per_unit..=hi * steps_per_unit {
        let x = Coefficient::new(BigInt::from(i), BigInt::from(steps_per_unit));
        let v = sq.eval(&x);
        let s = v.cmp(&Coefficient::zero());
        if s == std::cmp::Ordering::Equal {
            count += 1;
            prev = None;
            continue;
        }
        if let Some(ps) = prev {
            if ps != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}
