mod common;

use num_bigint::BigUint;
use num_integer::binomial;
use proptest::prelude::*;

use common::laplace_wronskian;
use wronsk_core::wronskian::{
    determinant_bareiss, determinant_by_permutations, factored_wronskian, frobenius_check, scaling_check,
    t_matrix, wronskian_direct, wronskian_leading_coefficient,
};
use wronsk_core::{PowerProduct, SparsePoly};

fn nonzero_poly(max_terms: usize, max_exp: u64) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((-6i64..=6, 0..=max_exp), 1..=max_terms)
        .prop_map(|terms| SparsePoly::from_i64(&terms))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Bases (at most `t` terms, degree at most 3) and `k` exponent rows.
fn family() -> impl Strategy<Value = (Vec<SparsePoly>, Vec<PowerProduct>)> {
    (1usize..=2, 1usize..=3).prop_flat_map(|(m, k)| {
        (
            prop::collection::vec(nonzero_poly(3, 3), m),
            prop::collection::vec(prop::collection::vec(0u64..=4, m), k),
        )
            .prop_map(|(bases, rows)| (bases, rows.iter().map(|r| PowerProduct::from_u64(r)).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn factorization_and_bounds((bases, rows) in family()) {
        let m = bases.len();
        let d = bases.iter().map(|f| f.degree_u64().unwrap()).max().unwrap();
        let t = bases.iter().map(SparsePoly::sparsity).max().unwrap();
        for s in 1..=rows.len() {
            let fw = factored_wronskian(&bases, &rows, s).unwrap();
            let shifted: Vec<SparsePoly> = rows[..s].iter().map(|r| r.expand(&bases, s as u64).unwrap()).collect();
            let direct = laplace_wronskian(&shifted);
            prop_assert_eq!(fw.reconstruct(&bases).unwrap(), direct.clone());
            prop_assert_eq!(fw.det_t.is_zero(), direct.is_zero());
            let pairs = (s * (s - 1) / 2) as u64;
            if let Some(deg) = fw.det_t.degree_u64() {
                prop_assert!(deg <= m as u64 * d * pairs);
            }
            let mt = BigUint::from(m * t);
            let cap = binomial(BigUint::from(m as u64 * pairs) + &mt - 1u32, mt - 1u32);
            prop_assert!(BigUint::from(fw.det_t.sparsity()) <= cap);
        }
    }

    #[test]
    fn leading_coefficient_matches_expansion((bases, rows) in family()) {
        let expanded: Vec<SparsePoly> = rows.iter().map(|r| r.expand(&bases, 0).unwrap()).collect();
        let direct = wronskian_direct(&expanded);
        let lc = wronskian_leading_coefficient(&bases, &rows).unwrap();
        match direct.leading_coefficient() {
            Some(want) => prop_assert_eq!(&lc, want),
            None => prop_assert!(num_traits::Zero::is_zero(&lc)),
        }
    }

    #[test]
    fn determinant_algorithms_agree(cells in prop::collection::vec(prop::collection::vec((-5i64..=5, 0u64..=3), 0..=3), 1..=16)) {
        let n = (cells.len() as f64).sqrt() as usize;
        let matrix: Vec<Vec<SparsePoly>> = (0..n)
            .map(|i| (0..n).map(|j| SparsePoly::from_i64(&cells[i * n + j])).collect())
            .collect();
        prop_assert_eq!(determinant_bareiss(&matrix), determinant_by_permutations(&matrix));
    }

    #[test]
    fn wronskian_direct_matches_laplace(fs in prop::collection::vec(nonzero_poly(3, 5), 1..=4)) {
        prop_assert_eq!(wronskian_direct(&fs), laplace_wronskian(&fs));
    }

    #[test]
    fn scaling(g in nonzero_poly(3, 3), fs in prop::collection::vec(nonzero_poly(3, 4), 1..=3)) {
        prop_assert!(scaling_check(&g, &fs));
    }

    #[test]
    fn frobenius(fs in prop::collection::vec(nonzero_poly(4, 5), 1..=4)) {
        prop_assume!((1..=fs.len()).all(|i| !laplace_wronskian(&fs[..i]).is_zero()));
        prop_assert!(frobenius_check(&fs).unwrap());
    }
}

#[test]
fn t_matrix_is_square() {
    let bases = vec![SparsePoly::from_coeffs(&[1, 2]), SparsePoly::from_coeffs(&[0, 0, 1])];
    let rows = vec![
        PowerProduct::from_u64(&[1, 0]),
        PowerProduct::from_u64(&[0, 1]),
        PowerProduct::from_u64(&[2, 2]),
    ];
    let t = t_matrix(&bases, &rows, 3).unwrap();
    assert_eq!(t.len(), 3);
    assert!(t.iter().all(|r| r.len() == 3));
    // row 1 holds the undifferentiated products, fully factored out
    assert!(t[0].iter().all(|c| *c == SparsePoly::one()));
}
