mod common;

use num_bigint::BigUint;
use proptest::prelude::*;

use common::int;
use wronsk_core::bounds::{bound_dense, bound_sparse, certified_summary, open_problem_gap};
use wronsk_core::pit::{certificate_check, pit_blackbox, pit_whitebox, Model};
use wronsk_core::realroots::count_real_roots;
use wronsk_core::sps::{optimal_instance, random_instance, ForcedZero, InstanceParams};
use wronsk_core::{Error, Limits, SpsInstance};

fn params() -> impl Strategy<Value = InstanceParams> {
    (1usize..=3, 1usize..=2, 1usize..=3, 1u64..=3, 0u64..=3, any::<u64>(), 0u8..3).prop_map(
        |(k, m, t, d, alpha_max, seed, mode)| InstanceParams {
            k,
            m,
            t,
            d,
            alpha_max,
            coeff_max: 7,
            seed,
            forced_zero: match mode {
                0 => ForcedZero::Off,
                1 => ForcedZero::NegatedDuplicate,
                _ => ForcedZero::HiddenRelation,
            },
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn serialization_round_trip(p in params()) {
        let inst = random_instance(&p);
        let text = inst.serialize();
        let back = SpsInstance::parse(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back.serialize(), text);
    }

    #[test]
    fn identity_tests_agree(p in params()) {
        let inst = random_instance(&p);
        let limits = Limits::default();
        let oracle = inst.expand(&limits.budget).unwrap().is_zero();
        let bb = pit_blackbox(&inst, Model::Dense, &limits).unwrap();
        let wb = pit_whitebox(&inst, &limits).unwrap();
        prop_assert_eq!(bb.is_zero, oracle);
        prop_assert_eq!(wb.is_zero, oracle);
        prop_assert!(certificate_check(&inst, &wb, &limits.budget).unwrap());
        if p.forced_zero != ForcedZero::Off {
            prop_assert!(oracle);
        }
    }

    #[test]
    fn corrupted_certificates_fail(p in params(), bump in 1i64..5) {
        let inst = random_instance(&InstanceParams { forced_zero: ForcedZero::HiddenRelation, ..p });
        let limits = Limits::default();
        let wb = pit_whitebox(&inst, &limits).unwrap();
        let cert = wb.certificate.as_ref().unwrap();
        prop_assume!(!cert.dependencies.is_empty());
        let mut bad = wb.clone();
        let dep = &mut bad.certificate.as_mut().unwrap().dependencies[0];
        dep.combination[0] = &dep.combination[0] + int(bump);
        prop_assert!(!certificate_check(&inst, &bad, &limits.budget).unwrap());
        let mut flipped = wb.clone();
        flipped.is_zero = !flipped.is_zero;
        prop_assert!(!certificate_check(&inst, &flipped, &limits.budget).unwrap());
    }

    #[test]
    fn certified_bounds_are_sound(p in params()) {
        let inst = random_instance(&InstanceParams { forced_zero: ForcedZero::Off, ..p });
        let limits = Limits::default();
        if let Some(s) = certified_summary(&inst, &limits).unwrap() {
            prop_assert!(s.exact_count <= s.analysis.upsilon_bound());
            prop_assert!(s.exact_count <= s.analysis.main3_bound());
            prop_assert!(s.heart.holds());
            for w in &s.analysis.prefixes {
                prop_assert!(w.zero_count <= w.estimate);
            }
            let (k, m) = (inst.k() as u64, inst.m() as u64);
            prop_assert!(BigUint::from(s.exact_count) <= bound_dense(k, m, &inst.d()));
            prop_assert!(BigUint::from(s.exact_count) <= bound_sparse(k, m, inst.t() as u64).unwrap());
        }
    }
}

#[test]
fn a_priori_bounds_are_monotone() {
    for k in 1..=4u64 {
        for m in 1..=3u64 {
            for t in 1..=4u64 {
                let b = bound_sparse(k, m, t).unwrap();
                assert!(bound_sparse(k + 1, m, t).unwrap() > b);
                assert!(bound_sparse(k, m + 1, t).unwrap() > b);
                assert!(bound_sparse(k, m, t + 1).unwrap() > b);
                let d = BigUint::from(t);
                let b = bound_dense(k, m, &d);
                assert!(bound_dense(k + 1, m, &d) > b);
                assert!(bound_dense(k, m + 1, &d) > b);
                assert!(bound_dense(k, m, &(&d + 1u32)) > b);
            }
        }
    }
}

#[test]
fn sparse_bound_is_an_upper_ceiling() {
    // real value of 4ktm + 4 (e (1+t))^(mk^2/2) with f64, far from any integer here
    for (k, m, t) in [(1u64, 1u64, 1u64), (1, 2, 3), (2, 1, 2), (2, 2, 1), (3, 1, 1)] {
        let real = 4.0 * (k * t * m) as f64
            + 4.0 * (std::f64::consts::E * (1 + t) as f64).powf((m * k * k) as f64 / 2.0);
        let got: f64 = bound_sparse(k, m, t).unwrap().to_string().parse().unwrap();
        assert!(got >= real && got < real + 1.0 + real * 1e-12, "({k},{m},{t}): {got} vs {real}");
    }
}

#[test]
fn optimal_instances_match_predictions() {
    let limits = Limits::default();
    for (k, p) in [(2, 1), (2, 4), (3, 1), (4, 2)] {
        let opt = optimal_instance(k, p).unwrap();
        let g = opt.instance.expand(&limits.budget).unwrap();
        assert_eq!(count_real_roots(&g).unwrap(), opt.predicted_roots);
        let s = certified_summary(&opt.instance, &limits).unwrap().unwrap();
        assert_eq!(s.analysis.upsilon.size, opt.predicted_upsilon);
        // the certified bound exceeds the exact count by n - 1
        assert_eq!(s.analysis.upsilon_bound() - s.exact_count, opt.base_roots - 1);
        let gap = open_problem_gap(&opt.instance, &limits).unwrap().unwrap();
        assert_eq!(gap.lhs, opt.predicted_roots);
    }
}

#[test]
fn resource_errors_are_reported() {
    let inst = SpsInstance::parse("bases 1\nf1: 2*x^1 + 1*x^0\nterms 2\n1 : f1^100000\n-1 : f1^100000\n").unwrap();
    let limits = Limits::default();
    assert!(matches!(inst.expand(&limits.budget), Err(Error::ExpansionTooLarge(_))));
    // identical rows merge, so the whitebox test needs no expansion
    assert!(pit_whitebox(&inst, &limits).unwrap().is_zero);
}
