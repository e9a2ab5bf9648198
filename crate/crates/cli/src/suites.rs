//! Randomized self-checks behind `wronsk verify`. Each case compares a
//! fast route against an independent one; all draws come from the seed.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wronsk_core::bounds::{analyze_family, bound_dense, bound_sparse, certified_summary};
use wronsk_core::diffpower::power_derivative;
use wronsk_core::pit::{certificate_check, pit_blackbox, pit_whitebox};
use wronsk_core::realroots::count_real_roots;
use wronsk_core::report::{Decimal, Report, SuiteCase, SuiteReport};
use wronsk_core::sps::{optimal_instance, random_instance, ForcedZero};
use wronsk_core::wronskian::{factored_wronskian, frobenius_check, wronskian_direct};
use wronsk_core::{InstanceParams, Limits, Model, PowerProduct, SparsePoly};

use crate::{Context, Failure, Output, Suite};

type CaseResult = Result<(), String>;

fn random_poly(rng: &mut ChaCha8Rng, max_terms: usize, max_deg: u64, coeff_max: i64) -> SparsePoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let terms: Vec<(i64, u64)> = (0..n)
            .map(|_| (rng.gen_range(-coeff_max..=coeff_max), rng.gen_range(0..=max_deg)))
            .collect();
        let p = SparsePoly::from_i64(&terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn fail(e: impl ToString) -> String {
    e.to_string()
}

fn power_derivative_case(rng: &mut ChaCha8Rng, _: &Limits) -> CaseResult {
    let f = random_poly(rng, 4, 4, 9);
    let p = rng.gen_range(0..=5usize);
    let alpha = rng.gen_range(p as u64..=8);
    let formula = power_derivative(&f, alpha, p).map_err(fail)?;
    let oracle = f.pow(alpha).derivative(p as u64);
    (formula == oracle)
        .then_some(())
        .ok_or_else(|| format!("derivative {p} of ({f})^{alpha}"))
}

fn factorization_case(rng: &mut ChaCha8Rng, _: &Limits) -> CaseResult {
    let k = rng.gen_range(1..=3usize);
    let m = rng.gen_range(1..=2usize);
    let bases: Vec<SparsePoly> = (0..m).map(|_| random_poly(rng, 3, 3, 5)).collect();
    let rows: Vec<PowerProduct> = (0..k)
        .map(|_| PowerProduct::from_u64(&(0..m).map(|_| rng.gen_range(0..=4)).collect::<Vec<_>>()))
        .collect();
    for s in 1..=k {
        let fw = factored_wronskian(&bases, &rows, s).map_err(fail)?;
        let shifted = rows[..s]
            .iter()
            .map(|r| r.expand(&bases, s as u64))
            .collect::<Result<Vec<_>, _>>()
            .map_err(fail)?;
        if fw.reconstruct(&bases).map_err(fail)? != wronskian_direct(&shifted) {
            return Err(format!("prefix {s} of {rows:?}"));
        }
    }
    Ok(())
}

fn frobenius_case(rng: &mut ChaCha8Rng, _: &Limits) -> CaseResult {
    loop {
        let k = rng.gen_range(1..=4usize);
        let fs: Vec<SparsePoly> = (0..k).map(|_| random_poly(rng, 4, 5, 7)).collect();
        if (1..=k).any(|i| wronskian_direct(&fs[..i]).is_zero()) {
            continue;
        }
        let fs_text = || fs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        return match frobenius_check(&fs) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("identity fails for [{}]", fs_text())),
            Err(e) => Err(format!("[{}]: {e}", fs_text())),
        };
    }
}

fn random_params(rng: &mut ChaCha8Rng, forced_zero: ForcedZero) -> InstanceParams {
    InstanceParams {
        k: rng.gen_range(1..=3),
        m: rng.gen_range(1..=2),
        t: rng.gen_range(1..=3),
        d: rng.gen_range(1..=3),
        alpha_max: rng.gen_range(1..=3),
        coeff_max: 6,
        seed: rng.gen(),
        forced_zero,
    }
}

fn soundness_case(rng: &mut ChaCha8Rng, limits: &Limits) -> CaseResult {
    let inst = random_instance(&random_params(rng, ForcedZero::Off));
    let Some(s) = certified_summary(&inst, limits).map_err(fail)? else {
        return Ok(());
    };
    let exact = s.exact_count;
    let (k, m) = (inst.k() as u64, inst.m() as u64);
    let sparse = bound_sparse(k, m, inst.t() as u64).map_err(fail)?;
    let dense = bound_dense(k, m, &inst.d());
    let checks = [
        ("sparse", BigUint::from(exact) <= sparse),
        ("dense", BigUint::from(exact) <= dense),
        ("upsilon", exact <= s.analysis.upsilon_bound()),
        ("main3", exact <= s.analysis.main3_bound()),
        ("interval", s.heart.holds()),
    ];
    match checks.iter().find(|(_, ok)| !ok) {
        None => Ok(()),
        Some((name, _)) => Err(format!("{name} bound below {exact} roots of\n{inst}")),
    }
}

fn pit_case(rng: &mut ChaCha8Rng, limits: &Limits, index: usize) -> CaseResult {
    let forced_zero = match index % 4 {
        0 => ForcedZero::NegatedDuplicate,
        2 => ForcedZero::HiddenRelation,
        _ => ForcedZero::Off,
    };
    let inst = random_instance(&random_params(rng, forced_zero));
    let oracle = inst.expand(&limits.budget).map_err(fail)?.is_zero();
    let bb = pit_blackbox(&inst, Model::Dense, limits).map_err(fail)?;
    let wb = pit_whitebox(&inst, limits).map_err(fail)?;
    let verified = certificate_check(&inst, &wb, &limits.budget).map_err(fail)?;
    let bound = bb.bound.clone().unwrap_or_default();
    if bb.is_zero != oracle || wb.is_zero != oracle {
        Err(format!(
            "oracle {oracle}, blackbox {}, whitebox {} on\n{inst}",
            bb.is_zero, wb.is_zero
        ))
    } else if BigUint::from(bb.queries) > bound + 1u32 {
        Err(format!("{} queries on\n{inst}", bb.queries))
    } else if !verified {
        Err(format!("certificate rejected on\n{inst}"))
    } else if forced_zero != ForcedZero::Off && !oracle {
        Err(format!("forced-zero instance is nonzero:\n{inst}"))
    } else {
        Ok(())
    }
}

/// The fixed grid k in {2, 3}, p in {1, 2, 3}; `index` picks the cell.
fn optimality_case(limits: &Limits, index: usize) -> CaseResult {
    let (k, p) = (2 + index / 3, 1 + index % 3);
    let opt = optimal_instance(k, p).map_err(fail)?;
    let g = opt.instance.expand(&limits.budget).map_err(fail)?;
    let f = &opt.instance.bases()[0];
    let z_g = count_real_roots(&g).map_err(fail)?;
    let z_f = count_real_roots(f).map_err(fail)?;
    let z_ff = count_real_roots(&(f * &f.derivative(1))).map_err(fail)?;
    let upsilon = analyze_family(&opt.instance, limits)
        .map_err(fail)?
        .ok_or("optimal instance expanded to zero")?
        .upsilon
        .size;
    if z_g != opt.predicted_roots {
        Err(format!("k={k} p={p}: {z_g} roots, predicted {}", opt.predicted_roots))
    } else if upsilon != z_ff || upsilon != opt.predicted_upsilon {
        Err(format!("k={k} p={p}: |Upsilon| = {upsilon}, Z(ff') = {z_ff}"))
    } else if z_g < (1 + upsilon) * (k - 1) + z_f {
        Err(format!("k={k} p={p}: {z_g} roots is below the tight count"))
    } else {
        Ok(())
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::PowerDerivative => "power-derivative",
        Suite::Factorization => "factorization",
        Suite::Frobenius => "frobenius",
        Suite::Optimality => "optimality",
        Suite::Soundness => "soundness",
        Suite::PitAgreement => "pit-agreement",
    }
}

pub fn verify(ctx: &Context, suite: Suite, cases: usize) -> Result<Output, Failure> {
    let name = suite_name(suite);
    let cases = if suite == Suite::Optimality { cases.min(6) } else { cases };
    let start = std::time::Instant::now();
    let mut failures = Vec::new();
    for i in 0..cases {
        // one stream per case so a failure replays from (seed, case)
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
        rng.set_stream(i as u64);
        let outcome = match suite {
            Suite::PowerDerivative => power_derivative_case(&mut rng, &ctx.limits),
            Suite::Factorization => factorization_case(&mut rng, &ctx.limits),
            Suite::Frobenius => frobenius_case(&mut rng, &ctx.limits),
            Suite::Soundness => soundness_case(&mut rng, &ctx.limits),
            Suite::PitAgreement => pit_case(&mut rng, &ctx.limits, i),
            Suite::Optimality => optimality_case(&ctx.limits, i),
        };
        if let Err(detail) = outcome {
            failures.push(SuiteCase {
                case: i.into(),
                passed: false,
                detail,
            });
        }
    }
    let passed = failures.is_empty();
    let mut lines = vec![format!(
        "suite {name}: {} ({} cases, {} failures)",
        if passed { "PASS" } else { "FAIL" },
        cases,
        failures.len()
    )];
    for f in failures.iter().take(10) {
        lines.push(format!("  case {}: {}", f.case, f.detail));
    }
    let mut report = Report {
        command: "verify".into(),
        ..Report::default()
    };
    report.timing_ms.insert(
        name.into(),
        Decimal(format!("{:.3}", start.elapsed().as_secs_f64() * 1000.0)),
    );
    report.suite = Some(SuiteReport {
        suite: name.into(),
        passed,
        cases: cases.into(),
        failures,
    });
    Ok(Output {
        report,
        lines,
        failure: (!passed).then_some(Failure::SuiteFailed),
    })
}
