//! Fixed inputs shared by the benchmarks.

use wronsk_core::sps::{random_instance, ForcedZero};
use wronsk_core::{InstanceParams, SparsePoly, SpsInstance};

/// A nonzero random instance with the given shape.
pub fn workload(k: usize, m: usize, seed: u64) -> SpsInstance {
    random_instance(&InstanceParams {
        k,
        m,
        t: 3,
        d: 3,
        alpha_max: 3,
        coeff_max: 9,
        seed,
        forced_zero: ForcedZero::Off,
    })
}

/// A zero instance whose cancellation needs the Wronskian reduction.
pub fn hidden_zero(k: usize, seed: u64) -> SpsInstance {
    random_instance(&InstanceParams {
        k,
        m: 3,
        t: 2,
        d: 2,
        alpha_max: 3,
        coeff_max: 9,
        seed,
        forced_zero: ForcedZero::HiddenRelation,
    })
}

/// `prod_{i=1}^{n} (x - i)`, a polynomial with `n` simple real roots.
pub fn integer_roots(n: i64) -> SparsePoly {
    (1..=n).fold(SparsePoly::one(), |acc, i| &acc * &SparsePoly::from_i64(&[(-i, 0), (1, 1)]))
}
