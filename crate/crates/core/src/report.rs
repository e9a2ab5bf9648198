//! Serializable summaries. Every number is written as a decimal string so
//! that arbitrary-precision values survive a JSON round trip.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_dense, bound_sparse, certified_summary, CertifiedSummary};
use crate::error::Result;
use crate::limits::Limits;
use crate::pit::{certificate_check, pit_blackbox, pit_whitebox, Model, PitVerdict, Reduction};
use crate::poly::Coefficient;
use crate::sps::SpsInstance;

/// A number written in base 10: an integer or a `p/q` rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decimal(pub String);

impl Decimal {
    pub fn as_biguint(&self) -> Option<BigUint> {
        self.0.parse().ok()
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

macro_rules! decimal_from {
    ($($t:ty),*) => {$(
        impl From<$t> for Decimal {
            fn from(v: $t) -> Self {
                Decimal(v.to_string())
            }
        }
        impl From<&$t> for Decimal {
            fn from(v: &$t) -> Self {
                Decimal(v.to_string())
            }
        }
    )*};
}

decimal_from!(usize, u64, BigUint, BigInt, Coefficient);

/// A computed value or the reason it is missing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Entry {
    Value(Decimal),
    NotApplicable(String),
}

impl Entry {
    pub fn value(v: impl Into<Decimal>) -> Self {
        Entry::Value(v.into())
    }

    pub fn missing(reason: impl Into<String>) -> Self {
        Entry::NotApplicable(reason.into())
    }

    pub fn as_biguint(&self) -> Option<BigUint> {
        match self {
            Entry::Value(d) => d.as_biguint(),
            Entry::NotApplicable(_) => None,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Value(d) => write!(f, "{d}"),
            Entry::NotApplicable(r) => write!(f, "n/a ({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependencyReport {
    pub row: Decimal,
    pub combination: Vec<Decimal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub rows: Vec<Vec<Decimal>>,
    pub row_coeffs: Vec<Decimal>,
    pub basis: Vec<Decimal>,
    pub dependencies: Vec<DependencyReport>,
    pub basis_coeffs: Vec<Decimal>,
}

impl From<&Reduction> for CertificateReport {
    fn from(r: &Reduction) -> Self {
        CertificateReport {
            rows: r
                .rows
                .iter()
                .map(|row| row.exponents.iter().map(Decimal::from).collect())
                .collect(),
            row_coeffs: r.row_coeffs.iter().map(Decimal::from).collect(),
            basis: r.basis.iter().map(Decimal::from).collect(),
            dependencies: r
                .dependencies
                .iter()
                .map(|d| DependencyReport {
                    row: d.row.into(),
                    combination: d.combination.iter().map(Decimal::from).collect(),
                })
                .collect(),
            basis_coeffs: r.basis_coeffs.iter().map(Decimal::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    /// `"zero"` or `"nonzero"`.
    pub verdict: String,
    pub witness: Option<Decimal>,
    pub queries: Decimal,
    pub bound: Option<Decimal>,
    pub certificate: Option<CertificateReport>,
    pub certificate_verified: Option<bool>,
}

impl VerdictReport {
    pub fn new(v: &PitVerdict, certificate_verified: Option<bool>) -> Self {
        VerdictReport {
            verdict: if v.is_zero { "zero" } else { "nonzero" }.into(),
            witness: v.witness.as_ref().map(Decimal::from),
            queries: v.queries.into(),
            bound: v.bound.as_ref().map(Decimal::from),
            certificate: v.certificate.as_ref().map(CertificateReport::from),
            certificate_verified,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.verdict == "zero"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootReport {
    pub exact_count: Entry,
    pub a_priori_sparse: Entry,
    pub a_priori_dense: Entry,
    pub certified_upsilon: Entry,
    pub certified_main3: Entry,
    pub pit_blackbox: Option<VerdictReport>,
    pub pit_whitebox: Option<VerdictReport>,
}

impl RootReport {
    /// Bounds that fall below the exact count. Empty unless something is
    /// wrong with the implementation.
    pub fn violations(&self) -> Vec<String> {
        let Some(exact) = self.exact_count.as_biguint() else {
            return Vec::new();
        };
        [
            ("a_priori_sparse", &self.a_priori_sparse),
            ("a_priori_dense", &self.a_priori_dense),
            ("certified_upsilon", &self.certified_upsilon),
            ("certified_main3", &self.certified_main3),
        ]
        .into_iter()
        .filter_map(|(name, e)| {
            e.as_biguint()
                .filter(|b| *b < exact)
                .map(|b| format!("{name} = {b} < exact count {exact}"))
        })
        .collect()
    }
}

/// What [`root_report`] should compute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Expand the instance and count its roots exactly.
    pub exact: bool,
    pub certified: bool,
    pub blackbox: Option<Model>,
    pub whitebox: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            exact: true,
            certified: true,
            blackbox: Some(Model::Dense),
            whitebox: true,
        }
    }
}

const ZERO_INSTANCE: &str = "instance is identically zero";

/// Fills a [`RootReport`]. Resource errors propagate.
pub fn root_report(inst: &SpsInstance, limits: &Limits, opts: &ReportOptions) -> Result<RootReport> {
    let k = inst.k() as u64;
    let m = inst.m() as u64;
    let skipped = || Entry::missing("not requested");
    let summary: Option<Option<CertifiedSummary>> = if opts.exact || opts.certified {
        Some(certified_summary(inst, limits)?)
    } else {
        None
    };
    let (exact_count, certified_upsilon, certified_main3) = match &summary {
        None => (skipped(), skipped(), skipped()),
        Some(None) => (
            Entry::missing(ZERO_INSTANCE),
            Entry::missing(ZERO_INSTANCE),
            Entry::missing(ZERO_INSTANCE),
        ),
        Some(Some(s)) => (
            if opts.exact { Entry::value(s.exact_count) } else { skipped() },
            if opts.certified { Entry::value(s.analysis.upsilon_bound()) } else { skipped() },
            if opts.certified { Entry::value(s.analysis.main3_bound()) } else { skipped() },
        ),
    };
    let pit_blackbox = opts
        .blackbox
        .map(|model| pit_blackbox(inst, model, limits).map(|v| VerdictReport::new(&v, None)))
        .transpose()?;
    let pit_whitebox = if opts.whitebox {
        let v = pit_whitebox(inst, limits)?;
        let ok = certificate_check(inst, &v, &limits.budget)?;
        Some(VerdictReport::new(&v, Some(ok)))
    } else {
        None
    };
    Ok(RootReport {
        exact_count,
        a_priori_sparse: Entry::value(bound_sparse(k, m, inst.t().max(1) as u64)?),
        a_priori_dense: Entry::value(bound_dense(k, m, &inst.d())),
        certified_upsilon,
        certified_main3,
        pit_blackbox,
        pit_whitebox,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCase {
    pub case: Decimal,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub cases: Decimal,
    pub failures: Vec<SuiteCase>,
}

/// Top-level output of the command-line tool.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Canonical instance text, when one was read.
    pub instance: Option<String>,
    pub roots: Option<RootReport>,
    /// Extra named values, e.g. a Wronskian or generated statistics.
    pub values: BTreeMap<String, String>,
    /// Milliseconds per stage. Wall-clock, so not reproducible.
    pub timing_ms: BTreeMap<String, Decimal>,
    pub suite: Option<SuiteReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;

    #[test]
    fn report_round_trips_through_json() {
        let inst = SpsInstance::from_i64(
            vec![SparsePoly::from_coeffs(&[0, 1]), SparsePoly::from_coeffs(&[1, 1])],
            &[(1, &[2, 0]), (-1, &[0, 1])],
        )
        .unwrap();
        let roots = root_report(&inst, &Limits::default(), &ReportOptions::default()).unwrap();
        assert_eq!(roots.exact_count, Entry::value(2usize));
        assert!(roots.violations().is_empty());
        let report = Report {
            command: "bound".into(),
            instance: Some(inst.serialize()),
            roots: Some(roots),
            ..Report::default()
        };
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"exact_count\":{\"value\":\"2\"}"), "{json}");
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn zero_instance_report() {
        let inst = SpsInstance::from_i64(vec![SparsePoly::from_coeffs(&[1, 1])], &[(2, &[3]), (-2, &[3])]).unwrap();
        let r = root_report(&inst, &Limits::default(), &ReportOptions::default()).unwrap();
        assert_eq!(r.exact_count, Entry::missing(ZERO_INSTANCE));
        assert!(r.pit_blackbox.unwrap().is_zero());
        let wb = r.pit_whitebox.unwrap();
        assert!(wb.is_zero());
        assert_eq!(wb.certificate_verified, Some(true));
    }
}
