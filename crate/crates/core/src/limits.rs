use crate::sps::ExpansionBudget;

pub const DEFAULT_BASIS_CAP: usize = 5;
pub const DEFAULT_MAX_QUERIES: u64 = 1_000_000;

/// Resource caps shared by the bound and identity-testing pipelines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub budget: ExpansionBudget,
    /// Largest Wronskian order the whitebox reduction may build.
    pub basis_cap: usize,
    /// Largest number of blackbox evaluations.
    pub max_queries: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            budget: ExpansionBudget::default(),
            basis_cap: DEFAULT_BASIS_CAP,
            max_queries: DEFAULT_MAX_QUERIES,
        }
    }
}
