//! The default weight catalog and the fixed random seed.

use num_traits::Signed;

use crate::quiver::{LambdaTuple, Weights};

/// Seed for every pseudorandom sample unless overridden.
pub const DEFAULT_SEED: u64 = 1729;

/// Weight tuples covering positive, zero and negative `χ_A`.
pub const CATALOG: &[&str] = &[
    "2,2,2", "2,2,3", "2,3,3", "2,3,4", "3,3,3", "2,4,4", "2,3,6", "2,2,2,2", "2,3,7", "2,4,5", "3,3,4",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub weights: Weights,
    pub lambda: Option<LambdaTuple>,
}

impl CatalogEntry {
    pub fn new(weights: Weights, lambda: Option<LambdaTuple>) -> Self {
        CatalogEntry { weights, lambda }
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG
        .iter()
        .map(|s| {
            let weights: Weights = s.parse().expect("catalog weights are valid");
            let lambda = (weights.r() == 4).then(|| "inf,0,1,-1".parse().expect("catalog lambda is valid"));
            CatalogEntry { weights, lambda }
        })
        .collect()
}

/// Catalog entries with `χ_A > 0`.
pub fn spherical() -> Vec<CatalogEntry> {
    catalog().into_iter().filter(|e| e.weights.chi().is_positive()).collect()
}
