//! Griesmer bound, weight distributions, named families and best-known
//! table comparison.

mod families;
mod griesmer;
mod lines;
mod table;
mod weights;

pub use families::{direct_sum_wdist, verify_family, FamilyReport, FamilySpec};
pub use griesmer::{
    classify_distance_optimal, defect_upper_bound, griesmer_defect, griesmer_sum,
    optimality_report, DefectCase, GriesmerClass, OptimalityReport, TableClass, TableVerdict,
};
pub use lines::find_avoiding_functional;
pub use table::BestKnownTable;
pub use weights::{
    weight_distribution_enum, weight_distribution_enum_with_limit, weight_distribution_hyperplane,
    weight_distribution_hyperplane_with_limit, WeightDistribution,
};
