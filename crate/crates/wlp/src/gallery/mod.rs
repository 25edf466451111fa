//! Worked applications: simultaneous cores, numerical semigroups, and
//! tableau identities, each expressed through the lifting machinery and
//! cross-checked against direct enumeration.

pub mod cores;
pub mod partitions;
pub mod semigroups;
pub mod tableaux;

pub use cores::{core_polytope, core_size_weight, core_statistics, cores_bruteforce, CoreStats};
pub use partitions::{
    compositions, contingency_bruteforce, kostka_bruteforce, lr_bruteforce, partitions_of,
    partitions_of_bounded, skew_kostka_bruteforce, Partition,
};
pub use semigroups::{
    kunz_polytope, semigroup_series, semigroup_weight_poly, semigroups_bruteforce, SemigroupRoute,
    SemigroupSeriesRow, Semigroup,
};
pub use tableaux::{
    gt_family, gt_polytope, hive_family, hive_polytope, kostka, kostka_max, lr_coefficient,
    lr_identity_check, newell_littlewood, partition_polytope, rsk_check, transportation_polytope,
    GtBorder, HiveEdge, LrIdentityReport, RskReport,
};
