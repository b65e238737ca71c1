//! Shared inputs for the benchmark suite.

use umeb_core::{BasisSet, HolePattern, PartitionSpec};

/// The scattered 5x6 pattern with holes in three columns.
pub fn scattered_5x6() -> HolePattern {
    HolePattern::new(5, 6, vec![(0, 3), (1, 1), (2, 3), (3, 5), (4, 3)]).unwrap()
}

/// A larger pattern at the top of the supported desk scale.
pub fn wide_8x16() -> HolePattern {
    let columns = [2, 9, 2, 9, 13, 2, 13, 9];
    let holes = columns.into_iter().enumerate().collect();
    HolePattern::new(8, 16, holes).unwrap()
}

pub fn partition_3x10() -> PartitionSpec {
    PartitionSpec::new(3, 10, vec![4, 5]).unwrap()
}

pub fn truncated_bell() -> BasisSet {
    let bell = umeb_core::fixtures::bell_basis_2x2();
    BasisSet::from_members(
        2,
        2,
        bell.members()[..3].to_vec(),
        bell.provenance().clone(),
    )
    .unwrap()
}
