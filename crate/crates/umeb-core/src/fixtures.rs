//! Reference bases, transcribed term by term from their published tables
//! rather than generated, so they can serve as independent checks on the
//! construction code.

use crate::constructions::{BasisMember, BasisSet, Provenance};
use crate::correspondence::PureState;
use crate::linalg::root_of_unity;
use crate::C64;

/// Build the orbit family over explicit (row, column) term tables: group
/// g and phase index n give the state
/// `(1/sqrt(d)) * sum_pos w^(n*pos) |row(pos)>|col(pos)'>`.
fn from_term_tables(
    d: usize,
    d_prime: usize,
    groups: &[Vec<(usize, usize)>],
    name: &str,
) -> BasisSet {
    let amp = 1.0 / (d as f64).sqrt();
    let mut members = Vec::with_capacity(groups.len() * d);
    for (g, terms) in groups.iter().enumerate() {
        assert_eq!(terms.len(), d);
        for n in 0..d {
            let mut coeffs = vec![C64::new(0.0, 0.0); d * d_prime];
            for (pos, &(row, col)) in terms.iter().enumerate() {
                coeffs[row * d_prime + col] = root_of_unity(d, (n * pos) as i64) * amp;
            }
            let state = PureState::new(d, d_prime, coeffs).expect("fixture states are unit");
            members.push(BasisMember {
                label: vec![g, n],
                state,
            });
        }
    }
    BasisSet::from_members(
        d,
        d_prime,
        members,
        Provenance::Fixture { name: name.into() },
    )
    .expect("fixture sizes are within bounds")
}

fn diagonal_walk(columns: &[usize]) -> Vec<(usize, usize)> {
    columns
        .iter()
        .enumerate()
        .map(|(row, &col)| (row, col))
        .collect()
}

/// Five-member tiles unextendible product basis on C^3 ⊗ C^3.
pub fn upb_tiles_3x3() -> Vec<PureState> {
    let s = 1.0 / 2.0f64.sqrt();
    let mk = |entries: &[(usize, usize, f64)]| {
        let mut coeffs = vec![C64::new(0.0, 0.0); 9];
        for &(k, l, v) in entries {
            coeffs[k * 3 + l] = C64::new(v, 0.0);
        }
        PureState::new(3, 3, coeffs).expect("tiles states are unit")
    };
    let third = 1.0 / 3.0;
    vec![
        // |0> (|0> - |1>) / sqrt(2)
        mk(&[(0, 0, s), (0, 1, -s)]),
        // (|0> - |1>) |2> / sqrt(2)
        mk(&[(0, 2, s), (1, 2, -s)]),
        // |2> (|1> - |2>) / sqrt(2)
        mk(&[(2, 1, s), (2, 2, -s)]),
        // (|1> - |2>) |0> / sqrt(2)
        mk(&[(1, 0, s), (2, 0, -s)]),
        // uniform (|0>+|1>+|2>)(|0>+|1>+|2>) / 3
        mk(&[
            (0, 0, third),
            (0, 1, third),
            (0, 2, third),
            (1, 0, third),
            (1, 1, third),
            (1, 2, third),
            (2, 0, third),
            (2, 1, third),
            (2, 2, third),
        ]),
    ]
}

/// Four-member UMEB on C^2 ⊗ C^3: the two diagonal Bell pairs; the third
/// column is reachable only by product states.
pub fn umeb_2x3() -> BasisSet {
    let s = 1.0 / 2.0f64.sqrt();
    let mk = |terms: &[(usize, usize, f64)]| {
        let mut coeffs = vec![C64::new(0.0, 0.0); 6];
        for &(k, l, v) in terms {
            coeffs[k * 3 + l] = C64::new(v, 0.0);
        }
        PureState::new(2, 3, coeffs).expect("unit")
    };
    let states = vec![
        mk(&[(0, 0, s), (1, 1, s)]),
        mk(&[(0, 0, s), (1, 1, -s)]),
        mk(&[(0, 1, s), (1, 0, s)]),
        mk(&[(0, 1, s), (1, 0, -s)]),
    ];
    let members = states
        .into_iter()
        .enumerate()
        .map(|(i, state)| BasisMember {
            label: vec![i],
            state,
        })
        .collect();
    BasisSet::from_members(
        2,
        3,
        members,
        Provenance::Fixture {
            name: "umeb2x3".into(),
        },
    )
    .expect("within bounds")
}

/// Complete Bell basis of C^2 ⊗ C^2 (a maximally entangled basis, not
/// unextendible). Dropping one member leaves an extendible set.
pub fn bell_basis_2x2() -> BasisSet {
    let s = 1.0 / 2.0f64.sqrt();
    let mk = |terms: &[(usize, usize, f64)]| {
        let mut coeffs = vec![C64::new(0.0, 0.0); 4];
        for &(k, l, v) in terms {
            coeffs[k * 2 + l] = C64::new(v, 0.0);
        }
        PureState::new(2, 2, coeffs).expect("unit")
    };
    let states = vec![
        mk(&[(0, 0, s), (1, 1, s)]),
        mk(&[(0, 0, s), (1, 1, -s)]),
        mk(&[(0, 1, s), (1, 0, s)]),
        mk(&[(0, 1, s), (1, 0, -s)]),
    ];
    let members = states
        .into_iter()
        .enumerate()
        .map(|(i, state)| BasisMember {
            label: vec![i],
            state,
        })
        .collect();
    BasisSet::from_members(
        2,
        2,
        members,
        Provenance::Fixture {
            name: "bell2x2".into(),
        },
    )
    .expect("within bounds")
}

/// 25-member UMEB on C^5 ⊗ C^6 in staircase coordinates: holes at
/// (i, b_i) with b = (0,0,0,1,2).
pub fn example_umeb_5x6_staircase() -> BasisSet {
    let walks = [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 0],
        [3, 4, 5, 0, 1],
        [4, 5, 1, 2, 3],
        [5, 1, 2, 3, 4],
    ];
    let groups: Vec<Vec<(usize, usize)>> = walks.iter().map(|w| diagonal_walk(w)).collect();
    from_term_tables(5, 6, &groups, "ex1-staircase")
}

/// 25-member UMEB on C^5 ⊗ C^6 with holes at rows (0..4) and columns
/// (3, 1, 3, 5, 3): the staircase basis pulled back through the
/// canonicalizing permutations.
pub fn example_umeb_5x6() -> BasisSet {
    let groups: Vec<Vec<(usize, usize)>> = vec![
        vec![(0, 1), (2, 5), (4, 0), (1, 2), (3, 4)],
        vec![(0, 5), (2, 0), (4, 2), (1, 4), (3, 3)],
        vec![(0, 0), (2, 2), (4, 4), (1, 3), (3, 1)],
        vec![(0, 2), (2, 4), (4, 1), (1, 5), (3, 0)],
        vec![(0, 4), (2, 1), (4, 5), (1, 0), (3, 2)],
    ];
    from_term_tables(5, 6, &groups, "ex1")
}

/// Left half of the 50-member UMEB on C^5 ⊗ C^12: staircase walks for
/// b = (0,1,1,1,1) on columns 0..6.
pub fn example_umeb_5x12_left() -> BasisSet {
    let walks = [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 0],
        [3, 4, 5, 0, 2],
        [4, 5, 0, 2, 3],
        [5, 0, 2, 3, 4],
    ];
    let groups: Vec<Vec<(usize, usize)>> = walks.iter().map(|w| diagonal_walk(w)).collect();
    from_term_tables(5, 6, &groups, "ex2-left")
}

/// Right half of the 50-member UMEB on C^5 ⊗ C^12: staircase walks for
/// b = (0,0,0,1,1), shifted onto columns 6..12 (shown here unshifted on
/// a width-6 space).
pub fn example_umeb_5x12_right() -> BasisSet {
    let walks = [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 0],
        [3, 4, 5, 0, 2],
        [4, 5, 1, 2, 3],
        [5, 1, 2, 3, 4],
    ];
    let groups: Vec<Vec<(usize, usize)>> = walks.iter().map(|w| diagonal_walk(w)).collect();
    from_term_tables(5, 6, &groups, "ex2-right")
}

/// 50-member UMEB on C^5 ⊗ C^12: the two width-6 halves side by side.
pub fn example_umeb_5x12() -> BasisSet {
    let left_walks = [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 0],
        [3, 4, 5, 0, 2],
        [4, 5, 0, 2, 3],
        [5, 0, 2, 3, 4],
    ];
    let right_walks = [
        [7, 8, 9, 10, 11],
        [8, 9, 10, 11, 6],
        [9, 10, 11, 6, 8],
        [10, 11, 7, 8, 9],
        [11, 7, 8, 9, 10],
    ];
    let mut groups: Vec<Vec<(usize, usize)>> =
        left_walks.iter().map(|w| diagonal_walk(w)).collect();
    groups.extend(right_walks.iter().map(|w| diagonal_walk(w)));
    from_term_tables(5, 12, &groups, "ex2")
}

/// 27-member UMEB on C^3 ⊗ C^10 from the partition 10 = 4 + 5 + 1.
pub fn example_umeb_3x10_27() -> BasisSet {
    let walks: [[usize; 3]; 9] = [
        [0, 1, 2],
        [1, 2, 3],
        [2, 3, 0],
        [3, 0, 1],
        [4, 5, 6],
        [5, 6, 7],
        [6, 7, 8],
        [7, 8, 4],
        [8, 4, 5],
    ];
    let groups: Vec<Vec<(usize, usize)>> = walks.iter().map(|w| diagonal_walk(w)).collect();
    from_term_tables(3, 10, &groups, "ex3a")
}

/// 24-member UMEB on C^3 ⊗ C^10 from the partition 10 = 4 + 4 + 2.
pub fn example_umeb_3x10_24() -> BasisSet {
    let walks: [[usize; 3]; 8] = [
        [0, 1, 2],
        [1, 2, 3],
        [2, 3, 0],
        [3, 0, 1],
        [4, 5, 6],
        [5, 6, 7],
        [6, 7, 4],
        [7, 4, 5],
    ];
    let groups: Vec<Vec<(usize, usize)>> = walks.iter().map(|w| diagonal_walk(w)).collect();
    from_term_tables(3, 10, &groups, "ex3b")
}
