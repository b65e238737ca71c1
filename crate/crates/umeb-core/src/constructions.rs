//! UMEB constructions: hole patterns, column partitions, and direct sums.
//!
//! Both constructions emit orbits of the form
//! `(1/sqrt(d)) * sum_m w^(n*m) |m>|col(m)>` where `w = exp(2*pi*i/d)` and
//! `col` is an injective row-to-column walk. Distinct phase indices n give
//! orthogonal states over the same walk; distinct walks never share a
//! column in the same row, which makes entire orbit families orthogonal.

use serde::{Deserialize, Serialize};

use crate::correspondence::PureState;
use crate::error::{Error, Result};
use crate::linalg::root_of_unity;
use crate::C64;

/// Hole pattern: `d` forbidden positions in a d x d' matrix, one per row,
/// confined to `N < d` distinct columns.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HolePattern {
    d: usize,
    d_prime: usize,
    /// One (row, col) pair per row, sorted by row.
    holes: Vec<(usize, usize)>,
}

impl HolePattern {
    pub fn new(d: usize, d_prime: usize, holes: Vec<(usize, usize)>) -> Result<Self> {
        if d < 2 || d >= d_prime {
            return Err(Error::DimensionOrder { d, d_prime });
        }
        if holes.len() != d {
            return Err(Error::WrongHoleCount {
                d,
                got: holes.len(),
            });
        }
        let mut col_of_row = vec![None; d];
        for &(row, col) in &holes {
            if row >= d {
                return Err(Error::HoleRowOutOfRange { row, d });
            }
            if col >= d_prime {
                return Err(Error::ColumnOutOfRange { col, d_prime });
            }
            if col_of_row[row].replace(col).is_some() {
                return Err(Error::DuplicateHoleRow(row));
            }
        }
        let mut distinct = col_of_row
            .iter()
            .map(|c| c.expect("every row filled"))
            .collect::<Vec<_>>();
        distinct.sort_unstable();
        distinct.dedup();
        let n_cols = distinct.len();
        if n_cols >= d {
            return Err(Error::TooManyHoleColumns { n_cols, d });
        }
        let holes = (0..d)
            .map(|row| (row, col_of_row[row].expect("every row filled")))
            .collect();
        Ok(Self { d, d_prime, holes })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    /// Holes sorted by row, one per row.
    pub fn holes(&self) -> &[(usize, usize)] {
        &self.holes
    }

    pub fn hole_column(&self, row: usize) -> usize {
        self.holes[row].1
    }

    /// Number of distinct hole columns.
    pub fn n_cols(&self) -> usize {
        let mut cols: Vec<usize> = self.holes.iter().map(|&(_, c)| c).collect();
        cols.sort_unstable();
        cols.dedup();
        cols.len()
    }
}

/// Staircase normal form of a hole pattern.
///
/// `row_order[i]` is the original row sitting at canonical row `i`, and
/// `col_order[c]` the original column at canonical column `c`. After the
/// permutations the hole of canonical row `i` sits at column `b[i]`, with
/// `b[0] = 0` and consecutive steps of 0 or 1; holes occupy canonical
/// columns `0..n_cols`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CanonicalHoleForm {
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
    pub b: Vec<usize>,
    pub n_cols: usize,
}

/// Normal form of a hole pattern: rows are grouped by hole column in
/// order of first appearance (stable within a group), grouped hole
/// columns map to 0..N, and the remaining columns follow in their
/// original relative order.
pub fn canonicalize_holes(pattern: &HolePattern) -> CanonicalHoleForm {
    let d = pattern.d();
    let d_prime = pattern.d_prime();

    let mut first_row_of_col = vec![usize::MAX; d_prime];
    for row in 0..d {
        let col = pattern.hole_column(row);
        if first_row_of_col[col] == usize::MAX {
            first_row_of_col[col] = row;
        }
    }

    let mut row_order: Vec<usize> = (0..d).collect();
    row_order.sort_by_key(|&row| first_row_of_col[pattern.hole_column(row)]);

    let mut hole_cols_in_group_order = Vec::new();
    for &row in &row_order {
        let col = pattern.hole_column(row);
        if !hole_cols_in_group_order.contains(&col) {
            hole_cols_in_group_order.push(col);
        }
    }
    let n_cols = hole_cols_in_group_order.len();

    let mut col_order = hole_cols_in_group_order.clone();
    col_order.extend((0..d_prime).filter(|c| !hole_cols_in_group_order.contains(c)));

    let b: Vec<usize> = row_order
        .iter()
        .map(|&row| {
            hole_cols_in_group_order
                .iter()
                .position(|&c| c == pattern.hole_column(row))
                .expect("hole column present")
        })
        .collect();

    debug_assert_eq!(b[0], 0);
    debug_assert!(b.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1));

    CanonicalHoleForm {
        row_order,
        col_order,
        b,
        n_cols,
    }
}

/// Indicator of the hole in row `k`: 1 when `l` equals `b[k]`, else 0.
pub fn hole_indicator(b: &[usize], k: usize, l: usize) -> Result<usize> {
    if k >= b.len() {
        return Err(Error::RowIndexOutOfRange { k, d: b.len() });
    }
    Ok(usize::from(b[k] == l))
}

/// Column walk of the `j`-th orbit over a staircase hole vector `b`:
/// starts at `j + 1` and steps cyclically by one column per row, hopping
/// an extra column whenever the step would land on that row's hole.
///
/// The resulting columns are pairwise distinct and avoid every hole, and
/// walks with different `j` differ in every row position.
pub fn t_sequence(b: &[usize], d_prime: usize, j: usize) -> Result<Vec<usize>> {
    if j + 2 > d_prime {
        return Err(Error::GroupIndexOutOfRange {
            j,
            max: d_prime - 2,
        });
    }
    let d = b.len();
    let mut t = Vec::with_capacity(d);
    t.push(j + 1);
    for m in 1..d {
        let step = (t[m - 1] + 1) % d_prime;
        let hop = hole_indicator(b, m, step)?;
        t.push((t[m - 1] + 1 + hop) % d_prime);
    }
    Ok(t)
}

/// Which construction produced a basis, with enough detail to rebuild it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    HolePattern {
        d: usize,
        d_prime: usize,
        holes: Vec<(usize, usize)>,
        canonical: CanonicalHoleForm,
        /// False when the basis is left in staircase coordinates.
        pulled_back: bool,
    },
    BlockPartition {
        d: usize,
        d_prime: usize,
        parts: Vec<usize>,
        remainder: usize,
    },
    Composition {
        column_offset: usize,
        left: Box<Provenance>,
        right: Box<Provenance>,
    },
    Fixture {
        name: String,
    },
    External {
        description: String,
    },
}

/// A state together with its construction indices.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisMember {
    pub label: Vec<usize>,
    pub state: PureState,
}

/// Ordered set of states sharing one ambient space.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisSet {
    d: usize,
    d_prime: usize,
    members: Vec<BasisMember>,
    provenance: Provenance,
}

impl BasisSet {
    pub fn from_members(
        d: usize,
        d_prime: usize,
        members: Vec<BasisMember>,
        provenance: Provenance,
    ) -> Result<Self> {
        for m in &members {
            if m.state.dims() != (d, d_prime) {
                return Err(Error::ShapeMismatch(
                    d,
                    d_prime,
                    m.state.d(),
                    m.state.d_prime(),
                ));
            }
        }
        if members.len() > d * d_prime {
            return Err(Error::TooManyStates {
                count: members.len(),
                dim: d * d_prime,
            });
        }
        Ok(Self {
            d,
            d_prime,
            members,
            provenance,
        })
    }

    pub fn empty(d: usize, d_prime: usize, provenance: Provenance) -> Self {
        Self {
            d,
            d_prime,
            members: Vec::new(),
            provenance,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[BasisMember] {
        &self.members
    }

    pub fn states(&self) -> impl Iterator<Item = &PureState> {
        self.members.iter().map(|m| &m.state)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Columns on which any member has a structurally nonzero amplitude.
    pub fn column_support(&self) -> Vec<usize> {
        let mut used = vec![false; self.d_prime];
        for member in &self.members {
            for (idx, z) in member.state.coeffs().iter().enumerate() {
                if z.norm() > 0.0 {
                    used[idx % self.d_prime] = true;
                }
            }
        }
        (0..self.d_prime).filter(|&l| used[l]).collect()
    }
}

fn orbit_state(d: usize, d_prime: usize, columns: &[usize], n: usize) -> PureState {
    let amp = 1.0 / (d as f64).sqrt();
    let mut coeffs = vec![C64::new(0.0, 0.0); d * d_prime];
    for (m, &col) in columns.iter().enumerate() {
        coeffs[m * d_prime + col] = root_of_unity(d, (n * m) as i64) * amp;
    }
    PureState::new(d, d_prime, coeffs).expect("orbit states are unit vectors")
}

fn holes_basis(pattern: &HolePattern, pull_back: bool) -> BasisSet {
    let d = pattern.d();
    let d_prime = pattern.d_prime();
    let canonical = canonicalize_holes(pattern);
    let identity_rows: Vec<usize> = (0..d).collect();
    let identity_cols: Vec<usize> = (0..d_prime).collect();
    let (rows, cols) = if pull_back {
        (&canonical.row_order, &canonical.col_order)
    } else {
        (&identity_rows, &identity_cols)
    };

    let amp = 1.0 / (d as f64).sqrt();
    let mut members = Vec::with_capacity(d * (d_prime - 1));
    for j in 0..d_prime - 1 {
        let walk = t_sequence(&canonical.b, d_prime, j).expect("j in range");
        // orbit row m sits at physical row rows[m], column cols[walk[m]]
        let columns: Vec<usize> = walk.iter().map(|&t| cols[t]).collect();
        for n in 0..d {
            let mut coeffs = vec![C64::new(0.0, 0.0); d * d_prime];
            for m in 0..d {
                coeffs[rows[m] * d_prime + columns[m]] = root_of_unity(d, (n * m) as i64) * amp;
            }
            let state = PureState::new(d, d_prime, coeffs).expect("orbit states are unit vectors");
            members.push(BasisMember {
                label: vec![j, n],
                state,
            });
        }
    }

    let provenance = Provenance::HolePattern {
        d,
        d_prime,
        holes: pattern.holes().to_vec(),
        canonical,
        pulled_back: pull_back,
    };
    BasisSet::from_members(d, d_prime, members, provenance).expect("within dimension bound")
}

/// The d(d'-1)-member UMEB carried by a hole pattern, expressed in the
/// pattern's own coordinates: every state is exactly zero on every hole.
///
/// The basis is built in staircase coordinates first and then pulled back
/// through the inverse of the canonicalizing permutations.
pub fn umeb_from_holes(pattern: &HolePattern) -> BasisSet {
    holes_basis(pattern, true)
}

/// Same construction left in staircase coordinates.
pub fn umeb_from_holes_canonical(pattern: &HolePattern) -> BasisSet {
    holes_basis(pattern, false)
}

/// Column partition d' = a_1 + ... + a_s + r with every part at least d
/// and 0 < r < d.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartitionSpec {
    d: usize,
    d_prime: usize,
    parts: Vec<usize>,
    r: usize,
}

impl PartitionSpec {
    pub fn new(d: usize, d_prime: usize, parts: Vec<usize>) -> Result<Self> {
        if d < 2 || d >= d_prime {
            return Err(Error::DimensionOrder { d, d_prime });
        }
        for &part in &parts {
            if part < d {
                return Err(Error::PartTooSmall { part, d });
            }
        }
        let sum: usize = parts.iter().sum();
        if sum >= d_prime {
            return Err(Error::PartitionSum { sum, d_prime });
        }
        let r = d_prime - sum;
        if r >= d {
            return Err(Error::RemainderOutOfRange { r: r as isize, d });
        }
        Ok(Self {
            d,
            d_prime,
            parts,
            r,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn d_prime(&self) -> usize {
        self.d_prime
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn remainder(&self) -> usize {
        self.r
    }

    /// Starting column of each block: prefix sums of the parts.
    pub fn block_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.parts.len());
        let mut acc = 0;
        for &part in &self.parts {
            offsets.push(acc);
            acc += part;
        }
        offsets
    }

    /// Number of states the construction yields: d * (d' - r).
    pub fn member_count(&self) -> usize {
        self.d * (self.d_prime - self.r)
    }
}

/// The d(d'-r)-member UMEB carried by a column partition: block j hosts
/// the orbits `m -> b_j + ((l + m) mod a_j)` for each shift l, and the
/// last r columns stay untouched. States are ordered by (block, shift,
/// phase); labels record (shift, block, phase).
pub fn umeb_from_partition(spec: &PartitionSpec) -> BasisSet {
    let d = spec.d();
    let d_prime = spec.d_prime();
    let offsets = spec.block_offsets();

    let mut members = Vec::with_capacity(spec.member_count());
    for (j, (&part, &offset)) in spec.parts().iter().zip(&offsets).enumerate() {
        for l in 0..part {
            for n in 0..d {
                let columns: Vec<usize> = (0..d).map(|m| offset + (l + m) % part).collect();
                let state = orbit_state(d, d_prime, &columns, n);
                members.push(BasisMember {
                    label: vec![l, j, n],
                    state,
                });
            }
        }
    }

    let provenance = Provenance::BlockPartition {
        d,
        d_prime,
        parts: spec.parts().to_vec(),
        remainder: spec.remainder(),
    };
    BasisSet::from_members(d, d_prime, members, provenance).expect("within dimension bound")
}

/// All partition specs for the given dimensions, parts as non-increasing
/// multisets, ordered lexicographically by (remainder, parts).
pub fn enumerate_partitions(d: usize, d_prime: usize) -> Result<Vec<PartitionSpec>> {
    if d < 2 || d >= d_prime {
        return Err(Error::DimensionOrder { d, d_prime });
    }
    let mut specs = Vec::new();
    for r in 1..d {
        if d_prime < r + d {
            continue;
        }
        let total = d_prime - r;
        let mut group = Vec::new();
        let mut current = Vec::new();
        descending_partitions(total, total, d, &mut current, &mut group);
        group.sort();
        for parts in group {
            specs.push(PartitionSpec::new(d, d_prime, parts).expect("enumerated parts are valid"));
        }
    }
    Ok(specs)
}

fn descending_partitions(
    remaining: usize,
    max_part: usize,
    min_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= min_part {
        current.push(part);
        descending_partitions(remaining - part, part, min_part, current, out);
        current.pop();
        part -= 1;
    }
}

/// Ordered variant: every arrangement of parts counts separately, since
/// distinct block layouts produce distinct bases.
pub fn enumerate_compositions(d: usize, d_prime: usize) -> Result<Vec<PartitionSpec>> {
    if d < 2 || d >= d_prime {
        return Err(Error::DimensionOrder { d, d_prime });
    }
    let mut specs = Vec::new();
    for r in 1..d {
        if d_prime < r + d {
            continue;
        }
        let total = d_prime - r;
        let mut group = Vec::new();
        let mut current = Vec::new();
        compositions(total, d, &mut current, &mut group);
        group.sort();
        for parts in group {
            specs.push(PartitionSpec::new(d, d_prime, parts).expect("enumerated parts are valid"));
        }
    }
    Ok(specs)
}

fn compositions(
    remaining: usize,
    min_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in min_part..=remaining {
        current.push(part);
        compositions(remaining - part, min_part, current, out);
        current.pop();
    }
}

/// Direct sum of two bases over the same row dimension: the right basis
/// is shifted `column_offset` columns to the right, and the shifted
/// column supports must not intersect the left ones. Orthonormality is
/// preserved exactly because the supports are disjoint.
pub fn compose_direct_sum(
    left: &BasisSet,
    right: &BasisSet,
    column_offset: usize,
) -> Result<BasisSet> {
    if left.d() != right.d() {
        return Err(Error::ComposeDimensionMismatch(left.d(), right.d()));
    }
    let d = left.d();
    let width = left.d_prime().max(column_offset + right.d_prime());

    let left_support = left.column_support();
    for col in right.column_support() {
        let shifted = col + column_offset;
        if left_support.contains(&shifted) {
            return Err(Error::OverlappingSupports(shifted));
        }
    }

    let mut members = Vec::with_capacity(left.len() + right.len());
    for member in left.members() {
        members.push(BasisMember {
            label: member.label.clone(),
            state: widen(&member.state, width, 0),
        });
    }
    for member in right.members() {
        members.push(BasisMember {
            label: member.label.clone(),
            state: widen(&member.state, width, column_offset),
        });
    }

    let provenance = Provenance::Composition {
        column_offset,
        left: Box::new(left.provenance().clone()),
        right: Box::new(right.provenance().clone()),
    };
    BasisSet::from_members(d, width, members, provenance)
}

fn widen(state: &PureState, width: usize, column_offset: usize) -> PureState {
    let (d, d_prime) = state.dims();
    let mut coeffs = vec![C64::new(0.0, 0.0); d * width];
    for k in 0..d {
        for l in 0..d_prime {
            coeffs[k * width + l + column_offset] = state.coeff(k, l);
        }
    }
    PureState::raw(d, width, coeffs).expect("widened state keeps its norm")
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::NotAPermutation { len: perm.len(), n });
    }
    for &i in perm {
        if i >= n || seen[i] {
            return Err(Error::NotAPermutation { len: perm.len(), n });
        }
        seen[i] = true;
    }
    Ok(())
}

/// Relabel rows by `row_perm` and columns by `col_perm` in every member:
/// the amplitude of |k>|l'> moves to `|row_perm(k)>|col_perm(l)'>`.
pub fn permute_states(
    basis: &BasisSet,
    row_perm: &[usize],
    col_perm: &[usize],
) -> Result<BasisSet> {
    let (d, d_prime) = (basis.d(), basis.d_prime());
    check_permutation(row_perm, d)?;
    check_permutation(col_perm, d_prime)?;
    let members = basis
        .members()
        .iter()
        .map(|member| {
            let mut coeffs = vec![C64::new(0.0, 0.0); d * d_prime];
            for k in 0..d {
                for l in 0..d_prime {
                    coeffs[row_perm[k] * d_prime + col_perm[l]] = member.state.coeff(k, l);
                }
            }
            let state = PureState::raw(d, d_prime, coeffs).expect("permutation keeps the norm");
            BasisMember {
                label: member.label.clone(),
                state,
            }
        })
        .collect();
    BasisSet::from_members(d, d_prime, members, basis.provenance().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::state_inner;

    fn pattern_5x6() -> HolePattern {
        HolePattern::new(5, 6, vec![(0, 3), (1, 1), (2, 3), (3, 5), (4, 3)]).unwrap()
    }

    #[test]
    fn canonical_form_of_scattered_pattern() {
        let canon = canonicalize_holes(&pattern_5x6());
        assert_eq!(canon.row_order, vec![0, 2, 4, 1, 3]);
        assert_eq!(canon.col_order, vec![3, 1, 5, 0, 2, 4]);
        assert_eq!(canon.b, vec![0, 0, 0, 1, 2]);
        assert_eq!(canon.n_cols, 3);
    }

    #[test]
    fn canonical_form_of_single_column_pattern() {
        let p = HolePattern::new(3, 4, vec![(0, 0), (1, 0), (2, 0)]).unwrap();
        let canon = canonicalize_holes(&p);
        assert_eq!(canon.row_order, vec![0, 1, 2]);
        assert_eq!(canon.col_order, vec![0, 1, 2, 3]);
        assert_eq!(canon.b, vec![0, 0, 0]);
    }

    #[test]
    fn canonical_form_small_case() {
        let p = HolePattern::new(3, 4, vec![(0, 2), (1, 0), (2, 2)]).unwrap();
        let canon = canonicalize_holes(&p);
        assert_eq!(canon.b, vec![0, 0, 1]);
        assert_eq!(canon.row_order, vec![0, 2, 1]);
    }

    #[test]
    fn pattern_validation_errors() {
        assert!(matches!(
            HolePattern::new(3, 4, vec![(0, 0), (0, 1), (2, 2)]),
            Err(Error::DuplicateHoleRow(0))
        ));
        assert!(matches!(
            HolePattern::new(3, 4, vec![(0, 0), (1, 1), (2, 2)]),
            Err(Error::TooManyHoleColumns { n_cols: 3, d: 3 })
        ));
        assert!(matches!(
            HolePattern::new(3, 4, vec![(0, 0), (1, 0)]),
            Err(Error::WrongHoleCount { d: 3, got: 2 })
        ));
        assert!(matches!(
            HolePattern::new(3, 3, vec![(0, 0), (1, 0), (2, 0)]),
            Err(Error::DimensionOrder { .. })
        ));
        assert!(matches!(
            HolePattern::new(1, 3, vec![(0, 0)]),
            Err(Error::DimensionOrder { .. })
        ));
        assert!(matches!(
            HolePattern::new(3, 4, vec![(0, 0), (1, 0), (2, 7)]),
            Err(Error::ColumnOutOfRange { col: 7, .. })
        ));
    }

    #[test]
    fn hole_indicator_basics() {
        let b = [0, 0, 0, 1, 2];
        assert_eq!(hole_indicator(&b, 3, 1).unwrap(), 1);
        assert_eq!(hole_indicator(&b, 0, 5).unwrap(), 0);
        for (k, &bk) in b.iter().enumerate() {
            assert_eq!(hole_indicator(&b, k, bk).unwrap(), 1);
        }
        assert!(matches!(
            hole_indicator(&b, 9, 0),
            Err(Error::RowIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn walks_of_the_staircase_pattern() {
        let b = [0, 0, 0, 1, 2];
        assert_eq!(t_sequence(&b, 6, 0).unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(t_sequence(&b, 6, 3).unwrap(), vec![4, 5, 1, 2, 3]);
        assert_eq!(t_sequence(&b, 6, 4).unwrap(), vec![5, 1, 2, 3, 4]);
        assert!(matches!(
            t_sequence(&b, 6, 5),
            Err(Error::GroupIndexOutOfRange { .. })
        ));
    }

    #[test]
    fn hole_basis_size_and_hole_avoidance() {
        let pattern = pattern_5x6();
        let basis = umeb_from_holes(&pattern);
        assert_eq!(basis.len(), 5 * 5);
        for member in basis.members() {
            for &(row, col) in pattern.holes() {
                assert_eq!(member.state.coeff(row, col), C64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn trivial_pattern_needs_no_pullback() {
        let p = HolePattern::new(2, 3, vec![(0, 0), (1, 0)]).unwrap();
        let plain = umeb_from_holes(&p);
        let canonical = umeb_from_holes_canonical(&p);
        assert_eq!(plain.len(), 4);
        for (a, b) in plain.states().zip(canonical.states()) {
            for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                assert!((x - y).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn small_hole_basis_is_orthonormal() {
        let p = HolePattern::new(3, 4, vec![(0, 0), (1, 0), (2, 1)]).unwrap();
        let basis = umeb_from_holes(&p);
        assert_eq!(basis.len(), 9);
        let states: Vec<_> = basis.states().collect();
        for (i, s) in states.iter().enumerate() {
            for (j, t) in states.iter().enumerate() {
                let g = state_inner(s, t).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - C64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn partition_spec_validation() {
        assert!(matches!(
            PartitionSpec::new(3, 10, vec![2, 5]),
            Err(Error::PartTooSmall { part: 2, d: 3 })
        ));
        assert!(matches!(
            PartitionSpec::new(3, 10, vec![4, 6]),
            Err(Error::PartitionSum {
                sum: 10,
                d_prime: 10
            })
        ));
        assert!(matches!(
            PartitionSpec::new(5, 11, vec![5]),
            Err(Error::RemainderOutOfRange { r: 6, d: 5 })
        ));
        assert!(matches!(
            PartitionSpec::new(3, 3, vec![3]),
            Err(Error::DimensionOrder { .. })
        ));
        let ok = PartitionSpec::new(3, 10, vec![4, 5]).unwrap();
        assert_eq!(ok.remainder(), 1);
        assert_eq!(ok.block_offsets(), vec![0, 4]);
        assert_eq!(ok.member_count(), 27);
    }

    #[test]
    fn partition_basis_column_audit() {
        let spec = PartitionSpec::new(3, 10, vec![4, 4]).unwrap();
        let basis = umeb_from_partition(&spec);
        assert_eq!(basis.len(), 24);
        let offsets = spec.block_offsets();
        for member in basis.members() {
            let (l, j, _n) = (member.label[0], member.label[1], member.label[2]);
            let lo = offsets[j];
            let hi = lo + spec.parts()[j];
            for k in 0..3 {
                for col in 0..10 {
                    let amp = member.state.coeff(k, col).norm();
                    if amp > 0.0 {
                        assert!(
                            col >= lo && col < hi,
                            "state ({l},{j}) leaked to column {col}"
                        );
                    }
                }
            }
        }
        // final r columns untouched by every member
        let support = basis.column_support();
        assert_eq!(support, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn partition_enumeration_3_10() {
        let specs = enumerate_partitions(3, 10).unwrap();
        let got: Vec<(Vec<usize>, usize)> = specs
            .iter()
            .map(|s| (s.parts().to_vec(), s.remainder()))
            .collect();
        let expected = vec![
            (vec![3, 3, 3], 1),
            (vec![5, 4], 1),
            (vec![6, 3], 1),
            (vec![9], 1),
            (vec![4, 4], 2),
            (vec![5, 3], 2),
            (vec![8], 2),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn partition_enumeration_small_cases() {
        let specs = enumerate_partitions(5, 6).unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].parts(), &[5]);
        assert_eq!(specs[0].remainder(), 1);
        assert_eq!(specs[0].member_count(), 25);

        let specs = enumerate_partitions(2, 3).unwrap();
        assert_eq!(specs.len(), 1);
        assert_eq!(specs[0].parts(), &[2]);
        assert_eq!(specs[0].remainder(), 1);

        assert!(matches!(
            enumerate_partitions(5, 5),
            Err(Error::DimensionOrder { .. })
        ));
    }

    #[test]
    fn composition_enumeration_counts_orderings() {
        // multisets {3,3,3}, {5,4}, {6,3}, {9} at r=1 and {4,4}, {5,3},
        // {8} at r=2 expand to 6 + 4 arrangements
        let specs = enumerate_compositions(3, 10).unwrap();
        assert_eq!(specs.len(), 10);
        let at_r1 = specs.iter().filter(|s| s.remainder() == 1).count();
        assert_eq!(at_r1, 6);
    }

    #[test]
    fn compose_disjoint_blocks() {
        let spec = PartitionSpec::new(3, 5, vec![4]).unwrap();
        let left = umeb_from_partition(&spec);
        let right = umeb_from_partition(&spec);
        let combined = compose_direct_sum(&left, &right, 5).unwrap();
        assert_eq!(combined.d_prime(), 10);
        assert_eq!(combined.len(), 24);
        let states: Vec<_> = combined.states().collect();
        for (i, s) in states.iter().enumerate() {
            for (j, t) in states.iter().enumerate() {
                let g = state_inner(s, t).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((g - C64::new(expect, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn compose_rejects_overlap() {
        let spec = PartitionSpec::new(3, 5, vec![4]).unwrap();
        let basis = umeb_from_partition(&spec);
        assert!(matches!(
            compose_direct_sum(&basis, &basis, 0),
            Err(Error::OverlappingSupports(_))
        ));
        // offset 4 would interleave: right support 4..8 vs left 0..3 is fine,
        // but offset 3 collides at column 3
        assert!(matches!(
            compose_direct_sum(&basis, &basis, 3),
            Err(Error::OverlappingSupports(3))
        ));
    }

    #[test]
    fn compose_with_empty_is_identity() {
        let spec = PartitionSpec::new(3, 10, vec![4, 5]).unwrap();
        let basis = umeb_from_partition(&spec);
        let empty = BasisSet::empty(
            3,
            10,
            Provenance::External {
                description: "empty".into(),
            },
        );
        let combined = compose_direct_sum(&empty, &basis, 0).unwrap();
        assert_eq!(combined.len(), basis.len());
        for (a, b) in combined.states().zip(basis.states()) {
            assert_eq!(a.coeffs(), b.coeffs());
        }
    }

    #[test]
    fn compose_dimension_mismatch() {
        let a = umeb_from_partition(&PartitionSpec::new(3, 5, vec![4]).unwrap());
        let b = umeb_from_partition(&PartitionSpec::new(2, 3, vec![2]).unwrap());
        assert!(matches!(
            compose_direct_sum(&a, &b, 5),
            Err(Error::ComposeDimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn permute_rejects_non_bijections() {
        let basis = umeb_from_partition(&PartitionSpec::new(2, 3, vec![2]).unwrap());
        assert!(matches!(
            permute_states(&basis, &[0, 0], &[0, 1, 2]),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            permute_states(&basis, &[0, 1], &[0, 1, 3]),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            permute_states(&basis, &[0], &[0, 1, 2]),
            Err(Error::NotAPermutation { .. })
        ));
    }

    #[test]
    fn permutation_preserves_inner_products() {
        let basis = umeb_from_holes(&pattern_5x6());
        let permuted = permute_states(&basis, &[2, 0, 4, 1, 3], &[5, 3, 1, 0, 2, 4]).unwrap();
        for (i, s) in basis.states().enumerate() {
            for (j, t) in basis.states().enumerate() {
                let g0 = state_inner(s, t).unwrap();
                let g1 = state_inner(
                    permuted.states().nth(i).unwrap(),
                    permuted.states().nth(j).unwrap(),
                )
                .unwrap();
                assert!((g0 - g1).norm() < 1e-12);
            }
        }
    }
}
