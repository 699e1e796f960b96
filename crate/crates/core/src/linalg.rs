//! Exact rank and linear dependencies of sparse vectors over Q or F_p.
//!
//! Rows are inserted one at a time into an echelon basis keyed by leading
//! column. Each stored row remembers which input rows it combines, so a row
//! that reduces to zero yields an explicit dependency among the inputs.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::exactnum::{Field, Rational};

pub type SparseRow = BTreeMap<usize, Rational>;

/// `Σ coeff · row[index] = 0` with at least one nonzero coefficient.
pub type Dependency = Vec<(usize, Rational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Independence {
    pub rank: usize,
    pub rows: usize,
    /// The first dependency found, in input order.
    pub dependency: Option<Dependency>,
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        self.dependency.is_none()
    }
}

struct Pivot {
    row: SparseRow,
    combination: SparseRow,
}

/// Incremental row echelon form.
pub struct Echelon {
    field: Field,
    pivots: HashMap<usize, Pivot>,
    inserted: usize,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Self { field, pivots: HashMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns the dependency it completes if it lies in the span
    /// of the rows inserted before it.
    pub fn insert(&mut self, row: &SparseRow) -> Option<Dependency> {
        let index = self.inserted;
        self.inserted += 1;
        let f = &self.field;
        let mut r: SparseRow =
            row.iter().map(|(&c, v)| (c, f.normalize(v.clone()))).filter(|(_, v)| !v.is_zero()).collect();
        let mut comb: SparseRow = BTreeMap::from([(index, Rational::one())]);
        loop {
            let Some((&lead, lead_val)) = r.iter().next() else {
                return Some(comb.into_iter().collect());
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let factor = lead_val.clone();
                    axpy(f, &mut r, &factor, &p.row);
                    axpy(f, &mut comb, &factor, &p.combination);
                }
                None => {
                    let inv = f.inv(lead_val).expect("leading entry is nonzero");
                    for v in r.values_mut() {
                        *v = f.mul(v, &inv);
                    }
                    for v in comb.values_mut() {
                        *v = f.mul(v, &inv);
                    }
                    self.pivots.insert(lead, Pivot { row: r, combination: comb });
                    return None;
                }
            }
        }
    }
}

/// `target -= factor · source`, dropping zeros.
fn axpy(f: &Field, target: &mut SparseRow, factor: &Rational, source: &SparseRow) {
    for (&c, v) in source {
        let delta = f.mul(factor, v);
        let entry = target.entry(c).or_insert_with(Rational::zero);
        *entry = f.sub(entry, &delta);
        if entry.is_zero() {
            target.remove(&c);
        }
    }
}

/// Rank of the rows and the first dependency among them.
pub fn independence(field: &Field, rows: &[SparseRow]) -> Independence {
    let mut ech = Echelon::new(field.clone());
    let mut dependency = None;
    for r in rows {
        if let Some(dep) = ech.insert(r) {
            dependency.get_or_insert(dep);
        }
    }
    Independence { rank: ech.rank(), rows: rows.len(), dependency }
}

/// Assigns column indices to arbitrary ordered keys (in key order) and checks
/// independence of the resulting vectors.
pub fn independence_by_key<K: Ord + Clone>(field: &Field, vectors: &[Vec<(K, Rational)>]) -> Independence {
    let mut columns: BTreeMap<K, usize> = BTreeMap::new();
    for v in vectors {
        for (k, _) in v {
            columns.entry(k.clone()).or_insert(0);
        }
    }
    for (i, slot) in columns.values_mut().enumerate() {
        *slot = i;
    }
    let rows: Vec<SparseRow> = vectors
        .iter()
        .map(|v| {
            let mut row = SparseRow::new();
            for (k, c) in v {
                let e = row.entry(columns[k]).or_insert_with(Rational::zero);
                *e = field.add(e, c);
            }
            row.retain(|_, c| !c.is_zero());
            row
        })
        .collect();
    independence(field, &rows)
}

/// Whether `Σ coeff · rows[index]` vanishes.
pub fn is_dependency(field: &Field, rows: &[SparseRow], dep: &Dependency) -> bool {
    if dep.iter().all(|(_, c)| c.is_zero()) {
        return false;
    }
    let mut acc = SparseRow::new();
    for (i, c) in dep {
        let neg = field.sub(&Rational::zero(), c);
        axpy(field, &mut acc, &neg, &rows[*i]);
    }
    acc.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use num_bigint::BigInt;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, int(v))).collect()
    }

    /// Oracle: textbook dense Gaussian elimination with row swaps.
    fn dense_rank(rows: &[Vec<Rational>]) -> usize {
        let mut m = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && !m[r][c].is_zero() {
                    let factor = &m[r][c] / &m[rank][c];
                    let pivot = m[rank].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot) {
                        *x -= &factor * p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn detects_dependency_with_witness() {
        let rows = vec![row(&[(0, 1), (1, 2)]), row(&[(1, 1), (2, 1)]), row(&[(0, 2), (1, 6), (2, 2)])];
        let res = independence(&Field::Rationals, &rows);
        assert_eq!(res.rank, 2);
        let dep = res.dependency.unwrap();
        assert!(is_dependency(&Field::Rationals, &rows, &dep));
    }

    #[test]
    fn matches_dense_oracle() {
        // deterministic pseudo-random small matrices
        let mut state: u64 = 12345;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 5) as i64 - 2
        };
        for _ in 0..50 {
            let dense: Vec<Vec<Rational>> = (0..5).map(|_| (0..4).map(|_| int(next())).collect()).collect();
            let sparse: Vec<SparseRow> = dense
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect())
                .collect();
            let res = independence(&Field::Rationals, &sparse);
            assert_eq!(res.rank, dense_rank(&dense));
            if let Some(dep) = &res.dependency {
                assert!(is_dependency(&Field::Rationals, &sparse, dep));
            }
        }
    }

    #[test]
    fn prime_field_rank_differs_from_rational_rank() {
        let rows = vec![row(&[(0, 1), (1, 1)]), row(&[(0, 1), (1, -1)])];
        assert_eq!(independence(&Field::Rationals, &rows).rank, 2);
        let f2 = Field::Prime(BigInt::from(2));
        let res = independence(&f2, &rows);
        assert_eq!(res.rank, 1);
        assert!(is_dependency(&f2, &rows, &res.dependency.unwrap()));
    }

    #[test]
    fn zero_row_is_dependent() {
        let res = independence(&Field::Rationals, &[SparseRow::new()]);
        assert_eq!(res.rank, 0);
        assert_eq!(res.dependency, Some(vec![(0, int(1))]));
    }

    #[test]
    fn keyed_columns() {
        let vs = vec![vec![("b", int(1))], vec![("a", int(1)), ("b", int(1))], vec![("a", int(2))]];
        let res = independence_by_key(&Field::Rationals, &vs);
        assert_eq!(res.rank, 2);
        assert!(res.dependency.is_some());
    }
}
