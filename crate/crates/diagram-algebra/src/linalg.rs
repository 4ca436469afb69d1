//! Exact rational linear algebra for the commutant checks: an incremental
//! row-echelon eliminator over arbitrary-precision rationals, and the
//! nullspace dimensions of the stacked commutation and intertwining
//! constraints for sets of specialized representing matrices.

use num_traits::Zero;

use crate::model::RepMatrix;
use crate::poly::Rational;

/// A representing matrix specialized at a rational point; columns stay
/// monomial (at most one nonzero entry each).
#[derive(Clone, Debug)]
pub struct SpecMatrix {
    pub dim: usize,
    pub cols: Vec<Option<(usize, Rational)>>,
}

impl SpecMatrix {
    pub fn from_rep(rep: &RepMatrix, x0: &Rational) -> Self {
        let cols = rep
            .cols
            .iter()
            .map(|col| {
                col.as_ref().and_then(|(row, poly)| {
                    let value = poly.evaluate(x0);
                    if value.is_zero() {
                        None
                    } else {
                        Some((*row, value))
                    }
                })
            })
            .collect();
        Self { dim: rep.dim, cols }
    }

    /// For each row `i`, the columns `m` (with scalars) mapped into `i`.
    fn preimages(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut pre = vec![Vec::new(); self.dim];
        for (m, col) in self.cols.iter().enumerate() {
            if let Some((row, c)) = col {
                pre[*row].push((m, c.clone()));
            }
        }
        pre
    }
}

/// Incremental sparse Gaussian eliminator over the rationals: rows are fed
/// one at a time and reduced against the pivots collected so far.  Exact
/// arithmetic throughout; no tolerances.
pub struct Eliminator {
    ncols: usize,
    /// Pivot rows keyed by leading column; each is sorted, leading coeff 1.
    pivots: std::collections::BTreeMap<usize, Vec<(usize, Rational)>>,
}

impl Eliminator {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, pivots: Default::default() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ncols
    }

    /// Add one constraint row (sparse, sorted by column index).
    pub fn add_row(&mut self, mut row: Vec<(usize, Rational)>) {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            let Some(&(lead, ref lead_coeff)) = row.first() else { return };
            match self.pivots.get(&lead) {
                Some(pivot) => {
                    row = subtract_scaled(&row, pivot, lead_coeff.clone());
                }
                None => {
                    let inv = lead_coeff.recip();
                    for (_, c) in row.iter_mut() {
                        *c *= inv.clone();
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }
}

/// `row - factor * pivot`, both sparse and sorted.
fn subtract_scaled(
    row: &[(usize, Rational)],
    pivot: &[(usize, Rational)],
    factor: Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -(factor.clone() * &pivot[j].1)));
            j += 1;
        } else {
            let value = &row[i].1 - factor.clone() * &pivot[j].1;
            if !value.is_zero() {
                out.push((row[i].0, value));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Dimension of the space of matrices `X` with `X a = b X` for every pair
/// `(a, b)` of matrices drawn in parallel from the two lists: intertwiners
/// from the representation `a` (size `n_a`) to the representation `b`
/// (size `n_b`).  `X` is `n_b x n_a`; the constraints are stacked and the
/// nullspace dimension computed exactly.
pub fn intertwiner_dimension(a_mats: &[SpecMatrix], b_mats: &[SpecMatrix]) -> usize {
    assert_eq!(a_mats.len(), b_mats.len(), "need one matrix pair per algebra generator");
    let n_a = a_mats.first().map_or(0, |m| m.dim);
    let n_b = b_mats.first().map_or(0, |m| m.dim);
    let vars = n_a * n_b;
    if vars == 0 {
        return 0;
    }
    let var = |i: usize, j: usize| i * n_a + j; // X[i][j], i < n_b, j < n_a
    let mut elim = Eliminator::new(vars);
    'matrices: for (a, b) in a_mats.iter().zip(b_mats.iter()) {
        let pre_b = b.preimages();
        for i in 0..n_b {
            for j in 0..n_a {
                // (b X)_{ij} - (X a)_{ij} = sum_{m -> i} c_m X[m][j] - c_j X[i][sigma_a(j)]
                let mut row: Vec<(usize, Rational)> = Vec::new();
                for (m, c) in &pre_b[i] {
                    row.push((var(*m, j), c.clone()));
                }
                if let Some((sj, cj)) = &a.cols[j] {
                    row.push((var(i, *sj), -cj.clone()));
                }
                row.sort_unstable_by_key(|(v, _)| *v);
                row = merge_duplicates(row);
                if !row.is_empty() {
                    elim.add_row(row);
                }
                if elim.is_full_rank() {
                    break 'matrices;
                }
            }
        }
    }
    elim.nullity()
}

fn merge_duplicates(row: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (v, c) in row {
        match out.last_mut() {
            Some((last_v, last_c)) if *last_v == v => *last_c += c,
            _ => out.push((v, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Dimension of `{ X : X m = m X for every m }`: the commutant of the set,
/// as the nullspace of the stacked commutation constraints.
pub fn commutant_dimension(mats: &[SpecMatrix]) -> usize {
    intertwiner_dimension(mats, mats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn diag(entries: &[i64]) -> SpecMatrix {
        SpecMatrix {
            dim: entries.len(),
            cols: entries
                .iter()
                .enumerate()
                .map(|(i, &e)| if e == 0 { None } else { Some((i, q(e))) })
                .collect(),
        }
    }

    #[test]
    fn scalar_matrix_has_full_commutant() {
        // a single 1x1 matrix commutes with everything
        assert_eq!(commutant_dimension(&[diag(&[7])]), 1);
    }

    #[test]
    fn distinct_diagonal_blocks() {
        // block diagonal with two inequivalent 1-dim reps: commutant dim 2
        assert_eq!(commutant_dimension(&[diag(&[2, 3])]), 2);
        // and no intertwiners between the two scalars
        assert_eq!(intertwiner_dimension(&[diag(&[2])], &[diag(&[3])]), 0);
        // identical scalars intertwine in one way
        assert_eq!(intertwiner_dimension(&[diag(&[2])], &[diag(&[2])]), 1);
    }

    #[test]
    fn permutation_representation_of_swap() {
        // X commuting with the 2x2 swap matrix: dimension 2 (circulants)
        let swap = SpecMatrix { dim: 2, cols: vec![Some((1, q(1))), Some((0, q(1)))] };
        assert_eq!(commutant_dimension(&[swap]), 2);
    }

    #[test]
    fn full_involution_model_commutant_of_s3() {
        // block-diagonal matrices of all six S_3 diagrams on the span of the
        // four involutions: commutant dimension = number of partitions of 3
        use crate::diagram::Family;
        use crate::model::{representation_matrix, SymmetricBasis};
        let grades = [
            SymmetricBasis::new(Family::SymmetricGroup, 3, 3, 3),
            SymmetricBasis::new(Family::SymmetricGroup, 3, 3, 1),
        ];
        let offsets = [0, grades[0].len()];
        let total: usize = grades.iter().map(SymmetricBasis::len).sum();
        assert_eq!(total, 4);
        let x0 = q(1);
        let mut mats = Vec::new();
        for d in crate::enumerate::enumerate(Family::SymmetricGroup, 3) {
            let mut cols: Vec<Option<(usize, Rational)>> = vec![None; total];
            for (grade, offset) in grades.iter().zip(offsets) {
                let spec = SpecMatrix::from_rep(&representation_matrix(grade, &d).unwrap(), &x0);
                for (j, col) in spec.cols.iter().enumerate() {
                    cols[offset + j] = col.as_ref().map(|(i, c)| (offset + i, c.clone()));
                }
            }
            mats.push(SpecMatrix { dim: total, cols });
        }
        assert_eq!(commutant_dimension(&mats), 3);
    }

    #[test]
    fn eliminator_ranks() {
        let mut e = Eliminator::new(3);
        e.add_row(vec![(0, q(1)), (1, q(2))]);
        e.add_row(vec![(0, q(2)), (1, q(4))]); // dependent
        assert_eq!(e.rank(), 1);
        e.add_row(vec![(1, q(1)), (2, q(1))]);
        e.add_row(vec![(2, q(5))]);
        assert!(e.is_full_rank());
        assert_eq!(e.nullity(), 0);
    }
}
