use std::collections::{BTreeMap, HashMap};

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::mpoly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DetStrategy {
    /// Row-by-row Laplace expansion memoized on the set of used columns.
    #[default]
    SubsetExpansion,
    /// Fraction-free Gaussian elimination with exact polynomial division.
    Bareiss,
}

impl DetStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            DetStrategy::SubsetExpansion => "subset-expansion",
            DetStrategy::Bareiss => "bareiss",
        }
    }
}

/// Upper bound on live column subsets before subset expansion gives up.
const MAX_STATES: usize = 2_000_000;

pub fn det(m: &PolyMatrix) -> Result<Poly> {
    match det_with(m, DetStrategy::SubsetExpansion) {
        Err(Error::Shape { reason: TOO_LARGE, .. }) => det_with(m, DetStrategy::Bareiss),
        other => other,
    }
}

pub fn det_with(m: &PolyMatrix, strategy: DetStrategy) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Shape { rows: m.n_rows(), cols: m.n_cols(), reason: "determinant needs a square matrix" });
    }
    match strategy {
        DetStrategy::SubsetExpansion => {
            let mut minors = maximal_minors(m)?;
            let all: Vec<usize> = (0..m.n_cols()).collect();
            Ok(minors.remove(&all).unwrap_or_default())
        }
        DetStrategy::Bareiss => bareiss(m),
    }
}

const TOO_LARGE: &str = "subset expansion exceeds its state budget";

/// Every nonzero maximal minor of an `n x m` matrix with `n <= m <= 63`,
/// keyed by its (ascending) column set. Rows keep their original order.
///
/// Rows are expanded one at a time, sparsest first. After expanding a set of
/// rows, each state is the set of columns they occupy, and its value is the
/// signed sum over all ways of placing those rows onto those columns. After
/// the last row the states are exactly the `n`-column subsets.
pub fn maximal_minors(m: &PolyMatrix) -> Result<BTreeMap<Vec<usize>, Poly>> {
    let (n, cols) = (m.n_rows(), m.n_cols());
    if n > cols || cols > 63 {
        return Err(Error::Shape { rows: n, cols, reason: "maximal minors need rows <= cols <= 63" });
    }
    let nonzeros: Vec<Vec<(usize, &Poly)>> =
        m.rows().iter().map(|row| row.iter().enumerate().filter(|(_, p)| !p.is_zero()).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&r| nonzeros[r].len());
    let reorder_negates = inversions(&order) % 2 == 1;

    let mut states: HashMap<u64, Poly> = HashMap::from([(0, Poly::one())]);
    for &r in &order {
        let mut next: HashMap<u64, Poly> = HashMap::with_capacity(states.len() * 2);
        for (&mask, value) in &states {
            for &(c, entry) in &nonzeros[r] {
                if mask >> c & 1 == 1 {
                    continue;
                }
                // earlier rows sitting in later columns form inversions
                let negate = (mask >> (c + 1)).count_ones() % 2 == 1;
                let target = next.entry(mask | 1 << c).or_default();
                for (em, ec) in entry.terms() {
                    let coeff = if negate { -ec } else { ec.clone() };
                    target.add_scaled(value, em, &coeff);
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        if next.len() > MAX_STATES {
            return Err(Error::Shape { rows: n, cols, reason: TOO_LARGE });
        }
        states = next;
    }

    Ok(states
        .into_iter()
        .map(|(mask, p)| {
            let set: Vec<usize> = (0..cols).filter(|c| mask >> c & 1 == 1).collect();
            (set, if reorder_negates { -p } else { p })
        })
        .collect())
}

fn inversions(order: &[usize]) -> usize {
    let mut count = 0;
    for (a, x) in order.iter().enumerate() {
        count += order[a + 1..].iter().filter(|&y| y < x).count();
    }
    count
}

fn bareiss(m: &PolyMatrix) -> Result<Poly> {
    let n = m.n_rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    let mut a: Vec<Vec<Poly>> = m.rows().to_vec();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        let Some(pivot) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(Poly::zero());
        };
        if pivot != k {
            a.swap(pivot, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = if num.is_zero() { num } else { num.div_exact(&prev)? };
            }
            a[i][k] = Poly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::PairVar;

    fn l(i: usize, j: usize) -> Poly {
        Poly::var(PairVar::new(i, j).unwrap())
    }

    fn both(m: &PolyMatrix) -> Poly {
        let a = det_with(m, DetStrategy::SubsetExpansion).unwrap();
        let b = det_with(m, DetStrategy::Bareiss).unwrap();
        assert_eq!(a, b);
        a
    }

    #[test]
    fn one_by_one() {
        let p = &l(1, 2) + &l(3, 4);
        let m = PolyMatrix::from_rows(4, vec![vec![p.clone()]]).unwrap();
        assert_eq!(both(&m), p);
    }

    #[test]
    fn two_by_two() {
        let (a, b, c, d) = (l(1, 2), l(1, 3), l(2, 3), l(1, 4));
        let m = PolyMatrix::from_rows(4, vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        assert_eq!(both(&m), &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn needs_pivoting_and_zero_rows() {
        let m = PolyMatrix::from_rows(3, vec![vec![Poly::zero(), l(1, 2)], vec![l(1, 3), Poly::constant(5)]]).unwrap();
        assert_eq!(both(&m), -(&l(1, 2) * &l(1, 3)));
        let singular =
            PolyMatrix::from_rows(3, vec![vec![l(1, 2), l(1, 3)], vec![Poly::zero(), Poly::zero()]]).unwrap();
        assert!(both(&singular).is_zero());
    }

    #[test]
    fn rejects_non_square() {
        let m = PolyMatrix::from_rows(3, vec![vec![l(1, 2), l(1, 3)]]).unwrap();
        assert!(matches!(det(&m), Err(Error::Shape { .. })));
    }

    #[test]
    fn minors_of_a_row() {
        let m = PolyMatrix::from_rows(3, vec![vec![l(1, 2), Poly::zero(), l(2, 3)]]).unwrap();
        let minors = maximal_minors(&m).unwrap();
        assert_eq!(minors.len(), 2);
        assert_eq!(minors[&vec![0]], l(1, 2));
        assert_eq!(minors[&vec![2]], l(2, 3));
    }

    #[test]
    fn inversion_count() {
        assert_eq!(inversions(&[0, 1, 2]), 0);
        assert_eq!(inversions(&[2, 1, 0]), 3);
        assert_eq!(inversions(&[1, 0, 2]), 1);
    }
}
