use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::det::{det_with, maximal_minors, DetStrategy};
use super::PolyMatrix;
use crate::action::{partial_conj_vector, reversal_vector, TranslationVector};
use crate::error::{Error, Result};
use crate::mpoly::{Assignment, CompiledPoly, PairVar, Poly};

/// The 18 partial conjugations `i^j` (as `(i, j)`) whose vectors, followed by
/// the reversal vector, form the 19 x 20 matrix at `k = 6`.
pub const PAPER_ROW_SELECTION: [(usize, usize); 18] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 1),
    (2, 3),
    (2, 4),
    (2, 5),
    (3, 1),
    (3, 2),
    (3, 4),
    (3, 5),
    (4, 1),
    (4, 2),
    (4, 3),
    (4, 5),
    (5, 1),
    (5, 2),
];

/// 19 x 20 matrix: the selected partial-conjugation rows, then the reversal
/// vector `R`, columns in lexicographic triple order.
pub fn build_paper_matrix() -> PolyMatrix {
    let mut vectors: Vec<TranslationVector> =
        PAPER_ROW_SELECTION.iter().map(|&(i, j)| partial_conj_vector(6, i, j).expect("valid selection")).collect();
    vectors.push(reversal_vector(6).expect("k = 6"));
    PolyMatrix::from_vectors(&vectors).expect("non-empty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordStats {
    pub terms: usize,
    pub degree: u32,
    pub content: BigInt,
}

impl CoordStats {
    pub fn of(p: &Poly) -> Self {
        let m = p.measure();
        CoordStats { terms: m.term_count, degree: m.total_degree, content: m.content }
    }
}

/// Signed maximal minors `Ω_i = (-1)^(i-1) det(M with column i deleted)` of an
/// `n x (n+1)` matrix `M`, together with the row labels they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCertificate {
    pub k: usize,
    pub row_labels: Vec<String>,
    pub omega: Vec<Poly>,
    pub stats: Vec<CoordStats>,
    pub algorithm: String,
}

impl OmegaCertificate {
    pub fn new(k: usize, row_labels: Vec<String>, omega: Vec<Poly>, algorithm: String) -> Self {
        let stats = omega.iter().map(CoordStats::of).collect();
        OmegaCertificate { k, row_labels, omega, stats, algorithm }
    }

    pub fn total_terms(&self) -> usize {
        self.stats.iter().map(|s| s.terms).sum()
    }

    /// `Ω(l)` as integers.
    pub fn evaluate(&self, l: &Assignment) -> Result<Vec<BigInt>> {
        self.omega.iter().map(|p| p.eval(l)).collect()
    }

    /// The invariant `μ · Ω(l)`.
    pub fn invariant(&self, mu: &[BigInt], l: &Assignment) -> Result<BigInt> {
        let values = self.evaluate(l)?;
        dot(mu, &values)
    }

    /// Precompiles `Ω` for repeated evaluation.
    pub fn evaluator(&self) -> Result<OmegaEvaluator> {
        let vars: Vec<PairVar> = PairVar::all(self.k).collect();
        let compiled = self.omega.iter().map(|p| p.compile(&vars)).collect::<Result<_>>()?;
        Ok(OmegaEvaluator { vars, compiled })
    }

    /// `Ω · v` as an exact polynomial.
    pub fn pair_with(&self, v: &TranslationVector) -> Result<Poly> {
        v.dot(&self.omega)
    }
}

/// `Ω` compiled against the variables `l(i,j)` of `1..=k`.
#[derive(Clone, Debug)]
pub struct OmegaEvaluator {
    vars: Vec<PairVar>,
    compiled: Vec<CompiledPoly>,
}

impl OmegaEvaluator {
    pub fn evaluate(&self, l: &Assignment) -> Result<Vec<BigInt>> {
        let values = self
            .vars
            .iter()
            .map(|v| {
                let x = l.get(v).ok_or(Error::MissingVariable(*v))?;
                x.to_i64().ok_or_else(|| Error::Invalid(format!("{v} = {x} does not fit in 64 bits")))
            })
            .collect::<Result<Vec<i64>>>()?;
        self.compiled.iter().map(|c| c.eval(&values)).collect()
    }

    pub fn invariant(&self, mu: &[BigInt], l: &Assignment) -> Result<BigInt> {
        dot(mu, &self.evaluate(l)?)
    }
}

pub(crate) fn dot(mu: &[BigInt], values: &[BigInt]) -> Result<BigInt> {
    if mu.len() != values.len() {
        return Err(Error::LengthMismatch { expected: values.len(), found: mu.len() });
    }
    Ok(mu.iter().zip(values).map(|(a, b)| a * b).sum())
}

pub fn cofactor_perp(m: &PolyMatrix) -> Result<OmegaCertificate> {
    cofactor_perp_with(m, DetStrategy::SubsetExpansion)
}

/// The cofactor vector of an `n x (n+1)` matrix; checks that it is nonzero
/// and orthogonal to every row before returning it.
pub fn cofactor_perp_with(m: &PolyMatrix, strategy: DetStrategy) -> Result<OmegaCertificate> {
    let cols = m.n_cols();
    if m.n_rows() + 1 != cols {
        return Err(Error::Shape { rows: m.n_rows(), cols, reason: "cofactor vector needs cols = rows + 1" });
    }
    let minors: Vec<Poly> = match strategy {
        DetStrategy::SubsetExpansion => {
            let mut by_set = maximal_minors(m)?;
            (0..cols)
                .map(|i| {
                    let set: Vec<usize> = (0..cols).filter(|&c| c != i).collect();
                    by_set.remove(&set).unwrap_or_default()
                })
                .collect()
        }
        DetStrategy::Bareiss => {
            (0..cols).map(|i| det_with(&m.delete_column(i), DetStrategy::Bareiss)).collect::<Result<_>>()?
        }
    };
    let omega: Vec<Poly> = minors.into_iter().enumerate().map(|(i, d)| if i % 2 == 1 { -d } else { d }).collect();
    if omega.iter().all(Poly::is_zero) {
        return Err(Error::ZeroCofactor);
    }
    for (label, row) in m.row_labels().iter().zip(m.rows()) {
        let pairing: Poly = row.iter().zip(&omega).map(|(a, b)| a * b).sum();
        if !pairing.is_zero() {
            return Err(Error::Verification(format!("cofactor vector not orthogonal to row {label}")));
        }
    }
    Ok(OmegaCertificate::new(m.k(), m.row_labels().to_vec(), omega, strategy.name().to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpEntry {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpReport {
    pub entries: Vec<PerpEntry>,
}

impl PerpReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PerpEntry> {
        self.entries.iter().filter(|e| !e.holds)
    }
}

/// Whether `Ω · v` vanishes identically for each vector.
pub fn verify_perp(cert: &OmegaCertificate, vectors: &[TranslationVector]) -> Result<PerpReport> {
    let entries = vectors
        .iter()
        .map(|v| Ok(PerpEntry { label: v.label.to_string(), holds: cert.pair_with(v)?.is_zero() }))
        .collect::<Result<_>>()?;
    Ok(PerpReport { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: usize, j: usize) -> Poly {
        Poly::var(PairVar::new(i, j).unwrap())
    }

    #[test]
    fn selected_matrix_shape() {
        let m = build_paper_matrix();
        assert_eq!((m.n_rows(), m.n_cols()), (19, 20));
        assert_eq!(m.row(0), partial_conj_vector(6, 1, 2).unwrap().coords.as_slice());
        let r456 = m.entry(18, 19);
        let expected = &(&(&l(4, 5) * &l(5, 6)) - &(&l(4, 5) * &l(4, 6))) - &(&l(4, 6) * &l(5, 6));
        assert_eq!(r456, &expected);
        for (n, row) in m.rows().iter().enumerate() {
            let want = if n < 18 { 1 } else { 2 };
            assert!(row.iter().all(|p| p.is_zero() || p.total_degree() == want));
        }
        assert_eq!(m.row_labels()[4], "partial(2,1)");
        assert_eq!(m.row_labels()[18], "reversal");
    }

    #[test]
    fn one_by_two_cofactor() {
        let (p, q) = (l(1, 2), &l(1, 3) + &l(2, 3));
        let m = PolyMatrix::from_rows(3, vec![vec![p.clone(), q.clone()]]).unwrap();
        for strategy in [DetStrategy::SubsetExpansion, DetStrategy::Bareiss] {
            let cert = cofactor_perp_with(&m, strategy).unwrap();
            assert_eq!(cert.omega, vec![q.clone(), -p.clone()]);
        }
    }

    #[test]
    fn cofactor_errors() {
        let square = PolyMatrix::from_rows(3, vec![vec![l(1, 2)]]).unwrap();
        assert!(matches!(cofactor_perp(&square), Err(Error::Shape { .. })));
        let dependent = PolyMatrix::from_rows(
            3,
            vec![vec![l(1, 2), l(1, 3), l(2, 3)], vec![&l(1, 2) * &l(1, 2), &l(1, 2) * &l(1, 3), &l(1, 2) * &l(2, 3)]],
        )
        .unwrap();
        assert_eq!(cofactor_perp(&dependent), Err(Error::ZeroCofactor));
    }
}
