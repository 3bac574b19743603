use crate::action::TranslationVector;
use crate::error::{Error, Result};
use crate::mpoly::{Assignment, Poly};

/// Rectangular matrix of polynomials in the variables `l(i,j)`, `i,j <= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    k: usize,
    n_cols: usize,
    rows: Vec<Vec<Poly>>,
    row_labels: Vec<String>,
}

impl PolyMatrix {
    pub fn new(k: usize, n_cols: usize) -> Self {
        PolyMatrix { k, n_cols, rows: Vec::new(), row_labels: Vec::new() }
    }

    pub fn from_rows(k: usize, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut m = PolyMatrix::new(k, n_cols);
        for (n, row) in rows.into_iter().enumerate() {
            m.push_row(format!("row{}", n + 1), row)?;
        }
        Ok(m)
    }

    pub fn from_vectors(vectors: &[TranslationVector]) -> Result<Self> {
        let first = vectors.first().ok_or(Error::Shape { rows: 0, cols: 0, reason: "no rows" })?;
        let mut m = PolyMatrix::new(first.k, first.coords.len());
        for v in vectors {
            m.push_row(v.label.to_string(), v.coords.clone())?;
        }
        Ok(m)
    }

    pub fn push_row(&mut self, label: String, row: Vec<Poly>) -> Result<()> {
        if row.len() != self.n_cols {
            return Err(Error::LengthMismatch { expected: self.n_cols, found: row.len() });
        }
        self.rows.push(row);
        self.row_labels.push(label);
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows() == self.n_cols
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.rows[i]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    /// Copy with column `j` removed.
    pub fn delete_column(&self, j: usize) -> PolyMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        PolyMatrix { k: self.k, n_cols: self.n_cols.saturating_sub(1), rows, row_labels: self.row_labels.clone() }
    }

    /// Copy keeping only the listed rows, in the given order.
    pub fn select_rows(&self, picks: &[usize]) -> PolyMatrix {
        PolyMatrix {
            k: self.k,
            n_cols: self.n_cols,
            rows: picks.iter().map(|&i| self.rows[i].clone()).collect(),
            row_labels: picks.iter().map(|&i| self.row_labels[i].clone()).collect(),
        }
    }

    pub fn eval_mod(&self, values: &Assignment, prime: u64) -> Result<Vec<Vec<u64>>> {
        self.rows.iter().map(|row| row.iter().map(|p| p.eval_mod(values, prime)).collect()).collect()
    }

    pub fn eval(&self, values: &Assignment) -> Result<Vec<Vec<num_bigint::BigInt>>> {
        self.rows.iter().map(|row| row.iter().map(|p| p.eval(values)).collect()).collect()
    }
}
