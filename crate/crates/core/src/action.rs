//! Translations of the triple-linking lattice `Z^C(k,3)` induced by
//! conjugations, partial conjugations, and reversal of orientation.
//!
//! Coordinates are indexed by triples `r < s < t` in lexicographic order.
//! The partial conjugation of the `i`-th factor by `τ(i,j)` is written
//! `i^j`; it moves `μ(rst)` only when `{i,j} ⊆ {r,s,t}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::mpoly::{Assignment, PairVar, Poly};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, m| acc * (n - m) / (m + 1))
}

/// A triple `1 <= r < s < t <= k` of strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleIndex {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl TripleIndex {
    pub fn new(r: usize, s: usize, t: usize, k: usize) -> Result<Self> {
        for index in [r, s, t] {
            if index == 0 || index > k {
                return Err(Error::StrandOutOfRange { index, k });
            }
        }
        if !(r < s && s < t) {
            return Err(Error::Invalid(format!("triple ({r},{s},{t}) is not strictly increasing")));
        }
        Ok(TripleIndex { r, s, t })
    }

    /// Position in the lexicographic enumeration of all triples of `1..=k`.
    pub fn rank(&self, k: usize) -> usize {
        let before_r: usize = (1..self.r).map(|a| binomial(k - a, 2)).sum();
        let before_s: usize = (self.r + 1..self.s).map(|b| k - b).sum();
        before_r + before_s + (self.t - self.s - 1)
    }

    pub fn unrank(k: usize, rank: usize) -> Option<Self> {
        triples(k).nth(rank)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.r == i || self.s == i || self.t == i
    }

    pub fn pairs(&self) -> [PairVar; 3] {
        [self.rs(), self.rt(), self.st()]
    }

    pub fn rs(&self) -> PairVar {
        PairVar::new(self.r, self.s).expect("r < s")
    }

    pub fn rt(&self) -> PairVar {
        PairVar::new(self.r, self.t).expect("r < t")
    }

    pub fn st(&self) -> PairVar {
        PairVar::new(self.s, self.t).expect("s < t")
    }
}

impl fmt::Display for TripleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.s, self.t)
    }
}

/// All triples of `1..=k` in lexicographic order.
pub fn triples(k: usize) -> impl Iterator<Item = TripleIndex> {
    (1..=k).flat_map(move |r| (r + 1..=k).flat_map(move |s| (s + 1..=k).map(move |t| TripleIndex { r, s, t })))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum VectorLabel {
    /// `i^j`: partial conjugation of the `i`-th factor by `τ(i,j)`.
    Partial {
        i: usize,
        j: usize,
    },
    /// Conjugation by `τ(i,j)`.
    Conj {
        i: usize,
        j: usize,
    },
    Reversal,
    Custom(String),
}

impl fmt::Display for VectorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorLabel::Partial { i, j } => write!(f, "partial({i},{j})"),
            VectorLabel::Conj { i, j } => write!(f, "conj({i},{j})"),
            VectorLabel::Reversal => write!(f, "reversal"),
            VectorLabel::Custom(s) => write!(f, "{s}"),
        }
    }
}

/// A vector of `C(k,3)` polynomial coordinates, indexed by triple rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationVector {
    pub k: usize,
    pub label: VectorLabel,
    pub coords: Vec<Poly>,
}

impl TranslationVector {
    pub fn zero(k: usize, label: VectorLabel) -> Self {
        TranslationVector { k, label, coords: vec![Poly::zero(); binomial(k, 3)] }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Poly::is_zero)
    }

    pub fn coord(&self, t: TripleIndex) -> &Poly {
        &self.coords[t.rank(self.k)]
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.coords.iter().filter(|p| !p.is_zero()).count()
    }

    pub fn add(&self, other: &TranslationVector, label: VectorLabel) -> Result<TranslationVector> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::LengthMismatch { expected: self.coords.len(), found: other.coords.len() });
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(TranslationVector { k: self.k, label, coords })
    }

    /// Every coordinate multiplied by the polynomial `factor`.
    pub fn scale(&self, factor: &Poly, label: VectorLabel) -> TranslationVector {
        let coords = self.coords.iter().map(|c| c * factor).collect();
        TranslationVector { k: self.k, label, coords }
    }

    /// Exact inner product `Σ_t a_t · coords_t`.
    pub fn dot(&self, other: &[Poly]) -> Result<Poly> {
        if self.coords.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.coords.len(), found: other.len() });
        }
        let mut acc = Poly::zero();
        for (a, b) in self.coords.iter().zip(other) {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &(a * b);
        }
        Ok(acc)
    }
}

/// Integer linking numbers and triple linking numbers of a link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkData {
    pub k: usize,
    pub l: Assignment,
    pub mu: Vec<BigInt>,
}

impl LinkData {
    /// All linking numbers and triple numbers zero.
    pub fn trivial(k: usize) -> Self {
        LinkData {
            k,
            l: PairVar::all(k).map(|v| (v, BigInt::zero())).collect(),
            mu: vec![BigInt::zero(); binomial(k, 3)],
        }
    }

    pub fn linking(&self, i: usize, j: usize) -> BigInt {
        PairVar::new(i, j).ok().and_then(|v| self.l.get(&v).cloned()).unwrap_or_default()
    }

    pub fn mu_at(&self, t: TripleIndex) -> &BigInt {
        &self.mu[t.rank(self.k)]
    }
}

fn check_strands(k: usize, i: usize, j: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::TooFewStrands { k, min: 3 });
    }
    for index in [i, j] {
        if index == 0 || index > k {
            return Err(Error::StrandOutOfRange { index, k });
        }
    }
    if i == j {
        return Err(Error::EqualStrands(i));
    }
    Ok(())
}

/// Change of `μ(rst)` under the partial conjugation `i^j`, or zero when
/// `{i,j}` is not inside the triple.
fn partial_conj_coord(t: TripleIndex, i: usize, j: usize) -> Poly {
    let TripleIndex { r, s, t: u } = t;
    let (sign, var) = match (i, j) {
        (a, b) if a == u && b == r => (1, t.st()),
        (a, b) if a == u && b == s => (-1, t.rt()),
        (a, b) if a == s && b == r => (-1, t.st()),
        (a, b) if a == s && b == u => (1, t.rs()),
        (a, b) if a == r && b == s => (1, t.rt()),
        (a, b) if a == r && b == u => (-1, t.rs()),
        _ => return Poly::zero(),
    };
    Poly::term(crate::mpoly::Monomial::var(var), sign)
}

/// Translation vector of the partial conjugation `i^j`.
pub fn partial_conj_vector(k: usize, i: usize, j: usize) -> Result<TranslationVector> {
    check_strands(k, i, j)?;
    let coords = triples(k).map(|t| partial_conj_coord(t, i, j)).collect();
    Ok(TranslationVector { k, label: VectorLabel::Partial { i, j }, coords })
}

/// Translation vector of conjugation by `τ(i,j)`: the sum `i^j + j^i`.
pub fn conj_vector(k: usize, i: usize, j: usize) -> Result<TranslationVector> {
    let a = partial_conj_vector(k, i, j)?;
    let b = partial_conj_vector(k, j, i)?;
    let (i, j) = (i.min(j), i.max(j));
    a.add(&b, VectorLabel::Conj { i, j })
}

/// Quadratic translation applied after negating μ when every component's
/// orientation is reversed:
/// `R(rst) = -l(r,s) l(r,t) + l(r,s) l(s,t) - l(r,t) l(s,t)`.
pub fn reversal_vector(k: usize) -> Result<TranslationVector> {
    if k < 3 {
        return Err(Error::TooFewStrands { k, min: 3 });
    }
    let coords = triples(k)
        .map(|t| {
            let (rs, rt, st) = (Poly::var(t.rs()), Poly::var(t.rt()), Poly::var(t.st()));
            &(&(&rs * &st) - &(&rs * &rt)) - &(&rt * &st)
        })
        .collect();
    Ok(TranslationVector { k, label: VectorLabel::Reversal, coords })
}

/// All `k(k-1)` partial-conjugation vectors ordered `1^2, 1^3, ..., k^(k-1)`.
pub fn all_partial_conj_vectors(k: usize) -> Result<Vec<TranslationVector>> {
    let mut out = Vec::with_capacity(k * (k - 1));
    for i in 1..=k {
        for j in (1..=k).filter(|&j| j != i) {
            out.push(partial_conj_vector(k, i, j)?);
        }
    }
    Ok(out)
}

/// All `C(k,2)` conjugation vectors, ordered by pair.
pub fn all_conj_vectors(k: usize) -> Result<Vec<TranslationVector>> {
    PairVar::all(k).map(|v| conj_vector(k, v.i(), v.j())).collect()
}

/// `mu + v(l)` coordinatewise.
pub fn apply_translation(mu: &[BigInt], v: &TranslationVector, l: &Assignment) -> Result<Vec<BigInt>> {
    if mu.len() != v.coords.len() {
        return Err(Error::LengthMismatch { expected: v.coords.len(), found: mu.len() });
    }
    mu.iter().zip(&v.coords).map(|(m, c)| Ok(m + c.eval(l)?)).collect()
}

/// Effect of reversing every component: `-mu + R(l)`.
pub fn apply_reversal(mu: &[BigInt], l: &Assignment, k: usize) -> Result<Vec<BigInt>> {
    let r = reversal_vector(k)?;
    let neg: Vec<BigInt> = mu.iter().map(|m| -m).collect();
    apply_translation(&neg, &r, l)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationEntry {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub k: usize,
    pub entries: Vec<RelationEntry>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.holds)
    }
}

/// Checks, for each strand `i`, the exact identities `Σ_{j≠i} j^i = 0` and
/// `Σ_{j≠i} l(i,j) · i^j = 0`.
pub fn relation_check(k: usize) -> Result<RelationReport> {
    if k < 3 {
        return Err(Error::TooFewStrands { k, min: 3 });
    }
    let mut entries = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let mut first = TranslationVector::zero(k, VectorLabel::Custom(format!("sum_j j^{i}")));
        let mut second = TranslationVector::zero(k, VectorLabel::Custom(format!("sum_j l({i},j) {i}^j")));
        for j in (1..=k).filter(|&j| j != i) {
            let into_i = partial_conj_vector(k, j, i)?;
            first = first.add(&into_i, first.label.clone())?;
            let from_i = partial_conj_vector(k, i, j)?;
            let weighted = from_i.scale(&Poly::var(PairVar::new(i, j)?), VectorLabel::Custom(String::new()));
            second = second.add(&weighted, second.label.clone())?;
        }
        entries.push(RelationEntry { name: first.label.to_string(), holds: first.is_zero() });
        entries.push(RelationEntry { name: second.label.to_string(), holds: second.is_zero() });
    }
    Ok(RelationReport { k, entries })
}
