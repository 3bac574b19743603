//! The operations behind each `lhinv` subcommand, kept free of argument
//! parsing and printing so they can be tested directly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{
    all_conj_vectors, all_partial_conj_vectors, apply_reversal, apply_translation, binomial, relation_check,
    reversal_vector, triples, LinkData, RelationReport, TranslationVector,
};
use crate::braid::{conjugate_word, mu_all, random_word, reverse_word, BraidWord, Letter};
use crate::error::{Error, Result};
use crate::mpoly::{Assignment, PairVar};
use crate::polylinalg::{
    build_paper_matrix, cofactor_perp_with, generic_rank, verify_perp, DetStrategy, OmegaCertificate, PerpEntry,
    PerpReport, PolyMatrix, PAPER_ROW_SELECTION,
};

/// Strand count of the invariant.
pub const OMEGA_K: usize = 6;

/// Every vector `Ω` must be orthogonal to: the 30 partial conjugations, the 15
/// conjugations, and the reversal vector.
pub fn orthogonality_targets(k: usize) -> Result<Vec<TranslationVector>> {
    let mut vectors = all_partial_conj_vectors(k)?;
    vectors.extend(all_conj_vectors(k)?);
    vectors.push(reversal_vector(k)?);
    Ok(vectors)
}

/// Builds `Ω` from the 19 x 20 matrix and verifies it against every
/// translation vector. Fails naming the first identity that does not hold.
pub fn build_omega(strategy: DetStrategy) -> Result<(OmegaCertificate, PerpReport)> {
    let cert = cofactor_perp_with(&build_paper_matrix(), strategy)?;
    let report = verify_perp(&cert, &orthogonality_targets(OMEGA_K)?)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::Verification(format!("Ω · {} is not identically zero", bad.label)));
    }
    Ok((cert, report))
}

/// Re-checks a loaded certificate: shape, homogeneity, and orthogonality.
pub fn verify_omega(cert: &OmegaCertificate) -> Result<PerpReport> {
    let mut entries = Vec::new();
    let shape_ok = cert.k == OMEGA_K && cert.omega.len() == binomial(OMEGA_K, 3);
    entries.push(PerpEntry { label: "shape k=6 with 20 coordinates".into(), holds: shape_ok });
    if !shape_ok {
        return Ok(PerpReport { entries });
    }
    let expected_degree = build_paper_matrix()
        .rows()
        .iter()
        .map(|row| row.iter().map(|p| p.total_degree()).max().unwrap_or(0))
        .sum::<u32>();
    let homogeneous =
        cert.omega.iter().all(|p| p.is_zero() || (p.is_homogeneous() && p.total_degree() == expected_degree));
    entries.push(PerpEntry { label: format!("homogeneous of degree {expected_degree}"), holds: homogeneous });
    entries.push(PerpEntry { label: "nonzero".into(), holds: cert.omega.iter().any(|p| !p.is_zero()) });
    entries.extend(verify_perp(cert, &orthogonality_targets(OMEGA_K)?)?.entries);
    Ok(PerpReport { entries })
}

fn check_k(cert: &OmegaCertificate, k: usize) -> Result<()> {
    if cert.k != OMEGA_K || k != cert.k {
        return Err(Error::Invalid(format!("the invariant needs k = {OMEGA_K}, got link with k = {k}")));
    }
    Ok(())
}

pub fn invariant_of_link(cert: &OmegaCertificate, data: &LinkData) -> Result<BigInt> {
    check_k(cert, data.k)?;
    cert.evaluator()?.invariant(&data.mu, &data.l)
}

pub fn invariant_of_word(cert: &OmegaCertificate, word: &BraidWord) -> Result<BigInt> {
    check_k(cert, word.k())?;
    invariant_of_link(cert, &mu_all(word)?)
}

/// Parses lines `l i j value` and `mu r s t value`; blank lines and `#`
/// comments are skipped, missing entries are zero.
pub fn parse_mu_file(text: &str, k: usize) -> Result<LinkData> {
    let mut data = LinkData::trivial(k);
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { pos: n + 1, msg };
        let words: Vec<&str> = line.split_whitespace().collect();
        let ints = |ws: &[&str]| -> Result<Vec<usize>> {
            ws.iter().map(|w| w.parse().map_err(|_| err(format!("bad index {w:?}")))).collect()
        };
        let value = |w: &str| -> Result<BigInt> { w.parse().map_err(|_| err(format!("bad value {w:?}"))) };
        match words.as_slice() {
            ["l", a, b, v] => {
                let idx = ints(&[a, b])?;
                let pair = PairVar::within(idx[0], idx[1], k).map_err(|e| err(e.to_string()))?;
                data.l.insert(pair, value(v)?);
            }
            ["mu", a, b, c, v] => {
                let mut idx = ints(&[a, b, c])?;
                idx.sort_unstable();
                let t = crate::action::TripleIndex::new(idx[0], idx[1], idx[2], k).map_err(|e| err(e.to_string()))?;
                data.mu[t.rank(k)] = value(v)?;
            }
            _ => return Err(err(format!("unrecognized line {raw:?}"))),
        }
    }
    Ok(data)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomotopyOptions {
    /// Linking numbers are drawn from `-l_range..=l_range`.
    pub l_range: i64,
    /// Triple numbers are drawn from `-mu_range..=mu_range`.
    pub mu_range: i64,
    /// Translation sequences have length `0..=max_len`.
    pub max_len: usize,
}

impl Default for HomotopyOptions {
    fn default() -> Self {
        HomotopyOptions { l_range: 9, mu_range: 9, max_len: 12 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrialReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn random_link<R: Rng>(rng: &mut R, k: usize, opts: &HomotopyOptions) -> (Assignment, Vec<BigInt>) {
    let l = PairVar::all(k).map(|v| (v, BigInt::from(rng.gen_range(-opts.l_range..=opts.l_range)))).collect();
    let mu = (0..binomial(k, 3)).map(|_| BigInt::from(rng.gen_range(-opts.mu_range..=opts.mu_range))).collect();
    (l, mu)
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Random `(l, μ)` pushed through random sequences of partial-conjugation
/// translations (either direction): `μ · Ω(l)` must never change. Each
/// sequence then ends with a reversal, which must negate the value exactly.
pub fn homotopy_test(cert: &OmegaCertificate, trials: usize, seed: u64, opts: &HomotopyOptions) -> Result<TrialReport> {
    let k = cert.k;
    let evaluator = cert.evaluator()?;
    let partials = all_partial_conj_vectors(k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = TrialReport { trials, ..Default::default() };
    for trial in 0..trials {
        let (l, mut mu) = random_link(&mut rng, k, opts);
        let omega = evaluator.evaluate(&l)?;
        let start = dot(&mu, &omega);
        let len = rng.gen_range(0..=opts.max_len);
        let mut steps = Vec::with_capacity(len);
        for _ in 0..len {
            let v = &partials[rng.gen_range(0..partials.len())];
            let forward = rng.gen_bool(0.5);
            steps.push(format!("{}{}", v.label, if forward { "" } else { "^-1" }));
            let v_at_l = apply_translation(&vec![BigInt::from(0); mu.len()], v, &l)?;
            for (m, d) in mu.iter_mut().zip(&v_at_l) {
                if forward {
                    *m += d;
                } else {
                    *m -= d;
                }
            }
            report.checks += 1;
            if dot(&mu, &omega) != start {
                report.failures.push(format!("trial {trial}: value changed after [{}]", steps.join(", ")));
                break;
            }
        }
        let reversed = apply_reversal(&mu, &l, k)?;
        report.checks += 1;
        if dot(&reversed, &omega) != -&start {
            report.failures.push(format!("trial {trial}: reversal after [{}] did not negate", steps.join(", ")));
        }
    }
    Ok(report)
}

/// Word-level trials: random words, their conjugates by random generators,
/// and their reversals. Conjugation must keep the invariant; reversal must
/// negate it.
pub fn reversal_test(cert: &OmegaCertificate, trials: usize, seed: u64) -> Result<TrialReport> {
    let k = cert.k;
    let evaluator = cert.evaluator()?;
    let pairs: Vec<PairVar> = PairVar::all(k).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = TrialReport { trials, ..Default::default() };
    let value = |w: &BraidWord| -> Result<BigInt> {
        let data = mu_all(w)?;
        evaluator.invariant(&data.mu, &data.l)
    };
    for trial in 0..trials {
        let w = random_word(&mut rng, k, 40, 2);
        let base = value(&w)?;
        let pair = pairs[rng.gen_range(0..pairs.len())];
        let g = Letter { pair, exp: if rng.gen_bool(0.5) { 1 } else { -1 } };
        report.checks += 2;
        if value(&conjugate_word(&w, g)?)? != base {
            report.failures.push(format!("trial {trial}: conjugating [{w}] by {g} changed the invariant"));
        }
        if value(&reverse_word(&w))? != -&base {
            report.failures.push(format!("trial {trial}: reversing [{w}] did not negate the invariant"));
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowSelection {
    /// All `k(k-1)` partial-conjugation vectors.
    All,
    /// The 18 selected rows at `k = 6`.
    Paper18,
    /// The 18 selected rows plus the reversal vector.
    Paper18R,
}

impl FromStr for RowSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(RowSelection::All),
            "paper18" => Ok(RowSelection::Paper18),
            "paper18R" | "paper18+R" | "paper18r" => Ok(RowSelection::Paper18R),
            other => Err(Error::Invalid(format!("unknown row selection {other:?} (all|paper18|paper18R)"))),
        }
    }
}

impl fmt::Display for RowSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowSelection::All => "all",
            RowSelection::Paper18 => "paper18",
            RowSelection::Paper18R => "paper18R",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub k: usize,
    pub selection: RowSelection,
    pub n_rows: usize,
    pub rank: usize,
    /// `C(k,3)`, the lattice dimension.
    pub lattice_dim: usize,
    /// `k² - 3k`, the bound on the span of partial conjugations.
    pub span_bound: i64,
}

/// `(C(k,3), k² - 3k)`.
pub fn dimension_counts(k: usize) -> (usize, i64) {
    let k_i = k as i64;
    (binomial(k, 3), k_i * k_i - 3 * k_i)
}

pub fn selection_matrix(k: usize, selection: RowSelection) -> Result<PolyMatrix> {
    match selection {
        RowSelection::All => {
            if !(3..=12).contains(&k) {
                return Err(Error::Invalid(format!("`all` rows need k in 3..=12, got {k}")));
            }
            PolyMatrix::from_vectors(&all_partial_conj_vectors(k)?)
        }
        RowSelection::Paper18 | RowSelection::Paper18R => {
            if k != OMEGA_K {
                return Err(Error::Invalid(format!("{selection} rows need k = {OMEGA_K}, got {k}")));
            }
            let m = build_paper_matrix();
            Ok(if selection == RowSelection::Paper18 {
                m.select_rows(&(0..PAPER_ROW_SELECTION.len()).collect::<Vec<_>>())
            } else {
                m
            })
        }
    }
}

pub fn rank_report(k: usize, selection: RowSelection, trials: usize, prime: u64, seed: u64) -> Result<RankReport> {
    let m = selection_matrix(k, selection)?;
    let rank = generic_rank(&m, trials, prime, seed)?;
    let (lattice_dim, span_bound) = dimension_counts(k);
    Ok(RankReport { k, selection, n_rows: m.n_rows(), rank, lattice_dim, span_bound })
}

pub fn relations(k: usize) -> Result<RelationReport> {
    if !(3..=9).contains(&k) {
        return Err(Error::Invalid(format!("relations need k in 3..=9, got {k}")));
    }
    relation_check(k)
}

/// `l` and `μ` tables of a word, one `l i j value` / `mu r s t value` per
/// line (the same format `parse_mu_file` reads).
pub fn format_link_data(data: &LinkData) -> String {
    let mut out = String::new();
    for (v, x) in &data.l {
        out.push_str(&format!("l {} {} {}\n", v.i(), v.j(), x));
    }
    for (t, x) in triples(data.k).zip(&data.mu) {
        out.push_str(&format!("mu {} {} {} {}\n", t.r, t.s, t.t, x));
    }
    out
}
