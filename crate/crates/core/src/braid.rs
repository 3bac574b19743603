//! Pure-braid words in the generators `τ(i,j)` and their linking and triple
//! linking numbers, computed by strand deletion and collection in the
//! class-2 quotient.
//!
//! On a triple `r < s < t`, write `c = [τ(r,t), τ(s,t)]` (with
//! `[g,h] = g h g⁻¹ h⁻¹`). Modulo the third term of the lower central series
//! `c` is central and
//!
//! ```text
//! [τ(r,s), τ(r,t)] = c,   [τ(r,s), τ(s,t)] = c⁻¹,   [τ(r,t), τ(s,t)] = c,
//! ```
//!
//! so every word collects to `τ(r,s)^α τ(r,t)^β τ(s,t)^γ c^δ` with `δ = μ(rst)`.

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;

use crate::action::{binomial, triples, LinkData, TripleIndex};
use crate::error::{Error, Result};
use crate::mpoly::{Assignment, PairVar};

/// `τ(i,j)^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub pair: PairVar,
    pub exp: i64,
}

impl Letter {
    pub fn new(i: usize, j: usize, exp: i64) -> Result<Self> {
        Ok(Letter { pair: PairVar::new(i, j)?, exp })
    }

    pub fn inverse(&self) -> Letter {
        Letter { pair: self.pair, exp: -self.exp }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{},{}", self.pair.i(), self.pair.j())?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

/// A word in the pure braid generators on `k` strands. Adjacent letters on
/// the same pair are always merged and zero exponents dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    k: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(k: usize) -> Self {
        BraidWord { k, letters: Vec::new() }
    }

    pub fn new<I: IntoIterator<Item = Letter>>(k: usize, letters: I) -> Result<Self> {
        let mut w = BraidWord::identity(k);
        for letter in letters {
            w.push(letter)?;
        }
        Ok(w)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends a letter, merging with the last one when the pairs agree.
    pub fn push(&mut self, letter: Letter) -> Result<()> {
        PairVar::within(letter.pair.i(), letter.pair.j(), self.k)?;
        if letter.exp == 0 {
            return Ok(());
        }
        match self.letters.last_mut() {
            Some(last) if last.pair == letter.pair => {
                last.exp = last.exp.checked_add(letter.exp).ok_or(Error::Overflow)?;
                if last.exp == 0 {
                    self.letters.pop();
                }
            }
            _ => self.letters.push(letter),
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        let mut w = self.clone();
        for &letter in &other.letters {
            w.push(letter)?;
        }
        Ok(w)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { k: self.k, letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// Generator-level image under deleting every strand outside `keep`:
    /// letters touching a deleted strand vanish, the rest keep their labels.
    pub fn delete_strands(&self, keep: &[usize]) -> BraidWord {
        let kept = self.letters.iter().filter(|l| keep.contains(&l.pair.i()) && keep.contains(&l.pair.j()));
        BraidWord::new(self.k, kept.copied()).expect("letters already validated")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, letter) in self.letters.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses whitespace-separated tokens `t<i>,<j>` or `t<i>,<j>^<exp>`.
/// Error positions are byte offsets of the offending token.
pub fn parse_word(text: &str, k: usize) -> Result<BraidWord> {
    let mut w = BraidWord::identity(k);
    let mut offset = 0;
    for piece in text.split_inclusive(char::is_whitespace) {
        let pos = offset;
        offset += piece.len();
        let token = piece.trim();
        if token.is_empty() {
            continue;
        }
        let letter = parse_token(token, k).map_err(|msg| Error::Parse { pos, msg })?;
        w.push(letter).map_err(|e| Error::Parse { pos, msg: e.to_string() })?;
    }
    Ok(w)
}

fn parse_token(token: &str, k: usize) -> std::result::Result<Letter, String> {
    let body = token.strip_prefix('t').ok_or_else(|| format!("token {token:?} must start with 't'"))?;
    let (pair, exp) = match body.split_once('^') {
        Some((pair, exp)) => {
            let e: i64 = exp.parse().map_err(|_| format!("bad exponent in {token:?}"))?;
            (pair, e)
        }
        None => (body, 1),
    };
    let (a, b) = pair.split_once(',').ok_or_else(|| format!("token {token:?} needs two strand indices"))?;
    let a: usize = a.parse().map_err(|_| format!("bad strand index in {token:?}"))?;
    let b: usize = b.parse().map_err(|_| format!("bad strand index in {token:?}"))?;
    let pair = PairVar::within(a, b, k).map_err(|e| e.to_string())?;
    Ok(Letter { pair, exp })
}

/// Exponent sums `l(i,j)` for every pair of `1..=k`.
pub fn linking_matrix(w: &BraidWord) -> Assignment {
    let mut l: Assignment = PairVar::all(w.k).map(|v| (v, BigInt::from(0))).collect();
    for letter in &w.letters {
        *l.get_mut(&letter.pair).expect("pair in range") += letter.exp;
    }
    l
}

/// Normal form `τ(r,s)^alpha τ(r,t)^beta τ(s,t)^gamma [τ(r,t),τ(s,t)]^delta`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NormalForm3 {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Rs,
    Rt,
    St,
}

fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

impl NormalForm3 {
    pub fn new(alpha: i64, beta: i64, gamma: i64, delta: i64) -> Self {
        NormalForm3 { alpha, beta, gamma, delta }
    }

    /// Right-multiplies by one generator power, moving it left past the
    /// generators it does not already sit behind.
    pub fn push(&mut self, role: Role, e: i64) -> Result<()> {
        match role {
            Role::Rs => {
                self.alpha = add(self.alpha, e)?;
                let diff = self.gamma.checked_sub(self.beta).ok_or(Error::Overflow)?;
                self.delta = add(self.delta, mul(e, diff)?)?;
            }
            Role::Rt => {
                self.beta = add(self.beta, e)?;
                self.delta = add(self.delta, mul(-e, self.gamma)?)?;
            }
            Role::St => self.gamma = add(self.gamma, e)?,
        }
        Ok(())
    }

    /// Group product `self · other` in the class-2 quotient.
    pub fn compose(&self, other: &NormalForm3) -> Result<NormalForm3> {
        let mut out = *self;
        out.push(Role::Rs, other.alpha)?;
        out.push(Role::Rt, other.beta)?;
        out.push(Role::St, other.gamma)?;
        out.delta = add(out.delta, other.delta)?;
        Ok(out)
    }
}

fn role_of(pair: PairVar, t: TripleIndex) -> Option<Role> {
    if pair == t.rs() {
        Some(Role::Rs)
    } else if pair == t.rt() {
        Some(Role::Rt)
    } else if pair == t.st() {
        Some(Role::St)
    } else {
        None
    }
}

/// Collects a word whose letters all lie on the pairs of `triple`.
pub fn collect3(w: &BraidWord, triple: TripleIndex) -> Result<NormalForm3> {
    let mut nf = NormalForm3::default();
    for letter in &w.letters {
        let role = role_of(letter.pair, triple).ok_or(Error::LetterOutsideTriple {
            pair: letter.pair,
            r: triple.r,
            s: triple.s,
            t: triple.t,
        })?;
        nf.push(role, letter.exp)?;
    }
    Ok(nf)
}

/// Linking numbers and all triple linking numbers of `w`.
pub fn mu_all(w: &BraidWord) -> Result<LinkData> {
    if w.k < 3 {
        return Err(Error::TooFewStrands { k: w.k, min: 3 });
    }
    let mut mu = Vec::with_capacity(binomial(w.k, 3));
    for t in triples(w.k) {
        let sub = w.delete_strands(&[t.r, t.s, t.t]);
        mu.push(BigInt::from(collect3(&sub, t)?.delta));
    }
    Ok(LinkData { k: w.k, l: linking_matrix(w), mu })
}

/// Reverses the letter order, keeping exponents. This is the effect on
/// braid words of reversing every component's orientation.
pub fn reverse_word(w: &BraidWord) -> BraidWord {
    BraidWord { k: w.k, letters: w.letters.iter().rev().copied().collect() }
}

/// `g · w · g⁻¹`.
pub fn conjugate_word(w: &BraidWord, g: Letter) -> Result<BraidWord> {
    let mut out = BraidWord::identity(w.k);
    out.push(g)?;
    let mut out = out.concat(w)?;
    out.push(g.inverse())?;
    Ok(out)
}

/// A random word of at most `max_len` letters with exponents in
/// `-max_exp..=max_exp`, excluding zero. Merging may shorten it.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, k: usize, max_len: usize, max_exp: i64) -> BraidWord {
    let pairs: Vec<PairVar> = PairVar::all(k).collect();
    let len = rng.gen_range(0..=max_len);
    let mut w = BraidWord::identity(k);
    for _ in 0..len {
        let pair = pairs[rng.gen_range(0..pairs.len())];
        let magnitude = rng.gen_range(1..=max_exp.max(1));
        let exp = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
        w.push(Letter { pair, exp }).expect("pair within range");
    }
    w
}
