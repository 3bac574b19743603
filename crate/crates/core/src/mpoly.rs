//! Sparse multivariate polynomials over the integers in the linking-number
//! variables `l(i,j)`.
//!
//! A [`Poly`] maps [`Monomial`]s to nonzero [`BigInt`] coefficients. Monomials
//! are ordered graded-lexicographically with the variable order
//! `l(1,2) < l(1,3) < ... < l(k-1,k)`; that order fixes the canonical text
//! rendering used by the certificate format.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An unordered strand pair, stored as `i < j`. Stands for the variable `l(i,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairVar {
    i: u32,
    j: u32,
}

impl PairVar {
    /// Canonicalizes `(a, b)` so that `l(a,b) = l(b,a)`.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::StrandOutOfRange { index: a, k: a.max(b) });
        }
        if b == 0 {
            return Err(Error::StrandOutOfRange { index: b, k: a.max(b) });
        }
        if a == b {
            return Err(Error::EqualStrands(a));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        Ok(PairVar { i: i as u32, j: j as u32 })
    }

    /// Like [`PairVar::new`] but also checks both indices lie in `1..=k`.
    pub fn within(a: usize, b: usize, k: usize) -> Result<Self> {
        for index in [a, b] {
            if index == 0 || index > k {
                return Err(Error::StrandOutOfRange { index, k });
            }
        }
        Self::new(a, b)
    }

    pub fn i(&self) -> usize {
        self.i as usize
    }

    pub fn j(&self) -> usize {
        self.j as usize
    }

    /// All `C(k,2)` variables in ascending order.
    pub fn all(k: usize) -> impl Iterator<Item = PairVar> {
        (1..=k).flat_map(move |i| (i + 1..=k).map(move |j| PairVar { i: i as u32, j: j as u32 }))
    }
}

impl fmt::Display for PairVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l({},{})", self.i, self.j)
    }
}

/// Values for the variables, as used by [`Poly::eval`].
pub type Assignment = BTreeMap<PairVar, BigInt>;

/// A power product of variables. Factors are sorted by variable and carry
/// positive exponents; the empty product is the constant monomial `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(PairVar, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: PairVar) -> Self {
        Monomial { factors: vec![(v, 1)], degree: 1 }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging
    /// repeats and dropping zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (PairVar, u32)>>(factors: I) -> Self {
        let mut merged: BTreeMap<PairVar, u32> = BTreeMap::new();
        for (v, e) in factors {
            *merged.entry(v).or_insert(0) += e;
        }
        let factors: Vec<_> = merged.into_iter().filter(|&(_, e)| e > 0).collect();
        let degree = factors.iter().map(|&(_, e)| e).sum();
        Monomial { factors, degree }
    }

    pub fn factors(&self) -> &[(PairVar, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: PairVar) -> u32 {
        match self.factors.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(pos) => self.factors[pos].1,
            Err(_) => 0,
        }
    }

    /// Product with a single variable.
    pub fn times_var(&self, v: PairVar) -> Monomial {
        let mut factors = self.factors.clone();
        match factors.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(pos) => factors[pos].1 += 1,
            Err(pos) => factors.insert(pos, (v, 1)),
        }
        Monomial { factors, degree: self.degree + 1 }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut rest = other.factors.iter().peekable();
        for &(v, e) in &self.factors {
            match rest.peek() {
                Some(&&(w, d)) if w == v => {
                    rest.next();
                    if d > e {
                        return None;
                    }
                    if d < e {
                        factors.push((v, e - d));
                    }
                }
                Some(&&(w, _)) if w < v => return None,
                _ => factors.push((v, e)),
            }
        }
        if rest.next().is_some() {
            return None;
        }
        Some(Monomial { factors, degree: self.degree - other.degree })
    }
}

impl Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + rhs.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), rhs.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(v, e)), Some(&&(w, d))) => match v.cmp(&w) {
                    Ordering::Less => {
                        factors.push((v, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        factors.push((w, d));
                        b.next();
                    }
                    Ordering::Equal => {
                        factors.push((v, e + d));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&f), None) => {
                    factors.push(f);
                    a.next();
                }
                (None, Some(&&f)) => {
                    factors.push(f);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { factors, degree: self.degree + rhs.degree }
    }
}

impl Ord for Monomial {
    /// Graded lex: total degree first, then the larger exponent at the first
    /// variable (in ascending variable order) where the two differ.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (&(v, e), &(w, d)) in self.factors.iter().zip(&other.factors) {
                if v != w {
                    return if v < w { Ordering::Greater } else { Ordering::Less };
                }
                if e != d {
                    return e.cmp(&d);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (n, (v, e)) in self.factors.iter().enumerate() {
            if n > 0 {
                write!(f, "*")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Summary statistics of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Measure {
    pub term_count: usize,
    pub total_degree: u32,
    pub homogeneous: bool,
    /// gcd of the absolute coefficients; zero for the zero polynomial.
    pub content: BigInt,
}

/// Sparse integer polynomial. Never stores a zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: PairVar) -> Self {
        Poly::term(Monomial::var(v), 1)
    }

    pub fn term<C: Into<BigInt>>(m: Monomial, c: C) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Sums arbitrary terms, merging equal monomials and dropping zeros.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial under the graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += sign * var * other`, the inner step of cofactor expansion
    /// along rows whose entries are single signed variables.
    pub fn add_signed_var_multiple(&mut self, other: &Poly, var: PairVar, negate: bool) {
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            self.add_term(m.times_var(var), c);
        }
    }

    /// `self += coeff * mono * other`.
    pub fn add_scaled(&mut self, other: &Poly, mono: &Monomial, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m * mono, c * coeff);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly::zero();
        out.add_scaled(self, &Monomial::one(), c);
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn measure(&self) -> Measure {
        Measure {
            term_count: self.term_count(),
            total_degree: self.total_degree(),
            homogeneous: self.is_homogeneous(),
            content: self.content(),
        }
    }

    /// Variables occurring in the polynomial, ascending.
    pub fn variables(&self) -> Vec<PairVar> {
        let mut vars: Vec<PairVar> = self.terms.keys().flat_map(|m| m.factors.iter().map(|&(v, _)| v)).collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Exact integer value at `values`.
    pub fn eval(&self, values: &Assignment) -> Result<BigInt> {
        if let Some(v) = self.eval_small(values)? {
            return Ok(BigInt::from(v));
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.factors {
                let x = values.get(v).ok_or(Error::MissingVariable(*v))?;
                t *= num_traits::pow(x.clone(), *e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Fast path of [`Poly::eval`] in `i128`; `None` when anything overflows.
    fn eval_small(&self, values: &Assignment) -> Result<Option<i128>> {
        let mut acc: i128 = 0;
        let mut ok = true;
        for (m, c) in &self.terms {
            let mut t = c.to_i128();
            for (v, e) in &m.factors {
                let x = values.get(v).ok_or(Error::MissingVariable(*v))?;
                if !ok {
                    continue;
                }
                let x = x.to_i128();
                t = match (t, x) {
                    (Some(t), Some(x)) => (0..*e).try_fold(t, |t, _| t.checked_mul(x)),
                    _ => None,
                };
            }
            match t.and_then(|t| acc.checked_add(t)) {
                Some(s) if ok => acc = s,
                _ => ok = false,
            }
        }
        Ok(ok.then_some(acc))
    }

    /// Value modulo `prime`, as a residue in `0..prime`.
    pub fn eval_mod(&self, values: &Assignment, prime: u64) -> Result<u64> {
        let p = prime as u128;
        let reduce = |x: &BigInt| -> u64 {
            let r = x.mod_floor(&BigInt::from(prime));
            r.to_u64().unwrap_or(0)
        };
        let mut acc: u128 = 0;
        for (m, c) in &self.terms {
            let mut t = reduce(c) as u128;
            for (v, e) in &m.factors {
                let x = reduce(values.get(v).ok_or(Error::MissingVariable(*v))?) as u128;
                for _ in 0..*e {
                    t = t * x % p;
                }
            }
            acc = (acc + t) % p;
        }
        Ok(acc as u64)
    }

    /// Exact quotient `self / divisor`, failing unless the division leaves
    /// no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::InexactDivision)?;
        let mut rem = self.clone();
        let mut quotient = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m).ok_or(Error::InexactDivision)?;
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem.add_scaled(divisor, &qm, &-&qc);
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Canonical text: one term per line in descending monomial order, each
    /// `<signed coefficient>` followed by `l(i,j)` or `l(i,j)^e` factors in
    /// ascending variable order. The zero polynomial renders as no lines.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            out.push_str(&render_term(m, c));
            out.push('\n');
        }
        out
    }

    /// Parses the output of [`Poly::to_canonical_text`].
    pub fn from_canonical_text(text: &str) -> Result<Poly> {
        let mut p = Poly::zero();
        for (n, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (m, c) = parse_term(line).map_err(|msg| Error::Parse { pos: n + 1, msg })?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

/// A polynomial prepared for repeated evaluation over a fixed variable list.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    vars: Vec<PairVar>,
    max_exp: u32,
    terms: Vec<(BigInt, Vec<(usize, u32)>)>,
}

impl Poly {
    /// Fails if the polynomial uses a variable outside `vars`.
    pub fn compile(&self, vars: &[PairVar]) -> Result<CompiledPoly> {
        let mut max_exp = 0;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut factors = Vec::with_capacity(m.factors.len());
            for &(v, e) in &m.factors {
                let idx = vars.iter().position(|&w| w == v).ok_or(Error::MissingVariable(v))?;
                max_exp = max_exp.max(e);
                factors.push((idx, e));
            }
            terms.push((c.clone(), factors));
        }
        Ok(CompiledPoly { vars: vars.to_vec(), max_exp, terms })
    }
}

impl CompiledPoly {
    pub fn vars(&self) -> &[PairVar] {
        &self.vars
    }

    /// Value at `values`, given in the order of [`CompiledPoly::vars`].
    pub fn eval(&self, values: &[i64]) -> Result<BigInt> {
        if values.len() != self.vars.len() {
            return Err(Error::LengthMismatch { expected: self.vars.len(), found: values.len() });
        }
        if let Some(v) = self.eval_i128(values) {
            return Ok(BigInt::from(v));
        }
        let powers: Vec<Vec<BigInt>> = values
            .iter()
            .map(|&x| {
                let x = BigInt::from(x);
                let mut row = vec![BigInt::one()];
                for e in 1..=self.max_exp as usize {
                    let next = &row[e - 1] * &x;
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = BigInt::zero();
        for (c, factors) in &self.terms {
            let mut t = c.clone();
            for &(idx, e) in factors {
                t *= &powers[idx][e as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    fn eval_i128(&self, values: &[i64]) -> Option<i128> {
        let powers: Vec<Vec<Option<i128>>> = values
            .iter()
            .map(|&x| {
                let mut row = vec![Some(1i128)];
                for e in 1..=self.max_exp as usize {
                    let next = row[e - 1].and_then(|p| p.checked_mul(x as i128));
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc: i128 = 0;
        for (c, factors) in &self.terms {
            let mut t = c.to_i128()?;
            for &(idx, e) in factors {
                t = t.checked_mul(powers[idx][e as usize]?)?;
            }
            acc = acc.checked_add(t)?;
        }
        Some(acc)
    }
}

pub(crate) fn render_term(m: &Monomial, c: &BigInt) -> String {
    let mut s = if c.is_negative() { c.to_string() } else { format!("+{c}") };
    for (v, e) in &m.factors {
        s.push(' ');
        s.push_str(&v.to_string());
        if *e > 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    s
}

pub(crate) fn parse_term(line: &str) -> std::result::Result<(Monomial, BigInt), String> {
    let mut tokens = line.split_whitespace();
    let coeff = tokens.next().ok_or("empty term")?;
    let c: BigInt = coeff.parse().map_err(|_| format!("bad coefficient {coeff:?}"))?;
    let mut factors = Vec::new();
    for tok in tokens {
        factors.push(parse_factor(tok).ok_or_else(|| format!("bad factor {tok:?}"))?);
    }
    Ok((Monomial::from_factors(factors), c))
}

fn parse_factor(tok: &str) -> Option<(PairVar, u32)> {
    let rest = tok.strip_prefix("l(")?;
    let (pair, tail) = rest.split_once(')')?;
    let (a, b) = pair.split_once(',')?;
    let v = PairVar::new(a.parse().ok()?, b.parse().ok()?).ok()?;
    let e = match tail {
        "" => 1,
        t => t.strip_prefix('^')?.parse().ok().filter(|&e| e > 0)?,
    };
    Some((v, e))
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (mut big, small) =
            if self.terms.len() >= rhs.terms.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let (outer, inner) = if self.terms.len() <= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = Poly::zero();
        for (m, c) in &outer.terms {
            out.add_scaled(inner, m, c);
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(i: usize, j: usize) -> Poly {
        Poly::var(PairVar::new(i, j).unwrap())
    }

    fn assign(pairs: &[((usize, usize), i64)]) -> Assignment {
        pairs.iter().map(|&((i, j), x)| (PairVar::new(i, j).unwrap(), BigInt::from(x))).collect()
    }

    #[test]
    fn pair_var_is_unordered() {
        assert_eq!(PairVar::new(3, 1).unwrap(), PairVar::new(1, 3).unwrap());
        assert_eq!(PairVar::new(2, 2), Err(Error::EqualStrands(2)));
        assert!(PairVar::within(1, 7, 6).is_err());
        let all: Vec<_> = PairVar::all(4).map(|v| (v.i(), v.j())).collect();
        assert_eq!(all, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    }

    #[test]
    fn add_examples() {
        let p = &l(1, 2) + &l(3, 4);
        assert_eq!(&Poly::zero() + &p, p);
        assert!((&l(1, 2) + &-&l(1, 2)).is_zero());
        let lhs = &(&l(1, 3) + &l(1, 4)) + &l(1, 3);
        let expected = &l(1, 3).scale(&BigInt::from(2)) + &l(1, 4);
        assert_eq!(lhs, expected);
        assert_eq!(lhs.to_string(), "2*l(1,3) + l(1,4)");
    }

    #[test]
    fn mul_examples() {
        let p = &l(1, 2) - &l(2, 3);
        assert_eq!(&Poly::one() * &p, p);
        let q = &l(1, 2) * &l(1, 3);
        assert_eq!(q.term_count(), 1);
        assert_eq!(q.total_degree(), 2);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::zero().eval(&Assignment::new()).unwrap(), BigInt::zero());
        let p = &l(1, 2) + &l(1, 3).scale(&BigInt::from(2));
        let a = assign(&[((1, 2), 3), ((1, 3), 5)]);
        assert_eq!(p.eval(&a).unwrap(), BigInt::from(13));
        assert_eq!(p.eval_mod(&a, 11).unwrap(), 2);
        let missing = assign(&[((1, 2), 3)]);
        assert_eq!(p.eval(&missing), Err(Error::MissingVariable(PairVar::new(1, 3).unwrap())));
    }

    #[test]
    fn eval_falls_back_to_bigint() {
        let p = Poly::term(Monomial::from_factors([(PairVar::new(1, 2).unwrap(), 5)]), 3);
        let a = assign(&[((1, 2), 1 << 40)]);
        let expected = BigInt::from(3) * num_traits::pow(BigInt::from(1i64 << 40), 5);
        assert_eq!(p.eval(&a).unwrap(), expected);
    }

    #[test]
    fn compiled_eval_matches_eval() {
        let vars: Vec<PairVar> = PairVar::all(4).collect();
        let p = &(&(&l(1, 2) * &l(1, 2)) * &l(3, 4)) - &l(2, 4).scale(&BigInt::from(7));
        let c = p.compile(&vars).unwrap();
        for values in [[1i64, 2, 3, 4, 5, 6], [-9, 0, 4, 8, -2, 3], [1 << 40, 0, 0, 0, 5, 1 << 40]] {
            let a: Assignment = vars.iter().zip(values).map(|(&v, x)| (v, BigInt::from(x))).collect();
            assert_eq!(c.eval(&values).unwrap(), p.eval(&a).unwrap());
        }
        assert!(p.compile(&vars[..3]).is_err());
    }

    #[test]
    fn measure_examples() {
        let zero = Poly::zero().measure();
        assert_eq!(zero, Measure { term_count: 0, total_degree: 0, homogeneous: true, content: BigInt::zero() });
        let p = &(&l(1, 2) * &l(1, 3)) - &(&l(1, 2) * &l(2, 3));
        let m = p.measure();
        assert_eq!((m.term_count, m.total_degree, m.homogeneous), (2, 2, true));
        assert_eq!(m.content, BigInt::one());
        let q = &p.scale(&BigInt::from(-6)) + &l(4, 5).scale(&BigInt::from(4));
        assert_eq!(q.content(), BigInt::from(2));
        assert!(!q.is_homogeneous());
    }

    #[test]
    fn graded_lex_order() {
        let v = |i, j| PairVar::new(i, j).unwrap();
        let m = |fs: &[((usize, usize), u32)]| Monomial::from_factors(fs.iter().map(|&((i, j), e)| (v(i, j), e)));
        // degree dominates
        assert!(m(&[((3, 4), 2)]) > m(&[((1, 2), 1)]));
        // earlier variable wins at equal degree
        assert!(m(&[((1, 2), 1)]) > m(&[((1, 3), 1)]));
        assert!(m(&[((1, 2), 1), ((3, 4), 1)]) > m(&[((1, 3), 2)]));
        assert!(m(&[((1, 2), 2)]) > m(&[((1, 2), 1), ((1, 3), 1)]));
        assert!(Monomial::one() < m(&[((5, 6), 1)]));
    }

    #[test]
    fn canonical_text() {
        let p = &(&(&l(1, 2) * &l(1, 2)) - &l(1, 3).scale(&BigInt::from(3))) + &Poly::constant(-7);
        let text = p.to_canonical_text();
        assert_eq!(text, "+1 l(1,2)^2\n-3 l(1,3)\n-7\n");
        assert_eq!(Poly::from_canonical_text(&text).unwrap(), p);
        assert_eq!(Poly::zero().to_canonical_text(), "");
        assert!(Poly::from_canonical_text("+1 l(1,1)").is_err());
        assert!(Poly::from_canonical_text("x l(1,2)").is_err());
        assert!(Poly::from_canonical_text("+1 l(1,2)^0").is_err());
    }

    #[test]
    fn exact_division() {
        let a = &l(1, 2) + &l(1, 3);
        let b = &(&l(2, 3) * &l(1, 4)) - &Poly::constant(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(a.div_exact(&b), Err(Error::InexactDivision));
        assert_eq!(Poly::constant(3).div_exact(&Poly::constant(2)), Err(Error::InexactDivision));
    }
}
