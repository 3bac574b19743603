//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use link_homotopy::mpoly::{Assignment, Monomial, PairVar, Poly};
use num_bigint::BigInt;
use rand::Rng;

pub fn l(i: usize, j: usize) -> Poly {
    Poly::var(PairVar::new(i, j).unwrap())
}

pub fn random_monomial<R: Rng>(rng: &mut R, k: usize, max_deg: u32) -> Monomial {
    let vars: Vec<PairVar> = PairVar::all(k).collect();
    let deg = rng.gen_range(0..=max_deg);
    Monomial::from_factors((0..deg).map(|_| (vars[rng.gen_range(0..vars.len())], 1)))
}

pub fn random_poly<R: Rng>(rng: &mut R, k: usize, max_terms: usize, max_deg: u32, coeff: i64) -> Poly {
    let n = rng.gen_range(0..=max_terms);
    Poly::from_terms((0..n).map(|_| (random_monomial(rng, k, max_deg), rng.gen_range(-coeff..=coeff))))
}

/// Each entry is zero with probability `1 - density`.
pub fn random_sparse_matrix<R: Rng>(rng: &mut R, k: usize, rows: usize, cols: usize, density: f64) -> Vec<Vec<Poly>> {
    (0..rows)
        .map(|_| {
            (0..cols).map(|_| if rng.gen_bool(density) { random_poly(rng, k, 3, 2, 4) } else { Poly::zero() }).collect()
        })
        .collect()
}

pub fn random_assignment<R: Rng>(rng: &mut R, k: usize, range: i64) -> Assignment {
    PairVar::all(k).map(|v| (v, BigInt::from(rng.gen_range(-range..=range)))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i32 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_σ sgn(σ) Π_i a[i][σ(i)]`.
pub fn leibniz_det(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    let mut total = Poly::zero();
    for p in permutations(n) {
        let mut prod = Poly::one();
        for (i, &j) in p.iter().enumerate() {
            prod = &prod * &a[i][j];
            if prod.is_zero() {
                break;
            }
        }
        total = if sign(&p) > 0 { &total + &prod } else { &total - &prod };
    }
    total
}

/// Polynomials as dense exponent vectors over `PairVar::all(k)`.
pub type Dense = BTreeMap<Vec<u32>, BigInt>;

pub fn to_dense(p: &Poly, k: usize) -> Dense {
    let vars: Vec<PairVar> = PairVar::all(k).collect();
    p.terms().map(|(m, c)| (vars.iter().map(|&v| m.exponent(v)).collect(), c.clone())).collect()
}

/// Schoolbook product over every pair of terms.
pub fn naive_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != BigInt::from(0));
    out
}

pub fn naive_eval(a: &Dense, k: usize, values: &Assignment) -> BigInt {
    let vars: Vec<PairVar> = PairVar::all(k).collect();
    a.iter()
        .map(|(e, c)| {
            let mut t = c.clone();
            for (v, &n) in vars.iter().zip(e) {
                for _ in 0..n {
                    t *= &values[v];
                }
            }
            t
        })
        .sum()
}

/// Integer determinant by cofactor expansion along the first row.
pub fn int_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for j in 0..n {
        if a[0][j] == BigInt::from(0) {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &a[0][j] * int_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}
