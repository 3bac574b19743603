use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::mpoly::{Assignment, PairVar};

/// The Mersenne prime `2^61 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;
pub const DEFAULT_TRIALS: usize = 8;
pub const MIN_PRIME: u64 = 1 << 20;

/// Rank of `m` at generic values of the variables.
///
/// Each trial substitutes independent uniform residues mod `prime` for every
/// `l(i,j)` and row-reduces over `GF(prime)`; the maximum over trials is
/// returned. Every trial rank is a lower bound for the generic rank, and a
/// single trial falls short only when a nonzero maximal minor vanishes at the
/// sample point, which happens with probability at most `degree / prime`.
pub fn generic_rank(m: &PolyMatrix, trials: usize, prime: u64, seed: u64) -> Result<usize> {
    if prime < MIN_PRIME || !num_prime::nt_funcs::is_prime64(prime) {
        return Err(Error::BadPrime(prime));
    }
    if trials == 0 {
        return Err(Error::Invalid("generic_rank needs at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials {
        let values: Assignment = PairVar::all(m.k()).map(|v| (v, BigInt::from(rng.gen_range(0..prime)))).collect();
        let evaluated = m.eval_mod(&values, prime)?;
        best = best.max(rank_mod_p(evaluated, prime));
        if best == m.n_rows().min(m.n_cols()) {
            break;
        }
    }
    Ok(best)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank of an integer matrix with entries in `0..p` over `GF(p)`, `p` prime.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in &mut rows[rank][col..] {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for c in col..n_cols {
                let sub = mul_mod(f, pivot_row[c], p);
                row[c] = (row[c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}
