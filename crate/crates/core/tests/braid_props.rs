mod common;

use link_homotopy::action::{triples, TripleIndex};
use link_homotopy::braid::{
    collect3, conjugate_word, linking_matrix, mu_all, parse_word, reverse_word, BraidWord, Letter, NormalForm3,
};
use link_homotopy::mpoly::PairVar;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

const K: usize = 6;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x6272_6169),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn letter(k: usize) -> impl Strategy<Value = Letter> {
    let pairs: Vec<PairVar> = PairVar::all(k).collect();
    (0..pairs.len(), prop_oneof![-3i64..=-1, 1i64..=3]).prop_map(move |(n, exp)| Letter { pair: pairs[n], exp })
}

fn letters(k: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(letter(k), 0..=max_len)
}

fn word(k: usize, ls: &[Letter]) -> BraidWord {
    BraidWord::new(k, ls.iter().copied()).unwrap()
}

/// Element `(x, y, z)` of the integer Heisenberg group, with
/// `(x, y, z)(x', y', z') = (x + x', y + y', z + z' + x y')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Heis(i64, i64, i64);

impl Heis {
    fn mul(self, o: Heis) -> Heis {
        Heis(self.0 + o.0, self.1 + o.1, self.2 + o.2 + self.0 * o.1)
    }

    fn pow(self, e: i64) -> Heis {
        let base = if e < 0 { Heis(-self.0, -self.1, -self.2 + self.0 * self.1) } else { self };
        (0..e.abs()).fold(Heis(0, 0, 0), |acc, _| acc.mul(base))
    }
}

/// Image of a generator: `τ(r,s) ↦ (1,0)`, `τ(r,t) ↦ (0,1)`, `τ(s,t) ↦ (-1,-1)`.
/// The three pairwise determinants are 1, -1, 1, matching the commutator
/// table, and the centre `(0,0,1)` has infinite order, so `δ` can be read off.
fn heis_image(t: TripleIndex, pair: PairVar) -> Heis {
    if pair == t.rs() {
        Heis(1, 0, 0)
    } else if pair == t.rt() {
        Heis(0, 1, 0)
    } else {
        Heis(-1, -1, 0)
    }
}

fn heis_delta(w: &BraidWord, t: TripleIndex) -> i64 {
    let keep = [t.r, t.s, t.t];
    let mut sums = [0i64; 3];
    let mut acc = Heis(0, 0, 0);
    for g in w.letters().iter().filter(|g| keep.contains(&g.pair.i()) && keep.contains(&g.pair.j())) {
        acc = acc.mul(heis_image(t, g.pair).pow(g.exp));
        let slot = if g.pair == t.rs() {
            0
        } else if g.pair == t.rt() {
            1
        } else {
            2
        };
        sums[slot] += g.exp;
    }
    let normal = heis_image(t, t.rs())
        .pow(sums[0])
        .mul(heis_image(t, t.rt()).pow(sums[1]))
        .mul(heis_image(t, t.st()).pow(sums[2]));
    assert_eq!((acc.0, acc.1), (normal.0, normal.1));
    acc.2 - normal.2
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn mu_matches_heisenberg_oracle(ls in letters(K, 40)) {
        let w = word(K, &ls);
        let data = mu_all(&w).unwrap();
        for (n, t) in triples(K).enumerate() {
            prop_assert_eq!(data.mu[n].clone(), BigInt::from(heis_delta(&w, t)));
        }
    }

    #[test]
    fn collection_is_a_homomorphism(ls in letters(3, 30), cut in 0usize..=30) {
        let t = TripleIndex::new(1, 2, 3, 3).unwrap();
        let cut = cut.min(ls.len());
        let (u, v) = (word(3, &ls[..cut]), word(3, &ls[cut..]));
        let whole = collect3(&u.concat(&v).unwrap(), t).unwrap();
        prop_assert_eq!(whole, collect3(&u, t).unwrap().compose(&collect3(&v, t).unwrap()).unwrap());
    }

    #[test]
    fn free_cancellation_changes_nothing(ls in letters(K, 40), g in letter(K), at in 0usize..=40) {
        let at = at.min(ls.len());
        let mut padded = ls.clone();
        padded.splice(at..at, [g, g.inverse()]);
        prop_assert_eq!(mu_all(&word(K, &padded)).unwrap(), mu_all(&word(K, &ls)).unwrap());
    }

    #[test]
    fn deletion_commutes_with_collection(ls in letters(K, 40)) {
        let w = word(K, &ls);
        for t in triples(K) {
            let keep = [t.r, t.s, t.t];
            let sub: Vec<Letter> = ls.iter().copied().filter(|g| t.pairs().contains(&g.pair)).collect();
            prop_assert_eq!(collect3(&w.delete_strands(&keep), t).unwrap(), collect3(&word(K, &sub), t).unwrap());
            prop_assert!(collect3(&w, t).is_ok() || ls.iter().any(|g| !t.pairs().contains(&g.pair)));
        }
    }

    #[test]
    fn mu_is_local_to_its_triple(ls in letters(K, 30), noise in letters(K, 30), seed in 0usize..20) {
        let t = TripleIndex::unrank(K, seed).unwrap();
        let foreign: Vec<Letter> = noise.into_iter().filter(|g| !t.pairs().contains(&g.pair)).collect();
        let mut mixed = Vec::new();
        for (n, g) in ls.iter().enumerate() {
            mixed.push(*g);
            if let Some(f) = foreign.get(n) {
                mixed.push(*f);
            }
        }
        let a = mu_all(&word(K, &ls)).unwrap();
        let b = mu_all(&word(K, &mixed)).unwrap();
        prop_assert_eq!(a.mu_at(t), b.mu_at(t));
        for pair in t.pairs() {
            prop_assert_eq!(&a.l[&pair], &b.l[&pair]);
        }
    }

    #[test]
    fn reverse_and_inverse_are_involutions(ls in letters(K, 40)) {
        let w = word(K, &ls);
        prop_assert_eq!(reverse_word(&reverse_word(&w)), w.clone());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.concat(&w.inverse()).unwrap().is_empty());
        prop_assert_eq!(linking_matrix(&reverse_word(&w)), linking_matrix(&w));
    }

    #[test]
    fn linking_numbers_add_under_concatenation(a in letters(K, 20), b in letters(K, 20), g in letter(K)) {
        let (u, v) = (word(K, &a), word(K, &b));
        let (lu, lv) = (linking_matrix(&u), linking_matrix(&v));
        let luv = linking_matrix(&u.concat(&v).unwrap());
        for pair in PairVar::all(K) {
            prop_assert_eq!(&luv[&pair], &(&lu[&pair] + &lv[&pair]));
        }
        prop_assert_eq!(linking_matrix(&conjugate_word(&u, g).unwrap()), lu);
    }

    #[test]
    fn display_parses_back(ls in letters(K, 40)) {
        let w = word(K, &ls);
        prop_assert_eq!(parse_word(&w.to_string(), K).unwrap(), w);
    }

    #[test]
    fn normal_form_composition_is_associative(
        a in prop::array::uniform4(-6i64..=6),
        b in prop::array::uniform4(-6i64..=6),
        c in prop::array::uniform4(-6i64..=6),
    ) {
        let nf = |x: [i64; 4]| NormalForm3::new(x[0], x[1], x[2], x[3]);
        let (a, b, c) = (nf(a), nf(b), nf(c));
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
        prop_assert_eq!(a.compose(&NormalForm3::default()).unwrap(), a);
    }
}

#[test]
fn full_twist_is_central() {
    let t = TripleIndex::new(1, 2, 3, 3).unwrap();
    let twist = parse_word("t1,2 t1,3 t2,3", 3).unwrap();
    for g in ["t1,2", "t1,3", "t2,3"] {
        let g = parse_word(g, 3).unwrap();
        let lhs = collect3(&g.concat(&twist).unwrap(), t).unwrap();
        let rhs = collect3(&twist.concat(&g).unwrap(), t).unwrap();
        assert_eq!(lhs, rhs, "{g}");
    }
}
