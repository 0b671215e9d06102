use ims_core::atoms::{eval_expr, AtomSet};
use ims_core::gsbasis::chain_constraint;
use ims_core::markov::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Direct bit predicate for the `i`-th term, written independently of the library.
fn brute_k(n: usize) -> Vec<usize> {
    (0..1usize << n)
        .filter(|&k| {
            (1..=n - 2).any(|i| {
                let low = (0..i).any(|b| k >> b & 1 == 1);
                low && k >> i & 1 == 0 && k >> (i + 1) & 1 == 1
            })
        })
        .collect()
}

#[test]
fn closed_form_matches_brute_force_and_constraints() {
    for n in 3..=12 {
        let k = k_set(n).unwrap();
        assert_eq!(k.eliminated, brute_k(n), "n={n}");
        let mut union = AtomSet::empty(n).unwrap();
        for (idx, i) in (1..=n - 2).enumerate() {
            let c = ci_atoms(&CIConstraint::chain(i), n).unwrap();
            assert_eq!(k.terms[idx].atoms, c.to_vec());
            union = union.join(&c).unwrap();
        }
        assert_eq!(union.to_vec(), k.eliminated);
    }
}

#[test]
fn elimination_sets_nest() {
    for n in 3..8 {
        let small = k_set(n).unwrap().eliminated;
        let big = k_set(n + 1).unwrap().eliminated;
        assert!(small.iter().all(|k| big.contains(k)));
    }
}

#[test]
fn chain_relations_vanish_in_the_quotient() {
    for n in 3..=8 {
        for i in 1..=n - 2 {
            assert!(markov_normalize(&chain_constraint(i), n)
                .unwrap()
                .is_empty());
            assert_eq!(
                eval_expr(&chain_constraint(i), n).unwrap(),
                ci_atoms(&CIConstraint::chain(i), n).unwrap()
            );
        }
    }
}

#[test]
fn quotient_is_a_complement_semiring() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 3..=6 {
        let one = markov_universe(n).unwrap();
        let zero = AtomSet::empty(n).unwrap();
        for _ in 0..500 {
            let s = AtomSet::from_predicate(n, |_| rng.random_bool(0.5))
                .unwrap()
                .meet(&one)
                .unwrap();
            let t = markov_complement(&s).unwrap();
            assert_eq!(s.meet(&t).unwrap(), zero);
            assert_eq!(s.join(&t).unwrap(), one);
            assert_eq!(s.meet(&s).unwrap(), s);
            assert_eq!(s.join(&s).unwrap(), s);
            assert_eq!(markov_complement(&t).unwrap(), s);
        }
    }
}

#[test]
fn reversal_holds() {
    for n in 3..=12 {
        assert!(check_reversal(n).unwrap(), "n={n}");
    }
}

#[test]
fn kset_json_shape() {
    let k = k_set(4).unwrap();
    let v = serde_json::to_value(&k).unwrap();
    assert_eq!(
        v,
        serde_json::json!({
            "n": 4,
            "eliminated": [5, 9, 10, 11, 13],
            "terms": [{"i": 1, "atoms": [5, 13]}, {"i": 2, "atoms": [9, 10, 11]}]
        })
    );
}
