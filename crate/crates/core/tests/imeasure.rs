use ims_core::atoms::{eval_expr, AtomSet};
use ims_core::expr::parse;
use ims_core::imeasure::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Entropy of a marginal computed straight from the table.
fn brute_entropy(d: &JointDistribution, vars: &[usize]) -> f64 {
    let mut marginal = std::collections::HashMap::new();
    let a = d.alphabets();
    for (idx, &p) in d.pmf().iter().enumerate() {
        let mut rest = idx;
        let mut digits = Vec::new();
        for &size in a {
            digits.push(rest % size);
            rest /= size;
        }
        let key: Vec<usize> = vars.iter().map(|&v| digits[v - 1]).collect();
        *marginal.entry(key).or_insert(0.0) += p;
    }
    marginal
        .values()
        .filter(|&&p| p > 0.0)
        .map(|&p: &f64| -p * p.log2())
        .sum()
}

#[test]
fn entropies_match_direct_marginals() {
    let d = random_distribution(&[2, 3, 2], 4).unwrap();
    let h = joint_entropies(&d);
    for mask in 1..8usize {
        let vars: Vec<usize> = (1..=3).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        assert!((h.get(mask) - brute_entropy(&d, &vars)).abs() < 1e-12);
    }
    for a in 1..8usize {
        for b in 1..8usize {
            if a & b == a {
                assert!(h.get(a) <= h.get(b) + 1e-9);
            }
        }
    }
}

#[test]
fn inclusion_exclusion_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for trial in 0..1000u64 {
        let n = rng.random_range(2..=4);
        let d = random_distribution(&vec![2; n], trial).unwrap();
        let m = atom_measures(&joint_entropies(&d));
        let a = AtomSet::from_predicate(n, |_| rng.random_bool(0.5)).unwrap();
        let b = AtomSet::from_predicate(n, |_| rng.random_bool(0.5)).unwrap();
        let lhs = measure_of(&a.meet(&b).unwrap(), &m).unwrap();
        let rhs = measure_of(&a, &m).unwrap() + measure_of(&b, &m).unwrap()
            - measure_of(&a.join(&b).unwrap(), &m).unwrap();
        assert!((lhs - rhs).abs() < 1e-9);
    }
}

#[test]
fn symbolic_measure_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for trial in 0..200u64 {
        let n = rng.random_range(1..=5);
        let d = random_distribution(&vec![2; n], trial).unwrap();
        let h = joint_entropies(&d);
        let m = atom_measures(&h);
        let s = AtomSet::from_predicate(n, |_| rng.random_bool(0.5)).unwrap();
        let combo = symbolic_measure(&s);
        assert!((combo.evaluate(&h) - measure_of(&s, &m).unwrap()).abs() < 1e-8);
    }
}

#[test]
fn conditional_mutual_information_combo() {
    let s = eval_expr(&parse("x1 * x2' * x3", 3).unwrap(), 3).unwrap();
    let combo = symbolic_measure(&s);
    for trial in 0..100u64 {
        let d = random_distribution(&[2, 2, 3], trial).unwrap();
        let h = joint_entropies(&d);
        let direct = brute_entropy(&d, &[1, 2]) + brute_entropy(&d, &[2, 3])
            - brute_entropy(&d, &[2])
            - brute_entropy(&d, &[1, 2, 3]);
        assert!((combo.evaluate(&h) - direct).abs() < 1e-9);
    }
}

#[test]
fn equal_verdicts_are_never_separated() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let pairs = [
        ("x1 + x2", "x1 + x2 * x1'"),
        ("(x1 + x2) * x3", "x1 * x3 + x2 * x3"),
        ("(x1 * x2)'", "x1' + x2'"),
    ];
    for (a, b) in pairs {
        let (ea, eb) = (parse(a, 3).unwrap(), parse(b, 3).unwrap());
        assert!(check_identity(&ea, &eb, 3, Mode::Free, 10, 0)
            .unwrap()
            .is_equal());
        let (sa, sb) = (eval_expr(&ea, 3).unwrap(), eval_expr(&eb, 3).unwrap());
        for _ in 0..DEFAULT_TRIALS {
            let d = random_distribution(&[2, 3, 2], rng.random()).unwrap();
            let m = atom_measures(&joint_entropies(&d));
            let gap = measure_of(&sa, &m).unwrap() - measure_of(&sb, &m).unwrap();
            assert!(gap.abs() <= 1e-8);
        }
    }
}

#[test]
fn markov_mode_uses_the_quotient() {
    let a = parse("x1 * x3", 3).unwrap();
    let b = parse("x1 * x2 * x3", 3).unwrap();
    assert!(check_identity(&a, &b, 3, Mode::Markov, 10, 0)
        .unwrap()
        .is_equal());
    match check_identity(&a, &b, 3, Mode::Free, 100, 0).unwrap() {
        Verdict::NotEqual(Some(c)) => assert!((c.f1 - c.f2).abs() > SEPARATION),
        other => panic!("{other:?}"),
    }
}

#[test]
fn markov_chains_vanish_and_others_do_not() {
    for seed in 0..20 {
        let d = random_markov_distribution(&[2, 2, 2, 2], seed).unwrap();
        let r = verify_markov_vanishing(&d).unwrap();
        assert_eq!(r.constraints.len(), 2);
        assert!(r.all_ok);
    }
    let indep = JointDistribution::new(vec![2, 2, 2], vec![0.125; 8]).unwrap();
    let r = verify_markov_vanishing(&indep).unwrap();
    assert!(r.constraints.iter().all(|c| c.value.abs() < 1e-12));
    // x3 = x1 xor noise, with x2 independent of both
    let mut pmf = vec![0.0; 8];
    for x1 in 0..2 {
        for x2 in 0..2 {
            for noise in 0..2 {
                let p = 0.25 * if noise == 0 { 0.9 } else { 0.1 };
                pmf[x1 + 2 * x2 + 4 * (x1 ^ noise)] += p;
            }
        }
    }
    let d = JointDistribution::new(vec![2, 2, 2], pmf).unwrap();
    let r = verify_markov_vanishing(&d).unwrap();
    assert!(!r.all_ok);
    assert!(r.constraints[0].value > 1e-3);
}

#[test]
fn dense_and_mobius_agree() {
    for n in 1..=4 {
        for seed in 0..20 {
            let d = random_distribution(&vec![3; n], seed).unwrap();
            let h = joint_entropies(&d);
            let a = atom_measures(&h);
            let b = atom_measures_dense(&h).unwrap();
            for k in 0..1usize << n {
                assert!((a.get(k) - b.get(k)).abs() < 1e-9);
            }
        }
    }
}
