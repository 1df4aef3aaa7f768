use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braid_tc::bounds::{analyze, tc_bounds};
use braid_tc::equivalence::{equals, NormalForm};
use braid_tc::linking::{exponents_from_linking, linking_matrix, ExponentVector};
use braid_tc::permutation::fit_into_young;
use braid_tc::rewrite::{apply, candidates, scramble};
use braid_tc::torsion::gcd;
use braid_tc::{BraidWord, CycleType, GroupSpec, Permutation};

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let gen = (1..n as i64).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
    prop::collection::vec(gen, 0..=max_len)
        .prop_map(move |s| BraidWord::from_signed(n, &s).unwrap())
}

fn sized_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| word(n, max_len))
}

fn word_pair(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word(n, max_len), word(n, max_len)))
}

fn word_triple(max_n: usize, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    (2..=max_n).prop_flat_map(move |n| (word(n, max_len), word(n, max_len), word(n, max_len)))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

/// Random subgroup given by 1–3 generators, each keeping a random subset of
/// the cycles of a random permutation so that orbit structures vary.
fn random_group(n: usize, seed: u64) -> GroupSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(1..=3);
    let gens = (0..count)
        .map(|_| {
            let mut images: Vec<usize> = (1..=n).collect();
            images.shuffle(&mut rng);
            let p = Permutation::from_images(&images).unwrap();
            let kept: Vec<Vec<usize>> = p
                .cycles()
                .into_iter()
                .filter(|c| c.len() > 1 && rng.gen_bool(0.5))
                .collect();
            Permutation::from_cycles(n, &kept).unwrap()
        })
        .collect();
    GroupSpec::generated(n, gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn concat_is_associative((a, b, c) in word_triple(6, 12)) {
        let left = a.concat(&b).unwrap().concat(&c).unwrap();
        let right = a.concat(&b.concat(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_reverses_products((a, b) in word_pair(6, 12)) {
        prop_assert_eq!(a.concat(&b).unwrap().invert(), b.invert().concat(&a.invert()).unwrap());
        prop_assert_eq!(a.invert().invert(), a);
    }

    #[test]
    fn permutation_is_a_homomorphism((a, b) in word_pair(7, 16)) {
        let ab = a.concat(&b).unwrap().permutation();
        prop_assert_eq!(ab, a.permutation().compose(&b.permutation()).unwrap());
        prop_assert_eq!(a.invert().permutation(), a.permutation().inverse());
    }

    #[test]
    fn free_reduction_is_idempotent_and_shortening(w in sized_word(6, 24)) {
        let r = w.free_reduce();
        prop_assert!(r.len() <= w.len());
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.letters().windows(2).all(|p| p[0] != p[1].inverse()));
        prop_assert!(equals(&w, &r).unwrap().equal);
    }

    #[test]
    fn rewrites_preserve_invariants(w in sized_word(7, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = w.clone();
        for _ in 0..20 {
            let options = candidates(&current, 64);
            let Some(&r) = options.choose(&mut rng) else { break };
            current = apply(&current, r);
            prop_assert!(current.len() <= 64);
        }
        prop_assert_eq!(current.exponent_sum(), w.exponent_sum());
        prop_assert_eq!(current.permutation(), w.permutation());
        prop_assert_eq!(linking_matrix(&current), linking_matrix(&w));
    }

    #[test]
    fn equality_is_reflexive_and_symmetric((a, b) in word_pair(5, 14)) {
        prop_assert!(equals(&a, &a).unwrap().equal);
        prop_assert_eq!(equals(&a, &b).unwrap().equal, equals(&b, &a).unwrap().equal);
    }

    #[test]
    fn scrambled_words_are_equal(w in sized_word(6, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = scramble(&w, 30, 64, &mut rng);
        prop_assert!(equals(&w, &s).unwrap().equal);
    }

    #[test]
    fn equal_words_share_invariants((a, b) in word_pair(4, 8)) {
        if equals(&a, &b).unwrap().equal {
            prop_assert_eq!(a.permutation(), b.permutation());
            prop_assert_eq!(a.exponent_sum(), b.exponent_sum());
            prop_assert_eq!(linking_matrix(&a), linking_matrix(&b));
        }
        if a.permutation() != b.permutation() || a.exponent_sum() != b.exponent_sum() {
            prop_assert!(!equals(&a, &b).unwrap().equal);
        }
    }

    #[test]
    fn normal_forms_are_canonical(w in sized_word(6, 20), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = scramble(&w, 20, 64, &mut rng);
        let (a, _) = NormalForm::of(&w).unwrap();
        let (b, _) = NormalForm::of(&s).unwrap();
        prop_assert!(a.is_well_formed());
        prop_assert_eq!(a.infimum(), b.infimum());
        prop_assert_eq!(a.factor_permutations(), b.factor_permutations());
        prop_assert!(equals(&a.to_word(), &w).unwrap().equal);
    }

    #[test]
    fn cycle_type_is_conjugation_invariant(
        (p, q) in (2usize..=10).prop_flat_map(|n| (permutation(n), permutation(n)))
    ) {
        prop_assert_eq!(p.conjugate_by(&q).unwrap().cycle_type(), p.cycle_type());
        prop_assert_eq!(p.cycle_type().degree(), p.degree());
    }

    #[test]
    fn linking_is_additive_on_pure_braids(
        (n, a, b, g) in (2usize..=6).prop_flat_map(|n| {
            let exps = prop::collection::vec(-3i64..=3, n - 1);
            (Just(n), exps.clone(), exps, word(n, 8))
        }),
    ) {
        let x = ExponentVector(a).to_word().unwrap();
        // any conjugate of a pure braid is pure
        let y = ExponentVector(b).to_word().unwrap().conjugate_by(&g).unwrap();
        let sum = linking_matrix(&x.concat(&y).unwrap());
        let (lx, ly) = (linking_matrix(&x), linking_matrix(&y));
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(sum.get(i, j), lx.get(i, j) + ly.get(i, j));
            }
        }
    }

    #[test]
    fn exponents_round_trip(exps in (2usize..=7).prop_flat_map(|n| prop::collection::vec(-4i64..=4, n - 1))) {
        let w = ExponentVector(exps.clone()).to_word().unwrap();
        prop_assert_eq!(exponents_from_linking(&w).unwrap().0, exps);
    }

    #[test]
    fn bounds_grow_with_m(n in 2usize..=12, seed in any::<u64>(), m in 2usize..=6) {
        let g = random_group(n, seed);
        let a = tc_bounds(n, &g, m).unwrap();
        let b = tc_bounds(n, &g, m + 1).unwrap();
        prop_assert!(a.lower <= a.upper);
        prop_assert!(a.lower <= b.lower && a.upper <= b.upper);
        prop_assert!(a.lower >= (n - 1) as i64);
        prop_assert!(a.upper <= (m * (n - 1)) as i64);
    }

    #[test]
    fn subgroups_get_tighter_bounds(n in 3usize..=10, seed in any::<u64>(), m in 2usize..=4) {
        let g = random_group(n, seed);
        let gens = g.generators();
        let h = GroupSpec::generated(n, gens[..1].to_vec()).unwrap();
        let (bg, bh) = (tc_bounds(n, &g, m).unwrap(), tc_bounds(n, &h, m).unwrap());
        prop_assert!(bh.lower >= bg.lower);
        prop_assert!(bh.upper <= bg.upper);
    }

    #[test]
    fn exactness_characterised_by_orbits(n in 3usize..=10, seed in any::<u64>(), m in 2usize..=5) {
        let g = random_group(n, seed);
        let a = analyze(&g);
        let r = tc_bounds(n, &g, m).unwrap();
        let lower_hits = a.fixed_points >= 1 || a.bipartitions.iter().any(|b| b.smaller_block() == 2);
        let upper_hits = a.fixed_points >= 2 || a.bipartitions.iter().any(|b| b.coprime());
        prop_assert_eq!(r.exact, lower_hits && upper_hits);
        if r.exact {
            prop_assert_eq!(r.lower, (m * (n - 1)) as i64 - 1);
        }
    }
}

#[test]
fn block_bound_at_m_2() {
    for n in 4..=16 {
        for k in 2..=n / 2 {
            let r = tc_bounds(n, &GroupSpec::mixed(n - k, k), 2).unwrap();
            assert_eq!(r.lower, (2 * n - k - 1) as i64, "n={n} k={k}");
        }
    }
}

#[test]
fn exact_with_a_single_fixed_point() {
    let g = GroupSpec::parse_generators(8, "(1 2 3 4 5);(6 7)").unwrap();
    assert_eq!(analyze(&g).fixed_points, 1);
    let r = tc_bounds(8, &g, 2).unwrap();
    assert_eq!((r.lower, r.upper, r.exact), (13, 13, true));
}

#[test]
fn powers_of_an_n_cycle() {
    for n in 1..=24 {
        let cycle: Vec<usize> = (1..=n).collect();
        let c = Permutation::from_cycles(n, &[cycle]).unwrap();
        for p in 0..=2 * n as i64 {
            let d = gcd(p as u64, n as u64) as usize;
            let expected = CycleType::from_parts(vec![n / d; d]).unwrap();
            assert_eq!(c.pow(p).cycle_type(), expected, "n={n} p={p}");
        }
    }
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn young_fit_matches_subset_enumeration() {
    for n in 1..=14 {
        for parts in partitions(n, n) {
            let ct = CycleType::from_parts(parts.clone()).unwrap();
            for k in 0..=n {
                let brute = (0u32..1 << parts.len()).any(|mask| {
                    let s: usize = (0..parts.len()).filter(|i| mask >> i & 1 == 1).map(|i| parts[i]).sum();
                    s == k
                });
                let fit = fit_into_young(&ct, n - k, k);
                assert_eq!(fit.is_some(), brute, "{ct} k={k}");
                if let Some(split) = fit {
                    assert_eq!(split.second.iter().sum::<usize>(), k);
                    assert_eq!(split.first.iter().sum::<usize>(), n - k);
                }
            }
        }
    }
}
