use consensus_core::enumerate::{count_partitions, enumerate_partitions, DEFAULT_BUDGET};
use consensus_core::generate::random_partition;
use consensus_core::partition::pair_distance;
use consensus_core::ptas::{
    identify_bad_elements, placement_costs, pval_argmax, pval_levels, val_levels, BlockAssignment,
};
use consensus_core::rng::Rng;
use consensus_core::{solve_exact, Instance, Partition};
use proptest::prelude::*;

fn labels(n: usize, max_blocks: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..max_blocks, n)
}

fn instance_strategy() -> impl Strategy<Value = (Instance, Partition)> {
    (1usize..10, 1usize..5, 1usize..5).prop_flat_map(|(n, l, b)| {
        (prop::collection::vec(labels(n, b), l), labels(n, b + 1)).prop_map(|(parts, cand)| {
            let parts = parts
                .iter()
                .map(|p| Partition::canonicalize(p).unwrap())
                .collect();
            (
                Instance::new(parts).unwrap(),
                Partition::canonicalize(&cand).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn counts_sum_to_l((inst, _) in instance_strategy()) {
        for i in 0..inst.n() {
            prop_assert_eq!(inst.s(i, i), inst.l() as u64);
            for j in 0..inst.n() {
                prop_assert_eq!(inst.s(i, j), inst.s(j, i));
                prop_assert_eq!(inst.s(i, j) + inst.d(i, j), inst.l() as u64);
            }
        }
    }

    #[test]
    fn two_cost_routes_agree((inst, cand) in instance_strategy()) {
        let direct = inst.cost_of(&cand).unwrap();
        prop_assert_eq!(direct, inst.cost_via_pair_counts(&cand).unwrap());
        prop_assert!(direct <= inst.max_cost());
    }

    #[test]
    fn cost_invariant_under_relabel_and_permutation(
        (inst, cand) in instance_strategy(),
        shift in 1usize..50,
        perm_seed in any::<u64>(),
    ) {
        let relabeled: Vec<usize> = cand.labels().iter().map(|l| (l * 7 + shift) % 1000).collect();
        let relabeled = Partition::canonicalize(&relabeled).unwrap();
        prop_assert_eq!(inst.cost_of(&relabeled).unwrap(), inst.cost_of(&cand).unwrap());

        let mut perm: Vec<usize> = (0..inst.n()).collect();
        Rng::seed_from_u64(perm_seed).shuffle(&mut perm);
        let moved = Instance::new(
            inst.partitions().iter().map(|p| p.permute(&perm).unwrap()).collect(),
        ).unwrap();
        prop_assert_eq!(
            moved.cost_of(&cand.permute(&perm).unwrap()).unwrap(),
            inst.cost_of(&cand).unwrap()
        );
    }

    #[test]
    fn distance_is_a_metric(a in labels(9, 4), b in labels(9, 4), c in labels(9, 4)) {
        let (a, b, c) = (
            Partition::canonicalize(&a).unwrap(),
            Partition::canonicalize(&b).unwrap(),
            Partition::canonicalize(&c).unwrap(),
        );
        let ab = pair_distance(&a, &b).unwrap();
        prop_assert_eq!(ab, pair_distance(&b, &a).unwrap());
        prop_assert_eq!(ab == 0, a == b);
        prop_assert!(pair_distance(&a, &c).unwrap() <= ab + pair_distance(&b, &c).unwrap());
    }

    #[test]
    fn profiles_normalize_and_weight((inst, cand) in instance_strategy(), u_pick in any::<usize>()) {
        prop_assume!(inst.n() >= 2);
        let u = u_pick % inst.n();
        let full = BlockAssignment::full(&cand);
        let mut profiles = vec![val_levels(&inst, &full, u).unwrap()];
        for t in 0..=full.slots() {
            profiles.push(pval_levels(&inst, &full, u, t).unwrap());
        }
        for prof in profiles {
            prop_assert_eq!(prof.level_counts.iter().sum::<u64>(), prof.pairs);
            let total: f64 = prof.levels().iter().sum();
            prop_assert!((total - 1.0).abs() <= 1e-9);
            let weighted: f64 = prof.levels().iter().enumerate().map(|(j, f)| j as f64 * f).sum::<f64>()
                / prof.l as f64;
            prop_assert!((weighted - prof.val()).abs() <= 1e-9);
        }
    }

    #[test]
    fn greedy_choice_is_pval_choice(
        (inst, _) in instance_strategy(),
        sample_labels in labels(10, 3),
        seed in any::<u64>(),
    ) {
        prop_assume!(inst.n() >= 3);
        let mut rng = Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..inst.n()).collect();
        rng.shuffle(&mut order);
        let size = 1 + rng.index(inst.n() - 1);
        let sample: Vec<usize> = order[..size].to_vec();
        let u = order[size];
        let sample = BlockAssignment::new(sample, sample_labels[..size].to_vec(), 3).unwrap();
        let costs = placement_costs(&inst, &sample, u, 3);
        let greedy = (0..3).min_by_key(|&c| (costs[c], c)).unwrap();
        prop_assert_eq!(greedy, pval_argmax(&inst, &sample, u, 3).unwrap());
        // cost over {u} x S is l|S| minus the agreement of the move
        for t in 0..3 {
            let prof = pval_levels(&inst, &sample, u, t).unwrap();
            prop_assert_eq!(costs[t], inst.l() as u64 * size as u64 - prof.agreement());
        }
    }

    #[test]
    fn bad_elements_bounded_by_counting((inst, cand) in instance_strategy(), k in 1usize..4) {
        prop_assume!(inst.n() >= 2);
        let bad = identify_bad_elements(&inst, &cand, k).unwrap().len() as f64;
        let cost = inst.cost_of(&cand).unwrap() as f64;
        let n = inst.n() as f64;
        let l = inst.l() as f64;
        let k2 = (k * k) as f64;
        // each bad element carries at least l(n-1)/(20k^2) of twice the cost
        prop_assert!(bad <= 40.0 * k2 * cost / (l * (n - 1.0)) + 1e-9);
        // the looser bound 80 gamma n k^2 / l with cost = gamma n^2
        prop_assert!(bad <= 80.0 * (cost / (n * n)) * n * k2 / l + 1e-9);
    }
}

#[test]
fn enumeration_counts_match_stirling_recurrence() {
    // independent: triangular recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1)
    let mut s = vec![vec![0u128; 12]; 12];
    s[0][0] = 1;
    for n in 1..12 {
        for k in 1..=n {
            s[n][k] = k as u128 * s[n - 1][k] + s[n - 1][k - 1];
        }
    }
    for n in 1..11 {
        for k_max in 1..6 {
            let expected: u128 = (1..=k_max.min(n)).map(|k| s[n][k]).sum();
            let listed = enumerate_partitions(n, k_max, DEFAULT_BUDGET).unwrap().count() as u128;
            assert_eq!(listed, expected);
            assert_eq!(count_partitions(n, k_max), expected);
        }
    }
}

#[test]
fn exact_beats_random_partitions() {
    let mut rng = Rng::seed_from_u64(2024);
    for trial in 0..5 {
        let n = 9;
        let parts = (0..3)
            .map(|_| random_partition(n, 3, &mut rng).unwrap())
            .collect();
        let inst = Instance::new(parts).unwrap();
        for k in 1..=3 {
            let best = solve_exact(&inst, k).unwrap();
            for _ in 0..200 {
                let cand = random_partition(n, k, &mut rng).unwrap();
                assert!(best.cost <= inst.cost_of(&cand).unwrap(), "trial {trial} k {k}");
            }
        }
    }
}

#[test]
fn exact_cost_non_increasing_in_k() {
    let mut rng = Rng::seed_from_u64(77);
    for _ in 0..10 {
        let parts = (0..4).map(|_| random_partition(8, 4, &mut rng).unwrap()).collect();
        let inst = Instance::new(parts).unwrap();
        let costs: Vec<u64> = (1..=8).map(|k| solve_exact(&inst, k).unwrap().cost).collect();
        assert!(costs.windows(2).all(|w| w[1] <= w[0]), "{costs:?}");
    }
}

#[test]
fn single_partition_instance_is_free_with_enough_blocks() {
    let mut rng = Rng::seed_from_u64(5);
    for _ in 0..10 {
        let p = random_partition(8, 5, &mut rng).unwrap();
        let inst = Instance::new(vec![p.clone()]).unwrap();
        let sol = solve_exact(&inst, 8).unwrap();
        assert_eq!(sol.cost, 0);
        assert_eq!(sol.partition, p);
    }
}
