mod common;

use copnum::graph::{self, bipartition, random_connected, random_tree, Graph};
use copnum::homotopy::{homotopy_equivalent, random_perturbation};
use copnum::products::{box_product, categorical_product};
use copnum::solver::{
    best_cop_move, cop_number, legal_moves, simulate_trace, solve_win_table, winning_placements,
    Mover, Multisets, RobberPolicy, Variant,
};
use copnum::verify::reflexive_tables_agree;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample(seed: u64, reflexive: bool) -> Graph {
    random_connected(&mut ChaCha8Rng::seed_from_u64(seed), reflexive)
}

fn variant() -> impl Strategy<Value = Variant> {
    prop_oneof![
        Just(Variant::Classic),
        Just(Variant::FullyActive),
        Just(Variant::SneakyActive)
    ]
}

fn cn(g: &Graph, v: Variant) -> usize {
    cop_number(g, v, None).unwrap().cop_number
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiset_rank_round_trips(n in 1usize..12, mut c in prop::collection::vec(0usize..12, 0..6)) {
        for x in c.iter_mut() {
            *x %= n;
        }
        c.sort_unstable();
        let ms = Multisets::new(n, c.len());
        let r = ms.rank(&c);
        prop_assert!(r < ms.count());
        prop_assert_eq!(ms.get(r), c);
    }

    #[test]
    fn graph_formats_round_trip(seed in any::<u64>()) {
        let g = sample(seed, false);
        prop_assert_eq!(graph::parse(&graph::to_text(&g)).unwrap(), g.clone());
        prop_assert_eq!(graph::parse(&graph::to_json(&g)).unwrap(), g);
    }

    #[test]
    fn product_degree_laws(a in any::<u64>(), b in any::<u64>()) {
        let (x, y) = (random_tree(4, a), sample(b, false));
        let (cat, map) = categorical_product(&x, &y).unwrap();
        let (bx, _) = box_product(&x, &y).unwrap();
        for id in cat.vertices() {
            let c = map.coords(id);
            prop_assert_eq!(cat.degree(id), x.degree(c[0]) * y.degree(c[1]));
            let both = usize::from(x.has_loop(c[0]) && y.has_loop(c[1]));
            prop_assert_eq!(bx.degree(id), x.degree(c[0]) + y.degree(c[1]) - both);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn perturbations_keep_homotopy_type_and_cop_number(
        base in prop::sample::select(vec!["K2", "P4", "C4", "C5", "C3", "K3l"]),
        steps in 0usize..5,
        seed in any::<u64>(),
    ) {
        let g = common::family(base);
        let h = random_perturbation(&g, steps, seed);
        prop_assert!(homotopy_equivalent(&g, &h).unwrap().is_some());
        prop_assert_eq!(cn(&g, Variant::SneakyActive), cn(&h, Variant::SneakyActive));
    }

    #[test]
    fn winning_is_monotone_in_k(seed in any::<u64>(), v in variant()) {
        let g = sample(seed, false);
        let mut won = false;
        for k in 1..=3 {
            let now = !winning_placements(&solve_win_table(&g, k, v).unwrap()).is_empty();
            prop_assert!(!won || now, "k={}", k);
            won = now;
        }
    }

    #[test]
    fn strategy_strictly_lowers_rank(seed in any::<u64>(), v in variant()) {
        let g = sample(seed, seed % 3 == 0);
        let t = solve_win_table(&g, 2, v).unwrap();
        let ms = t.multisets();
        for i in 0..ms.count() {
            let cops = ms.get(i);
            for r in g.vertices() {
                let Some(rank) = t.cop_rank(&cops, r) else { continue };
                let mut next = best_cop_move(&t, &cops, r);
                next.sort_unstable();
                if !next.contains(&r) {
                    let after = t.robber_rank(&next, r);
                    prop_assert!(after.is_some_and(|a| a < rank));
                    // and every robber reply stays inside the win set at no higher rank
                    for r2 in legal_moves(&g, r, v) {
                        if v != Variant::SneakyActive && next.contains(&r2) {
                            continue;
                        }
                        prop_assert!(t.cop_rank(&next, r2).is_some_and(|x| x <= after.unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn variant_chain(seed in any::<u64>()) {
        let g = sample(seed, seed % 4 == 0);
        let (c, ca, csa) = (cn(&g, Variant::Classic), cn(&g, Variant::FullyActive), cn(&g, Variant::SneakyActive));
        prop_assert!(ca <= csa);
        prop_assert!(c <= csa + 1 && csa <= 2 * c);
        if g.is_reflexive() {
            prop_assert_eq!(csa, c);
            prop_assert!(reflexive_tables_agree(&g, c));
        }
        if g.is_loopless() {
            prop_assert!(csa >= 2);
        }
    }

    #[test]
    fn sneaky_robber_steps_onto_cops_safely(seed in any::<u64>()) {
        let g = sample(seed, false);
        let t = solve_win_table(&g, 1, Variant::SneakyActive).unwrap();
        for start in g.vertices() {
            let tr = simulate_trace(&t, &[0], start, RobberPolicy::Shadow, 20);
            for rec in tr.records() {
                if rec.mover == Mover::Robber && rec.cops.contains(&rec.robber) {
                    prop_assert!(!rec.capture);
                }
            }
        }
    }

    #[test]
    fn trees_need_two_cops_split_across_sides(n in 2usize..10, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        prop_assert_eq!(cn(&g, Variant::SneakyActive), 2);
        let parts = bipartition(&g);
        let t = solve_win_table(&g, 2, Variant::SneakyActive).unwrap();
        for p in winning_placements(&t) {
            prop_assert_eq!(parts.split_count(&p), (1, 1));
        }
    }
}
