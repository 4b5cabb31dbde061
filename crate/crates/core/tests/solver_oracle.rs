mod common;

use common::{compare_with_oracle, family, small_connected_graphs, Oracle};
use copnum::graph::{random_connected, Graph};
use copnum::solver::Variant;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn corpus_sizes_match_known_counts() {
    // connected graphs with loops allowed, up to isomorphism: n=1: 1, n=2: 3, n=3: 10 (six looped P3, four looped K3)
    let small = small_connected_graphs(3);
    let by_n = |n: usize| small.iter().filter(|g| g.n() == n).count();
    assert_eq!((by_n(1), by_n(2), by_n(3)), (1, 3, 10));
}

#[test]
fn every_graph_up_to_four_vertices_agrees() {
    let graphs = small_connected_graphs(4);
    for g in &graphs {
        for variant in Variant::ALL {
            for k in 1..=2 {
                if let Err(e) = compare_with_oracle(g, k, variant) {
                    panic!("{:?}: {e}", g.edges());
                }
            }
        }
    }
}

#[test]
fn named_six_vertex_graphs_agree() {
    for s in ["C6", "P6", "K3l", "I5l", "K6", "C5l", "RT6_4"] {
        let g = family(s);
        for variant in Variant::ALL {
            for k in 1..=2 {
                compare_with_oracle(&g, k, variant).unwrap_or_else(|e| panic!("{s}: {e}"));
            }
        }
    }
}

#[test]
fn random_six_vertex_graphs_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tried = 0;
    while tried < 12 {
        let g: Graph = random_connected(&mut rng, false);
        if g.n() > 6 {
            continue;
        }
        tried += 1;
        for variant in Variant::ALL {
            compare_with_oracle(&g, 2, variant).unwrap_or_else(|e| panic!("{:?}: {e}", g.edges()));
        }
    }
}

#[test]
fn oracle_reproduces_the_p5_example() {
    let g = family("P5");
    let mut o = Oracle::new(&g, Variant::SneakyActive);
    let one = o.solve(1);
    assert!((0..5).all(|v| !one.cop.contains_key(&(vec![v], v))));
    let mut o = Oracle::new(&g, Variant::SneakyActive);
    let two = o.solve(2);
    assert!((0..5).all(|r| two.cop.contains_key(&(vec![1, 2], r))));
}
