//! Invariants checked on random graphs and colorings.
//!
//! Runs are reproducible: the RNG seed defaults to a fixed value and can be
//! overridden with `PATHRAMSEY_SEED=<u64>`.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use pathramsey::constructions::{matching_lower, three_color_lower, two_color_lower};
use pathramsey::extremal::{ex_bruteforce, fs_bound, ExtremalParams};
use pathramsey::graph::pairs_in_order;
use pathramsey::oracles::{
    coloring_is_good, has_path_of_order, longest_path_bruteforce, longest_path_order,
    max_matching_size,
};
use pathramsey::search::{find_good_coloring, predicted_value, SearchConfig, Verdict};
use pathramsey::witness::{parse_witness, to_witness_string};
use pathramsey::{complete_graph, EdgeColoring, Graph, TargetSpec};

fn seed() -> u64 {
    std::env::var("PATHRAMSEY_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2024)
}

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Config::default()
    }
}

/// A graph on `n` vertices from one bit per pair.
fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges: Vec<_> = pairs_in_order(n)
                .into_iter()
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A coloring of a random host; each pair is absent or one of `k` colors.
fn coloring_strategy(
    max_n: usize,
    k: usize,
    complete: bool,
) -> impl Strategy<Value = EdgeColoring> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs = n * (n - 1) / 2;
        let lo = if complete { 1 } else { 0 };
        prop::collection::vec(lo..=k as u8, pairs).prop_map(move |cells| {
            let mut host = Graph::empty(n).unwrap();
            for ((i, j), &c) in pairs_in_order(n).iter().zip(&cells) {
                if c > 0 {
                    host.add_edge(*i, *j).unwrap();
                }
            }
            let colors = cells.iter().map(|&c| c.checked_sub(1)).collect();
            EdgeColoring::from_colors(host, k, colors).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v).unwrap()).collect();
    d.sort_unstable();
    d
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn color_classes_partition_the_host(c in coloring_strategy(9, 3, false)) {
        let mut union = Graph::empty(c.n()).unwrap();
        let mut total = 0;
        for color in 0..3u8 {
            let class = c.color_class(color).unwrap();
            for (i, j) in class.edges() {
                prop_assert!(!union.has_edge(i, j), "classes overlap at ({i},{j})");
                union.add_edge(i, j).unwrap();
            }
            total += class.edge_count();
        }
        prop_assert_eq!(&union, c.host());
        prop_assert_eq!(total, c.host().edge_count());
        prop_assert_eq!(c.class_sizes().iter().sum::<usize>(), total);
    }

    #[test]
    fn degree_is_neighbor_count(g in graph_strategy(1, 12)) {
        let mut sum = 0;
        for v in 0..g.n() {
            let d = g.degree(v).unwrap();
            prop_assert_eq!(d, g.neighbors(v).unwrap().len());
            sum += d;
        }
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn vertex_permutation_preserves_class_degrees(
        (c, perm) in coloring_strategy(8, 3, true).prop_flat_map(|c| {
            let n = c.n();
            (Just(c), permutation(n))
        })
    ) {
        let moved = c.apply_vertex_permutation(&perm).unwrap();
        for color in 0..3u8 {
            prop_assert_eq!(
                sorted_degrees(&c.color_class(color).unwrap()),
                sorted_degrees(&moved.color_class(color).unwrap())
            );
        }
        let mut inverse = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        prop_assert_eq!(moved.apply_vertex_permutation(&inverse).unwrap(), c);
    }

    #[test]
    fn longest_path_and_matching_grow_with_edges(g in graph_strategy(2, 9), pick in any::<prop::sample::Index>()) {
        let missing = g.complement().edges();
        prop_assume!(!missing.is_empty());
        let (i, j) = missing[pick.index(missing.len())];
        let mut bigger = g.clone();
        bigger.add_edge(i, j).unwrap();
        prop_assert!(longest_path_order(&bigger) >= longest_path_order(&g));
        prop_assert!(max_matching_size(&bigger) >= max_matching_size(&g));
        prop_assert!(max_matching_size(&g) <= g.n() / 2);
    }

    #[test]
    fn path_existence_is_monotone_in_order(g in graph_strategy(1, 8)) {
        let longest = longest_path_order(&g);
        prop_assert_eq!(longest, longest_path_bruteforce(&g).unwrap());
        for p in 1..=g.n() + 1 {
            prop_assert_eq!(has_path_of_order(&g, p).unwrap(), p <= longest);
        }
    }

    #[test]
    fn goodness_is_color_permutation_equivariant(
        c in coloring_strategy(7, 3, true),
        orders in prop::collection::vec(2usize..=6, 3),
        perm in Just(vec![0u8, 1, 2]).prop_shuffle(),
    ) {
        let spec = TargetSpec::paths(&orders).unwrap();
        let moved = c.apply_color_permutation(&perm).unwrap();
        let moved_spec = spec.permuted(&perm).unwrap();
        prop_assert_eq!(
            coloring_is_good(&c, &spec).unwrap().is_good(),
            coloring_is_good(&moved, &moved_spec).unwrap().is_good()
        );
    }

    #[test]
    fn witness_round_trip(c in coloring_strategy(10, 4, false)) {
        let text = to_witness_string(&c);
        let back = parse_witness(&text).unwrap();
        prop_assert_eq!(to_witness_string(&back), text);
        prop_assert_eq!(back, c);
    }
}

#[test]
fn bruteforce_extremal_numbers_respect_the_bound() {
    for nv in 3..=7 {
        for p in 3..=nv {
            let (ex, witness) = ex_bruteforce(nv, p).unwrap();
            let bound = fs_bound(ExtremalParams::new(nv, p).unwrap());
            assert!(ex <= bound, "ex({nv}, P{p}) = {ex} > {bound}");
            assert_eq!(witness.edge_count(), ex);
            assert!(!has_path_of_order(&witness, p).unwrap());
        }
    }
}

#[test]
fn constructions_are_witnesses_one_below_the_prediction() {
    for n in 2..=7 {
        for m in n..=8 {
            let spec = TargetSpec::paths(&[n, m]).unwrap();
            let c = two_color_lower(n, m).unwrap();
            assert_eq!(c.n() + 1, predicted_value(&spec).unwrap(), "{spec}");
            assert!(coloring_is_good(&c, &spec).unwrap().is_good(), "{spec}");
        }
    }
    for n in 3..=7 {
        for m in n..=8 {
            let spec = TargetSpec::paths(&[3, n, m]).unwrap();
            let c = three_color_lower(n, m).unwrap();
            let predicted = predicted_value(&spec).unwrap();
            assert!(coloring_is_good(&c, &spec).unwrap().is_good(), "{spec}");
            // The exceptional specs sit above the generic construction.
            if (n, m) != (3, 3) && (n, m) != (3, 4) {
                assert_eq!(c.n() + 1, predicted, "{spec}");
            }
        }
    }
    for n in 3..=6 {
        for m in n..=7 {
            let spec = TargetSpec::parse(&format!("P3 {n}K2 {m}K2")).unwrap();
            let c = matching_lower(n, m).unwrap();
            assert_eq!(c.n() + 1, predicted_value(&spec).unwrap(), "{spec}");
            assert!(coloring_is_good(&c, &spec).unwrap().is_good(), "{spec}");
        }
    }
}

#[test]
fn search_verdicts_are_monotone_in_host_size() {
    let cfg = SearchConfig::default();
    for spec in ["P3 P4 P5", "P4 P5", "P3 3K2 3K2", "P4 P4 P4"] {
        let spec = TargetSpec::parse(spec).unwrap();
        let mut exhausted = false;
        for n in 1..=9 {
            let verdict = find_good_coloring(n, &spec, &cfg).unwrap().verdict;
            match verdict {
                Verdict::Found(w) => {
                    assert!(
                        !exhausted,
                        "{spec}: K{n} good after an exhausted smaller host"
                    );
                    assert!(coloring_is_good(&w, &spec).unwrap().is_good());
                }
                Verdict::Exhausted => exhausted = true,
                Verdict::Timeout => panic!("{spec} timed out on K{n}"),
            }
        }
        assert!(exhausted, "{spec}");
    }
}

#[test]
fn complete_host_witness_uses_star() {
    let c = EdgeColoring::monochromatic(complete_graph(5).unwrap(), 2, 1).unwrap();
    assert_eq!(to_witness_string(&c), "5 2\n*\n1111111111\n");
}
