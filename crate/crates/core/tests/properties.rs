use symbreak_reference::*;
use proptest::prelude::*;
use symbreak::automorphism::{automorphisms, Permutation};
use symbreak::bounds::check_sandwich;
use symbreak::distinguishing::*;
use symbreak::hamiltonian::has_hamiltonian_path;
use symbreak::io::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use symbreak::iso::{are_isomorphic, canonical_form, find_graph_isomorphism};
use symbreak::join_partition::*;
use symbreak::{join, Caps, Graph, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

fn image(set: &VertexSet, p: &Permutation) -> VertexSet {
    set.map(p.image())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn non_neighbourhoods(g in graph(10)) {
        for v in g.vertices() {
            let nb = g.non_neighborhood(v).unwrap();
            prop_assert!(nb.contains(v));
            prop_assert!(!nb.intersects(&g.neighbors(v)));
            prop_assert_eq!(nb.union(&g.neighbors(v)), g.all_vertices());
            for u in g.vertices() {
                prop_assert_eq!(nb.contains(u), g.non_neighborhood(u).unwrap().contains(v));
            }
        }
    }

    #[test]
    fn join_is_symmetric(g in graph(6), h in graph(6)) {
        let a = join(&g, &h).unwrap();
        let b = join(&h, &g).unwrap();
        prop_assert!(are_isomorphic(a.graph(), b.graph()));
        prop_assert_eq!(a.graph().size(), g.size() + h.size() + g.order() * h.order());
    }

    #[test]
    fn relabeling_preserves_canonical_form(g in graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let iso = find_graph_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.is_adjacent(iso[u], iso[v]));
        }
    }

    #[test]
    fn hamiltonian_dp_matches_permutations(g in graph(8)) {
        prop_assert_eq!(has_hamiltonian_path(&g).unwrap(), naive_hamiltonian_path(&g));
    }

    #[test]
    fn closure_partition_is_a_fixpoint(g1 in graph(7), g2 in graph(7)) {
        let jg = join(&g1, &g2).unwrap();
        let sp = side_partition(&jg);
        let g = jg.graph();
        let mut covered = 0u64;
        for c in sp.all() {
            prop_assert_eq!(covered & c.bits(), 0);
            covered |= c.bits();
            for v in g.vertices() {
                let nb = g.non_neighborhood(v).unwrap();
                if nb.intersects(c) {
                    prop_assert!(nb.is_subset(c));
                }
            }
        }
        prop_assert_eq!(covered, g.all_vertices().bits());
        for c in &sp.a {
            prop_assert!(c.is_subset(&jg.left_vertices()));
        }
        for c in &sp.b {
            prop_assert!(c.is_subset(&jg.right_vertices()));
        }
    }

    #[test]
    fn automorphisms_permute_classes(g1 in graph(4), g2 in graph(4)) {
        let jg = join(&g1, &g2).unwrap();
        let g = jg.graph();
        let sp = side_partition(&jg);
        let classes: Vec<VertexSet> = sp.all().copied().collect();
        let gs = gamma_structure(&jg);
        let primes = gamma_prime(&jg, &gs);
        for f in automorphisms(g).unwrap().iter() {
            for u in g.vertices() {
                prop_assert_eq!(image(&g.non_neighborhood(u).unwrap(), &f), g.non_neighborhood(f.apply(u)).unwrap());
            }
            for c in &classes {
                let img = image(c, &f);
                prop_assert!(classes.contains(&img));
                prop_assert!(are_isomorphic(&g.induced(c).unwrap().graph, &g.induced(&img).unwrap().graph));
            }
            for (class, prime) in gs.classes.iter().zip(&primes) {
                if class.tag == GammaTag::Merged && image(&class.support, &f) == class.support {
                    let local: Vec<usize> = prime
                        .back_map
                        .iter()
                        .map(|&v| prime.back_map.iter().position(|&w| w == f.apply(v)).unwrap())
                        .collect();
                    let p = Permutation::new(local).unwrap();
                    prop_assert!(symbreak::automorphism::is_automorphism(&prime.graph, &p).unwrap());
                }
            }
        }
    }

    #[test]
    fn join_constructions_verify(g1 in graph(4), g2 in graph(4)) {
        let caps = Caps::default();
        let jg = join(&g1, &g2).unwrap();
        let gs = gamma_structure(&jg);
        let l = construct_join_vertex_labeling(&g1, &g2, &caps).unwrap();
        let d = distinguishing_number(&g1).unwrap().value.max(distinguishing_number(&g2).unwrap().value);
        prop_assert!(l.label_count() <= d + gs.z.unwrap_or(0) as u32);
        prop_assert!(is_distinguishing(jg.graph(), &l).unwrap());
        let lb = lambda_bounds(&jg, &gs, &caps).unwrap();
        if let Some(l1) = lb.lambda1 {
            let e = construct_gamma_edge_labeling(&jg, &gs, &caps).unwrap();
            prop_assert_eq!(e.label_count(), l1);
        }
        if let Some(cover) = &lb.best_cover {
            let e = cover_edge_labeling(&jg, &gs, cover, &caps).unwrap();
            prop_assert!(e.label_count() <= lb.lambda2.unwrap().hi());
        }
    }

    #[test]
    fn sandwich_holds(g1 in graph(4), g2 in graph(4)) {
        let e = check_sandwich(&g1, &g2, &Caps::default()).unwrap();
        prop_assert_eq!(e.holds, Some(true));
    }

    #[test]
    fn witness_json_round_trip(g in graph(6)) {
        let w = distinguishing_number(&g).unwrap().witness;
        let back: Labeling = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        prop_assert!(is_distinguishing(&g, &back).unwrap());
        if let Some(ew) = distinguishing_index(&g).unwrap().witness().filter(|_| g.size() > 0) {
            let back: EdgeLabeling = serde_json::from_str(&serde_json::to_string(ew).unwrap()).unwrap();
            prop_assert!(is_distinguishing_edges(&g, &back).unwrap());
        }
    }
}
