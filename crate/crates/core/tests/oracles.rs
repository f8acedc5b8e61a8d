use symbreak_reference::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use symbreak::automorphism::{automorphisms, group_order, is_automorphism, Permutation};
use symbreak::corpus::graphs_of_order;
use symbreak::distinguishing::*;
use symbreak::iso::{are_isomorphic, canonical_form};
use symbreak::join_partition::side_partition;
use symbreak::{join, Caps};

#[test]
fn automorphism_groups_match_brute_force() {
    for n in 1..=6 {
        for g in graphs_of_order(n).unwrap() {
            let mut expected = naive_automorphisms(&g);
            expected.sort();
            let group = automorphisms(&g).unwrap();
            let mut got: Vec<Vec<usize>> = group.iter().map(|p| p.image().to_vec()).collect();
            assert!(got[0].iter().enumerate().all(|(i, &x)| i == x), "identity first");
            got.sort();
            assert_eq!(got, expected, "{:?}", g.edges());
            assert_eq!(group_order(&g).unwrap(), expected.len() as u128);
        }
    }
}

#[test]
fn random_groups_of_order_seven() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let g = random_graph(&mut rng, 7, 0.4);
        assert_eq!(group_order(&g).unwrap(), naive_automorphisms(&g).len() as u128);
    }
}

#[test]
fn distinguishing_values_match_brute_force() {
    for n in 1..=5 {
        for g in graphs_of_order(n).unwrap() {
            let dn = distinguishing_number(&g).unwrap();
            assert_eq!(dn.value, naive_distinguishing_number(&g), "{:?}", g.edges());
            let di = distinguishing_index(&g).unwrap();
            assert_eq!(di.value(), naive_distinguishing_index(&g), "{:?}", g.edges());
        }
    }
}

#[test]
fn witnesses_survive_every_automorphism() {
    for g in graphs_of_order(5).unwrap() {
        let auts = naive_automorphisms(&g);
        let w = distinguishing_number(&g).unwrap().witness;
        for p in auts.iter().filter(|p| p.iter().enumerate().any(|(i, &x)| i != x)) {
            assert!((0..g.order()).any(|v| w.label(p[v]) != w.label(v)));
        }
        if let Some(ew) = distinguishing_index(&g).unwrap().witness() {
            for p in auts.iter().filter(|p| p.iter().enumerate().any(|(i, &x)| i != x)) {
                assert!(g.edges().iter().any(|&(u, v)| ew.label(p[u], p[v]) != ew.label(u, v)));
            }
        }
    }
}

#[test]
fn verifiers_agree_with_exhaustive_check() {
    let mut rng = StdRng::seed_from_u64(11);
    let caps = Caps::default();
    for _ in 0..60 {
        let g = random_graph(&mut rng, 6, 0.5);
        let auts = naive_automorphisms(&g);
        let labels: Vec<u32> = (0..6).map(|_| rand::Rng::gen_range(&mut rng, 1..=2)).collect();
        let l = Labeling::new(labels.clone(), 2).unwrap();
        let naive = auts
            .iter()
            .filter(|p| p.iter().enumerate().any(|(i, &x)| i != x))
            .all(|p| (0..6).any(|v| labels[p[v]] != labels[v]));
        assert_eq!(is_distinguishing_capped(&g, &l, &caps).unwrap(), naive);
    }
}

#[test]
fn canonical_forms_decide_isomorphism() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=6);
        let g = random_graph(&mut rng, n, 0.5);
        let h = random_graph(&mut rng, n, 0.5);
        let naive = naive_isomorphic(&g, &h);
        assert_eq!(are_isomorphic(&g, &h), naive);
        assert_eq!(canonical_form(&g) == canonical_form(&h), naive);
    }
}

#[test]
fn closure_classes_are_co_components() {
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..200 {
        let (n, m) = (rand::Rng::gen_range(&mut rng, 1..=7), rand::Rng::gen_range(&mut rng, 1..=7));
        let g1 = random_graph(&mut rng, n, 0.5);
        let g2 = random_graph(&mut rng, m, 0.5);
        let jg = join(&g1, &g2).unwrap();
        let sp = side_partition(&jg);
        let mut a: Vec<Vec<usize>> = sp.a.iter().map(|s| s.to_vec()).collect();
        a.sort();
        assert_eq!(a, co_components(&g1));
        let mut b: Vec<Vec<usize>> = sp
            .b
            .iter()
            .map(|s| s.iter().map(|v| v - n).collect())
            .collect();
        b.sort();
        assert_eq!(b, co_components(&g2));
    }
}

#[test]
fn explicit_automorphisms_are_automorphisms() {
    let g = symbreak::generators::friendship(3).unwrap();
    for p in automorphisms(&g).unwrap().iter() {
        assert!(is_automorphism(&g, &p).unwrap());
    }
    assert!(!is_automorphism(&g, &Permutation::transposition(7, 0, 1).unwrap()).unwrap());
}
