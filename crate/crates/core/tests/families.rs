use proptest::prelude::*;
use soltes_core::analysis::wiener_without;
use soltes_core::{
    build_h, case_sums, delta_closed_form, delta_spectrum, delta_spectrum_orbit, t0_of,
    tr_closed_form, verify_instance, FSpec, HGraph, HParams, Hang, NamedFamily, Role, DEFAULT_CAP,
};

fn gadget() -> impl Strategy<Value = FSpec> {
    prop_oneof![
        (1..=4usize).prop_map(|l| FSpec::Empty { l }),
        (1..=3usize).prop_map(|h| FSpec::PerfectMatching { l: 2 * h }),
        Just(FSpec::PathCenter3),
        (2..=4usize).prop_map(|k| FSpec::StarPath { k }),
        (0..=3usize, 0..=4usize, prop::bool::ANY).prop_map(|(leaves, path, leaf)| FSpec::Broom {
            leaves,
            path,
            hang: if leaf && leaves > 0 {
                Hang::Leaf
            } else {
                Hang::Center
            },
        }),
    ]
}

fn small_h(min_n: usize) -> impl Strategy<Value = HGraph> {
    (min_n..=13usize, 2..=4usize, gadget())
        .prop_map(|(n, k, f)| build_h(&HParams::new(n, k, f)).unwrap())
}

fn brute_cycle_deltas(h: &HGraph) -> Vec<Option<i64>> {
    let w = h.graph.wiener().unwrap();
    h.cycle_vertices()
        .map(|v| wiener_without(&h.graph, v).unwrap().map(|rest| w - rest))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_cycle_vertex_shares_one_delta(h in small_h(3)) {
        let deltas = brute_cycle_deltas(&h);
        prop_assert!(deltas.iter().all(|&d| d == deltas[0]));
    }

    #[test]
    fn orbit_spectrum_matches_brute_force(h in small_h(3)) {
        prop_assert_eq!(delta_spectrum_orbit(&h).unwrap(), delta_spectrum(&h.graph).unwrap());
    }

    #[test]
    fn closed_forms_match_bfs(h in small_h(4)) {
        let (n, k, n0) = (h.params.n as i64, h.params.k as i64, h.n0 as i64);
        let v = h.cycle_vertex(0, 0);
        prop_assert_eq!(h.graph.transmission(v).unwrap(), tr_closed_form(n, k, n0, h.t0));
        prop_assert_eq!(Some(delta_closed_form(n, k, n0, h.t0).unwrap()), brute_cycle_deltas(&h)[0]);
    }
}

/// Direct per-pair sums of distance increases after deleting cycle vertex
/// (0, 0) of `H(n, 2, Empty(l))`.
fn increase_by_class(n: usize, l: usize) -> [i64; 4] {
    let h = build_h(&HParams::new(n, 2, FSpec::Empty { l })).unwrap();
    let u0 = h.cycle_vertex(0, 0);
    let rest = h.graph.delete_vertex(u0);
    let class = |v| match h.role_of(v) {
        Role::Cycle { cycle: 0, .. } => 0,
        Role::Gadget { position: 0, .. } => 1,
        Role::Gadget { .. } => 2,
        Role::Cycle { .. } => 3,
    };
    let mut sums = [0; 4];
    for a in (0..h.graph.order()).filter(|&a| a != u0) {
        let before = h.graph.bfs_distances(a).unwrap().dist;
        let after = rest.bfs_distances(a - usize::from(a > u0)).unwrap().dist;
        for b in (a + 1..h.graph.order()).filter(|&b| b != u0) {
            let inc = i64::from(after[b - usize::from(b > u0)].unwrap() - before[b].unwrap());
            let bucket = match (class(a).min(class(b)), class(a).max(class(b))) {
                (0, c) if c < 3 => c,
                _ => 3,
            };
            sums[bucket] += inc;
        }
    }
    sums
}

#[test]
fn case_sums_match_direct_summation() {
    for n in 5..=16 {
        for l in 1..=3 {
            let c = case_sums(n as i64, l as i64).unwrap();
            assert_eq!(
                increase_by_class(n, l),
                [c.path_pairs, c.own_gadget, c.other_gadgets, 0],
                "n={n} l={l}"
            );
        }
    }
}

#[test]
fn case_sums_need_five_cycle_vertices() {
    assert!(case_sums(4, 1).is_none());
    assert!(case_sums(3, 2).is_none());
}

#[test]
fn named_families_pass_their_checks() {
    let mut families: Vec<NamedFamily> = (0..=2).map(|m| NamedFamily::Prop2 { m }).collect();
    families.extend((2..=4).map(|k| NamedFamily::Prop3 { k }));
    families.extend([NamedFamily::Prop4 { k: 4 }, NamedFamily::Prop4 { k: 7 }]);
    families.extend([
        NamedFamily::Prop2Matching { m: 1 },
        NamedFamily::Prop2Edges { m: 0, s: 3 },
    ]);
    families.extend([NamedFamily::Example497, NamedFamily::Example497Joined]);
    for family in families {
        let h = build_h(&family.params().unwrap()).unwrap();
        let report = verify_instance(&h, DEFAULT_CAP).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{family}: {failed:?}");
    }
}

#[test]
fn named_gadgets_have_their_stated_t0() {
    for k in 2..=8 {
        assert_eq!(t0_of(&FSpec::StarPath { k }), Ok(2 * k as i64 + 51));
        assert_eq!(t0_of(&FSpec::StarCycle { k }), Ok(2 * k as i64 + 61));
    }
    assert_eq!(t0_of(&FSpec::PathCenter3), Ok(5));
    for l in 1..=6 {
        assert_eq!(t0_of(&FSpec::Empty { l }), Ok(l as i64));
    }
}

#[test]
fn prop4_needs_k_one_mod_three() {
    assert!(NamedFamily::Prop4 { k: 5 }.params().is_err());
    assert!(NamedFamily::Prop4 { k: 1 }.params().is_err());
}
