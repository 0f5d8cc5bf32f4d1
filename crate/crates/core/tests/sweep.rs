use proptest::prelude::*;
use soltes_core::search::{t0_max, t0_min};
use soltes_core::{
    delta_closed_form, realize_gadget, sweep, t0_of, verify_hit, Attach, SweepConfig, DEFAULT_CAP,
};

fn cell(m: i64, n: usize, k: usize, n0: usize, attach: Attach) -> SweepConfig {
    SweepConfig {
        m,
        n: n..=n,
        k: k..=k,
        n0: n0..=n0,
        attach: vec![attach],
    }
}

#[test]
fn rediscovers_every_table_row() {
    let mut expected = Vec::new();
    for m in 0..=5usize {
        expected.push((
            m as i64,
            16 * m + 95,
            m + 6,
            m + 5,
            m as i64 + 5,
            Attach::Full,
        ));
    }
    for k in 2..=7usize {
        expected.push((0, 2 * k + 24, k, k + 8, 2 * k as i64 + 51, Attach::Fixed(1)));
    }
    for k in [4usize, 7, 10, 13, 16, 19] {
        expected.push((
            0,
            (4 * k + 59) / 3,
            k,
            k + 13,
            2 * k as i64 + 61,
            Attach::Fixed(1),
        ));
    }
    for (m, n, k, n0, t0, attach) in expected {
        let out = sweep(&cell(m, n, k, n0, attach));
        assert_eq!(out.hits.len(), 1, "m={m} n={n} k={k} n0={n0}");
        let hit = &out.hits[0];
        assert_eq!(hit.t0, t0);
        let f = hit.realization.as_ref().expect("realized");
        assert_eq!(t0_of(f), Ok(t0));
        assert_eq!(f.order(), n0);
    }
}

#[test]
fn small_hits_verify_by_brute_force() {
    let out = sweep(&SweepConfig {
        m: 0,
        n: 3..=60,
        k: 2..=4,
        n0: 1..=12,
        attach: vec![Attach::Fixed(1), Attach::Full],
    });
    let realized: Vec<_> = out
        .hits
        .iter()
        .filter(|h| h.realization.is_some())
        .collect();
    assert!(!realized.is_empty());
    for hit in realized.into_iter().filter(|h| h.order() <= 800) {
        let report = verify_hit(hit, DEFAULT_CAP).unwrap();
        assert!(report.passed(), "{hit:?}: {:?}", report.checks);
    }
}

#[test]
fn hits_are_ranked() {
    let out = sweep(&SweepConfig {
        m: 0,
        n: 3..=130,
        k: 2..=11,
        n0: 1..=20,
        attach: vec![Attach::Fixed(1), Attach::Full],
    });
    for pair in out.hits.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        assert!(a.bound > b.bound || (a.bound == b.bound && a.order() <= b.order()));
    }
}

proptest! {
    #[test]
    fn hits_satisfy_the_closed_form(m in -3i64..=6, n in 3usize..=80, k in 2usize..=8) {
        let out = sweep(&SweepConfig { m, n: n..=n, k: k..=k, n0: 1..=20, attach: vec![Attach::Fixed(1), Attach::Full] });
        for hit in &out.hits {
            prop_assert_eq!(delta_closed_form(hit.n as i64, hit.k as i64, hit.n0 as i64, hit.t0), Ok(m));
            prop_assert!(hit.t0 >= t0_min(hit.n0, 1).min(t0_min(hit.n0, hit.n0)));
            prop_assert!(hit.t0 <= t0_max(hit.n0));
        }
        for r in &out.rejected {
            prop_assert_eq!(delta_closed_form(r.n as i64, r.k as i64, r.n0 as i64, r.t0), Ok(m));
        }
    }

    #[test]
    fn realized_gadgets_have_the_requested_shape(n0 in 2usize..=20, offset in 0i64..=200) {
        let t0 = t0_min(n0, 1) + offset;
        match realize_gadget(n0, 1, t0).unwrap() {
            Some(f) => {
                prop_assert_eq!(f.order(), n0);
                prop_assert_eq!(f.attachment_count(), 1);
                prop_assert_eq!(t0_of(&f), Ok(t0));
            }
            None => prop_assert!(offset > 0, "the star reaches the minimum"),
        }
    }
}

#[test]
fn infeasible_t0_is_an_error() {
    assert!(realize_gadget(5, 1, t0_min(5, 1) - 1).is_err());
    assert!(realize_gadget(5, 0, 10).is_err());
}

#[test]
fn full_attachment_forces_t0_equal_n0() {
    for n0 in 1..=10 {
        assert!(realize_gadget(n0, n0, n0 as i64).unwrap().is_some());
        assert!(realize_gadget(n0, n0, n0 as i64 + 1).unwrap().is_none());
    }
}
