use hermite_pw::minorder::{
    corner_report, durfee_symbol, inside_corners, min_order_after_insert, minimal_girth,
    minimal_girth_from_parts, xhermite_min_origin,
};
use hermite_pw::{MayaDiagram, Partition};

/// Girth of every shift `M - k` over a generous window; the minimum and
/// every `k` attaining it.
fn brute_minimum(m: &MayaDiagram) -> (usize, Vec<i64>) {
    let (lo, hi) = m.window();
    let girths: Vec<(i64, usize)> = (lo - 3..=hi + 4).map(|k| (k, m.shift(-k).girth())).collect();
    let min = girths.iter().map(|g| g.1).min().unwrap();
    let origins = girths.iter().filter(|g| g.1 == min).map(|g| g.0).collect();
    (min, origins)
}

fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(Partition::all_of_size)
}

#[test]
fn corner_report_matches_shift_scan() {
    for lambda in partitions_up_to(12) {
        let m = MayaDiagram::from_partition(&lambda);
        let report = minimal_girth(&lambda);
        let (min, origins) = brute_minimum(&m);
        assert_eq!(report.minimal_girth, min, "{lambda}");
        assert_eq!(report.origins, origins, "{lambda}");
        assert_eq!(minimal_girth_from_parts(&lambda), min, "{lambda}");
    }
}

#[test]
fn corners_match_ferrers_geometry() {
    for lambda in partitions_up_to(10) {
        let report = minimal_girth(&lambda);
        let mut from_bent: Vec<usize> = report.corners.iter().map(|c| c.girth).collect();
        let mut from_ferrers: Vec<usize> = inside_corners(&lambda).iter().map(|c| c.taxicab()).collect();
        from_bent.sort_unstable();
        from_ferrers.sort_unstable();
        assert_eq!(from_bent, from_ferrers, "{lambda}");
        let f = lambda.ferrers();
        for c in inside_corners(&lambda) {
            if c.i > 0 && c.j > 0 {
                assert!(f.contains(&(c.i, c.j)));
                assert!(f.contains(&(c.i + 1, c.j)));
                assert!(f.contains(&(c.i, c.j + 1)));
                assert!(!f.contains(&(c.i + 1, c.j + 1)));
            }
        }
    }
}

#[test]
fn durfee_symbols_recover_size() {
    for lambda in partitions_up_to(10) {
        let m = MayaDiagram::from_partition(&lambda);
        for c in minimal_girth(&lambda).corners {
            let d = durfee_symbol(&m.shift(-c.origin)).unwrap();
            assert_eq!(d.size(), lambda.size(), "{lambda} at {}", c.origin);
            assert_eq!(d.rows + d.cols, c.girth);
        }
    }
}

#[test]
fn insertion_cases_match_shift_scan() {
    for lambda in partitions_up_to(10) {
        let m = MayaDiagram::from_partition(&lambda);
        let (lo, hi) = m.window();
        for e in lo - 2..=hi + 3 {
            if m.contains(e) {
                continue;
            }
            let bigger = m.flip(e);
            let report = min_order_after_insert(&m, e).unwrap();
            let (min, origins) = brute_minimum(&bigger);
            assert_eq!(report.minimal_girth, min, "{lambda} + {e}");
            assert_eq!(report.origins, origins, "{lambda} + {e} ({:?})", report.case);
        }
    }
}

#[test]
fn extended_origins_are_minimal() {
    for lambda in partitions_up_to(10) {
        let ell = lambda.len() as i64;
        let size = lambda.size() as i64;
        let m = MayaDiagram::from_partition(&lambda);
        for n in 0..=size + 6 {
            let Ok(o) = xhermite_min_origin(&lambda, n) else {
                assert!(m.contains(n + ell - size));
                continue;
            };
            let bigger = m.flip(o.inserted);
            let (min, origins) = brute_minimum(&bigger);
            assert_eq!(o.minimal_order, min, "{lambda} n={n}");
            assert!(origins.contains(&o.origin), "{lambda} n={n} origin {}", o.origin);
            assert_eq!(corner_report(&bigger).minimal_girth, min);
        }
    }
}
