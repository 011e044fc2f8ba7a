use cskit_tworow::*;
use proptest::prelude::*;

fn shapes(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max_n).flat_map(|n| (0..=n / 2).map(move |l2| (n - l2, l2)))
}

#[test]
fn path_model_matches_tableau_skeleton() {
    for (l1, l2) in shapes(12) {
        compare_with_direct(l1, l2).unwrap();
    }
}

#[test]
fn components_are_rcomp_classes() {
    for (l1, l2) in shapes(12) {
        check_scc(l1, l2).unwrap();
    }
}

#[test]
fn evacuation_methods_agree() {
    for (l1, l2) in shapes(12) {
        check_evacuation(l1, l2).unwrap();
    }
}

#[test]
fn lusztig_dual_edge_types() {
    for (l1, l2) in shapes(12) {
        check_lusztig_types(l1, l2).unwrap();
    }
}

#[test]
fn rcomp_along_edges() {
    for (l1, l2) in shapes(12) {
        check_rcomp_monotone(l1, l2).unwrap();
    }
}

#[test]
fn round_trip_up_to_ten() {
    for (l1, l2) in shapes(10) {
        for p in LatticePath::all(l1, l2).unwrap() {
            assert_eq!(path_of(&tableau_of(&p)).unwrap(), p);
            assert_eq!(tableau_of(&p).reading_word(), p.reading_word());
            assert_eq!(tableau_of(&p).descent_composition(), p.descent_composition());
            assert_eq!(p.to_string().parse::<LatticePath>().unwrap(), p);
        }
    }
}

/// A path driven by random bits, stepping up only when that keeps it valid.
fn any_path() -> impl Strategy<Value = LatticePath> {
    (0usize..40, 0usize..40).prop_flat_map(|(a, b)| {
        let (l1, l2) = (a.max(b), a.min(b));
        proptest::collection::vec(any::<bool>(), l1 + l2).prop_map(move |bits| {
            let (mut h, mut d, mut u) = (0i64, l1, l2);
            let steps = bits
                .iter()
                .map(|&bit| {
                    if d == 0 || (bit && u > 0 && h < 0) {
                        u -= 1;
                        h += 1;
                        Step::Up
                    } else {
                        d -= 1;
                        h -= 1;
                        Step::Down
                    }
                })
                .collect();
            LatticePath::new(steps).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn evacuation_methods_agree_on_long_paths(p in any_path()) {
        let e = evac_path(&p, EvacMethod::Blocks);
        for m in EvacMethod::ALL {
            prop_assert_eq!(&evac_path(&p, m), &e);
        }
        prop_assert_eq!(evac_path(&e, EvacMethod::Light), p.clone());
        prop_assert_eq!(e.shape(), p.shape());
    }

    #[test]
    fn decomposition_blocks_are_dyck(p in any_path()) {
        let d = rect_decomp(&p);
        let h = p.heights();
        prop_assert_eq!(d.exponents.len(), d.dyck.len() + 1);
        let inner = &d.exponents[1..d.exponents.len().max(2) - 1];
        prop_assert!(inner.iter().all(|&e| e > 0));
        for b in &d.dyck {
            prop_assert_eq!(h[b.lo - 1], h[b.hi]);
            prop_assert!(h[b.lo - 1..=b.hi].iter().all(|&x| x <= h[b.lo - 1]));
        }
        let sizes = rcomp(&p).sizes();
        prop_assert_eq!(sizes.iter().sum::<usize>(), p.len());
        prop_assert_eq!(sizes.iter().step_by(2).sum::<usize>(), p.shape().0 - p.shape().1);
    }

    #[test]
    fn edges_keep_shape_and_validity(p in any_path()) {
        for e in local_edges(&p) {
            prop_assert_eq!(e.target.shape(), p.shape());
            prop_assert!(two_row_transition(&p, e.interval, e.ty).is_ok());
            prop_assert_eq!(edge_type_at(&p, e.interval), Some(e.ty));
        }
    }
}
