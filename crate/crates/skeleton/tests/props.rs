use cskit_skeleton::*;
use cskit_tableaux::{insertion_tableau, Interval};
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (3..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
}

proptest! {
    #[test]
    fn dyck_tests_agree_on_longer_words(pi in permutation(11)) {
        let n = pi.len();
        for lo in 1..=n {
            for hi in (lo + 2..=n).step_by(2) {
                let iv = Interval::new(lo, hi);
                prop_assert_eq!(is_dyck_interval(&pi, iv).unwrap(), is_dyck_interval_bracket(&pi, iv).unwrap());
            }
        }
    }

    #[test]
    fn dyck_intervals_depend_on_the_knuth_class(pi in permutation(10)) {
        let p = insertion_tableau(&pi);
        for iv in dyck_intervals(&pi) {
            let cycle = dyck_cycle(&pi, iv).unwrap();
            prop_assert_eq!(cycle.len(), iv.half() + 1);
            let image = cycle.apply_word(&pi);
            prop_assert_eq!(insertion_tableau(&image).shape(), p.shape());
            let (target, _) = apply_edge(&p, iv).unwrap();
            prop_assert_eq!(target.shape(), p.shape());
        }
        prop_assert_eq!(dyck_intervals(&pi), dyck_intervals(&p.reading_word()));
    }
}
