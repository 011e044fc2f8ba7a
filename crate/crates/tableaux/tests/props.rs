use cskit_tableaux::word;
use cskit_tableaux::*;
use proptest::prelude::*;

fn small_word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=5, 0..10)
}

proptest! {
    #[test]
    fn rsk_shapes_agree_and_recording_is_standard(w in small_word()) {
        let (p, q) = rsk(&w);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(q.is_standard() || w.is_empty());
        prop_assert_eq!(insertion_tableau(&p.reading_word()), p);
    }

    #[test]
    fn standardization_preserves_insertion_shape(w in small_word()) {
        let p = insertion_tableau(&w);
        let ps = insertion_tableau(&word::standardize(&w));
        prop_assert_eq!(ps.shape(), p.shape());
        prop_assert_eq!(ps, p.standardize());
    }

    #[test]
    fn descent_set_round_trip(n in 1usize..12, mask in any::<u16>()) {
        let ds: Vec<usize> = (1..n).filter(|d| mask >> d & 1 == 1).collect();
        let a = Composition::from_descent_set(n, &ds);
        prop_assert_eq!(a.size(), n);
        prop_assert_eq!(a.descent_set(), ds);
        prop_assert_eq!(Composition::from_blocks(&a.block_sets()).unwrap(), a);
    }

    #[test]
    fn interval_reflection_is_involutive(lo in 1usize..10, len in 1usize..10) {
        let n = lo + len + 3;
        let iv = Interval::new(lo, lo + len - 1);
        prop_assert_eq!(iv.reflect(n).reflect(n), iv);
        prop_assert_eq!(iv.reflect(n).len(), iv.len());
    }
}
