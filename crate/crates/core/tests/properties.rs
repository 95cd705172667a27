use proptest::collection::vec;
use proptest::prelude::*;

use partition_bounds::frobenius::{
    dyson_rank, from_frobenius, paper_bottom_row, successive_ranks, to_frobenius,
};
use partition_bounds::graphical::{erdos_gallai_report, havel_hakimi_witness, is_graphical};
use partition_bounds::Partition;

fn partition() -> impl Strategy<Value = Partition> {
    vec(0u32..40, 0..40).prop_map(Partition::new)
}

/// Partitions with even weight, built by bumping the smallest part when odd.
fn even_partition() -> impl Strategy<Value = Partition> {
    vec(1u32..25, 1..45).prop_map(|mut parts| {
        if parts.iter().sum::<u32>() % 2 == 1 {
            parts.push(1);
        }
        Partition::new(parts)
    })
}

proptest! {
    #[test]
    fn from_raw_ignores_order_and_zeros(mut raw in vec(0i64..30, 0..30), seed in any::<u64>()) {
        let p = Partition::from_raw(&raw).unwrap();
        let len = raw.len().max(1);
        raw.rotate_left(seed as usize % len);
        raw.push(0);
        prop_assert_eq!(Partition::from_raw(&raw).unwrap(), p);
    }

    #[test]
    fn conjugate_is_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().durfee_size(), p.durfee_size());
    }

    #[test]
    fn frobenius_round_trip(p in partition()) {
        let s = to_frobenius(&p);
        prop_assert_eq!(s.weight(), p.weight());
        prop_assert_eq!(paper_bottom_row(&p), s.bottom().to_vec());
        prop_assert_eq!(to_frobenius(&p.conjugate()), s.transpose());
        prop_assert_eq!(from_frobenius(&s), p);
    }

    #[test]
    fn fast_and_full_erdos_gallai_agree(p in partition()) {
        prop_assert_eq!(is_graphical(&p), erdos_gallai_report(&p).graphical);
    }

    #[test]
    fn witness_iff_graphical(p in even_partition()) {
        match havel_hakimi_witness(&p) {
            Some(w) => {
                prop_assert!(is_graphical(&p));
                prop_assert!(w.is_simple());
                prop_assert_eq!(w.degrees(), p.parts().to_vec());
            }
            None => prop_assert!(!is_graphical(&p)),
        }
    }

    #[test]
    fn graphical_implies_column_condition_and_negative_rank(p in even_partition()) {
        if is_graphical(&p) {
            let s = to_frobenius(&p);
            prop_assert!(s.column_condition());
            let rank = dyson_rank(&p).unwrap();
            prop_assert!(rank <= -1);
            prop_assert_eq!(rank, successive_ranks(&s).ranks()[0]);
        }
    }

    #[test]
    fn negative_ranks_imply_graphical(p in even_partition()) {
        if successive_ranks(&to_frobenius(&p)).all_at_most(-1) {
            prop_assert!(is_graphical(&p));
        }
    }
}
