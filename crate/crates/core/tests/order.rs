use std::cmp::Ordering;

use ordcal::order::{Sign, TreeOrder};
use proptest::prelude::*;

fn tree(max: usize) -> impl Strategy<Value = TreeOrder> {
    prop::collection::vec(any::<bool>(), 1..=max)
        .prop_map(|s| TreeOrder::new(s.into_iter().map(|p| if p { Sign::Plus } else { Sign::Minus }).collect()))
}

proptest! {
    #[test]
    fn linearization_matches_comparison(t in tree(10)) {
        let line = t.linearize();
        let mut sorted = line.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (0..t.len()).collect::<Vec<_>>());
        for (i, &a) in line.iter().enumerate() {
            for (j, &b) in line.iter().enumerate() {
                prop_assert_eq!(t.compare(a, b).unwrap(), i.cmp(&j));
            }
        }
    }

    #[test]
    fn reconstruct_inverts_linearize(t in tree(10)) {
        prop_assert_eq!(TreeOrder::reconstruct(&t.linearize()).unwrap(), t);
    }

    #[test]
    fn tails_are_convex(t in tree(10), start in 0usize..10) {
        let start = start.min(t.len() - 1);
        let line = t.linearize();
        let pos: Vec<usize> = line.iter().enumerate().filter(|(_, &v)| v >= start).map(|(p, _)| p).collect();
        prop_assert_eq!(pos.last().unwrap() - pos[0] + 1, pos.len());
    }

    #[test]
    fn segments_lie_outside_the_block(t in tree(10), a in 0usize..10, m in 1usize..=10) {
        let (alpha, mu) = (a.min(t.len() - 1), m.min(t.len()));
        prop_assume!(alpha < mu);
        let (left, right) = t.segments(alpha, mu).unwrap();
        prop_assert_eq!(left.len() + right.len(), alpha);
        for gamma in alpha..mu {
            prop_assert!(left.iter().all(|&b| t.compare(b, gamma).unwrap() == Ordering::Less));
            prop_assert!(right.iter().all(|&b| t.compare(b, gamma).unwrap() == Ordering::Greater));
        }
    }
}

#[test]
fn reconstruct_rejects_non_tree_orders() {
    // 0 has later indices on both sides
    assert!(TreeOrder::reconstruct(&[2, 0, 1]).is_err());
    assert!(TreeOrder::reconstruct(&[1, 0, 2]).is_err());
    assert!(TreeOrder::reconstruct(&[0, 0]).is_err());
}
