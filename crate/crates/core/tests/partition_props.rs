//! Randomized checks of the rim combinatorics and both Mullineux algorithms on
//! partitions larger than the exhaustive acceptance ranges.

use mullineux_core::partitions::{rim, strip_p_rim, xu_j_count_closed_form};
use mullineux_core::*;
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A restricted partition built from its successive differences.
fn restricted(p: u64, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..p as usize, 0..=max_len).prop_map(|diffs| {
        let mut parts: Vec<usize> = diffs
            .iter()
            .rev()
            .scan(0, |acc, &d| {
                *acc += d;
                Some(*acc)
            })
            .collect();
        parts.reverse();
        Partition::new(parts).unwrap()
    })
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11])
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition(12, 12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn regular_iff_conjugate_restricted(l in partition(8, 14), p in prime()) {
        prop_assert_eq!(l.is_regular(p).unwrap(), l.conjugate().is_restricted(p).unwrap());
    }

    #[test]
    fn p_rim_is_a_subset_of_the_rim(l in partition(10, 10), p in prime()) {
        let full = rim(&l);
        let prim = p_rim(&l, p).unwrap();
        prop_assert!(prim.iter().all(|n| full.contains(&(n.row, n.col))));
        prop_assert_eq!(prim.len(), rim_count_a(&l, p).unwrap());
        prop_assert_eq!(strip_p_rim(&l, p).unwrap().size() + prim.len(), l.size());
        if !l.is_empty() {
            prop_assert_eq!(prim.first().map(|n| n.col), Some(1));
        }
    }

    #[test]
    fn j_count_matches_closed_form(l in partition(10, 10), p in prime()) {
        let by_nodes = l.size() - xu_j_map(&l, p).unwrap().size();
        prop_assert_eq!(by_nodes, xu_j_count_closed_form(&l, p).unwrap());
    }

    #[test]
    fn bit_form_matches_rim_form(l in partition(10, 10), p in prime(), extra in 0usize..3) {
        let (j, bits) = xu_j_map_bits(&l, p, l.len() + extra).unwrap();
        prop_assert_eq!(&j, &xu_j_map(&l, p).unwrap());
        prop_assert_eq!(bits.iter().map(|&b| b as usize).sum::<usize>(), xu_j_count(&l, p).unwrap());
    }

    #[test]
    fn j_commutes_with_adding_p_multiples(l in partition(8, 8), nu in partition(3, 6), p in prime()) {
        let shifted = l.add_scaled(&nu, p as usize);
        prop_assert_eq!(xu_j_map(&shifted, p).unwrap(), xu_j_map(&l, p).unwrap().add_scaled(&nu, p as usize));
        prop_assert_eq!(xu_j_count(&shifted, p).unwrap(), xu_j_count(&l, p).unwrap());
    }

    #[test]
    fn algorithms_agree_on_larger_partitions(l in restricted(5, 9)) {
        let p = 5;
        prop_assert_eq!(mullineux_symbolic(&l, p).unwrap(), mullineux_xu(&l, p).unwrap());
    }

    #[test]
    fn mullineux_laws(p in prime(), seed in restricted(11, 7)) {
        // reuse the diffs modulo p to stay restricted for the drawn prime
        let parts: Vec<usize> = seed.parts().iter().map(|&x| x % (p as usize * 3)).collect();
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(parts).unwrap();
        prop_assume!(l.is_restricted(p).unwrap());
        let m = mullineux_xu(&l, p).unwrap();
        prop_assert_eq!(m.size(), l.size());
        prop_assert!(m.is_restricted(p).unwrap());
        prop_assert_eq!(mullineux_xu(&m, p).unwrap(), l.clone());
        prop_assert_eq!(m.first(), xu_j_count(&l, p).unwrap());
        prop_assert_eq!(mullineux_xu(&xu_j_map(&l, p).unwrap(), p).unwrap(), m.remove_first_row());
    }

    #[test]
    fn symbol_round_trips(l in restricted(3, 10)) {
        let sym = symbol(&l, 3).unwrap();
        prop_assert_eq!(sym.total(), l.size());
        prop_assert_eq!(from_symbol(&sym).unwrap(), l.clone());
    }

    #[test]
    fn regular_form_is_an_involution(l in restricted(3, 8)) {
        let mu = l.conjugate();
        let image = mullineux_regular(&mu, 3).unwrap();
        prop_assert!(image.is_regular(3).unwrap());
        prop_assert_eq!(mullineux_regular(&image, 3).unwrap(), mu);
    }

    #[test]
    fn partition_text_round_trips(l in partition(20, 10)) {
        let text = l.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), l.clone());
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l);
    }
}

#[test]
fn large_p_mullineux_is_conjugation() {
    for n in 0..=10 {
        for l in Partition::all(n) {
            assert_eq!(mullineux_xu(&l, 11).unwrap(), l.conjugate(), "{l}");
        }
    }
}

#[test]
fn non_restricted_input_is_rejected() {
    let l: Partition = "4,1".parse().unwrap();
    assert!(matches!(mullineux_xu(&l, 3), Err(Error::NotRestricted { .. })));
    assert!(matches!(mullineux_symbolic(&l, 3), Err(Error::NotRestricted { .. })));
    assert_eq!(mullineux_xu(&l, 1), Err(Error::InvalidModulus(1)));
}
