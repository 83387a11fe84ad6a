mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;

use lieword::complexity::{count_extended_lie, count_lie, prefix_lie_sequence};
use lieword::word::power_to_length;
use lieword::{
    canonical_rotation, choose_horizon, complexity_table, factor_set, is_primitive,
    materialize_prefix, HorizonPolicy, Prefix, RauzyGraph, TableOptions, WordKind, WordSpec,
};

fn word(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    (2u8..=3).prop_flat_map(move |k| prop::collection::vec(0..k, 1..=max_len))
}

fn binary(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 1..=max_len)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn text(w: &[u8]) -> String {
    w.iter().map(|&s| (b'a' + s) as char).collect()
}

/// A prolongable binary morphism `a -> a x`, `b -> y`.
fn morphic() -> impl Strategy<Value = WordSpec> {
    (binary(4), binary(4)).prop_map(|(x, y)| {
        let spec = format!("morphic a a->a{} b->{}", text(&x), text(&y));
        WordSpec::parse(&spec).unwrap()
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn prefixes_are_consistent(spec in morphic(), m in 0usize..200, extra in 0usize..200) {
        let short = materialize_prefix(&spec, m).unwrap();
        let long = materialize_prefix(&spec, m + extra).unwrap();
        prop_assert_eq!(&long[..m], &short[..]);
    }

    #[test]
    fn fixed_point_is_fixed(spec in morphic(), len in 1usize..300) {
        let WordKind::Morphic(m) = spec.kind() else { unreachable!() };
        let w = m.fixed_point_prefix(len);
        let image = m.apply(&w);
        prop_assert!(image.len() >= w.len());
        prop_assert_eq!(&image[..w.len()], &w[..]);
    }

    #[test]
    fn periodic_factors_are_cyclic_factors(u in word(12), n in 1usize..=12) {
        let spec = WordSpec::power(&text(&u)).unwrap();
        let prefix = Prefix::new(&spec, choose_horizon(&spec, n, &HorizonPolicy::default())).unwrap();
        let got: BTreeSet<Vec<u8>> = prefix.factors(n).unwrap().iter().map(<[u8]>::to_vec).collect();
        let symbols = materialize_prefix(&spec, u.len()).unwrap();
        let want: BTreeSet<Vec<u8>> = (0..u.len())
            .map(|i| symbols.iter().cycle().skip(i).take(n).copied().collect())
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn integer_powers(u in word(8), k in 1usize..5) {
        prop_assert_eq!(power_to_length(&u, k * u.len()).unwrap(), u.repeat(k));
    }

    #[test]
    fn canonical_rotation_is_class_minimum(u in word(16)) {
        let rots = common::rotations(&u);
        let c = canonical_rotation(&u).unwrap();
        prop_assert_eq!(&c, rots.iter().min().unwrap());
        for r in &rots {
            prop_assert_eq!(&canonical_rotation(r).unwrap(), &c);
        }
        prop_assert_eq!(is_primitive(&u).unwrap(), common::primitive(&u));
    }

    #[test]
    fn lie_matches_oracle_and_extended_dominates(w in word(40), n in 1usize..12) {
        let f = factor_set(&w, n.min(w.len())).unwrap();
        let l = count_lie(&f);
        prop_assert_eq!(l, common::lie_oracle(&w, n.min(w.len())));
        prop_assert!(l <= count_extended_lie(&f));
    }

    #[test]
    fn prefix_lie_steps(w in word(40)) {
        let seq = prefix_lie_sequence(&w);
        prop_assert_eq!(&seq, &common::prefix_lie_oracle(&w));
        for s in seq.windows(2) {
            prop_assert!(s[1] == s[0] || s[1] == s[0] + 1);
        }
    }

    #[test]
    fn circuits_match_brute_force(w in word(30), n in 1usize..5) {
        let v = factor_set(&w, n.min(w.len())).unwrap();
        let e = factor_set(&w, (n + 1).min(w.len())).unwrap();
        prop_assume!(e.n() == v.n() + 1);
        let g = RauzyGraph::from_factor_sets(&v, &e).unwrap();
        let found: BTreeSet<Vec<usize>> =
            g.elementary_circuits(1_000_000).unwrap().into_iter().map(|c| c.vertices).collect();
        prop_assert_eq!(found, common::brute_force_cycles(&g));
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn strategies_agree(w in word(48)) {
        let spec = WordSpec::finite(&text(&w)).unwrap();
        let mut options =
            TableOptions { strategy: lieword::Strategy::Sequential, ..TableOptions::default() };
        let seq = complexity_table(&spec, 12, &options).unwrap();
        options.strategy = lieword::Strategy::Parallel;
        prop_assert_eq!(seq, complexity_table(&spec, 12, &options).unwrap());
    }
}
