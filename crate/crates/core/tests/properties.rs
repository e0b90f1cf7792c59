use num_bigint::BigInt;
use proptest::prelude::*;

use catalan_cf::contfrac::eval_cf;
use catalan_cf::paths::{path_to_tree, tree_to_path};
use catalan_cf::perms::{perm_to_tree, tree_to_perm};
use catalan_cf::{LevelWeights, Monomial, OrderedTree, TruncSeries};

const ORDER: u32 = 4;

fn monomial() -> impl Strategy<Value = Monomial> {
    prop_oneof![
        (0..=ORDER, 0u64..4).prop_map(|(z, q)| Monomial::zq(z, q)),
        prop::collection::vec(0u32..2, 1..4).prop_map(|p| Monomial::from_level_profile(&p)),
    ]
}

fn series() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec((monomial(), -3i64..=3), 0..6)
        .prop_map(|terms| TruncSeries::from_terms(ORDER, terms.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

/// Series with no z-free term, valid input for the geometric inverse.
fn small_series() -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(((1..=ORDER, 0u64..4), -3i64..=3), 0..5).prop_map(|terms| {
        TruncSeries::from_terms(ORDER, terms.into_iter().map(|((z, q), c)| (Monomial::zq(z, q), c)))
    })
}

fn tree() -> impl Strategy<Value = OrderedTree> {
    let leaf = Just(OrderedTree::root());
    leaf.prop_recursive(6, 40, 5, |inner| {
        prop::collection::vec(inner, 0..5).prop_map(OrderedTree::from_children)
    })
}

fn weights() -> impl Strategy<Value = LevelWeights> {
    prop_oneof![
        Just(LevelWeights::Catalan),
        Just(LevelWeights::Eq1),
        Just(LevelWeights::Eq2),
        (1u32..6).prop_map(LevelWeights::GeneralK),
        Just(LevelWeights::Multivariate),
    ]
}

proptest! {
    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn no_zero_coefficients_survive(a in series(), b in series()) {
        let sum = a.add(&b.neg()).unwrap();
        prop_assert!(sum.terms().all(|(m, c)| *c != BigInt::from(0) && m.z_deg() <= ORDER));
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn geometric_inverse_inverts(s in small_series()) {
        let one = TruncSeries::one(ORDER);
        let inv = s.geom_inverse().unwrap();
        prop_assert_eq!(one.sub(&s).unwrap().mul(&inv).unwrap(), one);
    }

    #[test]
    fn truncation_is_consistent(a in series(), b in series(), m in 0..=ORDER) {
        let high = a.mul(&b).unwrap().truncate(m);
        let low = a.truncate(m).mul(&b.truncate(m)).unwrap();
        prop_assert_eq!(high, low);
    }

    #[test]
    fn fraction_truncation_is_consistent(w in weights(), big in 2u32..7, small in 0u32..2) {
        let direct = eval_cf(&w, big as usize, small).unwrap();
        let dropped = eval_cf(&w, big as usize, big).unwrap().truncate(small);
        prop_assert_eq!(direct, dropped);
    }

    #[test]
    fn depth_saturates(w in weights(), order in 0u32..6, extra in 0usize..4) {
        let base = eval_cf(&w, (order as usize).max(1), order).unwrap();
        prop_assert_eq!(eval_cf(&w, order as usize + extra + 1, order).unwrap(), base);
    }

    #[test]
    fn encoding_round_trips(t in tree()) {
        let enc = t.encode();
        prop_assert_eq!(enc.len(), 2 * t.n_edges());
        prop_assert_eq!(enc.parse::<OrderedTree>().unwrap(), t);
    }

    #[test]
    fn bijections_round_trip(t in tree()) {
        prop_assert_eq!(path_to_tree(&tree_to_path(&t)), t.clone());
        let p = tree_to_perm(&t);
        prop_assert!(p.has_132().is_none());
        prop_assert_eq!(perm_to_tree(&p).unwrap(), t);
    }

    #[test]
    fn level_statistics_agree(t in tree()) {
        let profile = t.level_profile();
        prop_assert_eq!(profile.n_edges() as usize, t.n_edges());
        prop_assert!(profile.counts().last() != Some(&0));
        let weighted: u64 = profile.counts().iter().enumerate().map(|(i, &c)| (i as u64 + 1) * u64::from(c)).sum();
        prop_assert_eq!(t.level_sum(), weighted);
        prop_assert_eq!(t.binom_level_sum(2).unwrap(), t.level_sum() - t.n_edges() as u64);
    }
}
