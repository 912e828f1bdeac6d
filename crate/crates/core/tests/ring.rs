use proptest::prelude::*;
use qkflag::flag::Flag;
use qkflag::qbg::OrderVariant;
use qkflag::ring::{
    chevalley, chevalley_nos, chevalley_parabolic, chevalley_with_order, is_cancellation_free,
    quantum_weight_detects_node, Basis, GroupAlgElem, QkClass,
};
use qkflag::rootsys::{CorootVec, ParabolicSubset, Weight};
use qkflag::weyl::ElemId;

const SMALL: [&str; 8] = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"];

#[test]
fn tuple_and_pair_routes_agree() {
    for t in SMALL {
        let flag = Flag::parse(t).unwrap();
        for i in 0..flag.rank() {
            for w in flag.group().elements() {
                let a = chevalley(&flag, i, w).unwrap();
                assert_eq!(a, chevalley_nos(&flag, i, w).unwrap(), "{t}");
                assert_eq!(a, chevalley_with_order(&flag, i, w, OrderVariant::LargestFirst).unwrap(), "{t}");
                assert!(is_cancellation_free(&flag, i, w).unwrap(), "{t}");
                assert!(quantum_weight_detects_node(&flag, i, w).unwrap(), "{t}");
            }
        }
    }
}

/// Non-equivariant QK(P^n): O^1 * O^k = O^{k+1} for k < n, O^1 * O^n = Q.
#[test]
fn projective_space_products() {
    for n in 1..=4usize {
        let flag = Flag::parse(&format!("A{n}")).unwrap();
        let g = flag.group();
        let k = ParabolicSubset::from_nodes(n, &[0]).unwrap();
        // Minimal representatives s_k ... s_1 of W / W_{2..n}.
        let rep = |len: usize| g.from_word(&(0..len).rev().collect::<Vec<_>>()).unwrap();
        for len in 0..=n {
            let prod = chevalley_parabolic(&flag, 0, rep(len), k).unwrap().specialize();
            let mut want = QkClass::zero(k);
            let one = GroupAlgElem::one(n);
            if len < n {
                want.add(rep(len + 1), CorootVec::zero(n), &one);
            } else {
                want.add(g.identity(), CorootVec::unit(n, 0), &one);
            }
            assert_eq!(prod, want, "A{n} O^1 * O^{len}");
        }
    }
}

#[test]
fn g2_long_node_product_contains_theta_term() {
    let flag = Flag::parse("G2").unwrap();
    let g = flag.group();
    let w = g.parse("2,1,2,1,2").unwrap();
    let prod = chevalley(&flag, 1, w).unwrap();
    let text = prod.format(g, Basis::Root);
    assert!(text.contains("O^{e} Q^[1,2]"), "{text}");
}

fn group_alg(rank: usize) -> impl Strategy<Value = GroupAlgElem> {
    proptest::collection::vec((proptest::collection::vec(-3i64..=3, rank), -3i64..=3), 0..6).prop_map(|terms| {
        let mut e = GroupAlgElem::zero();
        for (mu, c) in terms {
            e.add_term(Weight::from_slice(&mu), c);
        }
        e
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in group_alg(2), b in group_alg(2), c in group_alg(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &GroupAlgElem::one(2), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).specialize(), a.specialize() * b.specialize());
    }

    #[test]
    fn weyl_action_is_an_action(a in group_alg(2), u in 0u32..12, v in 0u32..12) {
        let flag = Flag::parse("G2").unwrap();
        let g = flag.group();
        let (u, v) = (ElemId(u), ElemId(v));
        let uv = a.act(g, g.mul(u, v)).unwrap();
        prop_assert_eq!(uv, a.act(g, v).unwrap().act(g, u).unwrap());
        let b = a.act(g, u).unwrap();
        prop_assert_eq!(b.specialize(), a.specialize());
    }

    #[test]
    fn group_alg_json_round_trip(a in group_alg(3)) {
        prop_assert_eq!(GroupAlgElem::from_json(&a.to_json(), 3).unwrap(), a);
    }

    #[test]
    fn class_json_round_trip(t in 0usize..4, i in 0usize..3, w in any::<u32>(), mask in 1u64..8) {
        let flag = Flag::parse(["A2", "B2", "G2", "A3"][t]).unwrap();
        let g = flag.group();
        let rank = flag.rank();
        let k = ParabolicSubset::from_mask(rank, mask & ((1 << rank) - 1)).unwrap();
        prop_assume!(!k.is_empty());
        let i = k.nodes()[i % k.len()];
        let w = g.min_rep(ElemId(w % g.order() as u32), k.complement());
        let prod = chevalley_parabolic(&flag, i, w, k).unwrap();
        let back = QkClass::from_json(g, &prod.to_json(g)).unwrap();
        prop_assert_eq!(back, prod);
    }
}
