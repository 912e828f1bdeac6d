use proptest::prelude::*;
use qkflag::flag::Flag;
use qkflag::invariants::sijection::Setup;
use qkflag::invariants::{
    peterson_lift, positivity_check, three_point, two_point, ThreePointMethod,
};
use qkflag::ring::GroupAlgElem;
use qkflag::rootsys::{CorootVec, ParabolicSubset, Weight};
use qkflag::weyl::ElemId;
use qkflag::Error;

const TYPES: [&str; 4] = ["A2", "B2", "G2", "A3"];

/// Peterson lift for A3 with K = {2}: <a1, d^> = 2c1 - 2 and <a3, d^> = 2c3 - 2
/// must lie in {0, -1}, so c1 = c3 = 1.
#[test]
fn peterson_lift_values() {
    let a3 = Flag::parse("A3").unwrap();
    let k = ParabolicSubset::from_nodes(3, &[1]).unwrap();
    assert_eq!(peterson_lift(&a3, &CorootVec::from_slice(&[0, 2, 0]), k).unwrap().coords(), &[1, 2, 1]);
    assert_eq!(peterson_lift(&a3, &CorootVec::from_slice(&[0, 1, 0]), k).unwrap().coords(), &[0, 1, 0]);
    let a2 = Flag::parse("A2").unwrap();
    let k1 = ParabolicSubset::from_nodes(2, &[0]).unwrap();
    assert_eq!(peterson_lift(&a2, &CorootVec::from_slice(&[1, 0]), k1).unwrap().coords(), &[1, 0]);
    assert_eq!(peterson_lift(&a2, &CorootVec::from_slice(&[2, 0]), k1).unwrap().coords(), &[2, 1]);
    assert!(peterson_lift(&a2, &CorootVec::from_slice(&[0, 1]), k1).is_err());
}

/// Degree 0 on P^1: O^s . O^s = (1 - e^{-alpha}) O^s, so
/// <O^s, O^s, O_s>_0 = 1 - e^{-alpha}, while <O^s, O^e, O_s>_0 = 1.
#[test]
fn a1_degree_zero_values() {
    let flag = Flag::parse("A1").unwrap();
    let g = flag.group();
    let s = g.parse("1").unwrap();
    let full = ParabolicSubset::full(1);
    let zero = CorootVec::zero(1);
    for m in ThreePointMethod::ALL {
        assert_eq!(three_point(&flag, 0, g.identity(), s, &zero, full, m).unwrap(), GroupAlgElem::one(1));
        let mut want = GroupAlgElem::one(1);
        want.add_term(Weight::from_slice(&[-2]), -1);
        assert_eq!(three_point(&flag, 0, s, s, &zero, full, m).unwrap(), want);
        assert_eq!(three_point(&flag, 0, s, g.identity(), &zero, full, m).unwrap(), GroupAlgElem::zero());
    }
}

#[test]
fn inputs_are_validated() {
    let flag = Flag::parse("A2").unwrap();
    let g = flag.group();
    let k = ParabolicSubset::from_nodes(2, &[0]).unwrap();
    let s2 = g.parse("2").unwrap();
    let d = CorootVec::zero(2);
    let err = three_point(&flag, 0, s2, g.longest(), &d, k, ThreePointMethod::Reduced).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    let err = three_point(&flag, 1, g.identity(), g.longest(), &d, k, ThreePointMethod::Reduced).unwrap_err();
    assert!(matches!(err, Error::Precondition(_)));
    let g2 = Flag::parse("G2").unwrap();
    let d = CorootVec::from_slice(&[0, 1]);
    assert!(positivity_check(&g2, 1, g2.group().identity(), &d, ThreePointMethod::Reduced).is_err());
}

proptest! {
    #[test]
    fn two_point_is_monotone_in_degree(t in 0..TYPES.len(), z in any::<u32>(), x in any::<u32>(),
                                       d in proptest::collection::vec(0i64..3, 3), j in 0usize..3) {
        let flag = Flag::parse(TYPES[t]).unwrap();
        let g = flag.group();
        let rank = flag.rank();
        let full = ParabolicSubset::full(rank);
        let (z, x) = (ElemId(z % g.order() as u32), ElemId(x % g.order() as u32));
        let d = CorootVec::from_slice(&d[..rank]);
        let mut bigger = d.clone();
        bigger[j % rank] += 1;
        let a = two_point(&flag, z, x, &d, full).unwrap();
        let b = two_point(&flag, z, x, &bigger, full).unwrap();
        prop_assert!(!(a == GroupAlgElem::one(rank) && b.is_zero()));
    }

    #[test]
    fn theta_is_an_involution(t in 0..TYPES.len(), i in 0usize..3, w in any::<u32>(), x in any::<u32>(),
                              d in proptest::collection::vec(0i64..3, 3)) {
        let flag = Flag::parse(TYPES[t]).unwrap();
        let g = flag.group();
        let rank = flag.rank();
        let i = i % rank;
        let (w, x) = (ElemId(w % g.order() as u32), ElemId(x % g.order() as u32));
        let s = Setup::new(&flag, i, w, x, CorootVec::from_slice(&d[..rank]), ParabolicSubset::full(rank)).unwrap();
        for e in flag.bqls(i, w).unwrap().iter() {
            let once = s.theta(&e.tuple).unwrap();
            prop_assert_eq!(s.theta(&once).unwrap(), e.tuple.clone());
            prop_assert_eq!(once.length().abs_diff(e.tuple.length()), 1);
        }
    }

    #[test]
    fn routes_agree_on_random_parabolic_instances(t in 0..TYPES.len(), mask in 1u64..8, i in 0usize..3,
                                                  w in any::<u32>(), x in any::<u32>(),
                                                  d in proptest::collection::vec(0i64..4, 3)) {
        let flag = Flag::parse(TYPES[t]).unwrap();
        let g = flag.group();
        let rank = flag.rank();
        let k = ParabolicSubset::from_mask(rank, mask & ((1 << rank) - 1)).unwrap();
        prop_assume!(!k.is_empty());
        let i = k.nodes()[i % k.len()];
        let w = g.min_rep(ElemId(w % g.order() as u32), k.complement());
        let x = g.max_rep(ElemId(x % g.order() as u32), k.complement());
        let d = CorootVec::from_slice(&d[..rank]).project(k);
        let vals: Vec<GroupAlgElem> = ThreePointMethod::ALL
            .iter()
            .map(|&m| three_point(&flag, i, w, x, &d, k, m).unwrap())
            .collect();
        prop_assert_eq!(&vals[0], &vals[1]);
        prop_assert_eq!(&vals[1], &vals[2]);
    }
}
