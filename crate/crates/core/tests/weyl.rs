use proptest::prelude::*;
use qkflag::rootsys::{ParabolicSubset, Weight};
use qkflag::weyl::{ElemId, WeylGroup};

const TYPES: [&str; 7] = ["A2", "A3", "B2", "C2", "B3", "C3", "G2"];

fn group(t: usize) -> WeylGroup {
    WeylGroup::parse_type(TYPES[t]).unwrap()
}

proptest! {
    #[test]
    fn length_is_subadditive(t in 0..TYPES.len(), a in any::<u32>(), b in any::<u32>()) {
        let g = group(t);
        let u = ElemId(a % g.order() as u32);
        let v = ElemId(b % g.order() as u32);
        let uv = g.mul(u, v);
        prop_assert!(g.length(uv) <= g.length(u) + g.length(v));
        prop_assert_eq!(g.length(g.inverse(u)), g.length(u));
    }

    #[test]
    fn reduced_words_concatenate(t in 0..TYPES.len(), a in any::<u32>(), j in 0usize..3) {
        let g = group(t);
        let u = ElemId(a % g.order() as u32);
        let j = j % g.rank();
        let us = g.right_mul(u, j);
        let expected = if g.has_right_descent(u, j) { g.length(u) - 1 } else { g.length(u) + 1 };
        prop_assert_eq!(g.length(us), expected);
    }

    #[test]
    fn coset_factorization_is_length_additive(t in 0..TYPES.len(), a in any::<u32>(), mask in any::<u64>()) {
        let g = group(t);
        let w = ElemId(a % g.order() as u32);
        let lambda = ParabolicSubset::from_mask(g.rank(), mask & ((1 << g.rank()) - 1)).unwrap();
        let m = g.min_rep(w, lambda);
        let z = g.mul(g.inverse(m), w);
        prop_assert!(g.parabolic_subgroup(lambda).contains(&z));
        prop_assert_eq!(g.length(w), g.length(m) + g.length(z));
        prop_assert!(g.is_min_rep(m, lambda));
        prop_assert!(g.is_max_rep(g.max_rep(w, lambda), lambda));
    }

    #[test]
    fn reflections_act_as_reflect_weight(t in 0..TYPES.len(), b in any::<usize>(), c in proptest::collection::vec(-4i64..=4, 3)) {
        let g = group(t);
        let rs = g.root_system();
        let b = b % rs.num_positive_roots();
        let lambda = Weight::from_slice(&c[..g.rank()]);
        let direct = rs.reflect_weight(rs.root(b), &lambda).unwrap();
        prop_assert_eq!(g.apply_weight(g.reflection(b), &lambda).unwrap(), direct);
    }
}

#[test]
fn bruhat_is_a_partial_order_compatible_with_projection() {
    for t in 0..TYPES.len() {
        let g = group(t);
        let els: Vec<ElemId> = g.elements().collect();
        for &u in &els {
            assert!(g.bruhat_leq(u, u));
            for &v in &els {
                if u != v && g.bruhat_leq(u, v) {
                    assert!(!g.bruhat_leq(v, u));
                    assert!(g.length(u) < g.length(v));
                    for lambda in ParabolicSubset::all_subsets(g.rank()) {
                        assert!(g.bruhat_leq(g.min_rep(u, lambda), g.min_rep(v, lambda)));
                    }
                }
            }
        }
        for &u in els.iter().step_by(3) {
            for &v in els.iter().step_by(2) {
                if !g.bruhat_leq(u, v) {
                    continue;
                }
                for &w in &els {
                    if g.bruhat_leq(v, w) {
                        assert!(g.bruhat_leq(u, w));
                    }
                }
            }
        }
    }
}
