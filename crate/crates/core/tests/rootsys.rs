use qkflag::checks::tabulated_pairing_one_nodes;
use qkflag::rootsys::{LieType, RootSystem};

fn all_types() -> Vec<RootSystem> {
    LieType::all_up_to(8).into_iter().map(|t| RootSystem::new(t).unwrap()).collect()
}

#[test]
fn coroots_pair_positively_with_rho() {
    for rs in all_types() {
        let rho = rs.rho();
        for b in 0..rs.num_positive_roots() {
            assert!(rs.pairing(&rho, rs.coroot_by_index(b)).unwrap() > 0, "{}", rs.lie_type());
        }
    }
}

#[test]
fn cartan_is_symmetrizable() {
    for rs in all_types() {
        for j in 0..rs.rank() {
            assert!(rs.symmetrizer(j) > 0);
            for k in 0..rs.rank() {
                assert_eq!(
                    rs.cartan_entry(j, k) * rs.symmetrizer(k),
                    rs.cartan_entry(k, j) * rs.symmetrizer(j),
                    "{} ({j},{k})",
                    rs.lie_type()
                );
            }
        }
    }
}

// Only long roots: in B2 the short root a1 + a2 has coroot 2a1v + a2v,
// which pairs to 2 with varpi_1 while theta^vee pairs to 1.
#[test]
fn theta_coroot_dominates_long_root_coroots() {
    for rs in all_types() {
        let tc = rs.theta_coroot().clone();
        let long = rs.inner(rs.theta(), rs.theta());
        for b in 0..rs.num_positive_roots() {
            if rs.inner(rs.root(b), rs.root(b)) == long {
                assert!(tc.dominates(rs.coroot_by_index(b)), "{}", rs.lie_type());
            }
        }
    }
    let b2 = RootSystem::parse("B2").unwrap();
    let short = b2.root_index(&qkflag::rootsys::RootVec::from_slice(&[1, 1])).unwrap();
    assert_eq!(b2.coroot_by_index(short).coords(), &[2, 1]);
    assert_eq!(b2.theta_coroot().coords(), &[1, 1]);
}

#[test]
fn pairing_one_nodes_match_table_through_rank_eight() {
    for rs in all_types() {
        assert_eq!(rs.pairing_one_nodes().nodes(), tabulated_pairing_one_nodes(rs.lie_type()), "{}", rs.lie_type());
    }
}

#[test]
fn pairing_one_nodes_pair_at_most_two_with_every_coroot() {
    for rs in all_types() {
        for i in rs.pairing_one_nodes().nodes() {
            for b in 0..rs.num_positive_roots() {
                assert!((0..=2).contains(&rs.coroot_by_index(b)[i]), "{} i={}", rs.lie_type(), i + 1);
            }
        }
    }
}

#[test]
fn root_counts_and_e8_highest_root() {
    let e8 = RootSystem::parse("E8").unwrap();
    assert_eq!(e8.num_positive_roots(), 120);
    // Highest root of E8 in the chain-plus-branch numbering used here.
    assert_eq!(e8.theta().coords(), &[2, 4, 6, 5, 4, 3, 2, 3]);
    let f4 = RootSystem::parse("F4").unwrap();
    assert_eq!(f4.theta().coords(), &[2, 3, 4, 2]);
}
