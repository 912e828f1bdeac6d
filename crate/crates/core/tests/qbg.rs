use std::collections::BTreeSet;

use qkflag::checks::{parse_edge_tsv, G2_FIGURE_TSV};
use qkflag::flag::Flag;
use qkflag::qbg::{DegreeFilter, OrderVariant};
use qkflag::rootsys::ParabolicSubset;

const SMALL: [&str; 8] = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"];

#[test]
fn g2_graph_matches_figure() {
    let flag = Flag::parse("G2").unwrap();
    let want = parse_edge_tsv(&flag, G2_FIGURE_TSV).unwrap();
    let got = parse_edge_tsv(&flag, &flag.paths().graph().to_tsv(flag.group(), None)).unwrap();
    assert_eq!(want.iter().filter(|e| e.2 == 'B').count(), 20);
    assert_eq!(want.iter().filter(|e| e.2 == 'Q').count(), 18);
    assert_eq!(got, want);
}

/// The caption: the theta edge lies in QBG_{(1/2) varpi_2}, the edges
/// labelled 2a1 + a2 and a1 + a2 lie in QBG_{(1/3) varpi_2} = QBG_{(2/3) varpi_2}.
#[test]
fn g2_caption_subgraphs() {
    let flag = Flag::parse("G2").unwrap();
    let g = flag.group();
    let figure = parse_edge_tsv(&flag, G2_FIGURE_TSV).unwrap();
    let labelled = |labels: &[&str]| -> BTreeSet<_> {
        figure.iter().filter(|e| labels.contains(&e.3.as_str())).cloned().collect()
    };
    let sub = |num, den| {
        let f = DegreeFilter::new(1, num, den).unwrap();
        parse_edge_tsv(&flag, &flag.paths().graph().to_tsv(g, Some(f))).unwrap()
    };
    assert_eq!(sub(1, 2), labelled(&["[1,0]", "[3,2]"]));
    assert_eq!(sub(1, 3), labelled(&["[1,0]", "[1,1]", "[2,1]"]));
    assert_eq!(sub(1, 3), sub(2, 3));
    assert_eq!(sub(0, 1), figure);
}

#[test]
fn tbmax_below_lemma() {
    for t in SMALL {
        let flag = Flag::parse(t).unwrap();
        let g = flag.group();
        for lambda in ParabolicSubset::all_subsets(flag.rank()) {
            for w in g.elements() {
                for v in g.elements() {
                    if !g.bruhat_leq(g.min_rep(w, lambda), g.min_rep(v, lambda)) {
                        continue;
                    }
                    if flag.tbmax(w, lambda, v).unwrap() == w {
                        assert!(g.bruhat_leq(w, v), "{t}");
                    }
                }
            }
        }
    }
}

#[test]
fn qwt_and_tbmax_do_not_depend_on_the_order() {
    for t in SMALL {
        let flag = Flag::parse(t).unwrap();
        let g = flag.group();
        let rs = flag.root_system();
        for lambda in ParabolicSubset::all_subsets(flag.rank()) {
            let a = flag.order(lambda, OrderVariant::SmallestFirst).unwrap();
            let b = flag.order(lambda, OrderVariant::LargestFirst).unwrap();
            assert!(a.is_convex(rs) && b.is_convex(rs) && a.respects_split(rs) && b.respects_split(rs));
            for u in g.min_reps(lambda) {
                for v in g.elements() {
                    let x = flag.paths().tbmax(g, u, lambda, v, &a).unwrap();
                    let y = flag.paths().tbmax(g, u, lambda, v, &b).unwrap();
                    assert_eq!(x, y, "{t}");
                }
            }
            for v in g.elements() {
                for w in g.elements() {
                    let p = flag.paths().label_increasing_path(v, w, &a).unwrap();
                    let q = flag.paths().label_decreasing_path(v, w, &b).unwrap();
                    assert_eq!(p.qwt(rs), q.qwt(rs));
                    assert_eq!(p.qwt(rs), flag.qwt(v, w));
                }
            }
        }
    }
}

#[test]
fn dot_uses_dashes_for_quantum_edges() {
    let flag = Flag::parse("A1").unwrap();
    let dot = flag.paths().graph().to_dot(flag.group(), None);
    assert!(dot.contains("\"e\" -> \"1\" [label=\"[1]\", style=solid];"), "{dot}");
    assert!(dot.contains("\"1\" -> \"e\" [label=\"[1]\", style=dashed];"), "{dot}");
}
