use cskit_axioms::{
    commutation_case, commutation_matches, outgoing_pairs, verify_gl, verify_local, verify_sn, CommutationCase, LabeledGraph,
    Mutation,
};
use cskit_skeleton::{build_skeleton_direct, EdgeKind, EdgeView};
use cskit_tableaux::{Composition, Interval, Partition};

fn cs(parts: &[usize]) -> LabeledGraph {
    LabeledGraph::from_skeleton(&build_skeleton_direct(&Partition::new(parts.to_vec()).unwrap()).unwrap())
}

fn edge_index(g: &LabeledGraph, src: usize, iv: Interval) -> usize {
    g.edges().iter().position(|a| a.src == src && a.interval == iv).unwrap()
}

#[test]
fn widened_interval_fails_a0_or_a1() {
    let g = cs(&[3, 2, 1]);
    let mut widened = 0;
    for e in 0..g.edges().len() {
        let Ok(h) = g.mutated(Mutation::WidenInterval(e)) else { continue };
        widened += 1;
        let r = verify_gl(&h);
        let hit: Vec<_> = r.failures().map(|v| v.axiom).filter(|a| *a == "A0" || *a == "A1").collect();
        assert!(!hit.is_empty(), "edge {e}:\n{r}");
        assert!(r.failures().all(|v| v.witness.as_ref().is_some_and(|w| !w.is_empty())));
    }
    assert!(widened > 0);
}

#[test]
fn single_vertex_passes_vacuously() {
    for g in [cs(&[4]), LabeledGraph::new(3, vec![Composition::new(vec![3]).unwrap()], &[]).unwrap()] {
        for r in [verify_gl(&g), verify_sn(&g), verify_local(&g)] {
            assert!(r.passed(), "{r}");
        }
    }
}

#[test]
fn sn_examples() {
    assert!(verify_sn(&cs(&[3, 2, 1])).passed());
    assert!(verify_sn(&cs(&[2, 1])).passed());
    let g = cs(&[2, 2]);
    // 12/34 -[1,3]-> 13/24 is the only edge out of the highest weight vertex.
    let top = g.labels().iter().position(|a| a.parts() == [2, 2]).unwrap();
    let h = g.mutated(Mutation::DeleteEdge(edge_index(&g, top, Interval::new(1, 3)))).unwrap();
    let r = verify_sn(&h);
    assert!(!r.verdict("S6").unwrap().passed(), "{r}");
}

#[test]
fn local_examples() {
    assert!(verify_local(&cs(&[3, 2])).passed());
    let g = cs(&[3, 3]);
    // 124/356 -[3,5]-> 123/456 is the return edge of the increasing [2,4].
    let (src, _) = g.labels().iter().enumerate().find(|(_, a)| a.parts() == [2, 2, 2]).unwrap();
    let h = g.mutated(Mutation::DeleteEdge(edge_index(&g, src, Interval::new(3, 5)))).unwrap();
    let r = verify_local(&h);
    let w = r.verdict("L3").unwrap().witness.clone().expect("L3 must fail");
    assert!(w.contains("no return edge labelled [3,5]"), "{w}");
}

#[test]
fn disjoint_pairs_are_squares() {
    // CS(3,2,1) only has adjacent disjoint pairs, all plain squares.
    let g = cs(&[3, 2, 1]);
    let mut adjacent = 0;
    for v in 0..g.len() {
        for (x, y) in outgoing_pairs(&g, v).into_iter().filter(|(x, y)| x.hi < y.lo) {
            adjacent += 1;
            assert_eq!(x.hi + 1, y.lo);
            assert_eq!(commutation_case(&g, v, x, y).unwrap(), Some(CommutationCase::C1a), "v={v} {x} {y}");
        }
    }
    assert_eq!(adjacent, 2);
    // Gaps between the intervals first appear at n = 7.
    let mut far = 0;
    for shape in Partition::all(7).into_iter().chain(Partition::all(8)) {
        let g = LabeledGraph::from_skeleton(&build_skeleton_direct(&shape).unwrap());
        for v in 0..g.len() {
            for (x, y) in outgoing_pairs(&g, v).into_iter().filter(|(x, y)| x.hi + 1 < y.lo) {
                far += 1;
                assert_eq!(commutation_case(&g, v, x, y).unwrap(), Some(CommutationCase::C1a), "{shape} v={v} {x} {y}");
            }
        }
    }
    assert!(far > 0);
}

#[test]
fn triangle_2aii() {
    let find = |g: &LabeledGraph| {
        let mut found = Vec::new();
        for v in 0..g.len() {
            for (x, y) in outgoing_pairs(g, v) {
                let Ok(ms) = commutation_matches(g, v, x, y) else { continue };
                for m in ms.iter().filter(|m| m.case == CommutationCase::C2aii) {
                    assert_eq!(x.len(), 3);
                    assert_eq!(y.lo, x.lo + 2);
                    assert_eq!(g.arrow_from(v, x).unwrap().kind, Some(EdgeKind::Preserving));
                    let [j, jp] = m.closing;
                    assert_eq!((j.src, j.interval, j.kind), (v, y, Some(EdgeKind::Decreasing)));
                    assert_eq!((jp.interval, jp.kind), (Interval::new(x.lo + 1, y.hi + 1), Some(EdgeKind::Decreasing)));
                    found.push((v, x, y));
                }
            }
        }
        found
    };
    // CS(2,2,1) has no three-vertex cycle-free triangle at all.
    assert!(find(&cs(&[2, 2, 1])).is_empty());
    let g = cs(&[3, 3]);
    let v = g.labels().iter().position(|a| a.parts() == [2, 2, 2]).unwrap();
    assert_eq!(find(&g), [(v, Interval::new(1, 3), Interval::new(3, 5))]);
}

#[test]
fn increasing_outer_edge_gives_triangle_3a() {
    let mut seen = 0;
    for shape in Partition::all_up_to(6) {
        let g = LabeledGraph::from_skeleton(&build_skeleton_direct(&shape).unwrap());
        for v in 0..g.len() {
            for (x, y) in outgoing_pairs(&g, v) {
                let (outer, inner) = if y.is_subset_of(&x) { (x, y) } else if x.is_subset_of(&y) { (y, x) } else { continue };
                let a = g.arrow_from(v, outer).unwrap();
                if inner.lo != outer.lo + 1 || inner.len() + 2 != outer.len() || a.kind != Some(EdgeKind::Increasing) {
                    continue;
                }
                seen += 1;
                let ms = commutation_matches(&g, v, x, y).unwrap();
                let m = ms.iter().find(|m| m.case == CommutationCase::C3a).unwrap_or_else(|| panic!("{shape} v={v} {x} {y}"));
                assert_eq!(m.sink, g.arrow_from(v, inner).unwrap().dst);
                assert_eq!(m.closing[1].interval, Interval::new(outer.hi - 1, outer.hi + 1));
                assert_eq!(m.closing[1].kind, Some(EdgeKind::Preserving));
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn commutation_rejects_non_edges() {
    let g = cs(&[2, 1]);
    assert!(commutation_case(&g, 0, Interval::new(1, 3), Interval::new(2, 2)).is_err());
}
