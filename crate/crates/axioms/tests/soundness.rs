use cskit_axioms::{verify_gl, verify_local, verify_sn, LabeledGraph};
use cskit_skeleton::build_skeleton_direct;
use cskit_tableaux::Partition;

#[test]
fn crystal_skeletons_satisfy_gl_and_sn() {
    for shape in Partition::all_up_to(6) {
        let g = LabeledGraph::from_skeleton(&build_skeleton_direct(&shape).unwrap());
        for report in [verify_gl(&g), verify_sn(&g)] {
            assert!(report.passed(), "{shape}:\n{report}");
            assert!(report.notes.is_empty(), "{shape}:\n{report}");
        }
    }
}

// The displayed commutation cases claim the square at 12/35/46 keeps its
// edge types; in CS(2,2,2) both I and J change type, so L3 must report it.
#[test]
fn crystal_skeletons_satisfy_local_axioms_except_222() {
    for shape in Partition::all_up_to(6) {
        let g = LabeledGraph::from_skeleton(&build_skeleton_direct(&shape).unwrap());
        let report = verify_local(&g);
        assert!(report.notes.is_empty(), "{shape}:\n{report}");
        if shape.parts() == [2, 2, 2] {
            let failures: Vec<_> = report.failures().map(|v| v.axiom).collect();
            assert_eq!(failures, ["L3"], "{report}");
            let witness = report.verdict("L3").unwrap().witness.clone().unwrap();
            assert!(witness.contains("[1,3] and [4,6]") && witness.contains("(2,1,2,1)"), "{witness}");
        } else {
            assert!(report.passed(), "{shape}:\n{report}");
        }
    }
}
