use cskit_crystal::Cycle;
use cskit_skeleton::*;
use cskit_tableaux::{word, Composition, Interval, Partition, Tableau};

fn t(s: &str) -> Tableau {
    Tableau::parse(s).unwrap()
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn c(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn iv(a: usize, b: usize) -> Interval {
    Interval::new(a, b)
}

fn w(s: &str) -> Vec<usize> {
    word::parse(s).unwrap()
}

/// `(src, interval, dst, cycle)` with tableaux written bottom row first;
/// an empty cycle string means the figure leaves it out.
fn edge_list(g: &SkeletonGraph) -> Vec<(String, Interval, String, String)> {
    g.edges()
        .iter()
        .map(|e| (g.vertex(e.src).compact(), e.interval, g.vertex(e.dst).compact(), e.cycle.to_string()))
        .collect()
}

fn assert_figure(g: &SkeletonGraph, vertices: usize, figure: &[(&str, (usize, usize), &str, &str)]) {
    assert_eq!(g.len(), vertices);
    let edges = edge_list(g);
    assert_eq!(edges.len(), figure.len());
    for &(src, (a, b), dst, cycle) in figure {
        let e = edges
            .iter()
            .find(|e| e.0 == src && e.1 == iv(a, b))
            .unwrap_or_else(|| panic!("missing {src} -[{a},{b}]->"));
        assert_eq!(e.2, dst);
        if !cycle.is_empty() {
            assert_eq!(e.3, cycle);
        }
    }
}

#[test]
fn dyck_interval_examples() {
    assert!(is_dyck_interval(&w("524136"), iv(2, 4)).unwrap());
    assert!(is_dyck_interval(&w("10,7,8,3,1,4,2,5,9,6"), iv(3, 9)).unwrap());
    assert!(is_dyck_interval_bracket(&w("10,7,8,3,1,4,2,5,9,6"), iv(3, 9)).unwrap());
    for a in 1..=4 {
        assert!(!is_dyck_interval(&w("123456"), iv(a, a + 2)).unwrap());
    }
    assert!(is_dyck_interval(&w("123"), iv(1, 2)).is_err());
    assert!(is_dyck_interval(&w("123"), iv(2, 4)).is_err());
}

#[test]
fn dyck_cycles() {
    assert_eq!(dyck_cycle(&w("645123"), iv(1, 5)).unwrap().to_string(), "(543)");
    assert_eq!(dyck_cycle(&w("526134"), iv(2, 6)).unwrap().to_string(), "(654)");
    assert!(dyck_cycle(&w("123456"), iv(1, 3)).is_err());
}

#[test]
fn short_pattern_edge() {
    let tab = t("123/45/6");
    let (target, cycle) = apply_edge(&tab, iv(1, 5)).unwrap();
    assert_eq!(target, t("125/34/6"));
    assert_eq!(cycle, Cycle::descending(5, 3));
    assert_eq!(classify_edge(&tab, iv(1, 5)).unwrap(), EdgeKind::Preserving);
    assert_eq!(tab.descent_composition(), c(&[3, 2, 1]));
    assert_eq!(target.descent_composition(), c(&[2, 3, 1]));
    let beta = descent_transition(&c(&[3, 2, 1]), iv(1, 5), EdgeKind::Preserving).unwrap();
    assert_eq!(beta, c(&[2, 3, 1]));
}

#[test]
fn increasing_example() {
    let tab = t("123/45/6");
    assert_eq!(tab.reading_word(), w("645123"));
    let (target, _) = apply_edge(&tab, iv(2, 4)).unwrap();
    assert_eq!(target.reading_word(), w("635124"));
    assert!(has_rectangle(&tab, 2, 5));
    assert_eq!(classify_edge(&tab, iv(2, 4)).unwrap(), EdgeKind::Increasing);
    let beta = descent_transition(&c(&[3, 2, 1]), iv(2, 4), EdgeKind::Increasing).unwrap();
    assert_eq!(beta, c(&[2, 2, 1, 1]));
    assert_eq!(target.descent_composition(), beta);
}

#[test]
fn decreasing_example() {
    let tab = t("134/256");
    assert_eq!(tab.reading_word(), w("256134"));
    assert!(has_rectangle(&tab, 1, 6));
    assert_eq!(classify_edge(&tab, iv(2, 6)).unwrap(), EdgeKind::Decreasing);
    let (target, cycle) = apply_edge(&tab, iv(2, 6)).unwrap();
    assert_eq!(target, t("123/456"));
    assert_eq!(cycle.to_string(), "(432)");
    let alpha = tab.descent_composition();
    assert_eq!(alpha, c(&[1, 3, 2]));
    let beta = descent_transition(&alpha, iv(2, 6), EdgeKind::Decreasing).unwrap();
    assert_eq!(beta, c(&[3, 3]));
}

#[test]
fn transition_placement_errors() {
    assert!(descent_transition(&c(&[3, 2, 1]), iv(3, 5), EdgeKind::Preserving).is_err());
    assert!(descent_transition(&c(&[3, 2, 1]), iv(2, 4), EdgeKind::Decreasing).is_err());
    assert_eq!(infer_kind(&c(&[3, 2, 1]), iv(1, 5), &c(&[2, 3, 1])), Some(EdgeKind::Preserving));
    assert_eq!(infer_kind(&c(&[3, 2, 1]), iv(1, 5), &c(&[6])), None);
}

#[test]
fn boundary_rectangles_are_absent() {
    let tab = t("12/34");
    assert!(!has_rectangle(&tab, 0, 3));
    assert!(!has_rectangle(&tab, 2, 5));
    assert!(has_rectangle(&tab, 1, 4));
}

#[test]
fn figure_b21_skeleton() {
    for g in [build_skeleton_direct(&p(&[2, 1])).unwrap(), build_skeleton_contraction(&p(&[2, 1])).unwrap()] {
        assert_figure(&g, 2, &[("12/3", (1, 3), "13/2", "(32)")]);
    }
}

#[test]
fn figure_cs33() {
    let figure = [
        ("123/456", (1, 5), "125/346", "(543)"),
        ("134/256", (2, 6), "123/456", "(432)"),
        ("125/346", (4, 6), "124/356", "(54)"),
        ("124/356", (1, 3), "134/256", "(32)"),
        ("123/456", (2, 4), "124/356", "(43)"),
        ("124/356", (3, 5), "123/456", ""),
        ("125/346", (1, 3), "135/246", "(32)"),
        ("135/246", (2, 4), "125/346", ""),
        ("134/256", (3, 5), "135/246", "(54)"),
        ("135/246", (4, 6), "134/256", ""),
    ];
    let direct = build_skeleton_direct(&p(&[3, 3])).unwrap();
    assert_figure(&direct, 5, &figure);
    assert_eq!(direct, build_skeleton_contraction(&p(&[3, 3])).unwrap());
    assert!(is_strongly_connected(&direct));
}

#[test]
fn figure_subgraphs() {
    let cs221 = [
        ("12/34/5", (1, 3), "13/24/5", ""),
        ("12/34/5", (3, 5), "12/35/4", "(54)"),
        ("13/24/5", (2, 4), "12/34/5", "(32)"),
        ("12/35/4", (1, 3), "13/25/4", "(32)"),
        ("13/25/4", (2, 4), "14/25/3", "(43)"),
        ("14/25/3", (3, 5), "13/25/4", ""),
    ];
    assert_figure(&build_skeleton_direct(&p(&[2, 2, 1])).unwrap(), 5, &cs221);
    let cs32 = [
        ("123/45", (1, 5), "125/34", "(543)"),
        ("123/45", (2, 4), "124/35", "(43)"),
        ("124/35", (3, 5), "123/45", ""),
        ("125/34", (1, 3), "135/24", ""),
        ("135/24", (2, 4), "125/34", "(32)"),
        ("134/25", (3, 5), "135/24", "(54)"),
        ("124/35", (1, 3), "134/25", "(32)"),
    ];
    assert_figure(&build_skeleton_direct(&p(&[3, 2])).unwrap(), 5, &cs32);
}

#[test]
fn single_row_has_no_edges() {
    for n in 1..=5 {
        let g = build_skeleton_direct(&p(&[n])).unwrap();
        assert_eq!((g.len(), g.edges().len()), (1, 0));
        assert_eq!(g, build_skeleton_contraction(&p(&[n])).unwrap());
        assert!(is_strongly_connected(&g));
    }
}

#[test]
fn restriction_of_cs321() {
    let g = build_skeleton_direct(&p(&[3, 2, 1])).unwrap();
    let comps = branch(&g).unwrap();
    let mut shapes: Vec<String> = comps.iter().map(|c| c.shape.to_string()).collect();
    shapes.sort();
    assert_eq!(shapes, ["(2,2,1)", "(3,1,1)", "(3,2)"]);
    let of = |rows: &[&str]| -> Vec<usize> {
        let mut ids: Vec<usize> = rows.iter().map(|r| g.id_of(&t(r)).unwrap()).collect();
        ids.sort();
        ids
    };
    let c221 = comps.iter().find(|c| c.shape == p(&[2, 2, 1])).unwrap();
    assert_eq!(c221.vertices, of(&["126/34/5", "126/35/4", "136/24/5", "136/25/4", "146/25/3"]));
    let high = check_restriction(&g, iv(2, 6)).unwrap();
    // The printed list has 125/36/4, whose restriction rectifies to (2,2,1).
    let c32 = of(&["134/26/5", "135/26/4", "136/25/4", "145/26/3", "146/25/3"]);
    let misprint = restricted_tableau(&t("125/36/4"), iv(2, 6)).unwrap();
    assert_eq!(misprint.shape(), p(&[2, 2, 1]));
    assert!(high.iter().any(|c| c.shape == p(&[3, 2]) && c.vertices == c32));
    let whole = check_restriction(&g, iv(1, 6)).unwrap();
    assert_eq!(whole.len(), 1);
    assert_eq!(whole[0].edges.len(), g.edges().len());
}

#[test]
fn structure_of_small_skeletons() {
    let g = build_skeleton_direct(&p(&[3, 2, 1])).unwrap();
    assert_eq!(g.len(), 16);
    assert!(!is_strongly_connected(&g));
    assert!(de_subgraph_check(&g).is_empty());
    lusztig_invariance_check(&g).unwrap();
    let top = top_subcrystal(&g).unwrap();
    assert_eq!(top.level, 3);
    assert_eq!(top.vertices.len(), 8);
    string_length_check(&g, &top).unwrap();
    check_block_destandardization(&g, &top).unwrap();
    let cs33 = build_skeleton_direct(&p(&[3, 3])).unwrap();
    lusztig_invariance_check(&cs33).unwrap();
    let top33 = top_subcrystal(&cs33).unwrap();
    assert_eq!((top33.level, top33.vertices.len()), (2, 1));
}

#[test]
fn lusztig_on_cs21() {
    let g = build_skeleton_direct(&p(&[2, 1])).unwrap();
    let image = lusztig_skeleton(&g).unwrap();
    assert_eq!(image, g);
    assert_eq!(t("12/3").evacuate().unwrap(), t("13/2"));
}

#[test]
fn de_of_two_by_two() {
    let de = dual_equivalence_graph(&p(&[2, 2]));
    let support: std::collections::BTreeSet<(usize, usize)> = de.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    assert_eq!(support.len(), 1);
    assert_eq!(de.edges.len(), 2);
    assert!(dual_equivalence_graph(&p(&[4])).edges.is_empty());
    assert_eq!(dual_equivalence(&w("312"), 2), w("213"));
}

#[test]
fn fan_in_cs43() {
    let g = build_skeleton_direct(&p(&[4, 3])).unwrap();
    let id = |s: &str| g.id_of(&t(s)).unwrap();
    let e = g.edge_from(id("1245/367"), iv(3, 7)).unwrap();
    assert_eq!(e.dst, id("1234/567"));
    assert_eq!(e.kind, EdgeKind::Decreasing);
    let arrow = g.arrow_from(id("1245/367"), iv(3, 7)).unwrap();
    let fan = in_fan(&g, &arrow).unwrap();
    assert_eq!(fan.center, id("1234/567"));
    assert_eq!(fan.members, vec![id("1245/367"), id("1235/467")]);
    assert_eq!(g.edge_from(id("1235/467"), iv(2, 4)).unwrap().dst, id("1245/367"));
    assert_eq!(g.edge_from(id("1234/567"), iv(3, 5)).unwrap().dst, id("1235/467"));
}

#[test]
fn two_cycle_is_a_one_fan() {
    let g = build_skeleton_direct(&p(&[2, 2])).unwrap();
    let id = |s: &str| g.id_of(&t(s)).unwrap();
    let a = g.arrow_from(id("12/34"), iv(1, 3)).unwrap();
    assert_eq!(a.kind, Some(EdgeKind::Increasing));
    let fan = out_fan(&g, &a).unwrap();
    assert_eq!(fan.m, 1);
    assert_eq!(g.edge_from(id("13/24"), iv(2, 4)).unwrap().dst, id("12/34"));
    assert_eq!(fan_check(&g).unwrap(), 2);
}
