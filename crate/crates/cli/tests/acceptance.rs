//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.
//!
//! Criterion 5 is expected to fail: in CS(2,2,2) the outgoing pair
//! `[1,3]` (preserving) and `[4,6]` (decreasing) at `12/35/46` closes a
//! square whose far edges are increasing and preserving, which none of the
//! commutation cases allows. The run exits non-zero if any other criterion
//! fails, or if criterion 5 starts passing.

use std::process::ExitCode;
use std::time::Instant;

use cskit_axioms::{commutation_case, mutation_suite, outgoing_pairs, verify_gl, verify_local, verify_sn, LabeledGraph};
use cskit_crystal::{build_crystal, cycle_of, stembridge_check};
use cskit_skeleton::{
    branch, build_skeleton_contraction, build_skeleton_direct, classify_edge, de_subgraph_check, descent_transition, g1_gn_check,
    is_strongly_connected, lusztig_invariance_check, string_length_check, top_subcrystal, EdgeKind, SkeletonGraph,
};
use cskit_tableaux::quasisym::gessel_identity_check;
use cskit_tableaux::{word, Composition, Interval, Partition, Tableau};
use cskit_tworow::{check_evacuation, check_scc, compare_with_direct, evac_path, rcomp, tableau_of, EvacMethod, LatticePath, Step};

type Check = Result<String, String>;
type Criterion = fn() -> Check;

const EXPECTED_FAILURES: &[usize] = &[5];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn direct(shape: &Partition) -> Result<SkeletonGraph, String> {
    build_skeleton_direct(shape).map_err(|e| format!("{shape}: {e}"))
}

type FigureEdge = (&'static str, (usize, usize), &'static str, &'static str);

fn match_figure(g: &SkeletonGraph, vertices: usize, figure: &[FigureEdge]) -> Result<(), String> {
    let name = g.shape().to_string();
    ensure(g.len() == vertices, || format!("CS{name} has {} vertices, figure {vertices}", g.len()))?;
    ensure(g.edges().len() == figure.len(), || format!("CS{name} has {} edges, figure {}", g.edges().len(), figure.len()))?;
    for &(src, (a, b), dst, cycle) in figure {
        let s = Tableau::parse(src).unwrap();
        let e = g
            .id_of(&s)
            .and_then(|v| g.edge_from(v, Interval::new(a, b)))
            .ok_or_else(|| format!("CS{name}: no edge {src} -[{a},{b}]->"))?;
        ensure(g.vertex(e.dst).compact() == dst, || format!("CS{name}: {src} -[{a},{b}]-> {} not {dst}", g.vertex(e.dst).compact()))?;
        ensure(cycle.is_empty() || e.cycle.to_string() == cycle, || format!("CS{name}: {src} -[{a},{b}]-> has cycle {}", e.cycle))?;
    }
    Ok(())
}

fn figure_fidelity() -> Check {
    let b21: &[FigureEdge] = &[("12/3", (1, 3), "13/2", "(32)")];
    let cs33: &[FigureEdge] = &[
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
    let cs221: &[FigureEdge] = &[
        ("12/34/5", (1, 3), "13/24/5", ""),
        ("12/34/5", (3, 5), "12/35/4", "(54)"),
        ("13/24/5", (2, 4), "12/34/5", "(32)"),
        ("12/35/4", (1, 3), "13/25/4", "(32)"),
        ("13/25/4", (2, 4), "14/25/3", "(43)"),
        ("14/25/3", (3, 5), "13/25/4", ""),
    ];
    let cs32: &[FigureEdge] = &[
        ("123/45", (1, 5), "125/34", "(543)"),
        ("123/45", (2, 4), "124/35", "(43)"),
        ("124/35", (3, 5), "123/45", ""),
        ("125/34", (1, 3), "135/24", ""),
        ("135/24", (2, 4), "125/34", "(32)"),
        ("134/25", (3, 5), "135/24", "(54)"),
        ("124/35", (1, 3), "134/25", "(32)"),
    ];
    let cases = [(&[2, 1][..], 2, b21), (&[3, 3], 5, cs33), (&[2, 2, 1], 5, cs221), (&[3, 2], 5, cs32)];
    for (shape, v, fig) in cases {
        let shape = part(shape);
        match_figure(&direct(&shape)?, v, fig)?;
        match_figure(&build_skeleton_contraction(&shape).map_err(|e| e.to_string())?, v, fig)?;
    }
    Ok("CS(2,1), CS(3,3), CS(2,2,1), CS(3,2) match their figures under both constructions".into())
}

fn oracle_equality() -> Check {
    let shapes = Partition::all_up_to(7);
    for shape in &shapes {
        let a = direct(shape)?;
        let b = build_skeleton_contraction(shape).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("{shape}: {}", a.diff(&b).join("; ")))?;
    }
    Ok(format!("direct = contraction on all {} shapes of size ≤ 7", shapes.len()))
}

fn descent_calculus() -> Check {
    let mut edges = 0;
    for shape in Partition::all_up_to(7) {
        let g = direct(&shape)?;
        for e in g.edges() {
            let kind = classify_edge(g.vertex(e.src), e.interval).map_err(|x| x.to_string())?;
            let beta = descent_transition(g.des(e.src), e.interval, kind).map_err(|x| x.to_string())?;
            ensure(&beta == g.des(e.dst), || format!("{shape}: {} -{}-> predicted {beta}", g.vertex(e.src).compact(), e.interval))?;
            edges += 1;
        }
    }
    let c = |p: &[usize]| Composition::new(p.to_vec()).unwrap();
    let worked = [
        ("123/45/6", (1, 5), EdgeKind::Preserving, c(&[2, 3, 1])),
        ("123/45/6", (2, 4), EdgeKind::Increasing, c(&[2, 2, 1, 1])),
        ("134/256", (2, 6), EdgeKind::Decreasing, c(&[3, 3])),
    ];
    for (t, (a, b), kind, want) in worked {
        let t = Tableau::parse(t).unwrap();
        let iv = Interval::new(a, b);
        let got_kind = classify_edge(&t, iv).map_err(|x| x.to_string())?;
        ensure(got_kind == kind, || format!("{} [{a},{b}] is {got_kind}", t.compact()))?;
        let beta = descent_transition(&t.descent_composition(), iv, kind).map_err(|x| x.to_string())?;
        ensure(beta == want, || format!("{} [{a},{b}] gives {beta}, expected {want}", t.compact()))?;
    }
    Ok(format!("{edges} edges of size ≤ 7 and the three worked transitions"))
}

fn structure_theorems() -> Check {
    for shape in Partition::all_up_to(7) {
        let g = direct(&shape)?;
        let de = de_subgraph_check(&g);
        ensure(de.is_empty(), || format!("DE {shape}: {}", de.join("; ")))?;
        let comps = branch(&g).map_err(|e| format!("branching {shape}: {e}"))?;
        let want = if shape.size() > 1 { shape.removable_rows().len() } else { 0 };
        ensure(comps.len() == want, || format!("branching {shape}: {} components", comps.len()))?;
        lusztig_invariance_check(&g).map_err(|e| format!("Lusztig {shape}: {e}"))?;
        g1_gn_check(&g).map_err(|e| format!("G_[1,n-1] vs G_[2,n] {shape}: {e}"))?;
        let top = top_subcrystal(&g).map_err(|e| format!("top {shape}: {e}"))?;
        ensure(top.level == shape.len(), || format!("top {shape}: level {}", top.level))?;
        string_length_check(&g, &top).map_err(|e| format!("strings {shape}: {e}"))?;
    }
    for shape in Partition::all_up_to(8) {
        let g = direct(&shape)?;
        ensure(is_strongly_connected(&g) == shape.is_rectangle(), || format!("strong connectivity {shape}"))?;
    }
    Ok("DE, branching, Lusztig, top subcrystal for size ≤ 7; strong connectivity iff rectangle for size ≤ 8".into())
}

fn axiom_systems() -> Check {
    let mut problems = Vec::new();
    for shape in Partition::all_up_to(6) {
        let g = LabeledGraph::from_skeleton(&direct(&shape)?);
        for r in [verify_gl(&g), verify_sn(&g), verify_local(&g)] {
            for v in r.failures() {
                problems.push(format!("{} {} fails {}", shape, r.system, v.axiom));
            }
        }
        for v in 0..g.len() {
            for (i, j) in outgoing_pairs(&g, v) {
                match commutation_case(&g, v, i, j) {
                    Ok(Some(_)) => {}
                    Ok(None) => problems.push(format!("{shape} vertex {v}: {i},{j} NO_MATCH")),
                    Err(e) => problems.push(format!("{shape} vertex {v}: {e}")),
                }
            }
        }
    }
    let g = LabeledGraph::from_skeleton(&direct(&part(&[3, 2, 1]))?);
    let suite = mutation_suite(&g);
    ensure(suite.len() == 12, || format!("mutation suite has {} cases", suite.len()))?;
    for m in suite {
        let h = g.mutated(m).map_err(|e| e.to_string())?;
        for r in [verify_gl(&h), verify_sn(&h), verify_local(&h)] {
            if r.passed() {
                problems.push(format!("mutant `{m}` passes {}", r.system));
            }
        }
    }
    if problems.is_empty() {
        return Ok("all systems pass for size ≤ 6, 12 mutants fail each system, every pair has a case".into());
    }
    let uncovered = problems.iter().filter(|p| p.contains("no commutation case applies")).count();
    let others: Vec<&String> = problems.iter().filter(|p| !p.contains("no commutation case applies")).collect();
    Err(format!(
        "{} pairs outside every case's hypotheses; {}",
        uncovered,
        others.iter().map(|s| s.as_str()).collect::<Vec<_>>().join("; ")
    ))
}

fn gessel_identity() -> Check {
    let mut count = 0;
    for shape in Partition::all_up_to(5) {
        for m in 1..=5 {
            ensure(gessel_identity_check(&shape, m), || format!("{shape} in {m} variables"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (shape, m) pairs with size ≤ 5, m ≤ 5"))
}

fn two_row_model() -> Check {
    let mut shapes = 0;
    for n in 1..=12 {
        for l2 in 0..=n / 2 {
            let l1 = n - l2;
            compare_with_direct(l1, l2)?;
            check_scc(l1, l2)?;
            check_evacuation(l1, l2)?;
            shapes += 1;
        }
    }
    let signs = [-1, -1, 1, -1, -1, 1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, -1, -1];
    let p = LatticePath::new(signs.iter().map(|&s| if s < 0 { Step::Down } else { Step::Up }).collect()).map_err(|e| e.to_string())?;
    let rc = rcomp(&p).to_string();
    ensure(rc == "(∅,[1,8],[9,10],[11,22],[23,25])", || format!("rcomp of the long example is {rc}"))?;
    let want = Tableau::new(vec![
        vec![1, 2, 3, 4, 5, 7, 10, 12, 13, 16, 17, 18, 19, 20, 23],
        vec![6, 8, 9, 11, 14, 15, 21, 22, 24, 25],
    ])
    .unwrap();
    for m in EvacMethod::ALL {
        let got = tableau_of(&evac_path(&p, m));
        ensure(got == want, || format!("evac of the long example by {m} is {}", got.compact()))?;
    }
    Ok(format!("{shapes} two-row shapes with λ₁+λ₂ ≤ 12 and the 25-step example"))
}

fn crystal_sanity() -> Check {
    let mut edges = 0;
    for shape in Partition::all_up_to(6) {
        let n = shape.size();
        let g = build_crystal(&shape, n).map_err(|e| e.to_string())?;
        let report = stembridge_check(&g);
        ensure(report.passed(), || format!("Stembridge fails on B{shape}_{n}"))?;
        for (b, i, b2) in g.edges() {
            let (src, dst) = (&g.vertices()[b], &g.vertices()[b2]);
            let c = cycle_of(src, i).map_err(|e| e.to_string())?;
            let pi = word::standardize(&src.reading_word());
            ensure(c.apply_word(&pi) == word::standardize(&dst.reading_word()), || format!("B{shape}_{n}: cycle {c} on f_{i} of {}", src.compact()))?;
            edges += 1;
        }
    }
    Ok(format!("Stembridge axioms and cycle·π = π′ on {edges} crystal edges, size ≤ 6"))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("FIGURE FIDELITY", figure_fidelity),
        ("ORACLE EQUALITY", oracle_equality),
        ("DESCENT CALCULUS", descent_calculus),
        ("STRUCTURE THEOREMS", structure_theorems),
        ("AXIOM SYSTEMS", axiom_systems),
        ("GESSEL IDENTITY", gessel_identity),
        ("TWO-ROW MODEL", two_row_model),
        ("CRYSTAL SANITY", crystal_sanity),
    ];
    let mut unexpected = 0;
    for (k, (name, check)) in (1..).zip(criteria) {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        let expected_fail = EXPECTED_FAILURES.contains(&k);
        match &result {
            Ok(msg) => println!("[PASS] {k} {name}: {msg} ({secs:.2}s)"),
            Err(msg) => println!("[FAIL] {k} {name}: {msg} ({secs:.2}s)"),
        }
        if expected_fail {
            match result {
                Ok(_) => {
                    println!("       criterion {k} was expected to fail; update EXPECTED_FAILURES");
                    unexpected += 1;
                }
                Err(_) => println!(
                    "       expected: in CS(2,2,2) at 12/35/46 the pair [1,3], [4,6] closes a square with types changed, which no commutation case allows"
                ),
            }
        } else if result.is_err() {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
