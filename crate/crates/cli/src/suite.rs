use std::fmt::Write;

use cskit_axioms::{commutation_matches, outgoing_pairs, verify_gl, verify_local, verify_sn, AxiomError, LabeledGraph};
use cskit_skeleton::{
    branch, build_skeleton_contraction, build_skeleton_direct, check_block_destandardization, de_subgraph_check, g1_gn_check,
    is_strongly_connected, lusztig_invariance_check, restricted_lusztig_check, string_length_check, top_subcrystal, SkeletonGraph,
};
use cskit_tableaux::Partition;
use cskit_tworow as tworow;
use rayon::prelude::*;

pub const CHECKS: [&str; 9] = ["oracle", "de", "branching", "lusztig", "scc", "top", "commutation", "axioms", "tworow"];

/// Results for one shape, in the order of [`CHECKS`]; `None` when a check
/// does not apply to the shape.
#[derive(Debug, Clone)]
pub struct SuiteRow {
    pub shape: Partition,
    pub results: Vec<Option<Result<(), String>>>,
}

impl SuiteRow {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| !matches!(r, Some(Err(_))))
    }
}

fn oracle(shape: &Partition, g: &SkeletonGraph) -> Result<(), String> {
    let other = build_skeleton_contraction(shape).map_err(|e| e.to_string())?;
    let diff = g.diff(&other);
    if diff.is_empty() {
        Ok(())
    } else {
        Err(diff.join("; "))
    }
}

fn branching(shape: &Partition, g: &SkeletonGraph) -> Result<(), String> {
    let comps = branch(g)?;
    let want = if shape.size() > 1 { shape.removable_rows().len() } else { 0 };
    if comps.len() == want {
        Ok(())
    } else {
        Err(format!("{} components, expected {want}", comps.len()))
    }
}

/// Every outgoing pair of `G` and of `L_n(G)` that a commutation case covers
/// matches one.
pub fn commutation_coverage(g: &LabeledGraph) -> Result<(), String> {
    for (which, h) in [("G", g.clone()), ("L(G)", g.lusztig())] {
        for v in 0..h.len() {
            for (i, j) in outgoing_pairs(&h, v) {
                match commutation_matches(&h, v, i, j) {
                    Ok(m) if m.is_empty() => return Err(format!("no case matches {i} and {j} at vertex {v} of {which}")),
                    Ok(_) | Err(AxiomError::Uncovered { .. }) => {}
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
    }
    Ok(())
}

fn axioms(g: &LabeledGraph) -> Result<(), String> {
    let failed: Vec<String> = [verify_gl(g), verify_sn(g), verify_local(g)]
        .iter()
        .flat_map(|r| r.failures().map(move |v| format!("{} {}", r.system, v.axiom)).collect::<Vec<_>>())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(format!("fails {}", failed.join(", ")))
    }
}

fn two_row(shape: &Partition) -> Option<Result<(), String>> {
    let (l1, l2) = match shape.parts() {
        [a] => (*a, 0),
        [a, b] => (*a, *b),
        _ => return None,
    };
    Some((|| {
        tworow::compare_with_direct(l1, l2)?;
        tworow::check_scc(l1, l2)?;
        tworow::check_evacuation(l1, l2)?;
        tworow::check_lusztig_types(l1, l2)?;
        tworow::check_rcomp_monotone(l1, l2)
    })())
}

pub fn check_shape(shape: &Partition) -> SuiteRow {
    let g = match build_skeleton_direct(shape) {
        Ok(g) => g,
        Err(e) => return SuiteRow { shape: shape.clone(), results: vec![Some(Err(e.to_string())); CHECKS.len()] },
    };
    let lg = LabeledGraph::from_skeleton(&g);
    let de = de_subgraph_check(&g);
    let results = vec![
        Some(oracle(shape, &g)),
        Some(if de.is_empty() { Ok(()) } else { Err(de.join("; ")) }),
        Some(branching(shape, &g)),
        Some(lusztig_invariance_check(&g).and_then(|_| restricted_lusztig_check(&g)).and_then(|_| g1_gn_check(&g))),
        Some(if is_strongly_connected(&g) == shape.is_rectangle() {
            Ok(())
        } else {
            Err("strong connectivity does not match rectangularity".to_string())
        }),
        Some(top_subcrystal(&g).and_then(|top| {
            string_length_check(&g, &top)?;
            check_block_destandardization(&g, &top)
        })),
        Some(commutation_coverage(&lg)),
        Some(axioms(&lg)),
        two_row(shape),
    ];
    SuiteRow { shape: shape.clone(), results }
}

/// Every check on every `λ ⊢ n ≤ max_n`, shapes in parallel, rows in the
/// order of [`Partition::all_up_to`].
pub fn run_suite(max_n: usize) -> Vec<SuiteRow> {
    let shapes = Partition::all_up_to(max_n);
    shapes.par_iter().map(check_shape).collect()
}

/// The pass/fail matrix followed by the reason for each failure.
pub fn render(rows: &[SuiteRow]) -> String {
    let width = rows.iter().map(|r| r.shape.to_string().len()).max().unwrap_or(5).max(5);
    let mut out = String::new();
    write!(out, "{:width$}", "shape").unwrap();
    for c in CHECKS {
        write!(out, "  {c}").unwrap();
    }
    out.push('\n');
    for r in rows {
        write!(out, "{:width$}", r.shape.to_string()).unwrap();
        for (c, res) in CHECKS.iter().zip(&r.results) {
            let cell = match res {
                None => "-",
                Some(Ok(())) => "ok",
                Some(Err(_)) => "FAIL",
            };
            write!(out, "  {cell:<w$}", w = c.len()).unwrap();
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
    let mut failures = 0;
    for r in rows {
        for (c, res) in CHECKS.iter().zip(&r.results) {
            if let Some(Err(e)) = res {
                failures += 1;
                writeln!(out, "{} {c}: {e}", r.shape).unwrap();
            }
        }
    }
    writeln!(out, "{} shapes, {} checks failed", rows.len(), failures).unwrap();
    out
}
