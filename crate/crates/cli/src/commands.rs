use std::fmt::Write;
use std::path::Path;

use clap::ValueEnum;
use cskit_axioms::{verify_gl, verify_local, verify_sn, AxiomReport, LabeledGraph};
use cskit_skeleton::{branch, build_skeleton_contraction, build_skeleton_direct, dual_equivalence_graph, scc, SkeletonGraph};
use cskit_tableaux::{Partition, Tableau};
use cskit_tworow::{self as tworow, evac_path, local_edges, path_of, rcomp, tableau_of, two_row_transition, EvacMethod, LatticePath};
use serde_json::json;

use crate::{de_to_dot, parse_shape, parse_two_row, render, run_suite, to_dot, CliError, GraphDocument};

/// What a command printed and whether it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, ok: true }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Contraction,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemArg {
    Gl,
    Sn,
    Local,
    All,
}

/// Where `verify` reads its graph from.
#[derive(Debug, Clone)]
pub enum GraphSource {
    Shape(String),
    File(String),
    Json(String),
}

pub const DEFAULT_MAX_N: usize = 7;

fn skeleton_err(e: impl ToString) -> CliError {
    CliError::Parse(e.to_string())
}

/// `method = Both` builds both ways and fails on any difference.
pub fn build(shape: &Partition, method: Method) -> Result<SkeletonGraph, CliError> {
    match method {
        Method::Direct => build_skeleton_direct(shape).map_err(skeleton_err),
        Method::Contraction => build_skeleton_contraction(shape).map_err(skeleton_err),
        Method::Both => {
            let a = build_skeleton_direct(shape).map_err(skeleton_err)?;
            let b = build_skeleton_contraction(shape).map_err(skeleton_err)?;
            let diff = a.diff(&b);
            if diff.is_empty() {
                Ok(a)
            } else {
                Err(CliError::Oracle(diff))
            }
        }
    }
}

fn render_doc(doc: &GraphDocument, format: Format) -> String {
    match format {
        Format::Json => doc.to_json(),
        Format::Dot => to_dot(doc),
    }
}

pub fn cmd_build(shape: &str, format: Format, method: Method) -> Result<Output, CliError> {
    let g = build(&parse_shape(shape)?, method)?;
    Ok(Output::pass(render_doc(&GraphDocument::from_skeleton(&g), format)))
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}

fn load(source: &GraphSource) -> Result<LabeledGraph, CliError> {
    match source {
        GraphSource::Shape(s) => Ok(LabeledGraph::from_skeleton(&build(&parse_shape(s)?, Method::Direct)?)),
        GraphSource::File(path) => GraphDocument::from_json(&read(path)?)
            .map_err(|e| CliError::Parse(format!("{path}: {e}")))?
            .to_labeled(),
        GraphSource::Json(text) => GraphDocument::from_json(text)?.to_labeled(),
    }
}

fn report_json(r: &AxiomReport) -> serde_json::Value {
    json!({
        "system": r.system.as_str(),
        "passed": r.passed(),
        "verdicts": r.verdicts.iter().map(|v| json!({"axiom": v.axiom, "passed": v.passed(), "witness": v.witness})).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

/// Human-readable reports, then a one-line JSON summary when `json` is set.
pub fn cmd_verify(source: &GraphSource, system: SystemArg, json: bool) -> Result<Output, CliError> {
    let g = load(source)?;
    let reports: Vec<AxiomReport> = match system {
        SystemArg::Gl => vec![verify_gl(&g)],
        SystemArg::Sn => vec![verify_sn(&g)],
        SystemArg::Local => vec![verify_local(&g)],
        SystemArg::All => vec![verify_gl(&g), verify_sn(&g), verify_local(&g)],
    };
    let ok = reports.iter().all(AxiomReport::passed);
    let mut text: String = reports.iter().map(|r| r.to_string()).collect();
    writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).unwrap();
    if json {
        let v = json!({"passed": ok, "reports": reports.iter().map(report_json).collect::<Vec<_>>()});
        writeln!(text, "{v}").unwrap();
    }
    Ok(Output { text, ok })
}

/// Reads `CSKIT_MAX_N`, defaulting to [`DEFAULT_MAX_N`].
pub fn max_n_cap() -> Result<usize, CliError> {
    match std::env::var("CSKIT_MAX_N") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Parse(format!("CSKIT_MAX_N={s} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

/// Compares every `*.json` figure in `dir` with the freshly built skeleton.
pub fn check_figures(dir: &Path) -> Result<Output, CliError> {
    let io = |source| CliError::Io { path: dir.display().to_string(), source };
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(io)?;
    files.retain(|p| p.extension().is_some_and(|x| x == "json"));
    files.sort();
    let mut text = String::new();
    let mut ok = true;
    for f in files {
        let name = f.file_name().unwrap_or_default().to_string_lossy().to_string();
        let doc = GraphDocument::from_json(&read(&f.to_string_lossy())?).map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
        let want = doc.to_skeleton().map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
        let got = build(want.shape(), Method::Both)?;
        let diff = want.diff(&got);
        ok &= diff.is_empty();
        match diff.is_empty() {
            true => writeln!(text, "{name}: ok").unwrap(),
            false => writeln!(text, "{name}: FAIL {}", diff.join("; ")).unwrap(),
        }
    }
    Ok(Output { text, ok })
}

pub fn cmd_suite(max_n: usize, figures: Option<&Path>) -> Result<Output, CliError> {
    let cap = max_n_cap()?;
    if max_n > cap {
        return Err(CliError::Bound { max_n, cap });
    }
    let rows = run_suite(max_n);
    let mut out = Output { text: render(&rows), ok: rows.iter().all(|r| r.passed()) };
    if let Some(dir) = figures {
        let f = check_figures(dir)?;
        out.text.push_str(&f.text);
        out.ok &= f.ok;
    }
    Ok(out)
}

pub fn cmd_branch(shape: &str) -> Result<Output, CliError> {
    let g = build(&parse_shape(shape)?, Method::Direct)?;
    let mut text = String::new();
    match branch(&g) {
        Ok(comps) => {
            writeln!(text, "CS{} restricted to [1,{}]: {} components", g.shape(), g.shape().size().saturating_sub(1), comps.len()).unwrap();
            for c in comps {
                let tops: Vec<String> = c.vertices.iter().take(3).map(|&v| g.vertex(v).compact()).collect();
                writeln!(text, "  {} ≅ CS{}: {} vertices, {} edges ({}{})", c.shape, c.shape, c.vertices.len(), c.edges.len(), tops.join(" "), if c.vertices.len() > 3 { " …" } else { "" })
                    .unwrap();
            }
            Ok(Output::pass(text))
        }
        Err(e) => Ok(Output { text: format!("branching FAIL: {e}\n"), ok: false }),
    }
}

pub fn cmd_scc(shape: &str) -> Result<Output, CliError> {
    let shape = parse_shape(shape)?;
    let g = build(&shape, Method::Direct)?;
    let comps = scc(&g);
    let mut text = format!("CS{}: {} strongly connected components\n", shape, comps.len());
    for (k, c) in comps.iter().enumerate() {
        let names: Vec<String> = c.iter().map(|&v| g.vertex(v).compact()).collect();
        let label = match path_of(g.vertex(c[0])) {
            Ok(p) => format!(" rcomp {}", rcomp(&p)),
            Err(_) => String::new(),
        };
        writeln!(text, "  {k}: {} vertices{label}: {}", c.len(), names.join(" ")).unwrap();
    }
    Ok(Output::pass(text))
}

fn parse_path(s: &str) -> Result<LatticePath, CliError> {
    if s.chars().any(|c| c.is_ascii_digit()) {
        let t = Tableau::parse(s).map_err(skeleton_err)?;
        path_of(&t).map_err(skeleton_err)
    } else {
        s.parse().map_err(skeleton_err)
    }
}

/// Path data for a path (`ddu…`) or a two-row tableau (`12/3`).
pub fn cmd_tworow_show(input: &str, method: Option<EvacMethod>) -> Result<Output, CliError> {
    let p = parse_path(input)?;
    let t = tableau_of(&p);
    let mut text = String::new();
    writeln!(text, "path      {p}").unwrap();
    writeln!(text, "tableau   {}", t.compact()).unwrap();
    writeln!(text, "heights   {:?}", p.heights()).unwrap();
    writeln!(text, "Des       {}", p.descent_composition()).unwrap();
    writeln!(text, "rcomp     {}", rcomp(&p)).unwrap();
    for e in local_edges(&p) {
        let kind = two_row_transition(&p, e.interval, e.ty).map_err(skeleton_err)?;
        writeln!(text, "edge      I={} type {} {} -> {}", e.interval, e.ty, kind, e.target).unwrap();
    }
    let want = path_of(&t.evacuate().map_err(skeleton_err)?).map_err(skeleton_err)?;
    let methods: Vec<EvacMethod> = method.map_or(EvacMethod::ALL.to_vec(), |m| vec![m]);
    let mut ok = true;
    for m in methods {
        let got = evac_path(&p, m);
        ok &= got == want;
        writeln!(text, "evac      {got} ({m}){}", if got == want { "" } else { " MISMATCH with tableau evacuation" }).unwrap();
    }
    Ok(Output { text, ok })
}

/// Runs the path-model checks against the tableau skeleton for one shape.
pub fn cmd_tworow_check(shape: &str) -> Result<Output, CliError> {
    let (l1, l2) = parse_two_row(shape)?;
    type ShapeCheck = fn(usize, usize) -> Result<(), String>;
    let checks: [(&str, ShapeCheck); 5] = [
        ("skeleton", tworow::compare_with_direct),
        ("scc", tworow::check_scc),
        ("evacuation", tworow::check_evacuation),
        ("lusztig", tworow::check_lusztig_types),
        ("rcomp", tworow::check_rcomp_monotone),
    ];
    let mut text = String::new();
    let mut ok = true;
    for (name, f) in checks {
        let r = f(l1, l2);
        ok &= r.is_ok();
        match r {
            Ok(()) => writeln!(text, "{name}: ok").unwrap(),
            Err(e) => writeln!(text, "{name}: FAIL {e}").unwrap(),
        }
    }
    Ok(Output { text, ok })
}

pub fn cmd_de(shape: &str, format: Format) -> Result<Output, CliError> {
    let shape = parse_shape(shape)?;
    let g = dual_equivalence_graph(&shape);
    let text = match format {
        Format::Dot => de_to_dot(&g, &format!("DE{shape}")),
        Format::Json => {
            let v = json!({
                "shape": shape.parts(),
                "vertices": g.vertices.iter().enumerate().map(|(id, t)| json!({"id": id, "rows": t.rows()})).collect::<Vec<_>>(),
                "edges": g.edges.iter().map(|&(u, v, i)| json!({"u": u, "v": v, "i": i})).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
    };
    Ok(Output::pass(text))
}
