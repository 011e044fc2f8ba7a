use std::fmt;

use crate::graph::string_len;
use crate::CrystalGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StembridgeViolation {
    pub vertex: usize,
    pub i: usize,
    pub j: usize,
    pub reason: &'static str,
}

impl fmt::Display for StembridgeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} with (i, j) = ({}, {}): {}", self.vertex, self.i, self.j, self.reason)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StembridgeReport {
    pub squares: usize,
    pub octagons: usize,
    pub violation: Option<StembridgeViolation>,
}

impl StembridgeReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn stembridge_check(g: &CrystalGraph) -> StembridgeReport {
    stembridge_check_table(g.f_table())
}

/// Stembridge's square and octagon relations on a raw `f`-table:
/// `table[v][i-1]` is the target of `f_i` at `v`.
pub fn stembridge_check_table(table: &[Vec<Option<usize>>]) -> StembridgeReport {
    let mut report = StembridgeReport::default();
    let f = |v: Option<usize>, i: usize| v.and_then(|v| table[v].get(i - 1).copied().flatten());
    let phi = |v: usize, i: usize| string_len(table, v, i) as isize;
    for (b, row) in table.iter().enumerate() {
        let ops = row.len();
        for i in 1..=ops {
            for j in i + 1..=ops {
                let (Some(fi), Some(fj)) = (f(Some(b), i), f(Some(b), j)) else { continue };
                let violation = |reason| StembridgeViolation { vertex: b, i, j, reason };
                let dj = phi(fi, j) - phi(b, j);
                let di = phi(fj, i) - phi(b, i);
                if !(0..=1).contains(&dj) || !(0..=1).contains(&di) {
                    report.violation = Some(violation("string length changes by more than one"));
                    return report;
                }
                if dj == 0 || di == 0 {
                    let lhs = f(Some(fj), i);
                    if lhs.is_none() || lhs != f(Some(fi), j) {
                        report.violation = Some(violation("square f_i f_j b = f_j f_i b fails"));
                        return report;
                    }
                    report.squares += 1;
                } else {
                    if j != i + 1 {
                        report.violation = Some(violation("octagon condition with j != i+1"));
                        return report;
                    }
                    let lhs = f(f(f(Some(fi), j), j), i);
                    let rhs = f(f(f(Some(fj), i), i), j);
                    if lhs.is_none() || lhs != rhs {
                        report.violation = Some(violation("octagon f_i f_j^2 f_i b = f_j f_i^2 f_j b fails"));
                        return report;
                    }
                    report.octagons += 1;
                }
            }
        }
    }
    report
}
