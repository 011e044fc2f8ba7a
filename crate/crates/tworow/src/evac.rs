use std::fmt;
use std::str::FromStr;

use crate::path::{LatticePath, Step};
use crate::rect::rect_decomp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvacMethod {
    /// `(-1)^{n_ℓ} D_ℓ^# ⋯ (-1)^{n_1} D_1^# (-1)^{n_0}`.
    Blocks,
    /// `evac_i = ε p_{n+1-i}`, with `ε = -1` on β blocks and `+1` on α blocks.
    Signs,
    /// `p^#` with every up-step that reaches a new maximum flipped.
    Light,
}

impl EvacMethod {
    pub const ALL: [EvacMethod; 3] = [EvacMethod::Blocks, EvacMethod::Signs, EvacMethod::Light];

    pub fn as_str(self) -> &'static str {
        match self {
            EvacMethod::Blocks => "blocks",
            EvacMethod::Signs => "signs",
            EvacMethod::Light => "light",
        }
    }
}

impl fmt::Display for EvacMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EvacMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EvacMethod::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| format!("unknown evacuation method `{s}`"))
    }
}

/// Reversed and negated.
pub fn sharp(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.flip()).collect()
}

pub fn evac_path(p: &LatticePath, method: EvacMethod) -> LatticePath {
    let steps = match method {
        EvacMethod::Blocks => {
            let d = rect_decomp(p);
            let mut out = Vec::with_capacity(p.len());
            for k in (0..d.exponents.len()).rev() {
                out.extend(std::iter::repeat_n(Step::Down, d.exponents[k]));
                if k > 0 {
                    let b = d.dyck[k - 1];
                    out.extend(sharp(&p.steps()[b.lo - 1..b.hi]));
                }
            }
            out
        }
        EvacMethod::Signs => {
            let rc = rect_decomp(p).rcomp();
            let n = p.len();
            (1..=n)
                .map(|i| {
                    let s = p.steps()[n - i];
                    if rc.in_beta(n + 1 - i) {
                        s.flip()
                    } else {
                        s
                    }
                })
                .collect()
        }
        EvacMethod::Light => {
            let mut h = 0;
            let mut top = 0;
            sharp(p.steps())
                .into_iter()
                .map(|s| {
                    h += s.value();
                    if s == Step::Up && h > top {
                        top = h;
                        Step::Down
                    } else {
                        s
                    }
                })
                .collect()
        }
    };
    LatticePath::with_steps(steps)
}
