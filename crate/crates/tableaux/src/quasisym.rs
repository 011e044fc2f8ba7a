//! Polynomial evaluation of Schur and quasisymmetric functions in finitely many variables.

use std::collections::BTreeMap;

use crate::enumerate::{enumerate_ssyt, enumerate_syt};
use crate::{Composition, Partition};

/// A polynomial in `x_1..x_m` as a map from exponent vectors (length `m`) to coefficients.
pub type Polynomial = BTreeMap<Vec<usize>, i64>;

fn add_monomial(p: &mut Polynomial, exps: Vec<usize>, c: i64) {
    let e = p.entry(exps).or_insert(0);
    *e += c;
    if *e == 0 {
        p.retain(|_, v| *v != 0);
    }
}

/// `s_λ(x_1..x_m)`, summing `x^wt(T)` over semistandard tableaux with letters at most `m`.
pub fn schur_polynomial(shape: &Partition, m: usize) -> Polynomial {
    let mut p = Polynomial::new();
    for t in enumerate_ssyt(shape, m) {
        let mut wt = t.weight();
        wt.resize(m, 0);
        add_monomial(&mut p, wt, 1);
    }
    p
}

/// `M_β(x_1..x_m) = Σ_{i_1<…<i_k} x_{i_1}^{β_1} ⋯ x_{i_k}^{β_k}`.
pub fn monomial_quasisymmetric(beta: &Composition, m: usize) -> Polynomial {
    fn go(parts: &[usize], start: usize, m: usize, exps: &mut Vec<usize>, out: &mut Polynomial) {
        let Some((&first, rest)) = parts.split_first() else {
            add_monomial(out, exps.clone(), 1);
            return;
        };
        for v in start..m {
            if m - v < parts.len() {
                break;
            }
            exps[v] = first;
            go(rest, v + 1, m, exps, out);
            exps[v] = 0;
        }
    }
    let mut out = Polynomial::new();
    go(beta.parts(), 0, m, &mut vec![0; m], &mut out);
    out
}

/// `F_α = Σ_{β refining α} M_β`.
pub fn fundamental_quasisymmetric(alpha: &Composition, m: usize) -> Polynomial {
    let mut out = Polynomial::new();
    for beta in alpha.refinements() {
        for (exps, c) in monomial_quasisymmetric(&beta, m) {
            add_monomial(&mut out, exps, c);
        }
    }
    out
}

/// Whether `s_λ = Σ_{T ∈ SYT(λ)} F_{Des(T)}` holds in `m` variables.
pub fn gessel_identity_check(shape: &Partition, m: usize) -> bool {
    let mut rhs = Polynomial::new();
    for t in enumerate_syt(shape) {
        for (exps, c) in fundamental_quasisymmetric(&t.descent_composition(), m) {
            add_monomial(&mut rhs, exps, c);
        }
    }
    schur_polynomial(shape, m) == rhs
}
