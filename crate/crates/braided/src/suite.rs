//! Structural property checks run over every catalog example.

use exact_linalg::{vector, Matrix};
use serde::Serialize;

use crate::catalog::{qyd_examples, yd_examples};
use crate::double::DoubleSpec;
use crate::generic::GenericParams;
use crate::ops::{deformed_factorial, minimal_left_quotient, minimal_right_quotient};
use crate::quotient::GradedQuotient;
use crate::qyd::braid_equation_check;
use crate::BraidedError;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteEntry {
    pub family: String,
    pub example: String,
    pub pass: bool,
    pub detail: Option<String>,
}

fn entry(family: &str, example: &str, pass: bool, detail: Option<String>) -> SuiteEntry {
    SuiteEntry { family: family.into(), example: example.into(), pass, detail }
}

/// `V ⊗ I_{n-1} + I_{n-1} ⊗ V ⊆ I_n` for `n <= truncation`.
pub fn ideal_grows(q: &GradedQuotient) -> Option<String> {
    let d = q.generators();
    let f = q.field();
    for n in 2..=q.truncation() {
        let big = q.relations_full(n);
        let small = q.relations_full(n - 1);
        for r in small.rows() {
            for j in 0..d {
                let e = vector::unit(f, d, j);
                for v in [vector::kron(r, &e), vector::kron(&e, r)] {
                    if !big.contains(&v) {
                        return Some(format!("degree {n}"));
                    }
                }
            }
        }
    }
    None
}

/// Kernel dimensions of the deformed factorials for `n = 2..=max`.
fn generic_dims(psi: &Matrix, max: usize, seed: u64) -> Result<Vec<usize>, BraidedError> {
    let params = GenericParams::indexed("u", 2..=max, 3, seed)?;
    (2..=max).map(|n| deformed_factorial(psi, n, &params).map(|k| k.dim)).collect()
}

/// Braid equation, YD compatibility, ideal growth, genericity stability and
/// associativity witnesses on the catalog.
pub fn property_suite(seed: u64) -> Result<Vec<SuiteEntry>, BraidedError> {
    let mut out = Vec::new();
    for (name, y) in yd_examples()? {
        let psi = y.braiding()?;
        let b = braid_equation_check(&psi, y.dim());
        out.push(entry("braid-equation", &name, b.braid_equation && b.invertible, None));
        let r = y.check();
        out.push(entry("yd-compatibility", &name, r.pass, r.failure));
        let over_q = psi.field().characteristic() == 0;
        if over_q && y.dim() <= 3 {
            let a = generic_dims(&psi, 3, seed)?;
            let b = generic_dims(&psi, 3, seed.wrapping_add(1))?;
            let detail = (a != b).then(|| format!("{a:?} against {b:?}"));
            out.push(entry("genericity-stability", &name, a == b, detail));
        }
    }
    for (name, q) in qyd_examples()? {
        let r = q.check();
        out.push(entry("qyd-compatibility", &name, r.pass, r.witness));
        let depth = 3;
        let left = minimal_left_quotient(&q, depth)?;
        let right = minimal_right_quotient(&q, depth)?;
        let w = ideal_grows(&left).map(|d| format!("left {d}")).or(ideal_grows(&right).map(|d| format!("right {d}")));
        out.push(entry("ideal-growth", &name, w.is_none(), w));
        let spec = DoubleSpec::new(q.clone(), left, right)?;
        let a = spec.associativity_generators()?;
        out.push(entry("associativity-generators", &name, a.pass, a.witness));
        let a = spec.associativity_random(30, depth, seed)?;
        out.push(entry("associativity-random", &name, a.pass, a.witness));
    }
    Ok(out)
}

/// `true` when every entry passes.
pub fn all_pass(entries: &[SuiteEntry]) -> bool {
    entries.iter().all(|e| e.pass)
}
