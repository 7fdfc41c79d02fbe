//! Orbit dimensions, openness certificates and degeneration obstructions.
//!
//! The module variety itself is never built. A module is described by its
//! dimension `d`, the orbit dimension `d^2 - dim End(M)`, and one of two
//! sufficient conditions for the orbit to be open.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::bimodule::{twist_recognize, Bimodule};
use crate::error::{Error, Result};
use crate::homological::ext_dim;
use crate::module::{hom_dim, is_isomorphic, is_isomorphic_seeded, ModuleRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// One-dimensional module over a basic algebra: the variety is a point.
    OpenSimpleBasic,
    /// `Ext^1(M, M) = 0`.
    OpenExtVanishing,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitStats {
    pub d: usize,
    pub end_dim: usize,
    pub orbit_dim: usize,
    pub certificate: Certificate,
}

pub fn orbit_stats(m: &ModuleRep) -> Result<OrbitStats> {
    let d = m.dim();
    let end_dim = hom_dim(m, m)?;
    let certificate = if d == 1 {
        Certificate::OpenSimpleBasic
    } else if ext_dim(m, m, 1)? == 0 {
        Certificate::OpenExtVanishing
    } else {
        Certificate::Unknown
    };
    Ok(OrbitStats {
        d,
        end_dim,
        orbit_dim: d * d - end_dim,
        certificate,
    })
}

/// A labelled module used to test the degeneration order.
#[derive(Clone, Debug)]
pub struct TestModule {
    pub label: String,
    pub module: ModuleRep,
}

/// Simples, indecomposable projectives, `M` and `N`.
pub fn default_test_set(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<TestModule>> {
    let a = m.algebra();
    let mut out = Vec::new();
    for i in 0..a.num_vertices() {
        out.push(TestModule {
            label: format!("S{i}"),
            module: ModuleRep::simple(a, i)?,
        });
    }
    for i in 0..a.num_vertices() {
        out.push(TestModule {
            label: format!("P{i}"),
            module: ModuleRep::indecomposable_projective(a, i)?,
        });
    }
    out.push(TestModule {
        label: "M".into(),
        module: m.clone(),
    });
    out.push(TestModule {
        label: "N".into(),
        module: n.clone(),
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub label: String,
    pub hom_into_m: usize,
    pub hom_into_n: usize,
}

/// Outcome of the Hom test. An obstruction proves that `M` does not
/// degenerate to `N`; its absence proves nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenerationVerdict {
    pub obstruction: Option<Obstruction>,
    pub passed_tests: usize,
}

/// Checks `dim Hom(X, N) >= dim Hom(X, M)` for every test module `X`.
/// An empty `tests` slice means the default set.
pub fn degeneration_obstruction(
    m: &ModuleRep,
    n: &ModuleRep,
    tests: &[TestModule],
) -> Result<DegenerationVerdict> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Err(Error::DimensionMismatch {
            left: m.dim(),
            right: n.dim(),
        });
    }
    let defaults;
    let tests = if tests.is_empty() {
        defaults = default_test_set(m, n)?;
        &defaults[..]
    } else {
        tests
    };
    let mut passed = 0;
    for t in tests {
        let hm = hom_dim(&t.module, m)?;
        let hn = hom_dim(&t.module, n)?;
        if hn < hm {
            return Ok(DegenerationVerdict {
                obstruction: Some(Obstruction {
                    label: t.label.clone(),
                    hom_into_m: hm,
                    hom_into_n: hn,
                }),
                passed_tests: passed,
            });
        }
        passed += 1;
    }
    Ok(DegenerationVerdict {
        obstruction: None,
        passed_tests: passed,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    pub step: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegularDegenerationConclusion {
    /// The candidate is isomorphic to the regular bimodule.
    Improper,
    /// Same orbit dimension but a different orbit, so the regular bimodule
    /// is not a proper degeneration of it.
    NotProperDegeneration,
    /// The candidate is not of the form `₁A_σ`; the argument stopped at
    /// the given step.
    StoppedAt(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularDegenerationReport {
    pub trace: Vec<TraceStep>,
    pub conclusion: RegularDegenerationConclusion,
}

/// Runs the four checks showing that a candidate bimodule `M` cannot
/// properly degenerate to `₁A₁`: regular restrictions, recovery of a twist
/// `σ` with `M ≅ ₁A_σ`, equality of orbit dimensions, and the isomorphism
/// test against `₁A₁`.
pub fn regular_degeneration_check(
    algebra: &Arc<Algebra>,
    candidate: &Bimodule,
    seed: u64,
) -> Result<RegularDegenerationReport> {
    if !algebra.is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    if !candidate.left_algebra().same_structure(algebra) || !candidate.right_algebra().same_structure(algebra) {
        return Err(Error::AlgebraMismatch);
    }
    let n = algebra.dim();
    let mut trace = Vec::new();
    let stop = |trace, step| RegularDegenerationReport {
        trace,
        conclusion: RegularDegenerationConclusion::StoppedAt(step),
    };

    let right_ok = candidate.dim() == n
        && is_isomorphic(&ModuleRep::regular(algebra), &candidate.right_restriction())?.is_some();
    let left_ok = candidate.dim() == n
        && is_isomorphic(&ModuleRep::regular(&algebra.opposite()), &candidate.left_restriction())?.is_some();
    trace.push(TraceStep {
        step: 1,
        name: "restrictions are regular",
        passed: right_ok && left_ok,
        detail: format!("dim M = {}, left regular: {left_ok}, right regular: {right_ok}", candidate.dim()),
    });
    if !(right_ok && left_ok) {
        return Ok(stop(trace, 1));
    }

    let Some(sigma) = twist_recognize(candidate)? else {
        trace.push(TraceStep {
            step: 2,
            name: "M is a twisted bimodule",
            passed: false,
            detail: "no automorphism recovered".into(),
        });
        return Ok(stop(trace, 2));
    };
    trace.push(TraceStep {
        step: 2,
        name: "M is a twisted bimodule",
        passed: true,
        detail: sigma.describe().join(", "),
    });

    let regular = Bimodule::regular(algebra);
    let om = orbit_stats(candidate.carrier())?.orbit_dim;
    let or = orbit_stats(regular.carrier())?.orbit_dim;
    let expected = n * n - algebra.center().dim();
    let dims_ok = om == or && or == expected;
    trace.push(TraceStep {
        step: 3,
        name: "orbit dimensions agree",
        passed: dims_ok,
        detail: format!("orbit dim M = {om}, orbit dim A = {or}, d^2 - dim Z(A) = {expected}"),
    });
    if !dims_ok {
        return Ok(stop(trace, 3));
    }

    let iso = is_isomorphic_seeded(candidate.carrier(), regular.carrier(), seed)?.is_some();
    trace.push(TraceStep {
        step: 4,
        name: "isomorphism with the regular bimodule",
        passed: true,
        detail: if iso { "isomorphic".into() } else { "not isomorphic".into() },
    });
    Ok(RegularDegenerationReport {
        trace,
        conclusion: if iso {
            RegularDegenerationConclusion::Improper
        } else {
            RegularDegenerationConclusion::NotProperDegeneration
        },
    })
}
