//! Minimal projective resolutions, syzygies, Ext and periodicity.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Subspace;
use crate::module::{hom_basis, is_isomorphic_seeded, strip_projectives, CoverData, ModuleMap, ModuleRep};

#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub multiplicities: Vec<usize>,
    /// `dim_k P^t`.
    pub projective_dim: usize,
    /// `Ω^{t+1} M`.
    pub syzygy: ModuleRep,
    pub cover: CoverData,
}

/// The terms `P^0, ..., P^T` of a minimal projective resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub base: ModuleRep,
    pub horizon: usize,
    pub steps: Vec<ResolutionStep>,
}

impl Resolution {
    /// `dim_k P^t` for `t = 0..=T`.
    pub fn dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.projective_dim).collect()
    }

    /// `dim Ω^t M` for `t = 1..=T+1`.
    pub fn syzygy_dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.syzygy.dim()).collect()
    }

    /// `Ω^t M` for `t = 0..=T+1`.
    pub fn syzygy(&self, t: usize) -> &ModuleRep {
        if t == 0 {
            &self.base
        } else {
            &self.steps[t - 1].syzygy
        }
    }

    /// Checks every step: the cover is a surjective homomorphism, the
    /// kernel inclusion composes to zero with it, dimensions add up, and
    /// the kernel lies in `P rad(A)`.
    pub fn check(&self) -> Result<()> {
        for (t, step) in self.steps.iter().enumerate() {
            let c = &step.cover;
            let prev = self.syzygy(t);
            let fail = |what: &str| Err(Error::Internal(format!("resolution step {t}: {what}")));
            if !c.cover_map.is_homomorphism() || !c.kernel_inclusion.is_homomorphism() {
                return fail("map is not a homomorphism");
            }
            if !c.cover_map.is_surjective() {
                return fail("cover is not surjective");
            }
            if !c.kernel_inclusion.then(&c.cover_map).matrix.is_zero() {
                return fail("kernel does not map to zero");
            }
            if c.kernel_inclusion.rank() != step.projective_dim - prev.dim() {
                return fail("kernel has the wrong dimension");
            }
            let prad = c.projective.radical_subspace();
            if !c.kernel_inclusion.matrix.row_vecs().iter().all(|v| prad.contains(v)) {
                return fail("cover is not minimal");
            }
        }
        Ok(())
    }
}

pub fn resolve(m: &ModuleRep, horizon: usize) -> Resolution {
    let mut steps = Vec::with_capacity(horizon + 1);
    let mut current = m.clone();
    for _ in 0..=horizon {
        let cover = current.projective_cover().clone();
        let next = cover.kernel.clone();
        steps.push(ResolutionStep {
            multiplicities: cover.multiplicities.clone(),
            projective_dim: cover.projective.dim(),
            syzygy: next.clone(),
            cover,
        });
        current = next;
    }
    Resolution {
        base: m.clone(),
        horizon,
        steps,
    }
}

pub fn syzygy(m: &ModuleRep) -> ModuleRep {
    m.syzygy()
}

pub fn nth_syzygy(m: &ModuleRep, n: usize) -> ModuleRep {
    (0..n).fold(m.clone(), |acc, _| acc.syzygy())
}

/// `Ω^{-1} M = D Ω D M` over a self-injective algebra.
pub fn cosyzygy(m: &ModuleRep) -> Result<ModuleRep> {
    if !m.algebra().is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    m.dual().syzygy().dual_over(m.algebra())
}

pub fn nth_cosyzygy(m: &ModuleRep, n: usize) -> Result<ModuleRep> {
    let mut out = m.clone();
    for _ in 0..n {
        out = cosyzygy(&out)?;
    }
    Ok(out)
}

/// `dim Ext^n_A(M, N)`, as `Hom(Ω^n M, N)` modulo the maps that extend to
/// the projective cover of `Ω^{n-1} M`.
pub fn ext_dim(m: &ModuleRep, n: &ModuleRep, degree: usize) -> Result<usize> {
    m.same_algebra(n)?;
    if degree == 0 {
        return Ok(hom_basis(m, n)?.len());
    }
    let prev = nth_syzygy(m, degree - 1);
    let cover = prev.projective_cover();
    let homs = hom_basis(&cover.kernel, n)?.len();
    let restricted: Vec<_> = hom_basis(&cover.projective, n)?
        .iter()
        .map(|g| cover.kernel_inclusion.then(g).matrix.entries().to_vec())
        .collect();
    let size = cover.kernel.dim() * n.dim();
    Ok(homs - Subspace::span(m.field(), size, restricted).dim())
}

/// `dim Hom(Ω^n M, N)` modulo maps factoring through the projective cover
/// of `N`. Agrees with [`ext_dim`] over self-injective algebras.
pub fn stable_hom_dim(m: &ModuleRep, n: &ModuleRep, degree: usize) -> Result<usize> {
    m.same_algebra(n)?;
    let omega = nth_syzygy(m, degree);
    let homs = hom_basis(&omega, n)?.len();
    let cover = n.projective_cover();
    let factoring: Vec<_> = hom_basis(&omega, &cover.projective)?
        .iter()
        .map(|h| h.then(&cover.cover_map).matrix.entries().to_vec())
        .collect();
    Ok(homs - Subspace::span(m.field(), omega.dim() * n.dim(), factoring).dim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum ComplexityVerdict {
    /// Some `P^t` vanishes; the value is the projective dimension.
    FiniteProjDim(usize),
    /// The terms are eventually constant and nonzero.
    BoundedNonzero,
    /// The tail agrees with a polynomial of this degree.
    PolynomialDegree(usize),
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityEstimate {
    pub horizon: usize,
    pub dims: Vec<usize>,
    pub verdict: ComplexityVerdict,
}

pub const MIN_COMPLEXITY_HORIZON: usize = 8;

/// Reads growth evidence off `dim P^0, ..., dim P^T`.
pub fn complexity_estimate(r: &Resolution) -> Result<ComplexityEstimate> {
    if r.horizon < MIN_COMPLEXITY_HORIZON {
        return Err(Error::InvalidInput(format!(
            "complexity needs a horizon of at least {MIN_COMPLEXITY_HORIZON}"
        )));
    }
    let dims = r.dims();
    let verdict = classify_dims(&dims, r.horizon);
    Ok(ComplexityEstimate {
        horizon: r.horizon,
        dims,
        verdict,
    })
}

fn classify_dims(dims: &[usize], horizon: usize) -> ComplexityVerdict {
    if let Some(t) = dims.iter().position(|&d| d == 0) {
        return ComplexityVerdict::FiniteProjDim(t.saturating_sub(1));
    }
    let last = *dims.last().expect("nonempty");
    let t0 = dims.iter().rposition(|&d| d != last).map_or(0, |i| i + 1);
    if 2 * t0 < horizon {
        return ComplexityVerdict::BoundedNonzero;
    }
    let mut diff: Vec<i128> = dims[horizon / 2..].iter().map(|&d| d as i128).collect();
    let mut g = 0;
    while diff.len() >= 2 {
        let next: Vec<i128> = diff.windows(2).map(|w| w[1] - w[0]).collect();
        if next.iter().all(|&x| x == 0) && diff.iter().any(|&x| x != 0) {
            return ComplexityVerdict::PolynomialDegree(g);
        }
        diff = next;
        g += 1;
    }
    ComplexityVerdict::Inconclusive
}

#[derive(Clone, Debug)]
pub enum PeriodOutcome {
    /// `Ω^j M ≅ Ω^i M` with `period = i - j`; `witness` is that
    /// isomorphism and `base_witness` an isomorphism `M -> Ω^period M`.
    Periodic {
        period: usize,
        i: usize,
        j: usize,
        witness: ModuleMap,
        base_witness: ModuleMap,
    },
    Projective,
    /// No repetition among `Ω^0 M, ..., Ω^T M`; `distinct` counts them.
    HorizonExhausted { distinct: usize },
}

#[derive(Clone, Debug)]
pub struct PeriodReport {
    pub outcome: PeriodOutcome,
    /// Dimensions of the syzygies examined, starting with the stripped `M`.
    pub syzygy_dims: Vec<usize>,
}

impl PeriodReport {
    pub fn period(&self) -> Option<usize> {
        match self.outcome {
            PeriodOutcome::Periodic { period, .. } => Some(period),
            _ => None,
        }
    }
}

/// Looks for `Ω^j M ≅ Ω^i M` with `0 <= j < i <= T`, comparing only
/// syzygies of equal dimension.
pub fn detect_period(m: &ModuleRep, horizon: usize, seed: u64) -> Result<PeriodReport> {
    if !m.algebra().is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    let core = strip_projectives(m)?.core;
    let mut syz = vec![core.clone()];
    let mut dims = vec![core.dim()];
    if core.dim() == 0 {
        return Ok(PeriodReport {
            outcome: PeriodOutcome::Projective,
            syzygy_dims: dims,
        });
    }
    for i in 1..=horizon {
        let next = syz[i - 1].syzygy();
        dims.push(next.dim());
        if next.dim() == 0 {
            return Ok(PeriodReport {
                outcome: PeriodOutcome::Projective,
                syzygy_dims: dims,
            });
        }
        for j in 0..i {
            if syz[j].dim() != next.dim() {
                continue;
            }
            if let Some(witness) = is_isomorphic_seeded(&syz[j], &next, seed)? {
                let period = i - j;
                let base_witness = if j == 0 {
                    witness.clone()
                } else {
                    is_isomorphic_seeded(&core, &syz[period], seed)?.ok_or_else(|| {
                        Error::Internal(format!(
                            "Ω^{j} ≅ Ω^{i} but the module is not isomorphic to Ω^{period}"
                        ))
                    })?
                };
                return Ok(PeriodReport {
                    outcome: PeriodOutcome::Periodic {
                        period,
                        i,
                        j,
                        witness,
                        base_witness,
                    },
                    syzygy_dims: dims,
                });
            }
        }
        syz.push(next);
    }
    Ok(PeriodReport {
        outcome: PeriodOutcome::HorizonExhausted { distinct: syz.len() },
        syzygy_dims: dims,
    })
}
