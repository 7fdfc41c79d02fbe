//! Builders for the standard example algebras and modules.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::bimodule::Automorphism;
use crate::error::{Error, Result};
use crate::module::ModuleRep;
use crate::quiver::{Arrow, QuiverPresentation, RelationTerm};
use crate::scalar::{Field, Scalar};

/// Names accepted by [`by_name`] and the `examples` subcommand.
pub const NAMES: &[&str] = &["liu-schulz", "truncated-poly", "a2", "exterior", "kx2-twist"];

fn arrow(name: &str, source: &str, target: &str) -> Arrow {
    Arrow {
        name: name.into(),
        source: source.into(),
        target: target.into(),
    }
}

fn term(field: Field, path: &[&str], coeff: Scalar) -> RelationTerm {
    debug_assert_eq!(coeff.field(), field);
    RelationTerm {
        path: path.iter().map(|s| s.to_string()).collect(),
        coeff,
    }
}

/// `k<x, y> / (x^2, y^2, xy + q yx)`.
pub fn quantum_exterior_presentation(field: Field, q: &Scalar) -> QuiverPresentation {
    QuiverPresentation::new(
        vec!["e".into()],
        vec![arrow("x", "e", "e"), arrow("y", "e", "e")],
        vec![
            vec![term(field, &["x", "x"], field.one())],
            vec![term(field, &["y", "y"], field.one())],
            vec![
                term(field, &["x", "y"], field.one()),
                term(field, &["y", "x"], q.clone()),
            ],
        ],
        3,
    )
}

/// The four-dimensional quantum exterior algebra with basis `e, x, y, xy`.
/// `q` must be nonzero.
pub fn quantum_exterior(field: Field, q: &Scalar) -> Result<Arc<Algebra>> {
    if q.is_zero() {
        return Err(Error::InvalidInput("q must be nonzero".into()));
    }
    quantum_exterior_presentation(field, q).build(field)
}

/// `k[x] / (x^n)` with basis `e, x, xx, ...`.
pub fn truncated_polynomial(field: Field, n: usize) -> Result<Arc<Algebra>> {
    if n < 1 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    QuiverPresentation::new(vec!["e".into()], vec![arrow("x", "e", "e")], vec![], n).build(field)
}

/// Path algebra of `e1 --a--> e2`.
pub fn a2_hereditary(field: Field) -> Result<Arc<Algebra>> {
    QuiverPresentation::new(
        vec!["e1".into(), "e2".into()],
        vec![arrow("a", "e1", "e2")],
        vec![],
        2,
    )
    .build(field)
}

/// Which side `Λ (x + c y)` is taken on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealSide {
    /// The left ideal `Λ·g`, realized as a right module over `Λ^op`.
    Left,
    /// The right ideal `g·Λ`, a right `Λ`-module.
    Right,
}

/// The cyclic module generated by `x + c y` inside the quantum exterior
/// algebra `lambda` (basis `e, x, y, xy`).
///
/// With `side = Left` the result is a right module over `lambda.opposite()`
/// and satisfies `Ω^i(Λ(x+y)) ≅ Λ(x + q^i y)`; on the right side the
/// exponent changes sign.
pub fn quantum_cyclic_module(lambda: &Arc<Algebra>, c: &Scalar, side: IdealSide) -> Result<ModuleRep> {
    let gen = lambda.parse_element("x")?;
    let mut g = gen;
    let y = lambda.parse_element("y")?;
    for (a, b) in g.iter_mut().zip(&y) {
        *a = &*a + &(c * b);
    }
    match side {
        IdealSide::Right => Ok(ModuleRep::regular(lambda).submodule_span(&[g])?.0),
        IdealSide::Left => Ok(ModuleRep::regular(&lambda.opposite()).submodule_span(&[g])?.0),
    }
}

/// `σ_t : x ↦ t x` on `k[x]/(x^2)`.
pub fn kx2_twist(algebra: &Arc<Algebra>, t: &Scalar) -> Result<Automorphism> {
    if algebra.dim() != 2 || algebra.labels() != ["e", "x"] {
        return Err(Error::InvalidInput("kx2_twist needs k[x]/(x^2) with basis e, x".into()));
    }
    let f = algebra.field();
    let m = crate::matrix::Matrix::from_rows(
        f,
        2,
        vec![vec![f.one(), f.zero()], vec![f.zero(), t.clone()]],
    )?;
    Automorphism::new(algebra, m)
}

/// Looks a fixture algebra up by name; `q`, `n` parameterize the quantum
/// exterior and truncated polynomial families.
pub fn by_name(name: &str, field: Field, q: &Scalar, n: usize) -> Result<Arc<Algebra>> {
    match name {
        "liu-schulz" => quantum_exterior(field, q),
        "truncated-poly" => truncated_polynomial(field, n),
        "a2" => a2_hereditary(field),
        "exterior" => quantum_exterior(field, &field.one()),
        "kx2-twist" => truncated_polynomial(field, 2),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}
