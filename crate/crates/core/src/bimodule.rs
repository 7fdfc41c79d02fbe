//! Bimodules as right modules over `A^op ⊗ B`, twisted bimodules and
//! tensor products.
//!
//! An `(A, B)`-bimodule `X` is stored as a right module over `A^op ⊗ B`
//! where the basis element `a_i ⊗ b_j` (index `i * dim B + j`) acts by
//! `x -> a_i x b_j`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homological::{nth_cosyzygy, nth_syzygy};
use crate::matrix::{is_zero_vec, Matrix, Subspace};
use crate::module::{hom_basis, combine_maps, is_isomorphic, is_isomorphic_seeded, ModuleMap, ModuleRep};
use crate::scalar::Scalar;
use crate::search::{self, DEFAULT_SEED};

/// An algebra automorphism; row `i` of the matrix is `σ(e_i)`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    algebra: Arc<Algebra>,
    matrix: Matrix,
}

impl Automorphism {
    pub fn new(algebra: &Arc<Algebra>, matrix: Matrix) -> Result<Automorphism> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::InvalidAutomorphism(format!("matrix must be {n}x{n}")));
        }
        if matrix.field() != algebra.field() {
            return Err(Error::InvalidAutomorphism("matrix over the wrong field".into()));
        }
        if !matrix.is_invertible() {
            return Err(Error::InvalidAutomorphism("matrix is singular".into()));
        }
        let s = Automorphism {
            algebra: algebra.clone(),
            matrix,
        };
        if s.apply(algebra.unit()) != algebra.unit() {
            return Err(Error::InvalidAutomorphism("unit is not fixed".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = s.apply(algebra.product(i, j));
                let rhs = algebra.mul(s.matrix.row(i), s.matrix.row(j));
                if lhs != rhs {
                    return Err(Error::InvalidAutomorphism(format!(
                        "not multiplicative on ({}, {})",
                        algebra.labels()[i],
                        algebra.labels()[j]
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn identity(algebra: &Arc<Algebra>) -> Automorphism {
        Automorphism {
            algebra: algebra.clone(),
            matrix: Matrix::identity(algebra.field(), algebra.dim()),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.vec_mul(v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            algebra: self.algebra.clone(),
            matrix: other.matrix.mul(&self.matrix),
        }
    }

    pub fn pow(&self, e: u64) -> Automorphism {
        Automorphism {
            algebra: self.algebra.clone(),
            matrix: self.matrix.pow(e),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            algebra: self.algebra.clone(),
            matrix: self.matrix.inverse().expect("automorphisms are invertible"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(self.algebra.field(), self.algebra.dim())
    }

    /// Images of the basis, as strings like `x -> -x`.
    pub fn describe(&self) -> Vec<String> {
        let a = &self.algebra;
        (0..a.dim())
            .map(|i| format!("{} -> {}", a.labels()[i], a.format_element(self.matrix.row(i))))
            .collect()
    }
}

/// `A^op ⊗ B`; for `A = B` this is the cached enveloping algebra.
pub fn bimodule_algebra(left: &Arc<Algebra>, right: &Arc<Algebra>) -> Arc<Algebra> {
    if left.same_structure(right) {
        right.enveloping()
    } else {
        Algebra::tensor(&left.opposite(), right)
    }
}

fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut v = Vec::with_capacity(a.len() * b.len());
    for s in a {
        for t in b {
            v.push(s * t);
        }
    }
    v
}

#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    carrier: ModuleRep,
}

impl Bimodule {
    pub fn new(left: &Arc<Algebra>, right: &Arc<Algebra>, carrier: ModuleRep) -> Result<Bimodule> {
        let env = bimodule_algebra(left, right);
        if !carrier.algebra().same_structure(&env) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Bimodule {
            left: left.clone(),
            right: right.clone(),
            carrier,
        })
    }

    /// `₁A₁`: `A` with `a_i ⊗ a_j` acting by `x -> a_i x a_j`.
    pub fn regular(algebra: &Arc<Algebra>) -> Bimodule {
        Bimodule::twisted(&Automorphism::identity(algebra))
    }

    /// `₁A_σ`: `a · x · b = a x σ(b)`.
    pub fn twisted(sigma: &Automorphism) -> Bimodule {
        let a = sigma.algebra();
        let n = a.dim();
        let env = a.enveloping();
        let lefts = a.left_mult();
        let rights: Vec<Matrix> = (0..n).map(|j| a.right_mult_by(sigma.matrix.row(j))).collect();
        let mut action = Vec::with_capacity(n * n);
        for l in lefts {
            for r in &rights {
                action.push(l.mul(r));
            }
        }
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            carrier: ModuleRep::from_parts(env, n, Arc::new(action)),
        }
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn carrier(&self) -> &ModuleRep {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Matrix of `x -> a x` for `a` in the left algebra.
    pub fn left_action(&self, a: &[Scalar]) -> Matrix {
        self.carrier.matrix_of(&kron_vec(a, self.right.unit()))
    }

    /// Matrix of `x -> x b` for `b` in the right algebra.
    pub fn right_action(&self, b: &[Scalar]) -> Matrix {
        self.carrier.matrix_of(&kron_vec(self.left.unit(), b))
    }

    /// `_A X` as a right module over `A^op`.
    pub fn left_restriction(&self) -> ModuleRep {
        let op = self.left.opposite();
        let images: Vec<Vec<Scalar>> = (0..self.left.dim())
            .map(|i| kron_vec(&self.left.basis_vector(i), self.right.unit()))
            .collect();
        self.carrier.pullback(&op, &images)
    }

    /// `X_B`.
    pub fn right_restriction(&self) -> ModuleRep {
        let images: Vec<Vec<Scalar>> = (0..self.right.dim())
            .map(|j| kron_vec(self.left.unit(), &self.right.basis_vector(j)))
            .collect();
        self.carrier.pullback(&self.right, &images)
    }

    pub fn is_left_right_projective(&self) -> bool {
        self.left_restriction().is_projective() && self.right_restriction().is_projective()
    }
}

/// `Ω^n_{A^e}(A)`.
pub fn bimodule_syzygy(algebra: &Arc<Algebra>, n: usize) -> Result<Bimodule> {
    if n == 0 {
        return Err(Error::InvalidInput("bimodule syzygy needs n >= 1".into()));
    }
    if !algebra.is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    let carrier = nth_syzygy(Bimodule::regular(algebra).carrier(), n);
    let b = Bimodule {
        left: algebra.clone(),
        right: algebra.clone(),
        carrier,
    };
    if !b.is_left_right_projective() {
        return Err(Error::Internal("bimodule syzygy is not left-right projective".into()));
    }
    Ok(b)
}

/// `Ω^{-n}_{A^e}(A)`.
pub fn bimodule_cosyzygy(algebra: &Arc<Algebra>, n: usize) -> Result<Bimodule> {
    if !algebra.is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    let carrier = nth_cosyzygy(Bimodule::regular(algebra).carrier(), n)?;
    Ok(Bimodule {
        left: algebra.clone(),
        right: algebra.clone(),
        carrier,
    })
}

/// True when `₁A_σ ≅ ₁A₁`, i.e. `σ` is inner.
pub fn is_inner(sigma: &Automorphism) -> Result<bool> {
    let a = sigma.algebra();
    let twisted = Bimodule::twisted(sigma);
    let regular = Bimodule::regular(a);
    Ok(is_isomorphic(twisted.carrier(), regular.carrier())?.is_some())
}

/// Least `m <= bound` with `σ^m` inner.
pub fn out_order(sigma: &Automorphism, bound: usize) -> Result<Option<usize>> {
    if bound == 0 {
        return Err(Error::InvalidInput("bound must be at least 1".into()));
    }
    let mut power = sigma.clone();
    for m in 1..=bound {
        if is_inner(&power)? {
            return Ok(Some(m));
        }
        power = power.compose(sigma);
    }
    Ok(None)
}

/// Recognizes an `(A, A)`-bimodule of dimension `dim A` as `₁A_σ`.
///
/// An isomorphism `ψ: A -> M` of left modules turns the right action into
/// an automorphism: `ψ(1) b = ψ(σ(b))`, and then `ψ` itself is a bimodule
/// isomorphism `₁A_σ -> M`.
pub fn twist_recognize(m: &Bimodule) -> Result<Option<Automorphism>> {
    let a = m.left_algebra().clone();
    if !a.same_structure(m.right_algebra()) || m.dim() != a.dim() {
        return Ok(None);
    }
    if is_isomorphic(&ModuleRep::regular(&a), &m.right_restriction())?.is_none() {
        return Ok(None);
    }
    let op = a.opposite();
    let Some(psi) = is_isomorphic(&ModuleRep::regular(&op), &m.left_restriction())? else {
        return Ok(None);
    };
    let f = a.field();
    let psi_inv = psi.matrix.inverse().expect("isomorphism");
    let u = psi.matrix.vec_mul(a.unit());
    let rows = (0..a.dim())
        .map(|j| psi_inv.vec_mul(&m.right_action(&a.basis_vector(j)).vec_mul(&u)))
        .collect();
    let sigma = match Automorphism::new(&a, Matrix::from_rows(f, a.dim(), rows)?) {
        Ok(s) => s,
        Err(Error::InvalidAutomorphism(why)) => {
            log::debug!("recovered twist is not an automorphism: {why}");
            return Ok(None);
        }
        Err(e) => return Err(e),
    };
    let witness = ModuleMap::from_parts(
        Bimodule::twisted(&sigma).carrier().clone(),
        m.carrier().clone(),
        psi.matrix.clone(),
    );
    if !witness.is_homomorphism() {
        return Err(Error::Internal("twisted bimodule does not match".into()));
    }
    Ok(Some(sigma))
}

/// Quotient of `k^{da} ⊗ k^{db}` (index `i * db + j`) by `relations`,
/// with classes indexed by the free columns. Returns the relation span and
/// the free columns.
fn tensor_relations(
    field: crate::scalar::Field,
    da: usize,
    db: usize,
    gens: &[(Matrix, Matrix)],
) -> (Subspace, Vec<usize>) {
    // for each generator g: (u g) ⊗ w - u ⊗ (g w), on basis vectors u, w
    let total = da * db;
    let mut rels = Vec::new();
    for (right_of_a, left_of_b) in gens {
        for u in 0..da {
            for w in 0..db {
                let mut v = vec![field.zero(); total];
                for (u2, c) in right_of_a.row(u).iter().enumerate() {
                    if !c.is_zero() {
                        v[u2 * db + w] = &v[u2 * db + w] + c;
                    }
                }
                for (w2, c) in left_of_b.row(w).iter().enumerate() {
                    if !c.is_zero() {
                        v[u * db + w2] = &v[u * db + w2] - c;
                    }
                }
                if !is_zero_vec(&v) {
                    rels.push(v);
                }
            }
        }
    }
    let sub = Subspace::span(field, total, rels);
    let free = sub.free_columns();
    (sub, free)
}

/// Matrix of `x -> x (I ⊗ R)` or `x -> x (L ⊗ I)` on the quotient.
fn quotient_action(
    sub: &Subspace,
    free: &[usize],
    db: usize,
    on_first: Option<&Matrix>,
    on_second: Option<&Matrix>,
) -> Matrix {
    let f = sub.field();
    let total = sub.ambient();
    let rows = free
        .iter()
        .map(|&c| {
            let (u, w) = (c / db, c % db);
            let mut v = vec![f.zero(); total];
            match (on_first, on_second) {
                (Some(l), None) => {
                    for (u2, x) in l.row(u).iter().enumerate() {
                        if !x.is_zero() {
                            v[u2 * db + w] = x.clone();
                        }
                    }
                }
                (None, Some(r)) => {
                    for (w2, x) in r.row(w).iter().enumerate() {
                        if !x.is_zero() {
                            v[u * db + w2] = x.clone();
                        }
                    }
                }
                _ => unreachable!("exactly one factor acts"),
            }
            let red = sub.reduce(&v);
            free.iter().map(|&j| red[j].clone()).collect()
        })
        .collect();
    Matrix::from_rows(f, free.len(), rows).expect("square")
}

/// `M ⊗_A X` for a right `A`-module `M` and an `(A, B)`-bimodule `X`.
pub fn tensor_over(m: &ModuleRep, x: &Bimodule) -> Result<ModuleRep> {
    let a = x.left_algebra();
    if !m.algebra().same_structure(a) {
        return Err(Error::AlgebraMismatch);
    }
    let gens: Vec<(Matrix, Matrix)> = a
        .generators()
        .iter()
        .map(|g| (m.matrix_of(g), x.left_action(g)))
        .collect();
    let (sub, free) = tensor_relations(m.field(), m.dim(), x.dim(), &gens);
    let b = x.right_algebra();
    let action = (0..b.dim())
        .map(|j| {
            let r = x.right_action(&b.basis_vector(j));
            quotient_action(&sub, &free, x.dim(), None, Some(&r))
        })
        .collect();
    Ok(ModuleRep::from_parts(b.clone(), free.len(), Arc::new(action)))
}

/// `X ⊗_B Y` for an `(A, B)`-bimodule `X` and a `(B, C)`-bimodule `Y`.
pub fn tensor_bimodules(x: &Bimodule, y: &Bimodule) -> Result<Bimodule> {
    let b = x.right_algebra();
    if !b.same_structure(y.left_algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let gens: Vec<(Matrix, Matrix)> = b
        .generators()
        .iter()
        .map(|g| (x.right_action(g), y.left_action(g)))
        .collect();
    let (sub, free) = tensor_relations(x.carrier().field(), x.dim(), y.dim(), &gens);
    let a = x.left_algebra();
    let c = y.right_algebra();
    let lefts: Vec<Matrix> = (0..a.dim())
        .map(|i| {
            let l = x.left_action(&a.basis_vector(i));
            quotient_action(&sub, &free, y.dim(), Some(&l), None)
        })
        .collect();
    let rights: Vec<Matrix> = (0..c.dim())
        .map(|j| {
            let r = y.right_action(&c.basis_vector(j));
            quotient_action(&sub, &free, y.dim(), None, Some(&r))
        })
        .collect();
    let mut action = Vec::with_capacity(a.dim() * c.dim());
    for l in &lefts {
        for r in &rights {
            action.push(l.mul(r));
        }
    }
    let env = bimodule_algebra(a, c);
    Ok(Bimodule {
        left: a.clone(),
        right: c.clone(),
        carrier: ModuleRep::from_parts(env, free.len(), Arc::new(action)),
    })
}

/// A split embedding of `₁A₁` into a bimodule and its complement.
#[derive(Clone, Debug)]
pub struct RegularSplitting {
    pub embedding: ModuleMap,
    pub retraction: ModuleMap,
    pub complement: ModuleRep,
}

/// Finds `ι: ₁A₁ -> T` and `r: T -> ₁A₁` with `ι r = id`, if `₁A₁` is a
/// direct summand of the `(A, A)`-bimodule `T`.
pub fn split_regular_summand(t: &Bimodule, seed: u64) -> Result<Option<RegularSplitting>> {
    let a = t.left_algebra();
    if !a.same_structure(t.right_algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let reg = Bimodule::regular(a);
    let into = hom_basis(reg.carrier(), t.carrier())?;
    let back = hom_basis(t.carrier(), reg.carrier())?;
    if into.is_empty() || back.is_empty() {
        return Ok(None);
    }
    let (h1, h2) = (into.len(), back.len());
    let found = search::find_point(a.field(), h1 + h2, a.dim(), seed, |c| {
        let i = combine_maps(&into, &c[..h1]);
        let r = combine_maps(&back, &c[h1..]);
        let ir = i.mul(&r);
        ir.inverse().map(|inv| (i, r.mul(&inv)))
    })?;
    Ok(found.map(|(i, r)| {
        let retraction = ModuleMap::from_parts(t.carrier().clone(), reg.carrier().clone(), r);
        let complement = retraction.kernel().0;
        RegularSplitting {
            embedding: ModuleMap::from_parts(reg.carrier().clone(), t.carrier().clone(), i),
            retraction,
            complement,
        }
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct Clause {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct StableMoritaReport {
    pub clauses: Vec<Clause>,
}

impl StableMoritaReport {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }
}

/// Checks that `(X, Y)` induce a stable equivalence of Morita type:
/// both are left-right projective, `X ⊗_B Y ≅ A ⊕ P` and
/// `Y ⊗_A X ≅ B ⊕ Q` with `P`, `Q` projective bimodules.
pub fn stable_morita_check(x: &Bimodule, y: &Bimodule) -> Result<StableMoritaReport> {
    stable_morita_check_seeded(x, y, DEFAULT_SEED)
}

pub fn stable_morita_check_seeded(x: &Bimodule, y: &Bimodule, seed: u64) -> Result<StableMoritaReport> {
    if !x.right_algebra().same_structure(y.left_algebra())
        || !y.right_algebra().same_structure(x.left_algebra())
    {
        return Err(Error::AlgebraMismatch);
    }
    let mut clauses = Vec::new();
    for (name, b) in [("X", x), ("Y", y)] {
        let l = b.left_restriction().is_projective();
        let r = b.right_restriction().is_projective();
        clauses.push(Clause {
            name: format!("{name} left-right projective"),
            passed: l && r,
            detail: format!("left projective: {l}, right projective: {r}"),
        });
    }
    for (name, first, second) in [("X⊗Y", x, y), ("Y⊗X", y, x)] {
        let prod = tensor_bimodules(first, second)?;
        match split_regular_summand(&prod, seed)? {
            None => clauses.push(Clause {
                name: format!("{name} has the regular bimodule as a summand"),
                passed: false,
                detail: format!("dim {name} = {}", prod.dim()),
            }),
            Some(split) => {
                clauses.push(Clause {
                    name: format!("{name} has the regular bimodule as a summand"),
                    passed: true,
                    detail: format!("dim {name} = {}", prod.dim()),
                });
                let proj = split.complement.is_projective();
                clauses.push(Clause {
                    name: format!("{name} complement is a projective bimodule"),
                    passed: proj,
                    detail: format!("complement dim {}", split.complement.dim()),
                });
            }
        }
    }
    Ok(StableMoritaReport { clauses })
}

/// `M ≅ N` for bimodules, via their carriers.
pub fn bimodules_isomorphic(m: &Bimodule, n: &Bimodule, seed: u64) -> Result<bool> {
    Ok(is_isomorphic_seeded(m.carrier(), n.carrier(), seed)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::strip_projectives;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::Rationals
    }

    fn kx2() -> Arc<Algebra> {
        fixtures::truncated_polynomial(q(), 2).unwrap()
    }

    fn sigma(a: &Arc<Algebra>, t: i64) -> Automorphism {
        fixtures::kx2_twist(a, &a.field().from_i64(t)).unwrap()
    }

    #[test]
    fn regular_bimodule_basics() {
        let a = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let r = Bimodule::regular(&a);
        r.carrier().validate().unwrap();
        assert_eq!(r.dim(), 4);
        assert!(is_isomorphic(&r.right_restriction(), &ModuleRep::regular(&a)).unwrap().is_some());
        assert_eq!(
            hom_basis(r.carrier(), r.carrier()).unwrap().len(),
            a.center().dim()
        );
    }

    #[test]
    fn automorphism_validation() {
        let a = kx2();
        let f = q();
        let bad = Matrix::from_ints(f, &[vec![1, 1], vec![0, 1]]);
        assert!(matches!(Automorphism::new(&a, bad), Err(Error::InvalidAutomorphism(_))));
        let singular = Matrix::from_ints(f, &[vec![1, 0], vec![0, 0]]);
        assert!(Automorphism::new(&a, singular).is_err());
        assert!(fixtures::kx2_twist(&a, &f.zero()).is_err());
        let s = sigma(&a, 3);
        assert_eq!(s.describe(), vec!["e -> e", "x -> 3*x"]);
        assert_eq!(sigma(&a, -1).describe()[1], "x -> -x");
        assert!(s.compose(&s.inverse()).is_identity());
    }

    #[test]
    fn twisted_bimodules() {
        let a = kx2();
        let id = Bimodule::twisted(&Automorphism::identity(&a));
        assert!(id.carrier().same_action(Bimodule::regular(&a).carrier()));
        let t2 = Bimodule::twisted(&sigma(&a, 2));
        t2.carrier().validate().unwrap();
        // x acting on the right of 1 gives 2x
        let x = a.parse_element("x").unwrap();
        assert_eq!(t2.right_action(&x).vec_mul(a.unit()), a.parse_element("2x").unwrap());
        assert_eq!(t2.left_action(&x).vec_mul(a.unit()), x);
    }

    #[test]
    fn twist_composition() {
        let a = kx2();
        for (s, t) in [(2, 3), (-1, -1), (3, 1)] {
            let (ss, tt) = (sigma(&a, s), sigma(&a, t));
            let lhs = tensor_bimodules(&Bimodule::twisted(&ss), &Bimodule::twisted(&tt)).unwrap();
            let rhs = Bimodule::twisted(&ss.compose(&tt));
            assert_eq!(lhs.dim(), 2);
            assert!(bimodules_isomorphic(&lhs, &rhs, 1).unwrap());
        }
    }

    #[test]
    fn twist_composition_noncommutative() {
        // conjugation-free automorphisms of Λ_2: x -> a x, y -> b y
        let l = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let diag = |s: i64, t: i64| {
            Automorphism::new(
                &l,
                Matrix::from_ints(
                    q(),
                    &[vec![1, 0, 0, 0], vec![0, s, 0, 0], vec![0, 0, t, 0], vec![0, 0, 0, s * t]],
                ),
            )
            .unwrap()
        };
        let (s, t) = (diag(2, 1), diag(1, 3));
        let lhs = tensor_bimodules(&Bimodule::twisted(&s), &Bimodule::twisted(&t)).unwrap();
        assert!(bimodules_isomorphic(&lhs, &Bimodule::twisted(&s.compose(&t)), 1).unwrap());
    }

    #[test]
    fn inner_and_outer() {
        let a = kx2();
        assert!(is_inner(&Automorphism::identity(&a)).unwrap());
        assert!(!is_inner(&sigma(&a, 2)).unwrap());
        assert_eq!(out_order(&sigma(&a, -1), 5).unwrap(), Some(2));
        assert_eq!(out_order(&sigma(&a, 2), 10).unwrap(), None);
        assert_eq!(out_order(&Automorphism::identity(&a), 3).unwrap(), Some(1));

        // conjugation by 1 + x in Λ_{-1}: v -> (1+x)^{-1} v (1+x)
        let l = fixtures::quantum_exterior(q(), &q().from_i64(-1)).unwrap();
        let u = l.parse_element("e+x").unwrap();
        let uinv = l.parse_element("e-x").unwrap();
        let rows = (0..4)
            .map(|i| l.mul(&l.mul(&uinv, &l.basis_vector(i)), &u))
            .collect();
        let conj = Automorphism::new(&l, Matrix::from_rows(q(), 4, rows).unwrap()).unwrap();
        assert!(is_inner(&conj).unwrap());
    }

    #[test]
    fn conjugation_is_inner_on_noncommutative_algebra() {
        // in Λ_2, conjugation by 1 + x is not the identity map
        let l = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let u = l.parse_element("e+x").unwrap();
        let uinv = l.parse_element("e-x").unwrap();
        let rows = (0..4)
            .map(|i| l.mul(&l.mul(&uinv, &l.basis_vector(i)), &u))
            .collect();
        let conj = Automorphism::new(&l, Matrix::from_rows(q(), 4, rows).unwrap()).unwrap();
        assert!(!conj.is_identity());
        assert!(is_inner(&conj).unwrap());
        let rec = twist_recognize(&Bimodule::twisted(&conj)).unwrap().unwrap();
        assert!(is_inner(&rec).unwrap());
    }

    #[test]
    fn twist_recognition() {
        let a = kx2();
        let rec = twist_recognize(&Bimodule::regular(&a)).unwrap().unwrap();
        assert!(rec.is_identity());
        let rec = twist_recognize(&Bimodule::twisted(&sigma(&a, 3))).unwrap().unwrap();
        assert_eq!(rec.matrix(), sigma(&a, 3).matrix());
        let omega = bimodule_syzygy(&a, 1).unwrap();
        let rec = twist_recognize(&omega).unwrap().unwrap();
        assert_eq!(rec.matrix(), sigma(&a, -1).matrix());
    }

    /// Oracle: Ω_{A^e}(A) is the kernel of multiplication A ⊗ A -> A,
    /// spanned by x⊗1 - 1⊗x and x⊗x for A = k[x]/(x^2).
    #[test]
    fn bimodule_syzygy_matches_multiplication_kernel() {
        let a = kx2();
        let env = a.enveloping();
        let omega = bimodule_syzygy(&a, 1).unwrap();
        assert_eq!(omega.dim(), 2);
        let free = ModuleRep::regular(&env);
        let gens = vec![
            env.parse_element("x⊗e - e⊗x").unwrap(),
            env.parse_element("x⊗x").unwrap(),
        ];
        let (kernel, _) = free.submodule_span(&gens).unwrap();
        assert_eq!(kernel.dim(), 2);
        assert!(is_isomorphic(&kernel, omega.carrier()).unwrap().is_some());
    }

    #[test]
    fn bimodule_periodicity() {
        let a = kx2();
        let two = bimodule_syzygy(&a, 2).unwrap();
        assert!(bimodules_isomorphic(&two, &Bimodule::regular(&a), 1).unwrap());
        let f2 = Field::Prime(2);
        let a2 = fixtures::truncated_polynomial(f2, 2).unwrap();
        let one = bimodule_syzygy(&a2, 1).unwrap();
        assert!(bimodules_isomorphic(&one, &Bimodule::regular(&a2), 1).unwrap());
    }

    #[test]
    fn tensor_with_twists() {
        let a = kx2();
        let s = ModuleRep::simple(&a, 0).unwrap();
        let reg = ModuleRep::regular(&a);
        for m in [&s, &reg] {
            let t = tensor_over(m, &Bimodule::regular(&a)).unwrap();
            assert!(is_isomorphic(&t, m).unwrap().is_some());
            let sg = sigma(&a, 5);
            let tw = tensor_over(m, &Bimodule::twisted(&sg)).unwrap();
            assert_eq!(tw.dim(), m.dim());
            // twisting the action: v * b acts as v * σ(b)
            let expected = m.pullback(&a, sg.matrix().row_vecs().as_slice());
            assert!(is_isomorphic(&tw, &expected).unwrap().is_some());
        }
    }

    #[test]
    fn stable_morita_examples() {
        let a = kx2();
        let r = Bimodule::regular(&a);
        let rep = stable_morita_check(&r, &r).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let s = sigma(&a, 3);
        let rep = stable_morita_check(&Bimodule::twisted(&s), &Bimodule::twisted(&s.inverse())).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let x = bimodule_syzygy(&a, 1).unwrap();
        let y = bimodule_cosyzygy(&a, 1).unwrap();
        let rep = stable_morita_check(&x, &y).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn transport_identity_over_kx3() {
        let a = fixtures::truncated_polynomial(q(), 3).unwrap();
        let omega = bimodule_syzygy(&a, 1).unwrap();
        let s = ModuleRep::simple(&a, 0).unwrap();
        let t = tensor_over(&s, &omega).unwrap();
        let core = strip_projectives(&t).unwrap().core;
        assert!(is_isomorphic(&core, &s.syzygy()).unwrap().is_some());
    }
}
