//! Right modules given by action matrices, and their homomorphisms.
//!
//! Vectors are rows and an algebra element `a` acts by `v -> v * X_a`.
//! A homomorphism `M -> N` is a `dim M x dim N` matrix `F` with
//! `X^M_a F = F X^N_a`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{combine, Algebra};
use crate::error::{Error, Result};
use crate::matrix::{is_zero_vec, zero_vec, Matrix, Subspace};
use crate::scalar::{Field, Scalar};
use crate::search::{self, DEFAULT_SEED};

/// The right ideal `e_i A` with an echelon basis of algebra elements.
#[derive(Clone, Debug)]
pub(crate) struct ProjectivePart {
    /// Basis elements of `e_i A`, as coefficient vectors in `A`.
    pub basis: Subspace,
    pub action: Arc<Vec<Matrix>>,
    /// Socle of `e_i A`, as elements of `A`.
    pub socle: Vec<Vec<Scalar>>,
}

impl ProjectivePart {
    pub(crate) fn all(alg: &Algebra) -> Vec<ProjectivePart> {
        let n = alg.dim();
        let field = alg.field();
        alg.idempotents()
            .iter()
            .map(|e| {
                let basis = Subspace::span(field, n, alg.left_mult_by(e).row_vecs());
                let pivots = basis.pivots().to_vec();
                let action: Vec<Matrix> = alg
                    .right_mult()
                    .iter()
                    .map(|r| {
                        let rows = basis
                            .basis()
                            .iter()
                            .map(|b| {
                                let w = r.vec_mul(b);
                                pivots.iter().map(|&c| w[c].clone()).collect()
                            })
                            .collect();
                        Matrix::from_rows(field, basis.dim(), rows).expect("square")
                    })
                    .collect();
                let rad: Vec<Matrix> = alg
                    .radical()
                    .basis
                    .basis()
                    .iter()
                    .map(|r| combine(field, basis.dim(), &action, r))
                    .collect();
                let socle = common_left_kernel(field, basis.dim(), &rad)
                    .into_iter()
                    .map(|w| basis.basis_matrix().vec_mul(&w))
                    .collect();
                ProjectivePart {
                    basis,
                    action: Arc::new(action),
                    socle,
                }
            })
            .collect()
    }
}

/// Vectors `v` with `v X = 0` for every `X` in `mats`.
fn common_left_kernel(field: Field, dim: usize, mats: &[Matrix]) -> Vec<Vec<Scalar>> {
    if mats.is_empty() {
        return Subspace::full(field, dim).basis().to_vec();
    }
    let mut big = Matrix::zeros(field, dim, 0);
    for m in mats {
        big = hstack(&big, m);
    }
    big.left_nullspace()
}

fn hstack(a: &Matrix, b: &Matrix) -> Matrix {
    let rows = (0..a.rows())
        .map(|r| {
            let mut row = a.row(r).to_vec();
            row.extend_from_slice(b.row(r));
            row
        })
        .collect();
    Matrix::from_rows(a.field(), a.cols() + b.cols(), rows).expect("shape")
}

#[derive(Clone)]
pub struct ModuleRep {
    inner: Arc<Inner>,
}

struct Inner {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Arc<Vec<Matrix>>,
    top: OnceLock<Top>,
    cover: OnceLock<CoverData>,
}

/// Lifts of a basis of `M / M rad`, each inside some `M e_i`.
#[derive(Clone, Debug)]
struct Top {
    generators: Vec<Vec<Scalar>>,
    types: Vec<usize>,
}

/// A minimal projective cover `P -> M` together with its kernel.
#[derive(Clone, Debug)]
pub struct CoverData {
    /// `P = e_{t_1} A ⊕ e_{t_2} A ⊕ ...`, one summand per top generator.
    pub projective: ModuleRep,
    /// `multiplicities[i]` copies of `e_i A`.
    pub multiplicities: Vec<usize>,
    /// Idempotent index of each summand, in order.
    pub summand_types: Vec<usize>,
    pub cover_map: ModuleMap,
    pub kernel: ModuleRep,
    pub kernel_inclusion: ModuleMap,
    /// Rows of `cover_map` forming a basis of `M`, and the inverse of that
    /// square block; gives a linear section of the cover.
    section_rows: Vec<usize>,
    section_inverse: Matrix,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleRep")
            .field("dim", &self.dim())
            .field("algebra_dim", &self.algebra().dim())
            .finish()
    }
}

impl ModuleRep {
    /// Builds a module from one action matrix per basis element of
    /// `algebra`, validating the unit and multiplicativity.
    pub fn new(algebra: &Arc<Algebra>, action: Vec<Matrix>) -> Result<ModuleRep> {
        if action.len() != algebra.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a {}-dimensional algebra",
                action.len(),
                algebra.dim()
            )));
        }
        let d = action.first().map_or(0, |m| m.rows());
        for (i, m) in action.iter().enumerate() {
            if m.rows() != d || m.cols() != d {
                return Err(Error::InvalidModule(format!("action matrix {i} is not {d}x{d}")));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidModule(format!(
                    "action matrix {i} is over {} but the algebra is over {}",
                    m.field(),
                    algebra.field()
                )));
            }
        }
        let m = ModuleRep::from_parts(algebra.clone(), d, Arc::new(action));
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(algebra: Arc<Algebra>, dim: usize, action: Arc<Vec<Matrix>>) -> ModuleRep {
        ModuleRep {
            inner: Arc::new(Inner {
                algebra,
                dim,
                action,
                top: OnceLock::new(),
                cover: OnceLock::new(),
            }),
        }
    }

    /// Checks that the unit acts as the identity and that
    /// `X_g X_j = X_{g e_j}` for every algebra generator `g` and basis
    /// element `e_j`, which implies multiplicativity on all of `A`.
    pub fn validate(&self) -> Result<()> {
        let alg = self.algebra();
        let d = self.dim();
        if self.matrix_of(alg.unit()) != Matrix::identity(alg.field(), d) {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for g in alg.generators() {
            let xg = self.matrix_of(g);
            for j in 0..alg.dim() {
                let lhs = xg.mul(&self.action()[j]);
                let rhs = self.matrix_of(&alg.mul(g, &alg.basis_vector(j)));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative at ({}, {})",
                        alg.format_element(g),
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: &Arc<Algebra>) -> ModuleRep {
        let f = algebra.field();
        ModuleRep::from_parts(
            algebra.clone(),
            0,
            Arc::new(vec![Matrix::zeros(f, 0, 0); algebra.dim()]),
        )
    }

    /// `A_A`.
    pub fn regular(algebra: &Arc<Algebra>) -> ModuleRep {
        ModuleRep::from_parts(algebra.clone(), algebra.dim(), Arc::new(algebra.right_mult().to_vec()))
    }

    /// The one-dimensional simple module on which `e_i` acts as 1.
    pub fn simple(algebra: &Arc<Algebra>, i: usize) -> Result<ModuleRep> {
        check_vertex(algebra, i)?;
        let f = algebra.field();
        let top = algebra.top_projection();
        let action = (0..algebra.dim())
            .map(|k| Matrix::from_rows(f, 1, vec![vec![top.get(k, i).clone()]]).expect("1x1"))
            .collect();
        Ok(ModuleRep::from_parts(algebra.clone(), 1, Arc::new(action)))
    }

    /// The indecomposable projective `e_i A`.
    pub fn indecomposable_projective(algebra: &Arc<Algebra>, i: usize) -> Result<ModuleRep> {
        check_vertex(algebra, i)?;
        let part = &algebra.projective_parts()[i];
        Ok(ModuleRep::from_parts(algebra.clone(), part.basis.dim(), part.action.clone()))
    }

    /// `D(A)`: the dual of the left regular module, a right module via
    /// `(f a)(b) = f(a b)`.
    pub fn dual_regular(algebra: &Arc<Algebra>) -> ModuleRep {
        let n = algebra.dim();
        let f = algebra.field();
        let action = (0..n)
            .map(|j| {
                let rows = (0..n)
                    .map(|i| (0..n).map(|l| algebra.product(j, l)[i].clone()).collect())
                    .collect();
                Matrix::from_rows(f, n, rows).expect("square")
            })
            .collect();
        ModuleRep::from_parts(algebra.clone(), n, Arc::new(action))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner.algebra
    }

    pub fn field(&self) -> Field {
        self.inner.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    /// Action matrices, one per algebra basis element.
    pub fn action(&self) -> &[Matrix] {
        &self.inner.action
    }

    /// Matrix by which the algebra element `a` acts.
    pub fn matrix_of(&self, a: &[Scalar]) -> Matrix {
        let mut nz = a.iter().enumerate().filter(|(_, x)| !x.is_zero());
        if let (Some((i, x)), None) = (nz.next(), nz.next()) {
            if x.is_one() {
                return self.action()[i].clone();
            }
        }
        combine(self.field(), self.dim(), self.action(), a)
    }

    /// `v * a`.
    pub fn act(&self, v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        let mut out = zero_vec(self.field(), self.dim());
        for (k, c) in a.iter().enumerate() {
            if !c.is_zero() {
                let w = self.action()[k].vec_mul(v);
                crate::matrix::axpy(&mut out, c, &w);
            }
        }
        out
    }

    pub fn same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if self.algebra().same_structure(other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Structural equality of the action matrices over the same algebra.
    pub fn same_action(&self, other: &ModuleRep) -> bool {
        self.dim() == other.dim()
            && self.algebra().same_structure(other.algebra())
            && self.action() == other.action()
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.same_algebra(other)?;
        let action = self
            .action()
            .iter()
            .zip(other.action())
            .map(|(a, b)| Matrix::block_diag(a, b))
            .collect();
        Ok(ModuleRep::from_parts(
            self.algebra().clone(),
            self.dim() + other.dim(),
            Arc::new(action),
        ))
    }

    pub fn direct_sum_all(algebra: &Arc<Algebra>, parts: &[ModuleRep]) -> Result<ModuleRep> {
        let mut out = ModuleRep::zero(algebra);
        for p in parts {
            out = out.direct_sum(p)?;
        }
        Ok(out)
    }

    /// The module on a submodule given by an echelon basis.
    pub(crate) fn induced_submodule(&self, sub: &Subspace) -> ModuleRep {
        let b = sub.basis_matrix();
        let piv = sub.pivots();
        let action = self
            .action()
            .iter()
            .map(|x| b.mul(x).select_cols(piv))
            .collect();
        ModuleRep::from_parts(self.algebra().clone(), sub.dim(), Arc::new(action))
    }

    /// The quotient by a submodule. Classes are represented by the unit
    /// vectors of the free columns of `sub`; returns the projection too.
    pub fn quotient(&self, sub: &Subspace) -> Result<(ModuleRep, ModuleMap)> {
        if sub.ambient() != self.dim() || sub.field() != self.field() {
            return Err(Error::Shape("subspace does not live in this module".into()));
        }
        let closed = sub
            .basis()
            .iter()
            .all(|v| self.action().iter().all(|x| sub.contains(&x.vec_mul(v))));
        if !closed {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        Ok(self.induced_quotient(sub))
    }

    fn induced_quotient(&self, sub: &Subspace) -> (ModuleRep, ModuleMap) {
        let free = sub.free_columns();
        let f = self.field();
        let action: Vec<Matrix> = self
            .action()
            .iter()
            .map(|x| {
                let rows = free
                    .iter()
                    .map(|&c| {
                        let w = sub.reduce(x.row(c));
                        free.iter().map(|&j| w[j].clone()).collect()
                    })
                    .collect();
                Matrix::from_rows(f, free.len(), rows).expect("square")
            })
            .collect();
        let quotient = ModuleRep::from_parts(self.algebra().clone(), free.len(), Arc::new(action));
        let rows = (0..self.dim())
            .map(|r| {
                let mut v = zero_vec(f, self.dim());
                v[r] = f.one();
                let w = sub.reduce(&v);
                free.iter().map(|&j| w[j].clone()).collect()
            })
            .collect();
        let proj = Matrix::from_rows(f, free.len(), rows).expect("shape");
        (
            quotient.clone(),
            ModuleMap::from_parts(self.clone(), quotient, proj),
        )
    }

    /// Closes the span of `generators` under the action and returns the
    /// submodule with its inclusion.
    pub fn submodule_span(&self, generators: &[Vec<Scalar>]) -> Result<(ModuleRep, ModuleMap)> {
        for g in generators {
            if g.len() != self.dim() {
                return Err(Error::Shape(format!(
                    "generator of length {} in a {}-dimensional module",
                    g.len(),
                    self.dim()
                )));
            }
        }
        let sub = self.closure(generators.to_vec());
        Ok(self.submodule_from(&sub))
    }

    fn closure(&self, start: Vec<Vec<Scalar>>) -> Subspace {
        let alg = self.algebra().clone();
        let gens: Vec<Matrix> = alg.generators().iter().map(|g| self.matrix_of(g)).collect();
        let mut span = Subspace::zero(self.field(), self.dim());
        let mut queue = Vec::new();
        for v in start {
            if span.extend(&v) {
                queue.push(v);
            }
        }
        while let Some(v) = queue.pop() {
            for x in &gens {
                let w = x.vec_mul(&v);
                if span.extend(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    pub(crate) fn submodule_from(&self, sub: &Subspace) -> (ModuleRep, ModuleMap) {
        let m = self.induced_submodule(sub);
        let inc = ModuleMap::from_parts(m.clone(), self.clone(), sub.basis_matrix());
        (m, inc)
    }

    /// `M rad(A)` as a subspace.
    pub fn radical_subspace(&self) -> Subspace {
        let mut vs = Vec::new();
        for r in self.algebra().radical().basis.basis() {
            vs.extend(self.matrix_of(r).row_vecs());
        }
        Subspace::span(self.field(), self.dim(), vs)
    }

    pub fn radical_submodule(&self) -> (ModuleRep, ModuleMap) {
        self.submodule_from(&self.radical_subspace())
    }

    /// `{v : v rad(A) = 0}`.
    pub fn socle_subspace(&self) -> Subspace {
        let mats: Vec<Matrix> = self
            .algebra()
            .radical()
            .basis
            .basis()
            .iter()
            .map(|r| self.matrix_of(r))
            .collect();
        Subspace::span(self.field(), self.dim(), common_left_kernel(self.field(), self.dim(), &mats))
    }

    pub fn socle_submodule(&self) -> (ModuleRep, ModuleMap) {
        self.submodule_from(&self.socle_subspace())
    }

    fn top(&self) -> &Top {
        self.inner.top.get_or_init(|| {
            let alg = self.algebra();
            let mut span = self.radical_subspace();
            let mut generators = Vec::new();
            let mut types = Vec::new();
            for (i, e) in alg.idempotents().iter().enumerate() {
                let part = Subspace::span(self.field(), self.dim(), self.matrix_of(e).row_vecs());
                for v in part.basis() {
                    if span.extend(v) {
                        generators.push(v.clone());
                        types.push(i);
                    }
                }
            }
            Top { generators, types }
        })
    }

    /// Number of copies of each simple module in `M / M rad`.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.algebra().num_vertices()];
        for &t in &self.top().types {
            m[t] += 1;
        }
        m
    }

    /// Minimal generators of the module, each inside some `M e_i`.
    pub fn top_generators(&self) -> Vec<(usize, Vec<Scalar>)> {
        let top = self.top();
        top.types.iter().copied().zip(top.generators.iter().cloned()).collect()
    }

    /// The minimal projective cover. Computed once per module value.
    pub fn projective_cover(&self) -> &CoverData {
        self.inner.cover.get_or_init(|| self.compute_cover())
    }

    fn compute_cover(&self) -> CoverData {
        let alg = self.algebra().clone();
        let f = self.field();
        let parts = alg.projective_parts();
        let top = self.top();
        let mut order: Vec<usize> = (0..top.types.len()).collect();
        order.sort_by_key(|&j| top.types[j]);
        let summand_types: Vec<usize> = order.iter().map(|&j| top.types[j]).collect();

        let mut pi_rows = Vec::new();
        let mut projective = ModuleRep::zero(&alg);
        for &j in &order {
            let part = &parts[top.types[j]];
            let gen = &top.generators[j];
            for beta in part.basis.basis() {
                pi_rows.push(self.act(gen, beta));
            }
            let pj = ModuleRep::from_parts(alg.clone(), part.basis.dim(), part.action.clone());
            projective = projective.direct_sum(&pj).expect("same algebra");
        }
        let dim_p = projective.dim();
        let pi = Matrix::from_rows(f, self.dim(), pi_rows).expect("shape");

        let kernel_space = Subspace::span(f, dim_p, pi.left_nullspace());
        let (kernel, kernel_inclusion) = projective.submodule_from(&kernel_space);

        let mut span = Subspace::zero(f, self.dim());
        let mut section_rows = Vec::new();
        for r in 0..dim_p {
            if span.extend(pi.row(r)) {
                section_rows.push(r);
            }
        }
        let section_inverse = pi
            .select_rows(&section_rows)
            .inverse()
            .expect("cover map is surjective");

        let mut multiplicities = vec![0; alg.num_vertices()];
        for &t in &summand_types {
            multiplicities[t] += 1;
        }
        CoverData {
            cover_map: ModuleMap::from_parts(projective.clone(), self.clone(), pi),
            projective,
            multiplicities,
            summand_types,
            kernel,
            kernel_inclusion,
            section_rows,
            section_inverse,
        }
    }

    pub fn is_projective(&self) -> bool {
        self.projective_cover().kernel.dim() == 0
    }

    /// `Ω(M)`, the kernel of the projective cover.
    pub fn syzygy(&self) -> ModuleRep {
        self.projective_cover().kernel.clone()
    }

    /// `D(M) = Hom_k(M, k)` as a right module over the opposite algebra.
    pub fn dual(&self) -> ModuleRep {
        let target = self.algebra().opposite();
        self.dual_into(target)
    }

    /// `D(M)` over a given algebra, which must be structurally the
    /// opposite of this module's algebra.
    pub fn dual_over(&self, target: &Arc<Algebra>) -> Result<ModuleRep> {
        if !target.same_structure(&self.algebra().opposite()) {
            return Err(Error::AlgebraMismatch);
        }
        Ok(self.dual_into(target.clone()))
    }

    fn dual_into(&self, target: Arc<Algebra>) -> ModuleRep {
        let action = self.action().iter().map(Matrix::transpose).collect();
        ModuleRep::from_parts(target, self.dim(), Arc::new(action))
    }

    /// The same module after the change of basis `g`; returns the new
    /// module and the isomorphism `self -> new` given by `g`.
    pub fn change_basis(&self, g: &Matrix) -> Result<(ModuleRep, ModuleMap)> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::Shape("basis change must be square of module size".into()));
        }
        let inv = g
            .inverse()
            .ok_or_else(|| Error::InvalidInput("basis change is singular".into()))?;
        let action = self.action().iter().map(|x| inv.mul(x).mul(g)).collect();
        let m = ModuleRep::from_parts(self.algebra().clone(), self.dim(), Arc::new(action));
        Ok((m.clone(), ModuleMap::from_parts(self.clone(), m, g.clone())))
    }

    /// Restriction along an algebra map `B -> A` given by the images of the
    /// basis of `B` (as elements of this module's algebra).
    pub(crate) fn pullback(&self, algebra: &Arc<Algebra>, images: &[Vec<Scalar>]) -> ModuleRep {
        let action = images.iter().map(|a| self.matrix_of(a)).collect();
        ModuleRep::from_parts(algebra.clone(), self.dim(), Arc::new(action))
    }
}

fn check_vertex(algebra: &Algebra, i: usize) -> Result<()> {
    if i >= algebra.num_vertices() {
        return Err(Error::InvalidInput(format!(
            "vertex {i} out of range: the algebra has {} idempotents",
            algebra.num_vertices()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: ModuleRep,
    pub target: ModuleRep,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Validates shape and the intertwining property on algebra generators.
    pub fn new(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> Result<ModuleMap> {
        source.same_algebra(&target)?;
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(Error::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let map = ModuleMap::from_parts(source, target, matrix);
        if !map.is_homomorphism() {
            return Err(Error::InvalidInput("matrix does not intertwine the actions".into()));
        }
        Ok(map)
    }

    pub(crate) fn from_parts(source: ModuleRep, target: ModuleRep, matrix: Matrix) -> ModuleMap {
        ModuleMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(m: &ModuleRep) -> ModuleMap {
        ModuleMap::from_parts(m.clone(), m.clone(), Matrix::identity(m.field(), m.dim()))
    }

    pub fn is_homomorphism(&self) -> bool {
        let alg = self.source.algebra();
        alg.generators().iter().all(|g| {
            self.source.matrix_of(g).mul(&self.matrix) == self.matrix.mul(&self.target.matrix_of(g))
        })
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::from_parts(
            self.source.clone(),
            other.target.clone(),
            self.matrix.mul(&other.matrix),
        )
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// The kernel as a submodule of the source.
    pub fn kernel(&self) -> (ModuleRep, ModuleMap) {
        let f = self.source.field();
        let sub = Subspace::span(f, self.source.dim(), self.matrix.left_nullspace());
        self.source.submodule_from(&sub)
    }
}

/// Basis of `Hom_A(M, N)`.
///
/// Solved through a presentation of `M`: a homomorphism is determined by
/// the images of the top generators `m_j ∈ M e_{t_j}`, which may be any
/// `n_j ∈ N e_{t_j}` killing the relations, and it is enough to check the
/// relations that generate the kernel of the cover.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ModuleMap>> {
    m.same_algebra(n)?;
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(Vec::new());
    }
    let f = m.field();
    let alg = m.algebra();
    let parts = alg.projective_parts();
    let cover = m.projective_cover();
    let types = &cover.summand_types;

    // offsets of each summand in P and bases of N e_t for each summand
    let mut offsets = Vec::with_capacity(types.len());
    let mut off = 0;
    for &t in types {
        offsets.push(off);
        off += parts[t].basis.dim();
    }
    let targets: Vec<Subspace> = alg
        .idempotents()
        .iter()
        .map(|e| Subspace::span(f, n.dim(), n.matrix_of(e).row_vecs()))
        .collect();
    let unknown_offsets: Vec<usize> = types
        .iter()
        .scan(0, |acc, &t| {
            let o = *acc;
            *acc += targets[t].dim();
            Some(o)
        })
        .collect();
    let unknowns: usize = types.iter().map(|&t| targets[t].dim()).sum();
    if unknowns == 0 {
        return Ok(Vec::new());
    }

    // element of A given by the block-j part of a vector in P
    let block_element = |v: &[Scalar], j: usize| -> Vec<Scalar> {
        let part = &parts[types[j]];
        let coeffs = &v[offsets[j]..offsets[j] + part.basis.dim()];
        part.basis.basis_matrix().vec_mul(coeffs)
    };

    let kernel_gens: Vec<Vec<Scalar>> = cover
        .kernel
        .top_generators()
        .into_iter()
        .map(|(_, g)| cover.kernel_inclusion.matrix.vec_mul(&g))
        .collect();
    let mut columns: Vec<Matrix> = Vec::new();
    for k in &kernel_gens {
        let mut c = Matrix::zeros(f, unknowns, n.dim());
        for (j, &t) in types.iter().enumerate() {
            let a = block_element(k, j);
            if is_zero_vec(&a) {
                continue;
            }
            let xa = n.matrix_of(&a);
            for (r, b) in targets[t].basis().iter().enumerate() {
                let w = xa.vec_mul(b);
                for (col, x) in w.into_iter().enumerate() {
                    c.set(unknown_offsets[j] + r, col, x);
                }
            }
        }
        columns.push(c);
    }
    let solutions = if columns.is_empty() {
        Subspace::full(f, unknowns).basis().to_vec()
    } else {
        let mut big = Matrix::zeros(f, unknowns, 0);
        for c in &columns {
            big = hstack(&big, c);
        }
        big.left_nullspace()
    };

    // F = section_inverse * G restricted to the section rows
    let mut row_owner = Vec::with_capacity(cover.section_rows.len());
    for &r in &cover.section_rows {
        let j = offsets.partition_point(|&o| o <= r) - 1;
        row_owner.push((j, r - offsets[j]));
    }
    let mut maps = Vec::with_capacity(solutions.len());
    for w in solutions {
        let images: Vec<Vec<Scalar>> = types
            .iter()
            .enumerate()
            .map(|(j, &t)| {
                let coeffs = &w[unknown_offsets[j]..unknown_offsets[j] + targets[t].dim()];
                targets[t].basis_matrix().vec_mul(coeffs)
            })
            .collect();
        let g_rows: Vec<Vec<Scalar>> = row_owner
            .iter()
            .map(|&(j, local)| {
                let beta = &parts[types[j]].basis.basis()[local];
                n.act(&images[j], beta)
            })
            .collect();
        let g = Matrix::from_rows(f, n.dim(), g_rows).expect("shape");
        maps.push(ModuleMap::from_parts(
            m.clone(),
            n.clone(),
            cover.section_inverse.mul(&g),
        ));
    }
    Ok(maps)
}

pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// `sum_i c_i F_i`.
pub fn combine_maps(maps: &[ModuleMap], coeffs: &[Scalar]) -> Matrix {
    let first = &maps[0];
    let mut out = Matrix::zeros(first.source.field(), first.matrix.rows(), first.matrix.cols());
    for (m, c) in maps.iter().zip(coeffs) {
        out.add_scaled(c, &m.matrix);
    }
    out
}

/// Finds an isomorphism `M -> N` or proves there is none.
pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<Option<ModuleMap>> {
    is_isomorphic_seeded(m, n, DEFAULT_SEED)
}

pub fn is_isomorphic_seeded(m: &ModuleRep, n: &ModuleRep, seed: u64) -> Result<Option<ModuleMap>> {
    m.same_algebra(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    let d = m.dim();
    if d == 0 {
        return Ok(Some(ModuleMap::from_parts(
            m.clone(),
            n.clone(),
            Matrix::zeros(m.field(), 0, 0),
        )));
    }
    if m.top_multiplicities() != n.top_multiplicities()
        || m.socle_subspace().dim() != n.socle_subspace().dim()
    {
        return Ok(None);
    }
    let hom = hom_basis(m, n)?;
    if hom.is_empty() {
        return Ok(None);
    }
    let h = hom.len();
    if hom_dim(m, m)? != h || hom_dim(n, n)? != h || hom_dim(n, m)? != h {
        return Ok(None);
    }
    // every combination is singular if the maps share a kernel vector or
    // their images miss a common direction
    let f = m.field();
    let mut wide = Matrix::zeros(f, d, 0);
    let mut images = Vec::new();
    for map in &hom {
        wide = hstack(&wide, &map.matrix);
        images.extend(map.matrix.row_vecs());
    }
    if !wide.left_nullspace().is_empty() || Subspace::span(f, d, images).dim() < d {
        return Ok(None);
    }
    let found = search::find_point(f, h, d, seed, |c| {
        let mat = combine_maps(&hom, c);
        mat.is_invertible().then_some(mat)
    })?;
    Ok(found.map(|mat| ModuleMap::from_parts(m.clone(), n.clone(), mat)))
}

/// Result of splitting off projective summands.
#[derive(Clone, Debug)]
pub struct Stripped {
    pub core: ModuleRep,
    /// Number of copies of each `e_i A` removed.
    pub multiplicities: Vec<usize>,
    /// Inclusion of the core as a direct summand of the original module.
    pub core_inclusion: ModuleMap,
}

/// Splits off projective direct summands over a self-injective algebra.
///
/// A map `e_i A -> M` is injective exactly when it is nonzero on the
/// simple socle of `e_i A`, so a summand exists iff some `v ∈ M e_i` has
/// `v s_i ≠ 0` for the socle element `s_i`. Injective modules split off;
/// the retraction is found by solving a linear system on `Hom(M, e_i A)`.
pub fn strip_projectives(m: &ModuleRep) -> Result<Stripped> {
    let alg = m.algebra().clone();
    if !alg.is_self_injective() {
        return Err(Error::NotSelfInjective);
    }
    let parts = alg.projective_parts();
    let mut multiplicities = vec![0; alg.num_vertices()];
    let mut core = m.clone();
    let mut inclusion = ModuleMap::identity(m);
    'outer: loop {
        for (i, part) in parts.iter().enumerate() {
            let Some(v) = injective_generator(&core, i, part) else {
                continue;
            };
            let p = ModuleRep::indecomposable_projective(&alg, i)?;
            let rows = part.basis.basis().iter().map(|b| core.act(&v, b)).collect();
            let embed = ModuleMap::from_parts(
                p.clone(),
                core.clone(),
                Matrix::from_rows(core.field(), core.dim(), rows).expect("shape"),
            );
            let retraction = find_retraction(&embed)?;
            let (complement, inc) = retraction.kernel();
            inclusion = inc.then(&inclusion);
            core = complement;
            multiplicities[i] += 1;
            continue 'outer;
        }
        break;
    }
    Ok(Stripped {
        core,
        multiplicities,
        core_inclusion: inclusion,
    })
}

/// A vector `v ∈ M e_i` whose map `e_i A -> M` is injective.
fn injective_generator(m: &ModuleRep, i: usize, part: &ProjectivePart) -> Option<Vec<Scalar>> {
    if m.dim() == 0 || part.socle.len() != 1 {
        return None;
    }
    let alg = m.algebra();
    let s = m.matrix_of(&part.socle[0]);
    let ei = Subspace::span(m.field(), m.dim(), m.matrix_of(&alg.idempotents()[i]).row_vecs());
    ei.basis()
        .iter()
        .find(|v| !is_zero_vec(&s.vec_mul(v)))
        .cloned()
}

/// For an injective `ι: P -> M` with `P` injective, some `r: M -> P` has
/// `ι r = id`.
pub(crate) fn find_retraction(embed: &ModuleMap) -> Result<ModuleMap> {
    let p = &embed.source;
    let m = &embed.target;
    let f = p.field();
    let homs = hom_basis(m, p)?;
    let dp = p.dim();
    // unknown c: sum_k c_k (ι r_k) = I
    let cols: Vec<Matrix> = homs.iter().map(|r| embed.matrix.mul(&r.matrix)).collect();
    let rows: Vec<Vec<Scalar>> = (0..dp * dp)
        .map(|e| cols.iter().map(|c| c.entries()[e].clone()).collect())
        .collect();
    let system = Matrix::from_rows(f, homs.len(), rows)?;
    let target = Matrix::identity(f, dp).entries().to_vec();
    let sol = system.solve(&target);
    let c = sol
        .particular
        .ok_or_else(|| Error::Internal("projective summand does not split".into()))?;
    Ok(ModuleMap::from_parts(m.clone(), p.clone(), combine_maps(&homs, &c)))
}
