//! Finite-dimensional basic algebras given by structure constants.
//!
//! An [`Algebra`] is always validated when built: associativity, the unit
//! law, the idempotent family and basicness are checked exactly. The
//! Jacobson radical is computed at construction because basicness depends
//! on it.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::matrix::{axpy, is_zero_vec, unit_vec, zero_vec, Matrix, Subspace};
use crate::quiver::QuiverPresentation;
use crate::scalar::{Field, Scalar};

/// The radical of an algebra and its powers `rad^1, rad^2, ...` down to zero.
#[derive(Clone, Debug)]
pub struct RadicalData {
    pub basis: Subspace,
    /// `powers[k]` is `rad^(k+1)`; the last entry is the zero subspace.
    pub powers: Vec<Subspace>,
}

impl RadicalData {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Smallest `L` with `rad^L = 0`.
    pub fn loewy_length(&self) -> usize {
        self.powers.len()
    }
}

/// How the radical is obtained at construction.
#[derive(Clone, Debug)]
pub(crate) enum RadicalSource {
    /// A spanning set claimed to be the radical; validated as a nilpotent
    /// two-sided ideal.
    Known(Vec<Vec<Scalar>>),
    /// Characteristic zero trace-form criterion.
    TraceForm,
}

pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    /// `products[(i * n + j) * n + k]` is the coefficient of `e_k` in `e_i e_j`.
    products: Vec<Scalar>,
    unit: Vec<Scalar>,
    idempotents: Vec<Vec<Scalar>>,
    presentation: Option<QuiverPresentation>,
    radical: RadicalData,
    tensor_shape: Option<(usize, usize)>,
    cache: Cache,
}

#[derive(Default)]
struct Cache {
    right_mult: OnceLock<Vec<Matrix>>,
    left_mult: OnceLock<Vec<Matrix>>,
    generators: OnceLock<Vec<Vec<Scalar>>>,
    top_projection: OnceLock<Matrix>,
    center: OnceLock<Subspace>,
    opposite: OnceLock<Arc<Algebra>>,
    enveloping: OnceLock<Arc<Algebra>>,
    self_injective: OnceLock<bool>,
    projectives: OnceLock<Vec<crate::module::ProjectivePart>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("field", &self.field)
            .field("dim", &self.dim())
            .field("basis", &self.labels)
            .field("idempotents", &self.idempotents.len())
            .finish()
    }
}

impl Algebra {
    /// Builds and validates an algebra from its multiplication table:
    /// `table[i][j]` is the coefficient vector of `e_i e_j`.
    ///
    /// Over F_p a `radical` basis must be supplied, since the trace-form
    /// criterion only works in characteristic zero.
    pub fn from_structure_constants(
        field: Field,
        labels: Vec<String>,
        table: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
        radical: Option<Vec<Vec<Scalar>>>,
    ) -> Result<Arc<Algebra>> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("multiplication table must be {n}x{n}")));
        }
        let mut products = Vec::with_capacity(n * n * n);
        for (i, row) in table.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != n {
                    return Err(Error::Shape(format!(
                        "product e_{i} e_{j} has {} coefficients, expected {n}",
                        v.len()
                    )));
                }
                products.extend(v);
            }
        }
        check_field(field, &products)?;
        check_field(field, &unit)?;
        if unit.len() != n {
            return Err(Error::Shape("unit vector has the wrong length".into()));
        }
        for e in &idempotents {
            if e.len() != n {
                return Err(Error::Shape("idempotent vector has the wrong length".into()));
            }
            check_field(field, e)?;
        }
        let source = match radical {
            Some(r) => RadicalSource::Known(r),
            None => RadicalSource::TraceForm,
        };
        Algebra::assemble(field, labels, products, unit, idempotents, None, source, None, true)
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn assemble(
        field: Field,
        labels: Vec<String>,
        products: Vec<Scalar>,
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
        presentation: Option<QuiverPresentation>,
        radical: RadicalSource,
        tensor_shape: Option<(usize, usize)>,
        check_associativity: bool,
    ) -> Result<Arc<Algebra>> {
        let n = labels.len();
        let mut alg = Algebra {
            field,
            labels,
            products,
            unit,
            idempotents,
            presentation,
            radical: RadicalData {
                basis: Subspace::zero(field, n),
                powers: vec![],
            },
            tensor_shape,
            cache: Cache::default(),
        };
        alg.check_unit()?;
        if check_associativity {
            alg.check_associativity()?;
        }
        alg.check_idempotents()?;
        alg.radical = alg.compute_radical(radical)?;
        alg.check_basic()?;
        Ok(Arc::new(alg))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    pub fn presentation(&self) -> Option<&QuiverPresentation> {
        self.presentation.as_ref()
    }

    /// `(dim A, dim B)` when this algebra was built as `A ⊗ B`; basis
    /// element `(i, j)` then has index `i * dim B + j`.
    pub fn tensor_shape(&self) -> Option<(usize, usize)> {
        self.tensor_shape
    }

    /// Coefficients of `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.products[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Full multiplication table as nested vectors.
    pub fn table(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.product(i, j).to_vec()).collect())
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vec(self.field, self.dim(), i)
    }

    pub fn zero_element(&self) -> Vec<Scalar> {
        zero_vec(self.field, self.dim())
    }

    /// Product of two elements given in basis coordinates.
    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero_vec(self.field, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                axpy(&mut out, &(x * y), self.product(i, j));
            }
        }
        out
    }

    /// Matrices of right multiplication: row `i` of `right_mult()[j]` is
    /// `e_i e_j`. These are the action matrices of the regular module.
    pub fn right_mult(&self) -> &[Matrix] {
        self.cache.right_mult.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|j| {
                    let rows = (0..n).map(|i| self.product(i, j).to_vec()).collect();
                    Matrix::from_rows(self.field, n, rows).expect("square")
                })
                .collect()
        })
    }

    /// Matrices of left multiplication: row `j` of `left_mult()[i]` is
    /// `e_i e_j`.
    pub fn left_mult(&self) -> &[Matrix] {
        self.cache.left_mult.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|i| {
                    let rows = (0..n).map(|j| self.product(i, j).to_vec()).collect();
                    Matrix::from_rows(self.field, n, rows).expect("square")
                })
                .collect()
        })
    }

    /// Matrix of `v -> v * a`.
    pub fn right_mult_by(&self, a: &[Scalar]) -> Matrix {
        combine(self.field, self.dim(), self.right_mult(), a)
    }

    /// Matrix of `v -> a * v`.
    pub fn left_mult_by(&self, a: &[Scalar]) -> Matrix {
        combine(self.field, self.dim(), self.left_mult(), a)
    }

    pub fn radical(&self) -> &RadicalData {
        &self.radical
    }

    /// Algebra generators: the primitive idempotents followed by a basis of
    /// a complement of `rad^2` in `rad` (the arrows, for path algebras).
    pub fn generators(&self) -> &[Vec<Scalar>] {
        self.cache.generators.get_or_init(|| {
            let mut gens = self.idempotents.clone();
            gens.extend(self.arrows());
            gens
        })
    }

    /// A basis of a complement of `rad^2` inside `rad`.
    pub fn arrows(&self) -> Vec<Vec<Scalar>> {
        let rad2 = self
            .radical
            .powers
            .get(1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(self.field, self.dim()));
        let mut span = rad2;
        let mut out = Vec::new();
        // prefer single basis vectors lying in rad, in basis order
        let mut candidates: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|i| self.basis_vector(i))
            .filter(|v| self.radical.basis.contains(v))
            .collect();
        candidates.extend(self.radical.basis.basis().iter().cloned());
        for v in candidates {
            if span.extend(&v) {
                out.push(v);
            }
        }
        out
    }

    /// `top_projection()[k][i]` is the coefficient of the idempotent `e_i`
    /// when basis element `k` is written as `sum_i c_i e_i + r` with `r` in
    /// the radical; it is the action of `e_k` on the simple module `S_i`.
    pub fn top_projection(&self) -> &Matrix {
        self.cache.top_projection.get_or_init(|| {
            let n = self.dim();
            let mut rows = self.idempotents.clone();
            rows.extend(self.radical.basis.basis().iter().cloned());
            let b = Matrix::from_rows(self.field, n, rows).expect("square");
            let inv = b.inverse().expect("basic algebra: idempotents + radical span A");
            let m = self.idempotents.len();
            inv.select_cols(&(0..m).collect::<Vec<_>>())
        })
    }

    /// Basis of the centre `Z(A)`.
    pub fn center(&self) -> &Subspace {
        self.cache.center.get_or_init(|| {
            let n = self.dim();
            // z = sum z_k e_k commutes with every e_i:
            // sum_k z_k (c_{ki} - c_{ik}) = 0 coordinatewise.
            let mut rows = Vec::with_capacity(n * n);
            for i in 0..n {
                for l in 0..n {
                    rows.push(
                        (0..n)
                            .map(|k| &self.product(k, i)[l] - &self.product(i, k)[l])
                            .collect(),
                    );
                }
            }
            let m = Matrix::from_rows(self.field, n, rows).expect("shape");
            Subspace::span(self.field, n, m.nullspace())
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.center().dim() == self.dim()
    }

    /// The opposite algebra: same basis, `c'_{ij} = c_{ji}`.
    pub fn opposite(&self) -> Arc<Algebra> {
        self.cache
            .opposite
            .get_or_init(|| {
                let n = self.dim();
                let mut products = Vec::with_capacity(n * n * n);
                for i in 0..n {
                    for j in 0..n {
                        products.extend_from_slice(self.product(j, i));
                    }
                }
                Algebra::assemble(
                    self.field,
                    self.labels.clone(),
                    products,
                    self.unit.clone(),
                    self.idempotents.clone(),
                    None,
                    RadicalSource::Known(self.radical.basis.basis().to_vec()),
                    None,
                    false,
                )
                .expect("opposite of a valid algebra is valid")
            })
            .clone()
    }

    /// `A^e = A^op ⊗ A`; right `A^e`-modules are `(A, A)`-bimodules, with
    /// `a ⊗ b` acting by `v -> a v b`.
    pub fn enveloping(&self) -> Arc<Algebra> {
        self.cache
            .enveloping
            .get_or_init(|| Algebra::tensor(&self.opposite(), self))
            .clone()
    }

    /// Tensor product `A ⊗_k B` of two algebras over the same field.
    /// Basis element `(i, j)` has index `i * dim B + j`.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Arc<Algebra> {
        assert_eq!(a.field, b.field, "tensor factors over different fields");
        let field = a.field;
        let (na, nb) = (a.dim(), b.dim());
        let n = na * nb;
        let kron = |x: &[Scalar], y: &[Scalar]| -> Vec<Scalar> {
            let mut v = Vec::with_capacity(x.len() * y.len());
            for s in x {
                for t in y {
                    v.push(s * t);
                }
            }
            v
        };
        let mut products = Vec::with_capacity(n * n * n);
        for i in 0..na {
            for j in 0..nb {
                for k in 0..na {
                    for l in 0..nb {
                        products.extend(kron(a.product(i, k), b.product(j, l)));
                    }
                }
            }
        }
        let labels = a
            .labels
            .iter()
            .flat_map(|x| b.labels.iter().map(move |y| format!("{x}⊗{y}")))
            .collect();
        let unit = kron(&a.unit, &b.unit);
        let idempotents = a
            .idempotents
            .iter()
            .flat_map(|e| b.idempotents.iter().map(|f| kron(e, f)).collect::<Vec<_>>())
            .collect();
        let mut rad = Vec::new();
        for r in a.radical.basis.basis() {
            for j in 0..nb {
                rad.push(kron(r, &b.basis_vector(j)));
            }
        }
        for i in 0..na {
            for s in b.radical.basis.basis() {
                rad.push(kron(&a.basis_vector(i), s));
            }
        }
        Algebra::assemble(
            field,
            labels,
            products,
            unit,
            idempotents,
            None,
            RadicalSource::Known(rad),
            Some((na, nb)),
            false,
        )
        .expect("tensor product of basic algebras over k is basic")
    }

    /// Embeds `a ⊗ 1` when `self = A ⊗ B` (with `a` given in A's basis).
    pub fn tensor_left(&self, a: &[Scalar], b_unit: &[Scalar]) -> Vec<Scalar> {
        let mut v = Vec::with_capacity(self.dim());
        for s in a {
            for t in b_unit {
                v.push(s * t);
            }
        }
        v
    }

    /// Structural equality: same field, dimension, products and unit.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.dim() == other.dim()
                && self.unit == other.unit
                && self.products == other.products)
    }

    /// True when the regular module is injective. Computed once.
    pub fn is_self_injective(self: &Arc<Self>) -> bool {
        *self
            .cache
            .self_injective
            .get_or_init(|| crate::module::ModuleRep::dual_regular(self).is_projective())
    }

    /// The indecomposable projectives `e_i A`, one per idempotent.
    pub(crate) fn projective_parts(&self) -> &[crate::module::ProjectivePart] {
        self.cache
            .projectives
            .get_or_init(|| crate::module::ProjectivePart::all(self))
    }

    /// Parses a linear combination of basis labels such as `x+2y`,
    /// `x - 1/2*y` or `3` (a multiple of the unit).
    pub fn parse_element(&self, expr: &str) -> Result<Vec<Scalar>> {
        let mut out = self.zero_element();
        let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::InvalidInput("empty algebra element".into()));
        }
        for (sign, term) in split_terms(&s)? {
            let (coeff, label) = self.split_coefficient(term)?;
            let c = if sign { -coeff } else { coeff };
            match label {
                None => axpy(&mut out, &c, &self.unit),
                Some(i) => out[i] = &out[i] + &c,
            }
        }
        Ok(out)
    }

    fn split_coefficient(&self, term: &str) -> Result<(Scalar, Option<usize>)> {
        if let Some(i) = self.labels.iter().position(|l| l == term) {
            return Ok((self.field.one(), Some(i)));
        }
        let end = term
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(term.len());
        let (num, rest) = term.split_at(end);
        let rest = rest.strip_prefix('*').unwrap_or(rest);
        let coeff = if num.is_empty() {
            self.field.one()
        } else {
            self.field.parse(num)?
        };
        if rest.is_empty() {
            return Ok((coeff, None));
        }
        match self.labels.iter().position(|l| l == rest) {
            Some(i) => Ok((coeff, Some(i))),
            None => Err(Error::InvalidInput(format!(
                "unknown basis label {rest:?} (basis: {})",
                self.labels.join(", ")
            ))),
        }
    }

    /// Renders an element as a combination of basis labels, e.g.
    /// `x - 1/2*y`.
    pub fn format_element(&self, v: &[Scalar]) -> String {
        let mut out = String::new();
        for (c, l) in v.iter().zip(&self.labels) {
            if c.is_zero() {
                continue;
            }
            let neg = c.as_rational().is_some_and(|r| r.is_negative());
            let mag = if neg { &self.field.zero() - c } else { c.clone() };
            let term = if mag.is_one() { l.clone() } else { format!("{mag}*{l}") };
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&term),
                (true, true) => out.push_str(&format!("-{term}")),
                (false, false) => out.push_str(&format!(" + {term}")),
                (false, true) => out.push_str(&format!(" - {term}")),
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    fn check_unit(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitViolation { index: i });
            }
        }
        Ok(())
    }

    /// Checks `(e_i e_j) e_k = e_i (e_j e_k)` for every basis triple.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j).to_vec();
                for k in 0..n {
                    let mut left = zero_vec(self.field, n);
                    for (p, c) in ij.iter().enumerate() {
                        axpy(&mut left, c, self.product(p, k));
                    }
                    let mut right = zero_vec(self.field, n);
                    for (p, c) in self.product(j, k).iter().enumerate() {
                        axpy(&mut right, c, self.product(i, p));
                    }
                    if left != right {
                        return Err(Error::AssociativityViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_idempotents(&self) -> Result<()> {
        if self.idempotents.is_empty() {
            return Err(Error::IdempotentViolation("no idempotents given".into()));
        }
        let mut sum = self.zero_element();
        for (i, e) in self.idempotents.iter().enumerate() {
            if is_zero_vec(e) {
                return Err(Error::IdempotentViolation(format!("idempotent {i} is zero")));
            }
            for (j, f) in self.idempotents.iter().enumerate() {
                let p = self.mul(e, f);
                let ok = if i == j { &p == e } else { is_zero_vec(&p) };
                if !ok {
                    return Err(Error::IdempotentViolation(if i == j {
                        format!("idempotent {i} does not square to itself")
                    } else {
                        format!("idempotents {i} and {j} are not orthogonal")
                    }));
                }
            }
            axpy(&mut sum, &self.field.one(), e);
        }
        if sum != self.unit {
            return Err(Error::IdempotentViolation(
                "idempotents do not sum to the unit".into(),
            ));
        }
        Ok(())
    }

    fn compute_radical(&self, source: RadicalSource) -> Result<RadicalData> {
        let n = self.dim();
        let basis = match source {
            RadicalSource::Known(vs) => {
                for v in &vs {
                    if v.len() != n {
                        return Err(Error::Shape("radical vector has the wrong length".into()));
                    }
                }
                let span = Subspace::span(self.field, n, vs);
                for r in span.basis() {
                    for i in 0..n {
                        let e = self.basis_vector(i);
                        if !span.contains(&self.mul(r, &e)) || !span.contains(&self.mul(&e, r)) {
                            return Err(Error::NotBasic(
                                "supplied radical is not a two-sided ideal".into(),
                            ));
                        }
                    }
                }
                span
            }
            RadicalSource::TraceForm => {
                if self.field != Field::Rationals {
                    return Err(Error::UnsupportedField { field: self.field });
                }
                // tr(L_{e_k}) = sum_l c_{kl}^l
                let tr: Vec<Scalar> = (0..n)
                    .map(|k| {
                        (0..n).fold(self.field.zero(), |acc, l| &acc + &self.product(k, l)[l])
                    })
                    .collect();
                let rows = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                self.product(i, j)
                                    .iter()
                                    .zip(&tr)
                                    .fold(self.field.zero(), |acc, (c, t)| &acc + &(c * t))
                            })
                            .collect()
                    })
                    .collect();
                let form = Matrix::from_rows(self.field, n, rows).expect("square");
                Subspace::span(self.field, n, form.left_nullspace())
            }
        };
        let mut powers = vec![basis.clone()];
        while powers.last().expect("nonempty").dim() > 0 {
            if powers.len() > n + 1 {
                return Err(Error::NotBasic("radical is not nilpotent".into()));
            }
            let prev = powers.last().expect("nonempty");
            let mut next = Vec::new();
            for r in prev.basis() {
                for s in basis.basis() {
                    next.push(self.mul(r, s));
                }
            }
            let next = Subspace::span(self.field, n, next);
            if next.dim() == prev.dim() {
                return Err(Error::NotBasic("radical is not nilpotent".into()));
            }
            powers.push(next);
        }
        Ok(RadicalData { basis, powers })
    }

    fn check_basic(&self) -> Result<()> {
        let n = self.dim();
        let m = self.idempotents.len();
        let rad = self.radical.basis.dim();
        if n - rad != m {
            return Err(Error::NotBasic(format!(
                "dim A/rad A = {} but there are {m} primitive idempotents",
                n - rad
            )));
        }
        let mut span = self.radical.basis.clone();
        for e in &self.idempotents {
            span.extend(e);
        }
        if span.dim() != n {
            return Err(Error::NotBasic(
                "idempotents and radical do not span the algebra".into(),
            ));
        }
        Ok(())
    }
}

fn check_field(field: Field, v: &[Scalar]) -> Result<()> {
    match v.iter().find(|s| s.field() != field) {
        Some(bad) => Err(Error::Shape(format!("{bad} does not belong to {field}"))),
        None => Ok(()),
    }
}

/// `sum_i a_i * mats[i]`.
pub(crate) fn combine(field: Field, dim: usize, mats: &[Matrix], a: &[Scalar]) -> Matrix {
    let (r, c) = mats.first().map_or((dim, dim), |m| (m.rows(), m.cols()));
    let mut out = Matrix::zeros(field, r, c);
    for (m, x) in mats.iter().zip(a) {
        out.add_scaled(x, m);
    }
    out
}

/// Splits `a+b-c` into signed terms; `true` marks a negated term.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
        neg = bytes[i] == b'-';
        i += 1;
        start = i;
    }
    while i < bytes.len() {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && i > start {
            out.push((neg, &s[start..i]));
            neg = c == b'-';
            start = i + 1;
        }
        i += 1;
    }
    if start >= s.len() {
        return Err(Error::InvalidInput(format!("dangling sign in {s:?}")));
    }
    out.push((neg, &s[start..]));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q() -> Field {
        Field::Rationals
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| q().from_i64(x)).collect()
    }

    /// k[x]/(x^2) typed in by hand.
    fn dual_numbers_by_hand() -> Result<Arc<Algebra>> {
        Algebra::from_structure_constants(
            q(),
            vec!["1".into(), "x".into()],
            vec![
                vec![ints(&[1, 0]), ints(&[0, 1])],
                vec![ints(&[0, 1]), ints(&[0, 0])],
            ],
            ints(&[1, 0]),
            vec![ints(&[1, 0])],
            None,
        )
    }

    #[test]
    fn dual_numbers_from_table() {
        let a = dual_numbers_by_hand().unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.radical().dim(), 1);
        assert_eq!(a.radical().loewy_length(), 2);
        assert_eq!(a.center().dim(), 2);
        assert!(a.is_commutative());
    }

    #[test]
    fn product_of_two_fields_is_semisimple() {
        let a = Algebra::from_structure_constants(
            q(),
            vec!["a".into(), "b".into()],
            vec![
                vec![ints(&[1, 0]), ints(&[0, 0])],
                vec![ints(&[0, 0]), ints(&[0, 1])],
            ],
            ints(&[1, 1]),
            vec![ints(&[1, 0]), ints(&[0, 1])],
            None,
        )
        .unwrap();
        assert_eq!(a.radical().dim(), 0);
        assert_eq!(a.center().dim(), 2);
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // e1 e1 = e2 and e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = e1 e2 = 0.
        let err = Algebra::from_structure_constants(
            q(),
            vec!["u".into(), "e1".into(), "e2".into()],
            vec![
                vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])],
                vec![ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[0, 0, 0])],
                vec![ints(&[0, 0, 1]), ints(&[0, 1, 0]), ints(&[0, 0, 0])],
            ],
            ints(&[1, 0, 0]),
            vec![ints(&[1, 0, 0])],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::AssociativityViolation { .. }), "{err}");
    }

    #[test]
    fn bad_unit_and_idempotents_are_rejected() {
        let table = vec![
            vec![ints(&[1, 0]), ints(&[0, 1])],
            vec![ints(&[0, 1]), ints(&[0, 0])],
        ];
        let err = Algebra::from_structure_constants(
            q(),
            vec!["1".into(), "x".into()],
            table.clone(),
            ints(&[0, 1]),
            vec![ints(&[1, 0])],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnitViolation { .. }));
        let err = Algebra::from_structure_constants(
            q(),
            vec!["1".into(), "x".into()],
            table,
            ints(&[1, 0]),
            vec![ints(&[1, 1])],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::IdempotentViolation(_)));
    }

    #[test]
    fn matrix_algebra_is_not_basic() {
        // M_2(k) with matrix units; idempotents E11, E22 are primitive but
        // A/rad = M_2(k) has dimension 4 > 2.
        let n = 4; // E11, E12, E21, E22
        let idx = |r: usize, c: usize| r * 2 + c;
        let mut table = vec![vec![vec![q().zero(); n]; n]; n];
        for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                if b == c {
                    table[idx(a, b)][idx(c, d)][idx(a, d)] = q().one();
                }
            }
        }
        let err = Algebra::from_structure_constants(
            q(),
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            table,
            ints(&[1, 0, 0, 1]),
            vec![ints(&[1, 0, 0, 0]), ints(&[0, 0, 0, 1])],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotBasic(_)), "{err}");
    }

    #[test]
    fn prime_field_needs_a_radical() {
        let f2 = Field::Prime(2);
        let z = |v: &[i64]| v.iter().map(|&x| f2.from_i64(x)).collect::<Vec<_>>();
        let table = vec![
            vec![z(&[1, 0]), z(&[0, 1])],
            vec![z(&[0, 1]), z(&[0, 0])],
        ];
        let err = Algebra::from_structure_constants(
            f2,
            vec!["1".into(), "x".into()],
            table.clone(),
            z(&[1, 0]),
            vec![z(&[1, 0])],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::UnsupportedField { .. }));
        let ok = Algebra::from_structure_constants(
            f2,
            vec!["1".into(), "x".into()],
            table,
            z(&[1, 0]),
            vec![z(&[1, 0])],
            Some(vec![z(&[0, 1])]),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn quantum_exterior_radical_layers() {
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let rad = lam.radical();
        assert_eq!(rad.dim(), 3);
        assert_eq!(rad.powers[1].dim(), 1);
        assert_eq!(rad.loewy_length(), 3);
        let xy = lam.parse_element("xy").unwrap();
        assert!(rad.powers[1].contains(&xy));
    }

    #[test]
    fn quantum_exterior_center_is_unit_and_socle() {
        // brute-force oracle: z commutes with everything iff it commutes
        // with x and y; over q = 2, x and y do not commute, so Z = <1, xy>.
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let z = lam.center();
        assert_eq!(z.dim(), 2);
        assert!(z.contains(lam.unit()));
        assert!(z.contains(&lam.parse_element("xy").unwrap()));
        for b in z.basis() {
            for c in z.basis() {
                assert!(z.contains(&lam.mul(b, c)));
            }
        }
    }

    #[test]
    fn opposite_reverses_products() {
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let op = lam.opposite();
        let x = lam.parse_element("x").unwrap();
        let y = lam.parse_element("y").unwrap();
        // x ∘ y = y x = -1/2 xy
        assert_eq!(op.mul(&x, &y), lam.parse_element("-1/2xy").unwrap());
        assert!(op.opposite().same_structure(&lam));
        let kx2 = fixtures::truncated_polynomial(q(), 2).unwrap();
        assert!(kx2.opposite().same_structure(&kx2));
    }

    #[test]
    fn enveloping_of_dual_numbers() {
        // oracle: k[x]/(x^2) ⊗ k[x]/(x^2) = k[u, v]/(u^2, v^2), u = x⊗1, v = 1⊗x
        let a = fixtures::truncated_polynomial(q(), 2).unwrap();
        let env = a.enveloping();
        assert_eq!(env.dim(), 4);
        env.check_associativity().unwrap();
        assert!(env.is_commutative());
        let u = env.parse_element("x⊗e").unwrap();
        let v = env.parse_element("e⊗x").unwrap();
        assert!(is_zero_vec(&env.mul(&u, &u)));
        assert!(is_zero_vec(&env.mul(&v, &v)));
        assert_eq!(env.mul(&u, &v), env.parse_element("x⊗x").unwrap());
        assert_eq!(env.unit(), &env.parse_element("e⊗e").unwrap()[..]);
        assert_eq!(env.radical().dim(), 3);
    }

    #[test]
    fn enveloping_dimensions() {
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let env = lam.enveloping();
        assert_eq!(env.dim(), 16);
        env.check_associativity().unwrap();
        assert_eq!(lam.opposite().enveloping().dim(), 16);
        assert_eq!(env.num_vertices(), 1);
        assert_eq!(env.radical().dim(), 15);
    }

    #[test]
    fn element_parsing() {
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        assert_eq!(lam.parse_element("x+y").unwrap(), ints(&[0, 1, 1, 0]));
        assert_eq!(
            lam.parse_element("x - 1/2*y + 3").unwrap(),
            vec![q().from_i64(3), q().one(), q().parse("-1/2").unwrap(), q().zero()]
        );
        assert_eq!(lam.parse_element("-2xy").unwrap(), ints(&[0, 0, 0, -2]));
        assert!(lam.parse_element("z").is_err());
        assert!(lam.parse_element("x+").is_err());
        assert_eq!(lam.format_element(&ints(&[0, 1, 2, 0])), "x + 2*y");
        assert_eq!(lam.format_element(&ints(&[0, -1, 0, -3])), "-x - 3*xy");
        assert_eq!(lam.format_element(&ints(&[0, 0, 0, 0])), "0");
    }

    #[test]
    fn generators_are_idempotents_and_arrows() {
        let lam = fixtures::quantum_exterior(q(), &q().from_i64(2)).unwrap();
        let gens = lam.generators();
        assert_eq!(gens.len(), 3);
        assert_eq!(lam.format_element(&gens[1]), "x");
        assert_eq!(lam.format_element(&gens[2]), "y");
    }
}
