#![allow(dead_code)]

use std::sync::Arc;

use fdalg_core::fixtures::{self, IdealSide};
use fdalg_core::{Algebra, Field, Matrix, ModuleRep, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn q() -> Field {
    Field::Rationals
}

pub fn kx(n: usize) -> Arc<Algebra> {
    fixtures::truncated_polynomial(q(), n).unwrap()
}

pub fn lam(field: Field, c: i64) -> Arc<Algebra> {
    fixtures::quantum_exterior(field, &field.from_i64(c)).unwrap()
}

pub fn a2() -> Arc<Algebra> {
    fixtures::a2_hereditary(q()).unwrap()
}

pub fn left_cyclic(a: &Arc<Algebra>, c: &Scalar) -> ModuleRep {
    fixtures::quantum_cyclic_module(a, c, IdealSide::Left).unwrap()
}

pub fn right_cyclic(a: &Arc<Algebra>, c: &Scalar) -> ModuleRep {
    fixtures::quantum_cyclic_module(a, c, IdealSide::Right).unwrap()
}

/// Fixture modules over self-injective algebras.
pub fn self_injective_modules() -> Vec<(String, ModuleRep)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let a = kx(n);
        out.push((format!("k[x]/(x^{n}) simple"), ModuleRep::simple(&a, 0).unwrap()));
        out.push((format!("k[x]/(x^{n}) regular"), ModuleRep::regular(&a)));
    }
    let x_ideal = {
        let a = kx(3);
        let x = a.parse_element("x").unwrap();
        ModuleRep::regular(&a).submodule_span(&[x]).unwrap().0
    };
    out.push(("k[x]/(x^3) xA".into(), x_ideal));
    for c in [2, -1] {
        let l = lam(q(), c);
        out.push((format!("Λ_{c} simple"), ModuleRep::simple(&l, 0).unwrap()));
        out.push((format!("Λ_{c} (x+y)Λ"), right_cyclic(&l, &q().one())));
        out.push((format!("Λ_{c} Λ(x+y)"), left_cyclic(&l, &q().one())));
    }
    let f7 = Field::Prime(7);
    out.push(("Λ_2 over F_7, Λ(x+y)".into(), left_cyclic(&lam(f7, 2), &f7.one())));
    out
}

/// All fixture modules, including ones over the hereditary algebra `A_2`.
pub fn all_modules() -> Vec<(String, ModuleRep)> {
    let mut out = self_injective_modules();
    let a = a2();
    out.push(("A_2 S1".into(), ModuleRep::simple(&a, 0).unwrap()));
    out.push(("A_2 S2".into(), ModuleRep::simple(&a, 1).unwrap()));
    out.push(("A_2 regular".into(), ModuleRep::regular(&a)));
    out.push(("A_2 injective".into(), ModuleRep::dual_regular(&a)));
    out
}

pub fn random_matrix(field: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let data = (0..rows)
        .map(|_| (0..cols).map(|_| field.sample(rng, 5)).collect())
        .collect();
    Matrix::from_rows(field, cols, data).unwrap()
}

pub fn random_invertible(field: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = random_matrix(field, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// `M` with its basis changed by a seeded random invertible matrix.
pub fn scramble(m: &ModuleRep, seed: u64) -> ModuleRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_invertible(m.field(), m.dim(), &mut rng);
    m.change_basis(&g).unwrap().0
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> usize {
    rng.gen_range(lo..=hi)
}
