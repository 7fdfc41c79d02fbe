//! Property tests against independent oracles.

mod common;

use common::*;
use fdalg_core::bimodule::{bimodules_isomorphic, Bimodule};
use fdalg_core::fixtures;
use fdalg_core::homological::{ext_dim, resolve, stable_hom_dim};
use fdalg_core::matrix::Matrix;
use fdalg_core::module::{hom_dim, is_isomorphic, strip_projectives};
use fdalg_core::orbit::orbit_stats;
use fdalg_core::{tensor_bimodules, Field, ModuleRep, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 2_147_483_647];

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

proptest! {
    #[test]
    fn prime_field_matches_u128_arithmetic(p in prime(), a in 0u64..1 << 40, b in 0u64..1 << 40) {
        let f = Field::Prime(p);
        let (x, y) = (f.from_i64(a as i64), f.from_i64(b as i64));
        let sum = (a as u128 + b as u128) % p as u128;
        let prod = (a as u128 % p as u128) * (b as u128 % p as u128) % p as u128;
        prop_assert_eq!(&x + &y, f.from_i64(sum as i64));
        prop_assert_eq!(&x * &y, f.from_i64(prod as i64));
        if let Some(inv) = x.inv() {
            prop_assert!((&x * &inv).is_one());
        } else {
            prop_assert_eq!(a % p, 0);
        }
    }

    #[test]
    fn rationals_match_bigrational(n1 in -50i64..50, d1 in 1i64..20, n2 in -50i64..50, d2 in 1i64..20) {
        let f = Field::Rationals;
        let x = f.parse(&format!("{n1}/{d1}")).unwrap();
        let y = f.parse(&format!("{n2}/{d2}")).unwrap();
        let rx = BigRational::new(BigInt::from(n1), BigInt::from(d1));
        let ry = BigRational::new(BigInt::from(n2), BigInt::from(d2));
        let (prod, diff) = (&x * &y, &x - &y);
        prop_assert_eq!(prod.as_rational().unwrap(), &(&rx * &ry));
        prop_assert_eq!(diff.as_rational().unwrap(), &(&rx - &ry));
    }

    #[test]
    fn rank_nullity_and_inverse(seed in any::<u64>(), rows in 1usize..7, cols in 1usize..7, fp in any::<bool>()) {
        let f = if fp { Field::Prime(7) } else { Field::Rationals };
        let mut r = rng(seed);
        let m = random_matrix(f, rows, cols, &mut r);
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), cols);
        for v in &null {
            prop_assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
        let sq = random_matrix(f, rows, rows, &mut r);
        match sq.inverse() {
            Some(inv) => prop_assert_eq!(sq.mul(&inv), Matrix::identity(f, rows)),
            None => prop_assert!(sq.rank() < rows),
        }
    }

    #[test]
    fn solve_finds_solutions(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..6) {
        let f = Field::Rationals;
        let mut r = rng(seed);
        let m = random_matrix(f, rows, cols, &mut r);
        let x: Vec<Scalar> = (0..cols).map(|_| f.sample(&mut r, 4)).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b);
        let p = sol.particular.expect("consistent system");
        prop_assert_eq!(m.mul_vec(&p), b);
    }
}

/// Partitions with parts at most `n`.
fn partition(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 1..4)
}

/// `⊕ k[x]/(x^{λ_i})` as a module over `k[x]/(x^n)`.
fn jordan_module(n: usize, parts: &[usize]) -> ModuleRep {
    let a = kx(n);
    let blocks: Vec<ModuleRep> = parts
        .iter()
        .map(|&k| {
            // x^{n-k} generates a block of length k
            let gen = (0..n).map(|i| if i == n - k { q().one() } else { q().zero() }).collect::<Vec<_>>();
            ModuleRep::regular(&a).submodule_span(&[gen]).unwrap().0
        })
        .collect();
    ModuleRep::direct_sum_all(&a, &blocks).unwrap()
}

fn hom_oracle(lambda: &[usize], mu: &[usize]) -> usize {
    lambda.iter().map(|&a| mu.iter().map(|&b| a.min(b)).sum::<usize>()).sum()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hom_dims_of_jordan_modules(n in 2usize..5, l in partition(4), m in partition(4), seed in any::<u64>()) {
        let l: Vec<usize> = l.into_iter().map(|k| k.min(n)).collect();
        let m: Vec<usize> = m.into_iter().map(|k| k.min(n)).collect();
        let ml = scramble(&jordan_module(n, &l), seed);
        let mm = jordan_module(n, &m);
        prop_assert_eq!(hom_dim(&ml, &mm).unwrap(), hom_oracle(&l, &m));
        let iso = is_isomorphic(&ml, &mm).unwrap().is_some();
        prop_assert_eq!(iso, sorted(l.clone()) == sorted(m.clone()));
    }

    #[test]
    fn syzygy_of_jordan_blocks(n in 2usize..6, l in partition(5)) {
        // Ω(k[x]/(x^k)) = k[x]/(x^{n-k}); free summands vanish
        let l: Vec<usize> = l.into_iter().map(|k| k.min(n)).collect();
        let omega = jordan_module(n, &l).syzygy();
        let expected: Vec<usize> = l.iter().filter(|&&k| k < n).map(|&k| n - k).collect();
        if expected.is_empty() {
            prop_assert_eq!(omega.dim(), 0);
        } else {
            prop_assert!(is_isomorphic(&omega, &jordan_module(n, &expected)).unwrap().is_some());
        }
        let res = resolve(&jordan_module(n, &l), 4);
        res.check().unwrap();
        let blocks = expected.len();
        prop_assert!(res.dims()[1..].iter().all(|&d| d == n * blocks));
    }

    #[test]
    fn strip_recovers_core(n in 2usize..5, l in partition(3), copies in 1usize..3) {
        let l: Vec<usize> = l.into_iter().map(|k| k.min(n - 1)).collect();
        let m = jordan_module(n, &l);
        let free = vec![n; copies];
        let with_p = jordan_module(n, &[l.clone(), free].concat());
        let s = strip_projectives(&with_p).unwrap();
        prop_assert_eq!(s.core.dim(), m.dim());
        prop_assert!(is_isomorphic(&s.core, &m).unwrap().is_some());
        prop_assert_eq!(s.multiplicities, vec![copies]);
    }

    #[test]
    fn ext_routes_agree_on_jordan_modules(n in 2usize..5, l in partition(4), m in partition(4), deg in 1usize..4) {
        let l: Vec<usize> = l.into_iter().map(|k| k.min(n)).collect();
        let m: Vec<usize> = m.into_iter().map(|k| k.min(n)).collect();
        let (a, b) = (jordan_module(n, &l), jordan_module(n, &m));
        prop_assert_eq!(ext_dim(&a, &b, deg).unwrap(), stable_hom_dim(&a, &b, deg).unwrap());
    }

    #[test]
    fn orbit_stats_are_isomorphism_invariant(n in 2usize..5, l in partition(4), seed in any::<u64>()) {
        let l: Vec<usize> = l.into_iter().map(|k| k.min(n)).collect();
        let m = jordan_module(n, &l);
        prop_assert_eq!(orbit_stats(&m).unwrap(), orbit_stats(&scramble(&m, seed)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn twists_compose_over_prime_fields(p in prop::sample::select(vec![5u64, 7, 11]), s in 1i64..11, t in 1i64..11) {
        let f = Field::Prime(p);
        let a = fixtures::truncated_polynomial(f, 2).unwrap();
        let (s, t) = (f.from_i64(s), f.from_i64(t));
        prop_assume!(!s.is_zero() && !t.is_zero());
        let ss = fixtures::kx2_twist(&a, &s).unwrap();
        let tt = fixtures::kx2_twist(&a, &t).unwrap();
        let lhs = tensor_bimodules(&Bimodule::twisted(&ss), &Bimodule::twisted(&tt)).unwrap();
        prop_assert!(bimodules_isomorphic(&lhs, &Bimodule::twisted(&ss.compose(&tt)), 3).unwrap());
    }

    #[test]
    fn quantum_syzygies_shift_the_parameter(q0 in 2i64..6, c in 1i64..6, i in 0usize..4) {
        // Ω^i(Λ(x + c y)) ≅ Λ(x + c q^i y) on the left side
        let l = lam(q(), q0);
        let m = left_cyclic(&l, &q().from_i64(c));
        let target = left_cyclic(&l, &q().from_i64(c * q0.pow(i as u32)));
        let omega = fdalg_core::nth_syzygy(&m, i);
        prop_assert!(is_isomorphic(&omega, &target).unwrap().is_some());
    }
}
