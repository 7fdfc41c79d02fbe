//! Search for a point where a polynomial condition does not vanish.
//!
//! Used wherever a generic element of a linear family must be found, such
//! as an invertible combination of homomorphisms. The condition is assumed
//! to fail exactly on the zero set of a polynomial whose degree in each
//! variable is at most `degree`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Number of random points tried before falling back to enumeration.
pub const RANDOM_TRIALS: usize = 64;

/// Largest grid that is enumerated exhaustively.
pub const MAX_GRID_POINTS: u128 = 1 << 20;

/// Bound on `points * degree^3`, roughly the work of the grid scan.
const MAX_GRID_WORK: u128 = 1 << 34;

/// Searches coefficient vectors of length `vars` for one accepted by `test`.
///
/// Order: each coordinate vector, then [`RANDOM_TRIALS`] seeded random
/// points, then the full grid `S^vars` with `|S| = degree + 1` (or all of
/// `F_p` when `p <= degree`). Returns `Ok(None)` only when the grid was
/// scanned completely, which certifies that no point works.
pub fn find_point<T>(
    field: Field,
    vars: usize,
    degree: usize,
    seed: u64,
    mut test: impl FnMut(&[Scalar]) -> Option<T>,
) -> Result<Option<T>> {
    if vars == 0 {
        return Ok(test(&[]));
    }
    let mut tried = 0usize;
    for i in 0..vars {
        let mut c = vec![field.zero(); vars];
        c[i] = field.one();
        tried += 1;
        if let Some(t) = test(&c) {
            return Ok(Some(t));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 4 * (degree as i64 + 1);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<Scalar> = (0..vars).map(|_| field.sample(&mut rng, bound)).collect();
        tried += 1;
        if let Some(t) = test(&c) {
            return Ok(Some(t));
        }
    }

    let side = match field {
        Field::Rationals => degree + 1,
        Field::Prime(p) => (degree + 1).min(p as usize),
    };
    let points = (side as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    let work = points.saturating_mul((degree as u128 + 1).pow(3));
    if points > MAX_GRID_POINTS || work > MAX_GRID_WORK {
        return Err(Error::FiniteFieldInconclusive {
            field,
            tried,
            space: format!("{side}^{vars}"),
        });
    }
    let grid = field.grid_points(side);
    let mut idx = vec![0usize; vars];
    loop {
        let c: Vec<Scalar> = idx.iter().map(|&i| grid[i].clone()).collect();
        if let Some(t) = test(&c) {
            return Ok(Some(t));
        }
        let mut k = 0;
        loop {
            if k == vars {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < side {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}
