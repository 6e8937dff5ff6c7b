use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::complex::Gauss;
use super::poly::Poly;
use super::rational::int;
use super::{Field, Matrix};
use crate::error::Result;

pub const DEFAULT_SEED: u64 = 0x4e49_4c43;
pub const DEFAULT_TRIALS: usize = 5;

/// Seed from `NILCLASS_SEED` if set, else the default.
pub fn seed_from_env() -> u64 {
    std::env::var("NILCLASS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

fn draw(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let x: i64 = rng.gen_range(-97..=97);
        if x != 0 {
            return x;
        }
    }
}

/// Max rank over `trials` random integer specializations of the variables.
pub fn rank_generic(m: &Matrix<Poly>, trials: usize, seed: u64) -> Result<usize> {
    let vars: BTreeSet<Arc<str>> = (0..m.rows())
        .flat_map(|i| m.row(i).iter().flat_map(|p| p.variables()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let point: HashMap<String, _> = vars
            .iter()
            .map(|v| (v.to_string(), int(draw(&mut rng))))
            .collect();
        let spec: Matrix<Gauss> = m.try_map(|p| p.substitute(&point))?;
        best = best.max(spec.rank());
    }
    Ok(best)
}

/// Generic rank of the pencil `sum_j x_j * mats[j]` over the field of the entries.
pub fn rank_pencil<S: Field>(mats: &[Matrix<S>], trials: usize, seed: u64) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    for m in mats {
        m.check_ring()?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let mut acc = Matrix::<S>::zeros(first.rows(), first.cols());
        for m in mats {
            let x = S::from_int(draw(&mut rng));
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m[(i, j)].is_zero() {
                        acc[(i, j)] = acc[(i, j)].clone() + x.clone() * m[(i, j)].clone();
                    }
                }
            }
        }
        best = best.max(acc.rank());
    }
    Ok(best)
}
