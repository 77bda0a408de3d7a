use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ParMetSpace, RadiusFunction};
use crate::extrat::ExtRat;

fn quarter(k: u64) -> ExtRat {
    ExtRat::ratio(k, 4).expect("nonzero denominator")
}

/// A reproducible space on `n` points `p0, p1, …`.
///
/// Distances are shortest paths over random edges in quarter steps, some
/// pairs left disconnected at `∞`. Unless `classical`, each point gets a
/// weight `w` (occasionally `∞`) and `α(x,y) = max(w_x, w_y) + d(x,y)`.
#[allow(clippy::needless_range_loop)]
pub fn random_space(n: usize, seed: u64, classical: bool) -> ParMetSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = vec![vec![ExtRat::infinity(); n]; n];
    for x in 0..n {
        d[x][x] = ExtRat::zero();
        for y in x + 1..n {
            if rng.random_ratio(7, 8) {
                let w = quarter(rng.random_range(1..=16));
                d[x][y] = w.clone();
                d[y][x] = w;
            }
        }
    }
    for k in 0..n {
        for x in 0..n {
            for y in 0..n {
                let via = &d[x][k] + &d[k][y];
                if via < d[x][y] {
                    d[x][y] = via;
                }
            }
        }
    }
    let weights: Vec<ExtRat> = (0..n)
        .map(|_| {
            if classical {
                ExtRat::zero()
            } else if rng.random_ratio(1, 10) {
                ExtRat::infinity()
            } else {
                quarter(2 * rng.random_range(0..=4))
            }
        })
        .collect();
    let alpha = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| &weights[x].clone().max(weights[y].clone()) + &d[x][y])
                .collect()
        })
        .collect();
    ParMetSpace::new((0..n).map(|i| format!("p{i}")).collect(), alpha).expect("generated space is valid")
}

/// A reproducible ambient function of type `r`: the largest distance from
/// each point, plus random slack in quarter steps.
pub fn sample_ambient(m: &ParMetSpace, r: &ExtRat, seed: u64) -> RadiusFunction {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = (0..m.len())
        .map(|x| {
            let base = (0..m.len()).map(|y| m.alpha(x, y).clone()).fold(r.clone(), ExtRat::max);
            &base + &quarter(rng.random_range(0..=8))
        })
        .collect();
    RadiusFunction::new(r.clone(), values)
}
