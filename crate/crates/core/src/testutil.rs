//! Shared helpers for unit tests.

use crate::poly::{Monomial, Polynomial};

/// Deterministic pseudo-random polynomial in `n` variables, entry degree
/// capped at `max_deg`, small coefficients of both signs.
pub fn sample_poly(seed: u64, n: usize, max_deg: usize) -> Polynomial {
    let mut state = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut f = Polynomial::zero();
    for _ in 0..6 {
        let mut exps = vec![0usize; n];
        let mut deg = 0;
        for e in exps.iter_mut() {
            if deg >= max_deg {
                break;
            }
            *e = (next() % 3) as usize;
            deg += *e;
        }
        let c = (next() % 9) as i64 - 4;
        f = f.add(&Polynomial::from_monomial(Monomial::from_exps(&exps), c));
    }
    f
}
