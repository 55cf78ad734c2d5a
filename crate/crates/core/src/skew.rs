//! Skew divided difference operators `d_{w/v}` and the structure-constant
//! route through them.
//!
//! `d_{w/v} = v^{-1} sum_{b in a, b reduced for v} phi(a, b)` where `phi_i`
//! is the variable swap `s_{a_i}` at chosen positions and `d_{a_i}`
//! elsewhere. Operator strings act rightmost-first; the `v^{-1}` prefix is
//! a variable permutation applied last.

use crate::divdiff::ddiff_i;
use crate::error::Error;
use crate::perm::{subsequence_words, Permutation};
use crate::poly::{Coeff, Polynomial};
use crate::schubert::schubert_poly;

/// A pair `v <= w` together with a fixed reduced word for `w`. The induced
/// operator does not depend on the word; that is a tested property, not an
/// assumption.
#[derive(Clone, Debug)]
pub struct SkewOp {
    pub w: Permutation,
    pub v: Permutation,
    pub word: Vec<usize>,
}

impl SkewOp {
    /// Builds `d_{w/v}` on the lexicographically minimal reduced word of `w`.
    pub fn new(w: &Permutation, v: &Permutation) -> Result<Self, Error> {
        Self::with_word(w, v, w.lex_min_reduced_word())
    }

    /// Builds `d_{w/v}` on an explicitly chosen reduced word of `w`.
    pub fn with_word(w: &Permutation, v: &Permutation, word: Vec<usize>) -> Result<Self, Error> {
        if Permutation::from_word(&word) != *w || word.len() != w.length() {
            return Err(Error::NotReducedWord(word, w.to_string()));
        }
        if !v.bruhat_leq(w) {
            return Err(Error::NotBruhatBelow {
                v: v.to_string(),
                w: w.to_string(),
            });
        }
        Ok(SkewOp {
            w: w.clone(),
            v: v.clone(),
            word,
        })
    }

    /// Applies the operator to `f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.apply_with(f, &ddiff_i)
    }

    /// Same subsequence combinatorics with a pluggable single-step operator
    /// in place of `d_i` (the isobaric variant uses `pi_i`).
    pub fn apply_with(
        &self,
        f: &Polynomial,
        step: &dyn Fn(usize, &Polynomial) -> Polynomial,
    ) -> Polynomial {
        let v_inv = self.v.inverse();
        let mut out = Polynomial::zero();
        for b in subsequence_words(&self.word, &self.v) {
            let mut g = f.clone();
            let mut next_chosen = b.len();
            for idx in (0..self.word.len()).rev() {
                let chosen = next_chosen > 0 && b[next_chosen - 1] == idx;
                if chosen {
                    next_chosen -= 1;
                    g = g.permute_variables(&Permutation::simple(self.word[idx]));
                } else {
                    g = step(self.word[idx], &g);
                }
            }
            out = out.add(&g.permute_variables(&v_inv));
        }
        out
    }
}

/// `d_{w/v}` applied to `f` on the canonical word.
pub fn skew_apply(w: &Permutation, v: &Permutation, f: &Polynomial) -> Result<Polynomial, Error> {
    Ok(SkewOp::new(w, v)?.apply(f))
}

/// The polynomial `d_{w/v}(S_u)`. When `l(u) + l(v) = l(w)` it is the
/// constant `c^w_{uv}`.
pub fn skew_on_schubert(
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
) -> Result<Polynomial, Error> {
    skew_apply(w, v, &schubert_poly(u))
}

/// The structure constant `c^w_{uv}` through the skew route: the constant
/// term of `d_{w/v}(S_u)`.
pub fn constants_by_skew(
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
) -> Result<Coeff, Error> {
    Ok(skew_on_schubert(u, v, w)?.eta())
}

/// The chain-sum form of the generalized Leibnitz rule:
/// `u d_{w/u}(f_1 ... f_N) = sum over chains w = v_0 >= ... >= v_N = u of
/// prod_i v_i(d_{v_{i-1}/v_i}(f_i))`.
pub fn leibnitz_expand(
    w: &Permutation,
    u: &Permutation,
    factors: &[Polynomial],
) -> Result<Polynomial, Error> {
    if !u.bruhat_leq(w) {
        return Err(Error::NotBruhatBelow {
            v: u.to_string(),
            w: w.to_string(),
        });
    }
    let n = w.rank().max(u.rank());
    let interval: Vec<Permutation> = Permutation::all(n.max(1))
        .into_iter()
        .filter(|p| u.bruhat_leq(p) && p.bruhat_leq(w))
        .collect();
    let mut total = Polynomial::zero();
    let mut chain = vec![w.clone()];
    rec_chains(&mut chain, u, factors, &interval, &Polynomial::one(), &mut total);
    Ok(total)
}

fn rec_chains(
    chain: &mut Vec<Permutation>,
    u: &Permutation,
    factors: &[Polynomial],
    interval: &[Permutation],
    partial: &Polynomial,
    total: &mut Polynomial,
) {
    let i = chain.len() - 1;
    if i == factors.len() {
        if chain.last().unwrap() == u {
            *total = total.add(partial);
        }
        return;
    }
    let prev = chain.last().unwrap().clone();
    let last_step = i + 1 == factors.len();
    for next in interval {
        if last_step && next != u {
            continue;
        }
        if !next.bruhat_leq(&prev) {
            continue;
        }
        let term = SkewOp::new(&prev, next)
            .expect("next <= prev by construction")
            .apply(&factors[i]);
        if term.is_zero() {
            continue;
        }
        let factor = term.permute_variables(next);
        chain.push(next.clone());
        rec_chains(chain, u, factors, interval, &partial.mul(&factor), total);
        chain.pop();
    }
}
