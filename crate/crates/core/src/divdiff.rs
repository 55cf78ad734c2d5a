//! Divided difference operators `d_{ij}`, `d_i`, `d_w` and the isobaric
//! operators `pi_i`, `pi_w`.
//!
//! `d_{ij} f = (f - t_{ij} f) / (x_i - x_j)`; the quotient is computed by
//! synthetic division in `x_i` and the remainder is asserted to vanish.

use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};

/// `d_{ij}` applied to `f`. Antisymmetric in `(i, j)`: `d_{ji} = -d_{ij}`.
pub fn ddiff_ij(i: usize, j: usize, f: &Polynomial) -> Polynomial {
    assert!(i != j, "ddiff_ij requires i != j");
    if i > j {
        return ddiff_ij(j, i, f).neg();
    }
    let t = Permutation::transposition(i, j);
    let numerator = f.sub(&f.permute_variables(&t));
    div_by_var_diff(&numerator, i, j)
}

/// Exact division of `g` by `x_i - x_j`: write `g = sum_k c_k x_i^k` with
/// `c_k` free of `x_i`; then `q_{k-1} = c_k + x_j q_k` top-down and the
/// final remainder `c_0 + x_j q_0` must be zero.
fn div_by_var_diff(g: &Polynomial, i: usize, j: usize) -> Polynomial {
    if g.is_zero() {
        return Polynomial::zero();
    }
    let d = g.terms().map(|(m, _)| m.exp(i)).max().unwrap();
    let mut coeffs: Vec<Polynomial> = vec![Polynomial::zero(); d + 1];
    for (m, &c) in g.terms() {
        let k = m.exp(i);
        coeffs[k] = coeffs[k].add(&Polynomial::from_monomial(m.with_exp(i, 0), c));
    }
    let xj = Polynomial::var(j);
    let mut quot: Vec<Polynomial> = vec![Polynomial::zero(); d];
    let mut carry = Polynomial::zero();
    for k in (1..=d).rev() {
        let qk = coeffs[k].add(&carry);
        carry = xj.mul(&qk);
        quot[k - 1] = qk;
    }
    let remainder = coeffs[0].add(&carry);
    assert!(
        remainder.is_zero(),
        "nonzero remainder dividing by x{i} - x{j}: invariant violation"
    );
    let mut out = Polynomial::zero();
    for (k, q) in quot.iter().enumerate() {
        out = out.add(&q.mul_monomial(&Monomial::var(i).with_exp(i, k), 1));
    }
    out
}

/// `d_i = d_{i,i+1}`.
pub fn ddiff_i(i: usize, f: &Polynomial) -> Polynomial {
    ddiff_ij(i, i + 1, f)
}

/// `d_a = d_{a_1} ... d_{a_p}`, rightmost letter applied first.
/// Zero whenever `a` is not reduced.
pub fn ddiff_word(word: &[usize], f: &Polynomial) -> Polynomial {
    let mut g = f.clone();
    for &a in word.iter().rev() {
        if g.is_zero() {
            return g;
        }
        g = ddiff_i(a, &g);
    }
    g
}

/// `d_w` via the lexicographically minimal reduced word of `w`.
pub fn ddiff_perm(w: &Permutation, f: &Polynomial) -> Polynomial {
    ddiff_word(&w.lex_min_reduced_word(), f)
}

/// Isobaric (Demazure) operator `pi_i f = d_i(x_i f)`; degree-preserving.
pub fn isobaric_i(i: usize, f: &Polynomial) -> Polynomial {
    ddiff_i(i, &Polynomial::var(i).mul(f))
}

/// `pi_a`, rightmost letter applied first.
pub fn isobaric_word(word: &[usize], f: &Polynomial) -> Polynomial {
    let mut g = f.clone();
    for &a in word.iter().rev() {
        g = isobaric_i(a, &g);
    }
    g
}

/// `pi_w` via the lexicographically minimal reduced word of `w`.
pub fn isobaric_perm(w: &Permutation, f: &Polynomial) -> Polynomial {
    isobaric_word(&w.lex_min_reduced_word(), f)
}
