//! Skew Schubert polynomials, key polynomials, and skew key polynomials
//! built from the isobaric variant of the skew operator machinery.

use crate::divdiff::{isobaric_i, isobaric_perm};
use crate::error::Error;
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::skew::SkewOp;

/// `S_{w/v} = d_{v^{-1}w_0 / w^{-1}w_0}(x^{delta_n})`; homogeneous of
/// degree `C(n,2) - l(w) + l(v)`.
pub fn skew_schubert(w: &Permutation, v: &Permutation, n: usize) -> Result<Polynomial, Error> {
    let w0 = Permutation::longest(n);
    let big = v.inverse().compose(&w0);
    let small = w.inverse().compose(&w0);
    // small <= big iff v <= w
    let op = SkewOp::new(&big, &small).map_err(|_| Error::NotBruhatBelow {
        v: v.to_string(),
        w: w.to_string(),
    })?;
    Ok(op.apply(&Polynomial::staircase(n)))
}

/// A finite sequence of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    /// The weakly decreasing sort of the parts.
    pub fn lambda(&self) -> Vec<usize> {
        let mut l = self.parts.clone();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    /// The shortest permutation `w` with `alpha o w = lambda(alpha)`
    /// (position action: entry `i` of `w . alpha` is `alpha_{w(i)}`).
    /// Realized by the stable sort of the parts.
    pub fn sorting_perm(&self) -> Permutation {
        let n = self.parts.len();
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.parts[i - 1]), i));
        Permutation::from_window(&order).unwrap()
    }

    pub fn dominant_monomial(&self) -> Polynomial {
        Polynomial::from_monomial(Monomial::from_exps(&self.lambda()), 1)
    }
}

/// The key (Demazure) polynomial `k_alpha = pi_{w(alpha)}(x^{lambda(alpha)})`.
pub fn key_polynomial(alpha: &Composition) -> Polynomial {
    isobaric_perm(&alpha.sorting_perm(), &alpha.dominant_monomial())
}

/// The skew key polynomial `k_{alpha/v} = pi_{w(alpha)/v}(x^{lambda(alpha)})`:
/// the skew operator construction with `pi_i` in place of `d_i`.
pub fn skew_key(alpha: &Composition, v: &Permutation) -> Result<Polynomial, Error> {
    let w = alpha.sorting_perm();
    let op = SkewOp::new(&w, v)?;
    Ok(op.apply_with(&alpha.dominant_monomial(), &isobaric_i))
}

/// Skew isobaric operator `pi_{w/v}` applied to `f`.
pub fn skew_isobaric_apply(
    w: &Permutation,
    v: &Permutation,
    f: &Polynomial,
) -> Result<Polynomial, Error> {
    Ok(SkewOp::new(w, v)?.apply_with(f, &isobaric_i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divdiff::ddiff_ij;
    use crate::schubert::{reduce_mod_ideal, schubert_poly};

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    fn mono(exps: &[usize]) -> Polynomial {
        Polynomial::from_monomial(Monomial::from_exps(exps), 1)
    }

    #[test]
    fn golden_value_length_four() {
        let w = Permutation::from_word(&[1, 2, 3, 1]);
        let v = Permutation::simple(1);
        let result = skew_schubert(&w, &v, 4).unwrap();
        let expect = (&(&x(1) * &x(1)).add(&(&x(1) * &x(4)))).add(&(&x(4) * &x(4))).mul(&x(2));
        assert_eq!(result, expect);
    }

    #[test]
    fn cover_case_value() {
        // here v^{-1}w0 covers w^{-1}w0 with transposition (1,3), so the
        // value is d_13 of the staircase monomial
        let w = Permutation::from_word(&[3, 2]);
        let v = Permutation::simple(3);
        let result = skew_schubert(&w, &v, 4).unwrap();
        let expect = ddiff_ij(1, 3, &mono(&[3, 2, 1]));
        assert_eq!(expect, mono(&[1, 2, 1]).mul(&(&x(1) + &x(3))));
        assert_eq!(result, expect);
        assert_eq!(
            reduce_mod_ideal(&result, 4).unwrap(),
            mono(&[3, 1, 1]).add(&mono(&[2, 2, 1]))
        );
    }

    #[test]
    fn longest_element_gives_plain_schubert() {
        let w0 = Permutation::longest(4);
        for v in Permutation::all(4) {
            assert_eq!(skew_schubert(&w0, &v, 4).unwrap(), schubert_poly(&v));
        }
    }

    #[test]
    fn identity_base_is_a_conjugate_schubert() {
        // S_{w/1} = (w0 w w0)(S_{w w0})
        let w0 = Permutation::longest(3);
        for w in Permutation::all(3) {
            let lhs = skew_schubert(&w, &Permutation::identity(), 3).unwrap();
            let conj = w0.compose(&w).compose(&w0);
            let rhs = schubert_poly(&w.compose(&w0)).permute_variables(&conj);
            assert_eq!(lhs, rhs, "conjugation identity failed for w={w}");
        }
    }

    #[test]
    fn degree_contract() {
        for w in Permutation::all(3) {
            for v in Permutation::all(3) {
                if !v.bruhat_leq(&w) {
                    assert!(skew_schubert(&w, &v, 3).is_err());
                    continue;
                }
                let p = skew_schubert(&w, &v, 3).unwrap();
                if !p.is_zero() {
                    assert!(p.is_homogeneous());
                    assert_eq!(p.degree().unwrap(), 3 - w.length() + v.length());
                }
            }
        }
    }

    #[test]
    fn sorting_perm_examples() {
        let a = Composition::new(vec![0, 1]);
        assert_eq!(a.lambda(), vec![1, 0]);
        assert_eq!(a.sorting_perm(), Permutation::simple(1));
        let b = Composition::new(vec![0, 0, 2]);
        assert_eq!(b.sorting_perm(), Permutation::from_window(&[3, 1, 2]).unwrap());
        // dominant compositions sort with the identity
        let c = Composition::new(vec![3, 1, 1, 0]);
        assert!(c.sorting_perm().is_identity());
    }

    #[test]
    fn key_polynomial_values() {
        assert_eq!(key_polynomial(&Composition::new(vec![2, 1])), mono(&[2, 1]));
        assert_eq!(
            key_polynomial(&Composition::new(vec![0, 1])),
            &x(1) + &x(2)
        );
        assert_eq!(
            key_polynomial(&Composition::new(vec![0, 0, 2])),
            Polynomial::complete(2, 3)
        );
    }

    #[test]
    fn skew_key_trivial_cases() {
        let alpha = Composition::new(vec![0, 1, 2]);
        assert_eq!(
            skew_key(&alpha, &Permutation::identity()).unwrap(),
            key_polynomial(&alpha)
        );
        // v = w(alpha): the all-swap subsequence, cancelled by v^{-1}
        let w = alpha.sorting_perm();
        assert_eq!(skew_key(&alpha, &w).unwrap(), alpha.dominant_monomial());
    }

    #[test]
    fn skew_key_against_direct_enumeration() {
        // independent brute-force evaluation of the phi-sum for one case
        use crate::perm::subsequence_words;
        let alpha = Composition::new(vec![0, 1, 2]);
        let v = Permutation::simple(1);
        let w = alpha.sorting_perm();
        let word = w.lex_min_reduced_word();
        let f = alpha.dominant_monomial();
        let mut expect = Polynomial::zero();
        for b in subsequence_words(&word, &v) {
            let mut g = f.clone();
            for idx in (0..word.len()).rev() {
                if b.contains(&idx) {
                    g = g.permute_variables(&Permutation::simple(word[idx]));
                } else {
                    g = isobaric_i(word[idx], &g);
                }
            }
            expect = expect.add(&g.permute_variables(&v.inverse()));
        }
        assert_eq!(skew_key(&alpha, &v).unwrap(), expect);
    }

    #[test]
    fn skew_key_word_independent_small() {
        for parts in [[1usize, 0, 2], [2, 0, 1], [0, 2, 2], [1, 2, 0]] {
            let alpha = Composition::new(parts.to_vec());
            let w = alpha.sorting_perm();
            for v in Permutation::all(3) {
                if !v.bruhat_leq(&w) {
                    continue;
                }
                let reference = skew_key(&alpha, &v).unwrap();
                for word in w.reduced_words() {
                    let op = SkewOp::with_word(&w, &v, word).unwrap();
                    assert_eq!(
                        op.apply_with(&alpha.dominant_monomial(), &isobaric_i),
                        reference
                    );
                }
            }
        }
    }
}
