//! Schubert polynomials, expansion in the Schubert basis, reduction
//! modulo `I_n`, the pairing `<,>_0`, and structure constants by direct
//! multiplication.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use crate::divdiff::{ddiff_i, ddiff_perm};
use crate::error::Error;
use crate::perm::Permutation;
use crate::poly::{Coeff, Polynomial};

static SCHUBERT_CACHE: Lazy<RwLock<HashMap<Permutation, Polynomial>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The Schubert polynomial of `w`, computed top-down from the staircase
/// monomial by single divided difference steps and memoized per
/// permutation. Stable under the rank embedding, so the ambient rank is
/// taken from `w` itself.
pub fn schubert_poly(w: &Permutation) -> Polynomial {
    if let Some(p) = SCHUBERT_CACHE.read().unwrap().get(w) {
        return p.clone();
    }
    let n = w.rank();
    let result = if w.is_identity() {
        Polynomial::one()
    } else if w == &Permutation::longest(n) {
        Polynomial::staircase(n)
    } else {
        // first ascent i: S_w = d_i(S_{w s_i}) with l(w s_i) = l(w) + 1
        let i = (1..n)
            .find(|&i| w.apply(i) < w.apply(i + 1))
            .expect("a non-longest element has an ascent");
        let longer = w.compose(&Permutation::simple(i));
        ddiff_i(i, &schubert_poly(&longer))
    };
    SCHUBERT_CACHE
        .write()
        .unwrap()
        .insert(w.clone(), result.clone());
    result
}

/// A class in `P_n / I_n` written in the Schubert basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchubertExpansion {
    pub coeffs: BTreeMap<Permutation, Coeff>,
    pub n: usize,
}

impl SchubertExpansion {
    pub fn zero(n: usize) -> Self {
        SchubertExpansion {
            coeffs: BTreeMap::new(),
            n,
        }
    }

    pub fn coeff(&self, w: &Permutation) -> Coeff {
        self.coeffs.get(w).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Permutation, c: Coeff) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(w.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&w);
        }
    }

    /// The representative `sum c_w S_w` as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w, &c) in &self.coeffs {
            out = out.add(&schubert_poly(w).scale(c));
        }
        out
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, &c) in &self.coeffs {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "S[{}]", w.window_string(self.n))?;
        }
        Ok(())
    }
}

/// Expands `f` over the Schubert basis of `S_n`: per homogeneous degree
/// `d`, the coefficient of `S_w` with `l(w) = d` is `eta(d_w f)`.
/// Components of degree beyond `n(n-1)/2` are rejected.
pub fn schubert_expand(f: &Polynomial, n: usize) -> Result<SchubertExpansion, Error> {
    let max = n * (n - 1) / 2;
    let mut out = SchubertExpansion::zero(n);
    if f.is_zero() {
        return Ok(out);
    }
    let top = f.degree().unwrap();
    if top > max {
        return Err(Error::DegreeTooLarge {
            degree: top,
            max,
            n,
        });
    }
    let by_length = perms_by_length(n);
    for d in 0..=top {
        let fd = f.homogeneous_component(d);
        if fd.is_zero() {
            continue;
        }
        for w in &by_length[d] {
            let c = ddiff_perm(w, &fd).eta();
            out.add_term(w.clone(), c);
        }
    }
    Ok(out)
}

fn perms_by_length(n: usize) -> Vec<Vec<Permutation>> {
    let mut buckets = vec![Vec::new(); n * (n - 1) / 2 + 1];
    for w in Permutation::all(n) {
        buckets[w.length()].push(w);
    }
    buckets
}

/// Canonical representative of `f` modulo `I_n`: the polynomial
/// `sum c_w S_w` from `schubert_expand`. Idempotent; kills `I_n`.
pub fn reduce_mod_ideal(f: &Polynomial, n: usize) -> Result<Polynomial, Error> {
    Ok(schubert_expand(f, n)?.to_polynomial())
}

/// `<f, g>_0 = eta(d_{w_0}(f g))` in `S_n`.
pub fn pairing0(f: &Polynomial, g: &Polynomial, n: usize) -> Coeff {
    ddiff_perm(&Permutation::longest(n), &f.mul(g)).eta()
}

/// Structure constants by direct multiplication:
/// the expansion of `S_u S_v` modulo `I_n`. Homogeneous components above
/// the top degree of `P_n/I_n` lie in `I_n` and are dropped up front.
pub fn constants_by_product(
    u: &Permutation,
    v: &Permutation,
    n: usize,
) -> Result<SchubertExpansion, Error> {
    let prod = schubert_poly(u).mul(&schubert_poly(v));
    let max = n * (n - 1) / 2;
    let mut inside = Polynomial::zero();
    for d in 0..=max {
        inside = inside.add(&prod.homogeneous_component(d));
    }
    schubert_expand(&inside, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn p(w: &[usize]) -> Permutation {
        Permutation::from_window(w).unwrap()
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i)
    }

    #[test]
    fn schubert_poly_golden() {
        // S_{1342} = x1 x2 + x1 x3 + x2 x3
        assert_eq!(
            schubert_poly(&Permutation::from_word(&[2, 3])),
            Polynomial::elementary(2, 3)
        );
        assert_eq!(schubert_poly(&Permutation::identity()), Polynomial::one());
        // S_{4231} = x1^3 x2 x3
        assert_eq!(
            schubert_poly(&Permutation::from_word(&[1, 2, 3, 2, 1])),
            Polynomial::from_monomial(Monomial::from_exps(&[3, 1, 1]), 1)
        );
        // S_{2143} = x1^2 + x1 x2 + x1 x3
        assert_eq!(
            schubert_poly(&Permutation::from_word(&[1, 3])),
            &(&x(1) * &x(1)) + &(&x(1) * &(&x(2) + &x(3)))
        );
        // S_{312} = x1^2
        assert_eq!(
            schubert_poly(&Permutation::from_word(&[2, 1])),
            &x(1) * &x(1)
        );
    }

    #[test]
    fn positivity_and_degree_s5() {
        for w in Permutation::all(5) {
            let s = schubert_poly(&w);
            assert!(s.is_nonnegative(), "S_{w} has a nonpositive coefficient");
            assert!(s.max_var() <= 4);
            if !w.is_identity() {
                assert!(s.is_homogeneous());
                assert_eq!(s.degree(), Some(w.length()));
            }
        }
    }

    #[test]
    fn ddiff_on_schubert_s4() {
        // d_v S_w = S_{w v^{-1}} when lengths subtract, else 0
        for w in Permutation::all(4) {
            for v in Permutation::all(4) {
                let lhs = ddiff_perm(&v, &schubert_poly(&w));
                let target = w.compose(&v.inverse());
                if target.length() + v.length() == w.length() {
                    assert_eq!(lhs, schubert_poly(&target));
                } else {
                    assert!(lhs.is_zero());
                }
            }
        }
    }

    #[test]
    fn stability() {
        for w in Permutation::all(4) {
            // recompute in S_6 directly from the definition
            let m = 6;
            let big = ddiff_perm(
                &w.inverse().compose(&Permutation::longest(m)),
                &Polynomial::staircase(m),
            );
            assert_eq!(big, schubert_poly(&w));
        }
    }

    #[test]
    fn expand_quadratic_golden() {
        let f = &(&x(1) * &x(1)).add(&(&x(1) * &x(4))) + &(&x(4) * &x(4));
        let exp = schubert_expand(&f, 4).unwrap();
        // coefficients (+1, -1, +1) on the three length-two permutations
        let s23 = Permutation::from_word(&[2, 3]);
        let s13 = Permutation::from_word(&[1, 3]);
        let s21 = Permutation::from_word(&[2, 1]);
        assert_eq!(exp.coeff(&s23), 1);
        assert_eq!(exp.coeff(&s13), -1);
        assert_eq!(exp.coeff(&s21), 1);
        assert_eq!(exp.coeffs.len(), 3);
        // and the canonical representative is x2 x3
        assert_eq!(exp.to_polynomial(), &x(2) * &x(3));
    }

    #[test]
    fn expand_of_schubert_is_indicator() {
        for w in Permutation::all(4) {
            let exp = schubert_expand(&schubert_poly(&w), 4).unwrap();
            assert_eq!(exp.coeffs.len(), 1);
            assert_eq!(exp.coeff(&w), 1);
        }
    }

    #[test]
    fn expand_linearity_small() {
        // e1 * x1 and x1 * (x1+x2+x3) agree mod I_3
        let f = Polynomial::elementary(1, 3).mul(&x(1));
        let g = x(1).mul(&(&(&x(1) + &x(2)) + &x(3)));
        assert_eq!(
            schubert_expand(&f, 3).unwrap(),
            schubert_expand(&g, 3).unwrap()
        );
    }

    #[test]
    fn reduce_mod_ideal_properties() {
        let f = &(&x(1) * &x(1)).add(&(&x(1) * &x(4))) + &(&x(4) * &x(4));
        let r = reduce_mod_ideal(&f, 4).unwrap();
        assert_eq!(r, &x(2) * &x(3));
        // idempotent
        assert_eq!(reduce_mod_ideal(&r, 4).unwrap(), r);
        // kills generators of I_n
        for k in 1..=4isize {
            let gen = Polynomial::elementary(k, 4).mul(&(&x(1) * &x(3)));
            if gen.degree().unwrap_or(0) <= 6 {
                assert!(reduce_mod_ideal(&gen, 4).unwrap().is_zero());
            }
        }
        // a non-dominant case: x1^2 x2 x3 (x2 + x3) = -x1^3 x2 x3 mod I_4
        let g = Polynomial::from_monomial(Monomial::from_exps(&[2, 1, 1]), 1)
            .mul(&(&x(2) + &x(3)));
        assert_eq!(
            reduce_mod_ideal(&g, 4).unwrap(),
            Polynomial::from_monomial(Monomial::from_exps(&[3, 1, 1]), -1)
        );
        // expand(reduce(f)) == expand(f)
        assert_eq!(
            schubert_expand(&reduce_mod_ideal(&f, 4).unwrap(), 4).unwrap(),
            schubert_expand(&f, 4).unwrap()
        );
    }

    #[test]
    fn degree_too_large_is_an_error() {
        let f = Polynomial::from_monomial(Monomial::from_exps(&[4]), 1);
        assert!(matches!(
            schubert_expand(&f, 3),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn pairing_orthogonality_s3() {
        let w0 = Permutation::longest(3);
        for w in Permutation::all(3) {
            for u in Permutation::all(3) {
                let val = pairing0(&schubert_poly(&w), &schubert_poly(&u), 3);
                let expect = if u == w0.compose(&w) { 1 } else { 0 };
                assert_eq!(val, expect, "pairing failed for w={w}, u={u}");
            }
        }
        assert_eq!(
            pairing0(&schubert_poly(&p(&[2, 1, 3])), &schubert_poly(&p(&[2, 1, 3])), 3),
            0
        );
    }

    #[test]
    fn constants_by_product_basics() {
        let s1 = p(&[2, 1, 3]);
        let exp = constants_by_product(&s1, &s1, 3).unwrap();
        assert_eq!(exp.coeffs.len(), 1);
        assert_eq!(exp.coeff(&p(&[3, 1, 2])), 1);
        for v in Permutation::all(3) {
            let exp = constants_by_product(&Permutation::identity(), &v, 3).unwrap();
            assert_eq!(exp.coeffs.len(), if v.is_identity() { 1 } else { 1 });
            assert_eq!(exp.coeff(&v), 1);
        }
    }

    #[test]
    fn product_constants_positive_at_top_degree() {
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                let exp = constants_by_product(&u, &v, 3).unwrap();
                for (w, &c) in &exp.coeffs {
                    if w.length() == u.length() + v.length() {
                        assert!(c >= 0);
                    }
                }
            }
        }
    }
}
