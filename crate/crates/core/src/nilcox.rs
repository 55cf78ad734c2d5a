//! The nilCoxeter algebra, the factorized Schubert expression, the edge
//! positivity check, and the weighted-path route to structure constants.

use std::collections::BTreeMap;

use crate::divdiff::ddiff_ij;
use crate::error::Error;
use crate::perm::Permutation;
use crate::poly::{Coeff, Polynomial};
use crate::schubert::{schubert_poly, SchubertExpansion};

/// Element of `P ⊗ NC`: a finite map from basis permutations to polynomial
/// coefficients. `group` is the symmetric group size, so the generators are
/// `e_1 .. e_{group-1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilCoxElement {
    pub terms: BTreeMap<Permutation, Polynomial>,
    pub group: usize,
}

impl NilCoxElement {
    pub fn zero(group: usize) -> Self {
        NilCoxElement {
            terms: BTreeMap::new(),
            group,
        }
    }

    pub fn one(group: usize) -> Self {
        let mut e = Self::zero(group);
        e.add_term(Permutation::identity(), Polynomial::one());
        e
    }

    /// The generator `e_i` as an element.
    pub fn generator(i: usize, group: usize) -> Self {
        assert!(i >= 1 && i < group);
        let mut e = Self::zero(group);
        e.add_term(Permutation::simple(i), Polynomial::one());
        e
    }

    pub fn coeff(&self, w: &Permutation) -> Polynomial {
        self.terms.get(w).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn add_term(&mut self, w: Permutation, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_insert_with(Polynomial::zero);
        *slot = slot.add(&p);
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.clone());
        }
        out
    }

    pub fn scale(&self, p: &Polynomial) -> Self {
        let mut out = Self::zero(self.group);
        for (w, q) in &self.terms {
            out.add_term(w.clone(), q.mul(p));
        }
        out
    }

    /// Bilinear extension of `e_u e_v = e_{uv}` when lengths add, else 0.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.group, other.group);
        let mut out = Self::zero(self.group);
        for (u, p) in &self.terms {
            for (v, q) in &other.terms {
                let uv = u.compose(v);
                if uv.length() == u.length() + v.length() {
                    out.add_term(uv, p.mul(q));
                }
            }
        }
        out
    }

    /// `1 + x e_i` as a factor.
    pub fn line_factor(i: usize, x: &Polynomial, group: usize) -> Self {
        let mut e = Self::one(group);
        e.add_term(Permutation::simple(i), x.clone());
        e
    }

    /// `A_i(x) = (1 + x e_{group-1})(1 + x e_{group-2}) ... (1 + x e_i)`.
    pub fn a_factor(i: usize, x: &Polynomial, group: usize) -> Self {
        let mut out = Self::one(group);
        for j in (i..group).rev() {
            out = out.mul(&Self::line_factor(j, x, group));
        }
        out
    }
}

/// The Schubert expression `A_1(x_1) ... A_n(x_n)` with `n` generators;
/// the coefficient of `e_w` is `S_w` for every `w` in `S_{n+1}`.
pub fn schubert_expression(n: usize) -> NilCoxElement {
    let group = n + 1;
    let mut out = NilCoxElement::one(group);
    for i in 1..=n {
        out = out.mul(&NilCoxElement::a_factor(i, &Polynomial::var(i), group));
    }
    out
}

/// One entry of the edge positivity report: the permutation, the polynomial
/// `d_{ij} S_w`, and whether it has only nonnegative coefficients.
#[derive(Clone, Debug)]
pub struct PositivityEntry {
    pub w: Permutation,
    pub image: Polynomial,
    pub nonnegative: bool,
}

/// Applies `d_{ij}` to every Schubert polynomial indexed by `S_{n+1}` and
/// reports per-permutation nonnegativity.
pub fn theorem1_check(i: usize, j: usize, n: usize) -> Vec<PositivityEntry> {
    assert!(i < j && j <= n + 1);
    Permutation::all(n + 1)
        .into_iter()
        .map(|w| {
            let image = ddiff_ij(i, j, &schubert_poly(&w));
            let nonnegative = image.is_nonnegative();
            PositivityEntry {
                w,
                image,
                nonnegative,
            }
        })
        .collect()
}

/// Structure constants by weighted paths in the Bruhat order: enumerates
/// the chain systems `{v_0^(s) >= ... >= v_{n-s}^(s)}` for `s = 1..n-1`
/// with `v_0^(1) = w`, each next chain starting where the previous ended,
/// and the last chain ending at `u`. Each step contributes `1` (no move),
/// `+e_{n-i}` or `-e_{n-i}` (a Bruhat edge whose transposition touches
/// `s`), and the accumulated nilCoxeter products give `v -> c^w_{uv}`.
pub fn theorem2_constants(
    w: &Permutation,
    u: &Permutation,
    n: usize,
) -> Result<SchubertExpansion, Error> {
    if !u.bruhat_leq(w) {
        return Err(Error::NotBruhatBelow {
            v: u.to_string(),
            w: w.to_string(),
        });
    }
    // flattened step list: (s, i) for s = 1..n-1, i = 1..n-s
    let mut steps = Vec::new();
    for s in 1..n {
        for i in 1..=n - s {
            steps.push((s, i));
        }
    }
    let mut out = SchubertExpansion::zero(n);
    let mut accum: BTreeMap<Permutation, Coeff> = BTreeMap::new();
    accum.insert(Permutation::identity(), 1);
    dfs(&steps, 0, w, u, n, &accum, &mut out);
    Ok(out)
}

fn nc_mul_simple(accum: &BTreeMap<Permutation, Coeff>, k: usize, sign: Coeff) -> BTreeMap<Permutation, Coeff> {
    let s = Permutation::simple(k);
    let mut out = BTreeMap::new();
    for (p, &c) in accum {
        let ps = p.compose(&s);
        if ps.length() == p.length() + 1 {
            *out.entry(ps).or_insert(0) += c * sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn dfs(
    steps: &[(usize, usize)],
    idx: usize,
    cur: &Permutation,
    u: &Permutation,
    n: usize,
    accum: &BTreeMap<Permutation, Coeff>,
    out: &mut SchubertExpansion,
) {
    if accum.is_empty() {
        return;
    }
    if idx == steps.len() {
        if cur == u {
            for (v, &c) in accum {
                out.add_term(v.clone(), c);
            }
        }
        return;
    }
    let (s, i) = steps[idx];
    // the single step of the last chain must land on u
    let last_chain_step = s == n - 1;
    // no move: the factor is the scalar 1
    if !last_chain_step || cur == u {
        dfs(steps, idx + 1, cur, u, n, accum, out);
    }
    // Bruhat edge cur = v t_{ab}; contributes only when s is a moved index
    for (v, (a, b)) in cur.covers_down() {
        if last_chain_step && &v != u {
            continue;
        }
        let sign = if a == s {
            1
        } else if b == s {
            -1
        } else {
            continue;
        };
        let next = nc_mul_simple(accum, n - i, sign);
        dfs(steps, idx + 1, &v, u, n, &next, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::constants_by_product;

    fn p(w: &[usize]) -> Permutation {
        Permutation::from_window(w).unwrap()
    }

    #[test]
    fn basis_multiplication() {
        let e1 = NilCoxElement::generator(1, 4);
        let e2 = NilCoxElement::generator(2, 4);
        assert_eq!(e1.mul(&e1), NilCoxElement::zero(4));
        let prod = e1.mul(&e2);
        assert_eq!(
            prod.coeff(&Permutation::from_word(&[1, 2])),
            Polynomial::one()
        );
        assert_eq!(prod.terms.len(), 1);
    }

    #[test]
    fn line_factors_commute_in_same_row() {
        // (1 + x e_i)(1 + y e_i) = (1 + y e_i)(1 + x e_i)
        let x = Polynomial::var(1);
        let y = Polynomial::var(2);
        for i in 1..=3 {
            let a = NilCoxElement::a_factor(i, &x, 4);
            let b = NilCoxElement::a_factor(i, &y, 4);
            assert_eq!(a.mul(&b), b.mul(&a));
        }
    }

    #[test]
    fn e_w_is_well_defined() {
        for w in Permutation::all(4) {
            let reference: Vec<_> = w
                .reduced_words()
                .into_iter()
                .map(|word| {
                    let mut e = NilCoxElement::one(4);
                    for a in word {
                        e = e.mul(&NilCoxElement::generator(a, 4));
                    }
                    e
                })
                .collect();
            for e in &reference {
                assert_eq!(e, &reference[0]);
                assert_eq!(e.coeff(&w), Polynomial::one());
                assert_eq!(e.terms.len(), 1);
            }
        }
    }

    #[test]
    fn schubert_expression_small() {
        let e = schubert_expression(1);
        assert_eq!(e.coeff(&Permutation::identity()), Polynomial::one());
        assert_eq!(e.coeff(&Permutation::simple(1)), Polynomial::var(1));
        assert_eq!(e.terms.len(), 2);
    }

    #[test]
    fn schubert_expression_s4() {
        let e = schubert_expression(3);
        assert_eq!(e.terms.len(), 24);
        assert_eq!(
            e.coeff(&Permutation::longest(4)),
            Polynomial::staircase(4)
        );
        for w in Permutation::all(4) {
            assert_eq!(e.coeff(&w), schubert_poly(&w), "mismatch at w={w}");
        }
    }

    #[test]
    fn theorem1_small_cases() {
        for entry in theorem1_check(1, 2, 2) {
            assert!(entry.nonnegative, "failed at w={}", entry.w);
        }
        // w = 4231: d13(x1^3 x2 x3) is nonnegative even though its mod-I4
        // reduction is not
        let report = theorem1_check(1, 3, 3);
        let w = p(&[4, 2, 3, 1]);
        let entry = report.iter().find(|e| e.w == w).unwrap();
        assert!(entry.nonnegative);
        assert_eq!(
            entry.image,
            Polynomial::var(1)
                .mul(&Polynomial::var(2))
                .mul(&Polynomial::var(3))
                .mul(&Polynomial::var(1).add(&Polynomial::var(3)))
        );
        let id_entry = report
            .iter()
            .find(|e| e.w == Permutation::identity())
            .unwrap();
        assert!(id_entry.image.is_zero());
    }

    #[test]
    fn theorem2_trivial_and_s3() {
        for w in Permutation::all(3) {
            let exp = theorem2_constants(&w, &w, 3).unwrap();
            assert_eq!(exp.coeff(&Permutation::identity()), 1);
            assert_eq!(exp.coeffs.len(), 1);
        }
        for w in Permutation::all(3) {
            for u in Permutation::all(3) {
                if !u.bruhat_leq(&w) {
                    continue;
                }
                let paths = theorem2_constants(&w, &u, 3).unwrap();
                for v in Permutation::all(3) {
                    let expect = if v.length() + u.length() == w.length() {
                        constants_by_product(&u, &v, 3).unwrap().coeff(&w)
                    } else {
                        0
                    };
                    assert_eq!(
                        paths.coeff(&v),
                        expect,
                        "path route mismatch at w={w}, u={u}, v={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn theorem2_rejects_incomparable() {
        let w = Permutation::simple(1);
        let u = Permutation::simple(2);
        assert!(theorem2_constants(&w, &u, 3).is_err());
    }
}
