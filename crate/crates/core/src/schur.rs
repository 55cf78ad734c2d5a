//! Skew Schur functions by three routes (Jacobi-Trudi determinant, SSYT
//! enumeration, Littlewood-Richardson expansion) and the Grassmannian
//! cross-check against Schubert structure constants.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::perm::Permutation;
use crate::poly::{Coeff, Monomial, Polynomial};
use crate::skew::constants_by_skew;

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    pub parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("not weakly decreasing: {p:?}")));
        }
        Ok(Partition { parts: p })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise containment `self ⊆ other`.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }
}

/// Jacobi-Trudi: `s_{lambda/mu}(X_n) = det(h_{lambda_i - mu_j - i + j})`,
/// an `n x n` determinant with the partitions zero-padded to length `n`.
pub fn skew_schur_jt(lambda: &Partition, mu: &Partition, n: usize) -> Result<Polynomial, Error> {
    check_skew_shape(lambda, mu, n)?;
    let size = n.max(lambda.len());
    let mut out = Polynomial::zero();
    for sigma in Permutation::all(size) {
        let mut term = Polynomial::constant(sigma.sign());
        for i in 1..=size {
            let j = sigma.apply(i);
            let k = lambda.part(i - 1) as isize - mu.part(j - 1) as isize - i as isize + j as isize;
            term = term.mul(&Polynomial::complete(k, n));
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn check_skew_shape(lambda: &Partition, mu: &Partition, n: usize) -> Result<(), Error> {
    if !mu.contained_in(lambda) {
        return Err(Error::Invalid(format!(
            "{:?} is not contained in {:?}",
            mu.parts, lambda.parts
        )));
    }
    if lambda.len() > n {
        return Err(Error::Invalid(format!(
            "partition {:?} has more than {n} rows",
            lambda.parts
        )));
    }
    Ok(())
}

/// A semistandard filling of the skew shape `lambda/mu`, stored row by row.
#[derive(Clone, Debug)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Entry multiplicity vector.
    pub fn weight(&self, n: usize) -> Vec<usize> {
        let mut w = vec![0usize; n];
        for row in &self.rows {
            for &e in row {
                if e > w.len() {
                    w.resize(e, 0);
                }
                w[e - 1] += 1;
            }
        }
        w
    }

    /// Reading word: right to left along rows, top row first.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        for row in &self.rows {
            word.extend(row.iter().rev());
        }
        word
    }

    /// Every prefix has at least as many `i` as `i+1`, for every `i`.
    pub fn is_lattice(&self) -> bool {
        let word = self.reading_word();
        let max = word.iter().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max + 1];
        for e in word {
            counts[e - 1] += 1;
            if e > 1 && counts[e - 1] > counts[e - 2] {
                return false;
            }
        }
        true
    }
}

/// All semistandard tableaux of shape `lambda/mu` with entries at most `n`.
pub fn semistandard_tableaux(lambda: &Partition, mu: &Partition, n: usize) -> Vec<Tableau> {
    let rows = lambda.len();
    let mut out = Vec::new();
    let mut filling: Vec<Vec<usize>> = (0..rows)
        .map(|r| vec![0; lambda.part(r) - mu.part(r)])
        .collect();
    fill(lambda, mu, n, 0, 0, &mut filling, &mut out);
    out
}

fn fill(
    lambda: &Partition,
    mu: &Partition,
    n: usize,
    mut r: usize,
    mut c: usize,
    filling: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    // advance to the next unfilled cell, row-major
    while r < lambda.len() && c >= filling[r].len() {
        r += 1;
        c = 0;
    }
    if r == lambda.len() {
        out.push(Tableau {
            rows: filling.clone(),
        });
        return;
    }
    let col = mu.part(r) + c; // absolute column of this cell
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(filling[r][c - 1]); // rows weakly increase
    }
    if r > 0 && col >= mu.part(r - 1) && col < lambda.part(r - 1) {
        lo = lo.max(filling[r - 1][col - mu.part(r - 1)] + 1); // columns strictly increase
    }
    for e in lo..=n {
        filling[r][c] = e;
        fill(lambda, mu, n, r, c + 1, filling, out);
    }
    filling[r][c] = 0;
}

/// Combinatorial formula: `s_{lambda/mu}(X_n) = sum_T x^{w(T)}`.
pub fn skew_schur_ssyt(lambda: &Partition, mu: &Partition, n: usize) -> Result<Polynomial, Error> {
    check_skew_shape(lambda, mu, n)?;
    let mut out = Polynomial::zero();
    for t in semistandard_tableaux(lambda, mu, n) {
        out = out.add(&Polynomial::from_monomial(
            Monomial::from_exps(&t.weight(n)),
            1,
        ));
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients `c^lambda_{mu nu}`: the number of
/// lattice semistandard tableaux of shape `lambda/mu` and weight `nu`.
pub fn lr_coefficients(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, usize>, Error> {
    check_skew_shape(lambda, mu, lambda.len().max(1))?;
    let n = lambda.len().max(1);
    let mut out = BTreeMap::new();
    for t in semistandard_tableaux(lambda, mu, n) {
        if !t.is_lattice() {
            continue;
        }
        let nu = Partition::new(t.weight(n))
            .expect("a lattice tableau has weakly decreasing weight");
        *out.entry(nu).or_insert(0) += 1;
    }
    Ok(out)
}

/// Cross-check for Grassmannian triples with a common descent:
/// returns the Schubert structure constant by the skew route and the
/// Littlewood-Richardson number for the corresponding shapes. The two
/// must coincide.
pub fn grassmannian_bridge(
    u: &Permutation,
    v: &Permutation,
    w: &Permutation,
) -> Result<(Coeff, usize), Error> {
    let shapes: Vec<(usize, Vec<usize>)> = [u, v, w]
        .iter()
        .map(|p| {
            p.grassmannian_shape()
                .ok_or_else(|| Error::Invalid(format!("{p} is not Grassmannian")))
        })
        .collect::<Result<_, _>>()?;
    let descents: Vec<usize> = shapes.iter().map(|s| s.0).filter(|&r| r != 0).collect();
    if descents.windows(2).any(|d| d[0] != d[1]) {
        return Err(Error::Invalid("no common descent".into()));
    }
    if w.length() != u.length() + v.length() {
        return Err(Error::Invalid(
            "degrees do not match: l(w) != l(u) + l(v)".into(),
        ));
    }
    let schubert = if v.bruhat_leq(w) {
        constants_by_skew(u, v, w)?
    } else {
        0
    };
    let mu = Partition::new(shapes[0].1.clone())?;
    let nu = Partition::new(shapes[1].1.clone())?;
    let lambda = Partition::new(shapes[2].1.clone())?;
    let lr = if mu.contained_in(&lambda) {
        lr_coefficients(&lambda, &mu)?.get(&nu).copied().unwrap_or(0)
    } else {
        0
    };
    Ok((schubert, lr))
}
