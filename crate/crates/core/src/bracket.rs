//! The bracket algebra of type A: generators `[ij]`, `i < j`, the `[w/v]`
//! elements, the operator representation `[ij] -> d_{ij}`, and a bounded
//! rewrite search for positive monomial forms.
//!
//! Elements have no known normal form; equality is decided semantically
//! through the operator representation on a monomial basis, so equalities
//! established here are operator-level.

use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::fmt;

use crate::divdiff::ddiff_ij;
use crate::error::Error;
use crate::perm::{subsequence_words, Permutation};
use crate::poly::{Coeff, Monomial, Polynomial};

pub type BracketPair = (usize, usize);

/// Sign-normalizes a generator pair: `[ji] = -[ij]`.
fn normalize_pair(i: usize, j: usize) -> (BracketPair, Coeff) {
    if i < j {
        ((i, j), 1)
    } else {
        ((j, i), -1)
    }
}

/// An integer combination of words in the generators `[ij]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BracketElement {
    pub terms: BTreeMap<Vec<BracketPair>, Coeff>,
    pub n: usize,
}

impl BracketElement {
    pub fn zero(n: usize) -> Self {
        BracketElement {
            terms: BTreeMap::new(),
            n,
        }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Vec::new(), 1);
        e
    }

    pub fn generator(i: usize, j: usize, n: usize) -> Self {
        assert!(i != j && i <= n && j <= n);
        let ((a, b), sign) = normalize_pair(i, j);
        let mut e = Self::zero(n);
        e.add_term(vec![(a, b)], sign);
        e
    }

    pub fn add_term(&mut self, word: Vec<BracketPair>, c: Coeff) {
        if c == 0 {
            return;
        }
        // adjacent equal generators vanish
        if word.windows(2).any(|w| w[0] == w[1]) {
            return;
        }
        let entry = self.terms.entry(word.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&word);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (word, &c) in &other.terms {
            out.add_term(word.clone(), c);
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Applies the represented operator to `f`: each word acts as a
    /// composition of `d_{ij}`, rightmost factor first.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (word, &c) in &self.terms {
            let mut g = f.clone();
            for &(i, j) in word.iter().rev() {
                if g.is_zero() {
                    break;
                }
                g = ddiff_ij(i, j, &g);
            }
            out = out.add(&g.scale(c));
        }
        out
    }
}

/// Conjugation of a bracket word by a permutation: `(i,j) -> (u(i), u(j))`
/// with sign normalization. This is how permutation factors move through
/// brackets in the operator representation.
pub fn conjugate(u: &Permutation, word: &[BracketPair]) -> (Vec<BracketPair>, Coeff) {
    let mut sign = 1;
    let mut out = Vec::with_capacity(word.len());
    for &(i, j) in word {
        let ((a, b), s) = normalize_pair(u.apply(i), u.apply(j));
        sign *= s;
        out.push((a, b));
    }
    (out, sign)
}

/// The element `[w/v]`: choose subsequences `b` of a reduced word of `w`
/// with `b` reduced for `v`; permutation factors are pushed to the right
/// (conjugating the brackets they pass) where they cancel against the
/// leading `v^{-1}`.
pub fn skew_element(w: &Permutation, v: &Permutation, n: usize) -> Result<BracketElement, Error> {
    skew_element_with_word(w, v, &w.lex_min_reduced_word(), n)
}

pub fn skew_element_with_word(
    w: &Permutation,
    v: &Permutation,
    word: &[usize],
    n: usize,
) -> Result<BracketElement, Error> {
    if Permutation::from_word(word) != *w || word.len() != w.length() {
        return Err(Error::NotReducedWord(word.to_vec(), w.to_string()));
    }
    if !v.bruhat_leq(w) {
        return Err(Error::NotBruhatBelow {
            v: v.to_string(),
            w: w.to_string(),
        });
    }
    let mut out = BracketElement::zero(n);
    for b in subsequence_words(word, v) {
        let mut prefix = v.inverse();
        let mut sign = 1;
        let mut pairs = Vec::new();
        let mut next_chosen = 0;
        for (idx, &a) in word.iter().enumerate() {
            let chosen = next_chosen < b.len() && b[next_chosen] == idx;
            if chosen {
                next_chosen += 1;
                prefix = prefix.compose(&Permutation::simple(a));
            } else {
                let ((p, q), s) = normalize_pair(prefix.apply(a), prefix.apply(a + 1));
                sign *= s;
                pairs.push((p, q));
            }
        }
        assert!(
            prefix.is_identity(),
            "permutation prefix must cancel against v^-1"
        );
        out.add_term(pairs, sign);
    }
    Ok(out)
}

/// Semantic equality via the operator representation: agreement on every
/// monomial of degree at most `max_deg` in `n` variables.
pub fn operator_equal(a: &BracketElement, b: &BracketElement, n: usize, max_deg: usize) -> bool {
    for m in monomial_basis(n, max_deg) {
        let f = Polynomial::from_monomial(m, 1);
        if a.apply(&f) != b.apply(&f) {
            return false;
        }
    }
    true
}

pub fn monomial_basis(n: usize, max_deg: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0usize; n];
    fn rec(i: usize, rem: usize, n: usize, exps: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        if i == n {
            out.push(Monomial::from_exps(exps));
            return;
        }
        for e in 0..=rem {
            exps[i] = e;
            rec(i + 1, rem - e, n, exps, out);
        }
        exps[i] = 0;
    }
    rec(0, max_deg, n, &mut exps, &mut out);
    out
}

/// Rewrites one adjacent generator pair. For a triangle `i < j < k` the
/// defining relations give, for every ordered product of two distinct
/// brackets from `{[ij],[jk],[ik]}`, a two-term equal combination; disjoint
/// pairs commute.
fn pair_rewrites(p: BracketPair, q: BracketPair) -> Vec<Vec<(Vec<BracketPair>, Coeff)>> {
    let (a, b) = p;
    let (c, d) = q;
    if p == q {
        return vec![vec![]]; // [ij][ij] = 0
    }
    let shares = a == c || a == d || b == c || b == d;
    if !shares {
        return vec![vec![(vec![q, p], 1)]];
    }
    // the triangle i < j < k containing both pairs
    let mut idx = vec![a, b, c, d];
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != 3 {
        return Vec::new(); // shares both indices only when equal; handled above
    }
    let (i, j, k) = (idx[0], idx[1], idx[2]);
    let ij = (i, j);
    let jk = (j, k);
    let ik = (i, k);
    let table: [((BracketPair, BracketPair), [(BracketPair, BracketPair, Coeff); 2]); 6] = [
        ((ij, jk), [(jk, ik, 1), (ik, ij, 1)]),
        ((jk, ij), [(ik, jk, 1), (ij, ik, 1)]),
        ((jk, ik), [(ij, jk, 1), (ik, ij, -1)]),
        ((ik, ij), [(ij, jk, 1), (jk, ik, -1)]),
        ((ik, jk), [(jk, ij, 1), (ij, ik, -1)]),
        ((ij, ik), [(jk, ij, 1), (ik, jk, -1)]),
    ];
    for (lhs, rhs) in table {
        if lhs == (p, q) {
            return vec![rhs
                .iter()
                .map(|&(x, y, c)| (vec![x, y], c))
                .collect()];
        }
    }
    Vec::new()
}

fn canonical_key(e: &BracketElement) -> Vec<(Vec<BracketPair>, Coeff)> {
    e.terms.iter().map(|(w, &c)| (w.clone(), c)).collect()
}

fn badness(e: &BracketElement) -> (i64, i64, usize) {
    let neg: i64 = e.terms.values().filter(|&&c| c < 0).map(|&c| -c).sum();
    let total: i64 = e.terms.values().map(|&c| c.abs()).sum();
    (neg, total, e.terms.len())
}

/// Bounded best-first search for a representation of `e` with nonnegative
/// coefficients, applying single-pair rewrites anywhere in any term.
/// `budget` counts node expansions; exhaustion is a non-answer, not a
/// refutation.
pub fn rewrite_search(e: &BracketElement, budget: usize) -> Option<BracketElement> {
    if e.is_nonnegative() {
        return Some(e.clone());
    }
    #[derive(PartialEq, Eq)]
    struct Node {
        score: (i64, i64, usize),
        elem: BracketElement,
    }
    impl Ord for Node {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            other.score.cmp(&self.score) // min-heap
        }
    }
    impl PartialOrd for Node {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    let mut heap = BinaryHeap::new();
    let mut seen = HashSet::new();
    seen.insert(canonical_key(e));
    heap.push(Node {
        score: badness(e),
        elem: e.clone(),
    });
    let mut expanded = 0;
    while let Some(Node { elem, .. }) = heap.pop() {
        if expanded >= budget {
            return None;
        }
        expanded += 1;
        for next in neighbors(&elem) {
            if next.is_nonnegative() {
                return Some(next);
            }
            let key = canonical_key(&next);
            if seen.insert(key) {
                heap.push(Node {
                    score: badness(&next),
                    elem: next,
                });
            }
        }
    }
    None
}

fn neighbors(e: &BracketElement) -> Vec<BracketElement> {
    let mut out = Vec::new();
    for (word, &c) in &e.terms {
        for pos in 0..word.len().saturating_sub(1) {
            for replacement in pair_rewrites(word[pos], word[pos + 1]) {
                let mut next = e.clone();
                next.add_term(word.clone(), -c);
                for (pair_word, rc) in replacement {
                    let mut new_word = word[..pos].to_vec();
                    new_word.extend_from_slice(&pair_word);
                    new_word.extend_from_slice(&word[pos + 2..]);
                    next.add_term(new_word, c * rc);
                }
                out.push(next);
            }
        }
    }
    out
}

impl fmt::Display for BracketElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, &c) in &self.terms {
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
            if word.is_empty() {
                write!(f, "1")?;
            } else {
                for (i, j) in word {
                    write!(f, "[{i}{j}]")?;
                }
            }
        }
        Ok(())
    }
}
