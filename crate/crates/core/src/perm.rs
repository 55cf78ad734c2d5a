//! Symmetric-group core: permutations in one-line notation, lengths,
//! reduced words, Bruhat order and covers.
//!
//! Composition convention: `(u.compose(v))(i) = u(v(i))`, so in a word
//! `s_{a_1} ... s_{a_p}` the rightmost letter acts on points first.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use once_cell::sync::Lazy;

use crate::error::Error;

/// A permutation of `{1..n}` in one-line notation. Trailing fixed points
/// are trimmed so that equality respects the stability embedding
/// `S_n -> S_m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Permutation {
    window: Vec<u8>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// Builds a permutation from its one-line window, validating that it is
    /// a bijection of `{1..n}`.
    pub fn from_window(window: &[usize]) -> Result<Self, Error> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidWindow(format!("{window:?}")));
            }
            seen[v] = true;
        }
        let mut w: Vec<u8> = window.iter().map(|&v| v as u8).collect();
        while let Some(&last) = w.last() {
            if last as usize == w.len() {
                w.pop();
            } else {
                break;
            }
        }
        Ok(Permutation { window: w })
    }

    /// The simple transposition `s_i = (i, i+1)`, `i >= 1`.
    pub fn simple(i: usize) -> Self {
        assert!(i >= 1, "simple transposition index must be >= 1");
        Self::transposition(i, i + 1)
    }

    /// The transposition `t_{ij}` interchanging `i` and `j`.
    pub fn transposition(i: usize, j: usize) -> Self {
        assert!(i != j && i >= 1 && j >= 1);
        let n = i.max(j);
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, j - 1);
        Self::from_window(&w).unwrap()
    }

    /// The longest element `w_0` of `S_n`.
    pub fn longest(n: usize) -> Self {
        Self::from_window(&(1..=n).rev().collect::<Vec<_>>()).unwrap()
    }

    /// Image of the point `i` (1-based); points beyond the window are fixed.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1] as usize
        } else {
            i
        }
    }

    /// Smallest `n` with `self` in `S_n` (0 for the identity).
    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// One-line window embedded into `S_n`.
    pub fn window(&self, n: usize) -> Vec<usize> {
        (1..=n.max(self.rank())).map(|i| self.apply(i)).collect()
    }

    pub fn inverse(&self) -> Self {
        let n = self.rank();
        let mut w = vec![0usize; n];
        for i in 1..=n {
            w[self.apply(i) - 1] = i;
        }
        Self::from_window(&w).unwrap()
    }

    /// `(u o v)(i) = u(v(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.rank().max(other.rank());
        let w: Vec<usize> = (1..=n).map(|i| self.apply(other.apply(i))).collect();
        Self::from_window(&w).unwrap()
    }

    /// Right multiplication by `t_{ij}`: swaps the entries in positions `i`, `j`.
    pub fn mul_t(&self, i: usize, j: usize) -> Self {
        self.compose(&Self::transposition(i, j))
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// `(-1)^{l(w)}`.
    pub fn sign(&self) -> i64 {
        if self.length() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `(l(w), epsilon(w))`.
    pub fn length_sign(&self) -> (usize, i64) {
        let l = self.length();
        (l, if l % 2 == 0 { 1 } else { -1 })
    }

    /// Composes `s_{a_1} ... s_{a_p}`, rightmost letter acting first.
    pub fn from_word(word: &[usize]) -> Self {
        let mut w = Self::identity();
        for &a in word {
            w = w.compose(&Self::simple(a));
        }
        w
    }

    /// Letters `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        let w = &self.window;
        (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
    }

    /// Lexicographically minimal reduced word, built greedily: at each step
    /// take the smallest `i` with `l(s_i w) < l(w)`.
    pub fn lex_min_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while !w.is_identity() {
            let winv = w.inverse();
            let i = (1..w.rank())
                .find(|&i| winv.apply(i) > winv.apply(i + 1))
                .expect("non-identity permutation has a left descent");
            word.push(i);
            w = Self::simple(i).compose(&w);
        }
        word
    }

    /// All reduced words of `w`, memoized per permutation.
    pub fn reduced_words(&self) -> Vec<Vec<usize>> {
        static CACHE: Lazy<RwLock<HashMap<Permutation, Vec<Vec<usize>>>>> =
            Lazy::new(|| RwLock::new(HashMap::new()));
        if let Some(v) = CACHE.read().unwrap().get(self) {
            return v.clone();
        }
        let result = if self.is_identity() {
            vec![Vec::new()]
        } else {
            let winv = self.inverse();
            let mut words = Vec::new();
            for i in 1..self.rank() {
                if winv.apply(i) > winv.apply(i + 1) {
                    let rest = Self::simple(i).compose(self);
                    for mut tail in rest.reduced_words() {
                        tail.insert(0, i);
                        words.push(tail);
                    }
                }
            }
            words
        };
        CACHE
            .write()
            .unwrap()
            .insert(self.clone(), result.clone());
        result
    }

    /// Bruhat order: `self <= w` iff some subsequence of a reduced word of
    /// `w` is a reduced word of `self`.
    pub fn bruhat_leq(&self, w: &Self) -> bool {
        self.bruhat_leq_with_word(&w.lex_min_reduced_word())
    }

    /// Same test against an explicitly chosen reduced word of `w`.
    pub fn bruhat_leq_with_word(&self, word: &[usize]) -> bool {
        !subsequence_words(word, self).is_empty()
    }

    /// Lehmer code `c_i = #{j > i : w(j) < w(i)}`.
    pub fn code(&self) -> Vec<usize> {
        let n = self.rank();
        let w = self.window(n);
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| w[j] < w[i]).count())
            .collect()
    }

    /// When `w` has at most one descent, the descent position `r` and the
    /// partition obtained by sorting the code (`r = 0` for the identity).
    pub fn grassmannian_shape(&self) -> Option<(usize, Vec<usize>)> {
        let d = self.descents();
        match d.len() {
            0 => Some((0, Vec::new())),
            1 => {
                let mut shape = self.code();
                shape.sort_unstable_by(|a, b| b.cmp(a));
                while shape.last() == Some(&0) {
                    shape.pop();
                }
                Some((d[0], shape))
            }
            _ => None,
        }
    }

    /// All `v` covered by `self` in Bruhat order, with the transposition:
    /// `self = v * t_{ab}` and `l(self) = l(v) + 1`.
    pub fn covers_down(&self) -> Vec<(Permutation, (usize, usize))> {
        let n = self.rank();
        let mut out = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                if self.apply(a) > self.apply(b) {
                    let v = self.mul_t(a, b);
                    if v.length() + 1 == self.length() {
                        out.push((v, (a, b)));
                    }
                }
            }
        }
        out
    }

    /// One-line window of `self` embedded in `S_n`, as a digit string
    /// (comma-separated beyond rank 9).
    pub fn window_string(&self, n: usize) -> String {
        let n = n.max(self.rank());
        if n <= 9 {
            (1..=n).map(|i| self.apply(i).to_string()).collect()
        } else {
            let parts: Vec<String> = (1..=n).map(|i| self.apply(i).to_string()).collect();
            parts.join(",")
        }
    }

    /// All elements of `S_n`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut window: Vec<usize> = (1..=n).collect();
        heap_permutations(&mut window, n, &mut out);
        out.sort();
        out
    }
}

fn heap_permutations(window: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k <= 1 {
        out.push(Permutation::from_window(window).unwrap());
        return;
    }
    for i in 0..k {
        heap_permutations(window, k - 1, out);
        if k % 2 == 0 {
            window.swap(i, k - 1);
        } else {
            window.swap(0, k - 1);
        }
    }
}

/// Index sets `b` of subsequences of `word` that are reduced words for `v`.
///
/// A chosen prefix `s_{b_1}..s_{b_k} = u` can complete to `v` with
/// `l(v) - k` more letters iff `l(u^{-1} v) = l(v) - k`; this prunes the
/// enumeration exactly.
pub fn subsequence_words(word: &[usize], v: &Permutation) -> Vec<Vec<usize>> {
    let lv = v.length();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        word: &[usize],
        idx: usize,
        u: &Permutation,
        k: usize,
        v: &Permutation,
        lv: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == lv {
            if u == v {
                out.push(chosen.clone());
            }
            return;
        }
        if word.len() - idx < lv - k {
            return;
        }
        // take word[idx]
        let s = Permutation::simple(word[idx]);
        let u2 = u.compose(&s);
        if u2.length() == k + 1 && u2.inverse().compose(v).length() == lv - (k + 1) {
            chosen.push(idx);
            rec(word, idx + 1, &u2, k + 1, v, lv, chosen, out);
            chosen.pop();
        }
        // skip word[idx]
        rec(word, idx + 1, u, k, v, lv, chosen, out);
    }
    rec(
        word,
        0,
        &Permutation::identity(),
        0,
        v,
        lv,
        &mut chosen,
        &mut out,
    );
    out
}

/// Returns `(i, j)` with `w = v * t_{ij}` and `l(w) = l(v) + 1`, if any.
pub fn cover_edge(v: &Permutation, w: &Permutation) -> Option<(usize, usize)> {
    if w.length() != v.length() + 1 {
        return None;
    }
    let n = v.rank().max(w.rank());
    for i in 1..=n {
        for j in i + 1..=n {
            if &v.mul_t(i, j) == w {
                return Some((i, j));
            }
        }
    }
    None
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let n = self.rank();
        if n <= 9 {
            for i in 1..=n {
                write!(f, "{}", self.apply(i))?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = (1..=n).map(|i| self.apply(i).to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}
