//! Exact sparse polynomials over Z with the S_n action on variables.
//!
//! Coefficients are machine integers with mandatory overflow checks:
//! any overflow aborts with a report instead of wrapping.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::perm::Permutation;

pub type Coeff = i64;

fn cadd(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b)
        .unwrap_or_else(|| panic!("integer overflow in polynomial arithmetic: {a} + {b}"))
}

fn cmul(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b)
        .unwrap_or_else(|| panic!("integer overflow in polynomial arithmetic: {a} * {b}"))
}

/// Exponent vector with trailing zeros trimmed; ordered graded-lex with
/// `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn from_exps(exps: &[usize]) -> Self {
        let mut e: Vec<u16> = exps.iter().map(|&x| x as u16).collect();
        while e.last() == Some(&0) {
            e.pop();
        }
        Monomial { exps: e }
    }

    /// `x_i`, 1-based.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1);
        let mut exps = vec![0u16; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> usize {
        if i >= 1 && i <= self.exps.len() {
            self.exps[i - 1] as usize
        } else {
            0
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    /// Largest variable index appearing (0 for the constant monomial).
    pub fn max_var(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let exps: Vec<usize> = (1..=n).map(|i| self.exp(i) + other.exp(i)).collect();
        Monomial::from_exps(&exps)
    }

    pub fn with_exp(&self, i: usize, e: usize) -> Monomial {
        let n = self.exps.len().max(i);
        let exps: Vec<usize> = (1..=n)
            .map(|k| if k == i { e } else { self.exp(k) })
            .collect();
        Monomial::from_exps(&exps)
    }

    /// `x_i -> x_{w(i)}`.
    pub fn permute(&self, w: &Permutation) -> Monomial {
        let n = self.exps.len().max(w.rank());
        let mut exps = vec![0usize; n];
        for i in 1..=self.exps.len() {
            exps[w.apply(i) - 1] = self.exp(i);
        }
        Monomial::from_exps(&exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        let n = self.exps.len().max(other.exps.len());
        for i in 1..=n {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Finite map from exponent vectors to nonzero integers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    /// `x_i`, 1-based.
    pub fn var(i: usize) -> Self {
        Self::from_monomial(Monomial::var(i), 1)
    }

    pub fn from_monomial(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).copied().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: Coeff) {
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(entry) => {
                *entry = cadd(*entry, c);
                if *entry == 0 {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert_add(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, &v)| (m.clone(), cmul(v, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                out.insert_add(m1.mul(m2), cmul(c1, c2));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: Coeff) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, &c1) in &self.terms {
            out.insert_add(m1.mul(m), cmul(c1, c));
        }
        out
    }

    /// Constant term.
    pub fn eta(&self) -> Coeff {
        self.coeff(&Monomial::one())
    }

    /// `x_i -> x_{w(i)}` in every monomial; a ring automorphism.
    pub fn permute_variables(&self, w: &Permutation) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| (m.permute(w), c))
                .collect(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Largest variable index appearing.
    pub fn max_var(&self) -> usize {
        self.terms.keys().map(|m| m.max_var()).max().unwrap_or(0)
    }

    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// True iff every stored coefficient is positive (vacuously true for 0).
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// Elementary symmetric polynomial `e_k(x_1..x_n)`; `e_0 = 1`,
    /// zero for `k < 0` or `k > n`.
    pub fn elementary(k: isize, n: usize) -> Polynomial {
        if k < 0 || k as usize > n {
            return Polynomial::zero();
        }
        let k = k as usize;
        let mut out = Polynomial::zero();
        let mut subset: Vec<usize> = Vec::new();
        fn rec(start: usize, k: usize, n: usize, subset: &mut Vec<usize>, out: &mut Polynomial) {
            if subset.len() == k {
                let mut exps = vec![0usize; n];
                for &i in subset.iter() {
                    exps[i - 1] = 1;
                }
                *out = out.add(&Polynomial::from_monomial(Monomial::from_exps(&exps), 1));
                return;
            }
            for i in start..=n {
                subset.push(i);
                rec(i + 1, k, n, subset, out);
                subset.pop();
            }
        }
        rec(1, k, n, &mut subset, &mut out);
        out
    }

    /// Complete homogeneous symmetric polynomial `h_k(x_1..x_n)`;
    /// `h_0 = 1`, zero for `k < 0`.
    pub fn complete(k: isize, n: usize) -> Polynomial {
        if k < 0 {
            return Polynomial::zero();
        }
        if n == 0 {
            return if k == 0 {
                Polynomial::one()
            } else {
                Polynomial::zero()
            };
        }
        let k = k as usize;
        let mut out = Polynomial::zero();
        let mut exps = vec![0usize; n];
        fn rec(i: usize, rem: usize, n: usize, exps: &mut Vec<usize>, out: &mut Polynomial) {
            if i == n {
                exps[n - 1] = rem;
                *out = out.add(&Polynomial::from_monomial(Monomial::from_exps(exps), 1));
                exps[n - 1] = 0;
                return;
            }
            for e in 0..=rem {
                exps[i - 1] = e;
                rec(i + 1, rem - e, n, exps, out);
            }
            exps[i - 1] = 0;
        }
        rec(1, k, n, &mut exps, &mut out);
        out
    }

    /// `x^{delta_n} = x_1^{n-1} x_2^{n-2} ... x_{n-1}`.
    pub fn staircase(n: usize) -> Polynomial {
        let exps: Vec<usize> = (0..n).map(|i| n - 1 - i).collect();
        Polynomial::from_monomial(Monomial::from_exps(&exps), 1)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for i in 1..=self.exps.len() {
            match self.exp(i) {
                0 => {}
                1 => parts.push(format!("x{i}")),
                e => parts.push(format!("x{i}^{e}")),
            }
        }
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Display for Polynomial {
    /// Terms in graded-lex descending order (`x1 > x2 > ...`), so the
    /// printed form is unique.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            let mag = c.abs();
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
            if m == &Monomial::one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
