//! Text input grammars: permutations (one-line digits, comma lists, or
//! prefixed reduced words), partitions, compositions, and polynomials.
//! Monomials use explicit `*` and `^`; implicit multiplication is an error.

use crate::error::Error;
use crate::key::Composition;
use crate::perm::Permutation;
use crate::poly::{Monomial, Polynomial};
use crate::schur::Partition;

/// Any of the accepted input forms, as dispatched by prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedInput {
    Perm(Permutation),
    Word(Vec<usize>),
    Partition(Partition),
    Composition(Composition),
}

/// Dispatches on the prefix: `w:` reduced word, `p:` partition,
/// `c:` composition, anything else a one-line permutation.
pub fn parse_input(text: &str) -> Result<ParsedInput, Error> {
    if let Some(rest) = text.strip_prefix("w:") {
        return Ok(ParsedInput::Word(comma_list(rest, 2)?));
    }
    if let Some(rest) = text.strip_prefix("p:") {
        let parts = comma_list(rest, 2)?;
        return Ok(ParsedInput::Partition(Partition::new(parts)?));
    }
    if let Some(rest) = text.strip_prefix("c:") {
        return Ok(ParsedInput::Composition(Composition::new(comma_list(
            rest, 2,
        )?)));
    }
    Ok(ParsedInput::Perm(parse_permutation(text)?))
}

/// One-line notation as digits ("4312"), a comma list ("10,2,..."), or a
/// reduced word with the `w:` prefix.
pub fn parse_permutation(text: &str) -> Result<Permutation, Error> {
    if let Some(rest) = text.strip_prefix("w:") {
        let word = comma_list(rest, 2)?;
        if word.iter().any(|&a| a == 0) {
            return Err(Error::Parse {
                pos: 2,
                expected: "letters >= 1 in a reduced word".into(),
            });
        }
        return Ok(Permutation::from_word(&word));
    }
    let window = if text.contains(',') {
        comma_list(text, 0)?
    } else {
        digit_window(text)?
    };
    Permutation::from_window(&window)
}

/// Partition input, with or without the `p:` prefix.
pub fn parse_partition(text: &str) -> Result<Partition, Error> {
    let (rest, off) = match text.strip_prefix("p:") {
        Some(r) => (r, 2),
        None => (text, 0),
    };
    Partition::new(comma_list(rest, off)?)
}

/// Composition input, with or without the `c:` prefix.
pub fn parse_composition(text: &str) -> Result<Composition, Error> {
    let (rest, off) = match text.strip_prefix("c:") {
        Some(r) => (r, 2),
        None => (text, 0),
    };
    Ok(Composition::new(comma_list(rest, off)?))
}

fn comma_list(text: &str, offset: usize) -> Result<Vec<usize>, Error> {
    if text.is_empty() {
        return Err(Error::Parse {
            pos: offset,
            expected: "a comma-separated list of integers".into(),
        });
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in text.split(',') {
        let trimmed = piece.trim();
        match trimmed.parse::<usize>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(Error::Parse {
                    pos: offset + pos,
                    expected: "an unsigned integer".into(),
                })
            }
        }
        pos += piece.len() + 1;
    }
    Ok(out)
}

fn digit_window(text: &str) -> Result<Vec<usize>, Error> {
    if text.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            expected: "a permutation in one-line notation".into(),
        });
    }
    text.chars()
        .enumerate()
        .map(|(pos, c)| {
            c.to_digit(10)
                .filter(|&d| d > 0)
                .map(|d| d as usize)
                .ok_or(Error::Parse {
                    pos,
                    expected: "a digit 1-9".into(),
                })
        })
        .collect()
}

/// Recursive-descent polynomial parser over the grammar
/// `poly := ['-'] term (('+'|'-') term)*`,
/// `term := factor ('*' factor)*`,
/// `factor := integer | 'x' index ['^' exponent]`.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, Error> {
    let mut p = PolyParser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(Error::Parse {
            pos: p.pos,
            expected: "'+', '-', '*', or end of input".into(),
        });
    }
    Ok(poly)
}

struct PolyParser {
    chars: Vec<char>,
    pos: usize,
}

impl PolyParser {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Polynomial, Error> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negate = true;
        }
        let mut out = self.term()?;
        if negate {
            out = out.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    out = out.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    out = out.sub(&self.term()?);
                }
                _ => return Ok(out),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, Error> {
        let mut out = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
                out = out.mul(&self.factor()?);
            } else if self
                .peek()
                .is_some_and(|c| c == 'x' || c.is_ascii_digit())
            {
                return Err(Error::Parse {
                    pos: self.pos,
                    expected: "'*' between factors (implicit multiplication is not allowed)"
                        .into(),
                });
            } else {
                return Ok(out);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, Error> {
        self.skip_ws();
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                let i = self.integer("a variable index")?;
                if i == 0 {
                    return Err(Error::Parse {
                        pos: self.pos - 1,
                        expected: "a variable index >= 1".into(),
                    });
                }
                let mut e = 1;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    e = self.integer("an exponent")?;
                }
                let mut exps = vec![0usize; i];
                exps[i - 1] = e;
                Ok(Polynomial::from_monomial(Monomial::from_exps(&exps), 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.integer("an integer coefficient")?;
                Ok(Polynomial::constant(c as i64))
            }
            _ => Err(Error::Parse {
                pos: self.pos,
                expected: "a factor: 'x<i>[^<k>]' or an integer".into(),
            }),
        }
    }

    fn integer(&mut self, what: &str) -> Result<usize, Error> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                expected: what.into(),
            });
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse {
            pos: start,
            expected: format!("{what} within range"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_forms() {
        assert_eq!(
            parse_permutation("w:2,1,3,2,1").unwrap(),
            Permutation::from_window(&[4, 3, 1, 2]).unwrap()
        );
        assert!(parse_permutation("1234").unwrap().is_identity());
        assert_eq!(
            parse_permutation("4312").unwrap(),
            Permutation::from_window(&[4, 3, 1, 2]).unwrap()
        );
        let long = parse_permutation("10,2,3,4,5,6,7,8,9,1").unwrap();
        assert_eq!(long.apply(1), 10);
        assert_eq!(long.apply(10), 1);
    }

    #[test]
    fn prefixed_inputs() {
        assert_eq!(
            parse_input("p:2,1").unwrap(),
            ParsedInput::Partition(Partition::new(vec![2, 1]).unwrap())
        );
        assert_eq!(
            parse_input("c:0,2,1").unwrap(),
            ParsedInput::Composition(Composition::new(vec![0, 2, 1]))
        );
        assert_eq!(
            parse_input("w:2,1,3,2,1").unwrap(),
            ParsedInput::Word(vec![2, 1, 3, 2, 1])
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_permutation("40a12") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_polynomial("x1 x2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("x0").is_err());
        assert!(parse_polynomial("x1^").is_err());
        assert!(parse_polynomial("").is_err());
    }

    #[test]
    fn polynomial_values() {
        let p = parse_polynomial("x1^3*x2^2").unwrap();
        assert_eq!(
            p,
            Polynomial::from_monomial(Monomial::from_exps(&[3, 2]), 1)
        );
        let q = parse_polynomial("2*x1 - x2 + 3").unwrap();
        let expect = Polynomial::var(1)
            .scale(2)
            .sub(&Polynomial::var(2))
            .add(&Polynomial::constant(3));
        assert_eq!(q, expect);
        let r = parse_polynomial("x1^2 + x1*x4 + x4^2").unwrap();
        assert_eq!(r.to_string(), "x1^2 + x1*x4 + x4^2");
        assert_eq!(parse_polynomial("-x1 + x1").unwrap(), Polynomial::zero());
    }

    #[test]
    fn display_round_trip() {
        use crate::schubert::schubert_poly;
        for w in Permutation::all(4) {
            let p = schubert_poly(&w);
            if p.is_zero() {
                continue;
            }
            assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
        }
    }
}
