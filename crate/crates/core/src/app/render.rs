//! Output rendering. Polynomials serialize as sorted lists of
//! {exponents, coefficient} records in graded-lex descending order;
//! Schubert-basis expansions as {window, coefficient} records.

use serde_json::json;

use crate::poly::Polynomial;
use crate::schubert::SchubertExpansion;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One polynomial in the chosen format, newline-terminated.
pub fn polynomial(p: &Polynomial, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{p}\n"),
        Format::Json => {
            let mut v = serde_json::to_string(&polynomial_json(p)).unwrap();
            v.push('\n');
            v
        }
        Format::Csv => {
            let mut out = String::from("monomial,coefficient\n");
            for (m, c) in p.terms().rev() {
                out.push_str(&format!("{m},{c}\n"));
            }
            out
        }
    }
}

pub fn polynomial_json(p: &Polynomial) -> serde_json::Value {
    let terms: Vec<_> = p
        .terms()
        .rev()
        .map(|(m, c)| json!({"exponents": m.exps(), "coefficient": c}))
        .collect();
    json!({ "terms": terms })
}

/// A Schubert-basis expansion in the chosen format.
pub fn expansion(e: &SchubertExpansion, fmt: Format) -> String {
    match fmt {
        Format::Text => format!("{e}\n"),
        Format::Json => {
            let terms: Vec<_> = e
                .coeffs
                .iter()
                .map(|(w, c)| json!({"window": w.window(e.n), "coefficient": c}))
                .collect();
            let mut v = serde_json::to_string(&json!({ "terms": terms })).unwrap();
            v.push('\n');
            v
        }
        Format::Csv => {
            let mut out = String::from("window,coefficient\n");
            for (w, c) in &e.coeffs {
                out.push_str(&format!("{},{c}\n", w.window_string(e.n)));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use crate::schubert::schubert_poly;

    #[test]
    fn text_and_csv_forms() {
        let p = schubert_poly(&Permutation::from_word(&[2, 3]));
        assert_eq!(polynomial(&p, Format::Text), "x1*x2 + x1*x3 + x2*x3\n");
        assert_eq!(
            polynomial(&p, Format::Csv),
            "monomial,coefficient\nx1*x2,1\nx1*x3,1\nx2*x3,1\n"
        );
    }

    #[test]
    fn json_form_is_ordered() {
        let p = schubert_poly(&Permutation::from_word(&[1, 3]));
        let v = polynomial_json(&p);
        let terms = v["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0]["exponents"], json!([2]));
        assert_eq!(terms[0]["coefficient"], json!(1));
        assert_eq!(terms[1]["exponents"], json!([1, 1]));
        assert_eq!(terms[2]["exponents"], json!([1, 0, 1]));
    }
}
