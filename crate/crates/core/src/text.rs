//! Canonical text rendering of sums of terms.

/// One term: the coefficient's canonical text and the monomial text, with
/// `None` standing for the identity monomial.
pub(crate) struct TermText {
    pub coef: String,
    pub monomial: Option<String>,
}

/// Joins terms as `a + b*x - c*x^2`. Composite coefficients (containing a
/// space) are parenthesized; a coefficient `1` in front of a monomial is
/// omitted; an empty sum prints as `0`.
pub(crate) fn render_sum(terms: impl IntoIterator<Item = TermText>) -> String {
    let mut out = String::new();
    for (k, t) in terms.into_iter().enumerate() {
        let (negative, body) = split_sign(&t.coef);
        let body = match t.monomial {
            None => body,
            Some(m) if body == "1" => m,
            Some(m) => format!("{body}*{m}"),
        };
        match (k, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn split_sign(coef: &str) -> (bool, String) {
    if coef.contains(' ') {
        (false, format!("({coef})"))
    } else if let Some(rest) = coef.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, coef.to_string())
    }
}
