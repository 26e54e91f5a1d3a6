//! Line-oriented text format for polynomial systems.
//!
//! The first nonblank line declares the ring: `ring <prime> <grevlex|lex>
//! <var> <var> ...`, with the leftmost variable greatest in the order. Every
//! following nonblank line is one polynomial, a sum of signed terms; a term
//! is an optional integer coefficient and variable powers `v^e` joined by
//! optional `*`. `#` starts a comment. All errors carry a line and column.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::algebra::{FieldElement, Monomial, MonomialOrder, PrimeField, Ring};
use crate::frontend::SystemDescription;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Int(s) => write!(f, "integer '{s}'"),
            TokenKind::Ident(s) => write!(f, "'{s}'"),
            TokenKind::Plus => write!(f, "'+'"),
            TokenKind::Minus => write!(f, "'-'"),
            TokenKind::Star => write!(f, "'*'"),
            TokenKind::Caret => write!(f, "'^'"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    col: usize,
}

fn tokenize(line_no: usize, text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
            }
            '+' => {
                tokens.push(Token {
                    kind: TokenKind::Plus,
                    col,
                });
                i += 1;
            }
            '-' => {
                tokens.push(Token {
                    kind: TokenKind::Minus,
                    col,
                });
                i += 1;
            }
            '*' => {
                tokens.push(Token {
                    kind: TokenKind::Star,
                    col,
                });
                i += 1;
            }
            '^' => {
                tokens.push(Token {
                    kind: TokenKind::Caret,
                    col,
                });
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Int(chars[start..i].iter().collect()),
                    col,
                });
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(chars[start..i].iter().collect()),
                    col,
                });
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("unexpected character '{other}'"),
                ))
            }
        }
    }
    Ok(tokens)
}

struct RingHeader {
    modulus: u64,
    order: MonomialOrder,
    variables: Vec<String>,
    var_index: HashMap<String, usize>,
    ring: Ring,
}

fn parse_ring_header(
    line_no: usize,
    tokens: &[Token],
    eol: usize,
) -> Result<RingHeader, ParseError> {
    let mut pos = 0;
    let mut next = |expected: &str| -> Result<&Token, ParseError> {
        let t = tokens
            .get(pos)
            .ok_or_else(|| ParseError::new(line_no, eol, format!("expected {expected}")))?;
        pos += 1;
        Ok(t)
    };

    let kw = next("the keyword 'ring'")?;
    match &kw.kind {
        TokenKind::Ident(s) if s == "ring" => {}
        other => {
            return Err(ParseError::new(
                line_no,
                kw.col,
                format!("expected 'ring', found {other}"),
            ))
        }
    }

    let modulus_tok = next("a prime modulus")?;
    let modulus = match &modulus_tok.kind {
        TokenKind::Int(digits) => digits.parse::<u64>().map_err(|_| {
            ParseError::new(
                line_no,
                modulus_tok.col,
                format!("modulus {digits} is too large"),
            )
        })?,
        other => {
            return Err(ParseError::new(
                line_no,
                modulus_tok.col,
                format!("expected a prime modulus, found {other}"),
            ))
        }
    };
    let field = PrimeField::new(modulus)
        .map_err(|e| ParseError::new(line_no, modulus_tok.col, e.to_string()))?;

    let order_tok = next("a monomial order (grevlex or lex)")?;
    let order = match &order_tok.kind {
        TokenKind::Ident(s) if s == "grevlex" => MonomialOrder::GrevLex,
        TokenKind::Ident(s) if s == "lex" => MonomialOrder::Lex,
        other => {
            return Err(ParseError::new(
                line_no,
                order_tok.col,
                format!("expected 'grevlex' or 'lex', found {other}"),
            ))
        }
    };

    let mut variables = Vec::new();
    let mut var_index = HashMap::new();
    for t in &tokens[pos..] {
        match &t.kind {
            TokenKind::Ident(name) => {
                if var_index.insert(name.clone(), variables.len()).is_some() {
                    return Err(ParseError::new(
                        line_no,
                        t.col,
                        format!("duplicate variable '{name}'"),
                    ));
                }
                variables.push(name.clone());
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    t.col,
                    format!("expected a variable name, found {other}"),
                ))
            }
        }
    }
    if variables.is_empty() {
        return Err(ParseError::new(
            line_no,
            eol,
            "expected at least one variable",
        ));
    }
    let _ = field;
    let ring = Ring::new(modulus, variables.len(), order).expect("modulus was validated above");
    Ok(RingHeader {
        modulus,
        order,
        variables,
        var_index,
        ring,
    })
}

fn parse_polynomial(
    line_no: usize,
    tokens: &[Token],
    eol: usize,
    header: &RingHeader,
) -> Result<crate::algebra::Polynomial, ParseError> {
    let field = header.ring.field();
    let nvars = header.variables.len();
    let mut terms: Vec<(FieldElement, Monomial)> = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        // Sign: required between terms, optional in front of the first.
        let mut negative = false;
        match tokens[pos].kind {
            TokenKind::Plus => pos += 1,
            TokenKind::Minus => {
                negative = true;
                pos += 1;
            }
            _ if first => {}
            ref other => {
                return Err(ParseError::new(
                    line_no,
                    tokens[pos].col,
                    format!("expected '+' or '-' between terms, found {other}"),
                ))
            }
        }
        first = false;

        let term_col = tokens.get(pos).map_or(eol, |t| t.col);
        let mut coeff: Option<FieldElement> = None;
        if let Some(Token {
            kind: TokenKind::Int(digits),
            ..
        }) = tokens.get(pos)
        {
            let mut value = FieldElement::ZERO;
            let ten = field.from_u64(10);
            for d in digits.chars() {
                let digit = field.from_u64(d.to_digit(10).unwrap() as u64);
                value = field.add(field.mul(value, ten), digit);
            }
            coeff = Some(value);
            pos += 1;
        }

        let mut exps = vec![0u32; nvars];
        let mut saw_factor = false;
        loop {
            match tokens.get(pos) {
                Some(Token {
                    kind: TokenKind::Star,
                    col,
                }) => {
                    pos += 1;
                    if !matches!(
                        tokens.get(pos),
                        Some(Token {
                            kind: TokenKind::Ident(_),
                            ..
                        })
                    ) {
                        return Err(ParseError::new(
                            line_no,
                            tokens.get(pos).map_or(eol, |t| t.col.max(*col)),
                            "expected a variable after '*'",
                        ));
                    }
                }
                Some(Token {
                    kind: TokenKind::Ident(name),
                    col,
                }) => {
                    let index = *header.var_index.get(name).ok_or_else(|| {
                        ParseError::new(line_no, *col, format!("unknown variable '{name}'"))
                    })?;
                    pos += 1;
                    let mut exponent = 1u32;
                    if let Some(Token {
                        kind: TokenKind::Caret,
                        ..
                    }) = tokens.get(pos)
                    {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token {
                                kind: TokenKind::Int(digits),
                                col,
                            }) => {
                                exponent = digits.parse::<u32>().map_err(|_| {
                                    ParseError::new(
                                        line_no,
                                        *col,
                                        format!("malformed exponent '{digits}'"),
                                    )
                                })?;
                                pos += 1;
                            }
                            other => {
                                let (col, found) = match other {
                                    Some(t) => (t.col, format!("{}", t.kind)),
                                    None => (eol, "end of line".to_string()),
                                };
                                return Err(ParseError::new(
                                    line_no,
                                    col,
                                    format!(
                                        "malformed exponent: expected an integer, found {found}"
                                    ),
                                ));
                            }
                        }
                    }
                    exps[index] = exps[index]
                        .checked_add(exponent)
                        .ok_or_else(|| ParseError::new(line_no, *col, "exponent too large"))?;
                    saw_factor = true;
                }
                _ => break,
            }
        }

        if coeff.is_none() && !saw_factor {
            return Err(ParseError::new(line_no, term_col, "expected a term"));
        }
        let mut c = coeff.unwrap_or_else(|| field.one());
        if negative {
            c = field.neg(c);
        }
        terms.push((c, Monomial::from_exps(exps)));
    }
    Ok(header.ring.polynomial(terms))
}

/// Parses a complete system description from text.
pub fn parse_system(text: &str) -> Result<SystemDescription, ParseError> {
    let lines: Vec<&str> = text.lines().collect();
    let mut header: Option<RingHeader> = None;
    let mut generators = Vec::new();
    for (i, raw) in lines.iter().enumerate() {
        let line_no = i + 1;
        let eol = raw.chars().count() + 1;
        let tokens = tokenize(line_no, raw)?;
        if tokens.is_empty() {
            continue;
        }
        match &header {
            None => header = Some(parse_ring_header(line_no, &tokens, eol)?),
            Some(h) => generators.push(parse_polynomial(line_no, &tokens, eol, h)?),
        }
    }
    let header = header.ok_or_else(|| ParseError::new(1, 1, "missing ring header line"))?;
    if generators.is_empty() {
        return Err(ParseError::new(
            lines.len() + 1,
            1,
            "empty system: no generators",
        ));
    }
    Ok(SystemDescription {
        modulus: header.modulus,
        variables: header.variables,
        order: header.order,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;

    #[test]
    fn parses_the_basic_example() {
        let desc = parse_system("ring 7 grevlex x y\nx^2*y - 3\n").unwrap();
        assert_eq!(desc.modulus, 7);
        assert_eq!(desc.variables, vec!["x", "y"]);
        assert_eq!(desc.order, MonomialOrder::GrevLex);
        assert_eq!(desc.generators.len(), 1);
        let ring = desc.ring().unwrap();
        let expected = ring.polynomial(vec![
            (ring.field().from_u64(1), Monomial::from_exps(vec![2, 1])),
            (ring.field().from_u64(4), Monomial::from_exps(vec![0, 0])),
        ]);
        assert_eq!(desc.generators[0], expected);
    }

    #[test]
    fn zero_generators_are_legal() {
        let desc = parse_system("ring 32003 lex x\nx - x\n").unwrap();
        assert_eq!(desc.generators, vec![Polynomial::zero()]);
    }

    #[test]
    fn non_prime_modulus_is_rejected_with_position() {
        let err = parse_system("ring 4 grevlex x\nx\n").unwrap_err();
        assert_eq!((err.line, err.col), (1, 6));
        assert!(err.message.contains("not prime"));
    }

    #[test]
    fn unknown_variable_is_rejected_with_position() {
        let err = parse_system("ring 7 grevlex x y\nx + z\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 5));
        assert!(err.message.contains("unknown variable 'z'"));
    }

    #[test]
    fn malformed_exponent_is_rejected() {
        let err = parse_system("ring 7 grevlex x\nx^\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("malformed exponent"));

        let err = parse_system("ring 7 grevlex x\nx^-2\n").unwrap_err();
        assert!(err.message.contains("malformed exponent"));

        let err = parse_system("ring 7 grevlex x\nx^99999999999\n").unwrap_err();
        assert!(err.message.contains("malformed exponent"));
    }

    #[test]
    fn empty_system_is_rejected() {
        let err = parse_system("ring 7 grevlex x\n# nothing here\n").unwrap_err();
        assert!(err.message.contains("empty system"));
        let err = parse_system("").unwrap_err();
        assert!(err.message.contains("missing ring header"));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# leading comment\n\nring 7 grevlex x y # trailing\n\n x*y + 2 # another\n";
        let desc = parse_system(text).unwrap();
        assert_eq!(desc.generators.len(), 1);
    }

    #[test]
    fn juxtaposition_and_explicit_stars_agree() {
        let a = parse_system("ring 7 grevlex x y\n3*x^2*y\n").unwrap();
        let b = parse_system("ring 7 grevlex x y\n3x^2y\n").unwrap();
        let c = parse_system("ring 7 grevlex x y\n3 x^2 y\n").unwrap();
        assert_eq!(a.generators, b.generators);
        assert_eq!(a.generators, c.generators);
        // Repeated variables accumulate exponents.
        let d = parse_system("ring 7 grevlex x y\n3*x*x*y*x\n").unwrap();
        let e = parse_system("ring 7 grevlex x y\n3*x^3*y\n").unwrap();
        assert_eq!(d.generators, e.generators);
    }

    #[test]
    fn coefficients_reduce_modulo_p() {
        let desc = parse_system("ring 7 grevlex x\n16x + 700000000000000000000001\n").unwrap();
        let ring = desc.ring().unwrap();
        let big_mod_7 = (700000000000000000000001u128 % 7) as u64;
        let expected = ring.polynomial(vec![
            (ring.field().from_u64(2), Monomial::from_exps(vec![1])),
            (
                ring.field().from_u64(big_mod_7),
                Monomial::from_exps(vec![0]),
            ),
        ]);
        assert_eq!(desc.generators[0], expected);
    }

    #[test]
    fn duplicate_variables_are_rejected() {
        let err = parse_system("ring 7 grevlex x x\nx\n").unwrap_err();
        assert!(err.message.contains("duplicate variable"));
    }

    #[test]
    fn stray_operators_are_rejected() {
        let err = parse_system("ring 7 grevlex x\nx + * 3\n").unwrap_err();
        assert!(err.message.contains("expected a variable after '*'"));
        let err = parse_system("ring 7 grevlex x\nx 3\n").unwrap_err();
        assert!(err.message.contains("expected '+' or '-'"));
        let err = parse_system("ring 7 grevlex x\nx +\n").unwrap_err();
        assert!(err.message.contains("expected a term"));
    }
}
