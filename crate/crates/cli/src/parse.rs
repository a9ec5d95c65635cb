//! Multivector expression parser.
//!
//! Grammar:
//!
//! ```text
//! expression := ['+'|'-'] term (('+'|'-') term)*
//! term       := number ('*'? blade)? | blade
//! blade      := '1' (after '*') | 'e' digits
//! number     := decimal literal with optional exponent
//! ```
//!
//! Whitespace is ignored between tokens. Blade labels must use strictly
//! ascending digits (`e13`, never `e31`); non-ascending labels are rejected
//! because silently flipping the sign would not be what the author of the
//! input meant. Duplicate blades are summed.
//!
//! An `e` immediately following a number literal (no whitespace) binds as an
//! exponent when digits follow, so `2e12` is 2·10¹²; write `2*e12` or `2 e12`
//! for the blade term.

use std::fmt;

use gaexp::{Multivector, Signature, BLADE_NAMES};

/// Expression parse failure, carrying the offending token and its 1-based
/// character position.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub token: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.token.is_empty() {
            write!(
                f,
                "parse error at position {}: {}",
                self.position, self.message
            )
        } else {
            write!(
                f,
                "parse error at position {}: {} (token \"{}\")",
                self.position, self.message, self.token
            )
        }
    }
}

impl std::error::Error for ParseError {}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn error(&self, start: usize, token: &str, message: impl Into<String>) -> ParseError {
        ParseError {
            position: start + 1,
            token: token.to_string(),
            message: message.into(),
        }
    }

    /// Number literal: digits [. digits] [e|E [+|-] digits]. The exponent is
    /// consumed only when at least one digit follows the marker.
    fn number(&mut self) -> Result<f64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
            }
        }
        if matches!(self.peek(), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.peek(), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if matches!(self.peek(), Some(b'0'..=b'9')) {
                while matches!(self.peek(), Some(b'0'..=b'9')) {
                    self.pos += 1;
                }
            } else {
                // not an exponent; leave the 'e' for a blade token
                self.pos = mark;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let value: f64 = text
            .parse()
            .map_err(|_| self.error(start, text, "malformed number literal"))?;
        if !value.is_finite() {
            return Err(self.error(start, text, "number literal out of f64 range"));
        }
        Ok(value)
    }

    /// Blade label: 'e' followed by its digits. Validates membership in the
    /// fixed basis and the ascending-digit convention.
    fn blade(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        debug_assert_eq!(self.peek(), Some(b'e'));
        self.pos += 1;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        if text.len() == 1 {
            return Err(self.error(start, text, "expected blade label digits after 'e'"));
        }
        if let Some(idx) = BLADE_NAMES.iter().position(|n| *n == text) {
            return Ok(idx);
        }
        let digits = &text[1..];
        let ascending = digits.as_bytes().windows(2).all(|w| w[0] < w[1]);
        let in_range = digits.bytes().all(|d| (b'1'..=b'3').contains(&d));
        if in_range && !ascending {
            Err(self.error(
                start,
                text,
                "non-ascending blade label: basis labels use ascending digit order (e.g. e13, not e31)",
            ))
        } else {
            Err(self.error(start, text, "unknown blade label"))
        }
    }
}

/// Parses an expression into a multivector of the given algebra.
pub fn parse_multivector(text: &str, sig: Signature) -> Result<Multivector, ParseError> {
    let mut sc = Scanner::new(text);
    let mut coeffs = [0.0f64; 8];
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.error(sc.pos, "", "empty input"));
    }

    let mut first = true;
    loop {
        sc.skip_ws();
        // sign (mandatory separator after the first term)
        let mut sign = 1.0;
        match sc.peek() {
            Some(b'+') => {
                sc.pos += 1;
            }
            Some(b'-') => {
                sign = -1.0;
                sc.pos += 1;
            }
            _ if first => {}
            Some(other) => {
                return Err(sc.error(
                    sc.pos,
                    &(other as char).to_string(),
                    "expected '+' or '-' between terms",
                ));
            }
            None => break,
        }
        first = false;
        sc.skip_ws();

        let term_start = sc.pos;
        let (value, blade_idx) = match sc.peek() {
            Some(b'0'..=b'9') | Some(b'.') => {
                let value = sc.number()?;
                // optional '*' and/or blade
                let after_number = sc.pos;
                sc.skip_ws();
                match sc.peek() {
                    Some(b'*') => {
                        sc.pos += 1;
                        sc.skip_ws();
                        match sc.peek() {
                            Some(b'e') => (value, sc.blade()?),
                            Some(b'1') => {
                                sc.pos += 1;
                                (value, 0)
                            }
                            _ => {
                                return Err(sc.error(
                                    sc.pos,
                                    "",
                                    "expected a blade label after '*'",
                                ));
                            }
                        }
                    }
                    Some(b'e') => (value, sc.blade()?),
                    _ => {
                        sc.pos = after_number;
                        (value, 0)
                    }
                }
            }
            Some(b'e') => (1.0, sc.blade()?),
            Some(other) => {
                return Err(sc.error(
                    term_start,
                    &(other as char).to_string(),
                    "expected a number or blade label",
                ));
            }
            None => {
                return Err(sc.error(sc.pos, "", "expected a term"));
            }
        };
        coeffs[blade_idx] += sign * value;

        sc.skip_ws();
        if sc.peek().is_none() {
            break;
        }
    }

    Multivector::new(sig, coeffs).map_err(|_| ParseError {
        position: 1,
        token: text.trim().to_string(),
        message: "coefficients overflow f64".into(),
    })
}

/// Formats a multivector in input syntax with 17 significant digits, so that
/// parsing the output reproduces the coefficients bit-exactly.
pub fn format_multivector(mv: &Multivector) -> String {
    let mut out = String::new();
    for (i, &v) in mv.coeffs().iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        if out.is_empty() {
            if v < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if v < 0.0 { " - " } else { " + " });
        }
        out.push_str(&format!("{:.16e}", v.abs()));
        if i > 0 {
            out.push('*');
            out.push_str(BLADE_NAMES[i]);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
