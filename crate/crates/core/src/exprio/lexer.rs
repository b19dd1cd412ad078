use num_bigint::BigInt;

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    /// `n/d` written without spaces.
    Frac(BigInt, BigInt),
    /// `{k}`
    QNum(u32),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub offset: usize,
}

fn digits_end(bytes: &[u8], start: usize) -> usize {
    let mut i = start;
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    i
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, offset: start });
            i += 1;
            continue;
        }
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let end = digits_end(bytes, i);
            let num: BigInt = text[i..end].parse().expect("ascii digits");
            if end < bytes.len() && bytes[end] == b'/' {
                let dend = digits_end(bytes, end + 1);
                if dend == end + 1 {
                    return Err(ParseError::syntax(end + 1, "expected denominator after '/'"));
                }
                let den: BigInt = text[end + 1..dend].parse().expect("ascii digits");
                if den == BigInt::from(0) {
                    return Err(ParseError::syntax(end + 1, "zero denominator"));
                }
                out.push(Token { tok: Tok::Frac(num, den), offset: start });
                i = dend;
            } else {
                out.push(Token { tok: Tok::Int(num), offset: start });
                i = end;
            }
        } else if c == b'{' {
            let end = digits_end(bytes, i + 1);
            if end == i + 1 || end >= bytes.len() || bytes[end] != b'}' {
                return Err(ParseError::syntax(start, "malformed q-number literal, expected {k}"));
            }
            let k = text[i + 1..end].parse().map_err(|_| ParseError::syntax(start + 1, "q-number index too large"))?;
            out.push(Token { tok: Tok::QNum(k), offset: start });
            i = end + 1;
        } else if c.is_ascii_alphabetic() {
            let mut end = i + 1;
            while end < bytes.len() && bytes[end].is_ascii_alphanumeric() {
                end += 1;
            }
            out.push(Token { tok: Tok::Ident(text[i..end].to_string()), offset: start });
            i = end;
        } else {
            let ch = text[i..].chars().next().expect("in bounds");
            return Err(ParseError::syntax(start, format!("unexpected character '{ch}'")));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_offsets() {
        let toks = tokenize("2/3*b12 ^ 4+{3}").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| (t.tok.clone(), t.offset)).collect();
        assert_eq!(
            kinds,
            vec![
                (Tok::Frac(2.into(), 3.into()), 0),
                (Tok::Star, 3),
                (Tok::Ident("b12".into()), 4),
                (Tok::Caret, 8),
                (Tok::Int(4.into()), 10),
                (Tok::Plus, 11),
                (Tok::QNum(3), 12),
            ]
        );
    }

    #[test]
    fn lexer_errors() {
        assert_eq!(tokenize("a $ b").unwrap_err().offset(), 2);
        assert_eq!(tokenize("1/0").unwrap_err().offset(), 2);
        assert_eq!(tokenize("{x}").unwrap_err().offset(), 0);
    }
}
