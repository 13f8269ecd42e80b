//! Text syntax for braid and free-group words.
//!
//! Words are whitespace-separated tokens `s<k>` or `s<k>^<m>` (free words use
//! the prefix `g`), plus parenthesized groups `( ... )^<m>` that expand by
//! repetition; `m` may be negative. Example: `( s1 s2 )^4`, `s2^-1 s1`.

use super::{BraidWord, FreeWord};
use crate::{Error, Result};

pub fn parse_braid_word(text: &str, strands: usize) -> Result<BraidWord> {
    BraidWord::new(strands, parse_letters(text, 's')?)
}

pub fn parse_free_word(text: &str, rank: usize) -> Result<FreeWord> {
    FreeWord::new(rank, parse_letters(text, 'g')?)
}

pub fn format_braid_word(w: &BraidWord) -> String {
    format_letters(w.letters(), 's')
}

pub fn format_free_word(w: &FreeWord) -> String {
    format_letters(w.letters(), 'g')
}

fn format_letters(letters: &[i32], prefix: char) -> String {
    letters
        .iter()
        .map(|&l| {
            if l > 0 {
                format!("{prefix}{l}")
            } else {
                format!("{prefix}{}^-1", -l)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_letters(text: &str, prefix: char) -> Result<Vec<i32>> {
    let tokens = tokenize(text)?;
    let (letters, rest) = parse_sequence(&tokens, 0, prefix)?;
    if rest != tokens.len() {
        return Err(Error::WordSyntax(format!("unexpected token {:?}", tokens[rest])));
    }
    Ok(letters)
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Power(i64),
    Gen(String),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for raw in text.split_whitespace() {
        let mut rest = raw;
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('(') {
                out.push(Token::Open);
                rest = r;
            } else if let Some(r) = rest.strip_prefix(')') {
                out.push(Token::Close);
                rest = r;
            } else if rest.starts_with('^') {
                let body: String = rest[1..]
                    .chars()
                    .take_while(|c| c.is_ascii_digit() || *c == '-' || *c == '+')
                    .collect();
                let m: i64 = body
                    .parse()
                    .map_err(|_| Error::WordSyntax(format!("bad exponent in {raw:?}")))?;
                out.push(Token::Power(m));
                rest = &rest[1 + body.len()..];
            } else {
                let body: String = rest
                    .chars()
                    .take_while(|c| *c != '(' && *c != ')' && *c != '^')
                    .collect();
                out.push(Token::Gen(body.clone()));
                rest = &rest[body.len()..];
            }
        }
    }
    Ok(out)
}

fn parse_sequence(tokens: &[Token], mut at: usize, prefix: char) -> Result<(Vec<i32>, usize)> {
    let mut out = Vec::new();
    while at < tokens.len() {
        match &tokens[at] {
            Token::Close => break,
            Token::Open => {
                let (inner, next) = parse_sequence(tokens, at + 1, prefix)?;
                if tokens.get(next) != Some(&Token::Close) {
                    return Err(Error::WordSyntax("unbalanced parenthesis".into()));
                }
                let (m, next) = match tokens.get(next + 1) {
                    Some(Token::Power(m)) => (*m, next + 2),
                    _ => (1, next + 1),
                };
                append_power(&mut out, &inner, m);
                at = next;
            }
            Token::Power(_) => {
                return Err(Error::WordSyntax("dangling exponent".into()));
            }
            Token::Gen(name) => {
                let base = parse_generator(name, prefix)?;
                let (m, next) = match tokens.get(at + 1) {
                    Some(Token::Power(m)) => (*m, at + 2),
                    _ => (1, at + 1),
                };
                append_power(&mut out, &[base], m);
                at = next;
            }
        }
    }
    Ok((out, at))
}

fn parse_generator(name: &str, prefix: char) -> Result<i32> {
    let body = name
        .strip_prefix(prefix)
        .ok_or_else(|| Error::WordSyntax(format!("expected {prefix}<k>, got {name:?}")))?;
    let k: i32 = body
        .parse()
        .map_err(|_| Error::WordSyntax(format!("bad generator index in {name:?}")))?;
    if k <= 0 {
        return Err(Error::WordSyntax(format!("generator index must be positive in {name:?}")));
    }
    Ok(k)
}

fn append_power(out: &mut Vec<i32>, base: &[i32], m: i64) {
    if m >= 0 {
        for _ in 0..m {
            out.extend_from_slice(base);
        }
    } else {
        let inv: Vec<i32> = base.iter().rev().map(|&l| -l).collect();
        for _ in 0..(-m) {
            out.extend_from_slice(&inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tokens_and_powers() {
        let w = parse_braid_word("s1 s2^-1 s3", 4).unwrap();
        assert_eq!(w.letters(), &[1, -2, 3]);
        let w = parse_braid_word("( s1 s2 )^4", 3).unwrap();
        assert_eq!(w.letters(), &[1, 2, 1, 2, 1, 2, 1, 2]);
        let w = parse_braid_word("( s1 s2 )^-2", 3).unwrap();
        assert_eq!(w.letters(), &[-2, -1, -2, -1]);
        let w = parse_braid_word("s1^-2 s2^3", 3).unwrap();
        assert_eq!(w.letters(), &[-1, -1, 2, 2, 2]);
        let w = parse_braid_word("", 3).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn parses_nested_groups() {
        let w = parse_braid_word("( s1 ( s2 )^2 )^2", 3).unwrap();
        assert_eq!(w.letters(), &[1, 2, 2, 1, 2, 2]);
    }

    #[test]
    fn rejects_bad_syntax() {
        assert!(parse_braid_word("x1", 3).is_err());
        assert!(parse_braid_word("s0", 3).is_err());
        assert!(parse_braid_word("s5", 3).is_err());
        assert!(parse_braid_word("( s1", 3).is_err());
        assert!(parse_braid_word("^2", 3).is_err());
    }

    #[test]
    fn roundtrip_format() {
        let w = parse_braid_word("s1 s2^-1 s1 s1", 3).unwrap();
        assert_eq!(format_braid_word(&w), "s1 s2^-1 s1 s1");
        assert_eq!(parse_braid_word(&format_braid_word(&w), 3).unwrap(), w);
        let f = parse_free_word("g4^-1 g3^-1 ( g2 g1 )^2", 4).unwrap();
        assert_eq!(parse_free_word(&format_free_word(&f), 4).unwrap(), f);
    }
}
