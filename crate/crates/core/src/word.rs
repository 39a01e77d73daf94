//! Words of the rational language `(a p*)* a`.
//!
//! Text form is whitespace-separated tokens, `a` or `p<k>` with `k >= 1`,
//! where `p<k>` stands for a path of `k` nodes. Rendering joins tokens with
//! single spaces.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A single letter of a word. The derived order (`a` first, then paths by
/// length) is the token order used for enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    A,
    P(usize),
}

impl Token {
    pub fn weight(self) -> usize {
        match self {
            Token::A => 1,
            Token::P(k) => k,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::A => f.write_str("a"),
            Token::P(k) => write!(f, "p{k}"),
        }
    }
}

impl FromStr for Token {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "a" {
            return Ok(Token::A);
        }
        let digits = s.strip_prefix('p').ok_or_else(|| bad_token(s))?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad_token(s));
        }
        match digits.parse::<usize>() {
            Ok(0) => Err(Error::ZeroPathLength),
            Ok(k) => Ok(Token::P(k)),
            Err(_) => Err(bad_token(s)),
        }
    }
}

fn bad_token(s: &str) -> Error {
    Error::BadToken {
        token: s.to_string(),
    }
}

/// One `(a p*)` factor: the path lengths attached at one spine node.
pub type Block = Vec<usize>;

/// An Elena in word form. The terminating `a` is implicit, so zero blocks is
/// the single-node Elena.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElenaWord {
    blocks: Vec<Block>,
}

impl ElenaWord {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.iter().flatten().any(|&m| m == 0) {
            return Err(Error::ZeroPathLength);
        }
        Ok(ElenaWord { blocks })
    }

    pub fn single() -> Self {
        ElenaWord::default()
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn size(&self) -> usize {
        1 + self.blocks.len() + self.path_nodes()
    }

    /// Total number of attached paths.
    pub fn path_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Total number of nodes lying in attached paths.
    pub fn path_nodes(&self) -> usize {
        self.blocks.iter().flatten().sum()
    }

    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::with_capacity(self.blocks.len() + self.path_count() + 1);
        for block in &self.blocks {
            out.push(Token::A);
            out.extend(block.iter().map(|&m| Token::P(m)));
        }
        out.push(Token::A);
        out
    }

    pub fn from_tokens(tokens: &[Token]) -> Result<Self> {
        let (last, body) = tokens.split_last().ok_or_else(|| Error::GrammarViolation {
            reason: "empty word".into(),
        })?;
        if *last != Token::A {
            return Err(Error::GrammarViolation {
                reason: "word must end with a".into(),
            });
        }
        let mut blocks: Vec<Block> = Vec::new();
        for &token in body {
            match token {
                Token::A => blocks.push(Vec::new()),
                Token::P(0) => return Err(Error::ZeroPathLength),
                Token::P(k) => blocks
                    .last_mut()
                    .ok_or_else(|| Error::GrammarViolation {
                        reason: "word must start with a".into(),
                    })?
                    .push(k),
            }
        }
        Ok(ElenaWord { blocks })
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn parse_elena_word(text: &str) -> Result<ElenaWord> {
    let tokens = text
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<Vec<Token>>>()?;
    ElenaWord::from_tokens(&tokens)
}

pub fn render_elena_word(word: &ElenaWord) -> String {
    word.to_string()
}

impl fmt::Display for ElenaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            f.write_str("a ")?;
            for m in block {
                write!(f, "p{m} ")?;
            }
        }
        f.write_str("a")
    }
}

impl FromStr for ElenaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_elena_word(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn long_word() {
        let w = parse_elena_word("a p5 p3 p1 a p4 a a p3 p1 p1 a").unwrap();
        assert_eq!(w.blocks(), &[vec![5, 3, 1], vec![4], vec![], vec![3, 1, 1]]);
        assert_eq!(w.size(), 23);
        assert_eq!(w.render(), "a p5 p3 p1 a p4 a a p3 p1 p1 a");
    }

    #[test]
    fn single_letter() {
        let w = parse_elena_word("a").unwrap();
        assert_eq!(w.block_count(), 0);
        assert_eq!(w.size(), 1);
        assert_eq!(w, ElenaWord::single());
    }

    #[test]
    fn grammar_errors() {
        assert!(matches!(
            parse_elena_word("p2 a"),
            Err(Error::GrammarViolation { .. })
        ));
        assert!(matches!(
            parse_elena_word("a p2"),
            Err(Error::GrammarViolation { .. })
        ));
        assert!(matches!(
            parse_elena_word(""),
            Err(Error::GrammarViolation { .. })
        ));
        assert_eq!(parse_elena_word("a p0 a"), Err(Error::ZeroPathLength));
        assert!(matches!(
            parse_elena_word("a q a"),
            Err(Error::BadToken { .. })
        ));
        assert!(matches!(
            parse_elena_word("a p a"),
            Err(Error::BadToken { .. })
        ));
        assert!(matches!(
            parse_elena_word("a p+1 a"),
            Err(Error::BadToken { .. })
        ));
    }

    #[test]
    fn size_matches_token_weights() {
        let w = parse_elena_word("a p2 p1 a a p3 a").unwrap();
        let weight: usize = w.tokens().iter().map(|t| t.weight()).sum();
        assert_eq!(w.size(), weight);
    }

    #[test]
    fn token_order() {
        assert!(Token::A < Token::P(1));
        assert!(Token::P(2) < Token::P(10));
    }

    #[test]
    fn zero_length_rejected_by_constructor() {
        assert_eq!(ElenaWord::new(vec![vec![1, 0]]), Err(Error::ZeroPathLength));
    }
}
