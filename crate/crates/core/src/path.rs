//! Dyck paths as sequences of up and down steps.
//!
//! The canonical text form uses `U` and `D`; the bracket alphabet `(` / `)`
//! is accepted on input. A single text must not mix the two alphabets.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Down,
}

/// A balanced sequence of steps whose running height never goes negative.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0usize;
        for (i, step) in steps.iter().enumerate() {
            match step {
                Step::Up => height += 1,
                Step::Down => {
                    height = height
                        .checked_sub(1)
                        .ok_or(Error::NonBalanced { position: i })?;
                }
            }
        }
        if height != 0 {
            return Err(Error::NonBalanced {
                position: steps.len(),
            });
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath::default()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of steps (twice the semilength).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn parse_dyck(text: &str) -> Result<DyckPath> {
    let mut steps = Vec::with_capacity(text.len());
    // Alphabet is fixed by the first character.
    let mut brackets: Option<bool> = None;
    for (position, found) in text.chars().enumerate() {
        let (step, is_bracket) = match found {
            'U' => (Step::Up, false),
            'D' => (Step::Down, false),
            '(' => (Step::Up, true),
            ')' => (Step::Down, true),
            _ => return Err(Error::BadAlphabet { found, position }),
        };
        match brackets {
            None => brackets = Some(is_bracket),
            Some(b) if b != is_bracket => return Err(Error::BadAlphabet { found, position }),
            Some(_) => {}
        }
        steps.push(step);
    }
    DyckPath::new(steps)
}

pub fn render_dyck(path: &DyckPath) -> String {
    path.to_string()
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Down => 'D',
            })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_dyck(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_path_parses() {
        let p = parse_dyck("UDUUDUUDUDDD").unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.render(), "UDUUDUUDUDDD");
    }

    #[test]
    fn empty_path_is_valid() {
        let p = parse_dyck("").unwrap();
        assert!(p.is_empty());
        assert_eq!(p.render(), "");
    }

    #[test]
    fn unbalanced_inputs() {
        assert_eq!(parse_dyck("UDD"), Err(Error::NonBalanced { position: 2 }));
        assert_eq!(parse_dyck("UUD"), Err(Error::NonBalanced { position: 3 }));
        assert!(matches!(parse_dyck("D"), Err(Error::NonBalanced { .. })));
    }

    #[test]
    fn bracket_alphabet() {
        let p = parse_dyck("(()())").unwrap();
        assert_eq!(p.render(), "UUDUDD");
    }

    #[test]
    fn alphabets_do_not_mix() {
        assert_eq!(
            parse_dyck("U)"),
            Err(Error::BadAlphabet {
                found: ')',
                position: 1
            })
        );
        assert_eq!(
            parse_dyck("UxD"),
            Err(Error::BadAlphabet {
                found: 'x',
                position: 1
            })
        );
    }
}
