//! Elenas: the planted plane trees that correspond to nondecreasing Dyck
//! paths. An Elena is a rightmost branch (the spine, reached by always taking
//! the last child) with chains hanging off it as non-last children.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dyck::{dyck_to_tree, first_decrease, tree_to_dyck};
use crate::error::{Error, Result};
use crate::path::DyckPath;
use crate::tree::PlantedPlaneTree;
use crate::word::{ElenaWord, Token};

/// Largest size `enumerate_elenas` accepts.
pub const DEFAULT_ELENA_LIMIT: usize = 16;

/// The first `a` is the root; block `i` hangs its chains on spine node `i`,
/// before the next spine node; the terminating `a` is the top of the spine.
pub fn word_to_tree(word: &ElenaWord) -> PlantedPlaneTree {
    word.blocks()
        .iter()
        .rev()
        .fold(PlantedPlaneTree::leaf(), |above, block| {
            let mut children: Vec<_> = block.iter().map(|&m| PlantedPlaneTree::chain(m)).collect();
            children.push(above);
            PlantedPlaneTree::with_children(children)
        })
}

pub fn is_elena_shape(tree: &PlantedPlaneTree) -> bool {
    spine_blocks(tree).is_ok()
}

pub fn tree_to_word(tree: &PlantedPlaneTree) -> Result<ElenaWord> {
    spine_blocks(tree).map(|blocks| ElenaWord::new(blocks).expect("chains are nonempty"))
}

fn spine_blocks(tree: &PlantedPlaneTree) -> Result<Vec<Vec<usize>>> {
    let mut blocks = Vec::new();
    let mut node = tree;
    while let Some((last, hanging)) = node.children().split_last() {
        let block = hanging
            .iter()
            .map(|c| c.is_chain().then(|| c.size()))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::NotElenaShape {
                spine_index: blocks.len(),
            })?;
        blocks.push(block);
        node = last;
    }
    Ok(blocks)
}

pub fn word_to_dyck(word: &ElenaWord) -> DyckPath {
    tree_to_dyck(&word_to_tree(word))
}

pub fn dyck_to_word(path: &DyckPath) -> Result<ElenaWord> {
    if let Some(index) = first_decrease(path) {
        return Err(Error::NotNondecreasing { index });
    }
    tree_to_word(&dyck_to_tree(path))
}

pub fn enumerate_elenas(n: usize) -> Result<Elenas> {
    enumerate_elenas_limited(n, DEFAULT_ELENA_LIMIT)
}

pub fn enumerate_elenas_limited(n: usize, limit: usize) -> Result<Elenas> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "Elena size",
            requested: n,
            limit,
        });
    }
    Ok(Elenas {
        current: (n >= 1).then(|| vec![Token::A; n]),
        size: n,
    })
}

/// Every Elena word of a given size, in lexicographic order of the token
/// sequence (`a < p1 < p2 < ...`).
#[derive(Debug, Clone)]
pub struct Elenas {
    current: Option<Vec<Token>>,
    size: usize,
}

impl Elenas {
    fn advance(&self, tokens: &[Token]) -> Option<Vec<Token>> {
        let mut prefix_weight: Vec<usize> = Vec::with_capacity(tokens.len() + 1);
        prefix_weight.push(0);
        for t in tokens {
            prefix_weight.push(prefix_weight.last().unwrap() + t.weight());
        }
        // The first letter is always `a`; bumping position i needs room for a
        // closing `a` afterwards.
        for i in (1..tokens.len()).rev() {
            let bumped = match tokens[i] {
                Token::A => Token::P(1),
                Token::P(k) => Token::P(k + 1),
            };
            let used = prefix_weight[i] + bumped.weight();
            if used < self.size {
                let mut next = tokens[..i].to_vec();
                next.push(bumped);
                next.extend(std::iter::repeat_n(Token::A, self.size - used));
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for Elenas {
    type Item = ElenaWord;

    fn next(&mut self) -> Option<ElenaWord> {
        let tokens = self.current.take()?;
        self.current = self.advance(&tokens);
        Some(ElenaWord::from_tokens(&tokens).expect("enumeration yields valid words"))
    }
}

/// Number of Elenas with `n` nodes: the coefficients of z(1-2z)/(1-3z+z^2).
pub fn count_elenas(n: usize) -> BigUint {
    match n {
        0 => BigUint::zero(),
        1 | 2 => BigUint::one(),
        _ => {
            let (mut prev, mut cur) = (BigUint::one(), BigUint::from(2u32));
            for _ in 4..=n {
                let next = &cur * 3u32 - &prev;
                prev = std::mem::replace(&mut cur, next);
            }
            cur
        }
    }
}
