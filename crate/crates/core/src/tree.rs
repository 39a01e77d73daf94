//! Planted plane trees: rooted trees whose children are linearly ordered.
//!
//! Text form: a node is `(` followed by the encodings of its children and `)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlantedPlaneTree {
    children: Vec<PlantedPlaneTree>,
}

impl PlantedPlaneTree {
    pub fn leaf() -> Self {
        PlantedPlaneTree::default()
    }

    pub fn with_children(children: Vec<PlantedPlaneTree>) -> Self {
        PlantedPlaneTree { children }
    }

    /// A path of `m` nodes, each with at most one child. `m` must be at least 1.
    pub fn chain(m: usize) -> Self {
        assert!(m >= 1, "a chain has at least one node");
        let mut t = PlantedPlaneTree::leaf();
        for _ in 1..m {
            t = PlantedPlaneTree::with_children(vec![t]);
        }
        t
    }

    pub fn children(&self) -> &[PlantedPlaneTree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn size(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(PlantedPlaneTree::size)
            .sum::<usize>()
    }

    /// Number of nodes on the longest root-to-leaf path; a single node has height 1.
    pub fn height(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(PlantedPlaneTree::height)
            .max()
            .unwrap_or(0)
    }

    /// True if every node has at most one child.
    pub fn is_chain(&self) -> bool {
        let mut node = self;
        loop {
            match node.children.as_slice() {
                [] => return true,
                [only] => node = only,
                _ => return false,
            }
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

pub fn parse_tree(text: &str) -> Result<PlantedPlaneTree> {
    // Each open node keeps the children collected so far.
    let mut stack: Vec<Vec<PlantedPlaneTree>> = Vec::new();
    let mut done: Option<PlantedPlaneTree> = None;
    for (position, found) in text.chars().enumerate() {
        if done.is_some() {
            return Err(match found {
                '(' | ')' => Error::TrailingGarbage { position },
                _ => Error::BadAlphabet { found, position },
            });
        }
        match found {
            '(' => stack.push(Vec::new()),
            ')' => {
                let children = stack.pop().ok_or(Error::NonBalanced { position })?;
                let node = PlantedPlaneTree::with_children(children);
                match stack.last_mut() {
                    Some(parent) => parent.push(node),
                    None => done = Some(node),
                }
            }
            _ => return Err(Error::BadAlphabet { found, position }),
        }
    }
    done.ok_or(Error::NonBalanced {
        position: text.chars().count(),
    })
}

pub fn render_tree(tree: &PlantedPlaneTree) -> String {
    tree.to_string()
}

impl fmt::Display for PlantedPlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            fmt::Display::fmt(c, f)?;
        }
        f.write_str(")")
    }
}

impl FromStr for PlantedPlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// Every planted plane tree with exactly `size` nodes, generated directly
/// from the root-plus-forest decomposition.
pub fn all_trees(size: usize) -> Vec<PlantedPlaneTree> {
    if size == 0 {
        return Vec::new();
    }
    forests(size - 1)
        .into_iter()
        .map(PlantedPlaneTree::with_children)
        .collect()
}

fn forests(nodes: usize) -> Vec<Vec<PlantedPlaneTree>> {
    if nodes == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=nodes {
        let heads = all_trees(first);
        let tails = forests(nodes - first);
        for head in &heads {
            for tail in &tails {
                let mut forest = Vec::with_capacity(tail.len() + 1);
                forest.push(head.clone());
                forest.extend(tail.iter().cloned());
                out.push(forest);
            }
        }
    }
    out
}
