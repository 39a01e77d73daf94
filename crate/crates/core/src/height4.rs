//! Bijection between Elenas and planted plane trees of height at most 4.
//!
//! A path of `m` nodes becomes a node with `m - 1` leaf children; a block
//! `a p...p` becomes a node over its paths; the terminating `a` is the root
//! over all blocks.

use crate::error::{Error, Result};
use crate::tree::PlantedPlaneTree;
use crate::word::ElenaWord;

pub const MAX_HEIGHT: usize = 4;

pub fn interpret_path(m: usize) -> PlantedPlaneTree {
    assert!(m >= 1, "paths have at least one node");
    PlantedPlaneTree::with_children(vec![PlantedPlaneTree::leaf(); m - 1])
}

pub fn elena_to_height4(word: &ElenaWord) -> PlantedPlaneTree {
    PlantedPlaneTree::with_children(
        word.blocks()
            .iter()
            .map(|block| {
                PlantedPlaneTree::with_children(block.iter().map(|&m| interpret_path(m)).collect())
            })
            .collect(),
    )
}

pub fn height4_to_elena(tree: &PlantedPlaneTree) -> Result<ElenaWord> {
    let height = tree.height();
    if height > MAX_HEIGHT {
        return Err(Error::TooTall { height });
    }
    let blocks = tree
        .children()
        .iter()
        .map(|block| block.children().iter().map(|p| p.degree() + 1).collect())
        .collect();
    ElenaWord::new(blocks)
}
