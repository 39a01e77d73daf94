//! Nondecreasing Dyck paths and their tree form ("Elenas").
//!
//! An Elena is a planted plane tree made of a rightmost branch with chains
//! hanging off it; as words they form the rational language `(a p*)* a`.
//! This crate provides
//!
//! * text codecs for Dyck paths, planted plane trees and Elena words,
//! * the glove bijection between Dyck paths and planted plane trees,
//! * conversions between Elena words, trees and nondecreasing Dyck paths,
//! * a bijection from Elenas onto planted plane trees of height at most 4,
//! * exhaustive statistics, and
//! * an exact generating-function engine that reproduces every total and
//!   checks the functional equations behind them.

pub mod dyck;
pub mod elena;
pub mod error;
pub mod genfunc;
pub mod height4;
mod json;
pub mod path;
pub mod stats;
pub mod tree;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use path::{parse_dyck, render_dyck, DyckPath, Step};
pub use stats::{AggregateRow, StatRecord, Statistic};
pub use tree::{parse_tree, render_tree, PlantedPlaneTree};
pub use word::{parse_elena_word, render_elena_word, Block, ElenaWord, Token};
