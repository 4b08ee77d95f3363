//! Tiling calculus for double semigroups.
//!
//! Terms of the free double semigroup are guillotine tilings of a square;
//! the interchange law acts on them as local moves. The crate parses and
//! renders such terms, applies and replays moves, decides equality by move
//! closure, and checks commutativity results over small finite models.

mod certificate;
pub mod cli;
pub mod decision;
pub mod formats;
pub mod geometry;
pub mod models;
pub mod render;
pub mod rewrite;
pub mod term;

pub use decision::{equal_exhaustive, find_swap_proof, Verdict};
pub use geometry::{border_word, layout, BorderWord, Layout, Rect};
pub use rewrite::{
    apply_move, central_swap_script, enumerate_moves, invert_move, replay, Move, MoveError, MoveKind,
    ProofScript,
};
pub use term::{format_term, from_grid, leaf_multiset, parse_term, Label, Path, Term, TermError};
