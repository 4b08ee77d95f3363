//! The interchange law as a located rewrite on flattened terms.
//!
//! A [`Move`] names an ambient node, a pair of adjacent children `index`,
//! `index + 1` of the opposite orientation, and a split point inside each of
//! them. A row merge rewrites
//!
//! ```text
//! V(.., H(x.., y..), H(z.., w..), ..)  ->  V(.., H(V(x, z), V(y, w)), ..)
//! ```
//!
//! and a column merge is the same with `H` and `V` exchanged. All indices
//! are 1-based and always refer to the flattened form of the current term.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::term::{Label, Orientation, Path, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    /// Two adjacent rows of a vertical node become one horizontal pair of columns.
    RowMerge,
    /// Two adjacent columns of a horizontal node become one vertical pair of rows.
    ColMerge,
}

impl MoveKind {
    /// Orientation of the node the move is applied at.
    pub fn ambient(self) -> Orientation {
        match self {
            MoveKind::RowMerge => Orientation::Vertical,
            MoveKind::ColMerge => Orientation::Horizontal,
        }
    }

    pub fn mirror(self) -> Self {
        match self {
            MoveKind::RowMerge => MoveKind::ColMerge,
            MoveKind::ColMerge => MoveKind::RowMerge,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub path: Path,
    pub index: usize,
    pub split_first: usize,
    pub split_second: usize,
}

impl Move {
    pub fn row(path: Vec<usize>, index: usize, split_first: usize, split_second: usize) -> Self {
        Move {
            kind: MoveKind::RowMerge,
            path: Path(path),
            index,
            split_first,
            split_second,
        }
    }

    pub fn col(path: Vec<usize>, index: usize, split_first: usize, split_second: usize) -> Self {
        Move {
            kind: MoveKind::ColMerge,
            path: Path(path),
            index,
            split_first,
            split_second,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            MoveKind::RowMerge => "row",
            MoveKind::ColMerge => "col",
        };
        write!(
            f,
            "{kind} at {} pair {}-{} splits {},{}",
            self.path,
            self.index,
            self.index + 1,
            self.split_first,
            self.split_second
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("path {0} does not address a composite node")]
    BadPath(Path),
    #[error("node at {path} is {found:?}, move needs {expected:?}")]
    WrongAmbient {
        path: Path,
        expected: Orientation,
        found: Orientation,
    },
    #[error("pair {index}-{} out of range for node of arity {arity}", index + 1)]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("child {child} is not a {expected:?} composite")]
    ChildNotComposite { child: usize, expected: Orientation },
    #[error("split {split} out of range for child {child} of arity {arity}")]
    SplitOutOfRange {
        child: usize,
        split: usize,
        arity: usize,
    },
}

struct Site<'a> {
    ambient: &'a [Term],
    first: &'a [Term],
    second: &'a [Term],
}

fn locate<'a>(t: &'a Term, m: &Move) -> Result<Site<'a>, MoveError> {
    let node = t
        .subterm(&m.path)
        .filter(|n| !n.is_leaf())
        .ok_or_else(|| MoveError::BadPath(m.path.clone()))?;
    let expected = m.kind.ambient();
    let found = node.orientation().expect("composite");
    if found != expected {
        return Err(MoveError::WrongAmbient {
            path: m.path.clone(),
            expected,
            found,
        });
    }
    let ambient = node.children();
    if m.index == 0 || m.index >= ambient.len() {
        return Err(MoveError::IndexOutOfRange {
            index: m.index,
            arity: ambient.len(),
        });
    }
    let inner = expected.flip();
    let mut parts = [&[][..], &[][..]];
    for (k, child_idx) in [m.index, m.index + 1].into_iter().enumerate() {
        let child = &ambient[child_idx - 1];
        if child.orientation() != Some(inner) {
            return Err(MoveError::ChildNotComposite {
                child: child_idx,
                expected: inner,
            });
        }
        let split = if k == 0 { m.split_first } else { m.split_second };
        let arity = child.children().len();
        if split == 0 || split >= arity {
            return Err(MoveError::SplitOutOfRange {
                child: child_idx,
                split,
                arity,
            });
        }
        parts[k] = child.children();
    }
    Ok(Site {
        ambient,
        first: parts[0],
        second: parts[1],
    })
}

/// Number of children `t` contributes when composed in direction `o`.
fn run_len(t: &Term, o: Orientation) -> usize {
    if t.orientation() == Some(o) {
        t.children().len()
    } else {
        1
    }
}

fn split_parts(
    inner: Orientation,
    children: &[Term],
    split: usize,
) -> (Term, Term) {
    (
        Term::compose(inner, children[..split].to_vec()),
        Term::compose(inner, children[split..].to_vec()),
    )
}

/// Applies the interchange law at the position named by `m`.
pub fn apply_move(t: &Term, m: &Move) -> Result<Term, MoveError> {
    let site = locate(t, m)?;
    let outer = m.kind.ambient();
    let inner = outer.flip();
    let (x, y) = split_parts(inner, site.first, m.split_first);
    let (z, w) = split_parts(inner, site.second, m.split_second);
    let merged = Term::compose(
        inner,
        vec![Term::compose(outer, vec![x, z]), Term::compose(outer, vec![y, w])],
    );
    let i = m.index - 1;
    let mut children = Vec::with_capacity(site.ambient.len() - 1);
    children.extend_from_slice(&site.ambient[..i]);
    children.push(merged);
    children.extend_from_slice(&site.ambient[i + 2..]);
    let replacement = Term::compose(outer, children);
    Ok(t.replace_at(m.path.steps(), replacement))
}

/// The move that undoes `m` on `apply_move(t, m)`.
pub fn invert_move(t: &Term, m: &Move) -> Result<Move, MoveError> {
    let site = locate(t, m)?;
    let outer = m.kind.ambient();
    let inner = outer.flip();
    let (x, y) = split_parts(inner, site.first, m.split_first);
    // x and y head the two new columns (rows for a column merge)
    let split_first = run_len(&x, outer);
    let split_second = run_len(&y, outer);
    let (path, index) = if site.ambient.len() > 2 {
        (m.path.child(m.index), 1)
    } else if let Some((&last, parent)) = m.path.steps().split_last() {
        (Path(parent.to_vec()), last)
    } else {
        (Path::root(), 1)
    };
    Ok(Move {
        kind: m.kind.mirror(),
        path,
        index,
        split_first,
        split_second,
    })
}

/// Every move applicable to `t`, ordered by path, index and splits.
pub fn enumerate_moves(t: &Term) -> Vec<Move> {
    fn go(t: &Term, path: &mut Vec<usize>, out: &mut Vec<Move>) {
        let Some(outer) = t.orientation() else {
            return;
        };
        let inner = outer.flip();
        let kind = match outer {
            Orientation::Vertical => MoveKind::RowMerge,
            Orientation::Horizontal => MoveKind::ColMerge,
        };
        let children = t.children();
        for (i, pair) in children.windows(2).enumerate() {
            if pair[0].orientation() != Some(inner) || pair[1].orientation() != Some(inner) {
                continue;
            }
            for s1 in 1..pair[0].children().len() {
                for s2 in 1..pair[1].children().len() {
                    out.push(Move {
                        kind,
                        path: Path(path.clone()),
                        index: i + 1,
                        split_first: s1,
                        split_second: s2,
                    });
                }
            }
        }
        for (i, child) in children.iter().enumerate() {
            path.push(i + 1);
            go(child, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), &mut out);
    out
}

/// A replayable equality certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofScript {
    pub start: Term,
    pub moves: Vec<Move>,
    /// Checkpoint name to the number of moves applied when it is reached.
    pub checkpoints: BTreeMap<String, usize>,
}

impl ProofScript {
    pub fn new(start: Term) -> Self {
        ProofScript {
            start,
            moves: Vec::new(),
            checkpoints: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("move {} (index {index}) is invalid: {source}", index + 1)]
pub struct ReplayError {
    /// 0-based position in the move list.
    pub index: usize,
    pub source: MoveError,
}

/// Applies the moves in order, returning every intermediate term.
pub fn replay(script: &ProofScript) -> Result<Vec<Term>, ReplayError> {
    let mut trajectory = Vec::with_capacity(script.moves.len() + 1);
    trajectory.push(script.start.clone());
    for (index, m) in script.moves.iter().enumerate() {
        let next = apply_move(trajectory.last().unwrap(), m)
            .map_err(|source| ReplayError { index, source })?;
        trajectory.push(next);
    }
    Ok(trajectory)
}

/// Name of the checkpoint after the eighth sliding of the central swap.
pub const AFTER_SLIDING_8: &str = "after-sliding-8";

/// Builds the 4×4 grid with `border` around the middle block `[m00 m01; m10 m11]`.
///
/// Border labels are given in reading order: the top row, then the outer
/// cells of rows two and three (left, right), then the bottom row.
pub fn bordered_grid(border: &[Label; 12], middle: [&Label; 4]) -> Term {
    let e = |i: usize| border[i].clone();
    let rows = vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(4), middle[0].clone(), middle[1].clone(), e(5)],
        vec![e(6), middle[2].clone(), middle[3].clone(), e(7)],
        vec![e(8), e(9), e(10), e(11)],
    ];
    crate::term::from_grid(&rows).expect("4x4 grid is rectangular")
}

/// The certificate that swaps `a` and `b` in the middle of a bordered 4×4 grid.
///
/// The start term has middle `[a b; c d]` and the final term `[b a; c d]`.
/// Checkpoints `after-sliding-1` .. `after-sliding-12` mark the end of each
/// sliding; after the eighth the middle reads `[b d; a c]`.
pub fn central_swap_script(border: &[Label; 12], a: &Label, b: &Label, c: &Label, d: &Label) -> ProofScript {
    let start = bordered_grid(border, [a, b, c, d]);
    let mut moves = Vec::new();
    let mut checkpoints = BTreeMap::new();
    for (n, sliding) in crate::certificate::CENTRAL_SWAP_SLIDINGS.iter().enumerate() {
        moves.extend(sliding.iter().map(|raw| raw.to_move()));
        checkpoints.insert(format!("after-sliding-{}", n + 1), moves.len());
    }
    ProofScript {
        start,
        moves,
        checkpoints,
    }
}
