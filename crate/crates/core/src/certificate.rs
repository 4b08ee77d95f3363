//! Frozen move data for the central-swap certificate.
//!
//! Each inner slice is one sliding of the tile diagrams, expanded into binary
//! interchange moves. Paths and indices are 1-based and refer to the
//! flattened term reached by the preceding moves.

use crate::rewrite::{Move, MoveKind};

#[derive(Debug, Clone, Copy)]
pub(crate) struct RawMove {
    pub row: bool,
    pub path: &'static [usize],
    pub index: usize,
    pub split_first: usize,
    pub split_second: usize,
}

impl RawMove {
    pub(crate) fn to_move(self) -> Move {
        Move {
            kind: if self.row { MoveKind::RowMerge } else { MoveKind::ColMerge },
            path: crate::term::Path(self.path.to_vec()),
            index: self.index,
            split_first: self.split_first,
            split_second: self.split_second,
        }
    }
}

// Slidings 2, 4, 6, 9 and 11 only move walls within one direction, which the
// flattened representation already identifies.
#[rustfmt::skip]
pub(crate) const CENTRAL_SWAP_SLIDINGS: &[&[RawMove]] = &[
    // sliding 1
    &[
        RawMove { row: true, path: &[], index: 1, split_first: 3, split_second: 3 },
        RawMove { row: true, path: &[], index: 2, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[2, 2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[1, 1], index: 1, split_first: 2, split_second: 2 },
        RawMove { row: true, path: &[1, 1], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 3, split_second: 2 },
        RawMove { row: true, path: &[1], index: 1, split_first: 2, split_second: 1 },
    ],
    // sliding 2
    &[
    ],
    // sliding 3
    &[
        RawMove { row: false, path: &[], index: 2, split_first: 1, split_second: 2 },
        RawMove { row: false, path: &[1, 1], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 2 },
        RawMove { row: true, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[1], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 2, split_first: 2, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 2, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 3, split_second: 2 },
        RawMove { row: true, path: &[1], index: 1, split_first: 2, split_second: 1 },
    ],
    // sliding 4
    &[
    ],
    // sliding 5
    &[
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 2, split_first: 3, split_second: 2 },
        RawMove { row: false, path: &[], index: 1, split_first: 3, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 2 },
        RawMove { row: true, path: &[1], index: 1, split_first: 1, split_second: 1 },
    ],
    // sliding 6
    &[
    ],
    // sliding 7
    &[
        RawMove { row: false, path: &[], index: 1, split_first: 2, split_second: 3 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 2, split_first: 2, split_second: 1 },
        RawMove { row: true, path: &[1], index: 2, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 3, split_second: 3 },
        RawMove { row: true, path: &[1], index: 1, split_first: 2, split_second: 2 },
        RawMove { row: true, path: &[1], index: 1, split_first: 1, split_second: 1 },
    ],
    // sliding 8
    &[
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2, 1, 2], index: 2, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2, 1, 2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 1, split_first: 2, split_second: 2 },
        RawMove { row: false, path: &[2], index: 1, split_first: 1, split_second: 1 },
    ],
    // sliding 9
    &[
    ],
    // sliding 10
    &[
        RawMove { row: true, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 2, split_first: 2, split_second: 2 },
        RawMove { row: true, path: &[1, 2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 1 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 1 },
        RawMove { row: true, path: &[2, 3], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[1, 2], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 3 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 3 },
        RawMove { row: false, path: &[1], index: 2, split_first: 1, split_second: 2 },
        RawMove { row: true, path: &[1, 2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: true, path: &[], index: 1, split_first: 2, split_second: 3 },
        RawMove { row: true, path: &[1], index: 1, split_first: 1, split_second: 2 },
    ],
    // sliding 11
    &[
    ],
    // sliding 12
    &[
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: false, path: &[], index: 1, split_first: 1, split_second: 2 },
        RawMove { row: false, path: &[1], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[1], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 2, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[2], index: 1, split_first: 1, split_second: 1 },
        RawMove { row: false, path: &[1], index: 1, split_first: 1, split_second: 1 },
    ],
];
