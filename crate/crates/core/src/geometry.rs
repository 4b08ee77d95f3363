//! Geometric realization of terms as tilings of the unit square.
//!
//! Coordinates are exact rationals with the origin at the top-left corner and
//! `y` growing downwards, so vertical children stack from `y = 0`.

use std::collections::HashSet;

use num_rational::Ratio;

use crate::term::{Label, Path, Term};

pub type Coord = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rect {
    pub x0: Coord,
    pub y0: Coord,
    pub x1: Coord,
    pub y1: Coord,
}

impl Rect {
    pub fn unit() -> Self {
        Rect {
            x0: Coord::from_integer(0),
            y0: Coord::from_integer(0),
            x1: Coord::from_integer(1),
            y1: Coord::from_integer(1),
        }
    }

    pub fn width(&self) -> Coord {
        self.x1 - self.x0
    }

    pub fn height(&self) -> Coord {
        self.y1 - self.y0
    }

    pub fn area(&self) -> Coord {
        self.width() * self.height()
    }

    /// True if the interiors intersect.
    pub fn overlaps(&self, other: &Rect) -> bool {
        self.x0 < other.x1 && other.x0 < self.x1 && self.y0 < other.y1 && other.y0 < self.y1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub path: Path,
    pub label: Label,
    pub rect: Rect,
}

/// Leaf rectangles in leaf order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub cells: Vec<Cell>,
}

impl Layout {
    pub fn get(&self, path: &Path) -> Option<&Rect> {
        self.cells.iter().find(|c| &c.path == path).map(|c| &c.rect)
    }
}

/// Splits each composite among its children in proportion to leaf counts.
pub fn layout(t: &Term) -> Layout {
    fn go(t: &Term, rect: Rect, path: &mut Vec<usize>, out: &mut Vec<Cell>) {
        match t {
            Term::Leaf(label) => out.push(Cell {
                path: Path(path.clone()),
                label: label.clone(),
                rect,
            }),
            Term::H(children) | Term::V(children) => {
                let horizontal = matches!(t, Term::H(_));
                let total = t.leaf_count() as i64;
                let mut before = 0i64;
                for (i, child) in children.iter().enumerate() {
                    let after = before + child.leaf_count() as i64;
                    let lo = Coord::new(before, total);
                    let hi = Coord::new(after, total);
                    let sub = if horizontal {
                        let w = rect.width();
                        Rect {
                            x0: rect.x0 + w * lo,
                            x1: rect.x0 + w * hi,
                            ..rect.clone()
                        }
                    } else {
                        let h = rect.height();
                        Rect {
                            y0: rect.y0 + h * lo,
                            y1: rect.y0 + h * hi,
                            ..rect.clone()
                        }
                    };
                    path.push(i + 1);
                    go(child, sub, path, out);
                    path.pop();
                    before = after;
                }
            }
        }
    }
    let mut cells = Vec::new();
    go(t, Rect::unit(), &mut Vec::new(), &mut cells);
    Layout { cells }
}

/// Cyclic sequence of labels read around the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderWord(pub Vec<Label>);

impl BorderWord {
    /// Equality up to rotation.
    pub fn cyclic_eq(&self, other: &BorderWord) -> bool {
        let (a, b) = (&self.0, &other.0);
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|shift| (0..a.len()).all(|i| a[(i + shift) % a.len()] == b[i]))
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }
}

/// Labels of the leaves touching the boundary, counter-clockwise from the
/// leaf at the bottom-left corner; each leaf is listed once.
pub fn border_word(t: &Term) -> BorderWord {
    let cells = layout(t).cells;
    let zero = Coord::from_integer(0);
    let one = Coord::from_integer(1);

    let mut bottom: Vec<&Cell> = cells.iter().filter(|c| c.rect.y1 == one).collect();
    bottom.sort_by_key(|c| c.rect.x0);
    let mut right: Vec<&Cell> = cells.iter().filter(|c| c.rect.x1 == one).collect();
    right.sort_by_key(|c| std::cmp::Reverse(c.rect.y0));
    let mut top: Vec<&Cell> = cells.iter().filter(|c| c.rect.y0 == zero).collect();
    top.sort_by_key(|c| std::cmp::Reverse(c.rect.x0));
    let mut left: Vec<&Cell> = cells.iter().filter(|c| c.rect.x0 == zero).collect();
    left.sort_by_key(|c| c.rect.y0);

    let mut seen = HashSet::new();
    let word = bottom
        .into_iter()
        .chain(right)
        .chain(top)
        .chain(left)
        .filter(|c| seen.insert(&c.path))
        .map(|c| c.label.clone())
        .collect();
    BorderWord(word)
}

/// True when every leaf touches the boundary of the square.
pub fn all_leaves_on_border(t: &Term) -> bool {
    let zero = Coord::from_integer(0);
    let one = Coord::from_integer(1);
    layout(t).cells.iter().all(|c| {
        c.rect.x0 == zero || c.rect.y0 == zero || c.rect.x1 == one || c.rect.y1 == one
    })
}
