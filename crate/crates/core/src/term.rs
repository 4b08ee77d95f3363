//! Terms of the free double semigroup.
//!
//! A [`Term`] is a leaf, a horizontal composite (`|`) or a vertical composite
//! (`/`). Composites are kept flattened: no `H` node has an `H` child and no
//! `V` node has a `V` child, so structural equality is equality modulo
//! associativity. Vertical composites list their children top to bottom.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("invalid label {0:?}: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidLabel(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("empty input")]
    EmptyInput,
    #[error("empty grid")]
    EmptyGrid,
    #[error("ragged grid: row {row} has {found} cells, expected {expected}")]
    RaggedGrid {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("path {0} does not address a node")]
    BadPath(Path),
    #[error("path {0} does not address a leaf")]
    NotALeaf(Path),
}

/// An element symbol.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(name: &str) -> Result<Self, TermError> {
        if is_ident(name) {
            Ok(Label(Arc::from(name)))
        } else {
            Err(TermError::InvalidLabel(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Composition direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    /// `|`, children left to right.
    Horizontal,
    /// `/`, children top to bottom.
    Vertical,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// A flattened term. Construct composites through [`Term::h`], [`Term::v`]
/// or [`Term::compose`] so that the flattening invariant holds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Leaf(Label),
    H(Vec<Term>),
    V(Vec<Term>),
}

/// Position of a node: 1-based child indices from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    pub fn child(&self, index: usize) -> Self {
        let mut steps = self.0.clone();
        steps.push(index);
        Path(steps)
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses `[]`, `[1,2]` or `1.2` (empty string is the root).
    pub fn parse(text: &str) -> Result<Self, TermError> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(trimmed);
        let mut steps = Vec::new();
        for part in inner.split([',', '.']) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            match part.parse::<usize>() {
                Ok(i) if i >= 1 => steps.push(i),
                _ => {
                    return Err(TermError::Syntax {
                        offset: 0,
                        message: format!("bad path component {part:?} in {text:?}"),
                    })
                }
            }
        }
        Ok(Path(steps))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

impl Term {
    pub fn leaf(name: &str) -> Result<Self, TermError> {
        Label::new(name).map(Term::Leaf)
    }

    /// Horizontal composite, flattened. A single child is returned as is.
    ///
    /// # Panics
    /// If `children` is empty.
    pub fn h(children: Vec<Term>) -> Term {
        Term::compose(Orientation::Horizontal, children)
    }

    /// Vertical composite (top to bottom), flattened.
    ///
    /// # Panics
    /// If `children` is empty.
    pub fn v(children: Vec<Term>) -> Term {
        Term::compose(Orientation::Vertical, children)
    }

    pub fn compose(orientation: Orientation, children: Vec<Term>) -> Term {
        assert!(!children.is_empty(), "composite needs at least one child");
        let mut flat = Vec::with_capacity(children.len());
        for child in children {
            match (orientation, child) {
                (Orientation::Horizontal, Term::H(grand)) => flat.extend(grand),
                (Orientation::Vertical, Term::V(grand)) => flat.extend(grand),
                (_, other) => flat.push(other),
            }
        }
        if flat.len() == 1 {
            return flat.pop().unwrap();
        }
        match orientation {
            Orientation::Horizontal => Term::H(flat),
            Orientation::Vertical => Term::V(flat),
        }
    }

    pub fn orientation(&self) -> Option<Orientation> {
        match self {
            Term::Leaf(_) => None,
            Term::H(_) => Some(Orientation::Horizontal),
            Term::V(_) => Some(Orientation::Vertical),
        }
    }

    pub fn children(&self) -> &[Term] {
        match self {
            Term::Leaf(_) => &[],
            Term::H(c) | Term::V(c) => c,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Term::Leaf(_))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::H(c) | Term::V(c) => c.iter().map(Term::leaf_count).sum(),
        }
    }

    /// Rebuilds the term through the smart constructors.
    pub fn normalize(&self) -> Term {
        match self {
            Term::Leaf(_) => self.clone(),
            Term::H(c) => Term::h(c.iter().map(Term::normalize).collect()),
            Term::V(c) => Term::v(c.iter().map(Term::normalize).collect()),
        }
    }

    /// True when the flattening invariant holds everywhere.
    pub fn is_flat(&self) -> bool {
        match self {
            Term::Leaf(_) => true,
            Term::H(c) => c.len() >= 2 && c.iter().all(|t| !matches!(t, Term::H(_)) && t.is_flat()),
            Term::V(c) => c.len() >= 2 && c.iter().all(|t| !matches!(t, Term::V(_)) && t.is_flat()),
        }
    }

    pub fn subterm(&self, path: &Path) -> Option<&Term> {
        let mut node = self;
        for &step in path.steps() {
            node = node.children().get(step.checked_sub(1)?)?;
        }
        Some(node)
    }

    /// Leaves with their paths, in left-to-right / top-to-bottom order.
    pub fn leaves(&self) -> Vec<(Path, &Label)> {
        fn walk<'a>(t: &'a Term, path: &mut Vec<usize>, out: &mut Vec<(Path, &'a Label)>) {
            match t {
                Term::Leaf(l) => out.push((Path(path.clone()), l)),
                Term::H(c) | Term::V(c) => {
                    for (i, child) in c.iter().enumerate() {
                        path.push(i + 1);
                        walk(child, path, out);
                        path.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut Vec::new(), &mut out);
        out
    }

    /// Returns a copy with the leaves at `p1` and `p2` exchanged.
    pub fn swap_leaves(&self, p1: &Path, p2: &Path) -> Result<Term, TermError> {
        let l1 = match self.subterm(p1) {
            Some(Term::Leaf(l)) => l.clone(),
            _ => return Err(TermError::NotALeaf(p1.clone())),
        };
        let l2 = match self.subterm(p2) {
            Some(Term::Leaf(l)) => l.clone(),
            _ => return Err(TermError::NotALeaf(p2.clone())),
        };
        let t = self.replace_leaf(p1.steps(), &l2);
        Ok(t.replace_leaf(p2.steps(), &l1))
    }

    fn replace_leaf(&self, steps: &[usize], label: &Label) -> Term {
        match (self, steps.split_first()) {
            (_, None) => Term::Leaf(label.clone()),
            (Term::H(c), Some((&i, rest))) | (Term::V(c), Some((&i, rest))) => {
                let mut c = c.clone();
                c[i - 1] = c[i - 1].replace_leaf(rest, label);
                if matches!(self, Term::H(_)) {
                    Term::H(c)
                } else {
                    Term::V(c)
                }
            }
            (Term::Leaf(_), Some(_)) => unreachable!("path checked by caller"),
        }
    }

    /// Replaces the node at `path`, re-flattening the result.
    pub(crate) fn replace_at(&self, steps: &[usize], replacement: Term) -> Term {
        match steps.split_first() {
            None => replacement,
            Some((&i, rest)) => {
                let mut c = self.children().to_vec();
                c[i - 1] = c[i - 1].replace_at(rest, replacement);
                Term::compose(self.orientation().expect("composite on path"), c)
            }
        }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(l) => write!(f, "{l}"),
            Term::H(c) | Term::V(c) => {
                let mut tuple = f.debug_tuple(if matches!(self, Term::H(_)) { "H" } else { "V" });
                for child in c {
                    tuple.field(child);
                }
                tuple.finish()
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_term(self))
    }
}

/// Canonical text. Composite children of composites are parenthesized.
pub fn format_term(t: &Term) -> String {
    fn go(t: &Term, out: &mut String, nested: bool) {
        match t {
            Term::Leaf(l) => out.push_str(l.as_str()),
            Term::H(c) | Term::V(c) => {
                let sep = if matches!(t, Term::H(_)) { '|' } else { '/' };
                if nested {
                    out.push('(');
                }
                for (i, child) in c.iter().enumerate() {
                    if i > 0 {
                        out.push(sep);
                    }
                    go(child, out, true);
                }
                if nested {
                    out.push(')');
                }
            }
        }
    }
    let mut out = String::new();
    go(t, &mut out, false);
    out
}

/// Parses the term grammar:
///
/// ```text
/// term  := vterm
/// vterm := hterm ('/' hterm)*
/// hterm := atom ('|' atom)*
/// atom  := IDENT | '(' term ')' | grid
/// grid  := '[' row (';' row)* ']'
/// row   := IDENT+
/// ```
pub fn parse_term(text: &str) -> Result<Term, TermError> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(TermError::EmptyInput);
    }
    let t = p.vterm()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn error(&self, message: &str) -> TermError {
        let found = match self.peek() {
            Some(c) => format!("{message} (found {c:?})"),
            None => format!("{message} (found end of input)"),
        };
        TermError::Syntax {
            offset: self.pos,
            message: found,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn vterm(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.hterm()?];
        while self.eat('/') {
            parts.push(self.hterm()?);
        }
        Ok(Term::v(parts))
    }

    fn hterm(&mut self) -> Result<Term, TermError> {
        let mut parts = vec![self.atom()?];
        while self.eat('|') {
            parts.push(self.atom()?);
        }
        Ok(Term::h(parts))
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.vterm()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(t)
            }
            Some('[') => {
                self.pos += 1;
                self.grid()
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => Ok(Term::Leaf(self.ident()?)),
            _ => Err(self.error("expected identifier, '(' or '['")),
        }
    }

    fn ident(&mut self) -> Result<Label, TermError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected identifier"));
        }
        Label::new(&self.src[start..self.pos]).map_err(|_| TermError::Syntax {
            offset: start,
            message: "identifier must not start with a digit".into(),
        })
    }

    fn grid(&mut self) -> Result<Term, TermError> {
        let open = self.pos - 1;
        let mut rows = vec![self.row()?];
        while self.eat(';') {
            rows.push(self.row()?);
        }
        if !self.eat(']') {
            return Err(self.error("expected ';' or ']' in grid"));
        }
        from_grid(&rows).map_err(|e| TermError::Syntax {
            offset: open,
            message: e.to_string(),
        })
    }

    fn row(&mut self) -> Result<Vec<Label>, TermError> {
        let mut cells = vec![self.ident()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == '_' => cells.push(self.ident()?),
                _ => return Ok(cells),
            }
        }
    }
}

/// Builds the term of a rectangular grid, rows listed top to bottom.
pub fn from_grid(rows: &[Vec<Label>]) -> Result<Term, TermError> {
    let width = rows.first().map(Vec::len).unwrap_or(0);
    if width == 0 {
        return Err(TermError::EmptyGrid);
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(TermError::RaggedGrid {
                row: i + 1,
                expected: width,
                found: row.len(),
            });
        }
    }
    Ok(Term::v(
        rows.iter()
            .map(|row| Term::h(row.iter().cloned().map(Term::Leaf).collect()))
            .collect(),
    ))
}

/// Multiset of leaf labels.
pub fn leaf_multiset(t: &Term) -> BTreeMap<Label, usize> {
    let mut out = BTreeMap::new();
    for (_, label) in t.leaves() {
        *out.entry(label.clone()).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Term {
        Term::leaf(s).unwrap()
    }

    fn labels(names: &[&str]) -> Vec<Label> {
        names.iter().map(|n| Label::new(n).unwrap()).collect()
    }

    #[test]
    fn parses_single_atom() {
        assert_eq!(parse_term("a").unwrap(), l("a"));
    }

    #[test]
    fn parses_vertical_of_rows() {
        let t = parse_term("(a|b)/(c|d|e)").unwrap();
        assert_eq!(
            t,
            Term::V(vec![
                Term::H(vec![l("a"), l("b")]),
                Term::H(vec![l("c"), l("d"), l("e")]),
            ])
        );
    }

    #[test]
    fn associativity_is_flattened() {
        let flat = parse_term("a|b|c").unwrap();
        assert_eq!(flat, parse_term("(a|b)|c").unwrap());
        assert_eq!(flat, parse_term("a|(b|c)").unwrap());
        assert_eq!(flat, Term::H(vec![l("a"), l("b"), l("c")]));
    }

    #[test]
    fn bar_binds_tighter_than_slash() {
        assert_eq!(parse_term("a|b/c|d").unwrap(), parse_term("(a|b)/(c|d)").unwrap());
    }

    #[test]
    fn grid_literal_sugar() {
        assert_eq!(parse_term("[a b; c d]").unwrap(), parse_term("(a|b)/(c|d)").unwrap());
        assert_eq!(parse_term("[a b c]").unwrap(), parse_term("a|b|c").unwrap());
        assert_eq!(parse_term("x|[a;b]").unwrap(), parse_term("x|(a/b)").unwrap());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        assert_eq!(parse_term("").unwrap_err(), TermError::EmptyInput);
        assert_eq!(parse_term("   ").unwrap_err(), TermError::EmptyInput);
        match parse_term("a|").unwrap_err() {
            TermError::Syntax { offset, .. } => assert_eq!(offset, 2),
            e => panic!("unexpected {e:?}"),
        }
        match parse_term("(a|b").unwrap_err() {
            TermError::Syntax { offset, .. } => assert_eq!(offset, 4),
            e => panic!("unexpected {e:?}"),
        }
        match parse_term("a b").unwrap_err() {
            TermError::Syntax { offset, .. } => assert_eq!(offset, 2),
            e => panic!("unexpected {e:?}"),
        }
        match parse_term("[a b; c]").unwrap_err() {
            TermError::Syntax { offset, .. } => assert_eq!(offset, 0),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_term("1a").is_err());
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_term(&l("a")), "a");
        assert_eq!(format_term(&Term::h(vec![l("a"), l("b")])), "a|b");
        let t = Term::v(vec![Term::h(vec![l("a"), l("b")]), Term::h(vec![l("c"), l("d")])]);
        assert_eq!(format_term(&t), "(a|b)/(c|d)");
        assert_eq!(parse_term(&format_term(&t)).unwrap(), t);
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(from_grid(&[labels(&["a"])]).unwrap(), l("a"));
        assert_eq!(
            from_grid(&[labels(&["a", "b"]), labels(&["c", "d"])]).unwrap(),
            parse_term("(a|b)/(c|d)").unwrap()
        );
        assert_eq!(from_grid(&[labels(&["a", "b", "c"])]).unwrap(), parse_term("a|b|c").unwrap());
        assert_eq!(
            from_grid(&[labels(&["a"]), labels(&["b"])]).unwrap(),
            parse_term("a/b").unwrap()
        );
        assert_eq!(from_grid(&[]).unwrap_err(), TermError::EmptyGrid);
        assert_eq!(from_grid(&[vec![]]).unwrap_err(), TermError::EmptyGrid);
        assert!(matches!(
            from_grid(&[labels(&["a", "b"]), labels(&["c"])]),
            Err(TermError::RaggedGrid { row: 2, expected: 2, found: 1 })
        ));
    }

    #[test]
    fn multiset_counts_repeats() {
        let m = leaf_multiset(&parse_term("(a|b)/(a|d)").unwrap());
        assert_eq!(m[&Label::new("a").unwrap()], 2);
        assert_eq!(m.values().sum::<usize>(), 4);
        assert_eq!(leaf_multiset(&l("a")).len(), 1);
    }

    #[test]
    fn labels_are_validated() {
        assert!(Label::new("a_1").is_ok());
        assert!(Label::new("_x").is_ok());
        assert!(Label::new("").is_err());
        assert!(Label::new("9").is_err());
        assert!(Label::new("a-b").is_err());
    }

    #[test]
    fn swap_and_subterm_by_path() {
        let t = parse_term("(a|b)/(c|d)").unwrap();
        assert_eq!(t.subterm(&Path(vec![2, 1])), Some(&l("c")));
        assert_eq!(t.subterm(&Path(vec![3])), None);
        let s = t.swap_leaves(&Path(vec![1, 1]), &Path(vec![1, 2])).unwrap();
        assert_eq!(s, parse_term("(b|a)/(c|d)").unwrap());
        assert!(matches!(t.swap_leaves(&Path(vec![1]), &Path(vec![2, 1])), Err(TermError::NotALeaf(_))));
    }

    #[test]
    fn path_text() {
        assert_eq!(Path::parse("[1,2]").unwrap(), Path(vec![1, 2]));
        assert_eq!(Path::parse("2.3").unwrap(), Path(vec![2, 3]));
        assert_eq!(Path::parse("[]").unwrap(), Path::root());
        assert!(Path::parse("[0]").is_err());
        assert_eq!(Path(vec![1, 2]).to_string(), "[1,2]");
    }
}
