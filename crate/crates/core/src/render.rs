//! ASCII and SVG drawings of term layouts.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{layout, Coord};
use crate::term::{Label, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelVisibility {
    All,
    /// Hides labels starting with `_`, which stand for anonymous elements.
    NamedOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: usize,
    pub height: usize,
    pub labels: LabelVisibility,
}

impl RenderOptions {
    pub fn new(width: usize, height: usize) -> Result<Self, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError::ZeroDimension);
        }
        Ok(RenderOptions {
            width,
            height,
            labels: LabelVisibility::All,
        })
    }

    pub fn named_only(mut self) -> Self {
        self.labels = LabelVisibility::NamedOnly;
        self
    }

    fn shows(&self, label: &Label) -> bool {
        match self.labels {
            LabelVisibility::All => true,
            LabelVisibility::NamedOnly => !label.as_str().starts_with('_'),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("width and height must be at least 1")]
    ZeroDimension,
    #[error("canvas {width}x{height} too small: leaf {label} gets {cols}x{rows} characters, need 3x3")]
    CanvasTooSmall {
        width: usize,
        height: usize,
        label: String,
        cols: usize,
        rows: usize,
    },
}

/// `round(value * scale)` with halves rounded up.
fn round_half_up(value: Coord, scale: usize) -> usize {
    let scaled = value * Coord::from_integer(scale as i64) + Coord::new(1, 2);
    scaled.floor().to_integer() as usize
}

const UP: u8 = 1;
const DOWN: u8 = 2;
const LEFT: u8 = 4;
const RIGHT: u8 = 8;

fn box_char(mask: u8) -> char {
    match mask {
        0 => ' ',
        m if m == LEFT | RIGHT || m == LEFT || m == RIGHT => '─',
        m if m == UP | DOWN || m == UP || m == DOWN => '│',
        m if m == DOWN | RIGHT => '┌',
        m if m == DOWN | LEFT => '┐',
        m if m == UP | RIGHT => '└',
        m if m == UP | LEFT => '┘',
        m if m == UP | DOWN | RIGHT => '├',
        m if m == UP | DOWN | LEFT => '┤',
        m if m == DOWN | LEFT | RIGHT => '┬',
        m if m == UP | LEFT | RIGHT => '┴',
        _ => '┼',
    }
}

/// Box-drawing picture of `layout(t)` on a `width`×`height` character grid.
pub fn render_ascii(t: &Term, opts: &RenderOptions) -> Result<String, RenderError> {
    let (w, h) = (opts.width, opts.height);
    let cells = layout(t).cells;
    let mut boxes = Vec::with_capacity(cells.len());
    for cell in &cells {
        let c0 = round_half_up(cell.rect.x0, w - 1);
        let c1 = round_half_up(cell.rect.x1, w - 1);
        let r0 = round_half_up(cell.rect.y0, h - 1);
        let r1 = round_half_up(cell.rect.y1, h - 1);
        if c1 - c0 < 2 || r1 - r0 < 2 {
            return Err(RenderError::CanvasTooSmall {
                width: w,
                height: h,
                label: cell.label.to_string(),
                cols: c1 - c0 + 1,
                rows: r1 - r0 + 1,
            });
        }
        boxes.push((c0, r0, c1, r1, &cell.label));
    }

    let mut walls = vec![vec![0u8; w]; h];
    for &(c0, r0, c1, r1, _) in &boxes {
        for c in c0..c1 {
            for r in [r0, r1] {
                walls[r][c] |= RIGHT;
                walls[r][c + 1] |= LEFT;
            }
        }
        for r in r0..r1 {
            for c in [c0, c1] {
                walls[r][c] |= DOWN;
                walls[r + 1][c] |= UP;
            }
        }
    }
    let mut canvas: Vec<Vec<char>> = walls
        .iter()
        .map(|row| row.iter().map(|&m| box_char(m)).collect())
        .collect();

    for &(c0, r0, c1, r1, label) in &boxes {
        if !opts.shows(label) {
            continue;
        }
        let inner = c1 - c0 - 1;
        let mut text: Vec<char> = label.as_str().chars().collect();
        if text.len() > inner {
            text.truncate(inner - 1);
            text.push('…');
        }
        let row = r0 + (r1 - r0) / 2;
        let start = c0 + 1 + (inner - text.len()) / 2;
        for (i, ch) in text.into_iter().enumerate() {
            canvas[row][start + i] = ch;
        }
    }

    let mut out = String::with_capacity((w + 1) * h * 3);
    for row in canvas {
        out.extend(row);
        out.push('\n');
    }
    Ok(out)
}

/// Decimal with at most three fractional digits, halves rounded up.
fn decimal(value: Coord) -> String {
    let thousandths = (value * Coord::from_integer(1000) + Coord::new(1, 2)).floor().to_integer();
    let (int, frac) = (thousandths / 1000, thousandths % 1000);
    if frac == 0 {
        format!("{int}")
    } else {
        let s = format!("{int}.{frac:03}");
        s.trim_end_matches('0').to_string()
    }
}

/// Standalone SVG 1.1 document with one rectangle and label per leaf.
pub fn render_svg(t: &Term, opts: &RenderOptions) -> Vec<u8> {
    let (w, h) = (opts.width as i64, opts.height as i64);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let cells = layout(t).cells;
    for cell in &cells {
        let r = &cell.rect;
        let sx = |c: Coord| c * Coord::from_integer(w);
        let sy = |c: Coord| c * Coord::from_integer(h);
        let _ = writeln!(
            out,
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>",
            decimal(sx(r.x0)),
            decimal(sy(r.y0)),
            decimal(sx(r.width())),
            decimal(sy(r.height())),
        );
    }
    for cell in &cells {
        if !opts.shows(&cell.label) {
            continue;
        }
        let r = &cell.rect;
        let cx = (r.x0 + r.x1) / Coord::from_integer(2) * Coord::from_integer(w);
        let cy = (r.y0 + r.y1) / Coord::from_integer(2) * Coord::from_integer(h);
        let size = std::cmp::min(r.width() * Coord::from_integer(w), r.height() * Coord::from_integer(h))
            * Coord::new(2, 5);
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" font-family=\"serif\" font-style=\"italic\" font-size=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\">{}</text>",
            decimal(cx),
            decimal(cy),
            decimal(size),
            cell.label
        );
    }
    out.push_str("</svg>\n");
    out.into_bytes()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse_term;

    fn opts(w: usize, h: usize) -> RenderOptions {
        RenderOptions::new(w, h).unwrap()
    }

    #[test]
    fn single_leaf_box() {
        let out = render_ascii(&parse_term("a").unwrap(), &opts(5, 3)).unwrap();
        assert_eq!(out, "┌───┐\n│ a │\n└───┘\n");
    }

    #[test]
    fn two_by_two_grid() {
        let out = render_ascii(&parse_term("[a b; c d]").unwrap(), &opts(9, 5)).unwrap();
        assert_eq!(out, "┌───┬───┐\n│ a │ b │\n├───┼───┤\n│ c │ d │\n└───┴───┘\n");
    }

    #[test]
    fn long_labels_are_truncated() {
        let out = render_ascii(&parse_term("abcdef").unwrap(), &opts(5, 3)).unwrap();
        assert_eq!(out.lines().nth(1).unwrap(), "│ab…│");
    }

    #[test]
    fn canvas_too_small() {
        let err = render_ascii(&parse_term("a|b|c").unwrap(), &opts(6, 3)).unwrap_err();
        assert!(matches!(err, RenderError::CanvasTooSmall { .. }));
        assert!(RenderOptions::new(0, 3).is_err());
    }

    #[test]
    fn named_only_hides_anonymous() {
        let t = parse_term("_1|a").unwrap();
        let out = render_ascii(&t, &opts(9, 3).named_only()).unwrap();
        assert_eq!(out, "┌───┬───┐\n│   │ a │\n└───┴───┘\n");
    }

    #[test]
    fn svg_leaf() {
        let svg = String::from_utf8(render_svg(&parse_term("a").unwrap(), &opts(100, 100))).unwrap();
        assert_eq!(svg.matches("<rect").count(), 1);
        assert_eq!(svg.matches("<text").count(), 1);
        assert!(svg.contains("<rect x=\"0\" y=\"0\" width=\"100\" height=\"100\""));
    }

    #[test]
    fn svg_quadrants() {
        let svg = String::from_utf8(render_svg(&parse_term("[a b; c d]").unwrap(), &opts(100, 100))).unwrap();
        for (x, y) in [(0, 0), (50, 0), (0, 50), (50, 50)] {
            assert!(svg.contains(&format!("<rect x=\"{x}\" y=\"{y}\" width=\"50\" height=\"50\"")));
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(decimal(Coord::new(1, 3)), "0.333");
        assert_eq!(decimal(Coord::new(2, 3)), "0.667");
        assert_eq!(decimal(Coord::new(5, 2)), "2.5");
        assert_eq!(decimal(Coord::from_integer(7)), "7");
    }
}
