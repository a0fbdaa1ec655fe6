//! Convex polygon dissections and their correspondence with
//! parenthesizations of the identity list, plus SVG rendering.
//!
//! Conventions: the polygon has `n+1` vertices `0..=n` placed
//! counterclockwise with vertex 0 at the top; edge `t` (for `1 <= t <= n`)
//! joins vertices `t-1` and `t`, edge 0 joins vertices `n` and 0. A
//! position interval `[i, j]` of the identity list corresponds to the
//! diagonal `(i-1, j)`; the maximal interval corresponds to edge 0 and
//! contributes no diagonal.

use serde::{Deserialize, Serialize};

use crate::bijections::parens_to_ordered_partition;
use crate::counting::DissectionType;
use crate::error::{Error, Result};
use crate::types::ParenthesizedList;

/// A set of pairwise non-crossing diagonals of the `(n+1)`-gon, stored as
/// vertex pairs `(a, b)` with `a < b`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawPolygonDissection")]
pub struct PolygonDissection {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawPolygonDissection {
    n: usize,
    diagonals: Vec<(usize, usize)>,
}

impl From<RawPolygonDissection> for PolygonDissection {
    fn from(raw: RawPolygonDissection) -> Self {
        PolygonDissection::new(raw.n, raw.diagonals)
    }
}

impl PolygonDissection {
    /// Orders each pair and sorts the set; does not validate.
    pub fn new<I>(n: usize, diagonals: I) -> PolygonDissection
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut diagonals: Vec<(usize, usize)> = diagonals
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        diagonals.sort_unstable();
        PolygonDissection { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of polygon edges.
    pub fn sides(&self) -> usize {
        self.n + 1
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::NTooSmall);
        }
        for &(a, b) in &self.diagonals {
            if b > self.n {
                return Err(Error::DiagonalOutOfRange);
            }
            // (a, a+1) is a side, and so is (0, n).
            if b - a < 2 || (a == 0 && b == self.n) {
                return Err(Error::AdjacentDiagonal);
            }
        }
        for w in self.diagonals.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateDiagonal);
            }
        }
        // Two diagonals cross in the interior iff their endpoints
        // interleave around the polygon.
        for (idx, &(a, b)) in self.diagonals.iter().enumerate() {
            for &(c, d) in &self.diagonals[idx + 1..] {
                let interleaved = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if interleaved {
                    return Err(Error::CrossingDiagonals);
                }
            }
        }
        Ok(())
    }
}

/// Maps a parenthesization of the identity list to a dissection: each
/// non-maximal interval `[i, j]` becomes the diagonal `(i-1, j)`.
pub fn dissection_from_parenthesization(p: &ParenthesizedList) -> Result<PolygonDissection> {
    p.validate()?;
    if !p.is_identity_perm() {
        return Err(Error::NonIdentityPerm);
    }
    let n = p.n();
    let diagonals: Vec<(usize, usize)> = p
        .intervals()
        .iter()
        .filter(|&&iv| iv != (1, n))
        .map(|&(l, r)| (l - 1, r))
        .collect();
    let d = PolygonDissection::new(n, diagonals);
    d.validate()?;
    Ok(d)
}

/// The inverse map: diagonal `(a, b)` becomes the interval `[a+1, b]`, and
/// the maximal interval is always present.
pub fn parenthesization_from_dissection(d: &PolygonDissection) -> Result<ParenthesizedList> {
    d.validate()?;
    let n = d.n();
    let mut intervals: Vec<(usize, usize)> =
        d.diagonals().iter().map(|&(a, b)| (a + 1, b)).collect();
    intervals.push((1, n));
    let p = ParenthesizedList::identity(n, intervals);
    p.validate()?;
    Ok(p)
}

/// The type of the dissection a parenthesization describes, read off the
/// ordered partition: a block of cardinality `a` bounds an internal polygon
/// with `a+1` edges.
pub fn dissection_type(p: &ParenthesizedList) -> Result<DissectionType> {
    let q = parens_to_ordered_partition(p)?;
    let sizes: Vec<usize> = q.blocks().iter().map(|b| b.len()).collect();
    Ok(DissectionType::from_block_sizes(&sizes))
}

fn fmt2(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// Deterministic SVG: a regular `(n+1)`-gon on a circle with vertex 0 at
/// the top, edges labelled `0..=n` counterclockwise, one line element per
/// diagonal. Identical input yields byte-identical output.
pub fn render_svg(d: &PolygonDissection) -> Result<String> {
    d.validate()?;
    let sides = d.sides();
    let (cx, cy, radius) = (200.0_f64, 200.0_f64, 150.0_f64);
    let angle = |v: usize| -> f64 {
        std::f64::consts::FRAC_PI_2 + 2.0 * std::f64::consts::PI * (v as f64) / (sides as f64)
    };
    // The y axis points down in SVG; negate the sine so that increasing
    // angles run counterclockwise on screen.
    let point = |v: usize, r: f64| -> (f64, f64) {
        (cx + r * angle(v).cos(), cy - r * angle(v).sin())
    };

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n",
    );

    let points: Vec<String> = (0..sides)
        .map(|v| {
            let (x, y) = point(v, radius);
            format!("{},{}", fmt2(x), fmt2(y))
        })
        .collect();
    svg.push_str(&format!(
        "  <polygon class=\"outline\" points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n",
        points.join(" ")
    ));

    for &(a, b) in d.diagonals() {
        let (x1, y1) = point(a, radius);
        let (x2, y2) = point(b, radius);
        svg.push_str(&format!(
            "  <line class=\"diagonal\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"1\"/>\n",
            fmt2(x1),
            fmt2(y1),
            fmt2(x2),
            fmt2(y2)
        ));
    }

    // Edge t joins vertices t-1 and t; edge 0 joins n and 0. Labels sit
    // just outside the midpoint of each edge.
    for t in 0..sides {
        let (va, vb) = if t == 0 { (d.n(), 0) } else { (t - 1, t) };
        let (xa, ya) = point(va, radius);
        let (xb, yb) = point(vb, radius);
        let (mx, my) = ((xa + xb) / 2.0, (ya + yb) / 2.0);
        let (dx, dy) = (mx - cx, my - cy);
        let len = (dx * dx + dy * dy).sqrt();
        let (lx, ly) = (cx + dx / len * (radius + 18.0), cy + dy / len * (radius + 18.0));
        svg.push_str(&format!(
            "  <text class=\"edge-label\" x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>\n",
            fmt2(lx),
            fmt2(ly),
            t
        ));
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}
