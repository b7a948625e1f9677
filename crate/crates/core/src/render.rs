//! SVG and ASCII drawings of representations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::contact::{CpgRepresentation, VertexId};
use crate::grid::{GridPoint, Membership};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorScheme {
    pub hub: String,
    pub secondary: String,
    pub sewing: String,
    pub other: String,
}

impl Default for ColorScheme {
    fn default() -> Self {
        Self {
            hub: "black".into(),
            secondary: "red".into(),
            sewing: "deepskyblue".into(),
            other: "gray".into(),
        }
    }
}

impl ColorScheme {
    fn color(&self, id: &VertexId) -> &str {
        match id {
            VertexId::A | VertexId::B => &self.hub,
            VertexId::Alpha(_) => &self.secondary,
            VertexId::Sew(..) => &self.sewing,
            VertexId::Free(_) => &self.other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: RenderFormat,
    /// Pixels per grid unit (SVG only).
    pub cell_size: u32,
    pub endpoint_markers: bool,
    pub colors: ColorScheme,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            format: RenderFormat::Svg,
            cell_size: 20,
            endpoint_markers: true,
            colors: ColorScheme::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error("cell size {0} is below the minimum of 4")]
    CellTooSmall(u32),
}

pub fn render(rep: &CpgRepresentation, opts: &RenderOptions) -> Result<String, RenderError> {
    match opts.format {
        RenderFormat::Svg => render_svg(rep, opts),
        RenderFormat::Ascii => Ok(render_ascii(rep)),
    }
}

/// One `<polyline>` per path. Screen coordinates are `(x * c, (h - y) * c)`
/// for cell size `c` and grid height `h`; arrowheads mark endpoints.
pub fn render_svg(rep: &CpgRepresentation, opts: &RenderOptions) -> Result<String, RenderError> {
    if opts.cell_size < 4 {
        return Err(RenderError::CellTooSmall(opts.cell_size));
    }
    let c = i64::from(opts.cell_size);
    let (w, h) = (rep.width(), rep.height());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"{} {} {} {}\">",
        (w + 2) * c,
        (h + 2) * c,
        -c,
        -c,
        (w + 2) * c,
        (h + 2) * c
    );
    if opts.endpoint_markers {
        let size = (c / 4).max(2);
        let _ = writeln!(
            out,
            "<defs><marker id=\"end\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerUnits=\"userSpaceOnUse\" markerWidth=\"{size}\" markerHeight=\"{size}\" orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"context-stroke\"/></marker></defs>"
        );
    }
    let stroke = (c / 8).max(1);
    for (id, path) in rep.entries() {
        let points: Vec<String> = path
            .corners()
            .iter()
            .map(|p| format!("{},{}", p.x * c, (h - p.y) * c))
            .collect();
        let markers = if opts.endpoint_markers {
            " marker-start=\"url(#end)\" marker-end=\"url(#end)\""
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "<polyline data-id=\"{id}\" points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{stroke}\"{markers}/>",
            points.join(" "),
            opts.colors.color(id)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// One character per grid point, top row first: `.` empty, `-`/`|` straight,
/// `+` bend, `o` endpoint, `*` a point shared by several paths.
pub fn render_ascii(rep: &CpgRepresentation) -> String {
    let mut cells: BTreeMap<GridPoint, (usize, char)> = BTreeMap::new();
    for (_, path) in rep.entries() {
        let pts: Vec<GridPoint> = path.points().collect();
        for (i, &p) in pts.iter().enumerate() {
            let ch = match path.classify(p) {
                Membership::Endpoint => 'o',
                Membership::Bend => '+',
                _ if pts[i - 1].y == p.y => '-',
                _ => '|',
            };
            let entry = cells.entry(p).or_insert((0, ch));
            entry.0 += 1;
        }
    }
    let mut out = String::new();
    for y in (0..=rep.height()).rev() {
        for x in 0..=rep.width() {
            let ch = match cells.get(&GridPoint::new(x, y)) {
                None => '.',
                Some((1, ch)) => *ch,
                Some(_) => '*',
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridPath;

    fn sample() -> CpgRepresentation {
        CpgRepresentation::from_entries(
            3,
            2,
            [
                (VertexId::free("p"), GridPath::from_coords(&[(0, 0), (2, 0), (2, 2)]).unwrap()),
                (VertexId::free("q"), GridPath::from_coords(&[(0, 1), (2, 1)]).unwrap()),
            ],
        )
    }

    #[test]
    fn ascii_drawing() {
        assert_eq!(render_ascii(&sample()), "..o.\no-*.\no-+.\n");
    }

    #[test]
    fn svg_has_one_polyline_per_path() {
        let svg = render_svg(&sample(), &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("points=\"0,40 40,40 40,0\""));
    }

    #[test]
    fn small_cells_rejected() {
        let opts = RenderOptions {
            cell_size: 3,
            ..RenderOptions::default()
        };
        assert_eq!(render_svg(&sample(), &opts), Err(RenderError::CellTooSmall(3)));
    }
}
