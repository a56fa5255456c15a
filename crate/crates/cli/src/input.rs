//! Polygon text format: one `x y` pair per line, `#` comments, blank lines ignored.

use std::fmt::Write;
use std::path::Path;

use tri_inscribe::geom::Point2;
use tri_inscribe::Polygon;

use crate::CliError;

/// Raw vertices in file order, before validation.
pub fn read_vertices(text: &str) -> Result<Vec<Point2<f64>>, CliError> {
    let mut pts = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(CliError::Validation(format!("line {}: expected 2 numbers, got {}", ln + 1, fields.len())));
        }
        let mut xy = [0.0; 2];
        for (k, f) in fields.iter().enumerate() {
            xy[k] = f
                .parse::<f64>()
                .map_err(|_| CliError::Validation(format!("line {}: cannot parse {f:?} as a number", ln + 1)))?;
        }
        pts.push(Point2::new(xy[0], xy[1]));
    }
    Ok(pts)
}

pub fn parse_polygon_str(text: &str) -> Result<Polygon, CliError> {
    Polygon::new(read_vertices(text)?).map_err(CliError::from)
}

pub fn parse_polygon_file(path: &Path) -> Result<Polygon, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    parse_polygon_str(&text)
}

/// Inverse of [`parse_polygon_str`]; round-trips exactly.
pub fn format_polygon(poly: &Polygon) -> String {
    let mut s = String::new();
    for v in poly.vertices() {
        writeln!(s, "{:?} {:?}", v.x, v.y).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_and_comments() {
        let p = parse_polygon_str("# unit square\n0 0\n\n1 0\n  1 1\n0 1\n").unwrap();
        assert_eq!(p.len(), 4);
        assert!((p.area() - 1.0).abs() < 1e-15);
        assert_eq!(parse_polygon_str(&format_polygon(&p)).unwrap(), p);
    }

    #[test]
    fn clockwise_is_normalized() {
        let p = parse_polygon_str("0 0\n0 1\n1 1\n1 0\n").unwrap();
        assert!(p.area() > 0.0);
    }

    #[test]
    fn bad_lines() {
        let e = parse_polygon_str("0 0\n1 0 3\n1 1\n").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_polygon_str("0 0\n1 x\n1 1\n").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        let e = parse_polygon_str("0 0\n1 0\n1 1\n1 0\n0 1\n").unwrap_err();
        assert!(e.to_string().contains("vertex 3"), "{e}");
    }
}
