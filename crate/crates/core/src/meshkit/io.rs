//! Ingestion of triangulations in the two-file `.node`/`.ele` text format:
//! a vertex file and a cell file with whitespace-separated fields, `#`
//! comments, and a shared 0- or 1-based numbering detected from the first
//! vertex row.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::geometry::{Point2, Triangle2};
use super::mesh::TriMesh;

/// Yields `(1-based line number, content)` for lines that remain significant
/// after stripping `#` comments and surrounding whitespace.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            None
        } else {
            Some((i + 1, content))
        }
    })
}

fn parse_field<F: std::str::FromStr>(
    token: &str,
    line: usize,
    file: &str,
    what: &str,
) -> Result<F> {
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("{file}: invalid {what} {token:?}")))
}

struct NodeFile<T> {
    points: Vec<Point2<T>>,
    index_base: usize,
}

fn parse_node_file<T: Real>(text: &str) -> Result<NodeFile<T>> {
    let mut lines = significant_lines(text);
    let last_line = text.lines().count();
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(last_line.max(1), "node file: missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 {
        return Err(Error::parse(
            header_line,
            format!(
                "node file: header needs 4 fields (count, dimension, attributes, markers), found {}",
                fields.len()
            ),
        ));
    }
    let count: usize = parse_field(fields[0], header_line, "node file", "vertex count")?;
    let dim: usize = parse_field(fields[1], header_line, "node file", "dimension")?;
    if dim != 2 {
        return Err(Error::parse(
            header_line,
            format!("node file: dimension must be 2, found {dim}"),
        ));
    }
    if count == 0 {
        return Err(Error::parse(header_line, "node file: vertex count is 0"));
    }

    let mut points = Vec::with_capacity(count);
    let mut index_base = 0usize;
    for row in 0..count {
        let (line, content) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line.max(1),
                format!("node file: expected {count} vertex rows, found {row}"),
            )
        })?;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() < 3 {
            return Err(Error::parse(
                line,
                "node file: vertex row needs at least an index and two coordinates",
            ));
        }
        let idx: usize = parse_field(fields[0], line, "node file", "vertex index")?;
        if row == 0 {
            if idx > 1 {
                return Err(Error::parse(
                    line,
                    format!("node file: numbering must start at 0 or 1, found {idx}"),
                ));
            }
            index_base = idx;
        } else if idx != index_base + row {
            return Err(Error::parse(
                line,
                format!(
                    "node file: vertex indices must be consecutive, expected {} found {idx}",
                    index_base + row
                ),
            ));
        }
        let x: f64 = parse_field(fields[1], line, "node file", "coordinate")?;
        let y: f64 = parse_field(fields[2], line, "node file", "coordinate")?;
        let p = Point2::new(T::of(x), T::of(y));
        if !p.is_finite() {
            return Err(Error::parse(line, "node file: non-finite coordinate"));
        }
        points.push(p);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(
            line,
            "node file: unexpected content after the declared vertex rows",
        ));
    }
    Ok(NodeFile { points, index_base })
}

fn parse_ele_file<T: Real>(
    text: &str,
    points: &[Point2<T>],
    index_base: usize,
) -> Result<Vec<[usize; 3]>> {
    let mut lines = significant_lines(text);
    let last_line = text.lines().count();
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(last_line.max(1), "ele file: missing header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(Error::parse(
            header_line,
            format!(
                "ele file: header needs 3 fields (count, nodes per cell, attributes), found {}",
                fields.len()
            ),
        ));
    }
    let count: usize = parse_field(fields[0], header_line, "ele file", "cell count")?;
    let per_cell: usize = parse_field(fields[1], header_line, "ele file", "nodes-per-cell")?;
    if per_cell != 3 {
        return Err(Error::parse(
            header_line,
            format!("ele file: cells must have 3 nodes, found {per_cell}"),
        ));
    }
    if count == 0 {
        return Err(Error::parse(header_line, "ele file: cell count is 0"));
    }

    let mut cells = Vec::with_capacity(count);
    let mut seen = std::collections::BTreeSet::new();
    for row in 0..count {
        let (line, content) = lines.next().ok_or_else(|| {
            Error::parse(
                last_line.max(1),
                format!("ele file: expected {count} cell rows, found {row}"),
            )
        })?;
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() < 4 {
            return Err(Error::parse(
                line,
                "ele file: cell row needs an index and three vertex references",
            ));
        }
        let mut cell = [0usize; 3];
        for (slot, token) in cell.iter_mut().zip(&fields[1..4]) {
            let r: usize = parse_field(token, line, "ele file", "vertex reference")?;
            if r < index_base || r - index_base >= points.len() {
                return Err(Error::parse(
                    line,
                    format!(
                        "ele file: vertex reference {r} outside {}..{}",
                        index_base,
                        index_base + points.len() - 1
                    ),
                ));
            }
            *slot = r - index_base;
        }
        let mut key = cell;
        key.sort_unstable();
        if key[0] == key[1] || key[1] == key[2] {
            return Err(Error::parse(line, "ele file: cell repeats a vertex"));
        }
        if !seen.insert(key) {
            return Err(Error::parse(line, "ele file: duplicate cell"));
        }
        Triangle2::new(points[cell[0]], points[cell[1]], points[cell[2]])
            .map_err(|e| Error::parse(line, format!("ele file: {e}")))?;
        cells.push(cell);
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(
            line,
            "ele file: unexpected content after the declared cell rows",
        ));
    }
    Ok(cells)
}

/// Parses the contents of a `.node` and a `.ele` file into a validated mesh.
///
/// Both files use whitespace-separated fields and `#` comments. The `.node`
/// header is `<count> <dim=2> <attributes> <markers>`, each row
/// `<index> <x> <y> ...` with extra fields ignored; the `.ele` header is
/// `<count> <nodes-per-cell=3> <attributes>`, each row
/// `<index> <v1> <v2> <v3> ...`. Vertex numbering may start at 0 or 1; the
/// base is taken from the first vertex row and applied to both files.
pub fn load_triangle_mesh<T: Real>(node_text: &str, ele_text: &str) -> Result<TriMesh<T>> {
    let node = parse_node_file(node_text)?;
    let cells = parse_ele_file(ele_text, &node.points, node.index_base)?;
    TriMesh::new(node.points, cells)
}
