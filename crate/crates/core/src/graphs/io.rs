use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format: the first non-comment line holds `d`, each
/// following line one whitespace-separated pair `u v` (1-indexed). Lines
/// starting with `#` and blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut d: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("expected a non-negative integer, got {s:?}")))
        };
        match d {
            None => {
                if fields.len() != 1 {
                    return Err(Error::parse(line_no, "first line must hold the vertex count"));
                }
                let n = num(fields[0])?;
                if n == 0 {
                    return Err(Error::parse(line_no, "vertex count must be positive"));
                }
                d = Some(n);
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(Error::parse(line_no, "edge lines hold exactly two vertices"));
                }
                let (u, v) = (num(fields[0])?, num(fields[1])?);
                if u == v {
                    return Err(Error::parse(line_no, format!("loop at vertex {u}")));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::parse(line_no, format!("vertex outside 1..={n}")));
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(Error::parse(line_no, format!("duplicate edge {{{u},{v}}}")));
                }
                edges.push(key);
            }
        }
    }
    let d = d.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    Graph::new(d, edges)
}

/// Inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.d());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
