//! Plain-text graph files.
//!
//! A graph is stored as an edge list: a header line `n m_edges`, then one
//! `u v` line per edge with 0-based ids, sorted. A companion file at
//! `<path>.labels` maps each id to its label string, one `id label` line
//! per vertex. Output is fully deterministic, so saving the same graph
//! twice produces identical bytes. Loading works without the label file,
//! in which case vertices get default `b(i)` labels.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::graph::{Graph, GraphError, LabelParseError, VertexLabel};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{path}:{line}: {msg}")]
    Parse { path: PathBuf, line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { path: path.to_path_buf(), line, msg: msg.into() }
}

/// Path of the companion label file: the graph path with `.labels` added.
pub fn labels_path(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_os_string();
    name.push(".labels");
    PathBuf::from(name)
}

/// Write `g` to `path` and its labels to [`labels_path`].
pub fn save_graph(g: &Graph, path: &Path) -> Result<(), IoError> {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    fs::write(path, out)?;

    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("{v} {}\n", g.label(v)));
    }
    fs::write(labels_path(path), out)?;
    Ok(())
}

/// Read a graph from `path`, taking labels from [`labels_path`] when that
/// file exists.
pub fn load_graph(path: &Path) -> Result<Graph, IoError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file, expected `n m_edges` header"))?;
    let mut parts = header.split_whitespace();
    let mut field = |name: &str| -> Result<usize, IoError> {
        parts
            .next()
            .ok_or_else(|| parse_err(path, lineno + 1, format!("header missing {name}")))?
            .parse::<usize>()
            .map_err(|_| parse_err(path, lineno + 1, format!("{name} is not a number")))
    };
    let order = field("vertex count")?;
    let edge_count = field("edge count")?;

    let mut edges = Vec::with_capacity(edge_count);
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let mut endpoint = || -> Result<usize, IoError> {
            parts
                .next()
                .ok_or_else(|| parse_err(path, lineno + 1, "expected `u v`"))?
                .parse::<usize>()
                .map_err(|_| parse_err(path, lineno + 1, "vertex id is not a number"))
        };
        let u = endpoint()?;
        let v = endpoint()?;
        if parts.next().is_some() {
            return Err(parse_err(path, lineno + 1, "expected exactly two ids per line"));
        }
        edges.push((u, v));
    }
    if edges.len() != edge_count {
        return Err(parse_err(
            path,
            1,
            format!("header promises {edge_count} edges, file has {}", edges.len()),
        ));
    }

    let labels = match fs::read_to_string(labels_path(path)) {
        Ok(text) => parse_labels(&labels_path(path), &text, order)?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            (1..=order).map(VertexLabel::Base).collect()
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Graph::new(labels, &edges)?)
}

fn parse_labels(path: &Path, text: &str, order: usize) -> Result<Vec<VertexLabel>, IoError> {
    let mut labels: Vec<Option<VertexLabel>> = vec![None; order];
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let (id, label) = line
            .trim()
            .split_once(' ')
            .ok_or_else(|| parse_err(path, lineno + 1, "expected `id label`"))?;
        let id: usize = id
            .parse()
            .map_err(|_| parse_err(path, lineno + 1, "vertex id is not a number"))?;
        if id >= order {
            return Err(parse_err(path, lineno + 1, format!("id {id} out of range")));
        }
        if labels[id].is_some() {
            return Err(parse_err(path, lineno + 1, format!("id {id} labeled twice")));
        }
        let label: VertexLabel = label
            .trim()
            .parse()
            .map_err(|e: LabelParseError| parse_err(path, lineno + 1, e.to_string()))?;
        labels[id] = Some(label);
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(id, l)| l.ok_or_else(|| parse_err(path, 0, format!("id {id} has no label"))))
        .collect()
}

/// Parse a comma-separated label list such as `v(1,1),v(1,2),v(3,2)`.
/// Commas inside parentheses separate indices, not labels.
pub fn parse_label_list(s: &str) -> Result<Vec<VertexLabel>, LabelParseError> {
    let mut labels = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (pos, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                labels.push(s[start..pos].trim().parse()?);
                start = pos + 1;
            }
            _ => {}
        }
    }
    labels.push(s[start..].trim().parse()?);
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::grid_corona;
    use crate::graph::path_graph;

    #[test]
    fn exact_bytes_for_a_path() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p3.edges");
        save_graph(&path_graph(3).unwrap(), &path).unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "3 2\n0 1\n1 2\n");
        assert_eq!(
            fs::read_to_string(labels_path(&path)).unwrap(),
            "0 b(1)\n1 b(2)\n2 b(3)\n"
        );
    }

    #[test]
    fn round_trip_preserves_everything() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.edges");
        let g = grid_corona(3, 2).graph;
        save_graph(&g, &path).unwrap();
        let loaded = load_graph(&path).unwrap();
        assert_eq!(loaded.order(), g.order());
        assert_eq!(loaded.labels(), g.labels());
        assert_eq!(
            loaded.edges().collect::<Vec<_>>(),
            g.edges().collect::<Vec<_>>()
        );

        // saving the loaded graph reproduces the bytes
        let copy = dir.path().join("copy.edges");
        save_graph(&loaded, &copy).unwrap();
        assert_eq!(fs::read(&path).unwrap(), fs::read(&copy).unwrap());
        assert_eq!(
            fs::read(labels_path(&path)).unwrap(),
            fs::read(labels_path(&copy)).unwrap()
        );
    }

    #[test]
    fn missing_label_file_defaults_to_base_labels() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bare.edges");
        fs::write(&path, "3 3\n0 1\n0 2\n1 2\n").unwrap();
        let g = load_graph(&path).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.label(crate::graph::VertexId(2)).to_string(), "b(3)");
    }

    #[test]
    fn malformed_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.edges");

        for (content, needle) in [
            ("", "empty file"),
            ("2\n", "header missing edge count"),
            ("two 1\n0 1\n", "not a number"),
            ("2 1\n0\n", "expected `u v`"),
            ("2 1\n0 1 2\n", "exactly two ids"),
            ("2 2\n0 1\n", "promises 2 edges"),
            ("2 1\n0 3\n", "out of range"),
            ("2 2\n0 1\n0 1\n", "duplicate edge"),
        ] {
            fs::write(&path, content).unwrap();
            let err = load_graph(&path).unwrap_err().to_string();
            assert!(err.contains(needle), "{content:?} gave {err:?}");
        }
    }

    #[test]
    fn malformed_label_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.edges");
        fs::write(&path, "2 1\n0 1\n").unwrap();

        for (content, needle) in [
            ("0 b(1)\n", "id 1 has no label"),
            ("0 b(1)\n1 b(2)\n1 b(3)\n", "labeled twice"),
            ("0 b(1)\n5 b(2)\n", "out of range"),
            ("0 b(1)\n1 what\n", "label"),
            ("0 b(1)\n1 b(1)\n", "duplicate vertex label"),
        ] {
            fs::write(labels_path(&path), content).unwrap();
            let err = load_graph(&path).unwrap_err().to_string();
            assert!(err.contains(needle), "{content:?} gave {err:?}");
        }
    }

    #[test]
    fn label_lists_split_on_top_level_commas() {
        let labels = parse_label_list("v(1,1), v(1,2),v(3,2)").unwrap();
        let rendered: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(rendered, ["v(1,1)", "v(1,2)", "v(3,2)"]);

        let labels = parse_label_list("u(2,3)").unwrap();
        assert_eq!(labels.len(), 1);
        assert!(labels[0].is_pendant());

        let labels = parse_label_list("p(u(1,2)),b(4)").unwrap();
        assert_eq!(labels.len(), 2);

        assert!(parse_label_list("").is_err());
        assert!(parse_label_list("v(1,1),").is_err());
        assert!(parse_label_list("v(1,1").is_err());
        assert!(parse_label_list("v(1,1))").is_err());
    }
}
