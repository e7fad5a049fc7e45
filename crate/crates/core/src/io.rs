//! Plain-text file formats.
//!
//! Instance files: a header line `n l`, then `l` lines of `n`
//! whitespace-separated integer labels. Lines starting with `#` and blank
//! lines are ignored. Labels are canonicalized on load.
//!
//! Provenance sidecars (`<instance>.prov`): one line per element,
//! `index<TAB>tag`, with tags such as `X(0,17)` or `Y(2,1)`.
//!
//! Graph files: a header line `n m`, then `m` lines `a b` with 0-based
//! vertex ids.
//!
//! Candidate files: a single line of `n` labels.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::Instance;
use crate::partition::Partition;
use crate::reduction::{ReductionArtifact, Tag};

/// Content lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn malformed(line: usize, reason: impl Into<String>) -> Error {
    Error::Malformed {
        line,
        reason: reason.into(),
    }
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| malformed(line_no, format!("{tok:?} is not an integer")))
        })
        .collect()
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let vals = parse_ints(line_no, line)?;
    if vals.len() != 2 || vals.iter().any(|&v| v < 0) {
        return Err(malformed(line_no, "expected a header of two non-negative integers"));
    }
    Ok((vals[0] as usize, vals[1] as usize))
}

pub fn parse_instance_str(text: &str) -> Result<Instance> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
    let (n, l) = parse_header(line_no, header)?;
    if n == 0 {
        return Err(malformed(line_no, "empty universe"));
    }
    if l == 0 {
        return Err(malformed(line_no, "no partitions"));
    }
    let mut partitions = Vec::with_capacity(l);
    let mut last = line_no;
    for (line_no, line) in lines {
        last = line_no;
        if partitions.len() == l {
            return Err(malformed(line_no, format!("expected only {l} partition lines")));
        }
        let labels = parse_ints(line_no, line)?;
        if labels.len() != n {
            return Err(malformed(
                line_no,
                format!("expected {n} labels, found {}", labels.len()),
            ));
        }
        partitions.push(Partition::canonicalize(&labels)?);
    }
    if partitions.len() != l {
        return Err(malformed(
            last,
            format!("expected {l} partition lines, found {}", partitions.len()),
        ));
    }
    Instance::new(partitions)
}

pub fn parse_instance_file(path: impl AsRef<Path>) -> Result<Instance> {
    parse_instance_str(&fs::read_to_string(path)?)
}

pub fn format_instance(inst: &Instance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", inst.n(), inst.l());
    for p in inst.partitions() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn write_instance_file(inst: &Instance, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, format_instance(inst))?;
    Ok(())
}

/// `<path>.prov`.
pub fn provenance_path(path: impl AsRef<Path>) -> PathBuf {
    let mut os = path.as_ref().as_os_str().to_owned();
    os.push(".prov");
    PathBuf::from(os)
}

pub fn format_provenance(tags: &[Tag]) -> String {
    let mut out = String::new();
    for (i, tag) in tags.iter().enumerate() {
        let _ = writeln!(out, "{i}\t{tag}");
    }
    out
}

pub fn parse_provenance_str(text: &str) -> Result<Vec<Tag>> {
    let mut tags = Vec::new();
    for (line_no, line) in content_lines(text) {
        let (idx, tag) = line
            .split_once('\t')
            .ok_or_else(|| malformed(line_no, "expected `index<TAB>tag`"))?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| malformed(line_no, format!("{idx:?} is not an index")))?;
        if idx != tags.len() {
            return Err(malformed(line_no, format!("expected index {}, found {idx}", tags.len())));
        }
        tags.push(tag.parse().map_err(|e: String| malformed(line_no, e))?);
    }
    Ok(tags)
}

/// Writes the instance to `path` and its provenance to `<path>.prov`.
pub fn write_artifact(art: &ReductionArtifact, path: impl AsRef<Path>) -> Result<()> {
    write_instance_file(&art.instance, &path)?;
    fs::write(provenance_path(&path), format_provenance(&art.provenance))?;
    Ok(())
}

pub fn read_artifact(path: impl AsRef<Path>) -> Result<ReductionArtifact> {
    let instance = parse_instance_file(&path)?;
    let tags = parse_provenance_str(&fs::read_to_string(provenance_path(&path))?)?;
    ReductionArtifact::from_parts(instance, tags)
}

pub fn parse_graph_str(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines.next().ok_or_else(|| malformed(1, "missing header"))?;
    let (n, m) = parse_header(line_no, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let vals = parse_ints(line_no, line)?;
        if vals.len() != 2 || vals.iter().any(|&v| v < 0) {
            return Err(malformed(line_no, "expected an edge `a b`"));
        }
        edges.push((vals[0] as usize, vals[1] as usize));
    }
    if edges.len() != m {
        return Err(malformed(line_no, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::new(n, edges)
}

pub fn format_graph(graph: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", graph.vertex_count(), graph.edge_count());
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

pub fn parse_candidate_str(text: &str) -> Result<Partition> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines.next().ok_or_else(|| malformed(1, "missing labels"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(malformed(extra, "expected a single line of labels"));
    }
    Partition::canonicalize(&parse_ints(line_no, line)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_running_example() {
        let inst = parse_instance_str("4 2\n0 0 1 1\n0 0 0 1\n").unwrap();
        assert_eq!(inst.n(), 4);
        assert_eq!(inst.partitions()[1].labels(), &[0, 0, 0, 1]);
        let commented = parse_instance_str("# two partitions\n4 2\n\n5 5 7 7\n# x\n1 1 1 0\n").unwrap();
        assert_eq!(commented, inst);
        let single = parse_instance_str("1 1\n0\n").unwrap();
        assert_eq!(single.n(), 1);
    }

    #[test]
    fn arity_error_names_line() {
        let err = parse_instance_str("4 2\n0 0 1\n0 0 0 1\n").unwrap_err();
        assert_eq!(err.to_string(), "malformed line 2: expected 4 labels, found 3");
        let err = parse_instance_str("4 2\n0 0 1 x\n0 0 0 1\n").unwrap_err();
        assert!(err.to_string().starts_with("malformed line 2"));
        let err = parse_instance_str("4 2\n0 0 1 1\n").unwrap_err();
        assert!(err.to_string().contains("expected 2 partition lines"));
        let err = parse_instance_str("2 1\n0 0\n0 1\n").unwrap_err();
        assert!(err.to_string().starts_with("malformed line 3"));
        assert!(parse_instance_str("").is_err());
    }

    #[test]
    fn format_is_canonical_text() {
        let inst = parse_instance_str("4 2\n3 3 1 1\n9 9 9 2\n").unwrap();
        assert_eq!(format_instance(&inst), "4 2\n0 0 1 1\n0 0 0 1\n");
    }

    #[test]
    fn graph_and_candidate_formats() {
        let g = parse_graph_str("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(parse_graph_str(&format_graph(&g)).unwrap(), g);
        assert!(parse_graph_str("4 2\n0 1\n").is_err());
        assert_eq!(parse_candidate_str("1 1 0 0\n").unwrap().labels(), &[0, 0, 1, 1]);
        assert!(parse_candidate_str("0 1\n0 1\n").is_err());
    }

    #[test]
    fn provenance_text() {
        let tags = vec![Tag::X { vertex: 0, index: 1 }, Tag::Y { vertex: 1, index: 2 }];
        let text = format_provenance(&tags);
        assert_eq!(text, "0\tX(0,1)\n1\tY(1,2)\n");
        assert_eq!(parse_provenance_str(&text).unwrap(), tags);
        assert!(parse_provenance_str("1\tX(0,1)\n").is_err());
        assert_eq!(provenance_path("a/b.txt"), PathBuf::from("a/b.txt.prov"));
    }
}
