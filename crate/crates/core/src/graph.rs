//! Simple undirected graphs and balanced bisections.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Default vertex cap for exhaustive bisection search.
pub const DEFAULT_BISECTION_CAP: usize = 20;

/// An undirected simple graph on an even number of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are normalized to `(min, max)` and sorted.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 || vertex_count % 2 == 1 {
            return Err(Error::OddVertexCount(vertex_count));
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) leaves vertex range 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({a}, {b})")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set.into_iter().collect(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn cut_size(&self, side: &[bool]) -> usize {
        self.edges.iter().filter(|&&(a, b)| side[a] != side[b]).count()
    }
}

/// A split of the vertices into two halves of equal size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    side: Vec<bool>,
    cut_size: usize,
}

impl Bisection {
    pub fn new(graph: &Graph, side: Vec<bool>) -> Result<Self> {
        let n = graph.vertex_count();
        if side.len() != n {
            return Err(Error::UniverseMismatch {
                expected: n,
                found: side.len(),
            });
        }
        let true_count = side.iter().filter(|&&s| s).count();
        if 2 * true_count != n {
            return Err(Error::UnbalancedBisection { true_count, n });
        }
        let cut_size = graph.cut_size(&side);
        Ok(Bisection { side, cut_size })
    }

    pub fn side(&self) -> &[bool] {
        &self.side
    }

    pub fn cut_size(&self) -> usize {
        self.cut_size
    }

    pub fn complement(&self) -> Bisection {
        Bisection {
            side: self.side.iter().map(|s| !s).collect(),
            cut_size: self.cut_size,
        }
    }
}

/// Calls `visit` on every balanced side array in lexicographic order
/// (`false < true`).
fn for_each_balanced(n: usize, mut visit: impl FnMut(&[bool])) {
    fn rec(side: &mut Vec<bool>, n: usize, trues_left: usize, visit: &mut dyn FnMut(&[bool])) {
        let pos = side.len();
        if pos == n {
            visit(side);
            return;
        }
        let remaining = n - pos;
        if remaining > trues_left {
            side.push(false);
            rec(side, n, trues_left, visit);
            side.pop();
        }
        if trues_left > 0 {
            side.push(true);
            rec(side, n, trues_left - 1, visit);
            side.pop();
        }
    }
    let mut side = Vec::with_capacity(n);
    rec(&mut side, n, n / 2, &mut visit);
}

/// Every balanced bisection with vertex 0 on the `false` side, so each
/// unordered split appears once.
pub fn unordered_bisections(graph: &Graph, cap: usize) -> Result<Vec<Bisection>> {
    check_cap(graph, cap)?;
    let mut out = Vec::new();
    for_each_balanced(graph.vertex_count(), |side| {
        if !side[0] {
            out.push(Bisection {
                side: side.to_vec(),
                cut_size: graph.cut_size(side),
            });
        }
    });
    Ok(out)
}

fn check_cap(graph: &Graph, cap: usize) -> Result<()> {
    if graph.vertex_count() > cap {
        return Err(Error::BisectionCapExceeded {
            vertices: graph.vertex_count(),
            cap,
        });
    }
    Ok(())
}

/// Minimum bisection by exhaustive search over all `C(n, n/2)` balanced
/// splits. Ties go to the lexicographically smallest side array.
pub fn solve_min_bisection(graph: &Graph, cap: usize) -> Result<Bisection> {
    check_cap(graph, cap)?;
    let mut best: Option<Bisection> = None;
    for_each_balanced(graph.vertex_count(), |side| {
        let cut = graph.cut_size(side);
        if best.as_ref().is_none_or(|b| cut < b.cut_size) {
            best = Some(Bisection {
                side: side.to_vec(),
                cut_size: cut,
            });
        }
    });
    Ok(best.expect("a graph with an even positive vertex count has a bisection"))
}
