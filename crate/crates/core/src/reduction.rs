//! Gadget reduction from minimum bisection to consensus clustering with two
//! output blocks and three input partitions.
//!
//! Vertex `v` of an `n`-vertex graph becomes a family of `n^4` elements `X_v`
//! and `n` elements `Y_v`. The first two input partitions are identical and
//! group each family `X_v ∪ Y_v`. The third keeps each `X_v` whole, pairs one
//! `Y` element of each endpoint for every edge, and leaves the remaining `Y`
//! elements as singletons.
//!
//! For a balanced bisection `b`, the standard solution places each family on
//! its vertex's side. Its cost is affine in the cut: every uncut edge pair is
//! co-clustered and costs 2, every cut edge pair is separated and costs 1,
//! while all other pair costs are fixed by the balance. Hence
//! `cost(b1) - cost(b2) = 2 (cut(b1) - cut(b2))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{unordered_bisections, Bisection, Graph};
use crate::instance::Instance;
use crate::partition::Partition;

/// Which gadget an element belongs to. `index` is 1-based within the gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    X { vertex: usize, index: usize },
    Y { vertex: usize, index: usize },
}

impl Tag {
    pub fn vertex(self) -> usize {
        match self {
            Tag::X { vertex, .. } | Tag::Y { vertex, .. } => vertex,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::X { vertex, index } => write!(f, "X({vertex},{index})"),
            Tag::Y { vertex, index } => write!(f, "Y({vertex},{index})"),
        }
    }
}

impl FromStr for Tag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let bad = || format!("bad provenance tag {s:?}");
        let (kind, rest) = s.split_at(s.len().min(1));
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (v, i) = inner.split_once(',').ok_or_else(bad)?;
        let vertex = v.trim().parse().map_err(|_| bad())?;
        let index = i.trim().parse().map_err(|_| bad())?;
        match kind {
            "X" => Ok(Tag::X { vertex, index }),
            "Y" => Ok(Tag::Y { vertex, index }),
            _ => Err(bad()),
        }
    }
}

/// Gadget sizes per vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetSizes {
    pub x: usize,
    pub y: usize,
}

impl GadgetSizes {
    /// `n^4` and `n`.
    pub fn standard(n: usize) -> Self {
        GadgetSizes {
            x: n.pow(4),
            y: n,
        }
    }
}

/// The generated instance together with its source graph and bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub sizes: GadgetSizes,
    pub instance: Instance,
    pub provenance: Vec<Tag>,
    /// One element pair per edge, in the graph's edge order.
    pub edge_pairs: Vec<(usize, usize)>,
}

impl ReductionArtifact {
    pub fn universe_size(&self) -> usize {
        self.instance.n()
    }

    fn family_start(&self, vertex: usize) -> usize {
        vertex * (self.sizes.x + self.sizes.y)
    }

    pub fn x_elements(&self, vertex: usize) -> std::ops::Range<usize> {
        let start = self.family_start(vertex);
        start..start + self.sizes.x
    }

    pub fn y_elements(&self, vertex: usize) -> std::ops::Range<usize> {
        let start = self.family_start(vertex) + self.sizes.x;
        start..start + self.sizes.y
    }

    /// Rebuilds an artifact from a serialized instance and its provenance
    /// tags, recovering the graph from the edge pairs of the third partition.
    /// Fails unless rebuilding from the recovered graph reproduces the
    /// instance exactly.
    pub fn from_parts(instance: Instance, provenance: Vec<Tag>) -> Result<Self> {
        let bad = |msg: String| Error::InvalidParameter(format!("not a reduction artifact: {msg}"));
        if provenance.len() != instance.n() {
            return Err(bad(format!(
                "{} provenance tags for {} elements",
                provenance.len(),
                instance.n()
            )));
        }
        if instance.l() != 3 {
            return Err(bad(format!("expected 3 partitions, found {}", instance.l())));
        }
        let vertices = provenance.iter().map(|t| t.vertex()).max().unwrap_or(0) + 1;
        let xs = provenance.iter().filter(|t| matches!(t, Tag::X { vertex: 0, .. })).count();
        let ys = provenance.iter().filter(|t| matches!(t, Tag::Y { vertex: 0, .. })).count();
        let third = &instance.partitions()[2];
        let mut edges = Vec::new();
        for block in third.blocks() {
            if block.len() == 2 {
                match (provenance[block[0]], provenance[block[1]]) {
                    (Tag::Y { vertex: a, .. }, Tag::Y { vertex: b, .. }) => edges.push((a, b)),
                    _ => return Err(bad("two-element block outside the Y gadgets".into())),
                }
            }
        }
        let graph = Graph::new(vertices, edges)?;
        let rebuilt = build_reduction_with(&graph, GadgetSizes { x: xs, y: ys })?;
        if rebuilt.instance != instance || rebuilt.provenance != provenance {
            return Err(bad("instance does not match the recovered graph".into()));
        }
        Ok(rebuilt)
    }
}

/// Builds the reduction with the standard gadget sizes.
pub fn build_reduction(graph: &Graph) -> Result<ReductionArtifact> {
    build_reduction_with(graph, GadgetSizes::standard(graph.vertex_count()))
}

/// Builds the reduction with custom gadget sizes.
///
/// Elements are laid out family by family: `X_0, Y_0, X_1, Y_1, ...`. For the
/// edge `(a, b)`, `a < b`, the lowest unused elements of `Y_a` and `Y_b` form
/// its pair; edges are processed in sorted order.
pub fn build_reduction_with(graph: &Graph, sizes: GadgetSizes) -> Result<ReductionArtifact> {
    let n = graph.vertex_count();
    if n % 2 == 1 {
        return Err(Error::OddVertexCount(n));
    }
    if sizes.x == 0 {
        return Err(Error::InvalidParameter("X gadgets must be nonempty".into()));
    }
    let max_degree = graph.degrees().into_iter().max().unwrap_or(0);
    if sizes.y < max_degree.max(1) {
        return Err(Error::InvalidParameter(format!(
            "Y gadgets of size {} cannot host a vertex of degree {max_degree}",
            sizes.y
        )));
    }
    let family = sizes.x + sizes.y;
    let total = n * family;

    let mut provenance = Vec::with_capacity(total);
    for vertex in 0..n {
        provenance.extend((1..=sizes.x).map(|index| Tag::X { vertex, index }));
        provenance.extend((1..=sizes.y).map(|index| Tag::Y { vertex, index }));
    }

    let grouped: Vec<usize> = (0..total).map(|e| e / family).collect();

    // third partition: X_v keeps label v; edge pairs and singletons get
    // fresh labels.
    let mut third = vec![usize::MAX; total];
    for vertex in 0..n {
        let start = vertex * family;
        for e in start..start + sizes.x {
            third[e] = vertex;
        }
    }
    let mut next_free = vec![0usize; n];
    let mut fresh = n;
    let mut edge_pairs = Vec::with_capacity(graph.edge_count());
    for &(a, b) in graph.edges() {
        let ya = a * family + sizes.x + next_free[a];
        let yb = b * family + sizes.x + next_free[b];
        next_free[a] += 1;
        next_free[b] += 1;
        third[ya] = fresh;
        third[yb] = fresh;
        fresh += 1;
        edge_pairs.push((ya, yb));
    }
    for label in third.iter_mut().filter(|l| **l == usize::MAX) {
        *label = fresh;
        fresh += 1;
    }

    let first = Partition::canonicalize(&grouped)?;
    let instance = Instance::new(vec![first.clone(), first, Partition::canonicalize(&third)?])?;
    Ok(ReductionArtifact {
        graph: graph.clone(),
        sizes,
        instance,
        provenance,
        edge_pairs,
    })
}

/// Two-block solution placing each gadget family on its vertex's side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardSolution {
    pub bisection: Bisection,
    pub partition: Partition,
}

pub fn standard_solution_of(art: &ReductionArtifact, b: &Bisection) -> Result<StandardSolution> {
    let bisection = Bisection::new(&art.graph, b.side().to_vec())?;
    let side: Vec<bool> = art
        .provenance
        .iter()
        .map(|t| bisection.side()[t.vertex()])
        .collect();
    Ok(StandardSolution {
        partition: Partition::canonicalize(&side)?,
        bisection,
    })
}

/// Number of edge pairs whose two elements share a block of `sol`.
pub fn co_clustered_edge_pairs(art: &ReductionArtifact, sol: &Partition) -> Result<usize> {
    if sol.n() != art.universe_size() {
        return Err(Error::UniverseMismatch {
            expected: art.universe_size(),
            found: sol.n(),
        });
    }
    Ok(art
        .edge_pairs
        .iter()
        .filter(|&&(a, b)| sol.co_clustered(a, b))
        .count())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisectionRow {
    pub bisection: Bisection,
    pub cost: u64,
    pub co_clustered: usize,
}

/// Measured costs of every standard solution and the checks run on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub rows: Vec<BisectionRow>,
    /// `cost - 2 cut`, identical across rows when the affine law holds.
    pub intercept: i64,
    pub slope_ok: bool,
    /// Every row has `co_clustered == m - cut`.
    pub pairs_ok: bool,
    /// Minimum-cut bisections are exactly the minimum-cost ones.
    pub argmin_ok: bool,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.slope_ok && self.pairs_ok && self.argmin_ok
    }
}

/// Evaluates the standard solution of every balanced bisection (each
/// unordered split once) and checks the affine cost/cut law pairwise.
pub fn verify_cut_cost_correspondence(art: &ReductionArtifact, cap: usize) -> Result<CorrespondenceReport> {
    let m = art.graph.edge_count();
    let mut rows = Vec::new();
    for b in unordered_bisections(&art.graph, cap)? {
        let std = standard_solution_of(art, &b)?;
        let cost = art.instance.cost_of(&std.partition)?;
        let co_clustered = co_clustered_edge_pairs(art, &std.partition)?;
        rows.push(BisectionRow {
            bisection: b,
            cost,
            co_clustered,
        });
    }
    let slope_ok = rows.iter().all(|r1| {
        rows.iter().all(|r2| {
            r1.cost as i64 - r2.cost as i64
                == 2 * (r1.bisection.cut_size() as i64 - r2.bisection.cut_size() as i64)
        })
    });
    let pairs_ok = rows
        .iter()
        .all(|r| r.co_clustered + r.bisection.cut_size() == m);
    let min_cut = rows.iter().map(|r| r.bisection.cut_size()).min();
    let min_cost = rows.iter().map(|r| r.cost).min();
    let argmin_ok = rows
        .iter()
        .all(|r| (Some(r.bisection.cut_size()) == min_cut) == (Some(r.cost) == min_cost));
    let intercept = rows
        .first()
        .map_or(0, |r| r.cost as i64 - 2 * r.bisection.cut_size() as i64);
    Ok(CorrespondenceReport {
        rows,
        intercept,
        slope_ok,
        pairs_ok,
        argmin_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn cycle_artifact_shape() {
        let art = build_reduction(&cycle4()).unwrap();
        assert_eq!(art.universe_size(), 1040);
        let parts = art.instance.partitions();
        assert_eq!(parts[0], parts[1]);
        assert_eq!(parts[0].block_count(), 4);
        let sizes = parts[2].block_sizes();
        assert_eq!(sizes.iter().filter(|&&s| s == 256).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 4);
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 8);
        assert_eq!(sizes.len(), 16);
        assert_eq!(art.edge_pairs.len(), 4);
    }

    #[test]
    fn edgeless_pair_artifact() {
        let art = build_reduction(&Graph::new(2, []).unwrap()).unwrap();
        assert_eq!(art.universe_size(), 36);
        assert!(art.edge_pairs.is_empty());
        let sizes = art.instance.partitions()[2].block_sizes();
        assert_eq!(sizes, vec![16, 1, 1, 16, 1, 1]);
    }

    #[test]
    fn complete_graph_uses_three_y_elements_each() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let art = build_reduction(&k4).unwrap();
        assert_eq!(art.edge_pairs.len(), 6);
        for v in 0..4 {
            let used = art
                .edge_pairs
                .iter()
                .flat_map(|&(a, b)| [a, b])
                .filter(|e| art.y_elements(v).contains(e))
                .count();
            assert_eq!(used, 3);
        }
        // lowest unused index first
        assert_eq!(art.provenance[art.edge_pairs[0].0], Tag::Y { vertex: 0, index: 1 });
        assert_eq!(art.provenance[art.edge_pairs[0].1], Tag::Y { vertex: 1, index: 1 });
    }

    #[test]
    fn x_gadgets_are_never_split_by_inputs() {
        let art = build_reduction(&cycle4()).unwrap();
        for p in art.instance.partitions() {
            for v in 0..4 {
                let r = art.x_elements(v);
                assert!(r.clone().all(|e| p.label(e) == p.label(r.start)));
            }
        }
    }

    #[test]
    fn standard_solution_examples() {
        let g = cycle4();
        let art = build_reduction(&g).unwrap();
        let b = Bisection::new(&g, vec![false, false, true, true]).unwrap();
        let std = standard_solution_of(&art, &b).unwrap();
        assert_eq!(std.partition.block_sizes(), vec![520, 520]);
        assert_eq!(b.cut_size(), 2);
        assert_eq!(co_clustered_edge_pairs(&art, &std.partition).unwrap(), 2);
        let flipped = standard_solution_of(&art, &b.complement()).unwrap();
        assert_eq!(flipped.partition, std.partition);
        let unbalanced = Bisection::new(&g, vec![false, true, true, true]);
        assert!(unbalanced.is_err());
        let one = Partition::single_block(1040).unwrap();
        assert_eq!(co_clustered_edge_pairs(&art, &one).unwrap(), 4);
        let singles = Partition::singletons(1040).unwrap();
        assert_eq!(co_clustered_edge_pairs(&art, &singles).unwrap(), 0);
    }

    #[test]
    fn correspondence_on_cycle_and_path() {
        let rep = verify_cut_cost_correspondence(&build_reduction(&cycle4()).unwrap(), 20).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.passed());

        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let rep = verify_cut_cost_correspondence(&build_reduction(&path).unwrap(), 20).unwrap();
        assert!(rep.passed());
        let best = rep.rows.iter().min_by_key(|r| r.cost).unwrap();
        assert_eq!(best.bisection.side(), &[false, false, true, true]);
        assert_eq!(best.bisection.cut_size(), 1);

        let edgeless = Graph::new(4, []).unwrap();
        let rep = verify_cut_cost_correspondence(&build_reduction(&edgeless).unwrap(), 20).unwrap();
        assert!(rep.rows.iter().all(|r| r.cost == rep.rows[0].cost));
    }

    #[test]
    fn from_parts_recovers_graph() {
        let art = build_reduction(&cycle4()).unwrap();
        let back = ReductionArtifact::from_parts(art.instance.clone(), art.provenance.clone()).unwrap();
        assert_eq!(back, art);
        let mut tags = art.provenance.clone();
        tags.swap(0, 300);
        assert!(ReductionArtifact::from_parts(art.instance.clone(), tags).is_err());
    }

    #[test]
    fn tag_text_round_trip() {
        for tag in [Tag::X { vertex: 3, index: 17 }, Tag::Y { vertex: 0, index: 1 }] {
            assert_eq!(tag.to_string().parse::<Tag>().unwrap(), tag);
        }
        assert!("Z(1,2)".parse::<Tag>().is_err());
        assert!("X(1)".parse::<Tag>().is_err());
    }

    #[test]
    fn odd_and_overfull_graphs_rejected() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(build_reduction_with(&star, GadgetSizes { x: 2, y: 2 }).is_err());
        assert!(build_reduction_with(&star, GadgetSizes { x: 2, y: 3 }).is_ok());
    }
}
