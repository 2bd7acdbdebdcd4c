//! The triangular grid Δₙ and Young hypergraphs.
//!
//! A Young hypergraph of type (λ, μ, ν) has d = |λ| = |μ| = |ν| vertices and
//! three layers of hyperedges; each layer partitions the vertex set and its
//! edge sizes are the column lengths of the corresponding partition.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::tableaux::{gale_ryser_filling, Filling};
use crate::{Error, Result};

/// A hyperedge: strictly increasing vertex ids.
pub type Hyperedge = Vec<usize>;

/// One point of Δₙ. Ids are 1-based and assigned row-major. The level is the
/// distance from the diagonal edge, `n + 2 − row − col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridVertex {
    pub id: usize,
    pub row: u32,
    pub col: u32,
    pub level: u32,
}

/// The grid Δₙ = {(r, c) : 1 ≤ r, c ≤ n, r + c ≤ n + 1} with n(n+1)/2 points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularGrid {
    n: u32,
    vertices: Vec<GridVertex>,
}

impl TriangularGrid {
    pub fn new(n: u32) -> Self {
        let mut vertices = Vec::new();
        let mut id = 1;
        for row in 1..=n {
            for col in 1..=(n + 1 - row) {
                vertices.push(GridVertex {
                    id,
                    row,
                    col,
                    level: n + 2 - row - col,
                });
                id += 1;
            }
        }
        Self { n, vertices }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Vertex count d = n(n+1)/2.
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    pub fn level_of(&self, id: usize) -> u32 {
        self.vertices[id - 1].level
    }

    /// Levels in id order.
    pub fn levels(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.level).collect()
    }

    /// One hyperedge per grid row; sizes n, n−1, …, 1.
    pub fn row_edges(&self) -> Vec<Hyperedge> {
        (1..=self.n)
            .map(|r| {
                self.vertices
                    .iter()
                    .filter(|v| v.row == r)
                    .map(|v| v.id)
                    .collect()
            })
            .collect()
    }

    /// One hyperedge per grid column; sizes n, n−1, …, 1.
    pub fn column_edges(&self) -> Vec<Hyperedge> {
        (1..=self.n)
            .map(|c| {
                self.vertices
                    .iter()
                    .filter(|v| v.col == c)
                    .map(|v| v.id)
                    .collect()
            })
            .collect()
    }
}

/// Three layers of hyperedges over the vertex set {1, …, d}.
///
/// JSON form:
/// `{"d": 10, "type": ["4,3,2,1", "4,3,2,1", "5,3,1,1"], "layers": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YoungHypergraph {
    d: usize,
    #[serde(rename = "type")]
    type_triple: [Partition; 3],
    layers: [Vec<Hyperedge>; 3],
}

impl YoungHypergraph {
    /// Assembles a hypergraph without validating it; see [`Self::validate`].
    pub fn from_parts(type_triple: [Partition; 3], layers: [Vec<Hyperedge>; 3]) -> Self {
        let d = type_triple[0].size() as usize;
        Self {
            d,
            type_triple,
            layers,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.d
    }

    pub fn type_triple(&self) -> &[Partition; 3] {
        &self.type_triple
    }

    pub fn layer(&self, i: usize) -> &[Hyperedge] {
        &self.layers[i]
    }

    /// All structural invariants at once.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Like [`Self::validate`] but reports the first violated invariant.
    pub fn check(&self) -> std::result::Result<(), String> {
        for part in &self.type_triple {
            if part.size() as usize != self.d {
                return Err(format!(
                    "type partition {part} has {} boxes, expected {}",
                    part.size(),
                    self.d
                ));
            }
        }
        for (i, layer) in self.layers.iter().enumerate() {
            let mut seen = vec![false; self.d];
            for edge in layer {
                if edge.is_empty() {
                    return Err(format!("layer {} has an empty hyperedge", i + 1));
                }
                if !edge.windows(2).all(|w| w[0] < w[1]) {
                    return Err(format!(
                        "layer {} edge {edge:?} is not strictly increasing",
                        i + 1
                    ));
                }
                for &v in edge {
                    if v == 0 || v > self.d {
                        return Err(format!(
                            "layer {} mentions vertex {v} outside 1..={}",
                            i + 1,
                            self.d
                        ));
                    }
                    if seen[v - 1] {
                        return Err(format!("layer {} covers vertex {v} twice", i + 1));
                    }
                    seen[v - 1] = true;
                }
            }
            if let Some(missing) = seen.iter().position(|&s| !s) {
                return Err(format!("layer {} misses vertex {}", i + 1, missing + 1));
            }
            let mut sizes: Vec<u32> = layer.iter().map(|e| e.len() as u32).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let expected = self.type_triple[i].column_lengths();
            let mut expected_sorted = expected.clone();
            expected_sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sizes != expected_sorted {
                return Err(format!(
                    "layer {} edge sizes {sizes:?} do not match the column lengths {expected_sorted:?} of {}",
                    i + 1,
                    self.type_triple[i]
                ));
            }
        }
        Ok(())
    }
}

/// Ids 1..=d written into `shape` column by column, top to bottom; each
/// column becomes one hyperedge. For (4,3,2,1) this yields
/// {1,2,3,4}, {5,6,7}, {8,9}, {10}.
pub fn columnwise_layer(shape: &Partition) -> Vec<Hyperedge> {
    let mut edges = Vec::new();
    let mut next = 1usize;
    for height in shape.column_lengths() {
        let edge: Hyperedge = (next..next + height as usize).collect();
        next += height as usize;
        edges.push(edge);
    }
    edges
}

/// The baseline hypergraph whose three layers all come from columnwise
/// numbering. Exists as a reference construction and test fixture.
pub fn columnwise_hypergraph(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<YoungHypergraph> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    if lambda.size() != nu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: nu.size(),
        });
    }
    Ok(YoungHypergraph::from_parts(
        [lambda.clone(), mu.clone(), nu.clone()],
        [
            columnwise_layer(lambda),
            columnwise_layer(mu),
            columnwise_layer(nu),
        ],
    ))
}

/// The hypergraph of type (ϱ(n), ϱ(n), ν) on Δₙ: layer 1 is the grid rows,
/// layer 2 the grid columns, and layer 3 realizes the columns of a
/// semistandard filling of ν with content ϱ(n), so that every third-layer
/// edge carries pairwise distinct levels.
pub fn staircase_hypergraph(n: u32, nu: &Partition) -> Result<YoungHypergraph> {
    let rho = Partition::staircase(n);
    if nu.size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: nu.size(),
            right: rho.size(),
        });
    }
    let filling = gale_ryser_filling(nu, &rho)?.ok_or_else(|| Error::NotDominating {
        nu: nu.to_string(),
        staircase: rho.to_string(),
    })?;
    staircase_hypergraph_with_filling(n, &filling)
}

/// Same as [`staircase_hypergraph`] but with a caller-supplied filling. The
/// filling must have content ϱ(n) and distinct entries in every column;
/// semistandardness is not required.
///
/// Filling columns are processed left to right; each required level is served
/// by the unused vertex of that level with the smallest id.
pub fn staircase_hypergraph_with_filling(n: u32, filling: &Filling) -> Result<YoungHypergraph> {
    let rho = Partition::staircase(n);
    let grid = TriangularGrid::new(n);
    if filling.shape().size() != rho.size() {
        return Err(Error::SizeMismatch {
            left: filling.shape().size(),
            right: rho.size(),
        });
    }
    if !filling.has_content(&rho) {
        return Err(Error::InvalidFilling(format!(
            "content is not the staircase {rho}"
        )));
    }
    if !filling.has_distinct_column_entries() {
        return Err(Error::InvalidFilling(
            "a column repeats an entry; its hyperedge would repeat a level".into(),
        ));
    }
    // Per level, the unused vertex ids in ascending order.
    let mut pools: Vec<std::collections::VecDeque<usize>> =
        vec![std::collections::VecDeque::new(); n as usize];
    for v in grid.vertices() {
        pools[(v.level - 1) as usize].push_back(v.id);
    }
    let mut third_layer = Vec::new();
    for c in 0..filling.column_count() {
        let mut edge: Hyperedge = Vec::new();
        for value in filling.column(c) {
            let id = pools[(value - 1) as usize].pop_front().ok_or_else(|| {
                Error::InvalidFilling(format!("level {value} demanded too often"))
            })?;
            edge.push(id);
        }
        edge.sort_unstable();
        third_layer.push(edge);
    }
    let hypergraph = YoungHypergraph::from_parts(
        [rho.clone(), rho, filling.shape().clone()],
        [grid.row_edges(), grid.column_edges(), third_layer],
    );
    hypergraph.check().map_err(Error::InternalInconsistency)?;
    Ok(hypergraph)
}
