//! Exact evaluation of the determinant-product contraction and of its
//! symmetrization over vertex labelings.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::hypergraph::{staircase_hypergraph, TriangularGrid, YoungHypergraph};
use crate::partition::Partition;
use crate::{Error, Result};

/// Arbitrary-precision signed integer; every value in the pipeline is exact.
pub type ExactScalar = BigInt;

/// Largest `n` accepted by [`enumerate_labelings`].
pub const LABELING_ENUMERATION_CAP: u32 = 5;

/// Default cap for [`symmetrized_contraction_bruteforce`].
pub const BRUTE_FORCE_STAIRCASE_CAP: u32 = 4;

/// Largest `n` whose Vandermonde nodes fit machine integers (16^15 < 2^63).
pub const AMBIENT_DIMENSION_CAP: u32 = 16;

/// Determinant of the m×m matrix whose columns are the first m entries of the
/// given vectors.
pub fn truncated_det(vectors: &[&[i64]]) -> Result<ExactScalar> {
    let m = vectors.len();
    if m == 0 {
        return Err(Error::BadShape("no vectors given".into()));
    }
    let n = vectors[0].len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::BadShape("vectors of unequal length".into()));
    }
    if m > n {
        return Err(Error::BadShape(format!(
            "{m} vectors of length {n}: cannot truncate to an {m}x{m} matrix"
        )));
    }
    let matrix: Vec<Vec<BigInt>> = (0..m)
        .map(|row| (0..m).map(|col| BigInt::from(vectors[col][row])).collect())
        .collect();
    Ok(bareiss_determinant(matrix))
}

/// Fraction-free Gaussian elimination; all divisions are exact.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let size = m.len();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..size.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let numerator = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = numerator / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// The three vector families contracted against a hypergraph: layer 1 reads
/// `a`, layer 2 reads `b`, layer 3 reads `c`, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorAssignment {
    a: Vec<Vec<i64>>,
    b: Vec<Vec<i64>>,
    c: Vec<Vec<i64>>,
}

impl VectorAssignment {
    pub fn new(a: Vec<Vec<i64>>, b: Vec<Vec<i64>>, c: Vec<Vec<i64>>) -> Result<Self> {
        if a.len() != b.len() || a.len() != c.len() {
            return Err(Error::BadShape(
                "the three vector families must have equal length".into(),
            ));
        }
        let ambient = a.first().map(|v| v.len()).unwrap_or(0);
        let uniform = a.iter().chain(&b).chain(&c).all(|v| v.len() == ambient);
        if !uniform {
            return Err(Error::BadShape("vectors of unequal length".into()));
        }
        Ok(Self { a, b, c })
    }

    /// The assignment induced by a labeling τ: vertex x receives the standard
    /// basis vector e_{τ(x)} in families `a` and `b`, and `nodes[τ(x)-1]` in
    /// family `c`.
    pub fn for_labeling(n: u32, labeling: &Labeling, nodes: &[Vec<i64>]) -> Self {
        let basis: Vec<Vec<i64>> = (0..n as usize)
            .map(|i| {
                let mut e = vec![0i64; n as usize];
                e[i] = 1;
                e
            })
            .collect();
        let a: Vec<Vec<i64>> = labeling
            .values()
            .iter()
            .map(|&v| basis[(v - 1) as usize].clone())
            .collect();
        let c: Vec<Vec<i64>> = labeling
            .values()
            .iter()
            .map(|&v| nodes[(v - 1) as usize].clone())
            .collect();
        Self {
            a: a.clone(),
            b: a,
            c,
        }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn family(&self, layer: usize) -> &[Vec<i64>] {
        match layer {
            0 => &self.a,
            1 => &self.b,
            _ => &self.c,
        }
    }

    pub fn scale_c(&mut self, vertex: usize, factor: i64) {
        for entry in &mut self.c[vertex - 1] {
            *entry *= factor;
        }
    }
}

/// One determinant per hyperedge, layer by layer, edge vertices in increasing
/// id order.
pub fn edge_determinants(h: &YoungHypergraph, va: &VectorAssignment) -> Result<Vec<ExactScalar>> {
    if va.len() != h.vertex_count() {
        return Err(Error::BadShape(format!(
            "assignment covers {} vertices, hypergraph has {}",
            va.len(),
            h.vertex_count()
        )));
    }
    let mut factors = Vec::new();
    for layer in 0..3 {
        let family = va.family(layer);
        for edge in h.layer(layer) {
            let columns: Vec<&[i64]> = edge.iter().map(|&id| family[id - 1].as_slice()).collect();
            factors.push(truncated_det(&columns)?);
        }
    }
    Ok(factors)
}

/// The full contraction: the product over all three layers of the per-edge
/// truncated determinants.
pub fn contract(h: &YoungHypergraph, va: &VectorAssignment) -> Result<ExactScalar> {
    if va.len() != h.vertex_count() {
        return Err(Error::BadShape(format!(
            "assignment covers {} vertices, hypergraph has {}",
            va.len(),
            h.vertex_count()
        )));
    }
    let mut product = BigInt::one();
    for layer in 0..3 {
        let family = va.family(layer);
        for edge in h.layer(layer) {
            let columns: Vec<&[i64]> = edge.iter().map(|&id| family[id - 1].as_slice()).collect();
            let det = truncated_det(&columns)?;
            if det.is_zero() {
                return Ok(BigInt::zero());
            }
            product *= det;
        }
    }
    Ok(product)
}

/// Vandermonde rows (1, t, t², …, tⁿ⁻¹) at the integer nodes t = 1, …, n.
/// Any selection with distinct indices has a nonzero truncated determinant,
/// which is the only genericity the contraction argument needs.
pub fn vandermonde_vectors(n: u32) -> Vec<Vec<i64>> {
    (1..=i64::from(n))
        .map(|t| {
            let mut row = Vec::with_capacity(n as usize);
            let mut power = 1i64;
            for k in 0..n {
                row.push(power);
                if k + 1 < n {
                    power = power.checked_mul(t).expect("vandermonde entry overflow");
                }
            }
            row
        })
        .collect()
}

/// n!·(n−1)!···2!·1!, the order of the Young subgroup stabilizing the base
/// tensor; the symmetrized sum carries it as a global coefficient.
pub fn stabilizer_order(n: u32) -> ExactScalar {
    let mut total = BigInt::one();
    let mut factorial = BigInt::one();
    for k in 1..=u64::from(n) {
        factorial *= k;
        total *= &factorial;
    }
    total
}

/// A placement of the values 1..n on the d grid vertices with value i used
/// exactly n+1−i times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    values: Vec<u32>,
}

impl Labeling {
    pub fn new(n: u32, values: Vec<u32>) -> Result<Self> {
        let d = (u64::from(n) * u64::from(n + 1) / 2) as usize;
        if values.len() != d {
            return Err(Error::BadShape(format!(
                "labeling covers {} vertices, expected {d}",
                values.len()
            )));
        }
        for i in 1..=n {
            let count = values.iter().filter(|&&v| v == i).count() as u32;
            if count != n + 1 - i {
                return Err(Error::BadShape(format!(
                    "value {i} used {count} times, expected {}",
                    n + 1 - i
                )));
            }
        }
        Ok(Self { values })
    }

    /// The distinguished labeling assigning every vertex its grid level.
    pub fn from_levels(grid: &TriangularGrid) -> Self {
        Self {
            values: grid.levels(),
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// Streams every admissible labeling exactly once, in lexicographic order of
/// the value sequence. The count is d!/(n!·(n−1)!···1!).
pub fn enumerate_labelings(n: u32) -> Result<LabelingIter> {
    if n > LABELING_ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            what: "labeling enumeration staircase index",
            value: u64::from(n),
            cap: u64::from(LABELING_ENUMERATION_CAP),
        });
    }
    let mut start = Vec::new();
    for value in 1..=n {
        for _ in 0..(n + 1 - value) {
            start.push(value);
        }
    }
    Ok(LabelingIter {
        current: Some(start),
    })
}

pub struct LabelingIter {
    current: Option<Vec<u32>>,
}

impl Iterator for LabelingIter {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let current = self.current.take()?;
        let item = Labeling {
            values: current.clone(),
        };
        self.current = next_multiset_permutation(current);
        Some(item)
    }
}

fn next_multiset_permutation(mut values: Vec<u32>) -> Option<Vec<u32>> {
    let len = values.len();
    if len < 2 {
        return None;
    }
    let pivot = (0..len - 1).rev().find(|&i| values[i] < values[i + 1])?;
    let successor = (pivot + 1..len)
        .rev()
        .find(|&j| values[j] > values[pivot])
        .expect("successor exists whenever a pivot does");
    values.swap(pivot, successor);
    values[pivot + 1..].reverse();
    Some(values)
}

/// θ · Σ over all labelings τ of the contraction with aₓ = bₓ = e_{τ(x)} and
/// cₓ the Vandermonde row at node τ(x). The sum is streamed; memory stays
/// O(d) however many labelings there are.
pub fn symmetrized_contraction_bruteforce(n: u32, nu: &Partition) -> Result<ExactScalar> {
    symmetrized_contraction_bruteforce_with_cap(n, nu, BRUTE_FORCE_STAIRCASE_CAP)
}

pub fn symmetrized_contraction_bruteforce_with_cap(
    n: u32,
    nu: &Partition,
    cap: u32,
) -> Result<ExactScalar> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "brute-force staircase index",
            value: u64::from(n),
            cap: u64::from(cap),
        });
    }
    let labelings = enumerate_labelings(n)?;
    let h = staircase_hypergraph(n, nu)?;
    let nodes = vandermonde_vectors(n);
    let mut sum = BigInt::zero();
    for labeling in labelings {
        let va = VectorAssignment::for_labeling(n, &labeling, &nodes);
        sum += contract(&h, &va)?;
    }
    Ok(stabilizer_order(n) * sum)
}

/// The single surviving term of the symmetrized sum: θ times the contraction
/// at the level labeling. Nonzero for every ν dominating ϱ(n): layers 1 and 2
/// contribute permutation-matrix determinants (±1) and layer 3 contributes
/// Vandermonde minors at distinct nodes.
pub fn symmetrized_contraction_fast(n: u32, nu: &Partition) -> Result<ExactScalar> {
    let h = staircase_hypergraph(n, nu)?;
    staircase_contraction_value(n, &h)
}

/// θ · contraction of `h` at the level labeling, asserting along the way that
/// no edge determinant vanishes. Used both by the fast path and by
/// certificate replay.
pub fn staircase_contraction_value(n: u32, h: &YoungHypergraph) -> Result<ExactScalar> {
    if n > AMBIENT_DIMENSION_CAP {
        return Err(Error::CapExceeded {
            what: "contraction ambient dimension",
            value: u64::from(n),
            cap: u64::from(AMBIENT_DIMENSION_CAP),
        });
    }
    let grid = TriangularGrid::new(n);
    let labeling = Labeling::from_levels(&grid);
    let va = VectorAssignment::for_labeling(n, &labeling, &vandermonde_vectors(n));
    let factors = edge_determinants(h, &va)?;
    let mut product = BigInt::one();
    for factor in factors {
        if factor.is_zero() {
            return Err(Error::InternalInconsistency(
                "an edge determinant vanished at the level labeling".into(),
            ));
        }
        product *= factor;
    }
    Ok(stabilizer_order(n) * product)
}
