//! Fillings of Young diagrams, semistandardness, and the constructive
//! direction of the Gale-Ryser theorem.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::{Error, Result};

/// Largest box count accepted by [`brute_force_filling_search`].
pub const BRUTE_FORCE_BOX_CAP: u64 = 12;

/// An assignment of positive entries to the boxes of a Young diagram.
///
/// JSON form: the rows as nested arrays, e.g. `[[1,1,1,1,2],[2,2,3],[3],[4]]`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    /// Builds a filling from its rows; the shape is derived from the row
    /// lengths and must itself be a partition.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lengths: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        let shape = Partition::new(lengths)
            .map_err(|_| Error::InvalidFilling("row lengths do not form a partition".into()))?;
        if shape.rows() != rows.len() {
            return Err(Error::InvalidFilling("empty row inside the filling".into()));
        }
        if rows.iter().flatten().any(|&e| e == 0) {
            return Err(Error::InvalidFilling("entries must be positive".into()));
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entries of column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }

    pub fn column_count(&self) -> usize {
        self.shape.part(0) as usize
    }

    /// The content γ: entry `i` appears `γ[i-1]` times. The vector runs up to
    /// the largest entry present.
    pub fn content(&self) -> Vec<u64> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u64; max];
        for &e in self.rows.iter().flatten() {
            counts[(e - 1) as usize] += 1;
        }
        counts
    }

    /// True when the multiplicity of every entry `i` equals `gamma[i-1]`.
    pub fn has_content(&self, gamma: &Partition) -> bool {
        let counts = self.content();
        let len = counts.len().max(gamma.rows());
        (0..len).all(|i| counts.get(i).copied().unwrap_or(0) == u64::from(gamma.part(i)))
    }

    /// Rows weakly increase left to right, columns strictly increase top to
    /// bottom.
    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if !row.windows(2).all(|w| w[0] <= w[1]) {
                return false;
            }
        }
        for (r, row) in self.rows.iter().enumerate().skip(1) {
            for (c, &e) in row.iter().enumerate() {
                if self.rows[r - 1][c] >= e {
                    return false;
                }
            }
        }
        true
    }

    /// No column holds two equal entries.
    pub fn has_distinct_column_entries(&self) -> bool {
        for c in 0..self.column_count() {
            let col = self.column(c);
            for i in 0..col.len() {
                for j in i + 1..col.len() {
                    if col[i] == col[j] {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl TryFrom<Vec<Vec<u32>>> for Filling {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Filling::from_rows(rows)
    }
}

impl From<Filling> for Vec<Vec<u32>> {
    fn from(f: Filling) -> Self {
        f.rows
    }
}

impl std::fmt::Debug for Filling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Filling{:?}", self.rows)
    }
}

/// Constructs a semistandard filling of `shape` with content `gamma`, or
/// returns `None` when `shape` does not dominate `gamma` (Gale-Ryser).
///
/// The greedy places values n, n−1, …, 1: the copies of each value go to the
/// bottom-most free cell of the columns with the most free cells, ties broken
/// rightmost. The standard exchange argument shows this never gets stuck when
/// dominance holds, and it keeps the free column depths weakly decreasing, so
/// rows come out weakly increasing. The result is validated before return; on
/// a validation surprise at desk scale the exhaustive search takes over.
pub fn gale_ryser_filling(shape: &Partition, gamma: &Partition) -> Result<Option<Filling>> {
    if shape.size() != gamma.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: gamma.size(),
        });
    }
    if !shape.dominates(gamma)? {
        return Ok(None);
    }
    let cols = shape.part(0) as usize;
    let depths = shape.column_lengths();
    let mut remaining: Vec<u32> = depths.clone();
    let mut rows: Vec<Vec<u32>> = (0..shape.rows())
        .map(|r| vec![0u32; shape.part(r) as usize])
        .collect();
    let mut stuck = false;
    'fill: for value in (1..=gamma.rows() as u32).rev() {
        let copies = gamma.part((value - 1) as usize) as usize;
        let mut free: Vec<usize> = (0..cols).filter(|&c| remaining[c] > 0).collect();
        if free.len() < copies {
            stuck = true;
            break 'fill;
        }
        // most free cells first, rightmost column first among ties
        free.sort_unstable_by(|&a, &b| remaining[b].cmp(&remaining[a]).then(b.cmp(&a)));
        for &c in free.iter().take(copies) {
            let row = (remaining[c] - 1) as usize;
            rows[row][c] = value;
            remaining[c] -= 1;
        }
    }
    if !stuck {
        let filling = Filling::from_rows(rows)?;
        if filling.shape() == shape && filling.is_semistandard() && filling.has_content(gamma) {
            return Ok(Some(filling));
        }
    }
    if shape.size() <= BRUTE_FORCE_BOX_CAP {
        return brute_force_filling_search(shape, gamma, FillingPredicate::Semistandard);
    }
    Err(Error::InternalInconsistency(format!(
        "greedy filling failed for shape {shape} with content {gamma}"
    )))
}

/// Predicate selecting which fillings [`brute_force_filling_search`] accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FillingPredicate {
    Semistandard,
    DistinctColumns,
}

/// Exhaustively searches the fillings of `shape` with content `gamma` for one
/// satisfying `predicate`, in a fixed deterministic order. Capped at
/// [`BRUTE_FORCE_BOX_CAP`] boxes.
pub fn brute_force_filling_search(
    shape: &Partition,
    gamma: &Partition,
    predicate: FillingPredicate,
) -> Result<Option<Filling>> {
    if shape.size() > BRUTE_FORCE_BOX_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force filling search box count",
            value: shape.size(),
            cap: BRUTE_FORCE_BOX_CAP,
        });
    }
    if shape.size() != gamma.size() {
        // No filling of `shape` can have content `gamma`; the search is vacuous.
        return Ok(None);
    }
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let mut counts: Vec<u64> = (0..gamma.rows())
        .map(|i| u64::from(gamma.part(i)))
        .collect();
    let mut rows: Vec<Vec<u32>> = (0..shape.rows())
        .map(|r| vec![0u32; shape.part(r) as usize])
        .collect();

    fn admissible(
        rows: &[Vec<u32>],
        r: usize,
        c: usize,
        value: u32,
        predicate: FillingPredicate,
    ) -> bool {
        match predicate {
            FillingPredicate::Semistandard => {
                (c == 0 || rows[r][c - 1] <= value) && (r == 0 || rows[r - 1][c] < value)
            }
            FillingPredicate::DistinctColumns => (0..r).all(|above| rows[above][c] != value),
        }
    }

    fn search(
        cells: &[(usize, usize)],
        idx: usize,
        counts: &mut [u64],
        rows: &mut [Vec<u32>],
        predicate: FillingPredicate,
    ) -> bool {
        let Some(&(r, c)) = cells.get(idx) else {
            return true;
        };
        for v in 0..counts.len() {
            if counts[v] == 0 {
                continue;
            }
            let value = (v + 1) as u32;
            if !admissible(rows, r, c, value, predicate) {
                continue;
            }
            counts[v] -= 1;
            rows[r][c] = value;
            if search(cells, idx + 1, counts, rows, predicate) {
                return true;
            }
            rows[r][c] = 0;
            counts[v] += 1;
        }
        false
    }

    if search(&cells, 0, &mut counts, &mut rows, predicate) {
        Ok(Some(Filling::from_rows(rows)?))
    } else {
        Ok(None)
    }
}
