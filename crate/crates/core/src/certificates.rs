//! Exact integer matrices and the incidence Gram certificate.
//!
//! For a connected graph with incidence matrix `B` (`n x m`), the matrix
//! `X = [I_m; B]` gives a positive semidefinite `M = X X^T` of rank `m`
//! whose off-diagonal support is exactly the triangle augmentation of the
//! graph (edge-vertices first, in lexicographic edge order, then the
//! original vertices). The `m` edge-vertices are independent there, so the
//! minimum semidefinite rank of the augmentation is at most its
//! independence number.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::{independence_number, triangle_augment, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntegerMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("rows differ in length".into()));
        }
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &IntegerMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::InvalidArgument("column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Self::new(self.rows + other.rows, self.cols, entries)
    }
}

/// Text form: `rows cols` on the first line, then one line per row.
impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for IntegerMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::InvalidArgument(format!("matrix text: {reason}"));
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| bad("empty input".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad dimension {t:?}"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(bad("header must be `rows cols`".into()));
        };
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, line) in lines.enumerate() {
            let row: Vec<BigInt> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| bad(format!("bad entry {t:?} in row {i}")))
                })
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(bad(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        if entries.len() != rows * cols {
            return Err(bad(format!("expected {rows} rows")));
        }
        Self::new(rows, cols, entries)
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn integer_rank(m: &IntegerMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                // exact division is guaranteed by Sylvester's identity
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Vertex-by-edge 0/1 matrix, edges in lexicographic order.
pub fn incidence_matrix(g: &Graph) -> IntegerMatrix {
    let edges = g.edges();
    let mut b = IntegerMatrix::zeros(g.order(), edges.len());
    for (e, &(u, v)) in edges.iter().enumerate() {
        b.set(u, e, BigInt::one());
        b.set(v, e, BigInt::one());
    }
    b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramChecks {
    pub m: usize,
    /// Off-diagonal support of `M` equals the edge set of the augmentation.
    pub pattern_matches: bool,
    pub rank: usize,
    pub edge_vertices_independent: bool,
    /// Independence number of the augmentation.
    pub alpha: usize,
}

impl GramChecks {
    /// Pattern, `rank = m`, and `alpha >= m`.
    pub fn passed(&self) -> bool {
        self.pattern_matches
            && self.rank == self.m
            && self.edge_vertices_independent
            && self.alpha >= self.m
    }
}

#[derive(Debug, Clone)]
pub struct GramCertificate {
    pub matrix: IntegerMatrix,
    /// Row `i` of `matrix` corresponds to vertex `vertex_order[i]` of the
    /// augmentation.
    pub vertex_order: Vec<usize>,
    pub checks: GramChecks,
}

pub fn incidence_gram(g: &Graph) -> Result<GramCertificate> {
    if !g.is_connected() {
        return precondition("incidence_gram", "graph must be connected");
    }
    let (n, m) = (g.order(), g.size());
    let aug = triangle_augment(g)?;
    let x = IntegerMatrix::identity(m).vstack(&incidence_matrix(g))?;
    let matrix = x.mul(&x.transpose())?;
    let vertex_order: Vec<usize> = (n..n + m).chain(0..n).collect();
    let size = n + m;
    let pattern_matches = (0..size).all(|i| {
        (0..size).all(|j| {
            i == j
                || !matrix.get(i, j).is_zero()
                    == aug.graph.has_edge(vertex_order[i], vertex_order[j])
        })
    });
    let checks = GramChecks {
        m,
        pattern_matches,
        rank: integer_rank(&matrix),
        edge_vertices_independent: aug.graph.is_independent(aug.edge_vertices),
        alpha: independence_number(&aug.graph).0,
    };
    Ok(GramCertificate {
        matrix,
        vertex_order,
        checks,
    })
}
