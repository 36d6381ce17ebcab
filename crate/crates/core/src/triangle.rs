//! Dense lower-triangular rational matrices.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, parse_rational, Rational};

/// Row `n` holds the entries `d_{n,0}..=d_{n,n}`; everything right of the
/// diagonal is implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    rows: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct TriangleJson {
    rows: Vec<Vec<String>>,
}

impl Triangle {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::MalformedTriangle { row: n, len: row.len(), expected: n + 1 });
            }
        }
        Ok(Triangle { rows })
    }

    /// Convenience constructor for integer triangles. Panics on malformed rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        Self::from_rows(rows).expect("malformed integer triangle")
    }

    pub fn identity(row_count: usize) -> Self {
        let rows = (0..row_count)
            .map(|n| (0..=n).map(|j| if j == n { int(1) } else { Rational::zero() }).collect())
            .collect();
        Triangle { rows }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Rational>> {
        self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    /// Entry `(n, j)`; zero above the diagonal.
    pub fn get(&self, n: usize, j: usize) -> Rational {
        if j > n {
            Rational::zero()
        } else {
            self.rows[n][j].clone()
        }
    }

    /// Entries `d_{k,k}, d_{k+1,k}, ...` of column `k`.
    pub fn column(&self, k: usize) -> Vec<Rational> {
        self.rows.iter().skip(k).map(|r| r[k].clone()).collect()
    }

    pub fn truncated(&self, row_count: usize) -> Triangle {
        Triangle { rows: self.rows.iter().take(row_count).cloned().collect() }
    }

    pub fn matmul(&self, other: &Triangle) -> Result<Triangle> {
        if self.row_count() != other.row_count() {
            return Err(Error::LengthMismatch { left: self.row_count(), right: other.row_count() });
        }
        let rows = (0..self.row_count())
            .map(|n| {
                (0..=n)
                    .map(|j| {
                        let mut acc = Rational::zero();
                        for k in j..=n {
                            acc += &self.rows[n][k] * &other.rows[k][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(Triangle { rows })
    }

    /// Exact inverse by forward substitution.
    pub fn inverse(&self) -> Result<Triangle> {
        let r = self.row_count();
        if let Some(i) = (0..r).find(|&i| self.rows[i][i].is_zero()) {
            return Err(Error::ZeroDiagonal { index: i });
        }
        let mut inv: Vec<Vec<Rational>> = (0..r).map(|n| vec![Rational::zero(); n + 1]).collect();
        for j in 0..r {
            inv[j][j] = self.rows[j][j].recip();
            for i in j + 1..r {
                let mut acc = Rational::zero();
                for k in j..i {
                    acc += &self.rows[i][k] * &inv[k][j];
                }
                inv[i][j] = -(acc / &self.rows[i][i]);
            }
        }
        Ok(Triangle { rows: inv })
    }

    /// Drops row 0 and column 0.
    pub fn delete_first_row_col(&self) -> Triangle {
        Triangle { rows: self.rows.iter().skip(1).map(|r| r[1..].to_vec()).collect() }
    }

    /// First position (row-major) where the two triangles differ, over the
    /// rows both contain.
    pub fn first_difference(&self, other: &Triangle) -> Option<(usize, usize)> {
        self.rows.iter().zip(&other.rows).enumerate().find_map(|(n, (a, b))| {
            a.iter().zip(b).position(|(x, y)| x != y).map(|j| (n, j))
        })
    }

    pub fn to_json(&self) -> String {
        let doc = TriangleJson {
            rows: self.rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        };
        serde_json::to_string(&doc).expect("triangle serializes")
    }

    pub fn from_json(text: &str) -> Result<Triangle> {
        let doc: TriangleJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("triangle json: {e}")))?;
        let rows = doc
            .rows
            .iter()
            .map(|r| r.iter().map(|v| parse_rational(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Triangle::from_rows(rows)
    }

    /// One row per line, `R` cells each, empty beyond the diagonal.
    pub fn to_csv(&self) -> String {
        let r = self.row_count();
        let mut out = String::new();
        for row in &self.rows {
            let mut cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            cells.resize(r, String::new());
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Triangle> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|line| {
                line.split(',')
                    .map(str::trim)
                    .filter(|c| !c.is_empty())
                    .map(parse_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Triangle::from_rows(rows)
    }

    /// Right-aligned columns, one row per line, nothing past the diagonal.
    pub fn to_text(&self) -> String {
        let r = self.row_count();
        let mut widths = vec![0usize; r];
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect();
        for row in &cells {
            for (j, c) in row.iter().enumerate() {
                widths[j] = widths[j].max(c.len());
            }
        }
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().enumerate().map(|(j, c)| format!("{c:>w$}", w = widths[j])).collect();
            out.push_str(&line.join("  "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn pascal(r: usize) -> Triangle {
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for n in 0..r {
            let mut row = vec![1i64; n + 1];
            for j in 1..n {
                row[j] = rows[n - 1][j - 1] + rows[n - 1][j];
            }
            rows.push(row);
        }
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        Triangle::from_ints(&refs)
    }

    #[test]
    fn rejects_ragged_rows() {
        let err = Triangle::from_rows(vec![vec![int(1)], vec![int(1)]]).unwrap_err();
        assert_eq!(err, Error::MalformedTriangle { row: 1, len: 1, expected: 2 });
    }

    #[test]
    fn pascal_inverse_is_signed_binomials() {
        let inv = pascal(6).inverse().unwrap();
        for n in 0..6 {
            for k in 0..=n {
                let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
                assert_eq!(inv.get(n, k), pascal(6).get(n, k) * int(sign));
            }
        }
        assert_eq!(pascal(6).matmul(&inv).unwrap(), Triangle::identity(6));
    }

    #[test]
    fn zero_diagonal_is_reported() {
        let t = Triangle::from_ints(&[&[1], &[2, 0], &[1, 1, 1]]);
        assert_eq!(t.inverse(), Err(Error::ZeroDiagonal { index: 1 }));
    }

    #[test]
    fn serial_formats_agree() {
        let t = Triangle::from_rows(vec![vec![ratio(1, 2)], vec![int(0), int(-3)], vec![int(1), ratio(2, 3), int(4)]])
            .unwrap();
        assert_eq!(t.to_json(), r#"{"rows":[["1/2"],["0","-3"],["1","2/3","4"]]}"#);
        assert_eq!(t.to_csv(), "1/2,,\n0,-3,\n1,2/3,4\n");
        assert_eq!(t.to_text(), "1/2\n  0   -3\n  1  2/3  4\n");
        assert_eq!(Triangle::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(Triangle::from_csv(&t.to_csv()).unwrap(), t);
    }

    #[test]
    fn first_difference_is_row_major() {
        let a = pascal(4);
        let mut rows = a.clone().into_rows();
        rows[3][2] = int(0);
        rows[2][1] = int(5);
        let b = Triangle::from_rows(rows).unwrap();
        assert_eq!(a.first_difference(&b), Some((2, 1)));
        assert_eq!(a.first_difference(&a), None);
    }

    #[test]
    fn delete_first_row_and_column() {
        let d = pascal(4).delete_first_row_col();
        assert_eq!(d, Triangle::from_ints(&[&[1], &[2, 1], &[3, 3, 1]]));
    }
}
