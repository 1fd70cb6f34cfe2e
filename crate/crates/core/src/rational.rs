//! Exact rational scalars, vectors and dense matrices.
//!
//! Everything downstream (boundary operators, LP tableaus, cochain values)
//! is built on [`Rational`]; there is no floating point anywhere in the
//! crate, so equalities asserted by the verification suites are exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p` (optionally signed). Whitespace is not accepted.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Input(format!("invalid rational literal '{s}'")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Input(format!("zero denominator in '{s}'")));
            }
            Ok(Rational::new(parse_int(p)?, denom))
        }
    }
}

/// Dense matrix over [`Rational`], row major.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format_rational(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    /// Zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Input("ragged rows in matrix construction".into()));
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows (tests, generators).
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
        .expect("integer rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Input(format!(
                "dimension mismatch: {}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Rational::zero();
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() && !v[j].is_zero() {
                    acc += e * &v[j];
                }
            }
            out[i] = acc;
        }
        Ok(out)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Input(format!(
                "dimension mismatch in product: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form together with pivot column indices.
    /// The rank is the number of pivots.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    m.entries.swap(pivot_row * m.cols + j, row * m.cols + j);
                }
            }
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &factor * m.get(row, j);
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        (m, pivots, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().2
    }

    /// Basis of the kernel `{ v : self * v = 0 }`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots, _) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (rank_row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(rank_row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::Input(format!(
                "dimension mismatch: {} rows, rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        // Row-reduce the augmented matrix [self | b].
        let mut aug = RationalMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots, _) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (rank_row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(rank_row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Vertical stack: `[self; other]`.
    pub fn vstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.cols {
            return Err(Error::Input("column mismatch in vstack".into()));
        }
        let mut m = RationalMatrix::zero(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                m.set(self.rows + i, j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Horizontal stack: `[self other]`.
    pub fn hstack(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.rows != other.rows {
            return Err(Error::Input("row mismatch in hstack".into()));
        }
        let mut m = RationalMatrix::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Matrix with the selected columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> RationalMatrix {
        let mut m = RationalMatrix::zero(self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Matrix with the selected rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> RationalMatrix {
        let mut m = RationalMatrix::zero(rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m
    }
}

/// Sum of absolute values of a coefficient vector.
pub fn l1_of(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).sum()
}

/// Picks, from `candidates`, a subset of vectors whose classes complete the
/// column space of `image` to the span of `[image | candidates]`. Used to
/// extract homology representatives from a kernel basis and an image matrix.
pub fn independent_modulo(image: &RationalMatrix, candidates: &[Vec<Rational>]) -> Vec<usize> {
    let n = image.rows();
    let mut cols: Vec<Vec<Rational>> = (0..image.cols())
        .map(|j| (0..n).map(|i| image.get(i, j).clone()).collect())
        .collect();
    let mut base_rank = rank_of_columns(&cols, n);
    let mut chosen = Vec::new();
    for (idx, cand) in candidates.iter().enumerate() {
        cols.push(cand.clone());
        let r = rank_of_columns(&cols, n);
        if r > base_rank {
            base_rank = r;
            chosen.push(idx);
        } else {
            cols.pop();
        }
    }
    chosen
}

fn rank_of_columns(cols: &[Vec<Rational>], n: usize) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let mut m = RationalMatrix::zero(n, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            m.set(i, j, c[i].clone());
        }
    }
    m.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed() {
        let m = RationalMatrix::identity(2);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, m);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_zero_matrix() {
        let m = RationalMatrix::zero(3, 3);
        let (r, pivots, rank) = m.rref();
        assert!(r.is_zero());
        assert!(pivots.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let m = RationalMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let (r, pivots, rank) = m.rref();
        assert_eq!(r, RationalMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(pivots, vec![0]);
        assert_eq!(rank, 1);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        assert!(RationalMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let basis = RationalMatrix::zero(2, 3).kernel_basis();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn kernel_of_row_sum() {
        let m = RationalMatrix::from_int_rows(&[&[1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 1);
        // span of (1, -1): the computed vector is (-1, 1)
        assert_eq!(&basis[0][0] + &basis[0][1], rat(0));
        assert!(m.mul_vec(&basis[0]).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_identity() {
        let m = RationalMatrix::identity(2);
        let b = vec![rat(5), rat(-7)];
        assert_eq!(m.solve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_inconsistent() {
        let m = RationalMatrix::zero(2, 2);
        assert!(m.solve(&[rat(1), rat(0)]).unwrap().is_none());
    }

    #[test]
    fn solve_scalar_division() {
        let m = RationalMatrix::from_int_rows(&[&[2]]);
        assert_eq!(m.solve(&[rat(1)]).unwrap().unwrap(), vec![ratio(1, 2)]);
    }

    #[test]
    fn solve_dimension_mismatch_is_input_error() {
        let m = RationalMatrix::identity(2);
        assert!(m.solve(&[rat(1)]).is_err());
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["3", "-3", "1/2", "-7/3", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
