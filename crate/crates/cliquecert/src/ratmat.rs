//! Dense matrices over exact rationals, with labeled CSV serialization.
//!
//! Certificate matrices are assembled and compared in exact arithmetic;
//! floating point enters only when a spectral routine in [`crate::spectra`]
//! needs it.  Entries serialize as `p/q` strings so a dumped matrix reloads
//! with no loss.

use num_traits::{Signed, Zero};
use std::io::{Read, Write};
use std::path::Path;

use crate::combinat::{rat, rat_from_string, rat_to_string, BigRational};
use crate::{Error, Result};

/// Row-major dense matrix of [`BigRational`] entries with one label per row
/// and column.  Labels are carried through CSV round trips verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
}

impl RatMat {
    /// Zero matrix with index-number labels.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
            row_labels: (0..rows).map(|i| i.to_string()).collect(),
            col_labels: (0..cols).map(|j| j.to_string()).collect(),
        }
    }

    /// Builds entry (i, j) as `f(i, j)`.
    pub fn from_fn<F: FnMut(usize, usize) -> BigRational>(
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { rat(1) } else { rat(0) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn set_labels(&mut self, row_labels: Vec<String>, col_labels: Vec<String>) -> Result<()> {
        if row_labels.len() != self.rows || col_labels.len() != self.cols {
            return Err(Error::InvalidInput(format!(
                "label counts {}x{} do not match shape {}x{}",
                row_labels.len(),
                col_labels.len(),
                self.rows,
                self.cols
            )));
        }
        self.row_labels = row_labels;
        self.col_labels = col_labels;
        Ok(())
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn max_abs(&self) -> BigRational {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.clone();
        for v in &mut out.data {
            *v *= c;
        }
        out
    }

    /// Entrywise sum; labels come from `self`.
    ///
    /// # Panics
    /// If shapes differ.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    /// Entrywise difference; labels come from `self`.
    ///
    /// # Panics
    /// If shapes differ.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    /// Exact matrix-vector product.
    ///
    /// # Panics
    /// If `x.len() != self.cols()`.
    pub fn mul_vec(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigRational::zero();
                for (j, xj) in x.iter().enumerate() {
                    if !xj.is_zero() {
                        acc += self.get(i, j) * xj;
                    }
                }
                acc
            })
            .collect()
    }

    /// Square submatrix on the given row/column indices, labels included.
    ///
    /// # Panics
    /// If the matrix is not square or an index is out of range.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        assert_eq!(self.rows, self.cols, "principal submatrix needs a square matrix");
        let d = indices.len();
        let mut out = Self::from_fn(d, d, |i, j| self.get(indices[i], indices[j]).clone());
        out.row_labels = indices.iter().map(|&i| self.row_labels[i].clone()).collect();
        out.col_labels = indices.iter().map(|&j| self.col_labels[j].clone()).collect();
        out
    }

    /// Writes the labeled CSV form: a header record of an empty corner cell
    /// followed by the column labels, then one record per row starting with
    /// its label, entries as exact `p/q` strings.
    pub fn to_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let mut header = Vec::with_capacity(self.cols + 1);
        header.push(String::new());
        header.extend(self.col_labels.iter().cloned());
        wtr.write_record(&header)
            .map_err(|e| Error::Io(std::io::Error::other(e)))?;
        for i in 0..self.rows {
            let mut rec = Vec::with_capacity(self.cols + 1);
            rec.push(self.row_labels[i].clone());
            for j in 0..self.cols {
                rec.push(rat_to_string(self.get(i, j)));
            }
            wtr.write_record(&rec)
                .map_err(|e| Error::Io(std::io::Error::other(e)))?;
        }
        wtr.flush()?;
        Ok(())
    }

    pub fn to_csv_file<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        self.to_csv(std::fs::File::create(path)?)
    }

    /// Reads the CSV form written by [`RatMat::to_csv`] back into a matrix.
    /// Lines starting with `#` are metadata comments and are skipped.
    pub fn from_csv<R: Read>(r: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(false)
            .comment(Some(b'#'))
            .from_reader(r);
        let mut records = rdr.records();
        let header = records
            .next()
            .ok_or_else(|| Error::Parse("empty matrix CSV".into()))?
            .map_err(|e| Error::Parse(e.to_string()))?;
        if header.is_empty() || !header[0].is_empty() {
            return Err(Error::Parse("matrix CSV must start with an empty corner cell".into()));
        }
        let col_labels: Vec<String> = header.iter().skip(1).map(str::to_owned).collect();
        let cols = col_labels.len();
        let mut row_labels = Vec::new();
        let mut data = Vec::new();
        for rec in records {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            if rec.len() != cols + 1 {
                return Err(Error::Parse(format!(
                    "row {:?} has {} cells, expected {}",
                    rec.get(0).unwrap_or(""),
                    rec.len(),
                    cols + 1
                )));
            }
            row_labels.push(rec[0].to_owned());
            for cell in rec.iter().skip(1) {
                data.push(rat_from_string(cell)?);
            }
        }
        Ok(Self {
            rows: row_labels.len(),
            cols,
            data,
            row_labels,
            col_labels,
        })
    }

    pub fn from_csv_file<P: AsRef<Path>>(path: P) -> Result<Self> {
        Self::from_csv(std::fs::File::open(path)?)
    }
}

/// Row-major dense matrix of machine integers, used for the small
/// fixed-entry matrices whose values never leave `i64`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> i64>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |i, j| rat(self.get(i, j)))
    }
}
