//! Dense matrices and vectors over exact nonnegative rationals.
//!
//! Every product in the crate is carried by [`ExactMatrix`]; vectors are
//! 1-column matrices and row vectors are 1-row matrices.  The entry-sum
//! norm `‖M‖ = Σ |M(i,j)|` is the only norm used on the exact side.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a rational.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Shorthand for small rational constants.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `f64` value of a rational, safe for numerators/denominators far
/// beyond the `f64` range (both are shifted down together first).
pub fn rational_to_f64(r: &Rational) -> f64 {
    let n = r.numer();
    let d = r.denom();
    if n.is_zero() {
        return 0.0;
    }
    let bits = n.bits().max(d.bits());
    if bits <= 900 {
        let nf = n.to_f64().unwrap_or(f64::NAN);
        let df = d.to_f64().unwrap_or(f64::NAN);
        return nf / df;
    }
    let shift = bits - 512;
    let nf = (n >> shift).to_f64().unwrap_or(f64::NAN);
    let df = (d >> shift).to_f64().unwrap_or(f64::NAN);
    nf / df
}

/// Natural logarithm of a positive rational, accurate to ~1e-12 even for
/// astronomically large numerators and denominators.
pub fn rational_ln(r: &Rational) -> f64 {
    fn ln_big(x: &BigInt) -> f64 {
        let bits = x.bits();
        if bits <= 900 {
            return x.to_f64().unwrap().ln();
        }
        let shift = bits - 64;
        let top = (x >> shift).to_f64().unwrap();
        top.ln() + (shift as f64) * std::f64::consts::LN_2
    }
    debug_assert!(r.is_positive());
    ln_big(r.numer()) - ln_big(r.denom())
}

/// 0/1 support mask of a vector (Δ(V)); `index_set` is `I(V)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern {
    mask: Vec<bool>,
}

/// Result of comparing two support patterns in the lattice of subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternOrder {
    Le,
    Ge,
    Eq,
    Incomparable,
}

impl SupportPattern {
    pub fn new(mask: Vec<bool>) -> Self {
        SupportPattern { mask }
    }

    pub fn dim(&self) -> usize {
        self.mask.len()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn is_zero(&self) -> bool {
        self.mask.iter().all(|&b| !b)
    }

    /// Indices with nonzero entries, 0-based.
    pub fn index_set(&self) -> Vec<usize> {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }

    pub fn count(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn le(&self, other: &SupportPattern) -> bool {
        self.mask.len() == other.mask.len()
            && self
                .mask
                .iter()
                .zip(&other.mask)
                .all(|(&a, &b)| !a || b)
    }

    /// Lattice comparison; errors on dimension mismatch.
    pub fn compare(&self, other: &SupportPattern) -> Result<PatternOrder> {
        if self.mask.len() != other.mask.len() {
            return Err(Error::DimensionMismatch(format!(
                "pattern dims {} vs {}",
                self.mask.len(),
                other.mask.len()
            )));
        }
        let le = self.le(other);
        let ge = other.le(self);
        Ok(match (le, ge) {
            (true, true) => PatternOrder::Eq,
            (true, false) => PatternOrder::Le,
            (false, true) => PatternOrder::Ge,
            (false, false) => PatternOrder::Incomparable,
        })
    }

    /// The pattern as a 0/1 vector.
    pub fn to_vector(&self) -> ExactMatrix {
        ExactMatrix::column(
            self.mask
                .iter()
                .map(|&b| if b { Rational::one() } else { Rational::zero() })
                .collect(),
        )
    }
}

impl fmt::Debug for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.mask.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", if *b { 1 } else { 0 })?;
        }
        write!(f, ")")
    }
}

/// Dense matrix of exact nonnegative rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries; rejects negative entries.
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(
                "negative entry in nonnegative matrix".into(),
            ));
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    /// Builds a matrix from integer rows (the common case for the
    /// incidence matrices of the paper's families).
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigRational::from(BigInt::from(x))))
            .collect();
        ExactMatrix::new(r, c, data).expect("nonnegative integer rows")
    }

    pub fn identity(d: usize) -> Self {
        let mut data = vec![Rational::zero(); d * d];
        for i in 0..d {
            data[i * d + i] = Rational::one();
        }
        ExactMatrix {
            rows: d,
            cols: d,
            data,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn column(entries: Vec<Rational>) -> Self {
        let rows = entries.len();
        ExactMatrix::new(rows, 1, entries).expect("nonnegative column")
    }

    pub fn row_vector(entries: Vec<Rational>) -> Self {
        let cols = entries.len();
        ExactMatrix::new(1, cols, entries).expect("nonnegative row")
    }

    /// Canonical basis column `U_j` (0-based `j`).
    pub fn unit(d: usize, j: usize) -> Self {
        let mut entries = vec![Rational::zero(); d];
        entries[j] = Rational::one();
        ExactMatrix::column(entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        assert!(!v.is_negative(), "negative entry");
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_vector(&self) -> bool {
        self.cols == 1
    }

    /// Exact matrix product; errors on inner-dimension mismatch.
    pub fn product(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = vec![Rational::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out[i * other.cols + j] += a * b;
                }
            }
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data: out,
        })
    }

    /// Entry-sum norm `Σ entries` (all entries are nonnegative).
    pub fn norm1(&self) -> Rational {
        let mut s = Rational::zero();
        for x in &self.data {
            s += x;
        }
        s
    }

    pub fn scale(&self, c: &Rational) -> Result<ExactMatrix> {
        if c.is_negative() {
            return Err(Error::InvalidArgument("negative scale".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        })
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("add".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn col(&self, j: usize) -> ExactMatrix {
        ExactMatrix::column((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row(&self, i: usize) -> ExactMatrix {
        ExactMatrix::row_vector((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    /// Support of column `j`.
    pub fn col_support(&self, j: usize) -> SupportPattern {
        SupportPattern::new((0..self.rows).map(|i| !self.get(i, j).is_zero()).collect())
    }

    /// Number of distinct nonzero column supports, `#Col(M)`.
    pub fn col_pattern_count(&self) -> usize {
        let mut set = std::collections::BTreeSet::new();
        for j in 0..self.cols {
            let p = self.col_support(j);
            if !p.is_zero() {
                set.insert(p);
            }
        }
        set.len()
    }

    /// Entries as `f64` (safe for huge rationals).
    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.data.iter().map(rational_to_f64).collect()
    }

    /// Column vector normalized to entry-sum 1, exact.
    pub fn normalized(&self) -> Result<ExactMatrix> {
        let n = self.norm1();
        if n.is_zero() {
            return Err(Error::ZeroVector("cannot normalize zero".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x / &n).collect(),
        })
    }

    /// Entrywise `min(self, cap·Δ(self))`, used by the saturation graphs.
    pub fn min_with_cap(&self, cap: i64) -> ExactMatrix {
        let capr = BigRational::from(BigInt::from(cap));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| {
                    if x.is_zero() {
                        Rational::zero()
                    } else if *x > capr {
                        capr.clone()
                    } else {
                        x.clone()
                    }
                })
                .collect(),
        }
    }

    /// Entrywise `self >= other` for equal shapes.
    pub fn dominates(&self, other: &ExactMatrix) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a >= b)
    }

    /// JSON encoding: `{"rows":r,"cols":c,"data":[["p/q",...],...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                serde_json::Value::Array(
                    (0..self.cols)
                        .map(|j| serde_json::Value::String(rational_to_string(self.get(i, j))))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "data": rows })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ExactMatrix> {
        let rows = v["rows"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing rows".into()))? as usize;
        let cols = v["cols"]
            .as_u64()
            .ok_or_else(|| Error::Parse("missing cols".into()))? as usize;
        let data_rows = v["data"]
            .as_array()
            .ok_or_else(|| Error::Parse("missing data".into()))?;
        if data_rows.len() != rows {
            return Err(Error::Parse("row count mismatch".into()));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in data_rows {
            let row = r
                .as_array()
                .ok_or_else(|| Error::Parse("row not an array".into()))?;
            if row.len() != cols {
                return Err(Error::Parse("col count mismatch".into()));
            }
            for e in row {
                let s = e
                    .as_str()
                    .ok_or_else(|| Error::Parse("entry not a string".into()))?;
                data.push(rational_from_str(s)?);
            }
        }
        ExactMatrix::new(rows, cols, data)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", rational_to_string(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Support pattern Δ(V) of a column vector.
pub fn support_pattern(v: &ExactMatrix) -> SupportPattern {
    debug_assert!(v.is_vector());
    v.col_support(0)
}

/// Compares the supports of two vectors or patterns.
pub fn compare_patterns(p: &SupportPattern, q: &SupportPattern) -> Result<PatternOrder> {
    p.compare(q)
}

/// Total ordering on rationals as comparison helper.
pub fn rational_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.cmp(b)
}
