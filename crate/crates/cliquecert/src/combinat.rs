//! Exact combinatorial primitives shared by every other module:
//! arbitrary-precision binomials, exact rationals, and the colexicographic
//! subset indexing that fixes the row order of every matrix in the crate.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use std::sync::OnceLock;

use crate::{Error, Result};

/// Exact rational number, always reduced, denominator positive.
pub use num_rational::BigRational;

/// Binomial rows are memoized up to this n; larger arguments are computed on
/// demand with the multiplicative formula.
pub const BINOMIAL_MEMO_CAP: usize = 256;

fn pascal_rows() -> &'static Vec<Vec<BigUint>> {
    static ROWS: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    ROWS.get_or_init(|| {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(BINOMIAL_MEMO_CAP + 1);
        for n in 0..=BINOMIAL_MEMO_CAP {
            let mut row = vec![BigUint::one(); n + 1];
            for k in 1..n {
                row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
            }
            rows.push(row);
        }
        rows
    })
}

/// The binomial coefficient C(n, k), with the usual out-of-range convention:
/// zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: isize) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    binom(n, k as usize)
}

/// C(n, k) for a nonnegative `k`; zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n <= BINOMIAL_MEMO_CAP {
        return BigInt::from(pascal_rows()[n][k].clone());
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    BigInt::from(acc)
}

/// C(n, k) as an exact rational.
pub fn binom_rat(n: usize, k: isize) -> BigRational {
    BigRational::from_integer(binomial(n, k))
}

/// An integer as an exact rational.
pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The exact power of two `2^e`, with negative exponents allowed.
pub fn pow2(e: i64) -> BigRational {
    let mag = BigInt::one() << e.unsigned_abs() as usize;
    if e >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Renders a rational as `p/q`, or just `p` when the denominator is one.
pub fn rat_to_string(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Parses the `p/q` (or bare integer) form produced by [`rat_to_string`].
pub fn rat_from_string(s: &str) -> Result<BigRational> {
    let bad = |_| Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(bad)?)),
        Some((p, q)) => {
            let numer: BigInt = p.trim().parse().map_err(bad)?;
            let denom: BigInt = q.trim().parse().map_err(bad)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator: {s:?}")));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Bijection between r-subsets of `{0..n-1}` and the dense index range
/// `0..C(n,r)`, in colexicographic order: a subset precedes another iff its
/// largest differing element is smaller.  The first few 2-subsets are
/// `{0,1}, {0,2}, {1,2}, {0,3}, ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetIndexer {
    n: usize,
    r: usize,
}

impl SubsetIndexer {
    /// Indexer over r-subsets of `{0..n-1}`; requires `r <= n`.
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidInput(format!(
                "subset size {r} exceeds ground-set size {n}"
            )));
        }
        let dim = binom(n, r);
        if dim.to_usize().is_none() {
            return Err(Error::Capacity(format!(
                "C({n},{r}) does not fit in an index"
            )));
        }
        Ok(Self { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of indexed subsets, C(n, r).
    pub fn dim(&self) -> usize {
        binom(self.n, self.r).to_usize().expect("checked in new")
    }

    fn validate(&self, subset: &[usize]) -> Result<()> {
        if subset.len() != self.r {
            return Err(Error::InvalidInput(format!(
                "expected a subset of size {}, got {}",
                self.r,
                subset.len()
            )));
        }
        for w in subset.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInput(
                    "subset must be strictly increasing".into(),
                ));
            }
        }
        if let Some(&last) = subset.last() {
            if last >= self.n {
                return Err(Error::InvalidInput(format!(
                    "element {last} is outside the ground set 0..{}",
                    self.n
                )));
            }
        }
        Ok(())
    }

    /// Colexicographic rank of a sorted subset: `sum_i C(s_i, i+1)`.
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        self.validate(subset)?;
        Ok(colex_rank(subset))
    }

    /// The unique subset with the given colex rank.
    pub fn unrank(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.dim() {
            return Err(Error::InvalidInput(format!(
                "index {index} out of range 0..{}",
                self.dim()
            )));
        }
        let mut rem = index;
        let mut out = vec![0usize; self.r];
        let mut hi = self.n;
        for i in (1..=self.r).rev() {
            // Largest m with C(m, i) <= rem; scanning down from the previous
            // element keeps the whole unrank linear in n.
            let mut m = hi - 1;
            loop {
                let c = binom(m, i).to_usize().expect("within dim");
                if c <= rem {
                    rem -= c;
                    out[i - 1] = m;
                    hi = m;
                    break;
                }
                m -= 1;
            }
        }
        Ok(out)
    }

    /// All indexed subsets in colex (= rank) order.
    pub fn iter(&self) -> SubsetIter {
        SubsetIter {
            next: if self.r <= self.n {
                Some((0..self.r).collect())
            } else {
                None
            },
            n: self.n,
            remaining: self.dim(),
        }
    }

    /// Human-readable label for a subset, e.g. `{0,2,5}`.
    pub fn label(subset: &[usize]) -> String {
        let inner: Vec<String> = subset.iter().map(|v| v.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }

    /// Labels for all subsets in rank order.
    pub fn labels(&self) -> Vec<String> {
        self.iter().map(|s| Self::label(&s)).collect()
    }
}

/// Colex rank of a strictly increasing slice (validity is the caller's
/// responsibility here; [`SubsetIndexer::rank`] validates first).
pub fn colex_rank(subset: &[usize]) -> usize {
    subset
        .iter()
        .enumerate()
        .map(|(i, &s)| binom(s, i + 1).to_usize().expect("subset rank overflow"))
        .sum()
}

/// Iterator over r-subsets in colexicographic order.
pub struct SubsetIter {
    next: Option<Vec<usize>>,
    n: usize,
    remaining: usize,
}

impl Iterator for SubsetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.clone()?;
        self.remaining -= 1;
        // Colex successor: bump the smallest element that can move up, reset
        // everything below it to 0..j.
        let s = self.next.as_mut().unwrap();
        let r = s.len();
        let mut advanced = false;
        for j in 0..r {
            let limit = if j + 1 < r { s[j + 1] } else { self.n };
            if s[j] + 1 < limit {
                s[j] += 1;
                for (t, slot) in s.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.next = None;
        }
        Some(current)
    }
}

impl ExactSizeIterator for SubsetIter {
    fn len(&self) -> usize {
        self.remaining
    }
}

/// Index over all subsets of size at most `r`, sizes ascending and colex
/// within each size.  This is the row order of the full moment matrix.
#[derive(Debug, Clone)]
pub struct FullIndexer {
    n: usize,
    r: usize,
    offsets: Vec<usize>,
    dim: usize,
}

impl FullIndexer {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidInput(format!(
                "subset size cap {r} exceeds ground-set size {n}"
            )));
        }
        let mut offsets = Vec::with_capacity(r + 2);
        let mut total = 0usize;
        for s in 0..=r {
            offsets.push(total);
            let c = binom(n, s).to_usize().ok_or_else(|| {
                Error::Capacity(format!("C({n},{s}) does not fit in an index"))
            })?;
            total = total.checked_add(c).ok_or_else(|| {
                Error::Capacity(format!("index over subsets of size <= {r} overflows"))
            })?;
        }
        offsets.push(total);
        Ok(Self {
            n,
            r,
            offsets,
            dim: total,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Total number of indexed subsets, `sum_{s<=r} C(n,s)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Index of the first subset of the given size.
    pub fn offset(&self, size: usize) -> usize {
        self.offsets[size]
    }

    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let s = subset.len();
        if s > self.r {
            return Err(Error::InvalidInput(format!(
                "subset of size {s} exceeds cap {}",
                self.r
            )));
        }
        let sub = SubsetIndexer::new(self.n, s)?;
        Ok(self.offsets[s] + sub.rank(subset)?)
    }

    pub fn unrank(&self, index: usize) -> Result<Vec<usize>> {
        if index >= self.dim {
            return Err(Error::InvalidInput(format!(
                "index {index} out of range 0..{}",
                self.dim
            )));
        }
        let s = match self.offsets.iter().rposition(|&o| o <= index) {
            Some(s) => s,
            None => unreachable!("offsets start at 0"),
        };
        let sub = SubsetIndexer::new(self.n, s)?;
        sub.unrank(index - self.offsets[s])
    }

    /// All indexed subsets in rank order.
    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..=self.r).flat_map(move |s| {
            SubsetIndexer::new(self.n, s)
                .expect("sizes validated in new")
                .iter()
        })
    }

    pub fn labels(&self) -> Vec<String> {
        self.iter().map(|s| SubsetIndexer::label(&s)).collect()
    }
}

/// Size of the intersection of two strictly increasing slices.
pub fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Sorted union of two strictly increasing slices.
pub fn set_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Elements of `a` not in `b`, both strictly increasing.
pub fn set_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}
