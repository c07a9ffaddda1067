//! Integer tuples, permutations, composition enumerators and the integer
//! Iverson-bracket determinants.

use std::fmt;
use std::ops::{Add, Index, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite sequence of integers with entrywise arithmetic.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntTuple(Vec<i64>);

impl IntTuple {
    pub fn new(entries: Vec<i64>) -> Self {
        IntTuple(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntTuple(vec![0; n])
    }

    /// `(1, 2, ..., n)`.
    pub fn staircase(n: usize) -> Self {
        IntTuple((1..=n as i64).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// Sum of the entries.
    pub fn abs(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The right action: `result_j = self_{σ(j)}`.
    pub fn act(&self, sigma: &Permutation) -> Result<IntTuple> {
        if sigma.degree() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: sigma.degree(),
            });
        }
        Ok(IntTuple(sigma.images.iter().map(|&s| self.0[s]).collect()))
    }

    pub fn try_add(&self, other: &IntTuple) -> Result<IntTuple> {
        self.same_len(other)?;
        Ok(IntTuple(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn try_sub(&self, other: &IntTuple) -> Result<IntTuple> {
        self.same_len(other)?;
        Ok(IntTuple(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    fn same_len(&self, other: &IntTuple) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn has_distinct_entries(&self) -> bool {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    /// Appends one entry.
    pub fn pushed(&self, x: i64) -> IntTuple {
        let mut v = self.0.clone();
        v.push(x);
        IntTuple(v)
    }

    pub fn prefix(&self, k: usize) -> IntTuple {
        IntTuple(self.0[..k].to_vec())
    }
}

impl From<Vec<i64>> for IntTuple {
    fn from(v: Vec<i64>) -> Self {
        IntTuple(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntTuple {
    fn from(v: [i64; N]) -> Self {
        IntTuple(v.to_vec())
    }
}

impl FromIterator<i64> for IntTuple {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        IntTuple(iter.into_iter().collect())
    }
}

impl Index<usize> for IntTuple {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &IntTuple {
    type Output = IntTuple;
    fn add(self, rhs: &IntTuple) -> IntTuple {
        self.try_add(rhs).expect("tuple lengths must agree")
    }
}

impl Sub for &IntTuple {
    type Output = IntTuple;
    fn sub(self, rhs: &IntTuple) -> IntTuple {
        self.try_sub(rhs).expect("tuple lengths must agree")
    }
}

impl fmt::Display for IntTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Parses `1,-2,3`; the empty string is the empty tuple.
impl FromStr for IntTuple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(IntTuple::default());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad tuple entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(IntTuple)
    }
}

/// A bijection of `[n]`, stored zero-based, with its inversion count cached.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
    length: usize,
}

fn inversions(images: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..images.len() {
        for j in i + 1..images.len() {
            if images[i] > images[j] {
                count += 1;
            }
        }
    }
    count
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
            length: 0,
        }
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation { n, images });
            }
            seen[x] = true;
        }
        let length = inversions(&images);
        Ok(Permutation { images, length })
    }

    /// From one-line notation `(σ(1), ..., σ(n))` with one-based entries.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotAPermutation {
                n: images.len(),
                images: images.to_vec(),
            });
        }
        Self::from_images(images.iter().map(|&x| x - 1).collect())
    }

    /// The transposition of the zero-based positions `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self::from_images(images).expect("transposition of valid positions")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image of the zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn sign(&self) -> i64 {
        if self.length.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Self::from_images(other.images.iter().map(|&i| self.images[i]).collect()).unwrap()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &s) in self.images.iter().enumerate() {
            inv[s] = i;
        }
        Permutation {
            images: inv,
            length: self.length,
        }
    }

    /// Whether the permutation maps `[k]` onto itself.
    pub fn stabilizes_prefix(&self, k: usize) -> bool {
        self.images[..k].iter().all(|&x| x < k)
    }

    /// All permutations of `[n]` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Permutations {
        Permutations {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t: IntTuple = s.parse()?;
        let v = t
            .entries()
            .iter()
            .map(|&x| usize::try_from(x).map_err(|_| Error::Parse(format!("bad image {x}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_one_line(&v)
    }
}

/// Lexicographic enumeration of `S_n`; restartable via [`Permutation::all`].
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let n = succ.len();
        // standard next-permutation step
        let mut i = n.saturating_sub(1);
        while i > 0 && succ[i - 1] >= succ[i] {
            i -= 1;
        }
        if i > 0 {
            let mut j = n - 1;
            while succ[j] <= succ[i - 1] {
                j -= 1;
            }
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        let length = inversions(&cur);
        Some(Permutation {
            images: cur,
            length,
        })
    }
}

/// `α ⊕ β`: acts as `α` on `[k]` and as `β` shifted by `k` on the rest.
pub fn oplus(alpha: &Permutation, beta: &Permutation) -> Permutation {
    let k = alpha.degree();
    let images = alpha
        .images
        .iter()
        .copied()
        .chain(beta.images.iter().map(|&b| b + k))
        .collect();
    Permutation::from_images(images).expect("direct sum of permutations")
}

/// All `β ∈ N^n` with `|β| = p`, in decreasing lexicographic order.
///
/// Empty when `p < 0`. For `n = 0` yields the empty tuple iff `p = 0`.
pub fn weak_compositions(n: usize, p: i64) -> WeakCompositions {
    let next = if p < 0 || (n == 0 && p != 0) {
        None
    } else {
        let mut v = vec![0; n];
        if n > 0 {
            v[0] = p;
        }
        Some(v)
    };
    WeakCompositions { next }
}

pub struct WeakCompositions {
    next: Option<Vec<i64>>,
}

impl Iterator for WeakCompositions {
    type Item = IntTuple;

    fn next(&mut self) -> Option<IntTuple> {
        let cur = self.next.take()?;
        let n = cur.len();
        if n >= 2 {
            // rightmost nonzero entry strictly before the last slot
            if let Some(i) = (0..n - 1).rev().find(|&i| cur[i] > 0) {
                let mut succ = cur.clone();
                let tail = succ[n - 1];
                succ[i] -= 1;
                succ[n - 1] = 0;
                succ[i + 1] = tail + 1;
                self.next = Some(succ);
            }
        }
        Some(IntTuple(cur))
    }
}

/// All `β ∈ {0,1}^n` with `|β| = p`, in decreasing lexicographic order.
///
/// Empty when `p < 0` or `p > n`.
pub fn binary_compositions(n: usize, p: i64) -> BinaryCompositions {
    let next = if p < 0 || p as usize > n {
        None
    } else {
        Some((0..p as usize).collect())
    };
    BinaryCompositions { n, next }
}

pub struct BinaryCompositions {
    n: usize,
    // positions of the ones
    next: Option<Vec<usize>>,
}

impl Iterator for BinaryCompositions {
    type Item = IntTuple;

    fn next(&mut self) -> Option<IntTuple> {
        let cur = self.next.take()?;
        let n = self.n;
        let k = cur.len();
        let mut succ = cur.clone();
        if let Some(i) = (0..k).rev().find(|&i| succ[i] < n - k + i) {
            succ[i] += 1;
            for j in i + 1..k {
                succ[j] = succ[j - 1] + 1;
            }
            self.next = Some(succ);
        }
        let mut v = vec![0; n];
        for &c in &cur {
            v[c] = 1;
        }
        Some(IntTuple(v))
    }
}

/// All tuples in `{lo, ..., hi}^n`, in increasing lexicographic order.
pub fn box_tuples(n: usize, lo: i64, hi: i64) -> impl Iterator<Item = IntTuple> {
    let mut next = (lo <= hi || n == 0).then(|| vec![lo; n]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (0..n).rev().find(|&i| succ[i] < hi) {
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|x| *x = lo);
            next = Some(succ);
        }
        Some(IntTuple(cur))
    })
}

/// `(1, 2, ..., n-1, n+p)`.
pub fn eta_tuple(n: usize, p: i64) -> Result<IntTuple> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            allowed: "n >= 1".into(),
        });
    }
    if p < 0 {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            allowed: "p >= 0".into(),
        });
    }
    let mut v: Vec<i64> = (1..=n as i64).collect();
    v[n - 1] += p;
    Ok(IntTuple(v))
}

/// `(1, ..., n-p, n-p+2, ..., n+1)`.
pub fn xi_tuple(n: usize, p: i64) -> Result<IntTuple> {
    if p < 0 || p as usize > n {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            allowed: format!("0 <= p <= {n}"),
        });
    }
    let q = n - p as usize;
    Ok((1..=n as i64)
        .map(|i| if i as usize > q { i + 1 } else { i })
        .collect())
}

/// Determinant of a small square integer matrix by the permutation expansion.
pub fn int_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    Permutation::all(n)
        .map(|s| {
            let mut prod = s.sign();
            for (i, row) in m.iter().enumerate() {
                prod *= row[s.apply(i)];
                if prod == 0 {
                    break;
                }
            }
            prod
        })
        .sum()
}

/// `[u ≥ k]`.
pub fn iverson_geq(u: i64, k: i64) -> i64 {
    (u >= k) as i64
}

/// `u ⊵ v`, i.e. `u - v ∈ {0, 1}`.
pub fn covers(u: i64, v: i64) -> bool {
    u - v == 0 || u - v == 1
}

/// The matrix `([ν_i ≥ j])_{i,j ∈ [n]}`.
pub fn iverson_geq_matrix(nu: &IntTuple) -> Vec<Vec<i64>> {
    let n = nu.len() as i64;
    nu.entries()
        .iter()
        .map(|&x| (1..=n).map(|j| iverson_geq(x, j)).collect())
        .collect()
}

/// The matrix `([ν_i ⊵ j])_{i,j ∈ [n]}`.
pub fn cover_matrix(nu: &IntTuple) -> Vec<Vec<i64>> {
    let n = nu.len() as i64;
    nu.entries()
        .iter()
        .map(|&x| (1..=n).map(|j| covers(x, j) as i64).collect())
        .collect()
}

pub fn iverson_geq_det(nu: &IntTuple) -> i64 {
    int_det(&iverson_geq_matrix(nu))
}

pub fn cover_det(nu: &IntTuple) -> i64 {
    int_det(&cover_matrix(nu))
}

/// `Σ (-1)^σ` over all `σ ∈ S_n` with `ν = target ∘ σ`.
pub fn signed_match_sum(nu: &IntTuple, target: &IntTuple) -> Result<i64> {
    if nu.len() != target.len() {
        return Err(Error::LengthMismatch {
            expected: target.len(),
            found: nu.len(),
        });
    }
    let mut total = 0;
    for s in Permutation::all(nu.len()) {
        if target.act(&s)? == *nu {
            total += s.sign();
        }
    }
    Ok(total)
}
