//! Row-determinants of square matrices over a (possibly noncommutative)
//! polynomial ring.

use crate::algebra::{Polynomial, RingKind};
use crate::error::{Error, Result};
use crate::permcomb::Permutation;

/// An `n × n` matrix of polynomials of a single ring kind, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    kind: RingKind,
    entries: Vec<Polynomial>,
}

impl SquareMatrix {
    pub fn from_fn<F>(n: usize, kind: RingKind, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> Polynomial,
    {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = f(i, j);
                if e.kind() != kind {
                    return Err(Error::IncompatibleRing(format!(
                        "entry ({}, {}) is {:?}, matrix is {kind:?}",
                        i + 1,
                        j + 1,
                        e.kind()
                    )));
                }
                entries.push(e);
            }
        }
        Ok(SquareMatrix { n, kind, entries })
    }

    pub fn from_rows(kind: RingKind, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Self::from_fn(n, kind, |i, j| rows[i][j].clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Zero-based entry access.
    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.n + j]
    }

    /// The submatrix on the zero-based row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SquareMatrix {
        assert_eq!(rows.len(), cols.len(), "submatrix must be square");
        SquareMatrix {
            n: rows.len(),
            kind: self.kind,
            entries: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
                .map(|(i, j)| self.get(i, j).clone())
                .collect(),
        }
    }

    /// Entrywise image under a substitution into `target`.
    pub fn map_entries<F>(&self, target: RingKind, mut f: F) -> Result<SquareMatrix>
    where
        F: FnMut(&Polynomial) -> Result<Polynomial>,
    {
        let entries = self
            .entries
            .iter()
            .map(&mut f)
            .collect::<Result<Vec<_>>>()?;
        if let Some(e) = entries.iter().find(|e| e.kind() != target) {
            return Err(Error::IncompatibleRing(format!(
                "mapped entry is {:?}",
                e.kind()
            )));
        }
        Ok(SquareMatrix {
            n: self.n,
            kind: target,
            entries,
        })
    }
}

/// `Σ_{σ ∈ S_n} (-1)^σ a_{1,σ(1)} a_{2,σ(2)} ⋯ a_{n,σ(n)}` with factors in
/// increasing row order. The `0 × 0` row-determinant is `1`.
///
/// The permutations are walked depth-first by row, so products of a common
/// prefix are shared and any branch through a zero entry is dropped.
pub fn rowdet(m: &SquareMatrix) -> Polynomial {
    let mut total = Polynomial::zero(m.kind);
    let mut used = vec![false; m.n];
    expand(m, 0, &Polynomial::one(m.kind), 0, &mut used, &mut total);
    total
}

fn expand(
    m: &SquareMatrix,
    row: usize,
    prefix: &Polynomial,
    inversions: usize,
    used: &mut [bool],
    total: &mut Polynomial,
) {
    if row == m.n {
        if inversions.is_multiple_of(2) {
            *total += prefix;
        } else {
            *total += &-prefix;
        }
        return;
    }
    for col in 0..m.n {
        if used[col] {
            continue;
        }
        let a = m.get(row, col);
        if a.is_zero() {
            continue;
        }
        let added = used[col + 1..].iter().filter(|&&u| u).count();
        used[col] = true;
        expand(m, row + 1, &(prefix * a), inversions + added, used, total);
        used[col] = false;
    }
}

/// The literal permutation-sum definition, one full product per permutation.
pub fn rowdet_naive(m: &SquareMatrix) -> Polynomial {
    let kind = m.kind;
    let mut total = Polynomial::zero(kind);
    for sigma in Permutation::all(m.n) {
        let mut prod = Polynomial::constant(kind, sigma.sign());
        for i in 0..m.n {
            prod = &prod * m.get(i, sigma.apply(i));
        }
        total += &prod;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Generator;

    fn x(k: i64, i: usize) -> Polynomial {
        Polynomial::generator(RingKind::Free, Generator::x(k, i))
    }

    #[test]
    fn one_by_one() {
        let m = SquareMatrix::from_fn(1, RingKind::Free, |_, _| x(7, 1)).unwrap();
        assert_eq!(rowdet(&m), x(7, 1));
    }

    #[test]
    fn zero_by_zero_is_one() {
        let m = SquareMatrix::from_fn(0, RingKind::Free, |_, _| unreachable!()).unwrap();
        assert_eq!(rowdet(&m), Polynomial::one(RingKind::Free));
    }

    #[test]
    fn two_by_two_keeps_row_order() {
        let m = SquareMatrix::from_fn(2, RingKind::Free, |i, j| x(j as i64 + 1, i + 1)).unwrap();
        let expected = &(&x(1, 1) * &x(2, 2)) - &(&x(2, 1) * &x(1, 2));
        assert_eq!(rowdet(&m), expected);
    }

    #[test]
    fn last_row_zero_except_corner() {
        // a b c / d e f / 0 0 g
        let zero = Polynomial::zero(RingKind::Free);
        let m = SquareMatrix::from_fn(3, RingKind::Free, |i, j| {
            if i == 2 && j < 2 {
                zero.clone()
            } else {
                x((3 * i + j) as i64, i + 1)
            }
        })
        .unwrap();
        let top = m.submatrix(&[0, 1], &[0, 1]);
        assert_eq!(rowdet(&m), &rowdet(&top) * m.get(2, 2));
    }

    #[test]
    fn depth_first_matches_naive() {
        let zero = Polynomial::zero(RingKind::Free);
        for n in 0..=4 {
            let m = SquareMatrix::from_fn(n, RingKind::Free, |i, j| {
                if (i * 7 + j * 3) % 5 == 0 {
                    zero.clone()
                } else {
                    x((i * n + j) as i64, i + 1)
                }
            })
            .unwrap();
            assert_eq!(rowdet(&m), rowdet_naive(&m), "n={n}");
        }
    }

    #[test]
    fn mixed_entries_rejected() {
        let r = SquareMatrix::from_fn(2, RingKind::Free, |i, _| {
            if i == 0 {
                x(1, 1)
            } else {
                Polynomial::one(RingKind::Commutative)
            }
        });
        assert!(r.is_err());
        assert!(SquareMatrix::from_rows(RingKind::Free, vec![vec![x(1, 1)], vec![]]).is_err());
    }
}
