//! Noncommutative symmetric functions as the free algebra on `H[1], H[2], ...`,
//! immaculate functions and their right-Pieri rule.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::algebra::{Family, Generator, Polynomial, RingKind};
use crate::permcomb::{weak_compositions, IntTuple, Permutation};
use crate::rowdet::{rowdet, SquareMatrix};

/// An element of the free algebra on `H[k]`, `k >= 1`.
///
/// Words never contain `H[k]` with `k <= 0`: `H[0]` is elided and `H[k]` for
/// `k < 0` annihilates its word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSymElement(Polynomial);

impl NSymElement {
    pub fn zero() -> Self {
        NSymElement(Polynomial::zero(RingKind::Free))
    }

    pub fn one() -> Self {
        NSymElement(Polynomial::one(RingKind::Free))
    }

    /// `H[k]` with the reduction applied.
    pub fn complete(k: i64) -> Self {
        Self::word(&[k])
    }

    /// `H[a_1] H[a_2] ⋯ H[a_m]` with the reduction applied.
    pub fn word(indices: &[i64]) -> Self {
        if indices.iter().any(|&k| k < 0) {
            return Self::zero();
        }
        let mut p = Polynomial::one(RingKind::Free);
        for &k in indices.iter().filter(|&&k| k > 0) {
            p = &p * &Polynomial::generator(RingKind::Free, Generator::nsym(k));
        }
        NSymElement(p)
    }

    /// Applies the reduction to an arbitrary free polynomial in `H[k]`.
    pub fn reduce(poly: &Polynomial) -> Self {
        let image = poly
            .substitute(RingKind::Free, |g| match (g.family(), g.k()) {
                (Family::Nsym, k) if k < 0 => Some(Polynomial::zero(RingKind::Free)),
                (Family::Nsym, 0) => Some(Polynomial::one(RingKind::Free)),
                _ => None,
            })
            .expect("free source and target");
        NSymElement(image)
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn term_count(&self) -> usize {
        self.0.term_count()
    }
}

impl fmt::Display for NSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for &NSymElement {
    type Output = NSymElement;

    fn add(self, rhs: &NSymElement) -> NSymElement {
        NSymElement(&self.0 + &rhs.0)
    }
}

impl Sub for &NSymElement {
    type Output = NSymElement;

    fn sub(self, rhs: &NSymElement) -> NSymElement {
        NSymElement(&self.0 - &rhs.0)
    }
}

impl Mul for &NSymElement {
    type Output = NSymElement;

    fn mul(self, rhs: &NSymElement) -> NSymElement {
        NSymElement(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for NSymElement {
    fn sum<I: Iterator<Item = NSymElement>>(iter: I) -> Self {
        let mut acc = Polynomial::zero(RingKind::Free);
        for x in iter {
            acc += &x.0;
        }
        NSymElement(acc)
    }
}

/// `Σ_{σ ∈ S_m} (-1)^σ H[α_1+σ(1)-1] H[α_2+σ(2)-2] ⋯ H[α_m+σ(m)-m]`.
pub fn immaculate(alpha: &IntTuple) -> NSymElement {
    let m = alpha.len();
    let mut acc = Polynomial::zero(RingKind::Free);
    for sigma in Permutation::all(m) {
        let idx: Vec<i64> = (0..m)
            .map(|i| alpha[i] + sigma.apply(i) as i64 - i as i64)
            .collect();
        let w = NSymElement::word(&idx);
        if !w.is_zero() {
            acc += &w.0.scale(&sigma.sign().into());
        }
    }
    NSymElement(acc)
}

/// The same element computed as the row-determinant of the unreduced matrix
/// `(H[α_i + j - i])` followed by the reduction.
pub fn immaculate_via_rowdet(alpha: &IntTuple) -> NSymElement {
    let m = alpha.len();
    let mat = SquareMatrix::from_fn(m, RingKind::Free, |i, j| {
        Polynomial::generator(
            RingKind::Free,
            Generator::nsym(alpha[i] + j as i64 - i as i64),
        )
    })
    .expect("free entries");
    NSymElement::reduce(&rowdet(&mat))
}

/// All `β ∈ Z^{n+1}` with `β_i >= α_i` for `i <= n`, `β_{n+1} >= 0` and
/// `|β| = |α| + s`, in decreasing lexicographic order.
pub fn right_pieri_index_set(alpha: &IntTuple, s: i64) -> Vec<IntTuple> {
    let base = alpha.pushed(0);
    weak_compositions(base.len(), s)
        .map(|d| &base + &d)
        .collect()
}

/// `(𝔖_α · H[s], Σ_β 𝔖_β)`.
pub fn right_pieri_sides(alpha: &IntTuple, s: i64) -> (NSymElement, NSymElement) {
    let lhs = &immaculate(alpha) * &NSymElement::complete(s);
    let rhs = right_pieri_index_set(alpha, s).iter().map(immaculate).sum();
    (lhs, rhs)
}

pub fn verify_right_pieri(alpha: &IntTuple, s: i64) -> bool {
    let (l, r) = right_pieri_sides(alpha, s);
    l == r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(idx: &[i64]) -> NSymElement {
        NSymElement::word(idx)
    }

    #[test]
    fn word_reduction() {
        assert_eq!(hw(&[2, 0, 1]), hw(&[2, 1]));
        assert!(hw(&[2, -1]).is_zero());
        assert_eq!(hw(&[0]), NSymElement::one());
        assert_ne!(hw(&[2, 1]), hw(&[1, 2]));
    }

    #[test]
    fn immaculate_examples() {
        assert_eq!(immaculate(&IntTuple::from([3])), hw(&[3]));
        assert!(immaculate(&IntTuple::from([-1])).is_zero());
        assert_eq!(immaculate(&IntTuple::from([0])), NSymElement::one());
        assert_eq!(
            immaculate(&IntTuple::from([1, 1])),
            &hw(&[1, 1]) - &hw(&[2])
        );
        assert_eq!(immaculate(&IntTuple::from([2, 0])), hw(&[2]));
        assert_eq!(immaculate(&IntTuple::default()), NSymElement::one());
    }

    #[test]
    fn two_paths_agree() {
        for alpha in [vec![2, 1], vec![0, 3, -1], vec![1, 1, 1], vec![-1, 2, 0]] {
            let a = IntTuple::new(alpha);
            assert_eq!(immaculate(&a), immaculate_via_rowdet(&a), "{a}");
        }
    }

    #[test]
    fn index_set() {
        let got = right_pieri_index_set(&IntTuple::from([1]), 1);
        assert_eq!(got, vec![IntTuple::from([2, 0]), IntTuple::from([1, 1])]);
        assert!(right_pieri_index_set(&IntTuple::from([1]), -1).is_empty());
        assert_eq!(right_pieri_index_set(&IntTuple::from([0, 0]), 3).len(), 10);
    }

    #[test]
    fn right_pieri_examples() {
        for s in 0..4 {
            assert!(verify_right_pieri(&IntTuple::default(), s));
        }
        let (l, r) = right_pieri_sides(&IntTuple::from([1]), 1);
        assert_eq!(l, hw(&[1, 1]));
        assert_eq!(r, &hw(&[2]) + &(&hw(&[1, 1]) - &hw(&[2])));
        assert!(verify_right_pieri(&IntTuple::from([2, 1]), 2));
    }
}
