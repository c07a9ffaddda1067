//! Multilinear elements of the free algebra on `X[k,i]`, the right action of
//! `S_n` on them, and the decomposition of antisymmetric elements into
//! row-determinants `rowdet((X[γ_j, i]))` with `γ` strictly increasing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{Family, Generator, Monomial, Polynomial, RingKind};
use crate::error::{Error, Result};
use crate::permcomb::{IntTuple, Permutation};
use crate::prepieri;
use crate::rowdet::{rowdet, SquareMatrix};

/// The word `X[p_1,1] X[p_2,2] ⋯ X[p_n,n]`.
pub fn word(p: &IntTuple) -> Monomial {
    Monomial::Word(
        p.entries()
            .iter()
            .enumerate()
            .map(|(i, &k)| Generator::x(k, i + 1))
            .collect(),
    )
}

/// The tuple `p` of a multilinear word, or `None` if the word is not of that form.
fn first_indices(m: &Monomial, n: usize) -> Option<IntTuple> {
    let Monomial::Word(w) = m else { return None };
    if w.len() != n {
        return None;
    }
    w.iter()
        .enumerate()
        .map(|(i, g)| (g.family() == Family::X2 && g.second() == i as i64 + 1).then(|| g.k()))
        .collect::<Option<Vec<_>>>()
        .map(IntTuple::new)
}

/// A free polynomial supported on multilinear words of length `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearElement {
    n: usize,
    // first-index tuple -> coefficient
    coeffs: BTreeMap<IntTuple, BigInt>,
}

impl MultilinearElement {
    pub fn zero(n: usize) -> Self {
        MultilinearElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn new(n: usize, poly: &Polynomial) -> Result<Self> {
        if poly.kind() != RingKind::Free {
            return Err(Error::NotMultilinear("commutative polynomial".into()));
        }
        let mut coeffs = BTreeMap::new();
        for (m, c) in poly.terms() {
            let p = first_indices(m, n).ok_or_else(|| Error::NotMultilinear(m.to_string()))?;
            coeffs.insert(p, c.clone());
        }
        Ok(MultilinearElement { n, coeffs })
    }

    pub fn from_coefficients(
        n: usize,
        items: impl IntoIterator<Item = (IntTuple, BigInt)>,
    ) -> Result<Self> {
        let mut out = MultilinearElement::zero(n);
        for (p, c) in items {
            if p.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: p.len(),
                });
            }
            out.add_term(p, &c);
        }
        Ok(out)
    }

    fn add_term(&mut self, p: IntTuple, c: &BigInt) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(p) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c.clone());
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficient(&self, p: &IntTuple) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&IntTuple, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            RingKind::Free,
            self.coeffs.iter().map(|(p, c)| (word(p), c.clone())),
        )
        .expect("free words")
    }

    pub fn add(&self, other: &MultilinearElement) -> Result<MultilinearElement> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> MultilinearElement {
        let mut out = MultilinearElement::zero(self.n);
        if !c.is_zero() {
            out.coeffs = self
                .coeffs
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect();
        }
        out
    }
}

impl fmt::Display for MultilinearElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

/// Replaces each word's tuple `p` by `p∘τ = (p_{τ(1)}, ..., p_{τ(n)})`.
pub fn act_multilinear(m: &MultilinearElement, tau: &Permutation) -> Result<MultilinearElement> {
    if tau.degree() != m.n {
        return Err(Error::LengthMismatch {
            expected: m.n,
            found: tau.degree(),
        });
    }
    let mut out = MultilinearElement::zero(m.n);
    for (p, c) in &m.coeffs {
        out.add_term(p.act(tau)?, c);
    }
    Ok(out)
}

fn sign_twisted(m: &MultilinearElement, tau: &Permutation) -> bool {
    let acted = act_multilinear(m, tau).expect("degree checked by caller");
    acted == m.scale(&tau.sign().into())
}

/// Checks `m·τ = (-1)^τ m` on the adjacent transpositions.
pub fn is_antisymmetric(m: &MultilinearElement) -> bool {
    (0..m.n.saturating_sub(1)).all(|i| sign_twisted(m, &Permutation::transposition(m.n, i, i + 1)))
}

/// Checks `m·τ = (-1)^τ m` on every `τ ∈ S_n`.
pub fn is_antisymmetric_full(m: &MultilinearElement) -> bool {
    Permutation::all(m.n).all(|tau| sign_twisted(m, &tau))
}

fn x_rowdet(n: usize, entry: impl Fn(usize, usize) -> i64) -> MultilinearElement {
    let mat = SquareMatrix::from_fn(n, RingKind::Free, |i, j| {
        Polynomial::generator(RingKind::Free, Generator::x(entry(i, j), i + 1))
    })
    .expect("free entries");
    MultilinearElement::new(n, &rowdet(&mat)).expect("row-determinant words are multilinear")
}

/// `T_β = rowdet((X[β_i + j, i]))`.
pub fn t_beta(beta: &IntTuple) -> MultilinearElement {
    x_rowdet(beta.len(), |i, j| beta[i] + j as i64 + 1)
}

/// `rowdet((X[γ_j, i]))`.
pub fn gamma_rowdet(gamma: &IntTuple) -> MultilinearElement {
    x_rowdet(gamma.len(), |_, j| gamma[j])
}

/// `T_B = Σ_{β ∈ B} T_β` for a set `B ⊆ Z^n` closed under the right action.
pub fn t_set(set: &BTreeSet<IntTuple>, n: usize) -> Result<MultilinearElement> {
    if let Some(bad) = set.iter().find(|b| b.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    for beta in set {
        for i in 0..n.saturating_sub(1) {
            let s = Permutation::transposition(n, i, i + 1);
            if !set.contains(&beta.act(&s)?) {
                return Err(Error::NotInvariant {
                    beta: beta.to_string(),
                    sigma: s.to_string(),
                });
            }
        }
    }
    set.iter()
        .try_fold(MultilinearElement::zero(n), |acc, b| acc.add(&t_beta(b)))
}

/// Coefficients `λ_γ` on strictly increasing `γ` with
/// `m = Σ_γ λ_γ rowdet((X[γ_j, i]))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub coefficients: BTreeMap<IntTuple, BigInt>,
}

impl Decomposition {
    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }
}

pub fn decompose(m: &MultilinearElement) -> Result<Decomposition> {
    if !is_antisymmetric(m) {
        return Err(Error::NotAntisymmetric);
    }
    let coefficients = m
        .coeffs
        .iter()
        .filter(|(p, _)| p.is_strictly_increasing())
        .map(|(p, c)| (p.clone(), c.clone()))
        .collect();
    Ok(Decomposition { coefficients })
}

pub fn reconstruct(d: &Decomposition, n: usize) -> Result<MultilinearElement> {
    d.coefficients
        .iter()
        .try_fold(MultilinearElement::zero(n), |acc, (gamma, c)| {
            if gamma.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: gamma.len(),
                });
            }
            acc.add(&gamma_rowdet(gamma).scale(c))
        })
}

/// The substitution `X[k,i] ↦ h[α_i + k, i]` into the free `h`-ring.
pub fn specialize(m: &MultilinearElement, alpha: &IntTuple) -> Result<Polynomial> {
    if alpha.len() != m.n {
        return Err(Error::LengthMismatch {
            expected: m.n,
            found: alpha.len(),
        });
    }
    m.to_polynomial().substitute(RingKind::Free, |g| {
        (g.family() == Family::X2).then(|| {
            let i = g.second() as usize;
            prepieri::h(alpha[i - 1] + g.k(), i)
        })
    })
}

/// Decomposes `m`, reconstructs it, and compares; with `alpha` given, also
/// compares both sides after [`specialize`].
pub fn verify_decomposition(m: &MultilinearElement, alpha: Option<&IntTuple>) -> Result<bool> {
    let d = decompose(m)?;
    let back = reconstruct(&d, m.n)?;
    if back != *m {
        return Ok(false);
    }
    match alpha {
        Some(a) => Ok(specialize(m, a)? == specialize(&back, a)?),
        None => Ok(true),
    }
}

/// `Σ_{β ∈ B} t_{α+β} = Σ_γ λ_γ rowdet((h[α_i + γ_j, i]))` with `λ` read off
/// from the decomposition of `T_B`.
pub fn verify_prelr_claim(set: &BTreeSet<IntTuple>, alpha: &IntTuple) -> Result<bool> {
    let n = alpha.len();
    let d = decompose(&t_set(set, n)?)?;
    let mut lhs = Polynomial::zero(RingKind::Free);
    for beta in set {
        lhs += &prepieri::t(&alpha.try_add(beta)?);
    }
    let mut rhs = Polynomial::zero(RingKind::Free);
    for (gamma, c) in &d.coefficients {
        let mat = SquareMatrix::from_fn(n, RingKind::Free, |i, j| {
            prepieri::h(alpha[i] + gamma[j], i + 1)
        })?;
        rhs += &rowdet(&mat).scale(c);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcomb::{binary_compositions, weak_compositions};

    fn tuple(v: &[i64]) -> IntTuple {
        IntTuple::new(v.to_vec())
    }

    fn single(p: &[i64]) -> MultilinearElement {
        MultilinearElement::from_coefficients(p.len(), [(tuple(p), BigInt::from(1))]).unwrap()
    }

    #[test]
    fn act_on_single_word() {
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(
            act_multilinear(&single(&[3, 5]), &swap).unwrap(),
            single(&[5, 3])
        );
        let id = Permutation::identity(2);
        assert_eq!(
            act_multilinear(&single(&[3, 5]), &id).unwrap(),
            single(&[3, 5])
        );
    }

    #[test]
    fn right_action_composes() {
        let m = single(&[1, 4, 9]);
        for sigma in Permutation::all(3) {
            for tau in Permutation::all(3) {
                let twice = act_multilinear(&act_multilinear(&m, &sigma).unwrap(), &tau).unwrap();
                assert_eq!(twice, act_multilinear(&m, &sigma.compose(&tau)).unwrap());
            }
        }
    }

    #[test]
    fn antisymmetry_examples() {
        let g = gamma_rowdet(&tuple(&[1, 3]));
        assert!(is_antisymmetric(&g) && is_antisymmetric_full(&g));
        assert!(!is_antisymmetric(&single(&[1, 1])));
    }

    #[test]
    fn rejects_non_multilinear() {
        let p = &Polynomial::generator(RingKind::Free, Generator::x(1, 2))
            * &Polynomial::generator(RingKind::Free, Generator::x(1, 1));
        assert!(matches!(
            MultilinearElement::new(2, &p),
            Err(Error::NotMultilinear(_))
        ));
    }

    #[test]
    fn t_set_examples() {
        let zero: BTreeSet<_> = [IntTuple::zeros(3)].into();
        assert_eq!(t_set(&zero, 3).unwrap(), t_beta(&IntTuple::zeros(3)));
        let bad: BTreeSet<_> = [tuple(&[1, 0])].into();
        assert_eq!(
            t_set(&bad, 2).unwrap_err(),
            Error::NotInvariant {
                beta: "1,0".into(),
                sigma: "2,1".into()
            }
        );
        let weak: BTreeSet<_> = weak_compositions(2, 2).collect();
        let m = t_set(&weak, 2).unwrap();
        assert!(is_antisymmetric(&m));
        let d = decompose(&m).unwrap();
        assert_eq!(d.coefficients, [(tuple(&[1, 4]), BigInt::from(1))].into());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&gamma_rowdet(&tuple(&[1, 3]))).unwrap();
        assert_eq!(d.coefficients, [(tuple(&[1, 3]), BigInt::from(1))].into());
        assert!(decompose(&MultilinearElement::zero(2)).unwrap().is_empty());
        assert_eq!(
            decompose(&single(&[1, 1])).unwrap_err(),
            Error::NotAntisymmetric
        );
    }

    #[test]
    fn binary_set_decomposes_to_xi() {
        let bin: BTreeSet<_> = binary_compositions(3, 2).collect();
        let m = t_set(&bin, 3).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(
            d.coefficients,
            [(tuple(&[1, 3, 4]), BigInt::from(1))].into()
        );
        assert!(verify_decomposition(&m, Some(&tuple(&[2, -1, 0]))).unwrap());
    }

    #[test]
    fn linear_round_trip() {
        let m = gamma_rowdet(&tuple(&[0, 2]))
            .scale(&BigInt::from(5))
            .add(&gamma_rowdet(&tuple(&[1, 4])).scale(&BigInt::from(-1)))
            .unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.coefficients[&tuple(&[0, 2])], BigInt::from(5));
        assert!(verify_decomposition(&m, None).unwrap());
    }

    #[test]
    fn orbit_of_two_zero_zero() {
        let orbit: BTreeSet<_> = Permutation::all(3)
            .map(|s| tuple(&[2, 0, 0]).act(&s).unwrap())
            .collect();
        assert_eq!(orbit.len(), 3);
        let m = t_set(&orbit, 3).unwrap();
        assert!(verify_decomposition(&m, Some(&tuple(&[1, 0, -2]))).unwrap());
        assert!(verify_prelr_claim(&orbit, &tuple(&[1, 0, -2])).unwrap());
    }
}
