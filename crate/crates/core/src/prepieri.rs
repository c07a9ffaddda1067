//! The two pre-Pieri rules and their specializations, as exact identities in
//! the free ring on the generators `h[k,i]`.
//!
//! Both rules compare a sum of shifted row-determinants
//! `t_α = rowdet((h[α_i + j, i])_{i,j})` over a set of shifts `β` with a single
//! row-determinant whose column offsets are `η = (1, ..., n-1, n+p)` (first
//! rule, `β ∈ N^n`) or `ξ = (1, ..., n-p, n-p+2, ..., n+1)` (second rule,
//! `β ∈ {0,1}^n`).
//!
//! Specializations that force `h[k,i] = 0` for negative `k` in some columns are
//! applied as a substitution after the symbolic expansion, so every corollary
//! is literally an image of the corresponding theorem.

use std::collections::BTreeSet;

use crate::algebra::{Family, Generator, Polynomial, RingKind};
use crate::error::{Error, Result};
use crate::permcomb::{binary_compositions, eta_tuple, weak_compositions, xi_tuple, IntTuple};
use crate::rowdet::{rowdet, SquareMatrix};

/// Parameters shared by all identities of this module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriContext {
    pub n: usize,
    pub p: i64,
    pub alpha: IntTuple,
    /// Columns `i` in which `h[k,i]` is sent to zero for every `k < 0`.
    pub negative_kill: BTreeSet<usize>,
}

impl PieriContext {
    pub fn new(alpha: IntTuple, p: i64) -> Self {
        PieriContext {
            n: alpha.len(),
            p,
            alpha,
            negative_kill: BTreeSet::new(),
        }
    }

    pub fn with_negative_kill(mut self, columns: impl IntoIterator<Item = usize>) -> Self {
        self.negative_kill.extend(columns);
        self
    }

    fn check(&self) -> Result<()> {
        if self.alpha.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: self.alpha.len(),
            });
        }
        Ok(())
    }

    fn kill(&self, poly: &Polynomial) -> Polynomial {
        kill_negative(poly, &self.negative_kill)
    }
}

/// Which of the two equivalent statements a corollary check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryForm {
    /// The shifted form stated in terms of `t_α`; the context tuple is `α`.
    Shifted,
    /// The Schur-like reindexing `α_i = μ_i - i`; the context tuple is `μ`.
    Schur,
}

/// The free generator `h[k,i]` as a polynomial.
pub fn h(k: i64, i: usize) -> Polynomial {
    Polynomial::generator(RingKind::Free, Generator::h(k, i))
}

/// Sends `h[k,i]` to zero for `k < 0` and `i ∈ columns`.
pub fn kill_negative(poly: &Polynomial, columns: &BTreeSet<usize>) -> Polynomial {
    if columns.is_empty() {
        return poly.clone();
    }
    let kind = poly.kind();
    poly.substitute(kind, |g| {
        (g.family() == Family::H2 && g.k() < 0 && columns.contains(&(g.second() as usize)))
            .then(|| Polynomial::zero(kind))
    })
    .expect("kind-preserving substitution")
}

/// `rowdet((h[α_i + offsets_j, row_base + i]))` over the rows of `alpha`.
fn offset_rowdet(alpha: &[i64], offsets: &[i64], row_base: usize) -> Polynomial {
    let n = alpha.len();
    debug_assert_eq!(offsets.len(), n);
    let m = SquareMatrix::from_fn(n, RingKind::Free, |i, j| {
        h(alpha[i] + offsets[j], row_base + i + 1)
    })
    .expect("free entries");
    rowdet(&m)
}

/// `t_α = rowdet((h[α_i + j, i])_{i,j ∈ [n]})`, without any specialization.
pub fn t(alpha: &IntTuple) -> Polynomial {
    let offsets: Vec<i64> = (1..=alpha.len() as i64).collect();
    offset_rowdet(alpha.entries(), &offsets, 0)
}

/// `t_α` for the context, with its negative-kill specialization applied.
pub fn t_alpha(ctx: &PieriContext) -> Result<Polynomial> {
    ctx.check()?;
    Ok(ctx.kill(&t(&ctx.alpha)))
}

/// `s_λ = rowdet((h[λ_i + j - i, i])_{i,j ∈ [m]})` for any integer tuple.
pub fn s(lambda: &IntTuple) -> Polynomial {
    let m = lambda.len();
    let shifted: Vec<i64> = lambda
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - i as i64 - 1)
        .collect();
    let offsets: Vec<i64> = (1..=m as i64).collect();
    offset_rowdet(&shifted, &offsets, 0)
}

/// `e_{p,q} = rowdet((h[1 + j - i, q + i])_{i,j ∈ [p]})`.
pub fn e_pq(p: usize, q: usize) -> Polynomial {
    let shifted: Vec<i64> = (1..=p as i64).map(|i| -i).collect();
    let offsets: Vec<i64> = (1..=p as i64).map(|j| j + 1).collect();
    offset_rowdet(&shifted, &offsets, q)
}

fn sum_t<I: Iterator<Item = IntTuple>>(alpha: &IntTuple, betas: I) -> Polynomial {
    let mut total = Polynomial::zero(RingKind::Free);
    for beta in betas {
        total += &t(&(alpha + &beta));
    }
    total
}

fn sum_s<I: Iterator<Item = IntTuple>>(mu: &IntTuple, betas: I) -> Polynomial {
    let mut total = Polynomial::zero(RingKind::Free);
    for beta in betas {
        total += &s(&(mu + &beta));
    }
    total
}

fn require_p_in(p: i64, n: usize) -> Result<usize> {
    if p < 0 || p as usize > n {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            allowed: format!("0 <= p <= {n}"),
        });
    }
    Ok(p as usize)
}

fn require_kill(ctx: &PieriContext, columns: impl IntoIterator<Item = usize>) -> Result<()> {
    for c in columns {
        if !ctx.negative_kill.contains(&c) {
            return Err(Error::MissingKill { column: c });
        }
    }
    Ok(())
}

/// Both sides of the first rule:
/// `Σ_{β ∈ N^n, |β| = p} t_{α+β}` and `rowdet((h[α_i + η_j, i]))`.
pub fn first_rule_sides(ctx: &PieriContext) -> Result<(Polynomial, Polynomial)> {
    ctx.check()?;
    let eta = eta_tuple(ctx.n, ctx.p)?;
    let lhs = sum_t(&ctx.alpha, weak_compositions(ctx.n, ctx.p));
    let rhs = offset_rowdet(ctx.alpha.entries(), eta.entries(), 0);
    Ok((ctx.kill(&lhs), ctx.kill(&rhs)))
}

/// Both sides of the second rule:
/// `Σ_{β ∈ {0,1}^n, |β| = p} t_{α+β}` and `rowdet((h[α_i + ξ_j, i]))`.
pub fn second_rule_sides(ctx: &PieriContext) -> Result<(Polynomial, Polynomial)> {
    ctx.check()?;
    let xi = xi_tuple(ctx.n, ctx.p)?;
    let lhs = sum_t(&ctx.alpha, binary_compositions(ctx.n, ctx.p));
    let rhs = offset_rowdet(ctx.alpha.entries(), xi.entries(), 0);
    Ok((ctx.kill(&lhs), ctx.kill(&rhs)))
}

pub fn verify_first(ctx: &PieriContext) -> Result<bool> {
    let (l, r) = first_rule_sides(ctx)?;
    l.equals(&r)
}

pub fn verify_second(ctx: &PieriContext) -> Result<bool> {
    let (l, r) = second_rule_sides(ctx)?;
    l.equals(&r)
}

/// Sides of the complete-function corollary, sum side first.
///
/// * `Shifted` (needs `α_n ≤ -n`):
///   `Σ_{β ∈ N^n, |β|=p} t_{α+β} = rowdet((h[α_i+j, i])_{[n-1]}) · h[α_n+n+p, n]`.
/// * `Schur` (needs `μ_n = 0`):
///   `Σ_{β ∈ N^n, |β|=p} s_{μ+β} = s_{μ̄} · h[p, n]`.
///
/// Column `n` must be in the negative-kill set. Any integer `p` is allowed;
/// for `p < 0` both sides vanish.
pub fn cor_h_sides(ctx: &PieriContext, form: CorollaryForm) -> Result<(Polynomial, Polynomial)> {
    ctx.check()?;
    let n = ctx.n;
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            allowed: "n >= 1".into(),
        });
    }
    require_kill(ctx, [n])?;
    let tuple = &ctx.alpha;
    let last = tuple[n - 1];
    let (lhs, rhs) = match form {
        CorollaryForm::Shifted => {
            if last > -(n as i64) {
                return Err(Error::Hypothesis(format!(
                    "alpha_n = {last} must be <= -{n}"
                )));
            }
            let lhs = sum_t(tuple, weak_compositions(n, ctx.p));
            let rhs = &t(&tuple.prefix(n - 1)) * &h(last + n as i64 + ctx.p, n);
            (lhs, rhs)
        }
        CorollaryForm::Schur => {
            if last != 0 {
                return Err(Error::Hypothesis(format!("mu_n = {last} must be 0")));
            }
            let lhs = sum_s(tuple, weak_compositions(n, ctx.p));
            let rhs = &s(&tuple.prefix(n - 1)) * &h(ctx.p, n);
            (lhs, rhs)
        }
    };
    Ok((ctx.kill(&lhs), ctx.kill(&rhs)))
}

/// Sides of the elementary-function corollary, sum side first; `q = n - p`.
///
/// * `Shifted` (needs `α_i < -q` for `i > q`):
///   `Σ_{β ∈ {0,1}^n, |β|=p} t_{α+β}
///    = rowdet((h[α_i+j, i])_{[q]}) · rowdet((h[α_{q+i}+q+j+1, q+i])_{[p]})`.
/// * `Schur` (needs `μ_i = 0` for `i > q`):
///   `Σ_{β ∈ {0,1}^n, |β|=p} s_{μ+β} = s_{μ̄} · e_{p,q}`.
///
/// Columns `q+1, ..., n` must be in the negative-kill set.
pub fn cor_e_sides(ctx: &PieriContext, form: CorollaryForm) -> Result<(Polynomial, Polynomial)> {
    ctx.check()?;
    let n = ctx.n;
    let p = require_p_in(ctx.p, n)?;
    let q = n - p;
    require_kill(ctx, q + 1..=n)?;
    let tuple = &ctx.alpha;
    let (lhs, rhs) = match form {
        CorollaryForm::Shifted => {
            if let Some(i) = (q..n).find(|&i| tuple[i] >= -(q as i64)) {
                return Err(Error::Hypothesis(format!(
                    "alpha_{} = {} must be < -{q}",
                    i + 1,
                    tuple[i]
                )));
            }
            let lhs = sum_t(tuple, binary_compositions(n, ctx.p));
            let top = t(&tuple.prefix(q));
            let offsets: Vec<i64> = (1..=p as i64).map(|j| q as i64 + j + 1).collect();
            let bottom = offset_rowdet(&tuple.entries()[q..], &offsets, q);
            (lhs, &top * &bottom)
        }
        CorollaryForm::Schur => {
            if let Some(i) = (q..n).find(|&i| tuple[i] != 0) {
                return Err(Error::Hypothesis(format!(
                    "mu_{} = {} must be 0",
                    i + 1,
                    tuple[i]
                )));
            }
            let lhs = sum_s(tuple, binary_compositions(n, ctx.p));
            (lhs, &s(&tuple.prefix(q)) * &e_pq(p, q))
        }
    };
    Ok((ctx.kill(&lhs), ctx.kill(&rhs)))
}

pub fn verify_cor_h(ctx: &PieriContext, form: CorollaryForm) -> Result<bool> {
    let (l, r) = cor_h_sides(ctx, form)?;
    l.equals(&r)
}

pub fn verify_cor_e(ctx: &PieriContext, form: CorollaryForm) -> Result<bool> {
    let (l, r) = cor_e_sides(ctx, form)?;
    l.equals(&r)
}

/// The commutative specialization `h[k,i] ↦ h[k]` with `h[0] = 1` and
/// `h[k] = 0` for `k < 0`, sending the free ring onto the ring of symmetric
/// functions in the complete generators.
pub fn to_symmetric_functions(poly: &Polynomial) -> Polynomial {
    poly.substitute(RingKind::Commutative, |g| match g.family() {
        Family::H2 => Some(crate::schur::complete(g.k())),
        _ => None,
    })
    .expect("free source")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use num_bigint::BigInt;

    fn ctx<const N: usize>(alpha: [i64; N], p: i64) -> PieriContext {
        PieriContext::new(IntTuple::from(alpha), p)
    }

    #[test]
    fn t_alpha_small_cases() {
        assert_eq!(t_alpha(&ctx([4], 0)).unwrap(), h(5, 1));
        let expected = &(&h(1, 1) * &h(2, 2)) - &(&h(2, 1) * &h(1, 2));
        assert_eq!(t_alpha(&ctx([0, 0], 0)).unwrap(), expected);
        let killed = ctx([0, 0], 0).with_negative_kill([2]);
        assert_eq!(t_alpha(&killed).unwrap(), expected);
    }

    #[test]
    fn first_rule_one_row() {
        for p in 0..5 {
            let (l, r) = first_rule_sides(&ctx([-2], p)).unwrap();
            assert_eq!(l, h(-2 + 1 + p, 1));
            assert_eq!(r, h(-2 + 1 + p, 1));
        }
    }

    #[test]
    fn first_rule_small() {
        assert!(verify_first(&ctx([0, 0], 2)).unwrap());
        assert!(verify_first(&ctx([-2], 3)).unwrap());
        assert!(verify_first(&ctx([1, -3, 2], 2)).unwrap());
        assert!(verify_first(&ctx([2, -1, 0, 3], 3)).unwrap());
    }

    #[test]
    fn first_rule_rejects_negative_p() {
        assert!(first_rule_sides(&ctx([0, 0], -1)).is_err());
        assert!(first_rule_sides(&ctx([], 1)).is_err());
    }

    #[test]
    fn second_rule_edges() {
        let a = IntTuple::from([2, -1, 0]);
        let (l, r) = second_rule_sides(&PieriContext::new(a.clone(), 0)).unwrap();
        assert_eq!(l, t(&a));
        assert_eq!(r, t(&a));
        let (l, r) = second_rule_sides(&PieriContext::new(a.clone(), 3)).unwrap();
        let shifted = &a + &IntTuple::from([1, 1, 1]);
        assert_eq!(l, t(&shifted));
        assert_eq!(r, t(&shifted));
        assert!(second_rule_sides(&PieriContext::new(a, 4)).is_err());
        assert!(verify_second(&ctx([], 0)).unwrap());
    }

    #[test]
    fn second_rule_small() {
        assert!(verify_second(&ctx([0, 0, 0], 2)).unwrap());
        assert!(verify_second(&ctx([3, -2, 1, 0], 2)).unwrap());
    }

    #[test]
    fn cor_h_two_rows() {
        for a1 in -3..=3 {
            for p in 0..=3 {
                let c = ctx([a1, -2], p).with_negative_kill([2]);
                assert!(
                    verify_cor_h(&c, CorollaryForm::Shifted).unwrap(),
                    "a1={a1} p={p}"
                );
            }
        }
    }

    #[test]
    fn cor_h_negative_p_is_zero() {
        let c = ctx([1, -3], -2).with_negative_kill([2]);
        let (l, r) = cor_h_sides(&c, CorollaryForm::Shifted).unwrap();
        assert!(l.is_zero() && r.is_zero());
        let c = ctx([2, 0], -1).with_negative_kill([2]);
        let (l, r) = cor_h_sides(&c, CorollaryForm::Schur).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn cor_h_empty_mu_bar() {
        // s_() = 1, so the product side is h[p,1] itself
        assert_eq!(s(&IntTuple::default()), Polynomial::one(RingKind::Free));
        for p in 0..=3 {
            let c = ctx([0], p).with_negative_kill([1]);
            let (l, r) = cor_h_sides(&c, CorollaryForm::Schur).unwrap();
            assert_eq!(r, h(p, 1));
            assert_eq!(l, r);
        }
        // h[0,1] is not 1 in the free ring
        for p in 0..=3 {
            let c = ctx([0, 0], p).with_negative_kill([2]);
            let (l, r) = cor_h_sides(&c, CorollaryForm::Schur).unwrap();
            assert_eq!(r, &h(0, 1) * &h(p, 2));
            assert_eq!(l, r);
        }
    }

    #[test]
    fn cor_h_preconditions() {
        let missing = ctx([0, -2], 1);
        assert_eq!(
            cor_h_sides(&missing, CorollaryForm::Shifted).unwrap_err(),
            Error::MissingKill { column: 2 }
        );
        let big = ctx([0, -1], 1).with_negative_kill([2]);
        assert!(matches!(
            cor_h_sides(&big, CorollaryForm::Shifted),
            Err(Error::Hypothesis(_))
        ));
        let nonzero = ctx([1, 1], 1).with_negative_kill([2]);
        assert!(matches!(
            cor_h_sides(&nonzero, CorollaryForm::Schur),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn cor_e_small() {
        for m in -1..=3 {
            let c = ctx([m, 0], 1).with_negative_kill([2]);
            assert!(verify_cor_e(&c, CorollaryForm::Schur).unwrap(), "m={m}");
            let c = ctx([m, 0, 0], 2).with_negative_kill([2, 3]);
            assert!(verify_cor_e(&c, CorollaryForm::Schur).unwrap(), "m={m}");
        }
        let c = ctx([2, -2, -3], 2).with_negative_kill([2, 3]);
        assert!(verify_cor_e(&c, CorollaryForm::Shifted).unwrap());
    }

    #[test]
    fn cor_e_p_zero() {
        assert_eq!(e_pq(0, 3), Polynomial::one(RingKind::Free));
        let mu = IntTuple::from([2, 1]);
        let c = PieriContext::new(mu.clone(), 0);
        let (l, r) = cor_e_sides(&c, CorollaryForm::Schur).unwrap();
        assert_eq!(l, s(&mu));
        assert_eq!(r, s(&mu));
    }

    #[test]
    fn cor_e_preconditions() {
        let c = ctx([1, 0, 0], 2).with_negative_kill([3]);
        assert_eq!(
            cor_e_sides(&c, CorollaryForm::Schur).unwrap_err(),
            Error::MissingKill { column: 2 }
        );
        let c = ctx([1, 1, 0], 2).with_negative_kill([2, 3]);
        assert!(matches!(
            cor_e_sides(&c, CorollaryForm::Schur),
            Err(Error::Hypothesis(_))
        ));
        let c = ctx([1, -1, -3], 2).with_negative_kill([2, 3]);
        assert!(matches!(
            cor_e_sides(&c, CorollaryForm::Shifted),
            Err(Error::Hypothesis(_))
        ));
        let c = ctx([1, 0], 3).with_negative_kill([1, 2]);
        assert!(matches!(
            cor_e_sides(&c, CorollaryForm::Schur),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn e_pq_shape() {
        // e_{1,q} = h[1, q+1]
        assert_eq!(e_pq(1, 2), h(1, 3));
        // e_{2,0} = h[1,1]h[1,2] - h[2,1]h[0,2]
        let expected = &(&h(1, 1) * &h(1, 2)) - &(&h(2, 1) * &h(0, 2));
        assert_eq!(e_pq(2, 0), expected);
    }

    #[test]
    fn symmetric_specialization_of_t() {
        // s_(1,1) -> h1 h1 - h2 h0 = h1^2 - h2
        let img = to_symmetric_functions(&s(&IntTuple::from([1, 1])));
        let h1sq = Monomial::Exponent(vec![(Generator::lam(1), 2)]);
        assert_eq!(img.coefficient(&h1sq), BigInt::from(1));
        assert_eq!(img.term_count(), 2);
    }
}
