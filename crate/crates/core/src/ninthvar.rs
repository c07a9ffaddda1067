//! Schur-like determinants over a doubly indexed commutative grid `g[k,j]`
//! (Macdonald's ninth variation) and the Pieri-type rule for them.

use crate::algebra::{Family, Generator, Polynomial, RingKind};
use crate::error::{Error, Result};
use crate::permcomb::{weak_compositions, IntTuple};
use crate::prepieri::{cor_h_sides, CorollaryForm, PieriContext};
use crate::rowdet::{rowdet, SquareMatrix};

/// `g[k,j]`, or zero when `k < 0`. `g[0,j]` is an ordinary generator.
pub fn g(k: i64, j: i64) -> Polynomial {
    if k < 0 {
        Polynomial::zero(RingKind::Commutative)
    } else {
        Polynomial::generator(RingKind::Commutative, Generator::g(k, j))
    }
}

/// `det((g[μ_i + j - i, β_i + j - i]))`.
pub fn s_mu_beta(mu: &IntTuple, beta: &IntTuple) -> Result<Polynomial> {
    if mu.len() != beta.len() {
        return Err(Error::LengthMismatch {
            expected: mu.len(),
            found: beta.len(),
        });
    }
    let m = SquareMatrix::from_fn(mu.len(), RingKind::Commutative, |i, j| {
        let shift = j as i64 - i as i64;
        g(mu[i] + shift, beta[i] + shift)
    })?;
    Ok(rowdet(&m))
}

/// Parameters of the rule `g[p,q] · s_{μ̄,β} = Σ_δ s_{μ+δ, β'+δ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NinthContext {
    ell: usize,
    p: i64,
    q: i64,
    mu: IntTuple,
    beta: IntTuple,
}

impl NinthContext {
    /// `mu` has length `ell + 1` and ends in `0`; `beta` has length `ell`.
    pub fn new(mu: IntTuple, beta: IntTuple, p: i64, q: i64) -> Result<Self> {
        let ell = beta.len();
        if mu.len() != ell + 1 {
            return Err(Error::LengthMismatch {
                expected: ell + 1,
                found: mu.len(),
            });
        }
        if mu[ell] != 0 {
            return Err(Error::Hypothesis(format!(
                "last entry of mu is {}, must be 0",
                mu[ell]
            )));
        }
        Ok(NinthContext {
            ell,
            p,
            q,
            mu,
            beta,
        })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn mu(&self) -> &IntTuple {
        &self.mu
    }

    pub fn beta(&self) -> &IntTuple {
        &self.beta
    }

    /// `β' = (β_1, ..., β_ℓ, q - p)`.
    pub fn beta_extended(&self) -> IntTuple {
        self.beta.pushed(self.q - self.p)
    }
}

/// `(g[p,q] · s_{μ̄,β}, Σ_{δ ∈ N^{ℓ+1}, |δ| = p} s_{μ+δ, β'+δ})`.
pub fn fun_rule_sides(ctx: &NinthContext) -> (Polynomial, Polynomial) {
    let lhs =
        &g(ctx.p, ctx.q) * &s_mu_beta(&ctx.mu.prefix(ctx.ell), &ctx.beta).expect("lengths agree");
    let ext = ctx.beta_extended();
    let mut rhs = Polynomial::zero(RingKind::Commutative);
    for delta in weak_compositions(ctx.ell + 1, ctx.p) {
        rhs += &s_mu_beta(&(&ctx.mu + &delta), &(&ext + &delta)).expect("lengths agree");
    }
    (lhs, rhs)
}

pub fn verify_fun_rule(ctx: &NinthContext) -> bool {
    let (l, r) = fun_rule_sides(ctx);
    l == r
}

/// The same two sides obtained from the free complete-function corollary in
/// its Schur form by the substitution `h[k,i] ↦ g[k, β'_i - μ_i + k]`.
pub fn fun_rule_sides_via_pre_pieri(ctx: &NinthContext) -> Result<(Polynomial, Polynomial)> {
    let n = ctx.ell + 1;
    let pctx = PieriContext::new(ctx.mu.clone(), ctx.p).with_negative_kill([n]);
    let (sum_side, product_side) = cor_h_sides(&pctx, CorollaryForm::Schur)?;
    let ext = ctx.beta_extended();
    let mu = &ctx.mu;
    let image = |poly: &Polynomial| {
        poly.substitute(RingKind::Commutative, |gen| match gen.family() {
            Family::H2 => {
                let i = gen.second() as usize - 1;
                let k = gen.k();
                Some(g(k, ext[i] - mu[i] + k))
            }
            _ => None,
        })
    };
    Ok((image(&product_side)?, image(&sum_side)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(mu: &[i64], beta: &[i64], p: i64, q: i64) -> NinthContext {
        NinthContext::new(
            IntTuple::new(mu.to_vec()),
            IntTuple::new(beta.to_vec()),
            p,
            q,
        )
        .unwrap()
    }

    #[test]
    fn s_mu_beta_small() {
        assert_eq!(
            s_mu_beta(&IntTuple::from([2]), &IntTuple::from([5])).unwrap(),
            g(2, 5)
        );
        assert!(s_mu_beta(&IntTuple::from([-1]), &IntTuple::from([5]))
            .unwrap()
            .is_zero());
        assert_eq!(
            s_mu_beta(&IntTuple::default(), &IntTuple::default()).unwrap(),
            Polynomial::one(RingKind::Commutative)
        );
        let got = s_mu_beta(&IntTuple::from([1, 0]), &IntTuple::from([0, 0])).unwrap();
        assert_eq!(got, &g(1, 0) * &g(0, 0));
        assert!(s_mu_beta(&IntTuple::from([1, 0]), &IntTuple::from([0])).is_err());
    }

    #[test]
    fn g_zero_is_not_one() {
        assert_ne!(g(0, 3), Polynomial::one(RingKind::Commutative));
    }

    #[test]
    fn context_validation() {
        assert!(NinthContext::new(IntTuple::from([1, 1]), IntTuple::from([0]), 1, 1).is_err());
        assert!(NinthContext::new(IntTuple::from([1, 0]), IntTuple::default(), 1, 1).is_err());
        assert_eq!(
            ctx(&[1, 0], &[4], 2, 3).beta_extended(),
            IntTuple::from([4, 1])
        );
    }

    #[test]
    fn fun_rule_ell_zero() {
        for p in -1..=3 {
            for q in -2..=3 {
                let c = ctx(&[0], &[], p, q);
                let (l, r) = fun_rule_sides(&c);
                assert_eq!(l, g(p, q));
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn fun_rule_ell_one() {
        for m in -1..=2 {
            for b in -1..=2 {
                for p in -1..=2 {
                    let c = ctx(&[m, 0], &[b], p, 1);
                    assert!(verify_fun_rule(&c), "m={m} b={b} p={p}");
                    assert_eq!(
                        fun_rule_sides_via_pre_pieri(&c).unwrap(),
                        fun_rule_sides(&c)
                    );
                }
            }
        }
    }
}
