//! Symmetric functions in the commutative complete generators `h[k]`:
//! Jacobi–Trudi determinants, straightening, strips and the Pieri rules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{Generator, Polynomial, RingKind};
use crate::error::{Error, Result};
use crate::permcomb::{binary_compositions, weak_compositions, IntTuple, Permutation};
use crate::rowdet::{rowdet, SquareMatrix};

/// A weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<i64>);

impl Partition {
    pub fn new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&x| x < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    /// Interprets a tuple as a partition if it is one (after trimming zeros).
    pub fn from_tuple(t: &IntTuple) -> Option<Self> {
        Partition::new(t.entries().to_vec()).ok()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The parts padded with zeros to length `n` (`n >= len`).
    pub fn padded(&self, n: usize) -> IntTuple {
        assert!(n >= self.len());
        let mut v = self.0.clone();
        v.resize(n, 0);
        IntTuple::new(v)
    }

    pub fn to_tuple(&self) -> IntTuple {
        IntTuple::new(self.0.clone())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_tuple().fmt(f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(s.parse::<IntTuple>()?.into_vec())
    }
}

/// All partitions of `size`, in decreasing lexicographic order.
pub fn partitions(size: i64) -> Vec<Partition> {
    fn rec(rest: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size >= 0 {
        rec(size, size, &mut Vec::new(), &mut out);
    }
    out
}

/// `h[k]` with `h[0] = 1` and `h[k] = 0` for `k < 0`.
pub fn complete(k: i64) -> Polynomial {
    match k {
        k if k < 0 => Polynomial::zero(RingKind::Commutative),
        0 => Polynomial::one(RingKind::Commutative),
        k => Polynomial::generator(RingKind::Commutative, Generator::lam(k)),
    }
}

/// `det((h[λ_i - i + j]))` of size `n`, padding `lam` with zeros.
pub fn jacobi_trudi(lam: &IntTuple, n: usize) -> Result<Polynomial> {
    if n < lam.len() {
        return Err(Error::LengthMismatch {
            expected: lam.len(),
            found: n,
        });
    }
    let mut v = lam.entries().to_vec();
    v.resize(n, 0);
    let m = SquareMatrix::from_fn(n, RingKind::Commutative, |i, j| {
        complete(v[i] - i as i64 + j as i64)
    })?;
    Ok(rowdet(&m))
}

pub fn schur(lam: &Partition) -> Polynomial {
    jacobi_trudi(&lam.to_tuple(), lam.len()).expect("n = length")
}

/// `e_p = s_{(1^p)}`.
pub fn elementary(p: i64) -> Polynomial {
    if p < 0 {
        return Polynomial::zero(RingKind::Commutative);
    }
    schur(&Partition(vec![1; p as usize]))
}

/// Result of rewriting `s_λ` for an arbitrary tuple as `0` or `±s_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Signed { sign: i64, partition: Partition },
}

pub fn straighten(lam: &IntTuple) -> Straightened {
    let c: Vec<i64> = lam
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| x - i as i64 - 1)
        .collect();
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&a, &b| c[b].cmp(&c[a]));
    if order.windows(2).any(|w| c[w[0]] == c[w[1]]) {
        return Straightened::Zero;
    }
    let parts: Vec<i64> = order
        .iter()
        .enumerate()
        .map(|(i, &k)| c[k] + i as i64 + 1)
        .collect();
    if parts.iter().any(|&x| x < 0) {
        return Straightened::Zero;
    }
    let sign = Permutation::from_images(order)
        .expect("sorting permutation")
        .sign();
    Straightened::Signed {
        sign,
        partition: Partition::new(parts).expect("sorted shifted entries"),
    }
}

/// Which Pieri rule: multiplication by `h_p` or by `e_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PieriKind {
    H,
    E,
}

impl FromStr for PieriKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(PieriKind::H),
            "E" | "e" => Ok(PieriKind::E),
            _ => Err(Error::Parse(format!("unknown kind {s:?}, expected H or E"))),
        }
    }
}

impl fmt::Display for PieriKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieriKind::H => "H",
            PieriKind::E => "E",
        })
    }
}

/// The partitions `μ ⊇ λ` with `μ/λ` a horizontal `p`-strip, decreasing lex.
pub fn horizontal_strips(lam: &Partition, p: i64) -> Vec<Partition> {
    let n = lam.len() + 1;
    let base = lam.padded(n);
    weak_compositions(n, p)
        .map(|beta| &base + &beta)
        .filter(|mu| (1..n).all(|i| mu[i] <= base[i - 1]))
        .map(|mu| Partition::new(mu.into_vec()).expect("interlacing"))
        .collect()
}

/// The partitions `μ ⊇ λ` with `μ/λ` a vertical `p`-strip, decreasing lex.
pub fn vertical_strips(lam: &Partition, p: i64) -> Vec<Partition> {
    if p < 0 {
        return Vec::new();
    }
    let n = lam.len() + p as usize;
    let base = lam.padded(n);
    binary_compositions(n, p)
        .filter_map(|beta| Partition::from_tuple(&(&base + &beta)))
        .collect()
}

pub fn pieri(lam: &Partition, p: i64, kind: PieriKind) -> Vec<Partition> {
    match kind {
        PieriKind::H => horizontal_strips(lam, p),
        PieriKind::E => vertical_strips(lam, p),
    }
}

fn multiplier(p: i64, kind: PieriKind) -> Polynomial {
    match kind {
        PieriKind::H => complete(p),
        PieriKind::E => elementary(p),
    }
}

/// Checks `s_λ · h_p` (or `e_p`) against the strip sum as expanded polynomials.
pub fn verify_pieri(lam: &Partition, p: i64, kind: PieriKind) -> bool {
    let lhs = &schur(lam) * &multiplier(p, kind);
    let rhs = Polynomial::sum(
        RingKind::Commutative,
        pieri(lam, p, kind)
            .iter()
            .map(schur)
            .collect::<Vec<_>>()
            .iter(),
    );
    lhs == rhs
}

/// The determinant size used by the alternative rules: one padding zero for
/// `H`, `p` padding zeros for `E`.
pub fn alt_pieri_size(lam: &Partition, p: i64, kind: PieriKind) -> usize {
    match kind {
        PieriKind::H => lam.len() + 1,
        PieriKind::E => lam.len() + p.max(0) as usize,
    }
}

/// Bookkeeping for the alternative Pieri rule `Σ_β s_{λ+β}` over all weak
/// (`H`) or binary (`E`) compositions `β` of `p` with `n` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPieriReport {
    pub kind: PieriKind,
    pub n: usize,
    pub addends: usize,
    pub zero_addends: usize,
    /// Nonzero addends whose tuple `λ+β` is not itself a partition.
    pub non_partition_addends: usize,
    /// Pairs of opposite-signed addends straightening to the same partition.
    pub cancelling_pairs: usize,
    /// Every nonzero addend straightened with sign `+1`.
    pub all_positive: bool,
    /// Net coefficient of each partition after collecting signs.
    pub collected: BTreeMap<Partition, i64>,
    /// `collected` is exactly the strip set with multiplicity one.
    pub matches_strips: bool,
    /// `Σ_β jacobi_trudi(λ+β) = s_λ · h_p` (or `e_p`) as polynomials.
    pub matches_product: bool,
}

pub fn alt_pieri_report(lam: &Partition, p: i64, kind: PieriKind) -> AltPieriReport {
    let n = alt_pieri_size(lam, p, kind);
    let base = lam.padded(n);
    let betas: Vec<IntTuple> = match kind {
        PieriKind::H => weak_compositions(n, p).collect(),
        PieriKind::E => binary_compositions(n, p).collect(),
    };
    let mut plus: BTreeMap<Partition, usize> = BTreeMap::new();
    let mut minus: BTreeMap<Partition, usize> = BTreeMap::new();
    let mut zero_addends = 0;
    let mut non_partition_addends = 0;
    let mut expanded = Polynomial::zero(RingKind::Commutative);
    for beta in &betas {
        let tuple = &base + beta;
        expanded += &jacobi_trudi(&tuple, n).expect("n = length");
        match straighten(&tuple) {
            Straightened::Zero => zero_addends += 1,
            Straightened::Signed { sign, partition } => {
                if Partition::from_tuple(&tuple).is_none() {
                    non_partition_addends += 1;
                }
                let bucket = if sign > 0 { &mut plus } else { &mut minus };
                *bucket.entry(partition).or_default() += 1;
            }
        }
    }
    let cancelling_pairs = minus
        .iter()
        .map(|(mu, &neg)| neg.min(plus.get(mu).copied().unwrap_or(0)))
        .sum();
    let mut collected: BTreeMap<Partition, i64> = BTreeMap::new();
    for (mu, &c) in &plus {
        *collected.entry(mu.clone()).or_default() += c as i64;
    }
    for (mu, &c) in &minus {
        *collected.entry(mu.clone()).or_default() -= c as i64;
    }
    collected.retain(|_, c| *c != 0);
    let strips: BTreeMap<Partition, i64> =
        pieri(lam, p, kind).into_iter().map(|mu| (mu, 1)).collect();
    let product = &schur(lam) * &multiplier(p, kind);
    AltPieriReport {
        kind,
        n,
        addends: betas.len(),
        zero_addends,
        non_partition_addends,
        cancelling_pairs,
        all_positive: minus.is_empty(),
        matches_strips: collected == strips,
        matches_product: expanded == product,
        collected,
    }
}

/// The alternative Pieri rule agrees with the strip rule, both combinatorially
/// and as expanded polynomials.
pub fn alt_pieri_equiv(lam: &Partition, p: i64, kind: PieriKind) -> bool {
    let r = alt_pieri_report(lam, p, kind);
    r.matches_strips && r.matches_product
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn h(k: i64) -> Polynomial {
        complete(k)
    }

    #[test]
    fn jacobi_trudi_small() {
        let jt = jacobi_trudi(&IntTuple::from([2, 1]), 2).unwrap();
        assert_eq!(jt, &(&h(2) * &h(1)) - &h(3));
        assert_eq!(jacobi_trudi(&IntTuple::from([4]), 1).unwrap(), h(4));
        assert_eq!(jacobi_trudi(&IntTuple::from([2, 1, 0]), 3).unwrap(), jt);
        assert_eq!(jacobi_trudi(&IntTuple::from([2, 1]), 5).unwrap(), jt);
        assert!(jacobi_trudi(&IntTuple::from([2, 1]), 1).is_err());
        assert_eq!(jacobi_trudi(&IntTuple::default(), 0).unwrap(), h(0));
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&IntTuple::from([1, 2])), Straightened::Zero);
        assert_eq!(
            straighten(&IntTuple::from([0, 2])),
            Straightened::Signed {
                sign: -1,
                partition: part(&[1, 1])
            }
        );
        assert_eq!(
            straighten(&IntTuple::from([3, 1])),
            Straightened::Signed {
                sign: 1,
                partition: part(&[3, 1])
            }
        );
        assert_eq!(straighten(&IntTuple::from([-1])), Straightened::Zero);
        let jt = jacobi_trudi(&IntTuple::from([0, 2]), 2).unwrap();
        assert_eq!(jt, &h(2) - &(&h(1) * &h(1)));
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("3,1,0".parse::<Partition>().unwrap(), part(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::default());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,-1".parse::<Partition>().is_err());
        assert_eq!(part(&[3, 1, 1]).to_string(), "3,1,1");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(
            partitions(3),
            vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
        );
    }

    #[test]
    fn horizontal_strip_examples() {
        let got = horizontal_strips(&part(&[2, 1]), 2);
        let want = vec![
            part(&[4, 1]),
            part(&[3, 2]),
            part(&[3, 1, 1]),
            part(&[2, 2, 1]),
        ];
        assert_eq!(got, want);
        assert_eq!(horizontal_strips(&part(&[3, 1]), 0), vec![part(&[3, 1])]);
        assert_eq!(
            horizontal_strips(&Partition::default(), 2),
            vec![part(&[2])]
        );
    }

    #[test]
    fn vertical_strip_examples() {
        assert_eq!(
            vertical_strips(&Partition::default(), 2),
            vec![part(&[1, 1])]
        );
        assert_eq!(
            vertical_strips(&part(&[1]), 1),
            vec![part(&[2]), part(&[1, 1])]
        );
        assert_eq!(vertical_strips(&part(&[2, 2]), 0), vec![part(&[2, 2])]);
    }

    #[test]
    fn pieri_intro_example() {
        assert!(verify_pieri(&part(&[2, 1]), 2, PieriKind::H));
        assert!(verify_pieri(&part(&[2, 1]), 2, PieriKind::E));
    }

    #[test]
    fn alt_pieri_h_intro_example() {
        // every non-partition addend straightens to zero here
        let r = alt_pieri_report(&part(&[2, 1]), 2, PieriKind::H);
        assert!(r.matches_strips && r.matches_product);
        assert_eq!(r.addends, 6);
        assert_eq!(r.zero_addends, 2);
        assert_eq!(r.cancelling_pairs, 0);
    }

    #[test]
    fn alt_pieri_h_cancels() {
        // (1,3) straightens to -(2,2), which cancels the addend (2,2)
        let r = alt_pieri_report(&part(&[1]), 3, PieriKind::H);
        assert!(r.matches_strips && r.matches_product);
        assert_eq!(r.cancelling_pairs, 1);
        assert!(!r.all_positive);
    }

    #[test]
    fn alt_pieri_e_positive() {
        let r = alt_pieri_report(&part(&[2]), 2, PieriKind::E);
        assert_eq!(r.n, 3);
        assert!(r.matches_strips && r.matches_product);
        assert!(r.all_positive);
        assert_eq!(r.cancelling_pairs, 0);
        assert_eq!(r.non_partition_addends, 0);
    }

    #[test]
    fn alt_pieri_trivial() {
        for kind in [PieriKind::H, PieriKind::E] {
            assert!(alt_pieri_equiv(&Partition::default(), 1, kind));
        }
    }
}
