//! Exact arithmetic in free noncommutative polynomial rings over the integers,
//! together with a commutative variant.
//!
//! A [`Polynomial`] is a finite map from canonical [`Monomial`]s to nonzero
//! [`BigInt`] coefficients. Every polynomial carries its [`RingKind`]; the two
//! kinds never mix. Ring homomorphisms out of a free algebra are realized by
//! [`Polynomial::substitute`], which sends every generator to an arbitrary
//! image and extends multiplicatively in word order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Generator families.
///
/// `H2` is the grid `h[k,i]`, `X2` the grid `X[k,i]`, `Nsym` the noncommutative
/// complete functions `H[k]`, `G2` the grid `g[k,j]` and `Lam` the commutative
/// complete functions `h[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    H2,
    X2,
    Nsym,
    G2,
    Lam,
}

impl Family {
    pub fn arity(self) -> usize {
        match self {
            Family::H2 | Family::X2 | Family::G2 => 2,
            Family::Nsym | Family::Lam => 1,
        }
    }
}

/// A tagged, indexed symbol.
///
/// Single-index families store a zero in the unused slot so that the derived
/// ordering is lexicographic on `(family, indices)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: Family,
    idx: [i64; 2],
}

impl Generator {
    pub fn new(family: Family, indices: &[i64]) -> Result<Self> {
        if indices.len() != family.arity() {
            return Err(Error::InvalidGenerator(format!(
                "{family:?} takes {} indices, got {}",
                family.arity(),
                indices.len()
            )));
        }
        if matches!(family, Family::H2 | Family::X2) && indices[1] < 1 {
            return Err(Error::InvalidGenerator(format!(
                "{family:?} column index must be at least 1, got {}",
                indices[1]
            )));
        }
        let mut idx = [0; 2];
        idx[..indices.len()].copy_from_slice(indices);
        Ok(Generator { family, idx })
    }

    /// `h[k,i]`; panics if `i == 0`.
    pub fn h(k: i64, i: usize) -> Self {
        assert!(i >= 1, "h[k,i] needs i >= 1");
        Generator {
            family: Family::H2,
            idx: [k, i as i64],
        }
    }

    /// `X[k,i]`; panics if `i == 0`.
    pub fn x(k: i64, i: usize) -> Self {
        assert!(i >= 1, "X[k,i] needs i >= 1");
        Generator {
            family: Family::X2,
            idx: [k, i as i64],
        }
    }

    pub fn nsym(k: i64) -> Self {
        Generator {
            family: Family::Nsym,
            idx: [k, 0],
        }
    }

    pub fn g(k: i64, j: i64) -> Self {
        Generator {
            family: Family::G2,
            idx: [k, j],
        }
    }

    pub fn lam(k: i64) -> Self {
        Generator {
            family: Family::Lam,
            idx: [k, 0],
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn indices(&self) -> &[i64] {
        &self.idx[..self.family.arity()]
    }

    /// The first index `k` (the degree-like index in every family).
    pub fn k(&self) -> i64 {
        self.idx[0]
    }

    /// The second index (`i` or `j`); zero for single-index families.
    pub fn second(&self) -> i64 {
        self.idx[1]
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.idx;
        match self.family {
            Family::H2 => write!(f, "h[{a},{b}]"),
            Family::X2 => write!(f, "X[{a},{b}]"),
            Family::Nsym => write!(f, "H[{a}]"),
            Family::G2 => write!(f, "g[{a},{b}]"),
            Family::Lam => write!(f, "h[{a}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// Free associative algebra; monomials are words.
    Free,
    /// Commutative polynomial ring; monomials are exponent maps.
    Commutative,
}

/// A canonical monomial.
///
/// `Word` is an ordered product of generators (the empty word is the unit).
/// `Exponent` is a generator-sorted list of `(generator, exponent)` pairs with
/// no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Word(Vec<Generator>),
    Exponent(Vec<(Generator, u32)>),
}

impl Monomial {
    pub fn one(kind: RingKind) -> Self {
        match kind {
            RingKind::Free => Monomial::Word(Vec::new()),
            RingKind::Commutative => Monomial::Exponent(Vec::new()),
        }
    }

    pub fn generator(kind: RingKind, g: Generator) -> Self {
        match kind {
            RingKind::Free => Monomial::Word(vec![g]),
            RingKind::Commutative => Monomial::Exponent(vec![(g, 1)]),
        }
    }

    /// Builds a commutative monomial from arbitrary pairs, merging repeated
    /// generators and dropping zero exponents.
    pub fn exponent_map(pairs: impl IntoIterator<Item = (Generator, u32)>) -> Self {
        let mut map: BTreeMap<Generator, u32> = BTreeMap::new();
        for (g, e) in pairs {
            *map.entry(g).or_default() += e;
        }
        Monomial::Exponent(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn kind(&self) -> RingKind {
        match self {
            Monomial::Word(_) => RingKind::Free,
            Monomial::Exponent(_) => RingKind::Commutative,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Monomial::Word(w) => w.len(),
            Monomial::Exponent(e) => e.iter().map(|&(_, k)| k as usize).sum(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Monomial::Word(w) => w.is_empty(),
            Monomial::Exponent(e) => e.is_empty(),
        }
    }

    /// Generators with multiplicity, in word order (or canonical order).
    pub fn factors(&self) -> Vec<Generator> {
        match self {
            Monomial::Word(w) => w.clone(),
            Monomial::Exponent(e) => e
                .iter()
                .flat_map(|&(g, k)| std::iter::repeat_n(g, k as usize))
                .collect(),
        }
    }

    fn mul(&self, other: &Monomial) -> Result<Monomial> {
        match (self, other) {
            (Monomial::Word(a), Monomial::Word(b)) => {
                let mut w = Vec::with_capacity(a.len() + b.len());
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                Ok(Monomial::Word(w))
            }
            (Monomial::Exponent(a), Monomial::Exponent(b)) => {
                Ok(Monomial::Exponent(merge_exponents(a, b)))
            }
            _ => Err(Error::IncompatibleRing(
                "cannot multiply a word by an exponent monomial".into(),
            )),
        }
    }
}

fn merge_exponents(a: &[(Generator, u32)], b: &[(Generator, u32)]) -> Vec<(Generator, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Ord for Monomial {
    // Kind, then degree, then lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Monomial::Word(a), Monomial::Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Monomial::Exponent(a), Monomial::Exponent(b)) => {
                self.degree().cmp(&other.degree()).then_with(|| a.cmp(b))
            }
            (Monomial::Word(_), Monomial::Exponent(_)) => Ordering::Less,
            (Monomial::Exponent(_), Monomial::Word(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        match self {
            Monomial::Word(w) => {
                for (n, g) in w.iter().enumerate() {
                    if n > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{g}")?;
                }
            }
            Monomial::Exponent(e) => {
                for (n, (g, k)) in e.iter().enumerate() {
                    if n > 0 {
                        write!(f, "*")?;
                    }
                    if *k == 1 {
                        write!(f, "{g}")?;
                    } else {
                        write!(f, "{g}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// An element of a free (or commutative) polynomial ring over the integers.
///
/// The term map never stores a zero coefficient, so structural equality is
/// ring equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    kind: RingKind,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(kind: RingKind) -> Self {
        Polynomial {
            kind,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(kind: RingKind) -> Self {
        Self::constant(kind, BigInt::one())
    }

    pub fn constant(kind: RingKind, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(kind);
        p.add_term(Monomial::one(kind), c.into());
        p
    }

    pub fn generator(kind: RingKind, g: Generator) -> Self {
        Self::monomial(Monomial::generator(kind, g), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m.kind());
        p.add_term(m, c.into());
        p
    }

    /// Canonicalizes an arbitrary list of terms: exponent monomials are
    /// re-sorted and merged, repeated monomials are combined and zero
    /// coefficients dropped.
    pub fn from_terms(
        kind: RingKind,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(kind);
        for (m, c) in terms {
            if m.kind() != kind {
                return Err(Error::IncompatibleRing(format!(
                    "monomial {m} does not belong to a {kind:?} ring"
                )));
            }
            let m = match m {
                Monomial::Exponent(e) => Monomial::exponent_map(e),
                w => w,
            };
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The leading (first in canonical order) term, if any.
    pub fn first_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_kind(&self, other: &Polynomial) -> Result<()> {
        if self.kind != other.kind {
            return Err(Error::IncompatibleRing(format!(
                "{:?} operand combined with {:?} operand",
                self.kind, other.kind
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_kind(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    /// Distributive product; words concatenate in `self`-then-`other` order.
    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_kind(other)?;
        let mut out = Polynomial::zero(self.kind);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b)?, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.kind);
        }
        Polynomial {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Ring equality; errors when the kinds differ.
    pub fn equals(&self, other: &Polynomial) -> Result<bool> {
        self.check_kind(other)?;
        Ok(self.terms == other.terms)
    }

    pub fn sum<'a>(kind: RingKind, items: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero(kind);
        for p in items {
            assert_eq!(p.kind, kind, "summing polynomials of different ring kinds");
            for (m, c) in &p.terms {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Applies the ring homomorphism that sends each generator `x` to
    /// `image(x)` (or to `x` itself in the target ring when `image` returns
    /// `None`).
    ///
    /// Every image must live in `target`. A commutative source can only be
    /// sent to a commutative target.
    pub fn substitute<F>(&self, target: RingKind, mut image: F) -> Result<Polynomial>
    where
        F: FnMut(&Generator) -> Option<Polynomial>,
    {
        if self.kind == RingKind::Commutative && target == RingKind::Free {
            return Err(Error::IncompatibleRing(
                "a commutative polynomial has no canonical image in a free algebra".into(),
            ));
        }
        let mut cache: BTreeMap<Generator, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target, c.clone());
            for g in m.factors() {
                if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(g) {
                    let img = image(&g).unwrap_or_else(|| Polynomial::generator(target, g));
                    if img.kind != target {
                        return Err(Error::IncompatibleRing(format!(
                            "image of {g} is {:?}, expected {target:?}",
                            img.kind
                        )));
                    }
                    e.insert(img);
                }
                let img = &cache[&g];
                if img.is_zero() {
                    prod = Polynomial::zero(target);
                    break;
                }
                prod = prod.try_mul(img)?;
            }
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc);
            }
        }
        Ok(out)
    }

    /// [`substitute`](Self::substitute) driven by an explicit map; generators
    /// missing from the map are kept.
    pub fn substitute_map(
        &self,
        target: RingKind,
        images: &BTreeMap<Generator, Polynomial>,
    ) -> Result<Polynomial> {
        self.substitute(target, |g| images.get(g).cloned())
    }

    /// The image in the commutative ring obtained by letting all generators
    /// commute.
    pub fn commutative_image(&self) -> Polynomial {
        self.substitute(RingKind::Commutative, |_| None)
            .expect("identity images are always commutative")
    }

    /// Maps every generator through `f`, keeping the ring kind. Zero-image
    /// substitutions are not possible here; use [`substitute`](Self::substitute).
    pub fn rename<F: FnMut(&Generator) -> Generator>(&self, mut f: F) -> Polynomial {
        let kind = self.kind;
        self.substitute(kind, |g| Some(Polynomial::generator(kind, f(g))))
            .expect("renaming preserves the ring kind")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on mixed ring kinds; use the `try_*` methods to get an
// error instead.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        assert_eq!(
            self.kind, rhs.kind,
            "adding polynomials of different ring kinds"
        );
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            kind: self.kind,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fh(k: i64, i: usize) -> Polynomial {
        Polynomial::generator(RingKind::Free, Generator::h(k, i))
    }

    fn lam(k: i64) -> Polynomial {
        Polynomial::generator(RingKind::Commutative, Generator::lam(k))
    }

    #[test]
    fn word_product_concatenates() {
        let p = &fh(1, 1) * &fh(2, 2);
        let w = Monomial::Word(vec![Generator::h(1, 1), Generator::h(2, 2)]);
        assert_eq!(p.term_count(), 1);
        assert_eq!(p.coefficient(&w), BigInt::one());
    }

    #[test]
    fn distributivity_preserves_order() {
        let p = &(&fh(1, 1) + &fh(2, 2)) * &fh(1, 1);
        let a = Monomial::Word(vec![Generator::h(1, 1), Generator::h(1, 1)]);
        let b = Monomial::Word(vec![Generator::h(2, 2), Generator::h(1, 1)]);
        assert_eq!(p.term_count(), 2);
        assert_eq!(p.coefficient(&a), BigInt::one());
        assert_eq!(p.coefficient(&b), BigInt::one());
    }

    #[test]
    fn commutative_product_is_canonical() {
        let p = &lam(2) * &lam(1);
        let m = Monomial::Exponent(vec![(Generator::lam(1), 1), (Generator::lam(2), 1)]);
        assert_eq!(p.coefficient(&m), BigInt::one());
        assert!(p.equals(&(&lam(1) * &lam(2))).unwrap());
    }

    #[test]
    fn word_order_matters() {
        let a = &fh(1, 1) * &fh(2, 2);
        let b = &fh(2, 2) * &fh(1, 1);
        assert!(!a.equals(&b).unwrap());
    }

    #[test]
    fn self_difference_is_zero() {
        let p = &(&fh(1, 1) * &fh(2, 2)) + &fh(3, 1).scale(&BigInt::from(7));
        assert!((&p - &p).equals(&Polynomial::zero(RingKind::Free)).unwrap());
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        let e = fh(1, 1).try_mul(&lam(1)).unwrap_err();
        assert!(matches!(e, Error::IncompatibleRing(_)));
        assert!(fh(1, 1).try_add(&lam(1)).is_err());
        assert!(fh(1, 1).equals(&lam(1)).is_err());
    }

    #[test]
    fn annihilating_substitution_kills_word() {
        let p = &fh(-1, 1) * &fh(3, 2);
        let q = p
            .substitute(RingKind::Free, |g| {
                (g.family() == Family::H2 && g.k() < 0).then(|| Polynomial::zero(RingKind::Free))
            })
            .unwrap();
        assert!(q.is_zero());
    }

    #[test]
    fn identity_substitution() {
        let p = &(&fh(1, 1) * &fh(2, 2)) - &fh(0, 3);
        assert_eq!(p.substitute(RingKind::Free, |_| None).unwrap(), p);
    }

    #[test]
    fn substitution_rejects_wrong_image_kind() {
        let p = fh(1, 1);
        assert!(p.substitute(RingKind::Free, |_| Some(lam(1))).is_err());
        assert!(lam(1).substitute(RingKind::Free, |_| None).is_err());
    }

    #[test]
    fn generator_validation() {
        assert!(Generator::new(Family::H2, &[1]).is_err());
        assert!(Generator::new(Family::H2, &[1, 0]).is_err());
        assert!(Generator::new(Family::Nsym, &[1, 2]).is_err());
        assert_eq!(
            Generator::new(Family::G2, &[-1, -1]).unwrap(),
            Generator::g(-1, -1)
        );
        assert_eq!(Generator::new(Family::Lam, &[3]).unwrap().indices(), &[3]);
    }

    #[test]
    fn rendering() {
        assert_eq!(Generator::h(-1, 2).to_string(), "h[-1,2]");
        assert_eq!(Generator::x(3, 1).to_string(), "X[3,1]");
        assert_eq!(Generator::nsym(2).to_string(), "H[2]");
        assert_eq!(Generator::g(0, -2).to_string(), "g[0,-2]");
        assert_eq!(Generator::lam(4).to_string(), "h[4]");
        let p = &(&lam(2) * &lam(1)) - &lam(3);
        assert_eq!(p.to_string(), "-h[3] + h[1]*h[2]");
        let q =
            &(&lam(1) * &lam(1)).scale(&BigInt::from(3)) + &Polynomial::one(RingKind::Commutative);
        assert_eq!(q.to_string(), "1 + 3*h[1]^2");
        assert_eq!(Polynomial::zero(RingKind::Free).to_string(), "0");
    }

    #[test]
    fn from_terms_merges() {
        let m1 = Monomial::Exponent(vec![(Generator::lam(2), 1), (Generator::lam(1), 1)]);
        let m2 = Monomial::Exponent(vec![
            (Generator::lam(1), 1),
            (Generator::lam(2), 1),
            (Generator::lam(5), 0),
        ]);
        let p = Polynomial::from_terms(
            RingKind::Commutative,
            [(m1, BigInt::from(2)), (m2, BigInt::from(-2))],
        )
        .unwrap();
        assert!(p.is_zero());
    }
}
