//! The full verification matrix: every identity of the crate checked over its
//! parameter box, grouped into numbered criteria.
//!
//! Cases are generated sequentially from a seeded generator and evaluated in
//! parallel; results are reported in generation order, so a run is a pure
//! function of its [`SweepConfig`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Generator, Polynomial, RingKind};
use crate::ninthvar::{fun_rule_sides, fun_rule_sides_via_pre_pieri, NinthContext};
use crate::nsym::{
    immaculate, immaculate_via_rowdet, right_pieri_index_set, right_pieri_sides, NSymElement,
};
use crate::permcomb::{
    binary_compositions, box_tuples, cover_det, covers, eta_tuple, int_det, iverson_geq,
    iverson_geq_det, iverson_geq_matrix, oplus, signed_match_sum, weak_compositions, xi_tuple,
    IntTuple, Permutation,
};
use crate::prelr::{
    decompose, gamma_rowdet, is_antisymmetric, reconstruct, t_set, verify_decomposition,
    verify_prelr_claim, Decomposition, MultilinearElement,
};
use crate::prepieri::{
    cor_e_sides, cor_h_sides, first_rule_sides, h, second_rule_sides, t, to_symmetric_functions,
    verify_first, verify_second, CorollaryForm, PieriContext,
};
use crate::rowdet::{rowdet, SquareMatrix};
use crate::schur::{
    alt_pieri_report, complete, horizontal_strips, jacobi_trudi, partitions, schur, verify_pieri,
    Partition, PieriKind,
};

pub const DEFAULT_SEED: u64 = 0x5EED_0001;
pub const DEFAULT_SAMPLES: usize = 50;

/// Keep at most this many failure labels per criterion.
const MAX_FAILURES: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub seed: u64,
    /// Random tuples drawn per parameter point.
    pub samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{verdict}] {}. {} ({} checks)",
            self.id, self.name, self.checks
        )?;
        for n in &self.notes {
            write!(f, "; {n}")?;
        }
        for x in &self.failures {
            write!(f, "\n    failed: {x}")?;
        }
        Ok(())
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "first rule over n<=4, p<=4"),
    (2, "second rule over n<=4, p<=n"),
    (3, "worked examples term for term"),
    (4, "specialization corollaries"),
    (5, "Schur layer and classical Pieri rules"),
    (6, "immaculate right-Pieri rule"),
    (7, "ninth-variation Pieri rule"),
    (8, "antisymmetric decomposition"),
    (9, "Iverson, rowdet and oplus lemmas"),
];

pub fn criterion_name(id: u8) -> Option<&'static str> {
    CRITERIA.iter().find(|(i, _)| *i == id).map(|(_, n)| *n)
}

/// Runs one criterion; `None` for an unknown id.
pub fn run_criterion(id: u8, cfg: &SweepConfig) -> Option<CriterionResult> {
    let name = criterion_name(id)?;
    let mut rng =
        ChaCha8Rng::seed_from_u64(cfg.seed ^ u64::from(id).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let tally = match id {
        1 => first_rule(cfg, &mut rng),
        2 => second_rule(cfg, &mut rng),
        3 => worked_examples(),
        4 => corollaries(cfg, &mut rng),
        5 => schur_layer(),
        6 => nsym_rule(),
        7 => ninth_variation(),
        8 => antisymmetric(cfg, &mut rng),
        9 => lemmas(),
        _ => unreachable!(),
    };
    Some(tally.finish(id, name))
}

pub fn run_all(cfg: &SweepConfig) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|&(id, _)| run_criterion(id, cfg).expect("listed criterion"))
        .collect()
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    /// Evaluates `cases` in parallel, recording failures in case order.
    fn run<C, L, F>(&mut self, cases: Vec<C>, label: L, eval: F)
    where
        C: Sync + Send,
        L: Fn(&C) -> String,
        F: Fn(&C) -> bool + Sync + Send,
    {
        let verdicts: Vec<bool> = cases.par_iter().map(&eval).collect();
        for (c, ok) in cases.iter().zip(verdicts) {
            self.check(ok, || label(c));
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn finish(mut self, id: u8, name: &'static str) -> CriterionResult {
        let passed = self.failures.is_empty();
        let total = self.failures.len();
        self.failures.truncate(MAX_FAILURES);
        if total > MAX_FAILURES {
            self.failures
                .push(format!("... {} more", total - MAX_FAILURES));
        }
        CriterionResult {
            id,
            name,
            passed,
            checks: self.checks,
            failures: self.failures,
            notes: self.notes,
        }
    }
}

fn random_tuple(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntTuple {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// `α = 0` followed by `samples` random tuples in `{-3..3}^n`.
fn alpha_samples(cfg: &SweepConfig, rng: &mut ChaCha8Rng, n: usize) -> Vec<IntTuple> {
    std::iter::once(IntTuple::zeros(n))
        .chain((0..cfg.samples).map(|_| random_tuple(rng, n, -3, 3)))
        .collect()
}

type Case = (usize, i64, IntTuple);

fn case_label(c: &Case) -> String {
    format!("n={} p={} alpha=({})", c.0, c.1, c.2)
}

fn first_rule(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut cases: Vec<Case> = Vec::new();
    for n in 1..=4 {
        for p in 0..=4 {
            cases.extend(alpha_samples(cfg, rng, n).into_iter().map(|a| (n, p, a)));
        }
    }
    let mut tally = Tally::default();
    tally.run(cases, case_label, |(_, p, a)| {
        verify_first(&PieriContext::new(a.clone(), *p)).unwrap_or(false)
    });
    tally
}

fn second_rule(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut cases: Vec<Case> = Vec::new();
    for n in 1..=4 {
        for p in 0..=n as i64 {
            cases.extend(alpha_samples(cfg, rng, n).into_iter().map(|a| (n, p, a)));
        }
    }
    let mut tally = Tally::default();
    tally.run(cases, case_label, |(_, p, a)| {
        verify_second(&PieriContext::new(a.clone(), *p)).unwrap_or(false)
    });
    tally
}

/// `rowdet((h[α_i + offsets[i][j], i]))` for a literal offset table.
pub fn displayed_rowdet(alpha: &IntTuple, offsets: &[&[i64]]) -> Polynomial {
    let n = offsets.len();
    let m = SquareMatrix::from_fn(n, RingKind::Free, |i, j| h(alpha[i] + offsets[i][j], i + 1))
        .expect("free entries");
    rowdet(&m)
}

/// The displayed worked examples, as literal offset tables: for each, the
/// composition set in display order, the addend matrices, and the single
/// matrix on the other side.
struct Worked {
    label: &'static str,
    second: bool,
    n: usize,
    p: i64,
    betas: &'static [&'static [i64]],
    addends: &'static [&'static [&'static [i64]]],
    rhs: &'static [&'static [i64]],
}

const WORKED: [Worked; 3] = [
    Worked {
        label: "first rule n=2 p=2",
        second: false,
        n: 2,
        p: 2,
        betas: &[&[2, 0], &[1, 1], &[0, 2]],
        addends: &[
            &[&[3, 4], &[1, 2]],
            &[&[2, 3], &[2, 3]],
            &[&[1, 2], &[3, 4]],
        ],
        rhs: &[&[1, 4], &[1, 4]],
    },
    Worked {
        label: "first rule n=3 p=2",
        second: false,
        n: 3,
        p: 2,
        betas: &[
            &[2, 0, 0],
            &[0, 2, 0],
            &[0, 0, 2],
            &[1, 1, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ],
        addends: &[
            &[&[3, 4, 5], &[1, 2, 3], &[1, 2, 3]],
            &[&[1, 2, 3], &[3, 4, 5], &[1, 2, 3]],
            &[&[1, 2, 3], &[1, 2, 3], &[3, 4, 5]],
            &[&[2, 3, 4], &[2, 3, 4], &[1, 2, 3]],
            &[&[2, 3, 4], &[1, 2, 3], &[2, 3, 4]],
            &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 4]],
        ],
        rhs: &[&[1, 2, 5], &[1, 2, 5], &[1, 2, 5]],
    },
    Worked {
        label: "second rule n=3 p=2",
        second: true,
        n: 3,
        p: 2,
        betas: &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]],
        addends: &[
            &[&[2, 3, 4], &[2, 3, 4], &[1, 2, 3]],
            &[&[2, 3, 4], &[1, 2, 3], &[2, 3, 4]],
            &[&[1, 2, 3], &[2, 3, 4], &[2, 3, 4]],
        ],
        rhs: &[&[1, 3, 4], &[1, 3, 4], &[1, 3, 4]],
    },
];

fn worked_examples() -> Tally {
    let mut tally = Tally::default();
    // Each row only ever sees the generators h[α_i + k, i] with distinct k, so
    // any α gives a faithful image of the symbolic identity.
    let alphas = [
        IntTuple::zeros(3),
        IntTuple::from([5, -7, 2]),
        IntTuple::from([-3, 0, 11]),
    ];
    for w in &WORKED {
        let betas: Vec<IntTuple> = w.betas.iter().map(|b| IntTuple::new(b.to_vec())).collect();
        let enumerated: BTreeSet<IntTuple> = if w.second {
            binary_compositions(w.n, w.p).collect()
        } else {
            weak_compositions(w.n, w.p).collect()
        };
        let listed: BTreeSet<IntTuple> = betas.iter().cloned().collect();
        tally.check(listed == enumerated && listed.len() == betas.len(), || {
            format!("{}: composition set", w.label)
        });
        let cols = if w.second {
            xi_tuple(w.n, w.p).expect("p <= n")
        } else {
            eta_tuple(w.n, w.p).expect("p >= 0")
        };
        tally.check(w.rhs.iter().all(|row| *row == cols.entries()), || {
            format!("{}: column offsets", w.label)
        });
        for alpha in &alphas {
            let alpha = alpha.prefix(w.n);
            let ctx = PieriContext::new(alpha.clone(), w.p);
            let (lhs, rhs) = if w.second {
                second_rule_sides(&ctx)
            } else {
                first_rule_sides(&ctx)
            }
            .expect("valid parameters");
            for (beta, table) in betas.iter().zip(w.addends) {
                tally.check(
                    displayed_rowdet(&alpha, table) == t(&(&alpha + beta)),
                    || format!("{}: addend for beta=({beta}) alpha=({alpha})", w.label),
                );
            }
            let mut shown = Polynomial::zero(RingKind::Free);
            for table in w.addends {
                shown += &displayed_rowdet(&alpha, table);
            }
            let shown_rhs = displayed_rowdet(&alpha, w.rhs);
            tally.check(shown == lhs, || {
                format!("{}: sum side alpha=({alpha})", w.label)
            });
            tally.check(shown_rhs == rhs, || {
                format!("{}: single side alpha=({alpha})", w.label)
            });
            tally.check(shown == shown_rhs, || {
                format!("{}: identity alpha=({alpha})", w.label)
            });
        }
    }
    tally
}

#[derive(Clone, Debug)]
struct CorCase {
    kind: PieriKind,
    form: CorollaryForm,
    ctx: PieriContext,
}

fn cor_sides(c: &CorCase) -> crate::Result<(Polynomial, Polynomial)> {
    match c.kind {
        PieriKind::H => cor_h_sides(&c.ctx, c.form),
        PieriKind::E => cor_e_sides(&c.ctx, c.form),
    }
}

fn corollaries(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut cases = Vec::new();
    for n in 1..=4usize {
        let ni = n as i64;
        for p in -2..=4 {
            for k in 0..=cfg.samples / 5 {
                let last = if k == 0 {
                    -ni
                } else {
                    rng.gen_range(-ni - 3..=-ni)
                };
                let alpha = random_tuple(rng, n - 1, -3, 3).pushed(last);
                let mu = if k == 0 {
                    IntTuple::zeros(n)
                } else {
                    random_tuple(rng, n - 1, -1, 3).pushed(0)
                };
                for (form, tuple) in [(CorollaryForm::Shifted, alpha), (CorollaryForm::Schur, mu)] {
                    cases.push(CorCase {
                        kind: PieriKind::H,
                        form,
                        ctx: PieriContext::new(tuple, p).with_negative_kill([n]),
                    });
                }
            }
        }
        for p in 0..=n {
            let q = n - p;
            let qi = q as i64;
            for k in 0..=cfg.samples / 5 {
                let head = random_tuple(rng, q, -3, 3);
                let tail = random_tuple(rng, p, -qi - 3, -qi - 1);
                let alpha: IntTuple = head
                    .entries()
                    .iter()
                    .chain(tail.entries())
                    .copied()
                    .collect();
                let mu = if k == 0 {
                    IntTuple::zeros(n)
                } else {
                    random_tuple(rng, q, -1, 3)
                        .entries()
                        .iter()
                        .copied()
                        .chain(std::iter::repeat_n(0, p))
                        .collect()
                };
                for (form, tuple) in [(CorollaryForm::Shifted, alpha), (CorollaryForm::Schur, mu)] {
                    cases.push(CorCase {
                        kind: PieriKind::E,
                        form,
                        ctx: PieriContext::new(tuple, p as i64).with_negative_kill(q + 1..=n),
                    });
                }
            }
        }
    }
    let label = |c: &CorCase| {
        format!(
            "{}/{:?} n={} p={} tuple=({})",
            c.kind, c.form, c.ctx.n, c.ctx.p, c.ctx.alpha
        )
    };
    let mut tally = Tally::default();
    tally.run(cases.clone(), label, |c| match cor_sides(c) {
        Ok((l, r)) => l == r,
        Err(_) => false,
    });
    // the commutative statements are images of the free ones
    tally.run(
        cases
            .iter()
            .filter(|c| c.form == CorollaryForm::Schur)
            .cloned()
            .collect(),
        |c| format!("commutative image of {}", label(c)),
        |c| match cor_sides(c) {
            Ok((l, r)) => to_symmetric_functions(&l) == to_symmetric_functions(&r),
            Err(_) => false,
        },
    );
    let degenerate: Vec<&CorCase> = cases.iter().filter(|c| c.ctx.p < 0).collect();
    for c in &degenerate {
        let zero = matches!(cor_sides(c), Ok((l, r)) if l.is_zero() && r.is_zero());
        tally.check(zero, || format!("p<0 not 0=0: {}", label(c)));
    }
    tally.note(format!(
        "{} cases with p < 0 reduce to 0 = 0",
        degenerate.len()
    ));
    tally
}

fn schur_layer() -> Tally {
    let mut tally = Tally::default();
    let lambdas: Vec<Partition> = (0..=6).flat_map(partitions).collect();
    let mut cases = Vec::new();
    for lam in &lambdas {
        for p in 0..=3 {
            for kind in [PieriKind::H, PieriKind::E] {
                cases.push((lam.clone(), p, kind));
            }
        }
    }
    let label = |(l, p, k): &(Partition, i64, PieriKind)| format!("{k} lambda=({l}) p={p}");
    tally.run(
        cases.clone(),
        |c| format!("classical {}", label(c)),
        |(l, p, k)| verify_pieri(l, *p, *k),
    );

    let intro = horizontal_strips(&Partition::new(vec![2, 1]).expect("partition"), 2);
    let want: Vec<Partition> = [vec![4, 1], vec![3, 2], vec![3, 1, 1], vec![2, 2, 1]]
        .into_iter()
        .map(|v| Partition::new(v).expect("partition"))
        .collect();
    tally.check(intro == want, || "intro example strips".into());

    let reports: Vec<_> = cases
        .par_iter()
        .map(|(l, p, k)| alt_pieri_report(l, *p, *k))
        .collect();
    let mut h_cancelling = 0;
    for (c, r) in cases.iter().zip(&reports) {
        tally.check(r.matches_strips && r.matches_product, || {
            format!("alternative {}", label(c))
        });
        match c.2 {
            PieriKind::E => tally.check(
                r.all_positive && r.cancelling_pairs == 0 && r.non_partition_addends == 0,
                || format!("E addend not a positive partition: {}", label(c)),
            ),
            PieriKind::H => h_cancelling += (r.cancelling_pairs > 0) as usize,
        }
    }
    tally.check(h_cancelling > 0, || {
        "no H case with a cancelling pair".into()
    });
    tally.note(format!("{h_cancelling} H cases with cancelling pairs"));

    // the free corollary specialized to h[k,i] = h[k] is the alternative H rule
    let small: Vec<(Partition, i64)> = (0..=4)
        .flat_map(partitions)
        .flat_map(|l| (0..=3).map(move |p| (l.clone(), p)))
        .collect();
    tally.run(
        small,
        |(l, p)| format!("free and commutative paths lambda=({l}) p={p}"),
        |(l, p)| {
            let n = l.len() + 1;
            let ctx = PieriContext::new(l.padded(n), *p).with_negative_kill([n]);
            let Ok((sum_side, product_side)) = cor_h_sides(&ctx, CorollaryForm::Schur) else {
                return false;
            };
            let mut direct = Polynomial::zero(RingKind::Commutative);
            for beta in weak_compositions(n, *p) {
                direct += &jacobi_trudi(&(&l.padded(n) + &beta), n).expect("n = length");
            }
            to_symmetric_functions(&sum_side) == direct
                && to_symmetric_functions(&product_side) == &schur(l) * &complete(*p)
        },
    );
    tally
}

fn nsym_rule() -> Tally {
    let mut tally = Tally::default();
    let mut cases = Vec::new();
    for n in 0..=3 {
        for alpha in box_tuples(n, -1, 3) {
            for s in 0..=3 {
                cases.push((alpha.clone(), s));
            }
        }
    }
    tally.run(
        cases.clone(),
        |(a, s)| format!("right Pieri alpha=({a}) s={s}"),
        |(a, s)| {
            let (l, r) = right_pieri_sides(a, *s);
            l == r
        },
    );
    tally.run(
        cases
            .iter()
            .filter(|c| c.1 == 0)
            .map(|c| c.0.clone())
            .collect(),
        |a| format!("two immaculate paths alpha=({a})"),
        |a| immaculate(a) == immaculate_via_rowdet(a),
    );
    for (a, s) in &cases {
        let slack = *s as u64;
        let k = a.len() as u64;
        // stars and bars: C(s + n, n) tuples over n + 1 slots
        let expected = (1..=k).fold(1u64, |acc, i| acc * (slack + i) / i);
        tally.check(
            right_pieri_index_set(a, *s).len() as u64 == expected,
            || format!("index set size alpha=({a}) s={s}"),
        );
    }
    let h1h1 = NSymElement::word(&[1, 1]);
    let h2 = NSymElement::word(&[2]);
    let (l, r) = right_pieri_sides(&IntTuple::from([1]), 1);
    let set = right_pieri_index_set(&IntTuple::from([1]), 1);
    tally.check(
        l == h1h1
            && set == vec![IntTuple::from([2, 0]), IntTuple::from([1, 1])]
            && immaculate(&set[0]) == h2
            && immaculate(&set[1]) == &h1h1 - &h2
            && r == &h2 + &(&h1h1 - &h2),
        || "H1 H1 = H2 + (H1 H1 - H2)".into(),
    );
    tally
}

fn ninth_variation() -> Tally {
    let mut cases = Vec::new();
    for ell in 0..=2 {
        for head in box_tuples(ell, -1, 3) {
            for beta in box_tuples(ell, -1, 3) {
                for p in -1..=3 {
                    for q in -2..=3 {
                        let ctx = NinthContext::new(head.pushed(0), beta.clone(), p, q)
                            .expect("valid context");
                        cases.push(ctx);
                    }
                }
            }
        }
    }
    let label = |c: &NinthContext| {
        format!(
            "ell={} mu=({}) beta=({}) p={} q={}",
            c.ell(),
            c.mu(),
            c.beta(),
            c.p(),
            c.q()
        )
    };
    let mut tally = Tally::default();
    let verdicts: Vec<(bool, bool)> = cases
        .par_iter()
        .map(|c| {
            let direct = fun_rule_sides(c);
            let reduced = fun_rule_sides_via_pre_pieri(c);
            (
                direct.0 == direct.1,
                reduced.map(|r| r == direct).unwrap_or(false),
            )
        })
        .collect();
    for (c, (rule, paths)) in cases.iter().zip(verdicts) {
        tally.check(rule, || format!("rule {}", label(c)));
        tally.check(paths, || format!("reduction path {}", label(c)));
    }
    tally
}

fn strictly_increasing_sample(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntTuple {
    let mut pool: Vec<i64> = (lo..=hi).collect();
    let mut chosen = Vec::with_capacity(n);
    for _ in 0..n {
        let k = rng.gen_range(0..pool.len());
        chosen.push(pool.swap_remove(k));
    }
    chosen.sort_unstable();
    IntTuple::new(chosen)
}

fn antisymmetric(cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Tally {
    let mut tally = Tally::default();
    let one = BigInt::from(1);
    for n in 1..=3 {
        for p in 0..=4 {
            let set: BTreeSet<IntTuple> = weak_compositions(n, p).collect();
            let want = Decomposition {
                coefficients: [(eta_tuple(n, p).expect("n >= 1"), one.clone())].into(),
            };
            let got = t_set(&set, n).and_then(|m| decompose(&m));
            tally.check(got.as_ref() == Ok(&want), || format!("weak n={n} p={p}"));
        }
        for p in 0..=n as i64 {
            let set: BTreeSet<IntTuple> = binary_compositions(n, p).collect();
            let want = Decomposition {
                coefficients: [(xi_tuple(n, p).expect("p <= n"), one.clone())].into(),
            };
            let got = t_set(&set, n).and_then(|m| decompose(&m));
            tally.check(got.as_ref() == Ok(&want), || format!("binary n={n} p={p}"));
        }
    }

    // random combinations of increasing row-determinants
    let mut elements = Vec::new();
    for _ in 0..cfg.samples {
        let n = rng.gen_range(1..=4);
        let k = rng.gen_range(0..=4);
        let mut coeffs = std::collections::BTreeMap::new();
        for _ in 0..k {
            let c: i64 = rng.gen_range(-5..=5);
            *coeffs
                .entry(strictly_increasing_sample(rng, n, -2, 5))
                .or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        let alpha = random_tuple(rng, n, -3, 3);
        elements.push((n, coeffs, alpha));
    }
    tally.run(
        elements,
        |(n, c, a)| format!("round trip n={n} coefficients={c:?} alpha=({a})"),
        |(n, coeffs, alpha)| {
            let d = Decomposition {
                coefficients: coeffs
                    .iter()
                    .map(|(g, c)| (g.clone(), BigInt::from(*c)))
                    .collect(),
            };
            let Ok(m) = reconstruct(&d, *n) else {
                return false;
            };
            let repeated_vanish = m.coefficients().all(|(p, _)| p.has_distinct_entries());
            is_antisymmetric(&m)
                && repeated_vanish
                && decompose(&m).as_ref() == Ok(&d)
                && verify_decomposition(&m, Some(alpha)).unwrap_or(false)
        },
    );

    // unions of orbits are invariant, give antisymmetric sums, and satisfy the claim
    let mut orbit_cases = Vec::new();
    for _ in 0..cfg.samples / 5 {
        let n = rng.gen_range(1..=3);
        let mut set = BTreeSet::new();
        for _ in 0..rng.gen_range(1..=2) {
            let b = random_tuple(rng, n, -1, 2);
            set.extend(Permutation::all(n).map(|s| b.act(&s).expect("degree n")));
        }
        orbit_cases.push((n, set, random_tuple(rng, n, -2, 2)));
    }
    tally.run(
        orbit_cases,
        |(n, set, a)| format!("orbit union n={n} set={set:?} alpha=({a})"),
        |(n, set, alpha)| {
            let Ok(m) = t_set(set, *n) else { return false };
            is_antisymmetric(&m) && verify_prelr_claim(set, alpha).unwrap_or(false)
        },
    );
    let single = gamma_rowdet(&IntTuple::from([1, 3]));
    tally.check(
        decompose(&single).map(|d| d.coefficients)
            == Ok([(IntTuple::from([1, 3]), one.clone())].into()),
        || "single row-determinant".into(),
    );
    tally.check(
        decompose(&MultilinearElement::zero(2)).map(|d| d.is_empty()) == Ok(true),
        || "zero element".into(),
    );
    tally
}

fn lemmas() -> Tally {
    let mut tally = Tally::default();
    // [ν ≥ j] determinant against matches with η, for |ν| = |η|
    let mut nu_det = Vec::new();
    for n in 1..=5usize {
        for p in 0..=2 {
            let eta = eta_tuple(n, p).expect("n >= 1");
            for nu in box_tuples(n, -1, n as i64 + p).filter(|nu| nu.abs() == eta.abs()) {
                nu_det.push((nu, eta.clone()));
            }
        }
    }
    tally.run(
        nu_det,
        |(nu, eta)| format!("geq determinant nu=({nu}) eta=({eta})"),
        |(nu, eta)| Ok(iverson_geq_det(nu)) == signed_match_sum(nu, eta),
    );
    let mut xi_det = Vec::new();
    for n in 0..=5usize {
        for p in 0..=n as i64 {
            let xi = xi_tuple(n, p).expect("p <= n");
            for nu in box_tuples(n, -1, n as i64 + 2).filter(|nu| nu.abs() == xi.abs()) {
                xi_det.push((nu, xi.clone()));
            }
        }
    }
    tally.run(
        xi_det,
        |(nu, xi)| format!("cover determinant nu=({nu}) xi=({xi})"),
        |(nu, xi)| Ok(cover_det(nu)) == signed_match_sum(nu, xi),
    );
    // same determinants against the permutations fitting under ν
    let arbitrary: Vec<IntTuple> = (0..=5usize)
        .flat_map(|n| box_tuples(n, -1, n as i64 + 1))
        .collect();
    tally.run(
        arbitrary,
        |nu| format!("fitting permutations nu=({nu})"),
        |nu| {
            let n = nu.len();
            let (mut geq, mut cover) = (0, 0);
            for s in Permutation::all(n) {
                let diffs: Vec<i64> = (0..n).map(|i| nu[i] - (s.apply(i) as i64 + 1)).collect();
                if diffs.iter().all(|&d| d >= 0) {
                    geq += s.sign();
                }
                if diffs.iter().all(|&d| d == 0 || d == 1) {
                    cover += s.sign();
                }
            }
            iverson_geq_det(nu) == geq && cover_det(nu) == cover
        },
    );
    for n in 0..=5usize {
        for p in 0..=n as i64 {
            let xi = xi_tuple(n, p).expect("p <= n");
            for s in Permutation::all(n).filter(|s| !s.is_identity()) {
                let prod: i64 = (0..n)
                    .map(|i| covers(xi[i], s.apply(i) as i64 + 1) as i64)
                    .product();
                tally.check(prod == 0, || format!("xi=({xi}) sigma={s} fits"));
            }
            tally.check(cover_det(&xi) == 1, || {
                format!("cover determinant of xi=({xi})")
            });
        }
    }
    for u in -6..=6 {
        for k in (-6..=6).filter(|&k| k != u) {
            tally.check(iverson_geq(u, k) == iverson_geq(u, k + 1), || {
                format!("u={u} k={k}")
            });
        }
    }
    // a tuple containing all but possibly the last entry of η is a rearrangement of η
    for n in 1..=4usize {
        for eta in box_tuples(n, 0, 3) {
            let head: BTreeSet<i64> = eta.entries()[..n - 1].iter().copied().collect();
            if head.len() != n - 1 {
                continue;
            }
            for nu in box_tuples(n, 0, 3) {
                let covered = head.iter().all(|x| nu.entries().contains(x));
                if nu.abs() != eta.abs() || !covered {
                    continue;
                }
                let exists = Permutation::all(n).any(|s| eta.act(&s).as_ref() == Ok(&nu));
                tally.check(exists, || format!("no rearrangement nu=({nu}) eta=({eta})"));
                if eta.has_distinct_entries() {
                    tally.check(
                        signed_match_sum(&nu, &eta).map(|x| x != 0) == Ok(true),
                        || format!("zero signed match nu=({nu}) eta=({eta})"),
                    );
                }
            }
        }
    }
    // row permutations multiply the integer determinant by the sign
    for n in 1..=4usize {
        for nu in box_tuples(n, 0, n as i64) {
            let m = iverson_geq_matrix(&nu);
            let det = int_det(&m);
            for tau in Permutation::all(n) {
                let permuted: Vec<Vec<i64>> = (0..n).map(|i| m[tau.apply(i)].clone()).collect();
                tally.check(int_det(&permuted) == tau.sign() * det, || {
                    format!("row sign nu=({nu}) tau={tau}")
                });
            }
        }
    }
    // factorizations on generic matrices of distinct generators
    let generic = |n: usize, zero: &dyn Fn(usize, usize) -> bool| {
        SquareMatrix::from_fn(n, RingKind::Free, |i, j| {
            if zero(i, j) {
                Polynomial::zero(RingKind::Free)
            } else {
                Polynomial::generator(RingKind::Free, Generator::x((i * n + j) as i64, i + 1))
            }
        })
        .expect("free entries")
    };
    for n in 1..=5usize {
        let a = generic(n, &|i, j| i == n - 1 && j < n - 1);
        let minor: Vec<usize> = (0..n - 1).collect();
        tally.check(
            rowdet(&a) == &rowdet(&a.submatrix(&minor, &minor)) * a.get(n - 1, n - 1),
            || format!("last-row expansion n={n}"),
        );
    }
    for n in 0..=5usize {
        for k in 0..=n {
            let a = generic(n, &|i, j| i >= k && j < k);
            let top: Vec<usize> = (0..k).collect();
            let bottom: Vec<usize> = (k..n).collect();
            let product =
                &rowdet(&a.submatrix(&top, &top)) * &rowdet(&a.submatrix(&bottom, &bottom));
            tally.check(rowdet(&a) == product, || {
                format!("block triangular n={n} k={k}")
            });
        }
    }
    for n in 0..=5usize {
        for k in 0..=n {
            let mut images = BTreeSet::new();
            for a in Permutation::all(k) {
                for b in Permutation::all(n - k) {
                    let c = oplus(&a, &b);
                    tally.check(c.sign() == a.sign() * b.sign(), || {
                        format!("oplus sign {a} {b}")
                    });
                    images.insert(c);
                }
            }
            let stabilizer: BTreeSet<Permutation> = Permutation::all(n)
                .filter(|t| t.stabilizes_prefix(k))
                .collect();
            tally.check(images == stabilizer, || {
                format!("oplus bijection n={n} k={k}")
            });
        }
    }
    for (a, b) in box_tuples(2, -3, 3).zip(box_tuples(2, -2, 4)) {
        tally.check((&a + &b).abs() == a.abs() + b.abs(), || {
            format!("additivity ({a}) ({b})")
        });
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples_pass() {
        let r = run_criterion(3, &SweepConfig::default()).unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn unknown_criterion() {
        assert!(run_criterion(10, &SweepConfig::default()).is_none());
    }

    #[test]
    fn failure_list_is_capped() {
        let mut t = Tally::default();
        for i in 0..15 {
            t.check(false, || format!("case {i}"));
        }
        let r = t.finish(1, "x");
        assert!(!r.passed);
        assert_eq!(r.checks, 15);
        assert_eq!(r.failures.len(), MAX_FAILURES + 1);
    }

    #[test]
    fn deterministic_under_seed() {
        let cfg = SweepConfig {
            seed: 7,
            samples: 3,
        };
        assert_eq!(run_criterion(4, &cfg), run_criterion(4, &cfg));
    }
}
