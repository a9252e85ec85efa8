//! Whole-ring and seeded random sweeps.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::oracle::class_index;
use super::random::{random_pair, sample_element, RankProfile};
use super::{Lab, LabError, TheoremId, TheoremParams, TheoremVerdict};
use crate::error::RingError;
use crate::inverse::{
    check, ep_characterization, portfolio, projection_uniqueness, InverseClass, InversePortfolio,
    ProjectionMode,
};
use crate::ring::{enumerate, RingContext, RingElement, RingKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sampler {
    /// Every element of a finite ring.
    Exhaustive,
    /// `count` elements cycling through [`RankProfile::strata`], entries in
    /// `[-entry_bound, entry_bound]` over characteristic 0.
    Random { count: usize, entry_bound: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub theorems: Vec<TheoremId>,
    pub sampler: Sampler,
    pub seed: u64,
    /// Replaces each statement's default exponents; values below a
    /// statement's minimum are skipped.
    pub exponents: Option<Vec<u32>>,
    /// Inner inverses tried per element for statements that take one.
    pub inner_cap: usize,
    /// Second elements per element for pair statements. Exhaustive sweeps
    /// over rings this small pair every element with every element.
    pub partners: usize,
    /// Cross-check the inverse engine: route agreement, exponent
    /// independence, and on small rings the oracle and projection uniqueness.
    pub engine_checks: bool,
}

impl SweepConfig {
    pub fn new(theorems: Vec<TheoremId>, sampler: Sampler) -> Self {
        SweepConfig {
            theorems,
            sampler,
            seed: 0,
            exponents: None,
            inner_cap: 10,
            partners: 16,
            engine_checks: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SweepItem<E> {
    Verdict(TheoremVerdict<E>),
    Error {
        theorem: TheoremId,
        element: E,
        other: Option<E>,
        n: u32,
        error: LabError<E>,
    },
    Engine {
        element: E,
        label: &'static str,
        failure: Option<String>,
    },
}

impl<E> SweepItem<E> {
    pub fn passed(&self) -> bool {
        match self {
            SweepItem::Verdict(v) => v.passed(),
            SweepItem::Error { .. } => false,
            SweepItem::Engine { failure, .. } => failure.is_none(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tally<E> {
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<SweepItem<E>>,
}

impl<E> Default for Tally<E> {
    fn default() -> Self {
        Tally {
            checked: 0,
            failed: 0,
            skipped: 0,
            first_failure: None,
        }
    }
}

impl<E: Clone> Tally<E> {
    fn record(&mut self, item: &SweepItem<E>) {
        self.checked += 1;
        if !item.passed() {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(item.clone());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSummary<E> {
    pub elements: usize,
    pub theorems: Vec<(TheoremId, Tally<E>)>,
    pub engine: Tally<E>,
}

impl<E> SweepSummary<E> {
    pub fn failures(&self) -> usize {
        self.engine.failed + self.theorems.iter().map(|(_, t)| t.failed).sum::<usize>()
    }
}

/// Lab for a runtime ring. Matrix rings over fields and commutative rings
/// are Dedekind-finite, which covers every [`RingContext`].
pub fn context_lab(ctx: &RingContext) -> Lab<'_, RingContext> {
    Lab::new(ctx).assume_dedekind_finite(true)
}

fn elements(ctx: &RingContext, cfg: &SweepConfig, rng: &mut ChaCha8Rng) -> Result<Vec<RingElement>, RingError> {
    match cfg.sampler {
        Sampler::Exhaustive => Ok(enumerate(ctx)?.collect()),
        Sampler::Random { count, entry_bound } => {
            let strata = match ctx.kind() {
                RingKind::Matrix { k, .. } => RankProfile::strata(k),
                RingKind::Modular(_) => vec![RankProfile::Any, RankProfile::Full],
            };
            Ok((0..count)
                .map(|i| sample_element(ctx, entry_bound, strata[i % strata.len()], rng))
                .collect())
        }
    }
}

fn exponents(theorem: TheoremId, cfg: &SweepConfig) -> Vec<u32> {
    match (&cfg.exponents, theorem.min_exponent()) {
        (Some(list), Some(min)) => list.iter().copied().filter(|&n| n >= min).collect(),
        _ => theorem.sweep_exponents().to_vec(),
    }
}

/// Runs every configured statement on every sampled element, handing each
/// result to `sink` in a fixed order. Deterministic for a fixed seed.
pub fn sweep(
    ctx: &RingContext,
    cfg: &SweepConfig,
    sink: &mut dyn FnMut(&SweepItem<RingElement>),
) -> Result<SweepSummary<RingElement>, RingError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let elems = elements(ctx, cfg, &mut rng)?;
    let lab = context_lab(ctx);
    let all_partners = matches!(cfg.sampler, Sampler::Exhaustive) && elems.len() <= cfg.partners;
    let mut summary = SweepSummary {
        elements: elems.len(),
        theorems: cfg.theorems.iter().map(|&t| (t, Tally::default())).collect(),
        engine: Tally::default(),
    };
    let bound = match cfg.sampler {
        Sampler::Random { entry_bound, .. } => entry_bound,
        Sampler::Exhaustive => 5,
    };

    for a in &elems {
        if cfg.engine_checks {
            for item in engine_checks(&lab, a) {
                summary.engine.record(&item);
                sink(&item);
            }
        }
        let partners: Vec<RingElement> = if !cfg.theorems.iter().any(|t| t.needs_partner()) {
            Vec::new()
        } else if all_partners {
            elems.clone()
        } else {
            (0..cfg.partners).map(|_| random_pair(ctx, bound, &mut rng).1).collect()
        };
        for (t, tally) in summary.theorems.iter_mut() {
            let t = *t;
            for n in exponents(t, cfg) {
                let mut runs: Vec<TheoremParams<RingElement>> = Vec::new();
                if t.needs_inner() {
                    for x in lab.inner_inverses(a, cfg.inner_cap) {
                        runs.push(TheoremParams {
                            n,
                            a_inner: Some(x),
                            other: None,
                        });
                    }
                } else if t.needs_partner() {
                    for b in &partners {
                        runs.push(TheoremParams {
                            n,
                            a_inner: None,
                            other: Some(b.clone()),
                        });
                    }
                } else {
                    runs.push(TheoremParams::with_n(n));
                }
                if runs.is_empty() {
                    tally.skipped += 1;
                }
                for p in runs {
                    let item = match lab.verify(t, a, &p) {
                        Ok(v) => SweepItem::Verdict(v),
                        Err(LabError::NotApplicable(_)) | Err(LabError::NotRegular) => {
                            tally.skipped += 1;
                            continue;
                        }
                        Err(error) => SweepItem::Error {
                            theorem: t,
                            element: a.clone(),
                            other: p.other.clone(),
                            n,
                            error,
                        },
                    };
                    tally.record(&item);
                    sink(&item);
                }
            }
        }
    }
    Ok(summary)
}

fn outcome_values(p: &InversePortfolio<RingElement>) -> Vec<Option<&RingElement>> {
    InverseClass::ALL.iter().map(|&c| p.class(c).value()).collect()
}

fn engine_checks(lab: &Lab<'_, RingContext>, a: &RingElement) -> Vec<SweepItem<RingElement>> {
    let item = |label, failure: Option<String>| SweepItem::Engine {
        element: a.clone(),
        label,
        failure,
    };
    let r = lab.ring();
    let mut out = Vec::new();

    let p2 = portfolio(r, a, 2);
    let p3 = portfolio(r, a, 3);
    let routes = match (&p2, &p3) {
        (Ok(x), Ok(y)) if outcome_values(x) == outcome_values(y) => None,
        (Ok(_), Ok(_)) => Some(String::from("values depend on n")),
        (Err(e), _) | (_, Err(e)) => Some(format!("{e}")),
    };
    out.push(item("routes", routes));

    let mut ep_failure = None;
    for n in 1..=3 {
        match ep_characterization(r, a, n) {
            Ok(v) if v.agree() && p2.as_ref().map(|p| p.ep == v.is_ep()).unwrap_or(true) => {}
            Ok(_) => ep_failure = Some(format!("EP routes disagree at n = {n}")),
            Err(e) => ep_failure = Some(format!("{e}")),
        }
    }
    out.push(item("ep", ep_failure));

    if let (Some(o), Ok(p)) = (lab.oracle(), &p2) {
        let rep = o.report(a, 1);
        let mut failure = None;
        if !rep.validated || !rep.uniqueness_holds() {
            failure = Some(String::from("oracle solution invalid or not unique"));
        }
        for c in InverseClass::ALL {
            let found = &rep.classes[class_index(c)];
            let engine = p.class(c).value();
            let ok = match c {
                InverseClass::Inner | InverseClass::OneThree | InverseClass::OneFour => {
                    found.exists() == engine.is_some() && engine.is_none_or(|x| check::class(r, c, a, x))
                }
                _ => found.value() == engine,
            };
            if !ok {
                failure = Some(format!("{} differs from exhaustive search", c.name()));
            }
        }
        out.push(item("oracle", failure));

        let projections = o.projections();
        let mut failure = None;
        for mode in [ProjectionMode::Core, ProjectionMode::DualCore, ProjectionMode::Ep] {
            for n in 1..=3 {
                match projection_uniqueness(r, a, n, mode, Some(&projections)) {
                    Ok(v) => {
                        let ok = match &v.canonical {
                            Some(_) => v.unique() == Some(true),
                            None => v.matching.is_empty(),
                        };
                        if !ok {
                            failure = Some(format!("{mode:?} projection not unique at n = {n}"));
                        }
                    }
                    Err(e) => failure = Some(format!("{e}")),
                }
            }
        }
        out.push(item("projections", failure));
    }
    out
}
