//! Executable checks of the equivalence statements about core, dual core,
//! Moore-Penrose and group inverses.
//!
//! [`Lab::verify`] evaluates every numbered condition of one statement on one
//! element, independently of the others, then validates the closed-form
//! expressions that accompany it. Finite rings get a brute-force [`Oracle`];
//! [`sweep`] drives whole rings or seeded random samples.

mod oracle;
mod random;
mod sweep;
mod theorems;

use alloc::string::String;
use core::cell::RefCell;
use alloc::vec::Vec;

use thiserror::Error;

use crate::inverse::{
    core_by_composition, dual_core_by_composition, group_inverse, mp_inverse, InverseClass,
    InverseError,
};
use crate::linalg::ExactSolver;

pub use oracle::{ClassSearch, Oracle, OracleReport, ORACLE_LIMIT};
pub use random::{random_element, random_pair, sample_element, RankProfile};
pub use sweep::{context_lab, sweep, Sampler, SweepConfig, SweepItem, SweepSummary, Tally};

/// Statement identifiers, as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `a ∈ R(a*)^n a`, `a ∈ Ra*a ∩ a^n R`, `R = °a ⊕ R(a*)^n`, `R = °a + R(a*)^n`.
    LeftPowerStar,
    /// Mirror of [`TheoremId::LeftPowerStar`].
    RightPowerStar,
    /// Core and dual core existence through `(a*)^n`.
    PowerStarCore,
    /// Seven conditions for `a ∈ R† ∩ R#`.
    BothCores,
    /// `a^n + p` a unit for a projection `p` with `pa = 0`, `n >= 2`.
    CoreUnit,
    /// The same at `n = 1`.
    CoreUnitFirst,
    /// `a*a + p` invertible, one-sided invertible.
    CoreGram,
    /// EP through `pa = ap = 0`.
    EpUnit,
    /// Units built from an inner inverse.
    RegularUnits,
    /// `(a*)^n` invertible along `a`.
    AlongPowerStar,
    /// `a ∈ Ra(a*)^n a ⇒ a ∈ a^n a* a^n R` and its mirror.
    PowerSandwich,
    /// Dedekind-finiteness and the symmetric memberships.
    DedekindFinite,
    /// `1 + ab` is a unit exactly when `1 + ba` is.
    Jacobson,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::LeftPowerStar,
        TheoremId::RightPowerStar,
        TheoremId::PowerStarCore,
        TheoremId::BothCores,
        TheoremId::CoreUnit,
        TheoremId::CoreUnitFirst,
        TheoremId::CoreGram,
        TheoremId::EpUnit,
        TheoremId::RegularUnits,
        TheoremId::AlongPowerStar,
        TheoremId::PowerSandwich,
        TheoremId::DedekindFinite,
        TheoremId::Jacobson,
    ];

    pub fn code(self) -> &'static str {
        match self {
            TheoremId::LeftPowerStar => "P2.9-I",
            TheoremId::RightPowerStar => "P2.9-II",
            TheoremId::PowerStarCore => "T2.10",
            TheoremId::BothCores => "T2.11",
            TheoremId::CoreUnit => "T3.3",
            TheoremId::CoreUnitFirst => "T3.4",
            TheoremId::CoreGram => "T3.7",
            TheoremId::EpUnit => "T3.8",
            TheoremId::RegularUnits => "T4.1",
            TheoremId::AlongPowerStar => "C4.2",
            TheoremId::PowerSandwich => "P4.4",
            TheoremId::DedekindFinite => "T4.6",
            TheoremId::Jacobson => "L2.6",
        }
    }

    pub fn parse(s: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|t| t.code().eq_ignore_ascii_case(s))
    }

    /// Smallest exponent the statement allows; `None` when it has no exponent.
    pub fn min_exponent(self) -> Option<u32> {
        match self {
            TheoremId::LeftPowerStar
            | TheoremId::RightPowerStar
            | TheoremId::EpUnit
            | TheoremId::PowerSandwich => Some(1),
            // n = 1 is accepted and runs the externally sourced n = 1 variant.
            TheoremId::BothCores => Some(1),
            TheoremId::PowerStarCore
            | TheoremId::CoreUnit
            | TheoremId::RegularUnits
            | TheoremId::AlongPowerStar
            | TheoremId::DedekindFinite => Some(2),
            TheoremId::CoreUnitFirst | TheoremId::CoreGram | TheoremId::Jacobson => None,
        }
    }

    /// Exponents a sweep runs: `{1,2,3}` or `{2,3}`, or a single pass.
    pub fn sweep_exponents(self) -> &'static [u32] {
        match self.min_exponent() {
            Some(1) => &[1, 2, 3],
            Some(_) => &[2, 3],
            None => &[1],
        }
    }

    pub fn needs_inner(self) -> bool {
        self == TheoremId::RegularUnits
    }

    pub fn needs_partner(self) -> bool {
        self == TheoremId::Jacobson
    }
}

impl core::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: &'static str,
    pub holds: bool,
}

/// How the conditions of a statement are related.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// All conditions are equivalent.
    Equivalent,
    /// Independent equivalence classes of conditions.
    Groups(&'static [&'static [usize]]),
    /// Condition `i` implies condition `j` for every listed pair.
    Implies(&'static [(usize, usize)]),
}

impl Relation {
    pub fn holds(&self, values: &[bool]) -> bool {
        match self {
            Relation::Equivalent => values.iter().all(|&v| v == values[0]),
            Relation::Groups(groups) => groups
                .iter()
                .all(|g| g.iter().all(|&i| values[i] == values[g[0]])),
            Relation::Implies(pairs) => pairs.iter().all(|&(i, j)| !values[i] || values[j]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaCheck {
    pub tag: &'static str,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremVerdict<E> {
    pub theorem: TheoremId,
    pub element: E,
    /// Second element for statements about pairs.
    pub other: Option<E>,
    pub n: u32,
    pub conditions: Vec<Condition>,
    pub relation: Relation,
    pub formulas: Vec<FormulaCheck>,
    /// Named auxiliary values (`p`, `u`, witnesses) for display.
    pub values: Vec<(&'static str, E)>,
    /// Existential conditions were decided over the whole ring rather than
    /// on a constructed candidate.
    pub exhaustive: bool,
    /// The statement checked is cited from elsewhere rather than proved alongside.
    pub external: bool,
}

impl<E> TheoremVerdict<E> {
    pub fn agree(&self) -> bool {
        let v: Vec<bool> = self.conditions.iter().map(|c| c.holds).collect();
        self.relation.holds(&v)
    }

    pub fn formulas_pass(&self) -> bool {
        self.formulas.iter().all(|f| f.pass)
    }

    pub fn passed(&self) -> bool {
        self.agree() && self.formulas_pass()
    }

    /// Condition truth values as `0`/`1` characters.
    pub fn bits(&self) -> String {
        self.conditions.iter().map(|c| if c.holds { '1' } else { '0' }).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LabError<E> {
    #[error("exponent {n} below minimum {min} for {theorem}")]
    Exponent { theorem: TheoremId, n: u32, min: u32 },
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),
    #[error("supplied inner inverse fails a x a = a")]
    BadInner,
    #[error("element is not regular")]
    NotRegular,
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("inverse engine failed: {0}")]
    Engine(InverseError<E>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremParams<E> {
    pub n: u32,
    /// Inner inverse for statements that assume regularity.
    pub a_inner: Option<E>,
    /// Second element for statements about pairs.
    pub other: Option<E>,
}

impl<E> Default for TheoremParams<E> {
    fn default() -> Self {
        TheoremParams {
            n: 2,
            a_inner: None,
            other: None,
        }
    }
}

impl<E> TheoremParams<E> {
    pub fn with_n(n: u32) -> Self {
        TheoremParams {
            n,
            ..Default::default()
        }
    }
}

/// A ring plus what is known about it: the oracle when the ring is small
/// enough to tabulate, and whether it is Dedekind-finite.
pub struct Lab<'r, R: ExactSolver> {
    ring: &'r R,
    oracle: Option<Oracle<'r, R>>,
    projections: Option<Vec<R::Elem>>,
    hermitians: Option<Vec<R::Elem>>,
    dedekind_finite: Option<bool>,
    /// Composition-route references for the last element asked about.
    cache: RefCell<Option<(R::Elem, Vec<(InverseClass, Option<R::Elem>)>)>>,
}

impl<'r, R: ExactSolver> Lab<'r, R> {
    /// Builds the oracle when the ring has at most [`ORACLE_LIMIT`] elements.
    pub fn new(ring: &'r R) -> Self {
        let oracle = Oracle::new(ring).ok();
        let projections = oracle.as_ref().map(|o| o.projections());
        let hermitians = oracle.as_ref().map(|o| o.hermitians());
        let dedekind_finite = oracle.as_ref().map(|o| o.dedekind_finite());
        Lab {
            ring,
            oracle,
            projections,
            hermitians,
            dedekind_finite,
            cache: RefCell::new(None),
        }
    }

    /// No tabulation: every condition is decided by the exact solvers.
    pub fn without_oracle(ring: &'r R) -> Self {
        Lab {
            ring,
            oracle: None,
            projections: None,
            hermitians: None,
            dedekind_finite: None,
            cache: RefCell::new(None),
        }
    }

    /// Records Dedekind-finiteness for rings the oracle cannot enumerate.
    pub fn assume_dedekind_finite(mut self, value: bool) -> Self {
        if self.oracle.is_none() {
            self.dedekind_finite = Some(value);
        }
        self
    }

    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn oracle(&self) -> Option<&Oracle<'r, R>> {
        self.oracle.as_ref()
    }

    pub fn dedekind_finite(&self) -> Option<bool> {
        self.dedekind_finite
    }

    /// Inner inverses found by exhaustive search, at most `cap`.
    pub fn inner_inverses(&self, a: &R::Elem, cap: usize) -> Vec<R::Elem> {
        match &self.oracle {
            Some(o) => o
                .solutions(InverseClass::Inner, a)
                .into_iter()
                .take(cap)
                .map(|i| o.element(i).clone())
                .collect(),
            None => self.ring.find_inner_inverse(a).into_iter().collect(),
        }
    }

    /// The class value used as ground truth: exhaustive search when available,
    /// otherwise the composition routes of the inverse engine.
    pub fn reference(&self, class: InverseClass, a: &R::Elem) -> Result<Option<R::Elem>, LabError<R::Elem>> {
        if let Some(o) = &self.oracle {
            return Ok(o.solutions(class, a).first().map(|&i| o.element(i).clone()));
        }
        if let Some((e, known)) = &*self.cache.borrow() {
            if e == a {
                if let Some((_, v)) = known.iter().find(|(c, _)| *c == class) {
                    return Ok(v.clone());
                }
            }
        }
        let r = self.ring;
        let res = match class {
            InverseClass::Core => core_by_composition(r, a),
            InverseClass::DualCore => dual_core_by_composition(r, a),
            InverseClass::MoorePenrose => mp_inverse(r, a),
            InverseClass::Group => group_inverse(r, a),
            InverseClass::Inner => r.inner_inverse(a).map_err(|_| InverseError::NotRegular),
            InverseClass::OneThree => crate::inverse::one_three_inverse(r, a),
            InverseClass::OneFour => crate::inverse::one_four_inverse(r, a),
        };
        let value = match res {
            Ok(v) => Some(v),
            Err(e) if crate::inverse::is_fatal(&e) => return Err(LabError::Engine(e)),
            Err(_) => None,
        };
        let mut cache = self.cache.borrow_mut();
        match &mut *cache {
            Some((e, known)) if e == a => known.push((class, value.clone())),
            _ => *cache = Some((a.clone(), alloc::vec![(class, value.clone())])),
        }
        Ok(value)
    }

    pub fn verify(
        &self,
        theorem: TheoremId,
        a: &R::Elem,
        params: &TheoremParams<R::Elem>,
    ) -> Result<TheoremVerdict<R::Elem>, LabError<R::Elem>> {
        theorems::verify(self, theorem, a, params)
    }
}

/// One-shot verification; tabulates the ring when it is small.
pub fn verify_theorem<R: ExactSolver>(
    r: &R,
    theorem: TheoremId,
    a: &R::Elem,
    params: &TheoremParams<R::Elem>,
) -> Result<TheoremVerdict<R::Elem>, LabError<R::Elem>> {
    Lab::new(r).verify(theorem, a, params)
}
