use alloc::vec::Vec;

use super::along::{invertible_along_power_star, regular_unit_characterization};
use super::classes::*;
use super::units::{core_from_hermitian_unit, dual_core_from_hermitian_unit};
use super::{check_exponent, is_fatal, InverseClass, InverseError};
use crate::linalg::ExactSolver;
use crate::ring::StarRing;

/// Equation a stored witness satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessEquation {
    /// `a w a = a`
    Inner,
    /// `a = w (a*)^n a`
    PowerStarLeft,
    /// `a = a (a*)^n w`
    PowerStarRight,
    /// `a = a a* a w`
    GramRight,
    /// `a = w a a* a`
    GramLeft,
}

impl WitnessEquation {
    pub fn holds<R: StarRing>(self, r: &R, a: &R::Elem, w: &R::Elem, n: u32) -> bool {
        let s = r.star(a);
        let sn = r.pow(&s, n);
        let rhs = match self {
            WitnessEquation::Inner => r.prod(&[a, w, a]),
            WitnessEquation::PowerStarLeft => r.prod(&[w, &sn, a]),
            WitnessEquation::PowerStarRight => r.prod(&[a, &sn, w]),
            WitnessEquation::GramRight => r.prod(&[a, &s, a, w]),
            WitnessEquation::GramLeft => r.prod(&[w, a, &s, a]),
        };
        rhs == *a
    }

    pub fn describe(self) -> &'static str {
        match self {
            WitnessEquation::Inner => "a w a = a",
            WitnessEquation::PowerStarLeft => "a = w (a*)^n a",
            WitnessEquation::PowerStarRight => "a = a (a*)^n w",
            WitnessEquation::GramRight => "a = a a* a w",
            WitnessEquation::GramLeft => "a = w a a* a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<E> {
    pub value: E,
    pub equation: WitnessEquation,
    pub n: u32,
}

/// Auxiliary solutions `a^-`, `s`, `t`, `x`, `y` found while computing a portfolio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet<E> {
    pub inner: Option<Witness<E>>,
    pub s: Option<Witness<E>>,
    pub t: Option<Witness<E>>,
    pub x: Option<Witness<E>>,
    pub y: Option<Witness<E>>,
}

impl<E> Default for WitnessSet<E> {
    fn default() -> Self {
        WitnessSet {
            inner: None,
            s: None,
            t: None,
            x: None,
            y: None,
        }
    }
}

impl<E> WitnessSet<E> {
    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &Witness<E>)> {
        [("a^-", &self.inner), ("s", &self.s), ("t", &self.t), ("x", &self.x), ("y", &self.y)]
            .into_iter()
            .filter_map(|(name, w)| w.as_ref().map(|w| (name, w)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route<E> {
    pub name: &'static str,
    pub value: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassResult<E> {
    pub outcome: Result<E, InverseError<E>>,
    /// Every route that produced a value; all values are equal.
    pub routes: Vec<Route<E>>,
}

impl<E> ClassResult<E> {
    pub fn value(&self) -> Option<&E> {
        self.outcome.as_ref().ok()
    }

    pub fn exists(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversePortfolio<E> {
    pub inner: ClassResult<E>,
    pub one_three: ClassResult<E>,
    pub one_four: ClassResult<E>,
    pub mp: ClassResult<E>,
    pub group: ClassResult<E>,
    pub core: ClassResult<E>,
    pub dual_core: ClassResult<E>,
    pub ep: bool,
    pub witnesses: WitnessSet<E>,
    pub n: u32,
}

impl<E> InversePortfolio<E> {
    pub fn class(&self, class: InverseClass) -> &ClassResult<E> {
        match class {
            InverseClass::Inner => &self.inner,
            InverseClass::OneThree => &self.one_three,
            InverseClass::OneFour => &self.one_four,
            InverseClass::MoorePenrose => &self.mp,
            InverseClass::Group => &self.group,
            InverseClass::Core => &self.core,
            InverseClass::DualCore => &self.dual_core,
        }
    }
}

/// Collects route values for one class and enforces agreement in value and
/// in existence.
struct Collector<E> {
    class: InverseClass,
    primary: Result<E, InverseError<E>>,
    routes: Vec<Route<E>>,
}

impl<E: Clone + PartialEq> Collector<E> {
    fn new(class: InverseClass, name: &'static str, primary: Result<E, InverseError<E>>) -> Result<Self, InverseError<E>> {
        let primary = match primary {
            Err(e) if is_fatal(&e) => return Err(e),
            p => p,
        };
        let routes = primary
            .as_ref()
            .ok()
            .map(|v| Route { name, value: v.clone() })
            .into_iter()
            .collect();
        Ok(Collector { class, primary, routes })
    }

    /// A route whose existence must match the primary route's.
    fn route(&mut self, name: &'static str, res: Result<E, InverseError<E>>) -> Result<(), InverseError<E>> {
        match (res, &self.primary) {
            (Err(e), _) if is_fatal(&e) => Err(e),
            (Ok(v), Ok(p)) if v == *p => {
                self.routes.push(Route { name, value: v });
                Ok(())
            }
            (Err(_), Err(_)) => Ok(()),
            _ => Err(InverseError::RouteDisagreement { class: self.class, route: name }),
        }
    }

    /// A route that only applies under extra hypotheses; its value must match
    /// when present.
    fn optional(&mut self, name: &'static str, value: Option<E>) -> Result<(), InverseError<E>> {
        match (value, &self.primary) {
            (None, _) => Ok(()),
            (Some(v), Ok(p)) if v == *p => {
                self.routes.push(Route { name, value: v });
                Ok(())
            }
            _ => Err(InverseError::RouteDisagreement { class: self.class, route: name }),
        }
    }

    fn finish(self) -> ClassResult<E> {
        ClassResult {
            outcome: self.primary,
            routes: self.routes,
        }
    }
}

fn soft<E>(res: Result<E, InverseError<E>>) -> Result<Option<E>, InverseError<E>> {
    match res {
        Ok(v) => Ok(Some(v)),
        Err(e) if is_fatal(&e) => Err(e),
        Err(_) => Ok(None),
    }
}

/// Every inverse class of `a` by every route, using exponent `n >= 2` for the
/// power routes. Non-existence is reported per class; an `Err` means two
/// routes disagreed or a value failed its defining equations.
pub fn portfolio<R: ExactSolver>(
    r: &R,
    a: &R::Elem,
    n: u32,
) -> Result<InversePortfolio<R::Elem>, InverseError<R::Elem>> {
    check_exponent(n, 2)?;
    let mut witnesses = WitnessSet::default();
    let s = r.star(a);

    let inner_res = r.inner_inverse(a).map_err(|_| InverseError::NotRegular);
    if let Ok(w) = &inner_res {
        witnesses.inner = Some(Witness {
            value: w.clone(),
            equation: WitnessEquation::Inner,
            n,
        });
    }
    let inner = Collector::new(InverseClass::Inner, "rank-factorization", inner_res)?.finish();

    let one_three = Collector::new(InverseClass::OneThree, "gram-solve", one_three_inverse(r, a))?.finish();
    let one_four = Collector::new(InverseClass::OneFour, "gram-solve", one_four_inverse(r, a))?.finish();

    let mut mp = Collector::new(InverseClass::MoorePenrose, "composition", mp_by_composition(r, a))?;
    mp.route("gram", mp_by_gram(r, a))?;
    if mp.primary.is_ok() {
        if let Some(x) = r.right_divide(a, &r.prod(&[a, &s, a])) {
            witnesses.x = Some(Witness { value: x, equation: WitnessEquation::GramRight, n });
        }
        if let Some(y) = r.left_divide(a, &r.prod(&[a, &s, a])) {
            witnesses.y = Some(Witness { value: y, equation: WitnessEquation::GramLeft, n });
        }
    }
    let mp_exists = mp.primary.is_ok();
    if mp_exists != (one_three.exists() && one_four.exists()) {
        return Err(InverseError::RouteDisagreement {
            class: InverseClass::MoorePenrose,
            route: "one-sided existence",
        });
    }

    let group = Collector::new(InverseClass::Group, "yax", group_inverse(r, a))?;

    let mut core = Collector::new(InverseClass::Core, "composition", core_by_composition(r, a))?;
    let power = core_by_power_star(r, a, n).map(|(v, w)| {
        witnesses.s = Some(Witness { value: w, equation: WitnessEquation::PowerStarLeft, n });
        v
    });
    core.route("power-star", power)?;
    let mut dual = Collector::new(InverseClass::DualCore, "composition", dual_core_by_composition(r, a))?;
    let power = dual_core_by_power_star(r, a, n).map(|(v, w)| {
        witnesses.t = Some(Witness { value: w, equation: WitnessEquation::PowerStarRight, n });
        v
    });
    dual.route("power-star", power)?;

    // Hermitian-unit routes, with p = 1 - a a^(1,3) read off independently of the core inverse.
    if let Some(x) = one_three.value() {
        let p = r.one_minus(&r.mul(a, x));
        for m in [1, n] {
            core.route(
                if m == 1 { "hermitian-unit n=1" } else { "hermitian-unit" },
                core_from_hermitian_unit(r, a, &p, m),
            )?;
        }
    }
    if let Some(y) = one_four.value() {
        let q = r.one_minus(&r.mul(y, a));
        for m in [1, n] {
            dual.route(
                if m == 1 { "hermitian-unit n=1" } else { "hermitian-unit" },
                dual_core_from_hermitian_unit(r, a, &q, m),
            )?;
        }
    }

    let both = core.primary.is_ok() && dual.primary.is_ok();
    let mut group = group;
    if let Some(w) = inner.value() {
        let reg = regular_unit_characterization(r, a, w, n)?;
        if reg.invertible[0] != both {
            return Err(InverseError::RouteDisagreement {
                class: InverseClass::Core,
                route: "regular-unit existence",
            });
        }
        if let Some(four) = reg.inverses {
            core.optional("regular-unit", Some(four.core))?;
            dual.optional("regular-unit", Some(four.dual_core))?;
            mp.optional("regular-unit", Some(four.mp))?;
            group.optional("regular-unit", Some(four.group))?;
        }
    }
    let along = invertible_along_power_star(r, a, n)?;
    if along.verdict() != both || along.along != both {
        return Err(InverseError::RouteDisagreement {
            class: InverseClass::Core,
            route: "along-power-star existence",
        });
    }
    if let Some(four) = along.inverses {
        core.optional("along-power-star", Some(four.core))?;
        dual.optional("along-power-star", Some(four.dual_core))?;
        group.optional("along-power-star", Some(four.group))?;
        mp.optional("along-power-star", Some(four.mp))?;
    }

    // Existence links between classes, and the group inverse recovered from
    // the core and dual core inverses.
    let core_exists = core.primary.is_ok();
    let dual_exists = dual.primary.is_ok();
    let group_exists = group.primary.is_ok();
    if core_exists != (group_exists && one_three.exists()) {
        return Err(InverseError::RouteDisagreement { class: InverseClass::Core, route: "group and one-three existence" });
    }
    if dual_exists != (group_exists && one_four.exists()) {
        return Err(InverseError::RouteDisagreement {
            class: InverseClass::DualCore,
            route: "group and one-four existence",
        });
    }
    if let Ok(c) = &core.primary {
        group.optional("core^2 a", soft(group_from_core(r, a, Some(c)))?)?;
    }
    if let Ok(d) = &dual.primary {
        group.optional("a dual^2", soft(group_from_dual_core(r, a, Some(d)))?)?;
    }

    let core = core.finish();
    let dual_core = dual.finish();
    let ep = matches!((core.value(), dual_core.value()), (Some(c), Some(d)) if c == d);
    Ok(InversePortfolio {
        inner,
        one_three,
        one_four,
        mp: mp.finish(),
        group: group.finish(),
        core,
        dual_core,
        ep,
        witnesses,
        n,
    })
}
