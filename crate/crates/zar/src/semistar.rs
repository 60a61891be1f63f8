//! Semistar operations induced by subsets of the space.
//!
//! A nonempty subset `Y` induces the operation `∧_Y` sending a module `E`
//! to `∩{EV : V ∈ Y}`.  Over a valuation ring `V` the extension `EV` of a
//! finitely generated module is determined by the minimum valuation of its
//! generators, so every image `E^{∧_Y}` is cut out by placewise exponent
//! constraints over the place part of `Y` (the generic point contributes
//! nothing).  This module represents finitely generated fractional ideals
//! by their exponent vectors, images by generalized modules with a
//! constraint set, and decides containment, the e.a.b. property, the
//! finite-type equality of two such operations, completions, and vacancy.
//!
//! Exponent vectors determine the ideal itself over the three base pairs
//! whose base ring is `Z` or `k[x]`; over a constant base ring they
//! determine only the divisor closure of the generator span, which is all
//! the `∧_Y` machinery ever sees, so wedge images stay exact there too.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{pole_at, support, val, Base, FieldElem, Place};
use crate::space::{representation_witness, some_place_in, ZarSubset};
use crate::Result;

/// A nonzero finitely generated fractional ideal (or module) over the base
/// ring, normalized to its exponent vector: `e_v` is the minimum valuation
/// of the generators at `v`, recorded only where nonzero.  The generator
/// list is retained for input/output.
#[derive(Clone, Debug)]
pub struct FracIdeal {
    base: Base,
    generators: Vec<FieldElem>,
    exponents: BTreeMap<Place, i64>,
}

impl FracIdeal {
    /// Builds the ideal generated by a nonempty list of nonzero elements.
    pub fn new(base: &Base, generators: Vec<FieldElem>) -> Result<FracIdeal> {
        if generators.is_empty() {
            return Err(Error::ZeroElement);
        }
        let mut places: BTreeSet<Place> = BTreeSet::new();
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroElement);
            }
            for (v, _) in support(base, g)? {
                places.insert(v);
            }
        }
        let mut exponents = BTreeMap::new();
        for v in places {
            let mut e = i64::MAX;
            for g in &generators {
                e = e.min(val(base, &v, g)?);
            }
            if e != 0 {
                exponents.insert(v, e);
            }
        }
        Ok(FracIdeal {
            base: *base,
            generators,
            exponents,
        })
    }

    /// The principal ideal of one nonzero element.
    pub fn principal(base: &Base, x: &FieldElem) -> Result<FracIdeal> {
        FracIdeal::new(base, alloc::vec![x.clone()])
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn generators(&self) -> &[FieldElem] {
        &self.generators
    }

    pub fn exponents(&self) -> &BTreeMap<Place, i64> {
        &self.exponents
    }

    /// The exponent at one place (zero when unrecorded).
    pub fn exponent_at(&self, v: &Place) -> i64 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    /// The product ideal: generators multiply pairwise and exponent vectors
    /// add (the minimum over the product grid is the sum of the minima).
    pub fn mul(&self, other: &FracIdeal) -> FracIdeal {
        assert!(
            self.base == other.base,
            "ideals over different bases: {} vs {}",
            self.base.name(),
            other.base.name()
        );
        let mut generators = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                generators.push(a.mul(b));
            }
        }
        let mut exponents = self.exponents.clone();
        for (v, e) in &other.exponents {
            *exponents.entry(v.clone()).or_insert(0) += e;
        }
        exponents.retain(|_, e| *e != 0);
        FracIdeal {
            base: self.base,
            generators,
            exponents,
        }
    }

    /// Whether two ideals are equal, decided on exponent vectors.  Over a
    /// base ring `Z` or `k[x]` this is exactly ideal equality; over a
    /// constant base ring it is equality of divisor closures.
    pub fn same_ideal(&self, other: &FracIdeal) -> bool {
        self.base == other.base && self.exponents == other.exponents
    }

    /// Ideal membership, available over the principal-ideal base rings
    /// (`Z`, `k[x]`), where the exponent vector determines the ideal: `x`
    /// belongs exactly when `val(v, x) ≥ e_v` everywhere.  Over a constant
    /// base ring the generator span is finer than the exponent vector, so
    /// the question is rejected rather than answered approximately.
    pub fn member(&self, x: &FieldElem) -> Result<bool> {
        if self.base.has_infinity_place() {
            return Err(Error::RequiresPidBase);
        }
        self.exponent_module().member(x)
    }

    /// The module cut out by the exponent vector over all places.
    fn exponent_module(&self) -> GenModule {
        GenModule {
            constraint: ZarSubset::all_places(&self.base),
            exceptions: self.exponents.clone(),
        }
    }
}

/// A module of the form `{x ∈ K : val(v, x) ≥ e_v for all v in the
/// constraint set}`, with finitely many nonzero exponents.  These are
/// exactly the images of fractional ideals under the `∧_Y` operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenModule {
    /// The places where the constraint applies; the generic flag is
    /// irrelevant and kept off.
    constraint: ZarSubset,
    /// Exponents differing from the default 0, all at constraint places.
    exceptions: BTreeMap<Place, i64>,
}

impl GenModule {
    /// Builds a module from a constraint set and exponent exceptions.  The
    /// exceptions must sit on constraint places; zero exponents and the
    /// generic flag are dropped to keep the form canonical.
    pub fn new(constraint: &ZarSubset, exceptions: BTreeMap<Place, i64>) -> Result<GenModule> {
        let constraint = constraint.with_generic(false);
        let mut clean = BTreeMap::new();
        for (v, e) in exceptions {
            if !constraint.contains_place(&v) {
                return Err(Error::InvalidSubset(format!(
                    "exception at {} lies outside the constraint set",
                    v.place_string()
                )));
            }
            if e != 0 {
                clean.insert(v, e);
            }
        }
        Ok(GenModule {
            constraint,
            exceptions: clean,
        })
    }

    /// The unconstrained module, i.e. the whole field `K`.
    pub fn unconstrained(base: &Base) -> GenModule {
        GenModule {
            constraint: ZarSubset::empty(base),
            exceptions: BTreeMap::new(),
        }
    }

    pub fn base(&self) -> &Base {
        self.constraint.base()
    }

    pub fn constraint(&self) -> &ZarSubset {
        &self.constraint
    }

    pub fn exceptions(&self) -> &BTreeMap<Place, i64> {
        &self.exceptions
    }

    pub fn exponent_at(&self, v: &Place) -> i64 {
        self.exceptions.get(v).copied().unwrap_or(0)
    }

    /// Membership: zero always belongs; a nonzero element belongs when its
    /// valuation meets the exponent at every constraint place.  Only the
    /// element's support and the finitely many exceptions can fail, so the
    /// check is finite.
    pub fn member(&self, x: &FieldElem) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        let base = self.base();
        let mut places: BTreeSet<Place> = self.exceptions.keys().cloned().collect();
        for (v, _) in support(base, x)? {
            places.insert(v);
        }
        for v in places {
            if self.constraint.contains_place(&v) && val(base, &v, x)? < self.exponent_at(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The module `xM` for nonzero `x`: every exponent shifts by the
    /// valuation of `x`.
    pub fn scale(&self, x: &FieldElem) -> Result<GenModule> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let base = *self.base();
        let mut keys: BTreeSet<Place> = self.exceptions.keys().cloned().collect();
        for (v, _) in support(&base, x)? {
            if self.constraint.contains_place(&v) {
                keys.insert(v);
            }
        }
        let mut exceptions = BTreeMap::new();
        for v in keys {
            let e = self.exponent_at(&v) + val(&base, &v, x)?;
            if e != 0 {
                exceptions.insert(v, e);
            }
        }
        Ok(GenModule {
            constraint: self.constraint.clone(),
            exceptions,
        })
    }

    /// Applies `∧_Y` to the module itself: constraints restrict to the
    /// intersection with `Y`'s places.  Images of `∧_Y` are fixed points.
    pub fn wedge(&self, s: &StarSpec) -> GenModule {
        let constraint = self.constraint.intersect(&s.y().with_generic(false));
        let exceptions = self
            .exceptions
            .iter()
            .filter(|(v, _)| constraint.contains_place(v))
            .map(|(v, e)| (v.clone(), *e))
            .collect();
        GenModule {
            constraint,
            exceptions,
        }
    }
}

/// The data determining one operation `∧_Y`: a nonempty subset of the
/// space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarSpec {
    y: ZarSubset,
}

impl StarSpec {
    pub fn new(y: ZarSubset) -> Result<StarSpec> {
        if y.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(StarSpec { y })
    }

    pub fn y(&self) -> &ZarSubset {
        &self.y
    }
}

/// The image `I^{∧_Y}`: the exponent vector of `I` restricted to the place
/// part of `Y` (the generic point imposes no constraint).
pub fn apply_wedge(s: &StarSpec, ideal: &FracIdeal) -> GenModule {
    assert!(
        s.y.base() == ideal.base(),
        "star spec and ideal over different bases: {} vs {}",
        s.y.base().name(),
        ideal.base().name()
    );
    let constraint = s.y.with_generic(false);
    let exceptions = ideal
        .exponents
        .iter()
        .filter(|(v, _)| constraint.contains_place(v))
        .map(|(v, e)| (v.clone(), *e))
        .collect();
    GenModule {
        constraint,
        exceptions,
    }
}

/// The b-operation: `∧_Y` for `Y` the whole space.  Over these integrally
/// closed base rings it fixes every finitely generated ideal.
pub fn b_apply(ideal: &FracIdeal) -> GenModule {
    let whole = StarSpec::new(ZarSubset::whole(ideal.base())).expect("whole space is nonempty");
    apply_wedge(&whole, ideal)
}

/// Containment `m2 ⊆ m1`, decided on constraints: every constraint of `m1`
/// must be implied by those of `m2`, i.e. the constraint set of `m1` is
/// contained in that of `m2` and `m1`'s exponents are at most `m2`'s there.
/// The decision is exact: a violated constraint yields an explicit element
/// of the gap (see [`module_gap_witness`]).
pub fn gen_contains(m1: &GenModule, m2: &GenModule) -> bool {
    assert!(
        m1.base() == m2.base(),
        "modules over different bases: {} vs {}",
        m1.base().name(),
        m2.base().name()
    );
    if !m1.constraint.is_subset_of(&m2.constraint) {
        return false;
    }
    for v in m1.exceptions.keys().chain(m2.exceptions.keys()) {
        if m1.constraint.contains_place(v) && m1.exponent_at(v) > m2.exponent_at(v) {
            return false;
        }
    }
    true
}

/// An element of `m2 ∖ m1` when `m2 ⊄ m1`, `None` when `m2 ⊆ m1`.  The
/// witness makes [`gen_contains`] refutations checkable by membership.
pub fn module_gap_witness(m1: &GenModule, m2: &GenModule) -> Result<Option<FieldElem>> {
    if gen_contains(m1, m2) {
        return Ok(None);
    }
    let base = *m1.base();
    // An element satisfying all of m2's constraints away from a chosen
    // place: the product of uniformizer powers at m2's positive exceptions.
    let backbone = |skip: Option<&Place>| -> Result<FieldElem> {
        let mut out = FieldElem::one(&base);
        for (q, e) in &m2.exceptions {
            if Some(q) == skip || *e <= 0 {
                continue;
            }
            let u = uniformizer(&base, q)?;
            out = out.mul(&u.pow(*e).expect("nonzero power"));
        }
        Ok(out)
    };
    let gap = m1.constraint.minus(&m2.constraint).with_generic(false);
    if let Some(v) = some_place_in(&gap)? {
        // m2 does not constrain v at all: take a pole there deep enough to
        // violate m1's exponent.
        let depth = m1.exponent_at(&v).abs() + 1;
        let pole = pole_at(&base, &v)?.pow(depth).expect("nonzero power");
        return Ok(Some(backbone(None)?.mul(&pole)));
    }
    for v in m1.exceptions.keys().chain(m2.exceptions.keys()) {
        if m1.constraint.contains_place(v) && m1.exponent_at(v) > m2.exponent_at(v) {
            // Meet m2's exponent exactly at v; that already undershoots m1.
            let u = uniformizer(&base, v)?.pow(m2.exponent_at(v)).expect("nonzero power");
            return Ok(Some(backbone(Some(v))?.mul(&u)));
        }
    }
    Err(Error::InternalCheckFailed(String::from(
        "containment refuted but no witness constructed",
    )))
}

/// An element with valuation exactly one at the place and zero elsewhere.
pub(crate) fn uniformizer(base: &Base, v: &Place) -> Result<FieldElem> {
    Ok(pole_at(base, v)?
        .inv()
        .expect("pole elements are nonzero"))
}

/// The hat completion of a nonempty subset: generalizations of the
/// constructible closure.  Two subsets induce the same finite-type
/// operation exactly when their hats agree.
pub fn hat_closure(y: &ZarSubset) -> Result<ZarSubset> {
    if y.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(y.inv_closure())
}

/// Whether `∧_{Y1}` and `∧_{Y2}` agree as finite-type operations, decided
/// structurally as equality of hat completions.
pub fn wedge_ft_equal(y1: &ZarSubset, y2: &ZarSubset) -> Result<bool> {
    Ok(hat_closure(y1)? == hat_closure(y2)?)
}

/// An ideal whose wedge images distinguish `∧_{Y1}` from `∧_{Y2}`, when
/// the two differ; `None` when they agree.  The construction targets a
/// place in the symmetric difference of the hat completions: the ideal
/// with a single pole there.
pub fn separating_ideal(y1: &ZarSubset, y2: &ZarSubset) -> Result<Option<FracIdeal>> {
    let h1 = hat_closure(y1)?;
    let h2 = hat_closure(y2)?;
    if h1 == h2 {
        return Ok(None);
    }
    let p1 = h1.with_generic(false);
    let p2 = h2.with_generic(false);
    let diff = p1.minus(&p2).union(&p2.minus(&p1));
    let v = some_place_in(&diff)?.ok_or_else(|| {
        Error::InternalCheckFailed(String::from(
            "distinct hat completions with empty symmetric difference",
        ))
    })?;
    let base = *y1.base();
    Ok(Some(FracIdeal::principal(&base, &pole_at(&base, &v)?)?))
}

/// The valuation rings `V` with `F^{∧_Y} ⊆ FV` for every ideal `F`:
/// exactly the hat completion of `Y`.  Members keep every wedge image
/// inside their extension because their place carries the constraint;
/// outsiders fail on the ideal with a pole at their place.
pub fn star_valuation_overrings(s: &StarSpec) -> Result<ZarSubset> {
    hat_closure(&s.y)
}

/// The canonical complete subset inducing the same finite-type operation:
/// the hat completion, verified closed under the operations that
/// completeness demands (proconstructible, fixed under generalization and
/// under another hat) before being returned.
pub fn complete_witness(y: &ZarSubset) -> Result<ZarSubset> {
    let hat = hat_closure(y)?;
    if !hat.is_proconstructible()
        || hat.gen_closure() != hat
        || hat_closure(&hat)? != hat
        || !wedge_ft_equal(y, &hat)?
    {
        return Err(Error::InternalCheckFailed(String::from(
            "hat completion failed its closure contract",
        )));
    }
    Ok(hat)
}

/// One row of an e.a.b. report: the cancellation check on a triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EabReport {
    /// Triples examined.
    pub checked: usize,
    /// Triples where the premise `(FG)^⋆ ⊆ (FH)^⋆` held.
    pub premise_held: usize,
    /// Descriptions of triples violating the implication (none expected).
    pub violations: Vec<String>,
}

impl EabReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the e.a.b. property of `∧_Y` on a list of triples: whenever
/// `(FG)^⋆ ⊆ (FH)^⋆`, also `G^⋆ ⊆ H^⋆`.  The operation cancels because
/// exponents subtract placewise.
pub fn eab_check(s: &StarSpec, triples: &[(FracIdeal, FracIdeal, FracIdeal)]) -> EabReport {
    let mut report = EabReport {
        checked: 0,
        premise_held: 0,
        violations: Vec::new(),
    };
    for (f, g, h) in triples {
        report.checked += 1;
        let fg = apply_wedge(s, &f.mul(g));
        let fh = apply_wedge(s, &f.mul(h));
        if gen_contains(&fh, &fg) {
            report.premise_held += 1;
            if !gen_contains(&apply_wedge(s, h), &apply_wedge(s, g)) {
                report.violations.push(format!(
                    "cancellation failed on exponents F={:?} G={:?} H={:?}",
                    f.exponents, g.exponents, h.exponents
                ));
            }
        }
    }
    report
}

/// Outcome of a vacancy check on one subset.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VacancyOutcome {
    /// The subset does not represent the base ring, so the vacancy claim
    /// does not apply to it.
    Vacuous,
    /// The subset represents the base ring and its hat completion is the
    /// whole space, as vacancy demands.
    Pass,
    /// The subset represents the base ring but its hat completion misses
    /// part of the space (never expected over these bases).
    Fail,
}

fn require_ring_base(base: &Base) -> Result<()> {
    if base.has_infinity_place() {
        return Err(Error::RequiresPidBase);
    }
    Ok(())
}

/// Vacancy check for one subset over a base ring `Z` or `k[x]`: if the
/// subset represents the base ring, its hat completion must be the whole
/// space.
pub fn vacancy_check(y: &ZarSubset) -> Result<VacancyOutcome> {
    require_ring_base(y.base())?;
    if y.is_empty() {
        return Err(Error::EmptySubset);
    }
    if representation_witness(y)?.is_some() {
        return Ok(VacancyOutcome::Vacuous);
    }
    if hat_closure(y)? == ZarSubset::whole(y.base()) {
        Ok(VacancyOutcome::Pass)
    } else {
        Ok(VacancyOutcome::Fail)
    }
}

/// Whether the base ring (`Z` or `k[x]`) is vacant: every subset
/// representing it induces, after completion, the b-operation.  True here
/// by structure, with the argument returned alongside: omitting any place
/// `v` admits the pole element at `v` into the intersection ring, so a
/// representation must use every place and its hat completion is the whole
/// space.
pub fn is_vacant_base(base: &Base) -> Result<(bool, String)> {
    require_ring_base(base)?;
    Ok((
        true,
        String::from(
            "omitting any place admits its pole element into the \
             intersection ring, so every representation carries the full \
             place set and completes to the whole space",
        ),
    ))
}
