//! Subsets of the one-dimensional Zariski–Riemann space and their closures,
//! ultrafilter limit points, and intersection rings.
//!
//! The space consists of the generic point `K` and one closed point per
//! place.  Every basic open `B_x = {V : x ∈ V}` contains `K` and excludes
//! only the finitely many poles of `x`, so the Boolean algebra generated by
//! the basic opens traces out exactly the subsets representable here: a
//! finite or cofinite set of places together with an optional generic
//! point.  On that algebra the Zariski, inverse, and constructible closures
//! are all decidable, and ultrafilters collapse to finitely many trace
//! classes: one principal class per point plus a single free class on every
//! infinite subset.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{
    enumerate_places, pole_at, support, Base, FieldElem, Place, PlaceWindow, SpacePoint,
};
use crate::Result;

/// A subset of the space: a finite or cofinite set of places, plus the
/// generic point or not.
///
/// This is exactly the class of subsets reachable from the basic opens by
/// Boolean operations, and it is closed under all operations provided here.
/// Structural equality is extensional equality because the place set of
/// every base pair is infinite (a finite set never equals a cofinite one).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZarSubset {
    base: Base,
    /// When false, `places` lists the members; when true, the subset holds
    /// every place except those listed.
    cofinite: bool,
    places: BTreeSet<Place>,
    generic: bool,
}

impl ZarSubset {
    fn validated(self) -> Result<ZarSubset> {
        for v in &self.places {
            if !v.matches_base(&self.base) {
                return Err(Error::PlaceBaseMismatch(v.place_string()));
            }
        }
        Ok(self)
    }

    /// The subset holding exactly the listed places (plus the generic point
    /// if requested).
    pub fn finite(
        base: &Base,
        places: impl IntoIterator<Item = Place>,
        generic: bool,
    ) -> Result<ZarSubset> {
        ZarSubset {
            base: *base,
            cofinite: false,
            places: places.into_iter().collect(),
            generic,
        }
        .validated()
    }

    /// The subset holding every place except the listed ones (plus the
    /// generic point if requested).
    pub fn cofinite(
        base: &Base,
        exceptions: impl IntoIterator<Item = Place>,
        generic: bool,
    ) -> Result<ZarSubset> {
        ZarSubset {
            base: *base,
            cofinite: true,
            places: exceptions.into_iter().collect(),
            generic,
        }
        .validated()
    }

    pub fn empty(base: &Base) -> ZarSubset {
        ZarSubset {
            base: *base,
            cofinite: false,
            places: BTreeSet::new(),
            generic: false,
        }
    }

    /// The whole space: every place and the generic point.
    pub fn whole(base: &Base) -> ZarSubset {
        ZarSubset {
            base: *base,
            cofinite: true,
            places: BTreeSet::new(),
            generic: true,
        }
    }

    /// Every place, without the generic point.
    pub fn all_places(base: &Base) -> ZarSubset {
        ZarSubset {
            base: *base,
            cofinite: true,
            places: BTreeSet::new(),
            generic: false,
        }
    }

    /// Just the generic point.
    pub fn generic_only(base: &Base) -> ZarSubset {
        ZarSubset {
            base: *base,
            cofinite: false,
            places: BTreeSet::new(),
            generic: true,
        }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn contains_generic(&self) -> bool {
        self.generic
    }

    /// Whether the place part is cofinite (hence infinite).
    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    /// The listed places: the members in finite mode, the exceptions in
    /// cofinite mode.
    pub fn listed_places(&self) -> &BTreeSet<Place> {
        &self.places
    }

    /// A copy with the generic point forced in or out.
    pub fn with_generic(&self, generic: bool) -> ZarSubset {
        ZarSubset {
            generic,
            ..self.clone()
        }
    }

    pub fn contains_place(&self, v: &Place) -> bool {
        self.cofinite != self.places.contains(v)
    }

    pub fn contains(&self, pt: &SpacePoint) -> bool {
        match pt {
            SpacePoint::Generic => self.generic,
            SpacePoint::Pt(v) => self.contains_place(v),
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.generic && !self.cofinite && self.places.is_empty()
    }

    fn assert_same_base(&self, other: &ZarSubset) {
        assert!(
            self.base == other.base,
            "subsets of different spaces: {} vs {}",
            self.base.name(),
            other.base.name()
        );
    }

    pub fn union(&self, other: &ZarSubset) -> ZarSubset {
        self.assert_same_base(other);
        let (cofinite, places) = match (self.cofinite, other.cofinite) {
            (false, false) => (false, self.places.union(&other.places).cloned().collect()),
            (true, true) => (
                true,
                self.places.intersection(&other.places).cloned().collect(),
            ),
            (true, false) => (true, self.places.difference(&other.places).cloned().collect()),
            (false, true) => (true, other.places.difference(&self.places).cloned().collect()),
        };
        ZarSubset {
            base: self.base,
            cofinite,
            places,
            generic: self.generic || other.generic,
        }
    }

    pub fn intersect(&self, other: &ZarSubset) -> ZarSubset {
        self.complement().union(&other.complement()).complement()
    }

    pub fn complement(&self) -> ZarSubset {
        ZarSubset {
            base: self.base,
            cofinite: !self.cofinite,
            places: self.places.clone(),
            generic: !self.generic,
        }
    }

    pub fn minus(&self, other: &ZarSubset) -> ZarSubset {
        self.intersect(&other.complement())
    }

    pub fn is_subset_of(&self, other: &ZarSubset) -> bool {
        self.minus(other).is_empty()
    }

    /// Closure under specialization.  The generic point specializes to
    /// everything, so the closure is the whole space as soon as the subset
    /// contains it; places are closed points and add nothing.
    pub fn sp_closure(&self) -> ZarSubset {
        if self.generic {
            ZarSubset::whole(&self.base)
        } else {
            self.clone()
        }
    }

    /// Closure under generalization: every nonempty subset picks up the
    /// generic point, which generalizes every place.
    pub fn gen_closure(&self) -> ZarSubset {
        if self.is_empty() {
            self.clone()
        } else {
            self.with_generic(true)
        }
    }

    /// Closure in the constructible topology: the set of limit points along
    /// all ultrafilter classes.  Principal classes return the points of the
    /// subset itself; the free class on an infinite place part converges to
    /// the generic point.  Finite subsets are already closed.
    pub fn cons_closure(&self) -> ZarSubset {
        if self.cofinite {
            self.with_generic(true)
        } else {
            self.clone()
        }
    }

    /// Closure in the Zariski topology: specializations of the
    /// constructible closure.
    pub fn zar_closure(&self) -> ZarSubset {
        self.cons_closure().sp_closure()
    }

    /// Closure in the inverse topology: generalizations of the
    /// constructible closure.
    pub fn inv_closure(&self) -> ZarSubset {
        self.cons_closure().gen_closure()
    }

    /// Whether the subset is closed in the constructible topology.
    pub fn is_proconstructible(&self) -> bool {
        self.cons_closure() == *self
    }

    /// Whether the subset is quasi-compact in the Zariski topology.  Finite
    /// subsets are; an infinite place part needs the generic point, since
    /// the basic opens `B_x` containing a given place exclude only finitely
    /// many others, and a cover of an infinite discrete family of closed
    /// points admits no finite subcover without the point whose
    /// neighbourhoods are cofinite.
    pub fn is_quasicompact_zar(&self) -> bool {
        !self.cofinite || self.generic
    }

    /// Whether every nonzero element of `K` is a non-unit at only finitely
    /// many members of the subset.  In these one-dimensional spaces every
    /// nonzero element has finitely many zeros and poles, so the answer is
    /// always yes; the accompanying explanation says why.
    pub fn is_locally_finite(&self) -> (bool, String) {
        (
            true,
            String::from(
                "every nonzero element of K has finite support, so it is a \
                 non-unit at only finitely many places",
            ),
        )
    }

    /// The trace classes of ultrafilters on the subset: one principal class
    /// per point, plus the free class exactly when the place part is
    /// infinite.  The principal family is indexed by the subset itself, so
    /// cofinite subsets stay finitely described.
    pub fn ultrafilter_classes(&self) -> Result<UltrafilterClasses> {
        if self.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(UltrafilterClasses {
            points: self.clone(),
            has_free: self.cofinite,
        })
    }

    /// The limit point of the subset along one ultrafilter class: the
    /// center of a principal class, the generic point for the free class
    /// (for every nonzero `x`, `B_x` meets the subset in a cofinite set,
    /// which belongs to every free ultrafilter, so every `x` survives).
    pub fn limit_point(&self, class: &UltrafilterClass) -> Result<SpacePoint> {
        match class {
            UltrafilterClass::Principal(pt) => {
                if !self.contains(pt) {
                    return Err(Error::ClassSubsetMismatch(alloc::format!(
                        "principal center {} lies outside the subset",
                        pt.point_string()
                    )));
                }
                Ok(pt.clone())
            }
            UltrafilterClass::Free => {
                if !self.cofinite {
                    return Err(Error::ClassSubsetMismatch(String::from(
                        "free class needs an infinite place part",
                    )));
                }
                Ok(SpacePoint::Generic)
            }
        }
    }
}

/// A trace class of ultrafilters on a subset: principal at one of its
/// points, or the common class of all free ultrafilters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum UltrafilterClass {
    Principal(SpacePoint),
    Free,
}

/// The family of ultrafilter classes of a subset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UltrafilterClasses {
    /// The index of the principal classes: the subset's own points.
    pub points: ZarSubset,
    /// Whether the free class is present (infinite place part).
    pub has_free: bool,
}

impl UltrafilterClasses {
    pub fn is_class(&self, class: &UltrafilterClass) -> bool {
        match class {
            UltrafilterClass::Principal(pt) => self.points.contains(pt),
            UltrafilterClass::Free => self.has_free,
        }
    }

    /// The full class list when the subset is finite; `None` for cofinite
    /// subsets, whose principal family is infinite.
    pub fn explicit(&self) -> Option<Vec<UltrafilterClass>> {
        if self.points.is_cofinite() {
            return None;
        }
        let mut out = Vec::new();
        if self.points.contains_generic() {
            out.push(UltrafilterClass::Principal(SpacePoint::Generic));
        }
        for v in self.points.listed_places() {
            out.push(UltrafilterClass::Principal(SpacePoint::Pt(v.clone())));
        }
        Some(out)
    }
}

/// The basic open subset `B_x = {V : x ∈ V}` for nonzero `x`: the generic
/// point plus every place where `x` has no pole.
pub fn b_x(base: &Base, x: &FieldElem) -> Result<ZarSubset> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut excluded = BTreeSet::new();
    for (v, e) in support(base, x)? {
        if e < 0 {
            excluded.insert(v);
        }
    }
    ZarSubset::cofinite(base, excluded, true)
}

/// The basic open at a finite family: the valuation rings containing every
/// member, i.e. the intersection of the `B_x`.  The empty family gives the
/// whole space.
pub fn b_f(base: &Base, family: &[FieldElem]) -> Result<ZarSubset> {
    let mut out = ZarSubset::whole(base);
    for x in family {
        out = out.intersect(&b_x(base, x)?);
    }
    Ok(out)
}

/// The intersection ring of a family of valuation rings, described by its
/// constraint set: the ring `{x ∈ K : val(v, x) ≥ 0 for every v in the
/// set}`.  The generic point contributes nothing (intersecting with `K` is
/// the identity), so only the place part is kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntersectionRing {
    constraint: ZarSubset,
}

impl IntersectionRing {
    pub fn constraint(&self) -> &ZarSubset {
        &self.constraint
    }

    /// Membership test.  Zero belongs to every ring; a nonzero element
    /// belongs exactly when none of its poles is a constraint place, which
    /// is a finite check because supports are finite.
    pub fn member(&self, x: &FieldElem) -> Result<bool> {
        if x.is_zero() {
            return Ok(true);
        }
        for (v, e) in support(self.constraint.base(), x)? {
            if e < 0 && self.constraint.contains_place(&v) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The intersection ring of a nonempty subset of the space.
pub fn intersection_ring(y: &ZarSubset) -> Result<IntersectionRing> {
    if y.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(IntersectionRing {
        constraint: y.with_generic(false),
    })
}

/// The center of a point on the base ring `A`: the prime of `A` under the
/// point's maximal ideal.  The generic point centers on the zero ideal; a
/// place centers on the prime generated by its uniformizer, except that
/// over a constant base ring (`F_p`) every nonzero valuation still centers
/// on the zero ideal, the only prime of a field.
pub fn center(base: &Base, pt: &SpacePoint) -> String {
    match pt {
        SpacePoint::Generic => String::from("(0)"),
        SpacePoint::Pt(v) => {
            if base.has_infinity_place() {
                // A is the constant field; its only prime is (0).
                return String::from("(0)");
            }
            match v {
                Place::Prime(p) => alloc::format!("({})", p),
                Place::IrrQ(_) | Place::IrrFp { .. } => {
                    let s = v.place_string();
                    alloc::format!("({})", s.trim_start_matches("q:"))
                }
                Place::Infinity => String::from("(0)"),
            }
        }
    }
}

/// A witness that `Y` fails to represent `A`, if any: an element of the
/// intersection ring of `Y` that lies outside `A`.  `None` means the
/// intersection ring is exactly `A`, which happens precisely when the place
/// part of `Y` is all places: removing even one place `v` admits the
/// element with a single pole at `v`.
pub fn representation_witness(y: &ZarSubset) -> Result<Option<FieldElem>> {
    if y.is_cofinite() {
        match y.listed_places().iter().next() {
            None => Ok(None),
            Some(v) => Ok(Some(pole_at(y.base(), v)?)),
        }
    } else {
        // Finite place part: some small place is missing; its pole element
        // lies in the intersection ring but not in A.
        let v = first_place_outside(y)?;
        Ok(Some(pole_at(y.base(), &v)?))
    }
}

/// Some place belonging to the subset, if any: the first listed place in
/// finite mode, otherwise the first place found by enumerating windows of
/// increasing size and skipping the exceptions (cofinite place parts are
/// infinite, so the search always succeeds).
pub fn some_place_in(y: &ZarSubset) -> Result<Option<Place>> {
    if !y.is_cofinite() {
        return Ok(y.listed_places().iter().next().cloned());
    }
    let heights = [4u64, 16, 64, 256, 1024];
    for (step, &height) in heights.iter().enumerate() {
        let window = match y.base() {
            Base::QZ => PlaceWindow {
                bound: height * height,
                height: 0,
            },
            Base::QxQx => PlaceWindow {
                bound: 1 + step as u64,
                height,
            },
            Base::FpxFpx { .. } | Base::FpxFp { .. } => PlaceWindow {
                bound: 1 + step as u64,
                height: 0,
            },
        };
        for v in enumerate_places(y.base(), &window)? {
            if y.contains_place(&v) {
                return Ok(Some(v));
            }
        }
    }
    Err(Error::InternalCheckFailed(String::from(
        "no member of a cofinite place part found within the search window",
    )))
}

/// Finds a place not contained in the (finite-place-part) subset.
fn first_place_outside(y: &ZarSubset) -> Result<Place> {
    debug_assert!(!y.is_cofinite());
    let outside = ZarSubset::cofinite(y.base(), y.listed_places().iter().cloned(), false)?;
    some_place_in(&outside)?.ok_or_else(|| {
        Error::InternalCheckFailed(String::from(
            "no place outside a finite subset found within the search window",
        ))
    })
}

/// Result of checking that subsets with equal constructible closures have
/// equal intersection rings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureRingCheck {
    pub closures_equal: bool,
    pub rings_equal: bool,
    /// The implication `closures equal ⟹ rings equal` on this pair.
    pub holds: bool,
}

/// Checks on one pair of nonempty subsets that equality of constructible
/// closures forces equality of intersection rings.  Ring equality is
/// equality of constraint sets, which is faithful here: distinct place sets
/// are separated by an element with a pole at a place in the difference.
pub fn closure_determines_ring(y1: &ZarSubset, y2: &ZarSubset) -> Result<ClosureRingCheck> {
    if y1.is_empty() || y2.is_empty() {
        return Err(Error::EmptySubset);
    }
    let closures_equal = y1.cons_closure() == y2.cons_closure();
    let rings_equal = intersection_ring(y1)? == intersection_ring(y2)?;
    Ok(ClosureRingCheck {
        closures_equal,
        rings_equal,
        holds: !closures_equal || rings_equal,
    })
}

/// For a subset representing `A` (intersection ring exactly `A`), checks
/// that every place whose center is a maximal ideal of `A` lies in the
/// constructible closure.  In these one-dimensional spaces every place
/// centers on a maximal ideal (for a constant base ring the zero ideal is
/// the maximal ideal), so the check is that all places lie in the closure.
/// Subsets that do not represent `A` are rejected with a witness.
pub fn max_centers_in_closure(y: &ZarSubset) -> Result<bool> {
    if let Some(w) = representation_witness(y)? {
        return Err(Error::NotRepresentation(w.elem_string()));
    }
    let all = ZarSubset::all_places(y.base());
    Ok(all.is_subset_of(&y.cons_closure()))
}
