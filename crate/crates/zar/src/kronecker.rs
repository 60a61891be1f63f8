//! Kronecker function rings: trivial extensions of valuation rings to
//! `K(T)` and the rings they cut out.
//!
//! Every valuation ring `V` of `K` extends trivially to `K(T)` through the
//! Gauss valuation (minimum over coefficients); the trivial extension
//! `V(T)` consists of the fractions whose numerator Gauss valuation
//! dominates the denominator's.  A nonempty subset `Y` of the space yields
//! the ring `Kr(Y) = ∩{V(T) : V ∈ Y}`, represented here intensionally by
//! its membership predicate: only the places in the coefficient supports
//! can refuse an element, so membership is a finite check.  The same ring
//! arises from the semistar side by comparing wedge images of coefficient
//! contents, and the two routes are kept in agreement.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::{support, val, Base, FieldElem, Place, RatFunOps};
use crate::poly::PolyRing;
use crate::semistar::{apply_wedge, gen_contains, uniformizer, FracIdeal, StarSpec};
use crate::space::ZarSubset;
use crate::tpoly::{coefficient_places, gauss_val, KField, TPoly, TRatFun};
use crate::Result;

/// The ring `Kr(Y) = ∩{V(T) : V ∈ Y}` for a nonempty subset `Y`.  The
/// generic point contributes only the constraint of lying in `K(T)`, which
/// every representable element satisfies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KrSpec {
    base: Base,
    y: ZarSubset,
}

impl KrSpec {
    pub fn new(y: ZarSubset) -> Result<KrSpec> {
        if y.is_empty() {
            return Err(Error::EmptySubset);
        }
        Ok(KrSpec { base: *y.base(), y })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn subset(&self) -> &ZarSubset {
        &self.y
    }
}

/// Whether `h` lies in the trivial extension `V(T)` of the valuation ring
/// at `place`: the Gauss valuation of the (reduced) numerator is at least
/// that of the denominator.
pub fn in_trivial_extension(base: &Base, place: &Place, h: &TRatFun) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(gauss_val(base, place, h.num())? >= gauss_val(base, place, h.den())?)
}

/// The first place of `Y` refusing `h`, or `None` when `h ∈ Kr(Y)`.  Zero
/// belongs to every ring.  Only places in the coefficient supports of the
/// numerator and denominator can refuse, so the scan is finite.
pub fn kr_violation(spec: &KrSpec, h: &TRatFun) -> Result<Option<Place>> {
    if h.is_zero() {
        return Ok(None);
    }
    let mut places: BTreeSet<Place> = coefficient_places(&spec.base, h.num())?;
    places.extend(coefficient_places(&spec.base, h.den())?);
    for v in places {
        if spec.y.contains_place(&v) && !in_trivial_extension(&spec.base, &v, h)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Membership in `Kr(Y)`.
pub fn kr_member(spec: &KrSpec, h: &TRatFun) -> Result<bool> {
    Ok(kr_violation(spec, h)?.is_none())
}

/// Report of the defining axioms of a K-function ring checked on samples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    /// Samples examined (besides the two fixed elements `T` and `1/T`).
    pub checked: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies the K-function ring axioms for `Kr(Y)`: `T` and `1/T` belong,
/// and `f(0)/f` belongs for every sample `f` with `f(0) ≠ 0`.  Samples must
/// be nonzero.
pub fn kfr_axiom_check(spec: &KrSpec, samples: &[TPoly]) -> Result<AxiomReport> {
    let k = KField::new(&spec.base);
    let mut violations = Vec::new();
    let t = k.r_from_poly(k.p_x());
    if !kr_member(spec, &t)? {
        violations.push(String::from("T refused"));
    }
    let t_inv = k.r_new(k.p_one(), k.p_x())?;
    if !kr_member(spec, &t_inv)? {
        violations.push(String::from("1/T refused"));
    }
    for f in samples {
        if f.is_zero() {
            return Err(Error::ZeroElement);
        }
        let at_zero = k.p_eval(f, &FieldElem::zero(&spec.base));
        if at_zero.is_zero() {
            // 0 belongs to every ideal; nothing to check.
            continue;
        }
        let h = k.r_new(k.p_const(at_zero), f.clone())?;
        if !kr_member(spec, &h)? {
            violations.push(format!("f(0)/f refused for f = {}", k.p_string(f, "T")));
        }
    }
    Ok(AxiomReport {
        checked: samples.len(),
        violations,
    })
}

/// Report of the content formula `(f_0, …, f_r)Kr = f·Kr` checked on one
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContentReport {
    /// Coefficient inclusions `f_i/f ∈ Kr` verified.
    pub coefficient_checks: usize,
    /// Placewise reverse inclusions `f/c ∈ V(T)` verified.
    pub placewise_checks: usize,
    pub violations: Vec<String>,
}

impl ContentReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the content formula for nonzero `f`: every coefficient satisfies
/// `f_i/f ∈ Kr(Y)` (so the coefficient ideal sits inside `f·Kr`), and at
/// each relevant place a coefficient of minimal Gauss valuation `c`
/// witnesses `f/c ∈ V(T)` (so the inclusion is an equality placewise).
pub fn content_formula_check(spec: &KrSpec, f: &TPoly) -> Result<ContentReport> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let k = KField::new(&spec.base);
    let mut report = ContentReport {
        coefficient_checks: 0,
        placewise_checks: 0,
        violations: Vec::new(),
    };
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        report.coefficient_checks += 1;
        let h = k.r_new(k.p_const(c.clone()), f.clone())?;
        if !kr_member(spec, &h)? {
            report
                .violations
                .push(format!("coefficient {i} escapes f·Kr"));
        }
    }
    for v in coefficient_places(&spec.base, f)? {
        if !spec.y.contains_place(&v) {
            continue;
        }
        report.placewise_checks += 1;
        let target = gauss_val(&spec.base, &v, f)?;
        let c = f
            .coeffs()
            .iter()
            .find(|c| !c.is_zero() && val(&spec.base, &v, c).ok() == Some(target))
            .expect("a coefficient attains the minimum");
        let h = k.r_new(f.clone(), k.p_const(c.clone()))?;
        if !in_trivial_extension(&spec.base, &v, &h)? {
            report.violations.push(format!(
                "f/c escapes the trivial extension at {}",
                v.place_string()
            ));
        }
    }
    Ok(report)
}

/// The finite families `F_ij` whose basic opens cover the image of the
/// principal open at `h` under the restriction of valuations from `K(T)`
/// to `K`: for each pair of nonzero coefficients `a_i` of the numerator and
/// `b_j` of the denominator,
/// `F_ij = {a_i/b_j} ∪ {a_λ/a_i : all λ} ∪ {b_μ/b_j : all μ}`
/// (zero coefficients contribute nothing).
pub fn phi_pullback(
    base: &Base,
    h: &TRatFun,
) -> Result<Vec<((usize, usize), Vec<FieldElem>)>> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    let _ = base;
    let num = h.num().coeffs();
    let den = h.den().coeffs();
    let mut out = Vec::new();
    for (i, a_i) in num.iter().enumerate() {
        if a_i.is_zero() {
            continue;
        }
        for (j, b_j) in den.iter().enumerate() {
            if b_j.is_zero() {
                continue;
            }
            let mut family: BTreeSet<FieldElem> = BTreeSet::new();
            family.insert(a_i.div(b_j).expect("nonzero denominator coefficient"));
            for a_l in num.iter().filter(|c| !c.is_zero()) {
                family.insert(a_l.div(a_i).expect("nonzero pivot"));
            }
            for b_m in den.iter().filter(|c| !c.is_zero()) {
                family.insert(b_m.div(b_j).expect("nonzero pivot"));
            }
            out.push(((i, j), family.into_iter().collect()));
        }
    }
    Ok(out)
}

/// Rewrites `h` as a quotient of polynomials with coefficients in the base
/// ring, multiplying numerator and denominator by one common factor (which
/// leaves every Gauss-valuation comparison unchanged).  Over `Z` and `k[x]`
/// this always succeeds by clearing denominators; over a constant base ring
/// it succeeds exactly when all coefficient ratios are constants.
fn clear_to_base(base: &Base, h: &TRatFun) -> Result<(TPoly, TPoly)> {
    let k = KField::new(base);
    let coeffs: Vec<&FieldElem> = h
        .num()
        .coeffs()
        .iter()
        .chain(h.den().coeffs().iter())
        .filter(|c| !c.is_zero())
        .collect();
    let scale;
    if base.has_infinity_place() {
        let pivot = coeffs[0];
        for c in &coeffs {
            if !c.div(pivot).expect("nonzero pivot").is_constant() {
                return Err(Error::CoefficientOutsideBase(c.elem_string()));
            }
        }
        scale = pivot.inv().expect("nonzero pivot");
    } else {
        let mut clearing = FieldElem::one(base);
        let mut places: BTreeSet<Place> = BTreeSet::new();
        for c in &coeffs {
            for (v, _) in support(base, c)? {
                places.insert(v);
            }
        }
        for v in places {
            let mut e = 0i64;
            for c in &coeffs {
                e = e.min(val(base, &v, c)?);
            }
            if e < 0 {
                let u = uniformizer(base, &v)?;
                clearing = clearing.mul(&u.pow(-e).expect("nonzero power"));
            }
        }
        scale = clearing;
    }
    Ok((
        k.p_scale(h.num(), &scale),
        k.p_scale(h.den(), &scale),
    ))
}

/// Membership in `Kr(A, ∧_Y)`, decided through the semistar module: after
/// rewriting `h = f/g` with coefficients in the base ring, `h` belongs
/// exactly when `c(f)^{∧_Y} ⊆ c(g)^{∧_Y}` for the coefficient contents.
/// Agrees with [`kr_member`] on every such element.
pub fn kr_star_member(y: &ZarSubset, h: &TRatFun) -> Result<bool> {
    if y.is_empty() {
        return Err(Error::EmptySubset);
    }
    if h.is_zero() {
        return Ok(true);
    }
    let base = *y.base();
    let (f, g) = clear_to_base(&base, h)?;
    let content = |p: &TPoly| -> Result<FracIdeal> {
        FracIdeal::new(
            &base,
            p.coeffs().iter().filter(|c| !c.is_zero()).cloned().collect(),
        )
    };
    let s = StarSpec::new(y.clone())?;
    Ok(gen_contains(
        &apply_wedge(&s, &content(&g)?),
        &apply_wedge(&s, &content(&f)?),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational_string;
    use crate::space::b_f;
    use crate::tpoly::gauss_val_fun;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> FieldElem {
        FieldElem::ratio(&Base::QZ, n, d).unwrap()
    }

    /// A polynomial in T over Q from rational coefficient pairs, constant
    /// term first.
    fn tp(coeffs: &[(i64, i64)]) -> TPoly {
        let k = KField::new(&Base::QZ);
        k.p_new(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn tr(num: &[(i64, i64)], den: &[(i64, i64)]) -> TRatFun {
        let k = KField::new(&Base::QZ);
        k.r_new(tp(num), tp(den)).unwrap()
    }

    fn places(ps: &[u64]) -> BTreeSet<Place> {
        ps.iter().map(|&p| Place::Prime(p)).collect()
    }

    fn kr_all() -> KrSpec {
        KrSpec::new(ZarSubset::all_places(&Base::QZ)).unwrap()
    }

    #[test]
    fn trivial_extension_compares_gauss_valuations() {
        let b = Base::QZ;
        let two = Place::Prime(2);
        // T and 1/T always belong.
        assert!(in_trivial_extension(&b, &two, &tr(&[(0, 1), (1, 1)], &[(1, 1)])).unwrap());
        assert!(in_trivial_extension(&b, &two, &tr(&[(1, 1)], &[(0, 1), (1, 1)])).unwrap());
        // (2+T)/(1+2T): both Gauss valuations vanish at 2.
        assert!(
            in_trivial_extension(&b, &two, &tr(&[(2, 1), (1, 1)], &[(1, 1), (2, 1)])).unwrap()
        );
        // 1/2 has Gauss valuation -1 against 0.
        assert!(!in_trivial_extension(&b, &two, &tr(&[(1, 2)], &[(1, 1)])).unwrap());
        let zero = KField::new(&b).r_zero();
        assert!(matches!(
            in_trivial_extension(&b, &two, &zero),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn kr_membership_scans_support_places() {
        let spec = kr_all();
        assert!(kr_member(&spec, &tr(&[(2, 1), (1, 1)], &[(1, 1), (2, 1)])).unwrap());
        assert_eq!(
            kr_violation(&spec, &tr(&[(1, 2)], &[(1, 1)])).unwrap(),
            Some(Place::Prime(2))
        );
        // Away from its poles the element is accepted.
        let spec3 = KrSpec::new(ZarSubset::finite(&Base::QZ, places(&[3]), false).unwrap());
        assert!(kr_member(&spec3.unwrap(), &tr(&[(1, 2)], &[(1, 1)])).unwrap());
        // Zero belongs everywhere.
        let zero = KField::new(&Base::QZ).r_zero();
        assert!(kr_member(&spec, &zero).unwrap());
        assert!(matches!(
            KrSpec::new(ZarSubset::empty(&Base::QZ)),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn axioms_hold_on_samples() {
        let spec = kr_all();
        let report =
            kfr_axiom_check(&spec, &[tp(&[(2, 1), (1, 1)]), tp(&[(1, 1)]), tp(&[(0, 1), (3, 1)])])
                .unwrap();
        assert_eq!(report.checked, 3);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert!(matches!(
            kfr_axiom_check(&spec, &[tp(&[])]),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn content_formula_holds() {
        let spec = kr_all();
        let report = content_formula_check(&spec, &tp(&[(4, 1), (2, 1), (1, 1)])).unwrap();
        assert_eq!(report.coefficient_checks, 3);
        assert!(report.placewise_checks >= 1);
        assert!(report.passed(), "violations: {:?}", report.violations);
        // A constant passes trivially.
        let report = content_formula_check(&spec, &tp(&[(7, 2)])).unwrap();
        assert!(report.passed());
        assert!(matches!(
            content_formula_check(&spec, &tp(&[])),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn pullback_families_follow_the_formula() {
        // h = (2+T)/3.
        let got = phi_pullback(&Base::QZ, &tr(&[(2, 1), (1, 1)], &[(3, 1)])).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].0, (0, 0));
        assert_eq!(got[0].1, alloc::vec![q(1, 2), q(2, 3), q(1, 1)]);
        assert_eq!(got[1].0, (1, 0));
        assert_eq!(got[1].1, alloc::vec![q(1, 3), q(1, 1), q(2, 1)]);

        // Constant over constant: a single family describing B_{c/d}.
        let got = phi_pullback(&Base::QZ, &tr(&[(5, 1)], &[(7, 1)])).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].1, alloc::vec![q(5, 7), q(1, 1)]);

        // h = T: one family {1}, covering the whole space.
        let got = phi_pullback(&Base::QZ, &tr(&[(0, 1), (1, 1)], &[(1, 1)])).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].0, (1, 0));
        assert_eq!(got[0].1, alloc::vec![q(1, 1)]);
        let cover = b_f(&Base::QZ, &got[0].1).unwrap();
        assert_eq!(cover, ZarSubset::whole(&Base::QZ));
    }

    #[test]
    fn pullback_covers_exactly_the_accepting_places() {
        // Oracle: V_p accepts h iff some family F_ij lands inside V_p.
        let b = Base::QZ;
        let samples = [
            tr(&[(2, 1), (1, 1)], &[(3, 1)]),
            tr(&[(1, 2)], &[(1, 1)]),
            tr(&[(4, 3), (0, 1), (5, 1)], &[(9, 2), (1, 7)]),
            tr(&[(6, 1)], &[(0, 1), (0, 1), (1, 4)]),
        ];
        for h in &samples {
            let families = phi_pullback(&b, h).unwrap();
            let mut union = ZarSubset::empty(&b);
            for (_, family) in &families {
                union = union.union(&b_f(&b, family).unwrap());
            }
            let mut probes: BTreeSet<Place> = coefficient_places(&b, h.num()).unwrap();
            probes.extend(coefficient_places(&b, h.den()).unwrap());
            probes.extend([2u64, 3, 5, 7, 11, 13].map(Place::Prime));
            for v in probes {
                assert_eq!(
                    in_trivial_extension(&b, &v, h).unwrap(),
                    union.contains_place(&v),
                    "pullback mismatch at {}",
                    v.place_string()
                );
            }
        }
    }

    #[test]
    fn star_route_agrees_on_base_polynomials() {
        let b = Base::QZ;
        let all = ZarSubset::all_places(&b);
        // f = 2+4T over g = 2: contents (2,4) and (2) have equal images.
        assert!(kr_star_member(&all, &tr(&[(2, 1), (4, 1)], &[(2, 1)])).unwrap());
        // f = g.
        let h = tr(&[(3, 1), (7, 1)], &[(3, 1), (7, 1)]);
        assert!(kr_star_member(&all, &h).unwrap());
        // 1/2 is refused over all places but accepted away from 2.
        assert!(!kr_star_member(&all, &tr(&[(1, 2)], &[(1, 1)])).unwrap());
        let at3 = ZarSubset::finite(&b, places(&[3]), false).unwrap();
        assert!(kr_star_member(&at3, &tr(&[(1, 2)], &[(1, 1)])).unwrap());
        // Zero belongs.
        assert!(kr_star_member(&all, &KField::new(&b).r_zero()).unwrap());
    }

    #[test]
    fn star_route_over_constant_base_ring() {
        let b = Base::fpx_fp(2).unwrap();
        let k = KField::new(&b);
        let one = FieldElem::one(&b);
        let x = FieldElem::coordinate(&b).unwrap();
        let all = ZarSubset::all_places(&b);
        // (1 + T)/T with constant coefficients is clearable and accepted.
        let h = k
            .r_new(
                k.p_new(alloc::vec![one.clone(), one.clone()]),
                k.p_x(),
            )
            .unwrap();
        assert!(kr_star_member(&all, &h).unwrap());
        // A non-constant coefficient ratio cannot be cleared into F_p[T].
        let bad = k
            .r_new(k.p_new(alloc::vec![one.clone(), x.clone()]), k.p_one())
            .unwrap();
        assert!(matches!(
            kr_star_member(&all, &bad),
            Err(Error::CoefficientOutsideBase(_))
        ));
        // Joint scaling by x clears: (x + xT)/x reduces to the first case.
        let scaled = k
            .r_new(
                k.p_new(alloc::vec![x.clone(), x.clone()]),
                k.p_const(x.clone()),
            )
            .unwrap();
        assert!(kr_star_member(&all, &scaled).unwrap());
    }

    /// Multiplies `h` by a constant making it a member of the ring.
    fn force_member(spec: &KrSpec, h: &TRatFun) -> TRatFun {
        let k = KField::new(&spec.base);
        if h.is_zero() {
            return h.clone();
        }
        let mut fix = FieldElem::one(&spec.base);
        let mut places: BTreeSet<Place> = coefficient_places(&spec.base, h.num()).unwrap();
        places.extend(coefficient_places(&spec.base, h.den()).unwrap());
        for v in places {
            if !spec.y.contains_place(&v) {
                continue;
            }
            let gap = gauss_val_fun(&spec.base, &v, h).unwrap();
            if gap < 0 {
                let u = uniformizer(&spec.base, &v).unwrap();
                fix = fix.mul(&u.pow(-gap).unwrap());
            }
        }
        k.r_new(k.p_scale(h.num(), &fix), h.den().clone()).unwrap()
    }

    fn ratfun_strategy() -> impl Strategy<Value = TRatFun> {
        let coeff = || (-20i64..20, 1i64..12);
        (
            proptest::collection::vec(coeff(), 1..4),
            proptest::collection::vec(coeff(), 1..4),
        )
            .prop_filter_map("nonzero", |(n, d)| {
                let k = KField::new(&Base::QZ);
                let num = tp(&n);
                let den = tp(&d);
                if num.is_zero() || den.is_zero() {
                    return None;
                }
                Some(k.r_new(num, den).unwrap())
            })
    }

    fn subset_strategy() -> impl Strategy<Value = ZarSubset> {
        let pool: Vec<u64> = alloc::vec![2, 3, 5, 7, 11, 13];
        (
            proptest::bool::ANY,
            proptest::bool::ANY,
            proptest::collection::btree_set(0..pool.len(), 0..3),
        )
            .prop_map(move |(cofinite, generic, picks)| {
                let ps: BTreeSet<Place> =
                    picks.into_iter().map(|i| Place::Prime(pool[i])).collect();
                if cofinite {
                    ZarSubset::cofinite(&Base::QZ, ps, generic).unwrap()
                } else {
                    ZarSubset::finite(&Base::QZ, ps, generic).unwrap()
                }
            })
            .prop_filter("nonempty", |y| !y.is_empty())
    }

    proptest! {
        #[test]
        fn members_form_a_ring(h1 in ratfun_strategy(), h2 in ratfun_strategy()) {
            let spec = kr_all();
            let k = KField::new(&Base::QZ);
            let m1 = force_member(&spec, &h1);
            let m2 = force_member(&spec, &h2);
            prop_assert!(kr_member(&spec, &m1).unwrap());
            prop_assert!(kr_member(&spec, &m2).unwrap());
            prop_assert!(kr_member(&spec, &k.r_mul(&m1, &m2)).unwrap());
            prop_assert!(kr_member(&spec, &k.r_add(&m1, &m2)).unwrap());
        }

        #[test]
        fn pullback_matches_membership(h in ratfun_strategy(), extra in 0usize..6) {
            let b = Base::QZ;
            let families = phi_pullback(&b, &h).unwrap();
            let mut union = ZarSubset::empty(&b);
            for (_, family) in &families {
                union = union.union(&b_f(&b, family).unwrap());
            }
            let mut probes: BTreeSet<Place> = coefficient_places(&b, h.num()).unwrap();
            probes.extend(coefficient_places(&b, h.den()).unwrap());
            probes.insert(Place::Prime([2, 3, 5, 7, 11, 13][extra]));
            for v in probes {
                prop_assert_eq!(
                    in_trivial_extension(&b, &v, &h).unwrap(),
                    union.contains_place(&v)
                );
            }
        }

        #[test]
        fn membership_sees_only_the_hat(y in subset_strategy(), h in ratfun_strategy()) {
            let spec = KrSpec::new(y.clone()).unwrap();
            let hat_spec = KrSpec::new(y.inv_closure()).unwrap();
            prop_assert_eq!(
                kr_member(&spec, &h).unwrap(),
                kr_member(&hat_spec, &h).unwrap()
            );
        }

        #[test]
        fn the_two_routes_agree(y in subset_strategy(), h in ratfun_strategy()) {
            let spec = KrSpec::new(y.clone()).unwrap();
            prop_assert_eq!(
                kr_star_member(&y, &h).unwrap(),
                kr_member(&spec, &h).unwrap()
            );
        }
    }

    #[test]
    fn clearing_preserves_valuation_comparisons() {
        // The clearing factor shifts numerator and denominator equally.
        let b = Base::QZ;
        let h = tr(&[(3, 4), (5, 6)], &[(1, 2)]);
        let (f, g) = clear_to_base(&b, &h).unwrap();
        for c in f.coeffs().iter().chain(g.coeffs().iter()) {
            if c.is_zero() {
                continue;
            }
            let FieldElem::Rat(r) = c else { unreachable!() };
            assert!(
                num_traits::One::is_one(r.denom()),
                "cleared coefficient {} must be integral",
                rational_string(r)
            );
        }
        for p in [2u64, 3, 5] {
            let v = Place::Prime(p);
            assert_eq!(
                gauss_val(&b, &v, &f).unwrap() - gauss_val(&b, &v, &g).unwrap(),
                gauss_val_fun(&b, &v, &h).unwrap()
            );
        }
    }
}
