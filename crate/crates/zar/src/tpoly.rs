//! Polynomials and rational functions in an auxiliary variable `T` whose
//! coefficients live in the base field `K`.
//!
//! [`KField`] presents `K` itself as a coefficient field, so all generic
//! polynomial and fraction machinery applies to `K[T]` and `K(T)` unchanged.
//! The central quantity here is the minimum valuation of the coefficients
//! ([`gauss_val`]): for every place it extends the valuation of `K`
//! multiplicatively to `K[T]`, and function-ring membership is phrased in
//! terms of it.

use alloc::collections::BTreeSet;
use alloc::string::String;

use crate::error::Error;
use crate::field::{support, val, Base, FieldElem, Place, RatFun};
use crate::poly::{Field, Poly};
use crate::Result;

/// The base field `K` of a pair, as a coefficient-field context.
#[derive(Clone, Copy, Debug)]
pub struct KField {
    pub base: Base,
}

impl KField {
    pub fn new(base: &Base) -> KField {
        KField { base: *base }
    }
}

impl Field for KField {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        FieldElem::zero(&self.base)
    }
    fn one(&self) -> FieldElem {
        FieldElem::one(&self.base)
    }
    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.add(b)
    }
    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.sub(b)
    }
    fn neg(&self, a: &FieldElem) -> FieldElem {
        a.neg()
    }
    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        a.mul(b)
    }
    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        a.inv()
    }
    fn is_zero(&self, a: &FieldElem) -> bool {
        a.is_zero()
    }
    /// Composite values are parenthesized so that `K`-coefficients read
    /// unambiguously inside a `T`-polynomial, e.g. `(x+1)*T`.
    fn elem_string(&self, a: &FieldElem) -> String {
        let s = a.elem_string();
        let composite =
            s[1..].contains('+') || s[1..].contains('-') || s.contains('/') || s.contains('*');
        if composite {
            alloc::format!("({})", s)
        } else {
            s
        }
    }
}

/// A polynomial in `T` over `K`.
pub type TPoly = Poly<FieldElem>;

/// A rational function in `T` over `K`, kept in lowest terms.
pub type TRatFun = RatFun<FieldElem>;

/// The minimum valuation of the coefficients of a nonzero `T`-polynomial at
/// a place.  This is the Gauss extension of the place to `K[T]`: it is
/// multiplicative, turning each place of the space into a place of `K(T)`.
pub fn gauss_val(base: &Base, place: &Place, f: &TPoly) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut best: Option<i64> = None;
    for c in f.coeffs() {
        if c.is_zero() {
            continue;
        }
        let v = val(base, place, c)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    Ok(best.expect("nonzero polynomial has a nonzero coefficient"))
}

/// The Gauss extension evaluated on a nonzero rational function in `T`:
/// the value on the numerator minus the value on the denominator.
pub fn gauss_val_fun(base: &Base, place: &Place, h: &TRatFun) -> Result<i64> {
    if h.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(gauss_val(base, place, h.num())? - gauss_val(base, place, h.den())?)
}

/// Every place where some coefficient of `f` has a zero or a pole.  Away
/// from this finite set the Gauss extension vanishes on `f`.
pub fn coefficient_places(base: &Base, f: &TPoly) -> Result<BTreeSet<Place>> {
    let mut out = BTreeSet::new();
    for c in f.coeffs() {
        if c.is_zero() {
            continue;
        }
        for (v, _) in support(base, c)? {
            out.insert(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RatFunOps;
    use crate::poly::{rat, PolyRing, QField};
    use proptest::prelude::*;

    fn kq() -> KField {
        KField::new(&Base::QZ)
    }

    fn tq(coeffs: &[(i64, i64)]) -> TPoly {
        let k = kq();
        k.p_new(
            coeffs
                .iter()
                .map(|&(n, d)| FieldElem::ratio(&Base::QZ, n, d).unwrap())
                .collect(),
        )
    }

    #[test]
    fn t_polynomials_reuse_the_generic_machinery() {
        // (T + x)(T - x) = T^2 - x^2 over F_5(x).
        let b = Base::fpx_fpx(5).unwrap();
        let k = KField::new(&b);
        let x = FieldElem::coordinate(&b).unwrap();
        let plus = k.p_new(alloc::vec![x.clone(), FieldElem::one(&b)]);
        let minus = k.p_new(alloc::vec![x.neg(), FieldElem::one(&b)]);
        let prod = k.p_mul(&plus, &minus);
        let want = k.p_new(alloc::vec![
            x.mul(&x).neg(),
            FieldElem::zero(&b),
            FieldElem::one(&b),
        ]);
        assert_eq!(prod, want);
        assert_eq!(k.p_string(&prod, "T"), "T^2+(4*x^2)");

        // Composite coefficients are parenthesized in display.
        let bq = Base::QxQx;
        let kq = KField::new(&bq);
        let xq = FieldElem::coordinate(&bq).unwrap();
        let one = FieldElem::one(&bq);
        let f = kq.p_new(alloc::vec![
            xq.mul(&xq).add(&one).div(&xq).unwrap(),
            xq.add(&one),
        ]);
        assert_eq!(kq.p_string(&f, "T"), "(x+1)*T+((x^2+1)/x)");
    }

    #[test]
    fn gauss_val_is_min_over_coefficients() {
        let b = Base::QZ;
        // 2T^2 + 4T + 6: values at 2 are (1, 2, 1), at 3 are (0, 0, 1).
        let f = tq(&[(6, 1), (4, 1), (2, 1)]);
        assert_eq!(gauss_val(&b, &Place::Prime(2), &f).unwrap(), 1);
        assert_eq!(gauss_val(&b, &Place::Prime(3), &f).unwrap(), 0);
        assert_eq!(gauss_val(&b, &Place::Prime(5), &f).unwrap(), 0);

        // T/2 + 1/4 picks up the pole: min(-2, -1) = -2.
        let f = tq(&[(1, 4), (1, 2)]);
        assert_eq!(gauss_val(&b, &Place::Prime(2), &f).unwrap(), -2);

        // Zero coefficients are skipped: T^2 + 4 at 2 gives min(2, 0) = 0.
        let f = tq(&[(4, 1), (0, 1), (1, 1)]);
        assert_eq!(gauss_val(&b, &Place::Prime(2), &f).unwrap(), 0);

        assert!(matches!(
            gauss_val(&b, &Place::Prime(2), &kq().p_zero()),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn gauss_val_at_infinity_sees_degrees() {
        let b = Base::fpx_fp(3).unwrap();
        let k = KField::new(&b);
        let x = FieldElem::coordinate(&b).unwrap();
        // x*T + 1: the coefficient x has a pole at infinity.
        let f = k.p_new(alloc::vec![FieldElem::one(&b), x.clone()]);
        assert_eq!(gauss_val(&b, &Place::Infinity, &f).unwrap(), -1);
        // (1/x)*T + 1: no pole at infinity, minimum is 0.
        let f = k.p_new(alloc::vec![FieldElem::one(&b), x.inv().unwrap()]);
        assert_eq!(gauss_val(&b, &Place::Infinity, &f).unwrap(), 0);
    }

    #[test]
    fn gauss_val_fun_subtracts_denominator() {
        let b = Base::QZ;
        let k = kq();
        // (T + 1/2)/(T - 1/3) at 2: num has value -1, den has value 0.
        let h = k.r_new(tq(&[(1, 2), (1, 1)]), tq(&[(-1, 3), (1, 1)])).unwrap();
        assert_eq!(gauss_val_fun(&b, &Place::Prime(2), &h).unwrap(), -1);
        assert_eq!(gauss_val_fun(&b, &Place::Prime(3), &h).unwrap(), 1);
        assert_eq!(gauss_val_fun(&b, &Place::Prime(5), &h).unwrap(), 0);
    }

    #[test]
    fn coefficient_places_is_union_of_supports() {
        let bq = Base::QxQx;
        let k = KField::new(&bq);
        let x = FieldElem::coordinate(&bq).unwrap();
        let one = FieldElem::one(&bq);
        // x*T + 1/(x-1) touches the places x-1 and x (in canonical order).
        let f = k.p_new(alloc::vec![one.div(&x.sub(&one)).unwrap(), x.clone()]);
        let places = coefficient_places(&bq, &f).unwrap();
        let q_at = |c: i64| {
            Place::irreducible_q(&QField.p_new(alloc::vec![rat(-c, 1), rat(1, 1)])).unwrap()
        };
        assert_eq!(
            places.into_iter().collect::<alloc::vec::Vec<_>>(),
            alloc::vec![q_at(1), q_at(0)]
        );

        // Over F_2(x)|F_2 the coefficient x also meets infinity.
        let b2 = Base::fpx_fp(2).unwrap();
        let k2 = KField::new(&b2);
        let x2 = FieldElem::coordinate(&b2).unwrap();
        let f = k2.p_new(alloc::vec![FieldElem::one(&b2), x2]);
        let places = coefficient_places(&b2, &f).unwrap();
        assert!(places.contains(&Place::Infinity));
    }

    proptest! {
        #[test]
        fn gauss_val_is_multiplicative(
            a in proptest::collection::vec((-20i64..20, 1i64..20), 1..4),
            b in proptest::collection::vec((-20i64..20, 1i64..20), 1..4),
            pick in 0usize..3,
        ) {
            // Gauss's lemma for valuations: the coefficient-minimum value of
            // a product is the sum of the values of the factors.
            let base = Base::QZ;
            let k = kq();
            let f = tq(&a);
            let g = tq(&b);
            prop_assume!(!f.is_zero() && !g.is_zero());
            let p = Place::Prime([2u64, 3, 5][pick]);
            let lhs = gauss_val(&base, &p, &k.p_mul(&f, &g)).unwrap();
            let rhs = gauss_val(&base, &p, &f).unwrap() + gauss_val(&base, &p, &g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gauss_val_is_multiplicative_over_fp(
            a in proptest::collection::vec((0i64..9, 0i64..9), 1..4),
            b in proptest::collection::vec((0i64..9, 0i64..9), 1..4),
        ) {
            // Same law over F_3(x) at the place x, with coefficients of the
            // form x^i viewed through num/den exponent pairs (n, d) -> x^n/x^d.
            let base = Base::fpx_fpx(3).unwrap();
            let k = KField::new(&base);
            let x = FieldElem::coordinate(&base).unwrap();
            let mk = |pairs: &[(i64, i64)]| {
                k.p_new(
                    pairs
                        .iter()
                        .map(|&(n, d)| x.pow(n).unwrap().div(&x.pow(d).unwrap()).unwrap())
                        .collect(),
                )
            };
            let f = mk(&a);
            let g = mk(&b);
            let q = Place::irreducible_fp(
                &crate::fp::FpField::new(3).unwrap(),
                &crate::fp::FpField::new(3).unwrap().p_new(alloc::vec![0, 1]),
            ).unwrap();
            let lhs = gauss_val(&base, &q, &k.p_mul(&f, &g)).unwrap();
            let rhs = gauss_val(&base, &q, &f).unwrap() + gauss_val(&base, &q, &g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
