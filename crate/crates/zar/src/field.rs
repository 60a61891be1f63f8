//! Base pairs `(K, A)`, the places of the associated one-dimensional
//! Zariski–Riemann space, and exact arithmetic in `K`.
//!
//! A base pair fixes a field `K` together with a subring `A`; the space
//! `Zar(K|A)` consists of the valuation rings of `K` containing `A`.  For
//! every pair supported here that space is the trivial valuation ring `K`
//! (the generic point) together with a family of rank-one places:
//!
//! * `Q | Z` — one place per prime number;
//! * `Q(x) | Q[x]` — one place per monic irreducible in `Q[x]`;
//! * `F_p(x) | F_p[x]` — one place per monic irreducible in `F_p[x]`;
//! * `F_p(x) | F_p` — the same places plus the degree valuation at infinity.
//!
//! [`val`] computes the order of vanishing of a field element at a place,
//! [`support`] lists every place where an element has a zero or pole, and
//! [`enumerate_places`] produces finite windows of the (infinite) place set.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factor_bigint, int_ord, is_prime_u64, primes_up_to};
use crate::error::Error;
use crate::fp::FpField;
use crate::poly::{rational_string, Field, Poly, PolyRing, QField};
use crate::polyfactor::{fp_factor, fp_is_irreducible, q_factor, q_is_irreducible, PolyEnum};
use crate::Result;

/// A supported base pair `(K, A)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Base {
    /// `K = Q`, `A = Z`.
    QZ,
    /// `K = Q(x)`, `A = Q[x]`.
    QxQx,
    /// `K = F_p(x)`, `A = F_p[x]`.
    FpxFpx { p: u64 },
    /// `K = F_p(x)`, `A = F_p` (the constants only).
    FpxFp { p: u64 },
}

impl Base {
    /// The pair `F_p(x) | F_p[x]`; rejects composite `p`.
    pub fn fpx_fpx(p: u64) -> Result<Base> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Base::FpxFpx { p })
    }

    /// The pair `F_p(x) | F_p`; rejects composite `p`.
    pub fn fpx_fp(p: u64) -> Result<Base> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Base::FpxFp { p })
    }

    /// Whether the place at infinity (the degree valuation) belongs to the
    /// space.  It does exactly when `A` consists of constants, so that the
    /// degree valuation is nonnegative on `A`.
    pub fn has_infinity_place(&self) -> bool {
        matches!(self, Base::FpxFp { .. })
    }

    /// Whether `K` is the fraction field of `A`.  When it is, every finite
    /// family of field elements can be scaled by one nonzero constant into
    /// `A`, and containment of modules is determined placewise by exponents.
    pub fn field_is_fraction_field(&self) -> bool {
        !matches!(self, Base::FpxFp { .. })
    }

    /// The characteristic of `K`.
    pub fn characteristic(&self) -> u64 {
        match self {
            Base::QZ | Base::QxQx => 0,
            Base::FpxFpx { p } | Base::FpxFp { p } => *p,
        }
    }

    /// Display name, e.g. `Q(x)|Q[x]`.
    pub fn name(&self) -> String {
        match self {
            Base::QZ => String::from("Q|Z"),
            Base::QxQx => String::from("Q(x)|Q[x]"),
            Base::FpxFpx { p } => format!("F_{}(x)|F_{}[x]", p, p),
            Base::FpxFp { p } => format!("F_{}(x)|F_{}", p, p),
        }
    }
}

/// A closed point of the space: a rank-one valuation of `K` nonnegative on
/// `A`.
///
/// The derived ordering (variant order, then the natural order inside each
/// variant) is used as the canonical place order everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Place {
    /// The `p`-adic place of `Q`.
    Prime(u64),
    /// The place of `Q(x)` at a monic irreducible of `Q[x]`.
    IrrQ(Poly<BigRational>),
    /// The place of `F_p(x)` at a monic irreducible of `F_p[x]`.
    IrrFp { p: u64, q: Poly<u64> },
    /// The degree valuation of `F_p(x)` (order of vanishing at infinity).
    Infinity,
}

impl Place {
    /// The place at a prime number; rejects composites.
    pub fn prime(p: u64) -> Result<Place> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Place::Prime(p))
    }

    /// The place at an irreducible of `Q[x]`.  The polynomial is made monic;
    /// constants and reducible polynomials are rejected.
    pub fn irreducible_q(f: &Poly<BigRational>) -> Result<Place> {
        let k = QField;
        if f.deg() < 1 {
            return Err(Error::NotIrreducible(k.p_string(f, "x")));
        }
        let f = k.p_monic(f);
        if !q_is_irreducible(&f)? {
            return Err(Error::NotIrreducible(k.p_string(&f, "x")));
        }
        Ok(Place::IrrQ(f))
    }

    /// The place at an irreducible of `F_p[x]`.  The polynomial is made
    /// monic; constants and reducible polynomials are rejected.
    pub fn irreducible_fp(k: &FpField, f: &Poly<u64>) -> Result<Place> {
        if f.deg() < 1 {
            return Err(Error::NotIrreducible(k.p_string(f, "x")));
        }
        let f = k.p_monic(f);
        if !fp_is_irreducible(k, &f) {
            return Err(Error::NotIrreducible(k.p_string(&f, "x")));
        }
        Ok(Place::IrrFp { p: k.p, q: f })
    }

    /// Whether this place belongs to the space of the given base pair.
    pub fn matches_base(&self, base: &Base) -> bool {
        match (self, base) {
            (Place::Prime(_), Base::QZ) => true,
            (Place::IrrQ(_), Base::QxQx) => true,
            (Place::IrrFp { p, .. }, Base::FpxFpx { p: q }) => p == q,
            (Place::IrrFp { p, .. }, Base::FpxFp { p: q }) => p == q,
            (Place::Infinity, Base::FpxFp { .. }) => true,
            _ => false,
        }
    }

    /// The degree of the residue field extension at this place (`1` for
    /// primes and for infinity, the polynomial degree otherwise).
    pub fn residue_degree(&self) -> usize {
        match self {
            Place::Prime(_) | Place::Infinity => 1,
            Place::IrrQ(q) => q.deg().max(0) as usize,
            Place::IrrFp { q, .. } => q.deg().max(0) as usize,
        }
    }

    /// Canonical display form: `p:7`, `q:x^2+1`, or `inf`.
    pub fn place_string(&self) -> String {
        match self {
            Place::Prime(p) => format!("p:{}", p),
            Place::IrrQ(q) => format!("q:{}", QField.p_string(q, "x")),
            Place::IrrFp { p, q } => format!("q:{}", FpField { p: *p }.p_string(q, "x")),
            Place::Infinity => String::from("inf"),
        }
    }
}

/// A point of the space: the generic point `K` or a closed point.
///
/// The generic point sorts first; it is the minimum in the specialization
/// order (every point lies in its closure).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum SpacePoint {
    Generic,
    Pt(Place),
}

impl SpacePoint {
    /// Canonical display form: `K` for the generic point, otherwise the
    /// place form.
    pub fn point_string(&self) -> String {
        match self {
            SpacePoint::Generic => String::from("K"),
            SpacePoint::Pt(v) => v.place_string(),
        }
    }
}

/// A reduced fraction of polynomials: the denominator is monic and coprime
/// to the numerator.  Equality of values is literal equality of the pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun<E> {
    num: Poly<E>,
    den: Poly<E>,
}

impl<E: Ord> Ord for RatFun<E> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.num.cmp(&other.num).then_with(|| self.den.cmp(&other.den))
    }
}

impl<E: Ord> PartialOrd for RatFun<E> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E> RatFun<E> {
    pub fn num(&self) -> &Poly<E> {
        &self.num
    }

    pub fn den(&self) -> &Poly<E> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Whether the value is a constant of the coefficient field.
    pub fn is_constant(&self) -> bool {
        self.num.deg() <= 0 && self.den.deg() <= 0
    }
}

/// Rational-function arithmetic over any coefficient field, available on the
/// field context like the polynomial operations.
pub trait RatFunOps: PolyRing {
    /// Builds `num/den` in lowest terms with monic denominator.
    fn r_new(&self, num: Poly<Self::Elem>, den: Poly<Self::Elem>) -> Result<RatFun<Self::Elem>> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.r_reduce(num, den))
    }

    fn r_reduce(&self, num: Poly<Self::Elem>, den: Poly<Self::Elem>) -> RatFun<Self::Elem> {
        if num.is_zero() {
            return RatFun {
                num: self.p_zero(),
                den: self.p_one(),
            };
        }
        let g = self.p_gcd(&num, &den);
        let mut num = self.p_div_exact(&num, &g).expect("gcd divides");
        let mut den = self.p_div_exact(&den, &g).expect("gcd divides");
        let lead = self.inv(den.lc().expect("nonzero")).expect("nonzero");
        num = self.p_scale(&num, &lead);
        den = self.p_scale(&den, &lead);
        RatFun { num, den }
    }

    fn r_zero(&self) -> RatFun<Self::Elem> {
        RatFun {
            num: self.p_zero(),
            den: self.p_one(),
        }
    }

    fn r_one(&self) -> RatFun<Self::Elem> {
        RatFun {
            num: self.p_one(),
            den: self.p_one(),
        }
    }

    fn r_from_poly(&self, f: Poly<Self::Elem>) -> RatFun<Self::Elem> {
        RatFun {
            num: f,
            den: self.p_one(),
        }
    }

    fn r_add(&self, a: &RatFun<Self::Elem>, b: &RatFun<Self::Elem>) -> RatFun<Self::Elem> {
        let num = self.p_add(
            &self.p_mul(&a.num, &b.den),
            &self.p_mul(&b.num, &a.den),
        );
        self.r_reduce(num, self.p_mul(&a.den, &b.den))
    }

    fn r_neg(&self, a: &RatFun<Self::Elem>) -> RatFun<Self::Elem> {
        RatFun {
            num: self.p_neg(&a.num),
            den: a.den.clone(),
        }
    }

    fn r_sub(&self, a: &RatFun<Self::Elem>, b: &RatFun<Self::Elem>) -> RatFun<Self::Elem> {
        self.r_add(a, &self.r_neg(b))
    }

    fn r_mul(&self, a: &RatFun<Self::Elem>, b: &RatFun<Self::Elem>) -> RatFun<Self::Elem> {
        self.r_reduce(self.p_mul(&a.num, &b.num), self.p_mul(&a.den, &b.den))
    }

    fn r_inv(&self, a: &RatFun<Self::Elem>) -> Option<RatFun<Self::Elem>> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.r_reduce(a.den.clone(), a.num.clone()))
    }

    fn r_div(&self, a: &RatFun<Self::Elem>, b: &RatFun<Self::Elem>) -> Option<RatFun<Self::Elem>> {
        Some(self.r_mul(a, &self.r_inv(b)?))
    }

    /// Canonical display form, e.g. `x+1`, `1/(x-2)`, `(x^2+1)/(x*(x+1))`
    /// rendered as `(x^2+1)/(x^2+x)`.
    fn r_string(&self, a: &RatFun<Self::Elem>, var: &str) -> String {
        let num = self.p_string(&a.num, var);
        if a.den.deg() <= 0 {
            return num;
        }
        let den = self.p_string(&a.den, var);
        let wrap = |s: String| {
            let composite = s[1..].contains('+') || s[1..].contains('-') || s.contains('/');
            if composite {
                format!("({})", s)
            } else {
                s
            }
        };
        format!("{}/{}", wrap(num), wrap(den))
    }
}

impl<F: Field> RatFunOps for F {}

/// An element of the field `K` of a base pair.  The variant records which
/// field the value lives in; arithmetic requires both operands to come from
/// the same field and panics otherwise (public constructors tie every value
/// to a base, so mixed arithmetic indicates a bug in the caller).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FieldElem {
    Rat(BigRational),
    FunQ(RatFun<BigRational>),
    FunFp { p: u64, f: RatFun<u64> },
}

impl FieldElem {
    pub fn zero(base: &Base) -> FieldElem {
        FieldElem::from_int(base, 0)
    }

    pub fn one(base: &Base) -> FieldElem {
        FieldElem::from_int(base, 1)
    }

    /// The integer `n` viewed in `K`.
    pub fn from_int(base: &Base, n: i64) -> FieldElem {
        match base {
            Base::QZ => FieldElem::Rat(BigRational::from_integer(BigInt::from(n))),
            Base::QxQx => {
                let k = QField;
                FieldElem::FunQ(k.r_from_poly(k.p_const(BigRational::from_integer(n.into()))))
            }
            Base::FpxFpx { p } | Base::FpxFp { p } => {
                let k = FpField { p: *p };
                FieldElem::FunFp {
                    p: *p,
                    f: k.r_from_poly(k.p_const(k.reduce(n))),
                }
            }
        }
    }

    /// The fraction `n/d` viewed in `K`; rejects `d` mapping to zero.
    pub fn ratio(base: &Base, n: i64, d: i64) -> Result<FieldElem> {
        let den = FieldElem::from_int(base, d);
        FieldElem::from_int(base, n)
            .div(&den)
            .ok_or(Error::ZeroDenominator)
    }

    /// The coordinate `x` of a rational function field; rejected for `Q|Z`.
    pub fn coordinate(base: &Base) -> Result<FieldElem> {
        match base {
            Base::QZ => Err(Error::ElemBaseMismatch(String::from("x"))),
            Base::QxQx => {
                let k = QField;
                Ok(FieldElem::FunQ(k.r_from_poly(k.p_x())))
            }
            Base::FpxFpx { p } | Base::FpxFp { p } => {
                let k = FpField { p: *p };
                Ok(FieldElem::FunFp {
                    p: *p,
                    f: k.r_from_poly(k.p_x()),
                })
            }
        }
    }

    pub fn from_rational(r: BigRational) -> FieldElem {
        FieldElem::Rat(r)
    }

    pub fn from_fun_q(f: RatFun<BigRational>) -> FieldElem {
        FieldElem::FunQ(f)
    }

    pub fn from_fun_fp(p: u64, f: RatFun<u64>) -> FieldElem {
        FieldElem::FunFp { p, f }
    }

    pub fn matches_base(&self, base: &Base) -> bool {
        match (self, base) {
            (FieldElem::Rat(_), Base::QZ) => true,
            (FieldElem::FunQ(_), Base::QxQx) => true,
            (FieldElem::FunFp { p, .. }, Base::FpxFpx { p: q }) => p == q,
            (FieldElem::FunFp { p, .. }, Base::FpxFp { p: q }) => p == q,
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::FunQ(f) => f.is_zero(),
            FieldElem::FunFp { f, .. } => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::FunQ(f) => f.den.deg() == 0 && f.num == QField.p_one(),
            FieldElem::FunFp { p, f } => {
                let k = FpField { p: *p };
                f.den.deg() == 0 && f.num == k.p_one()
            }
        }
    }

    /// Whether the value lies in the prime field (a constant rational
    /// function).  Always true over `Q`.
    pub fn is_constant(&self) -> bool {
        match self {
            FieldElem::Rat(_) => true,
            FieldElem::FunQ(f) => f.is_constant(),
            FieldElem::FunFp { f, .. } => f.is_constant(),
        }
    }

    fn kind_mismatch() -> ! {
        panic!("field elements from different base fields")
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            (FieldElem::FunQ(a), FieldElem::FunQ(b)) => FieldElem::FunQ(QField.r_add(a, b)),
            (FieldElem::FunFp { p, f: a }, FieldElem::FunFp { p: q, f: b }) if p == q => {
                FieldElem::FunFp {
                    p: *p,
                    f: FpField { p: *p }.r_add(a, b),
                }
            }
            _ => FieldElem::kind_mismatch(),
        }
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Rat(a) => FieldElem::Rat(-a),
            FieldElem::FunQ(a) => FieldElem::FunQ(QField.r_neg(a)),
            FieldElem::FunFp { p, f } => FieldElem::FunFp {
                p: *p,
                f: FpField { p: *p }.r_neg(f),
            },
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            (FieldElem::FunQ(a), FieldElem::FunQ(b)) => FieldElem::FunQ(QField.r_mul(a, b)),
            (FieldElem::FunFp { p, f: a }, FieldElem::FunFp { p: q, f: b }) if p == q => {
                FieldElem::FunFp {
                    p: *p,
                    f: FpField { p: *p }.r_mul(a, b),
                }
            }
            _ => FieldElem::kind_mismatch(),
        }
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Rat(a) => FieldElem::Rat(a.recip()),
            FieldElem::FunQ(a) => FieldElem::FunQ(QField.r_inv(a).expect("nonzero")),
            FieldElem::FunFp { p, f } => FieldElem::FunFp {
                p: *p,
                f: FpField { p: *p }.r_inv(f).expect("nonzero"),
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Option<FieldElem> {
        Some(self.mul(&other.inv()?))
    }

    /// `self^e` with `0^0 = 1`; `None` exactly when inverting zero.
    pub fn pow(&self, e: i64) -> Option<FieldElem> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = match self {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::one()),
            FieldElem::FunQ(_) => FieldElem::FunQ(QField.r_one()),
            FieldElem::FunFp { p, .. } => FieldElem::FunFp {
                p: *p,
                f: FpField { p: *p }.r_one(),
            },
        };
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// Canonical display form: the reduced fraction, e.g. `-3/2` or
    /// `(x^2+1)/x`.
    pub fn elem_string(&self) -> String {
        match self {
            FieldElem::Rat(r) => rational_string(r),
            FieldElem::FunQ(f) => QField.r_string(f, "x"),
            FieldElem::FunFp { p, f } => FpField { p: *p }.r_string(f, "x"),
        }
    }
}

/// Order of vanishing of the polynomial `f` at the irreducible `q`.
fn poly_ord<F: PolyRing>(k: &F, f: &Poly<F::Elem>, q: &Poly<F::Elem>) -> i64 {
    let mut n = 0;
    let mut rem = f.clone();
    while let Some(quot) = k.p_div_exact(&rem, q) {
        n += 1;
        rem = quot;
    }
    n
}

/// The order of vanishing of a nonzero element of `K` at a place of the
/// space: positive at zeros, negative at poles, zero at units.
pub fn val(base: &Base, place: &Place, x: &FieldElem) -> Result<i64> {
    if !place.matches_base(base) {
        return Err(Error::PlaceBaseMismatch(place.place_string()));
    }
    if !x.matches_base(base) {
        return Err(Error::ElemBaseMismatch(x.elem_string()));
    }
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok(match (place, x) {
        (Place::Prime(p), FieldElem::Rat(r)) => {
            int_ord(r.numer(), *p) - int_ord(r.denom(), *p)
        }
        (Place::IrrQ(q), FieldElem::FunQ(f)) => {
            let k = QField;
            poly_ord(&k, f.num(), q) - poly_ord(&k, f.den(), q)
        }
        (Place::IrrFp { p, q }, FieldElem::FunFp { f, .. }) => {
            let k = FpField { p: *p };
            poly_ord(&k, f.num(), q) - poly_ord(&k, f.den(), q)
        }
        (Place::Infinity, FieldElem::FunFp { f, .. }) => f.den().deg() - f.num().deg(),
        _ => unreachable!("matches_base checked"),
    })
}

/// Every place where the nonzero element `x` has a zero or a pole, with its
/// order, sorted in the canonical place order.
///
/// Over `Q(x)|Q[x]` the numerator and denominator are fully factored, which
/// fails with [`Error::DegreeCapExceeded`] if an irreducible factor of
/// degree above the supported cap is present.
pub fn support(base: &Base, x: &FieldElem) -> Result<Vec<(Place, i64)>> {
    if !x.matches_base(base) {
        return Err(Error::ElemBaseMismatch(x.elem_string()));
    }
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let mut out: Vec<(Place, i64)> = Vec::new();
    match (base, x) {
        (Base::QZ, FieldElem::Rat(r)) => {
            for (p, e) in factor_bigint(&r.numer().abs())? {
                out.push((Place::Prime(p), e as i64));
            }
            for (p, e) in factor_bigint(&r.denom().abs())? {
                merge_place(&mut out, Place::Prime(p), -(e as i64));
            }
        }
        (Base::QxQx, FieldElem::FunQ(f)) => {
            let (_, num_factors) = q_factor(f.num())?;
            for (q, e) in num_factors {
                out.push((Place::IrrQ(q), e as i64));
            }
            let (_, den_factors) = q_factor(f.den())?;
            for (q, e) in den_factors {
                merge_place(&mut out, Place::IrrQ(q), -(e as i64));
            }
        }
        (Base::FpxFpx { p }, FieldElem::FunFp { f, .. })
        | (Base::FpxFp { p }, FieldElem::FunFp { f, .. }) => {
            let k = FpField { p: *p };
            for (q, e) in fp_factor(&k, f.num()) {
                out.push((Place::IrrFp { p: *p, q }, e as i64));
            }
            for (q, e) in fp_factor(&k, f.den()) {
                merge_place(&mut out, Place::IrrFp { p: *p, q }, -(e as i64));
            }
            if base.has_infinity_place() {
                let at_inf = f.den().deg() - f.num().deg();
                if at_inf != 0 {
                    out.push((Place::Infinity, at_inf));
                }
            }
        }
        _ => unreachable!("matches_base checked"),
    }
    out.retain(|(_, e)| *e != 0);
    out.sort();
    Ok(out)
}

fn merge_place(out: &mut Vec<(Place, i64)>, place: Place, e: i64) {
    for (q, v) in out.iter_mut() {
        if *q == place {
            *v += e;
            return;
        }
    }
    out.push((place, e));
}

/// Whether `x` lies in the base ring `A`: zero, or nonnegative valuation at
/// every place.  Over `Q|Z` this means an integer; over the polynomial
/// bases, a polynomial; over a constant base ring, a constant.
pub fn in_base_ring(base: &Base, x: &FieldElem) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    Ok(support(base, x)?.iter().all(|(_, e)| *e >= 0))
}

/// An element of `K` with a pole at the given place and no pole elsewhere:
/// `1/p`, `1/q`, or (at infinity) the coordinate `x` itself.
pub fn pole_at(base: &Base, place: &Place) -> Result<FieldElem> {
    if !place.matches_base(base) {
        return Err(Error::PlaceBaseMismatch(place.place_string()));
    }
    Ok(match place {
        Place::Prime(p) => FieldElem::ratio(base, 1, *p as i64)?,
        Place::IrrQ(q) => {
            let k = QField;
            FieldElem::FunQ(k.r_new(k.p_one(), q.clone())?)
        }
        Place::IrrFp { p, q } => {
            let k = FpField { p: *p };
            FieldElem::FunFp {
                p: *p,
                f: k.r_new(k.p_one(), q.clone())?,
            }
        }
        Place::Infinity => FieldElem::coordinate(base)?,
    })
}

/// How far [`enumerate_places`] explores the place set.
#[derive(Clone, Copy, Debug)]
pub struct PlaceWindow {
    /// For `Q|Z`: the largest prime.  For function fields: the largest
    /// degree of the monic irreducible.
    pub bound: u64,
    /// For `Q(x)|Q[x]` only: the largest absolute value allowed for the
    /// integer coefficients of the (primitive form of the) irreducible.
    pub height: u64,
}

const ENUMERATION_CAP: u64 = 2_000_000;

/// A finite window of the place set, sorted in the canonical place order.
///
/// The place sets are infinite; the window makes the choice explicit.  Over
/// `Q|Z` it holds the primes up to `bound`; over `F_p(x)` the monic
/// irreducibles of degree at most `bound` (plus infinity when the base has
/// it); over `Q(x)|Q[x]` the monic irreducibles whose primitive integer form
/// has degree at most `bound` and coefficients bounded by `height`.
pub fn enumerate_places(base: &Base, window: &PlaceWindow) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    match base {
        Base::QZ => {
            for p in primes_up_to(window.bound) {
                out.push(Place::Prime(p));
            }
        }
        Base::QxQx => {
            let d = window.bound as usize;
            if d > crate::polyfactor::Q_RESIDUAL_CAP {
                return Err(Error::DegreeCapExceeded {
                    degree: d,
                    cap: crate::polyfactor::Q_RESIDUAL_CAP,
                });
            }
            let h = window.height;
            let per_coeff = 2 * h + 1;
            let mut total: u64 = 0;
            for deg in 1..=d {
                let mut count: u64 = 1;
                for _ in 0..deg {
                    count = count.saturating_mul(per_coeff);
                }
                total = total.saturating_add(count);
            }
            if total > ENUMERATION_CAP {
                return Err(Error::EnumerationTooLarge {
                    bound: ENUMERATION_CAP,
                });
            }
            let k = QField;
            for deg in 1..=d {
                // Odometer over the `deg` coefficients below the monic lead.
                let mut digits = vec![0u64; deg];
                loop {
                    let mut coeffs: Vec<BigRational> = digits
                        .iter()
                        .map(|&t| BigRational::from_integer(BigInt::from(t as i64 - h as i64)))
                        .collect();
                    coeffs.push(BigRational::one());
                    let f = k.p_new(coeffs);
                    if q_is_irreducible(&f)? {
                        out.push(Place::IrrQ(f));
                    }
                    let mut i = 0;
                    loop {
                        if i == deg {
                            break;
                        }
                        digits[i] += 1;
                        if digits[i] < per_coeff {
                            break;
                        }
                        digits[i] = 0;
                        i += 1;
                    }
                    if i == deg {
                        break;
                    }
                }
            }
        }
        Base::FpxFpx { p } | Base::FpxFp { p } => {
            let d = window.bound as usize;
            let mut total: u64 = 0;
            for deg in 1..=d {
                let mut count: u64 = 1;
                for _ in 0..deg {
                    count = count.saturating_mul(*p);
                }
                total = total.saturating_add(count);
            }
            if total > ENUMERATION_CAP {
                return Err(Error::EnumerationTooLarge {
                    bound: ENUMERATION_CAP,
                });
            }
            let k = FpField { p: *p };
            for f in PolyEnum::new(*p, d) {
                if f.deg() >= 1 && k.p_is_monic(&f) && fp_is_irreducible(&k, &f) {
                    out.push(Place::IrrFp { p: *p, q: f });
                }
            }
            if base.has_infinity_place() {
                out.push(Place::Infinity);
            }
        }
    }
    out.sort();
    Ok(out)
}
