//! Dense univariate polynomials over an exact field.
//!
//! The coefficient field is passed as an explicit context value (see
//! [`Field`]); this lets the same polynomial code serve `Q`, `F_p` (whose
//! modulus lives in the context), and the base field `K` itself when we form
//! polynomials in the auxiliary variable `T`.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::fp::FpField;

/// An exact field, presented as a context object so that parametrized
/// fields (like `F_p`) need no per-element modulus storage.
pub trait Field {
    type Elem: Clone + Eq + Ord + core::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Canonical display of one coefficient, e.g. `3/2` or `-1`.
    fn elem_string(&self, a: &Self::Elem) -> String;
}

/// The rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct QField;

impl Field for QField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn elem_string(&self, a: &BigRational) -> String {
        rational_string(a)
    }
}

/// `n/d` with the denominator omitted when it is 1.
pub fn rational_string(a: &BigRational) -> String {
    if a.denom().is_one() {
        alloc::format!("{}", a.numer())
    } else {
        alloc::format!("{}/{}", a.numer(), a.denom())
    }
}

/// Convenience constructor for rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Field for FpField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        FpField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        FpField::sub(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        FpField::neg(self, *a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        FpField::mul(self, *a, *b)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        FpField::inv(self, *a)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn elem_string(&self, a: &u64) -> String {
        alloc::format!("{a}")
    }
}

/// A polynomial with coefficients in ascending degree order and no trailing
/// zero; the zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree as an integer, with the zero polynomial at `-1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for zero.
    pub fn lc(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// Polynomials order by degree first, then coefficient vectors compared from
/// the constant term up. This is the canonical enumeration order of places.
impl<E: Ord> Ord for Poly<E> {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.coeffs.len(), &self.coeffs).cmp(&(other.coeffs.len(), &other.coeffs))
    }
}

impl<E: Ord> PartialOrd for Poly<E> {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial-ring operations over any [`Field`], provided as default
/// methods so every coefficient field shares one implementation.
pub trait PolyRing: Field + Sized {
    fn p_new(&self, mut coeffs: Vec<Self::Elem>) -> Poly<Self::Elem> {
        while coeffs.last().map_or(false, |c| self.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    fn p_zero(&self) -> Poly<Self::Elem> {
        Poly { coeffs: Vec::new() }
    }

    fn p_const(&self, c: Self::Elem) -> Poly<Self::Elem> {
        self.p_new(alloc::vec![c])
    }

    fn p_one(&self) -> Poly<Self::Elem> {
        self.p_const(self.one())
    }

    /// The monomial `x`.
    fn p_x(&self) -> Poly<Self::Elem> {
        self.p_new(alloc::vec![self.zero(), self.one()])
    }

    fn p_coeff(&self, a: &Poly<Self::Elem>, i: usize) -> Self::Elem {
        a.coeffs.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    fn p_add(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.add(&self.p_coeff(a, i), &self.p_coeff(b, i)))
            .collect();
        self.p_new(coeffs)
    }

    fn p_neg(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.neg(c)).collect(),
        }
    }

    fn p_sub(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.p_add(a, &self.p_neg(b))
    }

    fn p_scale(&self, a: &Poly<Self::Elem>, c: &Self::Elem) -> Poly<Self::Elem> {
        let coeffs = a.coeffs.iter().map(|x| self.mul(x, c)).collect();
        self.p_new(coeffs)
    }

    fn p_mul(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.p_zero();
        }
        let mut coeffs = alloc::vec![self.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = self.add(&coeffs[i + j], &self.mul(x, y));
            }
        }
        self.p_new(coeffs)
    }

    fn p_pow(&self, a: &Poly<Self::Elem>, e: u32) -> Poly<Self::Elem> {
        let mut acc = self.p_one();
        for _ in 0..e {
            acc = self.p_mul(&acc, a);
        }
        acc
    }

    /// Euclidean division `a = q*b + r` with `deg r < deg b`.
    ///
    /// Panics if `b` is zero; callers guard that case.
    fn p_divrem(
        &self,
        a: &Poly<Self::Elem>,
        b: &Poly<Self::Elem>,
    ) -> (Poly<Self::Elem>, Poly<Self::Elem>) {
        let db = b.degree().expect("division by the zero polynomial");
        let lb_inv = self.inv(b.lc().unwrap()).expect("field leading coefficient");
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return (self.p_zero(), self.p_new(rem));
        }
        let mut quot = alloc::vec![self.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            let c = self.mul(&rem[i], &lb_inv);
            if self.is_zero(&c) {
                continue;
            }
            quot[i - db] = c.clone();
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[i - db + j] = self.sub(&rem[i - db + j], &self.mul(&c, bc));
            }
        }
        (self.p_new(quot), self.p_new(rem))
    }

    fn p_rem(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        self.p_divrem(a, b).1
    }

    /// Exact division; `None` when the remainder is nonzero.
    fn p_div_exact(
        &self,
        a: &Poly<Self::Elem>,
        b: &Poly<Self::Elem>,
    ) -> Option<Poly<Self::Elem>> {
        let (q, r) = self.p_divrem(a, b);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Scales a nonzero polynomial to leading coefficient 1.
    fn p_monic(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        match a.lc() {
            None => self.p_zero(),
            Some(l) => self.p_scale(a, &self.inv(l).expect("nonzero leading coefficient")),
        }
    }

    fn p_is_monic(&self, a: &Poly<Self::Elem>) -> bool {
        a.lc().map_or(false, |l| *l == self.one())
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    fn p_gcd(&self, a: &Poly<Self::Elem>, b: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            // Normalizing each remainder keeps rational coefficients small.
            let r = self.p_rem(&a, &b);
            a = b;
            b = if r.is_zero() { r } else { self.p_monic(&r) };
        }
        self.p_monic(&a)
    }

    fn p_eval(&self, a: &Poly<Self::Elem>, x: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    fn p_derivative(&self, a: &Poly<Self::Elem>) -> Poly<Self::Elem> {
        if a.coeffs.len() <= 1 {
            return self.p_zero();
        }
        let mut coeffs = Vec::with_capacity(a.coeffs.len() - 1);
        for (i, c) in a.coeffs.iter().enumerate().skip(1) {
            // i * c computed by repeated addition so no integer embedding is
            // required of the coefficient field.
            let mut m = self.zero();
            for _ in 0..i {
                m = self.add(&m, c);
            }
            coeffs.push(m);
        }
        self.p_new(coeffs)
    }

    /// Product modulo `m`, for modular exponentiation.
    fn p_mulmod(
        &self,
        a: &Poly<Self::Elem>,
        b: &Poly<Self::Elem>,
        m: &Poly<Self::Elem>,
    ) -> Poly<Self::Elem> {
        self.p_rem(&self.p_mul(a, b), m)
    }

    /// `a^e mod m` by binary exponentiation.
    fn p_powmod(
        &self,
        a: &Poly<Self::Elem>,
        mut e: u64,
        m: &Poly<Self::Elem>,
    ) -> Poly<Self::Elem> {
        let mut base = self.p_rem(a, m);
        let mut acc = self.p_rem(&self.p_one(), m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.p_mulmod(&acc, &base, m);
            }
            base = self.p_mulmod(&base, &base, m);
            e >>= 1;
        }
        acc
    }

    /// Canonical display: descending terms, `^` powers, coefficients via
    /// [`Field::elem_string`]. Examples: `x^2+x+1`, `3/2*x-1`.
    fn p_string(&self, a: &Poly<Self::Elem>, var: &str) -> String {
        if a.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in a.coeffs.iter().enumerate().rev() {
            if self.is_zero(c) {
                continue;
            }
            let cs = self.elem_string(c);
            let term = if i == 0 {
                cs
            } else {
                let head = if cs == "1" {
                    String::new()
                } else if cs == "-1" {
                    String::from("-")
                } else {
                    alloc::format!("{cs}*")
                };
                if i == 1 {
                    alloc::format!("{head}{var}")
                } else {
                    alloc::format!("{head}{var}^{i}")
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

impl<F: Field> PolyRing for F {}

/// Content/primitive-part view of a rational polynomial: returns `(c, g)`
/// with `a = c * g`, `g` an integer polynomial with positive leading
/// coefficient and coprime coefficients.
pub fn primitive_int(a: &Poly<BigRational>) -> (BigRational, Vec<BigInt>) {
    assert!(!a.is_zero(), "primitive part of the zero polynomial");
    let mut den = BigInt::one();
    for c in a.coeffs() {
        den = num_integer::Integer::lcm(&den, c.denom());
    }
    let ints: Vec<BigInt> = a
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::Integer::gcd(&content, c);
    }
    if ints.last().unwrap().is_negative() {
        content = -content;
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    (BigRational::new(content, den), prim)
}
