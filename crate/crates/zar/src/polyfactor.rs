//! Complete factorization of univariate polynomials over `F_p` and `Q`.
//!
//! Over `F_p` the factorization is distinct-degree splitting (iterated
//! Frobenius) followed by equal-degree splitting; the splitting elements are
//! drawn from a deterministic enumeration of polynomials, so the whole
//! routine is deterministic and exact.
//!
//! Over `Q` the backend is complete only on a bounded class: after removing
//! rational roots from each squarefree part the residual degree must be at
//! most [`Q_RESIDUAL_CAP`]; larger residuals are rejected rather than
//! guessed at. Everything the rest of the crate generates stays inside this
//! class by construction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::error::Error;
use crate::fp::FpField;
use crate::poly::{Field, Poly, PolyRing, QField};
use crate::Result;

/// Largest residual degree (after root stripping) the rational backend
/// certifies.
pub const Q_RESIDUAL_CAP: usize = 4;

// ---------------------------------------------------------------------------
// F_p
// ---------------------------------------------------------------------------

/// Factors a nonzero polynomial over `F_p` into monic irreducibles with
/// multiplicity, in canonical ascending order. Constants factor as the
/// empty product.
pub fn fp_factor(k: &FpField, f: &Poly<u64>) -> Vec<(Poly<u64>, u32)> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut rem = k.p_monic(f);
    let mut out: BTreeMap<Poly<u64>, u32> = BTreeMap::new();
    let mut d = 1usize;
    while rem.degree().map_or(false, |n| n >= 1) {
        let n = rem.degree().unwrap();
        if 2 * d > n {
            // No factor of degree <= n/2 remains, so the rest is irreducible.
            *out.entry(rem.clone()).or_insert(0) += 1;
            break;
        }
        // x^(p^d) mod rem by iterated Frobenius.
        let mut h = k.p_x();
        for _ in 0..d {
            h = k.p_powmod(&h, k.p, &rem);
        }
        let s = k.p_gcd(&k.p_sub(&h, &k.p_x()), &rem);
        if s.degree().map_or(false, |sd| sd >= 1) {
            for q in equal_degree_split(k, &s, d) {
                let mut mult = 0u32;
                while let Some(next) = k.p_div_exact(&rem, &q) {
                    rem = next;
                    mult += 1;
                }
                debug_assert!(mult > 0);
                *out.entry(q).or_insert(0) += mult;
            }
        }
        d += 1;
    }
    out.into_iter().collect()
}

/// Splits a monic squarefree product of irreducibles of equal degree `d`.
fn equal_degree_split(k: &FpField, f: &Poly<u64>, d: usize) -> Vec<Poly<u64>> {
    let n = f.degree().expect("nonzero");
    if n == d {
        return alloc::vec![f.clone()];
    }
    // Deterministic sweep over candidate splitting elements in canonical
    // order; a splitter exists among polynomials of degree < deg f.
    for r in PolyEnum::new(k.p, n - 1).skip_constants() {
        let g = if k.p == 2 {
            // Trace map r + r^2 + ... + r^(2^(d-1)).
            let mut cur = k.p_rem(&r, f);
            let mut acc = cur.clone();
            for _ in 1..d {
                cur = k.p_mulmod(&cur, &cur, f);
                acc = k.p_add(&acc, &cur);
            }
            k.p_gcd(&acc, f)
        } else {
            let e = (BigUint::from(k.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let s = p_powmod_big(k, &r, &e, f);
            k.p_gcd(&k.p_sub(&s, &k.p_one()), f)
        };
        if let Some(gd) = g.degree() {
            if gd >= 1 && gd < n {
                let rest = k.p_div_exact(f, &g).expect("gcd divides");
                let mut parts = equal_degree_split(k, &g, d);
                parts.extend(equal_degree_split(k, &rest, d));
                return parts;
            }
        }
    }
    unreachable!("equal-degree splitting exhausted its candidate space");
}

/// `a^e mod m` with an arbitrary-precision exponent.
fn p_powmod_big(k: &FpField, a: &Poly<u64>, e: &BigUint, m: &Poly<u64>) -> Poly<u64> {
    let mut acc = k.p_rem(&k.p_one(), m);
    let mut base = k.p_rem(a, m);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = k.p_mulmod(&acc, &base, m);
        }
        base = k.p_mulmod(&base, &base, m);
    }
    acc
}

/// Canonical enumeration of all polynomials over `F_p` of degree at most
/// `max_deg`, in the order used everywhere else (degree, then coefficients
/// from the constant term up).
pub(crate) struct PolyEnum {
    p: u64,
    max_deg: usize,
    deg: usize,
    /// Counter over coefficients 0..deg; the leading coefficient cycles in
    /// 1..p and lives at the end.
    digits: Vec<u64>,
    done: bool,
    skip_const: bool,
}

impl PolyEnum {
    pub(crate) fn new(p: u64, max_deg: usize) -> Self {
        PolyEnum {
            p,
            max_deg,
            deg: 0,
            digits: alloc::vec![0],
            done: false,
            skip_const: false,
        }
    }

    fn skip_constants(mut self) -> Self {
        self.skip_const = true;
        if self.deg == 0 {
            self.deg = 1;
            self.digits = alloc::vec![0, 1];
            self.done = self.max_deg < 1;
        }
        self
    }
}

impl Iterator for PolyEnum {
    type Item = Poly<u64>;

    fn next(&mut self) -> Option<Poly<u64>> {
        if self.done {
            return None;
        }
        let k = FpField { p: self.p };
        let item = k.p_new(self.digits.clone());
        // Advance in coefficient-lex order: the leading digit cycles fastest
        // (over 1..p), carrying down toward the constant term (over 0..p);
        // when the constant term wraps, move up one degree.
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.deg += 1;
                if self.deg > self.max_deg {
                    self.done = true;
                } else {
                    self.digits = alloc::vec![0; self.deg + 1];
                    self.digits[self.deg] = 1;
                }
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.p {
                break;
            }
            self.digits[i] = if i == self.deg && self.deg > 0 { 1 } else { 0 };
        }
        Some(item)
    }
}

/// Whether a nonconstant polynomial is irreducible over `F_p` (up to a
/// scalar).
pub fn fp_is_irreducible(k: &FpField, f: &Poly<u64>) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(d) => {
            let fac = fp_factor(k, f);
            fac.len() == 1 && fac[0].1 == 1 && fac[0].0.degree() == Some(d)
        }
    }
}

// ---------------------------------------------------------------------------
// Q
// ---------------------------------------------------------------------------

/// Factors a nonzero rational polynomial as `unit * product of monic
/// irreducibles` with multiplicities, factors in canonical ascending order.
///
/// Complete for inputs whose squarefree parts, after rational roots are
/// removed, have residual degree at most [`Q_RESIDUAL_CAP`]; otherwise
/// returns [`Error::DegreeCapExceeded`].
pub fn q_factor(f: &Poly<BigRational>) -> Result<(BigRational, Vec<(Poly<BigRational>, u32)>)> {
    let k = QField;
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let unit = f.lc().unwrap().clone();
    if f.degree() == Some(0) {
        return Ok((unit, Vec::new()));
    }
    let monic = k.p_monic(f);
    let mut out: BTreeMap<Poly<BigRational>, u32> = BTreeMap::new();
    for (part, mult) in yun_squarefree(&monic) {
        for q in factor_squarefree(&part)? {
            // Parts of different multiplicity are coprime, so each
            // irreducible appears under exactly one part.
            *out.entry(q).or_insert(0) += mult;
        }
    }
    Ok((unit, out.into_iter().collect()))
}

/// Whether a nonconstant rational polynomial is irreducible (up to scalar).
pub fn q_is_irreducible(f: &Poly<BigRational>) -> Result<bool> {
    match f.degree() {
        None | Some(0) => Ok(false),
        Some(d) => {
            let (_, fac) = q_factor(f)?;
            Ok(fac.len() == 1 && fac[0].1 == 1 && fac[0].0.degree() == Some(d))
        }
    }
}

/// Yun's characteristic-zero squarefree decomposition of a monic
/// polynomial: pairwise coprime monic squarefree `(part, multiplicity)`
/// pairs whose weighted product is the input.
fn yun_squarefree(f: &Poly<BigRational>) -> Vec<(Poly<BigRational>, u32)> {
    let k = QField;
    let mut out = Vec::new();
    let df = k.p_derivative(f);
    let a0 = k.p_gcd(f, &df);
    let mut b = k.p_div_exact(f, &a0).expect("gcd divides");
    let mut c = k.p_div_exact(&df, &a0).expect("gcd divides");
    let mut i = 1u32;
    while b.degree().map_or(false, |d| d >= 1) {
        let d = k.p_sub(&c, &k.p_derivative(&b));
        let ai = k.p_gcd(&b, &d);
        if ai.degree().map_or(false, |dd| dd >= 1) {
            out.push((ai.clone(), i));
        }
        b = k.p_div_exact(&b, &ai).expect("gcd divides");
        c = k.p_div_exact(&d, &ai).expect("gcd divides");
        i += 1;
    }
    out
}

/// Factors a monic squarefree rational polynomial into monic irreducibles.
fn factor_squarefree(f: &Poly<BigRational>) -> Result<Vec<Poly<BigRational>>> {
    let k = QField;
    let mut out = Vec::new();
    let mut rem = f.clone();

    // Zero roots first, so divisor enumeration below sees nonzero ends.
    while rem.degree().map_or(false, |d| d >= 1) && k.is_zero(&k.p_coeff(&rem, 0)) {
        out.push(k.p_x());
        rem = k.p_div_exact(&rem, &k.p_x()).expect("x divides");
    }

    if rem.degree().map_or(true, |d| d == 0) {
        return Ok(out);
    }

    // Rational roots n/d with n | constant, d | leading of the primitive
    // integer form.
    let (_, prim) = crate::poly::primitive_int(&rem);
    let nums = arith::divisors(&prim[0].abs())?;
    let dens = arith::divisors(prim.last().unwrap())?;
    'cand: for n in &nums {
        for d in &dens {
            if !num_integer::Integer::gcd(n, d).is_one() {
                continue;
            }
            for root in [
                BigRational::new(n.clone(), d.clone()),
                BigRational::new(-n.clone(), d.clone()),
            ] {
                if k.is_zero(&k.p_eval(&rem, &root)) {
                    let lin = k.p_new(alloc::vec![-root, BigRational::one()]);
                    rem = k.p_div_exact(&rem, &lin).expect("root divides");
                    out.push(lin);
                    if rem.degree().map_or(true, |dd| dd == 0) {
                        break 'cand;
                    }
                }
            }
        }
    }

    match rem.degree() {
        None | Some(0) => {}
        Some(1) => unreachable!("linear residual would have had a rational root"),
        Some(2) | Some(3) => out.push(rem), // no rational root => irreducible
        Some(4) => match split_quartic(&rem)? {
            Some((a, b)) => {
                out.push(a);
                out.push(b);
            }
            None => out.push(rem),
        },
        Some(degree) => {
            return Err(Error::DegreeCapExceeded {
                degree,
                cap: Q_RESIDUAL_CAP,
            })
        }
    }
    out.sort();
    Ok(out)
}

/// Attempts to split a monic rational quartic without rational roots into
/// two monic quadratics, by undetermined integer coefficients on the
/// primitive integer form. `None` means irreducible.
fn split_quartic(f: &Poly<BigRational>) -> Result<Option<(Poly<BigRational>, Poly<BigRational>)>> {
    let (_, c) = crate::poly::primitive_int(f);
    let (c0, c1, c2, c3, c4) = (&c[0], &c[1], &c[2], &c[3], &c[4]);
    let two = BigInt::from(2);

    let mk = |a2: &BigInt, a1: &BigInt, a0: &BigInt| {
        let q = QField.p_new(alloc::vec![
            BigRational::from(a0.clone()),
            BigRational::from(a1.clone()),
            BigRational::from(a2.clone()),
        ]);
        QField.p_monic(&q)
    };

    // A factorization over Q descends to integer quadratics with
    // lc(a) * lc(b) = c4 > 0; normalize both leading coefficients positive.
    for a2 in arith::divisors(c4)? {
        let b2 = c4 / &a2;
        for a0p in arith::divisors(&c0.abs())? {
            for a0 in [a0p.clone(), -a0p.clone()] {
                if a0.is_zero() {
                    continue;
                }
                if (c0 % &a0).is_zero() {
                    let b0 = c0 / &a0;
                    // a2*b1 + b2*a1 = c3 ; a0*b1 + b0*a1 = c1
                    let det = &a2 * &b0 - &b2 * &a0;
                    if !det.is_zero() {
                        let b1n = c3 * &b0 - &b2 * c1;
                        let a1n = &a2 * c1 - c3 * &a0;
                        if (&b1n % &det).is_zero() && (&a1n % &det).is_zero() {
                            let b1 = b1n / &det;
                            let a1 = a1n / &det;
                            if &a2 * &b0 + &a1 * &b1 + &a0 * &b2 == *c2 {
                                return Ok(Some((mk(&a2, &a1, &a0), mk(&b2, &b1, &b0))));
                            }
                        }
                    } else {
                        // Underdetermined: use the middle coefficient.
                        // b2*a1^2 - c3*a1 + a2*(c2 - a2*b0 - a0*b2) = 0.
                        let m = c2 - &a2 * &b0 - &a0 * &b2;
                        let disc = c3 * c3 - BigInt::from(4) * &b2 * &a2 * &m;
                        if let Some(r) = arith::perfect_sqrt(&disc) {
                            for s in [r.clone(), -r] {
                                let num = c3 + &s;
                                let den = &two * &b2;
                                if !(&num % &den).is_zero() {
                                    continue;
                                }
                                let a1 = num / &den;
                                let b1n = c3 - &b2 * &a1;
                                if !(&b1n % &a2).is_zero() {
                                    continue;
                                }
                                let b1 = b1n / &a2;
                                if &a0 * &b1 + &b0 * &a1 == *c1
                                    && &a2 * &b0 + &a1 * &b1 + &a0 * &b2 == *c2
                                {
                                    return Ok(Some((mk(&a2, &a1, &a0), mk(&b2, &b1, &b0))));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn zp(coeffs: &[i64]) -> Poly<BigRational> {
        QField.p_new(coeffs.iter().map(|&n| rat(n, 1)).collect())
    }

    fn fpp(k: &FpField, coeffs: &[u64]) -> Poly<u64> {
        k.p_new(coeffs.to_vec())
    }

    // A pool of rational polynomials that are irreducible by elementary
    // arguments (degree <= 1, or no rational root for degrees 2 and 3,
    // checked by hand); used as an independent oracle.
    fn q_pool() -> Vec<Poly<BigRational>> {
        alloc::vec![
            zp(&[0, 1]),      // x
            zp(&[-1, 1]),     // x-1
            zp(&[1, 1]),      // x+1
            zp(&[2, 1]),      // x+2
            zp(&[1, 0, 1]),   // x^2+1
            zp(&[2, 0, 1]),   // x^2+2
            zp(&[-2, 0, 1]),  // x^2-2
            zp(&[1, 1, 1]),   // x^2+x+1
            QField.p_new(alloc::vec![rat(-1, 2), rat(1, 1)]), // x-1/2
        ]
    }

    #[test]
    fn q_factor_known_products() {
        let k = QField;
        let pool = q_pool();
        // (x^2+1)^2 * x
        let f = k.p_mul(&k.p_pow(&pool[4], 2), &pool[0]);
        let (u, fac) = q_factor(&f).unwrap();
        assert_eq!(u, rat(1, 1));
        assert_eq!(fac, alloc::vec![(pool[0].clone(), 1), (pool[4].clone(), 2)]);
    }

    #[test]
    fn q_factor_tracks_unit_and_roots() {
        let k = QField;
        // 3/2 (x - 1/2)(x + 2)
        let f = k.p_scale(
            &k.p_mul(&q_pool()[8], &q_pool()[3]),
            &rat(3, 2),
        );
        let (u, fac) = q_factor(&f).unwrap();
        assert_eq!(u, rat(3, 2));
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, q_pool()[8]);
        assert_eq!(fac[1].0, q_pool()[3]);
    }

    #[test]
    fn q_quartic_splits_into_quadratics() {
        let k = QField;
        let f = k.p_mul(&zp(&[1, 0, 1]), &zp(&[2, 0, 1])); // x^4+3x^2+2
        let (_, fac) = q_factor(&f).unwrap();
        assert_eq!(
            fac,
            alloc::vec![(zp(&[1, 0, 1]), 1), (zp(&[2, 0, 1]), 1)]
        );
    }

    #[test]
    fn q_quartic_square_of_quadratic() {
        let k = QField;
        let f = k.p_pow(&zp(&[1, 1, 1]), 2);
        let (_, fac) = q_factor(&f).unwrap();
        assert_eq!(fac, alloc::vec![(zp(&[1, 1, 1]), 2)]);
    }

    #[test]
    fn q_x4_plus_1_is_irreducible() {
        let f = zp(&[1, 0, 0, 0, 1]);
        let (_, fac) = q_factor(&f).unwrap();
        assert_eq!(fac, alloc::vec![(f.clone(), 1)]);
        assert!(q_is_irreducible(&f).unwrap());
    }

    #[test]
    fn q_residual_cap_is_honest() {
        let k = QField;
        let f = k.p_mul(&k.p_mul(&zp(&[1, 0, 1]), &zp(&[2, 0, 1])), &zp(&[3, 0, 1]));
        assert!(matches!(
            q_factor(&f),
            Err(Error::DegreeCapExceeded { degree: 6, cap: 4 })
        ));
    }

    #[test]
    fn q_factor_reassembles_pool_products() {
        let k = QField;
        let pool = q_pool();
        // Walk a fixed set of exponent patterns over the pool; each product
        // must factor back into exactly the chosen multiset.
        let patterns: &[&[(usize, u32)]] = &[
            &[(0, 1), (4, 1)],
            &[(1, 2), (5, 1)],
            &[(2, 1), (3, 1), (6, 1)],
            &[(7, 2), (8, 1)],
            &[(4, 1), (5, 1), (1, 3)],
            &[(8, 2), (0, 2), (2, 1)],
        ];
        for pat in patterns {
            let mut f = k.p_const(rat(5, 3));
            for &(i, e) in *pat {
                f = k.p_mul(&f, &k.p_pow(&pool[i], e));
            }
            let (u, fac) = q_factor(&f).unwrap();
            let mut back = k.p_const(u);
            for (q, e) in &fac {
                back = k.p_mul(&back, &k.p_pow(q, *e));
            }
            assert_eq!(back, f, "pattern {pat:?}");
            let expect: alloc::collections::BTreeMap<_, _> =
                pat.iter().map(|&(i, e)| (pool[i].clone(), e)).collect();
            let got: alloc::collections::BTreeMap<_, _> = fac.into_iter().collect();
            assert_eq!(got, expect, "pattern {pat:?}");
        }
    }

    #[test]
    fn fp_factor_known_shapes() {
        let k2 = FpField::new(2).unwrap();
        // x^2+1 = (x+1)^2 over F_2.
        assert_eq!(
            fp_factor(&k2, &fpp(&k2, &[1, 0, 1])),
            alloc::vec![(fpp(&k2, &[1, 1]), 2)]
        );
        // x^2+x+1 is the unique irreducible quadratic over F_2.
        assert_eq!(
            fp_factor(&k2, &fpp(&k2, &[1, 1, 1])),
            alloc::vec![(fpp(&k2, &[1, 1, 1]), 1)]
        );
        // x^4+x^2+1 = (x^2+x+1)^2.
        assert_eq!(
            fp_factor(&k2, &fpp(&k2, &[1, 0, 1, 0, 1])),
            alloc::vec![(fpp(&k2, &[1, 1, 1]), 2)]
        );
        // (x+1)^4.
        assert_eq!(
            fp_factor(&k2, &fpp(&k2, &[1, 0, 0, 0, 1])),
            alloc::vec![(fpp(&k2, &[1, 1]), 4)]
        );
    }

    #[test]
    fn fp_equal_degree_splitting() {
        let k2 = FpField::new(2).unwrap();
        // Two distinct irreducible cubics over F_2.
        let a = fpp(&k2, &[1, 1, 0, 1]); // x^3+x+1
        let b = fpp(&k2, &[1, 0, 1, 1]); // x^3+x^2+1
        let f = k2.p_mul(&a, &b);
        assert_eq!(fp_factor(&k2, &f), alloc::vec![(b, 1), (a, 1)]);

        let k3 = FpField::new(3).unwrap();
        // x^2+1 and x^2+x+2 are irreducible over F_3 (no roots).
        let c = fpp(&k3, &[1, 0, 1]);
        let d = fpp(&k3, &[2, 1, 1]);
        let f3 = k3.p_mul(&c, &d);
        assert_eq!(fp_factor(&k3, &f3), alloc::vec![(c, 1), (d, 1)]);
    }

    #[test]
    fn fp_factor_reassembles_exhaustively() {
        // Independent oracle: for every monic polynomial of degree <= 4 over
        // F_2 and F_3, the factorization multiplies back to the input and
        // every reported factor is irreducible by brute-force divisibility.
        for p in [2u64, 3] {
            let k = FpField::new(p).unwrap();
            let low: Vec<Poly<u64>> = PolyEnum::new(p, 2)
                .filter(|q| q.degree().map_or(false, |d| d >= 1) && k.p_is_monic(q))
                .collect();
            let brute_irreducible = |f: &Poly<u64>| {
                let df = f.degree().unwrap();
                low.iter()
                    .filter(|q| q.degree().unwrap() < df)
                    .all(|q| k.p_div_exact(f, q).is_none())
            };
            for f in PolyEnum::new(p, 4) {
                if f.degree().map_or(true, |d| d == 0) || !k.p_is_monic(&f) {
                    continue;
                }
                let fac = fp_factor(&k, &f);
                let mut back = k.p_one();
                for (q, e) in &fac {
                    assert!(k.p_is_monic(q));
                    // Any reducible polynomial of degree <= 4 has a factor of
                    // degree <= 2, so trial division over `low` is complete.
                    assert!(brute_irreducible(q), "claimed factor {q:?} reducible");
                    back = k.p_mul(&back, &k.p_pow(q, *e));
                }
                assert_eq!(back, f, "mod {p}");
            }
        }
    }

    #[test]
    fn fp_irreducibility_matches_brute_force() {
        for p in [2u64, 3, 5] {
            let k = FpField::new(p).unwrap();
            let low: Vec<Poly<u64>> = PolyEnum::new(p, 1)
                .filter(|q| q.degree() == Some(1))
                .collect();
            for f in PolyEnum::new(p, 3) {
                if f.degree().map_or(true, |d| d < 2) || !k.p_is_monic(&f) {
                    continue;
                }
                // Degree 2 or 3: reducible iff some linear factor divides.
                let brute = low.iter().all(|q| k.p_div_exact(&f, q).is_none());
                assert_eq!(fp_is_irreducible(&k, &f), brute, "p={p} f={f:?}");
            }
        }
    }

    #[test]
    fn poly_enumeration_is_canonical_and_complete() {
        let polys: Vec<Poly<u64>> = PolyEnum::new(2, 2).collect();
        // 1 zero + 1 constant + 2 linear + 4 quadratic.
        assert_eq!(polys.len(), 8);
        for w in polys.windows(2) {
            assert!(w[0] < w[1], "enumeration out of order");
        }
        let count5: usize = PolyEnum::new(5, 2).count();
        assert_eq!(count5, 5 + 20 + 100);
    }
}
