//! Parsers for the textual input formats: base-pair selectors, field
//! element expressions, rational functions in `T`, places, space subsets,
//! and fractional ideals.
//!
//! Expressions use ordinary infix syntax over integer literals and the
//! variables `x` (the coordinate of a rational function field) and `T` (the
//! transcendental of `K(T)`): `+`, `-`, `*`, `/`, `^` and parentheses, with
//! `^` taking an integer exponent.  Everything is evaluated exactly.

use zar::field::{Base, FieldElem, Place, RatFunOps};
use zar::fp::FpField;
use zar::poly::PolyRing;
use zar::semistar::FracIdeal;
use zar::space::{UltrafilterClass, ZarSubset};
use zar::tpoly::{KField, TRatFun};
use zar::{Error, SpacePoint};

use crate::wire::SubsetWire;
use crate::CliError;

/// Largest exponent accepted after `^`; keeps intermediate degrees sane.
const EXPONENT_CAP: i64 = 64;

/// Parses a base-pair selector: `q-z`, `qx-qx`, `fpx-fpx:P`, or `fpx-fp:P`
/// with `P` a prime.
pub fn parse_base(s: &str) -> Result<Base, CliError> {
    match s {
        "q-z" => return Ok(Base::QZ),
        "qx-qx" => return Ok(Base::QxQx),
        _ => {}
    }
    if let Some(p) = s.strip_prefix("fpx-fpx:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::parse(format!("bad characteristic in base {s:?}")))?;
        return Ok(Base::fpx_fpx(p)?);
    }
    if let Some(p) = s.strip_prefix("fpx-fp:") {
        let p: u64 = p
            .parse()
            .map_err(|_| CliError::parse(format!("bad characteristic in base {s:?}")))?;
        return Ok(Base::fpx_fp(p)?);
    }
    Err(CliError::parse(format!(
        "unknown base {s:?}; expected q-z, qx-qx, fpx-fpx:P, or fpx-fp:P"
    )))
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(i64),
    Var(char),
    Op(char),
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>, CliError> {
    let mut out = Vec::new();
    let mut it = s.chars().peekable();
    while let Some(&c) = it.peek() {
        match c {
            ' ' | '\t' => {
                it.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(d) = it.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i64))
                        .ok_or_else(|| CliError::parse("integer literal too large"))?;
                    it.next();
                }
                out.push(Tok::Int(v));
            }
            'x' | 'T' => {
                it.next();
                out.push(Tok::Var(c));
            }
            '+' | '-' | '*' | '/' | '^' => {
                it.next();
                out.push(Tok::Op(c));
            }
            '(' => {
                it.next();
                out.push(Tok::LParen);
            }
            ')' => {
                it.next();
                out.push(Tok::RParen);
            }
            _ => return Err(CliError::parse(format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

/// Recursive-descent evaluator producing an element of `K(T)`.
struct Ev<'a> {
    k: KField,
    base: &'a Base,
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Ev<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<TRatFun, CliError> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = match c {
                '+' => self.k.r_add(&acc, &rhs),
                _ => self.k.r_sub(&acc, &rhs),
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<TRatFun, CliError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Op(c @ ('*' | '/'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = match c {
                '*' => self.k.r_mul(&acc, &rhs),
                _ => self
                    .k
                    .r_div(&acc, &rhs)
                    .ok_or(CliError::from(Error::ZeroDenominator))?,
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<TRatFun, CliError> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            let v = self.unary()?;
            return Ok(self.k.r_neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<TRatFun, CliError> {
        let b = self.atom()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.next() {
                Some(Tok::Int(e)) => e,
                _ => return Err(CliError::parse("expected an integer exponent after ^")),
            };
            if e > EXPONENT_CAP {
                return Err(CliError::parse(format!("exponent exceeds {EXPONENT_CAP}")));
            }
            let b = if neg {
                self.k
                    .r_inv(&b)
                    .ok_or(CliError::from(Error::ZeroDenominator))?
            } else {
                b
            };
            let mut acc = self.k.r_one();
            for _ in 0..e {
                acc = self.k.r_mul(&acc, &b);
            }
            return Ok(acc);
        }
        Ok(b)
    }

    fn atom(&mut self) -> Result<TRatFun, CliError> {
        match self.next() {
            Some(Tok::Int(v)) => Ok(self
                .k
                .r_from_poly(self.k.p_const(FieldElem::from_int(self.base, v)))),
            Some(Tok::Var('T')) => Ok(self.k.r_from_poly(self.k.p_x())),
            Some(Tok::Var(_)) => {
                let x = FieldElem::coordinate(self.base)?;
                Ok(self.k.r_from_poly(self.k.p_const(x)))
            }
            Some(Tok::LParen) => {
                let v = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(v),
                    _ => Err(CliError::parse("unbalanced parentheses")),
                }
            }
            t => Err(CliError::parse(format!("unexpected token {t:?}"))),
        }
    }
}

/// Parses an expression as an element of `K(T)`.
pub fn parse_ratfun(base: &Base, s: &str) -> Result<TRatFun, CliError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(CliError::parse("empty expression"));
    }
    let mut ev = Ev {
        k: KField::new(base),
        base,
        toks,
        pos: 0,
    };
    let v = ev.expr()?;
    if ev.pos != ev.toks.len() {
        return Err(CliError::parse("trailing input after expression"));
    }
    Ok(v)
}

/// Parses an expression as an element of `K`: an element of `K(T)` that
/// does not involve `T`.
pub fn parse_elem(base: &Base, s: &str) -> Result<FieldElem, CliError> {
    let h = parse_ratfun(base, s)?;
    ratfun_to_elem(base, &h)
}

/// Extracts the constant of a `T`-free rational function.
pub fn ratfun_to_elem(base: &Base, h: &TRatFun) -> Result<FieldElem, CliError> {
    if h.num().deg() > 0 || h.den().deg() > 0 {
        return Err(CliError::domain(
            "element-outside-field",
            "the expression must not involve T here",
        ));
    }
    let k = KField::new(base);
    let num = k.p_coeff(h.num(), 0);
    let den = k.p_coeff(h.den(), 0);
    num.div(&den)
        .ok_or_else(|| CliError::from(Error::ZeroDenominator))
}

/// Parses a place in its canonical display form: `p:N` for a prime of `Z`,
/// `q:POLY` for a monic irreducible in `x`, or `inf` for the degree
/// valuation.  The place must belong to the base pair.
pub fn parse_place(base: &Base, s: &str) -> Result<Place, CliError> {
    let place = if s == "inf" {
        Place::Infinity
    } else if let Some(n) = s.strip_prefix("p:") {
        let n: u64 = n
            .parse()
            .map_err(|_| CliError::parse(format!("bad prime in place {s:?}")))?;
        Place::prime(n)?
    } else if let Some(q) = s.strip_prefix("q:") {
        let elem = parse_elem(base, q)?;
        match elem {
            FieldElem::FunQ(f) => {
                if f.den().deg() > 0 {
                    return Err(CliError::domain(
                        "not-a-polynomial",
                        "a place must be given by a polynomial in x",
                    ));
                }
                Place::irreducible_q(f.num())?
            }
            FieldElem::FunFp { p, f } => {
                if f.den().deg() > 0 {
                    return Err(CliError::domain(
                        "not-a-polynomial",
                        "a place must be given by a polynomial in x",
                    ));
                }
                Place::irreducible_fp(&FpField { p }, f.num())?
            }
            FieldElem::Rat(_) => {
                return Err(CliError::from(Error::PlaceBaseMismatch(s.to_string())))
            }
        }
    } else {
        return Err(CliError::parse(format!(
            "unknown place {s:?}; expected p:N, q:POLY, or inf"
        )));
    };
    if !place.matches_base(base) {
        return Err(CliError::from(Error::PlaceBaseMismatch(
            place.place_string(),
        )));
    }
    Ok(place)
}

/// Parses a point of the space: `K` for the generic point or a place form.
pub fn parse_point(base: &Base, s: &str) -> Result<SpacePoint, CliError> {
    if s == "K" {
        return Ok(SpacePoint::Generic);
    }
    Ok(SpacePoint::Pt(parse_place(base, s)?))
}

/// Parses an ultrafilter class: `free`, or the point of a principal class
/// (`K` or a place form).
pub fn parse_class(base: &Base, s: &str) -> Result<UltrafilterClass, CliError> {
    if s == "free" {
        return Ok(UltrafilterClass::Free);
    }
    Ok(UltrafilterClass::Principal(parse_point(base, s)?))
}

/// Parses a subset of the space: the shorthands `all` (every place),
/// `all+K` (the whole space), `K` (the generic point alone), `empty`, or a
/// JSON object `{"mode": "finite"|"cofinite", "places": [...], "generic":
/// bool}`.
pub fn parse_subset(base: &Base, s: &str) -> Result<ZarSubset, CliError> {
    let s = s.trim();
    match s {
        "all" => return Ok(ZarSubset::all_places(base)),
        "all+K" => return Ok(ZarSubset::whole(base)),
        "K" => return Ok(ZarSubset::generic_only(base)),
        "empty" => return Ok(ZarSubset::empty(base)),
        _ => {}
    }
    if !s.starts_with('{') {
        return Err(CliError::parse(format!(
            "unknown subset {s:?}; expected all, all+K, K, empty, or a JSON object"
        )));
    }
    let wire: SubsetWire = serde_json::from_str(s)
        .map_err(|e| CliError::parse(format!("bad subset JSON: {e}")))?;
    wire.into_subset(base)
}

/// Parses a fractional ideal: `ideal:[g1, g2, ...]` (the prefix is
/// optional) with each generator an element expression.
pub fn parse_ideal(base: &Base, s: &str) -> Result<FracIdeal, CliError> {
    let s = s.trim();
    let s = s.strip_prefix("ideal:").unwrap_or(s).trim();
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| CliError::parse("expected ideal:[g1, g2, ...]"))?;
    let mut gens = Vec::new();
    for part in inner.split(',') {
        if part.trim().is_empty() {
            continue;
        }
        gens.push(parse_elem(base, part)?);
    }
    Ok(FracIdeal::new(base, gens)?)
}

/// Parses a comma-separated list of integers (for poset subcommands).
pub fn parse_u64_list(s: &str) -> Result<Vec<u64>, CliError> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.push(
            part.parse()
                .map_err(|_| CliError::parse(format!("bad integer {part:?}")))?,
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zar::field::val;

    #[test]
    fn bases_parse_and_reject() {
        assert_eq!(parse_base("q-z").unwrap(), Base::QZ);
        assert_eq!(parse_base("qx-qx").unwrap(), Base::QxQx);
        assert_eq!(parse_base("fpx-fpx:5").unwrap(), Base::fpx_fpx(5).unwrap());
        assert_eq!(parse_base("fpx-fp:2").unwrap(), Base::fpx_fp(2).unwrap());
        assert!(matches!(parse_base("z-q"), Err(CliError::Parse(_))));
        // Syntactically fine but 4 is not prime: a domain error.
        assert!(matches!(parse_base("fpx-fpx:4"), Err(CliError::Domain { .. })));
    }

    #[test]
    fn elements_evaluate_exactly() {
        let b = Base::QZ;
        let x = parse_elem(&b, "1/2 + 1/3").unwrap();
        assert_eq!(x, FieldElem::ratio(&b, 5, 6).unwrap());
        let x = parse_elem(&b, "-(2^3)/4").unwrap();
        assert_eq!(x, FieldElem::from_int(&b, -2));
        let x = parse_elem(&b, "10^-2").unwrap();
        assert_eq!(x, FieldElem::ratio(&b, 1, 100).unwrap());
        assert!(matches!(parse_elem(&b, "1/0"), Err(CliError::Domain { .. })));
        assert!(matches!(parse_elem(&b, "x"), Err(CliError::Domain { .. })));
        assert!(matches!(parse_elem(&b, "1 +"), Err(CliError::Parse(_))));
        assert!(matches!(parse_elem(&b, "(1"), Err(CliError::Parse(_))));
        assert!(matches!(parse_elem(&b, "T"), Err(CliError::Domain { .. })));
    }

    #[test]
    fn coordinate_expressions_work_over_function_fields() {
        let b = Base::QxQx;
        let x = parse_elem(&b, "(x^2 - 1)/(x + 1)").unwrap();
        // Reduces to x - 1, so its value at the place x-1 is positive.
        let v = parse_place(&b, "q:x-1").unwrap();
        assert_eq!(val(&b, &v, &x).unwrap(), 1);

        let b = Base::fpx_fp(3).unwrap();
        let x = parse_elem(&b, "1/x").unwrap();
        assert_eq!(val(&b, &Place::Infinity, &x).unwrap(), 1);
    }

    #[test]
    fn ratfun_expressions_in_t() {
        let b = Base::QZ;
        let h = parse_ratfun(&b, "(2 + T)/(1 + 2*T)").unwrap();
        assert_eq!(h.num().deg(), 1);
        assert_eq!(h.den().deg(), 1);
        let h = parse_ratfun(&b, "1/T").unwrap();
        assert_eq!(h.num().deg(), 0);
        assert_eq!(h.den().deg(), 1);
    }

    #[test]
    fn places_parse_in_canonical_form() {
        assert_eq!(
            parse_place(&Base::QZ, "p:7").unwrap().place_string(),
            "p:7"
        );
        assert!(matches!(
            parse_place(&Base::QZ, "p:6"),
            Err(CliError::Domain { .. })
        ));
        assert!(matches!(
            parse_place(&Base::QZ, "q:x"),
            Err(CliError::Domain { .. })
        ));
        let b = Base::QxQx;
        assert_eq!(
            parse_place(&b, "q:x^2+1").unwrap().place_string(),
            "q:x^2+1"
        );
        assert!(matches!(parse_place(&b, "q:x^2-1"), Err(CliError::Domain { .. })));
        let b = Base::fpx_fp(2).unwrap();
        assert_eq!(parse_place(&b, "inf").unwrap(), Place::Infinity);
        assert!(matches!(
            parse_place(&Base::fpx_fpx(2).unwrap(), "inf"),
            Err(CliError::Domain { .. })
        ));
    }

    #[test]
    fn subsets_parse_shorthands_and_json() {
        let b = Base::QZ;
        assert_eq!(parse_subset(&b, "all").unwrap(), ZarSubset::all_places(&b));
        assert_eq!(parse_subset(&b, "all+K").unwrap(), ZarSubset::whole(&b));
        let y = parse_subset(
            &b,
            r#"{"mode":"finite","places":["p:2","p:5"],"generic":true}"#,
        )
        .unwrap();
        assert!(y.contains_generic());
        assert!(y.contains_place(&Place::prime(2).unwrap()));
        assert!(!y.contains_place(&Place::prime(3).unwrap()));
        let y = parse_subset(&b, r#"{"mode":"cofinite","places":["p:2"]}"#).unwrap();
        assert!(y.is_cofinite());
        assert!(!y.contains_place(&Place::prime(2).unwrap()));
        assert!(matches!(
            parse_subset(&b, r#"{"mode":"open","places":[]}"#),
            Err(CliError::Domain { .. })
        ));
        assert!(matches!(parse_subset(&b, "everything"), Err(CliError::Parse(_))));
    }

    #[test]
    fn ideals_parse_generator_lists() {
        let b = Base::QZ;
        let i = parse_ideal(&b, "ideal:[6, 4/3]").unwrap();
        assert_eq!(i.generators().len(), 2);
        let j = parse_ideal(&b, "[6, 4/3]").unwrap();
        assert!(i.same_ideal(&j));
        assert!(matches!(parse_ideal(&b, "[]"), Err(CliError::Domain { .. })));
        assert!(matches!(parse_ideal(&b, "6, 4/3"), Err(CliError::Parse(_))));
    }
}
