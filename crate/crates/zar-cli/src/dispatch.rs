//! Argument definitions and the subcommand dispatcher.  Every subcommand
//! produces a single JSON document on standard output and an exit code:
//! 0 on success, 1 on a domain error or failed suite, 2 on a parse error.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use zar::kronecker::{content_formula_check, kfr_axiom_check, kr_violation, phi_pullback, KrSpec};
use zar::semistar::{
    apply_wedge, complete_witness, is_vacant_base, separating_ideal, vacancy_check,
    wedge_ft_equal, StarSpec, VacancyOutcome,
};
use zar::poset::FinitePoset;
use zar::space::{b_f, b_x, intersection_ring};

use crate::expr::{
    parse_base, parse_class, parse_elem, parse_ideal, parse_ratfun, parse_subset, parse_u64_list,
};
use crate::suite::{run_all, run_one, sample_tpolys, SUITE_NAMES};
use crate::wire::{ModuleWire, PosetWire, SubsetWire, SuiteWire};
use crate::CliError;

/// Exact arithmetic on one-dimensional Zariski–Riemann spaces and finite
/// spectral spaces: closures, limit points, function rings, and semistar
/// operations.
#[derive(Parser)]
#[command(name = "zar", version, disable_help_subcommand = true)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

const DEFAULT_SEED_STR: &str = "20260817";

#[derive(Subcommand)]
pub enum Cmd {
    /// Apply a closure operator to a subset of the space.
    Closure {
        /// One of: cons, zar, inv, gen, sp.
        #[arg(long)]
        kind: String,
        /// Base pair: q-z, qx-qx, fpx-fpx:P, or fpx-fp:P.
        #[arg(long, default_value = "q-z")]
        base: String,
        /// Subset: JSON, or one of all, all+K, K, empty.
        #[arg(long)]
        set: String,
    },
    /// The limit point of a subset along an ultrafilter class.
    Limit {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long)]
        set: String,
        /// Either `free` or a point of the subset (a place, or K).
        #[arg(long)]
        class: String,
    },
    /// The basic open set of one element, or of a finite family.
    Bx {
        #[arg(long, default_value = "q-z")]
        base: String,
        /// Field element; repeat the flag for a family.
        #[arg(long, required = true)]
        x: Vec<String>,
    },
    /// The intersection ring of a subset, with an optional membership test.
    Intersect {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long)]
        set: String,
        /// Field element to test for membership.
        #[arg(long)]
        x: Option<String>,
    },
    /// Membership of a rational function in the function ring of a subset.
    KrMember {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long = "Y")]
        y: String,
        /// Rational function in T over K.
        #[arg(long)]
        h: String,
    },
    /// Verify the function-ring axioms on seeded random polynomials.
    KrAxioms {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long = "Y")]
        y: String,
        /// Number of random sample polynomials.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value = DEFAULT_SEED_STR)]
        seed: u64,
    },
    /// The pullback families of a rational function in T.
    PhiPullback {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long)]
        h: String,
    },
    /// Apply the wedge of a subset to a fractional ideal.
    StarApply {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long = "Y")]
        y: String,
        /// Generators, e.g. "[6, 4/3]".
        #[arg(long)]
        ideal: String,
    },
    /// Whether two subsets induce the same finite-type wedge.
    StarEq {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long = "Y1")]
        y1: String,
        #[arg(long = "Y2")]
        y2: String,
    },
    /// The completion of a subset: the largest subset with the same wedge.
    StarComplete {
        #[arg(long, default_value = "q-z")]
        base: String,
        #[arg(long = "Y")]
        y: String,
    },
    /// Vacancy of the base pair, or classification of one representation.
    Vacant {
        #[arg(long, default_value = "q-z")]
        base: String,
        /// When given, classify this subset instead of the whole base.
        #[arg(long = "Y")]
        y: Option<String>,
    },
    /// Operations on finite posets as spectral spaces.
    Poset {
        /// One of: closure, dual, limit, spec-zn, uf-prime.
        #[arg(long)]
        op: String,
        /// Poset JSON: {"elements": [...], "leq": [["a","b"], ...]}.
        #[arg(long)]
        poset: Option<String>,
        /// Closure kind: sp, gen, cons, zar, or inv.
        #[arg(long)]
        kind: Option<String>,
        /// Comma-separated element labels.
        #[arg(long)]
        set: Option<String>,
        /// Center label (for limit) or prime (for uf-prime).
        #[arg(long)]
        center: Option<String>,
        /// Modulus for spec-zn and uf-prime.
        #[arg(long)]
        n: Option<u64>,
        /// Comma-separated primes for uf-prime.
        #[arg(long)]
        members: Option<String>,
    },
    /// Run a named check suite, or all of them.
    Suite {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        name: String,
        #[arg(long, default_value = DEFAULT_SEED_STR)]
        seed: u64,
    },
}

/// A finished subcommand: the JSON to print and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub json: Value,
    pub code: i32,
}

impl Outcome {
    fn ok(json: Value) -> Outcome {
        Outcome { json, code: 0 }
    }
}

fn need<T>(v: Option<T>, what: &str, op: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::parse(format!("the poset operation {op:?} needs --{what}")))
}

/// Executes one parsed subcommand.
pub fn run(cmd: Cmd) -> Result<Outcome, CliError> {
    match cmd {
        Cmd::Closure { kind, base, set } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &set)?;
            let closed = match kind.as_str() {
                "cons" => y.cons_closure(),
                "zar" => y.zar_closure(),
                "inv" => y.inv_closure(),
                "gen" => y.gen_closure(),
                "sp" => y.sp_closure(),
                other => {
                    return Err(CliError::parse(format!(
                        "unknown closure kind {other:?}: use cons, zar, inv, gen, or sp"
                    )))
                }
            };
            Ok(Outcome::ok(json!(SubsetWire::from_subset(&closed))))
        }
        Cmd::Limit { base, set, class } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &set)?;
            let class = parse_class(&base, &class)?;
            let point = y.limit_point(&class)?;
            Ok(Outcome::ok(json!({ "limit": point.point_string() })))
        }
        Cmd::Bx { base, x } => {
            let base = parse_base(&base)?;
            let open = if x.len() == 1 {
                b_x(&base, &parse_elem(&base, &x[0])?)?
            } else {
                let fam = x
                    .iter()
                    .map(|s| parse_elem(&base, s))
                    .collect::<Result<Vec<_>, _>>()?;
                b_f(&base, &fam)?
            };
            Ok(Outcome::ok(json!(SubsetWire::from_subset(&open))))
        }
        Cmd::Intersect { base, set, x } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &set)?;
            let ring = intersection_ring(&y)?;
            let member = match x {
                Some(s) => Some(ring.member(&parse_elem(&base, &s)?)?),
                None => None,
            };
            Ok(Outcome::ok(json!({
                "constraint": SubsetWire::from_subset(ring.constraint()),
                "member": member,
            })))
        }
        Cmd::KrMember { base, y, h } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &y)?;
            let h = parse_ratfun(&base, &h)?;
            let spec = KrSpec::new(y)?;
            let witness = kr_violation(&spec, &h)?;
            Ok(Outcome::ok(json!({
                "member": witness.is_none(),
                "witness": witness.map(|v| v.place_string()),
            })))
        }
        Cmd::KrAxioms {
            base,
            y,
            samples,
            seed,
        } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &y)?;
            let spec = KrSpec::new(y)?;
            let polys = sample_tpolys(&base, samples, seed);
            let ax = kfr_axiom_check(&spec, &polys)?;
            let mut checked = ax.checked as u64 + 2;
            let mut violations = ax.violations;
            for f in &polys {
                let c = content_formula_check(&spec, f)?;
                checked += (c.coefficient_checks + c.placewise_checks) as u64;
                violations.extend(c.violations);
            }
            let passed = violations.is_empty();
            Ok(Outcome {
                json: json!({
                    "checked": checked,
                    "violations": violations,
                    "passed": passed,
                }),
                code: if passed { 0 } else { 1 },
            })
        }
        Cmd::PhiPullback { base, h } => {
            let base = parse_base(&base)?;
            let h = parse_ratfun(&base, &h)?;
            let fams = phi_pullback(&base, &h)?;
            let families: Vec<Value> = fams
                .iter()
                .map(|((i, j), fam)| {
                    json!({
                        "i": i,
                        "j": j,
                        "elements": fam.iter().map(|x| x.elem_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({ "families": families })))
        }
        Cmd::StarApply { base, y, ideal } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &y)?;
            let ideal = parse_ideal(&base, &ideal)?;
            let spec = StarSpec::new(y)?;
            let module = apply_wedge(&spec, &ideal);
            Ok(Outcome::ok(json!(ModuleWire::from_module(&module))))
        }
        Cmd::StarEq { base, y1, y2 } => {
            let base = parse_base(&base)?;
            let y1 = parse_subset(&base, &y1)?;
            let y2 = parse_subset(&base, &y2)?;
            if wedge_ft_equal(&y1, &y2)? {
                Ok(Outcome::ok(json!({ "equal": true })))
            } else {
                let witness = separating_ideal(&y1, &y2)?;
                let gens: Option<Vec<String>> = witness
                    .map(|w| w.generators().iter().map(|x| x.elem_string()).collect());
                Ok(Outcome::ok(json!({
                    "equal": false,
                    "separating_ideal": gens,
                })))
            }
        }
        Cmd::StarComplete { base, y } => {
            let base = parse_base(&base)?;
            let y = parse_subset(&base, &y)?;
            let completion = complete_witness(&y)?;
            Ok(Outcome::ok(json!({
                "completion": SubsetWire::from_subset(&completion),
            })))
        }
        Cmd::Vacant { base, y } => {
            let base = parse_base(&base)?;
            match y {
                None => {
                    let (vacant, reason) = is_vacant_base(&base)?;
                    Ok(Outcome::ok(json!({ "vacant": vacant, "reason": reason })))
                }
                Some(s) => {
                    let y = parse_subset(&base, &s)?;
                    let outcome = match vacancy_check(&y)? {
                        VacancyOutcome::Pass => "pass",
                        VacancyOutcome::Fail => "fail",
                        VacancyOutcome::Vacuous => "vacuous",
                    };
                    Ok(Outcome::ok(json!({ "outcome": outcome })))
                }
            }
        }
        Cmd::Poset {
            op,
            poset,
            kind,
            set,
            center,
            n,
            members,
        } => run_poset(&op, poset, kind, set, center, n, members),
        Cmd::Suite { name, seed } => {
            if name == "all" {
                let reports = run_all(seed)?;
                let checked: u64 = reports.iter().map(|r| r.checked).sum();
                let violations: u64 = reports.iter().map(|r| r.violations).sum();
                let passed = violations == 0;
                let wires: Vec<SuiteWire> = reports.iter().map(SuiteWire::from_report).collect();
                Ok(Outcome {
                    json: json!({
                        "suites": wires,
                        "checked": checked,
                        "violations": violations,
                        "passed": passed,
                    }),
                    code: if passed { 0 } else { 1 },
                })
            } else {
                if !SUITE_NAMES.contains(&name.as_str()) {
                    return Err(CliError::parse(format!(
                        "unknown suite {name:?}: use one of {} or all",
                        SUITE_NAMES.join(", ")
                    )));
                }
                let report = run_one(&name, seed)?;
                let passed = report.passed();
                Ok(Outcome {
                    json: json!(SuiteWire::from_report(&report)),
                    code: if passed { 0 } else { 1 },
                })
            }
        }
    }
}

fn parse_poset_json(s: &str) -> Result<FinitePoset, CliError> {
    let wire: crate::wire::PosetWire = serde_json::from_str(s)
        .map_err(|e| CliError::parse(format!("invalid poset JSON: {e}")))?;
    wire.into_poset()
}

fn label_list(s: &str) -> Vec<&str> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .collect()
}

fn run_poset(
    op: &str,
    poset: Option<String>,
    kind: Option<String>,
    set: Option<String>,
    center: Option<String>,
    n: Option<u64>,
    members: Option<String>,
) -> Result<Outcome, CliError> {
    match op {
        "closure" => {
            let p = parse_poset_json(&need(poset, "poset", op)?)?;
            let kind = need(kind, "kind", op)?;
            let set = need(set, "set", op)?;
            let labels = label_list(&set);
            let sub = p.subset(&labels)?;
            let closed = match kind.as_str() {
                "sp" | "zar" => p.sp_closure(&sub)?,
                "gen" | "inv" => p.gen_closure(&sub)?,
                "cons" => p.cons_closure(&sub)?,
                other => {
                    return Err(CliError::parse(format!(
                        "unknown closure kind {other:?}: use sp, gen, cons, zar, or inv"
                    )))
                }
            };
            let names: Vec<&str> = closed.iter().map(|&i| p.labels()[i].as_str()).collect();
            Ok(Outcome::ok(json!({ "set": names })))
        }
        "dual" => {
            let p = parse_poset_json(&need(poset, "poset", op)?)?;
            Ok(Outcome::ok(json!(PosetWire::from_poset(&p.dual()))))
        }
        "limit" => {
            let p = parse_poset_json(&need(poset, "poset", op)?)?;
            let set = need(set, "set", op)?;
            let center = need(center, "center", op)?;
            let sub = p.subset(&label_list(&set))?;
            let c = p.index_of(&center)?;
            let lim = p.principal_limit(&sub, c)?;
            Ok(Outcome::ok(json!({ "limit": p.labels()[lim] })))
        }
        "spec-zn" => {
            let n = need(n, "n", op)?;
            let p = zar::poset::spec_zn(n)?;
            Ok(Outcome::ok(json!(PosetWire::from_poset(&p))))
        }
        "uf-prime" => {
            let n = need(n, "n", op)?;
            let members = parse_u64_list(&need(members, "members", op)?)?;
            let center = need(center, "center", op)?;
            let c: u64 = center
                .parse()
                .map_err(|_| CliError::parse(format!("invalid center {center:?}")))?;
            let prime = zar::poset::ultrafilter_prime(n, &members, c)?;
            Ok(Outcome::ok(json!({ "prime": prime })))
        }
        other => Err(CliError::parse(format!(
            "unknown poset operation {other:?}: use closure, dual, limit, spec-zn, or uf-prime"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use zar::semistar::hat_closure;

    fn run_ok(cmd: Cmd) -> Value {
        let out = run(cmd).unwrap();
        assert_eq!(out.code, 0);
        out.json
    }

    #[test]
    fn closure_adds_the_generic_point_to_a_cofinite_set() {
        let v = run_ok(Cmd::Closure {
            kind: "cons".into(),
            base: "q-z".into(),
            set: r#"{"mode":"cofinite","places":[],"generic":false}"#.into(),
        });
        assert_eq!(v["generic"], json!(true));
        assert_eq!(v["mode"], json!("cofinite"));
    }

    #[test]
    fn kr_member_rejects_one_half_on_the_full_space() {
        let v = run_ok(Cmd::KrMember {
            base: "q-z".into(),
            y: "all".into(),
            h: "1/2".into(),
        });
        assert_eq!(v["member"], json!(false));
        assert_eq!(v["witness"], json!("p:2"));
    }

    #[test]
    fn star_eq_ignores_the_generic_point() {
        let v = run_ok(Cmd::StarEq {
            base: "q-z".into(),
            y1: "all".into(),
            y2: "all+K".into(),
        });
        assert_eq!(v["equal"], json!(true));
    }

    #[test]
    fn uf_prime_recovers_the_center() {
        let v = run_ok(Cmd::Poset {
            op: "uf-prime".into(),
            poset: None,
            kind: None,
            set: None,
            center: Some("3".into()),
            n: Some(12),
            members: Some("2,3".into()),
        });
        assert_eq!(v["prime"], json!(3));
    }

    #[test]
    fn missing_poset_arguments_are_parse_errors() {
        let e = run(Cmd::Poset {
            op: "dual".into(),
            poset: None,
            kind: None,
            set: None,
            center: None,
            n: None,
            members: None,
        })
        .unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn empty_subsets_are_domain_errors_for_membership() {
        let e = run(Cmd::KrMember {
            base: "q-z".into(),
            y: "empty".into(),
            h: "1/2".into(),
        })
        .unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn hat_and_completion_agree_on_the_cli_path() {
        let base = parse_base("q-z").unwrap();
        let y = parse_subset(&base, "all").unwrap();
        assert_eq!(complete_witness(&y).unwrap(), hat_closure(&y).unwrap());
    }
}
