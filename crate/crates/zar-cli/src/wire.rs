//! JSON shapes shared by the command-line surface: subsets, modules, and
//! check-suite reports.  Field order is declaration order, so the emitted
//! objects are stable.

use serde::{Deserialize, Serialize};

use zar::field::Base;
use zar::poset::FinitePoset;
use zar::semistar::GenModule;
use zar::space::ZarSubset;

use crate::expr::parse_place;
use crate::CliError;

/// A subset of the space: a finite or cofinite set of places plus the
/// generic-point flag.  `places` lists the members in finite mode and the
/// exceptions in cofinite mode.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SubsetWire {
    pub mode: String,
    #[serde(default)]
    pub places: Vec<String>,
    #[serde(default)]
    pub generic: bool,
}

impl SubsetWire {
    pub fn from_subset(y: &ZarSubset) -> SubsetWire {
        SubsetWire {
            mode: if y.is_cofinite() { "cofinite" } else { "finite" }.to_string(),
            places: y.listed_places().iter().map(|v| v.place_string()).collect(),
            generic: y.contains_generic(),
        }
    }

    pub fn into_subset(self, base: &Base) -> Result<ZarSubset, CliError> {
        let mut places = std::collections::BTreeSet::new();
        for s in &self.places {
            places.insert(parse_place(base, s)?);
        }
        match self.mode.as_str() {
            "finite" => Ok(ZarSubset::finite(base, places, self.generic)?),
            "cofinite" => Ok(ZarSubset::cofinite(base, places, self.generic)?),
            m => Err(CliError::domain(
                "invalid-subset",
                format!("unknown subset mode {m:?}; expected finite or cofinite"),
            )),
        }
    }
}

/// One exception of a module: the minimum valuation demanded at a place.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ExceptionWire {
    pub place: String,
    pub exponent: i64,
}

/// A generalized module `{z : val_v(z) >= e_v on the constraint set}`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct ModuleWire {
    pub constraint: SubsetWire,
    pub exceptions: Vec<ExceptionWire>,
}

impl ModuleWire {
    pub fn from_module(m: &GenModule) -> ModuleWire {
        ModuleWire {
            constraint: SubsetWire::from_subset(m.constraint()),
            exceptions: m
                .exceptions()
                .iter()
                .map(|(v, e)| ExceptionWire {
                    place: v.place_string(),
                    exponent: *e,
                })
                .collect(),
        }
    }
}

/// A finite poset as labels plus its non-reflexive order pairs
/// `[a, b]` meaning `b` lies in the closure of `{a}`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PosetWire {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(String, String)>,
}

impl PosetWire {
    pub fn from_poset(p: &FinitePoset) -> PosetWire {
        let labels = p.labels();
        let mut leq = Vec::new();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if i != j && p.le(i, j) {
                    leq.push((labels[i].clone(), labels[j].clone()));
                }
            }
        }
        PosetWire {
            elements: labels.to_vec(),
            leq,
        }
    }

    pub fn into_poset(self) -> Result<FinitePoset, CliError> {
        let labels: Vec<&str> = self.elements.iter().map(|s| s.as_str()).collect();
        let rels: Vec<(&str, &str)> = self
            .leq
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Ok(FinitePoset::from_generators(&labels, &rels)?)
    }
}

/// The outcome of one named check suite.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct SuiteWire {
    pub suite: String,
    pub checked: u64,
    pub violations: u64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl SuiteWire {
    pub fn from_report(r: &crate::suite::SuiteReport) -> SuiteWire {
        SuiteWire {
            suite: r.name.to_string(),
            checked: r.checked,
            violations: r.violations,
            passed: r.passed(),
            notes: r.notes.clone(),
            examples: r.examples.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_wire_round_trips() {
        let b = Base::QZ;
        let y = crate::expr::parse_subset(
            &b,
            r#"{"mode":"cofinite","places":["p:3","p:2"],"generic":true}"#,
        )
        .unwrap();
        let w = SubsetWire::from_subset(&y);
        assert_eq!(w.mode, "cofinite");
        assert_eq!(w.places, vec!["p:2".to_string(), "p:3".to_string()]);
        assert!(w.generic);
        assert_eq!(w.clone().into_subset(&b).unwrap(), y);
    }

    #[test]
    fn poset_wire_round_trips() {
        let p = FinitePoset::from_generators(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let w = PosetWire::from_poset(&p);
        // Transitivity shows up in the emitted pairs.
        assert!(w.leq.contains(&("a".to_string(), "c".to_string())));
        assert_eq!(w.into_poset().unwrap(), p);
    }
}
