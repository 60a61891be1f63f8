//! Finite spectral spaces, presented as finite posets.
//!
//! A finite T0 topology is determined by its specialization order `x <= y`
//! ("`y` is a specialization of `x`", equivalently `y` lies in the closure
//! of `{x}`).  Closed sets are exactly the up-sets, so the topological
//! closure of a subset is its up-closure and the set of generalizations is
//! the down-closure.  On a finite space every subset is constructible, the
//! constructible closure is the identity, and every ultrafilter is
//! principal, which makes this family a complete, exhaustively checkable
//! model of the closure and limit-point operators.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::arith::factor_u64;
use crate::error::Error;
use crate::Result;

/// A finite poset with labelled points; the order relation is stored as a
/// full reflexive-transitive boolean matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// `le[i][j]` holds when point `j` specializes point `i` (lies in the
    /// closure of `{i}`).
    le: Vec<Vec<bool>>,
}

/// A subset of a poset's points, by index.
pub type SubIdx = BTreeSet<usize>;

impl FinitePoset {
    /// Builds the poset generated by `relations` (pairs `(a, b)` meaning
    /// `b` specializes `a`) on the given labels.  The reflexive-transitive
    /// closure is taken; duplicate labels, unknown labels, and relation
    /// cycles are rejected.
    pub fn from_generators(labels: &[&str], relations: &[(&str, &str)]) -> Result<FinitePoset> {
        let mut seen = BTreeSet::new();
        for l in labels {
            if !seen.insert(*l) {
                return Err(Error::DuplicateLabel(l.to_string()));
            }
        }
        let n = labels.len();
        let index = |l: &str| -> Result<usize> {
            labels
                .iter()
                .position(|m| *m == l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))
        };
        let mut le = alloc::vec![alloc::vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for (a, b) in relations {
            le[index(a)?][index(b)?] = true;
        }
        // Reflexive-transitive closure (Warshall).
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(Error::RelationCycle(
                        labels[i].to_string(),
                        labels[j].to_string(),
                    ));
                }
            }
        }
        Ok(FinitePoset {
            labels: labels.iter().map(|l| l.to_string()).collect(),
            le,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|m| m == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Whether `b` specializes `a` (`b` is in the closure of `{a}`).
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    /// Translates labels to an index subset.
    pub fn subset(&self, labels: &[&str]) -> Result<SubIdx> {
        labels.iter().map(|l| self.index_of(l)).collect()
    }

    /// Translates an index subset back to its sorted labels.
    pub fn label_set(&self, sub: &SubIdx) -> Vec<String> {
        let mut out: Vec<String> = sub.iter().map(|&i| self.labels[i].clone()).collect();
        out.sort();
        out
    }

    fn check_subset(&self, sub: &SubIdx) -> Result<()> {
        for &i in sub {
            if i >= self.len() {
                return Err(Error::InvalidSubset(alloc::format!("index {i}")));
            }
        }
        Ok(())
    }

    /// Topological closure: the set of specializations (up-closure).
    pub fn sp_closure(&self, sub: &SubIdx) -> Result<SubIdx> {
        self.check_subset(sub)?;
        let mut out = SubIdx::new();
        for j in 0..self.len() {
            if sub.iter().any(|&i| self.le[i][j]) {
                out.insert(j);
            }
        }
        Ok(out)
    }

    /// The set of generalizations (down-closure); on a finite space this is
    /// also the closure in the inverse topology.
    pub fn gen_closure(&self, sub: &SubIdx) -> Result<SubIdx> {
        self.check_subset(sub)?;
        let mut out = SubIdx::new();
        for j in 0..self.len() {
            if sub.iter().any(|&i| self.le[j][i]) {
                out.insert(j);
            }
        }
        Ok(out)
    }

    /// Closure in the constructible (patch) topology.  Every subset of a
    /// finite spectral space is already constructible, so this is the
    /// identity; it exists so the three closures can be exercised uniformly.
    pub fn cons_closure(&self, sub: &SubIdx) -> Result<SubIdx> {
        self.check_subset(sub)?;
        Ok(sub.clone())
    }

    /// Whether the subset is closed (an up-set).
    pub fn is_closed(&self, sub: &SubIdx) -> Result<bool> {
        Ok(self.sp_closure(sub)? == *sub)
    }

    /// Whether the subset is open (a down-set).
    pub fn is_open(&self, sub: &SubIdx) -> Result<bool> {
        Ok(self.gen_closure(sub)? == *sub)
    }

    /// The same points with the order reversed: specializations and
    /// generalizations trade places.
    pub fn dual(&self) -> FinitePoset {
        let n = self.len();
        let mut le = alloc::vec![alloc::vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                le[i][j] = self.le[j][i];
            }
        }
        FinitePoset {
            labels: self.labels.clone(),
            le,
        }
    }

    /// Points with no proper generalization (the generic points).
    pub fn minimal_points(&self) -> SubIdx {
        (0..self.len())
            .filter(|&j| (0..self.len()).all(|i| !self.le[i][j] || i == j))
            .collect()
    }

    /// Points with no proper specialization (the closed points).
    pub fn maximal_points(&self) -> SubIdx {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.le[i][j] || i == j))
            .collect()
    }

    /// The limit point of `sub` along the principal ultrafilter at
    /// `center`.  On a finite space the patch topology is discrete and every
    /// ultrafilter is principal, so the unique limit is the center itself;
    /// consequently the set of limits over all ultrafilters on `sub` is
    /// `sub` back again, its own patch closure.  The center must lie in the
    /// subset.
    pub fn principal_limit(&self, sub: &SubIdx, center: usize) -> Result<usize> {
        self.check_subset(sub)?;
        if !sub.contains(&center) {
            return Err(Error::CenterOutsideSubset(self.labels[center].clone()));
        }
        Ok(center)
    }
}

/// The spectrum of `Z/n` for `n >= 2`: one point per prime divisor of `n`,
/// no two of which are comparable (an antichain).
pub fn spec_zn(n: u64) -> Result<FinitePoset> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let labels: Vec<String> = factor_u64(n).iter().map(|(p, _)| p.to_string()).collect();
    let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
    FinitePoset::from_generators(&refs, &[])
}

/// The prime ideal of `Z/n` carved out by the principal ultrafilter at
/// `center` on the subset `members` of `Spec(Z/n)`, computed from first
/// principles: a residue `a` belongs to the ideal when the set of points of
/// `members` containing `a` lies in the ultrafilter, i.e. contains the
/// center.  The residue set is swept exhaustively and then identified
/// against the prime divisors of `n`.
pub fn ultrafilter_prime(n: u64, members: &[u64], center: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    let divisors: Vec<u64> = factor_u64(n).iter().map(|(p, _)| *p).collect();
    for &m in members {
        if !divisors.contains(&m) {
            return Err(Error::InvalidSubset(alloc::format!(
                "{m} is not a prime divisor of {n}"
            )));
        }
    }
    if !members.contains(&center) {
        return Err(Error::CenterOutsideSubset(center.to_string()));
    }
    let mut ideal = alloc::vec![false; n as usize];
    for a in 0..n {
        // The trace {q in members : a in q}; the principal ultrafilter at
        // the center holds exactly the traces containing the center.
        let trace_in_filter = members.iter().any(|&q| q == center && a % q == 0);
        ideal[a as usize] = trace_in_filter;
    }
    for &p in &divisors {
        let mut matches = true;
        for a in 0..n {
            if ideal[a as usize] != (a % p == 0) {
                matches = false;
                break;
            }
        }
        if matches {
            return Ok(p);
        }
    }
    Err(Error::InternalCheckFailed(alloc::format!(
        "residue set at {center} mod {n} matched no prime divisor"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// The three-point poset with one generic point under two closed points.
    fn vee() -> FinitePoset {
        FinitePoset::from_generators(&["g", "a", "b"], &[("g", "a"), ("g", "b")]).unwrap()
    }

    fn idx(v: &[usize]) -> SubIdx {
        v.iter().copied().collect()
    }

    #[test]
    fn construction_validates_input() {
        assert!(matches!(
            FinitePoset::from_generators(&["a", "a"], &[]),
            Err(Error::DuplicateLabel(_))
        ));
        assert!(matches!(
            FinitePoset::from_generators(&["a"], &[("a", "b")]),
            Err(Error::UnknownLabel(_))
        ));
        assert!(matches!(
            FinitePoset::from_generators(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]),
            Err(Error::RelationCycle(_, _))
        ));
        // Transitivity is inferred: a -> b -> c forces a -> c.
        let chain =
            FinitePoset::from_generators(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(chain.le(0, 2));
        assert!(!chain.le(2, 0));
    }

    #[test]
    fn closures_on_the_vee() {
        let p = vee();
        // Closure of the generic point is everything; the closed points are
        // already closed.
        assert_eq!(p.sp_closure(&idx(&[0])).unwrap(), idx(&[0, 1, 2]));
        assert_eq!(p.sp_closure(&idx(&[1])).unwrap(), idx(&[1]));
        assert_eq!(p.gen_closure(&idx(&[1])).unwrap(), idx(&[0, 1]));
        assert_eq!(p.gen_closure(&idx(&[0])).unwrap(), idx(&[0]));
        assert_eq!(p.cons_closure(&idx(&[1])).unwrap(), idx(&[1]));
        assert!(p.is_closed(&idx(&[1, 2])).unwrap());
        assert!(p.is_open(&idx(&[0])).unwrap());
        assert!(!p.is_open(&idx(&[1])).unwrap());
        assert_eq!(p.minimal_points(), idx(&[0]));
        assert_eq!(p.maximal_points(), idx(&[1, 2]));
    }

    #[test]
    fn dual_swaps_the_closures() {
        let p = vee();
        let d = p.dual();
        for mask in 0u32..8 {
            let sub: SubIdx = (0..3).filter(|i| mask & (1 << i) != 0).collect();
            assert_eq!(
                p.sp_closure(&sub).unwrap(),
                d.gen_closure(&sub).unwrap()
            );
            assert_eq!(
                p.gen_closure(&sub).unwrap(),
                d.sp_closure(&sub).unwrap()
            );
        }
        assert_eq!(d.dual(), p);
        assert_eq!(d.minimal_points(), p.maximal_points());
    }

    #[test]
    fn principal_limit_is_the_center() {
        let p = vee();
        assert_eq!(p.principal_limit(&idx(&[0, 1]), 0).unwrap(), 0);
        assert_eq!(p.principal_limit(&idx(&[0, 1]), 1).unwrap(), 1);
        assert!(matches!(
            p.principal_limit(&idx(&[1]), 0),
            Err(Error::CenterOutsideSubset(_))
        ));
        // Collecting the limit over every principal ultrafilter recovers the
        // subset, which is exactly its patch closure.
        let sub = idx(&[0, 2]);
        let limits: SubIdx = sub
            .iter()
            .map(|&c| p.principal_limit(&sub, c).unwrap())
            .collect();
        assert_eq!(limits, p.cons_closure(&sub).unwrap());
    }

    #[test]
    fn spec_zn_is_the_prime_antichain() {
        let p = spec_zn(12).unwrap();
        assert_eq!(p.labels(), &["2".to_string(), "3".to_string()]);
        assert!(!p.le(0, 1));
        assert!(!p.le(1, 0));
        assert_eq!(p.minimal_points(), p.maximal_points());
        assert!(matches!(spec_zn(1), Err(Error::InvalidModulus(1))));
        assert_eq!(spec_zn(49).unwrap().labels(), &["7".to_string()]);
    }

    #[test]
    fn ultrafilter_prime_recovers_the_center() {
        assert_eq!(ultrafilter_prime(12, &[2, 3], 2).unwrap(), 2);
        assert_eq!(ultrafilter_prime(12, &[2, 3], 3).unwrap(), 3);
        assert_eq!(ultrafilter_prime(12, &[3], 3).unwrap(), 3);
        assert_eq!(ultrafilter_prime(9, &[3], 3).unwrap(), 3);
        assert_eq!(ultrafilter_prime(30, &[2, 5], 5).unwrap(), 5);
        assert!(matches!(
            ultrafilter_prime(12, &[2], 3),
            Err(Error::CenterOutsideSubset(_))
        ));
        assert!(matches!(
            ultrafilter_prime(12, &[5], 5),
            Err(Error::InvalidSubset(_))
        ));
        assert!(matches!(
            ultrafilter_prime(1, &[1], 1),
            Err(Error::InvalidModulus(1))
        ));
    }

    /// Strategy: a random poset on up to `n` points, built from relation
    /// pairs that only point from lower to higher raw index (so the
    /// generated relation is acyclic by construction).
    fn poset_strategy(n: usize) -> impl Strategy<Value = FinitePoset> {
        let labels: Vec<String> = (0..n).map(|i| alloc::format!("v{i}")).collect();
        proptest::collection::vec((0..n, 0..n), 0..2 * n).prop_map(move |pairs| {
            let refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
            let rels: Vec<(&str, &str)> = pairs
                .iter()
                .filter(|(a, b)| a < b)
                .map(|&(a, b)| (refs[a], refs[b]))
                .collect();
            FinitePoset::from_generators(&refs, &rels).unwrap()
        })
    }

    proptest! {
        #[test]
        fn closure_laws_hold(p in poset_strategy(6), mask in 0u64..64, mask2 in 0u64..64) {
            let sub: SubIdx = (0..p.len()).filter(|i| mask & (1 << i) != 0).collect();
            let sub2: SubIdx = (0..p.len()).filter(|i| mask2 & (1 << i) != 0).collect();
            let cl = p.sp_closure(&sub).unwrap();
            // Extensive, idempotent, and closed under union.
            prop_assert!(cl.is_superset(&sub));
            prop_assert_eq!(p.sp_closure(&cl).unwrap(), cl.clone());
            let union: SubIdx = sub.union(&sub2).copied().collect();
            let cl_union = p.sp_closure(&union).unwrap();
            let both: SubIdx = cl.union(&p.sp_closure(&sub2).unwrap()).copied().collect();
            prop_assert_eq!(cl_union, both);
            // The two directed closures agree through the dual.
            prop_assert_eq!(p.gen_closure(&sub).unwrap(), p.dual().sp_closure(&sub).unwrap());
        }
    }
}
