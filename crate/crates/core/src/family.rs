//! Finite families of subsets of a named base set.
//!
//! A `SetFamily` is the shared container for up-set families, cut families,
//! Moore-family images and power sets. Members keep their declared order;
//! the canonical representation used for naming and deduplication sorts
//! members into characteristic-vector order.

use std::collections::HashMap;

use crate::bits;
use crate::poset::{OrderError, Poset};

/// A duplicate-free list of subsets of a fixed base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    base: Vec<String>,
    base_index: HashMap<String, usize>,
    members: Vec<u64>,
}

/// Renders a subset of named elements as `{a,b}` (base order, no spaces).
pub fn format_set<'a, I: IntoIterator<Item = &'a str>>(names: I) -> String {
    let mut s = String::from("{");
    for (k, name) in names.into_iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        s.push_str(name);
    }
    s.push('}');
    s
}

impl SetFamily {
    /// Builds a family from explicit member lists.
    pub fn new<S: AsRef<str>, T: AsRef<str>>(
        base: &[S],
        members: &[Vec<T>],
    ) -> Result<Self, OrderError> {
        let base: Vec<String> = base.iter().map(|s| s.as_ref().to_owned()).collect();
        if base.len() > bits::MAX_CARRIER {
            return Err(OrderError::TooManyElements(base.len()));
        }
        let mut base_index = HashMap::with_capacity(base.len());
        for (i, name) in base.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(OrderError::InvalidName(name.clone()));
            }
            if base_index.insert(name.clone(), i).is_some() {
                return Err(OrderError::DuplicateElement(name.clone()));
            }
        }
        let mut masks = Vec::with_capacity(members.len());
        for member in members {
            let mut m = 0u64;
            for name in member {
                let i = base_index
                    .get(name.as_ref())
                    .ok_or_else(|| OrderError::UnknownName(name.as_ref().to_owned()))?;
                m |= 1 << i;
            }
            if masks.contains(&m) {
                return Err(OrderError::DuplicateMember);
            }
            masks.push(m);
        }
        Ok(SetFamily {
            base,
            base_index,
            members: masks,
        })
    }

    pub(crate) fn from_masks(base: Vec<String>, members: Vec<u64>) -> Self {
        let base_index = base
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        debug_assert!({
            let mut m = members.clone();
            m.sort_unstable();
            m.windows(2).all(|w| w[0] != w[1])
        });
        SetFamily {
            base,
            base_index,
            members,
        }
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub(crate) fn member_masks(&self) -> &[u64] {
        &self.members
    }

    pub(crate) fn member_mask(&self, i: usize) -> u64 {
        self.members[i]
    }

    pub(crate) fn full_mask(&self) -> u64 {
        bits::full_mask(self.base.len())
    }

    /// Member `i` as element names in base order.
    pub fn member(&self, i: usize) -> Vec<String> {
        bits::members(self.members[i], self.base.len())
            .map(|j| self.base[j].clone())
            .collect()
    }

    /// Member `i` rendered as `{a,b}`.
    pub fn member_name(&self, i: usize) -> String {
        format_set(
            bits::members(self.members[i], self.base.len()).map(|j| self.base[j].as_str()),
        )
    }

    pub fn member_names(&self) -> Vec<String> {
        (0..self.len()).map(|i| self.member_name(i)).collect()
    }

    pub(crate) fn mask_name(&self, mask: u64) -> String {
        format_set(bits::members(mask, self.base.len()).map(|j| self.base[j].as_str()))
    }

    pub(crate) fn mask_of<S: AsRef<str>>(&self, set: &[S]) -> Result<u64, OrderError> {
        let mut m = 0u64;
        for name in set {
            let i = self
                .base_index
                .get(name.as_ref())
                .ok_or_else(|| OrderError::UnknownName(name.as_ref().to_owned()))?;
            m |= 1 << i;
        }
        Ok(m)
    }

    pub(crate) fn position_of_mask(&self, mask: u64) -> Option<usize> {
        self.members.iter().position(|m| *m == mask)
    }

    /// Whether the given set of element names is a member.
    pub fn contains_set<S: AsRef<str>>(&self, set: &[S]) -> Result<bool, OrderError> {
        Ok(self.position_of_mask(self.mask_of(set)?).is_some())
    }

    /// Whether the full base set is a member.
    pub fn contains_full_base(&self) -> bool {
        self.position_of_mask(self.full_mask()).is_some()
    }

    /// First witness pair `(i, j)` whose intersection is missing, if any.
    pub fn intersection_gap(&self) -> Option<(usize, usize)> {
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                let inter = self.members[i] & self.members[j];
                if self.position_of_mask(inter).is_none() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.intersection_gap().is_none()
    }

    /// Whether every member of `self` is a member of `other` (same base).
    pub fn is_subfamily_of(&self, other: &SetFamily) -> bool {
        self.base == other.base
            && self
                .members
                .iter()
                .all(|m| other.position_of_mask(*m).is_some())
    }

    /// The family as a poset under reverse inclusion: `A <= B` iff `A ⊇ B`.
    ///
    /// Elements are the members' `{..}` names, in declared member order.
    pub fn reverse_inclusion_poset(&self) -> Poset {
        let names: Vec<String> = self.member_names();
        let n = self.members.len();
        let mut matrix = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                matrix[i][j] = self.members[i] & self.members[j] == self.members[j];
            }
        }
        Poset::from_relation(&names, &matrix).expect("reverse inclusion is a partial order")
    }

    /// Canonical identity of the family: member masks sorted into
    /// characteristic-vector order. Families with equal canonical keys have
    /// the same members regardless of declared order.
    pub(crate) fn canonical_key(&self) -> Vec<u64> {
        let mut key = self.members.clone();
        key.sort_by(|a, b| bits::lex_cmp(*a, *b, self.base.len()));
        key
    }

    /// Canonical printable name, e.g. `{{},{b},{a,b}}`.
    pub fn canonical_name(&self) -> String {
        let key = self.canonical_key();
        let mut s = String::from("{");
        for (k, mask) in key.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&self.mask_name(*mask));
        }
        s.push('}');
        s
    }

    /// A copy with members re-sorted into canonical order.
    pub fn canonicalized(&self) -> SetFamily {
        SetFamily::from_masks(self.base.clone(), self.canonical_key())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_names_and_lookup() {
        let fam = SetFamily::new(
            &["a", "b", "c"],
            &[vec![], vec!["a"], vec!["a", "b"], vec!["a", "b", "c"]],
        )
        .unwrap();
        assert_eq!(fam.member_name(0), "{}");
        assert_eq!(fam.member_name(2), "{a,b}");
        assert!(fam.contains_set(&["b", "a"]).unwrap());
        assert!(!fam.contains_set(&["b"]).unwrap());
        assert!(fam.contains_full_base());
    }

    #[test]
    fn duplicate_members_rejected() {
        let err = SetFamily::new(&["a"], &[vec!["a"], vec!["a"]]).unwrap_err();
        assert!(matches!(err, OrderError::DuplicateMember));
    }

    #[test]
    fn intersection_closure_witness() {
        let fam = SetFamily::new(&["a", "b"], &[vec!["a"], vec!["b"], vec!["a", "b"]]).unwrap();
        // {a} ∩ {b} = {} is missing.
        assert_eq!(fam.intersection_gap(), Some((0, 1)));
        let closed =
            SetFamily::new(&["a", "b"], &[vec![], vec!["a"], vec!["b"], vec!["a", "b"]]).unwrap();
        assert!(closed.is_intersection_closed());
    }

    #[test]
    fn reverse_inclusion_poset_orders_by_superset() {
        let fam = SetFamily::new(&["a", "b"], &[vec!["a", "b"], vec!["a"], vec![]]).unwrap();
        let poset = fam.reverse_inclusion_poset();
        assert_eq!(poset.elements(), &["{a,b}", "{a}", "{}"]);
        assert!(poset.leq("{a,b}", "{a}").unwrap());
        assert!(poset.leq("{a}", "{}").unwrap());
        assert!(!poset.leq("{}", "{a}").unwrap());
    }

    #[test]
    fn canonical_name_is_order_independent() {
        let f1 = SetFamily::new(&["a", "b"], &[vec!["a"], vec![]]).unwrap();
        let f2 = SetFamily::new(&["a", "b"], &[vec![], vec!["a"]]).unwrap();
        assert_eq!(f1.canonical_name(), f2.canonical_name());
        assert_eq!(f1.canonical_name(), "{{},{a}}");
    }
}
