//! Finite posets with named elements.
//!
//! The order relation is stored as a full boolean incidence matrix; covers
//! are derived on demand. Element names are the identity of elements and the
//! declared element order fixes iteration order everywhere, which is what
//! makes every search in this crate deterministic.

use std::collections::HashMap;

use thiserror::Error;

use crate::bits;
use crate::family::SetFamily;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("invalid element name `{0}` (names must be nonempty and whitespace-free)")]
    InvalidName(String),
    #[error("cover relation closes a cycle through `{0}` (antisymmetry fails)")]
    CycleDetected(String),
    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("relation is not transitive: `{0}` <= `{1}` <= `{2}` but not `{0}` <= `{2}`")]
    NotTransitive(String, String, String),
    #[error("carrier has {0} elements, more than the supported {max}", max = bits::MAX_CARRIER)]
    TooManyElements(usize),
    #[error("enumeration cap {cap} exceeded; at least {lower_bound} results exist")]
    CapExceeded { cap: usize, lower_bound: usize },
    #[error("duplicate member set in family")]
    DuplicateMember,
    #[error("member set is not a subset of the family base")]
    MemberOutsideBase,
}

/// A finite partially ordered set.
///
/// May be empty; the empty poset arises naturally as the meet-irreducible
/// carrier of a one-point lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    index: HashMap<String, usize>,
    /// Row-major incidence: `leq[i * n + j]` iff element i <= element j.
    leq: Vec<bool>,
}

/// Default cap for up-set enumeration.
pub const DEFAULT_UP_SET_CAP: usize = 1_000_000;

fn check_names(names: &[String]) -> Result<HashMap<String, usize>, OrderError> {
    if names.len() > bits::MAX_CARRIER {
        return Err(OrderError::TooManyElements(names.len()));
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(OrderError::InvalidName(name.clone()));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(OrderError::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset as the reflexive-transitive closure of a cover relation.
    ///
    /// Rejects closures that violate antisymmetry, i.e. cover cycles.
    pub fn from_covers<S: AsRef<str>>(
        elements: &[S],
        covers: &[(S, S)],
    ) -> Result<Self, OrderError> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = check_names(&elements)?;
        let n = elements.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for (lo, hi) in covers {
            let i = *index
                .get(lo.as_ref())
                .ok_or_else(|| OrderError::UnknownName(lo.as_ref().to_owned()))?;
            let j = *index
                .get(hi.as_ref())
                .ok_or_else(|| OrderError::UnknownName(hi.as_ref().to_owned()))?;
            leq[i * n + j] = true;
        }
        // Floyd-Warshall boolean closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(OrderError::CycleDetected(elements[i].clone()));
                }
            }
        }
        Ok(Poset {
            elements,
            index,
            leq,
        })
    }

    /// Builds the discrete order: distinct elements are incomparable.
    pub fn antichain<S: AsRef<str>>(elements: &[S]) -> Result<Self, OrderError> {
        Self::from_covers(elements, &[])
    }

    /// Builds a poset from an explicit incidence matrix, validating the
    /// three order axioms.
    pub fn from_relation<S: AsRef<str>>(
        elements: &[S],
        matrix: &[Vec<bool>],
    ) -> Result<Self, OrderError> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = check_names(&elements)?;
        let n = elements.len();
        assert_eq!(matrix.len(), n, "matrix must be square over the carrier");
        let mut leq = vec![false; n * n];
        for (i, row) in matrix.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square over the carrier");
            for (j, v) in row.iter().enumerate() {
                leq[i * n + j] = *v;
            }
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(OrderError::NotReflexive(elements[i].clone()));
            }
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(OrderError::CycleDetected(elements[i].clone()));
                }
            }
        }
        for i in 0..n {
            for k in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] && !leq[i * n + j] {
                            return Err(OrderError::NotTransitive(
                                elements[i].clone(),
                                elements[k].clone(),
                                elements[j].clone(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(Poset {
            elements,
            index,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize, OrderError> {
        self.index_of(name)
            .ok_or_else(|| OrderError::UnknownName(name.to_owned()))
    }

    pub fn leq(&self, x: &str, y: &str) -> Result<bool, OrderError> {
        Ok(self.leq_idx(self.require(x)?, self.require(y)?))
    }

    #[inline]
    pub(crate) fn leq_idx(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.elements.len() + j]
    }

    pub(crate) fn lt_idx(&self, i: usize, j: usize) -> bool {
        i != j && self.leq_idx(i, j)
    }

    /// Cover pairs `(lower, upper)` of the transitive reduction, ordered by
    /// (lower index, upper index).
    pub fn covers(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt_idx(i, j) {
                    let through = (0..n).any(|k| self.lt_idx(i, k) && self.lt_idx(k, j));
                    if !through {
                        out.push((self.elements[i].clone(), self.elements[j].clone()));
                    }
                }
            }
        }
        out
    }

    /// The principal filter of `x`: every element above `x`, including `x`.
    pub fn principal_filter(&self, x: &str) -> Result<Vec<String>, OrderError> {
        let i = self.require(x)?;
        Ok((0..self.len())
            .filter(|j| self.leq_idx(i, *j))
            .map(|j| self.elements[j].clone())
            .collect())
    }

    pub(crate) fn up_mask(&self, i: usize) -> u64 {
        let mut m = 0;
        for j in 0..self.len() {
            if self.leq_idx(i, j) {
                m |= 1 << j;
            }
        }
        m
    }

    pub(crate) fn down_mask(&self, i: usize) -> u64 {
        let mut m = 0;
        for j in 0..self.len() {
            if self.leq_idx(j, i) {
                m |= 1 << j;
            }
        }
        m
    }

    /// Whether a subset (given by element names) is closed upward.
    pub fn is_up_set<S: AsRef<str>>(&self, subset: &[S]) -> Result<bool, OrderError> {
        let mut mask = 0u64;
        for name in subset {
            mask |= 1 << self.require(name.as_ref())?;
        }
        Ok(self.is_up_set_mask(mask))
    }

    pub(crate) fn is_up_set_mask(&self, mask: u64) -> bool {
        for i in bits::members(mask, self.len()) {
            if self.up_mask(i) & !mask != 0 {
                return false;
            }
        }
        true
    }

    /// Enumerates every up-set, including the empty set and the full carrier.
    ///
    /// Enumeration walks antichains of minimal elements with memoized upward
    /// closures; the result is sorted into canonical characteristic-vector
    /// order. `cap` (default 10^6) guards against exponential blow-up.
    pub fn up_set_family(&self, cap: Option<usize>) -> Result<SetFamily, OrderError> {
        let cap = cap.unwrap_or(DEFAULT_UP_SET_CAP);
        let n = self.len();
        let ups: Vec<u64> = (0..n).map(|i| self.up_mask(i)).collect();
        let mut found: Vec<u64> = Vec::new();
        // Each up-set is generated exactly once, from its antichain of
        // minimal elements, so a plain counter implements the cap.
        let mut stack: Vec<(usize, u64, u64)> = vec![(0, 0, 0)]; // (next, antichain, union)
        while let Some((next, chain, union)) = stack.pop() {
            if found.len() >= cap {
                return Err(OrderError::CapExceeded {
                    cap,
                    lower_bound: found.len() + 1,
                });
            }
            found.push(union);
            for j in next..n {
                // j must be incomparable with every chosen element.
                let comparable = bits::members(chain, n)
                    .any(|i| self.leq_idx(i, j) || self.leq_idx(j, i));
                if !comparable {
                    stack.push((j + 1, chain | 1 << j, union | ups[j]));
                }
            }
        }
        found.sort_by(|a, b| bits::lex_cmp(*a, *b, n));
        debug_assert!(found.windows(2).all(|w| w[0] != w[1]));
        Ok(SetFamily::from_masks(self.elements.clone(), found))
    }

    /// The sub-poset on a subset of elements, keeping the carrier's declared
    /// order among them.
    pub fn induced<S: AsRef<str>>(&self, subset: &[S]) -> Result<Poset, OrderError> {
        let mut idxs = Vec::with_capacity(subset.len());
        for name in subset {
            idxs.push(self.require(name.as_ref())?);
        }
        idxs.sort_unstable();
        if idxs.windows(2).any(|w| w[0] == w[1]) {
            return Err(OrderError::DuplicateElement(
                self.elements[idxs[0]].clone(),
            ));
        }
        let names: Vec<String> = idxs.iter().map(|&i| self.elements[i].clone()).collect();
        let m = idxs.len();
        let mut leq = vec![false; m * m];
        for (a, &i) in idxs.iter().enumerate() {
            for (b, &j) in idxs.iter().enumerate() {
                leq[a * m + b] = self.leq_idx(i, j);
            }
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(Poset {
            elements: names,
            index,
            leq,
        })
    }

    /// Longest-chain height of each element (minimal elements have height 0).
    pub(crate) fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut h = vec![0usize; n];
        // Elements sorted by down-set size are processed bottom-up.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.down_mask(i).count_ones());
        for &i in &order {
            for j in 0..n {
                if self.lt_idx(j, i) {
                    h[i] = h[i].max(h[j] + 1);
                }
            }
        }
        h
    }
}
