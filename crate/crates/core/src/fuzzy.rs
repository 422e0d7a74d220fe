//! Membership maps from a poset into a lattice scale, and their cut families.
//!
//! The `p`-cut of a map collects the points whose value dominates `p`; the
//! cut family is intersection-closed and contains the whole space. A map is
//! monotone exactly when every cut is an up-set, and the scale modulo
//! equal-cuts is order-isomorphic to the cut family under reverse inclusion.
//! `represent_family` decides whether a given family arises as the cuts of a
//! monotone map, synthesizing a verified witness or a refutation; and
//! `restrict_cuts` realizes any intersection-closed subfamily of an existing
//! cut family.

use std::fmt;

use thiserror::Error;

use crate::bits;
use crate::closure::{
    find_closure_for_target, quotient_by_closure, subfamily_closure_candidate, validate_closure,
    ClosureCandidate, ClosureError, ClosureValidation, MeetSemantics, QuotientPoset,
};
use crate::family::SetFamily;
use crate::iso::{poset_isomorphism, verify_order_iso, IsoWitness, Preserves};
use crate::lattice::{FamilyLattice, FiniteLattice, LatticeError};
use crate::poset::{OrderError, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FuzzyError {
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("map misses space element `{0}`")]
    MissingEntry(String),
    #[error("map assigns `{0}` twice")]
    DuplicateEntry(String),
    #[error("family base does not match the space carrier")]
    BaseMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
}

/// A total assignment of scale values to space points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyMap {
    space: Poset,
    scale: FiniteLattice,
    assign: Vec<usize>,
}

impl FuzzyMap {
    pub fn new<S: AsRef<str>>(
        space: Poset,
        scale: FiniteLattice,
        entries: &[(S, S)],
    ) -> Result<Self, FuzzyError> {
        let mut assign = vec![usize::MAX; space.len()];
        for (x, v) in entries {
            let i = space
                .index_of(x.as_ref())
                .ok_or_else(|| FuzzyError::UnknownName(x.as_ref().to_owned()))?;
            let j = scale
                .order()
                .index_of(v.as_ref())
                .ok_or_else(|| FuzzyError::UnknownName(v.as_ref().to_owned()))?;
            if assign[i] != usize::MAX {
                return Err(FuzzyError::DuplicateEntry(x.as_ref().to_owned()));
            }
            assign[i] = j;
        }
        if let Some(i) = assign.iter().position(|&v| v == usize::MAX) {
            return Err(FuzzyError::MissingEntry(space.element(i).to_owned()));
        }
        Ok(FuzzyMap {
            space,
            scale,
            assign,
        })
    }

    pub(crate) fn from_indices(space: Poset, scale: FiniteLattice, assign: Vec<usize>) -> Self {
        debug_assert_eq!(assign.len(), space.len());
        FuzzyMap {
            space,
            scale,
            assign,
        }
    }

    pub fn space(&self) -> &Poset {
        &self.space
    }

    pub fn scale(&self) -> &FiniteLattice {
        &self.scale
    }

    pub fn value(&self, x: &str) -> Result<&str, FuzzyError> {
        let i = self
            .space
            .index_of(x)
            .ok_or_else(|| FuzzyError::UnknownName(x.to_owned()))?;
        Ok(self.scale.order().element(self.assign[i]))
    }

    /// Entries in space declared order.
    pub fn entries(&self) -> Vec<(String, String)> {
        self.space
            .elements()
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), self.scale.order().element(self.assign[i]).to_owned()))
            .collect()
    }

    pub(crate) fn cut_mask(&self, p: usize) -> u64 {
        let mut m = 0u64;
        for (i, &v) in self.assign.iter().enumerate() {
            if self.scale.order().leq_idx(p, v) {
                m |= 1 << i;
            }
        }
        m
    }

    /// The points whose value dominates `p`.
    pub fn p_cut(&self, p: &str) -> Result<Vec<String>, FuzzyError> {
        let pi = self
            .scale
            .order()
            .index_of(p)
            .ok_or_else(|| FuzzyError::UnknownName(p.to_owned()))?;
        let mask = self.cut_mask(pi);
        Ok(bits::members(mask, self.space.len())
            .map(|i| self.space.element(i).to_owned())
            .collect())
    }

    /// All cuts, deduplicated in order of first appearance along the scale's
    /// declared element order.
    pub fn cut_family(&self) -> CutReport {
        let n = self.scale.len();
        let mut members: Vec<u64> = Vec::new();
        let mut cut_of = Vec::with_capacity(n);
        for p in 0..n {
            let mask = self.cut_mask(p);
            let idx = match members.iter().position(|m| *m == mask) {
                Some(idx) => idx,
                None => {
                    members.push(mask);
                    members.len() - 1
                }
            };
            cut_of.push(idx);
        }
        // Top of each equal-cut class: the join of the class, which stays in
        // the class because a cut of a join is the intersection of the cuts.
        let class_tops: Vec<String> = (0..members.len())
            .map(|k| {
                let class = (0..n).filter(|&p| cut_of[p] == k);
                let top = self.scale.join_all_idx(class);
                debug_assert_eq!(cut_of[top], k);
                self.scale.order().element(top).to_owned()
            })
            .collect();
        CutReport {
            family: SetFamily::from_masks(self.space.elements().to_vec(), members),
            cut_of,
            class_tops,
        }
    }

    /// Monotonicity of the assignment: `x <= y` implies `m(x) <= m(y)`.
    pub fn is_up_set_map(&self) -> bool {
        let n = self.space.len();
        for i in 0..n {
            for j in 0..n {
                if self.space.leq_idx(i, j)
                    && !self.scale.order().leq_idx(self.assign[i], self.assign[j])
                {
                    return false;
                }
            }
        }
        true
    }

    /// Runs the monotonicity test and the all-cuts-are-up-sets test side by
    /// side. The two must agree; a disagreement would be an internal error
    /// and is surfaced as a diagnostic rather than trusted.
    pub fn up_set_check(&self) -> UpSetCheck {
        let monotone = self.is_up_set_map();
        let mut failing_cut = None;
        for p in 0..self.scale.len() {
            if !self.space.is_up_set_mask(self.cut_mask(p)) {
                failing_cut = Some(self.scale.order().element(p).to_owned());
                break;
            }
        }
        UpSetCheck {
            monotone,
            cuts_are_up_sets: failing_cut.is_none(),
            failing_cut,
        }
    }
}

/// Outcome of the two-route up-set test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpSetCheck {
    pub monotone: bool,
    pub cuts_are_up_sets: bool,
    /// A scale element whose cut fails the up-set test, when one exists.
    pub failing_cut: Option<String>,
}

impl UpSetCheck {
    pub fn agree(&self) -> bool {
        self.monotone == self.cuts_are_up_sets
    }
}

/// The cut family of a map with its bookkeeping.
#[derive(Debug, Clone)]
pub struct CutReport {
    /// The distinct cuts; contains the full space (the cut at the bottom).
    pub family: SetFamily,
    cut_of: Vec<usize>,
    class_tops: Vec<String>,
}

impl CutReport {
    /// Index into `family` of the cut at a scale element.
    pub fn cut_index_of(&self, scale_index: usize) -> usize {
        self.cut_of[scale_index]
    }

    /// The top (join) of the equal-cut class behind family member `k`.
    pub fn class_top_of(&self, k: usize) -> &str {
        &self.class_tops[k]
    }

    pub fn class_tops(&self) -> &[String] {
        &self.class_tops
    }
}

/// The scale modulo equal cuts, with the verified isomorphism onto the cut
/// family under reverse inclusion (each class maps to its cut).
pub fn cut_quotient(m: &FuzzyMap) -> (QuotientPoset, IsoWitness) {
    let report = m.cut_family();
    let n = m.scale.len();
    // Sending every scale element to the join of its class is a closure
    // operator; its quotient is exactly the equal-cut partition.
    let entries: Vec<(String, String)> = (0..n)
        .map(|p| {
            (
                m.scale.order().element(p).to_owned(),
                report.class_tops[report.cut_of[p]].clone(),
            )
        })
        .collect();
    let operator = match validate_closure(m.scale.order(), &entries) {
        Ok(ClosureValidation::Valid(op)) => op,
        other => unreachable!("class-top map must be a closure operator: {other:?}"),
    };
    let quotient = quotient_by_closure(&operator);
    let family_poset = report.family.reverse_inclusion_poset();
    let pairs: Vec<(String, String)> = quotient
        .poset()
        .elements()
        .iter()
        .enumerate()
        .map(|(k, block)| {
            let top = &quotient.block_tops()[k];
            let scale_idx = m.scale.order().index_of(top).expect("scale element");
            let member = report.cut_of[scale_idx];
            (block.clone(), report.family.member_name(member))
        })
        .collect();
    let witness = IsoWitness::new(
        pairs,
        Preserves {
            order: true,
            ..Preserves::default()
        },
    );
    assert!(
        verify_order_iso(quotient.poset(), &family_poset, &witness),
        "equal-cut quotient must be isomorphic to the cut family"
    );
    (quotient, witness)
}

/// Why a family is not the cut family of any monotone map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepresentabilityRefutation {
    /// The family misses the full space.
    MissingFullSet,
    /// Two members whose intersection is not a member.
    NotIntersectionClosed { first: String, second: String },
    /// A member that is not an up-set of the space.
    NotUpSet { member: String },
    /// No Moore family of the scale matches the family's shape.
    NoClosureOperator {
        scale_size: usize,
        family_size: usize,
    },
}

impl fmt::Display for RepresentabilityRefutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingFullSet => write!(f, "family does not contain the full space"),
            Self::NotIntersectionClosed { first, second } => write!(
                f,
                "family is not closed under intersections: {first} and {second}"
            ),
            Self::NotUpSet { member } => write!(f, "member {member} is not an up-set"),
            Self::NoClosureOperator {
                scale_size,
                family_size,
            } => write!(
                f,
                "no Moore family of the {scale_size}-element scale is order-isomorphic \
                 to the {family_size}-member family"
            ),
        }
    }
}

/// Outcome of a representability decision.
#[derive(Debug, Clone)]
pub enum Representation {
    /// A verified map whose cut family is exactly the requested one.
    Witness(FuzzyMap),
    Refutation(RepresentabilityRefutation),
}

impl Representation {
    pub fn witness(&self) -> Option<&FuzzyMap> {
        match self {
            Representation::Witness(m) => Some(m),
            Representation::Refutation(_) => None,
        }
    }
}

/// Decides whether `family` is the cut family of a monotone map from `space`
/// into `scale`.
///
/// The conditions checked are: the family contains the space, is closed under
/// intersections, consists of up-sets, and its reverse-inclusion shape is
/// realized by a Moore family of the scale. When all hold, the witness sends
/// each point to the scale preimage of the least member containing it; the
/// witness's cuts are recomputed and must reproduce the family.
pub fn represent_family(
    family: &SetFamily,
    space: &Poset,
    scale: &FiniteLattice,
) -> Result<Representation, FuzzyError> {
    if family.base() != space.elements() {
        return Err(FuzzyError::BaseMismatch);
    }
    if !family.contains_full_base() {
        return Ok(Representation::Refutation(
            RepresentabilityRefutation::MissingFullSet,
        ));
    }
    if let Some((i, j)) = family.intersection_gap() {
        return Ok(Representation::Refutation(
            RepresentabilityRefutation::NotIntersectionClosed {
                first: family.member_name(i),
                second: family.member_name(j),
            },
        ));
    }
    for k in 0..family.len() {
        if !space.is_up_set_mask(family.member_mask(k)) {
            return Ok(Representation::Refutation(
                RepresentabilityRefutation::NotUpSet {
                    member: family.member_name(k),
                },
            ));
        }
    }
    let family_poset = family.reverse_inclusion_poset();
    let Some(closure) = find_closure_for_target(scale, &family_poset) else {
        return Ok(Representation::Refutation(
            RepresentabilityRefutation::NoClosureOperator {
                scale_size: scale.len(),
                family_size: family.len(),
            },
        ));
    };
    let closed = closure.fixed_points();
    let closed_poset = scale.order().induced(&closed)?;
    let phi = poset_isomorphism(&closed_poset, &family_poset)
        .expect("search post-condition: closed elements match the family shape");
    // mu(x) = phi^{-1}(least member containing x); least = intersection of
    // all members containing x, a member by intersection-closure.
    let assign: Vec<usize> = (0..space.len())
        .map(|i| {
            let inter = family
                .member_masks()
                .iter()
                .filter(|m| bits::contains(**m, i))
                .fold(family.full_mask(), |acc, m| acc & m);
            let member = family
                .position_of_mask(inter)
                .expect("intersection-closed family");
            let closed_name = phi
                .preimage_of(&family.member_name(member))
                .expect("phi is onto the family");
            scale.order().index_of(closed_name).expect("scale element")
        })
        .collect();
    let witness = FuzzyMap::from_indices(space.clone(), scale.clone(), assign);
    assert!(
        witness.is_up_set_map(),
        "synthesized representability witness must be monotone"
    );
    let recomputed = witness.cut_family();
    assert_eq!(
        recomputed.family.canonical_key(),
        family.canonical_key(),
        "synthesized representability witness must reproduce the family"
    );
    Ok(Representation::Witness(witness))
}

/// Result of restricting a cut family to a subfamily.
#[derive(Debug, Clone)]
pub struct Restriction {
    /// Witness with cut family exactly the subfamily, or a refutation
    /// certificate (which, for an intersection-closed subfamily of a real cut
    /// family, would be a counterexample to the restriction theorem).
    pub representation: Representation,
    /// The explicit candidate closure evaluated on the full cut family, with
    /// its axiom report. Attached as a diagnostic; the returned witness never
    /// depends on it.
    pub diagnostic: ClosureCandidate,
}

/// Produces a map with cut family exactly `subfamily`, given a monotone map
/// whose cut family contains it.
pub fn restrict_cuts(m: &FuzzyMap, subfamily: &SetFamily) -> Result<Restriction, FuzzyError> {
    if !m.is_up_set_map() {
        return Err(FuzzyError::PreconditionViolated(
            "the map to restrict must be monotone".into(),
        ));
    }
    let report = m.cut_family();
    if !subfamily.is_subfamily_of(&report.family) {
        return Err(FuzzyError::PreconditionViolated(
            "the subfamily must consist of cuts of the map".into(),
        ));
    }
    if !subfamily.contains_full_base() {
        return Err(FuzzyError::PreconditionViolated(
            "the subfamily must contain the full space".into(),
        ));
    }
    if let Some((i, j)) = subfamily.intersection_gap() {
        return Err(FuzzyError::PreconditionViolated(format!(
            "the subfamily must be closed under intersections ({} and {})",
            subfamily.member_name(i),
            subfamily.member_name(j)
        )));
    }
    let carrier = FamilyLattice::new(report.family.clone())
        .expect("a cut family is intersection-closed and contains the space");
    let diagnostic =
        subfamily_closure_candidate(&carrier, subfamily, MeetSemantics::LeastAboveUnion)?;
    let representation = represent_family(subfamily, m.space(), m.scale())?;
    Ok(Restriction {
        representation,
        diagnostic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(names: &[&str]) -> FiniteLattice {
        let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        FiniteLattice::from_poset(Poset::from_covers(names, &covers).unwrap()).unwrap()
    }

    fn five_point() -> Poset {
        Poset::from_covers(
            &["a", "b", "c", "d", "e"],
            &[("b", "c"), ("b", "d"), ("a", "c"), ("a", "e"), ("d", "e")],
        )
        .unwrap()
    }

    /// The four-point antichain fixture: its scale is the reverse-inclusion
    /// lattice of the family {{}, {a}, {b}, {a,b}, {a,b,c}, {a,b,c,d}}, and
    /// the canonical map sends each point to the least member containing it.
    fn antichain_fixture() -> (FuzzyMap, SetFamily) {
        let space = Poset::antichain(&["a", "b", "c", "d"]).unwrap();
        let family = SetFamily::new(
            &["a", "b", "c", "d"],
            &[
                vec![],
                vec!["a"],
                vec!["b"],
                vec!["a", "b"],
                vec!["a", "b", "c"],
                vec!["a", "b", "c", "d"],
            ],
        )
        .unwrap();
        let scale = FamilyLattice::new(family.clone()).unwrap().lattice().clone();
        let m = FuzzyMap::new(
            space,
            scale,
            &[
                ("a", "{a}"),
                ("b", "{b}"),
                ("c", "{a,b,c}"),
                ("d", "{a,b,c,d}"),
            ],
        )
        .unwrap();
        (m, family)
    }

    #[test]
    fn cut_at_bottom_is_the_space() {
        let space = five_point();
        let scale = chain(&["0", "1"]);
        let m = FuzzyMap::new(
            space,
            scale,
            &[("a", "0"), ("b", "0"), ("c", "1"), ("d", "1"), ("e", "1")],
        )
        .unwrap();
        assert_eq!(m.p_cut("0").unwrap(), vec!["a", "b", "c", "d", "e"]);
        assert_eq!(m.p_cut("1").unwrap(), vec!["c", "d", "e"]);
    }

    #[test]
    fn constant_top_map_has_one_cut() {
        let space = Poset::antichain(&["x", "y"]).unwrap();
        let scale = chain(&["0", "1"]);
        let m = FuzzyMap::new(space, scale, &[("x", "1"), ("y", "1")]).unwrap();
        let report = m.cut_family();
        assert_eq!(report.family.len(), 1);
        assert_eq!(report.family.member(0), vec!["x", "y"]);
    }

    #[test]
    fn antichain_fixture_cuts_hit_every_member() {
        let (m, family) = antichain_fixture();
        assert_eq!(m.p_cut("{a,b}").unwrap(), vec!["a", "b"]);
        let report = m.cut_family();
        assert_eq!(report.family.len(), 6);
        assert_eq!(report.family.canonical_key(), family.canonical_key());
        // All cuts distinct: one class per scale element.
        for p in 0..6 {
            assert_eq!(report.cut_index_of(p), p);
        }
    }

    #[test]
    fn cut_family_is_intersection_closed_and_contains_space() {
        let (m, _) = antichain_fixture();
        let report = m.cut_family();
        assert!(report.family.is_intersection_closed());
        assert!(report.family.contains_full_base());
    }

    #[test]
    fn up_set_check_agrees_both_ways() {
        let space = five_point();
        let scale = chain(&["0", "1"]);
        let good = FuzzyMap::new(
            space.clone(),
            scale.clone(),
            &[("a", "0"), ("b", "0"), ("c", "1"), ("d", "1"), ("e", "1")],
        )
        .unwrap();
        let check = good.up_set_check();
        assert!(check.monotone && check.cuts_are_up_sets && check.agree());

        // d <= e but the value drops: the cut at 1 contains d, misses e.
        let bad = FuzzyMap::new(
            space,
            scale,
            &[("a", "0"), ("b", "0"), ("c", "1"), ("d", "1"), ("e", "0")],
        )
        .unwrap();
        let check = bad.up_set_check();
        assert!(!check.monotone && !check.cuts_are_up_sets && check.agree());
        assert_eq!(check.failing_cut.as_deref(), Some("1"));

        // Any map on an antichain is monotone.
        let anti = Poset::antichain(&["x", "y"]).unwrap();
        let m = FuzzyMap::new(anti, chain(&["0", "1"]), &[("x", "1"), ("y", "0")]).unwrap();
        assert!(m.is_up_set_map());
    }

    #[test]
    fn cut_quotient_of_fixture_is_the_whole_scale() {
        let (m, _) = antichain_fixture();
        let (quotient, witness) = cut_quotient(&m);
        assert_eq!(quotient.poset().len(), 6); // all cuts distinct
        let family_poset = m.cut_family().family.reverse_inclusion_poset();
        assert!(verify_order_iso(quotient.poset(), &family_poset, &witness));
    }

    #[test]
    fn cut_quotient_of_constant_map_is_a_point() {
        let space = Poset::antichain(&["x"]).unwrap();
        let m = FuzzyMap::new(space, chain(&["0", "1"]), &[("x", "1")]).unwrap();
        let (quotient, _) = cut_quotient(&m);
        assert_eq!(quotient.poset().len(), 1);
    }

    #[test]
    fn representability_witnesses_verify() {
        // {{}, {a}, X} over a 2-antichain against a 3-chain.
        let space = Poset::antichain(&["a", "b"]).unwrap();
        let scale = chain(&["0", "m", "1"]);
        let family =
            SetFamily::new(&["a", "b"], &[vec![], vec!["a"], vec!["a", "b"]]).unwrap();
        match represent_family(&family, &space, &scale).unwrap() {
            Representation::Witness(m) => {
                assert_eq!(m.value("a").unwrap(), "m");
                assert_eq!(m.value("b").unwrap(), "0");
            }
            Representation::Refutation(r) => panic!("expected witness, got {r}"),
        }
    }

    #[test]
    fn representability_refutations() {
        let space = Poset::antichain(&["a", "b"]).unwrap();
        let scale = chain(&["0", "1"]);
        // Missing the full space.
        let family = SetFamily::new(&["a", "b"], &[vec![], vec!["a"]]).unwrap();
        match represent_family(&family, &space, &scale).unwrap() {
            Representation::Refutation(RepresentabilityRefutation::MissingFullSet) => {}
            other => panic!("unexpected {other:?}"),
        }
        // The full power set needs four classes; a 2-chain has at most two.
        let family = SetFamily::new(
            &["a", "b"],
            &[vec![], vec!["a"], vec!["b"], vec!["a", "b"]],
        )
        .unwrap();
        match represent_family(&family, &space, &scale).unwrap() {
            Representation::Refutation(RepresentabilityRefutation::NoClosureOperator {
                ..
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
        // A non-up-set member on a chain space.
        let two_chain = Poset::from_covers(&["x", "y"], &[("x", "y")]).unwrap();
        let family =
            SetFamily::new(&["x", "y"], &[vec!["x"], vec!["x", "y"]]).unwrap();
        match represent_family(&family, &two_chain, &scale).unwrap() {
            Representation::Refutation(RepresentabilityRefutation::NotUpSet { member }) => {
                assert_eq!(member, "{x}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn restriction_on_the_antichain_fixture() {
        let (m, _) = antichain_fixture();
        let subfamily = SetFamily::new(
            &["a", "b", "c", "d"],
            &[
                vec![],
                vec!["a"],
                vec!["b"],
                vec!["a", "b", "c"],
                vec!["a", "b", "c", "d"],
            ],
        )
        .unwrap();
        let restriction = restrict_cuts(&m, &subfamily).unwrap();
        let witness = restriction
            .representation
            .witness()
            .expect("the subfamily is realizable");
        assert_eq!(
            witness.cut_family().family.canonical_key(),
            subfamily.canonical_key()
        );
        // The explicit construction evaluated on the full family maps {a,b}
        // to {a,b,c}, so it fails the inflationary axiom exactly there.
        let diag = &restriction.diagnostic;
        assert_eq!(diag.image_of("{a,b}").unwrap(), "{a,b,c}");
        assert_eq!(diag.axioms().inflationary.as_deref(), Some("{a,b}"));
        assert!(diag.axioms().monotone.is_none());
        assert!(diag.axioms().idempotent.is_none());
        assert!(!diag.is_valid());
    }

    #[test]
    fn restriction_to_the_full_family_is_immediate() {
        let (m, family) = antichain_fixture();
        let restriction = restrict_cuts(&m, &family).unwrap();
        let witness = restriction.representation.witness().unwrap();
        assert_eq!(
            witness.cut_family().family.canonical_key(),
            family.canonical_key()
        );
        // With the whole family as the subfamily the construction is the
        // identity and every axiom passes.
        assert!(restriction.diagnostic.is_valid());
        for (from, to) in restriction.diagnostic.map() {
            assert_eq!(from, to);
        }
    }

    #[test]
    fn restriction_to_the_space_alone() {
        let (m, _) = antichain_fixture();
        let trivial = SetFamily::new(&["a", "b", "c", "d"], &[vec!["a", "b", "c", "d"]]).unwrap();
        let restriction = restrict_cuts(&m, &trivial).unwrap();
        let witness = restriction.representation.witness().unwrap();
        assert_eq!(witness.cut_family().family.len(), 1);
    }

    #[test]
    fn restriction_preconditions() {
        let (m, _) = antichain_fixture();
        let not_cuts = SetFamily::new(
            &["a", "b", "c", "d"],
            &[vec!["c"], vec!["a", "b", "c", "d"]],
        )
        .unwrap();
        assert!(matches!(
            restrict_cuts(&m, &not_cuts),
            Err(FuzzyError::PreconditionViolated(_))
        ));
    }
}
