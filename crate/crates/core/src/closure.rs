//! Closure operators on posets and lattices.
//!
//! A closure operator is an inflationary, monotone, idempotent self-map; its
//! fixed points are the closed elements. On a lattice the closed sets are
//! exactly the Moore families (meet-closed sets containing the top), and the
//! quotient by equal closure values is order-isomorphic to the closed
//! elements. This module implements that dictionary, composition of closures,
//! quotient construction, the explicit candidate closure built from a
//! subfamily of a cut family, and the search for a closure operator whose
//! quotient matches a target shape.

use thiserror::Error;

use crate::bits;
use crate::family::{format_set, SetFamily};
use crate::iso::{poset_isomorphism, IsoWitness, Preserves};
use crate::lattice::{FamilyLattice, FiniteLattice, LatticeError};
use crate::poset::{OrderError, Poset};

/// Default cap on candidates examined by closure enumeration.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("map misses carrier element `{0}`")]
    MissingEntry(String),
    #[error("map assigns `{0}` twice")]
    DuplicateEntry(String),
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("not a Moore family: {0}")]
    NotMooreFamily(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("enumeration cap {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A verified closure operator together with its carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureOperator {
    carrier: Poset,
    map: Vec<usize>,
}

impl ClosureOperator {
    pub fn carrier(&self) -> &Poset {
        &self.carrier
    }

    pub fn apply(&self, x: &str) -> Result<&str, ClosureError> {
        let i = self.carrier.require(x)?;
        Ok(self.carrier.element(self.map[i]))
    }

    #[inline]
    pub(crate) fn apply_idx(&self, i: usize) -> usize {
        self.map[i]
    }

    /// Map entries in carrier order.
    pub fn entries(&self) -> Vec<(String, String)> {
        self.carrier
            .elements()
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), self.carrier.element(self.map[i]).to_owned()))
            .collect()
    }

    /// The closed elements (fixed points), in carrier order.
    pub fn fixed_points(&self) -> Vec<String> {
        self.carrier
            .elements()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.map[*i] == *i)
            .map(|(_, e)| e.clone())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn identity(carrier: &Poset) -> ClosureOperator {
        ClosureOperator {
            carrier: carrier.clone(),
            map: (0..carrier.len()).collect(),
        }
    }

    pub fn constant_to_top(lattice: &FiniteLattice) -> ClosureOperator {
        ClosureOperator {
            carrier: lattice.order().clone(),
            map: vec![lattice.top_idx(); lattice.len()],
        }
    }
}

/// Which closure axiom a report entry talks about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// (a) `p <= C(p)`
    Inflationary,
    /// (b) `p <= q` implies `C(p) <= C(q)`
    Monotone,
    /// (c) `C(C(p)) = C(p)`
    Idempotent,
}

/// Pass/fail per closure axiom, with the first witness for each failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub inflationary: Option<String>,
    pub monotone: Option<(String, String)>,
    pub idempotent: Option<String>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.inflationary.is_none() && self.monotone.is_none() && self.idempotent.is_none()
    }

    /// The first violated axiom in (a), (b), (c) order, with its witness.
    pub fn first_violation(&self) -> Option<(Axiom, String)> {
        if let Some(p) = &self.inflationary {
            return Some((Axiom::Inflationary, format!("axiom (a) fails at {p}")));
        }
        if let Some((p, q)) = &self.monotone {
            return Some((Axiom::Monotone, format!("axiom (b) fails at {p} <= {q}")));
        }
        if let Some(p) = &self.idempotent {
            return Some((Axiom::Idempotent, format!("axiom (c) fails at {p}")));
        }
        None
    }
}

fn axiom_report(carrier: &Poset, map: &[usize]) -> AxiomReport {
    let n = carrier.len();
    let inflationary = (0..n)
        .find(|&i| !carrier.leq_idx(i, map[i]))
        .map(|i| carrier.element(i).to_owned());
    let mut monotone = None;
    'outer: for i in 0..n {
        for j in 0..n {
            if carrier.leq_idx(i, j) && !carrier.leq_idx(map[i], map[j]) {
                monotone = Some((carrier.element(i).to_owned(), carrier.element(j).to_owned()));
                break 'outer;
            }
        }
    }
    let idempotent = (0..n)
        .find(|&i| map[map[i]] != map[i])
        .map(|i| carrier.element(i).to_owned());
    AxiomReport {
        inflationary,
        monotone,
        idempotent,
    }
}

/// Outcome of validating a self-map against the closure axioms.
///
/// Axiom violations are a normal result, not an error: only malformed input
/// (non-total maps, unknown names) is an `Err`.
#[derive(Debug, Clone)]
pub enum ClosureValidation {
    Valid(ClosureOperator),
    Violation(AxiomReport),
}

pub fn validate_closure<S: AsRef<str>>(
    carrier: &Poset,
    entries: &[(S, S)],
) -> Result<ClosureValidation, ClosureError> {
    let n = carrier.len();
    let mut map = vec![usize::MAX; n];
    for (from, to) in entries {
        let i = carrier
            .index_of(from.as_ref())
            .ok_or_else(|| ClosureError::UnknownName(from.as_ref().to_owned()))?;
        let j = carrier
            .index_of(to.as_ref())
            .ok_or_else(|| ClosureError::UnknownName(to.as_ref().to_owned()))?;
        if map[i] != usize::MAX {
            return Err(ClosureError::DuplicateEntry(from.as_ref().to_owned()));
        }
        map[i] = j;
    }
    if let Some(i) = map.iter().position(|&v| v == usize::MAX) {
        return Err(ClosureError::MissingEntry(carrier.element(i).to_owned()));
    }
    let report = axiom_report(carrier, &map);
    if report.all_pass() {
        Ok(ClosureValidation::Valid(ClosureOperator {
            carrier: carrier.clone(),
            map,
        }))
    } else {
        Ok(ClosureValidation::Violation(report))
    }
}

/// The closed elements of a closure operator on a lattice.
///
/// The result always contains the top and is closed under all meets (it is a
/// Moore family); those facts are consequences of the axioms and are what the
/// property suites check.
pub fn closed_elements(
    lattice: &FiniteLattice,
    c: &ClosureOperator,
) -> Result<Vec<String>, ClosureError> {
    if c.carrier != *lattice.order() {
        return Err(ClosureError::CarrierMismatch(
            "operator carrier differs from the lattice order".into(),
        ));
    }
    Ok(c.fixed_points())
}

/// The closure operator whose closed elements are a given Moore family:
/// each element maps to the least closed element above it.
pub fn closure_from_moore_family<S: AsRef<str>>(
    lattice: &FiniteLattice,
    closed: &[S],
) -> Result<ClosureOperator, ClosureError> {
    let mut mask = 0u64;
    for name in closed {
        mask |= 1 << lattice.order().require(name.as_ref())?;
    }
    closure_from_moore_mask(lattice, mask)
}

pub(crate) fn is_moore_mask(lattice: &FiniteLattice, mask: u64) -> Result<(), String> {
    if !bits::contains(mask, lattice.top_idx()) {
        return Err(format!("missing top element {}", lattice.top()));
    }
    let n = lattice.len();
    for i in bits::members(mask, n) {
        for j in bits::members(mask, n) {
            let m = lattice.meet_idx(i, j);
            if !bits::contains(mask, m) {
                return Err(format!(
                    "meet of {} and {} is {}, outside the family",
                    lattice.order().element(i),
                    lattice.order().element(j),
                    lattice.order().element(m)
                ));
            }
        }
    }
    Ok(())
}

pub(crate) fn closure_from_moore_mask(
    lattice: &FiniteLattice,
    mask: u64,
) -> Result<ClosureOperator, ClosureError> {
    is_moore_mask(lattice, mask).map_err(ClosureError::NotMooreFamily)?;
    let n = lattice.len();
    let map: Vec<usize> = (0..n)
        .map(|i| {
            lattice.meet_all_idx(
                bits::members(mask, n).filter(|&s| lattice.order().leq_idx(i, s)),
            )
        })
        .collect();
    let report = axiom_report(lattice.order(), &map);
    debug_assert!(report.all_pass());
    Ok(ClosureOperator {
        carrier: lattice.order().clone(),
        map,
    })
}

/// The quotient of a carrier by equal closure values.
///
/// Blocks carry the elements with the same closure value; each block's top is
/// its unique closed element, and blocks are ordered by the order of their
/// tops. The attached witness maps each block onto its top, an order
/// isomorphism onto the closed elements as a sub-poset.
#[derive(Debug, Clone)]
pub struct QuotientPoset {
    carrier: Poset,
    blocks: Vec<Vec<String>>,
    block_tops: Vec<String>,
    poset: Poset,
    closed_iso: IsoWitness,
}

impl QuotientPoset {
    pub fn carrier(&self) -> &Poset {
        &self.carrier
    }

    /// The partition, one entry per block, members in carrier order.
    pub fn blocks(&self) -> &[Vec<String>] {
        &self.blocks
    }

    /// The closed element of each block.
    pub fn block_tops(&self) -> &[String] {
        &self.block_tops
    }

    /// The quotient as a poset; elements are block names like `{d,e}`.
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// Witness for quotient ≅ closed elements (block name to top name).
    pub fn closed_iso(&self) -> &IsoWitness {
        &self.closed_iso
    }

    pub fn block_name_of(&self, element: &str) -> Result<&str, OrderError> {
        for (k, block) in self.blocks.iter().enumerate() {
            if block.iter().any(|e| e == element) {
                return Ok(self.poset.element(k));
            }
        }
        Err(OrderError::UnknownName(element.to_owned()))
    }

    /// Union of the members of the named blocks, in carrier order.
    pub fn union_of_blocks<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<String>, OrderError> {
        let mut mask = 0u64;
        for name in names {
            let k = self.poset.require(name.as_ref())?;
            for member in &self.blocks[k] {
                mask |= 1 << self.carrier.require(member).unwrap();
            }
        }
        Ok(bits::members(mask, self.carrier.len())
            .map(|i| self.carrier.element(i).to_owned())
            .collect())
    }
}

pub fn quotient_by_closure(c: &ClosureOperator) -> QuotientPoset {
    let carrier = c.carrier.clone();
    let n = carrier.len();
    // Closed values in carrier order name the blocks.
    let mut tops: Vec<usize> = Vec::new();
    for i in 0..n {
        let v = c.map[i];
        if !tops.contains(&v) {
            tops.push(v);
        }
    }
    tops.sort_unstable();
    let blocks: Vec<Vec<usize>> = tops
        .iter()
        .map(|&v| (0..n).filter(|&i| c.map[i] == v).collect())
        .collect();
    let block_names: Vec<String> = blocks
        .iter()
        .map(|b| format_set(b.iter().map(|&i| carrier.element(i))))
        .collect();
    let k = blocks.len();
    let mut matrix = vec![vec![false; k]; k];
    for a in 0..k {
        for b in 0..k {
            matrix[a][b] = carrier.leq_idx(tops[a], tops[b]);
        }
    }
    let poset =
        Poset::from_relation(&block_names, &matrix).expect("closed-value order is a partial order");
    let block_tops: Vec<String> = tops.iter().map(|&v| carrier.element(v).to_owned()).collect();
    let closed_iso = IsoWitness::new(
        block_names
            .iter()
            .cloned()
            .zip(block_tops.iter().cloned())
            .collect(),
        Preserves {
            order: true,
            ..Preserves::default()
        },
    );
    QuotientPoset {
        carrier,
        blocks: blocks
            .into_iter()
            .map(|b| b.into_iter().map(|i| c.carrier.element(i).to_owned()).collect())
            .collect(),
        block_tops,
        poset,
        closed_iso,
    }
}

/// A composite closure together with the verified isomorphism between
/// quotienting once by the composite and quotienting in two stages.
#[derive(Debug, Clone)]
pub struct ComposedClosure {
    pub operator: ClosureOperator,
    /// Quotient-by-composite ≅ (quotient by the first)/the transported second.
    pub quotient_iso: IsoWitness,
}

/// Composes `second ∘ first` where `second` lives on the closed elements of
/// `first` (with the order inherited from the lattice).
pub fn compose_closures(
    lattice: &FiniteLattice,
    first: &ClosureOperator,
    second: &ClosureOperator,
) -> Result<ComposedClosure, ClosureError> {
    if first.carrier != *lattice.order() {
        return Err(ClosureError::CarrierMismatch(
            "first operator does not live on the lattice".into(),
        ));
    }
    let closed0 = first.fixed_points();
    let expected = lattice.order().induced(&closed0)?;
    if second.carrier != expected {
        return Err(ClosureError::CarrierMismatch(
            "second operator must live on the closed elements of the first".into(),
        ));
    }
    let n = lattice.len();
    let map: Vec<usize> = (0..n)
        .map(|i| {
            let c0 = lattice.order().element(first.apply_idx(i));
            let j = second.carrier.index_of(c0).expect("closed under first");
            let c1 = second.carrier.element(second.apply_idx(j));
            lattice.order().index_of(c1).expect("carrier element")
        })
        .collect();
    let report = axiom_report(lattice.order(), &map);
    assert!(
        report.all_pass(),
        "composition of closure operators failed the axioms: {report:?}"
    );
    let operator = ClosureOperator {
        carrier: lattice.order().clone(),
        map,
    };

    // Two-stage quotient: transport `second` onto the first quotient's
    // blocks through block tops, then quotient again.
    let q0 = quotient_by_closure(first);
    let transported: Vec<(String, String)> = q0
        .poset()
        .elements()
        .iter()
        .enumerate()
        .map(|(k, name)| {
            let top = &q0.block_tops()[k];
            let j = second.carrier.index_of(top).expect("top is closed");
            let image_top = second.carrier.element(second.apply_idx(j));
            let target = q0
                .block_tops()
                .iter()
                .position(|t| t == image_top)
                .expect("closure value of a top is a top");
            (name.clone(), q0.poset().element(target).to_owned())
        })
        .collect();
    let second_on_quotient = match validate_closure(q0.poset(), &transported)? {
        ClosureValidation::Valid(op) => op,
        ClosureValidation::Violation(report) => {
            unreachable!("transported operator failed the axioms: {report:?}")
        }
    };
    let staged = quotient_by_closure(&second_on_quotient);
    let composite_quotient = quotient_by_closure(&operator);
    let quotient_iso = poset_isomorphism(composite_quotient.poset(), staged.poset())
        .expect("one-step and two-step quotients are isomorphic");
    Ok(ComposedClosure {
        operator,
        quotient_iso,
    })
}

/// How the candidate construction combines the lower bounds drawn from the
/// subfamily.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeetSemantics {
    /// The inclusion-least member of the subfamily containing the union of
    /// the chosen sets (the subfamily-lattice meet). The primary reading.
    LeastAboveUnion,
    /// The plain intersection of the chosen sets. Diagnostic alternative.
    PlainIntersection,
}

/// The explicit candidate closure on a cut-family lattice induced by a
/// subfamily, together with its axiom report.
///
/// The construction is evaluated verbatim and returned as a candidate: axiom
/// satisfaction is checked, never assumed. Under the primary semantics the
/// inflationary axiom can genuinely fail at members outside the subfamily.
#[derive(Debug, Clone)]
pub struct ClosureCandidate {
    carrier: FamilyLattice,
    map: Vec<(String, String)>,
    axioms: AxiomReport,
}

impl ClosureCandidate {
    pub fn carrier(&self) -> &FamilyLattice {
        &self.carrier
    }

    /// Map entries in family declared order, member names on both sides.
    pub fn map(&self) -> &[(String, String)] {
        &self.map
    }

    pub fn axioms(&self) -> &AxiomReport {
        &self.axioms
    }

    pub fn is_valid(&self) -> bool {
        self.axioms.all_pass()
    }

    pub fn image_of(&self, member_name: &str) -> Option<&str> {
        self.map
            .iter()
            .find(|(from, _)| from == member_name)
            .map(|(_, to)| to.as_str())
    }

    /// Distinct image members, in family declared order.
    pub fn image_members(&self) -> Vec<String> {
        let mut out = Vec::new();
        for name in self
            .carrier
            .family()
            .member_names()
        {
            if self.map.iter().any(|(_, to)| *to == name) && !out.contains(&name) {
                out.push(name);
            }
        }
        out
    }

    /// The candidate as an operator, when every axiom passes.
    pub fn into_operator(self) -> Option<ClosureOperator> {
        if !self.is_valid() {
            return None;
        }
        match validate_closure(self.carrier.lattice().order(), &self.map) {
            Ok(ClosureValidation::Valid(op)) => Some(op),
            _ => None,
        }
    }
}

/// Builds the candidate closure on the family lattice `f` determined by a
/// subfamily `t`.
///
/// For a member `p` of the carrier family, the lower bounds are the members
/// of `t` other than `t`'s least member that sit strictly below `p` when `p`
/// is a non-meet-irreducible member of `t`, and weakly below `p` otherwise
/// ("below" meaning set inclusion into `p`). An empty bound set maps `p` to
/// the carrier's top; otherwise the bounds are combined per `semantics`.
pub fn subfamily_closure_candidate(
    f: &FamilyLattice,
    t: &SetFamily,
    semantics: MeetSemantics,
) -> Result<ClosureCandidate, ClosureError> {
    if !t.is_subfamily_of(f.family()) {
        return Err(ClosureError::PreconditionViolated(
            "subfamily members must all belong to the carrier family".into(),
        ));
    }
    if !t.contains_full_base() {
        return Err(ClosureError::PreconditionViolated(
            "subfamily must contain the full base set".into(),
        ));
    }
    if let Some((i, j)) = t.intersection_gap() {
        return Err(ClosureError::PreconditionViolated(format!(
            "subfamily is not closed under intersections: members {} and {}",
            t.member_name(i),
            t.member_name(j)
        )));
    }
    let t_lattice = FamilyLattice::new(t.clone())?;
    // Least member of t (its lattice top under reverse inclusion).
    let least_t: u64 = t
        .member_masks()
        .iter()
        .fold(t.full_mask(), |acc, m| acc & m);
    let irreducible_masks: Vec<u64> = t_lattice
        .lattice()
        .meet_irreducibles()
        .iter()
        .map(|name| {
            let i = t_lattice
                .lattice()
                .order()
                .index_of(name)
                .expect("irreducible");
            t_lattice.member_mask(i)
        })
        .collect();
    let f_top: u64 = f
        .family()
        .member_masks()
        .iter()
        .fold(f.family().full_mask(), |acc, m| acc & m);

    let n = f.len();
    let mut map = Vec::with_capacity(n);
    let mut idx_map = Vec::with_capacity(n);
    for i in 0..n {
        let p = f.member_mask(i);
        let in_t = t.position_of_mask(p).is_some();
        let strict = in_t && !irreducible_masks.contains(&p);
        let bounds: Vec<u64> = t
            .member_masks()
            .iter()
            .copied()
            .filter(|&q| {
                q != least_t
                    && if strict {
                        q & p == q && q != p
                    } else {
                        q & p == q
                    }
            })
            .collect();
        let value = if bounds.is_empty() {
            f_top
        } else {
            match semantics {
                MeetSemantics::LeastAboveUnion => {
                    let union = bounds.iter().fold(0u64, |acc, q| acc | q);
                    t.member_masks()
                        .iter()
                        .filter(|m| *m & union == union)
                        .fold(t.full_mask(), |acc, m| acc & m)
                }
                MeetSemantics::PlainIntersection => {
                    bounds.iter().fold(t.full_mask(), |acc, q| acc & q)
                }
            }
        };
        let target = f
            .family()
            .position_of_mask(value)
            .expect("candidate values are carrier members");
        map.push((f.family().member_name(i), f.family().member_name(target)));
        idx_map.push(target);
    }
    let axioms = axiom_report(f.lattice().order(), &idx_map);
    Ok(ClosureCandidate {
        carrier: f.clone(),
        map,
        axioms,
    })
}

/// All Moore-family masks of a lattice, ordered by size then by canonical
/// characteristic-vector order.
pub(crate) fn moore_family_masks(lattice: &FiniteLattice) -> Vec<u64> {
    let n = lattice.len();
    assert!(n <= 20, "Moore-family enumeration needs a carrier of at most 20 elements");
    let mut out: Vec<u64> = bits::subsets_lex(n)
        .into_iter()
        .filter(|&m| is_moore_mask(lattice, m).is_ok())
        .collect();
    out.sort_by(|a, b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then(bits::lex_cmp(*a, *b, n))
    });
    out
}

/// Searches for a closure operator whose closed elements form a sub-poset
/// isomorphic to the target, i.e. whose quotient realizes the target shape.
///
/// Moore families of the target's size are tried in canonical order and the
/// first isomorphic one wins, so the result is deterministic.
pub fn find_closure_for_target(lattice: &FiniteLattice, target: &Poset) -> Option<ClosureOperator> {
    let n = lattice.len();
    let k = target.len();
    if k == 0 || k > n {
        return None;
    }
    assert!(n <= 20, "Moore-family search needs a carrier of at most 20 elements");
    let top = lattice.top_idx();
    for mask in bits::subsets_lex(n) {
        if mask.count_ones() as usize != k || !bits::contains(mask, top) {
            continue;
        }
        if is_moore_mask(lattice, mask).is_err() {
            continue;
        }
        let names: Vec<String> = bits::members(mask, n)
            .map(|i| lattice.order().element(i).to_owned())
            .collect();
        let sub = lattice.order().induced(&names).expect("carrier subset");
        if poset_isomorphism(&sub, target).is_some() {
            return Some(
                closure_from_moore_mask(lattice, mask).expect("mask verified as Moore family"),
            );
        }
    }
    None
}

/// Enumerates every closure operator on a carrier.
///
/// Lattice carriers go through Moore families; general posets fall back to a
/// backtracking sweep over inflationary-monotone maps with an idempotence
/// check. Results are deterministically ordered.
pub fn enumerate_closure_operators(
    carrier: &Poset,
    cap: Option<usize>,
) -> Result<Vec<ClosureOperator>, ClosureError> {
    let cap = cap.unwrap_or(DEFAULT_CLOSURE_CAP);
    if carrier.is_empty() {
        return Ok(vec![ClosureOperator {
            carrier: carrier.clone(),
            map: Vec::new(),
        }]);
    }
    if let Ok(lattice) = FiniteLattice::from_poset(carrier.clone()) {
        let n = carrier.len();
        if n >= 21 || (1usize << (n - 1)) > cap {
            return Err(ClosureError::CapExceeded { cap });
        }
        return Ok(moore_family_masks(&lattice)
            .into_iter()
            .map(|mask| closure_from_moore_mask(&lattice, mask).expect("verified Moore mask"))
            .collect());
    }
    // General poset: assign images bottom-up in declared order, pruning on
    // inflation and on monotonicity against already-assigned elements.
    let n = carrier.len();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut examined = 0usize;

    fn descend(
        carrier: &Poset,
        map: &mut Vec<usize>,
        i: usize,
        out: &mut Vec<ClosureOperator>,
        examined: &mut usize,
        cap: usize,
    ) -> Result<(), ClosureError> {
        let n = carrier.len();
        if i == n {
            *examined += 1;
            if *examined > cap {
                return Err(ClosureError::CapExceeded { cap });
            }
            if (0..n).all(|p| map[map[p]] == map[p]) {
                out.push(ClosureOperator {
                    carrier: carrier.clone(),
                    map: map.clone(),
                });
            }
            return Ok(());
        }
        'image: for v in 0..n {
            if !carrier.leq_idx(i, v) {
                continue; // inflation
            }
            for k in 0..i {
                if carrier.leq_idx(k, i) && !carrier.leq_idx(map[k], v) {
                    continue 'image;
                }
                if carrier.leq_idx(i, k) && !carrier.leq_idx(v, map[k]) {
                    continue 'image;
                }
            }
            map[i] = v;
            descend(carrier, map, i + 1, out, examined, cap)?;
            map[i] = usize::MAX;
        }
        Ok(())
    }

    descend(carrier, &mut map, 0, &mut out, &mut examined, cap)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> FiniteLattice {
        let p = Poset::from_covers(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap();
        FiniteLattice::from_poset(p).unwrap()
    }

    fn entries(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|(a, b)| ((*a).to_owned(), (*b).to_owned()))
            .collect()
    }

    #[test]
    fn identity_and_constant_validate() {
        let d = diamond();
        let id = ClosureOperator::identity(d.order());
        assert!(matches!(
            validate_closure(d.order(), &id.entries()).unwrap(),
            ClosureValidation::Valid(_)
        ));
        let c = ClosureOperator::constant_to_top(&d);
        assert!(matches!(
            validate_closure(d.order(), &c.entries()).unwrap(),
            ClosureValidation::Valid(_)
        ));
    }

    #[test]
    fn diamond_closure_with_closed_a_and_top() {
        let d = diamond();
        let v = validate_closure(
            d.order(),
            &entries(&[("0", "a"), ("a", "a"), ("b", "1"), ("1", "1")]),
        )
        .unwrap();
        let op = match v {
            ClosureValidation::Valid(op) => op,
            _ => panic!("expected a valid operator"),
        };
        assert_eq!(closed_elements(&d, &op).unwrap(), vec!["a", "1"]);
        // Round trip through the Moore family.
        let back = closure_from_moore_family(&d, &["1", "a"]).unwrap();
        assert_eq!(back.entries(), op.entries());
    }

    #[test]
    fn violations_are_reported_in_axiom_order() {
        let d = diamond();
        // Deflationary at b.
        let v = validate_closure(
            d.order(),
            &entries(&[("0", "0"), ("a", "a"), ("b", "0"), ("1", "1")]),
        )
        .unwrap();
        match v {
            ClosureValidation::Violation(report) => {
                let (axiom, _) = report.first_violation().unwrap();
                assert_eq!(axiom, Axiom::Inflationary);
            }
            _ => panic!("expected a violation"),
        }
    }

    #[test]
    fn non_total_maps_are_input_errors() {
        let d = diamond();
        assert!(matches!(
            validate_closure(d.order(), &entries(&[("0", "0")])),
            Err(ClosureError::MissingEntry(_))
        ));
        assert!(matches!(
            validate_closure(d.order(), &entries(&[("0", "0"), ("0", "1")])),
            Err(ClosureError::DuplicateEntry(_))
        ));
    }

    #[test]
    fn moore_family_rejections() {
        let d = diamond();
        assert!(matches!(
            closure_from_moore_family(&d, &["a", "b"]),
            Err(ClosureError::NotMooreFamily(_))
        ));
        // {1, a, b} lacks a ∧ b = 0.
        assert!(matches!(
            closure_from_moore_family(&d, &["1", "a", "b"]),
            Err(ClosureError::NotMooreFamily(_))
        ));
    }

    #[test]
    fn diamond_has_seven_moore_families() {
        let d = diamond();
        let ops = enumerate_closure_operators(d.order(), None).unwrap();
        assert_eq!(ops.len(), 7);
        let closed: Vec<Vec<String>> = ops.iter().map(|c| c.fixed_points()).collect();
        assert!(closed.contains(&vec!["1".to_owned()]));
        assert!(closed.contains(&vec![
            "0".to_owned(),
            "a".to_owned(),
            "b".to_owned(),
            "1".to_owned()
        ]));
        assert!(!closed.contains(&vec!["a".to_owned(), "b".to_owned(), "1".to_owned()]));
    }

    #[test]
    fn closure_counts_on_tiny_carriers() {
        let two_antichain = Poset::antichain(&["x", "y"]).unwrap();
        assert_eq!(
            enumerate_closure_operators(&two_antichain, None)
                .unwrap()
                .len(),
            1
        );
        let two_chain = Poset::from_covers(&["0", "1"], &[("0", "1")]).unwrap();
        assert_eq!(
            enumerate_closure_operators(&two_chain, None).unwrap().len(),
            2
        );
    }

    #[test]
    fn quotient_of_five_point_collapse() {
        let p = Poset::from_covers(
            &["a", "b", "c", "d", "e"],
            &[("b", "c"), ("b", "d"), ("a", "c"), ("a", "e"), ("d", "e")],
        )
        .unwrap();
        let v = validate_closure(
            &p,
            &entries(&[("a", "a"), ("b", "b"), ("c", "c"), ("d", "e"), ("e", "e")]),
        )
        .unwrap();
        let c = match v {
            ClosureValidation::Valid(op) => op,
            _ => panic!("collapse is a closure operator"),
        };
        let q = quotient_by_closure(&c);
        assert_eq!(
            q.blocks(),
            &[
                vec!["a".to_owned()],
                vec!["b".to_owned()],
                vec!["c".to_owned()],
                vec!["d".to_owned(), "e".to_owned()]
            ]
        );
        assert_eq!(q.poset().elements(), &["{a}", "{b}", "{c}", "{d,e}"]);
        assert!(q.poset().leq("{a}", "{c}").unwrap());
        assert!(q.poset().leq("{a}", "{d,e}").unwrap());
        assert!(q.poset().leq("{b}", "{c}").unwrap());
        assert!(q.poset().leq("{b}", "{d,e}").unwrap());
        assert!(!q.poset().leq("{c}", "{d,e}").unwrap());
        assert!(!q.poset().leq("{d,e}", "{c}").unwrap());
    }

    #[test]
    fn quotient_by_identity_is_the_carrier() {
        let p = Poset::from_covers(&["x", "y"], &[("x", "y")]).unwrap();
        let q = quotient_by_closure(&ClosureOperator::identity(&p));
        assert_eq!(q.poset().len(), 2);
        assert!(crate::iso::poset_isomorphism(q.poset(), &p).is_some());
    }

    #[test]
    fn quotient_by_constant_is_one_block() {
        let d = diamond();
        let q = quotient_by_closure(&ClosureOperator::constant_to_top(&d));
        assert_eq!(q.poset().len(), 1);
        assert_eq!(q.blocks()[0].len(), 4);
    }

    #[test]
    fn composition_on_the_diamond() {
        let d = diamond();
        let c0 = closure_from_moore_family(&d, &["1", "a", "0"]).unwrap();
        let closed0 = c0.fixed_points();
        let sub = d.order().induced(&closed0).unwrap();
        let sub_lattice = FiniteLattice::from_poset(sub).unwrap();
        let c1 = closure_from_moore_family(&sub_lattice, &["1", "a"]).unwrap();
        let composed = compose_closures(&d, &c0, &c1).unwrap();
        assert_eq!(composed.operator.fixed_points(), vec!["a", "1"]);
        // Identity composed with identity stays the identity.
        let id = ClosureOperator::identity(d.order());
        let full = d.order().induced(&id.fixed_points()).unwrap();
        let id_on_closed = ClosureOperator::identity(&full);
        let both = compose_closures(&d, &id, &id_on_closed).unwrap();
        assert!(both.operator.is_identity());
    }

    #[test]
    fn composition_rejects_wrong_carrier() {
        let d = diamond();
        let c0 = closure_from_moore_family(&d, &["1", "a", "0"]).unwrap();
        let id_on_lattice = ClosureOperator::identity(d.order());
        assert!(matches!(
            compose_closures(&d, &c0, &id_on_lattice),
            Err(ClosureError::CarrierMismatch(_))
        ));
    }

    #[test]
    fn target_search_finds_identity_and_constant() {
        let d = diamond();
        let one = Poset::antichain(&["q"]).unwrap();
        let c = find_closure_for_target(&d, &one).unwrap();
        assert_eq!(c.fixed_points(), vec!["1"]);
        let same = find_closure_for_target(&d, d.order()).unwrap();
        assert!(same.is_identity());
        // No Moore family of a diamond is a 3-chain? {0, a, 1} is meet-closed
        // and totally ordered, so this *does* succeed.
        let chain3 =
            Poset::from_covers(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        assert!(find_closure_for_target(&d, &chain3).is_some());
        // But a 4-antichain target cannot be hit from a 4-element lattice.
        let anti4 = Poset::antichain(&["p", "q", "r", "s"]).unwrap();
        assert!(find_closure_for_target(&d, &anti4).is_none());
    }
}
