//! The order of realizable cut families and its structure theory.
//!
//! For a fixed space and scale, the monotone maps fall into classes with
//! equal cut families, ordered by family inclusion. This module enumerates
//! the realizable families (by characterization through Moore families, or
//! by a brute-force sweep of monotone maps), decides when the class order is
//! a complete lattice, embeds the up-sets of a quotient space back into the
//! up-sets of the space, drives the same embedding through meet-irreducible
//! representations of distributive lattices, and verifies the interval
//! description of the quotient-space class order.

use thiserror::Error;

use crate::bits;
use crate::closure::{
    enumerate_closure_operators, find_closure_for_target, quotient_by_closure, ClosureError,
    ClosureOperator,
};
use crate::family::SetFamily;
use crate::fuzzy::{represent_family, FuzzyError, FuzzyMap, Representation,
    RepresentabilityRefutation};
use crate::iso::{poset_isomorphism, verify_order_embedding, IsoWitness};
use crate::lattice::{
    birkhoff_representation, find_bound_preserving_embedding, verify_lattice_preservation,
    FiniteLattice, LatticeError,
};
use crate::poset::{OrderError, Poset};

/// Cap on monotone-map sweeps in oracle mode.
pub const ORACLE_MAP_CAP: usize = 1_000_000;
/// Cap on the up-set pool size for subfamily sweeps (2^16 candidates).
pub const CHARACTERIZATION_POOL_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
}

/// How a family's realizability was established.
#[derive(Debug, Clone)]
pub enum FamilyProvenance {
    /// A monotone map whose cuts are the family.
    Witness(FuzzyMap),
    /// A closure operator on the scale whose closed elements match the
    /// family's shape.
    Closure(ClosureOperator),
}

/// Which route enumerates the realizable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizableMode {
    /// Sweep intersection-closed up-set families and search Moore families
    /// of the scale for each.
    Characterization,
    /// Sweep all monotone maps and collect their cut families.
    Oracle,
}

/// The realizable cut families for a space and scale, ordered by inclusion.
#[derive(Debug, Clone)]
pub struct RealizablePoset {
    space: Poset,
    scale: FiniteLattice,
    families: Vec<SetFamily>,
    order: Poset,
    provenance: Vec<FamilyProvenance>,
}

impl RealizablePoset {
    pub fn space(&self) -> &Poset {
        &self.space
    }

    pub fn scale(&self) -> &FiniteLattice {
        &self.scale
    }

    /// The distinct realizable families, canonically ordered (size, then
    /// characteristic-vector order of the member lists).
    pub fn families(&self) -> &[SetFamily] {
        &self.families
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// The family order under inclusion; elements are canonical family names.
    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn provenance(&self) -> &[FamilyProvenance] {
        &self.provenance
    }

    /// Index of a family with the same members, if present.
    pub fn position_of(&self, family: &SetFamily) -> Option<usize> {
        let key = family.canonical_key();
        self.families.iter().position(|f| f.canonical_key() == key)
    }

    /// Pairwise greatest lower and least upper bounds all exist; for a
    /// finite nonempty order that is completeness.
    pub fn is_complete_lattice(&self) -> bool {
        all_pairs_bounded(&self.order)
    }
}

fn all_pairs_bounded(order: &Poset) -> bool {
    let n = order.len();
    if n == 0 {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            for lower in [true, false] {
                let bounds: Vec<usize> = (0..n)
                    .filter(|&k| {
                        if lower {
                            order.leq_idx(k, i) && order.leq_idx(k, j)
                        } else {
                            order.leq_idx(i, k) && order.leq_idx(j, k)
                        }
                    })
                    .collect();
                let extreme = bounds.iter().any(|&g| {
                    bounds.iter().all(|&k| {
                        if lower {
                            order.leq_idx(k, g)
                        } else {
                            order.leq_idx(g, k)
                        }
                    })
                });
                if !extreme {
                    return false;
                }
            }
        }
    }
    true
}

fn family_cmp(a: &SetFamily, b: &SetFamily) -> std::cmp::Ordering {
    let base = a.base().len();
    let (ka, kb) = (a.canonical_key(), b.canonical_key());
    ka.len().cmp(&kb.len()).then_with(|| {
        for (x, y) in ka.iter().zip(kb.iter()) {
            let ord = bits::lex_cmp(*x, *y, base);
            if ord != std::cmp::Ordering::Equal {
                return ord;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn build_order(families: &[SetFamily]) -> Poset {
    let names: Vec<String> = families.iter().map(|f| f.canonical_name()).collect();
    let keys: Vec<Vec<u64>> = families.iter().map(|f| f.canonical_key()).collect();
    let n = families.len();
    let mut matrix = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            matrix[i][j] = keys[i].iter().all(|m| keys[j].contains(m));
        }
    }
    Poset::from_relation(&names, &matrix).expect("family inclusion is a partial order")
}

/// Realizable families drawn from subfamilies of a member pool.
///
/// Candidates are the intersection-closed subfamilies of `pool` containing
/// the full space; each is kept when some Moore family of the scale matches
/// its shape. The pool must consist of up-sets of the space.
fn realizable_within(
    space: &Poset,
    scale: &FiniteLattice,
    pool: &SetFamily,
) -> Result<RealizablePoset, QuotientError> {
    if pool.len() > CHARACTERIZATION_POOL_CAP {
        return Err(QuotientError::CapExceeded(format!(
            "candidate pool has {} members, above the {} supported",
            pool.len(),
            CHARACTERIZATION_POOL_CAP
        )));
    }
    let full = pool
        .position_of_mask(pool.full_mask())
        .ok_or_else(|| QuotientError::PreconditionUnmet("pool must contain the space".into()))?;
    let k = pool.len();
    let masks = pool.member_masks().to_vec();
    let mut families = Vec::new();
    let mut provenance = Vec::new();
    for select in 0..(1u64 << k) {
        if !bits::contains(select, full) {
            continue;
        }
        let chosen: Vec<u64> = bits::members(select, k).map(|i| masks[i]).collect();
        let closed = chosen
            .iter()
            .all(|a| chosen.iter().all(|b| chosen.contains(&(a & b))));
        if !closed {
            continue;
        }
        let family = SetFamily::from_masks(pool.base().to_vec(), chosen).canonicalized();
        if let Some(c) = find_closure_for_target(scale, &family.reverse_inclusion_poset()) {
            families.push(family);
            provenance.push(FamilyProvenance::Closure(c));
        }
    }
    let mut idx: Vec<usize> = (0..families.len()).collect();
    idx.sort_by(|&a, &b| family_cmp(&families[a], &families[b]));
    let families: Vec<SetFamily> = idx.iter().map(|&i| families[i].clone()).collect();
    let provenance: Vec<FamilyProvenance> = idx.iter().map(|&i| provenance[i].clone()).collect();
    let order = build_order(&families);
    Ok(RealizablePoset {
        space: space.clone(),
        scale: scale.clone(),
        families,
        order,
        provenance,
    })
}

/// Enumerates the realizable cut families for `space` and `scale`.
///
/// Characterization mode sweeps intersection-closed up-set families and asks
/// for a matching Moore family of the scale; oracle mode sweeps all monotone
/// maps and collects their cut families. The two modes agree, which the
/// verification suites check across the whole small range.
pub fn realizable_families(
    space: &Poset,
    scale: &FiniteLattice,
    mode: RealizableMode,
) -> Result<RealizablePoset, QuotientError> {
    match mode {
        RealizableMode::Characterization => {
            let pool = space.up_set_family(None)?;
            realizable_within(space, scale, &pool)
        }
        RealizableMode::Oracle => {
            let bound = (scale.len() as u128).saturating_pow(space.len() as u32);
            if bound > ORACLE_MAP_CAP as u128 {
                return Err(QuotientError::CapExceeded(format!(
                    "up to {bound} maps to sweep, above the {ORACLE_MAP_CAP} supported"
                )));
            }
            let mut families: Vec<SetFamily> = Vec::new();
            let mut provenance = Vec::new();
            for assign in crate::enumerate::monotone_assignments(space, scale) {
                let m = FuzzyMap::from_indices(space.clone(), scale.clone(), assign);
                let family = m.cut_family().family.canonicalized();
                let key = family.canonical_key();
                if !families.iter().any(|f| f.canonical_key() == key) {
                    families.push(family);
                    provenance.push(FamilyProvenance::Witness(m));
                }
            }
            let mut idx: Vec<usize> = (0..families.len()).collect();
            idx.sort_by(|&a, &b| family_cmp(&families[a], &families[b]));
            let families: Vec<SetFamily> = idx.iter().map(|&i| families[i].clone()).collect();
            let provenance: Vec<FamilyProvenance> =
                idx.iter().map(|&i| provenance[i].clone()).collect();
            let order = build_order(&families);
            Ok(RealizablePoset {
                space: space.clone(),
                scale: scale.clone(),
                families,
                order,
                provenance,
            })
        }
    }
}

/// Certificate behind a completeness decision.
#[derive(Debug, Clone)]
pub enum CompletenessCertificate {
    /// A one-point scale: every map has cut family `{X}`.
    TrivialScale,
    /// A closure operator on the scale whose closed elements match the shape
    /// of the full up-set family.
    Closure(ClosureOperator),
    /// The Moore-family search space was exhausted.
    Exhausted { candidates: usize },
}

/// Whether the order of realizable families is a complete lattice.
#[derive(Debug, Clone)]
pub struct CompletenessDecision {
    pub holds: bool,
    pub certificate: CompletenessCertificate,
}

/// Decides completeness of the class order: for scales beyond one point this
/// is equivalent to some closure operator on the scale realizing the full
/// up-set family of the space.
pub fn quotient_completeness(
    space: &Poset,
    scale: &FiniteLattice,
) -> Result<CompletenessDecision, QuotientError> {
    if scale.len() == 1 {
        return Ok(CompletenessDecision {
            holds: true,
            certificate: CompletenessCertificate::TrivialScale,
        });
    }
    let upsets = space.up_set_family(None)?;
    match find_closure_for_target(scale, &upsets.reverse_inclusion_poset()) {
        Some(c) => Ok(CompletenessDecision {
            holds: true,
            certificate: CompletenessCertificate::Closure(c),
        }),
        None => Ok(CompletenessDecision {
            holds: false,
            certificate: CompletenessCertificate::Exhausted {
                candidates: 1usize << (scale.len() - 1),
            },
        }),
    }
}

/// The decision together with the direct check on the enumerated family
/// order; the boolean is the direct answer.
pub fn quotient_completeness_cross_checked(
    space: &Poset,
    scale: &FiniteLattice,
    mode: RealizableMode,
) -> Result<(CompletenessDecision, bool), QuotientError> {
    let decision = quotient_completeness(space, scale)?;
    let direct = realizable_families(space, scale, mode)?.is_complete_lattice();
    Ok((decision, direct))
}

/// The embedding of the up-sets of a quotient space into the up-sets of the
/// space, with every preservation property re-derived.
#[derive(Debug, Clone)]
pub struct EmbeddingReport {
    /// Up-sets of the quotient (base: block names).
    pub source: SetFamily,
    /// Their images: unions of the blocks named by each up-set.
    pub image: SetFamily,
    /// Member-name pairs source -> image, in source order.
    pub map: Vec<(String, String)>,
    pub injective: bool,
    /// Two-sided: T1 ⊇ T2 iff the images nest the same way.
    pub order_embedding: bool,
    /// Every image is an up-set of the space.
    pub images_are_up_sets: bool,
    /// The image family is closed under unions of arbitrary subsets.
    pub unions_closed: bool,
    /// The image family is closed under intersections of arbitrary subsets.
    pub intersections_closed: bool,
    /// The empty up-set maps to the empty set.
    pub empty_to_empty: bool,
    /// The full quotient maps to the full space.
    pub full_to_full: bool,
}

impl EmbeddingReport {
    pub fn all_preserved(&self) -> bool {
        self.injective
            && self.order_embedding
            && self.images_are_up_sets
            && self.unions_closed
            && self.intersections_closed
            && self.empty_to_empty
            && self.full_to_full
    }
}

/// Builds the quotient by `closure`, enumerates its up-sets, and maps each
/// up-set of blocks to the union of its blocks inside the space.
pub fn embed_quotient_upsets(
    space: &Poset,
    closure: &ClosureOperator,
) -> Result<EmbeddingReport, QuotientError> {
    if closure.carrier() != space {
        return Err(QuotientError::PreconditionUnmet(
            "closure operator must live on the space".into(),
        ));
    }
    let quotient = quotient_by_closure(closure);
    let source = quotient.poset().up_set_family(None)?;
    let n = space.len();
    // Block masks over the space, indexed like quotient elements.
    let block_masks: Vec<u64> = quotient
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|e| 1u64 << space.index_of(e).expect("block member"))
                .fold(0, |acc, m| acc | m)
        })
        .collect();
    let image_masks: Vec<u64> = source
        .member_masks()
        .iter()
        .map(|t| {
            bits::members(*t, quotient.poset().len())
                .map(|k| block_masks[k])
                .fold(0, |acc, m| acc | m)
        })
        .collect();

    let injective = {
        let mut seen = image_masks.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    };
    let mut order_embedding = true;
    for i in 0..image_masks.len() {
        for j in 0..image_masks.len() {
            let t_superset =
                source.member_mask(i) & source.member_mask(j) == source.member_mask(j);
            let s_superset = image_masks[i] & image_masks[j] == image_masks[j];
            if t_superset != s_superset {
                order_embedding = false;
            }
        }
    }
    let images_are_up_sets = image_masks.iter().all(|m| space.is_up_set_mask(*m));
    // Arbitrary unions and intersections: fold over every subset of the
    // image (the image has at most 2^|space| members, small by assumption).
    let (mut unions_closed, mut intersections_closed) = (true, true);
    assert!(
        image_masks.len() <= 20,
        "image subset sweep capped at 2^20 members"
    );
    for select in 0..(1u64 << image_masks.len()) {
        let mut union = 0u64;
        let mut inter = bits::full_mask(n);
        for k in bits::members(select, image_masks.len()) {
            union |= image_masks[k];
            inter &= image_masks[k];
        }
        if !image_masks.contains(&union) {
            unions_closed = false;
        }
        if !image_masks.contains(&inter) {
            intersections_closed = false;
        }
    }
    let empty_to_empty = {
        let empty_src = source.position_of_mask(0).expect("empty up-set");
        image_masks[empty_src] == 0
    };
    let full_to_full = {
        let full_src = source
            .position_of_mask(source.full_mask())
            .expect("full up-set");
        image_masks[full_src] == bits::full_mask(n)
    };

    let mut dedup: Vec<u64> = Vec::new();
    for m in &image_masks {
        if !dedup.contains(m) {
            dedup.push(*m);
        }
    }
    let image = SetFamily::from_masks(space.elements().to_vec(), dedup);
    let map: Vec<(String, String)> = (0..source.len())
        .map(|i| (source.member_name(i), image.mask_name(image_masks[i])))
        .collect();
    Ok(EmbeddingReport {
        source,
        image,
        map,
        injective,
        order_embedding,
        images_are_up_sets,
        unions_closed,
        intersections_closed,
        empty_to_empty,
        full_to_full,
    })
}

/// Outcome of the closure-operator route between two distributive lattices.
#[derive(Debug, Clone)]
pub enum ClosureRouteOutcome {
    /// A closure operator on the host's meet-irreducibles whose quotient
    /// matches the guest's meet-irreducibles, with the embedding it induces.
    Found {
        closure: ClosureOperator,
        quotient_iso: IsoWitness,
        embedding: IsoWitness,
    },
    /// No closure operator works.
    Exhausted { examined: usize },
}

/// Both routes from a guest lattice into a host lattice.
#[derive(Debug, Clone)]
pub struct BirkhoffDriverReport {
    pub closure_route: ClosureRouteOutcome,
    /// Direct bound-preserving embedding search, independent of the closure
    /// route. The closure route implies this one; the converse fails.
    pub direct_embedding: Option<IsoWitness>,
    /// Set when either side has no meet-irreducibles (one-point lattices).
    pub degenerate: bool,
}

/// Drives the quotient-upset embedding through the meet-irreducible
/// representations of two finite distributive lattices.
pub fn birkhoff_embedding(
    host: &FiniteLattice,
    guest: &FiniteLattice,
) -> Result<BirkhoffDriverReport, QuotientError> {
    let host_rep = birkhoff_representation(host)?;
    let guest_rep = birkhoff_representation(guest)?;
    let degenerate = host_rep.irreducibles.is_empty() || guest_rep.irreducibles.is_empty();
    let operators = enumerate_closure_operators(&host_rep.irreducibles, None)?;
    let examined = operators.len();
    let mut closure_route = ClosureRouteOutcome::Exhausted { examined };
    for op in operators {
        let quotient = quotient_by_closure(&op);
        let Some(psi) = poset_isomorphism(quotient.poset(), &guest_rep.irreducibles) else {
            continue;
        };
        // Pull each guest element through its up-set of irreducibles, back
        // through psi to blocks, then down to the union of blocks: a member
        // of the host's up-set family, hence a host element.
        let pairs: Vec<(String, String)> = guest
            .order()
            .elements()
            .iter()
            .map(|b| {
                let upset_name = guest_rep.witness.image_of(b).expect("represented");
                let member = guest_rep
                    .upset_family
                    .member_names()
                    .iter()
                    .position(|n| n == upset_name)
                    .expect("member name");
                let upset_mask = guest_rep.upset_family.member_mask(member);
                let blocks: Vec<&str> = quotient
                    .poset()
                    .elements()
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| {
                        let image = psi.image_of(quotient.poset().element(*k)).unwrap();
                        let idx = guest_rep
                            .irreducibles
                            .index_of(image)
                            .expect("irreducible");
                        bits::contains(upset_mask, idx)
                    })
                    .map(|(_, name)| name.as_str())
                    .collect();
                let union = quotient.union_of_blocks(&blocks).expect("block names");
                let union_mask = host_rep
                    .upset_family
                    .mask_of(&union)
                    .expect("irreducible subset");
                let host_member = host_rep.upset_family.mask_name(union_mask);
                let a = host_rep
                    .witness
                    .preimage_of(&host_member)
                    .expect("image is a host up-set");
                (b.clone(), a.to_owned())
            })
            .collect();
        let mut embedding = IsoWitness::new(pairs, Default::default());
        let preserves = verify_lattice_preservation(guest, host, &embedding, false);
        assert!(
            preserves.order && preserves.bounds,
            "closure-route embedding must preserve order and bounds"
        );
        embedding.set_preserves(preserves);
        debug_assert!(verify_order_embedding(guest.order(), host.order(), &embedding));
        closure_route = ClosureRouteOutcome::Found {
            closure: op,
            quotient_iso: psi,
            embedding,
        };
        break;
    }
    let direct_embedding = find_bound_preserving_embedding(guest, host);
    Ok(BirkhoffDriverReport {
        closure_route,
        direct_embedding,
        degenerate,
    })
}

/// The verified interval description of the quotient-space class order.
#[derive(Debug, Clone)]
pub struct IntervalReport {
    /// Closure operator on the scale realizing the space's full up-set
    /// family (the precondition's certificate).
    pub scale_closure: ClosureOperator,
    /// The up-set embedding data for the space quotient.
    pub embedding: EmbeddingReport,
    /// A verified map whose cut family is the embedded image.
    pub witness_map: FuzzyMap,
    /// Realizable families over the quotient space.
    pub quotient_side: RealizablePoset,
    /// The interval below the witness class: realizable families contained
    /// in the image family.
    pub interval: RealizablePoset,
    /// Quotient side ≅ interval.
    pub main_witness: IsoWitness,
    /// The intersection-closed subfamilies of the image, under inclusion.
    pub star_poset: Poset,
    pub interval_star_witness: IsoWitness,
    pub quotient_star_witness: IsoWitness,
}

/// A structural mismatch found while verifying the interval description.
/// The theory rules these out; any occurrence is evidence against it and is
/// reported rather than raised.
#[derive(Debug, Clone)]
pub enum IntervalCounterexample {
    SynthesisFailed(RepresentabilityRefutation),
    QuotientIntervalMismatch {
        quotient_families: usize,
        interval_families: usize,
    },
    StarMismatch {
        side: &'static str,
    },
}

#[derive(Debug, Clone)]
pub enum IntervalOutcome {
    Verified(Box<IntervalReport>),
    Counterexample(IntervalCounterexample),
}

/// The intersection-closed subfamilies of `pool` containing the space,
/// ordered by inclusion.
fn star_poset(pool: &SetFamily) -> Result<Poset, QuotientError> {
    if pool.len() > CHARACTERIZATION_POOL_CAP {
        return Err(QuotientError::CapExceeded(format!(
            "subfamily pool has {} members, above the {} supported",
            pool.len(),
            CHARACTERIZATION_POOL_CAP
        )));
    }
    let full = pool
        .position_of_mask(pool.full_mask())
        .ok_or_else(|| QuotientError::PreconditionUnmet("pool must contain the space".into()))?;
    let masks = pool.member_masks().to_vec();
    let mut subfamilies = Vec::new();
    for select in 0..(1u64 << pool.len()) {
        if !bits::contains(select, full) {
            continue;
        }
        let chosen: Vec<u64> = bits::members(select, pool.len()).map(|i| masks[i]).collect();
        if chosen
            .iter()
            .all(|a| chosen.iter().all(|b| chosen.contains(&(a & b))))
        {
            subfamilies.push(SetFamily::from_masks(pool.base().to_vec(), chosen).canonicalized());
        }
    }
    subfamilies.sort_by(family_cmp);
    Ok(build_order(&subfamilies))
}

/// Verifies that the class order over the quotient space is isomorphic to
/// the interval below the class of the embedded image family, and that both
/// match the subfamily description.
pub fn interval_isomorphism(
    space: &Poset,
    closure: &ClosureOperator,
    scale: &FiniteLattice,
) -> Result<IntervalOutcome, QuotientError> {
    let upsets = space.up_set_family(None)?;
    let Some(scale_closure) = find_closure_for_target(scale, &upsets.reverse_inclusion_poset())
    else {
        return Err(QuotientError::PreconditionUnmet(
            "no closure operator on the scale realizes the space's up-set family".into(),
        ));
    };
    let embedding = embed_quotient_upsets(space, closure)?;
    let image = embedding.image.clone();
    let witness_map = match represent_family(&image, space, scale)? {
        Representation::Witness(m) => m,
        Representation::Refutation(r) => {
            return Ok(IntervalOutcome::Counterexample(
                IntervalCounterexample::SynthesisFailed(r),
            ))
        }
    };
    // The interval below the witness's class: realizable families contained
    // in the image (every realizable family already contains the space, the
    // class order's bottom).
    let interval = realizable_within(space, scale, &image)?;
    let quotient = quotient_by_closure(closure);
    let quotient_side = realizable_within(quotient.poset(), scale, &embedding.source)?;
    let Some(main_witness) = poset_isomorphism(quotient_side.order(), interval.order()) else {
        return Ok(IntervalOutcome::Counterexample(
            IntervalCounterexample::QuotientIntervalMismatch {
                quotient_families: quotient_side.len(),
                interval_families: interval.len(),
            },
        ));
    };
    let star = star_poset(&image)?;
    let Some(interval_star_witness) = poset_isomorphism(interval.order(), &star) else {
        return Ok(IntervalOutcome::Counterexample(
            IntervalCounterexample::StarMismatch { side: "interval" },
        ));
    };
    let Some(quotient_star_witness) = poset_isomorphism(quotient_side.order(), &star) else {
        return Ok(IntervalOutcome::Counterexample(
            IntervalCounterexample::StarMismatch {
                side: "quotient",
            },
        ));
    };
    Ok(IntervalOutcome::Verified(Box::new(IntervalReport {
        scale_closure,
        embedding,
        witness_map,
        quotient_side,
        interval,
        main_witness,
        star_poset: star,
        interval_star_witness,
        quotient_star_witness,
    })))
}
