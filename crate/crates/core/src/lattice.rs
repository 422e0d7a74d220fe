//! Finite lattices: total meet/join tables, family lattices under reverse
//! inclusion, meet-irreducibles, the up-set representation of distributive
//! lattices, and bound-preserving embedding search.
//!
//! A finite lattice is complete, so these carriers stand in for the complete
//! lattices of the underlying theory.

use thiserror::Error;

use crate::bits;
use crate::family::SetFamily;
use crate::iso::{poset_isomorphism, verify_order_embedding, IsoWitness, Preserves};
use crate::poset::{OrderError, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty carrier cannot be a lattice")]
    EmptyCarrier,
    #[error("not a lattice: `{x}` and `{y}` have no {missing}")]
    NotALattice {
        x: String,
        y: String,
        /// "meet" or "join"
        missing: &'static str,
    },
    #[error("family is not closed under intersections: members {0} and {1}")]
    NotIntersectionClosed(String, String),
    #[error("family does not contain the full base set")]
    MissingFullSet,
    #[error("not distributive at ({x}, {y}, {z})")]
    NotDistributive { x: String, y: String, z: String },
    #[error(transparent)]
    Order(#[from] OrderError),
}

/// A finite lattice: a poset with total meet/join tables and both bounds.
///
/// The tables are filled by an exhaustive greatest-lower/least-upper bound
/// scan at construction, so they are correct by definition of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    order: Poset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Builds the lattice structure on a poset, or reports a witness pair
    /// with no greatest lower or least upper bound.
    pub fn from_poset(order: Poset) -> Result<Self, LatticeError> {
        let n = order.len();
        if n == 0 {
            return Err(LatticeError::EmptyCarrier);
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                meet[i * n + j] = bound_scan(&order, i, j, true).ok_or_else(|| {
                    LatticeError::NotALattice {
                        x: order.element(i).to_owned(),
                        y: order.element(j).to_owned(),
                        missing: "meet",
                    }
                })?;
                join[i * n + j] = bound_scan(&order, i, j, false).ok_or_else(|| {
                    LatticeError::NotALattice {
                        x: order.element(i).to_owned(),
                        y: order.element(j).to_owned(),
                        missing: "join",
                    }
                })?;
            }
        }
        let mut bottom = 0;
        let mut top = 0;
        for i in 1..n {
            bottom = meet[bottom * n + i];
            top = join[top * n + i];
        }
        Ok(FiniteLattice {
            order,
            meet,
            join,
            bottom,
            top,
        })
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> &str {
        self.order.element(self.bottom)
    }

    pub fn top(&self) -> &str {
        self.order.element(self.top)
    }

    pub(crate) fn bottom_idx(&self) -> usize {
        self.bottom
    }

    pub(crate) fn top_idx(&self) -> usize {
        self.top
    }

    pub fn meet(&self, x: &str, y: &str) -> Result<&str, LatticeError> {
        let i = self.order.require(x)?;
        let j = self.order.require(y)?;
        Ok(self.order.element(self.meet_idx(i, j)))
    }

    pub fn join(&self, x: &str, y: &str) -> Result<&str, LatticeError> {
        let i = self.order.require(x)?;
        let j = self.order.require(y)?;
        Ok(self.order.element(self.join_idx(i, j)))
    }

    #[inline]
    pub(crate) fn meet_idx(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.order.len() + j]
    }

    #[inline]
    pub(crate) fn join_idx(&self, i: usize, j: usize) -> usize {
        self.join[i * self.order.len() + j]
    }

    /// Meet of a set of element indices; the empty meet is the top.
    pub(crate) fn meet_all_idx(&self, idxs: impl IntoIterator<Item = usize>) -> usize {
        idxs.into_iter().fold(self.top, |acc, i| self.meet_idx(acc, i))
    }

    /// Join of a set of element indices; the empty join is the bottom.
    pub(crate) fn join_all_idx(&self, idxs: impl IntoIterator<Item = usize>) -> usize {
        idxs.into_iter().fold(self.bottom, |acc, i| self.join_idx(acc, i))
    }

    /// Elements that are not the top and never a meet of two other elements.
    pub fn meet_irreducibles(&self) -> Vec<String> {
        let n = self.len();
        (0..n)
            .filter(|&q| {
                if q == self.top {
                    return false;
                }
                for x in 0..n {
                    for y in 0..n {
                        if x != q && y != q && self.meet_idx(x, y) == q {
                            return false;
                        }
                    }
                }
                true
            })
            .map(|q| self.order.element(q).to_owned())
            .collect()
    }

    /// The meet-irreducibles as a sub-poset with the inherited order.
    pub fn meet_irreducible_poset(&self) -> Poset {
        let m = self.meet_irreducibles();
        self.order
            .induced(&m)
            .expect("irreducibles are carrier elements")
    }

    /// First triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`, if any.
    pub fn distributivity_violation(&self) -> Option<(String, String, String)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = self.meet_idx(x, self.join_idx(y, z));
                    let rhs = self.join_idx(self.meet_idx(x, y), self.meet_idx(x, z));
                    if lhs != rhs {
                        return Some((
                            self.order.element(x).to_owned(),
                            self.order.element(y).to_owned(),
                            self.order.element(z).to_owned(),
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_violation().is_none()
    }
}

/// Greatest lower bound (`lower = true`) or least upper bound of `{i, j}`,
/// found by scanning all candidates.
fn bound_scan(order: &Poset, i: usize, j: usize, lower: bool) -> Option<usize> {
    let n = order.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&k| {
            if lower {
                order.leq_idx(k, i) && order.leq_idx(k, j)
            } else {
                order.leq_idx(i, k) && order.leq_idx(j, k)
            }
        })
        .collect();
    bounds
        .iter()
        .copied()
        .find(|&g| {
            bounds.iter().all(|&k| {
                if lower {
                    order.leq_idx(k, g)
                } else {
                    order.leq_idx(g, k)
                }
            })
        })
}

/// An intersection-closed family containing the full base set, as a lattice
/// under reverse inclusion.
///
/// The bottom is the full base set and the top is the intersection of all
/// members. Join of members is plain intersection; meet is the
/// inclusion-least member containing the union (so for up-set families that
/// are closed under union, binary meet is exactly the union).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyLattice {
    family: SetFamily,
    lattice: FiniteLattice,
}

impl FamilyLattice {
    pub fn new(family: SetFamily) -> Result<Self, LatticeError> {
        if !family.contains_full_base() {
            return Err(LatticeError::MissingFullSet);
        }
        if let Some((i, j)) = family.intersection_gap() {
            return Err(LatticeError::NotIntersectionClosed(
                family.member_name(i),
                family.member_name(j),
            ));
        }
        let lattice = FiniteLattice::from_poset(family.reverse_inclusion_poset())?;
        debug_assert_eq!(lattice.bottom(), family.mask_name(family.full_mask()));
        Ok(FamilyLattice { family, lattice })
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The member behind a lattice element index.
    pub(crate) fn member_mask(&self, i: usize) -> u64 {
        self.family.member_mask(i)
    }

    /// Meet of a set of members: the inclusion-least member containing their
    /// union. The empty meet is the lattice top (the least member overall).
    pub(crate) fn meet_of_members_mask(&self, member_idxs: &[usize]) -> u64 {
        let union = member_idxs
            .iter()
            .fold(0u64, |acc, &i| acc | self.family.member_mask(i));
        self.family
            .member_masks()
            .iter()
            .filter(|m| *m & union == union)
            .fold(self.family.full_mask(), |acc, m| acc & m)
    }

    /// Join of a set of members: their intersection (a member by closure).
    /// The empty join is the full base set.
    pub(crate) fn join_of_members_mask(&self, member_idxs: &[usize]) -> u64 {
        member_idxs
            .iter()
            .fold(self.family.full_mask(), |acc, &i| {
                acc & self.family.member_mask(i)
            })
    }

    /// Meet of members given by name lists, as a named set.
    pub fn meet_of_members<S: AsRef<str>>(
        &self,
        members: &[Vec<S>],
    ) -> Result<Vec<String>, LatticeError> {
        let idxs = self.member_positions(members)?;
        let mask = self.meet_of_members_mask(&idxs);
        Ok(bits::members(mask, self.family.base().len())
            .map(|i| self.family.base()[i].clone())
            .collect())
    }

    /// Join of members given by name lists, as a named set.
    pub fn join_of_members<S: AsRef<str>>(
        &self,
        members: &[Vec<S>],
    ) -> Result<Vec<String>, LatticeError> {
        let idxs = self.member_positions(members)?;
        let mask = self.join_of_members_mask(&idxs);
        Ok(bits::members(mask, self.family.base().len())
            .map(|i| self.family.base()[i].clone())
            .collect())
    }

    fn member_positions<S: AsRef<str>>(&self, members: &[Vec<S>]) -> Result<Vec<usize>, LatticeError> {
        members
            .iter()
            .map(|m| {
                let mask = self.family.mask_of(m)?;
                self.family
                    .position_of_mask(mask)
                    .ok_or_else(|| OrderError::UnknownName(self.family.mask_name(mask)).into())
            })
            .collect()
    }
}

/// The up-set representation of a finite distributive lattice.
#[derive(Debug, Clone)]
pub struct BirkhoffRepresentation {
    /// The meet-irreducibles with the order inherited from the lattice.
    pub irreducibles: Poset,
    /// All up-sets of the irreducibles.
    pub upset_family: SetFamily,
    /// The verified isomorphism `a -> {m irreducible | m >= a}` onto the
    /// up-set family under reverse inclusion.
    pub witness: IsoWitness,
}

/// Represents a distributive lattice by the up-sets of its meet-irreducibles,
/// ordered dually to inclusion.
pub fn birkhoff_representation(
    lattice: &FiniteLattice,
) -> Result<BirkhoffRepresentation, LatticeError> {
    if let Some((x, y, z)) = lattice.distributivity_violation() {
        return Err(LatticeError::NotDistributive { x, y, z });
    }
    let irreducibles = lattice.meet_irreducible_poset();
    let upset_family = irreducibles.up_set_family(None)?;
    let pairs: Vec<(String, String)> = lattice
        .order()
        .elements()
        .iter()
        .map(|a| {
            let image: Vec<&str> = irreducibles
                .elements()
                .iter()
                .filter(|m| lattice.order().leq(a, m).unwrap())
                .map(|m| m.as_str())
                .collect();
            let mask = upset_family
                .mask_of(&image)
                .expect("irreducibles live in the up-set base");
            (a.clone(), upset_family.mask_name(mask))
        })
        .collect();
    let mut witness = IsoWitness::new(pairs, Preserves::default());
    let target = FamilyLattice::new(upset_family.clone())?;
    let preserves = verify_lattice_preservation(lattice, target.lattice(), &witness, true);
    if !(preserves.order && preserves.meets && preserves.joins && preserves.bounds) {
        // The representation is a theorem for distributive lattices; a miss
        // here is a bug, not an input condition.
        panic!("up-set representation failed verification");
    }
    witness.set_preserves(preserves);
    Ok(BirkhoffRepresentation {
        irreducibles,
        upset_family,
        witness,
    })
}

/// Verifies which lattice structure `w` preserves, pointwise.
///
/// With `require_onto`, an out-of-witness target element makes everything
/// false; otherwise the check covers the embedded image only.
pub fn verify_lattice_preservation(
    src: &FiniteLattice,
    dst: &FiniteLattice,
    w: &IsoWitness,
    require_onto: bool,
) -> Preserves {
    let mut map = Vec::with_capacity(src.len());
    let mut seen = vec![false; dst.len()];
    for (s, t) in w.pairs() {
        let (Some(i), Some(j)) = (src.order().index_of(s), dst.order().index_of(t)) else {
            return Preserves::default();
        };
        debug_assert_eq!(i, map.len());
        if seen[j] {
            return Preserves::default();
        }
        seen[j] = true;
        map.push(j);
    }
    if map.len() != src.len() || (require_onto && seen.iter().any(|b| !b)) {
        return Preserves::default();
    }
    let mut p = Preserves {
        order: true,
        meets: true,
        joins: true,
        bounds: true,
    };
    for i in 0..src.len() {
        for j in 0..src.len() {
            if src.order().leq_idx(i, j) != dst.order().leq_idx(map[i], map[j]) {
                p.order = false;
            }
            if map[src.meet_idx(i, j)] != dst.meet_idx(map[i], map[j]) {
                p.meets = false;
            }
            if map[src.join_idx(i, j)] != dst.join_idx(map[i], map[j]) {
                p.joins = false;
            }
        }
    }
    p.bounds = map[src.bottom_idx()] == dst.bottom_idx() && map[src.top_idx()] == dst.top_idx();
    p
}

/// Searches for an injective, two-sided order-preserving map from `sub` into
/// `host` sending bottom to bottom and top to top. Returns the
/// lexicographically least witness.
pub fn find_bound_preserving_embedding(
    sub: &FiniteLattice,
    host: &FiniteLattice,
) -> Option<IsoWitness> {
    let n = sub.len();
    let m = host.len();
    if n > m {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; m];
    // Bounds are forced; when |sub| = 1 its single element must land on both
    // bounds of the host, which only works if the host is one-point too.
    let (sb, st) = (sub.bottom_idx(), sub.top_idx());
    let (hb, ht) = (host.bottom_idx(), host.top_idx());
    if sb == st {
        if hb != ht {
            return None;
        }
    }
    map[sb] = hb;
    used[hb] = true;
    map[st] = ht;
    used[ht] = true;

    fn extend(
        sub: &FiniteLattice,
        host: &FiniteLattice,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = sub.len();
        if i == n {
            return true;
        }
        if map[i] != usize::MAX {
            // Pre-assigned bound: still verify consistency with earlier rows.
            for k in 0..i {
                if sub.order().leq_idx(i, k) != host.order().leq_idx(map[i], map[k])
                    || sub.order().leq_idx(k, i) != host.order().leq_idx(map[k], map[i])
                {
                    return false;
                }
            }
            return extend(sub, host, map, used, i + 1);
        }
        'candidate: for j in 0..host.len() {
            if used[j] {
                continue;
            }
            for k in 0..i {
                if map[k] == usize::MAX {
                    continue;
                }
                if sub.order().leq_idx(i, k) != host.order().leq_idx(j, map[k])
                    || sub.order().leq_idx(k, i) != host.order().leq_idx(map[k], j)
                {
                    continue 'candidate;
                }
            }
            // Also stay consistent with the forced bounds even when they sit
            // at later indices.
            for k in i + 1..n {
                if map[k] == usize::MAX {
                    continue;
                }
                if sub.order().leq_idx(i, k) != host.order().leq_idx(j, map[k])
                    || sub.order().leq_idx(k, i) != host.order().leq_idx(map[k], j)
                {
                    continue 'candidate;
                }
            }
            map[i] = j;
            used[j] = true;
            if extend(sub, host, map, used, i + 1) {
                return true;
            }
            map[i] = usize::MAX;
            used[j] = false;
        }
        false
    }

    if !extend(sub, host, &mut map, &mut used, 0) {
        return None;
    }
    let pairs = (0..n)
        .map(|i| {
            (
                sub.order().element(i).to_owned(),
                host.order().element(map[i]).to_owned(),
            )
        })
        .collect();
    let w = IsoWitness::new(
        pairs,
        Preserves {
            order: true,
            bounds: true,
            ..Preserves::default()
        },
    );
    debug_assert!(verify_order_embedding(sub.order(), host.order(), &w));
    Some(w)
}

/// Convenience: searches for a full order isomorphism between two lattices
/// and upgrades the flags with what it actually preserves.
pub fn lattice_isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<IsoWitness> {
    let mut w = poset_isomorphism(a.order(), b.order())?;
    let p = verify_lattice_preservation(a, b, &w, true);
    w.set_preserves(p);
    Some(w)
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

    fn chain(names: &[&str]) -> FiniteLattice {
        let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        FiniteLattice::from_poset(Poset::from_covers(names, &covers).unwrap()).unwrap()
    }

    #[test]
    fn diamond_tables() {
        let l = diamond();
        assert_eq!(l.meet("a", "b").unwrap(), "0");
        assert_eq!(l.join("a", "b").unwrap(), "1");
        assert_eq!(l.bottom(), "0");
        assert_eq!(l.top(), "1");
    }

    #[test]
    fn vee_is_not_a_lattice() {
        let p = Poset::from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap();
        match FiniteLattice::from_poset(p).unwrap_err() {
            LatticeError::NotALattice { x, y, missing } => {
                assert_eq!(missing, "join");
                assert_eq!((x.as_str(), y.as_str()), ("a", "b"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lattice_laws_hold_exhaustively() {
        for l in [diamond(), chain(&["0", "m", "1"])] {
            let n = l.len();
            for i in 0..n {
                for j in 0..n {
                    let m = l.meet_idx(i, j);
                    // glb: below both, and greatest such.
                    assert!(l.order().leq_idx(m, i) && l.order().leq_idx(m, j));
                    for k in 0..n {
                        if l.order().leq_idx(k, i) && l.order().leq_idx(k, j) {
                            assert!(l.order().leq_idx(k, m));
                        }
                    }
                    assert_eq!(l.meet_idx(i, j), l.meet_idx(j, i));
                    assert_eq!(l.meet_idx(i, i), i);
                    // absorption
                    assert_eq!(l.meet_idx(i, l.join_idx(i, j)), i);
                    assert_eq!(l.join_idx(i, l.meet_idx(i, j)), i);
                }
            }
        }
    }

    #[test]
    fn family_lattice_of_up_sets() {
        // The ten up-sets of the five-point poset, under reverse inclusion.
        let p = Poset::from_covers(
            &["a", "b", "c", "d", "e"],
            &[("b", "c"), ("b", "d"), ("a", "c"), ("a", "e"), ("d", "e")],
        )
        .unwrap();
        let fam = p.up_set_family(None).unwrap();
        let fl = FamilyLattice::new(fam).unwrap();
        assert_eq!(fl.lattice().bottom(), "{a,b,c,d,e}");
        assert_eq!(fl.lattice().top(), "{}");
        // Up-set families are union-closed, so meet is union and join is
        // intersection.
        assert_eq!(
            fl.meet_of_members(&[vec!["c", "e"], vec!["d", "e"]]).unwrap(),
            vec!["c", "d", "e"]
        );
        assert_eq!(
            fl.join_of_members(&[vec!["c", "e"], vec!["d", "e"]]).unwrap(),
            vec!["e"]
        );
    }

    #[test]
    fn family_lattice_meet_is_least_member_containing_union() {
        let fam = SetFamily::new(
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
        let fl = FamilyLattice::new(fam).unwrap();
        assert_eq!(
            fl.meet_of_members(&[vec!["a"], vec!["b"]]).unwrap(),
            vec!["a", "b", "c"]
        );
        // Empty meet is the top of the family lattice.
        let empty: &[Vec<&str>] = &[];
        assert_eq!(fl.meet_of_members(empty).unwrap(), Vec::<String>::new());
    }

    #[test]
    fn one_member_family() {
        let fam = SetFamily::new(&["a", "b"], &[vec!["a", "b"]]).unwrap();
        let fl = FamilyLattice::new(fam).unwrap();
        assert_eq!(fl.lattice().bottom(), fl.lattice().top());
    }

    #[test]
    fn family_lattice_rejects_gaps() {
        let fam = SetFamily::new(&["a", "b"], &[vec!["a"], vec!["b"], vec!["a", "b"]]).unwrap();
        assert!(matches!(
            FamilyLattice::new(fam),
            Err(LatticeError::NotIntersectionClosed(_, _))
        ));
        let fam = SetFamily::new(&["a", "b"], &[vec!["a"]]).unwrap();
        assert!(matches!(
            FamilyLattice::new(fam),
            Err(LatticeError::MissingFullSet)
        ));
    }

    #[test]
    fn meet_irreducibles_of_chain_and_diamond() {
        let c = chain(&["0", "1", "2", "3", "4", "5"]);
        assert_eq!(c.meet_irreducibles(), vec!["0", "1", "2", "3", "4"]);
        let d = diamond();
        assert_eq!(d.meet_irreducibles(), vec!["a", "b"]);
    }

    #[test]
    fn birkhoff_representation_of_diamond() {
        let d = diamond();
        let rep = birkhoff_representation(&d).unwrap();
        assert_eq!(rep.irreducibles.elements(), &["a", "b"]);
        let w = &rep.witness;
        assert_eq!(w.image_of("0").unwrap(), "{a,b}");
        assert_eq!(w.image_of("a").unwrap(), "{a}");
        assert_eq!(w.image_of("b").unwrap(), "{b}");
        assert_eq!(w.image_of("1").unwrap(), "{}");
        let p = w.preserves();
        assert!(p.order && p.meets && p.joins && p.bounds);
    }

    #[test]
    fn birkhoff_representation_of_chains() {
        for n in 1..=5usize {
            let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
            let covers: Vec<(String, String)> = (1..n)
                .map(|i| (format!("c{}", i - 1), format!("c{i}")))
                .collect();
            let l =
                FiniteLattice::from_poset(Poset::from_covers(&names, &covers).unwrap()).unwrap();
            let rep = birkhoff_representation(&l).unwrap();
            // Non-top elements form the irreducibles; their up-sets count n.
            assert_eq!(rep.irreducibles.len(), n - 1);
            assert_eq!(rep.upset_family.len(), n);
        }
    }

    #[test]
    fn three_atom_diamond_is_not_distributive() {
        let p = Poset::from_covers(
            &["0", "a", "b", "c", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("0", "c"),
                ("a", "1"),
                ("b", "1"),
                ("c", "1"),
            ],
        )
        .unwrap();
        let l = FiniteLattice::from_poset(p).unwrap();
        assert!(!l.is_distributive());
        assert!(matches!(
            birkhoff_representation(&l),
            Err(LatticeError::NotDistributive { .. })
        ));
    }

    #[test]
    fn embedding_into_self_is_identity() {
        let d = diamond();
        let w = find_bound_preserving_embedding(&d, &d).unwrap();
        for (s, t) in w.pairs() {
            assert_eq!(s, t);
        }
    }

    #[test]
    fn diamond_does_not_embed_into_chain() {
        let d = diamond();
        let c = chain(&["x", "y", "z"]);
        assert!(find_bound_preserving_embedding(&d, &c).is_none());
    }

    #[test]
    fn one_point_embeds_only_into_one_point() {
        let single = chain(&["x"]);
        let c = chain(&["0", "1"]);
        assert!(find_bound_preserving_embedding(&single, &c).is_none());
        assert!(find_bound_preserving_embedding(&single, &single).is_some());
    }

    #[test]
    fn meet_density_holds_on_samples() {
        // Every element is the meet of the irreducibles above it.
        for l in [diamond(), chain(&["0", "m", "1"])] {
            let irr = l.meet_irreducibles();
            for x in l.order().elements() {
                let above: Vec<usize> = irr
                    .iter()
                    .filter(|m| l.order().leq(x, m).unwrap())
                    .map(|m| l.order().index_of(m).unwrap())
                    .collect();
                let meet = l.meet_all_idx(above);
                assert_eq!(l.order().element(meet), x);
            }
        }
    }
}
