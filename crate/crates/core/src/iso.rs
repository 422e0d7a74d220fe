//! Order isomorphism search and witness verification.
//!
//! The search returns the lexicographically least witness under the source's
//! declared element order (trying target candidates in declared order), so
//! every downstream result that threads through an isomorphism is
//! deterministic.

use crate::poset::Poset;

/// Which structure a witness has been verified to preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Preserves {
    pub order: bool,
    pub meets: bool,
    pub joins: bool,
    pub bounds: bool,
}

/// A verified structure-preserving map between two named carriers.
///
/// Pairs are listed in source declared order. The map is always total and
/// injective; for isomorphisms it is also surjective, while embeddings cover
/// only part of the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pairs: Vec<(String, String)>,
    preserves: Preserves,
}

impl IsoWitness {
    pub(crate) fn new(pairs: Vec<(String, String)>, preserves: Preserves) -> Self {
        IsoWitness { pairs, preserves }
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn preserves(&self) -> Preserves {
        self.preserves
    }

    pub(crate) fn set_preserves(&mut self, preserves: Preserves) {
        self.preserves = preserves;
    }

    pub fn image_of(&self, source: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(s, _)| s == source)
            .map(|(_, t)| t.as_str())
    }

    pub fn preimage_of(&self, target: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(_, t)| t == target)
            .map(|(s, _)| s.as_str())
    }

    /// The same witness read backwards (preservation flags carried over).
    pub fn inverted(&self) -> IsoWitness {
        IsoWitness {
            pairs: self.pairs.iter().map(|(s, t)| (t.clone(), s.clone())).collect(),
            preserves: self.preserves,
        }
    }
}

fn witness_indices(p: &Poset, q: &Poset, w: &IsoWitness) -> Option<Vec<usize>> {
    if w.pairs.len() != p.len() {
        return None;
    }
    let mut map = vec![usize::MAX; p.len()];
    let mut hit = vec![false; q.len()];
    for (s, t) in &w.pairs {
        let i = p.index_of(s)?;
        let j = q.index_of(t)?;
        if map[i] != usize::MAX || hit[j] {
            return None;
        }
        map[i] = j;
        hit[j] = true;
    }
    Some(map)
}

/// Checks that `w` is a bijection preserving order in both directions.
pub fn verify_order_iso(p: &Poset, q: &Poset, w: &IsoWitness) -> bool {
    if p.len() != q.len() {
        return false;
    }
    let Some(map) = witness_indices(p, q, w) else {
        return false;
    };
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.leq_idx(i, j) != q.leq_idx(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

/// Checks that `w` is injective into `q` with `x <= y` iff `f(x) <= f(y)`.
pub fn verify_order_embedding(p: &Poset, q: &Poset, w: &IsoWitness) -> bool {
    let Some(map) = witness_indices(p, q, w) else {
        return false;
    };
    for i in 0..p.len() {
        for j in 0..p.len() {
            if p.leq_idx(i, j) != q.leq_idx(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

/// Per-element invariants used to prune the search:
/// (covers below, covers above, up-set size, down-set size, height).
fn profiles(p: &Poset) -> Vec<(usize, usize, usize, usize, usize)> {
    let n = p.len();
    let heights = p.heights();
    let covers = p.covers();
    let mut below = vec![0usize; n];
    let mut above = vec![0usize; n];
    for (lo, hi) in &covers {
        let i = p.index_of(lo).unwrap();
        let j = p.index_of(hi).unwrap();
        above[i] += 1;
        below[j] += 1;
    }
    (0..n)
        .map(|i| {
            (
                below[i],
                above[i],
                p.up_mask(i).count_ones() as usize,
                p.down_mask(i).count_ones() as usize,
                heights[i],
            )
        })
        .collect()
}

/// Finds the lexicographically least order isomorphism from `p` onto `q`,
/// if one exists.
pub fn poset_isomorphism(p: &Poset, q: &Poset) -> Option<IsoWitness> {
    if p.len() != q.len() {
        return None;
    }
    let n = p.len();
    if n == 0 {
        return Some(IsoWitness::new(
            Vec::new(),
            Preserves {
                order: true,
                ..Preserves::default()
            },
        ));
    }
    let prof_p = profiles(p);
    let prof_q = profiles(q);
    {
        let mut a = prof_p.clone();
        let mut b = prof_q.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return None;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(p, q, &prof_p, &prof_q, &mut map, &mut used, 0) {
        return None;
    }
    let pairs = (0..n)
        .map(|i| (p.element(i).to_owned(), q.element(map[i]).to_owned()))
        .collect();
    Some(IsoWitness::new(
        pairs,
        Preserves {
            order: true,
            ..Preserves::default()
        },
    ))
}

fn extend(
    p: &Poset,
    q: &Poset,
    prof_p: &[(usize, usize, usize, usize, usize)],
    prof_q: &[(usize, usize, usize, usize, usize)],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    i: usize,
) -> bool {
    let n = p.len();
    if i == n {
        return true;
    }
    'candidate: for j in 0..n {
        if used[j] || prof_p[i] != prof_q[j] {
            continue;
        }
        for k in 0..i {
            if p.leq_idx(i, k) != q.leq_idx(j, map[k]) || p.leq_idx(k, i) != q.leq_idx(map[k], j) {
                continue 'candidate;
            }
        }
        map[i] = j;
        used[j] = true;
        if extend(p, q, prof_p, prof_q, map, used, i + 1) {
            return true;
        }
        map[i] = usize::MAX;
        used[j] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: try every bijection.
    fn iso_exists_brute(p: &Poset, q: &Poset) -> bool {
        if p.len() != q.len() {
            return false;
        }
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        fn ok(p: &Poset, q: &Poset, perm: &[usize]) -> bool {
            for i in 0..p.len() {
                for j in 0..p.len() {
                    if p.leq_idx(i, j) != q.leq_idx(perm[i], perm[j]) {
                        return false;
                    }
                }
            }
            true
        }
        // Heap's algorithm, iterative enough for n <= 6.
        fn permute(p: &Poset, q: &Poset, perm: &mut Vec<usize>, k: usize) -> bool {
            if k == perm.len() {
                return ok(p, q, perm);
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                if permute(p, q, perm, k + 1) {
                    perm.swap(k, i);
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        permute(p, q, &mut perm, 0)
    }

    fn chain(names: &[&str]) -> Poset {
        let covers: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0], w[1])).collect();
        Poset::from_covers(names, &covers).unwrap()
    }

    #[test]
    fn identity_witness_on_self() {
        let p = chain(&["a", "b", "c"]);
        let w = poset_isomorphism(&p, &p).unwrap();
        assert!(verify_order_iso(&p, &p, &w));
        // Lexicographically least: the identity.
        assert_eq!(
            w.pairs(),
            &[
                ("a".into(), "a".into()),
                ("b".into(), "b".into()),
                ("c".into(), "c".into())
            ]
        );
    }

    #[test]
    fn chain_vs_antichain_has_no_witness() {
        let c = chain(&["a", "b", "c"]);
        let a = Poset::antichain(&["x", "y", "z"]).unwrap();
        assert!(poset_isomorphism(&c, &a).is_none());
        assert!(!iso_exists_brute(&c, &a));
    }

    #[test]
    fn witness_is_symmetric_and_invertible() {
        let p = Poset::from_covers(&["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap();
        let q = Poset::from_covers(&["x", "y", "z"], &[("z", "x"), ("z", "y")]).unwrap();
        let w = poset_isomorphism(&p, &q).unwrap();
        assert!(verify_order_iso(&p, &q, &w));
        assert!(verify_order_iso(&q, &p, &w.inverted()));
        assert!(poset_isomorphism(&q, &p).is_some());
    }

    #[test]
    fn search_agrees_with_brute_force_on_small_posets() {
        // A few hand-picked shapes, pairwise compared both ways.
        let shapes: Vec<Poset> = vec![
            chain(&["a", "b", "c", "d"]),
            Poset::from_covers(&["a", "b", "c", "d"], &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]).unwrap(),
            Poset::from_covers(&["p", "q", "r", "s"], &[("p", "q"), ("p", "r")]).unwrap(),
            Poset::from_covers(&["w", "x", "y", "z"], &[("w", "z"), ("x", "z"), ("y", "z")]).unwrap(),
            Poset::antichain(&["a", "b", "c", "d"]).unwrap(),
        ];
        for p in &shapes {
            for q in &shapes {
                let found = poset_isomorphism(p, q);
                assert_eq!(found.is_some(), iso_exists_brute(p, q));
                if let Some(w) = found {
                    assert!(verify_order_iso(p, q, &w));
                }
            }
        }
    }
}
