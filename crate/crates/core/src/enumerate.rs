//! Brute-force generation of all labeled posets, lattices, and monotone maps
//! on small carriers.
//!
//! Generation walks the three-valued state of every unordered element pair
//! (incomparable, below, above) and keeps the transitive outcomes, so the
//! output is deterministic and complete for the given element names.

use crate::lattice::FiniteLattice;
use crate::poset::Poset;

/// Every partial order on the given labeled elements.
///
/// Feasible up to five or six names; the candidate count is 3^(n(n-1)/2).
pub fn labeled_posets<S: AsRef<str>>(names: &[S]) -> Vec<Poset> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
    let n = names.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(pairs.len() <= 15, "poset generation capped at 6 elements");
    let mut out = Vec::new();
    let mut state = vec![0u8; pairs.len()];
    loop {
        let mut matrix = vec![vec![false; n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            match state[k] {
                1 => matrix[i][j] = true,
                2 => matrix[j][i] = true,
                _ => {}
            }
        }
        if let Ok(p) = Poset::from_relation(&names, &matrix) {
            out.push(p);
        }
        // Ternary counter over the pair states.
        let mut k = 0;
        loop {
            if k == state.len() {
                return out;
            }
            state[k] += 1;
            if state[k] < 3 {
                break;
            }
            state[k] = 0;
            k += 1;
        }
    }
}

/// Every labeled lattice on the given elements: all partial orders that
/// survive the total meet/join scan.
pub fn labeled_lattices<S: AsRef<str>>(names: &[S]) -> Vec<FiniteLattice> {
    labeled_posets(names)
        .into_iter()
        .filter_map(|p| FiniteLattice::from_poset(p).ok())
        .collect()
}

/// Every monotone assignment of scale indices to space points, in
/// lexicographic order along the space's declared elements.
pub fn monotone_assignments(space: &Poset, scale: &FiniteLattice) -> Vec<Vec<usize>> {
    let n = space.len();
    let mut out = Vec::new();
    let mut assign = vec![usize::MAX; n];

    fn descend(
        space: &Poset,
        scale: &FiniteLattice,
        assign: &mut Vec<usize>,
        i: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = space.len();
        if i == n {
            out.push(assign.clone());
            return;
        }
        'value: for v in 0..scale.len() {
            for k in 0..i {
                if space.leq_idx(k, i) && !scale.order().leq_idx(assign[k], v) {
                    continue 'value;
                }
                if space.leq_idx(i, k) && !scale.order().leq_idx(v, assign[k]) {
                    continue 'value;
                }
            }
            assign[i] = v;
            descend(space, scale, assign, i + 1, out);
            assign[i] = usize::MAX;
        }
    }

    descend(space, scale, &mut assign, 0, &mut out);
    out
}
