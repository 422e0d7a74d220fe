//! Bitmask subsets over a carrier of at most 64 named elements.
//!
//! Bit `i` of a mask stands for the carrier element with declared index `i`.
//! The canonical order on subsets everywhere in this crate is the
//! lexicographic order of characteristic vectors read along the declared
//! element order (so the empty set comes first and membership of an earlier
//! element weighs more than membership of all later ones).

use std::cmp::Ordering;

/// Hard limit imposed by the mask representation.
pub const MAX_CARRIER: usize = 64;

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn contains(mask: u64, i: usize) -> bool {
    mask >> i & 1 == 1
}

/// Lexicographic comparison of characteristic vectors over `n` elements.
///
/// Element 0 is the most significant coordinate and absence sorts before
/// presence, so `0b000 < 0b100 (= {c}) < 0b001 (= {a})` for n = 3.
pub fn lex_cmp(a: u64, b: u64, n: usize) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    for i in 0..n {
        let (ai, bi) = (a >> i & 1, b >> i & 1);
        if ai != bi {
            return ai.cmp(&bi);
        }
    }
    Ordering::Equal
}

/// All subsets of an `n`-element carrier in canonical order.
pub fn subsets_lex(n: usize) -> Vec<u64> {
    assert!(n <= 20, "exhaustive subset sweep capped at 2^20");
    let mut all: Vec<u64> = (0..1u64 << n).collect();
    all.sort_by(|a, b| lex_cmp(*a, *b, n));
    all
}

/// Indices of the set bits, ascending.
pub fn members(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |i| contains(mask, *i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_prefers_absence_of_early_elements() {
        // n = 2, element 0 = "a", element 1 = "b":
        // {} < {b} < {a} < {a,b}
        let order = subsets_lex(2);
        assert_eq!(order, vec![0b00, 0b10, 0b01, 0b11]);
    }

    #[test]
    fn full_mask_edges() {
        assert_eq!(full_mask(0), 0);
        assert_eq!(full_mask(3), 0b111);
        assert_eq!(full_mask(64), u64::MAX);
    }
}
