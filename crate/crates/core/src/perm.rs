//! Permutations of `0..n` with their signs.

use itertools::Itertools;

/// Sign of a permutation given in one-line notation, by inversion count.
pub fn sign(perm: &[usize]) -> i32 {
    let inversions = perm
        .iter()
        .enumerate()
        .map(|(i, a)| perm[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Every permutation of `0..n` (lexicographic) paired with its sign.
pub fn signed_permutations(n: usize) -> impl Iterator<Item = (Vec<usize>, i32)> {
    (0..n).permutations(n).map(|p| {
        let s = sign(&p);
        (p, s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(sign(&[0, 1, 2]), 1);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        assert_eq!(sign(&[2, 1, 0]), -1);
        let total: i32 = signed_permutations(4).map(|(_, s)| s).sum();
        assert_eq!(total, 0);
        assert_eq!(signed_permutations(4).count(), 24);
    }
}
