//! Small permutation utilities shared by the determinant expansion, the
//! Jacobi-Trudi orbit and the test oracles.

use itertools::Itertools;

/// Number of pairs `i < j` with `v[i] > v[j]`.
pub fn inversions<T: Ord>(v: &[T]) -> usize {
    let mut count = 0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                count += 1;
            }
        }
    }
    count
}

/// Sign of a permutation given in one-line notation (0-based images).
pub fn sign(perm: &[usize]) -> i64 {
    if inversions(perm).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All permutations of `0..n` in lexicographic order, paired with their sign.
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    (0..n)
        .permutations(n)
        .map(|p| {
            let s = sign(&p);
            (p, s)
        })
        .collect()
}

/// Checks that `perm` is a bijection on `0..perm.len()`.
pub fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    for &i in perm {
        if i >= perm.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}
