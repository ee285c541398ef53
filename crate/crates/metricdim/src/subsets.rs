//! Lexicographic k-combination enumeration with rank/unrank support.
//!
//! Ranks let the search split the combination space into contiguous blocks
//! that workers can claim independently while still agreeing on a global
//! order. All values fit in `u64` for ground sets of up to 64 elements,
//! which covers every graph the solver accepts.

/// C(n, k) as a `u64`. Exact for `n <= 64`; callers must stay in that range.
pub fn binomial(n: usize, k: usize) -> u64 {
    debug_assert!(n <= 64, "binomial overflows u64 beyond n = 64");
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits u64 for n <= 64")
}

/// Lexicographic rank of a strictly increasing k-combination of `0..n`.
pub fn rank_combination(combo: &[usize], n: usize) -> u64 {
    let k = combo.len();
    let mut rank = 0u64;
    let mut prev = 0usize;
    for (i, &c) in combo.iter().enumerate() {
        for x in prev..c {
            rank += binomial(n - 1 - x, k - 1 - i);
        }
        prev = c + 1;
    }
    rank
}

/// Inverse of [`rank_combination`]: the `rank`-th k-combination of `0..n`
/// in lexicographic order. Panics if `rank >= C(n, k)`.
pub fn unrank_combination(mut rank: u64, n: usize, k: usize) -> Vec<usize> {
    assert!(rank < binomial(n, k), "rank out of range");
    let mut combo = Vec::with_capacity(k);
    let mut x = 0usize;
    for i in 0..k {
        loop {
            let with_x = binomial(n - 1 - x, k - 1 - i);
            if rank < with_x {
                break;
            }
            rank -= with_x;
            x += 1;
        }
        combo.push(x);
        x += 1;
    }
    combo
}

/// Advance `combo` to its lexicographic successor in place.
///
/// Returns `false` (leaving `combo` untouched) once the final combination
/// `[n-k, .., n-1]` has been reached.
pub fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
