//! Dehornoy handle reduction.
//!
//! A σ_k-handle is a subword `σ_k^e v σ_k^{-e}` where `v` only involves
//! generators of index `> k`. It is reduced by deleting the outer letters and
//! replacing each `σ_{k+1}^d` of `v` by `σ_{k+1}^{-e} σ_k^d σ_{k+1}^e`. Before a
//! handle is reduced its interior is itself cleared of σ_{k+1}-handles, so only
//! permitted handles are ever reduced and the procedure terminates.

use crate::braid::{BraidWord, Sign};

/// Sign of `b` in the σ-ordering: positive iff some representative word has
/// its lowest-index generator occurring only positively.
pub fn dehornoy_sign(b: &BraidWord) -> Sign {
    let top = b.strands() as i32 - 1;
    let mut word = free_reduce(b.letters().to_vec());
    for k in 1..=top {
        word = reduce_level(word, k);
        if let Some(l) = word.iter().find(|l| l.abs() == k) {
            return if *l > 0 { Sign::Positive } else { Sign::Negative };
        }
    }
    debug_assert!(word.is_empty());
    Sign::Zero
}

/// Returns an equivalent word (all letters of index `>= k`) in which the
/// σ_k letters all have the same sign.
fn reduce_level(mut word: Vec<i32>, k: i32) -> Vec<i32> {
    loop {
        word = free_reduce(word);
        let Some((p, q)) = first_handle(&word, k) else {
            return word;
        };
        let e = word[p].signum();
        let inner = reduce_level(word[p + 1..q].to_vec(), k + 1);
        let mut next = Vec::with_capacity(word.len() + 2 * inner.len());
        next.extend_from_slice(&word[..p]);
        for l in inner {
            if l.abs() == k + 1 {
                next.extend_from_slice(&[-e * (k + 1), l.signum() * k, e * (k + 1)]);
            } else {
                next.push(l);
            }
        }
        next.extend_from_slice(&word[q + 1..]);
        word = next;
    }
}

fn first_handle(word: &[i32], k: i32) -> Option<(usize, usize)> {
    let mut prev: Option<usize> = None;
    for (pos, &l) in word.iter().enumerate() {
        if l.abs() != k {
            continue;
        }
        if let Some(p) = prev {
            if word[p] == -l {
                return Some((p, pos));
            }
        }
        prev = Some(pos);
    }
    None
}

fn free_reduce(word: Vec<i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(word.len());
    for l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}
