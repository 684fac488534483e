//! Brute-force enumeration of all expansion prefixes of `x` in base `q`,
//! used to cross-check the lexicographic characterizations.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::expansion::check_in_j_q;
use crate::field::{j_q_max, FieldElem};
use crate::sequence::{Digit, Word};

pub const DEFAULT_MAX_DEPTH: usize = 20;
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_depth: usize,
    pub node_cap: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_depth: DEFAULT_MAX_DEPTH,
            node_cap: DEFAULT_NODE_CAP,
        }
    }
}

/// All words of length `depth` that extend to an expansion of `x`.
#[derive(Clone, Debug)]
pub struct PrefixTree {
    pub base: AlgebraicReal,
    pub x: FieldElem,
    pub depth: usize,
    /// Sorted lexicographically.
    pub leaves: Vec<Word>,
    /// Feasible words of every length `<= depth`, the empty word included.
    pub nodes: usize,
}

impl PrefixTree {
    /// The lexicographically largest leaf.
    pub fn largest(&self) -> Option<&Word> {
        self.leaves.last()
    }
}

pub fn enumerate_prefixes(x: &FieldElem, q: &AlgebraicReal, n: usize) -> Result<PrefixTree> {
    enumerate_prefixes_with(x, q, n, OracleLimits::default())
}

/// Depth-first search keeping `t_j = q^j (x - sum_{i<=j} w_i q^{-i})` in
/// `[0, alpha_1/(q-1)]`.
pub fn enumerate_prefixes_with(
    x: &FieldElem,
    q: &AlgebraicReal,
    n: usize,
    limits: OracleLimits,
) -> Result<PrefixTree> {
    if n > limits.max_depth {
        return Err(Error::OutOfRange);
    }
    let m = check_in_j_q(x, q)?;
    let top = j_q_max(q, m);
    let qe = FieldElem::q(q);
    let mut qq = q.clone();
    let mut leaves = Vec::new();
    let mut nodes = 1usize;
    let mut path: Vec<Digit> = Vec::with_capacity(n);
    // one frame per depth: scaled residual and next digit to try
    let mut stack: Vec<(FieldElem, Digit)> = Vec::with_capacity(n + 1);
    if n == 0 {
        leaves.push(Word::empty());
    } else {
        stack.push((x.clone(), 0));
    }
    while let Some((t, d)) = stack.last_mut() {
        if *d > m {
            stack.pop();
            path.pop();
            continue;
        }
        let digit = *d;
        *d += 1;
        let next = &(&qe * t) - &FieldElem::from_integer(q, digit as i64);
        if next.sign_with(&mut qq) == Ordering::Less {
            // larger digits only go further below zero
            *d = m + 1;
            continue;
        }
        if (&top - &next).sign_with(&mut qq) == Ordering::Less {
            continue;
        }
        nodes += 1;
        if nodes > limits.node_cap {
            return Err(Error::Overflow(limits.node_cap));
        }
        path.push(digit);
        if path.len() == n {
            leaves.push(Word::new(path.clone()));
            path.pop();
        } else {
            stack.push((next, 0));
        }
    }
    Ok(PrefixTree {
        base: q.clone(),
        x: x.clone(),
        depth: n,
        leaves,
        nodes,
    })
}

/// Number of leaves of [`enumerate_prefixes`].
pub fn count_at_depth(x: &FieldElem, q: &AlgebraicReal, n: usize) -> Result<usize> {
    enumerate_prefixes(x, q, n).map(|t| t.leaves.len())
}
