use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{det_bareiss, IntMat};
use crate::{Error, Result};

/// Per-vertex invariant used to prune candidates: diagonal entry and sorted
/// off-diagonal row multiset.
fn vertex_keys(m: &IntMat) -> Vec<(BigInt, Vec<BigInt>)> {
    (0..m.rows())
        .map(|i| {
            let mut row: Vec<BigInt> = (0..m.cols())
                .filter(|&j| j != i)
                .map(|j| m.get(i, j).clone())
                .collect();
            row.sort();
            (m.get(i, i).clone(), row)
        })
        .collect()
}

/// Searches for a permutation `π` with `b[i][j] = a[π(i)][π(j)]` for all
/// `i, j` (equivalently `P·a·Pᵀ = b` with `P[i][π(i)] = 1`).
///
/// Backtracking over the vertices of `b` in breadth-first order, pruned by
/// [`vertex_keys`] and by consistency with every earlier assignment.
pub fn perm_congruent(a: &IntMat, b: &IntMat) -> Result<Option<Vec<usize>>> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "cannot compare {}x{} with {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if !a.is_symmetric() || !b.is_symmetric() {
        return Err(Error::Contract("permutation congruence needs symmetric input".into()));
    }
    let n = a.rows();
    if det_bareiss(a)? != det_bareiss(b)? {
        return Ok(None);
    }

    let keys_a = vertex_keys(a);
    let keys_b = vertex_keys(b);
    let mut count: HashMap<&(BigInt, Vec<BigInt>), i64> = HashMap::new();
    for k in &keys_a {
        *count.entry(k).or_default() += 1;
    }
    for k in &keys_b {
        *count.entry(k).or_default() -= 1;
    }
    if count.values().any(|&c| c != 0) {
        return Ok(None);
    }

    let order = search_order(b, &keys_b);
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| keys_a[u] == keys_b[v]).collect())
        .collect();

    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut perm, &mut used) {
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

/// Breadth-first over the nonzero pattern of `b`, each component started at
/// the vertex whose key is rarest.
fn search_order(b: &IntMat, keys: &[(BigInt, Vec<BigInt>)]) -> Vec<usize> {
    let n = b.rows();
    let rarity = |v: usize| keys.iter().filter(|k| **k == keys[v]).count();
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&v| (rarity(v), v));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for w in 0..n {
                if !seen[w] && w != v && !b.get(v, w).is_zero() {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn extend(
    a: &IntMat,
    b: &IntMat,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    perm: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for &c in &candidates[v] {
        if used[c] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.get(c, perm[u]) == b.get(v, u));
        if !consistent {
            continue;
        }
        perm[v] = c;
        used[c] = true;
        if extend(a, b, order, candidates, depth + 1, perm, used) {
            return true;
        }
        used[c] = false;
        perm[v] = usize::MAX;
    }
    false
}
