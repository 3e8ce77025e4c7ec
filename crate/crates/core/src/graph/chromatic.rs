use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::{bit, Graph, VertexSet};

/// Deletion-contraction with a memo table keyed by the adjacency vector.
/// The memo lives only for one call.
pub(crate) fn chromatic_polynomial_at(g: &Graph, k: usize) -> BigUint {
    let mut memo = HashMap::new();
    let value = evaluate(g.adjacency().to_vec(), &BigInt::from(k), &mut memo);
    debug_assert!(!value.is_negative());
    value
        .to_biguint()
        .expect("colouring counts are nonnegative")
}

fn evaluate(adj: Vec<VertexSet>, k: &BigInt, memo: &mut HashMap<Vec<VertexSet>, BigInt>) -> BigInt {
    let n = adj.len();
    let edges: usize = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
    if edges == 0 {
        return num_traits::pow(k.clone(), n);
    }
    if edges == n * (n - 1) / 2 {
        return (0..n).fold(BigInt::one(), |acc, i| acc * (k - BigInt::from(i)));
    }
    if let Some(v) = memo.get(&adj) {
        return v.clone();
    }
    let u = (0..n).find(|&u| adj[u] != 0).expect("graph has an edge");
    let v = adj[u].trailing_zeros() as usize;

    let mut deleted = adj.clone();
    deleted[u] &= !bit(v);
    deleted[v] &= !bit(u);

    let mut merged = adj.clone();
    let union = (adj[u] | adj[v]) & !bit(u) & !bit(v);
    merged[u] = union;
    for w in super::vertices_of(union) {
        merged[w] |= bit(u);
    }
    let contracted = remove_vertex(&merged, v);

    let value = evaluate(deleted, k, memo) - evaluate(contracted, k, memo);
    memo.insert(adj, value.clone());
    value
}

/// Drops vertex `v`, shifting higher labels down by one.
fn remove_vertex(adj: &[VertexSet], v: usize) -> Vec<VertexSet> {
    let low = bit(v) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(w, _)| w != v)
        .map(|(_, &a)| (a & low) | ((a >> 1) & !low))
        .collect()
}
