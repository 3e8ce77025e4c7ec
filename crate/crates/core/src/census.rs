//! Counting stable partitions of a graph by type.
//!
//! A stable partition splits the vertex set into independent sets; its type
//! is the partition formed by the block sizes. Two routes compute the counts:
//!
//! - [`stable_partition_census`] walks vertices in descending-degree order,
//!   placing each one into a compatible existing block or opening the next
//!   block, and tallies every complete assignment by type.
//! - [`count_of_type`] targets one type: it repeatedly chooses the block that
//!   holds the first unplaced vertex, with a size drawn from the parts still
//!   owed, memoised on (unplaced vertices, owed parts).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_weight, Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::partition::Partition;

/// Exact counts `N_G(λ)` of stable partitions of each type λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableCensus {
    graph_size: usize,
    counts: BTreeMap<Partition, BigUint>,
}

impl StableCensus {
    pub fn graph_size(&self) -> usize {
        self.graph_size
    }

    /// `N_G(λ)`; zero for types with no stable partition.
    pub fn count(&self, lambda: &Partition) -> BigUint {
        self.counts.get(lambda).cloned().unwrap_or_default()
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        self.counts.contains_key(lambda)
    }

    /// Types with a positive count, in reverse-lex order.
    pub fn types(&self) -> impl Iterator<Item = &Partition> {
        self.counts.keys().rev()
    }

    /// `(type, count)` pairs in reverse-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.counts.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Total number of stable partitions.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn to_json(&self) -> CensusJson {
        CensusJson {
            n: self.graph_size,
            counts: self
                .iter()
                .map(|(t, c)| CensusEntry {
                    type_: t.clone(),
                    count: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &CensusJson) -> Result<Self> {
        let mut counts = BTreeMap::new();
        for entry in &json.counts {
            check_weight(json.n, entry.type_.weight())?;
            let count: BigUint = entry.count.parse().map_err(|_| Error::Parse {
                offset: 0,
                message: format!("count `{}` is not a nonnegative integer", entry.count),
            })?;
            if !count.is_zero() {
                counts.insert(entry.type_.clone(), count);
            }
        }
        Ok(StableCensus {
            graph_size: json.n,
            counts,
        })
    }
}

/// Wire form: `{"n": 4, "counts": [{"type": "3,1", "count": "1"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub n: usize,
    pub counts: Vec<CensusEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntry {
    #[serde(rename = "type")]
    pub type_: Partition,
    pub count: String,
}

/// Adjacency relabelled so that vertex 0 has the largest degree (ties by label).
fn degree_ordered(g: &Graph) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).fold(0, |acc, w| acc | bit(position[w])))
        .collect()
}

/// The full census of stable partitions by type.
pub fn stable_partition_census(g: &Graph) -> Result<StableCensus> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj = degree_ordered(g);
    let mut tallies: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut blocks: Vec<(VertexSet, usize)> = Vec::new();
    place_vertex(&adj, 0, &mut blocks, &mut tallies);
    let counts = tallies
        .into_iter()
        .map(|(parts, c)| (Partition::from_sorted_unchecked(parts), BigUint::from(c)))
        .collect();
    Ok(StableCensus {
        graph_size: g.vertex_count(),
        counts,
    })
}

fn place_vertex(
    adj: &[VertexSet],
    v: usize,
    blocks: &mut Vec<(VertexSet, usize)>,
    tallies: &mut HashMap<Vec<usize>, u64>,
) {
    if v == adj.len() {
        let mut sizes: Vec<usize> = blocks.iter().map(|&(_, s)| s).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *tallies.entry(sizes).or_insert(0) += 1;
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].0 & adj[v] == 0 {
            blocks[i].0 |= bit(v);
            blocks[i].1 += 1;
            place_vertex(adj, v + 1, blocks, tallies);
            blocks[i].0 &= !bit(v);
            blocks[i].1 -= 1;
        }
    }
    blocks.push((bit(v), 1));
    place_vertex(adj, v + 1, blocks, tallies);
    blocks.pop();
}

/// Parts still owed, as multiplicities indexed by part size.
type Owed = Vec<u8>;

fn owed_parts(lambda: &Partition) -> Owed {
    let mut owed = vec![0u8; lambda.largest() + 1];
    for &p in lambda.parts() {
        owed[p] += 1;
    }
    owed
}

/// Calls `visit` with every stable set `S ⊆ allowed ∪ {v}` containing `v`
/// with `|S| = size`. Returning `false` from `visit` stops the walk.
fn for_each_stable_block(
    adj: &[VertexSet],
    v: usize,
    allowed: VertexSet,
    size: usize,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    fn extend(
        adj: &[VertexSet],
        chosen: VertexSet,
        candidates: VertexSet,
        needed: usize,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if needed == 0 {
            return visit(chosen);
        }
        let mut rest = candidates;
        while rest.count_ones() as usize >= needed {
            let w = rest.trailing_zeros() as usize;
            rest &= !bit(w);
            if !extend(adj, chosen | bit(w), rest & !adj[w], needed - 1, visit) {
                return false;
            }
        }
        true
    }
    extend(adj, bit(v), allowed & !adj[v] & !bit(v), size - 1, visit)
}

struct TypeCounter<'a> {
    adj: &'a [VertexSet],
    memo: HashMap<(VertexSet, Owed), BigUint>,
}

impl TypeCounter<'_> {
    fn count(&mut self, unplaced: VertexSet, owed: &mut Owed) -> BigUint {
        if unplaced == 0 {
            return BigUint::one();
        }
        let key = (unplaced, owed.clone());
        if let Some(c) = self.memo.get(&key) {
            return c.clone();
        }
        let v = unplaced.trailing_zeros() as usize;
        let mut total = BigUint::zero();
        for size in 1..owed.len() {
            if owed[size] == 0 {
                continue;
            }
            let mut blocks = Vec::new();
            for_each_stable_block(self.adj, v, unplaced, size, &mut |s| {
                blocks.push(s);
                true
            });
            owed[size] -= 1;
            for s in blocks {
                total += self.count(unplaced & !s, owed);
            }
            owed[size] += 1;
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// `N_G(λ)` without building the full census.
pub fn count_of_type(g: &Graph, lambda: &Partition) -> Result<BigUint> {
    check_weight(g.vertex_count(), lambda.weight())?;
    let adj = degree_ordered(g);
    let mut counter = TypeCounter {
        adj: &adj,
        memo: HashMap::new(),
    };
    Ok(counter.count(g.all_vertices(), &mut owed_parts(lambda)))
}

/// Memoised search for a partition of `unplaced` into blocks of the owed
/// sizes, each block stable or (with `connected`) inducing a connected subgraph.
struct Existence<'a> {
    adj: &'a [VertexSet],
    connected: bool,
    memo: HashMap<(VertexSet, Owed), bool>,
}

impl Existence<'_> {
    fn exists(&mut self, unplaced: VertexSet, owed: &mut Owed) -> bool {
        if unplaced == 0 {
            return true;
        }
        let key = (unplaced, owed.clone());
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let v = unplaced.trailing_zeros() as usize;
        let mut found = false;
        for size in (1..owed.len()).rev() {
            if owed[size] == 0 {
                continue;
            }
            owed[size] -= 1;
            let adj = self.adj;
            let mut blocks = Vec::new();
            if self.connected {
                for_each_connected_block(adj, v, unplaced, size, &mut |s| {
                    blocks.push(s);
                    true
                });
            } else {
                for_each_stable_block(adj, v, unplaced, size, &mut |s| {
                    blocks.push(s);
                    true
                });
            }
            for s in blocks {
                if self.exists(unplaced & !s, owed) {
                    found = true;
                    break;
                }
            }
            owed[size] += 1;
            if found {
                break;
            }
        }
        self.memo.insert(key, found);
        found
    }
}

/// Calls `visit` with every `S ⊆ allowed ∪ {v}` containing `v`, `|S| = size`,
/// inducing a connected subgraph. Each set is produced once: a set grows
/// from `v` by adding frontier vertices, and a skipped frontier vertex is
/// banned for the rest of that branch.
fn for_each_connected_block(
    adj: &[VertexSet],
    v: usize,
    allowed: VertexSet,
    size: usize,
    visit: &mut dyn FnMut(VertexSet) -> bool,
) -> bool {
    fn grow(
        adj: &[VertexSet],
        chosen: VertexSet,
        frontier: VertexSet,
        banned: VertexSet,
        allowed: VertexSet,
        needed: usize,
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if needed == 0 {
            return visit(chosen);
        }
        let mut rest = frontier;
        let mut banned = banned;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= !bit(w);
            let next = chosen | bit(w);
            let new_frontier = (rest | adj[w]) & allowed & !next & !banned;
            if !grow(adj, next, new_frontier, banned, allowed, needed - 1, visit) {
                return false;
            }
            banned |= bit(w);
        }
        true
    }
    let allowed = allowed & !bit(v);
    grow(adj, bit(v), adj[v] & allowed, 0, allowed, size - 1, visit)
}

/// Whether `G` has at least one stable partition of type λ.
pub fn has_stable_partition_of_type(g: &Graph, lambda: &Partition) -> Result<bool> {
    check_weight(g.vertex_count(), lambda.weight())?;
    let adj = degree_ordered(g);
    let mut search = Existence {
        adj: &adj,
        connected: false,
        memo: HashMap::new(),
    };
    Ok(search.exists(g.all_vertices(), &mut owed_parts(lambda)))
}

/// Whether `V(G)` splits into blocks of sizes λ, each inducing a connected subgraph.
pub fn has_connected_partition_of_type(g: &Graph, lambda: &Partition) -> Result<bool> {
    check_weight(g.vertex_count(), lambda.weight())?;
    let adj = g.adjacency();
    let mut search = Existence {
        adj,
        connected: true,
        memo: HashMap::new(),
    };
    Ok(search.exists(g.all_vertices(), &mut owed_parts(lambda)))
}

/// Per-graph cache of the quantities the expansion and positivity code query
/// repeatedly. Safe to share between threads.
#[derive(Debug)]
pub struct GraphAnalysis {
    graph: Graph,
    independence: OnceLock<usize>,
    census: OnceLock<StableCensus>,
    type_counts: Mutex<HashMap<Partition, BigUint>>,
}

impl GraphAnalysis {
    pub fn new(graph: Graph) -> Self {
        GraphAnalysis {
            graph,
            independence: OnceLock::new(),
            census: OnceLock::new(),
            type_counts: Mutex::new(HashMap::new()),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn independence_number(&self) -> Result<usize> {
        if let Some(&a) = self.independence.get() {
            return Ok(a);
        }
        let a = self.graph.independence_number()?;
        Ok(*self.independence.get_or_init(|| a))
    }

    pub fn census(&self) -> Result<&StableCensus> {
        if let Some(c) = self.census.get() {
            return Ok(c);
        }
        let c = stable_partition_census(&self.graph)?;
        Ok(self.census.get_or_init(|| c))
    }

    /// `N_G(λ)`, read from the census when it is already built.
    pub fn count_of_type(&self, lambda: &Partition) -> Result<BigUint> {
        check_weight(self.graph.vertex_count(), lambda.weight())?;
        if let Some(c) = self.census.get() {
            return Ok(c.count(lambda));
        }
        if let Some(c) = self.lock_counts().get(lambda) {
            return Ok(c.clone());
        }
        let c = count_of_type(&self.graph, lambda)?;
        self.lock_counts().insert(lambda.clone(), c.clone());
        Ok(c)
    }

    pub fn has_stable_partition_of_type(&self, lambda: &Partition) -> Result<bool> {
        check_weight(self.graph.vertex_count(), lambda.weight())?;
        if let Some(c) = self.census.get() {
            return Ok(c.contains(lambda));
        }
        if let Some(c) = self.lock_counts().get(lambda) {
            return Ok(!c.is_zero());
        }
        has_stable_partition_of_type(&self.graph, lambda)
    }

    fn lock_counts(&self) -> std::sync::MutexGuard<'_, HashMap<Partition, BigUint>> {
        self.type_counts.lock().unwrap_or_else(|e| e.into_inner())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, vertices_of, GraphFormat};
    use crate::partition::partitions_of;

    fn family(s: &str) -> Graph {
        parse_graph(s, GraphFormat::FamilyDsl).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Every set partition as a restricted growth string, filtered for stability.
    fn brute_census(g: &Graph) -> BTreeMap<Partition, u64> {
        let n = g.vertex_count();
        let mut out = BTreeMap::new();
        let mut rgs = vec![0usize; n];
        loop {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let stable = g.edges().iter().all(|&(u, v)| rgs[u] != rgs[v]);
            if stable {
                let sizes = (0..blocks).map(|b| rgs.iter().filter(|&&x| x == b).count());
                *out.entry(Partition::from_unsorted(sizes)).or_insert(0) += 1;
            }
            // next restricted growth string
            let mut i = n;
            loop {
                if i <= 1 {
                    return out;
                }
                i -= 1;
                let bound = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < bound {
                    rgs[i] += 1;
                    for x in &mut rgs[i + 1..] {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    fn as_u64_map(c: &StableCensus) -> BTreeMap<Partition, u64> {
        c.iter()
            .map(|(t, n)| (t.clone(), n.to_string().parse().unwrap()))
            .collect()
    }

    #[test]
    fn census_examples() {
        let k5 = stable_partition_census(&family("complete:5")).unwrap();
        assert_eq!(as_u64_map(&k5), BTreeMap::from([(p("1,1,1,1,1"), 1)]));

        let claw = stable_partition_census(&family("claw")).unwrap();
        let expected = BTreeMap::from([(p("3,1"), 1), (p("2,1,1"), 3), (p("1,1,1,1"), 1)]);
        assert_eq!(as_u64_map(&claw), expected);
        assert_eq!(brute_census(&family("claw")), expected);

        let p3 = stable_partition_census(&family("path:3")).unwrap();
        assert_eq!(
            as_u64_map(&p3),
            BTreeMap::from([(p("2,1"), 1), (p("1,1,1"), 1)])
        );
    }

    #[test]
    fn type_counts() {
        for s in 2..=4 {
            let g = family(&format!("complete_tripartite:{s},{s},{s}"));
            assert_eq!(
                count_of_type(&g, &p(&format!("{s},{s},{s}"))).unwrap(),
                BigUint::one()
            );
        }
        let g = family("complete_tripartite:3,3,4");
        assert_eq!(
            count_of_type(&g, &p("4,3,2,1")).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_of_type(&family("claw"), &p("2,2")).unwrap(),
            BigUint::zero()
        );
        assert_eq!(
            count_of_type(&family("claw"), &p("2,1")),
            Err(Error::WeightMismatch {
                expected: 4,
                found: 3
            })
        );
    }

    #[test]
    fn stable_existence() {
        let w7 = family("wheel:7");
        assert!(has_stable_partition_of_type(&w7, &p("3,3,1")).unwrap());
        assert!(!has_stable_partition_of_type(&w7, &p("3,2,2")).unwrap());
        assert!(has_stable_partition_of_type(&w7, &Partition::ones(7)).unwrap());
    }

    #[test]
    fn connected_existence() {
        let claw = family("claw");
        assert!(!has_connected_partition_of_type(&claw, &p("2,2")).unwrap());
        assert!(has_connected_partition_of_type(&claw, &p("3,1")).unwrap());
        for n in 1..=9 {
            let path = family(&format!("path:{n}"));
            for lambda in partitions_of(n) {
                assert!(has_connected_partition_of_type(&path, &lambda).unwrap());
            }
        }
    }

    fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let n = rng.gen_range(1..=max_n);
                let density = rng.gen_range(0.1..0.8);
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(density))
                    .collect();
                Graph::from_edges(n, edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn census_matches_naive_enumeration() {
        let mut pool = random_graphs(60, 9, 11);
        pool.extend(
            [
                "claw",
                "cycle:6",
                "fan:2,4",
                "squid:5,1,1",
                "wheel:7",
                "spider:2,2,3",
            ]
            .map(family),
        );
        for g in &pool {
            let census = stable_partition_census(g).unwrap();
            let brute = brute_census(g);
            assert_eq!(as_u64_map(&census), brute, "{g:?}");
            let alpha = g.independence_number().unwrap();
            assert!(census.contains(&Partition::ones(g.vertex_count())));
            assert_eq!(
                census.count(&Partition::ones(g.vertex_count())),
                BigUint::one()
            );
            for lambda in partitions_of(g.vertex_count()) {
                let targeted = count_of_type(g, &lambda).unwrap();
                assert_eq!(targeted, census.count(&lambda), "{g:?} type {lambda}");
                assert_eq!(
                    has_stable_partition_of_type(g, &lambda).unwrap(),
                    census.contains(&lambda)
                );
                if census.contains(&lambda) {
                    assert!(lambda.largest() <= alpha);
                }
            }
        }
    }

    /// Brute-force connected partitions: try every set partition.
    fn brute_connected(g: &Graph, lambda: &Partition) -> bool {
        let n = g.vertex_count();
        let mut rgs = vec![0usize; n];
        let connected = |set: VertexSet| {
            let start = set.trailing_zeros() as usize;
            let mut seen = bit(start);
            loop {
                let grown = vertices_of(seen).fold(seen, |acc, v| acc | (g.adjacency()[v] & set));
                if grown == seen {
                    return seen == set;
                }
                seen = grown;
            }
        };
        loop {
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            let sets: Vec<VertexSet> = (0..blocks)
                .map(|b| {
                    (0..n)
                        .filter(|&v| rgs[v] == b)
                        .fold(0, |acc, v| acc | bit(v))
                })
                .collect();
            let ty = Partition::from_unsorted(sets.iter().map(|s| s.count_ones() as usize));
            if &ty == lambda && sets.iter().all(|&s| connected(s)) {
                return true;
            }
            let mut i = n;
            loop {
                if i <= 1 {
                    return false;
                }
                i -= 1;
                let bound = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < bound {
                    rgs[i] += 1;
                    for x in &mut rgs[i + 1..] {
                        *x = 0;
                    }
                    break;
                }
            }
        }
    }

    #[test]
    fn connected_partitions_match_brute_force() {
        for g in random_graphs(40, 7, 5) {
            for lambda in partitions_of(g.vertex_count()) {
                assert_eq!(
                    has_connected_partition_of_type(&g, &lambda).unwrap(),
                    brute_connected(&g, &lambda),
                    "{g:?} {lambda}"
                );
            }
        }
    }

    #[test]
    fn bipartite_graphs_have_one_stable_bipartition_type() {
        let mut pool: Vec<Graph> = (2..=5)
            .map(|k| family(&format!("cycle:{}", 2 * k)))
            .collect();
        for a in 1..=4 {
            for b in a..=5 {
                pool.push(family(&format!("complete_bipartite:{a},{b}")));
            }
        }
        pool.extend(
            [
                "spider:1,1,1",
                "spider:3,3,3",
                "spider:2,1,1",
                "spider:1,2,3",
            ]
            .map(family),
        );
        for g in pool {
            let (u, v) = g.bipartition().unwrap();
            let expected = Partition::from_unsorted([u.len(), v.len()]);
            let census = stable_partition_census(&g).unwrap();
            assert!(census.contains(&expected));
            for t in census.types().filter(|t| t.len() == 2) {
                assert_eq!(t, &expected, "{g:?}");
            }
        }
    }

    #[test]
    fn census_json_round_trip() {
        let census = stable_partition_census(&family("claw")).unwrap();
        let text = serde_json::to_string(&census.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"n":4,"counts":[{"type":"3,1","count":"1"},{"type":"2,1,1","count":"3"},{"type":"1,1,1,1","count":"1"}]}"#
        );
        let back: CensusJson = serde_json::from_str(&text).unwrap();
        assert_eq!(StableCensus::from_json(&back).unwrap(), census);
    }

    #[test]
    fn analysis_cache_agrees_with_direct_counts() {
        let g = family("fan:2,5");
        let a = GraphAnalysis::new(g.clone());
        for lambda in partitions_of(7) {
            assert_eq!(
                a.count_of_type(&lambda).unwrap(),
                count_of_type(&g, &lambda).unwrap()
            );
        }
        a.census().unwrap();
        for lambda in partitions_of(7) {
            assert_eq!(
                a.count_of_type(&lambda).unwrap(),
                count_of_type(&g, &lambda).unwrap()
            );
        }
    }
}
