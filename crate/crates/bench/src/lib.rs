//! Benchmark fixtures for `csf-core`; the benchmarks themselves live in `benches/`.

use csf_core::{parse_graph, Graph, GraphFormat};

/// Family graphs used by the benchmarks, as `(label, graph)` pairs.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    [
        "claw",
        "fan:2,6",
        "complete_tripartite:2,2,3",
        "squid:7,1,1,1,1",
        "windmill:3,4",
    ]
    .into_iter()
    .map(|s| {
        (
            s,
            parse_graph(s, GraphFormat::FamilyDsl).expect("fixture graphs are valid"),
        )
    })
    .collect()
}
