//! Reference expansions compiled into the binary, and the checks that replay them.

use csf_core::{
    csf_elementary, csf_schur, parse_graph, schur_coefficient, Basis, GraphAnalysis, GraphFormat,
    SymFuncExpansion, TermJson,
};
use serde::Serialize;

use crate::display::{parse_display, parse_expansion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// The display is reproduced verbatim.
    Published,
    /// The display contains a misprint; `expected` holds the corrected terms.
    PublishedWithTypoNote,
    /// No printed value exists; the expected terms were computed here.
    Derived,
}

/// Which part of the computed expansion a fixture pins down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// Every term.
    Full,
    /// Exactly the negative terms.
    NegativeTerms,
    /// Only the listed coefficients.
    Coefficients,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusFixture {
    pub id: &'static str,
    pub graph_spec: &'static str,
    pub basis: Basis,
    pub scope: Scope,
    /// The display as originally printed.
    pub display: &'static str,
    /// The terms checked against the computation.
    pub expected: &'static str,
    pub provenance: Provenance,
    pub note: Option<&'static str>,
}

const fn published(
    id: &'static str,
    graph_spec: &'static str,
    basis: Basis,
    display: &'static str,
) -> CorpusFixture {
    CorpusFixture {
        id,
        graph_spec,
        basis,
        scope: Scope::Full,
        display,
        expected: display,
        provenance: Provenance::Published,
        note: None,
    }
}

const S: Basis = Basis::Schur;
const E: Basis = Basis::Elementary;

pub const FIXTURES: &[CorpusFixture] = &[
    published("claw", "claw", S, "s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}"),
    CorpusFixture {
        id: "W5",
        graph_spec: "wheel:5",
        basis: E,
        scope: Scope::Full,
        display: "70e_5+6e_{41}+2e_{32^2}",
        expected: "70e_5+6e_{41}+2e_{32}",
        provenance: Provenance::PublishedWithTypoNote,
        note: Some(
            "printed term 2e_{32^2} has degree 7 on a 5-vertex graph; the computed term is 2e_{32}, \
             consistent with W5 being isomorphic to F(2,3)",
        ),
    },
    published("W6", "wheel:6", E, "180e_6+40e_{51}+20e_{42}"),
    published("K23", "complete_bipartite:2,3", E, "e_{2^21}+9e_{41}+e_{32}+35e_5"),
    CorpusFixture {
        id: "K34",
        graph_spec: "complete_bipartite:3,4",
        basis: S,
        scope: Scope::Full,
        display: "s_{43}+2s_{421}+s_{41^3}+4s_{3^21}+20s_{321^2}+32s_{31^4}+70s_{2^21^3}+292s_{21^5}+1066s_{1^6}-4s_{32^2}-3s_{2^31}",
        expected: "s_{43}+2s_{421}+s_{41^3}+4s_{3^21}+20s_{321^2}+32s_{31^4}+70s_{2^21^3}+292s_{21^5}+1066s_{1^7}-4s_{32^2}-3s_{2^31}",
        provenance: Provenance::PublishedWithTypoNote,
        note: Some("degree audit: printed term 1066s_{1^6} has degree 6 in a degree-7 expansion; the computed term is 1066s_{1^7}"),
    },
    published("F13", "fan:1,3", E, "16e_4+2e_{31}"),
    published("F22", "fan:2,2", E, "16e_4+2e_{31}"),
    published("F14", "fan:1,4", E, "40e_5+12e_{41}+2e_{32}"),
    published("F23", "fan:2,3", E, "70e_5+6e_{41}+2e_{32}"),
    published("F24", "fan:2,4", E, "276e_6+44e_{51}+4e_{42}+6e_{3^2}"),
    published("F25", "fan:2,5", E, "1022e_7+298e_{61}+18e_{52}+12e_{51^2}+22e_{43}+2e_{3^21}"),
    published(
        "F26-s",
        "fan:2,6",
        S,
        "2s_{3^22}+2s_{3^21^2}+14s_{32^21}+44s_{321^3}+212s_{31^5}+68s_{2^4}+50s_{2^31^2}+410s_{2^21^4}+2238s_{21^6}+5658s_{1^8}",
    ),
    published("F34-s", "fan:3,4", S, "2s_{32^2}+4s_{321^2}+8s_{31^4}+4s_{2^31}+70s_{2^21^3}+300s_{21^5}+1902s_{1^7}"),
    published(
        "F35-s",
        "fan:3,5",
        S,
        "2s_{3^22}+2s_{3^21^2}+12s_{32^21}+24s_{321^3}+62s_{31^5}-46s_{2^4}+120s_{2^31^2}+428s_{2^21^4}+2088s_{21^6}+10554s_{1^8}",
    ),
    published(
        "F26-e",
        "fan:2,6",
        E,
        "3632e_8+1660e_{71}+160e_{62}+170e_{61^2}-62e_{53}+30e_{521}+56e_{4^2}+10e_{431}+2e_{3^22}",
    ),
    CorpusFixture {
        id: "F34-e",
        graph_spec: "fan:3,4",
        basis: E,
        scope: Scope::Full,
        display: "1610e_7+226e_{61}+60e_{52}+4e_{51^2}-2e_{43}+2_{421}+2e_{3^21}",
        expected: "1610e_7+226e_{61}+60e_{52}+4e_{51^2}-2e_{43}+2e_{421}+2e_{3^21}",
        provenance: Provenance::PublishedWithTypoNote,
        note: Some("printed term 2_{421} lacks its basis symbol; read as 2e_{421}, which the computation confirms"),
    },
    published("K111", "complete_tripartite:1,1,1", E, "6e_3"),
    published("K112", "complete_tripartite:1,1,2", E, "16e_4+2e_{31}"),
    published("K122", "complete_tripartite:1,2,2", E, "6e_{41}+2e_{32}+70e_5"),
    published("K222", "complete_tripartite:2,2,2", E, "36e_{51}+6e_{3^2}+384e_6"),
    published("K223", "complete_tripartite:2,2,3", E, "12e_{51^2}+2e_{3^21}+268e_{61}+12e_{52}+4e_{43}+1988e_7"),
    CorpusFixture {
        scope: Scope::NegativeTerms,
        ..published("Sq5-111", "squid:5,1,1,1", S, "-8s_{3^22}")
    },
    CorpusFixture {
        scope: Scope::NegativeTerms,
        ..published("Sq7-1111", "squid:7,1,1,1,1", S, "-60s_{4^23}-30s_{3^32}")
    },
    CorpusFixture {
        id: "F46-tau",
        graph_spec: "fan:4,6",
        basis: S,
        scope: Scope::Coefficients,
        display: "-40s_{3^22^2}",
        expected: "-40s_{3^22^2}",
        provenance: Provenance::Derived,
        note: Some("only an upper bound of -4 is printed for this coefficient; the exact value was computed"),
    },
];

pub fn find(id: &str) -> Option<&'static CorpusFixture> {
    FIXTURES.iter().find(|f| f.id == id)
}

/// Outcome of replaying one fixture. `lines` is the human-readable report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureReport {
    pub id: &'static str,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl CorpusFixture {
    pub fn verify(&self) -> FixtureReport {
        match self.check() {
            Ok(mut lines) => {
                lines.insert(
                    0,
                    format!(
                        "PASS {} ({}, {}-basis)",
                        self.id, self.graph_spec, self.basis
                    ),
                );
                FixtureReport {
                    id: self.id,
                    passed: true,
                    lines,
                }
            }
            Err(mut lines) => {
                lines.insert(
                    0,
                    format!(
                        "FAIL {} ({}, {}-basis)",
                        self.id, self.graph_spec, self.basis
                    ),
                );
                FixtureReport {
                    id: self.id,
                    passed: false,
                    lines,
                }
            }
        }
    }

    fn check(&self) -> Result<Vec<String>, Vec<String>> {
        let one = |msg: String| vec![format!("  {msg}")];
        let graph =
            parse_graph(self.graph_spec, GraphFormat::FamilyDsl).map_err(|e| one(e.to_string()))?;
        let n = graph.vertex_count();
        let expected = parse_expansion(self.expected, n, self.basis).map_err(one)?;
        let analysis = GraphAnalysis::new(graph);

        let mut lines = Vec::new();
        let matched = match self.scope {
            Scope::Coefficients => {
                let mut ok = true;
                for (lambda, want) in expected.terms() {
                    let got = match self.basis {
                        Basis::Schur => schur_coefficient(&analysis, lambda),
                        _ => self.compute(&analysis).map(|f| f.coefficient(lambda)),
                    }
                    .map_err(|e| one(e.to_string()))?;
                    if &got != want {
                        ok = false;
                        lines.push(format!(
                            "  coefficient at {lambda}: expected {want}, computed {got}"
                        ));
                    }
                }
                ok
            }
            Scope::Full | Scope::NegativeTerms => {
                let computed = self.compute(&analysis).map_err(|e| one(e.to_string()))?;
                let compared = match self.scope {
                    Scope::NegativeTerms => negative_part(&computed),
                    _ => computed.clone(),
                };
                if compared != expected {
                    lines.push(format!("  expected: {}", expected.to_latex()));
                    lines.push(format!("  computed: {}", compared.to_latex()));
                }
                if self.provenance == Provenance::PublishedWithTypoNote {
                    lines.extend(audit(self.display, &computed));
                }
                compared == expected
            }
        };
        if let Some(note) = self.note {
            lines.push(format!("  note: {note}"));
        }
        if matched {
            Ok(lines)
        } else {
            Err(lines)
        }
    }

    fn compute(&self, analysis: &GraphAnalysis) -> csf_core::Result<SymFuncExpansion> {
        match self.basis {
            Basis::Elementary => csf_elementary(analysis),
            _ => csf_schur(analysis),
        }
    }

    pub fn to_json(&self) -> FixtureJson {
        let n = parse_graph(self.graph_spec, GraphFormat::FamilyDsl)
            .map(|g| g.vertex_count())
            .unwrap_or(0);
        let expected_terms = parse_expansion(self.expected, n, self.basis)
            .map(|f| f.to_json(self.graph_spec).terms)
            .unwrap_or_default();
        FixtureJson {
            id: self.id,
            graph_spec: self.graph_spec,
            basis: self.basis.symbol().to_string(),
            scope: self.scope,
            display: self.display,
            expected_terms,
            provenance: self.provenance,
            note: self.note,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureJson {
    pub id: &'static str,
    pub graph_spec: &'static str,
    pub basis: String,
    pub scope: Scope,
    pub display: &'static str,
    pub expected_terms: Vec<TermJson>,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

fn negative_part(f: &SymFuncExpansion) -> SymFuncExpansion {
    let terms = f
        .terms()
        .filter(|(_, c)| c.sign() == num_bigint::Sign::Minus)
        .map(|(l, c)| (l.clone(), c.clone()));
    SymFuncExpansion::from_terms(f.degree(), f.basis(), terms)
        .expect("terms come from an expansion of this degree")
}

/// Lists every printed term that disagrees with the computed expansion.
fn audit(display: &str, computed: &SymFuncExpansion) -> Vec<String> {
    let mut lines = Vec::new();
    for term in parse_display(display) {
        let problem = match (&term.basis, &term.partition) {
            (None, _) => Some("has no basis symbol".to_string()),
            (_, None) => Some("has an unreadable subscript".to_string()),
            (Some(b), _) if *b != computed.basis() => {
                Some(format!("is not in the {} basis", computed.basis()))
            }
            (_, Some(lambda)) if lambda.weight() != computed.degree() => Some(format!(
                "has degree {} instead of {}",
                lambda.weight(),
                computed.degree()
            )),
            (_, Some(lambda)) if computed.coefficient(lambda) != term.coeff => Some(format!(
                "disagrees with the computed coefficient {}",
                computed.coefficient(lambda)
            )),
            _ => None,
        };
        if let Some(problem) = problem {
            lines.push(format!("  audit: printed term `{}` {problem}", term.text));
        }
    }
    lines
}

/// Replays the given fixtures on worker threads and returns the reports in
/// fixture order.
pub fn verify_all(fixtures: &[&'static CorpusFixture]) -> Vec<FixtureReport> {
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(fixtures.len().max(1));
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut reports: Vec<Option<FixtureReport>> = vec![None; fixtures.len()];
    let slots = std::sync::Mutex::new(&mut reports);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                let Some(fixture) = fixtures.get(i) else {
                    break;
                };
                let report = fixture.verify();
                slots.lock().unwrap_or_else(|e| e.into_inner())[i] = Some(report);
            });
        }
    });
    reports
        .into_iter()
        .map(|r| r.expect("every fixture was visited"))
        .collect()
}
