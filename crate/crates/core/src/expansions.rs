//! Chromatic symmetric functions in the monomial, power-sum, Schur and
//! elementary bases.
//!
//! Schur coefficients are computed one shape at a time as a signed sum over
//! special rim hook tabloids of that shape:
//!
//! ```text
//! [s_λ] X_G = Σ_{T ∈ 𝒯(λ)} (-1)^{|W(T)|} · π(T)^! · N_G(π(T))
//! ```
//!
//! [`m_to_s`] reaches the same numbers through the inverse Kostka matrix and
//! exists as an independent check. The elementary expansion is obtained from
//! the Schur expansion by a unitriangular solve against Kostka numbers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::census::GraphAnalysis;
use crate::error::{check_weight, Error, Result};
use crate::graph::Graph;
use crate::partition::{factorial, partitions_of, Partition};
use crate::rimhooks::{inverse_kostka_column, kostka, special_tabloids, SpecialTabloid};

/// Default cap on the number of edges for the power-sum expansion.
pub const DEFAULT_EDGE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Power,
    Elementary,
    Schur,
}

impl Basis {
    pub fn symbol(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Power => 'p',
            Basis::Elementary => 'e',
            Basis::Schur => 's',
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(Basis::Monomial),
            "p" => Ok(Basis::Power),
            "e" => Ok(Basis::Elementary),
            "s" => Ok(Basis::Schur),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown basis `{other}`; expected one of m, p, e, s"),
            }),
        }
    }
}

/// A homogeneous symmetric function written in one basis. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncExpansion {
    degree: usize,
    basis: Basis,
    coefficients: BTreeMap<Partition, BigInt>,
}

impl SymFuncExpansion {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFuncExpansion {
            degree,
            basis,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut f = SymFuncExpansion::zero(degree, basis);
        for (lambda, c) in terms {
            f.add_term(lambda, c)?;
        }
        Ok(f)
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: BigInt) -> Result<()> {
        check_weight(self.degree, lambda.weight())?;
        let entry = self.coefficients.entry(lambda).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.retain(|_, c| !c.is_zero());
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coefficients.get(lambda).cloned().unwrap_or_default()
    }

    /// Nonzero terms in reverse-lex order of partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coefficients.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// The reverse-lex first negative term, if any.
    pub fn first_negative(&self) -> Option<(&Partition, &BigInt)> {
        self.terms().find(|(_, c)| c.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    fn require(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis.symbol(),
                found: self.basis.symbol(),
            })
        }
    }

    /// Display form in subscript style, e.g. `s_{31} - s_{2^2} + 5s_{21^2}`.
    pub fn to_text(&self) -> String {
        self.render(" ")
    }

    /// LaTeX form, e.g. `s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}`.
    pub fn to_latex(&self) -> String {
        self.render("")
    }

    fn render(&self, gap: &str) -> String {
        if self.coefficients.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (lambda, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(gap);
                out.push(if c.is_negative() { '-' } else { '+' });
                out.push_str(gap);
            }
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            out.push(self.basis.symbol());
            out.push_str("_{");
            out.push_str(&lambda.subscript());
            out.push('}');
        }
        out
    }

    pub fn to_json(&self, graph: &str) -> ExpansionJson {
        ExpansionJson {
            graph: graph.to_string(),
            degree: self.degree,
            basis: self.basis.symbol().to_string(),
            terms: self
                .terms()
                .map(|(lambda, c)| TermJson {
                    partition: lambda.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &ExpansionJson) -> Result<Self> {
        let basis: Basis = json.basis.parse()?;
        let mut f = SymFuncExpansion::zero(json.degree, basis);
        for t in &json.terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse {
                offset: 0,
                message: format!("coefficient `{}` is not an integer", t.coeff),
            })?;
            f.add_term(t.partition.clone(), c)?;
        }
        Ok(f)
    }
}

impl fmt::Display for SymFuncExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Wire form:
/// `{"graph": "claw", "degree": 4, "basis": "s", "terms": [{"partition": "3,1", "coeff": "1"}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub graph: String,
    pub degree: usize,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub coeff: String,
}

/// `X_G = Σ_λ λ^! N_G(λ) m_λ`.
pub fn csf_monomial(analysis: &GraphAnalysis) -> Result<SymFuncExpansion> {
    let census = analysis.census()?;
    let terms = census.iter().map(|(lambda, count)| {
        let c = lambda.multiplicity_factorial() * count;
        (lambda.clone(), BigInt::from(c))
    });
    SymFuncExpansion::from_terms(analysis.vertex_count(), Basis::Monomial, terms)
}

/// `X_G = Σ_{S ⊆ E} (-1)^{|S|} p_{λ(S)}`, where λ(S) holds the component
/// orders of `(V, S)`.
pub fn csf_power(g: &Graph, edge_cap: usize) -> Result<SymFuncExpansion> {
    let edges = g.edges();
    if edges.len() > edge_cap {
        return Err(Error::Capacity {
            edges: edges.len(),
            cap: edge_cap,
        });
    }
    let mut tallies: HashMap<Vec<usize>, i64> = HashMap::new();
    let parent: Vec<usize> = (0..g.vertex_count()).collect();
    sum_edge_subsets(&edges, 0, parent, 1, &mut tallies);
    let terms = tallies
        .into_iter()
        .map(|(sizes, c)| (Partition::from_unsorted(sizes), BigInt::from(c)));
    SymFuncExpansion::from_terms(g.vertex_count(), Basis::Power, terms)
}

fn root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn sum_edge_subsets(
    edges: &[(usize, usize)],
    next: usize,
    mut parent: Vec<usize>,
    sign: i64,
    tallies: &mut HashMap<Vec<usize>, i64>,
) {
    if next == edges.len() {
        let n = parent.len();
        let mut sizes = vec![0usize; n];
        for v in 0..n {
            let r = root(&mut parent, v);
            sizes[r] += 1;
        }
        sizes.retain(|&s| s > 0);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *tallies.entry(sizes).or_insert(0) += sign;
        return;
    }
    sum_edge_subsets(edges, next + 1, parent.clone(), sign, tallies);
    let (u, v) = edges[next];
    let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
    if ru != rv {
        parent[ru.max(rv)] = ru.min(rv);
    }
    sum_edge_subsets(edges, next + 1, parent, -sign, tallies);
}

/// One summand of a Schur coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidTerm {
    pub tabloid: SpecialTabloid,
    /// `π(T)^!`
    pub multiplicity_factorial: BigUint,
    /// `N_G(π(T))`
    pub stable_count: BigUint,
    /// `(-1)^{|W(T)|} π(T)^! N_G(π(T))`
    pub value: BigInt,
}

/// The tabloids of shape λ that can contribute to `[s_λ] X_G`, with their
/// signed terms. Tabloids with a hook longer than the independence number
/// are skipped, since no stable set is that large.
pub fn schur_coefficient_terms(
    analysis: &GraphAnalysis,
    lambda: &Partition,
) -> Result<Vec<TabloidTerm>> {
    check_weight(analysis.vertex_count(), lambda.weight())?;
    let alpha = analysis.independence_number()?;
    special_tabloids(lambda)
        .into_iter()
        .filter(|t| t.content_type().largest() <= alpha)
        .map(|t| tabloid_term(analysis, t))
        .collect()
}

fn tabloid_term(analysis: &GraphAnalysis, tabloid: SpecialTabloid) -> Result<TabloidTerm> {
    let ty = tabloid.content_type();
    let stable_count = analysis.count_of_type(&ty)?;
    let multiplicity_factorial = ty.multiplicity_factorial();
    let magnitude = BigInt::from(&multiplicity_factorial * &stable_count);
    let value = if tabloid.sign() < 0 {
        -magnitude
    } else {
        magnitude
    };
    Ok(TabloidTerm {
        tabloid,
        multiplicity_factorial,
        stable_count,
        value,
    })
}

/// `[s_λ] X_G` as a signed sum over special rim hook tabloids of shape λ.
pub fn schur_coefficient(analysis: &GraphAnalysis, lambda: &Partition) -> Result<BigInt> {
    Ok(schur_coefficient_terms(analysis, lambda)?
        .into_iter()
        .map(|t| t.value)
        .sum())
}

/// The same sum taken over every tabloid of shape λ, without the
/// independence-number filter.
pub fn schur_coefficient_unfiltered(
    analysis: &GraphAnalysis,
    lambda: &Partition,
) -> Result<BigInt> {
    check_weight(analysis.vertex_count(), lambda.weight())?;
    special_tabloids(lambda)
        .into_iter()
        .map(|t| tabloid_term(analysis, t).map(|term| term.value))
        .sum()
}

/// The full Schur expansion, one coefficient per shape.
pub fn csf_schur(analysis: &GraphAnalysis) -> Result<SymFuncExpansion> {
    let n = analysis.vertex_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    analysis.census()?;
    let mut f = SymFuncExpansion::zero(n, Basis::Schur);
    for lambda in partitions_of(n) {
        let c = schur_coefficient(analysis, &lambda)?;
        f.add_term(lambda, c)?;
    }
    Ok(f)
}

/// Monomial to Schur: `[s_λ] f = Σ_μ [m_μ] f · K⁻¹_{μ,λ}`.
pub fn m_to_s(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    f.require(Basis::Monomial)?;
    let mut out = SymFuncExpansion::zero(f.degree, Basis::Schur);
    if f.is_empty() {
        return Ok(out);
    }
    for lambda in partitions_of(f.degree) {
        let column = inverse_kostka_column(&lambda);
        let c: BigInt = f
            .coefficients
            .iter()
            .filter_map(|(mu, a)| column.get(mu).map(|k| a * k))
            .sum();
        out.add_term(lambda, c)?;
    }
    Ok(out)
}

/// Kostka numbers `K_{ν,μ}` for all ν, μ ⊢ n, as a dense table indexed by the
/// reverse-lex position of each partition.
struct KostkaTable {
    shapes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<BigUint>>,
}

impl KostkaTable {
    fn new(n: usize) -> Result<Self> {
        let shapes: Vec<Partition> = partitions_of(n).collect();
        let index = shapes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut values = Vec::with_capacity(shapes.len());
        for nu in &shapes {
            let row = shapes
                .iter()
                .map(|mu| {
                    if nu.dominates_unchecked(mu) {
                        kostka(nu, mu)
                    } else {
                        Ok(BigUint::zero())
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            values.push(row);
        }
        Ok(KostkaTable {
            shapes,
            index,
            values,
        })
    }

    fn get(&self, nu: &Partition, mu: &Partition) -> &BigUint {
        &self.values[self.index[nu]][self.index[mu]]
    }
}

/// Elementary to Schur: `e_μ = Σ_λ K_{λ',μ} s_λ`.
pub fn e_to_s(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    f.require(Basis::Elementary)?;
    let table = KostkaTable::new(f.degree)?;
    let mut out = SymFuncExpansion::zero(f.degree, Basis::Schur);
    for lambda in &table.shapes {
        let conj = lambda.conjugate();
        let c: BigInt = f
            .coefficients
            .iter()
            .map(|(mu, a)| a * BigInt::from(table.get(&conj, mu).clone()))
            .sum();
        out.add_term(lambda.clone(), c)?;
    }
    Ok(out)
}

/// Schur to elementary, solving `Σ_μ c_μ K_{ν,μ} = [s_{ν'}] f` for every ν.
///
/// `K_{ν,μ}` vanishes unless `μ ⊴ ν` and `K_{ν,ν} = 1`, so visiting ν in
/// increasing lex order (a linear extension of dominance) determines each
/// `c_ν` from coefficients already solved.
pub fn s_to_e(f: &SymFuncExpansion) -> Result<SymFuncExpansion> {
    f.require(Basis::Schur)?;
    let table = KostkaTable::new(f.degree)?;
    let mut solved: Vec<(Partition, BigInt)> = Vec::new();
    for nu in table.shapes.iter().rev() {
        let diagonal = table.get(nu, nu);
        if !diagonal.is_one() {
            return Err(Error::Internal(format!(
                "Kostka diagonal K[{nu},{nu}] = {diagonal}, expected 1"
            )));
        }
        let mut c = f.coefficient(&nu.conjugate());
        for (mu, c_mu) in &solved {
            let k = table.get(nu, mu);
            if !k.is_zero() {
                c -= c_mu * BigInt::from(k.clone());
            }
        }
        solved.push((nu.clone(), c));
    }
    let out = SymFuncExpansion::from_terms(f.degree, Basis::Elementary, solved)?;
    let check = e_to_s(&out)?;
    if &check != f {
        return Err(Error::Internal(
            "elementary solve does not reproduce the Schur expansion".into(),
        ));
    }
    Ok(out)
}

/// The elementary expansion of `X_G`.
pub fn csf_elementary(analysis: &GraphAnalysis) -> Result<SymFuncExpansion> {
    s_to_e(&csf_schur(analysis)?)
}

/// The expansion of `X_G` in the requested basis.
pub fn csf_in_basis(
    analysis: &GraphAnalysis,
    basis: Basis,
    edge_cap: usize,
) -> Result<SymFuncExpansion> {
    match basis {
        Basis::Monomial => csf_monomial(analysis),
        Basis::Power => csf_power(analysis.graph(), edge_cap),
        Basis::Schur => csf_schur(analysis),
        Basis::Elementary => csf_elementary(analysis),
    }
}

/// Principal specialisation: set `x_1 = ... = x_k = 1` and every other variable to 0.
pub fn evaluate_ones(f: &SymFuncExpansion, k: usize) -> BigInt {
    f.coefficients
        .iter()
        .map(|(lambda, c)| c * basis_at_ones(f.basis, lambda, k))
        .sum()
}

fn basis_at_ones(basis: Basis, lambda: &Partition, k: usize) -> BigInt {
    let kb = BigInt::from(k);
    match basis {
        Basis::Power => num_traits::pow(kb, lambda.len()),
        Basis::Elementary => lambda
            .parts()
            .iter()
            .map(|&p| binomial(kb.clone(), BigInt::from(p)))
            .product(),
        Basis::Monomial => {
            // distinct placements of the parts into k variables
            if lambda.len() > k {
                return BigInt::zero();
            }
            let placements = factorial(k) / factorial(k - lambda.len());
            BigInt::from(placements / lambda.multiplicity_factorial())
        }
        Basis::Schur => {
            // hook-content formula
            let mut numerator = BigInt::one();
            let mut denominator = BigInt::one();
            let conj = lambda.conjugate();
            for (i, &row) in lambda.parts().iter().enumerate() {
                for j in 0..row {
                    let content = k as i64 + j as i64 - i as i64;
                    if content <= 0 {
                        return BigInt::zero();
                    }
                    numerator *= content;
                    let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
                    denominator *= hook;
                }
            }
            numerator / denominator
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, GraphFormat};

    fn analysis(s: &str) -> GraphAnalysis {
        GraphAnalysis::new(parse_graph(s, GraphFormat::FamilyDsl).unwrap())
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn expansion(degree: usize, basis: Basis, terms: &[(&str, i64)]) -> SymFuncExpansion {
        SymFuncExpansion::from_terms(
            degree,
            basis,
            terms.iter().map(|&(l, c)| (p(l), BigInt::from(c))),
        )
        .unwrap()
    }

    /// Collects monomials of proper colourings with exactly `k` colours
    /// available: the coefficient of `x^α` for each sorted exponent vector.
    fn brute_monomials(g: &Graph) -> SymFuncExpansion {
        let n = g.vertex_count();
        let edges = g.edges();
        let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        let mut colouring = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colouring[u] != colouring[v]) {
                let mut exps = vec![0usize; n];
                for &c in &colouring {
                    exps[c] += 1;
                }
                // only count the representative with weakly decreasing exponents
                if exps.windows(2).all(|w| w[0] >= w[1]) {
                    *counts.entry(exps).or_insert(0) += 1;
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    let terms = counts
                        .into_iter()
                        .map(|(e, c)| (Partition::from_unsorted(e), BigInt::from(c)));
                    return SymFuncExpansion::from_terms(n, Basis::Monomial, terms).unwrap();
                }
                colouring[i] += 1;
                if colouring[i] < n {
                    break;
                }
                colouring[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(
            csf_monomial(&analysis("complete:3")).unwrap(),
            expansion(3, Basis::Monomial, &[("1,1,1", 6)])
        );
        let p3 = expansion(3, Basis::Monomial, &[("2,1", 1), ("1,1,1", 6)]);
        assert_eq!(csf_monomial(&analysis("path:3")).unwrap(), p3);
        let p3_graph = parse_graph("path:3", GraphFormat::FamilyDsl).unwrap();
        assert_eq!(brute_monomials(&p3_graph), p3);
        let claw = expansion(
            4,
            Basis::Monomial,
            &[("3,1", 1), ("2,1,1", 6), ("1,1,1,1", 24)],
        );
        assert_eq!(csf_monomial(&analysis("claw")).unwrap(), claw);
        let claw_graph = parse_graph("claw", GraphFormat::FamilyDsl).unwrap();
        assert_eq!(brute_monomials(&claw_graph), claw);
    }

    #[test]
    fn monomial_matches_colouring_brute_force() {
        for s in [
            "cycle:5",
            "fan:2,3",
            "squid:3,1,1",
            "complete_bipartite:2,3",
            "wheel:6",
            "spider:1,2,2",
        ] {
            let a = analysis(s);
            assert_eq!(csf_monomial(&a).unwrap(), brute_monomials(a.graph()), "{s}");
        }
    }

    #[test]
    fn power_examples() {
        let g = |s: &str| parse_graph(s, GraphFormat::FamilyDsl).unwrap();
        assert_eq!(
            csf_power(&g("complete:1"), DEFAULT_EDGE_CAP).unwrap(),
            expansion(1, Basis::Power, &[("1", 1)])
        );
        assert_eq!(
            csf_power(&g("complete:2"), DEFAULT_EDGE_CAP).unwrap(),
            expansion(2, Basis::Power, &[("1,1", 1), ("2", -1)])
        );
        // P_3: the empty set, two single edges, both edges.
        assert_eq!(
            csf_power(&g("path:3"), DEFAULT_EDGE_CAP).unwrap(),
            expansion(3, Basis::Power, &[("1,1,1", 1), ("2,1", -2), ("3", 1)])
        );
        assert_eq!(
            csf_power(&g("complete:8"), DEFAULT_EDGE_CAP),
            Err(Error::Capacity { edges: 28, cap: 24 })
        );
    }

    #[test]
    fn schur_coefficient_examples() {
        assert_eq!(
            schur_coefficient(&analysis("claw"), &p("2,2")).unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            schur_coefficient(&analysis("squid:5,1,1,1"), &p("3,3,2")).unwrap(),
            BigInt::from(-8)
        );
        assert_eq!(
            schur_coefficient(&analysis("complete:3"), &p("1,1,1")).unwrap(),
            BigInt::from(6)
        );
        assert!(schur_coefficient(&analysis("claw"), &p("2,1")).is_err());
    }

    #[test]
    fn claw_schur_expansion() {
        let s = csf_schur(&analysis("claw")).unwrap();
        assert_eq!(
            s,
            expansion(
                4,
                Basis::Schur,
                &[("3,1", 1), ("2,2", -1), ("2,1,1", 5), ("1,1,1,1", 8)]
            )
        );
        assert_eq!(s.to_latex(), "s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}");
        assert_eq!(s.to_text(), "s_{31} - s_{2^2} + 5s_{21^2} + 8s_{1^4}");
        assert_eq!(s.first_negative(), Some((&p("2,2"), &BigInt::from(-1))));
    }

    #[test]
    fn monomial_to_schur() {
        let m2 = expansion(2, Basis::Monomial, &[("2", 1)]);
        assert_eq!(
            m_to_s(&m2).unwrap(),
            expansion(2, Basis::Schur, &[("2", 1), ("1,1", -1)])
        );
        for n in 1..=6 {
            let ones = Partition::ones(n);
            let f =
                SymFuncExpansion::from_terms(n, Basis::Monomial, [(ones.clone(), BigInt::one())])
                    .unwrap();
            assert_eq!(
                m_to_s(&f).unwrap(),
                SymFuncExpansion::from_terms(n, Basis::Schur, [(ones, BigInt::one())]).unwrap()
            );
        }
        assert!(matches!(
            m_to_s(&m_to_s(&m2).unwrap()),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(
            csf_elementary(&analysis("complete_bipartite:2,3")).unwrap(),
            expansion(
                5,
                Basis::Elementary,
                &[("2,2,1", 1), ("4,1", 9), ("3,2", 1), ("5", 35)]
            )
        );
        assert_eq!(
            csf_elementary(&analysis("wheel:6")).unwrap(),
            expansion(
                6,
                Basis::Elementary,
                &[("6", 180), ("5,1", 40), ("4,2", 20)]
            )
        );
        for n in 1..=6 {
            let kn = csf_elementary(&analysis(&format!("complete:{n}"))).unwrap();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(
                kn,
                SymFuncExpansion::from_terms(
                    n,
                    Basis::Elementary,
                    [(Partition::new(vec![n]).unwrap(), fact)]
                )
                .unwrap()
            );
        }
    }

    #[test]
    fn specialisations() {
        assert_eq!(
            evaluate_ones(&expansion(3, Basis::Power, &[("2,1", 1)]), 3),
            BigInt::from(9)
        );
        assert_eq!(
            evaluate_ones(&expansion(2, Basis::Monomial, &[("1,1", 1)]), 2),
            BigInt::from(1)
        );
        // s_{2,1}(1,1,1) = 8, e_{2,1}(1,1,1) = 9, m_{2,1}(1,1,1) = 6
        assert_eq!(
            evaluate_ones(&expansion(3, Basis::Schur, &[("2,1", 1)]), 3),
            BigInt::from(8)
        );
        assert_eq!(
            evaluate_ones(&expansion(3, Basis::Elementary, &[("2,1", 1)]), 3),
            BigInt::from(9)
        );
        assert_eq!(
            evaluate_ones(&expansion(3, Basis::Monomial, &[("2,1", 1)]), 3),
            BigInt::from(6)
        );
        assert_eq!(
            evaluate_ones(&expansion(3, Basis::Schur, &[("1,1,1", 1)]), 2),
            BigInt::zero()
        );
    }

    #[test]
    fn all_bases_specialise_to_the_chromatic_polynomial() {
        for s in [
            "claw",
            "cycle:5",
            "fan:2,4",
            "complete_tripartite:1,2,2",
            "squid:5,1,1,1",
            "windmill:3,3",
        ] {
            let a = analysis(s);
            let bases = [
                csf_monomial(&a).unwrap(),
                csf_power(a.graph(), DEFAULT_EDGE_CAP).unwrap(),
                csf_schur(&a).unwrap(),
                csf_elementary(&a).unwrap(),
            ];
            for k in 0..=5 {
                let chi = BigInt::from(a.graph().chromatic_polynomial_at(k));
                for f in &bases {
                    assert_eq!(evaluate_ones(f, k), chi, "{s} basis {} k={k}", f.basis());
                }
            }
        }
    }

    #[test]
    fn filtered_and_unfiltered_sums_agree() {
        for s in [
            "claw",
            "cycle:6",
            "spider:1,1,2",
            "complete_bipartite:3,3",
            "fan:3,4",
            "squid:5,1,1",
        ] {
            let a = analysis(s);
            for lambda in partitions_of(a.vertex_count()) {
                assert_eq!(
                    schur_coefficient(&a, &lambda).unwrap(),
                    schur_coefficient_unfiltered(&a, &lambda).unwrap(),
                    "{s} {lambda}"
                );
            }
        }
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let s = csf_schur(&analysis("claw")).unwrap();
        let text = serde_json::to_string(&s.to_json("claw")).unwrap();
        assert_eq!(
            text,
            r#"{"graph":"claw","degree":4,"basis":"s","terms":[{"partition":"3,1","coeff":"1"},{"partition":"2,2","coeff":"-1"},{"partition":"2,1,1","coeff":"5"},{"partition":"1,1,1,1","coeff":"8"}]}"#
        );
        let parsed: ExpansionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(SymFuncExpansion::from_json(&parsed).unwrap(), s);
        assert_eq!(serde_json::to_string(&parsed).unwrap(), text);
    }
}
