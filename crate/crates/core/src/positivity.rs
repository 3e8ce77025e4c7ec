//! Schur and e-positivity verdicts with checkable certificates.
//!
//! A negative verdict always carries a certificate that [`Certificate::verify`]
//! re-checks from scratch against the graph. A positive verdict is only ever
//! certified by the full expansion.
//!
//! All searches run in reverse-lex order, so certificates are deterministic.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::census::{has_connected_partition_of_type, GraphAnalysis};
use crate::error::{Error, Result};
use crate::expansions::{csf_elementary, csf_schur, schur_coefficient};
use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    SchurPositive,
    EPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Positive,
    NotPositive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Cheap structural tests first, then coefficients one shape at a time.
    #[default]
    Fast,
    /// The whole Schur expansion.
    Exhaustive,
}

impl std::str::FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Strategy::Fast),
            "exhaustive" => Ok(Strategy::Exhaustive),
            other => Err(Error::Parse {
                offset: 0,
                message: format!("unknown strategy `{other}`; expected fast or exhaustive"),
            }),
        }
    }
}

/// Evidence for a verdict. Serialized as a tagged union, e.g.
/// `{"kind":"dominance_witness","lambda":"4,4,1","mu":"4,3,2"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Every coefficient in the relevant basis is nonnegative.
    FullExpansion,
    /// A negative coefficient in the basis matching the verdict's property.
    NegativeCoefficient {
        lambda: Partition,
        #[serde(with = "decimal")]
        value: BigInt,
    },
    /// `μ ⊴ λ` with `N_G(λ) > 0` and `N_G(μ) = 0`.
    DominanceWitness { lambda: Partition, mu: Partition },
    /// A type with no connected partition, for a connected graph.
    ConnectedPartitionGap { lambda: Partition },
    /// Part sizes of the bipartition of a connected bipartite graph.
    UnbalancedBipartition { u: usize, v: usize },
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse()
            .map_err(|_| D::Error::custom(format!("`{text}` is not an integer")))
    }
}

impl Certificate {
    /// Re-derives the certificate's claim from the graph, sharing no state
    /// with the search that produced it beyond the graph itself.
    pub fn verify(&self, g: &Graph, property: Property) -> Result<bool> {
        let fresh = GraphAnalysis::new(g.clone());
        match self {
            Certificate::FullExpansion => {
                let f = match property {
                    Property::SchurPositive => csf_schur(&fresh)?,
                    Property::EPositive => csf_elementary(&fresh)?,
                };
                Ok(f.is_nonnegative())
            }
            Certificate::NegativeCoefficient { lambda, value } => {
                let actual = match property {
                    Property::SchurPositive => schur_coefficient(&fresh, lambda)?,
                    Property::EPositive => csf_elementary(&fresh)?.coefficient(lambda),
                };
                Ok(value.is_negative() && &actual == value)
            }
            // e-positive implies Schur positive, so these refute both.
            Certificate::DominanceWitness { lambda, mu } => Ok(lambda != mu
                && lambda.dominates(mu)?
                && fresh.has_stable_partition_of_type(lambda)?
                && !fresh.has_stable_partition_of_type(mu)?),
            Certificate::UnbalancedBipartition { u, v } => {
                if !g.is_connected() {
                    return Ok(false);
                }
                Ok(match g.bipartition() {
                    Some((a, b)) => (a.len(), b.len()) == (*u, *v) && u.abs_diff(*v) >= 2,
                    None => false,
                })
            }
            Certificate::ConnectedPartitionGap { lambda } => Ok(property == Property::EPositive
                && g.is_connected()
                && !has_connected_partition_of_type(g, lambda)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityVerdict {
    pub property: Property,
    pub answer: Answer,
    pub certificate: Certificate,
}

impl PositivityVerdict {
    fn refuted(property: Property, certificate: Certificate) -> Self {
        PositivityVerdict {
            property,
            answer: Answer::NotPositive,
            certificate,
        }
    }

    fn confirmed(property: Property) -> Self {
        PositivityVerdict {
            property,
            answer: Answer::Positive,
            certificate: Certificate::FullExpansion,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.answer == Answer::Positive
    }

    pub fn verify(&self, g: &Graph) -> Result<bool> {
        let consistent = match self.answer {
            Answer::Positive => self.certificate == Certificate::FullExpansion,
            Answer::NotPositive => self.certificate != Certificate::FullExpansion,
        };
        Ok(consistent && self.certificate.verify(g, self.property)?)
    }
}

/// A pair `μ ◁ λ` with a stable partition of type λ but none of type μ.
///
/// λ runs over stable types in reverse-lex order. For each λ the immediate
/// dominance predecessors are tried first, then the rest of the down-set,
/// both in reverse-lex order.
pub fn dominance_witness(analysis: &GraphAnalysis) -> Result<Option<(Partition, Partition)>> {
    let census = analysis.census()?;
    for lambda in census.types() {
        let covers = lambda.dominance_covers();
        if let Some(mu) = covers.iter().find(|mu| !census.contains(mu)) {
            return Ok(Some((lambda.clone(), mu.clone())));
        }
        let below = partitions_of(lambda.weight())
            .skip_while(|mu| mu != lambda)
            .skip(1)
            .filter(|mu| lambda.dominates_unchecked(mu));
        for mu in below {
            if !census.contains(&mu) {
                return Ok(Some((lambda.clone(), mu)));
            }
        }
    }
    Ok(None)
}

/// The reverse-lex first type with no connected partition.
pub fn wolfgang_witness(g: &Graph) -> Result<Option<Partition>> {
    require_connected(g)?;
    for lambda in partitions_of(g.vertex_count()) {
        if !has_connected_partition_of_type(g, &lambda)? {
            return Ok(Some(lambda));
        }
    }
    Ok(None)
}

/// Part sizes `(|U|, |V|)` when `G` is bipartite and they differ by at least 2.
/// `U` is the side containing vertex 0.
pub fn balanced_bipartition_test(g: &Graph) -> Result<Option<(usize, usize)>> {
    require_connected(g)?;
    Ok(g.bipartition()
        .map(|(u, v)| (u.len(), v.len()))
        .filter(|(u, v)| u.abs_diff(*v) >= 2))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Shapes in the order the fast scan visits them: fewest rows first, then
/// first part closest to α, then reverse-lex.
pub fn scan_order(n: usize, alpha: usize) -> Vec<Partition> {
    let mut shapes: Vec<Partition> = partitions_of(n).collect();
    shapes.sort_by_key(|p| (p.len(), p.largest().abs_diff(alpha)));
    shapes
}

pub fn schur_positivity_verdict(
    analysis: &GraphAnalysis,
    strategy: Strategy,
) -> Result<PositivityVerdict> {
    let property = Property::SchurPositive;
    let g = analysis.graph();
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    match strategy {
        Strategy::Exhaustive => {
            let f = csf_schur(analysis)?;
            Ok(match f.first_negative() {
                Some((lambda, value)) => PositivityVerdict::refuted(
                    property,
                    Certificate::NegativeCoefficient {
                        lambda: lambda.clone(),
                        value: value.clone(),
                    },
                ),
                None => PositivityVerdict::confirmed(property),
            })
        }
        Strategy::Fast => {
            if g.is_connected() {
                if let Some((u, v)) = balanced_bipartition_test(g)? {
                    return Ok(PositivityVerdict::refuted(
                        property,
                        Certificate::UnbalancedBipartition { u, v },
                    ));
                }
            }
            if let Some((lambda, mu)) = dominance_witness(analysis)? {
                return Ok(PositivityVerdict::refuted(
                    property,
                    Certificate::DominanceWitness { lambda, mu },
                ));
            }
            let alpha = analysis.independence_number()?;
            for lambda in scan_order(g.vertex_count(), alpha) {
                let value = schur_coefficient(analysis, &lambda)?;
                if value.is_negative() {
                    return Ok(PositivityVerdict::refuted(
                        property,
                        Certificate::NegativeCoefficient { lambda, value },
                    ));
                }
            }
            Ok(PositivityVerdict::confirmed(property))
        }
    }
}

pub fn e_positivity_verdict(analysis: &GraphAnalysis) -> Result<PositivityVerdict> {
    let property = Property::EPositive;
    let g = analysis.graph();
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.is_connected() {
        if let Some(lambda) = wolfgang_witness(g)? {
            return Ok(PositivityVerdict::refuted(
                property,
                Certificate::ConnectedPartitionGap { lambda },
            ));
        }
    }
    let f = csf_elementary(analysis)?;
    Ok(match f.first_negative() {
        Some((lambda, value)) => PositivityVerdict::refuted(
            property,
            Certificate::NegativeCoefficient {
                lambda: lambda.clone(),
                value: value.clone(),
            },
        ),
        None => PositivityVerdict::confirmed(property),
    })
}
