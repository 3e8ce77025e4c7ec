//! Special rim hook tabloids and the Kostka / inverse Kostka numbers.
//!
//! A special rim hook tabloid of shape λ tiles the Young diagram of λ with
//! rim hooks that each meet the first column. Such a tiling is peeled one
//! hook at a time: the next hook always contains the lowest remaining cell of
//! the first column (English coordinates, longest row on top) and runs along
//! the rim until it ends at the right end of some row `r`. If the current
//! shape has `ℓ` rows, that hook has length `λ_r + ℓ - r`, spans `ℓ - r + 1`
//! rows, and leaves `(λ_1, ..., λ_{r-1}, λ_{r+1} - 1, ..., λ_ℓ - 1)`.
//! Hook length is strictly decreasing in `r`, so a list of hook lengths
//! determines at most one tabloid.
//!
//! The content `π(T)` lists the hook lengths in peeling order, which is the
//! order of their first-column cells from the top of the diagram in French
//! (bottom-up) notation. Read in the opposite direction, it is the content of
//! the corresponding rim hook tableau.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_weight, Result};
use crate::partition::{Composition, Partition};

/// One element of `𝒯(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpecialTabloid {
    shape: Partition,
    content: Composition,
    row_spans: Composition,
    even_spans: usize,
}

impl SpecialTabloid {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Hook lengths `π(T)` in peeling order.
    pub fn content(&self) -> &Composition {
        &self.content
    }

    /// Hook lengths read the other way round, i.e. the content of the rim
    /// hook tableau whose labels record the peeling order.
    pub fn tableau_content(&self) -> Composition {
        self.content.reversed()
    }

    /// Rows spanned by each hook, aligned with [`content`](Self::content).
    pub fn row_spans(&self) -> &[usize] {
        self.row_spans.parts()
    }

    /// `|W(T)|`: the number of hooks spanning an even number of rows.
    pub fn even_span_count(&self) -> usize {
        self.even_spans
    }

    /// 1-based positions (in content order) of the hooks spanning an even
    /// number of rows.
    pub fn even_span_positions(&self) -> Vec<usize> {
        self.row_spans()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s % 2 == 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// `(-1)^{|W(T)|}`.
    pub fn sign(&self) -> i32 {
        if self.even_spans % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The content sorted into a partition.
    pub fn content_type(&self) -> Partition {
        self.content.to_partition()
    }

    /// Replays the peeling against the shape; true when every hook is legal
    /// and the spans and sign data agree.
    pub fn is_consistent(&self) -> bool {
        match tabloid_for_content(&self.shape, &self.content) {
            Ok(Some(t)) => &t == self,
            _ => false,
        }
    }
}

/// Removes the special rim hook ending in row `r` (0-based). Returns the hook
/// length, the number of rows it spans, and the remaining shape.
fn peel(rows: &[usize], r: usize) -> (usize, usize, Vec<usize>) {
    let len = rows.len();
    let length = rows[r] + (len - 1 - r);
    let span = len - r;
    let mut rest: Vec<usize> = rows[..r].to_vec();
    rest.extend(rows[r + 1..].iter().map(|&x| x - 1).filter(|&x| x > 0));
    (length, span, rest)
}

/// All special rim hook tabloids of shape λ, sorted lexicographically by content.
pub fn special_tabloids(lambda: &Partition) -> Vec<SpecialTabloid> {
    fn walk(
        rows: &[usize],
        content: &mut Vec<usize>,
        spans: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if rows.is_empty() {
            out.push((content.clone(), spans.clone()));
            return;
        }
        for r in 0..rows.len() {
            let (length, span, rest) = peel(rows, r);
            content.push(length);
            spans.push(span);
            walk(&rest, content, spans, out);
            content.pop();
            spans.pop();
        }
    }
    if lambda.is_empty() {
        return Vec::new();
    }
    let mut raw = Vec::new();
    walk(lambda.parts(), &mut Vec::new(), &mut Vec::new(), &mut raw);
    let mut tabloids: Vec<SpecialTabloid> = raw
        .into_iter()
        .map(|(content, spans)| make_tabloid(lambda, content, spans))
        .collect();
    tabloids.sort_by(|a, b| a.content.cmp(&b.content));
    tabloids
}

fn make_tabloid(shape: &Partition, content: Vec<usize>, spans: Vec<usize>) -> SpecialTabloid {
    let even_spans = spans.iter().filter(|&&s| s % 2 == 0).count();
    SpecialTabloid {
        shape: shape.clone(),
        content: Composition::from_vec_unchecked(content),
        row_spans: Composition::from_vec_unchecked(spans),
        even_spans,
    }
}

/// The unique tabloid of shape λ with content τ, if there is one.
pub fn tabloid_for_content(
    lambda: &Partition,
    tau: &Composition,
) -> Result<Option<SpecialTabloid>> {
    check_weight(lambda.weight(), tau.weight())?;
    let mut rows = lambda.parts().to_vec();
    let mut spans = Vec::with_capacity(tau.len());
    for &hook in tau.parts() {
        if rows.is_empty() {
            return Ok(None);
        }
        // Hook length decreases strictly with the end row, so at most one fits.
        let Some(r) = (0..rows.len()).find(|&r| rows[r] + (rows.len() - 1 - r) == hook) else {
            return Ok(None);
        };
        let (_, span, rest) = peel(&rows, r);
        spans.push(span);
        rows = rest;
    }
    if !rows.is_empty() {
        return Ok(None);
    }
    Ok(Some(make_tabloid(lambda, tau.parts().to_vec(), spans)))
}

/// `K⁻¹_{μ,λ}`, the coefficient of `s_λ` in `m_μ`: the signed count of
/// tabloids of shape λ whose content sorts to μ.
pub fn inverse_kostka(mu: &Partition, lambda: &Partition) -> Result<BigInt> {
    check_weight(lambda.weight(), mu.weight())?;
    Ok(special_tabloids(lambda)
        .iter()
        .filter(|t| &t.content_type() == mu)
        .map(|t| BigInt::from(t.sign()))
        .sum())
}

/// Column λ of the inverse Kostka matrix: `μ ↦ K⁻¹_{μ,λ}`, zero entries dropped.
pub fn inverse_kostka_column(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut column: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for t in special_tabloids(lambda) {
        *column.entry(t.content_type()).or_default() += t.sign();
    }
    column.retain(|_, v| !v.is_zero());
    column
}

/// `K_{λ,μ}`: semistandard tableaux of shape λ and content μ.
///
/// Strips the largest letter as a horizontal strip of size `μ_last`,
/// memoised on the remaining shape.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    check_weight(lambda.weight(), mu.weight())?;
    let mut memo = HashMap::new();
    Ok(kostka_rec(lambda.parts(), mu.parts(), &mut memo))
}

fn kostka_rec(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<Vec<usize>, BigUint>,
) -> BigUint {
    let Some((&last, rest)) = content.split_last() else {
        return if shape.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    if let Some(v) = memo.get(shape) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let mut inner = vec![0; shape.len()];
    for_each_horizontal_strip(shape, 0, last, &mut inner, &mut |inner| {
        let trimmed: Vec<usize> = inner.iter().copied().take_while(|&x| x > 0).collect();
        total += kostka_rec(&trimmed, rest, memo);
    });
    memo.insert(shape.to_vec(), total.clone());
    total
}

/// Visits every `κ` with `shape / κ` a horizontal strip of `size` cells:
/// `shape_{j+1} ≤ κ_j ≤ shape_j`.
fn for_each_horizontal_strip(
    shape: &[usize],
    row: usize,
    size: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if size == 0 {
            visit(inner);
        }
        return;
    }
    let below = shape.get(row + 1).copied().unwrap_or(0);
    let capacity: usize = (row..shape.len())
        .map(|j| shape[j] - shape.get(j + 1).copied().unwrap_or(0))
        .sum();
    if capacity < size {
        return;
    }
    let max_take = (shape[row] - below).min(size);
    for take in 0..=max_take {
        inner[row] = shape[row] - take;
        for_each_horizontal_strip(shape, row + 1, size - take, inner, visit);
    }
}

/// Wire form of a tabloid, e.g.
/// `{"shape":"3,3,2,2","content":"3,4,3","row_spans":"2,2,1","even_spans":2}`.
impl SpecialTabloid {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tabloids serialise")
    }
}
