//! The redundancy lattice: antichains of sources ordered by `≼`.
//!
//! A node `α` is a set of sources none of which contains another. `α ≼ β`
//! holds when every source of `β` contains some source of `α`, i.e. `β`
//! shares at least the redundancy that `α` shares.
//!
//! Internally every node also carries its up-set in `P₁(R)` as a bitmask
//! (bit `m` set when the subset with predictor mask `m` lies above some
//! source of the node). Distinct antichains have distinct up-sets and
//! `α ≼ β` exactly when `↑β ⊆ ↑α`, which gives constant-time comparisons
//! during construction. The set-level operations on [`SourceCollection`]
//! work on the sources directly and serve as the reference.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write as _};
use core::str::FromStr;

use crate::distribution::Source;
use crate::error::{Error, Result};

/// Largest supported predictor count. Node counts grow super-exponentially
/// (7 579 at five predictors).
pub const MAX_PREDICTORS: usize = 5;

/// An antichain of sources, stored sorted by `(cardinality, indices)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SourceCollection {
    sources: Vec<Source>,
}

impl SourceCollection {
    /// Validates the antichain property. Repeated sources collapse to one.
    pub fn new<I: IntoIterator<Item = Source>>(sources: I) -> Result<Self> {
        let mut sources: Vec<Source> = sources.into_iter().collect();
        sources.sort();
        sources.dedup();
        if sources.is_empty() {
            return Err(Error::EmptyCollection);
        }
        for (i, &a) in sources.iter().enumerate() {
            for &b in &sources[i + 1..] {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    return Err(Error::NotAntichain(a, b));
                }
            }
        }
        Ok(SourceCollection { sources })
    }

    /// The minimal elements (under `⊆`) of the given sources.
    pub fn minimal_of<I: IntoIterator<Item = Source>>(sources: I) -> Result<Self> {
        let mut all: Vec<Source> = sources.into_iter().collect();
        all.sort();
        all.dedup();
        let minimal = all
            .iter()
            .copied()
            .filter(|&a| !all.iter().any(|&b| b != a && b.is_subset_of(a)))
            .collect::<Vec<_>>();
        if minimal.is_empty() {
            return Err(Error::EmptyCollection);
        }
        Ok(SourceCollection { sources: minimal })
    }

    pub fn single(source: Source) -> Self {
        SourceCollection {
            sources: alloc::vec![source],
        }
    }

    pub fn sources(&self) -> &[Source] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.sources
            .iter()
            .map(|s| s.max_index())
            .max()
            .unwrap_or(0)
    }

    /// `self ≼ other`: every source of `other` contains a source of `self`.
    pub fn precedes(&self, other: &SourceCollection) -> bool {
        other
            .sources
            .iter()
            .all(|&b| self.sources.iter().any(|&a| a.is_subset_of(b)))
    }

    /// Greatest lower bound: the minimal elements of `self ∪ other`.
    pub fn meet(&self, other: &SourceCollection) -> SourceCollection {
        Self::minimal_of(self.sources.iter().chain(&other.sources).copied())
            .expect("union of nonempty collections is nonempty")
    }

    /// Least upper bound: the minimal elements of `↑self ∩ ↑other`.
    ///
    /// Every minimal element of the intersection lies inside the union of
    /// all indices involved, so the up-sets are taken within that union.
    pub fn join(&self, other: &SourceCollection) -> SourceCollection {
        let universe = self
            .sources
            .iter()
            .chain(&other.sources)
            .fold(0u32, |acc, s| acc | s.mask());
        let above = |c: &SourceCollection, m: u32| c.sources.iter().any(|a| a.mask() & !m == 0);
        let common = submasks(universe)
            .filter(|&m| above(self, m) && above(other, m))
            .filter_map(Source::from_mask);
        Self::minimal_of(common).expect("the union of all indices lies in both up-sets")
    }

    /// Label such as `{1}{23}`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Bitmask of the up-set of this collection within `P₁({1..n})`.
    pub(crate) fn upset_mask(&self, num_predictors: usize) -> u64 {
        let mut out = 0u64;
        for m in 1u32..(1 << num_predictors) {
            if self.sources.iter().any(|a| a.mask() & !m == 0) {
                out |= 1 << m;
            }
        }
        out
    }
}

/// Nonempty submasks of `mask`.
fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    core::iter::from_fn(move || {
        let current = next.filter(|&m| m != 0)?;
        next = Some((current - 1) & mask);
        Some(current)
    })
}

impl fmt::Display for SourceCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sources {
            write!(f, "{{{s}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SourceCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SourceCollection {
    type Err = Error;

    fn from_str(label: &str) -> Result<Self> {
        let invalid = || Error::InvalidLabel(label.to_string());
        let mut sources = Vec::new();
        let mut rest = label.trim();
        if rest.is_empty() {
            return Err(invalid());
        }
        while !rest.is_empty() {
            let body = rest.strip_prefix('{').ok_or_else(invalid)?;
            let close = body.find('}').ok_or_else(invalid)?;
            let digits = &body[..close];
            let indices = digits
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(invalid))
                .collect::<Result<Vec<_>>>()?;
            sources.push(Source::new(indices).map_err(|_| invalid())?);
            rest = &body[close + 1..];
        }
        let mut sorted = sources.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != sources.len() {
            return Err(invalid());
        }
        SourceCollection::new(sources)
    }
}

fn check_predictor_count(num_predictors: usize) -> Result<()> {
    if (1..=MAX_PREDICTORS).contains(&num_predictors) {
        Ok(())
    } else {
        Err(Error::PredictorCount {
            count: num_predictors,
            min: 1,
            max: MAX_PREDICTORS,
        })
    }
}

/// All antichains of nonempty subsets of `{1..num_predictors}`, excluding the
/// empty antichain.
///
/// Backtracks over the subsets in `(cardinality, lex)` order and only extends
/// a partial antichain with subsets incomparable to everything chosen so far,
/// so each antichain is produced once, already in canonical order.
pub fn enumerate_nodes(num_predictors: usize) -> Result<Vec<SourceCollection>> {
    check_predictor_count(num_predictors)?;
    let mut subsets: Vec<Source> = (1u32..(1 << num_predictors))
        .filter_map(Source::from_mask)
        .collect();
    subsets.sort();

    fn extend(
        subsets: &[Source],
        start: usize,
        chosen: &mut Vec<Source>,
        out: &mut Vec<SourceCollection>,
    ) {
        for i in start..subsets.len() {
            let candidate = subsets[i];
            if chosen
                .iter()
                .any(|&c| c.is_subset_of(candidate) || candidate.is_subset_of(c))
            {
                continue;
            }
            chosen.push(candidate);
            out.push(SourceCollection {
                sources: chosen.clone(),
            });
            extend(subsets, i + 1, chosen, out);
            chosen.pop();
        }
    }

    let mut out = Vec::new();
    extend(&subsets, 0, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Position of a node within a [`RedundancyLattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(usize);

impl NodeId {
    pub(crate) fn at(index: usize) -> Self {
        NodeId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

/// `⟨A(R), ≼⟩` with its cover relation.
///
/// Nodes are ordered by layer (longest chain down to the bottom), then by
/// canonical label; this order is a linear extension of `≼`.
#[derive(Debug, Clone)]
pub struct RedundancyLattice {
    num_predictors: usize,
    nodes: Vec<SourceCollection>,
    upsets: Vec<u64>,
    layers: Vec<usize>,
    children: Vec<Vec<NodeId>>,
    parents: Vec<Vec<NodeId>>,
    index: BTreeMap<SourceCollection, NodeId>,
}

impl RedundancyLattice {
    pub fn build(num_predictors: usize) -> Result<Self> {
        let mut nodes = enumerate_nodes(num_predictors)?;
        // Larger up-set first: a linear extension of ≼, bottom first.
        nodes.sort_by_cached_key(|n| core::cmp::Reverse(n.upset_mask(num_predictors).count_ones()));
        let upsets: Vec<u64> = nodes.iter().map(|n| n.upset_mask(num_predictors)).collect();
        let strictly_below =
            |b: usize, a: usize| upsets[b] != upsets[a] && upsets[a] & !upsets[b] == 0;

        // Covers of α are the maximal elements of its strict down-set. Scanning
        // candidates from the nearest (smallest up-set) outward, a candidate is
        // a cover unless it sits under a cover already accepted.
        let mut children: Vec<Vec<usize>> = Vec::with_capacity(nodes.len());
        for a in 0..nodes.len() {
            let mut covers: Vec<usize> = Vec::new();
            for b in (0..a).rev() {
                if strictly_below(b, a) && !covers.iter().any(|&c| strictly_below(b, c)) {
                    covers.push(b);
                }
            }
            children.push(covers);
        }
        let mut layers = alloc::vec![0usize; nodes.len()];
        for a in 0..nodes.len() {
            layers[a] = children[a]
                .iter()
                .map(|&c| layers[c] + 1)
                .max()
                .unwrap_or(0);
        }

        let mut order: Vec<usize> = (0..nodes.len()).collect();
        order.sort_by(|&x, &y| {
            layers[x]
                .cmp(&layers[y])
                .then_with(|| nodes[x].cmp(&nodes[y]))
        });
        let mut rank = alloc::vec![0usize; nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }

        let mut sorted_children: Vec<Vec<NodeId>> = order
            .iter()
            .map(|&old| {
                let mut c: Vec<NodeId> = children[old].iter().map(|&x| NodeId(rank[x])).collect();
                c.sort();
                c
            })
            .collect();
        let mut parents: Vec<Vec<NodeId>> = alloc::vec![Vec::new(); nodes.len()];
        for (parent, kids) in sorted_children.iter().enumerate() {
            for kid in kids {
                parents[kid.0].push(NodeId(parent));
            }
        }
        sorted_children.shrink_to_fit();

        let nodes: Vec<SourceCollection> = order.iter().map(|&old| nodes[old].clone()).collect();
        let index = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), NodeId(i)))
            .collect();
        Ok(RedundancyLattice {
            num_predictors,
            upsets: order.iter().map(|&old| upsets[old]).collect(),
            layers: order.iter().map(|&old| layers[old]).collect(),
            nodes,
            children: sorted_children,
            parents,
            index,
        })
    }

    pub fn num_predictors(&self) -> usize {
        self.num_predictors
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SourceCollection] {
        &self.nodes
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = NodeId> + ExactSizeIterator {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn node(&self, id: NodeId) -> &SourceCollection {
        &self.nodes[id.0]
    }

    pub fn id_of(&self, node: &SourceCollection) -> Result<NodeId> {
        self.index
            .get(node)
            .copied()
            .ok_or_else(|| Error::UnknownNode(node.label()))
    }

    pub fn layer(&self, id: NodeId) -> usize {
        self.layers[id.0]
    }

    /// `{R}`, the self-redundancy of all predictors together.
    pub fn top(&self) -> NodeId {
        NodeId(self.nodes.len() - 1)
    }

    /// `{1}{2}..{n}`.
    pub fn bottom(&self) -> NodeId {
        NodeId(0)
    }

    /// `a ≼ b` between two nodes of this lattice.
    pub fn precedes_id(&self, a: NodeId, b: NodeId) -> bool {
        self.upsets[b.0] & !self.upsets[a.0] == 0
    }

    pub fn precedes(&self, a: &SourceCollection, b: &SourceCollection) -> Result<bool> {
        Ok(self.precedes_id(self.id_of(a)?, self.id_of(b)?))
    }

    /// Nodes immediately below `id` (`α⁻`).
    pub fn children(&self, id: NodeId) -> &[NodeId] {
        &self.children[id.0]
    }

    /// Nodes immediately above `id`.
    pub fn parents(&self, id: NodeId) -> &[NodeId] {
        &self.parents[id.0]
    }

    pub fn covered_by(&self, node: &SourceCollection) -> Result<Vec<&SourceCollection>> {
        let id = self.id_of(node)?;
        Ok(self.children(id).iter().map(|&c| self.node(c)).collect())
    }

    /// `↓id`, including `id` itself, in lattice order.
    pub fn down_set_ids(&self, id: NodeId) -> impl Iterator<Item = NodeId> + '_ {
        (0..=id.0)
            .map(NodeId)
            .filter(move |&b| self.precedes_id(b, id))
    }

    pub fn down_set(&self, node: &SourceCollection) -> Result<Vec<&SourceCollection>> {
        let id = self.id_of(node)?;
        Ok(self.down_set_ids(id).map(|b| self.node(b)).collect())
    }

    /// Cover edges as `(child, parent)` pairs.
    pub fn cover_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.ids()
            .flat_map(move |p| self.children(p).iter().map(move |&c| (c, p)))
    }

    pub fn to_dot(&self) -> String {
        self.to_dot_with(|_| None)
    }

    /// Hasse diagram in DOT, one edge per cover, drawn bottom to top.
    /// `annotate` may add a line of text under a node's label.
    pub fn to_dot_with<F>(&self, annotate: F) -> String
    where
        F: Fn(NodeId) -> Option<String>,
    {
        let mut out = String::new();
        out.push_str("digraph redundancy_lattice {\n");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
        for id in self.ids() {
            let label = match annotate(id) {
                Some(note) => alloc::format!("{}\\n{}", self.node(id), escape(&note)),
                None => self.node(id).label(),
            };
            let _ = writeln!(out, "  n{} [label=\"{}\"];", id.0, label);
        }
        for (child, parent) in self.cover_edges() {
            let _ = writeln!(out, "  n{} -> n{};", child.0, parent.0);
        }
        out.push_str("}\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n")
}
