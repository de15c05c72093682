//! Redundancy `I_min` and the partial information atoms `Π` obtained by
//! Möbius inversion of `I_min` over the redundancy lattice.
//!
//! The production path is the bottom-up recursion
//! `Π(α) = I_min(α) − Σ_{β≺α} Π(β)`. Two closed forms are provided as
//! independent cross-checks: one through the covers `α⁻` and a max–min of
//! specific information, one through inclusion–exclusion over meets of
//! covers.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::distribution::{JointDistribution, Source};
use crate::error::{Error, Result};
use crate::lattice::{NodeId, RedundancyLattice, SourceCollection, MAX_PREDICTORS};

/// Atoms in `(-NEGATIVE_ATOM_TOLERANCE, 0)` are rounding noise and clamped to 0.
pub const NEGATIVE_ATOM_TOLERANCE: f64 = 1e-8;

/// Agreement required between the recursive and closed-form atoms.
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-8;

/// Default `I_min` threshold below which pruning zeroes a whole down-set.
pub const DEFAULT_ZERO_TOLERANCE: f64 = 1e-10;

/// Inclusion–exclusion enumerates `2^|α⁻|` meets; refuse beyond this.
const MAX_INCLUSION_EXCLUSION_COVERS: usize = 20;

/// Specific information `I(S=s; A)` for every source `A ⊆ R` and every
/// target outcome in the support, computed once and shared across nodes.
#[derive(Debug, Clone)]
pub struct SpecificInformationTable {
    num_predictors: usize,
    weights: Vec<f64>,
    // Indexed by source mask; slot 0 unused.
    by_source: Vec<Vec<f64>>,
}

impl SpecificInformationTable {
    pub fn new(d: &JointDistribution) -> Result<Self> {
        let n = d.num_predictors();
        if !(1..=MAX_PREDICTORS).contains(&n) {
            return Err(Error::PredictorCount {
                count: n,
                min: 1,
                max: MAX_PREDICTORS,
            });
        }
        let p_s = d.target_marginal();
        let in_support: Vec<usize> = (0..p_s.len()).filter(|&s| p_s[s] > 0.0).collect();
        let mut by_source = alloc::vec![Vec::new()];
        for mask in 1u32..(1 << n) {
            let source = Source::from_mask(mask).expect("nonzero mask");
            let profile = d.specific_information_profile(source)?;
            by_source.push(
                in_support
                    .iter()
                    .map(|&s| profile[s].expect("outcome in support"))
                    .collect(),
            );
        }
        Ok(SpecificInformationTable {
            num_predictors: n,
            weights: in_support.iter().map(|&s| p_s[s]).collect(),
            by_source,
        })
    }

    pub fn num_predictors(&self) -> usize {
        self.num_predictors
    }

    fn check(&self, alpha: &SourceCollection) -> Result<()> {
        if alpha.max_index() > self.num_predictors {
            return Err(Error::PredictorOutOfRange {
                index: alpha.max_index(),
                max: self.num_predictors,
            });
        }
        Ok(())
    }

    /// `min_{A∈α} I(S=s; A)` for each outcome.
    fn min_profile(&self, alpha: &SourceCollection) -> impl Iterator<Item = f64> + '_ {
        let rows: Vec<&Vec<f64>> = alpha
            .sources()
            .iter()
            .map(|a| &self.by_source[a.mask() as usize])
            .collect();
        (0..self.weights.len())
            .map(move |k| rows.iter().map(|r| r[k]).fold(f64::INFINITY, f64::min))
    }

    fn i_min_unchecked(&self, alpha: &SourceCollection) -> f64 {
        self.weights
            .iter()
            .zip(self.min_profile(alpha))
            .map(|(w, m)| w * m)
            .sum()
    }

    /// `I_min(S; α) = Σ_s p(s) min_{A∈α} I(S=s; A)`.
    pub fn i_min(&self, alpha: &SourceCollection) -> Result<f64> {
        self.check(alpha)?;
        Ok(self.i_min_unchecked(alpha))
    }

    fn check_lattice(&self, lattice: &RedundancyLattice) -> Result<()> {
        if lattice.num_predictors() != self.num_predictors {
            return Err(Error::LatticeMismatch {
                lattice: lattice.num_predictors(),
                distribution: self.num_predictors,
            });
        }
        Ok(())
    }

    /// `Π(α) = I_min(α) − Σ_s p(s) max_{β∈α⁻} min_{B∈β} I(S=s; B)`.
    pub fn pi_closed_form(
        &self,
        lattice: &RedundancyLattice,
        alpha: &SourceCollection,
    ) -> Result<f64> {
        self.check_lattice(lattice)?;
        let id = lattice.id_of(alpha)?;
        let covers = lattice.children(id);
        let mut below = 0.0;
        if !covers.is_empty() {
            let mut best = alloc::vec![f64::NEG_INFINITY; self.weights.len()];
            for &c in covers {
                for (b, m) in best.iter_mut().zip(self.min_profile(lattice.node(c))) {
                    *b = b.max(m);
                }
            }
            below = self.weights.iter().zip(&best).map(|(w, b)| w * b).sum();
        }
        Ok(self.i_min_unchecked(alpha) - below)
    }

    /// `Π(α) = I_min(α) − Σ_{∅≠𝓑⊆α⁻} (−1)^{|𝓑|−1} I_min(⋀𝓑)`.
    pub fn pi_inclusion_exclusion(
        &self,
        lattice: &RedundancyLattice,
        alpha: &SourceCollection,
    ) -> Result<f64> {
        self.check_lattice(lattice)?;
        let id = lattice.id_of(alpha)?;
        let covers: Vec<&SourceCollection> = lattice
            .children(id)
            .iter()
            .map(|&c| lattice.node(c))
            .collect();
        if covers.len() > MAX_INCLUSION_EXCLUSION_COVERS {
            return Err(Error::TooManyCovers(covers.len()));
        }
        let mut below = 0.0;
        for subset in 1u32..(1 << covers.len()) {
            let meet = covers
                .iter()
                .enumerate()
                .filter(|(i, _)| subset & (1 << i) != 0)
                .map(|(_, c)| (*c).clone())
                .reduce(|acc, c| acc.meet(&c))
                .expect("nonempty subset");
            let sign = if subset.count_ones() % 2 == 1 {
                1.0
            } else {
                -1.0
            };
            below += sign * self.i_min_unchecked(&meet);
        }
        Ok(self.i_min_unchecked(alpha) - below)
    }
}

/// `I_min(S; α)` computed straight from the distribution, without a table.
pub fn i_min(d: &JointDistribution, alpha: &SourceCollection) -> Result<f64> {
    let profiles = alpha
        .sources()
        .iter()
        .map(|&a| d.specific_information_profile(a))
        .collect::<Result<Vec<_>>>()?;
    let p_s = d.target_marginal();
    Ok((0..p_s.len())
        .filter(|&s| p_s[s] > 0.0)
        .map(|s| {
            let m = profiles
                .iter()
                .map(|p| p[s].expect("outcome in support"))
                .fold(f64::INFINITY, f64::min);
            p_s[s] * m
        })
        .sum())
}

pub fn pi_closed_form(
    d: &JointDistribution,
    lattice: &RedundancyLattice,
    alpha: &SourceCollection,
) -> Result<f64> {
    SpecificInformationTable::new(d)?.pi_closed_form(lattice, alpha)
}

pub fn pi_inclusion_exclusion(
    d: &JointDistribution,
    lattice: &RedundancyLattice,
    alpha: &SourceCollection,
) -> Result<f64> {
    SpecificInformationTable::new(d)?.pi_inclusion_exclusion(lattice, alpha)
}

/// The full decomposition of `I(S; R)` over a redundancy lattice.
#[derive(Debug, Clone)]
pub struct PIDecomposition {
    lattice: Arc<RedundancyLattice>,
    imin: Vec<f64>,
    atoms: Vec<f64>,
    total: f64,
}

impl PIDecomposition {
    pub fn lattice(&self) -> &Arc<RedundancyLattice> {
        &self.lattice
    }

    /// `I(S; R)` in bits.
    pub fn total(&self) -> f64 {
        self.total
    }

    pub fn imin(&self, id: NodeId) -> f64 {
        self.imin[id.index()]
    }

    pub fn atom(&self, id: NodeId) -> f64 {
        self.atoms[id.index()]
    }

    pub fn atom_of(&self, node: &SourceCollection) -> Result<f64> {
        Ok(self.atom(self.lattice.id_of(node)?))
    }

    pub fn imin_of(&self, node: &SourceCollection) -> Result<f64> {
        Ok(self.imin(self.lattice.id_of(node)?))
    }

    pub fn atoms(&self) -> &[f64] {
        &self.atoms
    }

    pub fn imins(&self) -> &[f64] {
        &self.imin
    }

    /// Atom at the top node `{R}`.
    pub fn synergy(&self) -> f64 {
        self.atom(self.lattice.top())
    }

    /// Atom at the bottom node `{1}{2}..`.
    pub fn redundancy(&self) -> f64 {
        self.atom(self.lattice.bottom())
    }

    /// `(id, node, I_min, Π)` in lattice order (layer, then label).
    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &SourceCollection, f64, f64)> + '_ {
        self.lattice
            .ids()
            .map(move |id| (id, self.lattice.node(id), self.imin(id), self.atom(id)))
    }
}

/// Möbius inversion of `imin` in lattice order, clamping rounding noise.
fn mobius_atoms(lattice: &RedundancyLattice, imin: &[f64]) -> Result<Vec<f64>> {
    let mut atoms: Vec<f64> = Vec::with_capacity(imin.len());
    for alpha in lattice.ids() {
        let below: f64 = (0..alpha.index())
            .filter(|&b| atoms[b] != 0.0)
            .filter(|&b| lattice.precedes_id(NodeId::at(b), alpha))
            .map(|b| atoms[b])
            .sum();
        let raw = imin[alpha.index()] - below;
        atoms.push(clamp_atom(lattice, alpha, raw)?);
    }
    Ok(atoms)
}

fn clamp_atom(lattice: &RedundancyLattice, id: NodeId, raw: f64) -> Result<f64> {
    if raw < -NEGATIVE_ATOM_TOLERANCE {
        return Err(Error::NegativeAtom {
            node: lattice.node(id).label(),
            value: raw,
        });
    }
    Ok(raw.max(0.0))
}

fn check_lattice(d: &JointDistribution, lattice: &RedundancyLattice) -> Result<()> {
    if lattice.num_predictors() != d.num_predictors() {
        return Err(Error::LatticeMismatch {
            lattice: lattice.num_predictors(),
            distribution: d.num_predictors(),
        });
    }
    Ok(())
}

fn full_information(d: &JointDistribution) -> Result<f64> {
    d.mutual_information(Source::full(d.num_predictors())?)
}

/// Atoms by the recursion `Π(α) = I_min(α) − Σ_{β≺α} Π(β)`.
pub fn pi_recursive(
    d: &JointDistribution,
    lattice: Arc<RedundancyLattice>,
) -> Result<PIDecomposition> {
    check_lattice(d, &lattice)?;
    let table = SpecificInformationTable::new(d)?;
    let imin: Vec<f64> = lattice
        .nodes()
        .iter()
        .map(|n| table.i_min_unchecked(n))
        .collect();
    let atoms = mobius_atoms(&lattice, &imin)?;
    Ok(PIDecomposition {
        lattice,
        imin,
        atoms,
        total: full_information(d)?,
    })
}

/// Nodes cross-checked against the closed form: every tenth node in lattice
/// order, plus the top.
fn cross_check_sample(lattice: &RedundancyLattice) -> impl Iterator<Item = NodeId> + '_ {
    lattice
        .ids()
        .filter(move |id| id.index() % 10 == 0 || *id == lattice.top())
}

fn verify(decomposition: &PIDecomposition, table: &SpecificInformationTable) -> Result<()> {
    let lattice = &decomposition.lattice;
    for id in cross_check_sample(lattice) {
        let closed = table.pi_closed_form(lattice, lattice.node(id))?.max(0.0);
        let atom = decomposition.atom(id);
        if (closed - atom).abs() > CROSS_CHECK_TOLERANCE {
            return Err(Error::Consistency {
                node: lattice.node(id).label(),
                expected: closed,
                found: atom,
            });
        }
    }
    let sum: f64 = decomposition.atoms.iter().sum();
    if (sum - decomposition.total).abs() > CROSS_CHECK_TOLERANCE {
        return Err(Error::Consistency {
            node: String::from("total"),
            expected: decomposition.total,
            found: sum,
        });
    }
    Ok(())
}

/// Decomposes `I(S; R)` into partial information atoms.
///
/// Atoms come from the recursion; a sample of nodes is re-derived with the
/// closed form and the atom sum is checked against `I(S; R)`.
pub fn decompose(d: &JointDistribution) -> Result<PIDecomposition> {
    let lattice = Arc::new(RedundancyLattice::build(d.num_predictors())?);
    decompose_on(d, lattice)
}

/// [`decompose`] on a lattice built beforehand.
pub fn decompose_on(
    d: &JointDistribution,
    lattice: Arc<RedundancyLattice>,
) -> Result<PIDecomposition> {
    check_lattice(d, &lattice)?;
    let table = SpecificInformationTable::new(d)?;
    let imin: Vec<f64> = lattice
        .nodes()
        .iter()
        .map(|n| table.i_min_unchecked(n))
        .collect();
    let atoms = mobius_atoms(&lattice, &imin)?;
    let decomposition = PIDecomposition {
        lattice,
        imin,
        atoms,
        total: full_information(d)?,
    };
    verify(&decomposition, &table)?;
    Ok(decomposition)
}

/// Result of [`decompose_pruned`].
#[derive(Debug, Clone)]
pub struct PrunedDecomposition {
    pub decomposition: PIDecomposition,
    /// Nodes whose `I_min` was actually evaluated.
    pub evaluated: usize,
    /// Nodes set to zero without evaluating `I_min`.
    pub skipped: usize,
}

/// Same atoms as [`decompose`], evaluating `I_min` from the top down and
/// zeroing the entire down-set of any node with `I_min ≤ zero_tol`
/// (`I_min` is monotone on the lattice, so nothing below can be larger).
pub fn decompose_pruned(d: &JointDistribution, zero_tol: f64) -> Result<PrunedDecomposition> {
    if !zero_tol.is_finite() || zero_tol < 0.0 {
        return Err(Error::InvalidTolerance(zero_tol));
    }
    let lattice = Arc::new(RedundancyLattice::build(d.num_predictors())?);
    let table = SpecificInformationTable::new(d)?;
    let mut imin: Vec<Option<f64>> = alloc::vec![None; lattice.len()];
    let mut evaluated = 0;
    let mut skipped = 0;
    for alpha in lattice.ids().rev() {
        if imin[alpha.index()].is_some() {
            skipped += 1;
            continue;
        }
        evaluated += 1;
        let value = table.i_min_unchecked(lattice.node(alpha));
        if value <= zero_tol {
            for beta in lattice.down_set_ids(alpha) {
                imin[beta.index()] = Some(0.0);
            }
        } else {
            imin[alpha.index()] = Some(value);
        }
    }
    let imin: Vec<f64> = imin
        .into_iter()
        .map(|v| v.expect("every node assigned"))
        .collect();
    let atoms = mobius_atoms(&lattice, &imin)?;
    Ok(PrunedDecomposition {
        decomposition: PIDecomposition {
            lattice,
            imin,
            atoms,
            total: full_information(d)?,
        },
        evaluated,
        skipped,
    })
}

/// One row of [`asymmetry_report`].
#[derive(Debug, Clone)]
pub struct TargetDecomposition {
    pub target: String,
    pub decomposition: PIDecomposition,
}

/// Largest variable count accepted by [`asymmetry_report`].
pub const MAX_ASYMMETRY_VARIABLES: usize = MAX_PREDICTORS + 1;

/// Decomposes once per variable, each time treating it as the target and the
/// remaining variables (in their original order) as predictors.
pub fn asymmetry_report(d: &JointDistribution) -> Result<Vec<TargetDecomposition>> {
    let n = d.num_variables();
    if !(2..=MAX_ASYMMETRY_VARIABLES).contains(&n) {
        return Err(Error::VariableCount {
            count: n,
            min: 2,
            max: MAX_ASYMMETRY_VARIABLES,
        });
    }
    let lattice = Arc::new(RedundancyLattice::build(n - 1)?);
    (0..n)
        .map(|t| {
            Ok(TargetDecomposition {
                target: d.variable_names()[t].clone(),
                decomposition: decompose_on(&d.with_target(t)?, lattice.clone())?,
            })
        })
        .collect()
}
