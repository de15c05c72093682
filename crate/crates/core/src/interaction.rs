//! Interaction information and its expansion into signed partial
//! information atoms.
//!
//! Sign convention: three-variable interaction information is
//! `I(S;R1|R2) − I(S;R1)`, positive for XOR.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::distribution::{JointDistribution, Source};
use crate::error::{Error, Result};
use crate::lattice::{NodeId, RedundancyLattice, SourceCollection, MAX_PREDICTORS};
use crate::pid::{self, PIDecomposition};

/// Smallest and largest total variable counts for interaction information.
pub const MIN_VARIABLES: usize = 3;
pub const MAX_VARIABLES: usize = 6;

fn check_variable_count(n: usize) -> Result<()> {
    if (MIN_VARIABLES..=MAX_VARIABLES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount {
            count: n,
            min: MIN_VARIABLES,
            max: MAX_VARIABLES,
        })
    }
}

/// `I(S; A | G)` in bits. `source` and `given` must be disjoint.
pub fn conditional_mutual_information(
    d: &JointDistribution,
    source: Source,
    given: Source,
) -> Result<f64> {
    if !source.is_disjoint(given) {
        return Err(Error::OverlappingSources {
            source_set: source,
            given,
        });
    }
    let a = d.source_positions(source)?;
    let g = d.source_positions(given)?;
    Ok(conditional_mi_positions(d, &[0], &a, &g).max(0.0))
}

/// `I(X; Y | C)` between groups of variable positions.
fn conditional_mi_positions(d: &JointDistribution, x: &[usize], y: &[usize], c: &[usize]) -> f64 {
    let with = |parts: &[&[usize]]| -> f64 {
        let vars: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
        d.entropy_unchecked(&vars)
    };
    with(&[x, c]) + with(&[y, c]) - with(&[x, y, c]) - with(&[c])
}

/// Interaction information among `vars` conditioned on `given`, by peeling
/// off the last variable: `I(X_1;..;X_k | C) = I(X_1;..;X_{k-1} | C, X_k) − I(X_1;..;X_{k-1} | C)`.
fn co_information(d: &JointDistribution, vars: &[usize], given: &mut Vec<usize>) -> f64 {
    match vars {
        [x, y] => conditional_mi_positions(d, &[*x], &[*y], given),
        [rest @ .., last] => {
            given.push(*last);
            let conditioned = co_information(d, rest, given);
            given.pop();
            conditioned - co_information(d, rest, given)
        }
        _ => unreachable!("at least two variables"),
    }
}

/// Interaction information among all variables of `d`, by recursion on the
/// last variable down to a conditional mutual information.
pub fn interaction_information(d: &JointDistribution) -> Result<f64> {
    check_variable_count(d.num_variables())?;
    let vars: Vec<usize> = (0..d.num_variables()).collect();
    Ok(co_information(d, &vars, &mut Vec::new()))
}

/// The same quantity as the alternating sum
/// `Σ_{∅≠T⊆R} (−1)^{|R|−|T|} I(S; T)`.
pub fn interaction_information_alternating(d: &JointDistribution) -> Result<f64> {
    check_variable_count(d.num_variables())?;
    let n = d.num_predictors();
    let mut total = 0.0;
    for mask in 1u32..(1 << n) {
        let t = Source::from_mask(mask).expect("nonzero mask");
        let sign = if (n - t.len()).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        total += sign * d.mutual_information(t)?;
    }
    Ok(total)
}

/// Integer coefficients expressing interaction information as a signed sum
/// of atoms over a redundancy lattice.
#[derive(Debug, Clone)]
pub struct AtomSignature {
    lattice: Arc<RedundancyLattice>,
    coefficients: Vec<i64>,
}

impl AtomSignature {
    pub fn lattice(&self) -> &Arc<RedundancyLattice> {
        &self.lattice
    }

    pub fn coefficient(&self, id: NodeId) -> i64 {
        self.coefficients[id.index()]
    }

    pub fn coefficient_of(&self, node: &SourceCollection) -> Result<i64> {
        Ok(self.coefficient(self.lattice.id_of(node)?))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Nodes with a nonzero coefficient, in lattice order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&SourceCollection, i64)> + '_ {
        self.lattice
            .ids()
            .filter(move |&id| self.coefficient(id) != 0)
            .map(move |id| (self.lattice.node(id), self.coefficient(id)))
    }

    /// `Σ_β c(β) Π(β)` for a decomposition on the same lattice.
    pub fn apply(&self, decomposition: &PIDecomposition) -> Result<f64> {
        if decomposition.lattice().num_predictors() != self.lattice.num_predictors() {
            return Err(Error::LatticeMismatch {
                lattice: self.lattice.num_predictors(),
                distribution: decomposition.lattice().num_predictors(),
            });
        }
        Ok(self
            .coefficients
            .iter()
            .zip(decomposition.atoms())
            .map(|(&c, a)| c as f64 * a)
            .sum())
    }
}

/// Each `I(S; T)` is the sum of atoms below `{T}`, so the coefficient of
/// atom `β` collects the sign `(−1)^{|R|−|T|}` of every `T` with `β ≼ {T}`.
pub fn atom_signature(num_predictors: usize) -> Result<AtomSignature> {
    if !(2..=MAX_PREDICTORS).contains(&num_predictors) {
        return Err(Error::PredictorCount {
            count: num_predictors,
            min: 2,
            max: MAX_PREDICTORS,
        });
    }
    atom_signature_on(Arc::new(RedundancyLattice::build(num_predictors)?))
}

/// [`atom_signature`] on an existing lattice.
pub fn atom_signature_on(lattice: Arc<RedundancyLattice>) -> Result<AtomSignature> {
    let n = lattice.num_predictors();
    let mut coefficients = alloc::vec![0i64; lattice.len()];
    for mask in 1u32..(1 << n) {
        let t = Source::from_mask(mask).expect("nonzero mask");
        let sign = if (n - t.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let single = lattice.id_of(&SourceCollection::single(t))?;
        for beta in lattice.down_set_ids(single) {
            coefficients[beta.index()] += sign;
        }
    }
    Ok(AtomSignature {
        lattice,
        coefficients,
    })
}

/// Synergy and redundancy atoms for two predictors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Balance {
    pub synergy: f64,
    pub redundancy: f64,
    /// `synergy − redundancy`, equal to the interaction information.
    pub difference: f64,
}

#[derive(Debug, Clone)]
pub struct InteractionReport {
    pub interaction_bits: f64,
    pub signature: AtomSignature,
    pub decomposition: PIDecomposition,
    /// `c(β) Π(β)` per node, in lattice order.
    pub signed_atoms: Vec<f64>,
    /// Present only for two predictors.
    pub balance: Option<Balance>,
}

/// Interaction information together with the signed atoms that make it up.
pub fn interaction_decomposition_report(d: &JointDistribution) -> Result<InteractionReport> {
    let interaction_bits = interaction_information(d)?;
    let decomposition = pid::decompose(d)?;
    let signature = atom_signature_on(decomposition.lattice().clone())?;
    let signed_atoms = signature
        .coefficients()
        .iter()
        .zip(decomposition.atoms())
        .map(|(&c, a)| c as f64 * a)
        .collect();
    let balance = (d.num_predictors() == 2).then(|| {
        let synergy = decomposition.synergy();
        let redundancy = decomposition.redundancy();
        Balance {
            synergy,
            redundancy,
            difference: synergy - redundancy,
        }
    });
    Ok(InteractionReport {
        interaction_bits,
        signature,
        decomposition,
        signed_atoms,
        balance,
    })
}
