//! Small reference systems with known decompositions.

use alloc::vec::Vec;

use crate::distribution::{JointDistribution, Source};
use crate::error::Result;
use crate::interaction;
use crate::pid;

fn uniform(names: &[&str], sizes: &[usize], outcomes: &[&[usize]]) -> JointDistribution {
    JointDistribution::uniform_over(names, sizes, outcomes)
        .expect("reference system is well formed")
}

/// `S ∈ {0,1,2}`, `R1, R2 ∈ {0,1}` with three equiprobable outcomes
/// `(0,0,0)`, `(1,0,1)`, `(2,1,0)`. `R1` decides whether `S = 2`, `R2`
/// whether `S = 1`, and only the pair pins down `S = 0`.
pub fn fig4a() -> JointDistribution {
    uniform(
        &["S", "R1", "R2"],
        &[3, 2, 2],
        &[&[0, 0, 0], &[1, 0, 1], &[2, 1, 0]],
    )
}

/// `S = R1 ⊕ R2` with uniform inputs.
pub fn xor() -> JointDistribution {
    uniform(
        &["S", "R1", "R2"],
        &[2, 2, 2],
        &[&[0, 0, 0], &[1, 0, 1], &[1, 1, 0], &[0, 1, 1]],
    )
}

/// Uniform binary `S` with `R1 = R2 = S`.
pub fn copies2() -> JointDistribution {
    uniform(&["S", "R1", "R2"], &[2, 2, 2], &[&[0, 0, 0], &[1, 1, 1]])
}

/// `S = R1 ⊕ R2 ⊕ R3` with uniform inputs.
pub fn parity3() -> JointDistribution {
    let outcomes: Vec<[usize; 4]> = (0..8usize)
        .map(|x| {
            let (a, b, c) = (x >> 2 & 1, x >> 1 & 1, x & 1);
            [a ^ b ^ c, a, b, c]
        })
        .collect();
    let refs: Vec<&[usize]> = outcomes.iter().map(|o| o.as_slice()).collect();
    uniform(&["S", "R1", "R2", "R3"], &[2, 2, 2, 2], &refs)
}

/// Uniform binary `S` with `R1 = R2 = R3 = S`.
pub fn copy3() -> JointDistribution {
    uniform(
        &["S", "R1", "R2", "R3"],
        &[2, 2, 2, 2],
        &[&[0, 0, 0, 0], &[1, 1, 1, 1]],
    )
}

/// Redundancy and synergy both equal to half a bit, so they cancel in the
/// interaction information.
pub const BALANCED_REDUNDANCY: f64 = 0.5;
pub const BALANCED_SYNERGY: f64 = 0.5;
pub const BALANCED_INTERACTION: f64 = 0.0;

/// Whether `d` (with `S ∈ {0,1,2}` and two binary predictors) has the
/// balanced redundancy/synergy profile: every target outcome occurs, either
/// predictor alone carries information about `S = 0` and `S = 2`, the
/// redundancy and synergy atoms are both half a bit and the interaction
/// information vanishes.
pub fn is_balanced_system(d: &JointDistribution, tolerance: f64) -> Result<bool> {
    if d.target_marginal().iter().any(|&p| p <= 0.0) {
        return Ok(false);
    }
    for r in 1..=2 {
        let source = Source::singleton(r)?;
        for s in [0, 2] {
            if d.specific_information(s, source)? <= tolerance {
                return Ok(false);
            }
        }
    }
    let decomposition = pid::decompose(d)?;
    let ii = interaction::interaction_information(d)?;
    Ok(
        (decomposition.redundancy() - BALANCED_REDUNDANCY).abs() <= tolerance
            && (decomposition.synergy() - BALANCED_SYNERGY).abs() <= tolerance
            && (ii - BALANCED_INTERACTION).abs() <= tolerance,
    )
}

/// Every equiprobable system over `S ∈ {0,1,2}`, `R1, R2 ∈ {0,1}` with the
/// balanced profile of [`is_balanced_system`].
pub fn balanced_candidates() -> Result<Vec<JointDistribution>> {
    let mut out = Vec::new();
    for d in JointDistribution::equiprobable_supports(&["S", "R1", "R2"], &[3, 2, 2], 3, 12)? {
        if is_balanced_system(&d, 1e-9)? {
            out.push(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_systems_have_expected_shape() {
        assert_eq!(fig4a().support().count(), 3);
        assert_eq!(xor().support().count(), 4);
        assert_eq!(copies2().support().count(), 2);
        assert_eq!(parity3().support().count(), 8);
        let copy = copy3();
        assert_eq!(copy.support().count(), 2);
        assert!(copy.support().all(|(o, _)| o.iter().all(|&v| v == o[0])));
        assert!(parity3().support().all(|(o, _)| o[0] == o[1] ^ o[2] ^ o[3]));
    }

    #[test]
    fn balanced_search_finds_systems() {
        let found = balanced_candidates().unwrap();
        assert!(!found.is_empty());
        for d in &found {
            assert!(is_balanced_system(d, 1e-9).unwrap());
        }
        assert!(!is_balanced_system(&fig4a(), 1e-9).unwrap());
    }
}
