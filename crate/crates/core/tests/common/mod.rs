#![allow(dead_code)]

use pid_core::JointDistribution;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random pmf over the full grid of `sizes`; roughly a quarter of the cells
/// are structural zeros.
pub fn random_pmf(rng: &mut StdRng, sizes: &[usize]) -> JointDistribution {
    let cells: usize = sizes.iter().product();
    let mut weights: Vec<f64> = (0..cells)
        .map(|_| {
            if rng.gen_bool(0.25) {
                0.0
            } else {
                rng.gen::<f64>()
            }
        })
        .collect();
    if weights.iter().all(|&w| w == 0.0) {
        weights[0] = 1.0;
    }
    let total: f64 = weights.iter().sum();
    let entries = (0..cells).map(|k| {
        let mut rest = k;
        let mut outcome = vec![0; sizes.len()];
        for v in (0..sizes.len()).rev() {
            outcome[v] = rest % sizes[v];
            rest /= sizes[v];
        }
        (outcome, weights[k] / total)
    });
    let names: Vec<String> = std::iter::once("S".to_string())
        .chain((1..sizes.len()).map(|i| format!("R{i}")))
        .collect();
    let name_refs: Vec<&str> = names.iter().map(String::as_str).collect();
    JointDistribution::with_integer_alphabets(&name_refs, sizes, entries.collect::<Vec<_>>())
        .unwrap()
}

/// Random alphabet sizes in `2..=max_alphabet` for a target plus `predictors`.
pub fn random_sizes(rng: &mut StdRng, predictors: usize, max_alphabet: usize) -> Vec<usize> {
    (0..=predictors)
        .map(|_| rng.gen_range(2..=max_alphabet))
        .collect()
}

/// The property-suite corpus: 1000 random pmfs with two or three predictors
/// and alphabets of at most three symbols.
pub fn property_corpus() -> Vec<JointDistribution> {
    let mut r = rng(0x5eed_0001);
    (0..1000)
        .map(|i| {
            let predictors = if i % 2 == 0 { 2 } else { 3 };
            let sizes = random_sizes(&mut r, predictors, 3);
            random_pmf(&mut r, &sizes)
        })
        .collect()
}

/// `D(p || q)` in bits over aligned vectors, skipping `p = 0` terms.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .filter(|(&a, _)| a > 0.0)
        .map(|(&a, &b)| a * (a / b).log2())
        .sum()
}
