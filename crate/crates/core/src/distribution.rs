//! Finite joint distributions over a target and its predictors, together with
//! the outcome-specific information measures built on them.
//!
//! Variable position 0 is always the target `S`; positions `1..n` are the
//! predictors `R_1..R_{n-1}`. Predictor index `i` of a [`Source`] refers to
//! variable position `i`, so labels and positions agree.
//!
//! All information quantities are reported in bits.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Allowed deviation of the total probability mass from 1.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Entries at or below this mass are dropped from the support.
pub const STRUCTURAL_ZERO: f64 = 1e-12;

pub(crate) fn log2(x: f64) -> f64 {
    libm::log2(x)
}

/// A nonempty set of predictor indices, considered jointly as one source.
///
/// Stored as a bitmask: bit `i - 1` is set when predictor `i` belongs to the
/// source. Ordered by cardinality, then lexicographically by index list.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Source(u32);

impl Source {
    /// Largest predictor index a source can hold.
    pub const MAX_INDEX: usize = 31;

    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut mask = 0u32;
        for index in indices {
            if index == 0 || index > Self::MAX_INDEX {
                return Err(Error::PredictorOutOfRange {
                    index,
                    max: Self::MAX_INDEX,
                });
            }
            let bit = 1u32 << (index - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateIndex(index));
            }
            mask |= bit;
        }
        Self::from_mask(mask).ok_or(Error::EmptySource)
    }

    pub fn from_mask(mask: u32) -> Option<Self> {
        (mask != 0).then_some(Source(mask))
    }

    pub fn singleton(index: usize) -> Result<Self> {
        Self::new([index])
    }

    /// The source made of predictors `1..=num_predictors`.
    pub fn full(num_predictors: usize) -> Result<Self> {
        Self::new(1..=num_predictors)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=Self::MAX_INDEX).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=Self::MAX_INDEX).filter(move |i| mask & (1 << (i - 1)) != 0)
    }

    pub fn is_subset_of(self, other: Source) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Source) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Source) -> Source {
        Source(self.0 | other.0)
    }
}

impl Ord for Source {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Source {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Source({self})")
    }
}

/// A finite probability mass function over tuples `(s, r_1, .., r_{n-1})`.
///
/// Immutable once built. Outcomes are stored as symbol indices into the
/// per-variable alphabets; only outcomes with positive mass are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution {
    names: Vec<String>,
    alphabets: Vec<Vec<String>>,
    support: Vec<(Vec<usize>, f64)>,
}

impl JointDistribution {
    /// Builds a distribution from explicit alphabets and `(outcome, p)` pairs,
    /// where each outcome lists symbol indices per variable.
    ///
    /// Masses at or below [`STRUCTURAL_ZERO`] are dropped and the remainder
    /// renormalised once the total has been checked against [`SUM_TOLERANCE`].
    pub fn new<I>(names: Vec<String>, alphabets: Vec<Vec<String>>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        if names.is_empty() {
            return Err(Error::NoVariables);
        }
        if alphabets.len() != names.len() {
            return Err(Error::AlphabetCount {
                expected: names.len(),
                found: alphabets.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        for (variable, alphabet) in alphabets.iter().enumerate() {
            if alphabet.is_empty() {
                return Err(Error::EmptyAlphabet(variable));
            }
            let mut seen = BTreeSet::new();
            for symbol in alphabet {
                if !seen.insert(symbol.as_str()) {
                    return Err(Error::DuplicateSymbol {
                        variable,
                        symbol: symbol.clone(),
                    });
                }
            }
        }

        let arity = names.len();
        let mut pmf: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        let mut total = 0.0;
        for (outcome, p) in entries {
            if outcome.len() != arity {
                return Err(Error::Arity {
                    expected: arity,
                    found: outcome.len(),
                });
            }
            for (variable, &index) in outcome.iter().enumerate() {
                if index >= alphabets[variable].len() {
                    return Err(Error::SymbolOutOfRange { variable, index });
                }
            }
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidProbability(p));
            }
            total += p;
            if pmf.contains_key(&outcome) {
                return Err(Error::DuplicateOutcome(outcome));
            }
            pmf.insert(outcome, p);
        }
        if (total - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::NotNormalized(total));
        }

        let kept: f64 = pmf.values().filter(|&&p| p > STRUCTURAL_ZERO).sum();
        let support = pmf
            .into_iter()
            .filter(|&(_, p)| p > STRUCTURAL_ZERO)
            .map(|(o, p)| (o, p / kept))
            .collect();
        Ok(JointDistribution {
            names,
            alphabets,
            support,
        })
    }

    /// Like [`JointDistribution::new`], with outcomes given as symbols.
    pub fn from_symbols<I, S>(
        names: Vec<String>,
        alphabets: Vec<Vec<String>>,
        entries: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<S>, f64)>,
        S: AsRef<str>,
    {
        let mut indexed = Vec::new();
        for (symbols, p) in entries {
            if symbols.len() != alphabets.len() {
                return Err(Error::Arity {
                    expected: alphabets.len(),
                    found: symbols.len(),
                });
            }
            let outcome = symbols
                .iter()
                .enumerate()
                .map(|(variable, symbol)| {
                    alphabets[variable]
                        .iter()
                        .position(|a| a == symbol.as_ref())
                        .ok_or_else(|| Error::UnknownSymbol {
                            variable,
                            symbol: symbol.as_ref().to_string(),
                        })
                })
                .collect::<Result<Vec<_>>>()?;
            indexed.push((outcome, p));
        }
        Self::new(names, alphabets, indexed)
    }

    /// Distribution over variables with alphabets `0..size`, symbol `k`
    /// spelled as the decimal digits of `k`.
    pub fn with_integer_alphabets<I>(names: &[&str], sizes: &[usize], entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        let names = names.iter().map(|n| n.to_string()).collect();
        let alphabets = sizes
            .iter()
            .map(|&k| (0..k).map(|v| v.to_string()).collect())
            .collect();
        Self::new(names, alphabets, entries)
    }

    /// Equiprobable distribution over the listed outcomes.
    pub fn uniform_over(names: &[&str], sizes: &[usize], outcomes: &[&[usize]]) -> Result<Self> {
        let p = 1.0 / outcomes.len() as f64;
        Self::with_integer_alphabets(names, sizes, outcomes.iter().map(|o| (o.to_vec(), p)))
    }

    pub fn num_variables(&self) -> usize {
        self.names.len()
    }

    pub fn num_predictors(&self) -> usize {
        self.names.len() - 1
    }

    pub fn variable_names(&self) -> &[String] {
        &self.names
    }

    pub fn alphabet(&self, variable: usize) -> &[String] {
        &self.alphabets[variable]
    }

    pub fn alphabets(&self) -> &[Vec<String>] {
        &self.alphabets
    }

    /// Outcomes with positive mass, in lexicographic order of symbol indices.
    pub fn support(&self) -> impl Iterator<Item = (&[usize], f64)> {
        self.support.iter().map(|(o, p)| (o.as_slice(), *p))
    }

    pub fn prob(&self, outcome: &[usize]) -> f64 {
        self.support
            .binary_search_by(|(o, _)| o.as_slice().cmp(outcome))
            .map_or(0.0, |i| self.support[i].1)
    }

    pub fn position_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn check_positions(&self, vars: &[usize]) -> Result<()> {
        for &position in vars {
            if position >= self.num_variables() {
                return Err(Error::VariableOutOfRange {
                    position,
                    count: self.num_variables(),
                });
            }
        }
        Ok(())
    }

    /// Variable positions making up `source`, checked against this distribution.
    pub fn source_positions(&self, source: Source) -> Result<Vec<usize>> {
        if source.max_index() > self.num_predictors() {
            return Err(Error::PredictorOutOfRange {
                index: source.max_index(),
                max: self.num_predictors(),
            });
        }
        Ok(source.indices().collect())
    }

    pub(crate) fn project(&self, vars: &[usize]) -> BTreeMap<Vec<usize>, f64> {
        let mut out = BTreeMap::new();
        for (outcome, p) in &self.support {
            let key: Vec<usize> = vars.iter().map(|&v| outcome[v]).collect();
            *out.entry(key).or_insert(0.0) += p;
        }
        out
    }

    pub(crate) fn entropy_unchecked(&self, vars: &[usize]) -> f64 {
        self.project(vars)
            .values()
            .filter(|&&p| p > 0.0)
            .map(|&p| -p * log2(p))
            .sum()
    }

    /// Marginal over the given variable positions, kept in ascending order.
    pub fn marginal(&self, vars: &[usize]) -> Result<JointDistribution> {
        if vars.is_empty() {
            return Err(Error::EmptyVariableSet);
        }
        self.check_positions(vars)?;
        let keep: Vec<usize> = vars
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Ok(JointDistribution {
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
            alphabets: keep.iter().map(|&v| self.alphabets[v].clone()).collect(),
            support: self.project(&keep).into_iter().collect(),
        })
    }

    /// Reorders variables so that new position `k` holds old position `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<JointDistribution> {
        self.check_positions(order)?;
        let distinct: BTreeSet<_> = order.iter().collect();
        if order.len() != self.num_variables() || distinct.len() != order.len() {
            return Err(Error::VariableCount {
                count: distinct.len(),
                min: self.num_variables(),
                max: self.num_variables(),
            });
        }
        let mut support: Vec<_> = self
            .support
            .iter()
            .map(|(o, p)| (order.iter().map(|&v| o[v]).collect::<Vec<_>>(), *p))
            .collect();
        support.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(JointDistribution {
            names: order.iter().map(|&v| self.names[v].clone()).collect(),
            alphabets: order.iter().map(|&v| self.alphabets[v].clone()).collect(),
            support,
        })
    }

    /// Moves variable `target` to position 0, keeping the others in order.
    pub fn with_target(&self, target: usize) -> Result<JointDistribution> {
        self.check_positions(&[target])?;
        let order: Vec<usize> = core::iter::once(target)
            .chain((0..self.num_variables()).filter(|&v| v != target))
            .collect();
        self.permuted(&order)
    }

    /// `p(query | event)` for partial assignments of `(position, symbol index)`.
    pub fn conditional_prob(
        &self,
        event: &[(usize, usize)],
        query: &[(usize, usize)],
    ) -> Result<f64> {
        for &(position, index) in event.iter().chain(query) {
            self.check_positions(&[position])?;
            if index >= self.alphabets[position].len() {
                return Err(Error::SymbolOutOfRange {
                    variable: position,
                    index,
                });
            }
        }
        let matches = |o: &[usize], a: &[(usize, usize)]| a.iter().all(|&(v, x)| o[v] == x);
        let mut p_event = 0.0;
        let mut p_both = 0.0;
        for (o, p) in &self.support {
            if matches(o, event) {
                p_event += p;
                if matches(o, query) {
                    p_both += p;
                }
            }
        }
        if p_event <= 0.0 {
            return Err(Error::ZeroProbabilityEvent);
        }
        Ok((p_both / p_event).clamp(0.0, 1.0))
    }

    /// Joint entropy of the given positions in bits. The empty set has entropy 0.
    pub fn entropy(&self, vars: &[usize]) -> Result<f64> {
        self.check_positions(vars)?;
        Ok(self.entropy_unchecked(vars))
    }

    /// Probabilities `p(s)` indexed by target symbol.
    pub fn target_marginal(&self) -> Vec<f64> {
        let mut out = alloc::vec![0.0; self.alphabets[0].len()];
        for (o, p) in &self.support {
            out[o[0]] += p;
        }
        out
    }

    /// `I(S; A)` in bits.
    pub fn mutual_information(&self, source: Source) -> Result<f64> {
        let positions = self.source_positions(source)?;
        let mut joint = alloc::vec![0];
        joint.extend_from_slice(&positions);
        let mi = self.entropy_unchecked(&[0]) + self.entropy_unchecked(&positions)
            - self.entropy_unchecked(&joint);
        Ok(mi.max(0.0))
    }

    /// `p(s, a)` keyed by source outcome, for every target symbol.
    pub(crate) fn target_source_joint(
        &self,
        positions: &[usize],
    ) -> BTreeMap<Vec<usize>, Vec<f64>> {
        let width = self.alphabets[0].len();
        let mut out: BTreeMap<Vec<usize>, Vec<f64>> = BTreeMap::new();
        for (o, p) in &self.support {
            let key: Vec<usize> = positions.iter().map(|&v| o[v]).collect();
            out.entry(key).or_insert_with(|| alloc::vec![0.0; width])[o[0]] += p;
        }
        out
    }

    /// Specific information `I(S=s; A)` for every target symbol at once.
    ///
    /// Entries for symbols outside the support are `None`.
    pub fn specific_information_profile(&self, source: Source) -> Result<Vec<Option<f64>>> {
        let positions = self.source_positions(source)?;
        let p_s = self.target_marginal();
        let mut acc = alloc::vec![0.0; p_s.len()];
        for row in self.target_source_joint(&positions).values() {
            let p_a: f64 = row.iter().sum();
            for (s, &p_sa) in row.iter().enumerate() {
                if p_sa > 0.0 {
                    acc[s] += p_sa / p_s[s] * log2(p_sa / (p_s[s] * p_a));
                }
            }
        }
        Ok(p_s
            .iter()
            .zip(acc)
            .map(|(&p, v)| (p > 0.0).then(|| v.max(0.0)))
            .collect())
    }

    /// `I(S=s; A)`: the expected reduction in surprise of target symbol `s`
    /// once `A` is observed. Equal to `D(p(a|s) || p(a))`, hence nonnegative.
    pub fn specific_information(&self, s: usize, source: Source) -> Result<f64> {
        if s >= self.alphabets[0].len() {
            return Err(Error::SymbolOutOfRange {
                variable: 0,
                index: s,
            });
        }
        self.specific_information_profile(source)?[s].ok_or(Error::OutcomeNotInSupport(s))
    }

    /// `i_r(r) = H(S) - H(S | A = r)`. May be negative.
    pub fn response_specific_information(&self, response: &[usize], source: Source) -> Result<f64> {
        let positions = self.source_positions(source)?;
        if response.len() != positions.len() {
            return Err(Error::Arity {
                expected: positions.len(),
                found: response.len(),
            });
        }
        let joint = self.target_source_joint(&positions);
        let row = joint
            .get(response)
            .ok_or_else(|| Error::ResponseNotInSupport(response.to_vec()))?;
        Ok(self.entropy_unchecked(&[0]) - conditional_entropy_row(row))
    }

    /// `i_s(s) = sum_r p(r|s) i_r(r)`.
    pub fn stimulus_specific_information(&self, s: usize, source: Source) -> Result<f64> {
        let positions = self.source_positions(source)?;
        let p_s = self.target_marginal();
        match p_s.get(s) {
            None => {
                return Err(Error::SymbolOutOfRange {
                    variable: 0,
                    index: s,
                })
            }
            Some(&p) if p <= 0.0 => return Err(Error::OutcomeNotInSupport(s)),
            _ => {}
        }
        let h_s = self.entropy_unchecked(&[0]);
        Ok(self
            .target_source_joint(&positions)
            .values()
            .filter(|row| row[s] > 0.0)
            .map(|row| row[s] / p_s[s] * (h_s - conditional_entropy_row(row)))
            .sum())
    }

    /// Every equiprobable distribution whose support is a subset of the full
    /// outcome grid with between `min_support` and `max_support` outcomes.
    ///
    /// Grids are limited to 20 cells.
    pub fn equiprobable_supports(
        names: &[&str],
        sizes: &[usize],
        min_support: usize,
        max_support: usize,
    ) -> Result<Vec<JointDistribution>> {
        let cells: Vec<Vec<usize>> = sizes.iter().fold(alloc::vec![Vec::new()], |acc, &k| {
            acc.into_iter()
                .flat_map(|prefix| {
                    (0..k).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect()
        });
        if cells.len() > 20 {
            return Err(Error::SearchTooLarge(cells.len()));
        }
        let mut out = Vec::new();
        for subset in 1u32..(1 << cells.len()) {
            let k = subset.count_ones() as usize;
            if k < min_support.max(1) || k > max_support {
                continue;
            }
            let p = 1.0 / k as f64;
            let entries = cells
                .iter()
                .enumerate()
                .filter(|(i, _)| subset & (1 << i) != 0)
                .map(|(_, c)| (c.clone(), p));
            out.push(Self::with_integer_alphabets(names, sizes, entries)?);
        }
        Ok(out)
    }
}

/// `H(S | A = a)` from a row of `p(s, a)` values.
fn conditional_entropy_row(row: &[f64]) -> f64 {
    let p_a: f64 = row.iter().sum();
    row.iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| {
            let q = p / p_a;
            -q * log2(q)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems;

    const EPS: f64 = 1e-9;

    fn src(ix: &[usize]) -> Source {
        Source::new(ix.iter().copied()).unwrap()
    }

    #[test]
    fn source_rejects_bad_indices() {
        assert_eq!(Source::new([]), Err(Error::EmptySource));
        assert_eq!(Source::new([1, 1]), Err(Error::DuplicateIndex(1)));
        assert!(matches!(
            Source::new([0]),
            Err(Error::PredictorOutOfRange { .. })
        ));
        assert_eq!(src(&[3, 1]).to_string(), "13");
    }

    #[test]
    fn source_order_is_size_then_lex() {
        let mut v = alloc::vec![src(&[2, 3]), src(&[3]), src(&[1, 2]), src(&[1])];
        v.sort();
        assert_eq!(
            v,
            alloc::vec![src(&[1]), src(&[3]), src(&[1, 2]), src(&[2, 3])]
        );
    }

    #[test]
    fn rejects_malformed_pmfs() {
        let bad_sum =
            JointDistribution::with_integer_alphabets(&["S"], &[2], [(alloc::vec![0], 0.7)]);
        assert!(matches!(bad_sum, Err(Error::NotNormalized(_))));
        let negative = JointDistribution::with_integer_alphabets(
            &["S"],
            &[2],
            [(alloc::vec![0], 1.5), (alloc::vec![1], -0.5)],
        );
        assert_eq!(negative, Err(Error::InvalidProbability(-0.5)));
        let arity = JointDistribution::with_integer_alphabets(
            &["S", "R"],
            &[2, 2],
            [(alloc::vec![0], 1.0)],
        );
        assert!(matches!(arity, Err(Error::Arity { .. })));
        let range =
            JointDistribution::with_integer_alphabets(&["S"], &[2], [(alloc::vec![2], 1.0)]);
        assert!(matches!(range, Err(Error::SymbolOutOfRange { .. })));
        let dup = JointDistribution::with_integer_alphabets(
            &["S"],
            &[2],
            [(alloc::vec![0], 0.5), (alloc::vec![0], 0.5)],
        );
        assert!(matches!(dup, Err(Error::DuplicateOutcome(_))));
    }

    #[test]
    fn structural_zeros_leave_the_support() {
        let d = JointDistribution::with_integer_alphabets(
            &["S"],
            &[3],
            [
                (alloc::vec![0], 0.5),
                (alloc::vec![1], 0.5),
                (alloc::vec![2], 1e-13),
            ],
        )
        .unwrap();
        assert_eq!(d.support().count(), 2);
        assert_eq!(d.prob(&[2]), 0.0);
        assert_eq!(d.target_marginal(), alloc::vec![0.5, 0.5, 0.0]);
    }

    #[test]
    fn marginals() {
        let xor = systems::xor();
        let s = xor.marginal(&[0]).unwrap();
        assert_eq!(s.num_variables(), 1);
        assert!((s.prob(&[0]) - 0.5).abs() < EPS && (s.prob(&[1]) - 0.5).abs() < EPS);
        assert_eq!(xor.marginal(&[0, 1, 2]).unwrap(), xor);

        let fig = systems::fig4a();
        let s = fig.marginal(&[0]).unwrap();
        for v in 0..3 {
            assert!((s.prob(&[v]) - 1.0 / 3.0).abs() < EPS);
        }
        assert_eq!(fig.marginal(&[]), Err(Error::EmptyVariableSet));
        assert!(matches!(
            fig.marginal(&[3]),
            Err(Error::VariableOutOfRange { .. })
        ));
    }

    #[test]
    fn conditional_probabilities() {
        let fig = systems::fig4a();
        assert!((fig.conditional_prob(&[(1, 1)], &[(0, 2)]).unwrap() - 1.0).abs() < EPS);
        let xor = systems::xor();
        assert!((xor.conditional_prob(&[(1, 0), (2, 0)], &[(0, 0)]).unwrap() - 1.0).abs() < EPS);
        // R1 and S are independent under XOR.
        assert!((xor.conditional_prob(&[(1, 1)], &[(0, 1)]).unwrap() - 0.5).abs() < EPS);
        let copies = systems::copies2();
        assert_eq!(
            copies.conditional_prob(&[(1, 0), (2, 1)], &[(0, 0)]),
            Err(Error::ZeroProbabilityEvent)
        );
    }

    #[test]
    fn entropies() {
        let xor = systems::xor();
        assert!((xor.entropy(&[0]).unwrap() - 1.0).abs() < EPS);
        let constant =
            JointDistribution::with_integer_alphabets(&["S"], &[2], [(alloc::vec![1], 1.0)])
                .unwrap();
        assert_eq!(constant.entropy(&[0]).unwrap(), 0.0);
        let fig = systems::fig4a();
        assert!((fig.entropy(&[0]).unwrap() - log2(3.0)).abs() < EPS);
    }

    #[test]
    fn mutual_information_examples() {
        let fig = systems::fig4a();
        let expected = -(1.0 / 3.0) * log2(1.0 / 3.0) - (2.0 / 3.0) * log2(2.0 / 3.0);
        assert!((fig.mutual_information(src(&[1])).unwrap() - expected).abs() < EPS);
        assert!((fig.mutual_information(src(&[2])).unwrap() - expected).abs() < EPS);
        let xor = systems::xor();
        assert!(xor.mutual_information(src(&[1])).unwrap().abs() < EPS);
        assert!((xor.mutual_information(src(&[1, 2])).unwrap() - 1.0).abs() < EPS);
        assert!(matches!(
            xor.mutual_information(src(&[3])),
            Err(Error::PredictorOutOfRange { index: 3, max: 2 })
        ));
    }

    #[test]
    fn specific_information_examples() {
        let fig = systems::fig4a();
        let log3 = log2(3.0);
        assert!((fig.specific_information(2, src(&[1])).unwrap() - log3).abs() < EPS);
        assert!((fig.specific_information(0, src(&[1])).unwrap() - (log3 - 1.0)).abs() < EPS);
        let xor = systems::xor();
        for s in 0..2 {
            assert!(xor.specific_information(s, src(&[2])).unwrap().abs() < EPS);
        }
        let d = JointDistribution::with_integer_alphabets(
            &["S", "R"],
            &[3, 2],
            [(alloc::vec![0, 0], 0.5), (alloc::vec![1, 1], 0.5)],
        )
        .unwrap();
        assert_eq!(
            d.specific_information(2, src(&[1])),
            Err(Error::OutcomeNotInSupport(2))
        );
    }

    #[test]
    fn response_and_stimulus_specific_information() {
        let copies = systems::copies2();
        for r in 0..2 {
            assert!(
                (copies
                    .response_specific_information(&[r], src(&[1]))
                    .unwrap()
                    - 1.0)
                    .abs()
                    < EPS
            );
            assert!(
                (copies.stimulus_specific_information(r, src(&[1])).unwrap() - 1.0).abs() < EPS
            );
        }
        let xor = systems::xor();
        assert!(
            xor.response_specific_information(&[0], src(&[1]))
                .unwrap()
                .abs()
                < EPS
        );
        assert!(
            xor.stimulus_specific_information(1, src(&[1]))
                .unwrap()
                .abs()
                < EPS
        );

        let fig = systems::fig4a();
        let log3 = log2(3.0);
        assert!((fig.response_specific_information(&[1], src(&[1])).unwrap() - log3).abs() < EPS);
        assert!(
            (fig.stimulus_specific_information(0, src(&[1])).unwrap() - (log3 - 1.0)).abs() < EPS
        );
        assert_eq!(
            fig.response_specific_information(&[1, 1], src(&[1, 2])),
            Err(Error::ResponseNotInSupport(alloc::vec![1, 1]))
        );
    }

    #[test]
    fn retargeting_moves_the_variable_first() {
        let fig = systems::fig4a();
        let r1 = fig.with_target(1).unwrap();
        assert_eq!(r1.variable_names(), &["R1", "S", "R2"]);
        assert!((r1.prob(&[1, 2, 0]) - 1.0 / 3.0).abs() < EPS);
        assert!((r1.entropy(&[0, 1, 2]).unwrap() - fig.entropy(&[0, 1, 2]).unwrap()).abs() < EPS);
    }

    #[test]
    fn equiprobable_search_counts_subsets() {
        let all = JointDistribution::equiprobable_supports(&["S", "R"], &[2, 2], 1, 4).unwrap();
        assert_eq!(all.len(), 15);
        let pairs = JointDistribution::equiprobable_supports(&["S", "R"], &[2, 2], 2, 2).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(matches!(
            JointDistribution::equiprobable_supports(&["A", "B"], &[5, 5], 1, 2),
            Err(Error::SearchTooLarge(25))
        ));
    }
}
