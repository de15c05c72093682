mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use pid_core::interaction::interaction_information_alternating;
use pid_core::pid::{SpecificInformationTable, DEFAULT_ZERO_TOLERANCE};
use pid_core::{
    asymmetry_report, atom_signature, decompose, decompose_pruned, interaction_information,
    pi_recursive, systems, JointDistribution, RedundancyLattice, Source, SourceCollection,
};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn node(label: &str) -> SourceCollection {
    label.parse().expect("valid label")
}

fn close(what: &str, found: f64, expected: f64, tol: f64) -> Check {
    if (found - expected).abs() <= tol {
        Ok(())
    } else {
        Err(format!(
            "{what}: found {found:.12}, expected {expected:.12}"
        ))
    }
}

fn ensure(cond: bool, what: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn err(e: pid_core::Error) -> String {
    e.to_string()
}

/// Every atom equals `expected` on the listed node and zero elsewhere.
fn single_atom(d: &JointDistribution, label: &str, tol: f64) -> Check {
    let pid = decompose(d).map_err(err)?;
    let target = node(label);
    for (_, n, _, atom) in pid.iter() {
        let expected = if *n == target { 1.0 } else { 0.0 };
        close(&format!("atom {n}"), atom, expected, tol)?;
    }
    Ok(())
}

fn fig4a_golden() -> Check {
    let start = Instant::now();
    let d = systems::fig4a();
    let pid = decompose(&d).map_err(err)?;
    let third: f64 = 1.0 / 3.0;
    let mi = -third * third.log2() - 2.0 * third * (2.0 * third).log2();
    for r in 1..=2 {
        let source = Source::singleton(r).map_err(err)?;
        close(
            &format!("I(S;R{r})"),
            d.mutual_information(source).map_err(err)?,
            mi,
            1e-9,
        )?;
    }
    close(
        "Pi {1}",
        pid.atom_of(&node("{1}")).map_err(err)?,
        third,
        1e-9,
    )?;
    close(
        "Pi {2}",
        pid.atom_of(&node("{2}")).map_err(err)?,
        third,
        1e-9,
    )?;
    close(
        "Pi {1}{2}",
        pid.atom_of(&node("{1}{2}")).map_err(err)?,
        3f64.log2() - 1.0,
        1e-9,
    )?;
    close(
        "Pi {12}",
        pid.atom_of(&node("{12}")).map_err(err)?,
        third,
        1e-9,
    )?;
    ensure(start.elapsed() < Duration::from_secs(1), "runtime over 1 s")
}

fn fig4a_completeness() -> Check {
    let d = systems::fig4a();
    let pid = decompose(&d).map_err(err)?;
    let sum: f64 = pid.atoms().iter().sum();
    close("atom sum", sum, 3f64.log2(), 1e-9)?;
    close("total", pid.total(), 3f64.log2(), 1e-9)?;
    let unique = pid.atom_of(&node("{1}")).map_err(err)?;
    let shared = pid.atom_of(&node("{1}{2}")).map_err(err)?;
    let mi = d
        .mutual_information(Source::singleton(1).map_err(err)?)
        .map_err(err)?;
    close("I(S;R1) split", unique + shared, mi, 1e-9)
}

fn xor_system() -> Check {
    let d = systems::xor();
    single_atom(&d, "{12}", 1e-12)?;
    close(
        "interaction",
        interaction_information(&d).map_err(err)?,
        1.0,
        1e-12,
    )
}

fn counterexample_pair() -> Check {
    let parity = systems::parity3();
    let copy = systems::copy3();
    close(
        "parity interaction",
        interaction_information(&parity).map_err(err)?,
        1.0,
        1e-9,
    )?;
    close(
        "copy interaction",
        interaction_information(&copy).map_err(err)?,
        1.0,
        1e-9,
    )?;
    single_atom(&parity, "{123}", 1e-9)?;
    single_atom(&copy, "{1}{2}{3}", 1e-9)
}

fn lattice_sizes() -> Check {
    for (n, expected) in [(1, 1), (2, 4), (3, 18), (4, 166)] {
        let size = RedundancyLattice::build(n).map_err(err)?.len();
        ensure(size == expected, format!("|R|={n}: {size} nodes"))?;
    }
    let start = Instant::now();
    let size = RedundancyLattice::build(5).map_err(err)?.len();
    let elapsed = start.elapsed();
    ensure(size == 7579, format!("|R|=5: {size} nodes"))?;
    ensure(
        elapsed < Duration::from_secs(60),
        format!("|R|=5 took {elapsed:?}"),
    )
}

fn property_suite(corpus: &[JointDistribution]) -> Check {
    let lattices: Vec<Arc<RedundancyLattice>> = (0..=3)
        .map(|n| Arc::new(RedundancyLattice::build(n.max(1)).unwrap()))
        .collect();
    for (k, d) in corpus.iter().enumerate() {
        let lattice = &lattices[d.num_predictors()];
        let recursive = pi_recursive(d, lattice.clone()).map_err(err)?;
        let table = SpecificInformationTable::new(d).map_err(err)?;
        for id in lattice.ids() {
            let n = lattice.node(id);
            let atom = recursive.atom(id);
            ensure(atom >= -1e-8, format!("pmf {k}: negative atom on {n}"))?;
            let down: f64 = lattice.down_set_ids(id).map(|b| recursive.atom(b)).sum();
            close(
                &format!("pmf {k}: Mobius sum on {n}"),
                down,
                recursive.imin(id),
                1e-8,
            )?;
            let closed = table.pi_closed_form(lattice, n).map_err(err)?;
            let incl = table.pi_inclusion_exclusion(lattice, n).map_err(err)?;
            close(&format!("pmf {k}: closed form on {n}"), closed, atom, 1e-8)?;
            close(
                &format!("pmf {k}: inclusion-exclusion on {n}"),
                incl,
                atom,
                1e-8,
            )?;
            close(
                &format!("pmf {k}: closed vs incl on {n}"),
                incl,
                closed,
                1e-8,
            )?;
        }
        for (child, parent) in lattice.cover_edges() {
            ensure(
                recursive.imin(child) <= recursive.imin(parent) + 1e-12,
                format!(
                    "pmf {k}: I_min not monotone on {} -> {}",
                    lattice.node(child),
                    lattice.node(parent)
                ),
            )?;
        }
        for mask in 1..(1u32 << d.num_predictors()) {
            let source = Source::from_mask(mask).expect("nonempty");
            let mi = d.mutual_information(source).map_err(err)?;
            let marginal = d
                .marginal(&d.source_positions(source).map_err(err)?)
                .map_err(err)?;
            let mut by_response = 0.0;
            for (r, p) in marginal.support() {
                by_response += p * d.response_specific_information(r, source).map_err(err)?;
            }
            let target = d.target_marginal();
            let mut by_stimulus = 0.0;
            let mut by_specific = 0.0;
            for (s, &p) in target.iter().enumerate().filter(|(_, &p)| p > 0.0) {
                by_stimulus += p * d.stimulus_specific_information(s, source).map_err(err)?;
                by_specific += p * d.specific_information(s, source).map_err(err)?;
            }
            close(
                &format!("pmf {k}: response-specific {source}"),
                by_response,
                mi,
                1e-9,
            )?;
            close(
                &format!("pmf {k}: stimulus-specific {source}"),
                by_stimulus,
                mi,
                1e-9,
            )?;
            close(
                &format!("pmf {k}: specific {source}"),
                by_specific,
                mi,
                1e-9,
            )?;
        }
    }
    Ok(())
}

fn meet_join_oracle() -> Check {
    let lattice = RedundancyLattice::build(3).map_err(err)?;
    let nodes = lattice.nodes();
    let le = |a: &SourceCollection, b: &SourceCollection| a.precedes(b);
    for a in nodes {
        for b in nodes {
            let lower: Vec<&SourceCollection> =
                nodes.iter().filter(|x| le(x, a) && le(x, b)).collect();
            let inf = lower
                .iter()
                .find(|x| lower.iter().all(|y| le(y, x)))
                .copied();
            let upper: Vec<&SourceCollection> =
                nodes.iter().filter(|x| le(a, x) && le(b, x)).collect();
            let sup = upper
                .iter()
                .find(|x| upper.iter().all(|y| le(x, y)))
                .copied();
            ensure(inf == Some(&a.meet(b)), format!("meet {a} {b}"))?;
            ensure(sup == Some(&a.join(b)), format!("join {a} {b}"))?;
        }
    }
    Ok(())
}

fn interaction_signature(corpus: &[JointDistribution]) -> Check {
    let two = atom_signature(2).map_err(err)?;
    let expected2 = [("{12}", 1), ("{1}{2}", -1)];
    let found2: Vec<(String, i64)> = two.nonzero().map(|(n, c)| (n.label(), c)).collect();
    ensure(
        found2.len() == 2
            && expected2
                .iter()
                .all(|(l, c)| found2.contains(&(l.to_string(), *c))),
        format!("|R|=2 signature {found2:?}"),
    )?;
    let three = atom_signature(3).map_err(err)?;
    let expected3 = [
        ("{123}", 1),
        ("{12}{13}", -1),
        ("{12}{23}", -1),
        ("{13}{23}", -1),
        ("{12}{13}{23}", -2),
        ("{1}{23}", -1),
        ("{2}{13}", -1),
        ("{3}{12}", -1),
        ("{1}{2}{3}", 1),
    ];
    let found3: Vec<(String, i64)> = three.nonzero().map(|(n, c)| (n.label(), c)).collect();
    ensure(
        found3.len() == 9
            && expected3
                .iter()
                .all(|(l, c)| found3.contains(&(l.to_string(), *c))),
        format!("|R|=3 signature {found3:?}"),
    )?;
    for (k, d) in corpus.iter().enumerate() {
        let signature = if d.num_predictors() == 2 {
            &two
        } else {
            &three
        };
        let pid = decompose(d).map_err(err)?;
        let signed = signature.apply(&pid).map_err(err)?;
        let direct = interaction_information(d).map_err(err)?;
        close(&format!("pmf {k}: signed atoms"), signed, direct, 1e-8)?;
        let flat = interaction_information_alternating(d).map_err(err)?;
        close(&format!("pmf {k}: alternating form"), flat, direct, 1e-8)?;
    }
    Ok(())
}

fn pruning(corpus: &[JointDistribution]) -> Check {
    let named = [
        systems::fig4a(),
        systems::xor(),
        systems::copies2(),
        systems::parity3(),
        systems::copy3(),
    ];
    for (k, d) in corpus.iter().chain(named.iter()).enumerate() {
        let full = decompose(d).map_err(err)?;
        let pruned = decompose_pruned(d, DEFAULT_ZERO_TOLERANCE).map_err(err)?;
        for (id, n, _, atom) in full.iter() {
            close(
                &format!("distribution {k}: {n}"),
                pruned.decomposition.atom(id),
                atom,
                1e-10,
            )?;
        }
    }
    let xor = decompose_pruned(&systems::xor(), DEFAULT_ZERO_TOLERANCE).map_err(err)?;
    ensure(xor.skipped >= 1, format!("xor skipped {}", xor.skipped))
}

fn asymmetry() -> Check {
    let report = asymmetry_report(&systems::fig4a()).map_err(err)?;
    let about = |name: &str| {
        report
            .iter()
            .find(|t| t.target == name)
            .map(|t| t.decomposition.synergy())
            .ok_or_else(|| format!("no decomposition for {name}"))
    };
    close("synergy about S", about("S")?, 1.0 / 3.0, 1e-9)?;
    close("synergy about R1", about("R1")?, 0.0, 1e-9)
}

fn balanced_system() -> Check {
    let found = systems::balanced_candidates().map_err(err)?;
    ensure(!found.is_empty(), "no balanced system in the search space")?;
    for d in &found {
        let pid = decompose(d).map_err(err)?;
        close("redundancy", pid.redundancy(), 0.5, 1e-9)?;
        close("synergy", pid.synergy(), 0.5, 1e-9)?;
        close(
            "interaction",
            interaction_information(d).map_err(err)?,
            0.0,
            1e-9,
        )?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let corpus = common::property_corpus();
    let criteria: Vec<Criterion> = vec![
        ("1 fig4a golden values", Box::new(fig4a_golden)),
        ("2 fig4a atom completeness", Box::new(fig4a_completeness)),
        ("3 xor synergy", Box::new(xor_system)),
        ("4 parity vs copy", Box::new(counterexample_pair)),
        ("5 lattice cardinalities", Box::new(lattice_sizes)),
        (
            "6 property suite (1000 pmfs)",
            Box::new(|| property_suite(&corpus)),
        ),
        ("7 meet/join oracle", Box::new(meet_join_oracle)),
        (
            "8 interaction signature",
            Box::new(|| interaction_signature(&corpus)),
        ),
        ("9 pruning equivalence", Box::new(|| pruning(&corpus))),
        ("10 target asymmetry", Box::new(asymmetry)),
        (
            "balanced redundancy/synergy system",
            Box::new(balanced_system),
        ),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS  {name} ({:.2?})", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
