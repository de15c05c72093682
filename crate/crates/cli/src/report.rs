//! Text, JSON and DOT renderings of decompositions and lattices.

use std::fmt::Write;

use pid_core::{InteractionReport, PIDecomposition, RedundancyLattice};
use serde_json::{json, Map, Value};

/// Output unit; values are computed in bits and only rescaled here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Unit {
    #[default]
    Bits,
    Nats,
}

impl Unit {
    pub fn scale(self, bits: f64) -> f64 {
        match self {
            Unit::Bits => bits,
            Unit::Nats => bits * std::f64::consts::LN_2,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Unit::Bits => "bits",
            Unit::Nats => "nats",
        }
    }
}

/// Rounds to six decimals and folds `-0` into `0`.
pub fn round6(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn number(x: f64) -> Value {
    json!(round6(x))
}

fn labelled<F: Fn(usize) -> f64>(
    lattice: &RedundancyLattice,
    unit: Unit,
    value: F,
) -> Map<String, Value> {
    lattice
        .ids()
        .map(|id| {
            (
                lattice.node(id).label(),
                number(unit.scale(value(id.index()))),
            )
        })
        .collect()
}

/// `{"target", "total_<unit>", "atoms", "imin"}` in lattice order.
pub fn decomposition_json(target: &str, pid: &PIDecomposition, unit: Unit) -> Value {
    let lattice = pid.lattice();
    let mut out = Map::new();
    out.insert("target".into(), json!(target));
    out.insert(
        format!("total_{}", unit.suffix()),
        number(unit.scale(pid.total())),
    );
    out.insert(
        "atoms".into(),
        Value::Object(labelled(lattice, unit, |k| pid.atoms()[k])),
    );
    out.insert(
        "imin".into(),
        Value::Object(labelled(lattice, unit, |k| pid.imins()[k])),
    );
    Value::Object(out)
}

pub fn decomposition_table(target: &str, pid: &PIDecomposition, unit: Unit) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "target: {target}");
    let _ = writeln!(
        out,
        "total_{}: {:.6}",
        unit.suffix(),
        round6(unit.scale(pid.total()))
    );
    let _ = writeln!(out, "node atom imin");
    for (_, node, imin, atom) in pid.iter() {
        let _ = writeln!(
            out,
            "{node} {:.6} {:.6}",
            round6(unit.scale(atom)),
            round6(unit.scale(imin))
        );
    }
    out
}

fn annotation(
    pid: &PIDecomposition,
    unit: Unit,
) -> impl Fn(pid_core::NodeId) -> Option<String> + '_ {
    move |id| {
        Some(format!(
            "Π={:.6} I_min={:.6}",
            round6(unit.scale(pid.atom(id))),
            round6(unit.scale(pid.imin(id)))
        ))
    }
}

pub fn lattice_dot(
    lattice: &RedundancyLattice,
    pid: Option<&PIDecomposition>,
    unit: Unit,
) -> String {
    match pid {
        Some(pid) => lattice.to_dot_with(annotation(pid, unit)),
        None => lattice.to_dot(),
    }
}

/// `{"nodes", "covers"}`, plus `"atoms"`/`"imin"` when annotated.
pub fn lattice_json(
    lattice: &RedundancyLattice,
    pid: Option<&PIDecomposition>,
    unit: Unit,
) -> Value {
    let nodes: Vec<String> = lattice.nodes().iter().map(|n| n.label()).collect();
    let covers: Vec<[String; 2]> = lattice
        .cover_edges()
        .map(|(c, p)| [lattice.node(c).label(), lattice.node(p).label()])
        .collect();
    let mut out = Map::new();
    out.insert("nodes".into(), json!(nodes));
    out.insert("covers".into(), json!(covers));
    if let Some(pid) = pid {
        out.insert(
            "atoms".into(),
            Value::Object(labelled(lattice, unit, |k| pid.atoms()[k])),
        );
        out.insert(
            "imin".into(),
            Value::Object(labelled(lattice, unit, |k| pid.imins()[k])),
        );
    }
    Value::Object(out)
}

fn signature_maps(
    report: &InteractionReport,
    unit: Unit,
) -> (Map<String, Value>, Map<String, Value>) {
    let lattice = report.signature.lattice();
    let mut signature = Map::new();
    let mut signed = Map::new();
    for id in lattice.ids() {
        let c = report.signature.coefficient(id);
        if c != 0 {
            let label = lattice.node(id).label();
            signature.insert(label.clone(), json!(c));
            signed.insert(label, number(unit.scale(report.signed_atoms[id.index()])));
        }
    }
    (signature, signed)
}

/// `{"interaction_<unit>", "signature", "signed_atoms"}` over the nonzero coefficients.
pub fn interaction_json(report: &InteractionReport, unit: Unit) -> Value {
    let (signature, signed) = signature_maps(report, unit);
    let mut out = Map::new();
    out.insert(
        format!("interaction_{}", unit.suffix()),
        number(unit.scale(report.interaction_bits)),
    );
    out.insert("signature".into(), Value::Object(signature));
    out.insert("signed_atoms".into(), Value::Object(signed));
    Value::Object(out)
}

pub fn interaction_table(report: &InteractionReport, unit: Unit) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "interaction_{}: {:+.6}",
        unit.suffix(),
        round6(unit.scale(report.interaction_bits))
    );
    if let Some(balance) = &report.balance {
        let _ = writeln!(out, "synergy: {:.6}", round6(unit.scale(balance.synergy)));
        let _ = writeln!(
            out,
            "redundancy: {:.6}",
            round6(unit.scale(balance.redundancy))
        );
        let _ = writeln!(
            out,
            "synergy_minus_redundancy: {:+.6}",
            round6(unit.scale(balance.difference))
        );
    }
    let _ = writeln!(out, "node coefficient signed_atom");
    let lattice = report.signature.lattice();
    for id in lattice.ids() {
        let c = report.signature.coefficient(id);
        if c != 0 {
            let v = round6(unit.scale(report.signed_atoms[id.index()]));
            let _ = writeln!(out, "{} {c:+} {v:.6}", lattice.node(id));
        }
    }
    out
}
