//! Reports in two renderings: JSON values and human-readable text.
//!
//! Coefficients are rendered as exact strings (`"3"`, `"-1/2"`) in JSON.

use std::collections::BTreeMap;
use std::fmt::Write;

use hypergraph_homology::homology::{
    GraphLikenessReport, HomologyReport, IntegerDecomposition, RationalDecomposition, Witness,
};
use hypergraph_homology::spanning_tree::{SpanningTree, TreeAxiomReport};
use hypergraph_homology::{Chain, Cochain, ModuleStructure, OrientedHypergraph, Violation};
use serde_json::{json, Value};

fn coefficients<I: IntoIterator<Item = num_rational::BigRational>>(values: I) -> Vec<String> {
    values.into_iter().map(|q| q.to_string()).collect()
}

fn chain_json(c: &Chain) -> Value {
    json!(coefficients(c.to_dense()))
}

fn cochain_json(c: &Cochain) -> Value {
    json!(coefficients(c.to_dense()))
}

fn chains_json(cs: &[Chain]) -> Value {
    Value::Array(cs.iter().map(chain_json).collect())
}

fn keyed_json(map: &BTreeMap<usize, Chain>) -> Value {
    Value::Object(map.iter().map(|(k, c)| (k.to_string(), chain_json(c))).collect())
}

fn module_json(m: &ModuleStructure) -> Value {
    json!({
        "free_rank": m.free_rank,
        "torsion": m.torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "display": m.to_string(),
    })
}

/// `2·e0 - e1 + 1/2·e3`, with `0` for the zero chain.
fn linear_combination(prefix: &str, names: &[String], values: &[num_rational::BigRational]) -> String {
    use num_traits::{One, Signed, Zero};
    let mut out = String::new();
    for (name, q) in names.iter().zip(values).filter(|(_, q)| !q.is_zero()) {
        let sign = if q.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if q.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let abs = q.abs();
        if !abs.is_one() {
            let _ = write!(out, "{abs}·");
        }
        let _ = write!(out, "{prefix}{name}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn edge_names(h: &OrientedHypergraph) -> Vec<String> {
    (0..h.edge_count()).map(|e| format!("e{e}")).collect()
}

fn edge_text(h: &OrientedHypergraph, c: &Chain) -> String {
    linear_combination("", &edge_names(h), &c.to_dense())
}

fn edge_cochain_text(h: &OrientedHypergraph, c: &Cochain) -> String {
    linear_combination("ψ_", &edge_names(h), &c.to_dense())
}

pub fn validation_json(h: Option<&OrientedHypergraph>, violations: &[Violation]) -> Value {
    json!({
        "valid": violations.is_empty(),
        "vertices": h.map(|h| h.vertex_count()),
        "edges": h.map(|h| h.edge_count()),
        "violations": violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

pub fn validation_text(h: Option<&OrientedHypergraph>, violations: &[Violation]) -> String {
    match h {
        Some(h) => format!("valid: {} vertices, {} edges\n", h.vertex_count(), h.edge_count()),
        None => {
            let mut out = String::from("invalid:\n");
            for v in violations {
                let _ = writeln!(out, "  - {v}");
            }
            out
        }
    }
}

pub fn homology_json(r: &HomologyReport) -> Value {
    json!({
        "ring": r.ring.to_string(),
        "cycle_basis": chains_json(&r.cycle_basis),
        "h1": module_json(&r.h1),
        "h1_cohomology": module_json(&r.h1_cohomology),
        "boundary_rank": r.boundary_rank,
    })
}

pub fn homology_text(h: &OrientedHypergraph, r: &HomologyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", r.ring);
    let _ = writeln!(out, "rank of boundary: {}", r.boundary_rank);
    let _ = writeln!(out, "H1 = {}", r.h1);
    let _ = writeln!(out, "H^1 = {}", r.h1_cohomology);
    let _ = writeln!(out, "cycle basis:");
    if r.cycle_basis.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for c in &r.cycle_basis {
        let _ = writeln!(out, "  {}", edge_text(h, c));
    }
    out
}

fn axioms_json(a: &TreeAxiomReport) -> Value {
    json!({
        "partition": a.partition,
        "cut_kronecker": a.cut_kronecker,
        "cycle_kronecker": a.cycle_kronecker,
        "cycles_in_kernel": a.cycles_in_kernel,
        "cuts_are_coboundaries": a.cuts_are_coboundaries,
        "cuts_form_basis": a.cuts_form_basis,
        "cycles_form_basis": a.cycles_form_basis,
        "all_passed": a.all_passed(),
    })
}

pub fn tree_json(t: &SpanningTree, axioms: &TreeAxiomReport) -> Value {
    json!({
        "ring": t.ring().to_string(),
        "tree_edges": t.tree_edges(),
        "chords": t.chords(),
        "fundamental_cuts": keyed_json(t.fundamental_cuts()),
        "fundamental_cycles": keyed_json(t.fundamental_cycles()),
        "axioms": axioms_json(axioms),
    })
}

pub fn tree_text(h: &OrientedHypergraph, t: &SpanningTree, axioms: &TreeAxiomReport) -> String {
    let list = |v: &[usize]| v.iter().map(|e| format!("e{e}")).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    let _ = writeln!(out, "ring: {}", t.ring());
    let _ = writeln!(out, "tree edges: {{{}}}", list(t.tree_edges()));
    let _ = writeln!(out, "chords: {{{}}}", list(&t.chords()));
    let _ = writeln!(out, "fundamental cuts:");
    for (k, c) in t.fundamental_cuts() {
        let _ = writeln!(out, "  x_e{k} = {}", edge_text(h, c));
    }
    let _ = writeln!(out, "fundamental cycles:");
    for (k, c) in t.fundamental_cycles() {
        let _ = writeln!(out, "  x_e{k} = {}", edge_text(h, c));
    }
    let verdict = if axioms.all_passed() { "pass" } else { "FAIL" };
    let _ = writeln!(out, "tree axioms: {verdict}");
    out
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::AnnihilatorNotCoboundary(c) => json!({
            "kind": "annihilator_not_coboundary", "cochain": cochain_json(c),
        }),
        Witness::PerpNotInCutModule(c) => json!({
            "kind": "perp_not_in_cut_module", "chain": chain_json(c),
        }),
        Witness::ImageNotSaturated { chain, divisor } => json!({
            "kind": "image_not_saturated", "chain": chain_json(chain), "divisor": divisor.to_string(),
        }),
        Witness::RestrictionNotInjective { cochain, order } => json!({
            "kind": "restriction_not_injective", "cochain": cochain_json(cochain), "order": order.to_string(),
        }),
    }
}

fn witness_text(h: &OrientedHypergraph, w: &Witness) -> String {
    match w {
        Witness::AnnihilatorNotCoboundary(c) => {
            format!("{} vanishes on cycles but is not a coboundary", edge_cochain_text(h, c))
        }
        Witness::PerpNotInCutModule(c) => {
            format!("{} is orthogonal to cycles but not a cut", edge_text(h, c))
        }
        Witness::ImageNotSaturated { chain, divisor } => format!(
            "{} is not a boundary but {divisor} times it is",
            linear_combination("", h.vertices(), &chain.to_dense())
        ),
        Witness::RestrictionNotInjective { cochain, order } => format!(
            "[{}] has order {order} in H^1 and vanishes on cycles",
            edge_cochain_text(h, cochain)
        ),
    }
}

const CONDITION_NAMES: [&str; 5] = [
    "canonical_iso",
    "annihilator_equals_image",
    "cut_module_equals_cycle_perp",
    "boundary_image_direct_summand",
    "hom_iso",
];

pub fn graphlike_json(r: &GraphLikenessReport) -> Value {
    let mut obj = serde_json::Map::new();
    for (name, c) in CONDITION_NAMES.iter().zip(r.conditions()) {
        obj.insert(
            name.to_string(),
            json!({ "holds": c.holds, "witness": c.witness.as_ref().map(witness_json) }),
        );
    }
    obj.insert(
        "coboundary_image_direct_summand".into(),
        json!(r.coboundary_image_direct_summand),
    );
    obj.insert("h1".into(), module_json(&r.h1));
    obj.insert("h1_cohomology".into(), module_json(&r.h1_cohomology));
    obj.insert("graph_like".into(), json!(r.is_graph_like()));
    Value::Object(obj)
}

pub fn graphlike_text(h: &OrientedHypergraph, r: &GraphLikenessReport) -> String {
    const LABELS: [&str; 5] = [
        "(i)   H1 and H^1 canonically isomorphic",
        "(ii)  annihilator of cycles = Im δ⁰",
        "(iii) cut module = cycles^⊥",
        "(iv)  Im ∂₁ is a direct summand",
        "(v)   H^1 ≅ Hom(H1, Z)",
    ];
    let mut out = String::new();
    for (label, c) in LABELS.iter().zip(r.conditions()) {
        let _ = writeln!(out, "{label}: {}", c.holds);
        if let Some(w) = &c.witness {
            let _ = writeln!(out, "      witness: {}", witness_text(h, w));
        }
    }
    let _ = writeln!(out, "Im δ⁰ is a direct summand: {}", r.coboundary_image_direct_summand);
    let _ = writeln!(out, "H1 = {}, H^1 = {}", r.h1, r.h1_cohomology);
    let _ = writeln!(out, "graph-like: {}", r.is_graph_like());
    out
}

pub fn rational_decomposition_json(d: &RationalDecomposition) -> Value {
    json!({
        "ring": "rational",
        "cycles": chains_json(&d.cycles),
        "cuts": chains_json(&d.cuts),
        "orthogonal": d.orthogonal,
        "dimensions_add_up": d.dimensions_add_up,
        "spans_everything": d.spans_everything,
    })
}

pub fn integer_decomposition_json(d: &IntegerDecomposition) -> Value {
    json!({
        "ring": "integer",
        "cycles": chains_json(&d.cycles),
        "cuts": chains_json(&d.cuts),
        "intersection_trivial": d.intersection_trivial,
        "sum_is_everything": d.sum_is_everything,
        "sum_index": d.sum_index.as_ref().map(ToString::to_string),
        "edges_outside_sum": d.edges_outside_sum,
    })
}

fn basis_text(out: &mut String, h: &OrientedHypergraph, title: &str, chains: &[Chain]) {
    let _ = writeln!(out, "{title}:");
    if chains.is_empty() {
        let _ = writeln!(out, "  (none)");
    }
    for c in chains {
        let _ = writeln!(out, "  {}", edge_text(h, c));
    }
}

pub fn rational_decomposition_text(h: &OrientedHypergraph, d: &RationalDecomposition) -> String {
    let mut out = String::from("ring: rational\n");
    basis_text(&mut out, h, "cycle basis C", &d.cycles);
    basis_text(&mut out, h, "cut basis B", &d.cuts);
    let _ = writeln!(out, "C ⟂ B: {}", d.orthogonal);
    let _ = writeln!(out, "dim C + dim B = |E|: {}", d.dimensions_add_up);
    let _ = writeln!(out, "C + B = C1: {}", d.spans_everything);
    out
}

pub fn integer_decomposition_text(h: &OrientedHypergraph, d: &IntegerDecomposition) -> String {
    let mut out = String::from("ring: integer\n");
    basis_text(&mut out, h, "cycle basis C", &d.cycles);
    basis_text(&mut out, h, "cut basis B", &d.cuts);
    let _ = writeln!(out, "C ∩ B = 0: {}", d.intersection_trivial);
    let _ = writeln!(out, "C + B = C1: {}", d.sum_is_everything);
    if let Some(index) = &d.sum_index {
        let _ = writeln!(out, "[C1 : C + B] = {index}");
    }
    if !d.edges_outside_sum.is_empty() {
        let names: Vec<String> = d.edges_outside_sum.iter().map(|e| format!("e{e}")).collect();
        let _ = writeln!(out, "edges outside C + B: {}", names.join(", "));
    }
    out
}
