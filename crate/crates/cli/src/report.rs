//! JSON encodings of verdicts and certificates.

use engelkit::engel::{AscentStep, EngelFlag, FlagRefutation, NilpotencyWitness, UniformExponentReport, WitnessStage};
use engelkit::lattice::{LcsChain, LcsVerdict, Nilpotency, NonNilpotency};
use engelkit::roots::{CartanReport, RootSpaceDecomposition, Weight};
use engelkit::{LieModule, Submodule, ValidationReport};
use serde_json::{json, Value};

use crate::format::{matrix_json, scalar_json, vector_json, vectors_json};

pub fn submodule(s: &Submodule) -> Value {
    json!({ "rank": s.rank(), "basis": vectors_json(s.basis()) })
}

pub fn validation(report: &ValidationReport) -> Value {
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| json!({ "at": v.location(), "message": v.to_string() }))
        .collect();
    json!({ "passed": report.passed(), "violations": violations })
}

pub fn lcs_verdict(v: LcsVerdict) -> Value {
    let (kind, step) = match v {
        LcsVerdict::Terminated(k) => ("terminated", k),
        LcsVerdict::Stabilized(k) => ("stabilized", k),
        LcsVerdict::RankStabilized(k) => ("rank_stabilized", k),
    };
    json!({ "kind": kind, "step": step })
}

pub fn chain(c: &LcsChain) -> Value {
    let terms: Vec<Value> = c.terms.iter().map(submodule).collect();
    json!({ "verdict": lcs_verdict(c.verdict), "terms": terms })
}

pub fn nilpotency(n: &Nilpotency) -> Value {
    match n {
        Nilpotency::Nilpotent { class, chain } => {
            let terms: Vec<Value> = chain.iter().map(submodule).collect();
            json!({ "kind": "terminating_chain", "class": class, "chain": terms })
        }
        Nilpotency::NotNilpotent(NonNilpotency::FixedPoint { step, term }) => {
            json!({ "kind": "fixed_point", "step": step, "term": submodule(term) })
        }
        Nilpotency::NotNilpotent(NonNilpotency::RankPlateau { step, term, next }) => {
            json!({ "kind": "rank_plateau", "step": step, "term": submodule(term), "next": submodule(next) })
        }
    }
}

pub fn witness(w: &NilpotencyWitness) -> Value {
    let stage = match w.stage {
        WitnessStage::Basis => "basis",
        WitnessStage::Bracket => "bracket",
        WitnessStage::DoubleBracket => "double_bracket",
        WitnessStage::Random => "random",
    };
    json!({
        "element": vector_json(&w.element),
        "endomorphism": matrix_json(&w.endo),
        "power": matrix_json(&w.power),
        "stage": stage,
    })
}

pub fn uniform(r: &UniformExponentReport) -> Value {
    json!({
        "exponent": r.exponent,
        "holds": r.holds,
        "samples": vectors_json(&r.samples),
        "minimal_exponents": r.minimal_exponents,
    })
}

pub fn flag(f: &EngelFlag, module: &LieModule) -> Value {
    let terms: Vec<Value> = f.flag.iter().map(submodule).collect();
    let adapted: Vec<Value> = f.adapted_action(module).iter().map(matrix_json).collect();
    json!({ "terms": terms, "change_of_basis": matrix_json(&f.change_of_basis), "adapted_action": adapted })
}

pub fn refutation(r: &FlagRefutation) -> Value {
    let partial: Vec<Value> = r.partial.iter().map(submodule).collect();
    let action: Vec<Value> = r.quotient.module.action().iter().map(matrix_json).collect();
    json!({
        "step": r.step,
        "partial": partial,
        "quotient_rank": r.quotient.module.rank(),
        "quotient_action": action,
    })
}

pub fn ascent_step(s: &AscentStep, image: &LieModule) -> Value {
    let x_matrix = image.to_endomorphism(&s.x).expect("step element lies in the image algebra");
    json!({
        "k": submodule(&s.k),
        "x": vector_json(&s.x),
        "x_matrix": matrix_json(&x_matrix),
        "class": vector_json(&s.class),
        "next": submodule(&s.next),
    })
}

pub fn weight(w: &Weight, labels: &[String]) -> Value {
    Value::Object(labels.iter().cloned().zip(w.values.iter().map(scalar_json)).collect())
}

pub fn decomposition(d: &RootSpaceDecomposition, labels: &[String]) -> Value {
    let spaces: Vec<Value> = d
        .weights
        .iter()
        .map(|(w, s)| json!({ "weight": weight(w, labels), "space": submodule(s) }))
        .collect();
    json!({ "spaces": spaces, "spanned_rank": d.spanned_rank, "splits": d.splits })
}

pub fn cartan(r: &CartanReport) -> Value {
    json!({
        "zero_root": submodule(&r.zero_root),
        "normalizer": submodule(&r.normalizer),
        "zero_weight_nilpotency": nilpotency(&r.zero_weight_nilpotency),
    })
}
