//! Canonical JSON renderings. `serde_json::Map` is a `BTreeMap` here, so
//! keys always serialize in sorted order.

use descent_core::descent::{DescentLattice, DescentReport, VerifyReport};
use descent_core::intlat::{Index, IntLattice, TorsionProfile};
use descent_core::subsys::RootSubsystem;
use descent_core::RootSystem;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

/// Integers outside the `i64` range are emitted as decimal strings.
pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn index(i: &Index) -> Value {
    match i {
        Index::Finite(n) => big(n),
        Index::Infinite => json!("infinite"),
    }
}

pub fn lattice(l: &IntLattice) -> Value {
    let rows: Vec<Value> = l
        .rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(big).collect()))
        .collect();
    json!({
        "ambient_rank": l.ambient_rank(),
        "basis": l.basis().to_string(),
        "rank": l.rank(),
        "rows": rows,
    })
}

pub fn descent_lattice(l: &DescentLattice) -> Value {
    let idx = l
        .index_in_root_lattice()
        .expect("descent lattices lie in Q");
    json!({
        "method": l.method.name(),
        "lattice": lattice(&l.lattice),
        "index_in_root_lattice": index(&idx),
    })
}

pub fn descent_report(r: &DescentReport) -> Value {
    json!({
        "lambda_omega": r.lambda_omega.coords,
        "lambda_alpha": r.lambda_alpha,
        "parabolic": r.parabolic.iter().collect::<Vec<_>>(),
        "ample": r.ample,
        "in_root_lattice": r.in_root_lattice,
        "member": r.member,
        "descends": r.descends,
    })
}

pub fn verify_report(r: &VerifyReport) -> Value {
    let lattices: serde_json::Map<String, Value> = r
        .lattices
        .iter()
        .map(|l| (l.method.name().to_string(), descent_lattice(l)))
        .collect();
    json!({
        "type": r.label.to_string(),
        "agree": r.agree,
        "lattices": lattices,
    })
}

pub fn subsystem(s: &RootSubsystem) -> Value {
    let components: Vec<Value> = s
        .component_labels()
        .iter()
        .enumerate()
        .map(|(c, label)| {
            json!({
                "type": label.to_string(),
                "simple_roots": s.component_simple_roots(c),
                "highest_root": s.component_theta(c),
            })
        })
        .collect();
    let root = IntLattice::standard(s.ambient().rank(), descent_core::Basis::Alpha);
    let idx = root
        .index_of(s.root_lattice())
        .expect("subsystem lattices lie in Q");
    json!({
        "types": s.type_multiset().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "components": components,
        "root_lattice": lattice(s.root_lattice()),
        "index_in_root_lattice": index(&idx),
    })
}

pub fn torsion(t: &TorsionProfile) -> Value {
    json!({
        "invariant_factors": t.invariant_factors.iter().map(big).collect::<Vec<_>>(),
        "order": big(&t.order()),
    })
}

pub fn root_system(s: &RootSystem) -> Value {
    json!({
        "rank": s.rank(),
        "cartan": s.cartan(),
        "cartan_det": s.cartan_det(),
        "symmetrizer": s.symmetrizer(),
        "positive_roots": s.positive_roots(),
        "highest_root": s.theta(),
    })
}
