//! Report construction: every value is rendered canonically (object keys are
//! emitted sorted, integers as JSON numbers when they fit 64 bits, decimal
//! strings otherwise), so identical inputs yield byte-identical reports.

use monotor_core::cech::{CohomologyGroup, DegreeCohomology};
use monotor_core::lattice::QuotientPresentation;
use monotor_core::monomial::{Exponent, MonomialIdeal};
use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Value};

pub fn bigint_value(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

pub fn biguint_value(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(n) => json!(n),
        Err(_) => json!(v.to_string()),
    }
}

pub fn exponent_value(e: &Exponent) -> Value {
    Value::Array(e.entries().iter().map(|&x| json!(x)).collect())
}

pub fn ideal_value(i: &MonomialIdeal) -> Value {
    Value::Array(i.gens().iter().map(exponent_value).collect())
}

/// Reduced coordinates of an ambient degree: a plain integer when the group
/// is free of rank one, otherwise the list of torsion then free coordinates.
pub fn reduced_degree_value(p: &QuotientPresentation, ambient: &[BigInt]) -> Value {
    let (torsion, free) = p.reduce(ambient).expect("degree in ambient group");
    if torsion.is_empty() && free.len() == 1 {
        return bigint_value(&free[0]);
    }
    let mut coords: Vec<Value> = torsion.iter().map(biguint_value).collect();
    coords.extend(free.iter().map(bigint_value));
    Value::Array(coords)
}

pub fn cohomology_group_value(g: &CohomologyGroup) -> Value {
    match g {
        CohomologyGroup::FieldRank(r) => json!({ "rank": r }),
        CohomologyGroup::Integer { free_rank, torsion } => json!({
            "free_rank": free_rank,
            "torsion": torsion.iter().map(biguint_value).collect::<Vec<_>>(),
        }),
    }
}

pub fn degree_entry_value(p: &QuotientPresentation, e: &DegreeCohomology) -> Value {
    json!({
        "degree": reduced_degree_value(p, &e.degree),
        "groups": e.groups.iter().map(cohomology_group_value).collect::<Vec<_>>(),
        "dims": e.position_dims,
        "truncated": e.truncated,
        "stable": e.stable,
    })
}

/// Common envelope; sorted-key output is guaranteed by the JSON value model.
pub fn envelope(command: &str, options: Value, body: Map<String, Value>) -> Value {
    let mut map = Map::new();
    map.insert("command".into(), json!(command));
    map.insert("options".into(), options);
    map.insert("schema".into(), json!(1));
    map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    for (k, v) in body {
        map.insert(k, v);
    }
    Value::Object(map)
}
