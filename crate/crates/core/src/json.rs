//! JSON wire formats for groups, elements, maps and analyses.
//!
//! Dihedral elements travel as `{"j": int, "r": 0|1}`; elements of any other
//! group travel as their table index.

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, GroupTag};
use crate::map::{CayleyMap, MapAnalysis};
use serde_json::{json, Value};
use std::sync::Arc;

pub fn group_to_json(group: &FiniteGroup) -> Value {
    match *group.tag() {
        GroupTag::Dihedral(n) => json!({"type": "dihedral", "n": n}),
        GroupTag::SwapExtension(m) => json!({"type": "swap_extension", "m": m}),
        _ => {
            let order = group.order();
            let mul: Vec<Vec<Elem>> = (0..order)
                .map(|g| (0..order).map(|h| group.mul(g, h)).collect())
                .collect();
            json!({"type": "table", "mul": mul, "labels": group.labels()})
        }
    }
}

pub fn group_from_json(v: &Value) -> Result<FiniteGroup> {
    let ty = v
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Invalid("group descriptor lacks \"type\"".into()))?;
    match ty {
        "dihedral" => {
            let n = get_usize(v, "n")?;
            FiniteGroup::dihedral(n)
        }
        "swap_extension" => {
            let m = get_usize(v, "m")?;
            FiniteGroup::swap_extension(m)
        }
        "table" => {
            let mul: Vec<Vec<Elem>> = serde_json::from_value(
                v.get("mul")
                    .cloned()
                    .ok_or_else(|| Error::Invalid("table group lacks \"mul\"".into()))?,
            )
            .map_err(|e| Error::Invalid(format!("bad multiplication table: {e}")))?;
            let labels: Option<Vec<String>> = match v.get("labels") {
                Some(l) => Some(
                    serde_json::from_value(l.clone())
                        .map_err(|e| Error::Invalid(format!("bad labels: {e}")))?,
                ),
                None => None,
            };
            FiniteGroup::from_table(mul, labels)
        }
        other => Err(Error::Invalid(format!("unknown group type {other:?}"))),
    }
}

pub fn elem_to_json(group: &FiniteGroup, e: Elem) -> Value {
    match group.dihedral_parts(e) {
        Ok((j, r)) => json!({"j": j, "r": r}),
        Err(_) => json!(e),
    }
}

pub fn elem_from_json(group: &FiniteGroup, v: &Value) -> Result<Elem> {
    if let Some(idx) = v.as_u64() {
        let e = idx as usize;
        if e >= group.order() {
            return Err(Error::Invalid(format!("element index {e} out of range")));
        }
        return Ok(e);
    }
    let j = get_i64(v, "j")?;
    let r = get_usize(v, "r")?;
    if r > 1 {
        return Err(Error::Invalid(format!("element field \"r\" must be 0 or 1, got {r}")));
    }
    group.dihedral_elem(j, r)
}

pub fn map_to_json(map: &CayleyMap) -> Value {
    let group = map.group();
    let p: Vec<Value> = map.rotation().iter().map(|&x| elem_to_json(group, x)).collect();
    let mut x_sorted: Vec<Elem> = map.rotation().to_vec();
    x_sorted.sort_unstable();
    let x: Vec<Value> = x_sorted.iter().map(|&x| elem_to_json(group, x)).collect();
    json!({"group": group_to_json(group), "X": x, "p": p})
}

pub fn map_from_json(v: &Value) -> Result<CayleyMap> {
    let group = Arc::new(group_from_json(
        v.get("group")
            .ok_or_else(|| Error::Invalid("map descriptor lacks \"group\"".into()))?,
    )?);
    let p = v
        .get("p")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Invalid("map descriptor lacks the rotation array \"p\"".into()))?;
    let rotation: Vec<Elem> = p
        .iter()
        .map(|e| elem_from_json(&group, e))
        .collect::<Result<_>>()?;
    let map = CayleyMap::new(group, rotation)?;
    if let Some(x) = v.get("X").and_then(Value::as_array) {
        let declared: Result<Vec<Elem>> =
            x.iter().map(|e| elem_from_json(map.group(), e)).collect();
        let mut declared = declared?;
        declared.sort_unstable();
        declared.dedup();
        let mut actual: Vec<Elem> = map.rotation().to_vec();
        actual.sort_unstable();
        if declared != actual {
            return Err(Error::Invalid(
                "declared X differs from the rotation's element set".into(),
            ));
        }
    }
    Ok(map)
}

pub fn analysis_to_json(map: &CayleyMap, analysis: &MapAnalysis) -> Value {
    let group = map.group();
    json!({
        "regular": analysis.regular,
        "order": analysis.skew.as_ref().map(|s| s.order()),
        "kernel": analysis
            .kernel
            .as_ref()
            .map(|k| k.members().iter().map(|&g| group.label(g)).collect::<Vec<_>>()),
        "skew_type": analysis.skew_type,
        "balance": analysis.balance,
        "aut_count": analysis.aut_count,
        "chi": analysis.chi,
        "skew": analysis.skew.as_ref().map(|s| serde_json::to_value(s.to_json()).unwrap()),
    })
}

fn get_usize(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Invalid(format!("missing or non-integer field {key:?}")))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    v.get(key)
        .and_then(Value::as_i64)
        .ok_or_else(|| Error::Invalid(format!("missing or non-integer field {key:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_family, FamilyId};

    #[test]
    fn map_round_trip() {
        let m = build_family(FamilyId::map1(8)).unwrap();
        let v = map_to_json(&m);
        let back = map_from_json(&v).unwrap();
        assert_eq!(back.group().order(), 16);
        assert_eq!(back.rotation(), m.rotation());
        assert_eq!(v["group"]["type"], "dihedral");
        assert_eq!(v["p"][0], json!({"j": 0, "r": 1}));
    }

    #[test]
    fn table_group_round_trip() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let v = group_to_json(&g);
        assert_eq!(v["type"], "table");
        let back = group_from_json(&v).unwrap();
        assert_eq!(back.order(), 6);
        assert_eq!(elem_from_json(&back, &json!(4)).unwrap(), 4);
    }

    #[test]
    fn rejects_mismatched_x() {
        let m = build_family(FamilyId::thm_main_2()).unwrap();
        let mut v = map_to_json(&m);
        v["X"] = json!([{"j": 1, "r": 0}]);
        assert!(map_from_json(&v).is_err());
    }
}
