//! JSON shapes for results and certificates, and checking them again.
//!
//! * fmp: `{"fmp": 3, "witness": {"S": [..], "I": [..], "T": [[u, v], ..]} | null, "method": "exact"}`
//! * certificate: `{"kind": "fpm", "matching": [[u, v, num, den], ..], "partition": [[..], ..]}`
//!   or `{"kind": "no_fpm", "witness_S": [..]}`

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexSet};
use crate::matching::{
    FpmCertificate, HalfIntegralMatching, NoFpmWitness, PartitionBlock, Weight,
};
use crate::preclusion::{FmpWitness, Fmp01, PreclusionResult};

pub fn witness_json(w: &FmpWitness) -> Value {
    json!({
        "S": w.s.to_vec(),
        "I": w.i.to_vec(),
        "T": w.t.pairs().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

pub fn fmp_json(r: &PreclusionResult) -> Value {
    json!({
        "fmp": r.value,
        "witness": r.witness.as_ref().map(witness_json),
        "method": r.method.as_str(),
    })
}

fn matching_rows(f: &HalfIntegralMatching) -> Vec<[usize; 4]> {
    f.entries()
        .iter()
        .map(|&(u, v, w)| match w {
            Weight::One => [u, v, 1, 1],
            Weight::Half => [u, v, 1, 2],
        })
        .collect()
}

fn block_row(b: &PartitionBlock) -> Vec<usize> {
    b.cycle.clone().unwrap_or_else(|| b.vertices.clone())
}

/// A certificate in both forms where available: the partition is derived
/// from the matching.
pub fn certificate_json(c: &FpmCertificate) -> Value {
    match c {
        FpmCertificate::Matching(f) => json!({
            "kind": "fpm",
            "matching": matching_rows(f),
            "partition": f.to_partition().iter().map(block_row).collect::<Vec<_>>(),
        }),
        FpmCertificate::Partition(blocks) => json!({
            "kind": "fpm",
            "partition": blocks.iter().map(block_row).collect::<Vec<_>>(),
        }),
    }
}

pub fn no_fpm_json(w: &NoFpmWitness) -> Value {
    json!({"kind": "no_fpm", "witness_S": w.s.to_vec()})
}

pub fn fmp01_json(c: &Fmp01) -> Value {
    match c {
        Fmp01::Zero(w) => json!({"class": "zero", "certificate": no_fpm_json(w)}),
        Fmp01::One {
            certificate,
            edge,
            witness,
        } => json!({
            "class": "one",
            "certificate": certificate_json(certificate),
            "edge": [edge.0, edge.1],
            "edge_witness": no_fpm_json(witness),
        }),
        Fmp01::AtLeastTwo(certs) => json!({
            "class": "at_least_two",
            "edge_certificates": certs
                .iter()
                .map(|((u, v), c)| json!({"edge": [u, v], "certificate": certificate_json(c)}))
                .collect::<Vec<_>>(),
        }),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::invalid(msg.into())
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} is not an array")))?
        .iter()
        .map(|x| {
            x.as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| bad(format!("{what} holds a non-integer")))
        })
        .collect()
}

fn pair_list(v: &Value, what: &str) -> Result<Vec<(usize, usize)>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} is not an array")))?
        .iter()
        .map(|p| match usize_list(p, what)?.as_slice() {
            [u, v] => Ok((*u, *v)),
            _ => Err(bad(format!("{what} entry is not a pair"))),
        })
        .collect()
}

/// Rebuild a certificate object. A `matching` field wins over `partition`.
pub fn parse_certificate(n: usize, v: &Value) -> Result<std::result::Result<FpmCertificate, NoFpmWitness>> {
    match v.get("kind").and_then(Value::as_str) {
        Some("no_fpm") => {
            let s = usize_list(v.get("witness_S").ok_or_else(|| bad("missing witness_S"))?, "witness_S")?;
            Ok(Err(NoFpmWitness {
                s: VertexSet::from_vertices(n, &s)?,
            }))
        }
        Some("fpm") => {
            if let Some(m) = v.get("matching") {
                let rows = m.as_array().ok_or_else(|| bad("matching is not an array"))?;
                let mut entries = Vec::new();
                for row in rows {
                    let row = usize_list(row, "matching")?;
                    let w = match row.as_slice() {
                        [_, _, 1, 1] => Weight::One,
                        [_, _, 1, 2] => Weight::Half,
                        _ => return Err(bad(format!("matching entry {row:?} is not [u, v, 1, 1|2]"))),
                    };
                    entries.push((row[0], row[1], w));
                }
                return Ok(Ok(FpmCertificate::Matching(HalfIntegralMatching::new(n, entries))));
            }
            let rows = v
                .get("partition")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("certificate has neither matching nor partition"))?;
            let blocks = rows
                .iter()
                .map(|r| {
                    let r = usize_list(r, "partition")?;
                    let mut vertices = r.clone();
                    vertices.sort_unstable();
                    Ok(PartitionBlock {
                        vertices,
                        cycle: (r.len() != 2).then_some(r),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Ok(FpmCertificate::Partition(blocks)))
        }
        _ => Err(bad("certificate kind must be \"fpm\" or \"no_fpm\"")),
    }
}

fn check_certificate(g: &Graph, v: &Value) -> Result<bool> {
    match parse_certificate(g.order(), v)? {
        Ok(c) => {
            c.validate(g)?;
            Ok(true)
        }
        Err(w) => {
            w.validate(g)?;
            Ok(false)
        }
    }
}

/// Check a report produced by `compute` against `g`. Every certificate and
/// witness it carries must hold, and stated values must agree with them.
pub fn validate_report(g: &Graph, v: &Value) -> Result<()> {
    if let Some(f) = v.get("fmp") {
        let value = f.as_u64().ok_or_else(|| bad("fmp is not an integer"))? as usize;
        match v.get("witness") {
            None | Some(Value::Null) => {
                if crate::matching::has_fpm(g) {
                    return Err(bad("no witness but the graph has a fractional perfect matching"));
                }
                if value != 0 {
                    return Err(bad("no witness for a nonzero value"));
                }
            }
            Some(w) => {
                let n = g.order();
                let s = VertexSet::from_vertices(n, &usize_list(&w["S"], "S")?)?;
                let i = VertexSet::from_vertices(n, &usize_list(&w["I"], "I")?)?;
                let t = EdgeSet::new(g, pair_list(&w["T"], "T")?)?;
                let fw = FmpWitness { s, i, t };
                fw.validate(g)?;
                if fw.cost() != value {
                    return Err(bad(format!("witness costs {} but fmp is {value}", fw.cost())));
                }
            }
        }
    }
    if let Some(c) = v.get("certificate") {
        let positive = check_certificate(g, c)?;
        if let Some(flag) = v.get("fpm").and_then(Value::as_bool) {
            if flag != positive {
                return Err(bad("fpm flag disagrees with certificate kind"));
            }
        }
    }
    if let Some(edge) = v.get("edge") {
        let (a, b) = match usize_list(edge, "edge")?.as_slice() {
            [a, b] => (*a, *b),
            _ => return Err(bad("edge is not a pair")),
        };
        let h = g.without_edge(a, b)?;
        if check_certificate(&h, v.get("edge_witness").ok_or_else(|| bad("missing edge_witness"))?)? {
            return Err(bad("edge witness should show no fractional perfect matching"));
        }
    }
    if let Some(list) = v.get("edge_certificates").and_then(Value::as_array) {
        if list.len() != g.size() {
            return Err(bad("edge certificates do not cover every edge"));
        }
        for item in list {
            let (a, b) = match usize_list(&item["edge"], "edge")?.as_slice() {
                [a, b] => (*a, *b),
                _ => return Err(bad("edge is not a pair")),
            };
            if !check_certificate(&g.without_edge(a, b)?, &item["certificate"])? {
                return Err(bad("expected a positive certificate for every edge deletion"));
            }
        }
    }
    if let Some(cycle) = v.get("cycle").filter(|c| !c.is_null()) {
        let c = usize_list(cycle, "cycle")?;
        let mut seen = c.clone();
        seen.sort_unstable();
        seen.dedup();
        let closed = (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]));
        if c.len() != g.order() || seen.len() != c.len() || !closed {
            return Err(bad("cycle is not a Hamiltonian cycle"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::matching::{decide_fpm, FpmDecision};
    use crate::preclusion::{classify_fmp01, fmp, CertificateForm};

    #[test]
    fn fmp_round_trip() {
        let g = complete(5);
        let v = fmp_json(&fmp(&g).unwrap());
        assert_eq!(v["fmp"], 3);
        validate_report(&g, &v).unwrap();
        let mut tampered = v.clone();
        tampered["fmp"] = json!(2);
        assert!(validate_report(&g, &tampered).is_err());
        validate_report(&star(3), &fmp_json(&fmp(&star(3)).unwrap())).unwrap();
    }

    #[test]
    fn certificates_round_trip() {
        let g = complete(2).disjoint_union(&cycle(5)).unwrap();
        let FpmDecision::Perfect(f) = decide_fpm(&g) else { panic!() };
        let c = certificate_json(&FpmCertificate::Matching(f));
        assert_eq!(c["matching"].as_array().unwrap().len(), 6);
        validate_report(&g, &json!({"fpm": true, "certificate": c})).unwrap();
        let mut only_partition = c.clone();
        only_partition.as_object_mut().unwrap().remove("matching");
        validate_report(&g, &json!({"certificate": only_partition})).unwrap();
        assert!(validate_report(&g, &json!({"fpm": false, "certificate": c})).is_err());

        for g in [star(3), copies(&complete(2), 3).disjoint_union(&complete(3)).unwrap(), cycle(4)] {
            let v = fmp01_json(&classify_fmp01(&g, CertificateForm::Matching).unwrap());
            validate_report(&g, &v).unwrap();
        }
    }
}
