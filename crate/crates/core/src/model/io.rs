//! JSON instance and solution documents.

use serde::{Deserialize, Serialize};

use super::network::{Color, ColoredNetwork, Vertex};
use super::report::SolutionReport;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDocument {
    directed: bool,
    num_vertices: usize,
    s: Vertex,
    t: Vertex,
    k: u32,
    arcs: Vec<ArcDocument>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcDocument {
    tail: Vertex,
    head: Vertex,
    cost: i64,
    colors: Vec<Color>,
}

/// Parses an instance document. Structural checks only; conservativeness is
/// checked by [`validate_instance`](super::validate_instance).
pub fn parse_instance(text: &str) -> Result<ColoredNetwork> {
    let doc: InstanceDocument = serde_json::from_str(text)?;
    let mut net = ColoredNetwork::new(doc.directed, doc.num_vertices, doc.s, doc.t, doc.k)?;
    for a in doc.arcs {
        net.add_arc(a.tail, a.head, a.cost, a.colors)?;
    }
    Ok(net)
}

pub fn serialize_instance(net: &ColoredNetwork) -> String {
    let doc = InstanceDocument {
        directed: net.directed(),
        num_vertices: net.num_vertices(),
        s: net.s(),
        t: net.t(),
        k: net.k(),
        arcs: net
            .arcs()
            .iter()
            .map(|a| ArcDocument {
                tail: a.tail,
                head: a.head,
                cost: a.cost,
                colors: a.colors.iter().collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("instance document serializes")
}

pub fn parse_solution(text: &str) -> Result<SolutionReport> {
    Ok(serde_json::from_str(text)?)
}

pub fn serialize_solution(report: &SolutionReport) -> String {
    serde_json::to_string_pretty(report).expect("solution document serializes")
}

/// Accepts either a full solution document or a bare JSON array of arc ids.
pub fn parse_arc_list(text: &str) -> Result<super::ArcSet> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.is_array() {
        return Ok(serde_json::from_value(value)?);
    }
    match value.get("arcs") {
        Some(arcs) => Ok(serde_json::from_value(arcs.clone())?),
        None => Err(Error::Malformed(
            "expected an arc id array or a solution document".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::fixtures::{t1, tight2};

    const T1_DOC: &str = r#"{
        "directed": true, "num_vertices": 4, "s": 0, "t": 3, "k": 2,
        "arcs": [
            {"tail": 0, "head": 1, "cost": 1, "colors": [1, 2]},
            {"tail": 1, "head": 3, "cost": 1, "colors": [1]},
            {"tail": 1, "head": 2, "cost": 1, "colors": [2]},
            {"tail": 2, "head": 3, "cost": 1, "colors": [2]},
            {"tail": 0, "head": 3, "cost": 5, "colors": [1]}
        ]}"#;

    #[test]
    fn parses_t1() {
        let net = parse_instance(T1_DOC).unwrap();
        assert_eq!(net.num_vertices(), 4);
        assert_eq!(net.num_arcs(), 5);
        assert_eq!(net.k(), 2);
        assert_eq!(net, t1());
    }

    #[test]
    fn parse_errors() {
        let empty = r#"{"directed":true,"num_vertices":2,"s":0,"t":1,"k":1,
            "arcs":[{"tail":0,"head":1,"cost":1,"colors":[]}]}"#;
        let err = parse_instance(empty).unwrap_err();
        assert_eq!(err, Error::EmptyColorSet { arc: 0 });
        assert!(err.to_string().contains("empty color set"));

        let looped = r#"{"directed":true,"num_vertices":2,"s":0,"t":1,"k":1,
            "arcs":[{"tail":1,"head":1,"cost":1,"colors":[1]}]}"#;
        assert!(parse_instance(looped)
            .unwrap_err()
            .to_string()
            .contains("self-loop"));

        let range = r#"{"directed":true,"num_vertices":2,"s":0,"t":1,"k":1,
            "arcs":[{"tail":0,"head":1,"cost":1,"colors":[2]}]}"#;
        assert!(matches!(
            parse_instance(range),
            Err(Error::ColorOutOfRange { .. })
        ));

        assert!(matches!(parse_instance("{"), Err(Error::Malformed(_))));
    }

    #[test]
    fn round_trips() {
        for net in [
            t1(),
            tight2(),
            ColoredNetwork::new(false, 3, 0, 2, 1).unwrap(),
        ] {
            let doc = serialize_instance(&net);
            assert_eq!(parse_instance(&doc).unwrap(), net);
        }
        let empty = serialize_instance(&ColoredNetwork::new(false, 3, 0, 2, 1).unwrap());
        let v: serde_json::Value = serde_json::from_str(&empty).unwrap();
        assert_eq!(v["arcs"], serde_json::json!([]));
        let v: serde_json::Value = serde_json::from_str(&serialize_instance(&tight2())).unwrap();
        assert_eq!(v["arcs"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn arc_list_forms() {
        assert_eq!(
            parse_arc_list("[2, 0]").unwrap(),
            crate::model::ArcSet::from([0, 2])
        );
        let doc = r#"{"feasible":true,"cost":4,"arcs":[0,1],"certificates":[],"solver":"x"}"#;
        assert_eq!(
            parse_arc_list(doc).unwrap(),
            crate::model::ArcSet::from([0, 1])
        );
    }
}
