//! Text exports of pair-labeled graphs.

use std::fmt::Write;

use serde::Serialize;

use crate::shift_graph::PairGraph;

pub fn to_dot(g: &PairGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph H_{} {{", g.m).unwrap();
    for (idx, v) in g.vertices.iter().enumerate() {
        writeln!(out, "  n{} [label=\"{}\"];", idx + 1, v).unwrap();
    }
    for &(a, b) in g.graph.edges() {
        writeln!(out, "  n{} -- n{};", a + 1, b + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson {
    edges: Vec<[String; 2]>,
    m: usize,
    vertices: Vec<String>,
}

pub fn to_json(g: &PairGraph) -> String {
    let doc = GraphJson {
        edges: g
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| [g.vertices[a].to_string(), g.vertices[b].to_string()])
            .collect(),
        m: g.m,
        vertices: g.vertices.iter().map(|v| v.to_string()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph json");
    s.push('\n');
    s
}
