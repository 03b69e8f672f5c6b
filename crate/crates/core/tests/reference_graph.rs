mod common;

use common::*;
use g2crystal::graph::{bfs, export_dot, export_json};
use g2crystal::verify::{cliff_graph, minf_graph, tableau_graph};
use g2crystal::{m_infinity, Crystal};

#[test]
fn untex_normalizes_typeset_monomials() {
    assert_eq!(untex(REFERENCE_Y[0].0), "Y_1(-1)^(1,0)");
    assert_eq!(
        untex(&format!("{} {}", REFERENCE_X[2].0, REFERENCE_X[2].1)),
        "X_1(-1)^(2,0) X_2(-2)^(1,-1) X_3(-2)^(0,1)"
    );
    assert_eq!(
        rows_text(EXAMPLE_ROWS),
        "[1][1][1][1][2][0][3b][3b][1b]\n[2][3][3]"
    );
}

#[test]
fn depth_two_matches_reference_y_form() {
    let g = minf_graph(2);
    match_reference(&g, &reference_text(&REFERENCE_Y), |b| {
        b.to_monomial().to_string()
    })
    .unwrap();
    let gy = bfs(m_infinity(), 2);
    match_reference(&gy, &reference_text(&REFERENCE_Y), |m| m.to_string()).unwrap();
}

#[test]
fn depth_two_matches_reference_x_form() {
    match_reference(&minf_graph(2), &reference_text(&REFERENCE_X), |b| b.label()).unwrap();
}

#[test]
fn depth_one_top() {
    let g = minf_graph(1);
    assert_eq!(g.len(), 3);
    assert_eq!(g.edges.len(), 2);
}

#[test]
fn golden_exports() {
    assert_eq!(
        export_dot(&minf_graph(1)),
        include_str!("golden/minf_depth1.dot")
    );
    assert_eq!(
        export_dot(&minf_graph(2)),
        include_str!("golden/minf_depth2.dot")
    );
    assert_eq!(
        export_json(&minf_graph(2), "minf"),
        include_str!("golden/minf_depth2.json")
    );
    assert_eq!(
        export_dot(&bfs(m_infinity(), 2)),
        include_str!("golden/monomial_depth2.dot")
    );
    assert_eq!(
        export_dot(&tableau_graph(2)),
        include_str!("golden/tableau_depth2.dot")
    );
    assert_eq!(
        export_json(&cliff_graph(2), "cliff"),
        include_str!("golden/cliff_depth2.json")
    );
}

#[test]
fn json_export_has_seven_nodes_at_depth_two() {
    let v: serde_json::Value = serde_json::from_str(&export_json(&minf_graph(2), "minf")).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["nodes"][0]["label"], "X_1(-1)^(2,0) X_2(-2)^(1,0)");
}

#[test]
fn depth_zero_is_a_single_node() {
    let g = tableau_graph(0);
    assert_eq!(g.len(), 1);
    assert!(export_dot(&g).lines().all(|l| !l.contains("->")));
}
