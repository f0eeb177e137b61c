mod common;

use common::*;
use vlink::thistle::verify_identity;
use vlink::{LaurentPoly, Limits, RibbonGraph, Ring, VirtualLinkDiagram};

const ALL: [&str; 11] = [
    "paper_knot.vld",
    "paper_knot_r1.vld",
    "paper_knot_r2.vld",
    "virtual_trefoil.vld",
    "trefoil.vld",
    "trefoil_r1_positive.vld",
    "trefoil_r1_negative.vld",
    "trefoil_r2.vld",
    "figure8.vld",
    "hopf.vld",
    "unknot.vld",
];

fn load(name: &str) -> VirtualLinkDiagram {
    VirtualLinkDiagram::parse(&read_corpus(name)).unwrap()
}

fn jones(name: &str) -> String {
    load(name).jones(&Limits::default()).unwrap().to_string()
}

#[test]
fn bracket_and_jones_agree_with_reference_sum() {
    for name in ALL {
        let (codes, loops) = raw_codes(&read_corpus(name));
        let d = load(name);
        let bracket = d.kauffman_bracket(&Limits::default()).unwrap();
        assert_eq!(bracket_map(&bracket), oracle_bracket(&codes, loops), "{name}");
        let signs: Vec<i64> = d.crossings().iter().map(|c| c.sign().value()).collect();
        if !codes.is_empty() {
            assert_eq!(Some(signs), oracle_signs(&codes), "{name}");
        }
        let jones = d.jones(&Limits::default()).unwrap();
        assert_eq!(Some(jones_map(&jones)), oracle_jones(&codes, loops), "{name}");
    }
}

#[test]
fn published_jones_polynomials() {
    assert_eq!(jones("trefoil.vld"), "-t^(-4) + t^(-3) + t^(-1)");
    assert_eq!(jones("figure8.vld"), "t^(-2) - t^(-1) + 1 - t + t^2");
    assert_eq!(jones("hopf.vld"), "-t^(-5/2) - t^(-1/2)");
    assert_eq!(jones("unknot.vld"), "1");
    assert_eq!(load("hopf.vld").link_components(), 2);
}

#[test]
fn example_knot_fixtures() {
    let d = load("paper_knot.vld");
    assert_eq!(d.writhe(), -1);
    assert_eq!(jones("paper_knot.vld"), "t^(-2) - t^(-1) - t^(-1/2) + 1 + t^(1/2)");
    let g = RibbonGraph::from_diagram(&d);
    assert_eq!(g, RibbonGraph::parse(&read_corpus("paper_graph.rg")).unwrap());
    let expected = LaurentPoly::parse(&Ring::bollobas_riordan(), "x + 2 + y + x*y*z^2 + 2*y*z + y^2*z").unwrap();
    assert_eq!(g.bollobas_riordan(&Limits::default()).unwrap(), expected);
}

#[test]
fn virtual_trefoil_is_not_classical() {
    // half-integer powers in the Jones polynomial of a knot cannot occur classically
    let j = jones("virtual_trefoil.vld");
    assert_eq!(j, "t + t^(3/2) - t^(5/2)");
    let mirror = load("virtual_trefoil.vld").mirror();
    assert_eq!(
        mirror.jones(&Limits::default()).unwrap().to_string(),
        "-t^(-5/2) + t^(-3/2) + t^(-1)"
    );
}

#[test]
fn reidemeister_variants_keep_jones_and_change_bracket() {
    let pairs = [
        ("trefoil.vld", "trefoil_r1_positive.vld"),
        ("trefoil.vld", "trefoil_r1_negative.vld"),
        ("trefoil.vld", "trefoil_r2.vld"),
        ("paper_knot.vld", "paper_knot_r1.vld"),
        ("paper_knot.vld", "paper_knot_r2.vld"),
    ];
    for (base, moved) in pairs {
        assert_eq!(jones(base), jones(moved), "{moved}");
        let (b, m) = (load(base), load(moved));
        assert_ne!(
            b.kauffman_bracket(&Limits::default()).unwrap(),
            m.kauffman_bracket(&Limits::default()).unwrap(),
            "{moved}"
        );
    }
}

#[test]
fn identity_holds_on_corpus() {
    for name in ALL {
        let report = verify_identity(&load(name), &Limits::default()).unwrap();
        assert!(report.equal, "{name}");
        assert_eq!(report.per_state.len(), 1 << load(name).crossing_count());
    }
}

#[test]
fn corpus_files_round_trip() {
    for name in ALL {
        let d = load(name);
        assert_eq!(VirtualLinkDiagram::parse(&d.to_text()).unwrap(), d, "{name}");
    }
}
