use operad_forge_core::operad::{random_element, Instance};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;

const MARKED: &str =
    r#"{"vertices":["a","b"],"edges":[{"ends":[["a","_"],["b",">"]],"mult":2}],"root":"a"}"#;

fn names_for(s: &Structure) -> Names {
    let mut names = Names::new();
    for v in s.vertices() {
        assert_eq!(names.intern(&format!("v{}", v.0)), *v);
    }
    names
}

#[test]
fn marked_edges_parse_with_multiplicity() {
    let mut names = Names::new();
    let x = parse_element(MARKED, &mut names).unwrap();
    let s = x.first_key().unwrap();
    assert_eq!(s.graph.edge_count(), 2);
    assert_eq!(s.root, names.get("a"));
    let back = to_text(&structure_to_json(s, &names));
    let again = parse_element(&back, &mut names).unwrap();
    assert_eq!(again, x);
}

#[test]
fn plain_edges_use_exponents() {
    let mut names = Names::new();
    let text = r#"{"vertices":["a","b"],"edges":[[["a",1],["b",1]],[["b",2]]]}"#;
    let x = parse_element(text, &mut names).unwrap();
    let s = x.first_key().unwrap();
    assert_eq!(s.graph.loop_count(names.get("b").unwrap()).unwrap(), 1);
    let json = serde_json::to_string(&structure_to_json(s, &names)).unwrap();
    assert_eq!(json, text);
}

#[test]
fn combinations_and_coefficients() {
    let mut names = Names::new();
    let text = r#"{"terms":[{"coeff":"-1/2","graph":{"vertices":["a"],"edges":[]}},{"coeff":3,"graph":{"vertices":["b"],"edges":[]}}]}"#;
    let x = parse_element(text, &mut names).unwrap();
    assert_eq!(x.len(), 2);
    let json = serde_json::to_string(&comb_to_json(&x, &names)).unwrap();
    assert!(json.contains(r#""coeff":"-1/2""#) && json.contains(r#""coeff":"3""#));
    let many = format!("[{text}, {MARKED}]");
    assert_eq!(parse_elements(&many, &mut names).unwrap().len(), 2);
}

#[test]
fn malformed_input_is_a_parse_error() {
    let bad = [
        r#"{"vertices":["a","a"],"edges":[]}"#,
        r#"{"vertices":["a"],"edges":[[["b",1]]]}"#,
        r#"{"vertices":["a"],"edges":[{"ends":[["a","?"]],"mult":1}]}"#,
        r#"{"vertices":["a"],"edges":[{"ends":[["a","_"]],"mult":0}]}"#,
        r#"{"vertices":["a"],"edges":[[["a",0]]]}"#,
        r#"{"vertices":["a"],"edges":[],"root":"z"}"#,
        r#"{"vertices":["a"],"edges":[],"extra":1}"#,
        r#"{"terms":[{"coeff":"1/0","graph":{"vertices":["a"],"edges":[]}}]}"#,
        r#"not json"#,
    ];
    for text in bad {
        let err = parse_element(text, &mut Names::new()).unwrap_err();
        assert_eq!(err.exit_code(), 2, "{text}: {err}");
    }
}

#[test]
fn trees_round_trip() {
    let mut names = Names::new();
    let text = r#"{"gen":"s*","children":[{"leaf":"a"},{"gen":"s*","children":[{"leaf":"b"},{"leaf":"c"}],"sign":-1}]}"#;
    let xs = parse_trees(text, &mut names).unwrap();
    assert_eq!(xs.len(), 1);
    let (t, c) = xs[0].iter().next().unwrap();
    assert_eq!(*c, Rational::from_integer((-1).into()));
    assert_eq!(tree_line(t, &names), "s*(a,s*(b,c))");
    let back = to_text(&tree_comb_to_json(&xs[0], &names));
    assert_eq!(parse_trees(&back, &mut names).unwrap(), xs);
    for bad in [
        r#"{"gen":"p","children":[{"leaf":"a"},{"leaf":"a"}]}"#,
        r#"{"gen":"p","children":[{"leaf":"a"}]}"#,
        r#"{"gen":"q","children":[{"leaf":"a"},{"leaf":"b"}]}"#,
        r#"{"gen":"p","children":[{"leaf":"a"},{"leaf":"b"}],"sign":-1}"#,
        r#"{"gen":"p","children":[{"leaf":"a"},{"gen":"s*","children":[{"leaf":"b"},{"leaf":"c"}]}]}"#,
    ] {
        assert!(parse_trees(bad, &mut Names::new()).is_err(), "{bad}");
    }
}

#[test]
fn one_line_rendering() {
    let mut names = Names::new();
    let x = parse_element(MARKED, &mut names).unwrap();
    assert_eq!(
        graph_line(x.first_key().unwrap(), &names),
        "{a,b} [a_-b> a_-b>] root a"
    );
}

const INSTANCES: [&str; 8] = ["mg", "g", "gc", "mgc", "t", "gpointed", "mgor", "plie"];

proptest! {
    #[test]
    fn writing_is_a_fixed_point(which in 0usize..8, seed in any::<u64>(), n in 1usize..6) {
        let inst = Instance::by_name(INSTANCES[which]).unwrap();
        let vs: Vec<Label> = (1..=n as u32).map(Label).collect();
        let s = random_element(&inst, &vs, &mut ChaCha8Rng::seed_from_u64(seed));
        let names = names_for(&s);
        let text = to_text(&structure_to_json(&s, &names));
        let mut fresh = names.clone();
        let parsed = parse_element(&text, &mut fresh).unwrap();
        prop_assert_eq!(parsed.first_key().unwrap(), &s);
        let again = to_text(&structure_to_json(parsed.first_key().unwrap(), &fresh));
        prop_assert_eq!(again, text);
    }
}
