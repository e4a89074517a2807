mod common;

use proptest::prelude::*;
use slicereg_cli::{parse_pair, parse_point, parse_stem, ParseError};
use slicereg_cli::parse::render_pair;

#[test]
fn golden_corpus_round_trips() {
    for text in common::stem_corpus() {
        let f = parse_stem(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(parse_stem(&f.to_string()).unwrap(), f, "{text}");
    }
    for text in common::point_corpus() {
        let p = parse_point(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(parse_point(&p.to_string()).unwrap(), p, "{text}");
    }
    for text in common::pair_corpus() {
        let f = parse_pair(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(parse_pair(&render_pair(&f)).unwrap(), f, "{text}");
    }
}

#[test]
fn disambiguation_table() {
    let same = [
        ("-z^2", "-(z^2)"),
        ("2*i^2", "-2"),
        ("-2^2", "-4"),
        ("(-2)^2", "4"),
        ("1 - z - z", "1 - 2*z"),
        ("1 - (z - z)", "1"),
        ("2*z^2*3", "6*z^2"),
        ("i*j*k", "-1"),
        ("k*j*i", "1"),
        ("-i*-i", "-1"),
        ("1/2*1/3", "1/6"),
        ("z*(i + j)", "i*z + j*z"),
        ("(i + j)*(i - j)", "-2*k"),
        ("z^1", "z"),
    ];
    for (a, b) in same {
        assert_eq!(parse_stem(a).unwrap(), parse_stem(b).unwrap(), "{a} vs {b}");
    }
}

#[test]
fn error_kinds() {
    assert!(matches!(parse_stem("E"), Err(ParseError::UnitNotAllowed { pos: 0 })));
    assert!(matches!(parse_point("q"), Err(ParseError::VariableInPoint { pos: 0 })));
    assert!(matches!(parse_stem("q*z"), Err(ParseError::MixedVariables { pos: 2 })));
    assert!(matches!(parse_stem("1 +"), Err(ParseError::Syntax { pos: 3, .. })));
    assert!(matches!(parse_stem("1 ) "), Err(ParseError::Syntax { pos: 2, .. })));
}

fn expr(depth: u32) -> BoxedStrategy<String> {
    let leaf = prop_oneof![
        (0u32..10).prop_map(|n| n.to_string()),
        (0u32..10, 1u32..10).prop_map(|(n, d)| format!("{n}/{d}")),
        Just("i".to_string()),
        Just("j".to_string()),
        Just("k".to_string()),
        Just("z".to_string()),
    ];
    leaf.prop_recursive(depth, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a})*({b})")),
            inner.clone().prop_map(|a| format!("-({a})")),
            (inner, 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
        ]
    })
    .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rendering_round_trips(text in expr(4)) {
        let f = parse_stem(&text).unwrap();
        prop_assert_eq!(parse_stem(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn point_rendering_round_trips(text in expr(3)) {
        let text = text.replace('z', "E");
        let p = parse_point(&text).unwrap();
        prop_assert_eq!(parse_point(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn addition_parses_as_polynomial_sum(a in expr(2), b in expr(2)) {
        let sum = parse_stem(&format!("({a}) + ({b})")).unwrap();
        prop_assert_eq!(sum, &parse_stem(&a).unwrap() + &parse_stem(&b).unwrap());
        let prod = parse_stem(&format!("({a})*({b})")).unwrap();
        prop_assert_eq!(prod, parse_stem(&a).unwrap().star(&parse_stem(&b).unwrap()));
    }
}
