//! Group-definition documents: totality of the parser and export round trips.

use proptest::prelude::*;

use psik::catalog::{catalog, load_groups, parse_group_defs, to_table_def, DefErrorKind};
use psik::psi::order_spectrum;

const KEYWORDS: &[&str] = &[
    "group",
    "kind",
    "end",
    "n",
    "degree",
    "gen",
    "factors",
    "normal",
    "acting",
    "actgens",
    "act",
    "row",
    "cyclic",
    "perm",
    "product",
    "semidirect",
    "table",
    "#",
    "0",
    "1",
    "2",
    "3",
    "-1",
    "99999999999999999999",
    "A",
    "B",
    "\n",
];

fn token_soup() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(KEYWORDS.to_vec()), 0..60).prop_map(|tokens| {
        tokens
            .iter()
            .map(|t| {
                if *t == "\n" {
                    "\n".to_string()
                } else {
                    format!("{t} ")
                }
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn arbitrary_text_never_panics(doc in "\\PC*") {
        let _ = parse_group_defs(&doc);
    }

    #[test]
    fn keyword_soup_never_panics(doc in token_soup()) {
        if let Err(e) = parse_group_defs(&doc) {
            prop_assert!(e.line >= 1 && e.column >= 1);
            let prefix = format!("line {}, column {}:", e.line, e.column);
            prop_assert!(e.to_string().starts_with(&prefix));
        }
    }

    #[test]
    fn cyclic_blocks_load(n in 1usize..500) {
        let doc = format!("group G\nkind cyclic\nn {n}\nend\n");
        let groups = load_groups(&doc, 20_000).unwrap();
        prop_assert_eq!(groups[0].order(), n);
        prop_assert!(groups[0].is_cyclic());
    }
}

#[test]
fn export_round_trips_preserve_tables() {
    for name in ["trivial", "S3", "A4", "A5", "Dih7", "Z2xS3", "H1", "H2"] {
        let g = catalog(name).unwrap();
        let text = to_table_def(&g);
        let back = load_groups(&text, 20_000).unwrap();
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].rows(), g.rows(), "{name}");
        assert_eq!(order_spectrum(&back[0]), order_spectrum(&g), "{name}");
    }
}

fn kind_name(kind: &DefErrorKind) -> &'static str {
    match kind {
        DefErrorKind::Syntax(_) => "syntax",
        DefErrorKind::DuplicateName(_) => "duplicate",
        DefErrorKind::UnresolvedReference(_) => "unresolved",
        DefErrorKind::Construction(_) => "construction",
    }
}

#[test]
fn errors_are_located() {
    let cases: &[(&str, usize, &str)] = &[
        ("group A\nkind cyclic\nn 0\nend\n", 1, "construction"),
        ("group A\nkind cyclic\nn x\nend\n", 3, "syntax"),
        (
            "group A\nkind cyclic\nn 2\nend\ngroup A\nkind cyclic\nn 3\nend\n",
            5,
            "duplicate",
        ),
        ("group P\nkind product\nfactors X Y\nend\n", 3, "unresolved"),
        ("group A\nkind cyclic\nn 2\n", 3, "syntax"),
        (
            "group T\nkind table\nrow 0 1\nrow 1 1\nend\n",
            1,
            "construction",
        ),
    ];
    for &(doc, line, kind) in cases {
        let e = parse_group_defs(doc).unwrap_err();
        assert_eq!(
            (e.line, kind_name(&e.kind)),
            (line, kind),
            "{doc:?} gave {e}"
        );
    }
}

#[test]
fn documented_example_builds_frobenius_group() {
    let doc = "# Frobenius group of order 39\n\
               group Z13\nkind cyclic\nn 13\nend\n\
               group Z3\nkind cyclic\nn 3\nend\n\
               group F39\nkind semidirect\nnormal Z13\nacting Z3\nactgens 1\n\
               act 1 0 3 6 9 12 2 5 8 11 1 4 7 10\nend\n";
    let groups = load_groups(doc, 20_000).unwrap();
    let f39 = &groups[2];
    assert_eq!(f39.order(), 39);
    assert!(!f39.is_abelian());
    assert!(f39.is_solvable());
    assert_eq!(order_spectrum(f39).summary(), "1:1 3:26 13:12");
}
