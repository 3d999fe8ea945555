use flechains::bunch::{xi_name, KappaIndex, LayerClass, Part};
use flechains::dsl::{parse_bunch_dsl, BunchDocument, DslErrorKind};
use flechains::Parity;
use proptest::prelude::*;

const NAMES: [&str; 6] = ["t", "u", "v", "w", "top", "mid_2"];

#[derive(Debug, Clone)]
struct Spec {
    xi: Parity,
    labels: Vec<String>,
    parts: Vec<Part>,
    ranks: Vec<usize>,
}

fn spec() -> impl Strategy<Value = Spec> {
    (1usize..=4).prop_flat_map(|n| {
        (
            prop::sample::select(Parity::ALL.to_vec()),
            Just(NAMES).prop_shuffle(),
            prop::collection::vec(prop::bool::ANY, n - 1),
            prop::collection::vec(0usize..=2, n),
        )
            .prop_map(move |(xi, names, parts, ranks)| Spec {
                xi,
                labels: names[..n].iter().map(|s| s.to_string()).collect(),
                parts: parts.into_iter().map(|j| if j { Part::J } else { Part::I }).collect(),
                ranks,
            })
    })
}

fn hom_text(src: usize, tgt: usize, choice: u8, entries: &[i64]) -> String {
    match choice % 4 {
        0 => "trivial".into(),
        1 if src == tgt => "identity".into(),
        2 if tgt <= src => format!("truncate {tgt}"),
        _ => {
            let rows: Vec<String> = (0..tgt)
                .map(|r| {
                    let row: Vec<String> = (0..src).map(|c| entries[(r * 3 + c) % entries.len()].to_string()).collect();
                    format!("[{}]", row.join(", "))
                })
                .collect();
            format!("matrix [{}]", rows.join(","))
        }
    }
}

/// Lines of a structurally valid document plus the odd comment, shuffled.
fn document() -> impl Strategy<Value = String> {
    spec()
        .prop_flat_map(|s| {
            let n = s.labels.len();
            (
                Just(s),
                prop::collection::vec(0usize..=2, n),
                prop::collection::vec((any::<u8>(), prop::bool::ANY), n * n),
                prop::collection::vec(-4i64..=4, 9),
            )
        })
        .prop_flat_map(|(s, prefixes, homs, entries)| {
            let n = s.labels.len();
            let index = KappaIndex::new(s.labels.clone(), s.parts.clone(), s.xi).unwrap();
            let mut lines = vec![format!("xi = {}", xi_name(s.xi)), format!("kappa = [ {} ]", s.labels.join(" ,"))];
            for (u, l) in s.labels.iter().enumerate() {
                lines.push(format!("group {l} = Z^{}", s.ranks[u]));
                if u > 0 {
                    lines.push(format!("class {l}   = {}", if s.parts[u - 1] == Part::I { "I" } else { "J" }));
                }
                if index.class(u) == LayerClass::Theta {
                    let k = s.ranks[u];
                    let h = match prefixes[u] {
                        0 => "full".to_string(),
                        1 => "trivial".to_string(),
                        _ => format!("prefix {}", k / 2),
                    };
                    lines.push(format!("subgroup {l} = {h}"));
                }
            }
            for u in 0..n {
                for v in u + 1..n {
                    let (choice, omit) = homs[u * n + v];
                    let may_omit = v > u + 1 || s.ranks[u] == 0 || s.ranks[v] == 0;
                    if omit && may_omit {
                        continue;
                    }
                    let kind = hom_text(s.ranks[u], s.ranks[v], choice, &entries);
                    lines.push(format!("hom {}->{} = {kind}", s.labels[u], s.labels[v]));
                }
            }
            lines.push("# a comment".into());
            lines.push(String::new());
            Just(lines).prop_shuffle()
        })
        .prop_map(|lines| lines.join("\n"))
}

proptest! {
    #[test]
    fn parse_print_parse_is_parse(text in document()) {
        let doc = parse_bunch_dsl(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        let printed = doc.to_dsl();
        let again = parse_bunch_dsl(&printed).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_dsl(), printed);
    }

    #[test]
    fn bunches_print_back_to_themselves(text in document()) {
        let g = parse_bunch_dsl(&text).unwrap().to_bunch().unwrap();
        let doc = BunchDocument::from_bunch(&g);
        let back = parse_bunch_dsl(&doc.to_dsl()).unwrap().to_bunch().unwrap();
        prop_assert!(back.same_as(&g));
        prop_assert_eq!(back.index().labels(), g.index().labels());
    }

    #[test]
    fn garbage_is_located(text in document(), at in any::<prop::sample::Index>(), junk in "[=!@$%^&]{1,4}") {
        let mut lines: Vec<&str> = text.lines().collect();
        let k = at.index(lines.len() + 1);
        let bad = format!("   {junk}");
        lines.insert(k, &bad);
        let e = parse_bunch_dsl(&lines.join("\n")).unwrap_err();
        prop_assert_eq!(e.line, k + 1);
        prop_assert_eq!(e.col, 4);
        prop_assert!(matches!(e.kind, DslErrorKind::Syntax(_)));
    }

    #[test]
    fn duplicated_lines_are_rejected(text in document(), at in any::<prop::sample::Index>()) {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty() && !l.starts_with('#')).collect();
        let dup = lines[at.index(lines.len())];
        let doubled = format!("{text}\n{dup}");
        let e = parse_bunch_dsl(&doubled).unwrap_err();
        prop_assert!(matches!(e.kind, DslErrorKind::DuplicateKey(_)), "{}", e);
        prop_assert_eq!(e.line, doubled.lines().count());
    }
}
