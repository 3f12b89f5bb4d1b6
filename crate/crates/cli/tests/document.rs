use proptest::prelude::*;
use roughdm_cli::{CliError, RelationDocument};

fn document() -> impl Strategy<Value = RelationDocument> {
    (1usize..=6, any::<bool>()).prop_flat_map(|(n, reflexive_close)| {
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), n).prop_map(
            move |bits| RelationDocument {
                labels: labels.clone(),
                rows: bits
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(_, b)| **b)
                            .map(|(i, _)| labels[i].clone())
                            .collect()
                    })
                    .collect(),
                reflexive_close,
            },
        )
    })
}

proptest! {
    #[test]
    fn parse_serialize_identity(doc in document()) {
        let text = doc.to_string();
        prop_assert_eq!(RelationDocument::parse(&text).unwrap(), doc);
    }

    #[test]
    fn relation_round_trip(doc in document()) {
        let r = doc.to_relation().unwrap();
        let back = RelationDocument::from_relation(&r);
        prop_assert_eq!(back.to_relation().unwrap(), r.clone());
        prop_assert_eq!(r.is_reflexive() || !doc.reflexive_close, true);
    }
}

#[test]
fn labels_keep_file_order() {
    let doc = RelationDocument::parse("universe: z a m\nz: a\na:\nm: m z\n").unwrap();
    let r = doc.to_relation().unwrap();
    assert_eq!(r.universe().labels(), ["z", "a", "m"]);
    assert_eq!(r.universe().render(r.neighborhood(2)), "{z,m}");
}

#[test]
fn error_messages_name_the_line() {
    let err = RelationDocument::parse("universe: 1 2\n1: 2\n2: 7\n").unwrap_err();
    assert!(matches!(err, CliError::Parse { line: 3, .. }));
    assert_eq!(err.to_string(), "line 3: unknown label `7`");
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn universe_over_capacity() {
    let labels: Vec<String> = (0..65).map(|i| i.to_string()).collect();
    let mut text = format!("universe: {}\n", labels.join(" "));
    for l in &labels {
        text.push_str(&format!("{l}:\n"));
    }
    let err = RelationDocument::parse(&text)
        .unwrap()
        .to_relation()
        .unwrap_err();
    assert_eq!(err.exit_code(), 3);
}
