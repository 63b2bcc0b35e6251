use braided::suite::property_suite;

#[test]
fn catalog_property_suite() {
    let entries = property_suite(2024).unwrap();
    let families: std::collections::BTreeSet<_> = entries.iter().map(|e| e.family.as_str()).collect();
    for f in ["braid-equation", "yd-compatibility", "genericity-stability", "qyd-compatibility", "ideal-growth", "associativity-generators", "associativity-random"] {
        assert!(families.contains(f), "{f}");
    }
    for e in &entries {
        assert!(e.pass, "{} on {}: {:?}", e.family, e.example, e.detail);
    }
}
