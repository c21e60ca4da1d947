use std::path::{Path, PathBuf};

use super::*;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn java_index() -> RepoIndex {
    build_index(&fixtures().join("repos/target_java"), Language::Java).unwrap()
}

fn cs_index() -> RepoIndex {
    build_index(&fixtures().join("repos/source_cs"), Language::CSharp).unwrap()
}

#[test]
fn single_file_class_counts() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("CellHelper.java"),
        "package fix;\n\npublic class CellHelper {\n    private int count;\n    private String label;\n\n    public int collectCount() {\n        return count;\n    }\n\n    public void reset() {\n        count = 0;\n    }\n\n    public String formatLabel(String p) {\n        return p + label;\n    }\n}\n",
    )
    .unwrap();
    let index = build_index(dir.path(), Language::Java).unwrap();
    let classes = lookup_class(&index, "CellHelper");
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].fields.len(), 2);
    assert_eq!(classes[0].method_signatures.len(), 3);
    let methods: Vec<_> = index.all_methods().collect();
    assert_eq!(methods.len(), 3);
}

#[test]
fn empty_directory_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let err = build_index(dir.path(), Language::Java).unwrap_err();
    assert!(matches!(err, crate::error::Error::EmptyIndex { .. }));
}

#[test]
fn missing_root_is_a_config_error() {
    let err = build_index(Path::new("/nonexistent/nowhere"), Language::Java).unwrap_err();
    assert!(matches!(err, crate::error::Error::Config(_)));
}

#[test]
fn simple_name_collisions_keep_both_classes() {
    let index = java_index();
    let foos = lookup_class(&index, "Foo");
    assert_eq!(foos.len(), 2);
    let mut qualified: Vec<&str> = foos.iter().map(|c| c.qualified_name.as_str()).collect();
    qualified.sort();
    assert_eq!(qualified, ["poikit.model.Foo", "poikit.util.Foo"]);
}

#[test]
fn lookup_class_tiers() {
    let index = java_index();
    // exact qualified beats simple-name fan-out
    let exact = lookup_class(&index, "poikit.util.Foo");
    assert_eq!(exact.len(), 1);
    assert_eq!(exact[0].qualified_name, "poikit.util.Foo");
    // absent name is an empty value
    assert!(lookup_class(&index, "NoSuchClass").is_empty());
    // case-insensitive tier
    let ci = lookup_class(&index, "cellhelper");
    assert_eq!(ci.len(), 1);
    assert_eq!(ci[0].simple_name, "CellHelper");
    // tier monotonicity: exact and case-variant of an existing name agree
    let upper = lookup_class(&index, "CellHelper");
    assert_eq!(upper.len(), ci.len());
    assert_eq!(upper[0].qualified_name, ci[0].qualified_name);
}

#[test]
fn lookup_method_body_and_overloads() {
    let index = java_index();
    let hits = lookup_method(&index, "CellHelper", "collectCount");
    assert_eq!(hits.len(), 1);
    assert!(hits[0].body_text.starts_with('{'));
    assert!(hits[0].body_text.contains("visits") || hits[0].body_text.contains("count"));
    assert!(hits[0].body_text.ends_with('}'));
    assert_eq!(hits[0].signature_text, "public int collectCount()");

    assert!(lookup_method(&index, "CellHelper", "calculateCount").is_empty());

    let overloads = lookup_method(&index, "Sheet", "cellWidth");
    assert_eq!(overloads.len(), 2);
    assert_eq!(overloads[0].parameters.len(), 1);
    assert_eq!(overloads[1].parameters.len(), 2);
    assert_eq!(overloads[1].parameters[1].name, "padded");
    assert_eq!(overloads[1].parameters[1].type_name, "boolean");
}

#[test]
fn imports_in_declaration_order() {
    let index = java_index();
    let imports = imports_of(&index, "src/poikit/Sheet.java");
    let names: Vec<&str> = imports.iter().map(|i| i.imported_name.as_str()).collect();
    assert_eq!(names, ["java.util.List", "java.util.Map", "poikit.util.Foo"]);

    assert!(imports_of(&index, "src/poikit/CellHelper.java").is_empty());
    assert!(imports_of(&index, "no/such/File.java").is_empty());
}

#[test]
fn csharp_fixture_facts() {
    let index = cs_index();
    let helper = lookup_class(&index, "CellHelper");
    assert_eq!(helper.len(), 1);
    assert_eq!(helper[0].qualified_name, "PoiKit.CellHelper");
    assert_eq!(helper[0].fields.len(), 2);
    assert_eq!(helper[0].fields[0].render(), "private int count");
    assert_eq!(helper[0].method_signatures.len(), 3);

    let sheet_imports = imports_of(&index, "PoiKit/Sheet.cs");
    assert_eq!(sheet_imports.len(), 3);
    assert_eq!(sheet_imports[2].imported_name, "PoiKit.Util");

    let overloads = lookup_method(&index, "Sheet", "CellWidth");
    assert_eq!(overloads.len(), 2);

    // generic return type survives verbatim
    let by_label = lookup_method(&index, "Sheet", "WidthsByLabel");
    assert_eq!(by_label.len(), 1);
    assert_eq!(by_label[0].return_type, "Dictionary<string, int>");
}

#[test]
fn span_fidelity_for_every_method() {
    for index in [java_index(), cs_index()] {
        for method in index.all_methods() {
            let text =
                std::fs::read_to_string(index.root.join(&method.file_path)).unwrap();
            let lines: Vec<&str> = text.lines().collect();
            let region = lines[method.span.start - 1..method.span.end].join("\n");
            assert!(
                region.contains(&method.signature_text),
                "{}: span region missing signature",
                method.method_ref()
            );
            assert!(
                region.contains(&method.body_text),
                "{}: span region missing body",
                method.method_ref()
            );
        }
    }
}

#[test]
fn owning_class_closure() {
    for index in [java_index(), cs_index()] {
        for method in index.all_methods() {
            let owners = lookup_class(&index, &method.owning_class);
            assert!(
                owners.iter().any(|c| c.qualified_name == method.owning_class),
                "unresolvable owning class {}",
                method.owning_class
            );
        }
    }
}

#[test]
fn index_determinism() {
    let a = java_index();
    let b = java_index();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn comments_are_retained_in_bodies() {
    let index = java_index();
    let hits = lookup_method(&index, "CellAddress", "collectCount");
    assert_eq!(hits.len(), 1);
    assert!(hits[0].body_text.contains("// each call records one visit"));
}

#[test]
fn nested_class_is_indexed_flat() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("Outer.java"),
        "package p;\npublic class Outer {\n    private int x;\n    public static class Inner {\n        public int get() {\n            return 4;\n        }\n    }\n    public int outerGet() {\n        return x;\n    }\n}\n",
    )
    .unwrap();
    let index = build_index(dir.path(), Language::Java).unwrap();
    let inner = lookup_class(&index, "Inner");
    assert_eq!(inner.len(), 1);
    assert_eq!(inner[0].qualified_name, "p.Outer.Inner");
    let outer = lookup_class(&index, "Outer");
    assert_eq!(outer.len(), 1);
    assert_eq!(outer[0].method_signatures.len(), 1);
    assert_eq!(lookup_method(&index, "Inner", "get").len(), 1);
    assert_eq!(lookup_method(&index, "Outer", "outerGet").len(), 1);
}

#[test]
fn enum_constants_become_fields() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("CellPropertyType.java"),
        "package p;\npublic enum CellPropertyType {\n    BORDER,\n    FILL,\n    FONT;\n}\n",
    )
    .unwrap();
    let index = build_index(dir.path(), Language::Java).unwrap();
    let kinds = lookup_class(&index, "CellPropertyType");
    assert_eq!(kinds.len(), 1);
    assert_eq!(kinds[0].kind, ClassKind::Enum);
    let names: Vec<&str> = kinds[0].fields.iter().map(|f| f.name.as_str()).collect();
    assert_eq!(names, ["BORDER", "FILL", "FONT"]);
}

#[test]
fn python_scan_basics() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir_all(dir.path().join("kit")).unwrap();
    std::fs::write(dir.path().join("kit/__init__.py"), "").unwrap();
    std::fs::write(
        dir.path().join("kit/text_kit.py"),
        "import re\nfrom typing import List\n\n\nclass TextKit:\n    vowels: str = \"aeiou\"\n\n    def reverse(self, s):\n        # walk backwards\n        return s[::-1]\n\n    def count_vowels(self, s) -> int:\n        total = 0\n        for ch in s.lower():\n            if ch in self.vowels:\n                total += 1\n        return total\n",
    )
    .unwrap();
    let index = build_index(dir.path(), Language::Python).unwrap();

    let classes = lookup_class(&index, "TextKit");
    assert_eq!(classes.len(), 1);
    assert_eq!(classes[0].qualified_name, "kit.text_kit.TextKit");
    assert_eq!(classes[0].fields.len(), 1);
    assert_eq!(classes[0].fields[0].declared_type, "str");
    assert_eq!(classes[0].method_signatures.len(), 2);

    let imports = imports_of(&index, "kit/text_kit.py");
    let names: Vec<&str> = imports.iter().map(|i| i.imported_name.as_str()).collect();
    assert_eq!(names, ["re", "typing.List"]);

    let reverse = lookup_method(&index, "TextKit", "reverse");
    assert_eq!(reverse.len(), 1);
    assert_eq!(reverse[0].signature_text, "def reverse(self, s)");
    assert!(reverse[0].body_text.contains("# walk backwards"));
    assert_eq!(reverse[0].span.start, 8);
    assert_eq!(reverse[0].span.end, 10);

    let count = lookup_method(&index, "TextKit", "count_vowels");
    assert_eq!(count[0].return_type, "int");
    assert_eq!(count[0].parameters.len(), 2);
}

#[test]
fn extraction_failures_are_diagnostics_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("Good.java"), "package p;\nclass Good { void a() { } }\n")
        .unwrap();
    std::fs::write(dir.path().join("Bad.java"), "class Bad { /* unterminated\n").unwrap();
    let index = build_index(dir.path(), Language::Java).unwrap();
    assert_eq!(index.diagnostics.len(), 1);
    assert!(index.diagnostics[0].starts_with("Bad.java"));
    assert_eq!(lookup_class(&index, "Good").len(), 1);
}

#[test]
fn excluded_directories_are_skipped() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir_all(dir.path().join("build")).unwrap();
    std::fs::write(dir.path().join("Keep.java"), "package p;\nclass Keep { }\n").unwrap();
    std::fs::write(
        dir.path().join("build/Gen.java"),
        "package p;\nclass Gen { }\n",
    )
    .unwrap();
    let index = build_index(dir.path(), Language::Java).unwrap();
    assert_eq!(lookup_class(&index, "Keep").len(), 1);
    assert!(lookup_class(&index, "Gen").is_empty());
}

mod pair_tests {
    use super::*;

    fn write_mapping(lines: &[&str]) -> (tempfile::TempDir, PathBuf) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mapping.tsv");
        std::fs::write(&path, lines.join("\n")).unwrap();
        (dir, path)
    }

    #[test]
    fn resolved_triples_become_pairs() {
        let source = cs_index();
        let target = java_index();
        let (_dir, mapping) = write_mapping(&[
            "# comment line",
            "PoiKit.CellHelper.CollectCount\tpoikit.CellHelper.collectCount\ttest_collect",
            "PoiKit.Sheet.CellWidth\tpoikit.Sheet.cellWidth\ttest_width",
        ]);
        let out = extract_pairs(&source, &target, &mapping).unwrap();
        assert_eq!(out.pairs.len(), 2);
        assert!(out.diagnostics.is_empty());
        assert_eq!(out.pairs[0].pair_id, "pair_001_collectCount");
        assert_eq!(out.pairs[0].target_signature, "public int collectCount()");
        assert_eq!(out.pairs[0].test_selector, "test_collect");
    }

    #[test]
    fn unresolvable_triple_is_skipped_with_diagnostic() {
        let source = cs_index();
        let target = java_index();
        let (_dir, mapping) = write_mapping(&[
            "PoiKit.CellHelper.CollectCount\tpoikit.CellHelper.noSuchMethod\ttest_x",
            "PoiKit.CellHelper.Reset\tpoikit.CellHelper.reset\ttest_reset",
        ]);
        let out = extract_pairs(&source, &target, &mapping).unwrap();
        assert_eq!(out.pairs.len(), 1);
        assert_eq!(out.diagnostics.len(), 1);
        assert!(out.diagnostics[0].contains("noSuchMethod"));
    }

    #[test]
    fn malformed_line_is_a_parse_error_with_line_number() {
        let source = cs_index();
        let target = java_index();
        let (_dir, mapping) = write_mapping(&[
            "PoiKit.CellHelper.Reset\tpoikit.CellHelper.reset\ttest_reset",
            "only two\tfields",
        ]);
        let err = extract_pairs(&source, &target, &mapping).unwrap_err();
        match err {
            crate::error::Error::MappingParse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected MappingParse, got {other:?}"),
        }
    }

    #[test]
    fn empty_mapping_yields_no_pairs() {
        let source = cs_index();
        let target = java_index();
        let (_dir, mapping) = write_mapping(&["# nothing here", ""]);
        let out = extract_pairs(&source, &target, &mapping).unwrap();
        assert!(out.pairs.is_empty());
    }
}
