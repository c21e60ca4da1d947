//! Syntactic repository index: classes, fields, methods, and imports.
//!
//! The index is built once per repository by a lightweight structural
//! scanner (no full grammar), is immutable afterwards, and backs both the
//! context-gathering tools and translation-pair extraction. Two scanner
//! families are provided: a brace scanner for Java and C#, and an
//! indentation scanner for Python. Module-level Python functions are not
//! indexed; the model is class-centric.

mod brace;
mod pairs;
mod python;

pub use pairs::{extract_pairs, PairExtraction};

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subject-language profiles the scanners understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    Java,
    CSharp,
    Python,
}

impl Language {
    pub fn extensions(self) -> &'static [&'static str] {
        match self {
            Language::Java => &["java"],
            Language::CSharp => &["cs"],
            Language::Python => &["py"],
        }
    }

    /// Tag used to pick fenced code blocks out of LLM responses.
    pub fn fence_tags(self) -> &'static [&'static str] {
        match self {
            Language::Java => &["java"],
            Language::CSharp => &["csharp", "cs", "c#"],
            Language::Python => &["python", "py"],
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Language::Java => "java",
            Language::CSharp => "csharp",
            Language::Python => "python",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "java" => Ok(Language::Java),
            "csharp" | "cs" | "c#" => Ok(Language::CSharp),
            "python" | "py" => Ok(Language::Python),
            other => Err(Error::Config(format!("unknown language tag: {other}"))),
        }
    }
}

/// 1-based inclusive line range of a declaration in its file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldRecord {
    pub name: String,
    pub declared_type: String,
    pub modifiers: Vec<String>,
}

impl FieldRecord {
    /// Textual rendering used in tool payloads, e.g. `private int count`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for m in &self.modifiers {
            out.push_str(m);
            out.push(' ');
        }
        out.push_str(&self.declared_type);
        out.push(' ');
        out.push_str(&self.name);
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub type_name: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MethodRecord {
    /// Qualified name of the class the method belongs to.
    pub owning_class: String,
    pub name: String,
    /// Verbatim slice from the first modifier through the closing `)` of
    /// the parameter list.
    pub signature_text: String,
    pub parameters: Vec<Param>,
    pub return_type: String,
    /// Verbatim body. Braced languages include the braces; Python holds the
    /// indented suite.
    pub body_text: String,
    /// Repo-relative path with `/` separators.
    pub file_path: String,
    pub span: Span,
}

impl MethodRecord {
    /// `owning.Class.method` reference string used as a retrieval id.
    pub fn method_ref(&self) -> String {
        format!("{}.{}", self.owning_class, self.name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Class,
    Interface,
    Enum,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClassKind::Class => "class",
            ClassKind::Interface => "interface",
            ClassKind::Enum => "enum",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub simple_name: String,
    /// Package/namespace-qualified name; nested types carry the nesting
    /// path (`pkg.Outer.Inner`).
    pub qualified_name: String,
    /// Package, namespace, or Python module containing the type.
    pub container: String,
    pub fields: Vec<FieldRecord>,
    /// Signature text of every member with a parameter list, concrete or
    /// abstract, in declaration order.
    pub method_signatures: Vec<String>,
    pub file_path: String,
    pub kind: ClassKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImportRecord {
    pub file_path: String,
    pub imported_name: String,
}

/// Everything extracted from one source file.
#[derive(Debug, Default)]
pub(crate) struct FileFacts {
    pub classes: Vec<ClassRecord>,
    pub methods: Vec<MethodRecord>,
    pub imports: Vec<ImportRecord>,
}

/// Immutable syntactic index of one repository.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepoIndex {
    pub language: Language,
    pub root: PathBuf,
    /// simple name -> records, in file-walk order (collisions keep all).
    pub classes: BTreeMap<String, Vec<ClassRecord>>,
    /// qualified class -> method name -> overloads in declaration order.
    pub methods: BTreeMap<String, BTreeMap<String, Vec<MethodRecord>>>,
    /// repo-relative file path -> imports in declaration order.
    pub imports: BTreeMap<String, Vec<ImportRecord>>,
    /// Files that failed extraction, with the reason. Non-fatal.
    pub diagnostics: Vec<String>,
}

/// Default directory names excluded from the file walk.
pub const DEFAULT_EXCLUDES: &[&str] = &[
    ".git",
    ".idea",
    ".pytest_cache",
    ".vs",
    "__pycache__",
    "bin",
    "build",
    "dist",
    "node_modules",
    "obj",
    "out",
    "target",
];

/// Matches one path component against a glob with `*` wildcards.
fn component_matches(pattern: &str, component: &str) -> bool {
    fn rec(p: &[u8], c: &[u8]) -> bool {
        match (p.first(), c.first()) {
            (None, None) => true,
            (Some(b'*'), _) => rec(&p[1..], c) || (!c.is_empty() && rec(p, &c[1..])),
            (Some(pb), Some(cb)) if pb == cb => rec(&p[1..], &c[1..]),
            _ => false,
        }
    }
    rec(pattern.as_bytes(), component.as_bytes())
}

fn is_excluded(rel: &Path, excludes: &[String]) -> bool {
    rel.components().any(|c| {
        let comp = c.as_os_str().to_string_lossy();
        excludes.iter().any(|pat| component_matches(pat, &comp))
    })
}

/// Builds the syntactic index for every `language` source file under
/// `repo_root`, using [`DEFAULT_EXCLUDES`].
pub fn build_index(repo_root: &Path, language: Language) -> Result<RepoIndex> {
    let excludes: Vec<String> = DEFAULT_EXCLUDES.iter().map(|s| s.to_string()).collect();
    build_index_filtered(repo_root, language, &excludes)
}

/// [`build_index`] with an explicit exclusion glob list (matched against
/// individual path components).
pub fn build_index_filtered(
    repo_root: &Path,
    language: Language,
    excludes: &[String],
) -> Result<RepoIndex> {
    if !repo_root.is_dir() {
        return Err(Error::Config(format!(
            "repository root does not exist: {}",
            repo_root.display()
        )));
    }

    let mut index = RepoIndex {
        language,
        root: repo_root.to_path_buf(),
        classes: BTreeMap::new(),
        methods: BTreeMap::new(),
        imports: BTreeMap::new(),
        diagnostics: Vec::new(),
    };

    let mut parsed_any = false;
    let walker = walkdir::WalkDir::new(repo_root)
        .sort_by_file_name()
        .into_iter();
    for entry in walker {
        let entry = entry.map_err(|e| Error::Infrastructure(format!("walk failed: {e}")))?;
        if !entry.file_type().is_file() {
            continue;
        }
        let rel = entry
            .path()
            .strip_prefix(repo_root)
            .expect("walk yields paths under root");
        if is_excluded(rel, excludes) {
            continue;
        }
        let ext = match entry.path().extension().and_then(|e| e.to_str()) {
            Some(e) => e.to_ascii_lowercase(),
            None => continue,
        };
        if !language.extensions().contains(&ext.as_str()) {
            continue;
        }
        let rel_str = rel
            .components()
            .map(|c| c.as_os_str().to_string_lossy().into_owned())
            .collect::<Vec<_>>()
            .join("/");
        let text = match std::fs::read_to_string(entry.path()) {
            Ok(t) => t,
            Err(e) => {
                index.diagnostics.push(format!("{rel_str}: unreadable: {e}"));
                continue;
            }
        };
        let facts = match language {
            Language::Java | Language::CSharp => brace::scan_file(&text, &rel_str, language),
            Language::Python => python::scan_file(&text, &rel_str),
        };
        match facts {
            Ok(f) => {
                parsed_any = true;
                index.absorb(f);
            }
            Err(msg) => index.diagnostics.push(format!("{rel_str}: {msg}")),
        }
    }

    if !parsed_any {
        return Err(Error::EmptyIndex {
            root: repo_root.to_path_buf(),
            language: language.to_string(),
        });
    }
    Ok(index)
}

impl RepoIndex {
    fn absorb(&mut self, facts: FileFacts) {
        for class in facts.classes {
            self.classes
                .entry(class.simple_name.clone())
                .or_default()
                .push(class);
        }
        for method in facts.methods {
            self.methods
                .entry(method.owning_class.clone())
                .or_default()
                .entry(method.name.clone())
                .or_default()
                .push(method);
        }
        for import in facts.imports {
            self.imports
                .entry(import.file_path.clone())
                .or_default()
                .push(import);
        }
    }

    /// All indexed methods in deterministic (class, name, declaration) order.
    pub fn all_methods(&self) -> impl Iterator<Item = &MethodRecord> {
        self.methods
            .values()
            .flat_map(|by_name| by_name.values().flatten())
    }
}

/// Resolves a class name against the index.
///
/// Resolution tiers, first non-empty wins: exact qualified-name match, exact
/// simple-name match, case-insensitive simple-name match. An empty result is
/// a value, not an error.
pub fn lookup_class<'a>(index: &'a RepoIndex, class_name: &str) -> Vec<&'a ClassRecord> {
    let qualified: Vec<&ClassRecord> = index
        .classes
        .values()
        .flatten()
        .filter(|c| c.qualified_name == class_name)
        .collect();
    if !qualified.is_empty() {
        return qualified;
    }
    if let Some(records) = index.classes.get(class_name) {
        return records.iter().collect();
    }
    index
        .classes
        .iter()
        .filter(|(simple, _)| simple.eq_ignore_ascii_case(class_name))
        .flat_map(|(_, records)| records.iter())
        .collect()
}

/// All overloads of `method_name` within every class resolved by
/// [`lookup_class`], in declaration order.
pub fn lookup_method<'a>(
    index: &'a RepoIndex,
    class_name: &str,
    method_name: &str,
) -> Vec<&'a MethodRecord> {
    lookup_class(index, class_name)
        .into_iter()
        .filter_map(|class| {
            index
                .methods
                .get(&class.qualified_name)
                .and_then(|by_name| by_name.get(method_name))
        })
        .flatten()
        .collect()
}

/// Declaration-order imports of the named repo-relative file; empty for
/// unknown files.
pub fn imports_of<'a>(index: &'a RepoIndex, file_path: &str) -> &'a [ImportRecord] {
    index
        .imports
        .get(file_path)
        .map(|v| v.as_slice())
        .unwrap_or(&[])
}

/// A source function paired with its target-side signature, ground truth,
/// and focal test selector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslationPair {
    pub pair_id: String,
    pub source_fn: MethodRecord,
    pub target_signature: String,
    pub target_ground_truth: MethodRecord,
    /// Target-toolchain test filter expression naming the focal tests.
    pub test_selector: String,
}

#[cfg(test)]
mod tests;
