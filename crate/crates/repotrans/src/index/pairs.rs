//! Translation-pair extraction from a tab-separated mapping file.
//!
//! Each non-comment line names a source method, its target counterpart, and
//! the focal test selector:
//!
//! ```text
//! <source_qualified_method> TAB <target_qualified_method> TAB <test_selector>
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Triples that fail
//! to resolve against the indexes are skipped with a diagnostic; malformed
//! lines are a hard parse error.

use std::path::Path;

use crate::error::{Error, Result};

use super::{lookup_method, MethodRecord, RepoIndex, TranslationPair};

/// Outcome of [`extract_pairs`]: resolved pairs plus skip diagnostics.
#[derive(Debug, Default)]
pub struct PairExtraction {
    pub pairs: Vec<TranslationPair>,
    pub diagnostics: Vec<String>,
}

fn split_qualified(qualified: &str) -> Option<(&str, &str)> {
    let dot = qualified.rfind('.')?;
    let (class, method) = (&qualified[..dot], &qualified[dot + 1..]);
    if class.is_empty() || method.is_empty() {
        return None;
    }
    Some((class, method))
}

fn resolve(index: &RepoIndex, qualified_method: &str) -> Option<MethodRecord> {
    let (class, method) = split_qualified(qualified_method)?;
    lookup_method(index, class, method).first().map(|m| (*m).clone())
}

/// Resolves every triple in `mapping_file` against the two indexes.
pub fn extract_pairs(
    source_index: &RepoIndex,
    target_index: &RepoIndex,
    mapping_file: &Path,
) -> Result<PairExtraction> {
    let text = std::fs::read_to_string(mapping_file).map_err(|e| {
        Error::Config(format!(
            "cannot read mapping file {}: {e}",
            mapping_file.display()
        ))
    })?;

    let mut out = PairExtraction::default();
    let mut ordinal = 0usize;
    for (line_no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').map(str::trim).collect();
        if fields.len() != 3 || fields.iter().any(|f| f.is_empty()) {
            return Err(Error::MappingParse {
                line: line_no + 1,
                message: format!(
                    "expected 3 tab-separated fields, got {}",
                    fields.iter().filter(|f| !f.is_empty()).count()
                ),
            });
        }
        ordinal += 1;
        let (source_q, target_q, selector) = (fields[0], fields[1], fields[2]);

        let Some(source_fn) = resolve(source_index, source_q) else {
            out.diagnostics
                .push(format!("line {}: source method not indexed: {source_q}", line_no + 1));
            continue;
        };
        let Some(target_fn) = resolve(target_index, target_q) else {
            out.diagnostics
                .push(format!("line {}: target method not indexed: {target_q}", line_no + 1));
            continue;
        };

        out.pairs.push(TranslationPair {
            pair_id: format!("pair_{:03}_{}", ordinal, target_fn.name),
            source_fn,
            target_signature: target_fn.signature_text.clone(),
            target_ground_truth: target_fn,
            test_selector: selector.to_string(),
        });
    }
    Ok(out)
}
