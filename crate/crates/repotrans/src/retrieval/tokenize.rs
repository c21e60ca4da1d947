//! Deterministic code tokenizer shared by BM25 and the default embedder.

/// Splits source text into lowercased subtokens.
///
/// Words are maximal runs of `[A-Za-z0-9_]`; each word is split on
/// underscores and camel-case boundaries (`lower->Upper`, `digit->Upper`,
/// and the last capital of an acronym run before a lowercase letter).
/// Digits stay attached to their segment. Punctuation is dropped.
pub fn tokenize_code(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for word in text.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')) {
        for piece in word.split('_') {
            split_camel(piece, &mut tokens);
        }
    }
    tokens
}

fn split_camel(piece: &str, out: &mut Vec<String>) {
    let chars: Vec<char> = piece.chars().collect();
    if chars.is_empty() {
        return;
    }
    let mut start = 0;
    for i in 1..chars.len() {
        let prev = chars[i - 1];
        let cur = chars[i];
        let boundary = (cur.is_ascii_uppercase() && (prev.is_ascii_lowercase() || prev.is_ascii_digit()))
            || (cur.is_ascii_uppercase()
                && prev.is_ascii_uppercase()
                && chars.get(i + 1).is_some_and(|n| n.is_ascii_lowercase()));
        if boundary {
            push_lower(&chars[start..i], out);
            start = i;
        }
    }
    push_lower(&chars[start..], out);
}

fn push_lower(chars: &[char], out: &mut Vec<String>) {
    if chars.is_empty() {
        return;
    }
    out.push(chars.iter().map(|c| c.to_ascii_lowercase()).collect());
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn camel_case_splits() {
        assert_eq!(tokenize_code("getWidthInPoints"), ["get", "width", "in", "points"]);
    }

    #[test]
    fn snake_case_splits() {
        assert_eq!(tokenize_code("snake_case_name"), ["snake", "case", "name"]);
    }

    #[test]
    fn empty_input() {
        assert!(tokenize_code("").is_empty());
        assert!(tokenize_code("  !!() ").is_empty());
    }

    #[test]
    fn acronym_runs_and_digits() {
        assert_eq!(tokenize_code("XMLParser"), ["xml", "parser"]);
        assert_eq!(tokenize_code("base64Encode"), ["base64", "encode"]);
    }

    #[test]
    fn punctuation_dropped_from_code() {
        assert_eq!(
            tokenize_code("return widths.get(col);"),
            ["return", "widths", "get", "col"]
        );
    }
}
