//! Indentation-based structural scanner for Python.
//!
//! Extracts classes, their `def` methods, class-level attribute
//! assignments, and module imports. Bodies are verbatim line slices, so
//! comments and docstrings survive. Module-level functions are outside the
//! class-centric model and are not indexed.

use super::{ClassKind, ClassRecord, FieldRecord, FileFacts, ImportRecord, MethodRecord, Param, Span};

struct Line<'a> {
    raw: &'a str,
    /// Leading whitespace width in bytes.
    indent: usize,
    /// Trimmed content.
    body: &'a str,
    /// Byte offset of the line start in the file.
    offset: usize,
}

fn split_lines(src: &str) -> Vec<Line<'_>> {
    let mut lines = Vec::new();
    let mut offset = 0usize;
    for raw_incl in src.split_inclusive('\n') {
        let raw = raw_incl.trim_end_matches(['\n', '\r']);
        let body = raw.trim_start();
        lines.push(Line {
            raw,
            indent: raw.len() - body.len(),
            body: body.trim_end(),
            offset,
        });
        offset += raw_incl.len();
    }
    lines
}

/// Module path for a repo-relative file: `pkg/mod.py` -> `pkg.mod`,
/// `pkg/__init__.py` -> `pkg`.
fn module_path(file_path: &str) -> String {
    let trimmed = file_path.strip_suffix(".py").unwrap_or(file_path);
    let trimmed = trimmed.strip_suffix("/__init__").unwrap_or(trimmed);
    trimmed.replace('/', ".")
}

pub(crate) fn scan_file(src: &str, file_path: &str) -> Result<FileFacts, String> {
    let lines = split_lines(src);
    let module = module_path(file_path);
    let mut facts = FileFacts::default();

    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        if line.body.is_empty() || line.body.starts_with('#') {
            i += 1;
            continue;
        }
        if let Some(rest) = line.body.strip_prefix("import ") {
            for part in rest.split(',') {
                let name = part.trim().split_whitespace().next().unwrap_or("");
                if !name.is_empty() {
                    facts.imports.push(ImportRecord {
                        file_path: file_path.to_string(),
                        imported_name: name.to_string(),
                    });
                }
            }
            i += 1;
            continue;
        }
        if let Some(rest) = line.body.strip_prefix("from ") {
            if let Some((base, names)) = rest.split_once(" import ") {
                let base = base.trim();
                for part in names.split(',') {
                    let name = part.trim().split_whitespace().next().unwrap_or("");
                    if !name.is_empty() {
                        facts.imports.push(ImportRecord {
                            file_path: file_path.to_string(),
                            imported_name: format!("{base}.{name}"),
                        });
                    }
                }
            }
            i += 1;
            continue;
        }
        if line.indent == 0 && is_class_header(line.body) {
            i = scan_class(src, &lines, i, file_path, &module, &mut facts)?;
            continue;
        }
        i += 1;
    }
    Ok(facts)
}

fn is_class_header(body: &str) -> bool {
    body.strip_prefix("class ")
        .is_some_and(|rest| rest.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_'))
}

fn class_name(body: &str) -> Option<&str> {
    let rest = body.strip_prefix("class ")?;
    let end = rest
        .find(|c: char| !(c.is_alphanumeric() || c == '_'))
        .unwrap_or(rest.len());
    Some(&rest[..end])
}

/// Last line index (inclusive) of the block indented more than `indent`
/// starting at `first`. Trailing blank lines are excluded.
fn block_end(lines: &[Line<'_>], first: usize, indent: usize) -> usize {
    let mut last = first.saturating_sub(1);
    let mut i = first;
    while i < lines.len() {
        if lines[i].body.is_empty() {
            i += 1;
            continue;
        }
        if lines[i].indent <= indent {
            break;
        }
        last = i;
        i += 1;
    }
    last
}

fn scan_class(
    src: &str,
    lines: &[Line<'_>],
    header: usize,
    file_path: &str,
    container: &str,
    facts: &mut FileFacts,
) -> Result<usize, String> {
    let hline = &lines[header];
    let simple = class_name(hline.body)
        .ok_or_else(|| format!("malformed class header at line {}", header + 1))?
        .to_string();
    let qualified = format!("{container}.{simple}");
    let end = block_end(lines, header + 1, hline.indent);
    if end <= header {
        return Err(format!("class {simple} has an empty body"));
    }

    let mut class = ClassRecord {
        simple_name: simple.clone(),
        qualified_name: qualified.clone(),
        container: container.to_string(),
        fields: Vec::new(),
        method_signatures: Vec::new(),
        file_path: file_path.to_string(),
        kind: ClassKind::Class,
    };

    let member_indent = lines[header + 1..=end]
        .iter()
        .filter(|l| !l.body.is_empty())
        .map(|l| l.indent)
        .min()
        .unwrap_or(hline.indent + 4);

    let mut i = header + 1;
    while i <= end {
        let line = &lines[i];
        if line.body.is_empty() || line.indent != member_indent {
            i += 1;
            continue;
        }
        if line.body.starts_with("def ") {
            i = scan_method(src, lines, i, file_path, &qualified, &mut class, facts)?;
            continue;
        }
        if is_class_header(line.body) {
            i = scan_class(src, lines, i, file_path, &qualified, facts)?;
            continue;
        }
        if let Some(field) = parse_class_attr(line.body) {
            class.fields.push(field);
        }
        i += 1;
    }

    facts.classes.push(class);
    Ok(end + 1)
}

/// `name: type = value` or `name = value` at class level.
fn parse_class_attr(body: &str) -> Option<FieldRecord> {
    if body.starts_with('#') || body.starts_with('@') || body.starts_with('"') {
        return None;
    }
    let eq = body.find('=')?;
    if body.as_bytes().get(eq + 1) == Some(&b'=') {
        return None;
    }
    let lhs = body[..eq].trim_end_matches(['=', ' ']).trim();
    let (name, declared_type) = match lhs.split_once(':') {
        Some((n, t)) => (n.trim(), t.trim().to_string()),
        None => (lhs, "object".to_string()),
    };
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return None;
    }
    Some(FieldRecord {
        name: name.to_string(),
        declared_type,
        modifiers: Vec::new(),
    })
}

fn scan_method(
    src: &str,
    lines: &[Line<'_>],
    header: usize,
    file_path: &str,
    owning_class: &str,
    class: &mut ClassRecord,
    facts: &mut FileFacts,
) -> Result<usize, String> {
    let hline = &lines[header];
    let name_rest = hline.body.strip_prefix("def ").unwrap_or("");
    let name_end = name_rest
        .find(|c: char| !(c.is_alphanumeric() || c == '_'))
        .unwrap_or(name_rest.len());
    let name = name_rest[..name_end].to_string();
    if name.is_empty() {
        return Err(format!("malformed def at line {}", header + 1));
    }

    let def_byte = hline.offset + hline.indent;
    let open = src[def_byte..]
        .find('(')
        .map(|o| def_byte + o)
        .ok_or_else(|| format!("def without parameter list at line {}", header + 1))?;
    let close = balanced_paren_end(src, open)
        .ok_or_else(|| format!("unbalanced parameter list at line {}", header + 1))?;
    let signature_text = src[def_byte..=close].to_string();
    let params_text = &src[open + 1..close];

    // `-> T:` return annotation between `)` and `:`
    let after = &src[close + 1..];
    let colon = after
        .find(':')
        .ok_or_else(|| format!("def without `:` at line {}", header + 1))?;
    let between = after[..colon].trim();
    let return_type = between
        .strip_prefix("->")
        .map(|t| t.trim().to_string())
        .unwrap_or_default();

    let end = block_end(lines, header + 1, hline.indent);
    if end <= header {
        return Err(format!("def {name} has an empty body"));
    }
    let body_start = lines[header + 1].offset;
    let body_end = lines[end].offset + lines[end].raw.len();
    let body_text = src[body_start..body_end].to_string();

    class.method_signatures.push(signature_text.clone());
    facts.methods.push(MethodRecord {
        owning_class: owning_class.to_string(),
        name,
        signature_text,
        parameters: parse_py_params(params_text),
        return_type,
        body_text,
        file_path: file_path.to_string(),
        span: Span {
            start: header + 1,
            end: end + 1,
        },
    });
    Ok(end + 1)
}

fn parse_py_params(text: &str) -> Vec<Param> {
    let mut params = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    let bytes = text.as_bytes();
    let mut segments = Vec::new();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' | b'[' | b'{' => depth += 1,
            b')' | b']' | b'}' => depth -= 1,
            b',' if depth == 0 => {
                segments.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    segments.push(&text[start..]);
    for seg in segments {
        let seg = seg.trim().trim_start_matches('*');
        if seg.is_empty() {
            continue;
        }
        let seg = seg.split('=').next().unwrap_or(seg).trim();
        let (name, ty) = match seg.split_once(':') {
            Some((n, t)) => (n.trim(), t.trim()),
            None => (seg, ""),
        };
        if !name.is_empty() {
            params.push(Param {
                name: name.to_string(),
                type_name: ty.to_string(),
            });
        }
    }
    params
}

fn balanced_paren_end(src: &str, open: usize) -> Option<usize> {
    let bytes = src.as_bytes();
    let mut depth = 0i32;
    let mut i = open;
    let mut in_str: Option<u8> = None;
    while i < bytes.len() {
        let b = bytes[i];
        if let Some(q) = in_str {
            if b == b'\\' {
                i += 2;
                continue;
            }
            if b == q {
                in_str = None;
            }
            i += 1;
            continue;
        }
        match b {
            b'"' | b'\'' => in_str = Some(b),
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
        i += 1;
    }
    None
}
