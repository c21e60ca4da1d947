//! Structural scanner for brace-delimited languages (Java, C#).
//!
//! Lexes the file into significant tokens (comments and literals skipped,
//! byte offsets kept) and walks the token stream tracking brace structure.
//! All extracted text is sliced verbatim from the original source, so
//! comments inside method bodies survive.

use super::{
    ClassKind, ClassRecord, FieldRecord, FileFacts, ImportRecord, Language, MethodRecord, Param,
    Span,
};

#[derive(Debug, Clone, Copy, PartialEq)]
enum TokKind {
    Ident,
    Punct(char),
    Literal,
}

#[derive(Debug, Clone, Copy)]
struct Tok {
    kind: TokKind,
    start: usize,
    end: usize,
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
}

impl<'a> Lexer<'a> {
    fn lex(src: &'a str) -> Result<Vec<Tok>, String> {
        let lexer = Lexer {
            src,
            bytes: src.as_bytes(),
        };
        lexer.run()
    }

    fn run(&self) -> Result<Vec<Tok>, String> {
        let mut toks = Vec::new();
        let mut i = 0;
        let n = self.bytes.len();
        while i < n {
            let b = self.bytes[i];
            match b {
                b' ' | b'\t' | b'\r' | b'\n' => i += 1,
                b'/' if i + 1 < n && self.bytes[i + 1] == b'/' => {
                    while i < n && self.bytes[i] != b'\n' {
                        i += 1;
                    }
                }
                b'/' if i + 1 < n && self.bytes[i + 1] == b'*' => {
                    let start = i;
                    i += 2;
                    loop {
                        if i + 1 >= n {
                            return Err(format!("unterminated block comment at byte {start}"));
                        }
                        if self.bytes[i] == b'*' && self.bytes[i + 1] == b'/' {
                            i += 2;
                            break;
                        }
                        i += 1;
                    }
                }
                b'@' if i + 1 < n && self.bytes[i + 1] == b'"' => {
                    // C# verbatim string: "" is an escaped quote
                    let start = i;
                    i += 2;
                    loop {
                        if i >= n {
                            return Err(format!("unterminated verbatim string at byte {start}"));
                        }
                        if self.bytes[i] == b'"' {
                            if i + 1 < n && self.bytes[i + 1] == b'"' {
                                i += 2;
                                continue;
                            }
                            i += 1;
                            break;
                        }
                        i += 1;
                    }
                    toks.push(Tok {
                        kind: TokKind::Literal,
                        start,
                        end: i,
                    });
                }
                b'"' | b'\'' => {
                    let quote = b;
                    let start = i;
                    i += 1;
                    loop {
                        if i >= n {
                            return Err(format!("unterminated literal at byte {start}"));
                        }
                        if self.bytes[i] == b'\\' {
                            i += 2;
                            continue;
                        }
                        if self.bytes[i] == quote {
                            i += 1;
                            break;
                        }
                        i += 1;
                    }
                    toks.push(Tok {
                        kind: TokKind::Literal,
                        start,
                        end: i,
                    });
                }
                b if b.is_ascii_alphabetic() || b == b'_' || b == b'$' => {
                    let start = i;
                    while i < n
                        && (self.bytes[i].is_ascii_alphanumeric()
                            || self.bytes[i] == b'_'
                            || self.bytes[i] == b'$')
                    {
                        i += 1;
                    }
                    toks.push(Tok {
                        kind: TokKind::Ident,
                        start,
                        end: i,
                    });
                }
                b if b.is_ascii_digit() => {
                    let start = i;
                    while i < n
                        && (self.bytes[i].is_ascii_alphanumeric()
                            || self.bytes[i] == b'.'
                            || self.bytes[i] == b'_')
                    {
                        i += 1;
                    }
                    toks.push(Tok {
                        kind: TokKind::Literal,
                        start,
                        end: i,
                    });
                }
                _ => {
                    toks.push(Tok {
                        kind: TokKind::Punct(b as char),
                        start: i,
                        end: i + 1,
                    });
                    i += 1;
                }
            }
        }
        let _ = self.src;
        Ok(toks)
    }
}

fn modifier_set(language: Language) -> &'static [&'static str] {
    match language {
        Language::Java => &[
            "public",
            "protected",
            "private",
            "static",
            "final",
            "abstract",
            "synchronized",
            "native",
            "strictfp",
            "transient",
            "volatile",
            "default",
            "sealed",
        ],
        Language::CSharp => &[
            "public",
            "protected",
            "private",
            "internal",
            "static",
            "readonly",
            "const",
            "sealed",
            "abstract",
            "virtual",
            "override",
            "async",
            "partial",
            "extern",
            "unsafe",
            "new",
            "volatile",
            "required",
            "final",
        ],
        Language::Python => &[],
    }
}

struct Scanner<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    line_starts: Vec<usize>,
    language: Language,
    file_path: &'a str,
    facts: FileFacts,
}

pub(crate) fn scan_file(
    src: &str,
    file_path: &str,
    language: Language,
) -> Result<FileFacts, String> {
    let toks = Lexer::lex(src)?;
    let mut line_starts = vec![0usize];
    for (i, b) in src.bytes().enumerate() {
        if b == b'\n' {
            line_starts.push(i + 1);
        }
    }
    let mut scanner = Scanner {
        src,
        toks,
        line_starts,
        language,
        file_path,
        facts: FileFacts::default(),
    };
    let end = scanner.toks.len();
    scanner.parse_scope(0, end, String::new())?;
    Ok(scanner.facts)
}

impl<'a> Scanner<'a> {
    fn text(&self, tok: Tok) -> &'a str {
        &self.src[tok.start..tok.end]
    }

    fn is_ident(&self, i: usize, word: &str) -> bool {
        self.toks
            .get(i)
            .is_some_and(|t| t.kind == TokKind::Ident && self.text(*t) == word)
    }

    fn is_punct(&self, i: usize, ch: char) -> bool {
        self.toks
            .get(i)
            .is_some_and(|t| t.kind == TokKind::Punct(ch))
    }

    fn line_of(&self, byte: usize) -> usize {
        self.line_starts.partition_point(|&s| s <= byte)
    }

    /// Index just past the matching closer, given `i` pointing at the opener.
    fn skip_balanced(&self, mut i: usize, end: usize, open: char, close: char) -> Option<usize> {
        let mut depth = 0usize;
        while i < end {
            match self.toks[i].kind {
                TokKind::Punct(c) if c == open => depth += 1,
                TokKind::Punct(c) if c == close => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(i + 1);
                    }
                }
                _ => {}
            }
            i += 1;
        }
        None
    }

    /// Reads a dotted name (`a.b.C`) starting at `i`; returns (name, next).
    fn read_dotted(&self, mut i: usize, end: usize) -> (String, usize) {
        let mut name = String::new();
        while i < end {
            match self.toks[i].kind {
                TokKind::Ident => name.push_str(self.text(self.toks[i])),
                TokKind::Punct('.') => name.push('.'),
                _ => break,
            }
            i += 1;
        }
        (name, i)
    }

    /// Parses a namespace/file scope in `[i, end)`.
    fn parse_scope(&mut self, mut i: usize, end: usize, mut container: String) -> Result<(), String> {
        while i < end {
            if self.is_ident(i, "package") && self.language == Language::Java {
                let (name, next) = self.read_dotted(i + 1, end);
                container = name;
                i = self.skip_to_semicolon(next, end);
                continue;
            }
            if self.is_ident(i, "import") && self.language == Language::Java {
                let name_start = self.toks[i + 1].start;
                let semi = self.find_semicolon(i + 1, end);
                let name_end = self.toks[semi].start;
                self.facts.imports.push(ImportRecord {
                    file_path: self.file_path.to_string(),
                    imported_name: self.src[name_start..name_end].trim().to_string(),
                });
                i = semi + 1;
                continue;
            }
            if self.language == Language::CSharp
                && (self.is_ident(i, "using")
                    || (self.is_ident(i, "global") && self.is_ident(i + 1, "using")))
            {
                let kw = if self.is_ident(i, "global") { i + 1 } else { i };
                let name_start = self.toks[kw + 1].start;
                let semi = self.find_semicolon(kw + 1, end);
                let name_end = self.toks[semi].start;
                self.facts.imports.push(ImportRecord {
                    file_path: self.file_path.to_string(),
                    imported_name: self.src[name_start..name_end].trim().to_string(),
                });
                i = semi + 1;
                continue;
            }
            if self.is_ident(i, "namespace") && self.language == Language::CSharp {
                let (name, next) = self.read_dotted(i + 1, end);
                let nested = if container.is_empty() {
                    name
                } else {
                    format!("{container}.{name}")
                };
                if self.is_punct(next, '{') {
                    let close = self
                        .skip_balanced(next, end, '{', '}')
                        .ok_or("unbalanced namespace braces")?;
                    self.parse_scope(next + 1, close - 1, nested)?;
                    i = close;
                } else {
                    // file-scoped namespace
                    container = nested;
                    i = self.skip_to_semicolon(next, end);
                }
                continue;
            }

            // Try a type declaration; anything else at scope level is skipped.
            if let Some(next) = self.try_parse_type(i, end, &container, None)? {
                i = next;
            } else {
                i = self.skip_statement(i, end)?;
            }
        }
        Ok(())
    }

    fn find_semicolon(&self, mut i: usize, end: usize) -> usize {
        while i < end && !self.is_punct(i, ';') {
            i += 1;
        }
        i.min(end.saturating_sub(1))
    }

    fn skip_to_semicolon(&self, i: usize, end: usize) -> usize {
        let semi = self.find_semicolon(i, end);
        (semi + 1).min(end)
    }

    /// Skips one non-declaration construct: balanced braces or up to `;`.
    fn skip_statement(&self, mut i: usize, end: usize) -> Result<usize, String> {
        while i < end {
            match self.toks[i].kind {
                TokKind::Punct(';') => return Ok(i + 1),
                TokKind::Punct('{') => {
                    return self
                        .skip_balanced(i, end, '{', '}')
                        .ok_or_else(|| "unbalanced braces".to_string());
                }
                _ => i += 1,
            }
        }
        Ok(end)
    }

    /// Skips attribute blocks `[...]` and annotations `@Name(...)`.
    fn skip_metadata(&self, mut i: usize, end: usize) -> usize {
        loop {
            if self.is_punct(i, '[') && self.language == Language::CSharp {
                match self.skip_balanced(i, end, '[', ']') {
                    Some(next) => {
                        i = next;
                        continue;
                    }
                    None => return i,
                }
            }
            if self.is_punct(i, '@') && self.language == Language::Java {
                i += 1;
                if i < end && self.toks[i].kind == TokKind::Ident {
                    i += 1;
                }
                if self.is_punct(i, '(') {
                    if let Some(next) = self.skip_balanced(i, end, '(', ')') {
                        i = next;
                    }
                }
                continue;
            }
            return i;
        }
    }

    /// Attempts to parse a class/interface/enum declaration starting at `i`.
    /// Returns the index past the declaration, or None if `i` does not start
    /// a type declaration.
    fn try_parse_type(
        &mut self,
        start: usize,
        end: usize,
        container: &str,
        outer: Option<&str>,
    ) -> Result<Option<usize>, String> {
        let mut i = self.skip_metadata(start, end);
        let modifiers = modifier_set(self.language);
        while i < end
            && self.toks[i].kind == TokKind::Ident
            && modifiers.contains(&self.text(self.toks[i]))
        {
            i = self.skip_metadata(i + 1, end);
        }
        let kind = if self.is_ident(i, "class") {
            ClassKind::Class
        } else if self.is_ident(i, "interface") {
            ClassKind::Interface
        } else if self.is_ident(i, "enum") {
            ClassKind::Enum
        } else {
            return Ok(None);
        };
        i += 1;
        if i >= end || self.toks[i].kind != TokKind::Ident {
            return Err("type keyword without a name".to_string());
        }
        let simple_name = self.text(self.toks[i]).to_string();
        i += 1;
        // skip generics, extends/implements/base lists, constraints
        while i < end && !self.is_punct(i, '{') {
            if self.is_punct(i, ';') {
                // forward declaration-ish; record an empty type
                return Ok(Some(i + 1));
            }
            i += 1;
        }
        if i >= end {
            return Err(format!("type {simple_name} has no body"));
        }
        let body_close = self
            .skip_balanced(i, end, '{', '}')
            .ok_or_else(|| format!("unbalanced braces in type {simple_name}"))?;

        let nested_simple = match outer {
            Some(outer_simple) => format!("{outer_simple}.{simple_name}"),
            None => simple_name.clone(),
        };
        let qualified = if container.is_empty() {
            nested_simple.clone()
        } else {
            format!("{container}.{nested_simple}")
        };

        let mut class = ClassRecord {
            simple_name: simple_name.clone(),
            qualified_name: qualified.clone(),
            container: container.to_string(),
            fields: Vec::new(),
            method_signatures: Vec::new(),
            file_path: self.file_path.to_string(),
            kind,
        };

        let mut body_i = i + 1;
        if kind == ClassKind::Enum {
            body_i = self.parse_enum_constants(body_i, body_close - 1, &mut class);
        }
        self.parse_members(body_i, body_close - 1, &mut class, container, &nested_simple)?;
        self.facts.classes.push(class);
        Ok(Some(body_close))
    }

    /// Enum constants up to the first `;` (Java) or the body end (C#).
    /// Returns the index where regular member parsing should begin.
    fn parse_enum_constants(&self, mut i: usize, end: usize, class: &mut ClassRecord) -> usize {
        let mut constants = Vec::new();
        let mut expecting_name = true;
        while i < end {
            match self.toks[i].kind {
                TokKind::Punct(';') => {
                    i += 1;
                    break;
                }
                TokKind::Punct(',') => {
                    expecting_name = true;
                    i += 1;
                }
                TokKind::Punct('(') => {
                    i = self.skip_balanced(i, end, '(', ')').unwrap_or(end);
                }
                TokKind::Punct('=') => {
                    // C# explicit value; skip to next comma
                    while i < end && !self.is_punct(i, ',') {
                        i += 1;
                    }
                }
                TokKind::Ident if expecting_name => {
                    constants.push(self.text(self.toks[i]).to_string());
                    expecting_name = false;
                    i += 1;
                }
                _ => i += 1,
            }
        }
        for name in constants {
            class.fields.push(FieldRecord {
                name,
                declared_type: class.simple_name.clone(),
                modifiers: Vec::new(),
            });
        }
        i.min(end)
    }

    /// Parses the members of a type body in `[i, end)`.
    fn parse_members(
        &mut self,
        mut i: usize,
        end: usize,
        class: &mut ClassRecord,
        container: &str,
        nested_simple: &str,
    ) -> Result<(), String> {
        while i < end {
            if self.is_punct(i, ';') {
                i += 1;
                continue;
            }
            // nested type?
            if let Some(next) = self.try_parse_type(i, end, container, Some(nested_simple))? {
                i = next;
                continue;
            }
            i = self.parse_member(i, end, class)?;
        }
        Ok(())
    }

    /// Parses one field, property, method, or initializer block member.
    fn parse_member(
        &mut self,
        start: usize,
        end: usize,
        class: &mut ClassRecord,
    ) -> Result<usize, String> {
        let member_start_byte = self.toks[start].start;
        let modifiers_set = modifier_set(self.language);
        let mut i = self.skip_metadata(start, end);
        let mut modifiers = Vec::new();
        while i < end
            && self.toks[i].kind == TokKind::Ident
            && modifiers_set.contains(&self.text(self.toks[i]))
        {
            modifiers.push(self.text(self.toks[i]).to_string());
            i = self.skip_metadata(i + 1, end);
        }
        let decl_start = i;

        // Scan for the first structural decision token at angle-depth 0.
        let mut angle = 0i32;
        let mut j = i;
        while j < end {
            match self.toks[j].kind {
                TokKind::Punct('<') => angle += 1,
                TokKind::Punct('>') => angle = (angle - 1).max(0),
                TokKind::Punct('=') if angle == 0 => {
                    // expression-bodied member `=>` is handled as a body below
                    if self.is_punct(j + 1, '>') {
                        break;
                    }
                    return self.finish_field(member_start_byte, decl_start, j, end, modifiers, class);
                }
                TokKind::Punct(';') if angle == 0 => {
                    return self.finish_field(member_start_byte, decl_start, j, end, modifiers, class);
                }
                TokKind::Punct('(') if angle == 0 => {
                    return self.finish_method(member_start_byte, decl_start, j, end, modifiers, class);
                }
                TokKind::Punct('{') if angle == 0 => {
                    // property (has a name) or initializer block (no name)
                    return self.finish_property_or_block(
                        member_start_byte,
                        decl_start,
                        j,
                        end,
                        modifiers,
                        class,
                    );
                }
                _ => {}
            }
            j += 1;
        }
        Ok(end)
    }

    fn finish_field(
        &mut self,
        _member_start: usize,
        decl_start: usize,
        stop: usize,
        end: usize,
        modifiers: Vec<String>,
        class: &mut ClassRecord,
    ) -> Result<usize, String> {
        // tokens in [decl_start, stop) hold `Type name [, name2 ...]`
        let segment: Vec<usize> = (decl_start..stop).collect();
        if segment.len() >= 2 {
            // first declarator: last ident before stop or before first comma
            let mut split_points = vec![decl_start];
            let mut angle = 0i32;
            for &k in &segment {
                match self.toks[k].kind {
                    TokKind::Punct('<') => angle += 1,
                    TokKind::Punct('>') => angle -= 1,
                    TokKind::Punct(',') if angle == 0 => split_points.push(k + 1),
                    _ => {}
                }
            }
            split_points.push(stop);
            let mut declared_type = String::new();
            for w in split_points.windows(2) {
                let (seg_start, seg_end) = (w[0], w[1]);
                let seg_end_tok = if self.is_punct(seg_end.saturating_sub(1), ',') {
                    seg_end - 1
                } else {
                    seg_end
                };
                let mut name_idx = None;
                for k in (seg_start..seg_end_tok).rev() {
                    if self.toks[k].kind == TokKind::Ident {
                        name_idx = Some(k);
                        break;
                    }
                }
                if let Some(name_idx) = name_idx {
                    let name = self.text(self.toks[name_idx]).to_string();
                    if seg_start == decl_start {
                        let ty_start = self.toks[seg_start].start;
                        let ty_end = self.toks[name_idx].start;
                        declared_type = self.src[ty_start..ty_end].trim().to_string();
                    }
                    if !declared_type.is_empty() && !name.is_empty() {
                        class.fields.push(FieldRecord {
                            name,
                            declared_type: declared_type.clone(),
                            modifiers: modifiers.clone(),
                        });
                    }
                }
            }
        }
        // skip initializer if stopped at `=`
        if self.is_punct(stop, '=') {
            let mut k = stop;
            while k < end {
                match self.toks[k].kind {
                    TokKind::Punct(';') => return Ok(k + 1),
                    TokKind::Punct('{') => {
                        k = self
                            .skip_balanced(k, end, '{', '}')
                            .ok_or("unbalanced initializer braces")?;
                    }
                    TokKind::Punct('(') => {
                        k = self
                            .skip_balanced(k, end, '(', ')')
                            .ok_or("unbalanced initializer parens")?;
                    }
                    _ => k += 1,
                }
            }
            return Ok(end);
        }
        Ok(stop + 1)
    }

    fn finish_method(
        &mut self,
        member_start: usize,
        decl_start: usize,
        paren_open: usize,
        end: usize,
        _modifiers: Vec<String>,
        class: &mut ClassRecord,
    ) -> Result<usize, String> {
        // name is the ident immediately before `(`
        let mut name_idx = None;
        for k in (decl_start..paren_open).rev() {
            match self.toks[k].kind {
                TokKind::Ident => {
                    name_idx = Some(k);
                    break;
                }
                TokKind::Punct('>') => {
                    // generic method return type like List<T> foo(...)? The
                    // name always directly precedes `(`; a `>` here means a
                    // constructor-less construct we do not index.
                    break;
                }
                _ => break,
            }
        }
        let Some(name_idx) = name_idx else {
            // not a method (e.g. initializer calling code); skip statement
            return self.skip_statement(paren_open, end);
        };
        let name = self.text(self.toks[name_idx]).to_string();
        let paren_close = self
            .skip_balanced(paren_open, end, '(', ')')
            .ok_or("unbalanced parameter list")?;
        let sig_end_byte = self.toks[paren_close - 1].end;
        let signature_text = self.src[member_start..sig_end_byte].to_string();
        let return_type = self.src[self.toks[decl_start].start..self.toks[name_idx].start]
            .trim()
            .to_string();
        let parameters = self.parse_params(paren_open + 1, paren_close - 1);

        class.method_signatures.push(signature_text.clone());

        // after `)`: throws/where clauses, then `{`, `;`, or `=> expr;`
        let mut k = paren_close;
        while k < end {
            match self.toks[k].kind {
                TokKind::Punct('{') => {
                    let body_close = self
                        .skip_balanced(k, end, '{', '}')
                        .ok_or("unbalanced method body")?;
                    let body_start_byte = self.toks[k].start;
                    let body_end_byte = self.toks[body_close - 1].end;
                    self.push_method(
                        class,
                        name,
                        signature_text,
                        parameters,
                        return_type,
                        member_start,
                        body_start_byte,
                        body_end_byte,
                    );
                    return Ok(body_close);
                }
                TokKind::Punct(';') => {
                    // abstract/interface signature: no body, no MethodRecord
                    return Ok(k + 1);
                }
                TokKind::Punct('=') if self.is_punct(k + 1, '>') => {
                    // expression-bodied member: body is `=> expr;`
                    let body_start_byte = self.toks[k].start;
                    let mut m = k + 2;
                    while m < end && !self.is_punct(m, ';') {
                        if self.is_punct(m, '(') {
                            m = self
                                .skip_balanced(m, end, '(', ')')
                                .ok_or("unbalanced expression body")?;
                            continue;
                        }
                        m += 1;
                    }
                    let body_end_byte = self.toks[m.min(end - 1)].end;
                    self.push_method(
                        class,
                        name,
                        signature_text,
                        parameters,
                        return_type,
                        member_start,
                        body_start_byte,
                        body_end_byte,
                    );
                    return Ok((m + 1).min(end));
                }
                _ => k += 1,
            }
        }
        Ok(end)
    }

    #[allow(clippy::too_many_arguments)]
    fn push_method(
        &mut self,
        class: &ClassRecord,
        name: String,
        signature_text: String,
        parameters: Vec<Param>,
        return_type: String,
        member_start: usize,
        body_start: usize,
        body_end: usize,
    ) {
        self.facts.methods.push(MethodRecord {
            owning_class: class.qualified_name.clone(),
            name,
            signature_text,
            parameters,
            return_type,
            body_text: self.src[body_start..body_end].to_string(),
            file_path: self.file_path.to_string(),
            span: Span {
                start: self.line_of(member_start),
                end: self.line_of(body_end - 1),
            },
        });
    }

    fn parse_params(&self, start: usize, end: usize) -> Vec<Param> {
        let mut params = Vec::new();
        if start >= end {
            return params;
        }
        let mut segments = vec![start];
        let mut angle = 0i32;
        let mut depth = 0i32;
        for k in start..end {
            match self.toks[k].kind {
                TokKind::Punct('<') => angle += 1,
                TokKind::Punct('>') => angle -= 1,
                TokKind::Punct('(') | TokKind::Punct('[') => depth += 1,
                TokKind::Punct(')') | TokKind::Punct(']') => depth -= 1,
                TokKind::Punct(',') if angle == 0 && depth == 0 => segments.push(k + 1),
                _ => {}
            }
        }
        segments.push(end);
        for w in segments.windows(2) {
            let (seg_start, mut seg_end) = (w[0], w[1]);
            if seg_end > seg_start && self.is_punct(seg_end - 1, ',') {
                seg_end -= 1;
            }
            // cut default values: `name = expr`
            let mut cut = seg_end;
            for k in seg_start..seg_end {
                if self.is_punct(k, '=') {
                    cut = k;
                    break;
                }
            }
            let mut name_idx = None;
            for k in (seg_start..cut).rev() {
                if self.toks[k].kind == TokKind::Ident {
                    name_idx = Some(k);
                    break;
                }
            }
            if let Some(name_idx) = name_idx {
                let name = self.text(self.toks[name_idx]).to_string();
                let ty = self.src[self.toks[seg_start].start..self.toks[name_idx].start]
                    .trim()
                    .to_string();
                params.push(Param {
                    name,
                    type_name: ty,
                });
            }
        }
        params
    }

    fn finish_property_or_block(
        &mut self,
        member_start: usize,
        decl_start: usize,
        brace_open: usize,
        end: usize,
        modifiers: Vec<String>,
        class: &mut ClassRecord,
    ) -> Result<usize, String> {
        let close = self
            .skip_balanced(brace_open, end, '{', '}')
            .ok_or("unbalanced property/initializer braces")?;
        // name = last ident before `{`; none means an initializer block
        let mut name_idx = None;
        for k in (decl_start..brace_open).rev() {
            if self.toks[k].kind == TokKind::Ident {
                name_idx = Some(k);
                break;
            }
            break;
        }
        if let Some(name_idx) = name_idx {
            if name_idx > decl_start {
                let name = self.text(self.toks[name_idx]).to_string();
                let declared_type = self.src
                    [self.toks[decl_start].start..self.toks[name_idx].start]
                    .trim()
                    .to_string();
                if !declared_type.is_empty() {
                    class.fields.push(FieldRecord {
                        name,
                        declared_type,
                        modifiers,
                    });
                }
            }
        }
        let _ = member_start;
        // C# property initializer `{ ... } = value;`
        let mut k = close;
        if self.is_punct(k, '=') && !self.is_punct(k + 1, '>') {
            while k < end && !self.is_punct(k, ';') {
                k += 1;
            }
            k = (k + 1).min(end);
        }
        Ok(k)
    }
}
