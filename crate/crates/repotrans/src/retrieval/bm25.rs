//! Okapi BM25 over token lists.

use super::{RetrievalConfig, RetrievalHit, Route};

/// A document visible to BM25: an id and its token list.
pub(crate) struct Bm25Doc<'a> {
    pub id: &'a str,
    pub tokens: &'a [String],
}

fn term_frequency(tokens: &[String], term: &str) -> f64 {
    tokens.iter().filter(|t| t.as_str() == term).count() as f64
}

/// Ranks `docs` against `query_tokens` with Okapi BM25
/// (`idf = ln(1 + (N - df + 0.5) / (df + 0.5))`, repeated query tokens
/// contribute once per occurrence). Scores are normalized by the maximum in
/// the result set; zero-score documents are dropped (an all-zero result set
/// is empty); ties break by ascending id; the list is truncated to
/// `cfg.top_k`.
pub(crate) fn bm25_rank_docs(
    docs: &[Bm25Doc<'_>],
    query_tokens: &[String],
    cfg: &RetrievalConfig,
    route: Route,
) -> Vec<RetrievalHit> {
    if docs.is_empty() || query_tokens.is_empty() {
        return Vec::new();
    }
    let n = docs.len() as f64;
    let avgdl = docs.iter().map(|d| d.tokens.len() as f64).sum::<f64>() / n;

    let mut scored: Vec<(String, f64)> = Vec::new();
    for doc in docs {
        let dl = doc.tokens.len() as f64;
        let mut score = 0.0;
        for term in query_tokens {
            let tf = term_frequency(doc.tokens, term);
            if tf == 0.0 {
                continue;
            }
            let df = docs
                .iter()
                .filter(|d| d.tokens.iter().any(|t| t == term))
                .count() as f64;
            let idf = (1.0 + (n - df + 0.5) / (df + 0.5)).ln();
            let denom = tf + cfg.bm25_k1 * (1.0 - cfg.bm25_b + cfg.bm25_b * dl / avgdl.max(f64::MIN_POSITIVE));
            score += idf * tf * (cfg.bm25_k1 + 1.0) / denom;
        }
        if score > 0.0 {
            scored.push((doc.id.to_string(), score));
        }
    }
    if scored.is_empty() {
        return Vec::new();
    }
    let max = scored
        .iter()
        .map(|(_, s)| *s)
        .fold(f64::MIN, f64::max);
    for (_, s) in &mut scored {
        *s /= max;
    }
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    scored.truncate(cfg.top_k);
    scored
        .into_iter()
        .enumerate()
        .map(|(i, (id, score))| RetrievalHit {
            id,
            score,
            route,
            rank: i + 1,
        })
        .collect()
}

/// Public entry point over `(id, tokens)` pairs.
pub fn bm25_rank(
    entries: &[(String, Vec<String>)],
    query_tokens: &[String],
    cfg: &RetrievalConfig,
    route: Route,
) -> Vec<RetrievalHit> {
    let docs: Vec<Bm25Doc<'_>> = entries
        .iter()
        .map(|(id, tokens)| Bm25Doc {
            id,
            tokens,
        })
        .collect();
    bm25_rank_docs(&docs, query_tokens, cfg, route)
}
