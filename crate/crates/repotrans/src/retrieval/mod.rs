//! Pair store, name store, and the multi-route hybrid retrieval they serve.
//!
//! The pair store indexes the source bodies of known source-target
//! translation pairs (dense hashed-subtoken embeddings plus BM25 token
//! lists). The name store indexes the names of every method in the target
//! repository for lexical name retrieval. Both are immutable after build;
//! queries are pure and safe to run concurrently. A query counter on each
//! store exists only to verify bypass contracts in tests.

mod bm25;
mod embed;
mod rank;
mod tokenize;

pub use bm25::bm25_rank;
pub use embed::{cosine, embed, EmbeddingVector};
pub use rank::{dense_rank, merge_routes, retrieve_names, retrieve_pairs, rrf_fuse};
pub use tokenize::tokenize_code;

use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{RepoIndex, TranslationPair};

/// Knobs for every retrieval route.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalConfig {
    /// Results kept per route and after fusion.
    pub top_k: usize,
    /// Constant `k` in the reciprocal-rank-fusion denominator.
    pub rrf_constant: f64,
    pub bm25_k1: f64,
    pub bm25_b: f64,
    /// Dimension of the hashed-subtoken embedding.
    pub embedding_dim: usize,
}

impl Default for RetrievalConfig {
    fn default() -> Self {
        RetrievalConfig {
            top_k: 5,
            rrf_constant: 60.0,
            bm25_k1: 1.2,
            bm25_b: 0.75,
            embedding_dim: 256,
        }
    }
}

/// Which retrieval route produced a hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Dense,
    Sparse,
    Name,
    Fused,
}

/// One scored retrieval result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RetrievalHit {
    /// pair id (pair store) or method ref (name store).
    pub id: String,
    /// Normalized score in `[0, 1]`.
    pub score: f64,
    pub route: Route,
    /// 1-based position in the emitted list.
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairEntry {
    pub pair_id: String,
    pub source_body: String,
    pub target_body: String,
    /// `Class.method` reference of the pair's target function; lets fusion
    /// dedup a pair hit against a name hit for the same method.
    pub target_ref: String,
    pub embedding: EmbeddingVector,
    pub tokens: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PairStore {
    pub config: RetrievalConfig,
    pub entries: Vec<PairEntry>,
    #[serde(skip)]
    queries: AtomicUsize,
}

impl PairStore {
    pub fn build(pairs: &[TranslationPair], config: &RetrievalConfig) -> PairStore {
        let entries = pairs
            .iter()
            .map(|pair| PairEntry {
                pair_id: pair.pair_id.clone(),
                source_body: pair.source_fn.body_text.clone(),
                target_body: pair.target_ground_truth.body_text.clone(),
                target_ref: pair.target_ground_truth.method_ref(),
                embedding: embed(&pair.source_fn.body_text, config.embedding_dim),
                tokens: tokenize_code(&pair.source_fn.body_text),
            })
            .collect();
        PairStore {
            config: config.clone(),
            entries,
            queries: AtomicUsize::new(0),
        }
    }

    pub fn entry(&self, pair_id: &str) -> Option<&PairEntry> {
        self.entries.iter().find(|e| e.pair_id == pair_id)
    }

    pub fn query_count(&self) -> usize {
        self.queries.load(Ordering::SeqCst)
    }

    pub(crate) fn note_query(&self) {
        self.queries.fetch_add(1, Ordering::SeqCst);
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NameEntry {
    /// `Class.method` reference resolvable in the target index.
    pub method_ref: String,
    pub name: String,
    pub tokens: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NameStore {
    pub config: RetrievalConfig,
    pub entries: Vec<NameEntry>,
    #[serde(skip)]
    queries: AtomicUsize,
}

impl NameStore {
    /// Indexes the name of every method in the target repository, one entry
    /// per distinct method ref (overloads collapse).
    pub fn build(target_index: &RepoIndex, config: &RetrievalConfig) -> NameStore {
        let mut seen = std::collections::BTreeSet::new();
        let mut entries = Vec::new();
        for method in target_index.all_methods() {
            let method_ref = method.method_ref();
            if seen.insert(method_ref.clone()) {
                entries.push(NameEntry {
                    method_ref,
                    name: method.name.clone(),
                    tokens: tokenize_code(&method.name),
                });
            }
        }
        NameStore {
            config: config.clone(),
            entries,
            queries: AtomicUsize::new(0),
        }
    }

    pub fn query_count(&self) -> usize {
        self.queries.load(Ordering::SeqCst)
    }

    pub(crate) fn note_query(&self) {
        self.queries.fetch_add(1, Ordering::SeqCst);
    }
}

const STORE_FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct StoreFile<T> {
    version: u32,
    store: T,
}

fn save_store<T: Serialize>(store: &T, path: &Path) -> Result<()> {
    let file = StoreFile {
        version: STORE_FORMAT_VERSION,
        store,
    };
    let mut text = serde_json::to_string(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn load_store<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read store {}: {e}", path.display())))?;
    let file: StoreFile<T> = serde_json::from_str(&text)?;
    if file.version != STORE_FORMAT_VERSION {
        return Err(Error::Config(format!(
            "store {} has format version {}, expected {STORE_FORMAT_VERSION}",
            path.display(),
            file.version
        )));
    }
    Ok(file.store)
}

impl PairStore {
    pub fn save(&self, path: &Path) -> Result<()> {
        save_store(self, path)
    }

    pub fn load(path: &Path) -> Result<PairStore> {
        load_store(path)
    }
}

impl NameStore {
    pub fn save(&self, path: &Path) -> Result<()> {
        save_store(self, path)
    }

    pub fn load(path: &Path) -> Result<NameStore> {
        load_store(path)
    }
}

#[cfg(test)]
mod tests;
