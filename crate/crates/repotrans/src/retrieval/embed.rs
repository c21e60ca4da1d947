//! Default offline embedder: hashed bag-of-subtokens term frequencies.
//!
//! Fully deterministic (FNV-1a bucketing, no RNG, no network), so the same
//! text always yields the same vector on every platform. A remote embedding
//! backend can replace this behind the same vector type; when it fails,
//! retrieval degrades to sparse-only with a warning (see `rank`).

use serde::{Deserialize, Serialize};

use super::tokenize_code;

/// Fixed-length numeric vector, L2-normalized when non-empty input hashed
/// into at least one bucket.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingVector {
    pub values: Vec<f64>,
    pub dim: usize,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash = FNV_OFFSET;
    for &b in bytes {
        hash ^= u64::from(b);
        hash = hash.wrapping_mul(FNV_PRIME);
    }
    hash
}

/// Bucket index a token hashes into. Exposed for tests that need to build
/// collision-free token sets.
pub fn token_bucket(token: &str, dim: usize) -> usize {
    (fnv1a64(token.as_bytes()) % dim as u64) as usize
}

/// Embeds `text` as an L2-normalized term-frequency vector over hashed
/// subtokens. Non-empty text that yields no subtokens is hashed whole, so
/// every non-empty input has at least one non-zero entry.
pub fn embed(text: &str, dim: usize) -> EmbeddingVector {
    assert!(dim > 0, "embedding dimension must be positive");
    let mut values = vec![0.0f64; dim];
    let mut tokens = tokenize_code(text);
    if tokens.is_empty() && !text.trim().is_empty() {
        tokens.push(text.trim().to_ascii_lowercase());
    }
    for token in &tokens {
        values[token_bucket(token, dim)] += 1.0;
    }
    let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in &mut values {
            *v /= norm;
        }
    }
    EmbeddingVector { values, dim }
}

/// Cosine similarity; 0.0 when either vector is all zeros.
pub fn cosine(a: &EmbeddingVector, b: &EmbeddingVector) -> f64 {
    if a.dim != b.dim {
        return 0.0;
    }
    let dot: f64 = a.values.iter().zip(&b.values).map(|(x, y)| x * y).sum();
    let na: f64 = a.values.iter().map(|v| v * v).sum::<f64>().sqrt();
    let nb: f64 = b.values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_text_identical_vectors() {
        let t = "public int collectCount() { return count; }";
        assert_eq!(embed(t, 256), embed(t, 256));
    }

    #[test]
    fn self_cosine_is_one() {
        let v = embed("formatLabel prefix label", 256);
        assert!((cosine(&v, &v) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn disjoint_tokens_without_collisions_are_orthogonal() {
        let dim = 256;
        let a = "alpha bravo charlie";
        let b = "delta echo foxtrot";
        let buckets_a: Vec<usize> = tokenize_code(a).iter().map(|t| token_bucket(t, dim)).collect();
        let buckets_b: Vec<usize> = tokenize_code(b).iter().map(|t| token_bucket(t, dim)).collect();
        assert!(
            buckets_a.iter().all(|x| !buckets_b.contains(x)),
            "fixture tokens collide; pick different words"
        );
        assert_eq!(cosine(&embed(a, dim), &embed(b, dim)), 0.0);
    }

    #[test]
    fn tokenless_nonempty_text_is_nonzero() {
        let v = embed("!!!", 64);
        assert!(v.values.iter().any(|&x| x > 0.0));
    }
}
