//! Repository-aware code translation pipeline.
//!
//! Translates a function from a source repository into a paired target
//! repository by combining hybrid retrieval of similar functions,
//! tool-driven repository context gathering, and an iterative test-driven
//! refinement loop. Every LLM interaction goes through a uniform gateway
//! with scripted and replay backends, so whole runs are reproducible
//! offline.

pub mod error;
pub mod index;

pub use error::{Error, Result};
