//! Technical leverage analytics for npm package corpora.
//!
//! The pipeline reads registry metadata and unpacked release sources,
//! resolves each release's dependencies as of its publish time, measures
//! own and borrowed code, relates size changes to release intervals and
//! matches resolved versions against an advisory snapshot.

pub mod corpus;
pub mod metrics;
pub mod pipeline;
pub mod resolver;
pub mod semver;
pub mod sizer;
pub mod stats;
pub mod vulnmatch;
