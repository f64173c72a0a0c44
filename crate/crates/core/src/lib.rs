pub mod graph;
pub mod oracles;
pub mod degen;
pub mod profile;
pub mod template;
pub mod classify;
pub mod pipeline;
pub mod harness;
