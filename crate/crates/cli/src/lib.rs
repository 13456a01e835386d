//! Batch verification harness for independent domination bounds.

pub mod campaign;
pub mod commands;
pub mod corpus;
pub mod output;
