//! Library half of the `dissect` command line tool: the parenthesization
//! string grammar and the verification harness. The binary in `main.rs` is
//! a thin front end over these and the `dissections` crate.

pub mod grammar;
pub mod verify;
