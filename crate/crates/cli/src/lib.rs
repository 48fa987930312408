//! Companion crate to `edl-core`: file formats, verification suites, and the
//! `edl` command-line tool.

pub mod formats;
pub mod json;
pub mod verify;
