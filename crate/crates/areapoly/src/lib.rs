//! File formats, command-line interface and acceptance suite for
//! [`areapoly_core`].

pub mod cli;
pub mod format;
pub mod selftest;
