//! File formats and subcommands of the `nanoword` binary.

pub mod chord;
pub mod commands;
pub mod format;
pub mod keifile;
