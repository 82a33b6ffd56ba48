//! Library side of the `pstat` command-line tool.

pub mod commands;
pub mod render;
pub mod verify;
