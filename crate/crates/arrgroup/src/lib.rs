//! File formats, SVG rendering, fixtures and the command-line front end for
//! [`arrgroup_core`].

pub mod cli;
pub mod formats;
pub mod pipeline;
pub mod svg;
pub mod verify;

pub use arrgroup_core as core;
