//! File formats, report rendering, threaded search and the command line
//! front end for [`cutcode_core`].

pub mod cli;
pub mod format;
pub mod parallel;
pub mod report;

pub use cutcode_core as core;
