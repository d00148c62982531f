//! IO companion to `antiramsey-core`: the JSON file formats for graphs
//! and colorings, report formatting, and Monte Carlo estimation of the
//! random-coloring rainbow fraction.

pub mod format;
pub mod mc;
pub mod report;
