//! Instance-file format shared by the `rgroup` binary and its tests.

pub mod instance;
