//! Balanced geodesic separators (module under assembly).
pub mod shorten;
