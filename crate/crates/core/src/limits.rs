//! Size guards for the exponential parts of the library.

use crate::error::{Error, Result};

/// Environment variable overriding the default guards, e.g.
/// `vertices=30,covers=1000000`.
pub const CAPS_ENV: &str = "BOUQUET_KIT_CAPS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Vertex cap for minimal cover enumeration.
    pub vertices: usize,
    /// Output cap for minimal cover enumeration.
    pub covers: usize,
    /// Edge cap for the exhaustive bouquet search.
    pub search_edges: usize,
    /// Vertex cap for the exhaustive bouquet search.
    pub search_vertices: usize,
    /// Vertex cap for the multigraded Betti scan.
    pub pd_vertices: usize,
    /// Ground-set cap for a single homology computation.
    pub homology_ground: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            vertices: 30,
            covers: 1_000_000,
            search_edges: 10,
            search_vertices: 12,
            pd_vertices: 14,
            homology_ground: 16,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `BOUQUET_KIT_CAPS` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(list) => Self::default().with_overrides(&list),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies a comma-separated `key=value` list.
    pub fn with_overrides(mut self, list: &str) -> Result<Self> {
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::BadParams(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("cap `{item}` has a non-integer value")))?;
            let slot = match key.trim() {
                "vertices" => &mut self.vertices,
                "covers" => &mut self.covers,
                "search_edges" => &mut self.search_edges,
                "search_vertices" => &mut self.search_vertices,
                "pd_vertices" => &mut self.pd_vertices,
                "homology_ground" => &mut self.homology_ground,
                other => return Err(Error::BadParams(format!("unknown cap `{other}`"))),
            };
            *slot = value;
        }
        Ok(self)
    }

    pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::SizeGuard { what, actual, limit })
        } else {
            Ok(())
        }
    }
}
