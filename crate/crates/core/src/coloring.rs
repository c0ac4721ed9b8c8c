use crate::error::{Error, Result};

/// A total assignment of positive colors; `colors()[v - 1]` is the color of
/// vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor { vertex: i + 1 });
        }
        Ok(Self(colors))
    }

    pub(crate) fn from_vec_unchecked(colors: Vec<usize>) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1));
        Self(colors)
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest color used (0 for the empty coloring).
    pub fn palette(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors used.
    pub fn distinct(&self) -> usize {
        let mut c = self.0.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}
