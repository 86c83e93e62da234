use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One positive color per edge-list position of a companion [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeColoring {
    colors: Vec<u32>,
    palette_size: u32,
}

impl EdgeColoring {
    pub fn new(colors: Vec<u32>, palette_size: u32) -> Result<EdgeColoring> {
        if let Some((index, &color)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > palette_size)
        {
            return Err(Error::InvalidColor {
                index,
                color,
                palette: palette_size,
            });
        }
        Ok(EdgeColoring {
            colors,
            palette_size,
        })
    }

    /// Palette is the largest color present.
    pub fn from_colors(colors: Vec<u32>) -> Result<EdgeColoring> {
        let palette = colors.iter().copied().max().unwrap_or(0);
        EdgeColoring::new(colors, palette)
    }

    /// Every edge gets its own color.
    pub fn all_distinct(m: usize) -> EdgeColoring {
        EdgeColoring {
            colors: (1..=m as u32).collect(),
            palette_size: m as u32,
        }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, edge: usize) -> u32 {
        self.colors[edge]
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.edge_count() {
            return Err(Error::ColoringLength {
                expected: g.edge_count(),
                got: self.colors.len(),
            });
        }
        Ok(())
    }

    /// Renames colors through `map`, where `map[c - 1]` is the new name of `c`.
    pub fn relabeled(&self, map: &[u32]) -> Result<EdgeColoring> {
        let colors = self.colors.iter().map(|&c| map[c as usize - 1]).collect();
        let palette = map.iter().copied().max().unwrap_or(0).max(self.palette_size);
        EdgeColoring::new(colors, palette)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_and_out_of_palette() {
        assert_eq!(
            EdgeColoring::new(vec![1, 0], 2),
            Err(Error::InvalidColor {
                index: 1,
                color: 0,
                palette: 2
            })
        );
        assert!(EdgeColoring::new(vec![1, 3], 2).is_err());
        let c = EdgeColoring::from_colors(vec![2, 1, 2]).unwrap();
        assert_eq!(c.palette_size(), 2);
        assert_eq!(c.distinct_colors(), 2);
    }

    #[test]
    fn length_must_match_graph() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let c = EdgeColoring::from_colors(vec![1]).unwrap();
        assert_eq!(
            c.check_against(&g),
            Err(Error::ColoringLength {
                expected: 2,
                got: 1
            })
        );
    }
}
