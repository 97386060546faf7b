//! Witness records for alternating paths and walks.

use crate::coloring::{Color, ColoringMatrix, CompleteColoring, Side};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

/// Distinct-vertex paths versus walks (vertex repeats allowed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Path,
    Walk,
}

/// Which host the vertex sequence lives in. Bipartite records note the class
/// of the first vertex; classes then alternate along the sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "host")]
pub enum PathKind {
    Bipartite { start: Side },
    Complete,
}

/// A vertex of a bipartite host, tagged with its class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BiVertex {
    pub side: Side,
    pub id: usize,
}

impl BiVertex {
    pub fn left(id: usize) -> BiVertex {
        BiVertex {
            side: Side::Left,
            id,
        }
    }

    pub fn right(id: usize) -> BiVertex {
        BiVertex {
            side: Side::Right,
            id,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("record has {vertices} vertices but {edges} edge colors")]
    ShapeMismatch { vertices: usize, edges: usize },
    #[error("edges {0} and {1} share a color; the sequence does not alternate")]
    NotAlternating(usize, usize),
    #[error("vertex at position {0} repeats an earlier vertex of the same class")]
    RepeatedVertex(usize),
    #[error("edge {pos} is recorded {recorded} but the host colors it {actual}")]
    ColorMismatch {
        pos: usize,
        recorded: Color,
        actual: Color,
    },
    #[error("vertex {id} at position {pos} is outside its class (size {size})")]
    VertexOutOfRange { pos: usize, id: usize, size: usize },
    #[error("record kind does not match the host it is checked against")]
    WrongKind,
    #[error("record is empty")]
    Empty,
}

/// One alternating path or walk: a vertex sequence plus one color per
/// consecutive pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathRecord {
    pub vertices: Vec<usize>,
    pub colors: Vec<Color>,
    pub flavor: Flavor,
    pub kind: PathKind,
}

impl PathRecord {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Endpoints as recorded (first and last vertex id).
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        Some((*self.vertices.first()?, *self.vertices.last()?))
    }

    /// Class of the vertex at `pos`, for bipartite records.
    pub fn side_at(&self, pos: usize) -> Option<Side> {
        match self.kind {
            PathKind::Complete => None,
            PathKind::Bipartite { start } => {
                if pos % 2 == 0 {
                    Some(start)
                } else {
                    Some(start.opposite())
                }
            }
        }
    }

    /// Internal vertices (all but the two ends) with their class tag; the
    /// tag is the start side for complete hosts and is ignored there.
    pub fn internal_vertices(&self) -> impl Iterator<Item = (Option<Side>, usize)> + '_ {
        (1..self.vertices.len().saturating_sub(1)).map(|i| (self.side_at(i), self.vertices[i]))
    }

    fn check_shape(&self) -> Result<(), PathError> {
        if self.vertices.is_empty() {
            return Err(PathError::Empty);
        }
        if self.vertices.len() != self.colors.len() + 1 {
            return Err(PathError::ShapeMismatch {
                vertices: self.vertices.len(),
                edges: self.colors.len(),
            });
        }
        for i in 1..self.colors.len() {
            if self.colors[i] == self.colors[i - 1] {
                return Err(PathError::NotAlternating(i - 1, i));
            }
        }
        Ok(())
    }

    /// Full validation against a bipartite host: shape, alternation,
    /// in-range vertices, distinctness (for the path flavor), and agreement
    /// of every recorded color with the host.
    pub fn check_bipartite(&self, host: &ColoringMatrix) -> Result<(), PathError> {
        let start = match self.kind {
            PathKind::Bipartite { start } => start,
            PathKind::Complete => return Err(PathError::WrongKind),
        };
        self.check_shape()?;
        for (pos, &v) in self.vertices.iter().enumerate() {
            let side = if pos % 2 == 0 {
                start
            } else {
                start.opposite()
            };
            let size = host.class_size(side);
            if v >= size {
                return Err(PathError::VertexOutOfRange { pos, id: v, size });
            }
        }
        if self.flavor == Flavor::Path {
            let mut seen = HashSet::with_capacity(self.vertices.len());
            for (pos, &v) in self.vertices.iter().enumerate() {
                let side = if pos % 2 == 0 {
                    start
                } else {
                    start.opposite()
                };
                if !seen.insert((side, v)) {
                    return Err(PathError::RepeatedVertex(pos));
                }
            }
        }
        for (i, &recorded) in self.colors.iter().enumerate() {
            let a = self.vertices[i];
            let b = self.vertices[i + 1];
            let side_a = if i % 2 == 0 { start } else { start.opposite() };
            let actual = match side_a {
                Side::Left => host.color(a, b),
                Side::Right => host.color(b, a),
            };
            if actual != recorded {
                return Err(PathError::ColorMismatch {
                    pos: i,
                    recorded,
                    actual,
                });
            }
        }
        Ok(())
    }

    /// Full validation against a complete host.
    pub fn check_complete(&self, host: &CompleteColoring) -> Result<(), PathError> {
        if self.kind != PathKind::Complete {
            return Err(PathError::WrongKind);
        }
        self.check_shape()?;
        for (pos, &v) in self.vertices.iter().enumerate() {
            if v >= host.n() {
                return Err(PathError::VertexOutOfRange {
                    pos,
                    id: v,
                    size: host.n(),
                });
            }
        }
        if self.flavor == Flavor::Path {
            let mut seen = HashSet::with_capacity(self.vertices.len());
            for (pos, &v) in self.vertices.iter().enumerate() {
                if !seen.insert(v) {
                    return Err(PathError::RepeatedVertex(pos));
                }
            }
        }
        for (i, &recorded) in self.colors.iter().enumerate() {
            let actual = host.color(self.vertices[i], self.vertices[i + 1]);
            if actual != recorded {
                return Err(PathError::ColorMismatch {
                    pos: i,
                    recorded,
                    actual,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{BLUE, RED};

    fn host() -> ColoringMatrix {
        // 2x2 with complementary columns.
        ColoringMatrix::from_raw(2, 2, 2, vec![RED, BLUE, BLUE, RED])
    }

    #[test]
    fn valid_two_path_checks_out() {
        let rec = PathRecord {
            vertices: vec![0, 0, 1],
            colors: vec![RED, BLUE],
            flavor: Flavor::Path,
            kind: PathKind::Bipartite { start: Side::Right },
        };
        rec.check_bipartite(&host()).unwrap();
    }

    #[test]
    fn wrong_color_is_caught() {
        let rec = PathRecord {
            vertices: vec![0, 0, 1],
            colors: vec![RED, RED],
            flavor: Flavor::Path,
            kind: PathKind::Bipartite { start: Side::Right },
        };
        assert!(matches!(
            rec.check_bipartite(&host()),
            Err(PathError::NotAlternating(0, 1))
        ));
        let rec = PathRecord {
            vertices: vec![0, 1, 1],
            colors: vec![RED, BLUE],
            flavor: Flavor::Path,
            kind: PathKind::Bipartite { start: Side::Right },
        };
        assert!(matches!(
            rec.check_bipartite(&host()),
            Err(PathError::ColorMismatch { .. })
        ));
    }

    #[test]
    fn repeats_fail_paths_but_not_walks() {
        let mut rec = PathRecord {
            vertices: vec![0, 0, 1, 1, 0],
            colors: vec![RED, BLUE, RED, BLUE],
            flavor: Flavor::Path,
            kind: PathKind::Bipartite { start: Side::Right },
        };
        assert!(matches!(
            rec.check_bipartite(&host()),
            Err(PathError::RepeatedVertex(4))
        ));
        rec.flavor = Flavor::Walk;
        rec.check_bipartite(&host()).unwrap();
    }

    #[test]
    fn same_id_in_different_classes_is_not_a_repeat() {
        let rec = PathRecord {
            vertices: vec![0, 0, 1],
            colors: vec![RED, BLUE],
            flavor: Flavor::Path,
            kind: PathKind::Bipartite { start: Side::Right },
        };
        rec.check_bipartite(&host()).unwrap();
    }
}
