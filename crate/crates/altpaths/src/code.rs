//! The code view of a bipartite coloring.
//!
//! A coloring of `K_{m,n}` is equivalently a list of `n` words of length `m`
//! over the alphabet `1..=r`: word `v` spells the colors of the edges at
//! right vertex `v`. The number of alternating 2-paths between two right
//! vertices is exactly the Hamming distance of their words.

use crate::coloring::{Color, ColoringMatrix, Violation};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("word {word} entry {pos} is {value}, outside alphabet 1..={r}")]
    LetterOutOfRange {
        word: usize,
        pos: usize,
        value: Color,
        r: Color,
    },
    #[error("code is empty")]
    Empty,
}

/// A list of `n` equal-length words over the alphabet `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    r: Color,
    words: Vec<Vec<Color>>,
}

impl Code {
    /// Checks uniform word length and alphabet range.
    pub fn new(r: Color, words: Vec<Vec<Color>>) -> Result<Self, CodeError> {
        if let Some(first) = words.first() {
            let m = first.len();
            for (i, w) in words.iter().enumerate() {
                if w.len() != m {
                    return Err(CodeError::LengthMismatch(m, w.len()));
                }
                for (pos, &letter) in w.iter().enumerate() {
                    if letter == 0 || letter > r {
                        return Err(CodeError::LetterOutOfRange {
                            word: i,
                            pos,
                            value: letter,
                            r,
                        });
                    }
                }
            }
        }
        Ok(Code { r, words })
    }

    /// Wraps raw words without validation.
    pub fn from_raw(r: Color, words: Vec<Vec<Color>>) -> Self {
        Code { r, words }
    }

    pub fn r(&self) -> Color {
        self.r
    }

    /// Number of words.
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Common word length, 0 for an empty code.
    pub fn word_len(&self) -> usize {
        self.words.first().map_or(0, Vec::len)
    }

    pub fn word(&self, v: usize) -> &[Color] {
        &self.words[v]
    }

    pub fn words(&self) -> &[Vec<Color>] {
        &self.words
    }

    /// Reports ragged words and out-of-range letters.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = self.word_len();
        for (i, w) in self.words.iter().enumerate() {
            if w.len() != m {
                out.push(Violation::RaggedWord {
                    word: i,
                    len: w.len(),
                    expected: m,
                });
            }
            for (pos, &letter) in w.iter().enumerate() {
                if letter == 0 || letter > self.r {
                    out.push(Violation::ColorOutOfRange {
                        u: pos,
                        v: i,
                        color: letter,
                    });
                }
            }
        }
        out
    }

    /// Minimum pairwise Hamming distance, `None` for fewer than two words.
    pub fn min_distance(&self) -> Option<u64> {
        let mut best: Option<u64> = None;
        for i in 0..self.words.len() {
            for j in (i + 1)..self.words.len() {
                let d = hamming(&self.words[i], &self.words[j]).expect("uniform lengths");
                best = Some(best.map_or(d, |b| b.min(d)));
            }
        }
        best
    }
}

/// Number of positions in which two equal-length words differ.
pub fn hamming(x: &[Color], y: &[Color]) -> Result<u64, CodeError> {
    if x.len() != y.len() {
        return Err(CodeError::LengthMismatch(x.len(), y.len()));
    }
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count() as u64)
}

/// Builds the coloring encoded by a code: `colors(u,v) = word_v(u)`.
///
/// The code must be non-empty with uniform word lengths and in-range letters.
pub fn coloring_from_code(code: &Code) -> Result<ColoringMatrix, CodeError> {
    if code.is_empty() {
        return Err(CodeError::Empty);
    }
    // Re-run the checks so raw codes cannot smuggle in bad letters.
    let checked = Code::new(code.r, code.words.clone())?;
    let m = checked.word_len();
    let n = checked.len();
    let mut colors = vec![0; m * n];
    for (v, w) in checked.words.iter().enumerate() {
        for (u, &letter) in w.iter().enumerate() {
            colors[u * n + v] = letter;
        }
    }
    Ok(ColoringMatrix::from_raw(m, n, checked.r, colors))
}

/// Reads the code back out of a coloring: `word_v(u) = colors(u,v)`.
pub fn code_from_coloring(coloring: &ColoringMatrix) -> Code {
    let words = (0..coloring.n())
        .map(|v| (0..coloring.m()).map(|u| coloring.color(u, v)).collect())
        .collect();
    Code {
        r: coloring.r(),
        words,
    }
}
