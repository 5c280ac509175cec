//! The Parikh matrix mapping and M-equivalence.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::words::{anagrams, count_subword, parikh_vector, Alphabet, ParikhVector, Word};

/// An upper unitriangular matrix with nonnegative integer entries, stored row
/// major. Indices are 0-based: entry `(i, j + 1)` of the image of `w` counts
/// the subword `a_i ... a_j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParikhMatrix {
    dim: usize,
    entries: Vec<u64>,
}

impl ParikhMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        ParikhMatrix { dim, entries }
    }

    /// Image of the single letter `letter` in an alphabet of `size` letters.
    pub fn elementary(size: usize, letter: u8) -> Self {
        let mut m = Self::identity(size + 1);
        let q = letter as usize;
        m.entries[q * m.dim + q + 1] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.dim)
    }

    /// The diagonal immediately above the principal one.
    pub fn second_diagonal(&self) -> Vec<u64> {
        (0..self.dim - 1).map(|i| self.get(i, i + 1)).collect()
    }

    pub fn is_unitriangular(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| match i.cmp(&j) {
                std::cmp::Ordering::Equal => self.get(i, j) == 1,
                std::cmp::Ordering::Greater => self.get(i, j) == 0,
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// Full matrix product with checked arithmetic.
    pub fn mul(&self, other: &ParikhMatrix) -> Result<ParikhMatrix> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc: u64 = 0;
                for k in 0..n {
                    let p = self
                        .get(i, k)
                        .checked_mul(other.get(k, j))
                        .ok_or(Error::Overflow("multiplying Parikh matrices"))?;
                    acc = acc
                        .checked_add(p)
                        .ok_or(Error::Overflow("multiplying Parikh matrices"))?;
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(ParikhMatrix { dim: n, entries })
    }

    // Right multiplication by an elementary matrix adds column q into column q+1.
    fn push_letter(&mut self, letter: u8) -> Result<()> {
        let q = letter as usize;
        for i in 0..=q {
            let row = i * self.dim;
            self.entries[row + q + 1] = self.entries[row + q + 1]
                .checked_add(self.entries[row + q])
                .ok_or(Error::Overflow("computing a Parikh matrix"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParikhMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Bracket layout with right-aligned columns.
impl fmt::Display for ParikhMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.rows().enumerate() {
            let (open, close) = match i {
                _ if self.dim == 1 => ('[', ']'),
                0 => ('⎡', '⎤'),
                _ if i + 1 == self.dim => ('⎣', '⎦'),
                _ => ('⎢', '⎥'),
            };
            write!(f, "{open}")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e:>width$}")?;
            }
            writeln!(f, "{close}")?;
        }
        Ok(())
    }
}

/// Serialized as a row-major array of rows.
impl Serialize for ParikhMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.rows())
    }
}

/// `Ψ_Σ(w)`: the product of the elementary matrices of the letters of `w`, left to right.
pub fn parikh_matrix(alphabet: &Alphabet, w: &Word) -> Result<ParikhMatrix> {
    alphabet.check(w)?;
    let mut m = ParikhMatrix::identity(alphabet.size() + 1);
    for &l in w.letters() {
        m.push_letter(l)?;
    }
    Ok(m)
}

pub fn m_equivalent(alphabet: &Alphabet, w: &Word, other: &Word) -> Result<bool> {
    Ok(parikh_matrix(alphabet, w)? == parikh_matrix(alphabet, other)?)
}

/// Every word M-equivalent to `w` (including `w`), in lexicographic order.
pub fn m_class(alphabet: &Alphabet, w: &Word, limits: &Limits) -> Result<Vec<Word>> {
    let target = parikh_matrix(alphabet, w)?;
    m_class_of_vector(alphabet, &parikh_vector(alphabet, w), &target, limits)
}

pub(crate) fn m_class_of_vector(
    alphabet: &Alphabet,
    v: &ParikhVector,
    target: &ParikhMatrix,
    limits: &Limits,
) -> Result<Vec<Word>> {
    let candidates: Vec<Word> = anagrams(v, limits)?.collect();
    candidates
        .into_par_iter()
        .filter_map(|u| match parikh_matrix(alphabet, &u) {
            Ok(m) if &m == target => Some(Ok(u)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

/// True iff some other word shares the Parikh matrix of `w`.
pub fn m_ambiguous(alphabet: &Alphabet, w: &Word, limits: &Limits) -> Result<bool> {
    Ok(m_class(alphabet, w, limits)?.len() >= 2)
}

/// Checks every entry of `Ψ_Σ(w)` against direct subword counts: unit
/// diagonal, zeros below it, and `m_{i,j+1} = |w|_{a_i...a_j}` above it.
pub fn verify_matrix_theorem(alphabet: &Alphabet, w: &Word) -> Result<bool> {
    let m = parikh_matrix(alphabet, w)?;
    let s = alphabet.size();
    for i in 0..=s {
        for j in 0..=s {
            let expected = match i.cmp(&j) {
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => 0,
                std::cmp::Ordering::Less => {
                    count_subword(w, &alphabet.run(i as u8, (j - 1) as u8))?
                }
            };
            if m.get(i, j) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
