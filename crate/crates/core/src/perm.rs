//! Permutations in image form plus the 1-based cycle notation used in files.
//!
//! `images[i]` is the image of point `i`. Products compose right to left:
//! `a.compose(&b)` sends `i` to `a(b(i))`, matching how "(1 2)(2 3)" is read.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Checks that `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {p} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!("image {p} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// A single cycle on 0-based points.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for (k, &p) in points.iter().enumerate() {
            if p >= degree {
                return Err(Error::InvalidPermutation(format!(
                    "point {p} out of range for degree {degree}"
                )));
            }
            if points[..k].contains(&p) {
                return Err(Error::InvalidPermutation(format!(
                    "point {p} repeated in cycle"
                )));
            }
            images[p] = points[(k + 1) % points.len()];
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn compose(&self, right: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), right.degree());
        Permutation {
            images: right.images.iter().map(|&p| self.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Disjoint cycles (0-based), each starting at its smallest point, ordered
    /// by that point. Fixed points are omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Parses 1-based cycle notation such as `"(1 2)(3 4)"` or `"(1,2,3)"`.
    /// Whitespace is ignored between tokens; `"()"` is the identity. A product
    /// of several cycles composes right to left.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut result = Permutation::identity(degree);
        let mut pos = 0;
        let mut any = false;
        let syntax = |column: usize, message: &str| Error::CycleSyntax {
            column: column + 1,
            message: message.to_string(),
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(syntax(pos, "expected '('"));
            }
            pos += 1;
            any = true;
            let mut points: Vec<usize> = Vec::new();
            loop {
                while pos < bytes.len() && (bytes[pos].is_ascii_whitespace() || bytes[pos] == b',') {
                    pos += 1;
                }
                if pos == bytes.len() {
                    return Err(syntax(pos, "unterminated cycle, expected ')'"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(syntax(start, "expected a point number"));
                }
                let point: usize = text[start..pos]
                    .parse()
                    .map_err(|_| syntax(start, "point number too large"))?;
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { column: start + 1, point, degree });
                }
                if points.contains(&(point - 1)) {
                    return Err(syntax(start, &format!("point {point} repeated in cycle")));
                }
                points.push(point - 1);
            }
            let cycle = Permutation::cycle(degree, &points)?;
            // rightmost cycle acts first
            result = result.compose(&cycle);
        }
        if !any {
            return Err(syntax(0, "empty permutation, write \"()\" for the identity"));
        }
        Ok(result)
    }

    /// 1-based canonical cycle string; `"()"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}
