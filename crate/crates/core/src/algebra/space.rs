//! Z/2-graded vector spaces.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Option<Parity> {
        match b {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(−1)^{|a||b|}` as ±1.
    pub fn sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, o: Parity) -> Parity {
        if self == o {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A graded basis: labels with parities, even labels first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    labels: Vec<String>,
    parities: Vec<Parity>,
    d0: usize,
}

impl SuperSpace {
    /// Fails if labels repeat or an even label follows an odd one.
    pub fn new(labels: Vec<String>, parities: Vec<Parity>) -> crate::Result<Self> {
        if labels.len() != parities.len() {
            return Err(crate::Error::DimensionMismatch { expected: labels.len(), got: parities.len() });
        }
        let d0 = parities.iter().take_while(|p| **p == Parity::Even).count();
        if parities[d0..].contains(&Parity::Even) {
            return Err(crate::Error::Parity("even basis vector listed after an odd one".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(crate::Error::Parse(format!("duplicate basis label {l}")));
            }
        }
        Ok(SuperSpace { labels, parities, d0 })
    }

    /// Space with labels `prefix0..` for even and `prefix1..` for odd vectors.
    pub fn with_dims(d0: usize, d1: usize) -> Self {
        let labels = (0..d0).map(|i| format!("e{i}")).chain((0..d1).map(|i| format!("o{i}"))).collect();
        let parities = std::iter::repeat_n(Parity::Even, d0).chain(std::iter::repeat_n(Parity::Odd, d1)).collect();
        SuperSpace { labels, parities, d0 }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn d0(&self) -> usize {
        self.d0
    }

    pub fn d1(&self) -> usize {
        self.labels.len() - self.d0
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn even_indices(&self) -> std::ops::Range<usize> {
        0..self.d0
    }

    pub fn odd_indices(&self) -> std::ops::Range<usize> {
        self.d0..self.dim()
    }

    pub fn indices_of(&self, p: Parity) -> std::ops::Range<usize> {
        match p {
            Parity::Even => self.even_indices(),
            Parity::Odd => self.odd_indices(),
        }
    }
}
