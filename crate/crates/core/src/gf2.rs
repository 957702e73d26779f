//! Dense vectors over GF(2) and reduced row-echelon spans.
//!
//! Twist labelings live in `GF(2)^E` (one coordinate per edge) and the gauge
//! moves span a subspace `W`. [`Span`] keeps a fully reduced basis of `W`
//! with lowest-index pivots, so [`Span::reduce`] returns the same vector for
//! every member of a coset `t + W`.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn toggle(&mut self, index: usize) {
        assert!(
            index < self.len,
            "bit index {index} out of range {}",
            self.len
        );
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn to_bools(&self) -> Vec<bool> {
        self.iter().collect()
    }

    /// Vector with coordinates permuted: `result[i] = self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> BitVec {
        assert_eq!(perm.len(), self.len);
        let mut out = BitVec::zeros(self.len);
        for (i, &src) in perm.iter().enumerate() {
            if self.get(src) {
                out.set(i, true);
            }
        }
        out
    }
}

/// Lexicographic by coordinate index (coordinate 0 most significant).
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        write!(f, "BitVec({s})")
    }
}

/// A subspace of `GF(2)^len` stored as a fully reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Span {
    len: usize,
    // (pivot, row); the pivot is the row's lowest set bit and no other row
    // has that bit set.
    rows: Vec<(usize, BitVec)>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    pub fn from_generators<I>(len: usize, generators: I) -> Self
    where
        I: IntoIterator<Item = BitVec>,
    {
        let mut span = Self::new(len);
        for g in generators {
            span.insert(g);
        }
        span
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Dimension of the quotient `GF(2)^len / span`.
    pub fn codim(&self) -> usize {
        self.len - self.rows.len()
    }

    /// Adds a vector; returns `true` if it enlarged the span.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len, "length mismatch");
        v = self.reduce(&v);
        let Some(pivot) = v.lowest_one() else {
            return false;
        };
        for (_, row) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&v);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, v));
        true
    }

    /// Canonical coset representative: zero at every pivot position.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.len, "length mismatch");
        let mut out = v.clone();
        for (pivot, row) in &self.rows {
            if out.get(*pivot) {
                out.xor_assign(row);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// Coordinates that are not pivots. Vectors supported on these are
    /// exactly the reduced coset representatives.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut pivots = self.pivots().peekable();
        (0..self.len)
            .filter(|&i| {
                while pivots.peek().is_some_and(|&p| p < i) {
                    pivots.next();
                }
                pivots.peek() != Some(&i)
            })
            .collect()
    }
}
