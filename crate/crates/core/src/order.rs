//! Tree-like linear orderings on finite ordinals.
//!
//! A sign sequence `N` on `λ - 1` orders `λ = {0, ..., λ-1}` as follows: for
//! `α < β` we put `α` before `β` when `N(α) = +1` and after it when
//! `N(α) = -1`. Every tail `[α, μ)` is then a contiguous block of the
//! ordering restricted to `μ`.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl TryFrom<i64> for Sign {
    type Error = Error;

    fn try_from(value: i64) -> Result<Sign> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }
}

impl From<Sign> for i64 {
    fn from(sign: Sign) -> i64 {
        match sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", i64::from(*self))
    }
}

/// The ordering `<_N` on the ordinal `len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeOrder {
    len: usize,
    signs: Vec<Sign>,
}

impl TreeOrder {
    /// Builds the order on `signs.len() + 1` elements.
    pub fn new(signs: Vec<Sign>) -> TreeOrder {
        TreeOrder { len: signs.len() + 1, signs }
    }

    pub fn empty() -> TreeOrder {
        TreeOrder { len: 0, signs: Vec::new() }
    }

    /// Order on `len` elements whose signs are taken from the front of
    /// `signs`; extra signs are ignored.
    pub fn with_len(len: usize, signs: &[Sign]) -> Result<TreeOrder> {
        let needed = len.saturating_sub(1);
        if signs.len() < needed {
            return Err(Error::IndexOutOfRange { index: signs.len(), len: needed });
        }
        Ok(TreeOrder { len, signs: signs[..needed].to_vec() })
    }

    pub fn constant(len: usize, sign: Sign) -> TreeOrder {
        TreeOrder { len, signs: vec![sign; len.saturating_sub(1)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    fn check(&self, index: usize) -> Result<()> {
        if index < self.len {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, len: self.len })
        }
    }

    /// Compares `alpha` and `beta` under `<_N`.
    pub fn compare(&self, alpha: usize, beta: usize) -> Result<Ordering> {
        self.check(alpha)?;
        self.check(beta)?;
        Ok(match alpha.cmp(&beta) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Less => match self.signs[alpha] {
                Sign::Plus => Ordering::Less,
                Sign::Minus => Ordering::Greater,
            },
            Ordering::Greater => match self.signs[beta] {
                Sign::Plus => Ordering::Greater,
                Sign::Minus => Ordering::Less,
            },
        })
    }

    /// Indices sorted ascending by `<_N`.
    pub fn linearize(&self) -> Vec<usize> {
        if self.len == 0 {
            return Vec::new();
        }
        let mut line = VecDeque::with_capacity(self.len);
        line.push_back(self.len - 1);
        for alpha in (0..self.len - 1).rev() {
            match self.signs[alpha] {
                Sign::Plus => line.push_front(alpha),
                Sign::Minus => line.push_back(alpha),
            }
        }
        line.into()
    }

    /// The sets `L_N(α, μ)` and `R_N(α, μ)` of elements of `μ` lying
    /// entirely below, resp. above, the block `[α, μ)`, in ascending
    /// numeric order.
    pub fn segments(&self, alpha: usize, mu: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        if alpha >= mu || mu > self.len {
            return Err(Error::InvalidSegment { start: alpha, end: mu, len: self.len });
        }
        // Only β < α lie outside the block, and each compares to every later
        // index through N(β) alone.
        Ok((0..alpha).partition(|&beta| self.signs[beta] == Sign::Plus))
    }

    /// Recovers the sign sequence from an ascending linearization. Fails
    /// when some `α` has elements of `[α+1, λ)` on both of its sides.
    pub fn reconstruct(order: &[usize]) -> Result<TreeOrder> {
        let len = order.len();
        let mut position = vec![usize::MAX; len];
        for (pos, &value) in order.iter().enumerate() {
            if value >= len || position[value] != usize::MAX {
                return Err(Error::NotAPermutation { len });
            }
            position[value] = pos;
        }
        if len == 0 {
            return Ok(TreeOrder::empty());
        }
        let mut signs = vec![Sign::Plus; len - 1];
        let (mut lo, mut hi) = (position[len - 1], position[len - 1]);
        for alpha in (0..len - 1).rev() {
            let p = position[alpha];
            signs[alpha] = if p < lo {
                Sign::Plus
            } else if p > hi {
                Sign::Minus
            } else {
                return Err(Error::NotTreeLike { index: alpha });
            };
            lo = lo.min(p);
            hi = hi.max(p);
        }
        Ok(TreeOrder { len, signs })
    }
}

impl fmt::Display for TreeOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line: Vec<String> = self.linearize().iter().map(|i| i.to_string()).collect();
        write!(f, "{}", line.join(" < "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    /// Brute-force `L_N` and `R_N` straight from the definition.
    fn segments_by_definition(t: &TreeOrder, alpha: usize, mu: usize) -> (Vec<usize>, Vec<usize>) {
        let below = |b: usize| (alpha..mu).all(|g| t.compare(b, g).unwrap() == Ordering::Less);
        let above = |b: usize| (alpha..mu).all(|g| t.compare(b, g).unwrap() == Ordering::Greater);
        let l = (0..mu).filter(|&b| below(b)).collect();
        let r = (0..mu).filter(|&b| above(b)).collect();
        (l, r)
    }

    #[test]
    fn compare_example() {
        let t = TreeOrder::new(vec![Plus, Minus]);
        assert_eq!(t.compare(0, 2).unwrap(), Ordering::Less);
        assert_eq!(t.compare(2, 1).unwrap(), Ordering::Less);
        assert_eq!(t.compare(1, 1).unwrap(), Ordering::Equal);
        assert_eq!(t.linearize(), vec![0, 2, 1]);
    }

    #[test]
    fn constant_signs() {
        assert_eq!(TreeOrder::constant(4, Plus).linearize(), vec![0, 1, 2, 3]);
        assert_eq!(TreeOrder::constant(4, Minus).linearize(), vec![3, 2, 1, 0]);
        assert!(TreeOrder::empty().linearize().is_empty());
        assert_eq!(TreeOrder::constant(1, Minus).linearize(), vec![0]);
    }

    #[test]
    fn out_of_range() {
        let t = TreeOrder::new(vec![Plus]);
        assert_eq!(t.compare(0, 2), Err(Error::IndexOutOfRange { index: 2, len: 2 }));
        assert!(t.segments(1, 1).is_err());
        assert!(t.segments(0, 3).is_err());
    }

    #[test]
    fn segment_examples() {
        let t = TreeOrder::new(vec![Plus, Minus]);
        assert_eq!(t.segments(1, 3).unwrap(), (vec![0], vec![]));
        assert_eq!(t.segments(0, 3).unwrap(), (vec![], vec![]));
        let t = TreeOrder::new(vec![Minus, Plus, Minus]);
        assert_eq!(t.segments(2, 4).unwrap(), (vec![1], vec![0]));
    }

    #[test]
    fn segments_match_definition() {
        for len in 1..=5usize {
            for mask in 0..(1u32 << (len - 1)) {
                let signs = (0..len - 1).map(|i| if mask >> i & 1 == 1 { Plus } else { Minus }).collect();
                let t = TreeOrder::new(signs);
                for mu in 1..=len {
                    for alpha in 0..mu {
                        assert_eq!(t.segments(alpha, mu).unwrap(), segments_by_definition(&t, alpha, mu));
                    }
                }
            }
        }
    }

    #[test]
    fn reconstruction() {
        assert_eq!(TreeOrder::reconstruct(&[0, 2, 1]).unwrap().signs(), &[Plus, Minus]);
        assert_eq!(TreeOrder::reconstruct(&[0, 1, 2]).unwrap().signs(), &[Plus, Plus]);
        assert_eq!(TreeOrder::reconstruct(&[1, 0, 2]), Err(Error::NotTreeLike { index: 0 }));
        assert_eq!(TreeOrder::reconstruct(&[0, 0]), Err(Error::NotAPermutation { len: 2 }));
        assert_eq!(TreeOrder::reconstruct(&[]).unwrap(), TreeOrder::empty());
    }

    #[test]
    fn sign_conversions() {
        assert_eq!(Sign::try_from(1).unwrap(), Plus);
        assert_eq!(Sign::try_from(0), Err(Error::InvalidSign(0)));
        assert_eq!(serde_json::to_string(&vec![Plus, Minus]).unwrap(), "[1,-1]");
    }
}
