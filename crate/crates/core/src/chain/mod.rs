//! Order-preserving self-maps of the finite chain `0 < 1 < ... < n-1`.
//!
//! On a chain, join-endomorphisms are exactly the monotone maps, so an
//! [`Endo`] is stored as its nondecreasing value tuple. Addition is the
//! pointwise maximum and multiplication is composition written left to
//! right: `a.compose(b)` applies `a` first, then `b`.

mod notation;

use std::fmt;

pub use notation::NotationStyle;

use crate::error::{Error, Result};

/// A monotone map of the chain `C_n` into itself.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endo {
    values: Vec<u32>,
}

/// The constant an `a`-nilpotent map collapses to, and the least exponent
/// that gets there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Nilpotency {
    pub value: u32,
    pub index: usize,
}

impl Endo {
    /// Validates `values` as a monotone map of the chain of length `n`.
    pub fn new(n: u32, values: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        if values.len() != n as usize {
            return Err(Error::LengthMismatch { expected: n as usize, found: values.len() });
        }
        for (position, &value) in values.iter().enumerate() {
            if value >= n {
                return Err(Error::OutOfRange { position, value, n });
            }
        }
        if let Some(position) = (1..values.len()).find(|&i| values[i - 1] > values[i]) {
            return Err(Error::NotMonotone { position, previous: values[position - 1], next: values[position] });
        }
        Ok(Endo { values })
    }

    /// Chain length inferred from the number of values.
    pub fn from_values(values: Vec<u32>) -> Result<Self> {
        let n = u32::try_from(values.len()).map_err(|_| Error::ParameterRange {
            what: "chain length",
            value: values.len() as u64,
            min: 1,
            max: u32::MAX as u64,
        })?;
        Self::new(n, values)
    }

    /// Builds `(v0)_{l0} (v1)_{l1} ...` for a chain of length `n`.
    pub fn from_runs(n: u32, runs: &[(u32, usize)]) -> Result<Self> {
        let values = runs.iter().flat_map(|&(value, len)| std::iter::repeat_n(value, len)).collect();
        Self::new(n, values)
    }

    pub fn constant(n: u32, value: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        if value >= n {
            return Err(Error::OutOfRange { position: 0, value, n });
        }
        Ok(Endo { values: vec![value; n as usize] })
    }

    pub fn identity(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyChain);
        }
        Ok(Endo { values: (0..n).collect() })
    }

    /// Trusted constructor for values already known to be a valid map.
    pub(crate) fn from_raw(values: Vec<u32>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(values.iter().all(|&v| (v as usize) < values.len()));
        Endo { values }
    }

    pub fn n(&self) -> u32 {
        self.values.len() as u32
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Image of the chain element `x`.
    ///
    /// # Panics
    /// If `x` is not an element of the chain.
    pub fn apply(&self, x: u32) -> u32 {
        self.values[x as usize]
    }

    fn same_chain(&self, other: &Endo) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::ChainMismatch { left: self.n(), right: other.n() })
        }
    }

    /// Pointwise maximum.
    pub fn add(&self, other: &Endo) -> Result<Endo> {
        self.same_chain(other)?;
        Ok(self.join(other))
    }

    /// `self` first, then `other`: the result sends `x` to `other(self(x))`.
    pub fn compose(&self, other: &Endo) -> Result<Endo> {
        self.same_chain(other)?;
        Ok(self.then(other))
    }

    pub(crate) fn join(&self, other: &Endo) -> Endo {
        debug_assert_eq!(self.n(), other.n());
        Endo { values: self.values.iter().zip(&other.values).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub(crate) fn then(&self, other: &Endo) -> Endo {
        debug_assert_eq!(self.n(), other.n());
        Endo { values: self.values.iter().map(|&x| other.values[x as usize]).collect() }
    }

    /// `self` composed with itself `m` times.
    pub fn power(&self, m: usize) -> Result<Endo> {
        if m == 0 {
            return Err(Error::ZeroExponent);
        }
        let mut current = self.clone();
        for _ in 1..m {
            let next = current.then(self);
            // powers of a monotone map are eventually constant
            if next == current {
                break;
            }
            current = next;
        }
        Ok(current)
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|&v| v == self.values[0])
    }

    pub fn constant_value(&self) -> Option<u32> {
        self.is_constant().then(|| self.values[0])
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// An endomorphism is idempotent iff it fixes every point of its image.
    pub fn is_idempotent(&self) -> bool {
        self.values.iter().all(|&v| self.values[v as usize] == v)
    }

    /// Sorted distinct values.
    pub fn image(&self) -> Vec<u32> {
        let mut image = self.values.clone();
        image.dedup();
        image
    }

    pub fn fixed_points(&self) -> Vec<u32> {
        (0..self.n()).filter(|&x| self.apply(x) == x).collect()
    }

    /// Number of chain positions sent to `value`.
    pub fn count_of(&self, value: u32) -> usize {
        self.values.iter().filter(|&&v| v == value).count()
    }

    /// `Some` when a power of `self` is constant.
    pub fn nilpotency(&self) -> Option<Nilpotency> {
        let (idempotent, index) = self.eventual_idempotent();
        idempotent.constant_value().map(|value| Nilpotency { value, index })
    }

    /// The idempotent that `self` is a root of, with the least exponent
    /// reaching it.
    pub fn eventual_idempotent(&self) -> (Endo, usize) {
        let mut current = self.clone();
        for m in 1..=self.values.len() {
            if current.is_idempotent() {
                return (current, m);
            }
            current = current.then(self);
        }
        unreachable!("powers of a monotone map of an {}-chain stabilize within {} steps", self.n(), self.n())
    }

    pub fn to_notation(&self, style: NotationStyle) -> String {
        notation::format(self, style)
    }

    pub fn parse(text: &str, n: u32) -> Result<Endo> {
        notation::parse(text, n)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&notation::format(self, NotationStyle::RunLength))
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", notation::format(self, NotationStyle::Tuple))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(values: &[u32]) -> Endo {
        Endo::from_values(values.to_vec()).unwrap()
    }

    fn runs(n: u32, runs: &[(u32, usize)]) -> Endo {
        Endo::from_runs(n, runs).unwrap()
    }

    fn alpha() -> Endo {
        runs(10, &[(0, 4), (2, 2), (8, 4)])
    }

    fn beta() -> Endo {
        runs(10, &[(0, 3), (2, 2), (3, 3), (8, 2)])
    }

    #[test]
    fn make_endo_validates() {
        assert_eq!(e(&[0, 0, 1, 2]).values(), &[0, 0, 1, 2]);
        assert!(matches!(
            Endo::new(4, vec![0, 2, 1, 3]),
            Err(Error::NotMonotone { position: 2, previous: 2, next: 1 })
        ));
        assert!(matches!(Endo::new(4, vec![0, 0, 1, 4]), Err(Error::OutOfRange { value: 4, .. })));
        assert!(matches!(Endo::new(4, vec![0, 0, 1]), Err(Error::LengthMismatch { .. })));
        assert_eq!(Endo::new(0, vec![]), Err(Error::EmptyChain));
        assert_eq!(alpha().values(), &[0, 0, 0, 0, 2, 2, 8, 8, 8, 8]);
    }

    #[test]
    fn addition_is_pointwise_max() {
        assert_eq!(e(&[0, 1, 1]).add(&e(&[1, 1, 2])).unwrap(), e(&[1, 1, 2]));
        let c = Endo::constant(5, 3).unwrap();
        assert_eq!(c.add(&c).unwrap(), c);
        let a = e(&[1, 1, 1, 3]);
        assert_eq!(a.add(&Endo::identity(4).unwrap()).unwrap(), e(&[1, 1, 2, 3]));
        assert!(matches!(a.add(&e(&[0, 1])), Err(Error::ChainMismatch { left: 4, right: 2 })));
    }

    #[test]
    fn composition_applies_left_factor_first() {
        assert_eq!(alpha().compose(&beta()).unwrap(), runs(10, &[(0, 6), (8, 4)]));
        assert_eq!(beta().compose(&alpha()).unwrap(), runs(10, &[(0, 8), (8, 2)]));
        let id = Endo::identity(10).unwrap();
        assert_eq!(alpha().compose(&id).unwrap(), alpha());
        assert_eq!(id.compose(&alpha()).unwrap(), alpha());
        let c = Endo::constant(4, 2).unwrap();
        let any = e(&[0, 1, 3, 3]);
        assert_eq!(c.compose(&any).unwrap(), Endo::constant(4, 3).unwrap());
    }

    #[test]
    fn powers() {
        assert_eq!(beta().power(2).unwrap(), runs(10, &[(0, 5), (2, 3), (8, 2)]));
        assert_eq!(beta().power(3).unwrap(), runs(10, &[(0, 8), (8, 2)]));
        assert_eq!(e(&[0, 0, 1, 2]).power(2).unwrap(), e(&[0, 0, 0, 1]));
        assert_eq!(e(&[0, 0, 1, 2]).power(3).unwrap(), e(&[0, 0, 0, 0]));
        assert_eq!(e(&[0, 0, 1, 2]).power(1_000_000).unwrap(), e(&[0, 0, 0, 0]));
        assert_eq!(alpha().power(1).unwrap(), alpha());
        assert_eq!(alpha().power(0), Err(Error::ZeroExponent));
    }

    #[test]
    fn constants_and_identity() {
        assert_eq!(Endo::constant(4, 2).unwrap(), e(&[2, 2, 2, 2]));
        assert_eq!(Endo::identity(3).unwrap(), e(&[0, 1, 2]));
        assert!(Endo::constant(4, 2).unwrap().is_idempotent());
        assert!(Endo::identity(7).unwrap().is_idempotent());
        assert!(matches!(Endo::constant(4, 4), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn idempotents() {
        assert!(e(&[0, 0, 2, 2]).is_idempotent());
        assert!(!e(&[0, 0, 0, 2]).is_idempotent());
        assert_eq!(e(&[0, 0, 0, 2]).power(2).unwrap(), e(&[0, 0, 0, 0]));
    }

    #[test]
    fn nilpotency() {
        assert_eq!(e(&[0, 0, 1, 2]).nilpotency(), Some(Nilpotency { value: 0, index: 3 }));
        assert_eq!(Endo::constant(6, 4).unwrap().nilpotency(), Some(Nilpotency { value: 4, index: 1 }));
        for n in 2..8 {
            assert_eq!(Endo::identity(n).unwrap().nilpotency(), None);
        }
    }

    #[test]
    fn eventual_idempotents() {
        assert_eq!(beta().eventual_idempotent(), (runs(10, &[(0, 8), (8, 2)]), 3));
        assert_eq!(alpha().eventual_idempotent(), (runs(10, &[(0, 6), (8, 4)]), 2));
        let idem = e(&[1, 1, 3, 3]);
        assert_eq!(idem.eventual_idempotent(), (idem.clone(), 1));
    }

    #[test]
    fn image_and_fixed_points() {
        assert_eq!(alpha().image(), vec![0, 2, 8]);
        assert_eq!(Endo::identity(5).unwrap().fixed_points(), vec![0, 1, 2, 3, 4]);
        assert_eq!(e(&[0, 0, 0, 2]).fixed_points(), vec![0]);
        assert_eq!(alpha().count_of(8), 4);
    }
}
