//! Two-mode Fock space: occupation labels, sectors and relabelings.
//!
//! States are enumerated lexicographically in `(nu, nu1)`, so the full space
//! with cutoff `L` has index `nu(nu+1)/2 + nu1` for `(nu1, nu - nu1)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::qnum::Half;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState {
    pub nu1: u32,
    pub num1: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "+",
            Parity::Odd => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Labels {
    pub nu: u32,
    pub parity: Parity,
    pub j: Half,
    pub m: Half,
}

impl FockState {
    pub const VACUUM: FockState = FockState { nu1: 0, num1: 0 };

    pub fn new(nu1: u32, num1: u32) -> Self {
        Self { nu1, num1 }
    }

    pub fn nu(self) -> u32 {
        self.nu1 + self.num1
    }

    pub fn parity(self) -> Parity {
        if self.nu() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn j(self) -> Half {
        Half(self.nu() as i32)
    }

    /// `m = i0 = (nu1 - nu_-1)/2`.
    pub fn m(self) -> Half {
        Half(self.nu1 as i32 - self.num1 as i32)
    }

    /// Index in the full space (any cutoff >= nu).
    pub fn index(self) -> usize {
        let nu = self.nu() as usize;
        nu * (nu + 1) / 2 + self.nu1 as usize
    }

    pub fn from_index(i: usize) -> Self {
        let mut nu = 0usize;
        while (nu + 1) * (nu + 2) / 2 <= i {
            nu += 1;
        }
        let nu1 = i - nu * (nu + 1) / 2;
        FockState::new(nu1 as u32, (nu - nu1) as u32)
    }

    /// Shift by `(d1, dm1)`, `None` if an occupation would go negative.
    pub fn shifted(self, d1: i32, dm1: i32) -> Option<FockState> {
        let a = self.nu1 as i64 + d1 as i64;
        let b = self.num1 as i64 + dm1 as i64;
        (a >= 0 && b >= 0).then(|| FockState::new(a as u32, b as u32))
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.nu1, self.num1)
    }
}

pub fn labels(state: FockState) -> Labels {
    Labels { nu: state.nu(), parity: state.parity(), j: state.j(), m: state.m() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    All,
    Even,
    Odd,
    FixedNu(u32),
    FixedM(Half),
}

impl Sector {
    pub fn contains(self, s: FockState) -> bool {
        match self {
            Sector::All => true,
            Sector::Even => s.parity() == Parity::Even,
            Sector::Odd => s.parity() == Parity::Odd,
            Sector::FixedNu(n) => s.nu() == n,
            Sector::FixedM(m) => s.m() == m,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FockSpace {
    pub cutoff: u32,
    pub sector: Sector,
}

impl FockSpace {
    pub fn new(cutoff: u32, sector: Sector) -> Self {
        Self { cutoff, sector }
    }

    pub fn full(cutoff: u32) -> Self {
        Self::new(cutoff, Sector::All)
    }

    /// Number of states in the unfiltered space.
    pub fn full_dim(&self) -> usize {
        let l = self.cutoff as usize;
        (l + 1) * (l + 2) / 2
    }

    pub fn contains(&self, s: FockState) -> bool {
        s.nu() <= self.cutoff && self.sector.contains(s)
    }

    pub fn enumerate(&self) -> Vec<FockState> {
        enumerate(self)
    }
}

pub fn enumerate(space: &FockSpace) -> Vec<FockState> {
    (0..=space.cutoff)
        .flat_map(|nu| (0..=nu).map(move |nu1| FockState::new(nu1, nu - nu1)))
        .filter(|s| space.sector.contains(*s))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `n0` in {0, 1}: Figure-3 style labels.
    MinN0,
    /// `n0 = min(nu1, nu_-1)`: Figure-4 style labels.
    MaxN0,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MinN0 => "min-n0",
            Convention::MaxN0 => "max-n0",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TripleLabel {
    pub n1: u32,
    pub n0: u32,
    pub nm1: u32,
    pub convention: Convention,
}

impl TripleLabel {
    pub fn new(n1: u32, n0: u32, nm1: u32, convention: Convention) -> Self {
        Self { n1, n0, nm1, convention }
    }

    /// `n` with `2n = nu`.
    pub fn n(&self) -> u32 {
        self.n1 + self.n0 + self.nm1
    }

    pub fn is_valid(&self) -> bool {
        match self.convention {
            Convention::MinN0 => self.n0 <= 1,
            Convention::MaxN0 => self.n1 == 0 || self.nm1 == 0,
        }
    }
}

impl fmt::Display for TripleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{},{}>", self.n1, self.n0, self.nm1)
    }
}

pub fn triple_from_pair(state: FockState, convention: Convention) -> Result<TripleLabel, Error> {
    if state.parity() != Parity::Even {
        return Err(Error::OddParity(state));
    }
    let n0 = match convention {
        Convention::MinN0 => state.nu1 % 2,
        Convention::MaxN0 => state.nu1.min(state.num1),
    };
    Ok(TripleLabel::new((state.nu1 - n0) / 2, n0, (state.num1 - n0) / 2, convention))
}

pub fn pair_from_triple(t: TripleLabel) -> Result<FockState, Error> {
    if !t.is_valid() {
        return Err(Error::InvalidTriple {
            n1: t.n1,
            n0: t.n0,
            nm1: t.nm1,
            convention: t.convention.to_string(),
        });
    }
    Ok(FockState::new(2 * t.n1 + t.n0, 2 * t.nm1 + t.n0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(a: u32, b: u32) -> FockState {
        FockState::new(a, b)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(&FockSpace::full(0)), vec![st(0, 0)]);
        assert_eq!(
            enumerate(&FockSpace::new(2, Sector::Even)),
            vec![st(0, 0), st(0, 2), st(1, 1), st(2, 0)]
        );
        assert_eq!(enumerate(&FockSpace::new(1, Sector::Odd)), vec![st(0, 1), st(1, 0)]);
    }

    #[test]
    fn index_round_trip() {
        for (i, s) in enumerate(&FockSpace::full(12)).into_iter().enumerate() {
            assert_eq!(s.index(), i);
            assert_eq!(FockState::from_index(i), s);
        }
    }

    #[test]
    fn label_examples() {
        let l = labels(st(3, 1));
        assert_eq!((l.nu, l.parity, l.j, l.m), (4, Parity::Even, Half(4), Half(2)));
        let l = labels(st(1, 0));
        assert_eq!((l.nu, l.parity, l.j, l.m), (1, Parity::Odd, Half(1), Half(1)));
        assert_eq!(l.j.to_string(), "1/2");
    }

    #[test]
    fn triple_examples() {
        let t = triple_from_pair(st(3, 1), Convention::MinN0).unwrap();
        assert_eq!((t.n1, t.n0, t.nm1), (1, 1, 0));
        let t = triple_from_pair(st(2, 2), Convention::MaxN0).unwrap();
        assert_eq!((t.n1, t.n0, t.nm1), (0, 2, 0));
        let t = triple_from_pair(st(2, 2), Convention::MinN0).unwrap();
        assert_eq!((t.n1, t.n0, t.nm1), (1, 0, 1));
        assert!(triple_from_pair(st(1, 0), Convention::MinN0).is_err());
        assert_eq!(pair_from_triple(TripleLabel::new(0, 3, 0, Convention::MaxN0)).unwrap(), st(3, 3));
        assert!(pair_from_triple(TripleLabel::new(1, 2, 0, Convention::MinN0)).is_err());
        assert!(pair_from_triple(TripleLabel::new(1, 2, 1, Convention::MaxN0)).is_err());
    }
}
