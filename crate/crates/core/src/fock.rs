//! Fermionic occupation-number basis over money and debt modes.
//!
//! Modes are laid out in one global order: money modes `0..M` followed by
//! debt modes `M..M+D`. An occupation is stored as an unsigned integer whose
//! most significant bit (of `M+D` bits) is global mode 0, so the printed form
//! `|m0 m1 .. d0 d1 ..⟩` reads left to right in mode order and basis states
//! sort by that integer value. Every fermionic sign in [`crate::ops`] is
//! derived from this order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ops::BasisTag;

/// Default cap on the unrestricted index space, as a power of two.
pub const DEFAULT_CAP_BITS: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Species {
    Money,
    Debt,
}

/// A money mode `k` or a debt mode `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModeId {
    pub species: Species,
    pub index: usize,
}

impl ModeId {
    pub const fn money(index: usize) -> Self {
        ModeId {
            species: Species::Money,
            index,
        }
    }

    pub const fn debt(index: usize) -> Self {
        ModeId {
            species: Species::Debt,
            index,
        }
    }
}

impl fmt::Display for ModeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.species {
            Species::Money => write!(f, "money[{}]", self.index),
            Species::Debt => write!(f, "debt[{}]", self.index),
        }
    }
}

/// Occupancy bit pattern of `width` fermionic modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupationState {
    bits: u64,
    width: usize,
}

impl OccupationState {
    pub fn from_bits(bits: u64, width: usize) -> Self {
        debug_assert!(width < 64 && bits >> width == 0);
        OccupationState { bits, width }
    }

    /// Parses `"0110"`: one character per mode in global order.
    pub fn parse(text: &str) -> Option<Self> {
        let width = text.len();
        if width >= 64 {
            return None;
        }
        let mut bits = 0u64;
        for ch in text.chars() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => return None,
            }
        }
        Some(OccupationState { bits, width })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn mask(&self, position: usize) -> u64 {
        1u64 << (self.width - 1 - position)
    }

    /// Occupancy of the mode at global position `position`.
    pub fn is_occupied(&self, position: usize) -> bool {
        self.bits & self.mask(position) != 0
    }

    /// Returns a copy with the occupancy of `position` toggled.
    pub fn flipped(&self, position: usize) -> Self {
        OccupationState {
            bits: self.bits ^ self.mask(position),
            width: self.width,
        }
    }

    /// Number of occupied modes strictly before `position` in global order.
    pub fn occupied_before(&self, position: usize) -> u32 {
        if position == 0 {
            return 0;
        }
        let above = self.bits >> (self.width - position);
        above.count_ones()
    }

    /// Occupied modes in positions `start..end`.
    pub fn count_range(&self, start: usize, end: usize) -> u32 {
        (start..end).filter(|&p| self.is_occupied(p)).count() as u32
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.width {
            f.write_str(if self.is_occupied(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Ordered occupation basis, optionally restricted to a charge sector
/// `Q = N_money - N_debt`. Cloning is cheap; the state table is shared.
#[derive(Debug, Clone, PartialEq)]
pub struct FockBasis {
    m_money: usize,
    n_debt: usize,
    sector: Option<i64>,
    states: Arc<[OccupationState]>,
    // None for the unrestricted basis, where the index is the bit value.
    index_map: Option<Arc<HashMap<u64, usize>>>,
}

impl FockBasis {
    pub fn new(m_money: usize, n_debt: usize, sector: Option<i64>) -> Result<Self> {
        Self::with_cap(m_money, n_debt, sector, DEFAULT_CAP_BITS)
    }

    pub fn with_cap(
        m_money: usize,
        n_debt: usize,
        sector: Option<i64>,
        cap_bits: u32,
    ) -> Result<Self> {
        let width = m_money + n_debt;
        if width > cap_bits as usize {
            return Err(Error::DimensionTooLarge {
                modes: width,
                cap_bits,
            });
        }
        let full = 1u64 << width;
        let states: Vec<OccupationState> = match sector {
            None => (0..full)
                .map(|b| OccupationState::from_bits(b, width))
                .collect(),
            Some(q) => (0..full)
                .map(|b| OccupationState::from_bits(b, width))
                .filter(|s| charge_of(s, m_money) == q)
                .collect(),
        };
        if states.is_empty() {
            return Err(Error::EmptySector(sector.unwrap_or_default()));
        }
        let index_map = sector.map(|_| {
            Arc::new(
                states
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (s.bits, i))
                    .collect(),
            )
        });
        Ok(FockBasis {
            m_money,
            n_debt,
            sector,
            states: states.into(),
            index_map,
        })
    }

    pub fn m_money(&self) -> usize {
        self.m_money
    }

    pub fn n_debt(&self) -> usize {
        self.n_debt
    }

    pub fn n_modes(&self) -> usize {
        self.m_money + self.n_debt
    }

    pub fn sector(&self) -> Option<i64> {
        self.sector
    }

    pub fn dim(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[OccupationState] {
        &self.states
    }

    pub fn tag(&self) -> BasisTag {
        BasisTag::Fock {
            money: self.m_money,
            debt: self.n_debt,
            sector: self.sector,
        }
    }

    /// Global position of a mode, or an error when it does not exist here.
    pub fn position(&self, mode: ModeId) -> Result<usize> {
        match mode.species {
            Species::Money if mode.index < self.m_money => Ok(mode.index),
            Species::Debt if mode.index < self.n_debt => Ok(self.m_money + mode.index),
            _ => Err(Error::ModeOutOfRange(mode.to_string())),
        }
    }

    /// Dense index of an occupation; `None` when it lies outside the basis.
    pub fn lookup(&self, occ: &OccupationState) -> Option<usize> {
        if occ.width != self.n_modes() {
            return None;
        }
        match &self.index_map {
            None => Some(occ.bits as usize),
            Some(map) => map.get(&occ.bits).copied(),
        }
    }

    pub fn index_of(&self, occ: &OccupationState) -> Result<usize> {
        self.lookup(occ)
            .ok_or_else(|| Error::NotInBasis(occ.to_string()))
    }

    pub fn occupation_of(&self, index: usize) -> Result<OccupationState> {
        self.states
            .get(index)
            .copied()
            .ok_or(Error::IndexOutOfRange {
                index,
                dim: self.dim(),
            })
    }

    pub fn n_money_of(&self, occ: &OccupationState) -> u32 {
        occ.count_range(0, self.m_money)
    }

    pub fn n_debt_of(&self, occ: &OccupationState) -> u32 {
        occ.count_range(self.m_money, self.n_modes())
    }

    /// `N_money - N_debt` of a basis occupation.
    pub fn charge_of(&self, occ: &OccupationState) -> i64 {
        charge_of(occ, self.m_money)
    }
}

fn charge_of(occ: &OccupationState, m_money: usize) -> i64 {
    let money = occ.count_range(0, m_money) as i64;
    let debt = occ.count_range(m_money, occ.width) as i64;
    money - debt
}
