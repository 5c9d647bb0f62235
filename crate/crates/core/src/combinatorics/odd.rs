use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::diagram::{matchings, ChordDiagram};
use super::{kostka, MultiplicityVector};
use crate::error::{Error, Result};

/// Where a vertex of an odd diagram sits on the boundary circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxisPosition {
    Zero,
    /// `a_j`, 1-based.
    Positive(usize),
    Infinity,
    /// `-a_j`, 1-based.
    Negative(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: u64) -> Self {
        if x.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A chord diagram on `0, a_1..a_{n-2}, inf, -a_{n-2}..-a_1` invariant under
/// the reflection `a_j <-> -a_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OddDiagram {
    pub diagram: ChordDiagram,
    pub positions: Vec<AxisPosition>,
    pub m0: u32,
    pub interior: Vec<u32>,
    pub m_inf: u32,
}

impl OddDiagram {
    /// Image of a slot under the reflection. Slots of the vertex at 0 start at
    /// index 0, so the reflection is `x -> m0 - 1 - x (mod T)`.
    pub fn reflect_slot(&self, slot: usize) -> usize {
        reflect(self.m0 as usize, self.diagram.slot_count(), slot)
    }

    /// Number of crossing arcs: one endpoint at some `a_i`, the other at some `-a_j`.
    pub fn nu(&self) -> usize {
        let owners = self.diagram.slot_owners();
        self.diagram
            .arcs
            .iter()
            .filter(|&&(i, j)| {
                matches!(
                    (self.positions[owners[i]], self.positions[owners[j]]),
                    (AxisPosition::Positive(_), AxisPosition::Negative(_))
                        | (AxisPosition::Negative(_), AxisPosition::Positive(_))
                )
            })
            .count()
    }

    pub fn is_valid(&self) -> bool {
        self.m0.is_multiple_of(2)
            && self.m_inf.is_multiple_of(2)
            && self.diagram.is_valid()
            && self.diagram.arcs.iter().all(|&(i, j)| {
                let (a, b) = (self.reflect_slot(i), self.reflect_slot(j));
                self.diagram.arcs.contains(&(a.min(b), a.max(b)))
            })
    }
}

fn reflect(m0: usize, total: usize, slot: usize) -> usize {
    (m0 + total - 1 - slot) % total
}

fn check_axes(m0: u32, m_inf: u32) -> Result<()> {
    if m0 % 2 == 1 {
        return Err(Error::OddAxisMultiplicity {
            vertex: "0",
            value: m0,
        });
    }
    if m_inf % 2 == 1 {
        return Err(Error::OddAxisMultiplicity {
            vertex: "infinity",
            value: m_inf,
        });
    }
    Ok(())
}

/// All odd diagrams with `m0` slots at 0, `interior[j]` slots at each of
/// `+-a_{j+1}` and `m_inf` slots at infinity, ordered by canonical word.
pub fn enumerate_odd_diagrams(
    m0: u32,
    interior: &MultiplicityVector,
    m_inf: u32,
) -> Result<Vec<OddDiagram>> {
    check_axes(m0, m_inf)?;
    let k = interior.len();
    let mut positions = vec![AxisPosition::Zero];
    let mut mults = vec![m0];
    for (j, &m) in interior.entries().iter().enumerate() {
        positions.push(AxisPosition::Positive(j + 1));
        mults.push(m);
    }
    positions.push(AxisPosition::Infinity);
    mults.push(m_inf);
    for (j, &m) in interior.entries().iter().enumerate().rev() {
        positions.push(AxisPosition::Negative(j + 1));
        mults.push(m);
    }
    // vertices with no slots still occupy a boundary position
    let vertices: Vec<(usize, u32)> = mults.iter().copied().enumerate().collect();
    let total: usize = mults.iter().map(|&m| m as usize).sum();
    debug_assert_eq!(vertices.len(), 2 * k + 2);

    let symmetric = |arcs: &Vec<(usize, usize)>| {
        arcs.iter().all(|&(i, j)| {
            let (a, b) = (
                reflect(m0 as usize, total, i),
                reflect(m0 as usize, total, j),
            );
            arcs.binary_search(&(a.min(b), a.max(b))).is_ok()
        })
    };
    Ok(matchings(&mults)
        .into_iter()
        .filter(symmetric)
        .map(|arcs| OddDiagram {
            diagram: ChordDiagram {
                vertices: vertices.clone(),
                arcs,
            },
            positions: positions.clone(),
            m0,
            interior: interior.entries().to_vec(),
            m_inf,
        })
        .collect())
}

/// Parameters of the reduction of an odd-diagram count to a Kostka number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostkaReduction {
    pub mu: u32,
    /// Parity of the crossing-edge count, which always equals the parity of `mu`.
    pub nu_parity: Parity,
    pub r: u32,
    pub s: u32,
    pub k: u32,
}

/// Reduction with the smallest admissible `k`: `r, s >= 1` and
/// `r + s > sum(interior)`.
///
/// For `mu` even, `r = m0/2 + k` and `s = m_inf/2 + k`. For `mu` odd,
/// `r = (m0 + m_inf)/2 + k + 1` and `s = k`: every crossing-parity diagram can
/// be pushed to one with all axis arcs at 0, after which the even rule applies.
pub fn reduction_params(
    m0: u32,
    interior: &MultiplicityVector,
    m_inf: u32,
) -> Result<KostkaReduction> {
    check_axes(m0, m_inf)?;
    let interior_total = interior.total();
    let mut k = 0;
    loop {
        let red = reduction_at(m0, interior, m_inf, k)?;
        if red.r >= 1 && red.s >= 1 && red.r + red.s > interior_total {
            return Ok(red);
        }
        k += 1;
    }
}

/// Reduction parameters for an explicit `k` (no admissibility check).
pub fn reduction_at(
    m0: u32,
    interior: &MultiplicityVector,
    m_inf: u32,
    k: u32,
) -> Result<KostkaReduction> {
    check_axes(m0, m_inf)?;
    let mu = (m0 + m_inf) / 2 + interior.total();
    let nu_parity = Parity::of(mu as u64);
    let (r, s) = match nu_parity {
        Parity::Even => (m0 / 2 + k, m_inf / 2 + k),
        Parity::Odd => ((m0 + m_inf) / 2 + k + 1, k),
    };
    Ok(KostkaReduction {
        mu,
        nu_parity,
        r,
        s,
        k,
    })
}

/// `K(r, interior..., s)` with the minimal reduction parameters.
pub fn odd_count_formula(m0: u32, interior: &MultiplicityVector, m_inf: u32) -> Result<BigUint> {
    let red = reduction_params(m0, interior, m_inf)?;
    Ok(kostka_for(&red, interior))
}

/// `K(r, interior..., s)` for a given reduction.
pub fn kostka_for(red: &KostkaReduction, interior: &MultiplicityVector) -> BigUint {
    let mut entries = Vec::with_capacity(interior.len() + 2);
    entries.push(red.r);
    entries.extend_from_slice(interior.entries());
    entries.push(red.s);
    kostka(&MultiplicityVector::new(entries))
}
