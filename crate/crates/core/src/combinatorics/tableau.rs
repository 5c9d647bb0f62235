use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Multiplicities `m_0, m_1, ...` of the critical points of a rational
/// function, listed in boundary order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiplicityVector {
    entries: Vec<u32>,
}

impl MultiplicityVector {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiplicityVector { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.entries.iter().sum()
    }

    /// Degree `d` with `2d - 2 = total`, or `None` when the total is odd.
    pub fn degree(&self) -> Option<u32> {
        let t = self.total();
        t.is_multiple_of(2).then_some(t / 2 + 1)
    }

    /// Whether every entry is at most `d - 1`. Vectors failing this still
    /// count, with answer zero.
    pub fn within_degree_bound(&self) -> bool {
        match self.degree() {
            Some(d) => self.entries.iter().all(|&m| m < d),
            None => false,
        }
    }
}

impl From<Vec<u32>> for MultiplicityVector {
    fn from(entries: Vec<u32>) -> Self {
        Self::new(entries)
    }
}

impl From<&[u32]> for MultiplicityVector {
    fn from(entries: &[u32]) -> Self {
        Self::new(entries.to_vec())
    }
}

/// Semistandard filling of the two-row rectangle; `k` appears `m_{k-1}` times.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: [Vec<u32>; 2],
}

impl Tableau {
    pub fn columns(&self) -> usize {
        self.rows[0].len()
    }

    /// Rectangle shape, weak rows, strict columns and exact content.
    pub fn is_valid_for(&self, mult: &MultiplicityVector) -> bool {
        let [top, bottom] = &self.rows;
        if top.len() != bottom.len() || 2 * top.len() != mult.total() as usize {
            return false;
        }
        let weak = |row: &Vec<u32>| row.windows(2).all(|w| w[0] <= w[1]);
        if !weak(top) || !weak(bottom) || top.iter().zip(bottom).any(|(a, b)| a >= b) {
            return false;
        }
        let mut content = vec![0u32; mult.len()];
        for &v in top.iter().chain(bottom) {
            match (v as usize).checked_sub(1).and_then(|i| content.get_mut(i)) {
                Some(c) => *c += 1,
                None => return false,
            }
        }
        content == mult.entries()
    }
}

/// All semistandard tableaux of shape `2 x (d-1)` with the given content, in
/// row-major lexicographic order.
pub fn enumerate_ssyt(mult: &MultiplicityVector) -> Vec<Tableau> {
    let Some(d) = mult.degree() else {
        return Vec::new();
    };
    let width = (d - 1) as usize;
    let mut out = Vec::new();
    let mut rows = [Vec::with_capacity(width), Vec::with_capacity(width)];
    fill(mult.entries(), 0, width, &mut rows, &mut out);
    out.sort();
    out
}

// Values are placed in increasing order, so rows stay weakly increasing; the
// new bottom entries must sit under top entries placed strictly earlier.
fn fill(
    content: &[u32],
    value: usize,
    width: usize,
    rows: &mut [Vec<u32>; 2],
    out: &mut Vec<Tableau>,
) {
    if value == content.len() {
        if rows[0].len() == width && rows[1].len() == width {
            out.push(Tableau { rows: rows.clone() });
        }
        return;
    }
    let m = content[value] as usize;
    let (top_len, bottom_len) = (rows[0].len(), rows[1].len());
    let label = value as u32 + 1;
    for in_bottom in 0..=m {
        let in_top = m - in_bottom;
        if top_len + in_top > width || bottom_len + in_bottom > top_len {
            continue;
        }
        rows[0].extend(std::iter::repeat_n(label, in_top));
        rows[1].extend(std::iter::repeat_n(label, in_bottom));
        fill(content, value + 1, width, rows, out);
        rows[0].truncate(top_len);
        rows[1].truncate(bottom_len);
    }
}

/// Kostka number for the two-row rectangle: the number of tableaux returned by
/// [`enumerate_ssyt`], computed by dynamic programming over the row lengths.
pub fn kostka(mult: &MultiplicityVector) -> BigUint {
    let Some(d) = mult.degree() else {
        return BigUint::zero();
    };
    let width = (d - 1) as usize;
    // ways[t] = fillings so far whose top row has length t
    let mut ways = vec![BigUint::zero(); width + 1];
    ways[0] = BigUint::one();
    let mut placed = 0usize;
    for &m in mult.entries() {
        let m = m as usize;
        let mut next = vec![BigUint::zero(); width + 1];
        for (top, count) in ways.iter().enumerate() {
            if count.is_zero() || placed < top {
                continue;
            }
            let bottom = placed - top;
            for in_bottom in 0..=m.min(top.saturating_sub(bottom)) {
                let new_top = top + m - in_bottom;
                if new_top <= width {
                    next[new_top] += count;
                }
            }
        }
        placed += m;
        ways = next;
    }
    ways[width].clone()
}

/// Catalan number `binom(2d, d) / (d + 1)`.
pub fn catalan(d: u32) -> BigUint {
    binom(2 * d, d) / BigUint::from(d + 1)
}

pub fn binom(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    binomial(BigUint::from(n), BigUint::from(k))
}

/// `binom(m, floor(m/2))`: the number of odd diagrams with `m` simple
/// interior vertices and no arcs at the axis vertices.
pub fn binomial_count(m: u32) -> BigUint {
    binom(m, m / 2)
}
