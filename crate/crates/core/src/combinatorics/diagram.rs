use serde::{Deserialize, Serialize};

use super::MultiplicityVector;

/// A non-crossing perfect matching of the boundary slots of a disk. Vertex
/// `i` owns `vertices[i].1` consecutive slots, and vertices appear in boundary
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChordDiagram {
    /// `(position index, multiplicity)` in boundary order.
    pub vertices: Vec<(usize, u32)>,
    /// Arcs as slot pairs `(i, j)` with `i < j`, sorted by `i`.
    pub arcs: Vec<(usize, usize)>,
}

impl ChordDiagram {
    pub fn slot_count(&self) -> usize {
        self.vertices.iter().map(|v| v.1 as usize).sum()
    }

    /// Owning vertex (index into `vertices`) of every slot.
    pub fn slot_owners(&self) -> Vec<usize> {
        slot_owners(&self.vertices.iter().map(|v| v.1).collect::<Vec<_>>())
    }

    /// Balanced-parenthesis word: `(` opens an arc, `)` closes it.
    pub fn canonical(&self) -> String {
        let mut word = vec!['?'; self.slot_count()];
        for &(i, j) in &self.arcs {
            word[i] = '(';
            word[j] = ')';
        }
        word.into_iter().collect()
    }

    /// Perfect matching, non-crossing, and no arc inside one vertex.
    pub fn is_valid(&self) -> bool {
        let owners = self.slot_owners();
        let n = owners.len();
        if 2 * self.arcs.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &(i, j) in &self.arcs {
            if i >= j || j >= n || seen[i] || seen[j] || owners[i] == owners[j] {
                return false;
            }
            seen[i] = true;
            seen[j] = true;
        }
        let crosses = |a: (usize, usize), b: (usize, usize)| {
            (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
        };
        self.arcs
            .iter()
            .enumerate()
            .all(|(k, &a)| self.arcs[k + 1..].iter().all(|&b| !crosses(a, b)))
    }
}

pub(crate) fn slot_owners(mults: &[u32]) -> Vec<usize> {
    mults
        .iter()
        .enumerate()
        .flat_map(|(v, &m)| std::iter::repeat_n(v, m as usize))
        .collect()
}

/// Every non-crossing loop-free matching of the slots, ordered by canonical word.
pub fn enumerate_diagrams(mult: &MultiplicityVector) -> Vec<ChordDiagram> {
    let vertices: Vec<(usize, u32)> = mult.entries().iter().copied().enumerate().collect();
    matchings(mult.entries())
        .into_iter()
        .map(|arcs| ChordDiagram {
            vertices: vertices.clone(),
            arcs,
        })
        .collect()
}

/// Non-crossing matchings of slots grouped by owner, no arc within one owner.
/// Sorted by canonical word; the recursion produces each matching once.
pub(crate) fn matchings(mults: &[u32]) -> Vec<Vec<(usize, usize)>> {
    let owners = slot_owners(mults);
    if owners.len() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut arcs = Vec::with_capacity(owners.len() / 2);
    extend(&owners, 0, &mut Vec::new(), &mut arcs, &mut out);
    for m in &mut out {
        m.sort_unstable();
    }
    // '(' < ')' in ASCII, so lexicographic word order is "open first"
    out.sort_by_cached_key(|m| word(m, owners.len()));
    out
}

fn word(arcs: &[(usize, usize)], n: usize) -> Vec<u8> {
    let mut w = vec![0u8; n];
    for &(i, j) in arcs {
        w[i] = b'(';
        w[j] = b')';
    }
    w
}

// Scan slots left to right keeping a stack of open arcs; each slot either
// opens an arc or closes the most recent open one (the only non-crossing
// choice), unless that would join a vertex to itself.
fn extend(
    owners: &[usize],
    slot: usize,
    open: &mut Vec<usize>,
    arcs: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let n = owners.len();
    if slot == n {
        if open.is_empty() {
            out.push(arcs.clone());
        }
        return;
    }
    if open.len() > n - slot {
        return;
    }
    if open.len() < n - slot {
        open.push(slot);
        extend(owners, slot + 1, open, arcs, out);
        open.pop();
    }
    if let Some(&top) = open.last() {
        if owners[top] != owners[slot] {
            open.pop();
            arcs.push((top, slot));
            extend(owners, slot + 1, open, arcs, out);
            arcs.pop();
            open.push(top);
        }
    }
}
