use super::{is_adjacent, sym_diff_cycles, Matching};
use crate::error::{Error, Result};

/// A matching adjacent to both ends of an adjacent pair that avoids the
/// pair's cycle edges, together with the cycle it was built on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacentCycleMatching {
    pub matching: Matching,
    /// `v_0, …, v_{2l-1}` with `{v_{2i}, v_{2i+1}} ∈ M1`.
    pub cycle: Vec<usize>,
    /// Half the cycle length.
    pub l: usize,
    /// The 4-cycle case, where the chord matching `{v0v2, v1v3}` is used
    /// because the general even-length rule needs `v_5`.
    pub l2_special_case: bool,
}

pub fn adjacent_cycle_matching(m1: &Matching, m2: &Matching) -> Result<AdjacentCycleMatching> {
    if !is_adjacent(m1, m2) {
        return Err(Error::NotAdjacent);
    }
    let cycle = sym_diff_cycles(m1, m2)?.cycles.remove(0);
    let len = cycle.len();
    let l = len / 2;
    let v = |i: usize| cycle[i % len];

    let mut chords = Vec::with_capacity(l);
    if l == 2 {
        chords.push((v(0), v(2)));
        chords.push((v(1), v(3)));
    } else if l % 2 == 1 {
        for i in (0..len).step_by(2) {
            chords.push((v(i), v(i + 3)));
        }
    } else {
        chords.push((v(0), v(2)));
        chords.push((v(3), v(5)));
        for i in (4..len).step_by(2) {
            chords.push((v(i), v(i + 3)));
        }
    }

    let mut mate = m1.mates().to_vec();
    for &(a, b) in &chords {
        mate[a] = b;
        mate[b] = a;
    }
    let matching = Matching::from_mates(mate)
        .map_err(|e| Error::InternalInvariantViolation(format!("cycle chords are not a matching: {e}")))?;

    let star = m1.sym_diff_nodes(m2);
    let ok = is_adjacent(m1, &matching)
        && is_adjacent(m2, &matching)
        && m1.sym_diff_nodes(&matching) == star
        && m2.sym_diff_nodes(&matching) == star
        && star.iter().all(|&u| matching.mate(u) != m1.mate(u) && matching.mate(u) != m2.mate(u));
    if !ok {
        return Err(Error::InternalInvariantViolation(format!("adjacent-cycle matching fails its contract on l = {l}")));
    }
    Ok(AdjacentCycleMatching { matching, cycle, l, l2_special_case: l == 2 })
}
