//! Beta-numbers, truncated abacus displays, and rim hooks.
//!
//! The beta-set of a partition with integer charge `a` is
//! `{ lambda_j - j + a : j = 1, 2, .. }` (1-based `j`): a set of integers
//! containing every sufficiently negative integer. A truncated display keeps
//! the beads above a floor `F` chosen so that every position `< F` is a bead;
//! for `e >= 2` the canonical floor is the largest multiple of `e` with that
//! property, for `e = 0` it is the first gap itself. On an abacus with `e`
//! runners, position `x` sits on runner `x mod e`, and removing a rim
//! `len`-hook moves a bead from `x` to the empty position `x - len`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::Partition;

/// A truncated beta-set display.
///
/// Invariants: `beads` are strictly decreasing, all `>= floor`, and every
/// integer `< floor` is implicitly a bead. The integer charge of the display
/// is forced: `charge = floor + beads.len()`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaSet {
    floor: i64,
    beads: Vec<i64>,
}

impl BetaSet {
    /// Build from an explicit bead list (any order) and a floor.
    pub fn new(floor: i64, mut beads: Vec<i64>) -> Result<Self, Error> {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        if beads.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("beta-numbers must be distinct"));
        }
        if beads.last().is_some_and(|&b| b < floor) {
            return Err(Error::invalid("beta-number below the display floor"));
        }
        Ok(BetaSet { floor, beads })
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Explicit beads, strictly decreasing.
    pub fn beads(&self) -> &[i64] {
        &self.beads
    }

    /// The integer charge this display represents.
    pub fn charge(&self) -> i64 {
        self.floor + self.beads.len() as i64
    }

    /// Whether `x` is a bead (explicit or below the floor).
    pub fn contains(&self, x: i64) -> bool {
        x < self.floor || self.beads.binary_search_by(|b| x.cmp(b)).is_ok()
    }

    /// Re-truncate at a lower floor, materialising the implicit beads.
    pub fn with_floor(&self, floor: i64) -> Result<Self, Error> {
        if floor > self.floor {
            return Err(Error::invalid("can only lower a display floor"));
        }
        let mut beads = self.beads.clone();
        beads.extend(floor..self.floor);
        BetaSet::new(floor, beads)
    }

    /// Beads per runner for an `e`-runner abacus (`e >= 2`): entry `i` counts
    /// explicit beads at positions congruent to `i` mod `e`.
    pub fn runner_counts(&self, e: u32) -> Result<Vec<u32>, Error> {
        if e < 2 {
            return Err(Error::invalid("runner counts need e >= 2"));
        }
        let mut counts = alloc::vec![0u32; e as usize];
        for &b in &self.beads {
            counts[b.rem_euclid(e as i64) as usize] += 1;
        }
        Ok(counts)
    }
}

/// Beta-set of `p` with integer charge `charge`, canonically truncated for
/// quantum characteristic `e` (`e = 0` truncates at the first gap).
pub fn beta_set(p: &Partition, charge: i64, e: u32) -> Result<BetaSet, Error> {
    if e == 1 {
        return Err(Error::invalid("quantum characteristic e must be 0 or >= 2"));
    }
    let len = p.rows() as i64;
    // Explicit values for j = 1..=len; for j > len the value is charge - j,
    // i.e. every integer < charge - len is a bead.
    let mut full: Vec<i64> = (0..len)
        .map(|j| p.part(j as usize) as i64 - (j + 1) + charge)
        .collect();
    let tail_top = charge - len; // all integers < tail_top are beads
    let first_gap = {
        let mut x = tail_top;
        while full.contains(&x) {
            x += 1;
        }
        x
    };
    let floor = if e == 0 {
        first_gap
    } else {
        (e as i64) * first_gap.div_euclid(e as i64)
    };
    full.extend(floor..tail_top);
    full.retain(|&b| b >= floor);
    BetaSet::new(floor, full)
}

/// Partition and integer charge encoded by a display.
pub fn partition_from_beta(b: &BetaSet) -> Result<(Partition, i64), Error> {
    let charge = b.charge();
    let parts: Vec<i64> = b
        .beads()
        .iter()
        .enumerate()
        .map(|(j, &beta)| beta + (j as i64 + 1) - charge)
        .collect();
    if parts.last().is_some_and(|&p| p < 0) {
        return Err(Error::invalid("display does not encode a partition"));
    }
    let parts = parts
        .into_iter()
        .map(|p| u32::try_from(p).map_err(|_| Error::invalid("part out of range")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((Partition::new(parts)?, charge))
}

/// A rim hook of a partition: the cells of the connected rim strip, plus its
/// leg length (number of rows spanned minus one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RimHook {
    pub cells: Vec<(u32, u32)>,
    pub leg: u32,
}

impl RimHook {
    pub fn length(&self) -> u32 {
        self.cells.len() as u32
    }

    pub fn arm(&self) -> u32 {
        let cols: alloc::collections::BTreeSet<u32> = self.cells.iter().map(|&(_, c)| c).collect();
        cols.len() as u32 - 1
    }
}

fn diff_hook(bigger: &Partition, smaller: &Partition) -> RimHook {
    let mut cells = Vec::new();
    for r in 0..bigger.rows() {
        for c in smaller.part(r)..bigger.part(r) {
            cells.push((r as u32, c));
        }
    }
    let rows: alloc::collections::BTreeSet<u32> = cells.iter().map(|&(r, _)| r).collect();
    RimHook {
        leg: rows.len() as u32 - 1,
        cells,
    }
}

/// All removable rim hooks of the given length, paired with the partition
/// left after removal, listed by decreasing bead position.
pub fn removable_rim_hooks(p: &Partition, length: u32) -> Result<Vec<(RimHook, Partition)>, Error> {
    if length == 0 {
        return Err(Error::invalid("rim hooks have positive length"));
    }
    let b = beta_set(p, 0, 0)?;
    let mut out = Vec::new();
    for &bead in b.beads() {
        let target = bead - length as i64;
        if b.contains(target) {
            continue;
        }
        // target >= floor here, else it would be an implicit bead.
        let mut beads: Vec<i64> = b.beads().to_vec();
        beads.retain(|&x| x != bead);
        beads.push(target);
        let moved = BetaSet::new(b.floor(), beads)?;
        let (q, _) = partition_from_beta(&moved)?;
        out.push((diff_hook(p, &q), q));
    }
    Ok(out)
}

/// All ways to wrap a rim hook of the given length onto `p`, paired with the
/// enlarged partition.
pub fn addable_rim_hooks(p: &Partition, length: u32) -> Result<Vec<(RimHook, Partition)>, Error> {
    if length == 0 {
        return Err(Error::invalid("rim hooks have positive length"));
    }
    let b = beta_set(p, 0, 0)?;
    let lo = b.floor() - length as i64;
    let b = b.with_floor(lo)?;
    let mut out = Vec::new();
    for &bead in b.beads() {
        let target = bead + length as i64;
        if b.contains(target) {
            continue;
        }
        let mut beads: Vec<i64> = b.beads().to_vec();
        beads.retain(|&x| x != bead);
        beads.push(target);
        let moved = BetaSet::new(lo, beads)?;
        let (q, _) = partition_from_beta(&moved)?;
        out.push((diff_hook(&q, p), q));
    }
    Ok(out)
}

/// Remove a specific rim hook; errors when the cells are not exactly a
/// removable rim strip of `p`.
pub fn remove_rim_hook(p: &Partition, hook: &RimHook) -> Result<Partition, Error> {
    let candidates = removable_rim_hooks(p, hook.length())?;
    for (h, q) in candidates {
        if h.cells == hook.cells {
            return Ok(q);
        }
    }
    Err(Error::invalid("cells are not a removable rim hook"))
}

/// Wrap a specific rim hook on; errors when the cells are not exactly an
/// addable rim strip for `p`.
pub fn add_rim_hook(p: &Partition, hook: &RimHook) -> Result<Partition, Error> {
    let candidates = addable_rim_hooks(p, hook.length())?;
    for (h, q) in candidates {
        if h.cells == hook.cells {
            return Ok(q);
        }
    }
    Err(Error::invalid("cells are not an addable rim hook"))
}

/// Whether `p` is an `e`-core (no removable rim `e`-hooks). Every partition
/// is a 0-core.
pub fn is_core(p: &Partition, e: u32) -> Result<bool, Error> {
    match e {
        0 => Ok(true),
        1 => Err(Error::invalid("quantum characteristic e must be 0 or >= 2")),
        _ => Ok(removable_rim_hooks(p, e)?.is_empty()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_example() {
        // lambda = (10,10,5,3,3,3,2,1,1,1), charge 2, e = 4: canonical floor -8.
        let b = beta_set(&pt("10,10,5,3,3,3,2,1,1,1"), 2, 4).unwrap();
        assert_eq!(b.floor(), -8);
        assert_eq!(b.beads(), &[11, 10, 4, 1, 0, -1, -3, -5, -6, -7]);
        assert_eq!(b.charge(), 2);
        let (p, a) = partition_from_beta(&b).unwrap();
        assert_eq!(p, pt("10,10,5,3,3,3,2,1,1,1"));
        assert_eq!(a, 2);
    }

    #[test]
    fn beta_roundtrip_small() {
        for s in ["-", "1", "3,1,1", "4,2,2,1"] {
            for a in [-3i64, 0, 2, 7] {
                for e in [0u32, 2, 3, 5] {
                    let b = beta_set(&pt(s), a, e).unwrap();
                    let (p, a2) = partition_from_beta(&b).unwrap();
                    assert_eq!((p, a2), (pt(s), a), "case {s} {a} {e}");
                    if e >= 2 {
                        assert_eq!(b.floor().rem_euclid(e as i64), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn hooks_of_two_one() {
        // (2,1) has two removable 2-hooks and one removable 3-hook.
        let hs = removable_rim_hooks(&pt("2,1"), 2).unwrap();
        assert_eq!(hs.len(), 2);
        let results: Vec<Partition> = hs.iter().map(|(_, q)| q.clone()).collect();
        assert!(results.contains(&pt("1")));
        let hs3 = removable_rim_hooks(&pt("2,1"), 3).unwrap();
        assert_eq!(hs3.len(), 1);
        assert_eq!(hs3[0].1, Partition::empty());
        assert_eq!(hs3[0].0.leg, 1);
        assert!(is_core(&pt("2,1"), 4).unwrap());
        assert!(!is_core(&pt("2,1"), 2).unwrap());
    }

    #[test]
    fn add_remove_inverse() {
        let p = pt("3,1");
        for len in 1..=4u32 {
            for (h, q) in removable_rim_hooks(&p, len).unwrap() {
                assert_eq!(remove_rim_hook(&p, &h).unwrap(), q);
                assert_eq!(add_rim_hook(&q, &h).unwrap(), p);
                assert_eq!(h.length(), len);
            }
            for (h, q) in addable_rim_hooks(&p, len).unwrap() {
                assert_eq!(remove_rim_hook(&q, &h).unwrap(), p);
            }
        }
    }
}
