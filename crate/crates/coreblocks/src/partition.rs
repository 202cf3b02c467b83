//! Partitions, multipartitions, multicharges and residues.
//!
//! A partition is stored as its weakly decreasing list of positive parts; a
//! multipartition is an `r`-tuple of partitions. Nodes carry a component
//! index and 0-based row/column, so the residue of the node `(s, x, y)` is
//! `a_s - x + y`, reduced mod `e` when `e >= 2` and kept as a plain integer
//! in the `e = 0` (generic / infinite quantum characteristic) case.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build from a part list; trailing zeros are trimmed, anything not
    /// weakly decreasing is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be weakly decreasing"));
        }
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// The `row`-th part (0-based), zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cells `(row, col)`, 0-based, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r as u32, c)))
    }

    pub fn contains_cell(&self, row: u32, col: u32) -> bool {
        col < self.part(row as usize)
    }

    /// Rows whose last cell can be removed, as `(row, col)` of that cell.
    pub fn removable_cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r in 0..self.parts.len() {
            if self.parts[r] > self.part(r + 1) {
                out.push((r as u32, self.parts[r] - 1));
            }
        }
        out
    }

    /// Positions where a cell can be appended, as `(row, col)` of the new cell.
    pub fn addable_cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for r in 0..=self.parts.len() {
            let here = self.part(r);
            if r == 0 || here < self.part(r - 1) {
                out.push((r as u32, here));
            }
        }
        out
    }

    /// Add a cell at an addable position.
    pub fn with_cell(&self, row: u32, col: u32) -> Result<Self, Error> {
        let r = row as usize;
        if self.part(r) != col || (r > 0 && self.part(r - 1) <= col) {
            return Err(Error::invalid("cell is not addable"));
        }
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Ok(Partition { parts })
    }

    /// Remove a cell at a removable position.
    pub fn without_cell(&self, row: u32, col: u32) -> Result<Self, Error> {
        let r = row as usize;
        if self.part(r) != col + 1 || self.part(r + 1) > col {
            return Err(Error::invalid("cell is not removable"));
        }
        let mut parts = self.parts.clone();
        parts[r] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::invalid(format_args!("bad part {p:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// An `r`-tuple of partitions.
///
/// The text form joins components with `|`, writes parts separated by commas
/// and an empty component as `-`, e.g. `-|2,1|1,1,1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::invalid("multipartition needs at least one component"));
        }
        Ok(Multipartition { components })
    }

    /// The empty multipartition with `r` components.
    pub fn empty(r: usize) -> Self {
        Multipartition {
            components: alloc::vec![Partition::empty(); r],
        }
    }

    /// Number of components.
    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, s: usize) -> &Partition {
        &self.components[s]
    }

    /// Total number of cells.
    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    /// All nodes in "above" order (component, then row).
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.components.iter().enumerate().flat_map(|(s, p)| {
            p.cells().map(move |(row, col)| Node { comp: s, row, col })
        })
    }

    pub fn with_node(&self, n: Node) -> Result<Self, Error> {
        let mut components = self.components.clone();
        components[n.comp] = components[n.comp].with_cell(n.row, n.col)?;
        Ok(Multipartition { components })
    }

    pub fn without_node(&self, n: Node) -> Result<Self, Error> {
        let mut components = self.components.clone();
        components[n.comp] = components[n.comp].without_cell(n.row, n.col)?;
        Ok(Multipartition { components })
    }

    pub fn replace_component(&self, s: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[s] = p;
        Multipartition { components }
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Multipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let components = s
            .split('|')
            .map(Partition::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        Multipartition::new(components)
    }
}

/// A node `(s, x, y)`: component `s`, row `x`, column `y` (all 0-based).
///
/// The derived order is the "above" order: nodes sort by component, then row,
/// so earlier means higher in the stacked Young diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Node {
    pub comp: usize,
    pub row: u32,
    pub col: u32,
}

/// Quantum characteristic plus multicharge.
///
/// `e = 0` means residues live in the integers (no reduction); otherwise
/// `e >= 2` and residues live in `{0, .., e-1}`. Charges are stored as
/// integers; for `e >= 2` they are kept reduced to `0..e`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multicharge {
    e: u32,
    charges: Vec<i64>,
}

impl Multicharge {
    pub fn new(e: u32, charges: Vec<i64>) -> Result<Self, Error> {
        if e == 1 {
            return Err(Error::invalid("quantum characteristic e must be 0 or >= 2"));
        }
        if charges.is_empty() {
            return Err(Error::invalid("multicharge needs at least one entry"));
        }
        let charges = if e == 0 {
            charges
        } else {
            charges.iter().map(|&a| a.rem_euclid(e as i64)).collect()
        };
        Ok(Multicharge { e, charges })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn r(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn charge(&self, s: usize) -> i64 {
        self.charges[s]
    }

    /// Reduce an integer to a residue: mod `e` for `e >= 2`, identity for `e = 0`.
    pub fn reduce(&self, x: i64) -> i64 {
        if self.e == 0 {
            x
        } else {
            x.rem_euclid(self.e as i64)
        }
    }

    /// Residue of a node: `a_s - row + col`.
    pub fn residue(&self, n: Node) -> i64 {
        self.reduce(self.charges[n.comp] - n.row as i64 + n.col as i64)
    }
}

/// Residue of a node under a multicharge.
pub fn residue(n: Node, mc: &Multicharge) -> i64 {
    mc.residue(n)
}

/// Residue content: how many nodes of each residue the multipartition has.
///
/// Returned as a sparse map residue -> count; residues with count zero are
/// absent.
pub fn residue_content(la: &Multipartition, mc: &Multicharge) -> Result<BTreeMap<i64, u64>, Error> {
    check_rank(la, mc)?;
    let mut content = BTreeMap::new();
    for n in la.nodes() {
        *content.entry(mc.residue(n)).or_insert(0u64) += 1;
    }
    Ok(content)
}

/// Removable nodes of residue `i`, listed in "above" order (highest first).
pub fn removable_nodes(la: &Multipartition, mc: &Multicharge, i: i64) -> Result<Vec<Node>, Error> {
    check_rank(la, mc)?;
    let mut out = Vec::new();
    for (s, p) in la.components().iter().enumerate() {
        for (row, col) in p.removable_cells() {
            let n = Node { comp: s, row, col };
            if mc.residue(n) == i {
                out.push(n);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Addable nodes of residue `i`, listed in "above" order (highest first).
pub fn addable_nodes(la: &Multipartition, mc: &Multicharge, i: i64) -> Result<Vec<Node>, Error> {
    check_rank(la, mc)?;
    let mut out = Vec::new();
    for (s, p) in la.components().iter().enumerate() {
        for (row, col) in p.addable_cells() {
            let n = Node { comp: s, row, col };
            if mc.residue(n) == i {
                out.push(n);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Dominance: `mu` dominates `la` iff for every component index `t` and row
/// count `z`, `|mu^(0)| + .. + |mu^(t-1)|` plus the first `z` parts of
/// `mu^(t)` is at least the same sum for `la`.
///
/// Requires equal rank and equal total size.
pub fn dominance_ge(mu: &Multipartition, la: &Multipartition) -> Result<bool, Error> {
    if mu.r() != la.r() {
        return Err(Error::invalid("dominance requires equal numbers of components"));
    }
    if mu.size() != la.size() {
        return Err(Error::invalid("dominance requires equal total size"));
    }
    Ok(dominance_key(mu)
        .zip(dominance_key(la))
        .all(|(a, b)| a >= b))
}

/// The doubly-indexed partial-sum sequence that linearizes dominance checks:
/// scanning components in order and, inside each component, prefix sums over
/// the first `1..=size+1` rows. Using `size + 1` rows makes keys of any two
/// multipartitions with equal rank and equal size align position-for-position
/// (prefix sums are constant beyond `size` rows). Comparing two such keys
/// pointwise decides dominance; comparing them lexicographically gives a
/// total order refining dominance (bigger = more dominant).
pub(crate) fn dominance_key(la: &Multipartition) -> impl Iterator<Item = u64> + '_ {
    let depth = la.size() as usize + 1;
    let mut acc = 0u64;
    la.components().iter().flat_map(move |p| {
        let before = acc;
        acc += p.size();
        (1..=depth).map(move |z| {
            let prefix: u64 = p.parts().iter().take(z).map(|&x| x as u64).sum();
            before + prefix
        })
    })
}

/// Total order refining dominance: most dominant first, ties broken by the
/// lexicographic comparison of the partial-sum key itself (which only happens
/// for dominance-incomparable labels).
pub fn dominance_sort_key(la: &Multipartition) -> Vec<u64> {
    dominance_key(la).collect()
}

fn check_rank(la: &Multipartition, mc: &Multicharge) -> Result<(), Error> {
    if la.r() != mc.r() {
        return Err(Error::invalid("multipartition and multicharge rank mismatch"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 1]).is_ok());
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap().rows(), 2);
    }

    #[test]
    fn text_roundtrip() {
        for s in ["-", "3,1", "-|2,1|1,1,1", "10,10,5"] {
            let la = mp(s);
            assert_eq!(alloc::format!("{la}"), s);
        }
        assert!("2,3".parse::<Multipartition>().is_err());
        assert!("1,x".parse::<Multipartition>().is_err());
    }

    #[test]
    fn residues_mod_e() {
        let mc = Multicharge::new(4, vec![0, 1, 2]).unwrap();
        // node (comp 1, row 2, col 0): 1 - 2 + 0 = -1 = 3 mod 4
        assert_eq!(mc.residue(Node { comp: 1, row: 2, col: 0 }), 3);
        let mc0 = Multicharge::new(0, vec![5]).unwrap();
        assert_eq!(mc0.residue(Node { comp: 0, row: 2, col: 0 }), 3);
    }

    #[test]
    fn addable_removable_orders() {
        let la = mp("2,1");
        let mc = Multicharge::new(2, vec![0]).unwrap();
        // residues: (0,0)->0 (0,1)->1 / (1,0)->1
        let rem1 = removable_nodes(&la, &mc, 1).unwrap();
        assert_eq!(
            rem1,
            vec![
                Node { comp: 0, row: 0, col: 1 },
                Node { comp: 0, row: 1, col: 0 }
            ]
        );
        let add0 = addable_nodes(&la, &mc, 0).unwrap();
        assert_eq!(
            add0,
            vec![
                Node { comp: 0, row: 1, col: 1 },
                Node { comp: 0, row: 2, col: 0 }
            ]
        );
    }

    #[test]
    fn dominance_basics() {
        // (1|2|1,1,1) dominates (-|2,1|1,1,1)
        assert!(dominance_ge(&mp("1|2|1,1,1"), &mp("-|2,1|1,1,1")).unwrap());
        assert!(!dominance_ge(&mp("-|2,1|1,1,1"), &mp("1|2|1,1,1")).unwrap());
        // incomparable pair
        let a = mp("1,1|2");
        let b = mp("2|1,1");
        assert!(dominance_ge(&b, &a).unwrap());
        assert!(!dominance_ge(&a, &b).unwrap());
        assert!(dominance_ge(&a, &a).unwrap());
        assert!(dominance_ge(&mp("3,1"), &mp("2,2")).unwrap());
        assert!(dominance_ge(&mp("2,2"), &mp("2,1,1")).unwrap());
        assert!(dominance_ge(&mp("4"), &mp("1,1,1,1")).unwrap());
        assert!(dominance_ge(&mp("3"), &mp("2,1|-")).is_err());
        assert!(dominance_ge(&mp("3"), &mp("2,2")).is_err());
    }
}
