//! Normal and good nodes, Kleshchev multipartitions, and the induction
//! degree statistic.
//!
//! A removable node of residue `i` is *normal* if for every addable `i`-node
//! strictly below it there are strictly more removable than addable `i`-nodes
//! between the two; the *good* `i`-node is the highest normal one. A
//! multipartition is Kleshchev when it can be emptied by repeatedly removing
//! good nodes (of any residue at each step).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::partition::{addable_nodes, removable_nodes, Multicharge, Multipartition, Node};

/// All normal `i`-nodes, highest first.
///
/// Computed by the usual matching scan: walk the removable and addable
/// `i`-nodes from top to bottom; each addable node cancels the nearest
/// uncancelled removable node above it, and the survivors are the normal
/// nodes.
pub fn normal_nodes(la: &Multipartition, mc: &Multicharge, i: i64) -> Result<Vec<Node>, Error> {
    let rem = removable_nodes(la, mc, i)?;
    let add = addable_nodes(la, mc, i)?;
    let mut merged: Vec<(Node, bool)> = rem
        .into_iter()
        .map(|n| (n, true))
        .chain(add.into_iter().map(|n| (n, false)))
        .collect();
    merged.sort();
    let mut stack: Vec<Node> = Vec::new();
    for (n, is_removable) in merged {
        if is_removable {
            stack.push(n);
        } else {
            stack.pop();
        }
    }
    Ok(stack)
}

/// The good `i`-node: the highest normal `i`-node, if any.
pub fn good_node(la: &Multipartition, mc: &Multicharge, i: i64) -> Result<Option<Node>, Error> {
    Ok(normal_nodes(la, mc, i)?.first().copied())
}

/// Whether `la` is a Kleshchev multipartition for `mc`.
///
/// Memoized depth-first search over the residues offering a good node; the
/// cache lives for the duration of one call, so the function is re-entrant
/// and thread-safe.
pub fn is_kleshchev(la: &Multipartition, mc: &Multicharge) -> Result<bool, Error> {
    if la.r() != mc.r() {
        return Err(Error::invalid("multipartition and multicharge rank mismatch"));
    }
    let mut memo = BTreeMap::new();
    kleshchev_rec(la, mc, &mut memo)
}

fn kleshchev_rec(
    la: &Multipartition,
    mc: &Multicharge,
    memo: &mut BTreeMap<Multipartition, bool>,
) -> Result<bool, Error> {
    if la.size() == 0 {
        return Ok(true);
    }
    if let Some(&hit) = memo.get(la) {
        return Ok(hit);
    }
    // Candidate residues are those of removable nodes.
    let mut residues: Vec<i64> = Vec::new();
    for (s, p) in la.components().iter().enumerate() {
        for (row, col) in p.removable_cells() {
            let i = mc.residue(Node { comp: s, row, col });
            if !residues.contains(&i) {
                residues.push(i);
            }
        }
    }
    let mut ok = false;
    for i in residues {
        if let Some(g) = good_node(la, mc, i)? {
            if kleshchev_rec(&la.without_node(g)?, mc, memo)? {
                ok = true;
                break;
            }
        }
    }
    memo.insert(la.clone(), ok);
    Ok(ok)
}

/// Degree statistic for a simultaneous addition of `i`-nodes.
///
/// For `sigma` contained in `la` with `la \ sigma` a nonempty set of
/// residue-`i` nodes, returns the sum over the added nodes `g` of
/// (addable `i`-nodes of `la` strictly below `g`) minus (removable `i`-nodes
/// of `sigma` strictly below `g`).
pub fn n_statistic(
    sigma: &Multipartition,
    la: &Multipartition,
    mc: &Multicharge,
    i: i64,
) -> Result<i64, Error> {
    if sigma.r() != la.r() || la.r() != mc.r() {
        return Err(Error::invalid("rank mismatch"));
    }
    let mut added: Vec<Node> = Vec::new();
    for (s, (ps, pl)) in sigma.components().iter().zip(la.components()).enumerate() {
        for r in 0..pl.rows() {
            if ps.part(r) > pl.part(r) {
                return Err(Error::invalid("sigma is not contained in la"));
            }
            for c in ps.part(r)..pl.part(r) {
                added.push(Node { comp: s, row: r as u32, col: c });
            }
        }
    }
    if added.is_empty() {
        return Err(Error::invalid("la must strictly contain sigma"));
    }
    if added.iter().any(|&n| mc.residue(n) != i) {
        return Err(Error::invalid("added nodes must all have the given residue"));
    }
    let add_la = addable_nodes(la, mc, i)?;
    let rem_sigma = removable_nodes(sigma, mc, i)?;
    let mut total = 0i64;
    for &g in &added {
        total += add_la.iter().filter(|&&b| g < b).count() as i64;
        total -= rem_sigma.iter().filter(|&&b| g < b).count() as i64;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn level_one_restricted() {
        // For r = 1 the Kleshchev partitions are the e-restricted ones:
        // successive part differences < e.
        let mc = Multicharge::new(3, vec![0]).unwrap();
        assert!(is_kleshchev(&mp("2,2,1"), &mc).unwrap());
        assert!(!is_kleshchev(&mp("4,1"), &mc).unwrap());
        assert!(!is_kleshchev(&mp("3"), &mc).unwrap());
        assert!(is_kleshchev(&mp("2,1"), &mc).unwrap());
    }

    #[test]
    fn good_node_basic() {
        let mc = Multicharge::new(2, vec![0]).unwrap();
        let la = mp("2,1");
        // i = 1: removable (0,1) and (1,0), no addable 1-nodes; both normal.
        let ns = normal_nodes(&la, &mc, 1).unwrap();
        assert_eq!(ns.len(), 2);
        assert_eq!(
            good_node(&la, &mc, 1).unwrap(),
            Some(Node { comp: 0, row: 0, col: 1 })
        );
        // i = 0: no removable 0-nodes.
        assert_eq!(good_node(&la, &mc, 0).unwrap(), None);
    }

    #[test]
    fn n_statistic_contract() {
        let mc = Multicharge::new(2, vec![0]).unwrap();
        assert!(n_statistic(&mp("2,1"), &mp("2,1"), &mc, 0).is_err());
        assert!(n_statistic(&mp("2,1"), &mp("2,2"), &mc, 1).is_err()); // residue is 0
        assert!(n_statistic(&mp("2,1"), &mp("2,2"), &mc, 0).is_ok());
    }
}
