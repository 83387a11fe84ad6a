//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lieword::RauzyGraph;

/// Every directed cycle without repeated vertices, as the vertex sequence
/// rotated to start at its smallest vertex. Plain DFS, no pruning.
pub fn brute_force_cycles(g: &RauzyGraph) -> BTreeSet<Vec<usize>> {
    fn dfs(g: &RauzyGraph, start: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let v = *path.last().unwrap();
        for &w in g.successors(v) {
            if w == start {
                out.insert(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                dfs(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.vertices().len() {
        dfs(g, s, &mut vec![s], &mut out);
    }
    out
}

/// All rotations of `u`.
pub fn rotations(u: &[u8]) -> Vec<Vec<u8>> {
    if u.is_empty() {
        return vec![Vec::new()];
    }
    (0..u.len()).map(|k| [&u[k..], &u[..k]].concat()).collect()
}

/// Distinct length-`n` windows of `w`.
pub fn windows(w: &[u8], n: usize) -> BTreeSet<Vec<u8>> {
    if n > w.len() {
        return BTreeSet::new();
    }
    w.windows(n).map(<[u8]>::to_vec).collect()
}

/// Not a proper power, by trying every shorter root.
pub fn primitive(u: &[u8]) -> bool {
    !u.is_empty()
        && (1..u.len()).all(|d| !u.len().is_multiple_of(d) || u.chunks(d).any(|c| c != &u[..d]))
}

/// `L_w(n)` over a finite word by comparing rotation sets.
pub fn lie_oracle(w: &[u8], n: usize) -> usize {
    let f = windows(w, n);
    let classes: BTreeSet<Vec<u8>> = f
        .iter()
        .filter(|u| rotations(u).iter().all(|r| f.contains(r)))
        .map(|u| rotations(u).into_iter().min().unwrap())
        .collect();
    if n == 0 {
        1
    } else {
        classes.len()
    }
}

/// `pL(0..=|w|)` straight from the definition.
pub fn prefix_lie_oracle(w: &[u8]) -> Vec<usize> {
    (0..=w.len())
        .map(|i| {
            let p = &w[..i];
            1 + (1..=i)
                .map(|n| if n == 0 { 0 } else { lie_oracle(p, n) })
                .sum::<usize>()
        })
        .collect()
}
