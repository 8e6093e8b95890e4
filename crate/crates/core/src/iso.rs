//! Canonical forms for small graphs.
//!
//! Individualization-refinement canonicalizer: iterated color refinement by
//! neighbor-color multisets, branching on the first non-singleton cell, and
//! taking the lexicographically smallest adjacency encoding over all leaves.
//! Inputs here are tiny (well under the 64-vertex cap), so no sophisticated
//! pruning is needed.

use crate::tritree::Adjacency;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest graph the canonicalizer accepts.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("graph with {0} vertices exceeds the {MAX_VERTICES}-vertex cap")]
    TooLarge(usize),
    #[error("color vector length {got} does not match vertex count {n}")]
    BadColoring { got: usize, n: usize },
}

/// Platform-stable canonical byte string; equal iff the inputs are
/// isomorphic (respecting the initial coloring, for the colored forms).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Canonical form under all isomorphisms.
pub fn canonical_form(adj: &Adjacency) -> Result<CanonicalForm, IsoError> {
    canonical_form_colored(adj, &vec![0; adj.len()])
}

/// Canonical form under isomorphisms fixing each pinned vertex individually.
pub fn canonical_form_rooted(adj: &Adjacency, pinned: [usize; 3]) -> Result<CanonicalForm, IsoError> {
    let mut colors = vec![0u32; adj.len()];
    for (i, &v) in pinned.iter().enumerate() {
        colors[v] = i as u32 + 1;
    }
    canonical_form_colored(adj, &colors)
}

/// Canonical form under isomorphisms preserving the given vertex colors.
pub fn canonical_form_colored(adj: &Adjacency, colors: &[u32]) -> Result<CanonicalForm, IsoError> {
    let n = adj.len();
    if n > MAX_VERTICES {
        return Err(IsoError::TooLarge(n));
    }
    if colors.len() != n {
        return Err(IsoError::BadColoring {
            got: colors.len(),
            n,
        });
    }
    if n == 0 {
        return Ok(CanonicalForm(vec![0]));
    }
    let mut best: Option<Vec<u8>> = None;
    search(adj, colors.to_vec(), &mut best);
    Ok(CanonicalForm(best.expect("at least one leaf")))
}

/// Class-size histogram over canonical forms.
pub fn iso_histogram<I>(graphs: I) -> Result<BTreeMap<CanonicalForm, u64>, IsoError>
where
    I: IntoIterator<Item = Adjacency>,
{
    let mut hist = BTreeMap::new();
    for g in graphs {
        let form = canonical_form(&g)?;
        *hist.entry(form).or_insert(0) += 1;
    }
    Ok(hist)
}

fn search(adj: &Adjacency, mut colors: Vec<u32>, best: &mut Option<Vec<u8>>) {
    refine(adj, &mut colors);
    match first_non_singleton_cell(&colors) {
        None => {
            let bytes = encode(adj, &colors);
            if best.as_ref().map_or(true, |b| bytes < *b) {
                *best = Some(bytes);
            }
        }
        Some(cell_color) => {
            // Individualize each member of the cell in turn: double all
            // colors to make room, then pull the chosen vertex just below
            // its cellmates. Order-preserving, so refinement stays stable.
            for v in 0..adj.len() {
                if colors[v] != cell_color {
                    continue;
                }
                let mut child: Vec<u32> = colors.iter().map(|&c| 2 * c + 1).collect();
                child[v] = 2 * cell_color;
                search(adj, child, best);
            }
        }
    }
}

/// Iterated refinement: recolor every vertex by (color, sorted neighbor
/// colors) until the partition stops splitting. New colors are assigned in
/// sorted-signature order, so the result is independent of vertex ids.
fn refine(adj: &Adjacency, colors: &mut Vec<u32>) {
    let n = adj.len();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut nb: Vec<u32> = adj[v].iter().map(|&u| colors[u]).collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb));
        }
        let mut distinct: Vec<&(u32, Vec<u32>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let index: std::collections::HashMap<&(u32, Vec<u32>), u32> = distinct
            .iter()
            .enumerate()
            .map(|(i, s)| (*s, i as u32))
            .collect();
        let next: Vec<u32> = sigs.iter().map(|s| index[s]).collect();
        let old_classes = count_classes(colors);
        let new_classes = distinct.len();
        *colors = next;
        if new_classes == old_classes {
            return;
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut cs: Vec<u32> = colors.to_vec();
    cs.sort_unstable();
    cs.dedup();
    cs.len()
}

fn first_non_singleton_cell(colors: &[u32]) -> Option<u32> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in colors {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts.into_iter().find(|&(_, k)| k > 1).map(|(c, _)| c)
}

/// Adjacency bits of the discretely-colored graph, vertices ordered by
/// color: vertex count, then the upper triangle packed row-major.
fn encode(adj: &Adjacency, colors: &[u32]) -> Vec<u8> {
    let n = adj.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colors[v]);
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut nbits = 0;
    for i in 0..n {
        for j in i + 1..n {
            let bit = u8::from(adj[order[i]].contains(&order[j]));
            acc = (acc << 1) | bit;
            nbits += 1;
            if nbits == 8 {
                bytes.push(acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(acc << (8 - nbits));
    }
    bytes
}
