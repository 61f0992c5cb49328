//! Two independent searches for the regular subgroups of `Hol(G)`.
//!
//! A regular subgroup `H` meets every fibre `{g} × Aut(G)` exactly once, so it
//! is the graph of a map `τ: G → Aut(G)` with `τ(e) = id`.
//! [`transversal_backtrack`] fills in `τ` one fibre at a time: it picks the
//! smallest group element whose fibre is still open, tries every automorphism
//! there, and propagates by closing the partial graph under multiplication. A
//! product landing on an already-assigned fibre with a different automorphism
//! kills the branch. Since the open fibre and its value are forced by `H`, each
//! regular subgroup is reached along exactly one path.
//!
//! [`closure_join`] instead grows the lattice of semiregular subgroups
//! breadth-first, joining each one with every single element and keeping the
//! joins that stay semiregular. It is slower and only used as a cross-check.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::holomorph::HolTable;

const OPEN: u32 = u32::MAX;

/// A partially assigned transversal: the subgroup generated so far.
#[derive(Clone)]
struct Partial {
    /// `tau[g]` is the automorphism index paired with group code `g`, or `OPEN`.
    tau: Vec<u32>,
    /// Holomorph indices of the members, in discovery order.
    members: Vec<u32>,
    gens: Vec<u32>,
}

impl Partial {
    fn trivial(table: &HolTable) -> Self {
        let mut tau = vec![OPEN; table.group_order()];
        tau[0] = table.identity_aut();
        Self {
            tau,
            members: vec![table.identity()],
            gens: Vec::new(),
        }
    }

    fn first_open(&self) -> Option<u32> {
        self.tau.iter().position(|&f| f == OPEN).map(|g| g as u32)
    }

    /// Closes `self ∪ {x}` under right multiplication by the generators.
    /// Returns `None` as soon as two members share a fibre.
    fn extend(&self, table: &HolTable, x: u32) -> Option<Self> {
        let mut next = self.clone();
        next.gens.push(x);
        let mut cursor = 0;
        while cursor < next.members.len() {
            let m = next.members[cursor];
            for gi in 0..next.gens.len() {
                let y = table.mul(m, next.gens[gi]);
                let (g, f) = (table.g_of(y) as usize, table.f_of(y));
                match next.tau[g] {
                    OPEN => {
                        next.tau[g] = f;
                        next.members.push(y);
                    }
                    assigned if assigned == f => {}
                    _ => return None,
                }
            }
            cursor += 1;
        }
        Some(next)
    }

    fn signature(&self) -> Vec<u32> {
        let mut sig = self.members.clone();
        sig.sort_unstable();
        sig
    }
}

fn backtrack(table: &HolTable, partial: &Partial, out: &mut Vec<Vec<u32>>) {
    let Some(g) = partial.first_open() else {
        out.push(partial.signature());
        return;
    };
    for f in 0..table.aut_count() as u32 {
        if let Some(next) = partial.extend(table, table.pack(g, f)) {
            backtrack(table, &next, out);
        }
    }
}

/// Sorted signatures (sorted holomorph indices) of all regular subgroups.
pub fn transversal_backtrack(table: &HolTable) -> Vec<Vec<u32>> {
    let root = Partial::trivial(table);
    let mut found: Vec<Vec<u32>> = match root.first_open() {
        None => vec![root.signature()],
        Some(g) => (0..table.aut_count() as u32)
            .into_par_iter()
            .flat_map_iter(|f| {
                let mut out = Vec::new();
                if let Some(next) = root.extend(table, table.pack(g, f)) {
                    backtrack(table, &next, &mut out);
                }
                out
            })
            .collect(),
    };
    found.sort_unstable();
    found
}

/// Breadth-first join of semiregular subgroups; returns the same set as
/// [`transversal_backtrack`].
pub fn closure_join(table: &HolTable) -> Vec<Vec<u32>> {
    let order = table.group_order();
    let root = Partial::trivial(table);
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut frontier = vec![root];
    let mut regular = BTreeSet::new();
    if order == 1 {
        regular.insert(frontier[0].signature());
    }
    while !frontier.is_empty() {
        let next: Vec<Partial> = frontier
            .par_iter()
            .flat_map_iter(|k| {
                (0..table.size() as u32)
                    .filter(|&x| k.tau[table.g_of(x) as usize] == OPEN)
                    .filter_map(|x| k.extend(table, x))
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = Vec::new();
        for p in next {
            let sig = p.signature();
            if seen.insert(sig.clone()) {
                if sig.len() == order {
                    regular.insert(sig);
                } else {
                    frontier.push(p);
                }
            }
        }
    }
    regular.into_iter().collect()
}

/// Closure of a generating set; `None` if the result is not semiregular.
pub fn semiregular_closure(table: &HolTable, gens: &[u32]) -> Option<Vec<u32>> {
    let mut partial = Partial::trivial(table);
    for &x in gens {
        partial = partial.extend(table, x)?;
    }
    Some(partial.signature())
}
