//! Unsigned interreduction and the toppling-driven standard basis algorithm.

use std::collections::VecDeque;

use serde::Serialize;

use crate::algebra::{BasicAlgebra, Mono};
use crate::module::{act_mono, ModuleElement};
use crate::reduction::{normal_form, normal_form_indexed, LmIndex};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BuchbergerStats {
    /// Toppling pairs whose product was reduced.
    pub processed: usize,
    pub zero_reductions: usize,
    /// Pairs dropped because their element was replaced.
    pub stale: usize,
    pub basis_size: usize,
}

/// Replaces each element by its normal form modulo the others until no
/// element is reducible by another; zero normal forms are dropped.
pub fn interreduce(alg: &BasicAlgebra, elements: &[ModuleElement]) -> Vec<ModuleElement> {
    let mut g: Vec<ModuleElement> = elements.iter().filter(|e| !e.is_zero()).cloned().collect();
    interreduce_tracked(alg, &mut g);
    g
}

/// In-place interreduction; returns the positions (in the final list) of
/// elements that changed.
fn interreduce_tracked(alg: &BasicAlgebra, g: &mut Vec<ModuleElement>) -> Vec<bool> {
    let mut changed = vec![false; g.len()];
    loop {
        let mut progress = false;
        let mut i = 0;
        while i < g.len() {
            let others: Vec<ModuleElement> = g.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, e)| e.clone()).collect();
            let (nf, rep) = normal_form(alg, &g[i], &others);
            if rep.steps.is_empty() {
                i += 1;
                continue;
            }
            progress = true;
            if nf.is_zero() {
                g.remove(i);
                changed.remove(i);
            } else {
                g[i] = nf;
                changed[i] = true;
                i += 1;
            }
        }
        if !progress {
            return changed;
        }
    }
}

/// Standard basis of the submodule generated by `gens`: reduce every
/// minimal toppling `g * c` and adjoin nonzero normal forms.
pub fn buchberger_stdbasis(alg: &BasicAlgebra, gens: &[ModuleElement]) -> (Vec<ModuleElement>, BuchbergerStats) {
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<ModuleElement> = gens.iter().filter(|e| !e.is_zero()).cloned().collect();
    interreduce_tracked(alg, &mut basis);
    // ids survive unchanged elements; a pair on a replaced id is stale
    let mut next_id = 0usize;
    let mut ids: Vec<usize> = basis.iter().map(|_| fresh(&mut next_id)).collect();
    let mut queue: VecDeque<(usize, Mono)> = VecDeque::new();
    for (k, g) in basis.iter().enumerate() {
        seed(alg, g, ids[k], &mut queue);
    }
    loop {
        while let Some((id, c)) = queue.pop_front() {
            let Some(pos) = ids.iter().position(|&x| x == id) else {
                stats.stale += 1;
                continue;
            };
            stats.processed += 1;
            let prod = act_mono(alg, &basis[pos], c);
            let index = LmIndex::new(&basis);
            let (nf, _) = normal_form_indexed(alg, &prod, &basis, &index);
            if nf.is_zero() {
                stats.zero_reductions += 1;
                continue;
            }
            basis.push(nf);
            ids.push(usize::MAX);
            let snapshot: Vec<ModuleElement> = basis.clone();
            let changed = interreduce_tracked(alg, &mut basis);
            // match survivors back to their old ids
            let mut new_ids = Vec::with_capacity(basis.len());
            for (k, g) in basis.iter().enumerate() {
                let old = if changed[k] { None } else { snapshot.iter().position(|s| s == g).map(|p| ids[p]) };
                match old {
                    Some(id) if id != usize::MAX => new_ids.push(id),
                    _ => {
                        let id = fresh(&mut next_id);
                        seed(alg, g, id, &mut queue);
                        new_ids.push(id);
                    }
                }
            }
            ids = new_ids;
        }
        // final sweep: every minimal toppling must reduce to zero
        let index = LmIndex::new(&basis);
        let mut missing = false;
        for (k, g) in basis.iter().enumerate() {
            for (c, _) in alg.minimal_topplings(g.lm().unwrap().mono) {
                if !normal_form_indexed(alg, &act_mono(alg, g, c), &basis, &index).0.is_zero() {
                    queue.push_back((ids[k], c));
                    missing = true;
                }
            }
        }
        if !missing {
            break;
        }
    }
    stats.basis_size = basis.len();
    (basis, stats)
}

fn fresh(next: &mut usize) -> usize {
    *next += 1;
    *next - 1
}

fn seed(alg: &BasicAlgebra, g: &ModuleElement, id: usize, queue: &mut VecDeque<(usize, Mono)>) {
    let lm = g.lm().expect("basis elements are nonzero");
    for (c, _) in alg.minimal_topplings(lm.mono) {
        queue.push_back((id, c));
    }
}

/// Property (T): every minimal toppling of every leading monomial reduces
/// to zero.
pub fn has_property_t(alg: &BasicAlgebra, basis: &[ModuleElement]) -> bool {
    let index = LmIndex::new(basis);
    basis.iter().all(|g| {
        alg.minimal_topplings(g.lm().unwrap().mono)
            .into_iter()
            .all(|(c, _)| normal_form_indexed(alg, &act_mono(alg, g, c), basis, &index).0.is_zero())
    })
}
