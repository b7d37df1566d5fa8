use std::collections::VecDeque;

use super::{CayleyGroup, TableMorphism};

/// A small generating set, chosen greedily from elements of large order.
pub fn generators(g: &CayleyGroup) -> Vec<usize> {
    let mut candidates: Vec<usize> = (1..g.order()).collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = g.closure(&[]);
    for x in candidates {
        if !span.contains(x) {
            gens.push(x);
            span = g.closure(&gens);
        }
    }
    gens
}

/// Extends `images` over the subgroup generated by the first `k` generators.
/// Returns false on an inconsistency.
fn propagate(
    source: &CayleyGroup,
    target: &CayleyGroup,
    gens: &[usize],
    gen_images: &[usize],
    images: &mut [usize],
) -> bool {
    images.fill(usize::MAX);
    images[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&g, &y) in gens.iter().zip(gen_images) {
            let xg = source.mul(x, g);
            let img = target.mul(images[x], y);
            if images[xg] == usize::MAX {
                images[xg] = img;
                queue.push_back(xg);
            } else if images[xg] != img {
                return false;
            }
        }
    }
    true
}

/// Every homomorphism `source → target`, by backtracking over generator
/// images with order-divisibility and partial-consistency pruning.
pub fn all_homomorphisms(source: &CayleyGroup, target: &CayleyGroup) -> Vec<TableMorphism> {
    let gens = generators(source);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = source.element_order(g);
            (0..target.order())
                .filter(|&y| k.is_multiple_of(target.element_order(y)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gens.len());
    let mut scratch = vec![0usize; source.order()];
    search(source, target, &gens, &candidates, &mut chosen, &mut scratch, &mut out);
    out
}

fn search(
    source: &CayleyGroup,
    target: &CayleyGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    scratch: &mut [usize],
    out: &mut Vec<TableMorphism>,
) {
    let depth = chosen.len();
    if depth == gens.len() {
        propagate(source, target, gens, chosen, scratch);
        out.push(TableMorphism::new_unchecked(source, target, scratch.to_vec()));
        return;
    }
    for &y in &candidates[depth] {
        chosen.push(y);
        if propagate(source, target, &gens[..=depth], chosen, scratch) {
            search(source, target, gens, candidates, chosen, scratch, out);
        }
        chosen.pop();
    }
}
