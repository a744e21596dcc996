//! Brute-force helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use rand::{seq::SliceRandom, Rng};
use tcc_core::monomial::all_monomial_maps;
use tcc_core::{Gf3Vector, LinearCode, MonomialMap, Packed};

/// Sorted codeword list: a complete invariant of the row space.
pub fn key(words: &[Packed]) -> Vec<Packed> {
    let mut w = words.to_vec();
    w.sort_unstable();
    w
}

/// All `[n, k]` codes, each once.
pub fn all_codes(n: usize, k: usize) -> Vec<LinearCode> {
    let total = 3usize.pow(n as u32);
    let vecs: Vec<Gf3Vector> = (1..total)
        .map(|mut x| {
            let mut d = vec![0u8; n];
            for j in (0..n).rev() {
                d[j] = (x % 3) as u8;
                x /= 3;
            }
            Gf3Vector::from_values(&d)
        })
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, Vec<Gf3Vector>)> = vec![(0, vec![])];
    while let Some((start, rows)) = stack.pop() {
        if rows.len() == k {
            let c = LinearCode::from_generators(rows).unwrap();
            if c.dimension() == k && seen.insert(key(&c.packed_codewords())) {
                out.push(c);
            }
            continue;
        }
        for i in start..vecs.len() {
            let mut r = rows.clone();
            r.push(vecs[i].clone());
            stack.push((i + 1, r));
        }
    }
    out
}

pub struct BruteForce {
    pub class_of: Vec<usize>,
    pub aut_order: Vec<u64>,
}

pub fn brute_force(codes: &[LinearCode]) -> BruteForce {
    let n = codes[0].len();
    let maps = all_monomial_maps(n);
    let index: HashMap<Vec<Packed>, usize> = codes
        .iter()
        .enumerate()
        .map(|(i, c)| (key(&c.packed_codewords()), i))
        .collect();
    let mut class_of = vec![usize::MAX; codes.len()];
    let mut aut_order = vec![0u64; codes.len()];
    let mut next = 0;
    for (i, c) in codes.iter().enumerate() {
        let words = c.packed_codewords();
        let own = key(&words);
        for m in &maps {
            let img: Vec<Packed> = words.iter().map(|&w| m.apply_packed(w)).collect();
            let k = key(&img);
            if k == own {
                aut_order[i] += 1;
            }
        }
        if class_of[i] == usize::MAX {
            for m in &maps {
                let img: Vec<Packed> = words.iter().map(|&w| m.apply_packed(w)).collect();
                class_of[index[&key(&img)]] = next;
            }
            next += 1;
        }
    }
    BruteForce {
        class_of,
        aut_order,
    }
}

pub fn random_map(n: usize, rng: &mut impl Rng) -> MonomialMap {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    perm.shuffle(rng);
    MonomialMap::new(perm, (0..n).map(|_| rng.gen_bool(0.5)).collect()).unwrap()
}

pub fn random_code(n: usize, k: usize, rng: &mut impl Rng) -> LinearCode {
    loop {
        let rows = (0..k)
            .map(|_| Gf3Vector::from_values(&(0..n).map(|_| rng.gen_range(0..3)).collect::<Vec<u8>>()))
            .collect();
        let c = LinearCode::from_generators(rows).unwrap();
        if c.dimension() == k {
            return c;
        }
    }
}
