//! Monomial equivalence of ternary codes through the digraph `Γ(C)`.
//!
//! `Γ(C)` has one vertex per nonzero codeword and one per *symbol* `(j, s)`,
//! `j` a coordinate and `s ∈ {1, 2}`. Each codeword points at the symbols
//! `(j, c_j)` of its nonzero entries, and the two symbols of a coordinate
//! point at each other. Two codes are monomially equivalent exactly when
//! their digraphs are isomorphic, so a canonical form of `Γ(C)` decides
//! equivalence by byte comparison.
//!
//! The canonical form is computed by individualization–refinement:
//!
//! * refinement is colour refinement over both arc directions; colours are
//!   64-bit hashes of the neighbourhood colour multisets, so every decision
//!   depends only on isomorphism-invariant data;
//! * only symbol vertices are individualized. Once every symbol has its own
//!   colour the labelling of the symbols determines the whole graph, since
//!   a codeword vertex is identified by its out-neighbourhood;
//! * the leaf certificate is the twin pairing of the labelled symbols
//!   followed by the sorted out-neighbourhood bitmaps of the codewords;
//! * the search keeps nauty's first-path / best-path bookkeeping, prunes
//!   with the automorphisms it discovers and returns those automorphisms as
//!   a generating set of `Aut(Γ(C))`.
//!
//! Symbol `(j, s)` is numbered `2j + (s - 1)`, so a permutation of symbols
//! that keeps each pair `{2j, 2j+1}` together is a monomial map.

use std::cmp::Ordering;
use std::fmt;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::Packed;
use crate::monomial::MonomialMap;
use crate::perm_group::{Perm, StabilizerChain};

/// Upper bound on group sizes that are enumerated element by element.
pub const ENUMERATION_CAP: u64 = 1_000_000;

const CERT_VERSION: u8 = 1;

/// The digraph `Γ(C)`. Vertices `0..2n` are symbols, vertices
/// `2n..2n + N` are the nonzero codewords in the stored order.
#[derive(Clone, Debug)]
pub struct CodeDigraph {
    n: usize,
    codewords: Vec<Packed>,
}

impl CodeDigraph {
    pub fn from_code(c: &LinearCode) -> Self {
        Self::from_codewords(c.len(), c.packed_codewords())
    }

    /// Zero vectors in `words` are skipped.
    pub fn from_codewords(n: usize, words: impl IntoIterator<Item = Packed>) -> Self {
        CodeDigraph {
            n,
            codewords: words.into_iter().filter(|w| !w.is_zero()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.codewords.is_empty()
    }

    pub fn codewords(&self) -> &[Packed] {
        &self.codewords
    }

    pub fn symbol_count(&self) -> usize {
        2 * self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.codewords.len() + 2 * self.n
    }

    pub fn out_degree(&self, v: usize) -> usize {
        if v < 2 * self.n {
            1
        } else {
            self.codewords[v - 2 * self.n].weight() as usize
        }
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let base = 2 * self.n;
        let mut arcs: Vec<(usize, usize)> = (0..base).map(|s| (s, s ^ 1)).collect();
        for (i, c) in self.codewords.iter().enumerate() {
            for j in 0..self.n {
                match c.get(j).value() {
                    1 => arcs.push((base + i, 2 * j)),
                    2 => arcs.push((base + i, 2 * j + 1)),
                    _ => {}
                }
            }
        }
        arcs
    }

    pub fn arc_count(&self) -> usize {
        2 * self.n + self.codewords.iter().map(|c| c.weight() as usize).sum::<usize>()
    }

    /// Reorders the codeword vertices; the result is isomorphic to `self`.
    pub fn with_codeword_order(&self, order: &[usize]) -> Self {
        CodeDigraph {
            n: self.n,
            codewords: order.iter().map(|&i| self.codewords[i]).collect(),
        }
    }
}

/// The digraph of a code.
pub fn gamma(c: &LinearCode) -> CodeDigraph {
    CodeDigraph::from_code(c)
}

/// Canonical byte string of an isomorphism class of code digraphs.
///
/// Layout: version byte, `n`, number of codeword vertices (little-endian
/// `u16`), the canonical label of each symbol's twin (`2n` bytes), then the
/// out-neighbourhood bitmap of every codeword vertex in canonical labels,
/// sorted ascending, each in `ceil(2n / 8)` little-endian bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let bytes = hex::decode(s).map_err(|e| Error::Usage(format!("bad certificate hex: {e}")))?;
        if bytes.first() != Some(&CERT_VERSION) {
            return Err(Error::Usage("unknown certificate version".into()));
        }
        Ok(CanonicalCert(bytes))
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = self.to_hex();
        write!(f, "CanonicalCert({}…)", &h[..h.len().min(24)])
    }
}

/// Result of a canonical-labelling search.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub cert: CanonicalCert,
    /// Canonical label of every symbol vertex.
    pub labeling: Vec<u8>,
    /// Automorphisms found during the search, as permutations of symbols.
    /// Together they generate the full automorphism group.
    pub generators: Vec<Perm>,
}

impl CanonicalForm {
    /// Symbol map carrying this digraph onto `other`, when the certificates agree.
    pub fn isomorphism_to(&self, other: &CanonicalForm) -> Option<Perm> {
        if self.cert != other.cert {
            return None;
        }
        let mut inv = vec![0u8; other.labeling.len()];
        for (v, &l) in other.labeling.iter().enumerate() {
            inv[l as usize] = v as u8;
        }
        Some(Perm(self.labeling.iter().map(|&l| inv[l as usize]).collect()))
    }
}

#[inline]
fn mix(mut x: u64) -> u64 {
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^= x >> 27;
    x = x.wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

const SYMBOL_SEED: u64 = 0x5eed_0000_0000_0001;
const CODEWORD_SEED: u64 = 0x5eed_0000_0000_0002;
const INDIVIDUALIZE: u64 = 0x1d1d_1d1d_0000_0000;

struct Leaf {
    invariants: Vec<u64>,
    path: Vec<u8>,
    /// Twin labels followed by sorted codeword bitmaps.
    cert: Vec<u32>,
    labeling: Vec<u8>,
}

/// Reusable workspace for canonical labelling; one per worker thread.
#[derive(Default)]
pub struct Canonicalizer {
    n: usize,
    nv: usize,
    ncw: usize,
    cw_off: Vec<u32>,
    cw_adj: Vec<u8>,
    sym_off: Vec<u32>,
    sym_adj: Vec<u16>,
    weights: Vec<u8>,
    // colour stacks, one slice per search level
    sym_col: Vec<u64>,
    cw_col: Vec<u64>,
    // scratch
    mixed_sym: Vec<u64>,
    mixed_cw: Vec<u64>,
    new_sym: Vec<u64>,
    // search state
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Perm>,
    cur_invariants: Vec<u64>,
    cur_path: Vec<u8>,
    nodes: u64,
}

impl Canonicalizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Search-tree nodes visited by the most recent call.
    pub fn last_node_count(&self) -> u64 {
        self.nodes
    }

    pub fn canonical_form(&mut self, d: &CodeDigraph) -> CanonicalForm {
        self.load(d.n, &d.codewords);
        self.run()
    }

    /// Canonical form of the code spanned by `words` (zero vectors ignored).
    pub fn canonical_form_of_words(&mut self, n: usize, words: &[Packed]) -> CanonicalForm {
        self.load(n, words);
        self.run()
    }

    pub fn cert(&mut self, d: &CodeDigraph) -> CanonicalCert {
        self.canonical_form(d).cert
    }

    fn load(&mut self, n: usize, words: &[Packed]) {
        assert!(n >= 1 && 2 * n <= 32, "unsupported length {n}");
        self.n = n;
        self.nv = 2 * n;
        self.cw_off.clear();
        self.cw_adj.clear();
        self.weights.clear();
        let mut sym_deg = [0u32; 32];
        self.cw_off.push(0);
        for w in words.iter().filter(|w| !w.is_zero()) {
            let mut sup = w.support();
            while sup != 0 {
                let j = sup.trailing_zeros();
                let s = (2 * j + ((w.twos >> j) & 1)) as u8;
                self.cw_adj.push(s);
                sym_deg[s as usize] += 1;
                sup &= sup - 1;
            }
            self.cw_off.push(self.cw_adj.len() as u32);
            self.weights.push(w.weight() as u8);
        }
        self.ncw = self.weights.len();
        self.sym_off.clear();
        let mut acc = 0;
        for &d in &sym_deg[..self.nv] {
            self.sym_off.push(acc);
            acc += d;
        }
        self.sym_off.push(acc);
        self.sym_adj.clear();
        self.sym_adj.resize(acc as usize, 0);
        let mut fill: Vec<u32> = self.sym_off[..self.nv].to_vec();
        for c in 0..self.ncw {
            for &s in &self.cw_adj[self.cw_off[c] as usize..self.cw_off[c + 1] as usize] {
                self.sym_adj[fill[s as usize] as usize] = c as u16;
                fill[s as usize] += 1;
            }
        }
    }

    fn run(&mut self) -> CanonicalForm {
        let (nv, ncw) = (self.nv, self.ncw);
        let levels = nv + 1;
        self.sym_col.clear();
        self.sym_col.resize(levels * nv, 0);
        self.cw_col.clear();
        self.cw_col.resize(levels * ncw, 0);
        self.mixed_sym.resize(nv, 0);
        self.mixed_cw.resize(ncw, 0);
        self.new_sym.resize(nv, 0);
        self.sym_col[..nv].fill(SYMBOL_SEED);
        for c in 0..ncw {
            self.cw_col[c] = mix(CODEWORD_SEED ^ self.weights[c] as u64);
        }
        self.first = None;
        self.best = None;
        self.cur_invariants.clear();
        self.cur_path.clear();
        self.nodes = 0;
        // negation fixes every linear code
        self.gens = vec![Perm((0..nv as u8).map(|s| s ^ 1).collect())];

        self.visit(0);

        let best = self.best.take().expect("search reaches a leaf");
        let mut bytes = Vec::with_capacity(4 + nv + ncw * nv.div_ceil(8));
        bytes.push(CERT_VERSION);
        bytes.push(self.n as u8);
        bytes.extend_from_slice(&(ncw as u16).to_le_bytes());
        bytes.extend(best.cert[..nv].iter().map(|&t| t as u8));
        let row_bytes = nv.div_ceil(8);
        for &row in &best.cert[nv..] {
            bytes.extend_from_slice(&row.to_le_bytes()[..row_bytes]);
        }
        let generators = std::mem::take(&mut self.gens)
            .into_iter()
            .filter(|g| !g.is_identity())
            .collect();
        self.first = None;
        CanonicalForm {
            cert: CanonicalCert(bytes),
            labeling: best.labeling,
            generators,
        }
    }

    fn distinct_symbol_colours(&self, level: usize) -> usize {
        let nv = self.nv;
        let mut tmp = [0u64; 32];
        tmp[..nv].copy_from_slice(&self.sym_col[level * nv..(level + 1) * nv]);
        let t = &mut tmp[..nv];
        t.sort_unstable();
        1 + t.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn refine(&mut self, level: usize) {
        let (nv, ncw) = (self.nv, self.ncw);
        let mut count = self.distinct_symbol_colours(level);
        loop {
            let sym = &mut self.sym_col[level * nv..(level + 1) * nv];
            let cw = &mut self.cw_col[level * ncw..(level + 1) * ncw];
            for s in 0..nv {
                self.mixed_sym[s] = mix(sym[s] ^ 0x9e37_79b9_7f4a_7c15);
            }
            for c in 0..ncw {
                let mut acc = 0u64;
                for &s in &self.cw_adj[self.cw_off[c] as usize..self.cw_off[c + 1] as usize] {
                    acc = acc.wrapping_add(self.mixed_sym[s as usize]);
                }
                cw[c] = mix(cw[c].rotate_left(23) ^ acc);
                self.mixed_cw[c] = mix(cw[c] ^ 0x632b_e59b_d9b4_e019);
            }
            for s in 0..nv {
                let mut acc = 0u64;
                for &c in &self.sym_adj[self.sym_off[s] as usize..self.sym_off[s + 1] as usize] {
                    acc = acc.wrapping_add(self.mixed_cw[c as usize]);
                }
                self.new_sym[s] =
                    mix(sym[s].rotate_left(7) ^ acc ^ self.mixed_sym[s ^ 1].rotate_left(31));
            }
            sym.copy_from_slice(&self.new_sym);
            let next = self.distinct_symbol_colours(level);
            if next == count {
                return;
            }
            count = next;
        }
    }

    fn invariant(&self, level: usize) -> (u64, usize) {
        let nv = self.nv;
        let mut tmp = [0u64; 32];
        tmp[..nv].copy_from_slice(&self.sym_col[level * nv..(level + 1) * nv]);
        let t = &mut tmp[..nv];
        t.sort_unstable();
        let distinct = 1 + t.windows(2).filter(|w| w[0] != w[1]).count();
        let h = t.iter().fold(distinct as u64, |h, &x| mix(h.rotate_left(11) ^ x));
        (h, distinct)
    }

    /// Smallest non-singleton symbol cell, ties broken by colour value.
    fn target_cell(&self, level: usize) -> Vec<u8> {
        let nv = self.nv;
        let sym = &self.sym_col[level * nv..(level + 1) * nv];
        let mut order: Vec<u8> = (0..nv as u8).collect();
        order.sort_unstable_by_key(|&s| (sym[s as usize], s));
        let mut best: Option<(usize, u64, usize)> = None; // (size, colour, start)
        let mut i = 0;
        while i < nv {
            let col = sym[order[i] as usize];
            let mut j = i + 1;
            while j < nv && sym[order[j] as usize] == col {
                j += 1;
            }
            let size = j - i;
            if size > 1 && best.is_none_or(|(bs, bc, _)| (size, col) < (bs, bc)) {
                best = Some((size, col, i));
            }
            i = j;
        }
        let (size, _, start) = best.expect("non-discrete partition has a target cell");
        order[start..start + size].to_vec()
    }

    fn leaf(&self, level: usize) -> Leaf {
        let nv = self.nv;
        let sym = &self.sym_col[level * nv..(level + 1) * nv];
        let mut order: Vec<u8> = (0..nv as u8).collect();
        order.sort_unstable_by_key(|&s| sym[s as usize]);
        let mut labeling = vec![0u8; nv];
        for (label, &s) in order.iter().enumerate() {
            labeling[s as usize] = label as u8;
        }
        let mut cert = Vec::with_capacity(nv + self.ncw);
        for &s in &order {
            cert.push(labeling[s as usize ^ 1] as u32);
        }
        let start = cert.len();
        for c in 0..self.ncw {
            let mut row = 0u32;
            for &s in &self.cw_adj[self.cw_off[c] as usize..self.cw_off[c + 1] as usize] {
                row |= 1 << labeling[s as usize];
            }
            cert.push(row);
        }
        cert[start..].sort_unstable();
        Leaf {
            invariants: self.cur_invariants.clone(),
            path: self.cur_path.clone(),
            cert,
            labeling,
        }
    }

    fn automorphism(from: &Leaf, to: &Leaf) -> Perm {
        let mut inv = vec![0u8; to.labeling.len()];
        for (v, &l) in to.labeling.iter().enumerate() {
            inv[l as usize] = v as u8;
        }
        Perm(from.labeling.iter().map(|&l| inv[l as usize]).collect())
    }

    fn common_prefix(a: &[u8], b: &[u8]) -> usize {
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    /// Returns `Some(j)` to unwind the search to the node at depth `j`.
    fn visit(&mut self, level: usize) -> Option<usize> {
        self.nodes += 1;
        self.refine(level);
        let (inv, distinct) = self.invariant(level);
        self.cur_invariants.truncate(level);
        self.cur_invariants.push(inv);

        let eq_first = self
            .first
            .as_ref()
            .is_some_and(|f| f.invariants.get(..=level) == Some(&self.cur_invariants[..]));
        let cmp_best = self.best.as_ref().map(|b| {
            let upto = b.invariants.len().min(level + 1);
            match self.cur_invariants[..upto].cmp(&b.invariants[..upto]) {
                Ordering::Equal if b.invariants.len() < level + 1 => Ordering::Greater,
                o => o,
            }
        });
        if self.first.is_some() && !eq_first && cmp_best == Some(Ordering::Greater) {
            return None;
        }

        if distinct == self.nv {
            let leaf = self.leaf(level);
            let Some(first) = &self.first else {
                self.best = Some(Leaf {
                    invariants: leaf.invariants.clone(),
                    path: leaf.path.clone(),
                    cert: leaf.cert.clone(),
                    labeling: leaf.labeling.clone(),
                });
                self.first = Some(leaf);
                return None;
            };
            if eq_first && leaf.invariants == first.invariants && leaf.cert == first.cert {
                let g = Self::automorphism(first, &leaf);
                let back = Self::common_prefix(&leaf.path, &first.path);
                self.gens.push(g);
                return Some(back);
            }
            let best = self.best.as_ref().unwrap();
            match (&leaf.invariants, &leaf.cert).cmp(&(&best.invariants, &best.cert)) {
                Ordering::Equal => {
                    let g = Self::automorphism(best, &leaf);
                    let back = Self::common_prefix(&leaf.path, &best.path);
                    self.gens.push(g);
                    return Some(back);
                }
                Ordering::Less => self.best = Some(leaf),
                Ordering::Greater => {}
            }
            return None;
        }

        let cell = self.target_cell(level);
        let nv = self.nv;
        let mut explored: Vec<u8> = Vec::with_capacity(cell.len());
        let mut orbit_gens = usize::MAX;
        let mut root_of: Vec<u8> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() {
                if orbit_gens != self.gens.len() {
                    root_of = self.orbits_fixing(level);
                    orbit_gens = self.gens.len();
                }
                if explored.iter().any(|&u| root_of[u as usize] == root_of[v as usize]) {
                    continue;
                }
            }
            let (src, dst) = (level * nv, (level + 1) * nv);
            self.sym_col.copy_within(src..src + nv, dst);
            let (src, dst) = (level * self.ncw, (level + 1) * self.ncw);
            self.cw_col.copy_within(src..src + self.ncw, dst);
            let slot = (level + 1) * nv + v as usize;
            self.sym_col[slot] = mix(self.sym_col[slot] ^ INDIVIDUALIZE ^ level as u64);
            self.cur_path.truncate(level);
            self.cur_path.push(v);
            let back = self.visit(level + 1);
            explored.push(v);
            if let Some(j) = back {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    /// Orbit representatives under the automorphisms found so far that fix
    /// every vertex individualized above `level`.
    fn orbits_fixing(&self, level: usize) -> Vec<u8> {
        let nv = self.nv;
        let prefix = &self.cur_path[..level];
        let mut parent: Vec<u8> = (0..nv as u8).collect();
        fn find(p: &mut [u8], mut x: u8) -> u8 {
            while p[x as usize] != x {
                p[x as usize] = p[p[x as usize] as usize];
                x = p[x as usize];
            }
            x
        }
        for g in &self.gens {
            if prefix.iter().all(|&v| g.fixes(v as usize)) {
                for x in 0..nv {
                    let (a, b) = (find(&mut parent, x as u8), find(&mut parent, g.0[x]));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
        (0..nv as u8).map(|x| find(&mut parent, x)).collect()
    }
}

/// Canonical certificate of a code digraph.
pub fn canonical_cert(d: &CodeDigraph) -> CanonicalCert {
    Canonicalizer::new().cert(d)
}

/// Canonical certificate of a code.
pub fn code_cert(c: &LinearCode) -> CanonicalCert {
    canonical_cert(&gamma(c))
}

fn check_same_parameters(c: &LinearCode, d: &LinearCode) -> Result<()> {
    if c.len() != d.len() || c.dimension() != d.dimension() {
        return Err(Error::WrongParameters {
            expected_n: c.len(),
            expected_k: c.dimension(),
            n: d.len(),
            k: d.dimension(),
        });
    }
    if c.dimension() == 0 {
        return Err(Error::Usage("equivalence needs codes of positive dimension".into()));
    }
    Ok(())
}

/// Whether some monomial map carries `c` onto `d`.
pub fn equivalent(c: &LinearCode, d: &LinearCode) -> Result<bool> {
    check_same_parameters(c, d)?;
    Ok(code_cert(c) == code_cert(d))
}

/// A monomial map `m` with `m(c) = d`, if the codes are equivalent.
pub fn equivalence_witness(c: &LinearCode, d: &LinearCode) -> Result<Option<MonomialMap>> {
    check_same_parameters(c, d)?;
    let mut canon = Canonicalizer::new();
    let fc = canon.canonical_form(&gamma(c));
    let fd = canon.canonical_form(&gamma(d));
    Ok(fc
        .isomorphism_to(&fd)
        .map(|p| MonomialMap::from_symbol_map(&p.0).expect("digraph isomorphisms respect twins")))
}

/// The monomial automorphism group of a code.
pub struct AutomorphismGroup {
    n: usize,
    pub generators: Vec<MonomialMap>,
    chain: StabilizerChain,
}

impl AutomorphismGroup {
    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn contains(&self, m: &MonomialMap) -> bool {
        m.degree() == self.n && self.chain.contains(&Perm(m.to_symbol_map()))
    }

    /// All elements, refusing groups larger than `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<MonomialMap>> {
        Ok(self
            .chain
            .elements(cap)?
            .into_iter()
            .map(|p| MonomialMap::from_symbol_map(&p.0).expect("twin-preserving"))
            .collect())
    }
}

/// Generators and order of the group of monomial maps fixing `c`.
pub fn automorphisms(c: &LinearCode) -> Result<AutomorphismGroup> {
    if c.dimension() == 0 {
        return Err(Error::Usage("automorphisms need a code of positive dimension".into()));
    }
    let perms = Canonicalizer::new().canonical_form(&gamma(c)).generators;
    let chain = StabilizerChain::new(2 * c.len(), &perms);
    let generators = perms
        .iter()
        .map(|p| MonomialMap::from_symbol_map(&p.0).expect("twin-preserving"))
        .collect();
    Ok(AutomorphismGroup {
        n: c.len(),
        generators,
        chain,
    })
}

/// Applies a monomial map to a code.
pub fn apply_monomial(c: &LinearCode, m: &MonomialMap) -> Result<LinearCode> {
    m.apply_code(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn gamma_shape() {
        let c = fixtures::code_10_5_5();
        let g = gamma(&c);
        assert_eq!(g.vertex_count(), 262);
        let expected_arcs: usize =
            c.packed_codewords().iter().map(|w| w.weight() as usize).sum::<usize>() + 20;
        assert_eq!(g.arc_count(), expected_arcs);
        assert_eq!(g.arcs().len(), expected_arcs);
        for v in 0..20 {
            assert_eq!(g.out_degree(v), 1);
        }
        for (i, w) in g.codewords().iter().enumerate() {
            assert_eq!(g.out_degree(20 + i), w.weight() as usize);
        }
        let c12 = LinearCode::from_strs(&[
            "100000000011", "010000000012", "001000000021", "000100000022", "000010000010",
        ])
        .unwrap();
        assert_eq!(gamma(&c12).vertex_count(), 266);
    }

    #[test]
    fn cert_ignores_codeword_order() {
        let g = gamma(&fixtures::code_10_5_5());
        let mut order: Vec<usize> = (0..g.codewords().len()).collect();
        order.reverse();
        order.swap(3, 100);
        assert_eq!(canonical_cert(&g), canonical_cert(&g.with_codeword_order(&order)));
    }

    #[test]
    fn negation_is_always_an_automorphism() {
        let c = LinearCode::from_strs(&["1100", "0111"]).unwrap();
        let g = automorphisms(&c).unwrap();
        assert!(g.order() >= 2);
        assert!(g.contains(&MonomialMap::negation(4)));
        assert!(g.contains(&MonomialMap::identity(4)));
    }

    #[test]
    fn parameter_mismatch_is_an_error() {
        let c = fixtures::code_10_5_5();
        let d = LinearCode::from_strs(&["1100000000"]).unwrap();
        assert!(matches!(equivalent(&c, &d), Err(Error::WrongParameters { .. })));
    }
}
