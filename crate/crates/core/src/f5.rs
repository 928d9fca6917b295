//! Signed standard bases by the F5 algorithm.
//!
//! Signatures live in the free right module `E = P^m` over the path
//! algebra, with `e_i` mapped to the `i`-th input generator. The generator
//! `e_i` sits at the end vertex of that input generator, so input
//! generators must be right vertex-homogeneous.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{BasicAlgebra, Mono};
use crate::field::{Fe, PrimeField};
use crate::module::{act_mono, act_path, strict_divides, ModMon, ModuleElement, Signature, SignedElement};
use crate::ordering::OrderSpec;
use crate::quiver::{Path, VertexId};
use crate::reduction::{signature_admits, signed_normal_form_except, LmIndex, StandardRepresentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum F5Error {
    #[error("input generator {0} is not right vertex-homogeneous")]
    NotRightHomogeneous(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `(g, c)` with `c` a minimal toppling cofactor of `LM(g)`.
    T { g: usize, cofactor: Mono },
    /// `(g, g')` with `LM(g') = LM(g) * c` and `sig(g') < sig(g) * c`.
    S { g: usize, other: usize, cofactor: Mono },
}

/// A critical pair. In the public functions `g` and `other` are positions
/// in the basis slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub kind: PairKind,
    pub sig: Signature,
}

impl CriticalPair {
    pub fn elements(&self) -> (usize, Option<usize>) {
        match self.kind {
            PairKind::T { g, .. } => (g, None),
            PairKind::S { g, other, .. } => (g, Some(other)),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct F5Stats {
    pub pairs_generated: usize,
    pub skipped_by_l: usize,
    pub skipped_rewritten: usize,
    pub stale: usize,
    pub processed: usize,
    /// Zero reductions of S-polynomials in the main loop.
    pub zero_reductions: usize,
    pub interreduction_zeros: usize,
    pub resweeps: usize,
    /// Signatures processed more than once; always zero when the rewritten
    /// criterion holds.
    pub duplicate_signatures: usize,
    pub basis_size: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct F5Options {
    /// Keep a preimage in `E` of every element and syzygy.
    pub track_witnesses: bool,
}

/// An element of `E`. Paths need not be standard.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EElement {
    terms: HashMap<Signature, Fe>,
}

impl EElement {
    pub fn monomial(s: Signature) -> Self {
        let mut terms = HashMap::new();
        terms.insert(s, Fe::ONE);
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Signature, Fe)> {
        self.terms.iter().map(|(s, c)| (s, *c))
    }

    pub fn lm(&self, order: &OrderSpec) -> Option<&Signature> {
        self.terms.keys().max_by(|a, b| a.cmp(order, b))
    }

    pub fn add_scaled(&mut self, field: PrimeField, c: Fe, other: &EElement) {
        for (s, v) in other.terms() {
            let e = self.terms.entry(s.clone()).or_insert(Fe::ZERO);
            *e = field.add(*e, field.mul(c, v));
            if e.is_zero() {
                self.terms.remove(s);
            }
        }
    }

    pub fn times(&self, p: &Path) -> EElement {
        Self {
            terms: self.terms.iter().filter_map(|(s, c)| s.times(p).map(|t| (t, *c))).collect(),
        }
    }

    /// The image under `e_i -> gens[i]`.
    pub fn ev(&self, alg: &BasicAlgebra, gens: &[ModuleElement]) -> ModuleElement {
        let field = alg.field();
        let mut out = ModuleElement::zero();
        for (s, c) in self.terms() {
            out.add_scaled(field, c, &act_path(alg, &gens[s.gen()], &s.path));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct F5Result {
    pub basis: Vec<SignedElement>,
    /// Known leading monomials of syzygies, in discovery order.
    pub syzygies: Vec<Signature>,
    pub stats: F5Stats,
    /// Signatures of processed pairs, in processing order.
    pub processed: Vec<Signature>,
    /// Preimages of `basis` elements, when tracked.
    pub witnesses: Option<Vec<EElement>>,
    /// Syzygies with leading monomials `syzygies`, when tracked.
    pub syzygy_witnesses: Option<Vec<EElement>>,
}

/// The end vertex shared by every term of `f`.
pub fn right_vertex(alg: &BasicAlgebra, f: &ModuleElement) -> Option<VertexId> {
    let mut ends = f.terms().map(|(m, _)| alg.end(m.mono));
    let v = ends.next()?;
    ends.all(|w| w == v).then_some(v)
}

/// `sig` has a standard path and no entry of `l` with the same generator
/// is a prefix of it.
pub fn is_standard_relative(alg: &BasicAlgebra, sig: &Signature, l: &[Signature]) -> bool {
    alg.is_standard(&sig.path) && !l.iter().any(|e| e.gen == sig.gen && e.path.is_prefix_of(&sig.path))
}

/// Some `g` in `basis` and small cofactor `c` of `LM(g)` have
/// `sig(g) * c = sig` with `g * c` irreducible below `sig`.
pub fn f5_reducer_exists(alg: &BasicAlgebra, sig: &Signature, basis: &[SignedElement]) -> bool {
    let index = LmIndex::new(basis.iter().map(|g| &g.poly));
    reducer_exists_indexed(alg, sig, basis, &index)
}

fn reducer_exists_indexed(alg: &BasicAlgebra, sig: &Signature, basis: &[SignedElement], index: &LmIndex) -> bool {
    let q = alg.quiver();
    basis.iter().any(|g| {
        if g.sig.gen != sig.gen || !g.sig.path.is_prefix_of(&sig.path) {
            return false;
        }
        let Ok(rest) = g.sig.path.complement_in(q, &sig.path) else {
            return false;
        };
        let Some(c) = alg.lookup(&rest) else {
            return false;
        };
        let lm = g.poly.lm().expect("nonzero");
        let Some(prod) = alg.concat_std(lm.mono, c) else {
            return false;
        };
        let m = ModMon { mono: prod, gen: lm.gen };
        !index.divisors(alg, m).any(|(h, d)| signature_admits(alg, &basis[h], d, sig))
    })
}

/// All critical pairs of `basis`, T-pairs first.
pub fn critical_pairs(alg: &BasicAlgebra, basis: &[SignedElement]) -> Vec<CriticalPair> {
    let mut out = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        out.extend(t_pairs(alg, i, g));
    }
    for (i, g) in basis.iter().enumerate() {
        for (j, h) in basis.iter().enumerate() {
            if let Some(p) = s_pair(alg, (i, g), (j, h)) {
                out.push(p);
            }
        }
    }
    out
}

fn t_pairs(alg: &BasicAlgebra, id: usize, g: &SignedElement) -> Vec<CriticalPair> {
    let lm = g.poly.lm().expect("nonzero");
    alg.minimal_topplings(lm.mono)
        .into_iter()
        .filter_map(|(c, _)| {
            let sig = g.sig.times(alg.path(c))?;
            Some(CriticalPair { kind: PairKind::T { g: id, cofactor: c }, sig })
        })
        .collect()
}

/// The type S pair `(g, h)` when `LM(g)` strictly divides `LM(h)` and the
/// signature condition holds.
fn s_pair(alg: &BasicAlgebra, (i, g): (usize, &SignedElement), (j, h): (usize, &SignedElement)) -> Option<CriticalPair> {
    if i == j {
        return None;
    }
    let c = strict_divides(alg, g.poly.lm()?, h.poly.lm()?)?;
    let sig = g.sig.times(alg.path(c))?;
    h.sig
        .lt(alg.order(), &sig)
        .then_some(CriticalPair { kind: PairKind::S { g: i, other: j, cofactor: c }, sig })
}

/// The S-polynomial of a pair over `basis`.
pub fn spolynomial(alg: &BasicAlgebra, basis: &[SignedElement], p: &CriticalPair) -> SignedElement {
    SignedElement { poly: spoly_poly(alg, |i| &basis[i].poly, p), sig: p.sig.clone() }
}

fn spoly_poly<'a>(alg: &BasicAlgebra, poly: impl Fn(usize) -> &'a ModuleElement, p: &CriticalPair) -> ModuleElement {
    let field = alg.field();
    match p.kind {
        PairKind::T { g, cofactor } => act_mono(alg, poly(g), cofactor),
        PairKind::S { g, other, cofactor } => {
            let mut f = act_mono(alg, poly(g), cofactor);
            let alpha = field.div(poly(g).lc().unwrap(), poly(other).lc().unwrap());
            f.add_scaled(field, field.neg(alpha), poly(other));
            f
        }
    }
}

/// Critical pairs normal relative to `l` without a reducer in `basis`.
/// Empty exactly when the relative F5 criterion holds.
pub fn verify_f5_criterion(alg: &BasicAlgebra, basis: &[SignedElement], l: &[Signature]) -> Vec<CriticalPair> {
    let index = LmIndex::new(basis.iter().map(|g| &g.poly));
    critical_pairs(alg, basis)
        .into_iter()
        .filter(|p| is_standard_relative(alg, &p.sig, l))
        .filter(|p| {
            let (g, h) = p.elements();
            is_interreduced_member(alg, basis, &index, g) && h.is_none_or(|h| is_interreduced_member(alg, basis, &index, h))
        })
        .filter(|p| !reducer_exists_indexed(alg, &p.sig, basis, &index))
        .collect()
}

/// `basis[i]` is irreducible below its own signature with respect to the
/// other elements.
fn is_interreduced_member(alg: &BasicAlgebra, basis: &[SignedElement], index: &LmIndex, i: usize) -> bool {
    let g = &basis[i];
    let lm = g.poly.lm().unwrap();
    !index.divisors(alg, lm).any(|(h, d)| h != i && signature_admits(alg, &basis[h], d, &g.sig))
}

/// Signed interreduction; zero reductions append their signatures to `l`.
pub fn signed_interreduce(alg: &BasicAlgebra, basis: Vec<SignedElement>, l: &mut Vec<Signature>) -> Vec<SignedElement> {
    let mut st = State::new(alg, F5Options::default());
    for g in basis {
        st.push(g, None);
    }
    st.interreduce();
    l.extend(st.l.iter().cloned());
    st.g
}

#[derive(Debug, Clone)]
struct Queued {
    pair: CriticalPair,
    seq: usize,
}

struct State<'a> {
    alg: &'a BasicAlgebra,
    track: bool,
    g: Vec<SignedElement>,
    ids: Vec<usize>,
    wit: Vec<EElement>,
    index: LmIndex,
    l: Vec<Signature>,
    l_wit: Vec<EElement>,
    queue: Vec<Queued>,
    next_id: usize,
    next_seq: usize,
    stats: F5Stats,
    processed: Vec<Signature>,
    processed_set: HashSet<Signature>,
}

impl<'a> State<'a> {
    fn new(alg: &'a BasicAlgebra, opts: F5Options) -> Self {
        Self {
            alg,
            track: opts.track_witnesses,
            g: Vec::new(),
            ids: Vec::new(),
            wit: Vec::new(),
            index: LmIndex::default(),
            l: Vec::new(),
            l_wit: Vec::new(),
            queue: Vec::new(),
            next_id: 0,
            next_seq: 0,
            stats: F5Stats::default(),
            processed: Vec::new(),
            processed_set: HashSet::new(),
        }
    }

    fn order(&self) -> &'a OrderSpec {
        self.alg.order()
    }

    fn field(&self) -> PrimeField {
        self.alg.field()
    }

    fn push(&mut self, e: SignedElement, w: Option<EElement>) -> usize {
        let id = self.next_id;
        self.next_id += 1;
        self.g.push(e);
        self.ids.push(id);
        if self.track {
            self.wit.push(w.expect("witness tracked"));
        }
        self.reindex();
        id
    }

    fn reindex(&mut self) {
        self.index = LmIndex::new(self.g.iter().map(|g| &g.poly));
    }

    fn remove(&mut self, k: usize) -> (SignedElement, Option<EElement>) {
        self.ids.remove(k);
        let w = self.track.then(|| self.wit.remove(k));
        let e = self.g.remove(k);
        self.reindex();
        (e, w)
    }

    fn add_syzygy(&mut self, sig: Signature, w: Option<EElement>) {
        if !self.l.contains(&sig) {
            self.l.push(sig);
            if let Some(w) = w {
                self.l_wit.push(w);
            }
        }
    }

    /// `w - sum coeff_i * wit[index_i] * c_i`.
    fn replay_witness(&self, w: &EElement, rep: &StandardRepresentation) -> EElement {
        let field = self.field();
        let mut out = w.clone();
        for s in &rep.steps {
            out.add_scaled(field, field.neg(s.coeff), &self.wit[s.index].times(self.alg.path(s.cofactor)));
        }
        out
    }

    /// Replaces elements by their normal forms modulo the others and drops
    /// elements whose leading monomial and signature are both multiples of
    /// another element's, until nothing changes. Returns the ids of
    /// elements that are new or changed.
    fn interreduce(&mut self) -> Vec<usize> {
        let mut fresh: Vec<usize> = Vec::new();
        loop {
            let mut progress = false;
            let mut k = 0;
            while k < self.g.len() {
                let (nf, rep) =
                    signed_normal_form_except(self.alg, &self.g[k].poly, &self.g, &self.index, &self.g[k].sig, Some(k));
                if rep.steps.is_empty() {
                    k += 1;
                    continue;
                }
                progress = true;
                let w = self.track.then(|| self.replay_witness(&self.wit[k], &rep));
                let (old, _) = self.remove(k);
                if nf.is_zero() {
                    self.stats.interreduction_zeros += 1;
                    self.add_syzygy(old.sig, w);
                } else {
                    let id = self.push(SignedElement { poly: nf, sig: old.sig }, w);
                    fresh.push(id);
                }
            }
            let mut k = 0;
            while k < self.g.len() {
                if self.is_sig_multiple(k) {
                    progress = true;
                    self.remove(k);
                } else {
                    k += 1;
                }
            }
            if !progress {
                break;
            }
        }
        fresh.retain(|id| self.ids.contains(id));
        fresh
    }

    /// Some other element `g'` and cofactor `c` have `LM(g') * c = LM(g)`
    /// and `sig(g') * c = sig(g)`.
    fn is_sig_multiple(&self, k: usize) -> bool {
        let g = &self.g[k];
        self.index.divisors(self.alg, g.poly.lm().unwrap()).any(|(h, c)| {
            h != k && self.g[h].sig.times(self.alg.path(c)).is_some_and(|s| s == g.sig)
        })
    }

    fn enqueue(&mut self, pair: CriticalPair) {
        self.stats.pairs_generated += 1;
        self.queue.push(Queued { pair, seq: self.next_seq });
        self.next_seq += 1;
    }

    /// T-pairs of the new elements and S-pairs between new and all elements,
    /// stored with ids.
    fn generate_pairs(&mut self, new_ids: &[usize]) {
        let mut pairs = Vec::new();
        for (t, &id) in new_ids.iter().enumerate() {
            let Some(k) = self.pos(id) else { continue };
            pairs.extend(t_pairs(self.alg, id, &self.g[k]));
            for j in 0..self.g.len() {
                // pairs among new elements come from the first of the two
                if j == k || new_ids[..t].contains(&self.ids[j]) {
                    continue;
                }
                for (a, b) in [(k, j), (j, k)] {
                    if let Some(mut p) = s_pair(self.alg, (a, &self.g[a]), (b, &self.g[b])) {
                        if let PairKind::S { cofactor, .. } = p.kind {
                            p.kind = PairKind::S { g: self.ids[a], other: self.ids[b], cofactor };
                        }
                        pairs.push(p);
                    }
                }
            }
        }
        for p in pairs {
            self.enqueue(p);
        }
    }

    fn pos(&self, id: usize) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    fn pop(&mut self) -> Option<Queued> {
        if self.queue.is_empty() {
            return None;
        }
        let order = self.order();
        let mut best = 0;
        for k in 1..self.queue.len() {
            let (a, b) = (&self.queue[k], &self.queue[best]);
            let c = a.pair.sig.cmp(order, &b.pair.sig);
            if c == Ordering::Greater || (c == Ordering::Equal && a.seq < b.seq) {
                best = k;
            }
        }
        Some(self.queue.swap_remove(best))
    }

    /// Positions of a pair's elements, or `None` when one was replaced.
    fn live(&self, pair: &CriticalPair) -> Option<CriticalPair> {
        let kind = match pair.kind {
            PairKind::T { g, cofactor } => PairKind::T { g: self.pos(g)?, cofactor },
            PairKind::S { g, other, cofactor } => PairKind::S { g: self.pos(g)?, other: self.pos(other)?, cofactor },
        };
        Some(CriticalPair { kind, sig: pair.sig.clone() })
    }

    fn process(&mut self, pair: CriticalPair) {
        if !self.processed_set.insert(pair.sig.clone()) {
            self.stats.duplicate_signatures += 1;
        }
        self.processed.push(pair.sig.clone());
        self.stats.processed += 1;
        let field = self.field();
        let f = spoly_poly(self.alg, |i| &self.g[i].poly, &pair);
        let w = self.track.then(|| match pair.kind {
            PairKind::T { g, cofactor } => self.wit[g].times(self.alg.path(cofactor)),
            PairKind::S { g, other, cofactor } => {
                let mut w = self.wit[g].times(self.alg.path(cofactor));
                let alpha = field.div(self.g[g].poly.lc().unwrap(), self.g[other].poly.lc().unwrap());
                w.add_scaled(field, field.neg(alpha), &self.wit[other]);
                w
            }
        });
        let (nf, rep) = signed_normal_form_except(self.alg, &f, &self.g, &self.index, &pair.sig, None);
        let w = w.map(|w| self.replay_witness(&w, &rep));
        if nf.is_zero() {
            self.stats.zero_reductions += 1;
            self.add_syzygy(pair.sig, w);
        } else {
            let id = self.push(SignedElement { poly: nf, sig: pair.sig }, w);
            let mut fresh = self.interreduce();
            if self.pos(id).is_some() && !fresh.contains(&id) {
                fresh.push(id);
            }
            self.generate_pairs(&fresh);
        }
    }

    fn run(&mut self) {
        loop {
            while let Some(q) = self.pop() {
                let Some(pair) = self.live(&q.pair) else {
                    self.stats.stale += 1;
                    continue;
                };
                if !is_standard_relative(self.alg, &pair.sig, &self.l) {
                    self.stats.skipped_by_l += 1;
                    continue;
                }
                if reducer_exists_indexed(self.alg, &pair.sig, &self.g, &self.index) {
                    self.stats.skipped_rewritten += 1;
                    continue;
                }
                self.process(pair);
            }
            let missing = verify_f5_criterion(self.alg, &self.g, &self.l);
            if missing.is_empty() {
                return;
            }
            self.stats.resweeps += 1;
            for p in missing {
                let kind = match p.kind {
                    PairKind::T { g, cofactor } => PairKind::T { g: self.ids[g], cofactor },
                    PairKind::S { g, other, cofactor } => PairKind::S { g: self.ids[g], other: self.ids[other], cofactor },
                };
                self.enqueue(CriticalPair { kind, sig: p.sig });
            }
        }
    }
}

/// Signed standard basis of the submodule generated by `gens`. Zero
/// generators are ignored.
pub fn f5_stdbasis(alg: &BasicAlgebra, gens: &[ModuleElement], opts: F5Options) -> Result<F5Result, F5Error> {
    let mut st = State::new(alg, opts);
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let v = right_vertex(alg, g).ok_or(F5Error::NotRightHomogeneous(i))?;
        let sig = Signature::new(i, Path::trivial(v));
        let w = opts.track_witnesses.then(|| EElement::monomial(sig.clone()));
        st.push(SignedElement { poly: g.clone(), sig }, w);
    }
    st.interreduce();
    let all = st.ids.clone();
    st.generate_pairs(&all);
    st.run();
    st.stats.basis_size = st.g.len();
    let track = st.track;
    Ok(F5Result {
        basis: st.g,
        syzygies: st.l,
        stats: st.stats,
        processed: st.processed,
        witnesses: track.then_some(st.wit),
        syzygy_witnesses: track.then_some(st.l_wit),
    })
}

/// Checks the preimages recorded by a tracked run: each basis witness
/// evaluates to its element and leads with its signature, and each syzygy
/// witness evaluates to zero and leads with its entry of `L`.
pub fn check_witnesses(alg: &BasicAlgebra, gens: &[ModuleElement], res: &F5Result) -> Result<(), String> {
    let order = alg.order();
    let (Some(ws), Some(zs)) = (&res.witnesses, &res.syzygy_witnesses) else {
        return Err("witnesses were not tracked".into());
    };
    for (g, w) in res.basis.iter().zip(ws) {
        if w.ev(alg, gens) != g.poly {
            return Err(format!("witness of {} does not evaluate to the element", g.sig.display(alg)));
        }
        if w.lm(order) != Some(&g.sig) {
            return Err(format!("witness of {} has a different leading monomial", g.sig.display(alg)));
        }
    }
    if zs.len() != res.syzygies.len() {
        return Err("missing syzygy witnesses".into());
    }
    for (s, z) in res.syzygies.iter().zip(zs) {
        if !z.ev(alg, gens).is_zero() || z.lm(order) != Some(s) {
            return Err(format!("syzygy witness of {} is wrong", s.display(alg)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::a1;
    use crate::module::tests::{el, xm};

    fn sig(alg: &BasicAlgebra, gen: usize, deg: usize) -> Signature {
        Signature::new(gen, alg.path(xm(alg, deg)).clone())
    }

    fn signed(alg: &BasicAlgebra, terms: &[(usize, usize)], s: Signature) -> SignedElement {
        SignedElement { poly: el(alg, terms), sig: s }
    }

    #[test]
    fn spolynomial_examples() {
        let alg = a1();
        let g = vec![signed(&alg, &[(0, 1)], sig(&alg, 0, 0))];
        let p = CriticalPair { kind: PairKind::T { g: 0, cofactor: xm(&alg, 2) }, sig: sig(&alg, 0, 2) };
        let s = spolynomial(&alg, &g, &p);
        assert!(s.poly.is_zero());
        assert_eq!(s.sig, sig(&alg, 0, 2));
        assert_eq!(critical_pairs(&alg, &g), vec![p]);

        let unit = vec![signed(&alg, &[(0, 0)], sig(&alg, 0, 0))];
        assert!(critical_pairs(&alg, &unit).is_empty());
    }

    #[test]
    fn s_pair_cancels_leading_terms() {
        // p = 3 so that the two leading coefficients differ
        use crate::algebra::tests::{mono, spec};
        use crate::algebra::Nilpotency;
        use crate::ordering::DegreeMode;
        let q = crate::quiver::tests::q1();
        let rel = mono(&q, &[(1, &["x", "x", "x"])]);
        let alg = BasicAlgebra::build(&spec(q, 3, vec![rel], Nilpotency::Auto, DegreeMode::NegativeDegree)).unwrap();
        let f = alg.field();
        let g = SignedElement { poly: el(&alg, &[(0, 0)]).scale(f, Fe(2)), sig: sig(&alg, 1, 0) };
        let h = SignedElement { poly: el(&alg, &[(0, 1)]), sig: sig(&alg, 0, 0) };
        // sig(h) = e1 vs sig(g) * x = e2*x: degree decides under negdeglex
        let basis = vec![g, h];
        let pairs: Vec<_> = critical_pairs(&alg, &basis).into_iter().filter(|p| matches!(p.kind, PairKind::S { .. })).collect();
        assert!(pairs.is_empty(), "e1 is greater than e2*x, so no S-pair");
        let basis = vec![basis[1].clone(), SignedElement { poly: basis[0].poly.clone(), sig: sig(&alg, 1, 0) }];
        let g = SignedElement { poly: el(&alg, &[(0, 0)]).scale(f, Fe(2)), sig: sig(&alg, 0, 0) };
        let h = SignedElement { poly: el(&alg, &[(0, 1), (0, 2)]), sig: sig(&alg, 1, 1) };
        let basis2 = vec![g, h];
        let p = critical_pairs(&alg, &basis2).into_iter().find(|p| matches!(p.kind, PairKind::S { .. })).unwrap();
        let s = spolynomial(&alg, &basis2, &p);
        assert_eq!(s.sig, sig(&alg, 0, 1));
        assert!(s.poly.lm() < basis2[1].poly.lm());
        drop(basis);
    }

    #[test]
    fn standard_relative_examples() {
        let alg = a1();
        assert!(is_standard_relative(&alg, &sig(&alg, 0, 1), &[]));
        let l = vec![sig(&alg, 0, 1)];
        assert!(!is_standard_relative(&alg, &sig(&alg, 0, 2), &l));
        assert!(is_standard_relative(&alg, &sig(&alg, 1, 2), &l));
    }

    #[test]
    fn reducer_existence_examples() {
        let alg = a1();
        let g = vec![signed(&alg, &[(0, 1)], sig(&alg, 0, 0))];
        assert!(f5_reducer_exists(&alg, &sig(&alg, 0, 1), &g));
        assert!(!f5_reducer_exists(&alg, &sig(&alg, 1, 0), &g));
        assert!(f5_reducer_exists(&alg, &sig(&alg, 0, 0), &g));
        // x^2 is not a small cofactor of x
        assert!(!f5_reducer_exists(&alg, &sig(&alg, 0, 2), &g));
    }

    #[test]
    fn interreduction_examples() {
        let alg = a1();
        let mut l = Vec::new();
        let g = vec![signed(&alg, &[(0, 1)], sig(&alg, 0, 0)), signed(&alg, &[(0, 2)], sig(&alg, 0, 1))];
        let out = signed_interreduce(&alg, g.clone(), &mut l);
        assert_eq!(out, vec![g[0].clone()]);
        assert!(l.is_empty());

        let single = vec![g[0].clone()];
        assert_eq!(signed_interreduce(&alg, single.clone(), &mut l), single);

        // e1 > e2: x + x^2 (sig e2) is not reduced by x (sig e1), but x
        // reduces by x + x^2 to x^2 and then to zero, so e1 enters L
        let g = vec![signed(&alg, &[(0, 1), (0, 2)], sig(&alg, 1, 0)), signed(&alg, &[(0, 1)], sig(&alg, 0, 0))];
        let out = signed_interreduce(&alg, g.clone(), &mut l);
        assert_eq!(out, vec![g[0].clone()]);
        assert_eq!(l, vec![sig(&alg, 0, 0)]);
    }

    #[test]
    fn f5_examples() {
        let alg = a1();
        let opts = F5Options { track_witnesses: true };
        let gens = vec![el(&alg, &[(0, 1)])];
        let r = f5_stdbasis(&alg, &gens, opts).unwrap();
        assert_eq!(r.basis, vec![signed(&alg, &[(0, 1)], sig(&alg, 0, 0))]);
        assert_eq!(r.syzygies, vec![sig(&alg, 0, 2)]);
        assert_eq!(r.stats.zero_reductions, 1);
        check_witnesses(&alg, &gens, &r).unwrap();

        let gens = vec![el(&alg, &[(0, 0)])];
        let r = f5_stdbasis(&alg, &gens, opts).unwrap();
        assert_eq!(r.basis.len(), 1);
        assert_eq!(r.stats.processed, 0);

        let gens = vec![el(&alg, &[(0, 1), (1, 1)]), el(&alg, &[(1, 1)])];
        let r = f5_stdbasis(&alg, &gens, opts).unwrap();
        check_witnesses(&alg, &gens, &r).unwrap();
        assert!(verify_f5_criterion(&alg, &r.basis, &r.syzygies).is_empty());
        let mut lms: Vec<ModMon> = r.basis.iter().map(|g| g.poly.lm().unwrap()).collect();
        lms.sort();
        lms.dedup();
        assert!(lms.contains(&ModMon::new(0, xm(&alg, 1))) && lms.contains(&ModMon::new(1, xm(&alg, 1))));

        // redundant generators x, x^2
        let gens = vec![el(&alg, &[(0, 1)]), el(&alg, &[(0, 2)])];
        let r = f5_stdbasis(&alg, &gens, opts).unwrap();
        check_witnesses(&alg, &gens, &r).unwrap();
        assert_eq!(r.basis.iter().filter(|g| g.sig.degree() == 0).count(), 1);
    }
}
