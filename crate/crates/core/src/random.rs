//! Seeded random problem instances at desk scale.
//!
//! Every instance includes all paths of its nilpotency degree among the
//! relations, so the algebra is finite dimensional by construction, and
//! every generator is right-homogeneous so both algorithms apply.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasicAlgebra, Mono};
use crate::module::{FreeModule, ModMon, ModuleElement};
use crate::ordering::DegreeMode;
use crate::problem::{
    ArrowDecl, Factor, GenDecl, Ident, Instance, ModTerm, NamedElement, NilpotencyDecl, OrderDecl, ProblemFile, Term,
};
use crate::quiver::{Path, Quiver};

#[derive(Debug, Clone)]
pub struct RandomParams {
    pub primes: Vec<u64>,
    pub max_vertices: usize,
    pub max_arrows: usize,
    pub max_dim: usize,
    /// Bound on `dim F`, if any.
    pub max_free_dim: Option<usize>,
    pub max_rank: usize,
    pub max_gens: usize,
    pub mode: Option<DegreeMode>,
}

impl Default for RandomParams {
    fn default() -> Self {
        Self {
            primes: vec![2, 3, 5],
            max_vertices: 3,
            max_arrows: 4,
            max_dim: 16,
            max_free_dim: None,
            max_rank: 3,
            max_gens: 4,
            mode: Some(DegreeMode::NegativeDegree),
        }
    }
}

impl RandomParams {
    /// Instances small enough for exhaustive signature enumeration over `F_2`.
    pub fn tiny() -> Self {
        Self {
            primes: vec![2],
            max_vertices: 2,
            max_arrows: 2,
            max_dim: 6,
            max_free_dim: Some(6),
            max_rank: 2,
            max_gens: 2,
            mode: Some(DegreeMode::NegativeDegree),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ident(name: String) -> Ident {
    Ident::new(&name)
}

fn factors(q: &Quiver, p: &Path) -> Vec<Factor> {
    if p.is_trivial() {
        vec![Factor::Id(ident(q.vertex_name(p.start()).to_string()))]
    } else {
        p.arrows().iter().map(|a| Factor::Arrow(ident(q.arrow(*a).name.clone()))).collect()
    }
}

fn coeff(rng: &mut impl Rng, p: u64) -> Option<u64> {
    let c = rng.random_range(1..p);
    (c != 1).then_some(c)
}

fn random_quiver(rng: &mut impl Rng, params: &RandomParams) -> ProblemFile {
    let nv = rng.random_range(1..=params.max_vertices);
    let na = rng.random_range(1..=params.max_arrows.max(1));
    let p = *params.primes.choose(rng).expect("at least one prime");
    let vertices: Vec<Ident> = (0..nv).map(|i| ident(format!("v{i}"))).collect();
    let arrows = (0..na)
        .map(|i| ArrowDecl {
            name: ident(format!("a{i}")),
            source: vertices[rng.random_range(0..nv)].clone(),
            target: vertices[rng.random_range(0..nv)].clone(),
        })
        .collect();
    ProblemFile {
        field: p,
        vertices,
        arrows,
        relations: None,
        nilpotency: None,
        order: params.mode.map(|mode| OrderDecl { mode, precedence: Vec::new() }),
        module: None,
        generators: None,
    }
}

fn random_relations(rng: &mut impl Rng, q: &Quiver, p: u64, n: usize) -> (Vec<Vec<Term>>, bool) {
    let mut rels = Vec::new();
    let mut homogeneous = true;
    let extra = rng.random_range(0..=3);
    for _ in 0..extra {
        let d = rng.random_range(2..=n.max(2));
        let mut pool = q.paths_of_degree(d);
        if rng.random_bool(0.3) && d + 1 < n {
            pool.extend(q.paths_of_degree(d + 1));
            homogeneous = false;
        }
        if pool.is_empty() {
            continue;
        }
        let k = rng.random_range(1..=pool.len().min(3));
        let chosen: Vec<&Path> = pool.choose_multiple(rng, k).collect();
        let terms = chosen
            .into_iter()
            .enumerate()
            .map(|(t, path)| {
                let c = coeff(rng, p);
                Term { negative: t > 0 && rng.random_bool(0.3), coeff: c, coeff_pos: Default::default(), factors: factors(q, path) }
            })
            .collect();
        rels.push(terms);
    }
    for path in q.paths_of_degree(n) {
        rels.push(vec![Term { negative: false, coeff: None, coeff_pos: Default::default(), factors: factors(q, &path) }]);
    }
    (rels, homogeneous)
}

/// A random element of `F` with at most `max_terms` terms.
pub fn random_element(rng: &mut impl Rng, alg: &BasicAlgebra, fm: &FreeModule, max_terms: usize) -> ModuleElement {
    let mons = fm.monomials(alg);
    let field = alg.field();
    let p = field.characteristic() as u64;
    let mut f = ModuleElement::zero();
    if mons.is_empty() {
        return f;
    }
    for _ in 0..rng.random_range(1..=max_terms) {
        let m = *mons.choose(rng).expect("nonempty");
        f.add_term(field, m, field.element(rng.random_range(1..p) as i64));
    }
    f
}

/// A random right-homogeneous element of `F` ending at a random vertex.
fn random_homogeneous(rng: &mut impl Rng, alg: &BasicAlgebra, fm: &FreeModule) -> Vec<(usize, Mono, u64)> {
    let p = alg.field().characteristic() as u64;
    // a unit term makes every cofactor small, so units are rare
    let units = rng.random_bool(0.15);
    let mons: Vec<ModMon> = fm.monomials(alg).into_iter().filter(|m| units || alg.degree(m.mono) > 0).collect();
    let Some(first) = mons.choose(rng) else { return Vec::new() };
    let end = alg.end(first.mono);
    let pool: Vec<&ModMon> = mons.iter().filter(|m| alg.end(m.mono) == end).collect();
    let k = rng.random_range(1..=pool.len().min(3));
    pool.choose_multiple(rng, k).map(|m| (m.gen(), m.mono, rng.random_range(1..p))).collect()
}

/// Draws instances until one satisfies the size bounds.
pub fn random_problem(rng: &mut impl Rng, params: &RandomParams) -> ProblemFile {
    loop {
        if let Some(file) = try_random_problem(rng, params) {
            return file;
        }
    }
}

fn try_random_problem(rng: &mut impl Rng, params: &RandomParams) -> Option<ProblemFile> {
    let mut file = random_quiver(rng, params);
    let q = file.quiver().ok()?;
    let n = rng.random_range(2..=4);
    let (rels, homogeneous) = random_relations(rng, &q, file.field, n);
    file.relations = Some(rels);
    file.nilpotency = Some(if homogeneous && rng.random_bool(0.5) { NilpotencyDecl::Auto } else { NilpotencyDecl::Bound(n) });
    let (alg, _) = file.algebra(n + 1).ok()?;
    if alg.dim() > params.max_dim {
        return None;
    }
    let rank = rng.random_range(1..=params.max_rank);
    let gens: Vec<GenDecl> = (0..rank)
        .map(|i| GenDecl { name: ident(format!("m{}", i + 1)), vertex: file.vertices[rng.random_range(0..file.vertices.len())].clone() })
        .collect();
    let fm = FreeModule::new(gens.iter().map(|g| (g.name.name.clone(), q.vertex(&g.vertex.name).unwrap())).collect());
    if params.max_free_dim.is_some_and(|cap| fm.dim(&alg) > cap) {
        return None;
    }
    let k = if rng.random_bool(0.05) { 0 } else { rng.random_range(1..=params.max_gens) };
    let mut elements = Vec::new();
    for j in 0..k {
        let terms = random_homogeneous(rng, &alg, &fm)
            .into_iter()
            .enumerate()
            .map(|(t, (gen, mono, c))| {
                let path = alg.path(mono);
                ModTerm {
                    negative: t > 0 && rng.random_bool(0.3),
                    coeff: (c != 1).then_some(c),
                    coeff_pos: Default::default(),
                    gen: gens[gen].name.clone(),
                    factors: if path.is_trivial() { Vec::new() } else { factors(&q, path) },
                }
            })
            .collect::<Vec<_>>();
        if !terms.is_empty() {
            elements.push(NamedElement { name: ident(format!("g{}", j + 1)), terms });
        }
    }
    file.module = Some(gens);
    file.generators = Some(elements);
    Some(file)
}

/// A resolved random instance; the file is kept for reproduction.
pub fn random_instance(rng: &mut impl Rng, params: &RandomParams) -> (ProblemFile, Instance) {
    loop {
        let file = random_problem(rng, params);
        if let Ok(inst) = file.resolve() {
            return (file, inst);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    #[test]
    fn instances_respect_bounds_and_round_trip() {
        let params = RandomParams::default();
        let mut r = rng(7);
        for _ in 0..30 {
            let (file, inst) = random_instance(&mut r, &params);
            assert!(inst.algebra.dim() <= params.max_dim);
            assert!(inst.module.rank() <= params.max_rank);
            assert!(inst.generators.len() <= params.max_gens);
            assert!(inst.algebra.quiver().num_vertices() <= 3 && inst.algebra.quiver().num_arrows() <= 4);
            assert_eq!(parse_problem(&file.to_string()).unwrap(), file);
        }
    }

    #[test]
    fn seeds_are_deterministic() {
        let params = RandomParams::default();
        let a = random_problem(&mut rng(11), &params).to_string();
        let b = random_problem(&mut rng(11), &params).to_string();
        assert_eq!(a, b);
    }

    #[test]
    fn tiny_instances_fit() {
        let params = RandomParams::tiny();
        let mut r = rng(3);
        for _ in 0..20 {
            let (_, inst) = random_instance(&mut r, &params);
            assert!(inst.module.dim(&inst.algebra) <= 6);
            assert_eq!(inst.algebra.field().characteristic(), 2);
        }
    }
}
