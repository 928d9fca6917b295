//! Finite-dimensional quotients `A = P / ker(psi)` of a path algebra.
//!
//! Standard monomials are computed by linear algebra inside the truncated
//! path algebra `P / J^N`: the two-sided ideal generated by the relations is
//! saturated under left and right multiplication by arrows and row reduced
//! with respect to the monomial ordering. Paths that are not pivots are the
//! standard monomials; their images form the preferred basis of `A`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use thiserror::Error;

use crate::field::{Fe, PrimeField};
use crate::linalg::Echelon;
use crate::ordering::OrderSpec;
use crate::quiver::{ArrowId, Path, Quiver, VertexId};

pub const DEFAULT_DEGREE_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not a basic algebra: relation term `{0}` has degree < 2")]
    NotBasic(String),
    #[error("no nilpotency degree found up to the degree cap {0}")]
    DegreeCapExceeded(usize),
    #[error("automatic nilpotency detection needs degree-homogeneous relations; `{0}` is not")]
    NonHomogeneousAuto(String),
    #[error("nilpotency bound {0} is too small: some path of degree {0} does not vanish in the algebra")]
    InconsistentTruncation(usize),
    #[error("the quiver has no vertices")]
    EmptyQuiver,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Index of a standard monomial. Indices increase with the monomial
/// ordering, so comparing indices compares monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub u32);

impl Mono {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

/// An element of the path algebra: a formal combination of paths.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathPoly {
    pub terms: Vec<(Fe, Path)>,
}

impl PathPoly {
    pub fn new(terms: Vec<(Fe, Path)>) -> Self {
        Self { terms }
    }

    /// Merges equal paths and drops zero coefficients.
    fn normalized(&self, field: PrimeField) -> BTreeMap<Path, Fe> {
        let mut out: BTreeMap<Path, Fe> = BTreeMap::new();
        for (c, p) in &self.terms {
            let e = out.entry(p.clone()).or_insert(Fe::ZERO);
            *e = field.add(*e, *c);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Auto,
    /// The caller asserts that every path of this degree vanishes.
    Bound(usize),
}

#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub quiver: Quiver,
    pub field: PrimeField,
    pub relations: Vec<PathPoly>,
    pub nilpotency: Nilpotency,
    pub order: OrderSpec,
    pub degree_cap: usize,
}

/// Sparse element of `A` in the preferred basis.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<Mono, Fe>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: Mono) -> Self {
        Self::term(m, Fe::ONE)
    }

    pub fn term(m: Mono, c: Fe) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = (Mono, Fe)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(field, m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Mono, Fe)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn coeff(&self, m: Mono) -> Fe {
        self.terms.get(&m).copied().unwrap_or(Fe::ZERO)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<Mono> {
        self.terms.keys().next_back().copied()
    }

    pub fn lc(&self) -> Option<Fe> {
        self.terms.values().next_back().copied()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, field: PrimeField, c: Fe, other: &AlgebraElement) {
        if c.is_zero() {
            return;
        }
        for (m, v) in other.terms() {
            add_term(&mut self.terms, field, m, field.mul(c, v));
        }
    }

    pub fn scale(&self, field: PrimeField, c: Fe) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(field, c, self);
        out
    }
}

pub(crate) fn add_term<K: Ord>(terms: &mut BTreeMap<K, Fe>, field: PrimeField, k: K, c: Fe) {
    if c.is_zero() {
        return;
    }
    match terms.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = field.add(*e.get(), c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Result of multiplying a standard monomial by a cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CofactorClass {
    /// The concatenated path is standard.
    Small,
    /// A toppling with the given value: the leading monomial of the product,
    /// or `None` when the product vanishes.
    Toppling(Option<Mono>),
    /// The given path is not standard.
    Invalid(Path),
}

#[derive(Debug, Clone)]
pub struct BasicAlgebra {
    quiver: Quiver,
    field: PrimeField,
    order: OrderSpec,
    std: Vec<Path>,
    index: HashMap<Path, Mono>,
    /// `ext[b][x]`: the standard monomial `b*x`, if that path is standard.
    ext: Vec<Vec<Option<Mono>>>,
    /// `mul_table[b][x] = psi(lambda(b) * x)`.
    mul_table: Vec<Vec<AlgebraElement>>,
    /// Prefix/suffix splittings of each standard path, by prefix length.
    splits: Vec<Vec<(Mono, Mono)>>,
    trivial: Vec<Mono>,
    nilpotency: usize,
    truncation: usize,
}

/// Row-reduced slice of the truncated ideal over a set of path columns.
struct IdealBlock {
    columns: Vec<Path>,
    col_of: HashMap<Path, usize>,
    echelon: Echelon,
}

impl IdealBlock {
    fn new(field: PrimeField, order: &OrderSpec, mut columns: Vec<Path>) -> Self {
        columns.sort_by(|a, b| order.compare_paths(b, a));
        let col_of = columns.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let echelon = Echelon::new(field, columns.len());
        Self { columns, col_of, echelon }
    }

    /// Dense vector of the terms that fall into this block; other terms are
    /// truncated away.
    fn vector(&self, terms: &BTreeMap<Path, Fe>) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.columns.len()];
        for (p, c) in terms {
            if let Some(&i) = self.col_of.get(p) {
                v[i] = *c;
            }
        }
        v
    }

    fn terms_of(&self, v: &[Fe]) -> BTreeMap<Path, Fe> {
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.columns[i].clone(), *c))
            .collect()
    }

    fn is_pivot(&self, p: &Path) -> bool {
        self.col_of.get(p).is_some_and(|&i| self.echelon.is_pivot(i))
    }

    fn pivot_paths(&self) -> impl Iterator<Item = &Path> {
        self.echelon.pivots().into_iter().map(|i| &self.columns[i])
    }
}

fn multiply_terms(
    quiver: &Quiver,
    terms: &BTreeMap<Path, Fe>,
    arrow: ArrowId,
    left: bool,
) -> BTreeMap<Path, Fe> {
    let xp = quiver.arrow_path(arrow);
    terms
        .iter()
        .filter_map(|(p, c)| {
            let prod = if left { xp.compose(p) } else { p.compose(&xp) };
            prod.map(|q| (q, *c))
        })
        .collect()
}

/// Saturates `seeds` into the two-sided ideal they generate, within the
/// block's columns.
fn saturate(quiver: &Quiver, block: &mut IdealBlock, seeds: &[BTreeMap<Path, Fe>]) {
    let mut work: VecDeque<BTreeMap<Path, Fe>> = VecDeque::new();
    for s in seeds {
        let v = block.vector(s);
        if block.echelon.insert(v.clone()).is_some() {
            work.push_back(block.terms_of(&v));
        }
    }
    while let Some(t) = work.pop_front() {
        for a in quiver.arrow_ids() {
            for left in [true, false] {
                let prod = multiply_terms(quiver, &t, a, left);
                if prod.is_empty() {
                    continue;
                }
                let v = block.vector(&prod);
                if block.echelon.insert(v.clone()).is_some() {
                    work.push_back(block.terms_of(&v));
                }
            }
        }
    }
}

fn display_terms(quiver: &Quiver, terms: &BTreeMap<Path, Fe>) -> String {
    terms
        .iter()
        .map(|(p, c)| format!("{c}*{}", quiver.display_path(p)))
        .collect::<Vec<_>>()
        .join(" + ")
}

impl BasicAlgebra {
    pub fn build(spec: &AlgebraSpec) -> Result<Self, AlgebraError> {
        let quiver = &spec.quiver;
        let field = spec.field;
        if quiver.num_vertices() == 0 {
            return Err(AlgebraError::EmptyQuiver);
        }

        // Two-sided ideals contain 1_u * r * 1_v, so relations split into
        // their vertex-homogeneous components.
        let mut relations: Vec<BTreeMap<Path, Fe>> = Vec::new();
        for rel in &spec.relations {
            let terms = rel.normalized(field);
            if let Some((p, _)) = terms.iter().find(|(p, _)| p.degree() < 2) {
                return Err(AlgebraError::NotBasic(quiver.display_path(p).to_string()));
            }
            let mut parts: BTreeMap<(VertexId, VertexId), BTreeMap<Path, Fe>> = BTreeMap::new();
            for (p, c) in terms {
                parts.entry((p.start(), p.end())).or_default().insert(p, c);
            }
            relations.extend(parts.into_values());
        }

        let blocks = match spec.nilpotency {
            Nilpotency::Auto => Self::auto_blocks(spec, &relations)?,
            Nilpotency::Bound(n) => {
                if n > spec.degree_cap {
                    return Err(AlgebraError::DegreeCapExceeded(spec.degree_cap));
                }
                let block = Self::truncated_block(spec, &relations, n);
                let check = Self::truncated_block(spec, &relations, n + 1);
                let dead = |p: &Path| {
                    let mut unit = BTreeMap::new();
                    unit.insert(p.clone(), Fe::ONE);
                    check.echelon.contains(&check.vector(&unit))
                };
                if !quiver.paths_of_degree(n).iter().all(dead) {
                    return Err(AlgebraError::InconsistentTruncation(n));
                }
                vec![block]
            }
        };
        let truncation = match spec.nilpotency {
            Nilpotency::Auto => blocks.len() - 1,
            Nilpotency::Bound(n) => n,
        };

        for block in &blocks {
            if let Some(p) = block.pivot_paths().find(|p| p.degree() < 2) {
                return Err(AlgebraError::NotBasic(quiver.display_path(p).to_string()));
            }
        }

        let mut std: Vec<Path> = blocks
            .iter()
            .flat_map(|b| b.columns.iter().filter(|p| !b.is_pivot(p)).cloned())
            .collect();
        std.sort_by(|a, b| spec.order.compare_paths(a, b));
        let index: HashMap<Path, Mono> =
            std.iter().cloned().enumerate().map(|(i, p)| (p, Mono(i as u32))).collect();

        let trivial = quiver
            .vertex_ids()
            .map(|v| {
                index
                    .get(&Path::trivial(v))
                    .copied()
                    .ok_or_else(|| AlgebraError::NotBasic(format!("id({})", quiver.vertex_name(v))))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in quiver.arrow_ids() {
            if !index.contains_key(&quiver.arrow_path(a)) {
                return Err(AlgebraError::NotBasic(quiver.arrow(a).name.clone()));
            }
        }

        let block_of = |p: &Path| blocks.iter().find(|b| b.col_of.contains_key(p));
        let mut ext = Vec::with_capacity(std.len());
        let mut mul_table = Vec::with_capacity(std.len());
        for b in &std {
            let mut ext_row = Vec::with_capacity(quiver.num_arrows());
            let mut mul_row = Vec::with_capacity(quiver.num_arrows());
            for a in quiver.arrow_ids() {
                let Some(q) = b.extend(quiver, a) else {
                    ext_row.push(None);
                    mul_row.push(AlgebraElement::zero());
                    continue;
                };
                if let Some(&m) = index.get(&q) {
                    ext_row.push(Some(m));
                    mul_row.push(AlgebraElement::monomial(m));
                    continue;
                }
                ext_row.push(None);
                let mut value = AlgebraElement::zero();
                if let Some(block) = block_of(&q) {
                    let col = block.col_of[&q];
                    let row = block
                        .echelon
                        .pivot_row(col)
                        .ok_or_else(|| AlgebraError::Internal("nonstandard path without pivot".into()))?;
                    for (i, c) in row.iter().enumerate() {
                        if i == col || c.is_zero() {
                            continue;
                        }
                        let m = index.get(&block.columns[i]).ok_or_else(|| {
                            AlgebraError::Internal("reduced row has a nonstandard tail".into())
                        })?;
                        add_term(&mut value.terms, field, *m, field.neg(*c));
                    }
                }
                mul_row.push(value);
            }
            ext.push(ext_row);
            mul_table.push(mul_row);
        }

        let mut splits = Vec::with_capacity(std.len());
        for b in &std {
            let mut row = Vec::with_capacity(b.degree() + 1);
            for k in 0..=b.degree() {
                let pre = b.prefix(quiver, k);
                let suf = pre.complement_in(quiver, b).expect("prefix divides");
                match (index.get(&pre), index.get(&suf)) {
                    (Some(&x), Some(&y)) => row.push((x, y)),
                    _ => {
                        return Err(AlgebraError::Internal(format!(
                            "standard path {} has a nonstandard factor",
                            quiver.display_path(b)
                        )))
                    }
                }
            }
            splits.push(row);
        }

        let nilpotency = std.iter().map(|p| p.degree()).max().unwrap_or(0) + 1;
        Ok(Self {
            quiver: quiver.clone(),
            field,
            order: spec.order.clone(),
            std,
            index,
            ext,
            mul_table,
            splits,
            trivial,
            nilpotency,
            truncation,
        })
    }

    /// One block per degree, stopping at the first degree in which every
    /// path is a pivot.
    fn auto_blocks(spec: &AlgebraSpec, relations: &[BTreeMap<Path, Fe>]) -> Result<Vec<IdealBlock>, AlgebraError> {
        for r in relations {
            let mut degs = r.keys().map(|p| p.degree());
            let d0 = degs.next();
            if degs.any(|d| Some(d) != d0) {
                return Err(AlgebraError::NonHomogeneousAuto(display_terms(&spec.quiver, r)));
            }
        }
        let quiver = &spec.quiver;
        let mut blocks: Vec<IdealBlock> = Vec::new();
        for d in 0..=spec.degree_cap {
            let mut block = IdealBlock::new(spec.field, &spec.order, quiver.paths_of_degree(d));
            let mut seeds: Vec<BTreeMap<Path, Fe>> = relations
                .iter()
                .filter(|r| r.keys().next().is_some_and(|p| p.degree() == d))
                .cloned()
                .collect();
            if let Some(prev) = blocks.last() {
                for row in prev.echelon.rows() {
                    let t = prev.terms_of(row);
                    for a in quiver.arrow_ids() {
                        for left in [true, false] {
                            let prod = multiply_terms(quiver, &t, a, left);
                            if !prod.is_empty() {
                                seeds.push(prod);
                            }
                        }
                    }
                }
            }
            for s in &seeds {
                let v = block.vector(s);
                block.echelon.insert(v);
            }
            let done = block.echelon.rank() == block.columns.len();
            blocks.push(block);
            if done {
                return Ok(blocks);
            }
        }
        Err(AlgebraError::DegreeCapExceeded(spec.degree_cap))
    }

    fn truncated_block(spec: &AlgebraSpec, relations: &[BTreeMap<Path, Fe>], n: usize) -> IdealBlock {
        let columns: Vec<Path> = (0..n).flat_map(|d| spec.quiver.paths_of_degree(d)).collect();
        let mut block = IdealBlock::new(spec.field, &spec.order, columns);
        saturate(&spec.quiver, &mut block, relations);
        block
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> &OrderSpec {
        &self.order
    }

    pub fn dim(&self) -> usize {
        self.std.len()
    }

    /// One more than the largest degree of a standard monomial: every path
    /// of this degree vanishes in `A`.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    /// The degree at which paths were truncated while building.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Standard monomials in increasing order.
    pub fn standard_monomials(&self) -> impl Iterator<Item = Mono> + '_ {
        (0..self.std.len() as u32).map(Mono)
    }

    /// The lift of a preferred basis element.
    pub fn path(&self, m: Mono) -> &Path {
        &self.std[m.idx()]
    }

    pub fn degree(&self, m: Mono) -> usize {
        self.std[m.idx()].degree()
    }

    pub fn start(&self, m: Mono) -> VertexId {
        self.std[m.idx()].start()
    }

    pub fn end(&self, m: Mono) -> VertexId {
        self.std[m.idx()].end()
    }

    pub fn lookup(&self, p: &Path) -> Option<Mono> {
        self.index.get(p).copied()
    }

    pub fn is_standard(&self, p: &Path) -> bool {
        self.index.contains_key(p)
    }

    pub fn trivial(&self, v: VertexId) -> Mono {
        self.trivial[v.0 as usize]
    }

    pub fn arrow_mono(&self, a: ArrowId) -> Mono {
        self.index[&self.quiver.arrow_path(a)]
    }

    pub fn monos_from(&self, v: VertexId) -> impl Iterator<Item = Mono> + '_ {
        self.standard_monomials().filter(move |&m| self.start(m) == v)
    }

    pub fn display(&self, m: Mono) -> String {
        self.quiver.display_path(self.path(m)).to_string()
    }

    pub fn mul_table_entry(&self, b: Mono, a: ArrowId) -> &AlgebraElement {
        &self.mul_table[b.idx()][a.0 as usize]
    }

    /// The standard monomial `b*c` when the concatenated path is standard.
    pub fn concat_std(&self, b: Mono, c: Mono) -> Option<Mono> {
        let cp = self.path(c);
        if self.end(b) != cp.start() {
            return None;
        }
        cp.arrows().iter().try_fold(b, |m, a| self.ext[m.idx()][a.0 as usize])
    }

    pub fn is_small_cofactor(&self, b: Mono, c: Mono) -> bool {
        self.concat_std(b, c).is_some()
    }

    /// Prefix/suffix splittings `(p, s)` of `m` with `lambda(p) * lambda(s) = lambda(m)`,
    /// by increasing prefix length.
    pub fn splits(&self, m: Mono) -> &[(Mono, Mono)] {
        &self.splits[m.idx()]
    }

    /// The cofactor `c` with `lambda(b) * lambda(c) = lambda(m)`, if `b` strictly divides `m`.
    pub fn strict_quotient(&self, b: Mono, m: Mono) -> Option<Mono> {
        let k = self.degree(b);
        let s = self.splits(m).get(k)?;
        (s.0 == b).then_some(s.1)
    }

    fn times_arrow(&self, f: &AlgebraElement, a: ArrowId) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (m, c) in f.terms() {
            out.add_scaled(self.field, c, self.mul_table_entry(m, a));
        }
        out
    }

    /// `psi(lambda(b) * lambda(c))`, folding the arrows of `c` through the
    /// multiplication table.
    pub fn mul_monomials(&self, b: Mono, c: Mono) -> AlgebraElement {
        if let Some(m) = self.concat_std(b, c) {
            return AlgebraElement::monomial(m);
        }
        let cp = self.path(c);
        if self.end(b) != cp.start() {
            return AlgebraElement::zero();
        }
        self.right_multiply_path(&AlgebraElement::monomial(b), cp)
    }

    /// `f * psi(p)` for an arbitrary path `p` of the quiver.
    pub fn right_multiply_path(&self, f: &AlgebraElement, p: &Path) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for (m, c) in f.terms() {
            if self.end(m) == p.start() {
                acc.add_term(self.field, m, c);
            }
        }
        for a in p.arrows() {
            if acc.is_zero() {
                break;
            }
            acc = self.times_arrow(&acc, *a);
        }
        acc
    }

    /// The image `psi(p)` of an arbitrary path.
    pub fn psi(&self, p: &Path) -> AlgebraElement {
        self.right_multiply_path(&AlgebraElement::monomial(self.trivial(p.start())), p)
    }

    pub fn multiply(&self, f: &AlgebraElement, g: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (b, x) in f.terms() {
            for (c, y) in g.terms() {
                out.add_scaled(self.field, self.field.mul(x, y), &self.mul_monomials(b, c));
            }
        }
        out
    }

    pub fn classify_cofactor(&self, b: &Path, c: &Path) -> CofactorClass {
        let Some(bm) = self.lookup(b) else {
            return CofactorClass::Invalid(b.clone());
        };
        let Some(cm) = self.lookup(c) else {
            return CofactorClass::Invalid(c.clone());
        };
        self.classify(bm, cm)
    }

    pub fn classify(&self, b: Mono, c: Mono) -> CofactorClass {
        if self.is_small_cofactor(b, c) {
            CofactorClass::Small
        } else {
            CofactorClass::Toppling(self.mul_monomials(b, c).lm())
        }
    }

    /// All small cofactors of `b`, in breadth-first order.
    pub fn small_cofactors(&self, b: Mono) -> Vec<Mono> {
        let start = self.trivial(self.end(b));
        let mut out = vec![start];
        let mut k = 0;
        while k < out.len() {
            let c = out[k];
            k += 1;
            for a in self.quiver.arrows_from(self.end(c)) {
                if let Some(ca) = self.ext[c.idx()][a.0 as usize] {
                    if self.is_small_cofactor(b, ca) {
                        out.push(ca);
                    }
                }
            }
        }
        out
    }

    /// Cofactors of the minimal topplings of `b`, with their toppling values.
    ///
    /// Breadth-first over small cofactors: an extension `c*x` with a standard
    /// path that is no longer small is a minimal toppling cofactor, and
    /// extensions with a nonstandard path are pruned since no standard path
    /// has a nonstandard prefix.
    pub fn minimal_topplings(&self, b: Mono) -> Vec<(Mono, Option<Mono>)> {
        let mut out = Vec::new();
        let mut frontier = vec![self.trivial(self.end(b))];
        while let Some(c) = frontier.pop() {
            let bc = self.concat_std(b, c).expect("frontier holds small cofactors");
            for a in self.quiver.arrows_from(self.end(c)) {
                let Some(ca) = self.ext[c.idx()][a.0 as usize] else {
                    continue;
                };
                if self.ext[bc.idx()][a.0 as usize].is_some() {
                    frontier.push(ca);
                } else {
                    out.push((ca, self.mul_table_entry(bc, a).lm()));
                }
            }
        }
        out.sort();
        out
    }
}

impl AlgebraElement {
    fn add_term(&mut self, field: PrimeField, m: Mono, c: Fe) {
        add_term(&mut self.terms, field, m, c);
    }
}
