//! The problem-file format: a hand-written recursive-descent parser with
//! line/column diagnostics, a canonical printer, and resolution into an
//! algebra, a free module and a list of generators.
//!
//! ```text
//! field 2
//! quiver { vertex v  arrow x v v }
//! relations { x*x*x }
//! nilpotency auto
//! order negdeglex
//! module { gen m1 at v }
//! generators { g1 = m1*x }
//! ```

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraSpec, BasicAlgebra, Nilpotency, PathPoly, DEFAULT_DEGREE_CAP};
use crate::field::{Fe, PrimeField};
use crate::module::{act_path, FreeModule, ModMon, ModuleElement};
use crate::ordering::{DegreeMode, OrderSpec};
use crate::quiver::{Path, Quiver, VertexId};

pub const KEYWORDS: &[&str] = &[
    "field", "quiver", "vertex", "arrow", "relations", "nilpotency", "auto", "order", "negdeglex", "deglex",
    "precedence", "module", "gen", "at", "generators", "id",
];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A name with its source position; equality ignores the position.
#[derive(Debug, Clone)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

impl Ident {
    pub fn new(name: &str) -> Self {
        Self { name: name.to_string(), pos: Pos::default() }
    }
}

impl PartialEq for Ident {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Ident {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Arrow(Ident),
    Id(Ident),
}

/// `[-] [INT *] factor * factor ...`; `negative` is the sign token before it.
#[derive(Debug, Clone)]
pub struct Term {
    pub negative: bool,
    pub coeff: Option<u64>,
    pub coeff_pos: Pos,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone)]
pub struct ModTerm {
    pub negative: bool,
    pub coeff: Option<u64>,
    pub coeff_pos: Pos,
    pub gen: Ident,
    pub factors: Vec<Factor>,
}

// positions are diagnostics only
impl PartialEq for Term {
    fn eq(&self, o: &Self) -> bool {
        (self.negative, self.coeff, &self.factors) == (o.negative, o.coeff, &o.factors)
    }
}

impl Eq for Term {}

impl PartialEq for ModTerm {
    fn eq(&self, o: &Self) -> bool {
        (self.negative, self.coeff, &self.gen, &self.factors) == (o.negative, o.coeff, &o.gen, &o.factors)
    }
}

impl Eq for ModTerm {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpotencyDecl {
    Auto,
    Bound(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderDecl {
    pub mode: DegreeMode,
    /// Least to greatest; empty means declaration order.
    pub precedence: Vec<Ident>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenDecl {
    pub name: Ident,
    pub vertex: Ident,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedElement {
    pub name: Ident,
    pub terms: Vec<ModTerm>,
}

/// Parsed problem file. Optional blocks default to: no relations,
/// automatic nilpotency, `negdeglex`, rank 0, no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub field: u64,
    pub vertices: Vec<Ident>,
    pub arrows: Vec<ArrowDecl>,
    pub relations: Option<Vec<Vec<Term>>>,
    pub nilpotency: Option<NilpotencyDecl>,
    pub order: Option<OrderDecl>,
    pub module: Option<Vec<GenDecl>>,
    pub generators: Option<Vec<NamedElement>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("semantic error at {pos} (`{id}`): {message}")]
pub struct SemanticError {
    pub id: String,
    pub pos: Pos,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "warning at {}: {}", self.pos, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Semantic(#[from] SemanticError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(u64),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            let n = s.parse().map_err(|_| ParseError { pos, message: format!("integer `{s}` is too large") })?;
            out.push((Tok::Int(n), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_' || **d == '\'') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Word(s), pos));
        } else if "{}();+-*=".contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(ParseError { pos, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: String) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), message })
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(s) if s == w)
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn keyword(&mut self, w: &str) -> Result<Pos, ParseError> {
        if self.is_word(w) {
            Ok(self.bump().1)
        } else {
            self.error(format!("expected `{w}`, found {}", self.peek()))
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected `{c}`, found {}", self.peek()))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Tok::Int(n) => {
                let n = *n;
                self.bump();
                Ok(n)
            }
            t => self.error(format!("expected an integer, found {t}")),
        }
    }

    fn ident(&mut self, what: &str) -> Result<Ident, ParseError> {
        match self.peek() {
            Tok::Word(w) if KEYWORDS.contains(&w.as_str()) => {
                self.error(format!("expected {what}, found reserved keyword `{w}`"))
            }
            Tok::Word(w) => {
                let name = w.clone();
                let pos = self.bump().1;
                Ok(Ident { name, pos })
            }
            t => self.error(format!("expected {what}, found {t}")),
        }
    }

    fn file(&mut self) -> Result<ProblemFile, ParseError> {
        self.keyword("field").map_err(|e| ParseError { message: "a problem file must start with `field`".into(), ..e })?;
        let field = self.int()?;
        let mut file = ProblemFile {
            field,
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: None,
            nilpotency: None,
            order: None,
            module: None,
            generators: None,
        };
        let mut seen_quiver = false;
        loop {
            let pos = self.pos();
            let word = match self.peek() {
                Tok::Eof => break,
                Tok::Word(w) => w.clone(),
                t => return self.error(format!("expected a block keyword, found {t}")),
            };
            let dup = |present: bool| -> Result<(), ParseError> {
                match present {
                    true => Err(ParseError { pos, message: format!("duplicate `{word}` block") }),
                    false => Ok(()),
                }
            };
            match word.as_str() {
                "quiver" => {
                    dup(seen_quiver)?;
                    seen_quiver = true;
                    self.quiver(&mut file)?;
                }
                "relations" => {
                    dup(file.relations.is_some())?;
                    file.relations = Some(self.relations()?);
                }
                "nilpotency" => {
                    dup(file.nilpotency.is_some())?;
                    self.bump();
                    file.nilpotency = Some(if self.is_word("auto") {
                        self.bump();
                        NilpotencyDecl::Auto
                    } else {
                        NilpotencyDecl::Bound(self.int()? as usize)
                    });
                }
                "order" => {
                    dup(file.order.is_some())?;
                    file.order = Some(self.order()?);
                }
                "module" => {
                    dup(file.module.is_some())?;
                    file.module = Some(self.module()?);
                }
                "generators" => {
                    dup(file.generators.is_some())?;
                    file.generators = Some(self.generators()?);
                }
                other => return self.error(format!("unknown block `{other}`")),
            }
        }
        if !seen_quiver {
            return self.error("missing `quiver` block".into());
        }
        Ok(file)
    }

    fn quiver(&mut self, file: &mut ProblemFile) -> Result<(), ParseError> {
        self.keyword("quiver")?;
        self.sym('{')?;
        loop {
            if self.is_word("vertex") {
                self.bump();
                file.vertices.push(self.ident("a vertex name")?);
            } else if self.is_word("arrow") {
                self.bump();
                let name = self.ident("an arrow name")?;
                let source = self.ident("a source vertex")?;
                let target = self.ident("a target vertex")?;
                file.arrows.push(ArrowDecl { name, source, target });
            } else if self.is_sym('}') {
                self.bump();
                return Ok(());
            } else {
                return self.error(format!("expected `vertex`, `arrow` or `}}`, found {}", self.peek()));
            }
        }
    }

    /// `{ poly (; poly)* }`, tolerating an empty block and a trailing `;`.
    fn relations(&mut self) -> Result<Vec<Vec<Term>>, ParseError> {
        self.keyword("relations")?;
        self.sym('{')?;
        let mut out = Vec::new();
        while !self.is_sym('}') {
            out.push(self.poly()?);
            if !self.is_sym(';') {
                break;
            }
            self.bump();
        }
        self.sym('}')?;
        Ok(out)
    }

    fn sign_and_coeff(&mut self, first: bool) -> Result<(bool, Option<u64>, Pos), ParseError> {
        let negative = if first {
            false
        } else if self.is_sym('-') {
            self.bump();
            true
        } else {
            self.sym('+')?;
            false
        };
        let pos = self.pos();
        let coeff = if let Tok::Int(n) = *self.peek() {
            self.bump();
            self.sym('*')?;
            Some(n)
        } else {
            None
        };
        Ok((negative, coeff, pos))
    }

    fn poly(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        loop {
            let (negative, coeff, coeff_pos) = self.sign_and_coeff(terms.is_empty())?;
            let factors = self.pathexpr()?;
            terms.push(Term { negative, coeff, coeff_pos, factors });
            if !(self.is_sym('+') || self.is_sym('-')) {
                return Ok(terms);
            }
        }
    }

    fn pathexpr(&mut self) -> Result<Vec<Factor>, ParseError> {
        let mut out = vec![self.factor()?];
        while self.is_sym('*') {
            self.bump();
            out.push(self.factor()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        if self.is_word("id") {
            self.bump();
            self.sym('(')?;
            let v = self.ident("a vertex name")?;
            self.sym(')')?;
            Ok(Factor::Id(v))
        } else {
            Ok(Factor::Arrow(self.ident("an arrow name or `id(...)`")?))
        }
    }

    fn order(&mut self) -> Result<OrderDecl, ParseError> {
        self.keyword("order")?;
        let mode = match self.peek() {
            Tok::Word(w) if w == "negdeglex" || w == "deglex" => w.parse().expect("keyword"),
            t => return self.error(format!("expected `negdeglex` or `deglex`, found {t}")),
        };
        self.bump();
        let mut precedence = Vec::new();
        if self.is_word("precedence") {
            self.bump();
            precedence.push(self.ident("an arrow name")?);
            while matches!(self.peek(), Tok::Word(w) if !KEYWORDS.contains(&w.as_str())) {
                precedence.push(self.ident("an arrow name")?);
            }
        }
        Ok(OrderDecl { mode, precedence })
    }

    fn module(&mut self) -> Result<Vec<GenDecl>, ParseError> {
        self.keyword("module")?;
        self.sym('{')?;
        let mut out = Vec::new();
        while self.is_word("gen") {
            self.bump();
            let name = self.ident("a generator name")?;
            self.keyword("at")?;
            let vertex = self.ident("a vertex name")?;
            out.push(GenDecl { name, vertex });
        }
        if !self.is_sym('}') {
            return self.error(format!("expected `gen` or `}}`, found {}", self.peek()));
        }
        self.bump();
        Ok(out)
    }

    fn generators(&mut self) -> Result<Vec<NamedElement>, ParseError> {
        self.keyword("generators")?;
        self.sym('{')?;
        let mut out = Vec::new();
        while !self.is_sym('}') {
            let name = self.ident("an element name")?;
            self.sym('=')?;
            out.push(NamedElement { name, terms: self.modpoly()? });
            if !self.is_sym(';') {
                break;
            }
            self.bump();
        }
        self.sym('}')?;
        Ok(out)
    }

    fn modpoly(&mut self) -> Result<Vec<ModTerm>, ParseError> {
        let mut terms = Vec::new();
        loop {
            let (negative, coeff, coeff_pos) = self.sign_and_coeff(terms.is_empty())?;
            let gen = self.ident("a module generator")?;
            let factors = if self.is_sym('*') {
                self.bump();
                self.pathexpr()?
            } else {
                Vec::new()
            };
            terms.push(ModTerm { negative, coeff, coeff_pos, gen, factors });
            if !(self.is_sym('+') || self.is_sym('-')) {
                return Ok(terms);
            }
        }
    }
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    p.file()
}

// ---------------------------------------------------------------- printer

fn write_factors(out: &mut String, factors: &[Factor]) {
    let parts: Vec<String> = factors
        .iter()
        .map(|f| match f {
            Factor::Arrow(a) => a.name.clone(),
            Factor::Id(v) => format!("id({})", v.name),
        })
        .collect();
    out.push_str(&parts.join("*"));
}

fn write_head(out: &mut String, first: bool, negative: bool, coeff: Option<u64>) {
    if !first {
        out.push_str(if negative { " - " } else { " + " });
    }
    if let Some(c) = coeff {
        out.push_str(&format!("{c}*"));
    }
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = format!("field {}\nquiver {{\n", self.field);
        for v in &self.vertices {
            out.push_str(&format!("  vertex {}\n", v.name));
        }
        for a in &self.arrows {
            out.push_str(&format!("  arrow {} {} {}\n", a.name.name, a.source.name, a.target.name));
        }
        out.push_str("}\n");
        if let Some(rels) = &self.relations {
            out.push_str("relations {\n");
            for (i, r) in rels.iter().enumerate() {
                out.push_str("  ");
                for (k, t) in r.iter().enumerate() {
                    write_head(&mut out, k == 0, t.negative, t.coeff);
                    write_factors(&mut out, &t.factors);
                }
                out.push_str(if i + 1 < rels.len() { ";\n" } else { "\n" });
            }
            out.push_str("}\n");
        }
        match &self.nilpotency {
            Some(NilpotencyDecl::Auto) => out.push_str("nilpotency auto\n"),
            Some(NilpotencyDecl::Bound(n)) => out.push_str(&format!("nilpotency {n}\n")),
            None => {}
        }
        if let Some(o) = &self.order {
            out.push_str(&format!("order {}", o.mode.keyword()));
            if !o.precedence.is_empty() {
                out.push_str(" precedence");
                for a in &o.precedence {
                    out.push_str(&format!(" {}", a.name));
                }
            }
            out.push('\n');
        }
        if let Some(m) = &self.module {
            out.push_str("module {\n");
            for g in m {
                out.push_str(&format!("  gen {} at {}\n", g.name.name, g.vertex.name));
            }
            out.push_str("}\n");
        }
        if let Some(gens) = &self.generators {
            out.push_str("generators {\n");
            for (i, g) in gens.iter().enumerate() {
                out.push_str(&format!("  {} = ", g.name.name));
                for (k, t) in g.terms.iter().enumerate() {
                    write_head(&mut out, k == 0, t.negative, t.coeff);
                    out.push_str(&t.gen.name);
                    if !t.factors.is_empty() {
                        out.push('*');
                        write_factors(&mut out, &t.factors);
                    }
                }
                out.push_str(if i + 1 < gens.len() { ";\n" } else { "\n" });
            }
            out.push_str("}\n");
        }
        f.write_str(&out)
    }
}

// ---------------------------------------------------------------- resolution

/// A resolved problem: the algebra, the free module `F` and the named
/// generators of `M`.
#[derive(Debug, Clone)]
pub struct Instance {
    pub algebra: BasicAlgebra,
    pub module: FreeModule,
    pub generator_names: Vec<String>,
    pub generators: Vec<ModuleElement>,
    pub warnings: Vec<Warning>,
}

fn semantic(id: &Ident, message: impl Into<String>) -> SemanticError {
    SemanticError { id: id.name.clone(), pos: id.pos, message: message.into() }
}

fn coefficient(
    field: PrimeField,
    negative: bool,
    coeff: Option<u64>,
    pos: Pos,
    warnings: &mut Vec<Warning>,
) -> Fe {
    let c = coeff.unwrap_or(1);
    let p = field.characteristic() as u64;
    if c >= p {
        warnings.push(Warning { pos, message: format!("coefficient {c} reduced mod {p} to {}", c % p) });
    }
    let c = field.element((c % p) as i64);
    if negative {
        field.neg(c)
    } else {
        c
    }
}

/// The path of a product of factors; `id(v)` composes like a trivial path.
fn resolve_path(quiver: &Quiver, factors: &[Factor], start: Option<(VertexId, &Ident)>) -> Result<Path, SemanticError> {
    let mut path: Option<Path> = start.map(|(v, _)| Path::trivial(v));
    for f in factors {
        let (next, id) = match f {
            Factor::Arrow(a) => match quiver.arrow_id(&a.name) {
                Ok(id) => (quiver.arrow_path(id), a),
                Err(_) => return Err(semantic(a, "unknown arrow")),
            },
            Factor::Id(v) => match quiver.vertex(&v.name) {
                Ok(id) => (Path::trivial(id), v),
                Err(_) => return Err(semantic(v, "unknown vertex")),
            },
        };
        path = Some(match path {
            None => next,
            Some(p) => match p.compose(&next) {
                Some(q) => q,
                None => {
                    let found = quiver.vertex_name(next.start());
                    let expected = quiver.vertex_name(p.end());
                    return Err(semantic(id, format!("vertex mismatch: a path at `{expected}` cannot continue with `{}` at `{found}`", id.name)));
                }
            },
        });
    }
    Ok(path.expect("a path expression has at least one factor"))
}

impl ProblemFile {
    pub fn quiver(&self) -> Result<Quiver, SemanticError> {
        let mut q = Quiver::new();
        for v in &self.vertices {
            if KEYWORDS.contains(&v.name.as_str()) || q.add_vertex(&v.name).is_err() {
                return Err(semantic(v, "duplicate vertex"));
            }
        }
        for a in &self.arrows {
            for v in [&a.source, &a.target] {
                if q.vertex(&v.name).is_err() {
                    return Err(semantic(v, "unknown vertex"));
                }
            }
            if q.add_arrow(&a.name.name, &a.source.name, &a.target.name).is_err() {
                return Err(semantic(&a.name, "duplicate arrow"));
            }
        }
        Ok(q)
    }

    /// Builds the algebra only.
    pub fn algebra(&self, degree_cap: usize) -> Result<(BasicAlgebra, Vec<Warning>), ProblemError> {
        let mut warnings = Vec::new();
        let field = PrimeField::new(self.field).map_err(|e| SemanticError {
            id: self.field.to_string(),
            pos: Pos { line: 1, col: 7 },
            message: e.to_string(),
        })?;
        let quiver = self.quiver()?;
        if quiver.num_vertices() == 0 {
            return Err(AlgebraError::EmptyQuiver.into());
        }
        let mut relations = Vec::new();
        for r in self.relations.iter().flatten() {
            let mut terms = Vec::new();
            for t in r {
                let c = coefficient(field, t.negative, t.coeff, t.coeff_pos, &mut warnings);
                terms.push((c, resolve_path(&quiver, &t.factors, None)?));
            }
            relations.push(PathPoly::new(terms));
        }
        let mode = self.order.as_ref().map_or(DegreeMode::NegativeDegree, |o| o.mode);
        let order = match &self.order {
            Some(o) if !o.precedence.is_empty() => {
                let mut ids = Vec::new();
                for a in &o.precedence {
                    match quiver.arrow_id(&a.name) {
                        Ok(id) => ids.push(id),
                        Err(_) => return Err(semantic(a, "unknown arrow").into()),
                    }
                }
                if ids.len() != quiver.num_arrows() {
                    return Err(semantic(&o.precedence[0], "precedence must list every arrow exactly once").into());
                }
                OrderSpec::with_precedence(mode, &ids)
                    .map_err(|m| semantic(&o.precedence[0], m))?
            }
            _ => OrderSpec::new(mode, &quiver),
        };
        let nilpotency = match self.nilpotency {
            None | Some(NilpotencyDecl::Auto) => Nilpotency::Auto,
            Some(NilpotencyDecl::Bound(n)) => Nilpotency::Bound(n),
        };
        let spec = AlgebraSpec { quiver, field, relations, nilpotency, order, degree_cap };
        Ok((BasicAlgebra::build(&spec)?, warnings))
    }

    pub fn resolve(&self) -> Result<Instance, ProblemError> {
        self.resolve_with_cap(DEFAULT_DEGREE_CAP)
    }

    pub fn resolve_with_cap(&self, degree_cap: usize) -> Result<Instance, ProblemError> {
        let (algebra, mut warnings) = self.algebra(degree_cap)?;
        let quiver = algebra.quiver();
        let field = algebra.field();
        let mut gens: Vec<(String, VertexId)> = Vec::new();
        for g in self.module.iter().flatten() {
            if gens.iter().any(|(n, _)| *n == g.name.name) {
                return Err(semantic(&g.name, "duplicate module generator").into());
            }
            match quiver.vertex(&g.vertex.name) {
                Ok(v) => gens.push((g.name.name.clone(), v)),
                Err(_) => return Err(semantic(&g.vertex, "unknown vertex").into()),
            }
        }
        let module = FreeModule::new(gens);
        let mut names: Vec<String> = Vec::new();
        let mut elements = Vec::new();
        for e in self.generators.iter().flatten() {
            if names.contains(&e.name.name) {
                return Err(semantic(&e.name, "duplicate element name").into());
            }
            let mut f = ModuleElement::zero();
            for t in &e.terms {
                let Some(k) = module.generators().iter().position(|(n, _)| *n == t.gen.name) else {
                    return Err(semantic(&t.gen, "unknown module generator").into());
                };
                let c = coefficient(field, t.negative, t.coeff, t.coeff_pos, &mut warnings);
                let v = module.vertex(k);
                let path = resolve_path(quiver, &t.factors, Some((v, &t.gen)))?;
                let unit = ModuleElement::term(ModMon::new(k, algebra.trivial(v)), Fe::ONE);
                f.add_scaled(field, c, &act_path(&algebra, &unit, &path));
            }
            names.push(e.name.name.clone());
            elements.push(f);
        }
        Ok(Instance { algebra, module, generator_names: names, generators: elements, warnings })
    }
}

/// Parses and resolves in one step.
pub fn load_problem(text: &str, degree_cap: usize) -> Result<Instance, ProblemError> {
    parse_problem(text)?.resolve_with_cap(degree_cap)
}
