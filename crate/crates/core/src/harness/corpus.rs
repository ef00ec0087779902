use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use super::{io, HarnessError};
use crate::config::Limits;
use crate::constructions::{
    direct_product_capped, dorroh_extension, find_automorphisms, matrix_ring, quotient_ring, structure_algebra,
    trivial_extension, truncated_poly_ring, zmod, MatrixShape, PresentedAlgebra, Rng,
};
use crate::ring::{ideal_generated_by, Elem, FiniteRing};

/// How to build one ring. The `Display` form is the recipe syntax accepted
/// by `FromStr`, e.g. `polytrunc(product(zmod(2),zmod(2)),2,1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recipe {
    Zmod(usize),
    Product(Box<Recipe>, Box<Recipe>),
    Matrix(Box<Recipe>, usize),
    Tri(Box<Recipe>, usize),
    /// Congruence 2×2 matrices over the given `Z_{2m}`.
    Cong2(Box<Recipe>),
    TrivExt(Box<Recipe>),
    Dorroh(RngRecipe, usize),
    /// Quotient by the ideal generated by the listed elements.
    Quotient(Box<Recipe>, Vec<Elem>),
    /// `R[x; α]/(x^m)`, `α` the automorphism at this position of
    /// `find_automorphisms` (0 is the identity).
    PolyTrunc(Box<Recipe>, usize, usize),
    /// A built-in presented algebra, by name.
    Alg(String),
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RngRecipe {
    Null(usize),
    Whole(Box<Recipe>),
    Ideal(Box<Recipe>, Vec<Elem>),
}

fn list(v: &[Elem]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Zmod(n) => write!(f, "zmod({n})"),
            Recipe::Product(a, b) => write!(f, "product({a},{b})"),
            Recipe::Matrix(a, k) => write!(f, "matrix({a},{k})"),
            Recipe::Tri(a, k) => write!(f, "tri({a},{k})"),
            Recipe::Cong2(a) => write!(f, "cong2({a})"),
            Recipe::TrivExt(a) => write!(f, "trivext({a})"),
            Recipe::Dorroh(a, m) => write!(f, "dorroh({a},{m})"),
            Recipe::Quotient(a, g) => write!(f, "quotient({a},[{}])", list(g)),
            Recipe::PolyTrunc(a, m, 0) => write!(f, "polytrunc({a},{m})"),
            Recipe::PolyTrunc(a, m, k) => write!(f, "polytrunc({a},{m},{k})"),
            Recipe::Alg(name) => write!(f, "alg({name})"),
            Recipe::File(p) => write!(f, "file({})", p.display()),
        }
    }
}

impl fmt::Display for RngRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RngRecipe::Null(k) => write!(f, "null({k})"),
            RngRecipe::Whole(a) => write!(f, "rng({a})"),
            RngRecipe::Ideal(a, g) => write!(f, "ideal({a},[{}])", list(g)),
        }
    }
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn err(&self, msg: &str) -> HarnessError {
        HarnessError::Recipe(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), HarnessError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        self.pos += len;
        rest[..len].to_string()
    }

    fn number(&mut self) -> Result<usize, HarnessError> {
        let s = self.ident();
        s.parse().map_err(|_| self.err("expected a number"))
    }

    fn numbers(&mut self) -> Result<Vec<usize>, HarnessError> {
        self.eat('[')?;
        let mut out = Vec::new();
        self.skip_ws();
        if self.src[self.pos..].starts_with(']') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            self.skip_ws();
            if self.src[self.pos..].starts_with(',') {
                self.pos += 1;
            } else {
                self.eat(']')?;
                return Ok(out);
            }
        }
    }

    /// Everything up to the matching close parenthesis.
    fn raw_argument(&mut self) -> Result<String, HarnessError> {
        let rest = &self.src[self.pos..];
        let mut depth = 0usize;
        for (i, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => {
                    self.pos += i;
                    return Ok(rest[..i].trim().to_string());
                }
                ')' => depth -= 1,
                _ => {}
            }
        }
        Err(self.err("unterminated argument"))
    }

    fn comma(&mut self) -> Result<(), HarnessError> {
        self.eat(',')
    }

    fn recipe(&mut self) -> Result<Recipe, HarnessError> {
        let head = self.ident();
        self.eat('(')?;
        let r = match head.as_str() {
            "zmod" => Recipe::Zmod(self.number()?),
            "product" => {
                let a = self.recipe()?;
                self.comma()?;
                Recipe::Product(Box::new(a), Box::new(self.recipe()?))
            }
            "matrix" | "tri" => {
                let a = Box::new(self.recipe()?);
                self.comma()?;
                let k = self.number()?;
                if head == "matrix" {
                    Recipe::Matrix(a, k)
                } else {
                    Recipe::Tri(a, k)
                }
            }
            "cong2" => Recipe::Cong2(Box::new(self.recipe()?)),
            "trivext" => Recipe::TrivExt(Box::new(self.recipe()?)),
            "dorroh" => {
                let a = self.rng()?;
                self.comma()?;
                Recipe::Dorroh(a, self.number()?)
            }
            "quotient" => {
                let a = Box::new(self.recipe()?);
                self.comma()?;
                Recipe::Quotient(a, self.numbers()?)
            }
            "polytrunc" => {
                let a = Box::new(self.recipe()?);
                self.comma()?;
                let m = self.number()?;
                self.skip_ws();
                let k = if self.src[self.pos..].starts_with(',') {
                    self.pos += 1;
                    self.number()?
                } else {
                    0
                };
                Recipe::PolyTrunc(a, m, k)
            }
            "alg" => Recipe::Alg(self.raw_argument()?),
            "file" => Recipe::File(PathBuf::from(self.raw_argument()?)),
            _ => return Err(self.err(&format!("unknown recipe `{head}`"))),
        };
        self.eat(')')?;
        Ok(r)
    }

    fn rng(&mut self) -> Result<RngRecipe, HarnessError> {
        let head = self.ident();
        self.eat('(')?;
        let r = match head.as_str() {
            "null" => RngRecipe::Null(self.number()?),
            "rng" => RngRecipe::Whole(Box::new(self.recipe()?)),
            "ideal" => {
                let a = Box::new(self.recipe()?);
                self.comma()?;
                RngRecipe::Ideal(a, self.numbers()?)
            }
            _ => return Err(self.err(&format!("unknown rng recipe `{head}`"))),
        };
        self.eat(')')?;
        Ok(r)
    }
}

impl FromStr for Recipe {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let r = p.recipe()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(r)
    }
}

/// Presented algebras available to `alg(NAME)`.
pub fn builtin_algebras() -> Vec<PresentedAlgebra> {
    let field = |name: &str, p: usize, basis: &[&str], top: &[usize]| {
        // Z_p[t]/(t^d - top(t)): t^i t^j = t^(i+j), reduced by t^d = top.
        let d = basis.len();
        let mut powers: Vec<Vec<usize>> = (0..d).map(|i| (0..d).map(|k| usize::from(k == i)).collect()).collect();
        for _ in d..2 * d - 1 {
            let last = powers.last().unwrap().clone();
            let mut next = vec![0; d];
            for k in 1..d {
                next[k] = last[k - 1];
            }
            for k in 0..d {
                next[k] = (next[k] + last[d - 1] * top[k]) % p;
            }
            powers.push(next);
        }
        PresentedAlgebra {
            name: name.to_string(),
            modulus: p,
            basis: basis.iter().map(|s| s.to_string()).collect(),
            unit: powers[0].clone(),
            products: (0..d).map(|i| (0..d).map(|j| powers[i + j].clone()).collect()).collect(),
        }
    };
    vec![
        PresentedAlgebra::two_generator_truncation(),
        field("GF4", 2, &["1", "t"], &[1, 1]),
        field("GF8", 2, &["1", "t", "t^2"], &[1, 1, 0]),
        field("GF9", 3, &["1", "t"], &[2, 0]),
    ]
}

impl Recipe {
    pub fn build(&self, limits: &Limits) -> Result<FiniteRing, HarnessError> {
        let cap = limits.order_cap;
        let sub = |r: &Recipe| r.build(limits);
        Ok(match self {
            Recipe::Zmod(n) => zmod(*n)?,
            Recipe::Product(a, b) => direct_product_capped(&sub(a)?, &sub(b)?, cap)?,
            Recipe::Matrix(a, k) => matrix_ring(&sub(a)?, *k, MatrixShape::Full, cap)?,
            Recipe::Tri(a, k) => matrix_ring(&sub(a)?, *k, MatrixShape::UpperTriangular, cap)?,
            Recipe::Cong2(a) => matrix_ring(&sub(a)?, 2, MatrixShape::Congruence2, cap)?,
            Recipe::TrivExt(a) => trivial_extension(&sub(a)?, cap)?,
            Recipe::Dorroh(a, m) => {
                let rng = match a {
                    RngRecipe::Null(k) => Rng::null(*k),
                    RngRecipe::Whole(r) => Rng::from_ring(&sub(r)?),
                    RngRecipe::Ideal(r, gens) => {
                        let base = sub(r)?;
                        check_elements(&base, gens)?;
                        Rng::from_ideal(&base, &ideal_generated_by(&base, gens)?)
                    }
                };
                dorroh_extension(&rng, *m, cap)?
            }
            Recipe::Quotient(a, gens) => {
                let base = sub(a)?;
                check_elements(&base, gens)?;
                quotient_ring(&base, &ideal_generated_by(&base, gens)?)?.ring
            }
            Recipe::PolyTrunc(a, m, k) => {
                let base = sub(a)?;
                if *k == 0 {
                    truncated_poly_ring(&base, *m, None, cap)?
                } else {
                    let autos = find_automorphisms(&base, limits.automorphism_cap)?;
                    let alpha = autos.get(*k).ok_or_else(|| {
                        HarnessError::Recipe(format!("{} has {} automorphisms, no index {k}", base.name(), autos.len()))
                    })?;
                    truncated_poly_ring(&base, *m, Some(alpha), cap)?
                }
            }
            Recipe::Alg(name) => {
                let spec = builtin_algebras()
                    .into_iter()
                    .find(|a| a.name == *name)
                    .ok_or_else(|| HarnessError::Recipe(format!("unknown algebra `{name}`")))?;
                structure_algebra(&spec, cap)?
            }
            Recipe::File(p) => io::load_ring(p, limits)?,
        })
    }
}

fn check_elements(r: &FiniteRing, gens: &[Elem]) -> Result<(), HarnessError> {
    match gens.iter().find(|&&g| g >= r.order()) {
        Some(g) => Err(HarnessError::Recipe(format!("element {g} out of range for {}", r.name()))),
        None => Ok(()),
    }
}

/// Corpus expansion parameters.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub max_order: usize,
    pub generators: Vec<Recipe>,
    /// Trivial extensions of every member up to this order are appended
    /// after the generators.
    pub trivext_up_to: usize,
    pub seed_rings: Vec<PathBuf>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            max_order: 1024,
            generators: default_generators(),
            trivext_up_to: 8,
            seed_rings: Vec::new(),
        }
    }
}

impl CorpusSpec {
    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = max_order;
        self
    }

    /// Only the given ring files, no generators.
    pub fn from_files(files: Vec<PathBuf>) -> Self {
        CorpusSpec {
            max_order: usize::MAX,
            generators: Vec::new(),
            trivext_up_to: 0,
            seed_rings: files,
        }
    }
}

fn default_generators() -> Vec<Recipe> {
    use Recipe::*;
    let z = |n| Box::new(Zmod(n));
    let alg = |s: &str| Box::new(Alg(s.to_string()));
    let mut g: Vec<Recipe> = (1..=12).map(Zmod).collect();
    for a in 2..=12 {
        for b in a..=12 {
            if a * b <= 64 {
                g.push(Product(z(a), z(b)));
            }
        }
    }
    for n in [2, 3] {
        g.push(Tri(z(n), 2));
        g.push(Matrix(z(n), 2));
    }
    g.push(Cong2(z(4)));
    g.push(Cong2(z(8)));
    let u2 = || Box::new(Tri(z(2), 2));
    g.extend([
        Dorroh(RngRecipe::Null(2), 2),
        Dorroh(RngRecipe::Null(4), 4),
        Dorroh(RngRecipe::Ideal(z(8), vec![2]), 8),
        Dorroh(RngRecipe::Ideal(u2(), vec![2]), 2),
        Dorroh(RngRecipe::Whole(u2()), 2),
        Dorroh(RngRecipe::Whole(z(4)), 4),
    ]);
    for n in 2..=8usize {
        for m in 2.. {
            if n.pow(m as u32) > 64 {
                break;
            }
            g.push(PolyTrunc(z(n), m, 0));
        }
    }
    let z2z2 = || Box::new(Product(z(2), z(2)));
    g.extend([
        PolyTrunc(z2z2(), 2, 0),
        PolyTrunc(z2z2(), 2, 1),
        PolyTrunc(z2z2(), 3, 0),
        PolyTrunc(z2z2(), 3, 1),
        PolyTrunc(u2(), 2, 0),
        PolyTrunc(u2(), 2, 1),
        PolyTrunc(alg("GF4"), 2, 0),
        PolyTrunc(alg("GF4"), 2, 1),
        PolyTrunc(alg("GF4"), 3, 1),
    ]);
    g.extend(["Z2<x,y>/T", "GF4", "GF8", "GF9"].map(|s| Alg(s.to_string())));
    g
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    /// Unique within the corpus: the ring name, suffixed on collision.
    pub id: String,
    pub recipe: Recipe,
    pub ring: FiniteRing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedRecipe {
    pub recipe: String,
    pub reason: String,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    pub entries: Vec<CorpusEntry>,
    /// Recipes that failed (for example on an order cap), in generator order.
    pub skipped: Vec<SkippedRecipe>,
    /// Recipes whose tables coincide with an earlier member.
    pub duplicates: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifestLine {
    pub id: String,
    pub order: usize,
    pub recipe: String,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn manifest_lines(&self) -> Vec<ManifestLine> {
        self.entries
            .iter()
            .map(|e| ManifestLine {
                id: e.id.clone(),
                order: e.ring.order(),
                recipe: e.recipe.to_string(),
            })
            .collect()
    }

    /// One `id<TAB>order<TAB>recipe` line per member, then skipped recipes.
    pub fn manifest(&self) -> String {
        let mut s = String::new();
        for l in self.manifest_lines() {
            s.push_str(&format!("{}\t{}\t{}\n", l.id, l.order, l.recipe));
        }
        for k in &self.skipped {
            s.push_str(&format!("# skipped {}: {}\n", k.recipe, k.reason));
        }
        s
    }

    fn insert(&mut self, recipe: Recipe, ring: FiniteRing, index: &mut HashMap<(usize, u64), Vec<usize>>) {
        let key = (ring.order(), table_hash(&ring));
        let bucket = index.entry(key).or_default();
        if bucket.iter().any(|&i| self.entries[i].ring.same_tables(&ring)) {
            self.duplicates += 1;
            return;
        }
        bucket.push(self.entries.len());
        let base = ring.name().to_string();
        let mut id = base.clone();
        let mut k = 2;
        while self.entries.iter().any(|e| e.id == id) {
            id = format!("{base}~{k}");
            k += 1;
        }
        self.entries.push(CorpusEntry { id, recipe, ring });
    }
}

fn table_hash(r: &FiniteRing) -> u64 {
    use std::hash::{Hash, Hasher};
    let mut h = std::collections::hash_map::DefaultHasher::new();
    (r.zero(), r.one(), r.add_table(), r.mul_table()).hash(&mut h);
    h.finish()
}

/// Expands the spec in order: generators, then trivial extensions of the
/// small members, then seed files. Members above `max_order` are dropped;
/// failed recipes are recorded and skipped.
pub fn build_corpus(spec: &CorpusSpec, limits: &Limits) -> Corpus {
    let mut corpus = Corpus::default();
    let mut index = HashMap::new();
    let mut add = |corpus: &mut Corpus, recipe: Recipe| match recipe.build(limits) {
        Ok(r) if r.order() <= spec.max_order => corpus.insert(recipe, r, &mut index),
        Ok(_) => {}
        Err(e) => corpus.skipped.push(SkippedRecipe {
            recipe: recipe.to_string(),
            reason: e.to_string(),
        }),
    };
    for r in &spec.generators {
        add(&mut corpus, r.clone());
    }
    let small: Vec<Recipe> = corpus
        .entries
        .iter()
        .filter(|e| e.ring.order() <= spec.trivext_up_to)
        .map(|e| Recipe::TrivExt(Box::new(e.recipe.clone())))
        .collect();
    for r in small {
        add(&mut corpus, r);
    }
    for p in &spec.seed_rings {
        add(&mut corpus, Recipe::File(p.clone()));
    }
    corpus
}
