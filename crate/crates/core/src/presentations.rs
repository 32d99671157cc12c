//! Group presentations as data, checked against matrix assignments.
//!
//! Relations are generated from the Cartan matrix, so a new weight tuple
//! needs no new code. Derived letters (`σ_v`, `ρ̃_v`) are expanded into
//! primitive letters when a spec is built. A report that passes shows that
//! the assignment defines a homomorphism; it says nothing about injectivity.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ktheory::twist_matrix;
use crate::lattice::RootLattice;
use crate::matrix::Matrix;
use crate::quiver::{LambdaTuple, Vertex, Weights};
use crate::scalar::Scalar;
use crate::weyl::{simple_reflection, translation_element};

/// A word in named generators; exponents are `±1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupWord(pub Vec<(String, i8)>);

impl GroupWord {
    pub fn one() -> Self {
        GroupWord(Vec::new())
    }

    pub fn gen(label: impl Into<String>) -> Self {
        GroupWord(vec![(label.into(), 1)])
    }

    pub fn of(labels: &[&str]) -> Self {
        GroupWord(labels.iter().map(|s| (s.to_string(), 1)).collect())
    }

    pub fn then(mut self, other: &GroupWord) -> Self {
        self.0.extend(other.0.iter().cloned());
        self
    }

    pub fn inverse(&self) -> Self {
        GroupWord(self.0.iter().rev().map(|(s, e)| (s.clone(), -e)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        GroupWord(self.0.iter().cloned().cycle().take(self.0.len() * k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn rename(&self, f: &impl Fn(&str) -> String) -> Self {
        GroupWord(self.0.iter().map(|(s, e)| (f(s), *e)).collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(s, e)| if *e < 0 { format!("{s}^-1") } else { s.clone() })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Relation {
    pub tag: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
}

impl Relation {
    fn new(tag: String, lhs: GroupWord, rhs: GroupWord) -> Self {
        Relation { tag, lhs, rhs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresentationKind {
    StarCoxeter,
    Semidirect,
    GeneralizedCoxeterW,
    ArtinA,
    VanDerLekE,
    PowerForms,
}

impl PresentationKind {
    pub fn short(&self) -> &'static str {
        match self {
            PresentationKind::StarCoxeter => "C",
            PresentationKind::Semidirect => "SD",
            PresentationKind::GeneralizedCoxeterW => "W",
            PresentationKind::ArtinA => "A",
            PresentationKind::VanDerLekE => "E",
            PresentationKind::PowerForms => "EQ",
        }
    }
}

impl Serialize for PresentationKind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.short())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSpec {
    pub kind: PresentationKind,
    pub weights: Weights,
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl PresentationSpec {
    pub fn tagged(&self, family: &str) -> Vec<&Relation> {
        self.relations
            .iter()
            .filter(|r| r.tag.split('/').next() == Some(family))
            .collect()
    }
}

pub fn label(prefix: &str, v: &Vertex) -> String {
    format!("{prefix}{v}")
}

fn pair_tag(family: &str, v: &Vertex, u: &Vertex) -> String {
    format!("{family}/v={v},v'={u}")
}

/// Unordered pairs `v < u` in canonical order with their Cartan entry.
fn pairs(l: &RootLattice<i64>) -> Vec<(Vertex, Vertex, i64)> {
    let vs = l.labels();
    let mut out = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            out.push((vs[a], vs[b], *l.cartan().get(a, b)));
        }
    }
    out
}

/// Ordered pairs `v ≠ u`.
fn ordered_pairs(l: &RootLattice<i64>) -> Vec<(Vertex, Vertex, i64)> {
    let vs = l.labels();
    let mut out = Vec::new();
    for a in 0..vs.len() {
        for b in 0..vs.len() {
            if a != b {
                out.push((vs[a], vs[b], *l.cartan().get(a, b)));
            }
        }
    }
    out
}

fn commute(x: &GroupWord, y: &GroupWord) -> (GroupWord, GroupWord) {
    (x.clone().then(y), y.clone().then(x))
}

fn braid(x: &GroupWord, y: &GroupWord) -> (GroupWord, GroupWord) {
    (x.clone().then(y).then(x), y.clone().then(x).then(y))
}

fn first_arm(i: usize) -> Vertex {
    Vertex::arm(i, 1)
}

/// `σ_1 = p1 p1*` and `σ_{(i,j)} = p(i,j) σ_prev p(i,j) σ_prev⁻¹` in the letters `prefix`.
pub fn derived_letter(prefix: &str, v: &Vertex) -> GroupWord {
    let base = GroupWord::gen(label(prefix, &Vertex::Center)).then(&GroupWord::gen(label(prefix, &Vertex::Apex)));
    match *v {
        Vertex::Center => base,
        Vertex::Arm { arm, pos } => {
            let mut prev = base;
            for j in 1..=pos {
                let g = GroupWord::gen(label(prefix, &Vertex::arm(arm, j)));
                prev = g.clone().then(&prev).then(&g).then(&prev.inverse());
            }
            prev
        }
        Vertex::Apex => panic!("no derived letter at 1*"),
    }
}

/// Coxeter relations of the star diagram.
pub fn star_coxeter_spec(w: &Weights) -> PresentationSpec {
    let l = RootLattice::<i64>::star(w);
    let g = |v: &Vertex| GroupWord::gen(label("w", v));
    let mut rel = Vec::new();
    for v in l.labels() {
        rel.push(Relation::new(format!("C0/v={v}"), g(v).pow(2), GroupWord::one()));
    }
    for (v, u, c) in pairs(&l) {
        let (lhs, rhs, fam) = match c {
            0 => {
                let (a, b) = commute(&g(&v), &g(&u));
                (a, b, "C1.0")
            }
            -1 => {
                let (a, b) = braid(&g(&v), &g(&u));
                (a, b, "C1.1")
            }
            _ => continue,
        };
        rel.push(Relation::new(pair_tag(fam, &v, &u), lhs, rhs));
    }
    PresentationSpec {
        kind: PresentationKind::StarCoxeter,
        weights: w.clone(),
        generators: l.labels().iter().map(|v| label("w", v)).collect(),
        relations: rel,
    }
}

/// Generators `w_v, t_v` over the star with the seven semidirect families `SD.a` … `SD.g`.
pub fn semidirect_spec(w: &Weights) -> PresentationSpec {
    let l = RootLattice::<i64>::star(w);
    let wv = |v: &Vertex| GroupWord::gen(label("w", v));
    let tv = |v: &Vertex| GroupWord::gen(label("t", v));
    let mut rel = Vec::new();
    for v in l.labels() {
        rel.push(Relation::new(format!("SD.a/v={v}"), wv(v).pow(2), GroupWord::one()));
    }
    for (v, u, c) in pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&wv(&v), &wv(&u));
                rel.push(Relation::new(pair_tag("SD.b", &v, &u), a, b));
            }
            -1 => {
                let (a, b) = braid(&wv(&v), &wv(&u));
                rel.push(Relation::new(pair_tag("SD.c", &v, &u), a, b));
            }
            _ => {}
        }
    }
    for (v, u, _) in pairs(&l) {
        let (a, b) = commute(&tv(&v), &tv(&u));
        rel.push(Relation::new(pair_tag("SD.d", &v, &u), a, b));
    }
    for v in l.labels() {
        rel.push(Relation::new(
            format!("SD.e/v={v}"),
            wv(v).then(&tv(v)).then(&wv(v)),
            tv(v).inverse(),
        ));
    }
    for (v, u, c) in ordered_pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&wv(&v), &tv(&u));
                rel.push(Relation::new(pair_tag("SD.f", &v, &u), a, b));
            }
            -1 => rel.push(Relation::new(
                pair_tag("SD.g", &v, &u),
                wv(&v).then(&tv(&u)).then(&wv(&v)),
                tv(&u).then(&tv(&v)),
            )),
            _ => {}
        }
    }
    let mut generators: Vec<String> = l.labels().iter().map(|v| label("w", v)).collect();
    generators.extend(l.labels().iter().map(|v| label("t", v)));
    PresentationSpec { kind: PresentationKind::Semidirect, weights: w.clone(), generators, relations: rel }
}

/// Generalized Coxeter relations `W0` … `W3` on the octopus diagram.
pub fn generalized_coxeter_spec_w(w: &Weights) -> Result<PresentationSpec> {
    let l = RootLattice::<i64>::octopus(w, default_lambda(w))?;
    let g = |v: &Vertex| GroupWord::gen(label("w", v));
    let mut rel = Vec::new();
    for v in l.labels() {
        rel.push(Relation::new(format!("W0/v={v}"), g(v).pow(2), GroupWord::one()));
    }
    for (v, u, c) in pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("W1.0", &v, &u), a, b));
            }
            -1 => {
                let (a, b) = braid(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("W1.1", &v, &u), a, b));
            }
            _ => {}
        }
    }
    let s1 = derived_letter("w", &Vertex::Center);
    let r = w.r();
    for i in 1..=r {
        let x = g(&first_arm(i));
        rel.push(Relation::new(
            format!("W2/i={i}"),
            x.clone().then(&s1).then(&x).then(&s1),
            s1.clone().then(&x).then(&s1).then(&x),
        ));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let (a, b) = commute(&g(&first_arm(i)), &derived_letter("w", &first_arm(j)));
            rel.push(Relation::new(format!("W3.1/i={i},j={j}"), a, b));
            let (a, b) = commute(&g(&first_arm(j)), &derived_letter("w", &first_arm(i)));
            rel.push(Relation::new(format!("W3.2/i={i},j={j}"), a, b));
        }
    }
    Ok(PresentationSpec {
        kind: PresentationKind::GeneralizedCoxeterW,
        weights: w.clone(),
        generators: l.labels().iter().map(|v| label("w", v)).collect(),
        relations: rel,
    })
}

/// Artin-type relations `A1.0` … `A3` on the octopus diagram; no involutions.
pub fn artin_spec(w: &Weights) -> Result<PresentationSpec> {
    let l = RootLattice::<i64>::octopus(w, default_lambda(w))?;
    let g = |v: &Vertex| GroupWord::gen(label("g", v));
    let rho = |v: &Vertex| derived_letter("g", v);
    let mut rel = Vec::new();
    for (v, u, c) in pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("A1.0", &v, &u), a, b));
            }
            -1 => {
                let (a, b) = braid(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("A1.1", &v, &u), a, b));
            }
            _ => {}
        }
    }
    let r1 = rho(&Vertex::Center);
    let r = w.r();
    for i in 1..=r {
        let x = g(&first_arm(i));
        rel.push(Relation::new(
            format!("A2/i={i}"),
            x.clone().then(&r1).then(&x).then(&r1),
            r1.clone().then(&x).then(&r1).then(&x),
        ));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let (a, b) = commute(&g(&first_arm(i)), &rho(&first_arm(j)));
            rel.push(Relation::new(format!("A3.1/i={i},j={j}"), a, b));
            let (a, b) = commute(&g(&first_arm(j)), &rho(&first_arm(i)));
            rel.push(Relation::new(format!("A3.2/i={i},j={j}"), a, b));
        }
    }
    Ok(PresentationSpec {
        kind: PresentationKind::ArtinA,
        weights: w.clone(),
        generators: l.labels().iter().map(|v| label("g", v)).collect(),
        relations: rel,
    })
}

/// Generators `g_v, rho_v` over the star with families `E1`, `E1-2`, `Ec`, `E3`, `Ea`.
pub fn van_der_lek_spec(w: &Weights) -> PresentationSpec {
    let l = RootLattice::<i64>::star(w);
    let g = |v: &Vertex| GroupWord::gen(label("g", v));
    let rho = |v: &Vertex| GroupWord::gen(label("rho", v));
    let mut rel = Vec::new();
    for (v, u, c) in pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("E1", &v, &u), a, b));
            }
            -1 => {
                let (a, b) = braid(&g(&v), &g(&u));
                rel.push(Relation::new(pair_tag("E1-2", &v, &u), a, b));
            }
            _ => {}
        }
    }
    for (v, u, _) in pairs(&l) {
        let (a, b) = commute(&rho(&v), &rho(&u));
        rel.push(Relation::new(pair_tag("Ec", &v, &u), a, b));
    }
    for (v, u, c) in ordered_pairs(&l) {
        match c {
            0 => {
                let (a, b) = commute(&g(&v), &rho(&u));
                rel.push(Relation::new(pair_tag("E3", &v, &u), a, b));
            }
            -1 => rel.push(Relation::new(
                pair_tag("Ea", &v, &u),
                g(&v).then(&rho(&u)).then(&g(&v)),
                rho(&u).then(&rho(&v)),
            )),
            _ => {}
        }
    }
    let mut generators: Vec<String> = l.labels().iter().map(|v| label("g", v)).collect();
    generators.extend(l.labels().iter().map(|v| label("rho", v)));
    PresentationSpec { kind: PresentationKind::VanDerLekE, weights: w.clone(), generators, relations: rel }
}

/// Both sides of each power-form equivalence over the `w̃` letters.
///
/// `EQ1/i`: the `W2` identity and `(w1 w(i,1) w1* w(i,1))³ = 1`.
/// `EQ2/i,j`: the first `W3` identity and `(w(i,1) w1 w(i,1) w1* w(j,1) w1*)² = 1`.
/// `EQ3/i,j`: the second `W3` identity and `(w(i,1) w1* w(i,1) w1 w(j,1) w1)² = 1`.
pub fn power_form_spec(w: &Weights) -> Result<PresentationSpec> {
    let base = generalized_coxeter_spec_w(w)?;
    let find = |tag: &str| base.relations.iter().find(|r| r.tag == tag).cloned().expect("tag present");
    let n = |v: Vertex| label("w", &v);
    let (c, a) = (n(Vertex::Center), n(Vertex::Apex));
    let mut rel = Vec::new();
    let r = w.r();
    for i in 1..=r {
        let x = n(first_arm(i));
        let s = find(&format!("W2/i={i}"));
        rel.push(Relation::new(format!("EQ1.sigma/i={i}"), s.lhs, s.rhs));
        rel.push(Relation::new(
            format!("EQ1.power/i={i}"),
            GroupWord::of(&[&c, &x, &a, &x]).pow(3),
            GroupWord::one(),
        ));
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let (x, y) = (n(first_arm(i)), n(first_arm(j)));
            let s = find(&format!("W3.1/i={i},j={j}"));
            rel.push(Relation::new(format!("EQ2.sigma/i={i},j={j}"), s.lhs, s.rhs));
            rel.push(Relation::new(
                format!("EQ2.power/i={i},j={j}"),
                GroupWord::of(&[&x, &c, &x, &a, &y, &a]).pow(2),
                GroupWord::one(),
            ));
            let s = find(&format!("W3.2/i={i},j={j}"));
            rel.push(Relation::new(format!("EQ3.sigma/i={i},j={j}"), s.lhs, s.rhs));
            rel.push(Relation::new(
                format!("EQ3.power/i={i},j={j}"),
                GroupWord::of(&[&x, &a, &x, &c, &y, &c]).pow(2),
                GroupWord::one(),
            ));
        }
    }
    Ok(PresentationSpec {
        kind: PresentationKind::PowerForms,
        weights: w.clone(),
        generators: base.generators,
        relations: rel,
    })
}

/// Replaces letters by words; letters without an entry are kept.
pub fn substitute(
    spec: &PresentationSpec,
    map: &BTreeMap<String, GroupWord>,
    generators: Vec<String>,
) -> PresentationSpec {
    let sub = |w: &GroupWord| {
        let mut out = GroupWord::one();
        for (s, e) in &w.0 {
            let piece = match map.get(s) {
                Some(x) if *e < 0 => x.inverse(),
                Some(x) => x.clone(),
                None => GroupWord(vec![(s.clone(), *e)]),
            };
            out = out.then(&piece);
        }
        out
    };
    PresentationSpec {
        kind: spec.kind,
        weights: spec.weights.clone(),
        generators,
        relations: spec
            .relations
            .iter()
            .map(|r| Relation::new(r.tag.clone(), sub(&r.lhs), sub(&r.rhs)))
            .collect(),
    }
}

/// `rho_v ↦ ρ̃_v` in the `g` letters of the octopus, for pulling the
/// van der Lek relations back along `g_v ↦ g̃_v`.
pub fn rho_tilde_map(w: &Weights) -> BTreeMap<String, GroupWord> {
    let l = RootLattice::<i64>::star(w);
    l.labels().iter().map(|v| (label("rho", v), derived_letter("g", v))).collect()
}

/// Adjoins `g̃_v² = 1` to the Artin relations and renames `g → w`,
/// `A → W`, giving relation-for-relation the `W` spec when the two agree.
pub fn involution_quotient(artin: &PresentationSpec) -> PresentationSpec {
    let rename = |s: &str| match s.strip_prefix('g') {
        Some(rest) => format!("w{rest}"),
        None => s.to_string(),
    };
    let mut relations: Vec<Relation> = artin
        .generators
        .iter()
        .map(|gname| {
            let v = rename(gname);
            let tag = format!("W0/v={}", &v[1..]);
            Relation::new(tag, GroupWord::gen(v).pow(2), GroupWord::one())
        })
        .collect();
    relations.extend(artin.relations.iter().map(|r| {
        let tag = match r.tag.strip_prefix('A') {
            Some(rest) => format!("W{rest}"),
            None => r.tag.clone(),
        };
        Relation::new(tag, r.lhs.rename(&rename), r.rhs.rename(&rename))
    }));
    PresentationSpec {
        kind: PresentationKind::GeneralizedCoxeterW,
        weights: artin.weights.clone(),
        generators: artin.generators.iter().map(|g| rename(g)).collect(),
        relations,
    }
}

/// Same generators and the same set of tagged relations.
pub fn structurally_equal(a: &PresentationSpec, b: &PresentationSpec) -> bool {
    let norm = |s: &PresentationSpec| {
        let mut g = s.generators.clone();
        g.sort();
        let mut r = s.relations.clone();
        r.sort();
        (g, r)
    };
    a.kind == b.kind && a.weights == b.weights && norm(a) == norm(b)
}

pub(crate) fn default_lambda(w: &Weights) -> Option<LambdaTuple> {
    // Λ never enters lattice data; any valid tuple will do here.
    if w.r() == 3 {
        return None;
    }
    let pts = (0..w.r())
        .map(|k| match k {
            0 => "inf".to_string(),
            k => (k - 1).to_string(),
        })
        .collect::<Vec<_>>()
        .join(",");
    Some(pts.parse().expect("distinct normalized points"))
}

pub type Assignment<T> = BTreeMap<String, Matrix<T>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct RelationOutcome<T: Scalar> {
    pub tag: String,
    pub holds: bool,
    /// Evaluated sides when the relation fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(Matrix<T>, Matrix<T>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct VerificationReport<T: Scalar> {
    pub spec: PresentationKind,
    pub weights: Weights,
    pub relations: Vec<RelationOutcome<T>>,
    pub pass: bool,
}

impl<T: Scalar> VerificationReport<T> {
    pub fn failures(&self) -> Vec<&RelationOutcome<T>> {
        self.relations.iter().filter(|r| !r.holds).collect()
    }
}

/// Evaluates both sides of every relation under `assignment` and compares exactly.
pub fn verify<T: Scalar>(spec: &PresentationSpec, assignment: &Assignment<T>) -> Result<VerificationReport<T>> {
    let mut dim = None;
    for g in &spec.generators {
        let m = assignment.get(g).ok_or_else(|| Error::MissingGenerator(g.clone()))?;
        let n = *dim.get_or_insert(m.rows());
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: if m.rows() != n { m.rows() } else { m.cols() } });
        }
    }
    let n = dim.unwrap_or(0);
    let mut inverses: BTreeMap<&str, Matrix<T>> = BTreeMap::new();
    for r in &spec.relations {
        for (s, e) in r.lhs.0.iter().chain(&r.rhs.0) {
            let m = assignment.get(s).ok_or_else(|| Error::MissingGenerator(s.clone()))?;
            if *e < 0 && !inverses.contains_key(s.as_str()) {
                let inv = m.inverse().ok_or_else(|| Error::NotInvertible(s.clone()))?;
                inverses.insert(s, inv);
            }
        }
    }
    let eval = |w: &GroupWord| {
        let mut acc = Matrix::identity(n);
        for (s, e) in &w.0 {
            let m = if *e < 0 { &inverses[s.as_str()] } else { &assignment[s] };
            acc = &acc * m;
        }
        acc
    };
    let relations: Vec<RelationOutcome<T>> = spec
        .relations
        .iter()
        .map(|r| {
            let (a, b) = (eval(&r.lhs), eval(&r.rhs));
            let holds = a == b;
            RelationOutcome { tag: r.tag.clone(), holds, witness: if holds { None } else { Some((a, b)) } }
        })
        .collect();
    let pass = relations.iter().all(|r| r.holds);
    Ok(VerificationReport { spec: spec.kind, weights: spec.weights.clone(), relations, pass })
}

/// `prefix + v ↦ r_v` for every basis vertex.
pub fn reflection_assignment<T: Scalar>(l: &RootLattice<T>, prefix: &str) -> Assignment<T> {
    l.labels()
        .iter()
        .map(|v| (label(prefix, v), simple_reflection(l, v).expect("basis root").into_matrix()))
        .collect()
}

/// `prefix + v ↦ τ̃_v` for every star vertex of an octopus.
pub fn translation_assignment<T: Scalar>(l: &RootLattice<T>, prefix: &str) -> Result<Assignment<T>> {
    l.labels()
        .iter()
        .filter(|v| v.is_star())
        .map(|v| Ok((label(prefix, v), translation_element(l, v)?.into_matrix())))
        .collect()
}

/// `prefix + v ↦` the twist matrix at the simple class of `v`.
pub fn twist_assignment<T: Scalar>(l: &RootLattice<T>, prefix: &str) -> Result<Assignment<T>> {
    l.labels()
        .iter()
        .map(|v| Ok((label(prefix, v), twist_matrix(l, &l.simple_root(v)?)?)))
        .collect()
}

fn affine<T: Scalar>(lin: &Matrix<T>, shift: &[T]) -> Matrix<T> {
    let n = lin.rows();
    Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => lin.get(i, j).clone(),
        (true, false) => shift[i].clone(),
        (false, true) => T::zero(),
        (false, false) => T::one(),
    })
}

/// The semidirect product `W ⋉ K_0` of a star lattice acting affinely on
/// `K_0 ⊕ Z`: `w_v ↦ (r_v, 0)`, `τ_v ↦ (Id, α_v)`.
pub fn affine_semidirect_assignment<T: Scalar>(
    star: &RootLattice<T>,
    w_prefix: &str,
    t_prefix: &str,
) -> Assignment<T> {
    let n = star.rank();
    let zero = vec![T::zero(); n];
    let mut out = Assignment::new();
    for (i, v) in star.labels().iter().enumerate() {
        let r = simple_reflection(star, v).expect("basis root").into_matrix();
        out.insert(label(w_prefix, v), affine(&r, &zero));
        out.insert(label(t_prefix, v), affine(&Matrix::identity(n), &star.unit(i)));
    }
    out
}

/// `w̃_v ↦ w_v` for star vertices and `w̃_{1*} ↦ w_1 τ_1` in the affine picture.
pub fn affine_octopus_assignment<T: Scalar>(star: &RootLattice<T>, prefix: &str) -> Assignment<T> {
    let semi = affine_semidirect_assignment(star, "w", "t");
    let mut out: Assignment<T> = star
        .labels()
        .iter()
        .map(|v| (label(prefix, v), semi[&label("w", v)].clone()))
        .collect();
    let c = Vertex::Center;
    out.insert(label(prefix, &Vertex::Apex), &semi[&label("w", &c)] * &semi[&label("t", &c)]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn w(s: &str) -> Weights {
        s.parse().unwrap()
    }

    #[test]
    fn star_coxeter_counts() {
        let s = star_coxeter_spec(&w("2,2,2"));
        assert_eq!((s.tagged("C0").len(), s.tagged("C1.1").len(), s.tagged("C1.0").len()), (4, 3, 3));
        let s = star_coxeter_spec(&w("2,2,3"));
        assert_eq!((s.tagged("C0").len(), s.tagged("C1.1").len(), s.tagged("C1.0").len()), (5, 4, 6));
        assert!(s.relations.iter().any(|r| r.tag == "C1.1/v=(3,1),v'=(3,2)"));
    }

    #[test]
    fn semidirect_contents() {
        let s = semidirect_spec(&w("2,2,2"));
        assert_eq!(s.tagged("SD.d").len(), 6);
        let g = s.relations.iter().find(|r| r.tag == "SD.g/v=1,v'=(1,1)").unwrap();
        assert_eq!(g.lhs, GroupWord::of(&["w1", "t(1,1)", "w1"]));
        assert_eq!(g.rhs, GroupWord::of(&["t(1,1)", "t1"]));
        let s = semidirect_spec(&w("2,2,3"));
        let f = s.relations.iter().find(|r| r.tag == "SD.f/v=(1,1),v'=(3,2)").unwrap();
        assert_eq!(f.lhs, GroupWord::of(&["w(1,1)", "t(3,2)"]));
    }

    #[test]
    fn w_spec_counts() {
        let s = generalized_coxeter_spec_w(&w("2,2,2")).unwrap();
        assert_eq!(s.tagged("W3.1").len() + s.tagged("W3.2").len(), 6);
        assert_eq!(s.tagged("W2").len(), 3);
        assert!(s.relations.iter().all(|r| !r.tag.contains("v=1,v'=1*")));
    }

    #[test]
    fn artin_and_van_der_lek_shapes() {
        let a = artin_spec(&w("2,2,2")).unwrap();
        assert!(a.relations.iter().all(|r| !r.rhs.is_empty()));
        let a = artin_spec(&w("2,2,3")).unwrap();
        assert!(a.tagged("A3.1").iter().all(|r| !r.lhs.0.iter().any(|(s, _)| s == "g(3,2)")));
        let e = van_der_lek_spec(&w("2,2,2"));
        assert_eq!(e.tagged("Ec").len(), 6);
    }

    #[test]
    fn reflections_satisfy_w_relations() {
        let ws = w("2,2,2");
        let l = RootLattice::<BigInt>::octopus(&ws, None).unwrap();
        let rep = verify(&generalized_coxeter_spec_w(&ws).unwrap(), &reflection_assignment(&l, "w")).unwrap();
        assert!(rep.pass, "{:?}", rep.failures());
    }

    #[test]
    fn identity_breaks_a_braid() {
        let ws = w("2,2,2");
        let l = RootLattice::<BigInt>::star(&ws);
        let mut a = reflection_assignment(&l, "w");
        a.insert("w1".into(), Matrix::identity(4));
        let rep = verify(&star_coxeter_spec(&ws), &a).unwrap();
        assert!(!rep.pass);
        let bad = rep.failures();
        assert!(bad.iter().any(|r| r.tag == "C1.1/v=1,v'=(1,1)" && r.witness.is_some()));
    }

    #[test]
    fn verify_errors() {
        let ws = w("2,2,2");
        let l = RootLattice::<BigInt>::star(&ws);
        let mut a = reflection_assignment(&l, "w");
        a.remove("w(2,1)");
        assert_eq!(verify(&star_coxeter_spec(&ws), &a), Err(Error::MissingGenerator("w(2,1)".into())));
        let mut a = reflection_assignment(&l, "w");
        a.insert("w1".into(), Matrix::identity(3));
        assert!(matches!(verify(&star_coxeter_spec(&ws), &a), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn quotient_of_artin_is_w() {
        for s in ["2,2,2", "2,3,4", "2,2,2,2"] {
            let ws = w(s);
            let q = involution_quotient(&artin_spec(&ws).unwrap());
            assert!(structurally_equal(&q, &generalized_coxeter_spec_w(&ws).unwrap()), "{s}");
        }
    }

    #[test]
    fn report_json_shape() {
        let ws = w("2,2,2");
        let l = RootLattice::<BigInt>::star(&ws);
        let rep = verify(&star_coxeter_spec(&ws), &reflection_assignment(&l, "w")).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["spec"], "C");
        assert_eq!(v["weights"], serde_json::json!([2, 2, 2]));
        assert_eq!(v["relations"][0], serde_json::json!({"tag": "C0/v=1", "holds": true}));
        assert_eq!(v["pass"], true);
    }
}
