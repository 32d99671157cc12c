//! Star quivers and octopus bound quivers.
//!
//! A star quiver of type `A = (a_1, …, a_r)` has a central vertex `1` and `r`
//! arms; arm `i` carries vertices `(i,1) … (i,a_i-1)` with arrows
//! `1 → (i,1)` and `(i,j-1) → (i,j)`. The octopus adds a vertex `1*`, arrows
//! `(i,1) → 1*`, and an ideal with two generators supported on the paths
//! `1 → (i,1) → 1*`. The ideal depends on a tuple `Λ` of points of the
//! projective line, but only through its two generators, so the lattice data
//! never sees `Λ`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_ratio, parse_ratio};

/// A vertex of a star quiver or octopus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    /// The central vertex `1`.
    Center,
    /// Vertex `(arm, pos)`, both 1-based.
    Arm { arm: usize, pos: usize },
    /// The extra octopus vertex `1*`.
    Apex,
}

impl Vertex {
    pub fn arm(arm: usize, pos: usize) -> Self {
        Vertex::Arm { arm, pos }
    }

    pub fn is_star(&self) -> bool {
        !matches!(self, Vertex::Apex)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Center => write!(f, "1"),
            Vertex::Arm { arm, pos } => write!(f, "({arm},{pos})"),
            Vertex::Apex => write!(f, "1*"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "1" => Ok(Vertex::Center),
            "1*" => Ok(Vertex::Apex),
            _ => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|x| x.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("bad vertex label {s:?}")))?;
                let (i, j) = inner
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("bad vertex label {s:?}")))?;
                let arm = i.parse().map_err(|_| Error::Parse(format!("bad arm in {s:?}")))?;
                let pos = j.parse().map_err(|_| Error::Parse(format!("bad position in {s:?}")))?;
                if arm == 0 || pos == 0 {
                    return Err(Error::Parse(format!("vertex indices are 1-based: {s:?}")));
                }
                Ok(Vertex::Arm { arm, pos })
            }
        }
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Vertex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The weight tuple `A = (a_1, …, a_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weights(Vec<u32>);

impl Weights {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.len() < 3 {
            return Err(Error::InvalidWeights(format!(
                "need at least 3 arms, got {}",
                a.len()
            )));
        }
        if let Some(x) = a.iter().find(|&&x| x < 2) {
            return Err(Error::InvalidWeights(format!(
                "every weight must be at least 2, got {x}"
            )));
        }
        Ok(Weights(a))
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Number of vertices on arm `i` (1-based), i.e. `a_i - 1`.
    pub fn arm_len(&self, i: usize) -> usize {
        self.0[i - 1] as usize - 1
    }

    /// Rank of the star lattice, `1 + Σ(a_i - 1)`.
    pub fn star_rank(&self) -> usize {
        1 + self.0.iter().map(|&a| a as usize - 1).sum::<usize>()
    }

    /// Orbifold Euler characteristic `2 + Σ(1/a_i - 1)`.
    pub fn chi(&self) -> BigRational {
        let mut acc = BigRational::from_integer(BigInt::from(2));
        for &a in &self.0 {
            acc += BigRational::new(BigInt::one(), BigInt::from(a)) - BigRational::one();
        }
        acc
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let a = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidWeights(format!("not an integer: {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Weights::new(a)
    }
}

impl<'de> Deserialize<'de> for Weights {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let a = Vec::<u32>::deserialize(d)?;
        Weights::new(a).map_err(serde::de::Error::custom)
    }
}

/// A point of the projective line as an exact homogeneous pair `(x : y)`.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    x: BigRational,
    y: BigRational,
}

impl ProjectivePoint {
    pub fn new(x: BigRational, y: BigRational) -> Result<Self> {
        if x.is_zero() && y.is_zero() {
            return Err(Error::InvalidLambda("(0 : 0) is not a point".into()));
        }
        Ok(ProjectivePoint { x, y })
    }

    pub fn infinity() -> Self {
        ProjectivePoint { x: BigRational::one(), y: BigRational::zero() }
    }

    pub fn affine(t: BigRational) -> Self {
        ProjectivePoint { x: t, y: BigRational::one() }
    }

    pub fn coords(&self) -> (&BigRational, &BigRational) {
        (&self.x, &self.y)
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }
}

impl PartialEq for ProjectivePoint {
    fn eq(&self, other: &Self) -> bool {
        &self.x * &other.y == &other.x * &self.y
    }
}

impl Eq for ProjectivePoint {}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else {
            write!(f, "{}", format_ratio(&(&self.x / &self.y)))
        }
    }
}

impl FromStr for ProjectivePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(ProjectivePoint::infinity());
        }
        parse_ratio::<BigInt>(t)
            .map(ProjectivePoint::affine)
            .ok_or_else(|| Error::InvalidLambda(format!("not a point of P^1: {s:?}")))
    }
}

/// The tuple `Λ = (λ_1, …, λ_r)`, normalized so that `λ_1 = ∞`, `λ_2 = 0`, `λ_3 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTuple(Vec<ProjectivePoint>);

impl LambdaTuple {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidLambda(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        let expected = [
            ProjectivePoint::infinity(),
            ProjectivePoint::affine(BigRational::zero()),
            ProjectivePoint::affine(BigRational::one()),
        ];
        for (k, e) in expected.iter().enumerate() {
            if points[k] != *e {
                return Err(Error::InvalidLambda(format!(
                    "entry {} must be {e}, got {}",
                    k + 1,
                    points[k]
                )));
            }
        }
        for i in 0..points.len() {
            for j in 0..i {
                if points[i] == points[j] {
                    return Err(Error::InvalidLambda(format!(
                        "entries {} and {} coincide ({})",
                        j + 1,
                        i + 1,
                        points[i]
                    )));
                }
            }
        }
        Ok(LambdaTuple(points))
    }

    /// The forced tuple `(∞, 0, 1)` for three arms.
    pub fn default_three() -> Self {
        LambdaTuple(vec![
            ProjectivePoint::infinity(),
            ProjectivePoint::affine(BigRational::zero()),
            ProjectivePoint::affine(BigRational::one()),
        ])
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Text form per entry: `inf`, `p/q` or `p`.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }
}

impl FromStr for LambdaTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let pts = s.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        LambdaTuple::new(pts)
    }
}

impl fmt::Display for LambdaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_strings().join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuiverKind {
    Star,
    Octopus,
}

/// A star quiver or octopus with its vertices in canonical order.
///
/// Canonical order is `1`, then `(1,1) … (1,a_1-1)`, `(2,1) …`, …, then `1*`.
/// It is a topological order of every arrow and relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiver {
    kind: QuiverKind,
    weights: Weights,
    lambda: Option<LambdaTuple>,
    vertices: Vec<Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
    relations: BTreeMap<(Vertex, Vertex), u32>,
}

fn star_parts(w: &Weights) -> (Vec<Vertex>, Vec<(Vertex, Vertex)>) {
    let mut vertices = vec![Vertex::Center];
    let mut arrows = Vec::new();
    for i in 1..=w.r() {
        let mut prev = Vertex::Center;
        for j in 1..=w.arm_len(i) {
            let v = Vertex::arm(i, j);
            vertices.push(v);
            arrows.push((prev, v));
            prev = v;
        }
    }
    (vertices, arrows)
}

type Parts = (Vec<Vertex>, Vec<(Vertex, Vertex)>, BTreeMap<(Vertex, Vertex), u32>);

fn octopus_parts(w: &Weights) -> Parts {
    let (mut vertices, mut arrows) = star_parts(w);
    vertices.push(Vertex::Apex);
    for i in 1..=w.r() {
        arrows.push((Vertex::arm(i, 1), Vertex::Apex));
    }
    let mut relations = BTreeMap::new();
    relations.insert((Vertex::Center, Vertex::Apex), 2);
    (vertices, arrows, relations)
}

impl BoundQuiver {
    pub fn build_star(w: &Weights) -> Self {
        let (vertices, arrows) = star_parts(w);
        BoundQuiver {
            kind: QuiverKind::Star,
            weights: w.clone(),
            lambda: None,
            vertices,
            arrows,
            relations: BTreeMap::new(),
        }
    }

    /// Builds the octopus. `lambda` may be omitted only for three arms.
    pub fn build_octopus(w: &Weights, lambda: Option<LambdaTuple>) -> Result<Self> {
        let lambda = match lambda {
            Some(l) => l,
            None if w.r() == 3 => LambdaTuple::default_three(),
            None => {
                return Err(Error::InvalidLambda(format!(
                    "{} arms need an explicit lambda tuple",
                    w.r()
                )))
            }
        };
        if lambda.len() != w.r() {
            return Err(Error::InvalidLambda(format!(
                "lambda has {} entries but there are {} arms",
                lambda.len(),
                w.r()
            )));
        }
        let (vertices, arrows, relations) = octopus_parts(w);
        Ok(BoundQuiver {
            kind: QuiverKind::Octopus,
            weights: w.clone(),
            lambda: Some(lambda),
            vertices,
            arrows,
            relations,
        })
    }

    /// Assembles a quiver from explicit parts, rejecting anything that is not
    /// exactly the star quiver or octopus of the given weights.
    pub fn from_parts(
        kind: QuiverKind,
        weights: Weights,
        lambda: Option<LambdaTuple>,
        vertices: Vec<Vertex>,
        arrows: Vec<(Vertex, Vertex)>,
        relations: BTreeMap<(Vertex, Vertex), u32>,
    ) -> Result<Self> {
        let expected = match kind {
            QuiverKind::Star => BoundQuiver::build_star(&weights),
            QuiverKind::Octopus => BoundQuiver::build_octopus(&weights, lambda.clone())?,
        };
        if vertices != expected.vertices {
            return Err(Error::InvalidQuiver("vertex list is not canonical".into()));
        }
        let mut got = arrows.clone();
        let mut want = expected.arrows.clone();
        got.sort();
        want.sort();
        if got != want {
            return Err(Error::InvalidQuiver("arrow multiset differs from the quiver type".into()));
        }
        if relations != expected.relations {
            return Err(Error::InvalidQuiver("relation multiplicities differ from the quiver type".into()));
        }
        Ok(expected)
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn lambda(&self) -> Option<&LambdaTuple> {
        self.lambda.as_ref()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn relations(&self) -> &BTreeMap<(Vertex, Vertex), u32> {
        &self.relations
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|x| x == v)
    }

    pub fn arrow_count(&self, from: &Vertex, to: &Vertex) -> usize {
        self.arrows.iter().filter(|(s, t)| s == from && t == to).count()
    }

    pub fn relation_count(&self, from: &Vertex, to: &Vertex) -> u32 {
        self.relations.get(&(*from, *to)).copied().unwrap_or(0)
    }

    /// Whether every arrow and relation goes forward in canonical order.
    pub fn is_topologically_ordered(&self) -> bool {
        let idx = |v: &Vertex| self.index_of(v).expect("arrow endpoint is a vertex");
        self.arrows.iter().all(|(s, t)| idx(s) < idx(t))
            && self.relations.keys().all(|(s, t)| idx(s) < idx(t))
    }
}
