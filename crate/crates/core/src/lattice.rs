//! Grothendieck lattice data of a star quiver or octopus.
//!
//! The simple modules give the basis. The Euler matrix is
//! `C[v][w] = δ_vw − #arrows(v→w) + #relations(v→w)`, which is unit upper
//! triangular in canonical order because the algebra has global dimension at
//! most two. The Cartan matrix is `I = C + Cᵀ`.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{dot, int_serde, Matrix};
use crate::quiver::{BoundQuiver, LambdaTuple, QuiverKind, Vertex, Weights};
use crate::scalar::{int, Scalar};

/// A lattice vector in the canonical simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root<T>(pub Vec<T>);

impl<T: Scalar> Root<T> {
    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn neg(&self) -> Self {
        Root(self.0.iter().map(|x| -x.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Root<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<T: Scalar> Serialize for Root<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        int_serde::serialize_vec(&self.0, s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Root<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        int_serde::deserialize_vec(d).map(Root)
    }
}

/// Euler matrix of a bound quiver in canonical order.
pub fn euler_matrix<T: Scalar>(q: &BoundQuiver) -> Matrix<T> {
    let vs = q.vertices();
    Matrix::from_fn(vs.len(), vs.len(), |i, j| {
        let delta = if i == j { 1 } else { 0 };
        let arrows = q.arrow_count(&vs[i], &vs[j]) as i64;
        let relations = q.relation_count(&vs[i], &vs[j]) as i64;
        int(delta - arrows + relations)
    })
}

/// Cartan matrix `C + Cᵀ`.
pub fn cartan_matrix<T: Scalar>(q: &BoundQuiver) -> Matrix<T> {
    let c = euler_matrix::<T>(q);
    &c + &c.transpose()
}

/// Orbifold Euler characteristic `χ_A = 2 + Σ(1/a_i − 1)`.
pub fn chi_a(w: &Weights) -> BigRational {
    w.chi()
}

/// Primitive integer basis of the radical `{x : I·x = 0}`.
pub fn radical_basis<T: Scalar>(cartan: &Matrix<T>) -> Vec<Vec<T>> {
    cartan.saturated_kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLattice<T> {
    kind: QuiverKind,
    weights: Weights,
    labels: Vec<Vertex>,
    euler: Matrix<T>,
    cartan: Matrix<T>,
}

impl<T: Scalar> RootLattice<T> {
    pub fn from_quiver(q: &BoundQuiver) -> Self {
        let euler = euler_matrix(q);
        let cartan = &euler + &euler.transpose();
        RootLattice {
            kind: q.kind(),
            weights: q.weights().clone(),
            labels: q.vertices().to_vec(),
            euler,
            cartan,
        }
    }

    pub fn star(w: &Weights) -> Self {
        RootLattice::from_quiver(&BoundQuiver::build_star(w))
    }

    pub fn octopus(w: &Weights, lambda: Option<LambdaTuple>) -> Result<Self> {
        Ok(RootLattice::from_quiver(&BoundQuiver::build_octopus(w, lambda)?))
    }

    /// A rank-`n` lattice with zero form and no named basis; only useful as a
    /// degenerate test case.
    pub fn trivial(n: usize) -> Self {
        RootLattice {
            kind: QuiverKind::Star,
            weights: Weights::new(vec![2, 2, 2]).expect("static weights"),
            labels: Vec::new(),
            euler: Matrix::identity(n),
            cartan: Matrix::zeros(n, n),
        }
    }

    pub fn kind(&self) -> QuiverKind {
        self.kind
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn rank(&self) -> usize {
        self.euler.rows()
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    pub fn euler(&self) -> &Matrix<T> {
        &self.euler
    }

    pub fn cartan(&self) -> &Matrix<T> {
        &self.cartan
    }

    pub fn index_of(&self, v: &Vertex) -> Result<usize> {
        self.labels
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::UnknownGenerator(v.to_string()))
    }

    pub fn unit(&self, i: usize) -> Vec<T> {
        let mut e = vec![T::zero(); self.rank()];
        e[i] = T::one();
        e
    }

    pub fn simple_root(&self, v: &Vertex) -> Result<Root<T>> {
        Ok(Root(self.unit(self.index_of(v)?)))
    }

    pub fn basis(&self) -> Vec<Root<T>> {
        (0..self.rank()).map(|i| Root(self.unit(i))).collect()
    }

    /// Cartan form `I(x, y)`.
    pub fn form(&self, x: &[T], y: &[T]) -> T {
        self.cartan.bilinear(x, y)
    }

    /// Euler form `χ(x, y) = xᵀ C y`.
    pub fn euler_form(&self, x: &[T], y: &[T]) -> T {
        self.euler.bilinear(x, y)
    }

    /// `I(x, α_i)` without building the unit vector.
    pub fn form_with_basis(&self, x: &[T], i: usize) -> T {
        dot(x, self.cartan.row(i))
    }

    pub fn is_octopus(&self) -> bool {
        self.kind == QuiverKind::Octopus
    }

    fn apex(&self) -> Result<usize> {
        if !self.is_octopus() {
            return Err(Error::NotOctopus);
        }
        self.index_of(&Vertex::Apex).map_err(|_| Error::NotOctopus)
    }

    /// `δ = α_{1*} − α_1`.
    pub fn delta(&self) -> Result<Root<T>> {
        let apex = self.apex()?;
        let center = self.index_of(&Vertex::Center)?;
        let mut d = vec![T::zero(); self.rank()];
        d[apex] = T::one();
        d[center] = -T::one();
        Ok(Root(d))
    }

    pub fn radical_basis(&self) -> Vec<Vec<T>> {
        radical_basis(&self.cartan)
    }

    /// The star lattice underlying an octopus, with the same vertex order minus `1*`.
    pub fn star_lattice(&self) -> Result<RootLattice<T>> {
        self.apex()?;
        Ok(RootLattice::star(&self.weights))
    }

    /// Coordinates in the split basis `{α_v : v ∈ T_A} ∪ {δ}`, using
    /// `α_{1*} = α_1 + δ`. Returns the star part and the δ-coordinate.
    pub fn to_split(&self, x: &[T]) -> Result<(Vec<T>, T)> {
        let apex = self.apex()?;
        let center = self.index_of(&Vertex::Center)?;
        let n = x[apex].clone();
        let mut star: Vec<T> = x.iter().take(apex).cloned().collect();
        star[center] = star[center].clone() + n.clone();
        Ok((star, n))
    }

    pub fn from_split(&self, star: &[T], n: &T) -> Result<Vec<T>> {
        let apex = self.apex()?;
        let center = self.index_of(&Vertex::Center)?;
        if star.len() != apex {
            return Err(Error::DimensionMismatch { expected: apex, found: star.len() });
        }
        let mut x = star.to_vec();
        x[center] = x[center].clone() - n.clone();
        x.push(n.clone());
        Ok(x)
    }

    /// Columns are the split basis vectors in canonical coordinates (δ last).
    pub fn split_basis(&self) -> Result<Matrix<T>> {
        let apex = self.apex()?;
        let mut cols: Vec<Vec<T>> = (0..apex).map(|i| self.unit(i)).collect();
        cols.push(self.delta()?.0);
        Ok(Matrix::from_columns(&cols))
    }
}
