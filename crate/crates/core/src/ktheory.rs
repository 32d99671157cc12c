//! Numerically exceptional collections in `K_0` and the braid action on them.
//!
//! Mutation formulas, with `χ` the Euler form:
//!
//! * `b_i`:  `(x_i, x_{i+1}) ↦ (x_{i+1}, χ(x_i, x_{i+1}) x_{i+1} − x_i)`
//! * `b_i⁻¹`: `(x_i, x_{i+1}) ↦ (χ(x_i, x_{i+1}) x_i − x_{i+1}, x_i)`
//! * `e_i`:  `x_i ↦ −x_i`
//!
//! On an exceptional pair these agree with `−r_{x_{i+1}}(x_i)` and
//! `−r_{x_i}(x_{i+1})`.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Root, RootLattice};
use crate::matrix::{int_serde, Matrix};
use crate::scalar::{int, Scalar};
use crate::weyl::{reflection, WeylElement};

/// One generator of `B_μ ⋉ Z^μ`. Indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidGen {
    B(usize),
    BInv(usize),
    E(usize),
}

impl fmt::Display for BraidGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidGen::B(i) => write!(f, "b{i}"),
            BraidGen::BInv(i) => write!(f, "b{i}^-1"),
            BraidGen::E(i) => write!(f, "e{i}"),
        }
    }
}

impl FromStr for BraidGen {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("bad braid letter {s:?}"));
        let index = |x: &str| x.parse::<usize>().map_err(|_| bad());
        if let Some(rest) = t.strip_prefix('e') {
            return Ok(BraidGen::E(index(rest)?));
        }
        let rest = t.strip_prefix('b').ok_or_else(bad)?;
        match rest.strip_suffix("^-1") {
            Some(i) => Ok(BraidGen::BInv(index(i)?)),
            None => Ok(BraidGen::B(index(rest)?)),
        }
    }
}

/// Parses a word such as `b1,b2^-1,e3` or `b1 b2^-1 e3`.
pub fn parse_braid_word(s: &str) -> Result<Vec<BraidGen>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(str::parse)
        .collect()
}

/// First violation of numerical exceptionality, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub enum Witness<T> {
    /// `χ(x_i, x_i) ≠ 1`.
    Norm {
        index: usize,
        #[serde(with = "int_serde")]
        value: T,
    },
    /// `χ(x_later, x_earlier) ≠ 0`.
    Backward {
        later: usize,
        earlier: usize,
        #[serde(with = "int_serde")]
        value: T,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCollection<T> {
    lattice: RootLattice<T>,
    classes: Vec<Vec<T>>,
}

impl<T: Scalar> KCollection<T> {
    pub fn new(lattice: &RootLattice<T>, classes: Vec<Vec<T>>) -> Result<Self> {
        if let Some(c) = classes.iter().find(|c| c.len() != lattice.rank()) {
            return Err(Error::DimensionMismatch { expected: lattice.rank(), found: c.len() });
        }
        Ok(KCollection { lattice: lattice.clone(), classes })
    }

    /// Classes of the simple modules in canonical order.
    pub fn simples(lattice: &RootLattice<T>) -> Self {
        let classes = (0..lattice.rank()).map(|i| lattice.unit(i)).collect();
        KCollection { lattice: lattice.clone(), classes }
    }

    pub fn lattice(&self) -> &RootLattice<T> {
        &self.lattice
    }

    pub fn classes(&self) -> &[Vec<T>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn as_roots(&self) -> Vec<Root<T>> {
        self.classes.iter().cloned().map(Root).collect()
    }

    /// `G[i][j] = χ(x_i, x_j)`.
    pub fn gram(&self) -> Matrix<T> {
        let n = self.classes.len();
        Matrix::from_fn(n, n, |i, j| self.lattice.euler_form(&self.classes[i], &self.classes[j]))
    }

    /// `None` when the Gram matrix is unit upper triangular.
    pub fn exceptional_witness(&self) -> Result<Option<Witness<T>>> {
        let mu = self.lattice.rank();
        if self.classes.len() != mu {
            return Err(Error::RankMismatch { expected: mu, found: self.classes.len() });
        }
        let g = self.gram();
        for i in 0..mu {
            if !g.get(i, i).is_one() {
                return Ok(Some(Witness::Norm { index: i + 1, value: g.get(i, i).clone() }));
            }
        }
        for j in 0..mu {
            for i in 0..j {
                if !g.get(j, i).is_zero() {
                    return Ok(Some(Witness::Backward { later: j + 1, earlier: i + 1, value: g.get(j, i).clone() }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_numerically_exceptional(&self) -> Result<bool> {
        Ok(self.exceptional_witness()?.is_none())
    }

    /// Classes span the lattice.
    pub fn is_full(&self) -> bool {
        self.classes.len() == self.lattice.rank()
            && Matrix::from_columns(&self.classes).determinant().abs().is_one()
    }

    fn pivot(&self, x: &[T]) -> Result<()> {
        if self.lattice.euler_form(x, x) != T::one() {
            return Err(Error::NotNormOne(Root(x.to_vec()).to_string()));
        }
        Ok(())
    }

    pub fn braid_act(&self, g: BraidGen) -> Result<Self> {
        let mu = self.classes.len();
        let mut out = self.classes.clone();
        match g {
            BraidGen::B(i) | BraidGen::BInv(i) => {
                if i == 0 || i + 1 > mu {
                    return Err(Error::IndexOutOfRange { index: i, max: mu.saturating_sub(1) });
                }
                let x = &self.classes[i - 1];
                let y = &self.classes[i];
                let c = self.lattice.euler_form(x, y);
                if let BraidGen::B(_) = g {
                    self.pivot(y)?;
                    out[i - 1] = y.clone();
                    out[i] = y.iter().zip(x).map(|(b, a)| c.clone() * b.clone() - a.clone()).collect();
                } else {
                    self.pivot(x)?;
                    out[i - 1] = x.iter().zip(y).map(|(a, b)| c.clone() * a.clone() - b.clone()).collect();
                    out[i] = x.clone();
                }
            }
            BraidGen::E(i) => {
                if i == 0 || i > mu {
                    return Err(Error::IndexOutOfRange { index: i, max: mu });
                }
                out[i - 1] = out[i - 1].iter().map(|a| -a.clone()).collect();
            }
        }
        Ok(KCollection { lattice: self.lattice.clone(), classes: out })
    }

    /// Applies the letters left to right: the first letter acts first.
    pub fn act_word(&self, word: &[BraidGen]) -> Result<Self> {
        let mut k = self.clone();
        for g in word {
            k = k.braid_act(*g)?;
        }
        Ok(k)
    }

    /// `r_{x_1} ··· r_{x_μ}`.
    pub fn coxeter(&self) -> Result<WeylElement<T>> {
        let mut acc = WeylElement::identity(&self.lattice);
        for x in &self.classes {
            acc = acc.compose(&reflection(&self.lattice, &Root(x.clone()))?);
        }
        Ok(acc)
    }
}

impl<T: Scalar> Serialize for KCollection<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Classes<'a, T>(&'a [Vec<T>]);
        impl<T: Scalar> Serialize for Classes<'_, T> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter().map(|c| Root(c.clone())))
            }
        }
        let kind = if self.lattice.is_octopus() { "octopus" } else { "star" };
        let mut st = s.serialize_struct("KCollection", 3)?;
        st.serialize_field("weights", self.lattice.weights())?;
        st.serialize_field("lattice", kind)?;
        st.serialize_field("classes", &Classes(&self.classes))?;
        st.end()
    }
}

/// `x − I(s, x) s` for a norm-two class `s`.
pub fn spherical_twist_k<T: Scalar>(lattice: &RootLattice<T>, s: &Root<T>, x: &[T]) -> Result<Vec<T>> {
    if lattice.form(&s.0, &s.0) != int(2) {
        return Err(Error::NotNormTwo(s.to_string()));
    }
    let c = lattice.form(&s.0, x);
    Ok(x.iter().zip(&s.0).map(|(a, b)| a.clone() - c.clone() * b.clone()).collect())
}

/// Matrix of [`spherical_twist_k`] at `s`, assembled column by column.
pub fn twist_matrix<T: Scalar>(lattice: &RootLattice<T>, s: &Root<T>) -> Result<Matrix<T>> {
    let cols = (0..lattice.rank())
        .map(|j| spherical_twist_k(lattice, s, &lattice.unit(j)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols))
}
