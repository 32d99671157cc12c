//! Dominance and regularity for points of the complexified dual lattice.
//!
//! A point `h` is stored by its values on the simple roots. A simple
//! reflection acts by `h ↦ h ∘ r_v`, so that
//! `h'(α_u) = h(α_u) − I(α_u, α_v) h(α_v)` on both real and imaginary parts.
//! A word `v_1 … v_k` acts as the row vector `h · r_{v_1} ··· r_{v_k}`.

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Root, RootLattice};
use crate::quiver::Vertex;
use crate::scalar::{format_ratio, parse_ratio, Frac, Scalar};
use crate::weyl::{orbit_layers, Word};

const ROOT_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPoint<T: Scalar> {
    pub re: Vec<Frac<T>>,
    pub im: Vec<Frac<T>>,
}

impl<T: Scalar> DualPoint<T> {
    pub fn new(re: Vec<Frac<T>>, im: Vec<Frac<T>>) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::DimensionMismatch { expected: re.len(), found: im.len() });
        }
        Ok(DualPoint { re, im })
    }

    pub fn from_integers(re: &[i64], im: &[i64]) -> Result<Self> {
        let f = |v: &[i64]| v.iter().map(|&x| Frac::from_integer(crate::scalar::int(x))).collect();
        DualPoint::new(f(re), f(im))
    }

    pub fn dim(&self) -> usize {
        self.re.len()
    }

    /// Values `(Re h(x), Im h(x))` on a lattice vector.
    pub fn eval(&self, x: &[T]) -> (Frac<T>, Frac<T>) {
        let mut a = Frac::<T>::from_integer(T::zero());
        let mut b = a.clone();
        for ((c, r), i) in x.iter().zip(&self.re).zip(&self.im) {
            if !c.is_zero() {
                let c = Frac::from_integer(c.clone());
                a = a + c.clone() * r.clone();
                b = b + c * i.clone();
            }
        }
        (a, b)
    }

    /// `h ∘ r_v` for the simple reflection at index `v`.
    pub fn reflect(&self, lattice: &RootLattice<T>, v: usize) -> Self {
        let row = lattice.cartan().row(v);
        let step = |h: &[Frac<T>]| -> Vec<Frac<T>> {
            let hv = h[v].clone();
            h.iter()
                .zip(row)
                .map(|(x, c)| x.clone() - Frac::from_integer(c.clone()) * hv.clone())
                .collect()
        };
        DualPoint { re: step(&self.re), im: step(&self.im) }
    }

    /// Acts by the word `v_1 … v_k`, first letter first.
    pub fn act_word(&self, lattice: &RootLattice<T>, word: &[(Vertex, i8)]) -> Result<Self> {
        let mut p = self.clone();
        for (v, _) in word {
            p = p.reflect(lattice, lattice.index_of(v)?);
        }
        Ok(p)
    }
}

fn ratio_strings<T: Scalar>(v: &[Frac<T>]) -> Vec<String> {
    v.iter().map(format_ratio).collect()
}

impl<T: Scalar> Serialize for DualPoint<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            re: Vec<String>,
            im: Vec<String>,
        }
        Repr { re: ratio_strings(&self.re), im: ratio_strings(&self.im) }.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for DualPoint<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            re: Vec<String>,
            im: Vec<String>,
        }
        let r = Repr::deserialize(d)?;
        let parse = |v: Vec<String>| {
            v.into_iter()
                .map(|x| parse_ratio::<T>(&x).ok_or_else(|| D::Error::custom(format!("bad rational {x:?}"))))
                .collect::<std::result::Result<Vec<_>, _>>()
        };
        DualPoint::new(parse(r.re)?, parse(r.im)?).map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChamberStatus {
    /// Every imaginary value on a simple root is positive.
    StrictlyDominant,
    /// Some value is zero: in the closure, interiority undetermined.
    Boundary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub struct Dominant<T: Scalar> {
    pub point: DualPoint<T>,
    pub word: Word,
    pub status: ChamberStatus,
}

/// Reflects at the lowest index with negative imaginary value until none is left.
pub fn make_dominant<T: Scalar>(lattice: &RootLattice<T>, p: &DualPoint<T>, max_steps: usize) -> Result<Dominant<T>> {
    if p.dim() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: p.dim() });
    }
    let mut cur = p.clone();
    let mut word = Vec::new();
    loop {
        match cur.im.iter().position(|x| x.is_negative()) {
            None => break,
            Some(_) if word.len() == max_steps => return Err(Error::NotInConeWithinBudget { steps: max_steps }),
            Some(v) => {
                cur = cur.reflect(lattice, v);
                word.push((lattice.labels()[v], 1));
            }
        }
    }
    let status = if cur.im.iter().all(|x| x.is_positive()) {
        ChamberStatus::StrictlyDominant
    } else {
        ChamberStatus::Boundary
    };
    Ok(Dominant { point: cur, word, status })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "T: Scalar")]
pub enum Regularity<T: Scalar> {
    /// No wall met among the roots and shifts inspected. `exhaustive` means
    /// the root enumeration closed before `root_depth` was reached.
    Regular { root_depth: usize, n_bound: u64, roots_checked: usize, exhaustive: bool },
    /// `h(α) = n` with `|n| ≤ n_bound`.
    OnWall { root: Root<T>, n: i64 },
    /// `h(α)` is a real integer outside the window.
    UndeterminedBeyondBounds { root: Root<T>, value: String },
}

/// Bounded search for a hyperplane `H_{α,n}` through `p`.
///
/// Roots are scanned in breadth-first layer order; the first wall found is
/// reported, so enlarging either bound never removes a hit.
pub fn is_regular<T: Scalar>(
    lattice: &RootLattice<T>,
    p: &DualPoint<T>,
    root_depth: usize,
    n_bound: u64,
) -> Result<Regularity<T>> {
    if p.dim() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: p.dim() });
    }
    let layers = orbit_layers(lattice, &lattice.basis(), root_depth, ROOT_CAP)?;
    let exhaustive = layers.len() <= root_depth;
    let mut beyond = None;
    let mut count = 0;
    for alpha in layers.iter().flatten() {
        count += 1;
        let (re, im) = p.eval(&alpha.0);
        if !im.is_zero() || !re.is_integer() {
            continue;
        }
        let n = re.to_integer();
        match n.to_i64() {
            Some(k) if k.unsigned_abs() <= n_bound => {
                return Ok(Regularity::OnWall { root: alpha.clone(), n: k });
            }
            _ => {
                if beyond.is_none() {
                    beyond = Some((alpha.clone(), n.to_string()));
                }
            }
        }
    }
    Ok(match beyond {
        Some((root, value)) => Regularity::UndeterminedBeyondBounds { root, value },
        None => Regularity::Regular { root_depth, n_bound, roots_checked: count, exhaustive },
    })
}
