//! Weyl groups of star and octopus lattices as integer matrix groups.
//!
//! Matrices act on column vectors of coordinates in the simple-root basis.
//! The reflection at a norm-two class `α` is `λ ↦ λ − I(λ, α) α`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Root, RootLattice};
use crate::matrix::Matrix;
use crate::quiver::Vertex;
use crate::scalar::{int, Scalar};

/// A word in simple reflections; exponents are `±1`.
pub type Word = Vec<(Vertex, i8)>;

/// Formal inverse of a word.
pub fn invert_word(w: &[(Vertex, i8)]) -> Word {
    w.iter().rev().map(|(v, e)| (*v, -e)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct WeylElement<T> {
    matrix: Matrix<T>,
    word: Option<Word>,
}

/// Outcome of a bounded finiteness probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Order {
    Finite(usize),
    Truncated,
}

impl<T: Scalar> WeylElement<T> {
    /// Checks that `matrix` preserves the Cartan form of `lattice`.
    pub fn new(lattice: &RootLattice<T>, matrix: Matrix<T>, word: Option<Word>) -> Result<Self> {
        let n = lattice.rank();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: matrix.rows() });
        }
        let i = lattice.cartan();
        if &(&matrix.transpose() * i) * &matrix != *i {
            return Err(Error::NotCartanPreserving);
        }
        let d = matrix.determinant();
        if !d.abs().is_one() {
            return Err(Error::NotCartanPreserving);
        }
        Ok(WeylElement { matrix, word })
    }

    pub fn identity(lattice: &RootLattice<T>) -> Self {
        WeylElement { matrix: Matrix::identity(lattice.rank()), word: Some(Vec::new()) }
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn word(&self) -> Option<&[(Vertex, i8)]> {
        self.word.as_deref()
    }

    pub fn into_matrix(self) -> Matrix<T> {
        self.matrix
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.matrix.mul_vec(x)
    }

    pub fn apply_root(&self, x: &Root<T>) -> Root<T> {
        Root(self.apply(&x.0))
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement { matrix: &self.matrix * &other.matrix, word }
    }

    pub fn inverse(&self) -> Self {
        let matrix = self
            .matrix
            .inverse()
            .expect("form-preserving integer matrix is unimodular");
        WeylElement { matrix, word: self.word.as_deref().map(invert_word) }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let k = e.unsigned_abs();
        let word = base.word.as_ref().map(|w| {
            let mut out = Vec::with_capacity(w.len() * k as usize);
            for _ in 0..k {
                out.extend_from_slice(w);
            }
            out
        });
        WeylElement { matrix: base.matrix.pow(k), word }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

fn star_vertex<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<usize> {
    if !v.is_star() {
        return Err(Error::NotStarVertex(v.to_string()));
    }
    lattice.index_of(v)
}

/// Matrix of `λ ↦ λ − I(λ, α) α` without the norm check.
fn reflection_matrix<T: Scalar>(lattice: &RootLattice<T>, alpha: &[T]) -> Matrix<T> {
    let ia = lattice.cartan().mul_vec(alpha);
    let n = lattice.rank();
    Matrix::from_fn(n, n, |i, j| {
        let d = if i == j { T::one() } else { T::zero() };
        d - alpha[i].clone() * ia[j].clone()
    })
}

pub fn reflection<T: Scalar>(lattice: &RootLattice<T>, alpha: &Root<T>) -> Result<WeylElement<T>> {
    if alpha.0.len() != lattice.rank() {
        return Err(Error::DimensionMismatch { expected: lattice.rank(), found: alpha.0.len() });
    }
    if lattice.form(&alpha.0, &alpha.0) != int(2) {
        return Err(Error::NotNormTwo(alpha.to_string()));
    }
    Ok(WeylElement { matrix: reflection_matrix(lattice, &alpha.0), word: None })
}

pub fn simple_reflection<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<WeylElement<T>> {
    let i = lattice.index_of(v)?;
    let mut r = reflection(lattice, &Root(lattice.unit(i)))?;
    r.word = Some(vec![(*v, 1)]);
    Ok(r)
}

/// All simple reflections in canonical order.
pub fn simple_reflections<T: Scalar>(lattice: &RootLattice<T>) -> Vec<WeylElement<T>> {
    lattice
        .labels()
        .iter()
        .map(|v| simple_reflection(lattice, v).expect("basis vectors have norm two"))
        .collect()
}

pub fn evaluate_word<T: Scalar>(lattice: &RootLattice<T>, word: &[(Vertex, i8)]) -> Result<WeylElement<T>> {
    let gens: BTreeMap<Vertex, Matrix<T>> = lattice
        .labels()
        .iter()
        .map(|v| (*v, reflection_matrix(lattice, &lattice.unit(lattice.index_of(v).unwrap()))))
        .collect();
    let mut m = Matrix::identity(lattice.rank());
    for (v, _) in word {
        let g = gens.get(v).ok_or_else(|| Error::UnknownGenerator(v.to_string()))?;
        m = &m * g;
    }
    Ok(WeylElement { matrix: m, word: Some(word.to_vec()) })
}

/// The inductive word for `τ̃_v` in the octopus reflections.
pub fn translation_word<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<Word> {
    star_vertex(lattice, v)?;
    lattice.delta()?;
    let tau1: Word = vec![(Vertex::Center, 1), (Vertex::Apex, 1)];
    match *v {
        Vertex::Center => Ok(tau1),
        Vertex::Arm { arm, pos } => {
            let mut prev = tau1;
            for j in 1..=pos {
                let s = Vertex::arm(arm, j);
                let mut next = vec![(s, 1)];
                next.extend_from_slice(&prev);
                next.push((s, 1));
                next.extend(invert_word(&prev));
                prev = next;
            }
            Ok(prev)
        }
        Vertex::Apex => unreachable!(),
    }
}

pub fn translation_element<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<WeylElement<T>> {
    let word = translation_word(lattice, v)?;
    evaluate_word(lattice, &word)
}

/// Matrix of `λ ↦ λ − I(λ, α̃_v) δ`.
pub fn translation_closed_form<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<Matrix<T>> {
    let i = star_vertex(lattice, v)?;
    let delta = lattice.delta()?.0;
    let n = lattice.rank();
    let row = lattice.cartan().row(i).to_vec();
    Ok(Matrix::from_fn(n, n, |a, b| {
        let d = if a == b { T::one() } else { T::zero() };
        d - delta[a].clone() * row[b].clone()
    }))
}

/// `Π_v τ̃_v^{m_v}` over star vertices in canonical order.
pub fn translation_product<T: Scalar>(lattice: &RootLattice<T>, m: &[i64]) -> Result<WeylElement<T>> {
    let star: Vec<Vertex> = lattice.labels().iter().copied().filter(Vertex::is_star).collect();
    if m.len() != star.len() {
        return Err(Error::DimensionMismatch { expected: star.len(), found: m.len() });
    }
    let mut acc = WeylElement::identity(lattice);
    for (v, &k) in star.iter().zip(m) {
        if k != 0 {
            acc = acc.compose(&translation_element(lattice, v)?.pow(k));
        }
    }
    Ok(acc)
}

/// The induced action on the star lattice `K_0(R̃_A)/Zδ`.
pub fn project_p<T: Scalar>(lattice: &RootLattice<T>, w: &WeylElement<T>) -> Result<WeylElement<T>> {
    let q = lattice.split_basis()?;
    let qi = q.inverse().expect("split basis is unimodular");
    let m = &(&qi * w.matrix()) * &q;
    let n = lattice.rank();
    let last = n - 1;
    for i in 0..last {
        if !m.get(i, last).is_zero() {
            return Err(Error::DeltaNotPreserved);
        }
    }
    let block = Matrix::from_fn(last, last, |i, j| m.get(i, j).clone());
    let star = lattice.star_lattice()?;
    let word = w.word().map(|ws| {
        ws.iter()
            .map(|(v, e)| (if *v == Vertex::Apex { Vertex::Center } else { *v }, *e))
            .collect()
    });
    WeylElement::new(&star, block, word)
}

/// The splitting `r_v ↦ r̃_v`.
pub fn lift_i<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex) -> Result<WeylElement<T>> {
    star_vertex(lattice, v)?;
    lattice.delta()?;
    simple_reflection(lattice, v)
}

/// Breadth-first layers of the orbit of `seeds` under simple reflections.
/// Layer 0 is the sorted, deduplicated seed set.
pub fn orbit_layers<T: Scalar>(
    lattice: &RootLattice<T>,
    seeds: &[Root<T>],
    depth: usize,
    cap: usize,
) -> Result<Vec<Vec<Root<T>>>> {
    let gens: Vec<Matrix<T>> = simple_reflections(lattice).into_iter().map(WeylElement::into_matrix).collect();
    let first: BTreeSet<Root<T>> = seeds.iter().cloned().collect();
    let mut seen: HashSet<Root<T>> = first.iter().cloned().collect();
    if seen.len() > cap {
        return Err(Error::BudgetExceeded { cap });
    }
    let mut layers = vec![first.into_iter().collect::<Vec<_>>()];
    for _ in 0..depth {
        let mut next = BTreeSet::new();
        for x in layers.last().unwrap() {
            for g in &gens {
                let y = Root(g.mul_vec(&x.0));
                if !seen.contains(&y) {
                    next.insert(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        seen.extend(next.iter().cloned());
        if seen.len() > cap {
            return Err(Error::BudgetExceeded { cap });
        }
        layers.push(next.into_iter().collect());
    }
    Ok(layers)
}

pub fn root_orbit<T: Scalar>(
    lattice: &RootLattice<T>,
    seeds: &[Root<T>],
    depth: usize,
    cap: usize,
) -> Result<Vec<Root<T>>> {
    let mut all: Vec<Root<T>> = orbit_layers(lattice, seeds, depth, cap)?.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Real roots reachable from the basis within `depth` rounds, sorted.
pub fn enumerate_real_roots<T: Scalar>(lattice: &RootLattice<T>, depth: usize, cap: usize) -> Result<Vec<Root<T>>> {
    root_orbit(lattice, &lattice.basis(), depth, cap)
}

/// Like [`enumerate_real_roots`] but runs until the orbit stops growing.
pub fn real_roots_closure<T: Scalar>(lattice: &RootLattice<T>, cap: usize) -> Result<Vec<Root<T>>> {
    root_orbit(lattice, &lattice.basis(), usize::MAX, cap)
}

/// For every root within `depth`, a word `w` and a simple vertex `v` with `w(α_v)` equal to it.
pub fn root_words<T: Scalar>(
    lattice: &RootLattice<T>,
    depth: usize,
    cap: usize,
) -> Result<BTreeMap<Root<T>, (Word, Vertex)>> {
    let labels = lattice.labels().to_vec();
    let gens: Vec<Matrix<T>> = simple_reflections(lattice).into_iter().map(WeylElement::into_matrix).collect();
    let mut out: BTreeMap<Root<T>, (Word, Vertex)> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (i, v) in labels.iter().enumerate() {
        let r = Root(lattice.unit(i));
        out.insert(r.clone(), (Vec::new(), *v));
        queue.push_back((r, 0usize));
    }
    while let Some((x, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        let (word, seed) = out[&x].clone();
        for (g, v) in gens.iter().zip(&labels) {
            let y = Root(g.mul_vec(&x.0));
            if out.contains_key(&y) {
                continue;
            }
            let mut w = vec![(*v, 1)];
            w.extend_from_slice(&word);
            out.insert(y.clone(), (w, seed));
            if out.len() > cap {
                return Err(Error::BudgetExceeded { cap });
            }
            queue.push_back((y, d + 1));
        }
    }
    Ok(out)
}

/// Order of the group generated by the simple reflections, if below `cap`.
pub fn group_enumerate<T: Scalar>(lattice: &RootLattice<T>, cap: usize) -> Order {
    let gens: Vec<Matrix<T>> = simple_reflections(lattice).into_iter().map(WeylElement::into_matrix).collect();
    matrix_group_order(&gens, lattice.rank(), cap)
}

/// Breadth-first closure of `gens` under right multiplication.
pub fn matrix_group_order<T: Scalar>(gens: &[Matrix<T>], dim: usize, cap: usize) -> Order {
    let id = Matrix::identity(dim);
    let mut seen: HashSet<Vec<Vec<T>>> = HashSet::new();
    seen.insert(id.to_rows());
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in gens {
            let p = &m * g;
            if seen.insert(p.to_rows()) {
                if seen.len() > cap {
                    return Order::Truncated;
                }
                queue.push_back(p);
            }
        }
    }
    Order::Finite(seen.len())
}

/// `r_{α_1} ··· r_{α_μ}` in canonical order.
pub fn coxeter_element<T: Scalar>(lattice: &RootLattice<T>) -> WeylElement<T> {
    let word: Word = lattice.labels().iter().map(|v| (*v, 1)).collect();
    evaluate_word(lattice, &word).expect("labels are generators")
}

pub fn order_of<T: Scalar>(w: &WeylElement<T>, cap: usize) -> Order {
    let mut p = w.matrix().clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Order::Finite(k);
        }
        p = &p * w.matrix();
    }
    Order::Truncated
}

/// A word `w` and seed vertex `s` with `w(α_s) = α_v + nδ` on an octopus;
/// the seed is `v` except for `v = 1` with odd `n`, where it is `1*`.
pub fn simple_shift_witness<T: Scalar>(lattice: &RootLattice<T>, v: &Vertex, n: i64) -> Result<(Word, Vertex)> {
    star_vertex(lattice, v)?;
    lattice.delta()?;
    match *v {
        Vertex::Center => {
            let tau1 = translation_word(lattice, &Vertex::Center)?;
            let k = n.div_euclid(2);
            let seed = if n.rem_euclid(2) == 1 { Vertex::Apex } else { Vertex::Center };
            Ok((word_power(&tau1, -k), seed))
        }
        Vertex::Arm { arm, pos } => {
            let base = if pos == 1 { Vertex::Center } else { Vertex::arm(arm, pos - 1) };
            let tau = translation_word(lattice, &base)?;
            Ok((word_power(&tau, n), *v))
        }
        Vertex::Apex => unreachable!(),
    }
}

fn word_power(w: &[(Vertex, i8)], k: i64) -> Word {
    let base = if k < 0 { invert_word(w) } else { w.to_vec() };
    let mut out = Vec::new();
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

/// A word and seed reaching `β + nδ` on an octopus from a simple root,
/// given a word and seed reaching `β` on the star lattice.
pub fn octopus_root_witness<T: Scalar>(
    lattice: &RootLattice<T>,
    star_word: &[(Vertex, i8)],
    star_seed: &Vertex,
    n: i64,
) -> Result<(Word, Vertex)> {
    let (shift, seed) = simple_shift_witness(lattice, star_seed, n)?;
    let mut w = star_word.to_vec();
    w.extend(shift);
    Ok((w, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Weights;

    fn w(s: &str) -> Weights {
        s.parse().unwrap()
    }

    fn oct(s: &str) -> RootLattice<i64> {
        RootLattice::octopus(&w(s), None).unwrap()
    }

    #[test]
    fn simple_reflection_is_identity_minus_row() {
        let l = RootLattice::<i64>::star(&w("2,2,2"));
        let r = simple_reflection(&l, &Vertex::Center).unwrap();
        assert_eq!(
            r.matrix().to_rows(),
            vec![vec![-1, 1, 1, 1], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]]
        );
        assert!(r.pow(2).is_identity());
        assert_eq!(r.apply(&[0, 1, 0, 0]), vec![1, 1, 0, 0]);
    }

    #[test]
    fn reflection_rejects_wrong_norm() {
        let l = RootLattice::<i64>::star(&w("2,2,2"));
        assert!(reflection(&l, &Root(vec![1, 0, 0, 1])).is_ok());
        assert!(matches!(reflection(&l, &Root(vec![0, 1, 1, 0])), Err(Error::NotNormTwo(_))));
    }

    #[test]
    fn word_evaluation() {
        let l = oct("2,2,2");
        assert!(evaluate_word(&l, &[]).unwrap().is_identity());
        let c = Vertex::Center;
        assert!(evaluate_word(&l, &[(c, 1), (c, 1)]).unwrap().is_identity());
        let t = evaluate_word(&l, &[(c, 1), (Vertex::Apex, 1)]).unwrap();
        assert_eq!(*t.matrix(), translation_closed_form(&l, &c).unwrap());
        assert!(matches!(
            evaluate_word(&l, &[(Vertex::arm(4, 1), 1)]),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn translation_closed_form_examples() {
        let l = oct("2,2,2");
        let t = translation_element(&l, &Vertex::Center).unwrap();
        assert_eq!(t.apply(&[0, 1, 0, 0, 0]), vec![-1, 1, 0, 0, 1]);
        assert_eq!(t.apply(&[-1, 0, 0, 0, 1]), vec![-1, 0, 0, 0, 1]);
        let l = oct("2,2,3");
        let v = Vertex::arm(3, 2);
        let t = translation_element(&l, &v).unwrap();
        assert_eq!(*t.matrix(), translation_closed_form(&l, &v).unwrap());
        assert_eq!(t.word().unwrap().len(), 14);
        assert!(matches!(translation_element(&l, &Vertex::Apex), Err(Error::NotStarVertex(_))));
    }

    #[test]
    fn projection_and_splitting() {
        let l = oct("2,2,2");
        let s = l.star_lattice().unwrap();
        let r1 = simple_reflection(&s, &Vertex::Center).unwrap();
        let p_apex = project_p(&l, &simple_reflection(&l, &Vertex::Apex).unwrap()).unwrap();
        assert_eq!(p_apex.matrix(), r1.matrix());
        for v in s.labels() {
            let p = project_p(&l, &lift_i(&l, v).unwrap()).unwrap();
            assert_eq!(p.matrix(), simple_reflection(&s, v).unwrap().matrix());
            let p = project_p(&l, &translation_element(&l, v).unwrap()).unwrap();
            assert!(p.is_identity());
        }
        assert!(matches!(lift_i(&l, &Vertex::Apex), Err(Error::NotStarVertex(_))));
    }

    #[test]
    fn projection_rejects_matrices_moving_delta() {
        let l = oct("2,2,2");
        let mut m = Matrix::<i64>::identity(5);
        m.set(1, 4, 1);
        let bogus = WeylElement { matrix: m, word: None };
        assert_eq!(project_p(&l, &bogus), Err(Error::DeltaNotPreserved));
    }

    #[test]
    fn finite_and_truncated_groups() {
        assert_eq!(group_enumerate(&RootLattice::<i64>::star(&w("2,2,2")), 10_000), Order::Finite(192));
        assert_eq!(group_enumerate(&oct("2,2,2"), 500), Order::Truncated);
        assert_eq!(group_enumerate(&RootLattice::<i64>::trivial(1), 1), Order::Finite(1));
    }

    #[test]
    fn coxeter_order_d4() {
        let l = RootLattice::<i64>::star(&w("2,2,2"));
        assert_eq!(order_of(&coxeter_element(&l), 100), Order::Finite(6));
    }

    #[test]
    fn budget_is_enforced() {
        let l = oct("2,2,2");
        assert_eq!(enumerate_real_roots(&l, 50, 100), Err(Error::BudgetExceeded { cap: 100 }));
    }

    #[test]
    fn shift_witnesses_land_on_target() {
        let l = oct("2,2,3");
        for v in l.labels().iter().filter(|v| v.is_star()) {
            for n in -4..=4 {
                let (word, seed) = simple_shift_witness(&l, v, n).unwrap();
                let x = evaluate_word(&l, &word).unwrap().apply(&l.unit(l.index_of(&seed).unwrap()));
                let mut star = vec![0; l.rank() - 1];
                star[l.index_of(v).unwrap()] = 1;
                assert_eq!(x, l.from_split(&star, &n).unwrap(), "v={v} n={n}");
            }
        }
    }
}
