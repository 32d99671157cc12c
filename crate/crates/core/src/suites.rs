//! Verification suites over a single weight tuple.
//!
//! Each suite returns a list of named checks. Presentation checks establish
//! homomorphisms only; their notes say "consistent with" for that reason.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{CatalogEntry, DEFAULT_SEED};
use crate::cone::{is_regular, make_dominant, ChamberStatus, DualPoint, Regularity};
use crate::error::{Error, Result};
use crate::ktheory::{twist_matrix, BraidGen, KCollection};
use crate::lattice::{Root, RootLattice};
use crate::matrix::Matrix;
use crate::presentations::{self as pres, Assignment, PresentationSpec};
use crate::quiver::{LambdaTuple, Vertex, Weights};
use crate::scalar::Frac;
use crate::weyl::{self, Order};

type Z = BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    /// Breadth-first depth for root enumeration.
    pub depth: usize,
    /// Element cap for enumerations and order probes.
    pub cap: usize,
    /// Bound on `|n|` for δ-shifts and hyperplanes.
    pub n_bound: u64,
    pub seed: u64,
    /// Pseudorandom samples per randomized check.
    pub samples: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { depth: 8, cap: 200_000, n_bound: 3, seed: DEFAULT_SEED, samples: 100 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub pass: bool,
    pub details: Vec<Detail>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Lattice,
    Presentations,
    Semidirect,
    Artin,
    VanDerLek,
    PowerForms,
    Translations,
    Roots,
    RootsDecomposition,
    Coxeter,
    Mutations,
    Twists,
    Cone,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Lattice,
        Suite::Presentations,
        Suite::Semidirect,
        Suite::Artin,
        Suite::VanDerLek,
        Suite::PowerForms,
        Suite::Translations,
        Suite::Roots,
        Suite::RootsDecomposition,
        Suite::Coxeter,
        Suite::Mutations,
        Suite::Twists,
        Suite::Cone,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Presentations => "presentations",
            Suite::Semidirect => "semidirect",
            Suite::Artin => "artin",
            Suite::VanDerLek => "vanderlek",
            Suite::PowerForms => "prop44",
            Suite::Translations => "translations",
            Suite::Roots => "roots",
            Suite::RootsDecomposition => "roots-decomposition",
            Suite::Coxeter => "coxeter",
            Suite::Mutations => "mutations",
            Suite::Twists => "twists",
            Suite::Cone => "cone",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Default)]
struct Checks(Vec<Detail>);

impl Checks {
    fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.0.push(Detail { check: name.into(), pass, note: None });
    }

    fn note(&mut self, name: impl Into<String>, pass: bool, note: impl Into<String>) {
        self.0.push(Detail { check: name.into(), pass, note: Some(note.into()) });
    }
}

pub fn run_suite(suite: Suite, entry: &CatalogEntry, params: &SuiteParams) -> Result<SuiteReport> {
    let mut c = Checks::default();
    let w = &entry.weights;
    let lambda = entry.lambda.clone();
    match suite {
        Suite::Lattice => lattice_suite(&mut c, w, lambda)?,
        Suite::Presentations => presentations_suite(&mut c, w, lambda)?,
        Suite::Semidirect => semidirect_suite(&mut c, w, lambda)?,
        Suite::Artin => artin_suite(&mut c, w, lambda)?,
        Suite::VanDerLek => van_der_lek_suite(&mut c, w, lambda)?,
        Suite::PowerForms => power_form_suite(&mut c, w, lambda)?,
        Suite::Translations => translations_suite(&mut c, w, lambda, params)?,
        Suite::Roots => roots_suite(&mut c, w, lambda, params)?,
        Suite::RootsDecomposition => decomposition_suite(&mut c, w, lambda, params)?,
        Suite::Coxeter => coxeter_suite(&mut c, w, lambda, params)?,
        Suite::Mutations => mutations_suite(&mut c, w, lambda, params)?,
        Suite::Twists => twists_suite(&mut c, w, lambda)?,
        Suite::Cone => cone_suite(&mut c, w, params)?,
    }
    let pass = c.0.iter().all(|d| d.pass);
    Ok(SuiteReport { name: suite.name().to_string(), pass, details: c.0 })
}

fn lattices(w: &Weights, lambda: Option<LambdaTuple>) -> Result<(RootLattice<Z>, RootLattice<Z>)> {
    Ok((RootLattice::star(w), RootLattice::octopus(w, lambda)?))
}

/// The octopus diagram written down from the weights alone.
pub fn octopus_diagram(w: &Weights) -> Matrix<i64> {
    let arms: Vec<usize> = (1..=w.r()).map(|i| w.arm_len(i)).collect();
    let n = 2 + arms.iter().sum::<usize>();
    let apex = n - 1;
    let mut m = Matrix::<i64>::identity(n).scale(&2);
    let mut link = |a: usize, b: usize, v: i64| {
        m.set(a, b, v);
        m.set(b, a, v);
    };
    link(0, apex, 2);
    let mut k = 1;
    for len in arms {
        link(0, k, -1);
        link(k, apex, -1);
        for j in 1..len {
            link(k + j - 1, k + j, -1);
        }
        k += len;
    }
    m
}

fn to_big(m: &Matrix<i64>) -> Matrix<Z> {
    m.map(|x| Z::from(*x))
}

fn lattice_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda.clone())?;
    for (name, l) in [("star", &star), ("octopus", &oct)] {
        c.check(
            format!("{name} Euler matrix unit upper triangular"),
            l.euler().is_unit_upper_triangular() && l.euler().determinant() == Z::from(1),
        );
        let i = l.cartan();
        let diag = (0..l.rank()).all(|k| *i.get(k, k) == Z::from(2));
        c.check(format!("{name} Cartan matrix symmetric with diagonal 2"), i.is_symmetric() && diag);
    }
    c.check("octopus Cartan matrix matches the diagram", *oct.cartan() == to_big(&octopus_diagram(w)));
    let apex = oct.rank() - 1;
    c.check("I(α_1, α_1*) = 2", *oct.cartan().get(0, apex) == Z::from(2));
    let delta = oct.delta()?;
    c.check("δ lies in the radical", oct.cartan().mul_vec(&delta.0).iter().all(Zero::is_zero));
    let chi = w.chi();
    let srad = star.radical_basis().len();
    let expect = if chi.is_zero() { 1 } else { 0 };
    c.note(
        "star radical rank",
        srad == expect,
        format!("rank {srad}, χ_A = {}", crate::scalar::format_ratio(&chi)),
    );
    let orad = oct.radical_basis();
    c.check("octopus radical rank is star rank + 1", orad.len() == srad + 1);
    if w.r() > 3 {
        let other: String = std::iter::once("inf".to_string())
            .chain((0..w.r() - 1).map(|k| if k < 2 { k.to_string() } else { (k + 7).to_string() }))
            .collect::<Vec<_>>()
            .join(",");
        let alt = RootLattice::<Z>::octopus(w, Some(other.parse()?))?;
        c.note("lattice data independent of Λ", alt == oct, format!("compared against Λ = {other}"));
    }
    Ok(())
}

const CONSISTENT: &str = "consistent with the stated presentation; homomorphism only";

fn run_spec(c: &mut Checks, name: &str, spec: &PresentationSpec, a: &Assignment<Z>) -> Result<()> {
    let rep = pres::verify(spec, a)?;
    let bad: Vec<&str> = rep.failures().iter().map(|r| r.tag.as_str()).collect();
    let note = if bad.is_empty() {
        format!("{} relations hold; {CONSISTENT}", rep.relations.len())
    } else {
        format!("failed: {}", bad.join(" "))
    };
    c.note(name, rep.pass, note);
    Ok(())
}

fn star_only(a: Assignment<Z>) -> Assignment<Z> {
    a.into_iter().filter(|(k, _)| !k.ends_with("1*")).collect()
}

fn presentations_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    run_spec(c, "C under w_v ↦ r_v", &pres::star_coxeter_spec(w), &pres::reflection_assignment(&star, "w"))?;
    let wspec = pres::generalized_coxeter_spec_w(w)?;
    run_spec(c, "W under w̃_v ↦ r̃_v", &wspec, &pres::reflection_assignment(&oct, "w"))?;
    run_spec(c, "W under the affine action on K_0 ⊕ Z", &wspec, &pres::affine_octopus_assignment(&star, "w"))?;
    Ok(())
}

fn semidirect_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let spec = pres::semidirect_spec(w);
    run_spec(c, "SD under the affine action w_v ↦ r_v, t_v ↦ α_v", &spec, &pres::affine_semidirect_assignment(&star, "w", "t"))?;
    let mut a = star_only(pres::reflection_assignment(&oct, "w"));
    a.extend(pres::translation_assignment(&oct, "t")?);
    run_spec(c, "SD under w_v ↦ r̃_v, t_v ↦ τ̃_v", &spec, &a)?;
    Ok(())
}

fn artin_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let spec = pres::artin_spec(w)?;
    run_spec(c, "A under g̃_v ↦ r̃_v", &spec, &pres::reflection_assignment(&oct, "g"))?;
    run_spec(c, "A under g̃_v ↦ twist at S_v", &spec, &pres::twist_assignment(&oct, "g")?)?;
    run_spec(c, "A under the affine action on K_0 ⊕ Z", &spec, &pres::affine_octopus_assignment(&star, "g"))?;
    let q = pres::involution_quotient(&spec);
    c.check(
        "A with g̃_v² = 1 adjoined equals W relation for relation",
        pres::structurally_equal(&q, &pres::generalized_coxeter_spec_w(w)?),
    );
    Ok(())
}

fn van_der_lek_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let spec = pres::van_der_lek_spec(w);
    let mut a = star_only(pres::reflection_assignment(&oct, "g"));
    a.extend(pres::translation_assignment(&oct, "rho")?);
    run_spec(c, "E under g_v ↦ r̃_v, rho_v ↦ τ̃_v", &spec, &a)?;
    run_spec(c, "E under the affine action g_v ↦ r_v, rho_v ↦ α_v", &spec, &pres::affine_semidirect_assignment(&star, "g", "rho"))?;
    let gens = oct.labels().iter().map(|v| pres::label("g", v)).collect();
    let pulled = pres::substitute(&spec, &pres::rho_tilde_map(w), gens);
    run_spec(c, "E pulled back along rho_v ↦ ρ̃_v, g̃_v ↦ r̃_v", &pulled, &pres::reflection_assignment(&oct, "g"))?;
    run_spec(c, "E pulled back along rho_v ↦ ρ̃_v, g̃_v ↦ twist", &pulled, &pres::twist_assignment(&oct, "g")?)?;
    Ok(())
}

fn power_form_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let spec = pres::power_form_spec(w)?;
    run_spec(c, "σ-forms and power forms under w̃_v ↦ r̃_v", &spec, &pres::reflection_assignment(&oct, "w"))?;
    run_spec(c, "σ-forms and power forms under the affine action", &spec, &pres::affine_octopus_assignment(&star, "w"))?;
    Ok(())
}

fn rng(params: &SuiteParams, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(params.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_vec(r: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Z> {
    (0..n).map(|_| Z::from(r.gen_range(-bound..=bound))).collect()
}

fn star_vertices(l: &RootLattice<Z>) -> Vec<Vertex> {
    l.labels().iter().copied().filter(Vertex::is_star).collect()
}

fn translations_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>, p: &SuiteParams) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let delta = oct.delta()?.0;
    let mut r = rng(p, 1);
    let mut tau = Vec::new();
    let mut closed_ok = true;
    let mut sample_ok = true;
    for v in star_vertices(&oct) {
        let t = weyl::translation_element(&oct, &v)?;
        closed_ok &= *t.matrix() == weyl::translation_closed_form(&oct, &v)?;
        let a = oct.unit(oct.index_of(&v)?);
        for _ in 0..p.samples {
            let x = random_vec(&mut r, oct.rank(), 50);
            let s = oct.form(&x, &a);
            let expect: Vec<Z> = x.iter().zip(&delta).map(|(xi, d)| xi - &s * d).collect();
            sample_ok &= t.apply(&x) == expect;
        }
        tau.push((v, t));
    }
    c.check("τ̃_v word equals λ ↦ λ − I(λ, α̃_v)δ as a matrix", closed_ok);
    c.note(
        "τ̃_v word equals the closed form on random vectors",
        sample_ok,
        format!("{} vectors per vertex, seed {}", p.samples, p.seed),
    );

    let refl = |v: &Vertex| weyl::simple_reflection(&oct, v).expect("basis root");
    let (mut inv_ok, mut comm_ok, mut shift_ok) = (true, true, true);
    for (a, (v, tv)) in tau.iter().enumerate() {
        let rv = refl(v);
        inv_ok &= rv.compose(tv).compose(&rv).matrix() == tv.inverse().matrix();
        for (b, (_, tu)) in tau.iter().enumerate() {
            if a == b {
                continue;
            }
            let conj = rv.compose(tu).compose(&rv);
            match oct.cartan().get(a, b).to_i64() {
                Some(0) => comm_ok &= conj.matrix() == tu.matrix(),
                Some(-1) => shift_ok &= conj.matrix() == tv.compose(tu).matrix(),
                _ => {}
            }
        }
    }
    c.check("r̃_v τ̃_v r̃_v = τ̃_v⁻¹", inv_ok);
    c.check("r̃_v τ̃_v' r̃_v = τ̃_v' when I = 0", comm_ok);
    c.check("r̃_v τ̃_v' r̃_v = τ̃_v τ̃_v' when I = −1", shift_ok);

    let mut split_ok = true;
    let mut kill_ok = true;
    for (v, tv) in &tau {
        let pr = weyl::project_p(&oct, &weyl::lift_i(&oct, v)?)?;
        split_ok &= pr.matrix() == weyl::simple_reflection(&star, v)?.matrix();
        kill_ok &= weyl::project_p(&oct, tv)?.is_identity();
    }
    let apex = weyl::project_p(&oct, &refl(&Vertex::Apex))?;
    split_ok &= apex.matrix() == weyl::simple_reflection(&star, &Vertex::Center)?.matrix();
    c.check("p ∘ i = id on generators and p(r̃_1*) = r_1", split_ok);
    c.check("p(τ̃_v) = id", kill_ok);

    let rad = star.radical_basis();
    let mut rad_ok = true;
    for m in &rad {
        let m: Vec<i64> = m.iter().map(|x| x.to_i64().expect("small radical")).collect();
        rad_ok &= weyl::translation_product(&oct, &m)?.is_identity();
    }
    let mut iff_ok = true;
    let mut nonrad = 0;
    for _ in 0..p.samples.min(40) {
        let m: Vec<i64> = (0..star.rank()).map(|_| r.gen_range(-3..=3)).collect();
        let mz: Vec<Z> = m.iter().map(|&x| Z::from(x)).collect();
        let in_rad = star.cartan().mul_vec(&mz).iter().all(Zero::is_zero);
        nonrad += usize::from(!in_rad);
        iff_ok &= weyl::translation_product(&oct, &m)?.is_identity() == in_rad;
    }
    c.note(
        "Π τ̃_v^{m_v} = Id on radical generators",
        rad_ok,
        format!("{} generator(s)", rad.len()),
    );
    c.note(
        "Π τ̃_v^{m_v} = Id exactly when Σ m_v α_v is radical",
        iff_ok,
        format!("{nonrad} non-radical samples"),
    );
    Ok(())
}

fn roots_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>, p: &SuiteParams) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let finite = w.chi().is_positive();
    let roots = if finite {
        weyl::real_roots_closure(&star, p.cap)?
    } else {
        weyl::enumerate_real_roots(&star, p.depth, p.cap)?
    };
    let two = Z::from(2);
    c.check("star roots have norm 2", roots.iter().all(|a| star.form(&a.0, &a.0) == two));
    let set: BTreeSet<&Root<Z>> = roots.iter().collect();
    // −α needs one more reflection than α
    let wider: BTreeSet<Root<Z>> = if finite {
        BTreeSet::new()
    } else {
        weyl::enumerate_real_roots(&star, p.depth + 1, p.cap)?.into_iter().collect()
    };
    let negated = roots.iter().all(|a| if finite { set.contains(&a.neg()) } else { wider.contains(&a.neg()) });
    c.check("star root set is symmetric under negation", negated);
    if finite {
        let gens = weyl::simple_reflections(&star);
        let closed = roots.iter().all(|a| gens.iter().all(|g| set.contains(&g.apply_root(a))));
        c.note("star root set closed under reflections", closed, format!("{} roots", roots.len()));
        let positive = roots.iter().filter(|a| a.0.iter().all(|x| !x.is_negative())).count();
        c.check("every root is positive or negative", 2 * positive == roots.len());
    } else {
        c.note("star roots enumerated", true, format!("{} roots within depth {}", roots.len(), p.depth));
    }

    let mut conj_ok = true;
    for a in roots.iter().take(60) {
        let ra = weyl::reflection(&star, a)?;
        for g in weyl::simple_reflections(&star) {
            let lhs = g.compose(&ra).compose(&g);
            conj_ok &= lhs.matrix() == weyl::reflection(&star, &g.apply_root(a))?.matrix();
        }
    }
    c.check("r_v r_α r_v = r_{r_v α}", conj_ok);

    for (name, l) in [("star", &star), ("octopus", &oct)] {
        let d = 2;
        let base = weyl::enumerate_real_roots(l, d + 4, p.cap)?;
        let base: BTreeSet<Root<Z>> = base.into_iter().collect();
        let simples = KCollection::simples(l);
        let mut ok = true;
        for i in 1..l.rank() {
            for g in [BraidGen::B(i), BraidGen::BInv(i)] {
                let b = simples.braid_act(g)?.as_roots();
                ok &= weyl::root_orbit(l, &b, d, p.cap)?.iter().all(|x| base.contains(x));
            }
        }
        c.note(format!("{name} roots from a mutated basis lie in the standard orbit"), ok, format!("depth {d} inside depth {}", d + 4));
    }
    Ok(())
}

fn decomposition_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>, p: &SuiteParams) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let oroots = weyl::enumerate_real_roots(&oct, p.depth, p.cap)?;
    let sroots: BTreeSet<Root<Z>> = weyl::enumerate_real_roots(&star, p.depth, p.cap)?.into_iter().collect();
    let n_bound = i64::try_from(p.n_bound).unwrap_or(i64::MAX);
    let mut ok = true;
    let mut in_window = 0;
    for x in &oroots {
        let (beta, n) = oct.to_split(&x.0)?;
        ok &= sroots.contains(&Root(beta));
        if n.abs() <= Z::from(n_bound) {
            in_window += 1;
        }
    }
    c.note(
        "octopus roots split as β + nδ with β a star root",
        ok,
        format!("{} octopus roots within depth {}", oroots.len(), p.depth),
    );
    let words = weyl::root_words(&star, p.depth, p.cap)?;
    let two = Z::from(2);
    let mut reach_ok = true;
    let mut reached = 0;
    for (beta, (word, seed)) in &words {
        for n in -n_bound..=n_bound {
            let (wd, s) = weyl::octopus_root_witness(&oct, word, seed, n)?;
            let x = weyl::evaluate_word(&oct, &wd)?.apply(&oct.unit(oct.index_of(&s)?));
            let target = oct.from_split(&beta.0, &Z::from(n))?;
            reach_ok &= x == target && oct.form(&x, &x) == two;
            reached += 1;
        }
    }
    c.note(
        "every β + nδ in the window is reached by a witness word",
        reach_ok,
        format!(
            "{reached} targets with |n| ≤ {}; {in_window} enumerated roots in the window; finite window only",
            p.n_bound
        ),
    );
    Ok(())
}

/// Powers tried by the Coxeter order probe; finite stars have order at most 30.
pub const ORDER_PROBE: usize = 240;

fn coxeter_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>, p: &SuiteParams) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    for (name, l) in [("star", &star), ("octopus", &oct)] {
        let cox = weyl::coxeter_element(l);
        let cinv = l.euler().inverse().expect("unit triangular");
        let serre = -&(&cinv * &l.euler().transpose());
        c.check(format!("{name} Coxeter element equals −C⁻¹Cᵀ"), *cox.matrix() == serre);
        let from_simples = KCollection::simples(l).coxeter()?;
        c.check(format!("{name} Coxeter element from the simples collection"), from_simples.matrix() == cox.matrix());
    }
    let delta = oct.delta()?.0;
    c.check("c(δ) = δ", weyl::coxeter_element(&oct).apply(&delta) == delta);
    let order = weyl::order_of(&weyl::coxeter_element(&star), p.cap.min(ORDER_PROBE));
    let note = match order {
        Order::Finite(m) => format!("order {m}"),
        Order::Truncated => format!("no finite order up to {}", p.cap.min(ORDER_PROBE)),
    };
    c.note("star Coxeter order probe", true, note);
    Ok(())
}

fn collection_ok(k: &KCollection<Z>) -> Result<bool> {
    Ok(k.is_numerically_exceptional()? && k.is_full())
}

fn mutations_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>, p: &SuiteParams) -> Result<()> {
    let (star, oct) = lattices(w, lambda)?;
    let mut r = rng(p, 2);
    for (name, l) in [("star", &star), ("octopus", &oct)] {
        let s = KCollection::simples(l);
        let mu = l.rank();
        c.check(format!("{name} simples are numerically exceptional and full"), collection_ok(&s)?);
        let cox = s.coxeter()?;
        let (mut inv_ok, mut keep_ok, mut cox_ok) = (true, true, true);
        let mut single = Vec::new();
        for i in 1..mu {
            single.push(BraidGen::B(i));
            single.push(BraidGen::BInv(i));
        }
        single.extend((1..=mu).map(BraidGen::E));
        for g in &single {
            let m = s.braid_act(*g)?;
            keep_ok &= collection_ok(&m)?;
            cox_ok &= m.coxeter()?.matrix() == cox.matrix();
            let back = match *g {
                BraidGen::B(i) => BraidGen::BInv(i),
                BraidGen::BInv(i) => BraidGen::B(i),
                e => e,
            };
            inv_ok &= m.braid_act(back)? == s;
        }
        c.check(format!("{name} b_i b_i⁻¹, b_i⁻¹ b_i and e_i² act trivially"), inv_ok);
        c.check(format!("{name} single mutations keep exceptionality and fullness"), keep_ok);
        c.check(format!("{name} Coxeter element invariant under single mutations"), cox_ok);

        let (mut far_ok, mut braid_ok, mut semi_ok) = (true, true, true);
        for i in 1..mu {
            for j in i + 2..mu {
                far_ok &= s.act_word(&[BraidGen::B(j), BraidGen::B(i)])? == s.act_word(&[BraidGen::B(i), BraidGen::B(j)])?;
            }
            if i + 1 < mu {
                let (a, b) = (BraidGen::B(i), BraidGen::B(i + 1));
                braid_ok &= s.act_word(&[a, b, a])? == s.act_word(&[b, a, b])?;
            }
            // b_i e_i = e_{i+1} b_i, acting right-most first.
            semi_ok &= s.act_word(&[BraidGen::E(i), BraidGen::B(i)])? == s.act_word(&[BraidGen::B(i), BraidGen::E(i + 1)])?;
        }
        c.check(format!("{name} b_i b_j = b_j b_i for |i − j| ≥ 2"), far_ok);
        c.check(format!("{name} b_i b_(i+1) b_i = b_(i+1) b_i b_(i+1)"), braid_ok);
        c.check(format!("{name} b_i e_i = e_(i+1) b_i"), semi_ok);

        let mut walk_ok = true;
        for _ in 0..p.samples.min(30) {
            let mut k = s.clone();
            for _ in 0..8 {
                let g = match r.gen_range(0..3) {
                    0 => BraidGen::B(r.gen_range(1..mu)),
                    1 => BraidGen::BInv(r.gen_range(1..mu)),
                    _ => BraidGen::E(r.gen_range(1..=mu)),
                };
                k = k.braid_act(g)?;
            }
            walk_ok &= collection_ok(&k)? && k.coxeter()?.matrix() == cox.matrix();
        }
        c.note(
            format!("{name} random braid words keep exceptionality, fullness and c"),
            walk_ok,
            format!("seed {}", p.seed),
        );
    }
    Ok(())
}

fn twists_suite(c: &mut Checks, w: &Weights, lambda: Option<LambdaTuple>) -> Result<()> {
    let (_, oct) = lattices(w, lambda)?;
    let mut ok = true;
    for v in oct.labels() {
        let t = twist_matrix(&oct, &oct.simple_root(v)?)?;
        ok &= t == *weyl::simple_reflection(&oct, v)?.matrix();
    }
    c.check("twist at S_v acts on K_0 as r̃_v", ok);
    let a = oct.simple_root(&Vertex::Center)?;
    c.check("twist at S_1 sends [S_1] to −[S_1]", crate::ktheory::spherical_twist_k(&oct, &a, &a.0)? == a.neg().0);
    run_spec(c, "A under g̃_v ↦ twist at S_v", &pres::artin_spec(w)?, &pres::twist_assignment(&oct, "g")?)?;
    Ok(())
}

fn random_ratio(r: &mut ChaCha8Rng) -> Frac<Z> {
    Frac::new(Z::from(r.gen_range(-9..=9)), Z::from(r.gen_range(1..=4)))
}

fn random_point(r: &mut ChaCha8Rng, n: usize) -> DualPoint<Z> {
    let re = (0..n).map(|_| random_ratio(r)).collect();
    let im = (0..n).map(|_| random_ratio(r)).collect();
    DualPoint { re, im }
}

/// Step budget for dominance when the Weyl group is infinite.
const INFINITE_BUDGET: usize = 500;

fn cone_suite(c: &mut Checks, w: &Weights, p: &SuiteParams) -> Result<()> {
    let star = RootLattice::<Z>::star(w);
    let mut r = rng(p, 3);
    let finite = w.chi().is_positive();
    let positive = if finite { weyl::real_roots_closure(&star, p.cap)?.len() / 2 } else { 0 };
    let budget = if finite { 10 * positive.max(1) } else { p.cap.min(INFINITE_BUDGET) };
    let (mut ok, mut repro_ok, mut reached, mut strict) = (true, true, 0, 0);
    for _ in 0..p.samples {
        let pt = random_point(&mut r, star.rank());
        match make_dominant(&star, &pt, budget) {
            Ok(d) => {
                reached += 1;
                strict += usize::from(d.status == ChamberStatus::StrictlyDominant);
                if finite {
                    ok &= d.word.len() <= positive;
                }
                let m = weyl::evaluate_word(&star, &d.word)?.into_matrix().to_fractions();
                let re = m.vec_mul(&pt.re);
                let im = m.vec_mul(&pt.im);
                repro_ok &= pt.act_word(&star, &d.word)? == d.point && re == d.point.re && im == d.point.im;
            }
            Err(Error::NotInConeWithinBudget { .. }) => ok &= !finite,
            Err(e) => return Err(e),
        }
    }
    let name = if finite {
        "random points reach the dominant chamber within budget"
    } else {
        "random points: dominance attempts"
    };
    c.note(
        name,
        ok,
        format!("{reached}/{} reached, {strict} strictly dominant, budget {budget} steps, seed {}", p.samples, p.seed),
    );
    c.check("dominance word maps the input point to the output point", repro_ok);

    let depth = p.depth.min(4);
    let mut mono_ok = true;
    for _ in 0..p.samples.min(20) {
        let mut pt = random_point(&mut r, star.rank());
        // integral real parts and a zero imaginary part give walls a chance
        pt.re.iter_mut().for_each(|x| *x = Frac::from_integer(x.to_integer()));
        pt.im = vec![Frac::from_integer(Z::zero()); star.rank()];
        let small = is_regular(&star, &pt, depth, 1)?;
        let big = is_regular(&star, &pt, depth + 1, 3)?;
        if matches!(small, Regularity::OnWall { .. }) {
            mono_ok &= matches!(big, Regularity::OnWall { .. });
        }
    }
    c.check("is_regular is monotone in its bounds", mono_ok);

    let layers = weyl::orbit_layers(&star, &star.basis(), depth, p.cap)?;
    let mut plant_ok = true;
    for _ in 0..p.samples.min(20) {
        let layer = r.gen_range(0..layers.len());
        let alpha = &layers[layer][r.gen_range(0..layers[layer].len())];
        let n = r.gen_range(-(p.n_bound as i64)..=p.n_bound as i64);
        let mut pt = random_point(&mut r, star.rank());
        let k = alpha.0.iter().position(|x| !x.is_zero()).expect("nonzero root");
        let ck = Frac::from_integer(alpha.0[k].clone());
        for (vals, target) in [(&mut pt.re, Z::from(n)), (&mut pt.im, Z::zero())] {
            vals[k] = Frac::from_integer(Z::zero());
            let rest = alpha.0.iter().zip(vals.iter()).fold(Frac::from_integer(Z::zero()), |acc, (a, v)| {
                acc + Frac::from_integer(a.clone()) * v.clone()
            });
            vals[k] = (Frac::from_integer(target) - rest) / ck.clone();
        }
        plant_ok &= matches!(is_regular(&star, &pt, layer, p.n_bound)?, Regularity::OnWall { .. });
    }
    c.check("planted wall hits are detected", plant_ok);
    Ok(())
}
