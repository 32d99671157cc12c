//! The eight acceptance criteria, each against oracles written here in plain i64.

use std::collections::{HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use octoroot::catalog::{catalog, spherical, CatalogEntry, DEFAULT_SEED};
use octoroot::cone::{make_dominant, DualPoint};
use octoroot::ktheory::{twist_matrix, BraidGen, KCollection};
use octoroot::matrix::Matrix;
use octoroot::presentations::{self as pres, PresentationSpec};
use octoroot::quiver::{Vertex, Weights};
use octoroot::suites::{run_suite, Suite, SuiteParams};
use octoroot::weyl::{self, Order};
use octoroot::{Int, Lattice};

type M = Vec<Vec<i64>>;

mod oracle {
    use super::*;

    /// Octopus Cartan matrix in canonical order, from the diagram rules.
    pub fn octopus_cartan(a: &[u32]) -> M {
        let n = 2 + a.iter().map(|&x| x as usize - 1).sum::<usize>();
        let apex = n - 1;
        let mut m = vec![vec![0; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut edge = |p: usize, q: usize, v: i64| {
            m[p][q] = v;
            m[q][p] = v;
        };
        edge(0, apex, 2);
        let mut k = 1;
        for &x in a {
            edge(0, k, -1);
            edge(k, apex, -1);
            for j in 1..x as usize - 1 {
                edge(k + j - 1, k + j, -1);
            }
            k += x as usize - 1;
        }
        m
    }

    pub fn star_cartan(a: &[u32]) -> M {
        let o = octopus_cartan(a);
        let n = o.len() - 1;
        o[..n].iter().map(|r| r[..n].to_vec()).collect()
    }

    /// Euler matrix: identity minus arrows plus relations, from the quiver description.
    pub fn euler(a: &[u32], octopus: bool) -> M {
        let n = 1 + a.iter().map(|&x| x as usize - 1).sum::<usize>() + usize::from(octopus);
        let mut m = identity(n);
        let mut k = 1;
        for &x in a {
            m[0][k] -= 1;
            for j in 1..x as usize - 1 {
                m[k + j - 1][k + j] -= 1;
            }
            if octopus {
                m[k][n - 1] -= 1;
            }
            k += x as usize - 1;
        }
        if octopus {
            m[0][n - 1] += 2;
        }
        m
    }

    pub fn identity(n: usize) -> M {
        (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
    }

    pub fn mul(a: &M, b: &M) -> M {
        let n = b[0].len();
        a.iter()
            .map(|r| (0..n).map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum()).collect())
            .collect()
    }

    pub fn apply(a: &M, x: &[i64]) -> Vec<i64> {
        a.iter().map(|r| r.iter().zip(x).map(|(p, q)| p * q).sum()).collect()
    }

    pub fn transpose(a: &M) -> M {
        (0..a[0].len()).map(|j| a.iter().map(|r| r[j]).collect()).collect()
    }

    pub fn form(i: &M, x: &[i64], y: &[i64]) -> i64 {
        x.iter().zip(i).map(|(p, r)| p * r.iter().zip(y).map(|(q, s)| q * s).sum::<i64>()).sum()
    }

    /// Matrix of `x ↦ x − I(x, α_v) α_v`.
    pub fn refl(i: &M, v: usize) -> M {
        let mut m = identity(i.len());
        for b in 0..i.len() {
            m[v][b] -= i[v][b];
        }
        m
    }

    pub fn unit(n: usize, k: usize) -> Vec<i64> {
        (0..n).map(|j| i64::from(j == k)).collect()
    }

    /// All roots reachable from the basis, by brute force.
    pub fn closure(i: &M) -> HashSet<Vec<i64>> {
        let n = i.len();
        let mut seen: HashSet<Vec<i64>> = (0..n).map(|k| unit(n, k)).collect();
        let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for v in 0..n {
                let c = form(i, &x, &unit(n, v));
                let mut y = x.clone();
                y[v] -= c;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Roots reachable in at most `depth` reflections.
    pub fn orbit(i: &M, depth: usize) -> HashSet<Vec<i64>> {
        let n = i.len();
        let mut seen: HashSet<Vec<i64>> = (0..n).map(|k| unit(n, k)).collect();
        let mut layer: Vec<Vec<i64>> = seen.iter().cloned().collect();
        for _ in 0..depth {
            let mut next = Vec::new();
            for x in &layer {
                for v in 0..n {
                    let y = apply(&refl(i, v), x);
                    if seen.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            layer = next;
        }
        seen
    }

    pub fn group_order(i: &M) -> usize {
        let n = i.len();
        let gens: Vec<M> = (0..n).map(|v| refl(i, v)).collect();
        let mut seen = HashSet::from([identity(n)]);
        let mut queue = VecDeque::from([identity(n)]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = mul(&g, s);
                if seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        seen.len()
    }

    /// Rank over Q by fraction-free elimination.
    pub fn rank(m: &M) -> usize {
        let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..rows).find(|&k| a[k][c] != 0) else { continue };
            a.swap(r, p);
            for k in r + 1..rows {
                let (x, y) = (a[r][c], a[k][c]);
                for j in 0..cols {
                    a[k][j] = a[k][j] * x - a[r][j] * y;
                }
                let g = a[k].iter().fold(0i128, |g, &v| gcd(g, v.abs()));
                if g > 1 {
                    a[k].iter_mut().for_each(|v| *v /= g);
                }
            }
            r += 1;
        }
        r
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    /// Inverse of a unit upper triangular matrix by back substitution.
    pub fn unit_upper_inverse(c: &M) -> M {
        let n = c.len();
        let mut inv = identity(n);
        for col in 0..n {
            for row in (0..col).rev() {
                let s: i64 = (row + 1..=col).map(|k| c[row][k] * inv[k][col]).sum();
                inv[row][col] = -s;
            }
        }
        inv
    }

    pub fn delta(n: usize) -> Vec<i64> {
        let mut d = vec![0; n];
        d[0] = -1;
        d[n - 1] = 1;
        d
    }
}

fn small(m: &Matrix<Int>) -> M {
    m.to_rows().iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
}

fn small_vec(v: &[Int]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

fn weights(s: &str) -> Weights {
    s.parse().unwrap()
}

fn octopus(e: &CatalogEntry) -> Lattice {
    Lattice::octopus(&e.weights, e.lambda.clone()).unwrap()
}

fn suite_passes(suite: Suite, e: &CatalogEntry, p: &SuiteParams) {
    let rep = run_suite(suite, e, p).unwrap();
    let bad: Vec<_> = rep.details.iter().filter(|d| !d.pass).collect();
    assert!(bad.is_empty(), "{} {suite}: {bad:?}", e.weights);
}

fn spec_passes(spec: &PresentationSpec, a: &pres::Assignment<Int>) {
    let rep = pres::verify(spec, a).unwrap();
    assert!(rep.pass, "{:?}", rep.failures().iter().map(|r| &r.tag).collect::<Vec<_>>());
}

fn tags(spec: &PresentationSpec) -> Vec<String> {
    spec.relations.iter().map(|r| r.tag.split('/').next().unwrap().to_string()).collect()
}

fn has_families(spec: &PresentationSpec, families: &[&str]) {
    let t = tags(spec);
    for f in families {
        assert!(t.iter().any(|x| x == f), "{} lacks {f}", spec.weights);
    }
}

fn criterion_lattice() {
    for e in catalog() {
        let a = e.weights.as_slice();
        let oct = octopus(&e);
        let star = Lattice::star(&e.weights);
        assert_eq!(small(oct.euler()), oracle::euler(a, true), "{}", e.weights);
        assert_eq!(small(star.euler()), oracle::euler(a, false), "{}", e.weights);
        let i = oracle::octopus_cartan(a);
        assert_eq!(small(oct.cartan()), i);
        assert_eq!(small(star.cartan()), oracle::star_cartan(a));
        let c = oracle::euler(a, true);
        assert_eq!(i, {
            let t = oracle::transpose(&c);
            c.iter().zip(&t).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect::<M>()
        });
        let n = i.len();
        assert_eq!(i[0][n - 1], 2);
        assert!(oracle::apply(&i, &oracle::delta(n)).iter().all(|&x| x == 0));
        let s = oracle::star_cartan(a);
        let nullity = s.len() - oracle::rank(&s);
        let elliptic = ["3,3,3", "2,4,4", "2,3,6", "2,2,2,2"].contains(&e.weights.to_string().as_str());
        assert_eq!(nullity, usize::from(elliptic), "{}", e.weights);
        assert_eq!(star.radical_basis().len(), nullity);
        assert_eq!(oct.radical_basis().len(), n - oracle::rank(&i));
        suite_passes(Suite::Lattice, &e, &SuiteParams::default());
    }
}

fn criterion_presentations() {
    for e in catalog() {
        let w = &e.weights;
        let oct = octopus(&e);
        let star = Lattice::star(w);
        // library reflections agree with the oracle before they are used
        let i = oracle::octopus_cartan(w.as_slice());
        for (k, v) in oct.labels().iter().enumerate() {
            assert_eq!(small(weyl::simple_reflection(&oct, v).unwrap().matrix()), oracle::refl(&i, k));
        }
        let c = pres::star_coxeter_spec(w);
        has_families(&c, &["C0", "C1.0", "C1.1"]);
        spec_passes(&c, &pres::reflection_assignment(&star, "w"));
        let sd = pres::semidirect_spec(w);
        has_families(&sd, &["SD.a", "SD.b", "SD.c", "SD.d", "SD.e", "SD.f", "SD.g"]);
        let wspec = pres::generalized_coxeter_spec_w(w).unwrap();
        has_families(&wspec, &["W0", "W1.0", "W1.1", "W2", "W3.1", "W3.2"]);
        let artin = pres::artin_spec(w).unwrap();
        has_families(&artin, &["A1.0", "A1.1", "A2", "A3.1", "A3.2"]);
        let e_spec = pres::van_der_lek_spec(w);
        has_families(&e_spec, &["E1", "E1-2", "Ec", "E3", "Ea"]);
        for s in [Suite::Presentations, Suite::Semidirect, Suite::Artin, Suite::VanDerLek, Suite::Twists] {
            suite_passes(s, &e, &SuiteParams::default());
        }
    }
}

fn product(i: &M, letters: &[usize]) -> M {
    letters.iter().fold(oracle::identity(i.len()), |m, &v| oracle::mul(&m, &oracle::refl(i, v)))
}

fn power(m: &M, k: usize) -> M {
    (0..k).fold(oracle::identity(m.len()), |acc, _| oracle::mul(&acc, m))
}

fn first_arm_index(a: &[u32], i: usize) -> usize {
    1 + a[..i - 1].iter().map(|&x| x as usize - 1).sum::<usize>()
}

fn criterion_power_forms() {
    for e in catalog() {
        let a = e.weights.as_slice();
        let i = oracle::octopus_cartan(a);
        let (c, apex) = (0, i.len() - 1);
        let id = oracle::identity(i.len());
        for p in 1..=a.len() {
            let x = first_arm_index(a, p);
            assert_eq!(power(&product(&i, &[c, x, apex, x]), 3), id);
            for q in p + 1..=a.len() {
                let y = first_arm_index(a, q);
                assert_eq!(power(&product(&i, &[x, c, x, apex, y, apex]), 2), id);
                assert_eq!(power(&product(&i, &[x, apex, x, c, y, c]), 2), id);
            }
        }
        let spec = pres::power_form_spec(&e.weights).unwrap();
        has_families(&spec, &["EQ1.sigma", "EQ1.power", "EQ2.sigma", "EQ2.power", "EQ3.sigma", "EQ3.power"]);
        suite_passes(Suite::PowerForms, &e, &SuiteParams::default());
    }
}

fn criterion_translations() {
    let params = SuiteParams { samples: 100, ..SuiteParams::default() };
    for e in catalog() {
        let a = e.weights.as_slice();
        let oct = octopus(&e);
        let i = oracle::octopus_cartan(a);
        let n = i.len();
        let d = oracle::delta(n);
        for (k, v) in oct.labels().iter().enumerate().filter(|(_, v)| v.is_star()) {
            let mut closed = oracle::identity(n);
            for (r, row) in closed.iter_mut().enumerate() {
                for (cidx, x) in row.iter_mut().enumerate() {
                    *x -= d[r] * i[k][cidx];
                }
            }
            let tau = weyl::translation_element(&oct, v).unwrap();
            assert_eq!(small(tau.matrix()), closed, "{} {v}", e.weights);
            let letters: Vec<usize> =
                tau.word().unwrap().iter().map(|(u, _)| oct.index_of(u).unwrap()).collect();
            assert_eq!(product(&i, &letters), closed);
        }
        suite_passes(Suite::Translations, &e, &params);
    }
}

fn criterion_roots() {
    for (w, count) in [("2,2,2", 24), ("2,3,3", 72), ("2,3,4", 126), ("2,3,5", 240)] {
        let wt = weights(w);
        let expected = oracle::closure(&oracle::star_cartan(wt.as_slice()));
        assert_eq!(expected.len(), count, "oracle {w}");
        let got: HashSet<Vec<i64>> = weyl::real_roots_closure(&Lattice::star(&wt), 1_000_000)
            .unwrap()
            .iter()
            .map(|r| small_vec(&r.0))
            .collect();
        assert_eq!(got, expected, "{w}");
    }
    let d4 = weights("2,2,2");
    let order = oracle::group_order(&oracle::star_cartan(d4.as_slice()));
    assert_eq!(order, 192);
    assert_eq!(weyl::group_enumerate(&Lattice::star(&d4), 10_000), Order::Finite(192));

    let oct = Lattice::octopus(&d4, None).unwrap();
    let i = oracle::octopus_cartan(d4.as_slice());
    let window = |set: &HashSet<Vec<i64>>| -> HashSet<Vec<i64>> {
        set.iter().filter(|x| x[4].abs() <= 3).cloned().collect()
    };
    // the window stops growing well before depth 14
    let a = window(&oracle::orbit(&i, 12));
    let b = window(&oracle::orbit(&i, 14));
    assert_eq!(a, b);
    assert_eq!(a.len(), 168);
    let lib: HashSet<Vec<i64>> =
        weyl::enumerate_real_roots(&oct, 14, 1_000_000).unwrap().iter().map(|r| small_vec(&r.0)).collect();
    assert_eq!(window(&lib), a);
    let star_roots = oracle::closure(&oracle::star_cartan(d4.as_slice()));
    for x in &a {
        assert_eq!(oracle::form(&i, x, x), 2);
        // β + nδ with n the 1* coordinate
        let mut beta = x[..4].to_vec();
        beta[0] += x[4];
        assert!(star_roots.contains(&beta), "{x:?}");
    }

    for w in ["2,2,2", "2,3,4"] {
        let wt = weights(w);
        let oct = Lattice::octopus(&wt, None).unwrap();
        let star = Lattice::star(&wt);
        let i = oracle::octopus_cartan(wt.as_slice());
        let n = i.len();
        let d = oracle::delta(n);
        let words = weyl::root_words(&star, 20, 100_000).unwrap();
        let reach = |word: &[(Vertex, i8)], seed: &Vertex| -> Vec<i64> {
            let letters: Vec<usize> = word.iter().map(|(u, _)| oct.index_of(u).unwrap()).collect();
            oracle::apply(&product(&i, &letters), &oracle::unit(n, oct.index_of(seed).unwrap()))
        };
        let shifted = |base: &[i64], k: i64| -> Vec<i64> { base.iter().zip(&d).map(|(x, y)| x + k * y).collect() };
        for nn in -3..=3 {
            // simple roots: v = 1 with either parity, first arm vertices and deeper ones
            for (k, v) in oct.labels().iter().enumerate().filter(|(_, v)| v.is_star()) {
                let (word, seed) = weyl::simple_shift_witness(&oct, v, nn).unwrap();
                assert_eq!(reach(&word, &seed), shifted(&oracle::unit(n, k), nn), "{w} {v} {nn}");
            }
            for (beta, (word, seed)) in &words {
                let (wd, s) = weyl::octopus_root_witness(&oct, word, seed, nn).unwrap();
                let mut target = small_vec(&beta.0);
                target.push(0);
                assert_eq!(reach(&wd, &s), shifted(&target, nn), "{w} {beta} {nn}");
            }
        }
        if w == "2,3,4" {
            assert!(oct.labels().contains(&Vertex::arm(3, 3)));
        }
    }
    let params = SuiteParams { depth: 6, ..SuiteParams::default() };
    for e in catalog() {
        suite_passes(Suite::Roots, &e, &params);
        suite_passes(Suite::RootsDecomposition, &e, &params);
    }
}

fn criterion_coxeter() {
    for e in catalog() {
        let a = e.weights.as_slice();
        for (octo, l) in [(false, Lattice::star(&e.weights)), (true, octopus(&e))] {
            let c = oracle::euler(a, octo);
            let serre: M = oracle::mul(&oracle::unit_upper_inverse(&c), &oracle::transpose(&c))
                .into_iter()
                .map(|r| r.into_iter().map(|x| -x).collect())
                .collect();
            let i = if octo { oracle::octopus_cartan(a) } else { oracle::star_cartan(a) };
            let letters: Vec<usize> = (0..i.len()).collect();
            assert_eq!(product(&i, &letters), serre, "{}", e.weights);
            assert_eq!(small(weyl::coxeter_element(&l).matrix()), serre, "{}", e.weights);
            if octo {
                let d = oracle::delta(i.len());
                assert_eq!(oracle::apply(&serre, &d), d);
            }
        }
        suite_passes(Suite::Coxeter, &e, &SuiteParams::default());
    }
    let cox = weyl::coxeter_element(&Lattice::star(&weights("2,2,2")));
    assert_eq!(weyl::order_of(&cox, 1000), Order::Finite(6));
    let i = oracle::star_cartan(&[2, 2, 2]);
    let c = product(&i, &[0, 1, 2, 3]);
    assert_eq!(power(&c, 6), oracle::identity(4));
    assert!((1..6).all(|k| power(&c, k) != oracle::identity(4)));
}

/// Gram matrix of χ on the collection, from the oracle Euler matrix.
fn gram_ok(c: &M, classes: &[Vec<i64>]) -> bool {
    let chi = |x: &[i64], y: &[i64]| oracle::form(c, x, y);
    (0..classes.len()).all(|p| {
        chi(&classes[p], &classes[p]) == 1 && (0..p).all(|q| chi(&classes[p], &classes[q]) == 0)
    })
}

fn full(classes: &[Vec<i64>]) -> bool {
    let n = classes.len();
    let m: M = classes.to_vec();
    // unimodular iff |det| = 1; rank plus determinant via the Bareiss form
    oracle::rank(&m) == n && det(&m).abs() == 1
}

fn det(m: &M) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| i128::from(x)).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn criterion_ktheory() {
    let mut r = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for e in catalog() {
        let a = e.weights.as_slice();
        for (octo, l) in [(false, Lattice::star(&e.weights)), (true, octopus(&e))] {
            let c = oracle::euler(a, octo);
            let i = if octo { oracle::octopus_cartan(a) } else { oracle::star_cartan(a) };
            let s = KCollection::simples(&l);
            let classes = |k: &KCollection<Int>| -> Vec<Vec<i64>> { k.classes().iter().map(|x| small_vec(x)).collect() };
            assert!(gram_ok(&c, &classes(&s)));
            let mu = l.rank();
            for _ in 0..20 {
                let g = match r.gen_range(0..3) {
                    0 => BraidGen::B(r.gen_range(1..mu)),
                    1 => BraidGen::BInv(r.gen_range(1..mu)),
                    _ => BraidGen::E(r.gen_range(1..=mu)),
                };
                let m = s.braid_act(g).unwrap();
                let got = classes(&m);
                assert!(gram_ok(&c, &got) && full(&got), "{} {g}", e.weights);
                // b_i and its inverse by the defining formula
                let x = classes(&s);
                match g {
                    BraidGen::B(k) => {
                        let (p, q) = (&x[k - 1], &x[k]);
                        let h = oracle::form(&c, p, q);
                        assert_eq!(got[k - 1], *q);
                        assert_eq!(got[k], q.iter().zip(p).map(|(y, z)| h * y - z).collect::<Vec<_>>());
                    }
                    BraidGen::BInv(k) => {
                        let (p, q) = (&x[k - 1], &x[k]);
                        let h = oracle::form(&c, p, q);
                        assert_eq!(got[k - 1], p.iter().zip(q).map(|(y, z)| h * y - z).collect::<Vec<_>>());
                        assert_eq!(got[k], *p);
                    }
                    BraidGen::E(k) => assert_eq!(got[k - 1], x[k - 1].iter().map(|v| -v).collect::<Vec<_>>()),
                }
                assert_eq!(m.coxeter().unwrap().matrix(), s.coxeter().unwrap().matrix());
            }
            for (k, v) in l.labels().iter().enumerate() {
                let t = twist_matrix(&l, &l.simple_root(v).unwrap()).unwrap();
                assert_eq!(small(&t), oracle::refl(&i, k));
            }
        }
        suite_passes(Suite::Mutations, &e, &SuiteParams::default());
        suite_passes(Suite::Twists, &e, &SuiteParams::default());
    }
}

type Q = Ratio<BigInt>;

fn criterion_cone() {
    let mut r = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for e in spherical() {
        let a = e.weights.as_slice();
        let i = oracle::star_cartan(a);
        let n = i.len();
        let positive = oracle::closure(&i).len() / 2;
        let star = Lattice::star(&e.weights);
        let q = |r: &mut ChaCha8Rng| Q::new(BigInt::from(r.gen_range(-9..=9)), BigInt::from(r.gen_range(1..=4)));
        for _ in 0..100 {
            let re: Vec<Q> = (0..n).map(|_| q(&mut r)).collect();
            let im: Vec<Q> = (0..n).map(|_| q(&mut r)).collect();
            let p = DualPoint::new(re.clone(), im.clone()).unwrap();
            let d = make_dominant(&star, &p, 10 * positive).unwrap();
            assert!(d.word.len() <= positive);
            // replay h ↦ h ∘ r_v by hand
            let (mut hr, mut hi) = (re, im);
            for (v, _) in &d.word {
                let k = star.index_of(v).unwrap();
                let (xr, xi) = (hr[k].clone(), hi[k].clone());
                for u in 0..n {
                    hr[u] -= Q::from_integer(BigInt::from(i[u][k])) * xr.clone();
                    hi[u] -= Q::from_integer(BigInt::from(i[u][k])) * xi.clone();
                }
            }
            assert_eq!(d.point.re, hr);
            assert_eq!(d.point.im, hi);
            assert!(hi.iter().all(|x| *x >= Q::from_integer(BigInt::from(0))));
        }
        suite_passes(Suite::Cone, &e, &SuiteParams { samples: 100, ..SuiteParams::default() });
    }
}

fn main() {
    let criteria: [(&str, fn(), Duration); 8] = [
        ("lattice", criterion_lattice, Duration::from_secs(1)),
        ("presentations", criterion_presentations, Duration::from_secs(5)),
        ("power forms", criterion_power_forms, Duration::from_secs(2)),
        ("translations", criterion_translations, Duration::from_secs(5)),
        ("roots", criterion_roots, Duration::from_secs(60)),
        ("coxeter", criterion_coxeter, Duration::from_secs(2)),
        ("k-theory", criterion_ktheory, Duration::from_secs(5)),
        ("cone", criterion_cone, Duration::from_secs(10)),
    ];
    let mut failed = Vec::new();
    for (k, (name, f, limit)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let el = t.elapsed();
        let verdict = match (&outcome, el <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (over the {limit:?} limit)"),
            (Err(_), _) => "FAIL".to_string(),
        };
        println!("criterion {} {name}: {verdict} in {el:.2?}", k + 1);
        if verdict != "PASS" {
            failed.push(*name);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
