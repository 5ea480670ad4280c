//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monopole_core::gauge::{quiver_to_theory, GaugeGroup, MatterWeight, QuiverTheory, Theory};
use monopole_core::lie::{
    dominance_leq, freudenthal_multiplicity, mv_report, weyl_dim, weyl_molien_degrees, CartanType, DominantCharacter,
    RootSystem, WeightVec, DEFAULT_MOLIEN_CAP,
};
use monopole_core::monopole::{
    classify, delta_exponent, hilbert_series, hilbert_series_with, matter_degree, root_pairing, Coweight,
    MonopoleOptions, TheoryKind,
};
use monopole_core::series::{ts_mul, RationalForm, TruncatedSeries};
use monopole_core::slices::{slice_data, slice_report};
use monopole_core::toric::{gale_dual, mirror_check, molien_higgs_series, ChargeData};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Suite = fn(&mut ChaCha8Rng) -> Outcome;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn kleinian(n: usize, cutoff: usize) -> TruncatedSeries {
    RationalForm::new(vec![(0, 1), (n, 1)], vec![2, n])
        .unwrap()
        .expand(cutoff)
}

fn u1(weights: &[(i64, u64)]) -> Theory {
    Theory::new(
        GaugeGroup::torus(1),
        weights.iter().map(|&(w, m)| MatterWeight::new(vec![w], m)).collect(),
    )
}

fn chain(v: &[u64], w: &[u64]) -> QuiverTheory {
    QuiverTheory::new((1..v.len()).map(|i| (i - 1, i)).collect(), v.to_vec(), w.to_vec()).unwrap()
}

fn root_system(t: CartanType, n: usize) -> RootSystem {
    RootSystem::new(t, n).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 1..=6usize {
        let h = hilbert_series(&u1(&[(n as i64, 1)]), 40).map_err(|e| e.to_string())?;
        ensure!(
            h.series == kleinian(n, 40),
            "n={n}: {} != {}",
            h.series,
            kleinian(n, 40)
        );
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("{elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    for n in 2..=6usize {
        let h = hilbert_series(&u1(&[(1, n as u64)]), 40).map_err(|e| e.to_string())?;
        ensure!(h.series == kleinian(n, 40), "n={n}");
    }
    Ok(String::new())
}

fn criterion_3() -> Outcome {
    let suite: Vec<(usize, Vec<Vec<i64>>)> = vec![
        (2, vec![vec![1, 1]]),
        (3, vec![vec![1, 1, 1]]),
        (4, vec![vec![1, 1, 1, 1]]),
        (3, vec![vec![1, 0, 1], vec![0, 1, 1]]),
        (2, vec![vec![1, 2]]),
    ];
    let start = Instant::now();
    for (d, rows) in suite {
        let c = ChargeData::new(d, rows.clone()).map_err(|e| e.to_string())?;
        let r = mirror_check(&c, 24).map_err(|e| format!("{rows:?}: {e}"))?;
        ensure!(r.equal, "{rows:?}: first mismatch at t^{:?}", r.first_mismatch_degree);
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    let r = slice_report(&chain(&[1], &[2]), &root_system(CartanType::A, 1), 20).map_err(|e| e.to_string())?;
    let h = r.monopole.map_err(|e| e.to_string())?;
    ensure!(h.series == kleinian(2, 20), "series {}", h.series);
    ensure!(r.data.dim == 2, "dim {}", r.data.dim);
    Ok(String::new())
}

fn criterion_5() -> Outcome {
    let a2 = root_system(CartanType::A, 2);
    let mut oracle = vec![BigInt::zero(); 21];
    for k in 0..=10i64 {
        let dim = weyl_dim(&a2, &WeightVec::fundamental(vec![k, k])).map_err(|e| e.to_string())?;
        ensure!(
            dim == num_bigint::BigUint::from(((k + 1) * (k + 1) * (k + 1)) as u64),
            "weyl_dim({k}θ) = {dim}"
        );
        oracle[2 * k as usize] = dim.into();
    }
    let oracle = TruncatedSeries::from_coeffs(oracle);
    let r = slice_report(&chain(&[1, 1], &[1, 1]), &a2, 20).map_err(|e| e.to_string())?;
    let h = r.monopole.map_err(|e| e.to_string())?;
    ensure!(h.series == oracle, "{} != {}", h.series, oracle);
    Ok(String::new())
}

fn criterion_6() -> Outcome {
    let kind = |t: &Theory| classify(t).map(|c| c.kind).map_err(|e| e.to_string());
    ensure!(kind(&u1(&[(1, 1)]))? == TheoryKind::Ugly, "GL(1),(1)");
    for n in 2..=8 {
        ensure!(kind(&u1(&[(n, 1)]))? == TheoryKind::Good, "GL(1),({n})");
    }
    ensure!(kind(&u1(&[]))? == TheoryKind::Bad, "GL(1),{{}}");
    let unframed = quiver_to_theory(&chain(&[1], &[0])).map_err(|e| e.to_string())?;
    ensure!(kind(&unframed)? == TheoryKind::Bad, "unframed A1");
    Ok(String::new())
}

fn random_quiver(rng: &mut ChaCha8Rng, t: CartanType, n: usize, max: u64) -> QuiverTheory {
    let rs = root_system(t, n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rs.cartan()[i][j] != 0 {
                edges.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
            }
        }
    }
    let v = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    let w = (0..n).map(|_| rng.gen_range(0..=max)).collect();
    QuiverTheory::new(edges, v, w).unwrap()
}

fn criterion_7() -> Outcome {
    let mut cases: Vec<(CartanType, usize, QuiverTheory)> = vec![
        (CartanType::A, 1, chain(&[1], &[2])),
        (CartanType::A, 1, chain(&[2], &[1])),
        (CartanType::A, 1, chain(&[1], &[0])),
        (CartanType::A, 2, chain(&[1, 1], &[1, 1])),
        (CartanType::A, 2, chain(&[1, 2], &[0, 3])),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (t, n, max) in [
        (CartanType::A, 3, 3),
        (CartanType::A, 4, 3),
        (CartanType::D, 4, 2),
        (CartanType::E, 6, 1),
    ] {
        for _ in 0..20 {
            cases.push((t, n, random_quiver(&mut rng, t, n, max)));
        }
    }
    for (t, n, q) in &cases {
        let s = slice_data(q, &root_system(*t, *n)).map_err(|e| e.to_string())?;
        let v: u64 = q.dim_v.iter().sum();
        ensure!(s.dim == 2 * v, "{t}{n} {q:?}: dim {}", s.dim);
        if v > 0 {
            let rank = quiver_to_theory(q).map_err(|e| e.to_string())?.rank() as u64;
            ensure!(s.dim == 2 * rank, "{t}{n} {q:?}: gauge rank {rank}");
        }
    }
    Ok(format!("{} quivers", cases.len()))
}

/// Weight multiplicities from the Weyl character formula and Kostant's
/// partition function, for simply laced types.
struct CharacterOracle {
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    kostant: HashMap<(Vec<i64>, usize), u64>,
}

impl CharacterOracle {
    fn new(cartan: Vec<Vec<i64>>) -> Self {
        let n = cartan.len();
        let mut roots: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let mut idx = 0;
        while idx < roots.len() {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| roots[idx][j] * cartan[i][j]).sum();
                let mut r = roots[idx].clone();
                r[i] -= pairing;
                if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && !roots.contains(&r) {
                    roots.push(r);
                }
            }
            idx += 1;
        }
        CharacterOracle {
            cartan,
            positive_roots: roots,
            kostant: HashMap::new(),
        }
    }

    fn two_rho_check(&self) -> Vec<i64> {
        let n = self.cartan.len();
        (0..n).map(|i| self.positive_roots.iter().map(|r| r[i]).sum()).collect()
    }

    fn partitions(&mut self, beta: Vec<i64>, from: usize) -> u64 {
        if beta.iter().all(|&x| x == 0) {
            return 1;
        }
        if from == self.positive_roots.len() || beta.iter().any(|&x| x < 0) {
            return 0;
        }
        if let Some(&v) = self.kostant.get(&(beta.clone(), from)) {
            return v;
        }
        let root = self.positive_roots[from].clone();
        let mut total = 0;
        let mut rest = beta.clone();
        while rest.iter().all(|&x| x >= 0) {
            total += self.partitions(rest.clone(), from + 1);
            rest.iter_mut().zip(&root).for_each(|(x, r)| *x -= r);
        }
        self.kostant.insert((beta, from), total);
        total
    }

    fn reflect(&self, i: usize, x: &mut [i64]) {
        let c = x[i];
        for (k, xk) in x.iter_mut().enumerate() {
            *xk -= c * self.cartan[k][i];
        }
    }

    /// Fundamental to root coordinates when integral.
    fn to_root(&self, x: &[i64], rs: &RootSystem) -> Option<Vec<i64>> {
        rs.fundamental_to_root(x)
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn multiplicity(&mut self, rs: &RootSystem, lambda: &[i64], mu: &[i64]) -> i64 {
        let start: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
        let mu_rho: Vec<i64> = mu.iter().map(|x| x + 1).collect();
        let mut orbit: Vec<(Vec<i64>, i64)> = vec![(start.clone(), 1)];
        let mut seen = std::collections::HashSet::from([start]);
        let mut idx = 0;
        while idx < orbit.len() {
            for i in 0..self.cartan.len() {
                let (mut y, s) = orbit[idx].clone();
                self.reflect(i, &mut y);
                if seen.insert(y.clone()) {
                    orbit.push((y, -s));
                }
            }
            idx += 1;
        }
        let mut total = 0i64;
        for (v, sign) in orbit {
            let diff: Vec<i64> = v.iter().zip(&mu_rho).map(|(a, b)| a - b).collect();
            if let Some(beta) = self.to_root(&diff, rs) {
                total += sign * self.partitions(beta, 0) as i64;
            }
        }
        total
    }
}

fn dominant_up_to(weights: &[i64], bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &h in weights {
        let mut next = Vec::new();
        for x in &out {
            let used: i64 = x.iter().zip(weights).map(|(a, b)| a * b).sum();
            for c in 0..=(bound - used) / h {
                let mut y = x.clone();
                y.push(c);
                next.push(y);
            }
        }
        out = next;
    }
    out
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for (t, n) in [
        (CartanType::A, 1),
        (CartanType::A, 2),
        (CartanType::A, 3),
        (CartanType::D, 4),
    ] {
        let rs = root_system(t, n);
        let mut oracle = CharacterOracle::new(rs.cartan().clone());
        let h = oracle.two_rho_check();
        ensure!(
            h.iter()
                .zip(0..)
                .all(|(&x, i)| x == rs.pairing_two_rho_check(&(0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>())),
            "{t}{n}: 2ρ∨ mismatch"
        );
        let candidates = dominant_up_to(&h, 12);
        for lambda in &candidates {
            let ch = DominantCharacter::new(&rs, &WeightVec::fundamental(lambda.clone())).map_err(|e| e.to_string())?;
            for mu in &candidates {
                let want = oracle.multiplicity(&rs, lambda, mu);
                let got = ch.multiplicity(&rs, mu);
                ensure!(
                    want == got as i64,
                    "{t}{n} λ={lambda:?} μ={mu:?}: {got} vs oracle {want}"
                );
                checked += 1;
            }
        }
    }
    let expected: [(CartanType, usize, &[usize]); 5] = [
        (CartanType::A, 1, &[2]),
        (CartanType::A, 2, &[2, 3]),
        (CartanType::B, 2, &[2, 4]),
        (CartanType::G, 2, &[2, 6]),
        (CartanType::A, 3, &[2, 3, 4]),
    ];
    for (t, n, degrees) in expected {
        let d = weyl_molien_degrees(&root_system(t, n), DEFAULT_MOLIEN_CAP).map_err(|e| e.to_string())?;
        ensure!(d.degrees == degrees, "{t}{n}: degrees {:?}", d.degrees);
    }
    Ok(format!("{checked} multiplicities"))
}

/// Images of `w` under permutations of coordinates within each block.
fn block_orbit(group: &GaugeGroup, w: &[i64]) -> Vec<Vec<i64>> {
    let mut orbit = vec![w.to_vec()];
    let mut idx = 0;
    while idx < orbit.len() {
        for b in group.blocks() {
            for i in b.start..b.end.saturating_sub(1) {
                let mut y = orbit[idx].clone();
                y.swap(i, i + 1);
                if !orbit.contains(&y) {
                    orbit.push(y);
                }
            }
        }
        idx += 1;
    }
    orbit
}

/// Random theory whose weight multiset is invariant under the Weyl group.
fn random_theory(rng: &mut ChaCha8Rng) -> Theory {
    const SHAPES: &[&[usize]] = &[&[1], &[2], &[1, 1], &[2, 1], &[1, 1, 1], &[3], &[1, 2]];
    let group = GaugeGroup::new(SHAPES.choose(rng).unwrap().to_vec());
    let r = group.rank();
    let count = rng.gen_range(1..=r + 2);
    let mut matter = Vec::new();
    for _ in 0..count {
        let w: Vec<i64> = loop {
            let w: Vec<i64> = (0..r).map(|_| rng.gen_range(-1..=1)).collect();
            if w.iter().any(|&x| x != 0) {
                break w;
            }
        };
        let m = rng.gen_range(1..=2);
        matter.extend(block_orbit(&group, &w).into_iter().map(|y| MatterWeight::new(y, m)));
    }
    Theory::new(group, matter).canonical()
}

fn random_convergent(rng: &mut ChaCha8Rng, max_rank: usize) -> Theory {
    loop {
        let t = random_theory(rng);
        if t.rank() <= max_rank && classify(&t).map(|c| c.kind != TheoryKind::Bad).unwrap_or(false) {
            return t;
        }
    }
}

fn block_permutation(rng: &mut ChaCha8Rng, group: &GaugeGroup) -> Vec<usize> {
    let mut perm = Vec::new();
    for b in group.blocks() {
        let mut idx: Vec<usize> = b.collect();
        idx.shuffle(rng);
        perm.extend(idx);
    }
    perm
}

fn random_charges(rng: &mut ChaCha8Rng) -> ChargeData {
    loop {
        let g = rng.gen_range(1..=3);
        let d = rng.gen_range(g..=6);
        let rows = (0..g)
            .map(|_| (0..d).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        if let Ok(c) = ChargeData::new(d, rows) {
            if c.is_exact() {
                return c;
            }
        }
    }
}

fn random_series(rng: &mut ChaCha8Rng) -> TruncatedSeries {
    let cutoff = rng.gen_range(0..=8);
    TruncatedSeries::from_coeffs((0..=cutoff).map(|_| rng.gen_range(-5i64..=5)))
}

fn nonnegative(s: &TruncatedSeries) -> bool {
    s.coeffs().iter().all(|c| !c.is_negative())
}

const D: usize = 10;

fn suite_monopole(rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for _ in 0..25 {
        let t = random_convergent(rng, 3);
        let h = hilbert_series(&t, D).map_err(|e| e.to_string())?;
        ensure!(h.series.coeff(0).is_one(), "{t:?}: constant term");
        ensure!(nonnegative(&h.series), "{t:?}: negative coefficient");

        let opts = MonopoleOptions {
            radius_factor: 2,
            ..MonopoleOptions::default()
        };
        let doubled = hilbert_series_with(&t, D, &opts).map_err(|e| e.to_string())?;
        ensure!(
            doubled.series == h.series,
            "{t:?}: pruning radius doubling changed the series"
        );

        let perm = block_permutation(rng, &t.group);
        let permuted = t.permute_coordinates(&perm).canonical();
        let hp = hilbert_series(&permuted, D).map_err(|e| e.to_string())?;
        ensure!(
            hp.series == h.series,
            "{t:?}: block permutation {perm:?} changed the series"
        );

        for _ in 0..10 {
            let theta: Vec<i64> = (0..t.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            let normal = Coweight(theta.clone()).dominant_normalize(&t.group);
            let direct = matter_degree(&t, &theta) - 2 * root_pairing(&t.group, &theta);
            ensure!(
                delta_exponent(&t, &normal).map_err(|e| e.to_string())? == direct,
                "{t:?}: Δ not invariant under normalization of {theta:?}"
            );
            ensure!(
                normal.dominant_normalize(&t.group) == normal,
                "normalization not idempotent"
            );
        }
        count += 1;
    }
    for _ in 0..10 {
        let a = random_convergent(rng, 2);
        let b = random_convergent(rng, 2);
        let ha = hilbert_series(&a, D).map_err(|e| e.to_string())?.series;
        let hb = hilbert_series(&b, D).map_err(|e| e.to_string())?.series;
        let hab = hilbert_series(&a.product(&b), D).map_err(|e| e.to_string())?.series;
        ensure!(hab == ts_mul(&ha, &hb), "factor product law fails for {a:?} × {b:?}");
    }
    for n in 1..=4usize {
        let mut matter = vec![MatterWeight::new(vec![0; n], n as u64)];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let mut w = vec![0; n];
                    w[i] = 1;
                    w[j] = -1;
                    matter.push(MatterWeight::new(w, 1));
                }
            }
        }
        let adj = Theory::new(GaugeGroup::new(vec![n]), matter);
        for _ in 0..10 {
            let mut theta: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
            theta.sort_unstable_by(|a, b| b.cmp(a));
            ensure!(
                matter_degree(&adj, &theta) == 2 * root_pairing(&adj.group, &theta),
                "adjoint identity at {theta:?}"
            );
        }
    }
    Ok(format!("{count} theories"))
}

fn suite_toric(rng: &mut ChaCha8Rng) -> Outcome {
    let mut mirrors = 0;
    for _ in 0..30 {
        let c = random_charges(rng);
        let back = gale_dual(&gale_dual(&c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure!(back.row_lattice() == c.row_lattice(), "{c:?}: double Gale dual differs");
        let m = molien_higgs_series(&c, D);
        ensure!(m.coeff(0).is_one() && nonnegative(&m), "{c:?}: Molien series {m}");
    }
    for _ in 0..40 {
        let c = random_charges(rng);
        let r = mirror_check(&c, D).map_err(|e| format!("{c:?}: {e}"))?;
        ensure!(
            r.equal,
            "{c:?}: mirror mismatch at t^{:?}: {} vs {}",
            r.first_mismatch_degree,
            r.lhs,
            r.rhs
        );
        mirrors += 1;
    }
    for d in 1..=4 {
        let c = ChargeData::new(d, vec![]).unwrap();
        let want = RationalForm::new(vec![(0, 1)], vec![1; 2 * d]).unwrap().expand(D);
        ensure!(molien_higgs_series(&c, D) == want, "trivial gauge law d={d}");
    }
    Ok(format!("{mirrors} random mirror pairs"))
}

fn suite_series(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..200 {
        let (a, b, c) = (random_series(rng), random_series(rng), random_series(rng));
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "associativity");
        ensure!(&a * &b == &b * &a, "commutativity");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity");
        ensure!(&(&a + &b) + &c == &a + &(&b + &c), "additive associativity");
        ensure!(
            (&a + &(-&a)).is_zero() && (&(&a + &b) - &b) == a.truncate(b.cutoff().min(a.cutoff())),
            "additive inverse"
        );
    }
    for _ in 0..50 {
        let terms = (0..rng.gen_range(1..=3))
            .map(|_| (rng.gen_range(0..=6), rng.gen_range(-3..=3)))
            .collect();
        let factors: Vec<usize> = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(1..=4)).collect();
        let Ok(f) = RationalForm::new(terms, factors.clone()) else {
            continue;
        };
        let mut s = f.expand(12);
        for k in factors {
            s.mul_one_minus_t_pow(k);
        }
        let mut numerator = TruncatedSeries::zero(12);
        for &(deg, c) in f.numerator() {
            numerator.add_shifted(&TruncatedSeries::monomial(0, c, 12), deg);
        }
        ensure!(s == numerator, "expansion inversion for {f:?}");
    }
    Ok(String::new())
}

fn suite_quiver(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..40 {
        let n = rng.gen_range(1..=4);
        let q = random_quiver(rng, CartanType::A, n, 3);
        if q.dim_v.iter().all(|&v| v == 0) {
            continue;
        }
        let t = quiver_to_theory(&q).map_err(|e| e.to_string())?;
        let v = &q.dim_v;
        let expected: u64 = q.edges.iter().map(|&(a, b)| v[a] * v[b]).sum::<u64>()
            + v.iter().zip(&q.dim_w).map(|(x, y)| x * y).sum::<u64>();
        ensure!(t.matter_dimension() == expected, "{q:?}: weight count");

        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let r = q.reorder(&order);
        let tr = quiver_to_theory(&r).map_err(|e| e.to_string())?;
        let mut old_offset = vec![0usize; n];
        let mut acc = 0;
        for j in 0..n {
            old_offset[j] = acc;
            acc += v[j] as usize;
        }
        let mut perm = Vec::new();
        for &o in &order {
            perm.extend(old_offset[o]..old_offset[o] + v[o] as usize);
        }
        let mut mapped = t.permute_coordinates(&perm);
        mapped.group = tr.group.clone();
        ensure!(mapped.canonical() == tr.canonical(), "{q:?} reordered by {order:?}");

        let rs = root_system(CartanType::A, n);
        let s = slice_data(&q, &rs).map_err(|e| e.to_string())?;
        ensure!(
            !s.has_fixed_point || s.nonempty,
            "{q:?}: fixed point without nonemptiness"
        );
        if s.nonempty {
            for i in 0..n {
                let mut w = q.dim_w.clone();
                w[i] += 1;
                let bigger = QuiverTheory::new(q.edges.clone(), q.dim_v.clone(), w).unwrap();
                ensure!(
                    slice_data(&bigger, &rs).map_err(|e| e.to_string())?.nonempty,
                    "{q:?}: W monotonicity"
                );
            }
        }
    }
    Ok(String::new())
}

fn suite_lie(rng: &mut ChaCha8Rng) -> Outcome {
    let types = [
        (CartanType::A, 1),
        (CartanType::A, 2),
        (CartanType::A, 3),
        (CartanType::B, 2),
        (CartanType::B, 3),
        (CartanType::C, 3),
        (CartanType::G, 2),
    ];
    for (t, n) in types {
        let rs = root_system(t, n);
        let h: Vec<i64> = (0..n)
            .map(|i| rs.pairing_two_rho_check(&(0..n).map(|k| i64::from(k == i)).collect::<Vec<_>>()))
            .collect();
        for lambda in dominant_up_to(&h, 16) {
            let lw = WeightVec::fundamental(lambda.clone());
            let ch = DominantCharacter::new(&rs, &lw).map_err(|e| e.to_string())?;
            let mut total = num_bigint::BigUint::zero();
            for (mu, m) in ch.dominant_weights() {
                let orbit = rs.weyl_orbit(&mu);
                total += num_bigint::BigUint::from(m) * orbit.len();
                ensure!(
                    dominance_leq(&rs, &WeightVec::fundamental(mu.clone()), &lw).map_err(|e| e.to_string())?,
                    "{t}{n}: weight {mu:?} of V({lambda:?}) not below λ"
                );
                let sample = orbit.choose(rng).unwrap();
                let m2 = freudenthal_multiplicity(&rs, &lw, &WeightVec::fundamental(sample.clone()))
                    .map_err(|e| e.to_string())?;
                ensure!(m2 == m, "{t}{n}: multiplicity not Weyl invariant at {sample:?}");

                let r = mv_report(&rs, &lw, &WeightVec::fundamental(sample.clone())).map_err(|e| e.to_string())?;
                ensure!(
                    r.dim_attractor.unwrap() + r.dim_repellent.unwrap() == rs.pairing_two_rho_check(&lambda),
                    "{t}{n}: attractor/repellent dimensions at λ={lambda:?} ν={sample:?}"
                );
            }
            ensure!(
                total == weyl_dim(&rs, &lw).map_err(|e| e.to_string())?,
                "{t}{n}: Σ mult ≠ dim V({lambda:?})"
            );
        }

        let weights: Vec<WeightVec> = (0..12)
            .map(|_| WeightVec::fundamental((0..n).map(|_| rng.gen_range(-2..=2)).collect()))
            .collect();
        let leq = |a: &WeightVec, b: &WeightVec| dominance_leq(&rs, a, b).unwrap();
        for a in &weights {
            ensure!(leq(a, a), "reflexivity");
            for b in &weights {
                if leq(a, b) && leq(b, a) {
                    ensure!(a == b, "antisymmetry");
                }
                for c in &weights {
                    if leq(a, b) && leq(b, c) {
                        ensure!(leq(a, c), "transitivity");
                    }
                }
            }
        }

        let deg = weyl_molien_degrees(&rs, 24).map_err(|e| e.to_string())?;
        ensure!(
            deg.degrees.iter().product::<usize>() as u64 == rs.weyl_group_order(),
            "{t}{n}: ∏ d_i ≠ |W|"
        );
        let mut m = deg.molien.clone();
        for &d in &deg.degrees {
            m.mul_one_minus_t_pow(d);
        }
        ensure!(
            m == TruncatedSeries::one(24),
            "{t}{n}: Molien series is not ∏(1 − t^d)⁻¹"
        );
    }
    Ok(String::new())
}

fn criterion_9() -> Outcome {
    let suites: [(&str, u64, Suite); 5] = [
        ("monopole", 9001, suite_monopole),
        ("toric", 9002, suite_toric),
        ("series", 9003, suite_series),
        ("quiver", 9004, suite_quiver),
        ("lie", 9005, suite_lie),
    ];
    let mut notes = Vec::new();
    for (name, seed, suite) in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let detail = suite(&mut rng).map_err(|e| format!("{name} suite (seed {seed}): {e}"))?;
        notes.push(if detail.is_empty() {
            name.to_string()
        } else {
            format!("{name}: {detail}")
        });
    }
    Ok(notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("Kleinian family n=1..6 at D=40", criterion_1),
        ("charge-spread equivalence n=2..6", criterion_2),
        ("mirror suite at D=24", criterion_3),
        ("T[SU(2)] slice at D=20", criterion_4),
        ("sl3 minimal orbit slice at D=20", criterion_5),
        ("classification", criterion_6),
        ("slice dimension consistency", criterion_7),
        ("Lie oracles", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) if detail.is_empty() => println!("PASS criterion {} {name} [{elapsed:.2?}]", i + 1),
            Ok(detail) => println!("PASS criterion {} {name} ({detail}) [{elapsed:.2?}]", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL criterion {} {name}: {reason} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
