//! Root systems of simple type: Cartan data, positive (co)roots, dominance
//! order, Weyl group traversal, weight multiplicities and invariant degrees.
//!
//! Conventions: `cartan[i][j] = ⟨α_j, α_i∨⟩`. Weights are written either in
//! the fundamental-weight basis (`x_i = ⟨x, α_i∨⟩`) or in the simple-root
//! basis. A simple root `α_j` has fundamental coordinates equal to column `j`
//! of the Cartan matrix. For simply-laced types roots and coroots coincide;
//! otherwise the coroot system is built from the transposed Cartan matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix};
use crate::series::TruncatedSeries;

/// Weyl groups larger than this are not enumerated.
pub const WEYL_ENUMERATION_LIMIT: u64 = 10_000_000;

pub const DEFAULT_MOLIEN_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanType {
    pub fn is_simply_laced(self) -> bool {
        matches!(self, CartanType::A | CartanType::D | CartanType::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
            CartanType::E => 'E',
            CartanType::F => 'F',
            CartanType::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::validation(format!("unknown Cartan series {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Fundamental,
    SimpleRoot,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVec {
    pub coords: Vec<i64>,
    pub basis: Basis,
}

impl WeightVec {
    pub fn fundamental(coords: Vec<i64>) -> Self {
        WeightVec {
            coords,
            basis: Basis::Fundamental,
        }
    }

    pub fn root(coords: Vec<i64>) -> Self {
        WeightVec {
            coords,
            basis: Basis::SimpleRoot,
        }
    }

    pub fn zero(rank: usize, basis: Basis) -> Self {
        WeightVec {
            coords: vec![0; rank],
            basis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    series: CartanType,
    rank: usize,
    cartan: IntMatrix,
    /// Minimal positive integers `d_i` with `d_i·a_ij = d_j·a_ji`; `(α_i, α_i) = 2 d_i`.
    symmetrizer: Vec<i64>,
    /// Positive roots in the simple-root basis, sorted by height.
    positive_roots: IntMatrix,
    /// Positive coroots in the simple-coroot basis, sorted by height.
    positive_coroots: IntMatrix,
    /// Row `i` expresses `ω_i` in the simple-root basis.
    fundamental_weights: Vec<Vec<Ratio<i64>>>,
}

fn classical_positive_root_count(series: CartanType, n: usize) -> usize {
    match series {
        CartanType::A => n * (n + 1) / 2,
        CartanType::B | CartanType::C => n * n,
        CartanType::D => n * (n - 1),
        CartanType::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        CartanType::F => 24,
        CartanType::G => 6,
    }
}

fn cartan_matrix(series: CartanType, n: usize) -> Result<IntMatrix> {
    let valid = match series {
        CartanType::A => n >= 1,
        CartanType::B | CartanType::C => n >= 2,
        CartanType::D => n >= 3,
        CartanType::E => (6..=8).contains(&n),
        CartanType::F => n == 4,
        CartanType::G => n == 2,
    };
    if !valid {
        return Err(Error::validation(format!("{series}{n} is not a simple type")));
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |a: &mut IntMatrix, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match series {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..n - 1 {
                link(&mut a, i, i + 1);
            }
            if series == CartanType::B {
                a[n - 1][n - 2] = -2;
            } else if series == CartanType::C {
                a[n - 2][n - 1] = -2;
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                link(&mut a, i, i + 1);
            }
            link(&mut a, n - 3, n - 1);
        }
        CartanType::E => {
            link(&mut a, 0, 2);
            link(&mut a, 1, 3);
            for i in 2..n - 1 {
                link(&mut a, i, i + 1);
            }
        }
        CartanType::F => {
            link(&mut a, 0, 1);
            link(&mut a, 1, 2);
            link(&mut a, 2, 3);
            a[2][1] = -2;
        }
        CartanType::G => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    Ok(a)
}

fn minimal_symmetrizer(cartan: &IntMatrix) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * Ratio::new(cartan[i][j], cartan[j][i]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let lcm = d.iter().fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
    ints.into_iter().map(|x| x / g).collect()
}

/// Positive roots by closure from the simple roots using root strings:
/// for a root `β` and simple `α_i`, `β + α_i` is a root iff `p - ⟨β, α_i∨⟩ > 0`,
/// where `p` is the length of the downward `α_i`-string through `β`.
fn positive_root_closure(cartan: &IntMatrix) -> IntMatrix {
    let n = cartan.len();
    let mut roots: IntMatrix = (0..n).map(|i| (0..n).map(|k| i64::from(k == i)).collect()).collect();
    let mut known: HashMap<Vec<i64>, ()> = roots.iter().map(|r| (r.clone(), ())).collect();
    let mut idx = 0;
    while idx < roots.len() {
        let beta = roots[idx].clone();
        for i in 0..n {
            let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if known.contains_key(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if !known.contains_key(&up) {
                    known.insert(up.clone(), ());
                    roots.push(up);
                }
            }
        }
        idx += 1;
    }
    // breadth-first by height already, but make the order explicit
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

impl RootSystem {
    pub fn new(series: CartanType, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(series, rank)?;
        let symmetrizer = minimal_symmetrizer(&cartan);
        let positive_roots = positive_root_closure(&cartan);
        let transposed = lattice::transpose(&cartan, rank);
        let positive_coroots = positive_root_closure(&transposed);
        let inv = lattice::rational_inverse(&cartan).expect("Cartan matrices are nonsingular");
        // ω_i has fundamental coordinates e_i, so its root coordinates are column i of A⁻¹.
        let fundamental_weights = (0..rank).map(|i| (0..rank).map(|k| inv[k][i]).collect()).collect();
        let rs = RootSystem {
            series,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            positive_coroots,
            fundamental_weights,
        };
        debug_assert_eq!(rs.positive_roots.len(), classical_positive_root_count(series, rank));
        Ok(rs)
    }

    pub fn series(&self) -> CartanType {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &IntMatrix {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &IntMatrix {
        &self.positive_coroots
    }

    pub fn fundamental_weights(&self) -> &[Vec<Ratio<i64>>] {
        &self.fundamental_weights
    }

    /// Highest root, in the simple-root basis.
    pub fn highest_root(&self) -> &[i64] {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// Classical positive-root count for the type; equals `positive_roots().len()`.
    pub fn expected_positive_root_count(&self) -> usize {
        classical_positive_root_count(self.series, self.rank)
    }

    /// `|W| = r! · ∏ n_i · det(A)`, with `n_i` the highest-root coefficients.
    pub fn weyl_group_order(&self) -> u64 {
        let fact: u64 = (1..=self.rank as u64).product();
        let marks: u64 = self.highest_root().iter().map(|&x| x as u64).product();
        fact * marks * lattice::determinant(&self.cartan) as u64
    }

    fn check_len(&self, w: &WeightVec) -> Result<()> {
        if w.coords.len() != self.rank {
            return Err(Error::validation(format!(
                "weight has {} coordinates, root system rank is {}",
                w.coords.len(),
                self.rank
            )));
        }
        Ok(())
    }

    /// Fundamental coordinates of a simple-root combination.
    pub fn root_to_fundamental(&self, c: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * c[j]).sum())
            .collect()
    }

    /// Root coordinates of a weight given in fundamental coordinates (rational in general).
    pub fn fundamental_to_root(&self, x: &[i64]) -> Vec<Ratio<i64>> {
        (0..self.rank)
            .map(|k| {
                (0..self.rank)
                    .map(|i| self.fundamental_weights[i][k] * x[i])
                    .fold(Ratio::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn to_fundamental(&self, w: &WeightVec) -> Result<Vec<i64>> {
        self.check_len(w)?;
        Ok(match w.basis {
            Basis::Fundamental => w.coords.clone(),
            Basis::SimpleRoot => self.root_to_fundamental(&w.coords),
        })
    }

    /// Simple reflection `s_i` on fundamental coordinates.
    pub fn reflect(&self, i: usize, x: &mut [i64]) {
        let xi = x[i];
        if xi != 0 {
            for (k, xk) in x.iter_mut().enumerate() {
                *xk -= xi * self.cartan[k][i];
            }
        }
    }

    /// Dominant representative of the Weyl orbit of `x` (fundamental coordinates).
    pub fn dominant_representative(&self, x: &[i64]) -> Vec<i64> {
        let mut y = x.to_vec();
        while let Some(i) = y.iter().position(|&v| v < 0) {
            self.reflect(i, &mut y);
        }
        y
    }

    /// `w₀·x`: the unique antidominant element of the orbit of `x`.
    pub fn longest_element_apply(&self, x: &[i64]) -> Vec<i64> {
        let mut y = x.to_vec();
        while let Some(i) = y.iter().position(|&v| v > 0) {
            self.reflect(i, &mut y);
        }
        y
    }

    /// Full Weyl orbit of a weight, dominant representative first.
    pub fn weyl_orbit(&self, x: &[i64]) -> Vec<Vec<i64>> {
        let start = self.dominant_representative(x);
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        seen.insert(start.clone(), ());
        let mut orbit = vec![start];
        let mut idx = 0;
        while idx < orbit.len() {
            for i in 0..self.rank {
                if orbit[idx][i] > 0 {
                    let mut y = orbit[idx].clone();
                    self.reflect(i, &mut y);
                    if seen.insert(y.clone(), ()).is_none() {
                        orbit.push(y);
                    }
                }
            }
            idx += 1;
        }
        orbit
    }

    pub fn is_dominant(&self, w: &WeightVec) -> Result<bool> {
        Ok(self.to_fundamental(w)?.iter().all(|&x| x >= 0))
    }

    /// Symmetric form `(x, β)` for `x` in fundamental coordinates and `β` in
    /// root coordinates: `Σ_j β_j x_j d_j`.
    fn form_weight_root(&self, x: &[i64], beta: &[i64]) -> i128 {
        (0..self.rank)
            .map(|j| beta[j] as i128 * x[j] as i128 * self.symmetrizer[j] as i128)
            .sum()
    }

    /// `(β, β)` for `β` in root coordinates.
    fn form_root_root(&self, a: &[i64], b: &[i64]) -> i128 {
        let mut s = 0i128;
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                s += ai as i128 * bj as i128 * (self.symmetrizer[i] * self.cartan[i][j]) as i128;
            }
        }
        s
    }

    /// `⟨x, 2ρ∨⟩ = Σ_{α∨>0} ⟨x, α∨⟩` for `x` in fundamental coordinates.
    pub fn pairing_two_rho_check(&self, x: &[i64]) -> i64 {
        self.positive_coroots
            .iter()
            .map(|c| c.iter().zip(x).map(|(a, b)| a * b).sum::<i64>())
            .sum()
    }

    /// Depth-first traversal of the Weyl group. Each element is visited once
    /// together with its matrix on fundamental coordinates. The parent of
    /// `w·ρ` is obtained by reflecting in its first negative coordinate.
    pub fn for_each_weyl_element<F>(&self, mut visit: F) -> Result<u64>
    where
        F: FnMut(&[i64], &IntMatrix),
    {
        let order = self.weyl_group_order();
        if order > WEYL_ENUMERATION_LIMIT {
            return Err(Error::Capacity {
                what: format!("Weyl group of {}{} has order {order}", self.series, self.rank),
                limit: WEYL_ENUMERATION_LIMIT,
            });
        }
        let n = self.rank;
        let identity: IntMatrix = (0..n).map(|i| (0..n).map(|k| i64::from(k == i)).collect()).collect();
        let mut stack = vec![(vec![1i64; n], identity)];
        let mut count = 0u64;
        while let Some((x, m)) = stack.pop() {
            visit(&x, &m);
            count += 1;
            for j in 0..n {
                if x[j] <= 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect(j, &mut y);
                if y.iter().position(|&v| v < 0) != Some(j) {
                    continue;
                }
                // s_j acts on fundamental coordinates as x ↦ x − x_j·(column j of A)
                let mut my = m.clone();
                for c in 0..n {
                    let mj = m[j][c];
                    if mj != 0 {
                        for (k, row) in my.iter_mut().enumerate() {
                            row[c] -= mj * self.cartan[k][j];
                        }
                    }
                }
                stack.push((y, my));
            }
        }
        debug_assert_eq!(count, order);
        Ok(count)
    }
}

pub fn build_root_system(series: CartanType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(series, rank)
}

/// `μ ≤ λ` iff `λ − μ` is a non-negative integer combination of simple roots.
pub fn dominance_leq(rs: &RootSystem, mu: &WeightVec, lambda: &WeightVec) -> Result<bool> {
    if mu.basis != lambda.basis {
        return Err(Error::validation("dominance comparison across different bases"));
    }
    rs.check_len(mu)?;
    rs.check_len(lambda)?;
    let diff: Vec<i64> = lambda.coords.iter().zip(&mu.coords).map(|(l, m)| l - m).collect();
    Ok(match lambda.basis {
        Basis::SimpleRoot => diff.iter().all(|&c| c >= 0),
        Basis::Fundamental => rs
            .fundamental_to_root(&diff)
            .iter()
            .all(|c| c.is_integer() && *c >= Ratio::zero()),
    })
}

/// Multiplicities of all dominant weights of the irreducible module with a
/// given highest weight, by Freudenthal's recursion.
#[derive(Debug, Clone)]
pub struct DominantCharacter {
    highest: Vec<i64>,
    /// dominant weight → (depth `λ − μ` in root coordinates, multiplicity)
    table: HashMap<Vec<i64>, (Vec<i64>, u64)>,
}

impl DominantCharacter {
    pub fn new(rs: &RootSystem, lambda: &WeightVec) -> Result<Self> {
        let highest = rs.to_fundamental(lambda)?;
        if highest.iter().any(|&x| x < 0) {
            return Err(Error::validation("highest weight must be dominant"));
        }
        let n = rs.rank;
        let roots_fund: Vec<Vec<i64>> = rs.positive_roots.iter().map(|r| rs.root_to_fundamental(r)).collect();

        // Dominant weights below λ form a connected poset under subtraction of
        // positive roots through dominant weights.
        let mut depth: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        depth.insert(highest.clone(), vec![0; n]);
        let mut queue = vec![highest.clone()];
        let mut idx = 0;
        while idx < queue.len() {
            let mu = queue[idx].clone();
            let d = depth[&mu].clone();
            for (root, rf) in rs.positive_roots.iter().zip(&roots_fund) {
                let nu: Vec<i64> = mu.iter().zip(rf).map(|(a, b)| a - b).collect();
                if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                    let nd: Vec<i64> = d.iter().zip(root).map(|(a, b)| a + b).collect();
                    depth.insert(nu.clone(), nd);
                    queue.push(nu);
                }
            }
            idx += 1;
        }
        let mut order: Vec<Vec<i64>> = depth.keys().cloned().collect();
        order.sort_by_key(|mu| (depth[mu].iter().sum::<i64>(), std::cmp::Reverse(mu.clone())));

        let lambda_rho: Vec<i64> = highest.iter().map(|x| x + 1).collect();
        let mut table: HashMap<Vec<i64>, (Vec<i64>, u64)> = HashMap::new();
        for mu in order {
            let beta = depth[&mu].clone();
            if mu == highest {
                table.insert(mu, (beta, 1));
                continue;
            }
            // (λ+ρ,λ+ρ) − (μ+ρ,μ+ρ) = 2(λ+ρ, β) − (β, β)
            let denom = 2 * rs.form_weight_root(&lambda_rho, &beta) - rs.form_root_root(&beta, &beta);
            let mut numer = 0i128;
            for (root, rf) in rs.positive_roots.iter().zip(&roots_fund) {
                let mut shifted = mu.clone();
                loop {
                    for (s, r) in shifted.iter_mut().zip(rf) {
                        *s += r;
                    }
                    let rep = rs.dominant_representative(&shifted);
                    let Some(&(_, m)) = table.get(&rep) else { break };
                    numer += m as i128 * rs.form_weight_root(&shifted, root);
                }
            }
            numer *= 2;
            debug_assert!(denom > 0 && numer % denom == 0);
            let m = u64::try_from(numer / denom).expect("multiplicity overflow");
            table.insert(mu, (beta, m));
        }
        Ok(DominantCharacter { highest, table })
    }

    pub fn highest_weight(&self) -> &[i64] {
        &self.highest
    }

    /// Multiplicity of an arbitrary weight given in fundamental coordinates.
    pub fn multiplicity(&self, rs: &RootSystem, mu: &[i64]) -> u64 {
        let rep = rs.dominant_representative(mu);
        self.table.get(&rep).map_or(0, |&(_, m)| m)
    }

    /// Dominant weights with their multiplicities, sorted by depth then
    /// reverse-lexicographically.
    pub fn dominant_weights(&self) -> Vec<(Vec<i64>, u64)> {
        let mut v: Vec<(Vec<i64>, u64)> = self.table.iter().map(|(k, (_, m))| (k.clone(), *m)).collect();
        v.sort_by_key(|(k, _)| (self.table[k].0.iter().sum::<i64>(), std::cmp::Reverse(k.clone())));
        v
    }
}

pub fn freudenthal_multiplicity(rs: &RootSystem, lambda: &WeightVec, mu: &WeightVec) -> Result<u64> {
    let ch = DominantCharacter::new(rs, lambda)?;
    let mu = rs.to_fundamental(mu)?;
    Ok(ch.multiplicity(rs, &mu))
}

/// Weyl dimension formula `∏_{α>0} ⟨λ+ρ, α∨⟩ / ⟨ρ, α∨⟩`.
pub fn weyl_dim(rs: &RootSystem, lambda: &WeightVec) -> Result<BigUint> {
    let x = rs.to_fundamental(lambda)?;
    if x.iter().any(|&v| v < 0) {
        return Err(Error::validation("weyl_dim needs a dominant weight"));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for c in &rs.positive_coroots {
        let rho: i64 = c.iter().sum();
        let lam: i64 = c.iter().zip(&x).map(|(a, b)| a * b).sum();
        num *= BigUint::from((lam + rho) as u64);
        den *= BigUint::from(rho as u64);
    }
    Ok(num / den)
}

/// Sum of `|⟨α, θ⟩|` over positive roots for a coweight `θ`.
///
/// In the fundamental basis `θ_i = ⟨α_i, θ⟩` (fundamental coweights); in the
/// simple-root basis `θ` is read as a combination of simple coroots. On
/// dominant `θ` this is `⟨2ρ, θ⟩`.
pub fn pairing_2rho(rs: &RootSystem, theta: &WeightVec) -> Result<i64> {
    rs.check_len(theta)?;
    let on_simple: Vec<i64> = match theta.basis {
        Basis::Fundamental => theta.coords.clone(),
        Basis::SimpleRoot => (0..rs.rank)
            .map(|i| (0..rs.rank).map(|j| theta.coords[j] * rs.cartan[j][i]).sum())
            .collect(),
    };
    Ok(rs
        .positive_roots
        .iter()
        .map(|r| r.iter().zip(&on_simple).map(|(a, b)| a * b).sum::<i64>().abs())
        .sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantDegrees {
    pub degrees: Vec<usize>,
    pub exponents: Vec<usize>,
    pub group_order: u64,
    /// Molien series of the reflection representation up to the cap.
    pub molien: TruncatedSeries,
}

/// `det(1 − t·M)` as a coefficient list, by Faddeev–LeVerrier.
fn det_one_minus_t(m: &IntMatrix) -> Vec<i64> {
    let n = m.len();
    let mut coeffs = vec![1i64];
    let mut acc: IntMatrix = vec![vec![0; n]; n];
    for k in 1..=n {
        // acc ← M·acc + c_{k−1}·I
        let c_prev = coeffs[k - 1];
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = if i == j { c_prev } else { 0 };
                for l in 0..n {
                    s += m[i][l] * acc[l][j];
                }
                next[i][j] = s;
            }
        }
        acc = next;
        let mut trace = 0i64;
        for i in 0..n {
            for l in 0..n {
                trace += m[i][l] * acc[l][i];
            }
        }
        coeffs.push(-trace / k as i64);
    }
    coeffs
}

/// Invariant degrees of the Weyl group from its Molien series
/// `(1/|W|) Σ_w det(1 − t·w)⁻¹`, factored as `∏ (1 − t^{d_i})⁻¹`.
pub fn weyl_molien_degrees(rs: &RootSystem, degree_cap: usize) -> Result<InvariantDegrees> {
    let mut classes: HashMap<Vec<i64>, u64> = HashMap::new();
    let order = rs.for_each_weyl_element(|_, m| {
        *classes.entry(det_one_minus_t(m)).or_insert(0) += 1;
    })?;
    let mut keys: Vec<&Vec<i64>> = classes.keys().collect();
    keys.sort();
    let mut molien = TruncatedSeries::zero(degree_cap);
    for poly in keys {
        // 1/p(t) with p(0) = 1, expanded exactly
        let mut inv = vec![num_bigint::BigInt::zero(); degree_cap + 1];
        inv[0] = num_bigint::BigInt::one();
        for k in 1..=degree_cap {
            let mut s = num_bigint::BigInt::zero();
            for (j, &pj) in poly.iter().enumerate().skip(1) {
                if j <= k && pj != 0 {
                    s -= &inv[k - j] * pj;
                }
            }
            inv[k] = s;
        }
        let count = classes[poly];
        let term = TruncatedSeries::from_coeffs(inv.into_iter().map(|c| c * count));
        molien = &molien + &term;
    }
    let molien = TruncatedSeries::from_coeffs(molien.coeffs().iter().map(|c| {
        debug_assert!((c % order).is_zero());
        c / order
    }));

    let mut rest = molien.clone();
    let mut degrees = Vec::new();
    while degrees.len() < rs.rank {
        let Some(k) = (1..=degree_cap).find(|&k| !rest.coeff(k).is_zero()) else {
            break;
        };
        rest.mul_one_minus_t_pow(k);
        degrees.push(k);
    }
    if degrees.len() != rs.rank || rest != TruncatedSeries::one(degree_cap) {
        return Err(Error::validation(format!(
            "Molien series did not factor into {} degrees below t^{degree_cap}",
            rs.rank
        )));
    }
    let exponents = degrees.iter().map(|d| d - 1).collect();
    Ok(InvariantDegrees {
        degrees,
        exponents,
        group_order: order,
        molien,
    })
}

/// Data of the intersections of semi-infinite orbits with a spherical orbit
/// closure: nonemptiness, attracting/repelling dimensions and the degree of
/// the hyperbolic stalk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvReport {
    pub nonempty: bool,
    pub multiplicity: u64,
    /// `⟨ν + λ, ρ∨⟩`, present when nonempty.
    pub dim_attractor: Option<i64>,
    /// `⟨−ν − w₀λ, ρ∨⟩ = ⟨λ − ν, ρ∨⟩`, present when nonempty.
    pub dim_repellent: Option<i64>,
    /// `⟨ν, 2ρ∨⟩`.
    pub hyperbolic_degree: i64,
}

pub fn mv_report(rs: &RootSystem, lambda: &WeightVec, nu: &WeightVec) -> Result<MvReport> {
    let ch = DominantCharacter::new(rs, lambda)?;
    let lam = ch.highest.clone();
    let nu = rs.to_fundamental(nu)?;
    let multiplicity = ch.multiplicity(rs, &nu);
    let nonempty = multiplicity > 0;
    let w0_lam = rs.longest_element_apply(&lam);
    let two_rho = |x: &[i64]| rs.pairing_two_rho_check(x);
    let sum = |a: &[i64], b: &[i64], sa: i64, sb: i64| -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| sa * x + sb * y).collect()
    };
    let (dim_attractor, dim_repellent) = if nonempty {
        let att = two_rho(&sum(&nu, &lam, 1, 1));
        let rep = two_rho(&sum(&nu, &w0_lam, -1, -1));
        debug_assert!(att % 2 == 0 && rep % 2 == 0);
        (Some(att / 2), Some(rep / 2))
    } else {
        (None, None)
    };
    Ok(MvReport {
        nonempty,
        multiplicity,
        dim_attractor,
        dim_repellent,
        hyperbolic_degree: two_rho(&nu),
    })
}
