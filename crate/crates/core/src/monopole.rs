//! The monopole formula for the Hilbert series of a Coulomb branch:
//!
//! ```text
//! H(t) = Σ_{θ dominant} t^{Δ(θ)} · P_G(t; θ)
//! Δ(θ) = Σ_χ |⟨χ, θ⟩| · dim N_χ  −  2 · Σ_{α>0} ⟨α, θ⟩
//! ```
//!
//! `P_G(t; θ)` is the Hilbert series of the invariant polynomials of the Levi
//! stabilizer of `θ`, with an invariant of degree `k` in t-degree `2k`.
//!
//! Enumeration is made finite by the minimal slope `m* = min Δ(θ)/‖θ‖₁`
//! over the real dominant cone: every term of t-degree at most `D` has
//! `‖θ‖₁ ≤ D/m*`. For gauge rank at most [`EXACT_RANK_LIMIT`] the slope is
//! computed exactly from the extremal rays of the hyperplane arrangement;
//! beyond that a lattice scan gives an uncertified estimate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Coords, Error, Result};
use crate::gauge::{GaugeGroup, Theory};
use crate::lattice::{self, IntMatrix};
use crate::series::TruncatedSeries;

pub const EXACT_RANK_LIMIT: usize = 4;

pub const DEFAULT_SCAN_RADIUS: i64 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    /// Dominant iff non-increasing inside every `GL(n)` block.
    pub fn is_dominant(&self, group: &GaugeGroup) -> bool {
        group
            .blocks()
            .into_iter()
            .all(|b| self.0[b].windows(2).all(|w| w[0] >= w[1]))
    }

    /// Sorts every block in non-increasing order.
    pub fn dominant_normalize(&self, group: &GaugeGroup) -> Coweight {
        let mut v = self.0.clone();
        for b in group.blocks() {
            v[b].sort_unstable_by(|a, b| b.cmp(a));
        }
        Coweight(v)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Coords(&self.0).fmt(f)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct MonopoleOptions {
    /// Radius (in ‖·‖∞) of the uncertified lattice scan used above the exact rank limit.
    pub scan_radius: i64,
    /// Multiplies the certified enumeration radius; values above 1 only
    /// re-check pruning soundness.
    pub radius_factor: i64,
}

impl Default for MonopoleOptions {
    fn default() -> Self {
        MonopoleOptions {
            scan_radius: DEFAULT_SCAN_RADIUS,
            radius_factor: 1,
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `d_θ = Σ_χ |⟨χ, θ⟩| · dim N_χ`.
pub fn matter_degree(t: &Theory, theta: &[i64]) -> i64 {
    t.matter
        .iter()
        .map(|m| dot(&m.weight, theta).abs() * m.multiplicity as i64)
        .sum()
}

/// `2⟨ρ∨, θ⟩ = Σ_{α>0} |⟨α, θ⟩|` over the roots `e_i − e_j` of every block.
pub fn root_pairing(group: &GaugeGroup, theta: &[i64]) -> i64 {
    group
        .blocks()
        .into_iter()
        .map(|b| {
            let xs = &theta[b];
            let mut s = 0;
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    s += (xs[i] - xs[j]).abs();
                }
            }
            s
        })
        .sum()
}

fn delta_unchecked(t: &Theory, theta: &[i64]) -> i64 {
    matter_degree(t, theta) - 2 * root_pairing(&t.group, theta)
}

fn check_coweight(t: &Theory, theta: &Coweight) -> Result<()> {
    if theta.0.len() != t.rank() {
        return Err(Error::validation(format!(
            "coweight {theta} has length {}, gauge rank is {}",
            theta.0.len(),
            t.rank()
        )));
    }
    if !theta.is_dominant(&t.group) {
        return Err(Error::validation(format!("coweight {theta} is not dominant")));
    }
    Ok(())
}

/// Exponent `Δ(θ)` of the monopole term for a dominant coweight.
pub fn delta_exponent(t: &Theory, theta: &Coweight) -> Result<i64> {
    check_coweight(t, theta)?;
    Ok(delta_unchecked(t, &theta.0))
}

/// t-degrees of the generators of the Levi stabilizer invariants: a block
/// entry repeated `m` times contributes a `GL(m)` with degrees `2, 4, …, 2m`.
pub fn stabilizer_degrees(group: &GaugeGroup, theta: &[i64]) -> Vec<usize> {
    let mut degrees = Vec::new();
    for b in group.blocks() {
        let xs = &theta[b];
        let mut i = 0;
        while i < xs.len() {
            let mut j = i;
            while j < xs.len() && xs[j] == xs[i] {
                j += 1;
            }
            degrees.extend((1..=j - i).map(|k| 2 * k));
            i = j;
        }
    }
    degrees.sort_unstable();
    degrees
}

fn product_of_inverses(degrees: &[usize], cutoff: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(cutoff);
    for &d in degrees {
        s.div_one_minus_t_pow(d);
    }
    s
}

pub fn stabilizer_series_factor(t: &Theory, theta: &Coweight, cutoff: usize) -> Result<TruncatedSeries> {
    check_coweight(t, theta)?;
    Ok(product_of_inverses(&stabilizer_degrees(&t.group, &theta.0), cutoff))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinSlope {
    pub value: Ratio<i64>,
    /// Primitive dominant coweight on a ray attaining the minimum.
    pub witness: Coweight,
    pub certified: bool,
}

/// Hyperplanes refining the dominant cone into cells on which both `Δ` and
/// `‖·‖₁` are linear: matter hyperplanes, coordinate hyperplanes and chamber walls.
fn arrangement(t: &Theory) -> IntMatrix {
    let r = t.rank();
    let mut planes: Vec<Vec<i64>> = Vec::new();
    let mut push = |mut v: Vec<i64>| {
        let g = v.iter().fold(0i64, |g, x| num_integer::gcd(g, *x));
        if g == 0 {
            return;
        }
        v.iter_mut().for_each(|x| *x /= g);
        if let Some(first) = v.iter().find(|&&x| x != 0) {
            if *first < 0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
        if !planes.contains(&v) {
            planes.push(v);
        }
    };
    for m in &t.matter {
        push(m.weight.clone());
    }
    for i in 0..r {
        push((0..r).map(|k| i64::from(k == i)).collect());
    }
    for b in t.group.blocks() {
        for i in b.start..b.end.saturating_sub(1) {
            push((0..r).map(|k| i64::from(k == i) - i64::from(k == i + 1)).collect());
        }
    }
    planes
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// Candidate order: smaller slope first, then the lexicographically larger witness.
fn better(a: (&Ratio<i64>, &[i64]), b: (&Ratio<i64>, &[i64])) -> bool {
    match a.0.cmp(b.0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => a.1 > b.1,
    }
}

pub fn min_slope(t: &Theory) -> Result<MinSlope> {
    min_slope_with(t, &MonopoleOptions::default())
}

pub fn min_slope_with(t: &Theory, opts: &MonopoleOptions) -> Result<MinSlope> {
    t.ensure_valid()?;
    let r = t.rank();
    let mut best: Option<(Ratio<i64>, Vec<i64>)> = None;
    let mut consider = |v: Vec<i64>| {
        let norm = lattice::l1_norm(&v);
        if norm == 0 || !Coweight(v.clone()).is_dominant(&t.group) {
            return;
        }
        let slope = Ratio::new(delta_unchecked(t, &v), norm);
        if best.as_ref().is_none_or(|(s, w)| better((&slope, &v), (s, w))) {
            best = Some((slope, v));
        }
    };
    let certified = r <= EXACT_RANK_LIMIT;
    if certified {
        let planes = arrangement(t);
        for_each_subset(planes.len(), r - 1, &mut |idx| {
            let rows: IntMatrix = idx.iter().map(|&i| planes[i].clone()).collect();
            let v = lattice::primitive_null_vector(&rows, r);
            if v.iter().all(|&x| x == 0) {
                return;
            }
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            consider(v);
            consider(neg);
        });
    } else {
        let radius = opts.scan_radius.max(1);
        let mut theta = vec![-radius; r];
        loop {
            consider(theta.clone());
            let Some(i) = (0..r).rev().find(|&i| theta[i] < radius) else {
                break;
            };
            theta[i] += 1;
            for x in theta.iter_mut().skip(i + 1) {
                *x = -radius;
            }
        }
    }
    let (value, witness) = best.expect("the dominant cone has a nonzero ray");
    Ok(MinSlope {
        value,
        witness: Coweight(witness),
        certified,
    })
}

/// Calls `f` on every dominant coweight with `‖θ‖₁ = shell`, in lexicographic order.
pub fn for_each_dominant_in_shell(group: &GaugeGroup, shell: i64, mut f: impl FnMut(&[i64])) {
    let r = group.rank();
    // upper[i]: coordinate i must not exceed the previous entry of its block
    let mut starts_block = vec![false; r];
    for b in group.blocks() {
        if b.start < r {
            starts_block[b.start] = true;
        }
    }
    fn rec(i: usize, budget: i64, cur: &mut Vec<i64>, starts_block: &[bool], f: &mut impl FnMut(&[i64])) {
        let r = starts_block.len();
        if i == r {
            if budget == 0 {
                f(cur);
            }
            return;
        }
        let hi = if starts_block[i] {
            budget
        } else {
            budget.min(cur[i - 1])
        };
        let mut x = -budget;
        while x <= hi {
            cur.push(x);
            rec(i + 1, budget - x.abs(), cur, starts_block, f);
            cur.pop();
            x += 1;
        }
    }
    rec(0, shell, &mut Vec::with_capacity(r), &starts_block, &mut f);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoryKind {
    Good,
    Ugly,
    Bad,
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoryKind::Good => "Good",
            TheoryKind::Ugly => "Ugly",
            TheoryKind::Bad => "Bad",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MinExponent {
    Finite(i64),
    /// `Δ` is unbounded below along the witness ray.
    NegInfinity,
}

impl fmt::Display for MinExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinExponent::Finite(x) => write!(f, "{x}"),
            MinExponent::NegInfinity => write!(f, "-inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub kind: TheoryKind,
    pub min_exponent: MinExponent,
    pub witness: Coweight,
    pub min_slope: Ratio<i64>,
    pub certified: bool,
}

pub fn classify(t: &Theory) -> Result<ClassificationResult> {
    classify_with(t, &MonopoleOptions::default())
}

pub fn classify_with(t: &Theory, opts: &MonopoleOptions) -> Result<ClassificationResult> {
    let slope = min_slope_with(t, opts)?;
    let certified = slope.certified;
    if slope.value <= Ratio::zero() {
        let min_exponent = if slope.value < Ratio::zero() {
            MinExponent::NegInfinity
        } else {
            MinExponent::Finite(0)
        };
        return Ok(ClassificationResult {
            kind: TheoryKind::Bad,
            min_exponent,
            witness: slope.witness,
            min_slope: slope.value,
            certified,
        });
    }
    // The witness ray gives an upper bound for the lattice minimum; any
    // coweight doing at least as well has ‖θ‖₁ ≤ bound / m*.
    let bound = delta_unchecked(t, &slope.witness.0);
    let radius = (Ratio::from_integer(bound) / slope.value).floor().to_integer();
    // Ties: smaller shell first, then the lexicographically larger coweight.
    let mut best: Option<(i64, i64, Vec<i64>)> = None;
    for shell in 1..=radius.max(1) {
        for_each_dominant_in_shell(&t.group, shell, |theta| {
            let d = delta_unchecked(t, theta);
            let replace = best
                .as_ref()
                .is_none_or(|(b, s, w)| d < *b || (d == *b && shell == *s && theta > w.as_slice()));
            if replace {
                best = Some((d, shell, theta.to_vec()));
            }
        });
    }
    let (min, _, witness) = best.expect("shell 1 is nonempty");
    assert!(min > 0, "positive slope with nonpositive lattice exponent");
    let kind = match min {
        1 => TheoryKind::Ugly,
        _ => TheoryKind::Good,
    };
    Ok(ClassificationResult {
        kind,
        min_exponent: MinExponent::Finite(min),
        witness: Coweight(witness),
        min_slope: slope.value,
        certified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub series: TruncatedSeries,
    pub classification: ClassificationResult,
    /// ‖θ‖₁ radius that was enumerated.
    pub radius: i64,
    pub certified: bool,
}

pub fn hilbert_series(t: &Theory, cutoff: usize) -> Result<HilbertSeries> {
    hilbert_series_with(t, cutoff, &MonopoleOptions::default())
}

pub fn hilbert_series_with(t: &Theory, cutoff: usize, opts: &MonopoleOptions) -> Result<HilbertSeries> {
    let classification = classify_with(t, opts)?;
    if classification.kind == TheoryKind::Bad {
        return Err(Error::Divergent {
            witness: classification.witness.0.clone(),
        });
    }
    let m = classification.min_slope;
    let radius = (Ratio::from_integer(cutoff as i64) / m).floor().to_integer() * opts.radius_factor.max(1);

    let shells: Vec<TruncatedSeries> = (0..=radius)
        .into_par_iter()
        .map(|shell| {
            let mut acc = TruncatedSeries::zero(cutoff);
            let mut cache: HashMap<Vec<usize>, TruncatedSeries> = HashMap::new();
            for_each_dominant_in_shell(&t.group, shell, |theta| {
                let d = delta_unchecked(t, theta);
                debug_assert!(d >= 0);
                if d as usize > cutoff {
                    return;
                }
                let degrees = stabilizer_degrees(&t.group, theta);
                let factor = cache
                    .entry(degrees)
                    .or_insert_with_key(|k| product_of_inverses(k, cutoff));
                acc.add_shifted(factor, d as usize);
            });
            acc
        })
        .collect();
    let mut series = TruncatedSeries::zero(cutoff);
    for s in &shells {
        series.add_shifted(s, 0);
    }
    debug_assert!(series.coeff(0).is_one());
    let certified = classification.certified;
    Ok(HilbertSeries {
        series,
        classification,
        radius,
        certified,
    })
}
