//! Generalized affine Grassmannian slices from framed ADE quivers.
//!
//! `λ = Σ W_i ω_i`, `α = Σ V_i α_i`, `μ = λ − α`; the Coulomb branch of the
//! quiver gauge theory is the slice `W̄^λ_μ` of dimension `⟨2ρ∨, λ − μ⟩`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gauge::{quiver_to_theory, QuiverTheory};
use crate::lie::{dominance_leq, DominantCharacter, RootSystem, WeightVec};
use crate::monopole::{hilbert_series, HilbertSeries};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceData {
    pub flavor_type: RootSystem,
    /// Fundamental coordinates.
    pub lambda: WeightVec,
    /// Fundamental coordinates.
    pub mu: WeightVec,
    /// Simple-root coordinates.
    pub alpha: WeightVec,
    pub nonempty: bool,
    pub dim: u64,
    pub has_fixed_point: bool,
    pub fixed_point_multiplicity: u64,
}

fn check_graph(q: &QuiverTheory, rs: &RootSystem) -> Result<()> {
    if !rs.series().is_simply_laced() {
        return Err(Error::validation(format!(
            "slice data needs a simply laced type, got {}{}",
            rs.series(),
            rs.rank()
        )));
    }
    if q.vertex_count() != rs.rank() {
        return Err(Error::validation(format!(
            "quiver has {} vertices but {}{} has rank {}",
            q.vertex_count(),
            rs.series(),
            rs.rank(),
            rs.rank()
        )));
    }
    let mut seen = BTreeSet::new();
    for &(a, b) in &q.edges {
        if a == b {
            return Err(Error::validation(format!("edge loop at vertex {}", a + 1)));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::validation(format!(
                "multiple edges between {} and {}",
                a + 1,
                b + 1
            )));
        }
    }
    let n = rs.rank();
    let dynkin: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| rs.cartan()[i][j] != 0)
        .collect();
    if seen != dynkin {
        return Err(Error::validation(format!(
            "quiver graph is not the Dynkin diagram of {}{}",
            rs.series(),
            rs.rank()
        )));
    }
    Ok(())
}

pub fn slice_data(q: &QuiverTheory, rs: &RootSystem) -> Result<SliceData> {
    check_graph(q, rs)?;
    let lambda: Vec<i64> = q.dim_w.iter().map(|&w| w as i64).collect();
    let alpha: Vec<i64> = q.dim_v.iter().map(|&v| v as i64).collect();
    let alpha_f = rs.root_to_fundamental(&alpha);
    let mu: Vec<i64> = lambda.iter().zip(&alpha_f).map(|(l, a)| l - a).collect();
    let lambda = WeightVec::fundamental(lambda);
    let mu = WeightVec::fundamental(mu);
    let nonempty = dominance_leq(rs, &mu, &lambda)?;
    let fixed_point_multiplicity = DominantCharacter::new(rs, &lambda)?.multiplicity(rs, &mu.coords);
    Ok(SliceData {
        flavor_type: rs.clone(),
        lambda,
        mu,
        alpha: WeightVec::root(alpha),
        nonempty,
        dim: 2 * q.dim_v.iter().sum::<u64>(),
        has_fixed_point: fixed_point_multiplicity > 0,
        fixed_point_multiplicity,
    })
}

#[derive(Debug, Clone)]
pub struct SliceReport {
    pub data: SliceData,
    /// Monopole side; a divergent theory is reported here, not raised.
    pub monopole: Result<HilbertSeries>,
    /// Heuristic order of the pole at `t = 1`, see [`pole_order_estimate`].
    pub pole_order_estimate: Option<usize>,
}

impl SliceReport {
    /// True when the monopole series exists and its pole estimate equals `dim`.
    pub fn dimension_consistent(&self) -> bool {
        self.pole_order_estimate == Some(self.data.dim as usize)
    }
}

fn window_max(s: &TruncatedSeries, lo: usize, hi: usize) -> num_bigint::BigInt {
    (lo..hi)
        .map(|k| num_traits::Signed::abs(s.coeff(k)))
        .max()
        .unwrap_or_default()
}

/// Smallest `p` for which `s·(1 − t²)^p` stops growing over `[D/2, D]`, plus
/// one (or `p` itself when that window vanishes). Intended for series in
/// `t²` with a pole at `t = 1`; reads `None` when `D < 8` or no `p ≤ D`
/// qualifies.
pub fn pole_order_estimate(s: &TruncatedSeries) -> Option<usize> {
    let d = s.cutoff();
    if d < 8 {
        return None;
    }
    let (lo, mid) = (d / 2, 3 * d / 4);
    let mut cur = s.clone();
    for p in 0..=d {
        let early = window_max(&cur, lo, mid);
        let late = window_max(&cur, mid, d + 1);
        if late <= early {
            return Some(if late == 0.into() && early == 0.into() {
                p
            } else {
                p + 1
            });
        }
        cur.mul_one_minus_t_pow(2);
    }
    None
}

pub fn slice_report(q: &QuiverTheory, rs: &RootSystem, cutoff: usize) -> Result<SliceReport> {
    let data = slice_data(q, rs)?;
    let monopole = hilbert_series(&quiver_to_theory(q)?, cutoff);
    let pole_order_estimate = match &monopole {
        Ok(h) => {
            if *h.series.coeff(0) != 1.into() {
                return Err(Error::validation("monopole series has constant term other than 1"));
            }
            pole_order_estimate(&h.series)
        }
        Err(_) => None,
    };
    Ok(SliceReport {
        data,
        monopole,
        pole_order_estimate,
    })
}
