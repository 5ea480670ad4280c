//! Toric theories: the exact sequence `0 → ℤ^g → ℤ^d → ℤ^{d−g} → 0`, its
//! Gale dual, and the Higgs-branch Hilbert series by constant-term
//! extraction. Comparing the Coulomb series of a datum with the Higgs series
//! of its dual is the mirror check.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gauge::toric_to_theory;
use crate::lattice::{self, IntMatrix};
use crate::monopole::hilbert_series;
use crate::series::TruncatedSeries;

/// Gauge charges of a toric theory: `g` rows of length `d`, one per `U(1)`.
/// Column `i` is the torus weight of the `i`-th hypermultiplet.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChargeData {
    d: usize,
    gauge_charges: IntMatrix,
}

impl ChargeData {
    /// Checks row lengths and full row rank. Torsion-freeness of the cokernel
    /// is checked separately, see [`ChargeData::is_exact`].
    pub fn new(d: usize, gauge_charges: IntMatrix) -> Result<Self> {
        if let Some(row) = gauge_charges.iter().find(|r| r.len() != d) {
            return Err(Error::validation(format!(
                "charge row has {} entries, expected {d}",
                row.len()
            )));
        }
        if lattice::rank(&gauge_charges, d) != gauge_charges.len() {
            return Err(Error::validation("gauge charge matrix is not of full row rank"));
        }
        Ok(ChargeData { d, gauge_charges })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn gauge_rank(&self) -> usize {
        self.gauge_charges.len()
    }

    pub fn gauge_charges(&self) -> &IntMatrix {
        &self.gauge_charges
    }

    /// Column `i` of the charge matrix.
    pub fn charge(&self, i: usize) -> Vec<i64> {
        self.gauge_charges.iter().map(|r| r[i]).collect()
    }

    /// True iff every Smith invariant factor is 1, i.e. `ℤ^d / im α` is free.
    pub fn is_exact(&self) -> bool {
        lattice::smith_invariants(&self.gauge_charges, self.d)
            .iter()
            .all(|&x| x == 1)
    }

    fn ensure_exact(&self) -> Result<()> {
        if self.is_exact() {
            Ok(())
        } else {
            let inv = lattice::smith_invariants(&self.gauge_charges, self.d);
            Err(Error::validation(format!(
                "cokernel of the gauge charges has torsion (Smith invariants {inv:?})"
            )))
        }
    }

    /// The map `β`: a Hermite-normal basis of the integer kernel of the charges.
    pub fn flavor_charges(&self) -> Result<IntMatrix> {
        self.ensure_exact()?;
        Ok(lattice::integer_kernel(&self.gauge_charges, self.d))
    }

    /// Hermite normal form of the row lattice; equal for unimodularly row-equivalent data.
    pub fn row_lattice(&self) -> IntMatrix {
        lattice::hermite_normal_form(&self.gauge_charges, self.d)
    }
}

/// Swaps the roles of `α` and `β`.
pub fn gale_dual(c: &ChargeData) -> Result<ChargeData> {
    let beta = c.flavor_charges()?;
    Ok(ChargeData {
        d: c.d,
        gauge_charges: beta,
    })
}

/// Power series in `t` whose coefficients are Laurent polynomials in the
/// torus variables `x_1..x_g`, truncated at a t-degree cutoff.
#[derive(Debug, Clone)]
pub struct MultiSeries {
    nvars: usize,
    /// `terms[k]`: exponent vector → coefficient of `t^k x^e`.
    terms: Vec<HashMap<Vec<i64>, BigInt>>,
}

impl MultiSeries {
    pub fn one(nvars: usize, cutoff: usize) -> Self {
        let mut terms = vec![HashMap::new(); cutoff + 1];
        terms[0].insert(vec![0; nvars], BigInt::from(1));
        MultiSeries { nvars, terms }
    }

    pub fn cutoff(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Multiplies by `1 / (1 − t·x^χ)`.
    pub fn mul_geometric(&mut self, chi: &[i64]) {
        for k in 1..self.terms.len() {
            let (lower, upper) = self.terms.split_at_mut(k);
            let prev = &lower[k - 1];
            let cur = &mut upper[0];
            for (e, c) in prev {
                let shifted: Vec<i64> = e.iter().zip(chi).map(|(a, b)| a + b).collect();
                *cur.entry(shifted).or_insert_with(BigInt::zero) += c;
            }
            cur.retain(|_, c| !c.is_zero());
        }
    }

    /// Drops terms at t-degree `k` with `|e_j| > (cutoff − k)·reach[j]`: the
    /// remaining factors move coordinate `j` by at most `reach[j]` per power
    /// of `t`, so such terms never return to the constant term.
    pub fn prune(&mut self, reach: &[i64]) {
        let d = self.cutoff() as i64;
        for (k, map) in self.terms.iter_mut().enumerate() {
            let left = d - k as i64;
            map.retain(|e, _| e.iter().zip(reach).all(|(x, r)| x.abs() <= left * r));
        }
    }

    /// Largest `|e_j|` stored at each t-degree.
    pub fn support_radius(&self, k: usize) -> i64 {
        self.terms[k]
            .keys()
            .flat_map(|e| e.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `x^0` as a series in `t`.
    pub fn constant_term(&self) -> TruncatedSeries {
        let zero = vec![0; self.nvars];
        TruncatedSeries::from_coeffs(
            self.terms
                .iter()
                .map(|m| m.get(&zero).cloned().unwrap_or_else(BigInt::zero)),
        )
    }
}

/// Hilbert series of the Higgs branch `T*ℂ^d /// (ℂ×)^g`:
/// `CT_x[(1 − t²)^g ∏_i ((1 − t x^{χ_i})(1 − t x^{−χ_i}))^{-1}]`.
pub fn molien_higgs_series(c: &ChargeData, cutoff: usize) -> TruncatedSeries {
    let g = c.gauge_rank();
    let mut factors: Vec<Vec<i64>> = Vec::with_capacity(2 * c.d());
    for i in 0..c.d() {
        let chi = c.charge(i);
        factors.push(chi.iter().map(|x| -x).collect());
        factors.push(chi);
    }
    let mut ms = MultiSeries::one(g, cutoff);
    for (idx, chi) in factors.iter().enumerate() {
        ms.mul_geometric(chi);
        let reach: Vec<i64> = (0..g)
            .map(|j| factors[idx + 1..].iter().map(|f| f[j].abs()).max().unwrap_or(0))
            .collect();
        ms.prune(&reach);
    }
    let mut series = ms.constant_term();
    for _ in 0..g {
        series.mul_one_minus_t_pow(2);
    }
    series
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorReport {
    pub equal: bool,
    /// Coulomb side: monopole series of the datum.
    pub lhs: TruncatedSeries,
    /// Higgs side: Molien series of the Gale dual.
    pub rhs: TruncatedSeries,
    pub first_mismatch_degree: Option<usize>,
}

impl MirrorReport {
    pub fn compare(lhs: TruncatedSeries, rhs: TruncatedSeries) -> Self {
        let first_mismatch_degree = lhs.first_mismatch(&rhs);
        MirrorReport {
            equal: first_mismatch_degree.is_none(),
            lhs,
            rhs,
            first_mismatch_degree,
        }
    }

    pub fn cutoff(&self) -> usize {
        self.lhs.cutoff().min(self.rhs.cutoff())
    }

    /// `k,coulomb,higgs` per degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,coulomb,higgs\n");
        for k in 0..=self.cutoff() {
            out.push_str(&format!("{k},{},{}\n", self.lhs.coeff(k), self.rhs.coeff(k)));
        }
        out
    }
}

pub fn mirror_check(c: &ChargeData, cutoff: usize) -> Result<MirrorReport> {
    let dual = gale_dual(c)?;
    let coulomb = hilbert_series(&toric_to_theory(c)?, cutoff)?;
    let higgs = molien_higgs_series(&dual, cutoff);
    Ok(MirrorReport::compare(coulomb.series, higgs))
}
