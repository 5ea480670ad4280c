//! Gauge theories `(G, N)` with `G` a product of `GL(n)` factors and `N`
//! given by its multiset of weights on the Cartan torus.

use std::fmt;

use crate::error::{Error, Result};
use crate::toric::ChargeData;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaugeGroup {
    /// `factors[i] = n` means a `GL(n)` factor.
    pub factors: Vec<usize>,
}

impl GaugeGroup {
    pub fn new(factors: Vec<usize>) -> Self {
        GaugeGroup { factors }
    }

    /// Torus `GL(1)^r`.
    pub fn torus(r: usize) -> Self {
        GaugeGroup { factors: vec![1; r] }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().sum()
    }

    /// Coordinate ranges of the blocks, in factor order.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.factors
            .iter()
            .map(|&n| {
                let r = start..start + n;
                start += n;
                r
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.factors.iter().all(|&n| n == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatterWeight {
    pub weight: Vec<i64>,
    pub multiplicity: u64,
}

impl MatterWeight {
    pub fn new(weight: Vec<i64>, multiplicity: u64) -> Self {
        MatterWeight { weight, multiplicity }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Theory {
    pub group: GaugeGroup,
    pub matter: Vec<MatterWeight>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationCode {
    EmptyGroup,
    FactorZero,
    WeightLen,
    MultZero,
}

impl ViolationCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationCode::EmptyGroup => "EMPTY_GROUP",
            ViolationCode::FactorZero => "FACTOR_ZERO",
            ViolationCode::WeightLen => "WEIGHT_LEN",
            ViolationCode::MultZero => "MULT_ZERO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    /// Index of the offending factor or matter entry, when there is one.
    pub index: Option<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code.as_str(), self.message)
    }
}

impl Theory {
    pub fn new(group: GaugeGroup, matter: Vec<MatterWeight>) -> Self {
        Theory { group, matter }
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        validate_theory(self)
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        self.validate().map_err(|v| {
            let msgs: Vec<String> = v.iter().map(ToString::to_string).collect();
            Error::Validation(msgs.join("; "))
        })
    }

    /// Same theory with identical weights merged and sorted, for comparisons.
    pub fn canonical(&self) -> Theory {
        let mut merged: Vec<MatterWeight> = Vec::new();
        let mut sorted = self.matter.clone();
        sorted.sort();
        for m in sorted {
            match merged.last_mut() {
                Some(last) if last.weight == m.weight => last.multiplicity += m.multiplicity,
                _ => merged.push(m),
            }
        }
        Theory {
            group: self.group.clone(),
            matter: merged,
        }
    }

    /// Relabels Cartan coordinates: new coordinate `i` is old coordinate `perm[i]`.
    /// The group is left unchanged, so `perm` should map blocks to blocks of
    /// equal size.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Theory {
        Theory {
            group: self.group.clone(),
            matter: self
                .matter
                .iter()
                .map(|m| MatterWeight::new(perm.iter().map(|&p| m.weight[p]).collect(), m.multiplicity))
                .collect(),
        }
    }

    /// Product theory: gauge factors and matter placed block-diagonally.
    pub fn product(&self, other: &Theory) -> Theory {
        let (r1, r2) = (self.rank(), other.rank());
        let mut factors = self.group.factors.clone();
        factors.extend(&other.group.factors);
        let mut matter: Vec<MatterWeight> = self
            .matter
            .iter()
            .map(|m| {
                let mut w = m.weight.clone();
                w.extend(std::iter::repeat_n(0, r2));
                MatterWeight::new(w, m.multiplicity)
            })
            .collect();
        matter.extend(other.matter.iter().map(|m| {
            let mut w = vec![0; r1];
            w.extend(&m.weight);
            MatterWeight::new(w, m.multiplicity)
        }));
        Theory::new(GaugeGroup::new(factors), matter)
    }

    /// Number of weights counted with multiplicity, i.e. `dim N`.
    pub fn matter_dimension(&self) -> u64 {
        self.matter.iter().map(|m| m.multiplicity).sum()
    }
}

pub fn validate_theory(t: &Theory) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if t.group.factors.is_empty() {
        out.push(Violation {
            code: ViolationCode::EmptyGroup,
            index: None,
            message: "gauge group has no factors".into(),
        });
    }
    for (i, &n) in t.group.factors.iter().enumerate() {
        if n == 0 {
            out.push(Violation {
                code: ViolationCode::FactorZero,
                index: Some(i),
                message: format!("factor {i} is GL(0)"),
            });
        }
    }
    let r = t.rank();
    for (i, m) in t.matter.iter().enumerate() {
        if m.weight.len() != r {
            out.push(Violation {
                code: ViolationCode::WeightLen,
                index: Some(i),
                message: format!("weight {i} has length {}, gauge rank is {r}", m.weight.len()),
            });
        }
        if m.multiplicity == 0 {
            out.push(Violation {
                code: ViolationCode::MultZero,
                index: Some(i),
                message: format!("weight {i} has multiplicity 0"),
            });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Quiver data: vertices `0..n`, oriented edges, gauge dimensions `V` and
/// framing dimensions `W`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuiverTheory {
    pub edges: Vec<(usize, usize)>,
    pub dim_v: Vec<u64>,
    pub dim_w: Vec<u64>,
}

impl QuiverTheory {
    pub fn new(edges: Vec<(usize, usize)>, dim_v: Vec<u64>, dim_w: Vec<u64>) -> Result<Self> {
        if dim_v.len() != dim_w.len() {
            return Err(Error::validation("V and W have different numbers of vertices"));
        }
        let n = dim_v.len();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n || b >= n) {
            return Err(Error::validation(format!(
                "edge ({a},{b}) leaves the vertex set of size {n}"
            )));
        }
        Ok(QuiverTheory { edges, dim_v, dim_w })
    }

    pub fn vertex_count(&self) -> usize {
        self.dim_v.len()
    }

    /// `Σ_e V_t·V_h + Σ_j W_j·V_j`.
    pub fn matter_dimension(&self) -> u64 {
        let edges: u64 = self.edges.iter().map(|&(t, h)| self.dim_v[t] * self.dim_v[h]).sum();
        let framing: u64 = self.dim_v.iter().zip(&self.dim_w).map(|(v, w)| v * w).sum();
        edges + framing
    }

    /// Reorders vertices: new vertex `i` is old vertex `order[i]`.
    pub fn reorder(&self, order: &[usize]) -> QuiverTheory {
        let mut inverse = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        QuiverTheory {
            edges: self.edges.iter().map(|&(t, h)| (inverse[t], inverse[h])).collect(),
            dim_v: order.iter().map(|&o| self.dim_v[o]).collect(),
            dim_w: order.iter().map(|&o| self.dim_w[o]).collect(),
        }
    }
}

fn push_merged(matter: &mut Vec<MatterWeight>, weight: Vec<i64>, multiplicity: u64) {
    if multiplicity == 0 {
        return;
    }
    match matter.iter_mut().find(|m| m.weight == weight) {
        Some(m) => m.multiplicity += multiplicity,
        None => matter.push(MatterWeight::new(weight, multiplicity)),
    }
}

/// `G = ∏_j GL(V_j)` over vertices with `V_j > 0`, and
/// `N = ⊕_e Hom(V_t, V_h) ⊕ ⊕_j Hom(W_j, V_j)`.
pub fn quiver_to_theory(q: &QuiverTheory) -> Result<Theory> {
    if q.dim_v.iter().all(|&v| v == 0) {
        return Err(Error::validation("all gauge dimensions are zero"));
    }
    let mut offsets = vec![None; q.vertex_count()];
    let mut factors = Vec::new();
    let mut next = 0usize;
    for (j, &v) in q.dim_v.iter().enumerate() {
        if v > 0 {
            offsets[j] = Some(next);
            factors.push(v as usize);
            next += v as usize;
        }
    }
    let r = next;
    let mut matter = Vec::new();
    for &(t, h) in &q.edges {
        let (Some(ot), Some(oh)) = (offsets[t], offsets[h]) else {
            continue;
        };
        for a in 0..q.dim_v[h] as usize {
            for b in 0..q.dim_v[t] as usize {
                let mut w = vec![0i64; r];
                w[oh + a] += 1;
                w[ot + b] -= 1;
                push_merged(&mut matter, w, 1);
            }
        }
    }
    for (j, &wj) in q.dim_w.iter().enumerate() {
        let Some(o) = offsets[j] else { continue };
        for b in 0..q.dim_v[j] as usize {
            let mut w = vec![0i64; r];
            w[o + b] = 1;
            push_merged(&mut matter, w, wj);
        }
    }
    Ok(Theory::new(GaugeGroup::new(factors), matter))
}

/// `GL(1)^g` acting on `ℂ^d` through the columns of the gauge charge matrix.
pub fn toric_to_theory(c: &ChargeData) -> Result<Theory> {
    let g = c.gauge_rank();
    if g == 0 {
        return Err(Error::validation("toric datum has no gauge U(1) factors"));
    }
    let matter = (0..c.d())
        .map(|i| MatterWeight::new(c.gauge_charges().iter().map(|row| row[i]).collect(), 1))
        .collect();
    Ok(Theory::new(GaugeGroup::torus(g), matter))
}
