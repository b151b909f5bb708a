//! Goemans–Williamson style rounding of unit-vector embeddings, and a
//! low-rank coordinate-ascent solver for the Max-Cut SDP relaxation.
//!
//! This is the only floating-point part of the crate.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::distribution::CutDistribution;
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, GroupPartition};
use crate::rational::Rational;
use crate::rng::trial_rng;
use crate::utility::{PartitionForms, UtilityModel};

/// Allowed deviation of each vector's norm from 1.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// One unit vector per vertex, all of the same dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVectorEmbedding {
    dimension: usize,
    vectors: Vec<Vec<f64>>,
}

impl UnitVectorEmbedding {
    pub fn new(vectors: Vec<Vec<f64>>) -> Result<Self> {
        let dimension = vectors.first().map_or(0, Vec::len);
        if dimension == 0 {
            return Err(Error::InvalidEmbedding("dimension must be at least 1".into()));
        }
        for (v, x) in vectors.iter().enumerate() {
            if x.len() != dimension {
                return Err(Error::InvalidEmbedding(format!(
                    "vector {v} has dimension {}, expected {dimension}",
                    x.len()
                )));
            }
            let norm = dot(x, x).sqrt();
            if !norm.is_finite() || (norm - 1.0).abs() > NORM_TOLERANCE {
                return Err(Error::InvalidEmbedding(format!("vector {v} has norm {norm}")));
            }
        }
        Ok(UnitVectorEmbedding { dimension, vectors })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// θ_uv/π = arccos(x_u·x_v)/π, the probability that a uniformly random
    /// hyperplane separates u and v.
    pub fn separation_probability(&self, u: usize, v: usize) -> f64 {
        dot(&self.vectors[u], &self.vectors[v]).clamp(-1.0, 1.0).acos() / PI
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_embedding(g: &Graph, embedding: &UnitVectorEmbedding) -> Result<()> {
    if embedding.len() != g.vertex_count() {
        return Err(Error::InvalidEmbedding(format!(
            "{} vectors for a graph with {} vertices",
            embedding.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Sampled hyperplane cuts with empirical and analytic per-edge cut rates.
#[derive(Debug, Clone, PartialEq)]
pub struct GwRounding {
    pub cuts: Vec<Cut>,
    pub edge_frequencies: Vec<f64>,
    pub analytic_probabilities: Vec<f64>,
}

impl GwRounding {
    /// The empirical lottery: each sampled cut with weight 1/samples.
    pub fn empirical_distribution(&self) -> CutDistribution {
        CutDistribution::uniform(self.cuts.iter().cloned()).expect("at least one sample")
    }
}

/// Draws `samples` Gaussian hyperplane normals r and puts v in S when
/// x_v·r < 0 (a zero inner product counts as positive).
pub fn gw_round(g: &Graph, embedding: &UnitVectorEmbedding, seed: u64, samples: u64) -> Result<GwRounding> {
    check_embedding(g, embedding)?;
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    let mut cuts = Vec::with_capacity(samples as usize);
    let mut counts = vec![0u64; g.edge_count()];
    for sample in 0..samples {
        let mut rng = trial_rng(seed, sample);
        let normal: Vec<f64> = (0..embedding.dimension()).map(|_| rng.sample(StandardNormal)).collect();
        let cut = Cut::from_members(
            g.vertex_count(),
            (0..g.vertex_count()).filter(|&v| dot(&embedding.vectors[v], &normal) < 0.0),
        );
        for (e, &edge) in g.edges().iter().enumerate() {
            if cut.crosses(edge) {
                counts[e] += 1;
            }
        }
        cuts.push(cut);
    }
    Ok(GwRounding {
        cuts,
        edge_frequencies: counts.iter().map(|&c| c as f64 / samples as f64).collect(),
        analytic_probabilities: g.edges().iter().map(|&(u, v)| embedding.separation_probability(u, v)).collect(),
    })
}

/// Expected group proportions under hyperplane rounding, from the analytic
/// per-edge probabilities.
pub fn gw_expected_proportions(
    g: &Graph,
    model: UtilityModel,
    partition: &GroupPartition,
    embedding: &UnitVectorEmbedding,
) -> Result<Vec<f64>> {
    check_embedding(g, embedding)?;
    let forms = PartitionForms::new(g, model, partition)?;
    Ok(forms
        .groups()
        .iter()
        .map(|form| {
            form.terms()
                .iter()
                .map(|(u, v, w)| crate::rational::to_f64(w) * embedding.separation_probability(*u, *v))
                .sum::<f64>()
                / form.size() as f64
        })
        .collect())
}

/// Σ_{(u,v) ∈ E} (1 − x_u·x_v)/2.
pub fn sdp_objective(g: &Graph, embedding: &UnitVectorEmbedding) -> f64 {
    g.edges().iter().map(|&(u, v)| 0.5 * (1.0 - dot(&embedding.vectors[u], &embedding.vectors[v]))).sum()
}

/// min(n, ⌈√(2n)⌉ + 1), but at least 2.
pub fn default_rank(vertex_count: usize) -> usize {
    let r = ((2.0 * vertex_count as f64).sqrt().ceil() as usize) + 1;
    r.min(vertex_count).max(2)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SdpResult {
    pub embedding: UnitVectorEmbedding,
    pub objective: f64,
    /// Objective after each sweep.
    pub history: Vec<f64>,
}

/// Cyclic coordinate ascent on the rank-`rank` relaxation: each vertex in
/// turn is set to the unit vector opposite the sum of its neighbours, which
/// maximizes the objective in that coordinate, so the objective never
/// decreases. Starts from seeded Gaussian unit vectors and runs `iterations`
/// sweeps.
pub fn gw_sdp_solve(g: &Graph, rank: Option<usize>, iterations: usize, seed: u64) -> Result<SdpResult> {
    let rank = rank.unwrap_or_else(|| default_rank(g.vertex_count()));
    if rank < 2 {
        return Err(Error::InvalidParameter("SDP rank must be at least 2".into()));
    }
    let mut rng = trial_rng(seed, 0);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(g.vertex_count());
    for _ in 0..g.vertex_count() {
        let mut x: Vec<f64> = (0..rank).map(|_| rng.sample(StandardNormal)).collect();
        let mut norm = dot(&x, &x).sqrt();
        if norm < 1e-12 {
            x = vec![0.0; rank];
            x[0] = 1.0;
            norm = 1.0;
        }
        vectors.push(x.iter().map(|c| c / norm).collect());
    }
    let mut history = Vec::with_capacity(iterations);
    let mut sum = vec![0.0; rank];
    for _ in 0..iterations {
        for v in 0..g.vertex_count() {
            sum.iter_mut().for_each(|s| *s = 0.0);
            for &u in g.neighbors(v) {
                for (s, c) in sum.iter_mut().zip(&vectors[u]) {
                    *s += c;
                }
            }
            let norm = dot(&sum, &sum).sqrt();
            if norm > 1e-12 {
                for (x, s) in vectors[v].iter_mut().zip(&sum) {
                    *x = -s / norm;
                }
            }
        }
        let embedding = UnitVectorEmbedding { dimension: rank, vectors: vectors.clone() };
        history.push(sdp_objective(g, &embedding));
    }
    let embedding = UnitVectorEmbedding { dimension: rank, vectors };
    Ok(SdpResult { objective: sdp_objective(g, &embedding), embedding, history })
}

/// Exact lottery induced by sampled cuts, with every cut in canonical form.
pub fn sampled_distribution(rounding: &GwRounding) -> CutDistribution {
    rounding.empirical_distribution().canonicalized()
}

/// Fraction of samples in which `edge` crossed, as an exact rational.
pub fn exact_edge_frequency(rounding: &GwRounding, edge: (usize, usize)) -> Rational {
    let hits = rounding.cuts.iter().filter(|c| c.crosses(edge)).count();
    Rational::new(hits.into(), rounding.cuts.len().into())
}
