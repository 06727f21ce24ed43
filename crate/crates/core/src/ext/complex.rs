use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::linalg::SparseMatrix;
use crate::resolutions::{ArrowKind, ChainSummand, SyResolution};
use crate::shapes::Partition;
use crate::weyl::{SimpleModule, WeightModule, WeylModule};

/// Coefficient module of a Hom complex: `Δ(μ)` or `L(μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Weyl,
    Simple,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::Weyl => "weyl",
            Target::Simple => "simple",
        }
    }

    pub fn module(self, field: PrimeField, mu: &Partition) -> Box<dyn WeightModule> {
        match self {
            Target::Weyl => Box::new(WeylModule::new(field, mu)),
            Target::Simple => Box::new(SimpleModule::new(field, mu)),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "weyl" => Ok(Target::Weyl),
            "simple" => Ok(Target::Simple),
            other => Err(Error::Parse(format!("unknown target {other:?}; expected weyl or simple"))),
        }
    }
}

/// Caps that turn oversized computations into [`Error::ResourceLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of coordinates, and of summands, in one degree.
    pub max_basis: usize,
    pub max_r: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_basis: 200_000,
            max_r: 20,
        }
    }
}

impl Limits {
    pub(crate) fn check_r(&self, r: u32) -> Result<()> {
        if r > self.max_r {
            return Err(Error::ResourceLimit(format!("r = {r} exceeds the cap {}", self.max_r)));
        }
        Ok(())
    }

    pub(crate) fn check_basis(&self, k: usize, what: &str, size: usize) -> Result<()> {
        if size > self.max_basis {
            return Err(Error::ResourceLimit(format!(
                "degree {k} has {size} {what}, over the cap {}",
                self.max_basis
            )));
        }
        Ok(())
    }
}

/// A cochain complex of `F_p`-vector spaces `C^0 → C^1 → …`, zero past the
/// stored degrees when `complete`.
#[derive(Debug, Clone)]
pub struct CochainComplex {
    field: PrimeField,
    dims: Vec<usize>,
    /// `differentials[k]` is `d^{k+1} : C^k → C^{k+1}`.
    differentials: Vec<SparseMatrix>,
    complete: bool,
}

impl CochainComplex {
    /// `differentials.len()` must be `dims.len() - 1`, with matching shapes.
    pub fn new(field: PrimeField, dims: Vec<usize>, differentials: Vec<SparseMatrix>, complete: bool) -> Self {
        assert_eq!(differentials.len() + 1, dims.len().max(1), "one differential between each pair of degrees");
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!((d.rows(), d.cols()), (dims[k + 1], dims[k]), "differential {} has the wrong shape", k + 1);
        }
        CochainComplex {
            field,
            dims,
            differentials,
            complete,
        }
    }

    pub fn zero(field: PrimeField, degrees: usize) -> Self {
        let dims = vec![0; degrees.max(1)];
        let differentials = (1..dims.len()).map(|_| SparseMatrix::zeros(field, 0, 0)).collect();
        CochainComplex::new(field, dims, differentials, true)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `dim C^k`; zero outside the stored range.
    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of stored degrees.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Whether every nonzero term is stored.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// `d^k : C^{k−1} → C^k`, for `1 ≤ k < len()`.
    pub fn differential(&self, k: usize) -> Option<&SparseMatrix> {
        k.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.differentials
    }

    /// `d^{k+1} ∘ d^k = 0` for every stored pair.
    pub fn squares_to_zero(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    /// `dim H^i` for every `i` whose value is determined by the stored data.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(SparseMatrix::rank).collect();
        let known = if self.complete { self.dims.len() } else { self.dims.len() - 1 };
        (0..known)
            .map(|i| {
                let into = if i == 0 { 0 } else { ranks[i - 1] };
                let out = ranks.get(i).copied().unwrap_or(0);
                self.dims[i] - into - out
            })
            .collect()
    }

    /// `Σ (−1)^k dim C^k`, defined only for a complete complex.
    pub fn euler_characteristic(&self) -> Option<i64> {
        self.complete.then(|| alternating_sum(&self.dims))
    }
}

pub(crate) fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Ordered basis of one degree of a Hom complex: summand `s` contributes
/// coordinates `offsets[s] .. offsets[s] + dims[s]`, indexed like the SST
/// basis (or the `L(μ)` coordinates) of its top weight space.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DegreeBasis {
    pub summands: Vec<ChainSummand>,
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
}

impl DegreeBasis {
    pub fn total(&self) -> usize {
        self.offsets.last().map_or(0, |&o| o + self.dims.last().copied().unwrap_or(0))
    }
}

/// `Hom_S(B_*(λ), M)` for `M = Δ(μ)` or `L(μ)`.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub lam: Partition,
    pub mu: Partition,
    pub p: u64,
    pub target: Target,
    pub max_degree: usize,
    pub degrees: Vec<DegreeBasis>,
    pub complex: CochainComplex,
}

impl HomComplex {
    /// `Ext^i` for `i = 0..=max_degree`.
    pub fn ext_dims(&self) -> Vec<usize> {
        let mut dims = self.complex.cohomology_dims();
        dims.resize(self.max_degree + 1, 0);
        dims.truncate(self.max_degree + 1);
        dims
    }

    pub fn degree_dims(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|k| self.complex.dim(k)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.complex.is_complete()
    }
}

pub(crate) fn check_pair(lam: &Partition, mu: &Partition) -> Result<()> {
    if lam.r() != mu.r() {
        return Err(Error::invalid(format!("λ = {lam} and μ = {mu} have different sizes")));
    }
    if lam.n() != mu.n() {
        return Err(Error::invalid(format!(
            "λ = {lam} and μ = {mu} are padded to different n; pad both to the same n"
        )));
    }
    Ok(())
}

pub fn build_hom_complex(
    lam: &Partition,
    mu: &Partition,
    p: u64,
    target: Target,
    max_degree: usize,
) -> Result<HomComplex> {
    build_hom_complex_with(lam, mu, p, target, max_degree, Limits::default())
}

/// Builds degrees `0..=max_degree + 1`, enough to determine
/// `Ext^0 … Ext^{max_degree}`.
pub fn build_hom_complex_with(
    lam: &Partition,
    mu: &Partition,
    p: u64,
    target: Target,
    max_degree: usize,
    limits: Limits,
) -> Result<HomComplex> {
    let field = PrimeField::new(p)?;
    check_pair(lam, mu)?;
    limits.check_r(lam.r())?;
    let mut out = HomComplex {
        lam: lam.clone(),
        mu: mu.clone(),
        p,
        target,
        max_degree,
        degrees: Vec::new(),
        complex: CochainComplex::zero(field, 1),
    };
    if !mu.dominates(lam) {
        out.degrees = vec![DegreeBasis::default(); max_degree + 2];
        out.complex = CochainComplex::zero(field, max_degree + 2);
        return Ok(out);
    }

    let res = SyResolution::new(field, lam);
    let module = target.module(field, mu);
    let mut degrees: Vec<DegreeBasis> = Vec::new();
    let mut complete = false;
    for k in 0..=max_degree + 1 {
        let mult = res.multiplicities(k);
        let summand_count: usize = mult.iter().map(|(_, c)| c).sum();
        if summand_count == 0 {
            complete = true;
            break;
        }
        limits.check_basis(k, "summands", summand_count)?;
        let mut coords = 0usize;
        let mut weight_dims = HashMap::new();
        for (alpha, c) in &mult {
            let dim = module.weight_dim(alpha)?;
            coords = coords.saturating_add(dim.saturating_mul(*c));
            weight_dims.insert(alpha.clone(), dim);
        }
        limits.check_basis(k, "coordinates", coords)?;
        let mut basis = DegreeBasis::default();
        let mut offset = 0;
        for s in res.degree(k) {
            let dim = weight_dims[&s.top_weight];
            basis.offsets.push(offset);
            basis.dims.push(dim);
            basis.summands.push(s);
            offset += dim;
        }
        degrees.push(basis);
    }

    let mut differentials = Vec::new();
    for k in 1..degrees.len() {
        let (prev, cur) = (&degrees[k - 1], &degrees[k]);
        let index: HashMap<&ChainSummand, usize> =
            prev.summands.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut triplets = Vec::new();
        for (s, x) in cur.summands.iter().enumerate() {
            let (ox, dx) = (cur.offsets[s], cur.dims[s]);
            if dx == 0 {
                continue;
            }
            for arrow in res.arrows(x) {
                let y = *index
                    .get(&arrow.target)
                    .expect("arrow targets lie in the previous degree");
                let (oy, dy) = (prev.offsets[y], prev.dims[y]);
                if dy == 0 {
                    continue;
                }
                match &arrow.kind {
                    ArrowKind::Compose(w) => {
                        let a = module.act_matrix(w)?;
                        for r in 0..dx {
                            for (c, &v) in a.row(r).iter().enumerate() {
                                if v != 0 {
                                    triplets.push((ox + r, oy + c, v));
                                }
                            }
                        }
                    }
                    ArrowKind::Merge { scalar, .. } => {
                        if *scalar != 0 {
                            triplets.extend((0..dx).map(|j| (ox + j, oy + j, *scalar)));
                        }
                    }
                }
            }
        }
        differentials.push(SparseMatrix::from_triplets(field, cur.total(), prev.total(), triplets));
    }
    let dims = degrees.iter().map(DegreeBasis::total).collect();
    out.complex = CochainComplex::new(field, dims, differentials, complete);
    out.degrees = degrees;
    Ok(out)
}

/// `Ext^i` for `i = 0..=max_degree` via the chain resolution.
pub fn ext_dims(lam: &Partition, mu: &Partition, p: u64, target: Target, max_degree: usize) -> Result<Vec<usize>> {
    Ok(build_hom_complex(lam, mu, p, target, max_degree)?.ext_dims())
}

pub fn cohomology_dims(c: &HomComplex) -> Vec<usize> {
    c.ext_dims()
}

/// `Σ(−1)^i dim Ext^i = Σ(−1)^k dim C^k`; `None` for a truncated complex.
pub fn euler_check(c: &HomComplex) -> Option<bool> {
    let chi = c.complex.euler_characteristic()?;
    Some(alternating_sum(&c.complex.cohomology_dims()) == chi)
}
