use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::fp::PrimeField;
use crate::linalg::{FpMatrix, Subspace};
use crate::schur::SchurAlgebra;
use crate::shapes::{enumerate_compositions, enumerate_sst, Composition, MatrixWeight, Partition};

use super::model::WeightSpaceModel;

/// A finite-dimensional `S(n, r)`-module given weight space by weight space,
/// with `ξ_ω` acting as a matrix from weight `ω¹` to weight `ω²`.
pub trait WeightModule {
    fn field(&self) -> PrimeField;
    fn highest_weight(&self) -> &Partition;
    fn weight_dim(&self, alpha: &Composition) -> Result<usize>;
    /// Matrix of `ξ_ω`, of size `dim M_{ω²} × dim M_{ω¹}`.
    fn act_matrix(&self, w: &MatrixWeight) -> Result<Rc<FpMatrix>>;

    /// `ξ_ω · v` for `v` in `M_{ω¹}`.
    fn act(&self, w: &MatrixWeight, v: &[u32]) -> Result<Vec<u32>> {
        let m = self.act_matrix(w)?;
        if v.len() != m.cols() {
            return Err(Error::invalid(format!(
                "vector of length {} is not in the weight space {} of dimension {}",
                v.len(),
                w.col_sums(),
                m.cols()
            )));
        }
        Ok(m.mul_vec(v))
    }
}

type ActCache = RefCell<HashMap<MatrixWeight, Rc<FpMatrix>>>;

/// The Weyl module `Δ(μ)` with lazily built weight spaces and action
/// matrices. Caches are per instance and not thread-safe.
pub struct WeylModule {
    field: PrimeField,
    mu: Partition,
    algebra: SchurAlgebra,
    models: RefCell<HashMap<Composition, Rc<WeightSpaceModel>>>,
    acts: ActCache,
}

impl WeylModule {
    pub fn new(field: PrimeField, mu: &Partition) -> Self {
        WeylModule {
            field,
            mu: mu.clone(),
            algebra: SchurAlgebra::new(field, mu.n(), mu.r()),
            models: RefCell::new(HashMap::new()),
            acts: RefCell::new(HashMap::new()),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn algebra(&self) -> &SchurAlgebra {
        &self.algebra
    }

    pub fn model(&self, alpha: &Composition) -> Result<Rc<WeightSpaceModel>> {
        if let Some(m) = self.models.borrow().get(alpha) {
            return Ok(m.clone());
        }
        let m = Rc::new(WeightSpaceModel::build(self.field, &self.mu, alpha)?);
        self.models.borrow_mut().insert(alpha.clone(), m.clone());
        Ok(m)
    }

    /// `G_{T,T'}`: the `[T_μ]` coefficient of `ξ_{ω(T)ᵗ} · [T']`.
    pub fn gram(&self, alpha: &Composition) -> Result<FpMatrix> {
        let model = self.model(alpha)?;
        let k = model.dim();
        let mut g = FpMatrix::zeros(self.field, k, k);
        for (row, t) in model.sst().iter().enumerate() {
            let a = self.act_matrix(&t.matrix().transpose())?;
            for col in 0..k {
                g.set(row, col, a.get(0, col));
            }
        }
        Ok(g)
    }
}

impl WeightModule for WeylModule {
    fn field(&self) -> PrimeField {
        self.field
    }

    fn highest_weight(&self) -> &Partition {
        &self.mu
    }

    fn weight_dim(&self, alpha: &Composition) -> Result<usize> {
        Ok(self.model(alpha)?.dim())
    }

    fn act_matrix(&self, w: &MatrixWeight) -> Result<Rc<FpMatrix>> {
        if let Some(m) = self.acts.borrow().get(w) {
            return Ok(m.clone());
        }
        if w.n() != self.mu.n() || w.total() != self.mu.r() {
            return Err(Error::invalid(format!("ξ_{w} is not in S({}, {})", self.mu.n(), self.mu.r())));
        }
        let f = self.field;
        let source = self.model(&w.col_sums())?;
        let target = self.model(&w.row_sums())?;
        let mut m = FpMatrix::zeros(f, target.dim(), source.dim());
        for (col, t) in source.sst().iter().enumerate() {
            for (rho, c) in self.algebra.product(w, t.matrix()).iter() {
                let nf = target.normal_form(rho).expect("product lands in Ω(ω², μ)");
                for (row, &x) in nf.iter().enumerate() {
                    if x != 0 {
                        m.add_to(row, col, f.mul(*c, x));
                    }
                }
            }
        }
        let m = Rc::new(m);
        self.acts.borrow_mut().insert(w.clone(), m.clone());
        Ok(m)
    }
}

/// The contravariant form on one weight space of `Δ(μ)` and its radical.
#[derive(Debug, Clone)]
pub struct GramData {
    pub mu: Partition,
    pub alpha: Composition,
    pub p: u32,
    pub gram: FpMatrix,
    pub radical_dim: usize,
    pub radical_basis: Vec<Vec<u32>>,
}

pub fn gram_matrix(mu: &Partition, alpha: &Composition, p: u64) -> Result<GramData> {
    let field = PrimeField::new(p)?;
    let weyl = WeylModule::new(field, mu);
    let gram = weyl.gram(alpha)?;
    let radical_basis = gram.kernel();
    Ok(GramData {
        mu: mu.clone(),
        alpha: alpha.clone(),
        p: field.p(),
        radical_dim: radical_basis.len(),
        radical_basis,
        gram,
    })
}

/// `L(μ) = Δ(μ) / rad Δ(μ)`, with the radical taken as the kernel of the
/// Gram form in each weight. Quotient coordinates are the non-pivot
/// coordinates of the radical's echelon basis.
pub struct SimpleModule {
    weyl: WeylModule,
    radicals: RefCell<HashMap<Composition, Rc<Subspace>>>,
    acts: ActCache,
}

impl SimpleModule {
    pub fn new(field: PrimeField, mu: &Partition) -> Self {
        SimpleModule {
            weyl: WeylModule::new(field, mu),
            radicals: RefCell::new(HashMap::new()),
            acts: RefCell::new(HashMap::new()),
        }
    }

    pub fn weyl(&self) -> &WeylModule {
        &self.weyl
    }

    pub fn radical(&self, alpha: &Composition) -> Result<Rc<Subspace>> {
        if let Some(s) = self.radicals.borrow().get(alpha) {
            return Ok(s.clone());
        }
        let g = self.weyl.gram(alpha)?;
        let s = Rc::new(Subspace::span(self.weyl.field, g.cols(), &g.kernel()));
        self.radicals.borrow_mut().insert(alpha.clone(), s.clone());
        Ok(s)
    }

    /// Image in `L(μ)_α` of a vector of `Δ(μ)_α`.
    pub fn project(&self, alpha: &Composition, v: &[u32]) -> Result<Vec<u32>> {
        Ok(self.radical(alpha)?.project(v))
    }
}

impl WeightModule for SimpleModule {
    fn field(&self) -> PrimeField {
        self.weyl.field
    }

    fn highest_weight(&self) -> &Partition {
        &self.weyl.mu
    }

    fn weight_dim(&self, alpha: &Composition) -> Result<usize> {
        let rad = self.radical(alpha)?;
        Ok(rad.ambient() - rad.dim())
    }

    fn act_matrix(&self, w: &MatrixWeight) -> Result<Rc<FpMatrix>> {
        if let Some(m) = self.acts.borrow().get(w) {
            return Ok(m.clone());
        }
        let full = self.weyl.act_matrix(w)?;
        let source = self.radical(&w.col_sums())?;
        let target = self.radical(&w.row_sums())?;
        let cols = source.complement();
        let mut m = FpMatrix::zeros(self.weyl.field, target.ambient() - target.dim(), cols.len());
        for (j, &c) in cols.iter().enumerate() {
            let image = target.project(&full.column(c));
            for (i, x) in image.into_iter().enumerate() {
                m.set(i, j, x);
            }
        }
        let m = Rc::new(m);
        self.acts.borrow_mut().insert(w.clone(), m.clone());
        Ok(m)
    }
}

/// `K_{α,μ} = |SST_α(μ)|`.
pub fn kostka(mu: &Partition, alpha: &Composition) -> usize {
    enumerate_sst(mu, alpha).len()
}

/// `dim L(μ)_α`.
pub fn p_kostka(mu: &Partition, alpha: &Composition, p: u64) -> Result<usize> {
    SimpleModule::new(PrimeField::new(p)?, mu).weight_dim(alpha)
}

/// `dim L(μ)_α` for every `α` with `K_{α,μ} > 0`, zeros included.
pub fn simple_weight_dims(mu: &Partition, p: u64) -> Result<BTreeMap<Composition, usize>> {
    let l = SimpleModule::new(PrimeField::new(p)?, mu);
    let mut out = BTreeMap::new();
    for alpha in enumerate_compositions(mu.n(), mu.r()) {
        if kostka(mu, &alpha) > 0 {
            out.insert(alpha.clone(), l.weight_dim(&alpha)?);
        }
    }
    Ok(out)
}
