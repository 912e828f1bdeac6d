//! Shared context for a flag manifold `G/B`: the Weyl group, the quantum
//! Bruhat graph with its path data, and per-node caches.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::qbg::{OrderVariant, QuantumPaths, ReflectionOrder};
use crate::qls::{bqls_entries, enumerate_qls, BqlsEntry, QlsPath, ShapeContext};
use crate::rootsys::{CorootVec, ParabolicSubset, RootSystem};
use crate::weyl::{ElemId, WeylGroup};

type OrderKey = (ParabolicSubset, OrderVariant);
type EntryCache = Vec<OnceLock<Arc<Vec<BqlsEntry>>>>;

pub struct Flag {
    group: WeylGroup,
    paths: QuantumPaths,
    orders: Mutex<HashMap<OrderKey, Arc<ReflectionOrder>>>,
    shapes: Vec<OnceLock<Arc<ShapeContext>>>,
    qls: Vec<OnceLock<Arc<Vec<QlsPath>>>>,
    bqls: Vec<EntryCache>,
}

impl Flag {
    pub fn new(group: WeylGroup) -> Result<Self> {
        let paths = QuantumPaths::new(&group)?;
        let rank = group.rank();
        let order = group.order();
        Ok(Flag {
            paths,
            orders: Mutex::new(HashMap::new()),
            shapes: (0..rank).map(|_| OnceLock::new()).collect(),
            qls: (0..rank).map(|_| OnceLock::new()).collect(),
            bqls: (0..rank).map(|_| (0..order).map(|_| OnceLock::new()).collect()).collect(),
            group,
        })
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(WeylGroup::parse_type(s)?)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn root_system(&self) -> &RootSystem {
        self.group.root_system()
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn paths(&self) -> &QuantumPaths {
        &self.paths
    }

    pub fn validate_node(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("node {} out of range 1..={}", i + 1, self.rank())))
        }
    }

    /// Parses a 1-based comma-separated reduced or unreduced word.
    pub fn parse_elem(&self, s: &str) -> Result<ElemId> {
        self.group.parse(s)
    }

    /// A reflection order whose first segment is `Delta_split`.
    pub fn order(&self, split: ParabolicSubset, variant: OrderVariant) -> Result<Arc<ReflectionOrder>> {
        let mut orders = self.orders.lock().map_err(|_| Error::Internal("order cache poisoned".into()))?;
        if let Some(o) = orders.get(&(split, variant)) {
            return Ok(o.clone());
        }
        let o = Arc::new(ReflectionOrder::new(self.root_system(), split, variant)?);
        orders.insert((split, variant), o.clone());
        Ok(o)
    }

    /// Shape data for `varpi_i`, with the default order variant.
    pub fn shape(&self, i: usize) -> Result<Arc<ShapeContext>> {
        self.validate_node(i)?;
        if let Some(s) = self.shapes[i].get() {
            return Ok(s.clone());
        }
        let s = Arc::new(self.shape_with(i, OrderVariant::SmallestFirst)?);
        Ok(self.shapes[i].get_or_init(|| s).clone())
    }

    /// Uncached shape data for `varpi_i` with a chosen order variant.
    pub fn shape_with(&self, i: usize, variant: OrderVariant) -> Result<ShapeContext> {
        self.validate_node(i)?;
        let j = ParabolicSubset::full(self.rank()).without(i);
        ShapeContext::new(&self.group, i, self.order(j, variant)?)
    }

    /// `QLS(varpi_i)`.
    pub fn qls(&self, i: usize) -> Result<Arc<Vec<QlsPath>>> {
        self.validate_node(i)?;
        if let Some(q) = self.qls[i].get() {
            return Ok(q.clone());
        }
        let ctx = self.shape(i)?;
        let q = Arc::new(enumerate_qls(&ctx, self.root_system())?);
        Ok(self.qls[i].get_or_init(|| q).clone())
    }

    /// `bQLS(w)` for the shape `varpi_i`, with statistics.
    pub fn bqls(&self, i: usize, w: ElemId) -> Result<Arc<Vec<BqlsEntry>>> {
        self.validate_node(i)?;
        self.group.check(w)?;
        if let Some(b) = self.bqls[i][w.idx()].get() {
            return Ok(b.clone());
        }
        let ctx = self.shape(i)?;
        let b = Arc::new(bqls_entries(self, &ctx, w)?);
        Ok(self.bqls[i][w.idx()].get_or_init(|| b).clone())
    }

    /// `qwt(v => w)`.
    pub fn qwt(&self, v: ElemId, w: ElemId) -> CorootVec {
        self.paths.qwt_between(self.root_system(), v, w)
    }

    /// `tbmax(u, Lambda, v)` using an order split at `Lambda`.
    pub fn tbmax(&self, u: ElemId, lambda: ParabolicSubset, v: ElemId) -> Result<ElemId> {
        let ord = self.order(lambda, OrderVariant::SmallestFirst)?;
        self.paths.tbmax(&self.group, u, lambda, v, &ord)
    }
}
