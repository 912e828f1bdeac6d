//! Exact coefficient rings and the Chevalley product `O^{s_i} * O^w` in
//! `QK_T(G/P)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::qbg::OrderVariant;
use crate::qls::{bqls_entries, kappa_zeta, qls_weight, BqlsEntry};
use crate::rootsys::{CorootVec, ParabolicSubset, RootSystem, Weight};
use crate::weyl::{ElemId, WeylGroup};

/// Coordinates used to display exponents.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Basis {
    /// Simple-root coordinates, rational in general.
    #[default]
    Root,
    /// Fundamental-weight coordinates.
    Weight,
}

/// Element of the group algebra `Z[P]` of the weight lattice.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAlgElem {
    terms: BTreeMap<Weight, i64>,
}

impl GroupAlgElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    /// `c e^mu`.
    pub fn monomial(mu: Weight, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(mu, c);
        out
    }

    pub fn add_term(&mut self, mu: Weight, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GroupAlgElem { terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect() }
    }

    /// `e^mu * self`.
    pub fn shifted(&self, mu: &Weight) -> Self {
        GroupAlgElem { terms: self.terms.iter().map(|(w, &c)| (w + mu, c)).collect() }
    }

    /// Image under `e^mu -> e^{w mu}`.
    pub fn act(&self, group: &WeylGroup, w: ElemId) -> Result<Self> {
        let mut out = Self::zero();
        for (mu, &c) in &self.terms {
            out.add_term(group.apply_weight(w, mu)?, c);
        }
        Ok(out)
    }

    /// Non-equivariant specialization `e^mu -> 1`.
    pub fn specialize(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn format(&self, rs: &RootSystem, basis: Basis) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut items: Vec<(Vec<Ratio<i64>>, i64)> = self
            .terms
            .iter()
            .map(|(w, &c)| {
                let coords = match basis {
                    Basis::Root => rs.weight_to_root(w).expect("rank matches"),
                    Basis::Weight => w.coords().iter().map(|&x| Ratio::from_integer(x)).collect(),
                };
                (coords, c)
            })
            .collect();
        items.sort_by(|a, b| {
            let za = a.0.iter().all(|x| *x.numer() == 0);
            let zb = b.0.iter().all(|x| *x.numer() == 0);
            zb.cmp(&za).then_with(|| a.0.cmp(&b.0))
        });
        let mut s = String::new();
        for (k, (coords, c)) in items.iter().enumerate() {
            let zero = coords.iter().all(|x| *x.numer() == 0);
            let mag = c.abs();
            if k == 0 {
                if *c < 0 {
                    s.push('-');
                }
            } else {
                s.push_str(if *c < 0 { " - " } else { " + " });
            }
            if zero {
                let _ = write!(s, "{mag}");
                continue;
            }
            if mag != 1 {
                let _ = write!(s, "{mag}*");
            }
            let parts: Vec<String> = coords.iter().map(|x| x.to_string()).collect();
            let _ = write!(s, "e^[{}]", parts.join(","));
        }
        s
    }

    /// `[{"wt": [...], "c": n}, ...]`, weights in fundamental coordinates.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(w, c)| serde_json::json!({ "wt": w, "c": c })).collect(),
        )
    }

    pub fn from_json(value: &serde_json::Value, rank: usize) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("coefficient JSON: {m}"));
        let mut out = Self::zero();
        for t in value.as_array().ok_or_else(|| bad("expected an array"))? {
            let wt = json_ints(&t["wt"]).ok_or_else(|| bad("bad \"wt\""))?;
            if wt.len() != rank {
                return Err(Error::DimensionMismatch { expected: rank, got: wt.len() });
            }
            let c = t["c"].as_i64().ok_or_else(|| bad("bad \"c\""))?;
            out.add_term(Weight::from_slice(&wt), c);
        }
        Ok(out)
    }
}

fn json_ints(v: &serde_json::Value) -> Option<Vec<i64>> {
    v.as_array()?.iter().map(|x| x.as_i64()).collect()
}

impl std::ops::AddAssign<&GroupAlgElem> for GroupAlgElem {
    fn add_assign(&mut self, o: &GroupAlgElem) {
        for (w, &c) in &o.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl std::ops::SubAssign<&GroupAlgElem> for GroupAlgElem {
    fn sub_assign(&mut self, o: &GroupAlgElem) {
        for (w, &c) in &o.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl std::ops::Add for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn add(self, o: &GroupAlgElem) -> GroupAlgElem {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl std::ops::Sub for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn sub(self, o: &GroupAlgElem) -> GroupAlgElem {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl std::ops::Neg for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn neg(self) -> GroupAlgElem {
        self.scaled(-1)
    }
}

impl std::ops::Mul for &GroupAlgElem {
    type Output = GroupAlgElem;
    fn mul(self, o: &GroupAlgElem) -> GroupAlgElem {
        let mut out = GroupAlgElem::zero();
        for (a, &c) in &self.terms {
            for (b, &d) in &o.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

/// `sum_z sum_d a_{z,d} Q^d O^z` in `QK_T(G/P)`, with `P` given by `K`.
/// Degrees are stored with full rank and vanish off `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QkClass {
    k: ParabolicSubset,
    terms: BTreeMap<ElemId, BTreeMap<CorootVec, GroupAlgElem>>,
}

impl QkClass {
    pub fn zero(k: ParabolicSubset) -> Self {
        QkClass { k, terms: BTreeMap::new() }
    }

    pub fn k(&self) -> ParabolicSubset {
        self.k
    }

    pub fn add(&mut self, z: ElemId, d: CorootVec, c: &GroupAlgElem) {
        if c.is_zero() {
            return;
        }
        let row = self.terms.entry(z).or_default();
        let e = row.entry(d.clone()).or_default();
        *e += c;
        if e.is_zero() {
            row.remove(&d);
            if row.is_empty() {
                self.terms.remove(&z);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(z, d, coefficient)` in sorted order.
    pub fn terms(&self) -> impl Iterator<Item = (ElemId, &CorootVec, &GroupAlgElem)> {
        self.terms.iter().flat_map(|(&z, row)| row.iter().map(move |(d, c)| (z, d, c)))
    }

    /// `a_z(Q)` as a map from degree to coefficient.
    pub fn row(&self, z: ElemId) -> Option<&BTreeMap<CorootVec, GroupAlgElem>> {
        self.terms.get(&z)
    }

    pub fn coeff(&self, z: ElemId, d: &CorootVec) -> GroupAlgElem {
        self.terms.get(&z).and_then(|r| r.get(d)).cloned().unwrap_or_default()
    }

    /// The `Q = 0` truncation.
    pub fn degree_zero(&self) -> QkClass {
        let mut out = QkClass::zero(self.k);
        for (z, d, c) in self.terms() {
            if d.is_zero() {
                out.add(z, d.clone(), c);
            }
        }
        out
    }

    /// Push forward to `G/P'` for `K' ⊂ K`: `O^z -> O^{floor z}`, `Q^d -> Q^{[d]}`.
    pub fn project(&self, group: &WeylGroup, k: ParabolicSubset) -> QkClass {
        let mut out = QkClass::zero(k);
        for (z, d, c) in self.terms() {
            out.add(group.min_rep(z, k.complement()), d.project(k), c);
        }
        out
    }

    /// `e^mu -> 1` on every coefficient.
    pub fn specialize(&self) -> QkClass {
        let mut out = QkClass::zero(self.k);
        for (z, d, c) in self.terms() {
            let n = c.specialize();
            if n != 0 {
                let rank = d.len();
                out.add(z, d.clone(), &GroupAlgElem::monomial(Weight::zero(rank), n));
            }
        }
        out
    }

    fn degree_over_k(&self, d: &CorootVec) -> Vec<i64> {
        self.k.nodes().iter().map(|&j| d[j]).collect()
    }

    pub fn to_json(&self, group: &WeylGroup) -> serde_json::Value {
        let nodes: Vec<usize> = self.k.nodes().iter().map(|j| j + 1).collect();
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(z, d, c)| {
                serde_json::json!({
                    "w": group.word_string(z),
                    "Q": self.degree_over_k(d),
                    "coeff": c.to_json(),
                })
            })
            .collect();
        serde_json::json!({
            "type": group.root_system().lie_type().to_string(),
            "K": nodes,
            "terms": terms,
        })
    }

    pub fn from_json(group: &WeylGroup, value: &serde_json::Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("class JSON: {m}"));
        let rank = group.rank();
        let nodes = json_ints(&value["K"]).ok_or_else(|| bad("bad \"K\""))?;
        let nodes: Vec<usize> = nodes
            .iter()
            .map(|&j| if j >= 1 { Ok(j as usize - 1) } else { Err(bad("nodes are 1-based")) })
            .collect::<Result<_>>()?;
        let k = ParabolicSubset::from_nodes(rank, &nodes)?;
        let mut out = QkClass::zero(k);
        for t in value["terms"].as_array().ok_or_else(|| bad("bad \"terms\""))? {
            let z = group.parse(t["w"].as_str().ok_or_else(|| bad("bad \"w\""))?)?;
            let q = json_ints(&t["Q"]).ok_or_else(|| bad("bad \"Q\""))?;
            if q.len() != nodes.len() {
                return Err(Error::DimensionMismatch { expected: nodes.len(), got: q.len() });
            }
            let mut d = CorootVec::zero(rank);
            for (&j, &c) in nodes.iter().zip(&q) {
                d[j] = c;
            }
            out.add(z, d, &GroupAlgElem::from_json(&t["coeff"], rank)?);
        }
        Ok(out)
    }

    /// Tab-separated `w, Q, wt, c` rows, one per monomial.
    pub fn to_tsv(&self, group: &WeylGroup) -> String {
        let mut s = String::from("w\tQ\twt\tc\n");
        for (z, d, c) in self.terms() {
            let q: Vec<String> = self.degree_over_k(d).iter().map(i64::to_string).collect();
            for (mu, n) in c.terms() {
                let _ = writeln!(s, "{}\t[{}]\t{}\t{}", group.word_string(z), q.join(","), mu, n);
            }
        }
        s
    }

    pub fn format(&self, group: &WeylGroup, basis: Basis) -> String {
        if self.is_zero() {
            return "0\n".into();
        }
        let rs = group.root_system();
        let mut s = String::new();
        for (z, d, c) in self.terms() {
            let q: Vec<String> = self.degree_over_k(d).iter().map(i64::to_string).collect();
            let _ = writeln!(s, "O^{{{}}} Q^[{}]: {}", group.word_string(z), q.join(","), c.format(rs, basis));
        }
        s
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Root => "root",
            Basis::Weight => "weight",
        })
    }
}

fn check_node_in_k(flag: &Flag, i: usize, k: ParabolicSubset) -> Result<()> {
    flag.validate_node(i)?;
    if !k.contains(i) {
        return Err(Error::Precondition(format!(
            "node {} is not in K = {k}; O^{{s_{}}} is the unit on G/P, so the product is not a divisor product",
            i + 1,
            i + 1
        )));
    }
    Ok(())
}

/// Checks that `w` is a minimal representative for `W_{I \ K}`.
pub fn check_min_rep(group: &WeylGroup, w: ElemId, k: ParabolicSubset) -> Result<()> {
    group.check(w)?;
    if !group.is_min_rep(w, k.complement()) {
        return Err(Error::Precondition(format!(
            "w = {} is not a minimal representative modulo W_{}",
            group.word_string(w),
            k.complement()
        )));
    }
    Ok(())
}

fn sum_entries(flag: &Flag, w: ElemId, k: ParabolicSubset, entries: &[BqlsEntry]) -> QkClass {
    let group = flag.group();
    let rank = flag.rank();
    let mut out = QkClass::zero(k);
    out.add(w, CorootVec::zero(rank), &GroupAlgElem::one(rank));
    for e in entries {
        let c = GroupAlgElem::monomial(e.exponent.clone(), -e.sign());
        out.add(group.min_rep(e.end, k.complement()), e.qwt.project(k), &c);
    }
    out
}

/// `O^{s_i} * O^w` in `QK_T(G/B)` from the quantum Bruhat path tuples.
pub fn chevalley(flag: &Flag, i: usize, w: ElemId) -> Result<QkClass> {
    flag.validate_node(i)?;
    flag.group().check(w)?;
    let entries = flag.bqls(i, w)?;
    Ok(sum_entries(flag, w, ParabolicSubset::full(flag.rank()), &entries))
}

/// `O^{s_i} * O^w` in `QK_T(G/P)` for `i` in `K` and `w` in `W^{I \ K}`.
pub fn chevalley_parabolic(flag: &Flag, i: usize, w: ElemId, k: ParabolicSubset) -> Result<QkClass> {
    check_node_in_k(flag, i, k)?;
    check_min_rep(flag.group(), w, k)?;
    let entries = flag.bqls(i, w)?;
    Ok(sum_entries(flag, w, k, &entries))
}

/// The same product with tuples taken relative to another reflection order.
pub fn chevalley_with_order(flag: &Flag, i: usize, w: ElemId, variant: OrderVariant) -> Result<QkClass> {
    flag.group().check(w)?;
    let ctx = flag.shape_with(i, variant)?;
    let entries = bqls_entries(flag, &ctx, w)?;
    Ok(sum_entries(flag, w, ParabolicSubset::full(flag.rank()), &entries))
}

/// `O^{s_i} * O^w` in `QK_T(G/B)` summed over pairs `(eta, v)` with
/// `kappa(eta, v) = w`, bypassing the path tuples.
pub fn chevalley_nos(flag: &Flag, i: usize, w: ElemId) -> Result<QkClass> {
    flag.validate_node(i)?;
    let group = flag.group();
    group.check(w)?;
    let rs = flag.root_system();
    let rank = flag.rank();
    let ctx = flag.shape(i)?;
    let mut out = QkClass::zero(ParabolicSubset::full(rank));
    out.add(w, CorootVec::zero(rank), &GroupAlgElem::one(rank));
    let lw = group.length(w) as i64;
    for eta in flag.qls(i)?.iter() {
        let exponent = &qls_weight(&ctx, eta)? - &rs.fundamental_weight(i);
        for v in group.elements() {
            let (kappa, zeta) = kappa_zeta(flag, &ctx, eta, v)?;
            if kappa != w {
                continue;
            }
            let sign = if (group.length(v) as i64 - lw + 1).rem_euclid(2) == 0 { 1 } else { -1 };
            out.add(v, zeta, &GroupAlgElem::monomial(exponent.clone(), sign));
        }
    }
    Ok(out)
}

/// The ordinary product `O^{s_i} . O^w` in `K_T(G/P)`.
pub fn classical_product_si(flag: &Flag, i: usize, w: ElemId, k: ParabolicSubset) -> Result<QkClass> {
    Ok(chevalley_parabolic(flag, i, w, k)?.degree_zero())
}

/// Whether the tuple sum for `O^{s_i} * O^w` on `G/B` has no internal
/// cancellation: tuples with equal `(ed, qwt, exponent)` share a sign.
pub fn is_cancellation_free(flag: &Flag, i: usize, w: ElemId) -> Result<bool> {
    let mut seen: BTreeMap<(ElemId, CorootVec, Weight), i64> = BTreeMap::new();
    for e in flag.bqls(i, w)?.iter() {
        let key = (e.end, e.qwt.clone(), e.exponent.clone());
        if let Some(&s) = seen.get(&key) {
            if s != e.sign() {
                return Ok(false);
            }
        }
        seen.insert(key, e.sign());
    }
    Ok(true)
}

/// Every tuple with nonzero quantum weight has `<varpi_i, qwt(p)> > 0`.
pub fn quantum_weight_detects_node(flag: &Flag, i: usize, w: ElemId) -> Result<bool> {
    Ok(flag.bqls(i, w)?.iter().all(|e| e.qwt.is_zero() || e.qwt[i] > 0))
}
