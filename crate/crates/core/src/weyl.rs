//! Weyl group elements, the enumerated group with multiplication tables,
//! parabolic cosets and Bruhat order.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rootsys::{LieType, ParabolicSubset, RootSystem, RootVec, Weight};

/// Default cap on `|W|`; override with the `QKFLAG_MAX_GROUP` environment variable.
pub const DEFAULT_MAX_GROUP: u64 = 1_000_000;

/// Groups at most this large get a precomputed Bruhat order table.
pub const BRUHAT_TABLE_LIMIT: usize = 1 << 13;

type Action = SmallVec<[i8; 64]>;

/// A Weyl group element, stored as its action on the simple roots.
/// Column `j` holds `w(alpha_j)` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElem {
    lie_type: LieType,
    action: Action,
    length: u32,
}

fn count_inversions(rs: &RootSystem, action: &Action) -> u32 {
    let n = rs.rank();
    rs.positive_roots()
        .iter()
        .filter(|b| {
            // the image of a root is either positive or negative, so one coordinate decides
            let mut first_nonzero = 0i64;
            for k in 0..n {
                let c: i64 = (0..n).map(|j| b[j] * action[j * n + k] as i64).sum();
                if c != 0 {
                    first_nonzero = c;
                    break;
                }
            }
            first_nonzero < 0
        })
        .count() as u32
}

impl WeylElem {
    fn from_action(rs: &RootSystem, action: Action) -> Self {
        let length = count_inversions(rs, &action);
        WeylElem { lie_type: rs.lie_type(), action, length }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mut action: Action = smallvec::smallvec![0; n * n];
        for j in 0..n {
            action[j * n + j] = 1;
        }
        WeylElem { lie_type: rs.lie_type(), action, length: 0 }
    }

    pub fn simple_reflection(rs: &RootSystem, j: usize) -> Result<Self> {
        if j >= rs.rank() {
            return Err(Error::Precondition(format!("node {} out of range", j + 1)));
        }
        Self::reflection(rs, &rs.simple_root(j))
    }

    /// `s_beta` for a positive (or negative) root `beta`.
    pub fn reflection(rs: &RootSystem, beta: &RootVec) -> Result<Self> {
        let n = rs.rank();
        let cb = rs.coroot(beta)?;
        let mut action: Action = smallvec::smallvec![0; n * n];
        for j in 0..n {
            let p = (0..n).map(|k| rs.cartan_entry(j, k) * cb[k]).sum::<i64>();
            for k in 0..n {
                let delta = if j == k { 1 } else { 0 };
                action[j * n + k] = (delta - p * beta[k]) as i8;
            }
        }
        Ok(Self::from_action(rs, action))
    }

    /// The product `s_{j1} s_{j2} ... s_{jr}` of a word of 0-based nodes.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &j in word {
            if j >= rs.rank() {
                return Err(Error::InvalidWord {
                    word: format_word(word),
                    reason: format!("node {} out of range 1..={}", j + 1, rs.rank()),
                });
            }
            w = w.times_simple(rs, j);
        }
        Ok(w)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Image of the simple root `alpha_j`.
    pub fn column(&self, j: usize) -> RootVec {
        let n = self.rank();
        RootVec((0..n).map(|k| self.action[j * n + k] as i64).collect())
    }

    fn column_negative(&self, j: usize) -> bool {
        let n = self.rank();
        self.action[j * n..(j + 1) * n].iter().any(|&c| c < 0)
    }

    /// `w s_j`, computed by column operations.
    pub fn times_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let n = self.rank();
        let mut action = self.action.clone();
        for k in 0..n {
            let c = rs.cartan_entry(k, j);
            if c != 0 {
                for m in 0..n {
                    action[k * n + m] = (action[k * n + m] as i64 - c * self.action[j * n + m] as i64) as i8;
                }
            }
        }
        let length = if self.column_negative(j) { self.length - 1 } else { self.length + 1 };
        WeylElem { lie_type: self.lie_type, action, length }
    }

    /// Composition `self * other`.
    pub fn multiply(&self, other: &WeylElem, rs: &RootSystem) -> Result<WeylElem> {
        if self.lie_type != other.lie_type || self.lie_type != rs.lie_type() {
            return Err(Error::Mismatch);
        }
        let n = self.rank();
        let mut action: Action = smallvec::smallvec![0; n * n];
        for j in 0..n {
            for k in 0..n {
                let v = other.action[j * n + k] as i64;
                if v != 0 {
                    for m in 0..n {
                        action[j * n + m] =
                            (action[j * n + m] as i64 + v * self.action[k * n + m] as i64) as i8;
                    }
                }
            }
        }
        Ok(Self::from_action(rs, action))
    }

    pub fn apply_root(&self, beta: &RootVec) -> Result<RootVec> {
        let n = self.rank();
        if beta.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: beta.len() });
        }
        Ok(RootVec(
            (0..n)
                .map(|k| (0..n).map(|j| beta[j] * self.action[j * n + k] as i64).sum())
                .collect(),
        ))
    }

    pub fn apply_weight(&self, rs: &RootSystem, lambda: &Weight) -> Result<Weight> {
        let n = self.rank();
        if lambda.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: lambda.len() });
        }
        let mut out = lambda.clone();
        for &j in self.reduced_word(rs).iter().rev() {
            simple_reflect_weight(rs, j, &mut out);
        }
        Ok(out)
    }

    pub fn inverse(&self, rs: &RootSystem) -> Result<WeylElem> {
        let mut word = self.reduced_word(rs);
        word.reverse();
        WeylElem::from_word(rs, &word).map_err(|_| Error::Mismatch)
    }

    /// Nodes `j` with `w(alpha_j) < 0`.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.column_negative(j)).collect()
    }

    fn strip_descents(&self, rs: &RootSystem, pick_largest: bool) -> Vec<usize> {
        let n = self.rank();
        let mut word = Vec::with_capacity(self.length as usize);
        let mut cur = self.clone();
        while cur.length > 0 {
            let mut descents = (0..n).filter(|&j| cur.column_negative(j));
            let j = if pick_largest { descents.next_back() } else { descents.next() }
                .expect("nontrivial element has a descent");
            cur = cur.times_simple(rs, j);
            word.push(j);
        }
        word.reverse();
        word
    }

    /// Reduced word obtained by repeatedly stripping the smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        self.strip_descents(rs, false)
    }

    /// Reduced word obtained by repeatedly stripping the largest right descent.
    pub fn reduced_word_largest(&self, rs: &RootSystem) -> Vec<usize> {
        self.strip_descents(rs, true)
    }
}

fn simple_reflect_weight(rs: &RootSystem, j: usize, lambda: &mut Weight) {
    let c = lambda[j];
    if c != 0 {
        for k in 0..rs.rank() {
            lambda[k] -= c * rs.cartan_entry(j, k);
        }
    }
}

/// Parse a 1-based word such as `"2,1,2"`; `"e"` or `""` is the identity.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for part in t.split(',') {
        let j: usize = part.trim().parse().map_err(|_| Error::InvalidWord {
            word: s.to_string(),
            reason: format!("{part:?} is not a node index"),
        })?;
        if j == 0 || j > rank {
            return Err(Error::InvalidWord {
                word: s.to_string(),
                reason: format!("node {j} out of range 1..={rank}"),
            });
        }
        out.push(j - 1);
    }
    Ok(out)
}

/// Inverse of [`parse_word`].
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|j| (j + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Index of an element inside an enumerated [`WeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElemId(pub u32);

impl ElemId {
    pub fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Reads the group-size bound from `QKFLAG_MAX_GROUP`.
pub fn max_group_order() -> u64 {
    std::env::var("QKFLAG_MAX_GROUP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_GROUP)
}

/// The full Weyl group, enumerated breadth first from the identity.
/// Elements are addressed by [`ElemId`]; the identity is `ElemId(0)` and
/// ids are sorted by length.
pub struct WeylGroup {
    rs: RootSystem,
    elems: Vec<WeylElem>,
    index: HashMap<SmallVec<[i32; 8]>, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inv: Vec<u32>,
    parent: Vec<u32>,
    parent_gen: Vec<u8>,
    reflections: Vec<u32>,
    longest: u32,
    rho2: RootVec,
    bruhat: OnceLock<Option<Vec<Vec<u64>>>>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylGroup({}, order {})", self.rs.lie_type(), self.elems.len())
    }
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Result<Self> {
        Self::with_bound(rs, max_group_order())
    }

    pub fn with_bound(rs: RootSystem, bound: u64) -> Result<Self> {
        let size = rs.lie_type().weyl_order();
        if size > bound as u128 {
            return Err(Error::GroupTooLarge { size, bound });
        }
        let n = rs.rank();
        let mut rho2 = RootVec::zero(n);
        for b in rs.positive_roots() {
            rho2 += b;
        }
        let mut g = WeylGroup {
            rs,
            elems: Vec::with_capacity(size as usize),
            index: HashMap::with_capacity(size as usize),
            right: Vec::with_capacity(size as usize * n),
            left: Vec::new(),
            inv: Vec::new(),
            parent: Vec::new(),
            parent_gen: Vec::new(),
            reflections: Vec::new(),
            longest: 0,
            rho2,
            bruhat: OnceLock::new(),
        };
        let e = WeylElem::identity(&g.rs);
        let key = g.key_of(&e);
        g.index.insert(key, 0);
        g.elems.push(e);
        let mut cur = 0usize;
        while cur < g.elems.len() {
            for j in 0..n {
                let next = g.elems[cur].times_simple(&g.rs, j);
                let key = g.key_of(&next);
                let id = match g.index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = g.elems.len() as u32;
                        g.index.insert(key, id);
                        g.elems.push(next);
                        id
                    }
                };
                g.right.push(id);
            }
            cur += 1;
        }
        if g.elems.len() as u128 != size {
            return Err(Error::Internal(format!(
                "enumerated {} elements, expected {size}",
                g.elems.len()
            )));
        }
        let total = g.elems.len();
        g.parent = vec![0; total];
        g.parent_gen = vec![0; total];
        for w in 1..total {
            let j = (0..n).find(|&j| g.elems[w].column_negative(j)).expect("descent exists");
            g.parent[w] = g.right[w * n + j];
            g.parent_gen[w] = j as u8;
        }
        g.inv = vec![0; total];
        for w in 0..total {
            let mut x = 0u32;
            for &j in g.word(ElemId(w as u32)).iter().rev() {
                x = g.right[x as usize * n + j];
            }
            g.inv[w] = x;
        }
        g.left = vec![0; total * n];
        for w in 0..total {
            for j in 0..n {
                let wi = g.inv[w] as usize;
                g.left[w * n + j] = g.inv[g.right[wi * n + j] as usize];
            }
        }
        g.longest = (0..total).max_by_key(|&w| g.elems[w].length).unwrap_or(0) as u32;
        let mut reflections = Vec::with_capacity(g.rs.num_positive_roots());
        for b in g.rs.positive_roots() {
            let r = WeylElem::reflection(&g.rs, b)?;
            reflections.push(g.id_of(&r)?.0);
        }
        g.reflections = reflections;
        Ok(g)
    }

    pub fn parse_type(s: &str) -> Result<Self> {
        Self::new(RootSystem::parse(s)?)
    }

    fn key_of(&self, w: &WeylElem) -> SmallVec<[i32; 8]> {
        // w(2 rho) determines w since rho is regular
        let n = self.rs.rank();
        (0..n)
            .map(|k| (0..n).map(|j| self.rho2[j] as i32 * w.action[j * n + k] as i32).sum())
            .collect()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + '_ {
        (0..self.elems.len() as u32).map(ElemId)
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn longest(&self) -> ElemId {
        ElemId(self.longest)
    }

    pub fn elem(&self, w: ElemId) -> &WeylElem {
        &self.elems[w.idx()]
    }

    pub fn id_of(&self, w: &WeylElem) -> Result<ElemId> {
        if w.lie_type != self.rs.lie_type() {
            return Err(Error::Mismatch);
        }
        self.index
            .get(&self.key_of(w))
            .map(|&i| ElemId(i))
            .ok_or_else(|| Error::Internal("element not found in group".into()))
    }

    pub fn contains(&self, w: ElemId) -> bool {
        w.idx() < self.elems.len()
    }

    pub fn check(&self, w: ElemId) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{w} is not an element of this group")))
        }
    }

    pub fn length(&self, w: ElemId) -> u32 {
        self.elems[w.idx()].length
    }

    /// `w s_j`.
    pub fn right_mul(&self, w: ElemId, j: usize) -> ElemId {
        ElemId(self.right[w.idx() * self.rank() + j])
    }

    /// `s_j w`.
    pub fn left_mul(&self, w: ElemId, j: usize) -> ElemId {
        ElemId(self.left[w.idx() * self.rank() + j])
    }

    pub fn mul(&self, u: ElemId, v: ElemId) -> ElemId {
        let mut x = u;
        for j in self.word(v) {
            x = self.right_mul(x, j);
        }
        x
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        ElemId(self.inv[w.idx()])
    }

    /// `s_beta` for the positive root with the given index.
    pub fn reflection(&self, root_idx: usize) -> ElemId {
        ElemId(self.reflections[root_idx])
    }

    /// `x s_beta`.
    pub fn mul_reflection(&self, x: ElemId, root_idx: usize) -> ElemId {
        self.mul(x, self.reflection(root_idx))
    }

    /// Reduced word (0-based nodes), stripping the smallest right descent first.
    pub fn word(&self, w: ElemId) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w) as usize);
        let mut x = w.idx();
        while x != 0 {
            out.push(self.parent_gen[x] as usize);
            x = self.parent[x] as usize;
        }
        out.reverse();
        out
    }

    pub fn word_string(&self, w: ElemId) -> String {
        format_word(&self.word(w))
    }

    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut x = self.identity();
        for &j in word {
            if j >= self.rank() {
                return Err(Error::InvalidWord {
                    word: format_word(word),
                    reason: format!("node {} out of range 1..={}", j + 1, self.rank()),
                });
            }
            x = self.right_mul(x, j);
        }
        Ok(x)
    }

    /// Parse a 1-based word such as `"2,1,2"`.
    pub fn parse(&self, s: &str) -> Result<ElemId> {
        self.from_word(&parse_word(s, self.rank())?)
    }

    pub fn apply_root(&self, w: ElemId, beta: &RootVec) -> Result<RootVec> {
        self.elem(w).apply_root(beta)
    }

    pub fn apply_weight(&self, w: ElemId, lambda: &Weight) -> Result<Weight> {
        if lambda.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: lambda.len() });
        }
        let mut out = lambda.clone();
        for j in self.word(w).into_iter().rev() {
            simple_reflect_weight(&self.rs, j, &mut out);
        }
        Ok(out)
    }

    /// `w(lambda)` for every element, indexed by id.
    pub fn weight_orbit(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        if lambda.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: lambda.len() });
        }
        let mut out = vec![Weight::default(); self.order()];
        out[0] = lambda.clone();
        for w in 1..self.order() {
            let id = ElemId(w as u32);
            let j = (0..self.rank())
                .find(|&j| self.length(self.left_mul(id, j)) < self.length(id))
                .expect("left descent exists");
            let mut v = out[self.left_mul(id, j).idx()].clone();
            simple_reflect_weight(&self.rs, j, &mut v);
            out[w] = v;
        }
        Ok(out)
    }

    pub fn has_right_descent(&self, w: ElemId, j: usize) -> bool {
        self.length(self.right_mul(w, j)) < self.length(w)
    }

    pub fn right_descents(&self, w: ElemId) -> Vec<usize> {
        (0..self.rank()).filter(|&j| self.has_right_descent(w, j)).collect()
    }

    /// Minimal representative of `w W_lambda`.
    pub fn min_rep(&self, w: ElemId, lambda: ParabolicSubset) -> ElemId {
        let mut x = w;
        'outer: loop {
            for j in lambda.nodes() {
                if self.has_right_descent(x, j) {
                    x = self.right_mul(x, j);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// Maximal representative of `w W_lambda`.
    pub fn max_rep(&self, w: ElemId, lambda: ParabolicSubset) -> ElemId {
        let mut x = w;
        'outer: loop {
            for j in lambda.nodes() {
                if !self.has_right_descent(x, j) {
                    x = self.right_mul(x, j);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    pub fn is_min_rep(&self, w: ElemId, lambda: ParabolicSubset) -> bool {
        lambda.nodes().iter().all(|&j| !self.has_right_descent(w, j))
    }

    pub fn is_max_rep(&self, w: ElemId, lambda: ParabolicSubset) -> bool {
        lambda.nodes().iter().all(|&j| self.has_right_descent(w, j))
    }

    /// Minimal coset representatives `W^lambda`, sorted by id.
    pub fn min_reps(&self, lambda: ParabolicSubset) -> Vec<ElemId> {
        self.elements().filter(|&w| self.is_min_rep(w, lambda)).collect()
    }

    pub fn max_reps(&self, lambda: ParabolicSubset) -> Vec<ElemId> {
        self.elements().filter(|&w| self.is_max_rep(w, lambda)).collect()
    }

    /// Elements of the parabolic subgroup `W_lambda`.
    pub fn parabolic_subgroup(&self, lambda: ParabolicSubset) -> Vec<ElemId> {
        let mut seen = vec![false; self.order()];
        let mut out = vec![self.identity()];
        seen[0] = true;
        let mut k = 0;
        while k < out.len() {
            let w = out[k];
            for j in lambda.nodes() {
                let x = self.right_mul(w, j);
                if !seen[x.idx()] {
                    seen[x.idx()] = true;
                    out.push(x);
                }
            }
            k += 1;
        }
        out
    }

    /// `w_{0,lambda}`, the longest element of `W_lambda`.
    pub fn longest_of(&self, lambda: ParabolicSubset) -> ElemId {
        self.max_rep(self.identity(), lambda)
    }

    /// The coset `w W_lambda`.
    pub fn coset(&self, w: ElemId, lambda: ParabolicSubset) -> Vec<ElemId> {
        let m = self.min_rep(w, lambda);
        self.parabolic_subgroup(lambda).into_iter().map(|z| self.mul(m, z)).collect()
    }

    fn bruhat_table(&self) -> Option<&Vec<Vec<u64>>> {
        self.bruhat
            .get_or_init(|| {
                if self.order() > BRUHAT_TABLE_LIMIT {
                    return None;
                }
                let n = self.order();
                let words = n.div_ceil(64);
                let mut rows: Vec<Vec<u64>> = vec![vec![0; words]; n];
                rows[0][0] = 1;
                // ids are sorted by length, so parents come first
                for w in 1..n {
                    let j = self.parent_gen[w] as usize;
                    let p = self.parent[w] as usize;
                    let mut row = vec![0u64; words];
                    for u in 0..n {
                        let us = self.right[u * self.rank() + j] as usize;
                        let m = if self.elems[us].length < self.elems[u].length { us } else { u };
                        if rows[p][m / 64] >> (m % 64) & 1 == 1 {
                            row[u / 64] |= 1 << (u % 64);
                        }
                    }
                    rows[w] = row;
                }
                Some(rows)
            })
            .as_ref()
    }

    /// Bruhat order `u <= w`.
    pub fn bruhat_leq(&self, u: ElemId, w: ElemId) -> bool {
        match self.bruhat_table() {
            Some(rows) => rows[w.idx()][u.idx() / 64] >> (u.idx() % 64) & 1 == 1,
            None => self.bruhat_leq_subword(u, w),
        }
    }

    /// Bruhat order by the subword property, without the table.
    pub fn bruhat_leq_subword(&self, u: ElemId, w: ElemId) -> bool {
        if self.length(u) > self.length(w) {
            return false;
        }
        let mut reach = vec![false; self.order()];
        reach[0] = true;
        let mut members = vec![self.identity()];
        for j in self.word(w) {
            let mut added = Vec::new();
            for &x in &members {
                let y = self.right_mul(x, j);
                if !reach[y.idx()] {
                    reach[y.idx()] = true;
                    added.push(y);
                }
            }
            members.extend(added);
        }
        reach[u.idx()]
    }

    /// All `y` with `y <= x` in Bruhat order.
    pub fn bruhat_below(&self, x: ElemId) -> Vec<ElemId> {
        self.elements().filter(|&y| self.length(y) <= self.length(x) && self.bruhat_leq(y, x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &str) -> WeylGroup {
        WeylGroup::parse_type(s).unwrap()
    }

    #[test]
    fn orders_match_formula() {
        for t in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let g = group(t);
            assert_eq!(g.order() as u128, g.root_system().lie_type().weyl_order(), "{t}");
            assert_eq!(
                g.length(g.longest()) as usize,
                g.root_system().num_positive_roots(),
                "{t}"
            );
        }
    }

    #[test]
    fn word_round_trip() {
        let g = group("B3");
        for w in g.elements() {
            let word = g.word(w);
            assert_eq!(word.len() as u32, g.length(w));
            assert_eq!(g.from_word(&word).unwrap(), w);
            let s = g.word_string(w);
            assert_eq!(g.parse(&s).unwrap(), w);
        }
    }

    #[test]
    fn elem_and_group_agree() {
        let g = group("G2");
        let rs = g.root_system();
        for w in g.elements() {
            let e = WeylElem::from_word(rs, &g.word(w)).unwrap();
            assert_eq!(e.length(), g.length(w));
            assert_eq!(g.id_of(&e).unwrap(), w);
            assert_eq!(e.reduced_word(rs), g.word(w));
            let inv = e.inverse(rs).unwrap();
            assert_eq!(g.id_of(&inv).unwrap(), g.inverse(w));
        }
    }

    #[test]
    fn g2_longest_is_central() {
        let g = group("G2");
        let w0 = g.longest();
        for w in g.elements() {
            assert_eq!(g.mul(w0, w), g.mul(w, w0));
        }
        assert_eq!(g.apply_weight(w0, &Weight::from_slice(&[2, -1])).unwrap(), Weight::from_slice(&[-2, 1]));
    }

    #[test]
    fn reflections_have_expected_lengths() {
        let g = group("G2");
        let rs = g.root_system();
        for (k, b) in rs.positive_roots().iter().enumerate() {
            let r = g.reflection(k);
            assert_eq!(g.length(r) as usize, rs.reflection_length(b).unwrap());
            assert_eq!(g.mul(r, r), g.identity());
        }
    }

    #[test]
    fn cosets_and_reps() {
        let g = group("A3");
        let lam = ParabolicSubset::from_nodes(3, &[0, 2]).unwrap();
        let mins = g.min_reps(lam);
        assert_eq!(mins.len(), 24 / 4);
        for &m in &mins {
            let coset = g.coset(m, lam);
            assert_eq!(coset.len(), 4);
            let max = g.max_rep(m, lam);
            assert!(coset.contains(&max));
            for &x in &coset {
                assert_eq!(g.min_rep(x, lam), m);
                assert_eq!(g.max_rep(x, lam), max);
                assert!(g.length(x) >= g.length(m) && g.length(x) <= g.length(max));
            }
        }
    }

    #[test]
    fn bruhat_table_matches_subword() {
        for t in ["A3", "B2", "G2"] {
            let g = group(t);
            for u in g.elements() {
                for w in g.elements() {
                    assert_eq!(g.bruhat_leq(u, w), g.bruhat_leq_subword(u, w), "{t}");
                }
            }
        }
    }

    #[test]
    fn weight_orbit_matches_apply() {
        let g = group("C3");
        let lam = Weight::from_slice(&[1, 0, 2]);
        let orbit = g.weight_orbit(&lam).unwrap();
        for w in g.elements() {
            assert_eq!(orbit[w.idx()], g.apply_weight(w, &lam).unwrap());
        }
    }

    #[test]
    fn size_bound_rejects() {
        let rs = RootSystem::parse("E8").unwrap();
        assert!(matches!(WeylGroup::with_bound(rs, 1000), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn bad_words() {
        let g = group("A2");
        assert!(g.parse("1,3").is_err());
        assert!(g.parse("x").is_err());
        assert_eq!(g.parse("e").unwrap(), g.identity());
    }
}
