//! K-theoretic Gromov-Witten invariants of `G/P` from their combinatorial
//! formulas: 2-point invariants, three routes to the 3-point invariants
//! `<O^{s_i}, O^w, O_x>_d`, correction terms, the Peterson lift, dual-basis
//! invariants and the weak positivity statement.

pub mod sijection;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::qls::{kappa_zeta, qls_weight, BqlsEntry};
use crate::ring::{chevalley_parabolic, classical_product_si, GroupAlgElem};
use crate::rootsys::{CorootVec, ParabolicSubset, Weight};
use crate::weyl::ElemId;

/// Route used to evaluate a 3-point invariant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ThreePointMethod {
    /// Coefficient extraction from the Chevalley product paired with the
    /// quantum K-metric.
    Pairing,
    /// `<O^w, O_x>_d` minus the sum over `pbQLS(w, x, d)`.
    Full,
    /// `<O^w, O_x>_d` minus the sum over `pbR(w, x, d)`.
    #[default]
    Reduced,
}

impl ThreePointMethod {
    pub const ALL: [ThreePointMethod; 3] =
        [ThreePointMethod::Pairing, ThreePointMethod::Full, ThreePointMethod::Reduced];
}

impl FromStr for ThreePointMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pairing" => Ok(ThreePointMethod::Pairing),
            "full" => Ok(ThreePointMethod::Full),
            "reduced" => Ok(ThreePointMethod::Reduced),
            _ => Err(Error::Parse(format!("unknown method {s:?}; expected pairing, full or reduced"))),
        }
    }
}

impl fmt::Display for ThreePointMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreePointMethod::Pairing => "pairing",
            ThreePointMethod::Full => "full",
            ThreePointMethod::Reduced => "reduced",
        })
    }
}

/// Checks that `d` is an effective degree supported on `K`.
pub fn check_degree(flag: &Flag, d: &CorootVec, k: ParabolicSubset) -> Result<()> {
    if d.len() != flag.rank() {
        return Err(Error::DimensionMismatch { expected: flag.rank(), got: d.len() });
    }
    for j in 0..flag.rank() {
        if d[j] < 0 {
            return Err(Error::Precondition(format!("degree {d} is not effective")));
        }
        if d[j] != 0 && !k.contains(j) {
            return Err(Error::Precondition(format!("degree {d} is not supported on K = {k}")));
        }
    }
    Ok(())
}

fn check_min(flag: &Flag, z: ElemId, k: ParabolicSubset, what: &str) -> Result<()> {
    crate::ring::check_min_rep(flag.group(), z, k)
        .map_err(|_| Error::Precondition(format!("{what} = {} must be a minimal coset representative", flag.group().word_string(z))))
}

fn check_max(flag: &Flag, x: ElemId, k: ParabolicSubset) -> Result<()> {
    let g = flag.group();
    g.check(x)?;
    if !g.is_max_rep(x, k.complement()) {
        return Err(Error::Precondition(format!(
            "x = {} must be a maximal coset representative modulo W_{}",
            g.word_string(x),
            k.complement()
        )));
    }
    Ok(())
}

/// Validates `(i, w, x, d)` for the 3-point formulas on `G/P`.
pub fn check_input(flag: &Flag, i: usize, w: ElemId, x: ElemId, d: &CorootVec, k: ParabolicSubset) -> Result<()> {
    flag.validate_node(i)?;
    if k.rank() != flag.rank() {
        return Err(Error::DimensionMismatch { expected: flag.rank(), got: k.rank() });
    }
    if !k.contains(i) {
        return Err(Error::Precondition(format!(
            "node {} is not in K = {k}; there O^{{s_{}}} = 1 and the invariant is 2-point",
            i + 1,
            i + 1
        )));
    }
    check_min(flag, w, k, "w")?;
    check_max(flag, x, k)?;
    check_degree(flag, d, k)
}

fn two_point_holds(flag: &Flag, z: ElemId, x: ElemId, xi: &CorootVec, k: ParabolicSubset) -> bool {
    xi.dominates(&flag.qwt(z, x).project(k))
}

/// `<O^z, O_x>_xi`: `1` when `xi >= [qwt(z => x)]`, else `0`.
pub fn two_point(flag: &Flag, z: ElemId, x: ElemId, xi: &CorootVec, k: ParabolicSubset) -> Result<GroupAlgElem> {
    check_min(flag, z, k, "z")?;
    check_max(flag, x, k)?;
    check_degree(flag, xi, k)?;
    Ok(indicator(flag, two_point_holds(flag, z, x, xi, k)))
}

fn indicator(flag: &Flag, b: bool) -> GroupAlgElem {
    if b {
        GroupAlgElem::one(flag.rank())
    } else {
        GroupAlgElem::zero()
    }
}

fn in_pbqls(flag: &Flag, e: &BqlsEntry, x: ElemId, d: &CorootVec, k: ParabolicSubset) -> bool {
    let need = &flag.qwt(e.end, x).project(k) + &e.qwt.project(k);
    d.dominates(&need)
}

fn residual_i(e: &BqlsEntry, i: usize, d: &CorootVec) -> i64 {
    d[i] - e.qwt2[i]
}

fn in_pbr(flag: &Flag, i: usize, e: &BqlsEntry, x: ElemId, d: &CorootVec, k: ParabolicSubset) -> bool {
    let j = ParabolicSubset::full(flag.rank()).without(i);
    in_pbqls(flag, e, x, d, k)
        && residual_i(e, i, d) == 0
        && e.tuple.p1().is_empty()
        && flag.group().min_rep(e.end, j) == flag.group().min_rep(x, j)
}

/// Which part of `pbQLS(w, x, d)` to select.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathSet {
    /// `pbQLS(w, x, d)`.
    All,
    /// `<varpi_i, d - [qwt_2(p)]> > 0`.
    Plus,
    /// `<varpi_i, d - [qwt_2(p)]> = 0`.
    Zero,
    /// `pbR(w, x, d)`.
    Reduced,
    /// `pbQLS^0 \ pbR`.
    ZeroOutsideReduced,
}

/// The selected subset of `pbQLS(w, x, d)`.
pub fn path_set(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
    which: PathSet,
) -> Result<Vec<BqlsEntry>> {
    check_input(flag, i, w, x, d, k)?;
    Ok(flag
        .bqls(i, w)?
        .iter()
        .filter(|e| in_set(flag, i, e, x, d, k, which))
        .cloned()
        .collect())
}

pub(crate) fn in_set(
    flag: &Flag,
    i: usize,
    e: &BqlsEntry,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
    which: PathSet,
) -> bool {
    if !in_pbqls(flag, e, x, d, k) {
        return false;
    }
    match which {
        PathSet::All => true,
        PathSet::Plus => residual_i(e, i, d) > 0,
        PathSet::Zero => residual_i(e, i, d) == 0,
        PathSet::Reduced => in_pbr(flag, i, e, x, d, k),
        PathSet::ZeroOutsideReduced => residual_i(e, i, d) == 0 && !in_pbr(flag, i, e, x, d, k),
    }
}

/// `sum_p (-1)^{ell(p)} e^{-varpi_i + wt(eta_p)}`.
pub fn signed_sum(entries: &[BqlsEntry]) -> GroupAlgElem {
    let mut s = GroupAlgElem::zero();
    for e in entries {
        s.add_term(e.exponent.clone(), e.sign());
    }
    s
}

/// `<O^{s_i}, O^w, O_x>_d` on `G/P` by the chosen route.
pub fn three_point(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
    method: ThreePointMethod,
) -> Result<GroupAlgElem> {
    check_input(flag, i, w, x, d, k)?;
    match method {
        ThreePointMethod::Pairing => {
            let prod = chevalley_parabolic(flag, i, w, k)?;
            let mut out = GroupAlgElem::zero();
            for (z, deg, c) in prod.terms() {
                if !d.dominates(deg) {
                    continue;
                }
                if two_point_holds(flag, z, x, &(d - deg), k) {
                    out += c;
                }
            }
            Ok(out)
        }
        ThreePointMethod::Full | ThreePointMethod::Reduced => {
            let which = if method == ThreePointMethod::Full { PathSet::All } else { PathSet::Reduced };
            let mut out = indicator(flag, two_point_holds(flag, w, x, d, k));
            out -= &signed_sum(&path_set(flag, i, w, x, d, k, which)?);
            Ok(out)
        }
    }
}

/// The correction term summed over pairs `(eta, v)` of QLS paths and Weyl
/// group elements rather than over `pbR(w, x, d)`.
pub fn correction_term_qls(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
) -> Result<GroupAlgElem> {
    check_input(flag, i, w, x, d, k)?;
    let g = flag.group();
    let rs = flag.root_system();
    let ctx = flag.shape(i)?;
    let xj = g.min_rep(x, ctx.j());
    let lw = g.length(w) as i64;
    let mut out = GroupAlgElem::zero();
    for eta in flag.qls(i)?.iter() {
        if eta.initial() != xj {
            continue;
        }
        let exponent = &qls_weight(&ctx, eta)? - &rs.fundamental_weight(i);
        for v in g.coset(x, ctx.j()) {
            let (kappa, zeta) = kappa_zeta(flag, &ctx, eta, v)?;
            if kappa != w {
                continue;
            }
            let zeta = zeta.project(k);
            if d[i] - zeta[i] != 0 {
                continue;
            }
            if !d.dominates(&(&flag.qwt(v, x).project(k) + &zeta)) {
                continue;
            }
            let sign = if (g.length(v) as i64 - lw).rem_euclid(2) == 0 { 1 } else { -1 };
            out.add_term(exponent.clone(), sign);
        }
    }
    Ok(out)
}

/// Which identity the divisor-axiom check applies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisorBranch {
    /// `d_i = 0`: the invariant equals `<O^{s_i} . O^w, O_x>_d`.
    Classical,
    /// `d_i > 0` and `<varpi_i, theta^vee> = 1`: it equals `<O^w, O_x>_d`.
    Vanishing,
    /// Otherwise: the correction term `invariant - <O^w, O_x>_d`.
    Correction(GroupAlgElem),
}

#[derive(Clone, Debug)]
pub struct DivisorReport {
    pub branch: DivisorBranch,
    pub value: GroupAlgElem,
    pub expected: GroupAlgElem,
    pub holds: bool,
}

/// Evaluates the divisor-axiom identity that applies to `(i, d)`.
pub fn divisor_axiom_check(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
    method: ThreePointMethod,
) -> Result<DivisorReport> {
    let value = three_point(flag, i, w, x, d, k, method)?;
    let two = indicator(flag, two_point_holds(flag, w, x, d, k));
    let rs = flag.root_system();
    if d[i] == 0 {
        let mut expected = GroupAlgElem::zero();
        for (z, _, c) in classical_product_si(flag, i, w, k)?.terms() {
            if two_point_holds(flag, z, x, d, k) {
                expected += c;
            }
        }
        let holds = value == expected;
        Ok(DivisorReport { branch: DivisorBranch::Classical, value, expected, holds })
    } else if rs.theta_coroot()[i] == 1 {
        let holds = value == two;
        Ok(DivisorReport { branch: DivisorBranch::Vanishing, value, expected: two, holds })
    } else {
        let corr = &value - &two;
        Ok(DivisorReport { branch: DivisorBranch::Correction(corr), value, expected: two, holds: true })
    }
}

fn lift_pairing_ok(flag: &Flag, lift: &CorootVec, roots: &[usize]) -> bool {
    let rs = flag.root_system();
    roots.iter().all(|&b| matches!(rs.root_coroot_pairing(rs.root(b), lift), 0 | -1))
}

/// Largest search box tried by [`peterson_lift`].
pub const PETERSON_MAX_BOUND: i64 = 64;

/// The Peterson lift of `d`: the unique `d^` with `[d^]_K = d` and
/// `<alpha, d^> in {0, -1}` for every positive root `alpha` of `W_{I \ K}`.
pub fn peterson_lift(flag: &Flag, d: &CorootVec, k: ParabolicSubset) -> Result<CorootVec> {
    check_degree(flag, d, k)?;
    let rs = flag.root_system();
    let comp = k.complement();
    let free = comp.nodes();
    let roots: Vec<usize> = (0..rs.num_positive_roots()).filter(|&b| rs.root(b).supported_in(comp)).collect();
    if free.is_empty() {
        return Ok(d.clone());
    }
    let mut bound = 2 * d.coords().iter().sum::<i64>().max(1);
    loop {
        let mut found: Vec<CorootVec> = Vec::new();
        let mut c = vec![-bound; free.len()];
        'search: loop {
            let mut lift = d.clone();
            for (&j, &cj) in free.iter().zip(&c) {
                lift[j] = cj;
            }
            if lift_pairing_ok(flag, &lift, &roots) {
                found.push(lift);
            }
            for ct in c.iter_mut() {
                if *ct < bound {
                    *ct += 1;
                    continue 'search;
                }
                *ct = -bound;
            }
            break;
        }
        match found.len() {
            1 => return Ok(found.pop().expect("one")),
            0 if bound < PETERSON_MAX_BOUND => bound *= 2,
            0 => return Err(Error::LiftBound(bound)),
            _ => {
                return Err(Error::Internal(format!("Peterson lift of {d} is not unique within bound {bound}")));
            }
        }
    }
}

/// Both sides of the comparison `<.., O^w, O_x>^{G/P}_d = <.., O^w, O_x>^{G/B}_{d^}`.
pub fn comparison_sides(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
    method: ThreePointMethod,
) -> Result<(GroupAlgElem, GroupAlgElem)> {
    let lhs = three_point(flag, i, w, x, d, k, method)?;
    let lift = peterson_lift(flag, d, k)?;
    let rhs = three_point(flag, i, w, x, &lift, ParabolicSubset::full(flag.rank()), method)?;
    Ok((lhs, rhs))
}

/// The correction sums over `bR(w, x, d^)` on `G/B` and over `pbR(w, x, d)`.
pub fn lifted_correction_sides(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    k: ParabolicSubset,
) -> Result<(GroupAlgElem, GroupAlgElem)> {
    let lift = peterson_lift(flag, d, k)?;
    let full = ParabolicSubset::full(flag.rank());
    let b = signed_sum(&path_set(flag, i, w, x, &lift, full, PathSet::Reduced)?);
    let p = signed_sum(&path_set(flag, i, w, x, d, k, PathSet::Reduced)?);
    Ok((b, p))
}

fn mobius_sum(flag: &Flag, x: ElemId, mut f: impl FnMut(ElemId) -> Result<GroupAlgElem>) -> Result<GroupAlgElem> {
    let g = flag.group();
    let lx = g.length(x) as i64;
    let mut out = GroupAlgElem::zero();
    for y in g.bruhat_below(x) {
        let v = f(y)?;
        if (lx - g.length(y) as i64) % 2 == 0 {
            out += &v;
        } else {
            out -= &v;
        }
    }
    Ok(out)
}

fn check_full_flag(flag: &Flag, w: ElemId, x: ElemId, d: &CorootVec) -> Result<()> {
    flag.group().check(w)?;
    flag.group().check(x)?;
    check_degree(flag, d, ParabolicSubset::full(flag.rank()))
}

/// `<O^{s_i}, O^w, (O^x)^vee>_d` on `G/B`.
pub fn dual_basis_invariant(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    method: ThreePointMethod,
) -> Result<GroupAlgElem> {
    check_full_flag(flag, w, x, d)?;
    let full = ParabolicSubset::full(flag.rank());
    mobius_sum(flag, x, |y| three_point(flag, i, w, y, d, full, method))
}

/// `<O^w, (O^x)^vee>_d` on `G/B`.
pub fn dual_two_point(flag: &Flag, w: ElemId, x: ElemId, d: &CorootVec) -> Result<GroupAlgElem> {
    check_full_flag(flag, w, x, d)?;
    let full = ParabolicSubset::full(flag.rank());
    mobius_sum(flag, x, |y| Ok(indicator(flag, two_point_holds(flag, w, y, d, full))))
}

/// `e^{varpi_i - w0 varpi_i}`.
fn line_twist(flag: &Flag, i: usize) -> Result<Weight> {
    let rs = flag.root_system();
    let g = flag.group();
    let vi = rs.fundamental_weight(i);
    Ok(&vi - &g.apply_weight(g.longest(), &vi)?)
}

/// `<O_{w0 s_i}, O^w, (O^x)^vee>_d` through the line-bundle identity
/// `O_{w0 s_i} = (1 - e^{varpi_i - w0 varpi_i}) + e^{varpi_i - w0 varpi_i} O^{s_i}`.
pub fn line_bundle_value(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    method: ThreePointMethod,
) -> Result<GroupAlgElem> {
    let rank = flag.rank();
    let t = GroupAlgElem::monomial(line_twist(flag, i)?, 1);
    let two = dual_two_point(flag, w, x, d)?;
    let three = dual_basis_invariant(flag, i, w, x, d, method)?;
    Ok(&(&(&GroupAlgElem::one(rank) - &t) * &two) + &(&t * &three))
}

/// The same quantity computed from the symmetry
/// `<O_{w0 s_i}, O^w, O_y>_d = w0 . <O^{s_i}, O^{w0 y}, O_{w0 w}>_d`.
pub fn line_bundle_value_by_symmetry(
    flag: &Flag,
    i: usize,
    w: ElemId,
    x: ElemId,
    d: &CorootVec,
    method: ThreePointMethod,
) -> Result<GroupAlgElem> {
    check_full_flag(flag, w, x, d)?;
    let g = flag.group();
    let w0 = g.longest();
    let full = ParabolicSubset::full(flag.rank());
    mobius_sum(flag, x, |y| three_point(flag, i, g.mul(w0, y), g.mul(w0, w), d, full, method)?.act(g, w0))
}

/// Outcome of the weak positivity check for one `(i, u, d)`.
#[derive(Clone, Debug)]
pub struct PositivityReport {
    /// `(w, value)` for every `w` with nonzero value.
    pub values: Vec<(ElemId, i64)>,
    /// The common sign of `(-1)^{ell(w)} value`, if the values agree.
    pub epsilon: Option<i64>,
    pub holds: bool,
}

/// Non-equivariant `<O^{s_i}, O_u, (O^w)^vee>_d` on `G/B` for every `w`,
/// and whether `(-1)^{ell(w)}` times the value has constant sign.
/// Non-equivariantly `O_u = O^{w0 u}`.
pub fn positivity_check(
    flag: &Flag,
    i: usize,
    u: ElemId,
    d: &CorootVec,
    method: ThreePointMethod,
) -> Result<PositivityReport> {
    let g = flag.group();
    check_full_flag(flag, u, u, d)?;
    flag.validate_node(i)?;
    if d[i] != 0 && flag.root_system().theta_coroot()[i] != 1 {
        return Err(Error::Precondition(format!(
            "positivity needs d_{} = 0 or <varpi_{}, theta^vee> = 1",
            i + 1,
            i + 1
        )));
    }
    let full = ParabolicSubset::full(flag.rank());
    let v = g.mul(g.longest(), u);
    let base: Vec<i64> = g
        .elements()
        .map(|y| three_point(flag, i, v, y, d, full, method).map(|c| c.specialize()))
        .collect::<Result<_>>()?;
    let mut values = Vec::new();
    for w in g.elements() {
        let lw = g.length(w) as i64;
        let mut s = 0;
        for y in g.bruhat_below(w) {
            let term = base[y.idx()];
            s += if (lw - g.length(y) as i64) % 2 == 0 { term } else { -term };
        }
        if s != 0 {
            values.push((w, s));
        }
    }
    let signs: Vec<i64> = values
        .iter()
        .map(|&(w, s)| s.signum() * if g.length(w).is_multiple_of(2) { 1 } else { -1 })
        .collect();
    let epsilon = signs.first().copied().filter(|e| signs.iter().all(|s| s == e));
    let holds = values.is_empty() || epsilon.is_some();
    Ok(PositivityReport { values, epsilon, holds })
}
