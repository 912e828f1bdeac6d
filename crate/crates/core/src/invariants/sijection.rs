//! Sign-reversing involutions on quantum Bruhat path tuples that cancel the
//! sums over `pbQLS^+` and `pbQLS^0 \ pbR`.
//!
//! `Theta` toggles a final `alpha_i`-edge of `p_1`. `Theta'` and `Psi`
//! compare `beta`, the final label of `p_1`, with `gamma`, the initial label
//! of the label-decreasing path `ed(p) => x`: if `beta` is larger the final
//! edge is removed, otherwise the `gamma`-edge is appended.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::flag::Flag;
use crate::invariants::{check_input, in_set, PathSet};
use crate::qls::{is_bqls, BPathTuple, BqlsEntry, ShapeContext};
use crate::rootsys::{CorootVec, ParabolicSubset};
use crate::weyl::ElemId;

/// The data `(i, w, x, d, K)` fixing the signed sets.
pub struct Setup<'a> {
    pub flag: &'a Flag,
    pub i: usize,
    pub w: ElemId,
    pub x: ElemId,
    pub d: CorootVec,
    pub k: ParabolicSubset,
    ctx: std::sync::Arc<ShapeContext>,
}

/// Named pieces of `pbQLS(w, x, d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// `pbQLS^+` with final label `alpha_i`.
    A,
    /// `pbQLS^+` with other final label, `Theta(p)` in `pbQLS^+`.
    B1,
    /// `pbQLS^+` with other final label, `Theta(p)` not in `pbQLS^+`.
    B2,
    /// `pbQLS^0 \ pbR`.
    S,
    /// None of the above.
    Outside,
}

impl<'a> Setup<'a> {
    pub fn new(flag: &'a Flag, i: usize, w: ElemId, x: ElemId, d: CorootVec, k: ParabolicSubset) -> Result<Self> {
        check_input(flag, i, w, x, &d, k)?;
        let ctx = flag.shape(i)?;
        Ok(Setup { flag, i, w, x, d, k, ctx })
    }

    pub fn entry(&self, p: &BPathTuple) -> Result<BqlsEntry> {
        BqlsEntry::new(self.flag, &self.ctx, p.clone())
    }

    fn is(&self, e: &BqlsEntry, which: PathSet) -> bool {
        in_set(self.flag, self.i, e, self.x, &self.d, self.k, which)
    }

    fn final_is_alpha_i(&self, p: &BPathTuple) -> bool {
        p.p1().last_label() == Some(self.i)
    }

    pub fn domain(&self, p: &BPathTuple) -> Result<Domain> {
        let e = self.entry(p)?;
        if self.is(&e, PathSet::Plus) {
            if self.final_is_alpha_i(p) {
                return Ok(Domain::A);
            }
            let t = self.entry(&self.theta(p)?)?;
            return Ok(if self.is(&t, PathSet::Plus) { Domain::B1 } else { Domain::B2 });
        }
        if self.is(&e, PathSet::ZeroOutsideReduced) {
            return Ok(Domain::S);
        }
        Ok(Domain::Outside)
    }

    /// Toggle the final `alpha_i`-edge of `p_1`.
    pub fn theta(&self, p: &BPathTuple) -> Result<BPathTuple> {
        let mut q = p.clone();
        if self.final_is_alpha_i(p) {
            q.p1_mut().pop();
        } else {
            let edge = *self
                .flag
                .paths()
                .graph()
                .edge(p.end(), self.i)
                .ok_or_else(|| Error::Internal("missing simple reflection edge".into()))?;
            q.p1_mut().push(&edge);
        }
        Ok(q)
    }

    /// `(beta, gamma)`, with `None` standing for `-infinity`.
    pub fn beta_gamma(&self, p: &BPathTuple) -> Result<(Option<usize>, Option<usize>)> {
        let beta = p.p1().last_label();
        let z = p.end();
        let gamma = if z == self.x {
            None
        } else {
            let dec = self.flag.paths().label_decreasing_path(z, self.x, self.ctx.order())?;
            dec.first_label()
        };
        Ok((beta, gamma))
    }

    fn compare(&self, a: Option<usize>, b: Option<usize>) -> Ordering {
        let ord = self.ctx.order();
        match (a, b) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => ord.position(a).cmp(&ord.position(b)),
        }
    }

    fn toggle(&self, p: &BPathTuple) -> Result<BPathTuple> {
        let (beta, gamma) = self.beta_gamma(p)?;
        let mut q = p.clone();
        match self.compare(beta, gamma) {
            Ordering::Greater => q.p1_mut().pop(),
            Ordering::Less => {
                let g = gamma.expect("gamma exceeds beta");
                let edge = *self
                    .flag
                    .paths()
                    .graph()
                    .edge(p.end(), g)
                    .ok_or_else(|| Error::Internal("missing initial edge of the decreasing path".into()))?;
                q.p1_mut().push(&edge);
            }
            Ordering::Equal => {
                return Err(Error::Internal("beta and gamma coincide".into()));
            }
        }
        Ok(q)
    }

    fn require(&self, p: &BPathTuple, want: &[Domain], name: &str) -> Result<()> {
        let got = self.domain(p)?;
        if want.contains(&got) {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{name} is defined on {want:?}, but the tuple lies in {got:?}")))
        }
    }

    /// `Theta` restricted to `A` and `B_1`.
    pub fn sijection_theta(&self, p: &BPathTuple) -> Result<BPathTuple> {
        self.require(p, &[Domain::A, Domain::B1], "Theta")?;
        self.theta(p)
    }

    /// `Theta'` on `B_2`.
    pub fn sijection_theta_prime(&self, p: &BPathTuple) -> Result<BPathTuple> {
        self.require(p, &[Domain::B2], "Theta'")?;
        self.toggle(p)
    }

    /// `Psi` on `pbQLS^0 \ pbR`.
    pub fn sijection_psi(&self, p: &BPathTuple) -> Result<BPathTuple> {
        self.require(p, &[Domain::S], "Psi")?;
        self.toggle(p)
    }

    /// Checks every sijection on its domain; returns one line per failure.
    pub fn verify(&self) -> Result<Vec<String>> {
        let g = self.flag.group();
        let mut failures = Vec::new();
        let tuples: Vec<BPathTuple> = self.flag.bqls(self.i, self.w)?.iter().map(|e| e.tuple.clone()).collect();
        for p in &tuples {
            let dom = self.domain(p)?;
            let (name, image, allowed): (&str, BPathTuple, &[Domain]) = match dom {
                Domain::A => ("Theta", self.theta(p)?, &[Domain::B1]),
                Domain::B1 => ("Theta", self.theta(p)?, &[Domain::A]),
                Domain::B2 => ("Theta'", self.toggle(p)?, &[Domain::B2]),
                Domain::S => ("Psi", self.toggle(p)?, &[Domain::S]),
                Domain::Outside => continue,
            };
            let mut complain = |m: &str| failures.push(format!("{name} on {}: {m}", p.describe(g)));
            if !is_bqls(self.flag, &self.ctx, self.w, &image) {
                complain("image is not a quantum Bruhat path tuple");
                continue;
            }
            let image_dom = self.domain(&image)?;
            if !allowed.contains(&image_dom) {
                complain(&format!("image lies in {image_dom:?}"));
            }
            if image.length().abs_diff(p.length()) != 1 {
                complain("length does not change by one");
            }
            if image.eta(g, &self.ctx)? != p.eta(g, &self.ctx)? {
                complain("eta is not preserved");
            }
            let back = match dom {
                Domain::A | Domain::B1 => self.theta(&image)?,
                _ => self.toggle(&image)?,
            };
            if &back != p {
                complain("not an involution");
            }
        }
        Ok(failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{path_set, signed_sum};

    fn sweep(t: &str, k_nodes: Option<&[usize]>, cap: i64) {
        let flag = Flag::parse(t).unwrap();
        let g = flag.group();
        let rank = flag.rank();
        let k = match k_nodes {
            Some(n) => ParabolicSubset::from_nodes(rank, n).unwrap(),
            None => ParabolicSubset::full(rank),
        };
        let knodes = k.nodes();
        let mut degrees = vec![CorootVec::zero(rank)];
        for &j in &knodes {
            degrees = degrees
                .into_iter()
                .flat_map(|d| {
                    (0..=cap).map(move |c| {
                        let mut e = d.clone();
                        e[j] = c;
                        e
                    })
                })
                .collect();
        }
        for &i in &knodes {
            for w in g.min_reps(k.complement()) {
                for x in g.max_reps(k.complement()) {
                    for d in &degrees {
                        let s = Setup::new(&flag, i, w, x, d.clone(), k).unwrap();
                        let f = s.verify().unwrap();
                        assert!(f.is_empty(), "{t} i={} d={d}: {f:?}", i + 1);
                        let plus = path_set(&flag, i, w, x, d, k, PathSet::Plus).unwrap();
                        assert!(signed_sum(&plus).is_zero());
                        let rest = path_set(&flag, i, w, x, d, k, PathSet::ZeroOutsideReduced).unwrap();
                        assert!(signed_sum(&rest).is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn sijections_a2() {
        sweep("A2", None, 2);
        sweep("A2", Some(&[0]), 2);
    }

    #[test]
    fn sijections_g2() {
        sweep("G2", None, 2);
    }

    #[test]
    fn theta_prime_rejects_outside_b2() {
        let flag = Flag::parse("A2").unwrap();
        let g = flag.group();
        let s = Setup::new(&flag, 0, g.identity(), g.longest(), CorootVec::zero(2), ParabolicSubset::full(2)).unwrap();
        let trivial = flag.bqls(0, g.identity()).unwrap();
        let outside = trivial.iter().find(|e| s.domain(&e.tuple).unwrap() != Domain::B2).unwrap();
        assert!(s.sijection_theta_prime(&outside.tuple).is_err());
    }
}
