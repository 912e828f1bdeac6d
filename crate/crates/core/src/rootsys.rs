//! Root systems of finite type: Cartan data, positive roots, coroots,
//! weights and pairings.
//!
//! Nodes are 0-based internally and 1-based in every text format.
//! The pairing convention is `cartan[j][k] = <alpha_j, alpha_k^vee>`.
//! Roots are stored in simple-root coordinates, coroots in simple-coroot
//! coordinates and weights in fundamental-weight coordinates.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Coords = SmallVec<[i64; 8]>;

macro_rules! lattice_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub Coords);

        impl $name {
            pub fn zero(n: usize) -> Self {
                Self(smallvec::smallvec![0; n])
            }

            pub fn unit(n: usize, j: usize) -> Self {
                let mut v = Self::zero(n);
                v.0[j] = 1;
                v
            }

            pub fn from_slice(c: &[i64]) -> Self {
                Self(c.iter().copied().collect())
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn scaled(&self, k: i64) -> Self {
                Self(self.0.iter().map(|&c| c * k).collect())
            }

            pub fn checked_add(&self, other: &Self) -> Result<Self> {
                check_dim(self.len(), other.len())?;
                Ok(self + other)
            }

            pub fn checked_sub(&self, other: &Self) -> Result<Self> {
                check_dim(self.len(), other.len())?;
                Ok(self - other)
            }
        }

        impl std::ops::Add for &$name {
            type Output = $name;
            fn add(self, o: &$name) -> $name {
                assert_eq!(self.len(), o.len(), "dimension mismatch");
                $name(self.0.iter().zip(o.0.iter()).map(|(a, b)| a + b).collect())
            }
        }

        impl std::ops::Sub for &$name {
            type Output = $name;
            fn sub(self, o: &$name) -> $name {
                assert_eq!(self.len(), o.len(), "dimension mismatch");
                $name(self.0.iter().zip(o.0.iter()).map(|(a, b)| a - b).collect())
            }
        }

        impl std::ops::Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|&a| -a).collect())
            }
        }

        impl std::ops::AddAssign<&$name> for $name {
            fn add_assign(&mut self, o: &$name) {
                assert_eq!(self.len(), o.len(), "dimension mismatch");
                for (a, b) in self.0.iter_mut().zip(o.0.iter()) {
                    *a += b;
                }
            }
        }

        impl std::ops::Index<usize> for $name {
            type Output = i64;
            fn index(&self, j: usize) -> &i64 {
                &self.0[j]
            }
        }

        impl std::ops::IndexMut<usize> for $name {
            fn index_mut(&mut self, j: usize) -> &mut i64 {
                &mut self.0[j]
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_seq(self.0.iter())
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[")?;
                for (k, c) in self.0.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, "]")
            }
        }
    };
}

lattice_vector!(
    /// Element of the root lattice in simple-root coordinates.
    RootVec
);
lattice_vector!(
    /// Element of the coroot lattice in simple-coroot coordinates.
    /// Degrees of curves and quantum weights live here.
    CorootVec
);
lattice_vector!(
    /// Element of the weight lattice in fundamental-weight coordinates.
    Weight
);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// True when the support of the root lies in `lambda`.
    pub fn supported_in(&self, lambda: ParabolicSubset) -> bool {
        self.0.iter().enumerate().all(|(j, &c)| c == 0 || lambda.contains(j))
    }
}

impl CorootVec {
    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &CorootVec) -> bool {
        self.len() == other.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `[xi]_K`: drop the coordinates outside `k`.
    pub fn project(&self, k: ParabolicSubset) -> CorootVec {
        CorootVec(
            self.0
                .iter()
                .enumerate()
                .map(|(j, &c)| if k.contains(j) { c } else { 0 })
                .collect(),
        )
    }

    /// Parses a comma-separated list with one entry per node of `k`, in
    /// increasing node order; other coordinates are zero. An empty string
    /// gives zero.
    pub fn parse_over(s: &str, k: ParabolicSubset) -> Result<Self> {
        let mut d = CorootVec::zero(k.rank());
        if s.trim().is_empty() {
            return Ok(d);
        }
        let nodes = k.nodes();
        let vals: Vec<i64> = s
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        if vals.len() != nodes.len() {
            return Err(Error::Parse(format!(
                "expected {} values, one per node of K = {k}, got {}",
                nodes.len(),
                vals.len()
            )));
        }
        for (&j, &v) in nodes.iter().zip(&vals) {
            d[j] = v;
        }
        Ok(d)
    }
}

fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

/// A subset of the Dynkin nodes, stored as a bitmask together with the rank.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    mask: u64,
    rank: usize,
}

impl ParabolicSubset {
    pub fn empty(rank: usize) -> Self {
        ParabolicSubset { mask: 0, rank }
    }

    pub fn full(rank: usize) -> Self {
        let mask = if rank >= 64 { u64::MAX } else { (1u64 << rank) - 1 };
        ParabolicSubset { mask, rank }
    }

    pub fn from_mask(rank: usize, mask: u64) -> Result<Self> {
        if mask & !Self::full(rank).mask != 0 {
            return Err(Error::Precondition(format!(
                "node mask {mask:#b} has nodes outside rank {rank}"
            )));
        }
        Ok(ParabolicSubset { mask, rank })
    }

    /// Build from 0-based node indices.
    pub fn from_nodes(rank: usize, nodes: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &j in nodes {
            if j >= rank {
                return Err(Error::Precondition(format!(
                    "node {} out of range 1..={rank}",
                    j + 1
                )));
            }
            mask |= 1 << j;
        }
        Ok(ParabolicSubset { mask, rank })
    }

    /// Parse a 1-based comma separated node list such as `"1,3"`.
    /// `"all"` is the full set and `""` or `"none"` the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("all") {
            return Ok(Self::full(rank));
        }
        if t.is_empty() || t.eq_ignore_ascii_case("none") {
            return Ok(Self::empty(rank));
        }
        let mut nodes = Vec::new();
        for part in t.split(',') {
            let j: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad node index {part:?} in {s:?}")))?;
            if j == 0 {
                return Err(Error::Parse(format!("node indices are 1-based, got 0 in {s:?}")));
            }
            nodes.push(j - 1);
        }
        Self::from_nodes(rank, &nodes)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn contains(&self, j: usize) -> bool {
        j < 64 && self.mask >> j & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.rank)
    }

    pub fn complement(&self) -> Self {
        ParabolicSubset { mask: Self::full(self.rank).mask & !self.mask, rank: self.rank }
    }

    pub fn without(&self, j: usize) -> Self {
        ParabolicSubset { mask: self.mask & !(1 << j), rank: self.rank }
    }

    pub fn with(&self, j: usize) -> Self {
        ParabolicSubset { mask: self.mask | 1 << j, rank: self.rank }
    }

    pub fn nodes(&self) -> Vec<usize> {
        (0..self.rank).filter(|&j| self.contains(j)).collect()
    }

    /// All subsets of the nodes of the given rank.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = ParabolicSubset> {
        (0..1u64 << rank).map(move |mask| ParabolicSubset { mask, rank })
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.nodes().iter().map(|j| (j + 1).to_string()).collect();
        write!(f, "{{{}}}", nodes.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// Cartan type such as `G2` or `A3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok && rank <= 64 {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidType(format!("{family:?}{rank}")))
        }
    }

    /// Order of the Weyl group, from the closed formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Every type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for rank in 1..=max_rank {
                if let Ok(t) = LieType::new(family, rank) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank).map_err(|_| bad())
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Cartan matrix `m[j][k] = <alpha_j, alpha_k^vee>`.
///
/// A, B, C, D and F follow the Bourbaki numbering (B_n: alpha_n short,
/// C_n: alpha_n long, D_n forks at n-1 and n). In G2, alpha_1 is short.
/// E_n is the chain 1..n-1 with node n attached to node 3.
fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank;
    let mut m = vec![vec![0i64; n]; n];
    for (j, row) in m.iter_mut().enumerate() {
        row[j] = 2;
    }
    let simple = |m: &mut Vec<Vec<i64>>, a: usize, b: usize| {
        m[a][b] = -1;
        m[b][a] = -1;
    };
    // long node, short node, multiplicity
    let multiple = |m: &mut Vec<Vec<i64>>, long: usize, short: usize, mult: i64| {
        m[long][short] = -mult;
        m[short][long] = -1;
    };
    match t.family {
        Family::A => {
            for j in 1..n {
                simple(&mut m, j - 1, j);
            }
        }
        Family::B => {
            for j in 1..n - 1 {
                simple(&mut m, j - 1, j);
            }
            multiple(&mut m, n - 2, n - 1, 2);
        }
        Family::C => {
            for j in 1..n - 1 {
                simple(&mut m, j - 1, j);
            }
            multiple(&mut m, n - 1, n - 2, 2);
        }
        Family::D => {
            for j in 1..n - 1 {
                simple(&mut m, j - 1, j);
            }
            simple(&mut m, n - 3, n - 1);
        }
        Family::E => {
            for j in 1..n - 1 {
                simple(&mut m, j - 1, j);
            }
            simple(&mut m, 2, n - 1);
        }
        Family::F => {
            simple(&mut m, 0, 1);
            multiple(&mut m, 1, 2, 2);
            simple(&mut m, 2, 3);
        }
        Family::G => {
            multiple(&mut m, 1, 0, 3);
        }
    }
    m
}

/// Integers `e_j = (alpha_j, alpha_j)/2`, normalized so short roots give 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut e: Vec<Option<Ratio<i64>>> = vec![None; n];
    e[0] = Some(Ratio::from_integer(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        let ej = e[j].expect("visited node has a value");
        for k in 0..n {
            if k != j && cartan[j][k] != 0 && e[k].is_none() {
                // cartan[j][k] e_k = cartan[k][j] e_j
                e[k] = Some(ej * Ratio::new(cartan[k][j], cartan[j][k]));
                queue.push_back(k);
            }
        }
    }
    let e: Vec<Ratio<i64>> = e
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Internal("disconnected Dynkin diagram".into())))
        .collect::<Result<_>>()?;
    let den = e.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    let ints: Vec<i64> = e.iter().map(|r| (r * den).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    let ints: Vec<i64> = ints.iter().map(|&x| x / g).collect();
    for j in 0..n {
        for k in 0..n {
            if cartan[j][k] * ints[k] != cartan[k][j] * ints[j] {
                return Err(Error::Internal("Cartan matrix is not symmetrizable".into()));
            }
        }
    }
    Ok(ints)
}

/// A finite root system with its positive roots and coroots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    sym: Vec<i64>,
    positive: Vec<RootVec>,
    coroots: Vec<CorootVec>,
    index: HashMap<RootVec, usize>,
    theta: usize,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Result<Self> {
        let cartan = cartan_matrix(lie_type);
        let sym = symmetrizer(&cartan)?;
        let n = lie_type.rank;

        // Closure of the simple roots under simple reflections, staying positive.
        let mut seen: HashMap<RootVec, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for j in 0..n {
            let r = RootVec::unit(n, j);
            seen.insert(r.clone(), ());
            queue.push_back(r);
        }
        let mut positive = Vec::new();
        while let Some(b) = queue.pop_front() {
            for j in 0..n {
                let p: i64 = (0..n).map(|k| b[k] * cartan[k][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut c = b.clone();
                c[j] -= p;
                if c.is_positive() && !seen.contains_key(&c) {
                    seen.insert(c.clone(), ());
                    queue.push_back(c);
                }
            }
            positive.push(b);
        }
        if positive.len() != lie_type.positive_root_count() {
            return Err(Error::Internal(format!(
                "{lie_type}: found {} positive roots, expected {}",
                positive.len(),
                lie_type.positive_root_count()
            )));
        }
        positive.sort_by_key(|r| (r.height(), std::cmp::Reverse(r.clone())));

        let mut rs = RootSystem {
            lie_type,
            cartan,
            sym,
            positive,
            coroots: Vec::new(),
            index: HashMap::new(),
            theta: 0,
        };
        let coroots = rs
            .positive
            .iter()
            .map(|b| rs.compute_coroot(b))
            .collect::<Result<Vec<_>>>()?;
        rs.coroots = coroots;
        rs.index = rs.positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        rs.theta = rs.positive.len() - 1;
        let theta = &rs.positive[rs.theta];
        if !rs.positive.iter().all(|b| (theta - b).0.iter().all(|&c| c >= 0)) {
            return Err(Error::Internal("highest root is not unique".into()));
        }
        Ok(rs)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.parse()?)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `<alpha_j, alpha_k^vee>`.
    pub fn cartan_entry(&self, j: usize, k: usize) -> i64 {
        self.cartan[j][k]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(alpha_j, alpha_j)/2` with short roots normalized to 1.
    pub fn symmetrizer(&self, j: usize) -> i64 {
        self.sym[j]
    }

    /// Positive roots sorted by height; the simple root `alpha_j` has index `j`.
    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, idx: usize) -> &RootVec {
        &self.positive[idx]
    }

    pub fn coroot_by_index(&self, idx: usize) -> &CorootVec {
        &self.coroots[idx]
    }

    pub fn root_index(&self, beta: &RootVec) -> Option<usize> {
        self.index.get(beta).copied()
    }

    /// Index of a positive root, with a descriptive error otherwise.
    pub fn expect_positive_root(&self, beta: &RootVec) -> Result<usize> {
        check_dim(self.rank(), beta.len())?;
        self.root_index(beta).ok_or_else(|| Error::NotARoot(beta.to_string()))
    }

    pub fn simple_root(&self, j: usize) -> RootVec {
        RootVec::unit(self.rank(), j)
    }

    pub fn theta(&self) -> &RootVec {
        &self.positive[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn theta_coroot(&self) -> &CorootVec {
        &self.coroots[self.theta]
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        Weight::unit(self.rank(), i)
    }

    /// `rho` in fundamental-weight coordinates.
    pub fn rho(&self) -> Weight {
        Weight(smallvec::smallvec![1; self.rank()])
    }

    /// `(beta, gamma)` for roots in simple-root coordinates.
    pub fn inner(&self, beta: &RootVec, gamma: &RootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for j in 0..n {
            if beta[j] == 0 {
                continue;
            }
            for k in 0..n {
                s += beta[j] * gamma[k] * self.cartan[j][k] * self.sym[k];
            }
        }
        s
    }

    fn compute_coroot(&self, beta: &RootVec) -> Result<CorootVec> {
        let norm = self.inner(beta, beta);
        if norm <= 0 || norm % 2 != 0 {
            return Err(Error::NotARoot(beta.to_string()));
        }
        let e_beta = norm / 2;
        let mut c = CorootVec::zero(self.rank());
        for j in 0..self.rank() {
            let num = beta[j] * self.sym[j];
            if num % e_beta != 0 {
                return Err(Error::NotARoot(beta.to_string()));
            }
            c[j] = num / e_beta;
        }
        Ok(c)
    }

    /// The coroot of a root (positive or negative).
    pub fn coroot(&self, beta: &RootVec) -> Result<CorootVec> {
        check_dim(self.rank(), beta.len())?;
        if let Some(k) = self.root_index(beta) {
            return Ok(self.coroots[k].clone());
        }
        let neg = -beta;
        match self.root_index(&neg) {
            Some(k) => Ok(-&self.coroots[k]),
            None => Err(Error::NotARoot(beta.to_string())),
        }
    }

    /// `<gamma, xi>` for a root-lattice element and a coroot-lattice element.
    pub fn root_coroot_pairing(&self, gamma: &RootVec, xi: &CorootVec) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for j in 0..n {
            if gamma[j] == 0 {
                continue;
            }
            for k in 0..n {
                s += gamma[j] * self.cartan[j][k] * xi[k];
            }
        }
        s
    }

    /// `<lambda, xi>` for a weight and a coroot-lattice element.
    pub fn pairing(&self, lambda: &Weight, xi: &CorootVec) -> Result<i64> {
        check_dim(self.rank(), lambda.len())?;
        check_dim(self.rank(), xi.len())?;
        Ok(lambda.0.iter().zip(xi.0.iter()).map(|(a, b)| a * b).sum())
    }

    /// Fundamental-weight coordinates of a root-lattice element.
    pub fn root_to_weight(&self, beta: &RootVec) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|k| (0..n).map(|j| beta[j] * self.cartan[j][k]).sum()).collect())
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn weight_to_root(&self, lambda: &Weight) -> Result<Vec<Ratio<i64>>> {
        let n = self.rank();
        check_dim(n, lambda.len())?;
        // Solve sum_j c_j cartan[j][k] = lambda_k.
        let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|k| {
                let mut row: Vec<Ratio<i64>> =
                    (0..n).map(|j| Ratio::from_integer(self.cartan[j][k])).collect();
                row.push(Ratio::from_integer(lambda[k]));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| a[r][col] != Ratio::from_integer(0))
                .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
            a.swap(col, piv);
            let p = a[col][col];
            for x in a[col].iter_mut() {
                *x /= p;
            }
            for r in 0..n {
                if r != col && a[r][col] != Ratio::from_integer(0) {
                    let f = a[r][col];
                    for c in 0..=n {
                        let v = a[col][c];
                        a[r][c] -= f * v;
                    }
                }
            }
        }
        Ok(a.into_iter().map(|row| row[n]).collect())
    }

    /// `s_beta(lambda)` for a root `beta`.
    pub fn reflect_weight(&self, beta: &RootVec, lambda: &Weight) -> Result<Weight> {
        check_dim(self.rank(), lambda.len())?;
        let cb = self.coroot(beta)?;
        let p = self.pairing(lambda, &cb)?;
        Ok(lambda - &self.root_to_weight(beta).scaled(p))
    }

    /// `s_beta(gamma)` for roots in simple-root coordinates.
    pub fn reflect_root(&self, beta: &RootVec, gamma: &RootVec) -> Result<RootVec> {
        check_dim(self.rank(), gamma.len())?;
        let cb = self.coroot(beta)?;
        Ok(gamma - &beta.scaled(self.root_coroot_pairing(gamma, &cb)))
    }

    /// `ell(s_beta)`, counted as the number of positive roots sent negative.
    pub fn reflection_length(&self, beta: &RootVec) -> Result<usize> {
        let cb = self.coroot(beta)?;
        Ok(self
            .positive
            .iter()
            .filter(|g| {
                let p = self.root_coroot_pairing(g, &cb);
                (*g - &beta.scaled(p)).is_negative()
            })
            .count())
    }

    /// Whether `ell(s_beta) = 2<rho, beta^vee> - 1`.
    pub fn is_quantum_root(&self, beta: &RootVec) -> Result<bool> {
        let k = self.expect_positive_root(beta)?;
        let ht: i64 = self.coroots[k].0.iter().sum();
        Ok(self.reflection_length(beta)? as i64 == 2 * ht - 1)
    }

    /// Nodes `i` with `<varpi_i, theta^vee> = 1`.
    pub fn pairing_one_nodes(&self) -> ParabolicSubset {
        let tc = self.theta_coroot();
        let nodes: Vec<usize> = (0..self.rank()).filter(|&i| tc[i] == 1).collect();
        ParabolicSubset::from_nodes(self.rank(), &nodes).expect("nodes in range")
    }

    /// Positive roots whose support is not contained in `lambda`.
    pub fn complement_roots(&self, lambda: ParabolicSubset) -> Vec<usize> {
        (0..self.positive.len()).filter(|&k| !self.positive[k].supported_in(lambda)).collect()
    }

    /// Serializable summary used by `--dump-rootsys`.
    pub fn dump(&self) -> RootSystemDump {
        RootSystemDump {
            lie_type: self.lie_type,
            rank: self.rank(),
            cartan: self.cartan.clone(),
            symmetrizer: self.sym.clone(),
            positive_roots: self.positive.clone(),
            coroots: self.coroots.clone(),
            theta: self.theta().clone(),
            rho: self.rho(),
            pairing_one_nodes: self.pairing_one_nodes().nodes().iter().map(|j| j + 1).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSystemDump {
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub positive_roots: Vec<RootVec>,
    pub coroots: Vec<CorootVec>,
    pub theta: RootVec,
    pub rho: Weight,
    pub pairing_one_nodes: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::parse(s).unwrap()
    }

    #[test]
    fn g2_cartan_matches_convention() {
        let g = rs("G2");
        assert_eq!(g.cartan_entry(1, 0), -3);
        assert_eq!(g.cartan_entry(0, 1), -1);
        assert_eq!(g.symmetrizer(0), 1);
        assert_eq!(g.symmetrizer(1), 3);
        assert_eq!(g.theta(), &RootVec::from_slice(&[3, 2]));
    }

    #[test]
    fn g2_coroots() {
        let g = rs("G2");
        let cases = [
            ([1, 1], [1, 3]),
            ([3, 2], [1, 2]),
            ([2, 1], [2, 3]),
            ([3, 1], [1, 1]),
            ([1, 0], [1, 0]),
            ([0, 1], [0, 1]),
        ];
        for (r, c) in cases {
            assert_eq!(g.coroot(&RootVec::from_slice(&r)).unwrap(), CorootVec::from_slice(&c));
        }
    }

    #[test]
    fn root_counts_for_all_small_types() {
        for t in LieType::all_up_to(8) {
            let r = RootSystem::new(t).unwrap();
            assert_eq!(r.num_positive_roots(), t.positive_root_count(), "{t}");
            for j in 0..t.rank {
                assert_eq!(r.root(j), &r.simple_root(j));
            }
        }
    }

    #[test]
    fn coroot_pairs_to_two() {
        for t in LieType::all_up_to(5) {
            let r = RootSystem::new(t).unwrap();
            for (k, b) in r.positive_roots().iter().enumerate() {
                assert_eq!(r.root_coroot_pairing(b, r.coroot_by_index(k)), 2);
            }
        }
    }

    #[test]
    fn weight_root_round_trip() {
        let r = rs("B3");
        for b in r.positive_roots() {
            let w = r.root_to_weight(b);
            let back = r.weight_to_root(&w).unwrap();
            for j in 0..3 {
                assert_eq!(back[j], Ratio::from_integer(b[j]));
            }
        }
        let half = r.weight_to_root(&r.fundamental_weight(2)).unwrap();
        assert_eq!(half[0], Ratio::new(1, 2));
    }

    #[test]
    fn reflection_is_involution() {
        let r = rs("C3");
        let lam = Weight::from_slice(&[2, -1, 3]);
        for b in r.positive_roots() {
            let once = r.reflect_weight(b, &lam).unwrap();
            assert_eq!(r.reflect_weight(b, &once).unwrap(), lam);
        }
    }

    #[test]
    fn quantum_roots_simple_and_theta() {
        for t in LieType::all_up_to(4) {
            let r = RootSystem::new(t).unwrap();
            for j in 0..t.rank {
                assert!(r.is_quantum_root(&r.simple_root(j)).unwrap());
            }
            assert!(r.is_quantum_root(r.theta()).unwrap());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!("X3".parse::<LieType>().is_err());
        assert!("E5".parse::<LieType>().is_err());
        assert!("B1".parse::<LieType>().is_err());
        let g = rs("G2");
        assert!(matches!(
            g.pairing(&Weight::zero(3), &CorootVec::zero(2)),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(g.coroot(&RootVec::from_slice(&[1, 2])), Err(Error::NotARoot(_))));
    }

    #[test]
    fn parabolic_subset_parse() {
        let k = ParabolicSubset::parse("1,3", 4).unwrap();
        assert_eq!(k.nodes(), vec![0, 2]);
        assert_eq!(k.complement().nodes(), vec![1, 3]);
        assert!(ParabolicSubset::parse("5", 4).is_err());
        assert!(ParabolicSubset::parse("0", 4).is_err());
        assert!(ParabolicSubset::parse("all", 3).unwrap().is_full());
    }
}
