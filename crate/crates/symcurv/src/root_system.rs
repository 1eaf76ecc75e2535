//! Simple root systems over the basis of simple roots.
//!
//! Roots are stored as integer coefficient vectors with respect to the simple
//! roots, so a root system is fully determined by its Cartan matrix. The
//! positive roots are enumerated by height induction using root strings, and
//! the inner product is the one induced by the Killing form of the compact
//! real form, normalized so that `(a,a) * sum_{b > 0} (2(b,a)/(a,a))^2 = 2`
//! holds for every root `a`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num::traits::ToPrimitive;
use num::{BigInt, Integer, One};
use thiserror::Error;

use crate::exact::{fmt_rat, rat_int, BilinearForm, RatVector, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unrecognized root system label `{0}`")]
    UnknownType(String),
    #[error("pairing 2(b,a)/(a,a) = {value} is not an integer")]
    NotInteger { value: String },
}

/// An isomorphism type of simple root system, e.g. `B4` or `E7`.
///
/// Low-rank coincidences are canonicalized on construction (`C2` becomes
/// `B2`, `D3` becomes `A3`), so equal types compare equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let (family, rank) = match (family, rank) {
            (Family::C, 2) => (Family::B, 2),
            (Family::D, 3) => (Family::A, 3),
            other => other,
        };
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(RootSystemError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, in closed form.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('B') | Some('b') => Family::B,
            Some('C') | Some('c') => Family::C,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            Some('F') | Some('f') => Family::F,
            Some('G') | Some('g') => Family::G,
            _ => return Err(RootSystemError::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootSystemError::UnknownType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// A root (or any integer vector) written in simple-root coordinates.
///
/// The derived ordering is by height first and then lexicographically on the
/// coefficient vector, so `max` picks the "highest" element of a set in the
/// sense used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// The `i`-th simple root (0-based) in rank `dim`.
    pub fn simple(dim: usize, i: usize) -> Self {
        let mut coeffs = vec![0; dim];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> i64 {
        self.coeffs[j]
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Self {
        Root {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        Root {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn to_vector(&self) -> RatVector {
        RatVector::new(self.coeffs.iter().map(|&c| rat_int(c)).collect())
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The highest element of a nonempty collection of roots: maximal height,
/// ties broken by lexicographically largest coefficient vector.
pub fn highest_in<'a, I>(roots: I) -> Option<&'a Root>
where
    I: IntoIterator<Item = &'a Root>,
{
    roots.into_iter().max()
}

/// A simple root system with its positive roots and Killing-normalized
/// inner product.
#[derive(Clone, Debug)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    gram: BilinearForm,
    int_gram: Vec<Vec<i64>>,
    gram_denom: i64,
    positive: Vec<Root>,
    positive_set: HashSet<Vec<i64>>,
    highest: Root,
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let cartan = cartan_matrix(lie_type);
        let mut positive = enumerate_positive_roots(&cartan);
        assert_eq!(
            positive.len(),
            lie_type.positive_root_count(),
            "enumeration disagrees with the closed-form count for {lie_type}"
        );
        // Height ascending; within a height level, lexicographically
        // descending coefficient vectors.
        positive.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coeffs().cmp(a.coeffs()))
        });
        let max_height = positive.iter().map(Root::height).max().unwrap();
        let top: Vec<&Root> = positive
            .iter()
            .filter(|r| r.height() == max_height)
            .collect();
        assert_eq!(top.len(), 1, "highest root must be unique for {lie_type}");
        let highest = top[0].clone();
        let (gram, int_gram, gram_denom) = killing_gram(&cartan, &positive);
        let positive_set = positive.iter().map(|r| r.coeffs().to_vec()).collect();
        RootSystem {
            lie_type,
            cartan,
            gram,
            int_gram,
            gram_denom,
            positive,
            positive_set,
            highest,
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// Cartan matrix entries `A[i][j] = 2(a_i,a_j)/(a_j,a_j)`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Killing-normalized Gram matrix of the simple roots.
    pub fn gram(&self) -> &BilinearForm {
        &self.gram
    }

    /// The Gram matrix scaled to integers: `int_gram = gram_denom * gram`.
    pub(crate) fn int_gram(&self) -> &[Vec<i64>] {
        &self.int_gram
    }

    pub(crate) fn gram_denom(&self) -> i64 {
        self.gram_denom
    }

    /// Positive roots, height ascending (coefficients lexicographically
    /// descending within a height level).
    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn highest(&self) -> &Root {
        &self.highest
    }

    /// Killing inner product of two coefficient vectors.
    pub fn inner(&self, a: &Root, b: &Root) -> Rational {
        Rational::new(
            BigInt::from(self.int_pairing(a, b)),
            BigInt::from(self.gram_denom),
        )
    }

    pub fn sq_length(&self, a: &Root) -> Rational {
        self.inner(a, a)
    }

    /// The pairing computed against the integer-rescaled Gram matrix;
    /// divide by [`Self::gram_denom`] to recover the Killing pairing.
    pub(crate) fn int_pairing(&self, a: &Root, b: &Root) -> i64 {
        let l = self.rank();
        let mut total = 0i64;
        for i in 0..l {
            let ai = a.coeff(i);
            if ai == 0 {
                continue;
            }
            let mut row = 0i64;
            for j in 0..l {
                let bj = b.coeff(j);
                if bj != 0 {
                    row += self.int_gram[i][j] * bj;
                }
            }
            total += ai * row;
        }
        total
    }

    /// `2(b,a)/(a,a)`, which must be an integer when both arguments are
    /// roots; fails with the offending rational value otherwise.
    pub fn cartan_integer(&self, b: &Root, a: &Root) -> Result<i64, RootSystemError> {
        let den = self.int_pairing(a, a);
        assert!(den != 0, "cartan_integer against a vector of length zero");
        let num = 2 * self.int_pairing(b, a);
        if num % den == 0 {
            Ok(num / den)
        } else {
            Err(RootSystemError::NotInteger {
                value: fmt_rat(&Rational::new(BigInt::from(num), BigInt::from(den))),
            })
        }
    }

    /// `+1` if the vector is a positive root, `-1` if a negative root,
    /// `0` if not a root at all.
    pub fn root_sign(&self, r: &Root) -> i8 {
        if self.positive_set.contains(r.coeffs()) {
            1
        } else if self.positive_set.contains(r.negated().coeffs()) {
            -1
        } else {
            0
        }
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_sign(r) != 0
    }
}

/// Cartan matrix with the conventions used throughout: nodes of the chain
/// families are numbered along the chain with the short (type B) or long
/// (type C) root last; type D carries its fork on the last two nodes; the
/// exceptional chain families put the branch node at position 2 attached to
/// position 4 (1-based).
fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let edge = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match t.family() {
        Family::A => {
            for i in 0..l - 1 {
                edge(&mut a, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..l - 1 {
                edge(&mut a, i, i + 1);
            }
            a[l - 2][l - 1] = -2; // last node short
        }
        Family::C => {
            for i in 0..l - 1 {
                edge(&mut a, i, i + 1);
            }
            a[l - 1][l - 2] = -2; // last node long
        }
        Family::D => {
            for i in 0..l - 2 {
                edge(&mut a, i, i + 1);
            }
            edge(&mut a, l - 3, l - 1);
        }
        Family::E => {
            let chain = [0usize, 2, 3, 4, 5, 6, 7];
            for w in chain[..l - 1].windows(2) {
                edge(&mut a, w[0], w[1]);
            }
            edge(&mut a, 1, 3);
        }
        Family::F => {
            edge(&mut a, 0, 1);
            edge(&mut a, 1, 2);
            edge(&mut a, 2, 3);
            a[1][2] = -2; // nodes 3,4 short
        }
        Family::G => {
            a[0][1] = -1;
            a[1][0] = -3; // first node short
        }
    }
    a
}

/// Enumerate the positive roots by height induction: a root `b` extends to
/// `b + a_i` exactly when `p - <b, a_i^v> > 0`, where `p` is the number of
/// steps the `a_i`-string continues below `b`.
fn enumerate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let l = cartan.len();
    let simples: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
    let mut found: HashSet<Vec<i64>> = simples.iter().map(|r| r.coeffs().to_vec()).collect();
    let mut all: Vec<Root> = simples.clone();
    let mut level = simples.clone();
    while !level.is_empty() {
        let mut next: Vec<Root> = Vec::new();
        for beta in &level {
            for (i, alpha) in simples.iter().enumerate() {
                // <beta, alpha_i^v> from the Cartan matrix alone.
                let pairing: i64 = (0..l).map(|j| beta.coeff(j) * cartan[j][i]).sum();
                let mut p = 0i64;
                let mut probe = beta.sub(alpha);
                while found.contains(probe.coeffs()) {
                    p += 1;
                    probe = probe.sub(alpha);
                }
                if p - pairing > 0 {
                    let up = beta.add(alpha);
                    if found.insert(up.coeffs().to_vec()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Build the Killing-normalized Gram matrix of the simple roots from the
/// Cartan matrix and the full list of positive roots, together with its
/// integer rescaling `(int_gram, denom)` where `int_gram = denom * gram`.
fn killing_gram(cartan: &[Vec<i64>], positive: &[Root]) -> (BilinearForm, Vec<Vec<i64>>, i64) {
    let l = cartan.len();
    // Relative squared lengths, propagated along the (connected) diagram.
    let mut rel: Vec<Option<Rational>> = vec![None; l];
    rel[0] = Some(rat_int(1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && cartan[i][j] != 0 && rel[j].is_none() {
                let cj = rel[i].clone().unwrap() * rat_int(cartan[j][i]) / rat_int(cartan[i][j]);
                rel[j] = Some(cj);
                stack.push(j);
            }
        }
    }
    let rel: Vec<Rational> = rel
        .into_iter()
        .map(|c| c.expect("diagram must be connected"))
        .collect();
    // Normalization: (a_1,a_1) * sum over positive roots of the squared
    // pairing against a_1 must equal 2. With (a_1,a_1) set to 1 in relative
    // units the sum is a plain integer.
    let scale_sum: i64 = positive
        .iter()
        .map(|b| {
            let a: i64 = (0..l).map(|j| b.coeff(j) * cartan[j][0]).sum();
            a * a
        })
        .sum();
    let mut rows = vec![vec![Rational::from(BigInt::from(0)); l]; l];
    for i in 0..l {
        for j in 0..l {
            rows[i][j] = rat_int(cartan[i][j]) * &rel[j] / rat_int(scale_sum);
        }
    }
    let gram = BilinearForm::new(rows);
    let denom = (0..l)
        .flat_map(|i| (0..l).map(move |j| (i, j)))
        .fold(BigInt::from(1), |acc, (i, j)| {
            acc.lcm(gram.entry(i, j).denom())
        });
    let int_gram: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let scaled = gram.entry(i, j) * Rational::from(denom.clone());
                    assert!(scaled.denom().is_one());
                    scaled
                        .numer()
                        .to_i64()
                        .expect("integer Gram entry overflow")
                })
                .collect()
        })
        .collect();
    let denom = denom.to_i64().expect("Gram denominator overflow");
    (gram, int_gram, denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn system(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn canonicalizes_low_rank_coincidences() {
        assert_eq!(
            LieType::new(Family::C, 2).unwrap(),
            LieType::new(Family::B, 2).unwrap()
        );
        assert_eq!(
            LieType::new(Family::D, 3).unwrap(),
            LieType::new(Family::A, 3).unwrap()
        );
        assert_eq!("C2".parse::<LieType>().unwrap().to_string(), "B2");
        assert_eq!("d3".parse::<LieType>().unwrap().to_string(), "A3");
        assert_eq!("E7".parse::<LieType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn rejects_invalid_types() {
        for bad in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3"] {
            assert!(matches!(
                bad.parse::<LieType>(),
                Err(RootSystemError::InvalidRank { .. })
            ));
        }
        for bad in ["H4", "", "A", "Ax", "4A"] {
            assert!(matches!(
                bad.parse::<LieType>(),
                Err(RootSystemError::UnknownType(_))
            ));
        }
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        for (label, count) in [
            ("A1", 1),
            ("A5", 15),
            ("B2", 4),
            ("B6", 36),
            ("C3", 9),
            ("D4", 12),
            ("D7", 42),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(system(label).positive().len(), count, "{label}");
        }
    }

    #[test]
    fn orders_positive_roots_by_height_then_reverse_lex() {
        let b2 = system("B2");
        let got: Vec<Vec<i64>> = b2.positive().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        let a2 = system("A2");
        let got: Vec<Vec<i64>> = a2.positive().iter().map(|r| r.coeffs().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn finds_highest_roots() {
        for (label, coeffs) in [
            ("A3", vec![1, 1, 1]),
            ("B3", vec![1, 2, 2]),
            ("C3", vec![2, 2, 1]),
            ("D4", vec![1, 2, 1, 1]),
            ("G2", vec![3, 2]),
            ("F4", vec![2, 3, 4, 2]),
            ("E6", vec![1, 2, 2, 3, 2, 1]),
            ("E7", vec![2, 2, 3, 4, 3, 2, 1]),
            ("E8", vec![2, 3, 4, 6, 5, 4, 3, 2]),
        ] {
            assert_eq!(system(label).highest().coeffs(), coeffs, "{label}");
        }
    }

    #[test]
    fn killing_gram_values() {
        let a2 = system("A2");
        assert_eq!(*a2.gram().entry(0, 0), rat(1, 3));
        assert_eq!(*a2.gram().entry(0, 1), rat(-1, 6));

        let g2 = system("G2");
        assert_eq!(*g2.gram().entry(0, 0), rat(1, 12));
        assert_eq!(*g2.gram().entry(0, 1), rat(-1, 8));
        assert_eq!(*g2.gram().entry(1, 1), rat(1, 4));

        let f4 = system("F4");
        assert_eq!(*f4.gram().entry(0, 0), rat(1, 9));
        assert_eq!(*f4.gram().entry(3, 3), rat(1, 18));

        let b3 = system("B3");
        assert_eq!(*b3.gram().entry(0, 0), rat(1, 5));
        assert_eq!(*b3.gram().entry(2, 2), rat(1, 10));

        let e8 = system("E8");
        assert_eq!(*e8.gram().entry(0, 0), rat(1, 30));

        for label in ["A4", "B3", "C3", "D4", "G2", "F4"] {
            assert!(system(label).gram().is_positive_definite(), "{label}");
        }
    }

    #[test]
    fn highest_root_squared_lengths() {
        for (label, num, den) in [
            ("A1", 1, 2),
            ("A5", 1, 6),
            ("B4", 1, 7),
            ("C3", 1, 4),
            ("D5", 1, 8),
            ("G2", 1, 4),
            ("F4", 1, 9),
            ("E6", 1, 12),
            ("E7", 1, 18),
            ("E8", 1, 30),
        ] {
            let rs = system(label);
            assert_eq!(rs.sq_length(rs.highest()), rat(num, den), "{label}");
        }
    }

    #[test]
    fn killing_identities_spot_check() {
        for label in ["B3", "C4", "F4", "G2"] {
            let rs = system(label);
            let l = rs.rank();
            let d = rs.gram_denom();
            for i in 0..l {
                let ai = Root::simple(l, i);
                // (a,a) * sum of squared Cartan pairings over positive roots = 2.
                let n = rs.int_pairing(&ai, &ai);
                let sum: i64 = rs
                    .positive()
                    .iter()
                    .map(|b| {
                        let a = rs.cartan_integer(b, &ai).unwrap();
                        a * a
                    })
                    .sum();
                assert_eq!(n * sum, 2 * d, "{label} node {i}");
                // Trace form identity against every other simple root.
                for j in 0..l {
                    let aj = Root::simple(l, j);
                    let sum: i64 = rs
                        .positive()
                        .iter()
                        .map(|b| rs.int_pairing(b, &ai) * rs.int_pairing(b, &aj))
                        .sum();
                    assert_eq!(2 * sum, rs.int_gram()[i][j] * d, "{label} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn cartan_integer_detects_non_roots() {
        let a2 = system("A2");
        let alpha = Root::from_coeffs(vec![3, 1]);
        let beta = Root::from_coeffs(vec![1, 0]);
        assert_eq!(
            a2.cartan_integer(&beta, &alpha),
            Err(RootSystemError::NotInteger {
                value: "5/7".to_string()
            })
        );
        let b2 = system("B2");
        assert_eq!(
            b2.cartan_integer(
                &Root::from_coeffs(vec![1, 1]),
                &Root::from_coeffs(vec![1, 0])
            ),
            Ok(1)
        );
    }

    #[test]
    fn classifies_root_membership() {
        let a2 = system("A2");
        assert_eq!(a2.root_sign(&Root::from_coeffs(vec![1, 1])), 1);
        assert_eq!(a2.root_sign(&Root::from_coeffs(vec![-1, -1])), -1);
        assert_eq!(a2.root_sign(&Root::from_coeffs(vec![2, 1])), 0);
        assert_eq!(a2.root_sign(&Root::from_coeffs(vec![1, -1])), 0);
        assert!(!a2.is_root(&Root::from_coeffs(vec![0, 0])));
    }

    #[test]
    fn highest_in_breaks_ties_lexicographically() {
        let roots = [
            Root::from_coeffs(vec![0, 1, 1]),
            Root::from_coeffs(vec![1, 1, 0]),
            Root::from_coeffs(vec![1, 0, 0]),
        ];
        assert_eq!(highest_in(&roots), Some(&roots[1]));
        assert_eq!(highest_in([].iter()), None);
    }

    // Independent construction of the classical root systems in orthogonal
    // coordinates, mapped back to simple-root coefficients.
    fn range_add(v: &mut [i64], from: usize, to_incl: usize, amount: i64) {
        for entry in v.iter_mut().take(to_incl + 1).skip(from) {
            *entry += amount;
        }
    }

    fn classical_roots_from_coordinates(family: Family, l: usize) -> HashSet<Vec<i64>> {
        let mut out = HashSet::new();
        match family {
            Family::A => {
                for i in 0..l {
                    for j in i..l {
                        let mut v = vec![0; l];
                        range_add(&mut v, i, j, 1);
                        out.insert(v);
                    }
                }
            }
            Family::B => {
                for i in 0..l {
                    for j in (i + 1)..l {
                        let mut v = vec![0; l];
                        range_add(&mut v, i, j - 1, 1);
                        out.insert(v.clone());
                        range_add(&mut v, j, l - 1, 2);
                        out.insert(v);
                    }
                    let mut v = vec![0; l];
                    range_add(&mut v, i, l - 1, 1);
                    out.insert(v);
                }
            }
            Family::C => {
                for i in 0..l {
                    for j in (i + 1)..l {
                        let mut v = vec![0; l];
                        range_add(&mut v, i, j - 1, 1);
                        out.insert(v.clone());
                        if j <= l - 2 {
                            range_add(&mut v, j, l - 2, 2);
                        }
                        v[l - 1] += 1;
                        out.insert(v);
                    }
                    let mut v = vec![0; l];
                    range_add(&mut v, i, l - 2, 2);
                    v[l - 1] = 1;
                    out.insert(v);
                }
            }
            Family::D => {
                for i in 0..l {
                    for j in (i + 1)..l {
                        // e_i - e_j
                        let mut v = vec![0; l];
                        if j <= l - 2 {
                            range_add(&mut v, i, j - 1, 1);
                        } else {
                            range_add(&mut v, i, l - 2, 1);
                        }
                        out.insert(v);
                        // e_i + e_j
                        let mut v = vec![0; l];
                        if j <= l - 2 {
                            range_add(&mut v, i, j - 1, 1);
                            if j <= l - 3 {
                                range_add(&mut v, j, l - 3, 2);
                            }
                            v[l - 2] += 1;
                            v[l - 1] += 1;
                        } else {
                            if i <= l - 3 {
                                range_add(&mut v, i, l - 3, 1);
                            }
                            v[l - 1] += 1;
                        }
                        out.insert(v);
                    }
                }
            }
            _ => unreachable!(),
        }
        out
    }

    #[test]
    fn enumeration_matches_coordinate_construction() {
        for (family, l) in [
            (Family::A, 4),
            (Family::B, 5),
            (Family::C, 4),
            (Family::D, 5),
            (Family::D, 4),
        ] {
            let rs = RootSystem::new(LieType::new(family, l).unwrap());
            let got: HashSet<Vec<i64>> =
                rs.positive().iter().map(|r| r.coeffs().to_vec()).collect();
            let want = classical_roots_from_coordinates(family, l);
            assert_eq!(got, want, "{family}{l}");
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(24))]

        /// Reflection closure: s_alpha(beta) = beta - <beta, alpha> alpha
        /// stays inside the system for every pair, with integral pairing.
        #[test]
        fn reflections_permute_the_root_set(seed in 0usize..24) {
            let all = [
                LieType::new(Family::A, 1 + seed % 8).unwrap(),
                LieType::new(Family::B, 2 + seed % 7).unwrap(),
                LieType::new(Family::C, 3 + seed % 6).unwrap(),
                LieType::new(Family::D, 4 + seed % 5).unwrap(),
                LieType::new(Family::E, 6 + seed % 3).unwrap(),
                LieType::new(Family::F, 4).unwrap(),
                LieType::new(Family::G, 2).unwrap(),
            ];
            let rs = RootSystem::new(all[seed % all.len()]);
            for alpha in rs.positive() {
                for beta in rs.positive() {
                    let a = rs.cartan_integer(beta, alpha).unwrap();
                    proptest::prop_assert!(a.abs() <= 3);
                    let mut reflected = beta.clone();
                    for _ in 0..a.abs() {
                        reflected = if a > 0 {
                            reflected.sub(alpha)
                        } else {
                            reflected.add(alpha)
                        };
                    }
                    proptest::prop_assert!(
                        rs.is_root(&reflected),
                        "reflection of {beta} in {alpha} leaves the system"
                    );
                }
            }
        }
    }
}
