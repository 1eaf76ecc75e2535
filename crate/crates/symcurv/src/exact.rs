//! Exact rational linear algebra.
//!
//! Everything downstream — root lengths, Gram matrices, projections — is
//! computed over arbitrary-precision rationals so that equality tests in the
//! verification layer are meaningful. No floating point anywhere.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator (guaranteed by the underlying representation).
pub type Rational = BigRational;

/// Build a rational from an integer numerator and denominator.
///
/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Render a rational as `p/q`, or just `p` when the denominator is 1.
pub fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the output format of [`fmt_rat`]: `p` or `p/q` with `q != 0`.
pub fn parse_rat(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => Some(Rational::from(s.parse::<BigInt>().ok()?)),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    /// A linear system had no unique solution.
    #[error("linear system has no unique solution")]
    SingularMatrix,
    /// Gram–Schmidt received linearly dependent (or zero) input vectors.
    #[error("input vectors are linearly dependent")]
    DependentInput,
}

/// A vector with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector {
            entries: entries.iter().map(|&n| rat_int(n)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        RatVector {
            entries: vec![Rational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        RatVector {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// `self - c * other`.
    pub fn sub_scaled(&self, other: &Self, c: &Rational) -> Self {
        assert_eq!(self.dim(), other.dim());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b * c)
                .collect(),
        }
    }

    /// Rescale by a positive rational to the parallel vector with coprime
    /// integer entries (direction preserved). The zero vector is returned
    /// unchanged.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let denom_lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|e| e.numer() * (&denom_lcm / e.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        RatVector {
            entries: ints.into_iter().map(|x| Rational::from(x / &g)).collect(),
        }
    }
}

/// A symmetric bilinear form given by its matrix in some basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    rows: Vec<Vec<Rational>>,
}

impl BilinearForm {
    /// Panics unless the matrix is square and symmetric.
    pub fn new(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "form matrix must be square"
        );
        for (i, row) in rows.iter().enumerate() {
            for j in 0..i {
                assert_eq!(row[j], rows[j][i], "form matrix must be symmetric");
            }
        }
        BilinearForm { rows }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        BilinearForm::new(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat_int(n)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// Evaluate the form on a pair of vectors.
    pub fn apply(&self, v: &RatVector, w: &RatVector) -> Rational {
        assert_eq!(v.dim(), self.dim());
        assert_eq!(w.dim(), self.dim());
        let mut total = Rational::zero();
        for i in 0..self.dim() {
            if v.entry(i).is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for j in 0..self.dim() {
                if !w.entry(j).is_zero() {
                    row += &self.rows[i][j] * w.entry(j);
                }
            }
            total += v.entry(i) * row;
        }
        total
    }

    /// Exact positive-definiteness test: symmetric Gaussian elimination
    /// without pivoting succeeds with all pivots positive if and only if
    /// every leading principal minor is positive.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.dim();
        let mut m = self.rows.clone();
        for k in 0..n {
            if !m[k][k].is_positive() {
                return false;
            }
            for i in (k + 1)..n {
                let factor = &m[i][k] / &m[k][k];
                #[allow(clippy::needless_range_loop)]
                for j in k..n {
                    let delta = &factor * &m[k][j];
                    m[i][j] -= delta;
                }
            }
        }
        true
    }
}

/// Solve the square system `rows * x = rhs` by Gaussian elimination with
/// exact arithmetic, pivoting on the first nonzero entry in each column.
pub fn solve_linear(rows: &[RatVector], rhs: &RatVector) -> Result<RatVector, ExactError> {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.dim() == n),
        "system matrix must be square"
    );
    assert_eq!(rhs.dim(), n);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs.entries())
        .map(|(row, b)| {
            let mut r: Vec<Rational> = row.entries().to_vec();
            r.push(b.clone());
            r
        })
        .collect();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(pivot) = pivot else {
            return Err(ExactError::SingularMatrix);
        };
        m.swap(k, pivot);
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let factor = &m[i][k] / &m[k][k];
            #[allow(clippy::needless_range_loop)]
            for j in k..=n {
                let delta = &factor * &m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = m[k][n].clone();
        for j in (k + 1)..n {
            acc -= &m[k][j] * &x[j];
        }
        x[k] = acc / &m[k][k];
    }
    Ok(RatVector::new(x))
}

/// Orthogonalize `vectors` with respect to `form` without normalizing.
///
/// Each output vector is rescaled to primitive integer coordinates, which
/// keeps later arithmetic small; rescaling changes neither the span nor
/// orthogonality. Fails with [`ExactError::DependentInput`] if the inputs
/// are linearly dependent (a zero input vector counts as dependent).
pub fn gram_schmidt(
    form: &BilinearForm,
    vectors: &[RatVector],
) -> Result<Vec<RatVector>, ExactError> {
    let mut basis: Vec<RatVector> = Vec::with_capacity(vectors.len());
    let mut norms: Vec<Rational> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for (b, n) in basis.iter().zip(&norms) {
            let coeff = form.apply(&w, b) / n;
            w = w.sub_scaled(b, &coeff);
        }
        if w.is_zero() {
            return Err(ExactError::DependentInput);
        }
        let w = w.primitive();
        let n = form.apply(&w, &w);
        if n.is_zero() {
            return Err(ExactError::DependentInput);
        }
        basis.push(w);
        norms.push(n);
    }
    Ok(basis)
}

/// Squared length of the orthogonal projection of `v` onto the span of a
/// linearly independent family (orthogonalized internally). An empty family
/// gives 0; dependent input fails.
pub fn proj_sq_length(
    form: &BilinearForm,
    v: &RatVector,
    basis: &[RatVector],
) -> Result<Rational, ExactError> {
    let ortho = gram_schmidt(form, basis)?;
    Ok(proj_sq_length_orthogonal(form, v, &ortho))
}

/// Fast path of [`proj_sq_length`] for a family already known to be
/// pairwise orthogonal (e.g. the output of [`gram_schmidt`], reused across
/// many projections).
pub(crate) fn proj_sq_length_orthogonal(
    form: &BilinearForm,
    v: &RatVector,
    orthogonal_basis: &[RatVector],
) -> Rational {
    debug_assert!(
        orthogonal_basis.iter().enumerate().all(|(i, a)| {
            orthogonal_basis[..i]
                .iter()
                .all(|b| form.apply(a, b).is_zero())
        }),
        "basis must be pairwise orthogonal"
    );
    let mut total = Rational::zero();
    for b in orthogonal_basis {
        let n = form.apply(b, b);
        assert!(!n.is_zero(), "basis vectors must have nonzero length");
        let c = form.apply(v, b);
        total += &c * &c / n;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tridiagonal_form(dim: usize, diag: Rational, off: Rational) -> BilinearForm {
        let mut rows = vec![vec![Rational::zero(); dim]; dim];
        for i in 0..dim {
            rows[i][i] = diag.clone();
            if i + 1 < dim {
                rows[i][i + 1] = off.clone();
                rows[i + 1][i] = off.clone();
            }
        }
        BilinearForm::new(rows)
    }

    #[test]
    fn rationals_stay_reduced() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(fmt_rat(&rat(1, -2)), "-1/2");
        assert_eq!(fmt_rat(&rat(6, 2)), "3");
        assert_eq!(fmt_rat(&rat_int(0)), "0");
        assert_eq!(parse_rat("-5/10"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("7"), Some(rat_int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }

    #[test]
    fn primitive_clears_denominators_preserving_direction() {
        let v = RatVector::new(vec![rat(-1, 2), rat(-3, 4), rat_int(0)]);
        assert_eq!(v.primitive(), RatVector::from_ints(&[-2, -3, 0]));
        let z = RatVector::zero(3);
        assert_eq!(z.primitive(), z);
    }

    #[test]
    fn solves_two_by_two_system() {
        let rows = [RatVector::from_ints(&[2, 1]), RatVector::from_ints(&[1, 2])];
        let rhs = RatVector::from_ints(&[1, 0]);
        let x = solve_linear(&rows, &rhs).unwrap();
        assert_eq!(x, RatVector::new(vec![rat(2, 3), rat(-1, 3)]));

        let id = [RatVector::from_ints(&[1, 0]), RatVector::from_ints(&[0, 1])];
        let b = RatVector::new(vec![rat_int(3), rat(5, 2)]);
        assert_eq!(solve_linear(&id, &b).unwrap(), b);
    }

    #[test]
    fn rejects_singular_system() {
        let rows = [RatVector::from_ints(&[1, 2]), RatVector::from_ints(&[2, 4])];
        let rhs = RatVector::from_ints(&[1, 0]);
        assert_eq!(solve_linear(&rows, &rhs), Err(ExactError::SingularMatrix));
        let ones = [RatVector::from_ints(&[1, 1]), RatVector::from_ints(&[1, 1])];
        assert_eq!(solve_linear(&ones, &rhs), Err(ExactError::SingularMatrix));
    }

    #[test]
    fn orthogonalizes_adjacent_pair() {
        // The Killing form of a rank-5 type A system: diagonal 1/6,
        // adjacent off-diagonal -1/12. The second basis vector picks up half
        // of the first and is rescaled to integer coordinates.
        let form = tridiagonal_form(5, rat(1, 6), rat(-1, 12));
        let input = [
            RatVector::from_ints(&[1, 0, 0, 0, 0]),
            RatVector::from_ints(&[0, 1, 0, 0, 0]),
        ];
        let basis = gram_schmidt(&form, &input).unwrap();
        assert_eq!(basis[0], RatVector::from_ints(&[1, 0, 0, 0, 0]));
        assert_eq!(basis[1], RatVector::from_ints(&[1, 2, 0, 0, 0]));
        assert!(form.apply(&basis[0], &basis[1]).is_zero());
    }

    #[test]
    fn keeps_orthogonal_input_up_to_positive_scaling() {
        let form = tridiagonal_form(3, rat(1, 4), rat(-1, 8));
        // (1,0,-1) and (1,1,1) are orthogonal under this form.
        let input = [
            RatVector::new(vec![rat(-1, 2), rat_int(0), rat(1, 2)]),
            RatVector::from_ints(&[1, 1, 1]),
        ];
        assert!(form.apply(&input[0], &input[1]).is_zero());
        let basis = gram_schmidt(&form, &input).unwrap();
        assert_eq!(basis[0], RatVector::from_ints(&[-1, 0, 1]));
        assert_eq!(basis[1], RatVector::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn orthogonalizes_difference_vectors() {
        // Killing form of the rank-6 exceptional simply-laced system:
        // diagonal 1/12, off-diagonal -1/24 on the edges of its diagram.
        let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
        let mut rows = vec![vec![Rational::zero(); 6]; 6];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = rat(1, 12);
        }
        for &(i, j) in &edges {
            rows[i][j] = rat(-1, 24);
            rows[j][i] = rat(-1, 24);
        }
        let form = BilinearForm::new(rows);
        let input = [
            RatVector::from_ints(&[1, 0, 0, 0, 0, -1]),
            RatVector::from_ints(&[0, 0, 1, 0, -1, 0]),
        ];
        let basis = gram_schmidt(&form, &input).unwrap();
        assert_eq!(basis[1], RatVector::from_ints(&[1, 0, 2, 0, -2, -1]));
        assert!(form.apply(&basis[0], &basis[1]).is_zero());
    }

    #[test]
    fn gram_schmidt_rejects_dependent_input() {
        let form = tridiagonal_form(2, rat(1, 4), rat(-1, 8));
        let input = [RatVector::from_ints(&[1, 1]), RatVector::from_ints(&[2, 2])];
        assert_eq!(gram_schmidt(&form, &input), Err(ExactError::DependentInput));
        let with_zero = [RatVector::zero(2)];
        assert_eq!(
            gram_schmidt(&form, &with_zero),
            Err(ExactError::DependentInput)
        );
    }

    #[test]
    fn projects_onto_line() {
        // Killing form of a rank-3 type A system.
        let form = tridiagonal_form(3, rat(1, 4), rat(-1, 8));
        let v = RatVector::from_ints(&[1, 1, 0]);
        let basis = [RatVector::from_ints(&[1, 0, -1])];
        assert_eq!(proj_sq_length(&form, &v, &basis), Ok(rat(1, 8)));
        assert_eq!(proj_sq_length(&form, &v, &[]), Ok(rat_int(0)));
        // A vector in the span projects to itself.
        let w = RatVector::from_ints(&[2, 0, -2]);
        assert_eq!(proj_sq_length(&form, &w, &basis), Ok(form.apply(&w, &w)));
        // A vector orthogonal to the whole basis projects to zero.
        let u = RatVector::from_ints(&[1, 1, 1]);
        assert!(form.apply(&u, &basis[0]).is_zero());
        assert_eq!(proj_sq_length(&form, &u, &basis), Ok(rat_int(0)));
        // Dependent input is rejected rather than double-counted.
        let dep = [
            RatVector::from_ints(&[1, 0, -1]),
            RatVector::from_ints(&[-2, 0, 2]),
        ];
        assert_eq!(
            proj_sq_length(&form, &v, &dep),
            Err(ExactError::DependentInput)
        );
    }

    #[test]
    fn detects_positive_definiteness() {
        assert!(tridiagonal_form(3, rat(1, 4), rat(-1, 8)).is_positive_definite());
        assert!(!BilinearForm::from_ints(&[vec![1, 2], vec![2, 1]]).is_positive_definite());
        assert!(!BilinearForm::from_ints(&[vec![0, 0], vec![0, 1]]).is_positive_definite());
    }

    /// A random symmetric positive-definite form: A^T A + I over small
    /// integer matrices A.
    fn pd_form_strategy(dim: usize) -> impl Strategy<Value = BilinearForm> {
        prop::collection::vec(prop::collection::vec(-3i64..=3, dim), dim).prop_map(move |a| {
            let mut rows = vec![vec![Rational::zero(); dim]; dim];
            for i in 0..dim {
                for j in 0..dim {
                    let mut acc = if i == j { rat_int(1) } else { rat_int(0) };
                    for row in &a {
                        acc += rat_int(row[i] * row[j]);
                    }
                    rows[i][j] = acc;
                }
            }
            BilinearForm::new(rows)
        })
    }

    fn vec_strategy(dim: usize) -> impl Strategy<Value = RatVector> {
        prop::collection::vec(-4i64..=4, dim).prop_map(|v| RatVector::from_ints(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn solve_round_trips(dim in 1usize..=4, seed in prop::collection::vec(-5i64..=5, 16), rhs in prop::collection::vec(-5i64..=5, 4)) {
            let rows: Vec<RatVector> = (0..dim)
                .map(|i| RatVector::from_ints(&seed[i * dim..(i + 1) * dim]))
                .collect();
            let b = RatVector::from_ints(&rhs[..dim]);
            if let Ok(x) = solve_linear(&rows, &b) {
                for (row, want) in rows.iter().zip(b.entries()) {
                    let got: Rational = row
                        .entries()
                        .iter()
                        .zip(x.entries())
                        .map(|(a, b)| a * b)
                        .sum();
                    prop_assert_eq!(&got, want);
                }
            }
        }

        #[test]
        fn projection_properties(
            (form, basis, v, c, i, j) in (2usize..=4).prop_flat_map(|dim| {
                (
                    pd_form_strategy(dim),
                    prop::collection::vec(vec_strategy(dim), 1..=dim),
                    vec_strategy(dim),
                    -2i64..=2,
                    0usize..dim,
                    0usize..dim,
                )
            })
        ) {
            let Ok(ortho) = gram_schmidt(&form, &basis) else {
                return Ok(());
            };
            // Orthogonality of the output family.
            for (a, x) in ortho.iter().enumerate() {
                for y in &ortho[..a] {
                    prop_assert!(form.apply(x, y).is_zero());
                }
            }
            let proj = proj_sq_length(&form, &v, &basis).unwrap();
            prop_assert_eq!(&proj, &proj_sq_length_orthogonal(&form, &v, &ortho));
            // The projection never exceeds the vector itself.
            prop_assert!(proj <= form.apply(&v, &v));
            // Independent route: solve the normal equations on the *raw*
            // basis. With x solving (B^T G B) x = B^T G v, the squared
            // projection length is x . (B^T G v).
            let sys: Vec<RatVector> = basis
                .iter()
                .map(|bi| RatVector::new(basis.iter().map(|bj| form.apply(bi, bj)).collect()))
                .collect();
            let rhs = RatVector::new(basis.iter().map(|bi| form.apply(bi, &v)).collect());
            let x = solve_linear(&sys, &rhs).unwrap();
            let via_normal: Rational = x
                .entries()
                .iter()
                .zip(rhs.entries())
                .map(|(a, b)| a * b)
                .sum();
            prop_assert_eq!(&proj, &via_normal);
            // Changing the basis by an elementary unimodular operation
            // leaves the projection unchanged.
            let i = i % basis.len();
            let j = j % basis.len();
            if i != j {
                let mut modified = basis.clone();
                modified[i] = basis[i].add(&basis[j].scaled(&rat_int(c)));
                prop_assert_eq!(proj_sq_length(&form, &v, &modified), Ok(proj));
            }
        }
    }
}
