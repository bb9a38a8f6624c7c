//! Matrices over commutative rings, with division-free determinant and
//! characteristic-polynomial algorithms.
//!
//! The characteristic polynomial is computed by the Samuelson–Berkowitz
//! recurrence, which uses only ring additions and multiplications and
//! therefore works verbatim over polynomial rings. The determinant is
//! defined through it: `det(M) = (-1)^N * charpoly(M)(0)`.

use super::{AlgebraError, Polynomial, Rational, RationalField, Ring};
use num_traits::{One, Zero};

/// Dense row-major matrix over an arbitrary element type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Self {
        assert_eq!(rows * cols, entries.len(), "entry count mismatch");
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Matrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        let mut m = Matrix::filled(n, n, ring.zero());
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    /// `c * I`.
    pub fn scalar<R: Ring<Elem = T>>(ring: &R, n: usize, c: &T) -> Self {
        let mut m = Matrix::filled(n, n, ring.zero());
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| ring.add(a, b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| ring.sub(a, b))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    acc = ring.add(&acc, &ring.mul(self.at(i, k), other.at(k, j)));
                }
                entries.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, entries }
    }
}

/// Coefficients of `det(y*I - M)` in descending powers of `y`, computed by
/// the Samuelson–Berkowitz recurrence: `out[0] = 1` and the polynomial is
/// `sum(out[i] * y^(N-i))`.
///
/// When the leading row or column segment at a pivot is entirely zero the
/// Krylov products all vanish and the step degenerates to multiplying the
/// running coefficient vector by `(y - a)`; this is detected and skipped,
/// which makes triangular and diagonal inputs cheap.
pub fn charpoly_coeffs<R: Ring>(
    ring: &R,
    m: &Matrix<R::Elem>,
) -> Result<Vec<R::Elem>, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(vec![ring.one()]);
    }
    // Coefficient vector for the 1x1 leading submatrix: y - a00.
    let mut v = vec![ring.one(), ring.neg(m.at(0, 0))];
    for r in 1..n {
        let a = m.at(r, r).clone();
        let row: Vec<&R::Elem> = (0..r).map(|j| m.at(r, j)).collect();
        let col: Vec<&R::Elem> = (0..r).map(|i| m.at(i, r)).collect();
        let row_zero = row.iter().all(|e| ring.is_zero(e));
        let col_zero = col.iter().all(|e| ring.is_zero(e));

        // Toeplitz column: t[0] = 1, t[1] = -a, t[k+1] = -(row * A^(k-1) * col).
        let mut t = Vec::with_capacity(r + 2);
        t.push(ring.one());
        t.push(ring.neg(&a));
        if row_zero || col_zero {
            // all Krylov products vanish
        } else {
            let mut w: Vec<R::Elem> = col.iter().map(|e| (*e).clone()).collect();
            for _ in 1..=r {
                let mut dot = ring.zero();
                for (re, we) in row.iter().zip(&w) {
                    dot = ring.add(&dot, &ring.mul(re, we));
                }
                t.push(ring.neg(&dot));
                // w <- A_r * w
                let mut next = Vec::with_capacity(r);
                for i in 0..r {
                    let mut acc = ring.zero();
                    for k in 0..r {
                        acc = ring.add(&acc, &ring.mul(m.at(i, k), &w[k]));
                    }
                    next.push(acc);
                }
                w = next;
            }
        }

        // v <- conv(t, v), truncated to length r+2.
        let mut out = vec![ring.zero(); r + 2];
        for (i, ti) in t.iter().enumerate() {
            if ring.is_zero(ti) {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if i + j < r + 2 {
                    out[i + j] = ring.add(&out[i + j], &ring.mul(ti, vj));
                }
            }
        }
        v = out;
    }
    Ok(v)
}

/// `det(y*I - M)` as a polynomial in `var`, for matrices with polynomial
/// entries. Monic of degree `N`.
pub fn charpoly(m: &Matrix<Polynomial>, var: &str) -> Result<Polynomial, AlgebraError> {
    let coeffs = charpoly_coeffs(&super::PolyRing, m)?;
    let n = m.rows();
    let y = Polynomial::var(var);
    let mut acc = Polynomial::zero();
    for (i, c) in coeffs.iter().enumerate() {
        acc = &acc + &(c * &y.pow((n - i) as u32));
    }
    Ok(acc)
}

/// Determinant through the characteristic polynomial:
/// `det(M) = (-1)^N * charpoly(M)(0)`.
pub fn det<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<R::Elem, AlgebraError> {
    let coeffs = charpoly_coeffs(ring, m)?;
    let n = m.rows();
    let constant = coeffs[n].clone();
    Ok(if n % 2 == 0 { constant } else { ring.neg(&constant) })
}

/// Exact row rank over the rationals by fraction-free (Bareiss-style)
/// elimination on a denominator-cleared integer copy.
pub fn rank_exact(m: &Matrix<Rational>) -> usize {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let mut lcm = BigInt::one();
            for j in 0..m.cols {
                lcm = lcm.lcm(m.at(i, j).denom());
            }
            (0..m.cols)
                .map(|j| {
                    let e = m.at(i, j);
                    e.numer() * (&lcm / e.denom())
                })
                .collect()
        })
        .collect();

    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..m.cols {
        let pivot = (rank..m.rows).find(|&i| !a[i][col].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(rank, p);
        for i in rank + 1..m.rows {
            for j in col + 1..m.cols {
                let val = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = val;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Exact determinant of the Vandermonde matrix `V[i][j] = points[i]^j`,
/// cross-checked internally against the pairwise-difference product
/// `prod_{i<k} (points[k] - points[i])`.
pub fn vandermonde_det(points: &[Rational]) -> Rational {
    assert!(!points.is_empty(), "vandermonde_det needs at least one point");
    let n = points.len();
    let mut rows = Vec::with_capacity(n);
    for p in points {
        let mut row = Vec::with_capacity(n);
        let mut pw = Rational::one();
        for _ in 0..n {
            row.push(pw.clone());
            pw *= p;
        }
        rows.push(row);
    }
    let v = Matrix::from_rows(rows);
    let d = det(&RationalField, &v).expect("square by construction");

    let mut closed = Rational::one();
    for i in 0..n {
        for k in i + 1..n {
            closed *= &points[k] - &points[i];
        }
    }
    assert_eq!(d, closed, "Vandermonde determinant disagrees with closed form");
    d
}

#[cfg(test)]
mod tests {
    use super::super::{rat_int, MatrixRing, PolyRing};
    use super::*;

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat_int).collect())
                .collect(),
        )
    }

    /// Independent oracle: determinant by cofactor expansion.
    fn cofactor_det(m: &Matrix<Rational>) -> Rational {
        let n = m.rows();
        if n == 0 {
            return Rational::one();
        }
        if n == 1 {
            return m.at(0, 0).clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            let mut minor_rows = Vec::new();
            for i in 1..n {
                let mut row = Vec::new();
                for k in 0..n {
                    if k != j {
                        row.push(m.at(i, k).clone());
                    }
                }
                minor_rows.push(row);
            }
            let minor = Matrix::from_rows(minor_rows);
            let term = m.at(0, j) * &cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn charpoly_of_zero_matrix() {
        let m = Matrix::filled(2, 2, Polynomial::zero());
        let p = charpoly(&m, "y").unwrap();
        assert_eq!(p, Polynomial::var("y").pow(2));
    }

    #[test]
    fn charpoly_of_symbolic_diagonal() {
        let u1 = Polynomial::var("u1");
        let u2 = Polynomial::var("u2");
        let z = Polynomial::zero();
        let m = Matrix::from_rows(vec![vec![u1.clone(), z.clone()], vec![z, u2.clone()]]);
        let p = charpoly(&m, "y").unwrap();
        let y = Polynomial::var("y");
        assert_eq!(p, &(&y - &u1) * &(&y - &u2));
    }

    #[test]
    fn det_identity_and_two_by_two() {
        let id = Matrix::identity(&RationalField, 3);
        assert_eq!(det(&RationalField, &id).unwrap(), rat_int(1));

        let a = Polynomial::var("a");
        let b = Polynomial::var("b");
        let c = Polynomial::var("c");
        let d = Polynomial::var("d");
        let m = Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]);
        assert_eq!(det(&PolyRing, &m).unwrap(), &(&a * &d) - &(&b * &c));
    }

    #[test]
    fn det_matches_cofactor_oracle_on_random_4x4() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let rows: Vec<Vec<i64>> =
                (0..4).map(|_| (0..4).map(|_| rng.gen_range(-9..=9)).collect()).collect();
            let m = qmat(rows);
            assert_eq!(det(&RationalField, &m).unwrap(), cofactor_det(&m));
        }
    }

    #[test]
    fn charpoly_constant_term_is_signed_det() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=6usize {
            let rows: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect()).collect();
            let m = qmat(rows);
            let coeffs = charpoly_coeffs(&RationalField, &m).unwrap();
            let sign = if n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            assert_eq!(sign * coeffs[n].clone(), cofactor_det(&m));
        }
    }

    #[test]
    fn rank_cases() {
        assert_eq!(rank_exact(&qmat(vec![vec![0, 0, 0], vec![0, 0, 0]])), 0);
        assert_eq!(rank_exact(&Matrix::identity(&RationalField, 4)), 4);
        assert_eq!(rank_exact(&qmat(vec![vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn rank_matches_minor_enumeration() {
        use rand::{Rng, SeedableRng};
        // Oracle: rank = size of the largest nonvanishing minor.
        fn minor_rank(m: &Matrix<Rational>) -> usize {
            let n = m.rows();
            let c = m.cols();
            for size in (1..=n.min(c)).rev() {
                let row_sets = subsets(n, size);
                let col_sets = subsets(c, size);
                for rs in &row_sets {
                    for cs in &col_sets {
                        let sub = Matrix::from_rows(
                            rs.iter()
                                .map(|&i| cs.iter().map(|&j| m.at(i, j).clone()).collect())
                                .collect(),
                        );
                        if !num_traits::Zero::is_zero(&cofactor_det(&sub)) {
                            return size;
                        }
                    }
                }
            }
            0
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == k {
                    out.push(cur.clone());
                    return;
                }
                for i in start..n {
                    cur.push(i);
                    rec(i + 1, n, k, cur, out);
                    cur.pop();
                }
            }
            rec(0, n, k, &mut cur, &mut out);
            out
        }

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..15 {
            let n = rng.gen_range(1..=4);
            let c = rng.gen_range(1..=4);
            // Mix in rank-deficient cases by sampling from a tiny range.
            let rows: Vec<Vec<i64>> =
                (0..n).map(|_| (0..c).map(|_| rng.gen_range(-1..=1)).collect()).collect();
            let m = qmat(rows);
            assert_eq!(rank_exact(&m), minor_rank(&m));
        }
    }

    #[test]
    fn vandermonde_small_values() {
        assert_eq!(vandermonde_det(&[rat_int(1), rat_int(2)]), rat_int(1));
        assert_eq!(vandermonde_det(&[rat_int(1), rat_int(2), rat_int(3)]), rat_int(2));
        // 1..2^3: nonzero, equals the closed form (checked inside).
        let pts: Vec<Rational> = (1..=8).map(rat_int).collect();
        assert!(!num_traits::Zero::is_zero(&vandermonde_det(&pts)));
    }

    #[test]
    fn matrix_ring_embeds_constants_as_scalar_matrices() {
        let ring = MatrixRing::new(RationalField, 3);
        let two = ring.from_rational(&rat_int(2));
        assert_eq!(two, Matrix::scalar(&RationalField, 3, &rat_int(2)));
        assert!(ring.fits(&two));
        assert!(!ring.fits(&Matrix::identity(&RationalField, 2)));
    }
}
