use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::{charpoly, eval_poly_matrix_exact, Poly, SquareMatrix};

/// The non-symmetric matrix `B` and `f(x) = x³ + x² + 6` for which
/// `f(0) = 6` is an eigenvalue of `f(B)` although 0 is not one of `B`.
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub b: SquareMatrix<BigInt>,
    pub f: Poly<BigInt>,
    pub f_of_b: SquareMatrix<BigInt>,
    /// The published value of `f(B)`.
    pub expected_f_of_b: SquareMatrix<BigInt>,
    pub charpoly_b: Poly<BigInt>,
    pub expected_charpoly_b: Poly<BigInt>,
    pub charpoly_f_of_b: Poly<BigInt>,
    pub f_at_zero: BigInt,
    /// `det(-B)`; nonzero means 0 is not an eigenvalue of `B`.
    pub charpoly_b_at_zero: BigInt,
    /// Zero means `f(0)` is an eigenvalue of `f(B)`.
    pub charpoly_f_of_b_at_f_zero: BigInt,
}

impl CounterexampleReport {
    pub fn f_of_b_matches(&self) -> bool {
        self.f_of_b == self.expected_f_of_b
    }

    /// `f(0) ∈ σ(f(B))` while `0 ∉ σ(B)`.
    pub fn converse_fails(&self) -> bool {
        self.charpoly_f_of_b_at_f_zero.is_zero() && !self.charpoly_b_at_zero.is_zero()
    }

    pub fn reproduces_counterexample(&self) -> bool {
        self.f_of_b_matches()
            && self.charpoly_b == self.expected_charpoly_b
            && self.converse_fails()
    }
}

/// Exact computation of the fixed counterexample.
pub fn counterexample_demo() -> CounterexampleReport {
    let b = SquareMatrix::from_i64_rows([[1, 1, 2], [0, -1, 0], [2, 0, -1]]);
    let f = Poly::from_i64(&[6, 0, 1, 1]);
    let f_of_b = eval_poly_matrix_exact(&f, &b);
    let charpoly_b = charpoly(&b);
    let charpoly_f_of_b = charpoly(&f_of_b);
    let f_at_zero = f.eval(&BigInt::zero());
    CounterexampleReport {
        expected_f_of_b: SquareMatrix::from_i64_rows([[16, 5, 10], [0, 6, 0], [10, 0, 6]]),
        expected_charpoly_b: Poly::from_i64(&[-5, -5, 1, 1]),
        charpoly_b_at_zero: charpoly_b.eval(&BigInt::zero()),
        charpoly_f_of_b_at_f_zero: charpoly_f_of_b.eval(&f_at_zero),
        b,
        f,
        f_of_b,
        charpoly_b,
        charpoly_f_of_b,
        f_at_zero,
    }
}
