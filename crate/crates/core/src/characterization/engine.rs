use std::ops::Range;

use num_traits::{Float, FromPrimitive, One, ToPrimitive, Zero};

use crate::scalar::{HermScalar, Real};
use crate::spectra::{
    dominant_rank_one, eigh, eval_poly_matrix_float, max_abs_diff, min_singular_value, norm2,
    product, rank_one_factor, Hermitian, Matrix, RankOne, SpectraError, SpectrumReport, SymMatrix,
};

use super::{
    CharacterizationError, CharacterizationResult, CheckOptions, Condition, Mode, TheoremId,
    Verdict,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum Extreme {
    Top,
    Bottom,
}

pub(super) struct Setup<'a, S: HermScalar> {
    pub h: &'a Hermitian<S>,
    pub theorem: TheoremId,
    pub extreme: Extreme,
    /// The theorem's certifying vector, when it fixes one.
    pub alpha: Option<Vec<S>>,
    pub k_exact: Option<usize>,
    /// Require the scaled top factor to be entrywise positive.
    pub positive_alpha: bool,
    pub opts: CheckOptions,
}

impl<'a, S: HermScalar> Setup<'a, S> {
    pub fn top(h: &'a Hermitian<S>, opts: CheckOptions) -> Self {
        Self {
            h,
            theorem: if S::IS_REAL {
                TheoremId::Cor2_8
            } else {
                TheoremId::Thm2_7
            },
            extreme: Extreme::Top,
            alpha: None,
            k_exact: None,
            positive_alpha: false,
            opts,
        }
    }

    pub fn psd(h: &'a Hermitian<S>, opts: CheckOptions) -> Self {
        Self {
            h,
            theorem: if S::IS_REAL {
                TheoremId::Cor4_5
            } else {
                TheoremId::Lem4_1
            },
            extreme: Extreme::Bottom,
            alpha: None,
            k_exact: None,
            positive_alpha: false,
            opts,
        }
    }

    pub fn run(
        &self,
        eigenvalues: Option<&[S::Real]>,
    ) -> Result<CharacterizationResult<S>, CharacterizationError> {
        let tol = self.opts.tol;
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CharacterizationError::InvalidTolerance);
        }
        let tol = S::Real::lit(tol);
        let h = self.h;
        let n = h.n();
        if n == 0 {
            return Err(SpectraError::NotSquare.into());
        }
        let nr = S::Real::from_usize(n).expect("n");
        let one = S::Real::one();
        let report = eigh(h)?;
        let k_float = report.distinct_count;

        let (groups, distinct) = match eigenvalues {
            Some(list) => {
                validate_list(list)?;
                (report.clusters.clone(), list.to_vec())
            }
            None => match self.k_exact {
                Some(k) if k != k_float && k >= 1 && k <= n => {
                    let groups = split_at_largest_gaps(&report.eigenvalues, k);
                    let values = group_means(&report.eigenvalues, &groups);
                    (groups, values)
                }
                _ => (report.clusters.clone(), report.distinct_values()),
            },
        };
        let k = distinct.len();

        let h_scale = one.max(h.max_abs());
        let condition_i_tol = tol * nr * h_scale;
        let (extreme_value, others, y_h) = match self.extreme {
            Extreme::Top => {
                if groups[0].len() != 1 {
                    return Err(CharacterizationError::SpectralRadiusNotSimple);
                }
                (distinct[0], distinct[1..].to_vec(), report.eigenvector(0))
            }
            Extreme::Bottom => {
                if groups[groups.len() - 1].len() != 1 {
                    return Err(CharacterizationError::LeastNotSimple);
                }
                if report.bottom() < -condition_i_tol {
                    return Err(CharacterizationError::NotPsd(
                        report.bottom().to_f64().unwrap_or(f64::NAN),
                    ));
                }
                (
                    distinct[k - 1],
                    distinct[..k - 1].to_vec(),
                    report.eigenvector(n - 1),
                )
            }
        };

        let condition_i_residuals = others
            .iter()
            .map(|&mu| min_singular_value(&h.shifted(mu)))
            .collect::<Result<Vec<_>, _>>()?;

        let p = eval_poly_matrix_float(&others, h);
        let product_scale = p.max_abs();
        let condition_ii_tol = tol * nr * one.max(product_scale);
        let unit_coefficient = product(others.iter().map(|&mu| extreme_value - mu));

        // Expected form c·α α* with α fixed by the theorem, or the unit extreme eigenvector.
        let (alpha_ref, alpha_norm_sq) = match &self.alpha {
            Some(a) => {
                let norm = norm2(a);
                (a.clone(), norm * norm)
            }
            None => (y_h, one),
        };
        let expected_b = unit_coefficient / alpha_norm_sq;
        let expected = Matrix::outer(&alpha_ref, expected_b);
        let condition_ii_residual = p.sub(&expected).max_abs();

        let p_herm = Hermitian::symmetrized(&p);
        let (factor, rank_one_ok): (RankOne<S>, bool) = match rank_one_factor(&p_herm, tol) {
            Ok(r) => (r, true),
            Err(SpectraError::NotRankOne { .. }) => (dominant_rank_one(&p_herm)?, false),
            Err(e) => return Err(e.into()),
        };
        let coefficient_b = factor.b / alpha_norm_sq;
        let hy = h.as_matrix().matvec(&factor.y);
        let ly: Vec<S> = factor.y.iter().map(|&x| x.scale(extreme_value)).collect();
        let eigenvector_residual = max_abs_diff(&hy, &ly);

        let alpha = match (&self.alpha, self.extreme) {
            (Some(a), _) => a.clone(),
            (None, Extreme::Top) if factor.b > S::Real::zero() => {
                let s = factor.b.sqrt();
                factor.y.iter().map(|&x| x.scale(s)).collect()
            }
            (None, _) => factor.y.clone(),
        };

        let coefficient_ok = (coefficient_b - expected_b).abs() <= condition_ii_tol
            && !(S::IS_REAL && self.extreme == Extreme::Top && !(coefficient_b > S::Real::zero()));
        let positive_ok = !self.positive_alpha
            || alpha
                .iter()
                .all(|&x| x.re() > S::Real::zero() && x.im().abs() <= condition_i_tol);

        let identity_failure = if condition_i_residuals
            .iter()
            .any(|&r| !(r <= condition_i_tol))
        {
            Some(Condition::Singularity)
        } else if !rank_one_ok || !(condition_ii_residual <= condition_ii_tol) {
            Some(Condition::RankOne)
        } else if !(eigenvector_residual <= condition_i_tol) {
            Some(Condition::Eigenvector)
        } else if !coefficient_ok {
            Some(Condition::Coefficient)
        } else if !positive_ok {
            Some(Condition::Positivity)
        } else {
            None
        };
        let verdict = match identity_failure {
            Some(c) => Verdict::Fail(c),
            None if self.opts.mode == Mode::Strict && k != n => {
                Verdict::Fail(Condition::DistinctSpectrum)
            }
            None => Verdict::Pass,
        };

        Ok(CharacterizationResult {
            theorem: self.theorem,
            n,
            k,
            k_float,
            k_exact: self.k_exact,
            distinct_eigenvalues: distinct,
            condition_i_residuals,
            condition_i_tol,
            condition_ii_residual,
            condition_ii_tol,
            product_scale,
            coefficient_b,
            expected_b,
            alpha,
            eigenvector_residual,
            identity_failure,
            verdict,
        })
    }
}

fn validate_list<T: Real>(list: &[T]) -> Result<(), CharacterizationError> {
    if list.is_empty()
        || list.iter().any(|x| !Float::is_finite(*x))
        || list.windows(2).any(|w| !(w[0] > w[1]))
    {
        return Err(CharacterizationError::InvalidEigenvalues);
    }
    Ok(())
}

/// Groups descending `values` into `k` runs by cutting at the `k - 1` widest gaps.
pub(super) fn split_at_largest_gaps<T: Real>(values: &[T], k: usize) -> Vec<Range<usize>> {
    let mut gaps: Vec<usize> = (1..values.len()).collect();
    gaps.sort_by(|&a, &b| {
        let ga = values[a - 1] - values[a];
        let gb = values[b - 1] - values[b];
        gb.partial_cmp(&ga).expect("finite").then(a.cmp(&b))
    });
    let mut cuts = gaps[..k - 1].to_vec();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for c in cuts.into_iter().chain(std::iter::once(values.len())) {
        out.push(start..c);
        start = c;
    }
    out
}

fn group_means<T: Real>(values: &[T], groups: &[Range<usize>]) -> Vec<T> {
    groups
        .iter()
        .map(|r| {
            let sum = values[r.clone()].iter().fold(T::zero(), |a, &b| a + b);
            sum / T::from_usize(r.len()).expect("len")
        })
        .collect()
}

pub(super) fn eigenvector_converse<T: Real>(
    h: &SymMatrix<T>,
    tol: T,
) -> Result<bool, CharacterizationError> {
    if !(tol > T::zero() && Float::is_finite(tol)) {
        return Err(CharacterizationError::InvalidTolerance);
    }
    let n = h.n();
    if n == 0 {
        return Err(SpectraError::NotSquare.into());
    }
    let report: SpectrumReport<T> = eigh(h)?;
    if report.clusters[0].len() != 1 {
        return Err(CharacterizationError::SpectralRadiusNotSimple);
    }
    let distinct = report.distinct_values();
    let top = distinct[0];
    let f = eval_poly_matrix_float(&distinct[1..], h);
    let alpha = dominant_rank_one(&Hermitian::symmetrized(&f))?.y;
    let h_alpha = h.as_matrix().matvec(&alpha);
    let scaled: Vec<T> = alpha.iter().map(|&x| x * top).collect();
    let bound = tol * T::from_usize(n).expect("n") * T::one().max(h.max_abs());
    Ok(max_abs_diff(&h_alpha, &scaled) <= bound)
}
