#include "andrasfai/eigen_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "andrasfai/errors.hpp"

namespace andrasfai {

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
    if (data_.size() != n_ * n_) {
        throw LengthMismatch("SymmetricMatrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                             std::to_string(data_.size()));
    }
}

SymmetricMatrix SymmetricMatrix::from_adjacency(const AdjacencyMatrix& a) {
    SymmetricMatrix m(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            m(i, j) = a(i, j);
        }
    }
    return m;
}

double SymmetricMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

double off_diagonal_norm(const SymmetricMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = i + 1; j < a.n(); ++j) {
            sum += a(i, j) * a(i, j);
        }
    }
    return std::sqrt(2.0 * sum);
}

// Rotations (p, q), q = p+1 .. n-1, of one cyclic-by-row sweep.
//
// Each rotation rewrites rows p and q as contiguous vectors and skips the mirrored column
// writes. Invariant on entry: the matrix is symmetric in rows >= p. While the pivot row runs,
// the current value of a(i, j) lives in whichever of rows i, j was rotated last: row p for
// column p, and row c for a(c, q) when p < c < q. Row q pulls those in before it is rotated.
// On exit the lower triangle is current everywhere, and the upper triangle is current in rows
// > p; rows < p are not read again this sweep and are refreshed by symmetrize_from_lower().
void sweep_pivot_row(SymmetricMatrix& a, std::size_t p, double skip_below) {
    const std::size_t n = a.n();
    double* __restrict rp = a.row(p);
    for (std::size_t q = p + 1; q < n; ++q) {
        double* __restrict rq = a.row(q);
        rq[p] = rp[q];
        for (std::size_t c = p + 1; c < q; ++c) {
            rq[c] = a(c, q);
        }

        const double apq = rp[q];
        if (std::abs(apq) < skip_below) {
            continue;
        }
        const double app = rp[p];
        const double aqq = rq[q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
            const double xp = rp[r];
            const double xq = rq[r];
            rp[r] = c * xp - s * xq;
            rq[r] = s * xp + c * xq;
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0.0;
        rq[p] = 0.0;
    }

    for (std::size_t r = p + 1; r < n; ++r) {
        a(r, p) = rp[r];
    }
    // Upper triangle of the trailing block from its lower triangle, in tiles.
    constexpr std::size_t kTile = 16;
    for (std::size_t j0 = p + 1; j0 < n; j0 += kTile) {
        const std::size_t j1 = std::min(n, j0 + kTile);
        for (std::size_t i0 = p + 1; i0 < j1; i0 += kTile) {
            const std::size_t i1 = std::min(j1, i0 + kTile);
            for (std::size_t i = i0; i < i1; ++i) {
                double* ri = a.row(i);
                for (std::size_t j = std::max(j0, i + 1); j < j1; ++j) {
                    ri[j] = a(j, i);
                }
            }
        }
    }
}

void symmetrize_from_lower(SymmetricMatrix& a) {
    for (std::size_t i = 0; i < a.n(); ++i) {
        double* ri = a.row(i);
        for (std::size_t j = i + 1; j < a.n(); ++j) {
            ri[j] = a(j, i);
        }
    }
}

}  // namespace

OracleResult jacobi_eigenvalues(SymmetricMatrix a, std::optional<double> threshold, std::size_t max_sweeps) {
    const std::size_t n = a.n();
    if (n == 0) {
        throw ValidationError("jacobi_eigenvalues: empty matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(a(i, i))) {
            throw ValidationError("jacobi_eigenvalues: non-finite diagonal entry " + std::to_string(i));
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!std::isfinite(a(i, j)) || !std::isfinite(a(j, i))) {
                throw ValidationError("jacobi_eigenvalues: non-finite entry at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
            if (std::abs(a(i, j) - a(j, i)) > 1e-12) {
                throw ValidationError("jacobi_eigenvalues: matrix not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
    }
    const double limit = threshold.value_or(1e-12 * static_cast<double>(n));
    if (!(limit > 0.0)) {
        throw InvalidParameter("jacobi_eigenvalues: threshold must be positive");
    }

    // Entries below skip_below are left alone: even if all n(n-1)/2 of them survive a sweep,
    // their contribution to the off-diagonal norm is at most limit / sqrt(2).
    const double skip_below = limit / static_cast<double>(n);

    OracleResult result;
    double off = off_diagonal_norm(a);
    while (off >= limit) {
        if (result.iterations == max_sweeps) {
            throw ConvergenceError(off, result.iterations);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            sweep_pivot_row(a, p, skip_below);
        }
        symmetrize_from_lower(a);
        ++result.iterations;
        off = off_diagonal_norm(a);
    }

    result.off_diagonal_norm = off;
    result.sorted_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.sorted_values[i] = a(i, i);
    std::sort(result.sorted_values.begin(), result.sorted_values.end());
    return result;
}

OracleResult jacobi_eigenvalues(const AdjacencyMatrix& m, std::optional<double> threshold, std::size_t max_sweeps) {
    return jacobi_eigenvalues(SymmetricMatrix::from_adjacency(m), threshold, max_sweeps);
}

SpectrumComparison compare_spectra(const Spectrum& a, const OracleResult& b, double tol) {
    if (a.n() != b.n()) {
        throw LengthMismatch("compare_spectra: spectrum has " + std::to_string(a.n()) + " values, oracle has " +
                             std::to_string(b.n()));
    }
    std::vector<double> sorted = a.values;
    std::sort(sorted.begin(), sorted.end());
    SpectrumComparison cmp;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cmp.max_abs_dev = std::max(cmp.max_abs_dev, std::abs(sorted[i] - b.sorted_values[i]));
    }
    cmp.matched = cmp.max_abs_dev < tol;
    return cmp;
}

std::vector<ValueCluster> cluster_distinct(std::span<const double> sorted_values, double tol) {
    std::vector<ValueCluster> clusters;
    double first = 0.0;
    double sum = 0.0;
    for (double v : sorted_values) {
        if (clusters.empty() || v - first > tol) {
            if (!clusters.empty()) clusters.back().value = sum / static_cast<double>(clusters.back().multiplicity);
            clusters.push_back({v, 0});
            first = v;
            sum = 0.0;
        }
        sum += v;
        ++clusters.back().multiplicity;
    }
    if (!clusters.empty()) clusters.back().value = sum / static_cast<double>(clusters.back().multiplicity);
    return clusters;
}

}  // namespace andrasfai
