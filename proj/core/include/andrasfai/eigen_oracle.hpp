#pragma once

// Dense cyclic Jacobi eigensolver used as an independent check on the closed-form spectra.
// It works on an explicitly materialized matrix and knows nothing about circulant structure.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "andrasfai/circulant.hpp"
#include "andrasfai/closed_form.hpp"

namespace andrasfai {

// Dense real square matrix, row-major.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    // Row-major n*n values; throws LengthMismatch if the size is not n*n.
    SymmetricMatrix(std::size_t n, std::vector<double> row_major);
    static SymmetricMatrix from_adjacency(const AdjacencyMatrix& a);

    std::size_t n() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double* row(std::size_t i) noexcept { return data_.data() + i * n_; }

    double trace() const;

private:
    std::size_t n_;
    std::vector<double> data_;
};

struct OracleResult {
    std::vector<double> sorted_values;  // ascending
    std::size_t iterations = 0;         // completed sweeps
    double off_diagonal_norm = 0.0;     // Frobenius norm of the off-diagonal part at return

    std::size_t n() const noexcept { return sorted_values.size(); }
};

inline constexpr std::size_t kMaxJacobiSweeps = 100;

// Cyclic-by-row Jacobi: each sweep visits (p, q), p < q, in row-major order of the upper
// triangle. Iterates until the off-diagonal Frobenius norm drops below threshold
// (default 1e-12 * n). Throws ValidationError if the input is not symmetric within 1e-12 and
// ConvergenceError once max_sweeps sweeps have not reached the threshold.
OracleResult jacobi_eigenvalues(SymmetricMatrix m, std::optional<double> threshold = std::nullopt,
                                std::size_t max_sweeps = kMaxJacobiSweeps);
OracleResult jacobi_eigenvalues(const AdjacencyMatrix& m, std::optional<double> threshold = std::nullopt,
                                std::size_t max_sweeps = kMaxJacobiSweeps);

struct SpectrumComparison {
    double max_abs_dev = 0.0;
    bool matched = false;
};

// Sorts the spectrum and compares positionally; matched iff max_abs_dev < tol.
// Throws LengthMismatch if the sizes differ.
SpectrumComparison compare_spectra(const Spectrum& a, const OracleResult& b, double tol = Tolerances{}.match);

struct ValueCluster {
    double value = 0.0;  // mean of members
    std::size_t multiplicity = 0;
};

// Greedy left-to-right clustering of ascending values: a new cluster starts whenever a value is
// more than tol above the current cluster's first member.
std::vector<ValueCluster> cluster_distinct(std::span<const double> sorted_values, double tol);

}  // namespace andrasfai
