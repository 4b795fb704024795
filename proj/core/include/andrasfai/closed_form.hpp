#pragma once

// Adjacency spectra of circulant graphs and the index-level predictions for And(k).
//
// For a circulant with first row a_0..a_{n-1} the eigenvalues are x_l = sum_j a_j w^{lj}, w = e^{2 pi i/n}.
// For And(k) the connection set is {3j+1}, and pairing 3j+1 with n-(3j+1) collapses the sum into
// cosines:
//   k even: x_l = 2 sum_{j=0}^{(k-2)/2} cos(2(3j+1) l pi / n)
//   k odd:  x_l = 2 sum_{j=0}^{(k-3)/2} cos(2(3j+1) l pi / n) + (-1)^l
// The unpaired middle residue n/2 (k odd) contributes w^{l n/2} = (-1)^l.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "andrasfai/tolerances.hpp"

namespace andrasfai {

enum class SpectrumSource { closed_form, general_circulant, oracle };

std::string_view to_string(SpectrumSource source);
SpectrumSource parse_spectrum_source(std::string_view name);

// Indexed eigenvalue list: values[l] = x_l.
struct Spectrum {
    std::optional<std::size_t> k;
    std::vector<double> values;
    SpectrumSource source = SpectrumSource::closed_form;

    std::size_t n() const noexcept { return values.size(); }
};

// x_l of And(k). k >= 1 (k = 1 uses the empty-sum convention and gives (-1)^l); l in [0, 3k-2].
// x_0 is returned as exactly k without evaluating any cosine.
// Throws InvalidParameter for k = 0 and IndexError for l out of range.
double eigenvalue_closed_form(std::size_t k, std::size_t l);

Spectrum spectrum_closed_form(std::size_t k);

// Real spectrum of the circulant with the given 0/1 first row. Requires first_row[0] = 0 and
// first_row[j] = first_row[n-j]; throws ValidationError otherwise.
Spectrum spectrum_general_circulant(std::span<const std::uint8_t> first_row, const Tolerances& tol = {});

struct MultiplicityClass {
    double value = 0.0;                // mean of member values
    std::vector<std::size_t> indices;  // sorted residues
    // More than one structural class {l, n-l} was merged numerically into this one.
    bool accidental_coincidence = false;

    std::size_t multiplicity() const noexcept { return indices.size(); }
};

struct MultiplicityTable {
    // Ordered by smallest member index, so class 0 always contains index 0.
    std::vector<MultiplicityClass> classes;

    std::size_t accidental_coincidences() const;
    // Class id for every index, length n.
    std::vector<std::size_t> class_ids(std::size_t n) const;
};

// Groups indices by the pairing l <-> n-l first, then merges structural classes whose values agree
// within tol_cluster and flags every such merge.
MultiplicityTable pair_multiplicities(const Spectrum& spectrum, double tol_cluster = Tolerances{}.cluster);

struct SpectralPrediction {
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t distinct_count = 0;
    std::pair<std::size_t, std::size_t> smallest_indices;
    std::pair<std::size_t, std::size_t> second_largest_indices;
    bool minus_one_expected = false;
    std::optional<std::size_t> minus_one_witness;
    bool plus_one_expected = false;
    std::optional<std::size_t> plus_one_witness;
    // +1 sits at n/4 and 3n/4, which the pairing makes a multiplicity-2 class.
    std::size_t plus_one_multiplicity = 0;
};

// Integer-only predictions for And(k), k >= 2.
SpectralPrediction predict(std::size_t k);

struct GcdCertificate {
    std::size_t g = 0;   // gcd(3k-1, k+1)
    std::size_t s1 = 0;  // (3k-1)/g, set only when g > 1
    std::size_t s2 = 0;  // (k+1)/g, set only when g > 1
    // 4 = g (3 s2 - s1); vacuously true when g = 1.
    bool a_equation_holds = false;
};

GcdCertificate gcd_certificate(std::size_t k);

}  // namespace andrasfai
