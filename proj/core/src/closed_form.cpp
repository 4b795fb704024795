#include "andrasfai/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "andrasfai/errors.hpp"

namespace andrasfai {

namespace {

// cos(2 pi r / n) for an already-reduced residue r.
double unit_cos(std::size_t r, std::size_t n) {
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

double unit_sin(std::size_t r, std::size_t n) {
    return std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace

std::string_view to_string(SpectrumSource source) {
    switch (source) {
        case SpectrumSource::closed_form: return "closed-form";
        case SpectrumSource::general_circulant: return "general-circulant";
        case SpectrumSource::oracle: return "oracle";
    }
    return "unknown";
}

SpectrumSource parse_spectrum_source(std::string_view name) {
    if (name == "closed-form") return SpectrumSource::closed_form;
    if (name == "general-circulant") return SpectrumSource::general_circulant;
    if (name == "oracle") return SpectrumSource::oracle;
    throw ValidationError("unknown spectrum source '" + std::string(name) + "'");
}

double eigenvalue_closed_form(std::size_t k, std::size_t l) {
    if (k == 0) {
        throw InvalidParameter("eigenvalue_closed_form: k must be at least 1");
    }
    const std::size_t n = 3 * k - 1;
    if (l >= n) {
        throw IndexError("eigenvalue_closed_form: index " + std::to_string(l) + " outside Z_" + std::to_string(n));
    }
    if (l == 0) {
        return static_cast<double>(k);
    }
    // Residues 3j+1 for j < k/2 pair with their negations; for odd k the leftover residue
    // (3k-1)/2 is its own negation and contributes (-1)^l.
    const std::size_t paired = k / 2;
    double sum = 0.0;
    for (std::size_t j = 0; j < paired; ++j) {
        sum += unit_cos(((3 * j + 1) * l) % n, n);
    }
    double value = 2.0 * sum;
    if (k % 2 == 1) {
        value += (l % 2 == 0) ? 1.0 : -1.0;
    }
    return value;
}

Spectrum spectrum_closed_form(std::size_t k) {
    if (k == 0) {
        throw InvalidParameter("spectrum_closed_form: k must be at least 1");
    }
    const std::size_t n = 3 * k - 1;
    Spectrum s{k, std::vector<double>(n), SpectrumSource::closed_form};
    for (std::size_t l = 0; l < n; ++l) {
        s.values[l] = eigenvalue_closed_form(k, l);
    }
    return s;
}

Spectrum spectrum_general_circulant(std::span<const std::uint8_t> first_row, const Tolerances& tol) {
    const std::size_t n = first_row.size();
    if (n == 0) {
        throw ValidationError("general circulant: empty first row");
    }
    if (first_row[0] != 0) {
        throw ValidationError("general circulant: first_row[0] must be 0 (no self-loops)");
    }
    for (std::size_t j = 1; j < n; ++j) {
        if (first_row[j] > 1) {
            throw ValidationError("general circulant: entry " + std::to_string(j) + " is not 0/1");
        }
        if (first_row[j] != first_row[n - j]) {
            throw ValidationError("general circulant: first row is not negation-symmetric at index " +
                                  std::to_string(j));
        }
    }

    Spectrum s{std::nullopt, std::vector<double>(n), SpectrumSource::general_circulant};
    for (std::size_t l = 0; l < n; ++l) {
        double re = 0.0;
        double im = 0.0;
        for (std::size_t j = 1; j < n; ++j) {
            if (first_row[j] == 0) continue;
            const std::size_t r = (l * j) % n;
            re += unit_cos(r, n);
            im += unit_sin(r, n);
        }
        if (std::abs(im) >= tol.sym) {
            throw std::logic_error("general circulant: imaginary residue " + std::to_string(im) + " at l = " +
                                   std::to_string(l));
        }
        s.values[l] = re;
    }
    return s;
}

std::size_t MultiplicityTable::accidental_coincidences() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const auto& c) { return c.accidental_coincidence; }));
}

std::vector<std::size_t> MultiplicityTable::class_ids(std::size_t n) const {
    std::vector<std::size_t> ids(n, 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::size_t l : classes[c].indices) {
            if (l < n) ids[l] = c;
        }
    }
    return ids;
}

MultiplicityTable pair_multiplicities(const Spectrum& spectrum, double tol_cluster) {
    const std::size_t n = spectrum.n();
    const auto& x = spectrum.values;

    struct Structural {
        double value;
        std::vector<std::size_t> indices;
    };
    std::vector<Structural> structural;
    for (std::size_t l = 0; l < n; ++l) {
        const std::size_t mirror = (n - l) % n;
        if (mirror < l) continue;
        if (mirror == l) {
            structural.push_back({x[l], {l}});
        } else {
            structural.push_back({0.5 * (x[l] + x[mirror]), {l, mirror}});
        }
    }

    std::stable_sort(structural.begin(), structural.end(),
                     [](const Structural& a, const Structural& b) { return a.value < b.value; });

    MultiplicityTable table;
    double anchor = 0.0;
    for (auto& part : structural) {
        if (table.classes.empty() || part.value - anchor > tol_cluster) {
            table.classes.push_back({part.value, part.indices, false});
            anchor = part.value;
            continue;
        }
        auto& current = table.classes.back();
        current.indices.insert(current.indices.end(), part.indices.begin(), part.indices.end());
        current.accidental_coincidence = true;
    }

    for (auto& c : table.classes) {
        std::sort(c.indices.begin(), c.indices.end());
        double sum = 0.0;
        for (std::size_t l : c.indices) sum += x[l];
        c.value = sum / static_cast<double>(c.indices.size());
    }
    std::sort(table.classes.begin(), table.classes.end(),
              [](const MultiplicityClass& a, const MultiplicityClass& b) { return a.indices.front() < b.indices.front(); });
    return table;
}

SpectralPrediction predict(std::size_t k) {
    if (k < 2) {
        throw InvalidParameter("predict: the And(k) spectral theorems require k >= 2");
    }
    SpectralPrediction p;
    p.k = k;
    p.n = 3 * k - 1;
    p.distinct_count = k + (k + 1) / 2;
    p.smallest_indices = {k, 2 * k - 1};
    p.second_largest_indices = {k - 1, 2 * k};
    p.minus_one_expected = (k % 2 == 1);
    if (p.minus_one_expected) {
        p.minus_one_witness = p.n / 2;
    }
    p.plus_one_expected = (k % 4 == 3);
    if (p.plus_one_expected) {
        p.plus_one_witness = p.n / 4;
        p.plus_one_multiplicity = 2;
    }
    return p;
}

GcdCertificate gcd_certificate(std::size_t k) {
    if (k < 2) {
        throw InvalidParameter("gcd_certificate: k must be at least 2");
    }
    const std::size_t n = 3 * k - 1;
    GcdCertificate cert;
    cert.g = std::gcd(n, k + 1);
    if (cert.g == 1) {
        cert.a_equation_holds = true;
        return cert;
    }
    cert.s1 = n / cert.g;
    cert.s2 = (k + 1) / cert.g;
    const auto lhs = static_cast<long long>(cert.g) *
                     (3 * static_cast<long long>(cert.s2) - static_cast<long long>(cert.s1));
    cert.a_equation_holds = (lhs == 4);
    return cert;
}

}  // namespace andrasfai
