#include "agr/monomial.hpp"

#include <algorithm>

namespace agr {

namespace {

bool divides(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

std::vector<std::array<int, 3>> minimalize(std::vector<std::array<int, 3>> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<std::array<int, 3>> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i != j && divides(gens[j], gens[i])) redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<std::vector<int>> generators)
    : nvars_(nvars) {
    if (nvars_ != 2 && nvars_ != 3) {
        throw precondition_error("MonomialIdeal: only 2 or 3 variables supported");
    }
    if (generators.empty()) {
        throw precondition_error("MonomialIdeal: at least one generator required");
    }
    std::vector<std::array<int, 3>> gens;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != nvars_) {
            throw precondition_error("MonomialIdeal: exponent vector length mismatch");
        }
        std::array<int, 3> e{0, 0, 0};
        bool zero = true;
        for (int i = 0; i < nvars_; ++i) {
            if (g[static_cast<size_t>(i)] < 0) {
                throw precondition_error("MonomialIdeal: negative exponent");
            }
            e[static_cast<size_t>(i)] = g[static_cast<size_t>(i)];
            zero = zero && g[static_cast<size_t>(i)] == 0;
        }
        if (zero) {
            throw precondition_error("MonomialIdeal: the unit generator is not allowed");
        }
        gens.push_back(e);
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_m_primary() const {
    for (int v = 0; v < nvars_; ++v) {
        bool pure = false;
        for (const auto& g : gens_) {
            bool ok = g[static_cast<size_t>(v)] > 0;
            for (int w = 0; w < nvars_ && ok; ++w) {
                if (w != v && g[static_cast<size_t>(w)] != 0) ok = false;
            }
            if (ok) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

long long MonomialIdeal::colength() const {
    if (!is_m_primary()) {
        throw not_primary("colength: ideal is not primary to the maximal ideal");
    }
    std::array<long long, 3> box{1, 1, 1};
    for (int v = 0; v < nvars_; ++v) {
        for (const auto& g : gens_) {
            bool pure = g[static_cast<size_t>(v)] > 0;
            for (int w = 0; w < nvars_ && pure; ++w) {
                if (w != v && g[static_cast<size_t>(w)] != 0) pure = false;
            }
            if (pure) box[static_cast<size_t>(v)] = g[static_cast<size_t>(v)];
        }
    }

    // A point survives iff it is below the staircase: in each column the
    // surviving y (resp. z) run up to the smallest applicable generator
    // exponent.
    long long count = 0;
    if (nvars_ == 2) {
        for (long long x = 0; x < box[0]; ++x) {
            long long min_y = box[1];
            for (const auto& g : gens_) {
                if (g[0] <= x && g[1] < min_y) min_y = g[1];
            }
            count += min_y;
        }
    } else {
        for (long long x = 0; x < box[0]; ++x) {
            for (long long y = 0; y < box[1]; ++y) {
                long long min_z = box[2];
                for (const auto& g : gens_) {
                    if (g[0] <= x && g[1] <= y && g[2] < min_z) min_z = g[2];
                }
                count += min_z;
            }
        }
    }
    return count;
}

namespace {

std::vector<std::array<int, 3>> multiply(const std::vector<std::array<int, 3>>& a,
                                         const std::vector<std::array<int, 3>>& b) {
    std::vector<std::array<int, 3>> products;
    products.reserve(a.size() * b.size());
    for (const auto& u : a) {
        for (const auto& v : b) {
            products.push_back({u[0] + v[0], u[1] + v[1], u[2] + v[2]});
        }
    }
    return minimalize(std::move(products));
}

} // namespace

MonomialIdeal MonomialIdeal::power(int n) const {
    if (n < 1) throw precondition_error("power: exponent must be >= 1");
    MonomialIdeal out = *this;
    for (int k = 1; k < n; ++k) out.gens_ = multiply(out.gens_, gens_);
    return out;
}

std::vector<long long> MonomialIdeal::colength_sequence(int n_top) const {
    std::vector<long long> lengths;
    lengths.reserve(static_cast<size_t>(n_top) + 1);
    lengths.push_back(0); // unit ideal
    MonomialIdeal pw = *this;
    for (int n = 1; n <= n_top; ++n) {
        lengths.push_back(pw.colength());
        if (n < n_top) pw.gens_ = multiply(pw.gens_, gens_);
    }
    return lengths;
}

long long MonomialIdeal::hilbert_function(int n) const {
    if (n < 0) throw precondition_error("hilbert_function: negative index");
    const long long upper = power(n + 1).colength();
    const long long lower = n == 0 ? 0 : power(n).colength();
    return upper - lower;
}

LaurentPoly MonomialIdeal::h_polynomial(const FitOptions& opts) const {
    int max_pure = 1;
    for (const auto& g : gens_) {
        max_pure = std::max({max_pure, g[0], g[1], g[2]});
    }
    int n_top = std::min(std::max(4 * max_pure, opts.window + 2), opts.max_n);
    for (;;) {
        const std::vector<long long> lengths = colength_sequence(n_top + 1);
        std::vector<long long> values(static_cast<size_t>(n_top) + 1);
        for (int n = 0; n <= n_top; ++n) {
            values[static_cast<size_t>(n)] =
                lengths[static_cast<size_t>(n) + 1] - lengths[static_cast<size_t>(n)];
        }
        try {
            return fit_h_polynomial(values, nvars_, opts.window);
        } catch (const not_stabilized&) {
            if (n_top >= opts.max_n) throw;
            n_top = std::min(2 * n_top, opts.max_n);
        }
    }
}

bool MonomialIdeal::is_parameter_ideal() const {
    if (!is_m_primary()) {
        throw not_primary("is_parameter_ideal: ideal is not m-primary");
    }
    return static_cast<int>(gens_.size()) == nvars_;
}

Dim2Classification MonomialIdeal::classify_dim2(const FitOptions& opts) const {
    if (nvars_ != 2) {
        throw wrong_dimension("classify_dim2: requires exactly 2 variables");
    }
    Dim2Classification out;
    out.h = h_polynomial(opts);
    out.e0 = hilbert_coefficient(out.h, 0);
    out.e1 = hilbert_coefficient(out.h, 1);
    out.e2 = hilbert_coefficient(out.h, 2);
    out.parameter_ideal = is_parameter_ideal();
    if (out.parameter_ideal) {
        out.a_invariant = -2;
        out.a_invariant_known = true;
    } else if (out.e2 == 0) {
        out.a_invariant = -1;
        out.a_invariant_known = true;
    } else {
        out.a_invariant = 0; // only the lower bound a >= 0 is known
        out.a_invariant_known = false;
    }
    out.minimal_multiplicity_shape = !out.h.is_zero() && out.h.max_degree() <= 1;
    return out;
}

} // namespace agr
