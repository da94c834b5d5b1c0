#include "agr/hypersurface.hpp"

#include <algorithm>

namespace agr {

HypersurfaceModule::HypersurfaceModule(int ring_exponent,
                                       std::vector<int> strand_lengths)
    : e_(ring_exponent), a_(std::move(strand_lengths)) {
    if (e_ < 1) throw precondition_error("HypersurfaceModule: e must be >= 1");
    if (a_.empty()) {
        throw precondition_error("HypersurfaceModule: at least one strand required");
    }
    std::sort(a_.begin(), a_.end());
    if (a_.front() < 1 || a_.back() > e_) {
        throw precondition_error(
            "HypersurfaceModule: strand lengths must satisfy 1 <= a_i <= e");
    }
}

LaurentPoly HypersurfaceModule::hilbert_series() const {
    LaurentPoly h;
    for (int ai : a_) {
        for (int j = 0; j < ai; ++j) h = h + LaurentPoly::monomial(j, 1);
    }
    return h;
}

Int HypersurfaceModule::e0() const {
    Int total = 0;
    for (int ai : a_) total += ai;
    return total;
}

LaurentPoly HypersurfaceModule::dual_filtration_dims() const {
    LaurentPoly d;
    for (int ai : a_) {
        for (int j = e_ - ai; j <= e_ - 1; ++j) {
            d = d + LaurentPoly::monomial(j, 1);
        }
    }
    return d;
}

bool HypersurfaceModule::is_ulrich() const { return a_.back() == 1; }

bool HypersurfaceModule::dual_is_adic_shift() const {
    return a_.front() == a_.back();
}

HypersurfaceModule::BabyUlrichReport HypersurfaceModule::baby_ulrich_check() const {
    return BabyUlrichReport{
        alpha() == ring_reduction_number(),
        is_ulrich(),
        a_invariant() == 0,
    };
}

bool HypersurfaceModule::lemma_halpha_check() const {
    return hilbert_series().coeff(a_.front()) < mu();
}

std::optional<int> gorenstein_shape_check(const LaurentPoly& h, const Int& ell) {
    if (h.is_zero() || ell <= 0) return std::nullopt;
    if (h.min_degree() != 0) return std::nullopt;
    const int s = h.max_degree() + 1;
    for (int j = 0; j < s; ++j) {
        if (h.coeff(j) != ell) return std::nullopt;
    }
    return s;
}

} // namespace agr
