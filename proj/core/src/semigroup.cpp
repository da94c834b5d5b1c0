#include "agr/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace agr {

SemigroupModule SemigroupModule::from_parts(std::vector<long long> elements,
                                            long long threshold) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    // Absorb elements at or above the threshold, then lower it while the
    // element just below is present.
    while (!elements.empty() && elements.back() >= threshold) elements.pop_back();
    while (!elements.empty() && elements.back() == threshold - 1) {
        elements.pop_back();
        --threshold;
    }
    SemigroupModule m;
    m.sporadic_ = std::move(elements);
    m.threshold_ = threshold;
    return m;
}

bool SemigroupModule::contains(long long x) const {
    if (x >= threshold_) return true;
    return std::binary_search(sporadic_.begin(), sporadic_.end(), x);
}

std::vector<long long> SemigroupModule::elements_below(long long bound) const {
    std::vector<long long> out;
    for (long long s : sporadic_) {
        if (s < bound) out.push_back(s);
    }
    for (long long x = threshold_; x < bound; ++x) out.push_back(x);
    return out;
}

SemigroupModule SemigroupModule::shifted(long long a) const {
    SemigroupModule out;
    out.sporadic_ = sporadic_;
    for (long long& s : out.sporadic_) s += a;
    out.threshold_ = threshold_ + a;
    return out;
}

SemigroupModule SemigroupModule::unioned(const SemigroupModule& other) const {
    const long long t = std::min(threshold_, other.threshold_);
    std::vector<long long> elems = elements_below(t);
    for (long long s : other.elements_below(t)) elems.push_back(s);
    return from_parts(std::move(elems), t);
}

SemigroupModule SemigroupModule::intersected(const SemigroupModule& other) const {
    const long long t = std::max(threshold_, other.threshold_);
    std::vector<long long> elems;
    for (long long s : elements_below(t)) {
        if (other.contains(s)) elems.push_back(s);
    }
    return from_parts(std::move(elems), t);
}

SemigroupModule SemigroupModule::plus(const SemigroupModule& other) const {
    // [t1 + t2, ∞) is always contained in the sum; a summand contributing
    // below that line is bounded by t minus the other side's minimum.
    const long long t = threshold_ + other.threshold_;
    auto min_of = [](const SemigroupModule& m) {
        return m.sporadic_.empty() ? m.threshold_ : m.sporadic_.front();
    };
    std::set<long long> acc;
    for (long long a : elements_below(t - min_of(other))) {
        for (long long b : other.elements_below(t - a)) {
            acc.insert(a + b);
        }
    }
    std::vector<long long> elems(acc.begin(), acc.end());
    return from_parts(std::move(elems), t);
}

bool SemigroupModule::subset_of(const SemigroupModule& other) const {
    if (threshold_ < other.threshold_) {
        for (long long x = threshold_; x < other.threshold_; ++x) {
            if (!other.contains(x)) return false;
        }
    }
    for (long long s : sporadic_) {
        if (!other.contains(s)) return false;
    }
    return true;
}

long long difference_count(const SemigroupModule& outer,
                           const SemigroupModule& inner) {
    const long long bound = std::max(outer.threshold(), inner.threshold());
    long long count = 0;
    for (long long s : outer.elements_below(bound)) {
        if (!inner.contains(s)) ++count;
    }
    return count;
}

long long quotient_length(const SemigroupModule& outer,
                          const SemigroupModule& inner) {
    if (!inner.subset_of(outer)) {
        throw not_submodule("quotient_length: inner set is not contained in outer");
    }
    return difference_count(outer, inner);
}

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators)
    : cache_(std::make_shared<PowerCache>()) {
    if (generators.empty()) {
        throw precondition_error("NumericalSemigroup: empty generator list");
    }
    for (long long g : generators) {
        if (g < 1) {
            throw precondition_error("NumericalSemigroup: generators must be positive");
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());
    long long g = 0;
    for (long long x : generators) g = std::gcd(g, x);
    if (g != 1) {
        throw precondition_error(
            "NumericalSemigroup: generators must have gcd 1");
    }

    // Reachability sieve, doubled until a full run of smallest-generator many
    // consecutive members appears; from there on everything is a member.
    const long long a_min = generators.front();
    const long long a_max = generators.back();
    long long bound = a_min * a_max + a_max + 1;
    std::vector<char> reach;
    long long run_start = -1;
    for (;;) {
        reach.assign(static_cast<size_t>(bound), 0);
        reach[0] = 1;
        for (long long x = 1; x < bound; ++x) {
            for (long long gen : generators) {
                if (x >= gen && reach[static_cast<size_t>(x - gen)]) {
                    reach[static_cast<size_t>(x)] = 1;
                    break;
                }
            }
        }
        long long run = 0;
        for (long long x = 0; x < bound; ++x) {
            run = reach[static_cast<size_t>(x)] ? run + 1 : 0;
            if (run == a_min) {
                run_start = x - a_min + 1;
                break;
            }
        }
        if (run_start >= 0) break;
        bound *= 2;
    }
    long long c = run_start;
    while (c > 0 && reach[static_cast<size_t>(c - 1)]) --c;
    conductor_ = c;
    members_.assign(reach.begin(), reach.begin() + static_cast<long>(conductor_));

    // Reduce to the minimal generating system: a candidate is redundant iff
    // it is the sum of two nonzero members, i.e. some smaller generator can
    // be subtracted while staying in S.
    for (long long cand : generators) {
        bool redundant = false;
        for (long long other : generators) {
            if (other >= cand) break;
            if (contains(cand - other)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens_.push_back(cand);
    }
}

bool NumericalSemigroup::contains(long long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return members_[static_cast<size_t>(x)] != 0;
}

std::vector<long long> NumericalSemigroup::gaps() const {
    std::vector<long long> out;
    for (long long x = 0; x < conductor_; ++x) {
        if (!contains(x)) out.push_back(x);
    }
    return out;
}

bool NumericalSemigroup::has_symmetric_gaps() const {
    const long long f = frobenius();
    for (long long z = 0; z <= f; ++z) {
        if (contains(z) == contains(f - z)) return false;
    }
    return true;
}

long long NumericalSemigroup::type() const {
    long long count = 0;
    for (long long z = -1; z <= frobenius(); ++z) {
        if (contains(z)) continue;
        bool pseudo = true;
        for (long long g : gens_) {
            if (!contains(z + g)) {
                pseudo = false;
                break;
            }
        }
        if (pseudo) ++count;
    }
    return count;
}

SemigroupModule NumericalSemigroup::as_module() const {
    std::vector<long long> elems;
    for (long long x = 0; x < conductor_; ++x) {
        if (contains(x)) elems.push_back(x);
    }
    return SemigroupModule::from_parts(std::move(elems), conductor_);
}

std::vector<long long> NumericalSemigroup::apery_set(long long a) const {
    if (a <= 0 || !contains(a)) {
        throw not_member("apery_set: element is not a member of the semigroup");
    }
    std::vector<long long> smallest(static_cast<size_t>(a), -1);
    long long found = 0;
    for (long long x = 0; found < a; ++x) {
        if (!contains(x)) continue;
        long long& slot = smallest[static_cast<size_t>(x % a)];
        if (slot < 0) {
            slot = x;
            ++found;
        }
    }
    return smallest;
}

namespace {

// M_{n+1} = union over generators g of (g + M_n).
void extend_levels(std::vector<SemigroupModule>& levels,
                   const std::vector<long long>& gens, int n) {
    while (static_cast<int>(levels.size()) <= n) {
        const SemigroupModule& prev = levels.back();
        SemigroupModule next = prev.shifted(gens.front());
        for (size_t i = 1; i < gens.size(); ++i) {
            next = next.unioned(prev.shifted(gens[i]));
        }
        levels.push_back(std::move(next));
    }
}

} // namespace

SemigroupModule NumericalSemigroup::power_module(int n) const {
    if (n < 0) throw precondition_error("power_module: negative exponent");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& powers = cache_->powers;
    if (powers.empty()) powers.push_back(as_module());
    extend_levels(powers, gens_, n);
    return powers[static_cast<size_t>(n)];
}

SemigroupModule NumericalSemigroup::canonical_power_module(int n) const {
    if (n < 0) throw precondition_error("canonical_power_module: negative exponent");
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto& levels = cache_->canonical_levels;
    if (levels.empty()) levels.push_back(canonical_module());
    extend_levels(levels, gens_, n);
    return levels[static_cast<size_t>(n)];
}

long long NumericalSemigroup::hilbert_function_ring(int n) const {
    return quotient_length(power_module(n), power_module(n + 1));
}

long long NumericalSemigroup::artin_quotient_hf(int n) const {
    const SemigroupModule killed =
        power_module(n + 1).unioned(as_module().shifted(smallest_generator()));
    return difference_count(power_module(n), killed);
}

int NumericalSemigroup::reduction_number() const {
    const long long a = smallest_generator();
    for (int n = 0;; ++n) {
        if (power_module(n + 1) == power_module(n).shifted(a)) return n;
    }
}

long long NumericalSemigroup::delta_invariant() const {
    const long long a = smallest_generator();
    const SemigroupModule principal = as_module().shifted(a);
    const int r = reduction_number();
    long long delta = 0;
    for (int n = 0; n < r; ++n) {
        const SemigroupModule numerator =
            power_module(n + 1).intersected(principal);
        delta += quotient_length(numerator, power_module(n).shifted(a));
    }
    return delta;
}

bool NumericalSemigroup::assoc_graded_is_cm() const {
    return delta_invariant() == 0;
}

SemigroupModule NumericalSemigroup::canonical_module() const {
    const long long f = frobenius();
    std::vector<long long> elems;
    for (long long gap : gaps()) elems.push_back(f - gap);
    return SemigroupModule::from_parts(std::move(elems), f + 1);
}

long long NumericalSemigroup::canonical_quotient_hf(int n) const {
    const SemigroupModule level = canonical_power_module(n);
    const SemigroupModule killed = canonical_power_module(n + 1).unioned(
        canonical_module().shifted(smallest_generator()));
    return difference_count(level, killed);
}

namespace {

std::vector<long long> sample(const NumericalSemigroup& s,
                              long long (NumericalSemigroup::*fn)(int) const,
                              int n_top) {
    std::vector<long long> values;
    values.reserve(static_cast<size_t>(n_top) + 1);
    for (int n = 0; n <= n_top; ++n) values.push_back((s.*fn)(n));
    return values;
}

} // namespace

LaurentPoly NumericalSemigroup::ring_h_polynomial(int window) const {
    // H is constantly e_0 past the reduction number, so r + window + 1 values
    // always stabilize the fit.
    const int n_top = reduction_number() + window + 1;
    return fit_h_polynomial(
        sample(*this, &NumericalSemigroup::hilbert_function_ring, n_top), 1,
        window);
}

LaurentPoly NumericalSemigroup::artin_h_polynomial(int window) const {
    const int n_top = reduction_number() + window + 1;
    return fit_h_polynomial(
        sample(*this, &NumericalSemigroup::artin_quotient_hf, n_top), 0, window);
}

LaurentPoly NumericalSemigroup::canonical_h_polynomial(int window) const {
    const int n_top = reduction_number() + window + 1;
    return fit_h_polynomial(
        sample(*this, &NumericalSemigroup::canonical_quotient_hf, n_top), 0,
        window);
}

bool NumericalSemigroup::canonical_criterion(int window) const {
    const LaurentPoly lhs = canonical_h_polynomial(window);
    const LaurentPoly rhs = reverse(artin_h_polynomial(window), reduction_number());
    return lhs == rhs;
}

Dim1Classification NumericalSemigroup::classify_dim1(int window) const {
    if (!assoc_graded_is_cm()) {
        throw precondition_error(
            "classify_dim1: associated graded ring is not Cohen-Macaulay; "
            "the a-invariant cannot be read from the h-polynomial");
    }
    Dim1Classification out;
    out.h = ring_h_polynomial(window);
    out.a_invariant = out.h.max_degree() - 1;
    out.regular = out.a_invariant == -1;
    out.minimal_multiplicity = out.a_invariant == 0;
    return out;
}

long long NumericalSemigroup::element_order(long long s) const {
    int n = 0;
    while (power_module(n + 1).contains(s)) ++n;
    return n;
}

GradedAlgebra NumericalSemigroup::build_artinian_graded() const {
    if (delta_invariant() != 0) {
        throw precondition_error(
            "build_artinian_graded: requires delta = 0 so the quotient "
            "represents the Artinian reduction faithfully");
    }
    const long long a = smallest_generator();
    std::vector<long long> apery = apery_set(a);

    // Basis ordered by (order, value); the order of an Apery element is
    // bounded by the reduction number.
    std::vector<std::pair<long long, long long>> basis;
    basis.reserve(apery.size());
    for (long long s : apery) basis.emplace_back(element_order(s), s);
    std::sort(basis.begin(), basis.end());

    const int top = static_cast<int>(basis.back().first);
    std::vector<int> dims(static_cast<size_t>(top) + 1, 0);
    for (const auto& [deg, s] : basis) dims[static_cast<size_t>(deg)] += 1;

    auto index_in_degree = [&](long long value, long long deg) {
        int idx = 0;
        for (const auto& [d, s] : basis) {
            if (d != deg) continue;
            if (s == value) return idx;
            ++idx;
        }
        return -1;
    };
    auto is_apery = [&](long long value) {
        return std::find(apery.begin(), apery.end(), value) != apery.end();
    };

    std::vector<long long> degree_one;
    for (const auto& [deg, s] : basis) {
        if (deg == 1) degree_one.push_back(s);
    }

    std::vector<std::vector<RationalMatrix>> action;
    for (long long g : degree_one) {
        std::vector<RationalMatrix> per_degree;
        for (int j = 0; j < top; ++j) {
            RationalMatrix m(dims[static_cast<size_t>(j) + 1],
                             dims[static_cast<size_t>(j)]);
            int col = 0;
            for (const auto& [deg, s] : basis) {
                if (deg != j) continue;
                const long long product = s + g;
                if (is_apery(product) && element_order(product) == j + 1) {
                    m.at(index_in_degree(product, j + 1), col) = 1;
                }
                ++col;
            }
            per_degree.push_back(std::move(m));
        }
        action.push_back(std::move(per_degree));
    }
    return GradedAlgebra(std::move(dims), std::move(action));
}

} // namespace agr
