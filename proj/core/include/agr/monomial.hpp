#ifndef AGR_MONOMIAL_HPP
#define AGR_MONOMIAL_HPP

#include <array>
#include <vector>

#include "agr/laurent.hpp"

namespace agr {

struct FitOptions {
    int window = kDefaultFitWindow;
    int max_n = 128;
};

struct Dim2Classification {
    LaurentPoly h;
    Int e0, e1, e2;
    bool parameter_ideal = false;
    /// a(G) value when pinned down: -2 for parameter ideals, -1 when e2 = 0;
    /// otherwise only the bound a >= 0 is known.
    int a_invariant = 0;
    bool a_invariant_known = false;
    /// h = h0 + h1 z exactly; sufficient for minimal multiplicity, necessary
    /// only for integrally closed ideals.
    bool minimal_multiplicity_shape = false;
};

/// Monomial ideal in 2 or 3 variables given by its minimal generators
/// (exponent vectors).  Construction drops non-minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<std::vector<int>> generators);

    int nvars() const { return nvars_; }
    const std::vector<std::array<int, 3>>& generators() const { return gens_; }

    /// Every variable appears as a pure power among the generators.
    bool is_m_primary() const;

    /// Colength ℓ(A/I): lattice points divisible by no generator, counted
    /// inside the box bounded by the pure-power exponents.  Throws
    /// not_primary when the count would be infinite.
    long long colength() const;

    /// Minimal generators of I^n (n >= 1): n-fold products filtered by
    /// divisibility.
    MonomialIdeal power(int n) const;

    /// H(n) = ℓ(I^n / I^{n+1}) = colength(I^{n+1}) - colength(I^n), with
    /// I^0 the unit ideal.
    long long hilbert_function(int n) const;

    /// h-polynomial of the associated graded ring, dimension = nvars.
    /// Doubles the sample length adaptively starting from four times the
    /// largest pure-power exponent; throws not_stabilized past opts.max_n.
    LaurentPoly h_polynomial(const FitOptions& opts = {}) const;

    /// Generated by exactly nvars elements, i.e. by a regular sequence.
    bool is_parameter_ideal() const;

    /// Borderline a-invariant classification for two variables; throws
    /// wrong_dimension otherwise.
    Dim2Classification classify_dim2(const FitOptions& opts = {}) const;

    bool operator==(const MonomialIdeal& rhs) const {
        return nvars_ == rhs.nvars_ && gens_ == rhs.gens_;
    }

private:
    std::vector<long long> colength_sequence(int n_top) const;

    int nvars_;
    std::vector<std::array<int, 3>> gens_;
};

} // namespace agr

#endif
