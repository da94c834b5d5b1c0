#ifndef AGR_SEMIGROUP_HPP
#define AGR_SEMIGROUP_HPP

#include <memory>
#include <mutex>
#include <vector>

#include "agr/gradedhom.hpp"
#include "agr/laurent.hpp"

namespace agr {

/// S-stable subset E of the integers in canonical form:
/// E = sporadic ∪ [threshold, ∞) with every sporadic element below the
/// threshold and the threshold minimal.  Carries exponent sets of ideals and
/// fractional ideals of a numerical-semigroup ring, so all set operations
/// here are exact.
class SemigroupModule {
public:
    /// Whole set [0, ∞).
    SemigroupModule() = default;

    /// Canonicalizes: elements >= threshold are absorbed, the threshold is
    /// lowered while threshold-1 is present, duplicates are dropped.
    static SemigroupModule from_parts(std::vector<long long> elements,
                                      long long threshold);

    bool contains(long long x) const;
    long long threshold() const { return threshold_; }
    const std::vector<long long>& sporadic() const { return sporadic_; }

    /// All members strictly below the bound.
    std::vector<long long> elements_below(long long bound) const;

    SemigroupModule shifted(long long a) const;
    SemigroupModule unioned(const SemigroupModule& other) const;
    SemigroupModule intersected(const SemigroupModule& other) const;
    /// Minkowski sum {e + f}.
    SemigroupModule plus(const SemigroupModule& other) const;

    bool subset_of(const SemigroupModule& other) const;
    bool operator==(const SemigroupModule& other) const = default;

private:
    std::vector<long long> sporadic_;
    long long threshold_ = 0;
};

/// #(outer \ inner); always finite because both sets are cofinite.
long long difference_count(const SemigroupModule& outer,
                           const SemigroupModule& inner);

/// Length of outer/inner.  Throws not_submodule unless inner ⊆ outer.
long long quotient_length(const SemigroupModule& outer,
                          const SemigroupModule& inner);

struct Dim1Classification {
    LaurentPoly h;
    int a_invariant = 0;
    bool regular = false;
    bool minimal_multiplicity = false;
};

/// Numerical semigroup S ⊆ ℕ with gcd of generators 1, modelling the
/// semigroup ring A = k[[t^{a_1}, ..., t^{a_k}]] with its maximal-ideal-adic
/// filtration.  The stored generating set is reduced to the minimal one.
class NumericalSemigroup {
public:
    explicit NumericalSemigroup(std::vector<long long> generators);

    const std::vector<long long>& generators() const { return gens_; }
    long long smallest_generator() const { return gens_.front(); }
    long long largest_generator() const { return gens_.back(); }

    /// Least c with [c, ∞) ⊆ S.
    long long conductor() const { return conductor_; }
    /// Largest integer not in S; -1 when S = ℕ.
    long long frobenius() const { return conductor_ - 1; }

    bool contains(long long x) const;
    std::vector<long long> gaps() const;
    /// Gap-set symmetry z ∈ S ⟺ f - z ∉ S, checked directly on the
    /// membership table (independently of canonical_module).
    bool has_symmetric_gaps() const;
    SemigroupModule as_module() const;

    /// Cohen-Macaulay type of the semigroup ring: the number of
    /// pseudo-Frobenius numbers {z ∉ S : z + s ∈ S for all s ∈ S, s > 0}.
    long long type() const;

    /// The a smallest elements of S, one per residue class mod a, indexed by
    /// residue.  Throws not_member unless a ∈ S, a > 0.
    std::vector<long long> apery_set(long long a) const;

    /// Exponent set of the n-th power of the maximal ideal.  Memoized; the
    /// cache is shared across copies and safe for concurrent readers.
    /// M_n contains n*a_max + S, so its canonical threshold never exceeds
    /// conductor + n*a_max; every set operation stays below that line.
    SemigroupModule power_module(int n) const;

    /// H(n) = #(M_n \ M_{n+1}), the Hilbert function of the associated
    /// graded ring.
    long long hilbert_function_ring(int n) const;

    /// Hilbert function of the Artinian reduction B = A/(t^{a_min}):
    /// #(M_n \ (M_{n+1} ∪ (a_min + S))).
    long long artin_quotient_hf(int n) const;

    /// Least n with M_{n+1} = a_min + M_n; the reduction number of the
    /// maximal ideal with respect to its principal reduction (t^{a_min}).
    /// For one-dimensional semigroup rings with infinite residue field this
    /// principal reduction realizes the minimum over all reductions, so the
    /// value is the reduction number plain.
    int reduction_number() const;

    /// Valabrega-Valla obstruction sum
    /// delta = sum_n #((M_{n+1} ∩ (a_min + S)) \ (a_min + M_n)); every
    /// summand past the reduction number vanishes.
    long long delta_invariant() const;

    /// delta = 0 exactly when the associated graded ring is Cohen-Macaulay.
    bool assoc_graded_is_cm() const;

    /// Canonical fractional ideal K = {z : frobenius - z ∉ S}.
    SemigroupModule canonical_module() const;

    /// Exponent set K_n = M_n + K of the n-th power of the maximal ideal
    /// times the canonical module.  Computed by the same shift-union
    /// recursion as power_module (K_0 = K because S + K = K); memoized.
    SemigroupModule canonical_power_module(int n) const;

    /// Hilbert function of omega_B = omega_A / t^{a_min} omega_A:
    /// with K_n = M_n + K, counts #(K_n \ (K_{n+1} ∪ (a_min + K))).
    long long canonical_quotient_hf(int n) const;

    /// h-polynomial of the ring (dimension-1 fit; exact, no adaptivity
    /// needed since H is constant past the reduction number).
    LaurentPoly ring_h_polynomial(int window = kDefaultFitWindow) const;
    /// h-polynomial of the Artinian reduction B (dimension-0 fit).
    LaurentPoly artin_h_polynomial(int window = kDefaultFitWindow) const;
    /// h-polynomial of omega_B.
    LaurentPoly canonical_h_polynomial(int window = kDefaultFitWindow) const;

    /// h(omega_B, z) = z^r h(B, z^{-1})?  When true, the associated graded
    /// module of the canonical module is the graded canonical module up to a
    /// shift.
    bool canonical_criterion(int window = kDefaultFitWindow) const;

    /// Borderline classification in dimension 1, reading the a-invariant as
    /// deg h - 1.  Requires the associated graded ring to be Cohen-Macaulay;
    /// throws precondition_error otherwise.
    Dim1Classification classify_dim1(int window = kDefaultFitWindow) const;

    /// Matrix-level realization of the associated graded ring of B over the
    /// rationals: basis the Apery set of a_min, graded by filtration order.
    /// Requires delta = 0 so that this faithfully represents the Artinian
    /// reduction of the associated graded ring of A.
    GradedAlgebra build_artinian_graded() const;

private:
    long long element_order(long long s) const;

    std::vector<long long> gens_;
    long long conductor_ = 0;
    std::vector<char> members_; // membership below the conductor

    struct PowerCache {
        std::mutex mutex;
        std::vector<SemigroupModule> powers;
        std::vector<SemigroupModule> canonical_levels;
    };
    std::shared_ptr<PowerCache> cache_;
};

} // namespace agr

#endif
