#ifndef AGR_HYPERSURFACE_HPP
#define AGR_HYPERSURFACE_HPP

#include <optional>
#include <vector>

#include "agr/laurent.hpp"

namespace agr {

/// Module over the Artinian hypersurface ring A = Q/(Pi^e), Q a DVR.
/// Such a module decomposes as a direct sum of cyclic strands
/// Q/(Pi^{a_i}) with 1 <= a_1 <= ... <= a_mu <= e, and the multiset of
/// strand lengths is a complete isomorphism invariant, so it is the whole
/// representation here.
class HypersurfaceModule {
public:
    HypersurfaceModule(int ring_exponent, std::vector<int> strand_lengths);

    int ring_exponent() const { return e_; }
    const std::vector<int>& invariants() const { return a_; }
    int mu() const { return static_cast<int>(a_.size()); }

    /// sum_i (1 + z + ... + z^{a_i - 1}).
    LaurentPoly hilbert_series() const;

    /// Multiplicity e_0 = sum a_i = hilbert_series()(1).
    Int e0() const;

    /// Largest n such that every entry of a minimal presentation matrix lies
    /// in the n-th power of the maximal ideal; equals a_1.
    int i_invariant() const { return a_.front(); }

    /// Graded dimension vector of the dual filtration on Hom(M, A):
    /// each strand of length a contributes z^{e-a} + ... + z^{e-1}.
    LaurentPoly dual_filtration_dims() const;

    /// Initial degree of the dual filtration: e - max a_i.
    int alpha() const { return e_ - a_.back(); }

    /// Reduction number of A itself: the largest nonvanishing power of the
    /// maximal ideal is e-1.
    int ring_reduction_number() const { return e_ - 1; }

    /// Top nonzero degree of the associated graded module: max a_i - 1.
    int a_invariant() const { return a_.back() - 1; }

    /// e_0 = mu, equivalently every strand has length 1.
    bool is_ulrich() const;

    /// True iff all strand lengths agree; exactly then the dual filtration is
    /// a shift of the adic filtration.
    bool dual_is_adic_shift() const;

    struct BabyUlrichReport {
        bool alpha_equals_reduction;
        bool ulrich;
        bool a_invariant_is_minus_dim;
        bool consistent() const {
            return alpha_equals_reduction == ulrich &&
                   ulrich == a_invariant_is_minus_dim;
        }
    };

    /// The three equivalent Ulrich characterizations, reported separately so
    /// their agreement can be asserted.
    BabyUlrichReport baby_ulrich_check() const;

    /// h_{a_1}(M) < mu(M): the coefficient of z^{a_1} in the Hilbert series
    /// counts the strands strictly longer than the shortest one.
    bool lemma_halpha_check() const;

private:
    int e_;
    std::vector<int> a_;
};

/// Returns s >= 1 if h = ell * (1 + z + ... + z^{s-1}), otherwise nothing.
std::optional<int> gorenstein_shape_check(const LaurentPoly& h, const Int& ell);

} // namespace agr

#endif
