#ifndef AGR_LAURENT_HPP
#define AGR_LAURENT_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "agr/errors.hpp"

namespace agr {

using Int = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in canonical form: the term map holds no zero
/// coefficients, so equality is structural.  Values are immutable in spirit;
/// arithmetic returns fresh polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// c * z^degree (dropped when c == 0).
    static LaurentPoly monomial(int degree, Int coeff);
    static LaurentPoly constant(Int c) { return monomial(0, std::move(c)); }
    static LaurentPoly from_terms(const std::vector<std::pair<int, Int>>& terms);

    bool is_zero() const { return terms_.empty(); }

    /// Lowest degree of the support (-p in the usual notation).  Defined only
    /// for nonzero polynomials.
    int min_degree() const;
    /// Highest degree of the support (s in the usual notation).
    int max_degree() const;

    Int coeff(int degree) const;
    const std::map<int, Int>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Int& c) const;
    /// Multiplication by z^k.
    LaurentPoly shifted(int k) const;

    /// Value at z = 1, i.e. the coefficient sum.
    Int eval_one() const;

    bool operator==(const LaurentPoly& rhs) const = default;

    std::string to_string() const;

private:
    void set(int degree, Int coeff);

    std::map<int, Int> terms_;
};

/// Rational function h(z) / (1-z)^dim with integer numerator; the standard
/// normal form of a Hilbert series.  For a nonzero module h(1) != 0.
struct HilbertSeries {
    LaurentPoly numerator;
    int dim = 0;

    bool operator==(const HilbertSeries&) const = default;
};

/// Trailing-zero window used by fit_h_polynomial to decide that a finite
/// Hilbert-function sample has stabilized.
inline constexpr int kDefaultFitWindow = 5;

/// Recovers the h-polynomial from the values H(0..N) of a Hilbert function
/// that is eventually polynomial of degree dim-1.  Computes
/// (1-z)^dim * sum H(n) z^n, discards the top dim coefficients (they are
/// truncation artifacts), and demands that the last `window` remaining
/// coefficients vanish; throws not_stabilized otherwise.  Requires
/// N >= deg h + window to succeed.
LaurentPoly fit_h_polynomial(const std::vector<Int>& values, int dim,
                             int window = kDefaultFitWindow);
LaurentPoly fit_h_polynomial(const std::vector<long long>& values, int dim,
                             int window = kDefaultFitWindow);

/// i-th Hilbert coefficient e_i = h^(i)(1)/i! = sum_j C(j,i) h_j.
/// The polynomial must be supported in degrees >= 0.
Int hilbert_coefficient(const LaurentPoly& h, int i);

/// e_0 = h(1); positive for genuine Hilbert data.  h must be nonzero.
Int multiplicity(const LaurentPoly& h);

/// True iff h equals its own reversal across its support interval,
/// i.e. h_{s-i} = h_{-p+i} for all i.
bool is_symmetric(const LaurentPoly& h);

/// z^r * h(z^{-1}).
LaurentPoly reverse(const LaurentPoly& h, int r);

/// First n_max+1 power-series coefficients of numerator/(1-z)^dim.
/// Inverse of fit_h_polynomial on sufficiently long samples.
std::vector<Int> expand(const HilbertSeries& series, int n_max);

/// Hilbert series of the idealization A ⋉ M: H_A(z) + z*H_M(z), written over
/// the common denominator (1-z)^{dim A}.  Requires dim M <= dim A.
HilbertSeries idealization_series(const HilbertSeries& ring,
                                  const HilbertSeries& module);

/// Conversion guard for JSON output; report values never approach this in
/// practice but silently wrapping would be worse than refusing.
long long to_int64_checked(const Int& value, const char* context = "integer");

nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const HilbertSeries& s);
LaurentPoly laurent_from_json(const nlohmann::json& j);
HilbertSeries series_from_json(const nlohmann::json& j);

} // namespace agr

#endif
