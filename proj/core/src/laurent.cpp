#include "agr/laurent.hpp"

#include <sstream>

namespace agr {

LaurentPoly LaurentPoly::monomial(int degree, Int coeff) {
    LaurentPoly p;
    p.set(degree, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Int>>& terms) {
    LaurentPoly p;
    for (const auto& [deg, c] : terms) {
        p.set(deg, p.coeff(deg) + c);
    }
    return p;
}

void LaurentPoly::set(int degree, Int coeff) {
    if (coeff == 0) {
        terms_.erase(degree);
    } else {
        terms_[degree] = std::move(coeff);
    }
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw precondition_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_degree() const {
    if (terms_.empty()) throw precondition_error("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    LaurentPoly out = *this;
    for (const auto& [deg, c] : rhs.terms_) {
        out.set(deg, out.coeff(deg) + c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return *this + (-rhs);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [deg, c] : terms_) out.terms_[deg] = -c;
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : rhs.terms_) {
            out.set(d1 + d2, out.coeff(d1 + d2) + c1 * c2);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [deg, v] : terms_) out.terms_[deg] = v * c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [deg, v] : terms_) out.terms_[deg + k] = v;
    return out;
}

Int LaurentPoly::eval_one() const {
    Int total = 0;
    for (const auto& [deg, c] : terms_) total += c;
    return total;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        Int a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (deg == 0 || a != 1) os << a.str();
        if (deg != 0) {
            os << "z";
            if (deg != 1) os << "^" << deg;
        }
    }
    return os.str();
}

namespace {

// (1-z)^d as a polynomial.
LaurentPoly one_minus_z_pow(int d) {
    LaurentPoly p = LaurentPoly::constant(1);
    const LaurentPoly factor =
        LaurentPoly::constant(1) - LaurentPoly::monomial(1, 1);
    for (int i = 0; i < d; ++i) p = p * factor;
    return p;
}

Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace

LaurentPoly fit_h_polynomial(const std::vector<Int>& values, int dim, int window) {
    if (values.size() < 2) {
        throw precondition_error("fit_h_polynomial: need at least H(0) and H(1)");
    }
    if (dim < 0) throw precondition_error("fit_h_polynomial: negative dimension");
    if (window < 1) throw precondition_error("fit_h_polynomial: window must be >= 1");

    const int n_top = static_cast<int>(values.size()) - 1;
    LaurentPoly sample;
    for (int n = 0; n <= n_top; ++n) {
        sample = sample + LaurentPoly::monomial(n, values[static_cast<size_t>(n)]);
    }
    LaurentPoly product = one_minus_z_pow(dim) * sample;

    // Degrees above n_top only reflect the missing tail of the sample.
    LaurentPoly clipped;
    for (const auto& [deg, c] : product.terms()) {
        if (deg <= n_top) clipped = clipped + LaurentPoly::monomial(deg, c);
    }
    for (int deg = n_top - window + 1; deg <= n_top; ++deg) {
        if (deg >= 0 && clipped.coeff(deg) != 0) {
            throw not_stabilized(
                "fit_h_polynomial: trailing window not zero; sample too short");
        }
    }
    return clipped;
}

LaurentPoly fit_h_polynomial(const std::vector<long long>& values, int dim,
                             int window) {
    std::vector<Int> v(values.begin(), values.end());
    return fit_h_polynomial(v, dim, window);
}

Int hilbert_coefficient(const LaurentPoly& h, int i) {
    if (i < 0) throw precondition_error("hilbert_coefficient: negative index");
    if (!h.is_zero() && h.min_degree() < 0) {
        throw precondition_error(
            "hilbert_coefficient: support must lie in degrees >= 0");
    }
    Int total = 0;
    for (const auto& [deg, c] : h.terms()) {
        total += binomial(deg, i) * c;
    }
    return total;
}

Int multiplicity(const LaurentPoly& h) {
    if (h.is_zero()) throw precondition_error("multiplicity of zero polynomial");
    return h.eval_one();
}

bool is_symmetric(const LaurentPoly& h) {
    if (h.is_zero()) throw precondition_error("is_symmetric of zero polynomial");
    return reverse(h, h.max_degree() + h.min_degree()) == h;
}

LaurentPoly reverse(const LaurentPoly& h, int r) {
    LaurentPoly out;
    for (const auto& [deg, c] : h.terms()) {
        out = out + LaurentPoly::monomial(r - deg, c);
    }
    return out;
}

std::vector<Int> expand(const HilbertSeries& series, int n_max) {
    if (n_max < 0) throw precondition_error("expand: n_max must be >= 0");
    if (series.dim < 0) throw precondition_error("expand: negative dimension");
    std::vector<Int> values(static_cast<size_t>(n_max) + 1, Int(0));
    for (const auto& [deg, c] : series.numerator.terms()) {
        if (series.dim == 0) {
            if (deg >= 0 && deg <= n_max) values[static_cast<size_t>(deg)] += c;
            continue;
        }
        // 1/(1-z)^d has coefficients C(n+d-1, d-1).
        for (int n = std::max(deg, 0); n <= n_max; ++n) {
            values[static_cast<size_t>(n)] +=
                c * binomial(n - deg + series.dim - 1, series.dim - 1);
        }
    }
    return values;
}

HilbertSeries idealization_series(const HilbertSeries& ring,
                                  const HilbertSeries& module) {
    if (module.dim > ring.dim) {
        throw precondition_error(
            "idealization_series: module dimension exceeds ring dimension");
    }
    LaurentPoly renorm = one_minus_z_pow(ring.dim - module.dim);
    LaurentPoly numerator =
        ring.numerator + (module.numerator * renorm).shifted(1);
    return HilbertSeries{numerator, ring.dim};
}

long long to_int64_checked(const Int& value, const char* context) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (value < lo || value > hi) {
        throw error(std::string(context) + ": value exceeds 64-bit range");
    }
    return value.convert_to<long long>();
}

nlohmann::json to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [deg, c] : p.terms()) {
        terms.push_back({deg, to_int64_checked(c, "LaurentPoly coefficient")});
    }
    return nlohmann::json{{"terms", terms}};
}

nlohmann::json to_json(const HilbertSeries& s) {
    return nlohmann::json{{"h", to_json(s.numerator)}, {"dim", s.dim}};
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw parse_error("LaurentPoly: expected {\"terms\": [[degree, coeff], ...]}");
    }
    LaurentPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() ||
            !t[1].is_number_integer()) {
            throw parse_error("LaurentPoly: each term must be [degree, coeff]");
        }
        int deg = t[0].get<int>();
        Int c = Int(t[1].get<long long>());
        p = p + LaurentPoly::monomial(deg, c);
    }
    return p;
}

HilbertSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("dim") ||
        !j["dim"].is_number_integer()) {
        throw parse_error("HilbertSeries: expected {\"h\": ..., \"dim\": d}");
    }
    HilbertSeries s;
    s.numerator = laurent_from_json(j["h"]);
    s.dim = j["dim"].get<int>();
    if (s.dim < 0) throw parse_error("HilbertSeries: dim must be >= 0");
    return s;
}

} // namespace agr
