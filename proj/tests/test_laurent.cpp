#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agr/laurent.hpp"

using namespace agr;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
    std::vector<std::pair<int, Int>> t;
    for (const auto& [d, c] : terms) t.emplace_back(d, Int(c));
    return LaurentPoly::from_terms(t);
}

// Marley's h-polynomial, used repeatedly below.
LaurentPoly marley_h() {
    return poly({{0, 38}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, -4}});
}

} // namespace

TEST_CASE("canonical form drops zero coefficients") {
    LaurentPoly p = poly({{0, 1}, {2, 5}, {2, -5}, {-3, 7}});
    CHECK(p == poly({{0, 1}, {-3, 7}}));
    CHECK(p.coeff(2) == 0);
    CHECK(p.min_degree() == -3);
    CHECK(p.max_degree() == 0);
    CHECK((p - p).is_zero());
}

TEST_CASE("arithmetic and printing") {
    LaurentPoly p = poly({{0, 1}, {1, 1}});
    CHECK(p * p == poly({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(p.shifted(3) == poly({{3, 1}, {4, 1}}));
    CHECK(p.scaled(-2) == poly({{0, -2}, {1, -2}}));
    CHECK(marley_h().to_string() == "38 + 3z + 3z^2 + 3z^3 + 3z^4 + 3z^5 - 4z^6");
    CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("fit_h_polynomial recovers h from Hilbert samples") {
    SUBCASE("regular ring in dimension 1") {
        CHECK(fit_h_polynomial(std::vector<long long>{1, 1, 1, 1, 1, 1}, 1) ==
              poly({{0, 1}}));
    }
    SUBCASE("tangent cone of the (3,5) monomial curve") {
        CHECK(fit_h_polynomial(std::vector<long long>{1, 2, 3, 3, 3, 3, 3, 3}, 1) ==
              poly({{0, 1}, {1, 1}, {2, 1}}));
    }
    SUBCASE("dimension-2 data recovers Marley's h-polynomial") {
        // H derived by expanding h/(1-z)^2: H(n) = sum_j h_j (n+1-j).
        const std::vector<long long> values{38,  79,  123, 170, 220, 273,
                                            322, 371, 420, 469, 518, 567,
                                            616, 665};
        const HilbertSeries series{marley_h(), 2};
        const std::vector<Int> expanded = expand(series, 13);
        for (size_t i = 0; i < values.size(); ++i) {
            CHECK(expanded[i] == values[i]);
        }
        CHECK(fit_h_polynomial(values, 2) == marley_h());
    }
    SUBCASE("too little data is rejected") {
        CHECK_THROWS_AS(fit_h_polynomial(std::vector<long long>{1, 2, 3, 4}, 1),
                        not_stabilized);
    }
}

TEST_CASE("hilbert coefficients") {
    CHECK(hilbert_coefficient(marley_h(), 0) == 49);
    CHECK(hilbert_coefficient(marley_h(), 1) == 21);
    CHECK(hilbert_coefficient(marley_h(), 2) == 0);
    CHECK(hilbert_coefficient(poly({{0, 1}}), 0) == 1);
    CHECK(hilbert_coefficient(poly({{0, 1}, {1, 4}, {2, 4}, {3, 4}}), 1) == 24);
    CHECK_THROWS_AS(hilbert_coefficient(poly({{-1, 1}}), 0), precondition_error);
    CHECK_THROWS_AS(hilbert_coefficient(poly({{0, 1}}), -1), precondition_error);
}

TEST_CASE("multiplicity") {
    CHECK(multiplicity(marley_h()) == 49);
    CHECK(multiplicity(poly({{0, 1}, {1, 4}, {2, 4}, {3, 4}})) == 13);
    CHECK(multiplicity(poly({{0, 1}})) == 1);
    CHECK_THROWS_AS(multiplicity(LaurentPoly()), precondition_error);
}

TEST_CASE("symmetry and reversal") {
    CHECK(is_symmetric(poly({{0, 1}, {1, 1}, {2, 1}})));
    CHECK_FALSE(is_symmetric(poly({{0, 1}, {1, 4}, {2, 4}, {3, 4}})));
    CHECK_FALSE(is_symmetric(poly({{0, 4}, {1, 4}, {2, 4}, {3, 1}})));
    CHECK(reverse(poly({{0, 1}, {1, 4}, {2, 4}, {3, 4}}), 3) ==
          poly({{0, 4}, {1, 4}, {2, 4}, {3, 1}}));
    CHECK(reverse(poly({{0, 1}}), 0) == poly({{0, 1}}));
    CHECK(reverse(poly({{0, 1}, {1, 1}, {2, 1}}), 2) ==
          poly({{0, 1}, {1, 1}, {2, 1}}));
}

TEST_CASE("expand") {
    const HilbertSeries curve{poly({{0, 1}, {1, 1}, {2, 1}}), 1};
    const std::vector<Int> values = expand(curve, 4);
    CHECK(values == std::vector<Int>{1, 2, 3, 3, 3});

    const HilbertSeries artinian{poly({{0, 7}}), 0};
    CHECK(expand(artinian, 2) == std::vector<Int>{7, 0, 0});

    const HilbertSeries plane{poly({{0, 1}}), 2};
    CHECK(expand(plane, 3) == std::vector<Int>{1, 2, 3, 4});

    // Laurent numerators only contribute from degree 0 on.
    const HilbertSeries laurent{poly({{-1, 1}, {0, 1}}), 1};
    CHECK(expand(laurent, 2) == std::vector<Int>{2, 2, 2});
}

TEST_CASE("idealization series") {
    SUBCASE("regular dimension-1 ring with a residue-field module") {
        const HilbertSeries ring{poly({{0, 1}}), 1};
        const HilbertSeries module{poly({{0, 1}}), 0};
        const HilbertSeries out = idealization_series(ring, module);
        CHECK(out.dim == 1);
        CHECK(out.numerator == poly({{0, 1}, {1, 1}, {2, -1}}));
    }
    SUBCASE("two Artinian pieces") {
        const HilbertSeries ring{poly({{0, 1}}), 0};
        const HilbertSeries module{poly({{0, 1}}), 0};
        CHECK(idealization_series(ring, module).numerator ==
              poly({{0, 1}, {1, 1}}));
    }
    SUBCASE("equal dimensions just shift") {
        const HilbertSeries ring{poly({{0, 1}, {1, 1}}), 1};
        const HilbertSeries module{poly({{0, 2}}), 1};
        const HilbertSeries out = idealization_series(ring, module);
        CHECK(out.numerator == poly({{0, 1}, {1, 3}}));
        CHECK(out.dim == 1);
    }
    SUBCASE("module dimension may not exceed ring dimension") {
        const HilbertSeries ring{poly({{0, 1}}), 0};
        const HilbertSeries module{poly({{0, 1}}), 1};
        CHECK_THROWS_AS(idealization_series(ring, module), precondition_error);
    }
}

TEST_CASE("property: fit inverts expand") {
    std::mt19937_64 rng(7);
    auto rand_int = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                hi - lo + 1));
    };
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly h;
        const int deg = static_cast<int>(rand_int(0, 8));
        for (int j = 0; j <= deg; ++j) {
            h = h + LaurentPoly::monomial(j, rand_int(-9, 9));
        }
        const int dim = static_cast<int>(rand_int(0, 3));
        const int n_top =
            (h.is_zero() ? 0 : h.max_degree()) + kDefaultFitWindow +
            static_cast<int>(rand_int(0, 3));
        const HilbertSeries series{h, dim};
        CHECK(fit_h_polynomial(expand(series, n_top), dim) == h);
    }
}

TEST_CASE("property: fit and expand are additive") {
    std::mt19937_64 rng(11);
    auto rand_int = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                hi - lo + 1));
    };
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a, b;
        for (int j = 0; j <= 5; ++j) {
            a = a + LaurentPoly::monomial(j, rand_int(-5, 5));
            b = b + LaurentPoly::monomial(j, rand_int(-5, 5));
        }
        const int dim = static_cast<int>(rand_int(0, 2));
        const int n_top = 5 + kDefaultFitWindow + 1;
        const std::vector<Int> ea = expand({a, dim}, n_top);
        const std::vector<Int> eb = expand({b, dim}, n_top);
        const std::vector<Int> esum = expand({a + b, dim}, n_top);
        std::vector<Int> pointwise;
        for (size_t i = 0; i < ea.size(); ++i) pointwise.push_back(ea[i] + eb[i]);
        CHECK(esum == pointwise);
        CHECK(fit_h_polynomial(pointwise, dim) == a + b);
    }
}

TEST_CASE("property: symmetry agrees with reversal fixed point") {
    std::mt19937_64 rng(13);
    auto rand_int = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                hi - lo + 1));
    };
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly h;
        for (int j = -3; j <= 4; ++j) {
            h = h + LaurentPoly::monomial(j, rand_int(-2, 2));
        }
        if (h.is_zero()) continue;
        const int span = h.max_degree() + h.min_degree();
        CHECK(is_symmetric(h) == (reverse(h, span) == h));
        if (h.min_degree() >= 0) {
            CHECK(hilbert_coefficient(h, 0) == multiplicity(h));
        }
    }
}

TEST_CASE("json round trip is sorted and exact") {
    const LaurentPoly h = marley_h();
    const nlohmann::json j = to_json(h);
    CHECK(j["terms"].size() == 7);
    CHECK(j["terms"][0][0] == 0);
    CHECK(j["terms"][6][1] == -4);
    CHECK(laurent_from_json(j) == h);

    const HilbertSeries s{h, 2};
    CHECK(series_from_json(to_json(s)) == s);
    CHECK_THROWS_AS(laurent_from_json(nlohmann::json{{"bogus", 1}}), parse_error);
}
