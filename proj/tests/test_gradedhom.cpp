#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "agr/gradedhom.hpp"
#include "agr/hypersurface.hpp"

using namespace agr;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
    std::vector<std::pair<int, Int>> t;
    for (const auto& [d, c] : terms) t.emplace_back(d, Int(c));
    return LaurentPoly::from_terms(t);
}

RationalMatrix matrix(int rows, int cols,
                      std::initializer_list<long long> entries) {
    RationalMatrix m(rows, cols);
    auto it = entries.begin();
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(*it++);
    }
    return m;
}

// k[x]/(x^{len}) as a graded algebra.
GradedAlgebra truncated(int len) {
    std::vector<int> dims(static_cast<size_t>(len), 1);
    std::vector<std::vector<RationalMatrix>> action;
    if (len > 1) {
        std::vector<RationalMatrix> mult;
        for (int j = 0; j + 1 < len; ++j) mult.push_back(matrix(1, 1, {1}));
        action.push_back(std::move(mult));
    }
    return GradedAlgebra(std::move(dims), std::move(action));
}

} // namespace

TEST_CASE("exact rank and kernels") {
    const RationalMatrix m = matrix(3, 4,
                                    {1, 2, 3, 4,
                                     2, 4, 6, 8,
                                     0, 1, 1, 0});
    CHECK(rank(m) == 2);
    const auto basis = kernel_basis(m);
    CHECK(basis.size() == 2); // nullity = 4 - 2

    // Residuals of every kernel vector vanish identically.
    for (const auto& v : basis) {
        for (int r = 0; r < m.rows(); ++r) {
            Rational acc = 0;
            for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<size_t>(c)];
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("property: rank-nullity with exact residuals on random matrices") {
    std::mt19937_64 rng(17);
    auto rand_int = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = static_cast<int>(rand_int(1, 6));
        const int cols = static_cast<int>(rand_int(1, 6));
        RationalMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                m.at(r, c) = Rational(rand_int(-4, 4), rand_int(1, 3));
            }
        }
        const int rk = rank(m);
        const auto basis = kernel_basis(m);
        CHECK(rk + static_cast<int>(basis.size()) == cols);
        for (const auto& v : basis) {
            for (int r = 0; r < rows; ++r) {
                Rational acc = 0;
                for (int c = 0; c < cols; ++c) {
                    acc += m.at(r, c) * v[static_cast<size_t>(c)];
                }
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("algebra certification") {
    SUBCASE("dims must start at 1") {
        CHECK_THROWS_AS(GradedAlgebra({2}, {}), precondition_error);
    }
    SUBCASE("degree-1 piece must generate") {
        // x acts as zero from degree 1 to 2, so degree 2 is not generated.
        std::vector<std::vector<RationalMatrix>> action;
        action.push_back({matrix(1, 1, {1}), matrix(1, 1, {0})});
        CHECK_THROWS_AS(GradedAlgebra({1, 1, 1}, std::move(action)),
                        precondition_error);
    }
    SUBCASE("non-commuting actions are rejected") {
        // Two generators on dims (1,2,1) with incompatible two-step maps.
        std::vector<std::vector<RationalMatrix>> action;
        action.push_back({matrix(2, 1, {1, 0}), matrix(1, 2, {0, 1})});
        action.push_back({matrix(2, 1, {0, 1}), matrix(1, 2, {0, 1})});
        // g then h: h(g(1)) = h(e0) = 0; g then h reversed: g(h(1)) = g(e1) = 1.
        CHECK_THROWS_AS(GradedAlgebra({1, 2, 1}, std::move(action)),
                        precondition_error);
    }
    SUBCASE("a valid two-generator algebra passes") {
        // k[x,y]/(x,y)^2: both actions land in degree-1 and vanish after.
        std::vector<std::vector<RationalMatrix>> action;
        action.push_back({matrix(2, 1, {1, 0})});
        action.push_back({matrix(2, 1, {0, 1})});
        const GradedAlgebra g({1, 2}, std::move(action));
        CHECK(g.generator_count() == 2);
        CHECK(socle_dims(g) == poly({{1, 2}}));
    }
}

TEST_CASE("hom dimensions: worked example") {
    const GradedAlgebra g = truncated(3);
    const auto [_, m] = from_hypersurface(HypersurfaceModule(3, {2}));
    CHECK(hom_dims(m, g) == poly({{1, 1}, {2, 1}}));
}

TEST_CASE("hom of the regular module is the algebra itself") {
    for (int len = 1; len <= 5; ++len) {
        const GradedAlgebra g = truncated(len);
        CHECK(hom_dims(GradedModuleRep::regular(g), g) == g.dims_poly());
    }
}

TEST_CASE("hom over the residue field") {
    const GradedAlgebra k = truncated(1);
    const GradedModuleRep m({1}, {});
    CHECK(hom_dims(m, k) == poly({{0, 1}}));
    CHECK(verify_app5(m, k));
}

TEST_CASE("socle dimensions") {
    CHECK(socle_dims(truncated(3)) == poly({{2, 1}}));
    CHECK(socle_dims(truncated(1)) == poly({{0, 1}}));
}

TEST_CASE("length inequality") {
    const GradedAlgebra g = truncated(3);
    const auto [_, m] = from_hypersurface(HypersurfaceModule(3, {2}));
    CHECK(verify_app5(m, g));
    CHECK(verify_app5(GradedModuleRep::regular(g), g));
}

TEST_CASE("from_hypersurface shapes") {
    const auto [g3, m3] = from_hypersurface(HypersurfaceModule(3, {2}));
    CHECK(g3.dims() == std::vector<int>{1, 1, 1});
    CHECK(m3.dims() == std::vector<int>{1, 1});

    const auto [g4, m4] = from_hypersurface(HypersurfaceModule(4, {1, 2}));
    CHECK(g4.dims() == std::vector<int>{1, 1, 1, 1});
    CHECK(m4.dims() == std::vector<int>{2, 1});

    const auto [g5, m5] = from_hypersurface(HypersurfaceModule(5, {1, 1, 1}));
    CHECK(m5.dims() == std::vector<int>{3});
}

TEST_CASE("oracle equivalence on a small corpus") {
    for (int e = 2; e <= 4; ++e) {
        std::vector<int> a;
        auto rec = [&](auto&& self, int remaining, int lo) -> void {
            if (remaining == 0) {
                const HypersurfaceModule module(e, a);
                const auto [algebra, rep] = from_hypersurface(module);
                const LaurentPoly dual = module.dual_filtration_dims();
                const LaurentPoly hom = hom_dims(rep, algebra);
                CHECK(hom == dual);
                // Injectivity bound coefficientwise.
                for (const auto& [deg, c] : dual.terms()) {
                    CHECK(hom.coeff(deg) >= c);
                }
                CHECK(rep.total_dim() == hom.eval_one());
                return;
            }
            for (int x = lo; x <= e; ++x) {
                a.push_back(x);
                self(self, remaining - 1, x);
                a.pop_back();
            }
        };
        for (int mu = 1; mu <= 3; ++mu) rec(rec, mu, 1);
    }
}
