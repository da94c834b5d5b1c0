#include "agr/gradedhom.hpp"

#include <algorithm>

#include "agr/hypersurface.hpp"

namespace agr {

namespace {

// Bit-length proxy used for pivot selection.
size_t entry_size(const Rational& v) {
    using boost::multiprecision::msb;
    const Int num = boost::multiprecision::abs(numerator(v));
    const Int den = denominator(v);
    size_t s = 0;
    if (num > 1) s += msb(num);
    if (den > 1) s += msb(den);
    return s;
}

// In-place reduction to row echelon form; returns the pivot columns.
std::vector<int> echelonize(RationalMatrix& m) {
    std::vector<int> pivot_cols;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        size_t best = 0;
        for (int r = row; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            size_t s = entry_size(m.at(r, col));
            if (pivot < 0 || s < best) {
                pivot = r;
                best = s;
            }
        }
        if (pivot < 0) continue;
        if (pivot != row) {
            for (int c = col; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        }
        const Rational lead = m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) /= lead;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) {
                m.at(r, c) -= factor * m.at(row, c);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

void check_action_shapes(const std::vector<int>& dims,
                         const std::vector<std::vector<RationalMatrix>>& action,
                         const char* what) {
    const int top = static_cast<int>(dims.size()) - 1;
    for (const auto& per_degree : action) {
        if (static_cast<int>(per_degree.size()) != std::max(top, 0)) {
            throw precondition_error(std::string(what) +
                                     ": one action matrix required per degree");
        }
        for (int j = 0; j < top; ++j) {
            if (per_degree[static_cast<size_t>(j)].rows() != dims[static_cast<size_t>(j) + 1] ||
                per_degree[static_cast<size_t>(j)].cols() != dims[static_cast<size_t>(j)]) {
                throw precondition_error(std::string(what) +
                                         ": action matrix shape mismatch");
            }
        }
    }
}

void check_commutativity(const std::vector<int>& dims,
                         const std::vector<std::vector<RationalMatrix>>& action,
                         const char* what) {
    const int top = static_cast<int>(dims.size()) - 1;
    const size_t s = action.size();
    for (size_t g = 0; g < s; ++g) {
        for (size_t h = g + 1; h < s; ++h) {
            for (int j = 0; j + 2 <= top; ++j) {
                const auto& gj = action[g][static_cast<size_t>(j)];
                const auto& hj = action[h][static_cast<size_t>(j)];
                const auto& gj1 = action[g][static_cast<size_t>(j) + 1];
                const auto& hj1 = action[h][static_cast<size_t>(j) + 1];
                if (!(hj1 * gj == gj1 * hj)) {
                    throw precondition_error(std::string(what) +
                                             ": generator actions do not commute");
                }
            }
        }
    }
}

LaurentPoly dims_to_poly(const std::vector<int>& dims) {
    LaurentPoly p;
    for (size_t j = 0; j < dims.size(); ++j) {
        p = p + LaurentPoly::monomial(static_cast<int>(j), dims[j]);
    }
    return p;
}

} // namespace

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_error("matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    }
    return out;
}

int rank(RationalMatrix m) {
    return static_cast<int>(echelonize(m).size());
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    RationalMatrix red = m;
    const std::vector<int> pivots = echelonize(red);
    std::vector<char> is_pivot(static_cast<size_t>(m.cols()), 0);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = 1;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(free)] = 1;
        // Rows are in reduced echelon form: pivot entry 1, zeros elsewhere in
        // the pivot column, so each pivot variable reads off directly.
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[static_cast<size_t>(pivots[r])] =
                -red.at(static_cast<int>(r), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

GradedAlgebra::GradedAlgebra(std::vector<int> dims,
                             std::vector<std::vector<RationalMatrix>> gen_action)
    : dims_(std::move(dims)), gen_action_(std::move(gen_action)) {
    if (dims_.empty() || dims_[0] != 1) {
        throw precondition_error("GradedAlgebra: dims[0] must be 1");
    }
    for (int d : dims_) {
        if (d <= 0) {
            throw precondition_error(
                "GradedAlgebra: dimensions must be positive up to the top degree");
        }
    }
    const int expected_gens = dims_.size() > 1 ? dims_[1] : 0;
    if (static_cast<int>(gen_action_.size()) != expected_gens) {
        throw precondition_error(
            "GradedAlgebra: one generator action per degree-1 basis element");
    }
    check_action_shapes(dims_, gen_action_, "GradedAlgebra");
    check_commutativity(dims_, gen_action_, "GradedAlgebra");

    // Standard-graded certification: degree-1 elements generate.
    for (int j = 0; j + 1 <= top_degree(); ++j) {
        RationalMatrix stacked(dims_[static_cast<size_t>(j) + 1],
                               static_cast<int>(gen_action_.size()) *
                                   dims_[static_cast<size_t>(j)]);
        for (size_t g = 0; g < gen_action_.size(); ++g) {
            const auto& a = gen_action_[g][static_cast<size_t>(j)];
            for (int r = 0; r < a.rows(); ++r) {
                for (int c = 0; c < a.cols(); ++c) {
                    stacked.at(r, static_cast<int>(g) * a.cols() + c) = a.at(r, c);
                }
            }
        }
        if (rank(stacked) != dims_[static_cast<size_t>(j) + 1]) {
            throw precondition_error(
                "GradedAlgebra: not standard graded (degree-1 elements do not generate)");
        }
    }
}

const RationalMatrix& GradedAlgebra::action(int g, int j) const {
    return gen_action_[static_cast<size_t>(g)][static_cast<size_t>(j)];
}

LaurentPoly GradedAlgebra::dims_poly() const { return dims_to_poly(dims_); }

GradedModuleRep::GradedModuleRep(std::vector<int> dims,
                                 std::vector<std::vector<RationalMatrix>> gen_action)
    : dims_(std::move(dims)), gen_action_(std::move(gen_action)) {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
    if (dims_.empty()) {
        throw precondition_error("GradedModuleRep: zero module not supported");
    }
    for (int d : dims_) {
        if (d < 0) throw precondition_error("GradedModuleRep: negative dimension");
    }
    for (auto& per_degree : gen_action_) {
        per_degree.resize(static_cast<size_t>(std::max(top_degree(), 0)));
        for (int j = 0; j < top_degree(); ++j) {
            auto& m = per_degree[static_cast<size_t>(j)];
            if (m.rows() == 0 && m.cols() == 0) {
                m = RationalMatrix(dims_[static_cast<size_t>(j) + 1],
                                   dims_[static_cast<size_t>(j)]);
            }
        }
    }
    check_action_shapes(dims_, gen_action_, "GradedModuleRep");
    check_commutativity(dims_, gen_action_, "GradedModuleRep");
}

GradedModuleRep GradedModuleRep::regular(const GradedAlgebra& algebra) {
    std::vector<std::vector<RationalMatrix>> action;
    action.reserve(static_cast<size_t>(algebra.generator_count()));
    for (int g = 0; g < algebra.generator_count(); ++g) {
        std::vector<RationalMatrix> per_degree;
        for (int j = 0; j < algebra.top_degree(); ++j) {
            per_degree.push_back(algebra.action(g, j));
        }
        action.push_back(std::move(per_degree));
    }
    return GradedModuleRep(algebra.dims(), std::move(action));
}

const RationalMatrix& GradedModuleRep::action(int g, int j) const {
    return gen_action_[static_cast<size_t>(g)][static_cast<size_t>(j)];
}

LaurentPoly GradedModuleRep::dims_poly() const { return dims_to_poly(dims_); }

Int GradedModuleRep::total_dim() const {
    Int total = 0;
    for (int d : dims_) total += d;
    return total;
}

LaurentPoly hom_dims(const GradedModuleRep& module, const GradedAlgebra& algebra) {
    if (module.generator_count() != algebra.generator_count()) {
        throw precondition_error("hom_dims: generator counts differ");
    }
    const auto& md = module.dims();
    const auto& ad = algebra.dims();
    const int mtop = module.top_degree();
    const int atop = algebra.top_degree();

    auto mdim = [&](int j) {
        return (j >= 0 && j <= mtop) ? md[static_cast<size_t>(j)] : 0;
    };
    auto adim = [&](int j) {
        return (j >= 0 && j <= atop) ? ad[static_cast<size_t>(j)] : 0;
    };

    LaurentPoly result;
    for (int n = -mtop; n <= atop; ++n) {
        // Column layout: one block of unknowns per lambda_j, j = 0..mtop.
        std::vector<int> offset(static_cast<size_t>(mtop) + 2, 0);
        for (int j = 0; j <= mtop; ++j) {
            offset[static_cast<size_t>(j) + 1] =
                offset[static_cast<size_t>(j)] + mdim(j) * adim(j + n);
        }
        const int unknowns = offset[static_cast<size_t>(mtop) + 1];
        if (unknowns == 0) continue;

        int equations = 0;
        for (int g = 0; g < algebra.generator_count(); ++g) {
            (void)g;
            for (int j = 0; j <= mtop; ++j) {
                equations += mdim(j) * adim(j + n + 1);
            }
        }

        RationalMatrix system(std::max(equations, 1), unknowns);
        int row = 0;
        auto var = [&](int j, int p, int q) {
            // lambda_j entry (p, q): row p in G_{j+n}, column q in M_j.
            return offset[static_cast<size_t>(j)] + p * mdim(j) + q;
        };
        for (int g = 0; g < algebra.generator_count(); ++g) {
            for (int j = 0; j <= mtop; ++j) {
                const int out_rows = adim(j + n + 1);
                if (out_rows == 0 || mdim(j) == 0) continue;
                for (int p = 0; p < out_rows; ++p) {
                    for (int q = 0; q < mdim(j); ++q) {
                        // (lambda_{j+1} A^M_g - A^G_g lambda_j)(p, q) = 0.
                        if (j + 1 <= mtop && adim(j + n + 1) > 0 && mdim(j + 1) > 0) {
                            const auto& am = module.action(g, j);
                            for (int t = 0; t < mdim(j + 1); ++t) {
                                if (am.at(t, q) == 0) continue;
                                system.at(row, var(j + 1, p, t)) += am.at(t, q);
                            }
                        }
                        if (adim(j + n) > 0) {
                            const auto& ag = algebra.action(g, j + n);
                            for (int t = 0; t < adim(j + n); ++t) {
                                if (ag.at(p, t) == 0) continue;
                                system.at(row, var(j, t, q)) -= ag.at(p, t);
                            }
                        }
                        ++row;
                    }
                }
            }
        }

        const int dim = unknowns - rank(system);
        if (dim > 0) result = result + LaurentPoly::monomial(n, dim);
    }
    return result;
}

LaurentPoly socle_dims(const GradedAlgebra& algebra) {
    const auto& dims = algebra.dims();
    const int top = algebra.top_degree();
    LaurentPoly result;
    for (int j = 0; j <= top; ++j) {
        const int dj = dims[static_cast<size_t>(j)];
        if (dj == 0) continue;
        int socle;
        if (j == top || algebra.generator_count() == 0) {
            socle = dj;
        } else {
            RationalMatrix stacked(algebra.generator_count() *
                                       dims[static_cast<size_t>(j) + 1],
                                   dj);
            for (int g = 0; g < algebra.generator_count(); ++g) {
                const auto& a = algebra.action(g, j);
                for (int r = 0; r < a.rows(); ++r) {
                    for (int c = 0; c < a.cols(); ++c) {
                        stacked.at(g * a.rows() + r, c) = a.at(r, c);
                    }
                }
            }
            socle = dj - rank(stacked);
        }
        if (socle > 0) result = result + LaurentPoly::monomial(j, socle);
    }
    return result;
}

bool verify_app5(const GradedModuleRep& module, const GradedAlgebra& algebra) {
    const LaurentPoly hom = hom_dims(module, algebra);
    return module.total_dim() <= hom.eval_one();
}

std::pair<GradedAlgebra, GradedModuleRep>
from_hypersurface(const HypersurfaceModule& module) {
    const int e = module.ring_exponent();
    const auto& a = module.invariants();

    std::vector<int> algebra_dims(static_cast<size_t>(e), 1);
    std::vector<std::vector<RationalMatrix>> algebra_action;
    if (e > 1) {
        std::vector<RationalMatrix> mult;
        for (int j = 0; j + 1 < e; ++j) {
            RationalMatrix m(1, 1);
            m.at(0, 0) = 1;
            mult.push_back(std::move(m));
        }
        algebra_action.push_back(std::move(mult));
    }
    GradedAlgebra algebra(std::move(algebra_dims), std::move(algebra_action));

    const int mtop = *std::max_element(a.begin(), a.end()) - 1;
    std::vector<int> module_dims(static_cast<size_t>(mtop) + 1, 0);
    for (int ai : a) {
        for (int j = 0; j < ai; ++j) module_dims[static_cast<size_t>(j)] += 1;
    }
    // Basis at degree j: the strands with a_i > j, in their original order.
    std::vector<std::vector<RationalMatrix>> module_action;
    if (e > 1) {
        std::vector<RationalMatrix> mult;
        for (int j = 0; j < mtop; ++j) {
            RationalMatrix m(module_dims[static_cast<size_t>(j) + 1],
                             module_dims[static_cast<size_t>(j)]);
            int row = 0;
            int col = 0;
            for (size_t i = 0; i < a.size(); ++i) {
                const bool alive = a[i] > j;
                const bool survives = a[i] > j + 1;
                if (alive && survives) m.at(row, col) = 1;
                if (alive) ++col;
                if (survives) ++row;
            }
            mult.push_back(std::move(m));
        }
        module_action.push_back(std::move(mult));
    }
    GradedModuleRep rep(std::move(module_dims), std::move(module_action));
    return {std::move(algebra), std::move(rep)};
}

} // namespace agr
