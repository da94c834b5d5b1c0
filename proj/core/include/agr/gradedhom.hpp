#ifndef AGR_GRADEDHOM_HPP
#define AGR_GRADEDHOM_HPP

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "agr/errors.hpp"
#include "agr/laurent.hpp"

namespace agr {

using Rational = boost::multiprecision::cpp_rational;

/// Small dense matrix over exact rationals.  Only what the graded-Hom solver
/// needs; no attempt at sparse or modular tricks.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[index(r, c)]; }
    const Rational& at(int r, int c) const { return data_[index(r, c)]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

private:
    size_t index(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) +
               static_cast<size_t>(c);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact row reduction.  Pivots are chosen among the nonzero candidates by
/// smallest bit length to damp coefficient growth; the result is
/// pivot-independent.
int rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Finite-dimensional standard-graded algebra over the rationals, presented
/// by its dimension vector and the multiplication action of a basis of the
/// degree-one piece.  action(g, j) maps degree-j coordinates to degree-(j+1)
/// coordinates.
///
/// Construction certifies two facts and rejects the input otherwise:
///   - the generator actions commute pairwise as maps of degree j -> j+2;
///   - the generators actually generate, i.e. each action stack
///     [action(0,j) | action(1,j) | ...] has full row rank.
class GradedAlgebra {
public:
    GradedAlgebra(std::vector<int> dims,
                  std::vector<std::vector<RationalMatrix>> gen_action);

    const std::vector<int>& dims() const { return dims_; }
    /// Largest degree with a nonzero component.
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int generator_count() const { return static_cast<int>(gen_action_.size()); }
    const RationalMatrix& action(int g, int j) const;

    LaurentPoly dims_poly() const;

private:
    std::vector<int> dims_;
    std::vector<std::vector<RationalMatrix>> gen_action_;
};

/// Graded module presented the same way, acted on by the degree-one
/// generators of some algebra.  Only the commutativity of the actions is
/// certified here; pairing with a compatible algebra is checked by hom_dims.
class GradedModuleRep {
public:
    GradedModuleRep(std::vector<int> dims,
                    std::vector<std::vector<RationalMatrix>> gen_action);

    /// The regular representation of an algebra over itself.
    static GradedModuleRep regular(const GradedAlgebra& algebra);

    const std::vector<int>& dims() const { return dims_; }
    int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
    int generator_count() const { return static_cast<int>(gen_action_.size()); }
    const RationalMatrix& action(int g, int j) const;

    LaurentPoly dims_poly() const;
    Int total_dim() const;

private:
    std::vector<int> dims_;
    std::vector<std::vector<RationalMatrix>> gen_action_;
};

/// Dimension of the graded Hom space Hom(M, G)_n for every shift n, computed
/// by brute force: a degree-n homomorphism is a family of maps
/// lambda_j : M_j -> G_{j+n} subject to lambda_{j+1}(g m) = g lambda_j(m) for
/// every generator g.  The linear system is solved by exact Gaussian
/// elimination; the coefficient of z^n is the solution-space dimension.
LaurentPoly hom_dims(const GradedModuleRep& module, const GradedAlgebra& algebra);

/// Per-degree dimension of the common kernel of all generator actions.
/// An Artinian graded algebra is Gorenstein exactly when the total is 1.
LaurentPoly socle_dims(const GradedAlgebra& algebra);

/// Length inequality: total dim of M is at most the total dim of Hom(M, G).
bool verify_app5(const GradedModuleRep& module, const GradedAlgebra& algebra);

class HypersurfaceModule;

/// Matrix-level realization of a module over the truncated algebra
/// Q/(Pi^e): the algebra has dimension vector (1,...,1) of length e and the
/// module is the direct sum of truncated strands of lengths a_i.
std::pair<GradedAlgebra, GradedModuleRep>
from_hypersurface(const HypersurfaceModule& module);

} // namespace agr

#endif
