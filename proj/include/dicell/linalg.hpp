#pragma once

#include "dicell/types.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dicell {

/// Sparse exact matrix. Stored entries are nonzero; rationals stay in lowest
/// terms with positive denominator (boost normalizes on construction).
template <class C>
class sparse_matrix {
public:
    sparse_matrix() = default;
    sparse_matrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::map<std::pair<int, int>, C>& entries() const { return e_; }

    void set(int r, int c, const C& value) {
        if (r < 0 || c < 0 || r >= rows_ || c >= cols_) throw error("matrix index out of bounds");
        if (value == 0)
            e_.erase({r, c});
        else
            e_[{r, c}] = value;
    }
    C get(int r, int c) const {
        auto it = e_.find({r, c});
        return it == e_.end() ? C(0) : it->second;
    }

    std::vector<std::vector<C>> dense() const {
        std::vector<std::vector<C>> m(static_cast<size_t>(rows_),
                                      std::vector<C>(static_cast<size_t>(cols_), C(0)));
        for (const auto& [rc, v] : e_) m[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v;
        return m;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, C> e_;
};

using qmatrix = sparse_matrix<bigrat>;
using zmatrix = sparse_matrix<bigint>;

/// Rank by fraction-free (Bareiss) elimination; pivots are chosen by lowest
/// column index, then lowest row index.
int rank(const qmatrix& m);
int rank(const zmatrix& m);
int rank_dense(std::vector<std::vector<bigrat>> m);

/// Null-space basis in reduced echelon form with canonical pivot order; empty
/// for a trivial kernel.
std::vector<std::vector<bigrat>> kernel_basis(const qmatrix& m);
std::vector<std::vector<bigrat>> kernel_basis_dense(std::vector<std::vector<bigrat>> m,
                                                    int cols);

/// Z-basis of the integer null lattice, Hermite-style reduction. Vectors are
/// primitive with the first nonzero entry positive, and the basis matrix is in
/// a unique canonical (column-HNF) form.
std::vector<std::vector<bigint>> integer_kernel_basis(const zmatrix& m);

/// Coefficients expressing target in the span of the vectors, or nullopt.
std::optional<std::vector<bigrat>> in_span(const std::vector<std::vector<bigrat>>& vectors,
                                           const std::vector<bigrat>& target);

/// Rank of a sparse integer matrix given as rows; fraction-free updates with
/// content reduction, pivot rows chosen sparsest-first per column.
int sparse_rank(std::vector<std::map<int, bigint>> rows);

}  // namespace dicell
