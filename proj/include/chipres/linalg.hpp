#ifndef CHIPRES_LINALG_HPP
#define CHIPRES_LINALG_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "chipres/multipoly.hpp"

namespace chipres {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Sparse integer row: (column, value) pairs with strictly increasing columns
/// and nonzero values.
using SparseRow = std::vector<std::pair<int, mpz_class>>;

/// Exact rank by fraction-free elimination; rows are kept primitive.
int rank_exact(std::vector<SparseRow> rows);
int rank_exact(const RationalMatrix& m);
int rank_exact(const PolyMatrix& m);  // entries must be constants

RationalMatrix transpose(const RationalMatrix& m);

/// Unique solution of a square nonsingular system.
std::vector<mpq_class> solve(RationalMatrix a, std::vector<mpq_class> b);

/// Constant matrix of a polynomial matrix evaluated at a point.
RationalMatrix evaluate(const PolyMatrix& m, const Assignment& point);

}  // namespace chipres

#endif
