#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace msidon {

// Dense matrices with entries in GF(p^m). Elimination never leaves the
// subfield the entries started in, so one routine serves F_p, F_q and
// F_{q^t} systems alike.
using Row = std::vector<elt>;
using Mat = std::vector<Row>;

// In-place reduced row echelon form; returns the rank. Zero rows are removed.
unsigned rref(const Field& F, Mat& rows);

unsigned rank_of(const Field& F, Mat rows);

// Reduces v against RREF rows; returns the residual (zero iff v is in the row
// space) together with the elimination coefficients used.
Row reduce_against(const Field& F, const Mat& rref_rows, Row v);

bool in_row_space(const Field& F, const Mat& rref_rows, Row v);

// Basis of {x : x A = 0} for the k x n matrix A (left null space of A given
// by rows). Rows of the result are coefficient vectors of length k.
Mat left_nullspace(const Field& F, const Mat& rows);

// Solves A x = b; nullopt when inconsistent. A need not be square.
std::optional<Row> solve_linear(const Field& F, Mat A, Row b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> invert(const Field& F, Mat A);

}  // namespace msidon
