#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superq/rational.hpp"

namespace superq {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Vec neg(const Vec& v);
bool is_zero(const Vec& v);
bool lex_less(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v, char sep = ',');
Vec vec_from_string(std::string_view s);  // comma or space separated rationals

Mat identity(std::size_t n);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);

std::size_t rank(Mat a);

/// Basis of { x : row * x = 0 for every row }.
std::vector<Vec> nullspace(const Mat& rows, std::size_t dim);

/// One solution of A x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<Vec> solve(Mat a, Vec b);

std::optional<Mat> inverse(const Mat& a);

/// Determinant of a square matrix.
Rat det(Mat a);

/// Scales a rational vector to a primitive integer vector with the same direction.
Vec primitive(const Vec& v);

/// All 2^n principal minors nonnegative; exact PSD test for small symmetric matrices.
bool is_positive_semidefinite(const Mat& a);

}  // namespace superq
