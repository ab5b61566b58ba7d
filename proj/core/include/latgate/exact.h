// Copyright 2026 The latgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATGATE_EXACT_H
#define LATGATE_EXACT_H

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgate {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error on a zero denominator.
Rational make_rational(const Integer &num, const Integer &den = 1);

/// Parses "p/q" or "p".
Rational parse_rational(const std::string &text);
std::string to_string(const Rational &r);
std::string to_string(const Integer &z);

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
   public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    Matrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("matrix data size does not match shape");
        }
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto &r : rows) {
            if (r.size() != cols_) {
                throw std::invalid_argument("ragged matrix literal");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m(i, i) = 1;
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    T &operator()(size_t i, size_t j) {
        return data_[i * cols_ + j];
    }
    const T &operator()(size_t i, size_t j) const {
        return data_[i * cols_ + j];
    }

    std::span<T> row(size_t i) {
        return std::span<T>(data_.data() + i * cols_, cols_);
    }
    std::span<const T> row(size_t i) const {
        return std::span<const T>(data_.data() + i * cols_, cols_);
    }

    const std::vector<T> &data() const {
        return data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; i++) {
            for (size_t j = 0; j < cols_; j++) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) {
            return;
        }
        for (size_t j = 0; j < cols_; j++) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    bool operator==(const Matrix &other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Convenience for literals: entries are num[i][j] / den.
RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> num, long den = 1);
IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> entries);

template <typename T>
Matrix<T> mat_mul(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mat_mul: dimension mismatch");
    }
    Matrix<T> c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t k = 0; k < a.cols(); k++) {
            const T &aik = a(i, k);
            if (aik == 0) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

RationalMatrix scale(const RationalMatrix &a, const Rational &factor);

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error if singular.
RationalMatrix mat_inverse(const RationalMatrix &a);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix &a);
Rational determinant(const RationalMatrix &a);

/// Rank via fraction-free elimination.
size_t rank(const IntMatrix &a);
size_t rank(const RationalMatrix &a);

bool is_integral(const RationalMatrix &a);
bool is_symmetric(const RationalMatrix &a);

/// LCM of all entry denominators (1 for an empty matrix).
Integer common_denominator(const RationalMatrix &a);

/// Multiplies by common_denominator(a) and returns the integer result.
IntMatrix clear_denominators(const RationalMatrix &a);

/// Throws std::domain_error if some entry is not an integer.
IntMatrix to_integer(const RationalMatrix &a);
RationalMatrix to_rational(const IntMatrix &a);

/// Row-style Hermite normal form: h = t * a with t unimodular. Rows of h are in echelon
/// form (zeros below and left of each pivot), pivots positive, entries above a pivot
/// reduced into [0, pivot). Zero rows sit at the bottom.
struct HermiteForm {
    IntMatrix h;
    IntMatrix t;
};
HermiteForm hermite_normal_form(const IntMatrix &a);

/// Nonzero rows of the Hermite normal form: a basis of the row lattice.
IntMatrix row_lattice_basis(const IntMatrix &a);

/// Smith normal form over the integers, divisibility chain d1 | d2 | ...
struct SmithForm {
    IntMatrix s;
    size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix &a);

}  // namespace latgate

#endif
