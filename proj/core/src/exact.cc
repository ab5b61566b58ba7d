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

#include "latgate/exact.h"

#include <algorithm>

namespace latgate {

Rational make_rational(const Integer &num, const Integer &den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string &text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rational &r) {
    return r.get_str();
}

std::string to_string(const Integer &z) {
    return z.get_str();
}

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<long>> num, long den) {
    size_t rows = num.size();
    size_t cols = rows == 0 ? 0 : num.begin()->size();
    std::vector<Rational> data;
    data.reserve(rows * cols);
    for (const auto &r : num) {
        if (r.size() != cols) {
            throw std::invalid_argument("ragged matrix literal");
        }
        for (long v : r) {
            data.push_back(make_rational(v, den));
        }
    }
    return RationalMatrix(rows, cols, std::move(data));
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> entries) {
    size_t rows = entries.size();
    size_t cols = rows == 0 ? 0 : entries.begin()->size();
    std::vector<Integer> data;
    data.reserve(rows * cols);
    for (const auto &r : entries) {
        if (r.size() != cols) {
            throw std::invalid_argument("ragged matrix literal");
        }
        for (long v : r) {
            data.emplace_back(v);
        }
    }
    return IntMatrix(rows, cols, std::move(data));
}

RationalMatrix scale(const RationalMatrix &a, const Rational &factor) {
    RationalMatrix out = a;
    for (size_t i = 0; i < a.rows(); i++) {
        for (auto &x : out.row(i)) {
            x *= factor;
        }
    }
    return out;
}

RationalMatrix mat_inverse(const RationalMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("mat_inverse: matrix is not square");
    }
    size_t n = a.rows();
    RationalMatrix work = a;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (size_t col = 0; col < n; col++) {
        size_t pivot = col;
        while (pivot < n && work(pivot, col) == 0) {
            pivot++;
        }
        if (pivot == n) {
            throw std::domain_error("mat_inverse: singular matrix");
        }
        work.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
        Rational p = work(col, col);
        for (size_t j = 0; j < n; j++) {
            work(col, j) /= p;
            inv(col, j) /= p;
        }
        for (size_t i = 0; i < n; i++) {
            if (i == col || work(i, col) == 0) {
                continue;
            }
            Rational f = work(i, col);
            for (size_t j = 0; j < n; j++) {
                work(i, j) -= f * work(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

namespace {

// Bareiss elimination in place. Returns the rank; `sign` tracks row swaps.
size_t bareiss(IntMatrix &m, int &sign) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    sign = 1;
    Integer prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t pivot = r;
        while (pivot < rows && m(pivot, c) == 0) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            m.swap_rows(pivot, r);
            sign = -sign;
        }
        for (size_t i = r + 1; i < rows; i++) {
            for (size_t j = c + 1; j < cols; j++) {
                Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        r++;
    }
    return r;
}

}  // namespace

Integer determinant(const IntMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    if (a.rows() == 0) {
        return 1;
    }
    IntMatrix m = a;
    int sign = 1;
    size_t r = bareiss(m, sign);
    if (r < a.rows()) {
        return 0;
    }
    Integer d = m(a.rows() - 1, a.cols() - 1);
    return sign < 0 ? Integer(-d) : d;
}

Rational determinant(const RationalMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    Integer den = common_denominator(a);
    Integer d = determinant(clear_denominators(a));
    Integer scale_pow;
    mpz_pow_ui(scale_pow.get_mpz_t(), den.get_mpz_t(), a.rows());
    return make_rational(d, scale_pow);
}

size_t rank(const IntMatrix &a) {
    IntMatrix m = a;
    int sign = 1;
    return bareiss(m, sign);
}

size_t rank(const RationalMatrix &a) {
    return rank(clear_denominators(a));
}

bool is_integral(const RationalMatrix &a) {
    return std::all_of(a.data().begin(), a.data().end(), [](const Rational &x) {
        return x.get_den() == 1;
    });
}

bool is_symmetric(const RationalMatrix &a) {
    if (!a.is_square()) {
        return false;
    }
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = i + 1; j < a.cols(); j++) {
            if (a(i, j) != a(j, i)) {
                return false;
            }
        }
    }
    return true;
}

Integer common_denominator(const RationalMatrix &a) {
    Integer l = 1;
    for (const auto &x : a.data()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    return l;
}

IntMatrix clear_denominators(const RationalMatrix &a) {
    Integer l = common_denominator(a);
    IntMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            const Rational &x = a(i, j);
            out(i, j) = x.get_num() * (l / x.get_den());
        }
    }
    return out;
}

IntMatrix to_integer(const RationalMatrix &a) {
    if (!is_integral(a)) {
        throw std::domain_error("matrix has non-integer entries");
    }
    IntMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) = a(i, j).get_num();
        }
    }
    return out;
}

RationalMatrix to_rational(const IntMatrix &a) {
    RationalMatrix out(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            out(i, j) = a(i, j);
        }
    }
    return out;
}

}  // namespace latgate
