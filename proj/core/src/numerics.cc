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

#include "latgate/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latgate {

RealMatrix RealMatrix::identity(size_t size) {
    RealMatrix m(size);
    for (size_t i = 0; i < size; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

RealMatrix to_real(const RationalMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("to_real: matrix is not square");
    }
    RealMatrix out(m.rows());
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out(i, j) = m(i, j).get_d();
        }
    }
    return out;
}

RealMatrix multiply(const RealMatrix &x, const RealMatrix &y) {
    if (x.n != y.n) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    RealMatrix out(x.n);
    for (size_t i = 0; i < x.n; i++) {
        for (size_t k = 0; k < x.n; k++) {
            double v = x(i, k);
            for (size_t j = 0; j < x.n; j++) {
                out(i, j) += v * y(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const RealMatrix &x, const RealMatrix &y) {
    double m = 0;
    for (size_t k = 0; k < x.a.size(); k++) {
        m = std::max(m, std::abs(x.a[k] - y.a[k]));
    }
    return m;
}

double max_abs(const RealMatrix &x) {
    double m = 0;
    for (double v : x.a) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SymmetricSpectrum sym_eigen(const RealMatrix &m) {
    const size_t n = m.n;
    double frob = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            frob += m(i, j) * m(i, j);
            if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
                throw std::invalid_argument("sym_eigen: matrix is not symmetric");
            }
        }
    }
    frob = std::sqrt(frob);

    RealMatrix a = m;
    RealMatrix v = RealMatrix::identity(n);
    const double target = 1e-14 * std::max(frob, 1e-300);
    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                off += 2 * a(i, j) * a(i, j);
            }
        }
        if (std::sqrt(off) <= target) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                double theta = (a(q, q) - a(p, p)) / (2 * apq);
                double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t k = 0; k < n; k++) {
                    double akp = a(k, p);
                    double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; k++) {
                    double apk = a(p, k);
                    double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (size_t k = 0; k < n; k++) {
                    double vkp = v(k, p);
                    double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x) > a(y, y);
    });
    SymmetricSpectrum out;
    out.eigenvectors = RealMatrix(n);
    for (size_t k = 0; k < n; k++) {
        out.eigenvalues.push_back(a(order[k], order[k]));
        for (size_t i = 0; i < n; i++) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    for (size_t k = 0; k < n; k++) {
        for (size_t i = 0; i < n; i++) {
            double av = 0;
            for (size_t j = 0; j < n; j++) {
                av += m(i, j) * out.eigenvectors(j, k);
            }
            out.residual = std::max(out.residual, std::abs(av - out.eigenvalues[k] * out.eigenvectors(i, k)));
        }
    }
    return out;
}

RealMatrix psd_sqrt(const RealMatrix &m, size_t rank) {
    SymmetricSpectrum spec = sym_eigen(m);
    const size_t n = m.n;
    std::vector<double> roots(n);
    for (size_t k = 0; k < n; k++) {
        double lambda = spec.eigenvalues[k];
        if (lambda < -1e-10) {
            throw std::domain_error("psd_sqrt: matrix is indefinite");
        }
        roots[k] = k < rank ? std::sqrt(std::max(lambda, 0.0)) : 0.0;
    }
    RealMatrix out(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            double s = 0;
            for (size_t k = 0; k < n; k++) {
                s += spec.eigenvectors(i, k) * roots[k] * spec.eigenvectors(j, k);
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace latgate
