// Copyright 2026 The tqdstab Authors
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

#include "tqd/exactmath.hpp"

#include <numeric>
#include <sstream>

namespace tqd {

int64_t mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

BigInt mod(const BigInt &a, const BigInt &m) {
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

int64_t gcd64(int64_t a, int64_t b) {
    return std::gcd(a, b);
}

int64_t lcm64(int64_t a, int64_t b) {
    return std::lcm(a, b);
}

// --------------------------------------------------------------------------
// Rational01
// --------------------------------------------------------------------------

Rational01::Rational01(int64_t num, int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("Rational01 with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num = mod(num, den);
    int64_t g = std::gcd(num, den);
    if (g == 0) {
        g = den;
    }
    num_ = num / g;
    den_ = den / g;
}

Rational01 Rational01::from_string(const std::string &text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational01(std::stoll(text), 1);
    }
    return Rational01(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

Rational01 Rational01::operator+(const Rational01 &other) const {
    int64_t l = std::lcm(den_, other.den_);
    return Rational01(num_ * (l / den_) + other.num_ * (l / other.den_), l);
}

Rational01 Rational01::operator-(const Rational01 &other) const {
    return *this + (-other);
}

Rational01 Rational01::operator-() const {
    return Rational01(-num_, den_);
}

Rational01 Rational01::operator*(int64_t k) const {
    // Reduce k first so the product cannot overflow for sane denominators.
    return Rational01(num_ * mod(k, den_), den_);
}

bool Rational01::operator<(const Rational01 &other) const {
    return (__int128)num_ * other.den_ < (__int128)other.num_ * den_;
}

std::string Rational01::str() const {
    if (num_ == 0) {
        return "0";
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream &operator<<(std::ostream &out, const Rational01 &r) {
    return out << r.str();
}

// --------------------------------------------------------------------------
// IntMatrix
// --------------------------------------------------------------------------

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("IntMatrix rows must have equal length");
        }
        for (int64_t v : row) {
            data_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("IntMatrix product dimension mismatch");
    }
    IntMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const BigInt &a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out.at(r, c) += a * other.at(k, c);
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

bool IntMatrix::is_diagonal() const {
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (r != c && at(r, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

std::string IntMatrix::str() const {
    std::stringstream out;
    out << "[";
    for (size_t r = 0; r < rows_; r++) {
        out << (r ? ", [" : "[");
        for (size_t c = 0; c < cols_; c++) {
            out << (c ? "," : "") << at(r, c);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

BigInt determinant(const IntMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("determinant of non-square matrix");
    }
    size_t n = a.rows();
    if (n == 0) {
        return 1;
    }
    // Bareiss fraction-free elimination.
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            m[r][c] = a.at(r, c);
        }
    }
    BigInt sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; k++) {
        if (m[k][k] == 0) {
            size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) {
                swap++;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (size_t r = k + 1; r < n; r++) {
            for (size_t c = k + 1; c < n; c++) {
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// --------------------------------------------------------------------------
// Smith normal form
// --------------------------------------------------------------------------

namespace {

using Rows = std::vector<std::vector<BigInt>>;

struct SnfWork {
    Rows a;
    Rows u;  // Row operations accumulate here.
    Rows v;  // Column operations accumulate here (stored column-major: v[c] is column c).
    size_t m;
    size_t n;

    void swap_rows(size_t i, size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }
    void swap_cols(size_t i, size_t j) {
        for (auto &row : a) {
            std::swap(row[i], row[j]);
        }
        std::swap(v[i], v[j]);
    }
    // row_i -= q * row_j
    void sub_row(size_t i, size_t j, const BigInt &q) {
        for (size_t c = 0; c < n; c++) {
            if (a[j][c] != 0) {
                a[i][c] -= q * a[j][c];
            }
        }
        for (size_t c = 0; c < m; c++) {
            if (u[j][c] != 0) {
                u[i][c] -= q * u[j][c];
            }
        }
    }
    // col_i -= q * col_j
    void sub_col(size_t i, size_t j, const BigInt &q) {
        for (size_t r = 0; r < m; r++) {
            if (a[r][j] != 0) {
                a[r][i] -= q * a[r][j];
            }
        }
        for (size_t r = 0; r < n; r++) {
            if (v[j][r] != 0) {
                v[i][r] -= q * v[j][r];
            }
        }
    }
    void negate_row(size_t i) {
        for (auto &x : a[i]) {
            x = -x;
        }
        for (auto &x : u[i]) {
            x = -x;
        }
    }
};

BigInt babs(const BigInt &x) {
    return x < 0 ? BigInt(-x) : x;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix &input) {
    SnfWork w;
    w.m = input.rows();
    w.n = input.cols();
    w.a.assign(w.m, std::vector<BigInt>(w.n));
    for (size_t r = 0; r < w.m; r++) {
        for (size_t c = 0; c < w.n; c++) {
            w.a[r][c] = input.at(r, c);
        }
    }
    w.u.assign(w.m, std::vector<BigInt>(w.m));
    for (size_t k = 0; k < w.m; k++) {
        w.u[k][k] = 1;
    }
    w.v.assign(w.n, std::vector<BigInt>(w.n));
    for (size_t k = 0; k < w.n; k++) {
        w.v[k][k] = 1;
    }

    size_t limit = std::min(w.m, w.n);
    for (size_t t = 0; t < limit; t++) {
        while (true) {
            // Smallest nonzero absolute value in the trailing block.
            bool found = false;
            BigInt best;
            size_t br = 0, bc = 0;
            for (size_t r = t; r < w.m; r++) {
                for (size_t c = t; c < w.n; c++) {
                    if (w.a[r][c] != 0) {
                        BigInt av = babs(w.a[r][c]);
                        if (!found || av < best) {
                            found = true;
                            best = av;
                            br = r;
                            bc = c;
                            if (best == 1) {
                                break;
                            }
                        }
                    }
                }
                if (found && best == 1) {
                    break;
                }
            }
            if (!found) {
                goto finished;
            }
            if (br != t) {
                w.swap_rows(br, t);
            }
            if (bc != t) {
                w.swap_cols(bc, t);
            }
            bool clean = true;
            for (size_t r = t + 1; r < w.m; r++) {
                if (w.a[r][t] != 0) {
                    BigInt q = w.a[r][t] / w.a[t][t];
                    w.sub_row(r, t, q);
                    if (w.a[r][t] != 0) {
                        clean = false;
                    }
                }
            }
            for (size_t c = t + 1; c < w.n; c++) {
                if (w.a[t][c] != 0) {
                    BigInt q = w.a[t][c] / w.a[t][t];
                    w.sub_col(c, t, q);
                    if (w.a[t][c] != 0) {
                        clean = false;
                    }
                }
            }
            if (!clean) {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (size_t r = t + 1; r < w.m && divides; r++) {
                for (size_t c = t + 1; c < w.n; c++) {
                    if (w.a[r][c] % w.a[t][t] != 0) {
                        // Adding row r to row t brings the offending entry
                        // into the pivot row; the next pass reduces it.
                        w.sub_row(t, r, BigInt(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (w.a[t][t] < 0) {
            w.negate_row(t);
        }
    }
finished:
    SnfResult result{IntMatrix(w.m, w.m), IntMatrix(w.m, w.n), IntMatrix(w.n, w.n)};
    for (size_t r = 0; r < w.m; r++) {
        for (size_t c = 0; c < w.m; c++) {
            result.U.at(r, c) = w.u[r][c];
        }
        for (size_t c = 0; c < w.n; c++) {
            result.S.at(r, c) = w.a[r][c];
        }
    }
    for (size_t c = 0; c < w.n; c++) {
        for (size_t r = 0; r < w.n; r++) {
            result.V.at(r, c) = w.v[c][r];
        }
    }
    return result;
}

std::vector<BigInt> SnfResult::diagonal() const {
    std::vector<BigInt> out;
    size_t k = std::min(S.rows(), S.cols());
    for (size_t i = 0; i < k; i++) {
        out.push_back(S.at(i, i));
    }
    return out;
}

size_t SnfResult::rank() const {
    size_t r = 0;
    for (const auto &d : diagonal()) {
        if (d != 0) {
            r++;
        }
    }
    return r;
}

std::vector<BigInt> cokernel_invariants(const IntMatrix &a) {
    SnfResult snf = smith_normal_form(a);
    std::vector<BigInt> out;
    auto diag = snf.diagonal();
    for (size_t i = 0; i < a.rows(); i++) {
        BigInt d = i < diag.size() ? diag[i] : BigInt(0);
        if (d != 1) {
            out.push_back(d);
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Linear systems modulo per-row moduli
// --------------------------------------------------------------------------

IntMatrix integer_left_kernel(const IntMatrix &a) {
    if (a.rows() == 0) {
        return IntMatrix(0, 0);
    }
    if (a.cols() == 0) {
        return IntMatrix::identity(a.rows());
    }
    SnfResult snf = smith_normal_form(a);
    size_t rank = snf.rank();
    IntMatrix out(a.rows() - rank, a.rows());
    for (size_t r = rank; r < a.rows(); r++) {
        for (size_t c = 0; c < a.rows(); c++) {
            out.at(r - rank, c) = snf.U.at(r, c);
        }
    }
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("unimodular_inverse: matrix must be square");
    }
    if (a.rows() == 0) {
        return a;
    }
    SnfResult snf = smith_normal_form(a);
    // U A V = S with S = I exactly when A is unimodular (up to the sign
    // convention of the diagonal), so A^{-1} = V S^{-1} U.
    IntMatrix sinv = IntMatrix::identity(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        const BigInt &d = snf.S.at(i, i);
        if (d != 1 && d != -1) {
            throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
        }
        sinv.at(i, i) = d;
    }
    return snf.V * sinv * snf.U;
}

LinearModSolver::LinearModSolver(const IntMatrix &a, const std::vector<int64_t> &moduli)
    : n_(a.cols()), m_(a.rows()) {
    if (moduli.size() != a.rows()) {
        throw std::invalid_argument("solve_linear_mod: moduli length must equal row count");
    }
    for (int64_t d : moduli) {
        if (d <= 0) {
            throw std::invalid_argument("solve_linear_mod: moduli must be positive");
        }
        modulus_ = std::lcm(modulus_, d);
    }
    for (int64_t d : moduli) {
        scale_.push_back(modulus_ / d);
    }
    // Augmented system [A' | modulus * I] over the integers.
    IntMatrix aug(m_, n_ + m_);
    for (size_t r = 0; r < m_; r++) {
        for (size_t c = 0; c < n_; c++) {
            aug.at(r, c) = a.at(r, c) * scale_[r];
        }
        aug.at(r, n_ + r) = modulus_;
    }
    snf_ = smith_normal_form(aug);
    size_t rank = snf_.rank();
    // Kernel vectors: null columns of V plus, for each nonzero pivot s_i,
    // nothing extra (the integer kernel of the augmented matrix already
    // accounts for the modulus columns).
    for (size_t c = rank; c < n_ + m_; c++) {
        std::vector<int64_t> x(n_);
        bool nonzero = false;
        for (size_t r = 0; r < n_; r++) {
            x[r] = (int64_t)mod(snf_.V.at(r, c), BigInt(modulus_));
            nonzero |= x[r] != 0;
        }
        if (nonzero) {
            kernel_.push_back(std::move(x));
        }
    }
}

std::optional<std::vector<int64_t>> LinearModSolver::solve(const std::vector<int64_t> &b) const {
    if (b.size() != m_) {
        throw std::invalid_argument("solve_linear_mod: right-hand side has wrong length");
    }
    std::vector<BigInt> ub(m_);
    for (size_t r = 0; r < m_; r++) {
        for (size_t k = 0; k < m_; k++) {
            const BigInt &u = snf_.U.at(r, k);
            if (u != 0 && b[k] != 0) {
                ub[r] += u * b[k] * scale_[k];
            }
        }
    }
    size_t total = n_ + m_;
    std::vector<BigInt> w(total);
    for (size_t r = 0; r < m_; r++) {
        BigInt s = r < total ? snf_.S.at(r, r) : BigInt(0);
        if (s == 0) {
            if (ub[r] != 0) {
                return std::nullopt;
            }
            continue;
        }
        if (ub[r] % s != 0) {
            return std::nullopt;
        }
        w[r] = ub[r] / s;
    }
    std::vector<int64_t> x(n_);
    for (size_t r = 0; r < n_; r++) {
        BigInt acc = 0;
        for (size_t c = 0; c < total; c++) {
            if (w[c] != 0) {
                acc += snf_.V.at(r, c) * w[c];
            }
        }
        x[r] = (int64_t)mod(acc, BigInt(modulus_));
    }
    return x;
}

std::optional<std::vector<int64_t>> solve_linear_mod(
    const IntMatrix &a, const std::vector<int64_t> &b, const std::vector<int64_t> &moduli) {
    return LinearModSolver(a, moduli).solve(b);
}

}  // namespace tqd
