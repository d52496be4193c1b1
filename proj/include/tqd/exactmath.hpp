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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tqd {

using BigInt = boost::multiprecision::cpp_int;

// Reduces a into [0, m) for positive m.
int64_t mod(int64_t a, int64_t m);
BigInt mod(const BigInt &a, const BigInt &m);
int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// A rational number taken modulo 1, kept in lowest terms with
// 0 <= num < den.  Used for every phase and quadratic-form value.
class Rational01 {
   public:
    Rational01() = default;
    Rational01(int64_t num, int64_t den);
    static Rational01 from_string(const std::string &text);

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }

    Rational01 operator+(const Rational01 &other) const;
    Rational01 operator-(const Rational01 &other) const;
    Rational01 operator-() const;
    Rational01 operator*(int64_t k) const;
    bool operator==(const Rational01 &other) const = default;
    bool operator<(const Rational01 &other) const;

    // Canonical "p/q" rendering ("0" for zero).
    std::string str() const;

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

std::ostream &operator<<(std::ostream &out, const Rational01 &r);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);
    static IntMatrix identity(size_t n);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    BigInt &at(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const BigInt &at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    IntMatrix operator*(const IntMatrix &other) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix &other) const = default;
    bool is_diagonal() const;
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BigInt> data_;
};

// Exact determinant via fraction-free elimination (square input).
BigInt determinant(const IntMatrix &a);

struct SnfResult {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    // Diagonal entries of S (length min(rows, cols)).
    std::vector<BigInt> diagonal() const;
    // Number of nonzero diagonal entries.
    size_t rank() const;
};

// Smith normal form: U * A * V == S with U, V unimodular and the diagonal
// of S non-negative and forming a divisibility chain.
SnfResult smith_normal_form(const IntMatrix &a);

// Invariant factors (> 1) of the cokernel Z^rows / A Z^cols, with a 0 entry
// for every free summand.
std::vector<BigInt> cokernel_invariants(const IntMatrix &a);

// Rows form a basis of the integer left kernel {y : y A = 0}.
IntMatrix integer_left_kernel(const IntMatrix &a);

// Inverse of a square unimodular integer matrix; throws if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix &a);

// Solver for A x == b where row i is taken modulo moduli[i].  Each row is
// lifted to the common modulus lcm(moduli) by the factor lcm / moduli[i]
// and the resulting system is diagonalised once, so many right-hand sides
// can be solved cheaply.
class LinearModSolver {
   public:
    LinearModSolver(const IntMatrix &a, const std::vector<int64_t> &moduli);

    std::optional<std::vector<int64_t>> solve(const std::vector<int64_t> &b) const;

    // Basis of the solution module of the homogeneous system A x == 0,
    // expressed with entries reduced into [0, modulus) where modulus is the
    // common lifted modulus.  Every homogeneous solution is an integer
    // combination of these vectors.
    const std::vector<std::vector<int64_t>> &kernel_basis() const {
        return kernel_;
    }
    int64_t modulus() const {
        return modulus_;
    }

   private:
    size_t n_ = 0;
    size_t m_ = 0;
    int64_t modulus_ = 1;
    std::vector<int64_t> scale_;
    SnfResult snf_;
    std::vector<std::vector<int64_t>> kernel_;
};

std::optional<std::vector<int64_t>> solve_linear_mod(
    const IntMatrix &a, const std::vector<int64_t> &b, const std::vector<int64_t> &moduli);

}  // namespace tqd
