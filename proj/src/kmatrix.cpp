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

#include "tqd/kmatrix.hpp"

#include <stdexcept>

namespace tqd {

namespace {

int64_t to_i64(const BigInt &v) {
    return v.convert_to<int64_t>();
}

}  // namespace

IntMatrix cocycle_matrix_u(const TqdParams &params) {
    size_t M = params.M();
    IntMatrix U(M, M);
    for (size_t i = 0; i < M; i++) {
        U.at(i, i) = params.n[i];
        for (size_t j = i + 1; j < M; j++) {
            U.at(i, j) = params.nij[i][j];
        }
    }
    return U;
}

IntMatrix cocycle_matrix_s(const TqdParams &params) {
    IntMatrix U = cocycle_matrix_u(params);
    IntMatrix S(U.rows(), U.cols());
    for (size_t i = 0; i < U.rows(); i++) {
        for (size_t j = 0; j < U.cols(); j++) {
            S.at(i, j) = U.at(i, j) + U.at(j, i);
        }
    }
    return S;
}

KMatrix build_k_tqd(const TqdParams &params) {
    params.validate();
    size_t M = params.M();
    IntMatrix S = cocycle_matrix_s(params);
    KMatrix out{M, IntMatrix(2 * M, 2 * M)};
    for (size_t i = 0; i < M; i++) {
        out.K.at(i, M + i) = params.N[i];
        out.K.at(M + i, i) = params.N[i];
        for (size_t j = 0; j < M; j++) {
            out.K.at(M + i, M + j) = -S.at(i, j);
        }
    }
    return out;
}

KMatrix build_k_toric(const std::vector<int64_t> &dims) {
    size_t M = dims.size();
    KMatrix out{M, IntMatrix(2 * M, 2 * M)};
    for (size_t i = 0; i < M; i++) {
        out.K.at(i, M + i) = dims[i];
        out.K.at(M + i, i) = dims[i];
    }
    return out;
}

RationalMatrix to_rational(const IntMatrix &m) {
    RationalMatrix out(m.rows(), std::vector<BigRational>(m.cols()));
    for (size_t i = 0; i < m.rows(); i++) {
        for (size_t j = 0; j < m.cols(); j++) {
            out[i][j] = BigRational(m.at(i, j));
        }
    }
    return out;
}

RationalMatrix rational_inverse(const RationalMatrix &m) {
    size_t n = m.size();
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<BigRational>(n));
    for (size_t i = 0; i < n; i++) {
        if (a[i].size() != n) {
            throw std::invalid_argument("rational_inverse: matrix must be square");
        }
        inv[i][i] = 1;
    }
    for (size_t c = 0; c < n; c++) {
        size_t p = c;
        while (p < n && a[p][c] == 0) {
            p++;
        }
        if (p == n) {
            throw std::invalid_argument("matrix is singular");
        }
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        BigRational pivot = a[c][c];
        for (size_t j = 0; j < n; j++) {
            a[c][j] /= pivot;
            inv[c][j] /= pivot;
        }
        for (size_t r = 0; r < n; r++) {
            if (r == c || a[r][c] == 0) {
                continue;
            }
            BigRational f = a[r][c];
            for (size_t j = 0; j < n; j++) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

RationalMatrix k_inverse(const IntMatrix &K) {
    return rational_inverse(to_rational(K));
}

RationalMatrix rational_product(const RationalMatrix &a, const RationalMatrix &b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RationalMatrix out(n, std::vector<BigRational>(m));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            for (size_t l = 0; l < k; l++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

RationalMatrix rational_transpose(const RationalMatrix &a) {
    size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    RationalMatrix out(m, std::vector<BigRational>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

Rational01 rational_mod1(const BigRational &r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    return Rational01(to_i64(mod(num, den)), to_i64(den));
}

KAnyonGroup anyon_group_from_k(const IntMatrix &K) {
    if (determinant(K) == 0) {
        throw std::invalid_argument("K matrix is singular");
    }
    size_t n = K.rows();
    SnfResult snf = smith_normal_form(K);
    IntMatrix uinv = unimodular_inverse(snf.U);
    KAnyonGroup out;
    std::vector<int64_t> s(n);
    for (size_t i = 0; i < n; i++) {
        s[i] = to_i64(abs(snf.S.at(i, i)));
        if (s[i] != 1) {
            out.invariant_factors.push_back(s[i]);
        }
    }
    // Anyons: l = U^{-1} y with y in the box prod [0, s_i).
    FiniteAbelianGroup box{s};
    for (const auto &y : box.elements()) {
        std::vector<int64_t> l(n);
        for (size_t r = 0; r < n; r++) {
            BigInt acc = 0;
            for (size_t c = 0; c < n; c++) {
                acc += uinv.at(r, c) * y[c];
            }
            l[r] = to_i64(acc);
        }
        out.representatives.push_back(l);
    }
    return out;
}

namespace {

BigRational bilinear(const RationalMatrix &kinv, const std::vector<int64_t> &l, const std::vector<int64_t> &lp) {
    BigRational acc = 0;
    for (size_t i = 0; i < l.size(); i++) {
        for (size_t j = 0; j < lp.size(); j++) {
            acc += BigRational(l[i]) * kinv[i][j] * BigRational(lp[j]);
        }
    }
    return acc;
}

}  // namespace

Rational01 q_of(const IntMatrix &K, const std::vector<int64_t> &l) {
    if (l.size() != K.rows()) {
        throw std::invalid_argument("anyon vector length does not match K");
    }
    return rational_mod1(bilinear(k_inverse(K), l, l) / 2);
}

Rational01 b_of(const IntMatrix &K, const std::vector<int64_t> &l, const std::vector<int64_t> &lp) {
    if (l.size() != K.rows() || lp.size() != K.rows()) {
        throw std::invalid_argument("anyon vector length does not match K");
    }
    return rational_mod1(bilinear(k_inverse(K), l, lp));
}

AnyonTheory theory_from_k(const IntMatrix &K) {
    size_t n = K.rows();
    for (size_t i = 0; i < n; i++) {
        if (mod(K.at(i, i), BigInt(2)) != 0) {
            throw std::invalid_argument("theory_from_k needs an even K matrix");
        }
    }
    RationalMatrix kinv = k_inverse(K);
    std::vector<Rational01> q(n);
    std::vector<std::vector<Rational01>> b(n, std::vector<Rational01>(n));
    for (size_t i = 0; i < n; i++) {
        q[i] = rational_mod1(kinv[i][i] / 2);
        for (size_t j = 0; j < n; j++) {
            b[i][j] = rational_mod1(kinv[i][j]);
        }
    }
    return theory_from_presentation(K.transpose(), q, b).theory;
}

IntMatrix transform(const IntMatrix &K, const IntMatrix &W) {
    BigInt det = determinant(W);
    if (det != 1 && det != -1) {
        throw std::invalid_argument("transformation matrix is not unimodular");
    }
    return W * K * W.transpose();
}

int64_t signature(const IntMatrix &K) {
    RationalMatrix a = to_rational(K);
    size_t n = a.size();
    int64_t sig = 0;
    for (size_t c = 0; c < n; c++) {
        // Find a nonzero diagonal pivot among the remaining indices.
        size_t p = c;
        while (p < n && a[p][p] == 0) {
            p++;
        }
        if (p == n) {
            // All remaining diagonal entries vanish: combine two indices.
            size_t r = n;
            for (size_t i = c; i < n && r == n; i++) {
                for (size_t j = i + 1; j < n; j++) {
                    if (a[i][j] != 0) {
                        r = i;
                        // index i += index j (congruence), making a_ii = 2 a_ij.
                        for (size_t k = 0; k < n; k++) {
                            a[i][k] += a[j][k];
                        }
                        for (size_t k = 0; k < n; k++) {
                            a[k][i] += a[k][j];
                        }
                        break;
                    }
                }
            }
            if (r == n) {
                break;  // the rest is identically zero
            }
            p = r;
        }
        std::swap(a[p], a[c]);
        for (auto &row : a) {
            std::swap(row[p], row[c]);
        }
        BigRational pivot = a[c][c];
        sig += pivot > 0 ? 1 : -1;
        for (size_t r = c + 1; r < n; r++) {
            BigRational f = a[r][c] / pivot;
            if (f == 0) {
                continue;
            }
            for (size_t k = c; k < n; k++) {
                a[r][k] -= f * a[c][k];
            }
            for (size_t k = c; k < n; k++) {
                a[k][r] = a[r][k];
            }
        }
    }
    return sig;
}

KCensus census(const IntMatrix &K) {
    KCensus out;
    RationalMatrix kinv = k_inverse(K);
    for (const auto &l : anyon_group_from_k(K).representatives) {
        out.by_theta[rational_mod1(bilinear(kinv, l, l) / 2)]++;
        out.size++;
    }
    out.signature = signature(K);
    return out;
}

CondensationMatrices condensation_matrices(const TqdParams &params) {
    params.validate();
    size_t M = params.M();
    std::vector<int64_t> squares;
    for (int64_t n : params.N) {
        squares.push_back(n * n);
    }
    CondensationMatrices out;
    out.K_TC = build_k_toric(squares).K;
    IntMatrix U = cocycle_matrix_u(params);
    IntMatrix S = cocycle_matrix_s(params);
    out.Q = IntMatrix(2 * M, M);
    out.L = IntMatrix(2 * M, 2 * M);
    for (size_t i = 0; i < M; i++) {
        out.Q.at(i, i) = -params.N[i];
        for (size_t j = 0; j < M; j++) {
            out.Q.at(M + i, j) = params.N[i] * U.at(i, j);
        }
        out.L.at(i, i) = 1;
        out.L.at(M + i, M + i) = params.N[i];
        for (size_t j = 0; j < M; j++) {
            // (N U^T N^{-1})_ij = N_i U_ji / N_j
            BigInt num = params.N[i] * U.at(j, i);
            if (mod(num, BigInt(params.N[j])) != 0) {
                throw std::logic_error("N U^T N^{-1} is not integral");
            }
            out.L.at(M + i, j) = num / params.N[j];
        }
    }
    RationalMatrix kinv = k_inverse(out.K_TC);
    RationalMatrix Q = to_rational(out.Q);
    RationalMatrix L = to_rational(out.L);

    RationalMatrix qkq = rational_product(rational_product(rational_transpose(Q), kinv), Q);
    out.q_identity = true;
    for (size_t i = 0; i < M; i++) {
        for (size_t j = 0; j < M; j++) {
            out.q_identity = out.q_identity && qkq[i][j] == BigRational(-S.at(i, j));
        }
    }

    RationalMatrix lkq = rational_product(rational_product(rational_transpose(L), kinv), Q);
    out.l_identity = true;
    for (size_t i = 0; i < 2 * M; i++) {
        for (size_t j = 0; j < M; j++) {
            BigRational expected = (i >= M && i - M == j) ? -1 : 0;
            BigRational diff = lkq[i][j] - expected;
            out.l_identity = out.l_identity && boost::multiprecision::denominator(diff) == 1;
        }
    }

    RationalMatrix linv = rational_inverse(L);
    RationalMatrix reduced = rational_product(rational_product(linv, to_rational(out.K_TC)), rational_transpose(linv));
    IntMatrix target = build_k_tqd(params).K;
    out.k_identity = true;
    for (size_t i = 0; i < 2 * M; i++) {
        for (size_t j = 0; j < 2 * M; j++) {
            out.k_identity = out.k_identity && reduced[i][j] == BigRational(target.at(i, j));
        }
    }
    return out;
}

AnyonTheory f_family_theory(int r) {
    int64_t n = int64_t(1) << r;
    Rational01 q(1, n);
    return AnyonTheory(FiniteAbelianGroup{{n, n}}, {q, q}, {{Rational01(), q}, {q, Rational01()}});
}

}  // namespace tqd
