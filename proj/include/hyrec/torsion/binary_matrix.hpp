/*
   Copyright 2026 The hyrec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HYREC_TORSION_BINARY_MATRIX_HPP
#define HYREC_TORSION_BINARY_MATRIX_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hyrec/error.hpp"

namespace hyrec {

/// Square matrix over F_2 of size n <= 64, stored column-wise as bitmasks
/// (bit r of column c is the entry in row r).
class BinaryMatrix {
public:
    explicit BinaryMatrix(unsigned n) : n_(n), cols_(n, 0) {
        if (n > 64) throw Error(ErrorCode::UnsupportedDegree, "binary matrices are limited to 64 x 64");
    }

    BinaryMatrix(unsigned n, std::vector<std::uint64_t> columns) : BinaryMatrix(n) {
        if (columns.size() != n) throw Error(ErrorCode::Undefined, "column count mismatch");
        cols_ = std::move(columns);
        for (auto& c : cols_) c &= mask();
    }

    static BinaryMatrix identity(unsigned n) {
        BinaryMatrix m(n);
        for (unsigned i = 0; i < n; ++i) m.cols_[i] = std::uint64_t{1} << i;
        return m;
    }

    unsigned size() const noexcept { return n_; }
    std::uint64_t column(unsigned c) const { return cols_.at(c); }
    const std::vector<std::uint64_t>& columns() const noexcept { return cols_; }
    bool at(unsigned row, unsigned col) const { return (cols_.at(col) >> row) & 1U; }

    /// Image of a vector given as a bitmask.
    std::uint64_t apply(std::uint64_t x) const noexcept {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < n_; ++i)
            if ((x >> i) & 1U) r ^= cols_[i];
        return r;
    }

    friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
        if (a.n_ != b.n_) throw Error(ErrorCode::Undefined, "matrix size mismatch");
        BinaryMatrix r(a.n_);
        for (unsigned i = 0; i < a.n_; ++i) r.cols_[i] = a.apply(b.cols_[i]);
        return r;
    }

    BinaryMatrix pow(std::uint64_t e) const {
        BinaryMatrix r = identity(n_), base = *this;
        while (e != 0) {
            if (e & 1U) r = r * base;
            e >>= 1U;
            if (e != 0) base = base * base;
        }
        return r;
    }

    bool is_identity() const noexcept { return *this == identity(n_); }

    unsigned rank() const {
        std::uint64_t basis[64] = {};  // basis[b] has leading bit b
        unsigned r = 0;
        for (auto c : cols_) {
            while (c != 0) {
                const int b = 63 - std::countl_zero(c);
                if (basis[b] == 0) {
                    basis[b] = c;
                    ++r;
                    break;
                }
                c ^= basis[b];
            }
        }
        return r;
    }

    /// Determinant over F_2.
    bool determinant() const { return rank() == n_; }
    bool invertible() const { return determinant(); }

    /// Multiplicative order; throws if the matrix is singular.
    std::uint64_t order() const {
        if (!invertible()) throw Error(ErrorCode::NonInvertible, "singular matrix has no order");
        BinaryMatrix m = *this;
        for (std::uint64_t k = 1; k <= (std::uint64_t{1} << 24); ++k) {
            if (m.is_identity()) return k;
            m = m * *this;
        }
        throw Error(ErrorCode::NonTerminating, "matrix order exceeds search bound");
    }

    /// Row-major 0/1 entries.
    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(n_, std::vector<int>(n_, 0));
        for (unsigned r = 0; r < n_; ++r)
            for (unsigned c = 0; c < n_; ++c) out[r][c] = at(r, c) ? 1 : 0;
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (unsigned r = 0; r < n_; ++r) {
            if (r) s += ";";
            for (unsigned c = 0; c < n_; ++c) s += at(r, c) ? '1' : '0';
        }
        return s + "]";
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) = default;
    friend bool operator<(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.cols_ < b.cols_;
    }

private:
    std::uint64_t mask() const noexcept { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

    unsigned n_;
    std::vector<std::uint64_t> cols_;
};

}  // namespace hyrec

#endif  // HYREC_TORSION_BINARY_MATRIX_HPP
