/*
   Copyright 2026 The hcodes Authors

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

#ifndef HCODES_LINALG_HPP
#define HCODES_LINALG_HPP

#include <span>
#include <vector>

#include "hcodes/field.hpp"

namespace hcodes {

/// Dense row-major matrix over F_{q^2}.
class Matrix {
   public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    Elem operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    std::span<Elem> row(int r) { return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)}; }
    std::span<const Elem> row(int r) const {
        return {data_.data() + std::size_t(r) * cols_, std::size_t(cols_)};
    }
    std::vector<Elem> column(int c) const;

    Matrix transposed() const;
    Matrix select_columns(std::span<const int> cols) const;
    void append_row(std::span<const Elem> r);

    friend bool operator==(const Matrix&, const Matrix&) = default;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Elem> data_;
};

struct RowEchelon {
    int rank = 0;
    Matrix reduced;  // reduced row-echelon form, zero rows removed
    std::vector<int> pivots;  // pivot column of each row
};

RowEchelon rank_rref(const Field& f, const Matrix& m);

int rank(const Field& f, const Matrix& m);

/// Basis of {v : M v = 0}, each vector normalized to first nonzero entry 1.
std::vector<std::vector<Elem>> right_kernel(const Field& f, const Matrix& m);

/// Basis of {v : v M = 0}.
std::vector<std::vector<Elem>> left_kernel(const Field& f, const Matrix& m);

/// Same row space.
bool row_spaces_equal(const Field& f, const Matrix& a, const Matrix& b);

/// Scale so the first nonzero entry is 1; zero vectors are left unchanged.
void normalize_projective(const Field& f, std::span<Elem> v);

/// All projective points of span(basis): the combinations whose first nonzero
/// coefficient is 1, each normalized. Count is (Q^k - 1) / (Q - 1).
std::vector<std::vector<Elem>> projective_members(const Field& f,
                                                  const std::vector<std::vector<Elem>>& basis);

}  // namespace hcodes

#endif  // HCODES_LINALG_HPP
