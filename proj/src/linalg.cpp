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

#include "hcodes/linalg.hpp"

#include <algorithm>

namespace hcodes {

std::vector<Elem> Matrix::column(int c) const {
    std::vector<Elem> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(std::span<const int> cols) const {
    Matrix out(rows_, static_cast<int>(cols.size()));
    for (int r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out(r, static_cast<int>(j)) = (*this)(r, cols[j]);
    return out;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw Error("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RowEchelon rank_rref(const Field& f, const Matrix& m) {
    Matrix a = m;
    const int rows = a.rows();
    const int cols = a.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i) {
            if (!a(i, c).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
        const Elem inv = f.inv(a(r, c));
        for (int j = c; j < cols; ++j) a(r, j) = f.mul(a(r, j), inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Elem factor = a(i, c);
            for (int j = c; j < cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    RowEchelon out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.reduced = Matrix(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) out.reduced(i, j) = a(i, j);
    return out;
}

int rank(const Field& f, const Matrix& m) { return rank_rref(f, m).rank; }

std::vector<std::vector<Elem>> right_kernel(const Field& f, const Matrix& m) {
    const auto ech = rank_rref(f, m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(cols, Field::zero());
        v[free] = Field::one();
        for (int i = 0; i < ech.rank; ++i) v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
        normalize_projective(f, v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Elem>> left_kernel(const Field& f, const Matrix& m) {
    return right_kernel(f, m.transposed());
}

bool row_spaces_equal(const Field& f, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    return rank_rref(f, a).reduced == rank_rref(f, b).reduced;
}

void normalize_projective(const Field& f, std::span<Elem> v) {
    auto it = std::find_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); });
    if (it == v.end() || it->is_one()) return;
    const Elem inv = f.inv(*it);
    for (auto& e : v) e = f.mul(e, inv);
}

std::vector<std::vector<Elem>> projective_members(const Field& f,
                                                  const std::vector<std::vector<Elem>>& basis) {
    std::vector<std::vector<Elem>> out;
    const int k = static_cast<int>(basis.size());
    if (k == 0) return out;
    const std::size_t len = basis[0].size();
    const int qq = f.size();
    // Leading coefficient 1 at position lead, arbitrary coefficients after it.
    for (int lead = 0; lead < k; ++lead) {
        const int tail = k - lead - 1;
        long count = 1;
        for (int i = 0; i < tail; ++i) count *= qq;
        std::vector<int> digits(tail, 0);
        for (long t = 0; t < count; ++t) {
            long v = t;
            for (int i = 0; i < tail; ++i) {
                digits[i] = static_cast<int>(v % qq);
                v /= qq;
            }
            std::vector<Elem> m = basis[lead];
            for (int i = 0; i < tail; ++i) {
                const Elem c{static_cast<std::uint8_t>(digits[i])};
                if (c.is_zero()) continue;
                const auto& b = basis[lead + 1 + i];
                for (std::size_t j = 0; j < len; ++j) m[j] = f.add(m[j], f.mul(c, b[j]));
            }
            normalize_projective(f, m);
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace hcodes
