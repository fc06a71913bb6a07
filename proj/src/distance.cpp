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

#include "hcodes/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <functional>
#include <thread>

#include "hcodes/form.hpp"
#include "hcodes/plane.hpp"

namespace hcodes {

namespace {

// Columns stored contiguously, `len` bytes each.
struct Level {
    std::vector<int> idx;
    std::vector<std::uint8_t> data;
};

class ColumnSearch {
   public:
    ColumnSearch(const Field& f, const Matrix& m) : len_(m.rows()), n_(m.cols()) {
        add_ = f.add_table();
        mul_ = f.mul_table();
        neg_ = f.neg_table();
        inv_ = f.inv_table();
        size_ = static_cast<std::size_t>(f.size());
        root_.idx.resize(n_);
        root_.data.resize(std::size_t(n_) * len_);
        for (int c = 0; c < n_; ++c) {
            root_.idx[c] = c;
            for (int r = 0; r < len_; ++r) root_.data[std::size_t(c) * len_ + r] = m(r, c).code;
        }
    }

    int columns() const { return n_; }

    // Dependent w-sets whose first index is assigned to this worker.
    void run(int w, int worker, int workers, bool first_only, std::atomic<bool>& found,
             std::vector<std::vector<int>>& out) const {
        if (w == 1) {
            for (int c = worker; c < n_; c += workers)
                if (is_zero(&root_.data[std::size_t(c) * len_])) {
                    out.push_back({c});
                    if (first_only) { found = true; return; }
                }
            return;
        }
        std::vector<Level> levels(std::max(1, w - 1));
        std::vector<int> prefix;
        Walk walk{w, worker, workers, first_only, found, out, levels, prefix};
        descend(walk, root_, w - 2);
    }

   private:
    struct Walk {
        int w;
        int worker;
        int workers;
        bool first_only;
        std::atomic<bool>& found;
        std::vector<std::vector<int>>& out;
        std::vector<Level>& levels;
        std::vector<int>& prefix;
    };

    bool is_zero(const std::uint8_t* v) const {
        for (int r = 0; r < len_; ++r)
            if (v[r]) return false;
        return true;
    }

    void descend(Walk& walk, const Level& level, int remaining) const {
        if (walk.first_only && walk.found.load(std::memory_order_relaxed)) return;
        if (remaining == 0) {
            match_pairs(walk, level);
            return;
        }
        const int count = static_cast<int>(level.idx.size());
        const int top = static_cast<int>(walk.prefix.size());
        Level& next = walk.levels[top];
        // at least `remaining` further columns are needed after the one chosen here
        for (int pos = 0; pos + remaining < count; ++pos) {
            if (top == 0 && pos % walk.workers != walk.worker) continue;
            const std::uint8_t* v = &level.data[std::size_t(pos) * len_];
            int p = 0;
            while (p < len_ && v[p] == 0) ++p;
            if (p == len_) continue;  // dependent on the prefix; excluded by the precondition
            const std::uint8_t s = inv_[v[p]];
            std::vector<std::uint8_t> pivot(len_);
            for (int r = 0; r < len_; ++r) pivot[r] = mul_[s * size_ + v[r]];
            const int rest = count - pos - 1;
            next.idx.assign(level.idx.begin() + pos + 1, level.idx.end());
            next.data.resize(std::size_t(rest) * len_);
            for (int j = 0; j < rest; ++j) {
                const std::uint8_t* u = &level.data[std::size_t(pos + 1 + j) * len_];
                std::uint8_t* dst = &next.data[std::size_t(j) * len_];
                const std::uint8_t c = u[p];
                if (c == 0) {
                    std::memcpy(dst, u, len_);
                } else {
                    const std::uint8_t nc = neg_[c];
                    for (int r = 0; r < len_; ++r) dst[r] = add_[u[r] * size_ + mul_[nc * size_ + pivot[r]]];
                }
            }
            walk.prefix.push_back(level.idx[pos]);
            descend(walk, next, remaining - 1);
            walk.prefix.pop_back();
            if (walk.first_only && walk.found.load(std::memory_order_relaxed)) return;
        }
    }

    // Two residues are dependent modulo the prefix iff they are proportional.
    void match_pairs(Walk& walk, const Level& level) const {
        const int count = static_cast<int>(level.idx.size());
        const bool split = walk.prefix.empty();
        std::vector<std::uint8_t> norm(std::size_t(count) * len_);
        std::vector<std::pair<std::uint64_t, int>> keys;
        keys.reserve(count);
        for (int j = 0; j < count; ++j) {
            const std::uint8_t* u = &level.data[std::size_t(j) * len_];
            int p = 0;
            while (p < len_ && u[p] == 0) ++p;
            if (p == len_) continue;
            const std::uint8_t s = inv_[u[p]];
            std::uint8_t* dst = &norm[std::size_t(j) * len_];
            std::uint64_t h = 1469598103934665603ULL;
            for (int r = 0; r < len_; ++r) {
                dst[r] = mul_[s * size_ + u[r]];
                h = (h ^ dst[r]) * 1099511628211ULL;
            }
            keys.emplace_back(h, j);
        }
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size(); ++i) {
            for (std::size_t k = i + 1; k < keys.size() && keys[k].first == keys[i].first; ++k) {
                const int a = keys[i].second;
                const int b = keys[k].second;
                if (std::memcmp(&norm[std::size_t(a) * len_], &norm[std::size_t(b) * len_], len_) != 0) continue;
                const int lo = std::min(level.idx[a], level.idx[b]);
                const int hi = std::max(level.idx[a], level.idx[b]);
                if (split && lo % walk.workers != walk.worker) continue;
                std::vector<int> set = walk.prefix;
                set.push_back(lo);
                set.push_back(hi);
                walk.out.push_back(std::move(set));
                if (walk.first_only) {
                    walk.found = true;
                    return;
                }
            }
        }
    }

    int len_;
    int n_;
    const std::uint8_t* add_;
    const std::uint8_t* mul_;
    const std::uint8_t* neg_;
    const std::uint8_t* inv_;
    std::size_t size_;
    Level root_;
};

std::vector<std::vector<int>> search(const Field& f, const Matrix& m, int w, int jobs, bool first_only) {
    if (w < 1) throw Error("circuit size must be positive");
    std::vector<std::vector<int>> out;
    if (w > m.cols()) return out;
    ColumnSearch engine(f, m);
    const int workers = std::max(1, jobs);
    std::atomic<bool> found{false};
    if (workers == 1) {
        engine.run(w, 0, 1, first_only, found, out);
    } else {
        std::vector<std::vector<std::vector<int>>> parts(workers);
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] { engine.run(w, t, workers, first_only, found, parts[t]); });
        for (auto& th : pool) th.join();
        for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    }
    std::sort(out.begin(), out.end());
    if (first_only && out.size() > 1) out.resize(1);
    return out;
}

}  // namespace

std::vector<std::vector<int>> dependent_column_sets(const Field& f, const Matrix& m, int w, int jobs) {
    return search(f, m, w, jobs, false);
}

bool has_dependent_column_set(const Field& f, const Matrix& m, int w, int jobs) {
    return !search(f, m, w, jobs, true).empty();
}

int min_dependent_size(const Field& f, const Matrix& m, int w_max, int jobs) {
    for (int w = 1; w <= w_max; ++w)
        if (has_dependent_column_set(f, m, w, jobs)) return w;
    throw Error("exceeds search bound: no dependent set of size <= " + std::to_string(w_max));
}

std::vector<Elem> circuit_vector(const Field& f, const Matrix& m, const std::vector<int>& support) {
    const Matrix sub = m.select_columns(support);
    const auto ker = right_kernel(f, sub);
    if (ker.size() != 1) throw Error("not a circuit: kernel dimension " + std::to_string(ker.size()));
    for (Elem e : ker[0])
        if (e.is_zero()) throw Error("not a circuit: kernel vector has a zero entry");
    return ker[0];
}

int dual_min_distance(const Field& f, const TwoPointCode& code, int w_max, int jobs) {
    return min_dependent_size(f, code.generator, w_max, jobs);
}

std::vector<Circuit> enumerate_min_supports(const Field& f, const TwoPointCode& code, int delta, int jobs) {
    std::vector<Circuit> out;
    for (auto& s : dependent_column_sets(f, code.generator, delta, jobs)) {
        Circuit c;
        c.codeword = circuit_vector(f, code.generator, s);
        c.support = std::move(s);
        out.push_back(std::move(c));
    }
    return out;
}

SchemeOnCurve base_scheme(const CodeParams& params) {
    SchemeOnCurve e;
    e.add(CurvePoint::infinity(), params.a);
    e.add(CurvePoint::origin(), params.b);
    return e;
}

Matrix h1_residual_matrix(const HermitianCurve& curve, const CodeParams& params) {
    const Field& f = curve.field();
    const int d = params.d;
    const auto& mons = monomials(d);
    const int rows = static_cast<int>(mons.size());
    const auto pts = evaluation_set(curve);
    const int n = static_cast<int>(pts.size());
    Matrix res(rows, n);
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < rows; ++r) {
            const auto& mo = mons[r];
            res(r, c) = f.mul(f.pow(pts[c].x, mo.a), f.pow(pts[c].y, mo.b));
        }
    }
    const SchemeOnCurve e = base_scheme(params);
    if (e.degree() == 0) return res;
    // Row-reduce the E conditions (as row vectors), then strip their span from every column.
    const RowEchelon ech = rank_rref(f, condition_matrix(curve, e, d).transposed());
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < ech.rank; ++k) {
            const int p = ech.pivots[k];
            const Elem coef = res(p, c);
            if (coef.is_zero()) continue;
            for (int r = 0; r < rows; ++r)
                res(r, c) = f.sub(res(r, c), f.mul(coef, ech.reduced(k, r)));
        }
    }
    return res;
}

int h1_oracle_distance(const HermitianCurve& curve, const TwoPointCode& code, int s_max, int jobs) {
    return min_dependent_size(curve.field(), h1_residual_matrix(curve, code.params), s_max, jobs);
}

int h1_oracle_distance_direct(const HermitianCurve& curve, const TwoPointCode& code, int s_max) {
    const Field& f = curve.field();
    const int d = code.params.d;
    const SchemeOnCurve e = base_scheme(code.params);
    const int base_h1 = h0_h1(curve, e, d).h1;
    // Condition columns of the points of B, in one matrix: rank over a union of
    // simple points and E is the rank of the concatenated columns.
    SchemeOnCurve all_b;
    for (const auto& p : code.points) all_b.add(p, 1);
    const Matrix cond_b = condition_matrix(curve, all_b, d);
    const Matrix cond_e = condition_matrix(curve, e, d);
    std::vector<int> col_of(code.points.size());
    {
        // condition_matrix orders columns by point; map B indices to them
        std::vector<CurvePoint> order;
        for (const auto& [pt, mult] : all_b.terms()) order.push_back(pt);
        for (std::size_t i = 0; i < code.points.size(); ++i)
            col_of[i] = static_cast<int>(std::lower_bound(order.begin(), order.end(), code.points[i]) - order.begin());
    }
    const int rows = cond_b.rows();
    const int n = static_cast<int>(code.points.size());
    for (int s = 1; s <= s_max && s <= n; ++s) {
        std::vector<int> subset(s);
        for (int i = 0; i < s; ++i) subset[i] = i;
        while (true) {
            Matrix m(rows, cond_e.cols() + s);
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cond_e.cols(); ++c) m(r, c) = cond_e(r, c);
                for (int i = 0; i < s; ++i) m(r, cond_e.cols() + i) = cond_b(r, col_of[subset[i]]);
            }
            const int deg = e.degree() + s;
            const int h1 = deg - rank(f, m);
            if (h1 > base_h1) return s;
            int i = s - 1;
            while (i >= 0 && subset[i] == n - s + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < s; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    throw Error("exceeds search bound: no h^1 jump for |S| <= " + std::to_string(s_max));
}

}  // namespace hcodes
