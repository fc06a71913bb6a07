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

#include "hcodes/plane.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace hcodes {

namespace {

struct LineTable {
    std::vector<PlaneForm> lines;
    std::vector<std::vector<std::array<Elem, 3>>> points;  // incident points per line
};

const LineTable& line_table(const Field& f) {
    static std::mutex mu;
    static std::map<int, LineTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(f.q());
    if (it != cache.end()) return it->second;

    const auto elems = f.elements();
    std::vector<std::array<Elem, 3>> plane_points;
    for (Elem y : elems)
        for (Elem z : elems) plane_points.push_back({Field::one(), y, z});
    for (Elem z : elems) plane_points.push_back({Field::zero(), Field::one(), z});
    plane_points.push_back({Field::zero(), Field::zero(), Field::one()});

    LineTable table;
    table.lines = {};
    for (const auto& c : plane_points) table.lines.push_back(PlaneForm::line(c[0], c[1], c[2]));
    std::sort(table.lines.begin(), table.lines.end());
    for (const auto& line : table.lines) {
        std::vector<std::array<Elem, 3>> on;
        for (const auto& pt : plane_points)
            if (line.evaluate(f, pt[0], pt[1], pt[2]).is_zero()) on.push_back(pt);
        table.points.push_back(std::move(on));
    }
    return cache.emplace(f.q(), std::move(table)).first->second;
}

// Restrictions of degree-t monomials at each point of a scheme, cached by
// point up to the scheme multiplicity.
class RestrictionCache {
   public:
    RestrictionCache(const HermitianCurve& curve, const SchemeOnCurve& z, int t) : t_(t) {
        for (const auto& [p, e] : z.terms()) {
            if (e < 0) throw Error("scheme multiplicities must be nonnegative");
            series_.emplace(p, curve.restrict_monomials(t, p, std::max(e, 1)));
        }
    }

    Matrix matrix(const std::vector<std::pair<CurvePoint, int>>& parts) const {
        int cols = 0;
        for (const auto& [p, w] : parts) cols += w;
        const int n = monomial_count(t_);
        Matrix m(n, cols);
        int c = 0;
        for (const auto& [p, w] : parts) {
            const auto& s = series_.at(p);
            for (int k = 0; k < w; ++k, ++c)
                for (int r = 0; r < n; ++r) m(r, c) = s[r][k];
        }
        return m;
    }

   private:
    int t_;
    std::map<CurvePoint, std::vector<std::vector<Elem>>> series_;
};

std::vector<std::pair<CurvePoint, int>> parts_of(const SchemeOnCurve& z) {
    return {z.terms().begin(), z.terms().end()};
}

// Calls fn on every sub-multiplicity vector of total degree k.
void for_each_subscheme(const std::vector<std::pair<CurvePoint, int>>& parts, int k,
                        const std::function<void(const std::vector<std::pair<CurvePoint, int>>&)>& fn) {
    std::vector<int> suffix(parts.size() + 1, 0);
    for (int i = static_cast<int>(parts.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + parts[i].second;
    std::vector<std::pair<CurvePoint, int>> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (left == 0) {
            fn(cur);
            return;
        }
        if (i == parts.size() || suffix[i] < left) return;
        const int hi = std::min(parts[i].second, left);
        for (int w = hi; w >= 0; --w) {
            if (w > 0) cur.emplace_back(parts[i].first, w);
            rec(i + 1, left - w);
            if (w > 0) cur.pop_back();
        }
    };
    rec(0, k);
}

// Forms of degree t through degree-(N-1) subschemes of Z whose conditions
// leave a pencil or less.
void kernel_candidates(const HermitianCurve& curve, const SchemeOnCurve& z, int t, std::set<PlaneForm>& out) {
    const Field& f = curve.field();
    const int n = monomial_count(t);
    const RestrictionCache cache(curve, z, t);
    const auto parts = parts_of(z);
    const int k = std::min(n - 1, z.degree());
    for_each_subscheme(parts, k, [&](const std::vector<std::pair<CurvePoint, int>>& w) {
        const auto ker = left_kernel(f, cache.matrix(w));
        if (ker.empty() || ker.size() > 2) return;
        std::vector<PlaneForm> basis;
        for (const auto& v : ker) basis.emplace_back(t, v);
        for (auto& form : projective_forms(f, basis)) out.insert(std::move(form));
    });
}

}  // namespace

Matrix condition_matrix(const HermitianCurve& curve, const SchemeOnCurve& z, int t) {
    if (t < 1) throw Error("form degree must be at least 1");
    const RestrictionCache cache(curve, z, t);
    return cache.matrix(parts_of(z));
}

Cohomology h0_h1(const HermitianCurve& curve, const SchemeOnCurve& z, int t) {
    const int r = rank(curve.field(), condition_matrix(curve, z, t));
    return {monomial_count(t) - r, z.degree() - r};
}

std::vector<PlaneForm> forms_through(const HermitianCurve& curve, const SchemeOnCurve& z, int t) {
    const Matrix m = condition_matrix(curve, z, t);
    std::vector<PlaneForm> out;
    if (m.cols() == 0) {
        for (int i = 0; i < monomial_count(t); ++i) {
            std::vector<Elem> c(monomial_count(t), Field::zero());
            c[i] = Field::one();
            out.emplace_back(t, c);
        }
        return out;
    }
    for (auto& v : left_kernel(curve.field(), m)) out.emplace_back(t, std::move(v));
    return out;
}

std::vector<PlaneForm> projective_forms(const Field& f, const std::vector<PlaneForm>& basis) {
    std::vector<std::vector<Elem>> vecs;
    for (const auto& b : basis) vecs.push_back(b.coeffs());
    std::vector<PlaneForm> out;
    if (basis.empty()) return out;
    const int t = basis.front().degree();
    for (auto& v : projective_members(f, vecs)) out.emplace_back(t, std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

SchemeOnCurve intersection_scheme(const HermitianCurve& curve, const PlaneForm& form, const SchemeOnCurve& z) {
    SchemeOnCurve out;
    for (const auto& [p, e] : z.terms()) {
        if (e <= 0) continue;
        const auto s = curve.restrict_form(form, p, e);
        int lead = 0;
        while (lead < e && s[lead].is_zero()) ++lead;
        out.add(p, lead);
    }
    return out;
}

int intersection_degree(const HermitianCurve& curve, const PlaneForm& form, const SchemeOnCurve& z) {
    return intersection_scheme(curve, form, z).degree();
}

bool passes_through(const Field& f, const PlaneForm& form, const std::vector<CurvePoint>& pts) {
    return std::all_of(pts.begin(), pts.end(), [&](const CurvePoint& p) {
        const auto c = p.projective();
        return form.evaluate(f, c[0], c[1], c[2]).is_zero();
    });
}

const std::vector<PlaneForm>& all_lines(const Field& f) { return line_table(f).lines; }

std::optional<PlaneForm> linear_factor(const Field& f, const PlaneForm& form) {
    if (form.is_zero()) throw Error("zero form has no factorization");
    const auto& table = line_table(f);
    const std::size_t need = static_cast<std::size_t>(form.degree()) + 1;
    for (std::size_t i = 0; i < table.lines.size(); ++i) {
        const auto& pts = table.points[i];
        if (pts.size() < need) throw Error("form degree too large for the line test");
        bool all = true;
        for (std::size_t j = 0; j < need && all; ++j)
            all = form.evaluate(f, pts[j][0], pts[j][1], pts[j][2]).is_zero();
        if (all) return table.lines[i];
    }
    return std::nullopt;
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::Line: return "line";
        case WitnessKind::Conic: return "conic";
        case WitnessKind::CubicExcess: return "cubic_excess";
        case WitnessKind::CubicCandidate: return "cubic_candidate";
    }
    return "unknown";
}

int witness_degree_bound(int dprime) { return std::max({2 * dprime + 2, 3 * dprime, 4 * dprime - 5}); }

std::optional<Witness> find_witness(const HermitianCurve& curve, const SchemeOnCurve& z, int dprime) {
    if (dprime < 1) throw Error("witness degree must be positive");
    if (!z.effective()) throw Error("scheme multiplicities must be positive");
    const Field& f = curve.field();
    const int deg = z.degree();

    const auto best = [&](const std::set<PlaneForm>& cands, int threshold) -> std::optional<PlaneForm> {
        for (const auto& c : cands) {  // ascending, so the first hit is the least
            if (curve.vanishes_on_curve(c)) continue;
            if (intersection_degree(curve, c, z) >= threshold) return c;
        }
        return std::nullopt;
    };
    const auto make = [&](WitnessKind kind, const PlaneForm& form, int need) {
        Witness w;
        w.kind = kind;
        w.form = form;
        w.intersection = intersection_degree(curve, form, z);
        if (w.intersection < need) throw Error("witness self-check failed");
        const auto full = intersection_scheme(curve, form, z);
        int left = need;
        for (const auto& [p, e] : full.terms()) {
            const int take = std::min(e, left);
            w.subscheme.add(p, take);
            left -= take;
        }
        return w;
    };

    std::set<PlaneForm> lines;
    const auto parts = parts_of(z);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].second >= 2) lines.insert(curve.tangent_line(parts[i].first));
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            lines.insert(curve.line_through(parts[i].first, parts[j].first));
    }
    if (auto l = best(lines, dprime + 2)) return make(WitnessKind::Line, *l, dprime + 2);

    if (deg < 3 * dprime && deg < 2 * dprime + 2) return std::nullopt;

    std::set<PlaneForm> conics;
    if (deg >= 2 * dprime + 2 || deg >= 3 * dprime) {
        kernel_candidates(curve, z, 2, conics);
        for (auto a = lines.begin(); a != lines.end(); ++a)
            for (auto b = a; b != lines.end(); ++b) conics.insert(a->times(f, *b).normalized(f));
    }
    if (deg >= 2 * dprime + 2)
        if (auto c = best(conics, 2 * dprime + 2)) return make(WitnessKind::Conic, *c, 2 * dprime + 2);

    if (deg < 3 * dprime) return std::nullopt;
    std::set<PlaneForm> cubics;
    kernel_candidates(curve, z, 3, cubics);
    for (const auto& l : lines)
        for (const auto& c : conics) cubics.insert(l.times(f, c).normalized(f));
    if (deg >= 3 * dprime + 1)
        if (auto c = best(cubics, 3 * dprime + 1)) return make(WitnessKind::CubicExcess, *c, 3 * dprime + 1);
    if (auto c = best(cubics, 3 * dprime)) return make(WitnessKind::CubicCandidate, *c, 3 * dprime);
    return std::nullopt;
}

}  // namespace hcodes
