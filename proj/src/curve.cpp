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

#include "hcodes/curve.hpp"

#include <algorithm>
#include <cctype>

#include "hcodes/linalg.hpp"

namespace hcodes {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

using Series = std::vector<Elem>;

Series mul_trunc(const Field& f, const Series& a, const Series& b, int order) {
    Series out(order, Field::zero());
    for (int i = 0; i < order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < order && j < static_cast<int>(b.size()); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
        }
    }
    return out;
}

// s(t)^q; in characteristic p this is sum s_i^q t^{iq}.
Series frobenius_series(const Field& f, const Series& s, int order) {
    Series out(order, Field::zero());
    const int q = f.q();
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        const long k = static_cast<long>(i) * q;
        if (k >= order) break;
        out[k] = f.frobenius(s[i]);
    }
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

std::string to_string(const Field& f, const CurvePoint& p) {
    if (p.at_infinity) return "inf";
    return "(" + f.to_string(p.x) + ", " + f.to_string(p.y) + ")";
}

CurvePoint parse_point(const Field& f, const std::string& text) {
    const std::string s = trim(text);
    if (s == "inf") return CurvePoint::infinity();
    if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw Error("cannot parse point '" + s + "'");
    const std::string inner = s.substr(1, s.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw Error("cannot parse point '" + s + "'");
    return CurvePoint::affine(f.parse(trim(inner.substr(0, comma))), f.parse(trim(inner.substr(comma + 1))));
}

void Divisor::add(const CurvePoint& p, int mult) {
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

int Divisor::multiplicity(const CurvePoint& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

int Divisor::degree() const {
    int d = 0;
    for (const auto& [p, m] : terms_) d += m;
    return d;
}

bool Divisor::effective() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

Divisor Divisor::operator+(const Divisor& o) const {
    Divisor out = *this;
    for (const auto& [p, m] : o.terms_) out.add(p, m);
    return out;
}

std::string Divisor::to_string(const Field& f) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [p, m] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(m) + "*" + hcodes::to_string(f, p);
    }
    return out;
}

Divisor parse_divisor(const Field& f, const std::string& s) {
    Divisor d;
    if (trim(s) == "0" || trim(s).empty()) return d;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        const std::string term = trim(s.substr(start, end - start));
        if (term.empty()) throw Error("empty divisor term in '" + s + "'");
        const auto star = term.find('*');
        int mult = 1;
        std::string pt = term;
        if (star != std::string::npos) {
            try {
                mult = std::stoi(term.substr(0, star));
            } catch (const std::logic_error&) {
                throw Error("bad multiplicity in '" + term + "'");
            }
            pt = term.substr(star + 1);
        }
        d.add(parse_point(f, pt), mult);
        start = end + 1;
    }
    return d;
}

std::vector<CurvePoint> enumerate_points(const Field& f) {
    const int q = f.q();
    std::vector<CurvePoint> pts{CurvePoint::infinity()};
    const auto elems = f.elements();
    for (Elem x : elems) {
        const Elem rhs = f.pow(x, q + 1);
        for (Elem y : elems)
            if (f.add(f.pow(y, q), y) == rhs) pts.push_back(CurvePoint::affine(x, y));
    }
    std::sort(pts.begin() + 1, pts.end());
    return pts;
}

HermitianCurve::HermitianCurve(FieldPtr field) : field_(std::move(field)), points_(enumerate_points(*field_)) {}

bool HermitianCurve::contains(const CurvePoint& p) const {
    if (p.at_infinity) return true;
    const Field& f = *field_;
    return f.add(f.pow(p.y, q()), p.y) == f.pow(p.x, q() + 1);
}

std::size_t HermitianCurve::index_of(const CurvePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) throw Error("point is not on the curve");
    return static_cast<std::size_t>(it - points_.begin());
}

PlaneForm HermitianCurve::tangent_line(const CurvePoint& p) const {
    if (!contains(p)) throw Error("point is not on the curve");
    const Field& f = *field_;
    if (p.at_infinity) return PlaneForm::line(Field::zero(), Field::zero(), Field::one());
    // Gradient of Y^q Z + Y Z^q - X^{q+1} at (x0 : y0 : 1).
    return PlaneForm::line(f.neg(f.frobenius(p.x)), Field::one(), f.frobenius(p.y)).normalized(f);
}

PlaneForm HermitianCurve::line_through(const CurvePoint& p, const CurvePoint& r) const {
    if (p == r) throw Error("line_through needs two distinct points");
    const Field& f = *field_;
    const auto u = p.projective();
    const auto v = r.projective();
    const auto cross = [&](int i, int j) { return f.sub(f.mul(u[i], v[j]), f.mul(u[j], v[i])); };
    return PlaneForm::line(cross(1, 2), cross(2, 0), cross(0, 1)).normalized(f);
}

LocalExpansion HermitianCurve::local_expansion(const CurvePoint& p, int order) const {
    if (order < 1) throw Error("expansion order must be positive");
    if (!contains(p)) throw Error("point is not on the curve");
    const Field& f = *field_;
    const int q = this->q();
    // s + s^q = h(t), where h = x0^q t + x0 t^q + t^{q+1} (x0 = 0 in the chart at infinity).
    Series h(order, Field::zero());
    const Elem x0 = p.at_infinity ? Field::zero() : p.x;
    if (order > 1) h[1] = f.add(h[1], f.frobenius(x0));
    if (q < order) h[q] = f.add(h[q], x0);
    if (q + 1 < order) h[q + 1] = f.add(h[q + 1], Field::one());
    Series s(order, Field::zero());
    for (int iter = 0; iter <= order; ++iter) {
        const Series sq = frobenius_series(f, s, order);
        Series next(order);
        for (int i = 0; i < order; ++i) next[i] = f.sub(h[i], sq[i]);
        if (next == s) break;
        s = std::move(next);
    }
    LocalExpansion out;
    out.point = p;
    out.order = order;
    out.dependent = std::move(s);
    if (!p.at_infinity) out.dependent[0] = f.add(out.dependent[0], p.y);
    return out;
}

std::array<std::vector<Elem>, 3> HermitianCurve::coordinate_series(const CurvePoint& p, int order) const {
    const auto exp = local_expansion(p, order);
    Series param(order, Field::zero());
    Series one(order, Field::zero());
    one[0] = Field::one();
    if (order > 1) param[1] = Field::one();
    if (p.at_infinity) return {param, one, exp.dependent};
    param[0] = p.x;
    return {param, exp.dependent, one};
}

std::vector<std::vector<Elem>> HermitianCurve::restrict_monomials(int degree, const CurvePoint& p,
                                                                  int order) const {
    const Field& f = *field_;
    const auto coords = coordinate_series(p, order);
    std::array<std::vector<Series>, 3> powers;
    for (int v = 0; v < 3; ++v) {
        Series one(order, Field::zero());
        one[0] = Field::one();
        powers[v].push_back(one);
        for (int e = 1; e <= degree; ++e) powers[v].push_back(mul_trunc(f, powers[v].back(), coords[v], order));
    }
    std::vector<Series> out;
    for (const auto& m : monomials(degree))
        out.push_back(mul_trunc(f, mul_trunc(f, powers[0][m.a], powers[1][m.b], order), powers[2][m.c], order));
    return out;
}

std::vector<Elem> HermitianCurve::restrict_form(const PlaneForm& form, const CurvePoint& p, int order) const {
    const Field& f = *field_;
    const auto mons = restrict_monomials(form.degree(), p, order);
    Series out(order, Field::zero());
    for (std::size_t i = 0; i < mons.size(); ++i) {
        const Elem c = form.coeffs()[i];
        if (c.is_zero()) continue;
        for (int k = 0; k < order; ++k) out[k] = f.add(out[k], f.mul(c, mons[i][k]));
    }
    return out;
}

int HermitianCurve::valuation(const PlaneForm& form, const CurvePoint& p) const {
    const int order = form.degree() * (q() + 1) + 2;
    const auto s = restrict_form(form, p, order);
    for (int k = 0; k < order; ++k)
        if (!s[k].is_zero()) return k;
    throw Error("raise expansion order: form restricts to zero up to t^" + std::to_string(order));
}

PlaneForm HermitianCurve::equation() const {
    const Field& f = *field_;
    const int q = this->q();
    PlaneForm e(q + 1);
    e.set_coeff(0, q, 1, f.add(e.coeff(0, q, 1), Field::one()));
    e.set_coeff(0, 1, q, f.add(e.coeff(0, 1, q), Field::one()));
    e.set_coeff(q + 1, 0, 0, f.neg(Field::one()));
    return e;
}

bool HermitianCurve::vanishes_on_curve(const PlaneForm& form) const {
    if (form.is_zero()) return true;
    if (form.degree() < q() + 1) return false;
    // Otherwise I_P(form, X) would exceed the Bezout bound.
    const int order = form.degree() * (q() + 1) + 1;
    const auto s = restrict_form(form, CurvePoint::infinity(), order);
    return std::all_of(s.begin(), s.end(), [](Elem e) { return e.is_zero(); });
}

std::vector<std::pair<int, int>> monomial_basis(long m, long n, int q) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= q; ++i) {
        const long jmin = ceil_div(-n - i, q + 1);
        const long jmax = floor_div(m - static_cast<long>(i) * q, q + 1);
        for (long j = jmin; j <= jmax; ++j) out.emplace_back(i, static_cast<int>(j));
    }
    std::sort(out.begin(), out.end(), [q](const auto& u, const auto& v) {
        return static_cast<long>(u.first) * q + static_cast<long>(u.second) * (q + 1) <
               static_cast<long>(v.first) * q + static_cast<long>(v.second) * (q + 1);
    });
    return out;
}

bool two_point_principal(long u, int q) { return u % (q + 1) == 0; }

}  // namespace hcodes
