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

#include "hcodes/form.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hcodes/linalg.hpp"

namespace hcodes {

const std::vector<Monomial3>& monomials(int degree) {
    if (degree < 0) throw Error("negative form degree");
    static std::mutex mu;
    static std::map<int, std::vector<Monomial3>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    std::vector<Monomial3> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
    return cache.emplace(degree, std::move(out)).first->second;
}

int monomial_index(int degree, int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0 || a + b + c != degree) throw Error("monomial not of the form degree");
    const int s = degree - a;
    return s * (s + 1) / 2 + (s - b);
}

PlaneForm::PlaneForm(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(monomial_count(degree))) {}

PlaneForm::PlaneForm(int degree, std::vector<Elem> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != monomial_count(degree))
        throw Error("coefficient vector length does not match degree");
}

PlaneForm PlaneForm::line(Elem a, Elem b, Elem c) { return PlaneForm(1, {a, b, c}); }

Elem PlaneForm::coeff(int a, int b, int c) const { return coeffs_[monomial_index(degree_, a, b, c)]; }

void PlaneForm::set_coeff(int a, int b, int c, Elem v) { coeffs_[monomial_index(degree_, a, b, c)] = v; }

bool PlaneForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem e) { return e.is_zero(); });
}

Elem PlaneForm::evaluate(const Field& f, Elem x, Elem y, Elem z) const {
    const auto& mons = monomials(degree_);
    Elem acc = Field::zero();
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        Elem term = coeffs_[i];
        term = f.mul(term, f.pow(x, mons[i].a));
        term = f.mul(term, f.pow(y, mons[i].b));
        term = f.mul(term, f.pow(z, mons[i].c));
        acc = f.add(acc, term);
    }
    return acc;
}

PlaneForm PlaneForm::normalized(const Field& f) const {
    PlaneForm out = *this;
    normalize_projective(f, out.coeffs_);
    return out;
}

PlaneForm PlaneForm::times(const Field& f, const PlaneForm& other) const {
    PlaneForm out(degree_ + other.degree_);
    const auto& ma = monomials(degree_);
    const auto& mb = monomials(other.degree_);
    for (std::size_t i = 0; i < ma.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < mb.size(); ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            const int k = monomial_index(out.degree_, ma[i].a + mb[j].a, ma[i].b + mb[j].b, ma[i].c + mb[j].c);
            out.coeffs_[k] = f.add(out.coeffs_[k], f.mul(coeffs_[i], other.coeffs_[j]));
        }
    }
    return out;
}

std::string PlaneForm::to_string(const Field& f) const {
    const auto& mons = monomials(degree_);
    std::string out;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += f.to_string(coeffs_[i]);
        out += "*";
        std::string mono;
        const auto put = [&](char v, int e) {
            if (e == 0) return;
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        put('X', mons[i].a);
        put('Y', mons[i].b);
        put('Z', mons[i].c);
        out += mono.empty() ? "1" : mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace hcodes
