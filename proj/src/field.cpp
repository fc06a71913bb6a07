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

#include "hcodes/field.hpp"

#include <map>
#include <mutex>

namespace hcodes {

namespace {

struct PrimePower {
    int p;
    int e;
};

PrimePower registry_entry(int q) {
    switch (q) {
        case 2: return {2, 1};
        case 3: return {3, 1};
        case 4: return {2, 2};
        case 5: return {5, 1};
        case 7: return {7, 1};
        case 8: return {2, 3};
        case 9: return {3, 2};
        default: throw Error("unsupported field: q = " + std::to_string(q));
    }
}

int ipow(int base, int exp) {
    int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int mod(long v, int p) {
    long r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

std::vector<int> unpack(int v, int p, int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

int pack(const std::vector<int>& c, int p) {
    int v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * p + *it;
    return v;
}

// Remainder of a by a monic divisor, both ascending over F_p.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> m, int p) {
    const int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) a[i - dm + j] = mod(a[i - dm + j] - c * m[j], p);
    }
    if (static_cast<int>(a.size()) > dm) a.resize(dm);
    return a;
}

int poly_mul_mod(int a, int b, const std::vector<int>& modulus, int p) {
    const int n = static_cast<int>(modulus.size()) - 1;
    auto ca = unpack(a, p, n);
    auto cb = unpack(b, p, n);
    std::vector<int> prod(2 * n - 1, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    auto r = poly_rem(std::move(prod), modulus, p);
    r.resize(n, 0);
    return pack(r, p);
}

int poly_add(int a, int b, int p, int n) {
    auto ca = unpack(a, p, n);
    auto cb = unpack(b, p, n);
    for (int i = 0; i < n; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return pack(ca, p);
}

long multiplicative_order(int a, const std::vector<int>& modulus, int p) {
    if (a == 0) return 0;
    int x = a;
    long k = 1;
    while (x != 1) {
        x = poly_mul_mod(x, a, modulus, p);
        ++k;
    }
    return k;
}

}  // namespace

int FieldSpec::q() const { return ipow(p, e); }

bool is_irreducible(std::span<const int> poly, int p) {
    const int n = static_cast<int>(poly.size()) - 1;
    if (n < 1 || poly[n] % p == 0) return false;
    std::vector<int> a(poly.begin(), poly.end());
    for (int k = 1; 2 * k <= n; ++k) {
        const int count = ipow(p, k);
        for (int t = 0; t < count; ++t) {
            auto divisor = unpack(t, p, k);
            divisor.push_back(1);
            auto r = poly_rem(a, divisor, p);
            bool zero = true;
            for (int c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec field_spec(int q) {
    const auto [p, e] = registry_entry(q);
    FieldSpec spec;
    spec.p = p;
    spec.e = e;
    const int n = 2 * e;
    if (q == 4) {
        spec.modulus = {1, 1, 0, 0, 1};  // t^4 + t + 1
    } else if (q == 5) {
        spec.modulus = {2, 4, 1};  // t^2 + 4t + 2
    } else {
        // Least monic irreducible in lexicographic order of (c_0, ..., c_{n-1}).
        const int count = ipow(p, n);
        for (int t = 0; t < count && spec.modulus.empty(); ++t) {
            std::vector<int> c(n);
            int v = t;
            for (int i = n - 1; i >= 0; --i) {
                c[i] = v % p;
                v /= p;
            }
            c.push_back(1);
            if (is_irreducible(c, p)) spec.modulus = c;
        }
    }
    // Least element (packed base-p, constant digit first) of order q^2 - 1.
    const int size = ipow(p, n);
    for (int a = 1; a < size; ++a) {
        if (multiplicative_order(a, spec.modulus, p) == size - 1) {
            spec.generator = unpack(a, p, n);
            break;
        }
    }
    return spec;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const int p = spec_.p;
    const int n = spec_.degree();
    q_ = spec_.q();
    size_ = q_ * q_;
    if (size_ > 255) throw Error("unsupported field: q^2 exceeds element coding");
    if (static_cast<int>(spec_.modulus.size()) != n + 1) throw Error("modulus has wrong degree");
    if (!is_irreducible(spec_.modulus, p)) throw Error("modulus is not irreducible");

    const int g = pack(spec_.generator, p);
    exp_poly_.assign(size_ - 1, 0);
    poly_code_.assign(size_, -1);
    poly_code_[0] = 0;
    int x = 1;
    for (int k = 0; k < size_ - 1; ++k) {
        if (poly_code_[x] != -1) throw Error("generator is not primitive");
        exp_poly_[k] = x;
        poly_code_[x] = k + 1;
        x = poly_mul_mod(x, g, spec_.modulus, p);
    }

    const auto packed = [&](int code) { return code == 0 ? 0 : exp_poly_[code - 1]; };
    const std::size_t sq = static_cast<std::size_t>(size_) * size_;
    add_.assign(sq, 0);
    mul_.assign(sq, 0);
    neg_.assign(size_, 0);
    inv_.assign(size_, 0);
    frob_.assign(size_, 0);
    const int order = size_ - 1;
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            add_[a * size_ + b] =
                static_cast<std::uint8_t>(poly_code_[poly_add(packed(a), packed(b), p, n)]);
            mul_[a * size_ + b] = (a == 0 || b == 0)
                                      ? 0
                                      : static_cast<std::uint8_t>((a - 1 + b - 1) % order + 1);
        }
        if (a != 0) {
            inv_[a] = static_cast<std::uint8_t>((order - (a - 1)) % order + 1);
            frob_[a] = static_cast<std::uint8_t>(
                (static_cast<long>(a - 1) * q_) % order + 1);
        }
    }
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if (add_[a * size_ + b] == 0) neg_[a] = static_cast<std::uint8_t>(b);
}

Elem Field::gen_pow(long k) const {
    const long order = size_ - 1;
    long r = k % order;
    if (r < 0) r += order;
    return Elem{static_cast<std::uint8_t>(r + 1)};
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw Error("division by zero");
    return Elem{inv_[a.code]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, long k) const {
    if (a.is_zero()) {
        if (k < 0) throw Error("division by zero");
        return k == 0 ? one() : zero();
    }
    return gen_pow(static_cast<long>(exponent(a)) * k);
}

std::vector<int> Field::coeffs(Elem a) const {
    return unpack(a.is_zero() ? 0 : exp_poly_[a.code - 1], spec_.p, spec_.degree());
}

Elem Field::from_coeffs(std::span<const int> c) const {
    std::vector<int> v(spec_.degree(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i >= v.size()) {
            if (mod(c[i], spec_.p) != 0) throw Error("coefficient vector too long");
            continue;
        }
        v[i] = mod(c[i], spec_.p);
    }
    return Elem{static_cast<std::uint8_t>(poly_code_[pack(v, spec_.p)])};
}

Elem Field::from_int(long v) const {
    const int c = mod(v, spec_.p);
    return from_coeffs(std::span<const int>(&c, 1));
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out;
    out.reserve(size_);
    for (int c = 0; c < size_; ++c) out.emplace_back(static_cast<std::uint8_t>(c));
    return out;
}

std::string Field::to_string(Elem a) const {
    if (a.is_zero()) return "0";
    return "g^" + std::to_string(exponent(a));
}

Elem Field::parse(const std::string& s) const {
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s == "g") return gen_pow(1);
    if (s.size() > 2 && s[0] == 'g' && s[1] == '^') {
        try {
            return gen_pow(std::stol(s.substr(2)));
        } catch (const std::logic_error&) {
        }
    }
    throw Error("cannot parse field element '" + s + "'");
}

FieldPtr make_field(int q) {
    static std::mutex mu;
    static std::map<int, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto f = std::make_shared<const Field>(field_spec(q));
    cache.emplace(q, f);
    return f;
}

}  // namespace hcodes
