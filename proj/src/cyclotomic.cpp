// Copyright 2026 The gbent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbent/cyclotomic.hpp"

#include "gbent/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

namespace gbent {

namespace {

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
IntPoly divide_monic(const IntPoly& num, const IntPoly& den) {
    IntPoly rem = num;
    const std::size_t dn = den.size() - 1;
    if (rem.size() <= dn)
        return {0};
    IntPoly quot(rem.size() - dn, 0);
    for (std::size_t i = rem.size(); i-- > dn;) {
        const std::int64_t c = rem[i];
        if (c == 0)
            continue;
        quot[i - dn] = c;
        for (std::size_t k = 0; k <= dn; ++k)
            rem[i - dn + k] -= c * den[k];
    }
    for (std::size_t k = 0; k < dn; ++k)
        if (rem[k] != 0)
            throw std::logic_error("cyclotomic division left a remainder");
    return quot;
}

} // namespace

IntPoly cyclotomic_phi(std::uint32_t q) {
    if (q == 0)
        throw DomainError("cyclotomic polynomial index must be positive");
    IntPoly poly(q + 1, 0);
    poly[0] = -1;
    poly[q] = 1;
    for (std::uint32_t d = 1; d < q; ++d)
        if (q % d == 0)
            poly = divide_monic(poly, cyclotomic_phi(d));
    return poly;
}

std::uint32_t totient(std::uint32_t q) {
    std::uint32_t result = q;
    std::uint32_t m = q;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

CyclotomicRing::CyclotomicRing(std::uint32_t q) : q_(q), phi_(cyclotomic_phi(q)) {
    powers_.reserve(q);
    numeric_.reserve(q);
    for (std::uint32_t k = 0; k < q; ++k) {
        IntPoly mono(k + 1, 0);
        mono[k] = 1;
        reduce(mono);
        powers_.push_back(std::move(mono));
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q);
        numeric_.emplace_back(std::cos(angle), std::sin(angle));
    }
}

const CyclotomicRing& CyclotomicRing::ring(std::uint32_t q) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<CyclotomicRing>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot)
        slot = std::make_unique<CyclotomicRing>(q);
    return *slot;
}

std::span<const std::int64_t> CyclotomicRing::power(std::int64_t k) const {
    const auto m = static_cast<std::int64_t>(q_);
    return powers_[static_cast<std::size_t>(((k % m) + m) % m)];
}

std::complex<double> CyclotomicRing::numeric_power(std::int64_t k) const {
    const auto m = static_cast<std::int64_t>(q_);
    return numeric_[static_cast<std::size_t>(((k % m) + m) % m)];
}

void CyclotomicRing::reduce(IntPoly& poly) const {
    const std::size_t deg = degree();
    for (std::size_t i = poly.size(); i-- > deg;) {
        const std::int64_t c = poly[i];
        if (c == 0)
            continue;
        for (std::size_t k = 0; k <= deg; ++k)
            poly[i - deg + k] -= c * phi_[k];
    }
    poly.resize(deg, 0);
}

CyclotomicInt::CyclotomicInt(const CyclotomicRing& ring) : ring_(&ring), coeffs_(ring.degree(), 0) {}

CyclotomicInt::CyclotomicInt(const CyclotomicRing& ring, IntPoly coeffs) : ring_(&ring), coeffs_(std::move(coeffs)) {
    ring_->reduce(coeffs_);
}

CyclotomicInt CyclotomicInt::zero(std::uint32_t q) { return CyclotomicInt(CyclotomicRing::ring(q)); }

CyclotomicInt CyclotomicInt::integer(std::uint32_t q, std::int64_t value) {
    CyclotomicInt z = zero(q);
    return z.add_zeta_power(0, value);
}

CyclotomicInt CyclotomicInt::zeta_power(std::uint32_t q, std::int64_t k) {
    CyclotomicInt z = zero(q);
    return z.add_zeta_power(k, 1);
}

bool CyclotomicInt::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool CyclotomicInt::equals_integer(std::int64_t value) const noexcept {
    if (coeffs_.empty())
        return value == 0;
    if (coeffs_[0] != value)
        return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

CyclotomicInt CyclotomicInt::conj() const {
    CyclotomicInt out(*ring_);
    const auto q = static_cast<std::int64_t>(ring_->q());
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            out.add_zeta_power(q - static_cast<std::int64_t>(j), coeffs_[j]);
    return out;
}

std::complex<double> CyclotomicInt::numeric() const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            acc += static_cast<double>(coeffs_[j]) * ring_->numeric_power(static_cast<std::int64_t>(j));
    return acc;
}

CyclotomicInt CyclotomicInt::divide_exact(std::int64_t d) const {
    if (d == 0)
        throw DomainError("division by zero");
    CyclotomicInt out(*this);
    for (auto& c : out.coeffs_) {
        if (c % d != 0)
            throw DomainError("cyclotomic integer is not divisible by " + std::to_string(d));
        c /= d;
    }
    return out;
}

void CyclotomicInt::check_same_ring(const CyclotomicInt& other) const {
    if (other.ring_->q() != ring_->q())
        throw DomainError("cyclotomic integers from different rings");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& rhs) {
    check_same_ring(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] += rhs.coeffs_[j];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& rhs) {
    check_same_ring(rhs);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] -= rhs.coeffs_[j];
    return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t scalar) {
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

CyclotomicInt& CyclotomicInt::add_zeta_power(std::int64_t k, std::int64_t scalar) {
    if (scalar == 0)
        return *this;
    auto p = ring_->power(k);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        coeffs_[j] += scalar * p[j];
    return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    a.check_same_ring(b);
    const std::size_t d = a.coeffs_.size();
    if (d == 0)
        return a;
    IntPoly prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicInt(*a.ring_, std::move(prod));
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.q() == b.q() && a.coeffs_ == b.coeffs_;
}

std::string to_string(const CyclotomicInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z) {
    os << '[';
    for (std::size_t j = 0; j < z.coeffs().size(); ++j)
        os << (j ? ", " : "") << z.coeffs()[j];
    return os << ']';
}

} // namespace gbent
