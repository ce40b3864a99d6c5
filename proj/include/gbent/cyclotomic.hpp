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

#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gbent {

/// Integer polynomial, coefficient i multiplies x^i.
using IntPoly = std::vector<std::int64_t>;

/// Coefficients of the q-th cyclotomic polynomial, obtained by dividing
/// x^q - 1 by Phi_d for every proper divisor d of q.
IntPoly cyclotomic_phi(std::uint32_t q);

/// Euler's totient, equal to deg Phi_q.
std::uint32_t totient(std::uint32_t q);

/// Arithmetic context for Z[zeta_q] in the power basis 1, zeta, ..., zeta^{phi(q)-1}.
/// Instances are cached per q and immutable; obtain them through ring().
class CyclotomicRing {
  public:
    explicit CyclotomicRing(std::uint32_t q);

    /// Shared instance for q; thread-safe.
    static const CyclotomicRing& ring(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }
    std::size_t degree() const noexcept { return phi_.size() - 1; }
    const IntPoly& phi() const noexcept { return phi_; }

    /// Reduced coefficients of zeta^k for any integer k.
    std::span<const std::int64_t> power(std::int64_t k) const;
    /// Numeric value of zeta^k.
    std::complex<double> numeric_power(std::int64_t k) const;

    /// Reduces a polynomial of any degree modulo Phi_q in place; result has degree() entries.
    void reduce(IntPoly& poly) const;

  private:
    std::uint32_t q_;
    IntPoly phi_;
    std::vector<IntPoly> powers_;
    std::vector<std::complex<double>> numeric_;
};

/// Element of Z[zeta_q], kept reduced modulo Phi_q.
class CyclotomicInt {
  public:
    explicit CyclotomicInt(const CyclotomicRing& ring);
    CyclotomicInt(const CyclotomicRing& ring, IntPoly coeffs);

    static CyclotomicInt zero(std::uint32_t q);
    static CyclotomicInt integer(std::uint32_t q, std::int64_t value);
    static CyclotomicInt zeta_power(std::uint32_t q, std::int64_t k);

    const CyclotomicRing& ring() const noexcept { return *ring_; }
    std::uint32_t q() const noexcept { return ring_->q(); }
    const IntPoly& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// True when the element equals the rational integer value.
    bool equals_integer(std::int64_t value) const noexcept;

    CyclotomicInt conj() const;
    std::complex<double> numeric() const;

    /// Divides every coefficient by d; throws DomainError if any is not divisible.
    CyclotomicInt divide_exact(std::int64_t d) const;

    CyclotomicInt& operator+=(const CyclotomicInt& rhs);
    CyclotomicInt& operator-=(const CyclotomicInt& rhs);
    CyclotomicInt& operator*=(std::int64_t scalar);
    /// Adds scalar * zeta^k.
    CyclotomicInt& add_zeta_power(std::int64_t k, std::int64_t scalar);

    friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
    friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
    friend CyclotomicInt operator*(CyclotomicInt a, std::int64_t s) { return a *= s; }
    friend CyclotomicInt operator*(std::int64_t s, CyclotomicInt a) { return a *= s; }
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

  private:
    void check_same_ring(const CyclotomicInt& other) const;

    const CyclotomicRing* ring_;
    IntPoly coeffs_;
};

/// Coefficient-vector rendering, e.g. "[1, 0, -2, 0]".
std::string to_string(const CyclotomicInt& z);
std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z);

} // namespace gbent
