/*
 * Copyright 2026 The dsrgkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "dsrg/ring.hpp"

#include <algorithm>

#include "dsrg/error.hpp"
#include "dsrg/numtheory.hpp"

namespace dsrg {

namespace {

// Remainder of a modulo the monic b over Z_p; both least significant first,
// b's leading 1 included.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j < db; ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - lead) * b[j]) % p);
    }
    a.pop_back();
  }
  return a;
}

// Advances a little-endian digit vector in lexicographic order where digit 0 is
// most significant. Returns false after the last vector.
bool next_lex(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  const std::size_t d = coeffs.size();
  if (d == 0) return false;
  if (d == 1) return true;
  std::vector<std::uint32_t> f(coeffs.begin(), coeffs.end());
  for (auto& c : f) c %= p;
  f.push_back(1);
  for (std::size_t k = 1; k <= d / 2; ++k) {
    std::vector<std::uint32_t> low(k, 0);
    do {
      std::vector<std::uint32_t> g = low;
      g.push_back(1);
      const auto rem = poly_rem(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
    } while (next_lex(low, p));
  }
  return true;
}

ChainRing ChainRing::make(std::uint32_t p, std::uint32_t s, std::uint32_t d, std::uint64_t cap) {
  if (!nt::is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw InvalidParameter("s must be >= 1");
  if (d < 1) throw InvalidParameter("d must be >= 1");
  const auto size = nt::checked_pow(p, s * d);
  if (!size || *size > cap) {
    throw SizeCapExceeded("ring order p^(sd) = " + std::to_string(p) + "^" + std::to_string(s * d) +
                          " exceeds the size cap " + std::to_string(cap));
  }
  std::vector<std::uint32_t> modulus(d, 0);
  if (d > 1) {
    bool found = false;
    do {
      if (is_irreducible_mod_p(modulus, p)) {
        found = true;
        break;
      }
    } while (next_lex(modulus, p));
    if (!found) throw InvalidParameter("no irreducible polynomial found");  // unreachable for prime p
  }
  return ChainRing(p, s, d, std::move(modulus));
}

ChainRing::ChainRing(std::uint32_t p, std::uint32_t s, std::uint32_t d, std::vector<std::uint32_t> modulus)
    : p_(p),
      s_(s),
      d_(d),
      char_(static_cast<std::uint32_t>(*nt::checked_pow(p, s))),
      residue_size_(static_cast<std::uint32_t>(*nt::checked_pow(p, d))),
      size_(static_cast<std::uint32_t>(*nt::checked_pow(p, s * d))),
      modulus_(std::move(modulus)) {}

std::string ChainRing::name() const {
  if (d_ == 1) return "Z_" + std::to_string(char_);
  if (s_ == 1) return "GF(" + std::to_string(size_) + ")";
  return "GR(" + std::to_string(char_) + "," + std::to_string(d_) + ")";
}

void ChainRing::check(const RingElement& a) const {
  if (a.coeffs.size() != d_) throw InvalidParameter("element does not belong to " + name());
  for (auto c : a.coeffs) {
    if (c >= char_) throw InvalidParameter("coefficient out of range for " + name());
  }
}

RingElement ChainRing::element(ElementIndex index) const {
  if (index >= size_) throw InvalidParameter("element index out of range for " + name());
  RingElement a{std::vector<std::uint32_t>(d_)};
  for (std::size_t i = d_; i-- > 0;) {
    a.coeffs[i] = index % char_;
    index /= char_;
  }
  return a;
}

ElementIndex ChainRing::index_of(const RingElement& a) const {
  check(a);
  ElementIndex index = 0;
  for (auto c : a.coeffs) index = index * char_ + c;
  return index;
}

RingElement ChainRing::zero() const { return RingElement{std::vector<std::uint32_t>(d_, 0)}; }

RingElement ChainRing::one() const {
  auto e = zero();
  e.coeffs[0] = 1 % char_;
  return e;
}

RingElement ChainRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  RingElement r{std::vector<std::uint32_t>(d_)};
  for (std::size_t i = 0; i < d_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % char_;
  return r;
}

RingElement ChainRing::neg(const RingElement& a) const {
  check(a);
  RingElement r{std::vector<std::uint32_t>(d_)};
  for (std::size_t i = 0; i < d_; ++i) r.coeffs[i] = (char_ - a.coeffs[i]) % char_;
  return r;
}

RingElement ChainRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement ChainRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  const std::uint64_t q = char_;
  std::vector<std::uint64_t> prod(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % q;
    }
  }
  // x^d = -sum modulus[j] x^j
  for (std::size_t k = prod.size(); k-- > d_;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < d_; ++j) {
      prod[k - d_ + j] = (prod[k - d_ + j] + (q - c) * modulus_[j]) % q;
    }
  }
  RingElement r{std::vector<std::uint32_t>(d_)};
  for (std::size_t i = 0; i < d_; ++i) r.coeffs[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

bool ChainRing::is_unit(const RingElement& a) const {
  check(a);
  return std::any_of(a.coeffs.begin(), a.coeffs.end(), [this](std::uint32_t c) { return c % p_ != 0; });
}

bool ChainRing::in_ideal_power(const RingElement& a, std::uint32_t power) const {
  check(a);
  if (power >= s_) return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
  const auto step = static_cast<std::uint32_t>(*nt::checked_pow(p_, power));
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [step](std::uint32_t c) { return c % step == 0; });
}

std::vector<RingElement> ChainRing::coset_reps() const {
  std::vector<RingElement> reps;
  reps.reserve(residue_size_);
  std::vector<std::uint32_t> digits(d_, 0);
  do {
    reps.push_back(RingElement{digits});
  } while (next_lex(digits, p_));
  return reps;
}

ElementIndex ChainRing::add_index(ElementIndex a, ElementIndex b) const noexcept {
  ElementIndex result = 0;
  ElementIndex place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const ElementIndex digit = (a % char_ + b % char_) % char_;
    result += digit * place;
    place *= char_;
    a /= char_;
    b /= char_;
  }
  return result;
}

ElementIndex ChainRing::neg_index(ElementIndex a) const noexcept {
  ElementIndex result = 0;
  ElementIndex place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const ElementIndex digit = (char_ - a % char_) % char_;
    result += digit * place;
    place *= char_;
    a /= char_;
  }
  return result;
}

ElementIndex ChainRing::mul_index(ElementIndex a, ElementIndex b) const {
  return index_of(mul(element(a), element(b)));
}

}  // namespace dsrg
