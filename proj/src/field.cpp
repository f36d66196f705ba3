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

#include "dsrg/field.hpp"

#include "dsrg/error.hpp"
#include "dsrg/numtheory.hpp"

namespace dsrg {

FiniteField FiniteField::make(std::uint64_t q, std::uint64_t cap) {
  const auto pp = nt::as_prime_power(q);
  if (!pp) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
  if (q > cap) throw SizeCapExceeded("field order " + std::to_string(q) + " exceeds the size cap " + std::to_string(cap));

  FiniteField f;
  f.q_ = static_cast<std::uint32_t>(q);
  f.p_ = static_cast<std::uint32_t>(pp->p);
  f.degree_ = pp->k;
  if (pp->k > 1) {
    f.ring_ = ChainRing::make(f.p_, 1, pp->k, q);
    f.one_ = f.ring_->index_of(f.ring_->one());
  }

  const auto factors = nt::prime_factors(q - 1);
  auto slow_pow = [&f](ElementIndex a, std::uint64_t k) {
    ElementIndex r = f.one_;
    while (k > 0) {
      if (k & 1) r = f.slow_mul(r, a);
      a = f.slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  ElementIndex omega = 0;
  for (ElementIndex g = 1; g < q; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, (q - 1) / r) == f.one_) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      omega = g;
      break;
    }
  }
  if (q == 2) omega = f.one_;
  f.omega_ = omega;

  f.exp_.resize(q - 1);
  f.log_.assign(q, 0);
  ElementIndex x = f.one_;
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    f.exp_[k] = x;
    f.log_[x] = k;
    x = f.slow_mul(x, omega);
  }
  return f;
}

ElementIndex FiniteField::slow_mul(ElementIndex a, ElementIndex b) const {
  if (ring_) return ring_->mul_index(a, b);
  return static_cast<ElementIndex>(std::uint64_t{a} * b % q_);
}

ElementIndex FiniteField::inv(ElementIndex a) const {
  if (a == 0) throw InvalidParameter("zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t FiniteField::log(ElementIndex a) const {
  if (a == 0 || a >= q_) throw InvalidParameter("log of zero or out-of-range element");
  return log_[a];
}

ElementIndex FiniteField::pow(ElementIndex a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? one_ : 0;
  return exp_[static_cast<std::size_t>(nt::mul_mod(log_[a], k, q_ - 1))];
}

ElementIndex FiniteField::from_integer(std::int64_t n) const {
  const std::int64_t p = p_;
  const auto r = static_cast<std::uint32_t>(((n % p) + p) % p);
  if (!ring_) return r;
  auto e = ring_->zero();
  e.coeffs[0] = r;
  return ring_->index_of(e);
}

std::optional<std::uint32_t> FiniteField::prime_subfield_value(ElementIndex a) const {
  if (!ring_) return a;
  const auto e = ring_->element(a);
  for (std::size_t i = 1; i < e.coeffs.size(); ++i) {
    if (e.coeffs[i] != 0) return std::nullopt;
  }
  return e.coeffs[0];
}

}  // namespace dsrg
