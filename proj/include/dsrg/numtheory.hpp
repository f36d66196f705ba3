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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace dsrg::nt {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Integer power with an overflow check; nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

std::uint64_t isqrt(std::uint64_t n);
bool is_square(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

/// q = p^k with p prime and k >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Sieve of Eratosthenes; entry i is true iff i is prime.
std::vector<bool> prime_sieve(std::uint64_t bound);

}  // namespace dsrg::nt
