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

#include "dsrg/semidirect.hpp"

#include <algorithm>
#include <string>

#include "dsrg/error.hpp"
#include "dsrg/numtheory.hpp"

namespace dsrg {

SemidirectGroup::SemidirectGroup(CyclotomicSetup setup) : setup_(std::move(setup)) {
  rho_powers_.reserve(setup_.f);
  for (std::uint32_t i = 0; i < setup_.f; ++i) {
    rho_powers_.push_back(setup_.field.power_of_primitive(std::int64_t{setup_.e} * i));
  }
}

SemidirectGroup SemidirectGroup::make(std::uint64_t q, std::uint32_t e) {
  return SemidirectGroup(make_cyclotomic_setup(q, e));
}

std::uint32_t SemidirectGroup::inverse(std::uint32_t a) const noexcept {
  const auto [h, i] = decode(a);
  const auto back = (f() - i) % f();
  const auto& F = field();
  return encode(F.neg(F.mul(rho_powers_[back], h)), back);
}

ConnectionSet connection_set(const SemidirectGroup& group, std::span<const ElementIndex> d) {
  const auto& setup = group.cyclotomy();
  const auto& F = group.field();
  std::vector<bool> in_d(group.q(), false);
  for (auto x : d) {
    if (x >= group.q()) throw InvalidParameter("element of D outside F_q");
    if (x == 0) throw InvalidParameter("D must be a union of cyclotomic classes (contains 0)");
    in_d[x] = true;
  }
  if (in_d[F.one()]) throw InvalidParameter("D contains 1, so W would contain the identity");
  for (auto x : d) {
    const auto& cls = setup.classes[static_cast<std::size_t>(setup.class_of[x])];
    if (!std::all_of(cls.begin(), cls.end(), [&in_d](ElementIndex y) { return in_d[y]; })) {
      throw InvalidParameter("D is not K-invariant: it meets class C_" + std::to_string(setup.class_of[x]) +
                             " without containing it");
    }
  }
  ConnectionSet w;
  const auto minus_one = F.neg(F.one());
  for (ElementIndex x = 0; x < group.q(); ++x) {
    if (!in_d[x]) continue;
    const auto h = F.add(minus_one, x);
    for (std::uint32_t i = 0; i < group.f(); ++i) w.members.push_back(group.encode(h, i));
  }
  std::sort(w.members.begin(), w.members.end());
  return w;
}

ConnectionSet connection_set_from_classes(const SemidirectGroup& group, std::span<const std::uint32_t> classes) {
  std::vector<ElementIndex> d;
  for (auto c : classes) {
    if (c >= group.e()) throw InvalidParameter("class index out of range");
    const auto& cls = group.cyclotomy().classes[c];
    d.insert(d.end(), cls.begin(), cls.end());
  }
  return connection_set(group, d);
}

Verdict groupring_square_check(const SemidirectGroup& group, const ConnectionSet& w, Backend backend) {
  Verdict verdict;
  const std::size_t order = group.order();
  if (std::binary_search(w.members.begin(), w.members.end(), group.identity())) {
    verdict.violation = Violation{"identity in the connection set", -1, -1, 0, 0, 1};
    return verdict;
  }
  const auto tally = tally_products(
      w.members, w.members, order, [&group](std::uint32_t a, std::uint32_t b) { return group.multiply(a, b); },
      backend);

  std::vector<bool> member(order, false);
  for (auto g : w.members) member[g] = true;
  SlotScan scan;
  for (std::size_t g = 0; g < order; ++g) {
    const Slot slot = g == group.identity() ? Slot::t : (member[g] ? Slot::lambda : Slot::mu);
    if (!scan.observe(slot, static_cast<std::int64_t>(tally[g]), static_cast<std::int64_t>(g))) break;
  }
  if (scan.mismatch) {
    static constexpr const char* kNames[] = {"W^2 coefficient at identity (t)", "W^2 coefficient on W (lambda)",
                                             "W^2 coefficient off W (mu)"};
    const auto& mm = *scan.mismatch;
    verdict.violation =
        Violation{kNames[static_cast<std::size_t>(mm.slot)], -1, -1, mm.position, mm.expected, mm.found};
    return verdict;
  }
  auto value = [&scan](Slot s) { return scan.first[static_cast<std::size_t>(s)]; };
  verdict.lambda_determined = value(Slot::lambda).has_value();
  verdict.mu_determined = value(Slot::mu).has_value();
  verdict.params = DsrgParams{static_cast<std::int64_t>(order), static_cast<std::int64_t>(w.members.size()),
                              value(Slot::lambda) ? value(Slot::lambda)->value : 0,
                              value(Slot::mu) ? value(Slot::mu)->value : 0, value(Slot::t)->value};
  return verdict;
}

bool flatness_check(const CyclotomicSetup& setup, std::uint32_t i) {
  if (i >= setup.e) throw InvalidParameter("class index out of range");
  const auto table = cyclotomic_numbers_bruteforce(setup);
  for (std::uint32_t j = 1; j < setup.e; ++j) {
    if (table.at(i, j) != table.at(i, 0)) return false;
  }
  return true;
}

bool SemidirectConstruction::verified() const {
  if (!groupring.ok() || *groupring.params != expected) return false;
  if (adjacency && (!adjacency->ok() || *adjacency->params != expected)) return false;
  return true;
}

DsrgParams order4_parameters(std::uint64_t p) {
  const auto n = static_cast<std::int64_t>(p) - 1;
  return {n * (n + 1) / 4, n * n / 16, n * n / 64 - n / 16, n * n / 64, n * n / 64};
}

DsrgParams order6_parameters(std::uint64_t q) {
  const auto n = static_cast<std::int64_t>(q) - 1;
  return {n * (n + 1) / 6, n * n / 36, n * n / 216 - n / 36, n * n / 216, n * n / 216};
}

namespace {

SemidirectConstruction run_construction(std::uint64_t q, std::uint32_t e, std::uint32_t cls, DsrgParams expected,
                                        const SemidirectOptions& options) {
  auto group = SemidirectGroup::make(q, e);
  const std::uint32_t classes[] = {cls};
  auto w = connection_set_from_classes(group, classes);
  SemidirectConstruction out{std::move(group), std::move(w), expected, {}, std::nullopt, std::nullopt};
  out.groupring = groupring_square_check(out.group, out.connection, options.backend);
  if (out.group.order() <= options.adjacency_cap) {
    out.digraph = cayley_digraph(out.group, out.connection.members, options.adjacency_cap);
    out.adjacency = verify_dsrg(*out.digraph, options.backend);
  }
  return out;
}

}  // namespace

SemidirectConstruction order4_construct(std::uint64_t p, const SemidirectOptions& options) {
  if (!nt::is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
  if (p % 4 != 1 || !nt::is_square((p - 1) / 4)) throw InvalidParameter("p must have the form 1 + 4t^2");
  if (nt::isqrt((p - 1) / 4) % 2 != 0) throw InvalidParameter("p = 1 + 4t^2 needs t even");
  return run_construction(p, 4, 2, order4_parameters(p), options);
}

SemidirectConstruction order6_construct(std::uint64_t q, const SemidirectOptions& options) {
  if (!nt::as_prime_power(q)) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
  if (q % 3 != 1 || !nt::is_square((q - 1) / 3)) throw InvalidParameter("q must have the form 1 + 3b^2");
  if (nt::isqrt((q - 1) / 3) % 2 != 0) throw InvalidParameter("q = 1 + 3b^2 needs b even");
  const auto field = FiniteField::make(q);
  if (field.pow(field.from_integer(2), (q - 1) / 3) != field.one()) {
    throw InvalidParameter("2 must be a cube in F_q");
  }
  return run_construction(q, 6, 3, order6_parameters(q), options);
}

std::vector<std::uint64_t> enumerate_e4(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 2; 1 + 4 * t * t <= bound; t += 2) {
    const auto p = 1 + 4 * t * t;
    if (nt::is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::uint64_t> enumerate_e6(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 2; 1 + 3 * b * b <= bound; b += 2) {
    const auto q = 1 + 3 * b * b;
    const auto pp = nt::as_prime_power(q);
    if (!pp) continue;
    // 2 lies in F_p, so 2^((q-1)/3) can be computed mod p.
    if (nt::pow_mod(2, (q - 1) / 3, pp->p) == 1) out.push_back(q);
  }
  return out;
}

}  // namespace dsrg
