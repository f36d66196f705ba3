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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only
//
// Exit status is 0 iff every selected criterion passes. All checks are exact;
// the only tolerances are the wall-clock budgets below.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsrg/cyclotomy.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/numtheory.hpp"
#include "dsrg/psf.hpp"
#include "dsrg/semidirect.hpp"
#include "dsrg/spread.hpp"
#include "oracles.hpp"

using namespace dsrg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; the first few are kept for the report line.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) {
      ++passed_;
      return;
    }
    ++failed_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  void note(const std::string& what) { extra_.push_back(what); }
  Outcome outcome() const {
    Outcome o;
    o.pass = failed_ == 0;
    std::ostringstream s;
    s << passed_ << " checks passed";
    if (failed_) s << ", " << failed_ << " failed";
    for (const auto& n : notes_) s << "; " << n;
    for (const auto& n : extra_) s << "; " << n;
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> extra_;
};

std::string show(const std::optional<DsrgParams>& p) { return p ? to_string(*p) : std::string("none"); }

PsfConfig config(std::uint32_t w, std::uint32_t z1, std::uint32_t z2, bool force = false) {
  PsfConfig c;
  c.w = w;
  c.z1 = z1;
  c.z2 = z2;
  c.force = force;
  return c;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
  std::uint32_t r = 1;
  while (e--) r *= b;
  return r;
}

// 1. The eight new tuples: found by the parameter sweep, built, verified on the
// adjacency matrix, and complemented.
Outcome criterion1() {
  Checker c;
  const std::vector<DsrgParams> targets = {{50, 18, 7, 6, 12},   {75, 28, 11, 10, 16},  {75, 32, 13, 14, 20},
                                           {98, 26, 9, 6, 16},    {98, 32, 11, 10, 22},  {98, 39, 16, 15, 27},
                                           {100, 38, 15, 14, 20}, {100, 42, 17, 18, 24}};
  const auto sweep = sweep_parameters(100);
  for (const auto& target : targets) {
    const auto hit = std::find_if(sweep.begin(), sweep.end(), [&](const auto& t) { return t.params == target; });
    c.expect(hit != sweep.end(), "no config for " + to_string(target));
    if (hit == sweep.end()) continue;
    const auto& sh = hit->shape;
    const auto fam = build_psf(ChainRing::make(sh.p, sh.s, sh.d), config(sh.w, sh.z1, sh.z2));
    const auto g = difference_digraph(fam);
    const auto got = verify_dsrg(g).params;
    c.expect(got == target, to_string(target) + " verified as " + show(got));
    c.expect(oracle::dsrg_from_matrix(oracle::to_matrix(g)) == target, to_string(target) + " fails the matrix oracle");
    const auto comp = verify_dsrg(complement_digraph(g)).params;
    c.expect(comp == complement_params(target), "complement of " + to_string(target) + " verified as " + show(comp));
  }
  return c.outcome();
}

// 2. z2 in {w-1, w} verifies; every other z2 up to p^{sd} (forced) fails.
Outcome criterion2() {
  Checker c;
  struct Spec {
    std::uint32_t p, s, d;
  };
  std::size_t configs = 0;
  for (const auto& [p, s, d] : {Spec{2, 1, 1}, Spec{3, 1, 1}, Spec{2, 2, 1}, Spec{5, 1, 1}, Spec{3, 1, 2}}) {
    const auto ring = ChainRing::make(p, s, d);
    const std::uint32_t q = ipow(p, d);
    const std::uint32_t r = ring.size();
    for (std::uint32_t w = 1; w <= q; ++w) {
      for (std::uint32_t z1 = 1; z1 <= q - w + 1; ++z1) {
        for (std::uint32_t z2 = 1; z2 <= r; ++z2) {
          const bool admissible = z2_admissible(w, z2);
          const auto fam = build_psf(ring, config(w, z1, z2, !admissible));
          const auto v = verify_psf(fam);
          std::ostringstream where;
          where << ring.name() << " w=" << w << " z1=" << z1 << " z2=" << z2;
          if (admissible) {
            c.expect(v.params == psf_parameters({p, s, d, w, z1, z2}), where.str() + " did not verify");
          } else {
            c.expect(!v.ok() && v.violation.has_value(), where.str() + " verified despite z2");
          }
          ++configs;
        }
      }
    }
  }
  c.note(std::to_string(configs) + " configs");
  return c.outcome();
}

// 3. Galois-ring instance over Z_4.
Outcome criterion3() {
  Checker c;
  const auto fam = build_psf(ChainRing::make(2, 2, 1), config(2, 1, 1));
  const auto g = difference_digraph(fam);
  const DsrgParams want{32, 10, 3, 3, 7};
  c.expect(verify_dsrg(g).params == want, "verify_dsrg");
  const auto oracle_params = oracle::dsrg_from_matrix(oracle::to_matrix(g));
  c.expect(oracle_params == want, "matrix oracle gave " + show(oracle_params));
  return c.outcome();
}

// 4. Uniform families for both z2 choices.
Outcome criterion4() {
  Checker c;
  for (auto [p, d, w] : {std::array<std::uint32_t, 3>{3, 1, 2}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}}) {
    for (std::uint32_t z2 : {w - 1, w}) {
      if (z2 == 0) continue;
      std::ostringstream where;
      where << "(" << p << "," << d << "," << w << "," << z2 << ")";
      const auto fam = build_uniform_psf(p, d, w, z2);
      c.expect(is_uniform(fam), where.str() + " not uniform");
      const auto v = verify_psf(fam);
      c.expect(v.ok() && v.params == fam.declared(), where.str() + " verified as " + show(v.params));
      c.expect(verify_dsrg(difference_digraph(fam)).params == fam.declared(), where.str() + " adjacency check");
    }
  }
  return c.outcome();
}

// 5. Closed-form cyclotomic numbers against brute force, and the Schur relation.
Outcome criterion5() {
  Checker c;
  for (std::uint64_t q : {17, 257, 401, 577, 1297, 1601, 3137}) {
    c.expect(table_e4(q) == cyclotomic_numbers_bruteforce(make_cyclotomic_setup(q, 4)),
             "table_e4(" + std::to_string(q) + ")");
  }
  for (std::uint64_t q : {109, 433}) {
    c.expect(table_e6(q) == cyclotomic_numbers_bruteforce(make_cyclotomic_setup(q, 6)),
             "table_e6(" + std::to_string(q) + ")");
  }
  std::size_t setups = 0;
  for (std::uint64_t q = 3; q <= 500; ++q) {
    if (!nt::as_prime_power(q)) continue;
    for (std::uint64_t e = 2; e <= (q - 1) / 2; ++e) {
      if ((q - 1) % e != 0) continue;
      const auto s = make_cyclotomic_setup(q, static_cast<std::uint32_t>(e));
      ++setups;
      for (std::uint32_t i = 0; i < e; ++i) {
        c.expect(schur_check(s, i).ok, "schur q=" + std::to_string(q) + " e=" + std::to_string(e) + " i=" +
                                           std::to_string(i));
      }
    }
  }
  c.note(std::to_string(setups) + " Schur setups");
  return c.outcome();
}

// 6. Order-4 family, asserting the tuples exactly as stated in the criterion.
Outcome criterion6() {
  Checker c;
  const auto a = order4_construct(17);
  const DsrgParams want17{68, 16, 4, 3, 4};
  c.expect(a.groupring.params == want17, "p=17 group ring gave " + show(a.groupring.params));
  c.expect(a.adjacency && a.adjacency->params == want17,
           "p=17 adjacency gave " + show(a.adjacency ? a.adjacency->params : std::nullopt));

  SemidirectOptions opts;
  opts.adjacency_cap = 0;
  const auto b = order4_construct(257, opts);
  const DsrgParams want257{16448, 4096, 1024, 1008, 1024};
  c.expect(b.groupring.params == want257, "p=257 group ring gave " + show(b.groupring.params));
  return c.outcome();
}

// 7. Order-6 family, asserting the tuple exactly as stated in the criterion.
Outcome criterion7() {
  Checker c;
  const auto a = order6_construct(109);
  const DsrgParams want{1962, 324, 54, 51, 54};
  c.expect(a.groupring.params == want, "q=109 group ring gave " + show(a.groupring.params));
  c.expect(a.adjacency && a.adjacency->params == want,
           "q=109 adjacency gave " + show(a.adjacency ? a.adjacency->params : std::nullopt));
  return c.outcome();
}

// 8. Enumeration counts and endpoints below 10^6.
Outcome criterion8() {
  Checker c;
  const auto e4 = enumerate_e4(1000000);
  c.expect(e4.size() == 59, "e4 count " + std::to_string(e4.size()));
  c.expect(e4.size() >= 4 && std::vector<std::uint64_t>(e4.begin(), e4.begin() + 4) ==
                                 std::vector<std::uint64_t>{17, 257, 401, 577},
           "e4 prefix");
  c.expect(!e4.empty() && e4.back() == 921601, "e4 last");
  const auto e6 = enumerate_e6(1000000);
  c.expect(e6.size() == 25, "e6 count " + std::to_string(e6.size()));
  c.expect(e6.size() >= 3 && std::vector<std::uint64_t>(e6.begin(), e6.begin() + 3) ==
                                 std::vector<std::uint64_t>{109, 433, 3889},
           "e6 prefix");
  c.expect(!e6.empty() && e6.back() == 995329, "e6 last");
  return c.outcome();
}

// 9a. Spread invariants for every ring with |R| <= 256.
void spread_properties(Checker& c) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t s = 1; s <= 8; ++s) {
      for (std::uint32_t d = 1; d <= 8; ++d) {
        std::uint64_t size = 1;
        for (std::uint32_t i = 0; i < s * d && size <= 256; ++i) size *= p;
        if (size > 256) continue;
        const auto sp = Spread::build(ChainRing::make(p, s, d));
        const std::string name = sp.ring().name();
        std::vector<std::uint32_t> hits(sp.group_order(), 0);
        bool disjoint = true;
        for (std::size_t a = 0; a < sp.line_count(); ++a) {
          const auto& la = sp.line(a).members;
          for (auto g : la) ++hits[g];
          for (std::size_t b = a + 1; b < sp.line_count(); ++b) {
            std::vector<ElementIndex> common;
            const auto& lb = sp.line(b).members;
            std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
            disjoint = disjoint && common == std::vector<ElementIndex>{0};
          }
        }
        c.expect(disjoint, name + " lines meet outside the origin");
        const auto covered = static_cast<std::size_t>(std::count_if(hits.begin(), hits.end(), [](auto h) { return h > 0; }));
        c.expect(covered == 1 + sp.line_count() * (sp.ring().size() - 1), name + " coverage count");
        c.expect((covered == sp.group_order()) == (s == 1), name + " covers G iff field");
        c.expect(sp.product_is_G(0, sp.line_count() - 1), name + " L_inf + L_a != G");
      }
    }
  }
}

// 9b. Row sums; 9c. complement involutions; 9d. group ring vs adjacency.
void semidirect_properties(Checker& c, std::size_t& graphs) {
  for (std::uint64_t q = 5; q <= 400; ++q) {
    if (!nt::as_prime_power(q)) continue;
    for (std::uint32_t e = 2; e <= 12; ++e) {
      if ((q - 1) % e != 0) continue;
      const auto f = (q - 1) / e;
      if (f < 2) continue;
      const auto setup = make_cyclotomic_setup(q, e);
      const auto table = cyclotomic_numbers_bruteforce(setup);
      const auto minus_one = setup.class_of_minus_one();
      for (std::uint32_t i = 0; i < e; ++i) {
        std::int64_t sum = 0;
        for (std::uint32_t j = 0; j < e; ++j) sum += table.at(i, j);
        c.expect(sum == static_cast<std::int64_t>(f) - (i == minus_one ? 1 : 0),
                 "row sum q=" + std::to_string(q) + " e=" + std::to_string(e));
      }
      if (f % 2 != 0 || q * f > 4000) continue;
      const auto group = SemidirectGroup::make(q, e);
      for (std::uint32_t i = 1; i < e; ++i) {
        const std::vector<std::uint32_t> cls = {i};
        const auto w = connection_set_from_classes(group, cls);
        const auto gr = groupring_square_check(group, w);
        const auto g = cayley_digraph(group, std::span<const std::uint32_t>(w.members));
        const auto adj = verify_dsrg(g);
        const std::string where = "q=" + std::to_string(q) + " e=" + std::to_string(e) + " i=" + std::to_string(i);
        c.expect(gr.ok() == adj.ok() && gr.params == adj.params, where + " group ring vs adjacency");
        c.expect(gr.ok() == flatness_check(setup, i), where + " flatness");
        if (adj.ok()) {
          const auto comp = complement_digraph(g);
          c.expect(verify_dsrg(comp).params == complement_params(*adj.params), where + " complement");
          c.expect(complement_digraph(comp) == g, where + " complement involution");
        }
        ++graphs;
      }
    }
  }
}

void psf_properties(Checker& c, std::size_t& graphs) {
  struct Spec {
    std::uint32_t p, s, d;
  };
  for (const auto& [p, s, d] : {Spec{2, 1, 1}, Spec{3, 1, 1}, Spec{2, 2, 1}, Spec{5, 1, 1}, Spec{2, 1, 2}, Spec{7, 1, 1},
                                Spec{3, 2, 1}, Spec{2, 3, 1}, Spec{3, 1, 2}}) {
    const auto ring = ChainRing::make(p, s, d);
    const std::uint32_t q = ipow(p, d);
    const std::uint32_t r = ring.size();
    for (std::uint32_t w = 1; w <= q; ++w) {
      for (std::uint32_t z1 = 1; z1 <= q - w + 1; ++z1) {
        if (std::uint64_t{z1 + 1} * r * r > 4000) continue;
        for (std::uint32_t z2 : {w - 1, w}) {
          if (!z2_admissible(w, z2)) continue;
          const auto fam = build_psf(ring, config(w, z1, z2));
          const auto g = difference_digraph(fam);
          const auto gr = verify_psf(fam);
          const auto adj = verify_dsrg(g);
          std::ostringstream where;
          where << ring.name() << " w=" << w << " z1=" << z1 << " z2=" << z2;
          c.expect(gr.params == adj.params && adj.params == fam.declared(), where.str() + " group ring vs adjacency");
          const auto comp = complement_family(fam);
          c.expect(complement_family(comp) == fam, where.str() + " family involution");
          c.expect(verify_psf(comp).params == complement_params(*fam.declared()), where.str() + " complement");
          c.expect(complement_params(complement_params(*fam.declared())) == *fam.declared(),
                   where.str() + " parameter involution");
          ++graphs;
        }
      }
    }
  }
}

Outcome criterion9() {
  Checker c;
  spread_properties(c);
  std::size_t graphs = 0;
  semidirect_properties(c, graphs);
  psf_properties(c, graphs);
  c.note(std::to_string(graphs) + " graphs cross-checked");
  return c.outcome();
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "new parameter tuples", 5, criterion1},
      {2, "z2 dichotomy", 60, criterion2},
      {3, "Galois ring instance", 1, criterion3},
      {4, "uniform families", 10, criterion4},
      {5, "cyclotomy oracles", 30, criterion5},
      {6, "order-4 semidirect family", 60, criterion6},
      {7, "order-6 semidirect family", 60, criterion7},
      {8, "enumeration counts", 30, criterion8},
      {9, "property suites", 120, criterion9},
  };
  return all;
}

bool run_one(const Criterion& crit) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = crit.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < crit.budget_seconds;
  const bool pass = outcome.pass && in_time;
  std::cout << "criterion " << crit.id << " [" << crit.title << "]: " << (pass ? "PASS" : "FAIL") << " ("
            << seconds << " s of " << crit.budget_seconds << " s) " << outcome.detail
            << (in_time ? "" : "; over time budget") << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& crit : criteria()) {
    if (only != 0 && crit.id != only) continue;
    all_pass = run_one(crit) && all_pass;
  }
  return all_pass ? 0 : 1;
}
