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

#include "dsrg/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "dsrg/cyclotomy.hpp"
#include "dsrg/digraph.hpp"
#include "dsrg/error.hpp"
#include "dsrg/io.hpp"
#include "dsrg/psf.hpp"
#include "dsrg/semidirect.hpp"

namespace dsrg::cli {

namespace {

struct Outputs {
  std::string emit_path;
  std::string json_path;
  std::size_t cap = kDefaultAdjacencyCap;
};

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParameter("cannot open " + path + " for writing");
  body(file);
  if (!file) throw InvalidParameter("failed writing " + path);
}

std::string violation_message(const Verdict& verdict) {
  return verdict.violation ? verdict.violation->describe() : std::string("unknown violation");
}

int finish_family(const PsfFamily& family, const Outputs& outputs, std::ostream& out, std::ostream& err) {
  if (!outputs.json_path.empty()) {
    write_file(outputs.json_path, [&](std::ostream& os) { os << family_to_json(family).dump() << '\n'; });
  }
  Verdict verdict = verify_psf(family);
  std::optional<Digraph> graph;
  if (std::size_t{family.block_count()} * family.group_order() <= outputs.cap) {
    graph = difference_digraph(family, outputs.cap);
    const Verdict adjacency = verify_dsrg(*graph);
    if (verdict.ok() && (!adjacency.ok() || adjacency.params != verdict.params)) {
      err << "error: adjacency oracle disagrees with the group-ring check\n";
      verdict = adjacency.ok() ? Verdict{std::nullopt, Violation{"oracle disagreement"}} : adjacency;
    }
  } else if (!outputs.emit_path.empty()) {
    throw SizeCapExceeded("cannot emit: vertex count exceeds the adjacency cap " + std::to_string(outputs.cap));
  }
  if (graph && !outputs.emit_path.empty()) {
    write_file(outputs.emit_path, [&](std::ostream& os) { write_edge_list(os, *graph); });
  }
  if (verdict.ok() && family.declared() && *verdict.params != *family.declared()) {
    verdict.violation = Violation{"declared parameters " + to_string(*family.declared()) + " differ from verified " +
                                  to_string(*verdict.params)};
    verdict.params.reset();
  }
  out << report_json(verdict).dump() << '\n';
  if (!verdict.ok()) {
    err << "violation: " << violation_message(verdict) << '\n';
    return kViolation;
  }
  return kVerified;
}

int run_semidirect(std::uint64_t q, std::uint32_t e, const Outputs& outputs, std::ostream& out, std::ostream& err) {
  SemidirectOptions options;
  options.adjacency_cap = outputs.cap;
  const auto built = e == 4 ? order4_construct(q, options) : order6_construct(q, options);
  if (!outputs.emit_path.empty()) {
    const Digraph graph =
        built.digraph ? *built.digraph : cayley_digraph(built.group, built.connection.members, kDefaultAdjacencyCap);
    write_file(outputs.emit_path, [&](std::ostream& os) { write_edge_list(os, graph); });
  }
  Verdict verdict = built.groupring;
  if (built.adjacency && !built.adjacency->ok()) verdict = *built.adjacency;
  out << report_json(verdict).dump() << '\n';
  if (!built.verified()) {
    if (verdict.ok()) {
      err << "violation: verified parameters " << to_string(*verdict.params) << " differ from the closed form "
          << to_string(built.expected) << '\n';
    } else {
      err << "violation: " << violation_message(verdict) << '\n';
    }
    return kViolation;
  }
  return kVerified;
}

void add_outputs(CLI::App* cmd, Outputs& outputs, bool with_json) {
  cmd->add_option("--emit", outputs.emit_path, "write the edge list to PATH");
  if (with_json) cmd->add_option("--json", outputs.json_path, "write the family JSON to PATH");
  cmd->add_option("--cap", outputs.cap, "largest vertex count for adjacency matrices");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify directed strongly regular graphs"};
  app.require_subcommand(1);

  std::function<int()> action;

  auto* construct = app.add_subcommand("construct", "build a family or Cayley digraph and verify it");
  construct->require_subcommand(1);

  Outputs psf_out;
  PsfShape shape;
  std::vector<std::uint32_t> blocks;
  std::optional<std::uint64_t> seed;
  bool force = false;
  auto* psf = construct->add_subcommand("psf", "partial sum family from a spread over a chain ring");
  psf->add_option("--p", shape.p, "prime")->required();
  psf->add_option("--s", shape.s, "nilpotency length")->capture_default_str();
  psf->add_option("--d", shape.d, "residue degree")->capture_default_str();
  psf->add_option("--w", shape.w, "window width")->required();
  psf->add_option("--z1", shape.z1, "number of blocks minus one")->required();
  psf->add_option("--z2", shape.z2, "cosets per off-diagonal cell")->required();
  psf->add_option("--blocks", blocks, "block starts k_0 < ... < k_z1")->delimiter(',');
  psf->add_option("--seed", seed, "randomize the coset representatives");
  psf->add_flag("--force", force, "build even when z2 is not w-1 or w");
  add_outputs(psf, psf_out, true);
  psf->callback([&] {
    action = [&] {
      const auto ring = ChainRing::make(shape.p, shape.s, shape.d);
      PsfConfig config{shape.w, shape.z1, shape.z2, blocks, seed, force};
      return finish_family(build_psf(ring, config), psf_out, out, err);
    };
  });

  Outputs uniform_out;
  std::uint32_t up = 0, ud = 1, uw = 1, uz2 = 1;
  auto* uniform = construct->add_subcommand("uniform", "uniform partial sum family (s = 1, w | p^d + 1)");
  uniform->add_option("--p", up, "prime")->required();
  uniform->add_option("--d", ud, "extension degree")->capture_default_str();
  uniform->add_option("--w", uw, "window width")->required();
  uniform->add_option("--z2", uz2, "cosets per off-diagonal cell")->required();
  add_outputs(uniform, uniform_out, true);
  uniform->callback([&] {
    action = [&] {
      const auto family = build_uniform_psf(up, ud, uw, uz2);
      if (!is_uniform(family)) {
        err << "violation: family is not uniform\n";
        return static_cast<int>(kViolation);
      }
      return finish_family(family, uniform_out, out, err);
    };
  });

  Outputs semi_out;
  semi_out.cap = SemidirectOptions{}.adjacency_cap;
  std::uint64_t sq = 0;
  std::uint32_t se = 4;
  auto register_semidirect = [&](CLI::App* cmd) {
    cmd->add_option("--q", sq, "field order")->required();
    cmd->add_option("--e", se, "cyclotomic order")->required()->check(CLI::IsMember({4, 6}));
    add_outputs(cmd, semi_out, false);
    cmd->callback([&] { action = [&] { return run_semidirect(sq, se, semi_out, out, err); }; });
  };
  register_semidirect(construct->add_subcommand("semidirect", "Cayley digraph on F_q x| K"));
  register_semidirect(app.add_subcommand("semidirect", "alias of construct semidirect"));

  std::string verify_path;
  std::size_t verify_cap = kDefaultAdjacencyCap;
  auto* verify = app.add_subcommand("verify", "verify an edge-list file");
  verify->add_option("path", verify_path, "edge list")->required();
  verify->add_option("--cap", verify_cap, "largest vertex count accepted");
  verify->callback([&] {
    action = [&]() -> int {
      std::ifstream file(verify_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << verify_path << '\n';
        return kUsage;
      }
      Digraph graph;
      try {
        graph = read_edge_list(file, verify_cap);
      } catch (const ParseError& e) {
        err << "error: " << verify_path << ": " << e.what() << '\n';
        return kUsage;
      }
      const auto verdict = verify_dsrg(graph);
      out << report_json(verdict).dump() << '\n';
      if (!verdict.ok()) {
        err << "violation: " << violation_message(verdict) << '\n';
        return kViolation;
      }
      return kVerified;
    };
  });

  std::uint64_t cq = 0;
  std::uint32_t ce = 0;
  bool formula = false;
  auto* cyclo = app.add_subcommand("cyclotomy", "cyclotomic numbers of order e over F_q");
  cyclo->add_option("--q", cq, "field order")->required();
  cyclo->add_option("--e", ce, "order")->required();
  cyclo->add_flag("--formula", formula, "use the closed formulas (e = 4 or 6)");
  cyclo->callback([&] {
    action = [&]() -> int {
      CyclotomicTable table;
      if (formula) {
        if (ce != 4 && ce != 6) throw InvalidParameter("--formula supports e = 4 and e = 6 only");
        table = ce == 4 ? table_e4(cq) : table_e6(cq);
      } else {
        table = cyclotomic_numbers_bruteforce(make_cyclotomic_setup(cq, ce));
      }
      out << format_table(table);
      auto rows = nlohmann::ordered_json::array();
      for (std::uint32_t i = 0; i < table.e; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::uint32_t j = 0; j < table.e; ++j) row.push_back(table.at(i, j));
        rows.push_back(std::move(row));
      }
      nlohmann::ordered_json doc;
      doc["q"] = cq;
      doc["e"] = ce;
      doc["table"] = std::move(rows);
      out << doc.dump() << '\n';
      return kVerified;
    };
  });

  std::string family_name;
  std::uint64_t enum_bound = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list the field orders admitted by a construction");
  enumerate->add_option("--family", family_name, "e4 or e6")->required()->check(CLI::IsMember({"e4", "e6"}));
  enumerate->add_option("--bound", enum_bound, "inclusive upper bound")->required();
  enumerate->callback([&] {
    action = [&]() -> int {
      const auto values = family_name == "e4" ? enumerate_e4(enum_bound) : enumerate_e6(enum_bound);
      for (auto v : values) out << v << '\n';
      out << "count " << values.size() << '\n';
      return kVerified;
    };
  });

  std::uint64_t table_bound = 0;
  auto* table = app.add_subcommand("table", "parameter tuples realizable by the spread construction");
  table->add_option("--bound", table_bound, "largest vertex count")->required();
  table->callback([&] {
    action = [&]() -> int {
      for (const auto& row : sweep_parameters(table_bound)) {
        const auto& p = row.params;
        const auto c = complement_params(p);
        nlohmann::ordered_json doc;
        doc["v"] = p.v;
        doc["k"] = p.k;
        doc["lambda"] = p.lambda;
        doc["mu"] = p.mu;
        doc["t"] = p.t;
        doc["genuine"] = is_genuine(p);
        doc["complement"] = {c.v, c.k, c.lambda, c.mu, c.t};
        doc["config"] = {{"p", row.shape.p},   {"s", row.shape.s},   {"d", row.shape.d},
                         {"w", row.shape.w},   {"z1", row.shape.z1}, {"z2", row.shape.z2}};
        out << doc.dump() << '\n';
      }
      return kVerified;
    };
  });

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("dsrg");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }
  try {
    return action ? action() : static_cast<int>(kUsage);
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace dsrg::cli
