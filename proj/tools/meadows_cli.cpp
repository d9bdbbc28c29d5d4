/*
   Copyright 2026 The meadows authors

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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "meadows/construct.hpp"
#include "meadows/json_io.hpp"
#include "meadows/ring_spec.hpp"

namespace {

using namespace meadows;

struct Options {
  bool json = false;
  bool dot = false;
  bool sampled = false;
  std::size_t cap = kDefaultRingCap;
  std::uint64_t seed = kDefaultSeed;
};

void add_common_flags(CLI::App* cmd, Options& opts) {
  cmd->add_flag("--json", opts.json, "emit a JSON report");
  cmd->add_flag("--dot", opts.dot, "emit a DOT diagram");
  cmd->add_flag("--sampled", opts.sampled, "force sampling mode for axiom sweeps");
  cmd->add_option("--cap", opts.cap, "size cap for ring carriers");
  cmd->add_option("--seed", opts.seed, "seed for sampling mode");
}

CheckOptions check_options(const Options& opts) {
  CheckOptions c;
  c.force_sampled = opts.sampled;
  c.seed = opts.seed;
  return c;
}

// a meadow source is either a ring spec (one token) or the two tokens
// "custom-lattice <path>"
MeadowPtr meadow_from_tokens(const std::vector<std::string>& tokens, std::size_t& at,
                             const Options& opts, std::string& title) {
  if (at >= tokens.size()) throw ParseError("missing meadow spec");
  if (tokens[at] == "custom-lattice") {
    if (at + 1 >= tokens.size())
      throw ParseError("custom-lattice needs a JSON file path");
    const std::string path = tokens[at + 1];
    at += 2;
    title = "custom lattice " + path;
    return Meadow::create(load_directed_lattice(path, opts.cap));
  }
  const RingPtr ring = parse_ring_spec(tokens[at], opts.cap);
  ++at;
  title = "meadow of " + ring->name();
  return build_meadow_of_ring(ring, opts.cap);
}

void print_meadow_summary(const Meadow& m, const std::string& title) {
  std::cout << title << "\n";
  std::cout << "vertices: " << m.vertex_count()
            << "  carrier size: " << m.carrier_size() << "\n";
  for (Vertex v = 0; v < m.vertex_count(); ++v)
    std::cout << "v" << v << ": " << m.vertex_label(v) << "  fiber order "
              << m.fiber_ring(v)->order() << "\n";
  std::cout << "hasse (lower < upper):";
  const auto edges = m.lattice().hasse_edges();
  if (edges.empty()) std::cout << " none";
  for (std::size_t i = 0; i < edges.size(); ++i)
    std::cout << (i ? ", " : " ") << "v" << edges[i].first << " < v" << edges[i].second;
  std::cout << "\n";
  std::cout << "common: " << (m.is_common() ? "yes" : "no") << "\n";
  std::cout << "local: " << (m.is_local() ? "yes" : "no") << "\n";
  const auto atoms = m.atoms();
  std::cout << "atoms (" << atoms.size() << "):";
  for (std::size_t i = 0; i < atoms.size(); ++i)
    std::cout << (i ? ", " : " ") << "v" << atoms[i];
  std::cout << "\n";
}

template <typename Seq>
void print_indices(const std::string& label, const Seq& xs) {
  std::cout << label << " (" << xs.size() << "):";
  for (const auto& x : xs) std::cout << " " << x;
  std::cout << "\n";
}

void require_consumed(const std::vector<std::string>& tokens, std::size_t at) {
  if (at != tokens.size())
    throw ParseError("unexpected extra argument '" + tokens[at] + "'");
}

int run_ring_info(const std::string& spec, const Options& opts) {
  const RingPtr r = parse_ring_spec(spec, opts.cap);
  const auto us = units(*r);
  const auto idems = idempotents(*r);
  const auto prims = primitive_idempotents(*r);
  // full ideal enumeration; skipped for large carriers where the closure
  // work would dwarf an info command
  const bool with_ideals = r->order() <= 512;
  const auto maxi = with_ideals ? maximal_ideals(r, opts.cap) : std::vector<Ideal>{};
  const bool is_field = !r->is_zero_ring() && us.size() == r->order() - 1;
  const bool is_local = maxi.size() == 1;

  if (!with_ideals) {
    if (opts.json) {
      nlohmann::json j;
      j["schema"] = 1;
      j["descriptor"] = r->descriptor();
      j["name"] = r->name();
      j["order"] = r->order();
      j["zero"] = r->zero();
      j["one"] = r->one();
      j["units"] = us;
      j["idempotents"] = idems;
      j["primitive_idempotents"] = prims;
      j["field"] = is_field;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "ring " << r->name() << "  (" << r->descriptor() << ")\n";
      std::cout << "order: " << r->order() << "\n";
      print_indices("units", us);
      print_indices("idempotents", idems);
      print_indices("primitive idempotents", prims);
      std::cout << "maximal ideals: not computed (order > 512)\n";
      std::cout << "field: " << (is_field ? "yes" : "no") << "\n";
    }
    return 0;
  }

  if (opts.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["descriptor"] = r->descriptor();
    j["name"] = r->name();
    j["order"] = r->order();
    j["zero"] = r->zero();
    j["one"] = r->one();
    j["units"] = us;
    j["idempotents"] = idems;
    j["primitive_idempotents"] = prims;
    nlohmann::json maxi_labels = nlohmann::json::array();
    for (const auto& i : maxi) maxi_labels.push_back(i.label());
    j["maximal_ideals"] = std::move(maxi_labels);
    j["local"] = is_local;
    j["field"] = is_field;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "ring " << r->name() << "  (" << r->descriptor() << ")\n";
  std::cout << "order: " << r->order() << "\n";
  std::cout << "zero: " << r->element_name(r->zero())
            << "  one: " << r->element_name(r->one()) << "\n";
  print_indices("units", us);
  print_indices("idempotents", idems);
  print_indices("primitive idempotents", prims);
  std::cout << "maximal ideals (" << maxi.size() << "):";
  for (std::size_t i = 0; i < maxi.size(); ++i)
    std::cout << (i ? ", " : " ") << maxi[i].label();
  std::cout << "\n";
  std::cout << "local: " << (is_local ? "yes" : "no") << "\n";
  std::cout << "field: " << (is_field ? "yes" : "no") << "\n";
  return 0;
}

int run_ideals(const std::string& spec, const Options& opts) {
  const RingPtr r = parse_ring_spec(spec, opts.cap);
  const auto ideals = enumerate_ideals(r, opts.cap);
  if (opts.json) {
    std::cout << ideals_to_json(r, ideals).dump(2) << "\n";
    return 0;
  }
  const auto maxi = maximal_ideals(r, opts.cap);
  std::cout << "ideals of " << r->name() << " (" << ideals.size() << "):\n";
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    std::cout << "#" << k << " " << ideals[k].label() << " size "
              << ideals[k].size() << " members [";
    for (std::size_t i = 0; i < ideals[k].members().size(); ++i)
      std::cout << (i ? " " : "") << ideals[k].members()[i];
    std::cout << "]";
    if (std::find(maxi.begin(), maxi.end(), ideals[k]) != maxi.end())
      std::cout << " maximal";
    std::cout << "\n";
  }
  return 0;
}

int run_meadow_build(const std::vector<std::string>& tokens, const Options& opts) {
  std::size_t at = 0;
  std::string title;
  const MeadowPtr m = meadow_from_tokens(tokens, at, opts, title);
  require_consumed(tokens, at);
  if (opts.dot)
    std::cout << meadow_to_dot(*m);
  else if (opts.json)
    std::cout << meadow_to_json(*m).dump(2) << "\n";
  else
    print_meadow_summary(*m, title);
  return 0;
}

int report_axioms(const AxiomReport& report) {
  int failures = 0;
  for (const auto& res : report.results) {
    std::cout << res.axiom << "  " << res.statement << ": "
              << (res.passed ? "pass" : "FAIL") << " [" << res.cases << " cases]\n";
    if (!res.passed) {
      ++failures;
      std::cout << "  counterexample: " << res.counterexample << "\n";
    }
  }
  return failures;
}

int run_meadow_check(const std::vector<std::string>& tokens, const Options& opts) {
  std::size_t at = 0;
  std::string title;
  const MeadowPtr m = meadow_from_tokens(tokens, at, opts, title);
  require_consumed(tokens, at);
  const auto copts = check_options(opts);
  const auto pre = m->check_pre_meadow(copts);
  const auto common = m->check_common(copts);

  if (opts.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["pre_meadow"] = axiom_report_to_json(pre);
    j["common"] = axiom_report_to_json(common);
    j["is_common"] = m->is_common();
    std::cout << j.dump(2) << "\n";
    return (pre.all_passed && common.all_passed) ? 0 : 2;
  }

  std::cout << "check of " << title << " (" << m->carrier_size() << " elements, "
            << (pre.sampled ? "sampled" : "exhaustive") << ")\n";
  int failures = report_axioms(pre);
  failures += report_axioms(common);
  if (failures == 0) {
    std::cout << "all axioms hold; the meadow is common\n";
    return 0;
  }
  std::cout << failures << " check(s) failed\n";
  return 2;
}

int run_meadow_atoms(const std::vector<std::string>& tokens, const Options& opts) {
  std::size_t at = 0;
  std::string title;
  const MeadowPtr m = meadow_from_tokens(tokens, at, opts, title);
  require_consumed(tokens, at);
  const auto atoms = m->atoms();
  if (opts.json) {
    nlohmann::json j;
    j["schema"] = 1;
    nlohmann::json list = nlohmann::json::array();
    for (Vertex v : atoms)
      list.push_back({{"vertex", v}, {"label", m->vertex_label(v)}});
    j["atoms"] = std::move(list);
    j["local"] = m->is_local();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "atoms of " << title << " (" << atoms.size() << "):";
  for (std::size_t i = 0; i < atoms.size(); ++i)
    std::cout << (i ? ", " : " ") << "v" << atoms[i] << " " << m->vertex_label(atoms[i]);
  std::cout << "\n";
  std::cout << "local: " << (m->is_local() ? "yes" : "no") << "\n";
  return 0;
}

int run_meadow_decompose(const std::string& spec, const Options& opts) {
  const RingPtr r = parse_ring_spec(spec, opts.cap);
  DecomposeOptions dopts;
  dopts.cap = opts.cap;
  const Decomposition dec = decompose_local(build_meadow_of_ring(r, opts.cap), dopts);
  std::cout << decomposition_to_json(dec).dump(2) << "\n";
  return dec.iso_report.all_passed ? 0 : 2;
}

int run_meadow_product(const std::vector<std::string>& tokens, const Options& opts) {
  std::size_t at = 0;
  std::string title_p, title_q;
  const MeadowPtr p = meadow_from_tokens(tokens, at, opts, title_p);
  const MeadowPtr q = meadow_from_tokens(tokens, at, opts, title_q);
  require_consumed(tokens, at);
  const MeadowPtr prod = meadow_product(p, q);
  if (opts.dot)
    std::cout << meadow_to_dot(*prod);
  else if (opts.json)
    std::cout << meadow_to_json(*prod).dump(2) << "\n";
  else
    print_meadow_summary(*prod, "product (" + title_p + ") x (" + title_q + ")");
  return 0;
}

int run_lattice_dot(const std::string& spec, const Options& opts) {
  const RingPtr r = parse_ring_spec(spec, opts.cap);
  const auto ideals = enumerate_ideals(r, opts.cap);
  const FiniteLattice lattice = lattice_from_ideals(ideals);
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (const auto& i : ideals) labels.push_back(i.label());
  std::cout << lattice_to_dot(lattice, labels, "ideals");
  return 0;
}

int run_custom_lattice(const std::string& path, const Options& opts) {
  const MeadowPtr m = Meadow::create(load_directed_lattice(path, opts.cap));
  if (opts.dot)
    std::cout << meadow_to_dot(*m);
  else if (opts.json)
    std::cout << meadow_to_json(*m).dump(2) << "\n";
  else
    print_meadow_summary(*m, "custom lattice " + path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite common meadows: construction, verification, decomposition"};
  app.require_subcommand(1);

  Options opts;
  std::string spec_arg, path_arg;
  std::vector<std::string> tokens;

  auto* ring_info = app.add_subcommand("ring-info", "inspect a ring built from a spec");
  ring_info->add_option("spec", spec_arg, "ring spec")->required();
  add_common_flags(ring_info, opts);

  auto* ideals_cmd = app.add_subcommand("ideals", "enumerate all ideals of a ring");
  ideals_cmd->add_option("spec", spec_arg, "ring spec")->required();
  add_common_flags(ideals_cmd, opts);

  auto* build = app.add_subcommand("meadow-build", "build the canonical meadow of a ring");
  build->add_option("spec", tokens, "ring spec, or: custom-lattice <path>")->required();
  add_common_flags(build, opts);

  auto* check = app.add_subcommand("meadow-check", "verify the axiom systems");
  check->add_option("spec", tokens, "ring spec, or: custom-lattice <path>")->required();
  add_common_flags(check, opts);

  auto* atoms = app.add_subcommand("meadow-atoms", "atoms and locality");
  atoms->add_option("spec", tokens, "ring spec, or: custom-lattice <path>")->required();
  add_common_flags(atoms, opts);

  auto* decompose = app.add_subcommand("meadow-decompose",
                                       "decompose into local factors (JSON report)");
  decompose->add_option("spec", spec_arg, "ring spec")->required();
  add_common_flags(decompose, opts);

  auto* product = app.add_subcommand("meadow-product", "product of two meadows");
  product->add_option("specs", tokens, "two meadow specs")->required();
  add_common_flags(product, opts);

  auto* lattice_dot = app.add_subcommand("lattice-dot", "DOT diagram of the ideal lattice");
  lattice_dot->add_option("spec", spec_arg, "ring spec")->required();
  add_common_flags(lattice_dot, opts);

  auto* custom = app.add_subcommand("custom-lattice", "build a meadow from a JSON lattice");
  custom->add_option("path", path_arg, "JSON file")->required();
  add_common_flags(custom, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (ring_info->parsed()) return run_ring_info(spec_arg, opts);
    if (ideals_cmd->parsed()) return run_ideals(spec_arg, opts);
    if (build->parsed()) return run_meadow_build(tokens, opts);
    if (check->parsed()) return run_meadow_check(tokens, opts);
    if (atoms->parsed()) return run_meadow_atoms(tokens, opts);
    if (decompose->parsed()) return run_meadow_decompose(spec_arg, opts);
    if (product->parsed()) return run_meadow_product(tokens, opts);
    if (lattice_dot->parsed()) return run_lattice_dot(spec_arg, opts);
    if (custom->parsed()) return run_custom_lattice(path_arg, opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
