// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtk/mtk.hpp"

namespace mtk::cli {

using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

inline ojson sets_json(const std::vector<SubsetMask>& sets) {
  ojson a = ojson::array();
  for (SubsetMask s : sets) a.push_back(s.elements());
  return a;
}

inline std::string ext(const ExtRational& x) { return x.str(); }
inline std::string ext(const ExtEta& x) { return x.str(); }

// The complex invariants act on: the explicit complex, else the common
// independent sets of the matroids, else I(H).
inline Complex target_complex(const Instance& inst) {
  if (inst.complex) return *inst.complex;
  if (inst.matroids) return inst.matroids->intersection();
  if (inst.hypergraph) return independence_complex(*inst.hypergraph);
  throw ValidationError("instance has no complex, matroids or hypergraph");
}

inline const Hypergraph& need_hypergraph(const Instance& inst, const std::string& what) {
  if (!inst.hypergraph) throw ValidationError(what + " needs a hypergraph");
  return *inst.hypergraph;
}

inline const MatroidSystem& need_matroids(const Instance& inst, const std::string& what) {
  if (!inst.matroids) throw ValidationError(what + " needs matroids");
  return *inst.matroids;
}

inline RatVec weights_or_ones(const std::optional<RatVec>& v, std::size_t n) {
  if (v && v->size() == n) return *v;
  return RatVec(n, Rational(1));
}

inline PolytopeRef polytope(const Instance& inst, char which) {
  switch (which) {
    case 'P':
      return PolytopeRef::P(target_complex(inst));
    case 'Q':
      return PolytopeRef::Q(target_complex(inst));
    case 'R':
      return PolytopeRef::R(need_matroids(inst, "R(L)"));
  }
  throw ValidationError(std::string("unknown polytope '") + which + "'");
}

}  // namespace detail

inline const std::vector<std::string>& invariant_names() {
  static const std::vector<std::string> names = {
      "rank",      "eta_h",     "homology", "chi",         "chi_star",
      "chi_list",  "expansions", "min_nonfaces", "gamma_e", "certificate",
      "eta_indep", "chi_matroid", "matroidal", "hyper",     "matdim",
      "psi"};
  return names;
}

// One invariant as JSON. Throws mtk::Error when it does not apply.
inline ojson invariant(const Instance& inst, const std::string& name) {
  using namespace detail;
  if (name == "rank") return target_complex(inst).rank();
  if (name == "eta_h") return eta_h(target_complex(inst)).str();
  if (name == "homology") {
    auto prof = reduced_homology(target_complex(inst));
    ojson a = ojson::array();
    if (prof.empty_complex) a.push_back({{"dim", -1}, {"free_rank", 1}, {"torsion", false}});
    for (std::size_t i = 0; i < prof.groups.size(); ++i) {
      a.push_back({{"dim", i},
                   {"free_rank", prof.groups[i].free_rank},
                   {"torsion", prof.groups[i].torsion}});
    }
    return a;
  }
  if (name == "chi") {
    std::vector<SubsetMask> cover;
    int v = chi(target_complex(inst), &cover);
    return {{"value", v}, {"cover", sets_json(cover)}};
  }
  if (name == "chi_star") {
    Complex c = target_complex(inst);
    auto fc = chi_star(c, weights_or_ones(inst.h, c.n()));
    ojson ws = ojson::array();
    for (const auto& [f, x] : fc.weights) ws.push_back({{"face", f.elements()}, {"weight", format_rational(x)}});
    return {{"value", format_rational(fc.value)}, {"weights", ws}};
  }
  if (name == "chi_list") return chi_list_number(target_complex(inst));
  if (name == "expansions") {
    Complex c = target_complex(inst);
    std::optional<RatVec> h;
    if (inst.h && static_cast<int>(inst.h->size()) == c.n()) h = inst.h;
    auto e = expansions(c, h);
    return {{"delta_r", ext(e.delta_r)},
            {"delta_eta", ext(e.delta_eta)},
            {"delta", ext(e.delta)},
            {"delta_h", ext(e.delta_h)}};
  }
  if (name == "min_nonfaces") return sets_json(min_nonfaces(target_complex(inst)).edges());
  if (name == "gamma_e") {
    const auto& h = need_hypergraph(inst, name);
    if (h.is_uniform(2)) return gamma_e_graph(h).str();
    auto seq = gamma_e_hyper_sequence(h);
    return {{"value", seq.value.str()}, {"sequence", sets_json(seq.edges)}};
  }
  if (name == "certificate") {
    auto seq = delete_contract_certificate(need_hypergraph(inst, name));
    return {{"value", seq.value.str()}, {"sequence", sets_json(seq.edges)}};
  }
  if (name == "eta_indep") {
    return eta_h(independence_complex(need_hypergraph(inst, name))).str();
  }
  if (name == "chi_matroid") {
    ojson a = ojson::array();
    for (const auto& m : need_matroids(inst, name).matroids) a.push_back(chi_matroid(m));
    return a;
  }
  if (name == "matroidal") {
    const auto& l = need_matroids(inst, name);
    auto r = matroidal_numbers(l, weights_or_ones(inst.w, l.n()));
    return {{"nu", format_rational(r.nu)},
            {"nu_star", format_rational(r.nu_star)},
            {"tau_star", format_rational(r.tau_star)},
            {"tau", format_rational(r.tau)},
            {"nu_witness", r.nu_witness.elements()}};
  }
  if (name == "hyper") {
    const auto& h = need_hypergraph(inst, name);
    auto r = hyper_numbers(h, weights_or_ones(inst.w, h.num_edges()));
    return {{"nu", format_rational(r.nu)},
            {"nu_star", format_rational(r.nu_star)},
            {"tau", format_rational(r.tau)},
            {"tau_star", format_rational(r.tau_star)},
            {"width_star", format_rational(r.width_star)}};
  }
  if (name == "matdim") {
    Complex c = target_complex(inst);
    ojson j = {{"upper", matdim_upper(c).value}};
    if (c.n() <= 6) j["exact"] = matdim_exact(c);
    return j;
  }
  if (name == "psi") {
    ojson j;
    int n = target_complex(inst).n();
    RatVec h = weights_or_ones(inst.h, n);
    j["P"] = ext(psi(polytope(inst, 'P'), h));
    j["Q"] = ext(psi(polytope(inst, 'Q'), h));
    if (inst.matroids) j["R"] = ext(psi(polytope(inst, 'R'), h));
    return j;
  }
  throw ValidationError("unknown invariant '" + name + "'");
}

namespace detail {

inline std::string table_cell(const ojson& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline void print_records(const std::vector<VerificationRecord>& rs, const std::string& report,
                          std::ostream& out) {
  if (report == "jsonl") {
    for (const auto& r : rs) out << r.to_json().dump() << "\n";
    return;
  }
  std::size_t w = 5;
  for (const auto& r : rs) w = std::max(w, r.claim.size());
  out << std::left << std::setw(static_cast<int>(w)) << "claim" << "  " << std::setw(9)
      << "verdict" << "  check\n";
  long held = 0, bad = 0, skip = 0;
  for (const auto& r : rs) {
    out << std::left << std::setw(static_cast<int>(w)) << r.claim << "  " << std::setw(9)
        << verdict_name(r.verdict) << "  " << r.lhs << " " << r.relation << " " << r.rhs
        << "  [" << r.provenance << "]\n";
    if (r.verdict == Verdict::kHolds) ++held;
    if (r.verdict == Verdict::kViolated) ++bad;
    if (r.verdict == Verdict::kSkipped) ++skip;
  }
  out << rs.size() << " records: " << held << " holds, " << bad << " violated, " << skip
      << " skipped\n";
}

}  // namespace detail

// Entry point of the mtk tool. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"matroid intersection toolkit"};
  app.require_subcommand(1);
  std::string report = "jsonl";
  app.add_option("--report", report, "jsonl or table")
      ->check(CLI::IsMember({"jsonl", "table"}))
      ->capture_default_str();

  std::string file, what = "eta_h,chi,chi_star";
  auto* inv = app.add_subcommand("invariants", "compute invariants of an instance file");
  inv->fallthrough();
  inv->add_option("file", file)->required();
  inv->add_option("--what", what, "comma separated: " + [] {
    std::string s;
    for (const auto& n : invariant_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }());

  std::string suite;
  SuiteOptions opts;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->fallthrough();
  ver->add_option("suite", suite)->required();
  ver->add_option("--seed", opts.seed);
  ver->add_option("--max-n", opts.max_n);
  ver->add_option("--max-k", opts.max_k);
  ver->add_option("--count", opts.count);

  std::string gen_name, out_path;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "write a canned instance");
  gen->fallthrough();
  gen->add_option("name", gen_name)->required();
  gen->add_option("--param", params, "key=value, repeatable");
  gen->add_option("-o,--output", out_path);

  std::string pair = "R:P";
  auto* rat = app.add_subcommand("ratio", "polytope ratio B:A, least t with tA containing B");
  rat->fallthrough();
  rat->add_option("file", file)->required();
  rat->add_option("--pair", pair)->check(CLI::IsMember({"R:P", "R:Q", "Q:P"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*ver) {
      auto rs = run_suite(suite, opts);
      detail::print_records(rs, report, out);
      return any_violated(rs) ? kExitViolation : kExitOk;
    }
    if (*gen) {
      Params p;
      for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--param expects key=value");
        p[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      std::string text = emit_instance(canned(gen_name, p));
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path);
        if (!f) throw ParseError("cannot write " + out_path);
        f << text;
      }
      return kExitOk;
    }
    Instance inst = parse_instance(file);
    if (*rat) {
      auto r = ratio(detail::polytope(inst, pair[0]), detail::polytope(inst, pair[2]));
      if (report == "jsonl") {
        out << ojson{{"pair", pair}, {"ratio", r.str()}}.dump() << "\n";
      } else {
        out << pair << "  " << r.str() << "\n";
      }
      return kExitOk;
    }
    // invariants
    int rc = kExitOk;
    ojson all = ojson::object();
    for (const auto& name : detail::split(what, ',')) {
      try {
        all[name] = invariant(inst, name);
      } catch (const Error& e) {
        all[name] = {{"error", e.what()}};
        rc = kExitUsage;
      }
    }
    if (report == "jsonl") {
      out << all.dump() << "\n";
    } else {
      for (const auto& [k, v] : all.items()) out << k << "  " << detail::table_cell(v) << "\n";
    }
    return rc;
  } catch (const Error& e) {
    err << "mtk: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mtk::cli
