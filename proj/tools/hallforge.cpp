// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hallforge/error.hpp"
#include "hallforge/framed.hpp"
#include "hallforge/hall.hpp"
#include "hallforge/kernels.hpp"
#include "hallforge/verify.hpp"

using namespace hallforge;

namespace {

struct Common {
  std::string quiver = "a1";
  int p = 2;
  std::string cache_dir;
  bool no_cache = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--quiver", c.quiver, "preset (a1, a2, kronecker) or JSON file");
  cmd->add_option("--q", c.p, "prime field size");
  cmd->add_option("--cache-dir", c.cache_dir, std::string("orbit cache directory (default $") + kCacheEnv + ")");
  cmd->add_flag("--no-cache", c.no_cache, "disable the disk cache");
}

std::optional<std::filesystem::path> cache_dir_of(const Common& c) {
  if (c.no_cache) return std::nullopt;
  if (!c.cache_dir.empty()) return std::filesystem::path(c.cache_dir);
  if (const char* env = std::getenv(kCacheEnv); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

// "1,1" or "1,1#2": dimension vector and orbit label.
ClassKey parse_class(const std::string& text) {
  const auto hash = text.find('#');
  ClassKey k;
  k.dim = parse_dim(text.substr(0, hash));
  if (hash != std::string::npos) {
    try {
      k.label = std::stoi(text.substr(hash + 1));
    } catch (const std::logic_error&) {
      throw ConfigError("bad class label in '" + text + "'");
    }
  }
  return k;
}

void check_prime(int p) {
  if (!is_prime(p)) throw ConfigError("q must be a prime, got " + std::to_string(p));
}

int cmd_classes(const Common& c, const std::string& dim_text) {
  check_prime(c.p);
  set_cache_directory(cache_dir_of(c));
  const Quiver q = load_quiver(c.quiver);
  const DimVector d = parse_dim(dim_text);
  if (static_cast<int>(d.size()) != q.vertex_count()) throw ConfigError("dimension vector has the wrong length");
  const auto t = orbits(q, c.p, d);
  nlohmann::json j;
  j["quiver"] = to_json(q);
  j["p"] = c.p;
  j["dim"] = d;
  j["points"] = t->point_count();
  j["group_order"] = t->group_order();
  j["classes"] = nlohmann::json::array();
  std::uint64_t total = 0;
  for (const auto& k : t->classes()) {
    const Representation x = t->rep(k.label);
    nlohmann::json mats = nlohmann::json::array();
    for (const auto& m : x.mats) {
      nlohmann::json rows = nlohmann::json::array();
      for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int col = 0; col < m.cols(); ++col) row.push_back(m.at(r, col));
        rows.push_back(row);
      }
      mats.push_back(rows);
    }
    j["classes"].push_back({{"label", k.label}, {"aut", k.aut_order}, {"orbit_size", k.orbit_size}, {"rep", mats}});
    total += k.orbit_size;
  }
  j["orbit_size_sum"] = total;
  std::cout << j.dump(2) << "\n";
  std::cerr << t->size() << " classes, orbit sizes sum to " << total << " of " << t->point_count() << " points\n";
  return total == t->point_count() ? 0 : 1;
}

int cmd_hallnum(const Common& c, const std::string& g, const std::string& a, const std::string& b) {
  check_prime(c.p);
  set_cache_directory(cache_dir_of(c));
  HallContext h(load_quiver(c.quiver), c.p);
  const ClassKey gk = parse_class(g), ak = parse_class(a), bk = parse_class(b);
  for (const ClassKey* k : {&gk, &ak, &bk}) {
    if (k->label < 0 || k->label >= h.classes(k->dim)->size()) throw ConfigError("no class " + dim_to_string(k->dim) + "#" + std::to_string(k->label));
  }
  const std::uint64_t n = h.hall(gk, ak, bk);
  // coefficient of u_gamma in u_alpha u_beta, without and with the twist
  const auto coeff = [&](bool twisted) {
    const HallElement prod = h.mul(h.u(ak), h.u(bk), twisted);
    const auto it = prod.terms.find(gk);
    return to_json(it == prod.terms.end() ? h.field()->zero() : it->second);
  };
  nlohmann::json j{{"gamma", g}, {"alpha", a}, {"beta", b}, {"p", c.p}, {"hall_number", n},
                   {"a_gamma", h.aut(gk)}, {"a_alpha", h.aut(ak)}, {"a_beta", h.aut(bk)},
                   {"euler_form", euler_form(h.quiver(), ak.dim, bk.dim)},
                   {"untwisted", coeff(false)}, {"twisted", coeff(true)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Common& c, const std::string& omega, int max_deg, const std::vector<std::string>& rels,
               const std::vector<std::string>& suites, const std::string& report) {
  RunConfig cfg;
  cfg.quiver = c.quiver;
  cfg.p = c.p;
  if (!omega.empty()) cfg.omega = parse_dim(omega);
  cfg.max_deg = max_deg;
  for (const auto& r : rels) {
    if (r == "all") {
      cfg.relations.clear();
      break;
    }
    try {
      cfg.relations.push_back(std::stoi(r));
    } catch (const std::logic_error&) {
      throw ConfigError("bad relation id '" + r + "'");
    }
  }
  if (!rels.empty() && suites.empty()) cfg.suites = {"relations"};
  for (const auto& s : suites) cfg.suites.push_back(s);
  cfg.cache_dir = cache_dir_of(c);
  if (!report.empty()) cfg.report_path = report;
  const Report rep = run(cfg);
  std::cout << rep.summary();
  if (!report.empty()) std::cout << "report written to " << report << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_module(const Common& c, const std::string& omega_text, int depth) {
  check_prime(c.p);
  set_cache_directory(cache_dir_of(c));
  const Quiver base = load_quiver(c.quiver);
  DimVector omega = omega_text.empty() ? DimVector(static_cast<size_t>(base.vertex_count()), 1) : parse_dim(omega_text);
  if (static_cast<int>(omega.size()) != base.vertex_count()) throw ConfigError("omega needs one entry per vertex");
  FramedContext ctx(Quiver::enlarge(base), c.p, omega);
  const auto ws = ctx.highest_weight_module(depth);
  nlohmann::json j;
  j["quiver"] = c.quiver;
  j["p"] = c.p;
  j["omega"] = omega;
  j["depth"] = depth;
  j["weights"] = nlohmann::json::array();
  nlohmann::json dims = nlohmann::json::array();
  for (const auto& w : ws) {
    j["weights"].push_back({{"beta", w.beta}, {"dim", w.dim}, {"ambient_dim", w.ambient_dim}});
    dims.push_back(w.dim);
  }
  // one dimension per |beta| when there is a single vertex
  if (base.vertex_count() == 1) j["dims"] = dims;
  const FramedStats st = ctx.stats();
  j["stability_checks"] = st.stability_checks;
  j["stability_failures"] = st.stability_failures;
  std::cout << j.dump() << "\n";
  for (const auto& w : ws) std::cout << "beta " << dim_to_string(w.beta) << ": " << w.dim << " (ambient " << w.ambient_dim << ")\n";
  return st.stability_failures == 0 ? 0 : 1;
}

int cmd_cache(const Common& c, const std::string& action, bool all) {
  const auto dir = cache_dir_of(c);
  if (!dir) throw ConfigError(std::string("no cache directory: pass --cache-dir or set ") + kCacheEnv);
  if (action == "inspect") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : cache_inspect(*dir)) {
      j.push_back({{"path", e.path.string()}, {"bytes", e.bytes}, {"valid", e.valid}, {"quiver_hash", e.quiver_hash},
                   {"p", e.p}, {"nu", e.nu}});
    }
    std::cout << j.dump(2) << "\n";
    std::cerr << j.size() << " entries\n";
    return 0;
  }
  const GcResult g = cache_gc(*dir, all);
  std::cout << nlohmann::json{{"removed", g.removed}, {"kept", g.kept}, {"bytes_freed", g.bytes_freed}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hallforge: exact Hall algebra and framed module checks over small prime fields"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion) + " (" + kernels::isa_name(kernels::active_isa()) + ")");

  Common common;
  std::string dim, gamma, alpha, beta, omega, report, action;
  int max_deg = 3, depth = 2;
  bool all = false;
  std::vector<std::string> relations, suites;

  auto* classes = app.add_subcommand("classes", "list isomorphism classes of E_dim");
  add_common(classes, common);
  classes->add_option("--dim", dim, "dimension vector, e.g. 2,2")->required();

  auto* hallnum = app.add_subcommand("hallnum", "Hall number g^gamma_{alpha beta}");
  add_common(hallnum, common);
  hallnum->add_option("--gamma", gamma, "class as DIM or DIM#LABEL")->required();
  hallnum->add_option("--alpha", alpha, "quotient class")->required();
  hallnum->add_option("--beta", beta, "subrepresentation class")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify, common);
  verify->add_option("--relation", relations, "relation ids 1..6 or 'all'");
  verify->add_option("--suite", suites, "suite name; repeatable");
  verify->add_option("--omega", omega, "framing weight, e.g. 1,1");
  verify->add_option("--max-deg", max_deg, "largest |nu| on base vertices");
  verify->add_option("--report", report, "JSON report path");

  auto* module = app.add_subcommand("module", "weight dimensions of the module generated by 1_omega");
  add_common(module, common);
  module->add_option("--omega", omega, "framing weight");
  module->add_option("--depth", depth, "largest |beta|");

  auto* cache = app.add_subcommand("cache", "inspect or clean the orbit cache");
  add_common(cache, common);
  cache->add_option("action", action, "inspect or gc")->required()->check(CLI::IsMember({"inspect", "gc"}));
  cache->add_flag("--all", all, "gc removes every entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*classes) return cmd_classes(common, dim);
    if (*hallnum) return cmd_hallnum(common, gamma, alpha, beta);
    if (*verify) return cmd_verify(common, omega, max_deg, relations, suites, report);
    if (*module) return cmd_module(common, omega, depth);
    if (*cache) return cmd_cache(common, action, all);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ScaleError& e) {
    std::cerr << nlohmann::json{{"error", "scale"}, {"message", e.what()}, {"predicted", e.predicted()}}.dump() << "\n";
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
