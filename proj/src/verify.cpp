// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "hallforge/error.hpp"
#include "hallforge/framed.hpp"
#include "hallforge/hall.hpp"
#include "hallforge/relations.hpp"

namespace hallforge {

namespace {

constexpr int kMaxDegree = 6;

struct Outcome {
  bool pass = true;
  std::string witness;
  bool skipped = false;
  nlohmann::json detail;  // merged into the record params when set
};

Outcome fail(std::string w) { return {false, std::move(w), false, nullptr}; }

class Runner {
 public:
  explicit Runner(Report& r) : report_(r) {}

  void check(const std::string& name, nlohmann::json params, const std::function<Outcome()>& body) {
    CheckRecord rec;
    rec.name = name;
    rec.params = std::move(params);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const Outcome o = body();
      rec.pass = o.pass;
      rec.witness = o.witness;
      rec.skipped = o.skipped;
      if (!o.detail.is_null()) rec.params["instances"] = o.detail;
    } catch (const ScaleError& e) {
      rec.pass = false;
      rec.witness = std::string("scale: ") + e.what();
    } catch (const ConsistencyError& e) {
      rec.pass = false;
      rec.witness = std::string("consistency: ") + e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report_.checks.push_back(std::move(rec));
  }

 private:
  Report& report_;
};

std::string show(const Scalar& s) { return s.to_string(); }

std::string class_name(const ClassKey& k) { return dim_to_string(k.dim) + "#" + std::to_string(k.label); }

std::vector<ClassKey> classes_up_to(const HallContext& h, int n, bool with_zero) {
  std::vector<ClassKey> out;
  for (const auto& d : h.dims_up_to(n)) {
    if (!with_zero && total_dim(d) == 0) continue;
    for (const auto& k : h.classes_of_dim(d)) out.push_back(k);
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int m = 0; m < (1 << n); ++m) {
    std::vector<int> s;
    for (int k = 0; k < n; ++k) {
      if ((m >> k) & 1) s.push_back(k);
    }
    out.push_back(s);
  }
  return out;
}

// Every dimension vector on q with total at most n.
std::vector<DimVector> all_dims(int vertices, int n) {
  std::vector<DimVector> out;
  DimVector d(static_cast<size_t>(vertices), 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == vertices) {
      out.push_back(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      d[static_cast<size_t>(v)] = k;
      rec(v + 1, left - k);
    }
    d[static_cast<size_t>(v)] = 0;
  };
  rec(0, n);
  return out;
}

OrbitFunction sample_function(const OrbitTablePtr& t, const Field& f, std::mt19937& rng) {
  OrbitFunction g = OrbitFunction::zero(t, f);
  std::uniform_int_distribution<int> d(-3, 3);
  for (auto& v : g.values) v = f->integer(d(rng)) + f->zeta(d(rng) + 3) * mpq_class(d(rng));
  return g;
}

struct Setup {
  RunConfig cfg;
  Quiver base;
  Quiver qhat;
  Field field;
  std::unique_ptr<HallContext> hall;
  mutable std::unique_ptr<FramedContext> framed;

  const FramedContext& module() const {
    if (!framed) framed = std::make_unique<FramedContext>(qhat, cfg.p, cfg.omega);
    return *framed;
  }
};

void suite_classes(Runner& r, const Setup& s) {
  for (const auto& d : s.hall->dims_up_to(s.cfg.max_deg)) {
    r.check("classes", {{"dim", d}}, [&] {
      const auto t = orbits(s.base, s.cfg.p, d);
      std::uint64_t total = 0;
      for (const auto& c : t->classes()) {
        if (c.aut_order * c.orbit_size != t->group_order()) return fail("orbit-stabilizer fails at class " + std::to_string(c.label));
        total += c.orbit_size;
      }
      if (total != t->point_count()) return fail("orbit sizes sum to " + std::to_string(total));
      return Outcome{};
    });
  }
}

void suite_hallnum(Runner& r, const Setup& s) {
  const HallContext& h = *s.hall;
  const int n = std::min(s.cfg.max_deg, 3);
  // census totals against direct subspace counts
  for (const auto& g : classes_up_to(h, n, false)) {
    r.check("hallnum.census", {{"gamma", class_name(g)}}, [&]() -> Outcome {
      const auto t = h.classes(g.dim);
      const Representation x = t->rep(g.label);
      for (const auto& b : all_dims(static_cast<int>(g.dim.size()), total_dim(g.dim))) {
        bool fits = true;
        for (size_t k = 0; k < b.size(); ++k) fits = fits && b[k] <= g.dim[k];
        if (!fits) continue;
        std::uint64_t stable = 0;
        for (const auto& w : enumerate_graded_subspaces(g.dim, b, s.cfg.p)) stable += is_stable(s.base, x, w) ? 1 : 0;
        std::uint64_t counted = 0;
        for (const auto& [key, c] : class_census(t, g.label, b)) counted += c;
        if (stable != counted) return fail("beta " + dim_to_string(b) + ": " + std::to_string(counted) + " vs " + std::to_string(stable));
      }
      return {};
    });
  }
  const auto cls = classes_up_to(h, n, true);
  r.check("hall.associativity", {{"max_total", n}}, [&]() -> Outcome {
    for (const auto& a : cls) {
      for (const auto& b : cls) {
        if (total_dim(a.dim + b.dim) > n) continue;
        const auto ab = h.mul(h.u(a), h.u(b));
        for (const auto& c : cls) {
          if (total_dim(a.dim + b.dim + c.dim) > n) continue;
          if (h.mul(ab, h.u(c)) != h.mul(h.u(a), h.mul(h.u(b), h.u(c)))) {
            return fail(class_name(a) + " " + class_name(b) + " " + class_name(c));
          }
        }
      }
    }
    return {};
  });
  r.check("hall.function-morphism", {{"max_total", n}}, [&]() -> Outcome {
    for (const auto& a : cls) {
      for (const auto& b : cls) {
        if (total_dim(a.dim + b.dim) > n) continue;
        const auto lhs = hall_to_function(h, h.mul(h.u(a), h.u(b)));
        const auto rhs = fn_mul(hall_to_function(h, h.u(a)), hall_to_function(h, h.u(b)));
        if (!(lhs == rhs)) return fail(class_name(a) + " " + class_name(b));
      }
    }
    return {};
  });
}

void suite_fourier(Runner& r, const Setup& s) {
  const int cap = std::min(4, s.cfg.max_deg + 1);
  const Quiver& q = s.qhat;
  const auto flips = subsets(q.arrow_count());
  std::mt19937 rng(11);
  for (const auto& nu : all_dims(q.vertex_count(), cap)) {
    if (total_dim(nu) == 0) continue;
    r.check("fourier.composition", {{"nu", nu}}, [&]() -> Outcome {
      const auto g = sample_function(orbits(q, s.cfg.p, nu), s.field, rng);
      for (const auto& s1 : flips) {
        const auto g1 = fourier(g, s1);
        if (!(fourier(g1, s1) == g)) return fail("inverse fails for flip " + nlohmann::json(s1).dump());
        if (total_dim(nu) > 3) continue;
        const Quiver q1 = reorient(q, s1);
        for (const auto& s2 : flips) {
          const auto direct = fourier_between(q, reorient(q1, s2), s.cfg.p, nu, s.field).apply(g.values);
          if (fourier(g1, s2).values != direct) {
            return fail("flips " + nlohmann::json(s1).dump() + " then " + nlohmann::json(s2).dump());
          }
        }
      }
      return {};
    });
  }
  const int nb = s.base.vertex_count();
  r.check("fourier.multiplicativity", {{"max_total", cap}}, [&]() -> Outcome {
    for (const auto& a : all_dims(nb, cap)) {
      if (total_dim(a) == 0) continue;
      for (const auto& b : all_dims(q.vertex_count(), cap - total_dim(a))) {
        if (total_dim(b) == 0) continue;
        const auto ta = orbits(s.base, s.cfg.p, a);
        const auto tb = orbits(q, s.cfg.p, b);
        for (int la = 0; la < ta->size(); ++la) {
          for (int lb = 0; lb < tb->size(); ++lb) {
            const auto fa = OrbitFunction::indicator(ta, la, s.field);
            const auto fb = OrbitFunction::indicator(tb, lb, s.field);
            const auto prod = fn_mul(fa, fb);
            for (const auto& flip : flips) {
              std::vector<int> base_flip;
              for (int h : flip) {
                if (h < s.base.arrow_count()) base_flip.push_back(h);
              }
              if (!(fourier(prod, flip) == fn_mul(fourier(fa, base_flip), fourier(fb, flip)))) {
                return fail(dim_to_string(a) + "#" + std::to_string(la) + " * " + dim_to_string(b) + "#" +
                            std::to_string(lb) + " flip " + nlohmann::json(flip).dump());
              }
            }
          }
        }
      }
    }
    return {};
  });
}

void suite_hopf(Runner& r, const Setup& s) {
  const HallContext& h = *s.hall;
  const int n = std::min(s.cfg.max_deg, 3);
  const DimVector ones(static_cast<size_t>(s.base.vertex_count()), 1);
  const DimVector zero(static_cast<size_t>(s.base.vertex_count()), 0);
  for (Flavor fl : {Flavor::plus, Flavor::minus}) {
    const std::string tag = fl == Flavor::plus ? "plus" : "minus";
    r.check("hopf.coassociativity-counit", {{"flavor", tag}, {"max_total", n}}, [&]() -> Outcome {
      for (const auto& c : classes_up_to(h, n, true)) {
        const auto x = h.ext(fl, ones, c);
        const auto d = h.comultiply(x);
        if (h.comultiply_slot(d, 0) != h.comultiply_slot(d, 1)) return fail("coassociativity at " + class_name(c));
        const auto t = h.as_tensor(x);
        if (h.counit_slot(d, 0) != t || h.counit_slot(d, 1) != t) return fail("counit at " + class_name(c));
      }
      return {};
    });
    r.check("hopf.green", {{"flavor", tag}, {"max_total", std::min(n, 3)}}, [&]() -> Outcome {
      const auto cls = classes_up_to(h, 2, true);
      for (const auto& a : cls) {
        for (const auto& b : cls) {
          if (total_dim(a.dim + b.dim) > std::min(n, 3)) continue;
          const auto x = h.ext(fl, a.dim, a);
          const auto y = h.ext(fl, zero, b);
          if (h.comultiply(h.ext_mul(x, y)) != h.tensor_mul(h.comultiply(x), h.comultiply(y))) {
            return fail(class_name(a) + " " + class_name(b));
          }
        }
      }
      return {};
    });
  }
  r.check("hopf.pairing", {{"max_total", 2}}, [&]() -> Outcome {
    const auto cls = classes_up_to(h, 2, true);
    for (const auto& a : cls) {
      for (const auto& b : cls) {
        for (const auto& g : cls) {
          if (g.dim != a.dim + b.dim) continue;
          const auto x = h.ext(Flavor::plus, zero, a);
          const auto y = h.ext(Flavor::plus, zero, b);
          const auto c = h.ext(Flavor::minus, zero, g);
          Tensor ab;
          ab.flavor = Flavor::plus;
          ab.add({x.terms.begin()->first, y.terms.begin()->first}, s.field->one());
          const Scalar lhs = h.pairing(h.ext_mul(x, y), c);
          const Scalar rhs = h.pairing(ab, h.comultiply(c));
          if (lhs != rhs) return fail(class_name(a) + " " + class_name(b) + " " + class_name(g) + ": " + show(lhs) + " vs " + show(rhs));
        }
      }
    }
    return {};
  });
}

void suite_relations(Runner& r, const Setup& s) {
  std::vector<int> ids = s.cfg.relations;
  ids.push_back(kSimpleCommutator);
  for (int id : ids) {
    const std::string name = "relation." + std::to_string(id) + "." + relation_name(id);
    r.check(name, {{"id", id}, {"max_deg", s.cfg.max_deg}}, [&]() -> Outcome {
      const RelationReport rep = check_relation(s.module(), id, s.cfg.max_deg);
      Outcome o;
      nlohmann::json inst = nlohmann::json::array();
      for (const auto& i : rep.instances) {
        if (!i.pass && o.pass) o = fail(i.params.dump() + ": " + i.witness);
        nlohmann::json row = i.params;
        row["shape"] = {i.rows, i.cols};
        row["pass"] = i.pass;
        inst.push_back(std::move(row));
      }
      if (rep.instances.empty()) {
        o.skipped = true;
        o.witness = "no weight space in range";
      }
      o.detail = std::move(inst);
      return o;
    });
  }
}

void suite_module(Runner& r, const Setup& s) {
  const FramedContext& ctx = s.module();
  const int n = s.base.vertex_count();
  r.check("module.dims", {{"omega", s.cfg.omega}, {"depth", s.cfg.max_deg}}, [&]() -> Outcome {
    const auto ws = ctx.highest_weight_module(s.cfg.max_deg);
    for (const auto& w : ws) {
      if (total_dim(w.beta) == 0 && w.dim != 1) return fail("generator space has dim " + std::to_string(w.dim));
      if (w.dim > w.ambient_dim) return fail("span exceeds ambient at " + dim_to_string(w.beta));
      // sl2: at most one dimension per weight, none past omega
      if (n == 1 && s.base.arrow_count() == 0) {
        const size_t bound = w.beta[0] <= s.cfg.omega[0] ? 1 : 0;
        if (w.dim > bound) return fail("exceeds L(omega) at " + dim_to_string(w.beta));
      }
    }
    return {};
  });
  const ModuleVector gen = ctx.generator();
  for (int i = 0; i < n; ++i) {
    r.check("module.highest-weight", {{"vertex", i}}, [&]() -> Outcome {
      if (!ctx.act({Generator::E_plus(i)}, gen).is_zero()) return fail("E+ does not kill the generator");
      const ModuleVector k = ctx.act({Generator::K(i)}, gen);
      if (k.coords[0] != s.field->v_pow(s.cfg.omega[static_cast<size_t>(i)]) * gen.coords[0]) {
        return fail("K acts by " + show(k.coords[0]));
      }
      const int w = s.cfg.omega[static_cast<size_t>(i)];
      if (w + 1 <= s.cfg.max_deg) {
        std::vector<Generator> word(static_cast<size_t>(w + 1), Generator::E_minus(s.hall->simple(i)));
        if (!ctx.act(word, gen).is_zero()) return fail("(E-)^(omega+1) does not vanish");
      }
      return {};
    });
  }
}

void suite_fiber(Runner& r, const Setup& s) {
  const HallContext& h = *s.hall;
  int applicable = 0;
  for (int i = 0; i < s.base.vertex_count(); ++i) {
    if (!is_source(s.base, i) || !is_source(s.qhat, i)) continue;
    for (const auto& nub : all_dims(s.base.vertex_count(), 1)) {
      const DimVector nu = framed_dim(s.qhat, nub, s.cfg.omega);
      for (const auto& a : classes_up_to(h, std::min(3, s.cfg.max_deg), false)) {
        if (a.dim[static_cast<size_t>(i)] < 1 || !fiber_formula_applies(s.base, s.cfg.p, a, i)) continue;
        for (const auto& b : h.classes_of_dim(a.dim - unit(s.base, i))) {
          ++applicable;
          r.check("fiber", {{"nu", nu}, {"i", i}, {"alpha", class_name(a)}, {"beta", class_name(b)}}, [&]() -> Outcome {
            const FiberCount fc = fiber_count(s.qhat, s.cfg.p, nu, i, a, b);
            if (fc.fibers == 0) return {true, "no base point", true, nullptr};
            if (!fc.integral) return fail("prediction " + show(fc.predicted) + " is not a nonnegative integer");
            if (!fc.all_equal) return fail("fibers differ");
            if (s.field->integer(static_cast<long>(fc.counted)) != fc.predicted) {
              return fail("counted " + std::to_string(fc.counted) + ", predicted " + show(fc.predicted));
            }
            return {};
          });
        }
      }
    }
  }
  if (applicable == 0) {
    r.check("fiber", {{"quiver", s.cfg.quiver}}, [] {
      return Outcome{true, "every class in range has S_i as a direct summand", true, nullptr};
    });
  }
}

void suite_well_defined(Runner& r, const Setup& s) {
  const FramedContext& ctx = s.module();
  const int n = s.base.vertex_count();
  for (const auto& nu : s.hall->dims_up_to(std::max(0, s.cfg.max_deg - 1))) {
    r.check("well-defined", {{"nu", nu}}, [&]() -> Outcome {
      for (int i = 0; i < n; ++i) {
        if (!ctx.eplus_well_defined(i, 1, nu)) return fail("E+ at vertex " + std::to_string(i));
      }
      for (const auto& a : classes_up_to(*s.hall, s.cfg.max_deg - total_dim(nu), false)) {
        if (!ctx.eminus_well_defined(a, nu)) return fail("E- of " + class_name(a));
      }
      return {};
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"classes", "hallnum", "fourier", "hopf", "relations", "module", "fiber", "well-defined"};
  return names;
}

RunConfig validate(RunConfig c) {
  if (!is_prime(c.p)) throw ConfigError("q must be a prime, got " + std::to_string(c.p));
  const Quiver base = load_quiver(c.quiver);
  if (base.is_enlarged()) throw ConfigError("give the plain quiver; framing is added automatically");
  if (base.has_loops()) throw ConfigError("quivers with loops are not supported");
  const size_t n = static_cast<size_t>(base.vertex_count());
  if (c.omega.empty()) c.omega.assign(n, 1);
  if (c.omega.size() != n) throw ConfigError("omega needs one entry per vertex");
  if (!is_nonnegative(c.omega)) throw ConfigError("omega must be nonnegative");
  if (c.max_deg < 0 || c.max_deg > kMaxDegree) throw ConfigError("max-deg must lie in [0, " + std::to_string(kMaxDegree) + "]");
  if (c.relations.empty()) c.relations = {1, 2, 3, 4, 5, 6};
  for (int id : c.relations) {
    if (id < 1 || id > 6) throw ConfigError("relation ids run from 1 to 6");
  }
  std::sort(c.relations.begin(), c.relations.end());
  c.relations.erase(std::unique(c.relations.begin(), c.relations.end()), c.relations.end());
  if (c.suites.empty()) c.suites = suite_names();
  for (const auto& s : c.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw ConfigError("unknown suite '" + s + "'");
    }
  }
  return c;
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["quiver"] = c.quiver;
  j["p"] = c.p;
  j["omega"] = c.omega;
  j["max_deg"] = c.max_deg;
  j["relations"] = c.relations;
  j["suites"] = c.suites;
  j["cache_dir"] = c.cache_dir ? nlohmann::json(c.cache_dir->string()) : nlohmann::json(nullptr);
  return j;
}

bool Report::pass() const { return failures() == 0; }

size_t Report::failures() const {
  return static_cast<size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["engine_version"] = kEngineVersion;
  j["config"] = config;
  j["pass"] = pass();
  j["failures"] = failures();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json r{{"name", c.name}, {"params", c.params}, {"pass", c.pass}, {"skipped", c.skipped}, {"witness", c.witness}};
    if (with_timing) r["wall_ms"] = c.wall_ms;
    j["checks"].push_back(std::move(r));
  }
  if (with_timing) {
    j["cache"] = {{"memory_hits", cache.memory_hits}, {"disk_hits", cache.disk_hits}, {"computed", cache.computed}, {"corrupt", cache.corrupt}};
  }
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    // instance lists go to the JSON report only
    nlohmann::json shown = c.params;
    if (shown.contains("instances")) {
      const size_t n = shown["instances"].size();
      shown.erase("instances");
      shown["instance_count"] = n;
    }
    os << (c.pass ? (c.skipped ? "SKIP " : "PASS ") : "FAIL ") << c.name << " " << shown.dump();
    if (!c.witness.empty()) os << "  -- " << c.witness;
    os << "\n";
  }
  os << checks.size() << " checks, " << failures() << " failed; cache: " << cache.memory_hits << " memory hits, "
     << cache.disk_hits << " disk hits, " << cache.computed << " computed\n";
  return os.str();
}

Report run(const RunConfig& config) {
  const RunConfig cfg = validate(config);
  const auto old_dir = cache_directory();
  set_cache_directory(cfg.cache_dir);
  const CacheStats before = cache_stats();

  Setup s;
  s.cfg = cfg;
  s.base = load_quiver(cfg.quiver);
  s.qhat = Quiver::enlarge(s.base);
  s.field = make_field(cfg.p);
  s.hall = std::make_unique<HallContext>(s.base, cfg.p);

  Report rep;
  rep.config = config_to_json(cfg);
  Runner r(rep);
  const std::map<std::string, std::function<void(Runner&, const Setup&)>> suites{
      {"classes", suite_classes}, {"hallnum", suite_hallnum}, {"fourier", suite_fourier},
      {"hopf", suite_hopf},       {"relations", suite_relations}, {"module", suite_module},
      {"fiber", suite_fiber},     {"well-defined", suite_well_defined}};
  for (const auto& name : suite_names()) {
    if (std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end()) continue;
    suites.at(name)(r, s);
  }
  if (s.framed) {
    const FramedStats st = s.framed->stats();
    r.check("n-stability", {{"checks", st.stability_checks}, {"eminus_cross_checks", st.eminus_cross_checks}},
            [&]() -> Outcome {
              if (st.stability_failures != 0) return fail(std::to_string(st.stability_failures) + " operators left N");
              return {};
            });
  }

  const CacheStats after = cache_stats();
  rep.cache.memory_hits = after.memory_hits - before.memory_hits;
  rep.cache.disk_hits = after.disk_hits - before.disk_hits;
  rep.cache.computed = after.computed - before.computed;
  rep.cache.corrupt = after.corrupt - before.corrupt;
  set_cache_directory(old_dir);

  if (cfg.report_path) {
    std::ofstream out(*cfg.report_path, std::ios::trunc);
    if (!out) throw ConfigError("cannot write report to " + cfg.report_path->string());
    out << rep.to_json().dump(2) << "\n";
  }
  return rep;
}

std::vector<CacheEntry> cache_inspect(const std::filesystem::path& dir) {
  std::vector<CacheEntry> out;
  if (!std::filesystem::is_directory(dir)) throw ConfigError("cache directory " + dir.string() + " does not exist");
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    CacheEntry c;
    c.path = e.path();
    c.bytes = e.file_size();
    if (e.path().extension() == ".json") {
      std::ifstream in(e.path());
      const nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
      if (cache_checksum_ok(j)) {
        try {
          c.quiver_hash = j.at("quiver_hash").get<std::string>();
          c.p = j.at("p").get<int>();
          c.nu = j.at("nu").get<DimVector>();
          c.valid = true;
        } catch (const nlohmann::json::exception&) {
          c.valid = false;
        }
      }
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CacheEntry& a, const CacheEntry& b) { return a.path < b.path; });
  return out;
}

GcResult cache_gc(const std::filesystem::path& dir, bool all) {
  GcResult g;
  for (const auto& e : cache_inspect(dir)) {
    if (all || !e.valid) {
      std::error_code ec;
      if (std::filesystem::remove(e.path, ec)) {
        ++g.removed;
        g.bytes_freed += e.bytes;
        continue;
      }
    }
    ++g.kept;
  }
  return g;
}

}  // namespace hallforge
