// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/relations.hpp"

#include <algorithm>

#include "hallforge/error.hpp"

namespace hallforge {

namespace {

nlohmann::json dim_json(const DimVector& d) { return nlohmann::json(d); }

RelationInstance compare(const ScalarMatrix& lhs, const ScalarMatrix& rhs, nlohmann::json params) {
  RelationInstance r;
  r.params = std::move(params);
  r.rows = lhs.rows();
  r.cols = lhs.cols();
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.pass = false;
    r.witness = "shape mismatch";
    return r;
  }
  if (const auto c = first_differing_column(lhs, rhs)) {
    r.pass = false;
    r.witness = "basis vector " + std::to_string(*c) + " maps differently";
  }
  return r;
}

size_t dim_at(const FramedContext& ctx, const DimVector& nu) { return ctx.quotient(nu).dim(); }

ScalarMatrix zero_map(const FramedContext& ctx, const DimVector& from, const DimVector& to) {
  return ScalarMatrix(ctx.field(), dim_at(ctx, to), dim_at(ctx, from));
}

std::vector<ClassKey> nonzero_classes(const FramedContext& ctx, int n) {
  std::vector<ClassKey> out;
  for (const auto& d : ctx.hall().dims_up_to(n)) {
    if (total_dim(d) == 0) continue;
    for (const auto& k : ctx.hall().classes_of_dim(d)) out.push_back(k);
  }
  return out;
}

DimVector shifted(DimVector nu, int i, int k) {
  nu[static_cast<size_t>(i)] += k;
  return nu;
}

}  // namespace

bool RelationReport::pass() const { return failures() == 0; }

size_t RelationReport::failures() const {
  return static_cast<size_t>(std::count_if(instances.begin(), instances.end(), [](const auto& r) { return !r.pass; }));
}

std::string relation_name(int id) {
  switch (id) {
    case 1: return "torus";
    case 2: return "K-Eplus";
    case 3: return "K-Eminus";
    case 4: return "serre";
    case 5: return "Eminus-product";
    case 6: return "Eminus-Eplus-commutator";
    case kSimpleCommutator: return "simple-commutator";
    default: throw ConfigError("unknown relation " + std::to_string(id));
  }
}

std::vector<DimVector> base_dims_up_to(const FramedContext& ctx, int n) { return ctx.hall().dims_up_to(n); }

ScalarMatrix eplus_power(const FramedContext& ctx, int i, int k, const DimVector& nu) {
  ScalarMatrix m = ScalarMatrix::identity(ctx.field(), dim_at(ctx, nu));
  for (int t = 0; t < k; ++t) m = m * ctx.eplus(i, 1, shifted(nu, i, t));
  return m;
}

RelationReport check_relation(const FramedContext& ctx, int id, int max_deg) {
  RelationReport rep;
  rep.id = id;
  rep.name = relation_name(id);
  const Quiver& q = ctx.hall().quiver();
  const Field& f = ctx.field();
  const int n = q.vertex_count();
  const auto dims = base_dims_up_to(ctx, max_deg);

  switch (id) {
    case 1:
      for (const auto& nu : dims) {
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            rep.instances.push_back(compare(ctx.K(i, nu) * ctx.K(j, nu), ctx.K(j, nu) * ctx.K(i, nu),
                                            {{"nu", dim_json(nu)}, {"i", i}, {"j", j}}));
          }
        }
      }
      break;
    case 2:
      for (const auto& nu : dims) {
        for (int i = 0; i < n; ++i) {
          const DimVector src = shifted(nu, i, 1);
          if (total_dim(src) > max_deg) continue;
          for (int j = 0; j < n; ++j) {
            const ScalarMatrix& e = ctx.eplus(i, 1, nu);
            const ScalarMatrix lhs = ctx.K(j, nu) * e;
            const ScalarMatrix rhs = (e * ctx.K(j, src)).scaled(f->v_pow(symmetric_form(q, unit(q, j), unit(q, i))));
            rep.instances.push_back(compare(lhs, rhs, {{"nu", dim_json(nu)}, {"i", i}, {"j", j}}));
          }
        }
      }
      break;
    case 3:
      for (const auto& nu : dims) {
        for (const auto& a : nonzero_classes(ctx, max_deg)) {
          const DimVector tgt = nu + a.dim;
          if (total_dim(tgt) > max_deg) continue;
          for (int j = 0; j < n; ++j) {
            const ScalarMatrix& e = ctx.eminus(a, nu);
            const ScalarMatrix lhs = ctx.K(j, tgt) * e;
            const ScalarMatrix rhs = (e * ctx.K(j, nu)).scaled(f->v_pow(-symmetric_form(q, a.dim, unit(q, j))));
            rep.instances.push_back(compare(
                lhs, rhs, {{"nu", dim_json(nu)}, {"alpha", dim_json(a.dim)}, {"class", a.label}, {"j", j}}));
          }
        }
      }
      break;
    case 4:
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const int top = 1 - symmetric_form(q, unit(q, i), unit(q, j));
          for (const auto& nu : dims) {
            const DimVector src = shifted(shifted(nu, i, top), j, 1);
            if (total_dim(src) > max_deg) continue;
            ScalarMatrix sum = zero_map(ctx, src, nu);
            for (int m = 0; m <= top; ++m) {
              const DimVector mid = shifted(nu, i, m);
              const ScalarMatrix term = eplus_power(ctx, i, m, nu) * ctx.eplus(j, 1, mid) *
                                        eplus_power(ctx, i, top - m, shifted(mid, j, 1));
              Scalar c = (quantum_factorial(f, m) * quantum_factorial(f, top - m)).inv();
              if (m % 2 == 1) c = -c;
              sum += term.scaled(c);
            }
            rep.instances.push_back(compare(sum, zero_map(ctx, src, nu), {{"nu", dim_json(nu)}, {"i", i}, {"j", j}}));
          }
        }
      }
      break;
    case 5: {
      const auto cls = nonzero_classes(ctx, max_deg);
      for (const auto& nu : dims) {
        for (const auto& a : cls) {
          for (const auto& b : cls) {
            const DimVector tgt = nu + a.dim + b.dim;
            if (total_dim(tgt) > max_deg) continue;
            const ScalarMatrix lhs = ctx.eminus(a, nu + b.dim) * ctx.eminus(b, nu);
            ScalarMatrix rhs = zero_map(ctx, nu, tgt);
            const HallElement prod = ctx.hall().mul(ctx.hall().u(a), ctx.hall().u(b), true);
            for (const auto& [lam, c] : prod.terms) rhs += ctx.eminus(lam, nu).scaled(c);
            rep.instances.push_back(compare(lhs, rhs,
                                            {{"nu", dim_json(nu)},
                                             {"alpha", dim_json(a.dim)},
                                             {"alpha_class", a.label},
                                             {"beta", dim_json(b.dim)},
                                             {"beta_class", b.label}}));
          }
        }
      }
      break;
    }
    case 6:
    case kSimpleCommutator: {
      std::vector<ClassKey> cls;
      if (id == 6) {
        cls = nonzero_classes(ctx, max_deg);
      } else {
        for (int i = 0; i < n; ++i) cls.push_back(ctx.hall().simple(i));
      }
      for (const auto& nu : dims) {
        for (const auto& a : cls) {
          if (total_dim(nu + a.dim) > max_deg) continue;
          for (int i = 0; i < n; ++i) {
            if (id == kSimpleCommutator && a != ctx.hall().simple(i)) continue;
            const DimVector down = shifted(nu, i, -1);
            const DimVector tgt = down + a.dim;
            const ScalarMatrix lhs =
                ctx.eminus(a, down) * ctx.eplus(i, 1, down) - ctx.eplus(i, 1, tgt) * ctx.eminus(a, nu);
            ScalarMatrix rhs = zero_map(ctx, nu, tgt);
            if (id == kSimpleCommutator) {
              const Scalar v2 = f->v_pow(2);
              rhs = (ctx.K(i, nu) - ctx.K(i, nu, -1)).scaled(v2 / (v2 - f->one()));
            } else {
              const DimVector bd = a.dim - unit(q, i);
              if (is_nonnegative(bd)) {
                const ClassKey si = ctx.hall().simple(i);
                mpq_class lead(static_cast<long>(ctx.prime()), static_cast<unsigned long>(ctx.hall().aut(a)));
                lead.canonicalize();
                for (const auto& b : ctx.hall().classes_of_dim(bd)) {
                  const std::uint64_t g1 = ctx.hall().hall(a, si, b);
                  const std::uint64_t g2 = ctx.hall().hall(a, b, si);
                  if (g1 == 0 && g2 == 0) continue;
                  const int e = euler_form(q, bd, unit(q, i));
                  const ScalarMatrix kk = ctx.K(i, nu).scaled(f->v_pow(-e) * mpq_class(static_cast<unsigned long>(g1))) -
                                          ctx.K(i, nu, -1).scaled(f->v_pow(e) * mpq_class(static_cast<unsigned long>(g2)));
                  const mpq_class w = lead * mpq_class(static_cast<unsigned long>(ctx.hall().aut(b)));
                  rhs += (ctx.eminus(b, nu) * kk).scaled(f->rational(w));
                }
              }
            }
            rep.instances.push_back(compare(
                lhs, rhs, {{"nu", dim_json(nu)}, {"alpha", dim_json(a.dim)}, {"class", a.label}, {"i", i}}));
          }
        }
      }
      break;
    }
    default:
      throw ConfigError("unknown relation " + std::to_string(id));
  }
  return rep;
}

}  // namespace hallforge
