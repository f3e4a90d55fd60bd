// Copyright (C) 2026 The hallforge Authors
// SPDX-License-Identifier: Apache-2.0

#include "hallforge/scalar.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "hallforge/error.hpp"

namespace hallforge {

namespace {

using IntPoly = std::vector<long>;
using RatPoly = std::vector<mpq_class>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(RatPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw ConsistencyError("cyclotomic division underflow");
  IntPoly quo(num.size() - dd, 0);
  for (size_t k = num.size(); k-- > dd;) {
    const long c = num[k];
    quo[k - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw ConsistencyError("cyclotomic division left a remainder");
  return quo;
}

IntPoly cyclotomic(int n) {
  IntPoly poly(static_cast<size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_exact(poly, cyclotomic(d));
  }
  return poly;
}

// Quotient and remainder of polynomials over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const mpq_class lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const size_t shift = a.size() - b.size();
    const mpq_class c = a.back() / lead;
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

}  // namespace

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Field field, std::vector<mpq_class> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw ConsistencyError("scalar without field");
  if (static_cast<int>(coeffs_.size()) != field_->degree()) throw ConsistencyError("scalar has wrong basis length");
}

void Scalar::check_same(const Scalar& o) const {
  if (!field_ || !o.field_) throw ConsistencyError("arithmetic on an unset scalar");
  if (field_ != o.field_ && field_->conductor() != o.field_->conductor()) {
    throw ConsistencyError("mixed conductors in scalar arithmetic");
  }
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Scalar::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Scalar& Scalar::operator*=(const mpq_class& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (b.is_rational()) return a * b.coeffs_[0];
  if (a.is_rational()) return b * a.coeffs_[0];
  const size_t d = a.coeffs_.size();
  std::vector<mpq_class> wide(2 * d - 1, 0);
  for (size_t i = 0; i < d; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < d; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  std::vector<mpq_class> out(wide.begin(), wide.begin() + static_cast<long>(d));
  const auto& table = a.field_->power_table();
  for (size_t k = d; k < wide.size(); ++k) {
    if (sgn(wide[k]) == 0) continue;
    const auto& row = table[k];
    for (size_t j = 0; j < d; ++j) {
      if (row[j] != 0) out[j] += wide[k] * row[j];
    }
  }
  return Scalar(a.field_, std::move(out));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar Scalar::inv() const {
  if (!field_) throw ConsistencyError("inverse of an unset scalar");
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_rational()) {
    Scalar r = field_->zero();
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: keep r_k = s_k * a (mod modulus).
  RatPoly r0(field_->modulus().begin(), field_->modulus().end());
  RatPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  RatPoly s0;
  RatPoly s1{1};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw ConsistencyError("scalar shares a factor with the cyclotomic modulus");
  const mpq_class c = r1[0];
  std::vector<mpq_class> out(coeffs_.size(), 0);
  for (size_t k = 0; k < s1.size(); ++k) out[k] = s1[k] / c;
  return Scalar(field_, std::move(out));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_;
  if (a.field_->conductor() != b.field_->conductor()) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string Scalar::to_string() const {
  if (!field_) return "<unset>";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// FieldContext

FieldContext::FieldContext(int p) : p_(p), n_(4 * p) {}

void FieldContext::finish() {
  modulus_ = cyclotomic(n_);
  const int d = degree();
  powers_.clear();
  std::vector<long> cur(static_cast<size_t>(d), 0);
  cur[0] = 1;
  for (int k = 0; k < 2 * n_; ++k) {
    powers_.push_back(cur);
    // multiply by zeta
    const long top = cur[static_cast<size_t>(d - 1)];
    for (int j = d - 1; j > 0; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
    cur[0] = 0;
    for (int j = 0; j < d; ++j) cur[static_cast<size_t>(j)] -= top * modulus_[static_cast<size_t>(j)];
  }

  if (p_ == 2) {
    v_ = zeta(1) + zeta(-1);
  } else {
    // Quadratic Gauss sum g = sum (a/p) zeta_p^a, g^2 = (-1/p) p.
    Scalar g = zero();
    for (long a = 1; a < p_; ++a) {
      long residue = 1;
      long base = a;
      long e = (p_ - 1) / 2;
      while (e > 0) {
        if (e & 1) residue = residue * base % p_;
        base = base * base % p_;
        e >>= 1;
      }
      if (residue == 1) g += zeta_p(a);
      else g -= zeta_p(a);
    }
    v_ = (p_ % 4 == 1) ? g : -(zeta(p_) * g);
  }
  if (v_ * v_ != integer(p_)) throw ConsistencyError("square root of p construction failed");
}

Scalar FieldContext::zero() const {
  return Scalar(shared_from_this(), std::vector<mpq_class>(static_cast<size_t>(degree()), 0));
}

Scalar FieldContext::one() const { return integer(1); }

Scalar FieldContext::integer(long k) const { return rational(mpq_class(k)); }

Scalar FieldContext::rational(const mpq_class& q) const {
  std::vector<mpq_class> c(static_cast<size_t>(degree()), 0);
  c[0] = q;
  return Scalar(shared_from_this(), std::move(c));
}

Scalar FieldContext::zeta(long k) const {
  const auto& row = powers_[static_cast<size_t>(mod(k, n_))];
  std::vector<mpq_class> c(row.begin(), row.end());
  return Scalar(shared_from_this(), std::move(c));
}

Scalar FieldContext::v_pow(long k) const {
  long half = k >= 0 ? k / 2 : -((-k + 1) / 2);
  const bool odd = (k - 2 * half) != 0;
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p_), static_cast<unsigned long>(half < 0 ? -half : half));
  mpq_class q = half >= 0 ? mpq_class(pw) : mpq_class(1) / mpq_class(pw);
  Scalar r = odd ? v_ * q : rational(q);
  return r;
}

Field make_field(int p) {
  if (!is_prime(p)) throw ConfigError("field characteristic must be prime, got " + std::to_string(p));
  if (p > 97) throw ConfigError("prime too large for the exact engine: " + std::to_string(p));
  std::shared_ptr<FieldContext> ctx(new FieldContext(p));
  ctx->finish();
  return ctx;
}

nlohmann::json to_json(const Scalar& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) {
    coeffs.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return {{"conductor", s.field() ? s.field()->conductor() : 0}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs")) {
    throw ConfigError("scalar JSON must carry conductor and coeffs");
  }
  if (j.at("conductor").get<int>() != field->conductor()) throw ConfigError("scalar JSON conductor mismatch");
  const auto& arr = j.at("coeffs");
  if (!arr.is_array() || static_cast<int>(arr.size()) != field->degree()) {
    throw ConfigError("scalar JSON has wrong coefficient count");
  }
  std::vector<mpq_class> c;
  c.reserve(arr.size());
  for (const auto& e : arr) {
    mpq_class q;
    if (q.set_str(e.get<std::string>(), 10) != 0) throw ConfigError("bad rational: " + e.get<std::string>());
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar(field, std::move(c));
}

}  // namespace hallforge
