#include "vermalab/exactalg/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace vermalab::exact {

LaurentMonomial LaurentMonomial::t_var(int n, int i, std::int64_t e) {
  auto m = one(n);
  m.t.at(static_cast<std::size_t>(i - 1)) = e;
  return m;
}

LaurentMonomial LaurentMonomial::v_pow(int n, std::int64_t e) {
  auto m = one(n);
  m.v = e;
  return m;
}

bool LaurentMonomial::is_one() const {
  if (v != 0) return false;
  for (auto e : t)
    if (e != 0) return false;
  return true;
}

LaurentMonomial LaurentMonomial::inverse() const { return pow(-1); }

LaurentMonomial LaurentMonomial::pow(std::int64_t e) const {
  LaurentMonomial r = *this;
  for (auto& x : r.t) x *= e;
  r.v *= e;
  return r;
}

LaurentMonomial operator*(const LaurentMonomial& a, const LaurentMonomial& b) {
  if (a.t.size() != b.t.size()) throw std::invalid_argument("Laurent monomials of different rank");
  LaurentMonomial r = a;
  for (std::size_t i = 0; i < r.t.size(); ++i) r.t[i] += b.t[i];
  r.v += b.v;
  return r;
}

std::string LaurentMonomial::to_string() const {
  std::string out;
  auto put = [&out](const std::string& name, std::int64_t e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t i = 0; i < t.size(); ++i) put("t" + std::to_string(i + 1), t[i]);
  put("v", v);
  return out.empty() ? "1" : out;
}

ExponentQuadratic ExponentQuadratic::constant(int n, std::int64_t c) {
  ExponentQuadratic q(n);
  q.constant_ = c;
  return q;
}

ExponentQuadratic ExponentQuadratic::tau(int n, int j) {
  ExponentQuadratic q(n);
  q.linear_.at(static_cast<std::size_t>(j - 1)) = 1;
  return q;
}

ExponentQuadratic ExponentQuadratic::from_monomial(const LaurentMonomial& m) {
  ExponentQuadratic q(static_cast<int>(m.t.size()));
  q.constant_ = m.v;
  q.linear_ = m.t;
  return q;
}

std::int64_t ExponentQuadratic::quadratic_coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = quadratic_.find({i, j});
  return it == quadratic_.end() ? 0 : it->second;
}

ExponentQuadratic ExponentQuadratic::operator-() const { return scaled(-1); }

ExponentQuadratic ExponentQuadratic::scaled(std::int64_t c) const {
  ExponentQuadratic r(rank());
  if (c == 0) return r;
  r.constant_ = constant_ * c;
  for (std::size_t i = 0; i < linear_.size(); ++i) r.linear_[i] = linear_[i] * c;
  for (const auto& [k, v] : quadratic_) r.quadratic_[k] = v * c;
  return r;
}

ExponentQuadratic operator+(const ExponentQuadratic& a, const ExponentQuadratic& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("exponent polynomials of different rank");
  ExponentQuadratic r = a;
  r.constant_ += b.constant_;
  for (std::size_t i = 0; i < r.linear_.size(); ++i) r.linear_[i] += b.linear_[i];
  for (const auto& [k, v] : b.quadratic_) {
    auto& slot = r.quadratic_[k];
    slot += v;
    if (slot == 0) r.quadratic_.erase(k);
  }
  return r;
}

ExponentQuadratic operator-(const ExponentQuadratic& a, const ExponentQuadratic& b) { return a + (-b); }

ExponentQuadratic operator*(const ExponentQuadratic& a, const ExponentQuadratic& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("exponent polynomials of different rank");
  if (!a.quadratic_.empty() && !b.quadratic_.empty()) throw std::domain_error("product exceeds degree 2");
  const bool a_lin = std::any_of(a.linear_.begin(), a.linear_.end(), [](auto x) { return x != 0; });
  const bool b_lin = std::any_of(b.linear_.begin(), b.linear_.end(), [](auto x) { return x != 0; });
  if ((!a.quadratic_.empty() && b_lin) || (!b.quadratic_.empty() && a_lin))
    throw std::domain_error("product exceeds degree 2");
  ExponentQuadratic r = b.scaled(a.constant_) + a.scaled(b.constant_) - ExponentQuadratic::constant(a.rank(), a.constant_ * b.constant_);
  const int n = a.rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      std::int64_t c = a.linear_coeff(i) * b.linear_coeff(j);
      if (c == 0) continue;
      auto key = std::make_pair(std::min(i, j), std::max(i, j));
      auto& slot = r.quadratic_[key];
      slot += c;
      if (slot == 0) r.quadratic_.erase(key);
    }
  }
  return r;
}

std::optional<LaurentMonomial> ExponentQuadratic::as_monomial() const {
  if (!quadratic_.empty()) return std::nullopt;
  return LaurentMonomial{linear_, constant_};
}

std::string ExponentQuadratic::to_string() const {
  std::string out;
  auto put = [&out](std::int64_t c, const std::string& name) {
    if (c == 0) return;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (name.empty()) {
      out += std::to_string(a);
    } else {
      if (a != 1) out += std::to_string(a) + "*";
      out += name;
    }
  };
  for (const auto& [k, v] : quadratic_)
    put(v, k.first == k.second ? "tau" + std::to_string(k.first) + "^2"
                               : "tau" + std::to_string(k.first) + "*tau" + std::to_string(k.second));
  for (std::size_t i = 0; i < linear_.size(); ++i) put(linear_[i], "tau" + std::to_string(i + 1));
  put(constant_, "");
  return out.empty() ? "0" : out;
}

}  // namespace vermalab::exact
