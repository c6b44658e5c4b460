#include "fourprod/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fourprod {

MPoly MPoly::constant(std::vector<std::string> vars, Rational c) {
  MPoly p(std::move(vars));
  if (c != 0) p.terms_.emplace(Exponents(p.vars_.size(), 0), std::move(c));
  return p;
}

MPoly MPoly::var(std::vector<std::string> vars, const std::string& name, int power,
                 Rational coeff) {
  MPoly p(std::move(vars));
  if (coeff == 0) return p;
  Exponents e(p.vars_.size(), 0);
  e[p.var_index(name)] = power;
  p.terms_.emplace(std::move(e), std::move(coeff));
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

int MPoly::degree(const std::string& name) const {
  int i = var_index(name), d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

Rational MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
  return static_cast<int>(it - vars_.begin());
}

void MPoly::check_same_registry(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("mismatched variable registries");
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_same_registry(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_same_registry(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_same_registry(o);
  MPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MPoly MPoly::operator*(const Rational& c) const {
  MPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

bool MPoly::operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power");
  MPoly r = constant(vars_, 1);
  MPoly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

MPoly MPoly::substitute(const std::string& name, const MPoly& value) const {
  check_same_registry(value);
  int i = var_index(name);
  std::vector<MPoly> powers{constant(vars_, 1)};
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[i] = 0;
    MPoly mono(vars_);
    mono.terms_.emplace(rest, c);
    r = r + mono * powers[e[i]];
  }
  return r;
}

std::map<int, MPoly> MPoly::collect(const std::string& name) const {
  int i = var_index(name);
  std::map<int, MPoly> out;
  for (const auto& [e, c] : terms_) {
    auto [it, _] = out.try_emplace(e[i], MPoly(vars_));
    Exponents rest = e;
    rest[i] = 0;
    it->second.add_term(rest, c);
  }
  return out;
}

MPoly MPoly::with_vars(std::vector<std::string> newvars) const {
  MPoly r(std::move(newvars));
  std::vector<int> where(vars_.size(), -1);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(r.vars_.begin(), r.vars_.end(), vars_[i]);
    if (it != r.vars_.end()) where[i] = static_cast<int>(it - r.vars_.begin());
  }
  for (const auto& [e, c] : terms_) {
    Exponents ne(r.vars_.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw std::invalid_argument("variable " + vars_[i] + " dropped but still present");
      ne[where[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

Rational MPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> vals(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = point.find(vars_[i]);
    if (it == point.end()) {
      if (degree(vars_[i]) > 0) throw std::invalid_argument("missing value for " + vars_[i]);
      vals[i] = 0;
    } else {
      vals[i] = it->second;
    }
  }
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= vals[i];
    total += term;
  }
  return total;
}

std::optional<Rational> MPoly::ratio_to(const MPoly& other) const {
  check_same_registry(other);
  if (is_zero() && other.is_zero()) return Rational(1);
  if (is_zero() || other.is_zero()) return std::nullopt;
  if (terms_.size() != other.terms_.size()) return std::nullopt;
  Rational ratio = terms_.begin()->second / other.coeff(terms_.begin()->first);
  if (ratio == 0) return std::nullopt;
  for (const auto& [e, c] : terms_)
    if (c != ratio * other.coeff(e)) return std::nullopt;
  return ratio;
}

std::string MPoly::monomial_str(const std::vector<std::string>& vars, const Exponents& e) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational mag = c > 0 ? c : Rational(-c);
    std::string mono = monomial_str(vars_, e);
    if (mag != 1 || mono == "1") {
      os << to_string(mag);
      if (mono != "1") os << "*";
    }
    if (mono != "1") os << mono;
    first = false;
  }
  return os.str();
}

} // namespace fourprod
