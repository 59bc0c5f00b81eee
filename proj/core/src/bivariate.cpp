#include "flagtutte/bivariate.hpp"

#include <algorithm>

namespace flagtutte {

namespace {

std::string monomial_text(const Integer& c, const std::vector<std::pair<std::string, int>>& powers,
                          bool first) {
  std::string vars;
  for (const auto& [name, e] : powers) {
    if (e == 0) continue;
    if (!vars.empty()) vars += "*";
    vars += name;
    if (e > 1) vars += "^" + std::to_string(e);
  }
  const Integer mag = c < 0 ? Integer(-c) : c;
  std::string out;
  if (first) {
    out = c < 0 ? "-" : "";
  } else {
    out = c < 0 ? " - " : " + ";
  }
  if (vars.empty()) return out + mag.str();
  if (mag != 1) out += mag.str() + "*";
  return out + vars;
}

}  // namespace

BivarPoly BivarPoly::constant(const Integer& c) {
  BivarPoly p;
  p.add_term(0, 0, c);
  return p;
}

BivarPoly BivarPoly::x() {
  BivarPoly p;
  p.add_term(1, 0, 1);
  return p;
}

BivarPoly BivarPoly::y() {
  BivarPoly p;
  p.add_term(0, 1, 1);
  return p;
}

Integer BivarPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivarPoly::add_term(int i, int j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int BivarPoly::degree_x() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

int BivarPoly::degree_y() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Integer BivarPoly::eval(const Integer& x, const Integer& y) const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c * boost::multiprecision::pow(x, e.first) * boost::multiprecision::pow(y, e.second);
  return s;
}

BivarPoly BivarPoly::compose(const BivarPoly& px, const BivarPoly& py) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out += constant(c) * px.pow(e.first) * py.pow(e.second);
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

BivarPoly BivarPoly::pow(int e) const {
  BivarPoly out = constant(1);
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string BivarPoly::to_string(const std::string& vx, const std::string& vy) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    out += monomial_text(c, {{vx, e.first}, {vy, e.second}}, first);
    first = false;
  }
  return out;
}

Integer UnivarPoly::eval(const Integer& v) const {
  Integer s = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * v + *it;
  return s;
}

std::string UnivarPoly::to_string(const std::string& var) const {
  std::string out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (coeffs[i] == 0) continue;
    out += monomial_text(coeffs[i], {{var, i}}, first);
    first = false;
  }
  return first ? "0" : out;
}

}  // namespace flagtutte
