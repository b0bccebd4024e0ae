#include "skewhopf/ncpoly.hpp"

namespace skewhopf {

NCPoly::NCPoly(const Word& w, const Rational& c) { add_term(w, c); }

std::size_t NCPoly::degree() const { return terms_.empty() ? 0 : leading_word().size(); }

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational{} : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly multiply(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) out.add_term(a * b, ca * cb);
  }
  return out;
}

}  // namespace skewhopf
