#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "calib/rational.hpp"

namespace calib {

// An exact rational-linear combination of named parameters plus a constant.
// This is the coefficient ring for every symbolic computation here: torsion
// coefficients, T-matrix entries and frame functions are all ParamExpr atoms.
// Products are only defined when at least one factor is constant, which keeps
// every expression linear by construction.
class ParamExpr {
 public:
  ParamExpr() : constant_(0) {}
  ParamExpr(Rational c) : constant_(std::move(c)) {}
  ParamExpr(long c) : constant_(c) {}
  ParamExpr(int c) : constant_(c) {}

  static ParamExpr atom(const std::string& name, Rational coef = 1) {
    ParamExpr e;
    if (!calib::is_zero(coef)) e.terms_[name] = std::move(coef);
    return e;
  }

  bool is_zero() const { return terms_.empty() && calib::is_zero(constant_); }
  bool is_constant() const { return terms_.empty(); }
  const Rational& constant() const { return constant_; }

  Rational coeff(const std::string& name) const {
    auto it = terms_.find(name);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  const std::map<std::string, Rational>& terms() const { return terms_; }

  ParamExpr& operator+=(const ParamExpr& o) {
    constant_ += o.constant_;
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  ParamExpr& operator-=(const ParamExpr& o) {
    constant_ -= o.constant_;
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  ParamExpr& operator*=(const Rational& c) {
    if (calib::is_zero(c)) {
      terms_.clear();
      constant_ = 0;
      return *this;
    }
    constant_ *= c;
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator-(ParamExpr a) {
    a *= Rational(-1);
    return a;
  }
  friend ParamExpr operator*(ParamExpr a, const Rational& c) { return a *= c; }
  friend ParamExpr operator*(const Rational& c, ParamExpr a) { return a *= c; }

  friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
    if (!a.is_constant() && !b.is_constant())
      throw std::logic_error("nonlinear parameter product");
    if (a.is_constant()) {
      ParamExpr out = b;
      out *= a.constant_;
      return out;
    }
    ParamExpr out = a;
    out *= b.constant_;
    return out;
  }

  bool operator==(const ParamExpr& o) const {
    return constant_ == o.constant_ && terms_ == o.terms_;
  }

  // Full substitution; every atom present must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& values) const {
    Rational out = constant_;
    for (const auto& [k, v] : terms_) {
      auto it = values.find(k);
      if (it == values.end())
        throw std::invalid_argument("unbound parameter: " + k);
      out += v * it->second;
    }
    return out;
  }

  // Partial substitution: atoms mapped to expressions, others kept.
  ParamExpr substitute(const std::map<std::string, ParamExpr>& values) const {
    ParamExpr out(constant_);
    for (const auto& [k, v] : terms_) {
      auto it = values.find(k);
      if (it == values.end())
        out.add_term(k, v);
      else
        out += it->second * v;
    }
    return out;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    auto append = [&](const Rational& c, const std::string& name) {
      std::string cs = to_string(c);
      if (!first && cs[0] != '-') out += "+";
      if (name.empty()) {
        out += cs;
      } else if (cs == "1") {
        out += name;
      } else if (cs == "-1") {
        out += "-" + name;
      } else {
        out += cs + "*" + name;
      }
      first = false;
    };
    if (!calib::is_zero(constant_)) append(constant_, "");
    for (const auto& [k, v] : terms_) append(v, k);
    return out;
  }

 private:
  void add_term(const std::string& k, const Rational& v) {
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (calib::is_zero(it->second)) terms_.erase(it);
    } else if (calib::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  Rational constant_;
  std::map<std::string, Rational> terms_;  // no zero coefficients stored
};

inline bool is_zero(const ParamExpr& e) { return e.is_zero(); }

}  // namespace calib
