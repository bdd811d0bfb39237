#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "mackey/error.hpp"

namespace mackey {

/// Integers modulo a runtime modulus n ≥ 1.
class Zmod {
 public:
  Zmod() = default;
  Zmod(long long value, long long modulus) : n_(modulus) {
    if (modulus < 1) throw TypeError("modulus must be positive");
    v_ = ((value % n_) + n_) % n_;
  }
  long long value() const noexcept { return v_; }
  long long modulus() const noexcept { return n_; }

  Zmod& operator+=(Zmod const& o) {
    check(o);
    v_ = (v_ + o.v_) % n_;
    return *this;
  }
  Zmod& operator*=(Zmod const& o) {
    check(o);
    v_ = static_cast<long long>((static_cast<__int128>(v_) * o.v_) % n_);
    return *this;
  }
  friend Zmod operator+(Zmod a, Zmod const& b) { return a += b; }
  friend Zmod operator*(Zmod a, Zmod const& b) { return a *= b; }
  friend bool operator==(Zmod const& a, Zmod const& b) { return a.v_ == b.v_ && a.n_ == b.n_; }

 private:
  void check(Zmod const& o) const {
    if (o.n_ != n_) throw TypeError("mixing coefficients of different moduli");
  }
  long long v_ = 0;
  long long n_ = 1;
};

using Rational = boost::rational<long long>;

inline bool coeff_is_zero(long long c) { return c == 0; }
inline bool coeff_is_zero(Zmod const& c) { return c.value() == 0; }
inline bool coeff_is_zero(Rational const& c) { return c.numerator() == 0; }

inline std::string coeff_to_string(long long c) { return std::to_string(c); }
inline std::string coeff_to_string(Zmod const& c) { return std::to_string(c.value()); }
inline std::string coeff_to_string(Rational const& c) {
  if (c.denominator() == 1) return std::to_string(c.numerator());
  return std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
}

/// Image of an integer in the coefficient ring selected by a CLI ring spec.
struct Ring {
  enum class Kind { Integer, Modular, Rational } kind = Kind::Integer;
  long long modulus = 0;

  /// "int", "mod:n" or "rat"
  static Ring parse(std::string const& spec);
  std::string format(long long c) const;
  bool is_zero(long long c) const { return kind == Kind::Modular ? c % modulus == 0 : c == 0; }
};

inline Ring Ring::parse(std::string const& spec) {
  if (spec == "int") return {};
  if (spec == "rat") return {Kind::Rational, 0};
  if (spec.rfind("mod:", 0) == 0) {
    long long n = 0;
    try {
      n = std::stoll(spec.substr(4));
    } catch (std::exception const&) {
      throw ParseError("bad ring modulus: " + spec);
    }
    if (n < 1) throw ParseError("bad ring modulus: " + spec);
    return {Kind::Modular, n};
  }
  throw ParseError("unknown ring: " + spec);
}

inline std::string Ring::format(long long c) const {
  switch (kind) {
    case Kind::Modular:
      return coeff_to_string(Zmod(c, modulus));
    case Kind::Rational:
      return coeff_to_string(Rational(c));
    case Kind::Integer:
      break;
  }
  return coeff_to_string(c);
}

/// Finitely supported formal combination of keys; zero coefficients are
/// never stored.
template <class Key, class C = long long>
class LinComb {
 public:
  using Map = std::map<Key, C>;

  LinComb() = default;
  explicit LinComb(Key const& k, C c = C(1)) { add(k, c); }

  void add(Key const& k, C const& c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second = it->second + c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  LinComb& operator+=(LinComb const& o) {
    for (auto const& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend LinComb operator+(LinComb a, LinComb const& b) { return a += b; }

  LinComb scaled(C const& s) const {
    LinComb out;
    for (auto const& [k, c] : terms_) out.add(k, c * s);
    return out;
  }

  /// Coefficientwise image under a ring map.
  template <class D, class F>
  LinComb<Key, D> map_coeffs(F const& f) const {
    LinComb<Key, D> out;
    for (auto const& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  Map const& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  C coeff(Key const& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? C(0) : it->second;
  }
  bool operator==(LinComb const& o) const { return terms_ == o.terms_; }
  bool operator!=(LinComb const& o) const { return !(*this == o); }

  /// "c1*[key1] + c2*[key2]"; "0" when empty.
  std::string format(std::function<std::string(Key const&)> const& key_str,
                     std::function<std::string(C const&)> const& coeff_str) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << coeff_str(c) << "*[" << key_str(k) << "]";
    }
    return os.str();
  }

 private:
  Map terms_;
};

}  // namespace mackey
