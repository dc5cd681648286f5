#pragma once

// Power series with exact integer coefficients, truncated at a fixed order.

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "strongreal/error.hpp"

namespace strongreal {

using BigInt = boost::multiprecision::cpp_int;

class Series {
 public:
  /// The zero series with coefficients c_0..c_order.
  explicit Series(unsigned order) : c_(order + 1) {}

  static Series one(unsigned order) {
    Series s(order);
    s.c_[0] = 1;
    return s;
  }

  /// sum_j a^j z^{kj}: the expansion of 1 / (1 - a z^k).
  static Series geometric(unsigned order, const BigInt& a, unsigned k) {
    require(k >= 1, "geometric factor needs k >= 1");
    Series s(order);
    BigInt pw = 1;
    for (unsigned e = 0; e <= order; e += k) {
      s.c_[e] = pw;
      pw *= a;
    }
    return s;
  }

  /// sum_j coeff(j) z^{kj}.
  template <class F>
  static Series spaced(unsigned order, unsigned k, F coeff) {
    require(k >= 1, "spacing must be positive");
    Series s(order);
    for (unsigned j = 0; j * k <= order; ++j) s.c_[j * k] = coeff(j);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size() - 1); }
  const BigInt& operator[](unsigned i) const { return c_.at(i); }
  BigInt& operator[](unsigned i) { return c_.at(i); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  friend Series operator+(const Series& a, const Series& b) {
    require(a.order() == b.order(), "series orders differ");
    Series r(a.order());
    for (unsigned i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    require(a.order() == b.order(), "series orders differ");
    const unsigned n = a.order();
    Series r(n);
    for (unsigned i = 0; i <= n; ++i) {
      if (a.c_[i] == 0) continue;
      for (unsigned j = 0; i + j <= n; ++j) {
        if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  Series& operator*=(const Series& b) { return *this = *this * b; }

  friend bool operator==(const Series&, const Series&) = default;

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(x.str());
    return out;
  }

 private:
  std::vector<BigInt> c_;
};

}  // namespace strongreal
