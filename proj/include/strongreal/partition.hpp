#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "strongreal/error.hpp"

namespace strongreal {

/// Integer partition, parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (unsigned p : parts_) require(p > 0, "partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

  /// Builds (k^{m_k} ... 1^{m_1}) from part -> multiplicity.
  static Partition from_multiplicities(const std::map<unsigned, unsigned>& mult) {
    std::vector<unsigned> parts;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) parts.insert(parts.end(), it->second, it->first);
    return Partition(std::move(parts));
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }
  unsigned size() const { return std::accumulate(parts_.begin(), parts_.end(), 0U); }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front(); }

  unsigned multiplicity(unsigned part) const {
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), part));
  }

  /// part -> multiplicity over the parts that occur.
  std::map<unsigned, unsigned> multiplicities() const {
    std::map<unsigned, unsigned> out;
    for (unsigned p : parts_) ++out[p];
    return out;
  }

  /// Sum over (i, j) of min(lambda_i, lambda_j): dimension of the commutant
  /// of a nilpotent with this Jordan type.
  unsigned commutant_dimension() const {
    unsigned total = 0;
    for (unsigned a : parts_) {
      for (unsigned b : parts_) total += std::min(a, b);
    }
    return total;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// Exponent notation, e.g. (5^2 3 2^3 1^2).
  std::string to_string() const {
    std::string out = "(";
    auto mult = multiplicities();
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      if (!first) out += " ";
      first = false;
      out += std::to_string(it->first);
      if (it->second > 1) out += "^" + std::to_string(it->second);
    }
    return out + ")";
  }

 private:
  std::vector<unsigned> parts_;
};

/// Calls fn on each partition of n with parts <= max_part, in reverse
/// lexicographic order starting at (min(n, max_part), ...).
inline void for_each_partition(unsigned n, unsigned max_part, const std::function<void(const Partition&)>& fn) {
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
    if (remaining == 0) {
      fn(Partition(parts));
      return;
    }
    for (unsigned p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, max_part);
}

inline std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  for_each_partition(n, n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Parses "5,3,2,2" (whitespace tolerated). The empty string is the empty
/// partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<unsigned> parts;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "bad partition part '" + token + "'");
    }
    require(used == token.size() && v > 0, "bad partition part '" + token + "'");
    parts.push_back(static_cast<unsigned>(v));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (c != ' ' && c != '\t') {
      token += c;
    }
  }
  flush();
  return Partition(std::move(parts));
}

}  // namespace strongreal
