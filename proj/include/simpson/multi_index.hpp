#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "simpson/errors.hpp"

namespace simpson {

/// Exponent tuple of a monomial x1^e1 ... xn^en.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}
  MultiIndex(std::initializer_list<unsigned> exponents) : e_(exponents) {}

  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t k, unsigned power = 1) {
    std::vector<unsigned> e(n, 0);
    e.at(k) = power;
    return MultiIndex(std::move(e));
  }

  std::size_t dimension() const noexcept { return e_.size(); }
  unsigned degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return e_; }

  /// Number of variables with a nonzero exponent.
  std::size_t support() const {
    return static_cast<std::size_t>(std::count_if(e_.begin(), e_.end(), [](unsigned v) { return v != 0; }));
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.dimension() != b.dimension()) throw DimensionMismatch("multi-index dimensions differ");
    std::vector<unsigned> e(a.e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e_[i];
    return MultiIndex(std::move(e));
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.e_ <=> b.e_; }

  /// "x^2y" in the plane, "x1^2*x2" otherwise; "1" for the zero index.
  std::string label() const {
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty() && e_.size() > 2) out += '*';
      out += variable_name(i, e_.size());
      if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
  }

  static std::string variable_name(std::size_t i, std::size_t n) {
    static constexpr const char* kShort[] = {"x", "y"};
    if (n <= 2) return kShort[i];
    return "x" + std::to_string(i + 1);
  }

 private:
  std::vector<unsigned> e_;
};

namespace detail {

inline void fill_degree(std::size_t n, unsigned remaining, std::vector<unsigned>& cur, std::vector<MultiIndex>& out) {
  const std::size_t pos = cur.size();
  if (pos + 1 == n) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.push_back(e);
    fill_degree(n, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All monomials of exact degree k in n variables, graded-lex order
/// (x1^k first, xn^k last).
inline std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned k) {
  std::vector<MultiIndex> out;
  if (n == 0) return out;
  std::vector<unsigned> cur;
  detail::fill_degree(n, k, cur, out);
  return out;
}

/// All monomials with degree <= max_degree, graded-lex order.
inline std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned max_degree) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= max_degree; ++k) {
    auto block = monomials_of_degree(n, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

/// Table order used for printed moment lists: by degree, then pure powers
/// before mixed terms, then graded-lex. For two variables this gives
/// 1, x, y, x^2, y^2, xy, x^3, y^3, x^2y, xy^2, ...
inline std::vector<MultiIndex> monomials_display_order(std::size_t n, unsigned max_degree) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= max_degree; ++k) {
    auto block = monomials_of_degree(n, k);
    std::stable_sort(block.begin(), block.end(),
                     [](const MultiIndex& a, const MultiIndex& b) { return a.support() < b.support(); });
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace simpson
