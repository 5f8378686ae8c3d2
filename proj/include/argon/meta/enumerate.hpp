#pragma once

// Exhaustive enumeration of attack relations on n labelled arguments.
//
// A framework on n arguments is identified by its code: the n*n adjacency
// matrix read row-major as a binary number, entry (0,0) most significant.
// Codes are visited in ascending order, which is lexicographic order of the
// adjacency bit-string. With dedup only codes that are minimal over all
// argument permutations are kept, one per isomorphism class.

#include "argon/error.hpp"
#include "argon/framework.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace argon::meta {

/// Largest n enumerated without an explicit override.
inline constexpr std::size_t max_enumeration_n = 5;
/// Hard limit: codes must fit in 64 bits.
inline constexpr std::size_t max_code_n = 8;

/// A, B, C, ... for small frameworks; a0, a1, ... beyond 26 arguments.
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('A' + i)) : "a" + std::to_string(i));
  return names;
}

inline std::uint64_t code_bit(std::size_t n, std::size_t from, std::size_t to) {
  return std::uint64_t{1} << (n * n - 1 - (from * n + to));
}

inline Framework framework_from_code(std::size_t n, std::uint64_t code) {
  std::vector<Attack> attacks;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (code & code_bit(n, i, j))
        attacks.push_back({i, j});
  return Framework::from_indices(default_names(n), std::move(attacks));
}

inline std::uint64_t code_of(const Framework& af) {
  const std::size_t n = af.size();
  if (n > max_code_n)
    throw BudgetError("framework too large for an adjacency code");
  std::uint64_t code = 0;
  for (const auto& att : af.attacks())
    code |= code_bit(n, att.from, att.to);
  return code;
}

/// Applies argument permutations to adjacency matrices row by row, so that
/// the permuted bit-string can be compared against the original with an
/// early exit at the first differing row.
class PermutationTable {
public:
  explicit PermutationTable(std::size_t n) : n_(n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    while (std::next_permutation(p.begin(), p.end()))
      perms_.push_back(p);
    // Permutations moving few points reject most non-canonical codes early.
    std::stable_sort(perms_.begin(), perms_.end(), [](const auto& a, const auto& b) { return moved(a) < moved(b); });
    const std::size_t rows = std::size_t{1} << n;
    row_map_.resize(perms_.size() * rows);
    for (std::size_t k = 0; k < perms_.size(); ++k)
      for (std::size_t v = 0; v < rows; ++v) {
        std::uint32_t out = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (v & (std::size_t{1} << (n - 1 - perms_[k][j])))
            out |= std::uint32_t{1} << (n - 1 - j);
        row_map_[k * rows + v] = out;
      }
  }

  std::size_t size() const noexcept { return perms_.size(); }
  const std::vector<std::size_t>& permutation(std::size_t k) const { return perms_[k]; }

  /// Row i of the matrix, as an n-bit number with column 0 most significant.
  std::uint32_t row(std::uint64_t code, std::size_t i) const noexcept {
    return static_cast<std::uint32_t>((code >> (n_ * (n_ - 1 - i))) & ((std::uint64_t{1} << n_) - 1));
  }

  /// Code of the framework where argument i takes the role of p[i]:
  /// entry (i,j) of the result is entry (p[i],p[j]) of `code`.
  std::uint64_t apply(std::size_t k, std::uint64_t code) const noexcept {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n_; ++i)
      out = (out << n_) | permuted_row(k, code, i);
    return out;
  }

  /// No permutation yields a smaller code.
  bool is_canonical(std::uint64_t code) const noexcept {
    std::uint32_t rows[max_code_n];
    for (std::size_t i = 0; i < n_; ++i)
      rows[i] = row(code, i);
    for (std::size_t k = 0; k < perms_.size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        const std::uint32_t r = permuted_row(k, rows[perms_[k][i]]);
        if (r < rows[i])
          return false;
        if (r > rows[i])
          break;
      }
    }
    return true;
  }

private:
  static std::size_t moved(const std::vector<std::size_t>& p) {
    std::size_t m = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      m += p[i] != i;
    return m;
  }

  std::uint32_t permuted_row(std::size_t k, std::uint32_t original_row) const noexcept {
    return row_map_[(k << n_) + original_row];
  }
  std::uint32_t permuted_row(std::size_t k, std::uint64_t code, std::size_t i) const noexcept {
    return permuted_row(k, row(code, perms_[k][i]));
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> perms_;
  std::vector<std::uint32_t> row_map_;
};

struct EnumerateOptions {
  bool dedup = false;
  /// Lifts the n <= 5 guard.
  bool allow_large = false;
};

inline void check_enumeration_budget(std::size_t n, const EnumerateOptions& opts) {
  if (n > max_code_n)
    throw BudgetError("cannot enumerate frameworks with more than 8 arguments");
  if (n > max_enumeration_n && !opts.allow_large)
    throw BudgetError("enumerating frameworks with " + std::to_string(n) +
                      " arguments needs an explicit override");
}

/// All codes on n arguments in ascending order (isomorphism representatives
/// only, with dedup).
inline std::vector<std::uint64_t> framework_codes(std::size_t n, EnumerateOptions opts = {}) {
  check_enumeration_budget(n, opts);
  const std::uint64_t end = std::uint64_t{1} << (n * n);
  std::vector<std::uint64_t> out;
  if (!opts.dedup || n <= 1) {
    out.resize(end);
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    return out;
  }
  const PermutationTable table(n);
  for (std::uint64_t c = 0; c < end; ++c)
    if (table.is_canonical(c))
      out.push_back(c);
  return out;
}

/// Calls visit(af) for every framework on n arguments, in code order.
template <class Visit>
void for_each_framework(std::size_t n, EnumerateOptions opts, Visit&& visit) {
  for (auto code : framework_codes(n, opts))
    visit(framework_from_code(n, code));
}

inline std::vector<Framework> enumerate_frameworks(std::size_t n, bool dedup, bool allow_large = false) {
  std::vector<Framework> out;
  for_each_framework(n, {dedup, allow_large}, [&](Framework af) { out.push_back(std::move(af)); });
  return out;
}

/// The smallest code over all argument permutations.
inline std::uint64_t canonical_code(std::size_t n, std::uint64_t code) {
  if (n <= 1)
    return code;
  const PermutationTable table(n);
  std::uint64_t best = code;
  for (std::size_t k = 0; k < table.size(); ++k)
    best = std::min(best, table.apply(k, code));
  return best;
}

} // namespace argon::meta
