#pragma once

// Independent reference implementations used only by the tests. None of
// them calls into the code paths they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fiatcell/shadow.hpp"
#include "fiatcell/udot.hpp"

namespace oracle {

using fiatcell::ElementId;
using fiatcell::Shadow;

inline std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int t = 2; t <= k; ++t) f *= t;
  return f;
}

inline std::int64_t choose(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return 0;
  std::int64_t v = 1;
  for (std::int64_t t = 1; t <= k; ++t) v = v * (m - k + t) / t;
  return v;
}

// ---------------------------------------------------------------------------
// Single-step rewriting: words in E, F of power one acting on a source
// object, written left to right with the last letter acting first. The only
// rule is the commutation EF 1_i = FE 1_i + (n - 2i) 1_i at the object i
// where the pair starts; words leaving 0..n vanish.

/// 'E' lowers the object by one, 'F' raises it.
struct Letters {
  int source = 0;
  std::string word;
  auto operator<=>(const Letters&) const = default;
};

inline bool letters_in_range(int n, const Letters& w) {
  int obj = w.source;
  if (obj < 0 || obj > n) return false;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
    obj += *it == 'F' ? 1 : -1;
    if (obj < 0 || obj > n) return false;
  }
  return true;
}

/// Object where position p starts acting.
inline int letters_start(const Letters& w, std::size_t p) {
  int obj = w.source;
  for (std::size_t q = w.word.size(); q-- > p + 1;) obj += w.word[q] == 'F' ? 1 : -1;
  return obj;
}

/// Normal form F^a E^b 1_i as a map (a, b, source) -> integer coefficient.
inline std::map<Letters, std::int64_t> single_step_normalize(int n, std::map<Letters, std::int64_t> pending) {
  std::map<Letters, std::int64_t> done;
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    if (c == 0 || !letters_in_range(n, w)) continue;
    auto pos = w.word.find("EF");
    if (pos == std::string::npos) {
      done[w] += c;
      continue;
    }
    int start = letters_start(w, pos + 1);
    Letters swapped = w;
    swapped.word[pos] = 'F';
    swapped.word[pos + 1] = 'E';
    pending[swapped] += c;
    Letters shorter = w;
    shorter.word.erase(pos, 2);
    pending[shorter] += c * (n - 2 * start);
  }
  std::erase_if(done, [](const auto& kv) { return kv.second == 0; });
  return done;
}

/// Expands a divided-power word into single letters, X^(k) = X^k / k!, and
/// normalizes. The result is keyed by FE divided-power words.
inline fiatcell::udot::UVector oracle_dp_normalize(int n, const fiatcell::udot::DPWord& w) {
  using fiatcell::udot::Gen;
  Letters letters{w.source, {}};
  std::int64_t denominator = 1;
  for (const auto& d : w.factors) {
    letters.word.append(static_cast<std::size_t>(d.power), d.gen == Gen::E ? 'E' : 'F');
    denominator *= factorial(d.power);
  }
  fiatcell::udot::UVector out;
  for (const auto& [lw, c] : single_step_normalize(n, {{letters, 1}})) {
    int a = static_cast<int>(std::count(lw.word.begin(), lw.word.end(), 'F'));
    int b = static_cast<int>(lw.word.size()) - a;
    std::int64_t numerator = c * factorial(a) * factorial(b);
    if (numerator % denominator != 0) throw std::runtime_error("non-integral oracle coefficient");
    fiatcell::udot::DPWord dp{lw.source, {}};
    if (a > 0) dp.factors.push_back({Gen::F, a});
    if (b > 0) dp.factors.push_back({Gen::E, b});
    out.add(dp, numerator / denominator);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The direct sum of the irreducibles V(m), m <= n, m ≡ n mod 2. Object i is
// the weight n - 2i; each V(m) containing that weight contributes one
// coordinate. A word acts as a vector of scalars, one per V(m).

/// Scalars by which `w` acts, indexed by m = n, n-2, ...; zero where a
/// weight on the path lies outside V(m).
inline std::vector<std::int64_t> irreducible_action(int n, const fiatcell::udot::DPWord& w) {
  using fiatcell::udot::Gen;
  std::vector<std::int64_t> out;
  for (int m = n; m >= 0; m -= 2) {
    // Basis v_0..v_m with v_j of weight m - 2j; object i sits at j = (m - n)/2 + i.
    int j = (m - n) / 2 + w.source;
    std::int64_t value = (j >= 0 && j <= m) ? 1 : 0;
    for (std::size_t p = w.factors.size(); p-- > 0 && value != 0;) {
      int k = w.factors[p].power;
      if (w.factors[p].gen == Gen::F) {
        value *= choose(j + k, k);
        j += k;
      } else {
        value *= choose(m - j + k, k);
        j -= k;
      }
      if (j < 0 || j > m) value = 0;
    }
    out.push_back(value);
  }
  return out;
}

/// Rank of an integer matrix via fraction-free elimination.
inline std::size_t rank(std::vector<std::vector<std::int64_t>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      std::int64_t f = rows[i][c], g = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] * g - rows[r][k] * f;
      std::int64_t d = 0;
      for (auto v : rows[i]) d = std::gcd(d, v);
      if (d > 1)
        for (auto& v : rows[i]) v /= d;
    }
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Green closures straight from the definition.

inline std::set<ElementId> support_products(const Shadow& s, const std::set<ElementId>& x, bool on_left) {
  std::set<ElementId> out;
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId b : x) {
      const auto& d = on_left ? s.product(a, b) : s.product(b, a);
      for (const auto& [e, m] : d.terms()) out.insert(e);
    }
  return out;
}

/// 'L': S¹a, 'R': aS¹, 'J': S¹aS¹.
inline std::set<ElementId> ideal(const Shadow& s, ElementId a, char kind) {
  std::set<ElementId> out{a};
  if (kind == 'L' || kind == 'J') {
    auto more = support_products(s, out, true);
    out.insert(more.begin(), more.end());
  }
  if (kind == 'R' || kind == 'J') {
    auto more = support_products(s, out, false);
    out.insert(more.begin(), more.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tableaux and double cosets.

/// Hook-content formula for the number of SSYT of shape λ over 1..n.
inline std::int64_t ssyt_count(const std::vector<int>& shape, int n) {
  // Exact as a ratio of products; small sizes keep it in range.
  std::int64_t num = 1, den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) {
      int arm = shape[i] - j - 1;
      int leg = 0;
      for (std::size_t k = i + 1; k < shape.size() && shape[k] > j; ++k) ++leg;
      num *= n + j - static_cast<int>(i);
      den *= arm + leg + 1;
    }
  return num / den;
}

/// S_v-orbits on the distinct rearrangements of u, generated by swapping
/// neighbouring positions inside blocks of equal entries of v.
inline std::size_t orbit_double_cosets(const std::vector<int>& v, const std::vector<int>& u) {
  std::vector<int> x = u;
  std::sort(x.begin(), x.end());
  std::set<std::vector<int>> unseen;
  do unseen.insert(x);
  while (std::next_permutation(x.begin(), x.end()));
  std::size_t orbits = 0;
  while (!unseen.empty()) {
    ++orbits;
    std::vector<std::vector<int>> stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      for (std::size_t p = 0; p + 1 < v.size(); ++p) {
        if (v[p] != v[p + 1]) continue;
        auto next = cur;
        std::swap(next[p], next[p + 1]);
        if (unseen.erase(next)) stack.push_back(next);
      }
    }
  }
  return orbits;
}

}  // namespace oracle
