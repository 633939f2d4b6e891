#include "fiatcell/checks.hpp"

#include <vector>

namespace fiatcell {

namespace {

struct Slice {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  bool set_level = true;
  std::optional<std::array<ElementId, 3>> failure;
  Decomposition lhs, rhs;
};

bool touches_truncation(const Shadow& s, ElementId a, ElementId b, ElementId c) {
  if (s.truncated(a, b) || s.truncated(b, c)) return true;
  for (const auto& term : s.product(a, b).terms())
    if (s.truncated(term.first, c)) return true;
  for (const auto& term : s.product(b, c).terms())
    if (s.truncated(a, term.first)) return true;
  return false;
}

Slice check_from(const Shadow& s, ElementId a) {
  Slice out;
  const std::size_t n = s.size();
  for (ElementId b = 0; b < n; ++b) {
    if (!s.composable(a, b)) continue;
    for (ElementId c = 0; c < n; ++c) {
      if (!s.composable(b, c)) continue;
      if (s.partial() && touches_truncation(s, a, b, c)) {
        ++out.skipped;
        continue;
      }
      ++out.checked;
      Decomposition lhs, rhs;
      for (const auto& [t, m] : s.product(a, b).terms()) lhs.add(s.product(t, c), m);
      for (const auto& [u, m] : s.product(b, c).terms()) rhs.add(s.product(a, u), m);
      if (lhs.support() != rhs.support()) out.set_level = false;
      if (lhs != rhs && !out.failure) {
        out.failure = std::array<ElementId, 3>{a, b, c};
        out.lhs = std::move(lhs);
        out.rhs = std::move(rhs);
      }
    }
  }
  return out;
}

}  // namespace

AssociativityReport check_associativity(const Shadow& s, std::size_t workers) {
  std::vector<Slice> slices(s.size());
  parallel_for(s.size(), [&](std::size_t a) { slices[a] = check_from(s, a); }, workers);
  AssociativityReport report;
  for (Slice& slice : slices) {
    report.triples_checked += slice.checked;
    report.triples_skipped += slice.skipped;
    report.set_level_passed = report.set_level_passed && slice.set_level;
    if (slice.failure && !report.failure) {
      report.passed = false;
      report.failure = slice.failure;
      report.lhs = std::move(slice.lhs);
      report.rhs = std::move(slice.rhs);
    }
  }
  return report;
}

}  // namespace fiatcell
