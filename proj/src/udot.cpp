#include "fiatcell/udot.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "fiatcell/errors.hpp"

namespace fiatcell::udot {

namespace {

int delta(const DividedPower& d) { return d.gen == Gen::F ? d.power : -d.power; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw ConsistencyError("coefficient overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ConsistencyError("coefficient overflow");
  return out;
}

}  // namespace

int DPWord::target() const {
  int obj = source;
  for (const auto& d : factors) obj += delta(d);
  return obj;
}

int DPWord::start_of(std::size_t pos) const {
  int obj = source;
  for (std::size_t q = factors.size(); q-- > pos + 1;) obj += delta(factors[q]);
  return obj;
}

DPWord identity_word(int object) { return DPWord{object, {}}; }

DPWord e_word(int source, int power) {
  DPWord w{source, {}};
  if (power > 0) w.factors.push_back({Gen::E, power});
  return w;
}

DPWord f_word(int source, int power) {
  DPWord w{source, {}};
  if (power > 0) w.factors.push_back({Gen::F, power});
  return w;
}

DPWord concat(const DPWord& a, const DPWord& b) {
  if (a.source != b.target()) throw InputError("words are not composable");
  DPWord out{b.source, a.factors};
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

bool in_range(int n, const DPWord& w) {
  int obj = w.source;
  if (obj < 0 || obj > n) return false;
  for (std::size_t q = w.factors.size(); q-- > 0;) {
    obj += delta(w.factors[q]);
    if (obj < 0 || obj > n) return false;
  }
  return true;
}

int weight(int n, int object) {
  if (object < 0 || object > n)
    throw InputError("object " + std::to_string(object) + " outside 0.." + std::to_string(n));
  return n - 2 * object;
}

std::int64_t binomial(std::int64_t m, std::int64_t j) {
  if (j < 0) return 0;
  std::int64_t value = 1;
  for (std::int64_t t = 1; t <= j; ++t) {
    std::int64_t num = checked_mul(value, m - t + 1);
    if (num % t != 0) throw ConsistencyError("non-integral binomial coefficient");
    value = num / t;
  }
  return value;
}

std::string to_string(const DPWord& w) {
  if (w.factors.empty()) return "1_" + std::to_string(w.source);
  std::string out;
  for (std::size_t p = 0; p < w.factors.size(); ++p) {
    const auto& d = w.factors[p];
    out += (d.gen == Gen::E ? "E_" : "F_") + std::to_string(w.start_of(p)) + "^(" +
           std::to_string(d.power) + ")";
  }
  return out;
}

void UVector::add(const DPWord& w, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

void UVector::add(const UVector& other, std::int64_t scale) {
  for (const auto& [w, c] : other.terms_) add(w, checked_mul(c, scale));
}

std::int64_t UVector::coefficient(const DPWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::string to_string(const UVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : v.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << to_string(w);
  }
  return os.str();
}

namespace {

bool is_redex(const DividedPower& left, const DividedPower& right, Order order) {
  if (left.gen == right.gen) return true;
  if (order == Order::FE) return left.gen == Gen::E && right.gen == Gen::F;
  return left.gen == Gen::F && right.gen == Gen::E;
}

std::vector<std::size_t> redexes(const DPWord& w, Order order) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < w.factors.size(); ++p)
    if (is_redex(w.factors[p], w.factors[p + 1], order)) out.push_back(p);
  return out;
}

DPWord splice(const DPWord& w, std::size_t p, std::initializer_list<DividedPower> middle) {
  DPWord out{w.source, {}};
  out.factors.reserve(w.factors.size() + 1);
  out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.begin() + p);
  for (const auto& d : middle)
    if (d.power > 0) out.factors.push_back(d);
  out.factors.insert(out.factors.end(), w.factors.begin() + p + 2, w.factors.end());
  return out;
}

/// One rule application at position p (factors p and p+1).
std::vector<std::pair<DPWord, std::int64_t>> rewrite_at(int n, const DPWord& w, std::size_t p,
                                                        Order order) {
  const DividedPower left = w.factors[p];
  const DividedPower right = w.factors[p + 1];
  std::vector<std::pair<DPWord, std::int64_t>> out;
  if (left.gen == right.gen) {
    out.emplace_back(splice(w, p, {{left.gen, left.power + right.power}}),
                     binomial(left.power + right.power, left.power));
    return out;
  }
  const int lambda = weight(n, w.start_of(p + 1));
  const int a = left.power;
  const int b = right.power;
  for (int j = 0; j <= std::min(a, b); ++j) {
    std::int64_t c = order == Order::FE ? binomial(a - b + lambda, j) : binomial(a - b - lambda, j);
    if (c == 0) continue;
    if (order == Order::FE)
      out.emplace_back(splice(w, p, {{Gen::F, b - j}, {Gen::E, a - j}}), c);
    else
      out.emplace_back(splice(w, p, {{Gen::E, b - j}, {Gen::F, a - j}}), c);
  }
  return out;
}

}  // namespace

UVector normalize(int n, const UVector& v, const RewriteOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::map<DPWord, std::int64_t> pending;
  UVector done;
  auto push = [&](const DPWord& w, std::int64_t c) {
    if (c == 0 || !in_range(n, w)) return;
    if (redexes(w, options.order).empty()) {
      done.add(w, c);
      return;
    }
    auto [it, inserted] = pending.emplace(w, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) pending.erase(it);
    }
  };
  for (const auto& [w, c] : v.terms()) push(w, c);

  while (!pending.empty()) {
    auto it = pending.begin();
    DPWord w = it->first;
    std::int64_t coeff = it->second;
    pending.erase(it);
    std::vector<std::size_t> spots = redexes(w, options.order);
    std::size_t p = spots.front();
    if (options.strategy == Strategy::rightmost) {
      p = spots.back();
    } else if (options.strategy == Strategy::random) {
      p = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    }
    for (const auto& [next, c] : rewrite_at(n, w, p, options.order)) push(next, checked_mul(coeff, c));
  }
  return done;
}

UVector dp_normalize(int n, const DPWord& word, const RewriteOptions& options) {
  RewriteOptions fe = options;
  fe.order = Order::FE;
  return normalize(n, UVector(word), fe);
}

char hom_case(int n, int i, int j) {
  if (i < j) return i < n - j ? 'a' : 'b';
  if (i > j) return j >= n - i ? 'c' : 'd';
  return i < n - i ? 'e' : 'f';
}

Order hom_order(int n, int i, int j) {
  switch (hom_case(n, i, j)) {
    case 'a':
    case 'd':
    case 'e': return Order::FE;
    default: return Order::EF;
  }
}

std::vector<DPWord> hom_basis(int n, int i, int j) {
  weight(n, i);
  weight(n, j);
  std::vector<DPWord> out;
  auto push = [&](std::initializer_list<DividedPower> factors) {
    DPWord w{i, {}};
    for (const auto& d : factors)
      if (d.power > 0) w.factors.push_back(d);
    out.push_back(std::move(w));
  };
  switch (hom_case(n, i, j)) {
    case 'a':  // F_{i-t}^{(j-i+t)} E_i^{(t)}, t = 0..i
      for (int t = 0; t <= i; ++t) push({{Gen::F, j - i + t}, {Gen::E, t}});
      break;
    case 'b':  // E_{j+t}^{(t)} F_i^{(j-i+t)}, t = 0..n-j
      for (int t = 0; t <= n - j; ++t) push({{Gen::E, t}, {Gen::F, j - i + t}});
      break;
    case 'c':  // E_{i+t}^{(i-j+t)} F_i^{(t)}, t = 0..n-i
      for (int t = 0; t <= n - i; ++t) push({{Gen::E, i - j + t}, {Gen::F, t}});
      break;
    case 'd':  // F_{j-t}^{(t)} E_i^{(i-j+t)}, t = 0..j
      for (int t = 0; t <= j; ++t) push({{Gen::F, t}, {Gen::E, i - j + t}});
      break;
    case 'e':  // F_{i-t}^{(t)} E_i^{(t)}, t = 0..i
      for (int t = 0; t <= i; ++t) push({{Gen::F, t}, {Gen::E, t}});
      break;
    case 'f':  // E_{i+t}^{(t)} F_i^{(t)}, t = 0..n-i
      for (int t = 0; t <= n - i; ++t) push({{Gen::E, t}, {Gen::F, t}});
      break;
  }
  return out;
}

BnBasis::BnBasis(int n) : n_(n) {
  if (n < 0) throw InputError("n must be nonnegative");
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (DPWord& w : hom_basis(n, i, j)) {
        index_.emplace(w, words_.size());
        words_.push_back(std::move(w));
      }
}

ElementId BnBasis::index_of(const DPWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw InputError("'" + to_string(w) + "' is not an indecomposable of B_" + std::to_string(n_));
  return it->second;
}

Decomposition basis_change(const BnBasis& basis, const UVector& v) {
  const int n = basis.n();
  std::map<std::pair<int, int>, UVector> blocks;
  for (const auto& [w, c] : v.terms()) {
    if (!in_range(n, w)) continue;
    blocks[{w.source, w.target()}].add(w, c);
  }
  Decomposition out;
  for (const auto& [hom, block] : blocks) {
    RewriteOptions options;
    options.order = hom_order(n, hom.first, hom.second);
    UVector normal = normalize(n, block, options);
    for (const auto& [w, c] : normal.terms()) {
      if (!basis.contains(w))
        throw ConsistencyError("normal form word " + to_string(w) + " is not an indecomposable");
      if (c < 0)
        throw ConsistencyError("negative multiplicity " + std::to_string(c) + " of " + to_string(w) +
                               " in " + to_string(block));
      out.add(basis.index_of(w), static_cast<Multiplicity>(c));
    }
  }
  return out;
}

}  // namespace fiatcell::udot
