#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fiatcell/shadow.hpp"

/// Divided-power combinatorics of the sl2 categorification B_n.
///
/// Objects are 0..n. F^{(k)} moves object i to i+k, E^{(k)} moves i to i-k.
/// Object i carries the weight n - 2i, and a word is zero as soon as its path
/// leaves 0..n. The split Grothendieck group of B_n(i, j) has as a basis the
/// in-range monomials F^{(s)}E^{(t)} when i + j < n and E^{(s)}F^{(t)}
/// otherwise; these are exactly the indecomposable 1-morphisms.
namespace fiatcell::udot {

enum class Gen : std::uint8_t { E, F };

struct DividedPower {
  Gen gen = Gen::E;
  int power = 1;

  auto operator<=>(const DividedPower&) const = default;
};

/// A composite of divided powers starting at `source`. Factors are written
/// as composed: factors.back() acts first.
struct DPWord {
  int source = 0;
  std::vector<DividedPower> factors;

  /// Object reached after applying every factor.
  int target() const;
  /// Object at which factors[pos] starts acting.
  int start_of(std::size_t pos) const;

  auto operator<=>(const DPWord&) const = default;
};

DPWord identity_word(int object);
/// E_i^{(k)}, F_i^{(k)} with i the source object (k = 0 gives the identity).
DPWord e_word(int source, int power);
DPWord f_word(int source, int power);
/// a ∘ b as a word: b's factors act first. Requires source(a) == target(b).
DPWord concat(const DPWord& a, const DPWord& b);

/// True when every intermediate object stays within 0..n.
bool in_range(int n, const DPWord& w);

/// Weight of object i in B_n: n - 2i. InputError when i is outside 0..n.
int weight(int n, int object);

/// Generalized binomial coefficient m(m-1)...(m-j+1)/j! for any integer m
/// and j >= 0, computed exactly. ConsistencyError on overflow or if the
/// division were ever inexact.
std::int64_t binomial(std::int64_t m, std::int64_t j);

/// "1_0", "F_0^(1)", "F_0^(2)E_1^(1)", "E_3^(1)F_2^(1)": each factor
/// carries the object it starts from as its subscript.
std::string to_string(const DPWord& w);

/// Formal Z-combination of words. Coefficients may be negative in the middle
/// of a computation; zero coefficients are never stored.
class UVector {
 public:
  UVector() = default;
  explicit UVector(const DPWord& w, std::int64_t coeff = 1) { add(w, coeff); }

  void add(const DPWord& w, std::int64_t coeff);
  void add(const UVector& other, std::int64_t scale = 1);
  std::int64_t coefficient(const DPWord& w) const;

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<DPWord, std::int64_t>& terms() const { return terms_; }

  bool operator==(const UVector&) const = default;

 private:
  std::map<DPWord, std::int64_t> terms_;
};

std::string to_string(const UVector& v);

/// Target ordering of a normal form. FE: every F to the left of every E
/// (E acts first). EF: the reverse.
enum class Order { FE, EF };

/// How the rewriting picks the next redex inside a word.
enum class Strategy { leftmost, rightmost, random };

struct RewriteOptions {
  Order order = Order::FE;
  Strategy strategy = Strategy::leftmost;
  std::uint64_t seed = 0;
};

/// Rewrites to normal form with three rules, deleting out-of-range words
/// after every step:
///   merge  X^{(a)}X^{(b)} -> C(a+b, a) X^{(a+b)}
///   swap   E^{(a)}F^{(b)}1_λ -> Σ_j C(a-b+λ, j) F^{(b-j)}E^{(a-j)}1_λ     (FE)
///          F^{(a)}E^{(b)}1_μ -> Σ_j C(a-b-μ, j) E^{(b-j)}F^{(a-j)}1_μ     (EF)
/// where λ, μ are weights of the object the pair starts from.
UVector normalize(int n, const UVector& v, const RewriteOptions& options = {});

/// FE normal form of a single word.
UVector dp_normalize(int n, const DPWord& word, const RewriteOptions& options = {});

/// Literal encoding of the six-way case split listing the indecomposables of
/// B_n(i, j). Returns the case letter 'a'..'f'.
char hom_case(int n, int i, int j);
Order hom_order(int n, int i, int j);

/// Indecomposables of B_n(i, j) in their listed order.
std::vector<DPWord> hom_basis(int n, int i, int j);

/// All indecomposables of B_n, ordered by source, then target, then listing.
class BnBasis {
 public:
  explicit BnBasis(int n);

  int n() const { return n_; }
  const std::vector<DPWord>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  /// Basis index of a normal-form word; InputError when not a basis word.
  ElementId index_of(const DPWord& w) const;
  bool contains(const DPWord& w) const { return index_.count(w) != 0; }

 private:
  int n_;
  std::vector<DPWord> words_;
  std::map<DPWord, ElementId> index_;
};

/// Expresses v in the indecomposable basis: each (source, target) block is
/// renormalized to the ordering of its hom case, whose in-range monomials
/// are exactly the basis. ConsistencyError on a negative final coefficient.
Decomposition basis_change(const BnBasis& basis, const UVector& v);

}  // namespace fiatcell::udot
