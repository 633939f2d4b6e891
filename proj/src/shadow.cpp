#include "fiatcell/shadow.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fiatcell/errors.hpp"

namespace fiatcell {

Decomposition Decomposition::single(ElementId e, Multiplicity m) {
  Decomposition d;
  d.add(e, m);
  return d;
}

void Decomposition::add(ElementId e, Multiplicity m) {
  if (m == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, ElementId id) { return t.first < id; });
  if (it != terms_.end() && it->first == e)
    it->second += m;
  else
    terms_.insert(it, {e, m});
}

void Decomposition::add(const Decomposition& other, Multiplicity scale) {
  if (scale == 0) return;
  for (const auto& [e, m] : other.terms_) add(e, m * scale);
}

Multiplicity Decomposition::multiplicity(ElementId e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, ElementId id) { return t.first < id; });
  return (it != terms_.end() && it->first == e) ? it->second : 0;
}

std::vector<ElementId> Decomposition::support() const {
  std::vector<ElementId> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

namespace {

const Decomposition& zero_decomposition() {
  static const Decomposition zero;
  return zero;
}

}  // namespace

Shadow::Shadow(std::vector<int> objects, std::vector<Element> elements,
               std::vector<TableEntry> table, std::optional<std::vector<ElementId>> involution,
               bool partial)
    : objects_(std::move(objects)),
      elements_(std::move(elements)),
      involution_(std::move(involution)),
      partial_(partial) {
  validate_structure(table);
  if (involution_) validate_involution();
}

void Shadow::validate_structure(const std::vector<TableEntry>& table) {
  std::set<int> seen_objects;
  for (int o : objects_)
    if (!seen_objects.insert(o).second)
      throw StructureError("duplicate object " + std::to_string(o));

  const std::size_t n = elements_.size();
  identities_.assign(objects_.size(), n);
  auto object_pos = [&](int o) -> std::size_t {
    auto it = std::find(objects_.begin(), objects_.end(), o);
    return static_cast<std::size_t>(it - objects_.begin());
  };

  for (ElementId id = 0; id < n; ++id) {
    const Element& e = elements_[id];
    if (!index_.emplace(e.name, id).second)
      throw StructureError("duplicate element id '" + e.name + "'");
    std::size_t sp = object_pos(e.source), tp = object_pos(e.target);
    if (sp == objects_.size() || tp == objects_.size())
      throw StructureError("element '" + e.name + "' has an unknown source or target object");
    if (e.identity) {
      if (e.source != e.target)
        throw StructureError("identity '" + e.name + "' has source != target");
      if (identities_[sp] != n)
        throw StructureError("object " + std::to_string(e.source) + " has two identities");
      identities_[sp] = id;
    }
  }
  for (std::size_t k = 0; k < objects_.size(); ++k)
    if (identities_[k] == n)
      throw StructureError("object " + std::to_string(objects_[k]) + " has no identity");

  products_.assign(n * n, Decomposition{});
  truncated_.assign(n * n, 0);
  std::vector<char> filled(n * n, 0);
  for (const TableEntry& entry : table) {
    if (entry.left >= n || entry.right >= n)
      throw StructureError("table entry refers to an unknown element");
    const Element& a = elements_[entry.left];
    const Element& b = elements_[entry.right];
    if (a.source != b.target)
      throw StructureError("table entry for non-composable pair (" + a.name + ", " + b.name + ")");
    std::size_t slot = entry.left * n + entry.right;
    if (filled[slot])
      throw StructureError("duplicate table entry (" + a.name + ", " + b.name + ")");
    if (entry.truncated && !partial_)
      throw StructureError("truncated entry (" + a.name + ", " + b.name + ") in a non-partial shadow");
    for (const auto& [c, m] : entry.result.terms()) {
      if (c >= n) throw StructureError("table result refers to an unknown element");
      if (m == 0) throw StructureError("zero multiplicity in table result");
      const Element& h = elements_[c];
      if (h.source != b.source || h.target != a.target)
        throw StructureError("result '" + h.name + "' of (" + a.name + ", " + b.name +
                             ") has the wrong source/target");
    }
    filled[slot] = 1;
    products_[slot] = entry.result;
    truncated_[slot] = entry.truncated ? 1 : 0;
  }

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (composable(a, b) && !filled[a * n + b])
        throw StructureError("incomplete table: no entry for (" + elements_[a].name + ", " +
                             elements_[b].name + ")");

  for (ElementId a = 0; a < n; ++a) {
    const Decomposition expected = Decomposition::single(a);
    ElementId left_unit = identity(elements_[a].target);
    ElementId right_unit = identity(elements_[a].source);
    if (products_[left_unit * n + a] != expected || products_[a * n + right_unit] != expected)
      throw StructureError("identity does not act strictly on '" + elements_[a].name + "'");
  }
}

void Shadow::validate_involution() const {
  const auto& inv = *involution_;
  const std::size_t n = elements_.size();
  if (inv.size() != n) throw StructureError("involution does not cover every element");
  for (ElementId a = 0; a < n; ++a) {
    if (inv[a] >= n) throw StructureError("involution maps to an unknown element");
    const Element& e = elements_[a];
    const Element& img = elements_[inv[a]];
    if (inv[inv[a]] != a) throw StructureError("involution is not self-inverse at '" + e.name + "'");
    if (img.source != e.target || img.target != e.source)
      throw StructureError("involution does not swap source and target at '" + e.name + "'");
    if (e.identity && inv[a] != a) throw StructureError("involution moves identity '" + e.name + "'");
  }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (!composable(a, b) || truncated(a, b) || truncated(inv[b], inv[a])) continue;
      Decomposition mapped;
      for (const auto& [c, m] : product(a, b).terms()) mapped.add(inv[c], m);
      if (mapped != product(inv[b], inv[a]))
        throw StructureError("involution is not an anti-homomorphism at (" + elements_[a].name +
                             ", " + elements_[b].name + ")");
    }
}

std::optional<ElementId> Shadow::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId Shadow::at(const std::string& name) const {
  auto id = find(name);
  if (!id) throw InputError("unknown element id '" + name + "'");
  return *id;
}

ElementId Shadow::identity(int object) const {
  auto it = std::find(objects_.begin(), objects_.end(), object);
  if (it == objects_.end()) throw InputError("unknown object " + std::to_string(object));
  return identities_[static_cast<std::size_t>(it - objects_.begin())];
}

const Decomposition& Shadow::product(ElementId a, ElementId b) const {
  if (!composable(a, b)) return zero_decomposition();
  return products_[a * size() + b];
}

ElementId Shadow::star(ElementId a) const {
  if (!involution_) throw PreconditionError("shadow has no involution");
  return (*involution_)[a];
}

std::vector<TableEntry> Shadow::table() const {
  std::vector<TableEntry> out;
  for (ElementId a = 0; a < size(); ++a)
    for (ElementId b = 0; b < size(); ++b)
      if (composable(a, b)) out.push_back({a, b, product(a, b), truncated(a, b)});
  return out;
}

bool Shadow::operator==(const Shadow& other) const {
  return objects_ == other.objects_ && elements_ == other.elements_ &&
         products_ == other.products_ && truncated_ == other.truncated_ &&
         involution_ == other.involution_ && partial_ == other.partial_;
}

const Decomposition& compose(const Shadow& s, ElementId a, ElementId b) {
  if (a >= s.size() || b >= s.size()) throw InputError("element index out of range");
  return s.product(a, b);
}

Decomposition compose(const Shadow& s, const std::string& a, const std::string& b) {
  return s.product(s.at(a), s.at(b));
}

Decomposition compose(const Shadow& s, const Decomposition& x, const Decomposition& y) {
  Decomposition out;
  for (const auto& [a, ma] : x.terms())
    for (const auto& [b, mb] : y.terms()) out.add(s.product(a, b), ma * mb);
  return out;
}

std::string to_string(const Shadow& s, const Decomposition& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, m] : d.terms()) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << s.element(e).name;
  }
  return os.str();
}

}  // namespace fiatcell
