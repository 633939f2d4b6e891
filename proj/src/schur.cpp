#include "fiatcell/schur.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "fiatcell/errors.hpp"
#include "fiatcell/udot.hpp"

namespace fiatcell::schur {

namespace {

void check_range(int n, int r) {
  if (n < 1 || n > kMaxN) throw InputError("n must lie in 1.." + std::to_string(kMaxN));
  if (r < 1 || r > kMaxR) throw InputError("r must lie in 1.." + std::to_string(kMaxR));
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string describe(const MarginMatrix& a) {
  std::string out = "[";
  for (int k = 0; k < a.n; ++k) {
    std::vector<int> row(a.entries.begin() + k * a.n, a.entries.begin() + (k + 1) * a.n);
    out += (k ? "," : "") + join(row);
  }
  return out + "]";
}

/// Fills `out` with all weak compositions of `total` into `parts` parts, in
/// lexicographically descending order.
void weak_compositions(int total, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    weak_compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

/// Partition of the basis indices by a key, classes ordered by smallest
/// member.
template <typename Key>
CellPartition fibers(CellKind kind, const std::vector<Key>& keys) {
  CellPartition p;
  p.kind = kind;
  p.class_of.resize(keys.size());
  std::map<Key, std::size_t> seen;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = seen.emplace(keys[i], p.classes.size());
    if (inserted) p.classes.emplace_back();
    p.classes[it->second].push_back(i);
    p.class_of[i] = it->second;
  }
  return p;
}

}  // namespace

std::vector<DominantVector> enumerate_dominant(int n, int r) {
  std::vector<DominantVector> out;
  DominantVector v;
  auto rec = [&](auto&& self, int cap) -> void {
    if (static_cast<int>(v.size()) == r) {
      out.push_back(v);
      return;
    }
    for (int x = cap; x >= 1; --x) {
      v.push_back(x);
      self(self, x);
      v.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::vector<int> stabilizer_composition(const DominantVector& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] != v[i - 1])
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

Content content(const std::vector<int>& entries, int n) {
  Content c(static_cast<std::size_t>(n), 0);
  for (int x : entries) {
    if (x < 1 || x > n) throw InputError("entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
    ++c[static_cast<std::size_t>(x - 1)];
  }
  return c;
}

DominantVector dominant_from_content(const Content& c) {
  DominantVector v;
  for (int value = static_cast<int>(c.size()); value >= 1; --value)
    v.insert(v.end(), static_cast<std::size_t>(c[static_cast<std::size_t>(value - 1)]), value);
  return v;
}

int MarginMatrix::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

Content MarginMatrix::row_margins() const {
  Content c(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) c[static_cast<std::size_t>(k)] += at(k, l);
  return c;
}

Content MarginMatrix::col_margins() const {
  Content c(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) c[static_cast<std::size_t>(l)] += at(k, l);
  return c;
}

MarginMatrix MarginMatrix::transpose() const {
  MarginMatrix t{n, entries};
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) t.at(l, k) = at(k, l);
  return t;
}

std::vector<MarginMatrix> matrices_with_margins(const Content& rows, const Content& cols) {
  const int n = static_cast<int>(rows.size());
  std::vector<MarginMatrix> out;
  MarginMatrix a{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
  Content remaining = cols;
  auto rec = [&](auto&& self, int cell, int row_left) -> void {
    const int k = cell / n;
    const int l = cell % n;
    if (l == n - 1) {
      if (row_left > remaining[static_cast<std::size_t>(l)]) return;
      a.at(k, l) = row_left;
      remaining[static_cast<std::size_t>(l)] -= row_left;
      if (k == n - 1)
        out.push_back(a);
      else
        self(self, cell + 1, rows[static_cast<std::size_t>(k + 1)]);
      remaining[static_cast<std::size_t>(l)] += row_left;
      a.at(k, l) = 0;
      return;
    }
    const int cap = std::min(row_left, remaining[static_cast<std::size_t>(l)]);
    for (int x = 0; x <= cap; ++x) {
      a.at(k, l) = x;
      remaining[static_cast<std::size_t>(l)] -= x;
      self(self, cell + 1, row_left - x);
      remaining[static_cast<std::size_t>(l)] += x;
    }
    a.at(k, l) = 0;
  };
  if (n > 0 && std::accumulate(rows.begin(), rows.end(), 0) == std::accumulate(cols.begin(), cols.end(), 0))
    rec(rec, 0, rows[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MarginMatrix> enumerate_basis(int n, int r) {
  std::vector<std::vector<int>> contents;
  std::vector<int> prefix;
  weak_compositions(r, n, prefix, contents);
  std::reverse(contents.begin(), contents.end());
  std::vector<MarginMatrix> out;
  for (const Content& rows : contents)
    for (const Content& cols : contents) {
      auto block = matrices_with_margins(rows, cols);
      out.insert(out.end(), block.begin(), block.end());
    }
  return out;
}

bool is_antidominant(const std::vector<int>& x, const DominantVector& source) {
  if (x.size() != source.size()) return false;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (source[i] == source[i + 1] && x[i] > x[i + 1]) return false;
  return true;
}

MarginMatrix matrix_from_antidominant(const std::vector<int>& x, const DominantVector& source, int n) {
  if (x.size() != source.size()) throw InputError("vectors differ in length");
  MarginMatrix a{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p] < 1 || x[p] > n || source[p] < 1 || source[p] > n) throw InputError("entry outside 1..n");
    ++a.at(x[p] - 1, source[p] - 1);
  }
  return a;
}

std::vector<int> antidominant_from_matrix(const MarginMatrix& a, const DominantVector& source) {
  if (a.col_margins() != content(source, a.n)) throw InputError("column margins differ from source content");
  std::vector<int> x;
  x.reserve(source.size());
  // Blocks of v appear in descending value order; inside a block the values
  // of x ascend.
  for (int l = a.n; l >= 1; --l)
    for (int k = 1; k <= a.n; ++k) x.insert(x.end(), static_cast<std::size_t>(a.at(k - 1, l - 1)), k);
  return x;
}

std::size_t double_coset_count(const DominantVector& source, const DominantVector& target) {
  const int r = static_cast<int>(source.size());
  if (static_cast<int>(target.size()) != r) throw InputError("vectors differ in length");
  if (r > kMaxCosetR) throw InputError("double cosets are enumerated only for r <= " + std::to_string(kMaxCosetR));

  std::vector<std::vector<int>> perms;
  std::vector<int> w(static_cast<std::size_t>(r));
  std::iota(w.begin(), w.end(), 0);
  do perms.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);

  std::vector<std::size_t> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) { parent[find(x)] = find(y); };

  for (std::size_t i = 0; i < perms.size(); ++i) {
    const auto& perm = perms[i];
    for (int p = 0; p + 1 < r; ++p) {
      // s ∘ w with s a transposition fixing v.
      if (source[static_cast<std::size_t>(p)] == source[static_cast<std::size_t>(p + 1)]) {
        std::vector<int> left = perm;
        for (int& x : left) {
          if (x == p)
            x = p + 1;
          else if (x == p + 1)
            x = p;
        }
        unite(i, index.at(left));
      }
      // w ∘ t with t a transposition fixing u.
      if (target[static_cast<std::size_t>(p)] == target[static_cast<std::size_t>(p + 1)]) {
        std::vector<int> right = perm;
        std::swap(right[static_cast<std::size_t>(p)], right[static_cast<std::size_t>(p + 1)]);
        unite(i, index.at(right));
      }
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (find(i) == i) ++roots;
  return roots;
}

std::vector<int> shape(const Tableau& t) {
  std::vector<int> s;
  for (const auto& row : t) s.push_back(static_cast<int>(row.size()));
  return s;
}

bool is_semistandard(const Tableau& t, int n) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].empty()) return false;
    if (i > 0 && t[i].size() > t[i - 1].size()) return false;
    for (std::size_t j = 0; j < t[i].size(); ++j) {
      int x = t[i][j];
      if (x < 1 || x > n) return false;
      if (j > 0 && t[i][j - 1] > x) return false;
      if (i > 0 && t[i - 1][j] >= x) return false;
    }
  }
  return true;
}

RskPair rsk(const MarginMatrix& a) {
  RskPair out;
  for (int k = 1; k <= a.n; ++k)
    for (int l = 1; l <= a.n; ++l)
      for (int c = 0; c < a.at(k - 1, l - 1); ++c) {
        int x = l;
        std::size_t row = 0;
        while (true) {
          if (row == out.insertion.size()) {
            out.insertion.push_back({x});
            out.recording.push_back({k});
            break;
          }
          auto& cells = out.insertion[row];
          auto it = std::upper_bound(cells.begin(), cells.end(), x);
          if (it == cells.end()) {
            cells.push_back(x);
            out.recording[row].push_back(k);
            break;
          }
          std::swap(*it, x);
          ++row;
        }
      }
  return out;
}

MarginMatrix rsk_inverse(const RskPair& pair, int n) {
  if (n < 1) throw InputError("n must be positive");
  if (!is_semistandard(pair.insertion, n) || !is_semistandard(pair.recording, n))
    throw InputError("tableaux must be semistandard over 1.." + std::to_string(n));
  if (shape(pair.insertion) != shape(pair.recording)) throw InputError("tableaux differ in shape");

  Tableau p = pair.insertion;
  Tableau q = pair.recording;
  MarginMatrix a{n, std::vector<int>(static_cast<std::size_t>(n * n), 0)};
  while (!q.empty()) {
    // Largest recording entry, rightmost among equals; it sits at a corner.
    std::size_t row = 0;
    int best = 0;
    std::size_t best_col = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      std::size_t j = q[i].size() - 1;
      if (q[i][j] > best || (q[i][j] == best && j > best_col)) {
        best = q[i][j];
        best_col = j;
        row = i;
      }
    }
    q[row].pop_back();
    int x = p[row].back();
    p[row].pop_back();
    for (std::size_t i = row; i-- > 0;) {
      auto& cells = p[i];
      auto it = std::lower_bound(cells.begin(), cells.end(), x);
      --it;  // largest entry strictly below x; exists by column strictness
      std::swap(*it, x);
    }
    if (q[row].empty()) {
      q.pop_back();
      p.pop_back();
    }
    ++a.at(best - 1, x - 1);
  }
  return a;
}

MarginMatrix involution_transpose(const MarginMatrix& a) { return a.transpose(); }

std::vector<std::vector<int>> partitions(int r, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(left, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, left - part, part);
      current.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape_, int n) {
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape_) t.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = cells[pos];
    int low = 1;
    if (j > 0) low = std::max(low, t[i][j - 1]);
    if (i > 0) low = std::max(low, t[i - 1][j] + 1);
    for (int x = low; x <= n; ++x) {
      t[i][j] = x;
      self(self, pos + 1);
    }
    t[i][j] = 0;
  };
  rec(rec, 0);
  return out;
}

SchurCells cells_via_rsk(int n, int r, std::size_t workers) {
  check_range(n, r);
  SchurCells out;
  out.basis = enumerate_basis(n, r);
  std::vector<RskPair> pairs(out.basis.size());
  parallel_for(out.basis.size(), [&](std::size_t i) { pairs[i] = rsk(out.basis[i]); }, workers);
  std::vector<Tableau> ps, qs;
  std::vector<std::vector<int>> shapes;
  for (const auto& pr : pairs) {
    ps.push_back(pr.insertion);
    qs.push_back(pr.recording);
    shapes.push_back(shape(pr.insertion));
  }
  out.left = fibers(CellKind::left, ps);
  out.right = fibers(CellKind::right, qs);
  out.two_sided = fibers(CellKind::two_sided, shapes);
  for (const auto& cls : out.two_sided.classes) out.shapes.push_back(shapes[cls.front()]);
  return out;
}

Report schur_strong_regularity(const SchurCells& cells) {
  Report report("Schur cell intersections");
  std::vector<std::string> witnesses;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> meets;
  for (std::size_t i = 0; i < cells.basis.size(); ++i) ++meets[{cells.left.class_of[i], cells.right.class_of[i]}];
  auto shape_of_left = [&](std::size_t l) { return cells.two_sided.class_of[cells.left.classes[l].front()]; };
  auto shape_of_right = [&](std::size_t r) { return cells.two_sided.class_of[cells.right.classes[r].front()]; };
  for (std::size_t l = 0; l < cells.left.size(); ++l)
    for (std::size_t r = 0; r < cells.right.size(); ++r) {
      auto it = meets.find({l, r});
      std::size_t count = it == meets.end() ? 0 : it->second;
      std::size_t expected = shape_of_left(l) == shape_of_right(r) ? 1 : 0;
      if (count != expected && witnesses.size() < 10)
        witnesses.push_back("left cell " + std::to_string(l) + " meets right cell " + std::to_string(r) + " in " +
                            std::to_string(count));
    }
  bool nested = true;
  for (std::size_t i = 0; i < cells.basis.size(); ++i)
    if (shape_of_left(cells.left.class_of[i]) != cells.two_sided.class_of[i] ||
        shape_of_right(cells.right.class_of[i]) != cells.two_sided.class_of[i])
      nested = false;
  report.add("left and right cells nest in two-sided cells", nested);
  report.add("left and right cells of one shape meet in exactly one matrix", witnesses.empty(), witnesses,
             Json{{"left_cells", cells.left.size()}, {"right_cells", cells.right.size()}});
  return report;
}

Report verify_schur(int n, int r, std::size_t workers) {
  check_range(n, r);
  Report report("S(" + std::to_string(n) + "," + std::to_string(r) + ")");
  const std::vector<DominantVector> dominant = enumerate_dominant(n, r);
  report.add("dominant vectors counted by C(n+r-1, r)",
             dominant.size() == static_cast<std::size_t>(udot::binomial(n + r - 1, r)), {},
             Json{{"count", dominant.size()}});

  SchurCells cells = cells_via_rsk(n, r, workers);
  const std::size_t expected_total = static_cast<std::size_t>(udot::binomial(n * n + r - 1, r));
  report.add("basis size = C(n^2+r-1, r)", cells.basis.size() == expected_total, {},
             Json{{"count", cells.basis.size()}});

  std::vector<std::string> round, law, swap;
  for (const MarginMatrix& a : cells.basis) {
    RskPair pr = rsk(a);
    if (rsk_inverse(pr, n) != a && round.size() < 10) round.push_back(describe(a));
    bool contents_ok = is_semistandard(pr.insertion, n) && is_semistandard(pr.recording, n) &&
                       shape(pr.insertion) == shape(pr.recording);
    if (contents_ok) {
      std::vector<int> p_entries, q_entries;
      for (const auto& row : pr.insertion) p_entries.insert(p_entries.end(), row.begin(), row.end());
      for (const auto& row : pr.recording) q_entries.insert(q_entries.end(), row.begin(), row.end());
      contents_ok = content(p_entries, n) == a.col_margins() && content(q_entries, n) == a.row_margins();
    }
    if (!contents_ok && law.size() < 10) law.push_back(describe(a));
    RskPair tp = rsk(involution_transpose(a));
    if ((tp.insertion != pr.recording || tp.recording != pr.insertion) && swap.size() < 10)
      swap.push_back(describe(a));
  }
  report.add("rsk inverse roundtrip", round.empty(), round);
  report.add("content(P) = column margins, content(Q) = row margins", law.empty(), law);
  report.add("transpose swaps P and Q", swap.empty(), swap);

  std::int64_t ssyt_squares = 0;
  const auto shapes = partitions(r, n);
  for (const auto& lambda : shapes) {
    auto count = static_cast<std::int64_t>(enumerate_ssyt(lambda, n).size());
    ssyt_squares += count * count;
  }
  report.add("sum of squared SSYT counts = C(n^2+r-1, r)",
             ssyt_squares == static_cast<std::int64_t>(expected_total), {},
             Json{{"sum", ssyt_squares}});
  report.add("two-sided cells = partitions of r with <= n parts", cells.two_sided.size() == shapes.size(), {},
             Json{{"cells", cells.two_sided.size()}, {"partitions", shapes.size()}});
  report.append(schur_strong_regularity(cells));

  std::vector<std::string> conversion;
  for (const DominantVector& source : dominant)
    for (const DominantVector& target : dominant) {
      auto block = matrices_with_margins(content(target, n), content(source, n));
      std::set<std::vector<int>> images;
      for (const MarginMatrix& a : block) {
        std::vector<int> x = antidominant_from_matrix(a, source);
        if (!is_antidominant(x, source) || content(x, n) != content(target, n) ||
            matrix_from_antidominant(x, source, n) != a)
          conversion.push_back(describe(a));
        images.insert(x);
      }
      // Every antidominant element of the target orbit is hit.
      std::vector<int> orbit = target;
      std::sort(orbit.begin(), orbit.end());
      std::size_t antidominant = 0;
      do
        if (is_antidominant(orbit, source)) ++antidominant;
      while (std::next_permutation(orbit.begin(), orbit.end()));
      if (antidominant != images.size() || images.size() != block.size())
        conversion.push_back(join(source) + " -> " + join(target));
    }
  report.add("margin matrices <-> antidominant vectors bijective", conversion.empty(), conversion);

  if (r <= kMaxCosetR) {
    std::vector<std::string> cosets;
    for (const DominantVector& source : dominant)
      for (const DominantVector& target : dominant) {
        std::size_t count = matrices_with_margins(content(target, n), content(source, n)).size();
        if (double_coset_count(source, target) != count)
          cosets.push_back(join(source) + " -> " + join(target));
      }
    report.add("margin matrices per hom = double coset count", cosets.empty(), cosets);
  }
  return report;
}

Json schur_report_json(int n, int r, std::size_t workers) {
  Report checks = verify_schur(n, r, workers);
  SchurCells cells = cells_via_rsk(n, r, workers);
  Json shapes = Json::array();
  for (std::size_t c = 0; c < cells.two_sided.size(); ++c) {
    std::set<std::size_t> lefts, rights;
    Json matrices = Json::array();
    for (std::size_t i : cells.two_sided.classes[c]) {
      lefts.insert(cells.left.class_of[i]);
      rights.insert(cells.right.class_of[i]);
      matrices.push_back(cells.basis[i].entries);
    }
    Json entry;
    entry["shape"] = cells.shapes[c];
    entry["size"] = cells.two_sided.classes[c].size();
    entry["left_cells"] = lefts.size();
    entry["right_cells"] = rights.size();
    entry["matrices"] = std::move(matrices);
    shapes.push_back(std::move(entry));
  }
  Json j;
  j["format"] = 1;
  j["n"] = n;
  j["r"] = r;
  j["counts"] = {{"matrices", cells.basis.size()},
                 {"two_sided_cells", cells.two_sided.size()},
                 {"left_cells", cells.left.size()},
                 {"right_cells", cells.right.size()}};
  j["shapes"] = std::move(shapes);
  j["checks"] = checks.to_json();
  return j;
}

}  // namespace fiatcell::schur
