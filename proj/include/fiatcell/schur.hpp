#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "fiatcell/green.hpp"
#include "fiatcell/report.hpp"

/// Combinatorics of the indecomposables of the 2-Schur category: margin
/// matrices, RSK and the cell classification by tableaux.
namespace fiatcell::schur {

inline constexpr int kMaxN = 4;
inline constexpr int kMaxR = 8;
/// Largest r for which double cosets are enumerated over all of S_r.
inline constexpr int kMaxCosetR = 6;

/// Weakly decreasing entries in 1..n.
using DominantVector = std::vector<int>;
/// Number of positions holding each value 1..n.
using Content = std::vector<int>;

/// Weakly decreasing vectors of length r over 1..n, lexicographically
/// descending: (2,2), (2,1), (1,1) for n = r = 2.
std::vector<DominantVector> enumerate_dominant(int n, int r);

/// Lengths of the maximal blocks of equal consecutive entries.
std::vector<int> stabilizer_composition(const DominantVector& v);

Content content(const std::vector<int>& entries, int n);
/// Inverse of content on dominant vectors.
DominantVector dominant_from_content(const Content& c);

/// n×n nonnegative integer matrix. Row margins are the content of the
/// target, column margins the content of the source.
struct MarginMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major

  int at(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
  int& at(int row, int col) { return entries[static_cast<std::size_t>(row * n + col)]; }
  int total() const;
  Content row_margins() const;
  Content col_margins() const;
  MarginMatrix transpose() const;

  auto operator<=>(const MarginMatrix&) const = default;
};

/// All n×n matrices with entry sum r, ordered by (row margins, column
/// margins, entries).
std::vector<MarginMatrix> enumerate_basis(int n, int r);

/// Matrices with prescribed margins, in entry order.
std::vector<MarginMatrix> matrices_with_margins(const Content& rows, const Content& cols);

/// x in the orbit of the target u that is weakly increasing on every block
/// of equal entries of the source v.
bool is_antidominant(const std::vector<int>& x, const DominantVector& source);

/// A(k, l) = #{p : x_p = k, v_p = l}.
MarginMatrix matrix_from_antidominant(const std::vector<int>& x, const DominantVector& source, int n);
/// Inverse: fills each block of v with its values in ascending order.
/// InputError when the column margins of A differ from the content of v.
std::vector<int> antidominant_from_matrix(const MarginMatrix& a, const DominantVector& source);

/// |S_v \ S_r / S_u| by union-find over all of S_r. InputError unless
/// r <= kMaxCosetR.
std::size_t double_coset_count(const DominantVector& source, const DominantVector& target);

/// Rows of weakly decreasing length; rows weakly increase, columns strictly.
using Tableau = std::vector<std::vector<int>>;

std::vector<int> shape(const Tableau& t);
bool is_semistandard(const Tableau& t, int n);

struct RskPair {
  Tableau insertion;
  Tableau recording;
  bool operator==(const RskPair&) const = default;
};

/// Row insertion of the biword of A read in row-major order: column indices
/// go into the insertion tableau, row indices into the recording tableau.
RskPair rsk(const MarginMatrix& a);
/// InputError on tableaux that are not semistandard over 1..n or differ in
/// shape.
MarginMatrix rsk_inverse(const RskPair& pair, int n);

MarginMatrix involution_transpose(const MarginMatrix& a);

/// Partitions of r with at most max_parts parts, in reverse lexicographic
/// order.
std::vector<std::vector<int>> partitions(int r, int max_parts);

/// All semistandard tableaux of the given shape over 1..n.
std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int n);

struct SchurCells {
  std::vector<MarginMatrix> basis;
  CellPartition left;
  CellPartition right;
  CellPartition two_sided;
  /// Shape of each two-sided cell, in class order.
  std::vector<std::vector<int>> shapes;
};

/// Left cells are fibers of the insertion tableau, right cells of the
/// recording tableau, two-sided cells of the common shape.
SchurCells cells_via_rsk(int n, int r, std::size_t workers = worker_count());

/// Each left cell meets each right cell of its shape in exactly one matrix,
/// and no right cell of another shape.
Report schur_strong_regularity(const SchurCells& cells);

/// Full check list for S(n, r). InputError outside 1 <= n <= kMaxN,
/// 1 <= r <= kMaxR.
Report verify_schur(int n, int r, std::size_t workers = worker_count());

/// {"format", "n", "r", "counts", "shapes", "checks"}; matrices as
/// row-major integer arrays.
Json schur_report_json(int n, int r, std::size_t workers = worker_count());

}  // namespace fiatcell::schur
