#pragma once

#include <cstddef>
#include <vector>

#include "fiatcell/matrix.hpp"
#include "fiatcell/parallel.hpp"
#include "fiatcell/report.hpp"
#include "fiatcell/shadow.hpp"
#include "fiatcell/udot.hpp"

/// The shadow of B_n and its verification suite.
namespace fiatcell::bn {

/// Largest n accepted by build_bn; exhaustive triple checks stay well under
/// a minute up to here.
inline constexpr int kMaxN = 8;

/// Shadow of B_n: elements are the indecomposables in BnBasis order, the
/// table is basis_change(dp_normalize(a ∘ b)), and the involution is the
/// adjoint F_i^{(k)} <-> E_{i+k}^{(k)} extended anti-multiplicatively.
/// InputError unless 1 <= n <= kMaxN.
Shadow build_bn(int n, std::size_t workers = worker_count());

/// Adjoint of a word: reverse the factors, swap E and F.
udot::DPWord adjoint(const udot::DPWord& w);

/// EF ⊕ 1^{⊕i} ≅ FE ⊕ 1^{⊕(n-i)} at every object and the divided-power
/// merges E^k ≅ (E^{(k)})^{⊕k!}, F^k ≅ (F^{(k)})^{⊕k!}, checked as
/// decomposition identities inside the table.
Report verify_relations(int n, const Shadow& s);

/// Action on the rank-one Grothendieck groups of the objects:
/// [F_i^{(k)}] = C(i+k, k), [E_{i+k}^{(k)}] = C(n-i, k), composites by
/// product. Throws ConsistencyError unless act(a)·act(b) equals
/// Σ_c mult(c, a∘b)·act(c) for every composable pair.
std::vector<IntMatrix> defining_action(int n, const Shadow& s);

/// Cell count, completeness and irredundancy of the listed left/right cell
/// generators, strong regularity, constancy of m_F on right cells.
Report bn_cells_report(int n, const Shadow& s, std::size_t workers = worker_count());

/// Cell module of the left cell of 1_0 against defining_action under
/// F_0^{(k)} <-> object k.
Report defining_representation_check(int n, const Shadow& s);

/// Compares B_{n-2} with B_n through the index shift i -> i+1 on every
/// object and factor. Outcome is recorded, not asserted: a failing pair
/// shows up as a failed check with witnesses. InputError unless n >= 3.
Report recursion_check(int n, std::size_t workers = worker_count());

/// Everything above plus element counts, associativity and thick ideals.
Report verify_bn(int n, std::size_t workers = worker_count());

}  // namespace fiatcell::bn
