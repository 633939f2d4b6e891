#pragma once

#include <cstddef>

#include "fiatcell/parallel.hpp"
#include "fiatcell/report.hpp"
#include "fiatcell/shadow.hpp"

namespace fiatcell {

/// Construction-independent checks of a loaded shadow: associativity, Green
/// preorders, cell nesting, thick ideals against up-sets. Strong regularity
/// and m_F constancy are recorded in the details, not asserted.
Report audit_shadow(const Shadow& s, std::size_t workers = worker_count());

}  // namespace fiatcell
