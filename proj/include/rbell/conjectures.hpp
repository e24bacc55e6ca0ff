#pragma once

// Scans over the open conjectures on restricted Bell polynomials. These
// never assert: every (m, n) gets a note row, and a counterexample is
// recorded as a failure in a report_only report.

#include "rbell/report.hpp"

#include <cstddef>

namespace rbell {

/// For each m in [1, m_max] and n in [1, n_max]: are the roots of
/// B_{n,<=m}(x) real and nonpositive? Rows where m is 3 or 4 are scanned
/// and reported but do not count as violations.
IdentityReport scan_real_rootedness(unsigned m_min, unsigned m_max, std::size_t n_max);

/// For each m in [1, m_max] and n in [0, n_max]: is the row
/// (T(n,k))_{k>=0} of the second-kind AtMost-m triangle log-concave?
IdentityReport scan_row_log_concavity(unsigned m_max, std::size_t n_max);

}  // namespace rbell
