#pragma once

// Published Shannon-entropy reference values for the three potential
// families, transcribed verbatim from the literature source these results
// are benchmarked against (harmonic, pseudoharmonic / shifted
// pseudoharmonic, inverse-square; all with ell = 0, M = 1, |e| = 1).
// param1 holds omega (table 1), r0 (table 2) or b (table 3); param2 holds
// De for table 2 and is zero elsewhere.

#include <vector>

namespace dqm {

struct ReferenceRow {
    int table = 1;       ///< 1 = harmonic, 2 = pseudoharmonic, 3 = inverse-square
    int n = 0;
    double alpha = 1.0;
    double param1 = 1.0;
    double param2 = 0.0;
    double B = 1.0;
    double phi = 0.0;
    double s_r = 0.0;
    double s_p = 0.0;
    double s_total = 0.0;
};

/// All printed rows of the requested table, in publication order, including
/// the repeated anchor rows (tables 1 and 3: 36 lines, table 2: 45). The
/// source prints 0.67761 for one repetition of a row given elsewhere as
/// 0.67760; both are kept verbatim.
const std::vector<ReferenceRow>& reference_table(int which);

}  // namespace dqm
