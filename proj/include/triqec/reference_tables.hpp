#pragma once
// Frozen readout charts for the 7-qutrit code.
//
// The phase chart classifies every single Z-type error by the eigenvalue pair
// it induces on the two X stabilizers, together with the candidate qutrits
// that share that signature.  The bit chart records, for an X1 error on each
// qutrit, the eigenvalue exponents read off the four Z stabilizers.  It comes
// in two flavors: a simplified reference form that marks every triggered cell
// with exponent 1, and the exact form carrying the true symplectic exponents
// for the default Z stabilizer set.  Renderers diff the two and report the
// cells where they disagree.

#include <array>
#include <utility>
#include <vector>

#include "triqec/mod3.hpp"

namespace triqec {

// One row of the phase-error chart: error subscript (Z1 or Z2), the omega
// exponents induced on stabilizers S1 and S2, and the candidate locations.
struct PhaseChartRow {
    int z_subscript;
    Mod3 s1_exp;
    Mod3 s2_exp;
    std::vector<int> qutrits;
};

inline const std::array<PhaseChartRow, 8>& phase_chart() {
    static const std::array<PhaseChartRow, 8> rows = {{
        {1, Mod3(2), Mod3(0), {0, 4}},
        {1, Mod3(1), Mod3(0), {2, 6}},
        {1, Mod3(0), Mod3(2), {1, 5}},
        {1, Mod3(0), Mod3(1), {3}},
        {2, Mod3(1), Mod3(0), {0, 4}},
        {2, Mod3(2), Mod3(0), {2, 6}},
        {2, Mod3(0), Mod3(1), {1, 5}},
        {2, Mod3(0), Mod3(2), {3}},
    }};
    return rows;
}

// Bit chart row: exponents on S3..S6 for an X1 error on one qutrit.  X2 rows
// are the elementwise negation mod 3 of the X1 rows.
using BitChartRow = std::array<Mod3, 4>;

namespace chart_detail {
inline BitChartRow row(int a, int b, int c, int d) {
    return {Mod3(a), Mod3(b), Mod3(c), Mod3(d)};
}
}  // namespace chart_detail

// Simplified reference chart: exponent 1 wherever the stabilizer triggers.
inline const std::array<BitChartRow, 7>& bit_chart_reference() {
    using chart_detail::row;
    static const std::array<BitChartRow, 7> rows = {{
        row(1, 0, 0, 0),
        row(1, 0, 1, 0),
        row(1, 0, 1, 1),
        row(1, 1, 1, 1),
        row(0, 1, 1, 1),
        row(0, 1, 0, 1),
        row(0, 1, 0, 0),
    }};
    return rows;
}

// Exact symplectic exponents for the default Z set.  Triggered cells agree
// with the reference chart on support; eight of them carry exponent 2.
inline const std::array<BitChartRow, 7>& bit_chart_exact() {
    using chart_detail::row;
    static const std::array<BitChartRow, 7> rows = {{
        row(1, 0, 0, 0),
        row(2, 0, 1, 0),
        row(1, 0, 2, 1),
        row(2, 1, 1, 2),
        row(0, 2, 2, 1),
        row(0, 1, 0, 2),
        row(0, 2, 0, 0),
    }};
    return rows;
}

// Cells where the exact chart disagrees with the simplified reference, as
// (z_stabilizer_index, qutrit) pairs with index 0..3 meaning S3..S6.
inline std::vector<std::pair<int, int>> bit_chart_discrepancies() {
    std::vector<std::pair<int, int>> cells;
    const auto& ref = bit_chart_reference();
    const auto& exact = bit_chart_exact();
    for (int s = 0; s < 4; ++s)
        for (int q = 0; q < 7; ++q)
            if (ref[q][s] != exact[q][s]) cells.push_back({s, q});
    return cells;
}

}  // namespace triqec
