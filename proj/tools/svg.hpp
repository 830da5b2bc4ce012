#pragma once

#include <iosfwd>
#include <span>

#include "ltiest/lattice.hpp"

namespace ltiest::io {

// Static energy-vs-k plot. Analytic engines (LTI, FD) are drawn as one
// polyline per branch label, diagonalization results (TB) as circles, one
// colour per label. x ticks sit on multiples of pi/4. Output depends only on
// the inputs.
void write_band_svg(std::ostream& out, std::span<const BandStructure> bands);

}  // namespace ltiest::io
