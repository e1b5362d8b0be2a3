#pragma once

namespace spinblock {

// Serial runs the plain reference implementation; Parallel the OpenMP
// kernel.  Both produce identical results.
enum class Exec { Serial, Parallel };

} // namespace spinblock
