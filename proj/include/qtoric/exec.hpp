// Execution policy for the data-parallel kernels (Groebner S-polynomial batches,
// lattice point scans, fan pair validation). Parallel and serial paths must produce
// identical results; the serial path is the reference implementation.
#pragma once

namespace qtoric {

struct Exec {
  enum class Mode { serial, parallel };
  Mode mode = Mode::parallel;

  static Exec serial() { return Exec{Mode::serial}; }
  static Exec parallel() { return Exec{Mode::parallel}; }
  bool is_parallel() const { return mode == Mode::parallel; }
};

}  // namespace qtoric
