#pragma once

#include <stdexcept>

namespace cotzeta {

/// An iteration/term cap was reached before the requested bound was met.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An evaluation point hit (or a quadrature failed to integrate across)
/// a declared singularity.
class singularity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cotzeta
