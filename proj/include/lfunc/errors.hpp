#pragma once

#include <stdexcept>

namespace lfunc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gamma kernel
struct PoleError : Error { using Error::Error; };

// series engine
struct SpecError : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };

// parameter domain
struct HyperplaneError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// Barnes quadrature
struct ContourError : Error { using Error::Error; };
struct QuadratureStall : Error { using Error::Error; };

// group engine
struct UnknownLabel : Error { using Error::Error; };
struct PresentationFailure : Error { using Error::Error; };
struct PartitionError : Error { using Error::Error; };

// verifier / io
struct SamplerExhausted : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace lfunc
