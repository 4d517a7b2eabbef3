#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

struct BadRational : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A cyclotomic value was expected to collapse into the rational subfield.
struct NotRational : std::domain_error {
  using std::domain_error::domain_error;
};

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidLabel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InapplicableCase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The recursive coefficient system had no consistent solution.
struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroComposite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotWStable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cherednik
