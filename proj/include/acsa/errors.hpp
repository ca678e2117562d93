#pragma once

#include <stdexcept>
#include <string>

namespace acsa
{

/// Base class for all library errors.
struct error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Input text (JSON, cycle notation, scalar strings) that cannot be parsed
/// or violates a schema invariant.
struct parse_error : error
{
  using error::error;
};

/// A mathematical precondition does not hold (wrong diameter, degenerate
/// spectrum, singular matrix, division by zero, ...).
struct precondition_error : error
{
  using error::error;
};

/// An arithmetic step would require adjoining a third independent square
/// root; the scalar field is limited to Q(sqrt(s1), sqrt(s2)).
struct unsupported_extension : error
{
  using error::error;
};

} // namespace acsa
