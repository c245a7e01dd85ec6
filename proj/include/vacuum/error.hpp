#pragma once

#include <stdexcept>
#include <string>

namespace vacuum {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Operands or arguments carry incompatible SI dimensions.
class DimensionError : public Error
{
  public:
    using Error::Error;
};

/// A value left the finite reals, or an argument is outside its domain.
class NumericError : public Error
{
  public:
    using Error::Error;
};

/// Bad input data: unparsable files, missing keys, unknown units or names.
class InputError : public Error
{
  public:
    using Error::Error;
};

/// A species name the model recognises but cannot evaluate.
class UnsupportedSpeciesError : public InputError
{
  public:
    using InputError::InputError;
};

/// An iterative method (quadrature, ODE, fixed point, minimiser) failed.
class ConvergenceError : public Error
{
  public:
    using Error::Error;
};

} // namespace vacuum
