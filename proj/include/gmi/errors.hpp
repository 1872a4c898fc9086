#pragma once

#include <stdexcept>
#include <string>

namespace gmi {

// Numerical failures (CLI exit code 3). Configuration problems use ConfigError (exit code 2).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficient : NumericalError { using NumericalError::NumericalError; };
struct NotSpd : NumericalError { using NumericalError::NumericalError; };
struct SingularTriangular : NumericalError { using NumericalError::NumericalError; };
struct SvdNoConvergence : NumericalError { using NumericalError::NumericalError; };
struct ChartSingular : NumericalError { using NumericalError::NumericalError; };
struct DegreeTooHigh : NumericalError { using NumericalError::NumericalError; };
struct NodeCollision : NumericalError { using NumericalError::NumericalError; };
struct ArnoldiBreakdown : NumericalError { using NumericalError::NumericalError; };
struct DegenerateRange : NumericalError { using NumericalError::NumericalError; };
struct NonHorizontalTangent : NumericalError { using NumericalError::NumericalError; };
struct OutOfChart : NumericalError { using NumericalError::NumericalError; };
struct NearResonance : NumericalError { using NumericalError::NumericalError; };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gmi
