#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gmi {

// Shortest round-trippable decimal form (printf %.17g); non-finite values
// spelled "nan", "inf", "-inf" for platform-independent output.
std::string format_double(double x);

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells);

}  // namespace gmi
