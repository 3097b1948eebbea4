#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <vector>

namespace tangleinv {

/// Runs one command line (args exclude the program name) and returns the exit
/// code: 0 ok, 1 usage, 2 parse or validation, 3 domain or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "re + imi" with nine fractional digits; negative zero printed as zero.
std::string format_complex(std::complex<double> z);

}  // namespace tangleinv
