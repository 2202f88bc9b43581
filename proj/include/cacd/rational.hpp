#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace cacd {

/// Exact rational scalar. All circle positions and arc endpoints are exact;
/// decimal literals from input files are parsed as exact decimals.
using Rat = boost::rational<std::int64_t>;

/// Parses "7", "-3/4" or "1.9" (exact decimal) into a rational.
Rat parse_rational(std::string_view text);

/// Canonical string form: "num/den", with "/1" omitted.
std::string rational_string(const Rat& value);

double rational_double(const Rat& value);

/// x reduced into [0, modulus). modulus must be positive.
Rat mod_positive(const Rat& x, const Rat& modulus);

}  // namespace cacd
