#pragma once

#include <string>

#include <json.hpp>

#include "walshlab/boolfn.hpp"
#include "walshlab/djsim.hpp"
#include "walshlab/spectral.hpp"

namespace walshlab {

// Mask rendered x_n..x_1, i.e. plain MSB-first binary of the index.
std::string mask_bits(uint64_t mask, int n);

// One line per mask: "<bits> <signed coefficient>".
std::string spectrum_dump_text(const WalshSpectrum& s);

// One line per mask: "<bits> <numerator>/<denominator> <decimal>", the
// fraction reduced.
std::string distribution_dump_text(const MeasurementDistribution& d);

// {n, weight, balanced, nonlinearity, resiliency, class, max_correlation}
nlohmann::ordered_json analytics_json(const BooleanFunction& f, const WalshSpectrum& s);

std::string anf_text(const AnfPolynomial& p);
nlohmann::ordered_json anf_json(const AnfPolynomial& p);

}  // namespace walshlab
