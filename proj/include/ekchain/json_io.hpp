#pragma once

#include "ekchain/chain.hpp"
#include "ekchain/poly_bounds.hpp"
#include "ekchain/root_oracle.hpp"

#include <json.hpp>

#include <string_view>
#include <vector>

namespace ekchain {

// Field order is part of the output contract, hence ordered_json.
using Json = nlohmann::ordered_json;

Json to_json(const Annulus& a);
Json to_json(Point2 p);
Json to_json(const Circle& c);
Json to_json(const ChainConstruction& chain);
Json to_json(const VerificationReport& r);
Json to_json(const AxisReport& r);
Json to_json(const RootSet& r);
Json to_json(const MembershipReport& r);

// Accepts a JSON array of numbers or a comma-separated list. Throws
// std::invalid_argument naming the offending index.
std::vector<double> parse_coefficients(std::string_view text);

// Decimal radians, or k*pi/m literals: "pi", "pi/2", "2pi/3", "-5pi/12", "3*pi/4".
double parse_theta(std::string_view text);

}  // namespace ekchain
