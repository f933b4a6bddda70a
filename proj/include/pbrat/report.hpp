#pragma once

#include <span>

#include "json.hpp"
#include "pbrat/classify.hpp"
#include "pbrat/hilbert.hpp"
#include "pbrat/param.hpp"
#include "pbrat/tuples.hpp"
#include "pbrat/verify.hpp"

namespace pbrat {

// JSON uses insertion-ordered objects so that emitted reports keep a fixed
// key order and survive a parse/dump round trip byte for byte.
using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as
/// decimal strings.
Json int_json(Int v);
Json ints_json(std::span<const Int> xs);

Json to_json(const ClassificationReport& r);
Json to_json(const Reduction& r, const ExponentTuple& input);
Json to_json(const HilbertProfile& p);
Json to_json(const SweepReport& r);
Json to_json(const ParamCheckReport& r);

}  // namespace pbrat
