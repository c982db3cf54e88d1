#pragma once

// JSON encodings. Gaussian integers are [re, im] pairs of decimal strings,
// Gaussian rationals the same with "p/q" strings allowed. Parse errors throw
// Errc::Parse with a path such as "cells[1][2][0]".

#include <string>
#include <vector>

#include <json.hpp>

#include "gsq/correspondence.hpp"
#include "gsq/grids.hpp"
#include "gsq/search.hpp"
#include "gsq/siblings.hpp"

namespace gsq {

using Json = nlohmann::ordered_json;

Json to_json(const GaussInt& z);
Json to_json(const GaussRat& z);
Json to_json(const RadicalValue& r);
/// A single RadicalValue object when at most one radicand remains, else
/// {"terms": [{"radicand", "coefficient"}...]}.
Json to_json(const SurdSum& s);
Json to_json(const Complex& z);

GaussInt gauss_from_json(const Json& j, const std::string& path);
GaussRat gauss_rat_from_json(const Json& j, const std::string& path);
/// Accepts a GaussInt pair or a {"a", "b", "radicand"} object.
RadicalValue radical_from_json(const Json& j, const std::string& path);

Json to_json(const LegTriple& t);
Json to_json(const ZeroSumTriple& t);
Json to_json(const ArithTriplet& t);
Json to_json(const Triplet<SurdSum>& t);
Json to_json(const Triplet<Complex>& t);

/// {"arrangement": "magic", "cells": 3x3, "roots": 3x3 with null for absent}.
Json grid_to_json(const MagicSquare& sq);
/// Accepts "magic" or "gap" arrangements; "roots" is optional.
MagicSquare grid_from_json(const Json& j);

Json to_json(const NearMissReport& r);
/// Older siblings per line; younger ones too when asked.
Json to_json(const SiblingFamily& f, bool include_younger = false);
Json to_json(const PseudoGrid& p);
Json to_json(const std::vector<OriginPoint>& series);
Json to_json(const GapCandidate& c);

Json read_json_file(const std::string& path);  // "-" reads stdin

}  // namespace gsq
