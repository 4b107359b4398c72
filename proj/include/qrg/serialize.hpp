#pragma once

#include <string>

#include <json.hpp>

#include "qrg/bounds.hpp"
#include "qrg/character_table.hpp"
#include "qrg/code.hpp"
#include "qrg/group_table.hpp"
#include "qrg/productfree.hpp"
#include "qrg/rational.hpp"

namespace qrg {

using Json = nlohmann::json;

/// {"value": "n/d", "num": "n", "den": "d"}
Json rational_json(const Rational& r);
/// {"approx": "<12 significant digits>"}
Json approx_json(double x);
std::string approx_string(double x);

Json to_json(const GroupDescriptor& d);
/// Degrees and kernels; with `full`, the nonzero multiplicities of every
/// (character, class) pair as [e-index, multiplicity] lists.
Json to_json(const CharacterTable& t, bool full = false);
Json to_json(const BoundReport& r);
Json to_json(const PfInterval& interval);
Json to_json(const SearchResult& r, bool with_witness);
Json to_json(const InvariantScan& scan);

}  // namespace qrg
