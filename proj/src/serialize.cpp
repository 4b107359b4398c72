#include "qrg/serialize.hpp"

#include <cstdio>

namespace qrg {

Json rational_json(const Rational& r) {
  return Json{{"value", to_string(r)},
              {"num", std::to_string(r.numerator())},
              {"den", std::to_string(r.denominator())}};
}

std::string approx_string(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json approx_json(double x) { return Json{{"approx", approx_string(x)}}; }

Json to_json(const GroupDescriptor& d) {
  Json j{{"family", d.family},
         {"name", display_name(d)},
         {"order", d.order},
         {"generator_count", d.generator_count}};
  if (d.family == "sl" || d.family == "sp") {
    j["k"] = d.k;
    j["p"] = d.p;
    j["n"] = d.n;
  } else if (d.family == "alt" || d.family == "sym") {
    j["k"] = d.k;
  } else if (d.family == "tree") {
    j["k"] = d.k;
    j["depth"] = d.depth;
  } else if (d.family == "abelian") {
    j["factors"] = d.factors;
  }
  return j;
}

Json to_json(const CharacterTable& t, bool full) {
  Json j{{"group", to_json(t.group)},
         {"exponent", t.exponent},
         {"working_prime", t.working_prime},
         {"class_sizes", t.class_sizes},
         {"class_orders", t.class_orders},
         {"degrees", t.degrees},
         {"kernels", t.kernels}};
  if (full) {
    Json values = Json::array();
    for (std::size_t c = 0; c < t.count(); ++c) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.class_sizes.size(); ++k) {
        const auto& m = t.multiplicities[c][k];
        const std::uint64_t step = t.exponent / m.size();
        Json terms = Json::array();
        for (std::size_t i = 0; i < m.size(); ++i)
          if (m[i] != 0) terms.push_back({i * step, m[i]});
        row.push_back(std::move(terms));
      }
      values.push_back(std::move(row));
    }
    j["values"] = std::move(values);
  }
  return j;
}

Json to_json(const BoundReport& r) {
  return Json{{"quantity", r.quantity},
              {"computed", rational_json(r.computed)},
              {"formula", rational_json(r.formula)},
              {"relation", std::string(to_string(r.relation))},
              {"pass", r.pass},
              {"refs", r.refs}};
}

Json to_json(const PfInterval& interval) {
  return Json{{"lower", rational_json(interval.lower)},
              {"upper", approx_json(interval.upper)},
              {"effective_upper", approx_json(interval.effective_upper)}};
}

Json to_json(const SearchResult& r, bool with_witness) {
  Json j{{"size", r.size},
         {"density", rational_json(r.density)},
         {"optimal", r.optimal},
         {"budget_exceeded", r.budget_exceeded},
         {"nodes", r.nodes}};
  if (with_witness) j["witness"] = r.witness;
  return j;
}

Json to_json(const InvariantScan& scan) {
  Json dims = Json::array();
  for (const auto& s : scan.subspaces) dims.push_back(s.dimension());
  Json j{{"code_dimension", scan.code_dimension}, {"invariant_subspace_dimensions", dims}};
  j["min_rank"] = scan.min_rank ? Json(*scan.min_rank) : Json(nullptr);
  return j;
}

}  // namespace qrg
