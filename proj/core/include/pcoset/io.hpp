#pragma once

#include "pcoset/building.hpp"
#include "pcoset/charfn.hpp"
#include "pcoset/weil.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace pcoset {

using json = nlohmann::json;

// Every parser throws InputError on schema violations.

json rational_to_json(const PadicRational& x);
PadicRational rational_from_json(const json& j);

/// {"rows": r, "cols": c, "data": [[...], ...]}
json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const json& j);

/// {"ambient": n, "free": [[...], ...], "int": [[...], ...]}
json module_to_json(const Module& m);
Module module_from_json(const json& j);

/// {"src": a, "dst": b, "module": <module>}
json relation_to_json(const Relation& r);
Relation relation_from_json(const json& j);

/// {"alpha": a, "k": k, "m": m, "matrix": <matrix>}
json block_to_json(const BlockElement& g);
BlockElement block_from_json(const json& j);

/// Complex entries as [re, im].
json complex_matrix_to_json(const ComplexMatrix& m);

json read_json_file(const std::string& path);

}  // namespace pcoset
