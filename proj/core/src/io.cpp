#include "pcoset/io.hpp"

#include "pcoset/errors.hpp"

#include <fstream>

namespace pcoset {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InputError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

json rows_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(rational_to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix rows_from_json(const json& rows, std::size_t cols, const char* what) {
  if (!rows.is_array()) throw InputError(std::string(what) + ": expected an array of rows");
  RatMatrix m(0, cols);
  RatVector buf(cols);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cols) {
      throw InputError(std::string(what) + ": every row needs " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) buf[j] = rational_from_json(row[j]);
    m.append_row(buf);
  }
  return m;
}

}  // namespace

json rational_to_json(const PadicRational& x) { return to_string(x); }

PadicRational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return PadicRational(mpz_class(std::to_string(j.get<long long>())));
  throw InputError("rational entries must be strings like \"-3/7\" or integers");
}

json matrix_to_json(const RatMatrix& m) {
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows_to_json(m)}};
}

RatMatrix matrix_from_json(const json& j) {
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  RatMatrix m = rows_from_json(field(j, "data"), cols, "matrix data");
  if (m.rows() != rows) throw InputError("matrix: 'rows' does not match the data");
  return m;
}

json module_to_json(const Module& m) {
  return json{{"ambient", m.ambient_dim()}, {"free", rows_to_json(m.free_gens())}, {"int", rows_to_json(m.int_gens())}};
}

Module module_from_json(const json& j) {
  const std::size_t n = count_field(j, "ambient");
  return Module(n, rows_from_json(field(j, "free"), n, "module free"), rows_from_json(field(j, "int"), n, "module int"));
}

json relation_to_json(const Relation& r) {
  return json{{"src", r.src_dim()}, {"dst", r.dst_dim()}, {"module", module_to_json(r.body())}};
}

Relation relation_from_json(const json& j) {
  const std::size_t s = count_field(j, "src");
  const std::size_t d = count_field(j, "dst");
  try {
    return Relation(s, d, module_from_json(field(j, "module")));
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
}

json block_to_json(const BlockElement& g) {
  return json{{"alpha", g.alpha()}, {"k", g.k()}, {"m", g.m()}, {"matrix", matrix_to_json(g.matrix())}};
}

BlockElement block_from_json(const json& j) {
  const std::size_t alpha = count_field(j, "alpha");
  const std::size_t k = count_field(j, "k");
  const std::size_t m = count_field(j, "m");
  try {
    return BlockElement(alpha, k, m, matrix_from_json(field(j, "matrix")));
  } catch (const DimensionMismatch& e) {
    throw InputError(e.what());
  }
}

json complex_matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

}  // namespace pcoset
