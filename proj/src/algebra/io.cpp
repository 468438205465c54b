#include "balcat/algebra/io.hpp"

#include "balcat/common/errors.hpp"

namespace balcat {

using nlohmann::json;

Field field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rational();
    throw ValidationError("field must be \"Q\" or {\"p\": prime}, got \"" + j.get<std::string>() +
                          "\"");
  }
  if (j.is_object() && j.contains("p") && j.at("p").is_number_unsigned()) {
    try {
      return Field::prime(j.at("p").get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  throw ValidationError("field must be \"Q\" or {\"p\": prime}");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.characteristic()}};
}

Scalar scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("bad scalar: ") + e.what());
  }
  throw ValidationError("scalar must be an integer or a \"n/d\" string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
  if (!s.is_rational()) return s.as_residue();
  const mpq_class& q = s.as_rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return s.to_string();
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) {
    throw ValidationError("expected a matrix with " + std::to_string(rows) + " rows");
  }
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw ValidationError("matrix row " + std::to_string(r) + " must have " +
                            std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(f, j[r][c]);
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FinAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("algebra document must be an object");
  for (const char* key : {"dim", "field", "structure", "unit"}) {
    if (!j.contains(key)) throw ValidationError(std::string("algebra document lacks \"") + key + "\"");
  }
  if (!j.at("dim").is_number_unsigned()) throw ValidationError("\"dim\" must be a count");
  const auto n = j.at("dim").get<std::size_t>();
  const Field f = field_from_json(j.at("field"));
  const json& st = j.at("structure");
  if (!st.is_array() || st.size() != n) {
    throw ValidationError("\"structure\" must have " + std::to_string(n) + " entries");
  }
  std::vector<std::vector<Vector>> structure(n, std::vector<Vector>(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (!st[a].is_array() || st[a].size() != n) {
      throw ValidationError("\"structure\"[" + std::to_string(a) + "] must have " +
                            std::to_string(n) + " entries");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const json& v = st[a][b];
      if (!v.is_array() || v.size() != n) {
        throw ValidationError("\"structure\"[" + std::to_string(a) + "][" + std::to_string(b) +
                              "] must be a vector of length " + std::to_string(n));
      }
      for (std::size_t c = 0; c < n; ++c) structure[a][b].push_back(scalar_from_json(f, v[c]));
    }
  }
  const json& u = j.at("unit");
  if (!u.is_array() || u.size() != n) {
    throw ValidationError("\"unit\" must have " + std::to_string(n) + " entries");
  }
  Vector unit;
  for (const auto& x : u) unit.push_back(scalar_from_json(f, x));
  FinAlgebra::Options opts;
  if (j.contains("name") && j.at("name").is_string()) opts.name = j.at("name").get<std::string>();
  return FinAlgebra::from_dense(f, structure, std::move(unit), std::move(opts));
}

json algebra_to_json(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  json st = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      json v = json::array();
      const Vector d = densify(a.field(), n, a.product(i, k));
      for (const auto& x : d) v.push_back(scalar_to_json(x));
      row.push_back(std::move(v));
    }
    st.push_back(std::move(row));
  }
  json unit = json::array();
  for (const auto& x : a.unit()) unit.push_back(scalar_to_json(x));
  return json{{"name", a.name()},
              {"dim", n},
              {"field", field_to_json(a.field())},
              {"structure", std::move(st)},
              {"unit", std::move(unit)}};
}

}  // namespace balcat
