#include "obsalg/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "obsalg/errors.hpp"

namespace obsalg {

namespace {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;

enum class Mirror { Antisymmetric, Symmetric, None };

std::size_t index_from_json(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + ": index must be an integer");
  auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= dim)
    throw DimensionMismatch(std::string(what) + ": index " + std::to_string(v) + " out of range for dim " +
                            std::to_string(dim));
  return static_cast<std::size_t>(v);
}

bool is_sparse_list(const Json& j) {
  if (!j.is_array()) return false;
  if (j.empty()) return true;
  const Json& first = j.front();
  return first.is_array() && first.size() == 4 && first.front().is_number_integer();
}

/// Reads structure constants given either as sparse [i, j, k, value] triples
/// or as a dense n x n x n nested array. Sparse entries that only list one of
/// (i, j) / (j, i) get their mirror filled according to `mirror`; listing
/// both keeps both as written, so the constructor can flag the violation.
StructureTensor tensor_from_json(const Json& j, std::size_t dim, Mirror mirror, const char* what) {
  TensorBuilder b(dim);
  if (j.is_null()) return std::move(b).build();
  if (is_sparse_list(j)) {
    std::map<Triple, Scalar> given;
    for (const auto& entry : j) {
      if (!entry.is_array() || entry.size() != 4)
        throw ParseError(std::string(what) + ": entries must be [i, j, k, value]");
      Triple t{index_from_json(entry[0], dim, what), index_from_json(entry[1], dim, what),
               index_from_json(entry[2], dim, what)};
      if (!given.emplace(t, scalar_from_json(entry[3])).second)
        throw ParseError(std::string(what) + ": duplicate entry [" + std::to_string(std::get<0>(t)) + ", " +
                         std::to_string(std::get<1>(t)) + ", " + std::to_string(std::get<2>(t)) + "]");
    }
    for (const auto& [t, v] : given) {
      auto [i, jj, k] = t;
      b(i, jj, k) = v;
      if (mirror == Mirror::None || i == jj) continue;
      if (given.count(Triple{jj, i, k})) continue;
      b(jj, i, k) = mirror == Mirror::Antisymmetric ? -v : v;
    }
    return std::move(b).build();
  }
  if (!j.is_array() || j.size() != dim) throw ParseError(std::string(what) + ": expected sparse triples or dense n^3 array");
  for (std::size_t i = 0; i < dim; ++i) {
    if (!j[i].is_array() || j[i].size() != dim) throw DimensionMismatch(std::string(what) + ": dense array has wrong shape");
    for (std::size_t jj = 0; jj < dim; ++jj) {
      if (!j[i][jj].is_array() || j[i][jj].size() != dim)
        throw DimensionMismatch(std::string(what) + ": dense array has wrong shape");
      for (std::size_t k = 0; k < dim; ++k) b(i, jj, k) = scalar_from_json(j[i][jj][k]);
    }
  }
  return std::move(b).build();
}

Json tensor_to_json(const StructureTensor& t, Mirror mirror) {
  Json out = Json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mirror == Mirror::Antisymmetric && j <= i) continue;
      if (mirror == Mirror::Symmetric && j < i) continue;
      for (const auto& [k, v] : t.nonzeros(i, j)) out.push_back(Json::array({i, j, k, scalar_to_json(v)}));
    }
  return out;
}

Field field_from_json(const Json& doc) {
  if (!doc.contains("field")) return Field::Real;
  const auto& f = doc.at("field");
  if (f == "real") return Field::Real;
  if (f == "complex") return Field::Complex;
  throw ParseError("field must be \"real\" or \"complex\"");
}

std::size_t dim_from_json(const Json& doc) {
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) throw ParseError("missing integer \"dim\"");
  auto d = doc.at("dim").get<long long>();
  if (d <= 0) throw DimensionMismatch("dim must be positive");
  return static_cast<std::size_t>(d);
}

Vector unit_from_json(const Json& doc, std::size_t dim) {
  if (!doc.contains("unit")) throw ParseError("missing \"unit\"");
  Vector u = vector_from_json(doc.at("unit"));
  if (u.size() != dim) throw DimensionMismatch("unit has " + std::to_string(u.size()) + " entries, dim is " + std::to_string(dim));
  return u;
}

std::string label_from_json(const Json& doc) {
  return doc.contains("label") ? doc.at("label").get<std::string>() : std::string("unnamed");
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return to_string(s.re());
  return Json{{"re", to_string(s.re())}, {"im", to_string(s.im())}};
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(mpz_class(j.dump(), 10)));
  if (j.is_number_float()) return Scalar(parse_rational(j.dump()));
  if (j.is_object()) {
    Scalar re = j.contains("re") ? scalar_from_json(j.at("re")) : Scalar(0);
    Scalar im = j.contains("im") ? scalar_from_json(j.at("im")) : Scalar(0);
    if (!re.is_real() || !im.is_real()) throw ParseError("nested complex scalar");
    return Scalar(re.re(), im.re());
  }
  throw ParseError("cannot read a scalar from " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of scalars");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return Matrix::from_rows(rows);
}

TwoProductAlgebra load_two_product(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  std::size_t dim = dim_from_json(doc);
  Field field = field_from_json(doc);
  Vector unit = unit_from_json(doc, dim);
  StructureTensor bracket = tensor_from_json(doc.value("bracket", Json()), dim, Mirror::Antisymmetric, "bracket");
  StructureTensor tau = tensor_from_json(doc.value("tau", Json()), dim, Mirror::Symmetric, "tau");
  return TwoProductAlgebra(label_from_json(doc), field, std::move(bracket), std::move(tau), std::move(unit));
}

AssocAlgebra load_assoc(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  std::size_t dim = dim_from_json(doc);
  Field field = field_from_json(doc);
  Vector unit = unit_from_json(doc, dim);
  StructureTensor product = tensor_from_json(doc.value("product", Json()), dim, Mirror::None, "product");
  std::optional<Star> star;
  if (doc.contains("star") && !doc.at("star").is_null()) {
    const Json& s = doc.at("star");
    if (!s.contains("matrix")) throw ParseError("star needs a \"matrix\"");
    Matrix m = matrix_from_json(s.at("matrix"));
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("star matrix must be dim x dim");
    star = Star{std::move(m), s.value("conjugate", true)};
  }
  return AssocAlgebra(label_from_json(doc), field, std::move(product), std::move(unit), std::move(star));
}

AnyAlgebra load_algebra(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
  if (doc.contains("product")) return load_assoc(doc);
  return load_two_product(doc);
}

AnyAlgebra load_algebra_string(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return load_algebra(doc);
}

AnyAlgebra load_algebra_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_algebra_string(ss.str());
}

Json to_json(const TwoProductAlgebra& alg) {
  Json doc;
  doc["label"] = alg.label();
  doc["dim"] = alg.dim();
  doc["field"] = to_string(alg.field());
  doc["unit"] = vector_to_json(alg.unit());
  doc["bracket"] = tensor_to_json(alg.bracket(), Mirror::Antisymmetric);
  doc["tau"] = tensor_to_json(alg.tau(), Mirror::Symmetric);
  return doc;
}

Json to_json(const AssocAlgebra& alg) {
  Json doc;
  doc["label"] = alg.label();
  doc["dim"] = alg.dim();
  doc["field"] = to_string(alg.field());
  doc["unit"] = vector_to_json(alg.unit());
  doc["product"] = tensor_to_json(alg.product(), Mirror::None);
  if (alg.star()) doc["star"] = Json{{"matrix", matrix_to_json(alg.star()->matrix)}, {"conjugate", alg.star()->conjugate}};
  return doc;
}

Json to_json(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return to_json(a); }, alg);
}

const std::string& label_of(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) -> const std::string& { return a.label(); }, alg);
}

std::size_t dim_of(const AnyAlgebra& alg) {
  return std::visit([](const auto& a) { return a.dim(); }, alg);
}

}  // namespace obsalg
