#include "slicealg/algebra_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace slicealg {

namespace {

nlohmann::json number(double v) {
  if (std::nearbyint(v) == v && std::abs(v) < 1e15) return static_cast<long long>(v);
  return v;
}

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

nlohmann::json algebra_to_json(const Algebra& alg) {
  const int n = alg.dimension();
  nlohmann::json tensor = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < n; ++k) row.push_back(number(alg.constant(i, j, k)));
      plane.push_back(std::move(row));
    }
    tensor.push_back(std::move(plane));
  }
  nlohmann::json out;
  out["dimension"] = n;
  out["unit_index"] = alg.unit_index();
  out["labels"] = alg.labels();
  out["structure_constants"] = std::move(tensor);
  return out;
}

Algebra algebra_from_json(const nlohmann::json& j, double tol) {
  try {
    const int n = j.at("dimension").get<int>();
    if (n < 1) throw Error(ErrorCode::BadTensor, "dimension must be positive");
    if (n > kMaxDimension) throw Error(ErrorCode::TooLarge, "dimension exceeds 64");
    const auto& tensor = j.at("structure_constants");
    std::vector<double> constants;
    constants.reserve(static_cast<std::size_t>(n) * n * n);
    if (!tensor.is_array() || static_cast<int>(tensor.size()) != n)
      throw Error(ErrorCode::BadTensor, "structure_constants must be N x N x N");
    for (const auto& plane : tensor) {
      if (!plane.is_array() || static_cast<int>(plane.size()) != n)
        throw Error(ErrorCode::BadTensor, "structure_constants must be N x N x N");
      for (const auto& row : plane) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          throw Error(ErrorCode::BadTensor, "structure_constants must be N x N x N");
        for (const auto& v : row) constants.push_back(v.get<double>());
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Algebra::make(std::move(constants), j.at("unit_index").get<int>(), std::move(labels),
                         j.value("name", std::string("custom")), tol);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Algebra algebra_from_json_text(const std::string& text, double tol) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
  }
  return algebra_from_json(j, tol);
}

Algebra resolve_algebra(const std::string& name, double tol) {
  std::istringstream words(name);
  std::string head;
  words >> head;
  if (head == "clifford") {
    int p = -1, q = -1;
    if (!(words >> p >> q) || p < 0 || q < 0)
      throw Error(ErrorCode::ParseError, "expected 'clifford <p> <q>', got '" + name + "'");
    return clifford_algebra(p, q);
  }
  if (head == "quaternions") return quaternions();
  if (head == "complex") return complex_numbers();
  if (head == "reals") return real_numbers();

  std::ifstream in(name);
  if (!in) throw Error(ErrorCode::ParseError, "unknown algebra or unreadable file '" + name + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return algebra_from_json_text(buf.str(), tol);
}

nlohmann::json element_to_json(const Element& e) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < e.size(); ++i) out.push_back(number(e(i)));
  return out;
}

Element element_from_json(const nlohmann::json& j, int dimension) {
  if (!j.is_array() || static_cast<int>(j.size()) != dimension)
    throw Error(ErrorCode::DimensionMismatch,
                "element must be an array of length " + std::to_string(dimension));
  Element e(dimension);
  try {
    for (int i = 0; i < dimension; ++i) e(i) = j[static_cast<std::size_t>(i)].get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::ParseError, ex.what());
  }
  return e;
}

}  // namespace slicealg
