#include "rankgeo/serialization.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rankgeo {
namespace {

using ordered_json = nlohmann::ordered_json;

TowerPtr tower_from_header(std::int64_t p, std::int64_t e, std::int64_t m,
                           const std::vector<std::int64_t>& modulus, std::uint64_t table_bound) {
  TowerPtr tower;
  try {
    tower = make_tower(p, e, m, table_bound);
  } catch (const Error& err) {
    throw ParseError(std::string("invalid field header: ") + err.what());
  }
  if (static_cast<std::size_t>(tower->degree() + 1) != modulus.size())
    throw ParseError("modulus length does not match the extension degree");
  for (std::size_t i = 0; i < modulus.size(); ++i)
    if (modulus[i] != tower->modulus()[i])
      throw ParseError("modulus differs from the canonical modulus for these parameters");
  return tower;
}

}  // namespace

std::string code_to_json(const RankMetricCode& code) {
  const FieldTower& F = *code.tower();
  ordered_json j;
  j["p"] = F.p();
  j["e"] = F.e();
  j["m"] = F.m();
  j["modulus"] = F.modulus();
  j["n"] = code.n();
  j["k"] = code.k();
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < code.k(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < code.n(); ++c) row.push_back(code.generator().at(r, c).log());
    rows.push_back(std::move(row));
  }
  j["generator"] = std::move(rows);
  return j.dump(2) + "\n";
}

RankMetricCode code_from_json(const std::string& text, std::uint64_t table_bound) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
  try {
    const auto p = j.at("p").get<std::int64_t>();
    const auto e = j.at("e").get<std::int64_t>();
    const auto m = j.at("m").get<std::int64_t>();
    const auto modulus = j.at("modulus").get<std::vector<std::int64_t>>();
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    TowerPtr tower = tower_from_header(p, e, m, modulus, table_bound);

    const auto& rows = j.at("generator");
    if (!rows.is_array() || rows.size() != k)
      throw ParseError("generator must have exactly k rows");
    Matrix gen(tower, k, n);
    for (std::size_t r = 0; r < k; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != n)
        throw ParseError("generator rows must have exactly n entries");
      for (std::size_t c = 0; c < n; ++c)
        gen.set(r, c, tower->element_from_serialized(row.at(c).get<std::int64_t>()));
    }
    return make_code(tower, gen);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("malformed code file: ") + err.what());
  }
}

void write_code_file(const std::string& path, const RankMetricCode& code) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << code_to_json(code);
}

RankMetricCode read_code_file(const std::string& path, std::uint64_t table_bound) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return code_from_json(buf.str(), table_bound);
}

std::string matrix_to_text(const Matrix& m) {
  const FieldTower& F = *m.tower();
  std::ostringstream out;
  out << F.p() << ' ' << F.e() << ' ' << F.m() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < F.modulus().size(); ++i)
    out << (i ? " " : "") << F.modulus()[i];
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).log();
    out << '\n';
  }
  return out.str();
}

Matrix matrix_from_text(const std::string& text, std::uint64_t table_bound) {
  std::istringstream in(text);
  std::int64_t p, e, m;
  std::size_t rows, cols;
  if (!(in >> p >> e >> m >> rows >> cols)) throw ParseError("invalid matrix header");
  std::vector<std::int64_t> modulus(static_cast<std::size_t>(e * m) + 1);
  for (auto& c : modulus)
    if (!(in >> c)) throw ParseError("truncated modulus line");
  TowerPtr tower = tower_from_header(p, e, m, modulus, table_bound);
  Matrix out(tower, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::int64_t v;
      if (!(in >> v)) throw ParseError("truncated matrix body");
      out.set(r, c, tower->element_from_serialized(v));
    }
  return out;
}

}  // namespace rankgeo
