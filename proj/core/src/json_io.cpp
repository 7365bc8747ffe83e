#include "qchar/json_io.hpp"

#include <stdexcept>
#include <string>

namespace qchar::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

int read_int(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw std::invalid_argument(std::string(what) + " must be an integer");
  }
  return j.get<int>();
}

}  // namespace

json write(const Rational& value) { return to_string(value); }

Rational read_rational(const json& j) {
  if (j.is_string()) {
    return parse_rational(j.get<std::string>());
  }
  if (j.is_number_integer()) {
    return Rational(j.get<long>());
  }
  throw std::invalid_argument("exact scalar must be a \"p/q\" string or an integer");
}

json write(const Signature& sig) { return json(sig.parts()); }

Signature read_signature(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("signature must be an integer array");
  }
  std::vector<int> parts;
  for (const json& p : j) {
    parts.push_back(read_int(p, "signature part"));
  }
  return Signature(std::move(parts));
}

json write_rows(const std::map<Signature, Rational>& rows, const char* value_key) {
  json out = json::array();
  for (const auto& [sig, value] : rows) {
    out.push_back({{"sig", write(sig)}, {value_key, write(value)}});
  }
  return out;
}

json write(const LevelCharacter& chi) {
  return {{"level", chi.level()},
          {"q", write(chi.q().value())},
          {"entries", write_rows(chi.weights())}};
}

LevelCharacter read_character(const json& j) {
  const int level = read_int(field(j, "level"), "level");
  QParam q(read_rational(field(j, "q")));
  LevelCharacter::Weights weights;
  const json& entries = field(j, "entries");
  if (!entries.is_array()) {
    throw std::invalid_argument("'entries' must be an array");
  }
  for (const json& e : entries) {
    Signature sig = read_signature(field(e, "sig"));
    Rational p = read_rational(field(e, "prob"));
    if (!weights.emplace(std::move(sig), std::move(p)).second) {
      throw std::invalid_argument("duplicate signature in character entries");
    }
  }
  return LevelCharacter(level, std::move(q), std::move(weights));
}

json write(const BoundaryParam& theta) {
  return {{"head", theta.head()}, {"tail", theta.tail()}};
}

BoundaryParam read_boundary(const json& j) {
  const json& head = field(j, "head");
  if (!head.is_array()) {
    throw std::invalid_argument("'head' must be an integer array");
  }
  std::vector<int> values;
  for (const json& h : head) {
    values.push_back(read_int(h, "head entry"));
  }
  return BoundaryParam(std::move(values), read_int(field(j, "tail"), "tail"));
}

json write(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      row.push_back(write(m(i, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix read_matrix(const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("matrix must be an array of rows");
  }
  const std::size_t n = j.size();
  const std::size_t cols = n == 0 ? 0 : j.front().size();
  RationalMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw std::invalid_argument("matrix rows must be arrays of equal length");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = read_rational(j[i][k]);
    }
  }
  return m;
}

json write(const BlockElement& x) {
  json blocks = json::array();
  for (const auto& [sig, m] : x.blocks()) {
    blocks.push_back({{"sig", write(sig)}, {"matrix", write(m)}});
  }
  return {{"level", x.level()}, {"q", write(x.q().value())}, {"blocks", std::move(blocks)}};
}

BlockElement read_block_element(const json& j) {
  const int level = read_int(field(j, "level"), "level");
  QParam q(read_rational(field(j, "q")));
  BlockElement::Blocks blocks;
  const json& entries = field(j, "blocks");
  if (!entries.is_array()) {
    throw std::invalid_argument("'blocks' must be an array");
  }
  for (const json& e : entries) {
    Signature sig = read_signature(field(e, "sig"));
    if (!blocks.emplace(std::move(sig), read_matrix(field(e, "matrix"))).second) {
      throw std::invalid_argument("duplicate signature in blocks");
    }
  }
  return BlockElement(level, std::move(q), std::move(blocks));
}

json write(const LRExpansion& lr) {
  json out = json::array();
  for (const auto& [sig, c] : lr) {
    out.push_back({{"sig", write(sig)}, {"coeff", c.get_str()}});
  }
  return out;
}

json write(const CoherenceReport& report) {
  json out = {{"pass", report.coherent}};
  if (!report.coherent) {
    out["level"] = *report.level;
    out["sig"] = write(*report.signature);
    out["expected"] = write(report.expected);
    out["actual"] = write(report.actual);
  }
  return out;
}

json write(const CorollaryReport& report) {
  json out = {{"pass", report.pass},
              {"tensor_matches_shift", report.tensor_matches_shift},
              {"shift_matches_extreme", report.shift_matches_extreme},
              {"lhs", write(report.lhs)},
              {"rhs", write(report.rhs)}};
  if (report.discrepancy) {
    out["discrepancy"] = write(*report.discrepancy);
  }
  return out;
}

json write(const FCompatibilityReport& report) {
  json out = {{"pass", report.pass}};
  if (!report.pass) {
    out["lower"] = write(*report.lower);
    out["pattern"] = *report.pattern;
    out["expected_exponent"] = report.expected_exponent;
    out["actual_exponent"] = report.actual_exponent;
  }
  return out;
}

json write(const Decomposition& result) {
  json out = {{"accepted", result.accepted}};
  if (result.accepted) {
    out["coefficients"] = write_rows(result.coefficients, "coeff");
  } else {
    out["rejected_at"] = write(*result.rejected_at);
    out["reason"] = result.reason;
  }
  return out;
}

}  // namespace qchar::json
