#include "chiralwalk/document.hpp"

#include <json.hpp>
#include <sstream>

namespace chiralwalk {

namespace {

using nlohmann::ordered_json;

double clean_zero(double x) { return x == 0.0 ? 0.0 : x; }

int require_index(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

double require_number(const nlohmann::json& v, const char* what) {
  if (!v.is_number())
    throw ParseError(std::string(what) + " must be a number");
  return v.get<double>();
}

}  // namespace

HamiltonianDocument parse_document_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("dim")) throw ParseError("document is missing \"dim\"");
  if (!j.contains("entries"))
    throw ParseError("document is missing \"entries\"");

  HamiltonianDocument doc;
  doc.dim = require_index(j["dim"], "\"dim\"");
  if (doc.dim <= 0) throw ParseError("\"dim\" must be positive");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j["entries"].is_array())
    throw ParseError("\"entries\" must be an array");
  for (const auto& rec : j["entries"]) {
    if (!rec.is_array() || rec.size() != 4)
      throw ParseError("each entry must be [row, col, re, im]");
    HamiltonianDocument::Entry e;
    e.row = require_index(rec[0], "entry row");
    e.col = require_index(rec[1], "entry col");
    e.re = require_number(rec[2], "entry re");
    e.im = require_number(rec[3], "entry im");
    doc.entries.push_back(e);
  }
  return doc;
}

HamiltonianDocument parse_document_edgelist(const std::string& text) {
  HamiltonianDocument doc;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  int max_index = -1;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    std::vector<std::string> toks;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 4)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected `row col re im`");
    HamiltonianDocument::Entry e;
    try {
      size_t pos = 0;
      e.row = std::stoi(toks[0], &pos);
      if (pos != toks[0].size()) throw std::invalid_argument(toks[0]);
      e.col = std::stoi(toks[1], &pos);
      if (pos != toks[1].size()) throw std::invalid_argument(toks[1]);
      e.re = std::stod(toks[2], &pos);
      if (pos != toks[2].size()) throw std::invalid_argument(toks[2]);
      e.im = std::stod(toks[3], &pos);
      if (pos != toks[3].size()) throw std::invalid_argument(toks[3]);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": malformed record");
    }
    max_index = std::max({max_index, e.row, e.col});
    doc.entries.push_back(e);
  }
  if (doc.entries.empty()) throw ParseError("edge list holds no records");
  doc.dim = max_index + 1;
  return doc;
}

HamiltonianDocument parse_document(const std::string& text,
                                   DocumentFormat format) {
  return format == DocumentFormat::Json ? parse_document_json(text)
                                        : parse_document_edgelist(text);
}

namespace {

Eigen::MatrixXcd place_entries(const HamiltonianDocument& doc,
                               bool mirror_conjugates, bool require_real) {
  const int n = doc.dim;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  std::vector<char> set(static_cast<size_t>(n) * n, 0);
  for (const auto& e : doc.entries) {
    if (e.row < 0 || e.row >= n || e.col < 0 || e.col >= n)
      throw ValidationError("entry (" + std::to_string(e.row) + "," +
                            std::to_string(e.col) + ") is out of range for dim " +
                            std::to_string(n));
    char& slot = set[static_cast<size_t>(e.row) * n + e.col];
    if (slot)
      throw ValidationError("duplicate record for entry (" +
                            std::to_string(e.row) + "," +
                            std::to_string(e.col) + ")");
    slot = 1;
    if (require_real && e.im != 0.0)
      throw ValidationError("entry (" + std::to_string(e.row) + "," +
                            std::to_string(e.col) + ") must be real");
    m(e.row, e.col) = Complex(e.re, e.im);
  }
  if (mirror_conjugates) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (r == c || !set[static_cast<size_t>(r) * n + c]) continue;
        if (!set[static_cast<size_t>(c) * n + r])
          m(c, r) = std::conj(m(r, c));
      }
  }
  return m;
}

}  // namespace

Eigen::MatrixXcd document_matrix(const HamiltonianDocument& doc) {
  return place_entries(doc, true, false);
}

Eigen::MatrixXd document_real_matrix(const HamiltonianDocument& doc) {
  return place_entries(doc, false, true).real();
}

HermitianMatrix document_hermitian(const HamiltonianDocument& doc,
                                   const Tolerances& tol) {
  return validate_hermitian(document_matrix(doc), tol.hermiticity);
}

HamiltonianDocument document_from_matrix(const Eigen::MatrixXcd& m,
                                         std::string name) {
  HamiltonianDocument doc;
  doc.dim = static_cast<int>(m.rows());
  doc.name = std::move(name);
  for (int r = 0; r < doc.dim; ++r)
    for (int c = r; c < doc.dim; ++c) {
      const Complex z = m(r, c);
      if (z == Complex(0.0, 0.0)) continue;
      doc.entries.push_back(
          {r, c, clean_zero(z.real()), clean_zero(z.imag())});
    }
  return doc;
}

std::string document_to_json(const HamiltonianDocument& doc) {
  ordered_json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["dim"] = doc.dim;
  j["entries"] = ordered_json::array();
  for (const auto& e : doc.entries)
    j["entries"].push_back({e.row, e.col, e.re, e.im});
  return j.dump(2) + "\n";
}

}  // namespace chiralwalk
