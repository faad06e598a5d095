#include "cli/document.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace itrig::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

IntVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty list of integers");
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = integer_from_json(j[i]);
  return v;
}

IntMatrix columns_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty list of vectors");
  std::vector<IntVector> cols;
  for (const auto& c : j) cols.push_back(vector_from_json(c));
  IntMatrix m(cols.front().size(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i].size() != m.rows()) bad("vectors of different dimension");
    m.col(static_cast<Eigen::Index>(i)) = cols[i];
  }
  return m;
}

IntMatrix rows_from_json(const Json& j) { return columns_from_json(j).transpose(); }

ConeDocument from_json(const Json& j) {
  if (!j.is_object()) bad("document must be a JSON object");
  ConeDocument doc;
  if (j.contains("edges")) {
    doc.edges = columns_from_json(j.at("edges"));
    doc.vertex = j.contains("vertex") ? vector_from_json(j.at("vertex")) : IntVector(IntVector::Zero(doc.edges.rows()));
  } else if (j.contains("cone")) {
    doc = from_json(j.at("cone"));
  } else if (j.contains("simplex")) {
    std::vector<IntVector> pts;
    for (const auto& p : j.at("simplex")) pts.push_back(vector_from_json(p));
    if (pts.size() < 2) bad("a simplex needs at least two vertices");
    doc.vertex = pts.front();
    doc.edges = IntMatrix(doc.vertex.size(), static_cast<Eigen::Index>(pts.size() - 1));
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i].size() != doc.vertex.size()) bad("simplex vertices of different dimension");
      doc.edges.col(static_cast<Eigen::Index>(i - 1)) = pts[i] - doc.vertex;
    }
    doc.simplex = std::move(pts);
  } else if (j.contains("grid")) {
    doc.edges = rows_from_json(j.at("grid"));
    doc.vertex = IntVector::Zero(doc.edges.rows());
  } else {
    bad("document needs one of 'edges', 'cone', 'simplex' or 'grid'");
  }
  if (j.contains("grid")) doc.grid = rows_from_json(j.at("grid"));
  if (j.contains("metadata")) {
    const auto& meta = j.at("metadata");
    if (!meta.is_object()) bad("metadata must be an object");
    for (auto it = meta.begin(); it != meta.end(); ++it)
      doc.metadata[it.key()] = it->is_string() ? it->get<std::string>() : it->dump();
  }
  if (doc.vertex.size() != doc.edges.rows()) bad("vertex and edges differ in dimension");
  return doc;
}

ConeDocument from_text(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<Integer> row;
    for (std::string tok; ls >> tok;) row.push_back(Integer::parse(tok));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows.front().size()) bad("matrix rows of different length");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) bad("empty matrix");
  ConeDocument doc;
  doc.edges = IntMatrix(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      doc.edges(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  doc.vertex = IntVector::Zero(doc.edges.rows());
  return doc;
}

void render_text(const Json& j, const std::string& indent, std::string& out);

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render_value(const std::string& key, const Json& v, const std::string& indent, std::string& out) {
  if (!v.is_structured()) {
    out += indent + key + ": " + scalar_text(v) + "\n";
  } else if (v.is_array() && is_flat(v)) {
    std::string line;
    for (const auto& x : v) line += (line.empty() ? "" : " ") + scalar_text(x);
    out += indent + key + ": [" + line + "]\n";
  } else {
    out += indent + key + ":\n";
    render_text(v, indent + "  ", out);
  }
}

void render_text(const Json& j, const std::string& indent, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_value(it.key(), *it, indent, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_value("-", j[i], indent, out);
  } else {
    out += indent + scalar_text(j) + "\n";
  }
}

}  // namespace

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return {std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) bad("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

ConeDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) bad("empty input");
  if (text[first] != '{') return from_text(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  bad("expected an integer, got " + j.dump());
}

Json to_json(const Integer& x) { return x.str(); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(IntVector(m.row(r).transpose())));
  return out;
}

Json cone_to_json(const Cone& c, const std::map<std::string, std::string>& metadata) {
  Json edges = Json::array();
  for (Eigen::Index i = 0; i < c.order(); ++i) edges.push_back(to_json(IntVector(c.edge(i))));
  Json meta = Json::object();
  for (const auto& [k, v] : metadata) meta[k] = v;
  return {{"vertex", to_json(c.vertex())}, {"edges", edges}, {"metadata", meta}};
}

std::string canonical(const Json& j) { return j.dump(); }

std::string as_text(const Json& j) {
  std::string out;
  render_text(j, "", out);
  return out;
}

}  // namespace itrig::cli
