#include "qlift/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "qlift/errors.hpp"

namespace qlift {

namespace fs = std::filesystem;
using nlohmann::json;

MatrixFormat format_from_path(const fs::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".alist") return MatrixFormat::alist;
  if (ext == ".zmat" || ext == ".int") return MatrixFormat::dense_int;
  return MatrixFormat::dense;
}

MatrixFormat format_from_name(const std::string& name) {
  if (name == "alist") return MatrixFormat::alist;
  if (name == "dense" || name == "dense-text") return MatrixFormat::dense;
  if (name == "dense_int" || name == "dense-int-text" || name == "int") return MatrixFormat::dense_int;
  throw Error(ErrorKind::parse, "unknown matrix format '" + name + "'");
}

std::string to_string(MatrixFormat f) {
  switch (f) {
    case MatrixFormat::alist: return "alist";
    case MatrixFormat::dense: return "dense";
    case MatrixFormat::dense_int: return "dense_int";
  }
  return "dense";
}

namespace {

[[noreturn]] void parse_error(const std::string& source, std::size_t line, const std::string& message) {
  throw Error(ErrorKind::parse, source + ":" + std::to_string(line) + ": " + message);
}

std::int64_t to_integer(const std::string& token, const std::string& source, std::size_t line) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) parse_error(source, line, "integer out of range: '" + token + "'");
  if (ec != std::errc() || ptr != last) parse_error(source, line, "expected an integer, got '" + token + "'");
  return value;
}

struct Token {
  std::int64_t value;
  std::size_t line;
};

/// All integer tokens of a stream, with 1-based line numbers.
class TokenStream {
 public:
  TokenStream(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::istringstream words(line);
      std::string word;
      while (words >> word) tokens_.push_back({to_integer(word, source_, number), number});
    }
    last_line_ = number;
  }

  Token next(const std::string& what) {
    if (pos_ >= tokens_.size()) parse_error(source_, last_line_ + 1, "unexpected end of input, expected " + what);
    return tokens_[pos_++];
  }

  void expect_end() const {
    if (pos_ < tokens_.size()) parse_error(source_, tokens_[pos_].line, "unexpected trailing data");
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::pair<std::size_t, std::size_t> read_shape(TokenStream& ts) {
  const Token rows = ts.next("a row count");
  const Token cols = ts.next("a column count");
  if (rows.value < 0 || cols.value < 0) parse_error(ts.source(), rows.line, "negative matrix dimension");
  return {static_cast<std::size_t>(rows.value), static_cast<std::size_t>(cols.value)};
}

struct Line {
  std::vector<std::int64_t> values;
  std::size_t number;
};

std::vector<Line> read_lines(std::istream& in, const std::string& source) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    Line line{{}, number};
    std::istringstream words(text);
    std::string word;
    while (words >> word) line.values.push_back(to_integer(word, source, number));
    lines.push_back(std::move(line));
  }
  return lines;
}

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, path.string() + ": cannot open file");
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, path.string() + ": cannot write file");
  return out;
}

}  // namespace

BitMatrix parse_alist(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = read_lines(in, source);
  std::size_t at = 0;
  const auto header_line = [&](const std::string& what) -> const Line& {
    while (at < lines.size() && lines[at].values.empty()) ++at;
    if (at >= lines.size()) parse_error(source, lines.size() + 1, "unexpected end of input, expected " + what);
    return lines[at++];
  };
  const auto list_line = [&](const std::string& what) -> const Line& {
    if (at >= lines.size()) parse_error(source, lines.size() + 1, "unexpected end of input, expected " + what);
    return lines[at++];
  };
  const auto require_count = [&](const Line& line, std::size_t count, const std::string& what) {
    if (line.values.size() != count) {
      parse_error(source, line.number, "expected " + std::to_string(count) + " " + what + ", found " +
                                           std::to_string(line.values.size()));
    }
  };
  const auto non_negative = [&](const Line& line, std::int64_t v) {
    if (v < 0) parse_error(source, line.number, "negative value " + std::to_string(v));
    return static_cast<std::size_t>(v);
  };

  const Line& shape = header_line("the 'cols rows' header");
  require_count(shape, 2, "header values");
  const std::size_t cols = non_negative(shape, shape.values[0]);
  const std::size_t rows = non_negative(shape, shape.values[1]);
  const Line& maxima = header_line("the maximum degrees");
  require_count(maxima, 2, "maximum degrees");
  const std::size_t max_col = non_negative(maxima, maxima.values[0]);
  const std::size_t max_row = non_negative(maxima, maxima.values[1]);

  const auto degrees = [&](std::size_t count, std::size_t maximum, const std::string& what) {
    const Line& line = count == 0 ? list_line(what) : header_line(what);
    require_count(line, count, what);
    std::vector<std::size_t> out;
    for (std::int64_t v : line.values) {
      const std::size_t d = non_negative(line, v);
      if (d > maximum) parse_error(source, line.number, "degree " + std::to_string(d) + " exceeds the stated maximum");
      out.push_back(d);
    }
    return out;
  };
  const auto col_degree = degrees(cols, max_col, "column degrees");
  const auto row_degree = degrees(rows, max_row, "row degrees");

  BitMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const Line& line = list_line("the list of column " + std::to_string(c + 1));
    std::size_t found = 0;
    for (std::int64_t v : line.values) {
      if (v == 0) continue;
      if (v < 0 || static_cast<std::size_t>(v) > rows) {
        parse_error(source, line.number, "row index " + std::to_string(v) + " out of range");
      }
      if (m.get(static_cast<std::size_t>(v - 1), c)) parse_error(source, line.number, "repeated row index " + std::to_string(v));
      m.set(static_cast<std::size_t>(v - 1), c, true);
      ++found;
    }
    if (found != col_degree[c]) {
      parse_error(source, line.number, "column " + std::to_string(c + 1) + " lists " + std::to_string(found) +
                                           " entries but its degree is " + std::to_string(col_degree[c]));
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const Line& line = list_line("the list of row " + std::to_string(r + 1));
    std::size_t found = 0;
    BitVector listed(cols);
    for (std::int64_t v : line.values) {
      if (v == 0) continue;
      if (v < 0 || static_cast<std::size_t>(v) > cols) {
        parse_error(source, line.number, "column index " + std::to_string(v) + " out of range");
      }
      if (listed.get(static_cast<std::size_t>(v - 1))) {
        parse_error(source, line.number, "repeated column index " + std::to_string(v));
      }
      listed.set(static_cast<std::size_t>(v - 1), true);
      if (!m.get(r, static_cast<std::size_t>(v - 1))) {
        parse_error(source, line.number, "row " + std::to_string(r + 1) + " lists column " + std::to_string(v) +
                                             ", which the column lists do not");
      }
      ++found;
    }
    if (found != row_degree[r] || found != m.row_weight(r)) {
      parse_error(source, line.number, "row " + std::to_string(r + 1) + " degree mismatch");
    }
  }
  for (; at < lines.size(); ++at) {
    if (!lines[at].values.empty()) parse_error(source, lines[at].number, "unexpected trailing data");
  }
  return m;
}

void write_alist(std::ostream& out, const BitMatrix& m) {
  const BitMatrix t = m.transpose();
  std::size_t max_col = 0, max_row = 0;
  for (std::size_t c = 0; c < t.rows(); ++c) max_col = std::max(max_col, t.row_weight(c));
  for (std::size_t r = 0; r < m.rows(); ++r) max_row = std::max(max_row, m.row_weight(r));
  out << m.cols() << ' ' << m.rows() << '\n' << max_col << ' ' << max_row << '\n';
  const auto degree_line = [&](const BitMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) out << (i ? " " : "") << a.row_weight(i);
    out << '\n';
  };
  degree_line(t);
  degree_line(m);
  const auto lists = [&](const BitMatrix& a, std::size_t width) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::size_t written = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!a.get(i, j)) continue;
        out << (written ? " " : "") << j + 1;
        ++written;
      }
      for (; written < width; ++written) out << (written ? " " : "") << 0;
      out << '\n';
    }
  };
  lists(t, max_col);
  lists(m, max_row);
}

BitMatrix parse_dense(std::istream& in, const std::string& source) {
  TokenStream ts(in, source);
  const auto [rows, cols] = read_shape(ts);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Token t = ts.next("entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
      if (t.value != 0 && t.value != 1) parse_error(source, t.line, "binary entry must be 0 or 1");
      if (t.value) m.set(r, c, true);
    }
  }
  ts.expect_end();
  return m;
}

void write_dense(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.get(r, c) ? 1 : 0);
    out << '\n';
  }
}

IntMatrix parse_int_matrix(std::istream& in, const std::string& source) {
  TokenStream ts(in, source);
  const auto [rows, cols] = read_shape(ts);
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          ts.next("entry (" + std::to_string(r) + ", " + std::to_string(c) + ")").value;
    }
  }
  ts.expect_end();
  return m;
}

void write_int_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << to_string(m);
}

BitMatrix read_bit_matrix(const fs::path& path, std::optional<MatrixFormat> format) {
  auto in = open_input(path);
  switch (format.value_or(format_from_path(path))) {
    case MatrixFormat::alist: return parse_alist(in, path.string());
    case MatrixFormat::dense: return parse_dense(in, path.string());
    case MatrixFormat::dense_int: return to_bits(parse_int_matrix(in, path.string()));
  }
  return {};
}

IntMatrix read_int_matrix(const fs::path& path) {
  auto in = open_input(path);
  return parse_int_matrix(in, path.string());
}

void write_bit_matrix(const fs::path& path, const BitMatrix& m, MatrixFormat format) {
  auto out = open_output(path);
  switch (format) {
    case MatrixFormat::alist: write_alist(out, m); break;
    case MatrixFormat::dense: write_dense(out, m); break;
    case MatrixFormat::dense_int: write_int_matrix(out, from_bits(m)); break;
  }
}

void write_int_matrix(const fs::path& path, const IntMatrix& m) {
  auto out = open_output(path);
  write_int_matrix(out, m);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

const char* class_name(VertexClass c) {
  switch (c) {
    case VertexClass::qubit: return "qubit";
    case VertexClass::x_check: return "x";
    case VertexClass::z_apex: return "z_apex";
  }
  return "qubit";
}

VertexClass class_from_name(const std::string& s) {
  if (s == "qubit") return VertexClass::qubit;
  if (s == "x") return VertexClass::x_check;
  if (s == "z_apex") return VertexClass::z_apex;
  throw Error(ErrorKind::parse, "unknown vertex class '" + s + "'");
}

const char* kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::tanner: return "tanner";
    case EdgeKind::apex: return "apex";
    case EdgeKind::z_type: return "z_type";
  }
  return "tanner";
}

EdgeKind kind_from_name(const std::string& s) {
  if (s == "tanner") return EdgeKind::tanner;
  if (s == "apex") return EdgeKind::apex;
  if (s == "z_type") return EdgeKind::z_type;
  throw Error(ErrorKind::parse, "unknown edge kind '" + s + "'");
}

json path_to_json(const EdgePath& path) {
  json out = json::array();
  for (const auto& oe : path) out.push_back(json::array({oe.edge, oe.forward ? 1 : -1}));
  return out;
}

EdgePath path_from_json(const json& j, std::size_t edge_count) {
  EdgePath out;
  for (const auto& step : j) {
    const auto edge = step.at(0).get<std::size_t>();
    const int direction = step.at(1).get<int>();
    if (edge >= edge_count || (direction != 1 && direction != -1)) {
      throw Error(ErrorKind::parse, "malformed path step");
    }
    out.push_back({edge, direction == 1});
  }
  return out;
}

}  // namespace

json presentation_to_json(const LiftPresentation& p) {
  json j;
  j["schema_version"] = schema_version;
  j["qubits"] = p.qubit_count;
  j["x_checks"] = p.x_count;
  j["z_checks"] = p.z_count;
  j["vertices"] = json::array();
  for (std::size_t v = 0; v < p.skeleton.vertex_count; ++v) {
    j["vertices"].push_back({{"id", v}, {"class", class_name(p.vertex_class[v])}, {"label", p.vertex_label[v]}});
  }
  j["edges"] = json::array();
  for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
    j["edges"].push_back({{"id", e},
                          {"from", p.skeleton.edges[e].from},
                          {"to", p.skeleton.edges[e].to},
                          {"kind", kind_name(p.edge_kind[e])},
                          {"parallel", p.edge_parallel[e]},
                          {"tree", static_cast<bool>(p.tree.in_tree[e])}});
  }
  j["generators"] = p.generators;
  j["regions"] = json::array();
  for (const auto& r : p.regions) {
    json region{{"z", r.z}, {"base", r.base ? json(*r.base) : json(nullptr)}, {"edges", r.edges}};
    region["relators"] = json::array();
    for (const auto& rel : r.relators) region["relators"].push_back(path_to_json(rel));
    region["terms"] = json::array();
    for (const auto& t : r.terms) {
      region["terms"].push_back(
          {{"q", t.q}, {"copy", t.copy ? json(*t.copy) : json(nullptr)}, {"path", path_to_json(t.path)}});
    }
    j["regions"].push_back(std::move(region));
  }
  return j;
}

LiftPresentation presentation_from_json(const json& j) {
  try {
    LiftPresentation p;
    p.qubit_count = j.at("qubits").get<std::size_t>();
    p.x_count = j.at("x_checks").get<std::size_t>();
    p.z_count = j.at("z_checks").get<std::size_t>();
    for (const auto& v : j.at("vertices")) {
      p.vertex_class.push_back(class_from_name(v.at("class").get<std::string>()));
      p.vertex_label.push_back(v.at("label").get<std::size_t>());
    }
    p.skeleton.vertex_count = p.vertex_class.size();
    std::vector<bool> in_tree;
    for (const auto& e : j.at("edges")) {
      const auto from = e.at("from").get<std::size_t>();
      const auto to = e.at("to").get<std::size_t>();
      if (from >= p.skeleton.vertex_count || to >= p.skeleton.vertex_count) {
        throw Error(ErrorKind::parse, "edge endpoint out of range");
      }
      p.skeleton.edges.push_back({from, to});
      p.edge_kind.push_back(kind_from_name(e.at("kind").get<std::string>()));
      p.edge_parallel.push_back(e.at("parallel").get<std::size_t>());
      in_tree.push_back(e.at("tree").get<bool>());
    }
    p.tree = forest_from_tree_edges(p.skeleton, in_tree);
    for (std::size_t e : p.tree.non_tree_edges) {
      const auto [a, b] = p.skeleton.edges[e];
      if (p.tree.component[a] != p.tree.component[b]) throw Error(ErrorKind::structure, "tree flags do not span the skeleton");
    }
    p.generators = p.tree.non_tree_edges;
    const std::size_t edge_count = p.skeleton.edges.size();
    for (const auto& r : j.at("regions")) {
      ZRegion region;
      region.z = r.at("z").get<std::size_t>();
      if (!r.at("base").is_null()) region.base = r.at("base").get<std::size_t>();
      region.edges = r.at("edges").get<std::vector<std::size_t>>();
      for (const auto& rel : r.at("relators")) region.relators.push_back(path_from_json(rel, edge_count));
      for (const auto& t : r.at("terms")) {
        ZTerm term;
        term.q = t.at("q").get<std::size_t>();
        if (!t.at("copy").is_null()) term.copy = t.at("copy").get<std::size_t>();
        term.path = path_from_json(t.at("path"), edge_count);
        region.terms.push_back(std::move(term));
      }
      p.regions.push_back(std::move(region));
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed presentation: ") + e.what());
  }
}

json voltages_to_json(const LiftPresentation& p, const VoltageAssignment& v) {
  json j{{"schema_version", schema_version}, {"degree", v.degree}, {"edges", json::array()}};
  const Permutation id = identity_permutation(v.degree);
  for (std::size_t e = 0; e < v.perms.size(); ++e) {
    if (v.perms[e] == id) continue;
    j["edges"].push_back({{"from", p.skeleton.edges[e].from},
                          {"to", p.skeleton.edges[e].to},
                          {"parallel", p.edge_parallel[e]},
                          {"perm", v.perms[e]}});
  }
  return j;
}

VoltageAssignment voltages_from_json(const json& j, const LiftPresentation& p) {
  try {
    const auto degree = j.at("degree").get<std::size_t>();
    if (degree == 0) throw Error(ErrorKind::validation, "cover degree must be positive");
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> lookup;
    for (std::size_t e = 0; e < p.skeleton.edges.size(); ++e) {
      lookup[{p.skeleton.edges[e].from, p.skeleton.edges[e].to, p.edge_parallel[e]}] = e;
    }
    VoltageAssignment v = identity_voltages(p, degree);
    std::vector<bool> seen(p.skeleton.edges.size(), false);
    for (const auto& entry : j.at("edges")) {
      const auto from = entry.at("from").get<std::size_t>();
      const auto to = entry.at("to").get<std::size_t>();
      const auto parallel = entry.value("parallel", std::size_t{0});
      const auto it = lookup.find({from, to, parallel});
      if (it == lookup.end()) {
        throw Error(ErrorKind::parse, "no edge " + std::to_string(from) + " -> " + std::to_string(to) +
                                          " with parallel index " + std::to_string(parallel));
      }
      if (seen[it->second]) throw Error(ErrorKind::parse, "edge " + std::to_string(it->second) + " listed twice");
      seen[it->second] = true;
      auto perm = entry.at("perm").get<Permutation>();
      if (!is_permutation(perm, degree)) {
        throw Error(ErrorKind::validation, "voltage on edge " + std::to_string(it->second) + " is not a permutation");
      }
      v.perms[it->second] = std::move(perm);
    }
    const Permutation id = identity_permutation(degree);
    for (std::size_t e = 0; e < v.perms.size(); ++e) {
      if (p.tree.in_tree[e] && v.perms[e] != id) return gauge_normalize(p, v);
    }
    return v;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed voltage file: ") + e.what());
  }
}

json read_json(const fs::path& path) {
  auto in = open_input(path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path.string() + ": " + e.what());
  }
}

CodeManifest parse_manifest(const fs::path& path) {
  const json j = read_json(path);
  const fs::path dir = path.parent_path();
  const auto resolve = [&](const std::string& s) {
    const fs::path p(s);
    return p.is_absolute() ? p : dir / p;
  };
  const auto matrix_ref = [&](const json& entry) {
    if (entry.is_string()) {
      const fs::path p = resolve(entry.get<std::string>());
      return MatrixRef{p, format_from_path(p)};
    }
    const fs::path p = resolve(entry.at("path").get<std::string>());
    return MatrixRef{p, entry.contains("format") ? format_from_name(entry.at("format").get<std::string>())
                                                 : format_from_path(p)};
  };
  try {
    CodeManifest m;
    m.hx = matrix_ref(j.at("hx"));
    if (j.contains("hz") && !j.at("hz").is_null()) m.hz = matrix_ref(j.at("hz"));
    if (j.contains("hx_lift")) m.hx_lift = resolve(j.at("hx_lift").get<std::string>());
    if (j.contains("hz_lift")) m.hz_lift = resolve(j.at("hz_lift").get<std::string>());
    if (j.contains("presentation")) {
      const auto s = j.at("presentation").get<std::string>();
      m.presentation = (s == "cone" || s == "cellular") ? s : resolve(s).string();
    }
    if (j.contains("voltages")) m.voltages = resolve(j.at("voltages").get<std::string>());
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, path.string() + ": malformed manifest: " + e.what());
  }
}

}  // namespace qlift
