#include "pca/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pca::io {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t to_u64(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

// Top-level split before '+' and '-' signs (outside brackets).
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    bool exp_sign = i > 0 && s[i - 1] == '^';
    if (depth == 0 && (c == '+' || c == '-') && !cur.empty() && !exp_sign) {
      out.push_back(cur);
      cur.clear();
      if (c == '-') cur = "-";
      continue;
    }
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

// Fields ---------------------------------------------------------------------

Json field_to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return {{"kind", "rationals"}};
    case FieldKind::Prime:
      return {{"kind", "prime"}, {"p", f.characteristic()}};
    case FieldKind::RationalFunction:
      return {{"kind", "rational_functions"}, {"p", f.characteristic()}};
    case FieldKind::Extension: {
      Json m = Json::array();
      for (const auto& c : f.minpoly()) m.push_back(c.to_string());
      return {{"kind", "extension"}, {"base", field_to_json(f.base())}, {"minpoly", m}};
    }
  }
  bad("unknown field kind");
}

Field field_from_json(const Json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  const Json& k = member(j, "kind");
  if (!k.is_string()) bad("field kind must be a string");
  std::string kind = k.get<std::string>();
  if (kind == "rationals") return Field::rationals();
  if (kind == "prime") return Field::prime(to_u64(member(j, "p"), "p"));
  if (kind == "rational_functions") return Field::rational_functions(to_u64(member(j, "p"), "p"));
  if (kind == "extension") {
    Field base = field_from_json(member(j, "base"));
    const Json& m = member(j, "minpoly");
    if (!m.is_array()) bad("minpoly must be a list");
    std::vector<Scalar> c;
    for (const auto& x : m) c.push_back(scalar_from_json(base, x));
    return Field::extension(base, c);
  }
  bad("unknown field kind '" + kind + "'");
}

Polynomial parse_polynomial(const Field& f, const std::string& text, const std::string& var) {
  std::string s = strip(text);
  if (s.empty()) bad("empty polynomial");
  std::vector<Scalar> coeffs;
  for (std::string term : split_terms(s)) {
    bool neg = false;
    if (!term.empty() && (term[0] == '-' || term[0] == '+')) {
      neg = term[0] == '-';
      term.erase(0, 1);
    }
    std::size_t pos = std::string::npos;
    // the variable occurs at the end, as "x" or "x^k"
    for (std::size_t i = term.size(); i-- > 0;)
      if (term.compare(i, var.size(), var) == 0 && (i == 0 || term[i - 1] == '*' || term[i - 1] == ')' || std::isdigit(static_cast<unsigned char>(term[i - 1])))) {
        std::string rest = term.substr(i + var.size());
        if (rest.empty() || (rest[0] == '^' && rest.find_first_not_of("0123456789", 1) == std::string::npos && rest.size() > 1)) {
          pos = i;
          break;
        }
      }
    std::size_t degree = 0;
    std::string coeff = term;
    if (pos != std::string::npos) {
      std::string rest = term.substr(pos + var.size());
      degree = rest.empty() ? 1 : std::stoul(rest.substr(1));
      coeff = term.substr(0, pos);
      if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    }
    if (coeff.size() >= 2 && coeff.front() == '(' && coeff.back() == ')') coeff = coeff.substr(1, coeff.size() - 2);
    Scalar c = coeff.empty() ? f.one() : f.parse(coeff);
    if (neg) c = -c;
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, f.zero());
    coeffs[degree] += c;
  }
  return Polynomial(f, coeffs);
}

Field parse_field(const std::string& descriptor) {
  std::string s = strip(descriptor);
  if (s == "QQ" || s == "Q") return Field::rationals();
  auto ext = s.find("[x]/(");
  if (ext != std::string::npos) {
    if (s.back() != ')') bad("bad extension descriptor '" + descriptor + "'");
    Field base = parse_field(s.substr(0, ext));
    Polynomial m = parse_polynomial(base, s.substr(ext + 5, s.size() - ext - 6));
    std::vector<Scalar> c;
    for (Index i = 0; i <= m.degree(); ++i) c.push_back(m.coeff(static_cast<std::size_t>(i)));
    return Field::extension(base, c);
  }
  auto prime_of = [&](const std::string& body) -> std::uint64_t {
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos) bad("bad field descriptor '" + descriptor + "'");
    return std::stoull(body);
  };
  if (s.rfind("GF(", 0) == 0) {
    auto close = s.find(')');
    if (close == std::string::npos) bad("bad field descriptor '" + descriptor + "'");
    std::uint64_t p = prime_of(s.substr(3, close - 3));
    std::string rest = s.substr(close + 1);
    if (rest.empty()) return Field::prime(p);
    if (rest == "(t)") return Field::rational_functions(p);
  }
  bad("bad field descriptor '" + descriptor + "'");
}

// Scalars and matrices ------------------------------------------------------

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  bad("scalar must be a string or an integer");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.rows(); ++i) out.push_back(v(i).to_string());
  return out;
}

Vector vector_from_json(const Field& f, const Json& j) {
  if (!j.is_array()) bad("vector must be a list");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = scalar_from_json(f, j[i]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

Matrix matrix_from_json(const Field& f, const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) bad("matrix must have " + std::to_string(rows) + " rows");
  Matrix m = zeros(f, rows, cols);
  for (Index r = 0; r < rows; ++r) {
    Vector row = vector_from_json(f, j[static_cast<std::size_t>(r)]);
    if (row.rows() != cols) bad("matrix rows must have " + std::to_string(cols) + " entries");
    m.row(r) = row.transpose();
  }
  return m;
}

// Algebras ---------------------------------------------------------------------

Json algebra_to_json(const FinAlg& a) {
  Json mult = Json::array();
  for (const auto& c : a.structure_constants()) mult.push_back({c.i, c.j, c.k, c.value.to_string()});
  return {{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"basis", a.labels()},
          {"unit", vector_to_json(a.unit())}, {"mult", mult}};
}

FinAlg algebra_from_json(const Json& j) {
  Field f = field_from_json(member(j, "field"));
  const Index n = static_cast<Index>(to_u64(member(j, "dim"), "dim"));
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) bad("basis must be a list of labels");
    for (const auto& l : j["basis"]) {
      if (!l.is_string()) bad("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (Index i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (static_cast<Index>(labels.size()) != n) bad("basis has the wrong number of labels");
  std::vector<StructureConstant> mult;
  const Json& m = member(j, "mult");
  if (!m.is_array()) bad("mult must be a list");
  for (const auto& e : m) {
    if (!e.is_array() || e.size() != 4) bad("mult entries are [i, j, k, scalar]");
    mult.push_back({static_cast<Index>(to_u64(e[0], "i")), static_cast<Index>(to_u64(e[1], "j")),
                    static_cast<Index>(to_u64(e[2], "k")), scalar_from_json(f, e[3])});
  }
  std::optional<Vector> unit;
  if (j.contains("unit")) {
    unit = vector_from_json(f, j["unit"]);
    if (unit->rows() != n) bad("unit has the wrong length");
  }
  return FinAlg::make(f, labels, mult, unit);
}

// Quivers and towers -----------------------------------------------------------

Json quiver_to_json(const QuiverSpec& q) {
  Json arrows = Json::array(), rels = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"name", a.name}, {"src", a.source}, {"tgt", a.target}});
  for (const auto& r : q.relations) {
    Json terms = Json::array();
    for (const auto& t : r) terms.push_back({{"coeff", t.coeff.to_string()}, {"path", t.path}});
    rels.push_back({{"terms", terms}});
  }
  return {{"vertices", q.vertices}, {"arrows", arrows}, {"relations", rels}};
}

QuiverSpec quiver_from_json(const Field& f, const Json& j) {
  QuiverSpec q;
  try {
    q.vertices = member(j, "vertices").get<std::vector<std::string>>();
    for (const auto& a : member(j, "arrows"))
      q.arrows.push_back({member(a, "name").get<std::string>(), member(a, "src").get<std::string>(),
                          member(a, "tgt").get<std::string>()});
    if (j.contains("relations"))
      for (const auto& r : j["relations"]) {
        std::vector<RelationTerm> rel;
        for (const auto& t : member(r, "terms"))
          rel.push_back({scalar_from_json(f, member(t, "coeff")), member(t, "path").get<std::vector<std::string>>()});
        q.relations.push_back(std::move(rel));
      }
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed quiver: ") + e.what());
  }
  return q;
}

Json tower_to_json(const Tower& t) {
  Json levels = Json::array(), maps = Json::array();
  for (const auto& l : t.levels()) levels.push_back(algebra_to_json(l));
  for (const auto& m : t.maps()) maps.push_back(matrix_to_json(m.matrix()));
  Json out = {{"levels", levels}, {"maps", maps}, {"metadata", t.metadata()}};
  if (t.quiver()) out["quiver"] = quiver_to_json(*t.quiver());
  return out;
}

Tower tower_from_json(const Json& j) {
  std::vector<FinAlg> levels;
  const Json& lv = member(j, "levels");
  if (!lv.is_array() || lv.empty()) bad("levels must be a non-empty list");
  for (const auto& l : lv) levels.push_back(algebra_from_json(l));
  const Json& mp = member(j, "maps");
  if (!mp.is_array() || mp.size() + 1 != levels.size()) bad("a tower of depth N needs N - 1 maps");
  std::vector<Matrix> maps;
  const Field& f = levels[0].field();
  for (std::size_t i = 0; i < mp.size(); ++i) maps.push_back(matrix_from_json(f, mp[i], levels[i].dim(), levels[i + 1].dim()));
  std::map<std::string, std::string> meta;
  if (j.contains("metadata")) {
    try {
      meta = j["metadata"].get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
      bad(std::string("metadata must map strings to strings: ") + e.what());
    }
  }
  std::optional<QuiverSpec> q;
  if (j.contains("quiver")) q = quiver_from_json(f, j["quiver"]);
  return Tower::make(std::move(levels), maps, std::move(meta), std::move(q));
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace pca::io
