#include "pca/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "pca/io.hpp"
#include "pca/malcev.hpp"
#include "pca/radical.hpp"
#include "pca/separability.hpp"
#include "pca/tower.hpp"
#include "pca/wedderburn.hpp"

namespace pca::cli {

namespace {

using io::Json;

constexpr int kOk = 0;
constexpr int kNegative = 2;
constexpr int kInputError = 1;

std::string sha256(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InternalVerificationFailed, "SHA-256 failed");
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + s.str();
}

struct Options {
  bool json = false;
  bool verify =
#ifdef NDEBUG
      false;
#else
      true;
#endif
  std::uint64_t seed = 0;
};

struct Report {
  std::string command;
  std::string digest;
  Json results = Json::object();
  Json verified = Json::object();
  int code = kOk;
};

// Nested objects become dotted keys; arrays of scalars print inline.
void render(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (!flat) {
      for (std::size_t i = 0; i < j.size(); ++i) render(j[i], prefix + "[" + std::to_string(i) + "]", out);
      if (j.empty()) out << prefix << ": []\n";
      return;
    }
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit(const Report& r, const Options& o, std::ostream& out) {
  Json doc = {{"command", r.command}, {"input_digest", r.digest}, {"results", r.results}, {"verified", r.verified}};
  if (o.json) {
    out << io::dump(doc);
  } else {
    render(doc, "", out);
  }
}

struct Input {
  std::string bytes;
  FinAlg algebra;
};

Input load_algebra(const std::string& path) {
  std::string bytes = io::read_file(path);
  return {bytes, io::algebra_from_json(io::parse_document(bytes))};
}

Json rows(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::vector_to_json(v));
  return out;
}

// Commands -----------------------------------------------------------------------

Report cmd_radical(const std::string& file, bool oracle, const Options& o) {
  Input in = load_algebra(file);
  const FinAlg& a = in.algebra;
  Report r{"radical", sha256(in.bytes)};
  RadicalResult res = radical(a);
  r.results["dim"] = res.radical.dim();
  r.results["basis"] = rows(res.radical.space().basis_vectors());
  r.results["nilpotency_index"] = res.nilpotency_index;
  r.results["method"] = to_string(res.method);
  Json fd = Json::array();
  for (const auto& i : res.filtration) fd.push_back(i.dim());
  r.results["filtration_dims"] = fd;
  r.verified["postconditions"] = res.verified;
  bool want_oracle = oracle || (o.verify && a.field().kind() == FieldKind::Prime);
  if (want_oracle) {
    try {
      r.verified["oracle_agrees"] = radical_oracle(a) == res.radical;
    } catch (const Error& e) {
      if (oracle || e.kind() != ErrorKind::TooLarge) throw;
    }
  }
  return r;
}

Report cmd_wedderburn(const std::string& file, const Options& o) {
  Input in = load_algebra(file);
  const FinAlg& a = in.algebra;
  Report r{"wedderburn", sha256(in.bytes)};
  if (!is_semisimple(a)) {
    r.results["semisimple"] = false;
    r.results["radical_dim"] = radical(a).radical.dim();
    r.code = kNegative;
    return r;
  }
  BlockDecomposition d = central_idempotents(a, o.seed);
  r.results["semisimple"] = true;
  Json blocks = Json::array();
  for (const auto& b : d.block_data) {
    Json x = {{"dim", b.total_dim}, {"center_dim", b.center_dim}};
    if (b.matrix_degree) x["matrix_degree"] = *b.matrix_degree;
    blocks.push_back(x);
  }
  r.results["blocks"] = blocks;
  r.results["idempotents"] = rows(d.idempotents);
  r.verified["reassembly_bijective"] = d.reassembly.is_injective() && d.reassembly.is_surjective();
  if (o.verify) {
    bool ok = true;
    Vector sum = a.zero();
    for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
      const Vector& e = d.idempotents[i];
      sum += e;
      ok = ok && equal(a.mul(e, e), e) && center(a).contains(e);
      for (std::size_t j = 0; j < i; ++j) ok = ok && is_zero(a.mul(e, d.idempotents[j]));
    }
    r.verified["central_orthogonal_complete"] = ok && equal(sum, a.unit());
  }
  return r;
}

Report cmd_septest(const std::string& file, const Options& o) {
  Input in = load_algebra(file);
  Report r{"septest", sha256(in.bytes)};
  auto p = sep_idempotent(in.algebra);
  r.results["separable"] = p.has_value();
  if (p && o.verify) r.verified["idempotent"] = is_separability_idempotent(in.algebra, p->tensor_coeffs);
  if (!p) r.code = kNegative;
  return r;
}

Report cmd_sepidem(const std::string& file, const Options& o) {
  Input in = load_algebra(file);
  const FinAlg& a = in.algebra;
  Report r{"sepidem", sha256(in.bytes)};
  auto p = sep_idempotent(a);
  r.results["separable"] = p.has_value();
  if (!p) {
    r.code = kNegative;
    return r;
  }
  Json coeffs = Json::array();
  const Index n = a.dim();
  for (Index i = 0; i < n * n; ++i)
    if (!p->tensor_coeffs(i).is_zero())
      coeffs.push_back({i / n, i % n, p->tensor_coeffs(i).to_string()});
  r.results["basis"] = a.labels();
  r.results["coefficients"] = coeffs;
  if (o.verify) r.verified["idempotent"] = is_separability_idempotent(a, p->tensor_coeffs);
  return r;
}

Report cmd_nilpotent(const std::string& file, const std::string& element, const Options&) {
  Input in = load_algebra(file);
  const FinAlg& a = in.algebra;
  Report r{"nilpotent", sha256(in.bytes + "\n" + element)};
  Vector x = io::vector_from_json(a.field(), io::parse_document(element));
  if (x.rows() != a.dim()) throw Error(ErrorKind::AmbientMismatch, "element has the wrong length");
  auto w = nilpotent_witness(a, x);
  r.results["nilpotent"] = w.has_value();
  if (w) r.results["index"] = *w;
  return r;
}

Json split_results(const Splitting& s) {
  Json out;
  out["section"] = io::matrix_to_json(s.section.matrix());
  out["quotient_basis"] = s.quotient.algebra.labels();
  out["image_basis"] = rows(s.image.basis_vectors());
  out["radical_basis"] = rows(s.radical.space().basis_vectors());
  return out;
}

Report cmd_split(const std::string& file, const Options& o) {
  Input in = load_algebra(file);
  Report r{"split", sha256(in.bytes)};
  Splitting s = wedderburn_splitting(in.algebra, o.seed);
  r.results = split_results(s);
  r.verified["section_is_hom"] = true;
  r.verified["complement"] = s.image.dim() + s.radical.dim() == in.algebra.dim();
  if (o.verify) {
    bool ok = true;
    for (const auto& i : radical(in.algebra).filtration) ok = ok && check_ideal_lemma(s, i);
    r.verified["ideal_lemma_on_radical_powers"] = ok;
  }
  return r;
}

Matrix read_section(const FinAlg& a, const std::string& path, std::string& bytes) {
  bytes = io::read_file(path);
  Json doc = io::parse_document(bytes);
  const Json* sec = nullptr;
  if (doc.contains("results") && doc["results"].contains("section")) sec = &doc["results"]["section"];
  else if (doc.contains("section")) sec = &doc["section"];
  if (!sec || !sec->is_array() || sec->empty()) throw Error(ErrorKind::Parse, path + " has no section matrix");
  Index cols = static_cast<Index>((*sec)[0].size());
  return io::matrix_from_json(a.field(), *sec, a.dim(), cols);
}

Report cmd_conjugate(const std::string& file, const std::string& s1, const std::string& s2, const Options& o) {
  Input in = load_algebra(file);
  std::string b1, b2;
  Matrix m1 = read_section(in.algebra, s1, b1), m2 = read_section(in.algebra, s2, b2);
  Report r{"conjugate", sha256(in.bytes + b1 + b2)};
  Splitting sp1 = make_splitting(in.algebra, m1), sp2 = make_splitting(in.algebra, m2);
  Conjugator c = malcev_conjugator(sp1, sp2);
  r.results["omega"] = io::vector_to_json(c.omega);
  r.results["inverse"] = io::vector_to_json(c.inverse);
  r.results["route"] = to_string(c.route);
  r.verified["omega_in_radical"] = sp1.radical.space().contains(c.omega);
  if (o.verify) {
    const FinAlg& a = in.algebra;
    Vector g = a.unit() - c.omega;
    bool ok = equal(a.mul(g, c.inverse), a.unit());
    for (Index x = 0; x < sp1.quotient.algebra.dim(); ++x) {
      Vector b = sp1.quotient.algebra.basis_vector(x);
      ok = ok && equal(a.mul(a.mul(g, sp2.section.apply(b)), c.inverse), sp1.section.apply(b));
    }
    r.verified["conjugation"] = ok;
  }
  return r;
}

struct BuildArgs {
  std::string kind, field, quiver, output;
  std::size_t depth = 0;
  std::uint64_t p = 2;
  std::vector<std::string> factors;
};

Report cmd_tower_build(const BuildArgs& b, const Options&, std::ostream& out) {
  Field f = io::parse_field(b.field);
  std::string digest_input = "kind=" + b.kind + ";field=" + f.describe() + ";depth=" + std::to_string(b.depth) +
                             ";p=" + std::to_string(b.p) + ";";
  std::optional<Tower> t;
  if (b.kind == "powerseries") {
    t = power_series_tower(f, b.depth);
  } else if (b.kind == "cyclicgroup") {
    t = cyclic_group_tower(b.p, f, b.depth);
  } else if (b.kind == "path") {
    if (b.quiver.empty()) throw Error(ErrorKind::BadSpec, "--kind path needs --quiver");
    std::string bytes = io::read_file(b.quiver);
    digest_input += bytes;
    t = path_algebra_tower(io::quiver_from_json(f, io::parse_document(bytes)), f, b.depth);
  } else if (b.kind == "product") {
    std::vector<FinAlg> factors;
    for (const auto& path : b.factors) {
      std::string bytes = io::read_file(path);
      digest_input += bytes;
      factors.push_back(io::algebra_from_json(io::parse_document(bytes)));
    }
    if (factors.empty()) factors.assign(b.depth, matrix_algebra(1, f));
    t = product_tower(factors, b.depth);
  } else {
    throw Error(ErrorKind::BadSpec, "unknown tower kind '" + b.kind + "'");
  }
  Report r{"tower build", sha256(digest_input)};
  Json dims = Json::array();
  for (const auto& l : t->levels()) dims.push_back(l.dim());
  r.results["kind"] = t->kind();
  r.results["level_dims"] = dims;
  std::string doc = io::dump(io::tower_to_json(*t));
  if (b.output.empty()) {
    out << doc;
  } else {
    std::ofstream o(b.output, std::ios::binary);
    if (!o) throw Error(ErrorKind::Parse, "cannot write " + b.output);
    o << doc;
    r.results["output"] = b.output;
  }
  return r;
}

Report cmd_tower_check(const std::string& file, const Options&) {
  std::string bytes = io::read_file(file);
  Tower t = io::tower_from_json(io::parse_document(bytes));
  Report r{"tower check", sha256(bytes)};
  TowerRadicalReport rad = tower_radical_check(t);
  r.results["kind"] = t.kind();
  r.results["radical_dims"] = rad.radical_dims;
  r.results["nilpotency_indices"] = rad.nilpotency_indices;
  r.results["semisimple"] = tower_semisimple_check(t);
  r.verified["radical_onto_radical"] = true;
  if (t.quiver()) {
    r.verified["radical_is_arrow_ideal"] = quiver_radical_check(t);
    const auto& q = *t.quiver();
    if (q.vertices.size() == 1 && q.arrows.size() == 1 && q.relations.empty()) {
      loop_quiver_isomorphism(t);
      r.verified["isomorphic_to_power_series"] = true;
    }
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure of finite-dimensional algebras and their towers", "pca"};
  app.require_subcommand(1);
  Options o;
  auto add_globals = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable JSON report");
    c->add_option("--seed", o.seed, "seed for randomized choices (default 0)");
    c->add_flag("--verify,!--no-verify", o.verify, "re-run postcondition checks");
  };
  add_globals(&app);

  std::string file, element, s1, s2;
  bool oracle = false;
  auto* radical_cmd = app.add_subcommand("radical", "Jacobson radical");
  radical_cmd->add_option("file", file, "algebra file")->required();
  radical_cmd->add_flag("--oracle", oracle, "compare with brute-force enumeration");
  auto* wedderburn_cmd = app.add_subcommand("wedderburn", "block decomposition of a semisimple algebra");
  wedderburn_cmd->add_option("file", file, "algebra file")->required();
  auto* septest_cmd = app.add_subcommand("septest", "decide separability");
  septest_cmd->add_option("file", file, "algebra file")->required();
  auto* sepidem_cmd = app.add_subcommand("sepidem", "separability idempotent");
  sepidem_cmd->add_option("file", file, "algebra file")->required();
  auto* nilpotent_cmd = app.add_subcommand("nilpotent", "nilpotency of an element");
  nilpotent_cmd->add_option("file", file, "algebra file")->required();
  nilpotent_cmd->add_option("--element", element, "coordinates as a JSON list")->required();
  auto* split_cmd = app.add_subcommand("split", "Wedderburn-Malcev splitting");
  split_cmd->add_option("file", file, "algebra file")->required();
  auto* conjugate_cmd = app.add_subcommand("conjugate", "conjugator between two splittings");
  conjugate_cmd->add_option("file", file, "algebra file")->required();
  conjugate_cmd->add_option("--s1", s1, "splitting report")->required();
  conjugate_cmd->add_option("--s2", s2, "splitting report")->required();

  auto* tower_cmd = app.add_subcommand("tower", "towers of truncations");
  tower_cmd->require_subcommand(1);
  BuildArgs build;
  auto* build_cmd = tower_cmd->add_subcommand("build", "construct a tower file");
  build_cmd->add_option("--kind", build.kind, "powerseries|cyclicgroup|path|product")
      ->required()
      ->check(CLI::IsMember({"powerseries", "cyclicgroup", "path", "product"}));
  build_cmd->add_option("--field", build.field, "field descriptor")->required();
  build_cmd->add_option("--depth", build.depth, "number of levels")->required();
  build_cmd->add_option("--p", build.p, "prime for cyclicgroup (default 2)");
  build_cmd->add_option("--quiver", build.quiver, "quiver file for path");
  build_cmd->add_option("--factor", build.factors, "algebra files for product (default: copies of the field)");
  build_cmd->add_option("-o,--output", build.output, "tower file to write");
  auto* check_cmd = tower_cmd->add_subcommand("check", "levelwise theorem checks");
  check_cmd->add_option("file", file, "tower file")->required();
  for (auto* c : {radical_cmd, wedderburn_cmd, septest_cmd, sepidem_cmd, nilpotent_cmd, split_cmd, conjugate_cmd,
                  build_cmd, check_cmd})
    add_globals(c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    Report r;
    if (*radical_cmd) r = cmd_radical(file, oracle, o);
    else if (*wedderburn_cmd) r = cmd_wedderburn(file, o);
    else if (*septest_cmd) r = cmd_septest(file, o);
    else if (*sepidem_cmd) r = cmd_sepidem(file, o);
    else if (*nilpotent_cmd) r = cmd_nilpotent(file, element, o);
    else if (*split_cmd) r = cmd_split(file, o);
    else if (*conjugate_cmd) r = cmd_conjugate(file, s1, s2, o);
    else if (*build_cmd) r = cmd_tower_build(build, o, out);
    else r = cmd_tower_check(file, o);
    // a tower written to stdout is the output; the report goes to stderr
    emit(r, o, (*build_cmd && build.output.empty()) ? err : out);
    return r.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace pca::cli
