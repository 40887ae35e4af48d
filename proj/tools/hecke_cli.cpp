// Command-line front end over the C interface.
//
// Exit status: 0 success, 1 a verification failed or the library hit an
// internal limit, 2 invalid usage or input.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke/hecke.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Thrown on a failed library call; carries the exit status.
struct CallFailed {
  int exit_code;
};

int exit_code_for(hk_status s) {
  switch (s) {
    case HK_INTERNAL:
    case HK_CAPACITY:
    case HK_OVERFLOW:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

void check(hk_status s) {
  if (s == HK_OK) return;
  std::cerr << "error (" << hk_status_name(s) << "): " << hk_last_error() << '\n';
  throw CallFailed{exit_code_for(s)};
}

struct StringDeleter {
  void operator()(char* s) const { hk_string_free(s); }
};
struct AlgebraDeleter {
  void operator()(hk_algebra* h) const { hk_algebra_destroy(h); }
};
struct ElementDeleter {
  void operator()(hk_element* e) const { hk_element_destroy(e); }
};
struct RepDeleter {
  void operator()(hk_rep* r) const { hk_rep_destroy(r); }
};
using Algebra = std::unique_ptr<hk_algebra, AlgebraDeleter>;
using Element = std::unique_ptr<hk_element, ElementDeleter>;
using Rep = std::unique_ptr<hk_rep, RepDeleter>;

std::string take(char* s) { return std::unique_ptr<char, StringDeleter>(s).get(); }

Algebra make_algebra(int m, int n) {
  hk_algebra* h = nullptr;
  check(hk_algebra_create(m, n, &h));
  return Algebra(h);
}

std::string render(const hk_element* e, hk_format format) {
  char* s = nullptr;
  check(hk_element_render(e, format, &s));
  return take(s);
}

struct Options {
  int m = 1;
  int n = 0;
  bool json = false;
  std::string output;
  std::string expression;
  bool allow_tau_inverse = false;
  bool count = false;
  std::string shape;
  std::string q;
  std::vector<std::string> v;
  int index = 0;
  std::string alpha;
  std::string beta;
  std::string h2_a;
  std::string h2_b;
  int sign = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pairs;
};

hk_format format_of(const Options& o) { return o.json ? HK_FORMAT_JSON : HK_FORMAT_TEXT; }

// Holds the strings an hk_param_spec points into.
struct SpecStorage {
  int m = 1;
  std::string q;
  std::vector<std::string> v;
  mutable hk_param_spec spec{};

  // Pointers are taken here, after any moves of the storage.
  const hk_param_spec* get() const {
    spec.m = m;
    spec.q = q.c_str();
    for (int j = 0; j < m; ++j) spec.v[j] = v[j].c_str();
    return &spec;
  }
};

std::optional<SpecStorage> spec_of(const Options& o, int m) {
  if (o.q.empty() && o.v.empty()) return std::nullopt;
  if (static_cast<int>(o.v.size()) != m) {
    std::cerr << "error: --v needs exactly " << m << " value(s)\n";
    throw CallFailed{kExitUsage};
  }
  SpecStorage s;
  s.q = o.q.empty() ? "2" : o.q;
  s.v = o.v;
  s.m = m;
  return s;
}

int shape_components(const std::string& shape) {
  try {
    const auto j = nlohmann::json::parse(shape);
    if (j.is_array()) return static_cast<int>(j.size());
  } catch (const nlohmann::json::exception&) {
  }
  return 0;
}

struct Result {
  std::string text;
  int exit_code = 0;
};

Result run_reduce(const Options& o) {
  Algebra h = make_algebra(o.m, o.n);
  hk_element* e = nullptr;
  check(hk_element_parse(h.get(), o.expression.c_str(), o.allow_tau_inverse ? 1 : 0, &e));
  Element owned(e);
  std::string out = render(owned.get(), format_of(o));
  if (!o.json) out += '\n';
  return {out};
}

Result run_basis(const Options& o) {
  Algebra h = make_algebra(o.m, o.n);
  if (o.count) {
    std::uint64_t size = 0;
    check(hk_algebra_basis_size(h.get(), &size));
    if (o.json) return {nlohmann::ordered_json{{"m", o.m}, {"n", o.n}, {"count", size}}.dump(2) + "\n"};
    return {std::to_string(size) + "\n"};
  }
  char* s = nullptr;
  check(hk_algebra_basis(h.get(), format_of(o), &s));
  return {take(s)};
}

Result run_tableaux(const Options& o) {
  char* s = nullptr;
  check(hk_tableaux_report(o.m, o.n, o.shape.empty() ? nullptr : o.shape.c_str(), format_of(o), &s));
  return {take(s)};
}

Result run_rep(const Options& o) {
  if (!o.h2_a.empty()) {
    char* s = nullptr;
    check(hk_h2_report(o.h2_a.c_str(), o.h2_b.empty() ? nullptr : o.h2_b.c_str(), o.sign, format_of(o), &s));
    return {take(s)};
  }
  if (o.shape.empty()) {
    std::cerr << "error: rep needs --shape or --h2-a\n";
    throw CallFailed{kExitUsage};
  }
  hk_rep* r = nullptr;
  check(hk_rep_create(o.shape.c_str(), &r));
  Rep rep(r);
  const auto spec = spec_of(o, shape_components(o.shape));
  char* s = nullptr;
  check(hk_rep_render(rep.get(), spec ? spec->get() : nullptr, format_of(o), &s));
  int ok = 0;
  check(hk_rep_verify(rep.get(), &ok));
  Result result{take(s)};
  if (!ok) {
    std::cerr << "representation relations FAILED\n";
    result.exit_code = kExitFailure;
  }
  return result;
}

Result run_jm(const Options& o) {
  Algebra h = make_algebra(o.m, o.n);
  Rep rep;
  if (!o.shape.empty()) {
    hk_rep* r = nullptr;
    check(hk_rep_create(o.shape.c_str(), &r));
    rep.reset(r);
  }
  std::vector<int> indices;
  if (o.index > 0) {
    indices.push_back(o.index);
  } else {
    for (int i = 1; i <= o.n; ++i) indices.push_back(i);
  }
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  std::string text;
  for (int i : indices) {
    hk_element* e = nullptr;
    check(hk_jm_element(h.get(), i, &e));
    Element owned(e);
    std::string matrix;
    if (rep) {
      char* s = nullptr;
      check(hk_rep_jm(rep.get(), i, &s));
      matrix = take(s);
    }
    if (o.json) {
      nlohmann::ordered_json entry{{"i", i}, {"element", nlohmann::ordered_json::parse(render(owned.get(), HK_FORMAT_JSON))}};
      if (rep) entry["matrix"] = nlohmann::ordered_json::parse(matrix);
      all.push_back(std::move(entry));
    } else {
      text += "J" + std::to_string(i) + " = " + render(owned.get(), HK_FORMAT_TEXT) + "\n";
      if (rep) text += "J" + std::to_string(i) + " on " + o.shape + " = " + matrix + "\n";
    }
  }
  return {o.json ? all.dump(2) + "\n" : text};
}

Result run_baxter(const Options& o) {
  Algebra h = make_algebra(o.m, o.n);
  if (!o.alpha.empty() || !o.beta.empty()) {
    hk_element* e = nullptr;
    check(hk_baxterize(h.get(), o.index > 0 ? o.index : 1, o.alpha.empty() ? "alpha" : o.alpha.c_str(),
                       o.beta.empty() ? "beta" : o.beta.c_str(), &e));
    Element owned(e);
    std::string out = render(owned.get(), format_of(o));
    if (!o.json) out += '\n';
    return {out};
  }
  char* s = nullptr;
  int ok = 0;
  check(hk_baxter_report(h.get(), format_of(o), &s, &ok));
  return {take(s), ok ? 0 : kExitFailure};
}

Result run_check(const Options& o) {
  hk_check_options options = hk_check_options_default();
  const auto spec = spec_of(o, o.m);
  if (spec) options.spec = spec->get();
  if (o.seed) options.seed = *o.seed;
  if (o.pairs) options.morphism_pairs = *o.pairs;
  char* s = nullptr;
  int ok = 0;
  check(hk_check(o.m, o.n, &options, format_of(o), &s, &ok));
  return {take(s), ok ? 0 : kExitFailure};
}

std::filesystem::path output_path(const std::string& output) {
  std::filesystem::path p(output);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("HECKE_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic Hecke algebras H(m,1,n): normal forms, seminormal representations and checks"};
  app.require_subcommand(1);
  Options o;

  auto add_mn = [&](CLI::App* sub) {
    sub->add_option("-m", o.m, "cyclotomic degree m")->check(CLI::Range(1, 7));
    sub->add_option("-n", o.n, "number of strands n")->check(CLI::Range(0, 9));
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "emit JSON");
    sub->add_option("-o,--output", o.output, "write to a file (relative to $HECKE_OUTPUT_DIR when set)");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "value of q for a numeric specialization");
    sub->add_option("--v", o.v, "values v1..vm, comma separated")->delimiter(',');
  };

  CLI::App* reduce = app.add_subcommand("reduce", "normal form of an expression");
  add_mn(reduce);
  reduce->add_option("expression", o.expression, "expression, e.g. \"s1 t s1\"")->required();
  reduce->add_flag("--allow-tau-inverse", o.allow_tau_inverse, "accept t^-1");
  add_common(reduce);

  CLI::App* basis = app.add_subcommand("basis", "normal-word basis");
  add_mn(basis);
  basis->add_flag("--count", o.count, "print only the number of basis words");
  add_common(basis);

  CLI::App* tableaux = app.add_subcommand("tableaux", "m-partitions, standard tableaux and content strings");
  add_mn(tableaux);
  tableaux->add_option("--shape", o.shape, "one m-partition, e.g. \"[[2,1],[1]]\"");
  add_common(tableaux);

  CLI::App* rep = app.add_subcommand("rep", "seminormal matrices of a shape, or a two-strand representation");
  rep->add_option("--shape", o.shape, "m-partition, e.g. \"[[2,1],[1]]\"");
  add_spec(rep);
  rep->add_option("--h2-a", o.h2_a, "eigenvalue a of X for the two-strand representation");
  rep->add_option("--h2-b", o.h2_b, "eigenvalue b of X (two-dimensional case)");
  rep->add_option("--sign", o.sign, "sign of the one-dimensional case")->check(CLI::IsMember({-1, 1}));
  add_common(rep);

  CLI::App* jm = app.add_subcommand("jm", "Jucys-Murphy elements and their matrices");
  add_mn(jm);
  jm->add_option("-i", o.index, "only J_i");
  jm->add_option("--shape", o.shape, "also print the matrix on this shape");
  add_common(jm);

  CLI::App* baxter = app.add_subcommand("baxter", "Baxterized generators and their identities");
  add_mn(baxter);
  baxter->add_option("-i", o.index, "generator index for --alpha/--beta");
  baxter->add_option("--alpha", o.alpha, "first spectral parameter; prints the baxterized element");
  baxter->add_option("--beta", o.beta, "second spectral parameter");
  add_common(baxter);

  CLI::App* checkcmd = app.add_subcommand("check", "run every verification suite for (m, n)");
  add_mn(checkcmd);
  add_spec(checkcmd);
  checkcmd->add_option("--seed", o.seed, "seed for the random morphism pairs");
  checkcmd->add_option("--pairs", o.pairs, "number of random morphism pairs");
  add_common(checkcmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  Result result;
  try {
    if (*reduce) result = run_reduce(o);
    if (*basis) result = run_basis(o);
    if (*tableaux) result = run_tableaux(o);
    if (*rep) result = run_rep(o);
    if (*jm) result = run_jm(o);
    if (*baxter) result = run_baxter(o);
    if (*checkcmd) result = run_check(o);
  } catch (const CallFailed& f) {
    return f.exit_code;
  }

  if (o.output.empty()) {
    std::cout << result.text;
  } else {
    const auto path = output_path(o.output);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << path.string() << '\n';
      return kExitUsage;
    }
    file << result.text;
  }
  return result.exit_code;
}
