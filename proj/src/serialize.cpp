#include "hecke/serialize.hpp"

#include <sstream>

namespace hecke {

namespace {

std::string verdict(bool ok) { return ok ? "ok" : "FAILED"; }

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::vector<std::string> content_texts(const StandardMTableau& t) {
  std::vector<std::string> out;
  for (const Content& c : content_string(t)) out.push_back(c.to_scalar().to_string());
  return out;
}

}  // namespace

Json to_json(const Element& e) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : e.terms()) {
    terms.push_back({{"word", NormalWord::from_key(key, e.params().n).to_string()}, {"coeff", coeff.to_string()}});
  }
  return {{"m", e.params().m}, {"n", e.params().n}, {"terms", std::move(terms)}, {"text", e.to_string()}};
}

Json to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const MPartition& p) { return Json(p.components); }

Json to_json(const StandardMTableau& t) { return {{"filling", t.filling()}, {"contents", content_texts(t)}}; }

Json to_json(const ParamSpec& p) {
  Json v = Json::array();
  for (const Rational& x : p.v) v.push_back(rational_to_string(x));
  return {{"q", rational_to_string(p.q)}, {"v", std::move(v)}};
}

Json to_json(const H2Rep& r) {
  Json out = {{"dimension", r.dimension}, {"a", r.a.to_string()}};
  if (r.b) {
    out["b"] = r.b->to_string();
  } else {
    out["sign"] = r.sign;
  }
  out["X"] = to_json(r.x);
  out["Y"] = to_json(r.y);
  out["sigma"] = to_json(r.sigma);
  out["relations"] = verify_affine_relations(r);
  return out;
}

Json to_json(const BaxterReport& r) {
  return {{"unitarity", optional_bool(r.unitarity)},
          {"yang_baxter", optional_bool(r.yang_baxter)},
          {"locality", optional_bool(r.locality)},
          {"ok", r.ok()}};
}

Json to_json(const CompletenessReport& r) {
  Json dims = Json::array();
  for (const auto& [shape, d] : r.dimensions) dims.push_back({{"shape", to_json(shape)}, {"dimension", d}});
  return {{"dimensions", std::move(dims)},
          {"sum_of_squares", r.sum_of_squares},
          {"group_order", r.group_order},
          {"equal", r.equal()}};
}

Json to_json(const CheckReport& r) {
  Json out = {{"algebra", r.params.to_string()}, {"m", r.params.m}, {"n", r.params.n}, {"spec", to_json(r.spec)}};
  out["completeness"] = to_json(r.completeness);
  out["spectrum"] = {{"tableaux", r.spectrum.entries.size()},
                     {"jm_diagonal", r.spectrum.jm_diagonal},
                     {"all_content_strings", r.spectrum.all_content_strings},
                     {"pairwise_distinct", r.spectrum.pairwise_distinct},
                     {"matches_tableaux", r.spectrum.matches_tableaux},
                     {"ok", r.spectrum.ok()}};
  if (r.relations) {
    Json failures = Json::array();
    for (const MPartition& p : r.relations->failures) failures.push_back(to_json(p));
    out["relations"] = {{"shapes", r.relations->shapes}, {"failures", std::move(failures)}, {"ok", r.relations->ok()}};
  } else {
    out["relations"] = nullptr;
  }
  if (r.injectivity) {
    out["injectivity"] = {{"basis_size", r.injectivity->basis_size},
                          {"rank", r.injectivity->rank},
                          {"ok", r.injectivity->ok()}};
  } else {
    out["injectivity"] = nullptr;
  }
  out["morphism"] = {{"pairs", r.morphism.pairs},
                     {"failures", r.morphism.failures},
                     {"seed", r.morphism.seed},
                     {"ok", r.morphism.ok()}};
  if (r.flatness) {
    out["flatness"] = {{"products", r.flatness->products},
                       {"coefficients", r.flatness->coefficients},
                       {"non_laurent", r.flatness->non_laurent},
                       {"ok", r.flatness->ok()}};
  } else {
    out["flatness"] = nullptr;
  }
  out["skipped"] = r.skipped;
  out["ok"] = r.ok();
  return out;
}

Json representation_json(const Representation& rep, const std::optional<ParamSpec>& spec) {
  Json basis = Json::array();
  for (const StandardMTableau& t : rep.basis) basis.push_back(to_json(t));
  Json out = {{"shape", to_json(rep.shape)}, {"dimension", rep.dimension()}, {"basis", std::move(basis)}};
  if (spec) {
    out["spec"] = to_json(*spec);
    out["tau"] = to_json(specialize(rep.tau, *spec));
    Json sigma = Json::array();
    for (const ScalarMatrix& s : rep.sigma) sigma.push_back(to_json(specialize(s, *spec)));
    out["sigma"] = std::move(sigma);
  } else {
    out["tau"] = to_json(rep.tau);
    Json sigma = Json::array();
    for (const ScalarMatrix& s : rep.sigma) sigma.push_back(to_json(s));
    out["sigma"] = std::move(sigma);
  }
  return out;
}

std::string representation_text(const Representation& rep, const std::optional<ParamSpec>& spec) {
  const Json j = representation_json(rep, spec);
  std::ostringstream os;
  os << "shape " << rep.shape.to_string() << ", dimension " << rep.dimension();
  if (spec) os << ", at " << spec->to_string();
  os << '\n';
  for (std::size_t k = 0; k < rep.basis.size(); ++k) {
    os << "  " << k << ": " << rep.basis[k].to_string() << ' ' << content_string_to_string(content_string(rep.basis[k]))
       << '\n';
  }
  os << "t = " << j["tau"].dump() << '\n';
  for (std::size_t i = 0; i < rep.sigma.size(); ++i) os << 's' << i + 1 << " = " << j["sigma"][i].dump() << '\n';
  return os.str();
}

Json basis_json(const Algebra& h) {
  Json words = Json::array();
  for (const NormalWord& w : h.enumerate_basis()) words.push_back(w.to_string());
  return {{"m", h.params().m}, {"n", h.params().n}, {"count", words.size()}, {"basis", std::move(words)}};
}

std::string basis_text(const Algebra& h) {
  std::string out;
  for (const NormalWord& w : h.enumerate_basis()) out += "[" + w.to_string() + "]\n";
  return out;
}

Json tableaux_json(const std::vector<MPartition>& shapes) {
  Json out = Json::array();
  for (const MPartition& shape : shapes) {
    Json tableaux = Json::array();
    for (const StandardMTableau& t : enumerate_standard_tableaux(shape)) tableaux.push_back(to_json(t));
    out.push_back({{"shape", to_json(shape)}, {"dimension", tableaux.size()}, {"tableaux", std::move(tableaux)}});
  }
  return out;
}

std::string tableaux_text(const std::vector<MPartition>& shapes) {
  std::ostringstream os;
  std::uint64_t total = 0;
  std::uint64_t squares = 0;
  for (const MPartition& shape : shapes) {
    const auto tableaux = enumerate_standard_tableaux(shape);
    total += tableaux.size();
    squares += tableaux.size() * tableaux.size();
    os << shape.to_string() << " dimension " << tableaux.size() << '\n';
    for (const StandardMTableau& t : tableaux) {
      os << "  " << t.to_string() << ' ' << content_string_to_string(content_string(t)) << '\n';
    }
  }
  os << shapes.size() << " shapes, " << total << " tableaux, sum of squares " << squares << '\n';
  return os.str();
}

std::string h2_text(const H2Rep& r) {
  const Json j = to_json(r);
  std::ostringstream os;
  os << "dimension " << r.dimension << ", a = " << r.a.to_string();
  if (r.b) {
    os << ", b = " << r.b->to_string();
  } else {
    os << ", sign " << (r.sign > 0 ? "+1" : "-1");
  }
  os << '\n';
  os << "X = " << j["X"].dump() << '\n';
  os << "Y = " << j["Y"].dump() << '\n';
  os << "sigma = " << j["sigma"].dump() << '\n';
  os << "relations " << verdict(j["relations"].get<bool>()) << '\n';
  return os.str();
}

std::string baxter_text(const BaxterReport& r) {
  std::ostringstream os;
  auto line = [&](const char* name, const std::optional<bool>& b) {
    os << name << ' ' << (b ? verdict(*b) : std::string("not applicable")) << '\n';
  };
  line("unitarity", r.unitarity);
  line("yang-baxter", r.yang_baxter);
  line("locality", r.locality);
  return os.str();
}

std::string check_text(const CheckReport& r) {
  std::ostringstream os;
  os << "check " << r.params.to_string() << " at " << r.spec.to_string() << '\n';
  os << "completeness " << r.completeness.sum_of_squares << (r.completeness.equal() ? " = " : " != ")
     << r.completeness.group_order << '\n';
  os << "spectrum " << verdict(r.spectrum.ok()) << " (" << r.spectrum.entries.size() << " tableaux)\n";
  if (r.relations) {
    os << "relations " << verdict(r.relations->ok()) << " (" << r.relations->shapes << " shapes)\n";
  }
  if (r.injectivity) {
    os << "rank " << r.injectivity->rank << " / " << r.injectivity->basis_size << ' '
       << verdict(r.injectivity->ok()) << '\n';
  }
  os << "morphism " << verdict(r.morphism.ok()) << " (" << r.morphism.pairs << " pairs, " << r.morphism.failures
     << " failures, seed " << r.morphism.seed << ")\n";
  if (r.flatness) {
    os << "flatness " << verdict(r.flatness->ok()) << " (" << r.flatness->coefficients << " structure constants)\n";
  }
  for (const std::string& s : r.skipped) os << "skipped " << s << '\n';
  os << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace hecke
