#include "hecke/hecke.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "hecke/expression.hpp"
#include "hecke/serialize.hpp"

struct hk_algebra {
  hecke::Algebra algebra;
};

struct hk_element {
  hecke::Element element;
};

struct hk_rep {
  hecke::Representation rep;
};

namespace {

thread_local std::string last_error;

hk_status record(hk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `f`, translating exceptions into status codes.
template <typename F>
hk_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return HK_OK;
  } catch (const hecke::Error& e) {
    return record(static_cast<hk_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(HK_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return record(HK_INTERNAL, e.what());
  } catch (...) {
    return record(HK_INTERNAL, "unknown exception");
  }
}

void require(bool condition, const char* what) {
  if (!condition) hecke::fail(hecke::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const hecke::Json& j) { return j.dump(2) + "\n"; }

hecke::ParamSpec to_spec(const hk_param_spec& s) {
  require(s.m >= 1 && s.m <= hecke::kMaxCyclotomicDegree, "spec.m out of range");
  require(s.q != nullptr, "spec.q is NULL");
  auto rational = [](const char* text) {
    try {
      hecke::Rational r(text);
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      hecke::fail(hecke::ErrorCode::Parse, std::string("not a rational number: ") + text);
    }
  };
  hecke::ParamSpec p;
  p.m = s.m;
  p.q = rational(s.q);
  for (int j = 0; j < s.m; ++j) {
    require(s.v[j] != nullptr, "spec.v entry is NULL");
    p.v.push_back(rational(s.v[j]));
  }
  p.validate();
  return p;
}

}  // namespace

extern "C" {

const char* hk_version(void) { return "1.0.0"; }

const char* hk_status_name(hk_status status) {
  if (status == HK_OK) return "ok";
  if (status < HK_INVALID_ARGUMENT || status > HK_INTERNAL) return "unknown status";
  return hecke::error_code_name(static_cast<hecke::ErrorCode>(status));
}

const char* hk_last_error(void) { return last_error.c_str(); }

void hk_string_free(char* s) { std::free(s); }

hk_check_options hk_check_options_default(void) {
  const hecke::CheckOptions defaults;
  hk_check_options o;
  o.spec = nullptr;
  o.seed = defaults.seed;
  o.morphism_pairs = defaults.morphism_pairs;
  return o;
}

hk_status hk_algebra_create(int m, int n, hk_algebra** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    *out = new hk_algebra{hecke::Algebra(hecke::AlgebraParams{m, n})};
  });
}

void hk_algebra_destroy(hk_algebra* h) { delete h; }

hk_status hk_algebra_basis_size(const hk_algebra* h, uint64_t* out) {
  return guarded([&] {
    require(h && out, "NULL argument");
    *out = h->algebra.basis_size();
  });
}

hk_status hk_algebra_basis(const hk_algebra* h, hk_format format, char** out) {
  return guarded([&] {
    require(h && out, "NULL argument");
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::basis_json(h->algebra))
                                                : hecke::basis_text(h->algebra));
  });
}

hk_status hk_element_parse(const hk_algebra* h, const char* text, int allow_tau_inverse, hk_element** out) {
  return guarded([&] {
    require(h && text && out, "NULL argument");
    hecke::ExpressionOptions options;
    options.allow_tau_inverse = allow_tau_inverse != 0;
    *out = new hk_element{hecke::parse_expression(h->algebra, text, options)};
  });
}

hk_status hk_element_multiply(const hk_algebra* h, const hk_element* a, const hk_element* b, hk_element** out) {
  return guarded([&] {
    require(h && a && b && out, "NULL argument");
    *out = new hk_element{h->algebra.multiply(a->element, b->element)};
  });
}

hk_status hk_element_add(const hk_element* a, const hk_element* b, hk_element** out) {
  return guarded([&] {
    require(a && b && out, "NULL argument");
    if (a->element.params() != b->element.params()) {
      hecke::fail(hecke::ErrorCode::ParamsMismatch, "elements belong to different algebras");
    }
    *out = new hk_element{a->element + b->element};
  });
}

hk_status hk_element_equal(const hk_element* a, const hk_element* b, int* out) {
  return guarded([&] {
    require(a && b && out, "NULL argument");
    *out = a->element == b->element ? 1 : 0;
  });
}

hk_status hk_element_term_count(const hk_element* e, size_t* out) {
  return guarded([&] {
    require(e && out, "NULL argument");
    *out = e->element.size();
  });
}

hk_status hk_element_render(const hk_element* e, hk_format format, char** out) {
  return guarded([&] {
    require(e && out, "NULL argument");
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::to_json(e->element)) : e->element.to_string());
  });
}

hk_status hk_jm_element(const hk_algebra* h, int i, hk_element** out) {
  return guarded([&] {
    require(h && out, "NULL argument");
    *out = new hk_element{h->algebra.jm_element(i)};
  });
}

hk_status hk_baxterize(const hk_algebra* h, int i, const char* alpha, const char* beta, hk_element** out) {
  return guarded([&] {
    require(h && alpha && beta && out, "NULL argument");
    *out = new hk_element{
        hecke::baxterize(h->algebra, i, hecke::Scalar::parse(alpha), hecke::Scalar::parse(beta))};
  });
}

void hk_element_destroy(hk_element* e) { delete e; }

hk_status hk_rep_create(const char* shape, hk_rep** out) {
  return guarded([&] {
    require(shape && out, "NULL argument");
    *out = new hk_rep{hecke::build_representation(hecke::MPartition::parse(shape))};
  });
}

void hk_rep_destroy(hk_rep* r) { delete r; }

hk_status hk_rep_dimension(const hk_rep* r, size_t* out) {
  return guarded([&] {
    require(r && out, "NULL argument");
    *out = r->rep.dimension();
  });
}

hk_status hk_rep_render(const hk_rep* r, const hk_param_spec* spec, hk_format format, char** out) {
  return guarded([&] {
    require(r && out, "NULL argument");
    std::optional<hecke::ParamSpec> p;
    if (spec) {
      p = to_spec(*spec);
      if (p->m != r->rep.m()) {
        hecke::fail(hecke::ErrorCode::ParamsMismatch, "specialization has m = " + std::to_string(p->m) +
                                                          " but the shape has " + std::to_string(r->rep.m()) +
                                                          " components");
      }
    }
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::representation_json(r->rep, p))
                                                : hecke::representation_text(r->rep, p));
  });
}

hk_status hk_rep_jm(const hk_rep* r, int i, char** out) {
  return guarded([&] {
    require(r && out, "NULL argument");
    *out = copy_string(hecke::to_json(hecke::jm_matrix(r->rep, i)).dump());
  });
}

hk_status hk_rep_verify(const hk_rep* r, int* ok) {
  return guarded([&] {
    require(r && ok, "NULL argument");
    *ok = hecke::verify_defining_relations(r->rep) && hecke::verify_restriction(r->rep) ? 1 : 0;
  });
}

hk_status hk_tableaux_report(int m, int n, const char* shape, hk_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    std::vector<hecke::MPartition> shapes;
    if (shape) {
      shapes.push_back(hecke::MPartition::parse(shape));
    } else {
      hecke::AlgebraParams{m, n}.validate();
      shapes = hecke::enumerate_mpartitions(m, n);
    }
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::tableaux_json(shapes)) : hecke::tableaux_text(shapes));
  });
}

hk_status hk_h2_report(const char* a, const char* b, int sign, hk_format format, char** out) {
  return guarded([&] {
    require(a && out, "NULL argument");
    const hecke::Scalar sa = hecke::Scalar::parse(a);
    const hecke::H2Rep r = b ? hecke::h2_two_dim(sa, hecke::Scalar::parse(b)) : hecke::h2_one_dim(sa, sign);
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::to_json(r)) : hecke::h2_text(r));
  });
}

hk_status hk_baxter_report(const hk_algebra* h, hk_format format, char** out, int* ok) {
  return guarded([&] {
    require(h && out, "NULL argument");
    const hecke::BaxterReport r = hecke::verify_baxter_relations(h->algebra);
    if (ok) *ok = r.ok() ? 1 : 0;
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::to_json(r)) : hecke::baxter_text(r));
  });
}

hk_status hk_is_semisimple(const hk_param_spec* spec, int n, int* out) {
  return guarded([&] {
    require(spec && out, "NULL argument");
    require(n >= 0, "n must be nonnegative");
    *out = hecke::is_semisimple_spec(to_spec(*spec), n) ? 1 : 0;
  });
}

hk_status hk_check(int m, int n, const hk_check_options* options, hk_format format, char** out, int* ok) {
  return guarded([&] {
    require(out != nullptr, "out is NULL");
    hecke::CheckOptions o;
    if (options) {
      if (options->spec) o.spec = to_spec(*options->spec);
      o.seed = options->seed;
      o.morphism_pairs = options->morphism_pairs;
    }
    const hecke::CheckReport r = hecke::run_check(hecke::AlgebraParams{m, n}, o);
    if (ok) *ok = r.ok() ? 1 : 0;
    *out = copy_string(format == HK_FORMAT_JSON ? dump(hecke::to_json(r)) : hecke::check_text(r));
  });
}

}  // extern "C"
