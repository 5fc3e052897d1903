#include "opetope/opetope_c.h"

#include <cstring>
#include <new>
#include <string>

#include "opetope/error.hpp"
#include "opetope/examples.hpp"
#include "opetope/faces.hpp"
#include "opetope/serialize.hpp"
#include "opetope/slice.hpp"

struct ope_opetope {
  ope::OpetopePtr value;
};

namespace {

thread_local std::string last_error;

ope_status status_of(ope::ErrorCode code) {
  switch (code) {
    case ope::ErrorCode::Syntax: return OPE_PARSE_ERROR;
    case ope::ErrorCode::BoundExceeded: return OPE_BOUND_EXCEEDED;
    case ope::ErrorCode::InvalidArgument: return OPE_INVALID_ARGUMENT;
    default: return OPE_VALIDATION_FAILED;
  }
}

// Runs fn, turning exceptions into a status and last_error.
template <class Fn>
ope_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    return fn();
  } catch (const ope::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OPE_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OPE_INTERNAL;
  }
}

ope_status fail(ope_status s, std::string why) {
  last_error = std::move(why);
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

ope_status wrap(ope::OpetopePtr o, ope_opetope** out) {
  *out = new ope_opetope{std::move(o)};
  return OPE_OK;
}

std::string describe(const ope::OpetopePtr& o) {
  if (o->dim == 0) return "the point";
  if (o->dim == 1) return "the arrow";
  return std::to_string(o->arity()) + "-ary " + std::to_string(o->dim) + "-opetope";
}

std::optional<ope::Frame> frame_of(int dim, const char* spec, const char* json) {
  if (spec && json) throw ope::Error(ope::ErrorCode::InvalidArgument, "give a frame spec or a frame file, not both");
  if (spec) {
    if (dim != 2 && dim != 3)
      throw ope::Error(ope::ErrorCode::InvalidArgument, "frame specs describe dimensions 2 and 3; use a frame file");
    return ope::parse_frame_spec(spec, dim);
  }
  if (json) return ope::parse_frame(json);
  return std::nullopt;
}

void for_each_enumerated(int dim, const char* spec, const char* json, std::size_t max_leaves,
                         const std::function<void(const ope::OpetopePtr&)>& visit) {
  const ope::Bounds bounds{4, max_leaves};
  auto frame = frame_of(dim, spec, json);
  if (frame) {
    for (const auto& o : ope::enumerate_opetopes(dim, *frame, bounds)) visit(o);
    return;
  }
  if (dim > 3) throw ope::Error(ope::ErrorCode::InvalidArgument, "enumerating dimension 4 needs a frame");
  ope::for_each_opetope(dim, bounds, visit);
}

#define OPE_REQUIRE(cond, what) \
  if (!(cond)) return fail(OPE_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* ope_status_name(ope_status status) {
  switch (status) {
    case OPE_OK: return "ok";
    case OPE_VALIDATION_FAILED: return "validation failed";
    case OPE_PARSE_ERROR: return "parse error";
    case OPE_BOUND_EXCEEDED: return "bound exceeded";
    case OPE_INVALID_ARGUMENT: return "invalid argument";
    case OPE_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ope_last_error(void) { return last_error.c_str(); }

void ope_string_free(char* s) { std::free(s); }

ope_status ope_opetope_from_json(const char* json, ope_opetope** out) {
  OPE_REQUIRE(json && out, "null argument");
  *out = nullptr;
  return guarded([&] { return wrap(ope::parse_opetope(json), out); });
}

ope_status ope_opetope_example(const char* name, ope_opetope** out) {
  OPE_REQUIRE(name && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string n = name;
    if (n == "k3") return wrap(ope::examples::k3_example(), out);
    if (n == "faces") return wrap(ope::examples::faces_example(), out);
    if (n == "k4") return wrap(ope::examples::k4_example().theta, out);
    return fail(OPE_INVALID_ARGUMENT, "no example named \"" + n + "\"");
  });
}

void ope_opetope_free(ope_opetope* o) { delete o; }

ope_status ope_opetope_to_json(const ope_opetope* o, char** out) {
  OPE_REQUIRE(o && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(ope::opetope_to_json(o->value).dump(2) + "\n");
    return OPE_OK;
  });
}

int ope_opetope_dim(const ope_opetope* o) { return o ? o->value->dim : -1; }
size_t ope_opetope_arity(const ope_opetope* o) { return o ? o->value->arity() : 0; }

int ope_opetope_equal(const ope_opetope* a, const ope_opetope* b) {
  return a && b && ope::same_opetope(a->value, b->value) ? 1 : 0;
}

ope_status ope_validate(const char* json, char** report) {
  OPE_REQUIRE(json && report, "null argument");
  *report = nullptr;
  return guarded([&] {
    try {
      const auto o = ope::parse_opetope(json);
      *report = dup("valid: " + describe(o) + "\n");
      return OPE_OK;
    } catch (const ope::Error& e) {
      if (e.code() == ope::ErrorCode::Syntax) throw;
      last_error = e.what();
      *report = dup(std::string("invalid: ") + e.what() + "\n");
      return status_of(e.code());
    }
  });
}

ope_status ope_enumerate(int dim, const char* frame_spec, const char* frame_json, size_t max_leaves, char** out) {
  OPE_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<ope::OpetopePtr> list;
    for_each_enumerated(dim, frame_spec, frame_json, max_leaves, [&](const ope::OpetopePtr& o) { list.push_back(o); });
    *out = dup(ope::opetope_list_text(list));
    return OPE_OK;
  });
}

ope_status ope_count(int dim, const char* frame_spec, const char* frame_json, size_t max_leaves, size_t* count) {
  OPE_REQUIRE(count, "null argument");
  return guarded([&] {
    std::size_t n = 0;
    for_each_enumerated(dim, frame_spec, frame_json, max_leaves, [&](const ope::OpetopePtr&) { ++n; });
    *count = n;
    return OPE_OK;
  });
}

ope_status ope_homs(const ope_opetope* a, const ope_opetope* b, char** out) {
  OPE_REQUIRE(a && b && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (a->value->dim != b->value->dim)
      return fail(OPE_INVALID_ARGUMENT, "morphisms only go between opetopes of the same dimension");
    ope::Json list = ope::Json::array();
    for (const auto& f : ope::hom(a->value, b->value)) {
      ope::Json j = ope::morphism_to_json(f);
      j["inverse"] = ope::find_inverse(f).has_value();
      list.push_back(std::move(j));
    }
    *out = dup(list.dump(2) + "\n");
    return OPE_OK;
  });
}

ope_status ope_faces(const ope_opetope* o, int depth, int as_json, char** out) {
  OPE_REQUIRE(o && out, "null argument");
  OPE_REQUIRE(depth == 1 || depth == 2, "depth must be 1 or 2");
  *out = nullptr;
  return guarded([&] {
    if (o->value->dim < 1) return fail(OPE_INVALID_ARGUMENT, "the point has no faces");
    *out = dup(as_json ? ope::faces_report_json(o->value, depth) : ope::faces_report_text(o->value, depth));
    return OPE_OK;
  });
}

ope_status ope_check_tf(const ope_opetope* o, int* holds, char** witness) {
  OPE_REQUIRE(o && holds, "null argument");
  if (witness) *witness = nullptr;
  return guarded([&] {
    const auto r = ope::check_tf(o->value);
    *holds = r.holds ? 1 : 0;
    if (witness) *witness = dup(r.witness);
    return OPE_OK;
  });
}

ope_status ope_crosscheck(int dim, size_t max_leaves, const char* frame_json, char** out) {
  OPE_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    ope::oracle::CorrespondenceReport r;
    if (dim == 4) {
      ope::Frame frame;
      if (frame_json) {
        frame = ope::parse_frame(frame_json);
      } else {
        const auto ex = ope::examples::k4_example();
        frame = ope::Frame{ex.theta->inputs, ex.theta->output};
      }
      r = ope::oracle::check_correspondence(frame, max_leaves);
    } else {
      if (frame_json) return fail(OPE_INVALID_ARGUMENT, "a frame file is only used with dimension 4");
      r = ope::oracle::check_correspondence(dim, max_leaves);
    }
    *out = dup(r.to_json());
    if (!r.match) {
      last_error = r.witness;
      return OPE_VALIDATION_FAILED;
    }
    return OPE_OK;
  });
}

ope_status ope_export_dot(const ope_opetope* o, char** out) {
  OPE_REQUIRE(o && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = dup(ope::opetope_to_dot(o->value));
    return OPE_OK;
  });
}

}  // extern "C"
