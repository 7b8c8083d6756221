#include "raney/raney.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "raney/lattice_io.hpp"
#include "raney/verifier.hpp"

struct raney_lattice {
  raney::LatticePtr lattice;
};

struct raney_report {
  std::vector<raney::Report> reports;
  bool corpus = false;
  bool timing = false;
};

namespace {

thread_local std::string last_error;

raney_status status_of(raney::ErrorCode code) {
  using raney::ErrorCode;
  switch (code) {
    case ErrorCode::parse_error: return RANEY_ERR_PARSE;
    case ErrorCode::not_a_partial_order: return RANEY_ERR_NOT_A_PARTIAL_ORDER;
    case ErrorCode::not_a_lattice: return RANEY_ERR_NOT_A_LATTICE;
    case ErrorCode::no_bounded_element: return RANEY_ERR_NO_BOUNDED_ELEMENT;
    case ErrorCode::size_limit: return RANEY_ERR_SIZE_LIMIT;
    case ErrorCode::cap_exceeded: return RANEY_ERR_CAP_EXCEEDED;
    case ErrorCode::precondition: return RANEY_ERR_PRECONDITION;
    case ErrorCode::not_dualizing: return RANEY_ERR_NOT_DUALIZING;
    case ErrorCode::not_automorphism: return RANEY_ERR_NOT_AUTOMORPHISM;
    case ErrorCode::not_completely_distributive: return RANEY_ERR_NOT_COMPLETELY_DISTRIBUTIVE;
    case ErrorCode::not_down_closed: return RANEY_ERR_NOT_DOWN_CLOSED;
    case ErrorCode::malformed_family: return RANEY_ERR_MALFORMED_FAMILY;
    case ErrorCode::invariant_violated: return RANEY_ERR_INVARIANT_VIOLATED;
  }
  return RANEY_ERR_INTERNAL;
}

raney_status fail(raney_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
raney_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const raney::Error& e) {
    return fail(status_of(e.code()), std::string(raney::to_string(e.code())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return fail(RANEY_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RANEY_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

raney::Config to_config(const raney_config* c) {
  raney::Config out;
  if (!c) return out;
  out.max_homset = c->max_homset;
  out.max_autodual = c->max_autodual;
  out.triple_cap = c->triple_cap;
  out.pair_cap = c->pair_cap;
  if (c->checks) out.checks = raney::parse_check_list(c->checks);
  out.timing = c->timing != 0;
  return out;
}

}  // namespace

extern "C" {

void raney_config_init(raney_config* config) {
  if (!config) return;
  const raney::Config d;
  config->max_homset = d.max_homset;
  config->max_autodual = d.max_autodual;
  config->triple_cap = d.triple_cap;
  config->pair_cap = d.pair_cap;
  config->checks = nullptr;
  config->timing = 0;
}

const char* raney_last_error(void) { return last_error.c_str(); }

const char* raney_status_name(raney_status status) {
  switch (status) {
    case RANEY_OK: return "Ok";
    case RANEY_ERR_PARSE: return "ParseError";
    case RANEY_ERR_NOT_A_PARTIAL_ORDER: return "NotAPartialOrder";
    case RANEY_ERR_NOT_A_LATTICE: return "NotALattice";
    case RANEY_ERR_NO_BOUNDED_ELEMENT: return "NoBoundedElement";
    case RANEY_ERR_SIZE_LIMIT: return "SizeLimit";
    case RANEY_ERR_CAP_EXCEEDED: return "CapExceeded";
    case RANEY_ERR_PRECONDITION: return "Precondition";
    case RANEY_ERR_NOT_DUALIZING: return "NotDualizing";
    case RANEY_ERR_NOT_AUTOMORPHISM: return "NotAutomorphism";
    case RANEY_ERR_NOT_COMPLETELY_DISTRIBUTIVE: return "NotCompletelyDistributive";
    case RANEY_ERR_NOT_DOWN_CLOSED: return "NotDownClosed";
    case RANEY_ERR_MALFORMED_FAMILY: return "MalformedFamily";
    case RANEY_ERR_INVARIANT_VIOLATED: return "InvariantViolated";
    case RANEY_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case RANEY_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

void raney_string_free(char* s) { std::free(s); }

raney_status raney_lattice_parse(const char* text, size_t max_size, raney_lattice** out) {
  if (!text || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new raney_lattice{raney::share(raney::parse_lattice(text, max_size))};
    return RANEY_OK;
  });
}

raney_status raney_lattice_generate(const char* family, size_t param, raney_lattice** out) {
  if (!family || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const std::string f = family;
    raney::Lattice l = [&] {
      if (f == "chain") return raney::make_chain(param);
      if (f == "boolean") return raney::make_boolean(param);
      if (f == "M") return raney::make_mk(param);
      if (f == "N5") return raney::make_n5();
      throw raney::Error(raney::ErrorCode::precondition, "unknown family '" + f + "'");
    }();
    *out = new raney_lattice{raney::share(std::move(l))};
    return RANEY_OK;
  });
}

raney_status raney_lattice_to_json(const raney_lattice* lattice, char** out) {
  if (!lattice || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(raney::to_lattice_file(*lattice->lattice));
    return RANEY_OK;
  });
}

size_t raney_lattice_size(const raney_lattice* lattice) { return lattice ? lattice->lattice->size() : 0; }

void raney_lattice_free(raney_lattice* lattice) { delete lattice; }

raney_status raney_validate_checks(const char* checks) {
  if (!checks) return RANEY_OK;
  try {
    raney::parse_check_list(checks);
    return RANEY_OK;
  } catch (const raney::Error& e) {
    return fail(RANEY_ERR_INVALID_ARGUMENT, e.what());
  }
}

raney_status raney_analyze(const raney_lattice* lattice, const char* name, const raney_config* config,
                           raney_report** out) {
  if (!lattice || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  if (raney_validate_checks(config ? config->checks : nullptr) != RANEY_OK) return RANEY_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const raney::Config c = to_config(config);
    const raney::CorpusEntry entry{name ? name : "lattice", lattice->lattice, std::nullopt};
    *out = new raney_report{{raney::analyze(entry, c)}, false, c.timing};
    return RANEY_OK;
  });
}

raney_status raney_verify(const raney_lattice* lattice, const char* name, const raney_config* config,
                          raney_report** out) {
  if (!lattice || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  if (raney_validate_checks(config ? config->checks : nullptr) != RANEY_OK) return RANEY_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const raney::Config c = to_config(config);
    const raney::CorpusEntry entry{name ? name : "lattice", lattice->lattice, std::nullopt};
    *out = new raney_report{{raney::run_suite(entry, c)}, false, c.timing};
    return RANEY_OK;
  });
}

raney_status raney_verify_corpus(const raney_config* config, raney_report** out) {
  if (!out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  if (raney_validate_checks(config ? config->checks : nullptr) != RANEY_OK) return RANEY_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const raney::Config c = to_config(config);
    auto* r = new raney_report{{}, true, c.timing};
    for (const auto& entry : raney::default_corpus()) r->reports.push_back(raney::run_suite(entry, c));
    *out = r;
    return RANEY_OK;
  });
}

raney_status raney_verify_m5(const raney_config* config, raney_report** out) {
  if (!out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  if (raney_validate_checks(config ? config->checks : nullptr) != RANEY_OK) return RANEY_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    const raney::Config c = to_config(config);
    *out = new raney_report{{raney::run_m5_suite(c)}, false, c.timing};
    return RANEY_OK;
  });
}

raney_status raney_report_json(const raney_report* report, char** out) {
  if (!report || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto j = report->corpus ? raney::reports_to_json(report->reports, report->timing)
                                  : raney::report_to_json(report->reports.front(), report->timing);
    *out = copy_string(j.dump(2) + "\n");
    return RANEY_OK;
  });
}

raney_status raney_report_text(const raney_report* report, char** out) {
  if (!report || !out) return fail(RANEY_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(report->corpus ? raney::reports_to_text(report->reports, report->timing)
                                      : raney::report_to_text(report->reports.front(), report->timing));
    return RANEY_OK;
  });
}

size_t raney_report_failed(const raney_report* report) {
  size_t n = 0;
  if (report) {
    for (const auto& r : report->reports) n += r.failed();
  }
  return n;
}

size_t raney_report_skipped(const raney_report* report) {
  size_t n = 0;
  if (report) {
    for (const auto& r : report->reports) n += r.skipped();
  }
  return n;
}

void raney_report_free(raney_report* report) { delete report; }

}  // extern "C"
