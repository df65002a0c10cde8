#include "excross/excross.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/documents.hpp"
#include "core/error.hpp"
#include "core/group.hpp"
#include "core/semigroup.hpp"

struct excross_group {
  excross::GroupTable table;
};

struct excross_semigroup {
  excross::SemigroupTable table;
};

namespace {

thread_local std::string last_error;

excross_status status_of(excross::ErrorKind kind) {
  using excross::ErrorKind;
  switch (kind) {
    case ErrorKind::BadDocument: return EXCROSS_E_BAD_DOCUMENT;
    case ErrorKind::BadLabels: return EXCROSS_E_BAD_LABELS;
    case ErrorKind::NonLatinSquare: return EXCROSS_E_NON_LATIN_SQUARE;
    case ErrorKind::NoIdentity: return EXCROSS_E_NO_IDENTITY;
    case ErrorKind::NonAssociative: return EXCROSS_E_NON_ASSOCIATIVE;
    case ErrorKind::IndexOutOfRange: return EXCROSS_E_INDEX_OUT_OF_RANGE;
    case ErrorKind::BaseSizeMismatch: return EXCROSS_E_BASE_SIZE_MISMATCH;
    case ErrorKind::GroupMismatch: return EXCROSS_E_GROUP_MISMATCH;
    case ErrorKind::GroupTooLarge: return EXCROSS_E_GROUP_TOO_LARGE;
    case ErrorKind::BoundTooSmall: return EXCROSS_E_BOUND_TOO_SMALL;
    case ErrorKind::InvalidAction: return EXCROSS_E_INVALID_ACTION;
    case ErrorKind::DimensionMismatch: return EXCROSS_E_DIMENSION_MISMATCH;
    case ErrorKind::NotAnIdeal: return EXCROSS_E_NOT_AN_IDEAL;
    case ErrorKind::NonAssociativeL: return EXCROSS_E_NON_ASSOCIATIVE_L;
    case ErrorKind::ProductEscapesIdeal: return EXCROSS_E_PRODUCT_ESCAPES_IDEAL;
    case ErrorKind::SourceMismatch: return EXCROSS_E_SOURCE_MISMATCH;
    case ErrorKind::NotWellDefined: return EXCROSS_E_NOT_WELL_DEFINED;
    case ErrorKind::NotSquare: return EXCROSS_E_NOT_SQUARE;
  }
  return EXCROSS_E_INTERNAL;
}

excross_status fail(excross_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into a status and last_error.
template <class F>
excross_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return EXCROSS_OK;
  } catch (const excross::Error& err) {
    return fail(status_of(err.kind()), err.what());
  } catch (const std::bad_alloc&) {
    return fail(EXCROSS_E_INTERNAL, "out of memory");
  } catch (const std::exception& err) {
    return fail(EXCROSS_E_INTERNAL, err.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

excross_status null_argument() { return fail(EXCROSS_E_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* excross_last_error(void) { return last_error.c_str(); }

void excross_string_free(char* s) { std::free(s); }

excross_status excross_group_load(const char* spec, excross_group** out) {
  if (spec == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new excross_group{excross::load_group(spec)}; });
}

excross_status excross_group_from_json(const char* json, excross_group** out) {
  if (json == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto doc = excross::LocatedJson::parse(json, "<json>");
    *out = new excross_group{excross::group_from_json(doc)};
  });
}

void excross_group_free(excross_group* group) { delete group; }

size_t excross_group_order(const excross_group* group) { return group == nullptr ? 0 : group->table.order(); }

excross_status excross_group_multiply(const excross_group* group, size_t g, size_t h, size_t* out) {
  if (group == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = group->table.multiply(g, h); });
}

excross_status excross_group_inverse(const excross_group* group, size_t g, size_t* out) {
  if (group == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = group->table.inverse(g); });
}

excross_status excross_group_name(const excross_group* group, size_t g, char** out) {
  if (group == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(group->table.name(g)); });
}

excross_status excross_semigroup_create(const excross_group* group, size_t max_order, excross_semigroup** out) {
  if (group == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const std::size_t bound = max_order == 0 ? excross::default_max_group_order() : max_order;
    *out = new excross_semigroup{excross::SemigroupTable(group->table, bound)};
  });
}

void excross_semigroup_free(excross_semigroup* sg) { delete sg; }

size_t excross_semigroup_size(const excross_semigroup* sg) { return sg == nullptr ? 0 : sg->table.size(); }

namespace {

excross_status check_element(const excross_semigroup* sg, size_t x) {
  if (x >= sg->table.size()) {
    return fail(EXCROSS_E_INDEX_OUT_OF_RANGE, "semigroup element " + std::to_string(x) + " out of range");
  }
  return EXCROSS_OK;
}

}  // namespace

excross_status excross_semigroup_generator(const excross_semigroup* sg, size_t g, size_t* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = sg->table.generator_index(g); });
}

excross_status excross_semigroup_multiply(const excross_semigroup* sg, size_t x, size_t y, size_t* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  if (auto s = check_element(sg, y); s != EXCROSS_OK) return s;
  *out = sg->table.product(x, y);
  return EXCROSS_OK;
}

excross_status excross_semigroup_star(const excross_semigroup* sg, size_t x, size_t* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  *out = sg->table.star(x);
  return EXCROSS_OK;
}

excross_status excross_semigroup_is_idempotent(const excross_semigroup* sg, size_t x, int* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  *out = excross::ExelSemigroup::is_idempotent(sg->table.element(x)) ? 1 : 0;
  return EXCROSS_OK;
}

excross_status excross_semigroup_leq(const excross_semigroup* sg, size_t x, size_t y, int* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  if (auto s = check_element(sg, y); s != EXCROSS_OK) return s;
  *out = sg->table.leq(x, y) ? 1 : 0;
  return EXCROSS_OK;
}

excross_status excross_semigroup_gamma(const excross_semigroup* sg, size_t x, size_t* out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  *out = sg->table.gamma(x);
  return EXCROSS_OK;
}

excross_status excross_semigroup_text(const excross_semigroup* sg, size_t x, char** out) {
  if (sg == nullptr || out == nullptr) return null_argument();
  if (auto s = check_element(sg, x); s != EXCROSS_OK) return s;
  return guarded([&] { *out = copy_string(sg->table.text(x)); });
}

excross_status excross_run(const excross_run_options* options, char** output, char** diagnostic, int* exit_code) {
  if (options == nullptr || output == nullptr || diagnostic == nullptr || exit_code == nullptr ||
      options->command == nullptr || options->subcommand == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    excross::RunConfig config;
    config.command = options->command;
    config.subcommand = options->subcommand;
    if (options->group) config.group = options->group;
    if (options->action) config.action = options->action;
    if (options->algebra) config.algebra = options->algebra;
    switch (options->format) {
      case EXCROSS_FORMAT_CSV: config.format = excross::Format::Csv; break;
      case EXCROSS_FORMAT_TEXT: config.format = excross::Format::Text; break;
      default: config.format = excross::Format::Json; break;
    }
    config.level = options->level == EXCROSS_LEVEL_QUICK ? excross::Level::Quick : excross::Level::Exhaustive;
    if (options->max_word_len != 0) config.max_word_len = options->max_word_len;
    if (options->max_group_order != 0) config.max_group_order = options->max_group_order;
    config.seed = options->seed;
    const excross::RunResult result = excross::run_command(config);
    std::unique_ptr<char, decltype(&std::free)> out(copy_string(result.output), &std::free);
    char* diag = copy_string(result.diagnostic);
    *output = out.release();
    *diagnostic = diag;
    *exit_code = result.exit_code;
  });
}

}  // extern "C"
