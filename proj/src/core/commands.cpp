#include "core/commands.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core/covariant.hpp"
#include "core/crossed_product.hpp"
#include "core/documents.hpp"
#include "core/error.hpp"
#include "core/partial_action.hpp"
#include "core/word_oracle.hpp"

namespace excross {

namespace {

constexpr std::size_t kSampledTriples = 10'000;
constexpr std::size_t kContractivitySamples = 100;

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string sparse_text(const SparseVector& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [i, q] : v) {
    std::string coeff = format_rational(q);
    if (!out.empty()) out += sgn(q) < 0 ? " - " : " + ";
    else if (sgn(q) < 0) out += "-";
    if (sgn(q) < 0) coeff = format_rational(-q);
    if (coeff != "1") out += coeff + "*";
    out += labels[i];
  }
  return out;
}

using Table = std::vector<std::vector<std::string>>;

Table multiplication_table(const StructureAlgebra& algebra) {
  Table rows;
  std::vector<std::string> header{""};
  for (const auto& l : algebra.labels()) header.push_back(l);
  rows.push_back(header);
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    std::vector<std::string> row{algebra.labels()[i]};
    for (std::size_t j = 0; j < algebra.dim(); ++j) row.push_back(sparse_text(algebra.basis_product(i, j), algebra.labels()));
    rows.push_back(std::move(row));
  }
  return rows;
}

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json data = Json::object();
  /// Replaces the JSON envelope when set.
  std::optional<Json> raw;
  std::vector<std::string> lines;
  std::optional<Table> csv;

  void add(AxiomResult r) { checks_.push_back(std::move(r)); }
  void add(const ValidationReport& report) {
    for (const auto& r : report.results) add(r);
  }
  bool passed() const {
    for (const auto& r : checks_)
      if (!r.passed) return false;
    return true;
  }
  const AxiomResult* first_failure() const {
    for (const auto& r : checks_)
      if (!r.passed) return &r;
    return nullptr;
  }

  std::string render(Format format) const {
    switch (format) {
      case Format::Json: {
        if (raw) return raw->dump(2) + "\n";
        Json checks = Json::array();
        for (const auto& r : checks_) checks.push_back(to_json(r));
        Json out = {{"command", command_}, {"data", data}, {"checks", checks}, {"passed", passed()}};
        return out.dump(2) + "\n";
      }
      case Format::Csv: {
        Table rows;
        if (csv) {
          rows = *csv;
        } else {
          rows.push_back({"id", "passed", "checked", "witness"});
          for (const auto& r : checks_) rows.push_back({r.id, r.passed ? "true" : "false", std::to_string(r.checked), r.witness});
        }
        std::string out;
        for (const auto& row : rows) {
          for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_field(row[c]);
          out += "\n";
        }
        return out;
      }
      case Format::Text: {
        std::string out;
        for (const auto& l : lines) out += l + "\n";
        for (const auto& r : checks_) {
          out += (r.passed ? "PASS " : "FAIL ") + r.id + ": " + r.statement + " [" + std::to_string(r.checked) + " checked]";
          if (!r.passed) out += "; witness: " + r.witness;
          out += "\n";
        }
        out += passed() ? "result: PASS\n" : "result: FAIL\n";
        return out;
      }
    }
    return {};
  }

 private:
  std::string command_;
  std::vector<AxiomResult> checks_;
};

struct Inputs {
  std::optional<GroupTable> group;
  std::optional<SetPartialAction> set_action;
  std::optional<AlgebraPartialAction> algebra_action;
  std::optional<StructureAlgebra> algebra;
};

Inputs load_inputs(const RunConfig& config) {
  Inputs in;
  if (config.group) in.group = load_group(*config.group);
  auto load_action = [&](const LocatedJson& doc, DocumentKind kind) {
    if (kind == DocumentKind::SetAction) {
      in.set_action = set_action_from_json(doc, in.group);
      in.group = in.set_action->group();
    } else {
      in.algebra_action = algebra_action_from_json(doc, in.group);
      in.group = in.algebra_action->group();
    }
  };
  if (config.action) {
    auto doc = LocatedJson::load(*config.action);
    const DocumentKind kind = document_kind(doc);
    if (kind != DocumentKind::SetAction && kind != DocumentKind::AlgebraAction) {
      doc.fail("", "expected an action document, found a " + std::string(to_string(kind)) + " document");
    }
    load_action(doc, kind);
  }
  if (config.algebra) {
    auto doc = LocatedJson::load(*config.algebra);
    const DocumentKind kind = document_kind(doc);
    if (kind == DocumentKind::Algebra) {
      in.algebra = algebra_from_json(doc);
    } else if (kind == DocumentKind::AlgebraAction) {
      if (config.action) throw Usage("--algebra names an action while --action is also given");
      load_action(doc, kind);
    } else {
      doc.fail("", "expected an algebra or algebra-level action document");
    }
  }
  return in;
}

const GroupTable& require_group(const Inputs& in) {
  if (!in.group) throw Usage("this command needs --group or an action document with a group");
  return *in.group;
}

void require_action(const Inputs& in) {
  if (!in.set_action && !in.algebra_action) throw Usage("this command needs --action");
}

std::string level_name(Level level) { return level == Level::Quick ? "quick" : "exhaustive"; }

AxiomResult associativity(const std::string& id, const StructureAlgebra& algebra, const RunConfig& config) {
  if (config.level == Level::Exhaustive) return associativity_result(id, algebra);
  AxiomResult r{id, "(b_i b_j) b_k = b_i (b_j b_k) on " + std::to_string(kSampledTriples) + " random triples", true,
                kSampledTriples, ""};
  if (auto t = check_associativity_sampled(algebra, kSampledTriples, config.seed)) {
    r.passed = false;
    r.witness = "(" + algebra.labels()[(*t)[0]] + ", " + algebra.labels()[(*t)[1]] + ", " + algebra.labels()[(*t)[2]] + ")";
  }
  return r;
}

// Validates the action and returns its algebra-level form when valid.
std::optional<AlgebraPartialAction> validated_action(const Inputs& in, Report& report) {
  if (in.set_action) {
    auto v = validate_set_action(*in.set_action);
    report.add(v);
    if (!v.passed()) return std::nullopt;
    return induce_algebra_action(*in.set_action);
  }
  auto v = validate_algebra_action(*in.algebra_action);
  report.add(v);
  if (!v.passed()) return std::nullopt;
  return *in.algebra_action;
}

Json action_summary(const Inputs& in) {
  Json out = {{"group", to_json(require_group(in))}};
  if (in.set_action) {
    out["kind"] = "set";
    out["set_size"] = in.set_action->base_size();
    Json domains = Json::object();
    for (Element g = 0; g < in.group->order(); ++g) domains[in.group->name(g)] = in.set_action->domain_set(g);
    out["domains"] = domains;
  } else {
    out["kind"] = "algebra";
    out["algebra_dim"] = in.algebra_action->algebra().dim();
  }
  return out;
}

// ---------------------------------------------------------------------------

void sg_enumerate(const RunConfig& config, const Inputs& in, Report& report) {
  SemigroupTable T(require_group(in), config.max_group_order);
  const GroupTable& G = T.group();
  Json elements = Json::array();
  Table rows{{"index", "element", "bracket", "idempotent"}};
  std::size_t idempotents = 0;
  for (std::size_t x = 0; x < T.size(); ++x) {
    const SElem& s = T.element(x);
    Json eps = Json::array();
    for (auto g : s.eps()) eps.push_back(G.name(g));
    const bool idem = ExelSemigroup::is_idempotent(s);
    idempotents += idem ? 1 : 0;
    elements.push_back({{"index", x}, {"text", T.text(x)}, {"bracket", G.name(s.bracket())}, {"eps", eps}, {"idempotent", idem}});
    rows.push_back({std::to_string(x), T.text(x), G.name(s.bracket()), idem ? "true" : "false"});
  }
  const std::size_t expected = T.semigroup().expected_size();
  report.data = {{"group", to_json(G)}, {"count", T.size()}, {"idempotents", idempotents}, {"elements", elements}};
  report.lines.push_back("S(G) has " + std::to_string(T.size()) + " elements");
  for (std::size_t x = 0; x < T.size(); ++x) report.lines.push_back("  " + T.text(x));
  report.csv = std::move(rows);
  report.add(AxiomResult{"count", "|S(G)| = 2^(n-1) + (n-1) 2^(n-2)", T.size() == expected, 1,
                         T.size() == expected ? "" : std::to_string(T.size()) + " != " + std::to_string(expected)});
}

void sg_table(const RunConfig& config, const Inputs& in, Report& report) {
  SemigroupTable T(require_group(in), config.max_group_order);
  report.raw = semigroup_table_json(T);
  Table rows;
  std::vector<std::string> header{""};
  for (std::size_t x = 0; x < T.size(); ++x) header.push_back(T.text(x));
  rows.push_back(header);
  for (std::size_t x = 0; x < T.size(); ++x) {
    std::vector<std::string> row{T.text(x)};
    for (std::size_t y = 0; y < T.size(); ++y) row.push_back(T.text(T.product(x, y)));
    rows.push_back(std::move(row));
  }
  report.lines.push_back("multiplication table of S(G), " + std::to_string(T.size()) + " elements");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::string line = rows[r][0] + " :";
    for (std::size_t c = 1; c < rows[r].size(); ++c) line += " " + rows[r][c];
    report.lines.push_back(line);
  }
  report.csv = std::move(rows);
}

void sg_oracle_check(const RunConfig& config, const Inputs& in, Report& report) {
  SemigroupTable T(require_group(in), config.max_group_order);
  AxiomResult result{"oracle_agreement", "normal-form products agree with the word oracle on every pair", true, 0, ""};
  try {
    OracleCheck r = oracle_check(T, config.max_word_len);
    std::ostringstream pct;
    pct << std::setprecision(6) << r.agreement_percent();
    report.data = {{"closure_len", r.closure_len},     {"oracle_classes", r.oracle_classes},
                   {"engine_elements", r.engine_elements}, {"bijective", r.bijective},
                   {"pairs", r.pairs},                 {"agreeing", r.agreeing},
                   {"agreement_percent", r.agreement_percent()}};
    report.lines.push_back("oracle classes " + std::to_string(r.oracle_classes) + ", engine elements " +
                           std::to_string(r.engine_elements));
    report.lines.push_back("agreement " + pct.str() + "%");
    result.checked = r.pairs;
    result.passed = r.passed();
    if (!r.bijective) result.witness = "class count differs from the engine";
    else if (r.first_disagreement) result.witness = *r.first_disagreement;
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::BoundTooSmall) throw;
    result.passed = false;
    result.witness = err.what();
    report.lines.push_back("agreement not established: bound too small");
  }
  report.add(std::move(result));
}

void action_validate(const RunConfig&, const Inputs& in, Report& report) {
  require_action(in);
  report.data = action_summary(in);
  if (in.set_action) {
    report.add(validate_set_action(*in.set_action));
    return;
  }
  report.add(validate_algebra_action(*in.algebra_action));
  Json idem = Json::object();
  for (const auto& r : ideals_idempotent_check(*in.algebra_action).results) idem[r.id] = r.passed;
  report.data["ideals_idempotent"] = idem;
}

std::optional<SgAction> induce_checked(const RunConfig& config, const Inputs& in, Report& report,
                                       std::optional<AlgebraPartialAction>& alpha) {
  alpha = validated_action(in, report);
  if (!alpha) return std::nullopt;
  SgAction B = to_sg_action(*alpha, config.max_group_order);
  report.add(validate_sg_action(B));
  report.add(check_e_monotone(B));
  report.add(check_generator_products(B));
  report.add(check_word_formula(B, *alpha, config.level == Level::Exhaustive ? 4 : 3));
  if (B.algebra().has_involution()) report.add(check_star_compatibility(B));
  const bool back = restrict_to_group(B) == *alpha;
  report.add(AxiomResult{"round_trip_group", "restricting the S(G)-action gives back the partial action", back, 1,
                         back ? "" : "ideals or maps differ"});
  const bool forth = to_sg_action(restrict_to_group(B), config.max_group_order) == B;
  report.add(AxiomResult{"round_trip_semigroup", "inducing from the restriction gives back the S(G)-action", forth, 1,
                         forth ? "" : "ideals or maps differ"});
  return B;
}

void action_induce(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  report.data = action_summary(in);
  std::optional<AlgebraPartialAction> alpha;
  auto B = induce_checked(config, in, report, alpha);
  if (!B) return;
  const SemigroupTable& T = B->table();
  Json elements = Json::array();
  Table rows{{"element", "dim_E"}};
  for (std::size_t s = 0; s < T.size(); ++s) {
    elements.push_back({{"element", T.text(s)}, {"dim", B->E(s).dim()}, {"E", to_json(B->E(s))},
                        {"beta", to_json(B->beta(s).matrix())}});
    rows.push_back({T.text(s), std::to_string(B->E(s).dim())});
    report.lines.push_back(T.text(s) + "  dim E = " + std::to_string(B->E(s).dim()));
  }
  report.data["algebra"] = to_json(B->algebra());
  report.data["elements"] = elements;
  report.csv = std::move(rows);
}

void cp_group(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  auto alpha = validated_action(in, report);
  if (!alpha) return;
  GroupCrossedProduct cp = build_group_cp(*alpha);
  const StructureAlgebra& P = cp.product.algebra();
  report.data = {{"dim", P.dim()}, {"algebra", to_json(P)}};
  report.lines.push_back("A x| G has dimension " + std::to_string(P.dim()));
  report.add(associativity("associativity", P, config));
  report.add(star_laws_result("star_laws", P));
  report.csv = multiplication_table(P);
}

// Builds L without the associativity abort so the failure can be reported.
void cp_semigroup(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  auto alpha = validated_action(in, report);
  if (!alpha) return;
  SgCrossedProduct scp = build_sg_cp(to_sg_action(*alpha, config.max_group_order), false);
  report.add(associativity("associativity_L", scp.L.algebra(), config));
  report.add(star_laws_result("star_laws_L", scp.L.algebra()));
  report.add(AxiomResult{"N_recheck", "closure from the reversed generator order gives the same N", scp.N_certified(),
                         1, scp.N_certified() ? "" : "the two closures differ"});
  if (scp.L.algebra().has_involution()) {
    report.add(AxiomResult{"N_star_closed", "N is closed under the involution", scp.N_star_closed, scp.N.dim(),
                           scp.N_star_closed ? "" : "some basis vector of N leaves N under *"});
  }
  report.add(check_quotient_identities(scp));
  report.data = {{"dim_L", scp.L.dim()},
                 {"dim_N", scp.N.dim()},
                 {"dim_quotient", scp.quotient.algebra.dim()},
                 {"generators", scp.generators.size()},
                 {"L", to_json(scp.L.algebra())},
                 {"quotient", to_json(scp.quotient.algebra)}};
  report.lines.push_back("dim L = " + std::to_string(scp.L.dim()) + ", dim N = " + std::to_string(scp.N.dim()) +
                         ", dim L/N = " + std::to_string(scp.quotient.algebra.dim()));
  report.csv = multiplication_table(scp.quotient.algebra);
}

void run_iso(const IsoReport& iso, Report& report) {
  report.add(iso.checks);
  report.data["dim_group_cp"] = iso.dim_group_cp;
  report.data["dim_L"] = iso.dim_L;
  report.data["dim_N"] = iso.dim_N;
  report.data["dim_quotient"] = iso.dim_quotient;
  const std::string dims = std::to_string(iso.dim_group_cp) + " = " + std::to_string(iso.dim_L) + " - " +
                           std::to_string(iso.dim_N);
  report.lines.push_back(iso.checks.passed() ? "phi, psi mutually inverse *-isomorphisms; dims " + dims
                                             : "isomorphism check failed; dims " + dims);
}

void check_iso(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  auto alpha = validated_action(in, report);
  if (!alpha) return;
  GroupCrossedProduct cp = build_group_cp(*alpha);
  SgCrossedProduct scp = build_sg_cp(to_sg_action(*alpha, config.max_group_order), false);
  run_iso(check_isomorphism(cp, scp), report);
}

void check_assoc(const RunConfig& config, const Inputs& in, Report& report) {
  if (in.algebra) {
    report.data = {{"dim", in.algebra->dim()}};
    report.add(associativity("associativity", *in.algebra, config));
  } else {
    require_action(in);
    auto alpha = validated_action(in, report);
    if (!alpha) return;
    GroupCrossedProduct cp = build_group_cp(*alpha);
    SgCrossedProduct scp = build_sg_cp(to_sg_action(*alpha, config.max_group_order), false);
    report.data = {{"dim_group_cp", cp.product.dim()}, {"dim_L", scp.L.dim()}};
    report.add(associativity("associativity_group_cp", cp.product.algebra(), config));
    report.add(associativity("associativity_L", scp.L.algebra(), config));
  }
  if (const AxiomResult* fail = report.first_failure()) {
    report.lines.push_back("not associative at " + fail->witness);
  } else {
    report.lines.push_back("associative");
  }
}

void covariant_checks(const RunConfig& config, const Inputs& in, const SgCrossedProduct& scp, Report& report) {
  CovariantRep rep = natural_covariant_rep(*in.set_action, scp.source);
  auto checks = check_covariant(rep, scp);
  report.add(checks);
  report.add(contractivity_check(rep, scp.L, kContractivitySamples, config.seed));
  report.data["space_dim"] = rep.space_dim;
  report.lines.push_back(checks.passed() ? "covariance identities hold; pi x nu kills N"
                                         : "covariant representation check failed");
}

void check_covariant_cmd(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  if (!in.set_action) throw Usage("check covariant needs a set-level action");
  auto alpha = validated_action(in, report);
  if (!alpha) return;
  SgCrossedProduct scp = build_sg_cp(to_sg_action(*alpha, config.max_group_order), false);
  covariant_checks(config, in, scp, report);
}

void check_all(const RunConfig& config, const Inputs& in, Report& report) {
  require_action(in);
  report.data = action_summary(in);
  std::optional<AlgebraPartialAction> alpha;
  auto B = induce_checked(config, in, report, alpha);
  if (!B) return;
  GroupCrossedProduct cp = build_group_cp(*alpha);
  report.add(associativity("associativity_group_cp", cp.product.algebra(), config));
  report.add(star_laws_result("star_laws_group_cp", cp.product.algebra()));
  SgCrossedProduct scp = build_sg_cp(*B, false);
  const AxiomResult assoc_L = associativity("associativity_L", scp.L.algebra(), config);
  report.add(assoc_L);
  if (!assoc_L.passed) return;
  report.add(star_laws_result("star_laws_L", scp.L.algebra()));
  run_iso(check_isomorphism(cp, scp), report);
  report.add(check_quotient_identities(scp));
  if (in.set_action) covariant_checks(config, in, scp, report);
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadDocument:
    case ErrorKind::BadLabels:
    case ErrorKind::NonLatinSquare:
    case ErrorKind::NoIdentity:
    case ErrorKind::NonAssociative:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::BaseSizeMismatch:
    case ErrorKind::GroupMismatch:
    case ErrorKind::GroupTooLarge:
    case ErrorKind::SourceMismatch:
    case ErrorKind::NotSquare:
      return true;
    default:
      return false;
  }
}

using Handler = void (*)(const RunConfig&, const Inputs&, Report&);

Handler find_handler(const std::string& command, const std::string& sub) {
  struct Entry {
    const char* command;
    const char* sub;
    Handler handler;
  };
  static const Entry table[] = {
      {"sg", "enumerate", sg_enumerate},       {"sg", "table", sg_table},
      {"sg", "oracle-check", sg_oracle_check}, {"action", "validate", action_validate},
      {"action", "induce", action_induce},     {"cp", "group", cp_group},
      {"cp", "semigroup", cp_semigroup},       {"check", "iso", check_iso},
      {"check", "assoc", check_assoc},         {"check", "covariant", check_covariant_cmd},
      {"check", "all", check_all},
  };
  for (const auto& e : table)
    if (command == e.command && sub == e.sub) return e.handler;
  return nullptr;
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  return std::nullopt;
}

std::optional<Level> parse_level(std::string_view text) {
  if (text == "quick") return Level::Quick;
  if (text == "exhaustive") return Level::Exhaustive;
  return std::nullopt;
}

RunResult run_command(const RunConfig& config) {
  RunResult result;
  const Handler handler = find_handler(config.command, config.subcommand);
  if (handler == nullptr) {
    result.exit_code = 2;
    result.diagnostic = "unknown command \"" + config.command + " " + config.subcommand + "\"";
    return result;
  }
  if (config.max_group_order == 0 || (config.max_word_len && *config.max_word_len == 0)) {
    result.exit_code = 2;
    result.diagnostic = "bounds must be positive";
    return result;
  }
  Inputs inputs;
  try {
    inputs = load_inputs(config);
  } catch (const Error& err) {
    result.exit_code = 2;
    result.diagnostic = err.what();
    return result;
  } catch (const Usage& err) {
    result.exit_code = 2;
    result.diagnostic = err.what();
    return result;
  }

  Report report(config.command + " " + config.subcommand);
  try {
    handler(config, inputs, report);
  } catch (const Usage& err) {
    result.exit_code = 2;
    result.diagnostic = err.what();
    return result;
  } catch (const Error& err) {
    result.exit_code = is_input_error(err.kind()) ? 2 : 1;
    result.diagnostic = err.what();
    return result;
  } catch (const std::exception& err) {
    result.exit_code = 1;
    result.diagnostic = std::string("internal error: ") + err.what();
    return result;
  }
  report.data["level"] = level_name(config.level);
  report.data["seed"] = config.seed;
  result.output = report.render(config.format);
  if (const AxiomResult* fail = report.first_failure()) {
    result.exit_code = 1;
    result.diagnostic = fail->id + " failed: " + fail->witness;
  }
  return result;
}

}  // namespace excross
