#include <string>

#include "core/documents.hpp"
#include "core/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace excross;

namespace {

std::string fixture(const std::string& name) { return std::string(EXCROSS_FIXTURE_DIR) + "/" + name; }

// Kind and message of the error thrown by f.
template <class F>
std::pair<ErrorKind, std::string> error_of(F&& f) {
  try {
    f();
  } catch (const Error& err) {
    return {err.kind(), err.what()};
  }
  FAIL("no error thrown");
  return {};
}

bool same_action(const SetPartialAction& a, const SetPartialAction& b) {
  if (!(a.group() == b.group()) || a.base_size() != b.base_size()) return false;
  for (Element g = 0; g < a.group().order(); ++g)
    if (!(a.theta(g) == b.theta(g))) return false;
  return true;
}

SetPartialAction load_set_action(const std::string& name) {
  return set_action_from_json(LocatedJson::load(fixture(name)), std::nullopt);
}

}  // namespace

TEST_CASE("fixture files match the in-code fixtures") {
  CHECK(same_action(load_set_action("p1.json"), fixtures::p1()));
  CHECK(same_action(load_set_action("swap3.json"), fixtures::swap3()));
  CHECK(same_action(load_set_action("z3_rotation.json"), fixtures::z3_rotation()));
  CHECK(same_action(load_set_action("sym3_partial.json"), fixtures::sym3_partial()));
  CHECK(same_action(load_set_action("global_swap.json"), fixtures::global_swap()));
  CHECK(same_action(load_set_action("broken_z4.json"), fixtures::broken_z4()));
  const auto doc = LocatedJson::load(fixture("zero_product_fixture.json"));
  CHECK(document_kind(doc) == DocumentKind::AlgebraAction);
  CHECK(algebra_action_from_json(doc, std::nullopt) == fixtures::zero_product());
}

TEST_CASE("document kinds") {
  CHECK(document_kind(LocatedJson::load(fixture("p1.json"))) == DocumentKind::SetAction);
  CHECK(document_kind(LocatedJson::load(fixture("nilpotent2.json"))) == DocumentKind::Algebra);
  CHECK(document_kind(LocatedJson::load(fixture("z3_table.json"))) == DocumentKind::Group);
  CHECK(document_kind(LocatedJson::parse(R"({"permutations": [[1, 0]]})", "t")) == DocumentKind::Group);
  CHECK(error_of([] { (void)document_kind(LocatedJson::parse("{}", "t")); }).first == ErrorKind::BadDocument);
}

TEST_CASE("groups load from presets, tables and permutations") {
  CHECK(load_group("cyclic 3") == cyclic_group(3));
  CHECK(load_group(fixture("z3_table.json")) == cyclic_group(3));
  const auto perm = group_from_json(LocatedJson::parse(R"({"permutations": [[1, 2, 0], [1, 0, 2]]})", "t"));
  CHECK(perm.order() == 6);
  CHECK(error_of([] { (void)load_group(fixture("bad_latin.json")); }).first == ErrorKind::NonLatinSquare);
  CHECK(error_of([] { (void)load_group("no/such/file.json"); }).first == ErrorKind::BadDocument);
}

TEST_CASE("errors carry line and column") {
  auto [kind, msg] = error_of([] { (void)LocatedJson::parse("{\n  \"a\": [1,\n", "doc.json"); });
  CHECK(kind == ErrorKind::BadDocument);
  CHECK(msg.find("doc.json:3:1:") != std::string::npos);

  const std::string text = "{\n  \"group\": \"cyclic 2\",\n  \"set_size\": 2,\n  \"maps\": {\"a\": [[0, 5]]}\n}";
  std::tie(kind, msg) = error_of([&] { (void)set_action_from_json(LocatedJson::parse(text, "m.json"), std::nullopt); });
  CHECK(kind == ErrorKind::BadDocument);
  CHECK(msg.find("outside base set") != std::string::npos);
  CHECK(msg.find("m.json:4:") != std::string::npos);

  const std::string extra = "{\"group\": \"cyclic 2\",\n \"set_size\": 2, \"maps\": {},\n \"mapz\": 1}";
  std::tie(kind, msg) = error_of([&] { (void)set_action_from_json(LocatedJson::parse(extra, "x.json"), std::nullopt); });
  CHECK(kind == ErrorKind::BadDocument);
  CHECK(msg.find("x.json:3:") != std::string::npos);
  CHECK(msg.find("unknown member \"mapz\"") != std::string::npos);

  const std::string label = R"({"labels": ["u"], "structure_constants": [{"left": "u", "right": "v", "result": {}}]})";
  std::tie(kind, msg) = error_of([&] { (void)algebra_from_json(LocatedJson::parse(label, "l.json")); });
  CHECK(kind == ErrorKind::BadDocument);
  CHECK(msg.find("unknown basis label \"v\"") != std::string::npos);
}

TEST_CASE("set action documents") {
  SUBCASE("the group comes from the command line when absent") {
    const auto doc = LocatedJson::parse(R"({"set_size": 2, "maps": {"a": [[0, 0]]}})", "t");
    CHECK(same_action(set_action_from_json(doc, cyclic_group(2)), fixtures::p1()));
    CHECK(error_of([&] { (void)set_action_from_json(doc, std::nullopt); }).first == ErrorKind::BadDocument);
  }
  SUBCASE("disagreeing groups") {
    const auto doc = LocatedJson::load(fixture("p1.json"));
    CHECK(error_of([&] { (void)set_action_from_json(doc, cyclic_group(3)); }).first == ErrorKind::SourceMismatch);
    CHECK(same_action(set_action_from_json(doc, cyclic_group(2)), fixtures::p1()));
  }
  SUBCASE("the identity map may be listed only as the identity") {
    const auto ok = LocatedJson::parse(R"({"group": "z2", "set_size": 1, "maps": {"e": [[0, 0]]}})", "t");
    CHECK(set_action_from_json(ok, std::nullopt).theta(1).image().empty());
    const auto bad = LocatedJson::parse(R"({"group": "z2", "set_size": 2, "maps": {"e": [[0, 1], [1, 0]]}})", "t");
    CHECK(error_of([&] { (void)set_action_from_json(bad, std::nullopt); }).first == ErrorKind::BadDocument);
  }
  SUBCASE("inline group") {
    const auto doc = LocatedJson::parse(
        R"({"group": {"names": ["e", "t"], "table": [[0, 1], [1, 0]]}, "set_size": 2, "maps": {"t": [[0, 0]]}})", "t");
    const auto action = set_action_from_json(doc, std::nullopt);
    CHECK(action.group().name(1) == "t");
    CHECK(action.domain_set(1) == std::vector<std::size_t>{0});
  }
}

TEST_CASE("algebra documents") {
  const auto nil = algebra_from_json(LocatedJson::load(fixture("nilpotent2.json")));
  CHECK(nil.dim() == 2);
  CHECK(nil.multiply(unit_vector(2, 0), unit_vector(2, 0)) == unit_vector(2, 1));
  CHECK(nil.multiply(unit_vector(2, 1), unit_vector(2, 0)) == Vector(2));

  const auto frac = algebra_from_json(LocatedJson::parse(
      R"({"labels": ["u"], "structure_constants": [{"left": "u", "right": "u", "result": {"u": "3/6"}}]})", "t"));
  CHECK(frac.multiply(unit_vector(1, 0), unit_vector(1, 0))[0] == Rational(1, 2));

  const auto dup = R"({"labels": ["u"], "structure_constants": [
      {"left": "u", "right": "u", "result": {}}, {"left": "u", "right": "u", "result": {}}]})";
  CHECK(error_of([&] { (void)algebra_from_json(LocatedJson::parse(dup, "t")); }).first == ErrorKind::BadDocument);
  const auto bad_coeff = R"({"labels": ["u"], "structure_constants": [{"left": "u", "right": "u", "result": {"u": 0.5}}]})";
  CHECK(error_of([&] { (void)algebra_from_json(LocatedJson::parse(bad_coeff, "t")); }).first == ErrorKind::BadDocument);
}

TEST_CASE("algebra action documents") {
  SUBCASE("alpha of the inverse is inferred") {
    const auto doc = LocatedJson::parse(R"({
      "group": "cyclic 3",
      "algebra": {"labels": ["p", "q"], "structure_constants": [
        {"left": "p", "right": "p", "result": {"p": 1}}, {"left": "q", "right": "q", "result": {"q": 1}}]},
      "ideals": {"a": [{"q": 1}], "a2": [{"p": 1}]},
      "alpha": {"a": [{"q": 1}]}
    })", "t");
    const auto action = algebra_action_from_json(doc, std::nullopt);
    CHECK(action.alpha(2).apply(unit_vector(2, 1)) == unit_vector(2, 0));
    CHECK(validate_algebra_action(action).passed());
  }
  SUBCASE("wrong number of images") {
    const auto doc = LocatedJson::parse(R"({
      "group": "cyclic 2",
      "algebra": {"labels": ["p"], "structure_constants": [{"left": "p", "right": "p", "result": {"p": 1}}]},
      "ideals": {"a": [{"p": 1}]},
      "alpha": {"a": []}
    })", "t");
    CHECK(error_of([&] { (void)algebra_action_from_json(doc, std::nullopt); }).first == ErrorKind::BadDocument);
  }
  SUBCASE("a map is required for a nonzero ideal") {
    const auto doc = LocatedJson::parse(R"({
      "group": "cyclic 2",
      "algebra": {"labels": ["p"], "structure_constants": [{"left": "p", "right": "p", "result": {"p": 1}}]},
      "ideals": {"a": [{"p": 1}]},
      "alpha": {}
    })", "t");
    CHECK(error_of([&] { (void)algebra_action_from_json(doc, std::nullopt); }).first == ErrorKind::BadDocument);
  }
}

TEST_CASE("export round trips") {
  const auto algebra = fixtures::zero_product().algebra();
  const auto dumped = to_json(algebra).dump();
  CHECK(algebra_from_json(LocatedJson::parse(dumped, "t")) == algebra);

  const auto group = symmetric_group_3();
  CHECK(group_from_json(LocatedJson::parse(to_json(group).dump(), "t")) == group);

  CHECK(to_json(Rational(-1, 2)) == Json("-1/2"));
  CHECK(to_json(Rational(4)) == Json("4"));

  const SemigroupTable table(cyclic_group(3));
  const auto json = semigroup_table_json(table);
  CHECK(json.at("elements").size() == 8);
  CHECK(json.at("table").size() == 8);
  CHECK(json.at("table").at(0).size() == 8);
  CHECK(json.at("star").size() == 8);
}
