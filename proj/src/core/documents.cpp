#include "core/documents.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string_view>
#include <vector>

#include "core/error.hpp"

namespace excross {

namespace {

// Input iterator over a buffer that publishes how many characters the
// parser has consumed, so SAX events can be given a position.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, const char* base, std::size_t* consumed)
      : p_(p), base_(base), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    if (consumed_ != nullptr) *consumed_ = static_cast<std::size_t>(p_ - base_);
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator copy = *this;
    ++*this;
    return copy;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '\n') starts_.push_back(i + 1);
  }
  // 1-based line and column of the character at `offset`.
  std::pair<std::size_t, std::size_t> locate(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    return {line, offset - starts_[line - 1] + 1};
  }

 private:
  std::vector<std::size_t> starts_;
};

std::string escape_token(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string child(const std::string& pointer, const std::string& key) { return pointer + "/" + escape_token(key); }
std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

class LocatingSax {
 public:
  using number_integer_t = Json::number_integer_t;
  using number_unsigned_t = Json::number_unsigned_t;
  using number_float_t = Json::number_float_t;
  using string_t = Json::string_t;
  using binary_t = Json::binary_t;

  LocatingSax(Json& root, const std::size_t& consumed, const LineIndex& lines, const std::string& origin,
              std::map<std::string, std::pair<std::size_t, std::size_t>>& positions)
      : dom_(root), consumed_(consumed), lines_(lines), origin_(origin), positions_(positions) {}

  bool null() { return scalar([&] { return dom_.null(); }); }
  bool boolean(bool v) { return scalar([&] { return dom_.boolean(v); }); }
  bool number_integer(number_integer_t v) { return scalar([&] { return dom_.number_integer(v); }); }
  bool number_unsigned(number_unsigned_t v) { return scalar([&] { return dom_.number_unsigned(v); }); }
  bool number_float(number_float_t v, const string_t& s) { return scalar([&] { return dom_.number_float(v, s); }); }
  bool string(string_t& v) { return scalar([&] { return dom_.string(v); }); }
  bool binary(binary_t& v) { return scalar([&] { return dom_.binary(v); }); }

  bool start_object(std::size_t n) {
    mark();
    frames_.push_back({false, {}, 0});
    return dom_.start_object(n);
  }
  bool key(string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    mark();
    frames_.push_back({true, {}, 0});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }

  bool parse_error(std::size_t position, const std::string& last_token, const nlohmann::detail::exception& ex) {
    auto [line, col] = lines_.locate(position == 0 ? 0 : position - 1);
    std::string what = ex.what();
    auto cut = what.find(": ");
    if (cut != std::string::npos) what = what.substr(cut + 2);
    (void)last_token;
    throw Error(ErrorKind::BadDocument,
                origin_ + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }

 private:
  struct Frame {
    bool array;
    std::string key;
    std::size_t index;
  };

  template <class F>
  bool scalar(F&& forward) {
    mark();
    advance();
    return forward();
  }
  std::string pointer() const {
    std::string out;
    for (const auto& f : frames_) out += f.array ? "/" + std::to_string(f.index) : "/" + escape_token(f.key);
    return out;
  }
  void mark() {
    const std::size_t at = consumed_ == 0 ? 0 : consumed_ - 1;
    positions_[pointer()] = lines_.locate(at);
  }
  void advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }

  nlohmann::detail::json_sax_dom_parser<Json> dom_;
  const std::size_t& consumed_;
  const LineIndex& lines_;
  const std::string& origin_;
  std::map<std::string, std::pair<std::size_t, std::size_t>>& positions_;
  std::vector<Frame> frames_;
};

// Message of an Error without its kind prefix.
std::string bare_message(const Error& err) {
  std::string what = err.what();
  const std::size_t prefix = to_string(err.kind()).size() + 2;
  return what.size() >= prefix ? what.substr(prefix) : what;
}

[[noreturn]] void relocate(const LocatedJson& doc, const std::string& pointer, const Error& err) {
  throw Error(err.kind(), doc.where(pointer) + ": " + bare_message(err));
}

const Json& value_at(const LocatedJson& doc, const std::string& pointer) {
  return doc.root().at(Json::json_pointer(pointer));
}

const Json& require(const LocatedJson& doc, const std::string& pointer, const std::string& key) {
  const Json& obj = value_at(doc, pointer);
  if (!obj.is_object()) doc.fail(pointer, "expected an object");
  if (!obj.contains(key)) doc.fail(pointer, "missing member \"" + key + "\"");
  return obj.at(key);
}

std::size_t read_index(const LocatedJson& doc, const std::string& pointer) {
  const Json& v = value_at(doc, pointer);
  if (!v.is_number_unsigned()) doc.fail(pointer, "expected a nonnegative integer");
  return v.get<std::size_t>();
}

std::string read_string(const LocatedJson& doc, const std::string& pointer) {
  const Json& v = value_at(doc, pointer);
  if (!v.is_string()) doc.fail(pointer, "expected a string");
  return v.get<std::string>();
}

// Rejects members outside the documented schema.
void only_members(const LocatedJson& doc, const std::string& pointer, std::initializer_list<std::string_view> keys) {
  const Json& obj = value_at(doc, pointer);
  if (!obj.is_object()) doc.fail(pointer, "expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      doc.fail(child(pointer, item.key()), "unknown member \"" + item.key() + "\"");
    }
  }
}

void require_array(const LocatedJson& doc, const std::string& pointer) {
  if (!value_at(doc, pointer).is_array()) doc.fail(pointer, "expected an array");
}

void require_object(const LocatedJson& doc, const std::string& pointer) {
  if (!value_at(doc, pointer).is_object()) doc.fail(pointer, "expected an object");
}

Rational read_rational(const LocatedJson& doc, const std::string& pointer) {
  const Json& v = value_at(doc, pointer);
  if (v.is_number_integer()) {
    Rational q;
    if (v.is_number_unsigned()) q = mpz_class(std::to_string(v.get<std::uint64_t>()));
    else q = mpz_class(std::to_string(v.get<std::int64_t>()));
    return q;
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& err) {
      relocate(doc, pointer, err);
    }
  }
  doc.fail(pointer, "expected an integer or a \"p/q\" string");
}

// {"label": coefficient, ...} over the given basis labels.
Vector read_labeled_vector(const LocatedJson& doc, const std::string& pointer, const std::vector<std::string>& labels) {
  require_object(doc, pointer);
  Vector out = zero_vector(labels.size());
  for (const auto& [key, value] : value_at(doc, pointer).items()) {
    auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end()) doc.fail(child(pointer, key), "unknown basis label \"" + key + "\"");
    out[static_cast<std::size_t>(it - labels.begin())] = read_rational(doc, child(pointer, key));
  }
  return out;
}

std::vector<Vector> read_vector_list(const LocatedJson& doc, const std::string& pointer,
                                     const std::vector<std::string>& labels) {
  require_array(doc, pointer);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < value_at(doc, pointer).size(); ++i) {
    out.push_back(read_labeled_vector(doc, child(pointer, i), labels));
  }
  return out;
}

Element read_element(const LocatedJson& doc, const std::string& pointer, const GroupTable& group,
                     const std::string& name) {
  auto g = group.find(name);
  if (!g) doc.fail(pointer, "unknown group element \"" + name + "\"");
  return *g;
}

GroupTable resolve_group(const LocatedJson& doc, const std::optional<GroupTable>& fallback) {
  const Json& root = doc.root();
  if (!root.is_object()) doc.fail("", "expected an object");
  if (!root.contains("group")) {
    if (!fallback) doc.fail("", "no \"group\" member and no group given on the command line");
    return *fallback;
  }
  const std::string pointer = "/group";
  GroupTable group = [&] {
    const Json& ref = root.at("group");
    if (ref.is_string()) {
      auto preset = group_preset(ref.get<std::string>());
      if (!preset) doc.fail(pointer, "unknown group preset \"" + ref.get<std::string>() + "\"");
      return *preset;
    }
    return group_from_json(doc, pointer);
  }();
  if (fallback && !(*fallback == group)) {
    throw Error(ErrorKind::SourceMismatch, doc.where(pointer) + ": document group differs from the given group");
  }
  return group;
}

Json labeled(const Vector& v, const std::vector<std::string>& labels) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out[labels[i]] = to_json(v[i]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LocatedJson LocatedJson::parse(std::string_view text, std::string origin) {
  LocatedJson doc;
  doc.origin_ = std::move(origin);
  LineIndex lines(text);
  std::size_t consumed = 0;
  LocatingSax sax(doc.root_, consumed, lines, doc.origin_, doc.positions_);
  const char* base = text.data();
  Json::sax_parse(CountingIterator(base, base, &consumed), CountingIterator(base + text.size(), base, nullptr), &sax);
  return doc;
}

LocatedJson LocatedJson::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadDocument, path + ": cannot be read");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

std::string LocatedJson::where(const std::string& pointer) const {
  std::string p = pointer;
  while (true) {
    auto it = positions_.find(p);
    if (it != positions_.end()) {
      return origin_ + ":" + std::to_string(it->second.first) + ":" + std::to_string(it->second.second);
    }
    if (p.empty()) return origin_;
    p = p.substr(0, p.rfind('/'));
  }
}

void LocatedJson::fail(const std::string& pointer, const std::string& message) const {
  throw Error(ErrorKind::BadDocument, where(pointer) + ": " + message);
}

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Group: return "group";
    case DocumentKind::SetAction: return "set-level action";
    case DocumentKind::AlgebraAction: return "algebra-level action";
    case DocumentKind::Algebra: return "algebra";
  }
  return "unknown";
}

DocumentKind document_kind(const LocatedJson& doc) {
  const Json& root = doc.root();
  if (!root.is_object()) doc.fail("", "expected an object");
  if (root.contains("maps")) return DocumentKind::SetAction;
  if (root.contains("alpha")) return DocumentKind::AlgebraAction;
  if (root.contains("structure_constants")) return DocumentKind::Algebra;
  if (root.contains("table") || root.contains("permutations")) return DocumentKind::Group;
  doc.fail("", "cannot tell the document kind: expected \"maps\", \"alpha\", \"structure_constants\", \"table\" or \"permutations\"");
}

GroupTable load_group(std::string_view spec) {
  if (auto preset = group_preset(spec)) return *preset;
  auto doc = LocatedJson::load(std::string(spec));
  if (document_kind(doc) != DocumentKind::Group) doc.fail("", "expected a group document");
  return group_from_json(doc);
}

GroupTable group_from_json(const LocatedJson& doc, const std::string& pointer) {
  require_object(doc, pointer);
  const Json& obj = value_at(doc, pointer);
  try {
    if (obj.contains("permutations")) {
      only_members(doc, pointer, {"permutations"});
      const std::string pp = child(pointer, "permutations");
      require_array(doc, pp);
      std::vector<std::vector<std::size_t>> gens;
      for (std::size_t i = 0; i < obj.at("permutations").size(); ++i) {
        require_array(doc, child(pp, i));
        std::vector<std::size_t> perm;
        for (std::size_t j = 0; j < obj.at("permutations").at(i).size(); ++j)
          perm.push_back(read_index(doc, child(child(pp, i), j)));
        gens.push_back(std::move(perm));
      }
      try {
        return group_from_permutations(gens);
      } catch (const Error& err) {
        relocate(doc, pp, err);
      }
    }
    require(doc, pointer, "names");
    require(doc, pointer, "table");
    only_members(doc, pointer, {"names", "table"});
    const std::string np = child(pointer, "names");
    const std::string tp = child(pointer, "table");
    require_array(doc, np);
    require_array(doc, tp);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < obj.at("names").size(); ++i) names.push_back(read_string(doc, child(np, i)));
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < obj.at("table").size(); ++r) {
      require_array(doc, child(tp, r));
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < obj.at("table").at(r).size(); ++c) row.push_back(read_index(doc, child(child(tp, r), c)));
      table.push_back(std::move(row));
    }
    try {
      return GroupTable::from_table(std::move(names), table);
    } catch (const Error& err) {
      relocate(doc, tp, err);
    }
  } catch (const Json::exception& ex) {
    doc.fail(pointer, ex.what());
  }
}

StructureAlgebra algebra_from_json(const LocatedJson& doc, const std::string& pointer) {
  require(doc, pointer, "labels");
  require(doc, pointer, "structure_constants");
  only_members(doc, pointer, {"labels", "structure_constants", "involution", "unit", "dim"});
  const Json& obj = value_at(doc, pointer);
  const std::string lp = child(pointer, "labels");
  require_array(doc, lp);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < obj.at("labels").size(); ++i) {
    std::string label = read_string(doc, child(lp, i));
    if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
      doc.fail(child(lp, i), "repeated basis label \"" + label + "\"");
    }
    labels.push_back(std::move(label));
  }
  const std::size_t n = labels.size();
  auto label_index = [&](const std::string& p) {
    const std::string name = read_string(doc, p);
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) doc.fail(p, "unknown basis label \"" + name + "\"");
    return static_cast<std::size_t>(it - labels.begin());
  };

  std::vector<SparseVector> products(n * n);
  std::vector<bool> seen(n * n, false);
  const std::string sp = child(pointer, "structure_constants");
  require_array(doc, sp);
  for (std::size_t e = 0; e < obj.at("structure_constants").size(); ++e) {
    const std::string ep = child(sp, e);
    require(doc, ep, "left");
    require(doc, ep, "right");
    require(doc, ep, "result");
    only_members(doc, ep, {"left", "right", "result"});
    const std::size_t i = label_index(child(ep, "left"));
    const std::size_t j = label_index(child(ep, "right"));
    if (seen[i * n + j]) doc.fail(ep, "product " + labels[i] + " * " + labels[j] + " listed twice");
    seen[i * n + j] = true;
    products[i * n + j] = to_sparse(read_labeled_vector(doc, child(ep, "result"), labels));
  }

  std::optional<std::vector<Vector>> involution;
  if (obj.contains("involution")) {
    const std::string ip = child(pointer, "involution");
    require_object(doc, ip);
    std::vector<Vector> images;
    for (const auto& label : labels) {
      if (!obj.at("involution").contains(label)) doc.fail(ip, "involution misses basis label \"" + label + "\"");
      images.push_back(read_labeled_vector(doc, child(ip, label), labels));
    }
    if (obj.at("involution").size() != n) doc.fail(ip, "involution lists an unknown label");
    involution = std::move(images);
  }
  std::optional<Vector> unit;
  if (obj.contains("unit")) unit = read_labeled_vector(doc, child(pointer, "unit"), labels);
  try {
    return StructureAlgebra(std::move(labels), std::move(products), std::move(involution), std::move(unit));
  } catch (const Error& err) {
    relocate(doc, pointer, err);
  }
}

SetPartialAction set_action_from_json(const LocatedJson& doc, const std::optional<GroupTable>& fallback) {
  GroupTable group = resolve_group(doc, fallback);
  require(doc, "", "set_size");
  require(doc, "", "maps");
  only_members(doc, "", {"group", "set_size", "maps"});
  const std::size_t m = read_index(doc, "/set_size");
  if (m == 0) doc.fail("/set_size", "set_size must be positive");
  require_object(doc, "/maps");
  std::map<Element, PartialBijection> listed;
  for (const auto& [name, pairs_json] : doc.root().at("maps").items()) {
    const std::string mp = child("/maps", name);
    const Element g = read_element(doc, mp, group, name);
    require_array(doc, mp);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < pairs_json.size(); ++i) {
      const std::string pp = child(mp, i);
      require_array(doc, pp);
      if (pairs_json.at(i).size() != 2) doc.fail(pp, "expected a [source, target] pair");
      pairs.emplace_back(read_index(doc, child(pp, 0)), read_index(doc, child(pp, 1)));
    }
    try {
      listed.emplace(g, PartialBijection(m, pairs));
    } catch (const Error& err) {
      relocate(doc, mp, err);
    }
    if (g == group.identity() && !(listed.at(g) == PartialBijection::identity(m))) {
      doc.fail(mp, "the map of the identity is implied and must be the identity");
    }
  }
  try {
    return SetPartialAction::from_listed(std::move(group), m, listed);
  } catch (const Error& err) {
    relocate(doc, "/maps", err);
  }
}

AlgebraPartialAction algebra_action_from_json(const LocatedJson& doc, const std::optional<GroupTable>& fallback) {
  GroupTable group = resolve_group(doc, fallback);
  require(doc, "", "algebra");
  require(doc, "", "alpha");
  only_members(doc, "", {"group", "algebra", "ideals", "alpha"});
  StructureAlgebra algebra = algebra_from_json(doc, "/algebra");
  const std::size_t n = algebra.dim();
  const std::size_t order = group.order();
  const auto& labels = algebra.labels();

  std::vector<std::vector<Vector>> listed(order);
  std::vector<Subspace> ideals(order, Subspace::zero(n));
  for (std::size_t i = 0; i < n; ++i) listed[0].push_back(unit_vector(n, i));
  ideals[0] = Subspace::full(n);
  if (doc.root().contains("ideals")) {
    require_object(doc, "/ideals");
    for (const auto& item : doc.root().at("ideals").items()) {
      const std::string ip = child("/ideals", item.key());
      const Element g = read_element(doc, ip, group, item.key());
      if (g == group.identity()) doc.fail(ip, "D_e = A is implied");
      listed[g] = read_vector_list(doc, ip, labels);
      ideals[g] = Subspace::span(n, listed[g]);
      if (ideals[g].dim() != listed[g].size()) doc.fail(ip, "ideal basis is linearly dependent");
    }
  }

  std::vector<std::optional<LinearMap>> alpha(order);
  alpha[0] = LinearMap::identity(ideals[0]);
  require_object(doc, "/alpha");
  for (const auto& item : doc.root().at("alpha").items()) {
    const std::string ap = child("/alpha", item.key());
    const Element g = read_element(doc, ap, group, item.key());
    if (g == group.identity()) doc.fail(ap, "alpha_e = id is implied");
    const Element gi = group.inverse(g);
    auto images = read_vector_list(doc, ap, labels);
    if (images.size() != listed[gi].size()) {
      doc.fail(ap, "expected " + std::to_string(listed[gi].size()) + " images, one per basis vector of D_" +
                       group.name(gi));
    }
    try {
      alpha[g] = LinearMap::from_images(ideals[gi], ideals[g], listed[gi], images);
    } catch (const Error& err) {
      relocate(doc, ap, err);
    }
  }
  std::vector<LinearMap> maps;
  for (Element g = 0; g < order; ++g) {
    const Element gi = group.inverse(g);
    if (!alpha[g]) {
      if (alpha[gi]) {
        try {
          alpha[g] = alpha[gi]->inverse();
        } catch (const Error& err) {
          relocate(doc, child("/alpha", group.name(gi)), err);
        }
      } else if (ideals[g].dim() == 0 && ideals[gi].dim() == 0) {
        alpha[g] = LinearMap(ideals[gi], ideals[g], Matrix(0, 0));
      } else {
        doc.fail("/alpha", "no map given for " + group.name(g) + " or its inverse");
      }
    }
    maps.push_back(*alpha[g]);
  }
  try {
    return AlgebraPartialAction(std::move(group), std::move(algebra), std::move(ideals), std::move(maps));
  } catch (const Error& err) {
    relocate(doc, "", err);
  }
}

// ---------------------------------------------------------------------------

Json to_json(const Rational& q) { return format_rational(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(to_json(v));
  return {{"ambient", s.ambient_dim()}, {"dim", s.dim()}, {"basis", basis}};
}

Json to_json(const StructureAlgebra& algebra) {
  const auto& labels = algebra.labels();
  Json products = Json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      const auto& p = algebra.basis_product(i, j);
      if (p.empty()) continue;
      products.push_back({{"left", labels[i]}, {"right", labels[j]},
                          {"result", labeled(to_dense(p, algebra.dim()), labels)}});
    }
  Json out = {{"dim", algebra.dim()}, {"labels", labels}, {"structure_constants", products}};
  if (algebra.has_involution()) {
    Json inv = Json::object();
    for (std::size_t i = 0; i < algebra.dim(); ++i) inv[labels[i]] = labeled(algebra.involution()[i], labels);
    out["involution"] = inv;
  }
  if (algebra.unit()) out["unit"] = labeled(*algebra.unit(), labels);
  return out;
}

Json to_json(const GroupTable& group) {
  Json table = Json::array();
  for (Element g = 0; g < group.order(); ++g) {
    Json row = Json::array();
    for (Element h = 0; h < group.order(); ++h) row.push_back(group.multiply(g, h));
    table.push_back(row);
  }
  return {{"names", group.names()}, {"table", table}};
}

Json to_json(const AxiomResult& result) {
  return {{"id", result.id},
          {"statement", result.statement},
          {"passed", result.passed},
          {"checked", result.checked},
          {"witness", result.witness}};
}

Json to_json(const ValidationReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  return results;
}

Json semigroup_table_json(const SemigroupTable& table) {
  Json elements = Json::array();
  Json rows = Json::array();
  Json star = Json::array();
  for (std::size_t x = 0; x < table.size(); ++x) {
    elements.push_back(table.text(x));
    Json row = Json::array();
    for (std::size_t y = 0; y < table.size(); ++y) row.push_back(table.product(x, y));
    rows.push_back(row);
    star.push_back(table.star(x));
  }
  return {{"elements", elements}, {"table", rows}, {"star", star}};
}

}  // namespace excross
