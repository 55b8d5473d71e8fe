#pragma once

/**
 * @file io.hpp
 * @brief JSON instance files and JSON forms of polynomials, series and posets.
 *
 * Instance format:
 *
 *   { "ring": "Z[i]",
 *     "matrix": [[1, [1, 1]], ["1+i", 0]],
 *     "torsion_at_empty": [2] }
 *
 * An entry is an integer, a pair [a, b] meaning a + b·ω, or a string such as
 * "3-2i" / "1+w". With torsion_at_empty = [t_1..t_k] the last k rows of the
 * matrix are coordinates in the summands R/(t_j) of M(∅).
 */

#include <cstddef>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gtpoly/error.hpp"
#include "gtpoly/face_ring.hpp"
#include "gtpoly/grothendieck.hpp"
#include "gtpoly/matroid.hpp"
#include "gtpoly/poset.hpp"

namespace gtpoly {

using json = nlohmann::json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Input iterator that counts consumed characters, so SAX events can be
// mapped back to text positions.
struct CountingIterator {
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const { return *p; }
  CountingIterator& operator++() {
    ++p;
    ++*consumed;
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p == b.p; }
};

// Records the text offset reached when each JSON pointer's value was read.
class PositionRecorder : public nlohmann::json_sax<json> {
 public:
  explicit PositionRecorder(const std::size_t* consumed) : consumed_(consumed) {}

  std::map<std::string, std::size_t> positions;

  bool null() override { return scalar(); }
  bool boolean(bool) override { return scalar(); }
  bool number_integer(number_integer_t) override { return scalar(); }
  bool number_unsigned(number_unsigned_t) override { return scalar(); }
  bool number_float(number_float_t, const string_t&) override { return scalar(); }
  bool string(string_t&) override { return scalar(); }
  bool binary(binary_t&) override { return scalar(); }
  bool start_object(std::size_t) override { return open(false); }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(true); }
  bool end_array() override { return close(); }
  bool key(string_t& k) override {
    stack_.back().key = k;
    return true;
  }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception&) override { return false; }

 private:
  struct Frame {
    bool array;
    std::size_t index = 0;
    std::string key;
  };
  std::string path() const {
    std::string s;
    for (const auto& f : stack_) s += "/" + (f.array ? std::to_string(f.index) : f.key);
    return s;
  }
  void advance() {
    if (!stack_.empty() && stack_.back().array) ++stack_.back().index;
  }
  bool scalar() {
    positions.emplace(path(), *consumed_);
    advance();
    return true;
  }
  bool open(bool array) {
    positions.emplace(path(), *consumed_);
    stack_.push_back({array, 0, {}});
    return true;
  }
  bool close() {
    stack_.pop_back();
    advance();
    return true;
  }

  const std::size_t* consumed_;
  std::vector<Frame> stack_;
};

// "line L, column C" of the value at a JSON pointer, or "" if not found.
inline std::string locate(std::string_view text, const std::string& pointer) {
  std::size_t consumed = 0;
  PositionRecorder rec(&consumed);
  CountingIterator first{text.data(), &consumed}, last{text.data() + text.size(), &consumed};
  json::sax_parse(first, last, &rec);
  auto it = rec.positions.find(pointer == "/" ? "" : pointer);
  if (it == rec.positions.end()) return "";
  // the lexer has read one character past the token
  auto [line, col] = line_col(text, it->second == 0 ? 0 : it->second - 1);
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline mpz_class json_integer(const json& v, const std::string& where) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) == 0) return z;
  }
  throw parse_error(where + ": expected an integer");
}

}  // namespace detail

/// Parsed instance file. Matrix entries stay as JSON until a ring is chosen.
struct Instance {
  std::string ring = "Z";
  json matrix;
  json torsion_at_empty = json::array();
  std::string name;
  std::size_t rows = 0, cols = 0;

  RingKind ring_kind() const { return parse_ring_kind(ring); }
  bool has_empty_torsion() const { return !torsion_at_empty.empty(); }

  template <SupportedRing R>
  static QuadInt<R> entry(const json& v, const std::string& where) {
    try {
      if (v.is_number_integer()) return QuadInt<R>(mpz_class(std::to_string(v.get<long long>())));
      if (v.is_array() && v.size() == 2)
        return QuadInt<R>(detail::json_integer(v[0], where), detail::json_integer(v[1], where));
      if (v.is_string()) return parse_element<R>(v.get<std::string>());
    } catch (const invalid_input& e) {
      if (e.what()[0] == '/') throw;
      throw parse_error(where + ": " + e.what());
    }
    throw parse_error(where + ": expected an integer, a pair [a, b] or a string");
  }

  template <SupportedRing R>
  Matrix<R> matrix_over() const {
    Matrix<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = entry<R>(matrix[i][j], "/matrix/" + std::to_string(i) + "/" + std::to_string(j));
    return m;
  }

  template <SupportedRing R>
  std::vector<QuadInt<R>> torsion_over() const {
    std::vector<QuadInt<R>> t;
    for (std::size_t j = 0; j < torsion_at_empty.size(); ++j)
      t.push_back(entry<R>(torsion_at_empty[j], "/torsion_at_empty/" + std::to_string(j)));
    return t;
  }

  template <SupportedRing R>
  RealizedMatroid<R> matroid(std::size_t max_ground = default_max_ground) const {
    auto m = matrix_over<R>();
    if (torsion_at_empty.empty()) return realize(m, max_ground);
    auto t = torsion_over<R>();
    return realize_with_torsion(m, std::span<const QuadInt<R>>(t), max_ground);
  }
};

inline Instance parse_instance_unlocated(std::string_view text);

/// Parses an instance document. Every error message starts with the line and
/// column it refers to.
inline Instance parse_instance(std::string_view text) {
  try {
    return parse_instance_unlocated(text);
  } catch (const parse_error& e) {
    std::string msg = e.what();
    if (msg.empty() || msg.front() != '/') throw;
    auto colon = msg.find(": ");
    std::string where = detail::locate(text, msg.substr(0, colon));
    throw parse_error((where.empty() ? "" : where + ": ") + msg);
  }
}

inline Instance parse_instance_unlocated(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw parse_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!doc.is_object()) throw parse_error("/: instance must be a JSON object");
  Instance inst;
  if (doc.contains("ring")) {
    if (!doc["ring"].is_string()) throw parse_error("/ring: expected a string");
    inst.ring = doc["ring"].get<std::string>();
  }
  try {
    parse_ring_kind(inst.ring);
  } catch (const invalid_input& e) {
    throw parse_error(std::string("/ring: ") + e.what());
  }
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw parse_error("/matrix: expected a list of rows");
  inst.matrix = doc["matrix"];
  inst.rows = inst.matrix.size();
  if (inst.rows == 0) throw parse_error("/matrix: needs at least one row");
  for (std::size_t i = 0; i < inst.rows; ++i) {
    if (!inst.matrix[i].is_array()) throw parse_error("/matrix/" + std::to_string(i) + ": expected a row list");
    if (i == 0) inst.cols = inst.matrix[i].size();
    if (inst.matrix[i].size() != inst.cols)
      throw parse_error("/matrix/" + std::to_string(i) + ": row has " + std::to_string(inst.matrix[i].size()) +
                        " entries, expected " + std::to_string(inst.cols));
  }
  if (doc.contains("torsion_at_empty")) {
    if (!doc["torsion_at_empty"].is_array()) throw parse_error("/torsion_at_empty: expected a list");
    inst.torsion_at_empty = doc["torsion_at_empty"];
  }
  if (doc.contains("name") && doc["name"].is_string()) inst.name = doc["name"].get<std::string>();
  // validate entries against the declared ring now, so errors surface at load time
  visit_ring(inst.ring_kind(), [&]<class R>(R) {
    (void)inst.matrix_over<R>();
    (void)inst.torsion_over<R>();
  });
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

// ---- polynomials ----

inline json to_json(const IntPoly2& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"y", m.y}, {"coeff", c.get_str()}});
  return terms;
}

inline IntPoly2 int_poly2_from_json(const json& j) {
  IntPoly2 p;
  for (const auto& t : j) p.add_term({t.at("x").get<unsigned>(), t.at("y").get<unsigned>()}, detail::json_integer(t.at("coeff"), "coeff"));
  return p;
}

inline json to_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& k : p.coeffs()) c.push_back(k.get_str());
  return c;
}

inline IntPoly int_poly_from_json(const json& j) {
  std::vector<mpz_class> c;
  for (const auto& k : j) c.push_back(detail::json_integer(k, "coefficient"));
  return IntPoly(std::move(c));
}

template <SupportedRing R>
json to_json(const ModuleClass<R>& c) {
  json t = json::array();
  for (const auto& d : c.torsion_chain) t.push_back(d.to_string());
  return {{"free_rank", c.free_rank}, {"torsion", t}};
}

template <SupportedRing R>
ModuleClass<R> module_class_from_json(const json& j) {
  ModuleClass<R> c;
  c.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& d : j.at("torsion")) c.torsion_chain.push_back(parse_element<R>(d.get<std::string>()));
  return c;
}

template <SupportedRing R>
json to_json(const GrothElement<R>& e) {
  json out = json::array();
  for (const auto& [c, k] : e.terms()) out.push_back({{"class", to_json(c)}, {"coeff", k.get_str()}});
  return out;
}

template <SupportedRing R>
GrothElement<R> groth_from_json(const json& j) {
  GrothElement<R> e;
  for (const auto& t : j) e.add(module_class_from_json<R>(t.at("class")), detail::json_integer(t.at("coeff"), "coeff"));
  return e;
}

template <SupportedRing R>
json to_json(const GTPoly<R>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"y", m.y}, {"coeff", to_json(c)}});
  return terms;
}

template <SupportedRing R>
GTPoly<R> gt_poly_from_json(const json& j) {
  GTPoly<R> p;
  for (const auto& t : j) p.add_term({t.at("x").get<unsigned>(), t.at("y").get<unsigned>()}, groth_from_json<R>(t.at("coeff")));
  return p;
}

inline json to_json(const HilbertSeries& h) {
  return {{"numerator", to_json(h.numerator())}, {"denominator_exponent", h.denominator_exponent()}, {"text", h.to_string()}};
}

inline HilbertSeries hilbert_from_json(const json& j) {
  return HilbertSeries(int_poly_from_json(j.at("numerator")), j.at("denominator_exponent").get<unsigned>());
}

// ---- posets ----

template <SupportedRing R>
json to_json(const TorsionPoset<R>& p) {
  json nodes = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& n = p.node(i);
    json set = json::array(), dual = json::array();
    for (auto e : subset_elements(n.set)) set.push_back(p.labels()[e]);
    for (const auto& h : n.dual) dual.push_back(h.to_string());
    nodes.push_back({{"id", i}, {"set", set}, {"dual", dual}, {"rank", n.rank()}, {"label", p.label(i)}});
  }
  json covers = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return {{"ring", std::string(R::name)}, {"labels", p.labels()}, {"nodes", nodes}, {"covers", covers}};
}

template <SupportedRing R>
TorsionPoset<R> poset_from_json(const json& j) {
  auto labels = j.at("labels").get<std::vector<std::size_t>>();
  std::vector<PosetNode<R>> nodes;
  for (const auto& n : j.at("nodes")) {
    PosetNode<R> node;
    for (auto l : n.at("set")) {
      auto it = std::find(labels.begin(), labels.end(), l.get<std::size_t>());
      if (it == labels.end()) throw parse_error("poset node refers to an unknown element");
      node.set = with(node.set, static_cast<std::size_t>(it - labels.begin()));
    }
    for (const auto& h : n.at("dual")) node.dual.push_back(parse_element<R>(h.get<std::string>()));
    nodes.push_back(std::move(node));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
  return TorsionPoset<R>(std::move(nodes), std::move(covers), std::move(labels));
}

inline json to_json(const CheckReport& r) {
  return {{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"skipped", r.skipped}, {"lines", r.lines}};
}

}  // namespace gtpoly
