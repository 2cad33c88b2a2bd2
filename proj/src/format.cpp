#include "tperm/format.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace tperm {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

// Hand-rolled cursor: the grammars are tiny and need exact error positions.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  // Whitespace may separate tokens: words stay contiguous, punctuation
  // ("k=", "@") splits them.
  bool try_literal(std::string_view lit) {
    const std::size_t start = pos_;
    bool prev_word = false;
    for (char ch : lit) {
      const bool word = std::isalnum(static_cast<unsigned char>(ch)) != 0;
      if (!(word && prev_word)) skip_ws();
      if (pos_ == text_.size() || text_[pos_] != ch) {
        pos_ = start;
        return false;
      }
      ++pos_;
      prev_word = word;
    }
    return true;
  }

  void expect(std::string_view lit) {
    if (!try_literal(lit)) fail("expected '" + std::string(lit) + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Int integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    // from_chars does not take a leading '+'; we do not either.
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  int period() {
    const Int k = integer();
    if (k < 0 || k > std::numeric_limits<int>::max()) fail("period out of range");
    return static_cast<int>(k);
  }

  std::vector<Int> int_list() {
    expect("[");
    std::vector<Int> out;
    if (try_literal("]")) return out;
    do {
      out.push_back(integer());
    } while (try_literal(","));
    expect("]");
    return out;
  }

  void finish() {
    if (!at_end()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Int json_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("JSON field '") + key + "' missing or not an integer");
  }
  return j[key].get<Int>();
}

std::vector<Int> json_ints(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("JSON field '") + key + "' missing or not an array");
  }
  std::vector<Int> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw ParseError(std::string("non-integer in '") + key + "'");
    out.push_back(v.get<Int>());
  }
  return out;
}

}  // namespace

std::string format_perm(const Perm& p) {
  const int k = p.period();
  const std::string at = "@" + std::to_string(k);
  if (p == iota(p.shift(), k)) {
    return p.shift() == 0 ? "id" + at : "iota" + std::to_string(p.shift()) + at;
  }
  if (p.shift() == 0 && inv_count(p) == 1) {
    const Int m = descents_right(p).front();
    if (p == sigma(m, k)) return "s" + std::to_string(m) + at;
  }
  if (p.is_affine()) return "affine k=" + std::to_string(k) + " w=" + join(p.window());
  return "fin chi=" + std::to_string(p.shift()) + " lo=" + std::to_string(p.window_begin()) +
         " v=" + join(p.window());
}

Perm parse_perm(std::string_view text) {
  Cursor c(text);
  Perm p;
  if (c.try_literal("affine")) {
    c.expect("k=");
    const int k = c.period();
    c.expect("w=");
    auto w = c.int_list();
    c.finish();
    p = make_affine(k, std::move(w));
  } else if (c.try_literal("fin")) {
    c.expect("chi=");
    const Int chi = c.integer();
    c.expect("lo=");
    const Int lo = c.integer();
    c.expect("v=");
    auto v = c.int_list();
    c.finish();
    p = make_finitary(chi, lo, std::move(v));
  } else if (c.try_literal("iota")) {
    const Int n = c.integer();
    c.expect("@");
    const int k = c.period();
    c.finish();
    p = iota(n, k);
  } else if (c.try_literal("id")) {
    c.expect("@");
    const int k = c.period();
    c.finish();
    p = identity(k);
  } else if (c.try_literal("s")) {
    const Int m = c.integer();
    c.expect("@");
    const int k = c.period();
    c.finish();
    p = sigma(m, k);
  } else {
    c.fail("expected a permutation (affine, fin, id@, iota, s)");
  }
  return p;
}

nlohmann::json perm_to_json(const Perm& p) {
  if (p.is_affine()) return {{"period", p.period()}, {"window", p.window()}};
  return {{"period", 0}, {"chi", p.shift()}, {"lo", p.window_begin()}, {"vals", p.window()}};
}

Perm perm_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("JSON permutation must be an object");
  const Int k = json_int(j, "period");
  if (k != 0) {
    if (k < 0 || k > std::numeric_limits<int>::max()) throw ParseError("period out of range");
    return make_affine(static_cast<int>(k), json_ints(j, "window"));
  }
  return make_finitary(json_int(j, "chi"), json_int(j, "lo"), json_ints(j, "vals"));
}

Perm parse_perm_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(e.what());
    }
    return perm_from_json(j);
  }
  return parse_perm(text);
}

std::string format_word(const Word& w) {
  std::string s = "word k=" + std::to_string(w.period) + " [";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ",";
    s += w.letters[i] ? std::to_string(*w.letters[i]) : "_";
  }
  return s + "]";
}

Word parse_word(std::string_view text) {
  Cursor c(text);
  c.expect("word");
  c.expect("k=");
  Word w;
  w.period = c.period();
  check_period(w.period);
  c.expect("[");
  if (!c.try_literal("]")) {
    do {
      if (c.try_literal("_")) {
        w.letters.emplace_back(std::nullopt);
        w.flavor = WordFlavor::Hecke;
        continue;
      }
      const Int m = c.integer();
      if (w.period >= 2 && (m < 0 || m >= w.period)) c.fail("letter is not a residue mod k");
      w.letters.emplace_back(m);
    } while (c.try_literal(","));
    c.expect("]");
  }
  c.finish();
  return w;
}

std::string format_splitting(const SplittingType& e) {
  return "split k=" + std::to_string(e.k()) + " e=" + join(e.entries());
}

SplittingType parse_splitting(std::string_view text) {
  Cursor c(text);
  c.expect("split");
  c.expect("k=");
  const int k = c.period();
  c.expect("e=");
  auto e = c.int_list();
  c.finish();
  if (static_cast<Int>(e.size()) != k) c.fail("e has " + std::to_string(e.size()) + " entries");
  return SplittingType(std::move(e));
}

std::string format_chain(const ChainSpec& ch) {
  std::string s = "chain k=" + std::to_string(ch.k) + " [";
  for (std::size_t i = 0; i < ch.components.size(); ++i) {
    if (i) s += ", ";
    const auto& b = ch.components[i];
    s += "d=" + std::to_string(b.degree) + ":";
    s += b.torsion ? "T " + std::to_string(*b.torsion) : "G";
  }
  return s + "]";
}

ChainSpec parse_chain(std::string_view text) {
  Cursor c(text);
  c.expect("chain");
  c.expect("k=");
  const int k = c.period();
  check_period(k);
  c.expect("[");
  std::vector<G1Bundle> comps;
  if (!c.try_literal("]")) {
    do {
      c.expect("d=");
      const Int d = c.integer();
      c.expect(":");
      if (c.try_literal("G")) {
        comps.push_back(generic_bundle(k, d));
      } else {
        c.expect("T");
        comps.push_back(torsion_bundle(k, d, c.integer()));
      }
    } while (c.try_literal(","));
    c.expect("]");
  }
  c.finish();
  return make_chain(k, std::move(comps));
}

}  // namespace tperm
