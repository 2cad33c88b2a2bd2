#include "tperm_check/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tperm/bntheory.hpp"
#include "tperm/curves.hpp"
#include "tperm/demazure.hpp"
#include "tperm/format.hpp"
#include "tperm/words.hpp"
#include "tperm_check/acceptance.hpp"

namespace tperm::cli {

namespace {

using nlohmann::json;

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

json count_json(const Count& c) {
  // Counts past 64 bits stay exact as strings.
  if (c <= std::numeric_limits<std::int64_t>::max()) return c.convert_to<std::int64_t>();
  return c.str();
}

// "a0:a1,b0:b1", inclusive.
Box parse_box(const std::string& text) {
  Int v[4];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  const char seps[] = {':', ',', ':', '\0'};
  for (int i = 0; i < 4; ++i) {
    const auto [next, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc()) throw ParseError("--box expects a0:a1,b0:b1, got '" + text + "'");
    p = next;
    if (seps[i] != '\0') {
      if (p == end || *p != seps[i]) throw ParseError("--box expects a0:a1,b0:b1, got '" + text + "'");
      ++p;
    }
  }
  if (p != end) throw ParseError("--box has trailing characters: '" + text + "'");
  if (v[0] > v[1] || v[2] > v[3]) throw ParseError("--box ranges are empty: '" + text + "'");
  return {v[0], v[1], v[2], v[3]};
}

std::pair<Int, Int> parse_range(const std::string& text) {
  Int lo = 0;
  Int hi = 0;
  const char* end = text.data() + text.size();
  auto r = std::from_chars(text.data(), end, lo);
  if (r.ec != std::errc() || r.ptr == end || *r.ptr != ':') throw ParseError("range expects lo:hi, got '" + text + "'");
  auto s = std::from_chars(r.ptr + 1, end, hi);
  if (s.ec != std::errc() || s.ptr != end || lo > hi) throw ParseError("range expects lo:hi, got '" + text + "'");
  return {lo, hi};
}

bool is_number(const std::string& s) {
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  return s.size() > start && std::all_of(s.begin() + start, s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Numeric cells right-aligned when align_numbers, everything else left-aligned.
std::string table_text(const std::vector<std::vector<std::string>>& rows, bool align_numbers = true) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      const std::string pad(width[i] - row[i].size(), ' ');
      line += align_numbers && i > 0 && is_number(row[i]) ? pad + row[i] : row[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

struct Options {
  bool json = false;
  std::size_t oracle_bound = kDefaultOracleBound;
  std::string box;
  bool count_only = false;
};

class Commands {
 public:
  Commands(CLI::App& app, std::ostream& out) : out_(out) {
    app.add_flag("--json", opt_.json, "Emit JSON instead of text");
    app.add_option("--oracle-bound", opt_.oracle_bound, "Candidate limit for brute-force oracles")
        ->check(CLI::PositiveNumber);
    app.add_option("--box", opt_.box, "Slipface table range a0:a1,b0:b1");
    app.add_flag("--count-only", opt_.count_only, "Print only the number of results");

    auto* show = add(app, "show", "Parse and print a permutation", [this] { return emit(perm(0)); });
    positional(show, 1);

    auto* inv = add(app, "inverse", "Inverse permutation", [this] { return emit(inverse(perm(0))); });
    positional(inv, 1);

    auto* comp = add(app, "compose", "Product a b ... (rightmost applied first)", [this] {
      return emit(product(perms()));
    });
    positional(comp, -1);

    auto* dem = add(app, "demazure", "Demazure product a * b * ...", [this] {
      auto ps = perms();
      if (!use_oracle_) return emit(demazure_fold(ps));
      Perm acc = ps.front();
      for (std::size_t i = 1; i < ps.size(); ++i) acc = demazure_by_max_oracle(acc, ps[i], opt_.oracle_bound);
      return emit(acc);
    });
    positional(dem, -1);
    dem->add_flag("--oracle", use_oracle_, "Use the Bruhat-maximum oracle");

    auto* slip = add(app, "slipface", "s(a, b) = #{n >= b : p(n) < a}, or a table", [this] { return slipface_cmd(); });
    positional(slip, 1);
    slip->add_option("a", a_, "Row argument");
    slip->add_option("b", b_, "Column argument");

    auto* inv_cmd = add(app, "inv", "Number of inversion classes", [this] {
      const Perm p = perm(0);
      if (!opt_.json) return line(std::to_string(inv_count(p)));
      json classes = json::array();
      for (const auto& c : inversion_classes(p)) classes.push_back({c.first, c.second});
      return line(json{{"inv", inv_count(p)}, {"classes", classes}}.dump());
    });
    positional(inv_cmd, 1);

    auto* ess = add(app, "ess", "Essential set", [this] {
      const auto cells = essential_set(perm(0));
      if (opt_.json) return line(json(cells).dump());
      std::string s = "{";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ", ";
        s += "(" + std::to_string(cells[i].first) + "," + std::to_string(cells[i].second) + ")";
      }
      return line(s + "}");
    });
    positional(ess, 1);

    auto* bru = add(app, "bruhat", "Is a <= b in Bruhat order", [this] {
      const bool leq = bruhat_leq(perm(0), perm(1));
      return line(opt_.json ? json(leq).dump() : leq ? "true" : "false");
    });
    positional(bru, 2);

    auto* rw = add(app, "reduced-words", "Reduced words of a shift-0 permutation", [this] {
      const Perm p = perm(0);
      if (opt_.count_only) return emit_count(reduced_word_count(p));
      ReducedWordStream stream(p);
      json all = json::array();
      while (auto w = stream.next()) {
        if (opt_.json) {
          json letters = json::array();
          for (const auto& l : w->letters) letters.push_back(*l);
          all.push_back(letters);
        } else {
          out_ << format_word(*w) << "\n";
        }
      }
      if (opt_.json) out_ << all.dump() << "\n";
      return 0;
    });
    positional(rw, 1);

    auto* hc = add(app, "hecke-count", "Length-g Hecke words with Demazure product p", [this] {
      return emit_count(hecke_word_count(perm(0), g_));
    });
    positional(hc, 1);
    hc->add_option("g", g_, "Word length")->required();

    auto* grd = add(app, "gamma-rd", "Brill-Noether permutation gamma^r_chi", [this] {
      return emit(gamma_rd(r_, chi_));
    });
    grd->add_option("r", r_)->required();
    grd->add_option("chi", chi_)->required();

    auto* gs = add(app, "gamma-split", "Splitting-type data u, x, d and gamma_e", [this] { return gamma_split_cmd(); });
    gs->add_option("split", text_, "split k=K e=[...]")->required();
    gs->add_option("--g", genus_, "Genus for d(e)");
    gs->add_option("--x-range", x_range_, "Range lo:hi for x_e")->default_val("-3:3");

    auto* so = add(app, "split-of", "Splitting type read off a permutation", [this] {
      const auto e = splitting_type_of(perm(0));
      return line(opt_.json ? json(e.entries()).dump() : format_splitting(e));
    });
    positional(so, 1);

    auto* ct = add(app, "chain-tau", "Transmission permutation of an elliptic chain", [this] {
      return emit(chain_tau(parse_chain(text_)));
    });
    ct->add_option("chain", text_, "chain k=K [d=..:G|T m, ...]")->required();

    auto* wp = add(app, "wtau-points", "Class assignments in W^tau on a chain with given degrees", [this] {
      return wtau_cmd();
    });
    positional(wp, 1);
    wp->add_option("degrees", degrees_, "Component degrees")->required();
    wp->add_option("--method", method_, "words or brute")
        ->check(CLI::IsMember({"words", "brute"}))
        ->default_val("words");
    wp->add_flag("--expand", expand_, "Expand Generic strata into points");

    auto* gr = add(app, "genus1-report", "k-general transmission check on genus 1", [this] {
      return report_cmd();
    });
    gr->add_option("k", curve_k_, "Torsion order of the curve (0: none)")->required();
    gr->add_option("bound", bound_, "Displacement bound")->required();
    gr->add_option("--test-k", test_k_, "Period to test against");

    auto* st = add(app, "selftest", "Run the acceptance suite", [this] { return selftest_cmd(); });
    st->add_flag("--skip-cli", skip_cli_, "Skip the CLI criterion (used when the CLI tests itself)");
    st->add_option("--only", only_, "Criteria to run");
  }

  int dispatch(CLI::App& app) {
    for (const auto& [name, fn] : handlers_) {
      if (app.got_subcommand(name)) return fn();
    }
    return 0;
  }

 private:
  CLI::App* add(CLI::App& app, const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    handlers_.emplace(name, std::move(fn));
    return sub;
  }

  // count 1 or 2 binds single slots so later positionals stay free;
  // -1 takes every remaining argument.
  void positional(CLI::App* sub, int count) {
    if (count < 0) {
      sub->add_option("perms", args_, "Permutations (text or JSON)")->required();
      return;
    }
    sub->add_option("p", slots_[0], "Permutation (text or JSON)")->required();
    if (count == 2) sub->add_option("q", slots_[1], "Permutation (text or JSON)")->required();
  }

  Perm perm(std::size_t i) const { return parse_perm_any(slots_.at(i)); }

  std::vector<Perm> perms() const {
    std::vector<Perm> out;
    for (const auto& a : args_) out.push_back(parse_perm_any(a));
    return out;
  }

  int line(const std::string& s) {
    out_ << s << "\n";
    return 0;
  }

  int emit(const Perm& p) { return line(opt_.json ? perm_to_json(p).dump() : format_perm(p)); }

  int emit_count(const Count& c) { return line(opt_.json ? json{{"count", count_json(c)}}.dump() : c.str()); }

  int slipface_cmd() {
    const Perm p = perm(0);
    if (a_ && b_) {
      const Int v = slipface(p, *a_, *b_);
      return line(opt_.json ? json{{"a", *a_}, {"b", *b_}, {"s", v}}.dump() : std::to_string(v));
    }
    if (a_ || b_) throw ParseError("slipface takes both a and b, or neither");
    const Box box = opt_.box.empty() ? default_box(p) : parse_box(opt_.box);
    if (opt_.json) {
      json rows = json::array();
      for (Int a = box.a_lo; a <= box.a_hi; ++a) {
        json row = json::array();
        for (Int b = box.b_lo; b <= box.b_hi; ++b) row.push_back(slipface(p, a, b));
        rows.push_back(row);
      }
      return line(json{{"a", {box.a_lo, box.a_hi}}, {"b", {box.b_lo, box.b_hi}}, {"s", rows}}.dump());
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"a\\b"};
    for (Int b = box.b_lo; b <= box.b_hi; ++b) header.push_back(std::to_string(b));
    rows.push_back(header);
    for (Int a = box.a_lo; a <= box.a_hi; ++a) {
      std::vector<std::string> row{std::to_string(a)};
      for (Int b = box.b_lo; b <= box.b_hi; ++b) row.push_back(std::to_string(slipface(p, a, b)));
      rows.push_back(std::move(row));
    }
    out_ << table_text(rows);
    return 0;
  }

  int gamma_split_cmd() {
    const SplittingType e = parse_splitting(text_);
    const Perm g = gamma_splitting(e);
    const auto [xlo, xhi] = parse_range(x_range_);
    if (opt_.json) {
      json x = json::object();
      for (Int m = xlo; m <= xhi; ++m) x[std::to_string(m)] = splitting_x(e, m);
      json j{{"split", format_splitting(e)}, {"gamma", format_perm(g)}, {"u", splitting_u(e)}, {"x", x}};
      if (genus_) j["d"] = splitting_d(e, *genus_);
      return line(j.dump());
    }
    std::vector<std::vector<std::string>> rows{{"split", format_splitting(e)},
                                               {"gamma", format_perm(g)},
                                               {"u", std::to_string(splitting_u(e))}};
    if (genus_) rows.push_back({"d (g=" + std::to_string(*genus_) + ")", std::to_string(splitting_d(e, *genus_))});
    out_ << table_text(rows, false);
    std::vector<std::vector<std::string>> x{{"m"}, {"x(m)"}};
    for (Int m = xlo; m <= xhi; ++m) {
      x[0].push_back(std::to_string(m));
      x[1].push_back(std::to_string(splitting_x(e, m)));
    }
    out_ << table_text(x);
    return 0;
  }

  int wtau_cmd() {
    const Perm tau = perm(0);
    const int k = tau.period();
    auto found = method_ == "brute" ? wtau_points_bruteforce(k, degrees_, tau) : wtau_points_via_words(k, degrees_, tau);
    if (expand_ && method_ == "words") found = expand_strata(found);
    if (opt_.count_only) return emit_count(found.size());
    if (opt_.json) {
      json all = json::array();
      for (const auto& c : found) all.push_back(format_chain(c));
      return line(all.dump());
    }
    for (const auto& c : found) out_ << format_chain(c) << "\n";
    return 0;
  }

  int report_cmd() {
    const auto r = genus1_generality_report(curve_k_, bound_, test_k_);
    if (opt_.json) {
      return line(json{{"curve_k", r.curve_k},
                       {"test_k", r.test_k},
                       {"bound", r.bound},
                       {"checked", r.checked},
                       {"full", r.full},
                       {"single", r.single},
                       {"empty", r.empty},
                       {"membership", r.membership},
                       {"failures", r.failures},
                       {"passed", r.passed()}}
                      .dump());
    }
    out_ << table_text({{"curve k", std::to_string(r.curve_k)},
                        {"test k", std::to_string(r.test_k)},
                        {"bound", std::to_string(r.bound)},
                        {"checked", std::to_string(r.checked)},
                        {"full stratum", std::to_string(r.full)},
                        {"single point", std::to_string(r.single)},
                        {"empty", std::to_string(r.empty)},
                        {"membership", r.membership ? "yes" : "no"},
                        {"status", r.passed() ? "PASS" : "FAIL"}},
                       false);
    for (const auto& f : r.failures) out_ << "  " << f << "\n";
    return 0;
  }

  int selftest_cmd() {
    std::vector<int> ids = only_;
    if (ids.empty()) {
      for (int id = 1; id <= check::kCriterionCount; ++id) ids.push_back(id);
    }
    bool ok = true;
    json all = json::array();
    for (int id : ids) {
      if (skip_cli_ && id == check::kCriterionCount) continue;
      const auto r = check::run_criterion(id);
      ok = ok && r.passed;
      if (opt_.json) {
        all.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                       {"seconds", r.seconds}, {"budget_seconds", r.budget_seconds}});
      } else {
        out_ << check::format_result(r) << "\n";
      }
    }
    if (opt_.json) out_ << all.dump() << "\n";
    return ok ? 0 : 1;
  }

  std::ostream& out_;
  Options opt_;
  std::map<std::string, std::function<int()>> handlers_;
  std::vector<std::string> args_;
  std::array<std::string, 2> slots_;
  std::string text_;
  std::optional<Int> a_;
  std::optional<Int> b_;
  Int g_ = 0;
  Int r_ = 0;
  Int chi_ = 0;
  std::optional<Int> genus_;
  std::string x_range_;
  std::vector<Int> degrees_;
  std::string method_;
  bool expand_ = false;
  bool use_oracle_ = false;
  int curve_k_ = 0;
  Int bound_ = 0;
  std::optional<int> test_k_;
  bool skip_cli_ = false;
  std::vector<int> only_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Transmission permutations: slipfaces, Demazure products, words and loci", "tperm");
  app.require_subcommand(1);
  Commands commands(app, out);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return commands.dispatch(app);
  } catch (const CLI::Success& e) {
    // --help and friends.
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ParseError: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << one_line(e.what()) << "\n";
    return 2;
  } catch (const Error& e) {
    err << one_line(e.what()) << "\n";
    return 3;
  }
}

}  // namespace tperm::cli
