#include "cmreg/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cmreg {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void perr(int line, int col, const std::string& msg) {
  fail(ErrorCode::parse, "line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + msg);
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// One source line with its comment stripped and position retained.
struct Line {
  int number = 0;
  std::string text;    // comment-stripped, right-trimmed
  bool indented = false;
};

std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string raw = text.substr(
        pos, nl == std::string::npos ? std::string::npos : nl - pos);
    ++number;
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
      raw.pop_back();
    if (!raw.empty()) {
      Line ln;
      ln.number = number;
      ln.text = raw;
      ln.indented = std::isspace(static_cast<unsigned char>(raw.front())) != 0;
      out.push_back(std::move(ln));
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

// --- polynomial expression scanner ---

struct Token {
  enum Kind { integer, ident, plus, minus, star, caret, slash, end } kind;
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& s, int line) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      toks.push_back({Token::integer, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      toks.push_back({Token::ident, s.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '+': toks.push_back({Token::plus, "+", col}); break;
      case '-': toks.push_back({Token::minus, "-", col}); break;
      case '*': toks.push_back({Token::star, "*", col}); break;
      case '^': toks.push_back({Token::caret, "^", col}); break;
      case '/': toks.push_back({Token::slash, "/", col}); break;
      default:
        perr(line, col, std::string("unexpected character '") + c + "'");
    }
    ++i;
  }
  toks.push_back({Token::end, "", static_cast<int>(s.size()) + 1});
  return toks;
}

struct RawTerm {
  mpq_class coeff;
  Monomial mono;
  long degree = 0;
  int col = 0;          // where the term started
  std::string text;     // source slice, for error messages
};

class ExprParser {
public:
  ExprParser(const std::string& src, int line, const RingPtr& ring)
      : src_(src), line_(line), ring_(ring), toks_(tokenize(src, line)) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    bool negative = false;
    if (at(Token::plus)) {
      next();
    } else if (at(Token::minus)) {
      negative = true;
      next();
    }
    terms.push_back(term(negative));
    while (!at(Token::end)) {
      if (at(Token::plus)) {
        next();
        terms.push_back(term(false));
      } else if (at(Token::minus)) {
        next();
        terms.push_back(term(true));
      } else {
        perr(line_, cur().col, "expected '+' or '-' between terms");
      }
    }
    return terms;
  }

private:
  const Token& cur() const { return toks_[pos_]; }
  bool at(Token::Kind k) const { return cur().kind == k; }
  void next() { ++pos_; }

  mpz_class integer(const char* what) {
    if (!at(Token::integer)) perr(line_, cur().col, std::string("expected ") + what);
    mpz_class v(cur().text);
    next();
    return v;
  }

  int var_index(const Token& t) {
    for (int i = 0; i < ring_->nvars; ++i)
      if (ring_->var_names[i] == t.text) return i;
    perr(line_, t.col, "unknown variable '" + t.text + "'");
  }

  // factor := ident ['^' integer]
  void factor(Monomial& m, long& deg) {
    Token t = cur();
    int idx = var_index(t);
    next();
    unsigned long e = 1;
    if (at(Token::caret)) {
      next();
      mpz_class v = integer("an exponent after '^'");
      if (v < 0 || !v.fits_ulong_p() || v.get_ui() > 1000000)
        perr(line_, t.col, "exponent out of range");
      e = v.get_ui();
    }
    m.set(idx, std::uint64_t(m[idx]) + e);
    deg += static_cast<long>(e);
  }

  RawTerm term(bool negative) {
    RawTerm rt;
    rt.col = cur().col;
    std::size_t start = pos_;
    mpq_class c(1);
    bool have_coeff = false;
    if (at(Token::integer)) {
      mpz_class num = integer("a coefficient");
      mpz_class den = 1;
      if (at(Token::slash)) {
        next();
        den = integer("a denominator after '/'");
        if (den == 0) perr(line_, cur().col, "zero denominator");
      }
      c = mpq_class(num) / mpq_class(den);
      have_coeff = true;
    }
    Monomial m(ring_->nvars);
    long deg = 0;
    if (have_coeff && at(Token::star)) {
      next();
      if (!at(Token::ident))
        perr(line_, cur().col, "expected a variable after '*'");
    }
    if (at(Token::ident)) {
      factor(m, deg);
      while (at(Token::star)) {
        next();
        if (!at(Token::ident))
          perr(line_, cur().col, "expected a variable after '*'");
        factor(m, deg);
      }
    } else if (!have_coeff) {
      perr(line_, cur().col, "expected a term");
    }
    if (at(Token::ident) || at(Token::integer))
      perr(line_, cur().col, "missing '*' between factors");
    rt.coeff = negative ? mpq_class(-c) : c;
    rt.mono = m;
    rt.degree = deg;
    int from = toks_[start].col - 1;
    int to = cur().col - 1;
    rt.text = src_.substr(from, std::max(0, to - from));
    while (!rt.text.empty() &&
           std::isspace(static_cast<unsigned char>(rt.text.back())))
      rt.text.pop_back();
    return rt;
  }

  const std::string& src_;
  int line_;
  const RingPtr& ring_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Polynomial parse_generator(const std::string& src, int line,
                           const RingPtr& ring) {
  ExprParser p(src, line, ring);
  std::vector<RawTerm> raw = p.parse();
  for (const RawTerm& t : raw)
    if (t.degree != raw.front().degree)
      perr(line, t.col,
           "non-homogeneous generator: term '" + t.text + "' has degree " +
               std::to_string(t.degree) + ", expected " +
               std::to_string(raw.front().degree));
  std::vector<Term> terms;
  terms.reserve(raw.size());
  for (RawTerm& t : raw) terms.push_back({std::move(t.mono), std::move(t.coeff)});
  return Polynomial::make(ring, std::move(terms));
}

// "key: rest" split for a top-level line; returns false if no colon.
bool key_value(const std::string& s, std::string& key, std::string& rest,
               int& rest_col) {
  std::size_t colon = s.find(':');
  if (colon == std::string::npos) return false;
  key = s.substr(0, colon);
  while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back())))
    key.pop_back();
  std::size_t i = colon + 1;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  rest = s.substr(i);
  rest_col = static_cast<int>(i) + 1;
  return true;
}

std::string lstrip(const std::string& s, int& col) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  col = static_cast<int>(i) + 1;
  return s.substr(i);
}

ordered_json mpz_str(const mpz_class& v) { return v.get_str(); }

ordered_json snapshot_json(const InvariantSnapshot& v) {
  ordered_json inv;
  inv["n"] = v.n;
  inv["d"] = v.d;
  inv["c"] = v.c;
  inv["delta"] = v.delta;
  inv["deltas"] = v.deltas;
  inv["pi"] = mpz_str(v.pi);
  inv["sigma"] = v.sigma;
  inv["e"] = mpz_str(v.e);
  ordered_json elist = ordered_json::array();
  for (const auto& x : v.e_list) elist.push_back(mpz_str(x));
  inv["e_list"] = elist;
  inv["adeg"] = v.adeg ? ordered_json(mpz_str(*v.adeg)) : ordered_json(nullptr);
  inv["adeg_source"] = v.adeg_source;
  inv["adeg_exact"] = v.adeg_exact;
  inv["reg"] = v.reg_ideal;
  inv["reg_quotient"] = v.reg_quotient;
  inv["reg_confidence"] = v.reg_confidence;
  inv["depth"] = v.depth;
  inv["B_colength"] =
      v.colength ? ordered_json(mpz_str(*v.colength)) : ordered_json(nullptr);
  inv["gotzmann_c"] = v.gotzmann_c;
  inv["gotzmann_s"] = v.gotzmann_s;
  ordered_json blist = ordered_json::array();
  for (const auto& x : v.b_list) blist.push_back(mpz_str(x));
  inv["B_list"] = blist;
  inv["postulation"] = v.postulation;
  inv["monomial"] = v.monomial;
  inv["squarefree"] = v.squarefree;
  inv["borel_type"] = v.borel_type;
  inv["strongly_stable"] = v.strongly_stable;
  inv["reduced_known"] = v.reduced_known;
  inv["prime_known"] = v.prime_known;
  return inv;
}

InvariantSnapshot snapshot_from_json(const ordered_json& inv) {
  InvariantSnapshot v;
  v.n = inv.at("n").get<int>();
  v.d = inv.at("d").get<int>();
  v.c = inv.at("c").get<int>();
  v.delta = inv.at("delta").get<long>();
  v.deltas = inv.at("deltas").get<std::vector<long>>();
  v.pi = mpz_class(inv.at("pi").get<std::string>());
  v.sigma = inv.at("sigma").get<long>();
  v.e = mpz_class(inv.at("e").get<std::string>());
  for (const auto& x : inv.at("e_list"))
    v.e_list.emplace_back(x.get<std::string>());
  if (!inv.at("adeg").is_null())
    v.adeg = mpz_class(inv.at("adeg").get<std::string>());
  v.adeg_source = inv.at("adeg_source").get<std::string>();
  v.adeg_exact = inv.at("adeg_exact").get<bool>();
  v.reg_ideal = inv.at("reg").get<long>();
  v.reg_quotient = inv.at("reg_quotient").get<long>();
  v.reg_confidence = inv.at("reg_confidence").get<std::string>();
  v.depth = inv.at("depth").get<int>();
  if (!inv.at("B_colength").is_null())
    v.colength = mpz_class(inv.at("B_colength").get<std::string>());
  v.gotzmann_c = inv.at("gotzmann_c").get<std::vector<long>>();
  v.gotzmann_s = inv.at("gotzmann_s").get<long>();
  for (const auto& x : inv.at("B_list"))
    v.b_list.emplace_back(x.get<std::string>());
  v.postulation = inv.at("postulation").get<long>();
  v.monomial = inv.at("monomial").get<bool>();
  v.squarefree = inv.at("squarefree").get<bool>();
  v.borel_type = inv.at("borel_type").get<bool>();
  v.strongly_stable = inv.at("strongly_stable").get<bool>();
  v.reduced_known = inv.at("reduced_known").get<bool>();
  v.prime_known = inv.at("prime_known").get<bool>();
  return v;
}

}  // namespace

const std::vector<std::string>& expect_keys() {
  static const std::vector<std::string> keys = {
      "adeg", "codim", "delta", "depth", "dim",         "e",
      "e_1",  "reg",   "regq",  "s",     "postulation",
  };
  return keys;
}

IdealFile parse_ideal_file(const std::string& text, bool strict) {
  IdealFile f;
  std::vector<Line> lines = split_lines(text);

  Field field = Field::rationals();
  bool have_ring = false;
  std::vector<std::string> names;
  std::vector<std::pair<Line, std::string>> gen_lines;   // line, expression
  std::vector<std::pair<Line, std::string>> expect_lines;
  enum class Block { none, gens, expect } block = Block::none;

  for (const Line& ln : lines) {
    if (ln.indented) {
      int col = 0;
      std::string body = lstrip(ln.text, col);
      if (block == Block::gens)
        gen_lines.push_back({ln, body});
      else if (block == Block::expect)
        expect_lines.push_back({ln, body});
      else
        perr(ln.number, col, "indented line outside gens:/expect: block");
      continue;
    }
    block = Block::none;
    std::string key, rest;
    int rest_col = 0;
    if (!key_value(ln.text, key, rest, rest_col))
      perr(ln.number, 1, "expected 'key: value'");
    if (key == "ring") {
      if (rest == "Q") {
        field = Field::rationals();
      } else if (rest.rfind("GF(", 0) == 0 && rest.back() == ')') {
        std::string inner = rest.substr(3, rest.size() - 4);
        if (inner.empty() ||
            inner.find_first_not_of("0123456789") != std::string::npos)
          perr(ln.number, rest_col, "expected GF(<prime>)");
        mpz_class p(inner);
        if (!p.fits_ulong_p() || p.get_ui() >= (1ull << 31))
          perr(ln.number, rest_col, "characteristic out of range");
        try {
          field = Field::prime(static_cast<std::uint32_t>(p.get_ui()));
        } catch (const Error& e) {
          perr(ln.number, rest_col, e.what());
        }
      } else {
        perr(ln.number, rest_col, "expected Q or GF(<prime>)");
      }
      have_ring = true;
    } else if (key == "vars") {
      std::istringstream is(rest);
      std::string name;
      while (is >> name) {
        if (!ident_start(name.front()) ||
            !std::all_of(name.begin(), name.end(), ident_char))
          perr(ln.number, rest_col, "bad variable name '" + name + "'");
        if (std::find(names.begin(), names.end(), name) != names.end())
          perr(ln.number, rest_col, "duplicate variable '" + name + "'");
        names.push_back(name);
      }
      if (names.empty()) perr(ln.number, rest_col, "no variables declared");
    } else if (key == "order") {
      try {
        f.order = TermOrder::parse(rest);
      } catch (const Error& e) {
        perr(ln.number, rest_col, e.what());
      }
      f.order_given = true;
    } else if (key == "gens") {
      if (!rest.empty())
        perr(ln.number, rest_col, "generators go on indented lines");
      block = Block::gens;
    } else if (key == "expect") {
      if (!rest.empty())
        perr(ln.number, rest_col, "expectations go on indented lines");
      block = Block::expect;
    } else {
      perr(ln.number, 1, "unknown key '" + key + "'");
    }
  }

  if (!have_ring) fail(ErrorCode::parse, "missing ring: declaration");
  if (names.empty()) fail(ErrorCode::parse, "missing vars: declaration");
  if (gen_lines.empty()) fail(ErrorCode::parse, "missing gens: block");
  f.ring = make_ring(static_cast<int>(names.size()), field, names);

  for (auto& [ln, body] : gen_lines)
    f.gens.push_back(parse_generator(body, ln.number, f.ring));

  for (auto& [ln, body] : expect_lines) {
    std::string key, rest;
    int rest_col = 0;
    if (!key_value(body, key, rest, rest_col) || rest.empty())
      perr(ln.number, 1, "expected '<name>: <integer>'");
    const auto& keys = expect_keys();
    bool known = std::find(keys.begin(), keys.end(), key) != keys.end();
    if (!known) {
      if (strict)
        perr(ln.number, 1, "unknown expectation key '" + key + "'");
      continue;
    }
    std::size_t digits_from = rest[0] == '-' ? 1 : 0;
    if (rest.size() == digits_from ||
        rest.find_first_not_of("0123456789", digits_from) != std::string::npos)
      perr(ln.number, rest_col, "expected an integer value");
    f.expect[key] = mpz_class(rest);
  }
  return f;
}

IdealFile load_ideal_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  IdealFile f;
  try {
    f = parse_ideal_file(buf.str(), strict);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::parse) throw;
    fail(ErrorCode::parse, path + ": " + e.what());
  }
  f.id = std::filesystem::path(path).stem().string();
  return f;
}

std::string serialize_ideal(const IdealFile& f) {
  std::ostringstream os;
  os << "ring: " << f.ring->field.name() << "\n";
  os << "vars:";
  for (const auto& n : f.ring->var_names) os << " " << n;
  os << "\n";
  if (f.order_given) os << "order: " << f.order.name() << "\n";
  os << "gens:\n";
  for (const auto& g : f.gens) os << "  " << g.str() << "\n";
  if (!f.expect.empty()) {
    os << "expect:\n";
    for (const auto& [k, v] : f.expect)
      os << "  " << k << ": " << v.get_str() << "\n";
  }
  return os.str();
}

std::string report_json(const std::vector<BoundReport>& reports,
                        std::uint64_t seed, int trials,
                        const std::map<std::string, double>& timings) {
  ordered_json doc;
  doc["version"] = "1";
  doc["seeds"]["seed"] = std::to_string(seed);
  doc["seeds"]["trials"] = trials;
  ordered_json ideals = ordered_json::array();
  for (const BoundReport& r : reports) {
    ordered_json item;
    item["id"] = r.id;
    item["invariants"] = snapshot_json(r.invariants);
    ordered_json bounds = ordered_json::array();
    for (const BoundCheck& c : r.checks) {
      ordered_json b;
      b["name"] = c.name;
      b["relation"] = c.relation;
      b["hypotheses_met"] = c.hypotheses_met;
      b["note"] = c.note;
      b["bound"] = mpz_str(c.bound);
      b["actual"] = mpz_str(c.actual);
      b["satisfied"] = c.satisfied;
      b["slack"] = mpz_str(c.slack);
      bounds.push_back(std::move(b));
    }
    item["bounds"] = std::move(bounds);
    item["errors"] = r.errors;
    item["violation"] = r.violation;
    ideals.push_back(std::move(item));
  }
  doc["ideals"] = std::move(ideals);
  if (!timings.empty()) {
    ordered_json tj;
    for (const auto& [k, v] : timings) tj[k] = v;
    doc["timings"] = std::move(tj);
  }
  return doc.dump(2) + "\n";
}

ReportDocument report_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::parse, std::string("bad report JSON: ") + e.what());
  }
  ReportDocument out;
  try {
    out.version = doc.at("version").get<std::string>();
    out.seed = std::stoull(doc.at("seeds").at("seed").get<std::string>());
    out.trials = doc.at("seeds").at("trials").get<int>();
    for (const auto& item : doc.at("ideals")) {
      BoundReport r;
      r.id = item.at("id").get<std::string>();
      r.invariants = snapshot_from_json(item.at("invariants"));
      for (const auto& b : item.at("bounds")) {
        BoundCheck c;
        c.name = b.at("name").get<std::string>();
        c.relation = b.at("relation").get<std::string>();
        c.hypotheses_met = b.at("hypotheses_met").get<bool>();
        c.note = b.at("note").get<std::string>();
        c.bound = mpz_class(b.at("bound").get<std::string>());
        c.actual = mpz_class(b.at("actual").get<std::string>());
        c.satisfied = b.at("satisfied").get<bool>();
        c.slack = mpz_class(b.at("slack").get<std::string>());
        r.checks.push_back(std::move(c));
      }
      r.errors = item.at("errors").get<std::vector<std::string>>();
      r.violation = item.at("violation").get<bool>();
      out.reports.push_back(std::move(r));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::parse, std::string("bad report JSON: ") + e.what());
  }
  return out;
}

}  // namespace cmreg
