#include "coisored/cli/session.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "coisored/arith/parse.hpp"
#include "coisored/reduction/reduction.hpp"

namespace coisored {

SessionError::SessionError(const std::string& source, int line, int column, const std::string& msg)
    : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

// ---- Session storage ----

std::size_t Session::count(const std::string& kind) const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.kind == kind;
  return n;
}

std::string Session::last(const std::string& kind) const {
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    if (it->kind == kind) return it->name;
  }
  throw InputError("the session declares no " + kind);
}

bool Session::has(const std::string& name) const { return kinds_.count(name) > 0; }

std::string Session::kind_of(const std::string& name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) throw InputError("unknown name '" + name + "'");
  return it->second;
}

const std::string& Session::require(const std::string& name, const std::string& kind) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end()) throw InputError("unknown name '" + name + "'");
  if (it->second != kind) {
    throw InputError("'" + name + "' is a " + it->second + ", expected a " + kind);
  }
  return it->first;
}

const PresentedAlgebra& Session::ring(const std::string& name) const {
  return rings_.at(require(name, "ring"));
}
const Ideal& Session::ideal(const std::string& name) const {
  return ideals_.at(require(name, "ideal"));
}
const PoissonStructure& Session::poisson(const std::string& name) const {
  return poissons_.at(require(name, "poisson"));
}
const AlgebraMorphism& Session::morphism(const std::string& name) const {
  return morphisms_.at(require(name, "morphism"));
}
const AffineGroupoid& Session::groupoid(const std::string& name) const {
  return groupoids_.at(require(name, "groupoid"));
}
const Subgroupoid& Session::subgroupoid(const std::string& name) const {
  return subgroupoids_.at(require(name, "subgroupoid"));
}
const SessionAction& Session::action(const std::string& name) const {
  return actions_.at(require(name, "action"));
}

void Session::declare(const std::string& kind, const std::string& name, int line) {
  if (kinds_.count(name)) throw InputError("'" + name + "' is already declared");
  kinds_.emplace(name, kind);
  entries_.push_back(Entry{kind, name, line});
}

void Session::add_ring(const std::string& name, PresentedAlgebra a, int line) {
  declare("ring", name, line);
  rings_.emplace(name, std::move(a));
}
void Session::add_ideal(const std::string& name, Ideal i, int line) {
  declare("ideal", name, line);
  ideals_.emplace(name, std::move(i));
}
void Session::add_poisson(const std::string& name, PoissonStructure p, int line) {
  declare("poisson", name, line);
  poissons_.emplace(name, std::move(p));
}
void Session::add_morphism(const std::string& name, AlgebraMorphism m, int line) {
  declare("morphism", name, line);
  morphisms_.emplace(name, std::move(m));
}
void Session::add_groupoid(const std::string& name, AffineGroupoid g, int line) {
  declare("groupoid", name, line);
  groupoids_.emplace(name, std::move(g));
}
void Session::add_subgroupoid(const std::string& name, Subgroupoid h, int line) {
  declare("subgroupoid", name, line);
  subgroupoids_.emplace(name, std::move(h));
}
void Session::add_action(const std::string& name, SessionAction a, int line) {
  declare("action", name, line);
  actions_.emplace(name, std::move(a));
}

// ---- Parsing ----

namespace {

struct Item {
  std::string text;
  int line = 0;
  int col = 0;
};

struct Field {
  std::string key;
  int line = 0;
  int col = 0;
  std::vector<Item> items;
};

struct Decl {
  std::string kind;
  std::string name;
  int line = 0;
  int col = 0;
  std::optional<std::string> ctor;
  std::vector<Item> args;
  std::vector<Field> fields;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trimmed [b, e) of `s`, returning the 0-based start.
std::pair<std::string, int> trim(const std::string& s, std::size_t b, std::size_t e) {
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {s.substr(b, e - b), static_cast<int>(b)};
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

// Splits `s[from..)` at commas. Returns true when the text ends with a comma,
// which continues the list on the next line.
bool split_items(const std::string& s, std::size_t from, int line, std::vector<Item>& out) {
  std::size_t start = from;
  bool comma = false;
  std::string last;
  for (std::size_t i = from; i <= s.size(); ++i) {
    if (i < s.size() && s[i] != ',') continue;
    auto [text, col] = trim(s, start, i);
    if (!text.empty()) out.push_back(Item{text, line, col + 1});
    last = text;
    if (i < s.size()) comma = true;
    start = i + 1;
  }
  return comma && last.empty();
}

class Parser {
 public:
  Parser(const std::string& text, std::string source) : source_(std::move(source)) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines_.push_back(strip_comment(line));
  }

  std::vector<Decl> declarations() {
    std::vector<Decl> out;
    while (next_ < lines_.size()) {
      const int lineno = static_cast<int>(next_) + 1;
      const std::string& raw = lines_[next_++];
      auto [text, col0] = trim(raw, 0, raw.size());
      if (text.empty()) continue;
      out.push_back(header(raw, lineno));
    }
    return out;
  }

  [[noreturn]] void fail(int line, int col, const std::string& msg) const {
    throw SessionError(source_, line, col, msg);
  }

  const std::string& source() const { return source_; }

 private:
  Decl header(const std::string& raw, int lineno) {
    std::size_t i = 0;
    auto word = [&](const char* what) {
      while (i < raw.size() && is_space(raw[i])) ++i;
      std::size_t b = i;
      while (i < raw.size() && (std::isalnum(static_cast<unsigned char>(raw[i])) || raw[i] == '_')) ++i;
      if (b == i) fail(lineno, static_cast<int>(b) + 1, std::string("expected ") + what);
      return std::make_pair(raw.substr(b, i - b), static_cast<int>(b) + 1);
    };
    Decl d;
    auto [kind, kcol] = word("a declaration kind");
    static const std::set<std::string> kinds = {"ring",     "ideal",       "poisson", "morphism",
                                                "groupoid", "subgroupoid", "action"};
    if (!kinds.count(kind)) fail(lineno, kcol, "unknown declaration kind '" + kind + "'");
    auto [name, ncol] = word("a name");
    if (!is_identifier(name)) fail(lineno, ncol, "invalid name '" + name + "'");
    d.kind = kind;
    d.name = name;
    d.line = lineno;
    d.col = ncol;
    while (i < raw.size() && is_space(raw[i])) ++i;
    if (i < raw.size() && raw[i] == '{') {
      auto [rest, rcol] = trim(raw, i + 1, raw.size());
      if (!rest.empty()) fail(lineno, rcol + 1, "expected a line break after '{'");
      body(d);
      return d;
    }
    if (i < raw.size() && raw[i] == '=') {
      ++i;
      std::size_t open = raw.find('(', i);
      std::size_t close = raw.rfind(')');
      if (open == std::string::npos || close == std::string::npos || close < open) {
        fail(lineno, static_cast<int>(i) + 1, "expected constructor(arguments)");
      }
      auto [ctor, ccol] = trim(raw, i, open);
      if (!is_identifier(ctor)) fail(lineno, ccol + 1, "invalid constructor name '" + ctor + "'");
      auto [tail, tcol] = trim(raw, close + 1, raw.size());
      if (!tail.empty()) fail(lineno, tcol + 1, "unexpected text after ')'");
      d.ctor = ctor;
      std::string inner = raw.substr(0, close);
      split_items(inner, open + 1, lineno, d.args);
      return d;
    }
    fail(lineno, static_cast<int>(i) + 1, "expected '{' or '='");
  }

  void body(Decl& d) {
    Field* open_field = nullptr;
    while (next_ < lines_.size()) {
      const int lineno = static_cast<int>(next_) + 1;
      const std::string& raw = lines_[next_++];
      auto [text, col0] = trim(raw, 0, raw.size());
      if (text.empty()) continue;
      if (open_field) {
        if (!split_items(raw, 0, lineno, open_field->items)) open_field = nullptr;
        continue;
      }
      if (text == "}") return;
      std::size_t eq = raw.find('=');
      if (text[0] == '{') {
        std::size_t close = raw.find('}');
        if (close == std::string::npos) fail(lineno, col0 + 1, "unterminated bracket '{'");
        eq = raw.find('=', close);
      }
      if (eq == std::string::npos) fail(lineno, col0 + 1, "expected 'key = value'");
      auto [key, kcol] = trim(raw, 0, eq);
      if (key.empty()) fail(lineno, col0 + 1, "missing key before '='");
      d.fields.push_back(Field{key, lineno, kcol + 1, {}});
      if (split_items(raw, eq + 1, lineno, d.fields.back().items)) open_field = &d.fields.back();
    }
    fail(d.line, d.col, "block '" + d.name + "' is not closed with '}'");
  }

  std::string source_;
  std::vector<std::string> lines_;
  std::size_t next_ = 0;
};

class Builder {
 public:
  Builder(Parser& parser, Session& session) : p_(parser), s_(session) {}

  void build(const Decl& d) {
    try {
      build_unchecked(d);
    } catch (const SessionError&) {
      throw;
    } catch (const InputError& e) {
      p_.fail(d.line, d.col, e.what());
    }
  }

 private:
  const Field* field(const Decl& d, const std::string& key) const {
    for (const auto& f : d.fields) {
      if (f.key == key) return &f;
    }
    return nullptr;
  }

  const Field& required(const Decl& d, const std::string& key) const {
    if (const Field* f = field(d, key)) return *f;
    p_.fail(d.line, d.col, d.kind + " '" + d.name + "' needs '" + key + " = ...'");
  }

  void allow_keys(const Decl& d, const std::set<std::string>& keys, bool brackets = false) const {
    std::set<std::string> seen;
    for (const auto& f : d.fields) {
      if (brackets && f.key[0] == '{') continue;
      if (!keys.count(f.key)) p_.fail(f.line, f.col, "unknown key '" + f.key + "' in " + d.kind);
      if (!seen.insert(f.key).second) p_.fail(f.line, f.col, "duplicate key '" + f.key + "'");
    }
  }

  std::string single(const Field& f) const {
    if (f.items.size() != 1) p_.fail(f.line, f.col, "'" + f.key + "' takes exactly one value");
    return f.items[0].text;
  }

  template <typename F>
  decltype(auto) at(const Item& item, F&& body) {
    try {
      return body();
    } catch (const SessionError&) {
      throw;
    } catch (const PolynomialSyntaxError& e) {
      p_.fail(item.line, item.col + static_cast<int>(e.column()) - 1, e.what());
    } catch (const InputError& e) {
      p_.fail(item.line, item.col, e.what());
    }
  }

  Polynomial poly(const Item& item, const RingPtr& ring) {
    return at(item, [&] { return parse_polynomial(item.text, ring); });
  }

  std::vector<Polynomial> polys(const Field* f, const RingPtr& ring) {
    std::vector<Polynomial> out;
    if (!f) return out;
    for (const auto& item : f->items) out.push_back(poly(item, ring));
    return out;
  }

  template <typename Get>
  decltype(auto) named(const Item& item, Get&& get) {
    return at(item, [&]() -> decltype(auto) { return get(item.text); });
  }

  // A declared ring, or G.base / G.total of a declared groupoid G.
  const PresentedAlgebra& ring_named(const Item& item) {
    return named(item, [&](const std::string& n) -> const PresentedAlgebra& {
      auto dot = n.find('.');
      if (dot == std::string::npos) return s_.ring(n);
      const AffineGroupoid& g = s_.groupoid(n.substr(0, dot));
      std::string part = n.substr(dot + 1);
      if (part == "base") return g.base;
      if (part == "total") return g.total;
      throw InputError("expected '" + n.substr(0, dot) + ".base' or '" + n.substr(0, dot) + ".total'");
    });
  }

  const PresentedAlgebra& ring_ref(const Field& f) {
    return ring_named(Item{single(f), f.items[0].line, f.items[0].col});
  }

  // "x -> poly" entries over source variables; an unlisted variable x maps to the
  // target variable prefix+x when there is one.
  std::vector<Polynomial> map_images(const Field* f, const PresentedAlgebra& source,
                                     const RingPtr& target, const Decl& d, const std::string& key,
                                     const std::string& prefix = "") {
    std::map<std::string, Polynomial> given;
    if (f) {
      for (const auto& item : f->items) {
        auto arrow = item.text.find("->");
        if (arrow == std::string::npos) p_.fail(item.line, item.col, "expected 'variable -> polynomial'");
        auto [var, vcol] = trim(item.text, 0, arrow);
        if (!source.ring()->index(var)) {
          p_.fail(item.line, item.col, "'" + var + "' is not a variable of '" + source.label() + "'");
        }
        auto [rhs, rcol] = trim(item.text, arrow + 2, item.text.size());
        Item value{rhs, item.line, item.col + rcol};
        if (!given.emplace(var, poly(value, target)).second) {
          p_.fail(item.line, item.col, "duplicate image for '" + var + "'");
        }
      }
    }
    std::vector<Polynomial> out;
    for (const auto& v : source.variables()) {
      auto it = given.find(v);
      if (it != given.end()) {
        out.push_back(it->second);
      } else if (target->index(prefix + v)) {
        out.push_back(Polynomial::variable(target, prefix + v));
      } else {
        const int line = f ? f->line : d.line;
        const int col = f ? f->col : d.col;
        p_.fail(line, col, "'" + key + "' has no image for '" + v + "'");
      }
    }
    return out;
  }

  void expect_args(const Decl& d, std::size_t lo, std::size_t hi) const {
    if (d.args.size() < lo || d.args.size() > hi) {
      p_.fail(d.line, d.col, "constructor " + *d.ctor + " takes " + std::to_string(lo) +
                                 (hi != lo ? " to " + std::to_string(hi) : "") + " argument(s)");
    }
    if (!d.fields.empty()) p_.fail(d.line, d.col, "unexpected fields");
  }

  [[noreturn]] void unknown_ctor(const Decl& d) const {
    p_.fail(d.line, d.col, "unknown " + d.kind + " constructor '" + *d.ctor + "'");
  }

  void build_unchecked(const Decl& d) {
    if (d.kind == "ring") return build_ring(d);
    if (d.kind == "ideal") return build_ideal(d);
    if (d.kind == "poisson") return build_poisson(d);
    if (d.kind == "morphism") return build_morphism(d);
    if (d.kind == "groupoid") return build_groupoid(d);
    if (d.kind == "subgroupoid") return build_subgroupoid(d);
    return build_action(d);
  }

  void build_ring(const Decl& d) {
    if (d.ctor) p_.fail(d.line, d.col, "rings are declared with a block");
    allow_keys(d, {"vars", "relations"});
    const Field& vars = required(d, "vars");
    std::vector<std::string> names;
    for (const auto& item : vars.items) {
      if (!is_identifier(item.text)) p_.fail(item.line, item.col, "invalid variable name '" + item.text + "'");
      names.push_back(item.text);
    }
    RingPtr ring = at(vars.items.empty() ? Item{"", vars.line, vars.col} : vars.items[0],
                      [&] { return make_ring(names); });
    std::vector<Polynomial> rels = polys(field(d, "relations"), ring);
    s_.add_ring(d.name, PresentedAlgebra(ring, rels, d.name), d.line);
  }

  void build_ideal(const Decl& d) {
    if (d.ctor) p_.fail(d.line, d.col, "ideals are declared with a block");
    allow_keys(d, {"ring", "generators"});
    const PresentedAlgebra& a = ring_ref(required(d, "ring"));
    s_.add_ideal(d.name, Ideal(a.ring(), polys(field(d, "generators"), a.ring())), d.line);
  }

  void build_poisson(const Decl& d) {
    if (d.ctor) {
      expect_args(d, 1, 1);
      const Item& arg = d.args[0];
      if (*d.ctor == "zero") {
        return s_.add_poisson(d.name, PoissonStructure::zero(ring_named(arg)), d.line);
      }
      if (*d.ctor == "negate") {
        const PoissonStructure& p = named(arg, [&](const std::string& n) -> const PoissonStructure& { return s_.poisson(n); });
        return s_.add_poisson(d.name, negate(p), d.line);
      }
      unknown_ctor(d);
    }
    allow_keys(d, {"ring"}, true);
    const PresentedAlgebra& a = ring_ref(required(d, "ring"));
    std::vector<std::tuple<std::string, std::string, Polynomial>> brackets;
    for (const auto& f : d.fields) {
      if (f.key[0] != '{') continue;
      auto close = f.key.find('}');
      auto comma = f.key.find(',');
      if (close != f.key.size() - 1 || comma == std::string::npos) {
        p_.fail(f.line, f.col, "expected '{x, y} = polynomial'");
      }
      std::string x = trim(f.key, 1, comma).first;
      std::string y = trim(f.key, comma + 1, close).first;
      for (const auto& v : {x, y}) {
        if (!a.ring()->index(v)) p_.fail(f.line, f.col, "'" + v + "' is not a variable of '" + a.label() + "'");
      }
      brackets.emplace_back(x, y, poly(Item{single(f), f.items[0].line, f.items[0].col}, a.ring()));
    }
    s_.add_poisson(d.name, PoissonStructure::from_brackets(a, brackets), d.line);
  }

  void build_morphism(const Decl& d) {
    if (d.ctor) p_.fail(d.line, d.col, "morphisms are declared with a block");
    allow_keys(d, {"source", "target", "map"});
    const PresentedAlgebra& src = ring_ref(required(d, "source"));
    const PresentedAlgebra& tgt = ring_ref(required(d, "target"));
    s_.add_morphism(d.name, AlgebraMorphism(src, tgt, map_images(field(d, "map"), src, tgt.ring(), d, "map")),
                    d.line);
  }

  const AffineGroupoid& groupoid_arg(const Item& item) {
    return named(item, [&](const std::string& n) -> const AffineGroupoid& { return s_.groupoid(n); });
  }

  void build_groupoid(const Decl& d) {
    if (d.ctor) {
      const std::string& c = *d.ctor;
      if (c == "pair") {
        // pair(P) or pair(X, P): the Poisson structure carries its algebra.
        expect_args(d, 1, 2);
        const Item& pa = d.args.back();
        const PoissonStructure& p = named(pa, [&](const std::string& n) -> const PoissonStructure& { return s_.poisson(n); });
        const PresentedAlgebra& x = d.args.size() == 2 ? ring_named(d.args[0]) : p.algebra();
        AffineGroupoid g = at(d.args[0], [&] { return pair_groupoid(x, p); });
        g.label = d.name;
        return s_.add_groupoid(d.name, std::move(g), d.line);
      }
      if (c == "cotangent_torus") {
        expect_args(d, 1, 1);
        int n = at(d.args[0], [&] {
          std::size_t used = 0;
          int v = 0;
          try {
            v = std::stoi(d.args[0].text, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          if (used != d.args[0].text.size()) throw InputError("expected a positive integer");
          return v;
        });
        AffineGroupoid g = at(d.args[0], [&] { return cotangent_groupoid_torus(n); });
        g.label = d.name;
        return s_.add_groupoid(d.name, std::move(g), d.line);
      }
      if (c == "trivial") {
        expect_args(d, 0, 0);
        AffineGroupoid g = trivial_groupoid();
        g.label = d.name;
        return s_.add_groupoid(d.name, std::move(g), d.line);
      }
      if (c == "product") {
        expect_args(d, 2, 2);
        AffineGroupoid g = product_groupoid(groupoid_arg(d.args[0]), groupoid_arg(d.args[1]));
        g.label = d.name;
        return s_.add_groupoid(d.name, std::move(g), d.line);
      }
      if (c == "negate") {
        expect_args(d, 1, 1);
        AffineGroupoid g = negate(groupoid_arg(d.args[0]));
        g.label = d.name;
        return s_.add_groupoid(d.name, std::move(g), d.line);
      }
      unknown_ctor(d);
    }
    allow_keys(d, {"base", "total", "src", "tgt", "unit", "inv", "mult", "poisson", "base_poisson", "chart"});
    const PresentedAlgebra& base = ring_ref(required(d, "base"));
    const PresentedAlgebra& total = ring_ref(required(d, "total"));
    std::vector<std::string> pair_names;
    for (const auto& v : total.variables()) pair_names.push_back("L_" + v);
    for (const auto& v : total.variables()) pair_names.push_back("R_" + v);
    RingPtr pairs = make_ring(pair_names);
    auto src = map_images(&required(d, "src"), base, total.ring(), d, "src");
    auto tgt = map_images(&required(d, "tgt"), base, total.ring(), d, "tgt");
    auto unit = map_images(&required(d, "unit"), total, base.ring(), d, "unit");
    auto inv = map_images(&required(d, "inv"), total, total.ring(), d, "inv");
    auto mult = map_images(&required(d, "mult"), total, pairs, d, "mult");
    AffineGroupoid g = make_groupoid(d.name, base, total, src, tgt, unit, inv, mult);
    const Field* tp = field(d, "poisson");
    const Field* bp = field(d, "base_poisson");
    if (tp || bp) {
      if (!tp || !bp) p_.fail(d.line, d.col, "give both 'poisson' and 'base_poisson', or neither");
      Item ti{single(*tp), tp->items[0].line, tp->items[0].col};
      Item bi{single(*bp), bp->items[0].line, bp->items[0].col};
      const PoissonStructure& pt = named(ti, [&](const std::string& n) -> const PoissonStructure& { return s_.poisson(n); });
      const PoissonStructure& pb = named(bi, [&](const std::string& n) -> const PoissonStructure& { return s_.poisson(n); });
      std::vector<std::string> chart;
      if (const Field* cf = field(d, "chart")) {
        for (const auto& item : cf->items) chart.push_back(item.text);
      }
      g = with_symplectic(std::move(g), pt, pb, chart);
    }
    s_.add_groupoid(d.name, std::move(g), d.line);
  }

  void build_subgroupoid(const Decl& d) {
    if (d.ctor) {
      const std::string& c = *d.ctor;
      if (c == "diagonal" || c == "full") {
        expect_args(d, 1, 1);
        const AffineGroupoid& g = groupoid_arg(d.args[0]);
        Subgroupoid h = c == "diagonal" ? diagonal_stabilizer(g) : full_subgroupoid(g);
        h.label = d.name;
        return s_.add_subgroupoid(d.name, std::move(h), d.line);
      }
      if (c == "isotropy" || c == "unit") {
        expect_args(d, 2, c == "isotropy" ? 3 : 2);
        const AffineGroupoid& g = groupoid_arg(d.args[0]);
        const Ideal& i = named(d.args[1], [&](const std::string& n) -> const Ideal& { return s_.ideal(n); });
        if (!same_ring(i.ring(), g.base.ring())) {
          p_.fail(d.args[1].line, d.args[1].col, "ideal '" + d.args[1].text + "' is not over the base of '" + g.label + "'");
        }
        bool stabilizer = false;
        if (d.args.size() == 3) {
          if (d.args[2].text != "stabilizer") p_.fail(d.args[2].line, d.args[2].col, "expected 'stabilizer'");
          stabilizer = true;
        }
        Subgroupoid h = c == "isotropy" ? isotropy_subgroupoid(g, i.generators(), stabilizer)
                                        : unit_subgroupoid(g, i.generators());
        h.label = d.name;
        return s_.add_subgroupoid(d.name, std::move(h), d.line);
      }
      unknown_ctor(d);
    }
    allow_keys(d, {"groupoid", "total", "base", "stabilizer"});
    const Field& gf = required(d, "groupoid");
    const AffineGroupoid& g = groupoid_arg(Item{single(gf), gf.items[0].line, gf.items[0].col});
    bool stabilizer = false;
    if (const Field* sf = field(d, "stabilizer")) {
      std::string v = single(*sf);
      if (v != "yes" && v != "no") p_.fail(sf->items[0].line, sf->items[0].col, "expected 'yes' or 'no'");
      stabilizer = v == "yes";
    }
    Subgroupoid h{d.name, g, Ideal(g.total.ring(), polys(field(d, "total"), g.total.ring())),
                  Ideal(g.base.ring(), polys(field(d, "base"), g.base.ring())), stabilizer, "session"};
    s_.add_subgroupoid(d.name, std::move(h), d.line);
  }

  const SessionAction& action_arg(const Item& item) {
    return named(item, [&](const std::string& n) -> const SessionAction& { return s_.action(n); });
  }

  void build_action(const Decl& d) {
    if (d.ctor) {
      const std::string& c = *d.ctor;
      SessionAction out;
      if (c == "product") {
        expect_args(d, 2, 2);
        const SessionAction& a = action_arg(d.args[0]);
        const SessionAction& b = action_arg(d.args[1]);
        out.action = product_action(a.action, b.action);
        out.poisson = a.poisson;
      } else {
        expect_args(d, 1, 1);
        const AffineGroupoid& g = groupoid_arg(d.args[0]);
        if (c == "base") {
          out.action = base_action(g);
          if (g.symplectic) out.poisson = g.base_poisson();
        } else if (c == "left_mult" || c == "right_mult" || c == "bimodule") {
          out.action = c == "left_mult"    ? left_mult_action(g)
                       : c == "right_mult" ? right_mult_action(g)
                                           : unit_bimodule(g);
          if (c == "bimodule") out.bimodule_of = d.args[0].text;
          // Right multiplication is Hamiltonian for the negated groupoid, whose
          // total bracket is the negative of the module bracket.
          if (g.symplectic) {
            out.poisson = c == "right_mult" ? negate(g.total_poisson()) : g.total_poisson();
          }
        } else {
          unknown_ctor(d);
        }
      }
      out.action.label = d.name;
      return s_.add_action(d.name, std::move(out), d.line);
    }
    allow_keys(d, {"groupoid", "module", "moment", "act", "poisson"});
    const Field& gf = required(d, "groupoid");
    const AffineGroupoid& g = groupoid_arg(Item{single(gf), gf.items[0].line, gf.items[0].col});
    const PresentedAlgebra& module = ring_ref(required(d, "module"));
    std::vector<std::string> domain_names;
    for (const auto& v : g.total.variables()) domain_names.push_back("L_" + v);
    for (const auto& v : module.variables()) domain_names.push_back("R_" + v);
    RingPtr domain = at(Item{d.name, d.line, d.col}, [&] { return make_ring(domain_names); });
    auto moment = map_images(&required(d, "moment"), g.base, module.ring(), d, "moment");
    auto act = map_images(&required(d, "act"), module, domain, d, "act", "R_");
    SessionAction out{make_action(d.name, g, module, moment, act), std::nullopt, std::nullopt};
    if (const Field* pf = field(d, "poisson")) {
      Item pi{single(*pf), pf->items[0].line, pf->items[0].col};
      const PoissonStructure& p = named(pi, [&](const std::string& n) -> const PoissonStructure& { return s_.poisson(n); });
      if (!same_ring(p.algebra().ring(), module.ring())) {
        p_.fail(pi.line, pi.col, "Poisson structure '" + pi.text + "' is not over the module");
      }
      out.poisson = p.over(module);
    }
    s_.add_action(d.name, std::move(out), d.line);
  }

  Parser& p_;
  Session& s_;
};

}  // namespace

Session parse_session(const std::string& text, const std::string& source) {
  Parser parser(text, source);
  Session session;
  Builder builder(parser, session);
  for (const auto& d : parser.declarations()) builder.build(d);
  return session;
}

Session parse_session_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SessionError(path, 0, 0, "cannot read the session file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_session(text.str(), path);
}

}  // namespace coisored
