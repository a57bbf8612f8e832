#include "lgfan/problem.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lgfan {

Mode parse_mode(const std::string& s) {
  if (s == "global-fan") return Mode::global_fan;
  if (s == "local-fan") return Mode::local_fan;
  if (s == "normal-fan") return Mode::normal_fan;
  if (s == "compare-initials") return Mode::compare_initials;
  if (s == "check-fan") return Mode::check_fan;
  throw std::invalid_argument("unknown mode '" + s + "'");
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::global_fan: return "global-fan";
    case Mode::local_fan: return "local-fan";
    case Mode::normal_fan: return "normal-fan";
    case Mode::compare_initials: return "compare-initials";
    case Mode::check_fan: return "check-fan";
  }
  return "?";
}

HomChoice parse_homogenization(const std::string& s) {
  HomChoice h;
  if (s == "auto") return h;
  if (s == "h01") {
    h.mode = HomMode::h01;
  } else if (s == "h11") {
    h.mode = HomMode::h11;
  } else if (s == "double") {
    h.mode = HomMode::doubleH;
  } else if (s.rfind("alpha", 0) == 0) {
    h.mode = HomMode::alpha;
    std::string rest = s.substr(5);
    if (rest.empty()) return h;
    if (rest[0] != ':') throw std::invalid_argument("expected alpha:a1,a2,...");
    std::size_t pos = 1;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 6)
        throw std::invalid_argument("alpha weights must be positive integers");
      int a = std::stoi(item);
      if (a <= 0) throw std::invalid_argument("alpha weights must be positive integers");
      h.alpha.push_back(a);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    throw std::invalid_argument("unknown homogenization '" + s + "'");
  }
  return h;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), line, col, i});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::number, s.substr(i, j - i), line, col, i});
      advance(j - i);
    } else if (std::string("()[],;:+-*/^").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Tok::punct, std::string(1, static_cast<char>(c)), line, col, i});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
  }
  out.push_back({Tok::end, "", line, col, s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text) : text_(text), toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(const std::string& p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool at_end() const { return peek().kind == Tok::end; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  void expect(const std::string& p) {
    if (!at(p)) fail("expected '" + p + "'" + (at_end() ? " before end of input" : ", found '" + peek().text + "'"));
    take();
  }
  std::string ident() {
    if (peek().kind != Tok::ident) fail("expected a name");
    return take().text;
  }
  int integer() {
    if (peek().kind != Tok::number) fail("expected a non-negative integer");
    const Token& t = take();
    if (t.text.size() > 6) fail("integer too large", t);
    return std::stoi(t.text);
  }

  // [-] p [/ q]
  Scalar scalar() {
    bool neg = false;
    if (at("-")) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::number) fail("expected a number");
    Scalar v(take().text);
    if (at("/")) {
      take();
      if (peek().kind != Tok::number) fail("expected an integer denominator");
      const Token& t = take();
      mpz_class d(t.text);
      if (d == 0) fail("zero denominator", t);
      v /= Scalar(d);
    }
    v.canonicalize();
    return neg ? Scalar(-v) : v;
  }

  QVec vector() {
    expect("[");
    QVec v;
    if (!at("]")) {
      v.push_back(scalar());
      while (at(",")) {
        take();
        v.push_back(scalar());
      }
    }
    expect("]");
    return v;
  }

  std::vector<QVec> matrix() {
    expect("[");
    std::vector<QVec> m;
    if (!at("]")) {
      m.push_back(vector());
      while (at(",")) {
        take();
        m.push_back(vector());
      }
    }
    expect("]");
    return m;
  }

  // Raw text of the remaining statement up to ';', whitespace removed.
  std::string raw_until_semicolon() {
    std::size_t start = peek().offset;
    while (!at(";")) {
      if (at_end()) fail("expected ';'");
      take();
    }
    std::string raw = text_.substr(start, peek().offset - start);
    std::string out;
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
  }

  // Expressions over a ring.
  WeylElement expr(const Ring& r) {
    WeylElement acc(r);
    bool neg = false;
    if (at("+") || at("-")) neg = take().text == "-";
    WeylElement t = term(r);
    acc += neg ? -t : t;
    while (at("+") || at("-")) {
      bool minus = take().text == "-";
      WeylElement u = term(r);
      if (minus)
        acc -= u;
      else
        acc += u;
    }
    return acc;
  }

 private:
  bool starts_factor() const {
    return peek().kind == Tok::number || peek().kind == Tok::ident || at("(");
  }

  WeylElement term(const Ring& r) {
    WeylElement acc = factor(r);
    while (true) {
      if (at("*")) {
        take();
        acc = multiply(acc, factor(r));
      } else if (starts_factor()) {
        acc = multiply(acc, factor(r));
      } else {
        return acc;
      }
    }
  }

  WeylElement factor(const Ring& r) {
    WeylElement base = primary(r);
    if (at("^")) {
      take();
      if (peek().kind != Tok::number) fail("exponent must be a non-negative integer");
      base = power(base, static_cast<unsigned>(integer()));
    }
    return base;
  }

  WeylElement primary(const Ring& r) {
    if (peek().kind == Tok::number) {
      Scalar v(take().text);
      if (at("/")) {
        take();
        if (peek().kind != Tok::number) fail("'/' must be followed by an integer");
        const Token& t = take();
        mpz_class d(t.text);
        if (d == 0) fail("zero denominator", t);
        v /= Scalar(d);
        v.canonicalize();
      }
      return WeylElement::constant(r, v);
    }
    if (peek().kind == Tok::ident) {
      const Token& t = take();
      int slot = resolve(*r, t.text);
      if (slot < 0) fail("unknown variable '" + t.text + "'", t);
      return WeylElement::variable(r, slot);
    }
    if (at("(")) {
      take();
      WeylElement e = expr(r);
      expect(")");
      return e;
    }
    fail(at_end() ? "unexpected end of input" : "unexpected '" + peek().text + "'");
  }

  static int resolve(const RingSignature& sig, const std::string& name) {
    // slot_name supplies x1, x2, .. for rings built without names
    for (int i = 0; i < sig.n; ++i)
      if (sig.slot_name(i) == name) return i;
    if (sig.weyl() && name.size() > 1 && name[0] == 'd') {
      for (int i = 0; i < sig.n; ++i)
        if (sig.slot_name(i) == name.substr(1)) return sig.n + i;
    }
    if (sig.has_h() && name == "h") return sig.h_slot();
    if (sig.has_hprime() && name == "hp") return sig.hprime_slot();
    return -1;
  }

  const std::string& text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  ProblemSpec spec;
  spec.source = text;
  Parser p(text);
  std::set<std::string> seen;
  bool have_ideal = false;
  while (!p.at_end()) {
    const Token kw = p.peek();
    std::string key = p.ident();
    if (seen.count(key)) p.fail("duplicate '" + key + "' statement", kw);
    seen.insert(key);
    if (key == "ring") {
      const Token kt = p.peek();
      std::string kind = p.ident();
      if (kind != "poly" && kind != "weyl") p.fail("ring kind must be poly or weyl", kt);
      p.expect("(");
      std::vector<std::string> names;
      std::set<std::string> uniq;
      do {
        if (!names.empty()) p.take();
        const Token nt = p.peek();
        std::string n = p.ident();
        if (!uniq.insert(n).second) p.fail("duplicate variable '" + n + "'", nt);
        if (n == "h" || n == "hp") p.fail("'" + n + "' is reserved for homogenization", nt);
        names.push_back(n);
      } while (p.at(","));
      p.expect(")");
      int n = static_cast<int>(names.size());
      spec.ring = make_ring(n, kind == "poly" ? RingKind::commutative : RingKind::weyl, Homogenization::none,
                            names);
      p.expect(";");
      continue;
    }
    p.expect(":");
    if (key == "ideal") {
      if (!spec.ring) p.fail("'ideal' needs a preceding 'ring' statement", kw);
      do {
        if (have_ideal) p.take();
        have_ideal = true;
        const Token gt = p.peek();
        WeylElement g = p.expr(spec.ring);
        if (g.is_zero()) p.fail("generator is zero", gt);
        spec.generators.push_back(std::move(g));
      } while (p.at(","));
    } else if (key == "subspace") {
      if (p.peek().kind == Tok::ident) {
        const Token rt = p.peek();
        if (p.ident() != "rows") p.fail("expected 'rows'", rt);
      }
      const Token mt = p.peek();
      spec.subspace = p.matrix();
      if (spec.subspace.empty()) p.fail("subspace needs at least one row", mt);
    } else if (key == "base_point") {
      spec.base_point = p.vector();
    } else if (key == "weights") {
      spec.weights.push_back(p.vector());
      while (p.at(",")) {
        p.take();
        spec.weights.push_back(p.vector());
      }
    } else if (key == "mode" || key == "region" || key == "homogenization") {
      const Token vt = p.peek();
      std::string v = p.raw_until_semicolon();
      try {
        if (key == "mode")
          spec.mode = parse_mode(v);
        else if (key == "region")
          spec.region = parse_region(v);
        else
          spec.homogenization = parse_homogenization(v);
      } catch (const std::invalid_argument& e) {
        p.fail(e.what(), vt);
      }
    } else {
      p.fail("unknown statement '" + key + "'", kw);
    }
    p.expect(";");
  }
  const Token& end = p.peek();
  if (!spec.ring) throw ParseError("missing 'ring' statement", end.line, end.col);
  if (!have_ideal) throw ParseError("missing 'ideal' statement", end.line, end.col);
  const int dim = spec.ring->weight_dim();
  for (auto& row : spec.subspace)
    if (static_cast<int>(row.size()) != dim)
      throw ParseError("subspace rows must have " + std::to_string(dim) + " entries", end.line, end.col);
  for (auto& w : spec.weights)
    if (static_cast<int>(w.size()) != dim)
      throw ParseError("weights must have " + std::to_string(dim) + " entries", end.line, end.col);
  if (spec.base_point && static_cast<int>(spec.base_point->size()) != spec.ring->n)
    throw ParseError("base point must have " + std::to_string(spec.ring->n) + " coordinates", end.line, end.col);
  return spec;
}

WeylElement parse_polynomial(const Ring& ring, const std::string& text) {
  Parser p(text);
  WeylElement e = p.expr(ring);
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
  return e;
}

QVec parse_vector(const std::string& text) {
  Parser p(text);
  QVec v = p.vector();
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
  return v;
}

std::vector<QVec> parse_matrix(const std::string& text) {
  Parser p(text);
  if (p.peek().kind == Tok::ident && p.peek().text == "rows") p.take();
  std::vector<QVec> m = p.matrix();
  if (!p.at_end()) p.fail("unexpected '" + p.peek().text + "'");
  return m;
}

// ---------------------------------------------------------------------------

Region default_region(const ProblemSpec& spec) {
  const bool weyl = spec.ring->weyl();
  switch (spec.mode) {
    case Mode::global_fan: return weyl ? Region::wglob : Region::uloc;
    default: return weyl ? Region::wloc : Region::uloc;
  }
}

namespace {

Ideal h01_generators(const Ideal& d) {
  std::vector<WeylElement> gens;
  for (auto& g : d.generators) gens.push_back(homogenize(g, Homogenization::h01));
  return Ideal(with_homogenization(d.ring, Homogenization::h01), std::move(gens));
}

Ideal global_route(const Ideal& I, const HomChoice& h) {
  if (!I.ring->weyl()) {
    if (h.mode != HomMode::automatic && h.mode != HomMode::alpha)
      throw std::invalid_argument("polynomial ideals use the alpha homogenization");
    return homogenize_ideal(I, Homogenization::alphaH, h.alpha);
  }
  switch (h.mode) {
    case HomMode::automatic:
    case HomMode::h11: return homogenize_ideal(I, Homogenization::h11);
    case HomMode::h01:
    case HomMode::doubleH: return homogenize_ideal(h01_generators(I), Homogenization::doubleH);
    case HomMode::alpha: break;
  }
  throw std::invalid_argument("the alpha homogenization applies to polynomial ideals only");
}

Ideal local_route(const Ideal& I, const HomChoice& h) {
  if (!I.ring->weyl()) {
    if (h.mode != HomMode::automatic && h.mode != HomMode::alpha)
      throw std::invalid_argument("polynomial ideals use the alpha homogenization");
    return homogenize_ideal(I, Homogenization::alphaH, h.alpha);
  }
  switch (h.mode) {
    case HomMode::automatic: return local_homogenization(I);
    case HomMode::h01:
    case HomMode::doubleH: return homogenize_ideal(h01_generators(I), Homogenization::doubleH);
    case HomMode::h11: throw std::invalid_argument("local fans of differential ideals use the h' route");
    case HomMode::alpha: break;
  }
  throw std::invalid_argument("the alpha homogenization applies to polynomial ideals only");
}

std::vector<std::string> strings_of(const std::vector<WeylElement>& v) {
  std::vector<std::string> out;
  for (auto& g : v) out.push_back(g.to_string());
  return out;
}

void normal_fan(const Ideal& I, const WeightSubspace& s, const RunOptions& opt, FanDocument& doc) {
  if (I.generators.size() != 1) throw std::invalid_argument("normal-fan expects exactly one generator");
  const WeylElement& g = I.generators.front();
  const RingSignature& sig = *g.ring();
  RationalPolyhedron p = newton_polyhedron(g, sig.weyl() ? Recession::wloc_star : Recession::orthant);
  std::vector<HCone> maximal;
  for (auto& e : p.points()) {
    std::vector<QVec> ineqs = s.region.facets();
    for (auto& a : p.points()) {
      if (a == e) continue;
      QVec d(a.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = e[i] - a[i];
      ineqs.push_back(s.pull_back(d));
    }
    for (auto& r : p.recession_generators()) {
      QVec m(r);
      for (auto& x : m) x = -x;
      ineqs.push_back(s.pull_back(m));
    }
    HCone c(s.param_dim(), ineqs, s.region.equations());
    if (c.dim() == s.region.dim()) maximal.push_back(std::move(c));
  }
  Fan fan = closure_fan(maximal);
  set_fan(doc, fan);
  int cls = 0;
  for (auto& r : doc.cones) {
    if (!r.maximal) continue;
    r.class_id = cls++;
    r.members = 1;
    r.initial_ideal = {initial_form(g, s.to_ambient(r.witness)).to_string()};
  }
  if (opt.validate) doc.validation = validate_fan(fan);
}

}  // namespace

FanDocument run(const ProblemSpec& spec, const RunOptions& opt) {
  if (spec.mode == Mode::check_fan) throw std::invalid_argument("check-fan takes a fan document, not a problem");
  Ideal I(spec.ring, spec.generators);
  if (spec.base_point) I = translate_base_point(I, *spec.base_point);
  const Region region = spec.region.value_or(default_region(spec));
  WeightSubspace s = make_subspace(*spec.ring, region, spec.subspace);

  FanDocument doc;
  doc.mode = mode_name(spec.mode);
  doc.region = region_name(region);
  doc.ambient_dim = s.ambient;
  doc.parameter_dim = s.param_dim();
  doc.subspace = s.columns;
  doc.input_sha256 = sha256_hex(spec.source);

  switch (spec.mode) {
    case Mode::normal_fan: normal_fan(I, s, opt, doc); break;
    case Mode::compare_initials: {
      if (spec.weights.size() != 2) throw std::invalid_argument("compare-initials needs exactly two weights");
      LocalContext ctx(local_route(I, spec.homogenization));
      doc.equal = ctx.initials_equal(spec.weights[0], spec.weights[1]);
      break;
    }
    case Mode::global_fan: {
      Ideal J = global_route(I, spec.homogenization);
      Enumeration e = enumerate(J, s, {opt.threads, 0});
      std::vector<HCone> cones;
      std::map<std::string, const GroebnerCone*> by_key;
      for (auto& c : e.cones) {
        cones.push_back(c.cone);
        by_key[c.cone.key()] = &c;
      }
      Fan fan = closure_fan(cones);
      set_fan(doc, fan);
      int cls = 0;
      for (std::size_t i = 0; i < fan.cones.size(); ++i) {
        ConeRecord& r = doc.cones[i];
        if (!r.maximal) continue;
        auto it = by_key.find(fan.cones[i].key());
        if (it == by_key.end()) throw std::logic_error("maximal cone without a Groebner basis");
        r.class_id = cls++;
        r.members = 1;
        r.initial_ideal = strings_of(initial_ideal(it->second->basis, s.to_ambient(r.witness)));
      }
      if (opt.validate) doc.validation = validate_fan(fan);
      break;
    }
    case Mode::local_fan: {
      if (region != Region::uloc && region != Region::wloc)
        throw std::invalid_argument("local fans live in the uloc or wloc region");
      Ideal J = local_route(I, spec.homogenization);
      Enumeration e = enumerate(J, s, {opt.threads, 0});
      LocalContext ctx(J);
      std::vector<LocalFanClass> classes = merge_classes(e.cones, s, ctx, opt.threads);
      LocalFan lf = assemble_local_fan(std::move(classes), s, &ctx);
      set_fan(doc, lf.fan);
      for (std::size_t i = 0; i < lf.fan.cones.size(); ++i) {
        ConeRecord& r = doc.cones[i];
        if (!r.maximal) continue;
        for (std::size_t k = 0; k < lf.classes.size(); ++k) {
          if (lf.classes[k].hull != lf.fan.cones[i]) continue;
          r.class_id = static_cast<int>(k);
          r.members = static_cast<int>(lf.classes[k].members.size());
        }
        Weight w = s.to_ambient(r.witness);
        LocalBasis b = ctx.basis(w);
        for (auto& g : b.elements) r.initial_ideal.push_back(initial_form(g, w).to_string());
      }
      doc.validation = lf.report;
      break;
    }
    case Mode::check_fan: break;
  }
  return doc;
}

FanReport check_document(const FanDocument& doc) {
  Fan fan = document_fan(doc);
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const HCone& c = fan.cones[i];
    const ConeRecord& r = doc.cones[i];
    if (c.facets() != r.facets || c.equations() != r.equations || c.dim() != r.dim)
      return {false, 1, "cone " + std::to_string(r.id) + " is not in canonical form"};
  }
  return validate_fan(fan);
}

}  // namespace lgfan
