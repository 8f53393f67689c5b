#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "qinj/qdl.hpp"

namespace qinj {

QdlError::QdlError(Kind kind, int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view to_string(QdlError::Kind kind) {
  switch (kind) {
    case QdlError::Kind::kSyntax: return "SyntaxError";
    case QdlError::Kind::kUndeclaredIdentifier: return "UndeclaredIdentifier";
    case QdlError::Kind::kDuplicateIdentifier: return "DuplicateIdentifier";
    case QdlError::Kind::kMalformedTemplate: return "MalformedTemplate";
    case QdlError::Kind::kNegativeNatIndex: return "NegativeNatIndex";
  }
  return "Error";
}

namespace {

struct Token {
  enum class Kind { kIdent, kInt, kSymbol, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::kIdent, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Kind::kInt, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (line.substr(i, 2) == "->" || line.substr(i, 2) == ">=") {
      out.push_back({Token::Kind::kSymbol, std::string(line.substr(i, 2)), col});
      i += 2;
      continue;
    }
    if (std::string_view(",:[]+-").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::kSymbol, std::string(1, c), col});
      ++i;
      continue;
    }
    throw QdlError(QdlError::Kind::kSyntax, line_no, col,
                   std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::kEnd, "", static_cast<int>(line.size()) + 1});
  return out;
}

struct RawEndpoint {
  std::string name;
  int column = 0;
  bool bracket = false;
  bool uses_i = false;
  Index value = 0;
};

struct RawArrow {
  bool family = false;
  std::optional<std::string> label;
  int label_column = 0;
  RawEndpoint source;
  RawEndpoint target;
  bool all_indices = false;
  Index lower = 0;
  int line = 0;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

  const Token& peek(std::size_t k = 0) const {
    return tokens_[std::min(pos_ + k, tokens_.size() - 1)];
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Token::Kind::kEnd; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw QdlError(QdlError::Kind::kSyntax, line_, t.column,
                   "expected " + what + (t.kind == Token::Kind::kEnd ? " at end of line"
                                                                     : ", found '" + t.text + "'"));
  }
  Token ident(const std::string& what = "identifier") {
    if (peek().kind != Token::Kind::kIdent) fail(peek(), what);
    return next();
  }
  void keyword(const std::string& kw) {
    if (peek().kind != Token::Kind::kIdent || peek().text != kw) fail(peek(), "'" + kw + "'");
    next();
  }
  void symbol(const std::string& s) {
    if (peek().kind != Token::Kind::kSymbol || peek().text != s) fail(peek(), "'" + s + "'");
    next();
  }
  bool accept(const std::string& s) {
    if (peek().kind == Token::Kind::kSymbol && peek().text == s) {
      next();
      return true;
    }
    return false;
  }
  Index unsigned_int() {
    if (peek().kind != Token::Kind::kInt) fail(peek(), "integer");
    const Token t = next();
    Index v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) {
      throw QdlError(QdlError::Kind::kSyntax, line_, t.column, "integer out of range");
    }
    return v;
  }
  Index signed_int() {
    const bool neg = accept("-");
    const Index v = unsigned_int();
    return neg ? -v : v;
  }
  void end() {
    if (!at_end()) fail(peek(), "end of line");
  }

  // <ep> / <tep>
  RawEndpoint endpoint(bool allow_template) {
    RawEndpoint ep;
    const Token name = ident("vertex or ray name");
    ep.name = name.text;
    ep.column = name.column;
    if (!accept("[")) return ep;
    ep.bracket = true;
    if (peek().kind == Token::Kind::kIdent) {
      const Token var = next();
      if (!allow_template || var.text != "i") {
        throw QdlError(QdlError::Kind::kMalformedTemplate, line_, var.column,
                       allow_template ? "only the index variable 'i' is allowed"
                                      : "index variables are not allowed in single arrows");
      }
      ep.uses_i = true;
      if (accept("+")) {
        ep.value = unsigned_int();
      } else if (accept("-")) {
        ep.value = -unsigned_int();
      }
    } else {
      ep.value = signed_int();
    }
    if (!accept("]")) {
      const Token& t = peek();
      throw QdlError(QdlError::Kind::kMalformedTemplate, line_, t.column,
                     "malformed index template near '" + t.text + "'");
    }
    return ep;
  }

  std::optional<std::string> label(int& column) {
    if (peek().kind == Token::Kind::kIdent && peek(1).kind == Token::Kind::kSymbol &&
        peek(1).text == ":") {
      const Token t = next();
      next();
      column = t.column;
      return t.text;
    }
    return std::nullopt;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

}  // namespace

class DescriptionBuilder {
 public:
  explicit DescriptionBuilder(QuiverDescription& q) : q_(q) {}

  void declare(const std::string& name, int line, int column) {
    if (!names_.insert(name).second) {
      throw QdlError(QdlError::Kind::kDuplicateIdentifier, line, column,
                     "'" + name + "' declared twice");
    }
  }
  void add_core(const std::string& name) { q_.cores_.push_back(name); }
  void add_ray(RayDecl r) { q_.rays_.push_back(std::move(r)); }

  Endpoint resolve(const RawEndpoint& raw, int line) const {
    const auto node = q_.find_node(raw.name);
    if (!node) {
      throw QdlError(QdlError::Kind::kUndeclaredIdentifier, line, raw.column,
                     "'" + raw.name + "' is not a declared vertex or ray");
    }
    Endpoint ep;
    ep.node = *node;
    if (q_.is_core(*node)) {
      if (raw.bracket) {
        throw QdlError(QdlError::Kind::kMalformedTemplate, line, raw.column,
                       "core vertex '" + raw.name + "' takes no index");
      }
      ep.kind = Endpoint::Kind::kCore;
      return ep;
    }
    if (!raw.bracket) {
      throw QdlError(QdlError::Kind::kMalformedTemplate, line, raw.column,
                     "ray '" + raw.name + "' needs an index");
    }
    ep.kind = raw.uses_i ? Endpoint::Kind::kRayShift : Endpoint::Kind::kRayConst;
    ep.value = raw.value;
    if (ep.kind == Endpoint::Kind::kRayConst && q_.ray_of(*node).domain == Domain::kNat &&
        ep.value < 0) {
      throw QdlError(QdlError::Kind::kNegativeNatIndex, line, raw.column,
                     "negative index on nat ray '" + raw.name + "'");
    }
    return ep;
  }

  void add_arrow(const RawArrow& raw) {
    if (raw.label) {
      if (!labels_.insert(*raw.label).second) {
        throw QdlError(QdlError::Kind::kDuplicateIdentifier, raw.line, raw.label_column,
                       "label '" + *raw.label + "' used twice");
      }
    }
    const Endpoint s = resolve(raw.source, raw.line);
    const Endpoint t = resolve(raw.target, raw.line);
    if (!raw.family) {
      SingleArrow a;
      a.generated_label = !raw.label;
      a.label = raw.label ? *raw.label : "arrow#" + std::to_string(q_.singles_.size() + 1);
      a.source = s;
      a.target = t;
      q_.singles_.push_back(std::move(a));
      return;
    }
    if (!s.mentions_index() && !t.mentions_index()) {
      throw QdlError(QdlError::Kind::kMalformedTemplate, raw.line, raw.source.column,
                     "family must mention the index variable i");
    }
    Family f;
    f.generated_label = !raw.label;
    f.label = raw.label ? *raw.label : "family#" + std::to_string(q_.families_.size() + 1);
    f.source = s;
    f.target = t;
    f.all_indices = raw.all_indices;
    f.declared_lower = raw.lower;
    f.lower = raw.lower;
    for (const auto* ep : {&s, &t}) {
      if (!ep->mentions_index() || q_.ray_of(ep->node).domain != Domain::kNat) continue;
      if (f.all_indices) {
        const auto& rawep = ep == &s ? raw.source : raw.target;
        throw QdlError(QdlError::Kind::kMalformedTemplate, raw.line, rawep.column,
                       "'for all i' requires int rays, '" + rawep.name + "' is nat");
      }
      f.lower = std::max(f.lower, -ep->value);
    }
    if (f.all_indices) f.lower = 0;
    q_.families_.push_back(std::move(f));
  }

 private:
  QuiverDescription& q_;
  std::set<std::string> names_;
  std::set<std::string> labels_;
};

QuiverDescription parse(std::string_view text) {
  QuiverDescription q;
  DescriptionBuilder builder(q);
  std::vector<RawArrow> arrows;
  bool have_header = false;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = stop + 1;

    LineParser p(tokenize(line, line_no), line_no);
    if (p.at_end()) continue;
    const Token kw = p.ident("keyword");
    if (!have_header) {
      if (kw.text != "quiver") p.fail(kw, "'quiver' header");
      q.name_ = p.ident("quiver name").text;
      p.end();
      have_header = true;
      continue;
    }
    if (kw.text == "vertex") {
      do {
        const Token name = p.ident("vertex name");
        builder.declare(name.text, line_no, name.column);
        builder.add_core(name.text);
      } while (p.accept(","));
      p.end();
    } else if (kw.text == "ray") {
      const Token name = p.ident("ray name");
      p.keyword("domain");
      const Token dom = p.ident("'nat' or 'int'");
      if (dom.text != "nat" && dom.text != "int") p.fail(dom, "'nat' or 'int'");
      p.end();
      builder.declare(name.text, line_no, name.column);
      builder.add_ray({name.text, dom.text == "nat" ? Domain::kNat : Domain::kInt});
    } else if (kw.text == "arrow" || kw.text == "family") {
      RawArrow a;
      a.family = kw.text == "family";
      a.line = line_no;
      a.label = p.label(a.label_column);
      a.source = p.endpoint(a.family);
      p.symbol("->");
      a.target = p.endpoint(a.family);
      if (a.family) {
        p.keyword("for");
        if (p.peek().kind == Token::Kind::kIdent && p.peek().text == "all") {
          p.next();
          p.keyword("i");
          a.all_indices = true;
        } else {
          p.keyword("i");
          p.symbol(">=");
          a.lower = p.signed_int();
        }
      }
      p.end();
      arrows.push_back(std::move(a));
    } else if (kw.text == "quiver") {
      p.fail(kw, "declaration (duplicate 'quiver' header)");
    } else {
      p.fail(kw, "'vertex', 'ray', 'arrow' or 'family'");
    }
  }
  if (!have_header) throw QdlError(QdlError::Kind::kSyntax, 1, 1, "missing 'quiver' header");
  for (const auto& a : arrows) builder.add_arrow(a);
  return q;
}

QuiverDescription parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

std::string render_endpoint(const QuiverDescription& q, const Endpoint& e) {
  const std::string& name = q.node_name(e.node);
  switch (e.kind) {
    case Endpoint::Kind::kCore: return name;
    case Endpoint::Kind::kRayConst: return name + "[" + std::to_string(e.value) + "]";
    case Endpoint::Kind::kRayShift:
      if (e.value == 0) return name + "[i]";
      return name + "[i" + (e.value > 0 ? "+" : "-") + std::to_string(std::abs(e.value)) + "]";
  }
  return name;
}

}  // namespace

std::string render(const QuiverDescription& q) {
  std::ostringstream out;
  out << "quiver " << q.name() << "\n";
  if (!q.cores().empty()) {
    out << "vertex ";
    for (std::size_t i = 0; i < q.cores().size(); ++i) out << (i ? ", " : "") << q.cores()[i];
    out << "\n";
  }
  for (const auto& r : q.rays()) {
    out << "ray " << r.name << " domain " << (r.domain == Domain::kNat ? "nat" : "int") << "\n";
  }
  for (const auto& a : q.singles()) {
    out << "arrow " << (a.generated_label ? "" : a.label + ": ") << render_endpoint(q, a.source)
        << " -> " << render_endpoint(q, a.target) << "\n";
  }
  for (const auto& f : q.families()) {
    out << "family " << (f.generated_label ? "" : f.label + ": ") << render_endpoint(q, f.source)
        << " -> " << render_endpoint(q, f.target);
    if (f.all_indices) {
      out << " for all i\n";
    } else {
      out << " for i >= " << f.declared_lower << "\n";
    }
  }
  return out.str();
}

}  // namespace qinj
