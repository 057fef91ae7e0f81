#include "olog/dsl.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace olog {

std::string SourceSpan::to_string() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column);
}

namespace {

bool is_ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// On-demand scanner: the parser asks for the token kind it expects, so
// identifiers like "20" and reals like "20.6" need no lexer-level guessing.
class Scanner {
 public:
  Scanner(std::string_view text, std::string_view file) : text_(text), file_(file) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  SourceSpan span() const {
    // clamp end-of-input errors onto the last character
    if (pos_ >= text_.size() && !text_.empty()) {
      return span_of(text_.size() - 1);
    }
    return SourceSpan{std::string(file_), line_, col_};
  }

  [[noreturn]] void fail(const std::string& expected) {
    skip_space();
    std::string found = "end of input";
    if (pos_ < text_.size()) {
      std::size_t end = pos_;
      while (end < text_.size() && end - pos_ < 12 && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
      found = "'" + std::string(text_.substr(pos_, std::max<std::size_t>(end - pos_, 1))) + "'";
    }
    throw ParseError(codes::kParseError, span(), "expected " + expected + ", found " + found);
  }

  bool peek_literal(std::string_view lit) {
    skip_space();
    return text_.substr(pos_, lit.size()) == lit;
  }

  // Keyword: literal followed by a non-identifier character.
  bool peek_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const std::size_t after = pos_ + kw.size();
    return after >= text_.size() || !is_ident_char(text_[after]);
  }

  bool accept(std::string_view lit) {
    if (!peek_literal(lit)) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("'" + std::string(lit) + "'");
  }

  void expect_keyword(std::string_view kw) {
    if (!peek_keyword(kw)) fail("'" + std::string(kw) + "'");
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
  }

  bool peek_ident() {
    skip_space();
    return pos_ < text_.size() && is_ident_char(text_[pos_]);
  }

  std::string ident(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_char(text_[pos_])) fail(what);
    std::string out;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string string_literal(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail(what);
    const SourceSpan start = span();
    advance();
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw ParseError(codes::kParseError, start, "unterminated string literal");
      }
      const char c = text_[pos_];
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= text_.size()) throw ParseError(codes::kParseError, start, "unterminated escape");
        const char e = text_[pos_];
        advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default:
            throw ParseError(codes::kParseError, span(), std::string("unknown escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    return out;
  }

  double number(const std::string& what) {
    skip_space();
    const SourceSpan start = span();
    std::size_t end = pos_;
    if (end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    if (text_.substr(end, 3) == "inf" && (end + 3 >= text_.size() || !is_ident_char(text_[end + 3]))) {
      const bool neg = text_[pos_] == '-';
      while (pos_ < end + 3) advance();
      return neg ? -std::numeric_limits<double>::infinity()
                 : std::numeric_limits<double>::infinity();
    }
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '.' ||
            text_[end] == 'e' || text_[end] == 'E' ||
            ((text_[end] == '-' || text_[end] == '+') && end > pos_ &&
             (text_[end - 1] == 'e' || text_[end - 1] == 'E')))) {
      ++end;
    }
    std::string_view tok = text_.substr(pos_, end - pos_);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || std::isnan(v)) {
      fail(what);
    }
    while (pos_ < end) advance();
    (void)start;
    return v;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  SourceSpan span_of(std::size_t offset) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return SourceSpan{std::string(file_), line, col};
  }

  std::string_view text_;
  std::string_view file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::vector<std::string> parse_tags(Scanner& s) {
  std::vector<std::string> tags;
  if (!s.accept("[")) return tags;
  tags.push_back(s.ident("tag name"));
  while (s.accept(",")) tags.push_back(s.ident("tag name"));
  s.expect("]");
  return tags;
}

std::vector<ArrowId> parse_arrow_list(Scanner& s) {
  std::vector<ArrowId> out;
  s.expect("[");
  if (s.accept("]")) return out;
  out.push_back(s.ident("arrow id"));
  while (s.accept(",")) out.push_back(s.ident("arrow id"));
  s.expect("]");
  return out;
}

Diagnostic located(std::string_view code, const SourceSpan& at, std::string msg) {
  return Diagnostic{Severity::Error, std::string(code), std::move(msg), at.to_string()};
}

}  // namespace

ParsedSchema parse_schema(std::string_view text, std::string_view file) {
  Scanner s(text, file);
  ParsedSchema out;
  OlogSchema& schema = out.schema;

  s.expect_keyword("schema");
  schema.name = s.string_literal("schema name string");
  s.expect("{");

  struct PendingEq {
    SourceSpan at;
    BoxId declared_end;
  };
  struct PendingFp {
    SourceSpan at;
    BoxId left, base, right;
  };
  std::vector<PendingEq> eq_meta;
  std::vector<PendingFp> fp_meta;
  IdSet box_ids;
  IdSet arrow_ids;

  while (!s.accept("}")) {
    const SourceSpan at = (s.skip_space(), s.span());
    if (s.peek_keyword("box")) {
      s.expect_keyword("box");
      BoxDecl b;
      b.id = s.ident("box id");
      if (!box_ids.insert(b.id).second) {
        throw ParseError(codes::kDuplicateId, at, "box '" + b.id + "' declared twice");
      }
      b.label = s.string_literal("box label string");
      b.tags = parse_tags(s);
      schema.boxes.push_back(std::move(b));
    } else if (s.peek_keyword("arrow")) {
      s.expect_keyword("arrow");
      ArrowDecl a;
      a.id = s.ident("arrow id");
      if (!arrow_ids.insert(a.id).second) {
        throw ParseError(codes::kDuplicateId, at, "arrow '" + a.id + "' declared twice");
      }
      s.expect(":");
      a.src = s.ident("source box id");
      s.expect("->");
      a.dst = s.ident("target box id");
      a.label = s.string_literal("arrow label string");
      a.tags = parse_tags(s);
      schema.arrows.push_back(std::move(a));
    } else if (s.peek_keyword("eq")) {
      s.expect_keyword("eq");
      PathEquation eq;
      eq.lhs.start = s.ident("start box id");
      s.expect("..");
      BoxId end = s.ident("end box id");
      s.expect(":");
      eq.lhs.arrows = parse_arrow_list(s);
      s.expect("=");
      eq.rhs.start = eq.lhs.start;
      eq.rhs.arrows = parse_arrow_list(s);
      if (s.peek_literal("\"")) eq.note = s.string_literal("note string");
      schema.equations.push_back(std::move(eq));
      eq_meta.push_back(PendingEq{at, std::move(end)});
    } else if (s.peek_keyword("pullback")) {
      s.expect_keyword("pullback");
      FiberProductDecl fp;
      PendingFp meta{at, {}, {}, {}};
      fp.apex = s.ident("apex box id");
      s.expect("=");
      meta.left = s.ident("box id");
      if (!s.accept("\xC3\x97") && !s.accept("*")) s.fail("'\xC3\x97' or '*'");
      s.expect("[");
      meta.base = s.ident("base box id");
      s.expect("]");
      meta.right = s.ident("box id");
      s.expect_keyword("proj");
      s.expect("(");
      fp.proj1 = s.ident("arrow id");
      s.expect(",");
      fp.proj2 = s.ident("arrow id");
      s.expect(")");
      s.expect_keyword("legs");
      s.expect("(");
      fp.leg1 = s.ident("arrow id");
      s.expect(",");
      fp.leg2 = s.ident("arrow id");
      s.expect(")");
      schema.fiber_products.push_back(std::move(fp));
      fp_meta.push_back(std::move(meta));
    } else {
      s.fail("'box', 'arrow', 'eq', 'pullback' or '}'");
    }
  }
  if (!s.at_end()) s.fail("end of input after schema block");

  // declared endpoints must agree with what the arrows say
  for (std::size_t i = 0; i < schema.equations.size(); ++i) {
    try {
      const auto end = path_endpoints(schema, schema.equations[i].lhs).second;
      if (end != eq_meta[i].declared_end) {
        out.diagnostics.push_back(located(codes::kEqEndpointMismatch, eq_meta[i].at,
                                          "declared end " + eq_meta[i].declared_end +
                                              " but lhs ends at " + end));
      }
    } catch (const OlogError&) {
      // reported by validate_schema
    }
  }
  for (std::size_t i = 0; i < schema.fiber_products.size(); ++i) {
    const auto& fp = schema.fiber_products[i];
    const auto& meta = fp_meta[i];
    const ArrowDecl* l1 = schema.find_arrow(fp.leg1);
    const ArrowDecl* l2 = schema.find_arrow(fp.leg2);
    if (l1 == nullptr || l2 == nullptr) continue;
    if (l1->src != meta.left || l2->src != meta.right || l1->dst != meta.base) {
      out.diagnostics.push_back(located(
          codes::kFpNotSquare, meta.at,
          "declared " + meta.left + " x[" + meta.base + "] " + meta.right + " but legs run " +
              l1->src + "->" + l1->dst + " and " + l2->src + "->" + l2->dst));
    }
  }

  out.implicit_squares = schema.add_missing_fiber_product_squares();
  auto more = validate_schema(schema);
  out.diagnostics.insert(out.diagnostics.end(), more.begin(), more.end());
  return out;
}

namespace {

Payload parse_payload(Scanner& s) {
  if (s.peek_keyword("real")) {
    s.expect_keyword("real");
    return s.number("real literal");
  }
  if (s.peek_keyword("pair")) {
    s.expect_keyword("pair");
    s.expect("(");
    RealPair p;
    p.x = s.number("real literal");
    s.expect(",");
    p.y = s.number("real literal");
    s.expect(")");
    return p;
  }
  if (s.peek_keyword("graph")) {
    s.expect_keyword("graph");
    s.expect("{");
    Graph g;
    if (!s.accept("}")) {
      do {
        std::string from = s.ident("graph node");
        if (s.accept("->")) {
          g.add_edge(from, s.ident("graph node"));
        } else {
          g.nodes.insert(from);
        }
      } while (s.accept(","));
      s.expect("}");
    }
    return g;
  }
  if (s.peek_keyword("text")) {
    s.expect_keyword("text");
    return Text{s.string_literal("text string")};
  }
  s.fail("payload ('real', 'pair', 'graph' or 'text')");
}

}  // namespace

Instance parse_instance(std::string_view text, std::string_view file) {
  Scanner s(text, file);
  Instance inst;
  s.expect_keyword("instance");
  inst.name = s.string_literal("instance name string");
  s.expect_keyword("of");
  inst.schema_name = s.string_literal("schema name string");
  s.expect("{");

  while (!s.accept("}")) {
    const SourceSpan at = (s.skip_space(), s.span());
    if (s.peek_keyword("set")) {
      s.expect_keyword("set");
      const BoxId box = s.ident("box id");
      if (inst.sets.count(box)) throw ParseError(codes::kDuplicateId, at, "set " + box + " given twice");
      ElementSet& set = inst.sets[box];
      s.expect("{");
      while (!s.accept("}")) {
        const SourceSpan el_at = (s.skip_space(), s.span());
        std::string id = s.ident("element id or '}'");
        Payload payload;
        if (s.accept("=")) payload = parse_payload(s);
        if (!set.emplace(id, std::move(payload)).second) {
          throw ParseError(codes::kDuplicateId, el_at,
                           "element '" + id + "' listed twice in set " + box);
        }
        s.accept(",");
      }
    } else if (s.peek_keyword("fn")) {
      s.expect_keyword("fn");
      const ArrowId arrow = s.ident("arrow id");
      if (inst.functions.count(arrow)) {
        throw ParseError(codes::kDuplicateId, at, "table for arrow " + arrow + " given twice");
      }
      FunctionTable& table = inst.functions[arrow];
      s.expect("{");
      while (!s.accept("}")) {
        const SourceSpan en_at = (s.skip_space(), s.span());
        std::string from = s.ident("element id or '}'");
        s.expect("->");
        std::string to = s.ident("element id");
        if (!table.emplace(from, std::move(to)).second) {
          throw ParseError(codes::kDuplicateId, en_at,
                           "arrow " + arrow + " maps '" + from + "' twice");
        }
        s.accept(",");
      }
    } else {
      s.fail("'set', 'fn' or '}'");
    }
  }
  if (!s.at_end()) s.fail("end of input after instance block");
  return inst;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string tags_suffix(const std::vector<std::string>& tags) {
  if (tags.empty()) return "";
  std::string out = " [";
  for (std::size_t i = 0; i < tags.size(); ++i) out += (i ? ", " : "") + tags[i];
  return out + "]";
}

}  // namespace

std::string format_payload(const Payload& p) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return "real " + format_real(v); }
    std::string operator()(const RealPair& v) const {
      return "pair (" + format_real(v.x) + ", " + format_real(v.y) + ")";
    }
    std::string operator()(const Graph& g) const {
      std::string out = "graph {";
      bool first = true;
      IdSet touched;
      for (const auto& [a, b] : g.edges) {
        out += (first ? "" : ", ") + a + "->" + b;
        first = false;
        touched.insert(a);
        touched.insert(b);
      }
      for (const auto& n : g.nodes) {
        if (touched.count(n)) continue;
        out += (first ? "" : ", ") + n;
        first = false;
      }
      return out + "}";
    }
    std::string operator()(const Text& t) const { return "text " + quote(t.value); }
  };
  return std::visit(Visitor{}, p);
}

std::string serialize_schema(const OlogSchema& schema) {
  std::ostringstream os;
  os << "schema " << quote(schema.name) << " {\n";

  std::vector<const BoxDecl*> boxes;
  for (const auto& b : schema.boxes) boxes.push_back(&b);
  std::stable_sort(boxes.begin(), boxes.end(),
                   [](const BoxDecl* a, const BoxDecl* b) { return natural_less(a->id, b->id); });
  for (const auto* b : boxes) os << "  box " << b->id << ' ' << quote(b->label) << tags_suffix(b->tags) << '\n';

  std::vector<const ArrowDecl*> arrows;
  for (const auto& a : schema.arrows) arrows.push_back(&a);
  std::stable_sort(arrows.begin(), arrows.end(), [](const ArrowDecl* a, const ArrowDecl* b) {
    return natural_less(a->id, b->id);
  });
  for (const auto* a : arrows) {
    os << "  arrow " << a->id << " : " << a->src << " -> " << a->dst << ' ' << quote(a->label)
       << tags_suffix(a->tags) << '\n';
  }

  for (const auto& eq : schema.equations) {
    BoxId end = eq.lhs.start;
    try {
      end = path_endpoints(schema, eq.lhs).second;
    } catch (const OlogError&) {
      try {
        end = path_endpoints(schema, eq.rhs).second;
      } catch (const OlogError&) {
      }
    }
    os << "  eq " << eq.lhs.start << ".." << end << " : " << arrow_list(eq.lhs) << " = "
       << arrow_list(eq.rhs);
    if (!eq.note.empty()) os << ' ' << quote(eq.note);
    os << '\n';
  }

  for (const auto& fp : schema.fiber_products) {
    const ArrowDecl* l1 = schema.find_arrow(fp.leg1);
    const ArrowDecl* l2 = schema.find_arrow(fp.leg2);
    const std::string left = l1 ? l1->src : "?";
    const std::string base = l1 ? l1->dst : "?";
    const std::string right = l2 ? l2->src : "?";
    os << "  pullback " << fp.apex << " = " << left << " \xC3\x97[" << base << "] " << right
       << " proj (" << fp.proj1 << ", " << fp.proj2 << ") legs (" << fp.leg1 << ", " << fp.leg2
       << ")\n";
  }
  os << "}\n";
  return os.str();
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream os;
  os << "instance " << quote(inst.name) << " of " << quote(inst.schema_name) << " {\n";
  for (const auto& [box, set] : inst.sets) {
    if (set.empty()) {
      os << "  set " << box << " {}\n";
      continue;
    }
    os << "  set " << box << " {\n";
    for (const auto& [id, payload] : set) {
      os << "    " << id;
      if (kind_of(payload) != PayloadKind::None) os << " = " << format_payload(payload);
      os << '\n';
    }
    os << "  }\n";
  }
  for (const auto& [arrow, table] : inst.functions) {
    if (table.empty()) {
      os << "  fn " << arrow << " {}\n";
      continue;
    }
    os << "  fn " << arrow << " {\n";
    for (const auto& [from, to] : table) os << "    " << from << " -> " << to << '\n';
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OlogError(codes::kIoError, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OlogError(codes::kIoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw OlogError(codes::kIoError, "failed writing '" + path + "'");
}

}  // namespace olog
