#include "catgsb/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace catgsb {

std::unique_ptr<MonomialOrder> Presentation::make_order(
    std::optional<OrderKind> override_kind) const {
  OrderKind kind = override_kind.value_or(default_order);
  return catgsb::make_order(kind, quiver,
                            kind == OrderKind::deglex ? deglex_rank
                                                      : std::vector<EdgeId>{});
}

namespace {

std::string eps_name(int p, int i) {
  return "E(" + std::to_string(p) + "," + std::to_string(i) + ")";
}
std::string eta_name(int q, int j) {
  return "H(" + std::to_string(q) + "," + std::to_string(j) + ")";
}
std::string t_name(int q) { return "T(" + std::to_string(q) + ")"; }

std::string eps_display(int p, int i) {
  return "ε_" + std::to_string(p) + "^" + std::to_string(i);
}
std::string eta_display(int q, int j) {
  return "η_" + std::to_string(q) + "^" + std::to_string(j);
}
std::string t_display(int q) { return "t_" + std::to_string(q); }

// Adds the shared simplicial skeleton: vertices [0..N] and the E/H edges.
void add_simplicial_skeleton(Quiver& q, int n) {
  for (int p = 0; p <= n; ++p) q.add_vertex(std::to_string(p), p);
  for (int p = 1; p <= n; ++p)
    for (int i = 0; i <= p; ++i)
      q.add_edge(eps_name(p, i), p - 1, p, eps_display(p, i));
  for (int d = 0; d <= n - 1; ++d)
    for (int j = 0; j <= d; ++j)
      q.add_edge(eta_name(d, j), d + 1, d, eta_display(d, j));
}

Word word_of(const Quiver& q, std::initializer_list<std::string> names) {
  std::vector<EdgeId> edges;
  for (const auto& nm : names) {
    auto e = q.find_edge(nm);
    if (!e) throw InternalError("builder references missing edge " + nm);
    edges.push_back(*e);
  }
  return Word::from_edges(q, std::move(edges));
}

void add_simplicial_relations(const Quiver& q, std::vector<Relation>& rels,
                              int n) {
  // f(q;i,j):  E(q+1,i).E(q,j-1) = E(q+1,j).E(q,i),  j > i
  for (int d = 1; d + 1 <= n; ++d)
    for (int j = 1; j <= d + 1; ++j)
      for (int i = 0; i < j; ++i)
        rels.push_back(Relation{
            word_of(q, {eps_name(d + 1, i), eps_name(d, j - 1)}),
            word_of(q, {eps_name(d + 1, j), eps_name(d, i)}),
            "f(" + std::to_string(d) + ";" + std::to_string(i) + "," +
                std::to_string(j) + ")"});
  // g(q;j,i):  H(q,j).H(q+1,i) = H(q,i).H(q+1,j+1),  j >= i
  for (int d = 0; d + 2 <= n; ++d)
    for (int j = 0; j <= d; ++j)
      for (int i = 0; i <= j; ++i)
        rels.push_back(Relation{
            word_of(q, {eta_name(d, j), eta_name(d + 1, i)}),
            word_of(q, {eta_name(d, i), eta_name(d + 1, j + 1)}),
            "g(" + std::to_string(d) + ";" + std::to_string(j) + "," +
                std::to_string(i) + ")"});
  // h(q;j,i):  H(q-1,j).E(q,i) = three cases by i vs j
  for (int d = 1; d <= n; ++d)
    for (int j = 0; j <= d - 1; ++j)
      for (int i = 0; i <= d; ++i) {
        Word lhs = word_of(q, {eta_name(d - 1, j), eps_name(d, i)});
        Word rhs = Word::identity(*q.find_vertex(std::to_string(d - 1)));
        if (j > i)
          rhs = word_of(q, {eps_name(d - 1, i), eta_name(d - 2, j - 1)});
        else if (i > j + 1)
          rhs = word_of(q, {eps_name(d - 1, i - 1), eta_name(d - 2, j)});
        rels.push_back(Relation{std::move(lhs), std::move(rhs),
                                "h(" + std::to_string(d) + ";" +
                                    std::to_string(j) + "," +
                                    std::to_string(i) + ")"});
      }
}

}  // namespace

Presentation build_simplicial(int max_dim) {
  if (max_dim < 1) throw Error("build_simplicial: max_dim must be >= 1");
  Presentation p;
  add_simplicial_skeleton(p.quiver, max_dim);
  add_simplicial_relations(p.quiver, p.relations, max_dim);
  p.default_order = OrderKind::simplicial;
  p.family = Family::simplicial;
  p.max_dim = max_dim;
  return p;
}

Presentation build_cyclic(int max_dim, CyclicVariant variant) {
  if (max_dim < 1) throw Error("build_cyclic: max_dim must be >= 1");
  Presentation p;
  add_simplicial_skeleton(p.quiver, max_dim);
  for (int d = 0; d <= max_dim; ++d)
    p.quiver.add_edge(t_name(d), d, d, t_display(d));
  add_simplicial_relations(p.quiver, p.relations, max_dim);
  const Quiver& q = p.quiver;
  // rho1(q;i): T(q).E(q,i) = E(q,i-1).T(q-1),  i = 1..q
  for (int d = 1; d <= max_dim; ++d)
    for (int i = 1; i <= d; ++i)
      p.relations.push_back(
          Relation{word_of(q, {t_name(d), eps_name(d, i)}),
                   word_of(q, {eps_name(d, i - 1), t_name(d - 1)}),
                   "rho1(" + std::to_string(d) + ";" + std::to_string(i) + ")"});
  // rho2(q;i): T(q).H(q,i) = H(q,i-1).T(q+1),  i = 1..q
  for (int d = 1; d + 1 <= max_dim; ++d)
    for (int i = 1; i <= d; ++i)
      p.relations.push_back(
          Relation{word_of(q, {t_name(d), eta_name(d, i)}),
                   word_of(q, {eta_name(d, i - 1), t_name(d + 1)}),
                   "rho2(" + std::to_string(d) + ";" + std::to_string(i) + ")"});
  // rho3(q): T(q)^(q+1) = id
  for (int d = 0; d <= max_dim; ++d) {
    std::vector<EdgeId> loop(static_cast<std::size_t>(d) + 1,
                             *q.find_edge(t_name(d)));
    p.relations.push_back(Relation{
        Word::from_edges(q, std::move(loop)),
        Word::identity(*q.find_vertex(std::to_string(d))),
        "rho3(" + std::to_string(d) + ")"});
  }
  if (variant == CyclicVariant::SC) {
    // rho4(q): T(q).E(q,0) = E(q,q)
    for (int d = 1; d <= max_dim; ++d)
      p.relations.push_back(Relation{
          word_of(q, {t_name(d), eps_name(d, 0)}),
          word_of(q, {eps_name(d, d)}), "rho4(" + std::to_string(d) + ")"});
    // rho5(q): T(q).H(q,0) = H(q,q).T(q+1).T(q+1)
    for (int d = 1; d + 1 <= max_dim; ++d)
      p.relations.push_back(Relation{
          word_of(q, {t_name(d), eta_name(d, 0)}),
          word_of(q, {eta_name(d, d), t_name(d + 1), t_name(d + 1)}),
          "rho5(" + std::to_string(d) + ")"});
  }
  p.default_order = OrderKind::cyclic;
  p.family = Family::cyclic;
  p.max_dim = max_dim;
  return p;
}

// --- parser --------------------------------------------------------------

namespace {

struct Token {
  enum class Kind { ident, colon, arrow, equals, end };
  Kind kind;
  std::string text;
  int line;
  int col;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' ||
         c == ')' || c == '[' || c == ']' || c == ',' || c == '^' || c == '.' ||
         c == '\'';
}

class LineScanner {
public:
  LineScanner(std::string_view line, int lineno) : line_(line), lineno_(lineno) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < line_.size()) {
      char c = line_[k];
      if (c == '#') break;
      if (c == ' ' || c == '\t' || c == '\r') {
        ++k;
        continue;
      }
      int col = static_cast<int>(k) + 1;
      if (c == ':') {
        out.push_back({Token::Kind::colon, ":", lineno_, col});
        ++k;
      } else if (c == '=') {
        out.push_back({Token::Kind::equals, "=", lineno_, col});
        ++k;
      } else if (c == '-') {
        if (k + 1 < line_.size() && line_[k + 1] == '>') {
          out.push_back({Token::Kind::arrow, "->", lineno_, col});
          k += 2;
        } else {
          throw ParseError("unexpected '-' (expected '->')", lineno_, col);
        }
      } else if (ident_char(c)) {
        std::size_t start = k;
        while (k < line_.size() && ident_char(line_[k])) ++k;
        out.push_back({Token::Kind::ident,
                       std::string(line_.substr(start, k - start)), lineno_,
                       col});
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         lineno_, col);
      }
    }
    out.push_back({Token::Kind::end, "", lineno_,
                   static_cast<int>(line_.size()) + 1});
    return out;
  }

private:
  std::string_view line_;
  int lineno_;
};

Word parse_word_token(const Quiver& q, const Token& tok) {
  const std::string& text = tok.text;
  if (text.rfind("id(", 0) == 0 && text.back() == ')' &&
      text.find('.') == std::string::npos) {
    std::string vname = text.substr(3, text.size() - 4);
    auto v = q.find_vertex(vname);
    if (!v)
      throw ParseError("unknown vertex '" + vname + "' in identity word",
                       tok.line, tok.col);
    return Word::identity(*v);
  }
  std::vector<EdgeId> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string part =
        text.substr(pos, dot == std::string::npos ? dot : dot - pos);
    if (part.empty())
      throw ParseError("empty edge name in word '" + text + "'", tok.line,
                       tok.col);
    auto e = q.find_edge(part);
    if (!e)
      throw ParseError("unknown edge '" + part + "'", tok.line, tok.col);
    edges.push_back(*e);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  try {
    return Word::from_edges(q, std::move(edges));
  } catch (const Error& err) {
    throw ParseError(std::string("word '") + text + "' is not composable: " +
                         err.what(),
                     tok.line, tok.col);
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_order = false;
  struct PendingRel {
    Token lhs, rhs;
  };
  std::vector<PendingRel> pending_rels;
  std::vector<Token> pending_order_names;
  Token order_tok{Token::Kind::end, "", 0, 0};
  std::string order_name;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    ++lineno;
    auto toks = LineScanner(line, lineno).tokens();
    auto expect = [&](std::size_t k, Token::Kind kind,
                      const char* what) -> const Token& {
      if (k >= toks.size() || toks[k].kind != kind) {
        const Token& at = k < toks.size() ? toks[k] : toks.back();
        throw ParseError(std::string("expected ") + what, at.line, at.col);
      }
      return toks[k];
    };
    auto expect_end = [&](std::size_t k) {
      if (toks[k].kind != Token::Kind::end)
        throw ParseError("unexpected trailing input", toks[k].line,
                         toks[k].col);
    };

    if (toks[0].kind != Token::Kind::end) {
      const std::string& kw = toks[0].text;
      if (toks[0].kind != Token::Kind::ident)
        throw ParseError("expected a statement keyword", toks[0].line,
                         toks[0].col);
      if (kw == "vertex") {
        const Token& name = expect(1, Token::Kind::ident, "a vertex name");
        expect_end(2);
        if (p.quiver.find_vertex(name.text))
          throw ParseError("duplicate vertex '" + name.text + "'", name.line,
                           name.col);
        p.quiver.add_vertex(name.text);
      } else if (kw == "edge") {
        const Token& name = expect(1, Token::Kind::ident, "an edge name");
        expect(2, Token::Kind::colon, "':'");
        const Token& src = expect(3, Token::Kind::ident, "a source vertex");
        expect(4, Token::Kind::arrow, "'->'");
        const Token& tgt = expect(5, Token::Kind::ident, "a target vertex");
        expect_end(6);
        if (name.text.find('.') != std::string::npos ||
            name.text.rfind("id(", 0) == 0)
          throw ParseError("edge name '" + name.text +
                               "' clashes with word syntax",
                           name.line, name.col);
        if (p.quiver.find_edge(name.text))
          throw ParseError("duplicate edge '" + name.text + "'", name.line,
                           name.col);
        auto s = p.quiver.find_vertex(src.text);
        if (!s)
          throw ParseError("unknown vertex '" + src.text + "'", src.line,
                           src.col);
        auto t = p.quiver.find_vertex(tgt.text);
        if (!t)
          throw ParseError("unknown vertex '" + tgt.text + "'", tgt.line,
                           tgt.col);
        p.quiver.add_edge(name.text, *s, *t);
      } else if (kw == "rel") {
        const Token& lhs = expect(1, Token::Kind::ident, "a word");
        expect(2, Token::Kind::equals, "'='");
        const Token& rhs = expect(3, Token::Kind::ident, "a word");
        expect_end(4);
        pending_rels.push_back({lhs, rhs});
      } else if (kw == "order") {
        if (have_order)
          throw ParseError("duplicate order statement", toks[0].line,
                           toks[0].col);
        const Token& which = expect(1, Token::Kind::ident, "an order name");
        order_tok = which;
        order_name = which.text;
        if (which.text == "deglex") {
          std::size_t k = 2;
          while (toks[k].kind == Token::Kind::ident)
            pending_order_names.push_back(toks[k++]);
          expect_end(k);
          if (pending_order_names.empty())
            throw ParseError("deglex needs an edge ranking", which.line,
                             which.col);
        } else if (which.text == "simplicial" || which.text == "cyclic") {
          expect_end(2);
        } else {
          throw ParseError("unknown order '" + which.text + "'", which.line,
                           which.col);
        }
        have_order = true;
      } else {
        throw ParseError("unknown statement '" + kw + "'", toks[0].line,
                         toks[0].col);
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  // Relations are resolved after all edges are known.
  int rel_idx = 0;
  for (const auto& pr : pending_rels) {
    Word lhs = parse_word_token(p.quiver, pr.lhs);
    Word rhs = parse_word_token(p.quiver, pr.rhs);
    ++rel_idx;
    std::string name = "r" + std::to_string(rel_idx);
    if (lhs.source() != rhs.source() || lhs.target() != rhs.target())
      throw ParseError(
          "relation " + name + " has non-parallel sides: " + pr.lhs.text +
              " : " + p.quiver.vertex_display(lhs.source()) + " -> " +
              p.quiver.vertex_display(lhs.target()) + " but " + pr.rhs.text +
              " : " + p.quiver.vertex_display(rhs.source()) + " -> " +
              p.quiver.vertex_display(rhs.target()),
          pr.lhs.line, pr.lhs.col);
    p.relations.push_back(Relation{std::move(lhs), std::move(rhs), name});
  }

  if (have_order) {
    if (order_name == "deglex") {
      p.default_order = OrderKind::deglex;
      std::vector<char> seen(p.quiver.edge_count(), 0);
      for (const Token& t : pending_order_names) {
        auto e = p.quiver.find_edge(t.text);
        if (!e)
          throw ParseError("unknown edge '" + t.text + "' in order", t.line,
                           t.col);
        if (seen[static_cast<std::size_t>(*e)])
          throw ParseError("edge '" + t.text + "' listed twice in order",
                           t.line, t.col);
        seen[static_cast<std::size_t>(*e)] = 1;
        p.deglex_rank.push_back(*e);
      }
      for (const Edge& e : p.quiver.edges())
        if (!seen[static_cast<std::size_t>(e.id)])
          throw ParseError("deglex order does not rank edge '" + e.name + "'",
                           order_tok.line, order_tok.col);
    } else {
      p.default_order = order_name == "simplicial" ? OrderKind::simplicial
                                                   : OrderKind::cyclic;
      try {
        p.make_order();  // validates the edge naming scheme
      } catch (const Error& err) {
        throw ParseError(err.what(), order_tok.line, order_tok.col);
      }
    }
  } else {
    p.default_order = OrderKind::deglex;  // rank = edge insertion order
  }
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  for (const Vertex& v : p.quiver.vertices()) out << "vertex " << v.name << "\n";
  for (const Edge& e : p.quiver.edges())
    out << "edge " << e.name << " : " << p.quiver.vertex(e.source).name
        << " -> " << p.quiver.vertex(e.target).name << "\n";
  for (const Relation& r : p.relations)
    out << "rel " << render_word(p.quiver, r.lhs) << " = "
        << render_word(p.quiver, r.rhs) << "\n";
  switch (p.default_order) {
    case OrderKind::deglex: {
      out << "order deglex";
      if (p.deglex_rank.empty())
        for (const Edge& e : p.quiver.edges()) out << " " << e.name;
      else
        for (EdgeId e : p.deglex_rank) out << " " << p.quiver.edge(e).name;
      out << "\n";
      break;
    }
    case OrderKind::simplicial:
      out << "order simplicial\n";
      break;
    case OrderKind::cyclic:
      out << "order cyclic\n";
      break;
  }
  return out.str();
}

// --- word / poly wire text -------------------------------------------------

std::string render_word(const Quiver& q, const Word& w) {
  if (w.is_identity()) return "id(" + q.vertex(w.source()).name + ")";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ".";
    out += q.edge(w.edge_at(k)).name;
  }
  return out;
}

std::string render_word_pretty(const Quiver& q, const Word& w) {
  if (w.is_identity()) return "id(" + q.vertex_display(w.source()) + ")";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Edge& e = q.edge(w.edge_at(k));
    if (k) out += " ";
    out += e.display.empty() ? e.name : e.display;
  }
  return out;
}

Word parse_word(const Quiver& q, std::string_view text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos)
    throw ParseError("empty word", 1, 1);
  Token tok{Token::Kind::ident, std::string(text.substr(begin, end - begin + 1)),
            1, static_cast<int>(begin) + 1};
  return parse_word_token(q, tok);
}

std::string render_poly(const Quiver& q, const Poly& f,
                        const MonomialOrder* ord) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Word, Rational>> terms(f.terms().begin(),
                                               f.terms().end());
  if (ord)
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) {
                return ord->greater(a.first, b.first);
              });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
      first = false;
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (a != 1) out += to_string(a) + "*";
    out += render_word(q, w);
  }
  return out;
}

Rational rational_from_string(std::string_view text) {
  if (text.empty()) throw Error("empty rational literal");
  try {
    return Rational(std::string(text));
  } catch (const std::exception&) {
    throw Error("invalid rational literal '" + std::string(text) + "'");
  }
}

Poly parse_poly(const Quiver& q, std::string_view text) {
  // poly := ['-'] term (('+'|'-') term)*
  // term := [rational '*'] word
  struct Part {
    bool negative;
    std::string body;
  };
  std::vector<Part> parts;
  bool negative = false;
  std::string cur;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '+' || c == '-') {
      std::string trimmed = cur;
      while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t'))
        trimmed.pop_back();
      if (trimmed.empty() && parts.empty() && !negative && c == '-' && cur.empty()) {
        negative = true;
        continue;
      }
      if (trimmed.empty())
        throw ParseError("empty term in polynomial", 1, static_cast<int>(k) + 1);
      parts.push_back({negative, trimmed});
      negative = c == '-';
      cur.clear();
      continue;
    }
    if (!cur.empty() || (c != ' ' && c != '\t')) cur += c;
  }
  while (!cur.empty() && (cur.back() == ' ' || cur.back() == '\t')) cur.pop_back();
  if (cur.empty()) {
    if (parts.empty()) throw ParseError("empty polynomial", 1, 1);
    throw ParseError("trailing operator in polynomial", 1,
                     static_cast<int>(text.size()));
  }
  parts.push_back({negative, cur});

  if (parts.size() == 1 && parts[0].body == "0" && !parts[0].negative)
    throw ParseError("cannot parse '0' without endpoints; use an explicit zero",
                     1, 1);

  std::optional<Poly> acc;
  for (const Part& part : parts) {
    Rational coeff = 1;
    std::string body = part.body;
    auto star = body.find('*');
    if (star != std::string::npos) {
      coeff = rational_from_string(body.substr(0, star));
      body = body.substr(star + 1);
      while (!body.empty() && body.front() == ' ') body.erase(body.begin());
    }
    if (part.negative) coeff = -coeff;
    Word w = parse_word(q, body);
    if (!acc) acc = Poly(w.source(), w.target());
    acc->add_term(w, coeff);
  }
  return *acc;
}

}  // namespace catgsb
