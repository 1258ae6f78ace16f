#ifndef XBRAID_DSL_HPP_
#define XBRAID_DSL_HPP_

// Syntax of the input language: tokens, the syntax tree, a recursive
// descent parser with line:column errors, and the canonical printer.
//
//   field Q | field Fp 7
//   algebra A [assoc|lie|leibniz] [antisymmetric] basis a, b { a*b = 2/3 b; }
//   algebra A [flavor] = Mat(2)
//   map d: A -> B { a |-> b - c; }          map d: A -> A = identity
//   bilinear m: A, B -> C { a*b = c; }
//   action X assoc { actor N; module M; left L; right R; }
//   action X lie { actor N; module M; dot D; }
//   xmod X assoc|lie { action A; boundary d; }
//   braiding B { xmod X; brace b; }          braiding B { cat C; tau t; }
//   cat C assoc|lie { objects C0; morphisms C1; source s; target t; identity e;
//                     [compose left k1 right k2;] }
//   group G = S3                             group G elements e, a { row e: e a; row a: a e; }
//   groupxmod X { source G; target H; action conjugation; boundary identity; brace commutator; }
//
// Component slots also accept the built-in words product, bracket,
// commutator, identity, zero, conjugation and trivial where they make sense.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "field.hpp"

namespace xbraid::dsl {

  struct Pos {
    std::size_t line = 1;
    std::size_t col  = 1;

    std::string str() const {
      return std::to_string(line) + ":" + std::to_string(col);
    }
  };

  //! A name as written, with its position. Positions never take part in
  //! equality, so trees built in code compare equal to parsed ones.
  struct Ref {
    std::string name;
    Pos         pos{};

    friend bool operator==(Ref const& a, Ref const& b) {
      return a.name == b.name;
    }
  };

  struct Term {
    Rational coef;
    Ref      basis;

    friend bool operator==(Term const&, Term const&) = default;
  };

  //! Empty means 0.
  struct LinComb {
    std::vector<Term> terms;

    friend bool operator==(LinComb const&, LinComb const&) = default;
  };

  struct FieldDecl {
    std::optional<std::uint64_t> prime;  // nullopt for Q
    Pos                          pos{};

    friend bool operator==(FieldDecl const& a, FieldDecl const& b) {
      return a.prime == b.prime;
    }
  };

  //! Fixture name such as Mat(2) or sl2.
  struct CatalogRef {
    std::string                name;
    std::optional<std::size_t> size;
    Pos                        pos{};

    std::string str() const {
      return size ? name + "(" + std::to_string(*size) + ")" : name;
    }
    friend bool operator==(CatalogRef const& a, CatalogRef const& b) {
      return a.name == b.name && a.size == b.size;
    }
  };

  struct ProductEntry {
    Ref     left;
    Ref     right;
    LinComb value;

    friend bool operator==(ProductEntry const&, ProductEntry const&) = default;
  };

  struct AlgebraDecl {
    Ref                       name;
    std::optional<Flavor>     flavor;
    bool                      antisymmetric = false;
    std::optional<CatalogRef> catalog;
    std::vector<Ref>          basis;
    std::vector<ProductEntry> products;

    friend bool operator==(AlgebraDecl const&, AlgebraDecl const&) = default;
  };

  struct MapEntry {
    Ref     source;
    LinComb value;

    friend bool operator==(MapEntry const&, MapEntry const&) = default;
  };

  struct MapDecl {
    Ref                   name;
    Ref                   domain;
    Ref                   codomain;
    bool                  identity = false;
    std::vector<MapEntry> entries;

    friend bool operator==(MapDecl const&, MapDecl const&) = default;
  };

  struct BilinearDecl {
    Ref                       name;
    Ref                       left;
    Ref                       right;
    Ref                       codomain;
    std::vector<ProductEntry> entries;

    friend bool operator==(BilinearDecl const&, BilinearDecl const&) = default;
  };

  struct ActionDecl {
    Ref    name;
    Flavor flavor = Flavor::assoc;
    Ref    actor;
    Ref    module;
    Ref    left;   // assoc
    Ref    right;  // assoc
    Ref    dot;    // lie

    friend bool operator==(ActionDecl const&, ActionDecl const&) = default;
  };

  struct XModDecl {
    Ref    name;
    Flavor flavor = Flavor::assoc;
    Ref    action;
    Ref    boundary;

    friend bool operator==(XModDecl const&, XModDecl const&) = default;
  };

  struct BraidingDecl {
    Ref  name;
    bool over_cat = false;
    Ref  base;  // xmod or cat
    Ref  map;   // brace or tau

    friend bool operator==(BraidingDecl const&, BraidingDecl const&) = default;
  };

  struct CatDecl {
    Ref                name;
    Flavor             flavor = Flavor::assoc;
    Ref                objects;
    Ref                morphisms;
    Ref                source;
    Ref                target;
    Ref                identity;
    std::optional<Ref> compose_left;
    std::optional<Ref> compose_right;

    friend bool operator==(CatDecl const&, CatDecl const&) = default;
  };

  struct GroupRow {
    Ref              element;
    std::vector<Ref> products;

    friend bool operator==(GroupRow const&, GroupRow const&) = default;
  };

  struct GroupDecl {
    Ref                       name;
    std::optional<CatalogRef> catalog;
    std::vector<Ref>          elements;
    std::vector<GroupRow>     rows;

    friend bool operator==(GroupDecl const&, GroupDecl const&) = default;
  };

  //! Either a built-in word or explicit entries; each entry lists its
  //! element names in written order.
  struct TableSpec {
    std::optional<Ref>            keyword;
    std::vector<std::vector<Ref>> entries;

    friend bool operator==(TableSpec const&, TableSpec const&) = default;
  };

  struct GroupXModDecl {
    Ref                      name;
    Ref                      source;
    Ref                      target;
    std::optional<TableSpec> action;    // h . g = g'
    std::optional<TableSpec> boundary;  // g |-> h
    std::optional<TableSpec> brace;     // h , h' = g

    friend bool operator==(GroupXModDecl const&, GroupXModDecl const&) = default;
  };

  using Decl = std::variant<AlgebraDecl,
                            MapDecl,
                            BilinearDecl,
                            ActionDecl,
                            XModDecl,
                            BraidingDecl,
                            CatDecl,
                            GroupDecl,
                            GroupXModDecl>;

  inline Ref const& decl_name(Decl const& d) {
    return std::visit([](auto const& x) -> Ref const& { return x.name; }, d);
  }

  inline char const* decl_keyword(Decl const& d) {
    static constexpr char const* words[]
        = {"algebra", "map", "bilinear", "action", "xmod", "braiding", "cat", "group", "groupxmod"};
    return words[d.index()];
  }

  struct Document {
    FieldDecl         field;
    std::vector<Decl> decls;

    friend bool operator==(Document const&, Document const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Lexer
  ////////////////////////////////////////////////////////////////////////

  enum class Tok { ident, integer, punct, end };

  struct Token {
    Tok         kind;
    std::string text;
    Pos         pos;
  };

  inline std::string describe(Token const& t) {
    switch (t.kind) {
      case Tok::ident: return "identifier '" + t.text + "'";
      case Tok::integer: return "integer " + t.text;
      case Tok::punct: return "'" + t.text + "'";
      case Tok::end: return "end of input";
    }
    return t.text;
  }

  //! Identifiers are [A-Za-z_][A-Za-z0-9_.]* not ending in '.'; '#' starts
  //! a comment running to the end of the line.
  inline std::vector<Token> tokenize(std::string const& src) {
    std::vector<Token> out;
    std::size_t        i = 0, line = 1, col = 1;
    auto               advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k) {
        if (src[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
        ++i;
      }
    };
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_char  = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'; };
    while (i < src.size()) {
      char c = src[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      if (c == '#') {
        while (i < src.size() && src[i] != '\n') {
          advance(1);
        }
        continue;
      }
      Pos here{line, col};
      if (is_ident_start(c)) {
        std::size_t j = i;
        while (j < src.size() && is_ident_char(src[j])) {
          ++j;
        }
        while (src[j - 1] == '.') {
          --j;
        }
        out.push_back({Tok::ident, src.substr(i, j - i), here});
        advance(j - i);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
          ++j;
        }
        if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E')
            && j + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
          throw Error(Errc::syntax_error, here.str() + ": decimal numbers are not accepted; write a fraction p/q");
        }
        out.push_back({Tok::integer, src.substr(i, j - i), here});
        advance(j - i);
        continue;
      }
      for (char const* p : {"|->", "->"}) {
        std::string s(p);
        if (src.compare(i, s.size(), s) == 0) {
          out.push_back({Tok::punct, s, here});
          advance(s.size());
          goto next;
        }
      }
      if (std::string("{}();:,=+-*/.").find(c) != std::string::npos) {
        out.push_back({Tok::punct, std::string(1, c), here});
        advance(1);
        continue;
      }
      throw Error(Errc::syntax_error, here.str() + ": unexpected character '" + std::string(1, c) + "'");
    next:;
    }
    out.push_back({Tok::end, "", Pos{line, col}});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  inline bool is_reserved(std::string const& w) {
    for (char const* r : {"field", "algebra", "map", "bilinear", "action", "xmod", "braiding", "cat", "group",
                          "groupxmod", "basis", "antisymmetric", "assoc", "lie", "leibniz", "product", "bracket",
                          "commutator", "identity", "zero", "conjugation", "trivial", "elements", "row"}) {
      if (w == r) {
        return true;
      }
    }
    return false;
  }

  class Parser {
   public:
    explicit Parser(std::string const& src) : toks_(tokenize(src)) {}

    Document document() {
      Document doc;
      doc.field = field_decl();
      while (peek().kind != Tok::end) {
        doc.decls.push_back(declaration());
      }
      return doc;
    }

   private:
    Token const& peek(std::size_t ahead = 0) const {
      return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    Token const& next() {
      Token const& t = toks_[pos_];
      if (pos_ + 1 < toks_.size()) {
        ++pos_;
      }
      return t;
    }
    [[noreturn]] void fail(std::vector<std::string> const& expected) const {
      std::string list;
      for (std::size_t i = 0; i < expected.size(); ++i) {
        list += (i ? ", " : "") + expected[i];
      }
      throw Error(Errc::syntax_error,
                  peek().pos.str() + ": expected " + (expected.size() > 1 ? "one of " : "") + list + ", got "
                      + describe(peek()));
    }
    bool at_punct(char const* p) const {
      return peek().kind == Tok::punct && peek().text == p;
    }
    bool at_word(char const* w) const {
      return peek().kind == Tok::ident && peek().text == w;
    }
    void punct(char const* p) {
      if (!at_punct(p)) {
        fail({"'" + std::string(p) + "'"});
      }
      next();
    }
    void word(char const* w) {
      if (!at_word(w)) {
        fail({"'" + std::string(w) + "'"});
      }
      next();
    }
    Ref ident() {
      if (peek().kind != Tok::ident) {
        fail({"identifier"});
      }
      auto const& t = next();
      return Ref{t.text, t.pos};
    }
    //! A new declaration name; reserved words are refused.
    Ref new_name() {
      if (peek().kind == Tok::ident && is_reserved(peek().text)) {
        throw Error(Errc::syntax_error, peek().pos.str() + ": '" + peek().text + "' is a reserved word");
      }
      return ident();
    }
    BigInt integer() {
      if (peek().kind != Tok::integer) {
        fail({"integer"});
      }
      return BigInt(next().text);
    }

    FieldDecl field_decl() {
      FieldDecl f;
      f.pos = peek().pos;
      word("field");
      if (at_word("Q")) {
        next();
        return f;
      }
      if (at_word("Fp")) {
        next();
        auto const& t = peek();
        BigInt      p = integer();
        if (p > BigInt("9223372036854775807")) {
          throw Error(Errc::field_mismatch, t.pos.str() + ": modulus too large");
        }
        f.prime = std::stoull(p.get_str());
        if (!is_prime(*f.prime)) {
          throw Error(Errc::field_mismatch, t.pos.str() + ": " + p.get_str() + " is not a prime");
        }
        return f;
      }
      fail({"'Q'", "'Fp'"});
    }

    Decl declaration() {
      if (at_word("algebra")) return algebra_decl();
      if (at_word("map")) return map_decl();
      if (at_word("bilinear")) return bilinear_decl();
      if (at_word("action")) return action_decl();
      if (at_word("xmod")) return xmod_decl();
      if (at_word("braiding")) return braiding_decl();
      if (at_word("cat")) return cat_decl();
      if (at_word("groupxmod")) return groupxmod_decl();
      if (at_word("group")) return group_decl();
      fail({"'algebra'", "'map'", "'bilinear'", "'action'", "'xmod'", "'braiding'", "'cat'", "'group'",
            "'groupxmod'"});
    }

    std::optional<Flavor> flavor_opt() {
      if (at_word("assoc")) {
        next();
        return Flavor::assoc;
      }
      if (at_word("lie")) {
        next();
        return Flavor::lie;
      }
      if (at_word("leibniz")) {
        next();
        return Flavor::leibniz;
      }
      return std::nullopt;
    }

    Flavor assoc_or_lie() {
      if (at_word("assoc")) {
        next();
        return Flavor::assoc;
      }
      if (at_word("lie")) {
        next();
        return Flavor::lie;
      }
      fail({"'assoc'", "'lie'"});
    }

    CatalogRef catalog_ref() {
      CatalogRef c;
      c.pos  = peek().pos;
      c.name = ident().name;
      if (at_punct("(")) {
        next();
        auto n = integer();
        if (n > 1000) {
          throw Error(Errc::syntax_error, c.pos.str() + ": fixture size too large");
        }
        c.size = std::stoul(n.get_str());
        punct(")");
      }
      return c;
    }

    //! INT ['/' INT]
    Rational scalar() {
      auto const& t   = peek();
      BigInt      num = integer();
      BigInt      den = 1;
      if (at_punct("/")) {
        next();
        den = integer();
        if (den == 0) {
          throw Error(Errc::division_by_zero, t.pos.str() + ": zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return q;
    }

    //! ['-'] term (('+' | '-') term)*, term = scalar ['*'] ident | ident,
    //! or the single literal 0.
    LinComb lincomb() {
      LinComb out;
      if (peek().kind == Tok::integer && peek().text.find_first_not_of('0') == std::string::npos
          && !(peek(1).kind == Tok::ident || (peek(1).kind == Tok::punct && (peek(1).text == "/" || peek(1).text == "*")))) {
        next();
        return out;
      }
      bool negative = false;
      if (at_punct("-")) {
        next();
        negative = true;
      }
      while (true) {
        Rational coef(1);
        if (peek().kind == Tok::integer) {
          coef = scalar();
          if (at_punct("*")) {
            next();
          }
        } else if (peek().kind != Tok::ident) {
          fail({"scalar", "identifier"});
        }
        Ref basis = ident();
        if (negative) {
          coef = -coef;
        }
        out.terms.push_back(Term{coef, basis});
        if (at_punct("+")) {
          next();
          negative = false;
        } else if (at_punct("-")) {
          next();
          negative = true;
        } else {
          return out;
        }
      }
    }

    //! a*b = lincomb;
    ProductEntry product_entry() {
      ProductEntry e;
      e.left = ident();
      punct("*");
      e.right = ident();
      punct("=");
      e.value = lincomb();
      punct(";");
      return e;
    }

    Decl algebra_decl() {
      word("algebra");
      AlgebraDecl d;
      d.name   = new_name();
      d.flavor = flavor_opt();
      if (at_punct("=")) {
        next();
        d.catalog = catalog_ref();
        return d;
      }
      if (at_word("antisymmetric")) {
        next();
        d.antisymmetric = true;
      }
      if (!at_word("basis")) {
        fail(d.flavor ? std::vector<std::string>{"'antisymmetric'", "'basis'", "'='"}
                      : std::vector<std::string>{"'assoc'", "'lie'", "'leibniz'", "'antisymmetric'", "'basis'", "'='"});
      }
      next();
      if (!at_punct("{")) {
        d.basis.push_back(ident());
        while (at_punct(",")) {
          next();
          d.basis.push_back(ident());
        }
      }
      punct("{");
      while (!at_punct("}")) {
        if (peek().kind != Tok::ident) {
          fail({"identifier", "'}'"});
        }
        d.products.push_back(product_entry());
      }
      punct("}");
      return d;
    }

    Decl map_decl() {
      word("map");
      MapDecl d;
      d.name = new_name();
      punct(":");
      d.domain = ident();
      punct("->");
      d.codomain = ident();
      if (at_punct("=")) {
        next();
        word("identity");
        d.identity = true;
        return d;
      }
      if (!at_punct("{")) {
        fail({"'{'", "'='"});
      }
      punct("{");
      while (!at_punct("}")) {
        if (peek().kind != Tok::ident) {
          fail({"identifier", "'}'"});
        }
        MapEntry e;
        e.source = ident();
        punct("|->");
        e.value = lincomb();
        punct(";");
        d.entries.push_back(std::move(e));
      }
      punct("}");
      return d;
    }

    Decl bilinear_decl() {
      word("bilinear");
      BilinearDecl d;
      d.name = new_name();
      punct(":");
      d.left = ident();
      punct(",");
      d.right = ident();
      punct("->");
      d.codomain = ident();
      punct("{");
      while (!at_punct("}")) {
        if (peek().kind != Tok::ident) {
          fail({"identifier", "'}'"});
        }
        d.entries.push_back(product_entry());
      }
      punct("}");
      return d;
    }

    //! Parses `{ key value; ... }` where each key appears at most once and
    //! `required` keys must appear. Values are single identifiers unless a
    //! custom handler claims the key.
    template <class Custom>
    void keyed_block(std::vector<std::string> const& keys,
                     std::vector<std::string> const& required,
                     std::vector<std::pair<std::string, Ref*>> const& slots,
                     Custom&& custom) {
      punct("{");
      std::vector<std::string> seen;
      while (!at_punct("}")) {
        if (peek().kind != Tok::ident) {
          std::vector<std::string> exp;
          for (auto const& k : keys) {
            exp.push_back("'" + k + "'");
          }
          exp.push_back("'}'");
          fail(exp);
        }
        auto const& key_tok = peek();
        std::string key     = key_tok.text;
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
          std::vector<std::string> exp;
          for (auto const& k : keys) {
            exp.push_back("'" + k + "'");
          }
          exp.push_back("'}'");
          fail(exp);
        }
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
          throw Error(Errc::syntax_error, key_tok.pos.str() + ": '" + key + "' given twice");
        }
        seen.push_back(key);
        next();
        if (!custom(key)) {
          for (auto const& [k, slot] : slots) {
            if (k == key) {
              *slot = ident();
            }
          }
          punct(";");
        }
      }
      for (auto const& r : required) {
        if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
          throw Error(Errc::syntax_error, peek().pos.str() + ": block is missing '" + r + "'");
        }
      }
      punct("}");
    }

    Decl action_decl() {
      word("action");
      ActionDecl d;
      d.name   = new_name();
      d.flavor = assoc_or_lie();
      auto none = [](std::string const&) { return false; };
      if (d.flavor == Flavor::assoc) {
        keyed_block({"actor", "module", "left", "right"}, {"actor", "module", "left", "right"},
                    {{"actor", &d.actor}, {"module", &d.module}, {"left", &d.left}, {"right", &d.right}}, none);
      } else {
        keyed_block({"actor", "module", "dot"}, {"actor", "module", "dot"},
                    {{"actor", &d.actor}, {"module", &d.module}, {"dot", &d.dot}}, none);
      }
      return d;
    }

    Decl xmod_decl() {
      word("xmod");
      XModDecl d;
      d.name   = new_name();
      d.flavor = assoc_or_lie();
      keyed_block({"action", "boundary"}, {"action", "boundary"}, {{"action", &d.action}, {"boundary", &d.boundary}},
                  [](std::string const&) { return false; });
      return d;
    }

    Decl braiding_decl() {
      word("braiding");
      BraidingDecl d;
      d.name = new_name();
      punct("{");
      if (at_word("xmod")) {
        next();
        d.base = ident();
        punct(";");
        word("brace");
        d.map = ident();
        punct(";");
      } else if (at_word("cat")) {
        next();
        d.over_cat = true;
        d.base     = ident();
        punct(";");
        word("tau");
        d.map = ident();
        punct(";");
      } else {
        fail({"'xmod'", "'cat'"});
      }
      punct("}");
      return d;
    }

    Decl cat_decl() {
      word("cat");
      CatDecl d;
      d.name   = new_name();
      d.flavor = assoc_or_lie();
      keyed_block({"objects", "morphisms", "source", "target", "identity", "compose"},
                  {"objects", "morphisms", "source", "target", "identity"},
                  {{"objects", &d.objects},
                   {"morphisms", &d.morphisms},
                   {"source", &d.source},
                   {"target", &d.target},
                   {"identity", &d.identity}},
                  [&](std::string const& key) {
                    if (key != "compose") {
                      return false;
                    }
                    word("left");
                    d.compose_left = ident();
                    word("right");
                    d.compose_right = ident();
                    punct(";");
                    return true;
                  });
      return d;
    }

    Decl group_decl() {
      word("group");
      GroupDecl d;
      d.name = new_name();
      if (at_punct("=")) {
        next();
        d.catalog = catalog_ref();
        return d;
      }
      if (!at_word("elements")) {
        fail({"'='", "'elements'"});
      }
      next();
      d.elements.push_back(ident());
      while (at_punct(",")) {
        next();
        d.elements.push_back(ident());
      }
      punct("{");
      while (!at_punct("}")) {
        if (!at_word("row")) {
          fail({"'row'", "'}'"});
        }
        next();
        GroupRow row;
        row.element = ident();
        punct(":");
        while (peek().kind == Tok::ident) {
          row.products.push_back(ident());
        }
        punct(";");
        d.rows.push_back(std::move(row));
      }
      punct("}");
      return d;
    }

    //! keyword ';' or '{' entries '}' where an entry is
    //! ident sep1 ident [sep2 ident] ';'.
    TableSpec table_spec(std::vector<std::string> const& keywords, char const* sep1, char const* sep2) {
      TableSpec spec;
      if (peek().kind == Tok::ident && std::find(keywords.begin(), keywords.end(), peek().text) != keywords.end()) {
        spec.keyword = ident();
        punct(";");
        return spec;
      }
      if (!at_punct("{")) {
        std::vector<std::string> exp;
        for (auto const& k : keywords) {
          exp.push_back("'" + k + "'");
        }
        exp.push_back("'{'");
        fail(exp);
      }
      next();
      while (!at_punct("}")) {
        std::vector<Ref> entry;
        entry.push_back(ident());
        punct(sep1);
        entry.push_back(ident());
        if (sep2 != nullptr) {
          punct(sep2);
          entry.push_back(ident());
        }
        punct(";");
        spec.entries.push_back(std::move(entry));
      }
      punct("}");
      return spec;
    }

    Decl groupxmod_decl() {
      word("groupxmod");
      GroupXModDecl d;
      d.name = new_name();
      keyed_block({"source", "target", "action", "boundary", "brace"}, {"source", "target"},
                  {{"source", &d.source}, {"target", &d.target}}, [&](std::string const& key) {
                    if (key == "action") {
                      d.action = table_spec({"conjugation", "trivial"}, ".", "=");
                      return true;
                    }
                    if (key == "boundary") {
                      d.boundary = table_spec({"identity", "trivial"}, "|->", nullptr);
                      return true;
                    }
                    if (key == "brace") {
                      d.brace = table_spec({"commutator", "trivial"}, ",", "=");
                      return true;
                    }
                    return false;
                  });
      return d;
    }

    std::vector<Token> toks_;
    std::size_t        pos_ = 0;
  };

  inline Document parse(std::string const& src) {
    return Parser(src).document();
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical printer
  ////////////////////////////////////////////////////////////////////////

  inline std::string print_lincomb(LinComb const& v) {
    if (v.terms.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < v.terms.size(); ++i) {
      auto const& t   = v.terms[i];
      bool        neg = sgn(t.coef) < 0;
      Rational    mag = neg ? Rational(-t.coef) : t.coef;
      if (i == 0) {
        out += neg ? "-" : "";
      } else {
        out += neg ? " - " : " + ";
      }
      if (mag != 1) {
        out += mag.get_str() + " ";
      }
      out += t.basis.name;
    }
    return out;
  }

  namespace detail {

    inline std::string join(std::vector<Ref> const& refs, char const* sep) {
      std::string out;
      for (std::size_t i = 0; i < refs.size(); ++i) {
        out += (i ? sep : "") + refs[i].name;
      }
      return out;
    }

    inline void print_products(std::ostream& os, std::vector<ProductEntry> const& es) {
      for (auto const& e : es) {
        os << "  " << e.left.name << "*" << e.right.name << " = " << print_lincomb(e.value) << ";\n";
      }
    }

    inline void print_table(std::ostream& os, char const* key, TableSpec const& t, char const* sep1, char const* sep2) {
      if (t.keyword) {
        os << "  " << key << " " << t.keyword->name << ";\n";
        return;
      }
      os << "  " << key << " {";
      if (t.entries.empty()) {
        os << "}\n";
        return;
      }
      os << "\n";
      for (auto const& e : t.entries) {
        os << "    " << e[0].name << " " << sep1 << " " << e[1].name;
        if (sep2 != nullptr) {
          os << " " << sep2 << " " << e[2].name;
        }
        os << ";\n";
      }
      os << "  }\n";
    }

    struct DeclPrinter {
      std::ostream& os;

      void operator()(AlgebraDecl const& d) const {
        os << "algebra " << d.name.name;
        if (d.flavor) {
          os << " " << flavor_name(*d.flavor);
        }
        if (d.catalog) {
          os << " = " << d.catalog->str() << "\n";
          return;
        }
        if (d.antisymmetric) {
          os << " antisymmetric";
        }
        os << " basis";
        if (!d.basis.empty()) {
          os << " " << join(d.basis, ", ");
        }
        if (d.products.empty()) {
          os << " {}\n";
          return;
        }
        os << " {\n";
        print_products(os, d.products);
        os << "}\n";
      }
      void operator()(MapDecl const& d) const {
        os << "map " << d.name.name << ": " << d.domain.name << " -> " << d.codomain.name;
        if (d.identity) {
          os << " = identity\n";
          return;
        }
        if (d.entries.empty()) {
          os << " {}\n";
          return;
        }
        os << " {\n";
        for (auto const& e : d.entries) {
          os << "  " << e.source.name << " |-> " << print_lincomb(e.value) << ";\n";
        }
        os << "}\n";
      }
      void operator()(BilinearDecl const& d) const {
        os << "bilinear " << d.name.name << ": " << d.left.name << ", " << d.right.name << " -> " << d.codomain.name;
        if (d.entries.empty()) {
          os << " {}\n";
          return;
        }
        os << " {\n";
        print_products(os, d.entries);
        os << "}\n";
      }
      void operator()(ActionDecl const& d) const {
        os << "action " << d.name.name << " " << flavor_name(d.flavor) << " {\n";
        os << "  actor " << d.actor.name << ";\n  module " << d.module.name << ";\n";
        if (d.flavor == Flavor::assoc) {
          os << "  left " << d.left.name << ";\n  right " << d.right.name << ";\n";
        } else {
          os << "  dot " << d.dot.name << ";\n";
        }
        os << "}\n";
      }
      void operator()(XModDecl const& d) const {
        os << "xmod " << d.name.name << " " << flavor_name(d.flavor) << " {\n";
        os << "  action " << d.action.name << ";\n  boundary " << d.boundary.name << ";\n}\n";
      }
      void operator()(BraidingDecl const& d) const {
        os << "braiding " << d.name.name << " {\n";
        if (d.over_cat) {
          os << "  cat " << d.base.name << ";\n  tau " << d.map.name << ";\n}\n";
        } else {
          os << "  xmod " << d.base.name << ";\n  brace " << d.map.name << ";\n}\n";
        }
      }
      void operator()(CatDecl const& d) const {
        os << "cat " << d.name.name << " " << flavor_name(d.flavor) << " {\n";
        os << "  objects " << d.objects.name << ";\n  morphisms " << d.morphisms.name << ";\n";
        os << "  source " << d.source.name << ";\n  target " << d.target.name << ";\n";
        os << "  identity " << d.identity.name << ";\n";
        if (d.compose_left) {
          os << "  compose left " << d.compose_left->name << " right " << d.compose_right->name << ";\n";
        }
        os << "}\n";
      }
      void operator()(GroupDecl const& d) const {
        os << "group " << d.name.name;
        if (d.catalog) {
          os << " = " << d.catalog->str() << "\n";
          return;
        }
        os << " elements " << join(d.elements, ", ") << " {\n";
        for (auto const& row : d.rows) {
          os << "  row " << row.element.name << ":";
          for (auto const& p : row.products) {
            os << " " << p.name;
          }
          os << ";\n";
        }
        os << "}\n";
      }
      void operator()(GroupXModDecl const& d) const {
        os << "groupxmod " << d.name.name << " {\n";
        os << "  source " << d.source.name << ";\n  target " << d.target.name << ";\n";
        if (d.action) {
          print_table(os, "action", *d.action, ".", "=");
        }
        if (d.boundary) {
          print_table(os, "boundary", *d.boundary, "|->", nullptr);
        }
        if (d.brace) {
          print_table(os, "brace", *d.brace, ",", "=");
        }
        os << "}\n";
      }
    };

  }  // namespace detail

  inline std::string print(Document const& doc) {
    std::ostringstream os;
    os << "field " << (doc.field.prime ? "Fp " + std::to_string(*doc.field.prime) : std::string("Q")) << "\n";
    for (auto const& d : doc.decls) {
      os << "\n";
      std::visit(detail::DeclPrinter{os}, d);
    }
    return os.str();
  }

}  // namespace xbraid::dsl

#endif  // XBRAID_DSL_HPP_
