#ifndef XBRAID_MODEL_HPP_
#define XBRAID_MODEL_HPP_

// Elaboration of a parsed document into library objects, and the reverse
// direction: turning objects back into declarations that re-parse to equal
// objects.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "action.hpp"
#include "algebra.hpp"
#include "braid.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "field.hpp"
#include "groupx.hpp"
#include "icat.hpp"
#include "linspace.hpp"
#include "xmod.hpp"

namespace xbraid::dsl {

  template <ExactField F>
  struct AlgebraEntity {
    Algebra<F>            algebra;
    std::optional<Flavor> flavor;

    friend bool operator==(AlgebraEntity const&, AlgebraEntity const&) = default;
  };

  template <ExactField F>
  using Entity = std::variant<AlgebraEntity<F>,
                              LinMap<F>,
                              BilMap<F>,
                              AssocAction<F>,
                              LieAction<F>,
                              XModAssoc<F>,
                              XModLie<F>,
                              XBraidingAssoc<F>,
                              XBraidingLie<F>,
                              CatBraiding<F>,
                              CatAlgebra<F>,
                              FiniteGroup,
                              GroupXMod>;

  template <ExactField F>
  struct Model {
    F                                              field;
    std::vector<std::pair<std::string, Entity<F>>> entities;

    Entity<F> const* find(std::string const& name) const {
      for (auto const& [n, e] : entities) {
        if (n == name) {
          return &e;
        }
      }
      return nullptr;
    }

    //! The entity named by r, which must hold a T; `what` names the
    //! expected kind in the error.
    template <class T>
    T const& get(Ref const& r, char const* what) const {
      auto const* e = find(r.name);
      if (e == nullptr) {
        throw Error(Errc::unknown_reference, r.pos.str() + ": no declaration named '" + r.name + "'");
      }
      if (auto const* x = std::get_if<T>(e)) {
        return *x;
      }
      throw Error(Errc::unknown_reference, r.pos.str() + ": '" + r.name + "' is not " + what);
    }
  };

  inline Rational to_rational(Rational const& x) {
    return x;
  }
  inline Rational to_rational(Residue const& x) {
    return Rational(BigInt(std::to_string(x.value())));
  }

  ////////////////////////////////////////////////////////////////////////
  // Elaboration
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  class Elaborator {
   public:
    explicit Elaborator(F field) : model_{std::move(field), {}} {}

    Model<F> run(Document const& doc) {
      for (auto const& d : doc.decls) {
        auto const& name = decl_name(d);
        if (model_.find(name.name) != nullptr) {
          throw Error(Errc::invalid_input, name.pos.str() + ": '" + name.name + "' is declared twice");
        }
        model_.entities.emplace_back(name.name, std::visit([&](auto const& x) { return elaborate(x); }, d));
      }
      return std::move(model_);
    }

   private:
    F const& field() const {
      return model_.field;
    }

    Algebra<F> const& algebra(Ref const& r) const {
      return model_.template get<AlgebraEntity<F>>(r, "an algebra").algebra;
    }

    std::size_t index(Space<F> const& s, Ref const& r) const {
      auto i = s.index_of(r.name);
      if (!i) {
        throw Error(Errc::unknown_reference, r.pos.str() + ": '" + r.name + "' is not a basis element here");
      }
      return *i;
    }

    Vec<F> vector(Space<F> const& s, LinComb const& v) const {
      auto out = s.zero();
      for (auto const& t : v.terms) {
        auto i = index(s, t.basis);
        out[i] = out[i] + field().from_ratio(t.coef.get_num(), t.coef.get_den());
      }
      return out;
    }

    //! Products table from explicit entries; unlisted pairs are zero.
    BilMap<F> table(Space<F> const& l, Space<F> const& r, Space<F> const& c,
                    std::vector<ProductEntry> const& entries, bool antisymmetric) const {
      std::vector<std::optional<Vec<F>>> images(l.dim() * r.dim());
      auto set = [&](std::size_t i, std::size_t j, Vec<F> v, Ref const& at) {
        auto& slot = images[i * r.dim() + j];
        if (slot && *slot != v) {
          throw Error(Errc::invalid_input, at.pos.str() + ": conflicting products for (" + l.label(i) + ", "
                                               + r.label(j) + ")");
        }
        slot = std::move(v);
      };
      std::set<std::pair<std::size_t, std::size_t>> written;
      for (auto const& e : entries) {
        auto i = index(l, e.left), j = index(r, e.right);
        if (!written.insert({i, j}).second) {
          throw Error(Errc::invalid_input, e.left.pos.str() + ": product " + e.left.name + "*" + e.right.name
                                               + " is given twice");
        }
        auto v = vector(c, e.value);
        if (antisymmetric && i == j && !vec::is_zero_vec(v)) {
          throw Error(Errc::invalid_input, e.left.pos.str() + ": antisymmetric product of " + e.left.name
                                               + " with itself must be 0");
        }
        set(i, j, v, e.left);
        if (antisymmetric) {
          set(j, i, vec::neg(v), e.left);
        }
      }
      std::vector<Vec<F>> out;
      for (auto& v : images) {
        out.push_back(v ? *v : c.zero());
      }
      return BilMap<F>(l, r, c, std::move(out));
    }

    Entity<F> elaborate(AlgebraDecl const& d) const {
      if (d.catalog) {
        return AlgebraEntity<F>{catalog(d.catalog->str(), field()), d.flavor};
      }
      std::vector<std::string> labels;
      for (auto const& b : d.basis) {
        labels.push_back(b.name);
      }
      Space<F> s(field(), labels);
      return AlgebraEntity<F>{Algebra<F>(s, table(s, s, s, d.products, d.antisymmetric)), d.flavor};
    }

    Entity<F> elaborate(MapDecl const& d) const {
      auto const& dom = algebra(d.domain).space;
      auto const& cod = algebra(d.codomain).space;
      if (d.identity) {
        if (dom.dim() != cod.dim()) {
          throw Error(Errc::dimension_mismatch, d.name.pos.str() + ": identity between spaces of dimension "
                                                    + std::to_string(dom.dim()) + " and "
                                                    + std::to_string(cod.dim()));
        }
        return LinMap<F>::identity(dom).with_codomain(cod);
      }
      std::vector<std::optional<Vec<F>>> cols(dom.dim());
      for (auto const& e : d.entries) {
        auto j = index(dom, e.source);
        if (cols[j]) {
          throw Error(Errc::invalid_input, e.source.pos.str() + ": image of " + e.source.name + " is given twice");
        }
        cols[j] = vector(cod, e.value);
      }
      std::vector<Vec<F>> out;
      for (auto& c : cols) {
        out.push_back(c ? *c : cod.zero());
      }
      return LinMap<F>(dom, cod, std::move(out));
    }

    Entity<F> elaborate(BilinearDecl const& d) const {
      return table(algebra(d.left).space, algebra(d.right).space, algebra(d.codomain).space, d.entries, false);
    }

    template <class Build>
    auto at(Ref const& r, Build&& build) const {
      try {
        return build();
      } catch (Error const& e) {
        if (e.code() == Errc::dimension_mismatch) {
          throw Error(Errc::dimension_mismatch, r.pos.str() + ": '" + r.name + "' has the wrong shape");
        }
        throw;
      }
    }

    //! product / bracket / zero / a declared bilinear map.
    BilMap<F> bilinear_slot(Ref const& r, Space<F> const& l, Space<F> const& rs, Space<F> const& c,
                            Algebra<F> const* product) const {
      return at(r, [&] {
        if ((r.name == "product" || r.name == "bracket") && product != nullptr) {
          return product->mult.with_spaces(l, rs, c);
        }
        if (r.name == "zero") {
          return BilMap<F>::zero(l, rs, c);
        }
        return model_.template get<BilMap<F>>(r, "a bilinear map").with_spaces(l, rs, c);
      });
    }

    //! identity / zero / a declared linear map.
    LinMap<F> linear_slot(Ref const& r, Space<F> const& dom, Space<F> const& cod) const {
      return at(r, [&] {
        if (r.name == "identity") {
          if (dom.dim() != cod.dim()) {
            throw Error(Errc::dimension_mismatch, "identity");
          }
          return LinMap<F>::identity(dom).with_codomain(cod);
        }
        if (r.name == "zero") {
          return LinMap<F>::zero(dom, cod);
        }
        return model_.template get<LinMap<F>>(r, "a linear map").with_domain(dom).with_codomain(cod);
      });
    }

    Entity<F> elaborate(ActionDecl const& d) const {
      auto const& n = algebra(d.actor);
      auto const& m = algebra(d.module);
      if (d.flavor == Flavor::assoc) {
        return AssocAction<F>(n, m, bilinear_slot(d.left, n.space, m.space, m.space, &m),
                              bilinear_slot(d.right, m.space, n.space, m.space, &m));
      }
      return LieAction<F>(n, m, bilinear_slot(d.dot, n.space, m.space, m.space, &m));
    }

    Entity<F> elaborate(XModDecl const& d) const {
      auto const* e = model_.find(d.action.name);
      if (e == nullptr) {
        throw Error(Errc::unknown_reference, d.action.pos.str() + ": no declaration named '" + d.action.name + "'");
      }
      if (d.flavor == Flavor::assoc) {
        if (std::holds_alternative<LieAction<F>>(*e)) {
          throw Error(Errc::wrong_flavor, d.action.pos.str() + ": '" + d.action.name + "' is a Lie action");
        }
        auto const& a = model_.template get<AssocAction<F>>(d.action, "an action");
        return XModAssoc<F>(a, linear_slot(d.boundary, a.module.space, a.actor.space));
      }
      if (std::holds_alternative<AssocAction<F>>(*e)) {
        throw Error(Errc::wrong_flavor, d.action.pos.str() + ": '" + d.action.name + "' is an associative action");
      }
      auto const& a = model_.template get<LieAction<F>>(d.action, "an action");
      return XModLie<F>(a, linear_slot(d.boundary, a.module.space, a.actor.space));
    }

    Entity<F> elaborate(BraidingDecl const& d) const {
      if (d.over_cat) {
        auto const& c = model_.template get<CatAlgebra<F>>(d.base, "a categorical algebra");
        return CatBraiding<F>(c, bilinear_slot(d.map, c.c0.space, c.c0.space, c.c1.space, nullptr));
      }
      auto const* e = model_.find(d.base.name);
      if (e != nullptr && std::holds_alternative<XModLie<F>>(*e)) {
        auto const& x = std::get<XModLie<F>>(*e);
        auto const& n = x.n();
        return XBraidingLie<F>(x, bilinear_slot(d.map, n.space, n.space, x.m().space, &n));
      }
      auto const& x = model_.template get<XModAssoc<F>>(d.base, "a crossed module");
      auto const& n = x.n();
      if (d.map.name == "commutator") {
        return XBraidingAssoc<F>(x, at(d.map, [&] {
                                   return (n.mult - n.mult.transpose()).with_spaces(n.space, n.space, x.m().space);
                                 }));
      }
      return XBraidingAssoc<F>(x, bilinear_slot(d.map, n.space, n.space, x.m().space, &n));
    }

    Entity<F> elaborate(CatDecl const& d) const {
      auto const& c0 = algebra(d.objects);
      auto const& c1 = algebra(d.morphisms);
      CatAlgebra<F> c(c1, c0, linear_slot(d.source, c1.space, c0.space), linear_slot(d.target, c1.space, c0.space),
                      linear_slot(d.identity, c0.space, c1.space), d.flavor);
      if (d.compose_left) {
        auto k1 = linear_slot(*d.compose_left, c1.space, c1.space);
        auto k2 = linear_slot(*d.compose_right, c1.space, c1.space);
        for (auto const& [x, y] : composable_pairs(c)) {
          if (vec::add(k1(x), k2(y)) != compose_unchecked(c, x, y)) {
            throw Error(Errc::invalid_cat_algebra, d.compose_left->pos.str()
                                                       + ": composition must be k(x, y) = x - e(t(x)) + y");
          }
        }
      }
      return c;
    }

    Entity<F> elaborate(GroupDecl const& d) const {
      if (d.catalog) {
        return group_catalog(d.catalog->str());
      }
      std::vector<std::string> labels;
      for (auto const& e : d.elements) {
        labels.push_back(e.name);
      }
      auto idx = [&](Ref const& r) {
        auto it = std::find(labels.begin(), labels.end(), r.name);
        if (it == labels.end()) {
          throw Error(Errc::unknown_reference, r.pos.str() + ": '" + r.name + "' is not an element of " + d.name.name);
        }
        return static_cast<std::size_t>(it - labels.begin());
      };
      FiniteGroup::Table t(labels.size());
      std::vector<bool>  seen(labels.size(), false);
      for (auto const& row : d.rows) {
        auto i = idx(row.element);
        if (seen[i]) {
          throw Error(Errc::invalid_input, row.element.pos.str() + ": row " + row.element.name + " is given twice");
        }
        seen[i] = true;
        if (row.products.size() != labels.size()) {
          throw Error(Errc::dimension_mismatch, row.element.pos.str() + ": row " + row.element.name + " has "
                                                    + std::to_string(row.products.size()) + " entries, expected "
                                                    + std::to_string(labels.size()));
        }
        for (auto const& p : row.products) {
          t[i].push_back(idx(p));
        }
      }
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!seen[i]) {
          throw Error(Errc::invalid_input, d.name.pos.str() + ": no row for " + labels[i]);
        }
      }
      return FiniteGroup(labels, t);
    }

    Entity<F> elaborate(GroupXModDecl const& d) const {
      auto const& g  = model_.template get<FiniteGroup>(d.source, "a group");
      auto const& h  = model_.template get<FiniteGroup>(d.target, "a group");
      auto        ng = g.order(), nh = h.order();
      auto        element = [](FiniteGroup const& grp, Ref const& r) {
        auto i = grp.index_of(r.name);
        if (!i) {
          throw Error(Errc::unknown_reference, r.pos.str() + ": '" + r.name + "' is not a group element here");
        }
        return *i;
      };
      auto same_group = [&](Ref const& at) {
        if (!(g == h)) {
          throw Error(Errc::invalid_input, at.pos.str() + ": '" + at.name + "' needs source and target to be the same group");
        }
      };

      GroupXMod::Table action(nh, std::vector<std::size_t>(ng));
      for (std::size_t x = 0; x < nh; ++x) {
        for (std::size_t y = 0; y < ng; ++y) {
          action[x][y] = y;
        }
      }
      if (d.action && d.action->keyword && d.action->keyword->name == "conjugation") {
        same_group(*d.action->keyword);
        for (std::size_t x = 0; x < nh; ++x) {
          for (std::size_t y = 0; y < ng; ++y) {
            action[x][y] = h.conj(x, y);
          }
        }
      } else if (d.action) {
        fill(d.action->entries, [&](std::vector<Ref> const& e) -> std::size_t& {
          return action[element(h, e[0])][element(g, e[1])];
        }, [&](std::vector<Ref> const& e) { return element(g, e[2]); });
      }

      std::vector<std::size_t> boundary(ng, h.identity());
      if (d.boundary && d.boundary->keyword && d.boundary->keyword->name == "identity") {
        same_group(*d.boundary->keyword);
        for (std::size_t y = 0; y < ng; ++y) {
          boundary[y] = y;
        }
      } else if (d.boundary) {
        fill(d.boundary->entries, [&](std::vector<Ref> const& e) -> std::size_t& { return boundary[element(g, e[0])]; },
             [&](std::vector<Ref> const& e) { return element(h, e[1]); });
      }

      std::optional<GroupXMod::Table> brace;
      if (d.brace) {
        brace = GroupXMod::Table(nh, std::vector<std::size_t>(nh, g.identity()));
        if (d.brace->keyword && d.brace->keyword->name == "commutator") {
          same_group(*d.brace->keyword);
          for (std::size_t x = 0; x < nh; ++x) {
            for (std::size_t x2 = 0; x2 < nh; ++x2) {
              (*brace)[x][x2] = h.commutator(x, x2);
            }
          }
        } else {
          fill(d.brace->entries, [&](std::vector<Ref> const& e) -> std::size_t& {
            return (*brace)[element(h, e[0])][element(h, e[1])];
          }, [&](std::vector<Ref> const& e) { return element(g, e.back()); });
        }
      }
      GroupXMod x{g, h, action, boundary, brace};
      x.check_structure();
      return x;
    }

    //! Writes each entry once; a repeated key is an error.
    template <class Slot, class Value>
    static void fill(std::vector<std::vector<Ref>> const& entries, Slot&& slot, Value&& value) {
      std::set<std::size_t*> written;
      for (auto const& e : entries) {
        auto& s = slot(e);
        if (!written.insert(&s).second) {
          throw Error(Errc::invalid_input, e[0].pos.str() + ": entry for " + e[0].name + ", " + e[1].name
                                               + " is given twice");
        }
        s = value(e);
      }
    }

    Model<F> model_;
  };

  template <ExactField F>
  Model<F> elaborate(Document const& doc, F field) {
    return Elaborator<F>(std::move(field)).run(doc);
  }

  //! Calls fn with the elaborated model over the document's field.
  template <class Fn>
  decltype(auto) with_model(Document const& doc, Fn&& fn) {
    if (doc.field.prime) {
      return fn(elaborate(doc, PrimeField(*doc.field.prime)));
    }
    return fn(elaborate(doc, Rationals{}));
  }

  template <ExactField F>
  FieldDecl field_decl(F const& field) {
    FieldDecl f;
    if (field.characteristic() != 0) {
      f.prime = field.characteristic();
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Emission
  ////////////////////////////////////////////////////////////////////////

  inline bool is_identifier(std::string const& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') || s.back() == '.') {
      return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
  }

  //! Builds a document declaration by declaration. Every emitted object is
  //! fully explicit, so re-parsing it yields an equal object.
  template <ExactField F>
  class Emitter {
   public:
    explicit Emitter(F const& field) {
      doc_.field = field_decl(field);
    }

    Document const& document() const {
      return doc_;
    }

    void algebra(std::string const& name, Algebra<F> const& a, std::optional<Flavor> flavor) {
      AlgebraDecl d;
      d.name   = Ref{name};
      d.flavor = flavor;
      for (auto const& l : a.space.labels()) {
        d.basis.push_back(ref(l));
      }
      d.products = entries(a.mult);
      doc_.decls.push_back(std::move(d));
    }

    void linmap(std::string const& name, std::string const& dom, std::string const& cod, LinMap<F> const& f) {
      MapDecl d{Ref{name}, Ref{dom}, Ref{cod}, false, {}};
      for (std::size_t j = 0; j < f.domain().dim(); ++j) {
        if (!vec::is_zero_vec(f.column(j))) {
          d.entries.push_back(MapEntry{ref(f.domain().label(j)), lincomb(f.codomain(), f.column(j))});
        }
      }
      doc_.decls.push_back(std::move(d));
    }

    void bilinear(std::string const& name, std::string const& l, std::string const& r, std::string const& c,
                  BilMap<F> const& b) {
      doc_.decls.push_back(BilinearDecl{Ref{name}, Ref{l}, Ref{r}, Ref{c}, entries(b)});
    }

    //! Algebras name.N and name.M, maps name.left / name.right.
    void action(std::string const& name, AssocAction<F> const& a) {
      algebra(name + ".N", a.actor, Flavor::assoc);
      algebra(name + ".M", a.module, Flavor::assoc);
      bilinear(name + ".left", name + ".N", name + ".M", name + ".M", a.star1);
      bilinear(name + ".right", name + ".M", name + ".N", name + ".M", a.star2);
      doc_.decls.push_back(ActionDecl{Ref{name}, Flavor::assoc, Ref{name + ".N"}, Ref{name + ".M"},
                                      Ref{name + ".left"}, Ref{name + ".right"}, Ref{}});
    }

    void action(std::string const& name, LieAction<F> const& a) {
      algebra(name + ".N", a.actor, Flavor::lie);
      algebra(name + ".M", a.module, Flavor::lie);
      bilinear(name + ".dot", name + ".N", name + ".M", name + ".M", a.dot);
      doc_.decls.push_back(
          ActionDecl{Ref{name}, Flavor::lie, Ref{name + ".N"}, Ref{name + ".M"}, Ref{}, Ref{}, Ref{name + ".dot"}});
    }

    template <class X>
    void xmod(std::string const& name, X const& x) {
      constexpr bool assoc = std::is_same_v<X, XModAssoc<F>>;
      action(name + ".act", x.action);
      linmap(name + ".d", name + ".act.M", name + ".act.N", x.boundary);
      doc_.decls.push_back(
          XModDecl{Ref{name}, assoc ? Flavor::assoc : Flavor::lie, Ref{name + ".act"}, Ref{name + ".d"}});
    }

    template <class B>
    void braiding(std::string const& name, B const& b) {
      xmod(name + ".X", b.base);
      bilinear(name + ".brace", name + ".X.act.N", name + ".X.act.N", name + ".X.act.M", b.brace);
      doc_.decls.push_back(BraidingDecl{Ref{name}, false, Ref{name + ".X"}, Ref{name + ".brace"}});
    }

    void cat(std::string const& name, CatAlgebra<F> const& c) {
      algebra(name + ".C1", c.c1, c.flavor);
      algebra(name + ".C0", c.c0, c.flavor);
      linmap(name + ".s", name + ".C1", name + ".C0", c.s);
      linmap(name + ".t", name + ".C1", name + ".C0", c.t);
      linmap(name + ".e", name + ".C0", name + ".C1", c.e);
      CatDecl d;
      d.name      = Ref{name};
      d.flavor    = c.flavor;
      d.objects   = Ref{name + ".C0"};
      d.morphisms = Ref{name + ".C1"};
      d.source    = Ref{name + ".s"};
      d.target    = Ref{name + ".t"};
      d.identity  = Ref{name + ".e"};
      doc_.decls.push_back(std::move(d));
    }

    void braiding(std::string const& name, CatBraiding<F> const& b) {
      cat(name + ".C", b.base);
      bilinear(name + ".tau", name + ".C.C0", name + ".C.C0", name + ".C.C1", b.tau);
      doc_.decls.push_back(BraidingDecl{Ref{name}, true, Ref{name + ".C"}, Ref{name + ".tau"}});
    }

    void group(std::string const& name, FiniteGroup const& g) {
      GroupDecl d;
      d.name = Ref{name};
      for (auto const& l : g.labels()) {
        d.elements.push_back(ref(l));
      }
      for (std::size_t a = 0; a < g.order(); ++a) {
        GroupRow row{ref(g.label(a)), {}};
        for (std::size_t b = 0; b < g.order(); ++b) {
          row.products.push_back(Ref{g.label(g.mul(a, b))});
        }
        d.rows.push_back(std::move(row));
      }
      doc_.decls.push_back(std::move(d));
    }

   private:
    static Ref ref(std::string const& label) {
      if (!is_identifier(label)) {
        throw Error(Errc::invalid_input, "label '" + label + "' cannot be written as an identifier");
      }
      return Ref{label};
    }

    static LinComb lincomb(Space<F> const& s, Vec<F> const& v) {
      LinComb out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_zero(v[i])) {
          out.terms.push_back(Term{to_rational(v[i]), ref(s.label(i))});
        }
      }
      return out;
    }

    static std::vector<ProductEntry> entries(BilMap<F> const& b) {
      std::vector<ProductEntry> out;
      for (std::size_t i = 0; i < b.left().dim(); ++i) {
        for (std::size_t j = 0; j < b.right().dim(); ++j) {
          if (!vec::is_zero_vec(b.image(i, j))) {
            out.push_back(ProductEntry{ref(b.left().label(i)), ref(b.right().label(j)),
                                       lincomb(b.codomain(), b.image(i, j))});
          }
        }
      }
      return out;
    }

    Document doc_;
  };

}  // namespace xbraid::dsl

#endif  // XBRAID_MODEL_HPP_
