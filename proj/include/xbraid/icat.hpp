#ifndef XBRAID_ICAT_HPP_
#define XBRAID_ICAT_HPP_

// Internal categories in algebras: objects C0, morphisms C1, source, target
// and identity maps. Composition is not data; it is always
// k(x, y) = x - e(t(x)) + y on composable pairs.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "algebra.hpp"
#include "error.hpp"
#include "linspace.hpp"
#include "report.hpp"

namespace xbraid {

  template <ExactField F>
  struct CatAlgebra {
    Algebra<F> c1;
    Algebra<F> c0;
    LinMap<F>  s;  // C1 -> C0
    LinMap<F>  t;  // C1 -> C0
    LinMap<F>  e;  // C0 -> C1
    Flavor     flavor;

    CatAlgebra(Algebra<F> morphisms, Algebra<F> objects, LinMap<F> source, LinMap<F> target, LinMap<F> ident, Flavor fl)
        : c1(std::move(morphisms)),
          c0(std::move(objects)),
          s(std::move(source)),
          t(std::move(target)),
          e(std::move(ident)),
          flavor(fl) {
      s = s.with_domain(c1.space).with_codomain(c0.space);
      t = t.with_domain(c1.space).with_codomain(c0.space);
      e = e.with_domain(c0.space).with_codomain(c1.space);
    }

    F const& field() const noexcept {
      return c1.field();
    }

    friend bool operator==(CatAlgebra const&, CatAlgebra const&) = default;
  };

  //! C1 = C0 = A with s = t = e = id.
  template <ExactField F>
  CatAlgebra<F> discrete_category(Algebra<F> const& a, Flavor flavor) {
    auto id = LinMap<F>::identity(a.space);
    return CatAlgebra<F>(a, a, id, id, id, flavor);
  }

  //! x - e(t(x)) + y, without checking composability.
  template <ExactField F>
  Vec<F> compose_unchecked(CatAlgebra<F> const& c, Vec<F> const& x, Vec<F> const& y) {
    return vec::add(vec::sub(x, c.e(c.t(x))), y);
  }

  template <ExactField F>
  bool composable(CatAlgebra<F> const& c, Vec<F> const& x, Vec<F> const& y) {
    return c.t(x) == c.s(y);
  }

  template <ExactField F>
  Vec<F> compose(CatAlgebra<F> const& c, Vec<F> const& x, Vec<F> const& y) {
    if (!composable(c, x, y)) {
      throw Error(Errc::not_composable, "target of the first morphism differs from the source of the second");
    }
    return compose_unchecked(c, x, y);
  }

  //! e(s f) - f + e(t f), with both inverse laws asserted.
  template <ExactField F>
  Vec<F> invert_morphism(CatAlgebra<F> const& c, Vec<F> const& f) {
    auto es  = c.e(c.s(f));
    auto et  = c.e(c.t(f));
    auto inv = vec::add(vec::sub(es, f), et);
    if (!composable(c, f, inv) || !composable(c, inv, f) || compose_unchecked(c, f, inv) != es
        || compose_unchecked(c, inv, f) != et) {
      throw Error(Errc::internal_invariant_violation, "inverse formula fails on this category");
    }
    return inv;
  }

  //! Basis of C1 x_{C0} C1 inside C1 (+) C1, split into (x, y) pairs.
  template <ExactField F>
  std::vector<std::pair<Vec<F>, Vec<F>>> composable_pairs(CatAlgebra<F> const& c) {
    auto                                   p = pullback_space(c.t, c.s);
    std::vector<std::pair<Vec<F>, Vec<F>>> out;
    auto                                   n = c.c1.dim();
    for (auto const& v : p.basis()) {
      out.emplace_back(vec::slice(v, 0, n), vec::slice(v, n, n));
    }
    return out;
  }

  template <ExactField F>
  ValidationReport validate_cat_algebra(CatAlgebra<F> const& c, std::string subject = {}) {
    auto const& C1 = c.c1;
    auto const& C0 = c.c0;
    auto        d1 = C1.dim(), d0 = C0.dim();
    ValidationReport r{std::move(subject), {}};

    // s, t, e are homomorphisms; tuple (map: 0 = s, 1 = t, 2 = e, i, j)
    auto big = std::max(d1, d0);
    r.add(sweep(c.field(), "ICat1", {3, big, big}, [&](auto const& q) -> Mismatch<F> {
      if (q[0] < 2) {
        if (q[1] >= d1 || q[2] >= d1) {
          return std::nullopt;
        }
        auto const& f = q[0] == 0 ? c.s : c.t;
        return compare<F>(f(C1.basis_product(q[1], q[2])), C0(f.column(q[1]), f.column(q[2])));
      }
      if (q[1] >= d0 || q[2] >= d0) {
        return std::nullopt;
      }
      return compare<F>(c.e(C0.basis_product(q[1], q[2])), C1(c.e.column(q[1]), c.e.column(q[2])));
    }));
    // s e = id, t e = id; tuple (map: 0 = s, 1 = t, a)
    r.add(sweep(c.field(), "ICat2", {2, d0}, [&](auto const& q) {
      auto const& f = q[0] == 0 ? c.s : c.t;
      return compare<F>(f(c.e.column(q[1])), C0.basis(q[1]));
    }));
    // k is a homomorphism on the pullback; tuple (p, q) over its echelon basis
    auto pairs = composable_pairs(c);
    r.add(sweep(c.field(), "ICat3", {pairs.size(), pairs.size()}, [&](auto const& q) {
      auto const& [x, y]   = pairs[q[0]];
      auto const& [x2, y2] = pairs[q[1]];
      return compare<F>(compose_unchecked(c, C1(x, x2), C1(y, y2)),
                        C1(compose_unchecked(c, x, y), compose_unchecked(c, x2, y2)));
    }));
    return r;
  }

  template <ExactField F>
  void require_valid(CatAlgebra<F> const& c, Errc code, std::string const& what) {
    if (!has_flavor(c.c1, c.flavor) || !has_flavor(c.c0, c.flavor)) {
      throw Error(code, what + " is not made of " + flavor_name(c.flavor) + " algebras");
    }
    if (auto const* bad = validate_cat_algebra(c).first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  template <ExactField F>
  CatAlgebra<F> cat_liefy(CatAlgebra<F> const& c) {
    if (c.flavor != Flavor::assoc) {
      throw Error(Errc::invalid_cat_algebra, "only associative categories can be Lie-fied");
    }
    require_valid(c, Errc::invalid_cat_algebra, "categorical algebra");
    return CatAlgebra<F>(liefy(c.c1), liefy(c.c0), c.s, c.t, c.e, Flavor::lie);
  }

}  // namespace xbraid

#endif  // XBRAID_ICAT_HPP_
