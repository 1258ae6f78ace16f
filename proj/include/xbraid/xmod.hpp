#ifndef XBRAID_XMOD_HPP_
#define XBRAID_XMOD_HPP_

// Crossed modules of associative and Lie algebras and their morphisms.

#include <string>
#include <utility>

#include "action.hpp"
#include "algebra.hpp"
#include "error.hpp"
#include "linspace.hpp"
#include "report.hpp"

namespace xbraid {

  template <ExactField F>
  struct XModAssoc {
    AssocAction<F> action;
    LinMap<F>      boundary;  // M -> N

    XModAssoc(AssocAction<F> a, LinMap<F> d) : action(std::move(a)), boundary(std::move(d)) {
      boundary = boundary.with_domain(action.module.space).with_codomain(action.actor.space);
    }

    Algebra<F> const& m() const noexcept {
      return action.module;
    }
    Algebra<F> const& n() const noexcept {
      return action.actor;
    }
    Vec<F> d(Vec<F> const& x) const {
      return boundary(x);
    }

    friend bool operator==(XModAssoc const&, XModAssoc const&) = default;
  };

  template <ExactField F>
  struct XModLie {
    LieAction<F> action;
    LinMap<F>    boundary;  // M -> N

    XModLie(LieAction<F> a, LinMap<F> d) : action(std::move(a)), boundary(std::move(d)) {
      boundary = boundary.with_domain(action.module.space).with_codomain(action.actor.space);
    }

    Algebra<F> const& m() const noexcept {
      return action.module;
    }
    Algebra<F> const& n() const noexcept {
      return action.actor;
    }
    Vec<F> d(Vec<F> const& x) const {
      return boundary(x);
    }

    friend bool operator==(XModLie const&, XModLie const&) = default;
  };

  //! A pair of linear maps f1: M -> M', f2: N -> N'. Nothing is assumed.
  template <ExactField F>
  struct XModMorphism {
    LinMap<F> f1;
    LinMap<F> f2;
  };

  template <ExactField F>
  ValidationReport validate_xmod_assoc(XModAssoc<F> const& x, std::string subject = {}) {
    auto const& a = x.action;
    auto const& M = x.m();
    auto const& N = x.n();
    auto        dm = M.dim(), dn = N.dim();
    ValidationReport r{std::move(subject), {}};

    // d(n *1 m) = n d(m), d(m *2 n) = d(m) n
    r.add(sweep(M.field(), "XAs1", {dn, dm}, [&](auto const& t) -> Mismatch<F> {
      auto n = N.basis(t[0]), m = M.basis(t[1]);
      if (auto bad = compare<F>(x.d(a.left(n, m)), N(n, x.d(m)))) {
        return bad;
      }
      return compare<F>(x.d(a.right(m, n)), N(x.d(m), n));
    }));
    // d(m) *1 m' = m m' = m *2 d(m')
    r.add(sweep(M.field(), "XAs2", {dm, dm}, [&](auto const& t) -> Mismatch<F> {
      auto m = M.basis(t[0]), m2 = M.basis(t[1]);
      auto prod = M.basis_product(t[0], t[1]);
      if (auto bad = compare<F>(a.left(x.d(m), m2), prod)) {
        return bad;
      }
      return compare<F>(a.right(m, x.d(m2)), prod);
    }));
    return r;
  }

  template <ExactField F>
  ValidationReport validate_xmod_lie(XModLie<F> const& x, std::string subject = {}) {
    auto const& a = x.action;
    auto const& M = x.m();
    auto const& N = x.n();
    auto        dm = M.dim(), dn = N.dim();
    ValidationReport r{std::move(subject), {}};

    // d(n . m) = [n, d(m)]
    r.add(sweep(M.field(), "XLie1", {dn, dm}, [&](auto const& t) {
      auto n = N.basis(t[0]), m = M.basis(t[1]);
      return compare<F>(x.d(a.act(n, m)), N(n, x.d(m)));
    }));
    // d(m) . m' = [m, m']
    r.add(sweep(M.field(), "XLie2", {dm, dm}, [&](auto const& t) {
      return compare<F>(a.act(x.d(M.basis(t[0])), M.basis(t[1])), M.basis_product(t[0], t[1]));
    }));
    return r;
  }

  //! Algebra flavors, action axioms, boundary homomorphism, then the crossed
  //! module axioms; throws with `code` at the first failure.
  template <ExactField F>
  void require_valid(XModAssoc<F> const& x, Errc code, std::string const& what) {
    require_valid(x.action, code, "action of " + what);
    if (!check_homomorphism(x.boundary, x.m(), x.n(), "HomF1").passed) {
      throw Error(code, "boundary of " + what + " is not an algebra homomorphism");
    }
    if (auto const* bad = validate_xmod_assoc(x).first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  template <ExactField F>
  void require_valid(XModLie<F> const& x, Errc code, std::string const& what) {
    require_valid(x.action, code, "action of " + what);
    if (!check_homomorphism(x.boundary, x.m(), x.n(), "HomF1").passed) {
      throw Error(code, "boundary of " + what + " is not an algebra homomorphism");
    }
    if (auto const* bad = validate_xmod_lie(x).first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  //! (A, A, (*, *), id)
  template <ExactField F>
  XModAssoc<F> identity_xmod_assoc(Algebra<F> const& a) {
    if (!is_associative(a)) {
      throw Error(Errc::wrong_flavor, "identity crossed module needs an associative algebra");
    }
    return XModAssoc<F>(self_action(a), LinMap<F>::identity(a.space));
  }

  //! (L, L, [-, -], id)
  template <ExactField F>
  XModLie<F> identity_xmod_lie(Algebra<F> const& l) {
    if (!is_lie(l)) {
      throw Error(Errc::wrong_flavor, "identity crossed module needs a Lie algebra");
    }
    return XModLie<F>(adjoint_action(l), LinMap<F>::identity(l.space));
  }

  template <ExactField F>
  XModLie<F> xmod_liefy(XModAssoc<F> const& x) {
    require_valid(x, Errc::invalid_xmod, "crossed module");
    return XModLie<F>(induced_lie_action(x.action), x.boundary);
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    template <ExactField F>
    void require_morphism_shape(XModMorphism<F> const& phi,
                                Algebra<F> const& m,
                                Algebra<F> const& n,
                                Algebra<F> const& m2,
                                Algebra<F> const& n2) {
      require_compatible(phi.f1.domain(), m.space, "domain of f1");
      require_compatible(phi.f1.codomain(), m2.space, "codomain of f1");
      require_compatible(phi.f2.domain(), n.space, "domain of f2");
      require_compatible(phi.f2.codomain(), n2.space, "codomain of f2");
    }

    //! d' f1 = f2 d on basis vectors of M.
    template <ExactField F>
    Entry check_square(std::string tag, LinMap<F> const& f1, LinMap<F> const& f2, LinMap<F> const& d, LinMap<F> const& d2) {
      return sweep(f1.field(), std::move(tag), {f1.domain().dim()}, [&](auto const& t) {
        return compare<F>(d2(f1.column(t[0])), f2(d.column(t[0])));
      });
    }

  }  // namespace detail

  template <ExactField F>
  ValidationReport validate_xmod_morphism(XModMorphism<F> const& phi,
                                          XModAssoc<F> const&    src,
                                          XModAssoc<F> const&    tgt,
                                          std::string            subject = {}) {
    detail::require_morphism_shape(phi, src.m(), src.n(), tgt.m(), tgt.n());
    ValidationReport r{std::move(subject), {}};
    r.add(check_homomorphism(phi.f1, src.m(), tgt.m(), "HomF1"));
    r.add(check_homomorphism(phi.f2, src.n(), tgt.n(), "HomF2"));
    auto const& a = src.action;
    auto const& b = tgt.action;
    // f1(n *1 m) = f2(n) *1' f1(m), f1(m *2 n) = f1(m) *2' f2(n)
    r.add(sweep(src.m().field(), "XAssH1", {src.n().dim(), src.m().dim()}, [&](auto const& t) -> Mismatch<F> {
      auto n = src.n().basis(t[0]), m = src.m().basis(t[1]);
      if (auto bad = compare<F>(phi.f1(a.left(n, m)), b.left(phi.f2(n), phi.f1(m)))) {
        return bad;
      }
      return compare<F>(phi.f1(a.right(m, n)), b.right(phi.f1(m), phi.f2(n)));
    }));
    r.add(detail::check_square("XAssH2", phi.f1, phi.f2, src.boundary, tgt.boundary));
    return r;
  }

  template <ExactField F>
  ValidationReport validate_xmod_morphism(XModMorphism<F> const& phi,
                                          XModLie<F> const&      src,
                                          XModLie<F> const&      tgt,
                                          std::string            subject = {}) {
    detail::require_morphism_shape(phi, src.m(), src.n(), tgt.m(), tgt.n());
    ValidationReport r{std::move(subject), {}};
    r.add(check_homomorphism(phi.f1, src.m(), tgt.m(), "HomF1"));
    r.add(check_homomorphism(phi.f2, src.n(), tgt.n(), "HomF2"));
    // f1(n . m) = f2(n) .' f1(m)
    r.add(sweep(src.m().field(), "XLieH1", {src.n().dim(), src.m().dim()}, [&](auto const& t) {
      auto n = src.n().basis(t[0]), m = src.m().basis(t[1]);
      return compare<F>(phi.f1(src.action.act(n, m)), tgt.action.act(phi.f2(n), phi.f1(m)));
    }));
    r.add(detail::check_square("XLieH2", phi.f1, phi.f2, src.boundary, tgt.boundary));
    return r;
  }

  //! Every listed map is a linear bijection. A failing witness has tuple
  //! (map position); lhs is a nonzero kernel vector and rhs its image, or,
  //! when the kernel is zero, lhs/rhs are the domain and codomain dimensions.
  template <ExactField F>
  Entry check_bijections(std::vector<LinMap<F>> const& maps) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      auto const& f = maps[i];
      if (f.is_bijective()) {
        continue;
      }
      auto k = kernel(f);
      if (k.dim() > 0) {
        auto v = k.basis().front();
        return make_entry("Iso", Witness{{i}, render(f.field(), v), render(f.field(), f(v))});
      }
      return make_entry("Iso", Witness{{i}, {std::to_string(f.domain().dim())}, {std::to_string(f.codomain().dim())}});
    }
    return make_entry("Iso", std::nullopt);
  }

}  // namespace xbraid

#endif  // XBRAID_XMOD_HPP_
