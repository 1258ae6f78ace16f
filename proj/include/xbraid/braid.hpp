#ifndef XBRAID_BRAID_HPP_
#define XBRAID_BRAID_HPP_

// Braidings on crossed modules and on internal categories, the bar and
// kernel constructions between them, the comparison isomorphisms, and the
// Lie-fication of braidings.

#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "algebra.hpp"
#include "error.hpp"
#include "icat.hpp"
#include "linspace.hpp"
#include "report.hpp"
#include "xmod.hpp"

namespace xbraid {

  //! {-, -}: N x N -> M on an associative crossed module.
  template <ExactField F>
  struct XBraidingAssoc {
    XModAssoc<F> base;
    BilMap<F>    brace;

    XBraidingAssoc(XModAssoc<F> b, BilMap<F> br) : base(std::move(b)), brace(std::move(br)) {
      brace = brace.with_spaces(base.n().space, base.n().space, base.m().space);
    }
    friend bool operator==(XBraidingAssoc const&, XBraidingAssoc const&) = default;
  };

  //! {-, -}: N x N -> M on a Lie crossed module.
  template <ExactField F>
  struct XBraidingLie {
    XModLie<F> base;
    BilMap<F>  brace;

    XBraidingLie(XModLie<F> b, BilMap<F> br) : base(std::move(b)), brace(std::move(br)) {
      brace = brace.with_spaces(base.n().space, base.n().space, base.m().space);
    }
    friend bool operator==(XBraidingLie const&, XBraidingLie const&) = default;
  };

  //! tau: C0 x C0 -> C1 on an internal category of either flavor.
  template <ExactField F>
  struct CatBraiding {
    CatAlgebra<F> base;
    BilMap<F>     tau;

    CatBraiding(CatAlgebra<F> b, BilMap<F> t) : base(std::move(b)), tau(std::move(t)) {
      tau = tau.with_spaces(base.c0.space, base.c0.space, base.c1.space);
    }
    friend bool operator==(CatBraiding const&, CatBraiding const&) = default;
  };

  //! A pair (F1: C1 -> C1', F0: C0 -> C0'). Nothing is assumed.
  template <ExactField F>
  struct InternalFunctor {
    LinMap<F> f1;
    LinMap<F> f0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Braided crossed modules
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  ValidationReport validate_braiding_xmod_assoc(XBraidingAssoc<F> const& b, std::string subject = {}) {
    auto const& x  = b.base;
    auto const& a  = x.action;
    auto const& M  = x.m();
    auto const& N  = x.n();
    auto const& fd = M.field();
    auto        dm = M.dim(), dn = N.dim();
    auto        br = [&](Vec<F> const& u, Vec<F> const& v) { return b.brace(u, v); };
    // [n, m]_* = n *1 m - m *2 n
    auto star_bracket = [&](Vec<F> const& n, Vec<F> const& m) { return vec::sub(a.left(n, m), a.right(m, n)); };
    ValidationReport r{std::move(subject), {}};

    r.add(sweep(fd, "BAs1", {dn, dn}, [&](auto const& t) {
      return compare<F>(x.d(b.brace.image(t[0], t[1])),
                        vec::sub(N.basis_product(t[0], t[1]), N.basis_product(t[1], t[0])));
    }));
    r.add(sweep(fd, "BAs2", {dm, dm}, [&](auto const& t) {
      return compare<F>(br(x.d(M.basis(t[0])), x.d(M.basis(t[1]))),
                        vec::sub(M.basis_product(t[0], t[1]), M.basis_product(t[1], t[0])));
    }));
    // {d m, n} = -[n, m]_*; tuple (m, n)
    r.add(sweep(fd, "BAs3", {dm, dn}, [&](auto const& t) {
      auto m = M.basis(t[0]), n = N.basis(t[1]);
      return compare<F>(br(x.d(m), n), vec::neg(star_bracket(n, m)));
    }));
    // {n, d m} = [n, m]_*; tuple (n, m)
    r.add(sweep(fd, "BAs4", {dn, dm}, [&](auto const& t) {
      auto n = N.basis(t[0]), m = M.basis(t[1]);
      return compare<F>(br(n, x.d(m)), star_bracket(n, m));
    }));
    // {n, n'n''} = n' *1 {n, n''} + {n, n'} *2 n''
    r.add(sweep(fd, "BAs5", {dn, dn, dn}, [&](auto const& t) {
      auto n = N.basis(t[0]), n1 = N.basis(t[1]), n2 = N.basis(t[2]);
      return compare<F>(br(n, N.basis_product(t[1], t[2])),
                        vec::add(a.left(n1, b.brace.image(t[0], t[2])), a.right(b.brace.image(t[0], t[1]), n2)));
    }));
    // {nn', n''} = n *1 {n', n''} + {n, n''} *2 n'
    r.add(sweep(fd, "BAs6", {dn, dn, dn}, [&](auto const& t) {
      auto n = N.basis(t[0]), n1 = N.basis(t[1]);
      return compare<F>(br(N.basis_product(t[0], t[1]), N.basis(t[2])),
                        vec::add(a.left(n, b.brace.image(t[1], t[2])), a.right(b.brace.image(t[0], t[2]), n1)));
    }));
    return r;
  }

  template <ExactField F>
  ValidationReport validate_braiding_xmod_lie(XBraidingLie<F> const& b, std::string subject = {}) {
    auto const& x  = b.base;
    auto const& a  = x.action;
    auto const& M  = x.m();
    auto const& N  = x.n();
    auto const& fd = M.field();
    auto        dm = M.dim(), dn = N.dim();
    auto        br = [&](Vec<F> const& u, Vec<F> const& v) { return b.brace(u, v); };
    ValidationReport r{std::move(subject), {}};

    r.add(sweep(fd, "BLie1", {dn, dn}, [&](auto const& t) {
      return compare<F>(x.d(b.brace.image(t[0], t[1])), N.basis_product(t[0], t[1]));
    }));
    r.add(sweep(fd, "BLie2", {dm, dm}, [&](auto const& t) {
      return compare<F>(br(x.d(M.basis(t[0])), x.d(M.basis(t[1]))), M.basis_product(t[0], t[1]));
    }));
    // {d m, n} = -n . m; tuple (m, n)
    r.add(sweep(fd, "BLie3", {dm, dn}, [&](auto const& t) {
      auto m = M.basis(t[0]), n = N.basis(t[1]);
      return compare<F>(br(x.d(m), n), vec::neg(a.act(n, m)));
    }));
    // {n, d m} = n . m; tuple (n, m)
    r.add(sweep(fd, "BLie4", {dn, dm}, [&](auto const& t) {
      auto n = N.basis(t[0]), m = M.basis(t[1]);
      return compare<F>(br(n, x.d(m)), a.act(n, m));
    }));
    // {n, [n', n'']} = {[n, n'], n''} - {[n, n''], n'}
    r.add(sweep(fd, "BLie5", {dn, dn, dn}, [&](auto const& t) {
      return compare<F>(br(N.basis(t[0]), N.basis_product(t[1], t[2])),
                        vec::sub(br(N.basis_product(t[0], t[1]), N.basis(t[2])),
                                 br(N.basis_product(t[0], t[2]), N.basis(t[1]))));
    }));
    // {[n, n'], n''} = {n, [n', n'']} - {n', [n, n'']}
    r.add(sweep(fd, "BLie6", {dn, dn, dn}, [&](auto const& t) {
      return compare<F>(br(N.basis_product(t[0], t[1]), N.basis(t[2])),
                        vec::sub(br(N.basis(t[0]), N.basis_product(t[1], t[2])),
                                 br(N.basis(t[1]), N.basis_product(t[0], t[2]))));
    }));
    return r;
  }

  template <ExactField F>
  void require_valid(XBraidingAssoc<F> const& b, Errc code, std::string const& what) {
    require_valid(b.base, code, "crossed module of " + what);
    if (auto const* bad = validate_braiding_xmod_assoc(b).first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  template <ExactField F>
  void require_valid(XBraidingLie<F> const& b, Errc code, std::string const& what) {
    require_valid(b.base, code, "crossed module of " + what);
    if (auto const* bad = validate_braiding_xmod_lie(b).first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  //! The identity crossed module of A braided by the commutator.
  template <ExactField F>
  XBraidingAssoc<F> commutator_braiding(Algebra<F> const& a) {
    auto x = identity_xmod_assoc(a);
    return XBraidingAssoc<F>(std::move(x), a.mult - a.mult.transpose());
  }

  //! The identity crossed module of L braided by the bracket.
  template <ExactField F>
  XBraidingLie<F> bracket_braiding(Algebra<F> const& l) {
    auto x = identity_xmod_lie(l);
    return XBraidingLie<F>(std::move(x), l.mult);
  }

  //! {n, n'}_L = ({n, n'} - {n', n}) / 2 on the Lie-fied crossed module.
  template <ExactField F>
  XBraidingLie<F> xmod_braiding_liefy(XBraidingAssoc<F> const& b) {
    auto const& field = b.base.m().field();
    if (field.characteristic() == 2) {
      throw Error(Errc::char_two, "halving the antisymmetrized braiding needs characteristic other than 2");
    }
    require_valid(b, Errc::invalid_input, "braided crossed module");
    Scalar<F> half = field.one() / field.from_int(2);
    return XBraidingLie<F>(xmod_liefy(b.base), half * (b.brace - b.brace.transpose()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Braided internal categories
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  ValidationReport validate_braiding_cat_assoc(CatBraiding<F> const& b, std::string subject = {}) {
    auto const& c  = b.base;
    auto const& C1 = c.c1;
    auto const& C0 = c.c0;
    auto const& fd = c.field();
    auto        d1 = C1.dim(), d0 = C0.dim();
    auto        k  = [&](Vec<F> const& x, Vec<F> const& y) { return compose_unchecked(c, x, y); };
    auto        tau = [&](Vec<F> const& u, Vec<F> const& v) { return b.tau(u, v); };
    ValidationReport r{std::move(subject), {}};

    // s(tau_{a,b}) = ab, t(tau_{a,b}) = ba
    r.add(sweep(fd, "AsT1", {d0, d0}, [&](auto const& q) -> Mismatch<F> {
      auto const& tab = b.tau.image(q[0], q[1]);
      if (auto bad = compare<F>(c.s(tab), C0.basis_product(q[0], q[1]))) {
        return bad;
      }
      return compare<F>(c.t(tab), C0.basis_product(q[1], q[0]));
    }));
    // tau_{tx,ty} after xy equals yx after tau_{sx,sy}
    r.add(sweep(fd, "AsT2", {d1, d1}, [&](auto const& q) {
      auto x = C1.basis(q[0]), y = C1.basis(q[1]);
      return compare<F>(k(C1.basis_product(q[0], q[1]), tau(c.t(x), c.t(y))),
                        k(tau(c.s(x), c.s(y)), C1.basis_product(q[1], q[0])));
    }));
    // tau_{ab,c} = (tau_{a,c} e(b)) after (e(a) tau_{b,c})
    r.add(sweep(fd, "AsT3", {d0, d0, d0}, [&](auto const& q) {
      auto ea = c.e.column(q[0]), eb = c.e.column(q[1]);
      return compare<F>(tau(C0.basis_product(q[0], q[1]), C0.basis(q[2])),
                        k(C1(ea, b.tau.image(q[1], q[2])), C1(b.tau.image(q[0], q[2]), eb)));
    }));
    // tau_{a,bc} = (e(b) tau_{a,c}) after (tau_{a,b} e(c))
    r.add(sweep(fd, "AsT4", {d0, d0, d0}, [&](auto const& q) {
      auto eb = c.e.column(q[1]), ec = c.e.column(q[2]);
      return compare<F>(tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                        k(C1(b.tau.image(q[0], q[1]), ec), C1(eb, b.tau.image(q[0], q[2]))));
    }));
    return r;
  }

  namespace detail {

    //! LieT1 and LieT2, shared by both Lie braiding validators.
    template <ExactField F>
    void add_lie_t12(ValidationReport& r, CatBraiding<F> const& b) {
      auto const& c  = b.base;
      auto const& C1 = c.c1;
      auto const& C0 = c.c0;
      auto        d1 = C1.dim(), d0 = C0.dim();
      // s(tau_{a,b}) = [a,b], t(tau_{a,b}) = [b,a]
      r.add(sweep(c.field(), "LieT1", {d0, d0}, [&](auto const& q) -> Mismatch<F> {
        auto const& tab = b.tau.image(q[0], q[1]);
        if (auto bad = compare<F>(c.s(tab), C0.basis_product(q[0], q[1]))) {
          return bad;
        }
        return compare<F>(c.t(tab), C0.basis_product(q[1], q[0]));
      }));
      // tau_{tx,ty} after [x,y] equals [y,x] after tau_{sx,sy}
      r.add(sweep(c.field(), "LieT2", {d1, d1}, [&](auto const& q) {
        auto x = C1.basis(q[0]), y = C1.basis(q[1]);
        return compare<F>(compose_unchecked(c, C1.basis_product(q[0], q[1]), b.tau(c.t(x), c.t(y))),
                          compose_unchecked(c, b.tau(c.s(x), c.s(y)), C1.basis_product(q[1], q[0])));
      }));
    }

  }  // namespace detail

  template <ExactField F>
  ValidationReport validate_braiding_cat_lie_ulualan(CatBraiding<F> const& b, std::string subject = {}) {
    auto const& c  = b.base;
    auto const& C1 = c.c1;
    auto const& C0 = c.c0;
    auto        d0 = C0.dim();
    ValidationReport r{std::move(subject), {}};
    detail::add_lie_t12(r, b);
    // tau_{[a,b],c} = [tau_{a,c}, e(b)] + [e(a), tau_{b,c}]
    r.add(sweep(c.field(), "LieB3", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis_product(q[0], q[1]), C0.basis(q[2])),
                        vec::add(C1(b.tau.image(q[0], q[2]), c.e.column(q[1])),
                                 C1(c.e.column(q[0]), b.tau.image(q[1], q[2]))));
    }));
    // tau_{a,[b,c]} = [e(b), tau_{a,c}] + [tau_{a,b}, e(c)]
    r.add(sweep(c.field(), "LieB4", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                        vec::add(C1(c.e.column(q[1]), b.tau.image(q[0], q[2])),
                                 C1(b.tau.image(q[0], q[1]), c.e.column(q[2]))));
    }));
    return r;
  }

  template <ExactField F>
  ValidationReport validate_braiding_cat_lie_alt(CatBraiding<F> const& b, std::string subject = {}) {
    auto const& c  = b.base;
    auto const& C0 = c.c0;
    auto        d0 = C0.dim();
    ValidationReport r{std::move(subject), {}};
    detail::add_lie_t12(r, b);
    // tau_{[a,b],c} = tau_{a,[b,c]} - tau_{b,[a,c]}
    r.add(sweep(c.field(), "LieT3", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis_product(q[0], q[1]), C0.basis(q[2])),
                        vec::sub(b.tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                                 b.tau(C0.basis(q[1]), C0.basis_product(q[0], q[2]))));
    }));
    // tau_{a,[b,c]} = tau_{[a,b],c} - tau_{[a,c],b}
    r.add(sweep(c.field(), "LieT4", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                        vec::sub(b.tau(C0.basis_product(q[0], q[1]), C0.basis(q[2])),
                                 b.tau(C0.basis_product(q[0], q[2]), C0.basis(q[1]))));
    }));
    return r;
  }

  //! The two identities forced by LieT1-2 away from characteristic 2, and
  //! their consequence. Tuple (a, b, c).
  template <ExactField F>
  ValidationReport check_anticoherence(CatBraiding<F> const& b, std::string subject = {}) {
    auto const& c  = b.base;
    auto const& C1 = c.c1;
    auto const& C0 = c.c0;
    if (c.field().characteristic() == 2) {
      throw Error(Errc::char_two, "anticoherence is only available in characteristic other than 2");
    }
    auto d0 = C0.dim();
    ValidationReport r{std::move(subject), {}};
    // tau_{a,[b,c]} = [e(a), tau_{b,c}]
    r.add(sweep(c.field(), "LieAC1", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                        C1(c.e.column(q[0]), b.tau.image(q[1], q[2])));
    }));
    // tau_{[b,c],a} = [tau_{b,c}, e(a)]
    r.add(sweep(c.field(), "LieAC2", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis_product(q[1], q[2]), C0.basis(q[0])),
                        C1(b.tau.image(q[1], q[2]), c.e.column(q[0])));
    }));
    // tau_{a,[b,c]} = -tau_{[b,c],a}
    r.add(sweep(c.field(), "LieAC3", {d0, d0, d0}, [&](auto const& q) {
      return compare<F>(b.tau(C0.basis(q[0]), C0.basis_product(q[1], q[2])),
                        vec::neg(b.tau(C0.basis_product(q[1], q[2]), C0.basis(q[0]))));
    }));
    return r;
  }

  //! The braiding validator matching the flavor of the base; for Lie bases
  //! both axiom systems are reported (LieT1-2 once).
  template <ExactField F>
  ValidationReport validate_braiding_cat(CatBraiding<F> const& b, std::string subject = {}) {
    if (b.base.flavor == Flavor::assoc) {
      return validate_braiding_cat_assoc(b, std::move(subject));
    }
    auto r   = validate_braiding_cat_lie_ulualan(b, subject);
    auto alt = validate_braiding_cat_lie_alt(b);
    r.add(*alt.find("LieT3"));
    r.add(*alt.find("LieT4"));
    return r;
  }

  template <ExactField F>
  void require_valid(CatBraiding<F> const& b, Errc code, std::string const& what) {
    require_valid(b.base, code, "category of " + what);
    auto r = b.base.flavor == Flavor::assoc ? validate_braiding_cat_assoc(b) : validate_braiding_cat_lie_ulualan(b);
    if (auto const* bad = r.first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  //! tau^Lie_{a,b} = tau_{a,b} - tau_{b,a} on the Lie-fied category.
  template <ExactField F>
  CatBraiding<F> cat_braiding_liefy(CatBraiding<F> const& b) {
    if (b.base.flavor != Flavor::assoc) {
      throw Error(Errc::invalid_input, "only associative braidings can be Lie-fied");
    }
    require_valid(b, Errc::invalid_input, "braided categorical algebra");
    return CatBraiding<F>(cat_liefy(b.base), b.tau - b.tau.transpose());
  }

  ////////////////////////////////////////////////////////////////////////
  // Bar and kernel constructions
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    //! C1 = M x| N, C0 = N, s(m,n) = n, t(m,n) = d(m) + n, e(n) = (0,n).
    template <ExactField F>
    CatAlgebra<F> bar_category(Semidirect<F> const& sd, Algebra<F> const& n, LinMap<F> const& d, Flavor flavor) {
      auto const& ds = sd.blocks;
      auto        s  = ds.project_right;
      auto        t  = composite(d, ds.project_left) + ds.project_right;
      return CatAlgebra<F>(sd.algebra, n, s, t, ds.inject_right, flavor);
    }

    //! Multiplication of C1 restricted to a subalgebra K, in K's echelon
    //! coordinates.
    template <ExactField F>
    Algebra<F> restrict_algebra(Algebra<F> const& c1, Subspace<F> const& k) {
      auto space = k.as_space();
      auto mult  = BilMap<F>::from_function(space, space, space, [&](std::size_t i, std::size_t j) {
        return k.coordinates(c1(k.basis()[i], k.basis()[j]));
      });
      return Algebra<F>(space, mult);
    }

    template <ExactField F>
    Vec<F> kernel_coordinates(Subspace<F> const& k, Vec<F> const& v, char const* what) {
      if (!k.contains(v)) {
        throw Error(Errc::internal_invariant_violation, std::string(what) + " leaves ker(s)");
      }
      return k.coordinates(v);
    }

  }  // namespace detail

  //! The bar category of a braided associative crossed module with
  //! tau_{n,n'} = (-{n,n'}, nn').
  template <ExactField F>
  CatBraiding<F> cx_functor(XBraidingAssoc<F> const& b) {
    require_valid(b, Errc::invalid_input, "braided crossed module");
    auto const& x  = b.base;
    auto        sd = semidirect_assoc(x.action);
    auto        c  = detail::bar_category(sd, x.n(), x.boundary, Flavor::assoc);
    auto const& ds = sd.blocks;
    auto tau = BilMap<F>::from_function(c.c0.space, c.c0.space, c.c1.space, [&](std::size_t i, std::size_t j) {
      return vec::sub(ds.inject_right(x.n().basis_product(i, j)), ds.inject_left(b.brace.image(i, j)));
    });
    return CatBraiding<F>(std::move(c), std::move(tau));
  }

  //! Lie bar category: tau_{n,n'} = (-2{n,n'}, [n,n']), the value forced by
  //! s(tau) = [n,n'], t(tau) = [n',n].
  template <ExactField F>
  CatBraiding<F> cx_lie(XBraidingLie<F> const& b) {
    require_valid(b, Errc::invalid_input, "braided crossed module");
    auto const& x   = b.base;
    auto        sd  = semidirect_lie(x.action);
    auto        c   = detail::bar_category(sd, x.n(), x.boundary, Flavor::lie);
    auto const& ds  = sd.blocks;
    Scalar<F>   two = x.m().field().from_int(2);
    auto tau = BilMap<F>::from_function(c.c0.space, c.c0.space, c.c1.space, [&](std::size_t i, std::size_t j) {
      return vec::sub(ds.inject_right(x.n().basis_product(i, j)), ds.inject_left(vec::scale(two, b.brace.image(i, j))));
    });
    return CatBraiding<F>(std::move(c), std::move(tau));
  }

  //! (ker s, C0, (e(a)x, xe(a)), t|ker s) with {a,b} = e(ab) - tau_{a,b}.
  template <ExactField F>
  XBraidingAssoc<F> xc_functor(CatBraiding<F> const& b) {
    if (b.base.flavor != Flavor::assoc) {
      throw Error(Errc::invalid_input, "kernel construction expects an associative category");
    }
    require_valid(b, Errc::invalid_input, "braided categorical algebra");
    auto const& c = b.base;
    auto        k = kernel(c.s);
    auto        M = detail::restrict_algebra(c.c1, k);
    auto const& N = c.c0;
    auto star1    = BilMap<F>::from_function(N.space, M.space, M.space, [&](std::size_t i, std::size_t j) {
      return detail::kernel_coordinates(k, c.c1(c.e.column(i), k.basis()[j]), "e(a)x");
    });
    auto star2    = BilMap<F>::from_function(M.space, N.space, M.space, [&](std::size_t i, std::size_t j) {
      return detail::kernel_coordinates(k, c.c1(k.basis()[i], c.e.column(j)), "xe(a)");
    });
    auto d        = composite(c.t, k.inclusion());
    auto brace    = BilMap<F>::from_function(N.space, N.space, M.space, [&](std::size_t i, std::size_t j) {
      return detail::kernel_coordinates(k, vec::sub(c.e(N.basis_product(i, j)), b.tau.image(i, j)), "{a,b}");
    });
    return XBraidingAssoc<F>(XModAssoc<F>(AssocAction<F>(N, M, star1, star2), d), brace);
  }

  //! Lie kernel construction: a . x = [e(a), x], {a,b} = (e([a,b]) - tau_{a,b}) / 2.
  template <ExactField F>
  XBraidingLie<F> xc_lie(CatBraiding<F> const& b) {
    auto const& c = b.base;
    if (c.flavor != Flavor::lie) {
      throw Error(Errc::invalid_input, "Lie kernel construction expects a Lie category");
    }
    if (c.field().characteristic() == 2) {
      throw Error(Errc::char_two, "Lie kernel construction halves the braiding");
    }
    require_valid(b, Errc::invalid_input, "braided categorical algebra");
    auto k    = kernel(c.s);
    auto M    = detail::restrict_algebra(c.c1, k);
    auto const& N = c.c0;
    Scalar<F> half = c.field().one() / c.field().from_int(2);
    auto dot  = BilMap<F>::from_function(N.space, M.space, M.space, [&](std::size_t i, std::size_t j) {
      return detail::kernel_coordinates(k, c.c1(c.e.column(i), k.basis()[j]), "[e(a),x]");
    });
    auto d     = composite(c.t, k.inclusion());
    auto brace = BilMap<F>::from_function(N.space, N.space, M.space, [&](std::size_t i, std::size_t j) {
      auto v = vec::scale(half, vec::sub(c.e(N.basis_product(i, j)), b.tau.image(i, j)));
      return detail::kernel_coordinates(k, v, "{a,b}");
    });
    return XBraidingLie<F>(XModLie<F>(LieAction<F>(N, M, dot), d), brace);
  }

  ////////////////////////////////////////////////////////////////////////
  // Comparison isomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! f1({n,n'}) = {f2 n, f2 n'}'; tuple (n, n').
  template <ExactField F, class B>
  Entry check_braiding_preserved(XModMorphism<F> const& phi, B const& src, B const& tgt) {
    auto dn = src.base.n().dim();
    return sweep(phi.f1.field(), "BXH", {dn, dn}, [&](auto const& t) {
      return compare<F>(phi.f1(src.brace.image(t[0], t[1])), tgt.brace(phi.f2.column(t[0]), phi.f2.column(t[1])));
    });
  }

  //! Morphism axioms, braiding preservation and bijectivity.
  template <ExactField F, class B>
  ValidationReport validate_braided_xmod_iso(XModMorphism<F> const& phi, B const& src, B const& tgt, std::string subject = {}) {
    auto r = validate_xmod_morphism(phi, src.base, tgt.base, std::move(subject));
    r.add(check_braiding_preserved(phi, src, tgt));
    r.add(check_bijections<F>({phi.f1, phi.f2}));
    return r;
  }

  //! (alpha_M, id_N) from b to xc(cx(b)), alpha_M(m) = (m, 0) read in the
  //! echelon coordinates of ker(s) of the bar category.
  template <ExactField F>
  XModMorphism<F> alpha_iso(XBraidingAssoc<F> const& b, CatBraiding<F> const& bar, XBraidingAssoc<F> const& round) {
    auto const& M = b.base.m();
    auto const& N = b.base.n();
    auto        k = kernel(bar.base.s);
    auto f1 = LinMap<F>::from_function(M.space, round.base.m().space, [&](std::size_t j) {
      return detail::kernel_coordinates(k, vec::concat(M.basis(j), N.space.zero()), "(m,0)");
    });
    return XModMorphism<F>{f1, LinMap<F>::identity(N.space).with_codomain(round.base.n().space)};
  }

  template <ExactField F>
  XModMorphism<F> alpha_iso(XBraidingAssoc<F> const& b) {
    auto bar = cx_functor(b);
    return alpha_iso(b, bar, xc_functor(bar));
  }

  template <ExactField F>
  ValidationReport validate_internal_functor(InternalFunctor<F> const& fun,
                                             CatAlgebra<F> const&      src,
                                             CatAlgebra<F> const&      tgt,
                                             std::string               subject = {}) {
    require_compatible(fun.f1.domain(), src.c1.space, "domain of F1");
    require_compatible(fun.f1.codomain(), tgt.c1.space, "codomain of F1");
    require_compatible(fun.f0.domain(), src.c0.space, "domain of F0");
    require_compatible(fun.f0.codomain(), tgt.c0.space, "codomain of F0");
    auto d1 = src.c1.dim(), d0 = src.c0.dim();
    auto big = std::max(d1, d0);
    ValidationReport r{std::move(subject), {}};
    // F1, F0 homomorphisms; tuple (map: 0 = F1, 1 = F0, i, j)
    r.add(sweep(src.field(), "IFun1", {2, big, big}, [&](auto const& q) -> Mismatch<F> {
      if (q[0] == 0) {
        if (q[1] >= d1 || q[2] >= d1) {
          return std::nullopt;
        }
        return compare<F>(fun.f1(src.c1.basis_product(q[1], q[2])), tgt.c1(fun.f1.column(q[1]), fun.f1.column(q[2])));
      }
      if (q[1] >= d0 || q[2] >= d0) {
        return std::nullopt;
      }
      return compare<F>(fun.f0(src.c0.basis_product(q[1], q[2])), tgt.c0(fun.f0.column(q[1]), fun.f0.column(q[2])));
    }));
    // s'F1 = F0 s, t'F1 = F0 t on C1 basis; F1 e = e'F0 on C0 basis.
    // Tuple (law: 0 = s, 1 = t, 2 = e, i).
    r.add(sweep(src.field(), "IFun2", {3, big}, [&](auto const& q) -> Mismatch<F> {
      if (q[0] < 2) {
        if (q[1] >= d1) {
          return std::nullopt;
        }
        auto const& f  = q[0] == 0 ? src.s : src.t;
        auto const& f2 = q[0] == 0 ? tgt.s : tgt.t;
        return compare<F>(f2(fun.f1.column(q[1])), fun.f0(f.column(q[1])));
      }
      if (q[1] >= d0) {
        return std::nullopt;
      }
      return compare<F>(fun.f1(src.e.column(q[1])), tgt.e(fun.f0.column(q[1])));
    }));
    return r;
  }

  //! Functor laws, F1(tau_{a,b}) = tau'_{F0 a, F0 b}, and bijectivity.
  template <ExactField F>
  ValidationReport validate_braided_internal_iso(InternalFunctor<F> const& fun,
                                                 CatBraiding<F> const&     src,
                                                 CatBraiding<F> const&     tgt,
                                                 std::string               subject = {}) {
    auto r  = validate_internal_functor(fun, src.base, tgt.base, std::move(subject));
    auto d0 = src.base.c0.dim();
    r.add(sweep(src.base.field(), "BIFun", {d0, d0}, [&](auto const& q) {
      return compare<F>(fun.f1(src.tau.image(q[0], q[1])), tgt.tau(fun.f0.column(q[0]), fun.f0.column(q[1])));
    }));
    r.add(check_bijections<F>({fun.f1, fun.f0}));
    return r;
  }

  //! (beta_C1, id_C0) from b to cx(xc(b)), beta_C1(x) = (x - e(s x), s x).
  template <ExactField F>
  InternalFunctor<F> beta_iso(CatBraiding<F> const& b, CatBraiding<F> const& round) {
    auto const& c = b.base;
    auto        k = kernel(c.s);
    auto const& target = round.base.c1;
    if (target.dim() != k.dim() + c.c0.dim()) {
      throw Error(Errc::internal_invariant_violation, "roundtrip changed dimensions");
    }
    auto f1 = LinMap<F>::from_function(c.c1.space, target.space, [&](std::size_t j) {
      auto x   = c.c1.basis(j);
      auto sx  = c.s(x);
      auto top = detail::kernel_coordinates(k, vec::sub(x, c.e(sx)), "x - e(s x)");
      return vec::concat(top, sx);
    });
    return InternalFunctor<F>{f1, LinMap<F>::identity(c.c0.space).with_codomain(round.base.c0.space)};
  }

  template <ExactField F>
  InternalFunctor<F> beta_iso(CatBraiding<F> const& b) {
    return beta_iso(b, cx_functor(xc_functor(b)));
  }

}  // namespace xbraid

#endif  // XBRAID_BRAID_HPP_
