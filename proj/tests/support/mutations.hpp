#ifndef XBRAID_TESTS_MUTATIONS_HPP_
#define XBRAID_TESTS_MUTATIONS_HPP_

// One hand-checkable mutated fixture per axiom tag. Each run returns whether
// the structure the tag presupposes still validates, and the report that
// owns the tag. Entries are deltas or replacements of single structure
// constants on small fixtures.

#include <functional>
#include <string>
#include <vector>

#include <xbraid/braid.hpp>
#include <xbraid/groupx.hpp>
#include <xbraid/natensor.hpp>

#include "mutate.hpp"

namespace xbraid::testing {

  using Q = Rationals;

  struct MutationRun {
    bool             prerequisites = false;
    ValidationReport report;
  };

  struct Mutation {
    std::string                  tag;
    std::string                  fixture;
    std::function<MutationRun()> run;
  };

  namespace mut {

    inline Q const q{};

    inline Scalar<Q> n(long v) {
      return q.from_int(v);
    }

    inline Algebra<Q> algebra(std::vector<std::string> labels, std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>> const& products) {
      Space<Q> s(q, std::move(labels));
      auto     m = BilMap<Q>::zero(s, s, s);
      for (auto [i, j, k, v] : products) {
        m = with_entry(m, i * s.dim() + j, k, n(v));
      }
      return Algebra<Q>(s, m);
    }

    //! x*x = y
    inline Algebra<Q> nil2() {
      return algebra({"x", "y"}, {{0, 0, 1, 1}});
    }

    //! x*w = y on basis x, w, y
    inline Algebra<Q> nil3() {
      return algebra({"x", "w", "y"}, {{0, 1, 2, 1}});
    }

    //! Heis3 plus a central w: [x,y] = z.
    inline Algebra<Q> heis3w() {
      return algebra({"x", "y", "z", "w"}, {{0, 1, 2, 1}, {1, 0, 2, -1}});
    }

    inline Algebra<Q> cat(std::string const& name) {
      return catalog(name, q);
    }

    template <class M>
    M bumped(M const& f, std::size_t i, std::size_t k, long v) {
      if constexpr (std::is_same_v<M, LinMap<Q>>) {
        return with_entry(f, i, k, f.column(i)[k] + n(v));
      } else {
        auto nr = f.right().dim();
        return with_entry(f, i, k, f.image(i / nr, i % nr)[k] + n(v));
      }
    }

    inline bool ok(Algebra<Q> const& a, Flavor f) {
      return validate_algebra(a, f).passed();
    }
    inline bool ok(AssocAction<Q> const& a) {
      return ok(a.actor, Flavor::assoc) && ok(a.module, Flavor::assoc);
    }
    inline bool ok(LieAction<Q> const& a) {
      return ok(a.actor, Flavor::lie) && ok(a.module, Flavor::lie);
    }
    inline bool ok_full(AssocAction<Q> const& a) {
      return ok(a) && validate_assoc_action(a).passed();
    }
    inline bool ok_full(LieAction<Q> const& a) {
      return ok(a) && validate_lie_action(a).passed();
    }
    template <class X>
    bool ok_pre(X const& x) {
      return ok_full(x.action) && check_homomorphism(x.boundary, x.m(), x.n(), "HomF1").passed;
    }
    inline bool ok_full(XModAssoc<Q> const& x) {
      return ok_pre(x) && validate_xmod_assoc(x).passed();
    }
    inline bool ok_full(XModLie<Q> const& x) {
      return ok_pre(x) && validate_xmod_lie(x).passed();
    }
    inline bool ok_full(XBraidingAssoc<Q> const& b) {
      return ok_full(b.base) && validate_braiding_xmod_assoc(b).passed();
    }
    inline bool ok_full(XBraidingLie<Q> const& b) {
      return ok_full(b.base) && validate_braiding_xmod_lie(b).passed();
    }
    inline bool ok_full(CatAlgebra<Q> const& c) {
      return ok(c.c1, c.flavor) && ok(c.c0, c.flavor) && validate_cat_algebra(c).passed();
    }
    inline bool ok_full(CatBraiding<Q> const& b) {
      return ok_full(b.base) && validate_braiding_cat(b).passed();
    }

    inline XBraidingAssoc<Q> with_brace(XBraidingAssoc<Q> const& b, BilMap<Q> br) {
      return XBraidingAssoc<Q>(b.base, std::move(br));
    }
    inline XBraidingLie<Q> with_brace(XBraidingLie<Q> const& b, BilMap<Q> br) {
      return XBraidingLie<Q>(b.base, std::move(br));
    }

    //! Ab(2) -> Ab(2), d = projection onto the second coordinate, zero action.
    inline XBraidingAssoc<Q> proj_assoc() {
      auto ab = cat("Ab(2)");
      LinMap<Q> d(ab.space, ab.space, {ab.space.zero(), ab.basis(1)});
      return XBraidingAssoc<Q>(XModAssoc<Q>(zero_assoc_action(ab, ab), d), BilMap<Q>::zero(ab.space, ab.space, ab.space));
    }
    inline XBraidingLie<Q> proj_lie() {
      auto ab = cat("Ab(2)");
      LinMap<Q> d(ab.space, ab.space, {ab.space.zero(), ab.basis(1)});
      return XBraidingLie<Q>(XModLie<Q>(zero_lie_action(ab, ab), d), BilMap<Q>::zero(ab.space, ab.space, ab.space));
    }

    //! Ab(1) -> Ab(1), zero everything; brace value v.
    inline XBraidingAssoc<Q> trivial_assoc(long v) {
      auto ab = cat("Ab(1)");
      auto br = with_entry(BilMap<Q>::zero(ab.space, ab.space, ab.space), 0, 0, n(v));
      return XBraidingAssoc<Q>(XModAssoc<Q>(zero_assoc_action(ab, ab), LinMap<Q>::zero(ab.space, ab.space)), br);
    }

    //! M = Ab(1) -> N = nil2, d = 0, zero action, zero brace.
    inline XBraidingAssoc<Q> nil2_over_line() {
      auto N = nil2();
      auto M = cat("Ab(1)");
      return XBraidingAssoc<Q>(XModAssoc<Q>(zero_assoc_action(N, M), LinMap<Q>::zero(M.space, N.space)), BilMap<Q>::zero(N.space, N.space, M.space));
    }

    //! N = heis3w, M = span(c, k) abelian, d c = z, d k = 0, w . c = k.
    //! The brace lifts [n,n'] through d and is forced on im d; it passes
    //! BLie1-4 while w . {x,y} = k breaks BLie5.
    inline XBraidingLie<Q> heis_kernel_braiding() {
      auto     N = heis3w();
      Space<Q> ms(q, {"c", "k"});
      Algebra<Q> M(ms, BilMap<Q>::zero(ms, ms, ms));
      auto dot = with_entry(BilMap<Q>::zero(N.space, ms, ms), 3 * 2 + 0, 1, n(1));
      LinMap<Q> d(ms, N.space, {N.basis(2), N.space.zero()});
      auto br = BilMap<Q>::zero(N.space, N.space, ms);
      br = with_entry(br, 0 * 4 + 1, 0, n(1));
      br = with_entry(br, 1 * 4 + 0, 0, n(-1));
      br = with_entry(br, 2 * 4 + 3, 1, n(-1));
      br = with_entry(br, 3 * 4 + 2, 1, n(1));
      return XBraidingLie<Q>(XModLie<Q>(LieAction<Q>(N, M, dot), d), br);
    }

    //! The bar category of a Lie crossed module with tau = (-2{n,n'}, [n,n'])
    //! for any brace, valid or not.
    inline CatBraiding<Q> bar_lie_unchecked(XBraidingLie<Q> const& b) {
      auto const& x   = b.base;
      auto        sd  = semidirect_lie(x.action);
      auto        c   = detail::bar_category(sd, x.n(), x.boundary, Flavor::lie);
      auto const& ds  = sd.blocks;
      auto tau = BilMap<Q>::from_function(c.c0.space, c.c0.space, c.c1.space, [&](std::size_t i, std::size_t j) {
        return vec::sub(ds.inject_right(x.n().basis_product(i, j)), ds.inject_left(vec::scale(n(2), b.brace.image(i, j))));
      });
      return CatBraiding<Q>(std::move(c), std::move(tau));
    }

    //! Over F2: L = Ab(2) on a, b acting on M = span(m) by a . m = m,
    //! b . m = 0, d = 0, tau_{a,b} = (m, 0) and zero elsewhere. LieB3 holds
    //! and LieB4 fails at (a, a, b); the halving that ties them needs 2 != 0.
    inline CatBraiding<PrimeField> f2_line_bar() {
      PrimeField f(2);
      Space<PrimeField> ls(f, {"a", "b"});
      Algebra<PrimeField> L(ls, BilMap<PrimeField>::zero(ls, ls, ls));
      auto M   = catalog("Ab(1)", f);
      auto dot = with_entry(BilMap<PrimeField>::zero(ls, M.space, M.space), 0, 0, f.from_int(1));
      auto sd  = semidirect_lie(LieAction<PrimeField>(L, M, dot));
      auto c   = detail::bar_category(sd, L, LinMap<PrimeField>::zero(M.space, ls), Flavor::lie);
      auto tau = BilMap<PrimeField>::from_function(ls, ls, c.c1.space, [&](std::size_t i, std::size_t j) {
        auto mu = M.space.zero();
        if (i == 0 && j == 1) {
          mu = M.basis(0);
        }
        return sd.blocks.inject_left(mu);
      });
      return CatBraiding<PrimeField>(std::move(c), std::move(tau));
    }

    inline bool ok_f2(CatAlgebra<PrimeField> const& c) {
      return validate_algebra(c.c1, Flavor::lie).passed() && validate_algebra(c.c0, Flavor::lie).passed() &&
             validate_cat_algebra(c).passed();
    }

    inline CatBraiding<Q> with_tau(CatBraiding<Q> const& b, BilMap<Q> tau) {
      return CatBraiding<Q>(b.base, std::move(tau));
    }

    //! The tensor square of m with the relation subspace dropped.
    inline TensorSquare<Q> unquotiented_square(Algebra<Q> const& m) {
      auto plain = detail::plain_tensor_space(m.space);
      auto rel   = Subspace<Q>::span(plain, {});
      auto qt    = quotient(plain, rel);
      auto con   = detail::contraction(m, plain);
      auto br    = BilMap<Q>::from_function(qt.space, qt.space, qt.space, [&](std::size_t i, std::size_t j) {
        return qt.projection(detail::tensor(m, con(qt.section.column(i)), con(qt.section.column(j))));
      });
      auto dim   = m.dim();
      auto pure  = BilMap<Q>::from_function(m.space, m.space, qt.space, [&](std::size_t i, std::size_t j) {
        return qt.projection.column(i * dim + j);
      });
      return TensorSquare<Q>{m, plain, rel, qt, Algebra<Q>(qt.space, br), pure};
    }

    //! (G, 1, trivial, trivial) for an abelian G with a trivial braiding.
    inline GroupXMod trivial_group_xmod(FiniteGroup const& g) {
      auto o = g.order();
      GroupXMod::Table act(o, std::vector<std::size_t>(o));
      for (auto& row : act) {
        for (std::size_t i = 0; i < o; ++i) {
          row[i] = i;
        }
      }
      return GroupXMod{g, g, act, std::vector<std::size_t>(o, g.identity()),
                       GroupXMod::Table(o, std::vector<std::size_t>(o, g.identity()))};
    }

    inline std::size_t el(FiniteGroup const& g, std::string const& label) {
      for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.label(i) == label) {
          return i;
        }
      }
      throw Error(Errc::unknown_reference, label);
    }

    inline MutationRun group_run(GroupXMod const& x, bool braid) {
      try {
        x.check_structure();
      } catch (Error const&) {
        return {false, {}};
      }
      if (!braid) {
        return {true, validate_group_xmod(x)};
      }
      return {validate_group_xmod(x).passed(), validate_group_braiding(x)};
    }

  }  // namespace mut

  inline std::vector<Mutation> const& mutations() {
    using namespace mut;
    static std::vector<Mutation> const all = [] {
      std::vector<Mutation> v;
      auto add = [&](std::string tag, std::string fixture, std::function<MutationRun()> run) {
        v.push_back(Mutation{std::move(tag), std::move(fixture), std::move(run)});
      };

      // algebras
      add("Assoc", "Upper(2) with e22*e11 = -e11", [] {
        auto a = cat("Upper(2)");
        return MutationRun{true, validate_algebra(Algebra<Q>(a.space, with_entry(a.mult, 3, 0, n(-1))), Flavor::assoc)};
      });
      add("Alt", "Ab(2) with a1*a1 = -a2", [] {
        auto a = cat("Ab(2)");
        return MutationRun{true, validate_algebra(Algebra<Q>(a.space, with_entry(a.mult, 0, 1, n(-1))), Flavor::lie)};
      });
      add("Jacobi", "sl2 with [f,e] = 2e, [e,f] = -2e", [] {
        auto a = cat("sl2");
        auto m = with_entry(with_entry(a.mult, 3, 0, n(2)), 1, 0, n(-2));
        return MutationRun{true, validate_algebra(Algebra<Q>(a.space, m), Flavor::lie)};
      });
      add("Leib", "Ab(1) with x*x = -x", [] {
        auto a = cat("Ab(1)");
        return MutationRun{true, validate_algebra(Algebra<Q>(a.space, with_entry(a.mult, 0, 0, n(-1))), Flavor::leibniz)};
      });

      // actions
      auto assoc_action = [&](std::string tag, std::string fixture, std::function<AssocAction<Q>()> make) {
        add(std::move(tag), std::move(fixture), [make] {
          auto a = make();
          return MutationRun{ok(a), validate_assoc_action(a)};
        });
      };
      assoc_action("AAs1", "zero action of Ab(1) on nil3 with n *1 w = x", [] {
        auto a = zero_assoc_action(cat("Ab(1)"), nil3());
        return AssocAction<Q>(a.actor, a.module, with_entry(a.star1, 1, 0, n(1)), a.star2);
      });
      assoc_action("AAs2", "zero action of Ab(1) on Ab(2) with n *1 a1 = -2 a2, a2 *2 n = 2 a1", [] {
        auto a = zero_assoc_action(cat("Ab(1)"), cat("Ab(2)"));
        return AssocAction<Q>(a.actor, a.module, with_entry(a.star1, 0, 1, n(-2)), with_entry(a.star2, 1, 0, n(2)));
      });
      assoc_action("AAs3", "zero action of Ab(1) on nil3 with n *1 x = 2x, n *1 y = 2y", [] {
        auto a = zero_assoc_action(cat("Ab(1)"), nil3());
        return AssocAction<Q>(a.actor, a.module, with_entry(with_entry(a.star1, 0, 0, n(2)), 2, 2, n(2)), a.star2);
      });
      assoc_action("AAs4", "zero action of Ab(1) on nil3 with y *2 n = -y, w *2 n = -w", [] {
        auto a = zero_assoc_action(cat("Ab(1)"), nil3());
        return AssocAction<Q>(a.actor, a.module, a.star1, with_entry(with_entry(a.star2, 2, 2, n(-1)), 1, 1, n(-1)));
      });
      assoc_action("AAs5", "self action of Upper(2) with two entries of *1 changed", [] {
        auto a = self_action(cat("Upper(2)"));
        return AssocAction<Q>(a.actor, a.module, with_entry(with_entry(a.star1, 5, 1, n(-1)), 6, 0, n(0)), a.star2);
      });
      assoc_action("AAs6", "zero action of Ab(1) on nil3 with x *2 n = w", [] {
        auto a = zero_assoc_action(cat("Ab(1)"), nil3());
        return AssocAction<Q>(a.actor, a.module, a.star1, with_entry(a.star2, 0, 1, n(1)));
      });
      auto lie_action = [&](std::string tag, std::string fixture, std::function<LieAction<Q>()> make) {
        add(std::move(tag), std::move(fixture), [make] {
          auto a = make();
          return MutationRun{ok(a), validate_lie_action(a)};
        });
      };
      lie_action("ALie1", "adjoint action of sl2 with two entries of . zeroed", [] {
        auto a = adjoint_action(cat("sl2"));
        return LieAction<Q>(a.actor, a.module, with_entry(with_entry(a.dot, 2, 2, n(0)), 1, 1, n(0)));
      });
      lie_action("ALie2", "adjoint action of sl2 with two entries of . changed", [] {
        auto a = adjoint_action(cat("sl2"));
        return LieAction<Q>(a.actor, a.module, with_entry(with_entry(a.dot, 6, 2, n(1)), 5, 0, n(2)));
      });

      // crossed modules
      add("XAs1", "identity crossed module of Upper(2) with d(e12) = 2 e12", [] {
        auto x = identity_xmod_assoc(cat("Upper(2)"));
        XModAssoc<Q> y(x.action, with_entry(x.boundary, 1, 1, n(2)));
        return MutationRun{ok_pre(y), validate_xmod_assoc(y)};
      });
      add("XAs2", "Ab(1) acting by zero on nil2, d = 0", [] {
        XModAssoc<Q> y(zero_assoc_action(cat("Ab(1)"), nil2()), LinMap<Q>::zero(nil2().space, cat("Ab(1)").space));
        return MutationRun{ok_pre(y), validate_xmod_assoc(y)};
      });
      add("XLie1", "identity crossed module of Heis3 with x . x = 2y", [] {
        auto x = identity_xmod_lie(cat("Heis3"));
        XModLie<Q> y(LieAction<Q>(x.n(), x.m(), with_entry(x.action.dot, 0, 1, n(2))), x.boundary);
        return MutationRun{ok_pre(y), validate_xmod_lie(y)};
      });
      add("XLie2", "Ab(1) acting by zero on Heis3, d = 0", [] {
        XModLie<Q> y(zero_lie_action(cat("Ab(1)"), cat("Heis3")), LinMap<Q>::zero(cat("Heis3").space, cat("Ab(1)").space));
        return MutationRun{ok_pre(y), validate_xmod_lie(y)};
      });

      // morphisms of braided crossed modules, phi = identity with an edit
      auto assoc_iso = [&](std::string tag, std::string fixture, XBraidingAssoc<Q> src, XBraidingAssoc<Q> tgt, std::function<XModMorphism<Q>(XBraidingAssoc<Q> const&)> make) {
        add(std::move(tag), std::move(fixture), [src, tgt, make] {
          return MutationRun{ok_full(src) && ok_full(tgt), validate_braided_xmod_iso(make(src), src, tgt)};
        });
      };
      auto ident = [](auto const& b) {
        return XModMorphism<Q>{LinMap<Q>::identity(b.base.m().space), LinMap<Q>::identity(b.base.n().space)};
      };
      auto upper = commutator_braiding(cat("Upper(2)"));
      assoc_iso("HomF1", "identity of the Upper(2) commutator braiding with f1(e22) gaining e12", upper, upper, [ident](auto const& b) {
        auto phi = ident(b);
        return XModMorphism<Q>{with_entry(phi.f1, 2, 1, n(2)), phi.f2};
      });
      assoc_iso("HomF2", "identity of the Upper(2) commutator braiding with f2(e12) gaining e22", upper, upper, [ident](auto const& b) {
        auto phi = ident(b);
        return XModMorphism<Q>{phi.f1, with_entry(phi.f2, 1, 2, n(2))};
      });
      assoc_iso("XAssH1", "identity of the Upper(2) commutator braiding with f2(e12) = 2 e12", upper, upper, [ident](auto const& b) {
        auto phi = ident(b);
        return XModMorphism<Q>{phi.f1, with_entry(phi.f2, 1, 1, n(2))};
      });
      assoc_iso("XAssH2", "identity of the projection crossed module with f2(a2) = a2 - 2 a1", proj_assoc(), proj_assoc(), [ident](auto const& b) {
        auto phi = ident(b);
        return XModMorphism<Q>{phi.f1, with_entry(phi.f2, 1, 0, n(-2))};
      });
      assoc_iso("BXH", "identity from the trivial braiding on Ab(1) to the brace {n,n} = m", trivial_assoc(0), trivial_assoc(1), ident);
      assoc_iso("Iso", "(id, 0) on the trivial braiding of Ab(1)", trivial_assoc(0), trivial_assoc(0), [](auto const& b) {
        return XModMorphism<Q>{LinMap<Q>::identity(b.base.m().space), LinMap<Q>::zero(b.base.n().space, b.base.n().space)};
      });
      auto heis = bracket_braiding(cat("Heis3"));
      add("XLieH1", "identity of the Heis3 bracket braiding with f1(x) gaining y", [heis, ident] {
        auto phi = ident(heis);
        return MutationRun{ok_full(heis), validate_braided_xmod_iso(XModMorphism<Q>{with_entry(phi.f1, 0, 1, n(1)), phi.f2}, heis, heis)};
      });
      add("XLieH2", "identity of the Heis3 bracket braiding with f2(x) = x + 2z", [heis, ident] {
        auto phi = ident(heis);
        auto f2  = with_entry(phi.f2, 0, 2, n(2));
        return MutationRun{ok_full(heis), validate_braided_xmod_iso(XModMorphism<Q>{phi.f1, f2}, heis, heis)};
      });

      // internal categories and functors
      auto upper_bar = cx_functor(upper);
      add("ICat1", "bar category of Upper(2) with one entry of s zeroed", [upper_bar] {
        auto const& c = upper_bar.base;
        CatAlgebra<Q> d(c.c1, c.c0, with_entry(c.s, 3, 0, n(0)), c.t, c.e, c.flavor);
        return MutationRun{ok(c.c1, c.flavor) && ok(c.c0, c.flavor), validate_cat_algebra(d)};
      });
      add("ICat2", "discrete category of Upper(2) with t(e12) = -e12", [] {
        auto c = discrete_category(cat("Upper(2)"), Flavor::assoc);
        CatAlgebra<Q> d(c.c1, c.c0, c.s, with_entry(c.t, 1, 1, n(-1)), c.e, c.flavor);
        return MutationRun{ok(c.c1, c.flavor) && ok(c.c0, c.flavor), validate_cat_algebra(d)};
      });
      add("ICat3", "bar category of Ab(1) acting by zero on nil2 with d = 0 (not a crossed module)", [] {
        auto N  = cat("Ab(1)");
        auto sd = semidirect_assoc(zero_assoc_action(N, nil2()));
        auto c  = detail::bar_category(sd, N, LinMap<Q>::zero(nil2().space, N.space), Flavor::assoc);
        return MutationRun{ok(c.c1, c.flavor) && ok(c.c0, c.flavor), validate_cat_algebra(c)};
      });
      auto functor_id = [](CatBraiding<Q> const& b) {
        return InternalFunctor<Q>{LinMap<Q>::identity(b.base.c1.space), LinMap<Q>::identity(b.base.c0.space)};
      };
      add("IFun1", "identity functor of the Upper(2) bar category with one entry of F1 changed", [upper_bar, functor_id] {
        auto f = functor_id(upper_bar);
        return MutationRun{ok_full(upper_bar), validate_braided_internal_iso(InternalFunctor<Q>{with_entry(f.f1, 5, 1, n(2)), f.f0}, upper_bar, upper_bar)};
      });
      add("IFun2", "identity functor of the Upper(2) bar category with F0(e12) = 2 e12", [upper_bar, functor_id] {
        auto f = functor_id(upper_bar);
        return MutationRun{ok_full(upper_bar), validate_braided_internal_iso(InternalFunctor<Q>{f.f1, with_entry(f.f0, 1, 1, n(2))}, upper_bar, upper_bar)};
      });
      add("BIFun", "identity functor between the bars of the Ab(1) braidings with brace 0 and 1", [functor_id] {
        auto src = cx_functor(trivial_assoc(0));
        auto tgt = cx_functor(trivial_assoc(1));
        return MutationRun{ok_full(src) && ok_full(tgt), validate_braided_internal_iso(functor_id(src), src, tgt)};
      });
      add("Iso", "functor (e s, id) on the bar of the trivial Ab(1) braiding", [] {
        auto b  = cx_functor(trivial_assoc(0));
        auto f1 = composite(b.base.e, b.base.s);
        return MutationRun{ok_full(b), validate_braided_internal_iso(InternalFunctor<Q>{f1, LinMap<Q>::identity(b.base.c0.space)}, b, b)};
      });

      // braided crossed modules
      auto bas = [&](std::string tag, std::string fixture, XBraidingAssoc<Q> b, std::size_t flat, std::size_t k, long delta) {
        add(std::move(tag), std::move(fixture), [b, flat, k, delta] {
          return MutationRun{ok_full(b), validate_braiding_xmod_assoc(with_brace(b, bumped(b.brace, flat, k, delta)))};
        });
      };
      bas("BAs1", "projection crossed module with {a1,a1} = a2", proj_assoc(), 0, 1, 1);
      bas("BAs2", "projection crossed module with {a2,a2} = 2 a1", proj_assoc(), 3, 0, 2);
      bas("BAs3", "projection crossed module with {a2,a1} = a1", proj_assoc(), 2, 0, 1);
      bas("BAs4", "projection crossed module with {a1,a2} = a1", proj_assoc(), 1, 0, 1);
      bas("BAs5", "nil2 over Ab(1) with {x,y} = m", nil2_over_line(), 1, 0, 1);
      bas("BAs6", "nil2 over Ab(1) with {y,x} = m", nil2_over_line(), 2, 0, 1);
      auto blie = [&](std::string tag, std::string fixture, XBraidingLie<Q> b, std::size_t flat, std::size_t k, long delta) {
        add(std::move(tag), std::move(fixture), [b, flat, k, delta] {
          return MutationRun{ok_full(b), validate_braiding_xmod_lie(with_brace(b, bumped(b.brace, flat, k, delta)))};
        });
      };
      blie("BLie1", "projection crossed module with {a1,a1} = a2", proj_lie(), 0, 1, 1);
      blie("BLie2", "projection crossed module with {a2,a2} = a1", proj_lie(), 3, 0, 1);
      blie("BLie3", "projection crossed module with {a2,a1} = a1", proj_lie(), 2, 0, 1);
      blie("BLie4", "projection crossed module with {a1,a2} = a1", proj_lie(), 1, 0, 1);
      add("BLie5", "Heis3 + w over span(c,k) with w . c = k", [] {
        auto b = heis_kernel_braiding();
        return MutationRun{ok_full(b.base), validate_braiding_xmod_lie(b)};
      });
      add("BLie6", "Heis3 + w over span(c,k) with w . c = k", [] {
        auto b = heis_kernel_braiding();
        return MutationRun{ok_full(b.base), validate_braiding_xmod_lie(b)};
      });

      // braided internal categories
      auto ast = [&](std::string tag, std::string fixture, CatBraiding<Q> b, std::vector<std::tuple<std::size_t, std::size_t, long>> edits) {
        add(std::move(tag), std::move(fixture), [b, edits] {
          auto tau = b.tau;
          for (auto [flat, k, delta] : edits) {
            tau = bumped(tau, flat, k, delta);
          }
          return MutationRun{ok_full(b), validate_braiding_cat_assoc(with_tau(b, tau))};
        });
      };
      auto proj_bar = cx_functor(proj_assoc());
      auto nil_bar  = cx_functor(nil2_over_line());
      ast("AsT1", "bar of the projection crossed module, tau_{a1,a1} moved off s and t", proj_bar, {{0, 1, 1}, {0, 3, -1}});
      ast("AsT2", "bar of the projection crossed module, tau_{a1,a2} gains (a1, 0)", proj_bar, {{1, 0, 1}});
      ast("AsT3", "bar of nil2 over Ab(1), tau_{y,x} gains (m, 0)", nil_bar, {{2, 0, 1}});
      ast("AsT4", "bar of nil2 over Ab(1), tau_{x,y} gains (m, 0)", nil_bar, {{1, 0, 1}});

      using Edit = std::function<BilMap<Q>(BilMap<Q> const&)>;
      auto lie_cat = [&](std::string tag, std::string fixture, CatBraiding<Q> b, Edit edit,
                         std::function<ValidationReport(CatBraiding<Q> const&)> validate, bool need_braided) {
        add(std::move(tag), std::move(fixture), [b, edit, validate, need_braided] {
          bool pre = need_braided ? ok_full(b) : ok_full(b.base);
          return MutationRun{pre, validate(with_tau(b, edit(b.tau)))};
        });
      };
      auto ulualan = [](CatBraiding<Q> const& b) { return validate_braiding_cat_lie_ulualan(b); };
      auto alt     = [](CatBraiding<Q> const& b) { return validate_braiding_cat_lie_alt(b); };
      auto anti    = [](CatBraiding<Q> const& b) { return check_anticoherence(b); };
      auto keep    = [](BilMap<Q> const& t) { return t; };
      auto moved   = [](BilMap<Q> const& t) { return bumped(bumped(t, 0, 1, 1), 0, 3, -1); };
      auto shifted = [](BilMap<Q> const& t) { return bumped(t, 1, 0, 1); };
      auto set     = [](std::size_t flat, std::size_t k, long v) -> Edit {
        return [=](BilMap<Q> const& t) { return with_entry(t, flat, k, n(v)); };
      };
      auto proj_lie_bar = cx_lie(proj_lie());
      auto heis_bar     = bar_lie_unchecked(heis_kernel_braiding());
      lie_cat("LieT1", "Lie bar of the projection crossed module, tau_{a1,a1} moved off s and t", proj_lie_bar, moved, ulualan, true);
      lie_cat("LieT2", "Lie bar of the projection crossed module, tau_{a1,a2} gains (a1, 0)", proj_lie_bar, shifted, alt, true);
      lie_cat("LieB3", "Lie bar of Heis3 + w over span(c,k)", heis_bar, keep, ulualan, false);
      add("LieB4", "F2: Lie bar of Ab(2) on a line with a . m = m, d = 0, tau_{a,b} = (m, 0)", [] {
        auto b = f2_line_bar();
        return MutationRun{ok_f2(b.base), validate_braiding_cat_lie_ulualan(b)};
      });
      lie_cat("LieT3", "Lie bar of Heis3 + w over span(c,k)", heis_bar, keep, alt, false);
      lie_cat("LieT4", "Lie bar of Heis3 + w over span(c,k)", heis_bar, keep, alt, false);
      auto sl2_bar  = cx_lie(bracket_braiding(cat("sl2")));
      auto heis_lie = cx_lie(heis);
      lie_cat("LieAC1", "Lie bar of sl2 with one entry of tau set to 2", sl2_bar, set(2, 1, 2), anti, true);
      lie_cat("LieAC2", "Lie bar of Heis3 with one entry of tau set to 1", heis_lie, set(6, 5, 1), anti, true);
      lie_cat("LieAC3", "Lie bar of Heis3 with one entry of tau set to 1", heis_lie, set(6, 5, 1), anti, true);

      // tensor square
      add("RTLie3", "tensor square of Heis3 with the relations dropped", [] {
        auto m = cat("Heis3");
        return MutationRun{is_lie(m), validate_tensor_square(unquotiented_square(m))};
      });
      add("RTLie4", "tensor square of sl2 with its bracket doubled", [] {
        auto m  = cat("sl2");
        auto ts = tensor_square(m);
        ts.carrier = Algebra<Q>(ts.carrier.space, n(2) * ts.carrier.mult);
        return MutationRun{is_lie(m), validate_tensor_square(ts)};
      });
      add("RTLieA", "tensor square of sl2 with the relations dropped", [] {
        auto m = cat("sl2");
        return MutationRun{is_lie(m), antisymmetry_consequence(unquotiented_square(m))};
      });

      // groups
      add("XGr1", "S3 acting on itself by conjugation, d = sign into the first involution", [] {
        auto x = conjugation_example(group_catalog("S3"));
        auto const& g = x.g;
        auto cube = [&](std::size_t i) { return g.mul(i, g.mul(i, i)); };
        std::size_t flip = 0;
        while (flip == g.identity() || g.mul(flip, flip) != g.identity()) {
          ++flip;
        }
        for (std::size_t i = 0; i < g.order(); ++i) {
          x.boundary[i] = cube(i) == g.identity() ? g.identity() : flip;
        }
        x.brace.reset();
        return group_run(x, false);
      });
      add("XGr2", "S3 over S3 with trivial action and trivial boundary", [] {
        auto x = conjugation_example(group_catalog("S3"));
        for (auto& row : x.action) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            row[i] = i;
          }
        }
        x.boundary.assign(x.g.order(), x.h.identity());
        x.brace.reset();
        return group_run(x, false);
      });
      add("BGr1", "S3 conjugation with {e,e} = g2", [] {
        auto x = conjugation_example(group_catalog("S3"));
        (*x.brace)[0][0] = el(x.g, "g2");
        return group_run(x, true);
      });
      auto v4 = trivial_group_xmod(group_catalog("V4"));
      auto c3 = trivial_group_xmod(group_catalog("C(3)"));
      add("BGr2", "trivial V4 over V4 with {e,e} = g2", [v4] {
        auto x = v4;
        (*x.brace)[el(x.h, "e")][el(x.h, "e")] = el(x.g, "g2");
        return group_run(x, true);
      });
      add("BGr3", "trivial V4 over V4 with {e,g2} = g2", [v4] {
        auto x = v4;
        (*x.brace)[el(x.h, "e")][el(x.h, "g2")] = el(x.g, "g2");
        return group_run(x, true);
      });
      add("BGr4", "trivial V4 over V4 with {g3,e} = g3", [v4] {
        auto x = v4;
        (*x.brace)[el(x.h, "g3")][el(x.h, "e")] = el(x.g, "g3");
        return group_run(x, true);
      });
      add("BGr5", "trivial C(3) over C(3) with {g2,g2} = g1, {g1,g2} = g2", [c3] {
        auto x = c3;
        (*x.brace)[el(x.h, "g2")][el(x.h, "g2")] = el(x.g, "g1");
        (*x.brace)[el(x.h, "g1")][el(x.h, "g2")] = el(x.g, "g2");
        return group_run(x, true);
      });
      add("BGr6", "trivial C(3) over C(3) with {g1,g2} = g2, {g1,g1} = g1", [c3] {
        auto x = c3;
        (*x.brace)[el(x.h, "g1")][el(x.h, "g2")] = el(x.g, "g2");
        (*x.brace)[el(x.h, "g1")][el(x.h, "g1")] = el(x.g, "g1");
        return group_run(x, true);
      });
      return v;
    }();
    return all;
  }

  //! Tags that cannot be the first failure of their report: each is implied
  //! by the tags before it, so a mutation breaking it breaks an earlier tag.
  //! LieT4 is implied in characteristic other than 2 and no counterexample
  //! turned up over F2.
  inline std::vector<std::string> const& implied_tags() {
    static std::vector<std::string> const tags{"BLie6", "LieT4", "LieAC3"};
    return tags;
  }

}  // namespace xbraid::testing

#endif  // XBRAID_TESTS_MUTATIONS_HPP_
