#ifndef XBRAID_ACTION_HPP_
#define XBRAID_ACTION_HPP_

// Actions of one algebra on another and the semidirect products they define.
// The direct sum M (+) N always lists the M-block first.

#include <string>
#include <utility>

#include "algebra.hpp"
#include "error.hpp"
#include "linspace.hpp"
#include "report.hpp"

namespace xbraid {

  //! Two-sided action of N on M: star1 is N x M -> M, star2 is M x N -> M.
  template <ExactField F>
  struct AssocAction {
    Algebra<F> actor;
    Algebra<F> module;
    BilMap<F>  star1;
    BilMap<F>  star2;

    AssocAction(Algebra<F> n, Algebra<F> m, BilMap<F> s1, BilMap<F> s2)
        : actor(std::move(n)), module(std::move(m)), star1(std::move(s1)), star2(std::move(s2)) {
      star1 = star1.with_spaces(actor.space, module.space, module.space);
      star2 = star2.with_spaces(module.space, actor.space, module.space);
    }

    Vec<F> left(Vec<F> const& n, Vec<F> const& m) const {
      return star1(n, m);
    }
    Vec<F> right(Vec<F> const& m, Vec<F> const& n) const {
      return star2(m, n);
    }

    friend bool operator==(AssocAction const&, AssocAction const&) = default;
  };

  //! Left Lie action dot: N x M -> M.
  template <ExactField F>
  struct LieAction {
    Algebra<F> actor;
    Algebra<F> module;
    BilMap<F>  dot;

    LieAction(Algebra<F> n, Algebra<F> m, BilMap<F> d)
        : actor(std::move(n)), module(std::move(m)), dot(std::move(d)) {
      dot = dot.with_spaces(actor.space, module.space, module.space);
    }

    Vec<F> act(Vec<F> const& n, Vec<F> const& m) const {
      return dot(n, m);
    }

    friend bool operator==(LieAction const&, LieAction const&) = default;
  };

  //! An algebra acting on itself by left and right multiplication.
  template <ExactField F>
  AssocAction<F> self_action(Algebra<F> const& a) {
    return AssocAction<F>(a, a, a.mult, a.mult);
  }

  //! A Lie algebra acting on itself by the bracket.
  template <ExactField F>
  LieAction<F> adjoint_action(Algebra<F> const& l) {
    return LieAction<F>(l, l, l.mult);
  }

  template <ExactField F>
  AssocAction<F> zero_assoc_action(Algebra<F> const& n, Algebra<F> const& m) {
    return AssocAction<F>(n, m, BilMap<F>::zero(n.space, m.space, m.space), BilMap<F>::zero(m.space, n.space, m.space));
  }

  template <ExactField F>
  LieAction<F> zero_lie_action(Algebra<F> const& n, Algebra<F> const& m) {
    return LieAction<F>(n, m, BilMap<F>::zero(n.space, m.space, m.space));
  }

  template <ExactField F>
  ValidationReport validate_assoc_action(AssocAction<F> const& a, std::string subject = {}) {
    auto const& N  = a.actor;
    auto const& M  = a.module;
    auto const& fd = M.field();
    auto        dn = N.dim(), dm = M.dim();
    ValidationReport r{std::move(subject), {}};

    // n *1 (m m') = (n *1 m) m'
    r.add(sweep(fd, "AAs1", {dn, dm, dm}, [&](auto const& t) {
      return compare<F>(a.left(N.basis(t[0]), M.basis_product(t[1], t[2])),
                        M(a.left(N.basis(t[0]), M.basis(t[1])), M.basis(t[2])));
    }));
    // n *1 (m *2 n') = (n *1 m) *2 n'
    r.add(sweep(fd, "AAs2", {dn, dm, dn}, [&](auto const& t) {
      return compare<F>(a.left(N.basis(t[0]), a.right(M.basis(t[1]), N.basis(t[2]))),
                        a.right(a.left(N.basis(t[0]), M.basis(t[1])), N.basis(t[2])));
    }));
    // n *1 (n' *1 m) = (n n') *1 m
    r.add(sweep(fd, "AAs3", {dn, dn, dm}, [&](auto const& t) {
      return compare<F>(a.left(N.basis(t[0]), a.left(N.basis(t[1]), M.basis(t[2]))),
                        a.left(N.basis_product(t[0], t[1]), M.basis(t[2])));
    }));
    // m *2 (n n') = (m *2 n) *2 n'
    r.add(sweep(fd, "AAs4", {dm, dn, dn}, [&](auto const& t) {
      return compare<F>(a.right(M.basis(t[0]), N.basis_product(t[1], t[2])),
                        a.right(a.right(M.basis(t[0]), N.basis(t[1])), N.basis(t[2])));
    }));
    // m (n *1 m') = (m *2 n) m'
    r.add(sweep(fd, "AAs5", {dm, dn, dm}, [&](auto const& t) {
      return compare<F>(M(M.basis(t[0]), a.left(N.basis(t[1]), M.basis(t[2]))),
                        M(a.right(M.basis(t[0]), N.basis(t[1])), M.basis(t[2])));
    }));
    // m (m' *2 n) = (m m') *2 n
    r.add(sweep(fd, "AAs6", {dm, dm, dn}, [&](auto const& t) {
      return compare<F>(M(M.basis(t[0]), a.right(M.basis(t[1]), N.basis(t[2]))),
                        a.right(M.basis_product(t[0], t[1]), N.basis(t[2])));
    }));
    return r;
  }

  template <ExactField F>
  ValidationReport validate_lie_action(LieAction<F> const& a, std::string subject = {}) {
    auto const& N  = a.actor;
    auto const& M  = a.module;
    auto const& fd = M.field();
    auto        dn = N.dim(), dm = M.dim();
    ValidationReport r{std::move(subject), {}};

    // [n,n'] . m = n . (n' . m) - n' . (n . m)
    r.add(sweep(fd, "ALie1", {dn, dn, dm}, [&](auto const& t) {
      auto n = N.basis(t[0]), n2 = N.basis(t[1]), m = M.basis(t[2]);
      return compare<F>(a.act(N.basis_product(t[0], t[1]), m),
                        vec::sub(a.act(n, a.act(n2, m)), a.act(n2, a.act(n, m))));
    }));
    // n . [m,m'] = [n . m, m'] + [m, n . m']
    r.add(sweep(fd, "ALie2", {dn, dm, dm}, [&](auto const& t) {
      auto n = N.basis(t[0]), m = M.basis(t[1]), m2 = M.basis(t[2]);
      return compare<F>(a.act(n, M.basis_product(t[1], t[2])),
                        vec::add(M(a.act(n, m), m2), M(m, a.act(n, m2))));
    }));
    return r;
  }

  template <ExactField F>
  void require_valid(AssocAction<F> const& a, Errc code, std::string const& what) {
    require_flavor(a.actor, Flavor::assoc, "acting algebra of " + what);
    require_flavor(a.module, Flavor::assoc, "module algebra of " + what);
    auto r = validate_assoc_action(a);
    if (auto const* bad = r.first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  template <ExactField F>
  void require_valid(LieAction<F> const& a, Errc code, std::string const& what) {
    require_flavor(a.actor, Flavor::lie, "acting algebra of " + what);
    require_flavor(a.module, Flavor::lie, "module algebra of " + what);
    auto r = validate_lie_action(a);
    if (auto const* bad = r.first_failure()) {
      throw Error(code, what + " fails " + bad->tag);
    }
  }

  //! n . m = n *1 m - m *2 n, an action of N^L on M^L.
  template <ExactField F>
  LieAction<F> induced_lie_action(AssocAction<F> const& a) {
    require_valid(a, Errc::invalid_action, "associative action");
    return LieAction<F>(liefy(a.actor), liefy(a.module), a.star1 - a.star2.transpose());
  }

  template <ExactField F>
  struct Semidirect {
    Algebra<F>   algebra;
    DirectSum<F> blocks;  // left block M, right block N
  };

  namespace detail {

    template <ExactField F, class Product>
    Semidirect<F> assemble_semidirect(Algebra<F> const& m, Algebra<F> const& n, Product&& product) {
      auto ds = make_direct_sum(m.space, n.space, "m.", "n.");
      auto mult
          = BilMap<F>::from_function(ds.space, ds.space, ds.space, [&](std::size_t i, std::size_t j) {
              auto x = ds.space.basis_vector(i), y = ds.space.basis_vector(j);
              auto [pm, pn] = product(ds.project_left(x), ds.project_right(x), ds.project_left(y), ds.project_right(y));
              return vec::add(ds.inject_left(pm), ds.inject_right(pn));
            });
      return Semidirect<F>{Algebra<F>(ds.space, mult), ds};
    }

  }  // namespace detail

  //! (m,n)(m',n') = (mm' + n *1 m' + m *2 n', nn')
  template <ExactField F>
  Semidirect<F> semidirect_assoc(AssocAction<F> const& a) {
    require_valid(a, Errc::invalid_action, "associative action");
    auto const& M = a.module;
    auto const& N = a.actor;
    return detail::assemble_semidirect(M, N, [&](Vec<F> const& m, Vec<F> const& n, Vec<F> const& m2, Vec<F> const& n2) {
      auto top = vec::add(vec::add(M(m, m2), a.left(n, m2)), a.right(m, n2));
      return std::pair{top, N(n, n2)};
    });
  }

  //! [(m,n),(m',n')] = ([m,m'] + n.m' - n'.m, [n,n'])
  template <ExactField F>
  Semidirect<F> semidirect_lie(LieAction<F> const& a) {
    require_valid(a, Errc::invalid_action, "Lie action");
    auto const& M = a.module;
    auto const& N = a.actor;
    return detail::assemble_semidirect(M, N, [&](Vec<F> const& m, Vec<F> const& n, Vec<F> const& m2, Vec<F> const& n2) {
      auto top = vec::sub(vec::add(M(m, m2), a.act(n, m2)), a.act(n2, m));
      return std::pair{top, N(n, n2)};
    });
  }

}  // namespace xbraid

#endif  // XBRAID_ACTION_HPP_
