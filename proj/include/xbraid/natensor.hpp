#ifndef XBRAID_NATENSOR_HPP_
#define XBRAID_NATENSOR_HPP_

// The non-abelian tensor square of a Lie algebra acting on itself by the
// adjoint action, built as a quotient of the plain tensor square. The
// bracket [u (x) v, u' (x) v'] = [u,v] (x) [u',v'] sends pure tensors to
// pure tensors, so the quotient space already carries the whole algebra.

#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "algebra.hpp"
#include "braid.hpp"
#include "error.hpp"
#include "linspace.hpp"
#include "report.hpp"
#include "xmod.hpp"

namespace xbraid {

  template <ExactField F>
  struct TensorSquare {
    Algebra<F>  base;       // M
    Space<F>    plain;      // M (x)_K M, basis b_i (x) b_j at index i * dim + j
    Subspace<F> relations;  // inside plain
    Quotient<F> quotient;   // plain -> T
    Algebra<F>  carrier;    // T
    BilMap<F>   pure;       // (m, m') |-> class of m (x) m'
  };

  namespace detail {

    template <ExactField F>
    Space<F> plain_tensor_space(Space<F> const& m) {
      std::vector<std::string> labels;
      for (auto const& a : m.labels()) {
        for (auto const& b : m.labels()) {
          labels.push_back(a + "." + b);
        }
      }
      return Space<F>(m.field(), std::move(labels));
    }

    template <ExactField F>
    Vec<F> tensor(Algebra<F> const& m, Vec<F> const& u, Vec<F> const& v) {
      return vec::tensor(u, v, m.field().zero());
    }

    //! The linear map u (x) v |-> [u, v] on the plain tensor space.
    template <ExactField F>
    LinMap<F> contraction(Algebra<F> const& m, Space<F> const& plain) {
      auto n = m.dim();
      return LinMap<F>::from_function(plain, m.space, [&](std::size_t k) { return m.basis_product(k / n, k % n); });
    }

    //! [a,b] (x) c - a (x) [b,c] + b (x) [a,c]
    template <ExactField F>
    Vec<F> relation_one(Algebra<F> const& m, std::size_t a, std::size_t b, std::size_t c) {
      auto ba = m.basis(a), bb = m.basis(b), bc = m.basis(c);
      auto v  = tensor(m, m.basis_product(a, b), bc);
      v       = vec::sub(v, tensor(m, ba, m.basis_product(b, c)));
      return vec::add(v, tensor(m, bb, m.basis_product(a, c)));
    }

    //! a (x) [b,c] - [c,a] (x) b + [b,a] (x) c
    template <ExactField F>
    Vec<F> relation_two(Algebra<F> const& m, std::size_t a, std::size_t b, std::size_t c) {
      auto ba = m.basis(a), bb = m.basis(b), bc = m.basis(c);
      auto v  = tensor(m, ba, m.basis_product(b, c));
      v       = vec::sub(v, tensor(m, m.basis_product(c, a), bb));
      return vec::add(v, tensor(m, m.basis_product(b, a), bc));
    }

    //! m . (u (x) v) = [m,u] (x) v + u (x) [m,v] on the plain tensor space.
    template <ExactField F>
    BilMap<F> plain_action(Algebra<F> const& m, Space<F> const& plain) {
      auto n = m.dim();
      return BilMap<F>::from_function(m.space, plain, plain, [&](std::size_t i, std::size_t k) {
        auto u = m.basis(k / n), v = m.basis(k % n);
        return vec::add(tensor(m, m.basis_product(i, k / n), v), tensor(m, u, m.basis_product(i, k % n)));
      });
    }

  }  // namespace detail

  template <ExactField F>
  TensorSquare<F> tensor_square(Algebra<F> const& m) {
    if (!is_lie(m)) {
      throw Error(Errc::not_lie, "tensor square needs a Lie algebra");
    }
    auto n     = m.dim();
    auto plain = detail::plain_tensor_space(m.space);
    std::vector<Vec<F>> gens;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          gens.push_back(detail::relation_one(m, a, b, c));
          gens.push_back(detail::relation_two(m, a, b, c));
        }
      }
    }
    auto rel  = Subspace<F>::span(plain, std::move(gens));
    auto q    = quotient(plain, rel);
    auto con  = detail::contraction(m, plain);
    auto lift = [&](std::size_t j) { return q.section.column(j); };

    // The bracket only sees [u,v] of each factor, so it is well defined as
    // soon as every relation brackets into the relations.
    auto plain_bracket = [&](Vec<F> const& x, Vec<F> const& y) { return detail::tensor(m, con(x), con(y)); };
    for (auto const& r : rel.basis()) {
      for (std::size_t k = 0; k < plain.dim(); ++k) {
        auto y = plain.basis_vector(k);
        if (!rel.contains(plain_bracket(r, y)) || !rel.contains(plain_bracket(y, r))) {
          throw Error(Errc::bracket_not_well_defined, "a relation brackets outside the relation subspace");
        }
      }
    }
    auto bracket = BilMap<F>::from_function(q.space, q.space, q.space, [&](std::size_t i, std::size_t j) {
      return q.projection(plain_bracket(lift(i), lift(j)));
    });
    Algebra<F> carrier(q.space, bracket);
    if (!is_lie(carrier)) {
      throw Error(Errc::not_lie, "the induced bracket on the tensor square is not a Lie bracket");
    }
    auto pure = BilMap<F>::from_function(m.space, m.space, q.space, [&](std::size_t i, std::size_t j) {
      return q.projection.column(i * n + j);
    });
    return TensorSquare<F>{m, plain, rel, q, carrier, pure};
  }

  //! (T, M, m . (u (x) v) = [m,u] (x) v + u (x) [m,v], u (x) v |-> [u,v])
  template <ExactField F>
  XModLie<F> tensor_xmod(TensorSquare<F> const& ts) {
    auto const& m   = ts.base;
    auto const& q   = ts.quotient;
    auto        con = detail::contraction(m, ts.plain);
    auto        act = detail::plain_action(m, ts.plain);
    for (auto const& r : ts.relations.basis()) {
      if (!vec::is_zero_vec(con(r))) {
        throw Error(Errc::ill_defined_on_quotient, "the boundary does not vanish on a relation");
      }
      for (std::size_t i = 0; i < m.dim(); ++i) {
        if (!ts.relations.contains(act(m.basis(i), r))) {
          throw Error(Errc::ill_defined_on_quotient, "the action does not preserve the relations");
        }
      }
    }
    auto dot = BilMap<F>::from_function(m.space, q.space, q.space, [&](std::size_t i, std::size_t j) {
      return q.projection(act(m.basis(i), q.section.column(j)));
    });
    auto d   = composite(con, q.section);
    return XModLie<F>(LieAction<F>(m, ts.carrier, dot), d);
  }

  //! {m, m'} = m (x) m'
  template <ExactField F>
  XBraidingLie<F> tensor_braiding(TensorSquare<F> const& ts) {
    return XBraidingLie<F>(tensor_xmod(ts), ts.pure);
  }

  //! Both relation families vanish in T (RTLie3) and the bracket of T is
  //! [m1 (x) m2, m3 (x) m4] = [m1,m2] (x) [m3,m4] (RTLie4).
  template <ExactField F>
  ValidationReport validate_tensor_square(TensorSquare<F> const& ts, std::string subject = {}) {
    auto const& m = ts.base;
    auto        n = m.dim();
    auto const& T = ts.carrier;
    ValidationReport r{std::move(subject), {}};
    r.add(sweep(m.field(), "RTLie3", {n, n, n}, [&](auto const& t) -> Mismatch<F> {
      auto zero = T.space.zero();
      if (auto bad = compare<F>(ts.quotient.projection(detail::relation_one(m, t[0], t[1], t[2])), zero)) {
        return bad;
      }
      return compare<F>(ts.quotient.projection(detail::relation_two(m, t[0], t[1], t[2])), zero);
    }));
    r.add(sweep(m.field(), "RTLie4", {n, n, n, n}, [&](auto const& t) {
      return compare<F>(T(ts.pure.image(t[0], t[1]), ts.pure.image(t[2], t[3])),
                        ts.pure(m.basis_product(t[0], t[1]), m.basis_product(t[2], t[3])));
    }));
    return r;
  }

  //! m1 (x) [m2,m3] + [m2,m3] (x) m1 = 0 in T; tuple (m1, m2, m3).
  template <ExactField F>
  ValidationReport antisymmetry_consequence(TensorSquare<F> const& ts, std::string subject = {}) {
    auto const& m = ts.base;
    auto        n = m.dim();
    ValidationReport r{std::move(subject), {}};
    r.add(sweep(m.field(), "RTLieA", {n, n, n}, [&](auto const& t) {
      auto a = m.basis(t[0]);
      auto bc = m.basis_product(t[1], t[2]);
      return compare<F>(vec::add(ts.pure(a, bc), ts.pure(bc, a)), ts.carrier.space.zero());
    }));
    return r;
  }

}  // namespace xbraid

#endif  // XBRAID_NATENSOR_HPP_
