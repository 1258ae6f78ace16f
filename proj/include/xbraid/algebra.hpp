#ifndef XBRAID_ALGEBRA_HPP_
#define XBRAID_ALGEBRA_HPP_

// Algebras given by structure constants. Nothing about the product is
// assumed: associativity, the Lie axioms and the Leibniz identity are
// predicates that get checked on basis tuples.

#include <cstddef>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "linspace.hpp"
#include "report.hpp"

namespace xbraid {

  enum class Flavor { assoc, lie, leibniz };

  inline std::string flavor_name(Flavor f) {
    switch (f) {
      case Flavor::assoc: return "assoc";
      case Flavor::lie: return "lie";
      case Flavor::leibniz: return "leibniz";
    }
    return "assoc";
  }

  template <ExactField F>
  struct Algebra {
    Space<F>  space;
    BilMap<F> mult;

    Algebra(Space<F> s, BilMap<F> m) : space(std::move(s)), mult(std::move(m)) {
      require_compatible(space, mult.left(), "left factor of the product");
      require_compatible(space, mult.right(), "right factor of the product");
      require_compatible(space, mult.codomain(), "codomain of the product");
      mult = mult.with_spaces(space, space, space);
    }

    static Algebra abelian(Space<F> s) {
      auto m = BilMap<F>::zero(s, s, s);
      return Algebra(std::move(s), std::move(m));
    }

    F const& field() const noexcept {
      return space.field();
    }
    std::size_t dim() const noexcept {
      return space.dim();
    }
    Vec<F> operator()(Vec<F> const& x, Vec<F> const& y) const {
      return mult(x, y);
    }
    Vec<F> const& basis_product(std::size_t i, std::size_t j) const {
      return mult.image(i, j);
    }
    Vec<F> basis(std::size_t i) const {
      return space.basis_vector(i);
    }

    //! Same structure constants; basis labels are ignored.
    friend bool operator==(Algebra const& a, Algebra const& b) {
      return a.mult == b.mult;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Axiom checks
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  Entry check_associative(Algebra<F> const& a) {
    auto n = a.dim();
    return sweep(a.field(), "Assoc", {n, n, n}, [&](auto const& t) {
      return compare<F>(a(a.basis_product(t[0], t[1]), a.basis(t[2])),
                        a(a.basis(t[0]), a.basis_product(t[1], t[2])));
    });
  }

  //! [x,x] = 0 for every vector x. By polarization this is [b_i,b_i] = 0 and
  //! [b_i,b_j] = -[b_j,b_i] for i < j; tuples with j < i are skipped.
  template <ExactField F>
  Entry check_alternating(Algebra<F> const& a) {
    auto n = a.dim();
    return sweep(a.field(), "Alt", {n, n}, [&](auto const& t) -> Mismatch<F> {
      if (t[1] < t[0]) {
        return std::nullopt;
      }
      if (t[0] == t[1]) {
        return compare<F>(a.basis_product(t[0], t[0]), a.space.zero());
      }
      return compare<F>(a.basis_product(t[0], t[1]), vec::neg(a.basis_product(t[1], t[0])));
    });
  }

  template <ExactField F>
  Entry check_jacobi(Algebra<F> const& a) {
    auto n = a.dim();
    return sweep(a.field(), "Jacobi", {n, n, n}, [&](auto const& t) {
      auto x = a.basis(t[0]), y = a.basis(t[1]), z = a.basis(t[2]);
      auto s = a(x, a.basis_product(t[1], t[2]));
      s      = vec::add(s, a(y, a.basis_product(t[2], t[0])));
      s      = vec::add(s, a(z, a.basis_product(t[0], t[1])));
      return compare<F>(s, a.space.zero());
    });
  }

  //! [x,[y,z]] = [[x,y],z] - [[x,z],y]
  template <ExactField F>
  Entry check_leibniz(Algebra<F> const& a) {
    auto n = a.dim();
    return sweep(a.field(), "Leib", {n, n, n}, [&](auto const& t) {
      auto x = a.basis(t[0]), y = a.basis(t[1]), z = a.basis(t[2]);
      return compare<F>(a(x, a.basis_product(t[1], t[2])),
                        vec::sub(a(a.basis_product(t[0], t[1]), z), a(a.basis_product(t[0], t[2]), y)));
    });
  }

  template <ExactField F>
  ValidationReport validate_algebra(Algebra<F> const& a, Flavor flavor, std::string subject = {}) {
    ValidationReport r{std::move(subject), {}};
    switch (flavor) {
      case Flavor::assoc: r.add(check_associative(a)); break;
      case Flavor::lie:
        r.add(check_alternating(a));
        r.add(check_jacobi(a));
        break;
      case Flavor::leibniz: r.add(check_leibniz(a)); break;
    }
    return r;
  }

  template <ExactField F>
  bool is_associative(Algebra<F> const& a) {
    return check_associative(a).passed;
  }
  template <ExactField F>
  bool is_lie(Algebra<F> const& a) {
    return check_alternating(a).passed && check_jacobi(a).passed;
  }
  template <ExactField F>
  bool is_leibniz(Algebra<F> const& a) {
    return check_leibniz(a).passed;
  }

  template <ExactField F>
  bool has_flavor(Algebra<F> const& a, Flavor flavor) {
    switch (flavor) {
      case Flavor::assoc: return is_associative(a);
      case Flavor::lie: return is_lie(a);
      case Flavor::leibniz: return is_leibniz(a);
    }
    return false;
  }

  //! Throws NotAssociative / NotLie / WrongFlavor if the predicate fails.
  template <ExactField F>
  void require_flavor(Algebra<F> const& a, Flavor flavor, std::string const& what) {
    if (has_flavor(a, flavor)) {
      return;
    }
    switch (flavor) {
      case Flavor::assoc: throw Error(Errc::not_associative, what + " is not associative");
      case Flavor::lie: throw Error(Errc::not_lie, what + " is not a Lie algebra");
      case Flavor::leibniz: throw Error(Errc::wrong_flavor, what + " is not a Leibniz algebra");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps between algebras
  ////////////////////////////////////////////////////////////////////////

  //! f(b_i b_j) = f(b_i) f(b_j) on basis pairs.
  template <ExactField F>
  Entry check_homomorphism(LinMap<F> const& f, Algebra<F> const& a, Algebra<F> const& b, std::string tag) {
    require_compatible(f.domain(), a.space, "domain of the homomorphism");
    require_compatible(f.codomain(), b.space, "codomain of the homomorphism");
    auto n = a.dim();
    return sweep(a.field(), std::move(tag), {n, n}, [&](auto const& t) {
      return compare<F>(f(a.basis_product(t[0], t[1])), b(f.column(t[0]), f.column(t[1])));
    });
  }

  template <ExactField F>
  bool is_homomorphism(LinMap<F> const& f, Algebra<F> const& a, Algebra<F> const& b) {
    return check_homomorphism(f, a, b, "HomF1").passed;
  }

  template <ExactField F>
  bool is_derivation(LinMap<F> const& d, Algebra<F> const& a) {
    require_compatible(d.domain(), a.space, "domain of the derivation");
    require_compatible(d.codomain(), a.space, "codomain of the derivation");
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        auto lhs = d(a.basis_product(i, j));
        auto rhs = vec::add(a(d.column(i), a.basis(j)), a(a.basis(i), d.column(j)));
        if (lhs != rhs) {
          return false;
        }
      }
    }
    return true;
  }

  //! y |-> y x
  template <ExactField F>
  LinMap<F> right_multiplication(Algebra<F> const& a, Vec<F> const& x) {
    return LinMap<F>::from_function(a.space, a.space, [&](std::size_t j) { return a(a.basis(j), x); });
  }

  //! y |-> x y
  template <ExactField F>
  LinMap<F> left_multiplication(Algebra<F> const& a, Vec<F> const& x) {
    return LinMap<F>::from_function(a.space, a.space, [&](std::size_t j) { return a(x, a.basis(j)); });
  }

  //! ad(x) = y |-> [x, y]
  template <ExactField F>
  LinMap<F> adjoint(Algebra<F> const& a, Vec<F> const& x) {
    return left_multiplication(a, x);
  }

  //! The commutator algebra: same space, [a, b] = ab - ba.
  template <ExactField F>
  Algebra<F> liefy(Algebra<F> const& a) {
    require_flavor(a, Flavor::assoc, "algebra to Lie-fy");
    return Algebra<F>(a.space, a.mult - a.mult.transpose());
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::string unit_label(std::size_t i, std::size_t j, std::size_t n) {
      if (n <= 9) {
        return "e" + std::to_string(i) + std::to_string(j);
      }
      return "e" + std::to_string(i) + "_" + std::to_string(j);
    }

    //! Matrix units e_ij (1-based, row-major) restricted to the predicate.
    template <ExactField F, class Keep>
    Algebra<F> matrix_units(F const& field, std::size_t n, Keep keep) {
      std::vector<std::pair<std::size_t, std::size_t>> units;
      std::vector<std::string>                         labels;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (keep(i, j)) {
            units.emplace_back(i, j);
            labels.push_back(unit_label(i, j, n));
          }
        }
      }
      Space<F> s(field, labels);
      auto     index = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < units.size(); ++k) {
          if (units[k] == std::pair{i, j}) {
            return k;
          }
        }
        throw Error(Errc::internal_invariant_violation, "matrix unit outside the fixture");
      };
      auto m = BilMap<F>::from_function(s, s, s, [&](std::size_t a, std::size_t b) {
        Vec<F> out = s.zero();
        if (units[a].second == units[b].first) {
          out[index(units[a].first, units[b].second)] = field.one();
        }
        return out;
      });
      return Algebra<F>(s, m);
    }

  }  // namespace detail

  template <ExactField F>
  Algebra<F> ab_fixture(F const& field, std::size_t n) {
    return Algebra<F>::abelian(Space<F>::numbered(field, n, "a"));
  }

  template <ExactField F>
  Algebra<F> mat_fixture(F const& field, std::size_t n) {
    return detail::matrix_units(field, n, [](std::size_t, std::size_t) { return true; });
  }

  template <ExactField F>
  Algebra<F> upper_fixture(F const& field, std::size_t n) {
    return detail::matrix_units(field, n, [](std::size_t i, std::size_t j) { return i <= j; });
  }

  //! Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  template <ExactField F>
  Algebra<F> sl2_fixture(F const& field) {
    Space<F> s(field, {"h", "e", "f"});
    auto     c   = [&](long long h, long long e, long long f) {
      return Vec<F>{field.from_int(h), field.from_int(e), field.from_int(f)};
    };
    std::vector<Vec<F>> images = {c(0, 0, 0), c(0, 2, 0),  c(0, 0, -2),
                                  c(0, -2, 0), c(0, 0, 0), c(1, 0, 0),
                                  c(0, 0, 2), c(-1, 0, 0), c(0, 0, 0)};
    return Algebra<F>(s, BilMap<F>(s, s, s, images));
  }

  //! Basis (x, y, z): [x,y] = z, [y,x] = -z, all else 0.
  template <ExactField F>
  Algebra<F> heis3_fixture(F const& field) {
    Space<F> s(field, {"x", "y", "z"});
    auto     m = BilMap<F>::from_function(s, s, s, [&](std::size_t i, std::size_t j) {
      Vec<F> out = s.zero();
      if (i == 0 && j == 1) {
        out[2] = field.one();
      } else if (i == 1 && j == 0) {
        out[2] = -field.one();
      }
      return out;
    });
    return Algebra<F>(s, m);
  }

  //! Fixture names: Ab(n), Mat(n), Upper(n), gl(n), sl2, Heis3.
  template <ExactField F>
  Algebra<F> catalog(std::string const& name, F const& field) {
    static std::regex const sized(R"((Ab|Mat|Upper|gl)\(([0-9]{1,2})\))");
    std::smatch             m;
    if (std::regex_match(name, m, sized)) {
      std::size_t n    = std::stoul(m[2].str());
      auto        kind = m[1].str();
      if (kind == "Ab") {
        return ab_fixture(field, n);
      }
      if (n == 0) {
        throw Error(Errc::unknown_fixture, name + " needs a positive size");
      }
      if (kind == "Mat") {
        return mat_fixture(field, n);
      }
      if (kind == "Upper") {
        return upper_fixture(field, n);
      }
      return liefy(mat_fixture(field, n));
    }
    if (name == "sl2") {
      return sl2_fixture(field);
    }
    if (name == "Heis3") {
      return heis3_fixture(field);
    }
    throw Error(Errc::unknown_fixture, "no catalog algebra named '" + name + "'");
  }

  //! The flavor a catalog fixture is meant to have.
  inline Flavor catalog_flavor(std::string const& name) {
    if (name.rfind("Mat(", 0) == 0 || name.rfind("Upper(", 0) == 0) {
      return Flavor::assoc;
    }
    if (name.rfind("Ab(", 0) == 0) {
      return Flavor::assoc;
    }
    return Flavor::lie;
  }

}  // namespace xbraid

#endif  // XBRAID_ALGEBRA_HPP_
