#ifndef XBRAID_TESTS_COMMON_HPP_
#define XBRAID_TESTS_COMMON_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <xbraid/braid.hpp>
#include <xbraid/cli.hpp>
#include <xbraid/groupx.hpp>
#include <xbraid/natensor.hpp>

namespace xbraid::testing {

  inline Rationals const QQ{};

  template <ExactField F>
  Vec<F> ints(F const& f, std::initializer_list<long long> xs) {
    Vec<F> v;
    for (auto x : xs) {
      v.push_back(f.from_int(x));
    }
    return v;
  }

  inline Vec<Rationals> qv(std::initializer_list<long long> xs) {
    return ints(QQ, xs);
  }

  inline std::string source_path(std::string const& rel) {
    return std::string(XBRAID_SOURCE_DIR) + "/" + rel;
  }

  //! Every .alg under fixtures/, sorted; `errors` excluded unless asked.
  inline std::vector<std::string> fixture_files(bool with_errors = false) {
    std::vector<std::string> out;
    for (auto const& e : std::filesystem::recursive_directory_iterator(source_path("fixtures"))) {
      if (e.path().extension() != ".alg") {
        continue;
      }
      auto rel = std::filesystem::relative(e.path(), source_path("")).generic_string();
      if (!with_errors && rel.rfind("fixtures/errors/", 0) == 0) {
        continue;
      }
      out.push_back(rel);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  template <ExactField F>
  Scalar<F> random_scalar(F const& f, std::mt19937& rng, int lo = -3, int hi = 3) {
    return f.from_int(std::uniform_int_distribution<int>(lo, hi)(rng));
  }

  template <ExactField F>
  Vec<F> random_vec(Space<F> const& s, std::mt19937& rng) {
    Vec<F> v;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      v.push_back(random_scalar(s.field(), rng));
    }
    return v;
  }

  template <ExactField F>
  LinMap<F> random_linmap(Space<F> const& dom, Space<F> const& cod, std::mt19937& rng) {
    return LinMap<F>::from_function(dom, cod, [&](std::size_t) { return random_vec(cod, rng); });
  }

  template <ExactField F>
  LinMap<F> random_invertible(Space<F> const& s, std::mt19937& rng) {
    for (;;) {
      auto p = random_linmap(s, s, rng);
      if (p.is_bijective()) {
        return p;
      }
    }
  }

  //! Inverse by row reduction of [P | I].
  template <ExactField F>
  LinMap<F> inverse(LinMap<F> const& p) {
    auto const& f = p.field();
    auto        n = p.domain().dim();
    auto        rows = p.rows();
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = vec::concat(rows[i], p.domain().basis_vector(i));
    }
    auto e = rref(f, rows, 2 * n);
    return LinMap<F>::from_function(p.codomain(), p.domain(), [&](std::size_t j) {
      Vec<F> col;
      for (std::size_t i = 0; i < n; ++i) {
        col.push_back(e.rows[i][n + j]);
      }
      return col;
    });
  }

  //! The same algebra written in the basis given by the columns of p.
  template <ExactField F>
  Algebra<F> change_basis(Algebra<F> const& a, LinMap<F> const& p) {
    auto q = inverse(p);
    auto m = BilMap<F>::from_function(a.space, a.space, a.space, [&](std::size_t i, std::size_t j) {
      return q(a(p.column(i), p.column(j)));
    });
    return Algebra<F>(a.space, m);
  }

  struct ProcessResult {
    int         status;
    std::string out;
  };

  //! Runs a shell command and captures its standard output.
  inline ProcessResult run_process(std::string const& cmd) {
    ProcessResult r{-1, {}};
    FILE*         pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), n);
    }
    int st   = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  struct CliResult {
    int         code;
    std::string out;
    std::string err;
  };

  inline CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  template <ExactField F>
  dsl::Model<F> load(std::string const& rel, F const& field) {
    return dsl::elaborate(dsl::parse(cli::read_file(source_path(rel))), field);
  }

  template <class T, ExactField F>
  T const& entity(dsl::Model<F> const& m, std::string const& name) {
    auto const* e = m.find(name);
    if (e == nullptr) {
      throw Error(Errc::unknown_reference, name);
    }
    return std::get<T>(*e);
  }

}  // namespace xbraid::testing

#endif  // XBRAID_TESTS_COMMON_HPP_
