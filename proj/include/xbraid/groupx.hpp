#ifndef XBRAID_GROUPX_HPP_
#define XBRAID_GROUPX_HPP_

// Finite groups as multiplication tables, crossed modules of groups and
// their braidings. Everything is checked exhaustively.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "report.hpp"

namespace xbraid {

  class FiniteGroup {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    //! Checks closure, associativity, a two-sided identity and inverses.
    FiniteGroup(std::vector<std::string> labels, Table table) : labels_(std::move(labels)), table_(std::move(table)) {
      auto n = labels_.size();
      if (n == 0) {
        throw Error(Errc::invalid_input, "a group needs at least one element");
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (labels_[i] == labels_[j]) {
            throw Error(Errc::invalid_input, "duplicate group element '" + labels_[i] + "'");
          }
        }
      }
      if (table_.size() != n) {
        throw Error(Errc::dimension_mismatch, "multiplication table needs one row per element");
      }
      for (auto const& row : table_) {
        if (row.size() != n) {
          throw Error(Errc::dimension_mismatch, "multiplication table row of the wrong length");
        }
        for (auto x : row) {
          if (x >= n) {
            throw Error(Errc::invalid_input, "multiplication table entry outside the group");
          }
        }
      }
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
              throw Error(Errc::invalid_input, "multiplication is not associative at (" + labels_[a] + ", "
                                                   + labels_[b] + ", " + labels_[c] + ")");
            }
          }
        }
      }
      std::optional<std::size_t> unit;
      for (std::size_t e = 0; e < n && !unit; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
          ok = table_[e][a] == a && table_[a][e] == a;
        }
        if (ok) {
          unit = e;
        }
      }
      if (!unit) {
        throw Error(Errc::invalid_input, "multiplication table has no identity");
      }
      identity_ = *unit;
      inverse_.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        auto row = std::find(table_[a].begin(), table_[a].end(), identity_);
        if (row == table_[a].end()) {
          throw Error(Errc::invalid_input, "element '" + labels_[a] + "' has no inverse");
        }
        inverse_[a] = static_cast<std::size_t>(row - table_[a].begin());
        if (table_[inverse_[a]][a] != identity_) {
          throw Error(Errc::invalid_input, "element '" + labels_[a] + "' has no two-sided inverse");
        }
      }
    }

    template <class Mul>
    static FiniteGroup from_function(std::vector<std::string> labels, Mul&& mul) {
      auto  n = labels.size();
      Table t(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a][b] = mul(a, b);
        }
      }
      return FiniteGroup(std::move(labels), std::move(t));
    }

    std::size_t order() const noexcept {
      return labels_.size();
    }
    std::size_t identity() const noexcept {
      return identity_;
    }
    std::size_t mul(std::size_t a, std::size_t b) const {
      return table_[a][b];
    }
    std::size_t inv(std::size_t a) const {
      return inverse_[a];
    }
    //! [a, b] = a b a^-1 b^-1
    std::size_t commutator(std::size_t a, std::size_t b) const {
      return mul(mul(a, b), mul(inv(a), inv(b)));
    }
    //! a b a^-1
    std::size_t conj(std::size_t a, std::size_t b) const {
      return mul(mul(a, b), inv(a));
    }
    bool is_abelian() const {
      for (std::size_t a = 0; a < order(); ++a) {
        for (std::size_t b = 0; b < order(); ++b) {
          if (mul(a, b) != mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    }
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }
    std::string const& label(std::size_t a) const {
      return labels_.at(a);
    }
    std::optional<std::size_t> index_of(std::string const& l) const {
      auto it = std::find(labels_.begin(), labels_.end(), l);
      if (it == labels_.end()) {
        return std::nullopt;
      }
      return static_cast<std::size_t>(it - labels_.begin());
    }
    Table const& table() const noexcept {
      return table_;
    }

    friend bool operator==(FiniteGroup const&, FiniteGroup const&) = default;

   private:
    std::vector<std::string> labels_;
    Table                    table_;
    std::size_t              identity_ = 0;
    std::vector<std::size_t> inverse_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline std::vector<std::string> numbered_elements(std::size_t n) {
      std::vector<std::string> out{"e"};
      for (std::size_t i = 1; i < n; ++i) {
        out.push_back("g" + std::to_string(i));
      }
      return out;
    }

    //! Z_m x|_r Z_k with (a,b)(a',b') = (a + r^b a', b + b'), requires r^k = 1 mod m.
    inline FiniteGroup cyclic_semidirect(std::size_t m, std::size_t k, std::size_t r) {
      std::vector<std::size_t> power(k, 1 % m);
      for (std::size_t b = 1; b < k; ++b) {
        power[b] = (power[b - 1] * r) % m;
      }
      return FiniteGroup::from_function(numbered_elements(m * k), [&](std::size_t x, std::size_t y) {
        std::size_t a = x % m, b = x / m, a2 = y % m, b2 = y / m;
        return (a + power[b] * a2) % m + m * ((b + b2) % k);
      });
    }

    //! Z_{n1} x Z_{n2} x ... with mixed-radix indices.
    inline FiniteGroup abelian_product(std::vector<std::size_t> const& orders) {
      std::size_t n = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
      return FiniteGroup::from_function(numbered_elements(n), [&](std::size_t x, std::size_t y) {
        std::size_t out = 0, scale = 1;
        for (auto o : orders) {
          out += ((x % o + y % o) % o) * scale;
          x /= o;
          y /= o;
          scale *= o;
        }
        return out;
      });
    }

    //! Unit quaternions {+-1, +-i, +-j, +-k}; index = 4 * sign + unit.
    inline FiniteGroup quaternion_group() {
      // unit product table for 1, i, j, k as (sign, unit)
      static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> units = {{
          {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
          {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
          {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
          {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
      }};
      return FiniteGroup::from_function(numbered_elements(8), [](std::size_t x, std::size_t y) {
        auto [s, u] = units[x % 4][y % 4];
        std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(s)) % 2;
        return 4 * sign + static_cast<std::size_t>(u);
      });
    }

    //! Even permutations of {0,1,2,3} in lexicographic order.
    inline FiniteGroup alternating_four() {
      std::vector<std::array<int, 4>> perms;
      std::array<int, 4>              p = {0, 1, 2, 3};
      do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            inversions += p[i] > p[j] ? 1 : 0;
          }
        }
        if (inversions % 2 == 0) {
          perms.push_back(p);
        }
      } while (std::next_permutation(p.begin(), p.end()));
      return FiniteGroup::from_function(numbered_elements(perms.size()), [&](std::size_t x, std::size_t y) {
        std::array<int, 4> q{};
        for (int i = 0; i < 4; ++i) {
          q[i] = perms[x][perms[y][i]];
        }
        return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
      });
    }

  }  // namespace detail

  //! Names: C(n), V4, C2xC4, C2xC2xC2, C3xC3, C2xC6, S3, D4, D5, D6, Q8,
  //! A4, Dic3. Element "e" is the identity; the rest are g1, g2, ...
  inline FiniteGroup group_catalog(std::string const& name) {
    static std::regex const cyclic(R"(C\(([0-9]{1,3})\))");
    std::smatch             m;
    if (std::regex_match(name, m, cyclic)) {
      auto n = std::stoul(m[1].str());
      if (n == 0) {
        throw Error(Errc::unknown_fixture, "C(0) is not a group");
      }
      return detail::abelian_product({n});
    }
    if (name == "V4") return detail::abelian_product({2, 2});
    if (name == "C2xC4") return detail::abelian_product({2, 4});
    if (name == "C2xC2xC2") return detail::abelian_product({2, 2, 2});
    if (name == "C3xC3") return detail::abelian_product({3, 3});
    if (name == "C2xC6") return detail::abelian_product({2, 6});
    if (name == "S3") return detail::cyclic_semidirect(3, 2, 2);
    if (name == "D4") return detail::cyclic_semidirect(4, 2, 3);
    if (name == "D5") return detail::cyclic_semidirect(5, 2, 4);
    if (name == "D6") return detail::cyclic_semidirect(6, 2, 5);
    if (name == "Dic3") return detail::cyclic_semidirect(3, 4, 2);
    if (name == "Q8") return detail::quaternion_group();
    if (name == "A4") return detail::alternating_four();
    throw Error(Errc::unknown_fixture, "no catalog group named '" + name + "'");
  }

  //! One representative of every isomorphism class of order at most 12.
  inline std::vector<std::string> small_group_names() {
    std::vector<std::string> out;
    for (int n = 1; n <= 12; ++n) {
      out.push_back("C(" + std::to_string(n) + ")");
    }
    for (auto const* s : {"V4", "S3", "C2xC4", "C2xC2xC2", "D4", "Q8", "C3xC3", "D5", "C2xC6", "A4", "D6", "Dic3"}) {
      out.emplace_back(s);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossed modules of groups
  ////////////////////////////////////////////////////////////////////////

  struct GroupXMod {
    using Table = std::vector<std::vector<std::size_t>>;

    FiniteGroup                g;
    FiniteGroup                h;
    Table                      action;    // action[h][g] = h . g
    std::vector<std::size_t>   boundary;  // G -> H
    std::optional<Table>       brace;     // brace[h][h'] = {h, h'} in G

    std::size_t act(std::size_t x, std::size_t y) const {
      return action[x][y];
    }
    std::size_t d(std::size_t y) const {
      return boundary[y];
    }
    std::size_t br(std::size_t x, std::size_t y) const {
      return (*brace)[x][y];
    }

    //! Table shapes, action by automorphisms, boundary a homomorphism.
    void check_structure() const {
      auto ng = g.order(), nh = h.order();
      if (action.size() != nh || boundary.size() != ng) {
        throw Error(Errc::dimension_mismatch, "crossed module tables have the wrong size");
      }
      for (auto const& row : action) {
        if (row.size() != ng || std::any_of(row.begin(), row.end(), [&](std::size_t v) { return v >= ng; })) {
          throw Error(Errc::invalid_input, "action table entry outside the group");
        }
      }
      if (std::any_of(boundary.begin(), boundary.end(), [&](std::size_t v) { return v >= nh; })) {
        throw Error(Errc::invalid_input, "boundary entry outside the group");
      }
      if (brace) {
        if (brace->size() != nh) {
          throw Error(Errc::dimension_mismatch, "braiding table has the wrong size");
        }
        for (auto const& row : *brace) {
          if (row.size() != nh || std::any_of(row.begin(), row.end(), [&](std::size_t v) { return v >= ng; })) {
            throw Error(Errc::invalid_input, "braiding table entry outside the group");
          }
        }
      }
      for (std::size_t y = 0; y < ng; ++y) {
        if (act(h.identity(), y) != y) {
          throw Error(Errc::invalid_input, "the identity does not act trivially");
        }
        for (std::size_t y2 = 0; y2 < ng; ++y2) {
          if (d(g.mul(y, y2)) != h.mul(d(y), d(y2))) {
            throw Error(Errc::invalid_input, "boundary is not a homomorphism");
          }
          for (std::size_t x = 0; x < nh; ++x) {
            if (act(x, g.mul(y, y2)) != g.mul(act(x, y), act(x, y2))) {
              throw Error(Errc::invalid_input, "the action is not by automorphisms");
            }
          }
        }
        for (std::size_t x = 0; x < nh; ++x) {
          for (std::size_t x2 = 0; x2 < nh; ++x2) {
            if (act(h.mul(x, x2), y) != act(x, act(x2, y))) {
              throw Error(Errc::invalid_input, "the action is not a group action");
            }
          }
        }
      }
    }

    friend bool operator==(GroupXMod const&, GroupXMod const&) = default;
  };

  //! (G, G, conjugation, id) with the commutator braiding.
  inline GroupXMod conjugation_example(FiniteGroup const& grp) {
    auto n = grp.order();
    GroupXMod::Table conj(n, std::vector<std::size_t>(n));
    GroupXMod::Table comm(n, std::vector<std::size_t>(n));
    std::vector<std::size_t> id(n);
    for (std::size_t a = 0; a < n; ++a) {
      id[a] = a;
      for (std::size_t b = 0; b < n; ++b) {
        conj[a][b] = grp.conj(a, b);
        comm[a][b] = grp.commutator(a, b);
      }
    }
    GroupXMod x{grp, grp, conj, id, comm};
    x.check_structure();
    return x;
  }

  namespace detail {

    inline std::optional<RenderedSides> compare_elements(FiniteGroup const& grp, std::size_t lhs, std::size_t rhs) {
      if (lhs == rhs) {
        return std::nullopt;
      }
      return RenderedSides{{grp.label(lhs)}, {grp.label(rhs)}};
    }

  }  // namespace detail

  inline ValidationReport validate_group_xmod(GroupXMod const& x, std::string subject = {}) {
    auto const& G  = x.g;
    auto const& H  = x.h;
    auto        ng = G.order(), nh = H.order();
    ValidationReport r{std::move(subject), {}};
    // d(h . g) = h d(g) h^-1
    r.add(sweep_rendered("XGr1", {nh, ng}, [&](auto const& t) {
      return detail::compare_elements(H, x.d(x.act(t[0], t[1])), H.conj(t[0], x.d(t[1])));
    }));
    // d(g) . g' = g g' g^-1
    r.add(sweep_rendered("XGr2", {ng, ng}, [&](auto const& t) {
      return detail::compare_elements(G, x.act(x.d(t[0]), t[1]), G.conj(t[0], t[1]));
    }));
    return r;
  }

  inline ValidationReport validate_group_braiding(GroupXMod const& x, std::string subject = {}) {
    if (!x.brace) {
      throw Error(Errc::invalid_input, "crossed module of groups has no braiding");
    }
    auto const& G  = x.g;
    auto const& H  = x.h;
    auto        ng = G.order(), nh = H.order();
    ValidationReport r{std::move(subject), {}};
    // d{h, h'} = [h, h']
    r.add(sweep_rendered("BGr1", {nh, nh}, [&](auto const& t) {
      return detail::compare_elements(H, x.d(x.br(t[0], t[1])), H.commutator(t[0], t[1]));
    }));
    // {d g, d g'} = [g, g']
    r.add(sweep_rendered("BGr2", {ng, ng}, [&](auto const& t) {
      return detail::compare_elements(G, x.br(x.d(t[0]), x.d(t[1])), G.commutator(t[0], t[1]));
    }));
    // {d g, h} = g (h . g^-1); tuple (g, h)
    r.add(sweep_rendered("BGr3", {ng, nh}, [&](auto const& t) {
      return detail::compare_elements(G, x.br(x.d(t[0]), t[1]), G.mul(t[0], x.act(t[1], G.inv(t[0]))));
    }));
    // {h, d g} = (h . g) g^-1; tuple (h, g)
    r.add(sweep_rendered("BGr4", {nh, ng}, [&](auto const& t) {
      return detail::compare_elements(G, x.br(t[0], x.d(t[1])), G.mul(x.act(t[0], t[1]), G.inv(t[1])));
    }));
    // {h, h'h''} = {h, h'} (h' . {h, h''})
    r.add(sweep_rendered("BGr5", {nh, nh, nh}, [&](auto const& t) {
      return detail::compare_elements(G, x.br(t[0], H.mul(t[1], t[2])),
                                      G.mul(x.br(t[0], t[1]), x.act(t[1], x.br(t[0], t[2]))));
    }));
    // {hh', h''} = (h . {h', h''}) {h, h''}
    r.add(sweep_rendered("BGr6", {nh, nh, nh}, [&](auto const& t) {
      return detail::compare_elements(G, x.br(H.mul(t[0], t[1]), t[2]),
                                      G.mul(x.act(t[0], x.br(t[1], t[2])), x.br(t[0], t[2])));
    }));
    return r;
  }

}  // namespace xbraid

#endif  // XBRAID_GROUPX_HPP_
