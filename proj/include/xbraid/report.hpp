#ifndef XBRAID_REPORT_HPP_
#define XBRAID_REPORT_HPP_

// Validation reports: one entry per axiom tag, with a witness on failure.
// Axioms are checked on basis tuples in lexicographic order and the first
// failing tuple is kept, so reports are deterministic.

#include <algorithm>
#include <iterator>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace xbraid {

  //! The closed set of tags that may appear in a report. Each one is
  //! documented in docs/axiom_tags.md.
  inline constexpr std::string_view known_tags[] = {
      // algebras
      "Assoc", "Alt", "Jacobi", "Leib",
      // actions
      "AAs1", "AAs2", "AAs3", "AAs4", "AAs5", "AAs6", "ALie1", "ALie2",
      // crossed modules
      "XAs1", "XAs2", "XLie1", "XLie2",
      // crossed module morphisms
      "HomF1", "HomF2", "XAssH1", "XAssH2", "XLieH1", "XLieH2", "BXH", "Iso",
      // internal categories and internal functors
      "ICat1", "ICat2", "ICat3", "IFun1", "IFun2", "BIFun",
      // braided crossed modules
      "BAs1", "BAs2", "BAs3", "BAs4", "BAs5", "BAs6",
      "BLie1", "BLie2", "BLie3", "BLie4", "BLie5", "BLie6",
      // braided internal categories
      "AsT1", "AsT2", "AsT3", "AsT4",
      "LieT1", "LieT2", "LieB3", "LieB4", "LieT3", "LieT4",
      "LieAC1", "LieAC2", "LieAC3",
      // tensor square
      "RTLie3", "RTLie4", "RTLieA",
      // groups
      "XGr1", "XGr2", "BGr1", "BGr2", "BGr3", "BGr4", "BGr5", "BGr6"};

  inline bool is_known_tag(std::string_view tag) {
    return std::find(std::begin(known_tags), std::end(known_tags), tag) != std::end(known_tags);
  }

  struct Witness {
    std::vector<std::size_t> basis_tuple;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct Entry {
    std::string            tag;
    bool                   passed = true;
    std::optional<Witness> witness;

    friend bool operator==(Entry const&, Entry const&) = default;
  };

  inline Entry make_entry(std::string tag, std::optional<Witness> witness) {
    if (!is_known_tag(tag)) {
      throw Error(Errc::internal_invariant_violation, "unregistered axiom tag '" + tag + "'");
    }
    bool ok = !witness.has_value();
    return Entry{std::move(tag), ok, std::move(witness)};
  }

  struct ValidationReport {
    std::string        subject;
    std::vector<Entry> entries;

    bool passed() const {
      return std::all_of(entries.begin(), entries.end(), [](Entry const& e) { return e.passed; });
    }

    Entry const* find(std::string_view tag) const {
      for (auto const& e : entries) {
        if (e.tag == tag) {
          return &e;
        }
      }
      return nullptr;
    }

    //! True iff the tag is present and passed.
    bool passed(std::string_view tag) const {
      auto const* e = find(tag);
      return e != nullptr && e->passed;
    }

    Entry const* first_failure() const {
      for (auto const& e : entries) {
        if (!e.passed) {
          return &e;
        }
      }
      return nullptr;
    }

    void add(Entry e) {
      entries.push_back(std::move(e));
    }

    void append(ValidationReport const& other) {
      entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }

    friend bool operator==(ValidationReport const&, ValidationReport const&) = default;
  };

  template <ExactField F>
  std::vector<std::string> render(F const& field, std::vector<Scalar<F>> const& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (auto const& x : v) {
      out.push_back(field.to_string(x));
    }
    return out;
  }

  //! An equation side pair, as produced by axiom checks.
  template <ExactField F>
  using Sides = std::pair<std::vector<Scalar<F>>, std::vector<Scalar<F>>>;

  template <ExactField F>
  using Mismatch = std::optional<Sides<F>>;

  //! nullopt if lhs == rhs, else the pair.
  template <ExactField F>
  Mismatch<F> compare(std::vector<Scalar<F>> lhs, std::vector<Scalar<F>> rhs) {
    if (lhs == rhs) {
      return std::nullopt;
    }
    return Sides<F>{std::move(lhs), std::move(rhs)};
  }

  using RenderedSides = std::pair<std::vector<std::string>, std::vector<std::string>>;

  //! Calls check(tuple) on every tuple in [0, extents[0]) x ... in
  //! lexicographic order and stops at the first mismatch. check returns an
  //! optional pair of rendered sides.
  template <class Check>
  Entry sweep_rendered(std::string tag, std::vector<std::size_t> const& extents, Check&& check) {
    std::vector<std::size_t> tuple(extents.size(), 0);
    bool done = std::any_of(extents.begin(), extents.end(), [](std::size_t n) { return n == 0; });
    while (!done) {
      std::optional<RenderedSides> bad = check(static_cast<std::vector<std::size_t> const&>(tuple));
      if (bad) {
        return make_entry(std::move(tag), Witness{tuple, std::move(bad->first), std::move(bad->second)});
      }
      done = true;
      for (std::size_t k = extents.size(); k > 0; --k) {
        if (++tuple[k - 1] < extents[k - 1]) {
          done = false;
          break;
        }
        tuple[k - 1] = 0;
      }
    }
    return make_entry(std::move(tag), std::nullopt);
  }

  //! sweep_rendered for checks comparing vectors over a field.
  template <ExactField F, class Check>
  Entry sweep(F const& field, std::string tag, std::vector<std::size_t> const& extents, Check&& check) {
    return sweep_rendered(std::move(tag), extents, [&](std::vector<std::size_t> const& tuple) -> std::optional<RenderedSides> {
      Mismatch<F> bad = check(tuple);
      if (!bad) {
        return std::nullopt;
      }
      return RenderedSides{render(field, bad->first), render(field, bad->second)};
    });
  }

}  // namespace xbraid

#endif  // XBRAID_REPORT_HPP_
