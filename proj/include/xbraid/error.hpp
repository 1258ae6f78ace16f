#ifndef XBRAID_ERROR_HPP_
#define XBRAID_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace xbraid {

  enum class Errc {
    syntax_error,
    unknown_reference,
    field_mismatch,
    dimension_mismatch,
    unknown_fixture,
    not_associative,
    not_lie,
    wrong_flavor,
    invalid_action,
    invalid_xmod,
    invalid_cat_algebra,
    invalid_input,
    not_composable,
    not_in_subspace,
    internal_invariant_violation,
    char_two,
    bracket_not_well_defined,
    ill_defined_on_quotient,
    division_by_zero,
    io_error,
    usage_error,
  };

  constexpr std::string_view errc_name(Errc c) noexcept {
    switch (c) {
      case Errc::syntax_error: return "SyntaxError";
      case Errc::unknown_reference: return "UnknownReference";
      case Errc::field_mismatch: return "FieldMismatch";
      case Errc::dimension_mismatch: return "DimensionMismatch";
      case Errc::unknown_fixture: return "UnknownFixture";
      case Errc::not_associative: return "NotAssociative";
      case Errc::not_lie: return "NotLie";
      case Errc::wrong_flavor: return "WrongFlavor";
      case Errc::invalid_action: return "InvalidAction";
      case Errc::invalid_xmod: return "InvalidXMod";
      case Errc::invalid_cat_algebra: return "InvalidCatAlgebra";
      case Errc::invalid_input: return "InvalidInput";
      case Errc::not_composable: return "NotComposable";
      case Errc::not_in_subspace: return "NotInSubspace";
      case Errc::internal_invariant_violation: return "InternalInvariantViolation";
      case Errc::char_two: return "CharTwo";
      case Errc::bracket_not_well_defined: return "BracketNotWellDefined";
      case Errc::ill_defined_on_quotient: return "IllDefinedOnQuotient";
      case Errc::division_by_zero: return "DivisionByZero";
      case Errc::io_error: return "IOError";
      case Errc::usage_error: return "UsageError";
    }
    return "Error";
  }

  //! Every failure raised by the library carries one of the codes above; the
  //! message always starts with the code name so CLI output is greppable.
  class Error : public std::runtime_error {
   public:
    Error(Errc code, std::string const& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code) {}

    Errc code() const noexcept {
      return code_;
    }

   private:
    Errc code_;
  };

}  // namespace xbraid

#endif  // XBRAID_ERROR_HPP_
