#ifndef XBRAID_CLI_HPP_
#define XBRAID_CLI_HPP_

// Command line driver. run() is the whole program minus argv handling, so
// tests can call it in-process.
//
// Exit codes: 0 every requested check passed, 1 some axiom failed,
// 2 input or structural error (syntax, references, failed preconditions,
// CharTwo, I/O, usage).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "action.hpp"
#include "algebra.hpp"
#include "braid.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "groupx.hpp"
#include "icat.hpp"
#include "model.hpp"
#include "natensor.hpp"
#include "report.hpp"
#include "xmod.hpp"

namespace xbraid::cli {

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::io_error, "cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw Error(Errc::io_error, "cannot write '" + path + "'");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  template <ExactField F>
  std::vector<ValidationReport> entity_reports(std::string const& name, dsl::Entity<F> const& entity) {
    std::vector<ValidationReport> out;
    auto add = [&](ValidationReport r) { out.push_back(std::move(r)); };
    std::visit(
        [&](auto const& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, dsl::AlgebraEntity<F>>) {
            if (x.flavor) {
              add(validate_algebra(x.algebra, *x.flavor, name));
            }
          } else if constexpr (std::is_same_v<T, AssocAction<F>>) {
            add(validate_assoc_action(x, name));
          } else if constexpr (std::is_same_v<T, LieAction<F>>) {
            add(validate_lie_action(x, name));
          } else if constexpr (std::is_same_v<T, XModAssoc<F>>) {
            add(validate_xmod_assoc(x, name));
          } else if constexpr (std::is_same_v<T, XModLie<F>>) {
            add(validate_xmod_lie(x, name));
          } else if constexpr (std::is_same_v<T, XBraidingAssoc<F>>) {
            add(validate_braiding_xmod_assoc(x, name));
          } else if constexpr (std::is_same_v<T, XBraidingLie<F>>) {
            add(validate_braiding_xmod_lie(x, name));
          } else if constexpr (std::is_same_v<T, CatAlgebra<F>>) {
            add(validate_cat_algebra(x, name));
          } else if constexpr (std::is_same_v<T, CatBraiding<F>>) {
            add(validate_braiding_cat(x, name));
          } else if constexpr (std::is_same_v<T, GroupXMod>) {
            auto r = validate_group_xmod(x, name);
            if (x.brace) {
              r.append(validate_group_braiding(x));
            }
            add(std::move(r));
          }
        },
        entity);
    return out;
  }

  inline std::string join_strings(std::vector<std::string> const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? ", " : "") + v[i];
    }
    return out;
  }

  inline std::string render_text(std::vector<ValidationReport> const& reports) {
    std::ostringstream os;
    std::size_t        passed = 0, failed = 0;
    for (auto const& r : reports) {
      for (auto const& e : r.entries) {
        os << r.subject << " " << e.tag << " ";
        if (e.passed) {
          ++passed;
          os << "pass\n";
          continue;
        }
        ++failed;
        os << "FAIL";
        if (e.witness) {
          std::vector<std::string> idx;
          for (auto i : e.witness->basis_tuple) {
            idx.push_back(std::to_string(i));
          }
          os << " at (" << join_strings(idx) << "): lhs [" << join_strings(e.witness->lhs) << "] rhs ["
             << join_strings(e.witness->rhs) << "]";
        }
        os << "\n";
      }
    }
    os << passed << " passed, " << failed << " failed\n";
    return os.str();
  }

  inline std::string render_json(std::vector<ValidationReport> const& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (auto const& r : reports) {
      for (auto const& e : r.entries) {
        nlohmann::ordered_json j;
        j["subject"]   = r.subject;
        j["axiom_tag"] = e.tag;
        j["status"]    = e.passed ? "pass" : "fail";
        if (e.witness) {
          j["witness"] = {{"basis_tuple", e.witness->basis_tuple}, {"lhs", e.witness->lhs}, {"rhs", e.witness->rhs}};
        }
        arr.push_back(std::move(j));
      }
    }
    return arr.dump(2) + "\n";
  }

  inline int emit_reports(std::vector<ValidationReport> const& reports, std::string const& format, std::ostream& out) {
    out << (format == "json" ? render_json(reports) : render_text(reports));
    for (auto const& r : reports) {
      if (!r.passed()) {
        return 1;
      }
    }
    return 0;
  }

  template <ExactField F>
  dsl::Entity<F> const& subject_entity(dsl::Model<F> const& model, std::string const& name) {
    auto const* e = model.find(name);
    if (e == nullptr) {
      throw Error(Errc::unknown_reference, "no declaration named '" + name + "'");
    }
    return *e;
  }

  template <ExactField F>
  std::vector<ValidationReport> validate_model(dsl::Model<F> const& model, std::optional<std::string> const& subject) {
    std::vector<ValidationReport> out;
    if (subject) {
      return entity_reports(*subject, subject_entity(model, *subject));
    }
    for (auto const& [name, e] : model.entities) {
      auto rs = entity_reports(name, e);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> const& construct_kinds() {
    static std::vector<std::string> const kinds{"liefy",        "semidirect", "cx",       "xc",
                                               "natensor",     "tensor-xmod", "catliefy", "xliefy"};
    return kinds;
  }

  template <ExactField F>
  dsl::Document construct(dsl::Model<F> const& model, std::string const& kind, std::string const& subject,
                          std::string& out_name) {
    auto const&     e = subject_entity(model, subject);
    dsl::Emitter<F> em(model.field);
    auto wrong = [&](char const* need) {
      return Error(Errc::invalid_input, "construct " + kind + " needs " + need + "; '" + subject + "' is not one");
    };
    auto const* alg = std::get_if<dsl::AlgebraEntity<F>>(&e);

    if (kind == "liefy") {
      if (alg == nullptr) throw wrong("an associative algebra");
      out_name = subject + "_lie";
      em.algebra(out_name, liefy(alg->algebra), Flavor::lie);
    } else if (kind == "semidirect") {
      out_name = subject + "_sd";
      if (auto const* a = std::get_if<AssocAction<F>>(&e)) {
        em.algebra(out_name, semidirect_assoc(*a).algebra, Flavor::assoc);
      } else if (auto const* l = std::get_if<LieAction<F>>(&e)) {
        em.algebra(out_name, semidirect_lie(*l).algebra, Flavor::lie);
      } else {
        throw wrong("an action");
      }
    } else if (kind == "natensor") {
      if (alg == nullptr) throw wrong("a Lie algebra");
      out_name = subject + "_T";
      em.algebra(out_name, tensor_square(alg->algebra).carrier, Flavor::lie);
    } else if (kind == "tensor-xmod") {
      if (alg == nullptr) throw wrong("a Lie algebra");
      out_name = subject + "_T";
      em.braiding(out_name, tensor_braiding(tensor_square(alg->algebra)));
    } else if (kind == "cx") {
      out_name = subject + "_cat";
      if (auto const* b = std::get_if<XBraidingAssoc<F>>(&e)) {
        em.braiding(out_name, cx_functor(*b));
      } else if (auto const* l = std::get_if<XBraidingLie<F>>(&e)) {
        em.braiding(out_name, cx_lie(*l));
      } else {
        throw wrong("a braided crossed module");
      }
    } else if (kind == "xc") {
      auto const* b = std::get_if<CatBraiding<F>>(&e);
      if (b == nullptr) throw wrong("a braided categorical algebra");
      out_name = subject + "_xmod";
      if (b->base.flavor == Flavor::assoc) {
        em.braiding(out_name, xc_functor(*b));
      } else {
        em.braiding(out_name, xc_lie(*b));
      }
    } else if (kind == "catliefy") {
      out_name = subject + "_lie";
      if (auto const* b = std::get_if<CatBraiding<F>>(&e)) {
        em.braiding(out_name, cat_braiding_liefy(*b));
      } else if (auto const* c = std::get_if<CatAlgebra<F>>(&e)) {
        em.cat(out_name, cat_liefy(*c));
      } else {
        throw wrong("a categorical algebra or braiding");
      }
    } else if (kind == "xliefy") {
      out_name = subject + "_lie";
      if (auto const* b = std::get_if<XBraidingAssoc<F>>(&e)) {
        em.braiding(out_name, xmod_braiding_liefy(*b));
      } else if (auto const* x = std::get_if<XModAssoc<F>>(&e)) {
        em.xmod(out_name, xmod_liefy(*x));
      } else {
        throw wrong("an associative crossed module or braiding");
      }
    } else {
      throw Error(Errc::usage_error, "unknown construction '" + kind + "'");
    }
    return em.document();
  }

  //! alpha on the braided crossed module and beta on its bar category, or
  //! the other way round when the subject is a braided category.
  template <ExactField F>
  std::vector<ValidationReport> roundtrip(dsl::Model<F> const& model, std::optional<std::string> subject) {
    if (!subject) {
      for (auto const& [name, e] : model.entities) {
        if (std::holds_alternative<XBraidingAssoc<F>>(e) || std::holds_alternative<CatBraiding<F>>(e)) {
          subject = name;
          break;
        }
      }
      if (!subject) {
        throw Error(Errc::invalid_input, "no associative braiding to roundtrip");
      }
    }
    auto const& e = subject_entity(model, *subject);
    auto alpha = [&](XBraidingAssoc<F> const& b) {
      require_valid(b, Errc::invalid_input, "'" + *subject + "'");
      auto bar   = cx_functor(b);
      auto round = xc_functor(bar);
      return validate_braided_xmod_iso(alpha_iso(b, bar, round), b, round, *subject + ".alpha");
    };
    auto beta = [&](CatBraiding<F> const& c) {
      auto round = cx_functor(xc_functor(c));
      return validate_braided_internal_iso(beta_iso(c, round), c, round, *subject + ".beta");
    };
    if (auto const* b = std::get_if<XBraidingAssoc<F>>(&e)) {
      auto ra = alpha(*b);
      return {ra, beta(cx_functor(*b))};
    }
    if (auto const* c = std::get_if<CatBraiding<F>>(&e); c != nullptr && c->base.flavor == Flavor::assoc) {
      require_valid(*c, Errc::invalid_input, "'" + *subject + "'");
      auto rb = beta(*c);
      return {alpha(xc_functor(*c)), rb};
    }
    throw Error(Errc::invalid_input, "roundtrip needs an associative braiding; '" + *subject + "' is not one");
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  inline dsl::FieldDecl parse_field_option(std::string const& s) {
    static std::regex const fp(R"(\s*Fp\s*([0-9]+)\s*)");
    std::smatch             m;
    if (s == "Q") {
      return {};
    }
    if (std::regex_match(s, m, fp)) {
      dsl::FieldDecl f;
      f.prime = std::stoull(m[1].str());
      if (!is_prime(*f.prime)) {
        throw Error(Errc::field_mismatch, m[1].str() + " is not a prime");
      }
      return f;
    }
    throw Error(Errc::usage_error, "--field expects Q or Fp<p>, got '" + s + "'");
  }

  //! Mat(2) -> Mat2, so the name is a valid identifier.
  inline std::string catalog_decl_name(std::string const& name) {
    std::string out;
    for (char c : name) {
      if (c != '(' && c != ')') {
        out += c;
      }
    }
    return out;
  }

  inline dsl::Document catalog_document(std::string const& name, dsl::FieldDecl const& field) {
    auto build = [&](auto const& f) {
      using F = std::decay_t<decltype(f)>;
      dsl::Emitter<F> em(f);
      try {
        em.group(catalog_decl_name(name), group_catalog(name));
      } catch (Error const& e) {
        if (e.code() != Errc::unknown_fixture) {
          throw;
        }
        em.algebra(catalog_decl_name(name), catalog(name, f), catalog_flavor(name));
      }
      return em.document();
    };
    if (field.prime) {
      return build(PrimeField(*field.prime));
    }
    return build(Rationals{});
  }

  ////////////////////////////////////////////////////////////////////////
  // Driver
  ////////////////////////////////////////////////////////////////////////

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks and constructions for braided crossed modules and internal categories", "xbraid"};
    app.require_subcommand(1);

    std::string                file, kind, output, format, field = "Q", catalog_name;
    std::optional<std::string> subject;

    auto* validate = app.add_subcommand("validate", "check every axiom family of the declared objects");
    validate->add_option("file", file, "input document")->required();
    validate->add_option("--subject", subject, "check only this declaration");
    validate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* report = app.add_subcommand("report", "like validate, JSON by default");
    report->add_option("file", file, "input document")->required();
    report->add_option("--subject", subject, "check only this declaration");
    report->add_option("--format", format, "json or text")->check(CLI::IsMember({"text", "json"}));

    auto* cons = app.add_subcommand("construct", "run a construction and print the result as a document");
    cons->add_option("kind", kind, "construction")->required()->check(CLI::IsMember(construct_kinds()));
    cons->add_option("file", file, "input document")->required();
    cons->add_option("--subject", subject, "declaration to construct from")->required();
    cons->add_option("-o,--output", output, "output file (default: standard output)");

    auto* round = app.add_subcommand("roundtrip", "check the comparison isomorphisms alpha and beta");
    round->add_option("file", file, "input document")->required();
    round->add_option("--subject", subject, "associative braiding (default: the first one declared)");
    round->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* print = app.add_subcommand("print", "print the document in canonical form");
    print->add_option("file", file, "input document")->required();

    auto* cat = app.add_subcommand("catalog", "print a built-in algebra or group as a document");
    cat->add_option("name", catalog_name, "fixture name, e.g. Mat(2), sl2, S3")->required();
    cat->add_option("--field", field, "Q or Fp<p>");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (cat->parsed()) {
        out << dsl::print(catalog_document(catalog_name, parse_field_option(field)));
        return 0;
      }
      auto doc = dsl::parse(read_file(file));
      if (print->parsed()) {
        out << dsl::print(doc);
        return 0;
      }
      return dsl::with_model(doc, [&](auto const& model) -> int {
        if (validate->parsed() || report->parsed()) {
          auto fmt = format.empty() ? (report->parsed() ? "json" : "text") : format;
          return emit_reports(validate_model(model, subject), fmt, out);
        }
        if (round->parsed()) {
          return emit_reports(roundtrip(model, subject), format.empty() ? "text" : format, out);
        }
        std::string name;
        auto        text = dsl::print(construct(model, kind, *subject, name));
        if (output.empty()) {
          out << text;
        } else {
          write_file(output, text);
          out << "wrote " << name << " to " << output << "\n";
        }
        return 0;
      });
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: InternalInvariantViolation: " << e.what() << "\n";
      return 2;
    }
  }

}  // namespace xbraid::cli

#endif  // XBRAID_CLI_HPP_
