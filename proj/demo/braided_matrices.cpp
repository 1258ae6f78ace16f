// 2x2 matrices as a crossed module over themselves, braided by the
// commutator, pushed through the bar construction and back.

#include <iostream>

#include <xbraid/braid.hpp>

using namespace xbraid;

namespace {

  void show(ValidationReport const& r) {
    for (auto const& e : r.entries) {
      std::cout << "  " << r.subject << " " << e.tag << (e.passed ? " pass" : " FAIL") << "\n";
    }
  }

}  // namespace

int main() {
  Rationals q;
  auto      mat2 = catalog("Mat(2)", q);
  auto      b    = commutator_braiding(mat2);
  show(validate_braiding_xmod_assoc(b, "Mat2"));

  auto bar = cx_functor(b);
  std::cout << "bar category: dim C1 = " << bar.base.c1.dim() << ", dim C0 = " << bar.base.c0.dim() << "\n";
  show(validate_cat_algebra(bar.base, "bar"));
  show(validate_braiding_cat(bar, "bar"));

  auto round = xc_functor(bar);
  show(validate_braided_xmod_iso(alpha_iso(b, bar, round), b, round, "alpha"));

  // The Lie side: transport the braiding and check both Lie axiom systems.
  auto lie = cat_braiding_liefy(bar);
  show(validate_braiding_cat(lie, "bar.lie"));
  show(check_anticoherence(lie, "bar.lie"));
}
