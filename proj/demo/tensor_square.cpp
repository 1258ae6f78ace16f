// Non-abelian tensor squares of a few small Lie algebras.

#include <iostream>

#include <xbraid/natensor.hpp>

using namespace xbraid;

int main() {
  Rationals q;
  for (char const* name : {"Ab(2)", "sl2", "Heis3", "gl(2)"}) {
    auto m  = catalog(name, q);
    auto ts = tensor_square(m);
    std::cout << name << ": dim M = " << m.dim() << ", dim M (x) M = " << ts.carrier.dim() << ", basis";
    for (auto const& l : ts.carrier.space.labels()) {
      std::cout << " " << l;
    }
    auto r = validate_braiding_xmod_lie(tensor_braiding(ts));
    std::cout << "\n  braided crossed module: " << (r.passed() ? "all BLie axioms hold" : "FAILS") << "\n";
  }
}
