// A short walk through the library: build a self-dual matrix-product code over
// Z/25, then a self-orthogonal one over the Galois ring GR(9,2).

#include <iostream>

#include "ringcodes/ringcodes.hpp"

using namespace ringcodes;

namespace {

void show(const std::string& title, const MPCSpec& spec) {
  const Ring& r = spec.ring();
  const MPCReport rep = check_conditions(spec);
  const LinearCode mpc = build_mpc(spec);
  std::cout << title << "\n";
  std::cout << "  A = " << format_matrix(spec.matrix()) << ", A*A^t is " << to_string(rep.gram.kind) << "\n";
  for (const auto& c : rep.conclusions) std::cout << "  " << to_string(c.property) << " via " << c.justified_by << "\n";
  std::cout << "  n = " << mpc.length() << ", |C| = " << mpc.size() << ", d = " << min_distance(mpc)
            << ", bound = " << min_distance_lower_bound(spec) << "\n";
  std::cout << "  self-orthogonal: " << (is_self_orthogonal(mpc) ? "yes" : "no") << "\n";
  if (mpc.size() <= 1000) std::cout << "  " << format_code(LinearCode::span(r, mpc.length(), mpc.spanning_set())) << "\n";
}

}  // namespace

int main() {
  const Ring z25 = parse_ring("Z/25");
  const LinearCode c = parse_code("span Z/25 len 2 { (1,7) }");
  std::cout << "C = " << format_code(c) << " is self-dual: " << (is_self_dual(c) ? "yes" : "no") << "\n";
  const CertifiedMatrix a = adiag3_matrix(z25);
  show("[C C]A over Z/25", MPCSpec({c, c}, a.matrix));
  std::cout << "  self-dual by brute force: " << (is_self_dual(build_mpc(MPCSpec({c, c}, a.matrix))) ? "yes" : "no")
            << "\n\n";

  const Ring gr = parse_ring("Z/9[x]/(x^2+x+2)");
  const RingElement u = *find_square_root_of_minus_one(gr);
  std::cout << "GR(9,2): u = " << u.to_string() << " squares to " << (u * u).to_string() << "\n";
  const LinearCode d = LinearCode::span(gr, 2, {{gr.one(), u.value()}});
  const CertifiedMatrix b = adiag1_matrix_b(gr, u);
  show("[D D]B over GR(9,2)", MPCSpec({d, d}, b.matrix));
}
