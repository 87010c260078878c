#pragma once

#include <memory>
#include <string>

#include "arq/quiver_io.hpp"
#include "arq/quiver_rep.hpp"
#include "arq/translation_quiver.hpp"

namespace fixtures {

#ifdef ARQ_QUIVER_DIR
inline arq::QuiverPtr quiver(const std::string& name) {
  auto f = arq::load_quiver_file(std::string(ARQ_QUIVER_DIR) + "/" + name + ".quiver");
  return std::make_shared<const arq::Quiver>(arq::Quiver::from_translation_quiver(f.quiver));
}
#endif

// A_2 AR-quiver S2 -> P -> S1 with ids 0, 1, 2.
inline arq::TranslationQuiver a2_ar() {
  return arq::parse_quiver_string(
             "v 0 P\nv 1 P I\nv 2 I\n"
             "a 0 0 1\na 1 1 2\n"
             "t 2 0\n"
             "s 1 0\n")
      .quiver;
}

// AR-quiver of the linear A_3 quiver 1 -> 2 -> 3:
// 0=P3, 1=P2, 2=P1, 3=S2, 4=I2, 5=S1.
inline arq::TranslationQuiver a3_ar() {
  return arq::parse_quiver_string(
             "v 0 P\nv 1 P\nv 2 P I\nv 3\nv 4 I\nv 5 I\n"
             "a 0 0 1\na 1 1 2\na 2 1 3\na 3 2 4\na 4 3 4\na 5 4 5\n"
             "t 3 0\nt 4 1\nt 5 3\n"
             "s 2 0\ns 3 1\ns 4 2\ns 5 4\n")
      .quiver;
}

// Start of the Kronecker preprojective component: P2 => P1 => tau^-1 P2.
inline arq::TranslationQuiver kronecker_start() {
  return arq::parse_quiver_string(
             "v 0 P\nv 1 P I\nv 2 I\n"
             "a 0 0 1\na 1 0 1\na 2 1 2\na 3 1 2\n"
             "t 2 0\n"
             "s 2 0\ns 3 1\n")
      .quiver;
}

// A 3 x 3 piece of Z A_3: columns k = 0,1,2, rows 0,1,2, vertex 3k + r.
// Arrows (k,0)->(k,1), (k,1)->(k,2), (k,1)->(k+1,0), (k,2)->(k+1,1).
inline arq::TranslationQuiver za3_piece() {
  arq::TranslationQuiver q;
  for (int k = 0; k < 3; ++k)
    for (int r = 0; r < 3; ++r) q.add_vertex(3 * k + r, k == 0, k == 2);
  arq::ArrowId a = 0;
  for (int k = 0; k < 3; ++k) {
    q.add_arrow(a++, 3 * k, 3 * k + 1);
    q.add_arrow(a++, 3 * k + 1, 3 * k + 2);
    if (k < 2) {
      q.add_arrow(a++, 3 * k + 1, 3 * (k + 1));
      q.add_arrow(a++, 3 * k + 2, 3 * (k + 1) + 1);
    }
  }
  for (int k = 1; k < 3; ++k)
    for (int r = 0; r < 3; ++r) q.set_tau(3 * k + r, 3 * (k - 1) + r);
  for (const auto& b : q.arrows()) {
    if (q.is_projective(b.target)) continue;
    arq::VertexId tx = *q.tau(b.target);
    auto cands = q.arrows_between(tx, b.source);
    q.set_sigma(b.id, cands.at(0));
  }
  return q;
}

}  // namespace fixtures
