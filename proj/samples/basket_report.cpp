// Prints singularity content, degree and the first Hilbert coefficients for
// the two weighted projective planes P(5,7,12) and P(3,112,125). They have
// the same degree but different singularity content, so no sequence of
// mutations connects them.

#include <iostream>

#include "singcontent/singcontent.hpp"

using namespace singcontent;

int main() {
  for (auto weights : {std::array<Integer, 3>{5, 7, 12}, std::array<Integer, 3>{3, 112, 125}}) {
    FanoPolygon p = wps_polygon(weights);
    PolygonSingularityContent sc = singularity_content(p);
    HilbertSeries hs = hilbert_series(p, 8);

    std::cout << "P(" << weights[0] << "," << weights[1] << "," << weights[2] << ")\n"
              << "  content " << to_string(sc) << "\n"
              << "  degree  " << to_string(degree(p)) << "\n"
              << "  h0(-mK) ";
    for (const auto& c : hs.expanded) std::cout << c << ' ';
    std::cout << '\n';
  }
  FanoPolygon a = wps_polygon({5, 7, 12}), b = wps_polygon({3, 112, 125});
  std::cout << "same content: " << (same_content(a, b) ? "yes" : "no") << '\n';
}
